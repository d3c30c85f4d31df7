//! Push-forward and pull-back along the reduction morphisms
//! `phi: M_{0,(n,m,k-1)} -> M_{0,(n,m,k)}` and the replacement morphism
//! `chi: M_{0,(n-k,m+1,k)} -> M_{0,(n,m,k)}`.
//!
//! The exceptional divisor `F` of a reduction step is the boundary divisor
//! `Delta_{k,0}` of the source: its light side carries `k` points of weight
//! `1/(k-1)` and no heavy point.

use num_traits::Zero;

use crate::classes::{BoundaryKey, DivisorClass, WeightVector};
use crate::error::{Error, Result};
use crate::family::{stratified_evaluate, BlowdownStep, FamilyModel, IntersectionReport};
use crate::rational::{choose2, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismKind {
    /// `M_{0,n+m} -> M_{0,(n,m,k)}`.
    ReductionFromUnweighted,
    /// `M_{0,(n,m,k-1)} -> M_{0,(n,m,k)}`.
    ReductionStep,
    /// `M_{0,(n-k,m+1,k)} -> M_{0,(n,m,k)}`.
    Replacement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MorphismSpec {
    pub kind: MorphismKind,
    pub source: WeightVector,
    pub target: WeightVector,
}

impl MorphismSpec {
    pub fn new(kind: MorphismKind, target: WeightVector) -> Result<Self> {
        let (n, m, k) = (target.n(), target.m(), target.k());
        let source = match kind {
            MorphismKind::ReductionFromUnweighted => {
                WeightVector::new(i64::from(n) + i64::from(m), 0, 1)?
            }
            MorphismKind::ReductionStep => {
                if k < 2 {
                    return Err(Error::InvalidMorphism(format!(
                        "reduction step needs k >= 2, target is {target}"
                    )));
                }
                WeightVector::new(n.into(), m.into(), i64::from(k) - 1)?
            }
            MorphismKind::Replacement => {
                if n < k {
                    return Err(Error::InvalidMorphism(format!(
                        "replacement needs n >= k, target is {target}"
                    )));
                }
                WeightVector::new((n - k).into(), i64::from(m) + 1, k.into())?
            }
        };
        Ok(MorphismSpec {
            kind,
            source,
            target,
        })
    }
}

fn reject_boundary(cls: &DivisorClass) -> Result<()> {
    if cls.has_nonzero_boundary() {
        return Err(Error::UnsupportedCoefficient(
            "boundary divisors Delta_{i,j} have no pull-back rule".to_string(),
        ));
    }
    Ok(())
}

/// `phi_* psi = psi_sigma + psi_tau + 2 delta_s`, `phi_* delta = delta +
/// delta_s`. The source is `M_{0,n+m}`, whose last `m` points become the
/// heavy ones; with `m = 0` this is the familiar `psi -> psi_sigma + 2 delta_s`.
pub fn pushforward_reduction(cls: &DivisorClass, target: WeightVector) -> Result<DivisorClass> {
    let map = MorphismSpec::new(MorphismKind::ReductionFromUnweighted, target)?;
    if target.k() < 2 {
        return Err(Error::InvalidMorphism(format!(
            "push-forward needs a weighted target (k >= 2), got {target}"
        )));
    }
    if cls.ambient() != &map.source {
        return Err(Error::AmbientMismatch(
            cls.ambient().to_string(),
            map.source.to_string(),
        ));
    }
    reject_boundary(cls)?;
    if !cls.delta_s.is_zero() {
        return Err(Error::UnsupportedCoefficient(
            "delta_s is the zero class on the unweighted space".to_string(),
        ));
    }
    let psi = &cls.psi_sigma;
    let mut out = DivisorClass::zero(target);
    out.psi_sigma = psi.clone();
    out.psi_tau = vec![psi.clone(); target.m() as usize];
    out.delta_s = psi * int(2) + &cls.delta;
    out.delta = cls.delta.clone();
    Ok(out)
}

/// Pull-back along `phi: (n,m,k-1) -> (n,m,k)`:
/// `psi_sigma -> psi_sigma - kF`, `psi_tau -> psi_tau`,
/// `delta_s -> delta_s + C(k,2) F`, `delta -> delta - F`.
///
/// The `F` entry is kept even when its coefficient is zero. When
/// `Delta_{k,0}` is not a boundary divisor of the source (`n < k`, or the
/// complement too light) there is no exceptional divisor and `F = 0`.
pub fn pullback_reduction(cls: &DivisorClass) -> Result<DivisorClass> {
    let map = MorphismSpec::new(MorphismKind::ReductionStep, *cls.ambient())?;
    reject_boundary(cls)?;
    let k = map.target.k();
    let mut out = DivisorClass::zero(map.source);
    out.psi_sigma = cls.psi_sigma.clone();
    out.psi_tau = cls.psi_tau.clone();
    out.delta_s = cls.delta_s.clone();
    out.delta = cls.delta.clone();
    if let Some(f) = BoundaryKey::admissible(k, 0, &map.source) {
        let coeff = -&cls.psi_sigma * int(k.into()) + &cls.delta_s * choose2(k) - &cls.delta;
        out.add_boundary(f, &coeff);
    }
    Ok(out)
}

/// Coefficient of `F` in the pull-back along `phi`, or `None` when the
/// source has no exceptional divisor.
pub fn exceptional_coefficient(pulled: &DivisorClass, k: u32) -> Option<Rational> {
    BoundaryKey::admissible(k, 0, pulled.ambient()).map(|f| pulled.boundary_coeff(&f))
}

/// Pull-back along `chi: (n-k,m+1,k) -> (n,m,k)`, section by section:
/// `psi_sigma -> psi_sigma + k psi_{tau_{m+1}}`, `psi_{tau_j} -> psi_{tau_j}`
/// for `j <= m`, `delta_s -> delta_s - C(k,2) psi_{tau_{m+1}}`,
/// `delta -> delta`.
pub fn pullback_replacement(cls: &DivisorClass) -> Result<DivisorClass> {
    let map = MorphismSpec::new(MorphismKind::Replacement, *cls.ambient())?;
    reject_boundary(cls)?;
    let k = map.target.k();
    let mut out = DivisorClass::zero(map.source);
    out.psi_sigma = cls.psi_sigma.clone();
    out.delta_s = cls.delta_s.clone();
    out.delta = cls.delta.clone();
    out.psi_tau = cls.psi_tau.clone();
    out.psi_tau
        .push(&cls.psi_sigma * int(k.into()) - &cls.delta_s * choose2(k));
    Ok(out)
}

/// Test-curve data behind `phi_* psi = psi + a delta_s` and
/// `phi_* delta = delta + b delta_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushforwardDerivation {
    pub a: Rational,
    pub b: Rational,
    /// The diagonal family on `(n,0,2)`.
    pub weighted: IntersectionReport,
    /// Its stable model on `(n,0,1)`: `n-1` blow-ups at the collisions.
    pub unweighted: IntersectionReport,
}

/// Solves for the push-forward constants using the family where
/// `sigma_1..sigma_{n-1}` are constant sections of `P^1 x P^1` and `sigma_n`
/// is the diagonal. In weight `1/2` the collisions are allowed; resolving
/// them blows up the `n-1` points where `sigma_n` meets the others.
pub fn derive_pushforward_constants(n: u32) -> Result<PushforwardDerivation> {
    let mut e = vec![0i64; n as usize];
    if let Some(last) = e.last_mut() {
        *last = 2;
    }
    let weighted_w = WeightVector::new(n.into(), 0, 2)?;
    let unweighted_w = WeightVector::new(n.into(), 0, 1)?;
    let diagonal = FamilyModel::new_concrete(weighted_w, vec![], e.clone(), vec![]);
    let steps = (1..n).map(|j| BlowdownStep::concrete([j, n], [])).collect();
    let blown_up = FamilyModel::new_concrete(unweighted_w, steps, e, vec![]);
    let weighted = diagonal.intersection_numbers()?;
    let unweighted = blown_up.intersection_numbers()?;
    if weighted.delta_s_b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    // psi.B^s = psi_sigma.B + a delta_s.B and delta.B^s = delta.B + b delta_s.B
    let a = (&unweighted.psi_sigma_b - &weighted.psi_sigma_b) / &weighted.delta_s_b;
    let b = (&unweighted.delta_b - &weighted.delta_b) / &weighted.delta_s_b;
    Ok(PushforwardDerivation {
        a,
        b,
        weighted,
        unweighted,
    })
}

/// Test-curve data behind the four pull-back rules along `phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackDerivation {
    pub psi_sigma_b: Rational,
    pub psi_tau_b: Rational,
    pub delta_s_b: Rational,
    pub delta_b: Rational,
    pub f_b: Rational,
    /// `x` in `phi^* psi_sigma = psi_sigma + x F`.
    pub psi_sigma_rule: Rational,
    pub psi_tau_rule: Rational,
    pub delta_s_rule: Rational,
    pub delta_rule: Rational,
}

/// Derives the pull-back constants from a curve `B` contracted by `phi`.
///
/// `B` lies in the exceptional divisor `F ~ M(k,1,k-1) x M(n-k,m+1,k-1)`: it
/// moves in the first factor (`k` lines in the plane blown up at a point off
/// them, the exceptional curve as the heavy section) and is constant in the
/// second. The tautological degrees come from the stratified evaluation,
/// `delta.B` from the functorial combination `psi_tau - delta`, and
/// `F.B = delta.B` since every node of `B` is of type `F`. Each constant then
/// solves `0 = phi^*D . B = D.B + x F.B`.
pub fn derive_pullback_constant(n: u32, m: u32, k: u32) -> Result<PullbackDerivation> {
    let source = WeightVector::new(n.into(), m.into(), i64::from(k) - 1)?;
    let ki = i64::from(k);
    if n < k {
        return Err(Error::InvalidWeights {
            n: n.into(),
            m: m.into(),
            k: ki,
            reason: "the exceptional divisor needs n >= k".to_string(),
        });
    }
    let moving_w = WeightVector::new(ki, 1, ki - 1)?;
    let fixed_w = WeightVector::new(i64::from(n - k), i64::from(m) + 1, ki - 1)?;
    let moving = FamilyModel::new_concrete(moving_w, vec![], vec![1; k as usize], vec![-1]);
    let fixed = FamilyModel::new_concrete(
        fixed_w,
        vec![],
        vec![0; (n - k) as usize],
        vec![0; m as usize + 1],
    );
    let parts = [(moving_w, moving), (fixed_w, fixed.clone())];

    let basis = |psi_sigma: i64, delta_s: i64, tau_minus_delta: i64| -> Result<Rational> {
        let mut d = DivisorClass::zero(source);
        d.psi_sigma = int(psi_sigma);
        d.delta_s = int(delta_s);
        d.psi_tau = vec![int(tau_minus_delta); m as usize];
        d.delta = int(-tau_minus_delta);
        stratified_evaluate(&d, &parts)
    };
    let psi_sigma_b = basis(1, 0, 0)?;
    let delta_s_b = basis(0, 1, 0)?;
    let tau_minus_delta_b = basis(0, 0, 1)?;
    // The original heavy sections sit on the constant factor; its last heavy
    // section is the attaching point and is not one of them.
    let psi_tau_b: Rational = fixed.psi_tau_sections()?[..m as usize].iter().sum();
    let delta_b = &psi_tau_b - &tau_minus_delta_b;
    let f_b = delta_b.clone();
    if f_b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let solve = |degree: &Rational| -degree / &f_b;
    Ok(PullbackDerivation {
        psi_sigma_rule: solve(&psi_sigma_b),
        psi_tau_rule: solve(&psi_tau_b),
        delta_s_rule: solve(&delta_s_b),
        delta_rule: solve(&delta_b),
        psi_sigma_b,
        psi_tau_b,
        delta_s_b,
        delta_b,
        f_b,
    })
}
