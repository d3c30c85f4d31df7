//! Drop functions, exhaustive lattice minimization and threshold tables.
//!
//! A combination
//! `G = a_sigma F_sigma + a_tau F_tau + a_sigma_tau F_sigma_tau - a_delta F_Delta`
//! vanishes on the ruled surface at the bottom of a
//! blow-down sequence, so `G(0)`, which is the degree of the matching divisor,
//! is the sum of the per-step drops. Positivity of every admissible drop
//! therefore gives positivity on every family with at least one singular
//! fiber.

use std::fmt;

use num_traits::{One, Zero};

use crate::classes::WeightVector;
use crate::error::{Error, Result};
use crate::family::{step_drops, FValues, FamilyModel};
use crate::rational::{int, midpoint, q, Rational};

/// Coefficients of `G`. `a_delta` multiplies `-F_Delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVector {
    pub a_sigma: Rational,
    pub a_tau: Rational,
    pub a_sigma_tau: Rational,
    pub a_delta: Rational,
}

impl CoefficientVector {
    /// `a F_sigma + b F_sigma_tau + ((m-b)/m) F_tau - F_Delta`. The `F_tau`
    /// weight is 0 for `m <= 1`, where `F_tau` vanishes identically. With
    /// `m = 0` there is no `F_sigma_tau` term and `b` must be 0.
    pub fn from_ab(m: u32, a: &Rational, b: &Rational) -> Result<Self> {
        if m == 0 && !b.is_zero() {
            return Err(Error::InvalidCoefficients(format!(
                "b = {b} needs at least one weight-1 section"
            )));
        }
        let a_tau = if m >= 2 {
            (int(m.into()) - b) / int(m.into())
        } else {
            Rational::zero()
        };
        Ok(CoefficientVector {
            a_sigma: a.clone(),
            a_tau,
            a_sigma_tau: b.clone(),
            a_delta: Rational::one(),
        })
    }

    pub fn apply(&self, f: &FValues) -> Rational {
        &self.a_sigma * &f.sigma + &self.a_tau * &f.tau + &self.a_sigma_tau * &f.sigma_tau
            - &self.a_delta * &f.delta
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DropEvaluation {
    pub r1: u32,
    pub r2: u32,
    pub value: Rational,
}

impl fmt::Display for DropEvaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{}) = {}", self.r1, self.r2, self.value)
    }
}

/// All `(r1, r2)` with both sides of the split carrying weight `> 1`,
/// in lexicographic order.
pub fn admissible_pairs(w: &WeightVector) -> Vec<(u32, u32)> {
    (0..=w.n())
        .flat_map(|r1| (0..=w.m()).map(move |r2| (r1, r2)))
        .filter(|&(r1, r2)| w.split_is_admissible(r1, r2))
        .collect()
}

/// Drop of `G` at a step with counts `(r1, r2)`.
pub fn drop_value(w: &WeightVector, coeffs: &CoefficientVector, r1: u32, r2: u32) -> Rational {
    coeffs.apply(&step_drops(w, r1, r2))
}

/// Exact minimum of the drop over the admissible pairs, ties broken by the
/// lexicographically smallest pair. `None` when no step is possible.
pub fn min_drop(w: &WeightVector, coeffs: &CoefficientVector) -> Option<DropEvaluation> {
    let mut best: Option<DropEvaluation> = None;
    for (r1, r2) in admissible_pairs(w) {
        let value = drop_value(w, coeffs, r1, r2);
        if best.as_ref().is_none_or(|b| value < b.value) {
            best = Some(DropEvaluation { r1, r2, value });
        }
    }
    best
}

/// `G(0), ..., G(N)` on a valid family.
pub fn g_series(family: &FamilyModel, coeffs: &CoefficientVector) -> Result<Vec<Rational>> {
    Ok(family
        .f_series()?
        .iter()
        .map(|f| coeffs.apply(f))
        .collect())
}

/// `a = (n-1)(c - 1/2)`, `b = n((n-1)/2 - (n-2)c)`: the coefficients for
/// which `G(0) = D_k(c).B`.
pub fn substitution(n: u32, c: &Rational) -> (Rational, Rational) {
    let n = int(n.into());
    let a = (&n - int(1)) * (c - q(1, 2));
    let b = &n * ((&n - int(1)) / int(2) - (&n - int(2)) * c);
    (a, b)
}

/// Whether `G(0)` with these `(a, b)` equals `D_k(c).B`. For `m <= 1` the
/// `F_tau` term is missing, so `psi_tau` is only produced when `b = m`.
pub fn representable(m: u32, b: &Rational) -> bool {
    match m {
        0 => b.is_zero(),
        1 => b.is_one(),
        _ => true,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseCheck {
    pub case: u8,
    pub satisfied: bool,
}

/// Which of the four sufficient conditions applies to `(n, m, k)`, and
/// whether `(a, b)` satisfies it.
pub fn sufficient_case(w: &WeightVector, a: &Rational, b: &Rational) -> Result<CaseCheck> {
    let (n, m, k) = (w.n(), w.m(), w.k());
    let (ni, ki) = (i64::from(n), i64::from(k));
    let none = || Error::NoCaseApplies { n, m, k };
    let zero = Rational::zero();
    let (case, satisfied) = match m {
        0 => (1, a > &q(ni - 1, (ni - ki - 1) * (ki + 1))),
        1 if n >= k + 2 => (2, a > &q(ni - 1, ni * (ki + 1))),
        1 => return Err(none()),
        _ if n < 2 => return Err(none()),
        _ if n <= k => (3, a > &zero && b > &zero),
        _ => {
            let lhs = int((ki + 1) * (ni - ki - 1)) * a / int(ni - 1) + int(ki + 1) * b / int(ni);
            (4, lhs > int(1) && b > &int(1))
        }
    };
    Ok(CaseCheck { case, satisfied })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThresholdValue {
    /// `D_k(c)` is nonnegative on generically smooth families at this `c`.
    Exact(Rational),
    /// As `Exact`, with degree zero on every such family.
    Equality(Rational),
    /// Every `c` in `(lo, hi)`, or `(lo, hi]` when `hi_closed`.
    Interval {
        lo: Rational,
        hi: Rational,
        hi_closed: bool,
    },
}

impl ThresholdValue {
    pub fn contains(&self, c: &Rational) -> bool {
        match self {
            ThresholdValue::Exact(x) | ThresholdValue::Equality(x) => x == c,
            ThresholdValue::Interval { lo, hi, hi_closed } => {
                c > lo && (c < hi || (*hi_closed && c == hi))
            }
        }
    }
}

impl fmt::Display for ThresholdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ThresholdValue::Exact(c) => write!(f, "{c}"),
            ThresholdValue::Equality(c) => write!(f, "{c} (equality)"),
            ThresholdValue::Interval { lo, hi, hi_closed } => {
                write!(f, "({lo}, {hi}{}", if *hi_closed { "]" } else { ")" })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threshold {
    pub case: u8,
    pub value: ThresholdValue,
    /// `(a, b)` from the substitution, for the single-value cases.
    pub ab: Option<(Rational, Rational)>,
}

/// `(k+2)/(2(k+1))`.
pub fn lower_endpoint(k: u32) -> Rational {
    let k = i64::from(k);
    q(k + 2, 2 * (k + 1))
}

/// `(k+1)/(2k)`.
pub fn upper_endpoint(k: u32) -> Rational {
    let k = i64::from(k);
    q(k + 1, 2 * k)
}

/// The `c` values at which `D_k(c)` is nonnegative on every generically
/// smooth family of `(n, m, k)`. Intended for `k >= 2`.
pub fn threshold_c(w: &WeightVector) -> Threshold {
    let (n, m, k) = (w.n(), w.m(), w.k());
    let ni = i64::from(n);
    let single = |case: u8, c: Rational, equality: bool| {
        let ab = substitution(n, &c);
        Threshold {
            case,
            value: if equality {
                ThresholdValue::Equality(c)
            } else {
                ThresholdValue::Exact(c)
            },
            ab: Some(ab),
        }
    };
    match m {
        0 => single(1, q(ni - 1, 2 * (ni - 2)), false),
        1 if n >= k + 2 => single(2, q(ni + 1, 2 * ni), false),
        1 => single(5, lower_endpoint(k), true),
        _ if n <= k => Threshold {
            case: 3,
            value: ThresholdValue::Interval {
                lo: q(1, 2),
                hi: lower_endpoint(k),
                hi_closed: true,
            },
            ab: None,
        },
        _ => Threshold {
            case: 4,
            value: ThresholdValue::Interval {
                lo: q(1, 2),
                hi: q(ni + 1, 2 * ni),
                hi_closed: false,
            },
            ab: None,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct C0 {
    pub c0: Rational,
    /// `c0 < (k+2)/(2(k+1))`.
    pub strict: bool,
}

/// A representative `c0 <= (k+2)/(2(k+1))` from the threshold table: the
/// exact value, or the midpoint of an interval.
pub fn c0_lower(w: &WeightVector) -> C0 {
    let c0 = match threshold_c(w).value {
        ThresholdValue::Exact(c) | ThresholdValue::Equality(c) => c,
        ThresholdValue::Interval { lo, hi, .. } => midpoint(&lo, &hi),
    };
    let strict = c0 < lower_endpoint(w.k());
    C0 { c0, strict }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmpleInterval {
    /// Open lower endpoint.
    pub lo: Rational,
    /// Closed upper endpoint; `None` means unbounded.
    pub hi: Option<Rational>,
}

impl AmpleInterval {
    pub fn contains(&self, c: &Rational) -> bool {
        c > &self.lo && self.hi.as_ref().is_none_or(|hi| c <= hi)
    }
}

impl fmt::Display for AmpleInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.hi {
            Some(hi) => write!(f, "({}, {}]", self.lo, hi),
            None => write!(f, "({}, inf)", self.lo),
        }
    }
}

/// `((k+2)/(2k+2), (k+1)/(2k)]`, and `(2/3, inf)` for `k = 1`.
pub fn ample_interval(k: u32) -> AmpleInterval {
    if k <= 1 {
        AmpleInterval {
            lo: q(2, 3),
            hi: None,
        }
    } else {
        AmpleInterval {
            lo: lower_endpoint(k),
            hi: Some(upper_endpoint(k)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: i64, m: i64, k: i64) -> WeightVector {
        WeightVector::new(n, m, k).unwrap()
    }

    fn ab(m: u32, a: Rational, b: Rational) -> CoefficientVector {
        CoefficientVector::from_ab(m, &a, &b).unwrap()
    }

    #[test]
    fn admissible_examples() {
        assert_eq!(admissible_pairs(&w(3, 2, 2)), vec![(0, 2), (1, 1), (2, 1), (3, 0)]);
        for n in 5..10u32 {
            let expected: Vec<(u32, u32)> = (2..=n - 2).map(|r| (r, 0)).collect();
            assert_eq!(admissible_pairs(&w(n.into(), 0, 1)), expected);
        }
        for k in 2..8i64 {
            assert!(admissible_pairs(&w(k + 1, 1, k)).is_empty());
        }
    }

    #[test]
    fn drop_examples() {
        let (a, b) = (q(2, 7), q(9, 5));
        let coeffs = ab(2, a.clone(), b.clone());
        assert_eq!(drop_value(&w(3, 2, 2), &coeffs, 1, 1), a);
        for (n, m, k) in [(7, 2, 2), (5, 3, 3), (4, 4, 2)] {
            let ws = w(n, m, k);
            let coeffs = ab(m as u32, a.clone(), b.clone());
            assert_eq!(drop_value(&ws, &coeffs, n as u32, 0), &b - int(1));
            assert_eq!(drop_value(&ws, &coeffs, 0, m as u32), &b - int(1));
        }
        let coeffs = ab(0, a.clone(), int(0));
        for r1 in 3..=4 {
            assert_eq!(
                drop_value(&w(7, 0, 2), &coeffs, r1, 0),
                &a * q(i64::from(r1 * (7 - r1)), 6) - int(1)
            );
        }
    }

    #[test]
    fn min_drop_examples() {
        let got = min_drop(&w(3, 2, 2), &ab(2, q(1, 8), q(3, 2))).unwrap();
        assert_eq!(got, DropEvaluation { r1: 1, r2: 1, value: q(1, 8) });
        let got = min_drop(&w(7, 0, 2), &ab(0, q(1, 2), int(0))).unwrap();
        assert_eq!(got, DropEvaluation { r1: 3, r2: 0, value: int(0) });
        assert_eq!(min_drop(&w(4, 1, 3), &ab(1, q(1, 3), int(1))), None);
    }

    #[test]
    fn g_series_examples() {
        let stable = FamilyModel::new_abstract(w(5, 0, 1), &[(2, 0); 4]);
        let g = g_series(&stable, &ab(0, q(3, 4), int(0))).unwrap();
        assert_eq!(g, vec![q(1, 2), q(3, 8), q(1, 4), q(1, 8), int(0)]);
        let empty = FamilyModel::new_abstract(w(5, 0, 2), &[]);
        assert_eq!(g_series(&empty, &ab(0, q(3, 4), int(0))).unwrap(), vec![int(0)]);
    }

    #[test]
    fn case_examples() {
        let r = sufficient_case(&w(7, 0, 2), &q(2, 3), &int(0)).unwrap();
        assert_eq!(r, CaseCheck { case: 1, satisfied: true });
        let r = sufficient_case(&w(5, 1, 3), &q(1, 2), &int(1)).unwrap();
        assert_eq!(r, CaseCheck { case: 2, satisfied: true });
        let r = sufficient_case(&w(3, 2, 2), &q(1, 8), &q(3, 2)).unwrap();
        assert_eq!(r, CaseCheck { case: 4, satisfied: true });
        let r = sufficient_case(&w(2, 3, 2), &q(1, 8), &q(1, 2)).unwrap();
        assert_eq!(r, CaseCheck { case: 3, satisfied: true });
        assert!(matches!(
            sufficient_case(&w(4, 1, 3), &q(1, 2), &int(1)),
            Err(Error::NoCaseApplies { .. })
        ));
    }

    #[test]
    fn threshold_examples() {
        let t = threshold_c(&w(7, 0, 2));
        assert_eq!((t.case, t.value), (1, ThresholdValue::Exact(q(3, 5))));
        let t = threshold_c(&w(5, 1, 3));
        assert_eq!((t.case, t.value), (2, ThresholdValue::Exact(q(3, 5))));
        let t = threshold_c(&w(4, 1, 3));
        assert_eq!((t.case, t.value.clone()), (5, ThresholdValue::Equality(q(5, 8))));
        assert_eq!(t.ab, Some((q(3, 8), int(1))));
        let t = threshold_c(&w(2, 3, 2));
        assert_eq!(t.case, 3);
        assert_eq!(t.value.to_string(), "(1/2, 2/3]");
        let t = threshold_c(&w(5, 2, 2));
        assert_eq!(t.case, 4);
        assert_eq!(t.value.to_string(), "(1/2, 3/5)");
    }

    #[test]
    fn c0_examples() {
        assert_eq!(c0_lower(&w(7, 0, 2)), C0 { c0: q(3, 5), strict: true });
        assert_eq!(c0_lower(&w(4, 1, 3)), C0 { c0: q(5, 8), strict: false });
        assert_eq!(c0_lower(&w(2, 3, 2)), C0 { c0: q(7, 12), strict: true });
        // Case 1 at n = 5, k = 2 meets the bound exactly.
        assert_eq!(c0_lower(&w(5, 0, 2)), C0 { c0: q(2, 3), strict: false });
    }

    #[test]
    fn ample_interval_examples() {
        let i = ample_interval(2);
        assert_eq!((i.lo.clone(), i.hi.clone()), (q(2, 3), Some(q(3, 4))));
        assert_eq!(i.to_string(), "(2/3, 3/4]");
        assert!(i.contains(&q(3, 4)) && !i.contains(&q(2, 3)));
        let i = ample_interval(3);
        assert_eq!((i.lo, i.hi), (q(5, 8), Some(q(2, 3))));
        let i = ample_interval(1);
        assert_eq!(i.lo, q(2, 3));
        assert!(i.hi.is_none() && i.contains(&int(7)));
        for k in 2..=50 {
            assert_eq!(ample_interval(k + 1).hi.unwrap(), ample_interval(k).lo);
        }
    }

    #[test]
    fn substitution_reproduces_dk() {
        for n in 2..12u32 {
            let c = q(5, 8);
            let (a, b) = substitution(n, &c);
            assert_eq!(&a + &b / int(n.into()), c);
            assert_eq!(&a * int(2) / int(i64::from(n) - 1), &c * int(2) - int(1));
        }
    }
}
