//! Executable reproductions of the worked test curves and identities.
//!
//! Each fixture recomputes a value from first principles and compares it to
//! the closed-form value of the identity it names.

use num_traits::Zero;

use crate::classes::{DivisorClass, WeightVector};
use crate::error::Result;
use crate::family::{stratified_evaluate, FamilyModel};
use crate::morphism::{
    derive_pullback_constant, derive_pushforward_constants, exceptional_coefficient,
    pullback_reduction, pullback_replacement,
};
use crate::rational::{int, q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    /// The identity being checked.
    pub source: &'static str,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub note: Option<String>,
}

impl Fixture {
    fn new(name: String, source: &'static str, expected: String, computed: String) -> Self {
        let pass = expected == computed;
        Fixture {
            name,
            source,
            expected,
            computed,
            pass,
            note: None,
        }
    }

    pub fn line(&self) -> String {
        let mut line = format!(
            "{}\t{}\texpected={}\tcomputed={}\t[{}]",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.expected,
            self.computed,
            self.source
        );
        if let Some(note) = &self.note {
            line.push('\t');
            line.push_str(note);
        }
        line
    }
}

fn w(n: u32, m: u32, k: u32) -> Result<WeightVector> {
    WeightVector::new(n.into(), m.into(), k.into())
}

/// The `D_{k-1}((k+1)/(2k))` degree of the contracted test curve.
pub fn contracted_curve_value(k: u32) -> Result<crate::rational::Rational> {
    let ki = i64::from(k);
    let moving = w(k, 1, k - 1)?;
    let family = FamilyModel::new_concrete(moving, vec![], vec![1; k as usize], vec![-1]);
    let d = DivisorClass::dk(moving, &q(ki + 1, 2 * ki));
    stratified_evaluate(&d, &[(moving, family)])
}

pub fn all() -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for n in 5..=8u32 {
        let d = derive_pushforward_constants(n)?;
        let mut f = Fixture::new(
            format!("pushforward_constants n={n}"),
            "push-forward of psi and delta, diagonal test family",
            "(2, 1)".to_string(),
            format!("({}, {})", d.a, d.b),
        );
        f.note = Some(format!(
            "psi.B={} psi.B^s={}",
            d.weighted.psi_sigma_b, d.unweighted.psi_sigma_b
        ));
        out.push(f);
        out.push(Fixture::new(
            format!("blown_up_nodes n={n}"),
            "blown-up nodes, delta.B^s = n-1",
            (n - 1).to_string(),
            d.unweighted.delta_b.to_string(),
        ));
    }
    for k in 2..=10u32 {
        let d = derive_pullback_constant(k + 1, 1, k)?;
        out.push(Fixture::new(
            format!("pullback_constant k={k}"),
            "reduction pull-back, psi_sigma rule a = -k",
            format!("-{k}"),
            d.psi_sigma_rule.to_string(),
        ));
        out.push(Fixture::new(
            format!("pullback_delta_rule k={k}"),
            "reduction pull-back, delta -> delta - F",
            "-1".to_string(),
            d.delta_rule.to_string(),
        ));
    }
    for k in 2..=10u32 {
        let ki = i64::from(k);
        let c = q(ki + 1, 2 * ki);
        let target = w(2 * k + 1, 1, k)?;
        let pulled = pullback_reduction(&DivisorClass::dk(target, &c))?;
        let clean = pulled == DivisorClass::dk(w(2 * k + 1, 1, k - 1)?, &c);
        let coeff = exceptional_coefficient(&pulled, k).unwrap_or_else(Zero::zero);
        out.push(Fixture::new(
            format!("functoriality k={k}"),
            "reduction pull-back of D_k((k+1)/(2k))",
            "F=0 D_{k-1}".to_string(),
            format!("F={coeff} {}", if clean { "D_{k-1}" } else { "other" }),
        ));
        let eps = q(1, 7);
        let replaced = pullback_replacement(&DivisorClass::dk(w(k + 2, 1, k)?, &(&c + &eps)))?;
        out.push(Fixture::new(
            format!("replacement_correction k={k} eps=1/7"),
            "replacement pull-back, -eps k(k-2) psi_tau_{m+1}",
            (int(1) - &eps * int(ki * (ki - 2))).to_string(),
            replaced.psi_tau[1].to_string(),
        ));
        out.push(Fixture::new(
            format!("contracted_curve k={k}"),
            "contracted test curve",
            "0".to_string(),
            contracted_curve_value(k)?.to_string(),
        ));
    }
    Ok(out)
}
