//! Shared generators and oracles for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use m0a::family::{BlowdownStep, FValues};
use m0a::positivity::admissible_pairs;
use m0a::rational::{int, q, Rational};
use m0a::{FamilyModel, IntersectionReport, WeightVector};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn w(n: u32, m: u32, k: u32) -> WeightVector {
    WeightVector::new(n.into(), m.into(), k.into()).expect("valid weights")
}

/// All valid weight vectors with `n + m <= max_total` and `k` in `ks`.
pub fn weight_grid(max_total: u32, ks: &[u32]) -> Vec<WeightVector> {
    let mut out = Vec::new();
    for &k in ks {
        for n in 0..=max_total {
            for m in 0..=(max_total - n) {
                if let Ok(v) = WeightVector::new(n.into(), m.into(), k.into()) {
                    out.push(v);
                }
            }
        }
    }
    out
}

pub fn random_rational(rng: &mut StdRng, bound: i64, den: i64) -> Rational {
    q(rng.gen_range(-bound * den..=bound * den), rng.gen_range(1..=den))
}

/// One attempt at a concrete family on `weights`.
///
/// Heavy sections end with self-intersection 0. A light section ending with
/// self-intersection `2d` meets every heavy section `d` times, so each such
/// meeting is separated by a blow-down containing both; extra blow-downs
/// separate light sections only. The result is returned only if it is valid
/// and has at most `max_steps` steps.
pub fn try_concrete_family(
    rng: &mut StdRng,
    weights: WeightVector,
    max_steps: usize,
) -> Option<FamilyModel> {
    let (n, m) = (weights.n(), weights.m());
    let d: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
    let rounds = d.iter().copied().max().unwrap_or(0) as usize;
    let mut steps = Vec::new();
    for t in 1..=m {
        let mut members: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); rounds];
        for (a, &da) in d.iter().enumerate() {
            let mut slots: Vec<usize> = (0..rounds).collect();
            slots.shuffle(rng);
            for &r in slots.iter().take(da as usize) {
                members[r].insert(a as u32 + 1);
            }
        }
        for sigma in members {
            steps.push(BlowdownStep::Concrete {
                sigma,
                tau: BTreeSet::from([t]),
            });
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let sigma: BTreeSet<u32> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
        steps.push(BlowdownStep::Concrete {
            sigma,
            tau: BTreeSet::new(),
        });
    }
    if steps.len() > max_steps {
        return None;
    }
    steps.shuffle(rng);
    let e_sigma = d.iter().map(|&x| 2 * i64::from(x)).collect();
    let family = FamilyModel::new_concrete(weights, steps, e_sigma, vec![0; m as usize]);
    family.validate().is_empty().then_some(family)
}

/// A valid concrete family with `n + m <= max_total`, `k <= 3` and at most
/// `max_steps` steps, preferring families with at least one step.
pub fn random_concrete_family(rng: &mut StdRng, max_total: u32, max_steps: usize) -> FamilyModel {
    let grid = weight_grid(max_total, &[1, 2, 3]);
    let mut fallback = None;
    for _ in 0..10_000 {
        let weights = *grid.choose(rng).expect("nonempty grid");
        if let Some(f) = try_concrete_family(rng, weights, max_steps) {
            if !f.is_empty() {
                return f;
            }
            fallback.get_or_insert(f);
        }
    }
    fallback.expect("some valid family")
}

/// Closed-form per-step drops of the four F functions.
pub fn closed_form_drops(weights: &WeightVector, r1: u32, r2: u32) -> FValues {
    let (n, m) = (i64::from(weights.n()), i64::from(weights.m()));
    let (r1, r2) = (i64::from(r1), i64::from(r2));
    FValues {
        delta: int(1),
        sigma: if n >= 2 { q(r1 * (n - r1), n - 1) } else { Rational::zero() },
        tau: if m >= 2 { q(r2 * (m - r2), m - 1) } else { Rational::zero() },
        sigma_tau: if n * m > 0 {
            q(r1 * (m - r2) + r2 * (n - r1), n * m)
        } else {
            Rational::zero()
        },
    }
}

/// `F(0)` predicted from the tautological degrees, honoring the conventions
/// for small `n` and `m`.
pub fn boundary_f_values(weights: &WeightVector, r: &IntersectionReport) -> FValues {
    let (n, m) = (i64::from(weights.n()), i64::from(weights.m()));
    FValues {
        delta: r.delta_b.clone(),
        sigma: if n >= 2 {
            &r.psi_sigma_b + q(2, n - 1) * &r.delta_s_b
        } else {
            Rational::zero()
        },
        tau: if m >= 2 { r.psi_tau_b.clone() } else { Rational::zero() },
        sigma_tau: if n * m > 0 {
            &r.psi_sigma_b / int(n) + &r.psi_tau_b / int(m)
        } else {
            Rational::zero()
        },
    }
}

/// Every sequence of admissible pairs of length `1..=max_len`.
pub fn step_sequences(weights: &WeightVector, max_len: usize) -> Vec<Vec<(u32, u32)>> {
    let pairs = admissible_pairs(weights);
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<(u32, u32)>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for seq in &frontier {
            for &p in &pairs {
                let mut s = seq.clone();
                s.push(p);
                next.push(s);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
