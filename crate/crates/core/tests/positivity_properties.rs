//! Properties of the drop lattice, thresholds and certificate recursion.

mod common;

use std::collections::BTreeSet;

use common::{step_sequences, w, weight_grid};
use m0a::certify::{Certifier, Verdict};
use m0a::positivity::{
    admissible_pairs, drop_value, min_drop, substitution, upper_endpoint, CoefficientVector,
};
use m0a::rational::{int, q, Rational};
use m0a::{FamilyModel, WeightVector};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-200i64..=200, 1i64..=40).prop_map(|(p, d)| q(p, d))
}

fn coefficients(v: &WeightVector, a: &Rational, b: &Rational) -> CoefficientVector {
    let b = if v.m() == 0 { Rational::zero() } else { b.clone() };
    CoefficientVector::from_ab(v.m(), a, &b).unwrap()
}

#[test]
fn admissible_pairs_are_the_valid_single_steps() {
    for v in weight_grid(9, &[1, 2, 3, 4]) {
        let valid: BTreeSet<(u32, u32)> = (0..=v.n())
            .flat_map(|r1| (0..=v.m()).map(move |r2| (r1, r2)))
            .filter(|&p| FamilyModel::new_abstract(v, &[p]).validate().is_empty())
            .collect();
        let listed: BTreeSet<(u32, u32)> = admissible_pairs(&v).into_iter().collect();
        assert_eq!(valid, listed, "{v}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lattice_minimum_matches_single_step_families(a in rational(), b in rational()) {
        for v in weight_grid(9, &[1, 2, 3, 4]) {
            let coeffs = coefficients(&v, &a, &b);
            let brute = admissible_pairs(&v)
                .into_iter()
                .map(|p| FamilyModel::new_abstract(v, &[p]).combination_value(&coeffs.a_sigma, &coeffs.a_sigma_tau).unwrap())
                .min();
            prop_assert_eq!(min_drop(&v, &coeffs).map(|d| d.value), brute);
        }
    }

    #[test]
    fn combination_is_the_sum_of_drops(a in rational(), b in rational()) {
        for v in [w(5, 0, 2), w(3, 2, 2), w(7, 0, 2), w(5, 1, 3)] {
            let coeffs = coefficients(&v, &a, &b);
            for seq in step_sequences(&v, 3) {
                let value = FamilyModel::new_abstract(v, &seq).combination_value(&coeffs.a_sigma, &coeffs.a_sigma_tau).unwrap();
                let sum: Rational = seq.iter().map(|&(r1, r2)| drop_value(&v, &coeffs, r1, r2)).sum();
                prop_assert_eq!(value, sum);
            }
        }
    }

    #[test]
    fn corners_bound_the_lattice(
        v in (2u32..=3, 3u32..=7, 0u32..=7).prop_filter_map("case 4 weights", |(k, m, n)| {
            (n > k && n + m <= 10).then(|| w(n, m, k))
        }),
        a in (0i64..=400, 1i64..=40).prop_map(|(p, d)| q(p, d)),
        b in (1i64..=400, 1i64..=40).prop_map(|(p, d)| int(1) + q(p, d)),
    ) {
        let (n, m, k) = (v.n(), v.m(), v.k());
        let (ni, ki) = (i64::from(n), i64::from(k));
        let lhs = int((ki + 1) * (ni - ki - 1)) * &a / int(ni - 1) + int(ki + 1) * &b / int(ni);
        prop_assume!(lhs > int(1));
        let coeffs = coefficients(&v, &a, &b);
        let corners = [
            (0, m), (0, 2), (1, 1), (k + 1, 0),
            (n, 0), (n, m - 2), (n - 1, m - 1), (n - k - 1, m),
        ];
        let corner_min = corners.iter().map(|&(r1, r2)| drop_value(&v, &coeffs, r1, r2)).min().unwrap();
        let lattice_min = min_drop(&v, &coeffs).unwrap().value;
        prop_assert!(lattice_min >= corner_min, "{} {} < {}", v, lattice_min, corner_min);
    }

    #[test]
    fn b_side_conditions(n in 3u32..=40, c in (-400i64..=800, 1i64..=400).prop_map(|(p, d)| q(p, d))) {
        let (_, b) = substitution(n, &c);
        let ni = i64::from(n);
        prop_assert_eq!(b > int(1), c < q(ni + 1, 2 * ni));
        prop_assert_eq!(b < q(ni, 2), c > q(1, 2));
    }
}

#[test]
fn case_one_threshold_is_sharp() {
    for k in 1..=5u32 {
        for n in (2 * k + 2)..=12 {
            let v = w(n, 0, k);
            let (ni, ki) = (i64::from(n), i64::from(k));
            let sharp = q(ni - 1, (ni - ki - 1) * (ki + 1));
            let coeffs = CoefficientVector::from_ab(0, &sharp, &int(0)).unwrap();
            assert_eq!(min_drop(&v, &coeffs).unwrap().value, int(0), "{v}");
            assert_eq!(drop_value(&v, &coeffs, k + 1, 0), int(0), "{v}");
            for bump in [q(1, 1000), q(1, 7), int(1)] {
                let coeffs = CoefficientVector::from_ab(0, &(&sharp + bump), &int(0)).unwrap();
                assert!(min_drop(&v, &coeffs).unwrap().value > int(0), "{v}");
            }
        }
    }
}

#[test]
fn upper_endpoint_never_minimizes_on_the_top_space() {
    for k in 2..=6u32 {
        for v in weight_grid(10, &[k]) {
            let mut certifier = Certifier::new();
            let cert = certifier.certify_interval(&v, &upper_endpoint(k)).unwrap();
            assert!(
                certifier.trace().iter().all(|s| s.k() < k),
                "{v}: drops evaluated at k = {k}"
            );
            assert_eq!(cert.verdict, Verdict::StrictlyPositive, "{v}");
        }
    }
}
