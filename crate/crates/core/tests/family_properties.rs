//! Properties of concrete families: telescoping of F, node counts, step
//! order and reconstruction from abstract counts.

mod common;

use common::{boundary_f_values, closed_form_drops, random_concrete_family};
use m0a::family::FValues;
use m0a::rational::int;
use m0a::{BlowdownStep, FamilyModel};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn family() -> impl Strategy<Value = FamilyModel> {
    any::<u64>().prop_map(|seed| random_concrete_family(&mut StdRng::seed_from_u64(seed), 8, 6))
}

fn disjoint(a: &BlowdownStep, b: &BlowdownStep) -> bool {
    match (a, b) {
        (
            BlowdownStep::Concrete { sigma: s1, tau: t1 },
            BlowdownStep::Concrete { sigma: s2, tau: t2 },
        ) => s1.is_disjoint(s2) && t1.is_disjoint(t2),
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn drops_match_closed_forms(fam in family()) {
        let series = fam.f_series().unwrap();
        for (i, step) in fam.steps().iter().enumerate() {
            let (r1, r2) = step.counts();
            prop_assert_eq!(series[i].minus(&series[i + 1]), closed_form_drops(fam.weights(), r1, r2));
        }
        prop_assert_eq!(&series[fam.len()], &FValues::zero());
    }

    #[test]
    fn f_at_zero_matches_intersections(fam in family()) {
        let report = fam.intersection_numbers().unwrap();
        prop_assert_eq!(fam.f_values(0).unwrap(), boundary_f_values(fam.weights(), &report));
    }

    #[test]
    fn delta_counts_steps(fam in family()) {
        prop_assert_eq!(fam.intersection_numbers().unwrap().delta_b, int(fam.len() as i64));
    }

    #[test]
    fn abstraction_reconstructs_intersections(fam in family()) {
        prop_assume!(fam.weights().n() >= 2 && fam.weights().m() >= 2);
        let rebuilt = fam.abstraction().reconstruct_intersections().unwrap();
        prop_assert_eq!(rebuilt, fam.intersection_numbers().unwrap());
    }

    #[test]
    fn toml_round_trip(fam in family()) {
        let parsed = FamilyModel::from_toml_str(&fam.to_toml_string()).unwrap();
        prop_assert_eq!(parsed, fam);
    }
}

#[test]
fn disjoint_steps_commute() {
    let mut rng = StdRng::seed_from_u64(0x006f_7264_6572);
    let mut swapped_families = 0;
    while swapped_families < 100 {
        let fam = random_concrete_family(&mut rng, 8, 6);
        let steps = fam.steps().to_vec();
        let swaps: Vec<usize> = (1..steps.len())
            .filter(|&i| disjoint(&steps[i - 1], &steps[i]))
            .collect();
        let Some(&i) = swaps.choose(&mut rng) else {
            continue;
        };
        let mut reordered = steps;
        reordered.swap(i - 1, i);
        let other = FamilyModel::new_concrete(
            *fam.weights(),
            reordered,
            fam.final_e_sigma().to_vec(),
            fam.final_e_tau().to_vec(),
        );
        assert!(other.validate().is_empty());
        assert_eq!(
            other.intersection_numbers().unwrap(),
            fam.intersection_numbers().unwrap()
        );
        swapped_families += 1;
    }
}
