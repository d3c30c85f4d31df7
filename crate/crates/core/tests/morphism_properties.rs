//! Linearity of the push-forward and pull-back maps and the endpoint
//! identities they satisfy.

use m0a::morphism::{
    exceptional_coefficient, pullback_reduction, pullback_replacement, pushforward_reduction,
};
use m0a::rational::{int, q, Rational};
use m0a::{DivisorClass, WeightVector};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-300i64..=300, 1i64..=30).prop_map(|(p, d)| q(p, d))
}

/// Weighted targets `(n, m, k)`, `k >= 2`, whose `phi` and `chi` sources exist.
fn target() -> impl Strategy<Value = WeightVector> {
    (2i64..=5, 0i64..=3, 0i64..=5).prop_filter_map("valid target", |(k, m, extra)| {
        let w = WeightVector::new(k + extra, m, k).ok()?;
        w.with_k(w.k() - 1).ok()?;
        WeightVector::new(i64::from(w.n()) - k, m + 1, k).ok()?;
        Some(w)
    })
}

fn tautological(w: WeightVector) -> impl Strategy<Value = DivisorClass> {
    (
        rational(),
        prop::collection::vec(rational(), w.m() as usize),
        rational(),
        rational(),
    )
        .prop_map(move |(ps, pt, ds, d)| {
            let mut cls = DivisorClass::zero(w);
            cls.psi_sigma = ps;
            cls.psi_tau = pt;
            cls.delta_s = ds;
            cls.delta = d;
            cls
        })
}

fn pair_on_target() -> impl Strategy<Value = (DivisorClass, DivisorClass, Rational, Rational)> {
    target().prop_flat_map(|w| (tautological(w), tautological(w), rational(), rational()))
}

fn combine(l1: &Rational, x: &DivisorClass, l2: &Rational, y: &DivisorClass) -> DivisorClass {
    DivisorClass::combine(&[(l1.clone(), x), (l2.clone(), y)]).unwrap()
}

proptest! {
    #[test]
    fn pullback_reduction_is_linear((x, y, l1, l2) in pair_on_target()) {
        let lhs = pullback_reduction(&combine(&l1, &x, &l2, &y)).unwrap();
        let rhs = combine(&l1, &pullback_reduction(&x).unwrap(), &l2, &pullback_reduction(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pullback_replacement_is_linear((x, y, l1, l2) in pair_on_target()) {
        let lhs = pullback_replacement(&combine(&l1, &x, &l2, &y)).unwrap();
        let rhs = combine(&l1, &pullback_replacement(&x).unwrap(), &l2, &pullback_replacement(&y).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pushforward_is_linear(
        w in target(),
        (p1, d1, p2, d2) in (rational(), rational(), rational(), rational()),
        (l1, l2) in (rational(), rational()),
    ) {
        let source = WeightVector::new((w.n() + w.m()).into(), 0, 1).unwrap();
        let class = |p: &Rational, d: &Rational| {
            let mut cls = DivisorClass::zero(source);
            cls.psi_sigma = p.clone();
            cls.delta = d.clone();
            cls
        };
        let (x, y) = (class(&p1, &d1), class(&p2, &d2));
        let lhs = pushforward_reduction(&combine(&l1, &x, &l2, &y), w).unwrap();
        let rhs = combine(
            &l1,
            &pushforward_reduction(&x, w).unwrap(),
            &l2,
            &pushforward_reduction(&y, w).unwrap(),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn replacement_keeps_psi_tau_at_k2(c in rational(), m in 0i64..=3, extra in 0i64..=5) {
        let w = WeightVector::new(5 + extra, m, 2).unwrap();
        let pulled = pullback_replacement(&DivisorClass::dk(w, &c)).unwrap();
        prop_assert_eq!(pulled.psi_tau.last().unwrap(), &int(1));
    }
}

#[test]
fn reduction_pullback_at_the_critical_value() {
    for k in 2..=20i64 {
        let c = q(k + 1, 2 * k);
        for (n, m) in [(k + 1, 1), (2 * k + 1, 0), (2 * k + 1, 1), (k + 3, 2)] {
            let target = WeightVector::new(n, m, k).unwrap();
            let source = target.with_k(target.k() - 1).unwrap();
            let pulled = pullback_reduction(&DivisorClass::dk(target, &c)).unwrap();
            assert_eq!(pulled, DivisorClass::dk(source, &c), "{target}");
            if let Some(f) = exceptional_coefficient(&pulled, target.k()) {
                assert!(f.is_zero(), "{target}: F coefficient {f}");
            }
            assert!(!pulled.has_nonzero_boundary());
        }
    }
}

#[test]
fn replacement_pullback_past_the_critical_value() {
    for k in 2..=20i64 {
        let c0 = q(k + 1, 2 * k);
        for eps in [q(1, 100), q(1, 7), int(1)] {
            let c = &c0 + &eps;
            let target = WeightVector::new(k + 2, 1, k).unwrap();
            let pulled = pullback_replacement(&DivisorClass::dk(target, &c)).unwrap();
            let mut expected = DivisorClass::dk(*pulled.ambient(), &c);
            *expected.psi_tau.last_mut().unwrap() = int(1) + &eps * int(k * (2 - k));
            assert_eq!(pulled, expected, "k={k} eps={eps}");
        }
    }
}
