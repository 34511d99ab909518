use mamdani_flc::fuzzy::{
    fuzzify, snorm_max, Degree, Fuzzification, FuzzifiedInput, MembershipFunction, TNorm, Universe,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn degree() -> impl Strategy<Value = Degree> {
    prop_oneof![
        Just(Degree::ZERO),
        Just(Degree::ONE),
        (0.0f64..=1.0).prop_map(|v| Degree::new(v).unwrap()),
    ]
}

fn tnorm() -> impl Strategy<Value = TNorm> {
    prop_oneof![Just(TNorm::Min), Just(TNorm::Product)]
}

fn shape() -> impl Strategy<Value = MembershipFunction> {
    (prop::collection::vec(-50.0f64..50.0, 4), any::<bool>()).prop_filter_map(
        "non-degenerate support",
        |(mut p, tri)| {
            p.sort_by(|a, b| a.partial_cmp(b).unwrap());
            if tri {
                MembershipFunction::triangular(p[0], p[1], p[3]).ok()
            } else {
                MembershipFunction::trapezoidal(p[0], p[1], p[2], p[3]).ok()
            }
        },
    )
}

proptest! {
    #[test]
    fn tnorm_boundary(t in tnorm(), a in degree()) {
        prop_assert_eq!(t.apply(a, Degree::ONE), a);
        prop_assert_eq!(t.apply(Degree::ONE, a), a);
        prop_assert_eq!(t.apply(a, Degree::ZERO), Degree::ZERO);
    }

    #[test]
    fn tnorm_commutative(t in tnorm(), a in degree(), b in degree()) {
        prop_assert_eq!(t.apply(a, b), t.apply(b, a));
    }

    #[test]
    fn tnorm_monotone(t in tnorm(), a in degree(), b in degree(), c in degree(), d in degree()) {
        let (a, c) = if a <= c { (a, c) } else { (c, a) };
        let (b, d) = if b <= d { (b, d) } else { (d, b) };
        prop_assert!(t.apply(a, b) <= t.apply(c, d));
    }

    #[test]
    fn tnorm_associative(t in tnorm(), a in degree(), b in degree(), c in degree()) {
        let l = t.apply(t.apply(a, b), c).value();
        let r = t.apply(a, t.apply(b, c)).value();
        prop_assert!((l - r).abs() <= 1e-15, "{} vs {}", l, r);
    }

    #[test]
    fn tnorm_bounded_by_min(t in tnorm(), a in degree(), b in degree()) {
        prop_assert!(t.apply(a, b) <= a.min(b));
    }

    #[test]
    fn max_is_an_snorm(a in degree(), b in degree(), c in degree()) {
        prop_assert_eq!(snorm_max(a, Degree::ZERO), a);
        prop_assert_eq!(snorm_max(a, b), snorm_max(b, a));
        prop_assert_eq!(snorm_max(snorm_max(a, b), c), snorm_max(a, snorm_max(b, c)));
        prop_assert!(snorm_max(a, b) >= a);
    }

    #[test]
    fn membership_in_unit_interval(mf in shape(), x in -100.0f64..100.0) {
        let mu = mf.eval(x).value();
        prop_assert!((0.0..=1.0).contains(&mu));
    }

    #[test]
    fn membership_is_lipschitz(mf in shape(), x in -60.0f64..60.0, dx in -1.0f64..1.0) {
        let l = mf.max_slope();
        prop_assume!(l.is_finite());
        let d = (mf.eval(x).value() - mf.eval(x + dx).value()).abs();
        prop_assert!(d <= l * dx.abs() * (1.0 + 1e-9) + 1e-12, "jump {} over {}", d, dx);
    }

    #[test]
    fn membership_one_on_core(mf in shape(), s in 0.0f64..=1.0) {
        let (c1, c2) = mf.core();
        prop_assert_eq!(mf.eval(c1 + s * (c2 - c1)), Degree::ONE);
    }

    #[test]
    fn membership_zero_outside_support(mf in shape(), gap in 1e-6f64..10.0) {
        let (s1, s2) = mf.support();
        prop_assert_eq!(mf.eval(s1 - gap), Degree::ZERO);
        prop_assert_eq!(mf.eval(s2 + gap), Degree::ZERO);
    }

    #[test]
    fn fuzzified_inputs_stay_in_universe(
        lo in -100.0f64..0.0,
        span in 0.5f64..100.0,
        x in -1e6f64..1e6,
        h in prop::option::of(0.01f64..10.0),
    ) {
        let u = Universe::new(lo, lo + span).unwrap();
        let mode = match h {
            Some(h) => Fuzzification::triangular(h).unwrap(),
            None => Fuzzification::Singleton,
        };
        let f = fuzzify(x, &u, mode).unwrap();
        prop_assert!(u.contains(f.x0()));
        prop_assert_eq!(f.membership(f.x0()), Degree::ONE);
    }
}

#[test]
fn axioms_over_exhaustive_grid() {
    let grid: Vec<Degree> = (0..=10).map(|k| Degree::new(k as f64 / 10.0).unwrap()).collect();
    for t in [TNorm::Min, TNorm::Product] {
        for &a in &grid {
            assert_eq!(t.apply(a, Degree::ONE), a);
            for &b in &grid {
                assert_eq!(t.apply(a, b), t.apply(b, a));
                for &c in &grid {
                    let l = t.apply(t.apply(a, b), c).value();
                    let r = t.apply(a, t.apply(b, c)).value();
                    assert!((l - r).abs() <= 1e-15);
                    if b <= c {
                        assert!(t.apply(a, b) <= t.apply(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn membership_range_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let mut p: Vec<f64> = (0..4).map(|_| rng.gen_range(-20.0..20.0)).collect();
        p.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mf = match MembershipFunction::trapezoidal(p[0], p[1], p[2], p[3]) {
            Ok(mf) => mf,
            Err(_) => continue,
        };
        let x = rng.gen_range(-30.0..30.0);
        let mu = mf.eval(x).value();
        assert!((0.0..=1.0).contains(&mu), "{mu} at {x} for {p:?}");
    }
}

#[test]
fn degree_rejects_outside_unit_interval() {
    for v in [-0.1, 1.0 + 1e-12, f64::NAN, f64::INFINITY] {
        assert!(Degree::new(v).is_err(), "{v}");
    }
    assert_eq!(Degree::new(-0.0).unwrap().value().to_bits(), 0.0f64.to_bits());
}

#[test]
fn shapes_reject_bad_breakpoints() {
    assert!(MembershipFunction::triangular(5.0, 0.0, 10.0).is_err());
    assert!(MembershipFunction::triangular(3.0, 3.0, 3.0).is_err());
    assert!(MembershipFunction::trapezoidal(0.0, 1.0, f64::NAN, 2.0).is_err());
}

#[test]
fn triangular_fuzzification_shape() {
    let u = Universe::new(0.0, 10.0).unwrap();
    let f = fuzzify(4.0, &u, Fuzzification::triangular(2.0).unwrap()).unwrap();
    assert_eq!(f, FuzzifiedInput::TriangularNumber { x0: 4.0, halfwidth: 2.0 });
    assert_eq!(f.membership(5.0).value(), 0.5);
    assert_eq!(f.membership(6.0), Degree::ZERO);
    assert!(Fuzzification::triangular(0.0).is_err());
    assert!(fuzzify(f64::NAN, &u, Fuzzification::Singleton).is_err());
}
