//! Property-based invariants over random exact and floating inputs.

use e8kit::e8::E8;
use e8kit::freudenthal::PVec;
use e8kit::jordan::Jordan;
use e8kit::octonion::Octonion;
use e8kit::orbits::flows::{c, g_rot, C64};
use e8kit::orbits::sphere::sphere_f1_point;
use e8kit::orbits::{reduce_sphere_f1, FlowStep, Space};
use e8kit::scalar::{cq, Cq};
use e8kit::space::Vector;
use proptest::prelude::*;
use rand::SeedableRng;

fn gauss() -> impl Strategy<Value = Cq> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| cq(a, b))
}

fn exact<V: Vector<Cq>>() -> impl Strategy<Value = V> {
    prop::collection::vec(gauss(), V::DIM).prop_map(|v| V::from_coords(&v))
}

/// An e8 element supported on a few random coordinates.
fn sparse_e8() -> impl Strategy<Value = E8<Cq>> {
    prop::collection::vec((0usize..248, gauss()), 1..12).prop_map(|entries| {
        let mut v = vec![cq(0, 0); 248];
        for (k, z) in entries {
            v[k] = z;
        }
        E8::from_coords(&v)
    })
}

fn approx_c() -> impl Strategy<Value = C64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| c(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn octonion_norm_is_multiplicative(x in exact::<Octonion<Cq>>(), y in exact::<Octonion<Cq>>()) {
        let xy = x.mul(&y);
        prop_assert_eq!(xy.inner(&xy), x.inner(&x) * y.inner(&y));
        prop_assert_eq!(xy.norm(), x.norm() * y.norm());
    }

    #[test]
    fn octonions_are_alternative(x in exact::<Octonion<Cq>>(), y in exact::<Octonion<Cq>>()) {
        prop_assert_eq!(x.mul(&x).mul(&y), x.mul(&x.mul(&y)));
        prop_assert_eq!(y.mul(&x).mul(&x), y.mul(&x.mul(&x)));
    }

    #[test]
    fn octonion_conjugation_reverses_products(x in exact::<Octonion<Cq>>(), y in exact::<Octonion<Cq>>()) {
        prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
        prop_assert_eq!(x.conj().conj(), x.clone());
    }

    #[test]
    fn octonion_real_part_is_cyclic(x in exact::<Octonion<Cq>>(), y in exact::<Octonion<Cq>>(),
                                    z in exact::<Octonion<Cq>>()) {
        let a = x.mul(&y.mul(&z)).re();
        prop_assert_eq!(a.clone(), y.mul(&z.mul(&x)).re());
        prop_assert_eq!(a, z.mul(&x.mul(&y)).re());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sigma4_preserves_the_jordan_structure(x in exact::<Jordan<Cq>>(), y in exact::<Jordan<Cq>>()) {
        prop_assert_eq!(x.sigma4().det(), x.det());
        prop_assert_eq!(x.circ(&y).sigma4(), x.sigma4().circ(&y.sigma4()));
        prop_assert_eq!(x.sigma4().sigma4_inv(), x.clone());
    }

    #[test]
    fn freudenthal_maps_respect_the_skew_form(p in exact::<PVec<Cq>>(), q in exact::<PVec<Cq>>()) {
        prop_assert_eq!(p.sigma4().skew(&q.sigma4()), p.skew(&q));
        prop_assert_eq!(p.skew(&q), -q.skew(&p));
        prop_assert_eq!(p.kappa().sigma4(), p.sigma4().kappa());
        prop_assert_eq!(p.mu().sigma4(), p.sigma4().mu());
    }

    #[test]
    fn freudenthal_cross_is_symmetric(p in exact::<PVec<Cq>>(), q in exact::<PVec<Cq>>()) {
        prop_assert_eq!(p.cross(&q), q.cross(&p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn e8_bracket_is_antisymmetric_and_sigma4_equivariant(x in sparse_e8(), y in sparse_e8()) {
        let xy = x.bracket(&y);
        prop_assert_eq!(xy.clone(), y.bracket(&x).neg());
        prop_assert_eq!(xy.sigma4(), x.sigma4().bracket(&y.sigma4()));
        prop_assert_eq!(xy.sigma(), x.sigma().bracket(&y.sigma()));
    }

    #[test]
    fn rotations_preserve_det_and_invert(i in 0usize..7, dj in 1usize..8, s in approx_c(),
                                         v in prop::collection::vec(approx_c(), 27)) {
        let j = (i + dj).min(7);
        prop_assume!(i < j);
        let x = Jordan::<C64>::from_coords(&v);
        let m = g_rot(i, j, s).unwrap();
        let y = m.apply_vec(&x);
        prop_assert!((y.det() - x.det()).norm() < 1e-9 * (1.0 + x.det().norm()));
        let step = FlowStep::GRot { i, j, s };
        let back = step.inverse().apply(Space::J, &step.apply(Space::J, &v).unwrap()).unwrap();
        let d = back.iter().zip(&v).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        prop_assert!(d < 1e-9);
    }

    #[test]
    fn sphere_witnesses_replay(k in 2usize..=5, raw in prop::collection::vec(-1.0f64..1.0, 12), seed in any::<u64>()) {
        // A unit vector with support e_{7-k}, ..., e_7.
        let first = 7 - k;
        let t: Vec<C64> = (0..8 - first).map(|n| c(raw[2 * n], raw[2 * n + 1])).collect();
        let norm: C64 = t.iter().map(|z| z * z).sum();
        prop_assume!(norm.norm() > 0.1);
        let scale = norm.sqrt().inv();
        let t: Vec<C64> = t.iter().map(|z| z * scale).collect();
        let x = sphere_f1_point(k, &t);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let w = reduce_sphere_f1(&x, k, 1e-9, &mut rng).unwrap();
        prop_assert!(w.residual < 1e-9);
        prop_assert!(w.verify().unwrap() < 1e-9);
    }
}
