//! Sphere and null-cone reductions: worked examples and random round trips.

use e8kit::e8::E8;
use e8kit::freudenthal::PVec;
use e8kit::jordan::Jordan;
use e8kit::orbits::flows::{c, Oct, C64};
use e8kit::orbits::sphere::{random_sphere_f1, random_sphere_minus, sphere_minus_point};
use e8kit::orbits::wreduce::{check_w_member, classify, fixed_defect, exp_ad, fixed_basis, random_w_point, w_case_representatives};
use e8kit::orbits::*;
use e8kit::space::Vector;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn z() -> C64 {
    c(0.0, 0.0)
}

#[test]
fn sphere_f1_basepoint_and_single_step() {
    let mut r = rng(1);
    let w = reduce_sphere_f1(&Jordan::fe(1, 5), 2, 1e-9, &mut r).unwrap();
    assert!(w.steps.is_empty());
    let x = Jordan::<C64>::fe(1, 5).scale(&c(-1.0, 0.0));
    let w = reduce_sphere_f1(&x, 2, 1e-9, &mut r).unwrap();
    assert_eq!(w.steps.len(), 1);
    assert_eq!(w.steps[0], FlowStep::GRot { i: 5, j: 7, s: c(std::f64::consts::PI, 0.0) });
}

#[test]
fn sphere_f1_rejects_points_off_the_sphere() {
    let mut r = rng(1);
    let x = Jordan::<C64>::fe(1, 5).scale(&c(2.0, 0.0));
    assert!(reduce_sphere_f1(&x, 2, 1e-9, &mut r).is_err());
    assert!(reduce_sphere_f1(&Jordan::fe(1, 2), 2, 1e-9, &mut r).is_err());
}

#[test]
fn sphere_f1_random_points_reduce() {
    let mut r = rng(2);
    for k in 2..=5 {
        for _ in 0..25 {
            let x = random_sphere_f1(k, &mut r);
            let w = reduce_sphere_f1(&x, k, 1e-9, &mut r).unwrap();
            assert!(w.residual < 1e-9, "k={k} residual {}", w.residual);
            assert!(w.verify().unwrap() < 1e-9);
        }
    }
}

#[test]
fn sphere_minus_worked_examples() {
    let mut r = rng(3);
    let i = c(0.0, 1.0);
    // The basepoint of the fifth sphere needs no steps.
    let base = SphereVariant::S5Minus.basepoint();
    assert!(reduce_sphere_minus(SphereVariant::S5Minus, &base, 1e-9, &mut r).unwrap().steps.is_empty());
    // From (i(E2 + E3), 0, 0, 0) the fourth sphere needs only alpha2 alpha3(-pi/4).
    let p = sphere_minus_point(SphereVariant::S4Minus, i, i, Oct::zero(), z(), z());
    let w = reduce_sphere_minus(SphereVariant::S4Minus, &p, 1e-9, &mut r).unwrap();
    let kinds: Vec<&str> = w.steps.iter().map(|s| s.kind()).collect();
    assert_eq!(kinds, ["alpha_i", "alpha_i"]);
    assert!(w.residual < 1e-12);
}

#[test]
fn sphere_minus_random_points_reduce() {
    let mut r = rng(4);
    for v in SphereVariant::ALL {
        for _ in 0..25 {
            let p = random_sphere_minus(v, &mut r);
            let w = reduce_sphere_minus(v, &p, 1e-9, &mut r).unwrap();
            assert!(w.residual < 1e-9, "{} residual {}", v.name(), w.residual);
            assert!(w.verify().unwrap() < 1e-9);
        }
    }
}

#[test]
fn sphere_minus_special_cases() {
    let mut r = rng(5);
    let one = c(1.0, 0.0);
    let e0 = Oct::basis(0);
    // One point for each branch of the fifth-sphere recipe, all of norm 1.
    let cases: Vec<(C64, C64, Oct, C64, C64)> = vec![
        (c(0.5, 0.0), c(0.3, 0.0), e0.clone(), c(0.2, 0.0), c(0.75, 0.0)),
        (c(0.5, 0.0), c(-2.0, 0.0), Oct::zero(), z(), c(2.0, 0.0)),
        (z(), c(0.5, 0.0), e0.clone(), z(), c(2.0, 0.0)),
        (z(), z(), e0.clone(), z(), c(0.7, 0.0)),
        (c(0.5, 0.0), c(-2.0, 0.0), Oct::zero(), c(2.0, 0.0), z()),
        (z(), c(0.5, 0.0), e0.clone(), c(2.0, 0.0), z()),
        (z(), z(), e0.clone(), c(0.7, 0.0), z()),
        (one, -one, Oct::zero(), z(), z()),
    ];
    for (xi2, xi3, xo, eta1, eta) in cases {
        let p = sphere_minus_point(SphereVariant::S5Minus, xi2, xi3, xo, eta1, eta);
        let w = reduce_sphere_minus(SphereVariant::S5Minus, &p, 1e-9, &mut r)
            .unwrap_or_else(|e| panic!("{xi2} {xi3} {eta1} {eta}: {e}"));
        assert!(w.residual < 1e-9);
    }
    // Third sphere with x isotropic: xi2 xi3 = -1.
    let mut iso = Oct::zero();
    iso.0[0] = c(0.3, 0.0);
    iso.0[1] = c(0.0, 0.3);
    let p = sphere_minus_point(SphereVariant::S3Minus, c(2.0, 1.0), -one / c(2.0, 1.0), iso, z(), z());
    let w = reduce_sphere_minus(SphereVariant::S3Minus, &p, 1e-9, &mut r).unwrap();
    assert!(w.residual < 1e-9);
}

#[test]
fn sphere_minus_rejects_wrong_shape() {
    let mut r = rng(6);
    let p = Jordan::<C64>::e(1).to_coords();
    assert!(reduce_sphere_minus(SphereVariant::S2Minus, &p, 1e-9, &mut r).is_err());
    let p = sphere_minus_point(SphereVariant::S3Minus, c(1.0, 0.0), c(1.0, 0.0), Oct::zero(), z(), z());
    assert!(reduce_sphere_minus(SphereVariant::S3Minus, &p, 1e-9, &mut r).is_err());
}

#[test]
fn witness_json_has_decimal_parameters() {
    let mut r = rng(7);
    let x = random_sphere_f1(3, &mut r);
    let w = reduce_sphere_f1(&x, 3, 1e-9, &mut r).unwrap();
    let j = w.to_json();
    assert_eq!(j["space"], "J");
    let first = &j["steps"][0];
    assert_eq!(first["kind"], "g_rot");
    assert!(first["params"]["s"].as_str().unwrap().contains('e'));
}

#[test]
fn exp_theta_closed_form_matches_series() {
    let mut r = rng(8);
    let basis = fixed_basis();
    for (r1, s1, scale) in [(0.0, 0.0, 0.0), (0.0, 0.7, 0.5), (0.3, -0.2, 0.5), (1.3, 0.4, 0.4), (0.2, 0.1, 0.6)] {
        let p1 = if scale > 0.0 { basis.random_element(scale, &mut r).p } else { PVec::zero() };
        let r1 = c(r1, 0.1 * r1);
        let s1 = c(s1, -0.3 * s1);
        let theta = E8 { p: p1.clone(), r: r1, s: s1, ..E8::zero() };
        let series = exp_ad(&theta, &E8::one_t());
        let closed = exp_theta_closed_form(&p1, r1, s1);
        assert!(series.dist(&closed) < 1e-9, "r1={r1} distance {}", series.dist(&closed));
    }
    // The limit branch at r1 = 0: Q = -P1.
    let p1 = PVec::xi_only(c(1.0, 0.0));
    let closed = exp_theta_closed_form(&p1, z(), z());
    assert!(closed.q.dist(&p1.neg()) < 1e-15);
    assert!(exp_theta_closed_form(&PVec::zero(), z(), z()).dist(&E8::one_t()) < 1e-15);
}

#[test]
fn w_examples() {
    let mut r = rng(9);
    let w = reduce_w(&E8::one_t(), 1e-9, &mut r).unwrap();
    assert!(w.steps.is_empty());
    let w = reduce_w(&E8::one_s(), 1e-9, &mut r).unwrap();
    let first = E8::<C64>::from_coords(&w.steps[0].apply(Space::E8, &w.start).unwrap());
    assert!(first.t.norm() > 0.5, "lambda' moves s into t");
    assert!(w.residual < 1e-8);
    assert!(reduce_w(&E8::one_r(), 1e-9, &mut r).is_err());
}

#[test]
fn w_round_trips() {
    let mut r = rng(10);
    for _ in 0..6 {
        let p = random_w_point(0.4, &mut r);
        check_w_member(&p, 1e-9).unwrap();
        let w = reduce_w(&p, 1e-9, &mut r).unwrap();
        assert!(w.residual < 1e-8, "residual {}", w.residual);
    }
}

#[test]
fn w_case_representatives_reduce() {
    let mut r = rng(11);
    let reps = w_case_representatives(&mut r);
    assert!(reps.len() >= 4);
    for (case, p) in reps {
        check_w_member(&p, 1e-9).unwrap();
        assert_eq!(classify(&p, 1e-9), Some(case));
        let w = reduce_w(&p, 1e-9, &mut r).unwrap();
        assert!(w.residual < 1e-8, "{case:?} residual {}", w.residual);
    }
}

#[test]
fn fixed_algebra_has_dimension_45() {
    let b = fixed_basis();
    assert_eq!(b.e7.len(), 18);
    assert_eq!(b.p.len(), 12);
    let all = b.e8_basis();
    assert_eq!(all.len(), 45);
    for x in &all {
        assert!(fixed_defect(x) < 1e-9);
    }
    // Closed under the bracket.
    let mut r = rng(12);
    let (x, y) = (b.random_element(1.0, &mut r), b.random_element(1.0, &mut r));
    assert!(fixed_defect(&x.bracket(&y)) < 1e-8);
}
