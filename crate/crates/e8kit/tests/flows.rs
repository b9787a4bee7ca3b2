//! Closed-form flows against the matrix exponential of their generators.

use e8kit::jordan::Jordan;
use e8kit::linalg::LinearEndo;
use e8kit::orbits::flows::*;
use e8kit::space::Vector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;
const DRAWS: usize = 20;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(7)
}

fn rc(rng: &mut ChaCha8Rng) -> C64 {
    c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

fn roct(rng: &mut ChaCha8Rng, support: std::ops::Range<usize>) -> Oct {
    let mut o = Oct::zero();
    for k in support {
        o.0[k] = rc(rng);
    }
    o
}

fn rj(rng: &mut ChaCha8Rng) -> Jc {
    let v: Vec<C64> = (0..27).map(|_| rc(rng)).collect();
    Jordan::from_coords(&v)
}

fn assert_close(a: &LinearEndo<C64>, b: &LinearEndo<C64>, what: &str) {
    let d = a.dist(b);
    assert!(d < TOL, "{what}: distance {d:e}");
}

#[test]
fn g_rot_matches_exponential_and_rotates_f1() {
    let mut rng = rng();
    for _ in 0..DRAWS {
        let i = rng.random_range(0..7);
        let j = rng.random_range(i + 1..8);
        let s = rc(&mut rng);
        let gen = g_rot_generator(i, j).unwrap().scale(&s).expm();
        assert_close(&g_rot(i, j, s).unwrap(), &gen, "g_rot");
        let t = roct(&mut rng, 0..8);
        let y = g_rot(i, j, s).unwrap().apply_vec(&Jordan::f(1, t.clone()));
        let (ti, tj) = (t.0[i], t.0[j]);
        assert!((y.x[0].0[i] - (s.cos() * ti + s.sin() * tj)).norm() < TOL);
        assert!((y.x[0].0[j] - (s.cos() * tj - s.sin() * ti)).norm() < TOL);
    }
}

#[test]
fn g_rot_blocks_have_the_expected_spectra() {
    for (i, j) in [(0, 1), (2, 5), (5, 7), (3, 6)] {
        let [d1, d2, d3] = g_blocks(i, j);
        assert!((cubic_lambda2(&d1) - c(1.0, 0.0)).norm() < 1e-12);
        assert!((cubic_lambda2(&d2) - c(0.25, 0.0)).norm() < 1e-12);
        assert!((cubic_lambda2(&d3) - c(0.25, 0.0)).norm() < 1e-12);
    }
}

#[test]
fn g_rot_worked_examples() {
    let pi = std::f64::consts::PI;
    let f = |k: usize, s: f64| Jordan::<C64>::fe(1, k).scale(&c(s, 0.0));
    let y = g_rot(5, 7, c(pi, 0.0)).unwrap().apply_vec(&f(5, -1.0));
    assert!(y.dist(&f(5, 1.0)) < 1e-12);
    let y = g_rot(4, 5, c(pi / 2.0, 0.0)).unwrap().apply_vec(&f(5, 1.0));
    assert!(y.dist(&f(4, 1.0)) < 1e-12);
    assert!(g_rot(2, 3, c(0.0, 0.0)).unwrap().near(&LinearEndo::identity(27), 0.0));
}

#[test]
fn alpha_a1_matches_exponential_and_preserves_forms() {
    let mut rng = rng();
    for _ in 0..DRAWS {
        let a = roct(&mut rng, 0..2);
        let m = alpha_a1(&a).unwrap();
        assert_close(&m, &alpha_a1_generator(&a).expm(), "alpha_A1");
        let x = rj(&mut rng);
        let y = m.apply_vec(&x);
        assert!((y.det() - x.det()).norm() < TOL * (1.0 + x.det().norm()));
        assert!((y.inner(&y) - x.inner(&x)).norm() < TOL * (1.0 + x.inner(&x).norm()));
        let e1 = Jordan::<C64>::e(1);
        assert!(m.apply_vec(&e1).dist(&e1) < 1e-12);
    }
}

#[test]
fn alpha_a1_rejects_isotropic_parameter() {
    let mut a = Oct::zero();
    a.0[0] = c(1.0, 0.0);
    a.0[1] = c(0.0, 1.0);
    assert!(alpha_a1(&a).is_err());
}

#[test]
fn beta1_and_alpha23_match_exponentials() {
    let mut rng = rng();
    for _ in 0..DRAWS {
        let t = roct(&mut rng, 0..2);
        assert_close(&beta1(&t).unwrap(), &beta1_generator(&t).expm(), "beta1");
        let x = rj(&mut rng);
        assert!((beta1(&t).unwrap().apply_vec(&x).xi[0] - x.xi[0]).norm() < 1e-12);
        let cc = rc(&mut rng);
        assert_close(&alpha23(cc), &alpha23_generator().scale(&cc).expm(), "alpha23");
    }
    assert!(alpha23(c(0.0, 0.0)).near(&LinearEndo::identity(27), 0.0));
    let e = |k| Jordan::<C64>::e(k);
    let y = alpha23(c(0.0, std::f64::consts::FRAC_PI_2)).apply_vec(&e(2).sub(&e(3)));
    assert!(y.dist(&e(2).add(&e(3)).scale(&c(0.0, 1.0))) < 1e-12);
}

#[test]
fn phi_theta_matches_exponential_and_preserves_det() {
    let mut rng = rng();
    for _ in 0..DRAWS {
        let s = rng.random_range(-3.0..3.0);
        let mut theta = Oct::zero();
        theta.0[0] = c(f64::cos(s), 0.0);
        theta.0[1] = c(f64::sin(s), 0.0);
        let m = phi_theta(&theta).unwrap();
        assert_close(&m, &phi_theta_generator().scale(&c(s, 0.0)).expm(), "phi_theta");
        let x = rj(&mut rng);
        let y = m.apply_vec(&x);
        assert!((y.det() - x.det()).norm() < TOL * (1.0 + x.det().norm()));
        assert!((y.inner(&y) - x.inner(&x)).norm() < TOL * (1.0 + x.inner(&x).norm()));
    }
    let gen = phi_theta_generator();
    let f = e8kit::lie::f4::extract_f4(|x: &Jc| gen.apply_vec(x));
    let back = LinearEndo::of_map(|x: &Jc| f.act(x));
    assert_close(&gen, &back, "phi_theta generator lies in f4");
    let mut bad = Oct::zero();
    bad.0[0] = c(2.0, 0.0);
    assert!(phi_theta(&bad).is_err());
}

#[test]
fn alpha_i_matches_exponential_and_commutes() {
    let mut rng = rng();
    for _ in 0..DRAWS {
        let i = rng.random_range(1..4);
        let a = rc(&mut rng);
        assert_close(&alpha_i(i, a).unwrap(), &alpha_i_generator(i, a).unwrap().expm(), "alpha_i");
        let j = i % 3 + 1;
        let b = rc(&mut rng);
        let (x, y) = (alpha_i(i, a).unwrap(), alpha_i(j, b).unwrap());
        assert_close(&x.compose(&y), &y.compose(&x), "alpha_i commute");
    }
}

#[test]
fn beta_nu_matches_exponential() {
    let mut rng = rng();
    for _ in 0..DRAWS {
        let nu = rc(&mut rng);
        assert_close(&beta_nu(nu), &beta_nu_generator(nu).expm(), "beta_nu");
        let p = Pc::xi_only(c(1.0, 0.0));
        assert!((beta_nu(nu).apply_vec(&p).xi - (nu * -2.0).exp()).norm() < 1e-12);
    }
}

#[test]
fn psi_sl2_matches_exponential_and_is_a_homomorphism() {
    let mut rng = rng();
    for _ in 0..DRAWS {
        let (nu, a, b) = (rc(&mut rng), rc(&mut rng), rc(&mut rng));
        let m = exp_sl2(nu, a, b);
        assert_close(&psi_sl2(&m).unwrap(), &psi_generator(nu, a, b).expm(), "psi");
        let m2 = exp_sl2(rc(&mut rng), rc(&mut rng), rc(&mut rng));
        let lhs = psi_sl2(&matmul2(&m, &m2)).unwrap();
        let rhs = psi_sl2(&m).unwrap().compose(&psi_sl2(&m2).unwrap());
        assert_close(&lhs, &rhs, "psi homomorphism");
    }
    let id = [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
    assert!(psi_sl2(&id).unwrap().near(&LinearEndo::identity(56), 0.0));
    let bad = [[c(2.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]];
    assert!(psi_sl2(&bad).is_err());
}

#[test]
fn kappa_mu_commute_with_the_fifth_sphere_flows() {
    let mut rng = rng();
    let kappa = LinearEndo::of_map(|p: &Pc| p.kappa());
    let mu = LinearEndo::of_map(|p: &Pc| p.mu());
    let s4 = LinearEndo::of_map(|p: &Pc| p.sigma4());
    for _ in 0..5 {
        let flows = [alpha_i(2, rc(&mut rng)).unwrap(), alpha_i(3, rc(&mut rng)).unwrap(), beta_nu(rc(&mut rng))];
        for f in &flows {
            assert_close(&f.compose(&kappa), &kappa.compose(f), "kappa");
            assert_close(&f.compose(&mu), &mu.compose(f), "mu");
        }
        let psi = psi_sl2(&exp_sl2(rc(&mut rng), rc(&mut rng), rc(&mut rng))).unwrap();
        assert_close(&psi.compose(&s4), &s4.compose(&psi), "psi sigma'4");
    }
}

#[test]
fn lift_to_p_is_an_e7_element() {
    let mut rng = rng();
    let t = roct(&mut rng, 0..2);
    let a = beta1(&t).unwrap();
    let ai = beta1(&t.neg()).unwrap();
    let lift = lift_to_p(&a, &ai);
    let gen = beta1_generator(&t);
    let e6 = e8kit::lie::e6::extract_e6(|x: &Jc| gen.apply_vec(x));
    let phi = e8kit::lie::E7::from_e6(e6);
    assert_close(&lift, &e7_matrix(&phi).expm(), "lift");
}
