//! Reductions of points of the complex spheres to their basepoints.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::flows::{c, Oct, C64};
use super::{c64, FlowStep, Recorder, Space, Witness};
use crate::error::{Error, Result};
use crate::freudenthal::PVec;
use crate::jordan::Jordan;
use crate::lie::E7;
use crate::space::Vector;

/// Branch threshold for vanishing real parts and similar tests.
pub const BRANCH_EPS: f64 = 1e-12;
/// Threshold for "nonzero" in case analyses.
pub const CASE_EPS: f64 = 1e-10;
/// Accepted residual at the basepoint.
pub const RESIDUAL_TOL: f64 = 1e-9;
/// Maximal number of random preambles.
pub const MAX_RETRIES: usize = 5;

fn zero() -> C64 {
    c64(0.0)
}

/// The angle `s` with `tan s = num / den`: zero when `num` vanishes,
/// `pi/2` when only `den` vanishes.
fn angle(num: f64, den: f64) -> f64 {
    if num.abs() < BRANCH_EPS {
        0.0
    } else if den.abs() < BRANCH_EPS {
        std::f64::consts::FRAC_PI_2
    } else {
        (num / den).atan()
    }
}

fn rand_c(rng: &mut ChaCha8Rng) -> C64 {
    c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// First index `m` of the octonion coordinates on the sphere of dimension `k`.
fn first_index(k: usize) -> usize {
    7 - k
}

/// The point `F1(t)` where `t` lists the `k + 1` coefficients of
/// `e_{7-k}, ..., e_7`.
///
/// # Panics
/// If `t` has more than `k + 1` entries.
pub fn sphere_f1_point(k: usize, t: &[C64]) -> Jordan<C64> {
    assert!(t.len() <= k + 1, "sphere of dimension {k} takes at most {} coefficients", k + 1);
    let m = first_index(k);
    let mut o = Oct::zero();
    for (n, z) in t.iter().enumerate() {
        o.0[m + n] = *z;
    }
    Jordan::f(1, o)
}

/// A random point of the sphere `{F1(t) | (t, t) = 1}` of dimension `k`.
pub fn random_sphere_f1(k: usize, rng: &mut ChaCha8Rng) -> Jordan<C64> {
    loop {
        let t: Vec<C64> = (0..=k).map(|_| rand_c(rng)).collect();
        let n2: C64 = t.iter().map(|z| z * z).sum();
        if n2.norm() > 0.1 {
            let s = n2.sqrt();
            return sphere_f1_point(k, &t.iter().map(|z| z / s).collect::<Vec<_>>());
        }
    }
}

fn check_sphere_f1(x: &Jordan<C64>, k: usize, tol: f64) -> Result<()> {
    if !(2..=5).contains(&k) {
        return Err(Error::Precondition(format!("sphere dimension {k} not in 2..=5")));
    }
    let m = first_index(k);
    let mut rest = x.clone();
    rest.x[0] = Oct::zero();
    let stray = rest.to_coords().iter().map(|z| z.norm()).fold(0.0, f64::max);
    let outside = x.x[0].0[..m].iter().map(|z| z.norm()).fold(0.0, f64::max);
    let n = x.x[0].norm();
    if stray > tol || outside > tol || (n - c64(1.0)).norm() > tol {
        return Err(Error::Precondition(format!(
            "not on the sphere of dimension {k}: (t, t) = {n}, stray coordinates {:.2e}",
            stray.max(outside)
        )));
    }
    Ok(())
}

fn g(r: &mut Recorder, i: usize, j: usize, s: C64) -> Result<()> {
    if s.norm() == 0.0 {
        return Ok(());
    }
    r.push(FlowStep::GRot { i, j, s })
}

fn t_of(r: &Recorder) -> [C64; 8] {
    r.jx().x[0].0
}

/// The step recipe on the sphere of dimension `k`, without retries.
fn sphere_f1_recipe(r: &mut Recorder, k: usize) -> Result<()> {
    let m0 = first_index(k);
    for m in m0..5 {
        let t = t_of(r);
        g(r, m, m + 1, c64(angle(-t[m].re, t[m + 1].re)))?;
        let t = t_of(r);
        g(r, m + 1, m + 2, c64(angle(-t[m + 1].re, t[m + 2].re)))?;
        let t = t_of(r);
        g(r, m, m + 1, c64(angle(-t[m].im, t[m + 1].im)))?;
    }
    let t = t_of(r);
    g(r, 5, 6, c64(angle(t[6].re, t[5].re)))?;
    let t = t_of(r);
    g(r, 5, 7, c64(angle(t[7].re, t[5].re)))?;
    let t = t_of(r);
    g(r, 6, 7, c64(angle(t[7].im, t[6].im)))?;
    let t = t_of(r);
    if t[5].re.abs() < BRANCH_EPS {
        return Err(Error::Internal("t5 vanished in the hyperbolic step".into()));
    }
    let th = t[6].im / t[5].re;
    if th.abs() >= 1.0 {
        return Err(Error::Internal(format!("tanh s3 = {th} out of range")));
    }
    g(r, 5, 6, c(0.0, th.atanh()))?;
    if t_of(r)[5].re < 0.0 {
        g(r, 5, 7, c64(std::f64::consts::PI))?;
    }
    for m in (m0..5).rev() {
        g(r, m, m + 1, c64(std::f64::consts::FRAC_PI_2))?;
    }
    Ok(())
}

/// Runs `recipe` from `start`; on failure or a large residual, prepends one
/// random step from `preamble` and tries again, up to [`MAX_RETRIES`] times.
fn with_retries(
    space: Space,
    context: String,
    start: Vec<C64>,
    target: Vec<C64>,
    rng: &mut ChaCha8Rng,
    preamble: impl Fn(&mut ChaCha8Rng) -> FlowStep,
    recipe: impl Fn(&mut Recorder) -> Result<()>,
) -> Result<Witness> {
    let mut retries = Vec::new();
    let mut pre: Vec<FlowStep> = Vec::new();
    for attempt in 0..=MAX_RETRIES {
        let mut r = Recorder::new(space, start.clone());
        if super::dist(&start, &target) <= RESIDUAL_TOL {
            return Ok(r.finish(context, start, target, retries));
        }
        for s in &pre {
            r.push(s.clone())?;
        }
        let outcome = recipe(&mut r);
        let residual = super::dist(&r.state, &target);
        match outcome {
            Ok(()) if residual <= RESIDUAL_TOL => return Ok(r.finish(context, start, target, retries)),
            Ok(()) => retries.push(format!("attempt {attempt}: residual {residual:.3e}")),
            Err(e) => retries.push(format!("attempt {attempt}: {e}")),
        }
        pre.push(preamble(rng));
    }
    Err(Error::Internal(format!("{context}: no witness after {MAX_RETRIES} retries: {}", retries.join("; "))))
}

/// Reduces `F1(t)` on the sphere of dimension `k` (2..=5) to `F1(e_{7-k})`.
pub fn reduce_sphere_f1(x: &Jordan<C64>, k: usize, tol: f64, rng: &mut ChaCha8Rng) -> Result<Witness> {
    check_sphere_f1(x, k, tol)?;
    let m = first_index(k);
    let target = Jordan::<C64>::fe(1, m).to_coords();
    with_retries(
        Space::J,
        format!("sphere F1 k={k}"),
        x.to_coords(),
        target,
        rng,
        |rng| {
            let i = rng.random_range(m..7);
            let j = rng.random_range(i + 1..8);
            FlowStep::GRot { i, j, s: c64(rng.random_range(0.0..std::f64::consts::TAU)) }
        },
        |r| sphere_f1_recipe(r, k),
    )
}

/// The four spheres in the second sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SphereVariant {
    /// `diag(0, xi, -xi) + F1(x)`, `xi^2 + x conj(x) = 1`, in J.
    S2Minus,
    /// `diag(0, xi2, xi3) + F1(x)`, `-xi2 xi3 + x conj(x) = 1`, in J.
    S3Minus,
    /// `(diag(0, xi2, xi3) + F1(x), -eta E1, 0, eta)`, norm 1, in P.
    S4Minus,
    /// `(diag(0, xi2, xi3) + F1(x), eta1 E1, 0, eta)`, norm 1, in P.
    S5Minus,
}

impl SphereVariant {
    pub const ALL: [SphereVariant; 4] =
        [SphereVariant::S2Minus, SphereVariant::S3Minus, SphereVariant::S4Minus, SphereVariant::S5Minus];

    pub fn name(self) -> &'static str {
        match self {
            SphereVariant::S2Minus => "S2minus",
            SphereVariant::S3Minus => "S3minus",
            SphereVariant::S4Minus => "S4minus",
            SphereVariant::S5Minus => "S5minus",
        }
    }

    pub fn space(self) -> Space {
        match self {
            SphereVariant::S2Minus | SphereVariant::S3Minus => Space::J,
            _ => Space::P,
        }
    }

    /// Coordinates of the basepoint.
    pub fn basepoint(self) -> Vec<C64> {
        let i = c(0.0, 1.0);
        let e = |k| Jordan::<C64>::e(k);
        match self {
            SphereVariant::S2Minus => e(2).sub(&e(3)).to_coords(),
            SphereVariant::S3Minus => e(2).add(&e(3)).scale(&i).to_coords(),
            SphereVariant::S4Minus => PVec::new(Jordan::zero(), e(1).scale(&-i), zero(), i).to_coords(),
            SphereVariant::S5Minus => PVec::new(Jordan::zero(), e(1), zero(), c64(1.0)).to_coords(),
        }
    }
}

/// Coordinates `(xi2, xi3, x, eta1, eta)` of a point of one of the spheres.
struct Minus {
    xi2: C64,
    xi3: C64,
    x: Oct,
    eta1: C64,
    eta: C64,
}

fn in_c(x: &Oct) -> bool {
    x.0[2..].iter().all(|z| z.norm() == 0.0)
}

fn minus_point(v: SphereVariant, p: &Minus) -> Vec<C64> {
    let mut j = Jordan::<C64>::diag(zero(), p.xi2, p.xi3);
    j.x[0] = p.x.clone();
    match v {
        SphereVariant::S2Minus | SphereVariant::S3Minus => j.to_coords(),
        SphereVariant::S4Minus | SphereVariant::S5Minus => {
            PVec::new(j, Jordan::e(1).scale(&p.eta1), zero(), p.eta).to_coords()
        }
    }
}

/// Norm `-xi2 xi3 + x conj(x) + eta1 eta` common to all variants.
fn minus_norm(p: &Minus) -> C64 {
    -p.xi2 * p.xi3 + p.x.norm() + p.eta1 * p.eta
}

/// Reads a point of the variant's ambient subspace, checking its shape.
fn read_minus(v: SphereVariant, coords: &[C64], tol: f64) -> Result<Minus> {
    let bad = |what: &str| Err(Error::Precondition(format!("{}: {what}", v.name())));
    let (x, y, xi, eta) = match v.space() {
        Space::J => (Jordan::from_coords(coords), Jordan::zero(), zero(), zero()),
        _ => {
            let p = PVec::from_coords(coords);
            (p.x, p.y, p.xi, p.eta)
        }
    };
    let mut xo = x.x[0].clone();
    if xo.0[2..].iter().any(|z| z.norm() > tol) {
        return bad("x1 must lie in span(e0, e1)");
    }
    xo.0[2..].iter_mut().for_each(|z| *z = zero());
    let stray = [x.xi[0].norm(), xi.norm()]
        .into_iter()
        .chain(x.x[1].0.iter().chain(&x.x[2].0).map(|z| z.norm()))
        .chain(y.xi[1..].iter().map(|z| z.norm()))
        .chain(y.x.iter().flat_map(|o| o.0.iter().map(|z| z.norm())))
        .fold(0.0, f64::max);
    if stray > tol {
        return bad("coordinates outside the sphere's ambient space");
    }
    let p = Minus { xi2: x.xi[1], xi3: x.xi[2], x: xo, eta1: y.xi[0], eta };
    match v {
        SphereVariant::S2Minus if (p.xi2 + p.xi3).norm() > tol => return bad("xi3 must equal -xi2"),
        SphereVariant::S4Minus if (p.eta1 + p.eta).norm() > tol => return bad("eta1 must equal -eta"),
        _ => {}
    }
    if (minus_norm(&p) - c64(1.0)).norm() > tol {
        return bad(&format!("norm is {}, expected 1", minus_norm(&p)));
    }
    Ok(p)
}

/// A random point of the variant's sphere.
pub fn random_sphere_minus(v: SphereVariant, rng: &mut ChaCha8Rng) -> Vec<C64> {
    loop {
        let mut x = Oct::zero();
        x.0[0] = rand_c(rng);
        x.0[1] = rand_c(rng);
        let xi2 = rand_c(rng);
        if xi2.norm() < 0.2 {
            continue;
        }
        let (eta1, eta) = match v {
            SphereVariant::S2Minus | SphereVariant::S3Minus => (zero(), zero()),
            SphereVariant::S4Minus => {
                let e = rand_c(rng);
                (-e, e)
            }
            SphereVariant::S5Minus => (rand_c(rng), rand_c(rng)),
        };
        let xi3 = match v {
            SphereVariant::S2Minus => {
                let s = (c64(1.0) - x.norm()).sqrt();
                return minus_point(v, &Minus { xi2: s, xi3: -s, x, eta1, eta });
            }
            _ => (x.norm() + eta1 * eta - c64(1.0)) / xi2,
        };
        return minus_point(v, &Minus { xi2, xi3, x, eta1, eta });
    }
}

/// Builds a point of the variant from its coordinates.
pub fn sphere_minus_point(v: SphereVariant, xi2: C64, xi3: C64, x: Oct, eta1: C64, eta: C64) -> Vec<C64> {
    minus_point(v, &Minus { xi2, xi3, x, eta1, eta })
}

fn current(r: &Recorder) -> Minus {
    let j = r.jx();
    let (eta1, eta) = match r.space {
        Space::J => (zero(), zero()),
        _ => {
            let p = r.pvec();
            (p.y.xi[0], p.eta)
        }
    };
    Minus { xi2: j.xi[1], xi3: j.xi[2], x: j.x[0].clone(), eta1, eta }
}

/// Whether the current point is `(xi2, xi3, 0, eta1, eta)` for the given values.
fn at(r: &Recorder, xi2: C64, xi3: C64, eta1: C64, eta: C64) -> bool {
    let p = current(r);
    let d = [p.xi2 - xi2, p.xi3 - xi3, p.eta1 - eta1, p.eta - eta].into_iter().map(|z| z.norm());
    d.chain(p.x.0.iter().map(|z| z.norm())).fold(0.0, f64::max) <= BRANCH_EPS
}

/// `diag(0, xi, -xi) + F1(x)` to `E2 - E3`.
fn s2_recipe(r: &mut Recorder) -> Result<()> {
    if at(r, c64(1.0), c64(-1.0), zero(), zero()) {
        return Ok(());
    }
    let q = std::f64::consts::FRAC_PI_4;
    let p = current(r);
    if p.xi2.norm() > BRANCH_EPS {
        let xx = p.x.norm();
        let a = if p.x.0.iter().all(|z| z.norm() < BRANCH_EPS) {
            Oct::basis(0).scale(&c64(q))
        } else if xx.norm() < CASE_EPS {
            return Err(Error::Internal("x is isotropic and nonzero".into()));
        } else {
            let mut a = Oct::zero();
            a.0[0] = -p.x.0[1];
            a.0[1] = p.x.0[0];
            a.scale(&(c64(q) / xx.sqrt()))
        };
        r.push(FlowStep::AlphaA1 { a })?;
    }
    let x1 = current(r).x;
    r.push(FlowStep::AlphaA1 { a: x1.scale(&c64(q)) })
}

/// `diag(0, xi2, xi3) + F1(x)` with `-xi2 xi3 + x conj(x) = 1` to `i(E2 + E3)`.
fn s3_recipe(r: &mut Recorder) -> Result<()> {
    let i = c(0.0, 1.0);
    if at(r, i, i, zero(), zero()) {
        return Ok(());
    }
    let p = current(r);
    let xx = p.x.norm();
    if xx.norm() > CASE_EPS {
        let e1x = Oct::basis(1).mul(&p.x);
        let t = e1x.scale(&(c(0.0, std::f64::consts::FRAC_PI_2) / xx.sqrt()));
        r.push(FlowStep::Beta1 { t })?;
    } else {
        // Here xi2 xi3 = -1, so alpha23(-Log xi2) gives diag(0, 1, -1) + F1(x).
        r.push(FlowStep::Alpha23 { c: -p.xi2.ln() })?;
    }
    s2_recipe(r)?;
    r.push(FlowStep::Alpha23 { c: c(0.0, std::f64::consts::FRAC_PI_2) })
}

/// `exp Phi(0, c(E2 + E3), -c(E2 + E3), 0)`, which equals `alpha2(c) alpha3(c)`
/// for real `c`.
fn alpha23_e7(cc: C64) -> FlowStep {
    let e23 = Jordan::<C64>::e(2).add(&Jordan::e(3));
    FlowStep::ExpPhi { phi: E7::new(Vector::zero(), e23.scale(&cc), e23.scale(&-cc), zero()) }
}

/// A point of the fourth sphere to `(0, -i E1, 0, i)`.
fn s4_recipe(r: &mut Recorder) -> Result<()> {
    let i = c(0.0, 1.0);
    if at(r, zero(), zero(), -i, i) {
        return Ok(());
    }
    let p = current(r);
    let u = p.xi2 + p.xi3;
    if p.eta.norm() > BRANCH_EPS {
        // Real step zeroing Re(eta).
        let mut a = if u.re.abs() < BRANCH_EPS {
            std::f64::consts::FRAC_PI_4
        } else {
            0.5 * (2.0 * p.eta.re / u.re).atan()
        };
        if a < 0.0 {
            a += std::f64::consts::FRAC_PI_2;
        }
        if a != 0.0 {
            r.push(FlowStep::AlphaI { i: 2, a: c64(a) })?;
            r.push(FlowStep::AlphaI { i: 3, a: c64(a) })?;
        }
        // Complex step zeroing what remains of eta.
        let p = current(r);
        if p.eta.norm() > BRANCH_EPS {
            let u = p.xi2 + p.xi3;
            let cc = if u.norm() < BRANCH_EPS {
                c64(std::f64::consts::FRAC_PI_4)
            } else {
                let w = c64(2.0) * p.eta / u;
                if (w * w + c64(1.0)).norm() < CASE_EPS {
                    return Err(Error::Internal("(xi2 + xi3)^2 / 4 + eta^2 vanishes".into()));
                }
                w.atan() / 2.0
            };
            r.push(alpha23_e7(cc))?;
        }
    }
    s3_recipe(r)?;
    let q = -std::f64::consts::FRAC_PI_4;
    r.push(FlowStep::AlphaI { i: 2, a: c64(q) })?;
    r.push(FlowStep::AlphaI { i: 3, a: c64(q) })
}

fn exp_phi_ab(a: Jordan<C64>, b: Jordan<C64>) -> FlowStep {
    FlowStep::ExpPhi { phi: E7::new(Vector::zero(), a, b, zero()) }
}

/// Picks a real `t` in {1, 1/2, 1/3} with `|f(t)|` not small.
fn pick_t(f: impl Fn(f64) -> C64) -> f64 {
    [1.0, 0.5, 1.0 / 3.0].into_iter().find(|&t| f(t).norm() > 0.1).unwrap_or(1.0)
}

/// A point of the fifth sphere to `(0, E1, 0, 1)`.
fn s5_recipe(r: &mut Recorder) -> Result<()> {
    let nz = |z: C64| z.norm() > CASE_EPS;
    for _ in 0..4 {
        let p = current(r);
        let e = |k| Jordan::<C64>::e(k);
        match (nz(p.eta1), nz(p.eta)) {
            (true, true) => {
                if (p.eta1 + p.eta).norm() > CASE_EPS {
                    r.push(FlowStep::BetaNu { nu: (-p.eta1 / p.eta).ln() / 4.0 })?;
                }
                break;
            }
            (false, false) => break,
            (false, true) if nz(p.xi2) => r.push(exp_phi_ab(e(3), Jordan::zero()))?,
            (false, true) if nz(p.xi3) => r.push(exp_phi_ab(e(2), Jordan::zero()))?,
            (false, true) => {
                let t = pick_t(|t| c64(2.0 * t) + p.eta * (t * t));
                r.push(exp_phi_ab(Jordan::f(1, p.x.scale(&c64(t))), Jordan::zero()))?;
            }
            (true, false) if nz(p.xi2) => r.push(exp_phi_ab(Jordan::zero(), e(2)))?,
            (true, false) if nz(p.xi3) => r.push(exp_phi_ab(Jordan::zero(), e(3)))?,
            (true, false) => {
                let t = pick_t(|t| c64(2.0 * t) - p.eta1 * (t * t));
                r.push(exp_phi_ab(Jordan::zero(), Jordan::f(1, p.x.scale(&c64(t)))))?;
            }
        }
    }
    let p = current(r);
    if (p.eta1 + p.eta).norm() > 1e-8 {
        return Err(Error::Internal("did not reach the fourth sphere".into()));
    }
    s4_recipe(r)?;
    r.push(FlowStep::BetaNu { nu: c(0.0, -std::f64::consts::FRAC_PI_4) })
}

fn random_c_oct(rng: &mut ChaCha8Rng) -> Oct {
    let mut o = Oct::zero();
    o.0[0] = rand_c(rng);
    o.0[1] = rand_c(rng);
    o
}

/// Reduces a point of one of the spheres to its basepoint.
pub fn reduce_sphere_minus(v: SphereVariant, coords: &[C64], tol: f64, rng: &mut ChaCha8Rng) -> Result<Witness> {
    if coords.len() != v.space().dim() {
        return Err(Error::Precondition(format!("{} expects {} coordinates", v.name(), v.space().dim())));
    }
    read_minus(v, coords, tol)?;
    let preamble = move |rng: &mut ChaCha8Rng| -> FlowStep {
        match v {
            SphereVariant::S2Minus => {
                let mut b = random_c_oct(rng);
                while b.norm().norm() < 0.1 {
                    b = random_c_oct(rng);
                }
                FlowStep::AlphaA1 { a: b }
            }
            SphereVariant::S3Minus => FlowStep::Beta1 { t: random_c_oct(rng) },
            SphereVariant::S4Minus => alpha23_e7(rand_c(rng)),
            SphereVariant::S5Minus => FlowStep::BetaNu { nu: rand_c(rng) },
        }
    };
    debug_assert!(in_c(&read_minus(v, coords, tol)?.x));
    let recipe = move |r: &mut Recorder| match v {
        SphereVariant::S2Minus => s2_recipe(r),
        SphereVariant::S3Minus => s3_recipe(r),
        SphereVariant::S4Minus => s4_recipe(r),
        SphereVariant::S5Minus => s5_recipe(r),
    };
    with_retries(v.space(), v.name().to_string(), coords.to_vec(), v.basepoint(), rng, preamble, recipe)
}
