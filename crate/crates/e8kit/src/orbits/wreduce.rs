//! The closed form of `(exp Theta) 1_-` and the reduction of points of the
//! null cone `W` (inside the fixed set of `sigma'4` and the so(6)-commutant)
//! to `1_-`.

use std::sync::OnceLock;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::flows::{c, C64};
use super::sphere::MAX_RETRIES;
use super::{c64, FlowStep, Recorder, Space, Witness};
use crate::dims::run_dimension_check;
use crate::e8::E8;
use crate::error::{Error, Result};
use crate::freudenthal::PVec;
use crate::lie::{E6, E7};
use crate::scalar::Cq;
use crate::space::{to_approx, Vector};
use crate::subalgebra::{so6_generators, Ambient, Constraint, ConstraintSet};
use crate::wspace::cone_conditions_hold;

fn max_abs<V: Vector<C64>>(v: &V) -> f64 {
    v.to_coords().iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `exp(ad x) r` by scaling and a Taylor series on the vector.
pub fn exp_ad(x: &E8<C64>, r: &E8<C64>) -> E8<C64> {
    let nx = max_abs(x);
    if nx == 0.0 {
        return r.clone();
    }
    let m = (nx * 2.0).ceil().max(1.0) as usize;
    let xs = x.scale(&c64(1.0 / m as f64));
    let mut v = r.clone();
    for _ in 0..m {
        let mut acc = v.clone();
        let mut term = v;
        for k in 1..=80 {
            term = xs.bracket(&term).scale(&c64(1.0 / k as f64));
            acc = acc.add(&term);
            if max_abs(&term) <= 1e-18 * max_abs(&acc).max(1.0) {
                break;
            }
        }
        v = acc;
    }
    v
}

/// `sum_k c_k exp(a_k r) / r^m`, by its power series when `|r| < 1`.
///
/// The numerator must vanish to order `m` at zero.
fn exp_ratio(terms: &[(f64, f64)], m: i32, r: C64) -> C64 {
    if r.norm() >= 1.0 {
        let num: C64 = terms.iter().map(|&(ck, ak)| (r * ak).exp() * ck).sum();
        return num / r.powi(m);
    }
    let mut acc = c64(0.0);
    let mut fact = 1.0;
    for n in 0..(m as usize + 60) {
        if n > 0 {
            fact *= n as f64;
        }
        if n < m as usize {
            continue;
        }
        let moment: f64 = terms.iter().map(|&(ck, ak)| ck * ak.powi(n as i32)).sum();
        acc += r.powi(n as i32 - m) * (moment / fact);
    }
    acc
}

/// `(exp Theta) 1_-` for `Theta = (0, P1, 0, r1, s1, 0)`, in closed form.
pub fn exp_theta_closed_form(p1: &PVec<C64>, r1: C64, s1: C64) -> E8<C64> {
    let pp = p1.cross(p1);
    let ppp = pp.act(p1);
    let quart = p1.skew(&ppp);
    let f_phi = exp_ratio(&[(1.0, -2.0), (-2.0, -1.0), (1.0, 0.0)], 2, r1);
    let f_p1 = exp_ratio(&[(-1.0, -2.0), (-1.0, 1.0), (1.0, -1.0), (1.0, 0.0)], 2, r1);
    let f_p2 = exp_ratio(&[(-1.0, -2.0), (1.0, 1.0), (3.0, -1.0), (-3.0, 0.0)], 3, r1);
    let f_q = exp_ratio(&[(1.0, -2.0), (-1.0, -1.0)], 1, r1);
    let f_r = exp_ratio(&[(1.0, 0.0), (-1.0, -2.0)], 1, r1);
    let f_s1 = exp_ratio(&[(1.0, -2.0), (1.0, 2.0), (-2.0, 0.0)], 2, r1);
    let f_s2 = exp_ratio(&[(1.0, 2.0), (1.0, -2.0), (-4.0, 1.0), (-4.0, -1.0), (6.0, 0.0)], 4, r1);
    E8 {
        phi: pp.scale(&(-f_phi / 2.0)),
        p: p1.scale(&(s1 / 2.0 * f_p1)).add(&ppp.scale(&(f_p2 / 6.0))),
        q: p1.scale(&f_q),
        r: s1 / 2.0 * f_r,
        s: -(s1 * s1) / 4.0 * f_s1 + quart * f_s2 / 96.0,
        t: (r1 * -2.0).exp(),
    }
}

/// Bases of the graded pieces of the fixed algebra: degree 0 inside e7
/// and the common P-part of degrees 1 and -1.
pub struct FixedBasis {
    pub e7: Vec<E7<C64>>,
    pub p: Vec<PVec<C64>>,
}

fn normalize<V: Vector<C64>>(v: V) -> V {
    let m = max_abs(&v);
    v.scale(&c64(1.0 / m))
}

/// Exact bases of the graded pieces of the fixed algebra: degree 0 inside
/// e7 and the common P-part of degrees 1 and -1.
pub struct ExactFixedBasis {
    pub e7: Vec<E7<Cq>>,
    pub p: Vec<PVec<Cq>>,
}

/// The exact bases, computed once.
pub fn fixed_basis_exact() -> &'static ExactFixedBasis {
    static CELL: OnceLock<ExactFixedBasis> = OnceLock::new();
    CELL.get_or_init(|| {
        let e7 = run_dimension_check(5).cert.basis.iter().map(|v| E7::from_coords(v)).collect();
        let mut cs = ConstraintSet::new(Ambient::P);
        cs.push(Constraint::fixed_by("sigma'4 P = P", 56, |j| PVec::<Cq>::basis(j).sigma4().to_coords()));
        for (n, g) in so6_generators::<Cq>().into_iter().enumerate() {
            let phi = E7::from_e6(E6::from_f4(g));
            cs.push(Constraint::linear(format!("Phi_D P = 0, generator {n}"), 56, move |j| {
                phi.act(&PVec::basis(j)).to_coords()
            }));
        }
        let p = cs.solve().expect("well-formed constraints").basis.iter().map(|v| PVec::from_coords(v)).collect();
        ExactFixedBasis { e7, p }
    })
}

/// The cached bases, rounded and normalized.
pub fn fixed_basis() -> &'static FixedBasis {
    static CELL: OnceLock<FixedBasis> = OnceLock::new();
    CELL.get_or_init(|| {
        let ex = fixed_basis_exact();
        let e7 = ex.e7.iter().map(|v| normalize(to_approx::<E7<Cq>, E7<C64>>(v))).collect();
        let p = ex.p.iter().map(|v| normalize(to_approx::<PVec<Cq>, PVec<C64>>(v))).collect();
        FixedBasis { e7, p }
    })
}

impl FixedBasis {
    /// All 45 basis vectors of the fixed algebra inside e8.
    pub fn e8_basis(&self) -> Vec<E8<C64>> {
        let one = |f: fn() -> E8<C64>| f();
        let mut out: Vec<E8<C64>> = self.e7.iter().map(|x| E8::from_e7(x.clone())).collect();
        out.push(one(E8::one_r));
        out.extend(self.p.iter().map(|p| E8 { p: p.clone(), ..E8::zero() }));
        out.extend(self.p.iter().map(|q| E8 { q: q.clone(), ..E8::zero() }));
        out.push(one(E8::one_s));
        out.push(one(E8::one_t));
        out
    }

    /// A random element of the fixed algebra with coefficients of modulus
    /// at most `scale`.
    pub fn random_element(&self, scale: f64, rng: &mut ChaCha8Rng) -> E8<C64> {
        let mut acc = E8::zero();
        for b in self.e8_basis() {
            let z = c(rng.random_range(-scale..scale), rng.random_range(-scale..scale));
            acc = acc.axpy(&z, &b);
        }
        acc
    }

    /// A random element of degree 0 (e7-part and `r`).
    pub fn random_degree0(&self, scale: f64, rng: &mut ChaCha8Rng) -> E8<C64> {
        let mut acc = E8::zero();
        for b in &self.e7 {
            let z = c(rng.random_range(-scale..scale), rng.random_range(-scale..scale));
            acc.phi = acc.phi.axpy(&z, b);
        }
        acc.r = c(rng.random_range(-scale..scale), rng.random_range(-scale..scale));
        acc
    }
}

/// Largest defect of `sigma'4 R = R` and `[R_D, R] = 0` over so(6).
pub fn fixed_defect(r: &E8<C64>) -> f64 {
    let mut d = r.sigma4().dist(r);
    for g in so6_generators::<C64>() {
        let rd = E8::from_e7(E7::from_e6(E6::from_f4(g)));
        d = d.max(max_abs(&rd.bracket(r)));
    }
    d
}

/// Checks membership in `W` and in the fixed set, relative to the size of `R`.
pub fn check_w_member(r: &E8<C64>, tol: f64) -> Result<()> {
    let scale = max_abs(r);
    if scale == 0.0 {
        return Err(Error::Precondition("R = 0 is not in W".into()));
    }
    let fd = fixed_defect(r);
    if fd > tol * scale.max(1.0) {
        return Err(Error::Precondition(format!("R is not in the fixed set (defect {fd:.3e})")));
    }
    if !cone_conditions_hold(r, tol * scale.max(1.0).powi(3)) {
        return Err(Error::Precondition("R x R does not vanish".into()));
    }
    Ok(())
}

/// The case of the reduction that applies to a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WCase {
    /// `t != 0`.
    I,
    /// `t = 0`, `s != 0`.
    II,
    /// `s = t = 0`, `r != 0`.
    III,
    /// `r = s = t = 0`, `Q != 0`.
    IV,
    /// Only `Phi` and `P`, with `P != 0`.
    V,
    /// Only `Phi`.
    VI,
}

/// Classifies a point of `W`, treating entries below `eps` as zero.
pub fn classify(r: &E8<C64>, eps: f64) -> Option<WCase> {
    if r.t.norm() > eps {
        Some(WCase::I)
    } else if r.s.norm() > eps {
        Some(WCase::II)
    } else if r.r.norm() > eps {
        Some(WCase::III)
    } else if max_abs(&r.q) > eps {
        Some(WCase::IV)
    } else if max_abs(&r.p) > eps {
        Some(WCase::V)
    } else if max_abs(&r.phi) > eps {
        Some(WCase::VI)
    } else {
        None
    }
}

/// The `Theta` with `(exp Theta) 1_- = R`, for `R` in case (i).
pub fn case_i_theta(r: &E8<C64>) -> (PVec<C64>, C64, C64) {
    let r1 = -r.t.ln() / 2.0;
    // (e^{-2 r1} - e^{-r1}) / r1 and (1 - e^{-2 r1}) / (2 r1).
    let fq = exp_ratio(&[(1.0, -2.0), (-1.0, -1.0)], 1, r1);
    let fr = exp_ratio(&[(1.0, 0.0), (-1.0, -2.0)], 1, r1) / 2.0;
    (r.q.scale(&(c64(1.0) / fq)), r1, r.r / fr)
}

fn theta_p(p: PVec<C64>) -> E8<C64> {
    E8 { p, ..E8::zero() }
}

fn argmax<T>(items: &[T], f: impl Fn(&T) -> f64) -> Option<&T> {
    items.iter().max_by(|a, b| f(a).total_cmp(&f(b)))
}

fn w_recipe(rec: &mut Recorder, eps_rel: f64) -> Result<()> {
    let basis = fixed_basis();
    for _ in 0..12 {
        let r = rec.e8();
        let eps = eps_rel * max_abs(&r).max(1.0);
        let case = classify(&r, eps).ok_or_else(|| Error::Internal("point collapsed to zero".into()))?;
        let step = match case {
            WCase::I => {
                let (p1, r1, s1) = case_i_theta(&r);
                let theta = E8 { p: p1, r: r1, s: s1, ..E8::zero() };
                rec.push(FlowStep::ExpTheta { x: theta.neg() })?;
                return Ok(());
            }
            WCase::II => E8 {
                s: c64(std::f64::consts::FRAC_PI_2),
                t: c64(-std::f64::consts::FRAC_PI_2),
                ..E8::zero()
            },
            WCase::III => theta_p(r.q.clone()),
            WCase::IV => theta_p(argmax(&basis.p, |p1| p1.skew(&r.q).norm()).unwrap().clone()),
            WCase::V => {
                let q1 = argmax(&basis.p, |q1| r.p.skew(q1).norm()).unwrap().clone();
                E8 { q: q1, ..E8::zero() }
            }
            WCase::VI => {
                let op = r.phi.op();
                theta_p(argmax(&basis.p, |p1| max_abs(&op.apply(p1))).unwrap().clone())
            }
        };
        rec.push(FlowStep::ExpTheta { x: step })?;
    }
    Err(Error::Internal("reduction did not reach case (i)".into()))
}

/// Reduces a point of `W` in the fixed set to `1_-`.
pub fn reduce_w(r: &E8<C64>, tol: f64, rng: &mut ChaCha8Rng) -> Result<Witness> {
    check_w_member(r, tol)?;
    let start = r.to_coords();
    let target = E8::<C64>::one_t().to_coords();
    let accept = 1e-8 * max_abs(r).max(1.0);
    let mut retries = Vec::new();
    let mut pre: Vec<FlowStep> = Vec::new();
    for attempt in 0..=MAX_RETRIES {
        let mut rec = Recorder::new(Space::E8, start.clone());
        if super::dist(&start, &target) <= accept {
            return Ok(rec.finish("W".into(), start, target, retries));
        }
        for s in &pre {
            rec.push(s.clone())?;
        }
        match w_recipe(&mut rec, 1e-9) {
            Ok(()) => {
                let res = super::dist(&rec.state, &target);
                if res <= accept {
                    return Ok(rec.finish("W".into(), start, target, retries));
                }
                retries.push(format!("attempt {attempt}: residual {res:.3e}"));
            }
            Err(e) => retries.push(format!("attempt {attempt}: {e}")),
        }
        pre.push(FlowStep::ExpTheta { x: fixed_basis().random_element(0.3, rng) });
    }
    Err(Error::Internal(format!("W: no witness after {MAX_RETRIES} retries: {}", retries.join("; "))))
}

/// A random point `exp(ad X) 1_-` with `X` random in the fixed algebra.
pub fn random_w_point(scale: f64, rng: &mut ChaCha8Rng) -> E8<C64> {
    exp_ad(&fixed_basis().random_element(scale, rng), &E8::one_t())
}

/// Representatives of each case, moved by a random degree-0 flow.
pub fn w_case_representatives(rng: &mut ChaCha8Rng) -> Vec<(WCase, E8<C64>)> {
    let basis = fixed_basis();
    let xi = PVec::xi_only(c64(1.0));
    let one = c64(1.0);
    let case_v = E8 { p: xi.clone(), ..E8::zero() };
    let mut reps = vec![
        (WCase::II, E8::one_s()),
        (WCase::IV, E8 { q: xi.clone(), ..E8::zero() }),
        (WCase::V, case_v.clone()),
        (WCase::VI, E8::from_e7(E7::new(Vector::zero(), crate::jordan::Jordan::e(1).scale(&one), Vector::zero(), c64(0.0)))),
    ];
    // Case (iii): push a case (v) point one step along a Q-direction.
    let q1 = argmax(&basis.p, |q1| xi.skew(q1).norm()).unwrap().clone();
    let cand = exp_ad(&E8 { q: q1, ..E8::zero() }, &case_v);
    if classify(&cand, 1e-9) == Some(WCase::III) {
        reps.push((WCase::III, cand));
    }
    reps.into_iter()
        .map(|(case, r)| {
            let g = basis.random_degree0(0.3, rng);
            (case, exp_ad(&g, &r))
        })
        .collect()
}
