//! The null cone `W = {R != 0 | R x R = 0}` inside the fixed points of
//! `sigma'4` commuting with so(6): the thirteen component conditions and
//! their agreement with the direct test through `(R x R) R1`.

use crate::e8::{e7_tables, E8};
use crate::freudenthal::PVec;
use crate::lie::structure::StructureConstants;
use crate::lie::E7;
use crate::scalar::Scalar;
use crate::space::Vector;

/// Residual of one condition, maximised over its probe vectors.
#[derive(Clone, Debug)]
pub struct ConditionResidual {
    /// Condition number, 1 to 13.
    pub index: usize,
    /// True when every probe gives an exact zero (or is within `tol`).
    pub zero: bool,
    /// Largest coefficient modulus seen.
    pub max_abs: f64,
}

fn max_abs<S: Scalar>(c: &[S]) -> f64 {
    c.iter().map(|x| x.abs_f64()).fold(0.0, f64::max)
}

struct Acc<S: Scalar> {
    index: usize,
    tol: f64,
    zero: bool,
    max: f64,
    _s: std::marker::PhantomData<S>,
}

impl<S: Scalar> Acc<S> {
    fn new(index: usize, tol: f64) -> Self {
        Acc { index, tol, zero: true, max: 0.0, _s: Default::default() }
    }
    fn push(&mut self, coords: &[S]) {
        let m = max_abs(coords);
        self.max = self.max.max(m);
        let z = if S::EXACT { coords.iter().all(|c| c.is_zero()) } else { m <= self.tol };
        self.zero &= z;
    }
    fn done(self) -> ConditionResidual {
        ConditionResidual { index: self.index, zero: self.zero, max_abs: self.max }
    }
}

/// The thirteen conditions, with probes `Q1`, `P1` over the 56 basis
/// vectors of the Freudenthal space and `Phi1` over the 133 basis vectors
/// of e7.
///
/// Conditions 10 and 11 are evaluated in their consistent reading: the last
/// term of 10 is `-2 {P, P1} Q` and 11 is
/// `18([Phi, [Phi, Phi1]] + Q x Phi1 P - P x Phi1 Q) + B7(Phi, Phi1) Phi`.
pub fn cone_conditions<S: Scalar>(r: &E8<S>, tol: f64) -> Vec<ConditionResidual> {
    let (phi, p, q) = (&r.phi, &r.p, &r.q);
    let (rr, s, t) = (&r.r, &r.s, &r.t);
    let op = phi.op();
    let n = |k: i64| S::from_i64(k);
    let mut out = Vec::with_capacity(13);

    let mut one = |index: usize, coords: Vec<S>| {
        let mut a = Acc::<S>::new(index, tol);
        a.push(&coords);
        out.push(a.done());
    };
    one(1, phi.scale(&(n(2) * s)).sub(&p.cross(p)).to_coords());
    one(2, phi.scale(&(n(2) * t)).add(&q.cross(q)).to_coords());
    one(3, phi.scale(&(n(2) * rr)).add(&p.cross(q)).to_coords());
    let phi_p = op.apply(p);
    let phi_q = op.apply(q);
    one(4, phi_p.sub(&p.scale(&(n(3) * rr))).sub(&q.scale(&(n(3) * s))).to_coords());
    one(5, phi_q.add(&q.scale(&(n(3) * rr))).sub(&p.scale(&(n(3) * t))).to_coords());
    one(6, vec![p.skew(q) - n(16) * (s.clone() * t + rr.clone() * rr)]);

    let (mut c7, mut c8, mut c9, mut c10) =
        (Acc::<S>::new(7, tol), Acc::<S>::new(8, tol), Acc::<S>::new(9, tol), Acc::<S>::new(10, tol));
    let st_r2 = s.clone() * t + rr.clone() * rr;
    for k in 0..56 {
        let v = PVec::<S>::basis(k);
        let phi_v = op.apply(&v);
        let phi2_v = op.apply(&phi_v);
        // Probe as Q1.
        let e7 = phi_p
            .cross(&v)
            .add(&p.cross(&phi_v).scale(&n(2)))
            .sub(&p.cross(&v).scale(rr))
            .sub(&q.cross(&v).scale(s))
            .scale(&n(2))
            .sub(&phi.scale(&p.skew(&v)));
        c7.push(&e7.to_coords());
        let pv = p.cross(&v).act(q);
        let e9 = pv
            .sub(&v.scale(&st_r2))
            .sub(&phi2_v)
            .add(&phi_v.scale(&(n(2) * rr)))
            .scale(&n(8))
            .add(&q.scale(&(n(5) * p.skew(&v))))
            .sub(&p.scale(&(n(2) * q.skew(&v))));
        c9.push(&e9.to_coords());
        // Probe as P1.
        let e8 = phi_q
            .cross(&v)
            .add(&q.cross(&phi_v).scale(&n(2)))
            .add(&q.cross(&v).scale(rr))
            .sub(&p.cross(&v).scale(t))
            .scale(&n(2))
            .sub(&phi.scale(&q.skew(&v)));
        c8.push(&e8.to_coords());
        let qv = q.cross(&v).act(p);
        let e10 = qv
            .add(&v.scale(&st_r2))
            .add(&phi2_v)
            .add(&phi_v.scale(&(n(2) * rr)))
            .scale(&n(8))
            .add(&p.scale(&(n(5) * q.skew(&v))))
            .sub(&q.scale(&(n(2) * p.skew(&v))));
        c10.push(&e10.to_coords());
    }
    out.extend([c7.done(), c8.done(), c9.done(), c10.done()]);

    let (mut c11, mut c12, mut c13) = (Acc::<S>::new(11, tol), Acc::<S>::new(12, tol), Acc::<S>::new(13, tol));
    let tables = e7_tables();
    let b7 = tables.killing_covector(&phi.to_coords());
    let ad = tables.ad_columns(&phi.to_coords());
    for (k, b7k) in b7.iter().enumerate() {
        let op1 = E7::<S>::basis(k).op();
        let mut ad2 = vec![S::zero(); 133];
        for (i, v) in StructureConstants::apply_columns(&ad, &ad[k]) {
            ad2[i] = v;
        }
        let e11 = E7::<S>::from_coords(&ad2)
            .add(&q.cross(&op1.apply(p)))
            .sub(&p.cross(&op1.apply(q)))
            .scale(&n(18))
            .add(&phi.scale(b7k));
        c11.push(&e11.to_coords());
        let e12 = op1
            .apply(&phi_p)
            .sub(&op.apply(&op1.apply(p)).scale(&n(2)))
            .sub(&op1.apply(p).scale(rr))
            .sub(&op1.apply(q).scale(s))
            .scale(&n(18))
            .add(&p.scale(b7k));
        c12.push(&e12.to_coords());
        let e13 = op1
            .apply(&phi_q)
            .sub(&op.apply(&op1.apply(q)).scale(&n(2)))
            .add(&op1.apply(q).scale(rr))
            .sub(&op1.apply(p).scale(t))
            .scale(&n(18))
            .add(&q.scale(b7k));
        c13.push(&e13.to_coords());
    }
    out.extend([c11.done(), c12.done(), c13.done()]);
    out
}

/// True when all thirteen conditions hold.
pub fn cone_conditions_hold<S: Scalar>(r: &E8<S>, tol: f64) -> bool {
    cone_conditions(r, tol).iter().all(|c| c.zero)
}

/// `exp(ad x) r` for nilpotent `ad x`, summed until a term vanishes.
/// Returns `None` if no term vanishes within `max_terms`.
pub fn exp_ad_nilpotent<S: Scalar>(x: &E8<S>, r: &E8<S>, max_terms: usize) -> Option<E8<S>> {
    let mut acc = r.clone();
    let mut term = r.clone();
    for k in 1..=max_terms {
        term = x.bracket(&term).scale(&S::ratio(1, k as i64));
        if term.is_zero() {
            return Some(acc);
        }
        acc = acc.add(&term);
    }
    None
}

/// Splits an element into the pieces of the grading by `ad 1~`:
/// degree 2 (`s`), 1 (`P`), 0 (`Phi`, `r`), -1 (`Q`), -2 (`t`).
pub fn graded_parts<S: Scalar>(r: &E8<S>) -> [E8<S>; 5] {
    let z = E8::<S>::zero;
    [
        E8 { s: r.s.clone(), ..z() },
        E8 { p: r.p.clone(), ..z() },
        E8 { phi: r.phi.clone(), r: r.r.clone(), ..z() },
        E8 { q: r.q.clone(), ..z() },
        E8 { t: r.t.clone(), ..z() },
    ]
}
