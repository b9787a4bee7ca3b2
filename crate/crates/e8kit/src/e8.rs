//! The 248-dimensional Lie algebra `e7 + P + P + C + C + C`.

use std::sync::OnceLock;

use crate::freudenthal::PVec;
use crate::lie::e7::E7;
use crate::lie::structure::StructureConstants;
use crate::linalg::{sparse, LinearEndo, Row};
use crate::scalar::{Cq, Scalar};
use crate::space::Vector;

#[derive(Clone, Debug, PartialEq)]
pub struct E8<S: Scalar> {
    pub phi: E7<S>,
    pub p: PVec<S>,
    pub q: PVec<S>,
    pub r: S,
    pub s: S,
    pub t: S,
}

crate::impl_vector_struct!(E8, 248, [phi: E7<S>, p: PVec<S>, q: PVec<S>], [r, s, t]);

/// Coordinate offsets inside the 248-dimensional basis.
pub const OFF_P: usize = 133;
pub const OFF_Q: usize = 189;
pub const IDX_R: usize = 245;
pub const IDX_S: usize = 246;
pub const IDX_T: usize = 247;

impl<S: Scalar> E8<S> {
    pub fn new(phi: E7<S>, p: PVec<S>, q: PVec<S>, r: S, s: S, t: S) -> Self {
        E8 { phi, p, q, r, s, t }
    }

    pub fn from_e7(phi: E7<S>) -> Self {
        E8 { phi, ..Vector::zero() }
    }

    /// `(0, P, Q, r, s, t)`.
    pub fn from_parts(p: PVec<S>, q: PVec<S>, r: S, s: S, t: S) -> Self {
        E8 { phi: Vector::zero(), p, q, r, s, t }
    }

    /// The r-slot unit (written `1~`).
    pub fn one_r() -> Self {
        E8 { r: S::one(), ..Vector::zero() }
    }

    /// The s-slot unit (written `1^-`).
    pub fn one_s() -> Self {
        E8 { s: S::one(), ..Vector::zero() }
    }

    /// The t-slot unit (written `1_-`).
    pub fn one_t() -> Self {
        E8 { t: S::one(), ..Vector::zero() }
    }

    /// The Lie bracket.
    pub fn bracket(&self, o: &Self) -> Self {
        let (a, b) = (self, o);
        let (op1, op2) = (a.phi.op(), b.phi.op());
        let eighth = S::ratio(1, 8);
        let quarter = S::ratio(1, 4);
        let two = S::from_i64(2);

        let mut phi = a.phi.bracket(&b.phi);
        if !a.p.is_zero() && !b.q.is_zero() {
            phi = phi.add(&a.p.cross(&b.q));
        }
        if !b.p.is_zero() && !a.q.is_zero() {
            phi = phi.sub(&b.p.cross(&a.q));
        }

        let p = op1
            .apply(&b.p)
            .sub(&op2.apply(&a.p))
            .add(&b.p.scale(&a.r))
            .sub(&a.p.scale(&b.r))
            .add(&b.q.scale(&a.s))
            .sub(&a.q.scale(&b.s));
        let q = op1
            .apply(&b.q)
            .sub(&op2.apply(&a.q))
            .sub(&b.q.scale(&a.r))
            .add(&a.q.scale(&b.r))
            .add(&b.p.scale(&a.t))
            .sub(&a.p.scale(&b.t));
        let r = (b.p.skew(&a.q) - a.p.skew(&b.q)) * &eighth + a.s.clone() * &b.t - b.s.clone() * &a.t;
        let s = a.p.skew(&b.p) * &quarter + (a.r.clone() * &b.s - b.r.clone() * &a.s) * &two;
        let t = -(a.q.skew(&b.q) * &quarter) - (a.r.clone() * &b.t - b.r.clone() * &a.t) * &two;
        E8 { phi, p, q, r, s, t }
    }

    /// `lambda_omega(Phi, P, Q, r, s, t) = (lambda Phi lambda^{-1}, lambda Q, -lambda P, -r, -t, -s)`.
    pub fn lambda_omega(&self) -> Self {
        E8 {
            phi: self.phi.lambda_conj(),
            p: self.q.lambda(),
            q: self.p.lambda().neg(),
            r: -self.r.clone(),
            s: -self.t.clone(),
            t: -self.s.clone(),
        }
    }

    /// `(sigma'4 Phi sigma'4^{-1}, sigma'4 P, sigma'4 Q, r, s, t)`.
    pub fn sigma4(&self) -> Self {
        E8 {
            phi: self.phi.sigma4_conj(),
            p: self.p.sigma4(),
            q: self.q.sigma4(),
            r: self.r.clone(),
            s: self.s.clone(),
            t: self.t.clone(),
        }
    }

    pub fn sigma(&self) -> Self {
        E8 {
            phi: self.phi.sigma_conj(),
            p: self.p.sigma(),
            q: self.q.sigma(),
            r: self.r.clone(),
            s: self.s.clone(),
            t: self.t.clone(),
        }
    }

    /// Membership in the compact real form, the fixed points of
    /// `tau lambda_omega`. Since `tau` and `lambda_omega` commute and both
    /// square to the identity on e8, this is `lambda_omega R = tau R`.
    pub fn is_compact(&self) -> bool {
        self.lambda_omega().near(&self.tau(), 1e-9)
    }

    /// Largest coefficient of `lambda_omega R - tau R`.
    pub fn compact_defect(&self) -> f64 {
        self.lambda_omega().dist(&self.tau())
    }
}

/// Exact e8 structure constants, computed on first use.
pub fn e8_tables() -> &'static StructureConstants {
    static CELL: OnceLock<StructureConstants> = OnceLock::new();
    CELL.get_or_init(|| StructureConstants::compute::<E8<Cq>>(|a, b| a.bracket(b)))
}

/// Exact e7 structure constants, computed on first use.
pub fn e7_tables() -> &'static StructureConstants {
    static CELL: OnceLock<StructureConstants> = OnceLock::new();
    CELL.get_or_init(|| StructureConstants::compute::<E7<Cq>>(|a, b| a.bracket(b)))
}

/// The Killing form of e8.
pub fn killing_e8<S: Scalar>(a: &E8<S>, b: &E8<S>) -> S {
    e8_tables().killing(&a.to_coords(), &b.to_coords())
}

/// The Killing form of e7.
pub fn killing_e7<S: Scalar>(a: &E7<S>, b: &E7<S>) -> S {
    e7_tables().killing(&a.to_coords(), &b.to_coords())
}

/// The adjoint matrix of `R` over the coordinate basis.
pub fn ad_matrix<S: Scalar>(r: &E8<S>) -> LinearEndo<S> {
    let cols = e8_tables().ad_columns(&r.to_coords());
    let mut m = vec![vec![S::zero(); 248]; 248];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col {
            m[*i][j] = v.clone();
        }
    }
    LinearEndo { dim: 248, m, conj_linear: false }
}

/// `(R x R) R1 = [R, [R, R1]] + (1/30) B8(R, R1) R`.
pub fn r_cross<S: Scalar>(r: &E8<S>, r1: &E8<S>) -> E8<S> {
    r.bracket(&r.bracket(r1)).axpy(&(killing_e8(r, r1) * S::ratio(1, 30)), r)
}

/// The map `R1 -> (R x R) R1` as sparse columns over the coordinate basis.
pub fn r_cross_columns<S: Scalar>(r: &E8<S>) -> Vec<Row<S>> {
    let tables = e8_tables();
    let rc = r.to_coords();
    let ad = tables.ad_columns(&rc);
    let cov = tables.killing_covector(&rc);
    let rs = sparse(&rc);
    let c30 = S::ratio(1, 30);
    (0..248)
        .map(|j| {
            let sq = StructureConstants::apply_columns(&ad, &ad[j]);
            crate::linalg::row_axpy(&sq, &(cov[j].clone() * &c30), &rs, 0.0)
        })
        .collect()
}

/// True when `R x R` vanishes (checked on every basis vector) and `R != 0`.
pub fn in_w_space<S: Scalar>(r: &E8<S>) -> bool {
    !r.is_zero() && r_cross_columns(r).iter().all(|c| c.is_empty())
}
