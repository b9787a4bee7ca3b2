//! The Lie algebra e7: elements `Phi(phi, A, B, nu)` acting on the
//! Freudenthal space.

use crate::freudenthal::PVec;
use crate::jordan::Jordan;
use crate::lie::e6::{extract_e6, E6Op, E6};
use crate::scalar::Scalar;
use crate::space::Vector;

#[derive(Clone, Debug, PartialEq)]
pub struct E7<S: Scalar> {
    pub phi: E6<S>,
    pub a: Jordan<S>,
    pub b: Jordan<S>,
    pub nu: S,
}

crate::impl_vector_struct!(E7, 133, [phi: E6<S>, a: Jordan<S>, b: Jordan<S>], [nu]);

pub struct E7Op<S: Scalar> {
    phi: E6Op<S>,
    a: Option<Jordan<S>>,
    b: Option<Jordan<S>>,
    nu3: S,
    nu: S,
}

fn nonzero<S: Scalar>(x: &Jordan<S>) -> Option<Jordan<S>> {
    if x.is_zero() {
        None
    } else {
        Some(x.clone())
    }
}

impl<S: Scalar> E7Op<S> {
    /// `Phi(X, Y, xi, eta) = (phi X - nu/3 X + 2 B x Y + eta A,
    /// 2 A x X - phi^t Y + nu/3 Y + xi B, (A, Y) + nu xi, (B, X) - nu eta)`.
    pub fn apply(&self, p: &PVec<S>) -> PVec<S> {
        let two = S::from_i64(2);
        let mut x = self.phi.apply(&p.x).sub(&p.x.scale(&self.nu3));
        let mut y = self.phi.apply_transpose(&p.y).neg().add(&p.y.scale(&self.nu3));
        let mut xi = self.nu.clone() * &p.xi;
        let mut eta = -(self.nu.clone() * &p.eta);
        if let Some(a) = &self.a {
            x = x.axpy(&p.eta, a);
            y = y.add(&a.cross(&p.x).scale(&two));
            xi += a.inner(&p.y);
        }
        if let Some(b) = &self.b {
            x = x.add(&b.cross(&p.y).scale(&two));
            y = y.axpy(&p.xi, b);
            eta += b.inner(&p.x);
        }
        PVec { x, y, xi, eta }
    }
}

impl<S: Scalar> E7<S> {
    pub fn new(phi: E6<S>, a: Jordan<S>, b: Jordan<S>, nu: S) -> Self {
        E7 { phi, a, b, nu }
    }

    pub fn from_e6(phi: E6<S>) -> Self {
        E7 { phi, ..Vector::zero() }
    }

    pub fn op(&self) -> E7Op<S> {
        E7Op {
            phi: self.phi.op(),
            a: nonzero(&self.a),
            b: nonzero(&self.b),
            nu3: self.nu.clone() * S::ratio(1, 3),
            nu: self.nu.clone(),
        }
    }

    pub fn act(&self, p: &PVec<S>) -> PVec<S> {
        self.op().apply(p)
    }

    pub fn bracket(&self, o: &Self) -> Self {
        let (p, q) = (self.op(), o.op());
        extract_e7(|v| p.apply(&q.apply(v)).sub(&q.apply(&p.apply(v))))
    }

    /// `lambda Phi lambda^{-1} = Phi(-phi^t, -B, -A, -nu)`.
    pub fn lambda_conj(&self) -> Self {
        E7 { phi: self.phi.transpose().neg(), a: self.b.neg(), b: self.a.neg(), nu: -self.nu.clone() }
    }

    /// `sigma'4 Phi sigma'4^{-1}`.
    pub fn sigma4_conj(&self) -> Self {
        let op = self.phi.op();
        let phi = extract_e6(|x| op.apply(&x.sigma4_inv()).sigma4());
        E7 { phi, a: self.a.sigma4(), b: self.b.sigma4(), nu: self.nu.clone() }
    }

    /// `sigma Phi sigma`.
    pub fn sigma_conj(&self) -> Self {
        let op = self.phi.op();
        let phi = extract_e6(|x| op.apply(&x.sigma()).sigma());
        E7 { phi, a: self.a.sigma(), b: self.b.sigma(), nu: self.nu.clone() }
    }
}

/// Recovers an e7 element from its action on the Freudenthal space.
pub fn extract_e7<S: Scalar>(f: impl Fn(&PVec<S>) -> PVec<S>) -> E7<S> {
    let v1 = f(&PVec::eta_only(S::one()));
    let v2 = f(&PVec::xi_only(S::one()));
    let nu = -v1.eta.clone();
    let nu3 = nu.clone() * S::ratio(1, 3);
    let phi = extract_e6(|x| f(&PVec::dot(x.clone())).x.add(&x.scale(&nu3)));
    E7 { phi, a: v1.x, b: v2.y, nu }
}
