//! The 56-dimensional Freudenthal space `J + J + C + C`, its alternating
//! form, the cross operation into e7 and the auxiliary maps lambda, kappa, mu.

use crate::jordan::Jordan;
use crate::lie::e6::vee;
use crate::lie::e7::E7;
use crate::scalar::Scalar;
use crate::space::Vector;

#[derive(Clone, Debug, PartialEq)]
pub struct PVec<S: Scalar> {
    pub x: Jordan<S>,
    pub y: Jordan<S>,
    pub xi: S,
    pub eta: S,
}

crate::impl_vector_struct!(PVec, 56, [x: Jordan<S>, y: Jordan<S>], [xi, eta]);

impl<S: Scalar> PVec<S> {
    pub fn new(x: Jordan<S>, y: Jordan<S>, xi: S, eta: S) -> Self {
        PVec { x, y, xi, eta }
    }

    /// `(X, 0, 0, 0)`.
    pub fn dot(x: Jordan<S>) -> Self {
        PVec { x, ..Vector::zero() }
    }

    /// `(0, Y, 0, 0)`.
    pub fn under(y: Jordan<S>) -> Self {
        PVec { y, ..Vector::zero() }
    }

    /// `(0, 0, xi, 0)`.
    pub fn xi_only(xi: S) -> Self {
        PVec { xi, ..Vector::zero() }
    }

    /// `(0, 0, 0, eta)`.
    pub fn eta_only(eta: S) -> Self {
        PVec { eta, ..Vector::zero() }
    }

    /// The alternating form `{P, Q} = (X, W) - (Z, Y) + xi omega - zeta eta`.
    pub fn skew(&self, q: &Self) -> S {
        self.x.inner(&q.y) - self.y.inner(&q.x) + self.xi.clone() * &q.eta - q.xi.clone() * &self.eta
    }

    /// The cross operation `P x Q`, an element of e7.
    pub fn cross(&self, q: &Self) -> E7<S> {
        let (x, y, xi, eta) = (&self.x, &self.y, &self.xi, &self.eta);
        let (z, w, zeta, omega) = (&q.x, &q.y, &q.xi, &q.eta);
        let half = S::ratio(1, 2);
        let quarter = S::ratio(1, 4);
        let phi = vee(x, w).add(&vee(z, y)).scale(&-half);
        let a = y.cross(w).scale(&S::from_i64(2)).sub(&z.scale(xi)).sub(&x.scale(zeta)).scale(&-quarter.clone());
        let b = x.cross(z).scale(&S::from_i64(2)).sub(&w.scale(eta)).sub(&y.scale(omega)).scale(&quarter);
        let nu = (x.inner(w) + z.inner(y) - (xi.clone() * omega + zeta.clone() * eta).scale_i(3)) * S::ratio(1, 8);
        E7 { phi, a, b, nu }
    }

    /// `lambda(X, Y, xi, eta) = (Y, -X, eta, -xi)`.
    pub fn lambda(&self) -> Self {
        PVec { x: self.y.clone(), y: self.x.neg(), xi: self.eta.clone(), eta: -self.xi.clone() }
    }

    pub fn lambda_inv(&self) -> Self {
        PVec { x: self.y.neg(), y: self.x.clone(), xi: -self.eta.clone(), eta: self.xi.clone() }
    }

    /// `kappa(X, Y, xi, eta) = (-kappa1 X, kappa1 Y, -xi, eta)`.
    pub fn kappa(&self) -> Self {
        PVec { x: kappa1(&self.x).neg(), y: kappa1(&self.y), xi: -self.xi.clone(), eta: self.eta.clone() }
    }

    /// `mu(X, Y, xi, eta) = (2 E1 x Y + eta E1, 2 E1 x X + xi E1, (E1, Y), (E1, X))`.
    pub fn mu(&self) -> Self {
        let e1 = Jordan::e(1);
        let two = S::from_i64(2);
        PVec {
            x: e1.cross(&self.y).scale(&two).add(&e1.scale(&self.eta)),
            y: e1.cross(&self.x).scale(&two).add(&e1.scale(&self.xi)),
            xi: e1.inner(&self.y),
            eta: e1.inner(&self.x),
        }
    }

    /// `(P, P)_mu = {mu P, P} / 2`.
    pub fn mu_norm(&self) -> S {
        self.mu().skew(self) * S::ratio(1, 2)
    }

    pub fn sigma(&self) -> Self {
        PVec { x: self.x.sigma(), y: self.y.sigma(), xi: self.xi.clone(), eta: self.eta.clone() }
    }

    pub fn sigma4(&self) -> Self {
        PVec { x: self.x.sigma4(), y: self.y.sigma4(), xi: self.xi.clone(), eta: self.eta.clone() }
    }

    pub fn sigma4_inv(&self) -> Self {
        PVec { x: self.x.sigma4_inv(), y: self.y.sigma4_inv(), xi: self.xi.clone(), eta: self.eta.clone() }
    }
}

/// `kappa1 X = (E1, X) E1 - 4 E1 x (E1 x X)`.
pub fn kappa1<S: Scalar>(x: &Jordan<S>) -> Jordan<S> {
    let e1 = Jordan::e(1);
    e1.scale(&e1.inner(x)).sub(&e1.cross(&e1.cross(x)).scale(&S::from_i64(4)))
}
