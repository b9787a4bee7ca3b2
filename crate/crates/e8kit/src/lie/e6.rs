//! The Lie algebra e6: maps `phi = delta + T~` with `delta` in f4 and `T`
//! traceless, acting by `phi X = delta X + T o X`.

use crate::jordan::Jordan;
use crate::lie::f4::{extract_f4, F4Op, F4};
use crate::scalar::Scalar;
use crate::space::Vector;

#[derive(Clone, Debug, PartialEq)]
pub struct E6<S: Scalar> {
    pub delta: F4<S>,
    /// Traceless Jordan element.
    pub t: Jordan<S>,
}

pub struct E6Op<S: Scalar> {
    delta: F4Op<S>,
    t: Jordan<S>,
    t_zero: bool,
}

impl<S: Scalar> E6Op<S> {
    pub fn apply(&self, x: &Jordan<S>) -> Jordan<S> {
        let d = self.delta.apply(x);
        if self.t_zero {
            d
        } else {
            d.add(&self.t.circ(x))
        }
    }

    /// The transpose `-delta + T~` with respect to the inner product.
    pub fn apply_transpose(&self, x: &Jordan<S>) -> Jordan<S> {
        let d = self.delta.apply(x).neg();
        if self.t_zero {
            d
        } else {
            d.add(&self.t.circ(x))
        }
    }
}

impl<S: Scalar> E6<S> {
    pub fn from_f4(delta: F4<S>) -> Self {
        E6 { delta, t: Vector::zero() }
    }

    /// `T~`; panics if `T` has nonzero trace.
    pub fn t_tilde(t: Jordan<S>) -> Self {
        assert!(t.tr().is_zero(), "T~ requires a traceless T");
        E6 { delta: Vector::zero(), t }
    }

    pub fn op(&self) -> E6Op<S> {
        E6Op { delta: self.delta.op(), t: self.t.clone(), t_zero: self.t.is_zero() }
    }

    pub fn act(&self, x: &Jordan<S>) -> Jordan<S> {
        self.op().apply(x)
    }

    pub fn transpose(&self) -> Self {
        E6 { delta: self.delta.neg(), t: self.t.clone() }
    }

    pub fn bracket(&self, o: &Self) -> Self {
        let (p, q) = (self.op(), o.op());
        extract_e6(|v| p.apply(&q.apply(v)).sub(&q.apply(&p.apply(v))))
    }
}

/// Recovers an e6 element from its action.
pub fn extract_e6<S: Scalar>(f: impl Fn(&Jordan<S>) -> Jordan<S>) -> E6<S> {
    let t = f(&Jordan::identity());
    let delta = extract_f4(|v| f(v).sub(&t.circ(v)));
    E6 { delta, t }
}

/// `X v W`: the e6 element `[X~, W~] + (X o W - (X, W)/3 E)~`.
pub fn vee<S: Scalar>(x: &Jordan<S>, w: &Jordan<S>) -> E6<S> {
    let delta = extract_f4(|z| x.circ(&w.circ(z)).sub(&w.circ(&x.circ(z))));
    let t = x.circ(w).sub(&Jordan::identity().scale(&(x.inner(w) * S::ratio(1, 3))));
    E6 { delta, t }
}

impl<S: Scalar> Vector<S> for E6<S> {
    const DIM: usize = 78;

    fn zero() -> Self {
        E6 { delta: Vector::zero(), t: Vector::zero() }
    }
    fn add(&self, o: &Self) -> Self {
        E6 { delta: self.delta.add(&o.delta), t: self.t.add(&o.t) }
    }
    fn sub(&self, o: &Self) -> Self {
        E6 { delta: self.delta.sub(&o.delta), t: self.t.sub(&o.t) }
    }
    fn scale(&self, s: &S) -> Self {
        E6 { delta: self.delta.scale(s), t: self.t.scale(s) }
    }
    fn is_zero(&self) -> bool {
        self.delta.is_zero() && self.t.is_zero()
    }
    /// `T` is stored through `xi1, xi2` (with `xi3 = -xi1 - xi2`) and its
    /// off-diagonal coordinates.
    fn write_coords(&self, out: &mut Vec<S>) {
        self.delta.write_coords(out);
        let mut tc = self.t.to_coords();
        tc.remove(2);
        out.extend(tc);
    }
    fn from_coords(c: &[S]) -> Self {
        let delta = F4::from_coords(&c[..52]);
        let mut tc: Vec<S> = c[52..78].to_vec();
        let xi3 = -(tc[0].clone() + &tc[1]);
        tc.insert(2, xi3);
        E6 { delta, t: Jordan::from_coords(&tc) }
    }
}
