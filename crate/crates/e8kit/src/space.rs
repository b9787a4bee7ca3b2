//! Coordinatized vector spaces.
//!
//! Every algebraic type exposes coordinates over a fixed real basis, so the
//! conjugation tau is coordinate-wise conjugation and linear maps can be
//! materialized as matrices.

use num_complex::Complex64;

use crate::scalar::{Cq, Scalar};

pub trait Vector<S: Scalar>: Sized + Clone + PartialEq + std::fmt::Debug {
    /// Complex dimension.
    const DIM: usize;

    fn zero() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn scale(&self, s: &S) -> Self;
    fn write_coords(&self, out: &mut Vec<S>);
    fn from_coords(c: &[S]) -> Self;

    fn is_zero(&self) -> bool {
        self.to_coords().iter().all(|c| c.is_zero())
    }

    fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    fn to_coords(&self) -> Vec<S> {
        let mut v = Vec::with_capacity(Self::DIM);
        self.write_coords(&mut v);
        debug_assert_eq!(v.len(), Self::DIM);
        v
    }

    fn basis(k: usize) -> Self {
        let mut c = vec![S::zero(); Self::DIM];
        c[k] = S::one();
        Self::from_coords(&c)
    }

    /// Coordinate-wise complex conjugation.
    fn tau(&self) -> Self {
        let c: Vec<S> = self.to_coords().iter().map(|x| x.conj()).collect();
        Self::from_coords(&c)
    }

    /// `self + s * o`.
    fn axpy(&self, s: &S, o: &Self) -> Self {
        self.add(&o.scale(s))
    }

    /// Largest coefficient modulus of `self - o`.
    fn dist(&self, o: &Self) -> f64 {
        self.sub(o).to_coords().iter().map(|c| c.abs_f64()).fold(0.0, f64::max)
    }

    /// Equality: exact in the rational backend, within `tol` otherwise.
    fn near(&self, o: &Self, tol: f64) -> bool {
        if S::EXACT {
            self == o
        } else {
            self.dist(o) <= tol
        }
    }

    /// Linear combination of coordinates with basis vectors.
    fn combine(coeffs: &[S], vecs: &[Self]) -> Self {
        let mut acc = Self::zero();
        for (c, v) in coeffs.iter().zip(vecs) {
            if !c.is_zero() {
                acc = acc.axpy(c, v);
            }
        }
        acc
    }
}

/// Rounds an exact vector into the approximate backend.
pub fn to_approx<A: Vector<Cq>, B: Vector<Complex64>>(a: &A) -> B {
    let c: Vec<Complex64> = a.to_coords().iter().map(Complex64::from_cq).collect();
    B::from_coords(&c)
}

/// Implements `Vector` for a struct whose fields are all vectors or scalars.
#[macro_export]
macro_rules! impl_vector_struct {
    ($ty:ident, $dim:expr, [$($vf:ident : $vt:ty),*], [$($sf:ident),*]) => {
        impl<S: $crate::scalar::Scalar> $crate::space::Vector<S> for $ty<S> {
            const DIM: usize = $dim;
            fn zero() -> Self {
                $ty { $($vf: <$vt as $crate::space::Vector<S>>::zero(),)* $($sf: S::zero(),)* }
            }
            fn add(&self, o: &Self) -> Self {
                $ty { $($vf: self.$vf.add(&o.$vf),)* $($sf: self.$sf.clone() + &o.$sf,)* }
            }
            fn sub(&self, o: &Self) -> Self {
                $ty { $($vf: self.$vf.sub(&o.$vf),)* $($sf: self.$sf.clone() - &o.$sf,)* }
            }
            fn scale(&self, s: &S) -> Self {
                $ty { $($vf: self.$vf.scale(s),)* $($sf: self.$sf.clone() * s,)* }
            }
            fn is_zero(&self) -> bool {
                true $(&& self.$vf.is_zero())* $(&& self.$sf.is_zero())*
            }
            fn write_coords(&self, out: &mut Vec<S>) {
                $(self.$vf.write_coords(out);)*
                $(out.push(self.$sf.clone());)*
            }
            #[allow(unused_assignments)]
            fn from_coords(c: &[S]) -> Self {
                let mut at = 0usize;
                $(
                    let $vf = {
                        let n = <$vt as $crate::space::Vector<S>>::DIM;
                        let v = <$vt as $crate::space::Vector<S>>::from_coords(&c[at..at + n]);
                        at += n;
                        v
                    };
                )*
                $(
                    let $sf = { let v = c[at].clone(); at += 1; v };
                )*
                $ty { $($vf,)* $($sf,)* }
            }
        }
    };
}
