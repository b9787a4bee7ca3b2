//! The exceptional Jordan algebra of hermitian 3x3 matrices over the
//! complexified octonions.
//!
//! An element with coordinates `(xi1, xi2, xi3, x1, x2, x3)` is the matrix
//!
//! ```text
//! [ xi1      x3       conj(x2) ]
//! [ conj(x3) xi2      x1       ]
//! [ x2       conj(x1) xi3      ]
//! ```

use crate::octonion::Octonion;
use crate::scalar::Scalar;
use crate::space::Vector;

#[derive(Clone, Debug, PartialEq)]
pub struct Jordan<S: Scalar> {
    pub xi: [S; 3],
    pub x: [Octonion<S>; 3],
}

const fn nx(k: usize) -> usize {
    (k + 1) % 3
}
const fn nn(k: usize) -> usize {
    (k + 2) % 3
}

impl<S: Scalar> Jordan<S> {
    /// The diagonal idempotent `E_k` for `k` in 1..=3.
    pub fn e(k: usize) -> Self {
        let mut j = <Self as Vector<S>>::zero();
        j.xi[k - 1] = S::one();
        j
    }

    /// The identity `E = E1 + E2 + E3`.
    pub fn identity() -> Self {
        Jordan { xi: [S::one(), S::one(), S::one()], x: std::array::from_fn(|_| Octonion::zero()) }
    }

    /// `F_k(a)` for `k` in 1..=3.
    pub fn f(k: usize, a: Octonion<S>) -> Self {
        let mut j = <Self as Vector<S>>::zero();
        j.x[k - 1] = a;
        j
    }

    /// `F_k(e_j)`.
    pub fn fe(k: usize, j: usize) -> Self {
        Self::f(k, Octonion::basis(j))
    }

    pub fn diag(a: S, b: S, c: S) -> Self {
        Jordan { xi: [a, b, c], x: std::array::from_fn(|_| Octonion::zero()) }
    }

    pub fn tr(&self) -> S {
        self.xi[0].clone() + &self.xi[1] + &self.xi[2]
    }

    /// The Jordan product `X o Y = (XY + YX) / 2`.
    pub fn circ(&self, y: &Self) -> Self {
        let (a, b) = (self, y);
        let xi = std::array::from_fn(|k| {
            a.xi[k].clone() * &b.xi[k]
                + a.x[nx(k)].inner(&b.x[nx(k)])
                + a.x[nn(k)].inner(&b.x[nn(k)])
        });
        let x = std::array::from_fn(|k| {
            let mut o = b.x[k].scale(&(a.xi[nx(k)].clone() + &a.xi[nn(k)]));
            o = &o + &a.x[k].scale(&(b.xi[nx(k)].clone() + &b.xi[nn(k)]));
            let m = &a.x[nx(k)].mul(&b.x[nn(k)]) + &b.x[nx(k)].mul(&a.x[nn(k)]);
            o = &o + &m.conj();
            o.scale(&S::ratio(1, 2))
        });
        Jordan { xi, x }
    }

    /// The inner product `(X, Y) = tr(X o Y)`.
    pub fn inner(&self, y: &Self) -> S {
        let mut acc = S::zero();
        for k in 0..3 {
            acc += self.xi[k].clone() * &y.xi[k];
            acc += self.x[k].inner(&y.x[k]).scale_i(2);
        }
        acc
    }

    /// The cross product `X x Y`.
    pub fn cross(&self, y: &Self) -> Self {
        let (tx, ty) = (self.tr(), y.tr());
        let c = tx.clone() * &ty - self.inner(y);
        let two_circ = self.circ(y).scale(&S::from_i64(2));
        let v = two_circ.sub(&y.scale(&tx)).sub(&self.scale(&ty)).add(&Self::identity().scale(&c));
        v.scale(&S::ratio(1, 2))
    }

    /// The symmetric trilinear form `(X, Y, Z) = (X, Y x Z)`.
    pub fn tri(&self, y: &Self, z: &Self) -> S {
        self.inner(&y.cross(z))
    }

    pub fn det(&self) -> S {
        let [a, b, c] = &self.xi;
        let [x1, x2, x3] = &self.x;
        let mut d = a.clone() * b * c;
        d += x1.mul(x2).mul(x3).re().scale_i(2);
        d -= a.clone() * &x1.norm();
        d -= b.clone() * &x2.norm();
        d -= c.clone() * &x3.norm();
        d
    }

    /// The involution sigma: negates `x2` and `x3`.
    pub fn sigma(&self) -> Self {
        Jordan { xi: self.xi.clone(), x: [self.x[0].clone(), -&self.x[1], -&self.x[2]] }
    }

    /// The order-four automorphism `x1 -> -e1 x1 e1`, `x2 -> e1 x2`, `x3 -> -x3 e1`.
    pub fn sigma4(&self) -> Self {
        let e1 = Octonion::basis(1);
        Jordan {
            xi: self.xi.clone(),
            x: [-&e1.mul(&self.x[0]).mul(&e1), e1.mul(&self.x[1]), -&self.x[2].mul(&e1)],
        }
    }

    /// Inverse of [`Jordan::sigma4`].
    pub fn sigma4_inv(&self) -> Self {
        self.sigma4().sigma4().sigma4()
    }

    /// Entry `(i, j)` of the hermitian matrix.
    pub fn entry(&self, i: usize, j: usize) -> Octonion<S> {
        match (i, j) {
            _ if i == j => Octonion::real(self.xi[i].clone()),
            (1, 2) => self.x[0].clone(),
            (2, 1) => self.x[0].conj(),
            (2, 0) => self.x[1].clone(),
            (0, 2) => self.x[1].conj(),
            (0, 1) => self.x[2].clone(),
            (1, 0) => self.x[2].conj(),
            _ => unreachable!(),
        }
    }

    /// Reads a hermitian matrix back into coordinates.
    pub fn from_matrix(m: &[[Octonion<S>; 3]; 3]) -> Self {
        Jordan {
            xi: std::array::from_fn(|k| m[k][k].re()),
            x: [m[1][2].clone(), m[2][0].clone(), m[0][1].clone()],
        }
    }

    pub fn to_matrix(&self) -> [[Octonion<S>; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entry(i, j)))
    }
}

impl<S: Scalar> Vector<S> for Jordan<S> {
    const DIM: usize = 27;

    fn zero() -> Self {
        Jordan { xi: std::array::from_fn(|_| S::zero()), x: std::array::from_fn(|_| Octonion::zero()) }
    }
    fn add(&self, o: &Self) -> Self {
        Jordan {
            xi: std::array::from_fn(|k| self.xi[k].clone() + &o.xi[k]),
            x: std::array::from_fn(|k| &self.x[k] + &o.x[k]),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        Jordan {
            xi: std::array::from_fn(|k| self.xi[k].clone() - &o.xi[k]),
            x: std::array::from_fn(|k| &self.x[k] - &o.x[k]),
        }
    }
    fn scale(&self, s: &S) -> Self {
        Jordan {
            xi: std::array::from_fn(|k| self.xi[k].clone() * s),
            x: std::array::from_fn(|k| self.x[k].scale(s)),
        }
    }
    fn is_zero(&self) -> bool {
        self.xi.iter().all(|c| c.is_zero()) && self.x.iter().all(|o| o.is_zero())
    }
    fn write_coords(&self, out: &mut Vec<S>) {
        out.extend(self.xi.iter().cloned());
        for o in &self.x {
            out.extend(o.0.iter().cloned());
        }
    }
    fn from_coords(c: &[S]) -> Self {
        Jordan {
            xi: std::array::from_fn(|k| c[k].clone()),
            x: std::array::from_fn(|k| Octonion::from_fn(|j| c[3 + 8 * k + j].clone())),
        }
    }
}

/// Product of 3x3 octonion matrices (used by oracles).
pub fn oct_matmul<S: Scalar>(a: &[[Octonion<S>; 3]; 3], b: &[[Octonion<S>; 3]; 3]) -> [[Octonion<S>; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = Octonion::zero();
            for k in 0..3 {
                acc = &acc + &a[i][k].mul(&b[k][j]);
            }
            acc
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cq, Cq};

    type J = Jordan<Cq>;

    fn sample(seed: i64) -> J {
        let c: Vec<Cq> = (0..27).map(|k| cq((k * 7 + seed * 3) % 5 - 2, (k * 3 + seed) % 3 - 1)).collect();
        J::from_coords(&c)
    }

    #[test]
    fn circ_matches_matrix_product() {
        let (x, y) = (sample(1), sample(2));
        let (mx, my) = (x.to_matrix(), y.to_matrix());
        let (p, q) = (oct_matmul(&mx, &my), oct_matmul(&my, &mx));
        let half = Cq::ratio(1, 2);
        let m: [[Octonion<Cq>; 3]; 3] =
            std::array::from_fn(|i| std::array::from_fn(|j| (&p[i][j] + &q[i][j]).scale(&half)));
        assert_eq!(J::from_matrix(&m), x.circ(&y));
    }

    #[test]
    fn cross_identities() {
        let e = |k| J::e(k);
        assert!(e(1).cross(&e(1)).is_zero());
        assert_eq!(e(2).cross(&e(3)), e(1).scale(&Cq::ratio(1, 2)));
        assert_eq!(J::identity().cross(&J::identity()), J::identity());
    }

    #[test]
    fn det_examples() {
        assert_eq!(J::identity().det(), Cq::one());
        let mut x = J::identity();
        for k in 0..3 {
            x.x[k] = Octonion::one();
        }
        assert_eq!(x.det(), Cq::zero());
        let y = sample(4);
        assert_eq!(y.tri(&y, &y), y.det().scale_i(3));
    }
}
