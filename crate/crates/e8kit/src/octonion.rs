//! Complexified octonions over the basis `e0 = 1, e1, ..., e7`.

use std::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::scalar::Scalar;
use crate::space::Vector;

/// Oriented lines of the Fano plane: `e_a e_b = e_c` for each `(a, b, c)` and
/// its cyclic shifts. This is the XOR-indexed table (`e_a e_b = +-e_{a^b}`).
pub const FANO_LINES: [(usize, usize, usize); 7] =
    [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 7, 5), (3, 6, 5), (3, 7, 4)];

/// `MUL_TABLE[a][b] = (sign, c)` with `e_a e_b = sign * e_c`.
pub static MUL_TABLE: [[(i8, u8); 8]; 8] = build_table(&FANO_LINES);

/// Builds the multiplication table from seven oriented lines.
pub const fn build_table(lines: &[(usize, usize, usize); 7]) -> [[(i8, u8); 8]; 8] {
    let mut t = [[(0i8, 0u8); 8]; 8];
    let mut a = 0;
    while a < 8 {
        t[0][a] = (1, a as u8);
        t[a][0] = (1, a as u8);
        if a > 0 {
            t[a][a] = (-1, 0);
        }
        a += 1;
    }
    let mut l = 0;
    while l < 7 {
        let (x, y, z) = lines[l];
        let cyc = [(x, y, z), (y, z, x), (z, x, y)];
        let mut k = 0;
        while k < 3 {
            let (p, q, r) = cyc[k];
            t[p][q] = (1, r as u8);
            t[q][p] = (-1, r as u8);
            k += 1;
        }
        l += 1;
    }
    t
}

/// An element of the complexified octonions.
#[derive(Clone, Debug, PartialEq)]
pub struct Octonion<S: Scalar>(pub [S; 8]);

impl<S: Scalar> Octonion<S> {
    pub fn zero() -> Self {
        Octonion(std::array::from_fn(|_| S::zero()))
    }

    /// The basis element `e_k`.
    pub fn basis(k: usize) -> Self {
        let mut o = Self::zero();
        o.0[k] = S::one();
        o
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn from_fn(f: impl FnMut(usize) -> S) -> Self {
        Octonion(std::array::from_fn(f))
    }

    pub fn real(s: S) -> Self {
        let mut o = Self::zero();
        o.0[0] = s;
        o
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn conj(&self) -> Self {
        Octonion(std::array::from_fn(|k| if k == 0 { self.0[0].clone() } else { -self.0[k].clone() }))
    }

    /// Complex conjugation of the coefficients (the map tau).
    pub fn tau(&self) -> Self {
        Octonion(std::array::from_fn(|k| self.0[k].conj()))
    }

    /// The `e0` coefficient.
    pub fn re(&self) -> S {
        self.0[0].clone()
    }

    /// `sum x_k y_k`, which equals `Re(x conj(y))`.
    pub fn inner(&self, other: &Self) -> S {
        let mut acc = S::zero();
        for k in 0..8 {
            if !self.0[k].is_zero() && !other.0[k].is_zero() {
                acc += self.0[k].clone() * &other.0[k];
            }
        }
        acc
    }

    /// `x conj(x)`, a scalar.
    pub fn norm(&self) -> S {
        self.inner(self)
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Octonion(std::array::from_fn(|k| if self.0[k].is_zero() { S::zero() } else { self.0[k].clone() * s }))
    }

    pub fn mul(&self, other: &Self) -> Self {
        mul_with(&MUL_TABLE, self, other)
    }

    /// Adds `s * x` into `self`.
    pub fn axpy(&mut self, s: &S, x: &Self) {
        if s.is_zero() {
            return;
        }
        for k in 0..8 {
            if !x.0[k].is_zero() {
                self.0[k] += s.clone() * &x.0[k];
            }
        }
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        Octonion(std::array::from_fn(|k| f(&self.0[k])))
    }

    /// Applies an 8x8 matrix (column convention: `m[i][j]` is the `e_i`
    /// coefficient of the image of `e_j`).
    pub fn apply_matrix(&self, m: &[[S; 8]; 8]) -> Self {
        let mut out = Self::zero();
        for j in 0..8 {
            if self.0[j].is_zero() {
                continue;
            }
            for i in 0..8 {
                if !m[i][j].is_zero() {
                    out.0[i] += m[i][j].clone() * &self.0[j];
                }
            }
        }
        out
    }
}

/// Multiplication with an explicit table; used to compare candidate tables.
pub fn mul_with<S: Scalar>(table: &[[(i8, u8); 8]; 8], x: &Octonion<S>, y: &Octonion<S>) -> Octonion<S> {
    let mut out = Octonion::zero();
    for a in 0..8 {
        if x.0[a].is_zero() {
            continue;
        }
        for b in 0..8 {
            if y.0[b].is_zero() {
                continue;
            }
            let (sign, c) = table[a][b];
            let p = x.0[a].clone() * &y.0[b];
            if sign > 0 {
                out.0[c as usize] += p;
            } else {
                out.0[c as usize] -= p;
            }
        }
    }
    out
}

impl<S: Scalar> Vector<S> for Octonion<S> {
    const DIM: usize = 8;
    fn zero() -> Self {
        Octonion::zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn scale(&self, s: &S) -> Self {
        Octonion::scale(self, s)
    }
    fn is_zero(&self) -> bool {
        Octonion::is_zero(self)
    }
    fn write_coords(&self, out: &mut Vec<S>) {
        out.extend(self.0.iter().cloned());
    }
    fn from_coords(c: &[S]) -> Self {
        Octonion::from_fn(|k| c[k].clone())
    }
}

impl<S: Scalar> Index<usize> for Octonion<S> {
    type Output = S;
    fn index(&self, k: usize) -> &S {
        &self.0[k]
    }
}

impl<S: Scalar> IndexMut<usize> for Octonion<S> {
    fn index_mut(&mut self, k: usize) -> &mut S {
        &mut self.0[k]
    }
}

impl<S: Scalar> Add for &Octonion<S> {
    type Output = Octonion<S>;
    fn add(self, o: &Octonion<S>) -> Octonion<S> {
        Octonion(std::array::from_fn(|k| self.0[k].clone() + &o.0[k]))
    }
}

impl<S: Scalar> Sub for &Octonion<S> {
    type Output = Octonion<S>;
    fn sub(self, o: &Octonion<S>) -> Octonion<S> {
        Octonion(std::array::from_fn(|k| self.0[k].clone() - &o.0[k]))
    }
}

impl<S: Scalar> Neg for &Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        Octonion(std::array::from_fn(|k| -self.0[k].clone()))
    }
}

/// The four tables compatible with `e1e2 = e3`, `e1e4 = e5`, `e1e6 = e7`,
/// indexed by the choice `e2e4 in {e6, -e6, e7, -e7}`. The first one is
/// [`MUL_TABLE`].
pub fn candidate_tables() -> [[[(i8, u8); 8]; 8]; 4] {
    [
        build_table(&FANO_LINES),
        build_table(&[(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 5, 7), (2, 6, 4), (3, 4, 7), (3, 5, 6)]),
        build_table(&[(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 7), (2, 5, 6), (3, 4, 6), (3, 7, 5)]),
        build_table(&[(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 6, 5), (2, 7, 4), (3, 5, 7), (3, 6, 4)]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Cq;

    type O = Octonion<Cq>;

    #[test]
    fn table_basics() {
        let e = |k| O::basis(k);
        assert_eq!(e(1).mul(&e(2)), e(3));
        assert_eq!(e(1).mul(&e(4)), e(5));
        assert_eq!(e(1).mul(&e(6)), e(7));
        assert_eq!(e(2).mul(&e(4)), e(6));
        assert_eq!(e(1).mul(&e(1)), -&e(0));
        assert_eq!(e(2).mul(&e(3)), e(1));
    }

    #[test]
    fn candidate_tables_are_alternative() {
        for t in candidate_tables() {
            for a in 0..8 {
                for b in 0..8 {
                    let x = O::basis(a);
                    let y = &O::basis(b) + &O::basis((a + 3) % 8);
                    let xx = mul_with(&t, &x, &x);
                    assert_eq!(mul_with(&t, &x, &mul_with(&t, &x, &y)), mul_with(&t, &xx, &y));
                    assert_eq!(mul_with(&t, &mul_with(&t, &y, &x), &x), mul_with(&t, &y, &xx));
                }
            }
        }
    }
}
