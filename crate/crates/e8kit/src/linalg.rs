//! Linear algebra: sparse row echelon forms, dense endomorphisms and the
//! matrix exponential.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::space::Vector;

/// Sparse row: sorted `(column, value)` pairs without explicit zeros.
pub type Row<S> = Vec<(usize, S)>;

/// Drops near-zero entries of an approximate row; exact rows are untouched.
fn is_negligible<S: Scalar>(x: &S, eps: f64) -> bool {
    if S::EXACT {
        x.is_zero()
    } else {
        x.abs_f64() <= eps
    }
}

/// `a + c * b` for sparse rows.
pub fn row_axpy<S: Scalar>(a: &Row<S>, c: &S, b: &Row<S>, eps: f64) -> Row<S> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = c.clone() * &b[j].1;
            if !is_negligible(&v, eps) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.clone() + c.clone() * &b[j].1;
            if !is_negligible(&v, eps) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Converts a dense vector into a sparse row.
pub fn sparse<S: Scalar>(dense: &[S]) -> Row<S> {
    dense.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (k, v.clone())).collect()
}

/// Incremental row echelon form with leftmost pivoting.
///
/// Rows are inserted one at a time; each stored row is normalized so that its
/// pivot (its first entry) is one. Pivot choice is fully determined by the
/// insertion order, so results are reproducible.
#[derive(Clone, Debug)]
pub struct Echelon<S: Scalar> {
    pub ncols: usize,
    rows: Vec<Row<S>>,
    /// `pivot_of[c]` is the index of the row whose pivot is column `c`.
    pivot_of: Vec<Option<usize>>,
    eps: f64,
}

impl<S: Scalar> Echelon<S> {
    pub fn new(ncols: usize) -> Self {
        Self::with_eps(ncols, 1e-10)
    }

    /// `eps` is the zero threshold used by the approximate backend.
    pub fn with_eps(ncols: usize, eps: f64) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_of: vec![None; ncols], eps }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored pivots.
    pub fn reduce(&self, mut row: Row<S>) -> Row<S> {
        let mut from = 0;
        loop {
            let hit = row.iter().skip_while(|(c, _)| *c < from).find(|(c, _)| self.pivot_of[*c].is_some());
            let Some((c, v)) = hit.cloned() else { return row };
            let r = &self.rows[self.pivot_of[c].unwrap()];
            row = row_axpy(&row, &-v, r, self.eps);
            from = c + 1;
        }
    }

    /// Inserts a row; returns true when it increased the rank.
    pub fn insert(&mut self, row: Row<S>) -> bool {
        let row = self.reduce(row);
        let Some((c, lead)) = row.first().cloned() else { return false };
        let inv = lead.inv().expect("nonzero pivot");
        let row: Row<S> = row.into_iter().map(|(k, v)| (k, v * &inv)).collect();
        self.pivot_of[c] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn insert_dense(&mut self, dense: &[S]) -> bool {
        self.insert(sparse(dense))
    }

    /// True when `row` lies in the row span.
    pub fn contains(&self, row: Row<S>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_of[c].is_some()).collect()
    }

    /// Fully reduced rows indexed by pivot column.
    fn reduced_rows(&self) -> Vec<(usize, Row<S>)> {
        let piv = self.pivots();
        let mut out: Vec<(usize, Row<S>)> = Vec::with_capacity(piv.len());
        // Later pivots first, so each row is reduced against already clean rows.
        for &c in piv.iter().rev() {
            let mut row = self.rows[self.pivot_of[c].unwrap()].clone();
            for (pc, prow) in out.iter() {
                if let Some((_, v)) = row.iter().find(|(k, _)| k == pc).cloned() {
                    row = row_axpy(&row, &-v, prow, self.eps);
                }
            }
            out.push((c, row));
        }
        out.reverse();
        out
    }

    /// Basis of the null space `{v | row . v = 0 for all rows}`.
    pub fn kernel(&self) -> Vec<Vec<S>> {
        let rr = self.reduced_rows();
        let mut out = Vec::new();
        for f in 0..self.ncols {
            if self.pivot_of[f].is_some() {
                continue;
            }
            let mut v = vec![S::zero(); self.ncols];
            v[f] = S::one();
            for (pc, row) in &rr {
                if let Some((_, x)) = row.iter().find(|(k, _)| *k == f) {
                    v[*pc] = -x.clone();
                }
            }
            out.push(v);
        }
        out
    }

    /// Solves `rows . v = rhs`, where each inserted row stores its right-hand
    /// side in column `ncols - 1`. Free unknowns are set to zero.
    pub fn particular_solution(&self) -> Option<Vec<S>> {
        let last = self.ncols - 1;
        if self.pivot_of[last].is_some() {
            return None;
        }
        let mut v = vec![S::zero(); last];
        for (pc, row) in self.reduced_rows() {
            if let Some((_, x)) = row.iter().find(|(k, _)| *k == last) {
                v[pc] = x.clone();
            }
        }
        Some(v)
    }
}

/// Rank of a list of dense vectors.
pub fn rank<S: Scalar>(vectors: &[Vec<S>]) -> usize {
    let n = vectors.first().map_or(0, |v| v.len());
    let mut e = Echelon::new(n);
    for v in vectors {
        e.insert_dense(v);
    }
    e.rank()
}

/// Dense square matrix of an endomorphism over a fixed ordered basis.
///
/// `m[i][j]` is the `i`-th coordinate of the image of basis vector `j`. A
/// conjugate-linear map `f` is stored through `f(sum c_j b_j) = sum conj(c_j) f(b_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearEndo<S: Scalar> {
    pub dim: usize,
    pub m: Vec<Vec<S>>,
    pub conj_linear: bool,
}

impl<S: Scalar> LinearEndo<S> {
    pub fn identity(dim: usize) -> Self {
        let m = (0..dim).map(|i| (0..dim).map(|j| if i == j { S::one() } else { S::zero() }).collect()).collect();
        LinearEndo { dim, m, conj_linear: false }
    }

    pub fn zero(dim: usize) -> Self {
        LinearEndo { dim, m: vec![vec![S::zero(); dim]; dim], conj_linear: false }
    }

    /// Matrix of a linear map given on vectors of a coordinatized space.
    pub fn of_map<V: Vector<S>>(f: impl Fn(&V) -> V) -> Self {
        let n = V::DIM;
        let mut m = vec![vec![S::zero(); n]; n];
        for j in 0..n {
            let img = f(&V::basis(j)).to_coords();
            for i in 0..n {
                m[i][j] = img[i].clone();
            }
        }
        LinearEndo { dim: n, m, conj_linear: false }
    }

    /// Matrix of a conjugate-linear map (images of the real basis).
    pub fn of_conj_map<V: Vector<S>>(f: impl Fn(&V) -> V) -> Self {
        let mut e = Self::of_map(f);
        e.conj_linear = true;
        e
    }

    pub fn apply(&self, v: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = if self.conj_linear { c.conj() } else { c.clone() };
            for i in 0..self.dim {
                if !self.m[i][j].is_zero() {
                    out[i] += self.m[i][j].clone() * &c;
                }
            }
        }
        out
    }

    pub fn apply_vec<V: Vector<S>>(&self, v: &V) -> V {
        V::from_coords(&self.apply(&v.to_coords()))
    }

    /// `self o other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut m = vec![vec![S::zero(); n]; n];
        for j in 0..n {
            let col: Vec<S> = (0..n).map(|i| other.m[i][j].clone()).collect();
            let img = self.apply(&col);
            for i in 0..n {
                m[i][j] = img[i].clone();
            }
        }
        LinearEndo { dim: n, m, conj_linear: self.conj_linear != other.conj_linear }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.conj_linear, o.conj_linear);
        let m = (0..self.dim).map(|i| (0..self.dim).map(|j| self.m[i][j].clone() + &o.m[i][j]).collect()).collect();
        LinearEndo { dim: self.dim, m, conj_linear: self.conj_linear }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-S::one()))
    }

    pub fn scale(&self, s: &S) -> Self {
        let m = self.m.iter().map(|r| r.iter().map(|x| x.clone() * s).collect()).collect();
        LinearEndo { dim: self.dim, m, conj_linear: self.conj_linear }
    }

    /// Maximal entry modulus of `self - o`.
    pub fn dist(&self, o: &Self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                d = d.max((self.m[i][j].clone() - &o.m[i][j]).abs_f64());
            }
        }
        d
    }

    pub fn near(&self, o: &Self, tol: f64) -> bool {
        if S::EXACT {
            self == o
        } else {
            self.dist(o) <= tol
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.conj_linear && *self == Self::identity(self.dim)
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.dim {
            t += &self.m[i][i];
        }
        t
    }

    /// Matrix of the restriction to the span of `basis`, which must be invariant.
    ///
    /// Returns the offending image on failure.
    pub fn restrict(&self, basis: &[Vec<S>]) -> std::result::Result<LinearEndo<S>, Vec<S>> {
        let k = basis.len();
        // Solve for coordinates of each image in the given basis.
        let mut m = vec![vec![S::zero(); k]; k];
        for j in 0..k {
            let img = self.apply(&basis[j]);
            let mut e = Echelon::new(k + 1);
            for r in 0..self.dim {
                let mut row: Vec<S> = basis.iter().map(|b| b[r].clone()).collect();
                row.push(img[r].clone());
                e.insert_dense(&row);
            }
            let sol = e.particular_solution().ok_or_else(|| img.clone())?;
            for i in 0..k {
                m[i][j] = sol[i].clone();
            }
        }
        Ok(LinearEndo { dim: k, m, conj_linear: self.conj_linear })
    }
}

impl LinearEndo<Complex64> {
    fn norm1(&self) -> f64 {
        (0..self.dim).map(|j| (0..self.dim).map(|i| self.m[i][j].norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    /// Matrix exponential by scaling and squaring with a Taylor series.
    pub fn expm(&self) -> LinearEndo<Complex64> {
        assert!(!self.conj_linear, "exponential of a conjugate-linear map");
        let norm = self.norm1();
        let mut sq = 0u32;
        let mut scaled = self.clone();
        if norm > 0.5 {
            sq = (norm / 0.5).log2().ceil() as u32;
            scaled = self.scale(&Complex64::new(0.5f64.powi(sq as i32), 0.0));
        }
        let mut result = LinearEndo::identity(self.dim);
        let mut term = LinearEndo::identity(self.dim);
        for k in 1..=30 {
            term = term.compose(&scaled).scale(&Complex64::new(1.0 / k as f64, 0.0));
            result = result.add(&term);
            if term.norm1() < 1e-18 {
                break;
            }
        }
        for _ in 0..sq {
            result = result.compose(&result);
        }
        result
    }
}

/// Requires the approximate backend for an operation.
pub fn require_approx<S: Scalar>(what: &str) -> Result<()> {
    if S::EXACT {
        Err(Error::Backend(format!("{what} needs the approximate backend")))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cq, Cq};

    #[test]
    fn kernel_of_small_system() {
        let mut e = Echelon::<Cq>::new(3);
        e.insert_dense(&[cq(1, 0), cq(2, 0), cq(3, 0)]);
        e.insert_dense(&[cq(2, 0), cq(4, 0), cq(6, 0)]);
        assert_eq!(e.rank(), 1);
        let k = e.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            let dot = v[0].clone() + v[1].clone() * cq(2, 0) + v[2].clone() * cq(3, 0);
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn expm_of_rotation() {
        let t = 0.7;
        let mut g = LinearEndo::<Complex64>::zero(2);
        g.m[0][1] = Complex64::new(t, 0.0);
        g.m[1][0] = Complex64::new(-t, 0.0);
        let e = g.expm();
        assert!((e.m[0][0].re - t.cos()).abs() < 1e-14);
        assert!((e.m[0][1].re - t.sin()).abs() < 1e-14);
    }
}
