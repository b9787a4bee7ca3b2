//! Structure constants over a coordinate basis, with the derived adjoint
//! matrices and Killing form.

use std::collections::HashMap;

use crate::linalg::{row_axpy, sparse, Row};
use crate::scalar::{Cq, Scalar};
use crate::space::Vector;

/// Exact structure constants `[b_i, b_j] = sum_k c_ij^k b_k`.
pub struct StructureConstants {
    pub dim: usize,
    /// `table[i * dim + j]` holds `[b_i, b_j]` as a sparse row.
    table: Vec<Row<Cq>>,
    /// Sparse rows of the Killing matrix `tr(ad b_i ad b_j)`.
    killing: Vec<Row<Cq>>,
}

impl StructureConstants {
    /// Tabulates brackets of basis vectors; only `i < j` is evaluated.
    pub fn compute<V: Vector<Cq>>(bracket: impl Fn(&V, &V) -> V) -> Self {
        let dim = V::DIM;
        let basis: Vec<V> = (0..dim).map(V::basis).collect();
        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let row = sparse(&bracket(&basis[i], &basis[j]).to_coords());
                table[j * dim + i] = row.iter().map(|(k, v)| (*k, -v.clone())).collect();
                table[i * dim + j] = row;
            }
        }
        let mut sc = StructureConstants { dim, table, killing: Vec::new() };
        sc.killing = sc.killing_matrix();
        sc
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Row<Cq> {
        &self.table[i * self.dim + j]
    }

    fn killing_matrix(&self) -> Vec<Row<Cq>> {
        let n = self.dim;
        // by_mk[(m, k)] lists (i, c_im^k).
        let mut by_mk: HashMap<(usize, usize), Vec<(usize, Cq)>> = HashMap::new();
        for i in 0..n {
            for m in 0..n {
                for (k, c) in self.basis_bracket(i, m) {
                    by_mk.entry((m, *k)).or_default().push((i, c.clone()));
                }
            }
        }
        let mut kill: Vec<Vec<Cq>> = vec![vec![Cq::zero(); n]; n];
        for j in 0..n {
            for k in 0..n {
                for (m, w) in self.basis_bracket(j, k) {
                    if let Some(list) = by_mk.get(&(*m, k)) {
                        for (i, c) in list {
                            kill[*i][j] += w.clone() * c;
                        }
                    }
                }
            }
        }
        kill.iter().map(|r| sparse(r)).collect()
    }

    /// Bracket of coordinate vectors.
    pub fn bracket<S: Scalar>(&self, x: &[S], y: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let c = xi.clone() * yj;
                for (k, v) in self.basis_bracket(i, j) {
                    out[*k] += c.clone() * &S::from_cq(v);
                }
            }
        }
        out
    }

    /// Columns of `ad x` as sparse rows (column `j` is `[x, b_j]`).
    pub fn ad_columns<S: Scalar>(&self, x: &[S]) -> Vec<Row<S>> {
        let mut cols = vec![vec![S::zero(); self.dim]; self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, col) in cols.iter_mut().enumerate() {
                for (k, v) in self.basis_bracket(i, j) {
                    col[*k] += xi.clone() * &S::from_cq(v);
                }
            }
        }
        cols.iter().map(|c| sparse(c)).collect()
    }

    /// Applies a matrix given by sparse columns to a sparse vector.
    pub fn apply_columns<S: Scalar>(cols: &[Row<S>], v: &Row<S>) -> Row<S> {
        let mut acc: Row<S> = Vec::new();
        for (j, c) in v {
            acc = row_axpy(&acc, c, &cols[*j], 0.0);
        }
        acc
    }

    /// The Killing form `tr(ad x ad y)`.
    pub fn killing<S: Scalar>(&self, x: &[S], y: &[S]) -> S {
        let mut acc = S::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, v) in &self.killing[i] {
                if !y[*j].is_zero() {
                    acc += xi.clone() * &y[*j] * &S::from_cq(v);
                }
            }
        }
        acc
    }

    /// The covector `B(x, b_j)` for all basis vectors `b_j`.
    pub fn killing_covector<S: Scalar>(&self, x: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, v) in &self.killing[i] {
                out[*j] += xi.clone() * &S::from_cq(v);
            }
        }
        out
    }

    pub fn killing_entry(&self, i: usize, j: usize) -> Cq {
        self.killing[i].iter().find(|(k, _)| *k == j).map_or(Cq::zero(), |(_, v)| v.clone())
    }
}
