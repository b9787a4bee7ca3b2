//! The Lie algebra f4: derivations `D + A1~(a1) + A2~(a2) + A3~(a3)` of the
//! Jordan algebra, with `D` in so(8).

use std::sync::OnceLock;

use crate::jordan::Jordan;
use crate::linalg::Echelon;
use crate::octonion::{Octonion, MUL_TABLE};
use crate::scalar::{Cq, Scalar};
use crate::space::Vector;

pub type Mat8<S> = [[S; 8]; 8];

/// Index pairs `(i, j)`, `i < j`, in coordinate order.
pub fn so8_pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..8).flat_map(|i| (i + 1..8).map(move |j| (i, j)))
}

pub fn zero8<S: Scalar>() -> Mat8<S> {
    std::array::from_fn(|_| std::array::from_fn(|_| S::zero()))
}

/// The generator `G_ij`: `e_j -> e_i`, `e_i -> -e_j`.
pub fn g_matrix<S: Scalar>(i: usize, j: usize) -> Mat8<S> {
    let mut m = zero8();
    m[i][j] = S::one();
    m[j][i] = -S::one();
    m
}

/// Companions `(D2, D3)` of each `G_ij` under infinitesimal triality:
/// `(D1 x) y + x (D2 y) = conj(D3 conj(x y))` with `D1 = G_ij`.
fn companions() -> &'static Vec<(Mat8<Cq>, Mat8<Cq>)> {
    static CELL: OnceLock<Vec<(Mat8<Cq>, Mat8<Cq>)>> = OnceLock::new();
    CELL.get_or_init(|| so8_pairs().map(|(i, j)| solve_companions(&g_matrix(i, j))).collect())
}

fn eps(k: usize) -> i64 {
    if k == 0 {
        1
    } else {
        -1
    }
}

/// Solves for the triality companions of an arbitrary `D1` in so(8).
pub fn solve_companions(d1: &Mat8<Cq>) -> (Mat8<Cq>, Mat8<Cq>) {
    // Unknowns: D2[c][b] at 8c+b, D3[k][m] at 64+8k+m; right-hand side at 128.
    let mut ech = Echelon::<Cq>::new(129);
    for a in 0..8 {
        for b in 0..8 {
            let x = Octonion::<Cq>::basis(a);
            let y = Octonion::<Cq>::basis(b);
            let lhs_known = x.apply_matrix(d1).mul(&y);
            let (s, m) = MUL_TABLE[a][b];
            let m = m as usize;
            for k in 0..8 {
                let mut row: Vec<(usize, Cq)> = Vec::new();
                for c in 0..8 {
                    let (sg, idx) = MUL_TABLE[a][c];
                    if idx as usize == k {
                        row.push((8 * c + b, Cq::from_i64(sg as i64)));
                    }
                }
                row.push((64 + 8 * k + m, Cq::from_i64(-(s as i64) * eps(m) * eps(k))));
                let rhs = -lhs_known[k].clone();
                if !rhs.is_zero() {
                    row.push((128, rhs));
                }
                row.sort_by_key(|e| e.0);
                ech.insert(row);
            }
        }
    }
    // Scalar multiples of the identity solve the homogeneous system; require D2 in so(8).
    for c in 0..8 {
        for b in c..8 {
            let row = if b == c {
                vec![(8 * c + b, Cq::one())]
            } else {
                vec![(8 * c + b, Cq::one()), (8 * b + c, Cq::one())]
            };
            ech.insert(row);
        }
    }
    let sol = ech.particular_solution().expect("triality companions exist");
    assert_eq!(ech.rank(), 128, "triality companions are unique");
    let d2 = std::array::from_fn(|c| std::array::from_fn(|b| sol[8 * c + b].clone()));
    let d3 = std::array::from_fn(|k| std::array::from_fn(|m| sol[64 + 8 * k + m].clone()));
    (d2, d3)
}

/// An element of f4.
#[derive(Clone, Debug, PartialEq)]
pub struct F4<S: Scalar> {
    /// Antisymmetric matrix of the so(8) part, `D = sum_{i<j} d[i][j] G_ij`.
    pub d: Mat8<S>,
    pub a: [Octonion<S>; 3],
}

/// An f4 element with its triality companions resolved, ready to act.
pub struct F4Op<S: Scalar> {
    pub d: [Mat8<S>; 3],
    pub a: [Octonion<S>; 3],
    has_d: bool,
}

impl<S: Scalar> F4<S> {
    pub fn g(i: usize, j: usize) -> Self {
        let (i, j, s) = if i < j { (i, j, S::one()) } else { (j, i, -S::one()) };
        let mut f = <Self as Vector<S>>::zero();
        f.d[i][j] = s.clone();
        f.d[j][i] = -s;
        f
    }

    /// `A_k~(a)` for `k` in 1..=3.
    pub fn a_tilde(k: usize, a: Octonion<S>) -> Self {
        let mut f = <Self as Vector<S>>::zero();
        f.a[k - 1] = a;
        f
    }

    pub fn op(&self) -> F4Op<S> {
        let mut d2 = zero8::<S>();
        let mut d3 = zero8::<S>();
        let mut has_d = false;
        for (n, (i, j)) in so8_pairs().enumerate() {
            let c = &self.d[i][j];
            if c.is_zero() {
                continue;
            }
            has_d = true;
            let (m2, m3) = &companions()[n];
            for r in 0..8 {
                for s in 0..8 {
                    if !m2[r][s].is_zero() {
                        d2[r][s] += c.clone() * &S::from_cq(&m2[r][s]);
                    }
                    if !m3[r][s].is_zero() {
                        d3[r][s] += c.clone() * &S::from_cq(&m3[r][s]);
                    }
                }
            }
        }
        F4Op { d: [self.d.clone(), d2, d3], a: self.a.clone(), has_d }
    }

    pub fn act(&self, x: &Jordan<S>) -> Jordan<S> {
        self.op().apply(x)
    }

    /// Lie bracket, computed as the commutator of the actions.
    pub fn bracket(&self, o: &Self) -> Self {
        let (p, q) = (self.op(), o.op());
        extract_f4(|v| p.apply(&q.apply(v)).sub(&q.apply(&p.apply(v))))
    }
}

impl<S: Scalar> F4Op<S> {
    pub fn apply(&self, x: &Jordan<S>) -> Jordan<S> {
        let mut out = <Jordan<S> as Vector<S>>::zero();
        if self.has_d {
            for k in 0..3 {
                out.x[k] = x.x[k].apply_matrix(&self.d[k]);
            }
        }
        for k in 0..3 {
            let a = &self.a[k];
            if a.is_zero() {
                continue;
            }
            add_a_tilde(&mut out, k, a, x);
        }
        out
    }
}

/// Adds `A_{k+1}~(a) X` (the commutator of the skew matrix `A_{k+1}(a)` with
/// `X`) into `out`; `k` is zero based.
fn add_a_tilde<S: Scalar>(out: &mut Jordan<S>, k: usize, a: &Octonion<S>, x: &Jordan<S>) {
    let (k1, k2) = ((k + 1) % 3, (k + 2) % 3);
    let p = a.inner(&x.x[k]).scale_i(2);
    out.xi[k1] += &p;
    out.xi[k2] -= &p;
    out.x[k] = &out.x[k] + &a.scale(&(x.xi[k2].clone() - &x.xi[k1]));
    out.x[k1] = &out.x[k1] - &a.conj().mul(&x.x[k2].conj());
    out.x[k2] = &out.x[k2] + &x.x[k1].conj().mul(&a.conj());
}

/// Recovers the f4 coordinates of a derivation from its values on
/// `E1`, `E2` and `F1(e_j)`.
pub fn extract_f4<S: Scalar>(f: impl Fn(&Jordan<S>) -> Jordan<S>) -> F4<S> {
    let fe1 = f(&Jordan::e(1));
    let fe2 = f(&Jordan::e(2));
    let a = [-&fe2.x[0], fe1.x[1].clone(), -&fe1.x[2]];
    let only_a = F4 { d: zero8(), a: a.clone() }.op();
    let mut d = zero8::<S>();
    for j in 0..8 {
        let v = Jordan::fe(1, j);
        let img = f(&v).sub(&only_a.apply(&v));
        for i in 0..8 {
            d[i][j] = img.x[0][i].clone();
        }
    }
    F4 { d, a }
}

impl<S: Scalar> Vector<S> for F4<S> {
    const DIM: usize = 52;

    fn zero() -> Self {
        F4 { d: zero8(), a: std::array::from_fn(|_| Octonion::zero()) }
    }
    fn add(&self, o: &Self) -> Self {
        F4 {
            d: std::array::from_fn(|i| std::array::from_fn(|j| self.d[i][j].clone() + &o.d[i][j])),
            a: std::array::from_fn(|k| &self.a[k] + &o.a[k]),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        F4 {
            d: std::array::from_fn(|i| std::array::from_fn(|j| self.d[i][j].clone() - &o.d[i][j])),
            a: std::array::from_fn(|k| &self.a[k] - &o.a[k]),
        }
    }
    fn scale(&self, s: &S) -> Self {
        F4 {
            d: std::array::from_fn(|i| std::array::from_fn(|j| self.d[i][j].clone() * s)),
            a: std::array::from_fn(|k| self.a[k].scale(s)),
        }
    }
    fn is_zero(&self) -> bool {
        self.a.iter().all(|o| o.is_zero()) && self.d.iter().all(|r| r.iter().all(|c| c.is_zero()))
    }
    fn write_coords(&self, out: &mut Vec<S>) {
        for (i, j) in so8_pairs() {
            out.push(self.d[i][j].clone());
        }
        for o in &self.a {
            out.extend(o.0.iter().cloned());
        }
    }
    fn from_coords(c: &[S]) -> Self {
        let mut d = zero8::<S>();
        for (n, (i, j)) in so8_pairs().enumerate() {
            d[i][j] = c[n].clone();
            d[j][i] = -c[n].clone();
        }
        F4 { d, a: std::array::from_fn(|k| Octonion::from_fn(|j| c[28 + 8 * k + j].clone())) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::oct_matmul;
    use crate::scalar::cq;

    type J = Jordan<Cq>;

    fn sample(seed: i64) -> J {
        let c: Vec<Cq> = (0..27).map(|k| cq((k * 5 + seed * 3) % 7 - 3, (k + seed) % 3 - 1)).collect();
        J::from_coords(&c)
    }

    #[test]
    fn a_tilde_is_matrix_commutator() {
        let a = Octonion::from_fn(|k| cq(k as i64 - 3, 1));
        let x = sample(3);
        for k in 1..=3 {
            let z = Octonion::<Cq>::zero();
            let mut m: [[Octonion<Cq>; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| z.clone()));
            let (r, c) = [(1, 2), (2, 0), (0, 1)][k - 1];
            m[r][c] = a.clone();
            m[c][r] = -&a.conj();
            let mx = x.to_matrix();
            let p = oct_matmul(&m, &mx);
            let q = oct_matmul(&mx, &m);
            let comm: [[Octonion<Cq>; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| &p[i][j] - &q[i][j]));
            assert_eq!(F4::a_tilde(k, a.clone()).act(&x), J::from_matrix(&comm));
        }
    }

    #[test]
    fn generators_are_derivations() {
        let (x, y) = (sample(1), sample(2));
        for n in 0..52 {
            let d = F4::<Cq>::basis(n);
            let lhs = d.act(&x.circ(&y));
            let rhs = d.act(&x).circ(&y).add(&x.circ(&d.act(&y)));
            assert_eq!(lhs, rhs, "basis element {n}");
        }
    }

    #[test]
    fn extraction_roundtrip() {
        let c: Vec<Cq> = (0..52).map(|k| cq(k as i64 % 5 - 2, k as i64 % 2)).collect();
        let f = F4::from_coords(&c);
        let op = f.op();
        assert_eq!(extract_f4(|v| op.apply(v)), f);
    }
}
