//! The so(10) basis `R_ij` inside the fixed points of `sigma'4` commuting
//! with so(6), the commutator audit against so(10) structure constants, and
//! the triality triple of `sigma'4`.

use crate::e8::E8;
use crate::freudenthal::PVec;
use crate::jordan::Jordan;
use crate::lie::{vee, E6, E7, F4};
use crate::octonion::{Octonion, MUL_TABLE};
use crate::scalar::Scalar;
use crate::space::Vector;

/// Index pairs `(i, j)`, `0 <= i < j <= 9`, in lexicographic order.
pub fn so10_pairs() -> Vec<(usize, usize)> {
    (0..10).flat_map(|i| (i + 1..10).map(move |j| (i, j))).collect()
}

/// Position of `(i, j)` in [`so10_pairs`].
pub fn pair_index(i: usize, j: usize) -> usize {
    assert!(i < j && j < 10);
    so10_pairs().iter().position(|&p| p == (i, j)).unwrap()
}

/// `[G_ij, G_kl]` in so(10) as a signed combination of basis pairs, with
/// `G_ij e_j = e_i`, `G_ij e_i = -e_j`.
pub fn so10_bracket(a: (usize, usize), b: (usize, usize)) -> Vec<(i64, (usize, usize))> {
    let (i, j) = a;
    let (k, l) = b;
    let mut terms: Vec<(i64, (usize, usize))> = Vec::new();
    let mut push = |c: i64, p: usize, q: usize| {
        if p == q {
            return;
        }
        let (c, p, q) = if p < q { (c, p, q) } else { (-c, q, p) };
        if let Some(t) = terms.iter_mut().find(|t| t.1 == (p, q)) {
            t.0 += c;
        } else {
            terms.push((c, (p, q)));
        }
    };
    if j == k {
        push(1, i, l);
    }
    if i == k {
        push(-1, j, l);
    }
    if j == l {
        push(-1, i, k);
    }
    if i == l {
        push(1, j, k);
    }
    terms.retain(|t| t.0 != 0);
    terms
}

/// Matrix of `G_ij` in so(10), used as an oracle for [`so10_bracket`].
pub fn so10_matrix(i: usize, j: usize) -> [[i64; 10]; 10] {
    let mut m = [[0; 10]; 10];
    m[i][j] = 1;
    m[j][i] = -1;
    m
}

fn j<S: Scalar>(k: usize) -> Jordan<S> {
    Jordan::e(k)
}

fn c<S: Scalar>(re: i64, im: i64, den: i64) -> S {
    S::ratio(re, den) + S::i() * S::ratio(im, den)
}

fn phi<S: Scalar>(p: E6<S>, a: Jordan<S>, b: Jordan<S>, nu: S) -> E7<S> {
    E7 { phi: p, a, b, nu }
}

fn e8_phi<S: Scalar>(p: E7<S>) -> E8<S> {
    E8::from_e7(p)
}

fn pv<S: Scalar>(x: Jordan<S>, y: Jordan<S>, xi: S, eta: S) -> PVec<S> {
    PVec { x, y, xi, eta }
}

fn z<S: Scalar>() -> Jordan<S> {
    Vector::zero()
}

/// The so(10) basis elements exactly as listed in the source table.
///
/// The entries carrying index 8 or 9, apart from `(8,9)`, are not in the
/// compact real form, and 114 of the 990 commutator identities fail on this
/// table. [`so10_basis`] applies the coefficient corrections.
pub fn so10_basis_as_printed<S: Scalar>() -> Vec<((usize, usize), E8<S>)> {
    let o = S::zero;
    let e23m = j::<S>(2).sub(&j(3));
    let e23p = j::<S>(2).add(&j(3));
    let e1 = j::<S>(1);
    let f1 = Jordan::<S>::fe(1, 0);
    let f1e1 = Jordan::<S>::fe(1, 1);
    let e1ve1 = vee(&e1, &e1);
    let i = S::i;
    let s = |v: &Jordan<S>, x: S| v.scale(&x);
    let a1 = |a: Octonion<S>| F4::a_tilde(1, a);

    let mut out: Vec<((usize, usize), E8<S>)> = Vec::new();
    let mut put = |p: (usize, usize), r: E8<S>| out.push((p, r));

    put((0, 1), e8_phi(E7::from_e6(E6::t_tilde(s(&e23m, -i())))));
    put((0, 2), e8_phi(phi(E6::zero(), s(&e23m, c(0, -1, 2)), s(&e23m, c(0, -1, 2)), o())));
    put((1, 2), e8_phi(phi(E6::zero(), s(&e23p, c(1, 0, 2)), s(&e23p, c(-1, 0, 2)), o())));
    put((0, 3), e8_phi(phi(E6::zero(), s(&e23m, c(-1, 0, 2)), s(&e23m, c(1, 0, 2)), o())));
    put((1, 3), e8_phi(phi(E6::zero(), s(&e23p, c(0, -1, 2)), s(&e23p, c(0, -1, 2)), o())));
    put((2, 3), e8_phi(phi(e1ve1.scale(&-i()), z(), z(), i())));
    put((0, 4), E8::from_parts(pv(e23m.neg(), z(), o(), o()), pv(z(), e23m.neg(), o(), o()), o(), o(), o()));
    put((1, 4), E8::from_parts(pv(s(&e23p, -i()), z(), o(), o()), pv(z(), s(&e23p, i()), o(), o()), o(), o(), o()));
    put((2, 4), E8::from_parts(pv(z(), s(&e1, i()), o(), -i()), pv(s(&e1, i()), z(), -i(), o()), o(), o(), o()));
    put((3, 4), E8::from_parts(pv(z(), e1.clone(), o(), S::one()), pv(e1.neg(), z(), -S::one(), o()), o(), o(), o()));
    put((0, 5), E8::from_parts(pv(s(&e23m, -i()), z(), o(), o()), pv(z(), s(&e23m, i()), o(), o()), o(), o(), o()));
    put((1, 5), E8::from_parts(pv(e23p.clone(), z(), o(), o()), pv(z(), e23p.clone(), o(), o()), o(), o(), o()));
    put((2, 5), E8::from_parts(pv(z(), e1.neg(), o(), S::one()), pv(e1.clone(), z(), -S::one(), o()), o(), o(), o()));
    put((3, 5), E8::from_parts(pv(z(), s(&e1, i()), o(), i()), pv(s(&e1, i()), z(), i(), o()), o(), o(), o()));
    put((4, 5), E8 { r: c(0, -1, 2), ..e8_phi(phi(e1ve1.scale(&i()), z(), z(), c(0, 1, 2))) });
    put((0, 6), E8::from_parts(pv(z(), e23m.neg(), o(), o()), pv(e23m.clone(), z(), o(), o()), o(), o(), o()));
    put((1, 6), E8::from_parts(pv(z(), s(&e23p, i()), o(), o()), pv(s(&e23p, i()), z(), o(), o()), o(), o(), o()));
    put((2, 6), E8::from_parts(pv(s(&e1, i()), z(), -i(), o()), pv(z(), s(&e1, -i()), o(), i()), o(), o(), o()));
    put((3, 6), E8::from_parts(pv(e1.neg(), z(), -S::one(), o()), pv(z(), e1.neg(), o(), -S::one()), o(), o(), o()));
    put(
        (4, 6),
        E8 { s: c(-1, 0, 2), t: c(1, 0, 2), ..e8_phi(phi(E6::zero(), s(&e1, c(1, 0, 2)), s(&e1, c(-1, 0, 2)), o())) },
    );
    put(
        (5, 6),
        E8 { s: c(0, -1, 2), t: c(0, -1, 2), ..e8_phi(phi(E6::zero(), s(&e1, c(0, -1, 2)), s(&e1, c(0, -1, 2)), o())) },
    );
    put((0, 7), E8::from_parts(pv(z(), s(&e23m, -i()), o(), o()), pv(s(&e23m, -i()), z(), o(), o()), o(), o(), o()));
    put((1, 7), E8::from_parts(pv(z(), e23p.neg(), o(), o()), pv(e23p.clone(), z(), o(), o()), o(), o(), o()));
    put((2, 7), E8::from_parts(pv(e1.neg(), z(), S::one(), o()), pv(z(), e1.neg(), o(), S::one()), o(), o(), o()));
    put((3, 7), E8::from_parts(pv(s(&e1, -i()), z(), -i(), o()), pv(z(), s(&e1, i()), o(), i()), o(), o(), o()));
    put(
        (4, 7),
        E8 { s: c(0, -1, 2), t: c(0, -1, 2), ..e8_phi(phi(E6::zero(), s(&e1, c(0, 1, 2)), s(&e1, c(0, 1, 2)), o())) },
    );
    put(
        (5, 7),
        E8 { s: c(1, 0, 2), t: c(-1, 0, 2), ..e8_phi(phi(E6::zero(), s(&e1, c(1, 0, 2)), s(&e1, c(-1, 0, 2)), o())) },
    );
    put((6, 7), E8 { r: c(0, -1, 2), ..e8_phi(phi(e1ve1.scale(&-i()), z(), z(), c(0, -1, 2))) });
    put((0, 8), e8_phi(E7::from_e6(E6::from_f4(a1(Octonion::real(i()))))));
    put((1, 8), e8_phi(E7::from_e6(E6::t_tilde(f1.neg()))));
    put((2, 8), e8_phi(phi(E6::zero(), s(&f1, c(-1, 0, 2)), s(&f1, c(-1, 0, 2)), o())));
    put((3, 8), e8_phi(phi(E6::zero(), s(&f1, c(0, 1, 2)), s(&f1, c(0, -1, 2)), o())));
    put((4, 8), E8::from_parts(pv(s(&f1, i()), z(), o(), o()), pv(z(), s(&f1, i()), o(), o()), o(), o(), o()));
    put((5, 8), E8::from_parts(pv(f1.neg(), z(), o(), o()), pv(z(), f1.clone(), o(), o()), o(), o(), o()));
    put((6, 8), E8::from_parts(pv(z(), s(&f1, i()), o(), o()), pv(s(&f1, -i()), z(), o(), o()), o(), o(), o()));
    put((7, 8), E8::from_parts(pv(z(), f1.neg(), o(), o()), pv(f1.neg(), z(), o(), o()), o(), o(), o()));
    put((0, 9), e8_phi(E7::from_e6(E6::from_f4(a1(Octonion::basis(1)).scale(&i())))));
    put((1, 9), e8_phi(E7::from_e6(E6::t_tilde(f1e1.neg()))));
    put((2, 9), e8_phi(phi(E6::zero(), s(&f1e1, c(-1, 0, 2)), s(&f1e1, c(-1, 0, 2)), o())));
    put((3, 9), e8_phi(phi(E6::zero(), s(&f1e1, c(0, 1, 2)), s(&f1e1, c(0, -1, 2)), o())));
    put((4, 9), E8::from_parts(pv(s(&f1e1, i()), z(), o(), o()), pv(z(), s(&f1e1, i()), o(), o()), o(), o(), o()));
    put((5, 9), E8::from_parts(pv(f1e1.neg(), z(), o(), o()), pv(z(), f1e1.clone(), o(), o()), o(), o(), o()));
    put((6, 9), E8::from_parts(pv(z(), s(&f1e1, -i()), o(), o()), pv(s(&f1e1, i()), z(), o(), o()), o(), o(), o()));
    put((7, 9), E8::from_parts(pv(z(), f1e1.neg(), o(), o()), pv(f1e1.neg(), z(), o(), o()), o(), o(), o()));
    let d4 = a1(Octonion::one()).bracket(&a1(Octonion::basis(1))).neg();
    put((8, 9), e8_phi(E7::from_e6(E6::from_f4(d4))));
    out
}

/// A correction to one printed entry: the corrected element is the printed
/// one times `(re + im i) / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub pair: (usize, usize),
    pub re: i64,
    pub im: i64,
    pub den: i64,
}

/// Corrections that turn the printed table into a compact so(10) basis
/// satisfying all 990 commutator identities.
///
/// Every entry carrying index 8 or 9 is rescaled. The factors are forced by
/// the identities up to the automorphism `G_k8, G_k9 -> -G_k8, -G_k9`; that
/// sign is fixed so that `(2,8)` becomes `Phi(0, -i/2 F1(1), -i/2 F1(1), 0)`,
/// the form that also appears in the worked example `[R_28, R_89] = R_29`.
pub fn so10_errata() -> Vec<Erratum> {
    let mut v = Vec::new();
    for idx in [8, 9] {
        v.push(Erratum { pair: (0, idx), re: 0, im: 1, den: 2 });
        for m in 1..8 {
            let im = if (m, idx) == (6, 9) { -1 } else { 1 };
            v.push(Erratum { pair: (m, idx), re: 0, im, den: 1 });
        }
    }
    v.push(Erratum { pair: (8, 9), re: 1, im: 0, den: 4 });
    v
}

/// The so(10) basis with the documented corrections applied.
pub fn so10_basis<S: Scalar>() -> Vec<((usize, usize), E8<S>)> {
    let mut b = so10_basis_as_printed::<S>();
    for e in so10_errata() {
        let slot = b.iter_mut().find(|x| x.0 == e.pair).unwrap();
        slot.1 = slot.1.scale(&c(e.re, e.im, e.den));
    }
    b
}

/// Outcome of one commutator identity.
#[derive(Clone, Debug)]
pub struct CommutatorCheck {
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub expected: Vec<(i64, (usize, usize))>,
    pub ok: bool,
    pub residual: f64,
}

/// Checks `[R_a, R_b] = phi([G_a, G_b])` for all 990 unordered pairs.
pub fn so10_check<S: Scalar>(basis: &[((usize, usize), E8<S>)], tol: f64) -> Vec<CommutatorCheck> {
    let lookup = |p: (usize, usize)| &basis.iter().find(|e| e.0 == p).unwrap().1;
    let mut out = Vec::with_capacity(990);
    for x in 0..basis.len() {
        for y in x + 1..basis.len() {
            let (pa, ra) = (&basis[x].0, &basis[x].1);
            let (pb, rb) = (&basis[y].0, &basis[y].1);
            let expected = so10_bracket(*pa, *pb);
            let mut rhs = E8::<S>::zero();
            for (c, p) in &expected {
                rhs = rhs.axpy(&S::from_i64(*c), lookup(*p));
            }
            let lhs = ra.bracket(rb);
            let residual = lhs.dist(&rhs);
            out.push(CommutatorCheck { a: *pa, b: *pb, expected, ok: lhs.near(&rhs, tol), residual });
        }
    }
    out
}

/// An 8x8 integer matrix acting on octonion coordinates (column convention).
pub type IMat8 = [[i64; 8]; 8];

/// The triple `(sigma'1, sigma'2, sigma'3)` as printed block matrices.
pub struct TrialityTriple {
    pub s1: IMat8,
    pub s2: IMat8,
    pub s3: IMat8,
}

fn block_diag(blocks: [[[i64; 2]; 2]; 4]) -> IMat8 {
    let mut m = [[0; 8]; 8];
    for (b, blk) in blocks.iter().enumerate() {
        for r in 0..2 {
            for c in 0..2 {
                m[2 * b + r][2 * b + c] = blk[r][c];
            }
        }
    }
    m
}

impl TrialityTriple {
    /// `sigma'1 = diag(1,1,-1,...,-1)`, `sigma'2 = diag(-J,-J,-J,-J)`,
    /// `sigma'3 = diag(J,-J,-J,-J)` with `J = [[0,1],[-1,0]]`.
    pub fn sigma4() -> Self {
        let jm = [[0, 1], [-1, 0]];
        let mj = [[0, -1], [1, 0]];
        let mut s1 = [[0; 8]; 8];
        for (k, row) in s1.iter_mut().enumerate() {
            row[k] = if k < 2 { 1 } else { -1 };
        }
        TrialityTriple { s1, s2: block_diag([mj, mj, mj, mj]), s3: block_diag([jm, mj, mj, mj]) }
    }

    fn apply(m: &IMat8, x: &Octonion<crate::scalar::Cq>) -> Octonion<crate::scalar::Cq> {
        let mm = std::array::from_fn(|i| std::array::from_fn(|j| crate::scalar::Cq::from_i64(m[i][j])));
        x.apply_matrix(&mm)
    }

    /// Checks `(s1 x)(s2 y) = conj(s3 conj(x y))` on all basis pairs under the
    /// given multiplication table. Returns the first failing pair.
    pub fn check_with(&self, table: &[[(i8, u8); 8]; 8]) -> Result<(), (usize, usize)> {
        use crate::octonion::mul_with;
        for a in 0..8 {
            for b in 0..8 {
                let (x, y) = (Octonion::basis(a), Octonion::basis(b));
                let lhs = mul_with(table, &Self::apply(&self.s1, &x), &Self::apply(&self.s2, &y));
                let rhs = Self::apply(&self.s3, &mul_with(table, &x, &y).conj()).conj();
                if lhs != rhs {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }

    pub fn check(&self) -> Result<(), (usize, usize)> {
        self.check_with(&MUL_TABLE)
    }

    /// The action `(x1, x2, x3) -> (s1 x1, s2 x2, s3 x3)` on the Jordan algebra.
    pub fn act(&self, x: &Jordan<crate::scalar::Cq>) -> Jordan<crate::scalar::Cq> {
        Jordan {
            xi: x.xi.clone(),
            x: [Self::apply(&self.s1, &x.x[0]), Self::apply(&self.s2, &x.x[1]), Self::apply(&self.s3, &x.x[2])],
        }
    }
}

/// Integer determinant by cofactor-free fraction-free elimination.
pub fn det_i64(m: &IMat8) -> i64 {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let n = 8;
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else { return 0 };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for jx in k + 1..n {
                a[i][jx] = (a[i][jx] * a[k][k] - a[i][k] * a[k][jx]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// The permutation `delta1`: `e0 <-> e6`, `e1 <-> e7`, others fixed.
pub fn delta1() -> IMat8 {
    let mut m = [[0; 8]; 8];
    let perm = [6, 7, 2, 3, 4, 5, 0, 1];
    for (src, &dst) in perm.iter().enumerate() {
        m[dst][src] = 1;
    }
    m
}
