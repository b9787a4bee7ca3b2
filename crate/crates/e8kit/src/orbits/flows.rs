//! Closed-form one-parameter flows and their generators.
//!
//! Every flow comes with the algebra element it exponentiates, given as a
//! matrix over the coordinate basis, so that the closed form can be compared
//! with the matrix exponential.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::freudenthal::PVec;
use crate::jordan::Jordan;
use crate::lie::f4::Mat8;
use crate::lie::{E6, E7, F4};
use crate::linalg::LinearEndo;
use crate::octonion::Octonion;
use crate::space::Vector;

pub type C64 = Complex64;
pub type Oct = Octonion<C64>;
pub type Jc = Jordan<C64>;
pub type Pc = PVec<C64>;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn r(x: f64) -> C64 {
    C64::new(x, 0.0)
}

/// `sin(z) / z`, continuous at 0.
pub fn sinc(z: C64) -> C64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        r(1.0) - z2 / 6.0 + z2 * z2 / 120.0
    } else {
        z.sin() / z
    }
}

/// `(1 - cos z) / z^2`, continuous at 0.
pub fn cosc(z: C64) -> C64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        r(0.5) - z2 / 24.0 + z2 * z2 / 720.0
    } else {
        (r(1.0) - z.cos()) / (z * z)
    }
}

/// `sinh(z) / z`, continuous at 0.
pub fn sinhc(z: C64) -> C64 {
    sinc(z * C64::i())
}

/// Square root of a complex number with the principal branch.
pub fn csqrt(z: C64) -> C64 {
    z.sqrt()
}

/// Block of an 8x8 matrix, as f64-complex.
fn mat8_mul(a: &Mat8<C64>, b: &Mat8<C64>) -> Mat8<C64> {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..8).map(|k| a[i][k] * b[k][j]).sum()))
}

/// `lambda^2` with `M^3 = -lambda^2 M`, read from the largest entry of `M`.
pub fn cubic_lambda2(m: &Mat8<C64>) -> C64 {
    let m3 = mat8_mul(m, &mat8_mul(m, m));
    let (mut bi, mut bj, mut best) = (0, 0, 0.0);
    for i in 0..8 {
        for j in 0..8 {
            if m[i][j].norm() > best {
                best = m[i][j].norm();
                bi = i;
                bj = j;
            }
        }
    }
    if best == 0.0 {
        return r(0.0);
    }
    -m3[bi][bj] / m[bi][bj]
}

/// `exp(s M)` for `M` with `M^3 = -lambda^2 M`:
/// `I + sin(s lambda)/lambda M + (1 - cos(s lambda))/lambda^2 M^2`.
pub fn exp_cubic(m: &Mat8<C64>, s: C64) -> Mat8<C64> {
    let lam = csqrt(cubic_lambda2(m));
    let m2 = mat8_mul(m, m);
    let a = s * sinc(s * lam);
    let b = s * s * cosc(s * lam);
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { r(1.0) } else { r(0.0) } + a * m[i][j] + b * m2[i][j]))
}

/// The three so(8) blocks `(D1, D2, D3)` of `G_ij` acting on `x1, x2, x3`.
pub fn g_blocks(i: usize, j: usize) -> [Mat8<C64>; 3] {
    F4::<C64>::g(i, j).op().d
}

fn check_pair(i: usize, j: usize) -> Result<()> {
    if i == j || i > 7 || j > 7 {
        return Err(Error::Precondition(format!("G_{i}{j} needs distinct indices in 0..=7")));
    }
    Ok(())
}

/// `g_ij(s) = exp(s G_ij)` on the Jordan algebra.
pub fn g_rot(i: usize, j: usize, s: C64) -> Result<LinearEndo<C64>> {
    check_pair(i, j)?;
    let blocks = g_blocks(i, j);
    let e: Vec<Mat8<C64>> = blocks.iter().map(|m| exp_cubic(m, s)).collect();
    Ok(LinearEndo::of_map(|x: &Jc| {
        let mut y = x.clone();
        for k in 0..3 {
            y.x[k] = x.x[k].apply_matrix(&e[k]);
        }
        y
    }))
}

/// Generator of [`g_rot`].
pub fn g_rot_generator(i: usize, j: usize) -> Result<LinearEndo<C64>> {
    check_pair(i, j)?;
    let f = F4::<C64>::g(i, j);
    Ok(LinearEndo::of_map(|x: &Jc| f.act(x)))
}

fn nu_of(norm2: C64, what: &str) -> Result<C64> {
    if norm2.norm() < 1e-14 {
        return Err(Error::Precondition(format!("{what} is isotropic (norm zero)")));
    }
    Ok(csqrt(norm2))
}

/// The closed-form flow `alpha(a) = exp A1~(a)`.
pub fn alpha_a1(a: &Oct) -> Result<LinearEndo<C64>> {
    let nu = nu_of(a.norm(), "a")?;
    let (s2, c2) = ((r(2.0) * nu).sin(), (r(2.0) * nu).cos());
    let (s1, c1) = (nu.sin(), nu.cos());
    Ok(LinearEndo::of_map(|x: &Jc| {
        let [xi1, xi2, xi3] = x.xi;
        let [x1, x2, x3] = &x.x;
        let ax = a.inner(x1);
        let sum = (xi2 + xi3) / 2.0;
        let dif = (xi2 - xi3) / 2.0;
        let eta2 = sum + dif * c2 + ax / nu * s2;
        let eta3 = sum - dif * c2 - ax / nu * s2;
        let y1 = &(x1 - &a.scale(&((xi2 - xi3) / (r(2.0) * nu) * s2))) - &a.scale(&(r(2.0) * ax / (nu * nu) * s1 * s1));
        let y2 = &x2.scale(&c1) - &x3.mul(a).conj().scale(&(s1 / nu));
        let y3 = &x3.scale(&c1) + &a.mul(x2).conj().scale(&(s1 / nu));
        Jordan { xi: [xi1, eta2, eta3], x: [y1, y2, y3] }
    }))
}

pub fn alpha_a1_generator(a: &Oct) -> LinearEndo<C64> {
    let f = F4::a_tilde(1, a.clone());
    LinearEndo::of_map(|x: &Jc| f.act(x))
}

/// The hyperbolic flow `beta1(t) = exp F1(t)~`.
pub fn beta1(t: &Oct) -> Result<LinearEndo<C64>> {
    let nu = nu_of(t.norm(), "t")?;
    let (sh, ch) = (nu.sinh(), nu.cosh());
    let (sh2, ch2) = ((nu / 2.0).sinh(), (nu / 2.0).cosh());
    Ok(LinearEndo::of_map(|x: &Jc| {
        let [xi1, xi2, xi3] = x.xi;
        let [x1, x2, x3] = &x.x;
        let tx = t.inner(x1);
        let sum = (xi2 + xi3) / 2.0;
        let dif = (xi2 - xi3) / 2.0;
        let eta2 = dif + sum * ch + tx / nu * sh;
        let eta3 = -dif + sum * ch + tx / nu * sh;
        let y1 = &(x1 + &t.scale(&((xi2 + xi3) / (r(2.0) * nu) * sh))) + &t.scale(&(r(2.0) * tx / (nu * nu) * sh2 * sh2));
        let y2 = &x2.scale(&ch2) + &x3.mul(t).conj().scale(&(sh2 / nu));
        let y3 = &x3.scale(&ch2) + &t.mul(x2).conj().scale(&(sh2 / nu));
        Jordan { xi: [xi1, eta2, eta3], x: [y1, y2, y3] }
    }))
}

pub fn beta1_generator(t: &Oct) -> LinearEndo<C64> {
    let e = E6::t_tilde(Jordan::f(1, t.clone()));
    LinearEndo::of_map(|x: &Jc| e.act(x))
}

/// `alpha23(c) = exp c(E2 - E3)~`.
pub fn alpha23(cc: C64) -> LinearEndo<C64> {
    let (e, eh) = (cc.exp(), (cc / 2.0).exp());
    LinearEndo::of_map(|x: &Jc| Jordan {
        xi: [x.xi[0], e * x.xi[1], x.xi[2] / e],
        x: [x.x[0].clone(), x.x[1].scale(&(r(1.0) / eh)), x.x[2].scale(&eh)],
    })
}

pub fn alpha23_generator() -> LinearEndo<C64> {
    let e = E6::t_tilde(Jordan::<C64>::e(2).sub(&Jordan::e(3)));
    LinearEndo::of_map(|x: &Jc| e.act(x))
}

fn require_unit(theta: &Oct) -> Result<()> {
    let n = theta.norm();
    if (n - r(1.0)).norm() > 1e-9 {
        return Err(Error::Precondition(format!("theta conj(theta) = {n}, expected 1")));
    }
    if theta.0[2..].iter().any(|z| z.norm() > 1e-12) {
        return Err(Error::Precondition("theta must lie in span(e0, e1)".into()));
    }
    Ok(())
}

/// `phi(theta)`: `x1 -> conj(theta) x1 conj(theta)`, `x2 -> theta x2`,
/// `x3 -> x3 theta`, for `theta` in span(e0, e1) with `theta conj(theta) = 1`.
pub fn phi_theta(theta: &Oct) -> Result<LinearEndo<C64>> {
    require_unit(theta)?;
    let tb = theta.conj();
    Ok(LinearEndo::of_map(|x: &Jc| Jordan {
        xi: x.xi,
        x: [tb.mul(&x.x[0]).mul(&tb), theta.mul(&x.x[1]), x.x[2].mul(theta)],
    }))
}

/// Generator of `s -> phi(cos s + sin s e1)`.
pub fn phi_theta_generator() -> LinearEndo<C64> {
    let e1 = Oct::basis(1);
    LinearEndo::of_map(|x: &Jc| Jordan {
        xi: [r(0.0); 3],
        x: [-&(&e1.mul(&x.x[0]) + &x.x[0].mul(&e1)), e1.mul(&x.x[1]), x.x[2].mul(&e1)],
    })
}

/// The projection `p_i` keeping the diagonal and `x_i`.
fn p_i(i: usize, x: &Jc) -> Jc {
    let mut y = x.clone();
    for k in 0..3 {
        if k + 1 != i {
            y.x[k] = Oct::zero();
        }
    }
    y
}

fn check_index(i: usize) -> Result<()> {
    if !(1..=3).contains(&i) {
        return Err(Error::Precondition(format!("index {i} not in 1..=3")));
    }
    Ok(())
}

/// `alpha_i(a) = exp Phi(0, a E_i, -tau(a) E_i, 0)` on the Freudenthal space.
pub fn alpha_i(i: usize, a: C64) -> Result<LinearEndo<C64>> {
    check_index(i)?;
    let m = a.norm();
    let cs = r(m.cos());
    let sa = a * if m < 1e-8 { 1.0 - m * m / 6.0 } else { m.sin() / m };
    let st = sa.conj();
    let ei = Jordan::<C64>::e(i);
    let two = r(2.0);
    Ok(LinearEndo::of_map(|p: &Pc| {
        let px = p.x.add(&p_i(i, &p.x).scale(&(cs - r(1.0))));
        let py = p.y.add(&p_i(i, &p.y).scale(&(cs - r(1.0))));
        PVec {
            x: px.sub(&ei.cross(&p.y).scale(&(two * st))).add(&ei.scale(&(sa * p.eta))),
            y: py.add(&ei.cross(&p.x).scale(&(two * sa))).sub(&ei.scale(&(st * p.xi))),
            xi: sa * ei.inner(&p.y) + cs * p.xi,
            eta: -st * ei.inner(&p.x) + cs * p.eta,
        }
    }))
}

pub fn alpha_i_generator(i: usize, a: C64) -> Result<LinearEndo<C64>> {
    check_index(i)?;
    let ei = Jordan::<C64>::e(i);
    let phi = E7::new(Vector::zero(), ei.scale(&a), ei.scale(&-a.conj()), r(0.0));
    Ok(e7_matrix(&phi))
}

/// `beta(nu) = exp Phi((2/3) nu (2E1 - E2 - E3)~, 0, 0, -2 nu)`.
pub fn beta_nu(nu: C64) -> LinearEndo<C64> {
    let (e1, e2) = (nu.exp(), (r(2.0) * nu).exp());
    LinearEndo::of_map(|p: &Pc| {
        let mut x = p.x.clone();
        let mut y = p.y.clone();
        x.xi[0] *= e2;
        y.xi[0] /= e2;
        for k in 1..3 {
            x.x[k] = x.x[k].scale(&e1);
            y.x[k] = y.x[k].scale(&(r(1.0) / e1));
        }
        PVec { x, y, xi: p.xi / e2, eta: p.eta * e2 }
    })
}

pub fn beta_nu_generator(nu: C64) -> LinearEndo<C64> {
    let t = Jordan::<C64>::diag(r(4.0), r(-2.0), r(-2.0)).scale(&(nu / 3.0));
    let phi = E7::new(E6::t_tilde(t), Vector::zero(), Vector::zero(), -r(2.0) * nu);
    e7_matrix(&phi)
}

pub type Mat2 = [[C64; 2]; 2];

fn mul2(a: &Mat2, v: [C64; 2]) -> [C64; 2] {
    [a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]]
}

pub fn det2(a: &Mat2) -> C64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

pub fn matmul2(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

/// `exp` of a traceless 2x2 matrix `[[nu, a], [b, -nu]]`.
pub fn exp_sl2(nu: C64, a: C64, b: C64) -> Mat2 {
    let d = csqrt(nu * nu + a * b);
    let ch = d.cosh();
    let sh = sinhc(d);
    [[ch + sh * nu, sh * a], [sh * b, ch - sh * nu]]
}

/// `psi(A)` for `A` in SL(2, C).
///
/// The pairs `(xi1, eta)`, `(xi, eta1)`, `(eta2, xi3)`, `(eta3, xi2)` move
/// by `A`; `(x1, y1)` moves by the inverse transpose of `A`, which is what
/// the exponential of the generator gives for a complex-linear action.
pub fn psi_sl2(a: &Mat2) -> Result<LinearEndo<C64>> {
    if (det2(a) - r(1.0)).norm() > 1e-9 {
        return Err(Error::Precondition(format!("det A = {}, expected 1", det2(a))));
    }
    let ait: Mat2 = [[a[1][1], -a[1][0]], [-a[0][1], a[0][0]]];
    Ok(LinearEndo::of_map(|p: &Pc| {
        let (mut x, mut y) = (p.x.clone(), p.y.clone());
        let [xi1, eta] = mul2(a, [p.x.xi[0], p.eta]);
        let [xi, eta1] = mul2(a, [p.xi, p.y.xi[0]]);
        let [eta2, xi3] = mul2(a, [p.y.xi[1], p.x.xi[2]]);
        let [eta3, xi2] = mul2(a, [p.y.xi[2], p.x.xi[1]]);
        x.xi = [xi1, xi2, xi3];
        y.xi = [eta1, eta2, eta3];
        for k in 0..8 {
            let [u, v] = mul2(&ait, [p.x.x[0][k], p.y.x[0][k]]);
            x.x[0].0[k] = u;
            y.x[0].0[k] = v;
        }
        PVec { x, y, xi, eta }
    }))
}

/// Generator `Phi(phi(nu), a E1, b E1, nu)` of `psi(exp [[nu, a], [b, -nu]])`.
pub fn psi_generator(nu: C64, a: C64, b: C64) -> LinearEndo<C64> {
    let t = Jordan::<C64>::diag(r(4.0), r(-2.0), r(-2.0)).scale(&(nu / 3.0));
    let e1 = Jordan::<C64>::e(1);
    let phi = E7::new(E6::t_tilde(t), e1.scale(&a), e1.scale(&b), nu);
    e7_matrix(&phi)
}

/// Matrix of an e7 element acting on the Freudenthal space.
pub fn e7_matrix(phi: &E7<C64>) -> LinearEndo<C64> {
    let op = phi.op();
    LinearEndo::of_map(|p: &Pc| op.apply(p))
}

/// Coordinate weights of the Jordan inner product: 1 on the diagonal, 2 on
/// octonion coordinates.
fn jordan_gram(k: usize) -> f64 {
    if k < 3 {
        1.0
    } else {
        2.0
    }
}

/// Lifts `A` on the Jordan algebra (an element of the group of e6) to the
/// Freudenthal space as `(A X, A^{-t} Y, xi, eta)`, given `A^{-1}`.
pub fn lift_to_p(a: &LinearEndo<C64>, a_inv: &LinearEndo<C64>) -> LinearEndo<C64> {
    let mut m = LinearEndo::<C64>::identity(56);
    for i in 0..27 {
        for j in 0..27 {
            m.m[i][j] = a.m[i][j];
            m.m[27 + i][27 + j] = a_inv.m[j][i] * (jordan_gram(j) / jordan_gram(i));
        }
    }
    m
}

/// Matrix of `R -> exp(ad x) R`, used only by oracles.
pub fn max_abs(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
