//! Exact solver for subalgebras cut out by linear conditions, with bases,
//! closure checks and JSON certificates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::jordan::Jordan;
use crate::lie::F4;
use crate::linalg::{Echelon, LinearEndo, Row};
use crate::scalar::{Cq, Scalar};
use crate::space::Vector;

/// The coordinatized space a constraint set lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    F4,
    E6,
    E7,
    E8,
    J,
    P,
}

impl Ambient {
    pub fn dim(self) -> usize {
        match self {
            Ambient::F4 => 52,
            Ambient::E6 => 78,
            Ambient::E7 => 133,
            Ambient::E8 => 248,
            Ambient::J => 27,
            Ambient::P => 56,
        }
    }
}

/// One linear condition `A v + B conj(v) = 0` on ambient coordinates `v`.
///
/// `a[j]` (and `b[j]`) is the image of the `j`-th basis vector as a sparse
/// row over the output coordinates.
pub struct Constraint {
    pub label: String,
    a: Vec<Row<Cq>>,
    b: Option<Vec<Row<Cq>>>,
}

fn columns(dim: usize, f: impl Fn(usize) -> Vec<Cq>) -> Vec<Row<Cq>> {
    (0..dim).map(|j| crate::linalg::sparse(&f(j))).collect()
}

impl Constraint {
    /// A complex-linear condition given by the images of basis vectors.
    pub fn linear(label: impl Into<String>, dim: usize, f: impl Fn(usize) -> Vec<Cq>) -> Self {
        Constraint { label: label.into(), a: columns(dim, f), b: None }
    }

    /// `f(v) = v` for a linear map `f`.
    pub fn fixed_by(label: impl Into<String>, dim: usize, f: impl Fn(usize) -> Vec<Cq>) -> Self {
        Self::linear(label, dim, |j| {
            let mut img = f(j);
            img[j] -= Cq::one();
            img
        })
    }

    /// `f(v) = tau(v)` for a linear map `f`, where `tau` conjugates
    /// coordinates. With `f` the identity this says `v` is real.
    pub fn conj_fixed_by(label: impl Into<String>, dim: usize, f: impl Fn(usize) -> Vec<Cq>) -> Self {
        let b = columns(dim, |j| {
            let mut e = vec![Cq::zero(); dim];
            e[j] = -Cq::one();
            e
        });
        Constraint { label: label.into(), a: columns(dim, f), b: Some(b) }
    }

    pub fn is_conj_linear(&self) -> bool {
        self.b.is_some()
    }

    fn out_dim(cols: &[Row<Cq>]) -> usize {
        cols.iter().filter_map(|c| c.last().map(|e| e.0 + 1)).max().unwrap_or(0)
    }

    /// Rows of the matrix, i.e. the transpose of the column list.
    fn rows(cols: &[Row<Cq>]) -> Vec<Row<Cq>> {
        let mut rows: Vec<Row<Cq>> = vec![Vec::new(); Self::out_dim(cols)];
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col {
                rows[*i].push((j, v.clone()));
            }
        }
        rows
    }
}

/// Linear conditions over one ambient space.
pub struct ConstraintSet {
    pub ambient: Ambient,
    pub constraints: Vec<Constraint>,
}

/// Basis and dimension of a solution space.
#[derive(Clone, Debug, Serialize)]
pub struct SubalgebraCertificate {
    pub ambient: Ambient,
    pub constraints: Vec<String>,
    /// Complex dimension, or real dimension when a conjugate-linear
    /// condition is present.
    pub dim: usize,
    pub real: bool,
    /// Basis coordinates. For real solution spaces these are complex
    /// coordinates of a real basis.
    #[serde(serialize_with = "ser_basis")]
    pub basis: Vec<Vec<Cq>>,
    pub closure_checked: bool,
}

fn ser_basis<Sr: serde::Serializer>(b: &[Vec<Cq>], s: Sr) -> std::result::Result<Sr::Ok, Sr::Error> {
    let text: Vec<Vec<String>> = b.iter().map(|v| v.iter().map(|c| c.to_text()).collect()).collect();
    text.serialize(s)
}

impl ConstraintSet {
    pub fn new(ambient: Ambient) -> Self {
        ConstraintSet { ambient, constraints: Vec::new() }
    }

    pub fn with(mut self, c: Constraint) -> Self {
        self.push(c);
        self
    }

    pub fn push(&mut self, c: Constraint) {
        self.constraints.push(c);
    }

    fn check_dims(&self) -> Result<()> {
        let n = self.ambient.dim();
        for c in &self.constraints {
            let ok = c.a.len() == n && c.b.as_ref().is_none_or(|b| b.len() == n);
            if !ok {
                return Err(Error::Precondition(format!(
                    "constraint `{}` has {} columns, ambient has dimension {n}",
                    c.label,
                    c.a.len()
                )));
            }
        }
        Ok(())
    }

    /// Exact kernel of all conditions.
    ///
    /// Complex-linear conditions are solved first. Conjugate-linear ones are
    /// then imposed on real coefficients over the complex solution space
    /// doubled into its real and imaginary parts.
    pub fn solve(&self) -> Result<SubalgebraCertificate> {
        self.check_dims()?;
        let n = self.ambient.dim();
        let mut ech = Echelon::<Cq>::new(n);
        for c in self.constraints.iter().filter(|c| !c.is_conj_linear()) {
            for row in Constraint::rows(&c.a) {
                ech.insert(row);
            }
        }
        let kernel = ech.kernel();
        let conj: Vec<&Constraint> = self.constraints.iter().filter(|c| c.is_conj_linear()).collect();
        let labels = self.constraints.iter().map(|c| c.label.clone()).collect();
        if conj.is_empty() {
            return Ok(SubalgebraCertificate {
                ambient: self.ambient,
                constraints: labels,
                dim: kernel.len(),
                real: false,
                basis: kernel,
                closure_checked: false,
            });
        }
        let basis = real_solutions(&kernel, &conj);
        Ok(SubalgebraCertificate {
            ambient: self.ambient,
            constraints: labels,
            dim: basis.len(),
            real: true,
            basis,
            closure_checked: false,
        })
    }
}

fn apply_cols(cols: &[Row<Cq>], v: &[Cq], conj: bool) -> Vec<Cq> {
    let mut out: Vec<Cq> = Vec::new();
    for (j, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = if conj { c.conj() } else { c.clone() };
        for (i, x) in &cols[j] {
            if out.len() <= *i {
                out.resize(*i + 1, Cq::zero());
            }
            out[*i] += x.clone() * &c;
        }
    }
    out
}

/// Real solutions `v = sum (x_k + i y_k) K_k` of `A v + B conj(v) = 0`.
fn real_solutions(kernel: &[Vec<Cq>], conds: &[&Constraint]) -> Vec<Vec<Cq>> {
    let k = kernel.len();
    let i = Cq::i();
    // Generators over R: K_k and i K_k.
    let gens: Vec<Vec<Cq>> =
        kernel.iter().cloned().chain(kernel.iter().map(|v| v.iter().map(|x| x.clone() * &i).collect())).collect();
    let mut ech = Echelon::<Cq>::new(2 * k);
    for c in conds {
        let b = c.b.as_ref().unwrap();
        let imgs: Vec<Vec<Cq>> = gens
            .iter()
            .map(|g| {
                let mut u = apply_cols(&c.a, g, false);
                let w = apply_cols(b, g, true);
                if u.len() < w.len() {
                    u.resize(w.len(), Cq::zero());
                }
                for (p, x) in w.into_iter().enumerate() {
                    u[p] += x;
                }
                u
            })
            .collect();
        let m = imgs.iter().map(|v| v.len()).max().unwrap_or(0);
        for r in 0..m {
            let at = |g: &Vec<Cq>| g.get(r).cloned().unwrap_or_else(Cq::zero);
            let re: Vec<Cq> = imgs.iter().map(|g| Cq::real(at(g).re.clone())).collect();
            let im: Vec<Cq> = imgs.iter().map(|g| Cq::real(at(g).im.clone())).collect();
            ech.insert_dense(&re);
            ech.insert_dense(&im);
        }
    }
    ech.kernel()
        .into_iter()
        .map(|coef| {
            let mut v = vec![Cq::zero(); kernel.first().map_or(0, |x| x.len())];
            for (g, c) in gens.iter().zip(&coef) {
                if c.is_zero() {
                    continue;
                }
                for (p, x) in g.iter().enumerate() {
                    v[p] += x.clone() * c;
                }
            }
            v
        })
        .collect()
}

impl SubalgebraCertificate {
    /// Checks that brackets of basis pairs stay in the span, and records it.
    pub fn check_closure(&mut self, bracket: impl Fn(&[Cq], &[Cq]) -> Vec<Cq>) -> bool {
        let n = self.ambient.dim();
        let mut ech = Echelon::<Cq>::new(n);
        for v in &self.basis {
            ech.insert_dense(v);
        }
        for a in 0..self.basis.len() {
            for b in a + 1..self.basis.len() {
                if !ech.contains(crate::linalg::sparse(&bracket(&self.basis[a], &self.basis[b]))) {
                    return false;
                }
            }
        }
        self.closure_checked = true;
        true
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// The 15 generators `G_ij`, `2 <= i < j <= 7`, of so(6) inside f4.
pub fn so6_generators<S: Scalar>() -> Vec<F4<S>> {
    (2..8).flat_map(|i| (i + 1..8).map(move |j| F4::g(i, j))).collect()
}

/// Restriction of `m` to the span of `basis`; reports the first image that
/// leaves the span.
pub fn restrict_endo<S: Scalar>(m: &LinearEndo<S>, basis: &[Vec<S>]) -> Result<LinearEndo<S>> {
    m.restrict(basis).map_err(|img| {
        let shown: Vec<String> = img.iter().map(|c| format!("{c:?}")).collect();
        Error::Precondition(format!("subspace is not invariant; image [{}] leaves it", shown.join(", ")))
    })
}

/// Names of the candidates that act as the identity on the span of `basis`.
pub fn kernel_probe<S: Scalar>(
    candidates: &[(&str, LinearEndo<S>)],
    basis: &[Vec<S>],
    tol: f64,
) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (name, m) in candidates {
        let r = restrict_endo(m, basis)?;
        if r.near(&LinearEndo::identity(r.dim), tol) {
            out.push(name.to_string());
        }
    }
    Ok(out)
}

/// Coordinates of `F1(e_2), ..., F1(e_7)`, the six-dimensional block fixed
/// pointwise by the so(6)-complement.
pub fn v6_basis<S: Scalar>() -> Vec<Vec<S>> {
    (2..8).map(|k| Jordan::<S>::fe(1, k).to_coords()).collect()
}
