//! Closed-form flows and the constructive reductions to basepoints, in the
//! approximate backend.
//!
//! A reduction returns a [`Witness`]: the ordered steps, the start and end
//! points and the residual against the basepoint. Replaying the steps on the
//! start point reproduces the end point.

pub mod flows;
pub mod sphere;
pub mod wreduce;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::e8::E8;
use crate::error::{Error, Result};
use crate::freudenthal::PVec;
use crate::jordan::Jordan;
use crate::lie::E7;
use crate::linalg::LinearEndo;
use crate::space::Vector;
use flows::{Mat2, Oct, C64};

pub use sphere::{reduce_sphere_f1, reduce_sphere_minus, SphereVariant};
pub use wreduce::{exp_ad, exp_theta_closed_form, reduce_w, WCase};

/// The space a witness lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    J,
    P,
    E8,
}

impl Space {
    pub fn dim(self) -> usize {
        match self {
            Space::J => 27,
            Space::P => 56,
            Space::E8 => 248,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Space::J => "J",
            Space::P => "P",
            Space::E8 => "e8",
        }
    }
}

/// One group element given by a flow and its parameter.
#[derive(Clone, Debug, PartialEq)]
pub enum FlowStep {
    /// `exp(s G_ij)` on the Jordan algebra.
    GRot { i: usize, j: usize, s: C64 },
    /// `exp A1~(a)` on the Jordan algebra.
    AlphaA1 { a: Oct },
    /// `exp F1(t)~` on the Jordan algebra.
    Beta1 { t: Oct },
    /// `exp c(E2 - E3)~` on the Jordan algebra.
    Alpha23 { c: C64 },
    /// `phi(theta)` on the Jordan algebra.
    PhiTheta { theta: Oct },
    /// `exp Phi(0, a E_i, -tau(a) E_i, 0)` on the Freudenthal space.
    AlphaI { i: usize, a: C64 },
    /// `exp Phi((2/3) nu (2E1 - E2 - E3)~, 0, 0, -2 nu)` on the Freudenthal space.
    BetaNu { nu: C64 },
    /// `psi(A)` on the Freudenthal space.
    PsiSl2 { a: Mat2 },
    /// `exp Phi` for an e7 element, on the Freudenthal space or on e8.
    ExpPhi { phi: E7<C64> },
    /// `exp ad Theta` for an e8 element.
    ExpTheta { x: E8<C64> },
}

/// Fixed-precision decimal text of a complex number.
pub fn fmt_c(z: C64) -> String {
    let clean = |x: f64| if x == 0.0 { 0.0 } else { x };
    format!("{:.15e}{:+.15e}i", clean(z.re), clean(z.im))
}

fn fmt_vec(v: &[C64]) -> Vec<String> {
    v.iter().map(|z| fmt_c(*z)).collect()
}

/// Nonzero coordinates as `{index: value}`.
fn fmt_sparse(v: &[C64]) -> Value {
    let mut m = serde_json::Map::new();
    for (k, z) in v.iter().enumerate() {
        if z.norm() > 0.0 {
            m.insert(k.to_string(), Value::String(fmt_c(*z)));
        }
    }
    Value::Object(m)
}

impl FlowStep {
    pub fn kind(&self) -> &'static str {
        match self {
            FlowStep::GRot { .. } => "g_rot",
            FlowStep::AlphaA1 { .. } => "alpha_A1",
            FlowStep::Beta1 { .. } => "beta1",
            FlowStep::Alpha23 { .. } => "alpha23",
            FlowStep::PhiTheta { .. } => "phi_theta",
            FlowStep::AlphaI { .. } => "alpha_i",
            FlowStep::BetaNu { .. } => "beta_nu",
            FlowStep::PsiSl2 { .. } => "psi_sl2",
            FlowStep::ExpPhi { .. } => "exp_phi",
            FlowStep::ExpTheta { .. } => "exp_theta",
        }
    }

    /// The natural space of the step.
    pub fn home(&self) -> Space {
        match self {
            FlowStep::GRot { .. }
            | FlowStep::AlphaA1 { .. }
            | FlowStep::Beta1 { .. }
            | FlowStep::Alpha23 { .. }
            | FlowStep::PhiTheta { .. } => Space::J,
            FlowStep::AlphaI { .. } | FlowStep::BetaNu { .. } | FlowStep::PsiSl2 { .. } | FlowStep::ExpPhi { .. } => {
                Space::P
            }
            FlowStep::ExpTheta { .. } => Space::E8,
        }
    }

    /// Parameters as decimal strings.
    pub fn params(&self) -> Value {
        match self {
            FlowStep::GRot { i, j, s } => json!({"i": i, "j": j, "s": fmt_c(*s)}),
            FlowStep::AlphaA1 { a } => json!({"a": fmt_vec(&a.0)}),
            FlowStep::Beta1 { t } => json!({"t": fmt_vec(&t.0)}),
            FlowStep::Alpha23 { c } => json!({"c": fmt_c(*c)}),
            FlowStep::PhiTheta { theta } => json!({"theta": fmt_vec(&theta.0)}),
            FlowStep::AlphaI { i, a } => json!({"i": i, "a": fmt_c(*a)}),
            FlowStep::BetaNu { nu } => json!({"nu": fmt_c(*nu)}),
            FlowStep::PsiSl2 { a } => json!({"A": a.iter().map(|r| fmt_vec(r)).collect::<Vec<_>>()}),
            FlowStep::ExpPhi { phi } => json!({"phi": fmt_sparse(&phi.to_coords())}),
            FlowStep::ExpTheta { x } => json!({"theta": fmt_sparse(&x.to_coords())}),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"kind": self.kind(), "params": self.params()})
    }

    pub fn inverse(&self) -> FlowStep {
        match self {
            FlowStep::GRot { i, j, s } => FlowStep::GRot { i: *i, j: *j, s: -s },
            FlowStep::AlphaA1 { a } => FlowStep::AlphaA1 { a: a.neg() },
            FlowStep::Beta1 { t } => FlowStep::Beta1 { t: t.neg() },
            FlowStep::Alpha23 { c } => FlowStep::Alpha23 { c: -c },
            FlowStep::PhiTheta { theta } => FlowStep::PhiTheta { theta: theta.conj() },
            FlowStep::AlphaI { i, a } => FlowStep::AlphaI { i: *i, a: -a },
            FlowStep::BetaNu { nu } => FlowStep::BetaNu { nu: -nu },
            FlowStep::PsiSl2 { a } => FlowStep::PsiSl2 { a: [[a[1][1], -a[0][1]], [-a[1][0], a[0][0]]] },
            FlowStep::ExpPhi { phi } => FlowStep::ExpPhi { phi: phi.neg() },
            FlowStep::ExpTheta { x } => FlowStep::ExpTheta { x: x.neg() },
        }
    }

    /// Matrix of the step on its home space (J or P).
    fn home_matrix(&self) -> Result<LinearEndo<C64>> {
        match self {
            FlowStep::GRot { i, j, s } => flows::g_rot(*i, *j, *s),
            FlowStep::AlphaA1 { a } => flows::alpha_a1(a),
            FlowStep::Beta1 { t } => flows::beta1(t),
            FlowStep::Alpha23 { c } => Ok(flows::alpha23(*c)),
            FlowStep::PhiTheta { theta } => flows::phi_theta(theta),
            FlowStep::AlphaI { i, a } => flows::alpha_i(*i, *a),
            FlowStep::BetaNu { nu } => Ok(flows::beta_nu(*nu)),
            FlowStep::PsiSl2 { a } => flows::psi_sl2(a),
            FlowStep::ExpPhi { phi } => Ok(flows::e7_matrix(phi).expm()),
            FlowStep::ExpTheta { .. } => Err(Error::Unsupported("exp_theta has no matrix on J or P".into())),
        }
    }

    /// Matrix of the step on `space`; Jordan flows lift to the Freudenthal space.
    pub fn matrix(&self, space: Space) -> Result<LinearEndo<C64>> {
        match (self.home(), space) {
            (h, s) if h == s && s != Space::E8 => self.home_matrix(),
            (Space::J, Space::P) => Ok(flows::lift_to_p(&self.home_matrix()?, &self.inverse().home_matrix()?)),
            _ => Err(Error::Unsupported(format!("{} does not act on {}", self.kind(), space.name()))),
        }
    }

    /// Applies the step to coordinates of a point of `space`.
    pub fn apply(&self, space: Space, v: &[C64]) -> Result<Vec<C64>> {
        if space == Space::E8 {
            let r = E8::from_coords(v);
            return match self {
                FlowStep::ExpTheta { x } => Ok(exp_ad(x, &r).to_coords()),
                FlowStep::ExpPhi { phi } => Ok(exp_ad(&E8::from_e7(phi.clone()), &r).to_coords()),
                _ => Err(Error::Unsupported(format!("{} does not act on e8", self.kind()))),
            };
        }
        Ok(self.matrix(space)?.apply(v))
    }
}

/// A numerical certificate that `steps` carry `start` to `target`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub context: String,
    pub space: Space,
    pub steps: Vec<FlowStep>,
    pub start: Vec<C64>,
    pub end: Vec<C64>,
    pub target: Vec<C64>,
    /// Largest coefficient of `end - target`.
    pub residual: f64,
    /// One line per retry with a random preamble.
    pub retries: Vec<String>,
}

fn dist(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

impl Witness {
    /// Replays the steps from `start`, returning the end point.
    pub fn replay(&self) -> Result<Vec<C64>> {
        let mut v = self.start.clone();
        for s in &self.steps {
            v = s.apply(self.space, &v)?;
        }
        Ok(v)
    }

    /// Replays the steps and returns the distance of the result to `target`.
    pub fn verify(&self) -> Result<f64> {
        Ok(dist(&self.replay()?, &self.target))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "context": self.context,
            "space": self.space.name(),
            "steps": self.steps.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
            "start": fmt_vec(&self.start),
            "end": fmt_vec(&self.end),
            "target": fmt_vec(&self.target),
            "residual": format!("{:.3e}", self.residual),
            "retries": self.retries,
        })
    }
}

/// A point being moved step by step, with the steps recorded.
pub(crate) struct Recorder {
    pub space: Space,
    pub state: Vec<C64>,
    pub steps: Vec<FlowStep>,
}

impl Recorder {
    pub fn new(space: Space, start: Vec<C64>) -> Self {
        Recorder { space, state: start, steps: Vec::new() }
    }

    pub fn push(&mut self, step: FlowStep) -> Result<()> {
        self.state = step.apply(self.space, &self.state)?;
        if self.state.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Internal(format!("{} produced a non-finite point", step.kind())));
        }
        self.steps.push(step);
        Ok(())
    }

    /// The Jordan part: the whole point on J, the `X` slot on P.
    pub fn jx(&self) -> Jordan<C64> {
        match self.space {
            Space::J => Jordan::from_coords(&self.state),
            _ => Jordan::from_coords(&self.state[..27]),
        }
    }

    pub fn pvec(&self) -> PVec<C64> {
        PVec::from_coords(&self.state)
    }

    pub fn e8(&self) -> E8<C64> {
        E8::from_coords(&self.state)
    }

    pub fn finish(self, context: String, start: Vec<C64>, target: Vec<C64>, retries: Vec<String>) -> Witness {
        let residual = dist(&self.state, &target);
        Witness { context, space: self.space, steps: self.steps, start, end: self.state, target, residual, retries }
    }
}

pub(crate) fn c64(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}
