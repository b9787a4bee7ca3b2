//! The named fixed-point dimension counts, each posed as a constraint set.

use crate::e8::E8;
use crate::freudenthal::PVec;
use crate::jordan::Jordan;
use crate::lie::e6::extract_e6;
use crate::lie::{E6, E7, F4};
use crate::scalar::{Cq, Scalar};
use crate::space::Vector;
use crate::subalgebra::{so6_generators, Ambient, Constraint, ConstraintSet, SubalgebraCertificate};

type C = Cq;

/// A dimension claim together with the computed certificate.
pub struct DimResult {
    pub id: &'static str,
    pub claim: &'static str,
    pub expected: usize,
    pub cert: SubalgebraCertificate,
}

impl DimResult {
    pub fn ok(&self) -> bool {
        self.cert.dim == self.expected
    }
}

fn f4_kills(x: Jordan<C>, label: String) -> Constraint {
    Constraint::linear(label, 52, move |j| F4::<C>::basis(j).act(&x).to_coords())
}

fn e6_kills(x: Jordan<C>, label: String) -> Constraint {
    Constraint::linear(label, 78, move |j| E6::<C>::basis(j).act(&x).to_coords())
}

fn e7_kills(p: PVec<C>, label: String) -> Constraint {
    Constraint::linear(label, 133, move |j| E7::<C>::basis(j).act(&p).to_coords())
}

/// `[f, Phi] = 0` where `f` is a linear map on the Freudenthal space.
fn e7_commutes_with(label: &str, f: impl Fn(&PVec<C>) -> PVec<C>) -> Constraint {
    let imgs: Vec<PVec<C>> = (0..56).map(|k| f(&PVec::basis(k))).collect();
    Constraint::linear(label, 133, |j| {
        let op = E7::<C>::basis(j).op();
        let mut out = Vec::with_capacity(56 * 56);
        for (k, fk) in imgs.iter().enumerate() {
            out.extend(f(&op.apply(&PVec::basis(k))).sub(&op.apply(fk)).to_coords());
        }
        out
    })
}

fn f4_stabilizer(ks: std::ops::Range<usize>, all_diag: bool) -> ConstraintSet {
    let mut cs = ConstraintSet::new(Ambient::F4);
    let diag = if all_diag { 1..4 } else { 1..2 };
    for i in diag {
        cs.push(f4_kills(Jordan::e(i), format!("delta E{i} = 0")));
    }
    for k in ks {
        cs.push(f4_kills(Jordan::fe(1, k), format!("delta F1(e{k}) = 0")));
    }
    cs
}

fn e7_sigma4() -> Constraint {
    Constraint::fixed_by("sigma'4 Phi sigma'4^-1 = Phi", 133, |j| E7::<C>::basis(j).sigma4_conj().to_coords())
}

fn e7_kappa_mu() -> [Constraint; 2] {
    [e7_commutes_with("kappa Phi = Phi kappa", |p| p.kappa()), e7_commutes_with("mu Phi = Phi mu", |p| p.mu())]
}

fn e8_sigma4() -> Constraint {
    Constraint::fixed_by("sigma'4 R = R", 248, |j| E8::<C>::basis(j).sigma4().to_coords())
}

fn e8_so6() -> Vec<Constraint> {
    so6_generators::<C>()
        .into_iter()
        .enumerate()
        .map(|(n, g)| {
            let rd = E8::from_e7(E7::from_e6(E6::from_f4(g)));
            Constraint::linear(format!("[R, R_D] = 0, so(6) generator {n}"), 248, move |j| {
                rd.bracket(&E8::basis(j)).to_coords()
            })
        })
        .collect()
}

fn e7_so6() -> Vec<Constraint> {
    so6_generators::<C>()
        .into_iter()
        .enumerate()
        .map(|(n, g)| {
            let pd = E7::from_e6(E6::from_f4(g));
            Constraint::linear(format!("[Phi, Phi_D] = 0, so(6) generator {n}"), 133, move |j| {
                pd.bracket(&E7::basis(j)).to_coords()
            })
        })
        .collect()
}

struct Spec {
    id: &'static str,
    claim: &'static str,
    expected: usize,
    build: fn() -> ConstraintSet,
}

const SPECS: &[Spec] = &[
    Spec {
        id: "f4-stab-k0-4",
        claim: "f4 elements killing E1, E2, E3 and F1(e_k), k = 0..4, form so(3)",
        expected: 3,
        build: || f4_stabilizer(0..5, true),
    },
    Spec {
        id: "f4-stab-k0-3",
        claim: "f4 elements killing E1, E2, E3 and F1(e_k), k = 0..3, form so(4)",
        expected: 6,
        build: || f4_stabilizer(0..4, true),
    },
    Spec {
        id: "f4-stab-k0-2",
        claim: "f4 elements killing E1, E2, E3 and F1(e_k), k = 0..2, form so(5)",
        expected: 10,
        build: || f4_stabilizer(0..3, true),
    },
    Spec {
        id: "f4-stab-k0-1",
        claim: "f4 elements killing E1, E2, E3 and F1(e_k), k = 0, 1, form so(6)",
        expected: 15,
        build: || f4_stabilizer(0..2, true),
    },
    Spec {
        id: "e7-sigma4",
        claim: "the sigma'4-fixed part of e7",
        expected: 33,
        build: || ConstraintSet::new(Ambient::E7).with(e7_sigma4()),
    },
    Spec {
        id: "e7-sigma4-so6",
        claim: "the sigma'4-fixed part of e7 commuting with so(6)",
        expected: 18,
        build: || {
            let mut cs = ConstraintSet::new(Ambient::E7).with(e7_sigma4());
            e7_so6().into_iter().for_each(|c| cs.push(c));
            cs
        },
    },
    Spec {
        id: "f4-stab-E1-k2-7",
        claim: "f4 elements killing E1 and F1(e_k), k = 2..7, form so(3)",
        expected: 3,
        build: || f4_stabilizer(2..8, false),
    },
    Spec {
        id: "e6-sigma-stab-E1-k2-7",
        claim: "sigma-commuting e6 elements killing E1 and F1(e_k), k = 2..7",
        expected: 6,
        build: || {
            let mut cs = ConstraintSet::new(Ambient::E6);
            cs.push(Constraint::fixed_by("sigma phi sigma = phi", 78, |j| {
                let op = E6::<C>::basis(j).op();
                extract_e6(|x| op.apply(&x.sigma()).sigma()).to_coords()
            }));
            cs.push(e6_kills(Jordan::e(1), "phi E1 = 0".into()));
            for k in 2..8 {
                cs.push(e6_kills(Jordan::fe(1, k), format!("phi F1(e{k}) = 0")));
            }
            cs
        },
    },
    Spec {
        id: "e7-kappa-mu-stab-E1t-k2-7",
        claim: "kappa, mu-commuting e7 elements killing (0, E1, 0, 1) and (F1(e_k), 0, 0, 0), k = 2..7",
        expected: 10,
        build: || {
            let mut cs = ConstraintSet::new(Ambient::E7);
            e7_kappa_mu().into_iter().for_each(|c| cs.push(c));
            cs.push(e7_kills(PVec::new(Vector::zero(), Jordan::e(1), C::zero(), C::one()), "Phi (0,E1,0,1) = 0".into()));
            for k in 2..8 {
                cs.push(e7_kills(PVec::dot(Jordan::fe(1, k)), format!("Phi F1(e{k})' = 0")));
            }
            cs
        },
    },
    Spec {
        id: "e7-kappa-mu-stab-k2-7",
        claim: "kappa, mu-commuting e7 elements killing (F1(e_k), 0, 0, 0), k = 2..7",
        expected: 15,
        build: || {
            let mut cs = ConstraintSet::new(Ambient::E7);
            e7_kappa_mu().into_iter().for_each(|c| cs.push(c));
            for k in 2..8 {
                cs.push(e7_kills(PVec::dot(Jordan::fe(1, k)), format!("Phi F1(e{k})' = 0")));
            }
            cs
        },
    },
    Spec {
        id: "e7-kappa-mu-sigma4",
        claim: "kappa, mu-commuting, sigma'4-fixed part of e7",
        expected: 30,
        build: || {
            let mut cs = ConstraintSet::new(Ambient::E7).with(e7_sigma4());
            e7_kappa_mu().into_iter().for_each(|c| cs.push(c));
            cs
        },
    },
    Spec {
        id: "e8-sigma4-so6-1t",
        claim: "sigma'4-fixed e8 elements commuting with so(6) and with 1_-",
        expected: 31,
        build: || {
            let mut cs = ConstraintSet::new(Ambient::E8).with(e8_sigma4());
            e8_so6().into_iter().for_each(|c| cs.push(c));
            let t = E8::<C>::one_t();
            cs.push(Constraint::linear("[R, 1_-] = 0", 248, move |j| t.bracket(&E8::basis(j)).to_coords()));
            cs
        },
    },
    Spec {
        id: "e8-sigma4-so6",
        claim: "sigma'4-fixed e8 elements commuting with so(6)",
        expected: 45,
        build: || {
            let mut cs = ConstraintSet::new(Ambient::E8).with(e8_sigma4());
            e8_so6().into_iter().for_each(|c| cs.push(c));
            cs
        },
    },
    Spec {
        id: "e8c-sigma4-so6",
        claim: "compact real form: sigma'4-fixed elements commuting with so(6), real dimension",
        expected: 45,
        build: || {
            let mut cs = ConstraintSet::new(Ambient::E8).with(e8_sigma4());
            e8_so6().into_iter().for_each(|c| cs.push(c));
            cs.push(Constraint::conj_fixed_by("lambda_omega R = tau R", 248, |j| {
                E8::<C>::basis(j).lambda_omega().to_coords()
            }));
            cs
        },
    },
    Spec {
        id: "e8-sigma4",
        claim: "the sigma'4-fixed part of e8",
        expected: 60,
        build: || ConstraintSet::new(Ambient::E8).with(e8_sigma4()),
    },
    Spec {
        id: "f4r-stab-k0-1",
        claim: "compact f4 elements killing E1, E2, E3, F1(e0), F1(e1), real dimension",
        expected: 15,
        build: || {
            let mut cs = f4_stabilizer(0..2, true);
            cs.push(Constraint::conj_fixed_by("delta real", 52, |j| F4::<C>::basis(j).to_coords()));
            cs
        },
    },
];

/// Number of dimension checks.
pub fn dimension_check_count() -> usize {
    SPECS.len()
}

/// Runs one check by position.
pub fn run_dimension_check(n: usize) -> DimResult {
    let s = &SPECS[n];
    let cert = (s.build)().solve().expect("constraint sets are well formed");
    DimResult { id: s.id, claim: s.claim, expected: s.expected, cert }
}

/// Runs every dimension check in a fixed order, in parallel.
pub fn dimension_suite() -> Vec<DimResult> {
    std::thread::scope(|sc| {
        let hs: Vec<_> = (0..SPECS.len()).map(|n| sc.spawn(move || run_dimension_check(n))).collect();
        hs.into_iter().map(|h| h.join().expect("dimension check thread")).collect()
    })
}
