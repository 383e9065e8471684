//! The identity catalog and the reports built from it.
//!
//! Each catalog entry is a list of `lhs = rhs` matrix relations plus optional
//! sharpness witnesses, which must stay at or above [`SHARPNESS_FLOOR`] so an
//! all-zero implementation cannot pass. A check's deviation is the largest
//! max-abs residual over its relations, or `f64::MAX` when a witness is
//! below the floor.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cmatrix::{dyad, CMatrix};
use crate::error::{Error, Result};
use crate::fock::OperatorSet;
use crate::qnumerics::{primitive_root, principal_sqrt, AlgebraConfig, CScalar};

/// Lower bound a sharpness witness must reach. Fixed, so it does not move
/// with the tolerance.
pub const SHARPNESS_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckName {
    Eq1Ccr,
    Eq3Truncation,
    Eq5Nilpotency,
    Eq6Decomposition,
    Eq9Gh,
    Eq10PartialIsometry,
    Eq11Products,
    Eq12Cyclic,
    Eq13FUnitary,
    Eq14HViaF,
    Eq15PhaseOrthonormal,
    Eq17TildeCcr,
    Eq18HRelations,
    Eq19Polar,
}

impl CheckName {
    pub const ALL: [CheckName; 14] = [
        Self::Eq1Ccr,
        Self::Eq3Truncation,
        Self::Eq5Nilpotency,
        Self::Eq6Decomposition,
        Self::Eq9Gh,
        Self::Eq10PartialIsometry,
        Self::Eq11Products,
        Self::Eq12Cyclic,
        Self::Eq13FUnitary,
        Self::Eq14HViaF,
        Self::Eq15PhaseOrthonormal,
        Self::Eq17TildeCcr,
        Self::Eq18HRelations,
        Self::Eq19Polar,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Self::Eq1Ccr => "eq1_ccr",
            Self::Eq3Truncation => "eq3_truncation",
            Self::Eq5Nilpotency => "eq5_nilpotency",
            Self::Eq6Decomposition => "eq6_decomposition",
            Self::Eq9Gh => "eq9_gh",
            Self::Eq10PartialIsometry => "eq10_partial_isometry",
            Self::Eq11Products => "eq11_products",
            Self::Eq12Cyclic => "eq12_cyclic",
            Self::Eq13FUnitary => "eq13_f_unitary",
            Self::Eq14HViaF => "eq14_h_via_f",
            Self::Eq15PhaseOrthonormal => "eq15_phase_orthonormal",
            Self::Eq17TildeCcr => "eq17_tilde_ccr",
            Self::Eq18HRelations => "eq18_H_relations",
            Self::Eq19Polar => "eq19_polar",
        }
    }
}

/// One `lhs = rhs` relation.
#[derive(Debug, Clone)]
pub struct Relation {
    pub label: &'static str,
    pub lhs: CMatrix,
    pub rhs: CMatrix,
}

impl Relation {
    fn new(label: &'static str, lhs: CMatrix, rhs: CMatrix) -> Self {
        Self { label, lhs, rhs }
    }

    pub fn residual(&self) -> f64 {
        self.lhs.max_abs_diff(&self.rhs).unwrap_or(f64::INFINITY)
    }
}

/// A quantity that must be at least [`SHARPNESS_FLOOR`].
#[derive(Debug, Clone, Copy)]
pub struct Witness {
    pub label: &'static str,
    pub value: f64,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: CheckName,
    pub relations: Vec<Relation>,
    pub witnesses: Vec<Witness>,
}

impl CatalogEntry {
    pub fn deviation(&self) -> f64 {
        if self.witnesses.iter().any(|w| w.value.is_nan() || w.value < SHARPNESS_FLOOR) {
            return f64::MAX;
        }
        self.relations
            .iter()
            .map(Relation::residual)
            .fold(0.0, f64::max)
    }
}

/// Longest run of nonzero diagonal entries `[n]`, `1 <= n <= s`, plus one.
fn nilpotency_index_from(brace_g: &CMatrix) -> u32 {
    let (mut best, mut run) = (0u32, 0u32);
    for z in brace_g.diag().iter().skip(1) {
        run = if *z == CScalar::new(0.0, 0.0) { 0 } else { run + 1 };
        best = best.max(run);
    }
    best + 1
}

/// Build every catalog relation from an operator set. Only `ops`, `q` and
/// `s` are used, so any construction route can be fed through it.
pub fn catalog(ops: &OperatorSet, cfg: &AlgebraConfig) -> Vec<CatalogEntry> {
    let d = ops.dim();
    let s = d - 1;
    let q = primitive_root(cfg);
    let qi = q.inv();
    let id = CMatrix::identity(d);
    let zero = CMatrix::zeros(d);
    let dy = |m: usize, n: usize| dyad(m, n, d).expect("index within Fock space");

    let OperatorSet {
        a,
        a_dag,
        n_op,
        g,
        h,
        h_dag,
        brace_g,
        brace_g1,
        fourier: f,
        big_h,
        big_h_dag,
        a_tilde,
        a_tilde_dag,
        n_tilde,
        brace_hdag,
        brace_hdag1,
        sqrt_brace_hdag,
        sqrt_brace_hdag1,
    } = ops;
    let f_dag = f.adjoint();
    let g_inv = g.adjoint();
    let conj = |m: &CMatrix| &(f * m) * &f_dag;
    let sqrt_diag = |m: &CMatrix| {
        let v: Vec<_> = m.diag().iter().map(|z| principal_sqrt(z.re)).collect();
        CMatrix::diagonal(&v)
    };
    let sqrt_g = sqrt_diag(brace_g);
    let sqrt_g1 = sqrt_diag(brace_g1);
    let den = (q - qi).inv();
    let top = s as u32 + 1;
    let nu = nilpotency_index_from(brace_g);
    let phases: Vec<_> = (0..d)
        .map(|m| f.column(m).expect("column within Fock space"))
        .collect();

    let rel = Relation::new;
    let entry = |name, relations, witnesses| CatalogEntry {
        name,
        relations,
        witnesses,
    };

    let gram = CMatrix::from_fn(d, |m, n| phases[m].inner(&phases[n]).expect("same dim"));
    let q_pow_neg_n_tilde = phases.iter().enumerate().fold(zero.clone(), |acc, (m, p)| {
        &acc + &p.outer(p).expect("same dim").scale(qi.powu(m as u32))
    });
    let top_q_number = CMatrix::diagonal(&[brace_g1.get(s, s)]);

    vec![
        entry(
            CheckName::Eq1Ccr,
            vec![
                rel("a a^dag - q a^dag a = q^-N", &(a * a_dag) - &(a_dag * a).scale(q), g_inv.clone()),
                rel("[N, a^dag] = a^dag", &(n_op * a_dag) - &(a_dag * n_op), a_dag.clone()),
                rel("[N, a] = -a", &(n_op * a) - &(a * n_op), a.scale(-CScalar::new(1.0, 0.0))),
            ],
            vec![],
        ),
        entry(
            CheckName::Eq3Truncation,
            vec![
                rel("a^dag |s><s| = 0", a_dag * &dy(s, s), zero.clone()),
                rel("[s+1] = 0", top_q_number, CMatrix::zeros(1)),
            ],
            vec![],
        ),
        entry(
            CheckName::Eq5Nilpotency,
            vec![
                rel("a^(s+1) = 0", a.pow(top), zero.clone()),
                rel("a^dag^(s+1) = 0", a_dag.pow(top), zero.clone()),
                rel("a^nu = 0", a.pow(nu), zero.clone()),
                rel("a^dag^nu = 0", a_dag.pow(nu), zero.clone()),
            ],
            vec![
                Witness { label: "|a^(nu-1)|", value: a.pow(nu - 1).max_abs() },
                Witness { label: "|a^dag^(nu-1)|", value: a_dag.pow(nu - 1).max_abs() },
            ],
        ),
        entry(
            CheckName::Eq6Decomposition,
            vec![
                rel("a = sqrt{g+1} h^dag", a.clone(), &sqrt_g1 * h_dag),
                rel("a = h^dag sqrt{g}", a.clone(), h_dag * &sqrt_g),
                rel("a^dag = sqrt{g} h", a_dag.clone(), &sqrt_g * h),
                rel("a^dag = h sqrt{g+1}", a_dag.clone(), h * &sqrt_g1),
            ],
            vec![],
        ),
        entry(
            CheckName::Eq9Gh,
            vec![
                rel("g h = q h g", g * h, (h * g).scale(q)),
                rel("g h^dag = q^-1 h^dag g", g * h_dag, (h_dag * g).scale(qi)),
            ],
            vec![],
        ),
        entry(
            CheckName::Eq10PartialIsometry,
            vec![
                rel("h h^dag = 1 - |0><0|", h * h_dag, &id - &dy(0, 0)),
                rel("h^dag h = 1 - |s><s|", h_dag * h, &id - &dy(s, s)),
            ],
            vec![Witness {
                label: "|h h^dag - 1|",
                value: (h * h_dag).max_abs_diff(&id).expect("same dim"),
            }],
        ),
        entry(
            CheckName::Eq11Products,
            vec![
                rel("a^dag a = {g}", a_dag * a, brace_g.clone()),
                rel("a a^dag = {g+1}", a * a_dag, brace_g1.clone()),
                rel("(g - g^-1)/(q - q^-1) = [N]", (g - &g_inv).scale(den), brace_g.clone()),
                rel(
                    "(q g - q^-1 g^-1)/(q - q^-1) = [N+1]",
                    (&g.scale(q) - &g_inv.scale(qi)).scale(den),
                    brace_g1.clone(),
                ),
            ],
            vec![],
        ),
        entry(
            CheckName::Eq12Cyclic,
            vec![
                rel("g^(s+1) = 1", g.pow(top), id.clone()),
                rel("h^(s+1) = 0", h.pow(top), zero.clone()),
            ],
            vec![Witness { label: "|h^s|", value: h.pow(top - 1).max_abs() }],
        ),
        entry(
            CheckName::Eq13FUnitary,
            vec![
                rel("F F^dag = 1", f * &f_dag, id.clone()),
                rel("F^dag F = 1", &f_dag * f, id.clone()),
            ],
            vec![],
        ),
        entry(
            CheckName::Eq14HViaF,
            vec![
                rel("h = F g^-1 F^dag - |0><s|", h.clone(), &conj(&g_inv) - &dy(0, s)),
                rel("h^dag = F g F^dag - |s><0|", h_dag.clone(), &conj(g) - &dy(s, 0)),
            ],
            vec![],
        ),
        entry(
            CheckName::Eq15PhaseOrthonormal,
            vec![rel("<phi_m|phi_n> = delta_mn", gram, id.clone())],
            vec![],
        ),
        entry(
            CheckName::Eq17TildeCcr,
            vec![
                rel(
                    "a~ a~^dag - q a~^dag a~ = H",
                    a_tilde * a_tilde_dag - (a_tilde_dag * a_tilde).scale(q),
                    big_h.clone(),
                ),
                rel("q^-N~ = H", q_pow_neg_n_tilde, big_h.clone()),
                rel("N~ F = F N", n_tilde * f, f * n_op),
            ],
            vec![],
        ),
        entry(
            CheckName::Eq18HRelations,
            vec![
                rel("g H = q H g", g * big_h, (big_h * g).scale(q)),
                rel("g H^dag = q^-1 H^dag g", g * big_h_dag, (big_h_dag * g).scale(qi)),
                rel("H^(s+1) = 1", big_h.pow(top), id.clone()),
                rel("H H^dag = 1", big_h * big_h_dag, id.clone()),
                rel("H^dag H = 1", big_h_dag * big_h, id.clone()),
                rel("H = F g^-1 F^dag", big_h.clone(), conj(&g_inv)),
            ],
            vec![],
        ),
        entry(
            CheckName::Eq19Polar,
            vec![
                rel("a~ = sqrt{H^dag+1} g^-1", a_tilde.clone(), sqrt_brace_hdag1 * &g_inv),
                rel("a~ = g^-1 sqrt{H^dag}", a_tilde.clone(), &g_inv * sqrt_brace_hdag),
                rel("a~^dag = sqrt{H^dag} g", a_tilde_dag.clone(), sqrt_brace_hdag * g),
                rel("a~^dag = g sqrt{H^dag+1}", a_tilde_dag.clone(), g * sqrt_brace_hdag1),
                rel("{H^dag} = F {g} F^dag", brace_hdag.clone(), conj(brace_g)),
                rel("{H^dag+1} = F {g+1} F^dag", brace_hdag1.clone(), conj(brace_g1)),
                rel("sqrt{H^dag}^2 = {H^dag}", sqrt_brace_hdag * sqrt_brace_hdag, brace_hdag.clone()),
                rel(
                    "sqrt{H^dag+1}^2 = {H^dag+1}",
                    sqrt_brace_hdag1 * sqrt_brace_hdag1,
                    brace_hdag1.clone(),
                ),
                rel("g^-1 unitary", &g_inv * g, id.clone()),
            ],
            vec![],
        ),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub deviation: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, deviation: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            deviation,
            threshold,
            pass: deviation <= threshold,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(flatten)]
    pub config: AlgebraConfig,
    pub checks: Vec<CheckResult>,
    pub overall_pass: bool,
}

impl VerificationReport {
    pub fn check(&self, name: CheckName) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name.key())
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }
}

/// Run the full 14-check catalog, each at threshold `tol * (s+1)`.
pub fn run_all(cfg: &AlgebraConfig) -> VerificationReport {
    let ops = OperatorSet::build(cfg);
    let threshold = cfg.threshold();
    let checks: Vec<_> = catalog(&ops, cfg)
        .iter()
        .map(|e| CheckResult::new(e.name.key(), e.deviation(), threshold))
        .collect();
    VerificationReport {
        config: *cfg,
        overall_pass: checks.iter().all(|c| c.pass),
        checks,
    }
}

/// One report per `s` in `s_min..=s_max`, ordered by `s`.
pub fn sweep(s_min: usize, s_max: usize, k: u64, tol: f64) -> Result<Vec<VerificationReport>> {
    if s_min < 2 || s_min > s_max {
        return Err(Error::InvalidRange { s_min, s_max });
    }
    let configs = (s_min..=s_max)
        .map(|s| AlgebraConfig::new(s, k, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(configs.par_iter().map(run_all).collect())
}
