//! Operators of the finite q-deformed boson algebra at `q = exp(2 pi i k/(s+1))`.
//!
//! Everything lives on the `(s+1)`-dimensional Fock space `|0>, ..., |s>`.
//! Matrix functions of the cyclic shift `H` are never computed with an
//! eigensolver: `H = F g^-1 F^dag` exactly, so `f(H)` is `F f(g^-1) F^dag`
//! with a diagonal middle factor.

use std::fmt;
use std::str::FromStr;

use crate::cmatrix::{CMatrix, CVector};
use crate::error::Result;
use crate::qnumerics::{
    primitive_root, q_number, q_power, sqrt_q_number, AlgebraConfig, CScalar,
};

fn real(x: f64) -> CScalar {
    CScalar::new(x, 0.0)
}

fn diag_from(cfg: &AlgebraConfig, f: impl Fn(i64) -> CScalar) -> CMatrix {
    let d: Vec<_> = (0..cfg.dim() as i64).map(f).collect();
    CMatrix::diagonal(&d)
}

/// `a = sum_n sqrt[n] |n-1><n|`, principal branch for each radical.
pub fn build_annihilation(cfg: &AlgebraConfig) -> CMatrix {
    CMatrix::from_fn(cfg.dim(), |i, j| {
        if j == i + 1 {
            sqrt_q_number(j as i64, cfg)
        } else {
            CScalar::new(0.0, 0.0)
        }
    })
}

/// `a^dag = sum_n sqrt[n+1] |n+1><n|`.
///
/// Built from the same radicals as [`build_annihilation`], so it equals the
/// plain transpose of `a`. It is the conjugate transpose only when every
/// `[n] >= 0`.
pub fn build_creation(cfg: &AlgebraConfig) -> CMatrix {
    CMatrix::from_fn(cfg.dim(), |i, j| {
        if i == j + 1 {
            sqrt_q_number(i as i64, cfg)
        } else {
            CScalar::new(0.0, 0.0)
        }
    })
}

pub fn build_number(cfg: &AlgebraConfig) -> CMatrix {
    diag_from(cfg, |n| real(n as f64))
}

/// `g = q^N`.
pub fn build_g(cfg: &AlgebraConfig) -> CMatrix {
    diag_from(cfg, |n| q_power(n, cfg))
}

pub fn build_g_inverse(cfg: &AlgebraConfig) -> CMatrix {
    diag_from(cfg, |n| q_power(-n, cfg))
}

/// Lower shift `h = sum_{n<s} |n+1><n|`.
pub fn build_h(cfg: &AlgebraConfig) -> CMatrix {
    CMatrix::from_fn(cfg.dim(), |i, j| real(if i == j + 1 { 1.0 } else { 0.0 }))
}

/// Upper shift `h^dag = sum_{n<s} |n><n+1|`.
pub fn build_h_dag(cfg: &AlgebraConfig) -> CMatrix {
    build_h(cfg).transpose()
}

/// `({g}, {g+1}) = (diag [n], diag [n+1])`.
pub fn build_braces(cfg: &AlgebraConfig) -> (CMatrix, CMatrix) {
    (
        diag_from(cfg, |n| real(q_number(n, cfg))),
        diag_from(cfg, |n| real(q_number(n + 1, cfg))),
    )
}

/// `(sqrt{g}, sqrt{g+1}) = (diag sqrt[n], diag sqrt[n+1])`.
pub fn build_sqrt_braces(cfg: &AlgebraConfig) -> (CMatrix, CMatrix) {
    (
        diag_from(cfg, |n| sqrt_q_number(n, cfg)),
        diag_from(cfg, |n| sqrt_q_number(n + 1, cfg)),
    )
}

/// Finite Fourier transform, `F_mn = q^(mn) / sqrt(s+1)`.
pub fn build_fourier(cfg: &AlgebraConfig) -> CMatrix {
    let norm = 1.0 / (cfg.dim() as f64).sqrt();
    CMatrix::from_fn(cfg.dim(), |m, n| q_power((m * n) as i64, cfg) * norm)
}

/// Cyclic shift `H = h + |0><s|`.
pub fn build_big_h(cfg: &AlgebraConfig) -> CMatrix {
    let s = cfg.s();
    CMatrix::from_fn(cfg.dim(), |i, j| {
        real(if i == j + 1 || (i == 0 && j == s) { 1.0 } else { 0.0 })
    })
}

/// Phase state `|phi_m> = F|m>`, the `m`-th column of `F`.
pub fn phase_state(m: usize, cfg: &AlgebraConfig) -> Result<CVector> {
    build_fourier(cfg).column(m)
}

/// `F A F^dag`.
pub fn fourier_conjugate(a: &CMatrix, cfg: &AlgebraConfig) -> Result<CMatrix> {
    let f = build_fourier(cfg);
    conjugate_by(&f, a)
}

fn conjugate_by(f: &CMatrix, a: &CMatrix) -> Result<CMatrix> {
    f.mul(a)?.mul(&f.adjoint())
}

/// `{H^dag}` and `{H^dag + 1}` by both routes.
#[derive(Debug, Clone, PartialEq)]
pub struct BigHBraces {
    /// `(H^dag - H) / (q - q^-1)`.
    pub brace_hdag: CMatrix,
    /// `(q H^dag - q^-1 H) / (q - q^-1)`.
    pub brace_hdag1: CMatrix,
    /// `F diag([n]) F^dag`.
    pub closed_brace_hdag: CMatrix,
    /// `F diag([n+1]) F^dag`.
    pub closed_brace_hdag1: CMatrix,
}

impl BigHBraces {
    /// Largest disagreement between the quotient and closed-form routes.
    pub fn route_gap(&self) -> f64 {
        let a = self.brace_hdag.max_abs_diff(&self.closed_brace_hdag);
        let b = self.brace_hdag1.max_abs_diff(&self.closed_brace_hdag1);
        a.unwrap_or(f64::INFINITY).max(b.unwrap_or(f64::INFINITY))
    }
}

pub fn brace_of_big_h(cfg: &AlgebraConfig) -> BigHBraces {
    big_h_braces(cfg, &build_fourier(cfg))
}

fn big_h_braces(cfg: &AlgebraConfig, f: &CMatrix) -> BigHBraces {
    let q = primitive_root(cfg);
    let qi = q.inv();
    let h = build_big_h(cfg);
    let hd = h.adjoint();
    let den = (q - qi).inv();
    let (bg, bg1) = build_braces(cfg);
    BigHBraces {
        brace_hdag: (&hd - &h).scale(den),
        brace_hdag1: (&hd.scale(q) - &h.scale(qi)).scale(den),
        closed_brace_hdag: &(f * &bg) * &f.adjoint(),
        closed_brace_hdag1: &(f * &bg1) * &f.adjoint(),
    }
}

/// `(sqrt{H^dag}, sqrt{H^dag+1}) = (F diag sqrt[n] F^dag, F diag sqrt[n+1] F^dag)`.
pub fn sqrt_brace_big_h(cfg: &AlgebraConfig) -> (CMatrix, CMatrix) {
    sqrt_big_h_braces(cfg, &build_fourier(cfg))
}

fn sqrt_big_h_braces(cfg: &AlgebraConfig, f: &CMatrix) -> (CMatrix, CMatrix) {
    let (r, r1) = build_sqrt_braces(cfg);
    let fd = f.adjoint();
    (&(f * &r) * &fd, &(f * &r1) * &fd)
}

/// Polar factorization of `a~ = F a F^dag` with unitary factor `g^-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarDecomposition {
    /// `g^-1`.
    pub unitary: CMatrix,
    /// `sqrt{H^dag}`.
    pub radial: CMatrix,
    /// `|a~ - g^-1 sqrt{H^dag}|`.
    pub reconstruction_error: f64,
    /// `|a~ - sqrt{H^dag+1} g^-1|`.
    pub left_form_error: f64,
    /// `|a~^dag - sqrt{H^dag} g|`.
    pub creation_right_error: f64,
    /// `|a~^dag - g sqrt{H^dag+1}|`.
    pub creation_left_error: f64,
    /// Whether the radial factor equals its adjoint to `tol * (s+1)`.
    /// False as soon as some `[n] < 0`.
    pub radial_is_self_adjoint: bool,
}

pub fn polar_decompose(cfg: &AlgebraConfig) -> PolarDecomposition {
    let ops = OperatorSet::build(cfg);
    let g_inv = build_g_inverse(cfg);
    let err = |x: &CMatrix, y: &CMatrix| x.max_abs_diff(y).expect("same dimension");
    PolarDecomposition {
        reconstruction_error: err(&ops.a_tilde, &(&g_inv * &ops.sqrt_brace_hdag)),
        left_form_error: err(&ops.a_tilde, &(&ops.sqrt_brace_hdag1 * &g_inv)),
        creation_right_error: err(&ops.a_tilde_dag, &(&ops.sqrt_brace_hdag * &ops.g)),
        creation_left_error: err(&ops.a_tilde_dag, &(&ops.g * &ops.sqrt_brace_hdag1)),
        radial_is_self_adjoint: err(&ops.sqrt_brace_hdag, &ops.sqrt_brace_hdag.adjoint())
            <= cfg.threshold(),
        unitary: g_inv,
        radial: ops.sqrt_brace_hdag,
    }
}

/// Smallest `p` with `a^p = 0`: one more than the longest run of nonzero
/// `[n]` for `1 <= n <= s`. Equals `s + 1` when `s` is even and `(s+1)/2`
/// when `s` is odd, because `[(s+1)/2]` vanishes.
pub fn nilpotency_index(cfg: &AlgebraConfig) -> u32 {
    let mut best = 0u32;
    let mut run = 0u32;
    for n in 1..=cfg.s() as i64 {
        if q_number(n, cfg) == 0.0 {
            run = 0;
        } else {
            run += 1;
            best = best.max(run);
        }
    }
    best + 1
}

/// Every operator of one configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSet {
    pub a: CMatrix,
    pub a_dag: CMatrix,
    pub n_op: CMatrix,
    pub g: CMatrix,
    pub h: CMatrix,
    pub h_dag: CMatrix,
    /// `{g} = [N]`.
    pub brace_g: CMatrix,
    /// `{g+1} = [N+1]`.
    pub brace_g1: CMatrix,
    pub fourier: CMatrix,
    pub big_h: CMatrix,
    pub big_h_dag: CMatrix,
    pub a_tilde: CMatrix,
    pub a_tilde_dag: CMatrix,
    pub n_tilde: CMatrix,
    /// Quotient form of `{H^dag}`.
    pub brace_hdag: CMatrix,
    /// Quotient form of `{H^dag+1}`.
    pub brace_hdag1: CMatrix,
    pub sqrt_brace_hdag: CMatrix,
    pub sqrt_brace_hdag1: CMatrix,
}

impl OperatorSet {
    pub fn build(cfg: &AlgebraConfig) -> Self {
        let f = build_fourier(cfg);
        let conj = |m: &CMatrix| conjugate_by(&f, m).expect("same dimension");
        let a = build_annihilation(cfg);
        let a_dag = build_creation(cfg);
        let n_op = build_number(cfg);
        let (brace_g, brace_g1) = build_braces(cfg);
        let big_h = build_big_h(cfg);
        let braces = big_h_braces(cfg, &f);
        let (sqrt_brace_hdag, sqrt_brace_hdag1) = sqrt_big_h_braces(cfg, &f);
        Self {
            a_tilde: conj(&a),
            a_tilde_dag: conj(&a_dag),
            n_tilde: conj(&n_op),
            a,
            a_dag,
            n_op,
            g: build_g(cfg),
            h: build_h(cfg),
            h_dag: build_h_dag(cfg),
            brace_g,
            brace_g1,
            big_h_dag: big_h.adjoint(),
            big_h,
            brace_hdag: braces.brace_hdag,
            brace_hdag1: braces.brace_hdag1,
            sqrt_brace_hdag,
            sqrt_brace_hdag1,
            fourier: f,
        }
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn get(&self, name: OperatorName) -> &CMatrix {
        use OperatorName::*;
        match name {
            A => &self.a,
            ADag => &self.a_dag,
            N => &self.n_op,
            G => &self.g,
            H => &self.h,
            HDag => &self.h_dag,
            BraceG => &self.brace_g,
            BraceG1 => &self.brace_g1,
            F => &self.fourier,
            BigH => &self.big_h,
            BigHDag => &self.big_h_dag,
            ATilde => &self.a_tilde,
            ATildeDag => &self.a_tilde_dag,
            NTilde => &self.n_tilde,
            BraceHDag => &self.brace_hdag,
            BraceHDag1 => &self.brace_hdag1,
            SqrtBraceHDag => &self.sqrt_brace_hdag,
            SqrtBraceHDag1 => &self.sqrt_brace_hdag1,
        }
    }
}

/// Stable external names of the operators, as used by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorName {
    A,
    ADag,
    N,
    G,
    H,
    HDag,
    BraceG,
    BraceG1,
    F,
    BigH,
    BigHDag,
    ATilde,
    ATildeDag,
    NTilde,
    BraceHDag,
    BraceHDag1,
    SqrtBraceHDag,
    SqrtBraceHDag1,
}

impl OperatorName {
    pub const ALL: [OperatorName; 18] = [
        Self::A,
        Self::ADag,
        Self::N,
        Self::G,
        Self::H,
        Self::HDag,
        Self::BraceG,
        Self::BraceG1,
        Self::F,
        Self::BigH,
        Self::BigHDag,
        Self::ATilde,
        Self::ATildeDag,
        Self::NTilde,
        Self::BraceHDag,
        Self::BraceHDag1,
        Self::SqrtBraceHDag,
        Self::SqrtBraceHDag1,
    ];

    pub fn as_str(self) -> &'static str {
        use OperatorName::*;
        match self {
            A => "a",
            ADag => "adag",
            N => "n",
            G => "g",
            H => "h",
            HDag => "hdag",
            BraceG => "braceG",
            BraceG1 => "braceG1",
            F => "f",
            BigH => "bigh",
            BigHDag => "bighdag",
            ATilde => "atilde",
            ATildeDag => "atildedag",
            NTilde => "ntilde",
            BraceHDag => "braceHdag",
            BraceHDag1 => "braceHdag1",
            SqrtBraceHDag => "sqrtBraceHdag",
            SqrtBraceHDag1 => "sqrtBraceHdag1",
        }
    }

    /// Closed-form spectrum `(n, eigenvalue)` for `n = 0..=s`, if this
    /// operator has one in the catalog: `g -> q^n`, `H -> q^-n`,
    /// `{H^dag} -> [n]`, `{H^dag+1} -> [n+1]`.
    pub fn closed_form_spectrum(self, cfg: &AlgebraConfig) -> Option<Vec<CScalar>> {
        let range = 0..cfg.dim() as i64;
        match self {
            Self::G => Some(range.map(|n| q_power(n, cfg)).collect()),
            Self::BigH => Some(range.map(|n| q_power(-n, cfg)).collect()),
            Self::BraceHDag => Some(range.map(|n| real(q_number(n, cfg))).collect()),
            Self::BraceHDag1 => Some(range.map(|n| real(q_number(n + 1, cfg))).collect()),
            _ => None,
        }
    }
}

impl fmt::Display for OperatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown operator '{0}'")]
pub struct UnknownOperator(pub String);

impl FromStr for OperatorName {
    type Err = UnknownOperator;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|op| op.as_str() == s)
            .ok_or_else(|| UnknownOperator(s.to_owned()))
    }
}
