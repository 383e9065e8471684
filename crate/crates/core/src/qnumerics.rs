//! Scalar layer: the primitive root of unity q, q-numbers and the
//! square-root branch used for every `sqrt[n]` matrix entry.
//!
//! With `q = exp(2 pi i k / (s+1))` every q-number is real,
//! `[x] = sin(2 pi k x / (s+1)) / sin(2 pi k / (s+1))`, and it is evaluated
//! that way rather than as a complex quotient.

use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Complex scalar used for every operator entry.
pub type CScalar = Complex64;

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_ROOT_INDEX: u64 = 1;

/// Parameters of one finite representation: Fock cutoff `s` (dimension
/// `s + 1`), root index `k` and the base tolerance for identity checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawConfig")]
pub struct AlgebraConfig {
    s: usize,
    k: u64,
    tol: f64,
}

#[derive(Deserialize)]
struct RawConfig {
    s: usize,
    k: u64,
    tol: f64,
}

impl TryFrom<RawConfig> for AlgebraConfig {
    type Error = Error;

    fn try_from(raw: RawConfig) -> Result<Self> {
        AlgebraConfig::new(raw.s, raw.k, raw.tol)
    }
}

impl AlgebraConfig {
    pub fn new(s: usize, k: u64, tol: f64) -> Result<Self> {
        if s < 2 {
            return Err(Error::CutoffTooSmall(s));
        }
        let order = s + 1;
        if num_integer::gcd(k, order as u64) != 1 {
            return Err(Error::NotPrimitive { k, order });
        }
        if !(tol.is_finite() && tol > 0.0) {
            return Err(Error::InvalidTolerance(tol));
        }
        Ok(Self { s, k, tol })
    }

    /// `k = 1`, `tol = 1e-9`.
    pub fn with_cutoff(s: usize) -> Result<Self> {
        Self::new(s, DEFAULT_ROOT_INDEX, DEFAULT_TOL)
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Fock space dimension, `s + 1`.
    pub fn dim(&self) -> usize {
        self.s + 1
    }

    /// Threshold used by every identity check: `tol * (s + 1)`.
    pub fn threshold(&self) -> f64 {
        self.tol * self.dim() as f64
    }

    pub fn with_tol(&self, tol: f64) -> Result<Self> {
        Self::new(self.s, self.k, tol)
    }

    /// `k * x mod (s + 1)`, always in `0..=s`.
    fn residue(&self, x: i64) -> i64 {
        let order = self.dim() as i128;
        ((self.k as i128 * x as i128).rem_euclid(order)) as i64
    }
}

/// `q = exp(2 pi i k / (s+1))`.
pub fn primitive_root(cfg: &AlgebraConfig) -> CScalar {
    q_power(1, cfg)
}

/// `q^n` for any integer `n`. The exponent is reduced modulo `s + 1` before
/// evaluation, so `q^(s+1)` is exactly one.
pub fn q_power(n: i64, cfg: &AlgebraConfig) -> CScalar {
    let r = cfg.residue(n);
    if r == 0 {
        return CScalar::new(1.0, 0.0);
    }
    CScalar::from_polar(1.0, TAU * r as f64 / cfg.dim() as f64)
}

/// The q-number `[x] = (q^x - q^-x) / (q - q^-1)` as a real sine ratio.
///
/// Zeros are exact: `[x] = 0` whenever `(s+1) | 2kx`, which covers
/// `x = s + 1` and, for odd `s`, also `x = (s+1)/2`.
pub fn q_number(x: i64, cfg: &AlgebraConfig) -> f64 {
    let order = cfg.dim() as i64;
    let r = cfg.residue(x);
    if r == 0 || 2 * r == order {
        return 0.0;
    }
    let theta = TAU / order as f64;
    let num = (theta * r as f64).sin();
    let den = (theta * cfg.residue(1) as f64).sin();
    num / den
}

/// Principal square root of `[x]`: `sqrt([x])` when `[x] >= 0`, otherwise
/// `i * sqrt(|[x]|)`.
pub fn sqrt_q_number(x: i64, cfg: &AlgebraConfig) -> CScalar {
    principal_sqrt(q_number(x, cfg))
}

pub(crate) fn principal_sqrt(v: f64) -> CScalar {
    if v >= 0.0 {
        CScalar::new(v.sqrt(), 0.0)
    } else {
        CScalar::new(0.0, (-v).sqrt())
    }
}
