//! Dense square complex matrices and vectors over the Fock basis.
//!
//! Storage is row-major. All entries are finite; constructors that accept
//! external data reject NaN and infinities.
//!
//! JSON form is `{"dim": n, "entries": [[re, im], ...]}`, row-major for
//! matrices and in index order for vectors.

use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qnumerics::CScalar;

const ZERO: CScalar = CScalar::new(0.0, 0.0);
const ONE: CScalar = CScalar::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    entries: Vec<CScalar>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![ONE; dim])
    }

    pub fn diagonal(diag: &[CScalar]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * m.dim + i] = d;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> CScalar) -> Self {
        let entries = (0..dim * dim).map(|idx| f(idx / dim, idx % dim)).collect();
        Self { dim, entries }
    }

    pub fn from_entries(dim: usize, entries: Vec<CScalar>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::EntryCount {
                expected: dim * dim,
                actual: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|z| !z.is_finite()) {
            return Err(Error::NonFinite(pos));
        }
        Ok(Self { dim, entries })
    }

    /// `|m><n|`: one at row `m`, column `n`.
    pub fn dyad(m: usize, n: usize, dim: usize) -> Result<Self> {
        for index in [m, n] {
            if index >= dim {
                return Err(Error::IndexOutOfRange { index, dim });
            }
        }
        let mut out = Self::zeros(dim);
        out.entries[m * dim + n] = ONE;
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[CScalar] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> CScalar {
        self.entries[row * self.dim + col]
    }

    pub fn column(&self, col: usize) -> Result<CVector> {
        if col >= self.dim {
            return Err(Error::IndexOutOfRange {
                index: col,
                dim: self.dim,
            });
        }
        Ok(CVector {
            entries: (0..self.dim).map(|r| self.get(r, col)).collect(),
        })
    }

    /// The diagonal entries in index order.
    pub fn diag(&self) -> Vec<CScalar> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for l in 0..d {
                let a = self.entries[i * d + l];
                if a == ZERO {
                    continue;
                }
                let row = &rhs.entries[l * d..(l + 1) * d];
                for (o, &b) in out.entries[i * d..(i + 1) * d].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(CScalar, CScalar) -> CScalar) -> Result<Self> {
        self.check_dim(rhs)?;
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    pub fn scale(&self, alpha: CScalar) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|&z| alpha * z).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i))
    }

    /// `A^p` by repeated squaring; `A^0 = I`.
    pub fn pow(&self, mut p: u32) -> Self {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        while p > 0 {
            if p & 1 == 1 {
                result = &result * &base;
            }
            p >>= 1;
            if p > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Entrywise max-abs distance.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Both `A A^dag` and `A^dag A` are within `tol` of the identity.
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }

    /// `max(|A A^dag - I|, |A^dag A - I|)` in the max-abs metric.
    pub fn unitarity_defect(&self) -> f64 {
        let adj = self.adjoint();
        let id = Self::identity(self.dim);
        let left = (&adj * self).max_abs_diff(&id).unwrap_or(f64::INFINITY);
        let right = (self * &adj).max_abs_diff(&id).unwrap_or(f64::INFINITY);
        left.max(right)
    }

    pub fn apply(&self, v: &CVector) -> Result<CVector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: v.dim(),
            });
        }
        let entries = (0..self.dim)
            .map(|i| {
                self.entries[i * self.dim..(i + 1) * self.dim]
                    .iter()
                    .zip(&v.entries)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect();
        Ok(CVector { entries })
    }
}

/// `|m><n|` in dimension `dim`.
pub fn dyad(m: usize, n: usize, dim: usize) -> Result<CMatrix> {
    CMatrix::dyad(m, n, dim)
}

// Operator forms panic on dimension mismatch; use the named methods to get a
// `Result` instead.
macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &CMatrix {
            type Output = CMatrix;
            fn $method(self, rhs: &CMatrix) -> CMatrix {
                CMatrix::$method(self, rhs).expect("matrix dimensions must agree")
            }
        }
    };
}
binop!(Mul, mul);
binop!(Add, add);
binop!(Sub, sub);

impl Sub for CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: CMatrix) -> CMatrix {
        &self - &rhs
    }
}

impl Mul<&CMatrix> for CScalar {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        rhs.scale(self)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CVector {
    entries: Vec<CScalar>,
}

impl CVector {
    pub fn from_entries(entries: Vec<CScalar>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|z| !z.is_finite()) {
            return Err(Error::NonFinite(pos));
        }
        Ok(Self { entries })
    }

    /// Number state `|n>`.
    pub fn basis(n: usize, dim: usize) -> Result<Self> {
        if n >= dim {
            return Err(Error::IndexOutOfRange { index: n, dim });
        }
        let mut entries = vec![ZERO; dim];
        entries[n] = ONE;
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[CScalar] {
        &self.entries
    }

    /// `<self|other>`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<CScalar> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `|self><other|`.
    pub fn outer(&self, other: &Self) -> Result<CMatrix> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(CMatrix::from_fn(self.dim(), |i, j| {
            self.entries[i] * other.entries[j].conj()
        }))
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    dim: usize,
    entries: Vec<[f64; 2]>,
}

fn to_pairs(entries: &[CScalar]) -> Vec<[f64; 2]> {
    entries.iter().map(|z| [z.re, z.im]).collect()
}

fn from_pairs(pairs: Vec<[f64; 2]>) -> Vec<CScalar> {
    pairs.into_iter().map(|[re, im]| CScalar::new(re, im)).collect()
}

impl Serialize for CMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            dim: self.dim,
            entries: to_pairs(&self.entries),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CMatrix {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(de)?;
        if wire.dim == 0 {
            return Err(serde::de::Error::custom("matrix dimension must be at least 1"));
        }
        CMatrix::from_entries(wire.dim, from_pairs(wire.entries)).map_err(serde::de::Error::custom)
    }
}

impl Serialize for CVector {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            dim: self.dim(),
            entries: to_pairs(&self.entries),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CVector {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = Wire::deserialize(de)?;
        if wire.entries.len() != wire.dim {
            return Err(serde::de::Error::custom(Error::EntryCount {
                expected: wire.dim,
                actual: wire.entries.len(),
            }));
        }
        CVector::from_entries(from_pairs(wire.entries)).map_err(serde::de::Error::custom)
    }
}
