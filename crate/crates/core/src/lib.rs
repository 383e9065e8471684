//! Finite-dimensional q-deformed boson algebra at a root of unity.
//!
//! For `q = exp(2 pi i k/(s+1))` the step operators `a`, `a^dag` act on an
//! `(s+1)`-dimensional Fock space. This crate builds them together with the
//! shift operators, the finite Fourier transform `F`, phase states and the
//! Fourier-conjugated operators, and checks the full set of algebraic
//! identities numerically, including the polar factorization
//! `F a F^dag = g^-1 sqrt{H^dag}` with unitary `g^-1`.
//!
//! ```
//! use qpolar::{run_all, AlgebraConfig};
//!
//! let cfg = AlgebraConfig::with_cutoff(4).unwrap();
//! assert!(run_all(&cfg).overall_pass);
//! ```

pub mod cmatrix;
pub mod error;
pub mod fock;
pub mod oracle;
pub mod qnumerics;
pub mod verify;

pub use cmatrix::{dyad, CMatrix, CVector};
pub use error::{Error, Result};
pub use fock::{
    brace_of_big_h, build_annihilation, build_big_h, build_braces, build_creation, build_fourier,
    build_g, build_g_inverse, build_h, build_h_dag, build_number, build_sqrt_braces,
    fourier_conjugate, nilpotency_index, phase_state, polar_decompose, sqrt_brace_big_h,
    BigHBraces, OperatorName, OperatorSet, PolarDecomposition, UnknownOperator,
};
pub use oracle::{brute_force_oracle, naive_operators, ORACLE_MAX_S, ORACLE_TOL};
pub use qnumerics::{
    primitive_root, q_number, q_power, sqrt_q_number, AlgebraConfig, CScalar, DEFAULT_ROOT_INDEX,
    DEFAULT_TOL,
};
pub use verify::{
    catalog, run_all, sweep, CatalogEntry, CheckName, CheckResult, Relation, VerificationReport,
    Witness, SHARPNESS_FLOOR,
};
