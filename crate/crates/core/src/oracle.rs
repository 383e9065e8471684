//! Brute-force cross-check of the closed-form construction.
//!
//! Everything here is rebuilt from dyad sums: q-numbers come from the complex
//! quotient `(q^x - q^-x)/(q - q^-1)` with powers of `q` obtained by repeated
//! multiplication, the tilde operators are the phase-state sums
//! `sum_m sqrt[m] |phi_(m-1)><phi_m|`, and the `H` braces are spectral sums
//! over phase states. No Fourier conjugation products are used.

use crate::cmatrix::{dyad, CMatrix, CVector};
use crate::error::{Error, Result};
use crate::fock::{OperatorName, OperatorSet};
use crate::qnumerics::{primitive_root, principal_sqrt, AlgebraConfig, CScalar};
use crate::verify::{catalog, CheckResult};

/// Largest cutoff the oracle accepts.
pub const ORACLE_MAX_S: usize = 8;
/// Agreement required between the two routes.
pub const ORACLE_TOL: f64 = 1e-12;

struct Powers {
    table: Vec<CScalar>,
}

impl Powers {
    fn new(q: CScalar, order: usize) -> Self {
        let mut table = Vec::with_capacity(order);
        let mut acc = CScalar::new(1.0, 0.0);
        for _ in 0..order {
            table.push(acc);
            acc *= q;
        }
        Self { table }
    }

    fn get(&self, n: i64) -> CScalar {
        self.table[n.rem_euclid(self.table.len() as i64) as usize]
    }

    fn q_number(&self, x: i64) -> f64 {
        ((self.get(x) - self.get(-x)) / (self.get(1) - self.get(-1))).re
    }
}

fn sum_of(dim: usize, terms: impl IntoIterator<Item = (CScalar, CMatrix)>) -> CMatrix {
    terms
        .into_iter()
        .fold(CMatrix::zeros(dim), |acc, (c, m)| &acc + &m.scale(c))
}

fn ket_bra(u: &CVector, v: &CVector) -> CMatrix {
    u.outer(v).expect("same dimension")
}

/// The full operator set, built naively.
pub fn naive_operators(cfg: &AlgebraConfig) -> OperatorSet {
    let d = cfg.dim();
    let s = cfg.s();
    let pw = Powers::new(primitive_root(cfg), d);
    let qn = |x: usize| pw.q_number(x as i64);
    let rt = |x: usize| principal_sqrt(qn(x));
    let one = CScalar::new(1.0, 0.0);
    let re = |x: f64| CScalar::new(x, 0.0);
    let dy = |m: usize, n: usize| dyad(m, n, d).expect("index within Fock space");

    let a = sum_of(d, (1..=s).map(|n| (rt(n), dy(n - 1, n))));
    let a_dag = sum_of(d, (0..s).map(|n| (rt(n + 1), dy(n + 1, n))));
    let n_op = sum_of(d, (0..d).map(|n| (re(n as f64), dy(n, n))));
    let g = sum_of(d, (0..d).map(|n| (pw.get(n as i64), dy(n, n))));
    let h = sum_of(d, (0..s).map(|n| (one, dy(n + 1, n))));
    let h_dag = sum_of(d, (0..s).map(|n| (one, dy(n, n + 1))));
    let brace_g = sum_of(d, (0..d).map(|n| (re(qn(n)), dy(n, n))));
    let brace_g1 = sum_of(d, (0..d).map(|n| (re(qn(n + 1)), dy(n, n))));

    let norm = re(1.0 / (d as f64).sqrt());
    let fourier = sum_of(
        d,
        (0..d * d).map(|i| {
            let (m, n) = (i / d, i % d);
            (pw.get((m * n) as i64) * norm, dy(m, n))
        }),
    );
    let big_h = &h + &dy(0, s);
    let big_h_dag = &h_dag + &dy(s, 0);

    // |phi_m> = sum_n q^(nm)/sqrt(d) |n>
    let phi: Vec<CVector> = (0..d)
        .map(|m| {
            let e = (0..d).map(|n| pw.get((n * m) as i64) * norm).collect();
            CVector::from_entries(e).expect("finite")
        })
        .collect();
    let proj = |m: usize| ket_bra(&phi[m], &phi[m]);

    let a_tilde = sum_of(d, (1..=s).map(|m| (rt(m), ket_bra(&phi[m - 1], &phi[m]))));
    let a_tilde_dag = sum_of(d, (0..s).map(|m| (rt(m + 1), ket_bra(&phi[m + 1], &phi[m]))));
    let n_tilde = sum_of(d, (0..d).map(|m| (re(m as f64), proj(m))));
    let brace_hdag = sum_of(d, (0..d).map(|m| (re(qn(m)), proj(m))));
    let brace_hdag1 = sum_of(d, (0..d).map(|m| (re(qn(m + 1)), proj(m))));
    let sqrt_brace_hdag = sum_of(d, (0..d).map(|m| (rt(m), proj(m))));
    let sqrt_brace_hdag1 = sum_of(d, (0..d).map(|m| (rt(m + 1), proj(m))));

    OperatorSet {
        a,
        a_dag,
        n_op,
        g,
        h,
        h_dag,
        brace_g,
        brace_g1,
        fourier,
        big_h,
        big_h_dag,
        a_tilde,
        a_tilde_dag,
        n_tilde,
        brace_hdag,
        brace_hdag1,
        sqrt_brace_hdag,
        sqrt_brace_hdag1,
    }
}

/// Compare the naive route with [`OperatorSet::build`]: one result per
/// operator (`oracle:<op>`) and one per catalog check (`oracle:<check>`),
/// the latter being the largest gap over every relation's lhs and rhs.
pub fn brute_force_oracle(cfg: &AlgebraConfig) -> Result<Vec<CheckResult>> {
    if cfg.s() > ORACLE_MAX_S {
        return Err(Error::OracleTooLarge {
            s: cfg.s(),
            max: ORACLE_MAX_S,
        });
    }
    let fast = OperatorSet::build(cfg);
    let slow = naive_operators(cfg);
    let gap = |x: &CMatrix, y: &CMatrix| x.max_abs_diff(y).unwrap_or(f64::INFINITY);

    let mut out: Vec<_> = OperatorName::ALL
        .iter()
        .map(|&op| {
            CheckResult::new(
                format!("oracle:{op}"),
                gap(fast.get(op), slow.get(op)),
                ORACLE_TOL,
            )
        })
        .collect();

    for (f, s) in catalog(&fast, cfg).iter().zip(catalog(&slow, cfg).iter()) {
        debug_assert_eq!(f.name, s.name);
        let dev = f
            .relations
            .iter()
            .zip(&s.relations)
            .map(|(x, y)| gap(&x.lhs, &y.lhs).max(gap(&x.rhs, &y.rhs)))
            .fold(0.0, f64::max);
        out.push(CheckResult::new(
            format!("oracle:{}", f.name.key()),
            dev,
            ORACLE_TOL,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::brace_of_big_h;

    fn cfg(s: usize) -> AlgebraConfig {
        AlgebraConfig::with_cutoff(s).unwrap()
    }

    #[test]
    fn routes_agree_s2() {
        let c = cfg(2);
        let slow = naive_operators(&c);
        let closed = brace_of_big_h(&c).closed_brace_hdag;
        assert!(slow.brace_hdag.max_abs_diff(&closed).unwrap() <= 1e-12);
        let direct = &(&slow.fourier * &slow.a_dag) * &slow.fourier.adjoint();
        assert!(slow.a_tilde_dag.max_abs_diff(&direct).unwrap() <= 1e-12);
    }

    #[test]
    fn all_checks_agree_s5() {
        let res = brute_force_oracle(&cfg(5)).unwrap();
        assert_eq!(res.len(), OperatorName::ALL.len() + 14);
        for r in &res {
            assert!(r.pass, "{}: {}", r.name, r.deviation);
        }
    }

    #[test]
    fn rejects_large_cutoff() {
        assert_eq!(
            brute_force_oracle(&cfg(9)),
            Err(Error::OracleTooLarge { s: 9, max: 8 })
        );
    }

    #[test]
    fn detects_a_planted_error() {
        let c = cfg(4);
        let mut slow = naive_operators(&c);
        slow.a = slow.a.scale(CScalar::new(1.0 + 1e-9, 0.0));
        let fast = OperatorSet::build(&c);
        assert!(fast.a.max_abs_diff(&slow.a).unwrap() > ORACLE_TOL);
    }
}
