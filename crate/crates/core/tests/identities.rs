use proptest::prelude::*;
use qpolar::*;

fn config() -> impl Strategy<Value = AlgebraConfig> {
    (2usize..=40, 1u64..=41).prop_filter_map("k coprime to s+1", |(s, k)| {
        AlgebraConfig::new(s, k, DEFAULT_TOL).ok()
    })
}

fn small_config() -> impl Strategy<Value = AlgebraConfig> {
    (2usize..=ORACLE_MAX_S, 1u64..=9).prop_filter_map("k coprime to s+1", |(s, k)| {
        AlgebraConfig::new(s, k, DEFAULT_TOL).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn full_catalog_passes(cfg in config()) {
        let r = run_all(&cfg);
        for c in &r.checks {
            prop_assert!(c.pass, "s={} k={} {}: {:e}", cfg.s(), cfg.k(), c.name, c.deviation);
        }
    }

    #[test]
    fn oracle_agrees(cfg in small_config()) {
        for r in brute_force_oracle(&cfg).unwrap() {
            prop_assert!(r.pass, "s={} k={} {}: {:e}", cfg.s(), cfg.k(), r.name, r.deviation);
        }
    }

    #[test]
    fn deformed_commutation_relation(cfg in config()) {
        let a = build_annihilation(&cfg);
        let ad = build_creation(&cfg);
        let q = primitive_root(&cfg);
        let lhs = &(&a * &ad) - &(&ad * &a).scale(q);
        let want = CMatrix::diagonal(
            &(0..cfg.dim() as i64).map(|n| q_power(-n, &cfg)).collect::<Vec<_>>(),
        );
        prop_assert!(lhs.max_abs_diff(&want).unwrap() <= cfg.threshold());
        prop_assert_eq!(ad, a.transpose());
    }

    #[test]
    fn n_tilde_is_unitarily_equivalent_to_n(cfg in config()) {
        // F^dag N~ F must be exactly diag(0..s) up to rounding
        let ops = OperatorSet::build(&cfg);
        let back = &(&ops.fourier.adjoint() * &ops.n_tilde) * &ops.fourier;
        prop_assert!(back.max_abs_diff(&ops.n_op).unwrap() <= cfg.threshold());
    }

    #[test]
    fn brace_routes_agree(cfg in config()) {
        let b = brace_of_big_h(&cfg);
        prop_assert!(b.route_gap() <= cfg.threshold());
        prop_assert!(b.brace_hdag.max_abs_diff(&b.brace_hdag.adjoint()).unwrap() <= 1e-12);
    }

    #[test]
    fn looser_tolerance_never_fails_more(cfg in config(), exp in 10i32..16) {
        let tight = run_all(&cfg.with_tol(10f64.powi(-exp)).unwrap());
        let loose = run_all(&cfg.with_tol(10f64.powi(-exp + 1)).unwrap());
        for (t, l) in tight.checks.iter().zip(&loose.checks) {
            prop_assert!(!t.pass || l.pass);
        }
    }
}

#[test]
fn sweep_full_range() {
    let reports = sweep(2, 32, 1, 1e-9).unwrap();
    assert_eq!(reports.len(), 31);
    assert!(reports.iter().all(|r| r.overall_pass));
}

#[test]
fn polar_radial_factor_not_self_adjoint() {
    // some [n] < 0 for every s >= 2, so the principal-branch radial factor
    // cannot be self-adjoint even though the factorization holds
    for s in [2, 5, 16] {
        let p = polar_decompose(&AlgebraConfig::with_cutoff(s).unwrap());
        assert!(p.reconstruction_error <= 1e-12);
        assert!(!p.radial_is_self_adjoint);
    }
}
