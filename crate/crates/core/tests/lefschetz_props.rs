mod common;

use common::oracle;
use vdw_core::lefschetz::{cone_jordan_type, jordan_type, KernelSide, N7_VECTOR};
use vdw_core::linalg::Certification;
use vdw_core::{
    build_vdw, check_vdw, conjecture_formula, first_wlp_failure, k3_kernel_vector, mult_matrix, paper_n7_certificate,
    rank, FieldSpec, LefschetzOptions, LefschetzReport, Property, Shortcut, SimplicialComplex, SparseMatrix,
    VdwParams,
};

fn params(n: u32, k: u32) -> VdwParams {
    VdwParams::new(n, k).unwrap()
}

fn direct() -> LefschetzOptions {
    LefschetzOptions { shortcuts: false, cone_reduction: false, ..Default::default() }
}

/// `×ℓ : A_i -> A_{i+1}` built from the two face lists only, without the
/// full graded basis (which is exponential for near-simplices).
fn single_step(c: &SimplicialComplex, i: usize) -> SparseMatrix {
    let src = c.faces_of_dim(i as i64 - 1);
    let dst = c.faces_of_dim(i as i64);
    let mut triplets = Vec::new();
    for (r, t) in dst.iter().enumerate() {
        for (col, s) in src.iter().enumerate() {
            if s.is_subset_of(t) {
                triplets.push((r, col, 1));
            }
        }
    }
    SparseMatrix::from_triplets(dst.len(), src.len(), triplets).unwrap()
}

fn check(n: u32, k: u32, property: Property, opts: &LefschetzOptions) -> LefschetzReport {
    check_vdw(params(n, k), property, opts).unwrap()
}

#[test]
fn degrees_zero_and_one_by_elimination() {
    for n in 2..=25 {
        for k in 1..n {
            let c = build_vdw(params(n, k));
            for i in 0..=1 {
                let m = single_step(&c, i);
                let full = m.n_rows().min(m.n_cols());
                assert_eq!(rank(&m, FieldSpec::Rationals).rank, full, "vdw({n},{k}) degree {i}");
            }
        }
    }
}

#[test]
fn k1_has_slp() {
    for n in 2..=20 {
        assert!(check(n, 1, Property::Slp, &direct()).verdict, "vdw({n},1)");
    }
}

#[test]
fn k2_has_wlp() {
    for n in 3..=20 {
        assert!(check(n, 2, Property::Wlp, &direct()).verdict, "vdw({n},2)");
    }
}

#[test]
fn simplex_boundary_family_has_slp() {
    // k = n - 1 is a single simplex; computed without the cone reduction,
    // which would otherwise assume the answer.
    for n in 2..=11 {
        assert!(check(n, n - 1, Property::Slp, &direct()).verdict, "vdw({n},{})", n - 1);
    }
}

#[test]
fn k3_classification() {
    for n in 4..=40 {
        let r = check(n, 3, Property::Wlp, &LefschetzOptions::default());
        assert_eq!(r.verdict, n <= 6, "vdw({n},3)");
        if n >= 7 {
            let failures: Vec<usize> = r.per_map.iter().filter(|m| !m.maximal).map(|m| m.from_degree).collect();
            assert_eq!(failures, vec![2], "vdw({n},3)");
        }
    }
}

#[test]
fn pseudo_manifold_shortcut_agrees_with_rank() {
    let mut seen = 0;
    for n in 4..=20 {
        for k in 3..n {
            let p = params(n, k);
            if !p.in_upper_half() {
                continue;
            }
            let r = check_vdw(p, Property::Wlp, &LefschetzOptions::default()).unwrap();
            let rec = r.per_map.iter().find(|m| m.from_degree == k as usize).unwrap();
            assert_eq!(rec.shortcut, Some(Shortcut::PseudoManifoldBoundary));
            let m = single_step(&build_vdw(p), k as usize);
            let direct_rank = rank(&m, FieldSpec::Rationals).rank;
            assert_eq!(direct_rank, rec.rank, "vdw({n},{k})");
            assert!(rec.maximal);
            seen += 1;
        }
    }
    assert!(seen > 50);
}

#[test]
fn cross_check_records_agreement() {
    let opts = LefschetzOptions { cross_check: true, ..Default::default() };
    for (n, k) in [(7, 3), (9, 5), (12, 4), (14, 7)] {
        let r = check(n, k, Property::Wlp, &opts);
        for m in r.per_map.iter().filter(|m| m.shortcut.is_some_and(|s| s != Shortcut::Vacuous)) {
            assert_eq!(m.cross_check_agrees, Some(true), "vdw({n},{k}) {m:?}");
        }
    }
}

#[test]
fn shortcuts_do_not_change_verdicts() {
    let off = LefschetzOptions { shortcuts: false, ..Default::default() };
    for n in 2..=20 {
        for k in 1..n {
            let a = check(n, k, Property::Wlp, &LefschetzOptions::default());
            let b = check(n, k, Property::Wlp, &off);
            assert_eq!(a.verdict, b.verdict, "vdw({n},{k})");
            for (x, y) in a.per_map.iter().zip(&b.per_map) {
                assert_eq!(x.rank, y.rank, "vdw({n},{k}) degree {}", x.from_degree);
            }
        }
    }
}

#[test]
fn strong_implies_weak() {
    for n in 2..=14 {
        for k in 1..n {
            let s = check(n, k, Property::Slp, &LefschetzOptions::default());
            let w = check(n, k, Property::Wlp, &LefschetzOptions::default());
            assert!(!s.verdict || w.verdict, "vdw({n},{k})");
            // the d = 1 maps are shared
            for m in s.per_map.iter().filter(|m| m.power == 1) {
                let wm = w.per_map.iter().find(|x| x.from_degree == m.from_degree).unwrap();
                assert_eq!(m.rank, wm.rank);
            }
        }
    }
}

#[test]
fn cone_reduction_matches_direct_elimination() {
    for n in 3..=11 {
        for k in 1..n {
            let c = build_vdw(params(n, k));
            if c.cone_vertices().is_empty() {
                continue;
            }
            let j = cone_jordan_type(&c, FieldSpec::Rationals, FieldSpec::DEFAULT_PRIME).unwrap();
            let d = jordan_type(&c, FieldSpec::Rationals, FieldSpec::DEFAULT_PRIME).unwrap();
            assert_eq!(j, d, "vdw({n},{k})");
            let p = FieldSpec::PrimeField(32003);
            assert_eq!(cone_jordan_type(&c, p, 32003).unwrap(), jordan_type(&c, p, 32003).unwrap());
        }
    }
    let c = build_vdw(params(7, 3));
    assert!(cone_jordan_type(&c, FieldSpec::PrimeField(5), 5).is_err());
}

#[test]
fn cone_reports_are_tagged() {
    let r = check(20, 19, Property::Slp, &LefschetzOptions { shortcuts: false, ..Default::default() });
    assert!(r.verdict);
    assert!(r.per_map.iter().all(|m| m.certification == Some(Certification::ConeDecomposition)));
}

#[test]
fn small_prime_falls_back_to_direct() {
    let opts = LefschetzOptions { field: FieldSpec::prime(5).unwrap(), ..Default::default() };
    let r = check(6, 4, Property::Wlp, &opts);
    assert!(r.per_map.iter().all(|m| m.certification != Some(Certification::ConeDecomposition)));
    assert_eq!(r.field, FieldSpec::PrimeField(5));
}

#[test]
fn first_failure_formula() {
    assert_eq!(conjecture_formula(3).unwrap(), 7);
    assert_eq!(conjecture_formula(9).unwrap(), 20);
    assert_eq!(conjecture_formula(11).unwrap(), 23);
    assert!(conjecture_formula(4).is_err());
    assert!(conjecture_formula(1).is_err());
    let opts = LefschetzOptions::default();
    assert_eq!(first_wlp_failure(3, 25, &opts).unwrap(), Some(7));
    assert_eq!(first_wlp_failure(5, 10, &opts).unwrap(), None);
}

#[test]
fn two_adic_kernel_vector() {
    for n in 8..=40 {
        let z = k3_kernel_vector(n).unwrap();
        assert!(z.verify().unwrap(), "n={n}");
        assert!(z.z.iter().all(|&x| x != 0));
        // independent product against the dense oracle matrix
        let facets = oracle::brute_vdw_facets(n, 3);
        let faces = oracle::faces_by_size(&facets);
        let m = oracle::ell_matrix(&faces, 2);
        for row in &m {
            let dot: i64 = row.iter().zip(&z.z).map(|(a, b)| a * b).sum();
            assert_eq!(dot, 0, "n={n}");
        }
    }
    assert!(k3_kernel_vector(7).is_err());
}

#[test]
fn seven_three_certificate() {
    let cert = paper_n7_certificate().unwrap();
    assert_eq!(cert.permutation, (0..17).collect::<Vec<_>>());
    assert_eq!(cert.vector, N7_VECTOR.to_vec());
    assert_eq!(cert.rank_bound, 16);
    let c = build_vdw(params(7, 3));
    let m = mult_matrix(&c, 2, 1).unwrap();
    assert_eq!((m.n_rows(), m.n_cols()), (17, 18));
    assert_eq!(rank(&m, FieldSpec::Rationals).rank, 16);
    assert_eq!(oracle::dense_rank_q(&m.to_dense()), 16);
}

#[test]
fn failure_certificates_verify() {
    let opts = LefschetzOptions { certificate: true, ..Default::default() };
    let r = check(7, 3, Property::Wlp, &opts);
    let cert = r.certificate.as_ref().unwrap();
    assert!(cert.verified);
    assert_eq!(cert.side, KernelSide::Left);
    assert_eq!((cert.from_degree, cert.power), (2, 1));
    assert_eq!(cert.basis.len(), 17);

    let r = check(5, 2, Property::Slp, &opts);
    let f = r.first_failure().unwrap();
    assert_eq!((f.from_degree, f.power, f.rank, f.expected_rank()), (1, 2, 3, 4));
    assert!(r.certificate.as_ref().unwrap().verified);

    let r = check(10, 4, Property::Wlp, &opts);
    assert!(r.verdict && r.certificate.is_none());
}

#[test]
fn reports_round_trip_through_json() {
    let opts = LefschetzOptions { certificate: true, ..Default::default() };
    for (n, k, p) in [(7, 3, Property::Wlp), (5, 2, Property::Slp), (12, 7, Property::Slp)] {
        let r = check(n, k, p, &opts);
        let back = LefschetzReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.schema_version, 1);
    }
}
