//! End-to-end acceptance run: one PASS/FAIL line per criterion. Runs as a
//! plain binary so the lines show up without `--nocapture`.

#[path = "../../core/tests/common/published.rs"]
mod published;

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use vdw_cli::grid::compute_grid;
use vdw_cli::studies::{audit_rows, dims_rows, pm_rows, scan_rows, AuditStatus};
use vdw_core::lefschetz::Shortcut;
use vdw_core::linalg::{rank_with_kernel, Certification};
use vdw_core::{
    build_vdw, check_vdw, k3_kernel_vector, mult_matrix, paper_n7_certificate, rank, FieldSpec, LefschetzOptions,
    Property, SimplicialComplex, SparseMatrix, VdwParams,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const P1: u64 = 32003;
const P2: u64 = FieldSpec::DEFAULT_PRIME;

fn params(n: u32, k: u32) -> VdwParams {
    VdwParams::new(n, k).expect("k < n")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid_matches(property: Property, n_max: u32, expected: fn(u32, u32) -> Option<bool>) -> Outcome {
    let grid = compute_grid(property, n_max, &LefschetzOptions::default(), None).map_err(|e| e.to_string())?;
    let mut mismatches = Vec::new();
    for c in &grid.cells {
        if expected(c.n, c.k) != Some(c.holds) {
            mismatches.push(format!("({},{})", c.n, c.k));
        }
    }
    ensure(mismatches.is_empty(), || format!("mismatched cells {}", mismatches.join(" ")))?;
    // every cell decided over Q, never by a prime-field rank alone
    for c in &grid.cells {
        let r = check_vdw(params(c.n, c.k), property, &LefschetzOptions::default()).map_err(|e| e.to_string())?;
        let bad = r
            .per_map
            .iter()
            .any(|m| m.field != FieldSpec::Rationals || m.certification == Some(Certification::PrimeField));
        ensure(!bad, || format!("({},{}) not certified over the rationals", c.n, c.k))?;
    }
    let failing = grid.cells.iter().filter(|c| !c.holds).count();
    Ok(format!("{} cells, {failing} failing, all as published", grid.cells.len()))
}

fn table1() -> Outcome {
    grid_matches(Property::Wlp, 20, published::wlp)
}

fn table3() -> Outcome {
    grid_matches(Property::Slp, 14, published::slp)
}

fn table4() -> Outcome {
    let rows = dims_rows(3, 4..=90).map_err(|e| e.to_string())?;
    ensure(rows.len() == published::DIMS_K3.len(), || format!("{} rows", rows.len()))?;
    for (row, &(n, a2, a3)) in rows.iter().zip(published::DIMS_K3.iter()) {
        ensure(row.n == n && row.dim_a2 == a2 && row.dim_a3 == a3, || {
            format!("n={n}: got ({}, {}), published ({a2}, {a3})", row.dim_a2, row.dim_a3)
        })?;
    }
    Ok("87 pairs equal".into())
}

fn table2() -> Outcome {
    let rows = scan_rows(11, 25, &LefschetzOptions::default()).map_err(|e| e.to_string())?;
    let got: Vec<(u32, Option<u32>)> = rows.iter().map(|r| (r.k, r.first_failure)).collect();
    let want: Vec<(u32, Option<u32>)> = published::FIRST_FAILURES.iter().map(|&(k, n)| (k, Some(n))).collect();
    ensure(got == want, || format!("first failures {got:?}"))?;
    ensure(rows.iter().all(|r| r.agrees && r.first_failure == Some(r.formula)), || "formula disagrees".into())?;
    Ok(format!("{:?}, formula agrees", rows.iter().map(|r| r.first_failure.unwrap()).collect::<Vec<_>>()))
}

fn certificates() -> Outcome {
    let cert = paper_n7_certificate().map_err(|e| e.to_string())?;
    let m = mult_matrix(&build_vdw(params(7, 3)), 2, 1).map_err(|e| e.to_string())?;
    let r = rank(&m, FieldSpec::Rationals).rank;
    ensure(r == 16, || format!("rank {r}, expected 16"))?;
    ensure(cert.rank_bound == 16, || "rank bound".into())?;
    for n in 8..=40 {
        let z = k3_kernel_vector(n).map_err(|e| e.to_string())?;
        ensure(z.verify().map_err(|e| e.to_string())?, || format!("z not in kernel for n={n}"))?;
    }
    let identity = cert.permutation.iter().enumerate().all(|(i, &p)| i == p);
    Ok(format!("n=7 vector in ker(M^T) (permutation identity: {identity}), rank 16; z verified for n=8..40"))
}

/// `×ℓ : A_i -> A_{i+1}` maximal, by elimination on just that matrix.
fn degree_maximal(c: &SimplicialComplex, i: usize) -> Result<bool, String> {
    let m = mult_matrix(c, i, 1).map_err(|e| e.to_string())?;
    Ok(rank(&m, FieldSpec::Rationals).rank == m.n_rows().min(m.n_cols()))
}

fn structural() -> Outcome {
    let direct = LefschetzOptions { shortcuts: false, cone_reduction: false, ..Default::default() };
    let verdict = |n, k, p, o: &LefschetzOptions| check_vdw(params(n, k), p, o).map(|r| r.verdict).map_err(|e| e.to_string());
    let mut violations = Vec::new();
    let mut cases = 0;
    for n in 2..=25 {
        for k in 1..n {
            let c = build_vdw(params(n, k));
            for i in 0..=1 {
                cases += 1;
                if !degree_maximal(&c, i)? {
                    violations.push(format!("degree {i} vdw({n},{k})"));
                }
            }
        }
    }
    for n in 2..=20 {
        cases += 1;
        if !verdict(n, 1, Property::Slp, &direct)? {
            violations.push(format!("SLP vdw({n},1)"));
        }
    }
    for n in 3..=20 {
        cases += 1;
        if !verdict(n, 2, Property::Wlp, &direct)? {
            violations.push(format!("WLP vdw({n},2)"));
        }
    }
    // k = n - 1 by plain elimination; the cone reduction would presuppose it
    for n in 2..=14 {
        cases += 1;
        if !verdict(n, n - 1, Property::Slp, &direct)? {
            violations.push(format!("SLP vdw({n},{})", n - 1));
        }
    }
    for n in 4..=40 {
        cases += 1;
        let r = check_vdw(params(n, 3), Property::Wlp, &LefschetzOptions::default()).map_err(|e| e.to_string())?;
        let failing: Vec<usize> = r.per_map.iter().filter(|m| !m.maximal).map(|m| m.from_degree).collect();
        let ok = if n <= 6 { r.verdict } else { failing == [2] };
        if !ok {
            violations.push(format!("k=3 vdw({n},3) failing degrees {failing:?}"));
        }
    }
    for n in 4..=20 {
        for k in 3..n {
            let p = params(n, k);
            if !p.in_upper_half() {
                continue;
            }
            cases += 1;
            let r = check_vdw(p, Property::Wlp, &LefschetzOptions::default()).map_err(|e| e.to_string())?;
            let rec = r.per_map.iter().find(|m| m.from_degree == k as usize).ok_or("missing degree-k map")?;
            let by_rank = degree_maximal(&build_vdw(p), k as usize)?;
            if rec.shortcut != Some(Shortcut::PseudoManifoldBoundary) || rec.maximal != by_rank || !by_rank {
                violations.push(format!("degree-k shortcut vdw({n},{k})"));
            }
        }
    }
    ensure(violations.is_empty(), || violations.join(", "))?;
    Ok(format!("{cases} cases, zero violations"))
}

fn pseudo_manifolds() -> Outcome {
    let start = Instant::now();
    let rows = pm_rows(30);
    let bad: Vec<String> = rows.iter().filter(|r| !r.matches).map(|r| format!("({},{})", r.n, r.k)).collect();
    ensure(bad.is_empty(), || format!("mismatches {}", bad.join(" ")))?;
    Ok(format!("{} complexes, zero mismatches in {:.1?}", rows.len(), start.elapsed()))
}

fn appendix() -> Outcome {
    let rows = audit_rows(None);
    let failed: Vec<&str> = rows.iter().filter(|r| r.status == AuditStatus::Fail).map(|r| r.check.as_str()).collect();
    ensure(failed.is_empty(), || format!("failed: {}", failed.join(", ")))?;
    let seven = rows
        .iter()
        .find(|r| r.n_from == 7 && r.n_to == 7)
        .ok_or("no n=7 row")?;
    ensure(seven.status == AuditStatus::ExpectedFailure && seven.detail.contains("18 > 17"), || {
        format!("n=7 row: {:?} {}", seven.status, seven.detail)
    })?;
    let cases: usize = rows.iter().map(|r| r.cases).sum();
    Ok(format!("{} checks over {cases} cases, f1 > f2 at n=7 (18 > 17)", rows.len()))
}

/// Matrices eliminated for one WLP grid cell over `Q`: all maps of the link
/// for a cone, otherwise the weak-property maps of the complex itself.
fn table1_matrices(n: u32, k: u32) -> Result<Vec<SparseMatrix>, String> {
    let c = build_vdw(params(n, k));
    let (cone, link) = c.cone_split();
    let mut out = Vec::new();
    if cone.is_empty() {
        for i in 0..=c.dim() + 1 {
            out.push(mult_matrix(&c, i, 1).map_err(|e| e.to_string())?);
        }
    } else if let Some(link) = link {
        let top = link.dim() + 1;
        for i in 0..top {
            for d in 1..=top - i {
                out.push(mult_matrix(&link, i, d).map_err(|e| e.to_string())?);
            }
        }
    }
    Ok(out.into_iter().filter(|m| m.n_rows() > 0 && m.n_cols() > 0).collect())
}

/// Rational, two prime-field and transposed ranks all agree, and kernels
/// have the right size.
fn ranks_agree(m: &SparseMatrix) -> Result<(), String> {
    let q = rank_with_kernel(m, FieldSpec::Rationals);
    let nullity = q.kernel_basis.as_ref().map_or(0, Vec::len);
    ensure(q.rank + nullity == m.n_cols(), || format!("rank {} + nullity {nullity} != {}", q.rank, m.n_cols()))?;
    let t = rank(&m.transpose(), FieldSpec::Rationals).rank;
    ensure(t == q.rank, || format!("rank(M^T) = {t} != {}", q.rank))?;
    for p in [P1, P2] {
        let r = rank_with_kernel(m, FieldSpec::PrimeField(p));
        let nullity = r.kernel_basis.as_ref().map_or(0, Vec::len);
        ensure(r.rank == q.rank, || format!("rank mod {p} = {} != {}", r.rank, q.rank))?;
        ensure(r.rank + nullity == m.n_cols(), || format!("rank + nullity mod {p}"))?;
        let t = rank(&m.transpose(), FieldSpec::PrimeField(p)).rank;
        ensure(t == r.rank, || format!("rank(M^T) mod {p}"))?;
    }
    Ok(())
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for n in 2..=20 {
        for k in 1..n {
            for m in table1_matrices(n, k)? {
                ranks_agree(&m).map_err(|e| format!("vdw({n},{k}) {}x{}: {e}", m.n_rows(), m.n_cols()))?;
                count += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(9);
    for trial in 0..200 {
        let rows = rng.gen_range(1..=60);
        let cols = rng.gen_range(1..=60);
        let density = [0.05, 0.15, 0.4][trial % 3];
        let triplets: Vec<(usize, usize, i64)> = (0..rows)
            .flat_map(|r| (0..cols).map(move |c| (r, c)))
            .filter(|_| rng.gen_bool(density))
            .map(|(r, c)| (r, c, 1))
            .collect();
        let m = SparseMatrix::from_triplets(rows, cols, triplets).map_err(|e| e.to_string())?;
        ranks_agree(&m).map_err(|e| format!("random trial {trial}: {e}"))?;
    }
    Ok(format!("{count} table matrices and 200 random 0/1 matrices, primes {P1} and {P2}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("WLP grid n <= 20", table1),
        ("SLP grid n <= 14", table3),
        ("dim A2 / dim A3 for k = 3, n = 4..90", table4),
        ("first WLP failures for odd k <= 11", table2),
        ("kernel certificates", certificates),
        ("structural property suites", structural),
        ("pseudo-manifold classification n <= 30", pseudo_manifolds),
        ("appendix audit", appendix),
        ("rational vs prime-field rank oracles", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
