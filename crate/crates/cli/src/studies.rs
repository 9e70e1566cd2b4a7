//! Row producers for `facets`, `dims`, `scan`, `pm` and `audit`.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use vdw_core::vdw::{
    appendix_params, audit_f1_bound, audit_f1_unchecked, audit_f2_recurrence, audit_f2_unchecked, check_2d3e5,
    jump, k3_edge_triangle_counts,
};
use vdw_core::{
    build_vdw, conjecture_formula, first_wlp_failure, pseudo_manifold_closed_form, LefschetzOptions, VdwParams,
};

use crate::render::Tabular;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetRow {
    pub facet: String,
    pub start: u32,
    pub jump: u32,
}

impl Tabular for FacetRow {
    fn header() -> Vec<&'static str> {
        vec!["facet", "start", "jump"]
    }
    fn fields(&self) -> Vec<String> {
        vec![self.facet.clone(), self.start.to_string(), self.jump.to_string()]
    }
}

pub fn facet_rows(p: VdwParams) -> Vec<FacetRow> {
    build_vdw(p)
        .facets()
        .iter()
        .map(|f| FacetRow {
            facet: f.to_string(),
            start: f.vertices()[0],
            jump: jump(f).unwrap_or(0),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsRow {
    pub n: u32,
    pub k: u32,
    pub dim_a2: u64,
    pub dim_a3: u64,
}

impl Tabular for DimsRow {
    fn header() -> Vec<&'static str> {
        vec!["n", "k", "dim_a2", "dim_a3", "relation"]
    }
    fn fields(&self) -> Vec<String> {
        let rel = match self.dim_a2.cmp(&self.dim_a3) {
            std::cmp::Ordering::Less => "<",
            std::cmp::Ordering::Equal => "=",
            std::cmp::Ordering::Greater => ">",
        };
        vec![self.n.to_string(), self.k.to_string(), self.dim_a2.to_string(), self.dim_a3.to_string(), rel.into()]
    }
}

/// `(dim A_2, dim A_3) = (f_1, f_2)` of `vdw(n, k)` for each `n` in range.
pub fn dims_rows(k: u32, n: RangeInclusive<u32>) -> Result<Vec<DimsRow>> {
    n.into_par_iter()
        .map(|n| {
            let c = build_vdw(VdwParams::new(n, k)?);
            let f = c.f_vector();
            Ok(DimsRow { n, k, dim_a2: f.get(1), dim_a3: f.get(2) })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub k: u32,
    pub n_max: u32,
    pub first_failure: Option<u32>,
    pub formula: u32,
    /// Observation and formula are consistent up to `n_max`.
    pub agrees: bool,
}

impl Tabular for ScanRow {
    fn header() -> Vec<&'static str> {
        vec!["k", "first_failure", "formula", "agrees"]
    }
    fn fields(&self) -> Vec<String> {
        let first = match self.first_failure {
            Some(n) => n.to_string(),
            None => format!("no failure found <= {}", self.n_max),
        };
        vec![self.k.to_string(), first, self.formula.to_string(), self.agrees.to_string()]
    }
}

/// First WLP failure for each odd `k` in `3..=k_max`.
pub fn scan_rows(k_max: u32, n_max: u32, opts: &LefschetzOptions) -> Result<Vec<ScanRow>> {
    let ks: Vec<u32> = (3..=k_max).step_by(2).collect();
    ks.into_par_iter()
        .map(|k| {
            let formula = conjecture_formula(k)?;
            let first_failure = first_wlp_failure(k, n_max, opts)?;
            let agrees = match first_failure {
                Some(n) => n == formula,
                None => formula > n_max,
            };
            Ok(ScanRow { k, n_max, first_failure, formula, agrees })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PmRow {
    pub n: u32,
    pub k: u32,
    pub pseudo_manifold: bool,
    pub boundary: bool,
    pub violation: Option<String>,
    pub witness: Option<String>,
    pub expected_pseudo_manifold: bool,
    pub expected_boundary: bool,
    pub matches: bool,
}

impl Tabular for PmRow {
    fn header() -> Vec<&'static str> {
        vec!["n", "k", "pseudo_manifold", "boundary", "violation", "witness", "matches"]
    }
    fn fields(&self) -> Vec<String> {
        vec![
            self.n.to_string(),
            self.k.to_string(),
            self.pseudo_manifold.to_string(),
            self.boundary.to_string(),
            self.violation.clone().unwrap_or_default(),
            self.witness.clone().unwrap_or_default(),
            self.matches.to_string(),
        ]
    }
}

pub fn pm_rows(n_max: u32) -> Vec<PmRow> {
    let coords: Vec<(u32, u32)> = (2..=n_max).flat_map(|n| (1..n).map(move |k| (n, k))).collect();
    coords
        .into_par_iter()
        .map(|(n, k)| {
            let p = VdwParams::new(n, k).expect("k < n");
            let v = build_vdw(p).pseudo_manifold_verdict();
            let (epm, eb) = pseudo_manifold_closed_form(p);
            let boundary = v.is_pseudo_manifold && v.has_boundary;
            let witness = v.violation.as_ref().map(|w| match &w.face {
                Some(face) => format!("{face} / {}", w.facet),
                None => w.facet.to_string(),
            });
            PmRow {
                n,
                k,
                pseudo_manifold: v.is_pseudo_manifold,
                boundary,
                violation: v.violation.as_ref().map(|w| format!("{:?}", w.kind)),
                witness,
                expected_pseudo_manifold: epm,
                expected_boundary: eb,
                matches: v.is_pseudo_manifold == epm && boundary == eb,
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditStatus {
    Pass,
    Fail,
    /// The inequality is known not to hold here and indeed does not.
    ExpectedFailure,
    /// Outside the asserted range; shown, never judged.
    ReportOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRow {
    pub check: String,
    pub n_from: u32,
    pub n_to: u32,
    pub cases: usize,
    pub violations: Vec<u32>,
    pub status: AuditStatus,
    pub detail: String,
}

impl Tabular for AuditRow {
    fn header() -> Vec<&'static str> {
        vec!["check", "n_from", "n_to", "cases", "violations", "status", "detail"]
    }
    fn fields(&self) -> Vec<String> {
        let status = serde_json::to_value(self.status).expect("status serializes");
        vec![
            self.check.clone(),
            self.n_from.to_string(),
            self.n_to.to_string(),
            self.cases.to_string(),
            self.violations.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
            status.as_str().unwrap_or_default().to_string(),
            self.detail.clone(),
        ]
    }
}

fn range_check(check: &str, range: RangeInclusive<u32>, detail: &str, ok: impl Fn(u32) -> bool + Sync) -> AuditRow {
    let (lo, hi) = (*range.start(), *range.end());
    let ns: Vec<u32> = range.collect();
    let violations: Vec<u32> = ns.par_iter().copied().filter(|&n| !ok(n)).collect();
    AuditRow {
        check: check.into(),
        n_from: lo,
        n_to: hi,
        cases: ns.len(),
        status: if violations.is_empty() { AuditStatus::Pass } else { AuditStatus::Fail },
        violations,
        detail: detail.into(),
    }
}

fn k2_counts(n: u32) -> (u64, u64) {
    let c = build_vdw(VdwParams::new(n, 2).expect("n > 2"));
    (c.f(1), c.f(2))
}

/// Appendix checks over their asserted ranges, plus report-only recurrence
/// rows for `unsafe_range` (clamped to `n >= 5`).
pub fn audit_rows(unsafe_range: Option<RangeInclusive<u32>>) -> Vec<AuditRow> {
    let mut rows = vec![
        range_check("2d-3e+5 <= 0", 88..=10000, "(d,e) = (floor((n-1)/3), floor((n-1)/4))", check_2d3e5),
        range_check("f2 recurrence (k=3)", 89..=150, "f2(n) = f2(n-1) + 4d - e", |n| {
            audit_f2_recurrence(n).map(|a| a.holds).unwrap_or(false)
        }),
        range_check("f1 bound (k=3)", 89..=150, "f1(n) <= f1(n-1) + 6d - 4e + 5", |n| {
            audit_f1_bound(n).map(|a| a.holds).unwrap_or(false)
        }),
        range_check("f1 >= f2 (k=2)", 3..=200, "dim A2 >= dim A3 for vdw(n,2)", |n| {
            let (f1, f2) = k2_counts(n);
            f1 >= f2
        }),
        range_check("f1 <= f2 (k=3)", 8..=200, "dim A2 <= dim A3 for vdw(n,3)", |n| {
            let (f1, f2) = k3_edge_triangle_counts(n);
            f1 <= f2
        }),
    ];
    for n in 4..=7 {
        let (f1, f2) = k3_edge_triangle_counts(n);
        let reversed = f1 > f2;
        rows.push(AuditRow {
            check: "f1 <= f2 (k=3)".into(),
            n_from: n,
            n_to: n,
            cases: 1,
            violations: if reversed { vec![] } else { vec![n] },
            status: if reversed { AuditStatus::ExpectedFailure } else { AuditStatus::Fail },
            detail: format!("{f1} > {f2} expected"),
        });
    }
    if let Some(r) = unsafe_range {
        for n in (*r.start()).max(5)..=*r.end() {
            let (d, e) = appendix_params(n);
            for (name, a) in [
                ("f2 recurrence (k=3)", audit_f2_unchecked(n)),
                ("f1 bound (k=3)", audit_f1_unchecked(n)),
            ] {
                rows.push(AuditRow {
                    check: name.into(),
                    n_from: n,
                    n_to: n,
                    cases: 1,
                    violations: vec![],
                    status: AuditStatus::ReportOnly,
                    detail: format!("lhs={} rhs={} holds={} d={d} e={e}", a.lhs, a.rhs, a.holds),
                });
            }
        }
    }
    rows
}

/// Any asserted check failed.
pub fn audit_failed(rows: &[AuditRow]) -> bool {
    rows.iter().any(|r| r.status == AuditStatus::Fail)
}
