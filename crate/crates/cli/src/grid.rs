//! The `(n, k)` verdict grids: one cell per `vdw(n, k)` with `1 <= k < n`.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use vdw_core::{check_vdw, FieldSpec, LefschetzOptions, LefschetzReport, Property, VdwParams};

use crate::cache::{code_version, CacheKey, CachedCell, RunCache};
use crate::render::{csv_table, json_document, Format};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableCell {
    pub n: u32,
    pub k: u32,
    pub property: Property,
    pub holds: bool,
    pub field: FieldSpec,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug)]
pub struct CellResult {
    pub cell: TableCell,
    pub report: LefschetzReport,
    pub cached: bool,
}

pub fn cache_key(n: u32, k: u32, property: Property, opts: &LefschetzOptions) -> CacheKey {
    CacheKey {
        n,
        k,
        property,
        field: opts.field,
        shortcuts: opts.shortcuts,
        cone_reduction: opts.cone_reduction,
    }
}

/// Computes one cell, going through `cache` when given.
pub fn evaluate_cell(
    n: u32,
    k: u32,
    property: Property,
    opts: &LefschetzOptions,
    cache: Option<&RunCache>,
) -> Result<CellResult> {
    let p = VdwParams::new(n, k)?;
    let key = cache_key(n, k, property, opts);
    if let Some(hit) = cache.and_then(|c| c.get(&key)) {
        return Ok(CellResult { cell: hit.cell, report: hit.report, cached: true });
    }
    let start = Instant::now();
    let report = check_vdw(p, property, opts)?;
    let cell = TableCell {
        n,
        k,
        property,
        holds: report.verdict,
        field: opts.field,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    if let Some(c) = cache {
        let entry = CachedCell { code_version: code_version(), key, cell: cell.clone(), report: report.clone() };
        c.put(&entry)?;
    }
    Ok(CellResult { cell, report, cached: false })
}

#[derive(Clone, Debug)]
pub struct Grid {
    pub property: Property,
    pub field: FieldSpec,
    pub n_max: u32,
    /// Sorted by `n`, then `k`.
    pub cells: Vec<TableCell>,
}

pub fn compute_grid(
    property: Property,
    n_max: u32,
    opts: &LefschetzOptions,
    cache: Option<&RunCache>,
) -> Result<Grid> {
    let coords: Vec<(u32, u32)> = (2..=n_max).flat_map(|n| (1..n).map(move |k| (n, k))).collect();
    let cells = coords
        .into_par_iter()
        .map(|(n, k)| evaluate_cell(n, k, property, opts, cache).map(|r| r.cell))
        .collect::<Result<Vec<_>>>()?;
    Ok(Grid { property, field: opts.field, n_max, cells })
}

#[derive(Serialize)]
struct GridMeta {
    property: Property,
    field: FieldSpec,
    n_max: u32,
}

impl Grid {
    pub fn get(&self, n: u32, k: u32) -> Option<&TableCell> {
        self.cells.iter().find(|c| c.n == n && c.k == k)
    }

    /// Rows are `n`, columns `k`; `░` marks the empty region `k >= n`.
    pub fn to_markdown(&self) -> String {
        let ks: Vec<u32> = (1..self.n_max.max(2)).collect();
        let mut out = format!("{} over {}\n\n", self.property.to_string().to_uppercase(), self.field);
        out.push_str("| n \\ k |");
        for k in &ks {
            out.push_str(&format!(" {k} |"));
        }
        out.push_str("\n|---|");
        for _ in &ks {
            out.push_str("---|");
        }
        out.push('\n');
        for n in 2..=self.n_max {
            out.push_str(&format!("| {n} |"));
            for &k in &ks {
                let mark = match self.get(n, k) {
                    Some(c) if c.holds => "✓",
                    Some(_) => "✗",
                    None => "░",
                };
                out.push_str(&format!(" {mark} |"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let rows = self.cells.iter().map(|c| {
            vec![
                c.n.to_string(),
                c.k.to_string(),
                c.property.to_string(),
                c.holds.to_string(),
                c.field.to_string(),
                c.elapsed_ms.to_string(),
            ]
        });
        csv_table(&["n", "k", "property", "holds", "field", "elapsed_ms"], rows)
    }

    pub fn to_json(&self) -> String {
        let meta = GridMeta { property: self.property, field: self.field, n_max: self.n_max };
        json_document("table", meta, &self.cells)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Md => self.to_markdown(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}
