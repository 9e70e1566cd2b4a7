//! The squarefree Artinian algebra `A = K[x_1..x_n] / (I + (x_1^2, ..., x_n^2))`
//! of a complex, and the matrices of multiplication by powers of
//! `l = x_1 + ... + x_n` in its face basis.
//!
//! Degree `i` of `A` has one basis monomial per face with `i` vertices. For a
//! face `S` of size `i`, `l^d * x_S` is `d!` times the sum of `x_T` over the
//! faces `T` of size `i + d` containing `S`: every ordering of `T \ S`
//! contributes one term of the expansion, and anything else is either a
//! square or a non-face.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::complex::{for_each_combination, Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Face bases of every graded piece: degree `i` is indexed by the faces of
/// dimension `i - 1` in lexicographic order.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    by_degree: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl GradedBasis {
    pub fn new(c: &SimplicialComplex) -> Self {
        let by_degree = c.faces_by_size();
        let index = by_degree
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect())
            .collect();
        GradedBasis { by_degree, index }
    }

    /// Only the listed degrees are filled in; the others read as empty. Used
    /// when a single matrix of a large complex is wanted.
    pub fn for_degrees(c: &SimplicialComplex, degrees: &[usize]) -> Self {
        let top = c.dim() + 1;
        let by_degree: Vec<Vec<Face>> = (0..=top)
            .map(|i| if degrees.contains(&i) { c.faces_of_dim(i as i64 - 1) } else { Vec::new() })
            .collect();
        let index = by_degree
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect())
            .collect();
        GradedBasis { by_degree, index }
    }

    /// Basis of degree `i`; empty above the socle degree `dim + 1`.
    pub fn degree(&self, i: usize) -> &[Face] {
        self.by_degree.get(i).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dim_of_degree(&self, i: usize) -> usize {
        self.degree(i).len()
    }

    /// Highest degree with a nonzero piece (`dim Δ + 1`).
    pub fn top_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    /// Hilbert function `(dim A_0, dim A_1, ...)`.
    pub fn hilbert_function(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    pub fn position(&self, degree: usize, face: &Face) -> Option<usize> {
        self.index.get(degree).and_then(|m| m.get(face).copied())
    }

    /// Matrix of `x l^power` from degree `from_degree` to `from_degree + power`.
    pub fn mult_matrix(&self, from_degree: usize, power: usize) -> Result<SparseMatrix> {
        assert!(power >= 1, "power must be positive");
        let coefficient = factorial(power).ok_or(Error::PowerTooLarge { power })?;
        let source = self.degree(from_degree);
        let target = self.degree(from_degree + power);
        let mut entries = Vec::new();
        if !source.is_empty() && !target.is_empty() {
            let col_index = &self.index[from_degree];
            for (row, t) in target.iter().enumerate() {
                let mut cols = Vec::new();
                for_each_combination(t.vertices(), from_degree, |s| {
                    cols.push(col_index[&Face::from_sorted(s.to_vec())]);
                });
                cols.sort_unstable();
                entries.extend(cols.into_iter().map(|c| (row, c, coefficient)));
            }
        }
        Ok(SparseMatrix {
            n_rows: target.len(),
            n_cols: source.len(),
            entries,
            source_degree: from_degree,
            power,
        })
    }
}

pub fn graded_basis(c: &SimplicialComplex) -> GradedBasis {
    GradedBasis::new(c)
}

/// Matrix of multiplication by `l^power` from degree `from_degree`. Only
/// the two pieces involved are enumerated.
pub fn mult_matrix(c: &SimplicialComplex, from_degree: usize, power: usize) -> Result<SparseMatrix> {
    GradedBasis::for_degrees(c, &[from_degree, from_degree + power]).mult_matrix(from_degree, power)
}

/// The `l`-multiplication matrix tested for the weak property in degree `i`.
pub fn matrix_for_wlp_degree(c: &SimplicialComplex, i: usize) -> SparseMatrix {
    mult_matrix(c, i, 1).expect("1! fits")
}

pub(crate) fn factorial(d: usize) -> Option<i64> {
    (1..=d as i64).try_fold(1i64, |acc, x| acc.checked_mul(x))
}

/// Sparse integer matrix of a multiplication map `A_i -> A_{i+d}`.
/// Entries are sorted by `(row, col)` with at most one entry per position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<(usize, usize, i64)>,
    source_degree: usize,
    power: usize,
}

impl SparseMatrix {
    /// Builds a matrix from triplets; zero values are dropped and repeated
    /// positions are summed. Degree metadata defaults to `(0, 1)`.
    pub fn from_triplets(
        n_rows: usize,
        n_cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, i64)>,
    ) -> Result<Self> {
        let mut entries: Vec<(usize, usize, i64)> = triplets.into_iter().collect();
        for &(r, c, _) in &entries {
            if r >= n_rows || c >= n_cols {
                return Err(Error::OutOfRange {
                    what: "matrix entry",
                    detail: format!("({r}, {c}) in a {n_rows}x{n_cols} matrix"),
                });
            }
        }
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut merged: Vec<(usize, usize, i64)> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            match merged.last_mut() {
                Some(last) if last.0 == r && last.1 == c => last.2 += v,
                _ => merged.push((r, c, v)),
            }
        }
        merged.retain(|e| e.2 != 0);
        Ok(SparseMatrix { n_rows, n_cols, entries: merged, source_degree: 0, power: 1 })
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let trip = rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter().enumerate().map(move |(c, &v)| (r, c, v))
        });
        Self::from_triplets(n_rows, n_cols, trip).expect("dense rows are in range")
    }

    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        SparseMatrix { n_rows, n_cols, entries: Vec::new(), source_degree: 0, power: 1 }
    }

    pub fn with_degrees(mut self, source_degree: usize, power: usize) -> Self {
        self.source_degree = source_degree;
        self.power = power;
        self
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    /// Degree of the source piece (columns).
    pub fn col_degree(&self) -> usize {
        self.source_degree
    }

    /// Degree of the target piece (rows).
    pub fn row_degree(&self) -> usize {
        self.source_degree + self.power
    }

    pub fn power(&self) -> usize {
        self.power
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries
            .binary_search_by_key(&(row, col), |&(r, c, _)| (r, c))
            .map_or(0, |i| self.entries[i].2)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut entries: Vec<_> = self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect();
        entries.sort_unstable_by_key(|&(r, c, _)| (r, c));
        SparseMatrix {
            n_rows: self.n_cols,
            n_cols: self.n_rows,
            entries,
            source_degree: self.source_degree,
            power: self.power,
        }
    }

    /// Entries grouped by row as `(col, value)` lists.
    pub fn rows(&self) -> Vec<Vec<(usize, i64)>> {
        let mut rows = vec![Vec::new(); self.n_rows];
        for &(r, c, v) in &self.entries {
            rows[r].push((c, v));
        }
        rows
    }

    /// Replaces every nonzero entry by 1.
    pub fn support(&self) -> SparseMatrix {
        let mut m = self.clone();
        for e in &mut m.entries {
            e.2 = 1;
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.n_cols]; self.n_rows];
        for &(r, c, v) in &self.entries {
            d[r][c] = v;
        }
        d
    }

    /// Exact product `M v` over the integers.
    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i128>> {
        if v.len() != self.n_cols {
            return Err(Error::DimensionMismatch { expected: self.n_cols, actual: v.len() });
        }
        let mut out = vec![0i128; self.n_rows];
        for &(r, c, x) in &self.entries {
            out[r] += x as i128 * v[c] as i128;
        }
        Ok(out)
    }

    /// Sparse triplet text: a `rows cols nnz` header then one `row col value`
    /// line per nonzero, 1-based, in row-major order.
    pub fn write_triplets<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "{} {} {}", self.n_rows, self.n_cols, self.entries.len())?;
        for &(r, c, v) in &self.entries {
            writeln!(w, "{} {} {}", r + 1, c + 1, v)?;
        }
        Ok(())
    }

    pub fn to_triplet_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_triplets(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("ascii")
    }

    /// Parses the triplet format written by [`SparseMatrix::write_triplets`].
    pub fn read_triplets<R: BufRead>(r: R) -> Result<Self> {
        let bad = |msg: String| Error::MalformedMatrix(msg);
        let mut lines = r.lines().map(|l| l.map_err(|e| bad(e.to_string())));
        let header = lines.next().ok_or_else(|| bad("missing header".into()))??;
        let nums = parse_fields::<usize>(&header, 3).map_err(bad)?;
        let (n_rows, n_cols, nnz) = (nums[0], nums[1], nums[2]);
        let mut trip = Vec::with_capacity(nnz);
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let f = parse_fields::<i64>(&line, 3).map_err(bad)?;
            if f[0] < 1 || f[1] < 1 {
                return Err(bad(format!("indices are 1-based: {line}")));
            }
            trip.push((f[0] as usize - 1, f[1] as usize - 1, f[2]));
        }
        if trip.len() != nnz {
            return Err(bad(format!("header says {nnz} entries, found {}", trip.len())));
        }
        Self::from_triplets(n_rows, n_cols, trip)
    }

    /// Dense Markdown table: columns labelled by source monomials, each row
    /// followed by its target monomial.
    pub fn to_markdown(&self, basis: &GradedBasis) -> String {
        let cols = basis.degree(self.col_degree());
        let rows = basis.degree(self.row_degree());
        let dense = self.to_dense();
        let mut s = String::new();
        s.push('|');
        for f in cols {
            let _ = write!(s, " {} |", f.monomial());
        }
        s.push_str("   |\n|");
        for _ in 0..=cols.len() {
            s.push_str("---|");
        }
        s.push('\n');
        for (r, row) in dense.iter().enumerate() {
            s.push('|');
            for v in row {
                let _ = write!(s, " {v} |");
            }
            let label = rows.get(r).map_or_else(|| format!("r{}", r + 1), Face::monomial);
            let _ = writeln!(s, " {label} |");
        }
        s
    }
}

fn parse_fields<T: std::str::FromStr>(line: &str, count: usize) -> std::result::Result<Vec<T>, String> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != count {
        return Err(format!("expected {count} fields: {line:?}"));
    }
    parts
        .iter()
        .map(|p| p.parse::<T>().map_err(|_| format!("bad number {p:?} in {line:?}")))
        .collect()
}
