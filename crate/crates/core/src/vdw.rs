//! van der Waerden complexes `vdw(n, k)`: the complex on `1..=n` whose facets
//! are the arithmetic progressions `{i, i+a, ..., i+k*a}` inside `1..=n`.
//!
//! Besides construction this module carries the closed-form counts used to
//! cross-check enumeration, and the f-vector bookkeeping for `k = 3`.

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Parameters of `vdw(n, k)`: `n > k >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VdwParams {
    n: u32,
    k: u32,
}

impl VdwParams {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if k < 1 || k >= n {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(VdwParams { n, k })
    }

    pub fn n(self) -> u32 {
        self.n
    }

    pub fn k(self) -> u32 {
        self.k
    }

    /// `n/2 <= k < n`: every facet has jump one and the complex is a
    /// pseudo-manifold once `k >= 3`.
    pub fn in_upper_half(self) -> bool {
        2 * self.k >= self.n
    }
}

/// One arithmetic-progression facet `{start, start+jump, ..., start+k*jump}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProgressionFacet {
    pub start: u32,
    pub jump: u32,
    pub k: u32,
}

impl ProgressionFacet {
    pub fn vertices(self) -> Vec<u32> {
        (0..=self.k).map(|t| self.start + t * self.jump).collect()
    }

    pub fn face(self) -> Face {
        Face::from_sorted(self.vertices())
    }

    pub fn last(self) -> u32 {
        self.start + self.k * self.jump
    }

    /// The common difference of the progression.
    pub fn jump(self) -> u32 {
        self.jump
    }

    /// Classifies the vertex labels by parity; every progression falls in
    /// one of the four [`ParityClass`] cases.
    pub fn parity_class(self) -> Result<ParityClass> {
        let odd = self.vertices().iter().filter(|&&v| v % 2 == 1).count();
        let size = self.k as usize + 1;
        let even = size - odd;
        let (lo, hi) = (size / 2, size.div_ceil(2));
        let class = if even == 0 {
            ParityClass::AllOdd
        } else if odd == 0 {
            ParityClass::AllEven
        } else if odd == hi && even == lo {
            ParityClass::MoreOddMixed
        } else if odd == lo && even == hi {
            ParityClass::MoreEvenMixed
        } else {
            return Err(Error::ParityLemmaViolation { facet: self.face(), odd, even });
        };
        Ok(class)
    }
}

/// Parity pattern of a progression's labels. For an even number of terms the
/// two mixed classes coincide (half odd, half even) and `MoreOddMixed` is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParityClass {
    AllOdd,
    /// `ceil((k+1)/2)` odd labels and `floor((k+1)/2)` even labels.
    MoreOddMixed,
    /// `floor((k+1)/2)` odd labels and `ceil((k+1)/2)` even labels.
    MoreEvenMixed,
    AllEven,
}

/// All progression facets of `vdw(n, k)`, ordered by jump then start.
pub fn progressions(p: VdwParams) -> Vec<ProgressionFacet> {
    let (n, k) = (p.n, p.k);
    let mut out = Vec::new();
    let mut jump = 1;
    while k * jump < n {
        for start in 1..=n - k * jump {
            out.push(ProgressionFacet { start, jump, k });
        }
        jump += 1;
    }
    out
}

/// Builds `vdw(n, k)`. The facet list goes through the usual
/// canonicalization even though distinct progressions of equal length never
/// contain one another.
pub fn build_vdw(p: VdwParams) -> SimplicialComplex {
    SimplicialComplex::from_facets(p.n, progressions(p).into_iter().map(ProgressionFacet::face))
        .expect("progressions cover 1..=n and stay in range")
}

/// Jump factor of a facet of `vdw(n, k)` given as a face; `None` when the
/// face is not an arithmetic progression with at least two terms.
pub fn jump(facet: &Face) -> Option<u32> {
    let v = facet.vertices();
    if v.len() < 2 {
        return None;
    }
    let d = v[1] - v[0];
    v.windows(2).all(|w| w[1] - w[0] == d).then_some(d)
}

/// Closed-form facet count: `sum_{a >= 1} max(0, n - k*a)`.
pub fn facet_count_closed_form(p: VdwParams) -> u64 {
    let (n, k) = (p.n as u64, p.k as u64);
    (1..)
        .map(|a| n.saturating_sub(k * a))
        .take_while(|&c| c > 0)
        .sum()
}

/// Closed-form pseudo-manifold classification of `vdw(n, k)` as
/// `(is_pseudo_manifold, has_boundary)`: pseudo-manifolds are exactly
/// `k = 1, n <= 3`, `k = 2, n <= 6` and `k >= 3, n <= 2k`, and all of them
/// except `vdw(3, 1)` have boundary.
pub fn pseudo_manifold_closed_form(p: VdwParams) -> (bool, bool) {
    let (n, k) = (p.n, p.k);
    let pm = match k {
        1 => n <= 3,
        2 => n <= 6,
        _ => n <= 2 * k,
    };
    (pm, pm && (n, k) != (3, 1))
}

/// `(d, e) = (floor((n-1)/3), floor((n-1)/4))`: the largest `j` with
/// `1 + 3j <= n`, resp. `1 + 4j <= n`.
pub fn appendix_params(n: u32) -> (u32, u32) {
    let m = n.saturating_sub(1);
    (m / 3, m / 4)
}

/// Whether `2d - 3e + 5 <= 0` for `(d, e) = appendix_params(n)`.
pub fn check_2d3e5(n: u32) -> bool {
    let (d, e) = appendix_params(n);
    2 * d as i64 - 3 * e as i64 + 5 <= 0
}

/// One row of the k = 3 recurrence audit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceAudit {
    pub n: u32,
    /// Enumerated value at `n`.
    pub lhs: u64,
    /// Predicted value (f2) or upper bound (f1) from the `n - 1` count.
    pub rhs: u64,
    pub holds: bool,
}

/// `(f_1, f_2)` of `vdw(n, 3)`, counted by enumeration.
pub fn k3_edge_triangle_counts(n: u32) -> (u64, u64) {
    let c = build_vdw(VdwParams::new(n, 3).expect("n > 3"));
    (c.f(1), c.f(2))
}

fn check_audit_range(n: u32) -> Result<()> {
    if n < 89 {
        return Err(Error::OutOfRange { what: "audit n", detail: format!("{n} < 89") });
    }
    Ok(())
}

/// `f_2(vdw(n,3)) == f_2(vdw(n-1,3)) + 4d - e`, for `n >= 89`.
pub fn audit_f2_recurrence(n: u32) -> Result<RecurrenceAudit> {
    check_audit_range(n)?;
    Ok(audit_f2_unchecked(n))
}

/// `f_1(vdw(n,3)) <= f_1(vdw(n-1,3)) + 6d - 4e + 5`, for `n >= 89`.
pub fn audit_f1_bound(n: u32) -> Result<RecurrenceAudit> {
    check_audit_range(n)?;
    Ok(audit_f1_unchecked(n))
}

/// The f2 recurrence evaluated without the range check (needs `n >= 5`);
/// exploratory use only.
pub fn audit_f2_unchecked(n: u32) -> RecurrenceAudit {
    let (d, e) = appendix_params(n);
    let lhs = k3_edge_triangle_counts(n).1;
    let rhs = (k3_edge_triangle_counts(n - 1).1 as i64 + 4 * d as i64 - e as i64) as u64;
    RecurrenceAudit { n, lhs, rhs, holds: lhs == rhs }
}

/// The f1 bound evaluated without the range check (needs `n >= 5`).
pub fn audit_f1_unchecked(n: u32) -> RecurrenceAudit {
    let (d, e) = appendix_params(n);
    let lhs = k3_edge_triangle_counts(n).0;
    let rhs = (k3_edge_triangle_counts(n - 1).0 as i64 + 6 * d as i64 - 4 * e as i64 + 5) as u64;
    RecurrenceAudit { n, lhs, rhs, holds: lhs <= rhs }
}
