//! van der Waerden complexes and the Lefschetz properties of their squarefree
//! Artinian algebras.
//!
//! The pieces, bottom up:
//!
//! * [`complex`]: simplicial complexes, faces, f-vectors, 1-skeleta and
//!   pseudo-manifold checks.
//! * [`vdw`]: the arithmetic-progression complexes `vdw(n, k)`.
//! * [`algebra`]: graded bases of `A(Δ)` and the matrices of `×ℓ^d`.
//! * [`linalg`]: exact sparse rank over `Q` and `GF(p)`.
//! * [`jordan`]: string decompositions of `ℓ`, used to reduce cones to their links.
//! * [`lefschetz`]: WLP/SLP reports and explicit kernel certificates.
//!
//! ```
//! use vdw_core::{check_vdw, LefschetzOptions, Property, VdwParams};
//!
//! let p = VdwParams::new(7, 3).unwrap();
//! let report = check_vdw(p, Property::Wlp, &LefschetzOptions::default()).unwrap();
//! assert!(!report.verdict);
//! assert_eq!(report.first_failure().unwrap().from_degree, 2);
//! ```

pub mod algebra;
pub mod complex;
pub mod error;
pub mod jordan;
pub mod lefschetz;
pub mod linalg;
pub mod vdw;

pub use algebra::{graded_basis, matrix_for_wlp_degree, mult_matrix, GradedBasis, SparseMatrix};
pub use complex::{FVector, Face, Graph, PseudoManifoldVerdict, SimplicialComplex, Violation};
pub use error::{Error, Result};
pub use lefschetz::{
    check_vdw, conjecture_formula, first_wlp_failure, k3_kernel_vector, paper_n7_certificate, slp_report,
    wlp_report, ComplexId, LefschetzOptions, LefschetzReport, MapRecord, Property, Shortcut,
};
pub use linalg::{max_rank_attained, rank, verify_in_kernel, FieldSpec, RankResult};
pub use vdw::{build_vdw, pseudo_manifold_closed_form, VdwParams};
