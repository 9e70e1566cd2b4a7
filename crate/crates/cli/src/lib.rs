//! Reproduction harness for the Lefschetz tables of van der Waerden
//! complexes: verdict grids, dimension tables, first-failure scans,
//! pseudo-manifold classification and the appendix audits, with an on-disk
//! cache for grid cells.

pub mod cache;
pub mod grid;
pub mod render;
pub mod studies;

/// Version of every structured document this crate writes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] vdw_core::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
