//! Exact rank and kernels of sparse integer matrices, over `Q` (fraction-free
//! elimination) or over a prime field.

mod engine;
mod integer;
mod modular;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::SparseMatrix;
use crate::error::{Error, Result};

/// Field over which a rank is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
#[derive(Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    /// `GF(p)` for an odd prime `p < 2^32`.
    PrimeField(u64),
}

impl FieldSpec {
    pub const DEFAULT_PRIME: u64 = 1_073_741_789;

    pub fn prime(p: u64) -> Result<Self> {
        if !(3..1 << 32).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn default_prime() -> Self {
        FieldSpec::PrimeField(Self::DEFAULT_PRIME)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }
}


impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("rational"),
            FieldSpec::PrimeField(p) => write!(f, "gfp={p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `rational`/`qq` or `gfp=P`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "rational" | "rationals" | "qq" | "q" => return Ok(FieldSpec::Rationals),
            _ => {}
        }
        let p = s
            .strip_prefix("gfp=")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::OutOfRange { what: "field", detail: format!("{s:?} is not rational or gfp=P") })?;
        FieldSpec::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of a matrix over one field, optionally with a kernel basis.
///
/// Over the rationals every kernel vector is a primitive integer vector with
/// `M v = 0` exactly. Over `GF(p)` the vectors hold symmetric residues and
/// satisfy `M v = 0 (mod p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankResult {
    pub rank: usize,
    pub field: FieldSpec,
    pub kernel_basis: Option<Vec<Vec<BigInt>>>,
}

/// How many kernel vectors to extract alongside the rank.
#[derive(Clone, Copy, PartialEq, Eq)]
enum KernelRequest {
    None,
    One,
    Basis,
}

fn compute(m: &SparseMatrix, field: FieldSpec, want: KernelRequest) -> RankResult {
    let rows: Vec<Vec<(usize, i64)>> = m.rows();
    let pick = |free: Vec<u32>| match want {
        KernelRequest::Basis => free,
        _ => free.into_iter().take(1).collect(),
    };
    match field {
        FieldSpec::Rationals => {
            let ech = integer::echelon(m.n_cols(), rows);
            let kernel_basis =
                (want != KernelRequest::None).then(|| integer::kernel(&ech, &pick(ech.free_columns())));
            RankResult { rank: ech.rank(), field, kernel_basis }
        }
        FieldSpec::PrimeField(p) => {
            let gf = modular::PrimeField::new(p);
            let ech = modular::echelon(gf, m.n_cols(), rows);
            let kernel_basis = (want != KernelRequest::None).then(|| {
                modular::kernel(gf, &ech, &pick(ech.free_columns()))
                    .into_iter()
                    .map(|v| v.into_iter().map(|a| BigInt::from(gf.lift(a))).collect())
                    .collect()
            });
            RankResult { rank: ech.rank(), field, kernel_basis }
        }
    }
}

/// Exact rank of `m` over `field`.
pub fn rank(m: &SparseMatrix, field: FieldSpec) -> RankResult {
    compute(m, field, KernelRequest::None)
}

/// Exact rank together with a kernel basis of `n_cols - rank` vectors.
pub fn rank_with_kernel(m: &SparseMatrix, field: FieldSpec) -> RankResult {
    compute(m, field, KernelRequest::Basis)
}

/// One nonzero kernel vector of `m`, if the kernel is nontrivial.
pub fn kernel_vector(m: &SparseMatrix, field: FieldSpec) -> Option<Vec<BigInt>> {
    compute(m, field, KernelRequest::One).kernel_basis.and_then(|k| k.into_iter().next())
}

/// Whether `rank(m) == min(rows, cols)`.
pub fn max_rank_attained(m: &SparseMatrix, field: FieldSpec) -> bool {
    rank(m, field).rank == m.n_rows().min(m.n_cols())
}

/// Exact check that `m v = 0` over the integers.
pub fn verify_in_kernel(m: &SparseMatrix, v: &[i64]) -> Result<bool> {
    Ok(m.mul_vec(v)?.iter().all(|&x| x == 0))
}

/// [`verify_in_kernel`] for big-integer vectors.
pub fn verify_in_kernel_big(m: &SparseMatrix, v: &[BigInt]) -> Result<bool> {
    if v.len() != m.n_cols() {
        return Err(Error::DimensionMismatch { expected: m.n_cols(), actual: v.len() });
    }
    let mut out = vec![BigInt::zero(); m.n_rows()];
    for &(r, c, x) in m.entries() {
        out[r] += &v[c] * x;
    }
    Ok(out.iter().all(Zero::is_zero))
}

/// Checks `m v = 0 (mod p)`.
pub fn verify_in_kernel_mod(m: &SparseMatrix, v: &[BigInt], p: u64) -> Result<bool> {
    if v.len() != m.n_cols() {
        return Err(Error::DimensionMismatch { expected: m.n_cols(), actual: v.len() });
    }
    let gf = modular::PrimeField::new(p);
    let pb = BigInt::from(p);
    let vm: Vec<u64> = v
        .iter()
        .map(|a| ((a % &pb + &pb) % &pb).to_u64().expect("reduced below p"))
        .collect();
    let mut out = vec![0u64; m.n_rows()];
    for &(r, c, x) in m.entries() {
        out[r] = (out[r] + gf.mul(gf.reduce(x), vm[c])) % p;
    }
    Ok(out.iter().all(|&x| x == 0))
}

/// How a rational rank was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// Full rank over `GF(p)`; a rank over `GF(p)` never exceeds the rank over `Q`,
    /// so the rational rank is the same maximal value.
    ModularLowerBound,
    /// Computed directly by fraction-free elimination over `Z`.
    FractionFree,
    /// Modular elimination, for verdicts requested over `GF(p)` itself.
    PrimeField,
    /// Read off the Jordan type of a cone `simplex(C) * link`, built from
    /// exact rational ranks on the link.
    ConeDecomposition,
}

/// Rational rank found through a prime-field filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifiedRank {
    pub rank: usize,
    /// Rank over the filter prime, when the filter ran.
    pub rank_mod_p: Option<usize>,
    pub certification: Certification,
}

/// Rank over `Q`: try `GF(filter_prime)` first and only fall back to
/// fraction-free elimination when the modular rank is not maximal. The filter
/// is skipped when `filter_prime` divides some entry's natural scale, i.e.
/// when `filter_prime <= m.power()`.
pub fn rational_rank_filtered(m: &SparseMatrix, filter_prime: u64) -> CertifiedRank {
    let full = m.n_rows().min(m.n_cols());
    let mut rank_mod_p = None;
    if filter_prime as usize > m.power() {
        let r = rank(m, FieldSpec::PrimeField(filter_prime)).rank;
        if r == full {
            return CertifiedRank { rank: r, rank_mod_p: Some(r), certification: Certification::ModularLowerBound };
        }
        rank_mod_p = Some(r);
    }
    let r = rank(m, FieldSpec::Rationals).rank;
    CertifiedRank { rank: r, rank_mod_p, certification: Certification::FractionFree }
}
