//! Weak and strong Lefschetz checks for `A(Δ)` with `ℓ = x_1 + ... + x_n`.
//!
//! A report lists every multiplication map it looked at together with the
//! rank, the field the rank holds over and, when a structural shortcut
//! decided the map, which one. Rational verdicts are exact: a map is either
//! certified full rank by a prime-field elimination (which can only
//! undercount) or run through fraction-free elimination. Complexes with
//! cone vertices are handled through their link, which for `vdw(n, k)` with
//! `2k >= n` is far smaller than the complex itself.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{GradedBasis, SparseMatrix};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::jordan::JordanType;
use crate::linalg::{self, Certification, FieldSpec};
use crate::vdw::{build_vdw, VdwParams};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Wlp,
    Slp,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Wlp => "wlp",
            Property::Slp => "slp",
        })
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "wlp" => Ok(Property::Wlp),
            "slp" => Ok(Property::Slp),
            _ => Err(Error::OutOfRange { what: "property", detail: format!("{s:?} is not wlp or slp") }),
        }
    }
}

/// What a report was computed for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComplexId {
    Vdw { n: u32, k: u32 },
    Generic { n_vertices: u32, n_facets: usize },
}

impl ComplexId {
    pub fn vdw(p: VdwParams) -> Self {
        ComplexId::Vdw { n: p.n(), k: p.k() }
    }

    pub fn generic(c: &SimplicialComplex) -> Self {
        ComplexId::Generic { n_vertices: c.n_vertices(), n_facets: c.facets().len() }
    }

    pub fn vdw_params(self) -> Option<VdwParams> {
        match self {
            ComplexId::Vdw { n, k } => VdwParams::new(n, k).ok(),
            ComplexId::Generic { .. } => None,
        }
    }
}

impl fmt::Display for ComplexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexId::Vdw { n, k } => write!(f, "vdw({n},{k})"),
            ComplexId::Generic { n_vertices, n_facets } => {
                write!(f, "complex on {n_vertices} vertices with {n_facets} facets")
            }
        }
    }
}

/// Structural reason a map was declared maximal without elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shortcut {
    /// Source or target is the zero space.
    Vacuous,
    /// `A_0 -> A_1` is injective as soon as `A_1 != 0`.
    DegreeZero,
    /// Degree one with `dim A_2 >= dim A_1` and a 1-skeleton without
    /// bipartite components.
    Skeleton,
    /// Top-dimension map of a vdw pseudo-manifold with boundary
    /// (`k >= 3`, `n/2 <= k < n`).
    PseudoManifoldBoundary,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzOptions {
    pub field: FieldSpec,
    pub shortcuts: bool,
    /// Also run elimination on shortcut maps and record whether they agree.
    pub cross_check: bool,
    /// Extract a kernel vector for the first failing map.
    pub certificate: bool,
    /// Prime used to filter rational rank computations.
    pub filter_prime: u64,
    /// Stop after the first non-maximal map; `per_map` is then truncated.
    pub stop_at_first_failure: bool,
    /// Compute ranks of a cone through its link (see [`crate::jordan`]);
    /// over `GF(p)` only when `p > n_vertices`.
    pub cone_reduction: bool,
}

impl Default for LefschetzOptions {
    fn default() -> Self {
        LefschetzOptions {
            field: FieldSpec::Rationals,
            shortcuts: true,
            cross_check: false,
            certificate: false,
            filter_prime: FieldSpec::DEFAULT_PRIME,
            stop_at_first_failure: false,
            cone_reduction: true,
        }
    }
}

/// One multiplication map `×ℓ^power : A_from_degree -> A_{from_degree+power}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRecord {
    pub from_degree: usize,
    pub power: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub maximal: bool,
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certification: Option<Certification>,
    /// Rank at the filter prime, when it was computed for a rational verdict.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_mod_p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shortcut: Option<Shortcut>,
    /// Whether elimination agreed with the shortcut, when cross-checked.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_check_agrees: Option<bool>,
}

impl MapRecord {
    pub fn expected_rank(&self) -> usize {
        self.source_dim.min(self.target_dim)
    }

    /// The prime-field filter saw a smaller rank than the rational one.
    pub fn characteristic_sensitive(&self) -> bool {
        self.rank_mod_p.is_some_and(|r| r != self.rank)
    }
}

/// Which side of the failing matrix `M` the certificate vector lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelSide {
    /// `M v = 0`: the map is not injective.
    Right,
    /// `v^T M = 0`: the map is not surjective.
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureCertificate {
    pub from_degree: usize,
    pub power: usize,
    pub side: KernelSide,
    pub field: FieldSpec,
    /// Faces indexing `vector`, as monomials.
    pub basis: Vec<String>,
    #[serde(with = "big_vec")]
    pub vector: Vec<BigInt>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzReport {
    pub schema_version: u32,
    pub params: ComplexId,
    pub mode: Property,
    pub field: FieldSpec,
    pub per_map: Vec<MapRecord>,
    pub verdict: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<FailureCertificate>,
}

impl LefschetzReport {
    pub fn first_failure(&self) -> Option<&MapRecord> {
        self.per_map.iter().find(|m| !m.maximal)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Big integers travel as JSON numbers when they fit in `i64`, else as strings.
mod big_vec {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Entry {
        Small(i64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = v
            .iter()
            .map(|x| x.to_i64().map_or_else(|| Entry::Big(x.to_string()), Entry::Small))
            .collect();
        entries.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Entry>::deserialize(d)?
            .into_iter()
            .map(|e| match e {
                Entry::Small(x) => Ok(BigInt::from(x)),
                Entry::Big(s) => s.parse().map_err(D::Error::custom),
            })
            .collect()
    }
}

enum Engine {
    Direct,
    Cone(JordanType),
}

struct Context<'a> {
    complex: &'a SimplicialComplex,
    basis: OnceLock<GradedBasis>,
    dims: Vec<usize>,
    engine: Engine,
    id: ComplexId,
    opts: &'a LefschetzOptions,
    skeleton_ok: OnceLock<bool>,
}

/// Jordan type of `ℓ` on `A(c)` from exact ranks of all its maps over
/// `field`. Rational ranks go through the `filter_prime` filter.
pub fn jordan_type(c: &SimplicialComplex, field: FieldSpec, filter_prime: u64) -> Result<JordanType> {
    let basis = GradedBasis::new(c);
    let dims = basis.hilbert_function();
    let maps = maps_for(Property::Slp, basis.top_degree());
    let ranks: Vec<((usize, usize), usize)> = maps
        .into_par_iter()
        .map(|(i, d)| {
            let m = basis.mult_matrix(i, d)?;
            let r = match field {
                FieldSpec::Rationals => linalg::rational_rank_filtered(&m, filter_prime).rank,
                f => linalg::rank(&m, f).rank,
            };
            Ok(((i, d), r))
        })
        .collect::<Result<_>>()?;
    let ranks: HashMap<(usize, usize), usize> = ranks.into_iter().collect();
    Ok(JordanType::from_ranks(&dims, |i, d| ranks[&(i, d)]))
}

/// Jordan type of a complex with cone vertices, through its link.
///
/// Valid over `Q` and over `GF(p)` for `p > n_vertices`, where the string
/// rules for the simplex and for tensor products still hold.
pub fn cone_jordan_type(c: &SimplicialComplex, field: FieldSpec, filter_prime: u64) -> Result<JordanType> {
    if !cone_reduction_applies(c, field) {
        return Err(Error::OutOfRange {
            what: "field",
            detail: format!("{field} is too small for the cone reduction on {} vertices", c.n_vertices()),
        });
    }
    let (cone, link) = c.cone_split();
    let link = match link {
        Some(l) => jordan_type(&l, field, filter_prime)?,
        None => JordanType::point(),
    };
    Ok(JordanType::boolean(cone.len()).tensor(&link))
}

fn cone_reduction_applies(c: &SimplicialComplex, field: FieldSpec) -> bool {
    let big_enough = match field {
        FieldSpec::Rationals => true,
        FieldSpec::PrimeField(p) => p > c.n_vertices() as u64,
    };
    big_enough && !c.cone_vertices().is_empty()
}

impl<'a> Context<'a> {
    fn new(complex: &'a SimplicialComplex, id: ComplexId, opts: &'a LefschetzOptions) -> Result<Self> {
        let basis = OnceLock::new();
        let (engine, dims) = if opts.cone_reduction && cone_reduction_applies(complex, opts.field) {
            let j = cone_jordan_type(complex, opts.field, opts.filter_prime)?;
            let dims = (0..=complex.dim() + 1).map(|i| j.dim(i) as usize).collect();
            (Engine::Cone(j), dims)
        } else {
            let b = GradedBasis::new(complex);
            let dims = b.hilbert_function();
            let _ = basis.set(b);
            (Engine::Direct, dims)
        };
        Ok(Context { complex, basis, dims, engine, id, opts, skeleton_ok: OnceLock::new() })
    }

    fn basis(&self) -> &GradedBasis {
        self.basis.get_or_init(|| GradedBasis::new(self.complex))
    }

    fn dim_of_degree(&self, i: usize) -> usize {
        self.dims.get(i).copied().unwrap_or(0)
    }

    fn shortcut(&self, i: usize, d: usize, source: usize, target: usize) -> Option<Shortcut> {
        if !self.opts.shortcuts || d != 1 {
            return None;
        }
        if i == 0 {
            return Some(Shortcut::DegreeZero);
        }
        // the remaining shortcuts are characteristic-zero statements
        if self.opts.field != FieldSpec::Rationals {
            return None;
        }
        if i == 1 && target >= source {
            let ok = *self
                .skeleton_ok
                .get_or_init(|| !self.complex.one_skeleton().analyze().has_bipartite_component());
            if ok {
                return Some(Shortcut::Skeleton);
            }
        }
        if i == self.complex.dim() {
            if let Some(p) = self.id.vdw_params() {
                if p.k() >= 3 && p.in_upper_half() {
                    return Some(Shortcut::PseudoManifoldBoundary);
                }
            }
        }
        None
    }

    fn matrix(&self, i: usize, d: usize) -> Result<SparseMatrix> {
        match self.engine {
            Engine::Direct => self.basis().mult_matrix(i, d),
            // a cone's full basis can be exponentially large
            Engine::Cone(_) => crate::algebra::mult_matrix(self.complex, i, d),
        }
    }

    fn compute(&self, i: usize, d: usize) -> Result<(usize, Option<usize>, Certification)> {
        if let Engine::Cone(j) = &self.engine {
            return Ok((j.rank(i, d) as usize, None, Certification::ConeDecomposition));
        }
        let m = self.matrix(i, d)?;
        Ok(match self.opts.field {
            FieldSpec::Rationals => {
                let r = linalg::rational_rank_filtered(&m, self.opts.filter_prime);
                (r.rank, r.rank_mod_p, r.certification)
            }
            f @ FieldSpec::PrimeField(_) => (linalg::rank(&m, f).rank, None, Certification::PrimeField),
        })
    }

    fn evaluate(&self, i: usize, d: usize) -> Result<MapRecord> {
        let source = self.dim_of_degree(i);
        let target = self.dim_of_degree(i + d);
        let mut rec = MapRecord {
            from_degree: i,
            power: d,
            source_dim: source,
            target_dim: target,
            rank: 0,
            maximal: true,
            field: self.opts.field,
            certification: None,
            rank_mod_p: None,
            shortcut: None,
            cross_check_agrees: None,
        };
        if source == 0 || target == 0 {
            rec.shortcut = Some(Shortcut::Vacuous);
            return Ok(rec);
        }
        let full = source.min(target);
        if let Some(s) = self.shortcut(i, d, source, target) {
            rec.shortcut = Some(s);
            rec.rank = full;
            if self.opts.cross_check {
                let (rank, rank_mod_p, cert) = self.compute(i, d)?;
                rec.cross_check_agrees = Some(rank == full);
                rec.rank = rank;
                rec.rank_mod_p = rank_mod_p;
                rec.certification = Some(cert);
                rec.maximal = rank == full;
            }
            return Ok(rec);
        }
        let (rank, rank_mod_p, cert) = self.compute(i, d)?;
        rec.rank = rank;
        rec.rank_mod_p = rank_mod_p;
        rec.certification = Some(cert);
        rec.maximal = rank == full;
        Ok(rec)
    }

    fn certificate(&self, rec: &MapRecord) -> Result<FailureCertificate> {
        let m = self.matrix(rec.from_degree, rec.power)?;
        let field = self.opts.field;
        let (side, target_m, basis_degree) = if rec.source_dim <= rec.target_dim {
            (KernelSide::Right, m.clone(), rec.from_degree)
        } else {
            (KernelSide::Left, m.transpose(), rec.from_degree + rec.power)
        };
        let vector = linalg::kernel_vector(&target_m, field).ok_or_else(|| {
            Error::CertificateFailed(format!(
                "map from degree {} by power {} reported rank {} but has trivial kernel",
                rec.from_degree, rec.power, rec.rank
            ))
        })?;
        let verified = match field {
            FieldSpec::Rationals => linalg::verify_in_kernel_big(&target_m, &vector)?,
            FieldSpec::PrimeField(p) => linalg::verify_in_kernel_mod(&target_m, &vector, p)?,
        };
        Ok(FailureCertificate {
            from_degree: rec.from_degree,
            power: rec.power,
            side,
            field,
            basis: self.complex.faces_of_dim(basis_degree as i64 - 1).iter().map(Face::monomial).collect(),
            vector,
            verified,
        })
    }
}

fn maps_for(property: Property, top: usize) -> Vec<(usize, usize)> {
    match property {
        Property::Wlp => (0..=top).map(|i| (i, 1)).collect(),
        Property::Slp => (0..top).flat_map(|i| (1..=top - i).map(move |d| (i, d))).collect(),
    }
}

/// Checks `property` for `A(c)`.
///
/// WLP looks at `×ℓ : A_i -> A_{i+1}` for `i = 0..=dim Δ + 1`; SLP at every
/// `×ℓ^d : A_i -> A_{i+d}` with `d >= 1` and `i + d <= dim Δ + 1`.
pub fn report(c: &SimplicialComplex, id: ComplexId, property: Property, opts: &LefschetzOptions) -> Result<LefschetzReport> {
    let ctx = Context::new(c, id, opts)?;
    let maps = maps_for(property, c.dim() + 1);
    let per_map: Vec<MapRecord> = if opts.stop_at_first_failure {
        let mut out = Vec::new();
        for (i, d) in maps {
            let rec = ctx.evaluate(i, d)?;
            let stop = !rec.maximal;
            out.push(rec);
            if stop {
                break;
            }
        }
        out
    } else {
        maps.into_par_iter().map(|(i, d)| ctx.evaluate(i, d)).collect::<Result<_>>()?
    };
    let verdict = per_map.iter().all(|m| m.maximal);
    let certificate = match per_map.iter().find(|m| !m.maximal) {
        Some(rec) if opts.certificate => Some(ctx.certificate(rec)?),
        _ => None,
    };
    Ok(LefschetzReport {
        schema_version: SCHEMA_VERSION,
        params: id,
        mode: property,
        field: opts.field,
        per_map,
        verdict,
        certificate,
    })
}

pub fn wlp_report(c: &SimplicialComplex, id: ComplexId, opts: &LefschetzOptions) -> Result<LefschetzReport> {
    report(c, id, Property::Wlp, opts)
}

/// SLP report; shortcuts do not apply to powers above one, the degree-0 one aside.
pub fn slp_report(c: &SimplicialComplex, id: ComplexId, opts: &LefschetzOptions) -> Result<LefschetzReport> {
    report(c, id, Property::Slp, opts)
}

/// Builds `vdw(n, k)` and checks `property`.
pub fn check_vdw(p: VdwParams, property: Property, opts: &LefschetzOptions) -> Result<LefschetzReport> {
    report(&build_vdw(p), ComplexId::vdw(p), property, opts)
}

/// Smallest `n` in `k+1..=n_max` for which `A(vdw(n, k))` fails the WLP.
pub fn first_wlp_failure(k: u32, n_max: u32, opts: &LefschetzOptions) -> Result<Option<u32>> {
    let opts = LefschetzOptions { stop_at_first_failure: true, certificate: false, ..opts.clone() };
    for n in k + 1..=n_max {
        if !check_vdw(VdwParams::new(n, k)?, Property::Wlp, &opts)?.verdict {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// `2k + 2 - (1 + (-1)^((k+1)/2)) / 2` for odd `k >= 3`.
pub fn conjecture_formula(k: u32) -> Result<u32> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::OutOfRange { what: "k", detail: format!("{k} is not an odd integer >= 3") });
    }
    let correction = if k.div_ceil(2).is_multiple_of(2) { 1 } else { 0 };
    Ok(2 * k + 2 - correction)
}

/// Explicit kernel vector of `×ℓ : A_2 -> A_3` for `vdw(n, 3)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelCertificateK3 {
    pub n: u32,
    /// Degree-2 basis, lexicographic.
    pub faces: Vec<Face>,
    pub z: Vec<i64>,
}

/// `(-1)^(κ+1) 2^κ` where `2^κ` is the largest power of two dividing `b - a`.
pub fn k3_entry(a: u32, b: u32) -> i64 {
    let kappa = (b - a).trailing_zeros();
    let mag = 1i64 << kappa;
    if kappa.is_multiple_of(2) {
        -mag
    } else {
        mag
    }
}

pub fn k3_kernel_vector(n: u32) -> Result<KernelCertificateK3> {
    if n < 8 {
        return Err(Error::OutOfRange { what: "n", detail: format!("the 2-adic kernel vector needs n >= 8, got {n}") });
    }
    let c = build_vdw(VdwParams::new(n, 3)?);
    let faces = c.faces_of_dim(1);
    let z = faces.iter().map(|f| k3_entry(f.vertices()[0], f.vertices()[1])).collect();
    Ok(KernelCertificateK3 { n, faces, z })
}

impl KernelCertificateK3 {
    pub fn matrix(&self) -> Result<SparseMatrix> {
        let c = build_vdw(VdwParams::new(self.n, 3)?);
        GradedBasis::new(&c).mult_matrix(2, 1)
    }

    pub fn verify(&self) -> Result<bool> {
        linalg::verify_in_kernel(&self.matrix()?, &self.z)
    }
}

/// The hand-given left kernel vector for `vdw(7, 3)` in degree two, in the
/// row order it was printed with.
pub const N7_VECTOR: [i64; 17] = [-1, 1, -1, 1, 1, -1, 0, 1, -1, 0, 1, -1, -1, 0, 1, -1, 1];

/// Row labels of the printed 17 x 18 matrix, in printed order.
const N7_ROWS: [[u32; 3]; 17] = [
    [1, 2, 3],
    [1, 2, 4],
    [1, 3, 4],
    [1, 3, 5],
    [1, 3, 7],
    [1, 5, 7],
    [2, 3, 4],
    [2, 3, 5],
    [2, 4, 5],
    [3, 4, 5],
    [3, 4, 6],
    [3, 5, 6],
    [3, 5, 7],
    [4, 5, 6],
    [4, 5, 7],
    [4, 6, 7],
    [5, 6, 7],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct N7Certificate {
    /// `permutation[j]` is the lexicographic position of printed row `j`.
    pub permutation: Vec<usize>,
    /// The vector re-indexed by the lexicographic degree-3 basis.
    pub vector: Vec<i64>,
    /// `rank(M) <= rank_bound` follows from the nonzero left kernel vector.
    pub rank_bound: usize,
}

/// Re-indexes [`N7_VECTOR`] into lexicographic order and checks `x^T M = 0`.
pub fn paper_n7_certificate() -> Result<N7Certificate> {
    let c = build_vdw(VdwParams::new(7, 3)?);
    let basis = GradedBasis::new(&c);
    let m = basis.mult_matrix(2, 1)?;
    if m.n_rows() != N7_ROWS.len() {
        return Err(Error::CertificateFailed(format!("degree-3 piece has {} faces, expected 17", m.n_rows())));
    }
    let mut permutation = Vec::with_capacity(N7_ROWS.len());
    for row in N7_ROWS {
        let face = Face::new(row.to_vec());
        let pos = basis
            .position(3, &face)
            .ok_or_else(|| Error::CertificateFailed(format!("{face} is not a face of vdw(7,3)")))?;
        permutation.push(pos);
    }
    let mut vector = vec![0; N7_VECTOR.len()];
    for (j, &pos) in permutation.iter().enumerate() {
        vector[pos] = N7_VECTOR[j];
    }
    if !linalg::verify_in_kernel(&m.transpose(), &vector)? {
        return Err(Error::CertificateFailed("x^T M is not zero".into()));
    }
    Ok(N7Certificate { permutation, vector, rank_bound: m.n_rows() - 1 })
}
