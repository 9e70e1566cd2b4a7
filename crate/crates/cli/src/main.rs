use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use vdw_cli::cache::RunCache;
use vdw_cli::grid::compute_grid;
use vdw_cli::render::{render_rows, Format};
use vdw_cli::studies::{audit_failed, audit_rows, dims_rows, facet_rows, pm_rows, scan_rows};
use vdw_cli::{CliError, Result};
use vdw_core::{build_vdw, FieldSpec, GradedBasis, LefschetzOptions, LefschetzReport, Property, VdwParams};

#[derive(Parser)]
#[command(name = "vdw", version, about = "Lefschetz properties of van der Waerden complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the facets of vdw(n, k) with their jump factors.
    Facets {
        n: u32,
        k: u32,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Decide the WLP or SLP for one complex. Exit 0 if it holds, 1 if not.
    Check {
        n: u32,
        k: u32,
        #[arg(long, value_enum, default_value = "wlp")]
        property: PropertyArg,
        #[command(flatten)]
        compute: ComputeArgs,
        /// Attach a kernel vector for the first failing map.
        #[arg(long)]
        certificate: bool,
        /// Run elimination on shortcut maps too and report agreement.
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: CheckFormat,
        /// Write the first failing matrix in triplet format to PATH.
        #[arg(long, value_name = "PATH")]
        dump_matrix: Option<PathBuf>,
    },
    /// Verdict grid for all 1 <= k < n <= n-max.
    Table {
        #[arg(long, value_enum, default_value = "wlp")]
        property: PropertyArg,
        #[arg(long, default_value_t = 20)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        #[command(flatten)]
        compute: ComputeArgs,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// (dim A_2, dim A_3) of vdw(n, k) over a range of n.
    Dims {
        #[arg(long, default_value_t = 3)]
        k: u32,
        #[arg(long, default_value_t = 4)]
        n_min: u32,
        #[arg(long, default_value_t = 90)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// First WLP failure for odd k, against the conjectured formula.
    Scan {
        #[arg(long, default_value_t = 11)]
        odd_k_max: u32,
        #[arg(long, default_value_t = 25)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        #[command(flatten)]
        compute: ComputeArgs,
    },
    /// Pseudo-manifold classification against the closed form.
    Pm {
        #[arg(long, default_value_t = 30)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Appendix identities and f-vector inequalities.
    Audit {
        /// Run the appendix checks (the default, kept for explicitness).
        #[arg(long)]
        appendix: bool,
        /// Extra report-only recurrence rows, e.g. 5..88.
        #[arg(long, value_name = "A..B", value_parser = parse_range)]
        unsafe_range: Option<RangeInclusive<u32>>,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
    },
    /// Print or export the matrix of ×ℓ^power from degree `degree`.
    Matrix {
        n: u32,
        k: u32,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[arg(long, value_enum, default_value = "triplet")]
        format: MatrixFormat,
        #[arg(long, value_name = "PATH")]
        dump_matrix: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Wlp,
    Slp,
}

impl From<PropertyArg> for Property {
    fn from(p: PropertyArg) -> Self {
        match p {
            PropertyArg::Wlp => Property::Wlp,
            PropertyArg::Slp => Property::Slp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Triplet,
    Md,
}

#[derive(Args)]
struct ComputeArgs {
    /// rational, or gfp=P for an odd prime P < 2^32.
    #[arg(long, default_value = "rational", value_parser = parse_field)]
    field: FieldSpec,
    /// Decide every map by elimination.
    #[arg(long)]
    no_shortcuts: bool,
    /// Do not reduce cones to their links.
    #[arg(long)]
    no_cone: bool,
}

impl ComputeArgs {
    fn options(&self) -> LefschetzOptions {
        LefschetzOptions {
            field: self.field,
            shortcuts: !self.no_shortcuts,
            cone_reduction: !self.no_cone,
            ..Default::default()
        }
    }
}

#[derive(Args)]
struct CacheArgs {
    /// Cache directory; defaults to $VDW_CACHE_DIR.
    #[arg(long, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    #[arg(long)]
    no_cache: bool,
}

impl CacheArgs {
    fn open(&self) -> Result<Option<RunCache>> {
        if self.no_cache {
            return Ok(None);
        }
        match &self.cache_dir {
            Some(d) => Ok(Some(RunCache::new(d)?)),
            None => Ok(RunCache::from_env()?),
        }
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: vdw_core::Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("{s:?} is not of the form A..B"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u32 = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: u32 = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

fn params(n: u32, k: u32) -> Result<VdwParams> {
    VdwParams::new(n, k).map_err(|e| CliError::Usage(e.to_string()))
}

fn print(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
    if !s.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

#[derive(Serialize)]
struct NoMeta {}

fn check_text(report: &LefschetzReport) -> String {
    let mut out = format!(
        "{} {} over {}: {}\n\n",
        report.params,
        report.mode.to_string().to_uppercase(),
        report.field,
        if report.verdict { "holds" } else { "fails" }
    );
    out.push_str("| i | d | dim A_i | dim A_i+d | rank | maximal | how |\n|---|---|---|---|---|---|---|\n");
    for m in &report.per_map {
        let how = match (m.shortcut, m.certification) {
            (Some(s), _) => serde_json::to_value(s).unwrap().as_str().unwrap_or_default().to_string(),
            (None, Some(c)) => serde_json::to_value(c).unwrap().as_str().unwrap_or_default().to_string(),
            (None, None) => String::new(),
        };
        let how = match m.rank_mod_p {
            Some(r) if r != m.rank => format!("{how}, rank {r} at filter prime"),
            _ => how,
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} |\n",
            m.from_degree,
            m.power,
            m.source_dim,
            m.target_dim,
            m.rank,
            if m.maximal { "yes" } else { "no" },
            how
        ));
    }
    if let Some(f) = report.first_failure() {
        out.push_str(&format!(
            "\nfirst failure: x l^{} from degree {}: rank {} < {}\n",
            f.power,
            f.from_degree,
            f.rank,
            f.expected_rank()
        ));
    }
    if let Some(c) = &report.certificate {
        let side = match c.side {
            vdw_core::lefschetz::KernelSide::Right => "M v = 0",
            vdw_core::lefschetz::KernelSide::Left => "v^T M = 0",
        };
        out.push_str(&format!("certificate ({side}, verified: {}):\n", c.verified));
        for (b, v) in c.basis.iter().zip(&c.vector) {
            if v.to_string() != "0" {
                out.push_str(&format!("  {b}: {v}\n"));
            }
        }
    }
    out
}

fn write_matrix(path: &PathBuf, n: u32, k: u32, degree: usize, power: usize) -> Result<()> {
    let c = build_vdw(params(n, k)?);
    let m = GradedBasis::for_degrees(&c, &[degree, degree + power]).mult_matrix(degree, power)?;
    let mut f = fs::File::create(path)?;
    m.write_triplets(&mut f)?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Facets { n, k, format } => {
            let rows = facet_rows(params(n, k)?);
            print(&render_rows(format, "facets", serde_json::json!({ "n": n, "k": k }), &rows));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { n, k, property, compute, certificate, cross_check, format, dump_matrix } => {
            let p = params(n, k)?;
            let opts = LefschetzOptions { certificate, cross_check, ..compute.options() };
            let report = vdw_core::check_vdw(p, property.into(), &opts)?;
            match format {
                CheckFormat::Text => print(&check_text(&report)),
                CheckFormat::Json => print(&report.to_json()),
            }
            if let Some(path) = dump_matrix {
                match report.first_failure() {
                    Some(f) => write_matrix(&path, n, k, f.from_degree, f.power)?,
                    None => eprintln!("no failing map, nothing written to {}", path.display()),
                }
            }
            Ok(if report.verdict { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Table { property, n_max, format, compute, cache } => {
            if n_max < 2 {
                return Err(CliError::Usage("--n-max must be at least 2".into()));
            }
            let cache = cache.open()?;
            let grid = compute_grid(property.into(), n_max, &compute.options(), cache.as_ref())?;
            print(&grid.render(format));
            Ok(ExitCode::SUCCESS)
        }
        Command::Dims { k, n_min, n_max, format } => {
            if n_min <= k || n_min > n_max {
                return Err(CliError::Usage(format!("need k < n-min <= n-max, got k={k} range {n_min}..{n_max}")));
            }
            let rows = dims_rows(k, n_min..=n_max)?;
            print(&render_rows(format, "dims", serde_json::json!({ "k": k }), &rows));
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan { odd_k_max, n_max, format, compute } => {
            if odd_k_max < 3 || odd_k_max % 2 == 0 {
                return Err(CliError::Usage(format!("--odd-k-max must be odd and >= 3, got {odd_k_max}")));
            }
            let rows = scan_rows(odd_k_max, n_max, &compute.options())?;
            print(&render_rows(format, "scan", serde_json::json!({ "n_max": n_max }), &rows));
            Ok(if rows.iter().all(|r| r.agrees) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Pm { n_max, format } => {
            if n_max < 2 {
                return Err(CliError::Usage("--n-max must be at least 2".into()));
            }
            let rows = pm_rows(n_max);
            print(&render_rows(format, "pm", serde_json::json!({ "n_max": n_max }), &rows));
            Ok(if rows.iter().all(|r| r.matches) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Audit { appendix: _, unsafe_range, format } => {
            let rows = audit_rows(unsafe_range);
            print(&render_rows(format, "audit", NoMeta {}, &rows));
            Ok(if audit_failed(&rows) { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Matrix { n, k, degree, power, format, dump_matrix } => {
            if power == 0 {
                return Err(CliError::Usage("--power must be positive".into()));
            }
            let c = build_vdw(params(n, k)?);
            let basis = GradedBasis::for_degrees(&c, &[degree, degree + power]);
            let m = basis.mult_matrix(degree, power)?;
            match dump_matrix {
                Some(path) => {
                    let mut f = fs::File::create(&path)?;
                    m.write_triplets(&mut f)?;
                }
                None => match format {
                    MatrixFormat::Triplet => print(&m.to_triplet_string()),
                    MatrixFormat::Md => print(&m.to_markdown(&basis)),
                },
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
