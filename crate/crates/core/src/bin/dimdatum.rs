use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dimdatum::affine::CatalogEntry;
use dimdatum::branch::{theorem_setup, Embedding, GroupDesc, WeightCache};
use dimdatum::charalg::averaged_character;
use dimdatum::lattice::{Weight, WeylSubgroup};
use dimdatum::rational;
use dimdatum::rootsys::RootSystem;
use dimdatum::suites::{self, AffineCheck, AffineParams, Report, RunOptions};
use dimdatum::{Error, Result};

#[derive(Parser)]
#[command(name = "dimdatum", version, about = "Verification suites for tau-dimension data and affine root systems")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Weight-multiplicity cache directory [default: $XDG_CACHE_HOME/dimdatum or ~/.cache/dimdatum]
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores); never changes report content
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for the random-point density checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Record per-check wall time (makes reports nondeterministic)
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Factorization identities a_(2m+1) = c_m d_(m+1) and a_(2m) = b_m b'_m
    Identities {
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 3)]
        max_coeff: i64,
    },
    /// Determinant expansion against the Weyl-sum definition, all five families
    Determinants {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_coeff: i64,
    },
    /// sigma(b_n) against b'_n, literally and with the sign (-1)^(sum a_i)
    Sigma {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_coeff: i64,
    },
    /// Inductive irreducibility certificates for b, b', c, d
    Irreducibility {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_coeff: i64,
    },
    /// Both pipelines of the tau-dimension datum theorem
    Theorem {
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Weight (a1,...,a_(2n+1)), e.g. 1,0,-1
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "40")]
        cutoff: String,
    },
    /// Weyl-averaged character of a weight, as JSON
    Chars {
        /// Root system label, e.g. A2 or C1+D2
        #[arg(long)]
        label: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Averaging group: BC<r> (signed permutations of r coordinates)
        #[arg(long)]
        group: String,
    },
    /// Laplace spectrum of a homogeneous vector bundle G x_H V_tau
    Spectrum {
        #[arg(long)]
        group: String,
        /// H1, H2, torus or G
        #[arg(long)]
        subgroup: String,
        /// Highest weight of tau on H [default: trivial]
        #[arg(long, allow_hyphen_values = true, conflicts_with = "lambda")]
        tau: Option<String>,
        /// Use tau_lambda (on H1) or tau'_lambda (on H2) from the theorem setup
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        cutoff: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare two spectrum files
    Compare { a: PathBuf, b: PathBuf },
    /// Checks on a catalog affine root system
    Affine {
        /// Catalog selector, e.g. m*Phi0:Phi0@m=2,Phi0=A1
        selector: String,
        /// Comma-separated subset of validate,density,integration
        #[arg(long, default_value = "validate,density,integration")]
        checks: String,
        #[arg(long, default_value_t = 100)]
        points: usize,
        /// Largest SU(2) irreducible dimension for the integration check
        #[arg(long, default_value_t = 5)]
        max_dim: usize,
        /// Quadrature nodes N
        #[arg(long, default_value_t = 512)]
        quadrature: usize,
        /// Also write the sampled density values to this file
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Manage the weight-multiplicity cache
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Clear,
    Stats,
}

fn default_cache_dir() -> PathBuf {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("dimdatum")
}

/// Write to stdout, tolerating a closed pipe.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit(report: &Report, format: Format) -> ExitCode {
    match format {
        Format::Json => out(&report.to_json()),
        Format::Text => out(&report.to_text()),
    }
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn weight(s: &str) -> Result<Weight> {
    s.parse()
}

fn run(cli: Cli) -> Result<ExitCode> {
    let g = &cli.global;
    if let Some(j) = g.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .map_err(|e| Error::Unsupported(e.to_string()))?;
    }
    let cache = WeightCache::on_disk(g.cache_dir.clone().unwrap_or_else(default_cache_dir));
    let opts = RunOptions { timings: g.timings };
    let report = match cli.command {
        Command::Identities { max_m, max_coeff } => suites::run_identities(max_m, max_coeff, opts),
        Command::Determinants { max_n, max_coeff } => suites::run_determinants(max_n, max_coeff, opts),
        Command::Sigma { max_n, max_coeff } => suites::run_sigma(max_n, max_coeff, opts),
        Command::Irreducibility { max_n, max_coeff } => suites::run_irreducibility(max_n, max_coeff, opts),
        Command::Theorem { n, lambda, cutoff } => {
            suites::run_theorem(n, &weight(&lambda)?, &rational::parse(&cutoff)?, &cache, opts)?
        }
        Command::Chars { label, weight: w, group } => {
            let rank: usize = group
                .strip_prefix("BC")
                .and_then(|r| r.parse().ok())
                .ok_or_else(|| Error::Unsupported(format!("averaging group `{group}`; use BC<r>")))?;
            let phi = RootSystem::parse_label(&label, Some(rank))?;
            let ch = averaged_character(&phi, &weight(&w)?, &WeylSubgroup::hyperoctahedral(rank))?;
            let doc = serde_json::json!({
                "schema_version": suites::SCHEMA_VERSION,
                "label": label,
                "weight": w,
                "group": group,
                "character": ch,
            });
            out(&(serde_json::to_string_pretty(&doc)? + "\n"));
            return Ok(ExitCode::SUCCESS);
        }
        Command::Spectrum { group, subgroup, tau, lambda, cutoff, out } => {
            let gd: GroupDesc = group.parse()?;
            let cutoff = rational::parse(&cutoff)?;
            let tau_hw = match (tau, lambda) {
                (Some(t), _) => weight(&t)?,
                (None, Some(l)) => {
                    let emb = Embedding::named(&gd, &subgroup)?;
                    let n = (gd.width() / 2 - 1) / 2;
                    let (_, t1, _, t2) = theorem_setup(n, &weight(&l)?)?;
                    match subgroup.as_str() {
                        "H1" => t1.highest_weight,
                        "H2" => t2.highest_weight,
                        _ => return Err(Error::Unsupported(format!("--lambda needs subgroup H1 or H2, not {}", emb.name))),
                    }
                }
                (None, None) => Weight::zero(Embedding::named(&gd, &subgroup)?.h.width()),
            };
            let (report, spectrum) = suites::run_spectrum(&gd, &subgroup, &tau_hw, &cutoff, &cache, opts)?;
            std::fs::write(&out, spectrum.to_json())?;
            report
        }
        Command::Compare { a, b } => suites::run_compare(&std::fs::read_to_string(a)?, &std::fs::read_to_string(b)?)?,
        Command::Affine { selector, checks, points, max_dim, quadrature, dump } => {
            let entry: CatalogEntry = selector.parse()?;
            let checks = checks
                .split(',')
                .map(|c| c.trim().parse::<AffineCheck>())
                .collect::<Result<Vec<_>>>()?;
            let params = AffineParams { checks, points, seed: g.seed, max_dim, quadrature };
            if let Some(path) = dump {
                let r = entry.build()?;
                let (rows, _) = dimdatum::affine::density_samples(&r, points, g.seed, 1)?;
                let doc = serde_json::json!({ "schema_version": suites::SCHEMA_VERSION, "selector": selector, "rows": rows });
                std::fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")?;
            }
            suites::run_affine(&entry, &params, opts)?
        }
        Command::Cache { action } => {
            let doc = match action {
                CacheAction::Clear => serde_json::json!({ "schema_version": suites::SCHEMA_VERSION, "removed": cache.clear()? }),
                CacheAction::Stats => {
                    let s = cache.stats()?;
                    serde_json::json!({
                        "schema_version": suites::SCHEMA_VERSION,
                        "dir": cache.dir().map(|d| d.display().to_string()),
                        "entries": s.entries,
                        "bytes": s.bytes,
                    })
                }
            };
            out(&(serde_json::to_string_pretty(&doc)? + "\n"));
            return Ok(ExitCode::SUCCESS);
        }
    };
    Ok(emit(&report, g.format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
