//! The `qk` command line.
//!
//! Exit codes: 0 on success or a passing check, 1 when a check fails (the
//! witness is in the report), 2 on bad input.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use qk_core::corpus;
use qk_core::dual::{double_dual_check, dual_presentation};
use qk_core::format::{parse_presentation, serialize_presentation, to_canonical_json, Grading};
use qk_core::group::is_homogeneous_grading;
use qk_core::koszul::{generation_check, hilbert_euler_check, is_koszul_to, koszul_duality_dim_check, theorem_covering_check};
use qk_core::resolution::minimal_resolution;
use qk_core::smash::{compare_smash_radical, smash_product, verify_smash_covering_iso, IsoCheck};
use qk_core::{build_covering, AlgebraModel, FiniteGroup, GroupSpec, Presentation, WeightFunction};

pub mod report;

use report::{analysis, Envelope};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] qk_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "qk", version, about = "Exact quiver algebras, coverings and bounded Koszulity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graded dimensions, Hilbert matrix, Betti table, Ext totals and verdicts.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        #[arg(long, default_value_t = 4)]
        max_homological: usize,
        /// Write the report here instead of standard output.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Quadratic dual presentation.
    Dual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Galois covering for a group grading.
    Cover {
        file: PathBuf,
        /// cyclic:N | dihedral:N | product:SPEC,SPEC
        #[arg(long)]
        group: String,
        /// Arrow weights, e.g. `a1=s,a2=c`. Defaults to the generator for cyclic groups.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs one check; exits 1 when it fails.
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        #[arg(long, default_value_t = 4)]
        max_homological: usize,
        /// Euler identity cutoff; defaults to the smaller bound.
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Built-in algebras.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
enum CorpusAction {
    List,
    Build {
        name: String,
        args: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    Koszul,
    Generation,
    HilbertEuler,
    CoveringTheorem,
    SmashIso,
    RadicalSmash,
    DualityDims,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Self::Koszul => "koszul",
            Self::Generation => "generation",
            Self::HilbertEuler => "hilbert-euler",
            Self::CoveringTheorem => "covering-theorem",
            Self::SmashIso => "smash-iso",
            Self::RadicalSmash => "radical-smash",
            Self::DualityDims => "duality-dims",
        }
    }
}

/// Runs the CLI with standard output and standard error.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    run_with(argv, &mut out, &mut err)
}

/// Runs the CLI against the given writers and returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    configure_threads();
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn configure_threads() {
    let threads = std::env::var("QK_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0);
    // the global pool can only be set once per process
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
}

fn read_presentation(path: &Path) -> CliResult<(Presentation, Option<Grading>)> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    Ok(parse_presentation(&text)?)
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_owned(),
            source,
        }),
        None => out.write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        }),
    }
}

/// Group and weights from the flags; the document grading is used when it has
/// the same group and no weights are given.
fn grading_from_flags(
    p: &Presentation,
    declared: Option<&Grading>,
    group: &str,
    weights: Option<&str>,
) -> CliResult<(FiniteGroup, WeightFunction)> {
    let spec = GroupSpec::parse(group)?;
    let g = spec.build()?;
    let w = match weights {
        Some(text) => WeightFunction::parse(text, p.quiver(), &g)?,
        None => match (declared, &spec) {
            (Some(d), _) if d.spec == spec => d.weights.clone(),
            (_, GroupSpec::Cyclic(n)) => WeightFunction::constant(p.quiver(), 1 % n),
            _ => return Err(CliError::Usage(format!("--weights is required for group {group}"))),
        },
    };
    let report = is_homogeneous_grading(p, &g, &w);
    if !report.is_homogeneous() {
        return Err(qk_core::Error::Inhomogeneous(report).into());
    }
    Ok((g, w))
}

fn execute(command: Command, out: &mut dyn Write) -> CliResult<i32> {
    let started = Instant::now();
    match command {
        Command::Analyze {
            file,
            max_degree,
            max_homological,
            json,
        } => {
            let (p, grading) = read_presentation(&file)?;
            let report = analysis(&p, grading.as_ref(), max_degree, max_homological)?;
            let text = Envelope::new("analyze", true, report, started).to_json();
            emit(&text, json.as_deref(), out)?;
            Ok(0)
        }
        Command::Dual { file, out: target } => {
            let (p, _) = read_presentation(&file)?;
            let dual = dual_presentation(&p)?;
            emit(&serialize_presentation(&dual, None), target.as_deref(), out)?;
            Ok(0)
        }
        Command::Cover {
            file,
            group,
            weights,
            out: target,
        } => {
            let (p, declared) = read_presentation(&file)?;
            let (g, w) = grading_from_flags(&p, declared.as_ref(), &group, weights.as_deref())?;
            let cover = build_covering(&p, &g, &w)?;
            emit(&serialize_presentation(cover.presentation(), None), target.as_deref(), out)?;
            Ok(0)
        }
        Command::Verify {
            file,
            check,
            max_degree,
            max_homological,
            cutoff,
            group,
            weights,
            json,
        } => {
            let (p, declared) = read_presentation(&file)?;
            let bounds = Bounds {
                max_degree,
                max_homological,
                cutoff,
            };
            let flags = group.as_deref().map(|g| (g, weights.as_deref()));
            let (passed, report) = verify(&p, declared.as_ref(), check, bounds, flags)?;
            let text = Envelope::new(check.name(), passed, report, started).to_json();
            emit(&text, json.as_deref(), out)?;
            Ok(if passed { 0 } else { 1 })
        }
        Command::Corpus { action } => match action {
            CorpusAction::List => {
                let entries: Vec<Value> = corpus::CATALOGUE
                    .iter()
                    .map(|(name, args, about)| json!({ "name": name, "arguments": args, "description": about }))
                    .collect();
                emit(&to_canonical_json(&entries), None, out)?;
                Ok(0)
            }
            CorpusAction::Build { name, args, out: target } => {
                let args: Vec<&str> = args.iter().map(String::as_str).collect();
                let entry = corpus::build(&name, &args)?;
                let text = serialize_presentation(&entry.presentation, entry.grading.as_ref());
                emit(&text, target.as_deref(), out)?;
                Ok(0)
            }
        },
    }
}

#[derive(Clone, Copy, Debug)]
struct Bounds {
    max_degree: usize,
    max_homological: usize,
    cutoff: Option<usize>,
}

#[derive(Serialize)]
struct BoundsDoc {
    max_degree: usize,
    max_homological: usize,
}

fn verify(
    p: &Presentation,
    declared: Option<&Grading>,
    check: Check,
    bounds: Bounds,
    flags: Option<(&str, Option<&str>)>,
) -> CliResult<(bool, Value)> {
    let Bounds {
        max_degree: n,
        max_homological: i_max,
        cutoff,
    } = bounds;
    let bounds_doc = json!(BoundsDoc {
        max_degree: n,
        max_homological: i_max,
    });
    let group_flags = || -> CliResult<(FiniteGroup, WeightFunction)> {
        match flags {
            Some((group, weights)) => grading_from_flags(p, declared, group, weights),
            None => match declared {
                Some(d) => Ok((d.group.clone(), d.weights.clone())),
                None => Err(CliError::Usage(format!("--check {} needs --group", check.name()))),
            },
        }
    };
    let resolve = || -> CliResult<_> {
        let m = AlgebraModel::new(p, n);
        let r = minimal_resolution(&m, i_max, n)?;
        Ok((m, r))
    };
    let (passed, details) = match check {
        Check::Koszul => {
            let (_, r) = resolve()?;
            let verdict = is_koszul_to(&r);
            (verdict.is_koszul_to_bound(), json!({ "verdict": verdict, "ext_totals": r.ext_totals() }))
        }
        Check::Generation => {
            let (_, r) = resolve()?;
            let verdict = generation_check(&r);
            (verdict.passes(), json!({ "generation": verdict, "koszul": is_koszul_to(&r) }))
        }
        Check::HilbertEuler => {
            let (m, r) = resolve()?;
            let c = cutoff.unwrap_or(n.min(i_max));
            let result = hilbert_euler_check(&m, &r, c)?;
            (result.holds(), json!(result))
        }
        Check::CoveringTheorem => {
            let (g, w) = group_flags()?;
            let result = theorem_covering_check(p, &g, &w, i_max, n)?;
            (result.holds(), json!(result))
        }
        Check::SmashIso => {
            let (g, w) = group_flags()?;
            let cover = build_covering(p, &g, &w)?;
            let base = AlgebraModel::new(p, n);
            let cover_model = AlgebraModel::new(cover.presentation(), n);
            let smash = smash_product(&base, &g, &w)?;
            let result = verify_smash_covering_iso(&cover, &cover_model, &base, &smash)?;
            let details = match &result {
                IsoCheck::Isomorphic => json!({ "isomorphic": true, "dim": smash.algebra().dim() }),
                IsoCheck::NotBijective { rank, dim } => json!({ "isomorphic": false, "rank": rank, "dim": dim }),
                IsoCheck::Mismatch { left, right } => json!({ "isomorphic": false, "mismatch": [left, right] }),
            };
            (result.holds(), details)
        }
        Check::RadicalSmash => {
            let (g, w) = group_flags()?;
            let base = AlgebraModel::new(p, n);
            let smash = smash_product(&base, &g, &w)?;
            let c = compare_smash_radical(&smash);
            let details = json!({
                "radical_dim": c.radical_dim,
                "expected_dim": c.expected_dim,
                "radical_in_expected": c.radical_in_expected,
                "expected_in_radical": c.expected_in_radical,
            });
            (c.holds(), details)
        }
        Check::DualityDims => {
            let dual = dual_presentation(p)?;
            let (m, r) = resolve()?;
            let dual_model = AlgebraModel::new(&dual, i_max);
            match koszul_duality_dim_check(&m, &dual_model, &r) {
                Ok(result) => {
                    let double_dual = double_dual_check(p)?;
                    (result.holds() && double_dual, json!({ "duality": result, "double_dual": double_dual }))
                }
                Err(qk_core::Error::NotKoszul(verdict)) => (false, json!({ "not_koszul": verdict })),
                Err(e) => return Err(e.into()),
            }
        }
    };
    Ok((passed, json!({ "bounds": bounds_doc, "passed": passed, "details": details })))
}

pub use report::comparable_section;
