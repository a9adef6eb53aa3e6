mod cache;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotforge::annulus::{annulus_twist, presentation_63, AnnulusError, AnnulusFile, AnnulusPresentation, FAMILY_NAME};
use knotforge::diagram::{KnotFile, PlanarDiagram};
use knotforge::invariants::{alexander, jones, InvariantReport};
use knotforge::laurent::is_irreducible;
use knotforge::obstruction::{
    dichotomy_report_with, fox_milnor_verdict, miyazaki_verdict, DichotomyOptions, Distinctness, FiberedSource,
    KnotCertificate, ObstructionError, Verdict,
};
use knotforge::openbook::{d3, family_surgery_description, OpenBookError, SurgeryDescription};
use num_traits::ToPrimitive;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use cache::Cache;

#[derive(Parser)]
#[command(name = "knotforge", version, about = "Exact knot invariants, annulus twists and ribbon obstructions")]
struct Cli {
    /// Do not read or write the invariant cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// On a cache hit, recompute and fail if the stored report differs.
    #[arg(long, global = true)]
    verify_cache: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Jones, Alexander and determinant of a knot file.
    Invariants(InvariantsArgs),
    /// Annulus twist of an annulus presentation (default: the built-in 6_3).
    Twist {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Name written into the output knot file.
        #[arg(long)]
        name: Option<String>,
    },
    /// Print the built-in 6_3 annulus presentation file.
    Annulus,
    /// Fox-Milnor and Miyazaki verdicts for K0 # -K1.
    RibbonCheck {
        #[arg(long)]
        k0: PathBuf,
        #[arg(long)]
        k1: PathBuf,
        #[arg(long, value_enum)]
        fibered0: Option<Fibered>,
        #[arg(long, value_enum)]
        fibered1: Option<Fibered>,
    },
    /// d3 of a contact surgery description, as an exact fraction.
    D3 {
        #[arg(long, allow_negative_numbers = true, conflicts_with = "input", required_unless_present = "input")]
        family_n: Option<i64>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// The not-ribbon / shared 0-surgery report for K_n and K_m.
    #[command(allow_negative_numbers = true)]
    Dichotomy {
        n: i64,
        m: i64,
        /// Compute Jones polynomials only up to this many crossings (0: never).
        #[arg(long, default_value_t = DichotomyOptions::default().jones_crossing_limit)]
        jones_limit: usize,
    },
}

#[derive(Args)]
struct InvariantsArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    jones: bool,
    #[arg(long)]
    alexander: bool,
    #[arg(long)]
    determinant: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fibered {
    Asserted,
    #[value(name = "inherited-via-0-surgery")]
    Inherited,
}

impl From<Fibered> for FiberedSource {
    fn from(f: Fibered) -> Self {
        match f {
            Fibered::Asserted => FiberedSource::Asserted,
            Fibered::Inherited => FiberedSource::InheritedVia0Surgery,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Inapplicable(String),
    #[error("cache check failed: {0}")]
    Cache(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Inapplicable(_) => 3,
            CliError::Cache(_) => 1,
        }
    }
}

impl From<AnnulusError> for CliError {
    fn from(e: AnnulusError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<OpenBookError> for CliError {
    fn from(e: OpenBookError) -> Self {
        match e {
            OpenBookError::Singular => CliError::Inapplicable(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ObstructionError> for CliError {
    fn from(e: ObstructionError) -> Self {
        match e {
            ObstructionError::SameKnot { .. } => CliError::Inapplicable(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<(String, String), CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let digest = hex::encode(Sha256::digest(text.as_bytes()));
    Ok((text, digest))
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_knot(path: &Path) -> Result<(KnotFile, PlanarDiagram, String), CliError> {
    let (text, digest) = read(path)?;
    let file: KnotFile = parse(path, &text)?;
    let d = file.diagram().map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok((file, d, digest))
}

/// Canonical JSON: keys sorted, one line. A closed pipe is not an error.
fn emit<T: Serialize>(v: &T) {
    let value = serde_json::to_value(v).expect("output serializes");
    let _ = writeln!(std::io::stdout(), "{value}");
}

struct Want {
    jones: bool,
    alexander: bool,
    determinant: bool,
}

#[derive(Serialize)]
struct CacheInput<'a> {
    knot: &'a KnotFile,
    jones: bool,
    alexander: bool,
    determinant: bool,
}

fn compute(name: &str, d: &PlanarDiagram, w: &Want) -> InvariantReport {
    let a = (w.alexander || w.determinant).then(|| alexander(d));
    InvariantReport {
        knot: name.to_string(),
        jones: w.jones.then(|| jones(d)),
        determinant: w.determinant.then(|| a.as_ref().unwrap().determinant().to_u64().expect("determinant fits")),
        alexander: if w.alexander { a } else { None },
        writhe: d.writhe(),
    }
}

struct Ctx {
    cache: Option<Cache>,
    verify: bool,
}

impl Ctx {
    fn invariants(&self, file: &KnotFile, d: &PlanarDiagram, w: &Want) -> Result<InvariantReport, CliError> {
        let Some(cache) = &self.cache else {
            return Ok(compute(&file.name, d, w));
        };
        let key = cache::key_for(&CacheInput { knot: file, jones: w.jones, alexander: w.alexander, determinant: w.determinant });
        if let Some(hit) = cache.get(&key) {
            if self.verify {
                let fresh = compute(&file.name, d, w);
                if fresh != hit {
                    return Err(CliError::Cache(format!("entry {key} differs from recomputation")));
                }
            }
            return Ok(hit);
        }
        let r = compute(&file.name, d, w);
        if let Err(e) = cache.put(&key, &r) {
            eprintln!("warning: could not write cache entry: {e}");
        }
        Ok(r)
    }
}

#[derive(Serialize)]
struct InputRef {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct RibbonReport {
    inputs: Vec<InputRef>,
    certificates: Vec<KnotCertificate>,
    composite: String,
    fox_milnor: Verdict,
    not_ribbon: Verdict,
}

fn certificate(ctx: &Ctx, path: &Path, fibered: Option<Fibered>) -> Result<(KnotCertificate, InputRef), CliError> {
    let (file, d, digest) = read_knot(path)?;
    let r = ctx.invariants(&file, &d, &Want { jones: true, alexander: true, determinant: false })?;
    let a = r.alexander.expect("requested");
    let c = KnotCertificate {
        name: file.name,
        alexander_irreducible: is_irreducible(a.poly()).unwrap_or(false),
        alexander: a,
        jones: r.jones,
        fibered: fibered.map(Into::into),
        distinctness: None,
    };
    Ok((c, InputRef { path: path.display().to_string(), sha256: digest }))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let ctx = Ctx { cache: if cli.no_cache { None } else { Cache::from_env() }, verify: cli.verify_cache };
    match cli.cmd {
        Cmd::Invariants(a) => {
            let (file, d, _) = read_knot(&a.input)?;
            let all = !(a.jones || a.alexander || a.determinant);
            let w = Want { jones: all || a.jones, alexander: all || a.alexander, determinant: all || a.determinant };
            emit(&ctx.invariants(&file, &d, &w)?);
        }
        Cmd::Twist { input, n, name } => {
            let (ap, base) = match &input {
                Some(p) => {
                    let (text, _) = read(p)?;
                    let f: AnnulusFile = parse(p, &text)?;
                    let name = f.knot.name.clone();
                    (AnnulusPresentation::from_file(&f)?, name)
                }
                None => (presentation_63(), FAMILY_NAME.to_string()),
            };
            let d = annulus_twist(&ap, n)?;
            let name = name.unwrap_or_else(|| if n == 0 { base } else { format!("A^{n}({base})") });
            emit(&KnotFile::new(name, &d));
        }
        Cmd::Annulus => emit(&presentation_63().to_file(FAMILY_NAME)),
        Cmd::RibbonCheck { k0, k1, fibered0, fibered1 } => {
            let (mut c0, r0) = certificate(&ctx, &k0, fibered0)?;
            let (c1, r1) = certificate(&ctx, &k1, fibered1)?;
            if matches!((&c0.jones, &c1.jones), (Some(x), Some(y)) if x != y) {
                c0.distinctness = Some(Distinctness::JonesMismatch);
            }
            let composite = KnotCertificate::composite(&c0, &c1);
            emit(&RibbonReport {
                inputs: vec![r0, r1],
                fox_milnor: fox_milnor_verdict(&composite),
                not_ribbon: miyazaki_verdict(&c0, &c1),
                composite: composite.name,
                certificates: vec![c0, c1],
            });
        }
        Cmd::D3 { family_n, input } => {
            let desc = match (family_n, input) {
                (Some(n), _) => family_surgery_description(n)?,
                (None, Some(p)) => {
                    let (text, _) = read(&p)?;
                    parse::<SurgeryDescription>(&p, &text)?
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let _ = writeln!(std::io::stdout(), "{}", d3(&desc)?);
        }
        Cmd::Dichotomy { n, m, jones_limit } => {
            emit(&dichotomy_report_with(n, m, DichotomyOptions { jones_crossing_limit: jones_limit })?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
