//! Command-line front end for the `aalie` library.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use aalie::maps::{self, closed, MapKind};
use aalie::structure::{self, classify_subspace, decompose, quotient_by_ideal, series_and_flags};
use aalie::uea::uea_center_basis;
use aalie::{Algebra, Error, Quotient, Subspace};
use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

pub mod render;
pub mod schema;

use schema::{matrix_strings, scalar_string, vector_strings, AlgebraSpec, MapSpec, SubspaceSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONTRACT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "aalie",
    version,
    about = "Exact analysis of almost Abelian Lie algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Seed for witness sampling.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Hom,
    Aut,
    Lo,
    Der,
}

impl From<KindArg> for MapKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Hom => MapKind::Hom,
            KindArg::Aut => MapKind::Aut,
            KindArg::Lo => MapKind::Lo,
            KindArg::Der => MapKind::Der,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structure report: center, series, flags and core type.
    Analyze {
        algebra: PathBuf,
        /// Ideal file `{"basis": [...]}`; reports its class and the quotient.
        #[arg(long)]
        ideal: Option<PathBuf>,
    },
    /// Split off the central summand.
    Decompose { algebra: PathBuf },
    /// Decide isomorphism and produce a witness.
    Isomorphic { a: PathBuf, b: PathBuf },
    /// Derivation space and inner derivations.
    Derivations { algebra: PathBuf },
    /// Center of the universal enveloping algebra, degree by degree.
    UeaCenter {
        algebra: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
    },
    /// Test a map for membership in Hom, Aut, LO or Der.
    CheckMap {
        algebra: PathBuf,
        map: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Target algebra for `--kind hom`; defaults to the source.
        #[arg(long)]
        target: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Contract(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Contract(_) => EXIT_CONTRACT,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Contract(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ParseScalar(_) | Error::NotPrime(_) => CliError::Parse(e.to_string()),
            other => CliError::Contract(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> CliResult<Algebra> {
    Ok(read_json::<AlgebraSpec>(path)?.to_algebra()?)
}

#[derive(Serialize)]
pub struct SubspaceReport {
    pub dim: usize,
    pub basis: Vec<Vec<String>>,
}

impl From<&Subspace> for SubspaceReport {
    fn from(s: &Subspace) -> Self {
        SubspaceReport {
            dim: s.dim(),
            basis: s.basis().iter().map(|v| vector_strings(v)).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct CoreReport {
    pub spec: AlgebraSpec,
    pub w_dim: usize,
}

#[derive(Serialize)]
pub struct QuotientReport {
    pub kind: &'static str,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<AlgebraSpec>,
}

#[derive(Serialize)]
pub struct IdealReport {
    pub class: String,
    pub clause: &'static str,
    pub quotient: QuotientReport,
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub command: &'static str,
    pub algebra: AlgebraSpec,
    pub dim: usize,
    pub center: SubspaceReport,
    pub derived_algebra: SubspaceReport,
    pub derived_series_dims: Vec<usize>,
    pub lower_central_dims: Vec<usize>,
    pub nilpotent: bool,
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
    pub nilradical_is_whole: bool,
    pub indecomposable: bool,
    pub core_kind: String,
    pub central_extension_dim: usize,
    pub codim1_abelian_ideal_unique: bool,
    pub clause: &'static str,
    pub core: CoreReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealReport>,
}

#[derive(Serialize)]
pub struct DecomposeReport {
    pub command: &'static str,
    pub core: AlgebraSpec,
    pub core_kind: String,
    pub w_dim: usize,
    pub change_of_basis: Vec<Vec<String>>,
    pub new_basis: Vec<Vec<String>>,
}

#[derive(Serialize)]
pub struct IsomorphicReport {
    pub command: &'static str,
    pub isomorphic: bool,
    pub lambda: Option<String>,
    pub relation: &'static str,
    pub witness: Option<Vec<Vec<String>>>,
    pub seed: u64,
}

#[derive(Serialize)]
pub struct DerivationsReport {
    pub command: &'static str,
    pub dim: usize,
    pub inner_dim: usize,
    pub outer_exist: bool,
    pub clause: &'static str,
    pub basis: Vec<Vec<Vec<String>>>,
    pub inner_basis: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize)]
pub struct CenterDegreeReport {
    pub degree: u32,
    pub dim: usize,
    pub basis: Vec<String>,
}

#[derive(Serialize)]
pub struct UeaCenterReport {
    pub command: &'static str,
    pub max_degree: u32,
    pub degrees: Vec<CenterDegreeReport>,
}

#[derive(Serialize)]
pub struct CheckMapReport {
    pub command: &'static str,
    pub kind: String,
    pub holds: bool,
    pub clause: &'static str,
}

fn analyze(l: &Algebra, ideal: Option<&Path>) -> CliResult<AnalyzeReport> {
    let r = series_and_flags(l);
    let dec = decompose(l);
    let clause = match (r.indecomposable, r.core_kind) {
        (false, _) => "decomposable/kernel-not-in-image",
        (true, aalie::CoreKind::AxB) => "indecomposable/rank-one-not-central",
        (true, aalie::CoreKind::Heisenberg) => "indecomposable/rank-one-central",
        (true, aalie::CoreKind::Other) => "indecomposable/kernel-in-image",
    };
    let ideal = match ideal {
        None => None,
        Some(path) => {
            let s = read_json::<SubspaceSpec>(path)?.to_subspace(l.field(), l.dim())?;
            let class = classify_subspace(l, &s)?;
            if !class.is_ideal() {
                return Err(Error::NotAnIdeal.into());
            }
            let quotient = match quotient_by_ideal(l, &s)? {
                Quotient::Abelian(d) => QuotientReport {
                    kind: "abelian",
                    dim: d,
                    spec: None,
                },
                Quotient::AlmostAbelian(q) => QuotientReport {
                    kind: "almost-abelian",
                    dim: q.dim(),
                    spec: Some(AlgebraSpec::from_algebra(&q)),
                },
            };
            Some(IdealReport {
                class: class.to_string(),
                clause: class.clause(),
                quotient,
            })
        }
    };
    Ok(AnalyzeReport {
        command: "analyze",
        algebra: AlgebraSpec::from_algebra(l),
        dim: l.dim(),
        center: (&r.center).into(),
        derived_algebra: (&r.derived[0]).into(),
        derived_series_dims: r.derived.iter().map(Subspace::dim).collect(),
        lower_central_dims: r.lower_central.iter().map(Subspace::dim).collect(),
        nilpotent: r.nilpotent,
        nilpotency_class: r.nilpotency_class,
        solvable: r.solvable,
        nilradical_is_whole: r.nilradical_is_whole,
        indecomposable: r.indecomposable,
        core_kind: r.core_kind.to_string(),
        central_extension_dim: r.central_extension_dim,
        codim1_abelian_ideal_unique: structure::codim1_abelian_ideal_unique(l),
        clause,
        core: CoreReport {
            spec: AlgebraSpec::from_algebra(&dec.core),
            w_dim: dec.w_dim,
        },
        ideal,
    })
}

fn decompose_report(l: &Algebra) -> CliResult<DecomposeReport> {
    let dec = decompose(l);
    Ok(DecomposeReport {
        command: "decompose",
        core: AlgebraSpec::from_algebra(&dec.core),
        core_kind: structure::recognize_core(&dec.core)?.to_string(),
        w_dim: dec.w_dim,
        change_of_basis: matrix_strings(&dec.change_of_basis),
        new_basis: matrix_strings(&dec.new_basis),
    })
}

fn isomorphic_report(a: &Algebra, b: &Algebra, seed: u64) -> CliResult<IsomorphicReport> {
    let found = maps::isomorphic(a, b, seed)?;
    Ok(IsomorphicReport {
        command: "isomorphic",
        isomorphic: found.is_some(),
        lambda: found.as_ref().map(|i| scalar_string(&i.lambda)),
        relation: "ad_A ~ lambda * ad_B",
        witness: found
            .and_then(|i| i.witness)
            .map(|w| matrix_strings(&w.to_matrix())),
        seed,
    })
}

fn derivations_report(l: &Algebra) -> CliResult<DerivationsReport> {
    let der = maps::derivation_space(l)?;
    let inner = maps::inner_derivations(l)?;
    let mats = |ms: Vec<aalie::Matrix>| ms.iter().map(matrix_strings).collect();
    Ok(DerivationsReport {
        command: "derivations",
        dim: der.dim(),
        inner_dim: inner.space.dim(),
        outer_exist: inner.outer_exist,
        clause: closed::clause(l, MapKind::Der),
        basis: mats(der.matrices()),
        inner_basis: mats(inner.space.matrices()),
    })
}

fn uea_center_report(l: &Algebra, max_degree: u32) -> UeaCenterReport {
    let degrees = uea_center_basis(l, max_degree)
        .into_iter()
        .map(|d| CenterDegreeReport {
            degree: d.degree,
            dim: d.basis.len(),
            basis: d.basis.iter().map(ToString::to_string).collect(),
        })
        .collect();
    UeaCenterReport {
        command: "uea-center",
        max_degree,
        degrees,
    }
}

fn check_map_report(
    l: &Algebra,
    target: Option<&Algebra>,
    kind: MapKind,
    map: &MapSpec,
) -> CliResult<CheckMapReport> {
    if target.is_some_and(|t| t.field() != l.field()) {
        return Err(Error::FieldMismatch.into());
    }
    let phi = map.to_block(l.field())?;
    let holds = maps::check_map(l, target, kind, &phi)?;
    Ok(CheckMapReport {
        command: "check-map",
        kind: kind.to_string(),
        holds,
        clause: closed::clause(l, kind),
    })
}

fn emit<T: Serialize>(report: &T, format: Format, out: &mut dyn Write) -> CliResult<()> {
    let value = serde_json::to_value(report).map_err(|e| CliError::Contract(e.to_string()))?;
    let text = match format {
        Format::Json => {
            serde_json::to_string_pretty(&value).map_err(|e| CliError::Contract(e.to_string()))?
        }
        Format::Text => render::text(&value),
    };
    writeln!(out, "{text}").map_err(|e| CliError::Contract(e.to_string()))
}

/// Executes a parsed command, writing the report to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Analyze { algebra, ideal } => {
            let l = load_algebra(algebra)?;
            emit(&analyze(&l, ideal.as_deref())?, cli.format, out)
        }
        Command::Decompose { algebra } => {
            emit(&decompose_report(&load_algebra(algebra)?)?, cli.format, out)
        }
        Command::Isomorphic { a, b } => {
            let (a, b) = (load_algebra(a)?, load_algebra(b)?);
            emit(&isomorphic_report(&a, &b, cli.seed)?, cli.format, out)
        }
        Command::Derivations { algebra } => emit(
            &derivations_report(&load_algebra(algebra)?)?,
            cli.format,
            out,
        ),
        Command::UeaCenter {
            algebra,
            max_degree,
        } => emit(
            &uea_center_report(&load_algebra(algebra)?, *max_degree),
            cli.format,
            out,
        ),
        Command::CheckMap {
            algebra,
            map,
            kind,
            target,
        } => {
            let l = load_algebra(algebra)?;
            let target = target.as_deref().map(load_algebra).transpose()?;
            let map: MapSpec = read_json(map)?;
            emit(
                &check_map_report(&l, target.as_ref(), (*kind).into(), &map)?,
                cli.format,
                out,
            )
        }
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
