mod render;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use pretors_core::algebra::AlgebraError;
use pretors_core::format::{FormatError, QuiverFile};
use pretors_core::indec::{IndecCatalog, IndecError};
use pretors_core::lattice::order_ideal_lattice;
use pretors_core::pretorsion::{PretorsionContext, PretorsionError};
use serde::Serialize;

use report::{ClassifyReport, IndecsReport, LatticeKind, LatticeReport, TheoriesReport};

#[derive(Parser)]
#[command(name = "pretors", version, about = "Lattices of pretorsion classes of monomial algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// String-algebra status, bands, and the distributivity and LRD criteria.
    Classify(Common),
    /// Build a lattice and report its elements and properties.
    Lattice {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "pretorsion")]
        kind: LatticeKind,
        /// Write the Hasse diagram in DOT format.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Enumerate and verify all pretorsion theories.
    Theories {
        #[command(flatten)]
        common: Common,
        /// Run the definitional check on every pair as well.
        #[arg(long)]
        audit: bool,
    },
    /// List the indecomposable modules.
    Indecs(Common),
}

#[derive(Args)]
struct Common {
    /// Quiver file (TOML).
    file: PathBuf,
    /// Write the report as JSON; `-` prints it instead of the text report.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// `q` or `gf`.
    #[arg(long)]
    field: Option<String>,
    #[arg(long)]
    prime: Option<u32>,
    /// Per-vertex dimension bound for brute-force enumeration.
    #[arg(long)]
    dim_bound: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Infinite(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Infinite(_) => 3,
            Failure::Internal(_) => 4,
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<IndecError> for Failure {
    fn from(e: IndecError) -> Self {
        match e {
            IndecError::Algebra(AlgebraError::BandPresent(b)) => Failure::Infinite(format!(
                "representation-infinite: band {b}; lattices are only built for finite representation type"
            )),
            IndecError::DimBoundReached { .. } => Failure::Infinite(format!(
                "{e}; the algebra looks representation-infinite (raise --dim-bound or change --prime to probe further)"
            )),
            IndecError::Incomplete { .. } => Failure::Infinite(format!(
                "{e}; the algebra may be representation-infinite (raise --dim-bound to probe further)"
            )),
            IndecError::SearchSpaceTooLarge { .. } | IndecError::EndResidueTooLarge { .. } => {
                Failure::Infinite(format!("{e}; try a smaller --dim-bound"))
            }
            IndecError::NeedsPrimeField => Failure::Input(e.to_string()),
            IndecError::Algebra(_) => Failure::Input(e.to_string()),
            IndecError::Module(_) => Failure::Internal(e.to_string()),
        }
    }
}

impl From<PretorsionError> for Failure {
    fn from(e: PretorsionError) -> Self {
        match e {
            PretorsionError::TooManyIndecomposables(_) => Failure::Infinite(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<pretors_core::module::ModuleError> for Failure {
    fn from(e: pretors_core::module::ModuleError) -> Self {
        Failure::Internal(e.to_string())
    }
}

struct Loaded {
    file: QuiverFile,
    catalog: IndecCatalog,
}

fn load(c: &Common) -> Result<Loaded, Failure> {
    let file = QuiverFile::load(&c.file)?;
    let options = file.catalog_options(c.field.as_deref(), c.prime, c.dim_bound)?;
    let algebra = Arc::new(file.to_algebra()?);
    let catalog = IndecCatalog::build(algebra, &options)?;
    Ok(Loaded { file, catalog })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Prints the text report, or the JSON when `--json -` is given, and writes
/// the JSON file otherwise requested.
fn emit<T: Serialize>(c: &Common, report: &T, text: String) -> Result<(), Failure> {
    let json = serde_json::to_string_pretty(report).map_err(|e| Failure::Internal(e.to_string()))? + "\n";
    match &c.json {
        Some(p) if p.as_os_str() == "-" => print!("{json}"),
        Some(p) => {
            write_file(p, &json)?;
            print!("{text}");
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify(c) => {
            let file = QuiverFile::load(&c.file)?;
            let alg = file.to_algebra()?;
            let r = ClassifyReport::new(&file.name, alg.classify());
            emit(&c, &r, render::classify_text(&r))
        }
        Command::Indecs(c) => {
            let l = load(&c)?;
            let r = IndecsReport::new(&l.file.name, &l.catalog)?;
            emit(&c, &r, render::indecs_text(&r))
        }
        Command::Lattice { common, kind, dot } => {
            let l = load(&common)?;
            let name = l.file.name.clone();
            let ctx = PretorsionContext::new(l.catalog)?;
            let labels = ctx.catalog().labels();
            let dims: Vec<usize> = (0..ctx.len()).map(|i| ctx.module(i).total_dim()).collect();
            let r = match kind {
                LatticeKind::Pretorsion => LatticeReport::new(&name, kind, &ctx.pretorsion_lattice()?, &labels, &dims),
                LatticeKind::Pretorsionfree => {
                    LatticeReport::new(&name, kind, &ctx.pretorsionfree_lattice()?, &labels, &dims)
                }
                LatticeKind::Torsion => LatticeReport::new(&name, kind, &ctx.torsion_lattice()?, &labels, &dims),
                LatticeKind::BirkhoffOfTors => {
                    let poset = ctx.torsion_lattice()?.join_irreducibles();
                    let ideals = order_ideal_lattice(&poset);
                    LatticeReport::new(&name, kind, &ideals, poset.labels(), &vec![1; poset.len()])
                }
            };
            if let Some(p) = &dot {
                write_file(p, &render::lattice_dot(&r))?;
            }
            emit(&common, &r, render::lattice_text(&r))
        }
        Command::Theories { common, audit } => {
            let l = load(&common)?;
            let name = l.file.name.clone();
            let ctx = PretorsionContext::new(l.catalog)?;
            let lt = ctx.pretorsion_lattice()?;
            let ltf = ctx.pretorsionfree_lattice()?;
            let found = ctx.enumerate_pretorsion_theories(&lt, &ltf, audit)?;
            let r = TheoriesReport::new(&name, &ctx, lt.len() * ltf.len(), audit, found);
            emit(&common, &r, render::theories_text(&r))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Input(m) | Failure::Infinite(m) | Failure::Internal(m)) = &f;
            eprintln!("error: {m}");
            ExitCode::from(f.code())
        }
    }
}
