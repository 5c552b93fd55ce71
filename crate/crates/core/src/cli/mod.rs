//! The `cpmackey` command line.
//!
//! Exit codes: 0 success, 1 internal error, 2 user error (bad flags,
//! unreadable or invalid documents, failed preconditions).

pub mod document;
pub mod periodicity;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::abgrp::{AbHom, FgAbGroup, IntegerMatrix};
use crate::error::Error;
use crate::homalg::{
    ext_degrees, resolution_with, tor_degrees, CoverKind, CoverStrategy, ResolutionOptions,
};
use crate::mackey::{
    burnside, complex_representation, fixed_point, orbit, prune, real_representation,
    underlying_free, zero, zero_on_underlying, CpMackeyFunctor,
};
use crate::monoidal::{box_product, internal_hom};
use crate::randgen::{random_mackey_functor, RandomSpec};

use document::{
    parse_matrix, read_functor, read_json, to_json_pretty, HomDocument, MackeyDocument,
    ModuleDocument,
};
use periodicity::{run_periodicity, PeriodicityConfig};

#[derive(Parser, Debug)]
#[command(
    name = "cpmackey",
    version,
    about = "Exact computations with C_p-Mackey functors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a named functor and print its Lewis diagram.
    Make(MakeArgs),
    /// Ext or Tor of two stored functors.
    Compute(ComputeArgs),
    /// Box product of two stored functors.
    Box(PairArgs),
    /// Internal hom of two stored functors.
    Ihom(PairArgs),
    /// The first differentials of a projective resolution.
    Res(ResArgs),
    /// Compare Ext^n with Ext^{n+4} over random pairs.
    Periodicity(PeriodicityArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Zero,
    Burnside,
    UnderlyingFree,
    ZeroOnUnderlying,
    FixedPoint,
    Orbit,
    RealRep,
    ComplexRep,
    Random,
}

#[derive(Args, Debug)]
pub struct MakeArgs {
    #[arg(value_enum)]
    pub kind: Kind,
    #[arg(long)]
    pub prime: u64,
    /// Write the functor as a JSON document.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Name stored in the document.
    #[arg(long)]
    pub name: Option<String>,
    /// Conjugation matrix for fixed-point/orbit, e.g. "0 1; 1 0".
    #[arg(long)]
    pub conj: Option<String>,
    /// Relation matrix of the module (fixed-point/orbit) or group (zero-on-underlying).
    #[arg(long)]
    pub relations: Option<String>,
    /// Module `{conj, relations}` as JSON, instead of --conj/--relations.
    #[arg(long)]
    pub module: Option<PathBuf>,
    /// Cyclic orders for zero-on-underlying, 0 for Z, e.g. "2,0".
    #[arg(long, value_delimiter = ',')]
    pub orders: Option<Vec<i64>>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2)]
    pub max_free: usize,
    #[arg(long, default_value_t = 2)]
    pub max_rel: usize,
    #[arg(long, default_value_t = 9)]
    pub coef_bound: i64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Derived {
    Ext,
    Tor,
    Extcoh,
    Torcoh,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub op: Derived,
    #[arg(long)]
    pub i: usize,
    #[arg(long)]
    pub m: PathBuf,
    #[arg(long)]
    pub n: PathBuf,
    /// Print the minimal presentation of the result.
    #[arg(long)]
    pub prune: bool,
    /// Print only `fixed: ... / underlying: ...` invariant factors.
    #[arg(long)]
    pub invariants: bool,
    /// Write the result as a JSON document.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long)]
    pub m: PathBuf,
    #[arg(long)]
    pub n: PathBuf,
    #[arg(long)]
    pub prune: bool,
    #[arg(long)]
    pub invariants: bool,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverArg {
    Naive,
    Reduced,
}

#[derive(Args, Debug)]
pub struct ResArgs {
    #[arg(long)]
    pub m: PathBuf,
    /// Number of differentials after the augmentation.
    #[arg(long)]
    pub n: usize,
    /// Cover each kernel in the presentation it comes with.
    #[arg(long)]
    pub no_prune: bool,
    #[arg(long, value_enum, default_value_t = CoverArg::Reduced)]
    pub cover: CoverArg,
    /// Resolve by cohomological projectives.
    #[arg(long)]
    pub cohomological: bool,
    /// Write the differentials as a JSON array of hom documents.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PeriodicityArgs {
    #[arg(long)]
    pub prime: u64,
    #[arg(long)]
    pub samples: usize,
    #[arg(long)]
    pub from: usize,
    #[arg(long)]
    pub to: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also run the fixed pair (M, N) read from these documents.
    #[arg(long, requires = "n")]
    pub m: Option<PathBuf>,
    #[arg(long, requires = "m")]
    pub n: Option<PathBuf>,
}

/// A failure with its exit code.
#[derive(Debug)]
pub enum CliError {
    User(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::User(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::User(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text)
        .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display())))
}

/// `fixed: d1,d2 / underlying: d1` with `0` for a free summand.
pub fn invariants_line(m: &CpMackeyFunctor) -> String {
    let (f, u) = m.level_invariants();
    let join = |v: Vec<num_bigint::BigInt>| {
        v.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!("fixed: {} / underlying: {}", join(f), join(u))
}

fn emit(
    out: &mut dyn Write,
    m: CpMackeyFunctor,
    prune_it: bool,
    invariants: bool,
    json: Option<(&Path, Option<String>)>,
) -> CliResult<()> {
    let m = if prune_it { prune(&m).functor } else { m };
    let text = if invariants {
        invariants_line(&m)
    } else {
        m.to_string()
    };
    writeln!(out, "{text}").map_err(|e| CliError::Internal(e.to_string()))?;
    if let Some((path, name)) = json {
        write_file(
            path,
            &to_json_pretty(&MackeyDocument::from_functor(&m, name)),
        )?;
    }
    Ok(())
}

fn module_action(args: &MakeArgs) -> CliResult<AbHom> {
    let (conj, relations) = if let Some(path) = &args.module {
        let doc: ModuleDocument = read_json(path)?;
        (doc.conj.0, doc.relations.map(|r| r.0))
    } else {
        let conj = args
            .conj
            .as_deref()
            .ok_or_else(|| CliError::User("--conj or --module is required".into()))?;
        let relations = args.relations.as_deref().map(parse_matrix).transpose()?;
        (parse_matrix(conj)?, relations)
    };
    let n = conj.rows();
    let x = FgAbGroup::from_relations(relations.unwrap_or_else(|| IntegerMatrix::zeros(n, 0)));
    if x.generator_count() != n {
        return Err(CliError::User(format!(
            "relations have {} rows but the action is {}x{}",
            x.generator_count(),
            n,
            conj.cols()
        )));
    }
    Ok(AbHom::new(x.clone(), x, conj)?)
}

fn make(args: &MakeArgs) -> CliResult<CpMackeyFunctor> {
    let p = args.prime;
    Ok(match args.kind {
        Kind::Zero => zero(p)?,
        Kind::Burnside => burnside(p)?,
        Kind::UnderlyingFree => underlying_free(p)?,
        Kind::ZeroOnUnderlying => {
            let g = match (&args.orders, &args.relations) {
                (Some(orders), None) => FgAbGroup::from_invariants(
                    &orders
                        .iter()
                        .map(|&d| num_bigint::BigInt::from(d))
                        .collect::<Vec<_>>(),
                ),
                (None, Some(rel)) => FgAbGroup::from_relations(parse_matrix(rel)?),
                (None, None) => FgAbGroup::free(1),
                (Some(_), Some(_)) => {
                    return Err(CliError::User(
                        "give --orders or --relations, not both".into(),
                    ))
                }
            };
            zero_on_underlying(p, g)?
        }
        Kind::FixedPoint => fixed_point(p, &module_action(args)?)?,
        Kind::Orbit => orbit(p, &module_action(args)?)?,
        Kind::RealRep => real_representation(p)?,
        Kind::ComplexRep => complex_representation(p)?,
        Kind::Random => {
            if args.coef_bound < 0 {
                return Err(CliError::User("--coef-bound must be nonnegative".into()));
            }
            random_mackey_functor(&RandomSpec {
                prime: p,
                seed: args.seed,
                max_free: args.max_free,
                max_rel: args.max_rel,
                coef_bound: args.coef_bound,
            })?
        }
    })
}

fn compute(args: &ComputeArgs) -> CliResult<CpMackeyFunctor> {
    let m = read_functor(&args.m)?;
    let n = read_functor(&args.n)?;
    let (opts, is_ext) = match args.op {
        Derived::Ext => (ResolutionOptions::default(), true),
        Derived::Tor => (ResolutionOptions::default(), false),
        Derived::Extcoh => (ResolutionOptions::cohomological(), true),
        Derived::Torcoh => (ResolutionOptions::cohomological(), false),
    };
    let mut v = if is_ext {
        ext_degrees(&[args.i], &m, &n, opts)?
    } else {
        tor_degrees(&[args.i], &m, &n, opts)?
    };
    Ok(v.pop().expect("one degree"))
}

fn res(args: &ResArgs, out: &mut dyn Write) -> CliResult<()> {
    let m = read_functor(&args.m)?;
    let opts = ResolutionOptions {
        prune_kernels: !args.no_prune,
        strategy: match args.cover {
            CoverArg::Naive => CoverStrategy::Naive,
            CoverArg::Reduced => CoverStrategy::Reduced,
        },
        kind: if args.cohomological {
            CoverKind::Cohomological
        } else {
            CoverKind::Mackey
        },
    };
    let complex = resolution_with(&m, args.n, opts)?;
    let w = |out: &mut dyn Write, s: String| {
        writeln!(out, "{s}").map_err(|e| CliError::Internal(e.to_string()))
    };
    for (i, d) in complex.differentials.iter().enumerate() {
        let src = d.source();
        let target = if i == 0 {
            "M".to_string()
        } else {
            format!("P{}", i - 1)
        };
        w(
            out,
            format!(
                "d{i}: P{i} -> {target}   P{i} ranks (fixed {}, underlying {})",
                src.fixed().generator_count(),
                src.underlying().generator_count()
            ),
        )?;
        w(out, format!("  fix: {}", d.fixed_map().matrix()))?;
        w(out, format!("  und: {}", d.underlying_map().matrix()))?;
    }
    if let Some(path) = &args.json {
        let docs: Vec<HomDocument> = complex
            .differentials
            .iter()
            .map(HomDocument::from_hom)
            .collect();
        write_file(path, &to_json_pretty(&docs))?;
    }
    Ok(())
}

fn periodicity_cmd(args: &PeriodicityArgs, out: &mut dyn Write) -> CliResult<()> {
    let fixture = match (&args.m, &args.n) {
        (Some(m), Some(n)) => Some((read_functor(m)?, read_functor(n)?)),
        _ => None,
    };
    let report = run_periodicity(&PeriodicityConfig {
        prime: args.prime,
        samples: args.samples,
        from: args.from,
        to: args.to,
        seed: args.seed,
        fixture,
    })?;
    let json = to_json_pretty(&report);
    match &args.out {
        Some(path) => write_file(path, &json)?,
        None => writeln!(out, "{json}").map_err(|e| CliError::Internal(e.to_string()))?,
    }
    writeln!(out, "{}", report.summary_line()).map_err(|e| CliError::Internal(e.to_string()))
}

/// Runs one parsed command, writing results to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Make(a) => {
            let m = make(a)?;
            let json = a.json.as_deref().map(|p| (p, a.name.clone()));
            emit(out, m, false, false, json)
        }
        Command::Compute(a) => {
            let r = compute(a)?;
            emit(
                out,
                r,
                a.prune,
                a.invariants,
                a.json.as_deref().map(|p| (p, None)),
            )
        }
        Command::Box(a) => {
            let r = box_product(&read_functor(&a.m)?, &read_functor(&a.n)?)?;
            emit(
                out,
                r,
                a.prune,
                a.invariants,
                a.json.as_deref().map(|p| (p, None)),
            )
        }
        Command::Ihom(a) => {
            let r = internal_hom(&read_functor(&a.m)?, &read_functor(&a.n)?)?;
            emit(
                out,
                r,
                a.prune,
                a.invariants,
                a.json.as_deref().map(|p| (p, None)),
            )
        }
        Command::Res(a) => res(a, out),
        Command::Periodicity(a) => periodicity_cmd(a, out),
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match execute(&cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            let (CliError::User(msg) | CliError::Internal(msg)) = &e;
            eprintln!("error: {msg}");
            e.exit_code()
        }
    }
}
