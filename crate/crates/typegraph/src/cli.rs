//! Command-line surface: argument parsing and dispatch.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use typegraph_core::colorings::{color_gb_graph, color_shift_graph, color_typegraph, verify_proper};
use typegraph_core::graphs::{build_gb, build_typegraph, AdjacencyOracle, GbSpec, Subset, TypeGraphSpec};
use typegraph_core::homomorphisms::{
    factor_block_counts, hom_lower, hom_project_map, hom_reducible, hom_upper_map, verify_homomorphism,
};
use typegraph_core::order_types::block_decompose;
use typegraph_core::{Coloring, Graph, GraphKind, HomReport, OrderType, Polarity, VertexMap};

use crate::error::{CliError, Result};
use crate::formats::{write_dimacs, ColoringDump, Coordinates, GraphDump, HomReportDump};
use crate::table;
use crate::timed::{self, Limits};

/// Exit status when a verification finds violations.
pub const EXIT_VIOLATIONS: u8 = 3;

/// Default wall-clock cap per oracle call in `table`, in milliseconds.
pub const TABLE_DEFAULT_MS: u64 = 60_000;

#[derive(Debug, Parser)]
#[command(name = "typegraph", version, about = "Type-graphs G(n, τ): blocks, graphs, colourings, homomorphisms and exact χ")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format: dimacs or json for `build`, json for `color`, `verify-hom` and `chi`, csv or json for `table`.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Node cap for exact colouring searches (default: none).
    #[arg(long, global = true)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock cap per exact colouring search in milliseconds (default: none; 60000 for `table`).
    #[arg(long, global = true)]
    pub budget_ms: Option<u64>,
    /// Shuffle the greedy baseline order in `table` with this seed (default: vertex order).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the factorisation, block decomposition, block count and s(i).
    Decompose {
        /// Type as a digit string, e.g. 13332.
        #[arg(long = "type")]
        tau: String,
    },
    /// Build G(n, τ) or G_b(n).
    Build(GraphArgs),
    /// Colour a graph with the constructive colourings and check properness.
    Color(ColorArgs),
    /// Tabulate one of the explicit homomorphisms and check edge preservation.
    VerifyHom(HomArgs),
    /// Exact chromatic number.
    Chi(GraphArgs),
    /// CSV rows `type,n,paper_colors,chi_exact,greedy` over types and a range of n.
    Table {
        /// Types; repeat the flag for several.
        #[arg(long = "type", required = true)]
        tau: Vec<String>,
        /// Single value or inclusive range such as 2..20.
        #[arg(long)]
        n: NRange,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dimacs,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// G(n, τ); needs --type and --n.
    Typegraph,
    /// G_b(n); needs --b and --n.
    Gb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorKind {
    Typegraph,
    Gb,
    /// The ⌈log n⌉-colouring c({i, j}) = f(i, j) of G(n, 132).
    Shift,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Lower,
    Upper,
    Project,
    Reducible,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    pub kind: Kind,
    #[arg(long = "type")]
    pub tau: Option<String>,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub b: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    pub kind: ColorKind,
    #[arg(long = "type")]
    pub tau: Option<String>,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub b: Option<usize>,
}

#[derive(Debug, Args)]
pub struct HomArgs {
    pub which: Which,
    #[arg(long = "type")]
    pub tau: String,
    #[arg(long)]
    pub n: u64,
    /// Factor index (1-based) for `project`; defaults to a factor with the most blocks.
    #[arg(long)]
    pub factor: Option<usize>,
}

/// `a` or the inclusive range `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub start: u64,
    pub end: u64,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("bad integer `{t}`"));
        let range = match s.split_once("..") {
            Some((a, b)) => NRange { start: num(a)?, end: num(b.strip_prefix('=').unwrap_or(b))? },
            None => {
                let v = num(s)?;
                NRange { start: v, end: v }
            }
        };
        if range.start > range.end {
            return Err(format!("empty range `{s}`"));
        }
        Ok(range)
    }
}

fn parse_type(s: &str) -> Result<OrderType> {
    Ok(OrderType::parse(s)?)
}

fn require<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

fn check_format(given: Option<Format>, allowed: &[Format]) -> Result<Format> {
    match given {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(CliError::Usage(format!("--format {f:?} is not available for this command").to_lowercase())),
    }
}

impl Cli {
    fn limits(&self) -> Limits {
        Limits { nodes: self.budget_nodes, time: self.budget_ms.map(Duration::from_millis) }
    }
}

/// Runs the command, writing to `--out` or to `stdout`. Returns the exit status.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<u8> {
    match &cli.out {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::File { path: path.clone(), source })?;
            let mut w = BufWriter::new(file);
            let code = dispatch(cli, &mut w)?;
            w.flush()?;
            Ok(code)
        }
        None => dispatch(cli, stdout),
    }
}

fn dispatch(cli: &Cli, w: &mut dyn Write) -> Result<u8> {
    match &cli.command {
        Command::Decompose { tau } => {
            if cli.format.is_some() {
                return Err(CliError::Usage("decompose prints text only".into()));
            }
            decompose(&parse_type(tau)?, w)
        }
        Command::Build(args) => build(cli, args, w),
        Command::Color(args) => color(cli, args, w),
        Command::VerifyHom(args) => verify(cli, args, w),
        Command::Chi(args) => chi(cli, args, w),
        Command::Table { tau, n } => table_cmd(cli, tau, *n, w),
    }
}

/// Text report, e.g. `factors: 12 | 132; b*=3` followed by one line per factor.
pub fn decompose(tau: &OrderType, w: &mut dyn Write) -> Result<u8> {
    if tau.is_empty() {
        return Err(CliError::Core(typegraph_core::Error::TrivialType));
    }
    let factors = tau.factorize();
    let (_, b_star) = factor_block_counts(tau).or_else(|e| match e {
        typegraph_core::Error::TrivialType => Ok((vec![1], 1)),
        e => Err(e),
    })?;
    writeln!(w, "type: {tau}; width={}; length={}", tau.width(), tau.len())?;
    let names: Vec<String> = factors.iter().map(ToString::to_string).collect();
    writeln!(w, "factors: {}; b*={b_star}", names.join(" | "))?;
    for f in &factors {
        let dec = block_decompose(f)?;
        let polarity = match dec.polarity() {
            Polarity::Primary => "primary",
            Polarity::Secondary => "secondary",
            Polarity::Trivial => "trivial",
        };
        let s: Vec<String> = dec.prefix_twos().iter().map(ToString::to_string).collect();
        writeln!(w, "{f}: {polarity}; blocks: {}; b={}; s={}", dec.spaced(), dec.count(), s.join(","))?;
    }
    Ok(0)
}

fn write_graph<V: Coordinates>(g: &Graph<V>, format: Format, w: &mut dyn Write) -> Result<()> {
    match format {
        Format::Dimacs => write_dimacs(g, w)?,
        _ => {
            serde_json::to_writer(&mut *w, &GraphDump::new(g))?;
            writeln!(w)?;
        }
    }
    Ok(())
}

fn build(cli: &Cli, args: &GraphArgs, w: &mut dyn Write) -> Result<u8> {
    let format = check_format(cli.format, &[Format::Dimacs, Format::Json])?;
    match args.kind {
        Kind::Typegraph => {
            let tau = parse_type(require(args.tau.as_deref(), "type")?)?;
            write_graph(&build_typegraph(args.n, &tau)?, format, w)?;
        }
        Kind::Gb => write_graph(&build_gb(require(args.b, "b")?, args.n)?, format, w)?,
    }
    Ok(0)
}

fn emit_coloring<V>(g: &Graph<V>, c: &Coloring, w: &mut dyn Write) -> Result<u8> {
    let report = verify_proper(g, c)?;
    serde_json::to_writer(&mut *w, &ColoringDump::new(g.kind(), c, &report))?;
    writeln!(w)?;
    Ok(if report.is_proper() { 0 } else { EXIT_VIOLATIONS })
}

fn color(cli: &Cli, args: &ColorArgs, w: &mut dyn Write) -> Result<u8> {
    check_format(cli.format, &[Format::Json])?;
    match args.kind {
        ColorKind::Typegraph => {
            let tau = parse_type(require(args.tau.as_deref(), "type")?)?;
            let g = build_typegraph(args.n, &tau)?;
            emit_coloring(&g, &color_typegraph(args.n, &tau)?, w)
        }
        ColorKind::Gb => {
            let g = build_gb(require(args.b, "b")?, args.n)?;
            emit_coloring(&g, &color_gb_graph(&g)?, w)
        }
        ColorKind::Shift => {
            let g = build_typegraph(args.n, &parse_type("132")?)?;
            emit_coloring(&g, &color_shift_graph(args.n), w)
        }
    }
}

fn check_map<T>(src: &Graph<Subset>, map: &VertexMap<Subset, T>, dst: &dyn AdjacencyOracle<T>) -> Result<HomReport>
where
    T: Ord,
{
    Ok(verify_homomorphism(src, dst, map)?)
}

fn target_spec(kind: &GraphKind) -> Result<TypeGraphSpec> {
    match kind {
        GraphKind::TypeGraph { n, tau } => Ok(TypeGraphSpec { n: *n, tau: tau.clone() }),
        other => Err(CliError::Usage(format!("unexpected target {other}"))),
    }
}

fn verify(cli: &Cli, args: &HomArgs, w: &mut dyn Write) -> Result<u8> {
    check_format(cli.format, &[Format::Json])?;
    let tau = parse_type(&args.tau)?;
    let n = args.n;
    let (src, target, report) = match args.which {
        Which::Upper => {
            let m = hom_upper_map(&tau, n)?;
            let GraphKind::Auxiliary { b, n: tn } = m.target else {
                return Err(CliError::Usage("unexpected target".into()));
            };
            let src = build_typegraph(n, &tau)?;
            let report = check_map(&src, &m, &GbSpec { b, n: tn })?;
            (src, m.target, report)
        }
        Which::Lower | Which::Reducible | Which::Project => {
            let m = match args.which {
                Which::Lower => hom_lower(&tau, n)?,
                Which::Reducible => hom_reducible(&tau, n)?,
                _ => {
                    let i = match args.factor {
                        Some(i) => i,
                        None => {
                            let (counts, best) = factor_block_counts(&tau)?;
                            counts.iter().position(|&c| c == best).map_or(1, |p| p + 1)
                        }
                    };
                    let m = hom_project_map(&tau, i, n)?;
                    if matches!(&m.target, GraphKind::TypeGraph { tau, .. } if tau.is_trivial()) {
                        return Err(CliError::Usage(format!("factor {i} is trivial and has no edges")));
                    }
                    m
                }
            };
            let src_type = m.source_type().ok_or_else(|| CliError::Usage("unexpected source".into()))?;
            let src = build_typegraph(n, src_type)?;
            let report = check_map(&src, &m, &target_spec(&m.target)?)?;
            (src, m.target, report)
        }
    };
    serde_json::to_writer(&mut *w, &HomReportDump::new(&src, &target, &report))?;
    writeln!(w)?;
    Ok(if report.is_homomorphism() { 0 } else { EXIT_VIOLATIONS })
}

fn chi(cli: &Cli, args: &GraphArgs, w: &mut dyn Write) -> Result<u8> {
    check_format(cli.format, &[Format::Json])?;
    let timed = match args.kind {
        Kind::Typegraph => {
            let tau = parse_type(require(args.tau.as_deref(), "type")?)?;
            timed::typegraph(args.n, &tau, cli.limits())?.1
        }
        Kind::Gb => timed::chromatic(&build_gb(require(args.b, "b")?, args.n)?, cli.limits())?,
    };
    serde_json::to_writer(&mut *w, &timed.to_dump())?;
    writeln!(w)?;
    Ok(0)
}

fn table_cmd(cli: &Cli, types: &[String], n: NRange, w: &mut dyn Write) -> Result<u8> {
    let format = check_format(cli.format, &[Format::Csv, Format::Json])?;
    let mut limits = cli.limits();
    if limits.time.is_none() {
        limits.time = Some(Duration::from_millis(TABLE_DEFAULT_MS));
    }
    let types = types.iter().map(|s| parse_type(s)).collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for tau in &types {
        for n in n.start.max(tau.width() as u64)..=n.end {
            rows.push(table::row(tau, n, limits, cli.seed)?);
        }
    }
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *w, &rows)?;
            writeln!(w)?;
        }
        _ => table::write_csv(&rows, w)?,
    }
    Ok(0)
}
