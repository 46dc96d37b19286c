//! `treeratio`: generate binary trees, compute their invariants, enumerate
//! them up to isomorphism, and verify or search extremal ratios.
//!
//! Exit codes: 0 on success, 1 when a verification finds a counterexample,
//! 2 on bad parameters or unreadable input.

use std::fs::OpenOptions;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;
use treeratio_core::extremal::{ExtremalError, DEFAULT_CAP, SCHEMA_VERSION};
use treeratio_core::{
    binary_caterpillar, binary_tree_codes_parallel, canonical_code, count_binary_trees, parse_code,
    rooted_binary_caterpillar, rooted_code, search_extremal, three_way_caterpillar, total_subtrees,
    verify_lemmas, verify_propositions, verify_theorem, vertex_profile, wiener_index, EnumerationTask,
    ExtremalRecord, MiddleSet, Mode, RatioKind, SearchOptions, Tree, TreeError, TreeKind,
};

#[derive(Parser, Debug)]
#[command(name = "treeratio", version, about = "Extremal distance and subtree ratios of binary trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named tree family member
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, value_enum, default_value_t = GenFormat::Text, global = true)]
        format: GenFormat,
    },
    /// Distance sums, subtree counts, centroid and core of one tree
    Invariants(TreeInput),
    /// List every binary tree of order n up to isomorphism, one code per line
    Enum {
        #[arg(long)]
        n: usize,
        /// Print only the number of classes
        #[arg(long)]
        count_only: bool,
        /// Enumeration partitions (0 = one per thread)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Exhaustively check a closed form or a family of supporting facts
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, default_value_t = 16)]
        n_max: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Find the extremal ratio over all binary trees of each order
    Search {
        #[arg(long, value_enum)]
        ratio: RatioArg,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Order to search (the first one, when --n-max is given)
        #[arg(long)]
        n: usize,
        /// Search every even order from --n up to this one
        #[arg(long)]
        n_max: Option<usize>,
        /// Append records here instead of printing them
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// The binary caterpillar on n vertices
    Caterpillar {
        #[arg(long)]
        n: usize,
    },
    /// The rooted binary caterpillar with k internal vertices (root 0)
    RootedCaterpillar {
        #[arg(long)]
        k: usize,
    },
    /// A center joined to three rooted caterpillars of the given odd orders
    ThreeWay {
        /// Three comma-separated odd orders, e.g. 3,3,1
        #[arg(long, value_delimiter = ',', required = true)]
        branches: Vec<usize>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct TreeInput {
    /// Canonical parenthesis code
    #[arg(long)]
    code: Option<String>,
    /// File holding an edge list, or a canonical code
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Largest order accepted
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Enumeration partitions (0 = one per thread); results do not depend on it
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Middle part supplying the vertex v (default: centroid for dis, core for sub)
    #[arg(long, value_enum)]
    middle: Option<MiddleArg>,
}

impl RunArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions { cap: self.cap, jobs: self.jobs, middle: self.middle.map(Into::into) }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GenFormat {
    /// Edge list
    Text,
    /// Canonical code
    Codes,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    TheoremDis,
    TheoremSub,
    Props,
    Lemmas,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RatioArg {
    Dis,
    Sub,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MiddleArg {
    Centroid,
    Core,
}

impl From<RatioArg> for RatioKind {
    fn from(r: RatioArg) -> Self {
        match r {
            RatioArg::Dis => RatioKind::Distance,
            RatioArg::Sub => RatioKind::Subtree,
        }
    }
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Min => Mode::Min,
            ModeArg::Max => Mode::Max,
        }
    }
}

impl From<MiddleArg> for MiddleSet {
    fn from(m: MiddleArg) -> Self {
        match m {
            MiddleArg::Centroid => MiddleSet::Centroid,
            MiddleArg::Core => MiddleSet::Core,
        }
    }
}

#[derive(Error, Debug)]
enum CliError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    /// A verification ran to completion and found a counterexample.
    #[error("verification failed")]
    Failed,
}

impl CliError {
    fn io(path: &Path, source: io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed => 1,
            _ => 2,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gen { family, format } => cmd_gen(family, format),
        Command::Invariants(input) => cmd_invariants(input),
        Command::Enum { n, count_only, jobs } => cmd_enum(n, count_only, jobs),
        Command::Verify { target, n_max, run } => cmd_verify(target, n_max, &run),
        Command::Search { ratio, mode, n, n_max, out, format, run } => {
            cmd_search(ratio.into(), mode.into(), n, n_max, out.as_deref(), format, &run)
        }
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)?;
    writeln!(io::stdout().lock(), "{text}").map_err(|e| CliError::io(Path::new("<stdout>"), e))
}

#[derive(Serialize)]
struct GeneratedTree {
    schema: &'static str,
    family: &'static str,
    n: usize,
    code: String,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    root: Option<usize>,
}

fn cmd_gen(family: Family, format: GenFormat) -> Result<(), CliError> {
    let (name, tree, root, code) = match family {
        Family::Caterpillar { n } => {
            let t = binary_caterpillar(n)?;
            let code = canonical_code(&t);
            ("caterpillar", t, None, code)
        }
        Family::RootedCaterpillar { k } => {
            let rt = rooted_binary_caterpillar(k)?;
            let (root, code) = (rt.root(), rooted_code(&rt));
            ("rooted-caterpillar", rt.into_tree(), Some(root), code)
        }
        Family::ThreeWay { branches } => {
            let &[a, b, c] = branches.as_slice() else {
                return Err(CliError::Usage(format!(
                    "--branches takes three orders, got {}",
                    branches.len()
                )));
            };
            let (t, center) = three_way_caterpillar(a, b, c)?;
            let code = canonical_code(&t);
            ("three-way", t, Some(center), code)
        }
    };
    match format {
        GenFormat::Text => print!("{}", tree.to_edge_list()),
        GenFormat::Codes => println!("{code}"),
        GenFormat::Json => print_json(&GeneratedTree {
            schema: SCHEMA_VERSION,
            family: name,
            n: tree.order(),
            code: code.into_string(),
            edges: tree.edges(),
            root,
        })?,
    }
    Ok(())
}

fn read_tree(input: &TreeInput) -> Result<Tree, CliError> {
    match (&input.code, &input.file) {
        (Some(code), _) => Ok(parse_code(code.trim())?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            let text = text.trim();
            if text.starts_with('(') {
                Ok(parse_code(text)?)
            } else {
                Ok(Tree::from_edge_list(text)?)
            }
        }
        (None, None) => Err(CliError::Usage("one of --code or --file is required".into())),
    }
}

#[derive(Serialize)]
struct InvariantReport {
    schema: &'static str,
    n: usize,
    code: String,
    binary: bool,
    sigma: Vec<u64>,
    subtrees: Vec<String>,
    centroid: Vec<usize>,
    core: Vec<usize>,
    wiener: u64,
    total_subtrees: String,
}

fn cmd_invariants(input: TreeInput) -> Result<(), CliError> {
    let t = read_tree(&input)?;
    let profile = vertex_profile(&t);
    let parts = profile.middle_parts();
    print_json(&InvariantReport {
        schema: SCHEMA_VERSION,
        n: t.order(),
        code: canonical_code(&t).into_string(),
        binary: t.is_binary(),
        subtrees: profile.subtrees.iter().map(|f| f.to_string()).collect(),
        sigma: profile.sigma,
        centroid: parts.centroid,
        core: parts.core,
        wiener: wiener_index(&t),
        total_subtrees: total_subtrees(&t).to_string(),
    })
}

fn cmd_enum(n: usize, count_only: bool, jobs: usize) -> Result<(), CliError> {
    EnumerationTask::new(n, TreeKind::UnrootedBinary)?;
    if count_only {
        println!("{}", count_binary_trees(n)?);
        return Ok(());
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    for code in binary_tree_codes_parallel(n, jobs)? {
        writeln!(out, "{code}").map_err(|e| CliError::io(Path::new("<stdout>"), e))?;
    }
    out.flush().map_err(|e| CliError::io(Path::new("<stdout>"), e))
}

fn cmd_verify(target: Target, n_max: usize, run: &RunArgs) -> Result<(), CliError> {
    if n_max > run.cap {
        return Err(ExtremalError::CapExceeded { n: n_max, cap: run.cap }.into());
    }
    let failure = match target {
        Target::TheoremDis | Target::TheoremSub => {
            let kind = match target {
                Target::TheoremDis => RatioKind::Distance,
                _ => RatioKind::Subtree,
            };
            let report = verify_theorem(kind, n_max, &run.options())?;
            print_json(&report)?;
            match (&report.first_counterexample, report.passed) {
                (_, true) => None,
                (Some(c), false) => Some(format!("{}: {}", c.code, c.detail)),
                (None, false) => Some("closed form not reproduced".to_string()),
            }
        }
        Target::Props | Target::Lemmas => {
            let report = match target {
                Target::Props => verify_propositions(n_max)?,
                _ => verify_lemmas(n_max)?,
            };
            print_json(&report)?;
            match report.first_counterexample() {
                _ if report.passed => None,
                Some((name, c)) => Some(format!("{name}: {}: {}", c.code, c.detail)),
                None => Some("a check failed without a counterexample".to_string()),
            }
        }
    };
    match failure {
        None => Ok(()),
        Some(detail) => {
            eprintln!("counterexample: {detail}");
            Err(CliError::Failed)
        }
    }
}

fn cmd_search(
    kind: RatioKind,
    mode: Mode,
    n: usize,
    n_max: Option<usize>,
    out: Option<&Path>,
    format: OutFormat,
    run: &RunArgs,
) -> Result<(), CliError> {
    let last = n_max.unwrap_or(n);
    if last < n {
        return Err(CliError::Usage(format!("--n-max {last} is below --n {n}")));
    }
    if last > run.cap {
        return Err(ExtremalError::CapExceeded { n: last, cap: run.cap }.into());
    }
    let options = run.options();
    // Every record is computed before anything is written, so a failure
    // part-way leaves no partial output behind.
    let records = (n..=last)
        .step_by(2)
        .map(|order| search_extremal(order, kind, mode, &options))
        .collect::<Result<Vec<_>, _>>()?;
    match out {
        None => match format {
            OutFormat::Json => {
                for r in &records {
                    println!("{}", serde_json::to_string(r)?);
                }
            }
            OutFormat::Csv => {
                let mut w = csv::Writer::from_writer(io::stdout());
                for r in &records {
                    w.serialize(CsvRow::from(r))?;
                }
                w.flush().map_err(|e| CliError::io(Path::new("<stdout>"), e))?;
            }
        },
        Some(path) => {
            append_records(path, format, &records)?;
            print_summary(&records);
        }
    }
    Ok(())
}

/// Flat CSV form of a record: every column is always present, ratios are
/// `p/q` strings and absent values are empty cells.
#[derive(Serialize)]
struct CsvRow<'a> {
    schema: &'a str,
    n: usize,
    ratio_kind: RatioKind,
    mode: Mode,
    middle: MiddleSet,
    best_ratio: String,
    witness_code: &'a str,
    witness_w: usize,
    witness_v: usize,
    formula_value: Option<String>,
    matches_formula: Option<bool>,
    trees_examined: u64,
    witness_count: u64,
    structure_note: Option<&'a str>,
}

impl<'a> From<&'a ExtremalRecord> for CsvRow<'a> {
    fn from(r: &'a ExtremalRecord) -> Self {
        CsvRow {
            schema: &r.schema,
            n: r.n,
            ratio_kind: r.ratio_kind,
            mode: r.mode,
            middle: r.middle,
            best_ratio: r.best_ratio.to_string(),
            witness_code: r.witness_code.as_str(),
            witness_w: r.witness_w,
            witness_v: r.witness_v,
            formula_value: r.formula_value.as_ref().map(ToString::to_string),
            matches_formula: r.matches_formula,
            trees_examined: r.trees_examined,
            witness_count: r.witness_count,
            structure_note: r.structure_note.as_deref(),
        }
    }
}

fn append_records(path: &Path, format: OutFormat, records: &[ExtremalRecord]) -> Result<(), CliError> {
    let fresh = std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let file = OpenOptions::new().create(true).append(true).open(path).map_err(|e| CliError::io(path, e))?;
    match format {
        OutFormat::Json => {
            let mut w = io::BufWriter::new(file);
            for r in records {
                serde_json::to_writer(&mut w, r)?;
                writeln!(w).map_err(|e| CliError::io(path, e))?;
            }
            w.flush().map_err(|e| CliError::io(path, e))
        }
        OutFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(fresh).from_writer(file);
            for r in records {
                w.serialize(CsvRow::from(r))?;
            }
            w.flush().map_err(|e| CliError::io(path, e))
        }
    }
}

fn print_summary(records: &[ExtremalRecord]) {
    println!("{:>4}  {:>14}  {:>14}  {:>7}  {:>8}  witness", "n", "best", "formula", "match", "trees");
    for r in records {
        let formula = r.formula_value.as_ref().map_or("-".to_string(), |f| f.to_string());
        let matches = r.matches_formula.map_or("-", |m| if m { "yes" } else { "no" });
        println!(
            "{:>4}  {:>14}  {:>14}  {:>7}  {:>8}  {}",
            r.n,
            r.best_ratio.to_string(),
            formula,
            matches,
            r.trees_examined,
            r.witness_code
        );
    }
}
