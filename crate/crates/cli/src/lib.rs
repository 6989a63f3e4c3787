//! Command-line front end: poset files, predicate reports, dual lattices,
//! enumeration, exhaustive suites, counterexample search and DOT export.

pub mod dot;
pub mod posetfile;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use orderkit::generators::{enumerate_lattices, enumerate_posets, named, Kind};
use orderkit::properties::Property;
use orderkit::stone_dual::{scott_closed_lattice, scott_opens, DEFAULT_OPEN_LIMIT};
use orderkit::verifier::{run_suite, search, Expr, Suite, Universe};
use orderkit::{as_lattice, FiniteLattice, FinitePoset, OrderError};
use thiserror::Error;

use posetfile::PosetFileError;
use report::{Report, SuiteJson, WitnessJson};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Limit(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Limit(_) => EXIT_LIMIT,
        }
    }
}

impl From<OrderError> for CliError {
    fn from(e: OrderError) -> Self {
        match e {
            OrderError::SizeLimit { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<PosetFileError> for CliError {
    fn from(e: PosetFileError) -> Self {
        match e {
            PosetFileError::Order(inner) => inner.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "orderkit",
    version,
    about = "Exact order theory on finite posets and lattices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate predicates on a poset file or named example
    Check(CheckArgs),
    /// Write the lattice of Scott-open (or Scott-closed) sets as a poset file
    Dual(DualArgs),
    /// Enumerate isomorphism classes of posets or lattices of one size
    Enumerate(EnumerateArgs),
    /// Run exhaustive theorem suites over enumerated universes
    Verify(VerifyArgs),
    /// Write the Hasse diagram in DOT syntax
    ExportDot(ExportDotArgs),
    /// Find the smallest instance satisfying a predicate expression
    Search(SearchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Posets,
    Lattices,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Posets => Kind::Posets,
            KindArg::Lattices => Kind::Lattices,
        }
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Poset file, or a named example (M3, N5, chain(k), antichain(k), boolean(k), one-point)
    pub input: String,
    /// Comma-separated predicate names, or `all`
    #[arg(long, default_value = "all")]
    pub properties: String,
    /// Print witnesses of failed predicates
    #[arg(long)]
    pub witness: bool,
    #[arg(long)]
    pub json: bool,
    /// Exit 0 even when a predicate fails
    #[arg(long)]
    pub no_assert: bool,
}

#[derive(Debug, Args)]
pub struct DualArgs {
    pub input: String,
    #[arg(long, conflicts_with = "scott_closed")]
    pub scott_opens: bool,
    #[arg(long)]
    pub scott_closed: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "posets")]
    pub kind: KindArg,
    /// Keep only instances satisfying this predicate expression
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long, conflicts_with = "emit")]
    pub count: bool,
    /// Write one `<name>.poset` file per instance into this directory
    #[arg(long)]
    pub emit: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// lemma31, thm32, thm34, thm21, thm23, thm25, chains, characterizations, discrimination or full
    #[arg(long, default_value = "full")]
    pub suite: String,
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    #[arg(long)]
    pub json: bool,
    /// Omit wall-clock times so identical runs give identical output
    #[arg(long)]
    pub deterministic: bool,
    /// Worker threads; 0 uses one per core
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct ExportDotArgs {
    pub input: String,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Predicate expression, e.g. `lattice & !join_continuous`
    pub expr: String,
    #[arg(long, value_enum, default_value = "lattices")]
    pub kind: KindArg,
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

/// A file path if one exists, otherwise a named example.
pub fn load_input(input: &str) -> CliResult<FinitePoset> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path)?;
        let p = posetfile::parse(&text).map_err(|e| match e {
            PosetFileError::Order(OrderError::SizeLimit { .. }) => CliError::from(e),
            e => CliError::Input(format!("{input}: {e}")),
        })?;
        if p.name().is_empty() {
            let stem = path
                .file_stem()
                .map_or(input.to_string(), |s| s.to_string_lossy().into_owned());
            return Ok(p.with_name(stem));
        }
        return Ok(p);
    }
    match named(input) {
        Ok(p) => Ok(p),
        Err(OrderError::UnknownName(_)) => Err(CliError::Input(format!(
            "`{input}` is neither a file nor a named example"
        ))),
        Err(e) => Err(e.into()),
    }
}

fn write_output(out: &mut dyn Write, path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn parse_properties(list: &str) -> CliResult<Vec<Property>> {
    if list.trim() == "all" {
        return Ok(Property::ALL.to_vec());
    }
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Property::from_name(s).ok_or_else(|| CliError::Input(format!("unknown predicate `{s}`"))))
        .collect()
}

fn cmd_check(args: &CheckArgs, out: &mut dyn Write) -> CliResult<i32> {
    let p = load_input(&args.input)?;
    let props = parse_properties(&args.properties)?;
    if props.is_empty() {
        return Err(CliError::Input("no predicates requested".into()));
    }
    let lattice = as_lattice(&p).ok();
    let mut report = Report::new(p.name(), p.len());
    let mut all_hold = true;
    for prop in &props {
        let verdict = prop.evaluate(&p, lattice.as_ref())?;
        all_hold &= verdict.as_ref().is_none_or(|v| v.holds);
        report.record(&p, prop.name(), verdict.as_ref());
    }
    if args.json {
        out.write_all(report.to_json().as_bytes())?;
    } else {
        let width = props.iter().map(|p| p.name().len()).max().unwrap_or(0);
        writeln!(out, "{} (n={})", p.name(), p.len())?;
        for prop in &props {
            let value = &report.properties[prop.name()];
            writeln!(out, "  {:width$}  {}", prop.name(), value.render())?;
            if args.witness {
                if let Some(w) = report.witnesses.get(prop.name()) {
                    writeln!(out, "  {:width$}    witness: {}", "", w.render())?;
                }
            }
        }
    }
    Ok(if all_hold || args.no_assert {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

fn cmd_dual(args: &DualArgs, out: &mut dyn Write) -> CliResult<i32> {
    let p = load_input(&args.input)?;
    let lattice = if args.scott_closed {
        scott_closed_lattice(&p, DEFAULT_OPEN_LIMIT)?
    } else {
        scott_opens(&p, DEFAULT_OPEN_LIMIT)?
    };
    let text = posetfile::emit(lattice.lattice.poset())?;
    write_output(out, args.output.as_deref(), &text)?;
    Ok(EXIT_PASS)
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut dyn Write) -> CliResult<i32> {
    let filter = args.filter.as_deref().map(Expr::parse).transpose()?;
    let instances: Vec<FinitePoset> = match args.kind {
        KindArg::Posets => enumerate_posets(args.n)?,
        KindArg::Lattices => enumerate_lattices(args.n)?
            .into_iter()
            .map(FiniteLattice::into_poset)
            .collect(),
    };
    let mut kept = Vec::new();
    for p in instances {
        if filter.as_ref().map_or(Ok(true), |f| f.eval(&p))? {
            kept.push(p);
        }
    }
    if args.count {
        writeln!(out, "{}", kept.len())?;
    } else if let Some(dir) = &args.emit {
        fs::create_dir_all(dir)?;
        for p in &kept {
            fs::write(dir.join(format!("{}.poset", p.name())), posetfile::emit(p)?)?;
        }
        writeln!(out, "wrote {} files to {}", kept.len(), dir.display())?;
    } else {
        for p in &kept {
            out.write_all(posetfile::emit(p)?.as_bytes())?;
            writeln!(out)?;
        }
    }
    Ok(EXIT_PASS)
}

fn universe_for(suite: Suite, max_n: usize) -> Universe {
    if suite.on_lattices() {
        Universe::lattices(max_n)
    } else {
        Universe::posets(max_n)
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let suites: Vec<Suite> = if args.suite == "full" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::from_name(&args.suite).ok_or_else(|| CliError::Input(format!("unknown suite `{}`", args.suite)))?]
    };
    if args.max_n == 0 {
        return Err(CliError::Input("--max-n must be at least 1".into()));
    }
    let mut reports = Vec::new();
    for &suite in &suites {
        reports.push(run_suite(suite, &universe_for(suite, args.max_n), args.jobs)?);
    }
    let passed = reports.iter().all(|r| r.passed());
    if args.json {
        let mut report = Report::new(args.suite.clone(), args.max_n);
        for r in &reports {
            report
                .properties
                .insert(r.suite.name().to_string(), report::PropertyValue::Bool(r.passed()));
            if let Some(f) = r.failures.first() {
                if let Some(w) = &f.verdict.witness {
                    report
                        .witnesses
                        .insert(r.suite.name().to_string(), WitnessJson::new(&f.instance, w));
                }
            }
        }
        report.suite = Some(reports.iter().map(|r| SuiteJson::new(r, args.deterministic)).collect());
        out.write_all(report.to_json().as_bytes())?;
    } else {
        for r in &reports {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            write!(
                out,
                "{:<18} {:<16} {:>5} instances  {status}",
                r.suite.name(),
                r.universe,
                r.instances
            )?;
            if !args.deterministic {
                write!(out, "  {:.2}s", r.wall_time.as_secs_f64())?;
            }
            writeln!(out)?;
            if !r.trivialized().is_empty() {
                writeln!(out, "  trivialized at finite scale: {}", r.trivialized().join(", "))?;
            }
            writeln!(out, "  {}", r.note())?;
            for (title, list) in [
                ("FAILURE", &r.failures),
                ("equation fails outside hypothesis", &r.outside_hypothesis),
            ] {
                for f in list {
                    let j = report::InstanceJson::new(f);
                    let known = j.known_as.map(|k| format!(" ({k})")).unwrap_or_default();
                    let witness = j.witness.map(|w| format!(": {}", w.render())).unwrap_or_default();
                    writeln!(out, "  {title}: {}{known}{witness}", j.name)?;
                }
            }
        }
    }
    Ok(if passed { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_export_dot(args: &ExportDotArgs, out: &mut dyn Write) -> CliResult<i32> {
    let p = load_input(&args.input)?;
    write_output(out, args.output.as_deref(), &dot::export_dot(&p))?;
    Ok(EXIT_PASS)
}

fn cmd_search(args: &SearchArgs, out: &mut dyn Write) -> CliResult<i32> {
    let universe = Universe {
        kind: args.kind.into(),
        min_n: 1,
        max_n: args.max_n,
    };
    match search(&universe, &args.expr, args.jobs)? {
        Some(p) => {
            if let Some(k) = report::known_name(&p) {
                writeln!(out, "# isomorphic to {k}")?;
            }
            out.write_all(posetfile::emit(&p)?.as_bytes())?;
            Ok(EXIT_PASS)
        }
        None => {
            writeln!(out, "no instance in {}", universe.describe())?;
            Ok(EXIT_FAIL)
        }
    }
}

/// Runs one command, writing its output to `out`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<i32> {
    match &cli.command {
        Command::Check(a) => cmd_check(a, out),
        Command::Dual(a) => cmd_dual(a, out),
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::ExportDot(a) => cmd_export_dot(a, out),
        Command::Search(a) => cmd_search(a, out),
    }
}
