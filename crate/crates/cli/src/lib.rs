//! Command-line front end: loads graph files, dispatches computations, and
//! renders results as text or JSON.
//!
//! Exit codes: 0 on success, 1 on computation errors (and on failed verify
//! checks), 2 on usage errors. JSON mode reports errors as
//! `{"schema":1,"error":{"code","message"}}` with stable machine-readable
//! codes taken from the library error types.

mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use spline_core::graph::reduce_labels;
use spline_core::ring::RingError;
use spline_core::spline::is_spline;
use spline_core::{
    check_flow_up_criteria, enumerate_splines, factorize, forced_equal_classes, gens_mod_m,
    gens_mod_prime_power, integer_basis, multable_distinct_primes, multable_general,
    multable_prime_power, rank, reduce_integer_basis, span_mod_m, zero_components,
    EdgeLabeledGraph, GeneratingSet, ModulusContext, MultiplicationTable, DEFAULT_BUDGET,
};

pub use output::parse_generating_set_json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "splines",
    version,
    about = "Exact computations for generalized splines on edge-labeled graphs over Z/mZ and Z"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the zero-connected components at a reduction modulus
    Components(ModArgs),
    /// Print a flow-up minimum generating set mod m
    Gens(GensArgs),
    /// Print the minimum number of generators mod m
    Rank(ModArgs),
    /// Print a flow-up basis for the integer splines
    BasisZ(BasisArgs),
    /// Print the structure-constant table of the generating set mod m
    Multable(ModArgs),
    /// Print the vertex classes on which every spline mod m is constant
    Classes(ModArgs),
    /// Run the brute-force verification suite mod m
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Graph JSON file
    input: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ModArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Modulus to compute at (defaults to the file's modulus)
    #[arg(long = "mod", value_name = "M")]
    modulus: Option<u64>,
}

#[derive(Args)]
struct GensArgs {
    #[command(flatten)]
    base: ModArgs,
    /// Also print column vectors with the highest-index vertex on top
    #[arg(long = "paper-order")]
    paper_order: bool,
}

#[derive(Args)]
struct BasisArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Minimize entries by back-substituting each successor generator
    #[arg(long)]
    reduce: bool,
    /// Also print column vectors with the highest-index vertex on top
    #[arg(long = "paper-order")]
    paper_order: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    base: ModArgs,
    /// Candidate budget for the brute-force scans
    #[arg(long, value_name = "N", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

enum Failure {
    Computation(spline_core::Error),
    Io(String),
    Usage(String),
    /// One or more verify checks failed; output was already rendered.
    ChecksFailed,
}

impl Failure {
    fn code(&self) -> &'static str {
        match self {
            Failure::Computation(e) => e.code(),
            Failure::Io(_) => "io-error",
            Failure::Usage(_) => "usage-error",
            Failure::ChecksFailed => "checks-failed",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Computation(e) => e.to_string(),
            Failure::Io(m) | Failure::Usage(m) => m.clone(),
            Failure::ChecksFailed => "verification checks failed".into(),
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            _ => EXIT_COMPUTATION,
        }
    }
}

impl<E: Into<spline_core::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Computation(e.into())
    }
}

/// Parses and runs a full command line (`args[0]` is the program name).
/// Writes results to `out`, diagnostics to `err`, and returns the exit code.
pub fn run_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    let format = match &cli.command {
        Command::Components(a) | Command::Rank(a) | Command::Multable(a) | Command::Classes(a) => {
            a.input.format
        }
        Command::Gens(a) => a.base.input.format,
        Command::BasisZ(a) => a.input.format,
        Command::Verify(a) => a.base.input.format,
    };
    match dispatch(&cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            if !matches!(failure, Failure::ChecksFailed) {
                match format {
                    Format::Json => {
                        let _ = writeln!(
                            out,
                            "{}",
                            output::error_json(failure.code(), &failure.message())
                        );
                    }
                    Format::Text => {
                        let _ = writeln!(err, "error: {}", failure.message());
                    }
                }
            }
            failure.exit_code()
        }
    }
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Components(args) => components(args, out),
        Command::Gens(args) => gens(args, out),
        Command::Rank(args) => rank_cmd(args, out),
        Command::BasisZ(args) => basis_z(args, out),
        Command::Multable(args) => multable(args, out),
        Command::Classes(args) => classes(args, out),
        Command::Verify(args) => verify(args, out),
    }
}

fn load_graph(path: &Path) -> Result<EdgeLabeledGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    Ok(spline_core::parse_graph(&text).map_err(spline_core::Error::from)?)
}

fn resolve_modulus(g: &EdgeLabeledGraph, flag: Option<u64>) -> Result<u64, Failure> {
    flag.or_else(|| g.modulus())
        .ok_or_else(|| Failure::Usage("--mod is required for a graph over the integers".into()))
}

fn components(args: &ModArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let g = load_graph(&args.input.input)?;
    let q = resolve_modulus(&g, args.modulus)?;
    let reduced = reduce_labels(&g, q).map_err(spline_core::Error::from)?;
    let parts = zero_components(&reduced).map_err(spline_core::Error::from)?;
    match args.input.format {
        Format::Json => writeln!(out, "{}", output::components_json(&g, &parts)),
        Format::Text => output::components_text(out, &g, &parts),
    }
    .map_err(|e| Failure::Io(e.to_string()))
}

fn gens(args: &GensArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let g = load_graph(&args.base.input.input)?;
    let m = resolve_modulus(&g, args.base.modulus)?;
    let set = gens_mod_m(&g, m)?;
    let header = format!(
        "flow-up minimum generating set mod {m} (rank {})",
        set.len()
    );
    match args.base.input.format {
        Format::Json => writeln!(out, "{}", output::gens_json(&g, m, &set)),
        Format::Text => output::gens_text(out, &g, &set, args.paper_order, &header),
    }
    .map_err(|e| Failure::Io(e.to_string()))
}

fn rank_cmd(args: &ModArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let g = load_graph(&args.input.input)?;
    let m = resolve_modulus(&g, args.modulus)?;
    let r = rank(&g, m)?;
    let mut factors = Vec::new();
    for f in factorize(m)?.factors() {
        let reduced = reduce_labels(&g, f.value()).map_err(spline_core::Error::from)?;
        let count = zero_components(&reduced)
            .map_err(spline_core::Error::from)?
            .len();
        factors.push((f.prime, f.exponent, count));
    }
    match args.input.format {
        Format::Json => writeln!(out, "{}", output::rank_json(m, r, &factors)),
        Format::Text => output::rank_text(out, m, r, &factors),
    }
    .map_err(|e| Failure::Io(e.to_string()))
}

fn basis_z(args: &BasisArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let g = load_graph(&args.input.input)?;
    if g.context() != ModulusContext::Integers {
        return Err(Failure::Usage(
            "basis-z needs a graph in \"integers\" mode".into(),
        ));
    }
    let mut basis = integer_basis(&g)?;
    if args.reduce {
        basis = reduce_integer_basis(&basis)?;
    }
    let header = format!("flow-up basis over Z ({} generators)", basis.len());
    match args.input.format {
        Format::Json => writeln!(out, "{}", output::basis_json(&g, &basis)),
        Format::Text => output::gens_text(out, &g, &basis, args.paper_order, &header),
    }
    .map_err(|e| Failure::Io(e.to_string()))
}

fn build_table(
    set: &GeneratingSet,
    m: u64,
) -> Result<(MultiplicationTable, &'static str), RingError> {
    let decomp = factorize(m).map_err(spline_core::spline::SplineError::from)?;
    if decomp.is_squarefree() {
        multable_distinct_primes(set).map(|t| (t, "distinct-primes"))
    } else if decomp.as_prime_power().is_some() {
        multable_prime_power(set).map(|t| (t, "prime-power"))
    } else {
        multable_general(set).map(|t| (t, "general"))
    }
}

fn multable(args: &ModArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let g = load_graph(&args.input.input)?;
    let m = resolve_modulus(&g, args.modulus)?;
    let set = gens_mod_m(&g, m)?;
    let (table, kind) = build_table(&set, m).map_err(spline_core::Error::from)?;
    match args.input.format {
        Format::Json => writeln!(out, "{}", output::multable_json(&g, &set, &table, kind)),
        Format::Text => output::multable_text(out, &set, &table, kind),
    }
    .map_err(|e| Failure::Io(e.to_string()))
}

fn classes(args: &ModArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let g = load_graph(&args.input.input)?;
    let m = resolve_modulus(&g, args.modulus)?;
    let classes = forced_equal_classes(&g, m)?;
    match args.input.format {
        Format::Json => writeln!(out, "{}", output::classes_json(&g, m, &classes)),
        Format::Text => output::classes_text(out, &g, m, &classes),
    }
    .map_err(|e| Failure::Io(e.to_string()))
}

/// One verification check: name plus outcome.
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// The brute-force certification suite behind `verify`: spline predicates
/// on every generator, span equality against the enumeration, rank match,
/// the constant flow-up divisibility criteria per prime-power factor,
/// forced-class agreement, and the multiplication table self-check.
pub fn run_verification(
    g: &EdgeLabeledGraph,
    m: u64,
    budget: u64,
) -> Result<Vec<Check>, spline_core::Error> {
    let mut checks = Vec::new();

    let set = gens_mod_m(g, m)?;
    let reduced = reduce_labels(g, m)?;
    let mut splines_ok = true;
    for s in set.splines() {
        splines_ok &= is_spline(&reduced, s)?;
    }
    checks.push(Check {
        name: "generators-are-splines".into(),
        pass: splines_ok,
        detail: format!("{} generators", set.len()),
    });

    let enumerated = enumerate_splines(g, m, budget)?;
    let spanned = span_mod_m(&set, m, budget)?;
    checks.push(Check {
        name: "span-equals-enumeration".into(),
        pass: spanned == enumerated,
        detail: format!(
            "{} splines enumerated, {} spanned",
            enumerated.len(),
            spanned.len()
        ),
    });

    let r = rank(g, m)?;
    checks.push(Check {
        name: "cardinality-equals-rank".into(),
        pass: set.len() == r,
        detail: format!("set size {}, rank {r}", set.len()),
    });

    for f in factorize(m)?.factors() {
        let factor_set = gens_mod_prime_power(g, f.prime, f.exponent)?;
        checks.push(Check {
            name: format!("constant-flow-up-chain-mod-{}", f.value()),
            pass: check_flow_up_criteria(&factor_set),
            detail: format!("{} generators", factor_set.len()),
        });
    }

    let classes = forced_equal_classes(g, m)?;
    let n = g.n_vertices();
    let mut classes_ok = true;
    for v in 0..n {
        for w in (v + 1)..n {
            let same = classes.iter().any(|c| c.contains(&v) && c.contains(&w));
            let agree = enumerated
                .splines()
                .iter()
                .all(|s| s.value(v) == s.value(w));
            classes_ok &= same == agree;
        }
    }
    checks.push(Check {
        name: "forced-classes-match-oracle".into(),
        pass: classes_ok,
        detail: format!("{} classes", classes.len()),
    });

    let table_outcome = build_table(&set, m);
    checks.push(Check {
        name: "multiplication-table".into(),
        pass: table_outcome.is_ok(),
        detail: match table_outcome {
            Ok((_, kind)) => format!("{kind} table verified"),
            Err(e) => e.to_string(),
        },
    });

    Ok(checks)
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let g = load_graph(&args.base.input.input)?;
    let m = resolve_modulus(&g, args.base.modulus)?;
    let checks = run_verification(&g, m, args.budget)?;
    let all_pass = checks.iter().all(|c| c.pass);
    match args.base.input.format {
        Format::Json => writeln!(out, "{}", output::verify_json(m, &checks, all_pass)),
        Format::Text => output::verify_text(out, m, &checks, all_pass),
    }
    .map_err(|e| Failure::Io(e.to_string()))?;
    if all_pass {
        Ok(())
    } else {
        Err(Failure::ChecksFailed)
    }
}

/// Convenience wrapper for tests: run a command line and capture the
/// streams. Returns `(exit_code, stdout, stderr)`.
pub fn run_capture(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_with_args(args.iter().copied(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is utf-8"),
        String::from_utf8(err).expect("stderr is utf-8"),
    )
}
