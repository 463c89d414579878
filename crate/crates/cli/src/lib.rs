//! Command-line front end: argument model, command dispatch and exit codes.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use anfnl_core::oracle::MAX_LDM_ORDER;
use anfnl_core::solver::{cross_check, DEFAULT_NODE_BUDGET};
use anfnl_core::{
    analyze_problem, build_problem, expected_coefficient_count, fast_walsh, solver, walsh_of_row,
    AnalysisReport, AnfFunction, BitMask, DistanceProblem, LinearDistanceMatrix, Ordering,
    SolveOptions,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

pub mod gen;

#[derive(Debug, Parser)]
#[command(
    name = "anfnl",
    version,
    about = "Nonlinearity of Boolean functions given in ANF"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Nonlinearity, weight, witnesses and nearest affine functions.
    Nl(AnalyzeArgs),
    /// Hamming weight from the combined coefficients.
    Weight(WeightArgs),
    /// Walsh values at chosen points, or the full spectrum.
    Walsh(WalshArgs),
    /// Affine functions at minimum distance.
    Nearest(AnalyzeArgs),
    /// Dump the linear distance matrix as CSV.
    Ldm(LdmArgs),
    /// Generate a random function.
    Gen(GenArgs),
    /// Cross-check the solver against the exhaustive oracle on random functions.
    Verify(VerifyArgs),
    /// Time the solver on random functions and emit CSV records.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false, id = "source")]
pub struct SourceArgs {
    /// Read the function from a file (human or mask-list form).
    #[arg(short = 'f', long = "file", group = "source")]
    pub file: Option<PathBuf>,
    /// Inline expression, e.g. "x1x5 + x4x5".
    #[arg(short = 'e', long = "expr", group = "source")]
    pub expr: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Number of variables (defaults to the highest index used).
    #[arg(long)]
    pub n: Option<u32>,
}

impl InputArgs {
    pub fn load(&self) -> Result<AnfFunction, CliError> {
        let text = match (&self.source.file, &self.source.expr) {
            (Some(path), _) => fs::read_to_string(path).map_err(|e| CliError::io(path, e))?,
            (None, Some(expr)) => expr.clone(),
            (None, None) => return Err(CliError::Usage("one of -f or -e is required".into())),
        };
        Ok(AnfFunction::parse(&text, self.n)?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Term order for the distance tree: abs-desc, input or coef-asc.
    #[arg(long, default_value_t = Ordering::AbsDesc)]
    pub order: Ordering,
    /// Enumerate the whole tree without branch-and-bound pruning.
    #[arg(long)]
    pub no_bnb: bool,
    /// Write `<mask-hex> <C> <beta>` lines in term order.
    #[arg(long, value_name = "PATH")]
    pub dump_coeffs: Option<PathBuf>,
    /// Write one `<bitstring> <F>` line per leaf reached.
    #[arg(long, value_name = "PATH")]
    pub dump_tree: Option<PathBuf>,
    /// Cross-check with the exhaustive oracle (only when n <= threshold).
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value_t = solver::DEFAULT_VERIFY_THRESHOLD)]
    pub verify_threshold: u32,
    /// Maximum number of tree nodes to visit.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    #[arg(long)]
    pub json: bool,
}

impl AnalyzeArgs {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            order: self.order,
            branch_and_bound: !self.no_bnb,
            node_budget: self.budget,
            verify_threshold: self.verify.then_some(self.verify_threshold),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct WeightArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct WalshArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Points to evaluate, decimal or 0x-prefixed hex masks.
    #[arg(long = "w", value_parser = parse_mask, num_args = 1.., conflicts_with = "all")]
    pub points: Vec<BitMask>,
    /// Print the full spectrum from the truth table.
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LdmMethod {
    ClosedForm,
    Recursive,
    Hadamard,
}

#[derive(Debug, Clone, Args)]
pub struct LdmArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = LdmMethod::Recursive)]
    pub method: LdmMethod,
    #[arg(short, long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFormat {
    Human,
    Masks,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: usize,
    #[arg(long, default_value_t = 0.5)]
    pub q: f64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = GenFormat::Human)]
    pub format: GenFormat,
    #[arg(short, long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: usize,
    #[arg(long, default_value_t = 0.5)]
    pub q: f64,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    /// Seed of the first trial; trial t uses seed + t.
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = Ordering::AbsDesc)]
    pub order: Ordering,
    #[arg(long)]
    pub no_bnb: bool,
    #[arg(long, default_value_t = solver::DEFAULT_VERIFY_THRESHOLD)]
    pub verify_threshold: u32,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: usize,
    #[arg(long, default_value_t = 0.5)]
    pub q: f64,
    #[arg(long, default_value_t = 10)]
    pub trials: u64,
    /// Seed of the first trial; trial t uses seed + t.
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = Ordering::AbsDesc)]
    pub order: Ordering,
    #[arg(long)]
    pub no_bnb: bool,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Write records here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub csv: Option<PathBuf>,
}

fn parse_mask(s: &str) -> Result<BitMask, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed
        .map(BitMask)
        .map_err(|e| format!("bad mask `{s}`: {e}"))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] anfnl_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Output(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{failed} of {trials} trials disagree with the oracle")]
    Mismatch { failed: u64, trials: u64 },
}

impl CliError {
    fn io(path: &Path, source: io::Error) -> CliError {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        use anfnl_core::Error as E;
        match self {
            CliError::Core(E::Overflow(_)) => 2,
            CliError::Core(
                E::TooLarge { .. }
                | E::TooManyMonomials { .. }
                | E::NodeBudget { .. }
                | E::EnumerationGuard { .. },
            ) => 3,
            CliError::Core(E::VerificationMismatch(_)) | CliError::Mismatch { .. } => 4,
            _ => 1,
        }
    }
}

/// One timed trial of `bench`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub n: u32,
    pub p: usize,
    pub q: f64,
    pub seed: u64,
    pub k: usize,
    pub expected_k: f64,
    pub weight: i128,
    pub nonlinearity: i128,
    pub seconds: f64,
    pub nodes: u64,
}

impl BenchRecord {
    pub const HEADER: [&'static str; 10] = [
        "n",
        "p",
        "q",
        "seed",
        "k",
        "expected_k",
        "weight",
        "nl",
        "seconds",
        "nodes",
    ];

    fn fields(&self) -> [String; 10] {
        [
            self.n.to_string(),
            self.p.to_string(),
            self.q.to_string(),
            self.seed.to_string(),
            self.k.to_string(),
            format!("{:.1}", self.expected_k),
            self.weight.to_string(),
            self.nonlinearity.to_string(),
            format!("{:.6}", self.seconds),
            self.nodes.to_string(),
        ]
    }
}

/// Generates and solves one bench instance; `seconds` covers both the
/// coefficient expansion and the tree search.
pub fn bench_trial(args: &BenchArgs, seed: u64) -> Result<BenchRecord, CliError> {
    let f = gen::gen(args.n, args.p, args.q, seed)?;
    let options = SolveOptions {
        order: args.order,
        branch_and_bound: !args.no_bnb,
        node_budget: args.budget,
        verify_threshold: None,
    };
    let start = Instant::now();
    let problem = build_problem(&f, options.order)?;
    let report = analyze_problem(&problem, &options, |_, _| {})?;
    let seconds = start.elapsed().as_secs_f64();
    Ok(BenchRecord {
        n: args.n,
        p: args.p,
        q: args.q,
        seed,
        k: report.k,
        expected_k: expected_coefficient_count(args.n, args.p, args.q),
        weight: report.weight,
        nonlinearity: report.nonlinearity,
        seconds,
        nodes: report.stats.nodes,
    })
}

pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    match &config.command {
        Command::Nl(args) => run_nl(args, out, false),
        Command::Nearest(args) => run_nl(args, out, true),
        Command::Weight(args) => run_weight(args, out),
        Command::Walsh(args) => run_walsh(args, out),
        Command::Ldm(args) => run_ldm(args, out),
        Command::Gen(args) => run_gen(args, out),
        Command::Verify(args) => run_verify(args, out),
        Command::Bench(args) => run_bench(args, out),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError::io(path, e))
}

/// Builds the problem and runs the search, honouring the dump flags.
pub fn analyze(
    args: &AnalyzeArgs,
) -> Result<(AnfFunction, DistanceProblem, AnalysisReport), CliError> {
    let f = args.input.load()?;
    let options = args.options();
    let problem = build_problem(&f, options.order)?;
    if let Some(path) = &args.dump_coeffs {
        let mut w = create(path)?;
        w.write_all(problem.dump_coefficients().as_bytes())
            .and_then(|_| w.flush())
            .map_err(|e| CliError::io(path, e))?;
    }

    let report = match &args.dump_tree {
        Some(path) => {
            let mut w = create(path)?;
            let mut failure = None;
            let report = analyze_problem(&problem, &options, |bits, value| {
                if failure.is_none() {
                    if let Err(e) = writeln!(w, "{} {value}", solver::bit_string(bits)) {
                        failure = Some(e);
                    }
                }
            })?;
            if let Some(e) = failure {
                return Err(CliError::io(path, e));
            }
            w.flush().map_err(|e| CliError::io(path, e))?;
            report
        }
        None => analyze_problem(&problem, &options, |_, _| {})?,
    };

    if let Some(threshold) = options.verify_threshold {
        if f.n() <= threshold {
            cross_check(&f, &report)?;
        }
    }
    Ok((f, problem, report))
}

fn run_nl(args: &AnalyzeArgs, out: &mut dyn Write, nearest_only: bool) -> Result<(), CliError> {
    let (f, problem, report) = analyze(args)?;
    if args.json {
        if nearest_only {
            serde_json::to_writer_pretty(&mut *out, &report.nearest)?;
        } else {
            serde_json::to_writer_pretty(&mut *out, &report)?;
        }
        writeln!(out)?;
        return Ok(());
    }
    if nearest_only {
        write_nearest(out, &report)?;
        return Ok(());
    }

    writeln!(out, "f = {f}")?;
    writeln!(
        out,
        "n = {}, p = {}, k = {}, order = {}",
        report.n,
        report.p,
        report.k,
        problem.order()
    )?;
    writeln!(out, "combined coefficients (mask C beta):")?;
    const SHOWN: usize = 64;
    for term in problem.terms().iter().take(SHOWN) {
        writeln!(out, "  {:#x} {} {}", term.mask, term.c, term.beta)?;
    }
    if problem.k() > SHOWN {
        writeln!(
            out,
            "  ... {} more (see --dump-coeffs)",
            problem.k() - SHOWN
        )?;
    }
    writeln!(
        out,
        "distance tree: {} nodes, {} leaves, {} pruned, {:.3} s",
        report.stats.nodes, report.stats.leaves, report.stats.pruned, report.stats.seconds
    )?;
    for witness in &report.witnesses {
        writeln!(out, "  max path {} value {}", witness.path, witness.value)?;
    }
    writeln!(out, "weight = {}", report.weight)?;
    writeln!(out, "max |W| = {}", report.max_abs_walsh)?;
    writeln!(out, "nonlinearity = {}", report.nonlinearity)?;
    write_nearest(out, &report)?;
    if report.witnesses.iter().any(|w| w.truncated) {
        writeln!(out, "  (some witnesses cover too many rows to list)")?;
    }
    Ok(())
}

fn write_nearest(out: &mut dyn Write, report: &AnalysisReport) -> io::Result<()> {
    writeln!(out, "nearest affine functions:")?;
    for a in &report.nearest {
        writeln!(
            out,
            "  {}  w = {:#x}  W = {}  distance {}",
            affine_name(report.n, a.w, a.complement),
            a.w,
            a.walsh,
            a.distance
        )?;
    }
    Ok(())
}

/// `l_w` (or its complement) written as a sum of variables.
pub fn affine_name(n: u32, w: BitMask, complement: bool) -> String {
    let vars: Vec<String> = w.variables(n).map(|i| format!("x{i}")).collect();
    match (vars.is_empty(), complement) {
        (true, false) => "0".into(),
        (true, true) => "1".into(),
        (false, false) => vars.join(" + "),
        (false, true) => format!("1 + {}", vars.join(" + ")),
    }
}

#[derive(Serialize)]
struct WeightOutput {
    n: u32,
    p: usize,
    k: usize,
    weight: i128,
}

fn run_weight(args: &WeightArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let f = args.input.load()?;
    let problem = build_problem(&f, Ordering::Input)?;
    if args.json {
        let record = WeightOutput {
            n: problem.n(),
            p: problem.p(),
            k: problem.k(),
            weight: problem.weight(),
        };
        serde_json::to_writer_pretty(&mut *out, &record)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{}", problem.weight())?;
    }
    Ok(())
}

#[derive(Serialize)]
struct WalshPoint {
    w: BitMask,
    walsh: i128,
}

fn run_walsh(args: &WalshArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let f = args.input.load()?;
    let points: Vec<WalshPoint> = if args.all {
        let spectrum = fast_walsh(&f.truth_table()?);
        spectrum
            .values()
            .iter()
            .enumerate()
            .map(|(w, &v)| WalshPoint {
                w: BitMask(w as u64),
                walsh: i128::from(v),
            })
            .collect()
    } else {
        if args.points.is_empty() {
            return Err(CliError::Usage("give --w MASK... or --all".into()));
        }
        let problem = build_problem(&f, Ordering::Input)?;
        args.points
            .iter()
            .map(|&w| {
                w.check_fits(f.n())?;
                Ok(WalshPoint {
                    w,
                    walsh: walsh_of_row(&problem, w)?,
                })
            })
            .collect::<Result<_, anfnl_core::Error>>()?
    };
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &points)?;
        writeln!(out)?;
    } else {
        for p in &points {
            writeln!(out, "{} {}", p.w, p.walsh)?;
        }
    }
    Ok(())
}

fn run_ldm(args: &LdmArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.n > MAX_LDM_ORDER {
        return Err(anfnl_core::Error::TooLarge {
            what: "linear distance matrix",
            n: args.n,
            limit: MAX_LDM_ORDER,
        }
        .into());
    }
    let matrix = match args.method {
        LdmMethod::ClosedForm => LinearDistanceMatrix::closed_form(args.n)?,
        LdmMethod::Recursive => LinearDistanceMatrix::recursive(args.n)?,
        LdmMethod::Hadamard => LinearDistanceMatrix::from_hadamard(args.n)?,
    };
    match &args.output {
        Some(path) => matrix.write_csv(create(path)?)?,
        None => matrix.write_csv(out)?,
    }
    Ok(())
}

fn run_gen(args: &GenArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let f = gen::gen(args.n, args.p, args.q, args.seed)?;
    let text = match args.format {
        GenFormat::Human => format!("{f}\n"),
        GenFormat::Masks => f.to_mask_list(),
    };
    match &args.output {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.n > args.verify_threshold {
        return Err(CliError::Usage(format!(
            "n = {} is above the oracle threshold {}",
            args.n, args.verify_threshold
        )));
    }
    let options = SolveOptions {
        order: args.order,
        branch_and_bound: !args.no_bnb,
        node_budget: DEFAULT_NODE_BUDGET,
        verify_threshold: None,
    };
    let mut failed = 0;
    for t in 0..args.trials {
        let seed = args.seed.wrapping_add(t);
        let f = gen::gen(args.n, args.p, args.q, seed)?;
        let report = solver::nonlinearity(&f, &options)?;
        if let Err(e) = cross_check(&f, &report) {
            failed += 1;
            writeln!(out, "seed {seed}: {e}")?;
        }
    }
    writeln!(out, "{}/{} matched", args.trials - failed, args.trials)?;
    if failed > 0 {
        return Err(CliError::Mismatch {
            failed,
            trials: args.trials,
        });
    }
    Ok(())
}

fn run_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let sink: Box<dyn Write + '_> = match &args.csv {
        Some(path) => Box::new(create(path)?),
        None => Box::new(out),
    };
    let mut writer = csv::Writer::from_writer(sink);
    writer.write_record(BenchRecord::HEADER)?;
    for t in 0..args.trials {
        let record = bench_trial(args, args.seed.wrapping_add(t))?;
        writer.write_record(record.fields())?;
        writer.flush()?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("anfnl").chain(args.iter().copied())).unwrap()
    }

    fn run_to_string(args: &[&str]) -> Result<String, CliError> {
        let mut buf = Vec::new();
        run(&parse(args), &mut buf)?;
        Ok(String::from_utf8(buf).unwrap())
    }

    const EXAMPLE: &str = "x1x5 + x4x5 + x1x2x3 + x1x2x4 + x1x2x3x4x5";

    #[test]
    fn json_report_round_trips() {
        let text = run_to_string(&["nl", "-e", EXAMPLE, "--json"]).unwrap();
        let report: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(report.nonlinearity, 9);
        assert_eq!(report.weight, 11);
        let again = serde_json::to_string_pretty(&report).unwrap();
        assert_eq!(again.trim_end(), text.trim_end());
    }

    #[test]
    fn text_output_lists_coefficients_then_tree() {
        let text = run_to_string(&["nl", "-e", EXAMPLE, "--order", "coef-asc"]).unwrap();
        let coeffs = text.find("combined coefficients").unwrap();
        let tree = text.find("distance tree").unwrap();
        assert!(coeffs < tree);
        assert!(text.contains("  0x3 1 8\n"));
        assert!(text.contains("nonlinearity = 9\n"));
        assert!(text.contains("  x5  w = 0x1  W = 14  distance 9\n"));
    }

    #[test]
    fn source_is_required_and_exclusive() {
        assert!(RunConfig::try_parse_from(["anfnl", "nl"]).is_err());
        assert!(RunConfig::try_parse_from(["anfnl", "nl", "-e", "x1", "-f", "a"]).is_err());
        assert!(RunConfig::try_parse_from(["anfnl", "gen", "--n", "4", "--p", "2"]).is_err());
    }

    #[test]
    fn walsh_points_match_spectrum() {
        let points =
            run_to_string(&["walsh", "-e", EXAMPLE, "--w", "1", "0x1f", "--json"]).unwrap();
        let all = run_to_string(&["walsh", "-e", EXAMPLE, "--all", "--json"]).unwrap();
        let points: Vec<serde_json::Value> = serde_json::from_str(&points).unwrap();
        let all: Vec<serde_json::Value> = serde_json::from_str(&all).unwrap();
        assert_eq!(points[0], all[1]);
        assert_eq!(points[1], all[31]);
        assert_eq!(points[0]["walsh"], 14);
    }

    #[test]
    fn exit_codes_follow_error_class() {
        let usage = run(&parse(&["nl", "-e", "x1 +"]), &mut Vec::new()).unwrap_err();
        assert_eq!(usage.exit_code(), 1);
        let budget = run(
            &parse(&["nl", "-e", EXAMPLE, "--budget", "1"]),
            &mut Vec::new(),
        );
        assert_eq!(budget.unwrap_err().exit_code(), 3);
        let big = run(&parse(&["ldm", "--n", "20"]), &mut Vec::new()).unwrap_err();
        assert_eq!(big.exit_code(), 3);
        let mismatch = CliError::Mismatch {
            failed: 1,
            trials: 2,
        };
        assert_eq!(mismatch.exit_code(), 4);
        assert_eq!(
            CliError::Core(anfnl_core::Error::Overflow("beta")).exit_code(),
            2
        );
    }

    #[test]
    fn bench_header_and_rows() {
        let text = run_to_string(&[
            "bench", "--n", "12", "--p", "6", "--trials", "3", "--seed", "5",
        ])
        .unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("n,p,q,seed,k,expected_k,weight,nl,seconds,nodes")
        );
        let seeds: Vec<&str> = lines.map(|l| l.split(',').nth(3).unwrap()).collect();
        assert_eq!(seeds, ["5", "6", "7"]);
    }

    #[test]
    fn affine_names() {
        assert_eq!(affine_name(5, BitMask(1), false), "x5");
        assert_eq!(affine_name(5, BitMask(0b10001), true), "1 + x1 + x5");
        assert_eq!(affine_name(3, BitMask(0), true), "1");
    }
}
