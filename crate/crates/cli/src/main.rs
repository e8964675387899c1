use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tdc_core::families::{verify_family, FamilyKind};
use tdc_core::{
    bounds_report_with, chromatic_number_exact, comparison_report, dc_exact_with, gamma_exact,
    gamma_t_exact, read_dimacs, reduce, tdc_exact_with, write_dimacs, BoundsRecord, Coloring,
    Error, FamilySpec, Graph, SolverConfig, VertexSet,
};

const FAMILY_HELP: &str = "\
Family shorthand (name:params):
  path:N                 path P_N
  cycle:N                cycle C_N (N >= 3)
  complete:N             complete graph K_N
  wheel:N                wheel with rim C_N, hub labeled N
  star:K                 star K_{1,K}, hub labeled 0
  cycle-complement:N     complement of C_N
  path-complement:N      complement of P_N
  multipartite:A,B,...   complete multipartite graph with parts A, B, ...
  random-tree:N[,SEED]   uniform labeled tree (Prüfer, ChaCha8)
  random:N,NUM,DEN[,SEED]  G(N, NUM/DEN) (ChaCha8)

`verify` takes a family name instead: cycle, path, wheel, complete,
multipartite, cycle-complement, path-complement, tree.

Exit status: 0 success, 1 internal error, 2 input error,
3 node budget exhausted (bounds are still printed).";

#[derive(Parser, Debug)]
#[command(name = "tdc", version, about = "Total dominator colorings of small graphs", after_help = FAMILY_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Search node budget for the exact solvers.
    #[arg(long, global = true, env = "TDC_NODE_BUDGET")]
    budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
enum Invariant {
    Chi,
    ChiD,
    ChiDt,
    Gamma,
    GammaT,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph file: DIMACS, or the JSON edge-list form when it ends in `.json`.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,

    /// Family shorthand such as `cycle:10` (see below).
    #[arg(long, value_name = "SPEC")]
    family: Option<FamilySpec>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a family graph as DIMACS (text) or JSON.
    Gen {
        #[arg(long, value_name = "SPEC")]
        family: FamilySpec,
        /// Overrides the seed of a random family.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Compute an invariant exactly, with a witness.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Invariant::ChiDt)]
        invariant: Invariant,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Report every applicable bound on χ_d^t with its certificate.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Compare a family's closed form with the exact solver over a range.
    Verify {
        #[arg(long, value_name = "NAME")]
        family: FamilyKind,
        /// Inclusive range `A..B`.
        #[arg(long, value_parser = parse_range)]
        range: RangeInclusive<usize>,
    },
    /// Add a universal vertex: k-colorability of G becomes
    /// total dominator (k+1)-colorability of the result.
    Reduce {
        #[command(flatten)]
        input: Input,
        /// Target color count; defaults to χ(G).
        #[arg(long)]
        k: Option<usize>,
        /// Output file; defaults to `<input>-reduced.col` next to the input.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Tabulate χ_d^t of P_n, C_n and W_n against the comparison tables.
    Table {
        #[arg(long, value_parser = parse_range)]
        range: RangeInclusive<usize>,
    },
}

impl Invariant {
    fn name(self) -> &'static str {
        match self {
            Invariant::Chi => "chi",
            Invariant::ChiD => "chi_d",
            Invariant::ChiDt => "chi_dt",
            Invariant::Gamma => "gamma",
            Invariant::GammaT => "gamma_t",
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("range `{s}` must look like A..B"))?;
    let a: usize = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start `{a}`"))?;
    let b: usize = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok(a..=b)
}

/// Failure of a command, mapped onto the exit status.
enum Failure {
    Input(String),
    Budget(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            e if e.is_input_error() => Failure::Input(e.to_string()),
            e => Failure::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

/// Writes to stdout; a closed pipe (`tdc ... | head`) ends output quietly.
fn write_stdout(bytes: &[u8]) -> CmdResult {
    match io::stdout().lock().write_all(bytes) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

macro_rules! out {
    ($($arg:tt)*) => {
        write_stdout(format!($($arg)*).as_bytes())?
    };
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        out!($($arg)*);
        write_stdout(b"\n")?
    }};
}

fn with_seed(spec: FamilySpec, seed: Option<u64>) -> FamilySpec {
    match (spec, seed) {
        (FamilySpec::RandomTree { n, .. }, Some(seed)) => FamilySpec::RandomTree { n, seed },
        (FamilySpec::RandomGraph { n, num, den, .. }, Some(seed)) => {
            FamilySpec::RandomGraph { n, num, den, seed }
        }
        (spec, _) => spec,
    }
}

fn load(input: &Input, seed: Option<u64>) -> Result<Graph, Failure> {
    if let Some(spec) = &input.family {
        return Ok(with_seed(spec.clone(), seed).generate()?);
    }
    let path = input.input.as_ref().expect("clap enforces one input");
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let graph = if path.extension().is_some_and(|x| x == "json") {
        serde_json::from_str::<Graph>(&text)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    } else {
        read_dimacs(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    Ok(graph)
}

fn emit_json<T: Serialize>(value: &T) -> CmdResult {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    outln!("{text}");
    Ok(())
}

fn classes_line(c: &Coloring) -> String {
    c.classes()
        .iter()
        .map(|cl| cl.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn config(budget: Option<u64>) -> SolverConfig {
    SolverConfig {
        node_budget: budget,
    }
}

fn gen(family: FamilySpec, seed: Option<u64>, out: Option<PathBuf>, format: Format) -> CmdResult {
    let g = with_seed(family, seed).generate()?;
    let text = match format {
        Format::Text => write_dimacs(&g),
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(&g).map_err(|e| Failure::Internal(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    match out {
        Some(path) => fs::write(path, text)?,
        None => write_stdout(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct SolveOutput {
    invariant: Invariant,
    n: usize,
    value: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Coloring>,
    #[serde(skip_serializing_if = "Option::is_none")]
    set: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower_bound_used: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper_bound_used: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes_explored: Option<u64>,
}

/// What is printed when the search budget runs out.
#[derive(Serialize)]
struct BudgetOutput {
    status: &'static str,
    invariant: Invariant,
    lower: usize,
    upper: usize,
    nodes_explored: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    bounds: Option<BoundsRecord>,
}

fn solve(g: &Graph, invariant: Invariant, cfg: &SolverConfig, format: Format) -> CmdResult {
    let n = g.n();
    let solved = match invariant {
        Invariant::ChiDt => tdc_exact_with(g, cfg),
        Invariant::ChiD => dc_exact_with(g, cfg),
        Invariant::Chi => {
            let (value, witness) = chromatic_number_exact(g);
            return print_solve(
                SolveOutput {
                    invariant,
                    n,
                    value,
                    witness: Some(witness),
                    set: None,
                    lower_bound_used: None,
                    upper_bound_used: None,
                    nodes_explored: None,
                },
                format,
            );
        }
        Invariant::Gamma | Invariant::GammaT => {
            let r = if invariant == Invariant::Gamma {
                gamma_exact(g)
            } else {
                gamma_t_exact(g)?
            };
            return print_solve(
                SolveOutput {
                    invariant,
                    n,
                    value: r.value,
                    witness: None,
                    set: r.witnesses.first().copied(),
                    lower_bound_used: None,
                    upper_bound_used: None,
                    nodes_explored: None,
                },
                format,
            );
        }
    };
    match solved {
        Ok(r) => print_solve(
            SolveOutput {
                invariant,
                n,
                value: r.value,
                witness: Some(r.witness),
                set: None,
                lower_bound_used: Some(r.lower_bound_used),
                upper_bound_used: Some(r.upper_bound_used),
                nodes_explored: Some(r.nodes_explored),
            },
            format,
        ),
        Err(Error::BudgetExceeded {
            lower,
            upper,
            nodes,
        }) => {
            // bounds need no search budget for χ_d^t on connected inputs
            let bounds = if invariant == Invariant::ChiDt && g.is_connected() {
                bounds_report_with(g, cfg).ok()
            } else {
                None
            };
            let out = BudgetOutput {
                status: "budget_exceeded",
                invariant,
                lower,
                upper,
                nodes_explored: nodes,
                bounds,
            };
            match format {
                Format::Json => emit_json(&out)?,
                Format::Text => {
                    let name = invariant.name();
                    outln!("{name} in [{lower}, {upper}] (budget exhausted after {nodes} nodes)");
                    if let Some(b) = &out.bounds {
                        out!("{}", render_bounds(b));
                    }
                }
            }
            Err(Failure::Budget(format!(
                "node budget exhausted after {nodes} nodes"
            )))
        }
        Err(e) => Err(e.into()),
    }
}

fn print_solve(out: SolveOutput, format: Format) -> CmdResult {
    match format {
        Format::Json => emit_json(&out),
        Format::Text => {
            outln!("{} = {}", out.invariant.name(), out.value);
            if let Some(w) = &out.witness {
                outln!("classes: {}", classes_line(w));
            }
            if let Some(s) = &out.set {
                outln!("set: {s}");
            }
            Ok(())
        }
    }
}

fn render_bounds(b: &BoundsRecord) -> String {
    let mut out = format!(
        "lower bound {} (chi {}, gamma_t {})\n",
        b.lower(),
        b.obs_lb.chi,
        b.obs_lb.gamma_t
    );
    if let Some(lb) = b.components_lb {
        out.push_str(&format!("components lower bound {lb}\n"));
    }
    for (name, value) in b.upper_bounds() {
        out.push_str(&format!("{name:<16} {value}\n"));
    }
    out.push_str(&format!("upper bound {}\n", b.upper()));
    out
}

fn bounds(g: &Graph, cfg: &SolverConfig, format: Format) -> CmdResult {
    let record = bounds_report_with(g, cfg)?;
    record.revalidate(g)?;
    match format {
        Format::Json => emit_json(&record),
        Format::Text => {
            out!("{}", render_bounds(&record));
            Ok(())
        }
    }
}

fn verify(
    kind: FamilyKind,
    range: RangeInclusive<usize>,
    cfg: &SolverConfig,
    format: Format,
) -> CmdResult {
    let report = verify_family(kind, range, cfg)?;
    match format {
        Format::Json => emit_json(&report),
        Format::Text => {
            out!("{}", report.render_table());
            Ok(())
        }
    }
}

fn reduced_path(input: &Input, out: Option<PathBuf>) -> Result<PathBuf, Failure> {
    if let Some(out) = out {
        return Ok(out);
    }
    let Some(path) = &input.input else {
        return Err(Failure::Input("reduce --family needs --out".into()));
    };
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("graph");
    Ok(path.with_file_name(format!("{stem}-reduced.col")))
}

#[derive(Serialize)]
struct ReduceOutput<'a> {
    k: usize,
    k_prime: usize,
    apex: usize,
    n: usize,
    reduced_n: usize,
    out: &'a Path,
}

fn reduce_cmd(input: &Input, k: Option<usize>, out: Option<PathBuf>, format: Format) -> CmdResult {
    let g = load(input, None)?;
    let target = reduced_path(input, out)?;
    let k = match k {
        Some(k) => k,
        None => chromatic_number_exact(&g).0.max(1),
    };
    let inst = reduce(&g, k)?;
    fs::write(&target, write_dimacs(&inst.reduced))
        .map_err(|e| Failure::Input(format!("{}: {e}", target.display())))?;
    match format {
        Format::Json => emit_json(&ReduceOutput {
            k: inst.k,
            k_prime: inst.k_prime,
            apex: inst.apex(),
            n: g.n(),
            reduced_n: inst.reduced.n(),
            out: &target,
        }),
        Format::Text => {
            outln!("{} -> {}", inst.k, inst.k_prime);
            outln!("wrote {}", target.display());
            Ok(())
        }
    }
}

fn table(range: RangeInclusive<usize>, cfg: &SolverConfig, format: Format) -> CmdResult {
    let report = comparison_report(range, cfg)?;
    match format {
        Format::Json => emit_json(&report),
        Format::Text => {
            outln!(
                "{:>3} {:>4} {:>4} {:>4}  {:<22} {:<22}",
                "n",
                "P_n",
                "C_n",
                "W_n",
                "P vs C (table/seen)",
                "C vs W (table/seen)"
            );
            for r in &report.rows {
                let pc = format!(
                    "{:?}/{:?}",
                    r.path_vs_cycle_expected, r.path_vs_cycle_observed
                );
                let cw = format!(
                    "{:?}/{:?}",
                    r.cycle_vs_wheel_expected, r.cycle_vs_wheel_observed
                );
                outln!(
                    "{:>3} {:>4} {:>4} {:>4}  {:<22} {:<22}",
                    r.n,
                    r.path,
                    r.cycle,
                    r.wheel,
                    pc,
                    cw
                );
            }
            for (n, which) in &report.errata {
                outln!("disagreement at n = {n} ({which})");
            }
            Ok(())
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    let cfg = config(cli.budget);
    let format = cli.format;
    match cli.command {
        Command::Gen { family, seed, out } => gen(family, seed, out, format),
        Command::Solve {
            input,
            invariant,
            seed,
        } => solve(&load(&input, seed)?, invariant, &cfg, format),
        Command::Bounds { input, seed } => bounds(&load(&input, seed)?, &cfg, format),
        Command::Verify { family, range } => verify(family, range, &cfg, format),
        Command::Reduce { input, k, out } => reduce_cmd(&input, k, out, format),
        Command::Table { range } => table(range, &cfg, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
