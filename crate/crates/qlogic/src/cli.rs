//! The `qlogic` command surface.
//!
//! Subcommands: `eval` (formula against a context file, any semantics),
//! `axioms` (randomized weak-Heyting suite), `di` (distributive-ideal
//! completion of a finite lattice), `iso` (f/g/r roundtrip properties),
//! `bell` (Born values, violation scan, classical sweep) and `witness`
//! (distributivity failure in L(ℂ^d)).
//!
//! Exit codes: 0 = success / all properties hold, 1 = a property failed
//! (a counterexample is printed), 2 = usage or parse error. Output is
//! line-oriented `key=value`.

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};

use crate::bell::{
    bell_sides, classical_satisfies, scan_violation, BellConfig, ClassicalModel, SingletSource,
};
use crate::context::{eval, Context, Semantics};
use crate::formula::parse;
use crate::ideal::{DiCompletion, FiniteLattice};
use crate::subspace::distributivity_witness;
use crate::suite::{iso_suite, weak_heyting_suite, AxiomsReport, IsoReport};

#[derive(Parser)]
#[command(
    name = "qlogic",
    about = "Quantum, classical and weakly intuitionistic logic on C^d",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula against a context file under a chosen semantics.
    Eval {
        /// Context file declaring the space and named entities.
        #[arg(long)]
        context: PathBuf,
        /// The formula text, e.g. "~(A & B) -> C".
        #[arg(long)]
        formula: String,
        /// quantum, weak-heyting or classical.
        #[arg(long)]
        semantics: Semantics,
    },
    /// Run the randomized weak-Heyting axiom suite.
    Axioms {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enumerate the distributive-ideal completion of a finite lattice.
    Di {
        /// Built-in name (mo1, mo2, mo3, bool2) or a lattice file path.
        #[arg(long)]
        lattice: String,
        /// Also print the Heyting implication and negation tables.
        #[arg(long)]
        tables: bool,
    },
    /// Check the ray-set/ideal isomorphism proof steps on random instances.
    Iso {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Born values for the singlet and the Bell-type inequality.
    #[command(group(
        ArgGroup::new("mode")
            .required(true)
            .args(["angles", "scan", "classical_sweep"]),
    ))]
    Bell {
        /// Four planar angles A1,A2,B1,B2 (radians unless --degrees).
        #[arg(long, value_delimiter = ',')]
        angles: Option<Vec<f64>>,
        /// Interpret --angles in degrees.
        #[arg(long)]
        degrees: bool,
        /// Grid-search planar axes at the given resolution.
        #[arg(long)]
        scan: Option<usize>,
        /// Check this many random rational classical models.
        #[arg(long)]
        classical_sweep: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Produce and verify a distributivity-failure triple in L(C^d).
    Witness {
        #[arg(long)]
        dim: usize,
    },
}

/// Entry point for the binary: run on the process arguments, print to the
/// standard streams, return the exit code.
pub fn run_main() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let mut stdout = std::io::stdout();
    run_command(args, &mut stdout)
}

/// Run on explicit argv, writing the report to `out`. Returns the exit code.
pub fn run_command<W: Write>(argv: Vec<String>, out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successful terminations, not usage errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(out, "error={message}");
            2
        }
    }
}

fn dispatch<W: Write>(command: Command, out: &mut W) -> Result<i32, String> {
    match command {
        Command::Eval { context, formula, semantics } => {
            let text = std::fs::read_to_string(&context)
                .map_err(|e| format!("cannot read {}: {e}", context.display()))?;
            let ctx = Context::parse(&text).map_err(|e| e.to_string())?;
            let ast = parse(&formula).map_err(|e| e.to_string())?;
            let value = eval(&ast, &ctx, semantics).map_err(|e| e.to_string())?;
            emit(out, "semantics", semantics);
            emit(out, "formula", &ast);
            emit(out, "result", value);
            Ok(0)
        }
        Command::Axioms { dim, trials, seed } => {
            let report = weak_heyting_suite(dim, trials, seed);
            Ok(report_axioms(out, &report))
        }
        Command::Di { lattice, tables } => {
            let l = load_lattice(&lattice)?;
            let di = DiCompletion::new(&l).map_err(|e| e.to_string())?;
            emit(out, "lattice", &lattice);
            emit(out, "elements", l.n());
            emit(out, "count", di.count());
            emit(out, "distributive", di.is_distributive());
            emit(out, "boolean", di.is_boolean());
            if tables {
                for (i, a) in di.ideals().iter().enumerate() {
                    emit(out, &format!("ideal[{i}]"), format!("{a:?}"));
                }
                for (i, a) in di.ideals().iter().enumerate() {
                    let row: Vec<String> = di
                        .ideals()
                        .iter()
                        .map(|b| index_of(&di, &di.rpc(a, b)).to_string())
                        .collect();
                    emit(out, &format!("rpc[{i}]"), row.join(","));
                }
                let negs: Vec<String> = di
                    .ideals()
                    .iter()
                    .map(|a| index_of(&di, &di.neg(a)).to_string())
                    .collect();
                emit(out, "neg", negs.join(","));
            }
            Ok(0)
        }
        Command::Iso { dim, trials, seed } => {
            let report = iso_suite(dim, trials, seed);
            Ok(report_iso(out, &report))
        }
        Command::Bell { angles, degrees, scan, classical_sweep, seed } => {
            if let Some(angles) = angles {
                if angles.len() != 4 {
                    return Err(format!(
                        "--angles needs exactly four values A1,A2,B1,B2 (got {})",
                        angles.len()
                    ));
                }
                let factor = if degrees { std::f64::consts::PI / 180.0 } else { 1.0 };
                let config = BellConfig::planar(
                    angles[0] * factor,
                    angles[1] * factor,
                    angles[2] * factor,
                    angles[3] * factor,
                );
                let sides = bell_sides(&SingletSource::new(config));
                emit(out, "lhs", format!("{:.7}", sides.lhs));
                emit(out, "rhs", format!("{:.7}", sides.rhs));
                emit(out, "margin", format!("{:.7}", sides.margin()));
                emit(out, "violated", sides.margin() > 0.0);
                Ok(0)
            } else if let Some(resolution) = scan {
                let result = scan_violation(resolution).map_err(|e| e.to_string())?;
                emit(out, "resolution", resolution);
                let degs: Vec<String> = result
                    .angles
                    .iter()
                    .map(|a| format!("{:.3}", a.to_degrees()))
                    .collect();
                emit(out, "angles_deg", degs.join(","));
                emit(out, "lhs", format!("{:.7}", result.sides.lhs));
                emit(out, "rhs", format!("{:.7}", result.sides.rhs));
                emit(out, "margin", format!("{:.7}", result.sides.margin()));
                Ok(0)
            } else {
                let count = classical_sweep.expect("clap group guarantees one mode");
                use rand::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                for k in 0..count {
                    let model = ClassicalModel::random(&mut rng);
                    if !classical_satisfies(&model) {
                        emit(out, "violating_model_index", k);
                        let (lhs, rhs) = model.bell_sides_exact();
                        emit(out, "lhs", lhs);
                        emit(out, "rhs", rhs);
                        return Ok(1);
                    }
                }
                emit(out, "models", count);
                emit(out, "seed", seed);
                emit(out, "violations", 0);
                Ok(0)
            }
        }
        Command::Witness { dim } => {
            let (k1, k2, k3) = distributivity_witness(dim).map_err(|e| e.to_string())?;
            let lhs = k1.meet(&k2.join(&k3).expect("uniform dims")).expect("uniform dims");
            let rhs = k1
                .meet(&k2)
                .expect("uniform dims")
                .join(&k1.meet(&k3).expect("uniform dims"))
                .expect("uniform dims");
            emit(out, "k1", &k1);
            emit(out, "k2", &k2);
            emit(out, "k3", &k3);
            emit(out, "lhs", &lhs);
            emit(out, "rhs", &rhs);
            emit(out, "equal", lhs == rhs);
            Ok(if lhs == rhs { 1 } else { 0 })
        }
    }
}

fn emit<W: Write>(out: &mut W, key: &str, value: impl Display) {
    let _ = writeln!(out, "{key}={value}");
}

fn index_of(di: &DiCompletion<'_>, ideal: &crate::ideal::IdealSet) -> usize {
    di.ideals()
        .iter()
        .position(|c| c == ideal)
        .expect("completion operations stay inside the enumeration")
}

fn load_lattice(spec: &str) -> Result<FiniteLattice, String> {
    if let Some(l) = FiniteLattice::by_name(spec) {
        return Ok(l);
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| format!("`{spec}` is not a built-in lattice and cannot be read: {e}"))?;
    FiniteLattice::parse(&text).map_err(|e| e.to_string())
}

/// Print the axiom report; exit 1 when any law failed.
pub fn report_axioms<W: Write>(out: &mut W, report: &AxiomsReport) -> i32 {
    emit(out, "dim", report.dim);
    emit(out, "seed", report.seed);
    let _ = writeln!(
        out,
        "axioms={}/4 hold trials={}",
        report.axioms_passed(),
        report.trials
    );
    emit(out, "bottom_law", if report.bottom_law_holds() { "hold" } else { "fail" });
    if report.all_hold() {
        0
    } else {
        for f in &report.failures {
            let _ = writeln!(
                out,
                "counterexample law={} s1={} s2={} s3={}",
                f.law, f.s1, f.s2, f.s3
            );
        }
        1
    }
}

/// Print the iso report; exit 1 when any property failed.
pub fn report_iso<W: Write>(out: &mut W, report: &IsoReport) -> i32 {
    emit(out, "dim", report.dim);
    emit(out, "seed", report.seed);
    emit(out, "trials", report.trials);
    if report.all_hold() {
        emit(out, "roundtrip", "ok");
        0
    } else {
        for f in &report.failures {
            emit(out, "counterexample", f);
        }
        1
    }
}
