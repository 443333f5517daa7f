//! cqsym: cubic and quartic Jacobi symbols from the command line.
//!
//! Exit codes: 0 success, 2 argument/parse errors, 3 domain or contract
//! violations, 4 verification failure, 5 step cap exceeded.

mod bench;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cqsym_core::adversary::{even_cubic_bad, even_quartic_bad, step4_stress, xi_cubic_seq, xi_quartic_seq};
use cqsym_core::residue::{
    auto_threshold, norm_equation_eis, norm_equation_gauss, partition_table, residue_test,
    residue_test_batch, PartitionKind, Power, Strategy,
};
use cqsym_core::ring::{format_element, parse_element, EisensteinInt, GaussianInt, RingElement};
use cqsym_core::symbols::{
    cubic_jacobi, cubic_jacobi_even, quartic_jacobi, quartic_jacobi_even, Backend, EvenOutcome,
    RunTrace, DEFAULT_STEP_CAP,
};

/// Error carrying the process exit code.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn parse(msg: impl Into<String>) -> Self {
        Failure { code: 2, message: msg.into() }
    }
    fn domain(msg: impl Into<String>) -> Self {
        Failure { code: 3, message: msg.into() }
    }
    fn verification(msg: impl Into<String>) -> Self {
        Failure { code: 4, message: msg.into() }
    }
    fn cap(msg: impl Into<String>) -> Self {
        Failure { code: 5, message: msg.into() }
    }
}

type CmdResult = Result<(), Failure>;

#[derive(Parser)]
#[command(
    name = "cqsym",
    about = "Cubic and quartic Jacobi symbols via Euclidean-type algorithms",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Eis,
    Gauss,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgArg {
    /// Division with ramified-factor removal (Williams-Holte / Eisenstein).
    Wh,
    /// Even-quotient variant (quotients divisible by the ramified prime).
    Even,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Newton,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Newton => Backend::Newton,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PowerArg {
    #[value(name = "3")]
    Cubic,
    #[value(name = "4")]
    Quartic,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Euler,
    Reciprocity,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum NormeqKind {
    Eis,
    Gauss,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    #[value(name = "s2_3t2")]
    S2Plus3T2,
    #[value(name = "x2_y2")]
    X2PlusY2,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum FamilyArg {
    Xi3,
    Xi4,
    Step4,
    Even3,
    Even4,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum SuiteArg {
    Cubic,
    Quartic,
    Even,
    Residue,
    Division,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Jacobi symbol (alpha / beta).
    Symbol {
        #[arg(long, value_enum)]
        ring: RingArg,
        #[arg(long, value_enum, default_value = "wh")]
        alg: AlgArg,
        #[arg(long, value_enum, default_value = "exact")]
        backend: BackendArg,
        /// Print per-step records and the final gcd.
        #[arg(long)]
        trace: bool,
        /// Step cap for the even-quotient algorithm.
        #[arg(long, default_value_t = DEFAULT_STEP_CAP)]
        cap: u64,
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
    },
    /// Test power residues modulo a rational prime.
    Residue {
        #[arg(long, value_enum)]
        power: PowerArg,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
        p: u64,
        #[arg(required = true)]
        values: Vec<u64>,
    },
    /// Solve the norm equation for a prime.
    Normeq {
        #[arg(long, value_enum)]
        kind: NormeqKind,
        p: u64,
    },
    /// Tabulate quadratic partitions over a prime range.
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long)]
        max: u64,
        #[arg(long)]
        header: bool,
    },
    /// Print a worst-case input pair.
    Adversary {
        #[arg(long, value_enum)]
        family: FamilyArg,
        n: u64,
    },
    /// Run instrumented benchmarks over an input family.
    Bench {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Comma-separated list of sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<u64>,
        #[arg(long, value_enum, default_value = "exact")]
        backend: BackendArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Append fitted log-log exponents.
        #[arg(long)]
        fit: bool,
    },
    /// Run an invariant suite; exits 4 on the first counterexample.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        max_norm: u64,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> CmdResult {
    match cmd {
        Command::Symbol {
            ring,
            alg,
            backend,
            trace,
            cap,
            alpha,
            beta,
        } => cmd_symbol(ring, alg, backend.into(), trace, cap, &alpha, &beta),
        Command::Residue {
            power,
            strategy,
            p,
            values,
        } => cmd_residue(power, strategy, p, &values),
        Command::Normeq { kind, p } => cmd_normeq(kind, p),
        Command::Table { kind, max, header } => cmd_table(kind, max, header),
        Command::Adversary { family, n } => cmd_adversary(family, n),
        Command::Bench {
            family,
            sizes,
            backend,
            format,
            fit,
        } => bench::cmd_bench(family, &sizes, backend.into(), format, fit),
        Command::Verify {
            suite,
            max_norm,
            seed,
        } => verify::cmd_verify(suite, max_norm, seed),
    }
}

fn print_trace<R: RingElement>(trace: &RunTrace<R>) {
    for (j, s) in trace.steps.iter().enumerate() {
        println!(
            "step {}: q={} m={} n={} bits(alpha)={} bits(beta)={} bits(q)={}",
            j + 1,
            format_element(&s.q),
            s.m,
            s.n,
            s.bitlen_alpha,
            s.bitlen_beta,
            s.bitlen_q
        );
    }
    println!("gcd={}", format_element(&trace.gcd));
    let c = &trace.counters;
    println!(
        "cost: mul={} add={} div_steps={} ramified_removals={} remainder_volume={}",
        c.mul_cost, c.add_cost, c.div_steps, c.ramified_removals, c.remainder_volume
    );
}

fn cmd_symbol(
    ring: RingArg,
    alg: AlgArg,
    backend: Backend,
    trace: bool,
    cap: u64,
    alpha: &str,
    beta: &str,
) -> CmdResult {
    match ring {
        RingArg::Eis => {
            let a: EisensteinInt =
                parse_element(alpha).map_err(|e| Failure::parse(format!("ALPHA: {e}")))?;
            let b: EisensteinInt =
                parse_element(beta).map_err(|e| Failure::parse(format!("BETA: {e}")))?;
            match alg {
                AlgArg::Wh => {
                    let (sym, t) =
                        cubic_jacobi(&a, &b, backend).map_err(|e| Failure::domain(e.to_string()))?;
                    if trace {
                        print_trace(&t);
                    }
                    println!("{sym}");
                }
                AlgArg::Even => {
                    match cubic_jacobi_even(&a, &b, cap).map_err(|e| Failure::domain(e.to_string()))? {
                        EvenOutcome::Value(sym, t) => {
                            if trace {
                                print_trace(&t);
                            }
                            println!("{sym}");
                        }
                        EvenOutcome::CapExceeded(t) => {
                            if trace {
                                print_trace(&t);
                            }
                            return Err(Failure::cap(format!(
                                "step cap {cap} exceeded after {} divisions",
                                t.steps.len()
                            )));
                        }
                    }
                }
            }
        }
        RingArg::Gauss => {
            let a: GaussianInt =
                parse_element(alpha).map_err(|e| Failure::parse(format!("ALPHA: {e}")))?;
            let b: GaussianInt =
                parse_element(beta).map_err(|e| Failure::parse(format!("BETA: {e}")))?;
            match alg {
                AlgArg::Wh => {
                    let (sym, t) =
                        quartic_jacobi(&a, &b, backend).map_err(|e| Failure::domain(e.to_string()))?;
                    if trace {
                        print_trace(&t);
                    }
                    println!("{sym}");
                }
                AlgArg::Even => {
                    match quartic_jacobi_even(&a, &b, cap).map_err(|e| Failure::domain(e.to_string()))? {
                        EvenOutcome::Value(sym, t) => {
                            if trace {
                                print_trace(&t);
                            }
                            println!("{sym}");
                        }
                        EvenOutcome::CapExceeded(t) => {
                            if trace {
                                print_trace(&t);
                            }
                            return Err(Failure::cap(format!(
                                "step cap {cap} exceeded after {} divisions",
                                t.steps.len()
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn cmd_residue(power: PowerArg, strategy: StrategyArg, p: u64, values: &[u64]) -> CmdResult {
    let power = match power {
        PowerArg::Cubic => Power::Cubic,
        PowerArg::Quartic => Power::Quartic,
    };
    let answers: Vec<bool> = match strategy {
        StrategyArg::Reciprocity => {
            residue_test_batch(p, values, power).map_err(|e| Failure::domain(e.to_string()))?
        }
        StrategyArg::Euler => values
            .iter()
            .map(|&a| residue_test(a, p, power, Strategy::Euler))
            .collect::<Result<_, _>>()
            .map_err(|e| Failure::domain(e.to_string()))?,
        StrategyArg::Auto => {
            if values.len() >= auto_threshold(p) {
                residue_test_batch(p, values, power).map_err(|e| Failure::domain(e.to_string()))?
            } else {
                values
                    .iter()
                    .map(|&a| residue_test(a, p, power, Strategy::Euler))
                    .collect::<Result<_, _>>()
                    .map_err(|e| Failure::domain(e.to_string()))?
            }
        }
    };
    for (a, yes) in values.iter().zip(answers) {
        println!("{a} {}", if yes { "yes" } else { "no" });
    }
    Ok(())
}

fn cmd_normeq(kind: NormeqKind, p: u64) -> CmdResult {
    match kind {
        NormeqKind::Eis => {
            let (sol, _) = norm_equation_eis(p).map_err(|e| Failure::domain(e.to_string()))?;
            println!("{} {} {} {} {}", sol.p, sol.s, sol.t, sol.x, sol.y);
        }
        NormeqKind::Gauss => {
            let (sol, _) = norm_equation_gauss(p).map_err(|e| Failure::domain(e.to_string()))?;
            println!("{} {} {}", sol.p, sol.x, sol.y);
        }
    }
    Ok(())
}

fn cmd_table(kind: TableKind, max: u64, header: bool) -> CmdResult {
    let (kind, head) = match kind {
        TableKind::S2Plus3T2 => (PartitionKind::S2Plus3T2, "p s t"),
        TableKind::X2PlusY2 => (PartitionKind::X2PlusY2, "p x y"),
    };
    let rows = partition_table(max, kind).map_err(|e| Failure::domain(e.to_string()))?;
    if header {
        println!("{head}");
    }
    for row in rows {
        println!("{} {} {}", row.p, row.a, row.b);
    }
    Ok(())
}

fn cmd_adversary(family: FamilyArg, n: u64) -> CmdResult {
    let (alpha, beta) = match family {
        FamilyArg::Xi3 => {
            if n < 1 {
                return Err(Failure::domain("xi3 needs n >= 1"));
            }
            let n32 = u32::try_from(n).map_err(|_| Failure::domain("n too large"))?;
            let seq = xi_cubic_seq(n32);
            (
                format_element(&seq[n as usize]),
                format_element(&seq[n as usize - 1]),
            )
        }
        FamilyArg::Xi4 => {
            if n < 1 {
                return Err(Failure::domain("xi4 needs n >= 1"));
            }
            let n32 = u32::try_from(n).map_err(|_| Failure::domain("n too large"))?;
            let seq = xi_quartic_seq(n32);
            (
                format_element(&seq[n as usize]),
                format_element(&seq[n as usize - 1]),
            )
        }
        FamilyArg::Step4 => {
            if n < 1 {
                return Err(Failure::domain("step4 needs m >= 1"));
            }
            let m = u32::try_from(n).map_err(|_| Failure::domain("m too large"))?;
            let (a, b) = step4_stress(m);
            (format_element(&a), format_element(&b))
        }
        FamilyArg::Even3 => {
            if n < 1 {
                return Err(Failure::domain("even3 needs k >= 1"));
            }
            let (a, b) = even_cubic_bad(n);
            (format_element(&a), format_element(&b))
        }
        FamilyArg::Even4 => {
            if n < 2 {
                return Err(Failure::domain("even4 needs m >= 2"));
            }
            let (a, b) = even_quartic_bad(n);
            (format_element(&a), format_element(&b))
        }
    };
    println!("{alpha} {beta}");
    Ok(())
}
