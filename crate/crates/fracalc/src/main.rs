use std::io::Write;
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fracalc::selfcheck::DEFAULT_SEED;
use fracalc::{EngineKind, EvalRequest, ExitCode, Failure, Grid, Op, RuleCache};
use fracalc_core::{gamma, Engine};

/// Fractional integrals and derivatives of arbitrary real order.
#[derive(Parser)]
#[command(name = "fracalc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply D^s or J^s to an expression.
    Eval(EvalArgs),
    /// Tabulate D^s or J^s of an expression over a grid, as CSV.
    Table(TableArgs),
    /// Recompute the published factorials of e and pi.
    VerifyConstants,
    /// Run the built-in property suites.
    Selfcheck {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Fault injection: scale gamma(x) by 1 + eps·x in the identity suites.
        #[arg(long, hide = true)]
        perturb_gamma: Option<f64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    D,
    J,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Closed,
    Numeric,
}

#[derive(Args)]
struct OperatorArgs {
    #[arg(long, value_enum, ignore_case = true)]
    op: OpArg,
    #[arg(long, allow_negative_numbers = true)]
    order: f64,
    #[arg(long)]
    expr: String,
    #[arg(long, value_enum, default_value = "closed")]
    engine: EngineArg,
    /// Quadrature nodes for the numeric engine.
    #[arg(long, default_value_t = 64)]
    nodes: usize,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    operator: OperatorArgs,
    #[arg(long, allow_negative_numbers = true)]
    at: Option<f64>,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    operator: OperatorArgs,
    /// <start>:<stop>:<steps>, steps being the number of points.
    #[arg(long)]
    grid: String,
}

impl OperatorArgs {
    fn request(&self, at: Option<f64>) -> EvalRequest {
        EvalRequest {
            op: match self.op {
                OpArg::D => Op::D,
                OpArg::J => Op::J,
            },
            order: self.order,
            expr: self.expr.clone(),
            at,
            engine: match self.engine {
                EngineArg::Closed => EngineKind::Closed,
                EngineArg::Numeric => EngineKind::Numeric,
            },
            nodes: self.nodes,
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    let engine = Engine::new(RuleCache::new());
    match command {
        Command::Eval(args) => {
            let out = fracalc::eval(&args.operator.request(args.at), &engine)?;
            for w in &out.warnings {
                eprintln!("{w}");
            }
            Ok(format!("{}\n", out.text))
        }
        Command::Table(args) => {
            let grid: Grid = args.grid.parse()?;
            let (table, warnings) = fracalc::table(&args.operator.request(None), &grid, &engine)?;
            for w in &warnings {
                eprintln!("{w}");
            }
            Ok(table.to_csv())
        }
        Command::VerifyConstants => {
            let report = fracalc::verify_constants()?;
            if report.passed() {
                Ok(format!("{report}\n"))
            } else {
                println!("{report}");
                Err(Failure::Verification(format!(
                    "{} unflagged constant(s) below the required agreement",
                    report.failures().len()
                )))
            }
        }
        Command::Selfcheck {
            seed,
            perturb_gamma,
        } => {
            let report = match perturb_gamma {
                None => fracalc::selfcheck(seed),
                Some(eps) => {
                    fracalc::selfcheck_with_gamma(seed, |x| Ok(gamma(x)? * (1.0 + eps * x)))
                }
            };
            if report.passed() {
                Ok(format!("{report}\n"))
            } else {
                println!("{report}");
                Err(Failure::Verification("self-check suites failed".into()))
            }
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() {
                ExitCode::Usage
            } else {
                ExitCode::Success
            };
            let _ = err.print();
            process::exit(code as i32);
        }
    };
    match run(cli.command) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                process::exit(ExitCode::Usage as i32);
            }
        }
        Err(failure) => {
            eprintln!("fracalc: {failure}");
            process::exit(failure.exit_code() as i32);
        }
    }
}
