use clap::Parser;
use paraquat_cli::{emit_report, exit_status, run_suite, CliError, Config, Format, Suite};
use std::path::PathBuf;
use std::process::ExitCode;

/// Run the paraquat verification suites and report residuals.
#[derive(Parser, Debug)]
#[command(name = "paraquat", version)]
struct Args {
    /// algebra, linalg, forms, curvature, projspace, reduce-s1, reduce-pq or all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Override every floating tolerance
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Module rank
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    p: u64,
    #[arg(long, default_value_t = 2)]
    q: u64,
    /// Level value as `a,b,c`
    #[arg(long, default_value = "-1,0,0", allow_hyphen_values = true)]
    xi: String,
    /// json or text
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Force rational arithmetic where a suite supports it
    #[arg(long)]
    exact: bool,
}

fn parse_xi(s: &str) -> Result<[f64; 3], CliError> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::InvalidConfig(format!("bad --xi '{s}'")))?;
    parts.try_into().map_err(|_| CliError::InvalidConfig(format!("--xi needs three components, got '{s}'")))
}

fn run(args: Args) -> Result<i32, CliError> {
    let suite: Suite = args.suite.parse()?;
    let format: Format = args.format.parse()?;
    let config = Config {
        seed: args.seed,
        tol: args.tol,
        samples: args.samples,
        n: args.n,
        p: args.p,
        q: args.q,
        xi: parse_xi(&args.xi)?,
        exact: args.exact,
    };
    let reports = run_suite(suite, &config)?;
    emit_report(&reports, suite, &config, format, args.out.as_deref())?;
    Ok(exit_status(&reports))
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
