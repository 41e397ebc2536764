use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use oddzeta::harness::{
    self, Command, Format, RunConfig, DEFAULT_NODES, DEFAULT_TERMS, TABLE2_DEFAULT_NS,
    TABLE3_DEFAULT_NS,
};
use oddzeta::zeta::Method;
use oddzeta::Error;

/// Riemann zeta at odd integers from neighbouring even values, with
/// reference and competitor evaluators.
#[derive(Parser, Debug)]
#[command(name = "oddzeta", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Working precision in significant decimal digits (at least 20)
    #[arg(long, global = true, env = "ODDZETA_DIGITS", default_value_t = 40)]
    digits: u32,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Pretty)]
    format: OutputFormat,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// List known discrepancies between published and recomputed values
    #[arg(long, global = true)]
    paper_quirks: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate a single zeta value
    Compute {
        /// Argument, integer or real, at least 2
        #[arg(long)]
        s: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Reference)]
        method: MethodArg,
        #[command(flatten)]
        competitor: CompetitorArgs,
    },
    /// Geometric-mean estimates of zeta(3..21) against the reference
    Table1,
    /// Estimator errors for large n, each row at n + 30 digits
    Table2 {
        #[arg(long, value_delimiter = ',', default_values_t = TABLE2_DEFAULT_NS)]
        ns: Vec<u32>,
    },
    /// Errors of the integral, series and geometric-mean methods
    Table3 {
        #[arg(long, value_delimiter = ',', default_values_t = TABLE3_DEFAULT_NS)]
        ns: Vec<u32>,
        #[command(flatten)]
        competitor: CompetitorArgs,
    },
    /// Least-squares fit of lg(error) against n
    Fit {
        #[arg(long, value_delimiter = ',', default_values_t = TABLE2_DEFAULT_NS)]
        ns: Vec<u32>,
    },
    /// Asymptotic formula over a grid of s, with errors at integer points
    Figure {
        #[arg(long, default_value_t = 2.0)]
        min: f64,
        #[arg(long, default_value_t = 12.0)]
        max: f64,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
    },
}

#[derive(Args, Debug)]
struct CompetitorArgs {
    /// Hermite nodes for the integral method
    #[arg(long, default_value_t = DEFAULT_NODES)]
    nodes: u32,
    /// Retained terms for the series method
    #[arg(long, default_value_t = DEFAULT_TERMS)]
    terms: u32,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
    Pretty,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
            OutputFormat::Pretty => Format::Pretty,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    ExactEven,
    Reference,
    Geomean,
    BoundsL,
    BoundsR,
    Asymptotic,
    Integral,
    Series,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::ExactEven => Method::ExactEven,
            MethodArg::Reference => Method::Reference,
            MethodArg::Geomean => Method::Geomean,
            MethodArg::BoundsL => Method::BoundsL,
            MethodArg::BoundsR => Method::BoundsR,
            MethodArg::Asymptotic => Method::Asymptotic,
            MethodArg::Integral => Method::Integral,
            MethodArg::Series => Method::Series,
        }
    }
}

fn to_config(cli: &Cli) -> RunConfig {
    let command = match &cli.command {
        Cmd::Compute { s, method, competitor } => Command::Compute {
            s: *s,
            method: (*method).into(),
            nodes: competitor.nodes,
            terms: competitor.terms,
        },
        Cmd::Table1 => Command::Table1,
        Cmd::Table2 { ns } => Command::Table2 { ns: ns.clone() },
        Cmd::Table3 { ns, competitor } => Command::Table3 {
            ns: ns.clone(),
            nodes: competitor.nodes,
            terms: competitor.terms,
        },
        Cmd::Fit { ns } => Command::Fit { ns: ns.clone() },
        Cmd::Figure { min, max, step } => Command::Figure { min: *min, max: *max, step: *step },
    };
    RunConfig { command, digits: cli.digits, paper_quirks: cli.paper_quirks }
}

fn execute(cli: &Cli) -> Result<(), Error> {
    let config = to_config(cli);
    info!("running {} at {} digits", config.command.name(), config.digits);
    let report = harness::run(&config)?;
    let format = Format::from(cli.format);
    let text = report.render(format)?;
    // CSV stays machine-readable; notes go to stderr
    if format == Format::Csv {
        for note in &report.footnotes {
            eprintln!("note: {note}");
        }
    }
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let payload = serde_json::json!({ "error": { "kind": e.kind(), "message": e.to_string() } });
            eprintln!("{payload}");
            ExitCode::FAILURE
        }
    }
}
