//! `zform`: straighten expressions, run the identity catalog and query symmetric functions.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use zform_cli::app::{self, Config, Format, Outcome};
use zform_cli::CliError;

#[derive(Parser)]
#[command(name = "zform", version, about = "Exact computations in sl2 and the rank-one affine enveloping algebras")]
struct Cli {
    /// Algebra: sl2, a1_1 or a2_2.
    #[arg(long, global = true)]
    algebra: Option<String>,
    /// Truncation order (total degree in u, v). Overrides ZFORM_ORDER.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Output format: text or json.
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Refuse verifications estimated to take longer than this many milliseconds.
    #[arg(long, global = true)]
    ceiling: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite an expression in PBW order and test integrality.
    Straighten { expr: String },
    /// Check a catalog identity, or `all` of them.
    Verify { target: String },
    /// Coordinates of an element in an integral basis.
    Coords {
        expr: String,
        /// paper, mitzman or hat.
        #[arg(long, default_value = "paper")]
        basis: String,
    },
    /// Symmetric function queries.
    Symfun {
        #[command(subcommand)]
        command: SymCommand,
    },
    /// List the catalog tags.
    List,
}

#[derive(Subcommand)]
enum SymCommand {
    /// Whether the members of a series lie in the integral span of a family.
    IsIntegral {
        /// one, epsilon, d or dtilde.
        #[arg(long, default_value = "d")]
        series: String,
        /// hat, tilde or half.
        #[arg(long, default_value = "hat")]
        family: String,
        #[arg(long, default_value_t = 8)]
        upto: usize,
    },
    /// Members of the series with the given coefficient function, in power sums.
    Hat {
        #[arg(long, default_value = "one")]
        series: String,
        #[arg(long, default_value_t = 4)]
        upto: usize,
    },
    /// Members of the tilde series, in power sums.
    Tilde {
        #[arg(long, default_value_t = 4)]
        upto: usize,
    },
    /// Check the Garland basis against monomial symmetric functions.
    Garland {
        #[arg(long, default_value_t = 6)]
        upto: u32,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let cfg = Config {
        algebra: cli.algebra.as_deref().map(app::parse_algebra).transpose()?,
        order: cli.order,
        format: Format::parse(&cli.format)?,
        ceiling_ms: cli.ceiling.unwrap_or(zform::verify::DEFAULT_CEILING_MS),
    };
    match cli.command {
        Command::Straighten { expr } => app::straighten(&expr, &cfg),
        Command::Verify { target } => app::verify_cmd(&target, &cfg),
        Command::Coords { expr, basis } => app::coords(&expr, app::parse_basis(&basis)?, &cfg),
        Command::Symfun { command } => match command {
            SymCommand::IsIntegral { series, family, upto } => app::symfun_is_integral(&series, &family, upto, &cfg),
            SymCommand::Hat { series, upto } => app::symfun_members(&series, upto, &cfg),
            SymCommand::Tilde { upto } => app::symfun_members("epsilon", upto, &cfg),
            SymCommand::Garland { upto } => app::symfun_garland(upto, &cfg),
        },
        Command::List => app::list(&cfg),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let _ = writeln!(std::io::stdout(), "{}", out.output);
            for d in &out.diagnostics {
                eprintln!("error: {d}");
            }
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
