mod commands;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "braidkit", version, about = "Exact computations with braided groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Degree bound for tabulation and verification.
    #[arg(long, global = true, default_value_t = 4)]
    degree: usize,

    /// Coefficient field: `transcendental` or `cyclotomic:m`.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<braidkit::FieldContext>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One JSON object per line.
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an expression to normal form.
    Normalform { input: String, expr: String },
    /// Run every axiom check the input carries.
    Verify { input: String },
    /// Braiding between two objects, or of one object with itself.
    Braid {
        first: String,
        second: Option<String>,
        /// Print the table on generator pairs instead of checking it.
        #[arg(long)]
        pairs: bool,
    },
    /// Transmute a dual quasitriangular Hopf algebra into a braided group.
    Transmute {
        input: String,
        /// Compare the result with this braided group, generator by generator.
        #[arg(long)]
        reconcile: Option<String>,
    },
    /// Bosonise a braided group in modules or comodules.
    Bosonise { input: String },
    /// Biproduct from the crossed module induced by a braided group's ambient data.
    Biproduct { input: String },
    /// Twist a right comodule braided group by a cocycle on its host.
    Twist {
        input: String,
        /// Exponent matrix `[[e11,...],...]` for the cocycle `q^e` on a group host.
        #[arg(long, conflicts_with = "cocycle")]
        exponents: Option<String>,
        /// A host whose description carries a `[cocycle]` section.
        #[arg(long)]
        cocycle: Option<String>,
    },
    /// Square-root decomposition of a group bicharacter and the twisted bicharacter.
    ColourTwist { input: String },
    /// The braided automorphism group of a right comodule braided group.
    Automorphism { input: String },
    /// Solve for the host bicharacter from a carrier's explicit braiding.
    DeriveRmatrix { host: String, carrier: String },
    /// List catalog entries, or print one.
    Catalog { name: Option<String> },
}

fn parse_field(s: &str) -> Result<braidkit::FieldContext, String> {
    braidkit::FieldContext::parse(s).ok_or_else(|| format!("unknown field `{s}`"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = commands::Opts { degree: cli.degree, field: cli.field };
    let result = match &cli.command {
        Command::Normalform { input, expr } => commands::normalform(&opts, input, expr),
        Command::Verify { input } => commands::verify(&opts, input),
        Command::Braid { first, second, pairs } => commands::braid(&opts, first, second.as_deref(), *pairs),
        Command::Transmute { input, reconcile } => commands::transmute(&opts, input, reconcile.as_deref()),
        Command::Bosonise { input } => commands::bosonise(&opts, input),
        Command::Biproduct { input } => commands::biproduct(&opts, input),
        Command::Twist { input, exponents, cocycle } => {
            commands::twist(&opts, input, exponents.as_deref(), cocycle.as_deref())
        }
        Command::ColourTwist { input } => commands::colour_twist(&opts, input),
        Command::Automorphism { input } => commands::automorphism(&opts, input),
        Command::DeriveRmatrix { host, carrier } => commands::derive_rmatrix(&opts, host, carrier),
        Command::Catalog { name } => commands::catalog(name.as_deref()),
    };
    let out = match result {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = out.render(cli.format);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if out.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
