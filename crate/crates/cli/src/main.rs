//! Command-line front end: scene files in, tower reports out.

mod dispatch;
mod scene;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "blowup-calc", version, about = "Chart-level blowup calculus over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrictArg {
    Quotient,
    Saturate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DeformKindArg {
    Single,
    Multiple,
    Composite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderOfBlowups {
    ZFirst,
    YFirst,
}

#[derive(Subcommand)]
enum Command {
    /// Blow up an ambient ring along a declared subscheme.
    Blowup {
        #[arg(long)]
        scene: String,
        /// Name of the center subscheme.
        #[arg(long)]
        center: String,
        /// Also report the strict transform of this subscheme.
        #[arg(long)]
        transform: Option<String>,
        #[arg(long, value_enum, default_value_t = StrictArg::Saturate)]
        strict_mode: StrictArg,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = OutputKind::Text)]
        output: OutputKind,
    },
    /// Blow up a lattice diagram of subschemes.
    PosetBlowup {
        #[arg(long)]
        scene: String,
        #[arg(long)]
        diagram: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = OutputKind::Text)]
        output: OutputKind,
    },
    /// Pushout-blowup of an excessive square W ⊆ Z, Y ⊆ ambient.
    PushoutBlowup {
        #[arg(long)]
        scene: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        z: String,
        #[arg(long)]
        y: String,
        #[arg(long, value_enum, default_value_t = OrderOfBlowups::ZFirst)]
        recipe: OrderOfBlowups,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = OutputKind::Text)]
        output: OutputKind,
    },
    /// Deformation spaces: single, multiple or composite.
    Deform {
        #[arg(long)]
        scene: String,
        #[arg(long, value_enum)]
        kind: DeformKindArg,
        /// Center subscheme (single), family name (multiple) or chain
        /// name (composite).
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = OutputKind::Text)]
        output: OutputKind,
    },
    /// Parse a scene file and echo its canonical serialization.
    Scene {
        #[arg(long)]
        scene: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
    /// Run identity checks from the catalog.
    Verify {
        /// A registered check name.
        name: Option<String>,
        /// Run the whole suite, optionally restricted to a tag.
        #[arg(long, num_args = 0..=1, default_missing_value = "")]
        suite: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputKind::Text)]
        output: OutputKind,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
