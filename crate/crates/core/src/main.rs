use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use onevertex::cli::{self, CliError, Family, Format, SequenceKind, TableSpec};
use onevertex::MapType;

/// Exact counts of one-vertex maps and pre-maps.
#[derive(Parser)]
#[command(name = "onevertex", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of non-isomorphic one-vertex (pre-)maps of one type and valence.
    Count {
        /// Type code, e.g. sdg or SDG.
        #[arg(long = "type")]
        ty: MapType,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        valence: u64,
    },
    /// Table of counts for the four pre-map or map types.
    Table {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 20)]
        d_max: usize,
        #[arg(long, default_value = "tsv")]
        format: Format,
    },
    /// One value per line: pi, f, F, R, i, p or g.
    Sequence {
        #[arg(long)]
        kind: SequenceKind,
        #[arg(long = "type")]
        ty: Option<MapType>,
        #[arg(long)]
        n_max: usize,
    },
    /// Compare closed forms against brute-force orbit counts.
    Verify {
        #[arg(long, default_value_t = 8)]
        d_max: usize,
        /// Allow valences up to 10 (also ONEVERTEX_EXPENSIVE=1).
        #[arg(long)]
        expensive: bool,
    },
    /// Compare a sequence against an OEIS b-file.
    OeisCheck {
        /// One of A000898, A115329, A047974, A052714, A052734, A054499.
        #[arg(long)]
        id: String,
        #[arg(long)]
        bfile: PathBuf,
    },
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Count { ty, valence } => {
            print!("{}", cli::cmd_count(ty, valence as usize)?);
        }
        Command::Table {
            family,
            d_max,
            format,
        } => {
            print!(
                "{}",
                cli::render_table(&TableSpec {
                    family,
                    d_max,
                    format
                })?
            );
        }
        Command::Sequence { kind, ty, n_max } => {
            print!("{}", cli::cmd_sequence(kind, ty, n_max)?);
        }
        Command::Verify { d_max, expensive } => {
            let report = cli::run_verify(d_max, expensive || cli::expensive_from_env())?;
            print!("{}", report.render());
            return Ok(if report.ok() { 0 } else { 1 });
        }
        Command::OeisCheck { id, bfile } => {
            let report = cli::cmd_oeis_check(&id, &bfile)?;
            print!("{report}");
            return Ok(if report.ok() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
