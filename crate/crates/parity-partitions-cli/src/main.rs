//! Command-line front end: counting, enumeration, map application and
//! inversion, class membership, sequence export, Ferrers rendering, and the
//! verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument or parse error
//! (clap's default), 3 domain violation or not-in-image.

use clap::{Parser, Subcommand, ValueEnum};
use parity_partitions::classes::{self, ClassSpec};
use parity_partitions::maps::NOT_IN_IMAGE;
use parity_partitions::verify::{self, Suite};
use parity_partitions::{MapError, MapId, Partition};

/// Weight arguments above this bound are rejected as argument errors.
const MAX_WEIGHT: u64 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "parity-partitions",
    version,
    about = "Partitions whose odd and even parts are separated: classes, maps, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count the members of a class at one weight
    Count {
        #[arg(long)]
        class: ClassSpec,
        #[arg(long, value_parser = clap::value_parser!(u64).range(..=MAX_WEIGHT))]
        n: u64,
    },
    /// List the members of a class at one weight, largest-first per line
    Enumerate {
        #[arg(long)]
        class: ClassSpec,
        #[arg(long, value_parser = clap::value_parser!(u64).range(..=MAX_WEIGHT))]
        n: u64,
        /// `text` prints one partition per line; `json` one JSON array per line
        #[arg(long, value_enum, default_value = "text")]
        format: ListFormat,
    },
    /// Apply a map: prints the image, then the case trace as JSON
    Apply {
        #[arg(long)]
        map: MapId,
        #[arg(long)]
        partition: Partition,
    },
    /// Invert a map: prints the preimage, or "not in image"
    Invert {
        #[arg(long)]
        map: MapId,
        #[arg(long)]
        partition: Partition,
    },
    /// Test whether a partition belongs to a class: prints true or false
    Member {
        #[arg(long)]
        class: ClassSpec,
        #[arg(long)]
        partition: Partition,
    },
    /// Run a verification suite and print its JSON report
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Override the default scan bound of each check
        #[arg(long, value_parser = clap::value_parser!(u64).range(..=MAX_WEIGHT))]
        nmax: Option<u64>,
    },
    /// Print a class's count sequence for weights 0..=nmax
    Sequence {
        #[arg(long)]
        class: ClassSpec,
        #[arg(long, value_parser = clap::value_parser!(u64).range(..=MAX_WEIGHT))]
        nmax: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: SequenceFormat,
    },
    /// Draw the ASCII Ferrers diagram of a partition
    Render {
        #[arg(long)]
        partition: Partition,
    },
}

fn main() {
    // Die quietly when a downstream pipe closes (e.g. `enumerate ... | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    std::process::exit(run(cli.command));
}

fn run(command: Command) -> i32 {
    match command {
        Command::Count { class, n } => {
            println!("{}", classes::count_class(n, &class));
            0
        }
        Command::Enumerate { class, n, format } => {
            for member in classes::enumerate_class(n, &class) {
                match format {
                    ListFormat::Text => println!("{member}"),
                    ListFormat::Json => println!(
                        "{}",
                        serde_json::to_string(&member).expect("partition serializes")
                    ),
                }
            }
            0
        }
        Command::Apply { map, partition } => match map.apply(&partition) {
            Ok((image, trace)) => {
                println!("{image}");
                println!("{}", serde_json::to_string(&trace).expect("trace serializes"));
                0
            }
            Err(error) => {
                eprintln!("{error}");
                3
            }
        },
        Command::Invert { map, partition } => match map.invert(&partition) {
            Ok(preimage) => {
                println!("{preimage}");
                0
            }
            Err(MapError::NotInImage { .. }) => {
                println!("{NOT_IN_IMAGE}");
                3
            }
            Err(error) => {
                eprintln!("{error}");
                3
            }
        },
        Command::Member { class, partition } => {
            println!("{}", classes::is_member(&partition, &class));
            0
        }
        Command::Verify { suite, nmax } => {
            let report = verify::run_suite(suite, nmax);
            println!("{}", report.to_json());
            if report.all_pass() {
                0
            } else {
                1
            }
        }
        Command::Sequence { class, nmax, format } => {
            let counts = classes::count_sequence(&class, nmax);
            match format {
                SequenceFormat::Csv => {
                    println!("n,count");
                    for (n, count) in counts.iter().enumerate() {
                        println!("{n},{count}");
                    }
                }
                SequenceFormat::Json => {
                    let doc = serde_json::json!({
                        "class": class.to_string(),
                        "counts": counts,
                    });
                    println!("{doc}");
                }
            }
            0
        }
        Command::Render { partition } => {
            println!("{}", partition.render_ferrers());
            0
        }
    }
}
