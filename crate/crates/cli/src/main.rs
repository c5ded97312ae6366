//! Command-line driver for the superspace coinvariant kernel.
//!
//! `srb verify` runs a named verification suite and reports one line per
//! check (or a JSON document with --format json); `srb hilbert` prints the
//! closed-form bigraded Hilbert series next to the brute-force one.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
//! 3 requested n exceeds the suite bound.

mod report;
mod suites;

use clap::{Parser, Subcommand, ValueEnum};
use srb_core::coinvariants::hilbert_quotient_policy;
use srb_core::combinatorics::closed_hilbert;
use srb_core::linalg::RankPolicy;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "srb",
    version,
    about = "Exact verification of the type-B superspace coinvariant ring"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a report
    Verify {
        /// Suite to run
        #[arg(long, value_enum)]
        suite: suites::Suite,
        /// Largest n included in the sweep
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Unlock the slow upper bounds (n = 4 for the brute-force suites)
        #[arg(long)]
        long: bool,
        /// Worker threads for the elimination kernels (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Seed for the randomized spot checks
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Write the report to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the bigraded Hilbert series of the quotient
    Hilbert {
        /// Rank of the quotient (at most 4)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Also brute-force the series at n = 4 (slow; smaller n always do)
        #[arg(long)]
        long: bool,
        /// Worker threads for the elimination kernels (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the output to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            suite,
            n,
            long,
            jobs,
            seed,
            out,
            format,
        } => {
            let bound = suite.bound(long);
            if n > bound {
                let hint = if !long && suite.bound(true) > bound {
                    " (--long raises it)"
                } else {
                    ""
                };
                eprintln!(
                    "n = {n} exceeds the bound {bound} of the {} suite{hint}",
                    suite.name()
                );
                return ExitCode::from(3);
            }
            init_pool(jobs);
            let report = suites::run(suite, n, long, seed);
            let rendered = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            if let Err(code) = emit(out.as_deref(), &rendered) {
                return code;
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Hilbert {
            n,
            long,
            jobs,
            out,
            format,
        } => {
            if n > 4 {
                eprintln!("n = {n} exceeds the Hilbert bound 4");
                return ExitCode::from(3);
            }
            init_pool(jobs);
            let closed = closed_hilbert(n);
            let brute = (n <= 3 || long)
                .then(|| hilbert_quotient_policy(n, n * n + 1, RankPolicy::Hybrid));
            let matches = brute.as_ref().map(|b| *b == closed);
            let rendered = match format {
                Format::Text => {
                    let mut text = String::new();
                    let _ = writeln!(text, "closed form:  {closed}");
                    match &brute {
                        Some(b) => {
                            let _ = writeln!(text, "brute force:  {b}");
                            if let Some((d, k, a, bb)) = closed.first_difference(b) {
                                let _ = writeln!(text, "match: NO");
                                let _ = writeln!(
                                    text,
                                    "first difference at q^{d} z^{k}: closed {a}, brute force {bb}"
                                );
                            } else {
                                let _ = writeln!(text, "match: yes");
                            }
                        }
                        None => {
                            let _ =
                                writeln!(text, "brute force:  skipped (enable with --long)");
                        }
                    }
                    text
                }
                Format::Json => {
                    let doc = serde_json::json!({
                        "n": n,
                        "closed": suites::series_json(&closed),
                        "bruteforce": brute.as_ref().map(suites::series_json),
                        "match": matches,
                    });
                    let mut s =
                        serde_json::to_string_pretty(&doc).expect("series serialization");
                    s.push('\n');
                    s
                }
            };
            if let Err(code) = emit(out.as_deref(), &rendered) {
                return code;
            }
            if matches == Some(false) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}

/// Size the global worker pool; later calls keep the first size.
fn init_pool(jobs: Option<usize>) {
    if let Some(jobs) = jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

fn emit(out: Option<&std::path::Path>, rendered: &str) -> Result<(), ExitCode> {
    match out {
        None => {
            print!("{rendered}");
            Ok(())
        }
        Some(path) => std::fs::write(path, rendered).map_err(|e| {
            eprintln!("cannot write {}: {e}", path.display());
            ExitCode::from(2)
        }),
    }
}
