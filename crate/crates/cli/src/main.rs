//! `fencetile`: command-line access to exact square-and-fence tiling
//! combinatorics — counting sequences, fence-count triangles, explicit
//! enumeration, Riordan arrays, identity verification, and OEIS b-files.
//!
//! All output is deterministic decimal text, one record per
//! newline-terminated line. Exit codes: 0 success, 1 identity-check
//! failure, 2 usage or domain error, 3 instance too large.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use fence_tilings::identities::{verify_all, verify_identity, IdentityReport};
use fence_tilings::sequences::SequenceId;
use fence_tilings::series::RationalSeries;
use fence_tilings::tiling::{
    classify_board_tilings, classify_n_tilings, for_each_board_tiling, for_each_n_tiling,
    to_metatiles, Tiling, BOARD_CLASSIFY_CAP, N_TILING_CLASSIFY_CAP,
};
use fence_tilings::triangles::{riordan_rows, tri_board_row, tri_half_row, tri_ntile_row};
use fence_tilings::Error;

#[derive(Parser)]
#[command(
    name = "fencetile",
    version,
    about = "Exact combinatorics of boards tiled by squares and (1,1)-fences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print "n value" lines of a counting sequence.
    ///
    /// Sequence ids: F (Fibonacci), f (square-and-domino tilings),
    /// J (Jacobsthal), A (board tilings), B (n-tile tilings),
    /// goldenRect (f_n * f_{n+1}), or A<m> with m >= 2 for the
    /// gap-(m-1) fence family, e.g. A3.
    Seq {
        /// Sequence id.
        id: String,
        /// First index, inclusive (may be negative; sequences are 0 there).
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        from: i64,
        /// Last index, inclusive.
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
    },
    /// Print rows 0..=R of a fence-count triangle, one row per line.
    Triangle {
        /// Which triangle: by board length, by tile count, or half-length.
        kind: TriangleKind,
        /// Last row to print.
        #[arg(long)]
        rows: usize,
        /// Emit "n,k,value" records with a header instead of row lines.
        #[arg(long)]
        csv: bool,
    },
    /// Print every tiling as a metatile symbol string, in generation order.
    Enumerate {
        /// Interpret n as a board length, or as an exact tile count.
        kind: EnumerateKind,
        /// Board length (board) or tile count (ntile).
        n: usize,
    },
    /// Print the fence-count histogram "k count" of all tilings for n.
    Classify {
        /// Interpret n as a board length, or as an exact tile count.
        kind: EnumerateKind,
        /// Board length (board) or tile count (ntile).
        n: usize,
    },
    /// Print rows 0..=R of the Riordan array of two generating functions.
    ///
    /// Polynomials are comma-separated coefficient lists, constant term
    /// first, written NUM/DEN: e.g. --p 1/1,0,-1 --q 0,1/1,-1.
    Riordan {
        /// Generating function multiplying every column.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// Generating function whose k-th power generates column k.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// Last row to print.
        #[arg(long)]
        rows: usize,
    },
    /// Check registered identities numerically; nonzero exit on failure.
    Verify {
        /// Check a single identity instead of the whole registry.
        #[arg(long)]
        id: Option<String>,
        /// Scale parameter ranges to at most this value (default 60).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max: Option<u32>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a sequence as OEIS b-file lines "n a(n)" for n in 0..=N.
    Bfile {
        /// Sequence id, as for `seq`.
        id: String,
        /// Last index, inclusive.
        #[arg(long)]
        to: i64,
    },
}

#[derive(ValueEnum, Clone, Copy)]
enum TriangleKind {
    /// Tilings of an n-board with k fences.
    Board,
    /// Tilings with n tiles, k of them fences.
    Ntile,
    /// Tilings of a 2n-board with k fences, k <= n.
    Half,
}

#[derive(ValueEnum, Clone, Copy)]
enum EnumerateKind {
    Board,
    Ntile,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Kv,
}

enum Failure {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli.command, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::InstanceTooLarge { .. } => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn run(command: &Command, out: &mut impl Write) -> Result<ExitCode, Failure> {
    match command {
        Command::Seq { id, from, to } => {
            let seq = SequenceId::from_str(id)?;
            for n in *from..=*to {
                writeln!(out, "{n} {}", seq.value(n))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Triangle { kind, rows, csv } => {
            if *csv {
                writeln!(out, "n,k,value")?;
            }
            for n in 0..=*rows {
                let row = match kind {
                    TriangleKind::Board => tri_board_row(n),
                    TriangleKind::Ntile => tri_ntile_row(n),
                    TriangleKind::Half => tri_half_row(n),
                };
                if *csv {
                    for (k, value) in row.iter().enumerate() {
                        writeln!(out, "{n},{k},{value}")?;
                    }
                } else {
                    let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                    writeln!(out, "{}", cells.join(" "))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { kind, n } => {
            enumerate(*kind, *n, out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { kind, n } => {
            let histogram = match kind {
                EnumerateKind::Board => classify_board_tilings(*n)?,
                EnumerateKind::Ntile => classify_n_tilings(*n)?,
            };
            for (fences, count) in &histogram {
                writeln!(out, "{fences} {count}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Riordan { p, q, rows } => {
            let p: RationalSeries = p.parse()?;
            let q: RationalSeries = q.parse()?;
            for row in riordan_rows(&p, &q, rows + 1)? {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", cells.join(" "))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { id, max, format } => {
            let reports = match id {
                Some(id) => vec![verify_identity(id, *max)?],
                None => verify_all(*max),
            };
            render_reports(&reports, *format, out)?;
            if reports.iter().all(IdentityReport::passed) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Bfile { id, to } => {
            let seq = SequenceId::from_str(id)?;
            for n in 0..=*to {
                writeln!(out, "{n} {}", seq.value(n))?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn write_symbols(out: &mut dyn Write, tiling: &Tiling, io_error: &mut Option<io::Error>) {
    if io_error.is_none() {
        if let Err(e) = writeln!(out, "{}", tiling.symbols()) {
            *io_error = Some(e);
        }
    }
}

fn enumerate(kind: EnumerateKind, n: usize, out: &mut impl Write) -> Result<(), Failure> {
    let mut io_error: Option<io::Error> = None;
    match kind {
        EnumerateKind::Board => {
            let cap = BOARD_CLASSIFY_CAP;
            if n > cap {
                return Err(Error::InstanceTooLarge { n, cap }.into());
            }
            for_each_board_tiling(n, 1, |occ| {
                let tiling = to_metatiles(occ).expect("unit-gap tilings decompose");
                write_symbols(out, &tiling, &mut io_error);
            })?;
        }
        EnumerateKind::Ntile => {
            let cap = N_TILING_CLASSIFY_CAP;
            if n > cap {
                return Err(Error::InstanceTooLarge { n, cap }.into());
            }
            for_each_n_tiling(n, |metatiles| {
                let tiling = Tiling::new(metatiles.to_vec());
                write_symbols(out, &tiling, &mut io_error);
            });
        }
    }
    match io_error {
        Some(e) => Err(e.into()),
        None => Ok(()),
    }
}

fn render_reports(
    reports: &[IdentityReport],
    format: Format,
    out: &mut impl Write,
) -> Result<(), Failure> {
    match format {
        Format::Text => {
            for report in reports {
                let status = if report.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{} [{}] points={} {}",
                    report.id(),
                    report.range(),
                    report.points().len(),
                    status
                )?;
                for point in report.failures() {
                    writeln!(
                        out,
                        "  {} lhs={} rhs={}",
                        point.params(),
                        point.lhs(),
                        point.rhs()
                    )?;
                }
            }
            let passed = reports.iter().filter(|r| r.passed()).count();
            writeln!(out, "{passed}/{} identities passed", reports.len())?;
        }
        Format::Kv => {
            for report in reports {
                for line in report.kv_lines() {
                    writeln!(out, "{line}")?;
                }
            }
        }
    }
    Ok(())
}
