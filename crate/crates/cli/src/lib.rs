//! Command-line front end for `kdnf`.
//!
//! Exit codes: 0 success, 1 usage error (bad flags, unreadable file),
//! 2 parse or domain error in the input, 3 capacity limit hit.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use kdnf::text::{parse_dnf, parse_function, parse_term, print_dnf, ParsedFunction};
use kdnf::{
    absorption_witness, count_monotone_exact, dead_end_dnfs, is_monotone, minimize_dnf, psi_estimate, reduced_dnf,
    reduced_dnf_partial, Alphabet, Error, KFunction, Metric, Monotonicity, Space, ValueOrder,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "kdnf", version, about = "Reduced, dead-end and minimal DNFs of k-valued functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the reduced DNF (all maximal intervals of every level).
    Reduce { file: PathBuf },
    /// Print an optimal DNF and its objective value.
    Minimize {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MetricArg::Terms)]
        metric: MetricArg,
    },
    /// Print every dead-end DNF.
    Deadend {
        file: PathBuf,
        /// Print at most this many.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Decide whether a DNF absorbs a single term.
    Absorb {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// File with one term per line.
        dnf: PathBuf,
        /// Term such as `J{1}(x1)*J{1,2}(x3)->1`.
        term: String,
    },
    /// Check monotonicity and print a violating pair if there is one.
    Monotone {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::Total)]
        order: OrderArg,
    },
    /// Count monotone functions exactly.
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Total)]
        order: OrderArg,
    },
    /// Print the leading-term estimate of log2 psi(n) for the star order.
    Estimate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MetricArg {
    Terms,
    Rank,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Total,
    Star,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Terms => Metric::FewestTerms,
            MetricArg::Rank => Metric::LeastTotalRank,
        }
    }
}

impl OrderArg {
    fn order(self, k: Alphabet) -> ValueOrder {
        match self {
            OrderArg::Total => ValueOrder::total(k),
            OrderArg::Star => ValueOrder::star(k),
        }
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn total(parsed: ParsedFunction, command: &str) -> Result<KFunction, Failure> {
    match parsed {
        ParsedFunction::Total(f) => Ok(f),
        ParsedFunction::Partial(_) => {
            Err(Failure::Lib(Error::Precondition(format!("{command} needs a total function (mode=total)"))))
        }
    }
}

fn execute(command: Command) -> Result<String, Failure> {
    let mut out = String::new();
    match command {
        Command::Reduce { file } => {
            let reduced = match parse_function(&read(&file)?)? {
                ParsedFunction::Total(f) => reduced_dnf(&f),
                ParsedFunction::Partial(f) => reduced_dnf_partial(&f),
            };
            out.push_str(&print_dnf(reduced.dnf()));
        }
        Command::Minimize { file, metric } => {
            let f = total(parse_function(&read(&file)?)?, "minimize")?;
            let result = minimize_dnf(&f, metric.into())?;
            out.push_str(&print_dnf(&result.dnf));
            writeln!(out, "objective: {}", result.objective_value).unwrap();
        }
        Command::Deadend { file, limit } => {
            let f = total(parse_function(&read(&file)?)?, "deadend")?;
            let pool = reduced_dnf(&f).into_dnf();
            let all = dead_end_dnfs(&f, &pool)?;
            let shown = limit.unwrap_or(all.len()).min(all.len());
            for (i, d) in all.iter().take(shown).enumerate() {
                writeln!(out, "# dead-end {} ({} terms, rank {})", i + 1, d.len(), d.total_rank()).unwrap();
                out.push_str(&print_dnf(d));
            }
            if shown < all.len() {
                writeln!(out, "count: {} (showing {shown})", all.len()).unwrap();
            } else {
                writeln!(out, "count: {}", all.len()).unwrap();
            }
        }
        Command::Absorb { k, n, dnf, term } => {
            let space = Space::new(k, n)?;
            let d = parse_dnf(&read(&dnf)?, space)?;
            let ec = parse_term(&term, space)?;
            match absorption_witness(&d, &ec)? {
                None => out.push_str("yes\n"),
                Some(p) => writeln!(out, "no\nwitness: {p}").unwrap(),
            }
        }
        Command::Monotone { file, order } => {
            let f = total(parse_function(&read(&file)?)?, "monotone")?;
            let order = order.order(f.space().alphabet());
            match is_monotone(&f, &order)? {
                Monotonicity::Monotone => out.push_str("monotone\n"),
                Monotonicity::Violation { lower, upper } => {
                    writeln!(out, "not monotone").unwrap();
                    writeln!(out, "lower: {lower} -> {}", f.get(&lower)?).unwrap();
                    writeln!(out, "upper: {upper} -> {}", f.get(&upper)?).unwrap();
                }
            }
        }
        Command::Count { k, n, order } => {
            let order = order.order(Alphabet::new(k)?);
            writeln!(out, "{}", count_monotone_exact(n, &order)?).unwrap();
        }
        Command::Estimate { k, n } => {
            let e = psi_estimate(n, k)?;
            writeln!(out, "log2(psi) ≈ {:.5} (d={}, D={:.5})", e.log2_psi, e.d, e.big_d).unwrap();
            writeln!(out, "note: leading term only, the (1 + eps(n)) factor is omitted").unwrap();
        }
    }
    Ok(out)
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Capacity(_) => EXIT_CAPACITY,
                _ => EXIT_PARSE,
            }
        }
    }
}
