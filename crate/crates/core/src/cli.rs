//! Command-line front end. Exit codes: 0 pass, 1 mismatch, 2 usage, 3 resource cap.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::canonfock::{
    decomposition_matrix, decomposition_to_latex, hall_basis_b, lt_basis, matrix_to_csv, table_to_csv, table_to_json, table_to_latex,
    BasisError, BasisTable, Kind,
};
use crate::hallalg::{cache, HallError};
use crate::heckewedge::{straighten, Space, TensorVector};
use crate::verify::{hit_resource_cap, run_suite, SUITES};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Largest weights served before refusing as out of desk scale.
pub const MAX_LT_WEIGHT: usize = 10;
pub const MAX_HALL_WEIGHT: usize = 4;
pub const MAX_HALL_WEIGHT_FINITE: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "fockbasis", version, about = "Canonical bases of the level-one Fock space")]
pub struct Cli {
    /// Base primes for finite-field counting, e.g. 2,3,5,7,11
    #[arg(long, global = true, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    /// Directory for cached Hall counts (overrides FOCKBASIS_CACHE_DIR)
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Worker thread bound
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of a wedge word
    Straighten {
        #[arg(long)]
        n: usize,
        /// Comma-separated entries, e.g. "-1,2"
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// One weight space of a bar-invariant basis
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Plus)]
        kind: KindArg,
        /// Use the finite wedge of this rank instead of the semi-infinite one
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decomposition matrix `e^+` at `v = 1`
    Decomp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run verification suites and print a JSON report
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_weight: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    Plus,
    Minus,
    Hall,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
}

/// Result of one invocation: text for stdout, text for stderr, exit code.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(s: String) -> Self {
        Outcome { stdout: s, stderr: String::new(), code: EXIT_PASS }
    }
    fn fail(code: i32, msg: impl Into<String>) -> Self {
        Outcome { stdout: String::new(), stderr: msg.into(), code }
    }
}

fn render_word(w: &[i64]) -> String {
    format!("({})", w.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(","))
}

/// `-v^-1*(2,-1) - (1-v^-2)*(1,0)`: words in decreasing order, a sign pulled
/// out of each coefficient whose top term is negative.
pub fn render_combination(t: &TensorVector) -> String {
    if t.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in t.iter().rev().enumerate() {
        let neg = c.leading_coeff() < 0.into();
        let c = if neg { -c.clone() } else { c.clone() };
        let body = if c.is_one() {
            render_word(w)
        } else if c.num_terms() == 1 {
            format!("{}*{}", c.to_compact_string(), render_word(w))
        } else {
            format!("({})*{}", c.to_compact_string(), render_word(w))
        };
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => out.push_str(&format!("-{}", body)),
            (_, false) => out.push_str(&format!(" + {}", body)),
            (_, true) => out.push_str(&format!(" - {}", body)),
        }
    }
    out
}

fn parse_word(s: &str) -> Result<Vec<i64>, String> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad word entry {:?}", x))).collect()
}

fn basis_error(e: BasisError) -> Outcome {
    let code = match &e {
        BasisError::Hall(HallError::ResourceCap(_)) => EXIT_RESOURCE,
        _ => EXIT_MISMATCH,
    };
    Outcome::fail(code, e.to_string())
}

fn emit_table(t: &BasisTable, format: Format) -> String {
    match format {
        Format::Json => table_to_json(t) + "\n",
        Format::Csv => table_to_csv(t),
        Format::Latex => table_to_latex(t),
    }
}

fn configure(cli: &Cli) -> Result<(), Outcome> {
    if let Some(ps) = &cli.primes {
        let mut sorted = ps.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != ps.len() || ps.iter().any(|&p| p < 2 || !(2..).take_while(|d| d * d <= p).all(|d| p % d != 0)) {
            return Err(Outcome::fail(EXIT_USAGE, "--primes must list distinct primes"));
        }
        cache::set_primes(ps.clone());
    }
    if let Some(d) = &cli.cache_dir {
        cache::set_cache_dir(Some(d.clone()));
    }
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Outcome::fail(EXIT_USAGE, "--threads must be positive"));
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    Ok(())
}

fn check_n(n: usize) -> Result<(), Outcome> {
    if n < 2 {
        return Err(Outcome::fail(EXIT_USAGE, "--n must be at least 2"));
    }
    Ok(())
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    if let Err(o) = configure(cli) {
        return o;
    }
    match &cli.command {
        Command::Straighten { n, word } => {
            if let Err(o) = check_n(*n) {
                return o;
            }
            let w = match parse_word(word) {
                Ok(w) => w,
                Err(e) => return Outcome::fail(EXIT_USAGE, e),
            };
            match straighten(&w, *n) {
                Ok(t) => Outcome::ok(render_combination(&t) + "\n"),
                Err(e) => Outcome::fail(EXIT_MISMATCH, e.to_string()),
            }
        }
        Command::Basis { n, weight, kind, l, format } => {
            if let Err(o) = check_n(*n) {
                return o;
            }
            let space = match l {
                Some(0) => return Outcome::fail(EXIT_USAGE, "--l must be positive"),
                Some(l) => Space::Finite(*l),
                None => Space::SemiInfinite,
            };
            let cap = match (kind, space) {
                (KindArg::Hall, Space::SemiInfinite) => MAX_HALL_WEIGHT,
                (KindArg::Hall, Space::Finite(_)) => MAX_HALL_WEIGHT_FINITE,
                _ => MAX_LT_WEIGHT,
            };
            if *weight > cap {
                return Outcome::fail(EXIT_RESOURCE, format!("out of desk scale: weight {} exceeds {}", weight, cap));
            }
            let t = match kind {
                KindArg::Plus => lt_basis(*n, *weight, Kind::Plus, space),
                KindArg::Minus => lt_basis(*n, *weight, Kind::Minus, space),
                KindArg::Hall => hall_basis_b(*n, *weight, space),
            };
            match t {
                Ok(t) => Outcome::ok(emit_table(&t, *format)),
                Err(e) => basis_error(e),
            }
        }
        Command::Decomp { n, weight, format } => {
            if let Err(o) = check_n(*n) {
                return o;
            }
            if *weight > MAX_LT_WEIGHT {
                return Outcome::fail(EXIT_RESOURCE, format!("out of desk scale: weight {} exceeds {}", weight, MAX_LT_WEIGHT));
            }
            match decomposition_matrix(*n, *weight) {
                Ok(d) => Outcome::ok(match format {
                    Format::Csv => matrix_to_csv(&d.partitions, &d.entries),
                    Format::Json => serde_json::to_string_pretty(&d).expect("serializable") + "\n",
                    Format::Latex => decomposition_to_latex(&d),
                }),
                Err(e) => basis_error(e),
            }
        }
        Command::Verify { suite, n, max_weight } => {
            if let Err(o) = check_n(*n) {
                return o;
            }
            let Some(r) = run_suite(suite, *n, *max_weight) else {
                return Outcome::fail(EXIT_USAGE, format!("unknown suite {:?}; expected one of {} or all", suite, SUITES.join(", ")));
            };
            let code = if r.passed {
                EXIT_PASS
            } else if hit_resource_cap(&r) {
                EXIT_RESOURCE
            } else {
                EXIT_MISMATCH
            };
            Outcome { stdout: serde_json::to_string_pretty(&r).expect("serializable") + "\n", stderr: String::new(), code }
        }
    }
}

/// Parses arguments (including the program name) and runs.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            if code == EXIT_PASS {
                Outcome::ok(text)
            } else {
                Outcome::fail(code, text)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::LaurentPolynomial as LP;

    fn out(args: &[&str]) -> Outcome {
        run(std::iter::once("fockbasis").chain(args.iter().copied()))
    }

    #[test]
    fn straighten_rendering() {
        assert_eq!(out(&["straighten", "--n", "2", "--word", "-1,2"]).stdout, "-v^-1*(2,-1) - (1-v^-2)*(1,0)\n");
        assert_eq!(out(&["straighten", "--n", "2", "--word", "0,0"]).stdout, "0\n");
        assert_eq!(out(&["straighten", "--n", "2", "--word", "2,-1"]).stdout, "(2,-1)\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(out(&["straighten", "--n", "2", "--word", "a,b"]).code, EXIT_USAGE);
        assert_eq!(out(&["basis", "--n", "2"]).code, EXIT_USAGE);
        assert_eq!(out(&["verify", "--n", "2", "--suite", "nope"]).code, EXIT_USAGE);
        assert_eq!(out(&["basis", "--n", "2", "--weight", "40"]).code, EXIT_RESOURCE);
    }

    #[test]
    fn decomp_csv() {
        let o = out(&["decomp", "--n", "2", "--weight", "2", "--format", "csv"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.ends_with("1,0\n1,1\n"));
        assert!(o.stdout.starts_with("# rows mu, columns lambda, order: (2) (1,1)"));
    }

    #[test]
    fn hall_weight_zero_is_identity() {
        let o = out(&["basis", "--n", "2", "--weight", "0", "--kind", "hall", "--format", "csv"]);
        assert_eq!(o.stdout, "# rows mu, columns lambda, order: ()\n1\n");
    }

    #[test]
    fn render_scalar_multiple() {
        let t = TensorVector::single(vec![1, 0], LP::from_terms([(2, 3)]));
        assert_eq!(render_combination(&t), "3*v^2*(1,0)");
    }
}
