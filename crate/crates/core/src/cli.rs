//! The `orbitlattice` command line.
//!
//! [`run`] does all the work and returns the exit code together with what
//! should go to standard out and standard error, so it can be tested without
//! spawning a process.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::dot::{cell_graph_dot, codim1_dot};
use crate::error::Error;
use crate::intersections::{closure_set, intersect, intersect_tableaux, pairwise_table};
use crate::involutions::{orbit_dim, sigma_of_tableau, tableau_of_sigma, Involution};
use crate::rankmatrix::{leq, n_matrix, parse_rows, rank_matrix, validate_rows, UpperMatrix, ValidityReport};
use crate::rscells::{cell, cell_graph, edge_vs_codim, root_positions, Permutation};
use crate::tableaux::{enumerate_two_column, StandardTableau, TwoColumnTableau};
use crate::verify::{self, VerifySuiteResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

pub const THREADS_ENV: &str = "ORBITLATTICE_THREADS";

/// Largest `n` for plain enumeration without `--unsafe-no-cap`.
pub const ENUMERATION_N_CAP: usize = 12;
/// Largest `n` for commands that intersect every pair of a shape.
pub const PAIRWISE_N_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "orbitlattice", version, about = "B-orbits of nilpotent order 2, rank matrices and orbital-variety intersections")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Allow sizes above the default caps.
    #[arg(long, global = true)]
    pub unsafe_no_cap: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the two-column tableaux with k rows of length two.
    Tableaux {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// The involution attached to a two-column tableau.
    Sigma {
        #[arg(long, value_parser = parse_two_column)]
        tableau: TwoColumnTableau,
    },
    /// The two-column tableau whose involution is the given one.
    Tableau {
        #[arg(long, value_parser = parse_involution)]
        sigma: Involution,
        #[arg(long)]
        n: Option<usize>,
    },
    /// The partial-permutation matrix of an involution.
    Nmatrix {
        #[arg(long, value_parser = parse_involution)]
        sigma: Involution,
        #[arg(long)]
        n: Option<usize>,
    },
    Rankmatrix {
        #[arg(long, value_parser = parse_involution)]
        sigma: Involution,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check whether a matrix is the rank matrix of an involution.
    Validate {
        /// Rows separated by ';', entries by ','.
        #[arg(long, value_parser = parse_matrix)]
        matrix: MatrixArg,
    },
    /// Dimension of the orbit of an involution.
    Dim {
        #[arg(long, value_parser = parse_involution)]
        sigma: Involution,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Compare two involutions in the closure order.
    Order {
        #[arg(long, value_parser = parse_involution)]
        lhs: Involution,
        #[arg(long, value_parser = parse_involution)]
        rhs: Involution,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Every involution in the closure of an orbit.
    Closure {
        #[arg(long, value_parser = parse_involution)]
        sigma: Involution,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Components of the intersection of two orbit closures or orbital varieties.
    Intersect {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Read both sides as two-column tableaux.
        #[arg(long)]
        as_tableaux: bool,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Codimensions of all pairwise intersections for one shape.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// The left cell of a standard tableau.
    Cell {
        #[arg(long, value_parser = parse_standard)]
        tableau: StandardTableau,
    },
    Cellgraph {
        #[arg(long, value_parser = parse_standard)]
        tableau: StandardTableau,
    },
    /// Graph of the pairs meeting in codimension one.
    Codim1graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Cell-graph edges against codimension-one intersections.
    EdgeVsCodim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Root positions of a permutation in one-line notation.
    Roots {
        #[arg(long, value_parser = parse_permutation)]
        w: Permutation,
    },
    /// Run the verification suites.
    Verify {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        suite: Option<String>,
    },
}

fn parse_two_column(s: &str) -> Result<TwoColumnTableau, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_standard(s: &str) -> Result<StandardTableau, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_involution(s: &str) -> Result<Involution, String> {
    Involution::parse(s, None).map_err(|e| e.to_string())
}

fn parse_permutation(s: &str) -> Result<Permutation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Matrix rows as typed; may be non-square or non-upper-triangular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixArg(pub Vec<Vec<u32>>);

fn parse_matrix(s: &str) -> Result<MatrixArg, String> {
    parse_rows(s).map(MatrixArg).map_err(|e| e.to_string())
}

/// Exit code and the text destined for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self { code, stdout: String::new(), stderr }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaDoc {
    pub tableau: TwoColumnTableau,
    pub sigma: Involution,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub sigma: Involution,
    pub matrix: UpperMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimDoc {
    pub sigma: Involution,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDoc {
    pub lhs: Involution,
    pub rhs: Involution,
    pub lhs_leq_rhs: bool,
    pub rhs_leq_lhs: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureDoc {
    pub sigma: Involution,
    pub closure: Vec<Involution>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellDoc {
    pub tableau: StandardTableau,
    pub cell: Vec<Permutation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub n_max: usize,
    pub passed: bool,
    pub suites: Vec<VerifySuiteResult>,
}

fn with_n(sigma: Involution, n: Option<usize>) -> Result<Involution, Error> {
    match n {
        Some(n) => sigma.embed(n),
        None => Ok(sigma),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn check_cap(n: usize, cap: usize, uncapped: bool) -> Result<(), Error> {
    if n > cap && !uncapped {
        return Err(Error::Domain(format!("n={n} exceeds the default cap {cap}; pass --unsafe-no-cap to override")));
    }
    Ok(())
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn unsupported(format: Format, command: &str) -> Failure {
    let name = format!("{format:?}").to_lowercase();
    Failure::Usage(format!("--format {name} is not supported by `{command}`"))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(rendered) } else { Outcome::fail(code, rendered) };
        }
    };
    let threads = match std::env::var(THREADS_ENV) {
        Err(_) => 1,
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => t,
            _ => return Outcome::fail(EXIT_PARSE, format!("error: {THREADS_ENV} must be an integer >= 1, got {v:?}\n")),
        },
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool,
        Err(e) => return Outcome::fail(EXIT_DOMAIN, format!("error: {e}\n")),
    };
    pool.install(|| execute(&cli))
}

fn execute(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(outcome) => outcome,
        Err(Failure::Domain(e)) => Outcome::fail(EXIT_DOMAIN, format!("error: {e}\n")),
        Err(Failure::Usage(msg)) => Outcome::fail(EXIT_PARSE, format!("error: {msg}\n")),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    let uncapped = cli.unsafe_no_cap;
    let plain = |name: &str| -> Result<(), Failure> {
        match format {
            Format::Text | Format::Json => Ok(()),
            other => Err(unsupported(other, name)),
        }
    };
    let out = match &cli.command {
        Command::Tableaux { n, k } => {
            plain("tableaux")?;
            check_cap(*n, ENUMERATION_N_CAP, uncapped)?;
            let all = enumerate_two_column(*n, *k)?;
            match format {
                Format::Json => json(&all),
                _ => all.iter().map(|t| format!("{t}\n")).collect(),
            }
        }
        Command::Sigma { tableau } => {
            plain("sigma")?;
            let doc = SigmaDoc { tableau: tableau.clone(), sigma: sigma_of_tableau(tableau) };
            match format {
                Format::Json => json(&doc),
                _ => format!("{}\n", doc.sigma),
            }
        }
        Command::Tableau { sigma, n } => {
            plain("tableau")?;
            let sigma = with_n(sigma.clone(), *n)?;
            let doc = SigmaDoc { tableau: tableau_of_sigma(&sigma)?, sigma };
            match format {
                Format::Json => json(&doc),
                _ => format!("{}\n", doc.tableau),
            }
        }
        Command::Nmatrix { sigma, n } | Command::Rankmatrix { sigma, n } => {
            let name = if matches!(cli.command, Command::Nmatrix { .. }) { "nmatrix" } else { "rankmatrix" };
            plain(name)?;
            let sigma = with_n(sigma.clone(), *n)?;
            let matrix = if name == "nmatrix" { n_matrix(&sigma) } else { rank_matrix(&sigma) };
            let doc = MatrixDoc { sigma, matrix };
            match format {
                Format::Json => json(&doc),
                _ => format!("{}\n", doc.matrix),
            }
        }
        Command::Validate { matrix } => {
            plain("validate")?;
            let report: ValidityReport = validate_rows(&matrix.0)?;
            match format {
                Format::Json => json(&report),
                _ => {
                    let mut s = String::from(if report.valid { "valid\n" } else { "invalid\n" });
                    for v in &report.violations {
                        let _ = writeln!(
                            s,
                            "  ({}) at ({},{}), witness ({},{})",
                            v.condition.tag(),
                            v.position.0,
                            v.position.1,
                            v.witness.0,
                            v.witness.1
                        );
                    }
                    s
                }
            }
        }
        Command::Dim { sigma, n } => {
            plain("dim")?;
            let sigma = with_n(sigma.clone(), *n)?;
            let doc = DimDoc { dim: orbit_dim(&sigma), sigma };
            match format {
                Format::Json => json(&doc),
                _ => format!("{}\n", doc.dim),
            }
        }
        Command::Order { lhs, rhs, n } => {
            plain("order")?;
            let size = n.unwrap_or(lhs.n().max(rhs.n()));
            let (lhs, rhs) = (lhs.embed(size)?, rhs.embed(size)?);
            let (rl, rr) = (rank_matrix(&lhs), rank_matrix(&rhs));
            let doc = OrderDoc { lhs_leq_rhs: leq(&rl, &rr)?, rhs_leq_lhs: leq(&rr, &rl)?, lhs, rhs };
            match format {
                Format::Json => json(&doc),
                _ => {
                    let rel = match (doc.lhs_leq_rhs, doc.rhs_leq_lhs) {
                        (true, true) => "=",
                        (true, false) => "<",
                        (false, true) => ">",
                        (false, false) => "incomparable",
                    };
                    format!("{rel}\n")
                }
            }
        }
        Command::Closure { sigma, n } => {
            plain("closure")?;
            let sigma = with_n(sigma.clone(), *n)?;
            let doc = ClosureDoc { closure: closure_set(&sigma), sigma };
            match format {
                Format::Json => json(&doc),
                _ => doc.closure.iter().map(|s| format!("{s}\n")).collect(),
            }
        }
        Command::Intersect { left, right, as_tableaux, n } => {
            plain("intersect")?;
            let report = if *as_tableaux {
                let l = left.parse::<TwoColumnTableau>().map_err(|e| Failure::Usage(format!("--left: {e}")))?;
                let r = right.parse::<TwoColumnTableau>().map_err(|e| Failure::Usage(format!("--right: {e}")))?;
                intersect_tableaux(&l, &r)?
            } else {
                let l = Involution::parse(left, None).map_err(|e| Failure::Usage(format!("--left: {e}")))?;
                let r = Involution::parse(right, None).map_err(|e| Failure::Usage(format!("--right: {e}")))?;
                let size = n.unwrap_or(l.n().max(r.n()));
                intersect(&l.embed(size)?, &r.embed(size)?)?
            };
            match format {
                Format::Json => json(&report),
                _ => report.to_text(),
            }
        }
        Command::Table { n, k } => {
            check_cap(*n, PAIRWISE_N_CAP, uncapped)?;
            let table = pairwise_table(*n, *k)?;
            match format {
                Format::Json => json(&table),
                Format::Csv => table.to_csv(),
                Format::Text => table.to_text(),
                Format::Dot => return Err(unsupported(format, "table")),
            }
        }
        Command::Cell { tableau } => {
            plain("cell")?;
            let doc = CellDoc { cell: cell(tableau), tableau: tableau.clone() };
            match format {
                Format::Json => json(&doc),
                _ => doc.cell.iter().map(|w| format!("{w}\n")).collect(),
            }
        }
        Command::Cellgraph { tableau } => {
            let graph = cell_graph(tableau);
            match format {
                Format::Json => json(&graph),
                Format::Dot | Format::Text => cell_graph_dot(&graph),
                Format::Csv => return Err(unsupported(format, "cellgraph")),
            }
        }
        Command::Codim1graph { n, k } => {
            check_cap(*n, PAIRWISE_N_CAP, uncapped)?;
            let table = pairwise_table(*n, *k)?;
            match format {
                Format::Json => {
                    let pairs: Vec<(TwoColumnTableau, TwoColumnTableau)> = table
                        .codim1_pairs()
                        .into_iter()
                        .map(|(a, b)| (table.tableaux[a].clone(), table.tableaux[b].clone()))
                        .collect();
                    json(&pairs)
                }
                Format::Dot | Format::Text => codim1_dot(&table),
                Format::Csv => return Err(unsupported(format, "codim1graph")),
            }
        }
        Command::EdgeVsCodim { n, k } => {
            plain("edge-vs-codim")?;
            check_cap(*n, PAIRWISE_N_CAP, uncapped)?;
            let report = edge_vs_codim(*n, *k)?;
            match format {
                Format::Json => json(&report),
                _ => report.to_text(),
            }
        }
        Command::Roots { w } => {
            plain("roots")?;
            let set = root_positions(w);
            match format {
                Format::Json => json(&set),
                _ => set.to_grid(),
            }
        }
        Command::Verify { n_max, suite } => {
            plain("verify")?;
            let results = verify::verify(*n_max, suite.as_deref(), uncapped)?;
            let passed = results.iter().all(VerifySuiteResult::passed);
            let mut stderr = String::new();
            for r in &results {
                let _ = writeln!(stderr, "{}: {:.3}s", r.suite, r.wall.as_secs_f64());
            }
            let doc = VerifyDoc { n_max: *n_max, passed, suites: results };
            let stdout = match format {
                Format::Json => json(&doc),
                _ => verify_text(&doc),
            };
            let code = if passed { EXIT_OK } else { EXIT_VERIFY };
            return Ok(Outcome { code, stdout, stderr });
        }
    };
    Ok(Outcome::ok(out))
}

fn verify_text(doc: &VerifyDoc) -> String {
    let mut s = String::new();
    let width = doc.suites.iter().map(|r| r.suite.len()).max().unwrap_or(0);
    for r in &doc.suites {
        let status = if r.passed() { "ok" } else { "FAILED" };
        let _ = writeln!(s, "{:<width$}  {:>8} cases  {:>4} failed  {status}", r.suite, r.cases, r.failed);
        for f in &r.failures {
            let _ = writeln!(s, "    {f}");
        }
    }
    let _ = writeln!(s, "{}", if doc.passed { "all suites passed" } else { "some suites failed" });
    s
}
