//! Argument parsing and dispatch for the `fiblie` binary.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fiblie_core::calculus::DEFAULT_MONOMIAL_CAP;
use fiblie_core::BasisKind;

use crate::commands;
use crate::figures::{self, Figure};
use crate::output::{emit, write_atomic, Format, Table};
use crate::verify;

#[derive(Debug, Parser)]
#[command(name = "fiblie", version, about = "Exact computations in the Fibonacci restricted Lie algebra over GF(2)")]
pub struct Cli {
    /// Output format for tabular results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the table to this file (atomically) instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// The Lie algebra basis W.
    Lie,
    /// The restricted basis W~ (adds pivot squares).
    Restricted,
}

impl From<Kind> for BasisKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Lie => BasisKind::Lie,
            Kind::Restricted => BasisKind::Restricted,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Standard monomials of lengths 1..=N with their Figure-1 colour.
    Basis {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Kind::Lie)]
        kind: Kind,
    },
    /// Evaluate expressions such as "[v2, v1^3]" or "(v1 + v2)^4".
    Eval {
        #[arg(required = true)]
        exprs: Vec<String>,
        /// Limit on intermediate monomial counts.
        #[arg(long, default_value_t = DEFAULT_MONOMIAL_CAP)]
        monomial_cap: usize,
    },
    /// Bracket of two expressions.
    Bracket {
        a: String,
        b: String,
        #[arg(long, default_value_t = DEFAULT_MONOMIAL_CAP)]
        monomial_cap: usize,
    },
    /// Exact nil index of an element under the 2-map.
    Nil {
        #[arg(long)]
        element: String,
        /// Maximal number of squarings.
        #[arg(long, default_value_t = 32)]
        cap: u32,
        #[arg(long, default_value_t = DEFAULT_MONOMIAL_CAP)]
        monomial_cap: usize,
    },
    /// Indices of v_n + ... + v_m for min <= n <= m <= max.
    NilScan {
        #[arg(long, default_value_t = 1)]
        min: u32,
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    /// Hilbert series by multidegree (a, b, coefficient).
    Hilbert {
        #[arg(long, default_value_t = 40)]
        degree: u32,
        /// Only W_{<=n}, computed by the recursion.
        #[arg(long)]
        n: Option<u32>,
        /// Specialize to one variable (total degree).
        #[arg(long)]
        one_var: bool,
        #[arg(long, value_enum, default_value_t = Kind::Lie)]
        kind: Kind,
    },
    /// Euler characteristic as a product over the basis.
    Euler {
        #[arg(long, default_value_t = 40)]
        degree: u32,
    },
    /// Growth of the universal enveloping algebra.
    Envelope {
        #[arg(long, default_value_t = 200)]
        degree: u32,
    },
    /// Chevalley-Eilenberg homology dimensions (n, a, b, dim).
    Homology {
        #[arg(long, default_value_t = 8)]
        max_total_degree: u32,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Quotient dimensions of the free Lie algebra by the defining relations.
    Presentation {
        #[arg(long, default_value_t = 7)]
        max_degree: u32,
    },
    /// Weights, superweights and strip membership of basis monomials.
    Strip {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = Kind::Lie)]
        kind: Kind,
    },
    /// Write figure data (CSV) and renderings (SVG) into a directory.
    Figures {
        /// Figures to produce; all four by default.
        #[arg(long, value_delimiter = ',', default_values_t = vec![1, 2, 3, 4])]
        which: Vec<u8>,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Largest length for figure 1.
        #[arg(long, default_value_t = 9)]
        fig1_n: u32,
        /// Level shown in figure 2.
        #[arg(long, default_value_t = 15)]
        fig2_n: u32,
        /// Largest level for figure 3.
        #[arg(long, default_value_t = 14)]
        fig3_n: u32,
        /// Total degree bound for figure 4.
        #[arg(long, default_value_t = 30)]
        fig4_degree: u32,
    },
    /// Run verification suites; exits nonzero if a hard check fails.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

fn write_table(cli: &Cli, t: &Table) -> Result<(), String> {
    let bytes = t.render(cli.format).map_err(|e| e.to_string())?;
    emit(&bytes, cli.output.as_deref()).map_err(|e| e.to_string())
}

fn note(msg: &str) {
    let _ = writeln!(std::io::stderr(), "{msg}");
}

fn write_figure(dir: &Path, fig: &Figure) -> Result<(), String> {
    let csv = fig.table.to_csv().map_err(|e| e.to_string())?;
    let csv_path = dir.join(format!("{}.csv", fig.name));
    let svg_path = dir.join(format!("{}.svg", fig.name));
    write_atomic(&csv_path, &csv).map_err(|e| format!("{}: {e}", csv_path.display()))?;
    write_atomic(&svg_path, fig.svg.as_bytes()).map_err(|e| format!("{}: {e}", svg_path.display()))?;
    note(&format!("wrote {} ({} rows) and {}", csv_path.display(), fig.table.rows.len(), svg_path.display()));
    Ok(())
}

/// Runs a parsed command line; `Ok(false)` means a verdict failed.
pub fn execute(cli: &Cli) -> Result<bool, String> {
    let s = |e: fiblie_core::Error| e.to_string();
    match &cli.command {
        Command::Basis { max_n, kind } => write_table(cli, &commands::basis_table(*max_n, (*kind).into()).map_err(s)?)?,
        Command::Eval { exprs, monomial_cap } => {
            write_table(cli, &commands::eval_table(exprs, *monomial_cap).map_err(s)?)?
        }
        Command::Bracket { a, b, monomial_cap } => {
            write_table(cli, &commands::bracket_table(a, b, *monomial_cap).map_err(s)?)?
        }
        Command::Nil { element, cap, monomial_cap } => {
            write_table(cli, &commands::nil_table(element, *cap, *monomial_cap).map_err(s)?)?
        }
        Command::NilScan { min, max } => write_table(cli, &commands::nil_scan_table(*min, *max).map_err(s)?)?,
        Command::Hilbert { degree, n, one_var, kind } => {
            let t = if *one_var {
                commands::hilbert_one_var_table(*degree, (*kind).into()).map_err(s)?
            } else if *kind == Kind::Restricted {
                let depth = fiblie_core::series::depth_for_degree(*degree);
                commands::lattice_table(
                    &fiblie_core::series::hilbert_enumerated(n.unwrap_or(depth), BasisKind::Restricted, *degree)
                        .map_err(s)?,
                )
            } else {
                commands::hilbert_table(*degree, *n).map_err(s)?
            };
            write_table(cli, &t)?
        }
        Command::Euler { degree } => write_table(cli, &commands::euler_table(*degree))?,
        Command::Envelope { degree } => {
            let (t, report) = commands::envelope_table(*degree).map_err(s)?;
            write_table(cli, &t)?;
            if let Some(w) = report.witness {
                note(&format!(
                    "witness: level {} has degree sum {}, gamma >= 2^{}: {}",
                    w.level, w.level_degree_sum, w.log2_lower, w.holds
                ));
            }
        }
        Command::Homology { max_total_degree, n } => {
            let out = commands::homology_table(*max_total_degree, *n);
            write_table(cli, &out.table)?;
            let euler_ok = out.euler_mismatches.is_empty();
            note(&format!(
                "d o d = 0: {}; Euler cross-check: {}",
                if out.d_squared_zero { "pass" } else { "FAIL" },
                if euler_ok { "pass".to_string() } else { format!("FAIL at {:?}", out.euler_mismatches) }
            ));
            return Ok(out.d_squared_zero && euler_ok);
        }
        Command::Presentation { max_degree } => {
            let (t, ok) = commands::presentation_table(*max_degree).map_err(s)?;
            write_table(cli, &t)?;
            note(&format!("presentation through degree {max_degree}: {}", if ok { "pass" } else { "FAIL" }));
            return Ok(ok);
        }
        Command::Strip { max_n, kind } => write_table(cli, &commands::strip_table(*max_n, (*kind).into()).map_err(s)?)?,
        Command::Figures { which, out_dir, fig1_n, fig2_n, fig3_n, fig4_degree } => {
            std::fs::create_dir_all(out_dir).map_err(|e| format!("{}: {e}", out_dir.display()))?;
            for w in which {
                let fig = match w {
                    1 => figures::figure1(*fig1_n).map_err(s)?,
                    2 => figures::figure2(*fig2_n).map_err(s)?,
                    3 => figures::figure3(*fig3_n).map_err(s)?,
                    4 => figures::figure4(*fig4_degree),
                    other => return Err(format!("unknown figure {other}; expected 1, 2, 3 or 4")),
                };
                write_figure(out_dir, &fig)?;
            }
        }
        Command::Verify { suite } => {
            let checks = verify::run(suite, cli.seed)?;
            write_table(cli, &verify::table(&checks))?;
            let ok = verify::all_hard_passed(&checks);
            let failed = checks.iter().filter(|c| c.hard && !c.passed).count();
            note(&format!("{} checks, {failed} hard failure(s): {}", checks.len(), if ok { "PASS" } else { "FAIL" }));
            return Ok(ok);
        }
    }
    Ok(true)
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            note(&format!("error: {e}"));
            ExitCode::from(2)
        }
    }
}
