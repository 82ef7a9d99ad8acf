//! Command implementations for the `biharmonic` binary.
//!
//! Every command returns a [`CommandOutcome`] instead of printing, so the
//! whole front end can be driven in-process. Exit codes: 0 success,
//! 1 verification failure, 2 usage or input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use biharmonic::graph::{read_edge_list, write_edge_list};
use biharmonic::numfmt::format_sig;
use biharmonic::spectral::{
    biharmonic_determinant, biharmonic_index_spectral, biharmonic_minnorm,
    biharmonic_pinv_entries, biharmonic_spectral, bounds_report, check_brk, check_minimum_index,
    distance_matrix, kirchhoff_index, MethodSuite,
};
use biharmonic::verify::{all_passed, verify_graph, Status, VerifyOptions};
use biharmonic::{Error, Family, Graph, SpectralCache};
use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        CommandOutcome {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "biharmonic", version, about = "Biharmonic distance and indices of graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Sum over the Laplacian spectrum
    Spectral,
    /// Entries of the squared pseudoinverse
    Pinv,
    /// Principal minor of L^2 and the spanning-tree count
    Det,
    /// Norm of the minimum-norm solution of L x = e_u - e_v
    Minnorm,
    /// All four, with their relative spread
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated graph as an edge list
    Gen {
        /// complete | path | cycle | wheel | hypercube | k4minus
        family: String,
        /// Family parameters (n, or d for hypercube)
        params: Vec<String>,
        /// Output path; stdout when omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Biharmonic distance between two vertices
    Dist {
        path: PathBuf,
        u: usize,
        v: usize,
        #[arg(long, value_enum, default_value_t = Method::Spectral)]
        method: Method,
    },
    /// All pairwise distances as CSV
    Matrix { path: PathBuf },
    /// Biharmonic and Kirchhoff indices with their lower bounds
    Index { path: PathBuf },
    /// Run every invariant check on a graph
    Verify {
        path: PathBuf,
        /// Also report the unnormalized hypercube formula when applicable
        #[arg(long)]
        show_unnormalized: bool,
        /// Perturb one distance route so the agreement check fails
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Eigenvalue bounds on one distance and their attainment
    Bounds { path: PathBuf, u: usize, v: usize },
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandOutcome {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                CommandOutcome::ok(rendered)
            };
        }
    };
    let result = match cli.command {
        Command::Gen {
            family,
            params,
            output,
        } => cmd_gen(&family, &params, output.as_deref()),
        Command::Dist { path, u, v, method } => cmd_dist(&path, u, v, method),
        Command::Matrix { path } => cmd_matrix(&path),
        Command::Index { path } => cmd_index(&path),
        Command::Verify {
            path,
            show_unnormalized,
            inject_fault,
        } => cmd_verify(
            &path,
            &VerifyOptions {
                inject_fault,
                show_unnormalized,
                ..Default::default()
            },
        ),
        Command::Bounds { path, u, v } => cmd_bounds(&path, u, v),
    };
    result.unwrap_or_else(CommandOutcome::input_error)
}

fn load(path: &Path) -> Result<Graph, Error> {
    Ok(read_edge_list(path)?)
}

fn load_connected(path: &Path) -> Result<SpectralCache, Error> {
    SpectralCache::build(&load(path)?)
}

pub fn cmd_gen(family: &str, params: &[String], output: Option<&Path>) -> Result<CommandOutcome, Error> {
    let family = Family::parse(family, params)?;
    let g = Graph::generate(family)?;
    let text = write_edge_list(&g);
    match output {
        None => Ok(CommandOutcome::ok(text)),
        Some(path) => {
            std::fs::write(path, text).map_err(|e| {
                Error::EdgeList(biharmonic::graph::EdgeListError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })
            })?;
            Ok(CommandOutcome::ok(format!(
                "wrote {family} to {} ({} vertices, {} edges)\n",
                path.display(),
                g.n(),
                g.m()
            )))
        }
    }
}

pub fn cmd_dist(path: &Path, u: usize, v: usize, method: Method) -> Result<CommandOutcome, Error> {
    let g = load(path)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut stderr = String::new();
    let det_warning = "warning: the determinant formula needs distinct vertices; d_B(u,u) = 0\n";
    let stdout = match method {
        Method::Spectral => format!("{}\n", format_sig(biharmonic_spectral(&SpectralCache::build(&g)?, u, v)?)),
        Method::Pinv => format!("{}\n", format_sig(biharmonic_pinv_entries(&SpectralCache::build(&g)?, u, v)?)),
        Method::Minnorm => format!("{}\n", format_sig(biharmonic_minnorm(&g, u, v)?)),
        Method::Det => {
            SpectralCache::build(&g)?;
            if u == v {
                stderr.push_str(det_warning);
                "0\n".to_string()
            } else {
                format!("{}\n", format_sig(biharmonic_determinant(&g, u, v)?))
            }
        }
        Method::All => {
            let suite = MethodSuite::new(&g)?;
            let values = if u == v {
                stderr.push_str(det_warning);
                [0.0; 4]
            } else {
                suite.report(u, v)?.values()
            };
            let report = biharmonic::spectral::MethodReport::new((u, v), values);
            let mut s = String::new();
            let _ = writeln!(s, "pair {u} {v}");
            for (name, x) in ["spectral", "pinv", "det", "minnorm"].iter().zip(report.values()) {
                let _ = writeln!(s, "{name} {}", format_sig(x));
            }
            let _ = writeln!(s, "max_relative_spread {}", format_sig(report.max_relative_spread));
            s
        }
    };
    Ok(CommandOutcome {
        exit_code: EXIT_OK,
        stdout,
        stderr,
    })
}

pub fn cmd_matrix(path: &Path) -> Result<CommandOutcome, Error> {
    let cache = load_connected(path)?;
    let n = cache.n();
    let mut s = String::new();
    let header: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
    let _ = writeln!(s, "{}", header.join(","));
    for row in distance_matrix(&cache) {
        let cells: Vec<String> = row.into_iter().map(format_sig).collect();
        let _ = writeln!(s, "{}", cells.join(","));
    }
    Ok(CommandOutcome::ok(s))
}

fn equality_label(equality: bool) -> &'static str {
    if equality {
        "equality"
    } else {
        "strict"
    }
}

pub fn cmd_index(path: &Path) -> Result<CommandOutcome, Error> {
    let cache = load_connected(path)?;
    let mut s = String::new();
    let _ = writeln!(s, "vertices {}", cache.n());
    let _ = writeln!(s, "biharmonic_index {}", format_sig(biharmonic_index_spectral(&cache)));
    let _ = writeln!(s, "kirchhoff_index {}", format_sig(kirchhoff_index(&cache)));
    match check_brk(&cache) {
        Ok(brk) => {
            let _ = writeln!(s, "kirchhoff_lower_bound {} {}", format_sig(brk.rhs), equality_label(brk.equality));
        }
        Err(Error::TooFewVertices { .. }) => {
            let _ = writeln!(s, "kirchhoff_lower_bound undefined");
        }
        Err(e) => return Err(e),
    }
    let floor = check_minimum_index(&cache);
    let _ = writeln!(s, "order_lower_bound {} {}", format_sig(floor.floor), equality_label(floor.equality));
    Ok(CommandOutcome::ok(s))
}

pub fn cmd_verify(path: &Path, options: &VerifyOptions) -> Result<CommandOutcome, Error> {
    let g = load(path)?;
    let checks = verify_graph(&g, options)?;
    let mut s = String::new();
    let mut counted = 0;
    let mut passed = 0;
    for c in &checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Note => "NOTE",
        };
        if c.status != Status::Note {
            counted += 1;
            passed += (c.status == Status::Pass) as usize;
        }
        let _ = writeln!(s, "{tag} {}: {}", c.name, c.detail);
    }
    let _ = writeln!(s, "summary: {passed}/{counted} checks passed");
    Ok(CommandOutcome {
        exit_code: if all_passed(&checks) { EXIT_OK } else { EXIT_VERIFY_FAILED },
        stdout: s,
        stderr: String::new(),
    })
}

fn index_set(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(|k| (k + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn cmd_bounds(path: &Path, u: usize, v: usize) -> Result<CommandOutcome, Error> {
    let cache = load_connected(path)?;
    let r = bounds_report(&cache, u, v)?;
    let mut s = String::new();
    let _ = writeln!(s, "# eigenvalue indices are 1-based; lambda_1 = 0");
    let _ = writeln!(s, "pair {u} {v}");
    let _ = writeln!(s, "lambda_2 {}", format_sig(cache.lambda_2()));
    let _ = writeln!(s, "lambda_n {}", format_sig(cache.lambda_max()));
    let _ = writeln!(s, "lower {}", format_sig(r.lower));
    let _ = writeln!(s, "value {}", format_sig(r.value));
    let _ = writeln!(s, "upper {}", format_sig(r.upper));
    let _ = writeln!(s, "sigma_2 {}", index_set(&r.sigma_2));
    let _ = writeln!(s, "sigma_n {}", index_set(&r.sigma_n));
    let _ = writeln!(s, "lower_attained {}", r.lower_attained);
    let _ = writeln!(s, "lower_orthogonality {}", r.lower_orthogonal);
    let _ = writeln!(s, "upper_attained {}", r.upper_attained);
    let _ = writeln!(s, "upper_orthogonality {}", r.upper_orthogonal);
    let _ = writeln!(s, "determinations_agree {}", r.determinations_agree());
    let consistent = r.within_bounds() && r.determinations_agree();
    Ok(CommandOutcome {
        exit_code: if consistent { EXIT_OK } else { EXIT_VERIFY_FAILED },
        stdout: s,
        stderr: String::new(),
    })
}
