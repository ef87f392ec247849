//! Command-line driver.
//!
//! Exit codes: 0 success (or equality), 10 the conjecture fails on the given
//! instance, 2 parse or input error, 3 disconnected input, 4 parameter
//! violation, 5 enumeration budget exceeded, 6 power iteration did not
//! converge, 1 internal consistency failure.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::families::{nikiforov_coloring, nikiforov_with_budget, stock, NikiforovParams, StockKind, DEFAULT_EDGE_BUDGET};
use crate::format::{parse_coloring, parse_hypergraph, write_coloring, write_hypergraph, write_layout};
use crate::hypergraph::Hypergraph;
use crate::power::{conjecture_check, generalized_power, power_cyclic_index_shortcut};
use crate::symmetry::{cyclic_index, verify_coloring};
use crate::tensor::{power_iteration_rho, verify_similarity, SimilarityCertificate};

pub mod exit {
    pub const OK: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const DISCONNECTED: i32 = 3;
    pub const PARAMETER: i32 = 4;
    pub const BUDGET: i32 = 5;
    pub const NON_CONVERGENCE: i32 = 6;
    pub const CONJECTURE_FAILS: i32 = 10;
}

#[derive(Debug, Parser)]
#[command(name = "hypercyclic", version, about = "Cyclic index of uniform hypergraphs and their generalized powers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report ℓ-symmetry for every divisor ℓ of m and the cyclic index.
    Analyze { path: PathBuf },
    /// Write the generalized power G^{M,S} and a `.layout` sidecar.
    Power {
        path: PathBuf,
        #[arg(long = "s")]
        s: usize,
        /// Defaults to S*t.
        #[arg(long = "m")]
        m: Option<usize>,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
    /// Compare c(G^{st,s}) with s*c(G).
    Conjecture {
        path: PathBuf,
        #[arg(long = "s")]
        s: usize,
    },
    /// Generate a Nikiforov hypergraph and its odd-coloring.
    Nikiforov {
        #[arg(long = "k")]
        k: usize,
        /// Part sizes |A|,|B|,|C|.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
        /// Coloring output path; defaults to `<out>.coloring`.
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_EDGE_BUDGET)]
        budget: u128,
    },
    /// Generate a stock hypergraph: cycle N, path N, complete N, single-edge M.
    Gen {
        kind: String,
        size: usize,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Perron root by power iteration.
    Rho {
        path: PathBuf,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = 100_000)]
        max_iter: usize,
    },
    /// Check an (m, ℓ)-coloring and its diagonal-similarity certificate.
    VerifyColoring {
        path: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        ell: u64,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. }
            | Error::ModulusMismatch { .. }
            | Error::DimensionMismatch { .. }
            | Error::UnreducedEntry { .. }
            | Error::InvalidUniformity(_)
            | Error::TooFewVertices { .. }
            | Error::EdgeSize { .. }
            | Error::RepeatedVertex { .. }
            | Error::VertexOutOfRange { .. }
            | Error::DuplicateEdge { .. }
            | Error::InvalidModulus(_) => exit::PARSE,
            Error::Disconnected => exit::DISCONNECTED,
            Error::NotDivisor { .. } | Error::InvalidParameter(_) => exit::PARAMETER,
            Error::BudgetExceeded { .. } => exit::BUDGET,
            Error::NonConvergence { .. } => exit::NON_CONVERGENCE,
            Error::Consistency(_) => exit::INTERNAL,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: exit::PARSE, message: e.to_string() }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Runs a parsed command, writing the report to `out` and failures to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Analyze { path } => analyze(&path, out),
        Command::Power { path, s, m, out: dest } => power(&path, s, m, &dest, out),
        Command::Conjecture { path, s } => conjecture(&path, s, out),
        Command::Nikiforov { k, sizes, out: dest, coloring, budget } => {
            nikiforov(k, &sizes, dest.as_deref(), coloring.as_deref(), budget, out)
        }
        Command::Gen { kind, size, out: dest } => gen(&kind, size, dest.as_deref(), out),
        Command::Rho { path, tol, max_iter } => rho(&path, tol, max_iter, out),
        Command::VerifyColoring { path, coloring, ell } => verify(&path, &coloring, ell, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let _ = write!(err, "{e}");
            if e.use_stderr() {
                exit::PARAMETER
            } else {
                exit::OK
            }
        }
    }
}

fn read_hypergraph(path: &Path) -> std::result::Result<Hypergraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure {
        code: exit::PARSE,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_hypergraph(&text).map_err(|e| Failure { code: exit::PARSE, message: format!("{}: {e}", path.display()) })
}

fn sidecar(path: &Path, extension: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(extension);
    PathBuf::from(s)
}

fn join(values: &[u64]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn analyze(path: &Path, out: &mut dyn Write) -> CmdResult {
    let g = read_hypergraph(path)?;
    let report = cyclic_index(&g)?;
    writeln!(out, "m = {}", g.uniformity())?;
    writeln!(out, "n = {}", g.vertex_count())?;
    writeln!(out, "k = {}", g.edge_count())?;
    for ev in &report.divisor_evidence {
        match &ev.witness {
            Some(phi) => writeln!(out, "ell = {}: solvable, witness [{}]", ev.ell, join(phi.values()))?,
            None => writeln!(out, "ell = {}: unsolvable", ev.ell)?,
        }
    }
    writeln!(out, "cyclic_index = {}", report.cyclic_index)?;
    Ok(exit::OK)
}

fn power(path: &Path, s: usize, m: Option<usize>, dest: &Path, out: &mut dyn Write) -> CmdResult {
    let g = read_hypergraph(path)?;
    let m = m.unwrap_or(s * g.uniformity());
    let (p, layout) = generalized_power(&g, m, s)?;
    let layout_path = sidecar(dest, "layout");
    fs::write(dest, write_hypergraph(&p))?;
    fs::write(&layout_path, write_layout(&layout, &g))?;
    writeln!(
        out,
        "wrote {} ({}-uniform, {} vertices, {} edges) and {}",
        dest.display(),
        p.uniformity(),
        p.vertex_count(),
        p.edge_count(),
        layout_path.display()
    )?;
    if let Some(c) = power_cyclic_index_shortcut(&g, m, s)? {
        writeln!(out, "cyclic_index = {c} (m > st)")?;
    }
    Ok(exit::OK)
}

fn conjecture(path: &Path, s: usize, out: &mut dyn Write) -> CmdResult {
    let g = read_hypergraph(path)?;
    let r = conjecture_check(&g, s)?;
    writeln!(out, "t = {}", r.t)?;
    writeln!(out, "s = {}", r.s)?;
    writeln!(out, "m = {}", r.m)?;
    writeln!(out, "c(base) = {}", r.base_cyclic_index)?;
    writeln!(out, "c(power)={}, s*c(base)={}", r.power_cyclic_index, r.product)?;
    writeln!(out, "guaranteed_symmetry = {}", r.guaranteed_symmetry)?;
    writeln!(out, "equality = {}", r.equality)?;
    writeln!(out, "characterization_solvable = {}", r.characterization_solvable)?;
    if let Some(x) = &r.characterization_witness {
        writeln!(out, "characterization_witness = [{}]", join(x))?;
    }
    if r.equality {
        Ok(exit::OK)
    } else {
        writeln!(out, "conjecture fails on this instance")?;
        Ok(exit::CONJECTURE_FAILS)
    }
}

fn nikiforov(
    k: usize,
    sizes: &[usize],
    dest: Option<&Path>,
    coloring: Option<&Path>,
    budget: u128,
    out: &mut dyn Write,
) -> CmdResult {
    let &[a, b, c] = sizes else {
        return Err(Error::InvalidParameter(format!("--sizes needs three values, got {}", sizes.len())).into());
    };
    let params = NikiforovParams::new(k, a, b, c)?;
    let g = nikiforov_with_budget(&params, budget)?;
    let phi = nikiforov_coloring(&params)?;
    let coloring_path = coloring.map(Path::to_path_buf).or_else(|| dest.map(|d| sidecar(d, "coloring")));
    match dest {
        Some(d) => {
            fs::write(d, write_hypergraph(&g))?;
            writeln!(out, "wrote {} ({} vertices, {} edges)", d.display(), g.vertex_count(), g.edge_count())?;
        }
        None => out.write_all(write_hypergraph(&g).as_bytes())?,
    }
    if let Some(cp) = coloring_path {
        fs::write(&cp, write_coloring(&phi))?;
        if dest.is_some() {
            writeln!(out, "wrote {}", cp.display())?;
        }
    }
    Ok(exit::OK)
}

fn gen(kind: &str, size: usize, dest: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let g = stock(kind.parse::<StockKind>()?, size)?;
    match dest {
        Some(d) => {
            fs::write(d, write_hypergraph(&g))?;
            writeln!(out, "wrote {} ({} vertices, {} edges)", d.display(), g.vertex_count(), g.edge_count())?;
        }
        None => out.write_all(write_hypergraph(&g).as_bytes())?,
    }
    Ok(exit::OK)
}

fn rho(path: &Path, tol: f64, max_iter: usize, out: &mut dyn Write) -> CmdResult {
    let g = read_hypergraph(path)?;
    let est = power_iteration_rho(&g, tol, max_iter)?;
    writeln!(out, "rho = {:.12}", est.rho)?;
    writeln!(out, "residual = {:e}", est.residual)?;
    writeln!(out, "bracket = [{:.15}, {:.15}]", est.lower, est.upper)?;
    writeln!(out, "iterations = {}", est.iterations)?;
    Ok(exit::OK)
}

fn verify(path: &Path, coloring: &Path, ell: u64, out: &mut dyn Write) -> CmdResult {
    let g = read_hypergraph(path)?;
    let text = fs::read_to_string(coloring)
        .map_err(|e| Failure { code: exit::PARSE, message: format!("{}: {e}", coloring.display()) })?;
    let phi = parse_coloring(&text)
        .map_err(|e| Failure { code: exit::PARSE, message: format!("{}: {e}", coloring.display()) })?;
    if ell == 0 || !(g.uniformity() as u64).is_multiple_of(ell) {
        return Err(Error::NotDivisor { ell, modulus: g.uniformity() as u64 }.into());
    }
    let valid = verify_coloring(&g, &phi, ell)?;
    let cert = verify_similarity(&g, &phi, ell)?;
    if valid != cert.holds() {
        return Err(Error::Consistency(format!(
            "coloring verdict {valid} disagrees with similarity deviation {:e}",
            cert.max_deviation
        ))
        .into());
    }
    if valid {
        writeln!(out, "valid, max_deviation <= {:e}", SimilarityCertificate::THRESHOLD)?;
    } else {
        writeln!(out, "invalid")?;
    }
    writeln!(out, "max_deviation = {:e}", cert.max_deviation)?;
    Ok(exit::OK)
}
