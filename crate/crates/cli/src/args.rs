use clap::{Args, Parser, Subcommand};
use graph_energy_core::energy::DEFAULT_QUAD_TOL;
use graph_energy_core::proofkit::CaseTag;
use graph_energy_core::Sign;
use serde::Serialize;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "graph-energy",
    version,
    about = "Graph energy of C_n and P_n^6: comparisons, sweeps and sign certificates",
    after_help = "Exit status: 0 success, 1 violation found, 2 usage or input error, 3 numerical failure."
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GlobalOpts {
    /// Absolute tolerance for Coulson quadratures
    #[arg(long, global = true, default_value_t = DEFAULT_QUAD_TOL, value_parser = parse_tol)]
    pub tol: f64,
    /// Worker threads for sweeps (default: all cores)
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    #[serde(skip)]
    pub threads: Option<u16>,
    /// Emit the full report as JSON
    #[arg(long, global = true, conflicts_with = "csv")]
    #[serde(skip)]
    pub json: bool,
    /// Emit tables as CSV
    #[arg(long, global = true)]
    #[serde(skip)]
    pub csv: bool,
    /// Cross-check spectral results with Coulson integrals
    #[arg(long, global = true)]
    pub xcheck: bool,
    /// Required sign of E(a) - E(b) for `compare` (negative, zero, positive)
    #[arg(long, global = true, value_parser = parse_sign)]
    #[serde(serialize_with = "ser_sign")]
    pub expect: Option<Sign>,
}

fn ser_sign<S: serde::Serializer>(s: &Option<Sign>, ser: S) -> Result<S::Ok, S::Error> {
    match s {
        Some(s) => ser.serialize_some(&s.to_string()),
        None => ser.serialize_none(),
    }
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if (1e-12..=1e-4).contains(&v) {
        Ok(v)
    } else {
        Err(format!("tolerance {v:e} outside [1e-12, 1e-4]"))
    }
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CertifyTarget {
    All,
    Case(#[serde(serialize_with = "ser_case")] CaseTag),
}

fn ser_case<S: serde::Serializer>(c: &CaseTag, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(c.short_name())
}

fn parse_target(s: &str) -> Result<CertifyTarget, String> {
    if s == "all" {
        Ok(CertifyTarget::All)
    } else {
        s.parse::<CaseTag>()
            .map(CertifyTarget::Case)
            .map_err(|e| format!("{e}; expected 2mod4, 1mod4, 3mod4, 4k or all"))
    }
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Energy of one graph (cycle:<n>, p6:<n>, path:<n> or file:<path>)
    Energy { spec: String },
    /// E(a) - E(b) by the spectral and Coulson routes
    Compare { spec_a: String, spec_b: String },
    /// Check E(P_n^6) > E(C_n) for every n in [n_min, n_max]
    VerifyTheorem { n_min: usize, n_max: usize },
    /// Exact identities plus grid sign certificates for one residue class or all
    Certify {
        #[arg(value_parser = parse_target)]
        case: CertifyTarget,
        /// Positive grid points (negatives are added)
        #[arg(long, default_value_t = 2048)]
        grid_points: usize,
        /// Comma-separated sample orders (single case only)
        #[arg(long, value_delimiter = ',')]
        samples: Option<Vec<usize>>,
        /// Also scan monotonicity of E(C_n) - E(P_n^6) up to this n
        #[arg(long)]
        scan: Option<usize>,
    },
    /// Componentwise comparison of the b_2k coefficients of two bipartite graphs
    QuasiOrder { spec_a: String, spec_b: String },
    /// Every connected unicyclic bipartite graph on n <= 8 vertices against P_n^6
    ExhaustiveSmall { n: usize },
    /// Recompute the quoted numerical constants
    PaperConstants,
}
