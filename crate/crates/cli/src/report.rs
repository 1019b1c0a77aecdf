//! Run reports and their three renderings: aligned text, CSV and JSON.
//!
//! Text and CSV print floats with six decimals. JSON keeps full precision
//! and parses back into an identical [`RunReport`].

use std::io::Write;

use graph_energy_core::charpoly::QuasiOrder;
use graph_energy_core::enumerate::ExhaustiveReport;
use graph_energy_core::proofkit::certificates::WorstPoint;
use graph_energy_core::proofkit::{
    CaseTag, GridSpec, LimitIntegrals, MonotonicityReport, TheoremRow,
};
use graph_energy_core::EnergyComparison;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    /// The arguments the tool was invoked with.
    pub command: Vec<String>,
    pub items: Vec<Item>,
    pub notes: Vec<String>,
    /// Non-empty exactly when the run found a mathematical violation.
    pub violations: Vec<String>,
    pub wall_time_s: f64,
    pub version: String,
    /// SHA-256 over the settings that influence results (thread count and
    /// output format excluded).
    pub config_digest: String,
}

impl RunReport {
    pub fn new(command: Vec<String>, config_digest: String) -> Self {
        RunReport {
            command,
            items: Vec::new(),
            notes: Vec::new(),
            violations: Vec::new(),
            wall_time_s: 0.0,
            version: env!("CARGO_PKG_VERSION").to_string(),
            config_digest,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn digest_of(config: &serde_json::Value) -> String {
    let bytes = Sha256::digest(config.to_string().as_bytes());
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Item {
    Energy(EnergyItem),
    Comparison(EnergyComparison),
    TheoremRow(TheoremRow),
    Identity(IdentityItem),
    Certificate(CertificateItem),
    LimitIntegrals(LimitIntegrals),
    Monotonicity(MonotonicityReport),
    QuasiOrder(QuasiOrderItem),
    Exhaustive(ExhaustiveReport),
    Constant(ConstantItem),
}

impl Item {
    fn kind(&self) -> &'static str {
        match self {
            Item::Energy(_) => "energy",
            Item::Comparison(_) => "comparison",
            Item::TheoremRow(_) => "theorem",
            Item::Identity(_) => "identities",
            Item::Certificate(_) => "certificates",
            Item::LimitIntegrals(_) => "limit integrals",
            Item::Monotonicity(_) => "monotonicity",
            Item::QuasiOrder(_) => "quasi-order",
            Item::Exhaustive(_) => "exhaustive",
            Item::Constant(_) => "constants",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyItem {
    pub spec: String,
    pub n: usize,
    pub edges: usize,
    pub energy: f64,
    pub spectrum_abs_tol: f64,
    pub coulson_energy: Option<f64>,
    pub coulson_err: Option<f64>,
    pub method_gap: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityItem {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateItem {
    pub case_tag: CaseTag,
    pub grid_spec: GridSpec,
    pub min_margin: f64,
    pub identities: Vec<String>,
    pub timestamp: String,
    pub quantity: String,
    pub n_samples: Vec<usize>,
    pub worst: WorstPoint,
    pub points_checked: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuasiOrderItem {
    pub spec_a: String,
    pub spec_b: String,
    pub n: usize,
    /// `b_{2k}` of the first graph as decimal strings, `k = 0, 1, ...`.
    pub b_a: Vec<String>,
    pub b_b: Vec<String>,
    pub verdict: QuasiOrder,
    /// First `k` with `b_{2k}(a) < b_{2k}(b)`.
    pub witness_less: Option<usize>,
    /// First `k` with `b_{2k}(a) > b_{2k}(b)`.
    pub witness_greater: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantItem {
    pub name: String,
    pub quoted: f64,
    pub computed: f64,
    pub tolerance: f64,
    pub within: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i128),
    Float(f64),
    /// Printed in scientific notation; for margins and error estimates.
    Sci(f64),
    Missing,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => format!("{v:.6}"),
            Cell::Sci(v) => format!("{v:.6e}"),
            Cell::Missing => "-".to_string(),
        }
    }

    fn is_numeric(&self) -> bool {
        !matches!(self, Cell::Text(_))
    }
}

fn opt(v: Option<f64>) -> Cell {
    v.map_or(Cell::Missing, Cell::Float)
}

fn opt_sci(v: Option<f64>) -> Cell {
    v.map_or(Cell::Missing, Cell::Sci)
}

fn text(s: impl ToString) -> Cell {
    Cell::Text(s.to_string())
}

fn int(v: usize) -> Cell {
    Cell::Int(v as i128)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub title: String,
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

fn headers(kind: &str) -> Vec<&'static str> {
    match kind {
        "energy" => vec!["spec", "n", "m", "energy", "coulson", "gap"],
        "comparison" => vec![
            "a", "b", "n", "E(a)", "E(b)", "spectral", "coulson", "gap", "verdict", "route",
        ],
        "theorem" => vec!["n", "E(C_n)-E(P_n^6)", "spectral", "coulson", "route", "status"],
        "identities" => vec!["identity", "holds"],
        "certificates" => vec![
            "case", "quantity", "samples", "points", "min_margin", "worst_n", "worst_x",
        ],
        "limit integrals" => vec!["first", "second", "first_log", "second_log", "err"],
        "monotonicity" => vec!["residue", "n", "difference", "step"],
        "quasi-order" => vec!["k", "b_2k(a)", "b_2k(b)", "cmp"],
        "exhaustive" => vec![
            "n", "trees", "graphs", "C_n copies", "P6 copies", "E(P_n^6)", "max other", "passed",
        ],
        "constants" => vec!["constant", "quoted", "computed", "tolerance", "within"],
        _ => Vec::new(),
    }
}

fn rows(item: &Item) -> Vec<Vec<Cell>> {
    match item {
        Item::Energy(e) => vec![vec![
            text(&e.spec),
            int(e.n),
            int(e.edges),
            Cell::Float(e.energy),
            opt(e.coulson_energy),
            opt_sci(e.method_gap),
        ]],
        Item::Comparison(c) => vec![vec![
            text(&c.spec_a),
            text(&c.spec_b),
            int(c.n),
            opt(c.energy_a),
            opt(c.energy_b),
            opt(c.spectral_diff),
            opt(c.coulson_diff),
            opt_sci(c.method_gap),
            text(c.verdict),
            text(route_name(&c.route)),
        ]],
        Item::TheoremRow(r) => vec![vec![
            int(r.n),
            Cell::Float(r.comparison.difference),
            opt(r.comparison.spectral_diff),
            opt(r.comparison.coulson_diff),
            text(route_name(&r.comparison.route)),
            text(status_name(r)),
        ]],
        Item::Identity(i) => vec![vec![text(&i.name), text(i.holds)]],
        Item::Certificate(c) => vec![vec![
            text(c.case_tag),
            text(&c.quantity),
            text(
                c.n_samples
                    .iter()
                    .map(|n| n.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
            int(c.points_checked),
            Cell::Sci(c.min_margin),
            int(c.worst.n),
            Cell::Sci(c.worst.x),
        ]],
        Item::LimitIntegrals(l) => vec![vec![
            Cell::Float(l.first),
            Cell::Float(l.second),
            Cell::Float(l.first_log),
            Cell::Float(l.second_log),
            Cell::Sci(l.err_estimate),
        ]],
        Item::Monotonicity(m) => m
            .entries
            .iter()
            .map(|e| {
                vec![
                    int(m.residue),
                    int(e.n),
                    Cell::Float(e.difference),
                    opt(e.step),
                ]
            })
            .collect(),
        Item::QuasiOrder(q) => {
            let len = q.b_a.len().max(q.b_b.len());
            (0..len)
                .map(|k| {
                    let a = q.b_a.get(k).map_or("0", String::as_str);
                    let b = q.b_b.get(k).map_or("0", String::as_str);
                    let mark = if Some(k) == q.witness_less {
                        "< witness"
                    } else if Some(k) == q.witness_greater {
                        "> witness"
                    } else {
                        ""
                    };
                    vec![int(k), text(a), text(b), text(mark)]
                })
                .collect()
        }
        Item::Exhaustive(x) => vec![vec![
            int(x.n),
            int(x.trees),
            int(x.graphs),
            int(x.cycle_copies),
            int(x.p6_copies),
            Cell::Float(x.energy_p6),
            Cell::Float(x.max_other_energy),
            text(x.passed()),
        ]],
        Item::Constant(c) => vec![vec![
            text(&c.name),
            Cell::Float(c.quoted),
            Cell::Float(c.computed),
            Cell::Sci(c.tolerance),
            text(c.within),
        ]],
    }
}

fn route_name(r: &graph_energy_core::energy::Route) -> String {
    serde_json::to_value(r)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn status_name(r: &TheoremRow) -> String {
    serde_json::to_value(r.status)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// Groups consecutive items of the same kind into tables.
pub fn tables(report: &RunReport) -> Vec<Table> {
    let mut out: Vec<Table> = Vec::new();
    for item in &report.items {
        let kind = item.kind();
        let title = match item {
            Item::QuasiOrder(q) => format!(
                "quasi-order {} vs {}: {:?}",
                q.spec_a, q.spec_b, q.verdict
            ),
            _ => kind.to_string(),
        };
        match out.last_mut() {
            Some(t) if t.title == title => t.rows.extend(rows(item)),
            _ => out.push(Table {
                title,
                headers: headers(kind),
                rows: rows(item),
            }),
        }
    }
    out
}

pub fn write_text(report: &RunReport, w: &mut impl Write) -> std::io::Result<()> {
    for t in tables(report) {
        writeln!(w, "== {} ==", t.title)?;
        let rendered: Vec<Vec<String>> =
            t.rows.iter().map(|r| r.iter().map(Cell::render).collect()).collect();
        let mut width: Vec<usize> = t.headers.iter().map(|h| h.chars().count()).collect();
        for r in &rendered {
            for (i, c) in r.iter().enumerate() {
                width[i] = width[i].max(c.chars().count());
            }
        }
        let line: Vec<String> = t
            .headers
            .iter()
            .enumerate()
            .map(|(i, h)| format!("{h:<w$}", w = width[i]))
            .collect();
        writeln!(w, "{}", line.join("  ").trim_end())?;
        for (r, cells) in rendered.iter().zip(&t.rows) {
            let line: Vec<String> = r
                .iter()
                .zip(cells)
                .enumerate()
                .map(|(i, (s, c))| {
                    if c.is_numeric() {
                        format!("{s:>w$}", w = width[i])
                    } else {
                        format!("{s:<w$}", w = width[i])
                    }
                })
                .collect();
            writeln!(w, "{}", line.join("  ").trim_end())?;
        }
        writeln!(w)?;
    }
    for n in &report.notes {
        writeln!(w, "note: {n}")?;
    }
    for v in &report.violations {
        writeln!(w, "VIOLATION: {v}")?;
    }
    writeln!(
        w,
        "{} in {:.3} s (version {}, config {})",
        if report.passed() { "ok" } else { "FAILED" },
        report.wall_time_s,
        report.version,
        &report.config_digest[..12.min(report.config_digest.len())]
    )
}

/// One CSV block per table. Every record starts with the table title; the
/// header record of each block starts with the literal `table`.
pub fn write_csv(report: &RunReport, w: impl Write) -> Result<(), csv::Error> {
    let mut out = csv::WriterBuilder::new().flexible(true).from_writer(w);
    for t in tables(report) {
        let mut head = vec!["table"];
        head.extend(&t.headers);
        out.write_record(&head)?;
        for r in &t.rows {
            let mut rec = vec![t.title.clone()];
            rec.extend(r.iter().map(Cell::render));
            out.write_record(&rec)?;
        }
    }
    out.flush()?;
    Ok(())
}

pub fn to_json(report: &RunReport) -> serde_json::Result<String> {
    serde_json::to_string_pretty(report)
}

pub fn from_json(text: &str) -> serde_json::Result<RunReport> {
    serde_json::from_str(text)
}
