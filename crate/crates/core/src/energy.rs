//! Graph energy `E(G) = sum |lambda_i|`, computed from the spectrum or from
//! the Coulson integral
//!
//! ```text
//! E(G1) - E(G2) = (1/pi) int_R log|phi(G1, ix) / phi(G2, ix)| dx.
//! ```
//!
//! The integrand is even, so the integral is folded onto `(0, inf)` and
//! evaluated with [`exp_sinh`](crate::quadrature::exp_sinh).

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::axis::{log_ratio, ImagAxisPoly};
use crate::charpoly::charpoly_auto;
use crate::eigen::{error_bound, symmetric_eigenvalues};
use crate::graph::{Family, Graph, GraphError, Subject};
use crate::poly::{IntPoly, PolyError};
use crate::proofkit::closed::{coulson_cycle_vs_p6, AxisForms, CLOSED_FORM_MIN_N};
use crate::quadrature::{exp_sinh, QuadratureResult, Refinement};

pub const DEFAULT_SPECTRUM_TOL: f64 = 1e-11;
pub const DEFAULT_QUAD_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EnergyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("tolerance {0:e} outside [1e-13, 1e-6]")]
    InvalidTolerance(f64),
    #[error("eigensolver did not converge after {rotations} rotations")]
    NoConvergence { rotations: usize, partial: Vec<f64> },
    #[error("eigenvalue accuracy bound {bound:e} exceeds requested {requested:e}")]
    AccuracyUnreachable { bound: f64, requested: f64 },
    #[error("polynomials have degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("graphs have orders {0} and {1}")]
    OrderMismatch(usize, usize),
    #[error("quadrature did not reach the tolerance (estimate {value}, error {err_estimate:e})")]
    QuadratureFailed { value: f64, err_estimate: f64 },
}

/// Eigenvalues sorted descending, with the absolute accuracy they carry.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub abs_tol: f64,
}

impl Spectrum {
    pub fn energy(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum()
    }

    pub fn trace(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }

    /// Largest `|values[i] + values[n-1-i]|`.
    pub fn symmetry_defect(&self) -> f64 {
        let n = self.values.len();
        (0..n)
            .map(|i| (self.values[i] + self.values[n - 1 - i]).abs())
            .fold(0.0, f64::max)
    }

    /// Checks trace, Frobenius norm and (if `bipartite`) sign symmetry
    /// against `g`.
    pub fn check_invariants(&self, g: &Graph) -> bool {
        let n = self.values.len() as f64;
        let slack = n * self.abs_tol;
        let frob_slack = slack * (2.0 * self.values.iter().fold(0.0f64, |m, v| m.max(v.abs())) + 1.0);
        self.values.len() == g.n()
            && self.trace().abs() <= slack
            && (self.sum_of_squares() - 2.0 * g.edge_count() as f64).abs() <= frob_slack
            && (!g.bipartite_flag() || self.symmetry_defect() <= self.abs_tol)
    }
}

/// All adjacency eigenvalues of `g` to absolute accuracy `abs_tol`.
pub fn spectrum(g: &Graph, abs_tol: f64) -> Result<Spectrum, EnergyError> {
    if !(1e-13..=1e-6).contains(&abs_tol) {
        return Err(EnergyError::InvalidTolerance(abs_tol));
    }
    let n = g.n();
    let a = g.adjacency_matrix();
    let bound = error_bound(&a, n);
    if bound > abs_tol {
        return Err(EnergyError::AccuracyUnreachable {
            bound,
            requested: abs_tol,
        });
    }
    let values = symmetric_eigenvalues(&a, n).map_err(|e| EnergyError::NoConvergence {
        rotations: e.rotations,
        partial: e.diagonal,
    })?;
    Ok(Spectrum { values, abs_tol })
}

pub fn energy_spectral(g: &Graph) -> Result<f64, EnergyError> {
    Ok(spectrum(g, DEFAULT_SPECTRUM_TOL)?.energy())
}

/// `sum_j |2 cos(2 pi j / n)|`, the energy of `C_n` without matrix work.
pub fn energy_cycle_reference(n: usize) -> f64 {
    (0..n)
        .map(|j| (2.0 * (2.0 * PI * j as f64 / n as f64).cos()).abs())
        .sum()
}

fn check_monic(p: &IntPoly) -> Result<usize, EnergyError> {
    let d = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    if !p.is_monic() {
        return Err(EnergyError::NotMonic);
    }
    Ok(d)
}

/// `(1/pi) int_R log|pa(ix)/pb(ix)| dx` for monic polynomials of equal
/// degree, to absolute accuracy `tol`. A result that misses the tolerance is
/// returned with `converged = false`.
pub fn coulson_diff(pa: &IntPoly, pb: &IntPoly, tol: f64) -> Result<QuadratureResult, EnergyError> {
    let (da, db) = (check_monic(pa)?, check_monic(pb)?);
    if da != db {
        return Err(EnergyError::DegreeMismatch(da, db));
    }
    let a = ImagAxisPoly::new(pa)?;
    let b = ImagAxisPoly::new(pb)?;
    Ok(coulson_prepared(&a, &b, tol))
}

/// [`coulson_diff`] over prepared evaluators.
pub fn coulson_prepared(a: &ImagAxisPoly, b: &ImagAxisPoly, tol: f64) -> QuadratureResult {
    let scale = 2.0 / PI;
    let mut r = exp_sinh(|x| log_ratio(a, b, x), Refinement::exp_sinh(tol / scale));
    r.value *= scale;
    r.err_estimate *= scale;
    r
}

/// `E(G)` as the Coulson difference against the empty graph, whose
/// characteristic polynomial is `x^n`.
pub fn coulson_energy(p: &IntPoly, tol: f64) -> Result<QuadratureResult, EnergyError> {
    let n = check_monic(p)?;
    coulson_diff(p, &IntPoly::x().pow(n as u32), tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    /// Sign of `v`, treating `|v| <= zero_tol` as zero.
    pub fn of(v: f64, zero_tol: f64) -> Self {
        if v > zero_tol {
            Sign::Positive
        } else if v < -zero_tol {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

impl core::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "negative" | "neg" | "-" => Ok(Sign::Negative),
            "zero" | "0" => Ok(Sign::Zero),
            "positive" | "pos" | "+" => Ok(Sign::Positive),
            other => Err(alloc::format!("unknown sign `{other}`")),
        }
    }
}

/// Which computations produced an [`EnergyComparison`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Route {
    /// Spectral energies and a polynomial Coulson integral.
    Both,
    SpectralOnly,
    /// Coulson integral over characteristic polynomials.
    CoulsonPolynomial,
    /// Coulson integral over the closed forms for `C_n` against `P_n^6`.
    CoulsonClosedForm,
}

#[derive(Debug, Clone, Copy)]
pub struct CompareOptions {
    /// Quadrature tolerance.
    pub tol: f64,
    /// Largest order for which the dense eigensolver runs.
    pub both_methods_max_n: usize,
    /// Allowed disagreement between the two routes.
    pub gap_tol: f64,
    /// Run the Coulson integral even when spectral energies are available.
    pub xcheck: bool,
    /// Differences this small are reported as zero.
    pub zero_tol: f64,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            tol: DEFAULT_QUAD_TOL,
            both_methods_max_n: 64,
            gap_tol: 1e-6,
            xcheck: true,
            zero_tol: 1e-9,
        }
    }
}

/// `E(a) - E(b)` with the evidence behind it.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnergyComparison {
    pub spec_a: String,
    pub spec_b: String,
    pub n: usize,
    pub energy_a: Option<f64>,
    pub energy_b: Option<f64>,
    pub spectral_diff: Option<f64>,
    pub coulson_diff: Option<f64>,
    pub coulson_err: Option<f64>,
    /// `|spectral_diff - coulson_diff|` when both ran.
    pub method_gap: Option<f64>,
    /// The difference the verdict is drawn from (spectral when available).
    pub difference: f64,
    pub verdict: Sign,
    pub route: Route,
}

impl EnergyComparison {
    /// False only when both methods ran and disagree beyond `gap_tol`.
    pub fn methods_agree(&self, gap_tol: f64) -> bool {
        self.method_gap.is_none_or(|g| g <= gap_tol)
    }
}

fn is_cycle_vs_p6(a: &Subject, b: &Subject) -> bool {
    matches!(
        (a.family, b.family),
        (Some(Family::Cycle(_)), Some(Family::P6(_)))
    )
}

/// Compares `E(a)` and `E(b)` for graphs of equal order.
///
/// Up to `both_methods_max_n` vertices the spectral route runs, joined by
/// the polynomial Coulson integral when `xcheck` is set. Larger pairs use
/// the Coulson integral only: closed forms for `C_n` against `P_n^6`,
/// characteristic polynomials otherwise.
pub fn compare_energies(
    a: &Subject,
    b: &Subject,
    opts: &CompareOptions,
) -> Result<EnergyComparison, EnergyError> {
    let (na, nb) = (a.graph.n(), b.graph.n());
    if na != nb {
        return Err(EnergyError::OrderMismatch(na, nb));
    }
    let n = na;
    let spectral = n <= opts.both_methods_max_n;
    let mut out = EnergyComparison {
        spec_a: a.label.to_string(),
        spec_b: b.label.to_string(),
        n,
        energy_a: None,
        energy_b: None,
        spectral_diff: None,
        coulson_diff: None,
        coulson_err: None,
        method_gap: None,
        difference: 0.0,
        verdict: Sign::Zero,
        route: Route::SpectralOnly,
    };
    if spectral {
        let ea = energy_spectral(&a.graph)?;
        let eb = energy_spectral(&b.graph)?;
        out.energy_a = Some(ea);
        out.energy_b = Some(eb);
        out.spectral_diff = Some(ea - eb);
    }
    if !spectral || opts.xcheck {
        let r = if !spectral && n >= CLOSED_FORM_MIN_N && is_cycle_vs_p6(a, b) {
            out.route = Route::CoulsonClosedForm;
            coulson_cycle_vs_p6(&AxisForms::default(), n, opts.tol)
        } else {
            out.route = if spectral {
                Route::Both
            } else {
                Route::CoulsonPolynomial
            };
            coulson_diff(&charpoly_auto(&a.graph), &charpoly_auto(&b.graph), opts.tol)?
        };
        if !r.converged {
            return Err(EnergyError::QuadratureFailed {
                value: r.value,
                err_estimate: r.err_estimate,
            });
        }
        out.coulson_diff = Some(r.value);
        out.coulson_err = Some(r.err_estimate);
    }
    out.method_gap = match (out.spectral_diff, out.coulson_diff) {
        (Some(s), Some(c)) => Some((s - c).abs()),
        _ => None,
    };
    out.difference = out
        .spectral_diff
        .or(out.coulson_diff)
        .expect("at least one route ran");
    out.verdict = Sign::of(out.difference, opts.zero_tol);
    Ok(out)
}
