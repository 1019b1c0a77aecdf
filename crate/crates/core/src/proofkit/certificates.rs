//! Grid sign certificates for the four residue classes of `n mod 4`.
//!
//! Each certificate first re-verifies the exact identities its argument
//! uses (the fixed ones and the per-sample displays), then evaluates the
//! factored forms at every `(n, x)` of a grid. Quantities that scale like
//! `Z1^(2n)` are carried as [`SignedLog`] so that `n` in the hundreds and
//! `|x|` up to `10^3` stay in range. Powers `Z^m - Z^k` are written with
//! `expm1`, which keeps the signs exact near `x = 0`.
//!
//! Every quantity is evaluated with signed `theta = asinh(x/2)`, so a
//! negative grid point is an honest evaluation, not a reflection of a
//! positive one.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::numeric::SignedLog;
use crate::quadrature::{exp_sinh, Refinement};

use super::closed::{coulson_cycle_vs_p6, theta, AxisForms, ClosedFormContext, CLOSED_FORM_MIN_N};
use super::identities::{
    k0_display_check, k1_display_check, k1_mirror_check, pw_display_check, IdentityCheck,
    IdentityFailure, RequiredIdentity,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CaseTag {
    #[cfg_attr(feature = "serde", serde(rename = "n≡2 mod 4"))]
    TwoMod4,
    #[cfg_attr(feature = "serde", serde(rename = "n≡1 mod 4"))]
    OneMod4,
    #[cfg_attr(feature = "serde", serde(rename = "n≡3 mod 4"))]
    ThreeMod4,
    #[cfg_attr(feature = "serde", serde(rename = "n≡0 mod 4"))]
    ZeroMod4,
}

impl CaseTag {
    pub const ALL: [CaseTag; 4] = [
        CaseTag::TwoMod4,
        CaseTag::OneMod4,
        CaseTag::ThreeMod4,
        CaseTag::ZeroMod4,
    ];

    pub fn residue(self) -> usize {
        match self {
            CaseTag::TwoMod4 => 2,
            CaseTag::OneMod4 => 1,
            CaseTag::ThreeMod4 => 3,
            CaseTag::ZeroMod4 => 0,
        }
    }

    /// Smallest admissible `n`.
    pub fn min_n(self) -> usize {
        match self {
            CaseTag::TwoMod4 => 10,
            CaseTag::OneMod4 => 13,
            CaseTag::ThreeMod4 => 11,
            CaseTag::ZeroMod4 => 12,
        }
    }

    /// The four smallest admissible `n` plus one near 100.
    pub fn default_samples(self) -> Vec<usize> {
        let lo = self.min_n();
        let mut v: Vec<usize> = (0..4).map(|k| lo + 4 * k).collect();
        v.push(100 + if self.residue() == 0 { 4 } else { self.residue() });
        v
    }

    /// Short command-line name.
    pub fn short_name(self) -> &'static str {
        match self {
            CaseTag::TwoMod4 => "2mod4",
            CaseTag::OneMod4 => "1mod4",
            CaseTag::ThreeMod4 => "3mod4",
            CaseTag::ZeroMod4 => "4k",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.residue();
        write!(f, "n≡{r} mod 4")
    }
}

impl FromStr for CaseTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "2mod4" | "n≡2 mod 4" => Ok(CaseTag::TwoMod4),
            "1mod4" | "n≡1 mod 4" => Ok(CaseTag::OneMod4),
            "3mod4" | "n≡3 mod 4" => Ok(CaseTag::ThreeMod4),
            "4k" | "0mod4" | "n≡0 mod 4" => Ok(CaseTag::ZeroMod4),
            other => Err(alloc::format!("unknown case `{other}`")),
        }
    }
}

/// Logarithmically spaced `x` values, optionally with their negatives.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GridSpec {
    pub points: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub mirrored: bool,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            points: 2048,
            x_min: 1e-6,
            x_max: 1e3,
            mirrored: true,
        }
    }
}

impl GridSpec {
    /// Positive points ascending, then (if mirrored) their negatives.
    pub fn values(&self) -> Vec<f64> {
        let (a, b) = (self.x_min.ln(), self.x_max.ln());
        let m = self.points;
        let mut out: Vec<f64> = (0..m)
            .map(|i| {
                if m == 1 {
                    self.x_min
                } else {
                    (a + (b - a) * i as f64 / (m - 1) as f64).exp()
                }
            })
            .collect();
        if self.mirrored {
            let neg: Vec<f64> = out.iter().map(|x| -x).collect();
            out.extend(neg);
        }
        out
    }

    pub fn description(&self) -> String {
        alloc::format!(
            "{} log-spaced x in [{:e}, {:e}]{}",
            self.points,
            self.x_min,
            self.x_max,
            if self.mirrored { " plus negatives" } else { "" }
        )
    }
}

/// One signed quantity at one grid point, with the sign it must have.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointCheck {
    pub name: &'static str,
    pub value: SignedLog,
    pub expect: i8,
}

impl PointCheck {
    fn new(name: &'static str, value: SignedLog, expect: i8) -> Self {
        PointCheck { name, value, expect }
    }

    pub fn holds(&self) -> bool {
        self.value.sign == self.expect && self.value.ln_abs.is_finite()
    }
}

/// The grid point with the smallest margin.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WorstPoint {
    pub n: usize,
    pub x: f64,
    /// Signed value of the certified quantity there.
    pub value: f64,
}

/// A machine-checked record that a quantity has the required sign on a
/// grid. Only issued when `min_margin > 0`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SignCertificate {
    pub case_tag: CaseTag,
    pub grid: String,
    pub grid_spec: GridSpec,
    pub n_samples: Vec<usize>,
    /// What was certified, e.g. `q(n,x) < 0`.
    pub quantity: String,
    pub min_margin: f64,
    pub worst: WorstPoint,
    pub points_checked: usize,
    pub exact_identities_verified: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CertificateError {
    #[error("{case}: `{check}` has the wrong sign at n = {n}, x = {x:e} (value {value:e})")]
    Refused {
        case: CaseTag,
        check: &'static str,
        n: usize,
        x: f64,
        value: f64,
    },
    #[error(transparent)]
    Identity(#[from] IdentityFailure),
    #[error("{case}: sample n = {n} is not admissible")]
    BadSample { case: CaseTag, n: usize },
    #[error("grid has no usable points")]
    EmptyGrid,
    #[error("quadrature did not converge ({what}: {value}, error {err:e})")]
    Quadrature { what: &'static str, value: f64, err: f64 },
    #[error("residue must be 1, 2 or 3 and n_max at most 400")]
    BadScanRange,
}

fn sl(v: f64) -> SignedLog {
    SignedLog::from_f64(v)
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * x + a)
}

const POLY9: [f64; 10] = [0.0, 28.0, 0.0, 46.0, 0.0, 30.0, 0.0, 9.0, 0.0, 1.0];
const POLY_B: [f64; 6] = [0.0, 6.0, 0.0, 5.0, 0.0, 1.0];
const POLY_C: [f64; 5] = [4.0, 0.0, 3.0, 0.0, 1.0];
const P10: [f64; 11] = [2.0, 0.0, 25.0, 0.0, 50.0, 0.0, 35.0, 0.0, 10.0, 0.0, 1.0];
const Q9: [f64; 10] = [0.0, 5.0, 0.0, 20.0, 0.0, 21.0, 0.0, 8.0, 0.0, 1.0];
const Q10_COF: [f64; 9] = [10.0, 0.0, 46.0, 0.0, 47.0, 0.0, 17.0, 0.0, 2.0];
const P8: [f64; 9] = [16.0, 0.0, 36.0, 0.0, 28.0, 0.0, 9.0, 0.0, 1.0];
const Q7: [f64; 8] = [0.0, 14.0, 0.0, 16.0, 0.0, 7.0, 0.0, 1.0];
const NORM_K1: [f64; 9] = [256.0, 0.0, 368.0, 0.0, 204.0, 0.0, 48.0, 0.0, 4.0];
const PW5_COF: [f64; 9] = [14.0, 0.0, 68.0, 0.0, 60.0, 0.0, 19.0, 0.0, 2.0];
const PW7_COF: [f64; 15] = [
    22.0, 0.0, 242.0, 0.0, 690.0, 0.0, 849.0, 0.0, 533.0, 0.0, 178.0, 0.0, 30.0, 0.0, 2.0,
];

/// `ln |e^y - 1|` for any `y != 0`.
fn ln_abs_expm1(y: f64) -> f64 {
    if y > 0.0 {
        y + (-(-y).exp_m1()).ln()
    } else {
        (-y.exp_m1()).ln()
    }
}

/// Checks for `n = 2 mod 4`. The first entry is `q(n, x)` for `x > 0` and
/// its mirror `q'(n, x) = K0 / (x (x^2+1) Z2^n)` for `x < 0`.
pub fn k0_point_checks(n: usize, x: f64) -> Vec<PointCheck> {
    let th = theta(x);
    let s = (x * x + 4.0).sqrt();
    let nf = n as f64;
    let (poly9, b, c) = (horner(&POLY9, x), horner(&POLY_B, x), horner(&POLY_C, x));
    let q10_cof = 2.0 * x * (x * x + 4.0) * horner(&Q10_COF, x);
    let mut out = Vec::with_capacity(4);
    if x > 0.0 {
        let w = (-th).exp();
        let q = w.powf(nf) * poly9 + (-2.0 * nf * th).exp_m1() * s * c + (1.0 + w.powf(2.0 * nf)) * b;
        out.push(PointCheck::new("q(n,x) < 0", sl(q), -1));
        // P10 - s Q9 = 4 / (P10 + s Q9)
        let q10 = -q10_cof / (horner(&P10, x) + s * horner(&Q9, x));
        out.push(PointCheck::new("q(10,x) < 0", sl(q10), -1));
        if n > 10 {
            let d = nf - 10.0;
            let dq = w.powi(10) * (-d * th).exp_m1() * poly9
                + w.powi(20) * (-2.0 * d * th).exp_m1() * (b + s * c);
            out.push(PointCheck::new("q(n,x) - q(10,x) < 0", sl(dq), -1));
        }
        let k0 = SignedLog::new(1, x.ln() + (x * x).ln_1p() + nf * th) * sl(q);
        out.push(PointCheck::new("K0(n,x) < 0", k0, -1));
    } else {
        let v = th.exp();
        let q = v.powf(nf) * poly9 + (1.0 + v.powf(2.0 * nf)) * b - (2.0 * nf * th).exp_m1() * s * c;
        out.push(PointCheck::new("q'(n,x) > 0", sl(q), 1));
        let q10 = -q10_cof / (horner(&P10, x) - s * horner(&Q9, x));
        out.push(PointCheck::new("q'(10,x) > 0", sl(q10), 1));
        if n > 10 {
            let d = nf - 10.0;
            let b_minus_sc = b - s * c;
            let dq = v.powi(10) * (d * th).exp_m1() * poly9
                + v.powi(20) * (2.0 * d * th).exp_m1() * b_minus_sc;
            out.push(PointCheck::new("q'(n,x) - q'(10,x) > 0", sl(dq), 1));
        }
        let k0 = SignedLog::new(-1, (-x).ln() + (x * x).ln_1p() - nf * th) * sl(q);
        out.push(PointCheck::new("K0(n,x) < 0", k0, -1));
    }
    out
}

/// Checks for odd `n`: `p(n) - w(n) = D_b + x (x^2+2)^3 (x^2+1)^3 Delta`
/// with base `b = 5` or `7`. The first entry is `p(n) - w(n)`.
pub fn pw_point_checks(n: usize, x: f64) -> Vec<PointCheck> {
    let base = if n % 4 == 1 { 5.0 } else { 7.0 };
    let th = theta(x);
    let s = (x * x + 4.0).sqrt();
    let x2 = x * x;
    let ln_pre = x.abs().ln() + 3.0 * (x2 + 2.0).ln() + 3.0 * x2.ln_1p();
    let pre = SignedLog::new(if x > 0.0 { 1 } else { -1 }, ln_pre);
    let y = (2.0 * n as f64 - 2.0 * base) * th;
    let lam = s * (x2 + 2.0);
    // -2 Z1^(2b) (Z1^(2n-2b) - 1)(s(x^2+2) + x)
    let t1 = SignedLog::new(
        if y > 0.0 { -1 } else { 1 },
        core::f64::consts::LN_2 + 2.0 * base * th + ln_abs_expm1(y) + (lam + x).ln(),
    );
    // +2 Z2^(2b) (Z2^(2n-2b) - 1)(s(x^2+2) - x)
    let t2 = SignedLog::new(
        if y > 0.0 { -1 } else { 1 },
        core::f64::consts::LN_2 - 2.0 * base * th + ln_abs_expm1(-y) + (lam - x).ln(),
    );
    let reduction = pre * (t1 + t2);
    let (cof, k) = if base == 5.0 {
        (horner(&PW5_COF, x), 4.0)
    } else {
        (horner(&PW7_COF, x), 3.0)
    };
    let ln_d = 2.0 * x.abs().ln() + (x2 + 4.0).ln() + k * x2.ln_1p() + 3.0 * (x2 + 2.0).ln() + cof.ln();
    let d = SignedLog::new(-1, ln_d);
    let name_d = if base == 5.0 {
        "p(5,x) - w(5,x) < 0"
    } else {
        "p(7,x) - w(7,x) < 0"
    };
    alloc::vec![
        PointCheck::new("p(n,x) - w(n,x) < 0", d + reduction, -1),
        PointCheck::new(name_d, d, -1),
        PointCheck::new("reduction term < 0", reduction, -1),
    ]
}

/// Checks for `n = 0 mod 4`. The first entry is `K1` (or its mirror for
/// `x < 0`); the last compares the integrand with its limit.
pub fn k1_point_checks(forms: &AxisForms, n: usize, x: f64) -> Vec<PointCheck> {
    let th = theta(x);
    let nf = n as f64;
    let s = (x * x + 4.0).sqrt();
    let ratio = (x * x + 1.0) / (x * x + 4.0);
    let q7 = horner(&Q7, x);
    let p8 = horner(&P8, x);
    let norm = horner(&NORM_K1, x);
    // P8 -+ s Q7 = norm / (P8 +- s Q7), the sign chosen to avoid cancellation
    let (base, corr, a_dom, a_sub) = if x > 0.0 {
        let w = (-th).exp();
        (norm / (p8 + s * q7), w.powf(nf) * s * q7, forms.a1(x), forms.a2(x))
    } else {
        let v = th.exp();
        (norm / (p8 - s * q7), -v.powf(nf) * s * q7, forms.a2(x), forms.a1(x))
    };
    let k1 = -ratio * (base + corr);
    let h1 = SignedLog::new(1, nf * th.abs()) * sl(a_dom + a_sub * (-2.0 * nf * th.abs()).exp());
    // integrand - log(1/A) = log(1 + K1/H1), kept in log form for tiny ratios
    let r = sl(k1) * SignedLog::new(h1.sign, -h1.ln_abs);
    let limit_gap = if r.ln_abs < -30.0 {
        r
    } else {
        sl(r.to_f64().ln_1p())
    };
    alloc::vec![
        PointCheck::new("K1(n,x) < 0", sl(k1), -1),
        PointCheck::new("K1 bound < 0", sl(-ratio * base), -1),
        PointCheck::new("K1 - bound < 0", sl(-ratio * corr), -1),
        PointCheck::new("H1(n,x) > 0", h1, 1),
        PointCheck::new("A(ix) > 0", sl(a_dom), 1),
        PointCheck::new("integrand below limit", limit_gap, -1),
    ]
}

/// The checks for `case` at one point.
pub fn evaluate_point(forms: &AxisForms, case: CaseTag, n: usize, x: f64) -> Vec<PointCheck> {
    match case {
        CaseTag::TwoMod4 => k0_point_checks(n, x),
        CaseTag::OneMod4 | CaseTag::ThreeMod4 => pw_point_checks(n, x),
        CaseTag::ZeroMod4 => k1_point_checks(forms, n, x),
    }
}

fn quantity_name(case: CaseTag) -> &'static str {
    match case {
        CaseTag::TwoMod4 => "q(n,x) < q(10,x) < 0 (x > 0), mirrored for x < 0; K0 < 0",
        CaseTag::OneMod4 => "p(n,x) - w(n,x) < p(5,x) - w(5,x) < 0",
        CaseTag::ThreeMod4 => "p(n,x) - w(n,x) < p(7,x) - w(7,x) < 0",
        CaseTag::ZeroMod4 => "K1(n,x) < 0, H1(n,x) > 0, integrand below log(1/A)",
    }
}

fn push_checked(names: &mut Vec<String>, c: IdentityCheck) -> Result<(), CertificateError> {
    match c.residual {
        Some(residual) => Err(IdentityFailure {
            name: c.name,
            residual,
        }
        .into()),
        None => {
            names.push(c.name);
            Ok(())
        }
    }
}

fn admissible(case: CaseTag, n: usize) -> bool {
    n >= case.min_n().max(CLOSED_FORM_MIN_N) && n % 4 == case.residue()
}

/// Exact checks for `case`: the fixed identities, then one display per
/// sample.
pub fn case_identities(case: CaseTag, samples: &[usize]) -> Result<Vec<String>, CertificateError> {
    let ctx = ClosedFormContext::new();
    let mut names = Vec::new();
    let fixed: &[RequiredIdentity] = match case {
        CaseTag::TwoMod4 => &[RequiredIdentity::NormQ10, RequiredIdentity::Q10Factorization],
        CaseTag::OneMod4 => &[RequiredIdentity::Pw5Factorization],
        CaseTag::ThreeMod4 => &[RequiredIdentity::Pw7Factorization],
        CaseTag::ZeroMod4 => &[RequiredIdentity::NormK1],
    };
    for id in fixed {
        push_checked(&mut names, id.check(&ctx))?;
    }
    for &n in samples {
        let n = n as u32;
        match case {
            CaseTag::TwoMod4 => push_checked(&mut names, k0_display_check(&ctx, n))?,
            CaseTag::OneMod4 | CaseTag::ThreeMod4 => push_checked(&mut names, pw_display_check(&ctx, n))?,
            CaseTag::ZeroMod4 => {
                push_checked(&mut names, k1_display_check(&ctx, n))?;
                push_checked(&mut names, k1_mirror_check(&ctx, n))?;
            }
        }
    }
    Ok(names)
}

/// Certifies `case` for every sample `n` on `grid`. `x = 0` is skipped.
pub fn sign_certificate(
    case: CaseTag,
    samples: &[usize],
    grid: &GridSpec,
) -> Result<SignCertificate, CertificateError> {
    if let Some(&n) = samples.iter().find(|&&n| !admissible(case, n)) {
        return Err(CertificateError::BadSample { case, n });
    }
    let identities = case_identities(case, samples)?;
    let xs: Vec<f64> = grid.values().into_iter().filter(|&x| x != 0.0 && x.is_finite()).collect();
    if xs.is_empty() || samples.is_empty() {
        return Err(CertificateError::EmptyGrid);
    }
    let forms = AxisForms::default();
    let mut worst = WorstPoint {
        n: 0,
        x: 0.0,
        value: 0.0,
    };
    let mut min_margin = f64::INFINITY;
    let mut points = 0;
    for &n in samples {
        for &x in &xs {
            let checks = evaluate_point(&forms, case, n, x);
            for c in &checks {
                if !c.holds() {
                    return Err(CertificateError::Refused {
                        case,
                        check: c.name,
                        n,
                        x,
                        value: c.value.to_f64(),
                    });
                }
            }
            let margin = checks[0].value.magnitude();
            if margin < min_margin {
                min_margin = margin;
                worst = WorstPoint {
                    n,
                    x,
                    value: checks[0].value.to_f64(),
                };
            }
            points += 1;
        }
    }
    if min_margin.partial_cmp(&0.0) != Some(core::cmp::Ordering::Greater) {
        return Err(CertificateError::Refused {
            case,
            check: "margin",
            n: worst.n,
            x: worst.x,
            value: worst.value,
        });
    }
    Ok(SignCertificate {
        case_tag: case,
        grid: grid.description(),
        grid_spec: grid.clone(),
        n_samples: samples.to_vec(),
        quantity: quantity_name(case).into(),
        min_margin,
        worst,
        points_checked: points,
        exact_identities_verified: identities,
    })
}

/// `n = 2 mod 4`: `q(n,x) < q(10,x) < 0`, hence `K0 / H0 < 0`.
pub fn k0_sign_certificate(samples: &[usize], grid: &GridSpec) -> Result<SignCertificate, CertificateError> {
    sign_certificate(CaseTag::TwoMod4, samples, grid)
}

/// Odd `n`: `p(n,x) - w(n,x) < 0` through the base case 5 or 7.
pub fn pw_sign_certificate(
    case: CaseTag,
    samples: &[usize],
    grid: &GridSpec,
) -> Result<SignCertificate, CertificateError> {
    if !matches!(case, CaseTag::OneMod4 | CaseTag::ThreeMod4) {
        return Err(CertificateError::BadSample {
            case,
            n: samples.first().copied().unwrap_or(0),
        });
    }
    sign_certificate(case, samples, grid)
}

/// `n = 0 mod 4`: `K1 < 0` and the integrand lies below `log(1/A)`.
pub fn k1_limit_certificate(samples: &[usize], grid: &GridSpec) -> Result<SignCertificate, CertificateError> {
    sign_certificate(CaseTag::ZeroMod4, samples, grid)
}

/// The two bounding integrals of the `n = 0 mod 4` case and their log forms.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LimitIntegrals {
    /// `(1/pi) int_0^inf (1/A1(ix) - 1) dx`.
    pub first: f64,
    /// `(1/pi) int_-inf^0 (1/A2(ix) - 1) dx`.
    pub second: f64,
    /// `(1/pi) int_0^inf log(1/A1(ix)) dx`.
    pub first_log: f64,
    /// `(1/pi) int_-inf^0 log(1/A2(ix)) dx`.
    pub second_log: f64,
    pub err_estimate: f64,
}

/// Computes [`LimitIntegrals`] and checks `log(1/A) <= 1/A - 1` on `grid`.
pub fn limit_integrals(tol: f64, grid: &GridSpec) -> Result<LimitIntegrals, CertificateError> {
    let forms = AxisForms::default();
    let inv_pi = core::f64::consts::FRAC_1_PI;
    // x = -y for the second pair: Z2(-y) = -e^(theta(y))
    let z1 = |y: f64| theta(y).exp();
    let z2 = |y: f64| -theta(y).exp();
    let cfg = Refinement::exp_sinh(tol * core::f64::consts::PI);
    let parts = [
        ("first", exp_sinh(|y| forms.inv_a_minus_one(z1(y)), cfg)),
        ("second", exp_sinh(|y| forms.inv_a_minus_one(z2(y)), cfg)),
        ("first log", exp_sinh(|y| forms.inv_a_minus_one(z1(y)).ln_1p(), cfg)),
        ("second log", exp_sinh(|y| forms.inv_a_minus_one(z2(y)).ln_1p(), cfg)),
    ];
    for (what, r) in &parts {
        if !r.converged {
            return Err(CertificateError::Quadrature {
                what,
                value: r.value,
                err: r.err_estimate,
            });
        }
    }
    for x in grid.values() {
        if x == 0.0 {
            continue;
        }
        let z = if x > 0.0 { z1(x) } else { z2(-x) };
        let d = forms.inv_a_minus_one(z);
        if d.ln_1p() > d {
            return Err(CertificateError::Refused {
                case: CaseTag::ZeroMod4,
                check: "log(1/A) <= 1/A - 1",
                n: 0,
                x,
                value: d.ln_1p() - d,
            });
        }
    }
    let err = parts.iter().map(|(_, r)| r.err_estimate).fold(0.0, f64::max) * inv_pi;
    Ok(LimitIntegrals {
        first: parts[0].1.value * inv_pi,
        second: parts[1].1.value * inv_pi,
        first_log: parts[2].1.value * inv_pi,
        second_log: parts[3].1.value * inv_pi,
        err_estimate: err,
    })
}

/// The pair `(first, second)` of [`limit_integrals`] at tolerance `1e-10`.
pub fn limit_integral_a() -> Result<(f64, f64), CertificateError> {
    let r = limit_integrals(1e-10, &GridSpec::default())?;
    Ok((r.first, r.second))
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScanEntry {
    pub n: usize,
    /// `E(C_n) - E(P_n^6)`.
    pub difference: f64,
    /// `(E(C_{n+4}) - E(P_{n+4}^6)) - (E(C_n) - E(P_n^6))`, integrated as
    /// one integral; absent for the last entry.
    pub step: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MonotonicityReport {
    pub residue: usize,
    pub n_max: usize,
    pub entries: Vec<ScanEntry>,
    /// Pairs `(n, n + 4)` where the difference failed to decrease.
    pub violations: Vec<(usize, usize)>,
}

impl MonotonicityReport {
    pub fn is_decreasing(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `E(C_n) - E(P_n^6)` along `n = residue mod 4` from the first `n >= 16` to
/// `n_max`, with each step checked for a strict decrease.
pub fn monotonicity_scan(residue: usize, n_max: usize, tol: f64) -> Result<MonotonicityReport, CertificateError> {
    if !(1..=3).contains(&residue) || n_max > 400 {
        return Err(CertificateError::BadScanRange);
    }
    let forms = AxisForms::default();
    let start = 16 + residue;
    let ns: Vec<usize> = (start..=n_max).step_by(4).collect();
    let scale = 2.0 / core::f64::consts::PI;
    let mut entries = Vec::with_capacity(ns.len());
    let mut violations = Vec::new();
    for (i, &n) in ns.iter().enumerate() {
        let d = coulson_cycle_vs_p6(&forms, n, tol);
        if !d.converged {
            return Err(CertificateError::Quadrature {
                what: "difference",
                value: d.value,
                err: d.err_estimate,
            });
        }
        let step = if i + 1 < ns.len() {
            let mut r = exp_sinh(
                |x| forms.coulson_integrand(n + 4, x) - forms.coulson_integrand(n, x),
                Refinement::exp_sinh(tol / scale),
            );
            r.value *= scale;
            r.err_estimate *= scale;
            if !r.converged {
                return Err(CertificateError::Quadrature {
                    what: "step",
                    value: r.value,
                    err: r.err_estimate,
                });
            }
            if r.value + r.err_estimate >= 0.0 {
                violations.push((n, n + 4));
            }
            Some(r.value)
        } else {
            None
        };
        entries.push(ScanEntry {
            n,
            difference: d.value,
            step,
        });
    }
    for pair in entries.windows(2) {
        if pair[1].difference >= pair[0].difference && !violations.contains(&(pair[0].n, pair[1].n)) {
            violations.push((pair[0].n, pair[1].n));
        }
    }
    Ok(MonotonicityReport {
        residue,
        n_max,
        entries,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_grid() -> GridSpec {
        GridSpec {
            points: 64,
            ..GridSpec::default()
        }
    }

    #[test]
    fn grid_shape() {
        let g = GridSpec::default().values();
        assert_eq!(g.len(), 4096);
        assert!((g[0] - 1e-6).abs() < 1e-18 && (g[2047] - 1e3).abs() < 1e-9);
        assert_eq!(g[2048], -g[0]);
        assert_eq!(CaseTag::TwoMod4.default_samples(), alloc::vec![10, 14, 18, 22, 102]);
        assert_eq!(CaseTag::ZeroMod4.default_samples(), alloc::vec![12, 16, 20, 24, 104]);
        assert_eq!(CaseTag::OneMod4.default_samples(), alloc::vec![13, 17, 21, 25, 101]);
        assert_eq!(CaseTag::ThreeMod4.default_samples(), alloc::vec![11, 15, 19, 23, 103]);
    }

    #[test]
    fn q10_sign_examples() {
        let c = k0_point_checks(10, 1.0);
        assert!(c.iter().all(PointCheck::holds));
        // q(10, 1) from the display: -(1/2) * 5 * 122 * (123 - sqrt5 * 55)
        let want = -0.5 * 5.0 * 122.0 * (123.0 - 5f64.sqrt() * 55.0);
        assert!((c[1].value.to_f64() - want).abs() < 1e-9 * want.abs());
        assert!((c[0].value.to_f64() - want).abs() < 1e-9 * want.abs());
        let c14 = k0_point_checks(14, 0.5);
        let c10 = k0_point_checks(10, 0.5);
        assert!(c14[0].value.to_f64() < c10[0].value.to_f64());
        let tiny = k0_point_checks(10, 1e-6);
        assert!(tiny[0].holds() && tiny[0].value.magnitude() < 1e-4);
    }

    #[test]
    fn pw_examples() {
        assert!(pw_point_checks(13, 1.0).iter().all(PointCheck::holds));
        assert!(pw_point_checks(11, 2.0).iter().all(PointCheck::holds));
        let d5 = pw_point_checks(13, 1.0)[1].value.to_f64();
        assert!((d5 + 5.0 * 16.0 * 27.0 * 163.0).abs() < 1e-8);
    }

    #[test]
    fn k1_examples() {
        let forms = AxisForms::default();
        assert!(k1_point_checks(&forms, 12, 1.0).iter().all(PointCheck::holds));
        assert!(k1_point_checks(&forms, 16, -1.0).iter().all(PointCheck::holds));
        assert!(forms.a2(-1.0) > 0.0);
        let gap = forms.coulson_integrand(10_000, 1.0) + forms.a1(1.0).ln();
        assert!(gap.abs() < 1e-6);
        // the log(1 + K1/H1) route agrees with the closed-form integrands
        for (n, x) in [(12, 0.3), (12, -2.0), (16, 1.0), (24, -0.05), (40, 0.01)] {
            let direct = forms.coulson_integrand(n, x) + forms.a1(x.abs()).ln();
            let via = k1_point_checks(&forms, n, x)[5].value.to_f64();
            assert!((direct - via).abs() < 1e-9 * direct.abs().max(1e-3), "{n} {x}: {direct} {via}");
        }
    }

    #[test]
    fn certificates_issue_on_small_grid() {
        for case in CaseTag::ALL {
            let cert = sign_certificate(case, &case.default_samples(), &small_grid()).unwrap();
            assert!(cert.min_margin > 0.0);
            let forms = AxisForms::default();
            let again = evaluate_point(&forms, case, cert.worst.n, cert.worst.x);
            assert_eq!(again[0].value.to_f64(), cert.worst.value);
        }
    }

    #[test]
    fn full_default_certificates() {
        for case in CaseTag::ALL {
            let cert = sign_certificate(case, &case.default_samples(), &GridSpec::default()).unwrap();
            assert_eq!(cert.points_checked, 5 * 4096);
            assert!(cert.min_margin > 0.0);
        }
    }

    #[test]
    fn bad_samples_are_refused() {
        assert!(matches!(
            k0_sign_certificate(&[12], &small_grid()),
            Err(CertificateError::BadSample { n: 12, .. })
        ));
        assert!(matches!(
            pw_sign_certificate(CaseTag::TwoMod4, &[10], &small_grid()),
            Err(CertificateError::BadSample { .. })
        ));
        assert!(matches!(
            k1_limit_certificate(&[8], &small_grid()),
            Err(CertificateError::BadSample { n: 8, .. })
        ));
    }

    #[test]
    fn limit_values() {
        let r = limit_integrals(1e-10, &small_grid()).unwrap();
        assert!((r.first + 0.0476428142108).abs() < 1e-8, "{}", r.first);
        assert!((r.second + 0.0476428142108).abs() < 1e-8, "{}", r.second);
        assert!(r.first_log < r.first && r.second_log < r.second);
        assert!((r.first_log + 0.0590552).abs() < 1e-6, "{}", r.first_log);
    }

    #[test]
    fn scan_short() {
        let r = monotonicity_scan(2, 30, 1e-10).unwrap();
        assert!(r.is_decreasing());
        assert_eq!(r.entries[0].n, 18);
        assert!((r.entries[0].difference + 0.0375225).abs() < 1e-6);
        assert!(monotonicity_scan(0, 30, 1e-10).is_err());
        assert!(monotonicity_scan(1, 401, 1e-10).is_err());
    }
}
