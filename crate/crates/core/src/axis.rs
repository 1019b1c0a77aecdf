//! `log |p(ix)|` for real `x`, stable for degrees in the hundreds.
//!
//! Writing `p(x) = sum_j a_j x^(n-j)`, one has `|p(ix)|^2 = R^2 + S^2` with
//! `R = sum_k (-1)^k a_{2k} x^(n-2k)` and `S = sum_k (-1)^k a_{2k+1} x^(n-2k-1)`.
//! When every odd-index `a_j` vanishes and every `(-1)^k a_{2k}` is
//! nonnegative, `|p(ix)| = sum_k b_{2k} |x|^(n-2k)` is a sum of nonnegative
//! terms and is evaluated by log-sum-exp. Other polynomials use Horner sums
//! in `x` for `|x| < 1` and in `1/x` otherwise.
//!
//! For `|x| >= 1` both paths also expose the *reduced* value
//! `log |p(ix)| - n log |x| - log |a_0|`, which tends to zero as `|x|` grows.
//! Differences of reduced values are what the Coulson integrand needs.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::numeric::{ln_big, softplus, LogSumExp};
use crate::poly::{IntPoly, PolyError};

/// A logarithm that may be `-infinity`, for zeros of `|p(ix)|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AxisLog {
    Finite(f64),
    NegInfinity,
}

impl AxisLog {
    pub fn from_f64(v: f64) -> Self {
        if v == f64::NEG_INFINITY {
            AxisLog::NegInfinity
        } else {
            AxisLog::Finite(v)
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, AxisLog::Finite(_))
    }

    /// The value as `f64`, with `NegInfinity` mapped to `-inf`.
    pub fn to_f64(self) -> f64 {
        match self {
            AxisLog::Finite(v) => v,
            AxisLog::NegInfinity => f64::NEG_INFINITY,
        }
    }
}

#[derive(Debug, Clone)]
enum Form {
    /// `ln b_{2k}` for `k = 0..=n/2`, relative to the leading coefficient.
    Bipartite { ln_b: Vec<f64> },
    /// Coefficients of `R` and `S` relative to the leading coefficient:
    /// `r[k]` multiplies `x^(n-2k)`, `s[k]` multiplies `x^(n-2k-1)`.
    General { r: Vec<f64>, s: Vec<f64> },
}

/// A polynomial prepared for repeated evaluation of `log |p(ix)|`.
#[derive(Debug, Clone)]
pub struct ImagAxisPoly {
    degree: usize,
    ln_lead: f64,
    form: Form,
}

fn ratio_f64(a: &BigInt, lead: &BigInt) -> f64 {
    if a.is_zero() {
        0.0
    } else if lead.abs() == BigInt::from(1) {
        let v = a.to_f64().unwrap_or(f64::NAN);
        if lead.is_negative() {
            -v
        } else {
            v
        }
    } else {
        let mag = (ln_big(&a.abs()) - ln_big(&lead.abs())).exp();
        if a.is_negative() != lead.is_negative() {
            -mag
        } else {
            mag
        }
    }
}

impl ImagAxisPoly {
    pub fn new(p: &IntPoly) -> Result<Self, PolyError> {
        let n = p.degree().ok_or(PolyError::ZeroPolynomial)?;
        let lead = p.coeff(n);
        let ln_lead = ln_big(&lead.abs());
        // a_j is the coefficient of x^(n-j), sign-normalised by the leader
        let a = |j: usize| -> BigInt {
            let c = p.coeff(n - j);
            if lead.is_negative() {
                -c
            } else {
                c
            }
        };
        let mut bipartite = true;
        let mut b = Vec::with_capacity(n / 2 + 1);
        for j in 0..=n {
            let aj = a(j);
            if j % 2 == 1 {
                if !aj.is_zero() {
                    bipartite = false;
                    break;
                }
            } else {
                let bk = if (j / 2) % 2 == 1 { -aj } else { aj };
                if bk.is_negative() {
                    bipartite = false;
                    break;
                }
                b.push(bk);
            }
        }
        let lead_abs = lead.abs();
        let form = if bipartite {
            Form::Bipartite {
                ln_b: b
                    .iter()
                    .map(|bk| {
                        if bk.is_zero() {
                            f64::NEG_INFINITY
                        } else {
                            ln_big(bk) - ln_big(&lead_abs)
                        }
                    })
                    .collect(),
            }
        } else {
            let mut r = Vec::new();
            let mut s = Vec::new();
            for j in 0..=n {
                let sign = if (j / 2) % 2 == 1 { -1.0 } else { 1.0 };
                let c = sign * ratio_f64(&a(j), &lead_abs);
                if j % 2 == 0 {
                    r.push(c);
                } else {
                    s.push(c);
                }
            }
            Form::General { r, s }
        };
        Ok(ImagAxisPoly {
            degree: n,
            ln_lead,
            form,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// True when the nonnegative-sum evaluation applies.
    pub fn is_bipartite_form(&self) -> bool {
        matches!(self.form, Form::Bipartite { .. })
    }

    /// `log |p(ix)|`.
    pub fn log_abs(&self, x: f64) -> AxisLog {
        let n = self.degree;
        if x.abs() >= 1.0 {
            return AxisLog::from_f64(self.ln_lead + n as f64 * x.abs().ln() + self.reduced(x));
        }
        let v = match &self.form {
            Form::Bipartite { ln_b } => {
                if x == 0.0 {
                    if n % 2 == 1 {
                        f64::NEG_INFINITY
                    } else {
                        ln_b[n / 2]
                    }
                } else {
                    let lx = x.abs().ln();
                    let mut acc = LogSumExp::new();
                    for (k, &lb) in ln_b.iter().enumerate() {
                        acc.push(lb + (n - 2 * k) as f64 * lx);
                    }
                    acc.value()
                }
            }
            Form::General { r, s } => {
                let x2 = x * x;
                let mut rv = 0.0;
                for &c in r.iter() {
                    rv = rv * x2 + c;
                }
                let mut sv = 0.0;
                for &c in s.iter() {
                    sv = sv * x2 + c;
                }
                // Horner gives sum r[k] x^(2(len-1-k)); restore the parity power
                let rpow = n as i32 - 2 * (r.len() as i32 - 1);
                let spow = n as i32 - 1 - 2 * (s.len() as i32 - 1);
                let rr = if r.is_empty() { 0.0 } else { rv * x.powi(rpow) };
                let ss = if s.is_empty() { 0.0 } else { sv * x.powi(spow) };
                rr.hypot(ss).ln()
            }
        };
        AxisLog::from_f64(if v == f64::NEG_INFINITY {
            v
        } else {
            v + self.ln_lead
        })
    }

    /// `log |p(ix)| - n log|x| - log|a_0|`, for `|x| >= 1`.
    pub fn reduced(&self, x: f64) -> f64 {
        debug_assert!(x.abs() >= 1.0);
        match &self.form {
            Form::Bipartite { ln_b } => {
                let lx = x.abs().ln();
                let mut acc = LogSumExp::new();
                for (k, &lb) in ln_b.iter().enumerate().skip(1) {
                    acc.push(lb - 2.0 * k as f64 * lx);
                }
                let t = acc.value();
                if t == f64::NEG_INFINITY {
                    0.0
                } else {
                    softplus(t)
                }
            }
            Form::General { r, s } => {
                // relative to x^n: R/x^n = sum r[k] u^(2k), S/x^n = sum s[k] u^(2k+1)
                let u = 1.0 / x;
                let u2 = u * u;
                let mut p = 0.0;
                for &c in r.iter().skip(1).rev() {
                    p = (p + c) * u2;
                }
                let mut q = 0.0;
                for &c in s.iter().rev() {
                    q = q * u2 + c;
                }
                q *= u;
                0.5 * (2.0 * p + p * p + q * q).ln_1p()
            }
        }
    }
}

/// `log |p(ix)|` for a nonzero integer polynomial.
pub fn eval_log_magnitude_imag_axis(p: &IntPoly, x: f64) -> Result<AxisLog, PolyError> {
    Ok(ImagAxisPoly::new(p)?.log_abs(x))
}

/// `log |a(ix) / b(ix)|`. For equal degrees and `|x| >= 1` this subtracts
/// reduced values, so the large common `n log|x|` never appears.
pub fn log_ratio(a: &ImagAxisPoly, b: &ImagAxisPoly, x: f64) -> f64 {
    if x.abs() >= 1.0 && a.degree == b.degree {
        return (a.ln_lead - b.ln_lead) + a.reduced(x) - b.reduced(x);
    }
    a.log_abs(x).to_f64() - b.log_abs(x).to_f64()
}
