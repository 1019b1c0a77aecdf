//! Small floating-point helpers: log-sum-exp, signed logarithms, big-integer logs.

use num_bigint::{BigInt, Sign as BigSign};
use num_traits::ToPrimitive;

/// Streaming log-sum-exp with a running maximum.
#[derive(Debug, Clone, Copy)]
pub struct LogSumExp {
    max: f64,
    scaled: f64,
}

impl Default for LogSumExp {
    fn default() -> Self {
        Self::new()
    }
}

impl LogSumExp {
    pub fn new() -> Self {
        LogSumExp {
            max: f64::NEG_INFINITY,
            scaled: 0.0,
        }
    }

    pub fn push(&mut self, term: f64) {
        if term == f64::NEG_INFINITY {
            return;
        }
        if term <= self.max {
            self.scaled += (term - self.max).exp();
        } else {
            self.scaled = self.scaled * (self.max - term).exp() + 1.0;
            self.max = term;
        }
    }

    /// `ln(sum exp(term))`, or `-inf` when nothing was pushed.
    pub fn value(&self) -> f64 {
        if self.max == f64::NEG_INFINITY {
            f64::NEG_INFINITY
        } else {
            self.max + self.scaled.ln()
        }
    }
}

/// `ln(1 + e^t)` without overflow.
pub fn softplus(t: f64) -> f64 {
    if t > 0.0 {
        t + (-t).exp().ln_1p()
    } else {
        t.exp().ln_1p()
    }
}

/// Natural log of a positive big integer, valid far beyond `f64::MAX`.
pub fn ln_big(b: &BigInt) -> f64 {
    debug_assert!(b.sign() == BigSign::Plus);
    let bits = b.bits();
    if bits <= 1000 {
        return b.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigInt = b >> shift;
    top.to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * core::f64::consts::LN_2
}

/// A real number held as a sign and `ln |value|`, for quantities whose
/// magnitude leaves the `f64` range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    pub sign: i8,
    pub ln_abs: f64,
}

impl SignedLog {
    pub const ZERO: SignedLog = SignedLog {
        sign: 0,
        ln_abs: f64::NEG_INFINITY,
    };

    pub fn from_f64(v: f64) -> Self {
        if v == 0.0 {
            SignedLog::ZERO
        } else {
            SignedLog {
                sign: if v > 0.0 { 1 } else { -1 },
                ln_abs: v.abs().ln(),
            }
        }
    }

    /// `sign * exp(ln_abs)`.
    pub fn new(sign: i8, ln_abs: f64) -> Self {
        if sign == 0 || ln_abs == f64::NEG_INFINITY {
            SignedLog::ZERO
        } else {
            SignedLog { sign, ln_abs }
        }
    }

    /// Saturating conversion (may give `+-inf` or `0`).
    pub fn to_f64(self) -> f64 {
        f64::from(self.sign) * self.ln_abs.exp()
    }

    /// `|value|`, saturating.
    pub fn magnitude(self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            self.ln_abs.exp()
        }
    }
}

impl core::ops::Mul for SignedLog {
    type Output = SignedLog;

    fn mul(self, other: SignedLog) -> Self {
        SignedLog::new(self.sign * other.sign, self.ln_abs + other.ln_abs)
    }
}

impl core::ops::Neg for SignedLog {
    type Output = SignedLog;

    fn neg(self) -> Self {
        SignedLog::new(-self.sign, self.ln_abs)
    }
}

impl core::ops::Add for SignedLog {
    type Output = SignedLog;

        fn add(self, other: SignedLog) -> Self {
            if self.sign == 0 {
                return other;
            }
            if other.sign == 0 {
                return self;
            }
            let (big, small) = if self.ln_abs >= other.ln_abs {
                (self, other)
            } else {
                (other, self)
            };
            let ratio = (small.ln_abs - big.ln_abs).exp();
            if big.sign == small.sign {
                SignedLog::new(big.sign, big.ln_abs + ratio.ln_1p())
            } else if ratio == 1.0 {
                SignedLog::ZERO
            } else {
                SignedLog::new(big.sign, big.ln_abs + (-ratio).ln_1p())
            }
        }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lse_matches_direct() {
        let terms = [1.0f64, -3.0, 2.5, 0.0, 2.5];
        let mut acc = LogSumExp::new();
        for t in terms {
            acc.push(t);
        }
        let direct: f64 = terms.iter().map(|t| t.exp()).sum::<f64>().ln();
        assert!((acc.value() - direct).abs() < 1e-14);
        assert_eq!(LogSumExp::new().value(), f64::NEG_INFINITY);
    }

    #[test]
    fn lse_large_terms() {
        let mut acc = LogSumExp::new();
        acc.push(800.0);
        acc.push(800.0);
        assert!((acc.value() - (800.0 + core::f64::consts::LN_2)).abs() < 1e-12);
    }

    #[test]
    fn softplus_tails() {
        assert!((softplus(0.0) - core::f64::consts::LN_2).abs() < 1e-15);
        assert_eq!(softplus(1000.0), 1000.0);
        assert!((softplus(-50.0) - (-50.0f64).exp()).abs() < 1e-30);
    }

    #[test]
    fn big_log() {
        let b = BigInt::from(10).pow(400u32);
        assert!((ln_big(&b) - 400.0 * 10f64.ln()).abs() < 1e-9);
        assert!((ln_big(&BigInt::from(48)) - 48f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn signed_log_arith() {
        let a = SignedLog::from_f64(3.0);
        let b = SignedLog::from_f64(-5.0);
        assert!(((a + b).to_f64() + 2.0).abs() < 1e-14);
        assert!(((a * b).to_f64() + 15.0).abs() < 1e-13);
        assert_eq!(a + -a, SignedLog::ZERO);
        let huge = SignedLog::new(1, 2000.0);
        assert_eq!((huge + SignedLog::from_f64(-1.0)).sign, 1);
    }
}
