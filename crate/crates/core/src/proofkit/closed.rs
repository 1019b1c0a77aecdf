//! Closed forms of `phi(C_n, ix)` and `phi(P_n^6, ix)`.
//!
//! Put `theta = asinh(x/2)`, so `Z1 = e^theta` and `Z2 = -e^(-theta)`.
//! On the imaginary axis
//!
//! ```text
//! phi(C_n, ix)   = i^n (Z1^n + Z2^n) - 2
//! phi(P_n^6, ix) = i^n (A1 Z1^n + A2 Z2^n)
//! ```
//!
//! where `A1 = A(Z1)`, `A2 = A(Z2)` for the single rational function
//! `A(z) = F(z) / (z^14 (z^2 + 1))`, `F(z) = z^8 f8(z - 1/z) + z^7 f7(z - 1/z)`.
//! Both moduli are even in `x`; with `w = e^(-theta|x|)` in `(0, 1]`,
//!
//! ```text
//! log|phi(C_n, ix)|   = n theta + 2 log(1 - w^n)     (n = 0 mod 4)
//!                     = n theta + 2 log(1 + w^n)     (n = 2 mod 4)
//!                     = n theta + log(1 + w^(2n))    (n odd)
//! log|phi(P_n^6, ix)| = n theta + log|revF(w) + (-1)^n F(w) w^(2n-14)| - log(1 + w^2)
//! ```
//!
//! with `revF(w) = w^16 F(1/w)`. The part after `n theta` is the *reduced*
//! value; it stays bounded for every `n` and `x`, so nothing overflows.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::axis::AxisLog;
use crate::poly::IntPoly;
use crate::quadrature::{exp_sinh, QuadratureResult, Refinement};
use crate::surd::SurdElem;

/// Smallest `n` for which the closed forms are offered.
pub const CLOSED_FORM_MIN_N: usize = 10;

/// `f8 = x^8 + 8x^6 + 19x^4 + 16x^2 + 4`.
pub fn f8() -> IntPoly {
    IntPoly::from_i64s(&[4, 0, 16, 0, 19, 0, 8, 0, 1])
}

/// `f7 = x^7 + 7x^5 + 13x^3 + 7x`.
pub fn f7() -> IntPoly {
    IntPoly::from_i64s(&[0, 7, 0, 13, 0, 7, 0, 1])
}

/// `z^d p(z - 1/z)` as a polynomial in `z`, for `d >= deg p`.
fn laurent_lift(p: &IntPoly, d: usize) -> IntPoly {
    let zsq_minus_1 = IntPoly::from_i64s(&[-1, 0, 1]);
    let mut acc = IntPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        let term = zsq_minus_1.pow(k as u32).shift(d - k).scale(c);
        acc = &acc + &term;
    }
    acc
}

/// Exact building blocks of the closed forms.
#[derive(Debug, Clone)]
pub struct ClosedFormContext {
    pub f7: IntPoly,
    pub f8: IntPoly,
    pub z1: SurdElem,
    pub z2: SurdElem,
    /// `Z1 f8 + f7`.
    pub a1_num: SurdElem,
    /// `Z2 f8 + f7`.
    pub a2_num: SurdElem,
    /// `Z1^9 + Z1^7`.
    pub a1_den: SurdElem,
    /// `Z2^9 + Z2^7`.
    pub a2_den: SurdElem,
    /// `U1 = s A1 = (Z1 f8 + f7) Z2^8`.
    pub u1: SurdElem,
    /// `U2 = s A2 = -(Z2 f8 + f7) Z1^8`.
    pub u2: SurdElem,
    /// `F(z)`, degree 16 and even.
    pub f_of_z: IntPoly,
}

impl Default for ClosedFormContext {
    fn default() -> Self {
        Self::new()
    }
}

impl ClosedFormContext {
    pub fn new() -> Self {
        let f7 = f7();
        let f8 = f8();
        let z1 = SurdElem::z1();
        let z2 = SurdElem::z2();
        let f8s = SurdElem::from_int(f8.clone());
        let f7s = SurdElem::from_int(f7.clone());
        let a1_num = &(&z1 * &f8s) + &f7s;
        let a2_num = &(&z2 * &f8s) + &f7s;
        let a1_den = &z1.pow(9) + &z1.pow(7);
        let a2_den = &z2.pow(9) + &z2.pow(7);
        let u1 = &a1_num * &z2.pow(8);
        let u2 = -(&a2_num * &z1.pow(8));
        let f_of_z = &laurent_lift(&f8, 8) + &laurent_lift(&f7, 7);
        ClosedFormContext {
            f7,
            f8,
            z1,
            z2,
            a1_num,
            a2_num,
            a1_den,
            a2_den,
            u1,
            u2,
            f_of_z,
        }
    }

    /// Floating-point evaluator built from this context.
    pub fn axis(&self) -> AxisForms {
        let f: Vec<f64> = self
            .f_of_z
            .coeffs()
            .iter()
            .map(|c| c.to_f64().expect("small coefficients"))
            .collect();
        let rev_f: Vec<f64> = self
            .f_of_z
            .reversed(16)
            .coeffs()
            .iter()
            .map(|c| c.to_f64().expect("small coefficients"))
            .collect();
        let mut g = rev_f.clone();
        g[0] -= 1.0;
        g[2] -= 1.0;
        AxisForms { f, rev_f, g }
    }
}

/// `theta = asinh(x / 2) = log Z1(x)`.
pub fn theta(x: f64) -> f64 {
    (0.5 * x).asinh()
}

fn horner(c: &[f64], z: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * z + a)
}

/// Floating-point closed forms. Construction is cheap; build once per sweep.
#[derive(Debug, Clone)]
pub struct AxisForms {
    f: Vec<f64>,
    rev_f: Vec<f64>,
    /// `revF(w) - 1 - w^2`, so `A - 1 = g / (1 + w^2)` exactly.
    g: Vec<f64>,
}

impl Default for AxisForms {
    fn default() -> Self {
        ClosedFormContext::new().axis()
    }
}

impl AxisForms {
    pub fn big_f(&self, z: f64) -> f64 {
        horner(&self.f, z)
    }

    pub fn rev_f(&self, w: f64) -> f64 {
        horner(&self.rev_f, w)
    }

    /// `A(z)`; the same function gives `A1(ix) = A(Z1(x))` and
    /// `A2(ix) = A(Z2(x))`.
    pub fn a_of_z(&self, z: f64) -> f64 {
        if z.abs() >= 1.0 {
            let w = 1.0 / z;
            self.rev_f(w) / (1.0 + w * w)
        } else {
            self.big_f(z) / (z.powi(14) * (1.0 + z * z))
        }
    }

    /// `A1(ix)`.
    pub fn a1(&self, x: f64) -> f64 {
        self.a_of_z(theta(x).exp())
    }

    /// `A2(ix)`.
    pub fn a2(&self, x: f64) -> f64 {
        self.a_of_z(-(-theta(x)).exp())
    }

    /// `1/A(z) - 1` for `|z| >= 1`, computed as `-g(w)/revF(w)` so the
    /// `O(w^4)` result keeps full relative accuracy.
    pub fn inv_a_minus_one(&self, z: f64) -> f64 {
        debug_assert!(z.abs() >= 1.0);
        let w = 1.0 / z;
        -horner(&self.g, w) / self.rev_f(w)
    }

    /// Reduced `log|phi(C_n, ix)|`, i.e. with `n theta(|x|)` removed.
    pub fn cycle_reduced(&self, n: usize, x: f64) -> f64 {
        let th = theta(x.abs());
        let nf = n as f64;
        match n % 4 {
            0 => 2.0 * (-(-nf * th).exp_m1()).ln(),
            2 => 2.0 * (-nf * th).exp().ln_1p(),
            _ => (-2.0 * nf * th).exp().ln_1p(),
        }
    }

    /// Reduced `log|phi(P_n^6, ix)|`, valid for `n >= 10`.
    ///
    /// Writing `F(z) = sum c_k z^k`, the bracket is
    /// `sum c_k e^((k-16) theta) (1 + (-1)^n e^(-(2k+2n-30) theta))`. For odd
    /// `n` the parenthesis is an `expm1`, which keeps the result accurate as
    /// `theta` goes to zero, where the two halves nearly cancel.
    pub fn p6_reduced(&self, n: usize, x: f64) -> f64 {
        debug_assert!(n >= CLOSED_FORM_MIN_N);
        let th = theta(x.abs());
        let odd = n % 2 == 1;
        let mut inner = 0.0;
        for (k, &c) in self.f.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let m = (2 * k + 2 * n) as f64 - 30.0;
            let scale = ((k as f64 - 16.0) * th).exp();
            let paren = if odd {
                -(-m * th).exp_m1()
            } else {
                1.0 + (-m * th).exp()
            };
            inner += c * scale * paren;
        }
        let w = (-th).exp();
        inner.abs().ln() - (w * w).ln_1p()
    }

    /// `log|phi(C_n, ix)|` for real `x`.
    pub fn log_cycle(&self, n: usize, x: f64) -> AxisLog {
        AxisLog::from_f64(n as f64 * theta(x.abs()) + self.cycle_reduced(n, x))
    }

    /// `log|phi(P_n^6, ix)|` for real `x`.
    pub fn log_p6(&self, n: usize, x: f64) -> AxisLog {
        AxisLog::from_f64(n as f64 * theta(x.abs()) + self.p6_reduced(n, x))
    }

    /// `log|phi(C_n, ix) / phi(P_n^6, ix)|`, the Coulson integrand.
    pub fn coulson_integrand(&self, n: usize, x: f64) -> f64 {
        self.cycle_reduced(n, x) - self.p6_reduced(n, x)
    }
}

/// `log|phi(C_n, ix)|` from the closed form. Requires `n >= 10`.
pub fn closed_phi_cycle_axis(n: usize, x: f64) -> Option<AxisLog> {
    (n >= CLOSED_FORM_MIN_N).then(|| AxisForms::default().log_cycle(n, x))
}

/// `log|phi(P_n^6, ix)|` from the closed form. Requires `n >= 10`.
pub fn closed_phi_p6_axis(n: usize, x: f64) -> Option<AxisLog> {
    (n >= CLOSED_FORM_MIN_N).then(|| AxisForms::default().log_p6(n, x))
}

/// `E(C_n) - E(P_n^6)` by the Coulson integral over the closed forms.
pub fn coulson_cycle_vs_p6(forms: &AxisForms, n: usize, tol: f64) -> QuadratureResult {
    let scale = 2.0 / core::f64::consts::PI;
    let mut r = exp_sinh(
        |x| forms.coulson_integrand(n, x),
        Refinement::exp_sinh(tol / scale),
    );
    r.value *= scale;
    r.err_estimate *= scale;
    r
}

/// The `b`-polynomial `sum_k b_{2k} x^(n-2k)` of a bipartite-form
/// characteristic polynomial, which equals `phi(ix) / i^n`.
pub fn axis_real_form(p: &IntPoly) -> (IntPoly, IntPoly) {
    // phi(ix) = sum_j a_j i^(n-j) x^(n-j); split by the power of i
    let n = p.degree().unwrap_or(0);
    let mut re = alloc::vec![BigInt::from(0); n + 1];
    let mut im = alloc::vec![BigInt::from(0); n + 1];
    for (k, c) in p.coeffs().iter().enumerate() {
        match k % 4 {
            0 => re[k] += c,
            1 => im[k] += c,
            2 => re[k] -= c,
            _ => im[k] -= c,
        }
    }
    (IntPoly::from_coeffs(re), IntPoly::from_coeffs(im))
}

/// `i^n` as `(re, im)`.
pub fn i_power(n: usize) -> (i64, i64) {
    match n % 4 {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    }
}

/// True when the surd element equals the integer polynomial `p`.
pub fn surd_equals_poly(e: &SurdElem, p: &IntPoly) -> bool {
    e.is_rational() && e.denominator().is_one() && e.int_u() == p
}
