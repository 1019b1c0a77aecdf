//! Exact verification of the polynomial identities behind the sign
//! arguments. Every check expands both sides in `Q[x][s]/(s^2 - x^2 - 4)`
//! and compares them exactly.
//!
//! `A1`, `A2` carry a factor `1/s`, so the checks work with `U1 = s A1` and
//! `U2 = s A2` (see [`ClosedFormContext`]) and move the powers of `s` to the
//! other side.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::charpoly::{charpoly_cycle, charpoly_p6};
use crate::poly::IntPoly;
use crate::surd::SurdElem;

use super::closed::{axis_real_form, i_power, ClosedFormContext};

/// Outcome of one exact identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    /// `lhs - rhs` when the identity fails.
    pub residual: Option<SurdElem>,
}

impl IdentityCheck {
    fn compare(name: impl Into<String>, lhs: &SurdElem, rhs: &SurdElem) -> Self {
        let diff = lhs - rhs;
        let holds = diff.is_zero();
        IdentityCheck {
            name: name.into(),
            holds,
            residual: (!holds).then_some(diff),
        }
    }
}

/// A required identity did not hold.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityFailure {
    pub name: String,
    pub residual: SurdElem,
}

impl core::error::Error for IdentityFailure {}

impl fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "identity `{}` fails with residual {}", self.name, self.residual)
    }
}

fn p(c: &[i64]) -> SurdElem {
    SurdElem::from_int(IntPoly::from_i64s(c))
}

/// `x^10 + 10x^8 + 35x^6 + 50x^4 + 25x^2 + 2`.
pub fn p10() -> SurdElem {
    p(&[2, 0, 25, 0, 50, 0, 35, 0, 10, 0, 1])
}

/// `x^9 + 8x^7 + 21x^5 + 20x^3 + 5x`.
pub fn q9() -> SurdElem {
    p(&[0, 5, 0, 20, 0, 21, 0, 8, 0, 1])
}

/// `x^8 + 9x^6 + 28x^4 + 36x^2 + 16`.
pub fn p8() -> SurdElem {
    p(&[16, 0, 36, 0, 28, 0, 9, 0, 1])
}

/// `x^7 + 7x^5 + 16x^3 + 14x`.
pub fn q7() -> SurdElem {
    p(&[0, 14, 0, 16, 0, 7, 0, 1])
}

/// `x^9 + 9x^7 + 30x^5 + 46x^3 + 28x`.
pub fn poly9() -> SurdElem {
    p(&[0, 28, 0, 46, 0, 30, 0, 9, 0, 1])
}

/// `x^5 + 5x^3 + 6x`.
pub fn poly_b() -> SurdElem {
    p(&[0, 6, 0, 5, 0, 1])
}

/// `x^4 + 3x^2 + 4`.
pub fn poly_c() -> SurdElem {
    p(&[4, 0, 3, 0, 1])
}

/// `x^11 + 11x^9 + 46x^7 + 92x^5 + 88x^3 + 28x`.
pub fn poly11() -> SurdElem {
    p(&[0, 28, 0, 88, 0, 92, 0, 46, 0, 11, 0, 1])
}

fn xsq_plus(c: i64) -> SurdElem {
    p(&[c, 0, 1])
}

/// `q(n) = Z2^n poly9 + Z2^(2n) (B + sC) + B - sC`.
pub fn q_of(ctx: &ClosedFormContext, n: u32) -> SurdElem {
    let s = SurdElem::s();
    let sc = &s * &poly_c();
    let b = poly_b();
    let z2n = ctx.z2.pow(n);
    let t1 = &z2n * &poly9();
    let t2 = &z2n.pow(2) * &(&b + &sc);
    &(&t1 + &t2) + &(&b - &sc)
}

/// The printed factorization of `q(10)`, times 2:
/// `-x (x^2+4) (2x^8 + 17x^6 + 47x^4 + 46x^2 + 10) (P10 - s Q9)`.
pub fn q10_display_doubled() -> SurdElem {
    let cof = p(&[10, 0, 46, 0, 47, 0, 17, 0, 2]);
    let lin = &SurdElem::x() * &xsq_plus(4);
    let tail = &p10() - &(&SurdElem::s() * &q9());
    -(&(&lin * &cof) * &tail)
}

/// `s^2 (p(n) - w(n))`, built from the defining squares with `U` in place
/// of `s A`.
pub fn pw_definition_scaled(ctx: &ClosedFormContext, n: u32) -> SurdElem {
    let (u1, u2, z1, z2) = (&ctx.u1, &ctx.u2, &ctx.z1, &ctx.z2);
    let z1_4 = z1.pow(4);
    let z2_4 = z2.pow(4);
    let tail = &(u1 * &z1.pow(2 * n + 4)) + &(u2 * &z2.pow(2 * n + 4));
    let two = SurdElem::from_int(IntPoly::constant(2.into()));
    let p_first = &(&(u2 * &z1_4) + &(u1 * &z2_4)) - &tail;
    let p_second = &two * &(&(u1 * &z1.pow(n)) + &(u2 * &z2.pow(n)));
    let w_first = &(&(u1 * &z1_4) + &(u2 * &z2_4)) - &tail;
    let w_second = &two * &(&(u1 * &z1.pow(n + 4)) + &(u2 * &z2.pow(n + 4)));
    let pp = &p_first.pow(2) + &p_second.pow(2);
    let ww = &w_first.pow(2) + &w_second.pow(2);
    &pp - &ww
}

/// The general display of `p(n) - w(n)`:
/// `x (x^2+2)^3 (x^2+1)^3 (poly11 - 2 Z1^(2n) (s(x^2+2) + x) + 2 Z2^(2n) (s(x^2+2) - x))`.
pub fn pw_display(ctx: &ClosedFormContext, n: u32) -> SurdElem {
    let s = SurdElem::s();
    let x = SurdElem::x();
    let sx2 = &s * &xsq_plus(2);
    let two = SurdElem::from_int(IntPoly::constant(2.into()));
    let a = &(&two * &ctx.z1.pow(2 * n)) * &(&sx2 + &x);
    let b = &(&two * &ctx.z2.pow(2 * n)) * &(&sx2 - &x);
    let bracket = &(&poly11() - &a) + &b;
    let pre = &(&x * &xsq_plus(2).pow(3)) * &xsq_plus(1).pow(3);
    &pre * &bracket
}

/// `-x^2 (x^2+4) (x^2+1)^4 (x^2+2)^3 (2x^8 + 19x^6 + 60x^4 + 68x^2 + 14)`.
pub fn pw5_display() -> SurdElem {
    let cof = p(&[14, 0, 68, 0, 60, 0, 19, 0, 2]);
    let pre = &(&(&SurdElem::x().pow(2) * &xsq_plus(4)) * &xsq_plus(1).pow(4)) * &xsq_plus(2).pow(3);
    -(&pre * &cof)
}

/// `-x^2 (x^2+4) (x^2+2)^3 (x^2+1)^3 (2x^14 + 30x^12 + ... + 22)`.
pub fn pw7_display() -> SurdElem {
    let cof = p(&[22, 0, 242, 0, 690, 0, 849, 0, 533, 0, 178, 0, 30, 0, 2]);
    let pre = &(&(&SurdElem::x().pow(2) * &xsq_plus(4)) * &xsq_plus(2).pow(3)) * &xsq_plus(1).pow(3);
    -(&pre * &cof)
}

/// `s K0(n) = (U1 - U2)(Z2^4 - Z1^4) + 2 U1 Z1^n (1 - Z1^4) + 2 U2 Z2^n (1 - Z2^4)`.
pub fn k0_definition_scaled(ctx: &ClosedFormContext, n: u32) -> SurdElem {
    let (u1, u2, z1, z2) = (&ctx.u1, &ctx.u2, &ctx.z1, &ctx.z2);
    let one = SurdElem::one();
    let two = SurdElem::from_int(IntPoly::constant(2.into()));
    let z1_4 = z1.pow(4);
    let z2_4 = z2.pow(4);
    let first = &(u1 - u2) * &(&z2_4 - &z1_4);
    let second = &(&(&two * u1) * &z1.pow(n)) * &(&one - &z1_4);
    let third = &(&(&two * u2) * &z2.pow(n)) * &(&one - &z2_4);
    &(&first + &second) + &third
}

/// `K0(n) = x (x^2+1) (poly9 + Z2^n (B + sC) + Z1^n (B - sC))`.
pub fn k0_display(ctx: &ClosedFormContext, n: u32) -> SurdElem {
    let sc = &SurdElem::s() * &poly_c();
    let b = poly_b();
    let inner = &(&poly9() + &(&ctx.z2.pow(n) * &(&b + &sc))) + &(&ctx.z1.pow(n) * &(&b - &sc));
    &(&SurdElem::x() * &xsq_plus(1)) * &inner
}

/// `(x^2+4) s K1(n)` with `K1 = (A1 - A2) Z2^n - 2 A1`.
pub fn k1_definition_scaled(ctx: &ClosedFormContext, n: u32) -> SurdElem {
    let two = SurdElem::from_int(IntPoly::constant(2.into()));
    let inner = &(&(&ctx.u1 - &ctx.u2) * &ctx.z2.pow(n)) - &(&two * &ctx.u1);
    &xsq_plus(4) * &inner
}

/// `(x^2+4) s K1(n)` from the display
/// `K1 = -(x^2+1)/(x^2+4) (P8 + (Z2^n - 1) s Q7)`.
pub fn k1_display_scaled(ctx: &ClosedFormContext, n: u32) -> SurdElem {
    let s = SurdElem::s();
    let inner = &p8() + &(&(&ctx.z2.pow(n) - &SurdElem::one()) * &(&s * &q7()));
    -(&(&xsq_plus(1) * &s) * &inner)
}

/// The five identities the sign arguments rest on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RequiredIdentity {
    /// `P10^2 - (x^2+4) Q9^2 = 4`.
    NormQ10,
    /// `P8^2 - (x^2+4) Q7^2 = 4x^8 + 48x^6 + 204x^4 + 368x^2 + 256`.
    NormK1,
    /// The factorization of `q(10)`.
    Q10Factorization,
    /// The factorization of `p(5) - w(5)`.
    Pw5Factorization,
    /// The factorization of `p(7) - w(7)`.
    Pw7Factorization,
}

impl RequiredIdentity {
    pub const ALL: [RequiredIdentity; 5] = [
        RequiredIdentity::NormQ10,
        RequiredIdentity::NormK1,
        RequiredIdentity::Q10Factorization,
        RequiredIdentity::Pw5Factorization,
        RequiredIdentity::Pw7Factorization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RequiredIdentity::NormQ10 => "(i) P10^2 - (x^2+4) Q9^2 = 4",
            RequiredIdentity::NormK1 => {
                "(ii) P8^2 - (x^2+4) Q7^2 = 4x^8 + 48x^6 + 204x^4 + 368x^2 + 256"
            }
            RequiredIdentity::Q10Factorization => "(iii) q(10) factorization",
            RequiredIdentity::Pw5Factorization => "(iv) p(5) - w(5) factorization",
            RequiredIdentity::Pw7Factorization => "(v) p(7) - w(7) factorization",
        }
    }

    pub fn check(self, ctx: &ClosedFormContext) -> IdentityCheck {
        let s = SurdElem::s();
        let two = SurdElem::from_int(IntPoly::constant(2.into()));
        let (lhs, rhs) = match self {
            RequiredIdentity::NormQ10 => (
                &p10().pow(2) - &(&s * &q9()).pow(2),
                SurdElem::from_int(IntPoly::constant(4.into())),
            ),
            RequiredIdentity::NormK1 => (
                &p8().pow(2) - &(&s * &q7()).pow(2),
                p(&[256, 0, 368, 0, 204, 0, 48, 0, 4]),
            ),
            RequiredIdentity::Q10Factorization => (&two * &q_of(ctx, 10), q10_display_doubled()),
            RequiredIdentity::Pw5Factorization => {
                (pw_definition_scaled(ctx, 5), &xsq_plus(4) * &pw5_display())
            }
            RequiredIdentity::Pw7Factorization => {
                (pw_definition_scaled(ctx, 7), &xsq_plus(4) * &pw7_display())
            }
        };
        IdentityCheck::compare(self.name(), &lhs, &rhs)
    }
}

pub fn verify_exact_identities() -> Vec<IdentityCheck> {
    let ctx = ClosedFormContext::new();
    RequiredIdentity::ALL.iter().map(|id| id.check(&ctx)).collect()
}

/// `K0(n)` from its definition against the display.
pub fn k0_display_check(ctx: &ClosedFormContext, n: u32) -> IdentityCheck {
    IdentityCheck::compare(
        alloc::format!("K0 display, n = {n}"),
        &k0_definition_scaled(ctx, n),
        &(&SurdElem::s() * &k0_display(ctx, n)),
    )
}

/// `p(n) - w(n)` from its definition against the general display.
pub fn pw_display_check(ctx: &ClosedFormContext, n: u32) -> IdentityCheck {
    IdentityCheck::compare(
        alloc::format!("p - w display, n = {n}"),
        &pw_definition_scaled(ctx, n),
        &(&xsq_plus(4) * &pw_display(ctx, n)),
    )
}

/// `K1(n)` from its definition against the display.
pub fn k1_display_check(ctx: &ClosedFormContext, n: u32) -> IdentityCheck {
    IdentityCheck::compare(
        alloc::format!("K1 display, n = {n}"),
        &k1_definition_scaled(ctx, n),
        &k1_display_scaled(ctx, n),
    )
}

/// The `x < 0` twin `(A2 - A1) Z1^n - 2 A2` is the reflection `x -> -x`
/// of `K1`.
pub fn k1_mirror_check(ctx: &ClosedFormContext, n: u32) -> IdentityCheck {
    let two = SurdElem::from_int(IntPoly::constant(2.into()));
    let twin = &xsq_plus(4) * &(&(&(&ctx.u2 - &ctx.u1) * &ctx.z1.pow(n)) - &(&two * &ctx.u2));
    IdentityCheck::compare(
        alloc::format!("K1 mirror, n = {n}"),
        &twin,
        &k1_definition_scaled(ctx, n).reflect(),
    )
}

/// Supplementary checks: the general displays of `K0`, `p - w` and `K1`
/// for several `n`, and the closed forms of both characteristic polynomials
/// against the recurrences for `10 <= n <= 24`.
pub fn verify_supplementary_identities() -> Vec<IdentityCheck> {
    let ctx = ClosedFormContext::new();
    let mut out = Vec::new();
    for n in [6u32, 10, 14, 18, 22] {
        out.push(k0_display_check(&ctx, n));
    }
    for n in [5u32, 7, 9, 11, 13] {
        out.push(pw_display_check(&ctx, n));
    }
    for n in [8u32, 12, 16, 20] {
        out.push(k1_display_check(&ctx, n));
        out.push(k1_mirror_check(&ctx, n));
    }
    for n in 10..=24usize {
        out.push(cycle_closed_form_check(&ctx, n));
        out.push(p6_closed_form_check(&ctx, n));
    }
    out
}

/// `phi(C_n, ix) = i^n (Z1^n + Z2^n) - 2`, compared part by part.
fn cycle_closed_form_check(ctx: &ClosedFormContext, n: usize) -> IdentityCheck {
    let (re, im) = axis_real_form(&charpoly_cycle(n).expect("n >= 3"));
    let t = &ctx.z1.pow(n as u32) + &ctx.z2.pow(n as u32);
    let (ir, ii) = i_power(n);
    let two = SurdElem::from_int(IntPoly::constant(2.into()));
    let want_re = &(&t * &SurdElem::from_int(IntPoly::constant(ir.into()))) - &two;
    let want_im = &t * &SurdElem::from_int(IntPoly::constant(ii.into()));
    let lhs = &SurdElem::from_int(re) + &(&SurdElem::s() * &SurdElem::from_int(im));
    let rhs = &want_re + &(&SurdElem::s() * &want_im);
    IdentityCheck::compare(alloc::format!("cycle closed form, n = {n}"), &lhs, &rhs)
}

/// `s phi(P_n^6, ix) = i^n (U1 Z1^n + U2 Z2^n)`, compared part by part.
fn p6_closed_form_check(ctx: &ClosedFormContext, n: usize) -> IdentityCheck {
    let (re, im) = axis_real_form(&charpoly_p6(n).expect("n >= 7"));
    let v = &(&ctx.u1 * &ctx.z1.pow(n as u32)) + &(&ctx.u2 * &ctx.z2.pow(n as u32));
    let (ir, ii) = i_power(n);
    let s = SurdElem::s();
    // one of `ir`, `ii` is zero, so one side of each comparison vanishes
    let re_ok = IdentityCheck::compare(
        "",
        &(&s * &SurdElem::from_int(re)),
        &(&v * &SurdElem::from_int(IntPoly::constant(ir.into()))),
    );
    let im_ok = IdentityCheck::compare(
        "",
        &(&s * &SurdElem::from_int(im)),
        &(&v * &SurdElem::from_int(IntPoly::constant(ii.into()))),
    );
    let holds = re_ok.holds && im_ok.holds;
    IdentityCheck {
        name: alloc::format!("P6 closed form, n = {n}"),
        holds,
        residual: re_ok.residual.or(im_ok.residual),
    }
}

/// Runs [`verify_exact_identities`] and stops at the first failure.
/// On success returns the identity names.
pub fn require_exact_identities() -> Result<Vec<String>, IdentityFailure> {
    let mut names = Vec::new();
    for c in verify_exact_identities() {
        match c.residual {
            Some(residual) => {
                return Err(IdentityFailure {
                    name: c.name,
                    residual,
                })
            }
            None => names.push(c.name),
        }
    }
    Ok(names)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_identities_hold() {
        let checks = verify_exact_identities();
        assert_eq!(checks.len(), 5);
        for c in &checks {
            assert!(c.holds, "{} residual {:?}", c.name, c.residual);
        }
        assert_eq!(require_exact_identities().unwrap().len(), 5);
    }

    #[test]
    fn supplementary_identities_hold() {
        for c in verify_supplementary_identities() {
            assert!(c.holds, "{} residual {:?}", c.name, c.residual);
        }
    }

    #[test]
    fn identity_one_at_x_equals_one() {
        // 123^2 - 5 * 55^2 = 4
        assert_eq!(p10().eval_f64(1.0), 123.0);
        assert_eq!(q9().eval_f64(1.0), 55.0);
        assert_eq!(123i64 * 123 - 5 * 55 * 55, 4);
    }

    #[test]
    fn pw5_at_one() {
        assert_eq!(pw5_display().eval_f64(1.0), -(5.0 * 16.0 * 27.0 * 163.0));
    }

    #[test]
    fn perturbed_identity_reports_residual() {
        let ctx = ClosedFormContext::new();
        let wrong = &pw5_display() + &SurdElem::one();
        let c = IdentityCheck::compare(
            "perturbed",
            &pw_definition_scaled(&ctx, 5),
            &(&xsq_plus(4) * &wrong),
        );
        assert!(!c.holds);
        assert_eq!(c.residual.unwrap(), -xsq_plus(4));
    }
}
