//! The ring `Q[x][s] / (s^2 - x^2 - 4)`.
//!
//! An element `u(x) + v(x) s` is stored as two integer polynomials over one
//! positive common denominator, reduced so the gcd of every coefficient and
//! the denominator is 1. That keeps equality structural and makes clearing
//! denominators a field read.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{IntPoly, RatPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SurdElem {
    u: IntPoly,
    v: IntPoly,
    den: BigInt,
}

/// `x^2 + 4`, the square of `s`.
pub fn s_squared() -> IntPoly {
    IntPoly::from_i64s(&[4, 0, 1])
}

fn common_denominator(p: &RatPoly) -> BigInt {
    p.coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn scale_to_int(p: &RatPoly, den: &BigInt) -> IntPoly {
    IntPoly::from_coeffs(
        p.coeffs()
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect(),
    )
}

impl SurdElem {
    /// `(u + v s) / den`, reduced. Panics if `den` is zero.
    pub fn from_parts(u: IntPoly, v: IntPoly, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut e = SurdElem { u, v, den };
        e.normalize();
        e
    }

    pub fn new(u: RatPoly, v: RatPoly) -> Self {
        let den = common_denominator(&u).lcm(&common_denominator(&v));
        let ui = scale_to_int(&u, &den);
        let vi = scale_to_int(&v, &den);
        Self::from_parts(ui, vi, den)
    }

    pub fn from_int(u: IntPoly) -> Self {
        Self::from_parts(u, IntPoly::zero(), BigInt::one())
    }

    pub fn from_int_parts(u: IntPoly, v: IntPoly) -> Self {
        Self::from_parts(u, v, BigInt::one())
    }

    pub fn zero() -> Self {
        Self::from_int(IntPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_int(IntPoly::one())
    }

    pub fn x() -> Self {
        Self::from_int(IntPoly::x())
    }

    /// The surd `s = sqrt(x^2 + 4)` itself.
    pub fn s() -> Self {
        Self::from_int_parts(IntPoly::zero(), IntPoly::one())
    }

    /// `Z1 = (x + s) / 2`.
    pub fn z1() -> Self {
        Self::from_parts(IntPoly::x(), IntPoly::one(), BigInt::from(2))
    }

    /// `Z2 = (x - s) / 2`.
    pub fn z2() -> Self {
        Self::z1().conj()
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            self.u = -&self.u;
            self.v = -&self.v;
        }
        let mut g = self.den.clone();
        for c in self.u.coeffs().iter().chain(self.v.coeffs()) {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.u = div_exact(&self.u, &g);
            self.v = div_exact(&self.v, &g);
            self.den = &self.den / &g;
        }
    }

    /// Rational part `u`.
    pub fn u(&self) -> RatPoly {
        over(&self.u, &self.den)
    }

    /// Coefficient of `s`.
    pub fn v(&self) -> RatPoly {
        over(&self.v, &self.den)
    }

    pub fn int_u(&self) -> &IntPoly {
        &self.u
    }

    pub fn int_v(&self) -> &IntPoly {
        &self.v
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Returns the integer numerator `N` and the positive integer `d` with
    /// `self = N / d`.
    pub fn clear_denominators(&self) -> (SurdElem, BigInt) {
        (
            SurdElem {
                u: self.u.clone(),
                v: self.v.clone(),
                den: BigInt::one(),
            },
            self.den.clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// True when the `s` part vanishes.
    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    /// `u - v s`.
    pub fn conj(&self) -> Self {
        SurdElem {
            u: self.u.clone(),
            v: -&self.v,
            den: self.den.clone(),
        }
    }

    /// `self * conj(self) = u^2 - (x^2 + 4) v^2`.
    pub fn norm(&self) -> RatPoly {
        let n = &(&self.u * &self.u) - &(&s_squared() * &(&self.v * &self.v));
        over(&n, &(&self.den * &self.den))
    }

    /// Substitutes `-x` for `x`. Since `s` depends on `x^2` only, this
    /// reflects both parts.
    pub fn reflect(&self) -> Self {
        SurdElem {
            u: self.u.reflect(),
            v: self.v.reflect(),
            den: self.den.clone(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::from_parts(self.u.scale(c), self.v.scale(c), self.den.clone())
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        Self::from_parts(&self.u * p, &self.v * p, self.den.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at real `x` with `s = +sqrt(x^2 + 4)`, by direct Horner sums.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let s = (x * x + 4.0).sqrt();
        let d = self.den.to_f64().unwrap_or(f64::INFINITY);
        (self.u.eval_f64(x) + self.v.eval_f64(x) * s) / d
    }

    /// Like [`eval_f64`](Self::eval_f64) but routes through the norm when
    /// `u` and `v s` nearly cancel.
    pub fn eval_stable(&self, x: f64) -> f64 {
        let s = (x * x + 4.0).sqrt();
        let d = self.den.to_f64().unwrap_or(f64::INFINITY);
        let a = self.u.eval_f64(x);
        let b = self.v.eval_f64(x) * s;
        if a == 0.0 || b == 0.0 || a.signum() == b.signum() {
            return (a + b) / d;
        }
        let n = &(&self.u * &self.u) - &(&s_squared() * &(&self.v * &self.v));
        n.eval_f64(x) / (a - b) / d
    }
}

fn over(p: &IntPoly, den: &BigInt) -> RatPoly {
    RatPoly::from_coeffs(
        p.coeffs()
            .iter()
            .map(|c| BigRational::new(c.clone(), den.clone()))
            .collect(),
    )
}

fn div_exact(p: &IntPoly, g: &BigInt) -> IntPoly {
    IntPoly::from_coeffs(p.coeffs().iter().map(|c| c / g).collect())
}

impl Add for &SurdElem {
    type Output = SurdElem;
    fn add(self, rhs: &SurdElem) -> SurdElem {
        if self.den == rhs.den {
            return SurdElem::from_parts(&self.u + &rhs.u, &self.v + &rhs.v, self.den.clone());
        }
        let l = self.den.lcm(&rhs.den);
        let fa = &l / &self.den;
        let fb = &l / &rhs.den;
        SurdElem::from_parts(
            &self.u.scale(&fa) + &rhs.u.scale(&fb),
            &self.v.scale(&fa) + &rhs.v.scale(&fb),
            l,
        )
    }
}

impl Sub for &SurdElem {
    type Output = SurdElem;
    fn sub(self, rhs: &SurdElem) -> SurdElem {
        self + &(-rhs)
    }
}

impl Neg for &SurdElem {
    type Output = SurdElem;
    fn neg(self) -> SurdElem {
        SurdElem {
            u: -&self.u,
            v: -&self.v,
            den: self.den.clone(),
        }
    }
}

impl Mul for &SurdElem {
    type Output = SurdElem;
    fn mul(self, rhs: &SurdElem) -> SurdElem {
        let u = &(&self.u * &rhs.u) + &(&s_squared() * &(&self.v * &rhs.v));
        let v = &(&self.u * &rhs.v) + &(&self.v * &rhs.u);
        SurdElem::from_parts(u, v, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SurdElem {
            type Output = SurdElem;
            fn $m(self, rhs: SurdElem) -> SurdElem {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&SurdElem> for SurdElem {
            type Output = SurdElem;
            fn $m(self, rhs: &SurdElem) -> SurdElem {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SurdElem {
    type Output = SurdElem;
    fn neg(self) -> SurdElem {
        -&self
    }
}

impl From<IntPoly> for SurdElem {
    fn from(p: IntPoly) -> Self {
        SurdElem::from_int(p)
    }
}

impl fmt::Debug for SurdElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SurdElem({})", self)
    }
}

impl fmt::Display for SurdElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[({}) + ({})*s]", self.u, self.v)?;
        if !self.den.is_one() {
            write!(f, "/{}", self.den)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn z_sum_and_product() {
        let z1 = SurdElem::z1();
        let z2 = SurdElem::z2();
        assert_eq!(&z1 + &z2, SurdElem::x());
        assert_eq!(&z1 * &z2, -SurdElem::one());
    }

    #[test]
    fn z1_squared() {
        let sq = SurdElem::z1().pow(2);
        // (x^2 + 2)/2 + (x/2) s
        let expect = SurdElem::from_parts(ip(&[2, 0, 1]), ip(&[0, 1]), BigInt::from(2));
        assert_eq!(sq, expect);
        assert_eq!(alloc::format!("{}", sq.u()), "1/2x^2 + 1");
    }

    #[test]
    fn power_sums_are_rational() {
        for n in 0..30 {
            let e = &SurdElem::z1().pow(n) + &SurdElem::z2().pow(n);
            assert!(e.is_rational(), "n = {n}");
        }
    }

    #[test]
    fn norm_of_z1() {
        // Z1 * conj(Z1) = Z1 * Z2 = -1
        assert_eq!(SurdElem::z1().norm(), RatPoly::constant(-BigRational::one()));
        let e = SurdElem::from_int_parts(ip(&[1, 2]), ip(&[0, 0, 3]));
        let prod = &e * &e.conj();
        assert!(prod.is_rational());
        assert_eq!(prod.u(), e.norm());
    }

    #[test]
    fn clearing_denominators() {
        let e = &SurdElem::z1().pow(3) + &SurdElem::from_parts(ip(&[1]), ip(&[]), BigInt::from(3));
        let (num, d) = e.clear_denominators();
        assert_eq!(num.denominator(), &BigInt::one());
        assert_eq!(num.scale_int(&BigInt::one()), SurdElem::from_int_parts(num.int_u().clone(), num.int_v().clone()));
        let back = SurdElem::from_parts(num.int_u().clone(), num.int_v().clone(), d);
        assert_eq!(back, e);
    }

    #[test]
    fn evaluation_agrees() {
        let z1 = SurdElem::z1();
        for &x in &[-3.0, -0.5, 0.0, 0.7, 2.0, 10.0] {
            let exact = (x + (x * x + 4.0f64).sqrt()) / 2.0;
            assert!((z1.eval_f64(x) - exact).abs() < 1e-14);
            let z2n = SurdElem::z2().pow(12);
            let direct = ((x - (x * x + 4.0f64).sqrt()) / 2.0).powi(12);
            assert!((z2n.eval_stable(x) - direct).abs() <= 1e-9 * direct.abs().max(1e-300));
        }
        assert_eq!(SurdElem::z1().reflect(), -SurdElem::z2());
    }
}
