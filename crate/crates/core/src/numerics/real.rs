use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::{Float, Integer};

use super::{PrecisionContext, Rational};
use crate::error::{Error, Result};

/// Arbitrary-precision binary float tagged with the context that produced it.
///
/// Binary operations run at the wider of the two operand contexts and tag the
/// result with it.
#[derive(Clone, Debug)]
pub struct BigReal {
    value: Float,
    ctx: PrecisionContext,
}

impl BigReal {
    /// Rounds `value` to the context's working precision.
    pub fn from_float(value: Float, ctx: PrecisionContext) -> Self {
        let mut value = value;
        value.set_prec(ctx.bits());
        BigReal { value, ctx }
    }

    fn wrap<T>(src: T, ctx: PrecisionContext) -> Self
    where
        Float: rug::Assign<T>,
    {
        BigReal { value: Float::with_val(ctx.bits(), src), ctx }
    }

    pub fn zero(ctx: PrecisionContext) -> Self {
        BigReal { value: Float::new(ctx.bits()), ctx }
    }

    pub fn one(ctx: PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    pub fn from_i64(v: i64, ctx: PrecisionContext) -> Self {
        BigReal { value: Float::with_val(ctx.bits(), v), ctx }
    }

    pub fn from_u64(v: u64, ctx: PrecisionContext) -> Self {
        BigReal { value: Float::with_val(ctx.bits(), v), ctx }
    }

    pub fn from_f64(v: f64, ctx: PrecisionContext) -> Self {
        BigReal { value: Float::with_val(ctx.bits(), v), ctx }
    }

    pub fn from_integer(v: &Integer, ctx: PrecisionContext) -> Self {
        BigReal { value: Float::with_val(ctx.bits(), v), ctx }
    }

    /// Correctly rounded conversion of an exact rational.
    pub fn from_rational(r: &Rational, ctx: PrecisionContext) -> Self {
        BigReal { value: Float::with_val(ctx.bits(), r.as_rug()), ctx }
    }

    pub fn pi(ctx: PrecisionContext) -> Self {
        BigReal { value: Float::with_val(ctx.bits(), Constant::Pi), ctx }
    }

    /// Parses decimal or scientific notation (`1.5`, `-2.5e-30`).
    pub fn parse(s: &str, ctx: PrecisionContext) -> Result<Self> {
        let parsed = Float::parse(s.trim()).map_err(|_| Error::Parse { input: s.to_string() })?;
        Ok(BigReal { value: Float::with_val(ctx.bits(), parsed), ctx })
    }

    pub fn ctx(&self) -> PrecisionContext {
        self.ctx
    }

    pub fn as_float(&self) -> &Float {
        &self.value
    }

    pub fn into_float(self) -> Float {
        self.value
    }

    /// Re-rounds (or widens) to another context.
    pub fn with_context(&self, ctx: PrecisionContext) -> Self {
        BigReal { value: Float::with_val(ctx.bits(), &self.value), ctx }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_nan(&self) -> bool {
        self.value.is_nan()
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.value.is_sign_negative() && !self.value.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs_ref(), self.ctx)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.value.sqrt_ref(), self.ctx)
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.value.recip_ref(), self.ctx)
    }

    pub fn square(&self) -> Self {
        Self::wrap(self.value.square_ref(), self.ctx)
    }

    pub fn ln(&self) -> Self {
        Self::wrap(self.value.ln_ref(), self.ctx)
    }

    pub fn log10(&self) -> Self {
        Self::wrap(self.value.log10_ref(), self.ctx)
    }

    pub fn exp(&self) -> Self {
        Self::wrap(self.value.exp_ref(), self.ctx)
    }

    pub fn sin(&self) -> Self {
        Self::wrap(self.value.sin_ref(), self.ctx)
    }

    pub fn cos(&self) -> Self {
        Self::wrap(self.value.cos_ref(), self.ctx)
    }

    pub fn sinh(&self) -> Self {
        Self::wrap(self.value.sinh_ref(), self.ctx)
    }

    pub fn cosh(&self) -> Self {
        Self::wrap(self.value.cosh_ref(), self.ctx)
    }

    pub fn cot(&self) -> Self {
        Self::wrap(self.value.cot_ref(), self.ctx)
    }

    pub fn powi(&self, exp: i32) -> Self {
        Self::wrap((&self.value).pow(exp), self.ctx)
    }

    pub fn pow(&self, exp: &BigReal) -> Self {
        let ctx = self.ctx.widest(exp.ctx);
        Self::wrap((&self.value).pow(&exp.value), ctx)
    }

    /// `base^exp` for an integer base and real exponent.
    pub fn int_pow(base: u64, exp: &BigReal) -> Self {
        let ctx = exp.ctx;
        let b = Float::with_val(ctx.bits(), base);
        Self::wrap(b.pow(&exp.value), ctx)
    }

    /// `2^exp` for real `exp`.
    pub fn exp2(exp: &BigReal) -> Self {
        Self::wrap(exp.value.exp2_ref(), exp.ctx)
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Scientific notation `d.ddde±k` with `sig` significant digits.
    pub fn to_sci_string(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.value.is_nan() {
            return "nan".into();
        }
        if self.value.is_infinite() {
            return if self.value.is_sign_negative() { "-inf".into() } else { "inf".into() };
        }
        if self.value.is_zero() {
            let zeros = "0".repeat(sig - 1);
            return if sig > 1 { format!("0.{zeros}e+0") } else { "0e+0".into() };
        }
        let (neg, digits, exp) = self.value.to_sign_string_exp_round(10, Some(sig), Round::Nearest);
        // value = 0.digits * 10^exp
        let exp = exp.unwrap_or(0) - 1;
        let sign = if neg { "-" } else { "" };
        let (head, tail) = digits.split_at(1);
        let esign = if exp < 0 { '-' } else { '+' };
        if tail.is_empty() {
            format!("{sign}{head}e{esign}{}", exp.abs())
        } else {
            format!("{sign}{head}.{tail}e{esign}{}", exp.abs())
        }
    }

    /// Fixed-point notation with exactly `decimals` digits after the point,
    /// rounded half away from zero.
    pub fn to_fixed_string(&self, decimals: u32) -> String {
        if !self.value.is_finite() {
            return self.to_sci_string(1);
        }
        let scale = Integer::from(10).pow(decimals);
        let bits = self.value.prec() + (f64::from(decimals) * std::f64::consts::LOG2_10) as u32 + 64;
        let scaled = Float::with_val(bits, &self.value * &scale);
        let rounded = scaled.round();
        let mut int = rounded.to_integer().unwrap_or_default();
        let neg = int < 0;
        int.abs_mut();
        let mut s = int.to_string();
        let width = decimals as usize + 1;
        if s.len() < width {
            s = format!("{}{}", "0".repeat(width - s.len()), s);
        }
        let split = s.len() - decimals as usize;
        let (whole, frac) = s.split_at(split);
        let sign = if neg { "-" } else { "" };
        if decimals == 0 {
            format!("{sign}{whole}")
        } else {
            format!("{sign}{whole}.{frac}")
        }
    }

    /// Enough significant digits that [`BigReal::parse`] at the same context
    /// reproduces the value bit for bit.
    pub fn to_round_trip_string(&self) -> String {
        let digits = 2 + (f64::from(self.value.prec()) * std::f64::consts::LOG10_2).ceil() as usize;
        self.to_sci_string(digits)
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

impl PartialEq<i64> for BigReal {
    fn eq(&self, other: &i64) -> bool {
        self.value == *other
    }
}

impl PartialOrd<i64> for BigReal {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.value.partial_cmp(other)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = f.precision().unwrap_or(self.ctx.digits() as usize);
        f.write_str(&self.to_sci_string(sig))
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal { value: -self.value, ctx: self.ctx }
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal { value: -self.value.clone(), ctx: self.ctx }
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let ctx = self.ctx.widest(rhs.ctx);
                BigReal { value: Float::with_val(ctx.bits(), &self.value $op &rhs.value), ctx }
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                &self $op &rhs
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                &self $op rhs
            }
        }
        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self $op &rhs
            }
        }
        impl $trait<i64> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: i64) -> BigReal {
                BigReal { value: Float::with_val(self.ctx.bits(), &self.value $op rhs), ctx: self.ctx }
            }
        }
        impl $trait<i64> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: i64) -> BigReal {
                &self $op rhs
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);
real_binop!(Div, div, /);

impl std::iter::Sum for BigReal {
    /// Panics on an empty iterator since no context is available.
    fn sum<I: Iterator<Item = BigReal>>(iter: I) -> BigReal {
        iter.reduce(|a, b| a + b).expect("sum of an empty sequence of BigReal")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(d: u32) -> PrecisionContext {
        PrecisionContext::new(d)
    }

    #[test]
    fn sci_formatting() {
        let c = ctx(30);
        let x = BigReal::parse("1.0463e-97", c).unwrap();
        assert_eq!(x.to_sci_string(3), "1.05e-97");
        assert_eq!(BigReal::from_i64(-12345, c).to_sci_string(2), "-1.2e+4");
        assert_eq!(BigReal::zero(c).to_sci_string(3), "0.00e+0");
        assert_eq!(BigReal::one(c).to_sci_string(1), "1e+0");
    }

    #[test]
    fn fixed_formatting() {
        let c = ctx(30);
        let x = BigReal::parse("1.2020569031595942853997", c).unwrap();
        assert_eq!(x.to_fixed_string(12), "1.202056903160");
        let y = BigReal::parse("-0.00072102890399", c).unwrap();
        assert_eq!(y.to_fixed_string(12), "-0.000721028904");
        assert_eq!(BigReal::parse("0.5", c).unwrap().to_fixed_string(0), "1");
        assert_eq!(BigReal::parse("7.85e-12", c).unwrap().to_fixed_string(12), "0.000000000008");
    }

    #[test]
    fn operations_take_widest_context() {
        let a = BigReal::from_i64(1, ctx(20));
        let b = BigReal::from_i64(3, ctx(100));
        let q = &a / &b;
        assert_eq!(q.ctx(), ctx(100));
        let third = BigReal::parse(&format!("0.{}", "3".repeat(105)), ctx(100)).unwrap();
        assert!((&q - &third).abs() < BigReal::parse("1e-105", ctx(100)).unwrap());
    }

    #[test]
    fn rational_conversion_relative_error() {
        for digits in [20u32, 50, 200] {
            let c = ctx(digits);
            let r = Rational::new(-691, 2730);
            let x = BigReal::from_rational(&r, c);
            // back to exact and measure
            let exact = x.as_float().to_rational().unwrap();
            let rel = ((exact - r.as_rug()) / r.as_rug().clone()).abs();
            let bound = rug::Rational::from((1, Integer::from(10).pow(digits - 1)));
            assert!(rel <= bound);
        }
    }

    #[test]
    fn pi_matches_known_digits() {
        let p = BigReal::pi(ctx(40));
        assert_eq!(p.to_fixed_string(30), "3.141592653589793238462643383280");
    }

    proptest! {
        #[test]
        fn round_trip_serialization(m in -1.0e6f64..1.0e6, e in -300i32..300, digits in 20u32..120) {
            let c = ctx(digits);
            let x = BigReal::from_f64(m, c) * BigReal::from_i64(10, c).powi(e) / BigReal::from_i64(7, c);
            let back = BigReal::parse(&x.to_round_trip_string(), c).unwrap();
            prop_assert_eq!(back, x);
        }
    }
}
