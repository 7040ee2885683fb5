//! Exact numbers of the form `q + r·√3` with rational `q` and `r`.
//!
//! Every constant the algebra needs (the `1/3` and `√3/3` factors of the unit
//! matrices, decimal literals such as `2.1`) is representable here without
//! rounding. Floating point only appears in [`ExactScalar::to_f64`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

pub const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// An element of ℚ(√3).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    rat: BigRational,
    root: BigRational,
}

impl ExactScalar {
    pub fn new(rat: BigRational, root: BigRational) -> Self {
        ExactScalar { rat, root }
    }

    pub fn zero() -> Self {
        ExactScalar::default()
    }

    pub fn one() -> Self {
        ExactScalar::from_rational(BigRational::one())
    }

    /// `√3` itself.
    pub fn sqrt3() -> Self {
        ExactScalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_rational(rat: BigRational) -> Self {
        ExactScalar::new(rat, BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`. Panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        ExactScalar::from_rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// `(numer / denom)·√3`. Panics if `denom == 0`.
    pub fn root_ratio(numer: i64, denom: i64) -> Self {
        ExactScalar::new(
            BigRational::zero(),
            BigRational::new(BigInt::from(numer), BigInt::from(denom)),
        )
    }

    /// Rational coefficient `q`.
    pub fn rat(&self) -> &BigRational {
        &self.rat
    }

    /// Coefficient `r` of `√3`.
    pub fn root(&self) -> &BigRational {
        &self.root
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.root.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.root.is_zero()
    }

    /// Conjugate `q − r·√3`.
    pub fn conjugate(&self) -> Self {
        ExactScalar::new(self.rat.clone(), -&self.root)
    }

    /// Field norm `q² − 3r²`; nonzero for every nonzero element since √3 is irrational.
    pub fn field_norm(&self) -> BigRational {
        let three = BigRational::from_integer(BigInt::from(3));
        &self.rat * &self.rat - three * &self.root * &self.root
    }

    /// Exact sign, decided without floating point.
    pub fn signum(&self) -> i8 {
        let sq = rational_sign(&self.rat);
        let sr = rational_sign(&self.root);
        if sq >= 0 && sr >= 0 {
            return (sq | sr).signum();
        }
        if sq <= 0 && sr <= 0 {
            return -1;
        }
        // Opposite signs: the term with the larger square wins.
        let q2 = &self.rat * &self.rat;
        let r2 = BigRational::from_integer(BigInt::from(3)) * &self.root * &self.root;
        match q2.cmp(&r2) {
            Ordering::Greater => sq,
            Ordering::Less => sr,
            Ordering::Equal => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signum() >= 0
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // x / y = x·conj(y) / N(y)
        let n = rhs.field_norm();
        let num = self * &rhs.conjugate();
        Ok(ExactScalar::new(num.rat / &n, num.root / n))
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        ExactScalar::one().checked_div(self)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = ExactScalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Nearest `f64`. When the two terms have opposite signs the value is
    /// computed as `(q² − 3r²) / (q − r√3)` so the subtraction never cancels.
    pub fn to_f64(&self) -> f64 {
        let q = self.rat.to_f64().unwrap_or(f64::NAN);
        let r = self.root.to_f64().unwrap_or(f64::NAN);
        if rational_sign(&self.rat) * rational_sign(&self.root) >= 0 {
            return q + r * SQRT_3;
        }
        let n = self.field_norm().to_f64().unwrap_or(f64::NAN);
        n / (q - r * SQRT_3)
    }

    /// Exact rational approximation of a finite `f64`, rounded to `digits`
    /// decimal places.
    pub fn from_f64_rounded(value: f64, digits: u32) -> Result<Self, AlgebraError> {
        if !value.is_finite() {
            return Err(AlgebraError::NonFinite(value));
        }
        let scale = 10f64.powi(digits as i32);
        let scaled = (value * scale).round();
        let numer = BigInt::from_f64(scaled).ok_or(AlgebraError::NonFinite(value))?;
        let denom = BigInt::from(10).pow(digits);
        Ok(ExactScalar::from_rational(BigRational::new(numer, denom)))
    }
}

fn rational_sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::from_int(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        ExactScalar::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $body:expr) => {
        impl<'a> $imp<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                let f: fn(&ExactScalar, &ExactScalar) -> ExactScalar = $body;
                f(self, rhs)
            }
        }
        impl $imp<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $imp<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |x, y| ExactScalar::new(
    &x.rat + &y.rat,
    &x.root + &y.root
));
forward_binop!(Sub, sub, |x, y| ExactScalar::new(
    &x.rat - &y.rat,
    &x.root - &y.root
));
forward_binop!(Mul, mul, |x, y| {
    let three = BigRational::from_integer(BigInt::from(3));
    ExactScalar::new(
        &x.rat * &y.rat + three * &x.root * &y.root,
        &x.rat * &y.root + &y.rat * &x.root,
    )
});

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.rat += &rhs.rat;
        self.root += &rhs.root;
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-&self.rat, -&self.root)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl std::iter::Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Renders as `q`, `q/r`, `s*sqrt3`, `q+s*sqrt3` or `q-s*sqrt3`.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root.is_zero() {
            return write_rational(f, &self.rat);
        }
        if !self.rat.is_zero() {
            write_rational(f, &self.rat)?;
            f.write_str(if self.root.is_negative() { "-" } else { "+" })?;
            write_rational(f, &self.root.abs())?;
        } else {
            write_rational(f, &self.root)?;
        }
        f.write_str("*sqrt3")
    }
}

/// Parses a plain rational term: integer, `p/q` or decimal.
pub fn parse_rational(text: &str) -> Result<BigRational, AlgebraError> {
    let bad = || AlgebraError::MalformedLiteral(text.to_string());
    let s = text.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = parse_rational(n)?;
        let d = parse_rational(d)?;
        if d.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        return Ok(n / d);
    }
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if (int_part.is_empty() && frac_part.is_empty())
        || !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let all: String = format!("{int_part}{frac_part}");
    let numer: BigInt = if all.is_empty() {
        BigInt::zero()
    } else {
        all.parse().map_err(|_| bad())?
    };
    let denom = BigInt::from(10).pow(frac_part.len() as u32);
    let value = BigRational::new(numer, denom);
    Ok(if neg { -value } else { value })
}

impl FromStr for ExactScalar {
    type Err = AlgebraError;

    /// Accepts the rendered forms plus decimals and a bare `sqrt3`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(AlgebraError::MalformedLiteral(text.to_string()));
        }
        let Some(body) = s.strip_suffix("sqrt3") else {
            return Ok(ExactScalar::from_rational(parse_rational(&s)?));
        };
        // Split off the root term at the last sign that is not leading.
        let split = body
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (rat_text, coeff_text) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let coeff_text = coeff_text.strip_suffix('*').unwrap_or(coeff_text);
        let coeff = match coeff_text {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            t => parse_rational(t)?,
        };
        let rat = if rat_text.is_empty() {
            BigRational::zero()
        } else {
            parse_rational(rat_text)?
        };
        Ok(ExactScalar::new(rat, coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> ExactScalar {
        text.parse().unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(
            ExactScalar::ratio(1, 3) + ExactScalar::ratio(2, 3),
            ExactScalar::one()
        );
        assert!((ExactScalar::sqrt3() + (-ExactScalar::sqrt3())).is_zero());
        assert_eq!(s("4+sqrt3") + ExactScalar::sqrt3(), s("4+2*sqrt3"));
    }

    #[test]
    fn multiplication_examples() {
        let r = ExactScalar::root_ratio(1, 3);
        assert_eq!(&r * &r, ExactScalar::ratio(1, 3));
        let x = s("4+sqrt3");
        assert_eq!(&x * &x, s("19+8*sqrt3"));
        assert_eq!(&x * &ExactScalar::one(), x);
    }

    #[test]
    fn division_and_subtraction() {
        let third_root = ExactScalar::one()
            .checked_div(&ExactScalar::sqrt3())
            .unwrap();
        assert_eq!(third_root, ExactScalar::root_ratio(1, 3));
        assert!((s("19+8*sqrt3") - s("19+8*sqrt3")).is_zero());
        let q = ExactScalar::from_int(6)
            .checked_div(&ExactScalar::sqrt3())
            .unwrap();
        assert_eq!(q, ExactScalar::root_ratio(2, 1));
        assert_eq!(
            ExactScalar::one().checked_div(&ExactScalar::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn sign_examples() {
        assert_eq!(s("2-sqrt3").signum(), 1);
        assert_eq!(s("4-3*sqrt3").signum(), -1);
        assert_eq!(ExactScalar::zero().signum(), 0);
        assert_eq!(s("-4+3*sqrt3").signum(), 1);
        assert_eq!(s("-2+sqrt3").signum(), -1);
        assert_eq!(s("-1/2*sqrt3").signum(), -1);
    }

    #[test]
    fn float_conversion() {
        assert_eq!(ExactScalar::sqrt3().to_f64(), 1.7320508075688772);
        assert_eq!(s("2.1").to_f64(), 2.1);
        assert_eq!(ExactScalar::ratio(1, 3).to_f64(), 1.0 / 3.0);
        // 2 - √3 without catastrophic cancellation
        let x = s("2-sqrt3").to_f64();
        assert!((x - 0.2679491924311227).abs() < 1e-16);
    }

    #[test]
    fn decimal_literals_are_exact() {
        assert_eq!(s("2.1"), ExactScalar::ratio(21, 10));
        assert_eq!(s("-6.125"), ExactScalar::ratio(-49, 8));
        assert_eq!(s(".5"), ExactScalar::ratio(1, 2));
        assert!("1.2.3".parse::<ExactScalar>().is_err());
        assert!("abc".parse::<ExactScalar>().is_err());
        assert_eq!(
            "1/0".parse::<ExactScalar>(),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(ExactScalar::from_int(7).to_string(), "7");
        assert_eq!(ExactScalar::ratio(-2, 6).to_string(), "-1/3");
        assert_eq!(ExactScalar::root_ratio(2, 3).to_string(), "2/3*sqrt3");
        assert_eq!(s("1/3+2/3*sqrt3").to_string(), "1/3+2/3*sqrt3");
        assert_eq!(s("4-sqrt3").to_string(), "4-1*sqrt3");
        assert_eq!(s("-sqrt3").to_string(), "-1*sqrt3");
    }

    #[test]
    fn ordering_is_exact() {
        assert!(s("2-sqrt3") > ExactScalar::zero());
        assert!(ExactScalar::sqrt3() < ExactScalar::from_int(2));
        assert!(ExactScalar::sqrt3() > ExactScalar::ratio(17, 10));
        assert_eq!(s("3").min(s("sqrt3")), s("sqrt3"));
    }

    #[test]
    fn rounded_from_f64() {
        let x = ExactScalar::from_f64_rounded(-2.5, 12).unwrap();
        assert_eq!(x, ExactScalar::ratio(-5, 2));
        assert!(ExactScalar::from_f64_rounded(f64::NAN, 12).is_err());
    }
}
