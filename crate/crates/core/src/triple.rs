//! Cyclic (3)-vectors: nonnegative triples `(a, b, c)` multiplied by the
//! table `b·b = c`, `b·c = a`, `c·c = b`.
//!
//! Constant triples `(t, t, t)` play the role of zero, so a triple is only
//! meaningful up to adding a constant. Modulo that family the triples are the
//! complex numbers: `(a, b, c) ↦ a + b·ω + c·ω²` with `ω = exp(2πi/3)`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul};

use num_complex::Complex64;

use crate::error::AlgebraError;
use crate::scalar::{ExactScalar, SQRT_3};

/// Floating-point complex value used for conversion and diagnostics.
pub type ComplexValue = Complex64;

/// Primitive cube root of unity `exp(2πi/3)`.
pub const OMEGA: ComplexValue = ComplexValue {
    re: -0.5,
    im: SQRT_3 / 2.0,
};

/// Decimal places kept when turning a float into an exact component.
pub const COMPLEX_INPUT_DIGITS: u32 = 12;

#[derive(Clone, Debug)]
pub struct Triple {
    c: [ExactScalar; 3],
}

impl Triple {
    pub fn new(a: ExactScalar, b: ExactScalar, c: ExactScalar) -> Result<Self, AlgebraError> {
        let t = Triple { c: [a, b, c] };
        if let Some(neg) = t.c.iter().find(|x| x.is_negative()) {
            return Err(AlgebraError::NegativeScalar(neg.to_string()));
        }
        Ok(t)
    }

    /// Integer shorthand; panics on negative input.
    pub fn ints(a: i64, b: i64, c: i64) -> Self {
        Triple::new(a.into(), b.into(), c.into()).expect("nonnegative components")
    }

    pub(crate) fn from_array_unchecked(c: [ExactScalar; 3]) -> Self {
        Triple { c }
    }

    pub fn zero() -> Self {
        Triple::ints(0, 0, 0)
    }

    pub fn one() -> Self {
        Triple::ints(1, 0, 0)
    }

    /// The zero-class representative `(t, t, t)`.
    pub fn constant(t: &ExactScalar) -> Result<Self, AlgebraError> {
        Triple::new(t.clone(), t.clone(), t.clone())
    }

    pub fn a(&self) -> &ExactScalar {
        &self.c[0]
    }

    pub fn b(&self) -> &ExactScalar {
        &self.c[1]
    }

    pub fn c(&self) -> &ExactScalar {
        &self.c[2]
    }

    pub fn components(&self) -> &[ExactScalar; 3] {
        &self.c
    }

    pub fn min_component(&self) -> &ExactScalar {
        self.c.iter().min().expect("three components")
    }

    pub fn sum(&self) -> ExactScalar {
        self.c.iter().cloned().sum()
    }

    /// Subtracts the smallest component from all three.
    pub fn reduce(&self) -> Self {
        let m = self.min_component().clone();
        Triple {
            c: self.c.clone().map(|x| &x - &m),
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.min_component().is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.c[0] == self.c[1] && self.c[1] == self.c[2]
    }

    /// Raw component equality, without reducing.
    pub fn same_form(&self, other: &Self) -> bool {
        self.c == other.c
    }

    /// `a² + b² + c² − ab − ac − bc`, exact.
    pub fn norm_sq(&self) -> ExactScalar {
        let [a, b, c] = &self.c;
        let squares = a * a + b * b + c * c;
        let cross = a * b + a * c + b * c;
        squares - cross
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().to_f64().max(0.0).sqrt()
    }

    /// Swaps `b` and `c`; the complex conjugate.
    pub fn conj(&self) -> Self {
        let [a, b, c] = self.c.clone();
        Triple { c: [a, c, b] }
    }

    pub fn scale(&self, s: &ExactScalar) -> Result<Self, AlgebraError> {
        if s.is_negative() {
            return Err(AlgebraError::NegativeScalar(s.to_string()));
        }
        Ok(Triple {
            c: self.c.clone().map(|x| s * &x),
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Triple::one(), |acc, _| &acc * self)
    }

    /// `a + b·ω + c·ω²`. Both parts are formed exactly before rounding.
    pub fn to_complex(&self) -> ComplexValue {
        let [a, b, c] = &self.c;
        let half = ExactScalar::ratio(1, 2);
        let re = a - &(&half * &(b + c));
        let im = &(b - c) * &ExactScalar::root_ratio(1, 2);
        ComplexValue::new(re.to_f64(), im.to_f64())
    }

    /// Reduced triple whose complex value is `z`, with each part of `z`
    /// rounded to [`COMPLEX_INPUT_DIGITS`] decimal places.
    pub fn from_complex(z: ComplexValue) -> Result<Self, AlgebraError> {
        let x = ExactScalar::from_f64_rounded(z.re, COMPLEX_INPUT_DIGITS)?;
        let y = ExactScalar::from_f64_rounded(z.im, COMPLEX_INPUT_DIGITS)?;
        let real = if x.is_negative() {
            let m = -&x;
            Triple {
                c: [ExactScalar::zero(), m.clone(), m],
            }
        } else {
            Triple {
                c: [x, ExactScalar::zero(), ExactScalar::zero()],
            }
        };
        let third_root = ExactScalar::root_ratio(1, 3);
        let imag = if y.is_negative() {
            Triple::ints(1, 0, 2).scale(&(&(-&y) * &third_root))?
        } else {
            Triple::ints(1, 2, 0).scale(&(&y * &third_root))?
        };
        Ok((&real + &imag).reduce())
    }
}

impl PartialEq for Triple {
    fn eq(&self, other: &Self) -> bool {
        self.reduce().same_form(&other.reduce())
    }
}

impl Eq for Triple {}

/// Hashes the reduced form, consistent with `==`.
impl Hash for Triple {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let r = self.reduce();
        r.c.hash(state);
    }
}

impl Add for &Triple {
    type Output = Triple;
    fn add(self, rhs: &Triple) -> Triple {
        let [a1, b1, c1] = &self.c;
        let [a2, b2, c2] = &rhs.c;
        Triple {
            c: [a1 + a2, b1 + b2, c1 + c2],
        }
    }
}

impl Mul for &Triple {
    type Output = Triple;
    fn mul(self, rhs: &Triple) -> Triple {
        let [a1, b1, c1] = &self.c;
        let [a2, b2, c2] = &rhs.c;
        Triple {
            c: [
                a1 * a2 + b1 * c2 + b2 * c1,
                a1 * b2 + a2 * b1 + c1 * c2,
                a1 * c2 + a2 * c1 + b1 * b2,
            ],
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.c;
        write!(f, "t{{{a},{b},{c}}}")
    }
}

/// Formats a real number with 12 significant digits, trailing zeros trimmed.
pub fn format_real(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() {
            "0".into()
        } else {
            x.to_string()
        };
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&magnitude) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// Renders `re+im*i` or `re-im*i`.
pub fn format_complex(z: ComplexValue) -> String {
    let re = format_real(z.re);
    let im = format_real(z.im);
    match im.strip_prefix('-') {
        Some(abs) => format!("{re}-{abs}*i"),
        None => format!("{re}+{im}*i"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> ExactScalar {
        t.parse().unwrap()
    }

    fn t(a: &str, b: &str, c: &str) -> Triple {
        Triple::new(s(a), s(b), s(c)).unwrap()
    }

    fn close(z: ComplexValue, re: f64, im: f64) -> bool {
        (z.re - re).abs() < 1e-12 && (z.im - im).abs() < 1e-12
    }

    #[test]
    fn addition() {
        let x = t("2", "3/2", "sqrt3");
        let shifted = &Triple::ints(1, 1, 1) + &x;
        assert!(shifted.same_form(&t("3", "5/2", "1+sqrt3")));
        assert_eq!(shifted, x);
        assert!((&Triple::zero() + &Triple::ints(2, 3, 1)).same_form(&Triple::ints(2, 3, 1)));
        assert!((&Triple::ints(1, 2, 0) + &Triple::ints(2, 0, 1)).same_form(&Triple::ints(3, 2, 1)));
    }

    #[test]
    fn multiplication_examples() {
        let p = &Triple::ints(2, 1, 0) * &Triple::ints(0, 2, 1);
        assert!(p.same_form(&Triple::ints(1, 4, 4)));
        assert!(p.reduce().same_form(&Triple::ints(0, 3, 3)));
        assert!(Triple::ints(1, 1, 0)
            .pow(2)
            .same_form(&Triple::ints(1, 2, 1)));
        assert!(Triple::ints(1, 2, 0)
            .pow(2)
            .same_form(&Triple::ints(1, 4, 4)));

        let i = t("1/3*sqrt3", "2/3*sqrt3", "0");
        let sq = &i * &i;
        assert!(sq.same_form(&t("1/3", "4/3", "4/3")));
        assert!(sq.reduce().same_form(&Triple::ints(0, 1, 1)));

        let z = t("4+sqrt3", "2*sqrt3", "0");
        let prod = &z * &z.conj();
        assert!(prod.same_form(&t("31+8*sqrt3", "6+8*sqrt3", "6+8*sqrt3")));
        assert!(prod.reduce().same_form(&Triple::ints(25, 0, 0)));
    }

    #[test]
    fn basis_table() {
        let (a, b, c) = (
            Triple::ints(1, 0, 0),
            Triple::ints(0, 1, 0),
            Triple::ints(0, 0, 1),
        );
        assert!((&b * &b).same_form(&c));
        assert!((&b * &c).same_form(&a));
        assert!((&c * &c).same_form(&b));
        assert!((&a * &c).same_form(&c));
    }

    #[test]
    fn reduce_examples() {
        assert!(Triple::ints(2, 3, 1)
            .reduce()
            .same_form(&Triple::ints(1, 2, 0)));
        assert!(Triple::ints(1, 4, 4)
            .reduce()
            .same_form(&Triple::ints(0, 3, 3)));
        assert!(Triple::ints(5, 5, 5).reduce().same_form(&Triple::zero()));
    }

    #[test]
    fn equality() {
        assert_eq!(Triple::zero(), Triple::ints(5, 5, 5));
        assert_eq!(Triple::ints(1, 1, 1), Triple::ints(5, 5, 5));
        assert_eq!(Triple::ints(1, 4, 4), Triple::ints(0, 3, 3));
        assert_ne!(Triple::ints(1, 0, 0), Triple::ints(0, 1, 0));
    }

    #[test]
    fn norms() {
        assert_eq!(Triple::ints(3, 0, 5).norm_sq(), 19.into());
        assert_eq!(
            Triple::constant(&s("2+sqrt3")).unwrap().norm_sq(),
            ExactScalar::zero()
        );
        let (a, b) = (s("3/2"), s("sqrt3"));
        let expected = &a * &a + &b * &b - &a * &b;
        assert_eq!(Triple::new(a, b, 0.into()).unwrap().norm_sq(), expected);
        assert_eq!(Triple::ints(5, 4, 4).norm(), 1.0);
        assert!((Triple::ints(3, 0, 5).norm() - 19f64.sqrt()).abs() < 1e-15);
        assert_eq!(Triple::zero().norm(), 0.0);
    }

    #[test]
    fn conjugation() {
        let z = t("4+sqrt3", "2*sqrt3", "0");
        assert!(z.conj().same_form(&t("4+sqrt3", "0", "2*sqrt3")));
        let real_like = Triple::ints(4, 2, 2);
        assert!(real_like.conj().same_form(&real_like));
        assert!(Triple::ints(0, 1, 0)
            .conj()
            .same_form(&Triple::ints(0, 0, 1)));
        assert_eq!(&z * &z.conj(), Triple::ints(25, 0, 0));
    }

    #[test]
    fn complex_conversion() {
        assert!(close(Triple::ints(0, 1, 1).to_complex(), -1.0, 0.0));
        assert!(close(
            t("1/3*sqrt3", "2/3*sqrt3", "0").to_complex(),
            0.0,
            1.0
        ));
        assert!(close(Triple::one().to_complex(), 1.0, 0.0));
    }

    #[test]
    fn complex_to_triple_examples() {
        let m1 = Triple::from_complex(ComplexValue::new(-1.0, 0.0)).unwrap();
        assert!(m1.same_form(&Triple::ints(0, 1, 1)));
        let i = Triple::from_complex(ComplexValue::new(0.0, 1.0)).unwrap();
        assert!(i.same_form(&t("1/3*sqrt3", "2/3*sqrt3", "0")));
        assert!(Triple::from_complex(ComplexValue::new(0.0, 0.0))
            .unwrap()
            .same_form(&Triple::zero()));
        assert!(Triple::from_complex(ComplexValue::new(f64::INFINITY, 0.0)).is_err());
        let w = Triple::from_complex(ComplexValue::new(2.5, -3.25)).unwrap();
        assert!(w.is_reduced());
        assert!(close(w.to_complex(), 2.5, -3.25));
    }

    #[test]
    fn scaling() {
        let scaled = Triple::ints(1, 4, 4)
            .scale(&ExactScalar::ratio(1, 3))
            .unwrap();
        assert!(scaled.same_form(&t("1/3", "4/3", "4/3")));
        assert!(Triple::ints(2, 3, 4)
            .scale(&0.into())
            .unwrap()
            .same_form(&Triple::zero()));
        let x = t("1/2", "sqrt3", "7");
        assert!(x.scale(&1.into()).unwrap().same_form(&x));
        assert!(x.scale(&(-1).into()).is_err());
    }

    #[test]
    fn complex_formatting() {
        assert_eq!(format_complex(ComplexValue::new(-1.0, 0.0)), "-1+0*i");
        assert_eq!(format_complex(ComplexValue::new(0.5, -2.0)), "0.5-2*i");
        assert_eq!(format_real(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_real(SQRT_3 * 100.0), "173.205080757");
        assert_eq!(format_real(-1e-17), "-1.00000000000e-17");
    }
}
