//! Signed reals written as unsigned 2-vectors `{plus, minus}`.
//!
//! Arithmetic never subtracts, so results are not reduced automatically:
//! `{3,1} × {4,6}` stays `{18,22}` until [`UPair::reduce`] turns it into
//! `{0,4}`. Two pairs are equal when their reduced forms agree.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul};

use crate::error::AlgebraError;
use crate::scalar::ExactScalar;

#[derive(Clone, Debug)]
pub struct UPair {
    plus: ExactScalar,
    minus: ExactScalar,
}

impl UPair {
    pub fn new(plus: ExactScalar, minus: ExactScalar) -> Result<Self, AlgebraError> {
        for c in [&plus, &minus] {
            if c.is_negative() {
                return Err(AlgebraError::NegativeScalar(c.to_string()));
            }
        }
        Ok(UPair { plus, minus })
    }

    /// Integer shorthand; panics on negative input.
    pub fn ints(plus: i64, minus: i64) -> Self {
        UPair::new(plus.into(), minus.into()).expect("nonnegative components")
    }

    pub fn zero() -> Self {
        UPair::ints(0, 0)
    }

    pub fn one() -> Self {
        UPair::ints(1, 0)
    }

    pub fn plus(&self) -> &ExactScalar {
        &self.plus
    }

    pub fn minus(&self) -> &ExactScalar {
        &self.minus
    }

    /// `v ≥ 0 ↦ {v, 0}`, `v < 0 ↦ {0, −v}`.
    pub fn from_signed(v: &ExactScalar) -> Self {
        if v.is_negative() {
            UPair {
                plus: ExactScalar::zero(),
                minus: -v,
            }
        } else {
            UPair {
                plus: v.clone(),
                minus: ExactScalar::zero(),
            }
        }
    }

    pub fn to_signed(&self) -> ExactScalar {
        &self.plus - &self.minus
    }

    pub fn reduce(&self) -> Self {
        let m = (&self.plus).min(&self.minus).clone();
        UPair {
            plus: &self.plus - &m,
            minus: &self.minus - &m,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.plus.is_zero() || self.minus.is_zero()
    }

    /// Swaps the components (negation).
    pub fn swap(&self) -> Self {
        UPair {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    pub fn scale(&self, s: &ExactScalar) -> Result<Self, AlgebraError> {
        if s.is_negative() {
            return Err(AlgebraError::NegativeScalar(s.to_string()));
        }
        Ok(UPair {
            plus: s * &self.plus,
            minus: s * &self.minus,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(UPair::one(), |acc, _| &acc * self)
    }

    /// Raw component equality, without reducing.
    pub fn same_form(&self, other: &Self) -> bool {
        self.plus == other.plus && self.minus == other.minus
    }
}

impl PartialEq for UPair {
    fn eq(&self, other: &Self) -> bool {
        self.reduce().same_form(&other.reduce())
    }
}

impl Eq for UPair {}

/// Hashes the reduced form, consistent with `==`.
impl Hash for UPair {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let r = self.reduce();
        r.plus.hash(state);
        r.minus.hash(state);
    }
}

impl Add for &UPair {
    type Output = UPair;
    fn add(self, rhs: &UPair) -> UPair {
        UPair {
            plus: &self.plus + &rhs.plus,
            minus: &self.minus + &rhs.minus,
        }
    }
}

impl Mul for &UPair {
    type Output = UPair;
    fn mul(self, rhs: &UPair) -> UPair {
        UPair {
            plus: &self.plus * &rhs.plus + &self.minus * &rhs.minus,
            minus: &self.plus * &rhs.minus + &rhs.plus * &self.minus,
        }
    }
}

impl fmt::Display for UPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{{{},{}}}", self.plus, self.minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(t: &str) -> ExactScalar {
        t.parse().unwrap()
    }

    fn p(a: &str, b: &str) -> UPair {
        UPair::new(dec(a), dec(b)).unwrap()
    }

    #[test]
    fn addition() {
        let s = &p("0", "2.1") + &p("2.1", "0");
        assert!(s.same_form(&p("2.1", "2.1")));
        assert_eq!(s, UPair::zero());
        assert!((&UPair::ints(3, 1) + &UPair::ints(4, 6)).same_form(&UPair::ints(7, 7)));
        let x = p("5/2", "sqrt3");
        assert!((&UPair::zero() + &x).same_form(&x));
    }

    #[test]
    fn multiplication_keeps_prehistory() {
        let prod = &UPair::ints(3, 1) * &UPair::ints(4, 6);
        assert!(prod.same_form(&UPair::ints(18, 22)));
        assert!(prod.reduce().same_form(&UPair::ints(0, 4)));
        let x = p("5/2", "sqrt3");
        assert!((&UPair::one() * &x).same_form(&x));
        let absorbed = &UPair::ints(1, 1) * &x;
        assert!(absorbed.same_form(&p("5/2+sqrt3", "5/2+sqrt3")));
    }

    #[test]
    fn reduce_examples() {
        assert!(UPair::ints(18, 22).reduce().same_form(&UPair::ints(0, 4)));
        assert!(p("4", "6.1").reduce().same_form(&p("0", "2.1")));
        assert!(UPair::ints(0, 4).reduce().same_form(&UPair::ints(0, 4)));
        assert!(UPair::ints(0, 4).is_reduced());
    }

    #[test]
    fn signed_conversions() {
        assert!(UPair::from_signed(&dec("-2.1")).same_form(&p("0", "2.1")));
        assert!(UPair::from_signed(&ExactScalar::zero()).same_form(&UPair::zero()));
        assert!(UPair::from_signed(&4.into()).same_form(&UPair::ints(4, 0)));
        assert_eq!(UPair::ints(18, 22).to_signed(), ExactScalar::from_int(-4));
        assert!(UPair::ints(1, 1).to_signed().is_zero());
        assert_eq!(UPair::ints(4, 3).to_signed(), ExactScalar::one());
    }

    #[test]
    fn equality_chains() {
        assert_eq!(p("0", "2.1"), p("4", "6.1"));
        assert_eq!(p("0", "2.1"), p("1.1", "3.2"));
        assert_eq!(UPair::ints(1, 0), UPair::ints(2, 1));
        assert_eq!(UPair::ints(1, 0), UPair::ints(4, 3));
        assert_ne!(UPair::ints(1, 0), UPair::ints(0, 1));
        assert_eq!(UPair::ints(0, 0), UPair::ints(4, 4));
    }

    #[test]
    fn rejects_negative_components() {
        assert!(UPair::new((-1).into(), 0.into()).is_err());
        assert!(UPair::ints(1, 2).scale(&(-1).into()).is_err());
    }
}
