//! Seeded random generators for property sweeps.
//!
//! Every case gets its own ChaCha stream keyed by `(seed, stream, index)`, so
//! a sweep produces identical cases whether it runs in parallel or not.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{Column, Mat33, RowSelector};
use crate::pair::UPair;
use crate::scalar::ExactScalar;
use crate::triple::{ComplexValue, Triple};

/// Largest numerator and denominator magnitude drawn.
pub const MAX_TERM: i64 = 99;

/// Generator handed to each property case.
pub type CaseRng = ChaCha8Rng;

pub fn case_rng(seed: u64, stream: u64, index: u64) -> CaseRng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&stream.to_le_bytes());
    key[16..24].copy_from_slice(&index.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// `n/d` with `n` in `[-99, 99]` and `d` in `[1, 99]`.
pub fn signed_rational<R: Rng>(rng: &mut R) -> BigRational {
    let n = rng.random_range(-MAX_TERM..=MAX_TERM);
    let d = rng.random_range(1..=MAX_TERM);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn nonneg_rational<R: Rng>(rng: &mut R) -> BigRational {
    let n = rng.random_range(0..=MAX_TERM);
    let d = rng.random_range(1..=MAX_TERM);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Any element `q + r√3` with `q`, `r` drawn by [`signed_rational`]; `r` is
/// zero half of the time.
pub fn signed_scalar<R: Rng>(rng: &mut R) -> ExactScalar {
    let q = signed_rational(rng);
    let r = if rng.random_bool(0.5) {
        signed_rational(rng)
    } else {
        BigRational::default()
    };
    ExactScalar::new(q, r)
}

/// A nonnegative `q + r√3` with `q, r ≥ 0`; `r` is nonzero a quarter of the time.
pub fn nonneg_scalar<R: Rng>(rng: &mut R) -> ExactScalar {
    let q = nonneg_rational(rng);
    let r = if rng.random_bool(0.25) {
        nonneg_rational(rng)
    } else {
        BigRational::default()
    };
    ExactScalar::new(q, r)
}

pub fn pair<R: Rng>(rng: &mut R) -> UPair {
    UPair::new(nonneg_scalar(rng), nonneg_scalar(rng)).expect("nonnegative")
}

pub fn triple<R: Rng>(rng: &mut R) -> Triple {
    Triple::new(nonneg_scalar(rng), nonneg_scalar(rng), nonneg_scalar(rng)).expect("nonnegative")
}

pub fn matrix<R: Rng>(rng: &mut R) -> Mat33 {
    Mat33::from_columns(triple(rng), triple(rng), triple(rng))
}

pub fn absolute_zero<R: Rng>(rng: &mut R) -> Mat33 {
    Mat33::absolute_zero(
        &nonneg_scalar(rng),
        &nonneg_scalar(rng),
        &nonneg_scalar(rng),
    )
    .expect("nonnegative")
}

pub fn selector<R: Rng>(rng: &mut R) -> RowSelector {
    RowSelector(std::array::from_fn(|_| Column::ALL[rng.random_range(0..3)]))
}

/// Complex value with both parts uniform in `[-bound, bound]`.
pub fn complex<R: Rng>(rng: &mut R, bound: f64) -> ComplexValue {
    ComplexValue::new(
        rng.random_range(-bound..=bound),
        rng.random_range(-bound..=bound),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let a = matrix(&mut case_rng(42, 3, 17));
        let b = matrix(&mut case_rng(42, 3, 17));
        assert!(a.same_form(&b));
        let c = matrix(&mut case_rng(42, 3, 18));
        assert!(!a.same_form(&c));
    }

    #[test]
    fn generated_values_are_nonnegative() {
        let mut rng = case_rng(1, 0, 0);
        for _ in 0..200 {
            assert!(nonneg_scalar(&mut rng).is_nonnegative());
        }
    }
}
