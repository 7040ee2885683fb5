//! Character transform of 3×3 hypercomplex numbers and its exact inverse.
//!
//! Modulo absolute zeros a matrix is determined by its three characters
//! `ψ_0, ψ_1, ψ_2` (see [`Mat33::characters`]). Working with characters as
//! triples (complex numbers in triple form) keeps the inverse exact: the
//! factor `ω` acts on a triple as the cyclic shift `(a, b, c) ↦ (c, a, b)`.

use crate::matrix::Mat33;
use crate::scalar::ExactScalar;
use crate::triple::{ComplexValue, Triple};

/// Tolerance for comparing floating-point characters.
pub const CHARACTER_TOLERANCE: f64 = 1e-9;

/// Multiplies a triple by `ω^k`.
fn omega_pow(t: &Triple, k: usize) -> Triple {
    let [a, b, c] = t.components();
    let shifted = match k % 3 {
        0 => [a, b, c],
        1 => [c, a, b],
        _ => [b, c, a],
    };
    Triple::from_array_unchecked(shifted.map(Clone::clone))
}

/// Exact characters, each as a triple in `a + bω + cω²` form.
pub fn character_triples(m: &Mat33) -> [Triple; 3] {
    let [ca, cb, cc] = m.columns();
    std::array::from_fn(|q| &(ca + &omega_pow(cb, q)) + &omega_pow(cc, 2 * q))
}

/// The reduced matrix whose characters are `chars`.
///
/// `A = (χ0 + χ1 + χ2)/3`, `B = (χ0 + ω²χ1 + ωχ2)/3`, `C = (χ0 + ωχ1 + ω²χ2)/3`.
pub fn from_character_triples(chars: &[Triple; 3]) -> Mat33 {
    let third = ExactScalar::ratio(1, 3);
    let column = |k: usize| {
        let sum =
            &(&chars[0] + &omega_pow(&chars[1], 3 - k)) + &omega_pow(&chars[2], (6 - 2 * k) % 3);
        sum.scale(&third).expect("positive factor")
    };
    Mat33::from_columns(column(0), column(1), column(2)).reduce()
}

/// `+1`, `−1`, `+i` or `−i` as a triple.
pub fn sign_triple(imaginary: bool, negative: bool) -> Triple {
    let root_third = ExactScalar::root_ratio(1, 3);
    match (imaginary, negative) {
        (false, false) => Triple::ints(1, 0, 0),
        (false, true) => Triple::ints(0, 1, 1),
        (true, false) => Triple::ints(1, 2, 0).scale(&root_third).expect("positive"),
        (true, true) => Triple::ints(1, 0, 2).scale(&root_third).expect("positive"),
    }
}

/// The eight matrices whose characters are `(±u, ±u, ±u)`, with `u = i`
/// when `imaginary` and `u = 1` otherwise, ordered by the sign bits of
/// `(ψ_0, ψ_1, ψ_2)`.
pub fn sign_pattern_candidates(imaginary: bool) -> Vec<([bool; 3], Mat33)> {
    (0..8u8)
        .map(|bits| {
            let signs = [bits & 4 != 0, bits & 2 != 0, bits & 1 != 0];
            let chars = signs.map(|neg| sign_triple(imaginary, neg));
            (signs, from_character_triples(&chars))
        })
        .collect()
}

/// Whether two character vectors agree within `tol` per component.
pub fn characters_agree(x: &[ComplexValue; 3], y: &[ComplexValue; 3], tol: f64) -> bool {
    x.iter().zip(y).all(|(a, b)| (a - b).norm() <= tol)
}

/// Equality of `x` and `y` decided by characters alone.
pub fn eq_by_characters(x: &Mat33, y: &Mat33) -> bool {
    characters_agree(&x.characters(), &y.characters(), CHARACTER_TOLERANCE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::{unit_value, UnitName};

    fn approx(z: ComplexValue, re: f64, im: f64) -> bool {
        (z.re - re).abs() < 1e-12 && (z.im - im).abs() < 1e-12
    }

    #[test]
    fn unit_characters() {
        let one = unit_value(UnitName::One).characters();
        assert!(one.iter().all(|&z| approx(z, 1.0, 0.0)));
        let i = unit_value(UnitName::I).characters();
        assert!(i.iter().all(|&z| approx(z, 0.0, 1.0)));
        let j = unit_value(UnitName::J).characters();
        assert!(approx(j[0], 1.0, 0.0) && approx(j[1], -1.0, 0.0) && approx(j[2], 1.0, 0.0));
    }

    #[test]
    fn exact_characters_match_float_characters() {
        for u in UnitName::ALL {
            let m = unit_value(u);
            let exact = character_triples(&m).map(|t| t.to_complex());
            assert!(characters_agree(&exact, &m.characters(), 1e-12), "{u}");
        }
    }

    #[test]
    fn inverse_recovers_matrix() {
        let m = Mat33::ints([[0, 3, 2], [2, 2, 0], [1, 0, 3]]);
        let back = from_character_triples(&character_triples(&m));
        assert_eq!(back, m);
    }

    #[test]
    fn sign_patterns_are_the_named_units() {
        for imaginary in [false, true] {
            let family = if imaginary {
                UnitName::IMAGINARY
            } else {
                UnitName::PLUS_ROOTS
            };
            for (_, cand) in sign_pattern_candidates(imaginary) {
                let hits = family.iter().filter(|u| unit_value(**u) == cand).count();
                assert_eq!(hits, 1, "{cand}");
            }
        }
    }
}
