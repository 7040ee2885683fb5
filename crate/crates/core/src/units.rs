//! The sixteen named unit matrices: eight square roots of `+1`
//! (`±1, ±J, ±K, ±L`) and eight square roots of `−1` (`±i, ±j, ±k, ±l`).

use std::fmt;
use std::str::FromStr;

use crate::error::AlgebraError;
use crate::matrix::Mat33;
use crate::scalar::ExactScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnitName {
    One,
    NegOne,
    J,
    NegJ,
    K,
    NegK,
    L,
    NegL,
    I,
    NegI,
    Jj,
    NegJj,
    Kk,
    NegKk,
    Ll,
    NegLl,
}

use UnitName::*;

impl UnitName {
    pub const ALL: [UnitName; 16] = [
        One, NegOne, J, NegJ, K, NegK, L, NegL, I, NegI, Jj, NegJj, Kk, NegKk, Ll, NegLl,
    ];

    /// Square roots of `+1`.
    pub const PLUS_ROOTS: [UnitName; 8] = [One, NegOne, J, NegJ, K, NegK, L, NegL];

    /// Square roots of `−1`.
    pub const IMAGINARY: [UnitName; 8] = [I, NegI, Jj, NegJj, Kk, NegKk, Ll, NegLl];

    /// Conventional label: `1`, `-1`, `J`, `-J`, …, `i`, `-i`, `j`, …, `-l`.
    pub fn label(self) -> &'static str {
        match self {
            One => "1",
            NegOne => "-1",
            J => "J",
            NegJ => "-J",
            K => "K",
            NegK => "-K",
            L => "L",
            NegL => "-L",
            I => "i",
            NegI => "-i",
            Jj => "j",
            NegJj => "-j",
            Kk => "k",
            NegKk => "-k",
            Ll => "l",
            NegLl => "-l",
        }
    }

    /// ASCII name used by the expression language.
    pub fn ident(self) -> &'static str {
        match self {
            One => "ONE",
            NegOne => "NEG1",
            J => "J",
            NegJ => "NJ",
            K => "K",
            NegK => "NK",
            L => "L",
            NegL => "NL",
            I => "I",
            NegI => "NI",
            Jj => "JJ",
            NegJj => "NJJ",
            Kk => "KK",
            NegKk => "NKK",
            Ll => "LL",
            NegLl => "NLL",
        }
    }

    pub fn from_ident(ident: &str) -> Option<UnitName> {
        UnitName::ALL.into_iter().find(|u| u.ident() == ident)
    }

    pub fn from_label(label: &str) -> Option<UnitName> {
        UnitName::ALL.into_iter().find(|u| u.label() == label)
    }

    pub fn negate(self) -> UnitName {
        let idx = self as usize;
        UnitName::ALL[idx ^ 1]
    }

    pub fn is_imaginary(self) -> bool {
        (self as usize) >= 8
    }

    pub fn value(self) -> Mat33 {
        unit_value(self)
    }
}

impl fmt::Display for UnitName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for UnitName {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        UnitName::from_label(s)
            .or_else(|| UnitName::from_ident(s))
            .ok_or_else(|| AlgebraError::MalformedLiteral(s.to_string()))
    }
}

/// Integer pattern (printed row order) and the factor it is scaled by.
fn definition(u: UnitName) -> ([[i64; 3]; 3], ExactScalar) {
    let one = ExactScalar::one();
    let third = ExactScalar::ratio(1, 3);
    let root_third = ExactScalar::root_ratio(1, 3);
    let root_ninth = ExactScalar::root_ratio(1, 9);
    match u {
        One => ([[1, 0, 0], [0, 0, 0], [0, 0, 0]], one),
        NegOne => ([[0, 0, 0], [1, 0, 0], [1, 0, 0]], one),
        J => ([[1, 2, 2], [0, 2, 0], [0, 0, 2]], third),
        NegJ => ([[0, 0, 0], [1, 0, 2], [1, 2, 0]], third),
        K => ([[1, 2, 2], [0, 0, 2], [0, 2, 0]], third),
        NegK => ([[0, 0, 0], [1, 2, 0], [1, 0, 2]], third),
        L => ([[1, 0, 0], [0, 2, 2], [0, 2, 2]], third),
        NegL => ([[0, 2, 2], [1, 0, 0], [1, 0, 0]], third),
        I => ([[1, 0, 0], [2, 0, 0], [0, 0, 0]], root_third),
        NegI => ([[1, 0, 0], [0, 0, 0], [2, 0, 0]], root_third),
        Jj => ([[1, 0, 4], [2, 4, 2], [0, 2, 0]], root_ninth),
        NegJj => ([[1, 4, 0], [0, 0, 2], [2, 2, 4]], root_ninth),
        Kk => ([[1, 4, 0], [2, 2, 4], [0, 0, 2]], root_ninth),
        NegKk => ([[1, 0, 4], [0, 2, 0], [2, 4, 2]], root_ninth),
        Ll => ([[1, 2, 2], [2, 0, 0], [0, 4, 4]], root_ninth),
        NegLl => ([[1, 2, 2], [0, 4, 4], [2, 0, 0]], root_ninth),
    }
}

/// The exact constant matrix of a named unit.
pub fn unit_value(u: UnitName) -> Mat33 {
    let (pattern, factor) = definition(u);
    Mat33::ints(pattern)
        .scale(&factor)
        .expect("positive factor")
}

/// Integer pattern of a unit before scaling, as printed.
pub fn unit_pattern(u: UnitName) -> Mat33 {
    Mat33::ints(definition(u).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for u in UnitName::ALL {
            assert_eq!(UnitName::from_ident(u.ident()), Some(u));
            assert_eq!(u.label().parse::<UnitName>().unwrap(), u);
            assert_eq!(u.negate().negate(), u);
            assert_ne!(u.negate(), u);
        }
        assert_eq!(J.negate(), NegJ);
        assert_eq!(NegLl.negate(), Ll);
        assert!("Q".parse::<UnitName>().is_err());
    }

    #[test]
    fn squares() {
        let i = unit_value(I);
        assert!((&i * &i).reduce().same_form(&unit_value(NegOne)));
        let j = unit_value(J);
        assert!((&j * &j).reduce().same_form(&unit_value(One)));
        assert!(unit_value(One).same_form(&Mat33::one()));
        for u in UnitName::ALL {
            assert!(unit_value(u).is_reduced(), "{u} not reduced");
        }
    }

    #[test]
    fn one_and_minus_one_differ() {
        assert_ne!(unit_value(One), unit_value(NegOne));
    }

    #[test]
    fn exact_entries() {
        let i = unit_value(I);
        assert_eq!(
            i.entry(0, crate::matrix::Column::A),
            &ExactScalar::root_ratio(1, 3)
        );
        assert_eq!(
            i.entry(1, crate::matrix::Column::A),
            &ExactScalar::root_ratio(2, 3)
        );
        assert_eq!(
            unit_value(J).to_string(),
            "m{[1/3,2/3,2/3];[0,2/3,0];[0,0,2/3]}"
        );
    }
}
