//! 3×3 hypercomplex numbers: three [`Triple`] columns `A`, `B`, `C`.
//!
//! The columns multiply by the same cyclic rule as the components of a
//! triple, with triple multiplication for the column products:
//!
//! ```text
//! A₃ = A₁A₂ + B₁C₂ + B₂C₁
//! B₃ = A₁B₂ + A₂B₁ + C₁C₂
//! C₃ = A₁C₂ + A₂C₁ + B₁B₂
//! ```
//!
//! Equality is modulo the absolute zeros (matrices with constant columns),
//! so each column is reduced on its own.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul};

use crate::character::character_triples;
use crate::error::AlgebraError;
use crate::scalar::ExactScalar;
use crate::triple::{ComplexValue, Triple};

#[derive(Clone, Debug)]
pub struct Mat33 {
    cols: [Triple; 3],
}

/// Column label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Column {
    A,
    B,
    C,
}

impl Column {
    pub const ALL: [Column; 3] = [Column::A, Column::B, Column::C];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl Mat33 {
    pub fn from_columns(a: Triple, b: Triple, c: Triple) -> Self {
        Mat33 { cols: [a, b, c] }
    }

    /// Builds from rows `a`, `b`, `c` top to bottom, each listing columns `A`, `B`, `C`.
    pub fn from_rows(rows: [[ExactScalar; 3]; 3]) -> Result<Self, AlgebraError> {
        if let Some(neg) = rows.iter().flatten().find(|x| x.is_negative()) {
            return Err(AlgebraError::NegativeScalar(neg.to_string()));
        }
        let [ra, rb, rc] = rows;
        let mut cols = ra
            .into_iter()
            .zip(rb)
            .zip(rc)
            .map(|((a, b), c)| Triple::from_array_unchecked([a, b, c]));
        let (a, b, c) = (
            cols.next().unwrap(),
            cols.next().unwrap(),
            cols.next().unwrap(),
        );
        Ok(Mat33::from_columns(a, b, c))
    }

    /// Integer shorthand in printed row order; panics on negative input.
    pub fn ints(rows: [[i64; 3]; 3]) -> Self {
        Mat33::from_rows(rows.map(|r| r.map(ExactScalar::from_int))).expect("nonnegative entries")
    }

    pub fn zero() -> Self {
        Mat33::from_columns(Triple::zero(), Triple::zero(), Triple::zero())
    }

    pub fn one() -> Self {
        Mat33::from_columns(Triple::one(), Triple::zero(), Triple::zero())
    }

    pub fn columns(&self) -> &[Triple; 3] {
        &self.cols
    }

    pub fn column(&self, col: Column) -> &Triple {
        &self.cols[col.index()]
    }

    /// Entry at `row` (0 = a, 1 = b, 2 = c) and `col`.
    pub fn entry(&self, row: usize, col: Column) -> &ExactScalar {
        &self.cols[col.index()].components()[row]
    }

    pub fn rows(&self) -> [[ExactScalar; 3]; 3] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.cols[c].components()[r].clone()))
    }

    /// Reduces every column by its own minimum.
    pub fn reduce(&self) -> Self {
        Mat33 {
            cols: self.cols.clone().map(|c| c.reduce()),
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.cols.iter().all(Triple::is_reduced)
    }

    pub fn same_form(&self, other: &Self) -> bool {
        self.cols
            .iter()
            .zip(&other.cols)
            .all(|(x, y)| x.same_form(y))
    }

    /// `(a_A + a_B + a_C, b_A + b_B + b_C, c_A + c_B + c_C)`.
    pub fn row_sums(&self) -> Triple {
        let [a, b, c] = &self.cols;
        &(a + b) + c
    }

    pub fn norm_sq(&self) -> ExactScalar {
        self.row_sums().norm_sq()
    }

    pub fn norm(&self) -> f64 {
        self.row_sums().norm()
    }

    pub fn scale(&self, s: &ExactScalar) -> Result<Self, AlgebraError> {
        let [a, b, c] = &self.cols;
        Ok(Mat33::from_columns(a.scale(s)?, b.scale(s)?, c.scale(s)?))
    }

    /// `n`-fold product; `pow(0)` is the unit `1`.
    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Mat33::one(), |acc, _| &acc * self)
    }

    /// Characters `ψ_q = φ(A) + ω^q·φ(B) + ω^{2q}·φ(C)` for `q = 0, 1, 2`,
    /// where `φ` is [`Triple::to_complex`].
    ///
    /// Each `ψ_q` is a ring homomorphism that vanishes on absolute zeros, and
    /// together they separate the equality classes.
    /// They are summed exactly (see [`character_triples`]) and rounded once.
    pub fn characters(&self) -> [ComplexValue; 3] {
        character_triples(self).each_ref().map(Triple::to_complex)
    }

    /// The constant-column matrix with column `A` all `xi`, `B` all `zeta`, `C` all `eta`.
    pub fn absolute_zero(
        xi: &ExactScalar,
        zeta: &ExactScalar,
        eta: &ExactScalar,
    ) -> Result<Self, AlgebraError> {
        Ok(Mat33::from_columns(
            Triple::constant(xi)?,
            Triple::constant(zeta)?,
            Triple::constant(eta)?,
        ))
    }

    /// Entry `xi` at `(row, sel(row))` for every row, zero elsewhere.
    pub fn rotation_zero(sel: RowSelector, xi: &ExactScalar) -> Result<Self, AlgebraError> {
        if xi.signum() <= 0 {
            return Err(AlgebraError::NegativeScalar(xi.to_string()));
        }
        let rows = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                if sel.0[r].index() == c {
                    xi.clone()
                } else {
                    ExactScalar::zero()
                }
            })
        });
        Mat33::from_rows(rows)
    }
}

/// Chooses one column for each row `a`, `b`, `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RowSelector(pub [Column; 3]);

impl RowSelector {
    pub const IDENTITY: RowSelector = RowSelector([Column::A, Column::B, Column::C]);

    /// All 27 selectors, in lexicographic order of `(sel(a), sel(b), sel(c))`.
    pub fn all() -> impl Iterator<Item = RowSelector> {
        (0..27).map(|n| {
            let pick = |k: usize| Column::ALL[(n / 3usize.pow(2 - k as u32)) % 3];
            RowSelector([pick(0), pick(1), pick(2)])
        })
    }
}

impl PartialEq for Mat33 {
    fn eq(&self, other: &Self) -> bool {
        self.reduce().same_form(&other.reduce())
    }
}

impl Eq for Mat33 {}

/// Hashes the reduced form, consistent with `==`.
impl Hash for Mat33 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let r = self.reduce();
        r.cols.hash(state);
    }
}

impl Add for &Mat33 {
    type Output = Mat33;
    fn add(self, rhs: &Mat33) -> Mat33 {
        let [a1, b1, c1] = &self.cols;
        let [a2, b2, c2] = &rhs.cols;
        Mat33::from_columns(a1 + a2, b1 + b2, c1 + c2)
    }
}

impl Mul for &Mat33 {
    type Output = Mat33;
    fn mul(self, rhs: &Mat33) -> Mat33 {
        let [a1, b1, c1] = &self.cols;
        let [a2, b2, c2] = &rhs.cols;
        let col_a = &(&(a1 * a2) + &(b1 * c2)) + &(b2 * c1);
        let col_b = &(&(a1 * b2) + &(a2 * b1)) + &(c1 * c2);
        let col_c = &(&(a1 * c2) + &(a2 * c1)) + &(b1 * b2);
        Mat33::from_columns(col_a, col_b, col_c)
    }
}

impl fmt::Display for Mat33 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("m{")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "[{},{},{}]", row[0], row[1], row[2])?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: [[i64; 3]; 3]) -> Mat33 {
        Mat33::ints(rows)
    }

    fn first() -> Mat33 {
        m([[0, 3, 2], [2, 2, 0], [1, 0, 3]])
    }

    fn second() -> Mat33 {
        m([[0, 3, 1], [1, 0, 0], [3, 2, 1]])
    }

    #[test]
    fn layout_is_columns_of_triples() {
        let x = first();
        assert!(x.column(Column::A).same_form(&Triple::ints(0, 2, 1)));
        assert!(x.column(Column::B).same_form(&Triple::ints(3, 2, 0)));
        assert!(x.column(Column::C).same_form(&Triple::ints(2, 0, 3)));
        assert_eq!(x.to_string(), "m{[0,3,2];[2,2,0];[1,0,3]}");
    }

    #[test]
    fn worked_product() {
        let p = &first() * &second();
        assert!(p.same_form(&m([[18, 12, 18], [11, 14, 20], [18, 19, 13]])));
        assert!(p.reduce().same_form(&m([[7, 0, 5], [0, 2, 7], [7, 7, 0]])));
    }

    #[test]
    fn products_with_rotation_zeros() {
        let p = &first() * &m([[0, 0, 1], [0, 1, 0], [1, 0, 0]]);
        assert!(p.same_form(&m([[8, 5, 0], [5, 0, 8], [0, 8, 5]])));
        assert_eq!(p.norm_sq(), ExactScalar::zero());
        // The next two are given in reduced form.
        let p = &second() * &m([[0, 0, 1], [1, 0, 0], [0, 1, 0]]);
        assert!(p.same_form(&m([[6, 4, 1], [1, 6, 4], [4, 1, 6]])));
        assert!(p.reduce().same_form(&m([[5, 3, 0], [0, 5, 3], [3, 0, 5]])));
        let p = &m([[7, 0, 5], [0, 2, 7], [7, 7, 0]]) * &m([[1, 0, 0], [0, 1, 0], [0, 1, 0]]);
        assert!(p
            .reduce()
            .same_form(&m([[9, 0, 12], [0, 9, 12], [14, 7, 0]])));
        assert_eq!(p.norm_sq(), ExactScalar::zero());
    }

    #[test]
    fn identity_product() {
        let x = first();
        assert!((&Mat33::one() * &x).same_form(&x));
        assert!(x.pow(0).same_form(&Mat33::one()));
    }

    #[test]
    fn reduce_and_eq() {
        let z = Mat33::absolute_zero(&1.into(), &2.into(), &3.into()).unwrap();
        assert!(z.same_form(&m([[1, 2, 3], [1, 2, 3], [1, 2, 3]])));
        assert!(z.reduce().same_form(&Mat33::zero()));
        assert_eq!(z, Mat33::zero());
        let r = m([[7, 0, 5], [0, 2, 7], [7, 7, 0]]);
        assert!(r.reduce().same_form(&r));
        assert_eq!(m([[18, 12, 18], [11, 14, 20], [18, 19, 13]]), r);
        assert!(Mat33::absolute_zero(&(-1).into(), &0.into(), &0.into()).is_err());
    }

    #[test]
    fn row_sums_and_norms() {
        assert!(first().row_sums().same_form(&Triple::ints(5, 4, 4)));
        let rs = second().row_sums();
        assert!(rs.same_form(&Triple::ints(4, 1, 6)));
        assert!(rs.reduce().same_form(&Triple::ints(3, 0, 5)));
        assert_eq!(first().norm_sq(), 1.into());
        assert_eq!(second().norm_sq(), 19.into());
        assert_eq!(m([[7, 0, 5], [0, 2, 7], [7, 7, 0]]).norm_sq(), 19.into());
        assert!((second().norm() - 19f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn rotation_zero_shapes() {
        let xi = ExactScalar::from_int(4);
        let diag = Mat33::rotation_zero(RowSelector::IDENTITY, &xi).unwrap();
        assert!(diag.same_form(&m([[4, 0, 0], [0, 4, 0], [0, 0, 4]])));
        let sel = RowSelector([Column::C, Column::A, Column::B]);
        let rot = Mat33::rotation_zero(sel, &xi).unwrap();
        assert!(rot.same_form(&m([[0, 0, 4], [4, 0, 0], [0, 4, 0]])));
        let sel = RowSelector([Column::A, Column::B, Column::B]);
        let rot = Mat33::rotation_zero(sel, &1.into()).unwrap();
        assert!(rot.same_form(&m([[1, 0, 0], [0, 1, 0], [0, 1, 0]])));
        assert!(rot.row_sums().same_form(&Triple::ints(1, 1, 1)));
        assert!(Mat33::rotation_zero(sel, &0.into()).is_err());
    }

    #[test]
    fn twenty_seven_distinct_selectors() {
        let all: Vec<_> = RowSelector::all().collect();
        assert_eq!(all.len(), 27);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 27);
        assert_eq!(all[0], RowSelector([Column::A; 3]));
    }

    #[test]
    fn hash_agrees_with_eq() {
        use std::collections::HashSet;
        let z = Mat33::absolute_zero(&2.into(), &0.into(), &5.into()).unwrap();
        let set: HashSet<Mat33> = [first(), &first() + &z].into_iter().collect();
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn absolute_zero_absorbs() {
        let z = Mat33::absolute_zero(&1.into(), &1.into(), &1.into()).unwrap();
        let p = &z * &first();
        assert!(p.columns().iter().all(Triple::is_constant));
    }

    #[test]
    fn powers() {
        let three = m([[3, 0, 0], [0, 0, 0], [0, 0, 0]]);
        assert!(three
            .pow(2)
            .same_form(&m([[9, 0, 0], [0, 0, 0], [0, 0, 0]])));
        assert_eq!(m([[0, 0, 0], [3, 0, 0], [3, 0, 0]]).pow(2), three.pow(2));
        assert_eq!(
            m([[3, 0, 0], [6, 0, 0], [0, 0, 0]]).pow(2),
            m([[0, 0, 0], [27, 0, 0], [27, 0, 0]])
        );
    }

    #[test]
    fn scale_rejects_negative() {
        assert!(first().scale(&(-1).into()).is_err());
        assert!(first()
            .scale(&2.into())
            .unwrap()
            .same_form(&m([[0, 6, 4], [4, 4, 0], [2, 0, 6]])));
    }
}
