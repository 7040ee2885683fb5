//! Square-root searches over finite candidate sets.

use crate::character::sign_pattern_candidates;
use crate::matrix::Mat33;
use crate::units::{unit_value, UnitName};

/// The eight listed square roots of `9`.
pub fn listed_roots_of_nine() -> [Mat33; 8] {
    [
        [[3, 0, 0], [0, 0, 0], [0, 0, 0]],
        [[0, 0, 0], [3, 0, 0], [3, 0, 0]],
        [[1, 2, 2], [0, 2, 0], [0, 0, 2]],
        [[0, 0, 0], [1, 0, 2], [1, 2, 0]],
        [[1, 2, 2], [0, 0, 2], [0, 2, 0]],
        [[0, 0, 0], [1, 2, 0], [1, 0, 2]],
        [[1, 0, 0], [0, 2, 2], [0, 2, 2]],
        [[0, 2, 2], [1, 0, 0], [1, 0, 0]],
    ]
    .map(Mat33::ints)
}

/// `9` as a matrix.
pub fn nine() -> Mat33 {
    Mat33::ints([[9, 0, 0], [0, 0, 0], [0, 0, 0]])
}

/// The eight listed integer matrices squaring to `−27`.
pub fn listed_roots_of_minus_27() -> [Mat33; 8] {
    [
        [[3, 0, 0], [6, 0, 0], [0, 0, 0]],
        [[3, 0, 0], [0, 0, 0], [6, 0, 0]],
        [[1, 0, 4], [2, 4, 2], [0, 2, 0]],
        [[1, 4, 0], [0, 0, 2], [2, 2, 4]],
        [[1, 4, 0], [2, 2, 4], [0, 0, 2]],
        [[1, 0, 4], [0, 2, 0], [2, 4, 2]],
        [[1, 2, 2], [2, 0, 0], [0, 4, 4]],
        [[1, 2, 2], [0, 4, 4], [2, 0, 0]],
    ]
    .map(Mat33::ints)
}

/// `−27` as a matrix.
pub fn minus_27() -> Mat33 {
    Mat33::ints([[0, 0, 0], [27, 0, 0], [27, 0, 0]])
}

/// Indices of the candidates whose square equals `target`.
pub fn find_square_roots(target: &Mat33, candidates: &[Mat33]) -> Vec<usize> {
    candidates
        .iter()
        .enumerate()
        .filter(|(_, c)| &c.pow(2) == target)
        .map(|(i, _)| i)
        .collect()
}

/// Named units whose square equals `target`.
pub fn unit_square_roots(target: &Mat33) -> Vec<UnitName> {
    let values: Vec<Mat33> = UnitName::ALL.iter().map(|&u| unit_value(u)).collect();
    find_square_roots(target, &values)
        .into_iter()
        .map(|i| UnitName::ALL[i])
        .collect()
}

#[derive(Clone, Debug)]
pub struct RootCheck {
    pub label: String,
    pub root: Mat33,
    pub square: Mat33,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct RootFamily {
    pub title: String,
    pub target: Mat33,
    pub checks: Vec<RootCheck>,
    /// Passes when every check succeeds.
    pub ok: bool,
}

fn listed_family(title: &str, target: Mat33, roots: [Mat33; 8]) -> RootFamily {
    let hits = find_square_roots(&target, &roots);
    let checks: Vec<RootCheck> = roots
        .into_iter()
        .enumerate()
        .map(|(i, root)| RootCheck {
            label: format!("#{}", i + 1),
            square: root.pow(2).reduce(),
            ok: hits.contains(&i),
            root,
        })
        .collect();
    let ok = checks.iter().all(|c| c.ok);
    RootFamily {
        title: title.to_string(),
        target,
        checks,
        ok,
    }
}

/// Square roots of `±1` among the sixteen named units. Passes when the
/// roots are exactly the expected family.
fn unit_family(title: &str, target: UnitName, expected: [UnitName; 8]) -> RootFamily {
    let target = unit_value(target);
    let found = unit_square_roots(&target);
    let checks = UnitName::ALL
        .into_iter()
        .map(|u| {
            let root = unit_value(u);
            RootCheck {
                label: u.label().to_string(),
                square: root.pow(2).reduce(),
                ok: found.contains(&u) == expected.contains(&u),
                root,
            }
        })
        .collect::<Vec<_>>();
    let ok = found == expected.to_vec() && checks.iter().all(|c| c.ok);
    RootFamily {
        title: title.to_string(),
        target,
        checks,
        ok,
    }
}

/// Sign-pattern candidates rebuilt from characters; all eight must square
/// to `target`.
fn pattern_family(title: &str, target: UnitName, imaginary: bool) -> RootFamily {
    let target = unit_value(target);
    let checks = sign_pattern_candidates(imaginary)
        .into_iter()
        .map(|(signs, root)| {
            let unit = if imaginary { "i" } else { "1" };
            let label = signs
                .iter()
                .map(|&neg| format!("{}{unit}", if neg { "-" } else { "+" }))
                .collect::<Vec<_>>()
                .join(",");
            let square = root.pow(2).reduce();
            RootCheck {
                label: format!("({label})"),
                ok: square == target,
                square,
                root,
            }
        })
        .collect::<Vec<_>>();
    let ok = checks.iter().all(|c| c.ok);
    RootFamily {
        title: title.to_string(),
        target,
        checks,
        ok,
    }
}

/// Every square-root family: both listed families, the unit families,
/// and the character sign-pattern families.
pub fn all_root_families() -> Vec<RootFamily> {
    vec![
        listed_family("square roots of 9", nine(), listed_roots_of_nine()),
        listed_family(
            "square roots of -27",
            minus_27(),
            listed_roots_of_minus_27(),
        ),
        unit_family(
            "named units squaring to 1",
            UnitName::One,
            UnitName::PLUS_ROOTS,
        ),
        unit_family(
            "named units squaring to -1",
            UnitName::NegOne,
            UnitName::IMAGINARY,
        ),
        pattern_family("character patterns (+-1,+-1,+-1)", UnitName::One, false),
        pattern_family("character patterns (+-i,+-i,+-i)", UnitName::NegOne, true),
    ]
}
