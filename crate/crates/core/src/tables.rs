//! The three 8×8 multiplication tables of the named units, transcribed as
//! given, and a checker that recomputes every cell exactly.

use std::fmt;
use std::str::FromStr;

use crate::error::AlgebraError;
use crate::matrix::Mat33;
use crate::par::Execution;
use crate::units::{unit_value, UnitName};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitTable {
    /// Products of the square roots of `+1`.
    PlusOne,
    /// Products of the imaginary units.
    Imaginary,
    /// Square roots of `+1` (rows) times imaginary units (columns).
    Mixed,
}

impl UnitTable {
    pub const ALL: [UnitTable; 3] = [UnitTable::PlusOne, UnitTable::Imaginary, UnitTable::Mixed];

    pub fn id(self) -> &'static str {
        match self {
            UnitTable::PlusOne => "plus-one",
            UnitTable::Imaginary => "imaginary",
            UnitTable::Mixed => "mixed",
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            UnitTable::PlusOne => "square roots of +1",
            UnitTable::Imaginary => "imaginary units",
            UnitTable::Mixed => "square roots of +1 times imaginary units",
        }
    }

    pub fn row_units(self) -> [UnitName; 8] {
        match self {
            UnitTable::PlusOne | UnitTable::Mixed => UnitName::PLUS_ROOTS,
            UnitTable::Imaginary => UnitName::IMAGINARY,
        }
    }

    pub fn col_units(self) -> [UnitName; 8] {
        match self {
            UnitTable::PlusOne => UnitName::PLUS_ROOTS,
            UnitTable::Imaginary | UnitTable::Mixed => UnitName::IMAGINARY,
        }
    }

    fn grid(self) -> &'static [[&'static str; 8]; 8] {
        match self {
            UnitTable::PlusOne => &PLUS_ONE_GRID,
            UnitTable::Imaginary => &IMAGINARY_GRID,
            UnitTable::Mixed => &MIXED_GRID,
        }
    }

    /// Expected entry for `(row, col)`, both in `0..8`.
    pub fn expected(self, row: usize, col: usize) -> UnitName {
        UnitName::from_label(self.grid()[row][col]).expect("table labels are valid")
    }
}

impl FromStr for UnitTable {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        UnitTable::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| AlgebraError::MalformedLiteral(s.to_string()))
    }
}

const PLUS_ONE_GRID: [[&str; 8]; 8] = [
    ["1", "-1", "J", "-J", "K", "-K", "L", "-L"],
    ["-1", "1", "-J", "J", "-K", "K", "-L", "L"],
    ["J", "-J", "1", "-1", "-L", "L", "-K", "K"],
    ["-J", "J", "-1", "1", "L", "-L", "K", "-K"],
    ["K", "-K", "-L", "L", "1", "-1", "-J", "J"],
    ["-K", "K", "L", "-L", "-1", "1", "J", "-J"],
    ["L", "-L", "-K", "K", "-J", "J", "1", "-1"],
    ["-L", "L", "K", "-K", "J", "-J", "-1", "1"],
];

const IMAGINARY_GRID: [[&str; 8]; 8] = [
    ["-1", "1", "-J", "J", "-K", "K", "-L", "L"],
    ["1", "-1", "J", "-J", "K", "-K", "L", "-L"],
    ["-J", "J", "-1", "1", "L", "-L", "K", "-K"],
    ["J", "-J", "1", "-1", "-L", "L", "-K", "K"],
    ["-K", "K", "L", "-L", "-1", "1", "J", "-J"],
    ["K", "-K", "-L", "L", "1", "-1", "-J", "J"],
    ["-L", "L", "K", "-K", "J", "-J", "-1", "1"],
    ["L", "-L", "-K", "K", "-J", "J", "1", "-1"],
];

// Cells (1, k) and (-J, k) are printed in upper case in the source; a +1
// root times an imaginary unit is always imaginary, so they read k and l.
const MIXED_GRID: [[&str; 8]; 8] = [
    ["i", "-i", "j", "-j", "k", "-k", "l", "-l"],
    ["-i", "i", "-j", "j", "-k", "k", "-l", "l"],
    ["j", "-j", "i", "-i", "-l", "l", "-k", "k"],
    ["-j", "j", "-i", "i", "l", "-l", "k", "-k"],
    ["k", "-k", "-l", "l", "i", "-i", "-j", "j"],
    ["-k", "k", "l", "-l", "-i", "i", "j", "-j"],
    ["l", "-l", "-k", "k", "-j", "j", "i", "-i"],
    ["-l", "l", "k", "-k", "j", "-j", "-i", "i"],
];

#[derive(Clone, Debug)]
pub struct CellResult {
    pub row: UnitName,
    pub col: UnitName,
    pub expected: UnitName,
    /// Reduced product of the row and column units.
    pub computed: Mat33,
    /// The named unit the product equals, if any.
    pub computed_unit: Option<UnitName>,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct TableReport {
    pub table: UnitTable,
    pub cells: Vec<CellResult>,
}

impl TableReport {
    pub fn passed(&self) -> usize {
        self.cells.iter().filter(|c| c.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.cells.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CellResult> {
        self.cells.iter().filter(|c| !c.pass)
    }

    /// One line per cell: `table row col expected computed PASS|FAIL`.
    pub fn machine_records(&self) -> Vec<String> {
        self.cells
            .iter()
            .map(|c| {
                let computed = match c.computed_unit {
                    Some(u) => u.label().to_string(),
                    None => c.computed.to_string(),
                };
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    self.table.id(),
                    c.row,
                    c.col,
                    c.expected,
                    computed,
                    if c.pass { "PASS" } else { "FAIL" }
                )
            })
            .collect()
    }
}

/// Grid of computed entries; failing cells are marked with `!`.
impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} ({}/{} cells)",
            self.table.title(),
            self.passed(),
            self.cells.len()
        )?;
        write!(f, "{:>4} |", "x")?;
        for col in self.table.col_units() {
            write!(f, "{:>5}", col.label())?;
        }
        writeln!(f)?;
        writeln!(f, "{}", "-".repeat(6 + 5 * 8))?;
        for row in self.cells.chunks(8) {
            write!(f, "{:>4} |", row[0].row.label())?;
            for cell in row {
                let shown = cell.computed_unit.map_or("?", UnitName::label);
                let mark = if cell.pass { " " } else { "!" };
                write!(f, "{:>4}{}", shown, mark)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Checks a table against `values`, the matrix assigned to each unit name.
pub fn verify_table_with<V>(table: UnitTable, values: V, exec: Execution) -> TableReport
where
    V: Fn(UnitName) -> Mat33 + Sync + Send,
{
    let cells: Vec<(usize, usize)> = (0..8).flat_map(|r| (0..8).map(move |c| (r, c))).collect();
    let rows = table.row_units();
    let cols = table.col_units();
    let cells = exec.map_slice(&cells, |&(r, c)| {
        let (row, col) = (rows[r], cols[c]);
        let expected = table.expected(r, c);
        let computed = (&values(row) * &values(col)).reduce();
        let pass = computed.same_form(&values(expected).reduce());
        let computed_unit = UnitName::ALL
            .into_iter()
            .find(|&u| values(u).reduce().same_form(&computed));
        CellResult {
            row,
            col,
            expected,
            computed,
            computed_unit,
            pass,
        }
    });
    TableReport { table, cells }
}

pub fn verify_unit_table(table: UnitTable) -> TableReport {
    verify_table_with(table, unit_value, Execution::default())
}

pub fn verify_all_tables(exec: Execution) -> Vec<TableReport> {
    UnitTable::ALL
        .into_iter()
        .map(|t| verify_table_with(t, unit_value, exec))
        .collect()
}
