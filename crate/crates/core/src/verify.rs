//! Checking an array against the four defining conditions.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{PdaError, Result};
use crate::grid::{Cell, PdaGrid, PdaParams};

/// Which defining condition a failure refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// Cells are empty or a symbol from `1..=s`.
    Domain,
    /// Every column has exactly `Z` empty cells.
    EmptyCount,
    /// No symbol repeats in a row or in a column.
    Repetition,
    /// Equal symbols at `(j1,k1)`, `(j2,k2)` force `(j1,k2)` and `(j2,k1)` empty.
    Crossing,
    /// Derived parameters disagree with the expected ones.
    Parameters,
}

impl Condition {
    pub fn number(self) -> Option<u8> {
        match self {
            Condition::Domain => Some(1),
            Condition::EmptyCount => Some(2),
            Condition::Repetition => Some(3),
            Condition::Crossing => Some(4),
            Condition::Parameters => None,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.number() {
            Some(n) => write!(f, "condition {n}"),
            None => f.write_str("parameters"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionFailure {
    pub condition: Condition,
    /// 1-based `(row, column)` coordinates of the cells involved.
    pub cells: Vec<(usize, usize)>,
    pub detail: String,
}

impl fmt::Display for ConditionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.condition, self.detail)?;
        if !self.cells.is_empty() {
            f.write_str(" at")?;
            for (r, c) in &self.cells {
                write!(f, " ({r},{c})")?;
            }
        }
        Ok(())
    }
}

/// Column empty counts: one value when all columns agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivedZ {
    Uniform(usize),
    Mixed(Vec<usize>),
}

impl DerivedZ {
    pub fn uniform(&self) -> Option<usize> {
        match self {
            DerivedZ::Uniform(z) => Some(*z),
            DerivedZ::Mixed(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub failures: Vec<ConditionFailure>,
    pub f: usize,
    pub k: usize,
    pub z: DerivedZ,
    pub s: usize,
}

impl VerificationReport {
    pub fn failed(&self, condition: Condition) -> bool {
        self.failures.iter().any(|f| f.condition == condition)
    }

    /// The derived parameters when the grid is valid.
    pub fn params(&self) -> Option<PdaParams> {
        let z = self.z.uniform()?;
        self.valid.then_some(PdaParams {
            f: self.f,
            k: self.k,
            z,
            s: self.s,
        })
    }

    pub fn summary(&self) -> String {
        if self.valid {
            return "valid".to_owned();
        }
        let mut out = format!("{} failure(s)", self.failures.len());
        if let Some(first) = self.failures.first() {
            out.push_str(&format!(", first: {first}"));
        }
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "valid: {}", self.valid)?;
        writeln!(f, "F: {}", self.f)?;
        writeln!(f, "K: {}", self.k)?;
        match &self.z {
            DerivedZ::Uniform(z) => writeln!(f, "Z: {z}")?,
            DerivedZ::Mixed(zs) => {
                let zs: Vec<String> = zs.iter().map(usize::to_string).collect();
                writeln!(f, "Z: mixed {}", zs.join(","))?;
            }
        }
        writeln!(f, "s: {}", self.s)?;
        for failure in &self.failures {
            writeln!(f, "failure: {failure}")?;
        }
        Ok(())
    }
}

/// Checks every defining condition and reports all violations found.
///
/// `Z` is taken from column 1 unless `expected` supplies it; columns with a
/// different empty count are condition-2 failures.
pub fn verify(grid: &PdaGrid, expected: Option<&PdaParams>) -> VerificationReport {
    let (f, k) = (grid.rows(), grid.cols());
    let s = grid.symbol_count();
    let mut failures = Vec::new();

    // 1. domain
    for r in 0..f {
        for c in 0..k {
            if let Cell::Symbol(id) = grid.get(r, c) {
                let out_of_range = id == 0 || expected.is_some_and(|p| id as usize > p.s);
                if out_of_range {
                    failures.push(ConditionFailure {
                        condition: Condition::Domain,
                        cells: vec![(r + 1, c + 1)],
                        detail: format!("symbol {id} outside 1..s"),
                    });
                }
            }
        }
    }

    // 2. empty cells per column
    let counts: Vec<usize> = (0..k).map(|c| grid.empty_in_column(c)).collect();
    let z_ref = expected.map_or(counts[0], |p| p.z);
    for (c, &n) in counts.iter().enumerate() {
        if n != z_ref {
            failures.push(ConditionFailure {
                condition: Condition::EmptyCount,
                cells: vec![],
                detail: format!("column {} has {n} empty cells, expected {z_ref}", c + 1),
            });
        }
    }
    let z = if counts.iter().all(|&n| n == counts[0]) {
        DerivedZ::Uniform(counts[0])
    } else {
        DerivedZ::Mixed(counts.clone())
    };

    // occurrences per symbol
    let mut occ: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for r in 0..f {
        for c in 0..k {
            if let Cell::Symbol(id) = grid.get(r, c) {
                occ.entry(id).or_default().push((r, c));
            }
        }
    }

    // 3. repetition within rows and columns
    for (&id, cells) in &occ {
        for (i, &(r1, c1)) in cells.iter().enumerate() {
            for &(r2, c2) in &cells[i + 1..] {
                if r1 == r2 {
                    failures.push(ConditionFailure {
                        condition: Condition::Repetition,
                        cells: vec![(r1 + 1, c1 + 1), (r2 + 1, c2 + 1)],
                        detail: format!("symbol {id} repeated in row {}", r1 + 1),
                    });
                } else if c1 == c2 {
                    failures.push(ConditionFailure {
                        condition: Condition::Repetition,
                        cells: vec![(r1 + 1, c1 + 1), (r2 + 1, c2 + 1)],
                        detail: format!("symbol {id} repeated in column {}", c1 + 1),
                    });
                }
            }
        }
    }

    // 4. crossing cells of equal symbols must be empty
    for (&id, cells) in &occ {
        for (i, &(r1, c1)) in cells.iter().enumerate() {
            for &(r2, c2) in &cells[i + 1..] {
                if r1 == r2 || c1 == c2 {
                    continue;
                }
                let blocked: Vec<(usize, usize)> = [(r1, c2), (r2, c1)]
                    .into_iter()
                    .filter(|&(r, c)| !grid.get(r, c).is_empty())
                    .collect();
                if !blocked.is_empty() {
                    let mut involved = vec![(r1 + 1, c1 + 1), (r2 + 1, c2 + 1)];
                    involved.extend(blocked.iter().map(|&(r, c)| (r + 1, c + 1)));
                    failures.push(ConditionFailure {
                        condition: Condition::Crossing,
                        cells: involved,
                        detail: format!("symbol {id}: crossing cell(s) not empty"),
                    });
                }
            }
        }
    }

    if let Some(p) = expected {
        let mut mismatch = |what: &str, want: usize, got: usize| {
            if want != got {
                failures.push(ConditionFailure {
                    condition: Condition::Parameters,
                    cells: vec![],
                    detail: format!("{what} is {got}, expected {want}"),
                });
            }
        };
        mismatch("F", p.f, f);
        mismatch("K", p.k, k);
        mismatch("s", p.s, s);
    }

    VerificationReport {
        valid: failures.is_empty(),
        failures,
        f,
        k,
        z,
        s,
    }
}

/// `verify` as a guard: the derived parameters, or the report as an error.
pub fn ensure_valid(grid: &PdaGrid) -> Result<PdaParams> {
    let report = verify(grid, None);
    report.params().ok_or_else(|| PdaError::InvalidGrid(Box::new(report)))
}
