//! The array itself: cells, grids and the parameter tuple.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{PdaError, Result};

/// One cell of a placement delivery array.
///
/// An empty cell means the node (column) caches that packet (row) of every
/// file. A symbol cell means the packet is delivered inside coded broadcast
/// number `id`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Empty,
    Symbol(u32),
}

impl Cell {
    pub fn is_empty(self) -> bool {
        matches!(self, Cell::Empty)
    }

    pub fn symbol(self) -> Option<u32> {
        match self {
            Cell::Empty => None,
            Cell::Symbol(id) => Some(id),
        }
    }
}

/// An `F x K` array of cells stored row-major.
///
/// Rows are packets (subpacketization `F`), columns are users (`K`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PdaGrid {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
}

impl PdaGrid {
    /// All-empty grid. This is the `Z = F` array.
    pub fn empty(rows: usize, cols: usize) -> Result<Self> {
        check_dims(rows, cols)?;
        Ok(Self {
            rows,
            cols,
            cells: vec![Cell::Empty; rows * cols],
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cell) -> Result<Self> {
        check_dims(rows, cols)?;
        let mut cells = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                cells.push(f(r, c));
            }
        }
        Ok(Self { rows, cols, cells })
    }

    pub fn from_rows(rows: Vec<Vec<Cell>>) -> Result<Self> {
        let n = rows.len();
        let k = rows.first().map_or(0, Vec::len);
        check_dims(n, k)?;
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != k) {
            return Err(PdaError::InvalidArgument(format!(
                "row {} has {} cells, expected {}",
                i + 1,
                r.len(),
                k
            )));
        }
        Ok(Self {
            rows: n,
            cols: k,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integers, `0` meaning empty.
    pub fn from_ints(rows: &[&[u32]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| if v == 0 { Cell::Empty } else { Cell::Symbol(v) })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Cell {
        self.cells[row * self.cols + col]
    }

    #[inline]
    pub(crate) fn set(&mut self, row: usize, col: usize, cell: Cell) {
        self.cells[row * self.cols + col] = cell;
    }

    pub fn row(&self, row: usize) -> &[Cell] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = Cell> + '_ {
        (0..self.rows).map(move |r| self.get(r, col))
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn empty_in_column(&self, col: usize) -> usize {
        self.column(col).filter(|c| c.is_empty()).count()
    }

    pub fn empty_in_row(&self, row: usize) -> usize {
        self.row(row).iter().filter(|c| c.is_empty()).count()
    }

    /// Distinct symbol ids in ascending order.
    pub fn symbols(&self) -> Vec<u32> {
        self.cells
            .iter()
            .filter_map(|c| c.symbol())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Number of distinct symbols, i.e. the number of coded broadcasts.
    pub fn symbol_count(&self) -> usize {
        self.symbols().len()
    }

    pub fn max_symbol(&self) -> u32 {
        self.cells.iter().filter_map(|c| c.symbol()).max().unwrap_or(0)
    }

    /// True when the symbols present are exactly `1..=s`.
    pub fn is_dense(&self) -> bool {
        self.max_symbol() as usize == self.symbol_count()
    }

    /// Order-preserving renumbering onto `1..=s`.
    pub fn compacted(&self) -> Self {
        let syms = self.symbols();
        let mut out = self.clone();
        for cell in &mut out.cells {
            if let Cell::Symbol(id) = cell {
                let pos = syms.binary_search(id).expect("symbol present");
                *id = pos as u32 + 1;
            }
        }
        out
    }

    /// Adds `offset` to every symbol id.
    pub fn shifted(&self, offset: u32) -> Self {
        let mut out = self.clone();
        for cell in &mut out.cells {
            if let Cell::Symbol(id) = cell {
                *id += offset;
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r)).expect("nonzero dims")
    }

    /// Side-by-side concatenation. Symbols are taken verbatim.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(PdaError::InvalidArgument(format!(
                "cannot place a {}-row array beside a {}-row array",
                other.rows, self.rows
            )));
        }
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                other.get(r, c - self.cols)
            }
        })
    }

    /// Stacks `other` under `self`. Symbols are taken verbatim.
    pub fn vconcat(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(PdaError::InvalidArgument(format!(
                "cannot stack a {}-column array under a {}-column array",
                other.cols, self.cols
            )));
        }
        let mut cells = self.cells.clone();
        cells.extend_from_slice(&other.cells);
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            cells,
        })
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Result<Self> {
        check_dims(rows.len(), self.cols)?;
        Self::from_fn(rows.len(), self.cols, |r, c| self.get(rows[r], c))
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Result<Self> {
        check_dims(self.rows, cols.len())?;
        Self::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    /// Applies a symbol renaming. Symbols missing from the map are kept.
    pub fn rename(&self, mut f: impl FnMut(u32) -> u32) -> Self {
        let mut out = self.clone();
        for cell in &mut out.cells {
            if let Cell::Symbol(id) = cell {
                *id = f(*id);
            }
        }
        out
    }

    /// Empty count of the first column, the conventional `Z` of the array.
    pub fn inferred_z(&self) -> usize {
        self.empty_in_column(0)
    }

    /// Parameters read off the grid, assuming equal column empty counts.
    pub fn params(&self) -> PdaParams {
        PdaParams {
            f: self.rows,
            k: self.cols,
            z: self.inferred_z(),
            s: self.symbol_count(),
        }
    }
}

fn check_dims(rows: usize, cols: usize) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(PdaError::InvalidArgument(format!(
            "grid dimensions must be positive, got {rows}x{cols}"
        )));
    }
    Ok(())
}

impl fmt::Debug for PdaGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PdaGrid {}x{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PdaGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.max_symbol().to_string().len();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                match self.get(r, c) {
                    Cell::Empty => write!(f, "{:>width$}", "-")?,
                    Cell::Symbol(id) => write!(f, "{id:>width$}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `(F, K, Z, s)`: packets per file, users, cached packets per file, broadcasts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PdaParams {
    pub f: usize,
    pub k: usize,
    pub z: usize,
    pub s: usize,
}

impl PdaParams {
    pub fn new(f: usize, k: usize, z: usize, s: usize) -> Result<Self> {
        check_fkz(f, k, z)?;
        if z < f && s < f - z {
            return Err(PdaError::InvalidArgument(format!(
                "s = {s} is below F - Z = {}; every column carries F - Z distinct symbols",
                f - z
            )));
        }
        Ok(Self { f, k, z, s })
    }

    /// Occupied cells of any array with these parameters: `K (F - Z)`.
    pub fn occupied(&self) -> usize {
        self.k * (self.f - self.z)
    }
}

impl fmt::Display for PdaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-PDA({}, {}, {})", self.s, self.f, self.k, self.z)
    }
}

/// Validates `F >= 1`, `K >= 1`, `Z <= F`.
pub fn check_fkz(f: usize, k: usize, z: usize) -> Result<()> {
    if f == 0 || k == 0 {
        return Err(PdaError::InvalidArgument(format!(
            "F and K must be positive, got F = {f}, K = {k}"
        )));
    }
    if z > f {
        return Err(PdaError::InvalidArgument(format!("Z = {z} exceeds F = {f}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_dimensions_rejected() {
        assert!(PdaGrid::empty(0, 3).is_err());
        assert!(PdaGrid::from_rows(vec![]).is_err());
        assert!(PdaGrid::from_ints(&[&[1, 0], &[0]]).is_err());
    }

    #[test]
    fn compaction_preserves_order() {
        let g = PdaGrid::from_ints(&[&[0, 7], &[7, 0], &[3, 9]]).unwrap();
        let c = g.compacted();
        assert_eq!(c, PdaGrid::from_ints(&[&[0, 2], &[2, 0], &[1, 3]]).unwrap());
        assert!(c.is_dense());
        assert!(!g.is_dense());
    }

    #[test]
    fn params_invariants() {
        assert!(PdaParams::new(4, 6, 2, 4).is_ok());
        assert!(PdaParams::new(4, 6, 2, 1).is_err());
        assert!(PdaParams::new(3, 3, 9, 0).is_err());
        assert!(PdaParams::new(3, 3, 3, 0).is_ok());
    }
}
