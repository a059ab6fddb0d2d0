//! Regular and canonical forms.
//!
//! Exchanging rows, exchanging columns and renaming symbols all map a PDA to
//! a PDA. `canonicalize` uses those moves to bring a grid into a fixed normal
//! form:
//!
//! * column 1 is `[1, 2, .., F-Z, -, .., -]` (the regular form);
//! * rows keep their relative order inside the occupied and empty blocks of
//!   column 1;
//! * columns 2..K are sorted by a name-independent signature: per row, either
//!   empty or the sorted row set of the symbol found there;
//! * symbols outside column 1 are numbered `F-Z+1, ..` by first occurrence in
//!   row-major order.
//!
//! Every step only reads information that the step itself leaves unchanged,
//! which makes the transformation idempotent.

use std::collections::HashMap;

use crate::error::Result;
use crate::grid::{Cell, PdaGrid};
use crate::verify::ensure_valid;

pub fn canonicalize(grid: &PdaGrid) -> Result<PdaGrid> {
    ensure_valid(grid)?;
    let (f, k) = (grid.rows(), grid.cols());

    let mut row_order: Vec<usize> = (0..f).filter(|&r| !grid.get(r, 0).is_empty()).collect();
    row_order.extend((0..f).filter(|&r| grid.get(r, 0).is_empty()));
    let rowed = grid.select_rows(&row_order)?;

    // Row set of every symbol, in the new row order.
    let mut row_sets: HashMap<u32, Vec<usize>> = HashMap::new();
    for r in 0..f {
        for c in 0..k {
            if let Cell::Symbol(id) = rowed.get(r, c) {
                row_sets.entry(id).or_default().push(r);
            }
        }
    }
    let signature = |c: usize| -> Vec<(bool, Vec<usize>)> {
        (0..f)
            .map(|r| match rowed.get(r, c) {
                Cell::Empty => (false, Vec::new()),
                Cell::Symbol(id) => (true, row_sets[&id].clone()),
            })
            .collect()
    };
    let mut rest: Vec<_> = (1..k).map(|c| (signature(c), c)).collect();
    rest.sort_by(|a, b| a.0.cmp(&b.0));
    let col_order: Vec<usize> = std::iter::once(0).chain(rest.into_iter().map(|(_, c)| c)).collect();
    let arranged = rowed.select_cols(&col_order)?;

    let mut names: HashMap<u32, u32> = HashMap::new();
    let mut next = 1u32;
    for r in 0..f {
        if let Cell::Symbol(id) = arranged.get(r, 0) {
            names.insert(id, next);
            next += 1;
        }
    }
    for r in 0..f {
        for c in 0..k {
            if let Cell::Symbol(id) = arranged.get(r, c) {
                names.entry(id).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
            }
        }
    }
    Ok(arranged.rename(|id| names[&id]))
}

/// `a` and `b` have the same canonical form.
pub fn canonical_eq(a: &PdaGrid, b: &PdaGrid) -> Result<bool> {
    Ok(canonicalize(a)? == canonicalize(b)?)
}

/// Column 1 reads `1, 2, .., F-Z` followed by empty cells.
pub fn is_regular(grid: &PdaGrid) -> bool {
    let u = grid.rows() - grid.empty_in_column(0);
    (0..grid.rows()).all(|r| {
        let want = if r < u { Cell::Symbol(r as u32 + 1) } else { Cell::Empty };
        grid.get(r, 0) == want
    })
}

/// In a regular grid, no column other than the first holds one of the
/// symbols `1..=F-Z` inside the top `F-Z` rows.
pub fn upper_block_clear(grid: &PdaGrid) -> bool {
    let u = grid.rows() - grid.empty_in_column(0);
    (0..u).all(|r| {
        (1..grid.cols()).all(|c| match grid.get(r, c) {
            Cell::Symbol(id) => id as usize > u,
            Cell::Empty => true,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_462() -> PdaGrid {
        PdaGrid::from_ints(&[
            &[0, 0, 0, 4, 3, 2],
            &[0, 4, 3, 0, 0, 1],
            &[4, 0, 2, 0, 1, 0],
            &[3, 2, 0, 1, 0, 0],
        ])
        .unwrap()
    }

    #[test]
    fn first_column_becomes_regular() {
        // column 1 = [4, -, -, 3]
        let g = PdaGrid::from_ints(&[
            &[4, 0, 2, 0, 1, 0],
            &[0, 4, 3, 0, 0, 1],
            &[0, 0, 0, 4, 3, 2],
            &[3, 2, 0, 1, 0, 0],
        ])
        .unwrap();
        let c = canonicalize(&g).unwrap();
        let col: Vec<Cell> = c.column(0).collect();
        assert_eq!(col, vec![Cell::Symbol(1), Cell::Symbol(2), Cell::Empty, Cell::Empty]);
        assert!(is_regular(&c));
    }

    #[test]
    fn idempotent_on_example() {
        let once = canonicalize(&example_462()).unwrap();
        assert_eq!(canonicalize(&once).unwrap(), once);
        assert!(once.is_dense());
    }

    #[test]
    fn regularized_example_has_clear_upper_block() {
        let c = canonicalize(&example_462()).unwrap();
        assert!(upper_block_clear(&c), "{c}");
    }

    #[test]
    fn invalid_grid_rejected() {
        let g = PdaGrid::from_ints(&[&[1, 1], &[0, 0]]).unwrap();
        assert!(canonicalize(&g).is_err());
    }
}
