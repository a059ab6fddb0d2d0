//! Explicit PDA constructions.

mod catalog;
mod family;

pub use catalog::{catalog, fixed_catalog, CatalogEntry};
pub use family::{build_named, family_builder, ConstructionProvenance, Optimality};

use crate::combos::binomial;
use crate::error::{PdaError, Result};
use crate::grid::{check_fkz, Cell, PdaGrid};

fn sym(id: usize) -> Cell {
    Cell::Symbol(u32::try_from(id).expect("symbol id fits u32"))
}

/// The four elementary families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimpleCase {
    /// `Z = 0`: every cell a distinct symbol.
    AllDistinct,
    /// `Z = F`: nothing to send.
    AllEmpty,
    /// `Z = F-1`: one symbol per block of `F` columns, on the diagonal.
    OneMissing,
    /// `Z = F-t` with `F >= tK`: column `c` holds `1..t` in its own `t` rows.
    Stacked,
}

pub fn simple_family(f: usize, k: usize, z: usize, case: SimpleCase) -> Result<PdaGrid> {
    check_fkz(f, k, z)?;
    let bad = |why: &str| Err(PdaError::Precondition(format!("{case:?} needs {why}")));
    match case {
        SimpleCase::AllDistinct => {
            if z != 0 {
                return bad("Z = 0");
            }
            PdaGrid::from_fn(f, k, |r, c| sym(r * k + c + 1))
        }
        SimpleCase::AllEmpty => {
            if z != f {
                return bad("Z = F");
            }
            PdaGrid::empty(f, k)
        }
        SimpleCase::OneMissing => {
            if z + 1 != f {
                return bad("Z = F-1");
            }
            PdaGrid::from_fn(f, k, |r, c| if c % f == r { sym(c / f + 1) } else { Cell::Empty })
        }
        SimpleCase::Stacked => {
            let t = f - z;
            if f < t * k {
                return bad("F >= (F-Z)K");
            }
            PdaGrid::from_fn(f, k, |r, c| {
                if r >= c * t && r < (c + 1) * t {
                    sym(r - c * t + 1)
                } else {
                    Cell::Empty
                }
            })
        }
    }
}

/// Optimal two-column array: `s = 2F-3Z` when `F >= 2Z`, else `F-Z`.
pub fn k2(f: usize, z: usize) -> Result<PdaGrid> {
    check_fkz(f, 2, z)?;
    let u = f - z;
    let mut g = PdaGrid::empty(f, 2)?;
    for r in 0..u {
        g.set(r, 0, sym(r + 1));
    }
    if f >= 2 * z {
        for i in 0..z {
            g.set(u + i, 1, sym(i + 1));
        }
        for (n, r) in (z..u).enumerate() {
            g.set(r, 1, sym(u + n + 1));
        }
    } else {
        for i in 0..u {
            g.set(u + i, 1, sym(i + 1));
        }
    }
    Ok(g)
}

/// `F x F` with an empty diagonal; the upper triangle read row by row holds
/// `F(F-1)/2, .., 1` and the lower triangle mirrors it.
pub fn z1_square(f: usize) -> Result<PdaGrid> {
    if f < 2 {
        return Err(PdaError::InvalidArgument(format!("z1_square needs F >= 2, got {f}")));
    }
    let n = f * (f - 1) / 2;
    let index = |i: usize, j: usize| i * f - i * (i + 1) / 2 + (j - i - 1);
    PdaGrid::from_fn(f, f, |r, c| match r.cmp(&c) {
        std::cmp::Ordering::Equal => Cell::Empty,
        std::cmp::Ordering::Less => sym(n - index(r, c)),
        std::cmp::Ordering::Greater => sym(n - index(c, r)),
    })
}

/// `PDA(F, i, 1)` for `i < F`: an `i x i` square on top of `F-i` rows of
/// fresh symbols.
fn z1_tail(f: usize, i: usize) -> Result<PdaGrid> {
    let top = if i == 1 { PdaGrid::empty(1, 1)? } else { z1_square(i)? };
    let base = top.max_symbol() as usize;
    let bottom = PdaGrid::from_fn(f - i, i, |r, c| sym(base + r * i + c + 1))?;
    top.vconcat(&bottom)
}

/// Optimal `PDA(F, K, 1)`: `l` copies of [`z1_square`] and a tail of
/// `i = K mod F` columns.
pub fn z1_general(f: usize, k: usize) -> Result<PdaGrid> {
    check_fkz(f, k, 1)?;
    if f < 2 {
        return Err(PdaError::InvalidArgument("z1_general needs F >= 2".into()));
    }
    let (l, i) = (k / f, k % f);
    let head = if l > 0 {
        Some(concat_copies(&z1_square(f)?, l)?)
    } else {
        None
    };
    let tail = if i > 0 { Some(z1_tail(f, i)?) } else { None };
    match (head, tail) {
        (Some(h), Some(t)) => concat(&h, &t),
        (Some(h), None) => Ok(h),
        (None, Some(t)) => Ok(t),
        (None, None) => unreachable!("K >= 1"),
    }
}

/// Recursive RPDA `R(k, z)` for `0 <= z <= k`, `k >= 1`.
fn rpda_rec(k: usize, z: usize) -> PdaGrid {
    if z == 0 {
        return PdaGrid::from_fn(k, 1, |r, _| sym(k - r)).expect("k >= 1");
    }
    if z == k {
        return PdaGrid::empty(k, 1).expect("k >= 1");
    }
    let k0 = k - 1;
    let a = rpda_rec(k0, z - 1);
    let b = rpda_rec(k0, z);
    let offset = binomial(k0, z + 1);
    let n = binomial(k0, z);
    let left = binomial(k0, z - 1);
    let mut top = vec![Cell::Empty; left];
    top.extend((1..=n).map(|i| sym(offset + n + 1 - i)));
    let top = PdaGrid::from_rows(vec![top]).expect("nonempty row");
    let body = a.shifted(offset as u32).hconcat(&b).expect("same height");
    top.vconcat(&body).expect("same width")
}

/// `RPDA(F, C(F,Z), Z)` with `C(F, Z+1)` symbols, each appearing `Z+1` times.
///
/// Column empty sets run through the `Z`-subsets in TB order; symbol `t` sits
/// on the `t`-th `(Z+1)`-subset of reversed TB order.
pub fn rpda_recursive(f: usize, z: usize) -> Result<PdaGrid> {
    if z == 0 || f <= z {
        return Err(PdaError::InvalidArgument(format!(
            "rpda_recursive needs F > Z >= 1, got F = {f}, Z = {z}"
        )));
    }
    Ok(rpda_rec(f, z))
}

/// `[A | B]` with the symbols of `B` renamed apart.
pub fn concat(a: &PdaGrid, b: &PdaGrid) -> Result<PdaGrid> {
    let a = a.compacted();
    let shift = a.max_symbol();
    a.hconcat(&b.compacted().shifted(shift))
}

/// Side-by-side concatenation of grids on disjoint symbol sets.
pub fn concat_all(parts: &[PdaGrid]) -> Result<PdaGrid> {
    let (first, rest) = parts
        .split_first()
        .ok_or_else(|| PdaError::InvalidArgument("nothing to concatenate".into()))?;
    rest.iter().try_fold(first.compacted(), |acc, g| concat(&acc, g))
}

/// `l` copies side by side, each on its own symbols.
pub fn concat_copies(grid: &PdaGrid, l: usize) -> Result<PdaGrid> {
    if l == 0 {
        return Err(PdaError::InvalidArgument("need at least one copy".into()));
    }
    concat_all(&vec![grid.clone(); l])
}

/// Removes the last `x` columns and renumbers away symbols that vanished.
pub fn drop_columns(grid: &PdaGrid, x: usize) -> Result<PdaGrid> {
    if x >= grid.cols() {
        return Err(PdaError::InvalidArgument(format!(
            "cannot drop {x} of {} columns",
            grid.cols()
        )));
    }
    let keep: Vec<usize> = (0..grid.cols() - x).collect();
    Ok(grid.select_cols(&keep)?.compacted())
}

/// Transpose of a row-regular RPDA: `PDA(C(F,Z), F, C(F-1,Z-1))`.
pub fn transpose_rpda(grid: &PdaGrid) -> Result<PdaGrid> {
    let first = grid.empty_in_row(0);
    if let Some(r) = (1..grid.rows()).find(|&r| grid.empty_in_row(r) != first) {
        return Err(PdaError::Precondition(format!(
            "row {} has {} empty cells, row 1 has {first}",
            r + 1,
            grid.empty_in_row(r)
        )));
    }
    Ok(grid.transpose())
}

/// Replaces every cell by a `t x t` block: a symbol goes on the block
/// diagonal, an empty cell becomes an empty block. `Z' = tF - (F-Z)`.
pub fn blow_up(grid: &PdaGrid, t: usize) -> Result<PdaGrid> {
    if t == 0 {
        return Err(PdaError::InvalidArgument("blow-up factor must be positive".into()));
    }
    PdaGrid::from_fn(grid.rows() * t, grid.cols() * t, |r, c| {
        if r % t == c % t {
            grid.get(r / t, c / t)
        } else {
            Cell::Empty
        }
    })
}

/// Optimal `PDA(F, F, 2)` with an empty main diagonal.
pub fn ff2_recursive(f: usize) -> Result<PdaGrid> {
    match f {
        0..=2 => Err(PdaError::InvalidArgument(format!(
            "ff2_recursive needs F >= 3, got {f}"
        ))),
        3 => fixed_catalog("fig-FF2s-F3"),
        4 => fixed_catalog("fig-FF2s-F4"),
        5 => fixed_catalog("fig-FF2s-F5"),
        _ => {
            let inner = ff2_recursive(f - 3)?;
            let m = f - 3;
            let fresh = |r: usize, c: usize| sym(2 + r * 3 + c);
            let shift = (1 + 3 * m) as u32;
            PdaGrid::from_fn(f, f, |r, c| match (r < 3, c < 3) {
                (true, true) => {
                    if (r + 3 - c) % 3 == 1 {
                        Cell::Symbol(1)
                    } else {
                        Cell::Empty
                    }
                }
                (false, true) => fresh(r - 3, c),
                (true, false) => fresh(c - 3, r),
                (false, false) => match inner.get(r - 3, c - 3) {
                    Cell::Symbol(id) => Cell::Symbol(id + shift),
                    Cell::Empty => Cell::Empty,
                },
            })
        }
    }
}

/// `K(F-Z)` distinct symbols, empties at the top of every column. Valid for
/// any parameters.
pub fn all_distinct(f: usize, k: usize, z: usize) -> Result<PdaGrid> {
    check_fkz(f, k, z)?;
    let u = f - z;
    PdaGrid::from_fn(f, k, |r, c| if r < z { Cell::Empty } else { sym(c * u + (r - z) + 1) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_eq;
    use crate::census::frequency_census;
    use crate::verify::ensure_valid;

    fn params(g: &PdaGrid) -> (usize, usize, usize, usize) {
        let p = ensure_valid(g).unwrap();
        (p.f, p.k, p.z, p.s)
    }

    #[test]
    fn simple_examples() {
        let g = simple_family(4, 10, 3, SimpleCase::OneMissing).unwrap();
        assert_eq!(g, fixed_catalog("e.2-3a").unwrap());
        let g = simple_family(8, 4, 6, SimpleCase::Stacked).unwrap();
        assert_eq!(g, fixed_catalog("e.2-3b").unwrap());
        assert_eq!(
            params(&simple_family(3, 5, 3, SimpleCase::AllEmpty).unwrap()),
            (3, 5, 3, 0)
        );
        assert_eq!(
            params(&simple_family(3, 5, 0, SimpleCase::AllDistinct).unwrap()),
            (3, 5, 0, 15)
        );
        assert!(simple_family(4, 3, 2, SimpleCase::Stacked).is_err());
    }

    #[test]
    fn k2_sizes() {
        assert_eq!(params(&k2(4, 1).unwrap()), (4, 2, 1, 5));
        assert_eq!(params(&k2(4, 2).unwrap()), (4, 2, 2, 2));
        for z in 1..6 {
            assert_eq!(params(&k2(2 * z, z).unwrap()).3, z);
        }
        for f in 1..12 {
            for z in 0..=f {
                let s = if f >= 2 * z { 2 * f - 3 * z } else { f - z };
                assert_eq!(params(&k2(f, z).unwrap()), (f, 2, z, s));
            }
        }
    }

    #[test]
    fn z1_square_matches_examples() {
        assert_eq!(z1_square(5).unwrap(), fixed_catalog("e.1").unwrap());
        assert_eq!(z1_square(2).unwrap(), PdaGrid::from_ints(&[&[0, 1], &[1, 0]]).unwrap());
        let c = frequency_census(&z1_square(7).unwrap()).unwrap();
        assert_eq!(c.a(2), 21);
        assert_eq!(c.counts.len(), 1);
    }

    #[test]
    fn z1_general_sizes() {
        assert_eq!(params(&z1_general(4, 4).unwrap()).3, 6);
        assert_eq!(params(&z1_general(4, 6).unwrap()).3, 11);
        assert_eq!(params(&z1_general(3, 2).unwrap()).3, 3);
        assert_eq!(params(&z1_general(5, 1).unwrap()).3, 4);
    }

    #[test]
    fn rpda_recursive_matches_figures() {
        assert_eq!(rpda_recursive(5, 2).unwrap(), fixed_catalog("e.5-10-2").unwrap());
        assert_eq!(rpda_recursive(6, 3).unwrap(), fixed_catalog("fig-z3").unwrap());
        let anti = rpda_recursive(4, 3).unwrap();
        for r in 0..4 {
            for c in 0..4 {
                let want = if r + c == 3 { Cell::Symbol(1) } else { Cell::Empty };
                assert_eq!(anti.get(r, c), want);
            }
        }
        assert!(rpda_recursive(3, 3).is_err());
    }

    #[test]
    fn rpda_recursive_orders() {
        use crate::combos::{combinations_tb, combinations_tb_reversed};
        let (f, z) = (7, 3);
        let g = rpda_recursive(f, z).unwrap();
        let cols: Vec<Vec<usize>> = (0..g.cols())
            .map(|c| (0..f).filter(|&r| g.get(r, c).is_empty()).map(|r| r + 1).collect())
            .collect();
        assert_eq!(cols, combinations_tb(f, z).unwrap());
        let sets = combinations_tb_reversed(f, z + 1).unwrap();
        for (t, set) in sets.iter().enumerate() {
            let rows: Vec<usize> = (0..f)
                .filter(|&r| g.row(r).contains(&Cell::Symbol(t as u32 + 1)))
                .map(|r| r + 1)
                .collect();
            assert_eq!(&rows, set, "symbol {}", t + 1);
        }
    }

    #[test]
    fn rpda_contains_smaller_rpda() {
        for f in 3..9 {
            for z in 1..f - 1 {
                let g = rpda_recursive(f, z).unwrap();
                let skip = binomial(f - 1, z - 1);
                let rows: Vec<usize> = (1..f).collect();
                let cols: Vec<usize> = (skip..g.cols()).collect();
                let sub = g.select_rows(&rows).unwrap().select_cols(&cols).unwrap();
                assert!(canonical_eq(&sub, &rpda_recursive(f - 1, z).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn rpda_z1_is_z1_square() {
        for f in 2..10 {
            assert_eq!(rpda_recursive(f, 1).unwrap(), z1_square(f).unwrap());
        }
    }

    #[test]
    fn copies_and_drops() {
        let e2 = fixed_catalog("e.2").unwrap();
        assert!(canonical_eq(&concat_copies(&e2, 1).unwrap(), &e2).unwrap());
        assert_eq!(params(&concat_copies(&e2, 2).unwrap()), (4, 12, 2, 8));
        assert_eq!(drop_columns(&e2, 0).unwrap(), e2);
        assert_eq!(params(&drop_columns(&e2, 1).unwrap()), (4, 5, 2, 4));
        assert_eq!(
            params(&drop_columns(&rpda_recursive(5, 3).unwrap(), 1).unwrap()),
            (5, 9, 3, 5)
        );
        assert!(drop_columns(&e2, 6).is_err());
    }

    #[test]
    fn transposes() {
        assert_eq!(
            params(&transpose_rpda(&rpda_recursive(4, 2).unwrap()).unwrap()),
            (6, 4, 3, 4)
        );
        assert_eq!(
            params(&transpose_rpda(&rpda_recursive(5, 2).unwrap()).unwrap()),
            (10, 5, 4, 10)
        );
        let g = rpda_recursive(6, 2).unwrap();
        assert_eq!(transpose_rpda(&transpose_rpda(&g).unwrap()).unwrap(), g);
        assert!(transpose_rpda(&fixed_catalog("fig-small-K3").unwrap()).is_err());
    }

    #[test]
    fn blow_ups() {
        let base = fixed_catalog("ex-3t-base").unwrap();
        let g = blow_up(&base, 2).unwrap();
        assert_eq!(params(&g), (6, 6, 4, 3));
        assert!(canonical_eq(&g, &fixed_catalog("ex-664").unwrap()).unwrap());
        assert_eq!(blow_up(&base, 1).unwrap(), base);
        assert_eq!(
            params(&blow_up(&fixed_catalog("e.2").unwrap(), 2).unwrap()),
            (8, 12, 6, 4)
        );
        let g = blow_up(&fixed_catalog("rem-441").unwrap(), 2).unwrap();
        assert!(canonical_eq(&g, &fixed_catalog("ex-885").unwrap()).unwrap());
        assert_eq!(
            params(&blow_up(&fixed_catalog("rem-441").unwrap(), 3).unwrap()),
            (12, 12, 9, 6)
        );
        for t in 1..=5 {
            assert_eq!(params(&blow_up(&base, t).unwrap()), (3 * t, 3 * t, 3 * t - 2, 3));
        }
    }

    #[test]
    fn ff2_sizes() {
        assert_eq!(params(&ff2_recursive(5).unwrap()).3, 7);
        assert_eq!(params(&ff2_recursive(6).unwrap()).3, 11);
        assert_eq!(params(&ff2_recursive(9).unwrap()).3, 30);
        for f in 3..=16 {
            let g = ff2_recursive(f).unwrap();
            assert_eq!(params(&g).2, 2);
            assert!((0..f).all(|i| g.get(i, i).is_empty()));
        }
        let c = frequency_census(&ff2_recursive(5).unwrap()).unwrap();
        assert_eq!((c.a(3), c.a(2), c.a(1)), (1, 6, 0));
    }

    #[test]
    fn all_distinct_valid() {
        assert_eq!(params(&all_distinct(5, 3, 2).unwrap()), (5, 3, 2, 9));
    }
}
