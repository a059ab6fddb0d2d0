//! Hard-coded arrays, keyed by identifier.

use crate::error::{PdaError, Result};
use crate::grid::{Cell, PdaGrid, PdaParams};

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub f: usize,
    pub k: usize,
    pub z: usize,
    pub s: usize,
    /// Rows separated by `/`, cells by spaces, `-` for empty.
    pub rows: &'static str,
    /// Set when the stored array corrects a misprint in its source.
    pub erratum: Option<&'static str>,
}

impl CatalogEntry {
    pub fn params(&self) -> PdaParams {
        PdaParams {
            f: self.f,
            k: self.k,
            z: self.z,
            s: self.s,
        }
    }

    pub fn grid(&self) -> PdaGrid {
        parse_rows(self.rows).unwrap_or_else(|e| panic!("catalog entry {}: {e}", self.id))
    }
}

pub(crate) fn parse_rows(text: &str) -> Result<PdaGrid> {
    let rows = text
        .split('/')
        .map(|row| {
            row.split_whitespace()
                .map(|tok| match tok {
                    "-" => Ok(Cell::Empty),
                    _ => tok
                        .parse::<u32>()
                        .map(Cell::Symbol)
                        .map_err(|_| PdaError::InvalidArgument(format!("bad token `{tok}`"))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PdaGrid::from_rows(rows)
}

const fn e(id: &'static str, f: usize, k: usize, z: usize, s: usize, rows: &'static str) -> CatalogEntry {
    CatalogEntry {
        id,
        f,
        k,
        z,
        s,
        rows,
        erratum: None,
    }
}

const CATALOG: &[CatalogEntry] = &[
    e("e.demo", 2, 2, 1, 1, "- 1 / 1 -"),
    e(
        "e.2-3a",
        4,
        10,
        3,
        3,
        "1 - - - 2 - - - 3 - / - 1 - - - 2 - - - 3 / - - 1 - - - 2 - - - / - - - 1 - - - 2 - -",
    ),
    e(
        "e.2-3b",
        8,
        4,
        6,
        2,
        "1 - - - / 2 - - - / - 1 - - / - 2 - - / - - 1 - / - - 2 - / - - - 1 / - - - 2",
    ),
    e(
        "e.2",
        4,
        6,
        2,
        4,
        "- - - 4 3 2 / - 4 3 - - 1 / 4 - 2 - 1 - / 3 2 - 1 - -",
    ),
    e(
        "e.1",
        5,
        5,
        1,
        10,
        "- 10 9 8 7 / 10 - 6 5 4 / 9 6 - 3 2 / 8 5 3 - 1 / 7 4 2 1 -",
    ),
    e(
        "e.5-10-2",
        5,
        10,
        2,
        10,
        "- - - - 10 9 8 7 6 5 / - 10 9 8 - - - 4 3 2 / 10 - 7 6 - 4 3 - - 1 / \
         9 7 - 5 4 - 2 - 1 - / 8 6 5 - 3 2 - 1 - -",
    ),
    e(
        "fig-z3",
        6,
        20,
        3,
        15,
        "- - - - - - - - - - 15 14 13 12 11 10 9 8 7 6 / \
         - - - - 15 14 13 12 11 10 - - - - - - 5 4 3 2 / \
         - 15 14 13 - - - 9 8 7 - - - 5 4 3 - - - 1 / \
         15 - 12 11 - 9 8 - - 6 - 5 4 - - 2 - - 1 - / \
         14 12 - 10 9 - 7 - 6 - 5 - 3 - 2 - - 1 - - / \
         13 11 10 - 8 7 - 6 - - 4 3 - 2 - - 1 - - -",
    ),
    CatalogEntry {
        erratum: Some("cell (5,3) reads 4 instead of 1; as printed, symbol 1 at (1,1) and (5,3) sees 3 at (1,3)"),
        ..e(
            "e.553a",
            5,
            5,
            3,
            4,
            "1 - 3 - - / 2 - - - 3 / - 1 - 3 - / - 2 - - 4 / - - 4 2 -",
        )
    },
    e(
        "e.553b",
        6,
        4,
        3,
        4,
        "- - 1 4 / - 1 - 3 / 1 - - 2 / - 4 3 - / 4 - 2 - / 3 2 - -",
    ),
    e("fig-small-K2", 4, 2, 2, 2, "1 - / 2 - / - 1 / - 2"),
    e("fig-small-K3", 4, 3, 2, 3, "1 - 3 / 2 - - / - 3 - / - 1 2"),
    e("fig-small-K4", 4, 4, 2, 4, "1 - 3 - / 2 - 4 - / - 1 - 3 / - 2 - 4"),
    e("fig-small5-3-K2", 5, 2, 3, 2, "1 - / 2 - / - 1 / - 2 / - -"),
    CatalogEntry {
        erratum: Some(
            "symbol 3 moved from row 1 to row 2 of column 3; as printed, symbol 1 at (1,1) and (5,3) sees 3 at (1,3)",
        ),
        ..e("fig-small5-3-K3", 5, 3, 3, 3, "1 - - / 2 - 3 / - 1 - / - 2 - / - - 1")
    },
    CatalogEntry {
        erratum: Some(
            "symbol 3 moved from row 1 to row 2 of column 3; as printed, symbol 1 at (1,1) and (5,3) sees 3 at (1,3)",
        ),
        ..e(
            "fig-small5-3-K4",
            5,
            4,
            3,
            3,
            "1 - - - / 2 - 3 - / - 1 - 3 / - 2 - - / - - 1 2",
        )
    },
    e(
        "fig-small5-3-K6",
        5,
        6,
        3,
        4,
        "1 - - 3 4 - / - 1 - 2 - 4 / - - 1 - 2 3 / 2 3 - - - - / - - 4 - - -",
    ),
    e("fig-5K2-K3", 5, 3, 2, 5, "1 - 5 / 2 - 4 / 3 4 - / - 1 3 / - 2 -"),
    e(
        "fig-5K2-K4",
        5,
        4,
        2,
        6,
        "1 - 4 5 / 2 4 - 6 / 3 5 6 - / - 1 - 3 / - - 2 -",
    ),
    e(
        "fig-5K2-K6",
        5,
        6,
        2,
        8,
        "- - 1 3 7 6 / 1 - - 4 5 8 / - 1 - - 2 - / 3 4 5 - - 2 / 6 7 8 2 - -",
    ),
    e(
        "fig-5K2-K7",
        5,
        7,
        2,
        10,
        "- - 1 2 9 - 5 / 1 - - 4 6 3 7 / - 1 - 8 - 10 - / 2 3 4 - 8 - 10 / 5 6 7 - - 9 -",
    ),
    e(
        "fig-largeF-F5",
        5,
        4,
        3,
        3,
        "1 - - 2 / - 1 - 3 / - - 1 - / - 2 - - / 3 - 2 -",
    ),
    e(
        "fig-largeF-F6",
        6,
        4,
        3,
        4,
        "2 1 - - / 3 - 1 - / 4 - - 1 / - 3 2 - / - 4 - 2 / - - 4 3",
    ),
    e(
        "fig-largeF-F7",
        7,
        4,
        3,
        8,
        "1 - - 3 / - 1 - 2 / - - 1 4 / 2 3 - - / 4 - 3 - / - 4 2 - / 5 6 7 8",
    ),
    e(
        "fig-largeF-F8",
        8,
        4,
        3,
        10,
        "1 - - 5 / - 1 - 6 / - - 1 7 / 3 2 - 8 / 4 - 2 9 / - 4 3 - / 7 5 6 - / 10 9 8 -",
    ),
    e(
        "fig-largeF-F9",
        9,
        4,
        3,
        12,
        "1 2 3 - / - 4 5 1 / 4 - 6 2 / 5 6 - 3 / 7 8 9 - / - 10 11 7 / 11 12 - 9 / 10 - 12 8 / - - - -",
    ),
    e(
        "fig-largeF-F9-842",
        8,
        4,
        2,
        12,
        "1 2 3 - / - 4 5 1 / 4 - 6 2 / 5 6 - 3 / 7 8 9 - / - 10 11 7 / 11 12 - 9 / 10 - 12 8",
    ),
    e(
        "fig-largeF2-F10",
        10,
        4,
        3,
        14,
        "1 - 2 4 / - 1 3 5 / 3 2 - 6 / 5 4 6 - / 8 7 - 12 / 9 - 7 10 / - 9 8 11 / 11 10 12 - / \
         - 14 - 13 / 14 - 13 -",
    ),
    e(
        "fig-largeF2-F11",
        11,
        4,
        3,
        17,
        "1 - 2 4 / - 1 3 5 / 3 2 - 6 / 5 4 6 - / 8 7 - 12 / 9 - 7 10 / - 9 8 11 / 11 10 12 - / \
         13 14 - 16 / 15 - 14 17 / - 15 13 -",
    ),
    e(
        "fig-largeF2-F12",
        12,
        4,
        3,
        18,
        "1 - 2 4 / - 1 3 5 / 3 2 - 6 / 5 4 6 - / 8 7 - 12 / 9 - 7 10 / - 9 8 11 / 11 10 12 - / \
         13 14 16 - / 17 15 - 16 / 18 - 15 14 / - 18 17 13",
    ),
    e(
        "fig-F=K-Z2",
        6,
        6,
        2,
        11,
        "- - 1 2 5 8 / 1 - - 3 6 9 / - 1 - 4 7 10 / 2 3 4 - 11 - / 5 6 7 - - 11 / 8 9 10 11 - -",
    ),
    e(
        "fig-F=K-Z3",
        6,
        6,
        3,
        6,
        "1 - - 2 3 - / - 1 - 4 - 3 / - - 1 - 4 6 / 6 - 2 - 5 - / 4 2 - - - 5 / - 6 3 5 - -",
    ),
    e(
        "fig-F=K7-Z3",
        7,
        7,
        3,
        10,
        "1 - - 2 6 7 - / - 1 - 3 5 - 7 / - - 1 4 - 5 6 / 3 2 - - 9 10 - / 4 - 2 - 8 - 10 / \
         - 4 3 - - 8 9 / 5 6 7 8 - - -",
    ),
    e(
        "fig-F=K7-Z4",
        7,
        7,
        4,
        6,
        "1 - - - 2 - 4 / - 1 - - - 2 6 / - - 1 - - 5 3 / - - - 1 6 4 - / 5 3 2 - - - - / \
         6 4 - 2 - - - / - - 4 3 5 - -",
    ),
    e(
        "fig-F=K7-Z5",
        7,
        7,
        5,
        4,
        "1 - - - - - 3 / - 1 - - - 3 - / - - 1 - - - 2 / - - - 1 - 2 - / - - - - 1 - - / \
         2 - 4 3 - - - / - 2 - - 3 - -",
    ),
    e(
        "fig-more",
        7,
        7,
        5,
        4,
        "1 - - - - - 2 / - 1 - - - 2 - / - - 1 - 2 - - / - - - 1 3 - - / - - 3 2 - - - / \
         - 3 - - - 4 - / 3 - - - - - 4",
    ),
    e("fig-FF2s-F3", 3, 3, 2, 1, "- - 1 / 1 - - / - 1 -"),
    e("fig-FF2s-F4", 4, 4, 2, 4, "- - 1 2 / 1 - - 3 / - 1 - - / 2 3 4 -"),
    e(
        "fig-FF2s-F5",
        5,
        5,
        2,
        7,
        "- - 1 2 5 / 1 - - 3 6 / - 1 - 4 7 / 2 3 4 - - / 5 6 7 - -",
    ),
    e("ex-3t-base", 3, 3, 1, 3, "- 3 2 / 3 - 1 / 2 1 -"),
    e(
        "ex-664",
        6,
        6,
        4,
        3,
        "- - 3 - 2 - / - - - 3 - 2 / 3 - - - 1 - / - 3 - - - 1 / 2 - 1 - - - / - 2 - 1 - -",
    ),
    e("rem-441", 4, 4, 1, 6, "1 2 4 - / 5 3 - 4 / 6 - 3 2 / - 6 5 1"),
    e(
        "ex-885",
        8,
        8,
        5,
        6,
        "1 - 2 - 4 - - - / - 1 - 2 - 4 - - / 5 - 3 - - - 4 - / - 5 - 3 - - - 4 / \
         6 - - - 3 - 2 - / - 6 - - - 3 - 2 / - - 6 - 5 - 1 - / - - - 6 - 5 - 1",
    ),
    // first witness of the exact search, one symbol below fig-largeF-F7
    e(
        "search-743",
        7,
        4,
        3,
        7,
        "1 5 7 - / 2 6 - 7 / 3 - 6 - / 4 - - 5 / - 3 2 - / - 4 - 1 / - - 4 3",
    ),
];

/// All entries in catalog order.
pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn fixed_catalog(id: &str) -> Result<PdaGrid> {
    CATALOG
        .iter()
        .find(|e| e.id == id)
        .map(CatalogEntry::grid)
        .ok_or_else(|| PdaError::UnknownCatalogId(id.to_owned()))
}
