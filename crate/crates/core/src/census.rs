use std::collections::BTreeMap;

use crate::error::Result;
use crate::grid::{Cell, PdaGrid};
use crate::verify::ensure_valid;

/// Histogram of symbol multiplicities.
///
/// `counts[&i]` is the number of symbols occurring exactly `i` times, for
/// `1 <= i <= Z + 1`. Symbols occurring more often land in `overflow`, which
/// stays empty for any valid array.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrequencyCensus {
    pub counts: BTreeMap<usize, usize>,
    pub overflow: Vec<(u32, usize)>,
}

impl FrequencyCensus {
    /// `a_i`, zero when absent.
    pub fn a(&self, i: usize) -> usize {
        self.counts.get(&i).copied().unwrap_or(0)
    }

    /// `sum i * a_i` plus overflow occurrences.
    pub fn occurrences(&self) -> usize {
        self.counts.iter().map(|(i, a)| i * a).sum::<usize>() + self.overflow.iter().map(|(_, m)| m).sum::<usize>()
    }

    pub fn symbols(&self) -> usize {
        self.counts.values().sum::<usize>() + self.overflow.len()
    }
}

/// Multiplicity of every symbol, ascending by id.
pub fn multiplicities(grid: &PdaGrid) -> BTreeMap<u32, usize> {
    let mut m = BTreeMap::new();
    for cell in grid.cells() {
        if let Cell::Symbol(id) = cell {
            *m.entry(*id).or_insert(0) += 1;
        }
    }
    m
}

pub fn frequency_census(grid: &PdaGrid) -> Result<FrequencyCensus> {
    let params = ensure_valid(grid)?;
    let mut census = FrequencyCensus::default();
    for (id, m) in multiplicities(grid) {
        if m > params.z + 1 {
            census.overflow.push((id, m));
        } else {
            *census.counts.entry(m).or_insert(0) += 1;
        }
    }
    Ok(census)
}
