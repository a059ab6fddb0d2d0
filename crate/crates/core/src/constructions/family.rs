//! Picks a construction recipe for given `(F, K, Z)`.

use std::fmt;

use super::{
    all_distinct, blow_up, catalog, concat_all, concat_copies, drop_columns, ff2_recursive, fixed_catalog, k2,
    rpda_recursive, simple_family, transpose_rpda, z1_general, SimpleCase,
};
use crate::bounds::lower_bound;
use crate::combos::binomial;
use crate::error::Result;
use crate::grid::{PdaGrid, PdaParams};
use crate::known::best_known_s;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Optimality {
    /// `s` equals a known exact value.
    ExactProven,
    /// `s` equals a lower bound computed on the spot.
    LowerBoundMatched,
    None,
}

impl fmt::Display for Optimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Optimality::ExactProven => "exact-proven",
            Optimality::LowerBoundMatched => "lower-bound-matched",
            Optimality::None => "none",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionProvenance {
    pub name: String,
    pub params: PdaParams,
    pub claimed_s: usize,
    pub optimality: Optimality,
    /// Provenance of the known value the size was compared against.
    pub anchor: String,
    pub note: Option<String>,
}

/// Largest grid (in cells) the builder will materialize.
const MAX_CELLS: usize = 4_000_000;

struct Candidate {
    name: String,
    grid: PdaGrid,
}

fn push(out: &mut Vec<Candidate>, name: impl Into<String>, grid: Result<PdaGrid>) {
    if let Ok(grid) = grid {
        out.push(Candidate {
            name: name.into(),
            grid,
        });
    }
}

/// `RPDA(F, C(F,Z), Z)` repeated and truncated to `K` columns.
fn rpda_truncated(f: usize, k: usize, z: usize) -> Option<Result<PdaGrid>> {
    if z == 0 || z >= f {
        return None;
    }
    let c = binomial(f, z);
    let l = k.div_ceil(c);
    if f.checked_mul(c)?.checked_mul(l)? > MAX_CELLS {
        return None;
    }
    Some(rpda_recursive(f, z).and_then(|g| drop_columns(&concat_copies(&g, l)?, l * c - k)))
}

/// `l` copies of `unit` followed by `tail(i)` for the remainder `i`.
fn periodic(unit: &PdaGrid, k: usize, tail: impl Fn(usize) -> Result<PdaGrid>) -> Result<PdaGrid> {
    let period = unit.cols();
    let (l, i) = (k / period, k % period);
    let mut parts = vec![unit.clone(); l];
    if i > 0 {
        parts.push(tail(i)?);
    }
    concat_all(&parts)
}

fn candidates(f: usize, k: usize, z: usize, depth: usize) -> Vec<Candidate> {
    let mut out = Vec::new();
    if f.saturating_mul(k) > MAX_CELLS {
        return out;
    }
    if z == 0 {
        push(
            &mut out,
            "all-distinct",
            simple_family(f, k, z, SimpleCase::AllDistinct),
        );
    }
    if z == f {
        push(&mut out, "all-empty", simple_family(f, k, z, SimpleCase::AllEmpty));
        return out;
    }
    if z + 1 == f {
        push(&mut out, "one-missing", simple_family(f, k, z, SimpleCase::OneMissing));
    }
    if f >= (f - z) * k {
        push(&mut out, "stacked", simple_family(f, k, z, SimpleCase::Stacked));
    }
    if k == 2 {
        push(&mut out, "k2", k2(f, z));
    }
    if z == 1 && f >= 2 {
        push(&mut out, "z1-general", z1_general(f, k));
    }
    if let Some(g) = rpda_truncated(f, k, z) {
        push(&mut out, "rpda-copies", g);
    }
    for t in 2..k {
        if binomial(k, t) == f && binomial(k - 1, t - 1) == z {
            push(
                &mut out,
                "large-f-transpose",
                rpda_recursive(k, t).and_then(|g| transpose_rpda(&g)),
            );
        }
    }
    if (f, z) == (4, 2) {
        let g = rpda_recursive(4, 2).and_then(|unit| {
            periodic(&unit, k, |i| match i {
                1 => simple_family(4, 1, 2, SimpleCase::Stacked),
                2..=4 => fixed_catalog(&format!("fig-small-K{i}")),
                _ => drop_columns(&unit, 6 - i),
            })
        });
        push(&mut out, "4k2-periodic", g);
    }
    if (f, z) == (5, 3) {
        let g = rpda_recursive(5, 3).and_then(|unit| {
            periodic(&unit, k, |i| match i {
                1 => simple_family(5, 1, 3, SimpleCase::Stacked),
                2..=4 | 6 => fixed_catalog(&format!("fig-small5-3-K{i}")),
                5 => fixed_catalog("e.553a"),
                _ => drop_columns(&unit, 10 - i),
            })
        });
        push(&mut out, "5k3-periodic", g);
    }
    if (f, z) == (5, 2) {
        let g = rpda_recursive(5, 2).and_then(|unit| {
            periodic(&unit, k, |i| match i {
                1 => simple_family(5, 1, 2, SimpleCase::Stacked),
                2 => k2(5, 2),
                3 | 4 | 6 | 7 => fixed_catalog(&format!("fig-5K2-K{i}")),
                5 => ff2_recursive(5),
                _ => drop_columns(&unit, 10 - i),
            })
        });
        push(&mut out, "5k2-periodic", g);
    }
    if k == 4 && z == 3 && f > 12 {
        let g = fixed_catalog("fig-largeF2-F12").and_then(|top| {
            let base = top.max_symbol() as usize;
            let rows = f - 12;
            let extra = PdaGrid::from_fn(rows, 4, |r, c| crate::grid::Cell::Symbol((base + r * 4 + c + 1) as u32))?;
            top.vconcat(&extra)
        });
        push(&mut out, "f4k3-stacked", g);
    }
    if f == k && z == 2 && f >= 3 {
        push(&mut out, "ff2", ff2_recursive(f));
    }
    if depth < 3 {
        for t in 2..=f.min(k) {
            if !f.is_multiple_of(t) || !k.is_multiple_of(t) {
                continue;
            }
            let sf = f / t;
            // Z = tF' - (F' - Z')
            let Some(sz) = (z + sf).checked_sub(f) else { continue };
            if sz > sf {
                continue;
            }
            if let Some(best) = pick(f / t, k / t, sz, depth + 1) {
                push(&mut out, format!("blow-up-{t}({})", best.0), blow_up(&best.1, t));
            }
        }
        if f.is_multiple_of(3) && f == k && z + 2 == f {
            push(
                &mut out,
                "3t",
                fixed_catalog("ex-3t-base").and_then(|g| blow_up(&g, f / 3)),
            );
        }
    }
    for entry in catalog() {
        if (entry.f, entry.k, entry.z) == (f, k, z) {
            push(&mut out, format!("fixed:{}", entry.id), Ok(entry.grid()));
        }
    }
    push(&mut out, "distinct-columns", all_distinct(f, k, z));
    out
}

/// Best candidate by (optimal first, smallest s, candidate order).
fn pick(f: usize, k: usize, z: usize, depth: usize) -> Option<(String, PdaGrid)> {
    candidates(f, k, z, depth)
        .into_iter()
        .enumerate()
        .min_by_key(|(i, c)| (c.grid.symbol_count(), *i))
        .map(|(_, c)| (c.name, c.grid))
}

fn provenance(name: String, grid: &PdaGrid) -> ConstructionProvenance {
    let params = grid.params();
    let (f, k, z, s) = (params.f, params.k, params.z, params.s);
    let known = best_known_s(f, k, z);
    let lb = lower_bound(f, k, z).map(|b| b.value).unwrap_or(0);
    let optimality = if s == lb {
        Optimality::LowerBoundMatched
    } else if known.as_ref().and_then(|v| v.exact()) == Some(s) {
        Optimality::ExactProven
    } else {
        Optimality::None
    };
    ConstructionProvenance {
        name,
        params,
        claimed_s: s,
        optimality,
        anchor: known.as_ref().map(|v| v.provenance.clone()).unwrap_or_default(),
        note: known.and_then(|v| v.conflict_note),
    }
}

/// The smallest array the recipes can build for `(F, K, Z)`.
///
/// Ties on `s` go to the earlier recipe. `None` when the parameters are out
/// of range or the array would be too large to materialize.
pub fn family_builder(f: usize, k: usize, z: usize) -> Option<(PdaGrid, ConstructionProvenance)> {
    crate::grid::check_fkz(f, k, z).ok()?;
    let (name, grid) = pick(f, k, z, 0)?;
    let prov = provenance(name, &grid);
    Some((grid, prov))
}

/// Builds by recipe name, as printed in [`ConstructionProvenance::name`], or
/// `fixed:<catalog id>`.
pub fn build_named(method: &str, f: usize, k: usize, z: usize) -> Result<(PdaGrid, ConstructionProvenance)> {
    use crate::error::PdaError;
    crate::grid::check_fkz(f, k, z)?;
    let grid = if let Some(id) = method.strip_prefix("fixed:") {
        fixed_catalog(id)?
    } else {
        candidates(f, k, z, 0)
            .into_iter()
            .find(|c| c.name == method)
            .map(|c| c.grid)
            .ok_or_else(|| PdaError::InvalidArgument(format!("method `{method}` does not apply to ({f}, {k}, {z})")))?
    };
    let p = grid.params();
    if (p.f, p.k, p.z) != (f, k, z) {
        return Err(PdaError::InvalidArgument(format!(
            "`{method}` builds ({}, {}, {}), not ({f}, {k}, {z})",
            p.f, p.k, p.z
        )));
    }
    let prov = provenance(method.to_owned(), &grid);
    Ok((grid, prov))
}
