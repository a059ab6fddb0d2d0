//! Lower bounds on the minimum symbol count `s(F, K, Z)`.
//!
//! All arithmetic is exact integer arithmetic; `ceil(a / b)` is computed as
//! `(a + b - 1) / b`.

use std::fmt;

use crate::combos::binomial;
use crate::error::{PdaError, Result};
use crate::grid::check_fkz;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundSource {
    /// Counting: `K(F-Z)` occupied cells, each symbol at most `Z+1` times.
    Basic,
    /// The nested-ceiling chain over successive row deletions.
    Nested,
    /// Holds only if some symbol reaches multiplicity `Z+1`.
    FrequencyConditional,
    /// Rows without empty cells hold distinct, unshared symbols.
    FullRows,
    /// A value determined exactly.
    KnownExact,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundSource::Basic => "basic",
            BoundSource::Nested => "nested",
            BoundSource::FrequencyConditional => "frequency-conditional",
            BoundSource::FullRows => "full-rows",
            BoundSource::KnownExact => "known-exact",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundResult {
    pub value: usize,
    pub source: BoundSource,
    /// Conditions under which `value` is a valid lower bound. Empty means
    /// unconditional.
    pub assumptions: Vec<String>,
}

impl BoundResult {
    fn unconditional(value: usize, source: BoundSource) -> Self {
        Self {
            value,
            source,
            assumptions: Vec::new(),
        }
    }
}

#[inline]
pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// `ceil(K(F-Z) / (Z+1))`.
pub fn lower_bound_basic(f: usize, k: usize, z: usize) -> Result<BoundResult> {
    check_fkz(f, k, z)?;
    Ok(BoundResult::unconditional(
        ceil_div(k * (f - z), z + 1),
        BoundSource::Basic,
    ))
}

/// Sum of the chain `T_1 = ceil((F-Z)K / F)`,
/// `T_{i+1} = ceil((F-Z-i) T_i / (F-i))`, over `F-Z` terms.
///
/// Deleting the row of a column's symbols repeatedly shrinks the array by one
/// row; each term counts the symbols forced at that stage.
pub fn lower_bound_nested(f: usize, k: usize, z: usize) -> Result<BoundResult> {
    check_fkz(f, k, z)?;
    if z >= f {
        return Err(PdaError::InvalidArgument(format!(
            "nested bound needs Z < F (got Z = {z}, F = {f}); Z = F gives s = 0"
        )));
    }
    let mut term = ceil_div((f - z) * k, f);
    let mut total = term;
    for i in 1..f - z {
        term = ceil_div((f - z - i) * term, f - i);
        total += term;
    }
    Ok(BoundResult::unconditional(total, BoundSource::Nested))
}

/// `(F-Z-1)(Z+1) + 1`, valid when some symbol appears `Z+1` times.
pub fn lower_bound_frequency(f: usize, z: usize) -> BoundResult {
    let value = f.saturating_sub(z + 1) * (z + 1) + 1;
    BoundResult {
        value,
        source: BoundSource::FrequencyConditional,
        assumptions: vec![format!("some symbol has multiplicity {}", z + 1)],
    }
}

/// Strongest unconditional bound available without search.
pub fn lower_bound(f: usize, k: usize, z: usize) -> Result<BoundResult> {
    let basic = lower_bound_basic(f, k, z)?;
    if z == f {
        return Ok(basic);
    }
    let nested = lower_bound_nested(f, k, z)?;
    Ok(if nested.value > basic.value { nested } else { basic })
}

/// Full-row decomposition for `F > KZ`.
///
/// At most `KZ` rows contain an empty cell; every other row holds `K`
/// symbols that occur nowhere else. With `r` rows carrying empties those rows
/// form a PDA`(r, K, Z)`, so
/// `s(F,K,Z) >= min_{Z <= r <= KZ} K(F-r) + sub(r)`
/// for any lower bound `sub(r)` on `s(r, K, Z)`.
pub fn lower_bound_full_rows(
    f: usize,
    k: usize,
    z: usize,
    sub: impl Fn(usize) -> usize,
) -> Result<Option<BoundResult>> {
    check_fkz(f, k, z)?;
    let cap = k * z;
    if f <= cap {
        return Ok(None);
    }
    let value = (z..=cap).map(|r| k * (f - r) + sub(r)).min().expect("Z <= KZ");
    Ok(Some(BoundResult {
        value,
        source: BoundSource::FullRows,
        assumptions: vec![format!("sub-bounds on s(r, {k}, {z}) for {z} <= r <= {cap}")],
    }))
}

/// Largest multiplicity a symbol may reach in an array with at most `s`
/// symbols.
///
/// A symbol appearing `m` times spans an `m x m` block whose off-diagonal
/// cells are empty. The other `F-m` rows of its `m` columns then form a
/// PDA`(F-m, m, Z+1-m)` on other symbols, so `s >= 1 + s(F-m, m, Z+1-m)`.
/// With `m = Z+1` this is exactly [`lower_bound_frequency`].
pub fn max_multiplicity(f: usize, k: usize, z: usize, s: usize) -> usize {
    let top = (z + 1).min(k).min(f);
    (1..=top)
        .rev()
        .find(|&m| {
            let rows = f - m;
            let sub_z = z + 1 - m;
            let sub = if rows == 0 || sub_z >= rows {
                0
            } else {
                lower_bound(rows, m, sub_z).map(|b| b.value).unwrap_or(0)
            };
            sub < s
        })
        .unwrap_or(1)
}

/// Each empty cell `(i, j)` can be shared by at most `min(F-Z, K-1)` symbols:
/// a sharing symbol sits both in row `i` and in column `j`.
pub fn share_capacity(f: usize, k: usize, z: usize) -> usize {
    k * z * (f - z).min(k.saturating_sub(1))
}

/// Minimum of `sum m_i (m_i - 1)` over `s` multiplicities summing to `n`,
/// none above `cap`; `None` when `s * cap < n`.
pub fn min_share_demand(n: usize, s: usize, cap: usize) -> Option<usize> {
    if s == 0 {
        return (n == 0).then_some(0);
    }
    if s * cap < n {
        return None;
    }
    let (q, rem) = (n / s, n % s);
    Some(rem * (q + 1) * q + (s - rem) * q * q.saturating_sub(1))
}

/// Necessary conditions for an RPDA (an array meeting the basic bound).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RpdaFeasibility {
    Candidate,
    RuledOut(String),
}

pub fn rpda_feasibility(f: usize, k: usize, z: usize) -> RpdaFeasibility {
    if check_fkz(f, k, z).is_err() {
        return RpdaFeasibility::RuledOut("parameters out of range".to_owned());
    }
    if z == 0 || z == f {
        return RpdaFeasibility::Candidate;
    }
    let u = f - z;
    if k * u <= (z + 1) * (u - 1) {
        return RpdaFeasibility::RuledOut(format!(
            "K(F-Z) = {} <= (Z+1)(F-Z-1) = {}: the basic bound is below the F-Z = {u} symbols of one column",
            k * u,
            (z + 1) * (u - 1)
        ));
    }
    let c = binomial(f, z);
    if (k * u).is_multiple_of(z + 1) && !k.is_multiple_of(c) {
        return RpdaFeasibility::RuledOut(format!(
            "K(F-Z)/(Z+1) = {} is an integer but K = {k} is not a multiple of C(F,Z) = {c}",
            k * u / (z + 1)
        ));
    }
    RpdaFeasibility::Candidate
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct recursive evaluation: the tail of the chain is the chain for
    /// `(F-1, T_1, Z)`.
    fn nested_recursive(f: usize, k: usize, z: usize) -> usize {
        if f == z {
            return 0;
        }
        let first = ((f - z) * k).div_ceil(f);
        first + nested_recursive(f - 1, first, z)
    }

    #[test]
    fn basic_examples() {
        assert_eq!(lower_bound_basic(4, 6, 2).unwrap().value, 4);
        assert_eq!(lower_bound_basic(7, 3, 7).unwrap().value, 0);
        assert_eq!(lower_bound_basic(5, 7, 3).unwrap().value, 4);
        assert!(lower_bound_basic(3, 3, 9).is_err());
    }

    #[test]
    fn nested_examples() {
        assert_eq!(lower_bound_nested(2, 2, 1).unwrap().value, 1);
        assert_eq!(lower_bound_nested(4, 3, 2).unwrap().value, 3);
        assert!(lower_bound_nested(3, 3, 3).is_err());
        // equality case: K = l C(F,Z) gives exactly l C(F, Z+1)
        for f in 2..9 {
            for z in 1..f {
                for l in 1..4 {
                    let k = l * binomial(f, z);
                    assert_eq!(
                        lower_bound_nested(f, k, z).unwrap().value,
                        l * binomial(f, z + 1),
                        "F={f} Z={z} l={l}"
                    );
                }
            }
        }
    }

    #[test]
    fn nested_matches_recursive_form() {
        for f in 1..=12 {
            for z in 0..f {
                for k in 1..=40 {
                    assert_eq!(lower_bound_nested(f, k, z).unwrap().value, nested_recursive(f, k, z));
                }
            }
        }
    }

    #[test]
    fn frequency_examples() {
        assert_eq!(lower_bound_frequency(5, 3).value, 5);
        assert_eq!(lower_bound_frequency(6, 3).value, 9);
        assert_eq!(lower_bound_frequency(9, 8).value, 1);
        assert!(!lower_bound_frequency(5, 3).assumptions.is_empty());
    }

    #[test]
    fn feasibility_examples() {
        assert_eq!(rpda_feasibility(4, 6, 2), RpdaFeasibility::Candidate);
        assert!(matches!(rpda_feasibility(4, 3, 2), RpdaFeasibility::RuledOut(_)));
        // K = 1 with (Z+1)(F-Z-1)/(F-Z) >= 1
        assert!(matches!(rpda_feasibility(5, 1, 2), RpdaFeasibility::RuledOut(_)));
    }

    #[test]
    fn multiplicity_cap() {
        // s(5,5,3) = 4 < 5: no symbol may appear four times
        assert_eq!(max_multiplicity(5, 5, 3, 4), 3);
        assert_eq!(max_multiplicity(5, 5, 3, 5), 4);
        // twelve-by-twelve with Z = 9 and five symbols: at most seven each
        assert_eq!(max_multiplicity(12, 12, 9, 5), 7);
    }

    #[test]
    fn share_demand() {
        assert_eq!(min_share_demand(12, 4, 3), Some(24));
        assert_eq!(min_share_demand(36, 5, 7), None);
        assert_eq!(min_share_demand(0, 0, 3), Some(0));
    }

    #[test]
    fn full_rows_only_beyond_kz() {
        assert!(lower_bound_full_rows(12, 4, 3, |_| 0).unwrap().is_none());
        let b = lower_bound_full_rows(13, 4, 3, |r| if r == 12 { 18 } else { 100 })
            .unwrap()
            .unwrap();
        assert_eq!(b.value, 4 + 18);
        let b = lower_bound_full_rows(13, 4, 3, |_| 0).unwrap().unwrap();
        assert_eq!(b.value, 4);
    }
}
