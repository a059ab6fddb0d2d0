//! Orders on the `r`-subsets of `{1, .., n}`.
//!
//! TB ("top-bottom") order is lexicographic order on increasing sequences:
//! `{1..r}` first and `{n-r+1..n}` last. BT order runs the same generation
//! over the reversed ground set `{n, n-1, .., 1}`.

use crate::error::{PdaError, Result};

/// `C(n, r)`, zero when `r > n`.
pub fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    usize::try_from(acc).expect("binomial overflows usize")
}

fn check(n: usize, r: usize) -> Result<()> {
    if r > n {
        return Err(PdaError::InvalidArgument(format!(
            "cannot choose {r} elements from {n}"
        )));
    }
    Ok(())
}

/// All `r`-subsets of `{1..n}` in TB order, each sorted ascending.
pub fn combinations_tb(n: usize, r: usize) -> Result<Vec<Vec<usize>>> {
    check(n, r)?;
    let mut out = Vec::with_capacity(binomial(n, r));
    let mut cur: Vec<usize> = (1..=r).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let Some(i) = (0..r).rev().find(|&i| cur[i] < n - (r - 1 - i)) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
    Ok(out)
}

/// All `r`-subsets in BT order (TB over `{n, .., 1}`), each sorted ascending.
pub fn combinations_bt(n: usize, r: usize) -> Result<Vec<Vec<usize>>> {
    Ok(combinations_tb(n, r)?
        .into_iter()
        .map(|set| {
            let mut mirrored: Vec<usize> = set.into_iter().map(|x| n + 1 - x).collect();
            mirrored.sort_unstable();
            mirrored
        })
        .collect())
}

/// TB order read backwards: `{n-r+1..n}` first and `{1..r}` last.
///
/// This is the order in which the recursive RPDA places symbols on row sets.
pub fn combinations_tb_reversed(n: usize, r: usize) -> Result<Vec<Vec<usize>>> {
    let mut v = combinations_tb(n, r)?;
    v.reverse();
    Ok(v)
}

/// 0-based position of `set` (ascending, 1-based elements) in TB order.
pub fn rank_tb(n: usize, set: &[usize]) -> Result<usize> {
    let r = set.len();
    check(n, r)?;
    if set.windows(2).any(|w| w[0] >= w[1]) || set.iter().any(|&x| x == 0 || x > n) {
        return Err(PdaError::InvalidArgument(format!(
            "{set:?} is not an increasing subset of 1..={n}"
        )));
    }
    let mut rank = 0;
    let mut prev = 0;
    for (i, &x) in set.iter().enumerate() {
        for skipped in prev + 1..x {
            rank += binomial(n - skipped, r - i - 1);
        }
        prev = x;
    }
    Ok(rank)
}

/// Inverse of [`rank_tb`].
pub fn unrank_tb(n: usize, r: usize, mut rank: usize) -> Result<Vec<usize>> {
    check(n, r)?;
    if rank >= binomial(n, r) {
        return Err(PdaError::InvalidArgument(format!(
            "rank {rank} out of range for C({n}, {r})"
        )));
    }
    let mut out = Vec::with_capacity(r);
    let mut x = 1;
    for i in 0..r {
        loop {
            let block = binomial(n - x, r - i - 1);
            if rank < block {
                break;
            }
            rank -= block;
            x += 1;
        }
        out.push(x);
        x += 1;
    }
    Ok(out)
}
