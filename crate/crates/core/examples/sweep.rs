//! Exact search against the value oracle over a parameter box.
//!
//! `cargo run --release --example sweep -- 7 8 10` (max F, max K, seconds per instance)

use std::time::Duration;

use pda::known::best_known_s;
use pda::solver::{min_s_exact, SearchBudget};

fn main() -> pda::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (fmax, kmax, secs) = match args[..] {
        [f, k, t] => (f as usize, k as usize, t),
        _ => (6, 6, 5),
    };
    let budget = SearchBudget::default().with_threads(1);
    let budget = SearchBudget::new(budget.node_limit, Duration::from_secs(secs), 1)?;
    for f in 2..=fmax {
        for k in 1..=kmax {
            for z in 1..f {
                let r = min_s_exact(f, k, z, &budget)?;
                let known = best_known_s(f, k, z);
                let oracle = known.as_ref().map_or("-".to_string(), |v| v.s.to_string());
                let solved = r.s_min.map_or(format!(">={}", r.proven_lower), |s| s.to_string());
                let flag = match (&known, r.s_min) {
                    (Some(v), Some(s)) if s < v.s.lo() || s > v.s.hi() => "  MISMATCH",
                    (Some(v), None) if r.proven_lower > v.s.hi() => "  MISMATCH",
                    _ => "",
                };
                println!("{f}\t{k}\t{z}\t{solved}\t{oracle}{flag}");
            }
        }
    }
    Ok(())
}
