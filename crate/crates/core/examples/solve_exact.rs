//! Exact `s(F, K, Z)` by search.
//!
//! `cargo run --release --example solve_exact -- 4 10 2`

use std::time::Instant;

use pda::solver::{min_s_exact, SearchBudget};

fn main() -> pda::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let [f, k, z] = args[..] else {
        eprintln!("usage: solve_exact F K Z");
        std::process::exit(2);
    };
    let t = Instant::now();
    let res = min_s_exact(f, k, z, &SearchBudget::default())?;
    print!("{res}");
    println!("elapsed: {:.2?}", t.elapsed());
    if let Some(w) = &res.witness {
        print!("{}", String::from_utf8_lossy(&pda::format::write_pda(w)));
    }
    Ok(())
}
