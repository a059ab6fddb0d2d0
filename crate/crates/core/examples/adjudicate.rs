//! Settles disagreeing claims by exhaustive search.
//!
//! `cargo run --release --example adjudicate -- 5 7 2`

use pda::solver::{adjudicate, SearchBudget};

fn main() -> pda::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (f, k, z) = match args[..] {
        [f, k, z] => (f, k, z),
        _ => (5, 7, 2),
    };
    print!("{}", adjudicate(f, k, z, &SearchBudget::default())?);
    Ok(())
}
