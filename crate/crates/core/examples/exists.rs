//! Rules out a PDA with too few symbols.
//!
//! `cargo run --release --example exists -- 4 22 2 15`

use std::time::Instant;

use pda::solver::{exists_pda, Existence, SearchBudget};

fn main() -> pda::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let [f, k, z, s] = args[..] else {
        eprintln!("usage: exists F K Z S");
        std::process::exit(2);
    };
    let t = Instant::now();
    let out = exists_pda(f, k, z, s, &SearchBudget::default())?;
    match &out.existence {
        Existence::Found(_) => println!("PDA({f},{k},{z}) with {s} symbols exists"),
        Existence::Infeasible(why) => println!("no PDA({f},{k},{z}) with {s} symbols: {why}"),
        Existence::Timeout => println!("undecided within budget"),
    }
    println!("nodes {} in {:.2?}", out.nodes, t.elapsed());
    for (name, n) in &out.cuts {
        println!("  {name}: {n}");
    }
    Ok(())
}
