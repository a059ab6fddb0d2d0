//! Smallest array the recipes know for `(F, K, Z)`.
//!
//! `cargo run --example construct -- 5 10 3`

use pda::constructions::family_builder;
use pda::format::write_pda;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (f, k, z) = match args[..] {
        [f, k, z] => (f, k, z),
        _ => (5, 10, 3),
    };
    let Some((grid, prov)) = family_builder(f, k, z) else {
        eprintln!("nothing builds ({f}, {k}, {z})");
        std::process::exit(1);
    };
    println!(
        "recipe {} gives s = {} ({})",
        prov.name, prov.claimed_s, prov.optimality
    );
    if let Some(note) = &prov.note {
        println!("note: {note}");
    }
    print!("{}", String::from_utf8_lossy(&write_pda(&grid)));
}
