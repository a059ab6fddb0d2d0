//! The value oracle, including a pair of claims that disagree.

use pda::known::{best_known_s, claims};

fn main() {
    for (f, k, z) in [(12, 4, 3), (5, 8, 2), (5, 7, 2), (8, 9, 3)] {
        match best_known_s(f, k, z) {
            Some(v) => {
                println!("s({f},{k},{z}) = {} from {}", v.s, v.provenance);
                if let Some(note) = v.conflict_note {
                    println!("  {note}");
                }
            }
            None => println!("s({f},{k},{z}) not covered"),
        }
    }
    for c in claims(5, 7, 2) {
        println!("claim {} -> {}", c.provenance, c.value);
    }
}
