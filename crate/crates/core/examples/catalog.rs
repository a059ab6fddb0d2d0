//! Every stored array with its parameters.

use pda::constructions::catalog;
use pda::verify;

fn main() {
    for entry in catalog() {
        let g = entry.grid();
        let ok = verify(&g, Some(&entry.params())).valid;
        let mark = if entry.erratum.is_some() { " (corrected)" } else { "" };
        println!(
            "{:<22} ({}, {}, {}) s={:<3} {}{mark}",
            entry.id,
            entry.f,
            entry.k,
            entry.z,
            entry.s,
            if ok { "ok" } else { "BAD" }
        );
    }
}
