//! Checks a PDA file, or a deliberately broken array when no path is given.
//!
//! `cargo run --example verify_file -- grid.pda`

use pda::format::read_pda_file;
use pda::{verify, PdaGrid};

fn main() -> pda::Result<()> {
    let report = match std::env::args().nth(1) {
        Some(path) => {
            let bytes = std::fs::read(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
            let file = read_pda_file(&bytes)?;
            verify(&file.grid, Some(&file.header))
        }
        None => {
            // symbol 1 at (1,1) and (2,2) needs (1,2) and (2,1) empty
            let g = PdaGrid::from_ints(&[&[1, 2], &[3, 1]])?;
            verify(&g, None)
        }
    };
    print!("{report}");
    std::process::exit(if report.valid { 0 } else { 1 });
}
