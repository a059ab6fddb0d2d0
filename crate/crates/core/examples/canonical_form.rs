//! Canonical form and the multiplicity census.

use pda::canonical::{canonical_eq, canonicalize};
use pda::census::frequency_census;
use pda::constructions::{fixed_catalog, rpda_recursive};
use pda::format::write_pda;

fn main() -> pda::Result<()> {
    let built = rpda_recursive(6, 3)?;
    let figure = fixed_catalog("fig-z3")?;
    println!(
        "rpda(6,3) matches the stored figure: {}",
        canonical_eq(&built, &figure)?
    );
    let census = frequency_census(&built)?;
    println!(
        "symbols {}, each of multiplicity 4: {}",
        census.symbols(),
        census.a(4) == census.symbols()
    );
    let e2 = fixed_catalog("e.2")?;
    print!("{}", String::from_utf8_lossy(&write_pda(&canonicalize(&e2)?)));
    Ok(())
}
