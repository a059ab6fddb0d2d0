//! Runs RPDA(5,10,2) as a caching scheme for every node.

use pda::constructions::rpda_recursive;
use pda::sim::{demand_vectors, run_scheme, ServerDb};

fn main() -> pda::Result<()> {
    let grid = rpda_recursive(5, 2)?;
    let db = ServerDb::random(10, 5, 64, 7)?;
    let demands = demand_vectors(10, 10, 32, 7);
    let mut failures = 0;
    for d in &demands {
        let run = run_scheme(&grid, &db, d)?;
        failures += run.decoded.iter().filter(|ok| !**ok).count();
    }
    let first = run_scheme(&grid, &db, &demands[0])?;
    print!("{}", first.manifest());
    println!("{} demand vectors, {failures} failed decodes", demands.len());
    Ok(())
}
