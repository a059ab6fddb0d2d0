//! Lower bounds next to the known value.

use pda::bounds::{lower_bound_basic, lower_bound_nested};
use pda::known::best_known_s;

fn main() -> pda::Result<()> {
    println!(
        "{:>3} {:>3} {:>3} {:>6} {:>6} {:>6}",
        "F", "K", "Z", "basic", "nested", "known"
    );
    for (f, k, z) in [
        (4, 3, 2),
        (4, 6, 2),
        (5, 7, 3),
        (6, 6, 2),
        (7, 4, 3),
        (12, 4, 3),
        (20, 4, 3),
        (5, 7, 2),
    ] {
        let known = best_known_s(f, k, z).map_or("?".to_string(), |v| v.s.to_string());
        println!(
            "{f:>3} {k:>3} {z:>3} {:>6} {:>6} {known:>6}",
            lower_bound_basic(f, k, z)?.value,
            lower_bound_nested(f, k, z)?.value
        );
    }
    Ok(())
}
