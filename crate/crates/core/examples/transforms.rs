//! Building bigger arrays from smaller ones.

use pda::constructions::{blow_up, concat, fixed_catalog, rpda_recursive, transpose_rpda};
use pda::verify;

fn show(name: &str, g: &pda::PdaGrid) {
    let p = g.params();
    println!(
        "{name:<24} F={:<3} K={:<3} Z={:<3} s={:<3} valid={}",
        p.f,
        p.k,
        p.z,
        p.s,
        verify(g, None).valid
    );
}

fn main() -> pda::Result<()> {
    let r = rpda_recursive(4, 2)?;
    show("rpda(4,2)", &r);
    show("transpose", &transpose_rpda(&r)?);
    show("rpda | rpda", &concat(&r, &r)?);
    let e2 = fixed_catalog("e.2")?;
    show("e.2 blown up x2", &blow_up(&e2, 2)?);
    show("3t base blown up x3", &blow_up(&fixed_catalog("ex-3t-base")?, 3)?);
    Ok(())
}
