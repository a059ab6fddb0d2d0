use std::time::Duration;

use proptest::prelude::*;
use proptest::sample::Index;

use pda::bounds::{lower_bound, lower_bound_basic, lower_bound_nested};
use pda::canonical::canonicalize;
use pda::census::multiplicities;
use pda::constructions::{catalog, family_builder};
use pda::format::{read_pda, write_pda};
use pda::sim::{run_scheme, ServerDb};
use pda::solver::{min_s_exact, SearchBudget};
use pda::{verify, PdaGrid};

fn entry_grid(i: &Index) -> PdaGrid {
    let entries = catalog();
    entries[i.index(entries.len())].grid().compacted()
}

/// A random row, column and symbol relabelling of `g`.
fn scramble(g: &PdaGrid, rows: &[usize], cols: &[usize], syms: &[u32]) -> PdaGrid {
    g.select_rows(rows)
        .unwrap()
        .select_cols(cols)
        .unwrap()
        .rename(|t| syms[t as usize - 1])
}

fn profile(g: &PdaGrid) -> Vec<usize> {
    let mut m: Vec<usize> = multiplicities(g).into_values().collect();
    m.sort_unstable();
    m
}

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn scrambled() -> impl Strategy<Value = (PdaGrid, PdaGrid)> {
    any::<Index>().prop_flat_map(|i| {
        let g = entry_grid(&i);
        let syms = (1..=g.symbol_count() as u32).collect::<Vec<_>>();
        (perm(g.rows()), perm(g.cols()), Just(syms).prop_shuffle())
            .prop_map(move |(r, c, s)| (g.clone(), scramble(&g, &r, &c, &s)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelling_keeps_validity_and_multiplicities((g, h) in scrambled()) {
        let r = verify(&h, Some(&g.params()));
        prop_assert!(r.valid, "{}", r.summary());
        prop_assert_eq!(profile(&g), profile(&h));
    }

    #[test]
    fn canonical_form_is_a_fixed_point((_, h) in scrambled()) {
        let c = canonicalize(&h).unwrap();
        prop_assert_eq!(canonicalize(&c).unwrap(), c.clone());
        prop_assert!(verify(&c, Some(&h.params())).valid);
        prop_assert_eq!(profile(&c), profile(&h));
    }

    #[test]
    fn text_format_round_trips((_, h) in scrambled()) {
        prop_assert_eq!(read_pda(&write_pda(&h)).unwrap(), h);
    }

    #[test]
    fn reader_rejects_without_panicking(bytes in proptest::collection::vec(any::<u8>(), 0..200)) {
        let _ = read_pda(&bytes);
    }

    #[test]
    fn every_demand_decodes(i in any::<Index>(), seed in any::<u64>(), picks in proptest::collection::vec(any::<Index>(), 64)) {
        let g = entry_grid(&i);
        let p = g.params();
        let n = 1 + seed as usize % 4;
        let db = ServerDb::random(n, p.f, 8, seed).unwrap();
        let demands: Vec<usize> = (0..p.k).map(|k| picks[k % picks.len()].index(n)).collect();
        let run = run_scheme(&g, &db, &demands).unwrap();
        prop_assert!(run.all_decoded());
        prop_assert_eq!(run.broadcasts.packets.len(), p.s);
    }

    #[test]
    fn builder_output_is_valid(f in 1usize..14, k in 1usize..26, z in 0usize..14) {
        prop_assume!(z <= f);
        if let Some((g, _)) = family_builder(f, k, z) {
            let p = g.params();
            prop_assert!(verify(&g, None).valid);
            prop_assert_eq!((p.f, p.k, p.z), (f, k, z));
            prop_assert!(lower_bound(f, k, z).unwrap().value <= p.s);
        }
    }

    #[test]
    fn nested_bound_dominates(f in 1usize..40, k in 1usize..200, z in 0usize..40) {
        prop_assume!(z < f);
        let b = lower_bound_basic(f, k, z).unwrap().value;
        let n = lower_bound_nested(f, k, z).unwrap().value;
        prop_assert!(n >= b);
        prop_assert!(lower_bound(f, k, z).unwrap().value >= n);
    }
}

#[test]
fn solver_is_monotone() {
    let budget = SearchBudget::new(200_000_000, Duration::from_secs(30), 1).unwrap();
    let s = |f, k, z| min_s_exact(f, k, z, &budget).unwrap().s_min.unwrap();
    for f in 2..=5 {
        for z in 1..f {
            let row: Vec<usize> = (1..=6).map(|k| s(f, k, z)).collect();
            assert!(row.windows(2).all(|w| w[0] <= w[1]), "F={f} Z={z}: {row:?}");
        }
        for k in 1..=5 {
            let col: Vec<usize> = (1..f).map(|z| s(f, k, z)).collect();
            assert!(col.windows(2).all(|w| w[0] >= w[1]), "F={f} K={k}: {col:?}");
        }
    }
}
