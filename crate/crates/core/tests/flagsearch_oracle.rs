use std::collections::BTreeSet;

use eulerlab_core::flagsearch::{find_flag, find_free_flag, gap_inequality};
use eulerlab_core::{CharF2, RepE};
use proptest::prelude::*;

/// Every complete flag of `F2^l` as its chain of subspaces, each a sorted
/// list of elements, built from ordered independent tuples.
fn all_chains(l: usize) -> BTreeSet<Vec<Vec<u64>>> {
    fn span(gens: &[u64]) -> Vec<u64> {
        let mut s = vec![0u64];
        for &g in gens {
            let more: Vec<u64> = s.iter().map(|x| x ^ g).collect();
            s.extend(more);
        }
        s.sort();
        s.dedup();
        s
    }
    let mut out = BTreeSet::new();
    let mut stack: Vec<Vec<u64>> = vec![vec![]];
    while let Some(gens) = stack.pop() {
        if gens.len() == l {
            out.insert((1..=l).map(|i| span(&gens[..i])).collect());
            continue;
        }
        let s = span(&gens);
        for c in 1..1u64 << l {
            if !s.contains(&c) {
                let mut g = gens.clone();
                g.push(c);
                stack.push(g);
            }
        }
    }
    out
}

fn dims(chain: &[Vec<u64>], u: &RepE) -> Vec<u64> {
    let mut d = vec![0u64; chain.len()];
    for (a, m) in u.entries() {
        if let Some(i) = chain.iter().position(|s| s.binary_search(&a.bits()).is_ok()) {
            d[i] += m;
        }
    }
    d
}

fn chain_of(basis: &[CharF2]) -> Vec<Vec<u64>> {
    let bits: Vec<u64> = basis.iter().map(CharF2::bits).collect();
    (1..=bits.len())
        .map(|i| {
            let mut s = vec![0u64];
            for &g in &bits[..i] {
                let more: Vec<u64> = s.iter().map(|x| x ^ g).collect();
                s.extend(more);
            }
            s.sort();
            s.dedup();
            s
        })
        .collect()
}

fn rep(l: usize, entries: &[(u64, u64)], drop_trivial: bool) -> RepE {
    let mut acc: Vec<(CharF2, u64)> = Vec::new();
    for &(b, m) in entries {
        let b = b & ((1 << l) - 1);
        if drop_trivial && b == 0 {
            continue;
        }
        let a = CharF2::new(l, b).unwrap();
        match acc.iter_mut().find(|(x, _)| *x == a) {
            Some(e) => e.1 += m,
            None => acc.push((a, m)),
        }
    }
    RepE::from_entries(l, acc).unwrap()
}

#[test]
fn chain_counts() {
    assert_eq!(all_chains(1).len(), 1);
    assert_eq!(all_chains(2).len(), 3);
    assert_eq!(all_chains(3).len(), 21);
}

proptest! {
    #[test]
    fn greedy_flag_agrees_with_enumeration(
        l in 1usize..=3,
        ue in prop::collection::vec((0u64..8, 1u64..=3), 1..5),
        ve in prop::collection::vec((1u64..8, 1u64..=2), 0..4),
    ) {
        let u = rep(l, &ue, true);
        let v = rep(l, &ve, true);
        let exists = all_chains(l).iter().any(|c| {
            dims(c, &u).iter().zip(dims(c, &v)).all(|(a, b)| *a > b)
        });
        match find_flag(&u, &v) {
            Ok(f) => {
                let c = chain_of(f.dual_basis());
                prop_assert!(dims(&c, &u).iter().zip(dims(&c, &v)).all(|(a, b)| *a > b));
            }
            Err(_) => prop_assert!(!exists),
        }
    }

    #[test]
    fn free_flag_exists_whenever_gap_holds(
        l in 1usize..=3,
        ue in prop::collection::vec((0u64..8, 1u64..=3), 1..5),
        ve in prop::collection::vec((1u64..8, 1u64..=2), 0..4),
    ) {
        let u = rep(l, &ue, false);
        let v = rep(l, &ve, true);
        let gap = gap_inequality(&u, &v).0;
        match find_free_flag(&u, &v) {
            Ok(ff) => {
                prop_assert!(gap);
                let (qu, qv) = (&ff.fixed_u.rep, &ff.fixed_v.rep);
                let c = chain_of(ff.flag.dual_basis());
                prop_assert!(dims(&c, qu).iter().zip(dims(&c, qv)).all(|(a, b)| *a > b));
            }
            Err(e) => {
                prop_assert!(!gap);
                prop_assert!(e.is_hypothesis());
            }
        }
    }
}
