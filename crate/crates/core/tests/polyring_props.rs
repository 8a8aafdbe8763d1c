use eulerlab_core::{Field, Monomial, Poly, Rational, TriangularSystem, F2};
use proptest::prelude::*;

/// `prod_j (1 + q + ... + q^{d_j - 1})`, expanded directly.
fn hilbert_oracle(degrees: &[u32]) -> Vec<u64> {
    let mut acc = vec![1u64];
    for &d in degrees {
        let mut next = vec![0u64; acc.len() + d as usize - 1];
        for (i, &a) in acc.iter().enumerate() {
            for k in 0..d as usize {
                next[i + k] += a;
            }
        }
        acc = next;
    }
    acc
}

/// Triangular system from raw coefficient choices: `g_j = c T_j^{d_j} +`
/// lower terms in `T_1..T_j` with `T_j`-degree below `d_j`.
fn build_system<K: Field>(
    degrees: &[u32],
    lead: &[i64],
    tails: &[Vec<(Vec<u32>, i64)>],
) -> TriangularSystem<K> {
    let l = degrees.len();
    let gens = (0..l)
        .map(|j| {
            let mut p = Poly::term(Monomial::var_power(l, j, degrees[j]), K::from_i64(lead[j]));
            for (exps, c) in &tails[j] {
                let mut e = vec![0u32; l];
                for (k, x) in exps.iter().enumerate().take(j + 1) {
                    e[k] = *x;
                }
                e[j] %= degrees[j];
                p = &p + &Poly::term(Monomial::new(e), K::from_i64(*c));
            }
            p
        })
        .collect();
    TriangularSystem::new(gens).unwrap()
}

/// Term-by-term division by the leading powers `T_j^{d_j}`. With
/// `by_generator` the highest usable generator goes first and `picks`
/// chooses among its reducible terms; otherwise the lex-largest reducible
/// term goes first.
fn naive_reduce<K: Field>(
    sys: &TriangularSystem<K>,
    degrees: &[u32],
    p: &Poly<K>,
    picks: &[usize],
    by_generator: bool,
) -> Poly<K> {
    let l = degrees.len();
    let lex = |m: &Monomial| -> Vec<u32> { (0..l).rev().map(|j| m.exp(j)).collect() };
    let mut p = p.clone();
    let mut step = 0usize;
    loop {
        let mut reducible: Vec<(Monomial, K, usize)> = Vec::new();
        for (m, c) in p.terms() {
            if let Some(j) = (0..l).rev().find(|&j| m.exp(j) >= degrees[j]) {
                reducible.push((m.clone(), c.clone(), j));
            }
        }
        let chosen = if by_generator {
            let Some(top) = reducible.iter().map(|r| r.2).max() else {
                return p;
            };
            let mut at_top: Vec<_> = reducible.into_iter().filter(|r| r.2 == top).collect();
            let k = picks[step % picks.len()] % at_top.len();
            at_top.swap_remove(k)
        } else {
            let Some(best) = reducible.into_iter().max_by_key(|r| lex(&r.0)) else {
                return p;
            };
            best
        };
        step += 1;
        let (m, c, j) = chosen;
        let g = &sys.generators()[j];
        let lead = Monomial::var_power(l, j, degrees[j]);
        let factor = c * g.coeff(&lead).inverse().unwrap();
        let q = lead.quotient_of(&m).unwrap();
        p = &p - &g.mul_term(&q, &factor);
    }
}

fn system_strategy() -> impl Strategy<Value = (Vec<u32>, Vec<i64>, Vec<Vec<(Vec<u32>, i64)>>)> {
    (1usize..=3).prop_flat_map(|l| {
        (
            prop::collection::vec(1u32..=6, l),
            prop::collection::vec(prop::sample::select(vec![1i64, -1, 3, -5, 7]), l),
            prop::collection::vec(
                prop::collection::vec((prop::collection::vec(0u32..5, l), -3i64..=3), 0..5),
                l,
            ),
        )
    })
}

fn poly_strategy(l: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..8, l), -4i64..=4), 0..6)
}

fn to_poly<K: Field>(l: usize, terms: &[(Vec<u32>, i64)]) -> Poly<K> {
    Poly::from_terms(
        l,
        terms
            .iter()
            .map(|(e, c)| (Monomial::new(e.clone()), K::from_i64(*c))),
    )
}

fn check_system<K: Field>(sys: &TriangularSystem<K>, degrees: &[u32]) {
    let basis = sys.quotient_basis();
    let expected: u128 = degrees.iter().map(|&d| d as u128).product();
    assert_eq!(basis.len() as u128, expected);
    assert_eq!(sys.quotient_dimension(), expected);
    let mut counted = vec![0u64; 1 + degrees.iter().map(|d| d - 1).sum::<u32>() as usize];
    for m in &basis {
        counted[m.degree() as usize] += 1;
        for (j, &d) in degrees.iter().enumerate() {
            assert!(m.exp(j) < d);
        }
    }
    assert_eq!(counted, hilbert_oracle(degrees));
    assert_eq!(sys.hilbert_series(), hilbert_oracle(degrees));
}

proptest! {
    #[test]
    fn quotient_basis_and_hilbert_series((degrees, lead, tails) in system_strategy()) {
        check_system(&build_system::<F2>(&degrees, &lead, &tails), &degrees);
        check_system(&build_system::<Rational>(&degrees, &lead, &tails), &degrees);
    }

    #[test]
    fn normal_forms_are_reduced_and_ideal_invariant(
        (degrees, lead, tails) in system_strategy(),
        p in poly_strategy(3),
        hs in prop::collection::vec(poly_strategy(3), 3),
    ) {
        let l = degrees.len();
        let trim = |t: &Vec<(Vec<u32>, i64)>| -> Vec<(Vec<u32>, i64)> {
            t.iter().map(|(e, c)| (e[..l].to_vec(), *c)).collect()
        };
        let sys = build_system::<Rational>(&degrees, &lead, &tails);
        let p: Poly<Rational> = to_poly(l, &trim(&p));
        let nf = sys.reduce(&p).unwrap();
        for (m, _) in nf.terms() {
            for (j, &d) in degrees.iter().enumerate() {
                prop_assert!(m.exp(j) < d);
            }
        }
        prop_assert_eq!(sys.reduce(&nf).unwrap(), nf.clone());
        let mut shifted = p.clone();
        for (j, h) in hs.iter().take(l).enumerate() {
            let h: Poly<Rational> = to_poly(l, &trim(h));
            shifted = &shifted + &(&h * &sys.generators()[j]);
        }
        prop_assert_eq!(sys.reduce(&shifted).unwrap(), nf.clone());
        let diff = &p - &nf;
        prop_assert!(sys.membership(&diff).unwrap().is_member());
    }

    #[test]
    fn f2_reduction_is_linear(
        (degrees, lead, tails) in system_strategy(),
        p in poly_strategy(3),
        q in poly_strategy(3),
    ) {
        let l = degrees.len();
        let trim = |t: &Vec<(Vec<u32>, i64)>| -> Vec<(Vec<u32>, i64)> {
            t.iter().map(|(e, c)| (e[..l].to_vec(), *c)).collect()
        };
        let sys = build_system::<F2>(&degrees, &lead, &tails);
        let p: Poly<F2> = to_poly(l, &trim(&p));
        let q: Poly<F2> = to_poly(l, &trim(&q));
        let lhs = sys.reduce(&(&p + &q)).unwrap();
        let rhs = &sys.reduce(&p).unwrap() + &sys.reduce(&q).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_ignores_reduction_order(
        (degrees, lead, tails) in system_strategy(),
        p in poly_strategy(3),
        picks in prop::collection::vec(0usize..64, 64),
    ) {
        let l = degrees.len();
        let trim: Vec<(Vec<u32>, i64)> = p.iter().map(|(e, c)| (e[..l].to_vec(), *c)).collect();
        let sys = build_system::<Rational>(&degrees, &lead, &tails);
        let p: Poly<Rational> = to_poly(l, &trim);
        let nf = sys.reduce(&p).unwrap();
        prop_assert_eq!(naive_reduce(&sys, &degrees, &p, &picks, false), nf.clone());
        prop_assert_eq!(naive_reduce(&sys, &degrees, &p, &picks, true), nf);
    }

    #[test]
    fn rational_reduction_commutes_with_scaling(
        (degrees, lead, tails) in system_strategy(),
        p in poly_strategy(3),
        num in -9i64..=9,
        den in 1i64..=9,
    ) {
        let l = degrees.len();
        let trim: Vec<(Vec<u32>, i64)> = p.iter().map(|(e, c)| (e[..l].to_vec(), *c)).collect();
        let sys = build_system::<Rational>(&degrees, &lead, &tails);
        let p: Poly<Rational> = to_poly(l, &trim);
        let c = Rational::new(num.into(), den.into());
        prop_assert_eq!(sys.reduce(&p.scale(&c)).unwrap(), sys.reduce(&p).unwrap().scale(&c));
    }

    #[test]
    fn text_round_trip(p in poly_strategy(3)) {
        let f: Poly<Rational> = to_poly(3, &p);
        prop_assert_eq!(Poly::<Rational>::parse(&f.to_string(), 3).unwrap(), f);
        let g: Poly<F2> = to_poly(3, &p);
        prop_assert_eq!(Poly::<F2>::parse(&g.to_string(), 3).unwrap(), g);
    }
}

#[test]
fn hilbert_oracle_small_cases() {
    assert_eq!(hilbert_oracle(&[1, 2]), vec![1, 1]);
    assert_eq!(hilbert_oracle(&[3, 2]), vec![1, 2, 2, 1]);
}
