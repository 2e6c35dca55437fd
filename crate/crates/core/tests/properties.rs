//! Property tests against brute-force oracles.

mod common;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use common::*;
use wstable::parse::show;
use wstable::series::{stanley_from_tree, stanley_from_truncations};
use wstable::{
    borel_gens, catalan_diagram, generator_stats, hilbert_series, is_w_stable, meet_w, parse_ideal, poincare_series,
    principal_closure, psi, stanley_decomposition, tree_from_monomial, w_borel_below, w_borel_gens, w_closure,
    Monomial, MonomialIdeal, Naming, WeightVector,
};

/// A non-increasing weight vector together with one to three nonconstant
/// monomials in the same number of variables.
fn instance(max_exp: u32) -> impl Strategy<Value = (WeightVector, Vec<Monomial>)> {
    (1usize..=3).prop_flat_map(move |n| {
        let weights = proptest::collection::vec(1u32..=4, n).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            WeightVector::new(v).unwrap()
        });
        let mono = proptest::collection::vec(0u32..=max_exp, n)
            .prop_filter("nonconstant", |e| e.iter().any(|&x| x > 0))
            .prop_map(Monomial::new);
        (weights, proptest::collection::vec(mono, 1..=3))
    })
}

fn principal(max_exp: u32) -> impl Strategy<Value = (WeightVector, Monomial)> {
    instance(max_exp).prop_map(|(w, ms)| (w, ms[0].clone()))
}

fn exps(ms: &[Monomial]) -> Vec<Exps> {
    ms.iter().map(|m| m.exponents().to_vec()).collect()
}

fn member_of_piece(e: &[u32], coset: &[u32], free: &[usize]) -> bool {
    e.iter().zip(coset).enumerate().all(|(j, (&a, &c))| if free.contains(&j) { a >= c } else { a == c })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn closure_matches_pullback_definition((w, gens) in instance(3)) {
        let closure = w_closure(&gens, &w).unwrap();
        let bound = gens.iter().map(|g| wdeg(g.exponents(), w.as_slice())).max().unwrap()
            + w.len() as u64 * u64::from(w.max_weight());
        prop_assert_eq!(gen_set(&closure), pullback_closure(&exps(&gens), w.as_slice(), bound));
        prop_assert!(is_w_stable(&closure, &w).unwrap());
    }

    #[test]
    fn generator_sets_nest_and_regenerate((w, gens) in instance(3)) {
        let i = w_closure(&gens, &w).unwrap();
        let all = gen_set(&i);
        let bw = w_borel_gens(&i, &w).unwrap();
        prop_assert!(mono_set(&bw).iter().all(|g| all.contains(g)));
        prop_assert_eq!(&w_closure(&bw, &w).unwrap(), &i);
        if is_w_stable(&i, &WeightVector::ones(w.len())).unwrap() {
            let b = mono_set(&borel_gens(&i).unwrap());
            prop_assert!(mono_set(&bw).iter().all(|g| b.contains(g)));
            prop_assert!(b.iter().all(|g| all.contains(g)));
        }
    }

    #[test]
    fn tree_sinks_are_closure_generators((w, m) in principal(3)) {
        let tree = tree_from_monomial(&m, &w, None).unwrap();
        let sinks: Vec<Monomial> = tree.sinks().cloned().collect();
        prop_assert_eq!(mono_set(&sinks), gen_set(&principal_closure(&m, &w).unwrap()));
        prop_assert_eq!(tree.edge_count() + 1, tree.vertex_count());
    }

    #[test]
    fn catalan_generator_rows_count_sinks((w, m) in principal(3)) {
        let diagram = catalan_diagram(&m, &w).unwrap();
        let mut from_diagram = BTreeMap::new();
        for s in generator_stats(&diagram) {
            from_diagram.insert((s.degree, s.max_index), u64::try_from(&s.count).unwrap());
        }
        let mut from_closure = BTreeMap::new();
        for g in principal_closure(&m, &w).unwrap().gens() {
            *from_closure.entry((wdeg(g.exponents(), w.as_slice()), g.max_index())).or_insert(0u64) += 1;
        }
        prop_assert_eq!(from_diagram, from_closure);
    }

    #[test]
    fn poincare_matches_subset_sums((w, gens) in instance(3)) {
        let i = w_closure(&gens, &w).unwrap();
        let p = poincare_series(&i, &w).unwrap();
        let got: BTreeMap<(u32, u64), u64> = p.entries().map(|(k, c)| (k, u64::try_from(c).unwrap())).collect();
        prop_assert_eq!(got, subset_sum_betti(&i, w.as_slice()));
    }

    #[test]
    fn stanley_forms_agree_and_partition((w, gens) in instance(2)) {
        const BOUND: u64 = 14;
        let i = w_closure(&gens, &w).unwrap();
        let sd = stanley_decomposition(&i, &w).unwrap();
        let complement: Vec<Exps> = monomials_up_to(w.as_slice(), BOUND)
            .into_iter()
            .filter(|e| !i.contains(&Monomial::new(e.clone())))
            .collect();
        for e in &complement {
            let hits = sd.pieces.iter().filter(|p| member_of_piece(e, p.coset.exponents(), &p.free_vars)).count();
            prop_assert_eq!(hits, 1, "{:?} lies in {} pieces", e, hits);
        }
        for p in &sd.pieces {
            prop_assert!(!i.contains(&p.coset));
        }
        let general = stanley_from_truncations(&i, &w).unwrap();
        prop_assert_eq!(general.counts(&w, BOUND as usize).unwrap(), sd.counts(&w, BOUND as usize).unwrap());
    }

    #[test]
    fn principal_series_forms_agree((w, m) in principal(3)) {
        let tree_form = stanley_from_tree(&m, &w).unwrap();
        let i = principal_closure(&m, &w).unwrap();
        let general = stanley_from_truncations(&i, &w).unwrap();
        prop_assert_eq!(tree_form.hilbert_numerator(&w).unwrap(), general.hilbert_numerator(&w).unwrap());
        let hs = hilbert_series(&i, &w).unwrap();
        prop_assert_eq!(hs.numerator(), &tree_form.hilbert_numerator(&w).unwrap());
        let terms = hs.expand_terms(25).expect("principal ideals carry per-degree terms");
        prop_assert_eq!(terms, hs.expand(25));
    }

    #[test]
    fn meet_lies_in_both_closures((w, gens) in instance(3)) {
        let (u, v) = (&gens[0], gens.last().unwrap());
        if let Some(q) = meet_w(u, v, &w).unwrap() {
            prop_assert!(w_borel_below(u, &q, &w).unwrap());
            prop_assert!(w_borel_below(v, &q, &w).unwrap());
        } else {
            // The meet of the images has no preimage under psi.
            let pu = psi(u, &w).unwrap();
            let pv = psi(v, &w).unwrap();
            prop_assert!(pu != pv);
        }
    }

    #[test]
    fn printed_ideals_parse_back((w, gens) in instance(4)) {
        let i = w_closure(&gens, &w).unwrap();
        let n = i.nvars();
        for naming in [Naming::Indexed, Naming::Letters] {
            let text = show(&i, naming).to_string();
            let back: MonomialIdeal = parse_ideal(&text, Some(n)).unwrap().ideal;
            prop_assert_eq!(&back, &i, "{}", text);
        }
    }

    #[test]
    fn hilbert_series_counts_complement((w, gens) in instance(3)) {
        let i = w_closure(&gens, &w).unwrap();
        let series = hilbert_series(&i, &w).unwrap().expand(12);
        prop_assert_eq!(&series[0], &BigInt::from(1));
        let want: Vec<BigInt> = complement_counts(&i, w.as_slice(), 12).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(series, want);
    }
}
