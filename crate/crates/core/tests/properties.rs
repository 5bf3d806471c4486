use std::collections::BTreeSet;

use fortdyn::constructors::{
    enumerate_step_sequences, realize_finite_height_perm, realize_group_sequence,
    realize_selfmap_sequence, reduce_to_finite,
};
use fortdyn::indicator::{is_topology, poset_isomorphic};
use fortdyn::verify::check_remark_height_equivalence;
use fortdyn::{
    ClosurePoset, FiniteDynSystem, IndicatorSequence, Kind, PointSet, SymbolicFortSystem,
};
use proptest::prelude::*;

fn self_maps(m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..m.pow(m as u32)).map(move |mut k| {
        let mut f = vec![0; m];
        for slot in f.iter_mut() {
            *slot = k % m;
            k /= m;
        }
        f
    })
}

fn is_perm(f: &[usize]) -> bool {
    f.iter().collect::<BTreeSet<_>>().len() == f.len()
}

#[test]
fn orbit_membership_is_monotone() {
    for m in 1..=6 {
        for f in self_maps(m) {
            let mut systems = vec![FiniteDynSystem::new(Kind::Monoid, m, vec![f.clone()]).unwrap()];
            if is_perm(&f) {
                systems.push(FiniteDynSystem::new(Kind::Group, m, vec![f.clone()]).unwrap());
            }
            for sys in systems {
                let orbits = sys.orbits();
                for x in 0..m {
                    assert!(orbits[x].contains(&x));
                    for &y in &orbits[x] {
                        assert!(orbits[y].is_subset(&orbits[x]));
                        if sys.kind() == Kind::Group {
                            assert_eq!(orbits[y], orbits[x]);
                        }
                    }
                }
                if sys.kind() == Kind::Group {
                    // orbits partition the carrier
                    let closures = sys.all_orbit_closures();
                    let total: usize = closures.iter().map(PointSet::len).sum();
                    assert_eq!(total, m);
                }
            }
        }
    }
}

#[test]
fn chain_and_closure_heights_agree_up_to_six_points() {
    let r = check_remark_height_equivalence(6).unwrap();
    assert!(r.passed(), "{:?}", r.counterexample);
}

#[test]
fn invariant_subsets_are_unions_of_orbits() {
    for m in 1..=4 {
        for f in self_maps(m) {
            let sys = FiniteDynSystem::new(Kind::Monoid, m, vec![f]).unwrap();
            let orbits = sys.orbits();
            let invariant: BTreeSet<PointSet> = sys
                .invariant_subsets()
                .unwrap()
                .into_iter()
                .map(|w| w.into_points())
                .collect();
            let mut unions = BTreeSet::new();
            for mask in 1u32..(1 << m) {
                let u: PointSet = (0..m)
                    .filter(|x| mask & (1 << x) != 0)
                    .flat_map(|x| orbits[x].iter().copied())
                    .collect();
                assert!(sys.is_invariant(&u));
                unions.insert(u);
            }
            assert_eq!(invariant, unions);
        }
    }
}

fn longest_chain_below(p: &ClosurePoset, v: usize) -> usize {
    p.downset(v)
        .into_iter()
        .filter(|&u| u != v)
        .map(|u| longest_chain_below(p, u) + 1)
        .max()
        .unwrap_or(0)
}

#[test]
fn single_generator_node_heights_are_chain_lengths() {
    for m in 1..=6 {
        for f in self_maps(m) {
            let p =
                ClosurePoset::of_finite(&FiniteDynSystem::new(Kind::Monoid, m, vec![f]).unwrap());
            for v in 0..p.len() {
                assert_eq!(p.node_height(v), longest_chain_below(&p, v));
            }
        }
    }
}

#[test]
fn downset_height_exceeds_chain_length_with_two_generators() {
    // 3 -> 1 -> 0 and 3 -> 2 -> 0 make a diamond of closures; the downset of
    // the top has four closures even though its longest chain has three.
    let sys =
        FiniteDynSystem::new(Kind::Monoid, 4, vec![vec![0, 0, 0, 1], vec![0, 0, 0, 2]]).unwrap();
    let p = ClosurePoset::of_finite(&sys);
    assert_eq!(p.indicator_sequence().entries(), &[0, 1, 1, 3]);
    let top = 3;
    assert_eq!(longest_chain_below(&p, top), 2);
    let full = fortdyn::InvariantSubset::full(&sys);
    assert_eq!(sys.height_via_chains(&full).unwrap(), 3);
}

#[test]
fn symbolic_heights_and_concretization() {
    for p in 1..=4 {
        for q in 0..=4 {
            let sym = SymbolicFortSystem::new(p, q).unwrap();
            let poset = ClosurePoset::of_symbolic(&sym);
            assert_eq!(poset.len(), p + q);
            assert!(poset.heights().iter().all(|&h| h <= 1));
            if q >= 1 {
                assert!(poset.indicator_sequence().total_height() >= 1);
            }
            for window in 0..=2 {
                let finite = ClosurePoset::of_finite(&sym.concretize(window));
                assert!(
                    poset_isomorphic(&finite, &poset).is_some(),
                    "p={p} q={q} N={window}"
                );
            }
        }
    }
}

#[test]
fn constructor_round_trips() {
    for p in 1..=9 {
        for q in 1..=(10 - p) {
            let got = ClosurePoset::of_symbolic(&realize_group_sequence(p, q).unwrap())
                .indicator_sequence();
            assert_eq!(got.entries(), [vec![0; p], vec![1; q]].concat().as_slice());
        }
    }
    for n in 0..=7 {
        for s in enumerate_step_sequences(n).unwrap() {
            let got = ClosurePoset::of_finite(&realize_selfmap_sequence(&s)).indicator_sequence();
            assert_eq!(got.entries(), s.entries());
        }
    }
    for m in 1..=7 {
        for i in 0..m {
            let got = ClosurePoset::of_finite(&realize_finite_height_perm(m, i).unwrap())
                .indicator_sequence();
            assert_eq!(got.entries(), vec![0; i + 1].as_slice());
        }
    }
}

#[test]
fn reduction_round_trip_over_six_points() {
    for m in 1..=6 {
        for f in self_maps(m) {
            let p =
                ClosurePoset::of_finite(&FiniteDynSystem::new(Kind::Monoid, m, vec![f]).unwrap());
            let sys = reduce_to_finite(&p).unwrap();
            for k in 0..p.len() {
                assert_eq!(sys.orbit(k).unwrap(), p.downset(k));
            }
            assert!(poset_isomorphic(&ClosurePoset::of_finite(&sys), &p).is_some());
        }
    }
    for p in 1..=8 {
        for q in 0..=(8 - p) {
            let poset = ClosurePoset::of_symbolic(&SymbolicFortSystem::new(p, q).unwrap());
            let sys = reduce_to_finite(&poset).unwrap();
            assert!(poset_isomorphic(&ClosurePoset::of_finite(&sys), &poset).is_some());
        }
    }
}

/// A random poset: strict upper-triangular relation, then closed.
fn arb_poset() -> impl Strategy<Value = ClosurePoset> {
    (1usize..8).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let covers: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
                .filter(|&(i, j)| bits[i * n + j])
                .collect();
            ClosurePoset::from_covers((0..n).map(|i| format!("v{i}")).collect(), &covers).unwrap()
        })
    })
}

fn arb_poset_with_perm() -> impl Strategy<Value = (ClosurePoset, Vec<usize>)> {
    arb_poset().prop_flat_map(|p| {
        let n = p.len();
        (Just(p), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn isomorphism_survives_relabeling((p, perm) in arb_poset_with_perm()) {
        let q = p.relabeled(&perm);
        let w = poset_isomorphic(&p, &q).expect("relabeled copy is isomorphic");
        for a in 0..p.len() {
            for b in 0..p.len() {
                prop_assert_eq!(p.leq(a, b), q.leq(w[a], w[b]));
            }
        }
        prop_assert!(poset_isomorphic(&q, &p).is_some());
        prop_assert!(poset_isomorphic(&p, &p).is_some());
        prop_assert_eq!(p.indicator_sequence(), q.indicator_sequence());
    }

    #[test]
    fn isomorphism_is_symmetric(a in arb_poset(), b in arb_poset()) {
        let ab = poset_isomorphic(&a, &b).is_some();
        prop_assert_eq!(ab, poset_isomorphic(&b, &a).is_some());
        if ab {
            prop_assert_eq!(a.indicator_sequence(), b.indicator_sequence());
        }
    }

    #[test]
    fn opens_form_a_topology(p in arb_poset()) {
        let opens = p.enumerate_opens().unwrap();
        prop_assert!(is_topology(p.len(), &opens));
        for o in &opens {
            for &v in o {
                prop_assert!(p.downset(v).is_subset(o));
            }
        }
    }

    #[test]
    fn reduction_preserves_any_poset(p in arb_poset()) {
        let sys = reduce_to_finite(&p).unwrap();
        prop_assert!(poset_isomorphic(&ClosurePoset::of_finite(&sys), &p).is_some());
    }

    #[test]
    fn sequence_text_round_trip(mut entries in proptest::collection::vec(0usize..50, 1..12)) {
        entries.sort_unstable();
        let seq = IndicatorSequence::new(entries);
        prop_assert_eq!(seq.to_string().parse::<IndicatorSequence>().unwrap(), seq.clone());
        prop_assert_eq!(format!("( {} )", seq).parse::<IndicatorSequence>().unwrap(), seq);
    }
}
