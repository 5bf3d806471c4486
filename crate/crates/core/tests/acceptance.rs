//! Acceptance criteria. Each criterion runs at its stated bound, must match
//! exactly, and must finish inside its time budget. One line per criterion is
//! printed; run with `--nocapture` to see them.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use fortdyn::constructors::{
    enumerate_step_sequences, group_sequence_admissible, realize_group_sequence,
    realize_selfmap_sequence, reduce_to_finite, StepSequence,
};
use fortdyn::indicator::{classify_group_topology, poset_isomorphic, GroupClassification};
use fortdyn::{
    Cardinality, ClosurePoset, FiniteDynSystem, InvariantSubset, Kind, SymbolicFortSystem,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed;

// --- enumeration oracles, written independently of the library's scanners ---

fn self_maps(m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                (0..m).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out
}

fn is_permutation(map: &[usize]) -> bool {
    map.iter().copied().collect::<BTreeSet<_>>().len() == map.len()
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    self_maps(m)
        .into_iter()
        .filter(|f| is_permutation(f))
        .collect()
}

/// All vectors in `{0..=n}^(n+1)` starting at 0 with unit-or-zero steps.
fn brute_step_sequences(n: usize) -> BTreeSet<Vec<usize>> {
    let len = n + 1;
    let mut all = BTreeSet::new();
    let total = (n + 1).pow(len as u32);
    for mut code in 0..total {
        let mut v = vec![0; len];
        for slot in v.iter_mut() {
            *slot = code % (n + 1);
            code /= n + 1;
        }
        if v[0] == 0 && v.windows(2).all(|w| w[1] >= w[0] && w[1] - w[0] <= 1) {
            all.insert(v);
        }
    }
    all
}

fn monoid(map: Vec<usize>) -> FiniteDynSystem {
    FiniteDynSystem::new(Kind::Monoid, map.len(), vec![map]).unwrap()
}

fn group(gens: Vec<Vec<usize>>) -> FiniteDynSystem {
    let m = gens[0].len();
    FiniteDynSystem::new(Kind::Group, m, gens).unwrap()
}

fn seq(sys: &FiniteDynSystem) -> Vec<usize> {
    ClosurePoset::of_finite(sys)
        .indicator_sequence()
        .entries()
        .to_vec()
}

// --- criteria ---

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_height_equivalence() -> Outcome {
    let mut compared = 0usize;
    for m in 1..=5 {
        let systems = self_maps(m)
            .into_iter()
            .map(monoid)
            .chain(permutations(m).into_iter().map(|p| group(vec![p])));
        for sys in systems {
            for (points, by_chain) in sys.chain_heights().unwrap() {
                let w = InvariantSubset::new(&sys, points).unwrap();
                let by_count = sys.height_via_closures(&w).unwrap();
                ensure(by_chain == by_count, || {
                    format!(
                        "{:?} on {:?}: chains {by_chain}, closures {by_count}",
                        sys.generators(),
                        w.points()
                    )
                })?;
                ensure(sys.height_via_chains(&w).unwrap() == by_chain, || {
                    "chain heights disagree".into()
                })?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} invariant subsets agree"))
}

fn c2_group_sequences() -> Outcome {
    let mut by_height: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
    for p in 1..=9 {
        for q in 1..=(10 - p) {
            let sym = realize_group_sequence(p, q).unwrap();
            let poset = ClosurePoset::of_symbolic(&sym);
            let got = poset.indicator_sequence();
            let want: Vec<usize> = [vec![0; p], vec![1; q]].concat();
            ensure(got.entries() == want.as_slice(), || {
                format!("p={p} q={q}: got {got}")
            })?;
            ensure(got.total_height() == p + q - 1, || {
                format!("p={p} q={q}: height {}", got.total_height())
            })?;
            by_height
                .entry(got.total_height())
                .or_default()
                .insert(want);
        }
    }
    for n in 1..=9 {
        let count = by_height.get(&n).map_or(0, BTreeSet::len);
        ensure(count == n, || format!("height {n}: {count} sequences"))?;
    }
    Ok("p+q <= 10 realized; height n has n sequences for n <= 9".into())
}

fn c3_finite_groups_all_zero() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for m in 1..=6 {
        let perms = permutations(m);
        for p in &perms {
            let s = seq(&group(vec![p.clone()]));
            ensure(s.iter().all(|&e| e == 0), || format!("{p:?} gives {s:?}"))?;
        }
        for _ in 0..1000 {
            let gens: Vec<Vec<usize>> = (0..2)
                .map(|_| perms.choose(&mut rng).unwrap().clone())
                .collect();
            let s = seq(&group(gens.clone()));
            ensure(s.iter().all(|&e| e == 0), || {
                format!("{gens:?} gives {s:?}")
            })?;
        }
    }
    Ok("all permutations and 1000 generator pairs per size, m <= 6".into())
}

fn c4_selfmap_step_sequences() -> Outcome {
    let mut summary = Vec::new();
    for m in 1..=5 {
        let mut realized = BTreeSet::new();
        for f in self_maps(m) {
            let s = seq(&monoid(f.clone()));
            ensure(
                s[0] == 0 && s.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1),
                || format!("{f:?} gives {s:?}"),
            )?;
            if s.len() == m {
                realized.insert(s);
            }
        }
        let n = m - 1;
        let listed: BTreeSet<Vec<usize>> = enumerate_step_sequences(n)
            .unwrap()
            .into_iter()
            .map(|s| s.entries().to_vec())
            .collect();
        let oracle = brute_step_sequences(n);
        ensure(listed == oracle, || {
            format!("n={n}: enumeration differs from brute force")
        })?;
        ensure(realized == oracle, || {
            format!("n={n}: realized {realized:?}")
        })?;
        ensure(realized.len() == 1 << n, || {
            format!("n={n}: {} sequences", realized.len())
        })?;
        summary.push(format!("{}=2^{n}", realized.len()));
    }
    Ok(summary.join(" "))
}

fn c5_classification() -> Outcome {
    let mut corpus = Vec::new();
    for p in 1..=8 {
        for q in 0..=(8 - p) {
            let poset = ClosurePoset::of_symbolic(&SymbolicFortSystem::new(p, q).unwrap());
            let want = GroupClassification {
                alpha: p - 1,
                beta: q + 1,
            };
            let got = classify_group_topology(&poset);
            ensure(got == Some(want), || format!("p={p} q={q}: {got:?}"))?;
            corpus.push(poset);
        }
    }
    for (i, a) in corpus.iter().enumerate() {
        for b in &corpus[i..] {
            let same = a.indicator_sequence() == b.indicator_sequence();
            let iso = poset_isomorphic(a, b).is_some();
            ensure(same == iso, || {
                format!(
                    "{} vs {}: same sequence {same}, isomorphic {iso}",
                    a.indicator_sequence(),
                    b.indicator_sequence()
                )
            })?;
        }
    }
    Ok(format!("{} systems, all pairs consistent", corpus.len()))
}

fn c6_reduction() -> Outcome {
    let mut corpus = Vec::new();
    for m in 1..=5 {
        corpus.extend(
            self_maps(m)
                .into_iter()
                .map(|f| ClosurePoset::of_finite(&monoid(f))),
        );
        corpus.extend(
            permutations(m)
                .into_iter()
                .map(|p| ClosurePoset::of_finite(&group(vec![p]))),
        );
    }
    for p in 1..=6 {
        for q in 0..=(6 - p) {
            corpus.push(ClosurePoset::of_symbolic(
                &SymbolicFortSystem::new(p, q).unwrap(),
            ));
        }
    }
    for poset in &corpus {
        let sys = reduce_to_finite(poset).unwrap();
        for k in 0..poset.len() {
            ensure(sys.orbit(k).unwrap() == poset.downset(k), || {
                format!("{:?}: orbit({k}) differs from its downset", poset.labels())
            })?;
        }
        ensure(
            poset_isomorphic(&ClosurePoset::of_finite(&sys), poset).is_some(),
            || format!("{:?}: round trip not isomorphic", poset.labels()),
        )?;
    }
    Ok(format!("{} posets round-trip", corpus.len()))
}

fn c7_counterexample() -> Outcome {
    let chain =
        ClosurePoset::from_covers(vec!["1".into(), "2".into(), "3".into()], &[(0, 1), (1, 2)])
            .unwrap();
    ensure(classify_group_topology(&chain).is_none(), || {
        "3-chain classified as a group topology".into()
    })?;
    ensure(
        group_sequence_admissible(&[0, 1, 2], Cardinality::CountablyInfinite).is_err()
            && group_sequence_admissible(&[0, 1, 2], Cardinality::Finite(3)).is_err(),
        || "(0,1,2) accepted as a group sequence".into(),
    )?;
    let sys = realize_selfmap_sequence(&StepSequence::new(vec![0, 1, 2]).unwrap());
    let poset = ClosurePoset::of_finite(&sys);
    let w = poset_isomorphic(&poset, &chain).ok_or("witness not isomorphic to the 3-chain")?;
    let opens: BTreeSet<Vec<String>> = poset
        .enumerate_opens()
        .unwrap()
        .into_iter()
        .map(|o| {
            o.into_iter()
                .map(|v| chain.labels()[w[v]].clone())
                .collect()
        })
        .collect();
    let tau: BTreeSet<Vec<String>> = [vec![], vec!["1"], vec!["1", "2"], vec!["1", "2", "3"]]
        .into_iter()
        .map(|o| o.into_iter().map(String::from).collect())
        .collect();
    ensure(opens == tau, || format!("opens {opens:?}"))?;
    Ok(format!(
        "witness {:?}, opens ∅,{{1}},{{1,2}},{{1,2,3}}",
        sys.generators()[0]
    ))
}

fn c8_height_set() -> Outcome {
    for m in 1..=6 {
        let heights: BTreeSet<usize> = permutations(m)
            .into_iter()
            .map(|p| {
                ClosurePoset::of_finite(&group(vec![p]))
                    .indicator_sequence()
                    .total_height()
            })
            .collect();
        ensure(heights == (0..m).collect(), || {
            format!("m={m}: heights {heights:?}")
        })?;
    }
    for i in 1..=10 {
        let sym = realize_group_sequence(i, 1).unwrap();
        let h = ClosurePoset::of_symbolic(&sym)
            .indicator_sequence()
            .total_height();
        ensure(h == i, || format!("countable i={i}: height {h}"))?;
    }
    Ok("finite {0..m-1} for m <= 6; countable 1..10".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        (
            "1 height by chains = height by closure count",
            c1_height_equivalence,
            60,
        ),
        (
            "2 group witnesses and n sequences per height",
            c2_group_sequences,
            1,
        ),
        (
            "3 finite group actions are all-zero",
            c3_finite_groups_all_zero,
            120,
        ),
        (
            "4 self-map sequences are the 2^n step sequences",
            c4_selfmap_step_sequences,
            60,
        ),
        (
            "5 group classification and sequence <=> topology",
            c5_classification,
            5,
        ),
        (
            "6 reduction round trip and orbit = downset",
            c6_reduction,
            60,
        ),
        ("7 the 3-chain counterexample", c7_counterexample, 1),
        ("8 single-homeomorphism height sets", c8_height_set, 120),
    ];
    let mut failures = Vec::new();
    for (name, run, budget) in criteria {
        let started = Instant::now();
        let outcome = run();
        let elapsed = started.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(budget) => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget}s"))
            }
            other => other,
        };
        match &outcome {
            Ok(detail) => println!("PASS  {name}  [{elapsed:.2?}]  {detail}"),
            Err(why) => {
                println!("FAIL  {name}  [{elapsed:.2?}]  {why}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
