//! Exhaustive and constructive checks of the classification results.
//!
//! Every check enumerates a bounded family of systems, compares two
//! independent computations (or a construction against its claimed
//! invariant) and returns a [`CheckReport`]. Enumeration is split across the
//! current rayon pool; `find_map_first` keeps the reported counterexample
//! deterministic regardless of worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::action::{FiniteDynSystem, InvariantSubset, Kind};
use crate::constructors::{
    enumerate_step_sequences, group_sequence_admissible, realize_finite_height_perm,
    realize_group_sequence, realize_selfmap_sequence, reduce_to_finite, valid_step_sequence,
    StepSequence,
};
use crate::format::SystemFile;
use crate::indicator::{
    classify_group_topology, make_group_canonical_space, poset_isomorphic, ClosurePoset,
    GroupClassification, IndicatorSequence,
};
use crate::symbolic::{Cardinality, SymbolicFortSystem};

pub const DEFAULT_GROUP_SAMPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{name} = {value} is outside the supported range {min}..={max}")]
    BoundOutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

fn bound(name: &'static str, value: usize, min: usize, max: usize) -> Result<(), VerifyError> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(VerifyError::BoundOutOfRange {
            name,
            value,
            min,
            max,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
        })
    }
}

/// The offending input of a failed check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub system: Option<SystemFile>,
    pub expected: String,
    pub actual: String,
}

/// A height that is either computed or known to be infinite from the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HeightValue {
    Finite(usize),
    InfiniteByConstruction { witness: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeightObservation {
    pub model: String,
    pub heights: Vec<HeightValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    pub findings: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub heights: Vec<HeightObservation>,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
}

fn secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl CheckReport {
    fn new(name: &str, parameters: &[(&str, usize)], started: Instant) -> Self {
        CheckReport {
            name: name.to_string(),
            parameters: parameters
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            verdict: Verdict::Pass,
            counterexample: None,
            findings: Vec::new(),
            heights: Vec::new(),
            elapsed: started.elapsed(),
        }
    }

    fn finish(mut self, failure: Option<Counterexample>, started: Instant) -> Self {
        if let Some(c) = failure {
            self.verdict = Verdict::Fail;
            self.counterexample = Some(c);
        }
        self.elapsed = started.elapsed();
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

fn failure(
    system: Option<SystemFile>,
    expected: impl fmt::Display,
    actual: impl fmt::Display,
) -> Counterexample {
    Counterexample {
        system,
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

/// The `index`-th self-map of `0..m` in base-`m` order.
fn self_map(m: usize, mut index: usize) -> Vec<usize> {
    let mut map = vec![0; m];
    for slot in map.iter_mut().rev() {
        *slot = index % m;
        index /= m;
    }
    map
}

fn self_map_count(m: usize) -> usize {
    m.pow(m as u32)
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    (0..m).permutations(m).collect()
}

/// Every single-generator system on `1..=max_size` points: all self-maps as
/// monoids, then all permutations as groups.
fn single_generator_systems(max_size: usize) -> Vec<FiniteDynSystem> {
    let mut out = Vec::new();
    for m in 1..=max_size {
        out.extend(
            (0..self_map_count(m))
                .into_par_iter()
                .map(|k| {
                    FiniteDynSystem::new(Kind::Monoid, m, vec![self_map(m, k)])
                        .expect("valid self-map")
                })
                .collect::<Vec<_>>(),
        );
        out.extend(
            permutations(m)
                .into_iter()
                .map(|p| FiniteDynSystem::new(Kind::Group, m, vec![p]).expect("valid permutation")),
        );
    }
    out
}

fn seq_of(sys: &FiniteDynSystem) -> IndicatorSequence {
    ClosurePoset::of_finite(sys).indicator_sequence()
}

fn zeros_then_ones(p: usize, q: usize) -> IndicatorSequence {
    IndicatorSequence::new(
        std::iter::repeat_n(0, p)
            .chain(std::iter::repeat_n(1, q))
            .collect(),
    )
}

/// Longest-chain height against closure-count height, for every invariant
/// subset of every single-generator system with at most `max_size` points.
pub fn check_remark_height_equivalence(max_size: usize) -> Result<CheckReport, VerifyError> {
    check_remark_with(max_size, |sys, w| {
        sys.height_via_closures(w)
            .expect("subset came from the oracle")
    })
}

fn check_remark_with<F>(max_size: usize, closure_height: F) -> Result<CheckReport, VerifyError>
where
    F: Fn(&FiniteDynSystem, &InvariantSubset) -> usize + Sync,
{
    bound("max_size", max_size, 1, 6)?;
    let started = Instant::now();
    let systems = single_generator_systems(max_size);
    let subsets_seen: usize = systems
        .par_iter()
        .map(|s| s.chain_heights().expect("size within oracle guard").len())
        .sum();
    let bad = systems.par_iter().find_map_first(|sys| {
        for (points, by_chain) in sys.chain_heights().expect("size within oracle guard") {
            let w =
                InvariantSubset::new(sys, points.clone()).expect("oracle subsets are invariant");
            let by_count = closure_height(sys, &w);
            if by_count != by_chain {
                return Some(failure(
                    Some(sys.into()),
                    format!("height of {points:?} by chains = {by_chain}"),
                    format!("closure count gives {by_count}"),
                ));
            }
        }
        None
    });
    let mut report = CheckReport::new("heights", &[("max_size", max_size)], started);
    report.findings.push(format!(
        "{} systems, {} invariant subsets compared",
        systems.len(),
        subsets_seen
    ));
    Ok(report.finish(bad, started))
}

/// Group actions: symbolic witnesses give `0^p 1^q`, each height `n` admits
/// exactly `n` such sequences, and finite group actions are all-zero.
pub fn check_group_sequence_charac(
    max_pq: usize,
    max_finite: usize,
    samples: usize,
    seed: u64,
) -> Result<CheckReport, VerifyError> {
    bound("max_pq", max_pq, 2, 10)?;
    bound("max_finite", max_finite, 1, 6)?;
    let started = Instant::now();
    let mut report = CheckReport::new(
        "group",
        &[
            ("max_pq", max_pq),
            ("max_finite", max_finite),
            ("samples", samples),
            ("seed", seed as usize),
        ],
        started,
    );

    // (a) symbolic witnesses, grouped by height for (c)
    let mut by_height: BTreeMap<usize, BTreeSet<IndicatorSequence>> = BTreeMap::new();
    for p in 1..max_pq {
        for q in 1..=(max_pq - p) {
            let sym = realize_group_sequence(p, q).expect("p, q >= 1");
            let got = ClosurePoset::of_symbolic(&sym).indicator_sequence();
            let want = zeros_then_ones(p, q);
            if got != want || group_sequence_admissible(got.entries(), sym.cardinality()).is_err() {
                return Ok(report.finish(Some(failure(Some((&sym).into()), want, got)), started));
            }
            by_height.entry(got.total_height()).or_default().insert(got);
        }
    }
    for (&n, seqs) in &by_height {
        if seqs.len() != n {
            return Ok(report.finish(
                Some(failure(
                    None,
                    format!("{n} sequences of height {n}"),
                    format!("{} sequences", seqs.len()),
                )),
                started,
            ));
        }
    }
    report.findings.push(format!(
        "sequences per height: {}",
        by_height
            .iter()
            .map(|(n, s)| format!("h{n}={}", s.len()))
            .join(" ")
    ));

    // (b) finite group actions
    for m in 1..=max_finite {
        let perms = permutations(m);
        let single = perms.par_iter().find_map_first(|p| {
            let sys = FiniteDynSystem::new(Kind::Group, m, vec![p.clone()]).expect("permutation");
            all_zero_failure(&sys)
        });
        if single.is_some() {
            return Ok(report.finish(single, started));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(m as u64));
        let pairs: Vec<Vec<Vec<usize>>> = (0..samples)
            .map(|_| {
                (0..2)
                    .map(|_| {
                        let mut g: Vec<usize> = (0..m).collect();
                        g.shuffle(&mut rng);
                        g
                    })
                    .collect()
            })
            .collect();
        let sampled = pairs.into_par_iter().find_map_first(|gens| {
            let sys = FiniteDynSystem::new(Kind::Group, m, gens).expect("permutations");
            all_zero_failure(&sys)
        });
        if sampled.is_some() {
            return Ok(report.finish(sampled, started));
        }
        report.findings.push(format!(
            "m={m}: {} permutations and {samples} generator pairs all-zero",
            perms.len()
        ));
    }
    Ok(report.finish(None, started))
}

fn all_zero_failure(sys: &FiniteDynSystem) -> Option<Counterexample> {
    let seq = seq_of(sys);
    group_sequence_admissible(seq.entries(), Cardinality::Finite(sys.size()))
        .err()
        .map(|why| {
            failure(
                Some(sys.into()),
                "all-zero sequence",
                format!("{seq} ({why})"),
            )
        })
}

/// Single self-maps: every sequence is a step sequence, and on `n + 1` points
/// the sequences with `n + 1` entries are exactly the `2^n` step sequences.
pub fn check_selfmap_charac(max_size: usize) -> Result<CheckReport, VerifyError> {
    bound("max_size", max_size, 1, 6)?;
    let started = Instant::now();
    let mut report = CheckReport::new("selfmap", &[("max_size", max_size)], started);
    for m in 1..=max_size {
        let count = self_map_count(m);
        let bad = (0..count).into_par_iter().find_map_first(|k| {
            let sys =
                FiniteDynSystem::new(Kind::Monoid, m, vec![self_map(m, k)]).expect("self-map");
            let seq = seq_of(&sys);
            (!valid_step_sequence(seq.entries()))
                .then(|| failure(Some((&sys).into()), "a step sequence", seq))
        });
        if bad.is_some() {
            return Ok(report.finish(bad, started));
        }
        let realized: BTreeSet<Vec<usize>> = (0..count)
            .into_par_iter()
            .filter_map(|k| {
                let sys =
                    FiniteDynSystem::new(Kind::Monoid, m, vec![self_map(m, k)]).expect("self-map");
                let seq = seq_of(&sys);
                (seq.len() == m).then(|| seq.entries().to_vec())
            })
            .collect();
        let expected: BTreeSet<Vec<usize>> = enumerate_step_sequences(m - 1)
            .expect("m - 1 <= 5")
            .into_iter()
            .map(|s| s.entries().to_vec())
            .collect();
        if realized != expected {
            let missing: Vec<_> = expected.difference(&realized).collect();
            let extra: Vec<_> = realized.difference(&expected).collect();
            return Ok(report.finish(
                Some(failure(
                    None,
                    format!("{} step sequences of length {m}", expected.len()),
                    format!("missing {missing:?}, unexpected {extra:?}"),
                )),
                started,
            ));
        }
        report.findings.push(format!(
            "m={m}: {count} self-maps, {} = 2^{} sequences of length {m}",
            realized.len(),
            m - 1
        ));
    }
    Ok(report.finish(None, started))
}

/// Symbolic systems classify as `(p-1, q+1)`, and two of them have equal
/// sequences exactly when their posets are isomorphic.
pub fn check_classification(max_pq: usize) -> Result<CheckReport, VerifyError> {
    bound("max_pq", max_pq, 1, 12)?;
    let started = Instant::now();
    let mut report = CheckReport::new("classify", &[("max_pq", max_pq)], started);
    let corpus: Vec<(SymbolicFortSystem, ClosurePoset)> = (1..=max_pq)
        .flat_map(|p| (0..=(max_pq - p)).map(move |q| (p, q)))
        .map(|(p, q)| {
            let sym = SymbolicFortSystem::new(p, q).expect("p >= 1");
            (sym, ClosurePoset::of_symbolic(&sym))
        })
        .collect();
    for (sym, poset) in &corpus {
        let want = GroupClassification {
            alpha: sym.fixed_points() - 1,
            beta: sym.z_lines() + 1,
        };
        let got = classify_group_topology(poset);
        if got != Some(want) {
            let got = got.map_or("not classifiable".to_string(), |g| g.to_string());
            return Ok(report.finish(Some(failure(Some(sym.into()), want, got)), started));
        }
        let canonical = make_group_canonical_space(want.alpha, want.beta).expect("beta >= 1");
        if poset_isomorphic(poset, &canonical).is_none() {
            return Ok(report.finish(
                Some(failure(
                    Some(sym.into()),
                    format!("isomorphic to {want}"),
                    "no isomorphism",
                )),
                started,
            ));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..corpus.len()).tuple_combinations().collect();
    let bad = pairs.par_iter().find_map_first(|&(i, j)| {
        let (a, pa) = &corpus[i];
        let (b, pb) = &corpus[j];
        let same_seq = pa.indicator_sequence() == pb.indicator_sequence();
        let iso = poset_isomorphic(pa, pb).is_some();
        (same_seq != iso).then(|| {
            failure(
                Some(a.into()),
                format!(
                    "equal sequences <=> isomorphic, against {}",
                    SystemFile::from(b).to_json().trim()
                ),
                format!("equal sequences: {same_seq}, isomorphic: {iso}"),
            )
        })
    });
    report.findings.push(format!(
        "{} systems classified, {} pairs compared",
        corpus.len(),
        pairs.len()
    ));
    Ok(report.finish(bad, started))
}

/// The elementary-map reduction reproduces every corpus poset, with each
/// node's orbit equal to its downset.
pub fn check_reduction(max_size: usize, max_pq: usize) -> Result<CheckReport, VerifyError> {
    bound("max_size", max_size, 1, 6)?;
    bound("max_pq", max_pq, 1, 10)?;
    let started = Instant::now();
    let mut report = CheckReport::new(
        "reduce",
        &[("max_size", max_size), ("max_pq", max_pq)],
        started,
    );
    let mut corpus: Vec<(SystemFile, ClosurePoset)> = single_generator_systems(max_size)
        .par_iter()
        .map(|s| (SystemFile::from(s), ClosurePoset::of_finite(s)))
        .collect();
    for p in 1..=max_pq {
        for q in 0..=(max_pq - p) {
            let sym = SymbolicFortSystem::new(p, q).expect("p >= 1");
            corpus.push(((&sym).into(), ClosurePoset::of_symbolic(&sym)));
        }
    }
    let bad = corpus
        .par_iter()
        .find_map_first(|(file, poset)| reduction_failure(file, poset));
    report
        .findings
        .push(format!("{} posets reduced and compared", corpus.len()));
    Ok(report.finish(bad, started))
}

fn reduction_failure(file: &SystemFile, poset: &ClosurePoset) -> Option<Counterexample> {
    let reduced = reduce_to_finite(poset).expect("corpus posets are nonempty");
    for k in 0..poset.len() {
        let orbit = reduced.orbit(k).expect("node index in carrier");
        let down = poset.downset(k);
        if orbit != down {
            return Some(failure(
                Some(file.clone()),
                format!("orbit({k}) = downset {down:?}"),
                format!("{orbit:?}"),
            ));
        }
    }
    let back = ClosurePoset::of_finite(&reduced);
    if poset_isomorphic(&back, poset).is_none() {
        return Some(failure(
            Some(file.clone()),
            "isomorphic round trip",
            "not isomorphic",
        ));
    }
    None
}

/// The three-element chain: not a group indicator topology, `(0,1,2)` is not
/// a group sequence, yet a single self-map realizes both.
pub fn check_counterexample_44() -> CheckReport {
    let started = Instant::now();
    let mut report = CheckReport::new("ce44", &[], started);
    let labels = vec!["1".to_string(), "2".to_string(), "3".to_string()];
    let chain = ClosurePoset::from_covers(labels, &[(0, 1), (1, 2)]).expect("3-chain");
    let chain_file = SystemFile::from(&chain);

    if let Some(c) = classify_group_topology(&chain) {
        return report.finish(
            Some(failure(Some(chain_file), "not classifiable", c)),
            started,
        );
    }
    report
        .findings
        .push("3-chain: not a group indicator topology".into());

    let target = [0, 1, 2];
    for space in [Cardinality::CountablyInfinite, Cardinality::Finite(3)] {
        match group_sequence_admissible(&target, space) {
            Ok(()) => {
                return report.finish(
                    Some(failure(
                        None,
                        "(0,1,2) rejected",
                        format!("accepted for {space:?}"),
                    )),
                    started,
                );
            }
            Err(why) => report
                .findings
                .push(format!("(0,1,2) rejected for {space:?}: {why}")),
        }
    }

    let seq = StepSequence::new(target.to_vec()).expect("step sequence");
    let witness = realize_selfmap_sequence(&seq);
    let witness_poset = ClosurePoset::of_finite(&witness);
    let Some(map) = poset_isomorphic(&witness_poset, &chain) else {
        return report.finish(
            Some(failure(
                Some((&witness).into()),
                "isomorphic to the 3-chain",
                "not isomorphic",
            )),
            started,
        );
    };
    // opens must correspond under the witness map
    let mapped: BTreeSet<BTreeSet<usize>> = witness_poset
        .enumerate_opens()
        .expect("3 nodes")
        .into_iter()
        .map(|o| o.into_iter().map(|v| map[v]).collect())
        .collect();
    let tau: BTreeSet<BTreeSet<usize>> = [vec![], vec![0], vec![0, 1], vec![0, 1, 2]]
        .into_iter()
        .map(|v| v.into_iter().collect())
        .collect();
    if mapped != tau {
        return report.finish(
            Some(failure(
                Some((&witness).into()),
                format!("{tau:?}"),
                format!("{mapped:?}"),
            )),
            started,
        );
    }
    report.findings.push(format!(
        "self-map {:?} realizes (0,1,2); closures {:?} map to chain nodes {:?}; opens ∅,{{1}},{{1,2}},{{1,2,3}}",
        witness.generators()[0],
        witness_poset.labels(),
        map
    ));
    report.finish(None, started)
}

/// Heights reachable by a single homeomorphism: `{0..m-1}` on `m` points,
/// every positive height plus infinity on a countably infinite Fort space.
pub fn check_height_set_a(
    max_m: usize,
    max_i_countable: usize,
) -> Result<CheckReport, VerifyError> {
    bound("max_m", max_m, 1, 6)?;
    bound("max_i_countable", max_i_countable, 1, 64)?;
    let started = Instant::now();
    let mut report = CheckReport::new(
        "height-set",
        &[("max_m", max_m), ("max_i_countable", max_i_countable)],
        started,
    );
    for m in 1..=max_m {
        let achieved: BTreeSet<usize> = permutations(m)
            .par_iter()
            .map(|p| {
                let sys =
                    FiniteDynSystem::new(Kind::Group, m, vec![p.clone()]).expect("permutation");
                seq_of(&sys).total_height()
            })
            .collect();
        let expected: BTreeSet<usize> = (0..m).collect();
        if achieved != expected {
            return Ok(report.finish(
                Some(failure(
                    None,
                    format!("{expected:?}"),
                    format!("{achieved:?}"),
                )),
                started,
            ));
        }
        for i in 0..m {
            let sys = realize_finite_height_perm(m, i).expect("i < m");
            let seq = seq_of(&sys);
            if seq.total_height() != i || seq.entries().iter().any(|&e| e != 0) {
                return Ok(report.finish(
                    Some(failure(
                        Some((&sys).into()),
                        format!("height {i}, all zeros"),
                        seq,
                    )),
                    started,
                ));
            }
        }
        report.heights.push(HeightObservation {
            model: format!("permutations of {m} points"),
            heights: achieved.into_iter().map(HeightValue::Finite).collect(),
        });
    }

    let mut countable = Vec::new();
    for i in 1..=max_i_countable {
        let sym = realize_group_sequence(i, 1).expect("i >= 1");
        let h = ClosurePoset::of_symbolic(&sym)
            .indicator_sequence()
            .total_height();
        if h != i {
            return Ok(report.finish(
                Some(failure(Some((&sym).into()), format!("height {i}"), h)),
                started,
            ));
        }
        countable.push(HeightValue::Finite(h));
    }
    countable.push(HeightValue::InfiniteByConstruction {
        witness: "identity on a countably infinite Fort space: every finite set of points is closed and invariant, \
                  so chains of closed invariant sets are unbounded"
            .into(),
    });
    report.heights.push(HeightObservation {
        model: "countably infinite Fort space, i fixed points and one shifted line".into(),
        heights: countable,
    });
    Ok(report.finish(None, started))
}

/// Groups of checks selectable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Heights,
    Group,
    Selfmap,
    Classify,
    Reduce,
    Ce44,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Heights,
        Suite::Group,
        Suite::Selfmap,
        Suite::Classify,
        Suite::Reduce,
        Suite::Ce44,
    ];
}

/// Options shared by [`run_suites`]. `max_size` overrides each suite's
/// default carrier bound.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub max_size: Option<usize>,
    pub seed: u64,
    pub jobs: usize,
    pub group_samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_size: None,
            seed: 0,
            jobs: 0,
            group_samples: DEFAULT_GROUP_SAMPLES,
        }
    }
}

/// Runs the suites in order inside a pool of `jobs` workers (0 = all cores).
pub fn run_suites(suites: &[Suite], opts: &SuiteOptions) -> Result<Vec<CheckReport>, VerifyError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    pool.install(|| {
        let mut reports = Vec::new();
        for suite in suites {
            match suite {
                Suite::Heights => {
                    reports.push(check_remark_height_equivalence(opts.max_size.unwrap_or(5))?);
                    reports.push(check_height_set_a(opts.max_size.unwrap_or(6), 10)?);
                }
                Suite::Group => reports.push(check_group_sequence_charac(
                    10,
                    opts.max_size.unwrap_or(6),
                    opts.group_samples,
                    opts.seed,
                )?),
                Suite::Selfmap => reports.push(check_selfmap_charac(opts.max_size.unwrap_or(5))?),
                Suite::Classify => reports.push(check_classification(8)?),
                Suite::Reduce => reports.push(check_reduction(opts.max_size.unwrap_or(5), 6)?),
                Suite::Ce44 => reports.push(check_counterexample_44()),
            }
        }
        Ok(reports)
    })
}

/// Which check backs each result, and how it fared.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageRow {
    pub result: &'static str,
    pub checks: Vec<&'static str>,
    /// `None` when none of the backing checks ran.
    pub verdict: Option<Verdict>,
}

const COVERAGE: &[(&str, &[&str])] = &[
    (
        "height by longest chain = number of orbit closures - 1",
        &["heights"],
    ),
    (
        "infinite orbit closures adjoin b and have height 1",
        &["group", "classify"],
    ),
    (
        "group sequences on an infinite Fort space are 0..0 1..1",
        &["group"],
    ),
    ("height n admits exactly n group sequences", &["group"]),
    ("group sequences on a finite space are all zero", &["group"]),
    (
        "group indicator topology is Y_alpha ⊔ Z_beta",
        &["classify"],
    ),
    (
        "equal group sequences <=> homeomorphic indicator topologies",
        &["classify"],
    ),
    (
        "single-homeomorphism heights: {0..|X|-1} finite, {1,2,..,∞} countable",
        &["height-set"],
    ),
    (
        "finite indicator topologies come from finite discrete systems",
        &["reduce"],
    ),
    (
        "indicator sequences transfer to finite discrete systems",
        &["reduce"],
    ),
    (
        "single self-map sequences are the 2^n step sequences",
        &["selfmap"],
    ),
    (
        "the 3-chain separates group and semigroup topologies",
        &["ce44"],
    ),
];

pub fn coverage_matrix(reports: &[CheckReport]) -> Vec<CoverageRow> {
    COVERAGE
        .iter()
        .map(|&(result, checks)| {
            let relevant: Vec<&CheckReport> = reports
                .iter()
                .filter(|r| checks.contains(&r.name.as_str()))
                .collect();
            let verdict = if relevant.is_empty() {
                None
            } else if relevant.iter().all(|r| r.passed()) {
                Some(Verdict::Pass)
            } else {
                Some(Verdict::Fail)
            };
            CoverageRow {
                result,
                checks: checks.to_vec(),
                verdict,
            }
        })
        .collect()
}
