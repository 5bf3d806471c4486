//! Witness systems for realizable indicator sequences and topologies.

use std::fmt;

use thiserror::Error;

use crate::action::{FiniteDynSystem, Kind};
use crate::indicator::{ClosurePoset, IndicatorSequence};
use crate::symbolic::{Cardinality, SymbolicFortSystem};

/// Largest `n` accepted by [`enumerate_step_sequences`].
pub const ENUMERATE_MAX_N: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("invalid step sequence {0:?}: must start at 0 and rise by 0 or 1 each step")]
    InvalidStepSequence(Vec<usize>),
    #[error("n = {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("cannot reduce an empty poset")]
    EmptyPoset,
}

/// A sequence starting at 0 whose consecutive differences are 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StepSequence(Vec<usize>);

pub fn valid_step_sequence(entries: &[usize]) -> bool {
    entries.first() == Some(&0) && entries.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1)
}

impl StepSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self, ConstructError> {
        if valid_step_sequence(&entries) {
            Ok(StepSequence(entries))
        } else {
            Err(ConstructError::InvalidStepSequence(entries))
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

impl TryFrom<Vec<usize>> for StepSequence {
    type Error = ConstructError;

    fn try_from(entries: Vec<usize>) -> Result<Self, Self::Error> {
        StepSequence::new(entries)
    }
}

impl From<StepSequence> for IndicatorSequence {
    fn from(s: StepSequence) -> Self {
        IndicatorSequence::new(s.0)
    }
}

impl fmt::Display for StepSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        IndicatorSequence::new(self.0.clone()).fmt(f)
    }
}

/// `p` fixed points (the first one is `b`) and `q` shifted lines.
/// The indicator sequence is `p` zeros followed by `q` ones.
pub fn realize_group_sequence(p: usize, q: usize) -> Result<SymbolicFortSystem, ConstructError> {
    if p < 1 || q < 1 {
        return Err(ConstructError::BadParameters(format!(
            "need p >= 1 and q >= 1, got p = {p}, q = {q}"
        )));
    }
    SymbolicFortSystem::new(p, q).map_err(|e| ConstructError::BadParameters(e.to_string()))
}

/// One permutation of `m` points that fixes `0..i` and cycles `i..m`,
/// giving height `i`.
pub fn realize_finite_height_perm(m: usize, i: usize) -> Result<FiniteDynSystem, ConstructError> {
    if m == 0 || i >= m {
        return Err(ConstructError::BadParameters(format!(
            "need 0 <= i < m, got m = {m}, i = {i}"
        )));
    }
    let g: Vec<usize> = (0..m)
        .map(|x| match x {
            x if x < i => x,
            x if x + 1 < m => x + 1,
            _ => i,
        })
        .collect();
    FiniteDynSystem::new(Kind::Group, m, vec![g])
        .map_err(|e| ConstructError::BadParameters(e.to_string()))
}

/// A single self-map on `n + 1` points realizing `seq`.
///
/// Point `i` is fixed when `seq[i] == 0`; otherwise it is sent to the last
/// index whose entry is strictly smaller than `seq[i]`. Every map goes to a
/// lower index, so the orbits are nested tails and the heights come out as
/// the entries.
pub fn realize_selfmap_sequence(seq: &StepSequence) -> FiniteDynSystem {
    let p = seq.entries();
    let g: Vec<usize> = (0..p.len())
        .map(|i| {
            if p[i] == 0 {
                i
            } else {
                (0..i)
                    .rev()
                    .find(|&j| p[j] < p[i])
                    .expect("p[0] = 0 < p[i]")
            }
        })
        .collect();
    FiniteDynSystem::new(Kind::Monoid, p.len(), vec![g]).expect("images are lower indices")
}

/// Every step sequence of length `n + 1`, lexicographically; there are `2^n`.
pub fn enumerate_step_sequences(n: usize) -> Result<Vec<StepSequence>, ConstructError> {
    if n > ENUMERATE_MAX_N {
        return Err(ConstructError::TooLarge {
            n,
            limit: ENUMERATE_MAX_N,
        });
    }
    // Bit k (from the most significant end) is the step between entries k and k+1,
    // so counting upward yields lexicographic order.
    Ok((0u32..(1u32 << n))
        .map(|bits| {
            let mut entries = Vec::with_capacity(n + 1);
            entries.push(0);
            let mut cur = 0;
            for k in (0..n).rev() {
                cur += ((bits >> k) & 1) as usize;
                entries.push(cur);
            }
            StepSequence(entries)
        })
        .collect())
}

/// A monoid on the node set whose closure poset is isomorphic to `poset`.
///
/// Generators are the identity plus, for each strict pair `w < k`, the map
/// sending `k` to `w` and fixing everything else. Each generator moves a
/// node weakly downward and every strict pair has one, so `orbit(k)` is
/// exactly the downset of `k`.
pub fn reduce_to_finite(poset: &ClosurePoset) -> Result<FiniteDynSystem, ConstructError> {
    let n = poset.len();
    if n == 0 {
        return Err(ConstructError::EmptyPoset);
    }
    let identity: Vec<usize> = (0..n).collect();
    let mut generators = vec![identity.clone()];
    for k in 0..n {
        for w in 0..n {
            if w != k && poset.leq(w, k) {
                let mut map = identity.clone();
                map[k] = w;
                generators.push(map);
            }
        }
    }
    Ok(FiniteDynSystem::new(Kind::Monoid, n, generators).expect("maps stay on the node set"))
}

/// Why a sequence cannot come from a group action on a Fort space.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupSequenceRejection {
    #[error("sequence is empty")]
    Empty,
    #[error("entry {entry} at position {position} is not in {{0,1}}")]
    EntryOutOfRange { position: usize, entry: usize },
    #[error("entry {entry} at position {position} is nonzero but the space is finite")]
    NonzeroOnFinite { position: usize, entry: usize },
    #[error("sequence is not nondecreasing")]
    NotSorted,
    #[error("an infinite space needs first entry 0 and last entry 1")]
    BadEnds,
}

/// Membership in the set of indicator sequences of group actions on a Fort
/// space of the given size: all zeros when finite, and `0..0 1..1` with at
/// least one of each when infinite.
pub fn group_sequence_admissible(
    entries: &[usize],
    space: Cardinality,
) -> Result<(), GroupSequenceRejection> {
    if entries.is_empty() {
        return Err(GroupSequenceRejection::Empty);
    }
    match space {
        Cardinality::Finite(_) => {
            if let Some((position, &entry)) = entries.iter().enumerate().find(|(_, &e)| e != 0) {
                return Err(GroupSequenceRejection::NonzeroOnFinite { position, entry });
            }
        }
        Cardinality::CountablyInfinite => {
            if let Some((position, &entry)) = entries.iter().enumerate().find(|(_, &e)| e > 1) {
                return Err(GroupSequenceRejection::EntryOutOfRange { position, entry });
            }
            if entries.windows(2).any(|w| w[0] > w[1]) {
                return Err(GroupSequenceRejection::NotSorted);
            }
            if entries[0] != 0 || entries[entries.len() - 1] != 1 {
                return Err(GroupSequenceRejection::BadEnds);
            }
        }
    }
    Ok(())
}
