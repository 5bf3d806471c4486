//! Indicator topologies as finite posets of orbit closures.
//!
//! Nodes are the distinct orbit closures of a system, ordered by inclusion.
//! The open sets of the indicator topology are exactly the down-closed node
//! sets, so two indicator topologies are homeomorphic iff the posets are
//! order-isomorphic. The height of a node is the size of its downset minus
//! one, and the indicator sequence is the sorted list of node heights.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::FiniteDynSystem;
use crate::symbolic::{ClosureSet, SymbolicFortSystem};

/// Upper bound on nodes for [`ClosurePoset::enumerate_opens`].
pub const OPENS_MAX_NODES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndicatorError {
    #[error("poset has no nodes")]
    EmptyPoset,
    #[error("relation matrix must be {n}x{n}")]
    BadMatrix { n: usize },
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("cover [{0}, {1}] references a missing node")]
    BadCover(usize, usize),
    #[error("cover relation contains a cycle through node {0}")]
    CyclicCovers(usize),
    #[error("{n} nodes exceeds the limit of {limit} for open-set enumeration")]
    TooManyNodes { n: usize, limit: usize },
    #[error("beta must be at least 1 (it counts the closure of b)")]
    BadCardinal,
}

/// Where a poset came from.
#[derive(Debug, Clone, Copy)]
pub enum Source<'a> {
    Finite(&'a FiniteDynSystem),
    Symbolic(&'a SymbolicFortSystem),
}

/// Distinct orbit closures ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosurePoset {
    labels: Vec<String>,
    members: Vec<Vec<String>>,
    leq: Vec<Vec<bool>>,
    heights: Vec<usize>,
}

pub fn closure_poset(source: Source<'_>) -> ClosurePoset {
    match source {
        Source::Finite(sys) => ClosurePoset::of_finite(sys),
        Source::Symbolic(sym) => ClosurePoset::of_symbolic(sym),
    }
}

impl ClosurePoset {
    fn build(labels: Vec<String>, members: Vec<Vec<String>>, leq: Vec<Vec<bool>>) -> Self {
        let n = labels.len();
        let heights = (0..n)
            .map(|v| (0..n).filter(|&u| leq[u][v]).count() - 1)
            .collect();
        ClosurePoset {
            labels,
            members,
            leq,
            heights,
        }
    }

    pub fn of_finite(sys: &FiniteDynSystem) -> Self {
        let closures = sys.all_orbit_closures();
        let leq = closures
            .iter()
            .map(|a| closures.iter().map(|b| a.is_subset(b)).collect())
            .collect();
        let members: Vec<Vec<String>> = closures
            .iter()
            .map(|c| c.iter().map(usize::to_string).collect())
            .collect();
        let labels = members
            .iter()
            .map(|m| format!("{{{}}}", m.join(",")))
            .collect();
        Self::build(labels, members, leq)
    }

    pub fn of_symbolic(sym: &SymbolicFortSystem) -> Self {
        let closures = sym.all_closures();
        let leq = closures
            .iter()
            .map(|a| closures.iter().map(|b| a.is_contained_in(b)).collect())
            .collect();
        let members = closures
            .iter()
            .map(|c: &ClosureSet| c.atoms().iter().map(|a| a.to_string()).collect())
            .collect();
        let labels = closures.iter().map(ClosureSet::to_string).collect();
        Self::build(labels, members, leq)
    }

    /// Build from an explicit reflexive order matrix, `leq[i][j]` meaning `i <= j`.
    pub fn from_order(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, IndicatorError> {
        let n = labels.len();
        if n == 0 {
            return Err(IndicatorError::EmptyPoset);
        }
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(IndicatorError::BadMatrix { n });
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(IndicatorError::NotPartialOrder(format!(
                    "node {i} is not <= itself"
                )));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(IndicatorError::NotPartialOrder(format!(
                        "nodes {i} and {j} are mutually below each other"
                    )));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(IndicatorError::NotPartialOrder(format!(
                            "{i} <= {j} <= {k} but not {i} <= {k}"
                        )));
                    }
                }
            }
        }
        let members = labels.iter().map(|l| vec![l.clone()]).collect();
        Ok(Self::build(labels, members, leq))
    }

    /// Build from cover pairs `[i, j]` meaning `i` is covered by `j`.
    pub fn from_covers(
        labels: Vec<String>,
        covers: &[(usize, usize)],
    ) -> Result<Self, IndicatorError> {
        let n = labels.len();
        if n == 0 {
            return Err(IndicatorError::EmptyPoset);
        }
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in covers {
            if i >= n || j >= n {
                return Err(IndicatorError::BadCover(i, j));
            }
            if i == j {
                return Err(IndicatorError::CyclicCovers(i));
            }
            leq[i][j] = true;
        }
        // Warshall closure
        for k in 0..n {
            let through = leq[k].clone();
            for row in leq.iter_mut() {
                if row[k] {
                    for (cell, &reach) in row.iter_mut().zip(&through) {
                        *cell |= reach;
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| (0..n).any(|j| i != j && leq[i][j] && leq[j][i])) {
            return Err(IndicatorError::CyclicCovers(i));
        }
        let members = labels.iter().map(|l| vec![l.clone()]).collect();
        Ok(Self::build(labels, members, leq))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Points (or atoms) belonging to each closure; a bare poset lists the label.
    pub fn members(&self) -> &[Vec<String>] {
        &self.members
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn node_height(&self, v: usize) -> usize {
        self.heights[v]
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn downset(&self, v: usize) -> BTreeSet<usize> {
        (0..self.len()).filter(|&u| self.leq[u][v]).collect()
    }

    pub fn upset(&self, v: usize) -> BTreeSet<usize> {
        (0..self.len()).filter(|&u| self.leq[v][u]).collect()
    }

    pub fn minimal_nodes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.heights[v] == 0).collect()
    }

    /// Cover pairs `(lower, upper)`: the transitive reduction of the order.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j
                    && self.leq[i][j]
                    && !(0..n).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j])
                {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Copy with node `v` moved to position `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> ClosurePoset {
        let n = self.len();
        assert_eq!(perm.len(), n, "permutation length must match node count");
        let mut inverse = vec![0; n];
        for (v, &p) in perm.iter().enumerate() {
            inverse[p] = v;
        }
        let labels = (0..n).map(|p| self.labels[inverse[p]].clone()).collect();
        let members = (0..n).map(|p| self.members[inverse[p]].clone()).collect();
        let leq = (0..n)
            .map(|a| (0..n).map(|b| self.leq[inverse[a]][inverse[b]]).collect())
            .collect();
        Self::build(labels, members, leq)
    }

    pub fn indicator_sequence(&self) -> IndicatorSequence {
        let mut entries = self.heights.clone();
        entries.sort_unstable();
        IndicatorSequence(entries)
    }

    /// Every down-closed node set, sorted by size and then membership.
    pub fn enumerate_opens(&self) -> Result<Vec<BTreeSet<usize>>, IndicatorError> {
        let n = self.len();
        if n > OPENS_MAX_NODES {
            return Err(IndicatorError::TooManyNodes {
                n,
                limit: OPENS_MAX_NODES,
            });
        }
        let below: Vec<u32> = (0..n)
            .map(|v| self.downset(v).iter().fold(0u32, |m, &u| m | (1 << u)))
            .collect();
        let mut opens: Vec<BTreeSet<usize>> = (0u32..(1u32 << n))
            .filter(|&mask| {
                (0..n)
                    .filter(|v| mask & (1 << v) != 0)
                    .all(|v| below[v] & !mask == 0)
            })
            .map(|mask| (0..n).filter(|v| mask & (1 << v) != 0).collect())
            .collect();
        opens.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(opens)
    }
}

/// Whether `opens` is a topology on `0..n`: contains the empty and full sets
/// and is closed under pairwise union and intersection (enough on a finite set).
pub fn is_topology(n: usize, opens: &[BTreeSet<usize>]) -> bool {
    let family: BTreeSet<&BTreeSet<usize>> = opens.iter().collect();
    let full: BTreeSet<usize> = (0..n).collect();
    if !family.contains(&BTreeSet::new()) || !family.contains(&full) {
        return false;
    }
    opens.iter().all(|a| {
        opens.iter().all(|b| {
            let union: BTreeSet<usize> = a.union(b).copied().collect();
            let meet: BTreeSet<usize> = a.intersection(b).copied().collect();
            family.contains(&union) && family.contains(&meet)
        })
    })
}

/// Nondecreasing list of closure heights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct IndicatorSequence(Vec<usize>);

impl IndicatorSequence {
    /// Sorts the entries.
    pub fn new(mut entries: Vec<usize>) -> Self {
        entries.sort_unstable();
        IndicatorSequence(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `h(X,S)`: one less than the number of closures.
    pub fn total_height(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Height of the tallest closure.
    pub fn max_entry(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }
}

impl fmt::Display for IndicatorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse sequence {0:?}: expected comma-separated nonnegative integers")]
pub struct ParseSequenceError(pub String);

/// Parses `0,1,2`, `(0, 1, 2)` and the like. Entries must already be nondecreasing.
pub fn parse_entries(s: &str) -> Result<Vec<usize>, ParseSequenceError> {
    let err = || ParseSequenceError(s.to_string());
    let trimmed = s.trim();
    let inner = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
        (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
        _ => return Err(err()),
    };
    inner
        .split(',')
        .map(|part| part.trim().parse::<usize>().map_err(|_| err()))
        .collect()
}

impl FromStr for IndicatorSequence {
    type Err = ParseSequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries = parse_entries(s)?;
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(ParseSequenceError(s.to_string()));
        }
        Ok(IndicatorSequence(entries))
    }
}

impl From<IndicatorSequence> for String {
    fn from(seq: IndicatorSequence) -> String {
        seq.to_string()
    }
}

impl TryFrom<String> for IndicatorSequence {
    type Error = ParseSequenceError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

pub fn indicator_sequence(poset: &ClosurePoset) -> IndicatorSequence {
    poset.indicator_sequence()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Signature {
    down: usize,
    up: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn signatures(p: &ClosurePoset) -> Vec<Signature> {
    let covers = p.cover_edges();
    (0..p.len())
        .map(|v| Signature {
            down: p.downset(v).len(),
            up: p.upset(v).len(),
            lower_covers: covers.iter().filter(|e| e.1 == v).count(),
            upper_covers: covers.iter().filter(|e| e.0 == v).count(),
        })
        .collect()
}

/// Order isomorphism `a -> b`, as `witness[node of a] = node of b`.
///
/// Candidates are first restricted to nodes with the same downset size,
/// upset size and cover degrees, then assigned by backtracking, most
/// constrained node first.
pub fn poset_isomorphic(a: &ClosurePoset, b: &ClosurePoset) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut ms_a = sig_a
        .iter()
        .map(|s| (s.down, s.up, s.lower_covers, s.upper_covers))
        .collect::<Vec<_>>();
    let mut ms_b = sig_b
        .iter()
        .map(|s| (s.down, s.up, s.lower_covers, s.upper_covers))
        .collect::<Vec<_>>();
    ms_a.sort_unstable();
    ms_b.sort_unstable();
    if ms_a != ms_b {
        return None;
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| sig_a[v] == sig_b[w]).collect())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (candidates[v].len(), v));

    let mut witness = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(a, b, &order, &candidates, 0, &mut witness, &mut used) {
        Some(witness)
    } else {
        None
    }
}

fn assign(
    a: &ClosurePoset,
    b: &ClosurePoset,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    witness: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for &w in &candidates[v] {
        if used[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let x = witness[u];
            a.leq(u, v) == b.leq(x, w) && a.leq(v, u) == b.leq(w, x)
        });
        if !consistent {
            continue;
        }
        witness[v] = w;
        used[w] = true;
        if assign(a, b, order, candidates, depth + 1, witness, used) {
            return true;
        }
        used[w] = false;
        witness[v] = usize::MAX;
    }
    false
}

/// The disjoint union of an `alpha`-point discrete space and a `beta`-point
/// space whose nonempty opens are the sets containing point 0.
///
/// As a poset: `alpha` isolated nodes `y0..`, then `z0` below each of
/// `z1..z(beta-1)`.
pub fn make_group_canonical_space(
    alpha: usize,
    beta: usize,
) -> Result<ClosurePoset, IndicatorError> {
    if beta == 0 {
        return Err(IndicatorError::BadCardinal);
    }
    let labels: Vec<String> = (0..alpha)
        .map(|i| format!("y{i}"))
        .chain((0..beta).map(|i| format!("z{i}")))
        .collect();
    let covers: Vec<(usize, usize)> = (1..beta).map(|k| (alpha, alpha + k)).collect();
    ClosurePoset::from_covers(labels, &covers)
}

/// Cardinals of the canonical group form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupClassification {
    pub alpha: usize,
    pub beta: usize,
}

impl fmt::Display for GroupClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y_{} ⊔ Z_{}", self.alpha, self.beta)
    }
}

/// `(alpha, beta)` when the poset has the canonical group shape, else `None`.
pub fn classify_group_topology(p: &ClosurePoset) -> Option<GroupClassification> {
    let n = p.len();
    if n == 0 {
        return None;
    }
    let upper: Vec<usize> = (0..n).filter(|&v| p.node_height(v) > 0).collect();
    if upper.is_empty() {
        // discrete: one node plays {b}, the rest are isolated
        return Some(GroupClassification {
            alpha: n - 1,
            beta: 1,
        });
    }
    let mut bottom = None;
    for &v in &upper {
        let down = p.downset(v);
        if down.len() != 2 {
            return None;
        }
        let below = *down
            .iter()
            .find(|&&u| u != v)
            .expect("downset has two nodes");
        match bottom {
            None => bottom = Some(below),
            Some(b) if b == below => {}
            Some(_) => return None,
        }
    }
    let bottom = bottom.expect("at least one upper node");
    // every other minimal node must be isolated
    let isolated = (0..n)
        .filter(|&v| v != bottom && p.node_height(v) == 0)
        .all(|v| p.upset(v).len() == 1);
    isolated.then(|| GroupClassification {
        alpha: n - 1 - upper.len(),
        beta: upper.len() + 1,
    })
}
