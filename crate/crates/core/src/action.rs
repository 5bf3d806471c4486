//! Finite transformation semigroups and groups.
//!
//! A [`FiniteDynSystem`] is a carrier `0..size` with a list of generator
//! self-maps. The acting monoid is everything the generators produce under
//! composition, with the identity adjoined; for [`Kind::Group`] the inverse
//! maps are adjoined as well. Finite carriers are discrete, so an orbit is its
//! own closure.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A set of carrier points. `BTreeSet` ordering doubles as the
/// lexicographic membership order used when sorting closures.
pub type PointSet = BTreeSet<usize>;

/// Carriers above this size are refused by the subset-enumeration oracle.
pub const ORACLE_MAX_SIZE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("carrier must have at least one point")]
    EmptyCarrier,
    #[error("a system needs at least one generator")]
    NoGenerators,
    #[error("generator {generator} has length {len}, expected {size}")]
    WrongLength {
        generator: usize,
        len: usize,
        size: usize,
    },
    #[error("generator {generator} maps {point} to {image}, outside the carrier 0..{size}")]
    OutOfRangeEntry {
        generator: usize,
        point: usize,
        image: usize,
        size: usize,
    },
    #[error("generator {generator} is not a bijection but the system is a group")]
    NonBijectiveGroupGenerator { generator: usize },
    #[error("point {point} is outside the carrier 0..{size}")]
    PointOutOfRange { point: usize, size: usize },
    #[error("subset is empty or not invariant under the generators")]
    NotInvariant,
    #[error("carrier of size {size} exceeds the subset oracle limit {limit}")]
    CarrierTooLargeForOracle { size: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Group,
    Monoid,
}

/// A finite carrier with generator self-maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteDynSystem {
    size: usize,
    generators: Vec<Vec<usize>>,
    kind: Kind,
    // Inverse permutations, populated only for groups.
    inverses: Vec<Vec<usize>>,
}

/// Check a raw description against the system invariants.
pub fn validate_system(
    kind: Kind,
    size: usize,
    generators: &[Vec<usize>],
) -> Result<(), ActionError> {
    if size == 0 {
        return Err(ActionError::EmptyCarrier);
    }
    if generators.is_empty() {
        return Err(ActionError::NoGenerators);
    }
    for (gi, map) in generators.iter().enumerate() {
        if map.len() != size {
            return Err(ActionError::WrongLength {
                generator: gi,
                len: map.len(),
                size,
            });
        }
        if let Some((point, &image)) = map.iter().enumerate().find(|(_, &y)| y >= size) {
            return Err(ActionError::OutOfRangeEntry {
                generator: gi,
                point,
                image,
                size,
            });
        }
    }
    if kind == Kind::Group {
        for (gi, map) in generators.iter().enumerate() {
            let mut hit = vec![false; size];
            for &y in map {
                if std::mem::replace(&mut hit[y], true) {
                    return Err(ActionError::NonBijectiveGroupGenerator { generator: gi });
                }
            }
        }
    }
    Ok(())
}

impl FiniteDynSystem {
    pub fn new(kind: Kind, size: usize, generators: Vec<Vec<usize>>) -> Result<Self, ActionError> {
        validate_system(kind, size, &generators)?;
        let inverses = match kind {
            Kind::Group => generators
                .iter()
                .map(|map| {
                    let mut inv = vec![0; size];
                    for (x, &y) in map.iter().enumerate() {
                        inv[y] = x;
                    }
                    inv
                })
                .collect(),
            Kind::Monoid => Vec::new(),
        };
        Ok(FiniteDynSystem {
            size,
            generators,
            kind,
            inverses,
        })
    }

    /// The identity action on `size` points.
    pub fn identity(size: usize) -> Result<Self, ActionError> {
        Self::new(Kind::Group, size, vec![(0..size).collect()])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    fn check_point(&self, x: usize) -> Result<(), ActionError> {
        if x < self.size {
            Ok(())
        } else {
            Err(ActionError::PointOutOfRange {
                point: x,
                size: self.size,
            })
        }
    }

    /// Images of `x` under every generator (and inverse, for groups).
    fn successors(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.generators
            .iter()
            .chain(self.inverses.iter())
            .map(move |map| map[x])
    }

    /// Everything reachable from `x`; always contains `x`.
    pub fn orbit(&self, x: usize) -> Result<PointSet, ActionError> {
        self.check_point(x)?;
        Ok(self.orbit_unchecked(x))
    }

    fn orbit_unchecked(&self, x: usize) -> PointSet {
        let mut seen = vec![false; self.size];
        let mut queue = VecDeque::from([x]);
        seen[x] = true;
        while let Some(y) = queue.pop_front() {
            for z in self.successors(y) {
                if !seen[z] {
                    seen[z] = true;
                    queue.push_back(z);
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter_map(|(i, &s)| s.then_some(i))
            .collect()
    }

    /// `orbit(x)` for every point, indexed by point.
    pub fn orbits(&self) -> Vec<PointSet> {
        (0..self.size).map(|x| self.orbit_unchecked(x)).collect()
    }

    /// Distinct orbit closures, sorted by size and then by membership.
    pub fn all_orbit_closures(&self) -> Vec<PointSet> {
        let mut closures = self.orbits();
        sort_closures(&mut closures);
        closures
    }

    /// Whether `points` is nonempty and mapped into itself by every generator.
    pub fn is_invariant(&self, points: &PointSet) -> bool {
        !points.is_empty()
            && points
                .iter()
                .all(|&x| x < self.size && self.successors(x).all(|y| points.contains(&y)))
    }

    /// Brute-force list of every invariant subset, sorted like closures.
    pub fn invariant_subsets(&self) -> Result<Vec<InvariantSubset>, ActionError> {
        let masks = self.invariant_masks()?;
        let mut sets: Vec<PointSet> = masks.iter().map(|&m| mask_to_set(m)).collect();
        sort_closures(&mut sets);
        Ok(sets.into_iter().map(InvariantSubset).collect())
    }

    fn image_masks(&self) -> Vec<u32> {
        // image_masks[x] = bitmask of the one-step successors of x
        (0..self.size)
            .map(|x| self.successors(x).fold(0u32, |acc, y| acc | (1 << y)))
            .collect()
    }

    fn invariant_masks(&self) -> Result<Vec<u32>, ActionError> {
        if self.size > ORACLE_MAX_SIZE {
            return Err(ActionError::CarrierTooLargeForOracle {
                size: self.size,
                limit: ORACLE_MAX_SIZE,
            });
        }
        let step = self.image_masks();
        let full: u32 = (1u32 << self.size) - 1;
        Ok((1..=full)
            .filter(|&mask| {
                (0..self.size)
                    .filter(|x| mask & (1 << x) != 0)
                    .all(|x| step[x] & !mask == 0)
            })
            .collect())
    }

    /// Longest-chain height of every invariant subset, keyed by bitmask.
    ///
    /// Heights come from a longest-path pass over the containment order of
    /// the invariant subsets; no orbit information is used.
    pub fn chain_heights(&self) -> Result<Vec<(PointSet, usize)>, ActionError> {
        let mut masks = self.invariant_masks()?;
        masks.sort_by_key(|m| m.count_ones());
        let mut height = vec![0usize; masks.len()];
        for i in 0..masks.len() {
            let outer = masks[i];
            for j in 0..i {
                let inner = masks[j];
                if inner != outer && inner & !outer == 0 {
                    height[i] = height[i].max(height[j] + 1);
                }
            }
        }
        Ok(masks
            .into_iter()
            .zip(height)
            .map(|(m, h)| (mask_to_set(m), h))
            .collect())
    }

    /// Height of `w` as the longest strict chain of invariant subsets ending at `w`.
    pub fn height_via_chains(&self, w: &InvariantSubset) -> Result<usize, ActionError> {
        if !self.is_invariant(&w.0) {
            return Err(ActionError::NotInvariant);
        }
        let target = set_to_mask(&w.0);
        let mut below: Vec<u32> = self
            .invariant_masks()?
            .into_iter()
            .filter(|&m| m & !target == 0)
            .collect();
        below.sort_by_key(|m| m.count_ones());
        let mut height = vec![0usize; below.len()];
        for i in 0..below.len() {
            for j in 0..i {
                if below[j] != below[i] && below[j] & !below[i] == 0 {
                    height[i] = height[i].max(height[j] + 1);
                }
            }
        }
        let idx = below
            .iter()
            .position(|&m| m == target)
            .expect("target is invariant");
        Ok(height[idx])
    }

    /// Height of `w` as the number of distinct orbit closures inside it, minus one.
    pub fn height_via_closures(&self, w: &InvariantSubset) -> Result<usize, ActionError> {
        if !self.is_invariant(&w.0) {
            return Err(ActionError::NotInvariant);
        }
        let distinct: BTreeSet<PointSet> = w.0.iter().map(|&y| self.orbit_unchecked(y)).collect();
        Ok(distinct.len() - 1)
    }
}

/// A nonempty subset of the carrier closed under the action.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantSubset(PointSet);

impl InvariantSubset {
    pub fn new(sys: &FiniteDynSystem, points: PointSet) -> Result<Self, ActionError> {
        if let Some(&x) = points.iter().find(|&&x| x >= sys.size) {
            return Err(ActionError::PointOutOfRange {
                point: x,
                size: sys.size,
            });
        }
        if sys.is_invariant(&points) {
            Ok(InvariantSubset(points))
        } else {
            Err(ActionError::NotInvariant)
        }
    }

    /// The whole carrier.
    pub fn full(sys: &FiniteDynSystem) -> Self {
        InvariantSubset((0..sys.size).collect())
    }

    pub fn points(&self) -> &PointSet {
        &self.0
    }

    pub fn into_points(self) -> PointSet {
        self.0
    }
}

/// Sort by size then membership, dropping duplicates.
pub fn sort_closures(sets: &mut Vec<PointSet>) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
}

fn mask_to_set(mask: u32) -> PointSet {
    (0..32).filter(|i| mask & (1 << i) != 0).collect()
}

fn set_to_mask(set: &PointSet) -> u32 {
    set.iter().fold(0, |acc, &x| acc | (1 << x))
}
