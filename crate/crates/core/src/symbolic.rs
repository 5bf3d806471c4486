//! Symbolic model of infinite Fort systems.
//!
//! The carrier is the particular point `b`, a finite set of further fixed
//! points and a finite number of disjoint bi-infinite lines, with a single
//! generator that shifts every line by one and fixes everything else. The
//! particular point is fixed point 0. With at least one line the carrier is
//! countably infinite and `b` is its only accumulation point, so the closure
//! of a line orbit is the line plus `b`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::{FiniteDynSystem, Kind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("a Fort system needs the particular point (fixed_points >= 1)")]
    NoParticularPoint,
    #[error("invalid point reference {0}")]
    BadReference(PointRef),
}

/// Size of the carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cardinality {
    Finite(usize),
    CountablyInfinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolicFortSystem {
    fixed_points: usize,
    z_lines: usize,
}

/// A point of a symbolic system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointRef {
    /// The particular point.
    B,
    /// Fixed point `j`, with `1 <= j < fixed_points`.
    Fixed(usize),
    /// Point at offset `n` on line `i`.
    LinePoint(usize, i64),
}

impl fmt::Display for PointRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointRef::B => write!(f, "b"),
            PointRef::Fixed(j) => write!(f, "x{j}"),
            PointRef::LinePoint(i, n) => write!(f, "line{i}[{n}]"),
        }
    }
}

/// Building blocks of a symbolic closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    B,
    Fixed(usize),
    /// The entire `i`-th line.
    Line(usize),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::B => write!(f, "b"),
            Atom::Fixed(j) => write!(f, "x{j}"),
            Atom::Line(i) => write!(f, "line{i}"),
        }
    }
}

/// An orbit closure of a symbolic system. Only three shapes occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClosureSet {
    /// `{b}`
    Base,
    /// `{x_j}` for a fixed point other than `b`
    Fixed(usize),
    /// `line_i ∪ {b}`
    Line(usize),
}

impl ClosureSet {
    pub fn atoms(&self) -> Vec<Atom> {
        match *self {
            ClosureSet::Base => vec![Atom::B],
            ClosureSet::Fixed(j) => vec![Atom::Fixed(j)],
            ClosureSet::Line(i) => vec![Atom::B, Atom::Line(i)],
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ClosureSet::Line(_))
    }

    /// Set inclusion `self ⊆ other`.
    pub fn is_contained_in(&self, other: &ClosureSet) -> bool {
        self == other || (*self == ClosureSet::Base && other.is_infinite())
    }
}

impl fmt::Display for ClosureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atoms: Vec<String> = self.atoms().iter().map(Atom::to_string).collect();
        write!(f, "{{{}}}", atoms.join(","))
    }
}

/// `inner ⊆ outer`.
pub fn closure_contains(inner: &ClosureSet, outer: &ClosureSet) -> bool {
    inner.is_contained_in(outer)
}

impl SymbolicFortSystem {
    pub fn new(fixed_points: usize, z_lines: usize) -> Result<Self, SymbolicError> {
        if fixed_points == 0 {
            return Err(SymbolicError::NoParticularPoint);
        }
        Ok(SymbolicFortSystem {
            fixed_points,
            z_lines,
        })
    }

    pub fn fixed_points(&self) -> usize {
        self.fixed_points
    }

    pub fn z_lines(&self) -> usize {
        self.z_lines
    }

    pub fn is_infinite(&self) -> bool {
        self.z_lines > 0
    }

    pub fn cardinality(&self) -> Cardinality {
        if self.is_infinite() {
            Cardinality::CountablyInfinite
        } else {
            Cardinality::Finite(self.fixed_points)
        }
    }

    /// Image of a point under the shift generator.
    pub fn shift(&self, r: PointRef) -> Result<PointRef, SymbolicError> {
        self.check(r)?;
        Ok(match r {
            PointRef::LinePoint(i, n) => PointRef::LinePoint(i, n + 1),
            other => other,
        })
    }

    fn check(&self, r: PointRef) -> Result<(), SymbolicError> {
        let ok = match r {
            PointRef::B => true,
            PointRef::Fixed(j) => j >= 1 && j < self.fixed_points,
            PointRef::LinePoint(i, _) => i < self.z_lines,
        };
        if ok {
            Ok(())
        } else {
            Err(SymbolicError::BadReference(r))
        }
    }

    pub fn orbit_closure(&self, r: PointRef) -> Result<ClosureSet, SymbolicError> {
        self.check(r)?;
        Ok(match r {
            PointRef::B => ClosureSet::Base,
            PointRef::Fixed(j) => ClosureSet::Fixed(j),
            PointRef::LinePoint(i, _) => ClosureSet::Line(i),
        })
    }

    /// All `fixed_points + z_lines` closures: `{b}`, the other fixed points, then the lines.
    pub fn all_closures(&self) -> Vec<ClosureSet> {
        std::iter::once(ClosureSet::Base)
            .chain((1..self.fixed_points).map(ClosureSet::Fixed))
            .chain((0..self.z_lines).map(ClosureSet::Line))
            .collect()
    }

    /// A finite stand-in that keeps the closure structure.
    ///
    /// Each line is cut to the offsets `-window..=window`. Two generators move
    /// window points forward and backward, and both send the window edges to
    /// `b`, which plays the point at infinity. Orbits of window points are then
    /// the whole window plus `b`, so the closure poset matches the symbolic
    /// one for every `window >= 0`.
    ///
    /// Carrier layout: fixed points `0..p` (0 is `b`), then each window in
    /// line order with offsets ascending.
    pub fn concretize(&self, window: usize) -> FiniteDynSystem {
        let p = self.fixed_points;
        let width = 2 * window + 1;
        let size = p + self.z_lines * width;
        let mut forward: Vec<usize> = (0..size).collect();
        let mut backward: Vec<usize> = (0..size).collect();
        for line in 0..self.z_lines {
            let start = p + line * width;
            for k in 0..width {
                let x = start + k;
                forward[x] = if k + 1 < width { x + 1 } else { 0 };
                backward[x] = if k > 0 { x - 1 } else { 0 };
            }
        }
        FiniteDynSystem::new(Kind::Monoid, size, vec![forward, backward])
            .expect("window maps stay inside the carrier")
    }
}

/// Closure of a point reference.
pub fn symbolic_orbit_closure(
    sym: &SymbolicFortSystem,
    r: PointRef,
) -> Result<ClosureSet, SymbolicError> {
    sym.orbit_closure(r)
}

pub fn symbolic_all_closures(sym: &SymbolicFortSystem) -> Vec<ClosureSet> {
    sym.all_closures()
}
