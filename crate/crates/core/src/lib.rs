//! Orbit closures, heights, indicator sequences and indicator topologies of
//! transformation semigroups on finite discrete spaces and on symbolic
//! infinite Fort spaces.
//!
//! - [`action`]: finite systems, orbits, invariant subsets, two height computations
//! - [`symbolic`]: infinite Fort systems built from fixed points and shifted lines
//! - [`indicator`]: closure posets, indicator sequences, isomorphism, group classification
//! - [`constructors`]: witness systems for realizable sequences and topologies
//! - [`verify`]: bounded exhaustive checks of the classification results
//! - [`format`], [`report`]: the JSON document format and analysis output

pub mod action;
pub mod constructors;
pub mod format;
pub mod indicator;
pub mod report;
pub mod symbolic;
pub mod verify;

pub use action::{ActionError, FiniteDynSystem, InvariantSubset, Kind, PointSet};
pub use constructors::{ConstructError, StepSequence};
pub use format::{FormatError, LoadedSystem, SystemFile};
pub use indicator::{ClosurePoset, GroupClassification, IndicatorError, IndicatorSequence, Source};
pub use report::AnalysisReport;
pub use symbolic::{Cardinality, ClosureSet, PointRef, SymbolicError, SymbolicFortSystem};
pub use verify::{CheckReport, Suite, SuiteOptions, Verdict};
