//! The JSON system document shared by every command.
//!
//! ```json
//! {"type": "finite", "kind": "monoid", "size": 3, "generators": [[0, 0, 1]]}
//! {"type": "symbolic", "fixed_points": 2, "z_lines": 3}
//! {"type": "poset", "nodes": ["1", "2", "3"], "covers": [[0, 1], [1, 2]]}
//! ```
//!
//! Indices are 0-based. A cover `[i, j]` means node `i` is covered by node `j`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::action::{ActionError, FiniteDynSystem, Kind};
use crate::indicator::{ClosurePoset, IndicatorError};
use crate::symbolic::{SymbolicError, SymbolicFortSystem};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid finite system: {0}")]
    Finite(#[from] ActionError),
    #[error("invalid symbolic system: {0}")]
    Symbolic(#[from] SymbolicError),
    #[error("invalid poset: {0}")]
    Poset(#[from] IndicatorError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SystemFile {
    Finite {
        kind: Kind,
        size: usize,
        generators: Vec<Vec<usize>>,
    },
    Symbolic {
        fixed_points: usize,
        z_lines: usize,
    },
    Poset {
        nodes: Vec<String>,
        covers: Vec<[usize; 2]>,
    },
}

/// A parsed and validated document.
#[derive(Debug, Clone)]
pub enum LoadedSystem {
    Finite(FiniteDynSystem),
    Symbolic(SymbolicFortSystem),
    Poset(ClosurePoset),
}

impl LoadedSystem {
    pub fn type_name(&self) -> &'static str {
        match self {
            LoadedSystem::Finite(_) => "finite",
            LoadedSystem::Symbolic(_) => "symbolic",
            LoadedSystem::Poset(_) => "poset",
        }
    }

    /// The indicator poset; a poset document is returned as is.
    pub fn poset(&self) -> ClosurePoset {
        match self {
            LoadedSystem::Finite(sys) => ClosurePoset::of_finite(sys),
            LoadedSystem::Symbolic(sym) => ClosurePoset::of_symbolic(sym),
            LoadedSystem::Poset(p) => p.clone(),
        }
    }
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(text: &str) -> Result<LoadedSystem, FormatError> {
        Self::parse(text)?.validate()
    }

    pub fn validate(self) -> Result<LoadedSystem, FormatError> {
        Ok(match self {
            SystemFile::Finite {
                kind,
                size,
                generators,
            } => LoadedSystem::Finite(FiniteDynSystem::new(kind, size, generators)?),
            SystemFile::Symbolic {
                fixed_points,
                z_lines,
            } => LoadedSystem::Symbolic(SymbolicFortSystem::new(fixed_points, z_lines)?),
            SystemFile::Poset { nodes, covers } => {
                let pairs: Vec<(usize, usize)> = covers.iter().map(|c| (c[0], c[1])).collect();
                LoadedSystem::Poset(ClosurePoset::from_covers(nodes, &pairs)?)
            }
        })
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("system documents always serialize");
        s.push('\n');
        s
    }
}

impl From<&FiniteDynSystem> for SystemFile {
    fn from(sys: &FiniteDynSystem) -> Self {
        SystemFile::Finite {
            kind: sys.kind(),
            size: sys.size(),
            generators: sys.generators().to_vec(),
        }
    }
}

impl From<&SymbolicFortSystem> for SystemFile {
    fn from(sym: &SymbolicFortSystem) -> Self {
        SystemFile::Symbolic {
            fixed_points: sym.fixed_points(),
            z_lines: sym.z_lines(),
        }
    }
}

impl From<&ClosurePoset> for SystemFile {
    fn from(p: &ClosurePoset) -> Self {
        SystemFile::Poset {
            nodes: p.labels().to_vec(),
            covers: p.cover_edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl From<&LoadedSystem> for SystemFile {
    fn from(l: &LoadedSystem) -> Self {
        match l {
            LoadedSystem::Finite(s) => s.into(),
            LoadedSystem::Symbolic(s) => s.into(),
            LoadedSystem::Poset(p) => p.into(),
        }
    }
}
