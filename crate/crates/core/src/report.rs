//! Analysis reports and Graphviz output.

use std::fmt::Write as _;

use serde::Serialize;

use crate::format::LoadedSystem;
use crate::indicator::{
    classify_group_topology, ClosurePoset, GroupClassification, IndicatorSequence, OPENS_MAX_NODES,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureEntry {
    pub label: String,
    pub members: Vec<String>,
    pub height: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Group(GroupClassification),
    NotClassifiable,
}

/// Everything `analyze` prints about one system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub source: String,
    pub closures: Vec<ClosureEntry>,
    pub indicator_sequence: IndicatorSequence,
    /// One less than the number of closures.
    pub total_height: usize,
    pub max_closure_height: usize,
    pub classification: Classification,
    pub hasse_edges: Vec<[usize; 2]>,
    /// Down-closed node sets, by index; absent above the enumeration limit.
    pub opens: Option<Vec<Vec<usize>>>,
}

impl AnalysisReport {
    pub fn new(system: &LoadedSystem) -> Self {
        Self::from_poset(system.type_name(), &system.poset())
    }

    pub fn from_poset(source: &str, poset: &ClosurePoset) -> Self {
        let closures = (0..poset.len())
            .map(|v| ClosureEntry {
                label: poset.labels()[v].clone(),
                members: poset.members()[v].clone(),
                height: poset.node_height(v),
            })
            .collect();
        let seq = poset.indicator_sequence();
        let opens = poset
            .enumerate_opens()
            .ok()
            .map(|all| all.into_iter().map(|o| o.into_iter().collect()).collect());
        AnalysisReport {
            source: source.to_string(),
            closures,
            total_height: seq.total_height(),
            max_closure_height: seq.max_entry(),
            indicator_sequence: seq,
            classification: classify_group_topology(poset)
                .map_or(Classification::NotClassifiable, Classification::Group),
            hasse_edges: poset
                .cover_edges()
                .into_iter()
                .map(|(a, b)| [a, b])
                .collect(),
            opens,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    /// Opens written with node labels, e.g. `∅,{1},{1,2},{1,2,3}`.
    pub fn opens_listing(&self) -> Option<String> {
        let opens = self.opens.as_ref()?;
        let parts: Vec<String> = opens
            .iter()
            .map(|o| {
                if o.is_empty() {
                    "∅".to_string()
                } else {
                    let names: Vec<&str> =
                        o.iter().map(|&v| self.closures[v].label.as_str()).collect();
                    format!("{{{}}}", names.join(","))
                }
            })
            .collect();
        Some(parts.join(","))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "source: {}", self.source);
        let _ = writeln!(out, "closures: {}", self.closures.len());
        for (i, c) in self.closures.iter().enumerate() {
            let _ = writeln!(out, "  [{i}] {}  height {}", c.label, c.height);
        }
        let _ = writeln!(out, "indicator sequence: {}", self.indicator_sequence);
        let _ = writeln!(out, "total height: {}", self.total_height);
        let _ = writeln!(out, "max closure height: {}", self.max_closure_height);
        let class = match &self.classification {
            Classification::Group(g) => g.to_string(),
            Classification::NotClassifiable => "not classifiable".to_string(),
        };
        let _ = writeln!(out, "group classification: {class}");
        let edges: Vec<String> = self
            .hasse_edges
            .iter()
            .map(|e| format!("{}<{}", e[0], e[1]))
            .collect();
        let _ = writeln!(
            out,
            "hasse edges: {}",
            if edges.is_empty() {
                "none".into()
            } else {
                edges.join(" ")
            }
        );
        match self.opens_listing() {
            Some(list) => {
                let _ = writeln!(out, "opens: {list}");
            }
            None => {
                let _ = writeln!(out, "opens: omitted (more than {OPENS_MAX_NODES} closures)");
            }
        }
        out
    }
}

/// Hasse diagram of the poset, drawn bottom-up with cover edges only.
pub fn to_dot(poset: &ClosurePoset) -> String {
    let mut out = String::from("digraph closures {\n  rankdir=BT;\n");
    for (v, label) in poset.labels().iter().enumerate() {
        let escaped = label.replace('\\', "\\\\").replace('"', "\\\"");
        let _ = writeln!(
            out,
            "  n{v} [label=\"{escaped}\\nh={}\"];",
            poset.node_height(v)
        );
    }
    for (a, b) in poset.cover_edges() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
