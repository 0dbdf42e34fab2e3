//! Layered drawing of the first few levels of a succession system.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::{step, Avoid010100120210, Avoid011201, Avoid201210, LevelVector, RuleSystem, SystemId};
use crate::oracle::BigCount;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramNode {
    pub depth: usize,
    pub label: String,
    /// Number of rule paths from the axiom reaching this state.
    pub count: BigCount,
    pub accepted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramEdge {
    pub from: usize,
    pub to: usize,
    pub mult: u64,
}

/// One node per `(depth, state)`; an edge per rule with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub system: SystemId,
    pub nodes: Vec<DiagramNode>,
    pub edges: Vec<DiagramEdge>,
}

impl Diagram {
    pub fn level(&self, depth: usize) -> impl Iterator<Item = &DiagramNode> {
        self.nodes.iter().filter(move |n| n.depth == depth)
    }

    pub fn find(&self, depth: usize, label: &str) -> Option<usize> {
        self.nodes
            .iter()
            .position(|n| n.depth == depth && n.label == label)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", self.system);
        out.push_str("  rankdir=LR;\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{i} [label=\"{}\", depth={}, count={}{}];",
                n.label,
                n.depth,
                n.count,
                if n.accepted { "" } else { ", style=dashed" }
            );
        }
        for e in &self.edges {
            if e.mult > 1 {
                let _ = writeln!(
                    out,
                    "  n{} -> n{} [mult={}, penwidth={}];",
                    e.from, e.to, e.mult, e.mult
                );
            } else {
                let _ = writeln!(out, "  n{} -> n{};", e.from, e.to);
            }
        }
        out.push_str("}\n");
        out
    }
}

fn build<S: RuleSystem>(id: SystemId, system: &S, depth: usize) -> Diagram {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut level = LevelVector::axiom(system);
    let mut index: BTreeMap<S::Label, usize> = BTreeMap::new();
    for (label, count) in level.iter() {
        index.insert(label.clone(), nodes.len());
        nodes.push(DiagramNode {
            depth: 0,
            label: label.to_string(),
            count: count.clone(),
            accepted: system.accepts(label),
        });
    }
    for d in 0..depth {
        let next = step(system, &level);
        let mut next_index = BTreeMap::new();
        for (label, count) in next.iter() {
            next_index.insert(label.clone(), nodes.len());
            nodes.push(DiagramNode {
                depth: d + 1,
                label: label.to_string(),
                count: count.clone(),
                accepted: system.accepts(label),
            });
        }
        for (label, _) in level.iter() {
            for (succ, mult) in system.successors(label) {
                edges.push(DiagramEdge {
                    from: index[label],
                    to: next_index[&succ],
                    mult,
                });
            }
        }
        level = next;
        index = next_index;
    }
    Diagram {
        system: id,
        nodes,
        edges,
    }
}

pub fn emit_diagram(system: SystemId, depth: usize) -> Diagram {
    match system {
        SystemId::Avoid201210 => build(system, &Avoid201210, depth),
        SystemId::Avoid011201 => build(system, &Avoid011201, depth),
        SystemId::Avoid010100120210 => build(system, &Avoid010100120210, depth),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_three_matches_hand_count() {
        let d = emit_diagram(SystemId::Avoid201210, 3);
        let level3: BTreeMap<String, BigCount> = d
            .level(3)
            .map(|n| (n.label.clone(), n.count.clone()))
            .collect();
        let want: BTreeMap<String, BigCount> = [
            ("(3,F,F)", 1u32),
            ("(2,F,F)", 2),
            ("(1,F,F)", 2),
            ("(2,T,T)", 2),
            ("(1,T,T)", 4),
            ("(2,T,F)", 1),
        ]
        .into_iter()
        .map(|(l, c)| (l.to_string(), BigCount::from(c)))
        .collect();
        assert_eq!(level3, want);
        let accepted: BigCount = d.level(3).filter(|n| n.accepted).map(|n| &n.count).sum();
        assert_eq!(accepted, BigCount::from(6u32));
    }

    #[test]
    fn double_edge_into_1tt() {
        let d = emit_diagram(SystemId::Avoid201210, 3);
        let from = d.find(2, "(2,F,F)").unwrap();
        let to = d.find(3, "(1,T,T)").unwrap();
        let e = d
            .edges
            .iter()
            .find(|e| e.from == from && e.to == to)
            .unwrap();
        assert_eq!(e.mult, 2);
        assert!(d.to_dot().contains(&format!("n{from} -> n{to} [mult=2")));
        let into_3: Vec<u64> = d
            .edges
            .iter()
            .filter(|e| d.nodes[e.to].depth == 3)
            .map(|e| e.mult)
            .collect();
        assert_eq!(into_3.len(), 11);
        assert_eq!(into_3.iter().filter(|&&m| m == 2).count(), 1);
    }

    #[test]
    fn depth_zero_is_a_single_node() {
        let d = emit_diagram(SystemId::Avoid201210, 0);
        assert_eq!(d.nodes.len(), 1);
        assert!(d.edges.is_empty());
        assert_eq!(d.nodes[0].label, "(0,F,F)");
        let dot = d.to_dot();
        assert!(dot.starts_with("digraph \"201-210\" {"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn two_stat_diagram_labels() {
        let d = emit_diagram(SystemId::Avoid011201, 2);
        assert_eq!(d.nodes[0].label, "(0,0)");
        assert!(d.nodes.iter().all(|n| n.accepted));
    }
}
