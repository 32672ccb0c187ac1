//! Admissible vertices: every vertex-deleted and incident-edge-deleted subgraph
//! fails to occur. A graph all of whose vertices are admissible does not occur.

use std::collections::HashMap;
use std::fmt;

use crate::eliminators::EliminationVerdict;
use crate::graph::{canonical_key, members, CanonicalKey, Graph};
use crate::kb::Kb;
use crate::status::{Reason, Status};

/// Where an oracle answer came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Three vertices with no edge among them.
    ThreeVertex([usize; 3]),
    /// Odd cycle in the complement (no triangle, so length at least 5).
    OddCycle(Vec<usize>),
    RunVerdict { reason: String },
    KbRecord { reason: String, provenance: String },
    NoRecord,
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Evidence::ThreeVertex(t) => write!(f, "P1: {{{}}} spans no edge", list(t)),
            Evidence::OddCycle(c) => write!(f, "P2: complement has the {}-cycle {}", c.len(), list(c)),
            Evidence::RunVerdict { reason } => write!(f, "this run: {reason}"),
            Evidence::KbRecord { reason, provenance } => write!(f, "kb: {reason} {provenance}"),
            Evidence::NoRecord => f.write_str("no record"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleAnswer {
    pub status: Status,
    pub evidence: Evidence,
}

/// Answers "does this graph occur" from the filters, this run's verdicts for
/// its order, and a knowledge base, in that order.
#[derive(Clone, Copy)]
pub struct Oracle<'a> {
    pub kb: &'a Kb,
    pub run: &'a HashMap<CanonicalKey, (Status, String)>,
    pub run_order: usize,
}

impl Oracle<'_> {
    pub fn answer(&self, g: &Graph) -> OracleAnswer {
        let not = |evidence| OracleAnswer { status: Status::NotOccurs, evidence };
        let comp = g.complement();
        if let Some(t) = comp.find_triangle() {
            return not(Evidence::ThreeVertex(t));
        }
        if let Some(cycle) = comp.shortest_odd_cycle() {
            return not(Evidence::OddCycle(cycle));
        }
        let key = canonical_key(g);
        if g.order() == self.run_order {
            if let Some((status, reason)) = self.run.get(&key) {
                if *status != Status::Unknown {
                    return OracleAnswer { status: *status, evidence: Evidence::RunVerdict { reason: reason.clone() } };
                }
            }
        }
        match self.kb.get(&key) {
            Some(r) if r.status != Status::Unknown => OracleAnswer {
                status: r.status,
                evidence: Evidence::KbRecord { reason: r.reason.clone(), provenance: r.provenance.clone() },
            },
            _ => OracleAnswer { status: Status::Unknown, evidence: Evidence::NoRecord },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    Yes,
    No,
    Inconclusive,
}

/// One subgraph query.
#[derive(Debug, Clone)]
pub struct Step {
    pub operation: String,
    pub graph: Graph,
    pub answer: OracleAnswer,
}

#[derive(Debug, Clone)]
pub struct VertexReport {
    pub vertex: usize,
    pub verdict: Admissibility,
    pub steps: Vec<Step>,
}

impl VertexReport {
    fn from_steps(vertex: usize, steps: Vec<Step>) -> VertexReport {
        let verdict = if steps.iter().any(|s| s.answer.status == Status::Occurs) {
            Admissibility::No
        } else if steps.iter().any(|s| s.answer.status == Status::Unknown) {
            Admissibility::Inconclusive
        } else {
            Admissibility::Yes
        };
        VertexReport { vertex, verdict, steps }
    }
}

fn describe(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

/// Runs queries in order, stopping after the first Occurs answer.
fn run_queries(oracle: &Oracle, queries: impl Iterator<Item = (String, Graph)>, steps: &mut Vec<Step>) -> bool {
    for (operation, graph) in queries {
        let answer = oracle.answer(&graph);
        let occurs = answer.status == Status::Occurs;
        steps.push(Step { operation, graph, answer });
        if occurs {
            return false;
        }
    }
    true
}

/// Vertex deletion first, then every nonempty set of incident edges in subset order.
pub fn is_admissible(g: &Graph, v: usize, oracle: &Oracle) -> VertexReport {
    let mut steps = Vec::new();
    admissible_steps(g, v, oracle, &mut steps);
    VertexReport::from_steps(v, steps)
}

fn admissible_steps(g: &Graph, v: usize, oracle: &Oracle, steps: &mut Vec<Step>) -> bool {
    let incident: Vec<(usize, usize)> = members(g.neighbors(v)).map(|u| (v, u)).collect();
    let deleted = g.delete_vertex(v).expect("vertex in range");
    let subsets = (1u32..(1 << incident.len())).map(|mask| {
        let chosen: Vec<(usize, usize)> =
            incident.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect();
        (format!("delete edges {}", describe(&chosen)), g.delete_edges(&chosen).expect("incident edges exist"))
    });
    run_queries(oracle, std::iter::once((format!("delete vertex {v}"), deleted)).chain(subsets), steps)
}

/// Admissible, and additionally every deletion of `v` together with a nonempty
/// set of edges inside its neighbourhood fails to occur.
pub fn is_strongly_admissible(g: &Graph, v: usize, oracle: &Oracle) -> VertexReport {
    let mut steps = Vec::new();
    if admissible_steps(g, v, oracle, &mut steps) {
        let deleted = g.delete_vertex(v).expect("vertex in range");
        let shift = |u: usize| if u > v { u - 1 } else { u };
        let inner: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(a, b)| g.has_edge(v, a) && g.has_edge(v, b))
            .map(|(a, b)| (shift(a), shift(b)))
            .collect();
        let subsets = (1u32..(1 << inner.len())).map(|mask| {
            let chosen: Vec<(usize, usize)> =
                inner.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect();
            let op = format!("delete vertex {v} and edges {} (renumbered)", describe(&chosen));
            (op, deleted.delete_edges(&chosen).expect("edges exist"))
        });
        run_queries(oracle, subsets, &mut steps);
    }
    VertexReport::from_steps(v, steps)
}

/// Eliminates when every vertex is admissible; any Inconclusive vertex blocks it.
pub fn all_admissible_eliminator(g: &Graph, oracle: &Oracle) -> (EliminationVerdict, Vec<VertexReport>) {
    let reports: Vec<VertexReport> = (0..g.order()).map(|v| is_admissible(g, v, oracle)).collect();
    let verdict = if g.order() > 0 && reports.iter().all(|r| r.verdict == Admissibility::Yes) {
        EliminationVerdict::Eliminated { reason: Reason::AdmAll, provenance: "every vertex admissible".into() }
    } else {
        EliminationVerdict::NoVerdict
    };
    (verdict, reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kb::kb_seed_builtin;

    #[test]
    fn oracle_basics() {
        let kb = kb_seed_builtin();
        let run = HashMap::new();
        let oracle = Oracle { kb: &kb, run: &run, run_order: 8 };
        assert_eq!(oracle.answer(&Graph::star(3)).status, Status::NotOccurs);
        assert_eq!(oracle.answer(&Graph::complete(7)).status, Status::Occurs);
        assert!(matches!(oracle.answer(&Graph::cycle(5)).evidence, Evidence::OddCycle(c) if c.len() == 5));
        let unknown = Graph::path(7).complement();
        assert_eq!(oracle.answer(&unknown).status, Status::Unknown);
    }

    #[test]
    fn complete_graphs_have_no_admissible_vertex() {
        let kb = kb_seed_builtin();
        let run = HashMap::new();
        let oracle = Oracle { kb: &kb, run: &run, run_order: 8 };
        let k8 = Graph::complete(8);
        let report = is_admissible(&k8, 0, &oracle);
        assert_eq!(report.verdict, Admissibility::No);
        assert_eq!(report.steps.len(), 1);
        assert!(!all_admissible_eliminator(&k8, &oracle).0.is_eliminated());
        assert_eq!(is_strongly_admissible(&Graph::complete(3), 0, &oracle).verdict, Admissibility::No);
    }

    #[test]
    fn subset_count() {
        // Empty KB: the path on three vertices is unknown, so every query runs.
        let kb = Kb::new();
        let run = HashMap::new();
        let oracle = Oracle { kb: &kb, run: &run, run_order: 8 };
        let g = Graph::complete(8);
        let report = is_admissible(&g, 3, &oracle);
        assert_eq!(report.steps.len(), 1 + 127);
        assert_eq!(report.verdict, Admissibility::Inconclusive);
    }
}
