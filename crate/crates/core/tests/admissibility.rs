mod common;

use std::collections::{BTreeSet, HashMap};

use chardeg::admissibility::{all_admissible_eliminator, is_admissible, is_strongly_admissible, Admissibility, Evidence, Oracle};
use chardeg::conditions::signature;
use chardeg::graph::{canonical_key, members, CanonicalKey, Graph};
use chardeg::kb::Kb;
use chardeg::{Reason, Status};
use common::{full_kb, full_report, shape};

fn closed_full_kb() -> Kb {
    let mut kb = full_kb();
    kb.close_under_joins(7);
    kb
}

fn run_map() -> HashMap<CanonicalKey, (Status, String)> {
    // Pre-sweep statuses: the admissibility verdicts themselves are not inputs.
    full_report()
        .records
        .iter()
        .map(|r| {
            let status = if r.reason == "ADM-ALL" { Status::Unknown } else { r.status };
            (r.key, (status, r.reason.clone()))
        })
        .collect()
}

#[test]
fn d19_structure() {
    let g = shape("D19");
    assert!(g.is_connected());
    assert_eq!(signature(&g).unwrap().to_string(), "(4,4)");
    let parts = g.max_two_clique_partition().unwrap();
    assert_eq!(parts.sizes(), (4, 4));
    let mut classes: HashMap<CanonicalKey, Vec<usize>> = HashMap::new();
    for v in 0..8 {
        classes.entry(canonical_key(&g.delete_vertex(v).unwrap())).or_default().push(v);
    }
    let mut sizes: Vec<usize> = classes.values().map(Vec::len).collect();
    sizes.sort();
    assert_eq!(sizes, vec![2, 2, 4]);
}

#[test]
fn d19_is_eliminated_by_admissibility() {
    let rec = full_report().lookup(&shape("D19")).unwrap();
    assert_eq!(rec.status, Status::NotOccurs);
    assert_eq!(rec.reason, Reason::AdmAll.code());
    let reports = rec.admissibility.as_ref().unwrap();
    assert_eq!(reports.len(), 8);
    assert!(reports.iter().all(|r| r.verdict == Admissibility::Yes));
    // Every other graph swept stays unknown.
    let eliminated: Vec<&str> =
        full_report().records.iter().filter(|r| r.reason == "ADM-ALL").map(|r| r.graph6.as_str()).collect();
    assert_eq!(eliminated, vec![rec.graph6.as_str()]);
}

#[test]
fn d19_needs_every_cited_seed() {
    let kb = closed_full_kb();
    let run = run_map();
    let g = shape("D19");
    let oracle = Oracle { kb: &kb, run: &run, run_order: 8 };
    let (verdict, reports) = all_admissible_eliminator(&g, &oracle);
    assert_eq!(verdict.reason(), Some(Reason::AdmAll));
    let cited: BTreeSet<CanonicalKey> = reports
        .iter()
        .flat_map(|r| &r.steps)
        .filter(|s| matches!(s.answer.evidence, Evidence::KbRecord { .. }))
        .map(|s| canonical_key(&s.graph))
        .collect();
    assert!(!cited.is_empty());
    for key in &cited {
        let mut reduced = kb.clone();
        reduced.remove(key);
        let oracle = Oracle { kb: &reduced, run: &run, run_order: 8 };
        assert!(!all_admissible_eliminator(&g, &oracle).0.is_eliminated(), "still eliminated without {key}");
    }
}

#[test]
fn evidence_kinds() {
    let kb = closed_full_kb();
    let run = run_map();
    let oracle = Oracle { kb: &kb, run: &run, run_order: 8 };
    let reports: Vec<_> = (0..8).map(|v| is_admissible(&shape("D19"), v, &oracle)).collect();
    let steps: Vec<_> = reports.iter().flat_map(|r| &r.steps).collect();
    // One vertex deletion plus every nonempty incident edge subset per vertex.
    let g = shape("D19");
    let expected: usize = (0..8).map(|v| 1 << g.degree(v)).sum();
    assert_eq!(steps.len(), expected);
    for s in &steps {
        assert_eq!(s.answer.status, Status::NotOccurs, "{}", s.operation);
        match &s.answer.evidence {
            Evidence::ThreeVertex(t) => {
                assert!(t.iter().all(|&a| t.iter().all(|&b| a == b || !s.graph.has_edge(a, b))));
            }
            Evidence::OddCycle(c) => {
                assert!(c.len() % 2 == 1 && c.len() >= 5);
                let comp = s.graph.complement();
                assert!((0..c.len()).all(|i| comp.has_edge(c[i], c[(i + 1) % c.len()])));
            }
            Evidence::RunVerdict { .. } => assert_eq!(s.graph.order(), 8),
            Evidence::KbRecord { .. } => assert_eq!(kb.status(&s.graph), Status::NotOccurs),
            Evidence::NoRecord => panic!("unknown step"),
        }
    }
}

#[test]
fn more_knowledge_never_loses_admissibility() {
    let full = closed_full_kb();
    let run = run_map();
    let empty_run = HashMap::new();
    let mut partial = Kb::new();
    for r in full.records().filter(|r| r.order < 7) {
        partial.insert(r.clone()).unwrap();
    }
    let weak = Oracle { kb: &partial, run: &empty_run, run_order: 8 };
    let strong = Oracle { kb: &full, run: &run, run_order: 8 };
    for rec in full_report().survivors().filter(|r| r.connected && r.status == Status::Unknown).take(40) {
        for v in 0..8 {
            if is_admissible(&rec.graph, v, &weak).verdict == Admissibility::Yes {
                assert_eq!(is_admissible(&rec.graph, v, &strong).verdict, Admissibility::Yes);
            }
        }
    }
}

#[test]
fn strong_admissibility_implies_admissibility() {
    let kb = closed_full_kb();
    let run = run_map();
    let oracle = Oracle { kb: &kb, run: &run, run_order: 8 };
    let g = shape("D19");
    for v in 0..8 {
        let strong = is_strongly_admissible(&g, v, &oracle);
        if strong.verdict == Admissibility::Yes {
            assert_eq!(is_admissible(&g, v, &oracle).verdict, Admissibility::Yes);
        }
        let inner = members(g.neighbors(v)).flat_map(|a| members(g.neighbors(v)).map(move |b| (a, b))).filter(|&(a, b)| a < b && g.has_edge(a, b)).count();
        assert!(strong.steps.len() <= (1 << g.degree(v)) + (1 << inner) - 1);
    }
    assert_eq!(is_admissible(&Graph::complete(8), 0, &oracle).verdict, Admissibility::No);
}

#[test]
fn d19_argument_structure() {
    let g = shape("D19");
    let parts = g.max_two_clique_partition().unwrap();
    let (x, y) = (parts.large, parts.small);
    let other = |v: usize| if x & (1 << v) != 0 { y } else { x };
    // Same-clique pairs that some opposite vertex misses entirely; exactly one pair has none.
    let same: Vec<(usize, usize)> = g.edges().filter(|&(a, b)| other(a) == other(b)).collect();
    assert_eq!(same.len(), 12);
    let special: Vec<(usize, usize)> = same
        .iter()
        .copied()
        .filter(|&(a, b)| !members(other(a)).any(|w| !g.has_edge(a, w) && !g.has_edge(b, w)))
        .collect();
    assert_eq!(special.len(), 1);
    let (p1, p7) = special[0];
    // Deleting any cross edge keeps diameter three and minimum degree two.
    for (a, b) in g.edges().filter(|&(a, b)| other(a) != other(b)) {
        let h = g.delete_edges(&[(a, b)]).unwrap();
        assert_eq!(h.diameter(), chardeg::graph::Diameter::Finite(3));
        assert!((0..8).all(|v| h.degree(v) >= 2));
    }
    // Deleting the special pair leaves a 5-cycle in the complement.
    let comp = g.delete_edges(&[(p1, p7)]).unwrap().complement();
    assert!(comp.find_triangle().is_none());
    assert_eq!(comp.shortest_odd_cycle().map(|c| c.len()), Some(5));
    // The three order-7 seeds are the deletions of an end of the special pair and
    // of one vertex from each of the other two classes.
    let kb = full_kb();
    let seeds: BTreeSet<CanonicalKey> =
        kb.records().filter(|r| r.order == 7 && r.status == Status::NotOccurs).map(|r| r.key).collect();
    assert_eq!(seeds.len(), 3);
    let deletions: BTreeSet<CanonicalKey> = (0..8).map(|v| canonical_key(&g.delete_vertex(v).unwrap())).collect();
    assert_eq!(deletions, seeds);
    assert!(seeds.contains(&canonical_key(&g.delete_vertex(p1).unwrap())));
}

#[test]
fn d19_evidence_replays_the_argument() {
    let d19 = full_report().lookup(&shape("D19")).unwrap();
    let steps: Vec<_> = d19.admissibility.as_ref().unwrap().iter().flat_map(|r| &r.steps).collect();
    let has = |f: &dyn Fn(&Evidence) -> bool| steps.iter().any(|s| f(&s.answer.evidence));
    assert!(has(&|e| matches!(e, Evidence::ThreeVertex(_))));
    assert!(has(&|e| matches!(e, Evidence::OddCycle(c) if c.len() == 5)));
    assert!(has(&|e| matches!(e, Evidence::RunVerdict { reason } if reason.starts_with("D3-"))));
    let lookups: BTreeSet<CanonicalKey> = steps
        .iter()
        .filter(|s| s.operation.starts_with("delete vertex") && matches!(s.answer.evidence, Evidence::KbRecord { .. }))
        .map(|s| canonical_key(&s.graph))
        .collect();
    assert_eq!(lookups.len(), 3);
}
