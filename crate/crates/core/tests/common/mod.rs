//! Shared fixtures: named 8-vertex shapes and a cached full order-8 run.
#![allow(dead_code)]

use std::sync::OnceLock;

use chardeg::constructions::shipped_recipes;
use chardeg::kb::{kb_seed_builtin, shipped_external, Kb};
use chardeg::pipeline::{classify_order, ClassificationReport, PipelineConfig};
use chardeg::{canonical_key, decode_graph6, CanonicalKey, Graph};

/// Catalogue labels of the order-8 survivors used in tests, with a graph6 string of each (any labeling).
pub const SHAPES: &[(&str, &str)] = &[
    ("A1", "GTm|~{"),
    ("A2", "GTm~~{"),
    ("A3", "GTn~~{"),
    ("A4", "GT~~~{"),
    ("A5", "GV~~~{"),
    ("A6", "G^~~~{"),
    ("A7", "G~~~~{"),
    ("B1", "GQil^["),
    ("B2", "GQil^{"),
    ("B4", "GQin\\{"),
    ("B6", "GQin~{"),
    ("B7", "GQjn^["),
    ("B12", "GQj~~{"),
    ("B13", "GQzn^["),
    ("B15", "GQzn^{"),
    ("B21", "GQ~~~{"),
    ("B32", "GTnv~{"),
    ("B35", "GTm~v{"),
    ("B36", "GTm|~w"),
    ("B37", "G]zn^["),
    ("B38", "G]zn\\{"),
    ("B39", "G]zn^{"),
    ("B40", "G]zl|{"),
    ("B41", "G]zl~{"),
    ("B42", "G]zn~{"),
    ("B43", "G]y~~{"),
    ("B44", "G]z~~{"),
    ("B45", "G]~~~{"),
    ("C1", "GQhTVS"),
    ("C14", "GQjVTs"),
    ("C35", "GQin~w"),
    ("C50", "GQjndw"),
    ("C61", "GQj~vw"),
    ("C63", "GQj~v{"),
    ("C112", "GQ~vv{"),
    ("C113", "GQ~v~{"),
    ("C147", "G]zn^w"),
    ("C148", "G]~vvs"),
    ("C149", "G]~vv["),
    ("C150", "G]~vv{"),
    ("C151", "G]~v~{"),
    ("D1", "GQhTUg"),
    ("D15", "GQjVRw"),
    ("D19", "GQjUno"),
    ("D43", "GQzTrg"),
    ("D77", "GQ~vvg"),
    ("D86", "GUzvrw"),
    ("D96", "G]~v~w"),
];

/// Shapes certified by joins with the full seed set.
pub const JOIN_OCCURS: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B6", "B12", "B15", "B21", "B32", "B35", "B37", "B38", "B39",
    "B40", "B41", "B42", "B43", "B44", "B45", "C35", "C61", "C63", "C112", "C113", "C147", "C148", "C149", "C150",
    "C151", "D96",
];

/// Diameter-3 shapes with a skew-ring construction.
pub const RECIPE_OCCURS: &[&str] = &["B7", "B13", "B36"];

/// Non-occurring survivors that are not diameter three.
pub const OTHER_NOT: &[&str] = &["B4", "C14", "C50", "D15", "D19", "D43", "D77", "D86"];

pub fn shape(label: &str) -> Graph {
    let (_, g6) = SHAPES.iter().find(|(l, _)| *l == label).unwrap_or_else(|| panic!("no shape {label}"));
    decode_graph6(g6).unwrap()
}

pub fn key(label: &str) -> CanonicalKey {
    canonical_key(&shape(label))
}

pub fn full_kb() -> Kb {
    let mut kb = kb_seed_builtin();
    kb.merge(&shipped_external()).unwrap();
    kb
}

/// Order-8 run with every shipped seed and recipe.
pub fn full_report() -> &'static ClassificationReport {
    static REPORT: OnceLock<ClassificationReport> = OnceLock::new();
    REPORT.get_or_init(|| classify_order(8, &full_kb(), &shipped_recipes(), PipelineConfig::default()).unwrap())
}

/// Order-8 run with the builtin seed only.
pub fn builtin_report() -> &'static ClassificationReport {
    static REPORT: OnceLock<ClassificationReport> = OnceLock::new();
    REPORT.get_or_init(|| classify_order(8, &kb_seed_builtin(), &shipped_recipes(), PipelineConfig::default()).unwrap())
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..(1 << pairs.len())).map(move |mask| {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=p.len()).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    out
}

/// Isomorphism-invariant form computed by brute force: the least upper-triangle
/// bit string over all relabelings.
pub fn brute_form(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.order();
    perms
        .iter()
        .map(|p| {
            let mut bits = 0u64;
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if g.has_edge(p[u], p[v]) {
                        bits |= 1 << k;
                    }
                    k += 1;
                }
            }
            bits
        })
        .min()
        .unwrap_or(0)
}
