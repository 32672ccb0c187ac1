//! Rho-partitions of diameter-three graphs and the two tests they feed.

use std::fmt;

use thiserror::Error;

use crate::conditions::odd_cycle_free_complement;
use crate::graph::{members, Diameter, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Diameter3Error {
    #[error("vertex {v} out of range")]
    VertexOutOfRange { v: usize },
    #[error("vertices {p} and {q} are at distance {distance:?}, not 3")]
    NotAtDistanceThree { p: usize, q: usize, distance: Option<usize> },
    #[error("vertex {v} is farther than 3 from {p}")]
    TooFar { p: usize, v: usize },
    #[error("graph has diameter {0}, expected 3")]
    WrongDiameter(Diameter),
    #[error("complement has an odd cycle")]
    OddCycleComplement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RhoPartition {
    pub p: usize,
    pub q: usize,
    pub rho1: VertexSet,
    pub rho2: VertexSet,
    pub rho3: VertexSet,
    pub rho4: VertexSet,
}

impl RhoPartition {
    /// `|rho1 ∪ rho2|`
    pub fn near(&self) -> usize {
        (self.rho1 | self.rho2).count_ones() as usize
    }

    /// `|rho3 ∪ rho4|`
    pub fn far(&self) -> usize {
        (self.rho3 | self.rho4).count_ones() as usize
    }

    pub fn rho3_ok(&self) -> bool {
        self.rho3.count_ones() >= 3
    }

    pub fn growth_ok(&self) -> bool {
        let near = self.near();
        near < usize::BITS as usize && self.far() >= 1 << near
    }
}

impl fmt::Display for RhoPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: VertexSet| members(s).map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "p={} q={} rho1={{{}}} rho2={{{}}} rho3={{{}}} rho4={{{}}}",
            self.p,
            self.q,
            show(self.rho1),
            show(self.rho2),
            show(self.rho3),
            show(self.rho4)
        )
    }
}

pub fn rho_partition(g: &Graph, p: usize, q: usize) -> Result<RhoPartition, Diameter3Error> {
    for v in [p, q] {
        if v >= g.order() {
            return Err(Diameter3Error::VertexOutOfRange { v });
        }
    }
    let dist = g.distances_from(p);
    if dist[q] != Some(3) {
        return Err(Diameter3Error::NotAtDistanceThree { p, q, distance: dist[q] });
    }
    let mut layer = [0 as VertexSet; 4];
    for (v, d) in dist.iter().enumerate() {
        match d {
            Some(d) if *d <= 3 => layer[*d] |= 1 << v,
            _ => return Err(Diameter3Error::TooFar { p, v }),
        }
    }
    let rho3 = layer[2];
    let rho2 = members(layer[1]).filter(|&v| g.neighbors(v) & rho3 != 0).fold(0, |acc, v| acc | (1 << v));
    let rho1 = layer[0] | (layer[1] & !rho2);
    let part = RhoPartition { p, q, rho1, rho2, rho3, rho4: layer[3] };
    debug_assert!([part.rho1, part.rho2, part.rho3, part.rho4].iter().all(|&s| s != 0));
    Ok(part)
}

/// Which condition a labeling violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diameter3Reason {
    Rho3,
    Growth,
}

impl Diameter3Reason {
    pub fn code(self) -> &'static str {
        match self {
            Diameter3Reason::Rho3 => "D3-RHO3",
            Diameter3Reason::Growth => "D3-GROWTH",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter3Verdict {
    Pass,
    Eliminated(Diameter3Reason),
}

/// How labelings are combined into a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Diameter3Mode {
    /// Any evaluated labeling that violates a condition eliminates.
    #[default]
    AnyLabeling,
    /// Per pair only the labelings minimising `|rho1 ∪ rho2|` count, and on a tie
    /// both must violate.
    Strict,
}

/// One orientation of a distance-3 pair.
#[derive(Debug, Clone, Copy)]
pub struct LabelingCheck {
    pub partition: RhoPartition,
    /// Satisfies `|rho1 ∪ rho2| <= |rho3 ∪ rho4|`.
    pub evaluated: bool,
}

impl LabelingCheck {
    pub fn violation(&self) -> Option<Diameter3Reason> {
        if !self.partition.rho3_ok() {
            Some(Diameter3Reason::Rho3)
        } else if !self.partition.growth_ok() {
            Some(Diameter3Reason::Growth)
        } else {
            None
        }
    }
}

/// Both orientations of every unordered distance-3 pair, pairs in index order.
pub fn labelings(g: &Graph) -> Result<Vec<[LabelingCheck; 2]>, Diameter3Error> {
    check_preconditions(g)?;
    let mut out = Vec::new();
    for p in 0..g.order() {
        let dist = g.distances_from(p);
        for q in p + 1..g.order() {
            if dist[q] == Some(3) {
                let check = |a, b| -> Result<LabelingCheck, Diameter3Error> {
                    let partition = rho_partition(g, a, b)?;
                    Ok(LabelingCheck { partition, evaluated: partition.near() <= partition.far() })
                };
                out.push([check(p, q)?, check(q, p)?]);
            }
        }
    }
    Ok(out)
}

pub fn diameter3_test(g: &Graph, mode: Diameter3Mode) -> Result<Diameter3Verdict, Diameter3Error> {
    let mut violations = Vec::new();
    for pair in labelings(g)? {
        let considered: Vec<&LabelingCheck> = match mode {
            Diameter3Mode::AnyLabeling => pair.iter().filter(|c| c.evaluated).collect(),
            Diameter3Mode::Strict => {
                let least = pair.iter().map(|c| c.partition.near()).min().unwrap();
                pair.iter().filter(|c| c.evaluated && c.partition.near() == least).collect()
            }
        };
        let found: Vec<Diameter3Reason> = considered.iter().filter_map(|c| c.violation()).collect();
        let counts = match mode {
            Diameter3Mode::AnyLabeling => !found.is_empty(),
            Diameter3Mode::Strict => !considered.is_empty() && found.len() == considered.len(),
        };
        if counts {
            violations.extend(found);
        }
    }
    Ok(if violations.contains(&Diameter3Reason::Rho3) {
        Diameter3Verdict::Eliminated(Diameter3Reason::Rho3)
    } else if violations.is_empty() {
        Diameter3Verdict::Pass
    } else {
        Diameter3Verdict::Eliminated(Diameter3Reason::Growth)
    })
}

/// For order 8 the growth test fails exactly when some evaluated labeling has
/// `|rho1 ∪ rho2| >= 3`.
pub fn order8_growth_shortcut(g: &Graph) -> Result<bool, Diameter3Error> {
    Ok(labelings(g)?.iter().flatten().any(|c| c.evaluated && c.partition.near() >= 3))
}

fn check_preconditions(g: &Graph) -> Result<(), Diameter3Error> {
    match g.diameter() {
        Diameter::Finite(3) => {}
        d => return Err(Diameter3Error::WrongDiameter(d)),
    }
    if !odd_cycle_free_complement(g) {
        return Err(Diameter3Error::OddCycleComplement);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vertex_set;

    /// K6 on 0..6, x = 6 adjacent to a = 0, y = 7 pendant on x.
    fn b1_shape() -> Graph {
        let mut edges: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        edges.push((6, 0));
        edges.push((7, 6));
        Graph::from_edges(8, &edges).unwrap()
    }

    #[test]
    fn b1_partition() {
        let g = b1_shape();
        let part = rho_partition(&g, 7, 1).unwrap();
        assert_eq!(part.rho1, vertex_set([7]));
        assert_eq!(part.rho2, vertex_set([6]));
        assert_eq!(part.rho3, vertex_set([0]));
        assert_eq!(part.rho4, vertex_set(1..6));
        assert!(!part.rho3_ok());
        assert_eq!(
            diameter3_test(&g, Diameter3Mode::AnyLabeling),
            Ok(Diameter3Verdict::Eliminated(Diameter3Reason::Rho3))
        );
        assert_eq!(
            diameter3_test(&g, Diameter3Mode::Strict),
            Ok(Diameter3Verdict::Eliminated(Diameter3Reason::Rho3))
        );
    }

    #[test]
    fn errors() {
        let g = b1_shape();
        assert!(matches!(rho_partition(&g, 0, 1), Err(Diameter3Error::NotAtDistanceThree { .. })));
        assert!(matches!(diameter3_test(&Graph::complete(4), Diameter3Mode::default()), Err(Diameter3Error::WrongDiameter(_))));
        assert!(matches!(rho_partition(&Graph::path(5), 0, 3), Err(Diameter3Error::TooFar { v: 4, .. })));
    }

    #[test]
    fn path_of_four() {
        // Complement of P4 is P4, so it is bipartite.
        let g = Graph::path(4);
        let part = rho_partition(&g, 0, 3).unwrap();
        assert_eq!((part.near(), part.far()), (2, 2));
        assert_eq!(diameter3_test(&g, Diameter3Mode::AnyLabeling), Ok(Diameter3Verdict::Eliminated(Diameter3Reason::Rho3)));
    }
}
