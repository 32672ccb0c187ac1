//! Necessary conditions on degree graphs: the three-vertex condition, the
//! odd-cycle-free complement, clique signatures and the disconnected-case tests.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error("c(n) needs n >= 2, got {0}")]
    OrderTooSmall(usize),
}

/// Larger and smaller clique size of a two-clique cover, `a + b = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliqueSignature {
    pub a: usize,
    pub b: usize,
}

impl fmt::Display for CliqueSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Component sizes of a graph made of two disjoint complete graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComponentPair {
    pub n_small: usize,
    pub n_large: usize,
}

impl fmt::Display for ComponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K{}+K{}", self.n_large, self.n_small)
    }
}

/// Every three vertices span at least one edge.
pub fn palfy_condition(g: &Graph) -> bool {
    g.complement().find_triangle().is_none()
}

pub fn odd_cycle_free_complement(g: &Graph) -> bool {
    g.complement().is_bipartite()
}

/// Signature used to file survivors: `(w, n - w)` for the clique number `w`,
/// capped at `n - 1` so that complete graphs read as `(n-1, 1)`. This differs from
/// [`partition_signature`] when no maximum clique leaves a clique behind.
pub fn signature(g: &Graph) -> Option<CliqueSignature> {
    let n = g.order();
    if n < 2 || !odd_cycle_free_complement(g) {
        return None;
    }
    let a = g.clique_number().min(n - 1);
    Some(CliqueSignature { a, b: n - a })
}

/// Sizes of the largest two-clique vertex partition.
pub fn partition_signature(g: &Graph) -> Option<CliqueSignature> {
    g.max_two_clique_partition().map(|p| {
        let (a, b) = p.sizes();
        CliqueSignature { a, b }
    })
}

/// Present iff `g` is exactly two disjoint complete graphs.
pub fn disconnected_shape(g: &Graph) -> Option<ComponentPair> {
    let comps = g.components();
    if comps.len() != 2 || !comps.iter().all(|&c| g.is_clique(c)) {
        return None;
    }
    let (x, y) = (comps[0].count_ones() as usize, comps[1].count_ones() as usize);
    Some(ComponentPair { n_small: x.min(y), n_large: x.max(y) })
}

/// `N >= 2^n - 1` for component sizes `n <= N`.
pub fn palfy_inequality(p: ComponentPair) -> bool {
    p.n_small < usize::BITS as usize - 1 && p.n_large + 1 >= 1usize << p.n_small
}

/// Largest `alpha >= 1` with `n >= 2^alpha + alpha - 1`.
pub fn c(n: usize) -> Result<usize, ConditionError> {
    if n < 2 {
        return Err(ConditionError::OrderTooSmall(n));
    }
    let mut alpha = 1;
    while (1usize << (alpha + 1)) + alpha <= n {
        alpha += 1;
    }
    Ok(alpha)
}
