//! One graph per isomorphism class, generated by canonical augmentation.
//!
//! A graph of order `m + 1` is accepted as a child of its parent when the added
//! vertex lies in the automorphism orbit of the last vertex of the canonical
//! labeling. Children of a single parent are deduplicated by canonical key.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{canonical_labeling, same_orbit, Graph, VertexSet, MAX_VERTICES};

/// Largest order the generator accepts.
pub const MAX_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {0} is outside the supported range 0..={MAX_ORDER}")]
    OrderOutOfRange(usize),
}

/// Depth-first stream of canonical representatives of order `n`.
pub struct GraphStream {
    order: usize,
    stack: Vec<Graph>,
}

pub fn enumerate(n: usize) -> Result<GraphStream, EnumerationError> {
    if n > MAX_ORDER {
        return Err(EnumerationError::OrderOutOfRange(n));
    }
    Ok(GraphStream { order: n, stack: vec![Graph::empty(0)] })
}

impl GraphStream {
    pub fn order(&self) -> usize {
        self.order
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while let Some(g) = self.stack.pop() {
            if g.order() == self.order {
                return Some(g);
            }
            let mut children = augmentations(&g);
            children.reverse();
            self.stack.extend(children);
        }
        None
    }
}

/// Canonical children of `parent` with one extra vertex, in subset order.
pub fn augmentations(parent: &Graph) -> Vec<Graph> {
    let m = parent.order();
    assert!(m < MAX_VERTICES);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for subset in 0..(1u32 << m) {
        let child = extend(parent, subset as VertexSet);
        let lab = canonical_labeling(&child);
        let last = lab.order[m];
        if (last == m || same_orbit(&child, m, last)) && seen.insert(lab.form) {
            out.push(lab.form);
        }
    }
    out
}

fn extend(parent: &Graph, neighbors: VertexSet) -> Graph {
    let m = parent.order();
    let mut rows = [0; MAX_VERTICES];
    rows[..m].copy_from_slice(parent.rows());
    rows[m] = neighbors;
    for (u, row) in rows.iter_mut().enumerate().take(m) {
        if neighbors & (1 << u) != 0 {
            *row |= 1 << m;
        }
    }
    Graph::from_rows_unchecked(m + 1, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_key;

    #[test]
    fn small_orders() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate(n).unwrap().count()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn yields_canonical_forms() {
        for g in enumerate(5).unwrap() {
            assert_eq!(canonical_key(&g).graph(), &g);
        }
    }

    #[test]
    fn deterministic() {
        let a: Vec<Graph> = enumerate(6).unwrap().collect();
        let b: Vec<Graph> = enumerate(6).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_large_orders() {
        assert_eq!(enumerate(11).err(), Some(EnumerationError::OrderOutOfRange(11)));
    }
}
