//! Small simple graphs with bitset adjacency.
//!
//! Every graph handled by the engine has at most [`MAX_VERTICES`] vertices, so a
//! vertex set fits in a `u16` and an adjacency row is a single word.

mod canon;
mod dot;
mod graph6;

pub use canon::{canonical_key, canonical_labeling, canonical_labeling_colored, same_orbit, CanonicalKey, Labeling};
pub use dot::to_dot;
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 16;

/// A set of vertices, one bit per vertex.
pub type VertexSet = u16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graphs are limited to {max} vertices, got {n}", max = MAX_VERTICES)]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop on vertex {v}")]
    SelfLoop { v: usize },
    #[error("edge {u}-{v} is not present")]
    MissingEdge { u: usize, v: usize },
    #[error("adjacency rows are not symmetric at {u}-{v}")]
    Asymmetric { u: usize, v: usize },
}

/// Iterates the members of a vertex set in increasing order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Builds a vertex set from a list of vertices.
pub fn vertex_set(vertices: impl IntoIterator<Item = usize>) -> VertexSet {
    vertices.into_iter().fold(0, |acc, v| acc | (1 << v))
}

/// Shortest-path diameter of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// Two disjoint cliques covering every vertex, `large` at least as big as `small`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoCliquePartition {
    pub large: VertexSet,
    pub small: VertexSet,
}

impl TwoCliquePartition {
    pub fn sizes(&self) -> (usize, usize) {
        (self.large.count_ones() as usize, self.small.count_ones() as usize)
    }
}

/// An immutable simple graph on at most 16 vertices.
///
/// Equality is labeled equality; use [`canonical_key`] to compare up to isomorphism.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [VertexSet; MAX_VERTICES],
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", encode_graph6(self))
    }
}

const UNREACHABLE: u8 = u8::MAX;

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "graphs are limited to {MAX_VERTICES} vertices, got {n}");
        Graph { n: n as u8, adj: [0; MAX_VERTICES] }
    }

    pub fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    /// Path on `n` vertices, `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.set_edge(0, n - 1);
        }
        g
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.set_edge(0, v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating symmetry and range.
    pub fn from_rows(rows: &[VertexSet]) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut g = Graph::empty(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !g.vertex_mask() != 0 {
                let v = (row & !g.vertex_mask()).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if row & (1 << u) != 0 {
                return Err(GraphError::SelfLoop { v: u });
            }
            for v in members(row) {
                if rows[v] & (1 << u) == 0 {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
            g.adj[u] = row;
        }
        Ok(g)
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: [VertexSet; MAX_VERTICES]) -> Graph {
        Graph { n: n as u8, adj: rows }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.order() })
        }
    }

    /// A copy of this graph with the edge `u-v` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        let mut g = *self;
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// All vertices as a set.
    pub fn vertex_mask(&self) -> VertexSet {
        if self.n == 0 {
            0
        } else {
            (((1u32) << self.n) - 1) as VertexSet
        }
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj[..self.order()]
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & (1 << v) != 0
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| members(((self.adj[u] as u32) >> (u + 1) << (u + 1)) as VertexSet).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.order() * self.order().saturating_sub(1)
    }

    /// The common degree when every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = (0..self.order()).map(|v| self.degree(v));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let mut g = Graph::empty(self.order());
        for v in 0..self.order() {
            g.adj[v] = all & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// Applies a relabeling: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length must match order");
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Breadth-first search frontier expansion restricted to `within`.
    fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen: VertexSet = 1 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_mask())
    }

    fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.reach(v, within);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = [UNREACHABLE; MAX_VERTICES];
        dist[source] = 0;
        let mut seen: VertexSet = 1 << source;
        let mut frontier = seen;
        let mut level = 0u8;
        while frontier != 0 {
            level += 1;
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            for v in members(next) {
                dist[v] = level;
            }
            seen |= next;
            frontier = next;
        }
        dist[..self.order()]
            .iter()
            .map(|&d| (d != UNREACHABLE).then_some(d as usize))
            .collect()
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for v in 0..self.order() {
            for d in self.distances_from(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Vertices whose removal increases the number of connected components.
    pub fn cut_vertices(&self) -> VertexSet {
        let base = self.components().len();
        let all = self.vertex_mask();
        (0..self.order())
            .filter(|&v| self.components_within(all & !(1 << v)).len() > base)
            .fold(0, |acc, v| acc | (1 << v))
    }

    /// A proper two-colouring as the set of colour-0 vertices, if one exists.
    /// Each component's smallest vertex gets colour 0.
    pub fn two_coloring(&self) -> Option<VertexSet> {
        let mut color0: VertexSet = 0;
        for comp in self.components() {
            let side = self.component_side(comp);
            let other = comp & !side;
            let proper = |set: VertexSet| members(set).all(|v| self.adj[v] & set == 0);
            if !proper(side) || !proper(other) {
                return None;
            }
            color0 |= side;
        }
        Some(color0)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A shortest odd cycle as a vertex sequence, if the graph has one.
    pub fn shortest_odd_cycle(&self) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for root in 0..self.order() {
            // BFS tree from root; an edge between equal levels closes an odd cycle.
            let mut parent = [usize::MAX; MAX_VERTICES];
            let dist = self.distances_from(root);
            let mut order: Vec<usize> = (0..self.order()).filter(|&v| dist[v].is_some()).collect();
            order.sort_by_key(|&v| dist[v]);
            for &v in &order {
                if v == root {
                    continue;
                }
                let d = dist[v].unwrap();
                parent[v] = members(self.adj[v]).find(|&u| dist[u] == Some(d - 1)).unwrap();
            }
            for (u, v) in self.edges() {
                if dist[u].is_none() || dist[u] != dist[v] {
                    continue;
                }
                let path_to_root = |mut x: usize| {
                    let mut p = vec![x];
                    while x != root {
                        x = parent[x];
                        p.push(x);
                    }
                    p
                };
                let pu = path_to_root(u);
                let pv = path_to_root(v);
                // Cut both paths at their lowest common ancestor.
                let mut i = pu.len() - 1;
                let mut j = pv.len() - 1;
                while i > 0 && j > 0 && pu[i - 1] == pv[j - 1] {
                    i -= 1;
                    j -= 1;
                }
                let mut cycle: Vec<usize> = pu[..=i].to_vec();
                cycle.extend(pv[..j].iter().rev());
                if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                    best = Some(cycle);
                }
            }
        }
        best
    }

    /// Three pairwise adjacent vertices, if any.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (u, v) in self.edges() {
            let common = self.adj[u] & self.adj[v];
            if let Some(w) = members(common).next() {
                let mut t = [u, v, w];
                t.sort_unstable();
                return Some(t);
            }
        }
        None
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        members(set).all(|v| (self.adj[v] | (1 << v)) & set == set)
    }

    /// Size of a largest clique.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, candidates: VertexSet, size: usize, best: &mut usize) {
            if candidates == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + candidates.count_ones() as usize <= *best {
                return;
            }
            let mut rest = candidates;
            while rest != 0 {
                if size + rest.count_ones() as usize <= *best {
                    return;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                grow(g, rest & g.adj[v], size + 1, best);
            }
        }
        let mut best = 0;
        grow(self, self.vertex_mask(), 0, &mut best);
        best
    }

    /// Among all partitions of the vertices into two nonempty cliques, one whose
    /// larger part is as large as possible. Ties resolve to the lexicographically
    /// smallest vertex list for the larger part.
    pub fn max_two_clique_partition(&self) -> Option<TwoCliquePartition> {
        if self.order() < 2 {
            return None;
        }
        let comp = self.complement();
        comp.two_coloring()?;
        // Each complement component contributes one colour class to each clique.
        let sides: Vec<(VertexSet, VertexSet)> = comp
            .components()
            .into_iter()
            .map(|c| {
                let a = comp.component_side(c);
                (a, c & !a)
            })
            .collect();
        let all = self.vertex_mask();
        let mut best: Option<VertexSet> = None;
        for choice in 0u32..(1 << sides.len()) {
            let large = sides
                .iter()
                .enumerate()
                .fold(0, |acc, (i, &(a, b))| acc | if choice & (1 << i) == 0 { a } else { b });
            let small = all & !large;
            if large == 0 || small == 0 || large.count_ones() < small.count_ones() {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    large.count_ones() > b.count_ones()
                        || (large.count_ones() == b.count_ones() && lex_less(large, b))
                }
            };
            if better {
                best = Some(large);
            }
        }
        best.map(|large| TwoCliquePartition { large, small: all & !large })
    }

    /// Colour-0 side of a bipartite component (smallest vertex on colour 0).
    fn component_side(&self, comp: VertexSet) -> VertexSet {
        let mut side = 1 << comp.trailing_zeros();
        let mut other = 0;
        let mut frontier = side;
        let mut on_side = true;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= comp & !(side | other);
            if on_side {
                other |= next;
            } else {
                side |= next;
            }
            on_side = !on_side;
            frontier = next;
        }
        side
    }

    /// Induced subgraph on `keep`, renumbered by order-preserving compaction.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep & self.vertex_mask();
        let index: Vec<usize> = members(keep).collect();
        let mut position = [usize::MAX; MAX_VERTICES];
        for (i, &v) in index.iter().enumerate() {
            position[v] = i;
        }
        let mut g = Graph::empty(index.len());
        for (i, &v) in index.iter().enumerate() {
            for u in members(self.adj[v] & keep) {
                g.adj[i] |= 1 << position[u];
            }
        }
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertex_mask() & !(1 << v)))
    }

    /// Removes the listed edges; every one of them must be present.
    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = *self;
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                self.check_vertex(u)?;
                self.check_vertex(v)?;
                return Err(GraphError::MissingEdge { u, v });
            }
            g.clear_edge(u, v);
        }
        Ok(g)
    }

    /// `a` on vertices `0..a.order()`, `b` shifted after it, no edges between.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph, GraphError> {
        let n = a.order() + b.order();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let shift = a.order();
        let mut g = Graph::empty(n);
        g.adj[..shift].copy_from_slice(a.rows());
        for v in 0..b.order() {
            g.adj[v + shift] = b.adj[v] << shift;
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(a: &Graph, b: &Graph) -> Result<Graph, GraphError> {
        let mut g = Graph::disjoint_union(a, b)?;
        let left = a.vertex_mask();
        let right = g.vertex_mask() & !left;
        for v in members(left) {
            g.adj[v] |= right;
        }
        for v in members(right) {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// The graph as the join of the subgraphs induced by the complement's
    /// components. A single part means the graph is not a join.
    pub fn join_parts(&self) -> Vec<VertexSet> {
        self.complement().components()
    }
}

fn lex_less(a: VertexSet, b: VertexSet) -> bool {
    members(a).lt(members(b))
}
