//! Canonical labeling by equitable refinement and individualization search.
//!
//! The canonical form is the lexicographically greatest adjacency-row vector over
//! all leaves of the search tree. Automorphisms found at equal leaves prune
//! sibling branches through the pointwise stabilizer of the current path.

use std::fmt;

use super::{encode_graph6, members, Graph, VertexSet, MAX_VERTICES};

/// Isomorphism-invariant identity of a graph: its canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    form: Graph,
}

impl CanonicalKey {
    /// The canonical representative of the isomorphism class.
    pub fn graph(&self) -> &Graph {
        &self.form
    }

    pub fn order(&self) -> usize {
        self.form.order()
    }

    /// Order byte followed by the canonical rows, little endian.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + 2 * self.form.order());
        out.push(self.form.order() as u8);
        for row in self.form.rows() {
            out.extend_from_slice(&row.to_le_bytes());
        }
        out
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(&self.form))
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({self})")
    }
}

/// Result of canonical labeling.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// `order[i]` is the original vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    pub form: Graph,
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    CanonicalKey { form: canonical_labeling(g).form }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &[g.vertex_mask()])
}

/// Canonical labeling respecting an ordered vertex colouring. Vertices not listed
/// in any cell form a final cell.
pub fn canonical_labeling_colored(g: &Graph, cells: &[VertexSet]) -> Labeling {
    let n = g.order();
    let mut partition: Vec<Vec<u8>> = Vec::new();
    let mut covered: VertexSet = 0;
    for &cell in cells {
        let cell = cell & g.vertex_mask() & !covered;
        if cell != 0 {
            partition.push(members(cell).map(|v| v as u8).collect());
            covered |= cell;
        }
    }
    let rest = g.vertex_mask() & !covered;
    if rest != 0 {
        partition.push(members(rest).map(|v| v as u8).collect());
    }
    if n == 0 {
        return Labeling { order: Vec::new(), form: *g };
    }
    let mut search = Search { g, best: None, automorphisms: Vec::new() };
    let mut path = Vec::new();
    search.descend(partition, &mut path);
    let (rows, order) = search.best.expect("search always reaches a leaf");
    Labeling {
        order: order[..n].iter().map(|&v| v as usize).collect(),
        form: Graph::from_rows_unchecked(n, rows),
    }
}

/// Whether some automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    u == v || canonical_labeling_colored(g, &[1 << u]).form == canonical_labeling_colored(g, &[1 << v]).form
}

type Rows = [VertexSet; MAX_VERTICES];
type Perm = [u8; MAX_VERTICES];

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Rows, Perm)>,
    automorphisms: Vec<Perm>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<Vec<u8>>, path: &mut Vec<u8>) {
        refine(self.g, &mut cells);
        let n = self.g.order();
        if cells.len() == n {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .unwrap();
        let candidates = cells[target].clone();
        let mut explored: Vec<u8> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(candidates.iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            self.descend(next, path);
            path.pop();
        }
    }

    fn in_explored_orbit(&self, v: u8, explored: &[u8], path: &[u8]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if path.iter().all(|&p| gamma[p as usize] == p) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x] as usize));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v as usize);
        explored.iter().any(|&u| find(&mut parent, u as usize) == root)
    }

    fn leaf(&mut self, cells: &[Vec<u8>]) {
        let n = self.g.order();
        let mut order: Perm = [0; MAX_VERTICES];
        let mut position: Perm = [0; MAX_VERTICES];
        for (i, cell) in cells.iter().enumerate() {
            order[i] = cell[0];
            position[cell[0] as usize] = i as u8;
        }
        let mut rows: Rows = [0; MAX_VERTICES];
        for i in 0..n {
            for u in members(self.g.neighbors(order[i] as usize)) {
                rows[i] |= 1 << position[u];
            }
        }
        match &self.best {
            None => self.best = Some((rows, order)),
            Some((best_rows, best_order)) => {
                if rows[..n] > best_rows[..n] {
                    self.best = Some((rows, order));
                } else if rows[..n] == best_rows[..n] {
                    let mut gamma: Perm = [0; MAX_VERTICES];
                    for i in 0..n {
                        gamma[order[i] as usize] = best_order[i];
                    }
                    self.automorphisms.push(gamma);
                }
            }
        }
    }
}

/// Refines an ordered partition to the coarsest equitable refinement, splitting
/// cells in place by neighbour counts into each splitter cell.
fn refine(g: &Graph, cells: &mut Vec<Vec<u8>>) {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter: VertexSet = cells[s].iter().fold(0, |acc, &v| acc | (1 << v));
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let count = |v: u8| (g.neighbors(v as usize) & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, u8)> = cells[c].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut pieces: Vec<Vec<u8>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        pieces.push(Vec::new());
                        last = Some(k);
                    }
                    pieces.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, pieces);
                continue 'restart;
            }
        }
        return;
    }
}
