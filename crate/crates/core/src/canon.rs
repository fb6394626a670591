//! Canonical labelling by equitable refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first non-singleton cell,
//! recurse. Every discrete leaf yields a relabelled adjacency code and the
//! largest code wins. Two prunings keep small symmetric graphs cheap:
//! vertices that are twins (`N(u) - v == N(v) - u`) give identical subtrees,
//! and at the root any vertex already covered by a discovered automorphism
//! orbit is skipped.

use crate::graph::{bit, Bits, Graph};

/// Isomorphism-invariant byte encoding of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Result of a canonical labelling search.
#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Canonical adjacency rows: bit `j` of `code[i]` iff positions `i`, `j`
    /// are adjacent.
    pub code: Vec<u64>,
    /// Equitable partition of the unrefined graph, as ordered cells.
    pub root_cells: Vec<u64>,
    orbit_parent: Vec<usize>,
}

impl CanonicalLabeling {
    pub fn form(&self) -> CanonicalForm {
        encode(self.order.len(), &self.code)
    }

    /// The canonically relabelled graph.
    pub fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.code.clone())
    }

    /// True if `u` and `v` were proven to lie in the same automorphism orbit.
    /// A `false` answer is inconclusive.
    pub fn known_same_orbit(&self, u: usize, v: usize) -> bool {
        find(&self.orbit_parent, u) == find(&self.orbit_parent, v)
    }

    /// Index of the root cell containing `v`.
    pub fn root_cell_of(&self, v: usize) -> usize {
        self.root_cells.iter().position(|&c| c & bit(v) != 0).expect("vertex in some cell")
    }
}

fn encode(n: usize, code: &[u64]) -> CanonicalForm {
    let width = n.div_ceil(8);
    let mut bytes = Vec::with_capacity(1 + n * width);
    bytes.push(n as u8);
    for row in code {
        bytes.extend_from_slice(&row.to_le_bytes()[..width]);
    }
    CanonicalForm(bytes)
}

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        parent[hi] = lo;
    }
}

/// Refines an ordered partition until it is equitable. Cells split in order
/// of increasing neighbour count into the splitting cell, so the result is
/// labelling-invariant.
pub(crate) fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut s = 0;
    let mut scratch: Vec<(u32, usize)> = Vec::with_capacity(64);
    let mut out: Vec<u64> = Vec::with_capacity(64);
    while s < cells.len() {
        let splitter = cells[s];
        out.clear();
        let mut split_any = false;
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                out.push(cell);
                continue;
            }
            scratch.clear();
            scratch.extend(Bits(cell).map(|v| ((g.row(v) & splitter).count_ones(), v)));
            let first = scratch[0].0;
            if scratch.iter().all(|&(c, _)| c == first) {
                out.push(cell);
                continue;
            }
            split_any = true;
            scratch.sort_unstable();
            let mut cur = scratch[0].0;
            let mut mask = 0u64;
            for &(c, v) in scratch.iter() {
                if c != cur {
                    out.push(mask);
                    mask = 0;
                    cur = c;
                }
                mask |= bit(v);
            }
            out.push(mask);
        }
        if split_any {
            std::mem::swap(cells, &mut out);
            // Every cell may now distinguish further; restart the sweep.
            s = 0;
        } else {
            s += 1;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    twins: Vec<u64>,
    best_code: Vec<u64>,
    best_order: Vec<usize>,
    have_best: bool,
    orbit_parent: Vec<usize>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[u64]) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; 64];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let code: Vec<u64> = order
            .iter()
            .map(|&v| Bits(self.g.row(v)).fold(0u64, |acc, u| acc | bit(pos[u])))
            .collect();
        if !self.have_best || code > self.best_code {
            self.best_code = code;
            self.best_order = order;
            self.have_best = true;
        } else if code == self.best_code {
            // best_order[i] -> order[i] is an automorphism.
            for i in 0..self.n {
                union(&mut self.orbit_parent, self.best_order[i], order[i]);
            }
        }
    }

    fn descend(&mut self, mut cells: Vec<u64>, depth: usize) {
        refine(self.g, &mut cells);
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let (idx, &target) = cells
            .iter()
            .enumerate()
            .find(|(_, c)| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let mut tried = 0u64;
        for v in Bits(target) {
            if tried & self.twins[v] != 0 {
                continue;
            }
            if depth == 0 && Bits(tried).any(|u| find(&self.orbit_parent, u) == find(&self.orbit_parent, v)) {
                continue;
            }
            tried |= bit(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..idx]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[idx + 1..]);
            self.descend(child, depth + 1);
        }
    }
}

/// Computes a canonical labelling of `g`.
pub fn canonical_labeling(g: &Graph) -> CanonicalLabeling {
    let n = g.order();
    let mut twins = vec![0u64; n];
    for u in 0..n {
        for v in (u + 1)..n {
            if g.row(u) & !bit(v) == g.row(v) & !bit(u) {
                twins[u] |= bit(v);
                twins[v] |= bit(u);
            }
        }
    }
    let mut orbit_parent: Vec<usize> = (0..n).collect();
    for u in 0..n {
        for v in Bits(twins[u]) {
            union(&mut orbit_parent, u, v);
        }
    }
    let mut root_cells = if n == 0 { Vec::new() } else { vec![crate::graph::low_mask(n)] };
    refine(g, &mut root_cells);
    if n == 0 {
        return CanonicalLabeling { order: vec![], code: vec![], root_cells, orbit_parent };
    }
    let mut search = Search {
        g,
        n,
        twins,
        best_code: Vec::new(),
        best_order: Vec::new(),
        have_best: false,
        orbit_parent,
    };
    search.descend(root_cells.clone(), 0);
    CanonicalLabeling {
        order: search.best_order,
        code: search.best_code,
        root_cells,
        orbit_parent: search.orbit_parent,
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn relabelled_cycles_agree() {
        let c5 = cycle(5);
        let form = canonical_form(&c5);
        for perm in [[1, 3, 0, 4, 2], [4, 3, 2, 1, 0], [2, 0, 4, 1, 3]] {
            assert_eq!(canonical_form(&c5.permute(&perm)), form);
        }
    }

    #[test]
    fn path_and_claw_differ() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let k13 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4), canonical_form(&k13));
        assert!(!is_isomorphic(&p4, &k13));
    }

    #[test]
    fn canonical_graph_is_isomorphic_image() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let lab = canonical_labeling(&g);
        let mut inv = vec![0; 6];
        for (i, &v) in lab.order.iter().enumerate() {
            inv[v] = i;
        }
        assert_eq!(g.permute(&inv), lab.graph());
    }

    #[test]
    fn connected_five_vertex_classes() {
        // Brute force over all 2^10 edge sets.
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut forms = HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edge_list(5, &edges).unwrap();
            if g.is_connected() {
                forms.insert(canonical_form(&g));
            }
        }
        assert_eq!(forms.len(), 21);
    }

    #[test]
    fn symmetric_graphs_terminate() {
        let empty = Graph::empty(12).unwrap();
        let k = Graph::from_edge_list(12, &(0..12).flat_map(|j| (0..j).map(move |i| (i, j))).collect::<Vec<_>>()).unwrap();
        assert_ne!(canonical_form(&empty), canonical_form(&k));
        let petersen = Graph::from_edge_list(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
        )
        .unwrap();
        let lab = canonical_labeling(&petersen);
        assert!((0..10).all(|v| lab.known_same_orbit(0, v)));
    }
}
