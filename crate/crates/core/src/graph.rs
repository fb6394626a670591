//! Simple undirected graphs on at most 64 vertices.
//!
//! Each adjacency row is a single `u64`, so neighbourhood queries, induced
//! subgraphs and breadth-first search are word-parallel.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// A set of vertices of a graph with at most 64 vertices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A simple undirected labelled graph.
///
/// `adj[u]` has bit `v` set iff `{u, v}` is an edge. Rows are symmetric and
/// loop-free; both are checked on construction in debug builds.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, cap: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, cap: MAX_VERTICES });
        }
        let mask = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let v = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if row & bit(u) != 0 {
                return Err(GraphError::Loop(u));
            }
            for v in Bits(row) {
                if rows[v] & bit(u) == 0 {
                    return Err(GraphError::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Rows that are already known to be valid (internal fast path).
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        let g = Graph { n: rows.len(), adj: rows };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n;
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Panicking variant used by the family constructors, whose indices are
    /// correct by construction.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("constructor produced an invalid edge");
    }

    /// Symmetry, loop-freeness and range of every row.
    pub fn check_invariants(&self) -> Result<(), GraphError> {
        Graph::from_rows(self.adj.clone()).map(|_| ())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < 64 && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reach(0, low_mask(self.n)) == low_mask(self.n)
    }

    /// Number of connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        let mut left = low_mask(self.n);
        let mut count = 0;
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            left &= !self.reach(v, left);
            count += 1;
        }
        count
    }

    /// Vertex sets of the connected components, ordered by minimum label.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut left = low_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.reach(v, left);
            left &= !comp;
            out.push(comp);
        }
        out
    }

    /// Splits the graph into its nontrivial components and isolated vertices.
    pub fn connected_components(&self) -> ComponentSplit {
        let mut nontrivial = Vec::new();
        let mut isolated = VertexSet::EMPTY;
        for mask in self.component_masks() {
            if mask.count_ones() == 1 {
                isolated = isolated.union(VertexSet(mask));
            } else {
                let (graph, vertices) = self.induced(VertexSet(mask));
                nontrivial.push(Component { graph, vertices });
            }
        }
        ComponentSplit { nontrivial, isolated }
    }

    /// `|E| - |V| + ω`, zero exactly for forests.
    pub fn cyclomatic_number(&self) -> usize {
        self.edge_count() + self.component_count() - self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.edge_count() + 1 == self.n
    }

    /// BFS eccentricity of `v` inside its component.
    pub fn eccentricity(&self, v: usize) -> usize {
        let mut seen = bit(v);
        let mut frontier = seen;
        let mut depth = 0;
        loop {
            let mut next = 0u64;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            next &= !seen;
            if next == 0 {
                return depth;
            }
            seen |= next;
            frontier = next;
            depth += 1;
        }
    }

    /// Largest shortest-path distance. Rejects disconnected and empty graphs.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        if self.n == 0 || !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok((0..self.n).map(|v| self.eccentricity(v)).max().unwrap_or(0))
    }

    /// Shortest-path distances from `v`; `usize::MAX` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::from([v]);
        dist[v] = 0;
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Induced subgraph on `keep`, relabelled in increasing order. The second
    /// value maps new labels back to old ones.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().filter(|&v| v < self.n).collect();
        let rows = map
            .iter()
            .map(|&old| {
                let row = self.adj[old] & keep.bits();
                map.iter()
                    .enumerate()
                    .filter(|&(_, &o)| row & bit(o) != 0)
                    .fold(0u64, |acc, (i, _)| acc | bit(i))
            })
            .collect();
        (Graph::from_rows_unchecked(rows), map)
    }

    /// `G - U`: removes the given vertices and their edges.
    pub fn delete_vertices(&self, remove: VertexSet) -> (Graph, Vec<usize>) {
        self.induced(VertexSet(low_mask(self.n) & !remove.bits()))
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.delete_vertices(VertexSet::singleton(v)).0
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n, cap: MAX_VERTICES });
        }
        let shift = self.n;
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|&r| r << shift));
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// `GuvH`: disjoint union of `self` and `other` plus the bridge
    /// `u`–`v`, where `v` is a vertex of `other` (shifted by `self.order()`).
    pub fn join_bridge(&self, u: usize, other: &Graph, v: usize) -> Result<Graph, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= other.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: other.n });
        }
        let mut g = self.disjoint_union(other)?;
        g.add_edge(u, self.n + v);
        Ok(g)
    }

    /// Adds a new vertex adjacent to `nbrs`; returns its label.
    pub fn add_vertex(&mut self, nbrs: VertexSet) -> Result<usize, GraphError> {
        if self.n >= MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: self.n + 1, cap: MAX_VERTICES });
        }
        let v = self.n;
        self.n += 1;
        self.adj.push(0);
        for u in nbrs.iter() {
            self.try_add_edge(u, v)?;
        }
        Ok(v)
    }

    /// Applies a relabelling: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            let mut r = 0u64;
            for v in Bits(self.adj[u]) {
                r |= bit(perm[v]);
            }
            rows[perm[u]] = r;
        }
        Graph::from_rows_unchecked(rows)
    }

    /// True if removing `v` disconnects the component containing it.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        let comp = self.reach(v, low_mask(self.n));
        let rest = comp & !bit(v);
        if rest == 0 {
            return false;
        }
        let start = rest.trailing_zeros() as usize;
        self.reach(start, rest) != rest
    }

    /// Vertices lying on at least one cycle.
    pub fn cycle_vertices(&self) -> VertexSet {
        // A vertex is on a cycle iff one of its incident edges is not a bridge.
        let mut on_cycle = VertexSet::EMPTY;
        for (u, v) in self.edges() {
            let mut h = self.clone();
            h.adj[u] &= !bit(v);
            h.adj[v] &= !bit(u);
            if h.reach(u, low_mask(self.n)) & bit(v) != 0 {
                on_cycle.insert(u);
                on_cycle.insert(v);
            }
        }
        on_cycle
    }

    /// Degree-1 vertices.
    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// One nontrivial component with the map from its labels to the parent's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

impl Component {
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

/// Partition of a graph into nontrivial components and isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSplit {
    pub nontrivial: Vec<Component>,
    pub isolated: VertexSet,
}

impl ComponentSplit {
    /// ω, counting isolated vertices as components.
    pub fn component_count(&self) -> usize {
        self.nontrivial.len() + self.isolated.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let c3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(c3.edge_count(), 3);
        let e2 = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(e2.edge_count(), 0);
        let g = c5();
        assert!((0..5).all(|v| g.degree(v) == 2));
        let dup = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::Loop(1))));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn rows_are_validated() {
        assert!(matches!(Graph::from_rows(vec![0b10, 0]), Err(GraphError::Asymmetric(0, 1))));
        assert!(matches!(Graph::from_rows(vec![0b1]), Err(GraphError::Loop(0))));
        assert!(Graph::from_rows(vec![0b100, 0]).is_err());
    }

    #[test]
    fn components() {
        let g = c5();
        let split = g.connected_components();
        assert_eq!(split.nontrivial.len(), 1);
        assert_eq!(split.nontrivial[0].graph.order(), 5);
        assert!(split.isolated.is_empty());

        let e2 = Graph::empty(2).unwrap();
        let split = e2.connected_components();
        assert!(split.nontrivial.is_empty());
        assert_eq!(split.isolated.len(), 2);

        // C3 on {0,1,2}, K_{1,2} centred at 4 on {3,4,5}, isolated 6.
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]).unwrap();
        let split = g.connected_components();
        assert_eq!(split.nontrivial.len(), 2);
        assert_eq!(split.isolated.to_vec(), vec![6]);
        assert_eq!(split.component_count(), 3);
        assert_eq!(split.nontrivial[1].vertices, vec![3, 4, 5]);
    }

    #[test]
    fn cyclomatic() {
        assert_eq!(c5().cyclomatic_number(), 1);
        let path9 = Graph::from_edge_list(9, &(0..8).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        assert_eq!(path9.cyclomatic_number(), 0);
        assert_eq!(Graph::empty(4).unwrap().cyclomatic_number(), 0);
    }

    #[test]
    fn diameters() {
        let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.diameter().unwrap(), 2);
        let p7 = Graph::from_edge_list(7, &(0..6).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        assert_eq!(p7.diameter().unwrap(), 6);
        assert_eq!(Graph::empty(1).unwrap().diameter().unwrap(), 0);
        assert!(matches!(Graph::empty(2).unwrap().diameter(), Err(GraphError::Disconnected)));
    }

    #[test]
    fn deletion() {
        let (p4, map) = c5().delete_vertices(VertexSet::singleton(0));
        assert_eq!(p4.order(), 4);
        assert_eq!(p4.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(map, vec![1, 2, 3, 4]);
        let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.delete_vertex(0).edge_count(), 0);
    }

    #[test]
    fn bridges_preserve_cyclomatic_number() {
        let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let p4 = p2.join_bridge(0, &p2, 0).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4.diameter().unwrap(), 3);
        let c3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let g = c3.join_bridge(2, &p2, 1).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.cyclomatic_number(), 1);
        assert!(c3.join_bridge(3, &p2, 0).is_err());
    }

    #[test]
    fn cycle_vertices_and_cut_vertices() {
        let c3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let g = c3.join_bridge(2, &p2, 0).unwrap();
        assert_eq!(g.cycle_vertices().to_vec(), vec![0, 1, 2]);
        assert!(g.is_cut_vertex(2));
        assert!(g.is_cut_vertex(3));
        assert!(!g.is_cut_vertex(4));
        assert!(!g.is_cut_vertex(0));
    }
}
