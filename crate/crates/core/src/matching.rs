//! Matching number β(G) and induced matching number β′(G), with
//! lexicographically smallest maximum witnesses.

use serde::{Deserialize, Serialize};

use crate::error::MatchingError;
use crate::graph::{bit, low_mask, Bits, Graph, VertexSet};

/// A sorted set of edges `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet {
    edges: Vec<(usize, usize)>,
}

impl EdgeSet {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| if u < v { (u, v) } else { (v, u) }).collect();
        edges.sort_unstable();
        edges.dedup();
        EdgeSet { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Endpoints of all edges.
    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    fn check_edges(&self, g: &Graph) -> Result<(), MatchingError> {
        match self.edges.iter().find(|&&(u, v)| u >= g.order() || v >= g.order() || !g.has_edge(u, v)) {
            Some(&(u, v)) => Err(MatchingError::NotAnEdge(u, v)),
            None => Ok(()),
        }
    }

    /// Pairwise vertex-disjoint edges of `g`.
    pub fn validate_matching(&self, g: &Graph) -> Result<(), MatchingError> {
        self.check_edges(g)?;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for &(c, d) in &self.edges[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    return Err(MatchingError::NotInduced(a, b, c, d));
                }
            }
        }
        Ok(())
    }

    /// A matching with no edge of `g` joining endpoints of two members.
    pub fn validate_induced(&self, g: &Graph) -> Result<(), MatchingError> {
        self.check_edges(g)?;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            let closed = g.row(a) | g.row(b) | bit(a) | bit(b);
            for &(c, d) in &self.edges[i + 1..] {
                if closed & (bit(c) | bit(d)) != 0 {
                    return Err(MatchingError::NotInduced(a, b, c, d));
                }
            }
        }
        Ok(())
    }
}

/// Maximum matching size on the vertices `alive` of the graph with rows
/// `rows`. Pendant vertices are matched greedily; otherwise a minimum-degree
/// vertex is matched to each neighbour in turn. Some maximum matching covers
/// any non-isolated vertex, so leaving it unmatched never needs a branch.
fn max_matching(rows: &[u64], alive: u64, floor: usize) -> usize {
    let mut alive = alive;
    let mut count = 0;
    'reduce: loop {
        for v in Bits(alive) {
            let nb = rows[v] & alive;
            if nb == 0 {
                alive &= !bit(v);
                continue 'reduce;
            }
            if nb & (nb - 1) == 0 {
                alive &= !(bit(v) | nb);
                count += 1;
                continue 'reduce;
            }
        }
        break;
    }
    if alive == 0 {
        return count;
    }
    let upper = count + alive.count_ones() as usize / 2;
    if upper <= floor {
        return upper.min(floor);
    }
    let v = Bits(alive).min_by_key(|&v| (rows[v] & alive).count_ones()).expect("alive is nonempty");
    let mut best = 0;
    for u in Bits(rows[v] & alive) {
        let sub = 1 + max_matching(rows, alive & !(bit(u) | bit(v)), floor.saturating_sub(count).max(best).saturating_sub(1));
        best = best.max(sub);
        if count + best == upper {
            break;
        }
    }
    count + best
}

/// β(G).
pub fn matching_size(g: &Graph) -> usize {
    max_matching(g.rows(), low_mask(g.order()), 0)
}

/// β(G) with the lexicographically smallest maximum matching.
pub fn matching_number(g: &Graph) -> (usize, EdgeSet) {
    let beta = matching_size(g);
    let mut rows = g.rows().to_vec();
    let mut alive = low_mask(g.order());
    let mut chosen = Vec::new();
    for (u, v) in g.edges() {
        if chosen.len() == beta {
            break;
        }
        if alive & bit(u) == 0 || alive & bit(v) == 0 {
            continue;
        }
        let rest = alive & !(bit(u) | bit(v));
        if 1 + max_matching(&rows, rest, 0) + chosen.len() == beta {
            chosen.push((u, v));
            alive = rest;
        } else {
            rows[u] &= !bit(v);
            rows[v] &= !bit(u);
        }
    }
    (beta, EdgeSet::new(chosen))
}

/// Multiword bitset over the edge indices of a graph.
#[derive(Clone, PartialEq, Eq)]
struct EdgeBits(Vec<u64>);

impl EdgeBits {
    fn empty(m: usize) -> Self {
        EdgeBits(vec![0; m.div_ceil(64).max(1)])
    }

    fn full(m: usize) -> Self {
        let mut s = Self::empty(m);
        for i in 0..m {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn and_count(&self, other: &EdgeBits) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn minus(&self, other: &EdgeBits) -> EdgeBits {
        EdgeBits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| Bits(w).map(move |b| k * 64 + b))
    }
}

/// Maximum independent set on the edge-conflict graph of `g`: two edges
/// conflict iff they share a vertex or some edge joins their endpoints.
struct InducedSearch {
    /// Closed conflict neighbourhood of each edge.
    closed: Vec<EdgeBits>,
    /// Edges incident to each vertex; each forms a clique of the conflict
    /// graph, which gives the clique-cover bound.
    incident: Vec<EdgeBits>,
}

impl InducedSearch {
    fn new(g: &Graph, edges: &[(usize, usize)]) -> Self {
        let m = edges.len();
        let mut incident = vec![EdgeBits::empty(m); g.order()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].insert(i);
            incident[v].insert(i);
        }
        let closed = edges
            .iter()
            .map(|&(u, v)| {
                let reach = g.row(u) | g.row(v) | bit(u) | bit(v);
                let mut s = EdgeBits::empty(m);
                for (j, &(a, b)) in edges.iter().enumerate() {
                    if reach & (bit(a) | bit(b)) != 0 {
                        s.insert(j);
                    }
                }
                s
            })
            .collect();
        InducedSearch { closed, incident }
    }

    /// Greedy cover of `cand` by vertex-incidence cliques.
    fn clique_cover_bound(&self, cand: &EdgeBits) -> usize {
        let mut left = cand.clone();
        let mut cliques = 0;
        while !left.is_empty() {
            let best = self
                .incident
                .iter()
                .max_by_key(|inc| left.and_count(inc))
                .expect("nonempty candidate set has incident vertices");
            left = left.minus(best);
            cliques += 1;
        }
        cliques
    }

    /// Size of a maximum independent set inside `cand`, or any value
    /// `<= floor` once it is clear the answer cannot exceed `floor`.
    fn solve(&self, cand: EdgeBits, floor: usize) -> usize {
        let mut cand = cand;
        let mut count = 0;
        // Edges with at most one conflict inside `cand` can always be taken.
        loop {
            let Some(e) = cand.iter().find(|&e| self.closed[e].and_count(&cand) <= 2) else {
                break;
            };
            cand = cand.minus(&self.closed[e]);
            count += 1;
        }
        if cand.is_empty() {
            return count;
        }
        let upper = count + self.clique_cover_bound(&cand);
        if upper <= floor {
            return upper;
        }
        let v = cand.iter().max_by_key(|&e| self.closed[e].and_count(&cand)).expect("nonempty");
        let with = 1 + self.solve(cand.minus(&self.closed[v]), floor.saturating_sub(count + 1));
        let mut best = with;
        if count + best < upper {
            let mut without = cand;
            without.remove(v);
            best = best.max(self.solve(without, floor.saturating_sub(count).max(best)));
        }
        count + best
    }
}

/// β′(G).
pub fn induced_matching_size(g: &Graph) -> usize {
    let edges = g.edges();
    if edges.is_empty() {
        return 0;
    }
    InducedSearch::new(g, &edges).solve(EdgeBits::full(edges.len()), 0)
}

/// β′(G) with the lexicographically smallest maximum induced matching.
pub fn induced_matching_number(g: &Graph) -> (usize, EdgeSet) {
    let edges = g.edges();
    if edges.is_empty() {
        return (0, EdgeSet::default());
    }
    let search = InducedSearch::new(g, &edges);
    let mut cand = EdgeBits::full(edges.len());
    let target = search.solve(cand.clone(), 0);
    let mut chosen = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        if chosen.len() == target {
            break;
        }
        if !cand.contains(i) {
            continue;
        }
        let rest = cand.minus(&search.closed[i]);
        if 1 + search.solve(rest.clone(), 0) + chosen.len() == target {
            chosen.push(e);
            cand = rest;
        } else {
            cand.remove(i);
        }
    }
    (target, EdgeSet::new(chosen))
}

/// A vertex on some cycle of `g` not covered by the induced matching `m`;
/// the smallest such label. `None` for forests or when every cycle vertex
/// is covered.
pub fn unsaturated_cycle_vertex(g: &Graph, m: &EdgeSet) -> Result<Option<usize>, MatchingError> {
    m.validate_induced(g)?;
    let free = g.cycle_vertices().bits() & !m.covered().bits();
    Ok(Bits(free).next())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn paths() {
        for n in 1..=12 {
            let g = path(n);
            assert_eq!(matching_size(&g), n / 2, "beta P{n}");
            assert_eq!(induced_matching_size(&g), if n >= 2 { (n + 1) / 3 } else { 0 }, "beta' P{n}");
        }
        let (b, w) = matching_number(&path(7));
        assert_eq!(b, 3);
        assert_eq!(w.edges(), &[(0, 1), (2, 3), (4, 5)]);
        let (b, w) = induced_matching_number(&path(7));
        assert_eq!(b, 2);
        assert_eq!(w.edges(), &[(0, 1), (3, 4)]);
    }

    #[test]
    fn small_families() {
        let k14 = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(matching_number(&k14).0, 1);
        assert_eq!(induced_matching_number(&k14).0, 1);
        let c5 = cycle(5);
        assert_eq!(matching_size(&c5), 2);
        assert_eq!(induced_matching_size(&c5), 1);
        let empty = Graph::empty(4).unwrap();
        assert_eq!(matching_number(&empty), (0, EdgeSet::default()));
        assert_eq!(induced_matching_number(&empty), (0, EdgeSet::default()));
        assert_eq!(induced_matching_number(&Graph::empty(0).unwrap()).0, 0);
    }

    #[test]
    fn witnesses_validate() {
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        let (b, m) = matching_number(&g);
        assert_eq!(b, m.len());
        m.validate_matching(&g).unwrap();
        let (bp, im) = induced_matching_number(&g);
        assert_eq!(bp, im.len());
        im.validate_induced(&g).unwrap();
        assert!(bp <= b);
    }

    #[test]
    fn validation_errors() {
        let c5 = cycle(5);
        assert_eq!(EdgeSet::new([(0, 2)]).validate_matching(&c5), Err(MatchingError::NotAnEdge(0, 2)));
        assert!(EdgeSet::new([(0, 1), (2, 3)]).validate_matching(&c5).is_ok());
        assert!(EdgeSet::new([(0, 1), (2, 3)]).validate_induced(&c5).is_err());
    }

    #[test]
    fn unsaturated_vertices() {
        let c5 = cycle(5);
        assert_eq!(unsaturated_cycle_vertex(&c5, &EdgeSet::new([(0, 1)])).unwrap(), Some(2));
        assert_eq!(unsaturated_cycle_vertex(&path(5), &EdgeSet::new([(0, 1)])).unwrap(), None);
        assert!(unsaturated_cycle_vertex(&c5, &EdgeSet::new([(0, 2)])).is_err());
    }
}
