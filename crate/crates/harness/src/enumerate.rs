//! Isomorphism-class enumeration of connected graphs and trees.

use std::collections::HashSet;

use eigmatch_core::families::is_caterpillar;
use eigmatch_core::{canonical_labeling, Graph, VertexSet};
use rayon::prelude::*;

use crate::error::HarnessError;

pub const CONNECTED_MAX_ORDER: usize = 10;
pub const TREE_MAX_ORDER: usize = 14;

/// One representative (the canonical labelling) per isomorphism class,
/// ordered by canonical form.
fn canonical_reps(graphs: impl IntoParallelIterator<Item = Graph>) -> Vec<Graph> {
    let mut labelled: Vec<(Vec<u8>, Graph)> = graphs
        .into_par_iter()
        .map(|g| {
            let c = canonical_labeling(&g);
            (c.form().as_bytes().to_vec(), c.graph())
        })
        .collect();
    labelled.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    labelled.dedup_by(|a, b| a.0 == b.0);
    labelled.into_iter().map(|(_, g)| g).collect()
}

/// Smallest degree among non-cut vertices. Every connected graph with at
/// least two vertices has a non-cut vertex.
fn min_noncut_degree(g: &Graph) -> usize {
    (0..g.order()).filter(|&v| !g.is_cut_vertex(v)).map(|v| g.degree(v)).min().expect("connected graphs have a non-cut vertex")
}

/// Connected graphs on `n` vertices, one per isomorphism class.
///
/// Each class on `n` vertices is reached from a class on `n − 1` vertices by
/// adding a vertex; only extensions whose new vertex has minimum degree among
/// the non-cut vertices are kept (some non-cut vertex of least degree can
/// always be deleted to reach the parent), and the survivors are reduced to
/// canonical representatives.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, HarnessError> {
    if !(1..=CONNECTED_MAX_ORDER).contains(&n) {
        return Err(HarnessError::OrderOutOfRange { n, min: 1, max: CONNECTED_MAX_ORDER });
    }
    let mut level = vec![Graph::empty(1).expect("one vertex")];
    for m in 2..=n {
        let parents = std::mem::take(&mut level);
        let children: Vec<Graph> = parents
            .par_iter()
            .flat_map_iter(|p| {
                (1u64..1 << (m - 1)).filter_map(move |mask| {
                    let mut child = p.clone();
                    child.add_vertex(VertexSet::from_bits(mask)).expect("order within limits");
                    (child.degree(m - 1) == min_noncut_degree(&child)).then_some(child)
                })
            })
            .collect();
        level = canonical_reps(children);
    }
    Ok(level)
}

/// Connected graphs on `1..=max_n` vertices.
pub fn connected_graphs_up_to(max_n: usize) -> Result<Vec<Graph>, HarnessError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_connected_graphs(n)?);
    }
    Ok(out)
}

/// Canonical level sequences of rooted trees on `n` vertices, in the
/// successor order of Beyer and Hedetniemi.
fn rooted_level_sequences(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut seq: Vec<usize> = (0..n).collect();
    loop {
        out.push(seq.clone());
        let Some(p) = (0..n).rev().find(|&i| seq[i] > 1) else {
            break;
        };
        let q = (0..p).rev().find(|&i| seq[i] == seq[p] - 1).expect("a parent level precedes");
        for i in p..n {
            seq[i] = seq[i - (p - q)];
        }
    }
    out
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut g = Graph::empty(n).expect("order within limits");
    let mut last_at = vec![0usize; n];
    for (v, &l) in levels.iter().enumerate() {
        if l > 0 {
            g.try_add_edge(last_at[l - 1], v).expect("valid tree edge");
        }
        last_at[l] = v;
    }
    g
}

/// Free trees on `n` vertices, one per isomorphism class: rooted level
/// sequences whose root is a center, reduced to canonical representatives.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, HarnessError> {
    if !(1..=TREE_MAX_ORDER).contains(&n) {
        return Err(HarnessError::OrderOutOfRange { n, min: 1, max: TREE_MAX_ORDER });
    }
    let rooted: Vec<Graph> = rooted_level_sequences(n)
        .into_iter()
        .filter(|levels| {
            // The root is a center iff its eccentricity is ⌈diam/2⌉.
            let height = levels.iter().copied().max().unwrap_or(0);
            let t = tree_from_levels(levels);
            n == 1 || height == t.diameter().expect("trees are connected").div_ceil(2)
        })
        .map(|levels| tree_from_levels(&levels))
        .collect();
    Ok(canonical_reps(rooted))
}

pub fn trees_up_to(max_n: usize) -> Result<Vec<Graph>, HarnessError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_trees(n)?);
    }
    Ok(out)
}

/// Caterpillars on `n` vertices, filtered from the tree enumeration.
pub fn enumerate_caterpillars(n: usize) -> Result<Vec<Graph>, HarnessError> {
    Ok(enumerate_trees(n)?.into_iter().filter(|t| matches!(is_caterpillar(t), Ok(Some(_)))).collect())
}

/// Distinct canonical forms in a list, for counting.
pub fn distinct_classes(graphs: &[Graph]) -> usize {
    graphs.iter().map(|g| canonical_labeling(g).form()).collect::<HashSet<_>>().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_sequences_count_rooted_trees() {
        let counts: Vec<usize> = (1..=8).map(|n| rooted_level_sequences(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115]);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        let trees: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(enumerate_connected_graphs(0).is_err());
        assert!(enumerate_trees(15).is_err());
    }

    #[test]
    fn caterpillars_are_trees_without_spiders() {
        // Of the 11 trees on 7 vertices, only the spider with three legs of
        // length 2 is not a caterpillar.
        assert_eq!(enumerate_caterpillars(7).unwrap().len(), 10);
    }
}
