mod common;

use std::collections::BTreeSet;

use common::{brute_code, brute_connected_codes, graph_tree_code, prufer_tree_codes, CONNECTED_COUNTS, TREE_COUNTS};
use eigmatch_harness::enumerate::{enumerate_caterpillars, enumerate_connected_graphs, enumerate_trees};

#[test]
fn connected_graphs_match_brute_force() {
    for n in 1..=6 {
        let graphs = enumerate_connected_graphs(n).unwrap();
        let codes: BTreeSet<u64> = graphs.iter().map(brute_code).collect();
        assert_eq!(codes.len(), graphs.len(), "duplicate classes at n = {n}");
        assert_eq!(codes, brute_connected_codes(n), "n = {n}");
        assert_eq!(graphs.len(), CONNECTED_COUNTS[n - 1]);
        assert!(graphs.iter().all(|g| g.order() == n && g.is_connected()));
    }
}

#[test]
fn connected_counts_up_to_eight() {
    for n in 7..=8 {
        assert_eq!(enumerate_connected_graphs(n).unwrap().len(), CONNECTED_COUNTS[n - 1]);
    }
}

#[test]
fn trees_match_prufer_oracle() {
    for n in 1..=9 {
        let trees = enumerate_trees(n).unwrap();
        let codes: BTreeSet<String> = trees.iter().map(graph_tree_code).collect();
        assert_eq!(codes.len(), trees.len(), "duplicate trees at n = {n}");
        assert_eq!(codes, prufer_tree_codes(n), "n = {n}");
        assert_eq!(trees.len(), TREE_COUNTS[n - 1]);
    }
    assert_eq!(enumerate_trees(10).unwrap().len(), TREE_COUNTS[9]);
}

#[test]
fn caterpillars_are_the_trees_with_a_path_spine() {
    for n in 1..=10 {
        let expected = enumerate_trees(n)
            .unwrap()
            .into_iter()
            .filter(|t| {
                // Removing the leaves leaves a path (or nothing).
                let inner: Vec<usize> = (0..n).filter(|&v| t.degree(v) > 1).collect();
                inner.iter().all(|&v| inner.iter().filter(|&&w| t.has_edge(v, w)).count() <= 2)
            })
            .count();
        assert_eq!(enumerate_caterpillars(n).unwrap().len(), expected, "n = {n}");
    }
}

#[test]
fn out_of_range_orders_are_rejected() {
    assert!(enumerate_connected_graphs(11).is_err());
    assert!(enumerate_trees(15).is_err());
}
