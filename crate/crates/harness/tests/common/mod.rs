//! Enumeration oracles that share no code with the generators under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use eigmatch_core::Graph;

/// Unlabeled free trees on 1..=10 vertices.
pub const TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
/// Connected graphs on 1..=8 vertices.
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Minimum upper-triangle bit string over all relabelings.
fn min_code(adj: &[[bool; 8]], perms: &[Vec<usize>], pairs: &[(usize, usize)]) -> u64 {
    perms
        .iter()
        .map(|p| pairs.iter().enumerate().fold(0u64, |acc, (k, &(i, j))| if adj[p[i]][p[j]] { acc | 1 << k } else { acc }))
        .min()
        .unwrap_or(0)
}

fn adjacency(g: &Graph) -> Vec<[bool; 8]> {
    let n = g.order();
    (0..n).map(|u| std::array::from_fn(|v| v < n && g.has_edge(u, v))).collect()
}

/// Brute-force canonical code of a graph on at most 7 vertices.
pub fn brute_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 7);
    min_code(&adjacency(g), &permutations(n), &pairs(n))
}

/// Every labeled graph on `n` vertices, kept if connected, reduced to its
/// brute-force canonical code.
pub fn brute_connected_codes(n: usize) -> BTreeSet<u64> {
    let perms = permutations(n);
    let pairs = pairs(n);
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut adj = vec![[false; 8]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        if connected(&adj) {
            out.insert(min_code(&adj, &perms, &pairs));
        }
    }
    out
}

fn connected(adj: &[[bool; 8]]) -> bool {
    let n = adj.len();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if adj[u][v] && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Edges of the labeled tree with the given Prüfer sequence.
fn prufer_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| rooted_code(adj, w, v)).collect();
    children.sort();
    format!("({})", children.concat())
}

/// AHU code of a free tree, rooted at its center (the smaller code for a
/// bicentral tree).
pub fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| rooted_code(&adj, c, usize::MAX)).min().expect("nonempty tree")
}

pub fn graph_tree_code(g: &Graph) -> String {
    tree_code(g.order(), &g.edges())
}

/// Codes of all free trees on `n` vertices, from every Prüfer sequence.
pub fn prufer_tree_codes(n: usize) -> BTreeSet<String> {
    if n <= 2 {
        let edges: Vec<(usize, usize)> = if n == 2 { vec![(0, 1)] } else { Vec::new() };
        return BTreeSet::from([tree_code(n, &edges)]);
    }
    let mut out = BTreeSet::new();
    let mut seq = vec![0; n - 2];
    loop {
        out.insert(tree_code(n, &prufer_decode(&seq, n)));
        let Some(i) = seq.iter().rposition(|&s| s + 1 < n) else { break };
        seq[i] += 1;
        seq[i + 1..].iter_mut().for_each(|s| *s = 0);
    }
    out
}
