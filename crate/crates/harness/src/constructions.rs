//! Parameterized hub graphs that exercise the sufficiency directions of the
//! two extremal characterizations, plus near misses.

use eigmatch_core::families::{c3aaa, caterpillar, center_join_two, double_star, hub_join, path, star, y6};
use eigmatch_core::{canonical_form, Graph};

use crate::checks::cyclic_hosts;

/// A part of a hub graph: the component and the vertex joined to the hub.
type Part = (Graph, usize);

/// Parts sharing an eigenvalue λ: `C_3(a,a,a)` with `m_λ = 2` and trees of
/// diameter at most 3 with simple λ, at good and bad attachment points.
fn catalogs() -> Vec<Vec<Part>> {
    let c = |a| c3aaa(a).expect("small order");
    let s = |n| star(n).expect("small order");
    let ds = |p, q| double_star(p, q).expect("small order");
    vec![
        // λ ∈ {−2, 1}: C3(2,2,2); −2 in K1,4, Y6 and S(6,6).
        vec![(c(2), 0), (c(2), 3), (s(5), 0), (s(5), 1), (y6(), 0), (y6(), 2), (ds(6, 6), 0)],
        // λ ∈ {−2, 1}: 1 in K2 and Y6.
        vec![(c(2), 0), (s(2), 0), (y6(), 0), (y6(), 3)],
        // λ = −1: C3 itself, K2 and Y6.
        vec![(c(0), 0), (s(2), 0), (y6(), 0), (y6(), 2)],
        // λ roots of x² + x − 1: C3(1,1,1) and P4.
        vec![(c(1), 0), (c(1), 3), (path(4).expect("small order"), 1), (path(4).expect("small order"), 0)],
        // λ ∈ {2, −3}: C3(6,6,6); ±2 and ±3 in S(6,6); 2 in K1,4; 3 in K1,9.
        vec![(c(6), 0), (ds(6, 6), 0), (s(5), 0), (s(10), 0)],
        // Trees only, λ = ±√3: K1,3 and S(4,6), with a diameter-4
        // caterpillar as a near miss.
        vec![(s(4), 0), (s(4), 1), (ds(4, 6), 0), (caterpillar(&[1, 1, 1]).expect("small order"), 1)],
    ]
}

/// Multisets of size `k` drawn from `0..m`, in lexicographic order.
fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in multisets(m, k - 1) {
        let start = rest.last().copied().unwrap_or(0);
        for i in start..m {
            let mut v = rest.clone();
            v.push(i);
            out.push(v);
        }
    }
    out
}

fn dedup(mut graphs: Vec<Graph>) -> Vec<Graph> {
    let mut seen = std::collections::HashSet::new();
    graphs.retain(|g| seen.insert(canonical_form(g)));
    graphs
}

/// Hub graphs over three or four parts from each catalog, with 0 to 2
/// pendant vertices at the hub, on at most 40 vertices.
pub fn thm32_constructions() -> Vec<Graph> {
    let mut out = Vec::new();
    for catalog in catalogs() {
        for k in 3..=4 {
            for pick in multisets(catalog.len(), k) {
                let parts: Vec<Part> = pick.iter().map(|&i| catalog[i].clone()).collect();
                let size: usize = parts.iter().map(|(g, _)| g.order()).sum();
                for pendants in 0..=2 {
                    if 1 + size + pendants > 40 {
                        continue;
                    }
                    out.push(hub_join(&parts, pendants).expect("order checked"));
                }
            }
        }
    }
    dedup(out)
}

/// Hubs joined to the centers of `copies` stars `K_{1,t}`, with near misses:
/// extra hub pendants, leaf attachments and mixed star sizes.
pub fn thm33_constructions() -> Vec<Graph> {
    let s = |n| star(n).expect("small order");
    let mut out = Vec::new();
    for t in 1..=6 {
        for copies in 3..=6 {
            let parts: Vec<Part> = (0..copies).map(|_| (s(t + 1), 0)).collect();
            out.push(hub_join(&parts, 0).expect("small order"));
            out.push(hub_join(&parts, 1).expect("small order"));
            if t >= 2 {
                let mut leafy = parts.clone();
                leafy[0].1 = 1;
                out.push(hub_join(&leafy, 0).expect("small order"));
            }
            let mut mixed = parts;
            mixed[0] = (s(t + 2), 0);
            out.push(hub_join(&mixed, 0).expect("small order"));
        }
    }
    dedup(out)
}

/// `K_{1,s}` centers (`1 ≤ s ≤ 4`) joined to every pair of vertices of each
/// cyclic host.
pub fn lemma27_constructions() -> Vec<Graph> {
    let mut out = Vec::new();
    for (host, _) in cyclic_hosts() {
        for s in 1..=4 {
            for x in 0..host.order() {
                for y in x + 1..host.order() {
                    out.push(center_join_two(s, &host, x, y).expect("distinct vertices"));
                }
            }
        }
    }
    out
}
