//! Named graph families and recognizers for the extremal multiplicity
//! characterizations.

use serde::Serialize;

use crate::algebra::AlgebraicNumber;
use crate::error::FamilyError;
use crate::graph::{bit, Bits, Graph, VertexSet, MAX_VERTICES};
use crate::matching::{induced_matching_size, matching_size};
use crate::spectral::multiplicity;

fn check_order(n: usize) -> Result<(), FamilyError> {
    if n > MAX_VERTICES {
        return Err(FamilyError::InvalidParameter(format!("{n} vertices exceeds the maximum of {MAX_VERTICES}")));
    }
    Ok(())
}

/// `P_n` on vertices `0..n` in path order.
pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::InvalidParameter("path needs at least one vertex".into()));
    }
    check_order(n)?;
    Ok(Graph::from_edge_list(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())?)
}

/// `C_n` on vertices `0..n` in cyclic order.
pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::InvalidParameter("cycle needs at least three vertices".into()));
    }
    check_order(n)?;
    Ok(Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())?)
}

/// `K_{1,n-1}` with center 0.
pub fn star(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::InvalidParameter("star needs at least one vertex".into()));
    }
    check_order(n)?;
    Ok(Graph::from_edge_list(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>())?)
}

/// Caterpillar with backbone `0..hairs.len()` in path order, followed by the
/// hairs of each backbone vertex from left to right.
pub fn caterpillar(hairs: &[usize]) -> Result<Graph, FamilyError> {
    if hairs.is_empty() {
        return Err(FamilyError::InvalidParameter("caterpillar needs a nonempty backbone".into()));
    }
    let n = hairs.len() + hairs.iter().sum::<usize>();
    check_order(n)?;
    let mut edges: Vec<_> = (1..hairs.len()).map(|i| (i - 1, i)).collect();
    let mut next = hairs.len();
    for (b, &h) in hairs.iter().enumerate() {
        for _ in 0..h {
            edges.push((b, next));
            next += 1;
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Double star: adjacent centers 0 and 1 with `a` and `b` leaves.
pub fn double_star(a: usize, b: usize) -> Result<Graph, FamilyError> {
    caterpillar(&[a, b])
}

/// `C_3(a,a,a)`: triangle `0, 1, 2`, then `a` pendant vertices on vertex 0,
/// `a` on vertex 1 and `a` on vertex 2.
pub fn c3aaa(a: usize) -> Result<Graph, FamilyError> {
    let n = 3 + 3 * a;
    check_order(n)?;
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for c in 0..3 {
        for j in 0..a {
            edges.push((c, 3 + c * a + j));
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// `Y_6`: adjacent degree-3 vertices 0 and 1; leaves 2, 3 on 0 and 4, 5 on 1.
pub fn y6() -> Graph {
    double_star(2, 2).expect("fixed size")
}

/// Hub `w = 0` joined by a single edge to the given vertex of each part,
/// plus `pendants` extra leaves at the hub. Parts are laid out in order after
/// the hub, then the leaves.
pub fn hub_join(parts: &[(Graph, usize)], pendants: usize) -> Result<Graph, FamilyError> {
    let n = 1 + parts.iter().map(|(g, _)| g.order()).sum::<usize>() + pendants;
    check_order(n)?;
    let mut g = Graph::empty(1)?;
    for (part, attach) in parts {
        if *attach >= part.order() {
            return Err(FamilyError::InvalidParameter(format!("attachment vertex {attach} outside part of order {}", part.order())));
        }
        g = g.join_bridge(0, part, *attach)?;
    }
    for _ in 0..pendants {
        g.add_vertex(VertexSet::singleton(0))?;
    }
    Ok(g)
}

/// The center of `K_{1,s}` joined to vertices `x` and `y` of `h`. The star's
/// center is labelled `h.order()` and its leaves follow.
pub fn center_join_two(s: usize, h: &Graph, x: usize, y: usize) -> Result<Graph, FamilyError> {
    if x == y || x >= h.order() || y >= h.order() {
        return Err(FamilyError::InvalidParameter("need two distinct vertices of the host".into()));
    }
    let mut g = h.disjoint_union(&star(s + 1)?)?;
    let c = h.order();
    g.try_add_edge(c, x)?;
    g.try_add_edge(c, y)?;
    Ok(g)
}

/// A 51-vertex graph with `m_{-2} = 8 = β′ + c − 1`: hub 0 joined to the
/// centers of three `K_{1,4}`, a degree-3 vertex of each of two `Y_6`, a
/// triangle vertex of each of two `C_3(2,2,2)`, and five pendant vertices.
pub fn fig2_graph() -> Graph {
    let k14 = star(5).expect("fixed size");
    let c = c3aaa(2).expect("fixed size");
    let parts = [(k14.clone(), 0), (k14.clone(), 0), (k14, 0), (y6(), 0), (y6(), 0), (c.clone(), 0), (c, 0)];
    hub_join(&parts, 5).expect("51 vertices fit")
}

/// `a` if `g` is `C_3(a,a,a)`, decided from its shape.
pub fn is_c3aaa(g: &Graph) -> Result<Option<usize>, FamilyError> {
    require_connected(g)?;
    let n = g.order();
    if n < 3 || !n.is_multiple_of(3) || g.cyclomatic_number() != 1 {
        return Ok(None);
    }
    let on_cycle = g.cycle_vertices();
    if on_cycle.len() != 3 {
        return Ok(None);
    }
    let a = n / 3 - 1;
    let tri = on_cycle.bits();
    for v in 0..n {
        if on_cycle.contains(v) {
            if g.row(v) & tri != tri & !bit(v) || g.degree(v) != 2 + a {
                return Ok(None);
            }
        } else if g.degree(v) != 1 || g.row(v) & tri == 0 {
            return Ok(None);
        }
    }
    Ok(Some(a))
}

pub fn is_c5(g: &Graph) -> Result<bool, FamilyError> {
    require_connected(g)?;
    Ok(g.order() == 5 && (0..5).all(|v| g.degree(v) == 2))
}

/// Trees of diameter 1, 2 or 3.
pub fn is_tree_diam_le3(g: &Graph) -> Result<bool, FamilyError> {
    require_connected(g)?;
    Ok(g.order() >= 2 && g.is_tree() && g.diameter()? <= 3)
}

/// The backbone of a caterpillar, in path order starting from the end with
/// the smaller label. Empty for `K_1` and `K_2`.
pub fn is_caterpillar(g: &Graph) -> Result<Option<Vec<usize>>, FamilyError> {
    require_connected(g)?;
    if !g.is_tree() {
        return Ok(None);
    }
    let inner: VertexSet = (0..g.order()).filter(|&v| g.degree(v) >= 2).collect();
    let (core, map) = g.induced(inner);
    if core.order() == 0 {
        return Ok(Some(Vec::new()));
    }
    if (0..core.order()).any(|v| core.degree(v) > 2) {
        return Ok(None);
    }
    // The core of a tree is connected, so with max degree 2 it is a path.
    let start = (0..core.order()).find(|&v| core.degree(v) <= 1).expect("a path has an end");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = core.neighbors(cur).find(|&u| u != prev) {
        prev = cur;
        cur = next;
        order.push(cur);
    }
    Ok(Some(order.into_iter().map(|v| map[v]).collect()))
}

fn require_connected(g: &Graph) -> Result<(), FamilyError> {
    if g.order() == 0 || !g.is_connected() {
        return Err(FamilyError::Precondition("graph must be connected".into()));
    }
    Ok(())
}

/// A tree part `H_i` of a `G − w` decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreePart {
    pub vertices: Vec<usize>,
    pub diameter: usize,
    /// `diam(H_i + w)`.
    pub joined_diameter: usize,
    pub multiplicity: usize,
}

/// A `C_3(a,a,a)` part of a `G − w` decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicPart {
    pub vertices: Vec<usize>,
    pub a: usize,
    pub joined_diameter: usize,
    pub multiplicity: usize,
}

/// Extremal family membership with enough data to re-verify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag")]
pub enum Classification {
    C3aaa { a: usize },
    C5,
    TreeDiamAtMost3 { diameter: usize },
    Caterpillar456 { diameter: usize, backbone: Vec<usize> },
    Thm12FormB { w: usize, parts: Vec<TreePart>, isolated: Vec<usize> },
    Thm32Form { w: usize, s: usize, cyclic_parts: Vec<CyclicPart>, tree_parts: Vec<TreePart>, isolated: Vec<usize> },
    Thm33Form { w: usize, t: u64, copies: usize },
    NotExtremal,
}

impl Classification {
    pub fn is_extremal(&self) -> bool {
        !matches!(self, Classification::NotExtremal)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Classification::C3aaa { .. } => "C3aaa",
            Classification::C5 => "C5",
            Classification::TreeDiamAtMost3 { .. } => "TreeDiamAtMost3",
            Classification::Caterpillar456 { .. } => "Caterpillar456",
            Classification::Thm12FormB { .. } => "Thm12FormB",
            Classification::Thm32Form { .. } => "Thm32Form",
            Classification::Thm33Form { .. } => "Thm33Form",
            Classification::NotExtremal => "NotExtremal",
        }
    }

    /// Re-checks the witness against `g` and λ from scratch, without the
    /// recognizers. Returns a description of the first failed condition.
    pub fn verify(&self, g: &Graph, lambda: &AlgebraicNumber) -> Result<(), String> {
        let ensure = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
        match self {
            Classification::NotExtremal => Ok(()),
            Classification::C3aaa { a } => {
                let h = c3aaa(*a).map_err(|e| e.to_string())?;
                ensure(crate::canon::is_isomorphic(g, &h), "not isomorphic to C3(a,a,a)")
            }
            Classification::C5 => ensure(crate::canon::is_isomorphic(g, &cycle(5).expect("fixed")), "not isomorphic to C5"),
            Classification::TreeDiamAtMost3 { diameter } => {
                ensure(g.is_tree(), "not a tree")?;
                ensure(g.diameter().ok() == Some(*diameter) && (1..=3).contains(diameter), "diameter mismatch")
            }
            Classification::Caterpillar456 { diameter, backbone } => {
                ensure(g.is_tree(), "not a tree")?;
                ensure(g.diameter().ok() == Some(*diameter) && (4..=6).contains(diameter), "diameter mismatch")?;
                let inner: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 2).collect();
                let mut sorted = backbone.clone();
                sorted.sort_unstable();
                ensure(sorted == inner, "backbone is not the set of non-leaf vertices")?;
                ensure(backbone.windows(2).all(|p| g.has_edge(p[0], p[1])), "backbone is not a path")?;
                if *diameter == 6 {
                    ensure(backbone.len() == 5 && g.degree(backbone[2]) == 2, "backbone center must have degree 2")?;
                }
                Ok(())
            }
            Classification::Thm12FormB { w, parts, isolated } => {
                ensure(g.is_tree(), "not a tree")?;
                verify_split(g, *w, parts.iter().map(|p| &p.vertices), isolated)?;
                ensure(parts.len() >= 3, "fewer than three nontrivial parts")?;
                for p in parts {
                    let (h, _) = g.induced(p.vertices.iter().copied().collect());
                    ensure(h.diameter().ok() == Some(p.diameter) && p.diameter <= 3, "part diameter")?;
                    ensure(multiplicity(&h, lambda) >= 1 && multiplicity(&h, lambda) == p.multiplicity, "part lacks λ")?;
                    ensure(joined_diameter(g, *w, &p.vertices) == p.joined_diameter, "joined diameter")?;
                }
                ensure(diameter_condition(parts.iter().map(|p| p.joined_diameter), isolated.is_empty()), "diameter condition")
            }
            Classification::Thm32Form { w, s, cyclic_parts, tree_parts, isolated } => {
                let all = cyclic_parts.iter().map(|p| &p.vertices).chain(tree_parts.iter().map(|p| &p.vertices));
                verify_split(g, *w, all, isolated)?;
                ensure(*s == cyclic_parts.len() + tree_parts.len(), "s is not the number of parts")?;
                ensure(*s == induced_matching_size(g), "s differs from β′")?;
                ensure(cyclic_parts.len() == g.cyclomatic_number(), "cyclic part count differs from c(G)")?;
                for p in cyclic_parts {
                    let (h, _) = g.induced(p.vertices.iter().copied().collect());
                    ensure(crate::canon::is_isomorphic(&h, &c3aaa(p.a).map_err(|e| e.to_string())?), "cyclic part shape")?;
                    ensure(multiplicity(&h, lambda) == 2, "cyclic part multiplicity")?;
                    ensure(joined_diameter(g, *w, &p.vertices) == p.joined_diameter, "joined diameter")?;
                }
                for p in tree_parts {
                    let (h, _) = g.induced(p.vertices.iter().copied().collect());
                    ensure(h.is_tree() && h.diameter().ok() == Some(p.diameter) && p.diameter <= 3, "tree part shape")?;
                    ensure(multiplicity(&h, lambda) == 1, "tree part multiplicity")?;
                    ensure(joined_diameter(g, *w, &p.vertices) == p.joined_diameter, "joined diameter")?;
                }
                let joined = cyclic_parts.iter().map(|p| p.joined_diameter).chain(tree_parts.iter().map(|p| p.joined_diameter));
                ensure(diameter_condition(joined, isolated.is_empty()), "diameter condition")
            }
            Classification::Thm33Form { w, t, copies } => {
                ensure(lambda.square_as_integer() == Some((*t).into()), "λ² differs from t")?;
                let (rest, map) = g.delete_vertices(VertexSet::singleton(*w));
                let split = rest.connected_components();
                ensure(split.isolated.is_empty() && split.nontrivial.len() == *copies && *copies >= 3, "component count")?;
                let star_t = star(*t as usize + 1).map_err(|e| e.to_string())?;
                let star_t1 = star(*t as usize + 2).map_err(|e| e.to_string())?;
                for c in &split.nontrivial {
                    ensure(crate::canon::is_isomorphic(&c.graph, &star_t), "component is not K1,t")?;
                    let mut keep: VertexSet = c.vertices.iter().map(|&v| map[v]).collect();
                    keep.insert(*w);
                    ensure(crate::canon::is_isomorphic(&g.induced(keep).0, &star_t1), "H_i + w is not K1,t+1")?;
                }
                Ok(())
            }
        }
    }
}

fn verify_split<'a>(g: &Graph, w: usize, parts: impl Iterator<Item = &'a Vec<usize>>, isolated: &[usize]) -> Result<(), String> {
    if w >= g.order() {
        return Err("hub out of range".into());
    }
    let (rest, map) = g.delete_vertices(VertexSet::singleton(w));
    let split = rest.connected_components();
    let mut expected: Vec<Vec<usize>> = split.nontrivial.iter().map(|c| c.vertices.iter().map(|&v| map[v]).collect()).collect();
    expected.sort();
    let mut got: Vec<Vec<usize>> = parts.cloned().collect();
    got.sort();
    if expected != got {
        return Err("parts are not the nontrivial components of G − w".into());
    }
    let iso: Vec<usize> = split.isolated.iter().map(|v| map[v]).collect();
    if iso != isolated {
        return Err("isolated vertices differ".into());
    }
    Ok(())
}

fn joined_diameter(g: &Graph, w: usize, part: &[usize]) -> usize {
    let mut keep: VertexSet = part.iter().copied().collect();
    keep.insert(w);
    g.induced(keep).0.diameter().expect("part plus its hub is connected")
}

/// "either diam(H_i + w) = 2 for some i, or I = ∅ and diam(H_i + w) = 3
/// for all i".
fn diameter_condition(joined: impl Iterator<Item = usize> + Clone, no_isolated: bool) -> bool {
    joined.clone().any(|d| d == 2) || (no_isolated && joined.into_iter().all(|d| d == 3))
}

/// Components of `G − w` in original labels: nontrivial ones (as induced
/// subgraphs with label maps) and isolated vertices.
struct HubSplit {
    parts: Vec<(Graph, Vec<usize>)>,
    isolated: Vec<usize>,
}

fn split_at(g: &Graph, w: usize) -> HubSplit {
    let (rest, map) = g.delete_vertices(VertexSet::singleton(w));
    let split = rest.connected_components();
    let parts = split.nontrivial.into_iter().map(|c| (c.graph, c.vertices.iter().map(|&v| map[v]).collect())).collect();
    let isolated = split.isolated.iter().map(|v| map[v]).collect();
    HubSplit { parts, isolated }
}

/// Equality case of `m_λ ≤ β′ + c` for some nonzero λ.
pub fn classify_thm31_equality(g: &Graph) -> Result<Classification, FamilyError> {
    if let Some(a) = is_c3aaa(g)? {
        return Ok(Classification::C3aaa { a });
    }
    if is_c5(g)? {
        return Ok(Classification::C5);
    }
    if is_tree_diam_le3(g)? {
        return Ok(Classification::TreeDiamAtMost3 { diameter: g.diameter()? });
    }
    Ok(Classification::NotExtremal)
}

fn require_nonzero_eigenvalue(g: &Graph, lambda: &AlgebraicNumber) -> Result<usize, FamilyError> {
    if lambda.is_zero() {
        return Err(FamilyError::Precondition("eigenvalue must be nonzero".into()));
    }
    let m = multiplicity(g, lambda);
    if m == 0 {
        return Err(FamilyError::Precondition("value is not an eigenvalue of the graph".into()));
    }
    Ok(m)
}

/// Trees with `m_λ(T) = β′(T) − 1`: caterpillars of diameter 4, 5, 6 (with
/// a degree-2 backbone center at diameter 6), or a hub `w` whose removal
/// leaves at least three components containing λ, each of diameter at most 3.
pub fn classify_thm12(t: &Graph, lambda: &AlgebraicNumber) -> Result<Classification, FamilyError> {
    if t.order() == 0 || !t.is_tree() {
        return Err(FamilyError::Precondition("graph is not a tree".into()));
    }
    require_nonzero_eigenvalue(t, lambda)?;
    let diameter = t.diameter()?;
    if (4..=6).contains(&diameter) {
        if let Some(backbone) = is_caterpillar(t)? {
            if diameter != 6 || t.degree(backbone[2]) == 2 {
                return Ok(Classification::Caterpillar456 { diameter, backbone });
            }
        }
    }
    for w in 0..t.order() {
        let split = split_at(t, w);
        if split.parts.len() < 3 {
            continue;
        }
        let mut parts = Vec::with_capacity(split.parts.len());
        for (h, vertices) in &split.parts {
            let d = h.diameter()?;
            if d > 3 {
                break;
            }
            let m = multiplicity(h, lambda);
            if m == 0 {
                break;
            }
            parts.push(TreePart { vertices: vertices.clone(), diameter: d, joined_diameter: joined_diameter(t, w, vertices), multiplicity: m });
        }
        if parts.len() != split.parts.len() {
            continue;
        }
        if diameter_condition(parts.iter().map(|p| p.joined_diameter), split.isolated.is_empty()) {
            return Ok(Classification::Thm12FormB { w, parts, isolated: split.isolated });
        }
    }
    Ok(Classification::NotExtremal)
}

/// Connected graphs of diameter at least 4 with `β′ ≥ 3` and
/// `m_λ = β′ + c − 1`: a hub `w` with `β′(G)` nontrivial components in
/// `G − w`, exactly `c(G)` of them `C_3(a,a,a)` with `m_λ = 2` and the rest
/// trees of diameter at most 3 with `m_λ = 1`.
pub fn classify_thm32(g: &Graph, lambda: &AlgebraicNumber) -> Result<Classification, FamilyError> {
    require_connected(g)?;
    if g.diameter()? < 4 {
        return Err(FamilyError::Precondition("diameter is less than 4".into()));
    }
    require_nonzero_eigenvalue(g, lambda)?;
    let s = induced_matching_size(g);
    if s < 3 {
        return Err(FamilyError::Precondition(format!("induced matching number {s} is less than 3")));
    }
    let c = g.cyclomatic_number();
    for w in 0..g.order() {
        let split = split_at(g, w);
        if split.parts.len() != s {
            continue;
        }
        let mut cyclic_parts = Vec::new();
        let mut tree_parts = Vec::new();
        let mut ok = true;
        for (h, vertices) in &split.parts {
            if let Some(a) = is_c3aaa(h)? {
                if multiplicity(h, lambda) != 2 {
                    ok = false;
                    break;
                }
                cyclic_parts.push(CyclicPart { vertices: vertices.clone(), a, joined_diameter: joined_diameter(g, w, vertices), multiplicity: 2 });
            } else if h.is_tree() && h.diameter()? <= 3 {
                if multiplicity(h, lambda) != 1 {
                    ok = false;
                    break;
                }
                tree_parts.push(TreePart { vertices: vertices.clone(), diameter: h.diameter()?, joined_diameter: joined_diameter(g, w, vertices), multiplicity: 1 });
            } else {
                ok = false;
                break;
            }
        }
        if !ok || cyclic_parts.len() != c {
            continue;
        }
        let joined = cyclic_parts.iter().map(|p| p.joined_diameter).chain(tree_parts.iter().map(|p| p.joined_diameter));
        if diameter_condition(joined, split.isolated.is_empty()) {
            return Ok(Classification::Thm32Form { w, s, cyclic_parts, tree_parts, isolated: split.isolated });
        }
    }
    Ok(Classification::NotExtremal)
}

/// Graphs with `β′ ≥ 3` and `m_λ = β + c − 1`: `λ² = t` for a positive
/// integer `t` and a hub `w` with `G − w` at least three copies of `K_{1,t}`,
/// `w` attached to each copy so that it becomes `K_{1,t+1}`.
pub fn classify_thm33(g: &Graph, lambda: &AlgebraicNumber) -> Result<Classification, FamilyError> {
    require_connected(g)?;
    require_nonzero_eigenvalue(g, lambda)?;
    let bp = induced_matching_size(g);
    if bp < 3 {
        return Err(FamilyError::Precondition(format!("induced matching number {bp} is less than 3")));
    }
    let Some(t) = lambda.square_as_integer() else {
        return Ok(Classification::NotExtremal);
    };
    let Some(t) = u64::try_from(&t).ok().filter(|&t| t >= 1) else {
        return Ok(Classification::NotExtremal);
    };
    let t_usize = t as usize;
    for w in 0..g.order() {
        let split = split_at(g, w);
        if !split.isolated.is_empty() || split.parts.len() < 3 {
            continue;
        }
        let fits = split.parts.iter().all(|(h, vertices)| {
            if h.order() != t_usize + 1 || !h.is_tree() {
                return false;
            }
            let attach: Vec<usize> = (0..h.order()).filter(|&i| g.has_edge(w, vertices[i])).collect();
            if attach.len() != 1 {
                return false;
            }
            let a = attach[0];
            // A star K_{1,t}: the attachment vertex must be its center, or
            // either endpoint when t = 1.
            h.degree(a) == t_usize && (0..h.order()).all(|i| i == a || h.degree(i) == 1)
        });
        if fits {
            return Ok(Classification::Thm33Form { w, t, copies: split.parts.len() });
        }
    }
    Ok(Classification::NotExtremal)
}

/// β(G), re-exported here for classification callers.
pub fn matching_number_of(g: &Graph) -> usize {
    matching_size(g)
}

/// Leaves of `g` adjacent to `v`.
pub fn hairs_of(g: &Graph, v: usize) -> Vec<usize> {
    Bits(g.row(v)).filter(|&u| g.degree(u) == 1).collect()
}
