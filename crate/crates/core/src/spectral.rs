//! Spectra, eigenvalue multiplicities, star sets and pendant induced matching
//! witnesses.

use serde::Serialize;

use crate::algebra::{char_poly, real_roots, shifted_rank, squarefree_decomposition, AlgebraicNumber, IntPolynomial, Rational, Stratum};
use crate::error::SpectralError;
use crate::graph::{bit, Graph, VertexSet};
use crate::matching::EdgeSet;

/// Characteristic polynomial of a graph together with its squarefree strata,
/// for repeated multiplicity queries.
#[derive(Clone, Debug)]
pub struct Eigenstructure {
    order: usize,
    char_poly: IntPolynomial,
    strata: Vec<Stratum>,
}

impl Eigenstructure {
    pub fn new(g: &Graph) -> Self {
        let cp = char_poly(g);
        let strata = squarefree_decomposition(&cp).expect("characteristic polynomials are monic");
        Eigenstructure { order: g.order(), char_poly: cp, strata }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn char_poly(&self) -> &IntPolynomial {
        &self.char_poly
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.strata
    }

    /// `m_λ`: the multiplicity of the stratum having λ as a root, else 0.
    pub fn multiplicity(&self, lambda: &AlgebraicNumber) -> usize {
        self.strata.iter().find(|s| lambda.is_root_of(&s.poly)).map_or(0, |s| s.multiplicity)
    }

    /// `m_0`, from the lowest nonzero coefficient of the characteristic
    /// polynomial.
    pub fn nullity(&self) -> usize {
        self.char_poly.coeffs().iter().take_while(|c| num_traits::Zero::is_zero(*c)).count()
    }

    /// All distinct eigenvalues with multiplicities, ascending.
    pub fn spectrum(&self) -> SpectrumSummary {
        let mut entries: Vec<SpectrumEntry> = self
            .strata
            .iter()
            .flat_map(|s| {
                real_roots(&s.poly)
                    .expect("strata are nonzero")
                    .into_iter()
                    .map(move |value| SpectrumEntry::new(value, s.multiplicity))
            })
            .collect();
        entries.sort_by(|a, b| a.value.cmp(&b.value));
        SpectrumSummary { entries }
    }

    /// Distinct nonzero eigenvalues with multiplicities, ascending.
    pub fn nonzero_eigenvalues(&self) -> Vec<(AlgebraicNumber, usize)> {
        self.spectrum().entries.into_iter().filter(|e| !e.value.is_zero()).map(|e| (e.value, e.mult)).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumEntry {
    pub value: AlgebraicNumber,
    pub mult: usize,
    /// Decimal approximation for display only.
    pub approx: f64,
}

impl SpectrumEntry {
    fn new(value: AlgebraicNumber, mult: usize) -> Self {
        let approx = value.to_f64();
        SpectrumEntry { value, mult, approx }
    }
}

/// σ(G) with multiplicities, ascending by value.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct SpectrumSummary {
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumSummary {
    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.mult).sum()
    }

    pub fn multiplicity_of(&self, lambda: &AlgebraicNumber) -> usize {
        self.entries.iter().find(|e| e.value.alg_equal(lambda)).map_or(0, |e| e.mult)
    }
}

pub fn spectrum(g: &Graph) -> SpectrumSummary {
    Eigenstructure::new(g).spectrum()
}

/// `m_λ(G)`.
pub fn multiplicity(g: &Graph, lambda: &AlgebraicNumber) -> usize {
    if g.order() == 0 {
        return 0;
    }
    Eigenstructure::new(g).multiplicity(lambda)
}

/// `m_q(G) = n − rank(A − qI)` by fraction-free elimination.
pub fn multiplicity_rational(g: &Graph, q: &Rational) -> usize {
    g.order() - shifted_rank(g, q)
}

pub fn is_eigenvalue(g: &Graph, lambda: &AlgebraicNumber) -> bool {
    multiplicity(g, lambda) >= 1
}

/// A star set: `|X| = m_λ(G)` and λ is not an eigenvalue of `G − X`.
#[derive(Clone, Debug, Serialize)]
pub struct StarSet {
    pub vertices: VertexSet,
    pub lambda: AlgebraicNumber,
}

/// The lexicographically first star set for λ.
///
/// For the symmetric matrix `M = A − λI` of rank `r`, a partial choice `X₀`
/// extends to a star set iff `M` restricted to `V − X₀` still has rank `r`,
/// i.e. `m_λ(G − X₀) = m_λ(G) − |X₀|`. Scanning vertices in order and keeping
/// each one that preserves this condition visits the k-subsets in
/// lexicographic order while pruning every subtree with no star set.
pub fn find_star_set(g: &Graph, lambda: &AlgebraicNumber) -> Result<StarSet, SpectralError> {
    let k = multiplicity(g, lambda);
    if k == 0 {
        return Err(SpectralError::NotAnEigenvalue);
    }
    let mut chosen = VertexSet::EMPTY;
    for v in 0..g.order() {
        if chosen.len() == k {
            break;
        }
        let mut trial = chosen;
        trial.insert(v);
        let (rest, _) = g.delete_vertices(trial);
        if multiplicity(&rest, lambda) + trial.len() == k {
            chosen = trial;
        }
    }
    let (rest, _) = g.delete_vertices(chosen);
    if chosen.len() != k || multiplicity(&rest, lambda) != 0 {
        return Err(SpectralError::TheoremViolation(format!("no star set of size {k} found")));
    }
    Ok(StarSet { vertices: chosen, lambda: lambda.clone() })
}

/// Edges with a degree-1 endpoint, sorted.
pub fn pendant_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().into_iter().filter(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1).collect()
}

/// For a tree `T` of diameter at least 4 and a nonzero eigenvalue λ of
/// multiplicity `k`, the lexicographically first set of `k + 1` pendant
/// edges forming an induced matching.
pub fn pendant_induced_matching_witness(t: &Graph, lambda: &AlgebraicNumber) -> Result<EdgeSet, SpectralError> {
    if !t.is_tree() {
        return Err(SpectralError::Precondition("graph is not a tree".into()));
    }
    if t.diameter()? < 4 {
        return Err(SpectralError::Precondition("tree diameter is less than 4".into()));
    }
    if lambda.is_zero() {
        return Err(SpectralError::Precondition("eigenvalue must be nonzero".into()));
    }
    let k = multiplicity(t, lambda);
    if k == 0 {
        return Err(SpectralError::NotAnEigenvalue);
    }
    let pendant = pendant_edges(t);
    let closed: Vec<u64> = pendant.iter().map(|&(u, v)| t.row(u) | t.row(v) | bit(u) | bit(v)).collect();
    let ends: Vec<u64> = pendant.iter().map(|&(u, v)| bit(u) | bit(v)).collect();
    let mut stack = Vec::with_capacity(k + 1);
    if extend_induced(&closed, &ends, 0, 0, k + 1, &mut stack) {
        Ok(EdgeSet::new(stack.iter().map(|&i| pendant[i])))
    } else {
        Err(SpectralError::TheoremViolation(format!("no {} pendant edges form an induced matching", k + 1)))
    }
}

/// Depth-first search over index subsets in lexicographic order.
fn extend_induced(closed: &[u64], ends: &[u64], start: usize, blocked: u64, want: usize, stack: &mut Vec<usize>) -> bool {
    if stack.len() == want {
        return true;
    }
    for i in start..closed.len() {
        if closed.len() - i < want - stack.len() {
            return false;
        }
        if blocked & ends[i] != 0 {
            continue;
        }
        stack.push(i);
        if extend_induced(closed, ends, i + 1, blocked | closed[i], want, stack) {
            return true;
        }
        stack.pop();
    }
    false
}

/// True if `X` is a star set of λ when checked from scratch.
pub fn is_star_set(g: &Graph, lambda: &AlgebraicNumber, x: VertexSet) -> bool {
    x.len() == multiplicity(g, lambda) && !is_eigenvalue(&g.delete_vertices(x).0, lambda)
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

    fn star(n: usize) -> Graph {
        Graph::from_edge_list(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
    }

    fn int(n: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_integer(n)
    }

    fn sqrt(t: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_interval(&IntPolynomial::from_i64(&[-t, 0, 1]), Rational::from_integer(0.into()), Rational::from_integer(t.into())).unwrap()
    }

    #[test]
    fn star_spectrum() {
        let s = spectrum(&star(5));
        let shape: Vec<_> = s.entries.iter().map(|e| (e.value.as_rational().cloned(), e.mult)).collect();
        assert_eq!(
            shape,
            vec![(Some(Rational::from_integer((-2).into())), 1), (Some(Rational::from_integer(0.into())), 3), (Some(Rational::from_integer(2.into())), 1)]
        );
        assert_eq!(s.total_multiplicity(), 5);
    }

    #[test]
    fn cycle_spectra() {
        let s = spectrum(&cycle(5));
        assert_eq!(s.entries.iter().map(|e| e.mult).collect::<Vec<_>>(), vec![2, 2, 1]);
        assert!((s.entries[0].approx + (5f64.sqrt() + 1.0) / 2.0).abs() < 1e-9);
        assert!((s.entries[1].approx - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-9);
        let c3 = spectrum(&cycle(3));
        assert_eq!(c3.multiplicity_of(&int(-1)), 2);
        assert_eq!(c3.multiplicity_of(&int(2)), 1);
        assert_eq!(multiplicity(&cycle(3), &int(3)), 0);
    }

    #[test]
    fn rational_multiplicities_agree() {
        assert_eq!(multiplicity_rational(&cycle(3), &Rational::from_integer((-1).into())), 2);
        assert_eq!(multiplicity_rational(&path(4), &Rational::from_integer(0.into())), 0);
        assert_eq!(multiplicity(&path(5), &int(7)), 0);
        assert!(is_eigenvalue(&path(3), &sqrt(2)));
        assert!(!is_eigenvalue(&star(3), &sqrt(3)));
        assert_eq!(Eigenstructure::new(&star(5)).nullity(), 3);
    }

    #[test]
    fn star_sets() {
        let golden = &real_roots(&IntPolynomial::from_i64(&[-1, 1, 1])).unwrap()[1];
        let x = find_star_set(&cycle(5), golden).unwrap();
        assert_eq!(x.vertices.to_vec(), vec![0, 1]);
        assert!(is_star_set(&cycle(5), golden, x.vertices));
        assert_eq!(find_star_set(&star(5), &int(2)).unwrap().vertices.len(), 1);
        assert_eq!(find_star_set(&cycle(3), &int(-1)).unwrap().vertices.to_vec(), vec![0, 1]);
        assert!(matches!(find_star_set(&cycle(3), &int(1)), Err(SpectralError::NotAnEigenvalue)));
    }

    #[test]
    fn pendant_witness_on_path() {
        let w = pendant_induced_matching_witness(&path(5), &sqrt(3)).unwrap();
        assert_eq!(w.edges(), &[(0, 1), (3, 4)]);
        assert!(matches!(pendant_induced_matching_witness(&path(4), &int(1)), Err(SpectralError::Precondition(_))));
        assert!(matches!(pendant_induced_matching_witness(&path(5), &int(0)), Err(SpectralError::Precondition(_))));
        assert!(matches!(pendant_induced_matching_witness(&path(5), &int(2)), Err(SpectralError::NotAnEigenvalue)));
    }
}
