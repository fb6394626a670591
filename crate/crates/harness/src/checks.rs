//! One function per verified statement. Each asserts the statement literally
//! on a single instance and reports the first failed assertion.

use std::fmt;
use std::str::FromStr;

use eigmatch_core::algebra::IntPolynomial;
use eigmatch_core::families::{self, classify_thm12, classify_thm31_equality, classify_thm32, classify_thm33, Classification};
use eigmatch_core::matching::{induced_matching_number, induced_matching_size, matching_size};
use eigmatch_core::spectral::{multiplicity, pendant_induced_matching_witness, Eigenstructure};
use eigmatch_core::{emit_graph6, is_isomorphic, parse_graph6, AlgebraicNumber, Graph, Rational, VertexSet};
use serde::Serialize;

use crate::error::HarnessError;
use crate::facts::GraphFacts;
use crate::report::{InstanceResult, Severity, VerificationFinding};

macro_rules! check_ids {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId { $($variant),* }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $(CheckId::$variant => $name),* }
            }
        }

        impl FromStr for CheckId {
            type Err = HarnessError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s.trim() {
                    $($name => Ok(CheckId::$variant),)*
                    other => Err(HarnessError::UnknownCheck(other.to_string())),
                }
            }
        }
    };
}

check_ids! {
    Thm31 => "thm31",
    Cor31 => "cor31",
    Interlacing => "interlacing",
    Lemma33 => "lemma33",
    Graph6RoundTrip => "graph6_roundtrip",
    Thm32 => "thm32",
    Lemma31 => "lemma31",
    Fig2 => "fig2",
    Thm33 => "thm33",
    Thm12 => "thm12",
    Thm11 => "thm11",
    Lemma23 => "lemma23",
    Lemma24 => "lemma24",
    M0Identity => "m0_identity",
    CaterpillarSimple => "caterpillar_simple",
    Paths => "paths",
    SpectraFormulas => "spectra_formulas",
    Lemma22 => "lemma22",
    Lemma26 => "lemma26",
    Lemma27 => "lemma27",
}

impl CheckId {
    /// Checks that run over the tree enumeration.
    pub fn is_tree_check(self) -> bool {
        matches!(self, CheckId::Thm12 | CheckId::Thm11 | CheckId::Lemma23 | CheckId::Lemma24 | CheckId::M0Identity | CheckId::CaterpillarSimple)
    }

    /// Checks that run over the connected-graph enumeration.
    pub fn is_connected_check(self) -> bool {
        matches!(self, CheckId::Thm31 | CheckId::Cor31 | CheckId::Interlacing | CheckId::Lemma33 | CheckId::Graph6RoundTrip | CheckId::Thm32 | CheckId::Lemma31 | CheckId::Thm33)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Collects assertions for one instance, keeping the first failure.
struct Assert<'a> {
    check: CheckId,
    graph6: &'a str,
    result: InstanceResult,
}

impl<'a> Assert<'a> {
    fn new(check: CheckId, graph6: &'a str) -> Self {
        Assert { check, graph6, result: InstanceResult::default() }
    }

    fn finding(&self, lambda: Option<&AlgebraicNumber>, expected: String, observed: String, severity: Severity) -> VerificationFinding {
        VerificationFinding { check: self.check, graph6: self.graph6.to_string(), eigenvalue: lambda.cloned(), expected, observed, severity }
    }

    /// Records a failure unless `ok`. The descriptions are built lazily.
    fn that(&mut self, ok: bool, lambda: Option<&AlgebraicNumber>, describe: impl FnOnce() -> (String, String)) -> bool {
        if !ok && self.result.violation.is_none() {
            let (expected, observed) = describe();
            self.result.violation = Some(self.finding(lambda, expected, observed, Severity::Violation));
        }
        ok
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, lambda: Option<&AlgebraicNumber>, what: &str, expected: T, observed: T) -> bool {
        let ok = expected == observed;
        self.that(ok, lambda, || (format!("{what} = {expected:?}"), format!("{what} = {observed:?}")))
    }

    fn note(&mut self, lambda: Option<&AlgebraicNumber>, expected: String, observed: String, severity: Severity) {
        let f = self.finding(lambda, expected, observed, severity);
        self.result.notes.push(f);
    }

    fn eigenvalue(&mut self) {
        self.result.eigenvalues += 1;
    }

    fn done(self) -> InstanceResult {
        self.result
    }
}

fn verify_witness(a: &mut Assert<'_>, c: &Classification, g: &Graph, lambda: &AlgebraicNumber) {
    if let Err(why) = c.verify(g, lambda) {
        a.that(false, Some(lambda), || (format!("{} witness re-verifies", c.tag()), why));
    }
}

/// `m_λ ≤ β′ + c` for every nonzero λ, with equality for some λ exactly on
/// `C_3(a,a,a)`, `C_5` and trees of diameter at most 3 (where it holds for
/// every nonzero λ).
pub fn check_thm31(f: &GraphFacts) -> InstanceResult {
    if !f.connected {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::Thm31, &f.graph6);
    let bound = f.beta_prime() + f.cyclomatic;
    let small_tree = f.is_tree() && f.order() >= 2 && f.diameter.is_some_and(|d| d <= 3);
    let mut attained = false;
    for (lambda, m) in f.nonzero() {
        a.eigenvalue();
        a.that(*m <= bound, Some(lambda), || (format!("m ≤ β′ + c = {bound}"), format!("m = {m}")));
        attained |= *m == bound;
        if small_tree {
            a.eq(Some(lambda), "m_λ", bound, *m);
        }
    }
    let class = classify_thm31_equality(&f.graph).expect("connected input");
    a.that(attained == class.is_extremal(), None, || {
        (format!("equality attained iff extremal family (classified {})", class.tag()), format!("equality attained: {attained}"))
    });
    if let (true, Some((lambda, _))) = (class.is_extremal(), f.nonzero().first()) {
        verify_witness(&mut a, &class, &f.graph, lambda);
    }
    a.done()
}

/// Diameter at least 4 gives `m_λ ≤ β′ + c − 1`.
pub fn check_cor31(f: &GraphFacts) -> InstanceResult {
    if !f.connected || f.diameter.is_none_or(|d| d < 4) {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::Cor31, &f.graph6);
    let bound = f.beta_prime() + f.cyclomatic - 1;
    for (lambda, m) in f.nonzero() {
        a.eigenvalue();
        a.that(*m <= bound, Some(lambda), || (format!("m ≤ β′ + c − 1 = {bound}"), format!("m = {m}")));
    }
    a.done()
}

/// `m_λ(G−v) − 1 ≤ m_λ(G) ≤ m_λ(G−v) + 1` for every vertex `v` and every λ
/// in σ(G) ∪ σ(G−v).
pub fn check_interlacing(f: &GraphFacts) -> InstanceResult {
    let mut a = Assert::new(CheckId::Interlacing, &f.graph6);
    let whole = f.eig().spectrum();
    for v in 0..f.order() {
        let minus = Eigenstructure::new(&f.graph.delete_vertex(v));
        let minus_spec = minus.spectrum();
        for e in &whole.entries {
            a.eigenvalue();
            let m = minus.multiplicity(&e.value);
            a.that(m + 1 >= e.mult && e.mult + 1 >= m, Some(&e.value), || (format!("|m(G) − m(G−{v})| ≤ 1 with m(G) = {}", e.mult), format!("m(G−{v}) = {m}")));
        }
        for e in minus_spec.entries.iter().filter(|e| whole.multiplicity_of(&e.value) == 0) {
            a.eigenvalue();
            a.that(e.mult <= 1, Some(&e.value), || (format!("m(G−{v}) ≤ 1 where m(G) = 0"), format!("m(G−{v}) = {}", e.mult)));
        }
    }
    a.done()
}

/// `m_λ ≤ β + c`, with equality for some nonzero λ iff `G ≅ C_3` or
/// `G ≅ K_{1,t}`.
pub fn check_lemma33(f: &GraphFacts) -> InstanceResult {
    if !f.connected || f.nonzero().is_empty() {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::Lemma33, &f.graph6);
    let bound = f.beta() + f.cyclomatic;
    let mut attained = false;
    for (lambda, m) in f.nonzero() {
        a.eigenvalue();
        a.that(*m <= bound, Some(lambda), || (format!("m ≤ β + c = {bound}"), format!("m = {m}")));
        attained |= *m == bound;
    }
    let n = f.order();
    let is_c3 = n == 3 && f.graph.edge_count() == 3;
    let is_star = n >= 2 && is_isomorphic(&f.graph, &families::star(n).expect("small order"));
    a.that(attained == (is_c3 || is_star), None, || {
        (format!("equality attained iff C3 or K1,t (C3: {is_c3}, star: {is_star})"), format!("equality attained: {attained}"))
    });
    a.done()
}

/// graph6 encoding round-trips byte for byte.
pub fn check_graph6_roundtrip(f: &GraphFacts) -> InstanceResult {
    let mut a = Assert::new(CheckId::Graph6RoundTrip, &f.graph6);
    match parse_graph6(&f.graph6) {
        Ok(back) => {
            a.that(back == f.graph, None, || ("decoded graph equals original".into(), format!("{back:?}")));
            let again = emit_graph6(&back).unwrap_or_default();
            a.eq(None, "re-encoded", f.graph6.as_str(), again.as_str());
        }
        Err(e) => {
            a.that(false, None, || ("graph6 decodes".into(), e.to_string()));
        }
    }
    a.done()
}

/// Preconditions shared by the characterization with `β′ ≥ 3` and
/// diameter at least 4.
fn thm32_applies(f: &GraphFacts) -> bool {
    f.connected && f.diameter.is_some_and(|d| d >= 4) && f.beta_prime() >= 3
}

/// `m_λ = β′ + c − 1` iff the hub decomposition exists (trees also accept
/// the caterpillar form).
pub fn check_thm32(f: &GraphFacts) -> InstanceResult {
    if !thm32_applies(f) {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::Thm32, &f.graph6);
    let target = f.beta_prime() + f.cyclomatic - 1;
    let tree = f.is_tree();
    for (lambda, m) in f.nonzero() {
        a.eigenvalue();
        let c = classify_thm32(&f.graph, lambda).expect("preconditions checked");
        let t = if tree { Some(classify_thm12(&f.graph, lambda).expect("tree with eigenvalue")) } else { None };
        let extremal = c.is_extremal() || t.as_ref().is_some_and(Classification::is_extremal);
        a.that((*m == target) == extremal, Some(lambda), || {
            let tags = format!("{}{}", c.tag(), t.as_ref().map(|t| format!("/{}", t.tag())).unwrap_or_default());
            (format!("m = β′ + c − 1 = {target} iff hub form (classified {tags})"), format!("m = {m}"))
        });
        for class in std::iter::once(&c).chain(t.as_ref()).filter(|c| c.is_extremal()) {
            verify_witness(&mut a, class, &f.graph, lambda);
        }
    }
    a.done()
}

/// For `m_λ = β′ + c − 1` and every cycle vertex `x` missed by a maximum
/// induced matching: `m_λ(G−x) = β′(G−x) + c(G−x) − 1`, `c(G−x) = c(G) − 1`,
/// at most two nontrivial components, and with two of them the stated
/// split between `H_1` and `H_2`.
pub fn check_lemma31(f: &GraphFacts) -> InstanceResult {
    if !thm32_applies(f) || f.cyclomatic == 0 {
        return InstanceResult::skipped();
    }
    let target = f.beta_prime() + f.cyclomatic - 1;
    let lambdas: Vec<&AlgebraicNumber> = f.nonzero().iter().filter(|(_, m)| *m == target).map(|(l, _)| l).collect();
    if lambdas.is_empty() {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::Lemma31, &f.graph6);
    let g = &f.graph;
    let (_, witness) = induced_matching_number(g);
    let free = g.cycle_vertices().bits() & !witness.covered().bits();
    for x in VertexSet::from_bits(free).iter() {
        let (rest, map) = g.delete_vertices(VertexSet::singleton(x));
        let split = rest.connected_components();
        let c_rest = rest.cyclomatic_number();
        let bp_rest = induced_matching_size(&rest);
        let l = split.nontrivial.len();
        a.eq(None, &format!("c(G−{x})"), f.cyclomatic - 1, c_rest);
        a.that(l <= 2, None, || (format!("G−{x} has at most 2 nontrivial components"), format!("{l} components")));
        for lambda in &lambdas {
            a.eigenvalue();
            let m_rest = multiplicity(&rest, lambda) as i64;
            a.eq(Some(lambda), &format!("m(G−{x})"), bp_rest as i64 + c_rest as i64 - 1, m_rest);
            if l == 2 {
                let excess = |h: &Graph| multiplicity(h, lambda) as i64 - induced_matching_size(h) as i64 - h.cyclomatic_number() as i64;
                let parts: Vec<(i64, usize)> = split
                    .nontrivial
                    .iter()
                    .map(|c| (excess(&c.graph), c.vertices.iter().filter(|&&v| g.has_edge(x, map[v])).count()))
                    .collect();
                let fits = |h1: usize, h2: usize| parts[h1].0 == -1 && parts[h2].0 == 0 && parts[h2].1 == 2;
                a.that(fits(0, 1) || fits(1, 0), Some(lambda), || {
                    ("components split as m = β′ + c − 1 and m = β′ + c, x with two neighbours in the second".into(), format!("(m − β′ − c, neighbours of x) = {parts:?}"))
                });
            }
        }
    }
    a.done()
}

/// The 51-vertex example: `m_{−2} = 8 = β′ + c − 1` and a hub form with
/// seven parts, two of them `C_3(2,2,2)`.
pub fn check_fig2(f: &GraphFacts) -> InstanceResult {
    let mut a = Assert::new(CheckId::Fig2, &f.graph6);
    let minus_two = AlgebraicNumber::from_integer(-2);
    a.eigenvalue();
    let m = f.eig().multiplicity(&minus_two);
    a.eq(Some(&minus_two), "m_-2", 8, m);
    a.eq(None, "β′", 7, f.beta_prime());
    a.eq(None, "c", 2, f.cyclomatic);
    a.eq(Some(&minus_two), "m_-2 − (β′ + c − 1)", 0, m as i64 - (f.beta_prime() + f.cyclomatic) as i64 + 1);
    match classify_thm32(&f.graph, &minus_two) {
        Ok(c @ Classification::Thm32Form { .. }) => {
            if let Classification::Thm32Form { s, cyclic_parts, .. } = &c {
                a.eq(Some(&minus_two), "s", 7, *s);
                a.eq(Some(&minus_two), "cyclic part sizes a", vec![2, 2], cyclic_parts.iter().map(|p| p.a).collect::<Vec<_>>());
            }
            verify_witness(&mut a, &c, &f.graph, &minus_two);
        }
        other => {
            a.that(false, Some(&minus_two), || ("Thm32Form".into(), format!("{other:?}")));
        }
    }
    if a.result.violation.is_none() {
        a.note(Some(&minus_two), "m_-2 = 8 = β′ + c − 1 with β′ = 7, c = 2".into(), format!("m_-2 = {m}, Thm32Form with s = 7"), Severity::Pass);
    }
    a.done()
}

/// `β′ ≥ 3` gives `m_λ ≤ β + c − 1`, with equality iff λ² = t and the
/// graph is a hub over at least three `K_{1,t}`.
pub fn check_thm33(f: &GraphFacts) -> InstanceResult {
    if !f.connected || f.beta_prime() < 3 {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::Thm33, &f.graph6);
    let bound = f.beta() + f.cyclomatic - 1;
    for (lambda, m) in f.nonzero() {
        a.eigenvalue();
        a.that(*m <= bound, Some(lambda), || (format!("m ≤ β + c − 1 = {bound}"), format!("m = {m}")));
        let c = classify_thm33(&f.graph, lambda).expect("preconditions checked");
        a.that((*m == bound) == c.is_extremal(), Some(lambda), || {
            (format!("m = β + c − 1 = {bound} iff star hub form (classified {})", c.tag()), format!("m = {m}"))
        });
        if c.is_extremal() {
            verify_witness(&mut a, &c, &f.graph, lambda);
        }
    }
    a.done()
}

/// Trees: `m_λ = β′ − 1` iff one of the two stated forms.
pub fn check_thm12(f: &GraphFacts) -> InstanceResult {
    if !f.is_tree() || f.nonzero().is_empty() {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::Thm12, &f.graph6);
    let target = f.beta_prime() as i64 - 1;
    for (lambda, m) in f.nonzero() {
        a.eigenvalue();
        let c = classify_thm12(&f.graph, lambda).expect("tree with eigenvalue");
        a.that((*m as i64 == target) == c.is_extremal(), Some(lambda), || {
            (format!("m = β′ − 1 = {target} iff tree form (classified {})", c.tag()), format!("m = {m}"))
        });
        if c.is_extremal() {
            verify_witness(&mut a, &c, &f.graph, lambda);
        }
    }
    a.done()
}

/// Trees of diameter at least 4 with `m_λ = k ≥ 1`: `k + 1` pendant edges
/// forming an induced matching, and `m_λ ≤ β′ − 1`.
pub fn check_thm11(f: &GraphFacts) -> InstanceResult {
    if !f.is_tree() || f.diameter.is_none_or(|d| d < 4) {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::Thm11, &f.graph6);
    let g = &f.graph;
    for (lambda, m) in f.nonzero() {
        a.eigenvalue();
        a.that(*m < f.beta_prime(), Some(lambda), || (format!("m ≤ β′ − 1 = {}", f.beta_prime() - 1), format!("m = {m}")));
        match pendant_induced_matching_witness(g, lambda) {
            Ok(w) => {
                a.eq(Some(lambda), "witness size", m + 1, w.len());
                let pendant = w.edges().iter().all(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1);
                a.that(pendant, Some(lambda), || ("all witness edges pendant".into(), format!("{:?}", w.edges())));
                a.that(w.validate_induced(g).is_ok(), Some(lambda), || ("witness is an induced matching".into(), format!("{:?}", w.edges())));
            }
            Err(e) => {
                a.that(false, Some(lambda), || ("pendant induced matching witness".into(), e.to_string()));
            }
        }
    }
    a.done()
}

/// Trees of diameter at most 3: a nonzero eigenvalue of `T` is not an
/// eigenvalue of any `T − v`.
pub fn check_lemma23(f: &GraphFacts) -> InstanceResult {
    if !f.is_tree() || f.order() < 2 || f.diameter.is_none_or(|d| d > 3) {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::Lemma23, &f.graph6);
    for v in 0..f.order() {
        let minus = Eigenstructure::new(&f.graph.delete_vertex(v));
        for (lambda, _) in f.nonzero() {
            a.eigenvalue();
            a.eq(Some(lambda), &format!("m(T−{v})"), 0, minus.multiplicity(lambda));
        }
    }
    a.done()
}

/// Trees: `m_λ = β′` for nonzero λ iff the diameter is 1, 2 or 3.
pub fn check_lemma24(f: &GraphFacts) -> InstanceResult {
    if !f.is_tree() || f.nonzero().is_empty() {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::Lemma24, &f.graph6);
    let small = f.diameter.is_some_and(|d| (1..=3).contains(&d));
    for (lambda, m) in f.nonzero() {
        a.eigenvalue();
        a.that((*m == f.beta_prime()) == small, Some(lambda), || {
            (format!("m = β′ = {} iff diameter ≤ 3 (diameter {:?})", f.beta_prime(), f.diameter), format!("m = {m}"))
        });
    }
    a.done()
}

/// Trees: `m_0 = n − 2β`.
pub fn check_m0_identity(f: &GraphFacts) -> InstanceResult {
    if !f.is_tree() {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::M0Identity, &f.graph6);
    let zero = AlgebraicNumber::from_integer(0);
    a.eigenvalue();
    a.eq(Some(&zero), "m_0", f.order() as i64 - 2 * f.beta() as i64, f.eig().nullity() as i64);
    a.done()
}

/// Caterpillars: every nonzero eigenvalue is simple.
pub fn check_caterpillar_simple(f: &GraphFacts) -> InstanceResult {
    if !f.is_tree() || !matches!(families::is_caterpillar(&f.graph), Ok(Some(_))) {
        return InstanceResult::skipped();
    }
    let mut a = Assert::new(CheckId::CaterpillarSimple, &f.graph6);
    for (lambda, m) in f.nonzero() {
        a.eigenvalue();
        a.eq(Some(lambda), "m_λ", 1, *m);
    }
    a.done()
}

/// `β(P_n) = ⌊n/2⌋` and `β′(P_n) = ⌊(n+1)/3⌋`.
pub fn check_path(n: usize) -> InstanceResult {
    let p = families::path(n).expect("positive order");
    let g6 = emit_graph6(&p).expect("small order");
    let mut a = Assert::new(CheckId::Paths, &g6);
    a.eq(None, &format!("β(P{n})"), n / 2, matching_size(&p));
    a.eq(None, &format!("β′(P{n})"), (n + 1) / 3, induced_matching_size(&p));
    a.done()
}

fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The root of `poly` in `[lo, hi]`.
fn root_in(poly: &[i64], lo: i64, hi: i64) -> AlgebraicNumber {
    AlgebraicNumber::from_interval(&IntPolynomial::from_i64(poly), rational(lo), rational(hi)).expect("interval isolates one root")
}

fn sqrt(t: i64) -> AlgebraicNumber {
    root_in(&[-t, 0, 1], 0, t.max(1))
}

/// Expected σ as (value, multiplicity) pairs, zero included when present.
pub fn closed_form_star(n: usize) -> Vec<(AlgebraicNumber, usize)> {
    let t = n as i64 - 1;
    let mut out = vec![(sqrt(t).neg(), 1), (sqrt(t), 1)];
    if n >= 3 {
        out.push((AlgebraicNumber::from_integer(0), n - 2));
    }
    out
}

pub fn closed_form_c5() -> Vec<(AlgebraicNumber, usize)> {
    // −(√5 + 1)/2 and (√5 − 1)/2 are the roots of x² + x − 1.
    vec![(root_in(&[-1, 1, 1], -2, -1), 2), (root_in(&[-1, 1, 1], 0, 1), 2), (AlgebraicNumber::from_integer(2), 1)]
}

/// The listed nonzero spectrum of `C_3(a,a,a)` for `a ≥ 1`, plus zero with
/// multiplicity `n − 6`.
pub fn closed_form_c3aaa(a: usize) -> Vec<(AlgebraicNumber, usize)> {
    let ai = a as i64;
    // −(√(1+4a) + 1)/2 and (√(1+4a) − 1)/2 solve x² + x − a = 0;
    // 1 ∓ √(1+a) solve x² − 2x − a = 0.
    let mut out = vec![
        (root_in(&[-ai, 1, 1], -ai - 1, -1), 2),
        (root_in(&[-ai, -2, 1], -ai - 1, 0), 1),
        (root_in(&[-ai, 1, 1], 0, ai), 2),
        (root_in(&[-ai, -2, 1], 1, ai + 2), 1),
    ];
    if a >= 2 {
        out.push((AlgebraicNumber::from_integer(0), 3 * a - 3));
    }
    out
}

/// Compares a computed spectrum against a listed multiset.
fn assert_spectrum(a: &mut Assert<'_>, g: &Graph, expected: &[(AlgebraicNumber, usize)]) {
    let spec = Eigenstructure::new(g).spectrum();
    a.eq(None, "number of distinct eigenvalues", expected.len(), spec.entries.len());
    for (value, mult) in expected {
        a.eigenvalue();
        let hits: Vec<usize> = spec.entries.iter().filter(|e| e.value.alg_equal(value)).map(|e| e.mult).collect();
        a.eq(Some(value), "multiplicity", vec![*mult], hits);
    }
    a.eq(None, "total multiplicity", g.order(), spec.total_multiplicity());
}

/// Closed-form spectra: `K_{1,n−1}` for `2 ≤ n ≤ 10`, `C_5`, `C_3(a,a,a)`
/// for `a ∈ 1..=4`, and `m_{−1}(C_3) = 2`.
pub fn check_spectra_formulas() -> Vec<InstanceResult> {
    let mut out = Vec::new();
    let mut run = |g: Graph, expected: Vec<(AlgebraicNumber, usize)>| {
        let g6 = emit_graph6(&g).expect("small order");
        let mut a = Assert::new(CheckId::SpectraFormulas, &g6);
        assert_spectrum(&mut a, &g, &expected);
        out.push(a.done());
    };
    for n in 2..=10 {
        run(families::star(n).expect("small order"), closed_form_star(n));
    }
    run(families::cycle(5).expect("small order"), closed_form_c5());
    for a in 1..=4 {
        run(families::c3aaa(a).expect("small order"), closed_form_c3aaa(a));
    }
    let c3 = families::cycle(3).expect("small order");
    let g6 = emit_graph6(&c3).expect("small order");
    let mut a = Assert::new(CheckId::SpectraFormulas, &g6);
    let minus_one = AlgebraicNumber::from_integer(-1);
    let three = AlgebraicNumber::from_integer(3);
    a.eigenvalue();
    let m_minus_one = multiplicity(&c3, &minus_one);
    a.eq(Some(&minus_one), "m_-1(C3)", 2, m_minus_one);
    a.note(
        Some(&three),
        "m_3(C3) = 2 as claimed".into(),
        format!("m_3(C3) = {}, m_-1(C3) = {m_minus_one}; σ(C3) = {{2, −1, −1}}", multiplicity(&c3, &three)),
        Severity::PaperDiscrepancyNote,
    );
    out.push(a.done());
    out
}

/// For `C_3(a,a,a)` and `C_5`, every nonzero λ with `m_λ = 2` drops to
/// multiplicity 1 on deleting any vertex.
pub fn check_lemma26(g: &Graph, expected_double: usize) -> InstanceResult {
    let g6 = emit_graph6(g).expect("small order");
    let mut a = Assert::new(CheckId::Lemma26, &g6);
    let doubles: Vec<AlgebraicNumber> = Eigenstructure::new(g).nonzero_eigenvalues().into_iter().filter(|(_, m)| *m == 2).map(|(l, _)| l).collect();
    a.eq(None, "nonzero eigenvalues of multiplicity 2", expected_double, doubles.len());
    for lambda in &doubles {
        for x in 0..g.order() {
            a.eigenvalue();
            a.eq(Some(lambda), &format!("m(G−{x})"), 1, multiplicity(&g.delete_vertex(x), lambda));
        }
    }
    a.done()
}

/// The center of `K_{1,s}` joined to two vertices of a host: every nonzero
/// eigenvalue has multiplicity at most 2.
pub fn check_lemma27(g: &Graph) -> InstanceResult {
    let g6 = emit_graph6(g).expect("small order");
    let mut a = Assert::new(CheckId::Lemma27, &g6);
    for (lambda, m) in Eigenstructure::new(g).nonzero_eigenvalues() {
        a.eigenvalue();
        a.that(m <= 2, Some(&lambda), || ("m ≤ 2".into(), format!("m = {m}")));
    }
    a.done()
}

/// One composite `GuvH` with the eigenvalues satisfying
/// `m_λ(G) = m_λ(G−u) + 1`: asserts `m_λ(GuvH) = m_λ(H−v) + m_λ(G) − 1`.
/// Skipped when no eigenvalue of `G` meets the hypothesis.
pub fn check_lemma22(g: &Graph, u: usize, h: &Graph, v: usize) -> InstanceResult {
    let joined = g.join_bridge(u, h, v).expect("orders within limits");
    let g6 = emit_graph6(&joined).expect("small order");
    let eg = Eigenstructure::new(g);
    let eg_u = Eigenstructure::new(&g.delete_vertex(u));
    let h_v = h.delete_vertex(v);
    let eh_v = (h_v.order() > 0).then(|| Eigenstructure::new(&h_v));
    let ej = Eigenstructure::new(&joined);
    let mut a = Assert::new(CheckId::Lemma22, &g6);
    let mut any = false;
    // The hypothesis forces λ ∈ σ(G).
    for e in eg.spectrum().entries {
        if e.mult != eg_u.multiplicity(&e.value) + 1 {
            continue;
        }
        any = true;
        a.eigenvalue();
        let mh = eh_v.as_ref().map_or(0, |s| s.multiplicity(&e.value));
        a.eq(Some(&e.value), &format!("m(GuvH) with u = {u}, v = {}", g.order() + v), mh + e.mult - 1, ej.multiplicity(&e.value));
    }
    if !any {
        return InstanceResult::skipped();
    }
    a.done()
}

/// Hosts for the two-vertex join: `C_3(a,a,a)` for `a ≤ 3` and `C_5`, each
/// with the number of nonzero eigenvalues of multiplicity 2.
pub fn cyclic_hosts() -> Vec<(Graph, usize)> {
    let mut out: Vec<(Graph, usize)> = (0..=3).map(|a| (families::c3aaa(a).expect("small order"), if a == 0 { 1 } else { 2 })).collect();
    out.push((families::cycle(5).expect("small order"), 2));
    out
}

/// The same rational as an algebraic number, for tests.
pub fn sqrt_of(t: i64) -> AlgebraicNumber {
    sqrt(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn facts(g: Graph) -> GraphFacts {
        GraphFacts::new(g)
    }

    #[test]
    fn names_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(id.name().parse::<CheckId>().unwrap(), *id);
        }
        assert!("thm99".parse::<CheckId>().is_err());
    }

    #[test]
    fn thm31_examples() {
        for g in [families::c3aaa(1).unwrap(), families::path(6).unwrap(), families::star(6).unwrap(), families::cycle(5).unwrap()] {
            let r = check_thm31(&facts(g));
            assert!(!r.skipped && r.violation.is_none(), "{r:?}");
        }
        assert!(check_thm31(&facts(Graph::empty(2).unwrap())).skipped);
    }

    #[test]
    fn spectra_and_note() {
        let results = check_spectra_formulas();
        assert!(results.iter().all(|r| r.violation.is_none()), "{results:?}");
        let notes: Vec<_> = results.iter().flat_map(|r| &r.notes).collect();
        assert_eq!(notes.len(), 1);
        assert_eq!(notes[0].severity, Severity::PaperDiscrepancyNote);
    }

    #[test]
    fn fig2_passes() {
        let r = check_fig2(&facts(families::fig2_graph()));
        assert!(r.violation.is_none(), "{r:?}");
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn small_hosts() {
        for (g, doubles) in cyclic_hosts() {
            let r = check_lemma26(&g, doubles);
            assert!(r.violation.is_none(), "{r:?}");
        }
        let r = check_lemma22(&families::star(3).unwrap(), 1, &families::path(3).unwrap(), 0);
        assert!(r.violation.is_none(), "{r:?}");
    }

    #[test]
    fn violations_are_reported() {
        // A wrong closed form must be caught.
        let g = families::star(4).unwrap();
        let g6 = emit_graph6(&g).unwrap();
        let mut a = Assert::new(CheckId::SpectraFormulas, &g6);
        assert_spectrum(&mut a, &g, &closed_form_star(5));
        assert!(a.done().violation.is_some());
    }
}
