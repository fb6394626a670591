//! The `analyze` report: spectrum, matchings, cyclomatic number, diameter
//! and every applicable classification.

use eigmatch_core::families::{classify_thm12, classify_thm31_equality, classify_thm32, classify_thm33, Classification};
use eigmatch_core::matching::{induced_matching_number, matching_number, EdgeSet};
use eigmatch_core::spectral::{Eigenstructure, SpectrumSummary};
use eigmatch_core::{emit_graph6, AlgebraicNumber, Graph};
use serde::Serialize;

#[derive(Serialize)]
pub struct ClassificationEntry {
    /// Which characterization was consulted.
    pub statement: &'static str,
    pub eigenvalue: Option<AlgebraicNumber>,
    pub classification: Classification,
    /// The witness re-verified from scratch.
    pub verified: bool,
}

#[derive(Serialize)]
pub struct LambdaQuery {
    pub value: AlgebraicNumber,
    pub multiplicity: usize,
}

#[derive(Serialize)]
pub struct Analysis {
    pub graph6: Option<String>,
    pub order: usize,
    pub edges: usize,
    pub connected: bool,
    pub diameter: Option<usize>,
    pub cyclomatic: usize,
    pub char_poly: String,
    pub spectrum: SpectrumSummary,
    pub beta: usize,
    pub matching: EdgeSet,
    pub beta_prime: usize,
    pub induced_matching: EdgeSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<LambdaQuery>,
    pub classifications: Vec<ClassificationEntry>,
    /// Per-component analyses of a disconnected input.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<Analysis>,
}

fn entry(statement: &'static str, g: &Graph, lambda: Option<&AlgebraicNumber>, c: Classification) -> ClassificationEntry {
    let verified = match lambda {
        Some(l) => c.verify(g, l).is_ok(),
        None => c.verify(g, &AlgebraicNumber::from_integer(0)).is_ok(),
    };
    ClassificationEntry { statement, eigenvalue: lambda.cloned(), classification: c, verified }
}

/// Classifications for a connected graph, at λ if given and otherwise at
/// every nonzero eigenvalue.
fn classifications(g: &Graph, eig: &Eigenstructure, lambda: Option<&AlgebraicNumber>, beta_prime: usize, diameter: usize) -> Vec<ClassificationEntry> {
    let mut out = Vec::new();
    if let Ok(c) = classify_thm31_equality(g) {
        out.push(entry("m = β′ + c", g, None, c));
    }
    let lambdas: Vec<AlgebraicNumber> = match lambda {
        Some(l) if !l.is_zero() && eig.multiplicity(l) > 0 => vec![l.clone()],
        Some(_) => Vec::new(),
        None => eig.nonzero_eigenvalues().into_iter().map(|(l, _)| l).collect(),
    };
    for l in &lambdas {
        if g.is_tree() {
            if let Ok(c) = classify_thm12(g, l) {
                out.push(entry("tree m = β′ − 1", g, Some(l), c));
            }
        }
        if diameter >= 4 && beta_prime >= 3 {
            if let Ok(c) = classify_thm32(g, l) {
                out.push(entry("m = β′ + c − 1", g, Some(l), c));
            }
        }
        if beta_prime >= 3 {
            if let Ok(c) = classify_thm33(g, l) {
                out.push(entry("m = β + c − 1", g, Some(l), c));
            }
        }
    }
    out
}

pub fn analyze(g: &Graph, lambda: Option<&AlgebraicNumber>) -> Analysis {
    let eig = Eigenstructure::new(g);
    let connected = g.order() > 0 && g.is_connected();
    let diameter = g.diameter().ok();
    let (beta, matching) = matching_number(g);
    let (beta_prime, induced_matching) = induced_matching_number(g);
    let classes = if connected { classifications(g, &eig, lambda, beta_prime, diameter.unwrap_or(0)) } else { Vec::new() };
    let components = if connected || g.order() == 0 {
        Vec::new()
    } else {
        g.connected_components().nontrivial.iter().map(|c| analyze(&c.graph, lambda)).collect()
    };
    Analysis {
        graph6: emit_graph6(g).ok(),
        order: g.order(),
        edges: g.edge_count(),
        connected,
        diameter,
        cyclomatic: g.cyclomatic_number(),
        char_poly: eig.char_poly().to_string(),
        spectrum: eig.spectrum(),
        beta,
        matching,
        beta_prime,
        induced_matching,
        lambda: lambda.map(|l| LambdaQuery { value: l.clone(), multiplicity: eig.multiplicity(l) }),
        classifications: classes,
        components,
    }
}

fn edges_text(m: &EdgeSet) -> String {
    m.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

/// Stable, line-oriented rendering.
pub fn to_text(a: &Analysis) -> String {
    let mut s = String::new();
    let mut line = |k: &str, v: String| s.push_str(&format!("{k}: {v}\n"));
    line("graph6", a.graph6.clone().unwrap_or_else(|| "-".into()));
    line("order", a.order.to_string());
    line("edges", a.edges.to_string());
    line("connected", a.connected.to_string());
    line("diameter", a.diameter.map_or("-".into(), |d| d.to_string()));
    line("cyclomatic", a.cyclomatic.to_string());
    line("char_poly", a.char_poly.clone());
    line("beta", format!("{} [{}]", a.beta, edges_text(&a.matching)));
    line("beta_prime", format!("{} [{}]", a.beta_prime, edges_text(&a.induced_matching)));
    for e in &a.spectrum.entries {
        line("eigenvalue", format!("{} mult={} approx={:.6}", e.value.to_exact_string(), e.mult, e.approx));
    }
    if let Some(q) = &a.lambda {
        line("lambda", format!("{} mult={}", q.value.to_exact_string(), q.multiplicity));
    }
    for c in &a.classifications {
        let at = c.eigenvalue.as_ref().map(|l| format!(" at {}", l.to_exact_string())).unwrap_or_default();
        line("classification", format!("{}{}: {} verified={}", c.statement, at, c.classification.tag(), c.verified));
    }
    for (i, comp) in a.components.iter().enumerate() {
        s.push_str(&format!("component {i}:\n"));
        for l in to_text(comp).lines() {
            s.push_str(&format!("  {l}\n"));
        }
    }
    s
}

/// The spectrum as CSV rows.
pub fn to_csv(a: &Analysis) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["graph6", "eigenvalue", "multiplicity", "approx"])?;
    let g6 = a.graph6.clone().unwrap_or_default();
    for e in &a.spectrum.entries {
        w.write_record([g6.as_str(), &e.value.to_exact_string(), &e.mult.to_string(), &format!("{:.6}", e.approx)])?;
    }
    let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}
