//! Suite configuration and the deterministic parallel runner.

use std::io::{BufRead, BufReader};
use std::path::PathBuf;
use std::time::Instant;

use eigmatch_core::families::fig2_graph;
use eigmatch_core::{parse_graph6, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::checks::{self, CheckId};
use crate::constructions::{lemma27_constructions, thm32_constructions, thm33_constructions};
use crate::enumerate::{connected_graphs_up_to, trees_up_to};
use crate::error::HarnessError;
use crate::facts::GraphFacts;
use crate::report::{Bounds, CheckCounters, CheckSummary, InstanceResult, Severity, SuiteReport, VerificationFinding};

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Connected graphs on up to this many vertices feed the general checks.
    pub connected_max_n: usize,
    /// Bound for the `β′ ≥ 3` characterization and its component lemma;
    /// 9 is the opt-in extended sweep.
    pub thm32_max_n: usize,
    pub trees_max_n: usize,
    pub lemma22_trials: usize,
    pub seed: u64,
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
    /// `None` runs every check.
    pub checks: Option<Vec<CheckId>>,
    /// Replaces the internal enumerations with graphs read from a file.
    pub graph6_file: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { connected_max_n: 8, thm32_max_n: 8, trees_max_n: 12, lemma22_trials: 200, seed: 0, workers: 0, checks: None, graph6_file: None }
    }
}

impl SuiteConfig {
    pub fn enabled(&self, id: CheckId) -> bool {
        self.checks.as_ref().is_none_or(|c| c.contains(&id))
    }

    fn selected(&self) -> Vec<CheckId> {
        CheckId::ALL.iter().copied().filter(|&c| self.enabled(c)).collect()
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.connected_max_n > crate::enumerate::CONNECTED_MAX_ORDER || self.thm32_max_n > crate::enumerate::CONNECTED_MAX_ORDER {
            return Err(HarnessError::Config(format!("connected graph bounds above {} are not supported", crate::enumerate::CONNECTED_MAX_ORDER)));
        }
        if self.trees_max_n > crate::enumerate::TREE_MAX_ORDER {
            return Err(HarnessError::Config(format!("tree bound above {} is not supported", crate::enumerate::TREE_MAX_ORDER)));
        }
        if self.checks.as_ref().is_some_and(Vec::is_empty) {
            return Err(HarnessError::Config("no checks selected".into()));
        }
        Ok(())
    }

    fn bounds(&self) -> Bounds {
        Bounds {
            connected_max_n: self.connected_max_n,
            thm32_max_n: self.thm32_max_n,
            trees_max_n: self.trees_max_n,
            lemma22_trials: self.lemma22_trials,
            seed: self.seed,
            graph6_file: self.graph6_file.as_ref().map(|p| p.display().to_string()),
        }
    }
}

/// Reads one graph per line, skipping blank lines and `>>graph6<<` headers.
pub fn read_graph6_file(path: &std::path::Path) -> Result<Vec<Graph>, HarnessError> {
    let io = |source| HarnessError::Io { path: path.to_path_buf(), source };
    let file = std::fs::File::open(path).map_err(io)?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(io)?;
        let t = line.trim().trim_start_matches(">>graph6<<");
        if t.is_empty() {
            continue;
        }
        out.push(parse_graph6(t).map_err(|source| HarnessError::Graph6 { path: path.to_path_buf(), line: i + 1, source })?);
    }
    Ok(out)
}

/// A connected random graph: a random recursive tree plus extra edges.
fn random_connected(rng: &mut ChaCha8Rng, n: usize, extra: f64) -> Graph {
    let mut g = Graph::empty(n).expect("small order");
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.try_add_edge(u, v).expect("valid edge");
    }
    for v in 1..n {
        for u in 0..v {
            if !g.has_edge(u, v) && rng.gen_bool(extra) {
                g.try_add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// Draws composites until `trials` of them have an eigenvalue meeting the
/// hypothesis. Instances are drawn sequentially so the sequence depends on
/// the seed only; evaluation happens in parallel.
fn lemma22_results(seed: u64, trials: usize) -> Vec<InstanceResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    while out.len() < trials {
        let batch: Vec<(Graph, usize, Graph, usize)> = (0..trials - out.len())
            .map(|_| {
                let ng = rng.gen_range(2..=6);
                let nh = rng.gen_range(1..=6);
                let g = random_connected(&mut rng, ng, 0.3);
                let h = random_connected(&mut rng, nh, 0.3);
                let u = rng.gen_range(0..ng);
                let v = rng.gen_range(0..nh);
                (g, u, h, v)
            })
            .collect();
        let results: Vec<InstanceResult> = batch.par_iter().map(|(g, u, h, v)| checks::check_lemma22(g, *u, h, *v)).collect();
        out.extend(results.into_iter().filter(|r| !r.skipped));
    }
    out
}

struct Streams {
    connected: Vec<GraphFacts>,
    trees: Vec<GraphFacts>,
    thm32_extra: Vec<GraphFacts>,
    thm33_extra: Vec<GraphFacts>,
}

fn build_streams(config: &SuiteConfig, selected: &[CheckId]) -> Result<Streams, HarnessError> {
    let wants_connected = selected.iter().any(|c| c.is_connected_check());
    let wants_trees = selected.iter().any(|c| c.is_tree_check());
    let facts = |graphs: Vec<Graph>| -> Vec<GraphFacts> { graphs.into_par_iter().map(GraphFacts::new).collect() };
    let (connected, trees) = match &config.graph6_file {
        Some(path) => {
            let all = facts(read_graph6_file(path)?);
            let trees = if wants_trees { all.iter().filter(|f| f.is_tree()).map(|f| GraphFacts::new(f.graph.clone())).collect() } else { Vec::new() };
            (if wants_connected { all } else { Vec::new() }, trees)
        }
        None => {
            let connected_n = config.connected_max_n.max(if selected.iter().any(|c| matches!(c, CheckId::Thm32 | CheckId::Lemma31)) { config.thm32_max_n } else { 0 });
            let connected = if wants_connected && connected_n > 0 { facts(connected_graphs_up_to(connected_n)?) } else { Vec::new() };
            let trees = if wants_trees && config.trees_max_n > 0 { facts(trees_up_to(config.trees_max_n)?) } else { Vec::new() };
            (connected, trees)
        }
    };
    let wants = |ids: &[CheckId]| ids.iter().any(|c| selected.contains(c));
    let thm32_extra = if wants(&[CheckId::Thm32, CheckId::Lemma31]) { facts(thm32_constructions()) } else { Vec::new() };
    let thm33_extra = if wants(&[CheckId::Thm33]) { facts(thm33_constructions()) } else { Vec::new() };
    Ok(Streams { connected, trees, thm32_extra, thm33_extra })
}

fn with_extra<'a>(mut base: Vec<&'a GraphFacts>, extra: &'a [GraphFacts]) -> Vec<&'a GraphFacts> {
    base.extend(extra.iter());
    base
}

fn run_over(stream: &[&GraphFacts], f: fn(&GraphFacts) -> InstanceResult) -> Vec<InstanceResult> {
    stream.par_iter().map(|g| f(g)).collect()
}

fn results_for(id: CheckId, config: &SuiteConfig, s: &Streams) -> Vec<InstanceResult> {
    let from_file = config.graph6_file.is_some();
    let connected_upto = |n: usize| -> Vec<&GraphFacts> { s.connected.iter().filter(|f| from_file || f.order() <= n).collect() };
    let trees: Vec<&GraphFacts> = s.trees.iter().collect();
    let cn = config.connected_max_n;
    match id {
        CheckId::Thm31 => run_over(&connected_upto(cn), checks::check_thm31),
        CheckId::Cor31 => run_over(&connected_upto(cn), checks::check_cor31),
        CheckId::Interlacing => run_over(&connected_upto(cn), checks::check_interlacing),
        CheckId::Lemma33 => run_over(&connected_upto(cn), checks::check_lemma33),
        CheckId::Graph6RoundTrip => run_over(&connected_upto(cn), checks::check_graph6_roundtrip),
        CheckId::Thm32 => run_over(&with_extra(connected_upto(config.thm32_max_n), &s.thm32_extra), checks::check_thm32),
        CheckId::Lemma31 => run_over(&with_extra(connected_upto(config.thm32_max_n), &s.thm32_extra), checks::check_lemma31),
        CheckId::Thm33 => run_over(&with_extra(connected_upto(cn), &s.thm33_extra), checks::check_thm33),
        CheckId::Thm12 => run_over(&trees, checks::check_thm12),
        CheckId::Thm11 => run_over(&trees, checks::check_thm11),
        CheckId::Lemma23 => run_over(&trees, checks::check_lemma23),
        CheckId::Lemma24 => run_over(&trees, checks::check_lemma24),
        CheckId::M0Identity => run_over(&trees, checks::check_m0_identity),
        CheckId::CaterpillarSimple => run_over(&trees, checks::check_caterpillar_simple),
        CheckId::Fig2 => vec![checks::check_fig2(&GraphFacts::new(fig2_graph()))],
        CheckId::Paths => (2..=20).map(checks::check_path).collect(),
        CheckId::SpectraFormulas => checks::check_spectra_formulas(),
        CheckId::Lemma22 => lemma22_results(config.seed, config.lemma22_trials),
        CheckId::Lemma26 => checks::cyclic_hosts().par_iter().map(|(g, d)| checks::check_lemma26(g, *d)).collect(),
        CheckId::Lemma27 => lemma27_constructions().par_iter().map(checks::check_lemma27).collect(),
    }
}

/// Runs the selected checks. The report depends only on the configuration
/// (apart from the wall-clock), not on the worker count.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, HarnessError> {
    config.validate()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(config.workers).build().map_err(|e| HarnessError::Config(e.to_string()))?;
    let selected = config.selected();
    let (checks, findings) = pool.install(|| -> Result<_, HarnessError> {
        let streams = build_streams(config, &selected)?;
        let mut summaries = Vec::new();
        let mut findings: Vec<VerificationFinding> = Vec::new();
        for &id in &selected {
            let mut counters = CheckCounters::default();
            for r in results_for(id, config, &streams) {
                counters.record(&r);
                findings.extend(r.violation);
                findings.extend(r.notes);
            }
            summaries.push(CheckSummary { check: id, counters });
        }
        Ok((summaries, findings))
    })?;
    let mut findings = findings;
    findings.sort_by(|a, b| (a.check, &a.graph6).cmp(&(b.check, &b.graph6)));
    let violations = findings.iter().filter(|f| f.severity == Severity::Violation).count();
    let notes = findings.iter().filter(|f| f.severity == Severity::PaperDiscrepancyNote).count();
    Ok(SuiteReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        bounds: config.bounds(),
        checks,
        findings,
        violations,
        notes,
        wall_clock_seconds: start.elapsed().as_secs_f64(),
    })
}
