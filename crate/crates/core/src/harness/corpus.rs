//! Corpus certification: solve every target on every corpus graph and check
//! each bound and structural identity against the exact values.

use std::collections::{BTreeMap, HashMap};
use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::alliance::{self, certify, Requirement};
use crate::bounds::{self, BoundContext, BoundKind, BoundReport, Target};
use crate::error::{Error, Result};
use crate::graph::edge_list;
use crate::graph::generators::Family;
use crate::graph::Graph;
use crate::solver::{self, Parameter, SolveOptions, SolveResult, DEFAULT_MAX_N};
use crate::vertex_set::VertexSet;

const DEFAULT_SPEC: &str = include_str!("../../corpus/default.toml");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RandomModel {
    RandomTree,
    RandomCubic,
    RandomGraph,
}

/// A seeded family of random graphs. Instance `i` uses seed `seed + i`
/// (shifted by multiples of 1000 while redrawing for connectivity) and
/// cycles through the admissible orders in `n_min..=n_max`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Batch {
    pub model: RandomModel,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    #[serde(default = "default_p")]
    pub p: f64,
    pub seed: u64,
    #[serde(default)]
    pub connected: bool,
}

fn default_p() -> f64 {
    0.4
}

fn default_targets() -> Vec<Parameter> {
    vec![Parameter::AK, Parameter::GammaKA, Parameter::GammaKCA]
}

fn default_line_max() -> usize {
    14
}

fn default_max_n() -> usize {
    DEFAULT_MAX_N
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    /// Seed for the sampled checks (forest identity, shrinking).
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_targets")]
    pub targets: Vec<Parameter>,
    /// Line graphs are certified only for graphs with at most this many edges.
    #[serde(default = "default_line_max")]
    pub line_graph_max_edges: usize,
    #[serde(default)]
    pub forest_pairs: usize,
    #[serde(default)]
    pub shrink_samples: usize,
    #[serde(default = "default_max_n")]
    pub max_n: usize,
    #[serde(default, rename = "graph")]
    pub graphs: Vec<Family>,
    #[serde(default, rename = "batch")]
    pub batches: Vec<Batch>,
}

impl CorpusSpec {
    pub fn from_toml(text: &str) -> Result<CorpusSpec> {
        let spec: CorpusSpec = toml::from_str(text).map_err(|e| Error::domain(format!("corpus spec: {e}")))?;
        for t in &spec.targets {
            if !t.takes_k() {
                return Err(Error::domain(format!(
                    "target {t} is always certified; list only a_k, gamma_k_a, gamma_k_ca"
                )));
            }
        }
        Ok(spec)
    }

    pub fn default_corpus() -> CorpusSpec {
        Self::from_toml(DEFAULT_SPEC).expect("bundled corpus parses")
    }

    /// Instantiates every graph, in spec order.
    pub fn expand(&self) -> Result<Vec<CorpusGraph>> {
        let mut out = Vec::new();
        for family in &self.graphs {
            out.push(CorpusGraph::new(family.clone())?);
        }
        for batch in &self.batches {
            let orders: Vec<usize> = (batch.n_min..=batch.n_max)
                .filter(|&n| batch.model != RandomModel::RandomCubic || n % 2 == 0)
                .collect();
            if orders.is_empty() && batch.count > 0 {
                return Err(Error::domain(format!(
                    "batch {:?} has no admissible order",
                    batch.model
                )));
            }
            for i in 0..batch.count {
                let n = orders[i % orders.len()];
                out.push(draw(batch, n, batch.seed + i as u64)?);
            }
        }
        Ok(out)
    }
}

fn draw(batch: &Batch, n: usize, base_seed: u64) -> Result<CorpusGraph> {
    const ATTEMPTS: u64 = 1000;
    for attempt in 0..ATTEMPTS {
        let seed = base_seed + attempt * 1000;
        let family = match batch.model {
            RandomModel::RandomTree => Family::RandomTree { n, seed },
            RandomModel::RandomCubic => Family::RandomCubic { n, seed },
            RandomModel::RandomGraph => Family::RandomGraph { n, p: batch.p, seed },
        };
        let cg = CorpusGraph::new(family)?;
        if !batch.connected || cg.graph.is_connected() {
            return Ok(cg);
        }
    }
    Err(Error::Resource(format!(
        "no connected {:?} instance on {n} vertices after {ATTEMPTS} draws",
        batch.model
    )))
}

#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub family: Family,
    pub graph: Graph,
    /// Family label plus a content hash of the canonical edge list.
    pub id: String,
}

impl CorpusGraph {
    pub fn new(family: Family) -> Result<CorpusGraph> {
        let graph = family.generate()?;
        let id = format!("{}#{}", family.label(), content_hash(&graph));
        Ok(CorpusGraph { family, graph, id })
    }
}

/// First 12 hex digits of SHA-256 over the canonical edge list, which is
/// independent of the order edges were supplied in.
pub fn content_hash(g: &Graph) -> String {
    let digest = Sha256::digest(edge_list::to_edge_list(g).as_bytes());
    digest[..6].iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// The parameter the failed check concerns, if any single one.
    pub target: Option<Parameter>,
    pub message: String,
}

/// Results and failed checks for one graph at one `k` (or, with `k`
/// absent, the graph-wide checks).
#[derive(Clone, Debug, Serialize)]
pub struct CertificationRecord {
    pub graph_id: String,
    pub k: Option<i64>,
    pub values: BTreeMap<Parameter, Option<usize>>,
    pub bounds: Vec<BoundReport>,
    pub violations: Vec<Violation>,
    pub errors: Vec<String>,
}

impl CertificationRecord {
    fn new(graph_id: &str, k: Option<i64>) -> Self {
        CertificationRecord {
            graph_id: graph_id.to_string(),
            k,
            values: BTreeMap::new(),
            bounds: Vec::new(),
            violations: Vec::new(),
            errors: Vec::new(),
        }
    }

    fn flag(&mut self, target: Option<Parameter>, message: impl Into<String>) {
        self.violations.push(Violation {
            target,
            message: message.into(),
        });
    }
}

/// One CSV line per (graph, k, target).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CsvRow {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub target: String,
    pub k: Option<i64>,
    pub status: String,
    pub value: Option<usize>,
    pub best_lower: Option<i64>,
    pub best_upper: Option<i64>,
    pub violation: u8,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CorpusOutcome {
    pub records: Vec<CertificationRecord>,
    #[serde(skip)]
    pub rows: Vec<CsvRow>,
    /// Failures among the sampled checks that span the whole corpus.
    pub sampled_violations: Vec<String>,
}

impl CorpusOutcome {
    pub fn violation_count(&self) -> usize {
        self.records.iter().map(|r| r.violations.len()).sum::<usize>() + self.sampled_violations.len()
    }

    pub fn violations(&self) -> impl Iterator<Item = String> + '_ {
        self.records
            .iter()
            .flat_map(|r| {
                r.violations.iter().map(move |v| {
                    let k = r.k.map(|k| format!(" k={k}")).unwrap_or_default();
                    format!("{}{k}: {}", r.graph_id, v.message)
                })
            })
            .chain(self.sampled_violations.iter().cloned())
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        for row in &self.rows {
            writer
                .serialize(row)
                .map_err(|e| Error::Resource(format!("csv: {e}")))?;
        }
        writer.flush().map_err(|e| Error::Resource(format!("csv: {e}")))
    }
}

/// Runs every check on every corpus graph. Graphs are certified on a pool
/// of `workers` threads; output order follows the spec regardless.
pub fn run_corpus(spec: &CorpusSpec, workers: usize) -> Result<CorpusOutcome> {
    let graphs = spec.expand()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Resource(format!("worker pool: {e}")))?;
    let per_graph: Vec<GraphOutcome> = pool.install(|| graphs.par_iter().map(|cg| certify_graph(cg, spec)).collect());

    let mut outcome = CorpusOutcome::default();
    let mut witnesses = Vec::new();
    for (idx, g) in per_graph.into_iter().enumerate() {
        outcome.records.extend(g.records);
        outcome.rows.extend(g.rows);
        witnesses.extend(g.global_witnesses.into_iter().map(|(k, s)| (idx, k, s)));
    }
    outcome
        .sampled_violations
        .extend(forest_identity_samples(spec, &graphs));
    outcome
        .sampled_violations
        .extend(shrink_samples(spec, &graphs, &witnesses));
    Ok(outcome)
}

struct GraphOutcome {
    records: Vec<CertificationRecord>,
    rows: Vec<CsvRow>,
    global_witnesses: Vec<(i64, VertexSet)>,
}

fn requirement(p: Parameter) -> Option<Requirement> {
    match p {
        Parameter::AK => Some(Requirement::Defensive),
        Parameter::GammaKA => Some(Requirement::Global),
        Parameter::GammaKCA => Some(Requirement::GlobalConnected),
        _ => None,
    }
}

/// Exact results for one graph, keyed by parameter and k.
struct Table<'a> {
    g: &'a Graph,
    d1: i64,
    gamma: SolveResult,
    solved: HashMap<(Parameter, i64), SolveResult>,
}

impl Table<'_> {
    fn get(&self, p: Parameter, k: i64) -> Option<&SolveResult> {
        if p == Parameter::GammaKA && k < -self.d1 {
            // every dominating set is a global defensive k-alliance here
            return Some(&self.gamma);
        }
        self.solved.get(&(p, k))
    }

    fn value(&self, p: Parameter, k: i64) -> Option<Option<usize>> {
        self.get(p, k).map(|r| r.value)
    }
}

fn certify_graph(cg: &CorpusGraph, spec: &CorpusSpec) -> GraphOutcome {
    let g = &cg.graph;
    let opts = SolveOptions {
        use_pruning: true,
        workers: 1,
        max_n: spec.max_n,
    };
    let (n, m) = (g.n(), g.m());
    let d1 = g.max_degree() as i64;
    let mut graph_rec = CertificationRecord::new(&cg.id, None);
    let mut outcome = GraphOutcome {
        records: Vec::new(),
        rows: Vec::new(),
        global_witnesses: Vec::new(),
    };
    let row = |target: &str, k: Option<i64>, status: &str, value, lower, upper, bad: bool| CsvRow {
        graph_id: cg.id.clone(),
        n,
        m,
        target: target.to_string(),
        k,
        status: status.to_string(),
        value,
        best_lower: lower,
        best_upper: upper,
        violation: u8::from(bad),
    };

    let (gamma, gamma_t) = match (
        solver::solve(g, Parameter::Gamma, None, opts),
        solver::solve(g, Parameter::GammaT, None, opts),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            graph_rec.errors.push(e.to_string());
            for p in [Parameter::Gamma, Parameter::GammaT] {
                outcome
                    .rows
                    .push(row(p.as_str(), None, "error", None, None, None, false));
            }
            outcome.records.push(graph_rec);
            return outcome;
        }
    };
    graph_rec.values.insert(Parameter::Gamma, gamma.value);
    graph_rec.values.insert(Parameter::GammaT, gamma_t.value);

    let mut table = Table {
        g,
        d1,
        gamma,
        solved: HashMap::new(),
    };
    let mut errors = Vec::new();
    for &p in &spec.targets {
        for k in -d1..=d1 {
            match solver::solve(g, p, Some(k), opts) {
                Ok(r) => {
                    table.solved.insert((p, k), r);
                }
                Err(e) => errors.push(format!("{p} k={k}: {e}")),
            }
        }
    }
    graph_rec.errors.extend(errors);

    let gamma_value = table.gamma.value;
    for k in -d1..=d1 {
        let mut rec = CertificationRecord::new(&cg.id, Some(k));
        for &p in &spec.targets {
            rec.values.insert(p, table.value(p, k).flatten());
        }
        check_witnesses(&table, k, &mut rec);
        check_relations(&table, k, &mut rec);
        check_constructions(cg, &table, k, &mut rec);
        if let Some(r) = table.get(Parameter::GammaKA, k) {
            if let Some(w) = r.witness {
                outcome.global_witnesses.push((k, w));
            }
        }

        let mut bests = HashMap::new();
        for &p in &spec.targets {
            let Ok(target) = Target::try_from(p) else { continue };
            let ctx = BoundContext {
                assume_exists: false,
                gamma: gamma_value,
            };
            match bounds::evaluate_with(g, k, target, &ctx) {
                Ok(reports) => {
                    if let Some(result) = table.get(p, k) {
                        check_soundness(p, result, &reports, &mut rec);
                    }
                    bests.insert(
                        p,
                        (bounds::aggregate_lower(&reports), bounds::aggregate_upper(&reports)),
                    );
                    rec.bounds.extend(reports);
                }
                Err(e) => rec.errors.push(format!("bounds for {p}: {e}")),
            }
        }

        for &p in &spec.targets {
            let bad = rec.violations.iter().any(|v| v.target.is_none() || v.target == Some(p));
            let (lower, upper) = bests.get(&p).copied().unwrap_or((None, None));
            let (status, value) = match table.get(p, k) {
                Some(r) if r.is_found() => ("found", r.value),
                Some(_) => ("none_exists", None),
                None => ("error", None),
            };
            outcome
                .rows
                .push(row(p.as_str(), Some(k), status, value, lower, upper, bad));
        }
        outcome.records.push(rec);
    }

    check_graph_wide(cg, &table, &gamma_t, spec, opts, &mut graph_rec);
    for (p, r) in [(Parameter::Gamma, &table.gamma), (Parameter::GammaT, &gamma_t)] {
        let bad = !graph_rec.violations.is_empty();
        let status = if r.is_found() { "found" } else { "none_exists" };
        outcome
            .rows
            .push(row(p.as_str(), None, status, r.value, None, None, bad));
    }
    outcome.records.push(graph_rec);
    outcome
}

/// Witnesses must re-certify and satisfy the counting inequalities that
/// the bounds are derived from.
fn check_witnesses(t: &Table, k: i64, rec: &mut CertificationRecord) {
    let g = t.g;
    let n = g.n() as i64;
    for p in [Parameter::AK, Parameter::GammaKA, Parameter::GammaKCA] {
        let Some(result) = t.solved.get(&(p, k)) else { continue };
        let Some(w) = result.witness else { continue };
        let req = requirement(p).expect("alliance parameter");
        let cert = match certify(g, &w, k, req) {
            Ok(c) => c,
            Err(e) => {
                rec.flag(Some(p), format!("witness cannot be certified: {e}"));
                continue;
            }
        };
        if !cert.holds {
            rec.flag(Some(p), format!("witness {:?} fails {:?}", w, req));
        }
        for msg in cert.counting_violations(g.n()) {
            rec.flag(Some(p), msg);
        }
        let cap = (t.d1 - k).div_euclid(2);
        if cert.members.iter().any(|mm| mm.outside as i64 > cap) {
            rec.flag(
                Some(p),
                format!("member with more than floor((d_1-k)/2) = {cap} outside neighbours"),
            );
        }
        let size = w.len() as i64;
        if p != Parameter::AK && size * size - k * size - n < 0 {
            rec.flag(Some(p), format!("|S|^2 - k|S| - n < 0 for |S| = {size}"));
        }
        if p == Parameter::GammaKCA {
            if let Ok(d) = g.diameter() {
                if d as i64 > size + 1 {
                    rec.flag(Some(p), format!("diameter {d} > |S| + 1"));
                }
            }
        }
        if p == Parameter::GammaKA {
            match bounds::evaluate_for_set(g, &w, k, false) {
                Ok(reports) => {
                    for r in reports.iter().filter(|r| r.applicable) {
                        if r.value.is_some_and(|v| v > size) {
                            rec.flag(Some(p), format!("{} = {:?} exceeds |S| = {size}", r.name, r.value));
                        }
                    }
                }
                Err(e) => rec.flag(Some(p), format!("set bounds: {e}")),
            }
        }
    }
}

/// Monotonicity, parity collapse and the removal inequality.
fn check_relations(t: &Table, k: i64, rec: &mut CertificationRecord) {
    use Parameter::*;
    let g = t.g;
    let d1 = t.d1;

    for p in [AK, GammaKA] {
        if k < d1 {
            if let (Some(lo), Some(hi)) = (t.value(p, k), t.value(p, k + 1)) {
                match (lo, hi) {
                    (None, Some(_)) => rec.flag(Some(p), "exists at k+1 but not at k"),
                    (Some(a), Some(b)) if a > b => rec.flag(Some(p), format!("value {a} at k exceeds {b} at k+1")),
                    _ => {}
                }
            }
        }
        let partner = bounds::parity_collapse(g, k);
        if partner != k && partner <= d1 {
            if let (Some(a), Some(b)) = (t.value(p, k), t.value(p, partner)) {
                if a != b {
                    rec.flag(Some(p), format!("parity partner k={partner} differs: {a:?} vs {b:?}"));
                }
            }
        }
    }
    if let Some(Some(v)) = t.value(GammaKA, k) {
        if t.gamma.value.is_some_and(|gamma| v < gamma) {
            rec.flag(Some(GammaKA), "below the domination number");
        }
    }
    for (small, big) in [(AK, GammaKA), (GammaKA, GammaKCA)] {
        if let (Some(a), Some(b)) = (t.value(small, k), t.value(big, k)) {
            match (a, b) {
                (None, Some(_)) => rec.flag(Some(big), format!("{big} exists but {small} does not")),
                (Some(a), Some(b)) if a > b => rec.flag(Some(big), format!("{small} = {a} > {big} = {b}")),
                _ => {}
            }
        }
    }
    if let Some(result) = t.solved.get(&(GammaKA, k)) {
        if let Some(s) = result.witness {
            let Some(w) = smallest_dominating_subset(g, &s) else {
                rec.flag(Some(GammaKA), "witness contains no dominating subset");
                return;
            };
            let top = s.len();
            for r in 0..=(top - w.len()) {
                let lowered = k - 2 * r as i64;
                match t.value(GammaKA, lowered) {
                    Some(Some(v)) if v + r <= top => {}
                    Some(Some(v)) => rec.flag(Some(GammaKA), format!("gamma_{lowered}^a + {r} = {} > {top}", v + r)),
                    Some(None) => rec.flag(Some(GammaKA), format!("no global alliance at k={lowered}")),
                    None => {}
                }
            }
        }
    }
}

fn check_constructions(cg: &CorpusGraph, t: &Table, k: i64, rec: &mut CertificationRecord) {
    let g = t.g;
    let n = g.n() as i64;
    let dn = g.min_degree() as i64;
    if k < dn {
        match alliance::construct_upper_witness(g, k) {
            Ok(w) => {
                let expected = n - (dn - k).div_euclid(2);
                if w.len() as i64 != expected {
                    rec.flag(
                        Some(Parameter::GammaKA),
                        format!("upper witness has size {} not {expected}", w.len()),
                    );
                }
            }
            Err(e) => rec.flag(Some(Parameter::GammaKA), format!("upper witness: {e}")),
        }
    }
    if let Family::Complete { n } = cg.family {
        if let Ok(expected) = bounds::kn_closed_form(n, k) {
            if let Some(v) = t.value(Parameter::GammaKA, k) {
                if v.map(|v| v as i64) != Some(expected) {
                    rec.flag(
                        Some(Parameter::GammaKA),
                        format!("complete graph value {v:?} != {expected}"),
                    );
                }
            }
        }
    }
}

fn check_soundness(p: Parameter, result: &SolveResult, reports: &[BoundReport], rec: &mut CertificationRecord) {
    for r in reports.iter().filter(|r| r.applicable) {
        let Some(bound) = r.value else { continue };
        match (result.value, r.kind) {
            (Some(v), BoundKind::Lower) if bound > v as i64 => {
                rec.flag(Some(p), format!("{} = {bound} > exact {v}", r.name))
            }
            (Some(v), BoundKind::Upper) if bound < v as i64 => {
                rec.flag(Some(p), format!("{} = {bound} < exact {v}", r.name))
            }
            (None, BoundKind::Upper) => rec.flag(Some(p), format!("{} applies but no alliance exists", r.name)),
            _ => {}
        }
    }
}

fn check_graph_wide(
    cg: &CorpusGraph,
    t: &Table,
    gamma_t: &SolveResult,
    spec: &CorpusSpec,
    opts: SolveOptions,
    rec: &mut CertificationRecord,
) {
    use Parameter::*;
    let g = t.g;
    let n = g.n();
    let d1 = t.d1;
    if let Some(v) = t.solved.get(&(GammaKA, -d1)) {
        if v.value != t.gamma.value {
            rec.flag(
                None,
                format!("gamma_(-d_1)^a = {:?} != gamma = {:?}", v.value, t.gamma.value),
            );
        }
    }
    if g.is_connected() && n >= 3 && gamma_t.value.is_none_or(|v| v > 2 * n / 3) {
        rec.flag(None, format!("gamma_t = {:?} exceeds 2n/3", gamma_t.value));
    }
    if g.is_regular() && d1 >= 1 {
        for k in [d1 - 1, d1] {
            if let Some(v) = t.value(GammaKA, k) {
                if v != Some(n) {
                    rec.flag(Some(GammaKA), format!("regular graph: gamma_{k}^a = {v:?} != n"));
                }
            }
        }
    } else if !g.is_regular() {
        if let Some(Some(v)) = t.value(GammaKA, d1) {
            rec.flag(
                Some(GammaKA),
                format!("nonregular graph has a global d_1-alliance of size {v}"),
            );
        }
    }
    if g.is_cubic() {
        let gamma = t.gamma.value.unwrap_or(0);
        if let Some(v) = t.value(GammaKA, -1) {
            if v != gamma_t.value {
                rec.flag(
                    None,
                    format!("cubic: gamma_-1^a = {v:?} != gamma_t = {:?}", gamma_t.value),
                );
            }
            if v.is_none_or(|v| v > 2 * gamma) {
                rec.flag(None, format!("cubic: gamma_-1^a = {v:?} > 2 gamma"));
            }
        }
        if let Some(w) = t.gamma.witness {
            match alliance::cubic_augment_dominating(g, &w) {
                Ok(out) if out.len() <= 2 * w.len() => {}
                Ok(out) => rec.flag(None, format!("cubic augmentation grew to {}", out.len())),
                Err(e) => rec.flag(None, format!("cubic augmentation: {e}")),
            }
        }
    }
    if g.m() >= 1 && g.m() <= spec.line_graph_max_edges {
        check_line_graph(cg, opts, rec);
    }
}

fn check_line_graph(cg: &CorpusGraph, opts: SolveOptions, rec: &mut CertificationRecord) {
    let g = &cg.graph;
    let (line, map) = match g.line_graph() {
        Ok(x) => x,
        Err(e) => return rec.errors.push(format!("line graph: {e}")),
    };
    for (e, &(u, v)) in map.iter().enumerate() {
        if line.degree(e) != g.degree(u) + g.degree(v) - 2 {
            rec.flag(None, format!("line graph degree of edge {u}-{v} is {}", line.degree(e)));
        }
    }
    let connected = g.is_connected();
    if connected {
        if let (Ok(d), Ok(dl)) = (g.diameter(), line.diameter()) {
            if dl + 1 < d {
                rec.flag(None, format!("line graph diameter {dl} < D - 1 = {}", d - 1));
            }
        }
    }
    let dl = line.max_degree() as i64;
    for k in -dl..=dl {
        let mut targets = vec![(Parameter::GammaKA, Target::GammaKA)];
        if connected {
            targets.push((Parameter::GammaKCA, Target::GammaKCA));
        }
        for (p, target) in targets {
            let result = match solver::solve(&line, p, Some(k), opts) {
                Ok(r) => r,
                Err(e) => return rec.errors.push(format!("line graph {p} k={k}: {e}")),
            };
            let reports = bounds::evaluate_line_graph(g, k, target);
            for r in reports.iter().filter(|r| r.applicable) {
                if let (Some(b), Some(v)) = (r.value, result.value) {
                    if b > v as i64 {
                        rec.flag(None, format!("line graph k={k}: {} = {b} > {p} = {v}", r.name));
                    }
                }
            }
        }
    }
}

/// Lexicographically least among the smallest subsets of `s` that
/// dominate `g`.
pub fn smallest_dominating_subset(g: &Graph, s: &VertexSet) -> Option<VertexSet> {
    let mut best: Option<(usize, Vec<usize>, u64)> = None;
    let mut sub = s.mask();
    loop {
        let cand = VertexSet::from_mask(g, sub).expect("submask of a valid set");
        if sub != 0 && alliance::is_dominating(g, &cand) {
            let key = (cand.len(), cand.to_vec());
            if best
                .as_ref()
                .is_none_or(|(len, list, _)| (key.0, &key.1) < (*len, list))
            {
                best = Some((key.0, key.1, sub));
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & s.mask();
    }
    best.map(|(_, _, mask)| VertexSet::from_mask(g, mask).expect("valid mask"))
}

fn forest_identity_samples(spec: &CorpusSpec, graphs: &[CorpusGraph]) -> Vec<String> {
    let trees: Vec<&CorpusGraph> = graphs.iter().filter(|cg| cg.graph.is_tree()).collect();
    if trees.is_empty() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::new();
    for i in 0..spec.forest_pairs {
        let cg = trees[i % trees.len()];
        let g = &cg.graph;
        let mask = rng.gen::<u64>() & VertexSet::full(g).mask();
        let s = VertexSet::from_mask(g, mask).expect("masked to range");
        let degrees = alliance::boundary_degrees(g, &s);
        let interior: usize = s.iter().map(|v| degrees[v].inside).sum();
        let c = g.connected_components_of(&s);
        if interior != 2 * (s.len() - c) {
            out.push(format!("{}: forest identity fails for {:?}", cg.id, s));
        }
    }
    out
}

fn shrink_samples(spec: &CorpusSpec, graphs: &[CorpusGraph], witnesses: &[(usize, i64, VertexSet)]) -> Vec<String> {
    if witnesses.is_empty() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ 0x5eed);
    let mut out = Vec::new();
    for _ in 0..spec.shrink_samples {
        let (idx, k, s) = witnesses[rng.gen_range(0..witnesses.len())];
        let cg = &graphs[idx];
        let g = &cg.graph;
        let Some(w) = smallest_dominating_subset(g, &s) else {
            out.push(format!("{}: no dominating subset of {:?}", cg.id, s));
            continue;
        };
        for r in 0..=(s.len() - w.len()) {
            match alliance::shrink_to_lower_k(g, &s, k, &w, r) {
                Ok(y) if y.len() == s.len() - r && w.is_subset(&y) => {}
                Ok(y) => out.push(format!("{}: shrink k={k} r={r} gave {:?}", cg.id, y)),
                Err(e) => out.push(format!("{}: shrink k={k} r={r}: {e}", cg.id)),
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_spec_is_empty() {
        let spec = CorpusSpec::from_toml("").unwrap();
        let out = run_corpus(&spec, 1).unwrap();
        assert!(out.records.is_empty() && out.rows.is_empty());
        assert_eq!(out.violation_count(), 0);
    }

    #[test]
    fn default_spec_counts() {
        let spec = CorpusSpec::default_corpus();
        let graphs = spec.expand().unwrap();
        assert_eq!(graphs.len(), 18 + 50 + 30 + 50);
        assert!(graphs.iter().all(|cg| cg.graph.n() <= 14));
        let cubic = graphs
            .iter()
            .filter(|cg| matches!(cg.family, Family::RandomCubic { .. }));
        assert!(cubic.clone().all(|cg| cg.graph.is_cubic() && cg.graph.is_connected()));
    }

    #[test]
    fn unknown_keys_and_bad_targets_rejected() {
        assert!(CorpusSpec::from_toml("bogus = 1").is_err());
        assert!(CorpusSpec::from_toml("targets = [\"gamma\"]").is_err());
    }

    #[test]
    fn content_hash_ignores_edge_order() {
        let a = Graph::new(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        let b = Graph::new(4, [(3, 2), (1, 2), (1, 0)]).unwrap();
        assert_eq!(content_hash(&a), content_hash(&b));
    }

    #[test]
    fn small_corpus_has_no_violations_and_stable_csv() {
        let spec = CorpusSpec::from_toml(
            r#"
            forest_pairs = 50
            shrink_samples = 20
            [[graph]]
            family = "hypercube"
            d = 3
            [[graph]]
            family = "star"
            n = 5
            [[batch]]
            model = "random_graph"
            count = 4
            n_min = 5
            n_max = 8
            seed = 9
            connected = true
            "#,
        )
        .unwrap();
        let one = run_corpus(&spec, 1).unwrap();
        let four = run_corpus(&spec, 4).unwrap();
        let problems: Vec<String> = one.violations().collect();
        assert!(problems.is_empty(), "{problems:#?}");
        let (mut a, mut b) = (Vec::new(), Vec::new());
        one.write_csv(&mut a).unwrap();
        four.write_csv(&mut b).unwrap();
        assert_eq!(a, b);
        let text = String::from_utf8(a).unwrap();
        assert!(text.starts_with("graph_id,n,m,target,k,status,value,best_lower,best_upper,violation"));
    }

    #[test]
    fn smallest_dominating_subset_of_cube() {
        let q3 = crate::graph::generators::hypercube(3).unwrap();
        let w = smallest_dominating_subset(&q3, &VertexSet::full(&q3)).unwrap();
        assert_eq!(w.to_vec(), vec![0, 7]);
    }
}
