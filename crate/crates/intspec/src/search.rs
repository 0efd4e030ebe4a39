//! Search for labelings maximizing the number of interval vertices.
//!
//! Exhaustive mode enumerates labelings by assigning labels in ascending
//! order (the branching choice is which edge receives the next label), so a
//! vertex's interval status is settled the moment its last incident edge is
//! labeled. Anneal mode runs seeded simulated annealing over label
//! transpositions. Every witness either mode returns is re-audited against
//! the path-forest and bound checks; an audit failure is reported as a hard
//! error, never swallowed.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{check_proposition, check_theorem, corollary_bound, BoundError, BoundReport};
use crate::generate::{GenerateError, GeneratorSpec};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::labeling::{EdgeLabeling, LabelingError};

/// Largest edge count exhaustive mode accepts without `force_large`.
pub const EXHAUSTIVE_EDGE_LIMIT: usize = 12;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum SearchError {
    #[error(
        "exhaustive search over {m}! labelings refused (limit {limit} edges); force to override"
    )]
    TooManyEdges { m: usize, limit: usize },
    #[error("vertex {vertex} is isolated, so no labeling gives it an interval status")]
    IsolatedVertex { vertex: usize },
    #[error("annealing needs at least 2 edges to transpose, got {m}")]
    TooFewEdges { m: usize },
    #[error("annealing needs a nonzero move budget")]
    ZeroMoveBudget,
    #[error("witness violates the path-forest property on component {component:?}")]
    PropositionViolated { component: VertexSet },
    #[error("witness violates the bound audit: {report:?}")]
    CounterexampleFound { report: Box<BoundReport> },
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Anneal,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub seed: u64,
    /// Anneal iteration budget; must be nonzero in anneal mode.
    pub max_moves: u64,
    /// Expand only one labeling per reflection pair in exhaustive mode.
    pub symmetry_reduction: bool,
    /// Cut branches that already froze too many non-interval vertices.
    /// Disabling never changes best_size, only the work done.
    pub pruning: bool,
    /// Number of concurrent prefix shards in exhaustive mode.
    pub parallel_width: usize,
    /// Anneal starting temperature, in units of interval-vertex count.
    pub initial_temperature: f64,
    /// Geometric cooling multiplier applied after every move.
    pub cooling_factor: f64,
    /// Allow exhaustive mode past EXHAUSTIVE_EDGE_LIMIT edges.
    pub force_large: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            mode: SearchMode::Exhaustive,
            seed: 0,
            max_moves: 10_000,
            symmetry_reduction: true,
            pruning: true,
            parallel_width: 1,
            initial_temperature: 1.0,
            cooling_factor: 0.999,
            force_large: false,
        }
    }
}

/// Result of one search run.
#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    /// Largest |V_int| found.
    pub best_size: usize,
    /// A labeling attaining best_size.
    #[serde(rename = "witness_labels")]
    pub witness: EdgeLabeling,
    /// Complete labelings evaluated (exhaustive) or moves attempted (anneal).
    pub explored: u64,
    /// Whether best_size is the proven maximum over all labelings.
    pub exhaustive: bool,
    /// A-priori bound on |V_int| over all labelings, when the host is
    /// regular with degree at least 2.
    pub bound: Option<usize>,
}

pub fn search_max(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    match cfg.mode {
        SearchMode::Exhaustive => exhaustive_max(g, cfg),
        SearchMode::Anneal => anneal_max(g, cfg),
    }
}

/// The bound applicable to every labeling of `g`, when one exists.
///
/// Any labeling with interval vertices induces at least one component, and
/// the bound only tightens with more components, so the k=1 value covers
/// every labeling.
fn apriori_bound(g: &Graph) -> Option<usize> {
    match g.regularity() {
        Some(r) if r >= 2 => corollary_bound(r, g.vertex_count()).ok(),
        _ => None,
    }
}

fn require_no_isolated_vertex(g: &Graph) -> Result<(), SearchError> {
    if g.min_degree()? == 0 {
        let vertex = (0..g.vertex_count()).find(|&v| g.degree(v) == 0).unwrap();
        return Err(SearchError::IsolatedVertex { vertex });
    }
    Ok(())
}

/// Audits a finished witness. A failure here means the search surfaced a
/// counterexample to the theory and must not be reported as a mere result.
fn audit_witness(g: &Graph, witness: &EdgeLabeling, best_size: usize) -> Result<(), SearchError> {
    let recount = witness.interval_vertices(g)?.len();
    assert_eq!(recount, best_size, "search bookkeeping drifted from a direct recount");
    if g.min_degree()? >= 2 {
        if let crate::bounds::PropositionVerdict::Violated { component } =
            check_proposition(g, witness)?
        {
            return Err(SearchError::PropositionViolated { component });
        }
    }
    if matches!(g.regularity(), Some(r) if r >= 2) {
        let report = check_theorem(g, witness)?;
        if !report.pass() {
            return Err(SearchError::CounterexampleFound { report: Box::new(report) });
        }
    }
    Ok(())
}

/// Per-vertex incremental state for ascending-label assignment.
///
/// Because labels are assigned in increasing order, each newly labeled edge
/// carries the largest label either endpoint has seen, so min/max updates
/// are O(1) and undo only needs the displaced values.
struct Frontier<'g> {
    g: &'g Graph,
    labeled: Vec<usize>,
    min_label: Vec<usize>,
    max_label: Vec<usize>,
    /// Vertices with all incident edges labeled and a non-interval spectrum.
    frozen_bad: usize,
}

struct FrontierUndo {
    mins: [usize; 2],
    maxs: [usize; 2],
    frozen_bad: usize,
}

impl<'g> Frontier<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        Frontier {
            g,
            labeled: vec![0; n],
            min_label: vec![0; n],
            max_label: vec![0; n],
            frozen_bad: 0,
        }
    }

    fn assign(&mut self, edge: usize, label: usize) -> FrontierUndo {
        let (u, v) = self.g.endpoints(edge);
        let undo = FrontierUndo {
            mins: [self.min_label[u], self.min_label[v]],
            maxs: [self.max_label[u], self.max_label[v]],
            frozen_bad: self.frozen_bad,
        };
        for x in [u, v] {
            self.labeled[x] += 1;
            if self.labeled[x] == 1 {
                self.min_label[x] = label;
            }
            self.max_label[x] = label;
            let degree = self.g.degree(x);
            if self.labeled[x] == degree && self.max_label[x] - self.min_label[x] + 1 != degree {
                self.frozen_bad += 1;
            }
        }
        undo
    }

    fn unassign(&mut self, edge: usize, undo: FrontierUndo) {
        let (u, v) = self.g.endpoints(edge);
        for (i, x) in [u, v].into_iter().enumerate() {
            self.labeled[x] -= 1;
            self.min_label[x] = undo.mins[i];
            self.max_label[x] = undo.maxs[i];
        }
        self.frozen_bad = undo.frozen_bad;
    }
}

/// Shared state across exhaustive shards. The incumbent only grows, so a
/// stale read can only under-prune, never cut a branch that still matters.
struct SharedSearch<'g> {
    g: &'g Graph,
    n: usize,
    m: usize,
    symmetry: bool,
    pruning: bool,
    /// Stop as soon as the incumbent reaches this value; it is an upper
    /// bound over all labelings, so nothing larger exists.
    stop_at: Option<usize>,
    incumbent: AtomicUsize,
    done: AtomicBool,
    explored: AtomicU64,
}

struct ShardBest {
    size: usize,
    labels: Vec<usize>,
}

struct ShardWorker<'g, 's> {
    shared: &'s SharedSearch<'g>,
    frontier: Frontier<'g>,
    /// labels_of[e] = label on edge e, 0 while unassigned.
    labels_of: Vec<usize>,
    /// Edge that received label 1; reflection canon: it must be a lower
    /// index than the edge receiving label m.
    first_edge: usize,
    /// Unlabeled edges with index above first_edge. When it hits zero the
    /// top label can only land below first_edge, i.e. the reflection
    /// partner of this branch was already explored.
    high_unlabeled: usize,
    best: Option<ShardBest>,
}

impl<'g, 's> ShardWorker<'g, 's> {
    fn new(shared: &'s SharedSearch<'g>) -> Self {
        ShardWorker {
            shared,
            frontier: Frontier::new(shared.g),
            labels_of: vec![0; shared.m],
            first_edge: 0,
            high_unlabeled: 0,
            best: None,
        }
    }

    /// Runs the subtree under `prefix`, where prefix[t-1] is the edge that
    /// receives label t. Returns early if the prefix itself is cut.
    fn run(&mut self, prefix: &[usize]) {
        let mut applied = Vec::with_capacity(prefix.len());
        let mut viable = true;
        for (i, &edge) in prefix.iter().enumerate() {
            match self.try_assign(edge, i + 1) {
                Some(undo) => applied.push((edge, undo)),
                None => {
                    viable = false;
                    break;
                }
            }
        }
        if viable {
            self.descend(prefix.len() + 1);
        }
        for (edge, undo) in applied.into_iter().rev() {
            self.undo_assign(edge, undo);
        }
    }

    /// Assigns `label` to `edge` unless a cut applies. The symmetry cut
    /// skips branches whose reflection was or will be visited; the frozen
    /// cut needs every leaf below to stay at or under the incumbent.
    fn try_assign(&mut self, edge: usize, label: usize) -> Option<FrontierUndo> {
        let shared = self.shared;
        if label == 1 {
            self.first_edge = edge;
            self.high_unlabeled = shared.m - edge - 1;
        } else {
            if shared.symmetry && label == shared.m && edge < self.first_edge {
                return None;
            }
            if edge > self.first_edge {
                self.high_unlabeled -= 1;
            }
        }
        if shared.symmetry && shared.m >= 2 && label < shared.m && self.high_unlabeled == 0 {
            if edge > self.first_edge {
                self.high_unlabeled += 1;
            }
            return None;
        }
        let undo = self.frontier.assign(edge, label);
        if shared.pruning && label < shared.m {
            let incumbent = shared.incumbent.load(Ordering::Relaxed);
            if self.frontier.frozen_bad + incumbent + 1 > shared.n {
                self.undo_assign(edge, undo);
                return None;
            }
        }
        self.labels_of[edge] = label;
        Some(undo)
    }

    fn undo_assign(&mut self, edge: usize, undo: FrontierUndo) {
        self.labels_of[edge] = 0;
        if edge > self.first_edge {
            self.high_unlabeled += 1;
        }
        self.frontier.unassign(edge, undo);
    }

    fn descend(&mut self, label: usize) {
        if self.shared.done.load(Ordering::Relaxed) {
            return;
        }
        if label > self.shared.m {
            self.record_leaf();
            return;
        }
        for edge in 0..self.shared.m {
            if self.labels_of[edge] != 0 {
                continue;
            }
            if let Some(undo) = self.try_assign(edge, label) {
                self.descend(label + 1);
                self.undo_assign(edge, undo);
            }
        }
    }

    fn record_leaf(&mut self) {
        let shared = self.shared;
        shared.explored.fetch_add(1, Ordering::Relaxed);
        let size = shared.n - self.frontier.frozen_bad;
        let improves = match &self.best {
            Some(best) => size > best.size,
            None => true,
        };
        if improves {
            self.best = Some(ShardBest { size, labels: self.labels_of.clone() });
            shared.incumbent.fetch_max(size, Ordering::Relaxed);
            if shared.stop_at == Some(size) {
                shared.done.store(true, Ordering::Relaxed);
            }
        }
    }
}

/// All ways to assign labels 1..=depth to distinct edges, in lexicographic
/// order of the chosen edge sequence.
fn prefixes_at_depth(m: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(depth);
    fn rec(m: usize, depth: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == depth {
            out.push(current.clone());
            return;
        }
        for edge in 0..m {
            if !current.contains(&edge) {
                current.push(edge);
                rec(m, depth, current, out);
                current.pop();
            }
        }
    }
    rec(m, depth, &mut current, &mut out);
    out
}

/// Exact maximum of |V_int| over every labeling of `g`.
pub fn exhaustive_max(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    require_no_isolated_vertex(g)?;
    let m = g.edge_count();
    if m > EXHAUSTIVE_EDGE_LIMIT && !cfg.force_large {
        return Err(SearchError::TooManyEdges { m, limit: EXHAUSTIVE_EDGE_LIMIT });
    }

    let shared = SharedSearch {
        g,
        n: g.vertex_count(),
        m,
        symmetry: cfg.symmetry_reduction,
        pruning: cfg.pruning,
        stop_at: if cfg.pruning { apriori_bound(g) } else { None },
        incumbent: AtomicUsize::new(0),
        done: AtomicBool::new(false),
        explored: AtomicU64::new(0),
    };

    let width = cfg.parallel_width.max(1);
    let shard_bests: Vec<Option<ShardBest>>;
    if width == 1 {
        let mut worker = ShardWorker::new(&shared);
        worker.run(&[]);
        shard_bests = vec![worker.best];
    } else {
        let mut depth = 0;
        let mut count = 1;
        while count < width && depth < m {
            count *= m - depth;
            depth += 1;
        }
        let prefixes = prefixes_at_depth(m, depth);
        shard_bests = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..width)
                .map(|shard| {
                    let prefixes = &prefixes;
                    let shared = &shared;
                    scope.spawn(move || {
                        let mut worker = ShardWorker::new(shared);
                        for prefix in prefixes.iter().skip(shard).step_by(width) {
                            if shared.done.load(Ordering::Relaxed) {
                                break;
                            }
                            worker.run(prefix);
                        }
                        worker.best
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("search shard panicked")).collect()
        });
    }

    let mut best: Option<ShardBest> = None;
    for candidate in shard_bests.into_iter().flatten() {
        let improves = best.as_ref().is_none_or(|cur| candidate.size > cur.size);
        if improves {
            best = Some(candidate);
        }
    }
    let best = best.expect("at least one complete labeling is always evaluated");

    let witness = EdgeLabeling::new(g, best.labels)?;
    audit_witness(g, &witness, best.size)?;
    Ok(SearchOutcome {
        best_size: best.size,
        witness,
        explored: shared.explored.load(Ordering::Relaxed),
        exhaustive: true,
        bound: apriori_bound(g),
    })
}

/// Number of interval vertices among `vertices` under `labels`.
fn interval_count_at(g: &Graph, labels: &[usize], vertices: &[usize]) -> usize {
    vertices
        .iter()
        .filter(|&&v| {
            let mut min = usize::MAX;
            let mut max = 0;
            for &e in g.incident_edges(v) {
                min = min.min(labels[e]);
                max = max.max(labels[e]);
            }
            max - min + 1 == g.degree(v)
        })
        .count()
}

fn interval_count(g: &Graph, labels: &[usize]) -> usize {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    interval_count_at(g, labels, &all)
}

/// Seeded simulated annealing over label transpositions. Reports the best
/// state ever visited, not the final one. Deterministic per (seed, budget).
pub fn anneal_max(g: &Graph, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    require_no_isolated_vertex(g)?;
    let m = g.edge_count();
    if m < 2 {
        return Err(SearchError::TooFewEdges { m });
    }
    if cfg.max_moves == 0 {
        return Err(SearchError::ZeroMoveBudget);
    }

    let bound = apriori_bound(g);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut labels = EdgeLabeling::random(g, &mut rng).labels().to_vec();
    let mut size = interval_count(g, &labels);
    let mut best = ShardBest { size, labels: labels.clone() };
    let mut temperature = cfg.initial_temperature;
    let mut explored = 0;

    while explored < cfg.max_moves && Some(best.size) != bound {
        explored += 1;
        let a = rng.random_range(0..m);
        let b = rng.random_range(0..m - 1);
        let b = if b >= a { b + 1 } else { b };

        let (au, av) = g.endpoints(a);
        let (bu, bv) = g.endpoints(b);
        let mut touched = vec![au, av, bu, bv];
        touched.sort_unstable();
        touched.dedup();

        let before = interval_count_at(g, &labels, &touched);
        labels.swap(a, b);
        let after = interval_count_at(g, &labels, &touched);
        let delta = after as isize - before as isize;

        let accept = delta >= 0 || {
            let p = ((delta as f64) / temperature).exp();
            rng.random::<f64>() < p
        };
        if accept {
            size = (size as isize + delta) as usize;
            if size > best.size {
                best = ShardBest { size, labels: labels.clone() };
            }
        } else {
            labels.swap(a, b);
        }
        temperature *= cfg.cooling_factor;
    }
    debug_assert_eq!(size, interval_count(g, &labels));

    let witness = EdgeLabeling::new(g, best.labels)?;
    audit_witness(g, &witness, best.size)?;
    Ok(SearchOutcome {
        best_size: best.size,
        witness,
        explored,
        exhaustive: false,
        bound,
    })
}

/// One random-labeling trial that failed a check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzViolation {
    pub trial: u64,
    pub labels: Vec<usize>,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub component: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<BoundReport>,
}

/// Outcome of a fuzz run: how many trials ran, how many passed every
/// applicable check, and how much of the audit was actually exercised.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub trials: u64,
    pub passes: u64,
    /// Trials whose labeling produced at least one interval vertex.
    pub nonempty_v_int: u64,
    /// Induced path components whose surrounding edge count was audited.
    pub components_audited: u64,
    pub violations: Vec<FuzzViolation>,
}

/// Draws `trials` random labelings from one seeded stream and audits each
/// against the path-forest check (when the minimum degree allows it) and
/// the bound audit (when the host is regular of degree at least 2).
pub fn fuzz_labelings(g: &Graph, trials: u64, seed: u64) -> Result<FuzzReport, SearchError> {
    require_no_isolated_vertex(g)?;
    let check_forest = g.min_degree()? >= 2;
    let check_bound = matches!(g.regularity(), Some(r) if r >= 2);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = FuzzReport {
        trials,
        passes: 0,
        nonempty_v_int: 0,
        components_audited: 0,
        violations: Vec::new(),
    };
    for trial in 0..trials {
        let phi = EdgeLabeling::random(g, &mut rng);
        let mut failed = false;
        if !phi.interval_vertices(g)?.is_empty() {
            report.nonempty_v_int += 1;
        }
        if check_forest {
            if let crate::bounds::PropositionVerdict::Violated { component } =
                check_proposition(g, &phi)?
            {
                failed = true;
                report.violations.push(FuzzViolation {
                    trial,
                    labels: phi.labels().to_vec(),
                    kind: "path-forest",
                    component: Some(component),
                    report: None,
                });
            }
        }
        if check_bound {
            let audit = check_theorem(g, &phi)?;
            report.components_audited += audit.surr_edge_counts.len() as u64;
            if !audit.pass() {
                failed = true;
                report.violations.push(FuzzViolation {
                    trial,
                    labels: phi.labels().to_vec(),
                    kind: "bound",
                    component: None,
                    report: Some(audit),
                });
            }
        }
        if !failed {
            report.passes += 1;
        }
    }
    Ok(report)
}

/// One sweep row. Rows with a failing generator or search carry the error
/// text; regular hosts additionally carry the full bound audit of the
/// witness.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub params: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<SearchOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// True when the row's error is a failed audit rather than a bad input
    /// or an over-budget search.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub counterexample: bool,
}

/// Runs the configured search over each family member. Per-member failures
/// land in their row; they never abort the remaining rows.
pub fn sweep(specs: &[GeneratorSpec], cfg: &SearchConfig) -> Vec<SweepRow> {
    specs
        .iter()
        .map(|spec| {
            let params = spec.to_string();
            match sweep_one(spec, cfg) {
                Ok((outcome, report)) => SweepRow {
                    params,
                    outcome: Some(outcome),
                    report,
                    error: None,
                    counterexample: false,
                },
                Err(err) => SweepRow {
                    params,
                    outcome: None,
                    report: None,
                    counterexample: matches!(
                        err,
                        SearchError::PropositionViolated { .. }
                            | SearchError::CounterexampleFound { .. }
                    ),
                    error: Some(err.to_string()),
                },
            }
        })
        .collect()
}

fn sweep_one(
    spec: &GeneratorSpec,
    cfg: &SearchConfig,
) -> Result<(SearchOutcome, Option<BoundReport>), SearchError> {
    let g = spec.generate()?;
    let outcome = search_max(&g, cfg)?;
    let report = match g.regularity() {
        Some(r) if r >= 2 => Some(check_theorem(&g, &outcome.witness)?),
        _ => None,
    };
    Ok((outcome, report))
}
