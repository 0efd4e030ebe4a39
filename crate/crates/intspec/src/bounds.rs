//! Surroundings of induced subgraphs, the path-forest verdict for interval
//! vertex sets, and the floor bound on |V_int| for regular graphs.
//!
//! `check_theorem` re-derives every counting step behind the bound at
//! runtime: per-component surrounding edge counts, pairwise disjointness of
//! the surrounding edge sets, and the total edge budget. A report with any
//! flag false is a counterexample to the underlying theory and is treated as
//! such by callers.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::labeling::{EdgeLabeling, IntervalVertexSet, LabelingError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("the bound requires degree r >= 2, got r = {r}")]
    DegreeBelowTwo { r: usize },
    #[error("the bound requires at least one vertex")]
    EmptyHost,
    #[error("{k} components cannot fit in a {r}-regular graph on {n} vertices")]
    TooManyComponents { r: usize, n: usize, k: usize },
    #[error("surrounding of an empty core is undefined")]
    EmptyCore,
    #[error("graph is not regular")]
    NotRegular,
    #[error("minimum degree {found} is below the required {required}")]
    MinDegreeTooSmall { required: usize, found: usize },
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The subgraph of `host` on the distance-<=1 neighborhood of `core`,
/// with the edges inside the core plus all edges joining outside
/// neighbors to the core. Edge indices refer to the host.
#[derive(Debug, Clone)]
pub struct SurrSubgraph<'g> {
    host: &'g Graph,
    core: VertexSet,
    vertices: VertexSet,
    edge_indices: Vec<usize>,
}

impl<'g> SurrSubgraph<'g> {
    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn core(&self) -> &VertexSet {
        &self.core
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn edge_count(&self) -> usize {
        self.edge_indices.len()
    }
}

/// Builds the surrounding of `g`'s induced subgraph on `core`.
///
/// The induced subgraph is implicit: its edges are exactly the edges of `g`
/// inside `core`, so the surrounding's edge set is every edge of `g` with at
/// least one endpoint in `core`.
pub fn surr<'g>(g: &'g Graph, core: &VertexSet) -> Result<SurrSubgraph<'g>, BoundError> {
    if core.is_empty() {
        return Err(BoundError::EmptyCore);
    }
    if let Some(&max) = core.as_slice().last() {
        if max >= g.vertex_count() {
            return Err(GraphError::VertexOutOfRange { vertex: max, n: g.vertex_count() }.into());
        }
    }
    let mut vertices: Vec<usize> = core.iter().collect();
    for v in core.iter() {
        vertices.extend(g.neighbors(v));
    }
    let edge_indices = (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            core.contains(u) || core.contains(v)
        })
        .collect();
    Ok(SurrSubgraph {
        host: g,
        core: core.clone(),
        vertices: VertexSet::new(vertices),
        edge_indices,
    })
}

/// The bound |V_int| <= floor((r*n - 2k) / (2(r-1))) for an r-regular graph
/// on n vertices whose interval vertices induce k path components.
///
/// Integer arithmetic only; the numerator is non-negative whenever k is a
/// component count of an induced subgraph, and out-of-range k is rejected.
pub fn theorem_bound(r: usize, n: usize, k: usize) -> Result<usize, BoundError> {
    if r < 2 {
        return Err(BoundError::DegreeBelowTwo { r });
    }
    if n == 0 {
        return Err(BoundError::EmptyHost);
    }
    let numerator = (r * n)
        .checked_sub(2 * k)
        .ok_or(BoundError::TooManyComponents { r, n, k })?;
    Ok(numerator / (2 * (r - 1)))
}

/// The k = 1 specialization floor((r*n - 2) / (2(r-1))), an upper bound on
/// |V_int| over all labelings whenever it is nonempty.
pub fn corollary_bound(r: usize, n: usize) -> Result<usize, BoundError> {
    theorem_bound(r, n, 1)
}

/// Whether the interval vertices induce a path forest, with the offending
/// component (in host coordinates) when they do not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropositionVerdict {
    Holds,
    Violated { component: VertexSet },
}

impl PropositionVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, PropositionVerdict::Holds)
    }
}

/// Checks that the subgraph induced on the interval vertices of `phi` is a
/// path forest. Requires minimum degree 2; the verdict is undefined below
/// that, so sparser graphs are rejected.
pub fn check_proposition(g: &Graph, phi: &EdgeLabeling) -> Result<PropositionVerdict, BoundError> {
    let delta = g.min_degree()?;
    if delta < 2 {
        return Err(BoundError::MinDegreeTooSmall { required: 2, found: delta });
    }
    let v_int = phi.interval_vertices(g)?;
    Ok(core_verdict(g, v_int.as_vertex_set()))
}

/// Path-forest verdict for an arbitrary core, independent of any labeling.
fn core_verdict(g: &Graph, core: &VertexSet) -> PropositionVerdict {
    if core.is_empty() {
        return PropositionVerdict::Holds;
    }
    let induced = g.induced(core).expect("core vertices validated by caller");
    for block in induced.graph().components().iter() {
        if !is_path_component(induced.graph(), block) {
            return PropositionVerdict::Violated { component: induced.to_parent_set(block) };
        }
    }
    PropositionVerdict::Holds
}

/// True iff `block`, a connected component of `g`, is a simple path:
/// every degree at most 2 and exactly |block| - 1 spanned edges.
fn is_path_component(g: &Graph, block: &VertexSet) -> bool {
    if block.iter().any(|v| g.degree(v) > 2) {
        return false;
    }
    let spanned = (0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            block.contains(u) && block.contains(v)
        })
        .count();
    spanned == block.len() - 1
}

/// One audited component of the induced subgraph on the interval vertices:
/// its size, the measured surrounding edge count, and the count the theory
/// predicts, (r-1)*vertices + 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurrEdgeCount {
    pub vertices: usize,
    pub edges: usize,
    pub expected: usize,
}

/// Full audit of one (graph, labeling) pair against the bound and the
/// counting steps behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub r: usize,
    pub n: usize,
    pub v_int: IntervalVertexSet,
    pub v_int_size: usize,
    pub k: usize,
    pub bound: usize,
    pub proposition_holds: bool,
    pub theorem_holds: bool,
    pub surr_edge_counts: Vec<SurrEdgeCount>,
    pub disjointness_ok: bool,
    pub edge_budget_ok: bool,
}

impl BoundReport {
    /// True iff every audited fact checks out. False anywhere means a
    /// counterexample to the theory this crate implements.
    pub fn pass(&self) -> bool {
        self.proposition_holds
            && self.theorem_holds
            && self.disjointness_ok
            && self.edge_budget_ok
            && self.surr_edge_counts.iter().all(|c| c.edges == c.expected)
    }
}

/// Evaluates the bound and audits the counting steps behind it for one
/// labeling of a regular graph with degree at least 2.
pub fn check_theorem(g: &Graph, phi: &EdgeLabeling) -> Result<BoundReport, BoundError> {
    let r = g.regularity().ok_or(BoundError::NotRegular)?;
    if r < 2 {
        return Err(BoundError::DegreeBelowTwo { r });
    }
    let n = g.vertex_count();
    debug_assert_eq!(2 * g.edge_count(), r * n);

    let v_int = phi.interval_vertices(g)?;
    let proposition_holds = core_verdict(g, v_int.as_vertex_set()).holds();

    let induced = g.induced(v_int.as_vertex_set())?;
    let components = induced.graph().components();
    let k = components.count();
    let bound = theorem_bound(r, n, k)?;

    let mut surr_edge_counts = Vec::with_capacity(k);
    let mut seen_edges = Vec::new();
    for block in components.iter() {
        let core = induced.to_parent_set(block);
        let s = surr(g, &core)?;
        surr_edge_counts.push(SurrEdgeCount {
            vertices: core.len(),
            edges: s.edge_count(),
            expected: (r - 1) * core.len() + 1,
        });
        seen_edges.extend_from_slice(s.edge_indices());
    }
    seen_edges.sort_unstable();
    let disjointness_ok = seen_edges.windows(2).all(|w| w[0] != w[1]);
    let edge_budget_ok = seen_edges.len() <= g.edge_count();

    Ok(BoundReport {
        r,
        n,
        v_int_size: v_int.len(),
        k,
        bound,
        proposition_holds,
        theorem_holds: v_int.len() <= bound,
        v_int,
        surr_edge_counts,
        disjointness_ok,
        edge_budget_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn surr_of_single_cycle_vertex() {
        let g = c5();
        let s = surr(&g, &VertexSet::new([0])).unwrap();
        assert_eq!(s.vertices(), &VertexSet::new([0, 1, 4]));
        assert_eq!(s.edge_indices(), &[0, 4]);
        assert_eq!(s.edge_count(), 2);
    }

    #[test]
    fn surr_of_k4_edge() {
        let g = k4();
        let s = surr(&g, &VertexSet::new([0, 1])).unwrap();
        assert_eq!(s.vertices(), &VertexSet::new([0, 1, 2, 3]));
        assert_eq!(s.edge_indices(), &[0, 1, 2, 3, 4]);
        assert_eq!(s.edge_count(), 5);
    }

    #[test]
    fn surr_of_everything_is_everything() {
        let g = c5();
        let s = surr(&g, &VertexSet::new(0..5)).unwrap();
        assert_eq!(s.vertices().len(), 5);
        assert_eq!(s.edge_count(), g.edge_count());
    }

    #[test]
    fn surr_rejects_bad_cores() {
        let g = c5();
        assert_eq!(surr(&g, &VertexSet::empty()).unwrap_err(), BoundError::EmptyCore);
        assert!(matches!(
            surr(&g, &VertexSet::new([7])).unwrap_err(),
            BoundError::Graph(GraphError::VertexOutOfRange { vertex: 7, n: 5 })
        ));
    }

    #[test]
    fn bound_values() {
        assert_eq!(theorem_bound(3, 4, 1).unwrap(), 2);
        assert_eq!(theorem_bound(2, 5, 1).unwrap(), 4);
        assert_eq!(theorem_bound(3, 10, 0).unwrap(), 7);
        assert_eq!(corollary_bound(3, 4).unwrap(), 2);
        assert_eq!(corollary_bound(3, 6).unwrap(), 4);
        for n in 3..20 {
            assert_eq!(corollary_bound(2, n).unwrap(), n - 1);
        }
    }

    #[test]
    fn bound_rejects_degenerate_inputs() {
        assert_eq!(theorem_bound(1, 5, 1).unwrap_err(), BoundError::DegreeBelowTwo { r: 1 });
        assert_eq!(theorem_bound(2, 0, 0).unwrap_err(), BoundError::EmptyHost);
        assert_eq!(
            theorem_bound(2, 3, 100).unwrap_err(),
            BoundError::TooManyComponents { r: 2, n: 3, k: 100 }
        );
    }

    #[test]
    fn bound_monotonicity_spot_checks() {
        for k in 0..5 {
            assert!(theorem_bound(3, 10, k + 1).unwrap() <= theorem_bound(3, 10, k).unwrap());
        }
        for n in 4..12 {
            assert!(theorem_bound(3, n, 1).unwrap() <= theorem_bound(3, n + 1, 1).unwrap());
        }
    }

    #[test]
    fn proposition_holds_on_small_cycles() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let phi = EdgeLabeling::new(&g, vec![1, 2, 3]).unwrap();
        assert_eq!(check_proposition(&g, &phi).unwrap(), PropositionVerdict::Holds);

        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let phi = EdgeLabeling::new(&g, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(check_proposition(&g, &phi).unwrap(), PropositionVerdict::Holds);
    }

    #[test]
    fn proposition_is_vacuous_without_interval_vertices() {
        let g = c5();
        let phi = EdgeLabeling::new(&g, vec![1, 3, 5, 2, 4]).unwrap();
        assert!(phi.interval_vertices(&g).unwrap().is_empty());
        assert_eq!(check_proposition(&g, &phi).unwrap(), PropositionVerdict::Holds);
    }

    #[test]
    fn proposition_requires_min_degree_two() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let phi = EdgeLabeling::new(&g, vec![1, 2]).unwrap();
        assert_eq!(
            check_proposition(&g, &phi).unwrap_err(),
            BoundError::MinDegreeTooSmall { required: 2, found: 1 }
        );
    }

    #[test]
    fn core_verdict_reports_offending_component() {
        let g = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6)]).unwrap();
        match core_verdict(&g, &VertexSet::new(0..7)) {
            PropositionVerdict::Violated { component } => {
                assert_eq!(component, VertexSet::new([0, 1, 2, 3]));
            }
            PropositionVerdict::Holds => panic!("C4 component is not a path"),
        }
        assert_eq!(core_verdict(&g, &VertexSet::new([0, 1, 2, 4, 5])), PropositionVerdict::Holds);
        assert_eq!(core_verdict(&g, &VertexSet::empty()), PropositionVerdict::Holds);
    }

    #[test]
    fn theorem_report_on_k4() {
        let g = k4();
        let phi = EdgeLabeling::new(&g, vec![3, 1, 2, 4, 5, 6]).unwrap();
        let report = check_theorem(&g, &phi).unwrap();
        assert_eq!(report.r, 3);
        assert_eq!(report.n, 4);
        assert_eq!(report.v_int.as_vertex_set(), &VertexSet::new([0, 1]));
        assert_eq!(report.v_int_size, 2);
        assert_eq!(report.k, 1);
        assert_eq!(report.bound, 2);
        assert_eq!(
            report.surr_edge_counts,
            vec![SurrEdgeCount { vertices: 2, edges: 5, expected: 5 }]
        );
        assert!(report.proposition_holds);
        assert!(report.theorem_holds);
        assert!(report.disjointness_ok);
        assert!(report.edge_budget_ok);
        assert!(report.pass());
    }

    #[test]
    fn theorem_report_on_sequential_cycle_is_tight() {
        let g = c5();
        let phi = EdgeLabeling::identity(&g);
        let report = check_theorem(&g, &phi).unwrap();
        assert_eq!(report.v_int_size, 4);
        assert_eq!(report.k, 1);
        assert_eq!(report.bound, 4);
        assert_eq!(
            report.surr_edge_counts,
            vec![SurrEdgeCount { vertices: 4, edges: 5, expected: 5 }]
        );
        assert!(report.pass());
    }

    #[test]
    fn theorem_report_with_empty_interval_set() {
        let g = c5();
        let phi = EdgeLabeling::new(&g, vec![1, 3, 5, 2, 4]).unwrap();
        let report = check_theorem(&g, &phi).unwrap();
        assert_eq!(report.v_int_size, 0);
        assert_eq!(report.k, 0);
        assert_eq!(report.bound, 5);
        assert!(report.surr_edge_counts.is_empty());
        assert!(report.pass());
    }

    #[test]
    fn theorem_report_rejects_bad_hosts() {
        let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let phi = EdgeLabeling::new(&path, vec![1, 2]).unwrap();
        assert_eq!(check_theorem(&path, &phi).unwrap_err(), BoundError::NotRegular);

        let matching = Graph::new(2, [(0, 1)]).unwrap();
        let phi = EdgeLabeling::new(&matching, vec![1]).unwrap();
        assert_eq!(
            check_theorem(&matching, &phi).unwrap_err(),
            BoundError::DegreeBelowTwo { r: 1 }
        );
    }

    #[test]
    fn report_serializes_with_stable_fields() {
        let g = k4();
        let phi = EdgeLabeling::new(&g, vec![3, 1, 2, 4, 5, 6]).unwrap();
        let report = check_theorem(&g, &phi).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["v_int"], serde_json::json!([0, 1]));
        assert_eq!(json["v_int_size"], 2);
        assert_eq!(json["bound"], 2);
        assert_eq!(json["surr_edge_counts"][0]["edges"], 5);
    }
}
