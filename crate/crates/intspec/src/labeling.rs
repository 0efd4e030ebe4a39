//! Edge labelings, vertex spectra and the interval-vertex set.
//!
//! A labeling assigns the labels `1..=m` bijectively to the edges of a graph.
//! The spectrum of a vertex is the set of labels on its incident edges; a
//! vertex is an interval vertex when its spectrum is a run of consecutive
//! integers. Labels stay 1-based everywhere, including reports.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("expected {expected} labels, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("label {label} at edge {edge} is outside 1..={m}")]
    LabelOutOfRange { label: usize, edge: usize, m: usize },
    #[error("label {label} is assigned to both edge {first} and edge {second}")]
    RepeatedLabel { label: usize, first: usize, second: usize },
    #[error("spectrum of isolated vertex {vertex} is empty and has no interval status")]
    IsolatedVertex { vertex: usize },
    #[error("an empty spectrum is not an interval nor a non-interval")]
    EmptySpectrum,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A bijection from edge indices to the labels `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    labels: Vec<usize>,
}

impl EdgeLabeling {
    /// Validates `labels[e]` as the label of edge `e` for graph `g`.
    pub fn new(g: &Graph, labels: Vec<usize>) -> Result<Self, LabelingError> {
        let m = g.edge_count();
        if labels.len() != m {
            return Err(LabelingError::WrongLength { expected: m, got: labels.len() });
        }
        let mut owner = vec![usize::MAX; m + 1];
        for (edge, &label) in labels.iter().enumerate() {
            if label < 1 || label > m {
                return Err(LabelingError::LabelOutOfRange { label, edge, m });
            }
            if owner[label] != usize::MAX {
                return Err(LabelingError::RepeatedLabel { label, first: owner[label], second: edge });
            }
            owner[label] = edge;
        }
        Ok(EdgeLabeling { labels })
    }

    /// The identity labeling: edge `e` gets label `e + 1`.
    pub fn identity(g: &Graph) -> Self {
        EdgeLabeling { labels: (1..=g.edge_count()).collect() }
    }

    /// A uniformly random labeling drawn from `rng`.
    pub fn random(g: &Graph, rng: &mut impl Rng) -> Self {
        let mut labels: Vec<usize> = (1..=g.edge_count()).collect();
        labels.shuffle(rng);
        EdgeLabeling { labels }
    }

    pub fn label(&self, edge: usize) -> usize {
        self.labels[edge]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The labeling `e -> m + 1 - label(e)`. An involution; the interval
    /// vertices of a labeling and its reflection coincide.
    pub fn reflect(&self) -> EdgeLabeling {
        let m = self.labels.len();
        EdgeLabeling { labels: self.labels.iter().map(|&l| m + 1 - l).collect() }
    }

    /// Sorted labels on the edges incident with `x`.
    pub fn spectrum(&self, g: &Graph, x: usize) -> Result<VertexSpectrum, LabelingError> {
        if x >= g.vertex_count() {
            return Err(GraphError::VertexOutOfRange { vertex: x, n: g.vertex_count() }.into());
        }
        let mut labels: Vec<usize> = g.incident_edges(x).iter().map(|&e| self.labels[e]).collect();
        labels.sort_unstable();
        Ok(VertexSpectrum { labels })
    }

    /// The set of vertices whose spectra are intervals.
    ///
    /// Isolated vertices have empty spectra, for which interval status is
    /// undefined, so any isolated vertex is an error.
    pub fn interval_vertices(&self, g: &Graph) -> Result<IntervalVertexSet, LabelingError> {
        debug_assert_eq!(self.labels.len(), g.edge_count());
        let mut hit = Vec::new();
        for x in 0..g.vertex_count() {
            let spectrum = self.spectrum(g, x)?;
            if spectrum.is_empty() {
                return Err(LabelingError::IsolatedVertex { vertex: x });
            }
            if spectrum.is_interval()? {
                hit.push(x);
            }
        }
        Ok(IntervalVertexSet { vertices: VertexSet::new(hit) })
    }
}

impl Serialize for EdgeLabeling {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.labels.iter())
    }
}

/// Sorted set of labels incident with one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSpectrum {
    labels: Vec<usize>,
}

impl VertexSpectrum {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.labels
    }

    /// True iff the spectrum is a nonempty run of consecutive integers,
    /// checked as `max - min + 1 == size`. Empty spectra are an error.
    pub fn is_interval(&self) -> Result<bool, LabelingError> {
        match (self.labels.first(), self.labels.last()) {
            (Some(&min), Some(&max)) => Ok(max - min + 1 == self.labels.len()),
            _ => Err(LabelingError::EmptySpectrum),
        }
    }
}

/// Vertices with interval spectra, in host-graph coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IntervalVertexSet {
    vertices: VertexSet,
}

impl IntervalVertexSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    pub fn as_vertex_set(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter()
    }
}

/// JSON fragment for one (graph, labeling) evaluation.
#[derive(Debug, Clone, Serialize)]
pub struct IntervalReport {
    pub labels: Vec<usize>,
    pub v_int: IntervalVertexSet,
    pub v_int_size: usize,
}

pub fn interval_report(g: &Graph, phi: &EdgeLabeling) -> Result<IntervalReport, LabelingError> {
    let v_int = phi.interval_vertices(g)?;
    Ok(IntervalReport {
        labels: phi.labels().to_vec(),
        v_int_size: v_int.len(),
        v_int,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn accepts_valid_labeling() {
        let g = c3();
        let phi = EdgeLabeling::new(&g, vec![1, 2, 3]).unwrap();
        assert_eq!(phi.label(0), 1);
    }

    #[test]
    fn rejects_repeated_label() {
        let err = EdgeLabeling::new(&c3(), vec![1, 1, 2]).unwrap_err();
        assert_eq!(err, LabelingError::RepeatedLabel { label: 1, first: 0, second: 1 });
    }

    #[test]
    fn rejects_label_out_of_range() {
        let err = EdgeLabeling::new(&c3(), vec![0, 1, 2]).unwrap_err();
        assert_eq!(err, LabelingError::LabelOutOfRange { label: 0, edge: 0, m: 3 });
        let err = EdgeLabeling::new(&c3(), vec![1, 2, 4]).unwrap_err();
        assert_eq!(err, LabelingError::LabelOutOfRange { label: 4, edge: 2, m: 3 });
    }

    #[test]
    fn rejects_wrong_length() {
        let err = EdgeLabeling::new(&c3(), vec![1, 2]).unwrap_err();
        assert_eq!(err, LabelingError::WrongLength { expected: 3, got: 2 });
    }

    #[test]
    fn spectra_read_off_incident_labels() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let phi = EdgeLabeling::new(&g, vec![1]).unwrap();
        assert_eq!(phi.spectrum(&g, 0).unwrap().as_slice(), &[1]);

        let g = c3();
        let phi = EdgeLabeling::new(&g, vec![1, 2, 3]).unwrap();
        assert_eq!(phi.spectrum(&g, 1).unwrap().as_slice(), &[1, 2]);
        assert_eq!(phi.spectrum(&g, 0).unwrap().as_slice(), &[1, 3]);
        assert!(phi.spectrum(&g, 3).is_err());
    }

    #[test]
    fn interval_test_is_span_check() {
        let single = VertexSpectrum { labels: vec![5] };
        assert!(single.is_interval().unwrap());
        let run = VertexSpectrum { labels: vec![2, 3, 4] };
        assert!(run.is_interval().unwrap());
        let gap = VertexSpectrum { labels: vec![1, 3] };
        assert!(!gap.is_interval().unwrap());
        let empty = VertexSpectrum { labels: vec![] };
        assert_eq!(empty.is_interval(), Err(LabelingError::EmptySpectrum));
    }

    #[test]
    fn interval_vertices_on_small_cycles() {
        let g = c3();
        let phi = EdgeLabeling::new(&g, vec![1, 2, 3]).unwrap();
        let v_int = phi.interval_vertices(&g).unwrap();
        assert_eq!(v_int.as_vertex_set(), &VertexSet::new([1, 2]));

        let g = c4();
        let phi = EdgeLabeling::new(&g, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(phi.interval_vertices(&g).unwrap().len(), 3);

        let g = Graph::new(2, [(0, 1)]).unwrap();
        let phi = EdgeLabeling::new(&g, vec![1]).unwrap();
        assert_eq!(phi.interval_vertices(&g).unwrap().len(), 2);
    }

    #[test]
    fn interval_vertices_reject_isolated_vertices() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let phi = EdgeLabeling::new(&g, vec![1]).unwrap();
        assert_eq!(
            phi.interval_vertices(&g).unwrap_err(),
            LabelingError::IsolatedVertex { vertex: 2 }
        );
    }

    #[test]
    fn reflection_formula_and_involution() {
        let g = c3();
        let phi = EdgeLabeling::new(&g, vec![1, 2, 3]).unwrap();
        let refl = phi.reflect();
        assert_eq!(refl.labels(), &[3, 2, 1]);
        assert_eq!(refl.reflect(), phi);
        assert_eq!(
            phi.interval_vertices(&g).unwrap().len(),
            refl.interval_vertices(&g).unwrap().len()
        );
    }

    #[test]
    fn spectrum_sizes_match_degrees() {
        let g = c4();
        let phi = EdgeLabeling::new(&g, vec![2, 4, 1, 3]).unwrap();
        for v in 0..4 {
            assert_eq!(phi.spectrum(&g, v).unwrap().len(), g.degree(v));
        }
    }
}
