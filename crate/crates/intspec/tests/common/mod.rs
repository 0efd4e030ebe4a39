//! Helpers shared by the integration suites: a brute-force search oracle
//! with no pruning tricks and a seeded random-graph source.

use intspec::{EdgeLabeling, Graph};
use itertools::Itertools;
use rand::seq::IndexedRandom;
use rand::Rng;

/// Maximum interval-vertex count over every labeling, by materializing all
/// m! permutations. Shares no code with the branch-and-bound search.
pub fn naive_max(g: &Graph) -> (usize, u64) {
    let m = g.edge_count();
    let mut best = 0;
    let mut evaluated = 0;
    for perm in (1..=m).permutations(m) {
        let phi = EdgeLabeling::new(g, perm).unwrap();
        best = best.max(phi.interval_vertices(g).unwrap().len());
        evaluated += 1;
    }
    (best, evaluated)
}

/// Random simple graph with no isolated vertices: vertex count drawn from
/// `n_range`, then vertex pairs kept with probability 1/2, rejecting draws
/// that leave a vertex bare.
#[allow(dead_code)]
pub fn random_graph(rng: &mut impl Rng, n_range: std::ops::RangeInclusive<usize>) -> Graph {
    let choices: Vec<usize> = n_range.collect();
    loop {
        let n = *choices.choose(rng).unwrap();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random::<bool>())
            .collect();
        let g = Graph::new(n, edges).unwrap();
        if g.edge_count() >= 1 && g.min_degree().unwrap() >= 1 {
            return g;
        }
    }
}
