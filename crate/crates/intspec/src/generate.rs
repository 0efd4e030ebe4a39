//! Graph family generators and the textual spec syntax for them.
//!
//! Spec syntax: `name(arg,...)` with no-argument families allowed to omit
//! the parentheses. Known families:
//!
//! - `cycle(n)`: vertices 0..n in cycle order, edge i joins i and i+1 mod n.
//! - `complete(n)`: edges in lexicographic (u,v) order.
//! - `complete_bipartite(a,b)`: parts 0..a and a..a+b, edges lexicographic.
//! - `prism(n)`: outer cycle 0..n, inner cycle n..2n, then rungs (i, n+i).
//! - `circulant(n,s1,...)`: for each offset s in the given order, edges
//!   (i, i+s mod n) for i in 0..n; offsets must lie in 1..ceil(n/2).
//! - `petersen`: outer cycle 0..5, rungs (i, i+5), inner star (5+i, 5+(i+2 mod 5)).
//! - `random_regular(n,r,seed)`: pairing model, deterministic per seed.
//!
//! For sweeps, exactly one argument may be an inclusive range `a..b`, which
//! expands to one spec per value.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("{family} needs n >= {min}, got {n}")]
    TooFewVertices { family: &'static str, n: usize, min: usize },
    #[error("no {r}-regular graph on {n} vertices: n*r must be even")]
    OddDegreeSum { n: usize, r: usize },
    #[error("no simple {r}-regular graph on {n} vertices: r must be below n")]
    DegreeTooLarge { n: usize, r: usize },
    #[error("circulant offset {s} is outside 1..{}", (*n + 1) / 2)]
    BadOffset { s: usize, n: usize },
    #[error("circulant offset {s} appears twice")]
    DuplicateOffset { s: usize },
    #[error("unknown family {name:?}")]
    UnknownFamily { name: String },
    #[error("{family} takes {expected} arguments, got {got}")]
    WrongArity { family: &'static str, expected: &'static str, got: usize },
    #[error("malformed spec {text:?}")]
    Malformed { text: String },
    #[error("bad number {text:?}")]
    BadNumber { text: String },
    #[error("bad range {text:?}: expected a..b with a <= b")]
    BadRange { text: String },
    #[error("only one argument may be a range")]
    MultipleRanges,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A named graph family instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Prism { n: usize },
    Circulant { n: usize, offsets: Vec<usize> },
    Petersen,
    RandomRegular { n: usize, r: usize, seed: u64 },
}

impl GeneratorSpec {
    fn build(name: &str, args: &[u64]) -> Result<Self, GenerateError> {
        let arity = |expected: &'static str, family: &'static str| GenerateError::WrongArity {
            family,
            expected,
            got: args.len(),
        };
        match name {
            "cycle" => match args {
                [n] => Ok(GeneratorSpec::Cycle { n: *n as usize }),
                _ => Err(arity("1", "cycle")),
            },
            "complete" => match args {
                [n] => Ok(GeneratorSpec::Complete { n: *n as usize }),
                _ => Err(arity("1", "complete")),
            },
            "complete_bipartite" => match args {
                [a, b] => Ok(GeneratorSpec::CompleteBipartite { a: *a as usize, b: *b as usize }),
                _ => Err(arity("2", "complete_bipartite")),
            },
            "prism" => match args {
                [n] => Ok(GeneratorSpec::Prism { n: *n as usize }),
                _ => Err(arity("1", "prism")),
            },
            "circulant" => match args {
                [n, rest @ ..] if !rest.is_empty() => Ok(GeneratorSpec::Circulant {
                    n: *n as usize,
                    offsets: rest.iter().map(|&s| s as usize).collect(),
                }),
                _ => Err(arity("2 or more", "circulant")),
            },
            "petersen" => match args {
                [] => Ok(GeneratorSpec::Petersen),
                _ => Err(arity("0", "petersen")),
            },
            "random_regular" => match args {
                [n, r, seed] => Ok(GeneratorSpec::RandomRegular {
                    n: *n as usize,
                    r: *r as usize,
                    seed: *seed,
                }),
                _ => Err(arity("3", "random_regular")),
            },
            _ => Err(GenerateError::UnknownFamily { name: name.to_string() }),
        }
    }

    pub fn generate(&self) -> Result<Graph, GenerateError> {
        match self {
            GeneratorSpec::Cycle { n } => cycle(*n),
            GeneratorSpec::Complete { n } => complete(*n),
            GeneratorSpec::CompleteBipartite { a, b } => complete_bipartite(*a, *b),
            GeneratorSpec::Prism { n } => prism(*n),
            GeneratorSpec::Circulant { n, offsets } => circulant(*n, offsets),
            GeneratorSpec::Petersen => petersen(),
            GeneratorSpec::RandomRegular { n, r, seed } => random_regular(*n, *r, *seed),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Cycle { n } => write!(f, "cycle({n})"),
            GeneratorSpec::Complete { n } => write!(f, "complete({n})"),
            GeneratorSpec::CompleteBipartite { a, b } => write!(f, "complete_bipartite({a},{b})"),
            GeneratorSpec::Prism { n } => write!(f, "prism({n})"),
            GeneratorSpec::Circulant { n, offsets } => {
                write!(f, "circulant({n}")?;
                for s in offsets {
                    write!(f, ",{s}")?;
                }
                write!(f, ")")
            }
            GeneratorSpec::Petersen => write!(f, "petersen"),
            GeneratorSpec::RandomRegular { n, r, seed } => {
                write!(f, "random_regular({n},{r},{seed})")
            }
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, args) = split_spec(s)?;
        let values = args
            .iter()
            .map(|a| a.parse::<u64>().map_err(|_| GenerateError::BadNumber { text: a.clone() }))
            .collect::<Result<Vec<u64>, _>>()?;
        GeneratorSpec::build(name, &values)
    }
}

fn split_spec(s: &str) -> Result<(&str, Vec<String>), GenerateError> {
    let s = s.trim();
    let malformed = || GenerateError::Malformed { text: s.to_string() };
    match s.split_once('(') {
        None => {
            if s.is_empty() || !s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(malformed());
            }
            Ok((s, Vec::new()))
        }
        Some((name, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(malformed)?;
            if inner.trim().is_empty() {
                return Ok((name, Vec::new()));
            }
            Ok((name, inner.split(',').map(|a| a.trim().to_string()).collect()))
        }
    }
}

/// Expands a spec whose arguments may include one inclusive range `a..b`
/// into the list of concrete specs, in ascending range order.
pub fn expand_family(s: &str) -> Result<Vec<GeneratorSpec>, GenerateError> {
    let (name, args) = split_spec(s)?;
    let mut ranged: Option<(usize, u64, u64)> = None;
    let mut values = vec![0u64; args.len()];
    for (i, arg) in args.iter().enumerate() {
        if let Some((lo, hi)) = arg.split_once("..") {
            if ranged.is_some() {
                return Err(GenerateError::MultipleRanges);
            }
            let bad = || GenerateError::BadRange { text: arg.clone() };
            let lo = lo.trim().parse::<u64>().map_err(|_| bad())?;
            let hi = hi.trim().parse::<u64>().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            ranged = Some((i, lo, hi));
        } else {
            values[i] = arg.parse().map_err(|_| GenerateError::BadNumber { text: arg.clone() })?;
        }
    }
    match ranged {
        None => Ok(vec![GeneratorSpec::build(name, &values)?]),
        Some((slot, lo, hi)) => (lo..=hi)
            .map(|v| {
                values[slot] = v;
                GeneratorSpec::build(name, &values)
            })
            .collect(),
    }
}

fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::TooFewVertices { family: "cycle", n, min: 3 });
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

fn complete(n: usize) -> Result<Graph, GenerateError> {
    if n < 1 {
        return Err(GenerateError::TooFewVertices { family: "complete", n, min: 1 });
    }
    Ok(Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?)
}

fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GenerateError> {
    if a < 1 || b < 1 {
        return Err(GenerateError::TooFewVertices {
            family: "complete_bipartite",
            n: a.min(b),
            min: 1,
        });
    }
    Ok(Graph::new(a + b, (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v))))?)
}

fn prism(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::TooFewVertices { family: "prism", n, min: 3 });
    }
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    let inner = (0..n).map(|i| (n + i, n + (i + 1) % n));
    let rungs = (0..n).map(|i| (i, n + i));
    Ok(Graph::new(2 * n, outer.chain(inner).chain(rungs))?)
}

fn circulant(n: usize, offsets: &[usize]) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(GenerateError::TooFewVertices { family: "circulant", n, min: 3 });
    }
    let mut seen = vec![false; n];
    for &s in offsets {
        if s == 0 || s >= n.div_ceil(2) {
            return Err(GenerateError::BadOffset { s, n });
        }
        if seen[s] {
            return Err(GenerateError::DuplicateOffset { s });
        }
        seen[s] = true;
    }
    let edges = offsets.iter().flat_map(|&s| (0..n).map(move |i| (i, (i + s) % n)));
    Ok(Graph::new(n, edges)?)
}

fn petersen() -> Result<Graph, GenerateError> {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let rungs = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Ok(Graph::new(10, outer.chain(rungs).chain(inner))?)
}

/// Pairing model: shuffle r stubs per vertex, pair them off consecutively,
/// and restart from scratch whenever the pairing produces a loop or a
/// parallel edge. Deterministic per seed; restarts draw from the same
/// generator stream.
fn random_regular(n: usize, r: usize, seed: u64) -> Result<Graph, GenerateError> {
    if r >= n {
        return Err(GenerateError::DegreeTooLarge { n, r });
    }
    if n * r % 2 != 0 {
        return Err(GenerateError::OddDegreeSum { n, r });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    loop {
        stubs.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> =
            stubs.chunks_exact(2).map(|pair| (pair[0], pair[1])).collect();
        match Graph::new(n, edges) {
            Ok(g) => return Ok(g),
            Err(GraphError::LoopEdge { .. } | GraphError::ParallelEdge { .. }) => continue,
            Err(other) => return Err(other.into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_shape() {
        let g = GeneratorSpec::Cycle { n: 5 }.generate().unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.regularity(), Some(2));
        assert_eq!(g.endpoints(4), (4, 0));
    }

    #[test]
    fn complete_shape() {
        let g = GeneratorSpec::Complete { n: 4 }.generate().unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.regularity(), Some(3));
    }

    #[test]
    fn complete_bipartite_shape() {
        let g = GeneratorSpec::CompleteBipartite { a: 2, b: 3 }.generate().unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(2), 2);
        assert_eq!(g.regularity(), None);
        let balanced = GeneratorSpec::CompleteBipartite { a: 3, b: 3 }.generate().unwrap();
        assert_eq!(balanced.regularity(), Some(3));
    }

    #[test]
    fn prism_shape() {
        let g = GeneratorSpec::Prism { n: 4 }.generate().unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(g.components().count(), 1);
    }

    #[test]
    fn circulant_shape() {
        let g = GeneratorSpec::Circulant { n: 8, offsets: vec![1, 3] }.generate().unwrap();
        assert_eq!(g.edge_count(), 16);
        assert_eq!(g.regularity(), Some(4));

        let err = GeneratorSpec::Circulant { n: 8, offsets: vec![4] }.generate().unwrap_err();
        assert_eq!(err, GenerateError::BadOffset { s: 4, n: 8 });
        let err = GeneratorSpec::Circulant { n: 8, offsets: vec![0] }.generate().unwrap_err();
        assert_eq!(err, GenerateError::BadOffset { s: 0, n: 8 });
        let err = GeneratorSpec::Circulant { n: 8, offsets: vec![1, 1] }.generate().unwrap_err();
        assert_eq!(err, GenerateError::DuplicateOffset { s: 1 });
    }

    #[test]
    fn petersen_shape() {
        let g = GeneratorSpec::Petersen.generate().unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.regularity(), Some(3));
        assert_eq!(g.components().count(), 1);
        assert_eq!(g.distance(0, 7).unwrap(), Some(2));
    }

    #[test]
    fn random_regular_is_regular_and_deterministic() {
        let a = GeneratorSpec::RandomRegular { n: 10, r: 3, seed: 7 }.generate().unwrap();
        assert_eq!(a.vertex_count(), 10);
        assert_eq!(a.edge_count(), 15);
        assert_eq!(a.regularity(), Some(3));
        let b = GeneratorSpec::RandomRegular { n: 10, r: 3, seed: 7 }.generate().unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn random_regular_rejects_impossible_parameters() {
        let err = GeneratorSpec::RandomRegular { n: 5, r: 3, seed: 0 }.generate().unwrap_err();
        assert_eq!(err, GenerateError::OddDegreeSum { n: 5, r: 3 });
        let err = GeneratorSpec::RandomRegular { n: 4, r: 4, seed: 0 }.generate().unwrap_err();
        assert_eq!(err, GenerateError::DegreeTooLarge { n: 4, r: 4 });
    }

    #[test]
    fn spec_round_trips_through_display() {
        let specs = [
            GeneratorSpec::Cycle { n: 5 },
            GeneratorSpec::CompleteBipartite { a: 2, b: 3 },
            GeneratorSpec::Circulant { n: 8, offsets: vec![1, 3] },
            GeneratorSpec::Petersen,
            GeneratorSpec::RandomRegular { n: 10, r: 3, seed: 7 },
        ];
        for spec in specs {
            assert_eq!(spec.to_string().parse::<GeneratorSpec>().unwrap(), spec);
        }
    }

    #[test]
    fn spec_parse_errors() {
        assert!(matches!(
            "heptagram(9)".parse::<GeneratorSpec>().unwrap_err(),
            GenerateError::UnknownFamily { .. }
        ));
        assert!(matches!(
            "cycle(3,4)".parse::<GeneratorSpec>().unwrap_err(),
            GenerateError::WrongArity { family: "cycle", .. }
        ));
        assert!(matches!(
            "cycle(x)".parse::<GeneratorSpec>().unwrap_err(),
            GenerateError::BadNumber { .. }
        ));
        assert!(matches!(
            "cycle(3".parse::<GeneratorSpec>().unwrap_err(),
            GenerateError::Malformed { .. }
        ));
    }

    #[test]
    fn family_expansion() {
        let specs = expand_family("cycle(3..6)").unwrap();
        assert_eq!(
            specs,
            (3..=6).map(|n| GeneratorSpec::Cycle { n }).collect::<Vec<_>>()
        );

        let specs = expand_family("random_regular(10,3,0..4)").unwrap();
        assert_eq!(specs.len(), 5);
        assert_eq!(specs[2], GeneratorSpec::RandomRegular { n: 10, r: 3, seed: 2 });

        let specs = expand_family("petersen").unwrap();
        assert_eq!(specs, vec![GeneratorSpec::Petersen]);

        assert_eq!(
            expand_family("random_regular(8..10,3,0..4)").unwrap_err(),
            GenerateError::MultipleRanges
        );
        assert!(matches!(
            expand_family("cycle(6..3)").unwrap_err(),
            GenerateError::BadRange { .. }
        ));
    }
}
