//! Named graph families and seeded random models.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Attempts allowed when assembling a random cubic graph from matchings.
pub const CUBIC_RETRY_BUDGET: usize = 1000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Star { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Hypercube { d: usize },
    Petersen,
    RandomTree { n: usize, seed: u64 },
    RandomGraph { n: usize, p: f64, seed: u64 },
    RandomCubic { n: usize, seed: u64 },
}

impl Family {
    pub fn generate(&self) -> Result<Graph> {
        match *self {
            Family::Complete { n } => complete(n),
            Family::CompleteBipartite { a, b } => complete_bipartite(a, b),
            Family::Star { n } => star(n),
            Family::Path { n } => path(n),
            Family::Cycle { n } => cycle(n),
            Family::Hypercube { d } => hypercube(d),
            Family::Petersen => Ok(petersen()),
            Family::RandomTree { n, seed } => random_tree(n, seed),
            Family::RandomGraph { n, p, seed } => random_graph(n, p, seed),
            Family::RandomCubic { n, seed } => random_cubic(n, seed),
        }
    }

    /// Short identifier such as `hypercube-3` or `random_tree-9-s42`.
    pub fn label(&self) -> String {
        match *self {
            Family::Complete { n } => format!("complete-{n}"),
            Family::CompleteBipartite { a, b } => format!("complete_bipartite-{a}-{b}"),
            Family::Star { n } => format!("star-{n}"),
            Family::Path { n } => format!("path-{n}"),
            Family::Cycle { n } => format!("cycle-{n}"),
            Family::Hypercube { d } => format!("hypercube-{d}"),
            Family::Petersen => "petersen".to_string(),
            Family::RandomTree { n, seed } => format!("random_tree-{n}-s{seed}"),
            Family::RandomGraph { n, p, seed } => format!("random_graph-{n}-p{p}-s{seed}"),
            Family::RandomCubic { n, seed } => format!("random_cubic-{n}-s{seed}"),
        }
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("complete graph needs n >= 1"));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let g = Graph::new(n, edges)?;
    if n <= 4 {
        g.assert_planar()
    } else {
        Ok(g)
    }
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::domain("complete bipartite graph needs nonempty parts"));
    }
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    let g = Graph::new(a + b, edges)?;
    if a.min(b) <= 2 {
        g.assert_planar()
    } else {
        Ok(g)
    }
}

/// `S_n = K_{1,n-1}` centred at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::domain("star needs n >= 2"));
    }
    Graph::new(n, (1..n).map(|v| (0, v)))?.assert_tree()?.assert_planar()
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("path needs n >= 1"));
    }
    Graph::new(n, (1..n).map(|v| (v - 1, v)))?
        .assert_tree()?
        .assert_planar()
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::domain("cycle needs n >= 3"));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))?.assert_planar()
}

/// `Q_d`: vertices are bit strings, adjacent when they differ in one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d == 0 || d > 6 {
        return Err(Error::domain("hypercube dimension must be in 1..=6"));
    }
    let n = 1usize << d;
    let edges = (0..n).flat_map(|u| (0..d).map(move |bit| (u, u ^ (1 << bit))).filter(|&(u, v)| u < v));
    let g = Graph::new(n, edges)?;
    if d <= 3 {
        g.assert_planar()
    } else {
        Ok(g)
    }
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("petersen edges are valid")
}

/// Uniform labelled tree decoded from a seeded Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("random tree needs n >= 1"));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges)?.assert_tree()?.assert_planar()
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::domain("random graph needs n >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Union of three random perfect matchings, rejected and redrawn whenever
/// two matchings share an edge.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::domain(format!("random cubic graph needs even n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vertices: Vec<usize> = (0..n).collect();
    'attempt: for _ in 0..CUBIC_RETRY_BUDGET {
        let mut masks = vec![0u64; n];
        let mut edges = Vec::with_capacity(3 * n / 2);
        for _ in 0..3 {
            vertices.shuffle(&mut rng);
            for pair in vertices.chunks_exact(2) {
                let (u, v) = (pair[0], pair[1]);
                if masks[u] >> v & 1 == 1 {
                    continue 'attempt;
                }
                masks[u] |= 1 << v;
                masks[v] |= 1 << u;
                edges.push((u, v));
            }
        }
        return Graph::new(n, edges);
    }
    Err(Error::Resource(format!(
        "no simple cubic graph on {n} vertices after {CUBIC_RETRY_BUDGET} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.m()), (8, 12));
        assert!(q3.is_regular());
        let k5 = complete(5).unwrap();
        assert_eq!((k5.n(), k5.m()), (5, 10));
        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!((k33.n(), k33.m()), (6, 9));
        assert!(!k33.flags().asserted_planar);
        for d in 1..=5 {
            let q = hypercube(d).unwrap();
            assert_eq!((q.n(), q.m()), (1 << d, d << (d - 1)));
        }
    }

    #[test]
    fn planar_and_tree_flags() {
        assert!(star(5).unwrap().flags().is_tree_by_construction);
        assert!(hypercube(3).unwrap().flags().asserted_planar);
        assert!(complete(4).unwrap().flags().asserted_planar);
        assert!(!petersen().flags().asserted_planar);
        assert!(!cycle(5).unwrap().flags().is_tree_by_construction);
    }

    #[test]
    fn random_cubic_parameters() {
        assert!(random_cubic(7, 1).is_err());
        assert!(random_cubic(2, 1).is_err());
        for seed in 0..20 {
            let g = random_cubic(12, seed).unwrap();
            assert!(g.is_cubic());
            assert_eq!(g.m(), 18);
        }
    }

    #[test]
    fn random_models_are_reproducible() {
        assert_eq!(random_graph(9, 0.4, 7).unwrap(), random_graph(9, 0.4, 7).unwrap());
        assert_eq!(random_tree(9, 7).unwrap(), random_tree(9, 7).unwrap());
        assert_eq!(random_cubic(10, 7).unwrap(), random_cubic(10, 7).unwrap());
        assert!(random_graph(4, 1.5, 0).is_err());
    }

    #[test]
    fn family_serde_tagging() {
        let f: Family = toml::from_str("family = \"hypercube\"\nd = 3").unwrap();
        assert_eq!(f, Family::Hypercube { d: 3 });
        assert_eq!(f.label(), "hypercube-3");
        let p: Family = toml::from_str("family = \"petersen\"").unwrap();
        assert_eq!(p.generate().unwrap(), petersen());
    }
}
