use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::rng::PairStream;
use crate::{Error, Result};

/// One draw of `G_N^(p)`: every pair `{i, j}` present with probability `p/N`.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSample {
    pub n: usize,
    pub intensity: f64,
    pub seed: u64,
    /// Sorted pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

impl GraphSample {
    /// A graph with the given edges; pairs are normalised to `i < j`,
    /// sorted and deduplicated. Self-loops are dropped.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .inspect(|&(_, b)| assert!(b < n, "vertex {b} out of range"))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        GraphSample {
            n,
            intensity: f64::NAN,
            seed: 0,
            edges,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.n);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        let mut slot = vec![usize::MAX; self.n];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.n {
            let r = uf.find(v);
            if slot[r] == usize::MAX {
                slot[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[r]].push(v);
        }
        groups
    }
}

/// Draws `G_N^(p)` with the per-pair ChaCha8 coins of [`super::pair_uniform`].
pub fn sample_graph(n: usize, intensity: f64, seed: u64) -> Result<GraphSample> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "n",
            value: 0,
            min: 1,
        });
    }
    if !(intensity > 0.0 && intensity <= n as f64) {
        return Err(Error::IntensityOutOfRange { intensity, n });
    }
    let prob = intensity / n as f64;
    let mut coins = PairStream::new(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if coins.next_uniform() < prob {
                edges.push((i, j));
            }
        }
    }
    Ok(GraphSample {
        n,
        intensity,
        seed,
        edges,
    })
}

/// Disjoint sets with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.sets -= 1;
        true
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }
}

pub fn component_count(sample: &GraphSample) -> usize {
    let mut uf = UnionFind::new(sample.n);
    for &(a, b) in &sample.edges {
        uf.union(a, b);
    }
    uf.set_count()
}

/// Degree → number of vertices with that degree.
pub fn degree_statistics(sample: &GraphSample) -> BTreeMap<usize, usize> {
    let mut freq = BTreeMap::new();
    for d in sample.degrees() {
        *freq.entry(d).or_insert(0) += 1;
    }
    freq
}

pub fn max_degree(sample: &GraphSample) -> usize {
    sample.degrees().into_iter().max().unwrap_or(0)
}

/// Total-variation distance between the empirical degree law and
/// Poisson(`mean`), including the Poisson mass beyond the largest observed
/// degree.
pub fn poisson_tv_distance(stats: &BTreeMap<usize, usize>, mean: f64) -> f64 {
    let total: usize = stats.values().sum();
    if total == 0 {
        return 1.0;
    }
    let top = stats.keys().next_back().copied().unwrap_or(0);
    let mut pmf = libm::exp(-mean);
    let mut covered = 0.0;
    let mut diff = 0.0;
    for d in 0..=top {
        if d > 0 {
            pmf *= mean / d as f64;
        }
        let empirical = stats.get(&d).copied().unwrap_or(0) as f64 / total as f64;
        diff += libm::fabs(empirical - pmf);
        covered += pmf;
    }
    0.5 * (diff + (1.0 - covered).max(0.0))
}
