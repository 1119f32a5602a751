//! Deterministic pseudo-random instances for the verification corpus.
//!
//! The generator is a hand-rolled SplitMix64 so the corpus is bit-stable
//! across toolchains and releases; the verification suites freeze a seed
//! and get the same graphs forever.

use crate::graph::{numbered_vertices, Edge, EdgeLabeledGraph, ModulusContext};

/// SplitMix64 pseudo-random generator.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound >= 1`).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Uniform value in `lo..=hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }
}

/// Shape of a random instance batch.
#[derive(Debug, Clone, Copy)]
pub struct CorpusShape {
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Cap on the total edge count (at least `n - 1` is always used).
    pub max_edges: usize,
    pub min_label: u64,
    pub max_label: u64,
}

/// A random connected graph: a random spanning tree plus extra random
/// edges, every label uniform in the configured range. Parallel edges may
/// occur and are legal.
pub fn random_connected_graph(
    rng: &mut SplitMix64,
    shape: &CorpusShape,
    context: ModulusContext,
) -> EdgeLabeledGraph {
    let n = rng.range(shape.min_vertices as u64, shape.max_vertices as u64) as usize;
    let mut edges = Vec::new();
    let label = |rng: &mut SplitMix64| rng.range(shape.min_label, shape.max_label);
    for v in 1..n {
        let u = rng.below(v as u64) as usize;
        edges.push(Edge {
            u,
            v,
            label: label(rng),
        });
    }
    if n >= 2 && shape.max_edges > n - 1 {
        let extra = rng.below((shape.max_edges - (n - 1) + 1) as u64) as usize;
        for _ in 0..extra {
            let u = rng.below(n as u64) as usize;
            let v = rng.below(n as u64) as usize;
            if u != v {
                edges.push(Edge {
                    u: u.min(v),
                    v: u.max(v),
                    label: label(rng),
                });
            }
        }
    }
    EdgeLabeledGraph::new(numbered_vertices(n), edges, context)
        .expect("random construction yields a valid connected graph")
}
