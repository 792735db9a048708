//! Seeded random graphs and fixed families.
//!
//! Random graphs are Erdős–Rényi `G(n, p)` drawn from ChaCha8 seeded with
//! [`rand_chacha::rand_core::SeedableRng::seed_from_u64`]: pairs are visited
//! in lexicographic order (ordered pairs for digraphs) and kept with
//! probability `p`, then the edge list is shuffled so adjacency order is not
//! sorted. Draws that miss the requested constraints are rejected and
//! redrawn from the same stream.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{GraphData, Side, Vertex, Weight};
use crate::oracle;

#[derive(Debug, Clone, PartialEq)]
pub struct GenParams {
    pub n: usize,
    /// Edge probability; `None` picks one from `n` and `min_degree`.
    pub p: Option<f64>,
    pub directed: bool,
    pub weighted: bool,
    /// Weights are a permutation of `1..=m` instead of draws from `1..=max_weight`.
    pub distinct_weights: bool,
    pub max_weight: Weight,
    /// Lower bound on every (out-)degree.
    pub min_degree: usize,
    /// Vertex 1 reaches every vertex.
    pub connected: bool,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        Self {
            n: 16,
            p: None,
            directed: false,
            weighted: false,
            distinct_weights: false,
            max_weight: 100,
            min_degree: 0,
            connected: false,
            seed: 0,
        }
    }
}

const ATTEMPTS: usize = 10_000;

impl GenParams {
    fn edge_probability(&self) -> f64 {
        if let Some(p) = self.p {
            return p.clamp(0.0, 1.0);
        }
        if self.n < 2 {
            return 0.0;
        }
        let want = 2.0 * (self.min_degree as f64 + 1.0) + (self.n as f64).ln();
        (want / (self.n - 1) as f64).clamp(0.15, 1.0)
    }

    fn accepts(&self, g: &GraphData) -> bool {
        g.min_degree() >= self.min_degree
            && (!self.connected || self.n == 0 || oracle::reachable(g, 1).iter().skip(1).all(|&r| r))
    }
}

/// Draws a graph satisfying `params`, or fails after many rejections.
pub fn generate(params: &GenParams) -> Result<GraphData> {
    let n = params.n;
    if params.min_degree >= n.max(1) && n > 0 {
        return Err(Error::Unsupported(format!(
            "minimum degree {} impossible with {n} vertices",
            params.min_degree
        )));
    }
    let p = params.edge_probability();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for _ in 0..ATTEMPTS {
        let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
        for u in 1..=n {
            for v in 1..=n {
                let candidate = if params.directed { u != v } else { u < v };
                if candidate && rng.gen_bool(p) {
                    pairs.push((u, v));
                }
            }
        }
        pairs.shuffle(&mut rng);
        let g = if params.weighted {
            let weights: Vec<Weight> = if params.distinct_weights {
                let mut w: Vec<Weight> = (1..=pairs.len() as Weight).collect();
                w.shuffle(&mut rng);
                w
            } else {
                (0..pairs.len())
                    .map(|_| rng.gen_range(1..=params.max_weight.max(1)))
                    .collect()
            };
            let edges: Vec<_> = pairs.iter().zip(weights).map(|(&(u, v), w)| (u, v, w)).collect();
            GraphData::from_weighted_edges(n, params.directed, &edges)?
        } else {
            GraphData::from_edges(n, params.directed, &pairs)?
        };
        if params.accepts(&g) {
            return Ok(g);
        }
    }
    Err(Error::Unsupported(format!(
        "no graph met the constraints after {ATTEMPTS} draws"
    )))
}

/// Named deterministic families used by the benchmarks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "star" => Ok(Family::Star),
            "complete" => Ok(Family::Complete),
            _ => Err(Error::Unsupported(format!(
                "unknown family {s:?}; expected path, cycle, star or complete"
            ))),
        }
    }
}

pub fn family(f: Family, n: usize) -> Result<GraphData> {
    let mut edges = Vec::new();
    match f {
        Family::Path => edges.extend((1..n).map(|v| (v, v + 1))),
        Family::Cycle => {
            edges.extend((1..n).map(|v| (v, v + 1)));
            if n >= 3 {
                edges.push((n, 1));
            }
        }
        Family::Star => edges.extend((2..=n).map(|v| (1, v))),
        Family::Complete => {
            for u in 1..=n {
                edges.extend((u + 1..=n).map(|v| (u, v)));
            }
        }
    }
    GraphData::from_edges(n, false, &edges)
}

/// A graph with each undirected edge replaced by two opposite arcs, in the
/// same appearance order, so directed searches see the same lists.
pub fn symmetrize(g: &GraphData) -> Result<GraphData> {
    let mut arcs = Vec::new();
    for v in 1..=g.vertex_count() {
        for &(y, w) in g.adjacency(v, Side::Out) {
            arcs.push((v, y, w));
        }
    }
    if g.is_weighted() {
        GraphData::from_weighted_edges(g.vertex_count(), true, &arcs)
    } else {
        let arcs: Vec<_> = arcs.into_iter().map(|(u, v, _)| (u, v)).collect();
        GraphData::from_edges(g.vertex_count(), true, &arcs)
    }
}

/// `count` graphs with `n` drawn from `n_range` and a density drawn per
/// graph, each seeded from `seed` and its index.
pub fn corpus(
    count: usize,
    n_range: std::ops::RangeInclusive<usize>,
    base: &GenParams,
    seed: u64,
) -> Result<Vec<GraphData>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(n_range.clone());
            let p = base.p.or_else(|| {
                if base.min_degree > 0 {
                    None
                } else {
                    let low = if base.connected { (n.max(2) as f64).ln() + 1.0 } else { 1.5 };
                    let avg: f64 = rng.gen_range(low..low + 7.0);
                    Some((avg / n.max(2) as f64).min(1.0))
                }
            });
            generate(&GenParams {
                n,
                p,
                seed: seed.wrapping_mul(0x9E37_79B9).wrapping_add(i as u64),
                ..base.clone()
            })
        })
        .collect()
}
