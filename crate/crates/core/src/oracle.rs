//! Unrestricted-memory reference implementations and replay checkers.
//!
//! Directed graphs are traversed along out-edges.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::model::{GraphData, Side, Vertex, Weight};

/// Vertices reachable from `s`, indexed by label (index 0 unused).
pub fn reachable(g: &GraphData, s: Vertex) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count() + 1];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(x) = stack.pop() {
        for y in g.neighbors(x, Side::Out) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Textbook DFS that always takes the first unvisited neighbour in
/// adjacency order.
pub fn lex_dfs(g: &GraphData, s: Vertex) -> Vec<Vertex> {
    let mut seen = vec![false; g.vertex_count() + 1];
    let mut order = vec![s];
    seen[s] = true;
    let mut stack = vec![(s, 0usize)];
    while let Some(&mut (x, ref mut next)) = stack.last_mut() {
        let adj = g.adjacency(x, Side::Out);
        match adj[*next..].iter().position(|&(y, _)| !seen[y]) {
            Some(k) => {
                let y = adj[*next + k].0;
                *next += k + 1;
                seen[y] = true;
                order.push(y);
                stack.push((y, 0));
            }
            None => {
                stack.pop();
            }
        }
    }
    order
}

/// True iff `order` is a DFS order from `s` for some reordering of the
/// adjacency lists.
///
/// Replays the order against a stack of open vertices: before accepting the
/// next vertex, every top with no unvisited neighbour is closed; the vertex
/// must then be an unvisited neighbour of the top. The order must cover
/// exactly the vertices reachable from `s`.
pub fn check_general_dfs(g: &GraphData, s: Vertex, order: &[Vertex]) -> bool {
    let n = g.vertex_count();
    if order.first() != Some(&s) || !(1..=n).contains(&s) {
        return false;
    }
    let mut seen = vec![false; n + 1];
    seen[s] = true;
    let mut stack = vec![s];
    for &v in &order[1..] {
        if v == 0 || v > n || seen[v] {
            return false;
        }
        while let Some(&top) = stack.last() {
            if g.neighbors(top, Side::Out).any(|y| !seen[y]) {
                break;
            }
            stack.pop();
        }
        match stack.last() {
            Some(&top) if g.neighbors(top, Side::Out).any(|y| y == v) => {
                seen[v] = true;
                stack.push(v);
            }
            _ => return false,
        }
    }
    let reach = reachable(g, s);
    order.len() == reach.iter().filter(|&&r| r).count()
}

/// Every DFS order from `s` obtainable by reordering adjacency lists,
/// enumerated by branching on the next unvisited neighbour of the top of the
/// stack. Exponential; for small graphs only.
pub fn all_dfs_orders(g: &GraphData, s: Vertex) -> BTreeSet<Vec<Vertex>> {
    fn grow(
        g: &GraphData,
        seen: &mut Vec<bool>,
        stack: &mut Vec<Vertex>,
        order: &mut Vec<Vertex>,
        out: &mut BTreeSet<Vec<Vertex>>,
    ) {
        let saved = stack.clone();
        while let Some(&top) = stack.last() {
            if g.neighbors(top, Side::Out).any(|y| !seen[y]) {
                break;
            }
            stack.pop();
        }
        match stack.last().copied() {
            None => {
                out.insert(order.clone());
            }
            Some(top) => {
                let choices: Vec<_> = g.neighbors(top, Side::Out).filter(|&y| !seen[y]).collect();
                for y in choices {
                    seen[y] = true;
                    order.push(y);
                    stack.push(y);
                    grow(g, seen, stack, order, out);
                    stack.pop();
                    order.pop();
                    seen[y] = false;
                }
            }
        }
        *stack = saved;
    }
    let mut seen = vec![false; g.vertex_count() + 1];
    seen[s] = true;
    let mut out = BTreeSet::new();
    grow(g, &mut seen, &mut vec![s], &mut vec![s], &mut out);
    out
}

/// BFS distances from `s`, indexed by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMap {
    levels: Vec<Option<usize>>,
}

impl LevelMap {
    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.levels.get(v).copied().flatten()
    }

    /// `(vertex, level)` for every reached vertex, by label.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.levels
            .iter()
            .enumerate()
            .filter_map(|(v, l)| l.map(|l| (v, l)))
    }

    pub fn reached(&self) -> usize {
        self.iter().count()
    }
}

pub fn bfs_levels(g: &GraphData, s: Vertex) -> LevelMap {
    let mut levels = vec![None; g.vertex_count() + 1];
    levels[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        let d = levels[x].unwrap_or(0);
        for y in g.neighbors(x, Side::Out) {
            if levels[y].is_none() {
                levels[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    LevelMap { levels }
}

/// True iff `order` lists exactly the vertices reachable from `s`, starting
/// at `s`, with non-decreasing BFS level.
pub fn check_bfs_order(g: &GraphData, s: Vertex, order: &[Vertex]) -> bool {
    let levels = bfs_levels(g, s);
    if order.first() != Some(&s) || order.len() != levels.reached() {
        return false;
    }
    let mut seen = vec![false; g.vertex_count() + 1];
    let mut last = 0;
    for &v in order {
        let Some(l) = levels.get(v) else { return false };
        if seen[v] || l < last {
            return false;
        }
        seen[v] = true;
        last = l;
    }
    true
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..=n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        self.parent[a] = b;
        true
    }
}

/// Kruskal minimum spanning tree of the component of `s`: edges as
/// `(min, max)` pairs and the total weight. Ties break on
/// `(weight, smaller endpoint, larger endpoint)`.
pub fn mst(g: &GraphData, s: Vertex) -> (Vec<(Vertex, Vertex)>, Weight) {
    let reach = reachable(g, s);
    let mut edges: Vec<_> = g
        .edges()
        .iter()
        .filter(|&&(u, _, _)| reach[u])
        .map(|&(u, v, w)| (w, u.min(v), u.max(v)))
        .collect();
    edges.sort_unstable();
    let mut dsu = Dsu::new(g.vertex_count());
    let mut tree = Vec::new();
    let mut total = 0;
    for (w, u, v) in edges {
        if dsu.union(u, v) {
            tree.push((u, v));
            total += w;
        }
    }
    (tree, total)
}

/// Weight of a minimum spanning forest.
pub fn mst_weight(g: &GraphData) -> Weight {
    let mut dsu = Dsu::new(g.vertex_count());
    let mut edges: Vec<_> = g.edges().iter().map(|&(u, v, w)| (w, u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    edges
        .into_iter()
        .filter(|&(_, u, v)| dsu.union(u, v))
        .map(|(w, _, _)| w)
        .sum()
}

/// Largest `n` the exhaustive subset oracles accept.
pub const SUBSET_ORACLE_LIMIT: usize = 24;

fn neighbor_masks(g: &GraphData) -> Result<Vec<u32>> {
    let n = g.vertex_count();
    if n > SUBSET_ORACLE_LIMIT {
        return Err(Error::OracleLimit {
            n,
            limit: SUBSET_ORACLE_LIMIT,
        });
    }
    Ok((1..=n)
        .map(|v| g.neighbors(v, Side::Out).fold(0, |m, y| m | 1 << (y - 1)))
        .collect())
}

pub fn is_vertex_cover(g: &GraphData, set: u32) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v, _)| set >> (u - 1) & 1 == 1 || set >> (v - 1) & 1 == 1)
}

fn dominates(masks: &[u32], set: u32) -> bool {
    masks
        .iter()
        .enumerate()
        .all(|(i, &m)| set >> i & 1 == 1 || m & set != 0)
}

pub fn is_dominating_set(g: &GraphData, set: u32) -> bool {
    neighbor_masks(g).is_ok_and(|m| dominates(&m, set))
}

fn min_by_bitmask(n: usize, ok: impl Fn(u32) -> bool) -> usize {
    (0u64..1 << n)
        .map(|s| s as u32)
        .filter(|&s| ok(s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n)
}

pub fn min_vertex_cover(g: &GraphData) -> Result<usize> {
    neighbor_masks(g)?;
    Ok(min_by_bitmask(g.vertex_count(), |s| is_vertex_cover(g, s)))
}

pub fn min_dominating_set(g: &GraphData) -> Result<usize> {
    let masks = neighbor_masks(g)?;
    Ok(min_by_bitmask(g.vertex_count(), |s| dominates(&masks, s)))
}
