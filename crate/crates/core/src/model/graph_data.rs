use std::collections::HashSet;
use std::fmt::Write as _;

use super::{Side, Vertex, Weight};
use crate::error::{Error, Result};

/// Plain input graph: labels `1..=n`, adjacency in edge appearance order.
///
/// Undirected graphs only use the out-sequences; directed graphs carry both
/// out- and in-sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphData {
    n: usize,
    directed: bool,
    weighted: bool,
    edges: Vec<(Vertex, Vertex, Weight)>,
    out: Vec<Vec<(Vertex, Weight)>>,
    inn: Vec<Vec<(Vertex, Weight)>>,
}

impl GraphData {
    /// Builds an unweighted graph from an edge list.
    pub fn from_edges(n: usize, directed: bool, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let weighted: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 0)).collect();
        Self::build(n, directed, false, &weighted)
    }

    /// Builds a weighted graph from an edge list.
    pub fn from_weighted_edges(
        n: usize,
        directed: bool,
        edges: &[(Vertex, Vertex, Weight)],
    ) -> Result<Self> {
        Self::build(n, directed, true, edges)
    }

    fn build(
        n: usize,
        directed: bool,
        weighted: bool,
        edges: &[(Vertex, Vertex, Weight)],
    ) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); if directed { n } else { 0 }];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v, w) in edges {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange(x));
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = if directed { (u, v) } else { (u.min(v), u.max(v)) };
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge(u, v));
            }
            out[u - 1].push((v, w));
            if directed {
                inn[v - 1].push((u, w));
            } else {
                out[v - 1].push((u, w));
            }
        }
        Ok(Self {
            n,
            directed,
            weighted,
            edges: edges.to_vec(),
            out,
            inn,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    pub fn edges(&self) -> &[(Vertex, Vertex, Weight)] {
        &self.edges
    }

    /// Adjacency sequence of `v` with weights, in input order.
    pub fn adjacency(&self, v: Vertex, side: Side) -> &[(Vertex, Weight)] {
        match side {
            Side::Out => &self.out[v - 1],
            Side::In if self.directed => &self.inn[v - 1],
            Side::In => &self.out[v - 1],
        }
    }

    pub fn neighbors(&self, v: Vertex, side: Side) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency(v, side).iter().map(|&(x, _)| x)
    }

    pub fn degree(&self, v: Vertex, side: Side) -> usize {
        self.adjacency(v, side).len()
    }

    /// Sides carrying adjacency sequences: `[Out]` or `[Out, In]`.
    pub fn sides(&self) -> &'static [Side] {
        if self.directed {
            &[Side::Out, Side::In]
        } else {
            &[Side::Out]
        }
    }

    pub fn min_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v, Side::Out)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        let mut best = 0;
        for &side in self.sides() {
            for v in 1..=self.n {
                best = best.max(self.degree(v, side));
            }
        }
        best
    }

    /// Copy with every adjacency sequence sorted ascending by `(weight, label)`.
    ///
    /// This is the order an adjacency-array simulation works in.
    pub fn sorted(&self) -> Self {
        let mut g = self.clone();
        for list in g.out.iter_mut().chain(g.inn.iter_mut()) {
            list.sort_by_key(|&(x, w)| (w, x));
        }
        g
    }

    /// Graph file text for this graph.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "H {} {} {} {}",
            self.n,
            self.edges.len(),
            self.directed as u8,
            self.weighted as u8
        );
        for &(u, v, w) in &self.edges {
            if self.weighted {
                let _ = writeln!(s, "E {u} {v} {w}");
            } else {
                let _ = writeln!(s, "E {u} {v}");
            }
        }
        s
    }
}

/// Parses the graph file format:
///
/// ```text
/// # comment
/// H <n> <m> <directed 0|1> <weighted 0|1>
/// E <u> <v> [<w>]
/// ```
///
/// Adjacency order is edge appearance order.
pub fn load_graph(text: &str) -> Result<GraphData> {
    let mut header: Option<(usize, usize, bool, bool)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        let fields: Vec<&str> = t.split_whitespace().collect();
        match fields[0] {
            "H" => {
                if header.is_some() {
                    return Err(err("second header"));
                }
                if fields.len() != 5 {
                    return Err(err("header needs 4 fields"));
                }
                let n = parse_usize(fields[1]).ok_or_else(|| err("bad n"))?;
                let m = parse_usize(fields[2]).ok_or_else(|| err("bad m"))?;
                let d = parse_flag(fields[3]).ok_or_else(|| err("directed flag must be 0 or 1"))?;
                let w = parse_flag(fields[4]).ok_or_else(|| err("weighted flag must be 0 or 1"))?;
                header = Some((n, m, d, w));
            }
            "E" => {
                let (_, _, _, weighted) = header.ok_or_else(|| err("edge before header"))?;
                let want = if weighted { 4 } else { 3 };
                if fields.len() != want {
                    return Err(err(if weighted {
                        "weighted edge needs u v w"
                    } else {
                        "unexpected field after u v (weight on unweighted graph?)"
                    }));
                }
                let u = parse_usize(fields[1]).ok_or_else(|| err("bad vertex"))?;
                let v = parse_usize(fields[2]).ok_or_else(|| err("bad vertex"))?;
                let w = if weighted {
                    fields[3].parse::<i64>().map_err(|_| err("bad weight"))?
                } else {
                    0
                };
                edges.push((u, v, w));
            }
            _ => return Err(err("unknown record type")),
        }
    }
    let (n, m, directed, weighted) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing header".into(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    GraphData::build(n, directed, weighted, &edges)
}

fn parse_usize(s: &str) -> Option<usize> {
    s.parse().ok()
}

fn parse_flag(s: &str) -> Option<bool> {
    match s {
        "0" => Some(false),
        "1" => Some(true),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = load_graph("H 2 1 0 0\nE 1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(1, Side::Out).collect::<Vec<_>>(), vec![2]);
        assert_eq!(g.neighbors(2, Side::Out).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn appearance_order() {
        let g = load_graph("# g\nH 4 4 0 0\nE 1 2\nE 1 3\nE 2 3\nE 3 4\n").unwrap();
        assert_eq!(g.neighbors(3, Side::Out).collect::<Vec<_>>(), vec![1, 2, 4]);
    }

    #[test]
    fn directed_in_lists() {
        let g = load_graph("H 3 3 1 0\nE 1 2\nE 3 2\nE 2 1\n").unwrap();
        assert_eq!(g.neighbors(2, Side::In).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(g.neighbors(2, Side::Out).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(load_graph("H 2 1 0 0\nE 1 1\n"), Err(Error::SelfLoop(1)));
        assert_eq!(load_graph("H 2 1 0 0\nE 1 3\n"), Err(Error::VertexOutOfRange(3)));
        assert_eq!(
            load_graph("H 2 2 0 0\nE 1 2\nE 2 1\n"),
            Err(Error::DuplicateEdge(2, 1))
        );
        assert!(load_graph("H 2 2 1 0\nE 1 2\nE 2 1\n").is_ok());
        assert!(matches!(
            load_graph("H 2 1 0 0\nE 1 2 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(load_graph("H 2 1 0 0\nX\n"), Err(Error::Parse { .. })));
        assert!(matches!(load_graph("H 2 2 0 0\nE 1 2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn weighted_round_trip() {
        let g = load_graph("H 3 2 0 1\nE 1 2 -4\nE 2 3 7\n").unwrap();
        assert_eq!(g.adjacency(2, Side::Out), &[(1, -4), (3, 7)]);
        assert_eq!(load_graph(&g.to_text()).unwrap(), g);
    }
}
