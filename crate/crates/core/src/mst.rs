//! Minimum spanning tree with `O(lg n)` bits: Prim's algorithm where the
//! tree membership of a vertex is whether its list's minimum element is
//! still at the front.
//!
//! All comparisons use the key `(weight, smaller endpoint, larger endpoint)`,
//! which makes the tree unique.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::implicit_search::RotateAdapter;
use crate::model::{ImplicitGraph, RotateAccess, Side, Vertex, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MstEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub weight: Weight,
    /// Edge to a degree-1 vertex, added when its neighbour joined the tree.
    pub pendant: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MstResult {
    pub edges: Vec<MstEdge>,
    pub total: Weight,
}

impl MstResult {
    fn push(&mut self, u: Vertex, v: Vertex, weight: Weight, pendant: bool) {
        self.edges.push(MstEdge {
            u: u.min(v),
            v: u.max(v),
            weight,
            pendant,
        });
        self.total += weight;
    }

    /// Edges as sorted `(min, max)` pairs.
    pub fn pairs(&self) -> Vec<(Vertex, Vertex)> {
        let mut p: Vec<_> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        p.sort_unstable();
        p
    }
}

/// `k` of the smallest `(weight, label)` element of `v`'s list.
fn min_offset<G: RotateAccess + ?Sized>(g: &mut G, v: Vertex) -> Option<usize> {
    let d = g.degree(v, Side::Out);
    let mut best: Option<((Weight, Vertex), usize)> = None;
    for k in 0..d {
        let key = (g.peek_weight(v, Side::Out, k), g.peek(v, Side::Out, k));
        g.count_comparisons(1);
        if best.is_none_or(|(b, _)| key < b) {
            best = Some((key, k));
        }
    }
    best.map(|(_, k)| k)
}

/// Whether `v` is in the tree: its minimum element has left the front.
pub fn is_marked<G: RotateAccess + ?Sized>(g: &mut G, v: Vertex) -> Result<bool> {
    let d = g.degree(v, Side::Out);
    if d < 2 {
        return Err(Error::DegreeTooSmall {
            vertex: v,
            degree: d,
            needed: 2,
        });
    }
    Ok(min_offset(g, v) != Some(0))
}

/// Minimum spanning tree of the component of `s` in the rotate model.
///
/// Every list of degree >= 2 first gets its minimum rotated to the front.
/// A vertex joins the tree by a single rotation. Each round scans the
/// unmarked vertices in label order for the cheapest edge to a marked
/// vertex. Degree-1 vertices never take part in rounds; their edges are
/// emitted when their neighbour joins.
pub fn mst_rotate<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex) -> Result<MstResult> {
    let n = g.vertex_count();
    if s == 0 || s > n {
        return Err(Error::VertexOutOfRange(s));
    }
    if g.is_directed() {
        return Err(Error::Unsupported("minimum spanning trees need an undirected graph".into()));
    }
    let meter = g.meter();
    // s, u, x, k, best weight, best endpoints (2), best vertex
    let _vars = meter.words(8)?;
    for v in 1..=n {
        if g.degree(v, Side::Out) >= 2 {
            let k = min_offset(g, v).expect("non-empty");
            for _ in 0..k {
                g.rotate(v, Side::Out)?;
            }
        }
    }
    let mut out = MstResult::default();
    let root = match g.degree(s, Side::Out) {
        0 => return Ok(out),
        1 => {
            let y = g.peek(s, Side::Out, 0);
            if g.degree(y, Side::Out) == 1 {
                let w = g.peek_weight(s, Side::Out, 0);
                out.push(s, y, w, true);
                return Ok(out);
            }
            y
        }
        _ => s,
    };
    join(g, root, &mut out)?;
    loop {
        let mut best: Option<((Weight, Vertex, Vertex), Vertex)> = None;
        for u in 1..=n {
            if g.degree(u, Side::Out) < 2 || is_marked(g, u)? {
                continue;
            }
            for k in 0..g.degree(u, Side::Out) {
                let x = g.peek(u, Side::Out, k);
                if g.degree(x, Side::Out) < 2 {
                    continue;
                }
                let key = (g.peek_weight(u, Side::Out, k), u.min(x), u.max(x));
                g.count_comparisons(1);
                if best.is_some_and(|(b, _)| b <= key) {
                    continue;
                }
                if is_marked(g, x)? {
                    best = Some((key, u));
                }
            }
        }
        let Some(((w, a, b), u)) = best else { break };
        out.push(a, b, w, false);
        join(g, u, &mut out)?;
    }
    Ok(out)
}

/// Marks `u` with one rotation and emits its pendant edges.
fn join<G: RotateAccess + ?Sized>(g: &mut G, u: Vertex, out: &mut MstResult) -> Result<()> {
    for k in 0..g.degree(u, Side::Out) {
        let y = g.peek(u, Side::Out, k);
        if g.degree(y, Side::Out) == 1 {
            let w = g.peek_weight(u, Side::Out, k);
            out.push(u, y, w, true);
        }
    }
    g.rotate(u, Side::Out)
}

/// [`mst_rotate`] on an implicit graph through the rotate-model simulation.
pub fn mst_implicit(g: &mut ImplicitGraph, s: Vertex) -> Result<MstResult> {
    let mut a = RotateAdapter::new(g)?;
    mst_rotate(&mut a, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{GraphData, Layout, RotateGraph};
    use crate::oracle;

    fn weighted_g1() -> GraphData {
        GraphData::from_weighted_edges(4, false, &[(1, 2, 1), (1, 3, 4), (2, 3, 2), (3, 4, 3)]).unwrap()
    }

    #[test]
    fn examples() {
        let g1 = weighted_g1();
        let r = mst_rotate(&mut RotateGraph::new(&g1), 1).unwrap();
        assert_eq!(r.total, 6);
        assert_eq!(r.pairs(), vec![(1, 2), (2, 3), (3, 4)]);
        let tri = GraphData::from_weighted_edges(3, false, &[(1, 2, 1), (2, 3, 2), (1, 3, 3)]).unwrap();
        assert_eq!(mst_rotate(&mut RotateGraph::new(&tri), 1).unwrap().total, 3);
        let star = GraphData::from_weighted_edges(4, false, &[(1, 2, 5), (1, 3, 7), (1, 4, 9)]).unwrap();
        for s in 1..=4 {
            let r = mst_rotate(&mut RotateGraph::new(&star), s).unwrap();
            assert_eq!((r.total, r.edges.len()), (21, 3));
        }
    }

    #[test]
    fn implicit_examples() {
        for layout in [Layout::List, Layout::Array] {
            let g1 = weighted_g1();
            let mut ig = ImplicitGraph::new(&g1, layout);
            assert_eq!(mst_implicit(&mut ig, 1).unwrap().total, 6);
            assert!(ig.verify_structure(&g1));
            let square =
                GraphData::from_weighted_edges(4, false, &[(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 1, 1)]).unwrap();
            let mut ig = ImplicitGraph::new(&square, layout);
            assert_eq!(mst_implicit(&mut ig, 1).unwrap().total, oracle::mst_weight(&square));
            let edge = GraphData::from_weighted_edges(2, false, &[(1, 2, -4)]).unwrap();
            let mut ig = ImplicitGraph::new(&edge, layout);
            assert_eq!(mst_implicit(&mut ig, 1).unwrap().pairs(), vec![(1, 2)]);
        }
    }

    #[test]
    fn marking() {
        let g1 = weighted_g1();
        let mut g = RotateGraph::new(&g1);
        assert!(!is_marked(&mut g, 1).unwrap());
        g.rotate(1, Side::Out).unwrap();
        assert!(is_marked(&mut g, 1).unwrap());
        assert!(is_marked(&mut g, 4).is_err());
    }
}
