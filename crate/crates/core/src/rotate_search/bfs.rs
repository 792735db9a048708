//! Breadth-first search that stores parents as list fronts.
//!
//! A vertex discovered from `v` gets `v` rotated to its front (its in-front
//! for digraphs) and that list is never rotated again, so following fronts
//! from any discovered vertex climbs the BFS tree. Levels are not stored:
//! a vertex is at level `d` iff that climb reaches the source in exactly `d`
//! steps. Each phase scans labels in increasing order for level-`d`
//! vertices and expands them.

use super::dfs::check_source;
use crate::encoding::BitArray;
use crate::error::Result;
use crate::model::{RotateAccess, Side, Vertex};
use crate::traversal::TraversalOrder;

fn parent_side<G: RotateAccess + ?Sized>(g: &G) -> Side {
    if g.is_directed() {
        Side::In
    } else {
        Side::Out
    }
}

/// Steps from `v` to `s` along fronts, if at most `limit`.
fn climb<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex, v: Vertex, limit: usize) -> Option<usize> {
    let side = parent_side(g);
    let mut w = v;
    for steps in 0..=limit {
        if w == s {
            return Some(steps);
        }
        if steps < limit {
            w = g.front(w, side)?;
        }
    }
    None
}

/// BFS with one visited bit per vertex.
pub fn bfs_linear_bits<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex) -> Result<TraversalOrder> {
    check_source(g, s)?;
    let n = g.vertex_count();
    let side = parent_side(g);
    let meter = g.meter();
    let mut visited = BitArray::new(n, &meter)?;
    // s, dist, v, k, y, found
    let _vars = meter.words(6)?;
    visited.set(s, true)?;
    let mut order = vec![s];
    let mut levels = vec![0];
    let mut dist = 0;
    loop {
        let mut found = false;
        for v in 1..=n {
            if !visited.get(v)? || climb(g, s, v, dist) != Some(dist) {
                continue;
            }
            for k in 0..g.degree(v, Side::Out) {
                let y = g.peek(v, Side::Out, k);
                if !visited.get(y)? {
                    visited.set(y, true)?;
                    g.rotate_to(y, side, v)?;
                    order.push(y);
                    levels.push(dist + 1);
                    found = true;
                }
            }
        }
        if !found {
            break;
        }
        dist += 1;
    }
    Ok(TraversalOrder::bfs(order, levels))
}

/// BFS in `O(lg n)` bits.
///
/// Without visited bits, a neighbour `y` of the level-`d` expander `v` counts
/// as discovered iff it climbs to the source within `d` steps, or its front
/// is a level-`d` vertex smaller than `v` (it was found earlier in this
/// phase). An undiscovered vertex can pass neither test: its climb is longer
/// than `d`, and a level-`d` neighbour smaller than `v` would already have
/// discovered it.
///
/// The source is assumed to reach every vertex; otherwise `complete` is
/// false.
pub fn bfs_logspace<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex) -> Result<TraversalOrder> {
    check_source(g, s)?;
    let n = g.vertex_count();
    let side = parent_side(g);
    let meter = g.meter();
    // s, dist, v, k, y, w, steps, found
    let _vars = meter.words(8)?;
    let mut order = vec![s];
    let mut levels = vec![0];
    let mut dist = 0;
    loop {
        let mut found = false;
        for v in 1..=n {
            if climb(g, s, v, dist) != Some(dist) {
                continue;
            }
            for k in 0..g.degree(v, Side::Out) {
                let y = g.peek(v, Side::Out, k);
                if climb(g, s, y, dist).is_some() {
                    continue;
                }
                if let Some(w) = g.front(y, side) {
                    if w < v && climb(g, s, w, dist) == Some(dist) {
                        continue;
                    }
                }
                g.rotate_to(y, side, v)?;
                order.push(y);
                levels.push(dist + 1);
                found = true;
            }
        }
        if !found {
            break;
        }
        dist += 1;
    }
    Ok(TraversalOrder::bfs(order, levels).require_all(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{family, Family};
    use crate::model::{GraphData, RotateGraph};

    fn g1() -> GraphData {
        GraphData::from_edges(4, false, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    fn levels_by_label(t: &TraversalOrder, n: usize) -> Vec<Option<usize>> {
        (1..=n).map(|v| t.level_of(v)).collect()
    }

    #[test]
    fn linear_examples() {
        let out = bfs_linear_bits(&mut RotateGraph::new(&g1()), 1).unwrap();
        assert_eq!(levels_by_label(&out, 4), vec![Some(0), Some(1), Some(1), Some(2)]);
        let star = family(Family::Star, 5).unwrap();
        let out = bfs_linear_bits(&mut RotateGraph::new(&star), 1).unwrap();
        assert!((2..=5).all(|v| out.level_of(v) == Some(1)));
        let iso = GraphData::from_edges(3, false, &[(1, 2)]).unwrap();
        assert_eq!(bfs_linear_bits(&mut RotateGraph::new(&iso), 1).unwrap().order, vec![1, 2]);
    }

    #[test]
    fn log_examples() {
        let c4 = family(Family::Cycle, 4).unwrap();
        let out = bfs_logspace(&mut RotateGraph::new(&c4), 1).unwrap();
        assert_eq!(levels_by_label(&out, 4), vec![Some(0), Some(1), Some(2), Some(1)]);
        let k4 = family(Family::Complete, 4).unwrap();
        let out = bfs_logspace(&mut RotateGraph::new(&k4), 1).unwrap();
        assert_eq!(out.levels, Some(vec![0, 1, 1, 1]));
        let path = family(Family::Path, 3).unwrap();
        assert_eq!(bfs_logspace(&mut RotateGraph::new(&path), 1).unwrap().order, vec![1, 2, 3]);
    }

    #[test]
    fn log_flags_unreached() {
        let g = GraphData::from_edges(3, false, &[(1, 2)]).unwrap();
        let out = bfs_logspace(&mut RotateGraph::new(&g), 1).unwrap();
        assert_eq!(out.order, vec![1, 2]);
        assert!(!out.complete);
    }
}
