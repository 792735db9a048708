//! DFS with a constant number of words and no colour array.
//!
//! Colours are recovered from the list fronts. A gray vertex's out-front is
//! its current child, so the gray path is a walk of fronts from the source.
//! A finished vertex is told apart from an unvisited one by following
//! parent pointers (fronts or in-fronts) up to the gray path and asking
//! whether the vertex where the walk joins the path was already passed by
//! the gray vertex's scan.

use super::dfs::check_source;
use crate::error::Result;
use crate::model::{RotateAccess, Side, Vertex};
use crate::traversal::TraversalOrder;

/// What marks the start of a vertex's scan in the undirected variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Anchor {
    /// The parent is rotated to the child's front on discovery.
    RotateTo,
    /// Like `RotateTo`, but the parent is moved to the front without
    /// disturbing the order of the other elements, which keeps lex order.
    MoveToFront,
    /// Lists start with their minimum at the front and are scanned from
    /// there; a finished vertex rotates its parent to the front.
    Min,
}

/// General DFS in `O(lg n)` bits.
///
/// Undirected graphs rotate the parent to each discovered vertex's front.
/// Directed graphs first bring the smallest label of every out-list to the
/// front and rotate the parent to the front of the child's in-list.
///
/// The source is assumed to reach every vertex; if it does not, the
/// reachable part is emitted and `complete` is false.
pub fn dfs_logspace<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex) -> Result<TraversalOrder> {
    check_source(g, s)?;
    if g.is_directed() {
        directed_min_logspace(g, s)
    } else {
        undirected_logspace(g, s, Anchor::RotateTo)
    }
}

fn out_front<G: RotateAccess + ?Sized>(g: &mut G, v: Vertex) -> Vertex {
    g.front(v, Side::Out).expect("list on the gray path is non-empty")
}

/// True iff `y` is one of the first `d` vertices of the gray path from `s`.
pub(crate) fn on_gray_path<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex, d: usize, y: Vertex) -> bool {
    let mut w = s;
    for i in 0..d {
        if w == y {
            return true;
        }
        if i + 1 < d {
            w = out_front(g, w);
        }
    }
    false
}

/// Vertex at depth `k` of the gray path.
fn gray_at<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex, k: usize) -> Vertex {
    let mut w = s;
    for _ in 0..k {
        w = out_front(g, w);
    }
    w
}

fn smallest<G: RotateAccess + ?Sized>(g: &mut G, v: Vertex, side: Side) -> Option<Vertex> {
    (0..g.degree(v, side)).map(|k| g.peek(v, side, k)).min()
}

/// Whether `z` lies in the already scanned stretch of `x`'s list: strictly
/// after the anchor `a` and before the front, cyclically.
fn scanned<G: RotateAccess + ?Sized>(g: &mut G, x: Vertex, side: Side, a: Vertex, z: Vertex) -> bool {
    let ka = g.offset_of(x, side, a).expect("anchor is in the list");
    let kz = g.offset_of(x, side, z).expect("walk arrived through the list");
    g.count_comparisons(1);
    0 < ka && ka <= kz
}

pub(crate) fn undirected_logspace<G: RotateAccess + ?Sized>(
    g: &mut G,
    s: Vertex,
    anchor: Anchor,
) -> Result<TraversalOrder> {
    let n = g.vertex_count();
    let meter = g.meter();
    // s, x, y, p, a, d, max, fresh
    let _vars = meter.words(8)?;
    let mut order = vec![s];
    let Some(f0) = g.front(s, Side::Out) else {
        return Ok(TraversalOrder::dfs(order).require_all(n));
    };
    let mut x = s;
    let mut p = 0;
    let mut a = f0;
    let mut d = 0;
    let mut max = 0;
    let mut fresh = true;
    loop {
        let mut finished = false;
        if !fresh {
            g.rotate(x, Side::Out)?;
            finished = out_front(g, x) == a;
        }
        fresh = false;
        if finished {
            if x == s {
                break;
            }
            if anchor == Anchor::Min {
                g.rotate_to(x, Side::Out, p)?;
            }
            x = p;
            d -= 1;
            p = if d > 0 { gray_at(g, s, d - 1) } else { 0 };
            a = match anchor {
                Anchor::Min => smallest(g, x, Side::Out).expect("non-empty"),
                _ if x == s => f0,
                _ => p,
            };
            continue;
        }
        let y = out_front(g, x);
        if y == p || on_gray_path(g, s, d, y) {
            continue;
        }
        if undirected_black(g, x, p, a, d, max, y) {
            continue;
        }
        match anchor {
            Anchor::RotateTo => {
                g.rotate_to(y, Side::Out, x)?;
            }
            Anchor::MoveToFront => g.move_to_front(y, Side::Out, x)?,
            Anchor::Min => {}
        }
        order.push(y);
        p = x;
        x = y;
        d += 1;
        max = max.max(d);
        if anchor == Anchor::Min {
            a = out_front(g, x);
            fresh = true;
        } else {
            a = p;
        }
    }
    Ok(TraversalOrder::dfs(order).require_all(n))
}

/// `y` is finished iff its chain of fronts reaches `x` within `max - d`
/// steps through a vertex `x` has already scanned.
fn undirected_black<G: RotateAccess + ?Sized>(
    g: &mut G,
    x: Vertex,
    p: Vertex,
    a: Vertex,
    d: usize,
    max: usize,
    y: Vertex,
) -> bool {
    let mut z = y;
    for _ in 0..max - d {
        let w = out_front(g, z);
        if w == x {
            return z != p && scanned(g, x, Side::Out, a, z);
        }
        z = w;
    }
    false
}

fn directed_min_logspace<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex) -> Result<TraversalOrder> {
    let n = g.vertex_count();
    let meter = g.meter();
    // s, x, y, a, d, max, fresh
    let _vars = meter.words(7)?;
    for v in 1..=n {
        if let Some(m) = smallest(g, v, Side::Out) {
            g.rotate_to(v, Side::Out, m)?;
        }
    }
    let mut order = vec![s];
    let mut x = s;
    let mut a = g.front(s, Side::Out).unwrap_or(0);
    let mut d = 0;
    let mut max = 0;
    let mut fresh = true;
    loop {
        let mut finished = g.degree(x, Side::Out) == 0;
        if !finished && !fresh {
            g.rotate(x, Side::Out)?;
            finished = out_front(g, x) == a;
        }
        fresh = false;
        if finished {
            if x == s {
                break;
            }
            x = g.front(x, Side::In).expect("parent sits at the in-front");
            d -= 1;
            a = smallest(g, x, Side::Out).expect("non-empty");
            continue;
        }
        let y = out_front(g, x);
        if on_gray_path(g, s, d + 1, y) || directed_black(g, s, x, a, d, max, y) {
            continue;
        }
        g.rotate_to(y, Side::In, x)?;
        order.push(y);
        x = y;
        d += 1;
        max = max.max(d);
        fresh = true;
        a = g.front(x, Side::Out).unwrap_or(0);
    }
    Ok(TraversalOrder::dfs(order).require_all(n))
}

/// Follows in-fronts from `y` to the first gray vertex `z`; `y` is finished
/// iff the vertex `c` just before `z` has already been scanned by `z`.
fn directed_black<G: RotateAccess + ?Sized>(
    g: &mut G,
    s: Vertex,
    x: Vertex,
    a: Vertex,
    d: usize,
    max: usize,
    y: Vertex,
) -> bool {
    let mut c = y;
    for _ in 0..max {
        let Some(z) = g.front(c, Side::In) else {
            return false;
        };
        if on_gray_path(g, s, d + 1, z) {
            let za = if z == x {
                a
            } else {
                smallest(g, z, Side::Out).expect("non-empty")
            };
            return scanned(g, z, Side::Out, za, c);
        }
        c = z;
    }
    false
}

/// Exact lex-DFS for directed graphs in `O(lg n)` bits that never rotates
/// an out-list.
///
/// The current vertex keeps a cursor into its out-list. Parents are
/// rotated to the front of the child's in-list, so the gray path is the
/// chain of in-fronts from `x`. A candidate `y` is finished iff its in-front
/// chain meets the gray path at some `z` through a child `c` that comes
/// before `z`'s current child in `z`'s out-list.
pub(crate) fn directed_lex_logspace<G: RotateAccess + ?Sized>(
    g: &mut G,
    s: Vertex,
) -> Result<TraversalOrder> {
    check_source(g, s)?;
    let n = g.vertex_count();
    let meter = g.meter();
    // s, x, y, k, d, max
    let _vars = meter.words(6)?;
    let mut order = vec![s];
    let mut x = s;
    let mut k = 0;
    let mut d = 0;
    let mut max = 0;
    loop {
        if k < g.degree(x, Side::Out) {
            let y = g.peek(x, Side::Out, k);
            k += 1;
            if path_child(g, x, d, y, y).is_some() || upward_black(g, x, d, max, y) {
                continue;
            }
            g.rotate_to(y, Side::In, x)?;
            order.push(y);
            x = y;
            k = 0;
            d += 1;
            max = max.max(d);
        } else {
            if x == s {
                break;
            }
            let p = g.front(x, Side::In).expect("parent sits at the in-front");
            k = g.offset_of(p, Side::Out, x).expect("child is an out-neighbour") + 1;
            x = p;
            d -= 1;
        }
    }
    Ok(TraversalOrder::dfs(order).require_all(n))
}

/// If `z` is on the gray path `x, parent(x), ..., s` (depth `d` below the
/// source), the vertex below it on the path, with `below_x` standing in for
/// the child of `x`.
fn path_child<G: RotateAccess + ?Sized>(
    g: &mut G,
    x: Vertex,
    d: usize,
    z: Vertex,
    below_x: Vertex,
) -> Option<Vertex> {
    let mut prev = below_x;
    let mut w = x;
    for i in 0..=d {
        if w == z {
            return Some(prev);
        }
        if i < d {
            prev = w;
            w = g.front(w, Side::In).expect("gray path vertex has its parent in front");
        }
    }
    None
}

fn upward_black<G: RotateAccess + ?Sized>(g: &mut G, x: Vertex, d: usize, max: usize, y: Vertex) -> bool {
    let mut c = y;
    for _ in 0..max {
        let Some(z) = g.front(c, Side::In) else {
            return false;
        };
        if let Some(child) = path_child(g, x, d, z, y) {
            // which of c and the current child comes first in z's out-list
            for k in 0..g.degree(z, Side::Out) {
                let e = g.peek(z, Side::Out, k);
                if e == c || e == child {
                    g.count_comparisons(1);
                    return e == c && c != child;
                }
            }
            return false;
        }
        c = z;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{GraphData, RotateGraph};
    use crate::oracle;

    fn g1() -> GraphData {
        GraphData::from_edges(4, false, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    fn cycle(n: usize) -> GraphData {
        let edges: Vec<_> = (1..=n).map(|v| (v, v % n + 1)).collect();
        GraphData::from_edges(n, false, &edges).unwrap()
    }

    #[test]
    fn examples() {
        let c = cycle(4);
        let out = dfs_logspace(&mut RotateGraph::new(&c), 1).unwrap();
        assert!(out.complete);
        assert!(oracle::check_general_dfs(&c, 1, &out.order));
        let path = GraphData::from_edges(3, false, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(dfs_logspace(&mut RotateGraph::new(&path), 1).unwrap().order, vec![1, 2, 3]);
    }

    #[test]
    fn gray_query() {
        let mut g = RotateGraph::new(&g1());
        g.rotate_to(1, Side::Out, 2).unwrap();
        g.rotate_to(2, Side::Out, 3).unwrap();
        assert!(on_gray_path(&mut g, 1, 2, 1));
        assert!(on_gray_path(&mut g, 1, 2, 2));
        assert!(!on_gray_path(&mut g, 1, 2, 4));
    }

    #[test]
    fn disconnected_is_flagged() {
        let g = GraphData::from_edges(4, false, &[(1, 2), (3, 4)]).unwrap();
        let out = dfs_logspace(&mut RotateGraph::new(&g), 1).unwrap();
        assert_eq!(out.order, vec![1, 2]);
        assert!(!out.complete);
    }

    #[test]
    fn directed_variants() {
        let arcs = [(1, 3), (1, 2), (2, 4), (3, 4), (4, 1), (4, 5), (5, 2), (3, 5)];
        let d = GraphData::from_edges(5, true, &arcs).unwrap();
        let mut g = RotateGraph::new(&d);
        let out = dfs_logspace(&mut g, 1).unwrap();
        assert!(out.complete);
        assert!(oracle::check_general_dfs(&d, 1, &out.order));
        assert!(g.verify_structure(&d));
        let mut g = RotateGraph::new(&d);
        let out = directed_lex_logspace(&mut g, 1).unwrap();
        assert_eq!(out.order, oracle::lex_dfs(&d, 1));
    }
}
