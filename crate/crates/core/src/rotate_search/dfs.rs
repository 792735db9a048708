use crate::encoding::{BitArray, Color, TritArray};
use crate::error::{Error, Result};
use crate::model::{RotateAccess, Side, Vertex};
use crate::traversal::TraversalOrder;

pub(crate) fn check_source<G: RotateAccess + ?Sized>(g: &G, s: Vertex) -> Result<()> {
    if s == 0 || s > g.vertex_count() {
        return Err(Error::VertexOutOfRange(s));
    }
    Ok(())
}

/// Lex-DFS with a packed colour array.
///
/// At `x` the list is scanned from its front for the first white neighbour,
/// which is then rotated to the front. Everything before the front has been
/// looked at already, so each list turns at most once on the way forward.
/// To backtrack, the parent is the gray vertex in `x`'s (in-)list whose
/// out-front is `x`: only the parent has `x` as its current child.
pub fn lex_dfs_trits<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex) -> Result<TraversalOrder> {
    check_source(g, s)?;
    let meter = g.meter();
    let mut color = TritArray::new(g.vertex_count(), &meter)?;
    // x, k, y
    let _vars = meter.words(3)?;
    let mut order = vec![s];
    color.set(s, Color::Gray)?;
    let mut x = s;
    loop {
        let mut next = None;
        for k in 0..g.degree(x, Side::Out) {
            let y = g.peek(x, Side::Out, k);
            if color.get(y)? == Color::White {
                next = Some(y);
                break;
            }
        }
        if let Some(y) = next {
            g.rotate_to(x, Side::Out, y)?;
            color.set(y, Color::Gray)?;
            order.push(y);
            x = y;
            continue;
        }
        color.set(x, Color::Black)?;
        if x == s {
            break;
        }
        x = find_parent(g, &color, x)?;
    }
    Ok(TraversalOrder::dfs(order))
}

fn find_parent<G: RotateAccess + ?Sized>(g: &mut G, color: &TritArray, x: Vertex) -> Result<Vertex> {
    for k in 0..g.degree(x, Side::In) {
        let p = g.peek(x, Side::In, k);
        if color.get(p)? == Color::Gray && g.front(p, Side::Out) == Some(x) {
            return Ok(p);
        }
    }
    unreachable!("gray vertex {x} has no parent")
}

/// DFS with one visited bit per vertex.
///
/// Undirected: a vertex discovered from `u` gets `u` rotated to its front.
/// From then on the list is turned one step at a time; the walk is over
/// when the front is a visited vertex whose own front is `x`, which can only
/// be the parent. The source remembers its initial front instead. The result
/// is a DFS order, but not the lex one.
///
/// Directed: out-lists are searched lex-style from the front and the parent
/// is rotated to the front of the child's in-list, so the result is the
/// lex-DFS order.
pub fn dfs_linear_bits<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex) -> Result<TraversalOrder> {
    check_source(g, s)?;
    if g.is_directed() {
        directed_linear(g, s)
    } else {
        undirected_linear(g, s)
    }
}

fn undirected_linear<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex) -> Result<TraversalOrder> {
    let meter = g.meter();
    let mut visited = BitArray::new(g.vertex_count(), &meter)?;
    // x, y, f0
    let _vars = meter.words(3)?;
    let mut order = vec![s];
    visited.set(s, true)?;
    let Some(f0) = g.front(s, Side::Out) else {
        return Ok(TraversalOrder::dfs(order));
    };
    let mut x = s;
    let mut y = f0;
    loop {
        if !visited.get(y)? {
            visited.set(y, true)?;
            order.push(y);
            g.rotate_to(y, Side::Out, x)?;
            x = y;
        } else if x != s && g.front(y, Side::Out) == Some(x) {
            // `y` is the parent: `x` is finished
            x = y;
        }
        g.rotate(x, Side::Out)?;
        y = g.front(x, Side::Out).expect("visited vertex has a neighbour");
        if x == s && y == f0 {
            break;
        }
    }
    Ok(TraversalOrder::dfs(order))
}

fn directed_linear<G: RotateAccess + ?Sized>(g: &mut G, s: Vertex) -> Result<TraversalOrder> {
    let meter = g.meter();
    let mut visited = BitArray::new(g.vertex_count(), &meter)?;
    // x, k, y
    let _vars = meter.words(3)?;
    let mut order = vec![s];
    visited.set(s, true)?;
    let mut x = s;
    loop {
        let mut next = None;
        for k in 0..g.degree(x, Side::Out) {
            let y = g.peek(x, Side::Out, k);
            if !visited.get(y)? {
                next = Some(y);
                break;
            }
        }
        if let Some(y) = next {
            g.rotate_to(x, Side::Out, y)?;
            g.rotate_to(y, Side::In, x)?;
            visited.set(y, true)?;
            order.push(y);
            x = y;
        } else if x == s {
            break;
        } else {
            x = g.front(x, Side::In).expect("discovered vertex has its parent in front");
        }
    }
    Ok(TraversalOrder::dfs(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{GraphData, RotateGraph};
    use crate::oracle;

    fn g1() -> GraphData {
        GraphData::from_edges(4, false, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    fn symmetric(g: &GraphData) -> GraphData {
        let mut arcs = Vec::new();
        for &(u, v, _) in g.edges() {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        GraphData::from_edges(g.vertex_count(), true, &arcs).unwrap()
    }

    #[test]
    fn lex_examples() {
        let mut g = RotateGraph::new(&g1());
        assert_eq!(lex_dfs_trits(&mut g, 1).unwrap().order, vec![1, 2, 3, 4]);
        let single = GraphData::from_edges(1, false, &[]).unwrap();
        assert_eq!(lex_dfs_trits(&mut RotateGraph::new(&single), 1).unwrap().order, vec![1]);
        let star = GraphData::from_edges(4, false, &[(1, 3), (1, 2), (1, 4)]).unwrap();
        assert_eq!(lex_dfs_trits(&mut RotateGraph::new(&star), 1).unwrap().order, vec![1, 3, 2, 4]);
    }

    #[test]
    fn lex_directed() {
        let d = symmetric(&g1());
        let mut g = RotateGraph::new(&d);
        assert_eq!(lex_dfs_trits(&mut g, 1).unwrap().order, oracle::lex_dfs(&d, 1));
        assert!(g.verify_structure(&d));
    }

    #[test]
    fn linear_examples() {
        let d = symmetric(&g1());
        assert_eq!(dfs_linear_bits(&mut RotateGraph::new(&d), 1).unwrap().order, vec![1, 2, 3, 4]);
        let path = GraphData::from_edges(3, false, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(dfs_linear_bits(&mut RotateGraph::new(&path), 1).unwrap().order, vec![1, 2, 3]);
        let mut g = RotateGraph::new(&g1());
        let out = dfs_linear_bits(&mut g, 1).unwrap();
        assert!(oracle::check_general_dfs(&g1(), 1, &out.order));
        assert!(g.verify_structure(&g1()));
    }

    #[test]
    fn isolated_source() {
        let g = GraphData::from_edges(3, false, &[(2, 3)]).unwrap();
        assert_eq!(dfs_linear_bits(&mut RotateGraph::new(&g), 1).unwrap().order, vec![1]);
        assert_eq!(lex_dfs_trits(&mut RotateGraph::new(&g), 1).unwrap().order, vec![1]);
    }

    #[test]
    fn bad_source() {
        let mut g = RotateGraph::new(&g1());
        assert!(lex_dfs_trits(&mut g, 5).is_err());
    }
}
