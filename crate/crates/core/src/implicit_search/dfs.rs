use super::RotateAdapter;
use crate::encoding::codec::{decode_bit, encode_bit};
use crate::error::{Error, Result};
use crate::model::{ImplicitGraph, Layout, Side, Vertex};
use crate::rotate_search::{directed_lex_logspace, undirected_logspace, Anchor};
use crate::traversal::TraversalOrder;

pub(crate) fn check_source(g: &ImplicitGraph, s: Vertex) -> Result<()> {
    if s == 0 || s > g.vertex_count() {
        return Err(Error::VertexOutOfRange(s));
    }
    Ok(())
}

/// Lex-DFS in `O(lg n)` bits over the rotate-model simulation.
///
/// * Undirected, list layout: the log-space colour tests with the parent
///   moved to the front of a discovered vertex without disturbing the order
///   of the other elements, so each list is still scanned in input order.
/// * Undirected, array layout: lists are sorted by the simulation, every
///   scan starts at the minimum and a finished vertex rotates its parent to
///   the front. The result is lex-DFS with respect to sorted lists.
/// * Directed: out-lists are never rotated and a cursor walks the current
///   one; parents are rotated to in-fronts.
///
/// The source is assumed to reach every vertex (`complete` is false
/// otherwise).
pub fn lex_dfs_implicit(g: &mut ImplicitGraph, s: Vertex) -> Result<TraversalOrder> {
    check_source(g, s)?;
    let layout = g.layout();
    let mut a = RotateAdapter::new(g)?;
    if a.graph().is_directed() {
        directed_lex_logspace(&mut a, s)
    } else if layout == Layout::List {
        undirected_logspace(&mut a, s, Anchor::MoveToFront)
    } else {
        undirected_logspace(&mut a, s, Anchor::Min)
    }
}

/// General DFS in `O(lg n)` bits, storing visited bits in element order.
///
/// Undirected graphs:
/// * degree >= 3: on discovery the parent is swapped to position 1 and the
///   pair at positions 2-3 is turned descending to mark the vertex visited;
/// * degree 2: the pair at positions 1-2 is the visited bit, so there is no
///   room for a parent; such vertices are walked as whole chains from the
///   vertex that enters them to the first vertex of another degree;
/// * degree 1: no bit, the vertex is emitted when its neighbour reaches it.
///
/// Backtracking reads the parent at position 1 and, if it is a chain
/// vertex, walks the chain back to the vertex that entered it. The source is
/// recognised by its label.
///
/// Directed graphs run the directed log-space search over the list
/// simulation.
pub fn dfs_implicit_logspace(g: &mut ImplicitGraph, s: Vertex) -> Result<TraversalOrder> {
    check_source(g, s)?;
    if g.is_directed() {
        let mut a = RotateAdapter::new(g)?;
        return directed_lex_logspace(&mut a, s);
    }
    let n = g.vertex_count();
    let meter = g.meter();
    // s, x, k, y, prev, cur, v
    let _vars = meter.words(7)?;
    for v in 1..=n {
        match g.degree(v, Side::Out) {
            2 => encode_bit(g, v, Side::Out, 1, false)?,
            d if d >= 3 => encode_bit(g, v, Side::Out, 2, false)?,
            _ => {}
        }
    }
    let mut order = vec![s];
    let mut x = s;
    let mut k = first_child_position(g, s, x);
    loop {
        if k <= g.degree(x, Side::Out) {
            let y = g.cursor_read(x, Side::Out, k)?;
            k += 1;
            if visited(g, s, y)? {
                continue;
            }
            match g.degree(y, Side::Out) {
                1 => order.push(y),
                2 => {
                    if let Some(z) = walk_chain(g, s, x, y, &mut order)? {
                        x = z;
                        k = 2;
                    }
                }
                _ => {
                    enter(g, x, y)?;
                    order.push(y);
                    x = y;
                    k = 2;
                }
            }
            continue;
        }
        if x == s {
            break;
        }
        let (z, child) = climb(g, s, x)?;
        k = g.position_of(z, Side::Out, child).expect("child is a neighbour") + 1;
        x = z;
    }
    Ok(TraversalOrder::dfs(order))
}

/// Scans start at position 1 for the source and after the parent otherwise.
fn first_child_position(g: &ImplicitGraph, s: Vertex, x: Vertex) -> usize {
    if x == s || g.degree(x, Side::Out) < 3 {
        1
    } else {
        2
    }
}

fn visited(g: &mut ImplicitGraph, s: Vertex, y: Vertex) -> Result<bool> {
    if y == s {
        return Ok(true);
    }
    match g.degree(y, Side::Out) {
        1 => Ok(false),
        2 => decode_bit(g, y, Side::Out, 1),
        _ => decode_bit(g, y, Side::Out, 2),
    }
}

/// Marks a vertex of degree >= 3 visited with `parent` at position 1.
fn enter(g: &mut ImplicitGraph, parent: Vertex, y: Vertex) -> Result<()> {
    let j = g.position_of(y, Side::Out, parent).expect("parent is a neighbour");
    g.swap(y, Side::Out, 1, j)?;
    encode_bit(g, y, Side::Out, 2, true)
}

/// The neighbour of the degree-2 vertex `c` that is not `from`.
fn other(g: &mut ImplicitGraph, c: Vertex, from: Vertex) -> Result<Vertex> {
    let a = g.read_at(c, Side::Out, 1)?;
    if a != from {
        return Ok(a);
    }
    g.cursor_read(c, Side::Out, 2)
}

/// Emits the unvisited chain that starts at `first` (entered from `x`) and
/// its exit. Returns the exit if the search should continue there.
fn walk_chain(
    g: &mut ImplicitGraph,
    s: Vertex,
    x: Vertex,
    first: Vertex,
    order: &mut Vec<Vertex>,
) -> Result<Option<Vertex>> {
    let mut prev = x;
    let mut cur = first;
    loop {
        encode_bit(g, cur, Side::Out, 1, true)?;
        order.push(cur);
        let next = other(g, cur, prev)?;
        if visited(g, s, next)? {
            return Ok(None);
        }
        match g.degree(next, Side::Out) {
            1 => {
                order.push(next);
                return Ok(None);
            }
            2 => {
                prev = cur;
                cur = next;
            }
            _ => {
                enter(g, cur, next)?;
                order.push(next);
                return Ok(Some(next));
            }
        }
    }
}

/// The vertex whose scan resumes when `x` is finished, and the neighbour
/// of it through which `x` was reached.
fn climb(g: &mut ImplicitGraph, s: Vertex, x: Vertex) -> Result<(Vertex, Vertex)> {
    let mut prev = x;
    let mut cur = g.read_at(x, Side::Out, 1)?;
    while cur != s && g.degree(cur, Side::Out) == 2 {
        let next = other(g, cur, prev)?;
        prev = cur;
        cur = next;
    }
    Ok((cur, prev))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{family, Family};
    use crate::model::GraphData;
    use crate::oracle;

    fn g1() -> GraphData {
        GraphData::from_edges(4, false, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn lex_examples() {
        for layout in [Layout::List, Layout::Array] {
            let mut g = ImplicitGraph::new(&g1(), layout);
            assert_eq!(lex_dfs_implicit(&mut g, 1).unwrap().order, vec![1, 2, 3, 4]);
            assert!(g.verify_structure(&g1()));
        }
        let star = GraphData::from_edges(4, false, &[(1, 3), (1, 2), (1, 4)]).unwrap();
        let mut g = ImplicitGraph::new(&star, Layout::List);
        assert_eq!(lex_dfs_implicit(&mut g, 1).unwrap().order, vec![1, 3, 2, 4]);
        let edge = family(Family::Path, 2).unwrap();
        let mut g = ImplicitGraph::new(&edge, Layout::List);
        assert_eq!(lex_dfs_implicit(&mut g, 1).unwrap().order, vec![1, 2]);
    }

    #[test]
    fn logspace_examples() {
        let path = family(Family::Path, 5).unwrap();
        let mut g = ImplicitGraph::new(&path, Layout::List);
        assert_eq!(dfs_implicit_logspace(&mut g, 1).unwrap().order, vec![1, 2, 3, 4, 5]);
        for d in [g1(), family(Family::Complete, 4).unwrap(), family(Family::Cycle, 6).unwrap()] {
            for s in 1..=d.vertex_count() {
                let mut g = ImplicitGraph::new(&d, Layout::List);
                let out = dfs_implicit_logspace(&mut g, s).unwrap();
                assert!(oracle::check_general_dfs(&d, s, &out.order), "{:?}", out.order);
                assert!(g.verify_structure(&d));
            }
        }
    }

    #[test]
    fn visited_bits_decode_after_run() {
        let k4 = family(Family::Complete, 4).unwrap();
        let mut g = ImplicitGraph::new(&k4, Layout::Array);
        dfs_implicit_logspace(&mut g, 1).unwrap();
        for v in 2..=4 {
            assert!(visited(&mut g, 1, v).unwrap());
        }
    }
}
