use serde::Serialize;

use super::dfs::check_source;
use super::RotateAdapter;
use crate::encoding::codec::{decode_bit, decode_color4, decode_ptr, encode_bit, encode_color4, encode_ptr};
use crate::encoding::Color4;
use crate::error::{Error, Result};
use crate::model::{lg_ceil, ImplicitGraph, Side, Vertex};
use crate::rotate_search::bfs_logspace;
use crate::traversal::TraversalOrder;

/// BFS in `O(lg n)` bits with visited bits and parents in element order.
///
/// Undirected graphs use the same layout as the implicit DFS: a vertex of
/// degree >= 3 keeps its parent at position 1 and a visited bit at 2-3, a
/// degree-2 vertex keeps only a visited bit at 1-2, and a degree-1 vertex is
/// emitted on discovery and never expanded. A vertex's level is the length
/// of its climb to the source. The climb leaves a degree-2 vertex through
/// the neighbour it did not arrive from; starting at a degree-2 vertex both
/// neighbours are tried and the shorter climb wins, which is exact because
/// no walk is shorter than the BFS distance.
///
/// Directed graphs run the rotate-model log-space BFS over the list
/// simulation.
pub fn bfs_implicit_logspace(g: &mut ImplicitGraph, s: Vertex) -> Result<TraversalOrder> {
    check_source(g, s)?;
    if g.is_directed() {
        let mut a = RotateAdapter::new(g)?;
        return bfs_logspace(&mut a, s);
    }
    let n = g.vertex_count();
    let meter = g.meter();
    // s, dist, v, k, y, found, w, came, steps
    let _vars = meter.words(9)?;
    for v in 1..=n {
        match g.degree(v, Side::Out) {
            2 => encode_bit(g, v, Side::Out, 1, false)?,
            d if d >= 3 => encode_bit(g, v, Side::Out, 2, false)?,
            _ => {}
        }
    }
    let mut order = vec![s];
    let mut levels = vec![0];
    let mut dist = 0;
    loop {
        let mut found = false;
        for v in 1..=n {
            let expand = if v == s {
                dist == 0
            } else {
                g.degree(v, Side::Out) >= 2 && visited(g, s, v)? && level(g, s, v, dist)? == Some(dist)
            };
            if !expand {
                continue;
            }
            for k in 1..=g.degree(v, Side::Out) {
                let y = g.cursor_read(v, Side::Out, k)?;
                if visited(g, s, y)? {
                    continue;
                }
                match g.degree(y, Side::Out) {
                    1 => {}
                    2 => encode_bit(g, y, Side::Out, 1, true)?,
                    _ => {
                        let j = g.position_of(y, Side::Out, v).expect("adjacent");
                        g.swap(y, Side::Out, 1, j)?;
                        encode_bit(g, y, Side::Out, 2, true)?;
                    }
                }
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
    Ok(TraversalOrder::bfs(order, levels))
}

fn visited(g: &mut ImplicitGraph, s: Vertex, y: Vertex) -> Result<bool> {
    if y == s {
        return Ok(true);
    }
    match g.degree(y, Side::Out) {
        // a leaf is only ever seen from its single neighbour
        1 => Ok(false),
        2 => decode_bit(g, y, Side::Out, 1),
        _ => decode_bit(g, y, Side::Out, 2),
    }
}

/// Level of a visited `v`, if at most `limit`.
fn level(g: &mut ImplicitGraph, s: Vertex, v: Vertex, limit: usize) -> Result<Option<usize>> {
    if v == s {
        return Ok(Some(0));
    }
    if limit == 0 {
        return Ok(None);
    }
    let starts = if g.degree(v, Side::Out) == 2 {
        vec![g.read_at(v, Side::Out, 1)?, g.cursor_read(v, Side::Out, 2)?]
    } else {
        vec![g.read_at(v, Side::Out, 1)?]
    };
    let mut best = None;
    for w in starts {
        if let Some(l) = climb(g, s, w, v, limit - 1)? {
            best = Some(best.map_or(l + 1, |b: usize| b.min(l + 1)));
        }
    }
    Ok(best)
}

/// Steps from `w` to `s` when `w` was reached from `came`, if at most `limit`.
fn climb(g: &mut ImplicitGraph, s: Vertex, mut w: Vertex, mut came: Vertex, limit: usize) -> Result<Option<usize>> {
    for steps in 0..=limit {
        if w == s {
            return Ok(Some(steps));
        }
        if steps == limit {
            break;
        }
        let next = match g.degree(w, Side::Out) {
            1 | 2 => {
                let a = g.read_at(w, Side::Out, 1)?;
                if a != came {
                    a
                } else if g.degree(w, Side::Out) == 2 {
                    g.cursor_read(w, Side::Out, 2)?
                } else {
                    return Ok(None);
                }
            }
            _ => g.read_at(w, Side::Out, 1)?,
        };
        came = w;
        w = next;
    }
    Ok(None)
}

fn check_no_degree_two(g: &ImplicitGraph) -> Result<()> {
    let side = Side::Out;
    for v in 1..=g.vertex_count() {
        let d = g.degree(v, side);
        if g.is_directed() && d < 3 {
            return Err(Error::DegreeTooSmall {
                vertex: v,
                degree: d,
                needed: 3,
            });
        }
        if d == 2 {
            return Err(Error::DegreeTwo(v));
        }
    }
    Ok(())
}

/// Vertices that carry a colour.
fn colored(g: &ImplicitGraph, v: Vertex) -> bool {
    g.degree(v, Side::Out) >= 3
}

/// BFS with four colours kept in the order of each list's first three
/// elements.
///
/// Each phase has an exploration pass, which scans labels upwards and turns
/// the white neighbours of every gray1 vertex gray2 and the vertex itself
/// black, and a consolidation pass, which turns gray2 into gray1 and emits
/// it. Degree-1 vertices are emitted when their neighbour explores them.
///
/// Undirected graphs may not contain degree-2 vertices; directed graphs
/// need every out-degree to be at least 3.
pub fn bfs_implicit_4color(g: &mut ImplicitGraph, s: Vertex) -> Result<TraversalOrder> {
    check_source(g, s)?;
    check_no_degree_two(g)?;
    let n = g.vertex_count();
    let meter = g.meter();
    // s, dist, v, k, y, found
    let _vars = meter.words(6)?;
    for v in 1..=n {
        if colored(g, v) {
            encode_color4(g, v, Side::Out, Color4::White)?;
        }
    }
    let mut order = vec![s];
    let mut levels = vec![0];
    let mut dist = 0;
    if colored(g, s) {
        encode_color4(g, s, Side::Out, Color4::Gray1)?;
    } else if g.degree(s, Side::Out) == 1 {
        let y = g.read_at(s, Side::Out, 1)?;
        if colored(g, y) {
            encode_color4(g, y, Side::Out, Color4::Gray1)?;
        }
        order.push(y);
        levels.push(1);
        dist = 1;
    }
    loop {
        for v in 1..=n {
            if !colored(g, v) || decode_color4(g, v, Side::Out)? != Color4::Gray1 {
                continue;
            }
            for k in 1..=g.degree(v, Side::Out) {
                let y = g.cursor_read(v, Side::Out, k)?;
                if colored(g, y) {
                    if decode_color4(g, y, Side::Out)? == Color4::White {
                        encode_color4(g, y, Side::Out, Color4::Gray2)?;
                    }
                } else if y != s {
                    order.push(y);
                    levels.push(dist + 1);
                }
            }
            encode_color4(g, v, Side::Out, Color4::Black)?;
        }
        let mut found = false;
        for v in 1..=n {
            if colored(g, v) && decode_color4(g, v, Side::Out)? == Color4::Gray2 {
                encode_color4(g, v, Side::Out, Color4::Gray1)?;
                order.push(v);
                levels.push(dist + 1);
                found = true;
            }
        }
        if !found {
            break;
        }
        dist += 1;
    }
    Ok(TraversalOrder::bfs(order, levels))
}

/// Work spent walking the gray1 list in one phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PhaseCost {
    /// Gray1 vertices on the list.
    pub frontier: usize,
    /// Element reads spent decoding the list's pointers.
    pub pointer_reads: u64,
}

/// Smallest degree [`bfs_implicit_ptrlist`] accepts for `n` vertices.
pub fn ptrlist_min_degree(n: usize) -> usize {
    2 * lg_ceil(n) as usize + 3
}

/// Four-colour BFS whose gray vertices are threaded into linked lists, so a
/// phase touches only its frontier instead of scanning all labels.
///
/// Each vertex stores, after its colour triple, a pointer of `⌈lg n⌉` bits
/// (the next vertex's label minus one) in positions `4..=3 + 2⌈lg n⌉`. The
/// last vertex of a list points to itself. Exploration prepends newly gray2
/// vertices to the next list; consolidation walks that list, turns it gray1
/// and keeps it as the next frontier.
pub fn bfs_implicit_ptrlist(g: &mut ImplicitGraph, s: Vertex) -> Result<TraversalOrder> {
    bfs_implicit_ptrlist_traced(g, s).map(|(t, _)| t)
}

/// [`bfs_implicit_ptrlist`] together with the cost of each exploration walk.
pub fn bfs_implicit_ptrlist_traced(g: &mut ImplicitGraph, s: Vertex) -> Result<(TraversalOrder, Vec<PhaseCost>)> {
    check_source(g, s)?;
    let n = g.vertex_count();
    let needed = ptrlist_min_degree(n);
    for v in 1..=n {
        let d = g.degree(v, Side::Out);
        if d < needed {
            return Err(Error::DegreeTooSmall {
                vertex: v,
                degree: d,
                needed,
            });
        }
    }
    let width = lg_ceil(n) as u32;
    let meter = g.meter();
    // s, dist, head1, head2, v, next, k, y
    let _vars = meter.words(8)?;
    for v in 1..=n {
        encode_color4(g, v, Side::Out, Color4::White)?;
    }
    let link = |g: &mut ImplicitGraph, v: Vertex, next: Vertex| encode_ptr(g, v, Side::Out, 4, (next - 1) as u64, width);
    let follow = |g: &mut ImplicitGraph, v: Vertex| -> Result<Vertex> {
        Ok(decode_ptr(g, v, Side::Out, 4, width)? as Vertex + 1)
    };
    encode_color4(g, s, Side::Out, Color4::Gray1)?;
    link(g, s, s)?;
    let mut order = vec![s];
    let mut levels = vec![0];
    let mut costs = Vec::new();
    let mut head1 = s;
    let mut dist = 0;
    loop {
        let mut head2 = None;
        let mut cost = PhaseCost {
            frontier: 0,
            pointer_reads: 0,
        };
        let mut v = head1;
        loop {
            let before = g.ops().element_reads;
            let next = follow(g, v)?;
            cost.pointer_reads += g.ops().element_reads - before;
            cost.frontier += 1;
            for k in 1..=g.degree(v, Side::Out) {
                let y = g.cursor_read(v, Side::Out, k)?;
                if decode_color4(g, y, Side::Out)? == Color4::White {
                    encode_color4(g, y, Side::Out, Color4::Gray2)?;
                    link(g, y, head2.unwrap_or(y))?;
                    head2 = Some(y);
                }
            }
            encode_color4(g, v, Side::Out, Color4::Black)?;
            if next == v {
                break;
            }
            v = next;
        }
        costs.push(cost);
        let Some(head) = head2 else { break };
        let mut v = head;
        loop {
            encode_color4(g, v, Side::Out, Color4::Gray1)?;
            order.push(v);
            levels.push(dist + 1);
            let next = follow(g, v)?;
            if next == v {
                break;
            }
            v = next;
        }
        head1 = head;
        dist += 1;
    }
    Ok((TraversalOrder::bfs(order, levels), costs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{family, generate, Family, GenParams};
    use crate::model::{GraphData, Layout};
    use crate::oracle;

    fn levels_match(g: &GraphData, s: Vertex, t: &TraversalOrder) -> bool {
        let want = oracle::bfs_levels(g, s);
        oracle::check_bfs_order(g, s, &t.order) && (1..=g.vertex_count()).all(|v| t.level_of(v) == want.get(v))
    }

    #[test]
    fn logspace_examples() {
        let g1 = GraphData::from_edges(4, false, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let c5 = family(Family::Cycle, 5).unwrap();
        for d in [g1, family(Family::Star, 6).unwrap(), c5.clone()] {
            let mut g = ImplicitGraph::new(&d, Layout::List);
            let out = bfs_implicit_logspace(&mut g, 1).unwrap();
            assert!(levels_match(&d, 1, &out));
            assert!(g.verify_structure(&d));
        }
        let mut g = ImplicitGraph::new(&c5, Layout::Array);
        let out = bfs_implicit_logspace(&mut g, 1).unwrap();
        let by_label: Vec<_> = (1..=5).map(|v| out.level_of(v).unwrap()).collect();
        assert_eq!(by_label, vec![0, 1, 2, 2, 1]);
    }

    #[test]
    fn four_color_examples() {
        let k4 = family(Family::Complete, 4).unwrap();
        let mut g = ImplicitGraph::new(&k4, Layout::Array);
        let out = bfs_implicit_4color(&mut g, 1).unwrap();
        assert_eq!(out.levels, Some(vec![0, 1, 1, 1]));
        let c4 = family(Family::Cycle, 4).unwrap();
        let mut g = ImplicitGraph::new(&c4, Layout::Array);
        assert_eq!(bfs_implicit_4color(&mut g, 1), Err(Error::DegreeTwo(1)));
        let d = generate(&GenParams {
            n: 30,
            min_degree: 3,
            seed: 5,
            ..GenParams::default()
        })
        .unwrap();
        let mut g = ImplicitGraph::new(&d, Layout::List);
        assert!(levels_match(&d, 1, &bfs_implicit_4color(&mut g, 1).unwrap()));
        assert!(g.verify_structure(&d));
    }

    #[test]
    fn four_color_leaves() {
        // a leaf source and leaves hanging off degree-3 vertices
        let d = GraphData::from_edges(
            8,
            false,
            &[(1, 2), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (5, 6), (4, 7), (3, 8)],
        )
        .unwrap();
        for s in [1, 2, 6] {
            let mut g = ImplicitGraph::new(&d, Layout::Array);
            assert!(levels_match(&d, s, &bfs_implicit_4color(&mut g, s).unwrap()), "s={s}");
        }
    }

    #[test]
    fn ptrlist_examples() {
        let k16 = family(Family::Complete, 16).unwrap();
        let mut g = ImplicitGraph::new(&k16, Layout::Array);
        let out = bfs_implicit_ptrlist(&mut g, 1).unwrap();
        assert!((2..=16).all(|v| out.level_of(v) == Some(1)));
        let d = generate(&GenParams {
            n: 16,
            min_degree: 11,
            seed: 2,
            ..GenParams::default()
        })
        .unwrap();
        let mut g = ImplicitGraph::new(&d, Layout::List);
        let (out, costs) = bfs_implicit_ptrlist_traced(&mut g, 1).unwrap();
        assert!(levels_match(&d, 1, &out));
        assert!(g.verify_structure(&d));
        for c in costs {
            assert!(c.pointer_reads <= 6 * c.frontier as u64 * lg_ceil(16));
        }
        let c5 = family(Family::Cycle, 5).unwrap();
        let mut g = ImplicitGraph::new(&c5, Layout::Array);
        assert!(matches!(bfs_implicit_ptrlist(&mut g, 1), Err(Error::DegreeTooSmall { .. })));
    }
}
