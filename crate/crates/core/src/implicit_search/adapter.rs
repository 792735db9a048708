use std::sync::Arc;

use crate::error::{Error, Result};
use crate::model::{Elem, ImplicitGraph, Layout, OpCounter, RotateAccess, Side, Vertex, Weight, WorkspaceMeter};

/// Rotate-model surface on top of an implicit graph.
///
/// * `List` layout: the front is position 1 and a rotation is a circular
///   shift by `d - 1` adjacent swaps.
/// * `Array` layout: every list is first heap-sorted by `(weight, label)`.
///   Afterwards a list is always "sorted except that position 1 is swapped
///   with sorted index `i`", which makes the front `sorted[i]`. `i` is found
///   by binary search (the elements after position 1 that are smaller than
///   the front are exactly positions `2..=i+1`), and a rotation is at most
///   two swaps.
///
/// A single `(list, i)` pair is cached so a run of peeks into one list
/// pays for the binary search once.
#[derive(Debug)]
pub struct RotateAdapter<'g> {
    g: &'g mut ImplicitGraph,
    cache: Option<(Vertex, Side, usize)>,
}

impl<'g> RotateAdapter<'g> {
    pub fn new(g: &'g mut ImplicitGraph) -> Result<Self> {
        if g.layout() == Layout::Array {
            let sides: &[Side] = if g.is_directed() { &[Side::Out, Side::In] } else { &[Side::Out] };
            for &side in sides {
                for v in 1..=g.vertex_count() {
                    heapsort(g, v, side)?;
                }
            }
        }
        Ok(Self { g, cache: None })
    }

    pub fn graph(&self) -> &ImplicitGraph {
        self.g
    }

    pub fn layout(&self) -> Layout {
        self.g.layout()
    }

    fn key(&mut self, v: Vertex, side: Side, pos: usize) -> (Weight, Vertex) {
        self.g.elem_at(v, side, pos).expect("position within degree").key()
    }

    /// Sorted index of the current front (array layout).
    fn front_rank(&mut self, v: Vertex, side: Side) -> usize {
        if let Some((cv, cs, i)) = self.cache {
            if cv == v && cs == side {
                return i;
            }
        }
        let d = self.g.degree(v, side);
        let f = self.key(v, side, 1);
        // last position j in 2..=d whose element is below the front
        let (mut lo, mut hi) = (1usize, d);
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            let below = self.key(v, side, mid) < f;
            self.g.count_comparisons(1);
            if below {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let i = lo - 1;
        self.cache = Some((v, side, i));
        i
    }

    /// Position (1-based) of the element `k` steps after the front.
    fn position(&mut self, v: Vertex, side: Side, k: usize) -> usize {
        match self.g.layout() {
            Layout::List => k + 1,
            Layout::Array => {
                let d = self.g.degree(v, side);
                let i = self.front_rank(v, side);
                let j = (i + k) % d;
                if j == i {
                    1
                } else if j == 0 {
                    i + 1
                } else {
                    j + 1
                }
            }
        }
    }

    fn elem(&mut self, v: Vertex, side: Side, k: usize) -> Elem {
        let pos = self.position(v, side, k);
        let e = match self.g.layout() {
            Layout::List => self.g.cursor_elem(v, side, pos),
            Layout::Array => self.g.elem_at(v, side, pos),
        };
        e.expect("peek below degree")
    }
}

fn heapsort(g: &mut ImplicitGraph, v: Vertex, side: Side) -> Result<()> {
    let d = g.degree(v, side);
    let key = |g: &mut ImplicitGraph, i: usize| -> Result<(Weight, Vertex)> { Ok(g.elem_at(v, side, i)?.key()) };
    let sift = |g: &mut ImplicitGraph, mut root: usize, end: usize| -> Result<()> {
        loop {
            let mut child = 2 * root;
            if child > end {
                return Ok(());
            }
            if child < end && key(g, child)? < key(g, child + 1)? {
                child += 1;
            }
            g.count_comparisons(2);
            if key(g, root)? >= key(g, child)? {
                return Ok(());
            }
            g.swap(v, side, root, child)?;
            root = child;
        }
    };
    for root in (1..=d / 2).rev() {
        sift(g, root, d)?;
    }
    for end in (2..=d).rev() {
        g.swap(v, side, 1, end)?;
        sift(g, 1, end - 1)?;
    }
    Ok(())
}

impl RotateAccess for RotateAdapter<'_> {
    fn vertex_count(&self) -> usize {
        self.g.vertex_count()
    }

    fn is_directed(&self) -> bool {
        self.g.is_directed()
    }

    fn degree(&self, v: Vertex, side: Side) -> usize {
        self.g.degree(v, side)
    }

    fn peek(&mut self, v: Vertex, side: Side, k: usize) -> Vertex {
        self.elem(v, side, k).label
    }

    fn peek_weight(&mut self, v: Vertex, side: Side, k: usize) -> Weight {
        self.elem(v, side, k).weight
    }

    fn rotate(&mut self, v: Vertex, side: Side) -> Result<()> {
        let d = self.g.degree(v, side);
        if d == 0 {
            return Err(Error::EmptyList(v));
        }
        match self.g.layout() {
            Layout::List => {
                for i in 1..d {
                    self.g.swap(v, side, i, i + 1)?;
                }
            }
            Layout::Array => {
                let i = self.front_rank(v, side);
                if d > 1 {
                    if i > 0 {
                        self.g.swap(v, side, 1, i + 1)?;
                    }
                    if i + 1 < d {
                        self.g.swap(v, side, 1, i + 2)?;
                    }
                }
                self.cache = Some((v, side, (i + 1) % d));
            }
        }
        Ok(())
    }

    fn move_to_front(&mut self, v: Vertex, side: Side, target: Vertex) -> Result<()> {
        if self.g.layout() == Layout::Array {
            return self.rotate_to(v, side, target).map(|_| ());
        }
        let j = self
            .g
            .position_of(v, side, target)
            .ok_or(Error::TargetAbsent { vertex: v, target })?;
        for i in (1..j).rev() {
            self.g.swap(v, side, i, i + 1)?;
        }
        Ok(())
    }

    fn count_comparisons(&mut self, c: u64) {
        self.g.count_comparisons(c);
    }

    fn ops(&self) -> OpCounter {
        self.g.ops()
    }

    fn meter(&self) -> Arc<WorkspaceMeter> {
        self.g.meter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{GraphData, RotateGraph};

    fn star(labels: &[usize]) -> GraphData {
        let n = *labels.iter().max().unwrap();
        let edges: Vec<_> = labels.iter().map(|&x| (1, x)).collect();
        GraphData::from_edges(n, false, &edges).unwrap()
    }

    #[test]
    fn array_rotation() {
        let d = star(&[7, 3, 5]);
        let mut ig = ImplicitGraph::new(&d, Layout::Array);
        let mut a = RotateAdapter::new(&mut ig).unwrap();
        assert_eq!(a.front(1, Side::Out), Some(3));
        assert_eq!(a.graph().snapshot(1, Side::Out), vec![3, 5, 7]);
        a.rotate(1, Side::Out).unwrap();
        assert_eq!(a.front(1, Side::Out), Some(5));
        a.rotate(1, Side::Out).unwrap();
        assert_eq!(a.front(1, Side::Out), Some(7));
        assert_eq!(a.graph().snapshot(1, Side::Out), vec![7, 5, 3]);
        a.rotate(1, Side::Out).unwrap();
        assert_eq!(a.graph().snapshot(1, Side::Out), vec![3, 5, 7]);
    }

    #[test]
    fn list_rotation() {
        let d = star(&[4, 2, 3]);
        let mut ig = ImplicitGraph::new(&d, Layout::List);
        let mut a = RotateAdapter::new(&mut ig).unwrap();
        a.rotate(1, Side::Out).unwrap();
        assert_eq!(a.graph().snapshot(1, Side::Out), vec![2, 3, 4]);
        a.rotate(1, Side::Out).unwrap();
        a.rotate(1, Side::Out).unwrap();
        assert_eq!(a.graph().snapshot(1, Side::Out), vec![4, 2, 3]);
        a.move_to_front(1, Side::Out, 3).unwrap();
        assert_eq!(a.graph().snapshot(1, Side::Out), vec![3, 4, 2]);
    }

    #[test]
    fn matches_rotate_graph() {
        let labels: Vec<usize> = vec![9, 4, 12, 2, 7, 3, 11, 5, 8, 6, 10];
        let d = star(&labels);
        for layout in [Layout::List, Layout::Array] {
            let reference = if layout == Layout::Array { d.sorted() } else { d.clone() };
            let mut r = RotateGraph::new(&reference);
            let mut ig = ImplicitGraph::new(&d, layout);
            let mut a = RotateAdapter::new(&mut ig).unwrap();
            for step in 0..40 {
                for k in 0..labels.len() {
                    assert_eq!(a.peek(1, Side::Out, k), r.peek(1, Side::Out, k), "{layout:?} {step}");
                }
                a.rotate(1, Side::Out).unwrap();
                r.rotate(1, Side::Out).unwrap();
            }
            assert!(ig.verify_structure(&d));
        }
    }
}
