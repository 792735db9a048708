use std::sync::Arc;

use super::{word_bits, GraphData, OpCounter, Side, Vertex, Weight, WorkspaceMeter};
use crate::error::{Error, Result};

/// Cost model of an implicit graph's adjacency storage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layout {
    /// Singly linked lists: reading position `i` walks `i` nodes and a swap
    /// of positions `i`, `j` is charged as `|i - j|` adjacent swaps.
    List,
    /// Arrays: any read or swap is one unit.
    Array,
}

/// One adjacency element: the neighbour label and the edge weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Elem {
    pub label: Vertex,
    pub weight: Weight,
}

impl Elem {
    /// Sort key used by the adjacency-array simulation.
    pub fn key(&self) -> (Weight, Vertex) {
        (self.weight, self.label)
    }
}

/// Implicit model: list heads are fixed at position 1 and the only mutation
/// is swapping two elements of the same adjacency sequence.
///
/// Positions are 1-based throughout.
#[derive(Debug)]
pub struct ImplicitGraph {
    n: usize,
    directed: bool,
    layout: Layout,
    elems: Vec<Elem>,
    start: Vec<usize>,
    len: Vec<usize>,
    ops: OpCounter,
    meter: Arc<WorkspaceMeter>,
}

impl ImplicitGraph {
    pub fn new(g: &GraphData, layout: Layout) -> Self {
        let n = g.vertex_count();
        let mut elems = Vec::new();
        let mut start = Vec::new();
        let mut len = Vec::new();
        for &side in g.sides() {
            for v in 1..=n {
                start.push(elems.len());
                len.push(g.degree(v, side));
                elems.extend(
                    g.adjacency(v, side)
                        .iter()
                        .map(|&(label, weight)| Elem { label, weight }),
                );
            }
        }
        Self {
            n,
            directed: g.is_directed(),
            layout,
            elems,
            start,
            len,
            ops: OpCounter::default(),
            meter: Arc::new(WorkspaceMeter::new(word_bits(n))),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn degree(&self, v: Vertex, side: Side) -> usize {
        self.len[self.list(v, side)]
    }

    pub fn ops(&self) -> OpCounter {
        self.ops
    }

    pub fn reset_ops(&mut self) {
        self.ops = OpCounter::default();
    }

    pub fn meter(&self) -> Arc<WorkspaceMeter> {
        Arc::clone(&self.meter)
    }

    pub(crate) fn count_comparisons(&mut self, c: u64) {
        self.ops.comparisons += c;
    }

    fn list(&self, v: Vertex, side: Side) -> usize {
        assert!((1..=self.n).contains(&v), "vertex {v} out of range");
        match side {
            Side::In if self.directed => self.n + v - 1,
            _ => v - 1,
        }
    }

    fn slot(&self, v: Vertex, side: Side, i: usize) -> Result<usize> {
        let list = self.list(v, side);
        let len = self.len[list];
        if i == 0 || i > len {
            return Err(Error::PositionOutOfRange { pos: i, len });
        }
        Ok(self.start[list] + i - 1)
    }

    /// Element at position `i`, charged as a random access.
    pub fn elem_at(&mut self, v: Vertex, side: Side, i: usize) -> Result<Elem> {
        let slot = self.slot(v, side, i)?;
        self.ops.element_reads += match self.layout {
            Layout::List => i as u64,
            Layout::Array => 1,
        };
        Ok(self.elems[slot])
    }

    pub fn read_at(&mut self, v: Vertex, side: Side, i: usize) -> Result<Vertex> {
        Ok(self.elem_at(v, side, i)?.label)
    }

    /// Element at position `i` reached by a cursor that is already walking
    /// the list position by position; charged as one read.
    pub fn cursor_elem(&mut self, v: Vertex, side: Side, i: usize) -> Result<Elem> {
        let slot = self.slot(v, side, i)?;
        self.ops.element_reads += 1;
        Ok(self.elems[slot])
    }

    pub fn cursor_read(&mut self, v: Vertex, side: Side, i: usize) -> Result<Vertex> {
        Ok(self.cursor_elem(v, side, i)?.label)
    }

    /// Exchanges the elements at positions `i` and `j`.
    pub fn swap(&mut self, v: Vertex, side: Side, i: usize, j: usize) -> Result<()> {
        let a = self.slot(v, side, i)?;
        let b = self.slot(v, side, j)?;
        if i == j {
            return Ok(());
        }
        self.ops.swaps += match self.layout {
            Layout::List => i.abs_diff(j) as u64,
            Layout::Array => 1,
        };
        self.elems.swap(a, b);
        Ok(())
    }

    /// Position of `label` in `v`'s sequence, found by a cursor walk.
    pub fn position_of(&mut self, v: Vertex, side: Side, label: Vertex) -> Option<usize> {
        let d = self.degree(v, side);
        (1..=d).find(|&i| self.cursor_read(v, side, i).ok() == Some(label))
    }

    /// True iff every sequence still holds the input multiset with unchanged
    /// ownership and length (heads are fixed by construction).
    pub fn verify_structure(&self, original: &GraphData) -> bool {
        if original.vertex_count() != self.n || original.is_directed() != self.directed {
            return false;
        }
        let mut list = 0;
        for &side in original.sides() {
            for v in 1..=self.n {
                let mut want: Vec<_> = original
                    .adjacency(v, side)
                    .iter()
                    .map(|&(label, weight)| Elem { label, weight })
                    .collect();
                let s = self.start[list];
                let d = self.len[list];
                if d != want.len() {
                    return false;
                }
                let mut have = self.elems[s..s + d].to_vec();
                want.sort_by_key(Elem::key);
                have.sort_by_key(Elem::key);
                if have != want {
                    return false;
                }
                list += 1;
            }
        }
        true
    }

    /// Current sequence of `v`, uncharged. For inspection and tests.
    pub fn snapshot(&self, v: Vertex, side: Side) -> Vec<Vertex> {
        let list = self.list(v, side);
        let s = self.start[list];
        self.elems[s..s + self.len[list]]
            .iter()
            .map(|e| e.label)
            .collect()
    }

    #[cfg(test)]
    pub(crate) fn overwrite_for_test(&mut self, v: Vertex, side: Side, i: usize, label: Vertex) {
        let slot = self.slot(v, side, i).unwrap();
        self.elems[slot].label = label;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair() -> GraphData {
        // adj(1) = [5, 7]
        GraphData::from_edges(7, false, &[(1, 5), (1, 7)]).unwrap()
    }

    #[test]
    fn swap_and_read() {
        let gd = pair();
        let mut g = ImplicitGraph::new(&gd, Layout::Array);
        assert_eq!(g.read_at(1, Side::Out, 2), Ok(7));
        g.swap(1, Side::Out, 1, 2).unwrap();
        assert_eq!(g.snapshot(1, Side::Out), vec![7, 5]);
        g.swap(1, Side::Out, 2, 2).unwrap();
        assert_eq!(g.snapshot(1, Side::Out), vec![7, 5]);
        assert!(g.verify_structure(&gd));
    }

    #[test]
    fn positions_are_checked() {
        let mut g = ImplicitGraph::new(&pair(), Layout::List);
        assert_eq!(
            g.read_at(1, Side::Out, 3),
            Err(Error::PositionOutOfRange { pos: 3, len: 2 })
        );
        assert!(g.swap(1, Side::Out, 0, 1).is_err());
    }

    #[test]
    fn list_costs() {
        let gd = GraphData::from_edges(5, false, &[(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        let mut g = ImplicitGraph::new(&gd, Layout::List);
        g.read_at(1, Side::Out, 3).unwrap();
        g.swap(1, Side::Out, 1, 4).unwrap();
        assert_eq!(g.ops().element_reads, 3);
        assert_eq!(g.ops().swaps, 3);
        let mut a = ImplicitGraph::new(&gd, Layout::Array);
        a.read_at(1, Side::Out, 3).unwrap();
        a.swap(1, Side::Out, 1, 4).unwrap();
        assert_eq!(a.ops().element_reads, 1);
        assert_eq!(a.ops().swaps, 1);
    }

    #[test]
    fn fault_injection_is_detected() {
        let gd = pair();
        let mut g = ImplicitGraph::new(&gd, Layout::List);
        g.overwrite_for_test(1, Side::Out, 1, 6);
        assert!(!g.verify_structure(&gd));
    }
}
