use std::sync::Arc;

use super::{word_bits, GraphData, OpCounter, RotateAccess, Side, Vertex, Weight, WorkspaceMeter};
use crate::error::{Error, Result};

/// Rotate model: circular adjacency lists in read-only storage plus one
/// mutable head per list.
///
/// Lists are laid out contiguously, so the successor of position `i` in a
/// list of length `d` is `(i + 1) % d`; that relation and the elements never
/// change. The heads are the only mutable state and [`RotateGraph::rotate`]
/// is the only way to move them.
#[derive(Debug)]
pub struct RotateGraph {
    n: usize,
    directed: bool,
    elems: Vec<(Vertex, Weight)>,
    start: Vec<usize>,
    len: Vec<usize>,
    head: Vec<usize>,
    ops: OpCounter,
    meter: Arc<WorkspaceMeter>,
}

impl RotateGraph {
    pub fn new(g: &GraphData) -> Self {
        let n = g.vertex_count();
        let mut elems = Vec::new();
        let mut start = Vec::new();
        let mut len = Vec::new();
        for &side in g.sides() {
            for v in 1..=n {
                start.push(elems.len());
                len.push(g.degree(v, side));
                elems.extend_from_slice(g.adjacency(v, side));
            }
        }
        let lists = start.len();
        Self {
            n,
            directed: g.is_directed(),
            elems,
            start,
            len,
            head: vec![0; lists],
            ops: OpCounter::default(),
            meter: Arc::new(WorkspaceMeter::new(word_bits(n))),
        }
    }

    fn list(&self, v: Vertex, side: Side) -> usize {
        assert!((1..=self.n).contains(&v), "vertex {v} out of range");
        match side {
            Side::In if self.directed => self.n + v - 1,
            _ => v - 1,
        }
    }

    fn slot(&self, list: usize, k: usize) -> usize {
        self.start[list] + (self.head[list] + k) % self.len[list]
    }

    /// Read-only cursor over one full cycle of `v`'s list from the front.
    pub fn scan(&mut self, v: Vertex, side: Side) -> Scan<'_> {
        let list = self.list(v, side);
        Scan {
            g: self,
            list,
            k: 0,
        }
    }

    /// True iff every list still holds its input sequence in the same cyclic
    /// order and every head addresses a valid position.
    pub fn verify_structure(&self, original: &GraphData) -> bool {
        if original.vertex_count() != self.n || original.is_directed() != self.directed {
            return false;
        }
        let mut list = 0;
        for &side in original.sides() {
            for v in 1..=self.n {
                let want = original.adjacency(v, side);
                let s = self.start[list];
                let d = self.len[list];
                if d != want.len() || &self.elems[s..s + d] != want {
                    return false;
                }
                if d > 0 && self.head[list] >= d {
                    return false;
                }
                list += 1;
            }
        }
        true
    }

    /// Resets the operation counters (heads are left where they are).
    pub fn reset_ops(&mut self) {
        self.ops = OpCounter::default();
    }
}

impl RotateAccess for RotateGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn is_directed(&self) -> bool {
        self.directed
    }

    fn degree(&self, v: Vertex, side: Side) -> usize {
        self.len[self.list(v, side)]
    }

    fn peek(&mut self, v: Vertex, side: Side, k: usize) -> Vertex {
        let list = self.list(v, side);
        self.ops.element_reads += 1;
        self.elems[self.slot(list, k)].0
    }

    fn peek_weight(&mut self, v: Vertex, side: Side, k: usize) -> Weight {
        let list = self.list(v, side);
        self.ops.element_reads += 1;
        self.elems[self.slot(list, k)].1
    }

    fn rotate(&mut self, v: Vertex, side: Side) -> Result<()> {
        let list = self.list(v, side);
        let d = self.len[list];
        if d == 0 {
            return Err(Error::EmptyList(v));
        }
        self.head[list] = (self.head[list] + 1) % d;
        self.ops.rotations += 1;
        Ok(())
    }

    fn count_comparisons(&mut self, c: u64) {
        self.ops.comparisons += c;
    }

    fn ops(&self) -> OpCounter {
        self.ops
    }

    fn meter(&self) -> Arc<WorkspaceMeter> {
        Arc::clone(&self.meter)
    }
}

/// Cursor returned by [`RotateGraph::scan`]; each step is one element read.
pub struct Scan<'a> {
    g: &'a mut RotateGraph,
    list: usize,
    k: usize,
}

impl Iterator for Scan<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.k >= self.g.len[self.list] {
            return None;
        }
        let slot = self.g.slot(self.list, self.k);
        self.k += 1;
        self.g.ops.element_reads += 1;
        Some(self.g.elems[slot].0)
    }
}
