use std::sync::Arc;

use crate::encoding::PointerStructure;
use crate::error::{Error, Result};
use crate::model::{word_bits, GraphData, OpCounter, RotateAccess, Side, Vertex, Weight, WorkspaceMeter};
use crate::rotate_search::lex_dfs_trits;
use crate::traversal::TraversalOrder;

/// Read-only adjacency arrays with one movable cursor per list.
///
/// The cursors live in a [`PointerStructure`] (charged to the meter), and
/// play the role of the rotate model's heads; the input is never written.
#[derive(Debug)]
pub struct RomGraph<'a> {
    g: &'a GraphData,
    cursors: Vec<PointerStructure>,
    ops: OpCounter,
    meter: Arc<WorkspaceMeter>,
}

impl<'a> RomGraph<'a> {
    pub fn new(g: &'a GraphData) -> Result<Self> {
        Self::with_budget(g, None)
    }

    /// Like [`RomGraph::new`], with the meter capped at `budget` bits before
    /// the cursors are allocated.
    pub fn with_budget(g: &'a GraphData, budget: Option<u64>) -> Result<Self> {
        let n = g.vertex_count();
        let meter = Arc::new(WorkspaceMeter::new(word_bits(n)));
        meter.set_budget(budget);
        let cursors = g
            .sides()
            .iter()
            .map(|&side| {
                let degrees: Vec<usize> = (1..=n).map(|v| g.degree(v, side).max(1)).collect();
                PointerStructure::new(&degrees, &meter)
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            g,
            cursors,
            ops: OpCounter::default(),
            meter,
        })
    }

    fn cursor(&self, side: Side) -> &PointerStructure {
        match side {
            Side::In if self.g.is_directed() => &self.cursors[1],
            _ => &self.cursors[0],
        }
    }

    fn cursor_mut(&mut self, side: Side) -> &mut PointerStructure {
        match side {
            Side::In if self.g.is_directed() => &mut self.cursors[1],
            _ => &mut self.cursors[0],
        }
    }

    fn entry(&mut self, v: Vertex, side: Side, k: usize) -> (Vertex, Weight) {
        let adj = self.g.adjacency(v, side);
        let c = self.cursor(side).get(v).expect("vertex in range");
        self.ops.element_reads += 1;
        adj[(c + k) % adj.len()]
    }
}

impl RotateAccess for RomGraph<'_> {
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
        self.entry(v, side, k).0
    }

    fn peek_weight(&mut self, v: Vertex, side: Side, k: usize) -> Weight {
        self.entry(v, side, k).1
    }

    fn rotate(&mut self, v: Vertex, side: Side) -> Result<()> {
        let d = self.g.degree(v, side);
        if d == 0 {
            return Err(Error::EmptyList(v));
        }
        let c = self.cursor(side).get(v)?;
        self.cursor_mut(side).set(v, (c + 1) % d)?;
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

/// Lex-DFS in the read-only model: the packed-colour lex-DFS with list
/// cursors in place of rotatable heads.
pub fn rom_dfs(g: &mut RomGraph<'_>, s: Vertex) -> Result<TraversalOrder> {
    lex_dfs_trits(g, s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn examples() {
        let g1 = GraphData::from_edges(4, false, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let before = g1.clone();
        let mut r = RomGraph::new(&g1).unwrap();
        assert_eq!(rom_dfs(&mut r, 1).unwrap().order, vec![1, 2, 3, 4]);
        drop(r);
        assert_eq!(g1, before);
        let single = GraphData::from_edges(1, false, &[]).unwrap();
        assert_eq!(rom_dfs(&mut RomGraph::new(&single).unwrap(), 1).unwrap().order, vec![1]);
        let d = GraphData::from_edges(4, true, &[(1, 3), (3, 2), (2, 1), (3, 4), (1, 4)]).unwrap();
        assert_eq!(rom_dfs(&mut RomGraph::new(&d).unwrap(), 1).unwrap().order, oracle::lex_dfs(&d, 1));
    }
}
