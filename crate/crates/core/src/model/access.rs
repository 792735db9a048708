use std::sync::Arc;

use super::{OpCounter, Vertex, Weight, WorkspaceMeter};
use crate::error::{Error, Result};

/// Which adjacency sequence of a vertex. Undirected graphs have a single
/// sequence, addressed by either side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Out,
    In,
}

/// The rotate-model operation surface: a circular list per vertex (and side)
/// whose front can only advance one node per unit-cost rotation, plus a
/// read-only cursor relative to the front.
pub trait RotateAccess {
    fn vertex_count(&self) -> usize;

    fn is_directed(&self) -> bool;

    fn degree(&self, v: Vertex, side: Side) -> usize;

    /// Element `k` steps after the front (a temporary cursor step).
    ///
    /// Callers walk `k` upwards from zero, so each call is charged as one
    /// element read. `k` must be below the degree.
    fn peek(&mut self, v: Vertex, side: Side, k: usize) -> Vertex;

    /// Weight carried by the element `k` steps after the front.
    fn peek_weight(&mut self, v: Vertex, side: Side, k: usize) -> Weight;

    /// Advances the front of `v`'s list by one node.
    fn rotate(&mut self, v: Vertex, side: Side) -> Result<()>;

    fn ops(&self) -> OpCounter;

    /// Charges `c` key comparisons made by the caller.
    fn count_comparisons(&mut self, c: u64);

    fn meter(&self) -> Arc<WorkspaceMeter>;

    fn front(&mut self, v: Vertex, side: Side) -> Option<Vertex> {
        if self.degree(v, side) == 0 {
            None
        } else {
            Some(self.peek(v, side, 0))
        }
    }

    /// Cyclic distance from the front to `target`, found with a cursor scan.
    fn offset_of(&mut self, v: Vertex, side: Side, target: Vertex) -> Option<usize> {
        (0..self.degree(v, side)).find(|&k| self.peek(v, side, k) == target)
    }

    /// Rotates until `target` is at the front; returns the rotations taken.
    fn rotate_to(&mut self, v: Vertex, side: Side, target: Vertex) -> Result<usize> {
        let k = self
            .offset_of(v, side, target)
            .ok_or(Error::TargetAbsent { vertex: v, target })?;
        for _ in 0..k {
            self.rotate(v, side)?;
        }
        Ok(k)
    }

    /// Moves `target` to the front while keeping the relative order of the
    /// other elements. Only models that can permute elements support it.
    fn move_to_front(&mut self, v: Vertex, side: Side, target: Vertex) -> Result<()> {
        let _ = (v, side, target);
        Err(Error::Unsupported(
            "order-preserving move needs element swaps".into(),
        ))
    }
}
