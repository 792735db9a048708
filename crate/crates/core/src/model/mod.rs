//! Graph ingestion, the two restricted-memory representations and resource
//! accounting.
//!
//! Vertices are labelled `1..=n` everywhere. A [`RotateGraph`] keeps its
//! adjacency lists immutable and only lets the head of each circular list
//! advance; an [`ImplicitGraph`] keeps its heads fixed and only lets elements
//! inside a list be swapped. Algorithms that only need the rotate surface are
//! written against [`RotateAccess`], so they run unchanged on the rotate
//! model, on the implicit-model simulation and on the read-only cursor model.

mod access;
mod graph_data;
mod implicit;
mod meter;
mod rotate;

pub use access::{RotateAccess, Side};
pub use graph_data::{load_graph, GraphData};
pub use implicit::{Elem, ImplicitGraph, Layout};
pub use meter::{Frame, OpCounter, OwnedFrame, WorkspaceMeter};
pub use rotate::{RotateGraph, Scan};

/// Vertex label in `1..=n`.
pub type Vertex = usize;

/// Edge weight (abstract cost).
pub type Weight = i64;

/// `max(1, ⌈lg x⌉)`.
pub fn lg_ceil(x: usize) -> u64 {
    if x <= 2 {
        1
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as u64
    }
}

/// Bits in one machine word able to hold any value in `0..=n`.
pub fn word_bits(n: usize) -> u64 {
    (usize::BITS - n.leading_zeros()).max(1) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lg_ceil_values() {
        assert_eq!(lg_ceil(1), 1);
        assert_eq!(lg_ceil(2), 1);
        assert_eq!(lg_ceil(3), 2);
        assert_eq!(lg_ceil(4), 2);
        assert_eq!(lg_ceil(5), 3);
        assert_eq!(lg_ceil(64), 6);
        assert_eq!(lg_ceil(65), 7);
    }

    #[test]
    fn word_bits_values() {
        assert_eq!(word_bits(1), 1);
        assert_eq!(word_bits(4), 3);
        assert_eq!(word_bits(64), 7);
        assert_eq!(word_bits(63), 6);
    }
}
