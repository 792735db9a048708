//! Value encodings used by the space-restricted algorithms.
//!
//! * [`TritArray`] packs three-valued colours five to a byte.
//! * [`BitArray`] is the plain visited array of the linear-space variants.
//! * [`codec`] stores bits, four-valued colours and pointers in an implicit
//!   graph by permuting adjacency elements.
//! * [`PointerStructure`] holds one variable-width cursor per adjacency list
//!   for the read-only simulation.

mod bits;
pub mod codec;
mod pointer;
mod trits;

pub use bits::BitArray;
pub use codec::Color4;
pub use pointer::PointerStructure;
pub use trits::{Color, TritArray};
