//! In-place graph search in the rotate and implicit memory models.
//!
//! The input graph itself is the only large data structure: algorithms
//! advance list heads ([`model::RotateGraph`]) or permute list elements
//! ([`model::ImplicitGraph`]) to remember state, and every extra bit they
//! keep is charged to a [`model::WorkspaceMeter`].

pub mod applications;
pub mod budget;
pub mod encoding;
pub mod error;
pub mod generate;
pub mod implicit_search;
pub mod model;
pub mod mst;
pub mod oracle;
pub mod rotate_search;
pub mod run;
pub mod traversal;

pub use error::{Error, Result};
