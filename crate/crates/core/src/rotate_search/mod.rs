//! Depth- and breadth-first search in the rotate model.
//!
//! Every function here is generic over [`RotateAccess`](crate::model::RotateAccess),
//! so the same code runs on a [`RotateGraph`](crate::model::RotateGraph), on the
//! implicit-model simulation and on the read-only cursor model. A graph whose
//! `is_directed()` is true is searched along out-edges.


mod bfs;
mod dfs;
mod dfs_log;


pub use bfs::{bfs_linear_bits, bfs_logspace};
pub use dfs::{dfs_linear_bits, lex_dfs_trits};
pub use dfs_log::dfs_logspace;
pub(crate) use dfs_log::{directed_lex_logspace, undirected_logspace, Anchor};
