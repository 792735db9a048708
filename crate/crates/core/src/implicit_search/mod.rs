//! The implicit model: rotate-model simulation and native searches that
//! encode their state in the order of adjacency elements.

mod adapter;
mod bfs;
mod dfs;

pub use adapter::RotateAdapter;
pub use bfs::{
    bfs_implicit_4color, bfs_implicit_logspace, bfs_implicit_ptrlist, bfs_implicit_ptrlist_traced, ptrlist_min_degree,
    PhaseCost,
};
pub use dfs::{dfs_implicit_logspace, lex_dfs_implicit};
