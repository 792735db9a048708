//! Consequences of the in-place searches: DFS in the read-only model,
//! reachability and distance, and exhaustive subset search in `O(lg n)` bits.

mod reach;
mod rom;
mod subset;

pub use reach::{shortest_distance, st_reachability, Reachability};
pub use rom::{rom_dfs, RomGraph};
pub use subset::{
    dominating_set_min, is_dominating_set, is_vertex_cover, subset_solve, vertex_cover_min, Objective,
    SubsetResult, SubsetView, PREDICATE_WORDS,
};
