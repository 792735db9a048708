//! Workspace budgets, in bits, that each algorithm family is held to.
//!
//! The constants are part of the contract: changing them changes what the
//! acceptance tests accept.

use crate::model::{lg_ceil, GraphData, Side};

/// Words of `⌈lg n⌉` bits granted to every algorithm for its scalars.
pub const LOG_WORDS: u64 = 64;

/// Extra bits per adjacency list granted to the read-only cursor model, per
/// `max(1, ⌈lg d⌉)`.
pub const ROM_CURSOR_FACTOR: u64 = 4;

/// `64⌈lg n⌉`: algorithms using `O(lg n)` bits.
pub fn log_budget(n: usize) -> u64 {
    LOG_WORDS * lg_ceil(n)
}

/// `n + 64⌈lg n⌉`: one bit per vertex.
pub fn linear_budget(n: usize) -> u64 {
    n as u64 + log_budget(n)
}

/// `⌈8n/5⌉ + 64⌈lg n⌉`: a packed colour per vertex.
pub fn trits_budget(n: usize) -> u64 {
    (8 * n as u64).div_ceil(5) + log_budget(n)
}

/// `4·Σ_v max(1, ⌈lg d_v⌉)` over every list, plus the trit bound.
pub fn rom_budget(g: &GraphData) -> u64 {
    let n = g.vertex_count();
    let lists: u64 = (1..=n)
        .flat_map(|v| g.sides().iter().map(move |&side| (v, side)))
        .map(|(v, side): (usize, Side)| lg_ceil(g.degree(v, side)))
        .sum();
    ROM_CURSOR_FACTOR * lists + trits_budget(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(log_budget(64), 384);
        assert_eq!(linear_budget(64), 448);
        assert_eq!(trits_budget(10), 16 + 256);
        assert_eq!(trits_budget(11), 18 + 256);
    }
}
