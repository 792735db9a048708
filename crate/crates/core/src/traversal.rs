use serde::Serialize;

use crate::model::Vertex;

/// Vertices in first-visit order.
///
/// The order is written to an output stream that is not part of the
/// workspace, so it is never metered.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TraversalOrder {
    pub order: Vec<Vertex>,
    /// BFS level of each emitted vertex, parallel to `order`.
    pub levels: Option<Vec<usize>>,
    /// False when a variant that assumes the source reaches every vertex
    /// found that it does not; `order` then holds the reachable prefix.
    pub complete: bool,
}

impl TraversalOrder {
    pub(crate) fn dfs(order: Vec<Vertex>) -> Self {
        Self {
            order,
            levels: None,
            complete: true,
        }
    }

    pub(crate) fn bfs(order: Vec<Vertex>, levels: Vec<usize>) -> Self {
        Self {
            order,
            levels: Some(levels),
            complete: true,
        }
    }

    pub(crate) fn require_all(mut self, n: usize) -> Self {
        self.complete = self.order.len() == n;
        self
    }

    /// Level of `v` if it was emitted by a BFS.
    pub fn level_of(&self, v: Vertex) -> Option<usize> {
        let levels = self.levels.as_ref()?;
        self.order.iter().position(|&x| x == v).map(|i| levels[i])
    }
}
