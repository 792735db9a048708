//! s–t reachability and distance by running one of the in-place traversals
//! and watching for `t`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{GraphData, Vertex};
use crate::run::{traverse, Algo, ModelKind, RunConfig, Space};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Reachability {
    pub reachable: bool,
    /// BFS distance from `s`, when a BFS was run and `t` was reached.
    pub distance: Option<usize>,
    /// False when the chosen variant needs `s` to reach every vertex and it
    /// does not. `reachable` is still exact: such runs emit the whole
    /// reachable set before giving up.
    pub complete: bool,
}

fn check_target(g: &GraphData, t: Vertex) -> Result<()> {
    if t == 0 || t > g.vertex_count() {
        return Err(Error::VertexOutOfRange(t));
    }
    Ok(())
}

/// Whether `t` is reachable from `s`, using the traversal selected by
/// `(algo, model, space)` and its workspace budget.
pub fn st_reachability(
    g: &GraphData,
    s: Vertex,
    t: Vertex,
    algo: Algo,
    model: ModelKind,
    space: Space,
) -> Result<Reachability> {
    check_target(g, t)?;
    let report = traverse(g, &RunConfig { algo, model, space, source: s })?;
    let t_at = report.order.iter().position(|&v| v == t);
    Ok(Reachability {
        reachable: t_at.is_some(),
        distance: t_at.and_then(|i| report.levels.as_ref().map(|ls| ls[i])),
        complete: report.complete,
    })
}

/// Length of a shortest `s`–`t` path, or `None` when `t` is unreachable,
/// using the BFS available in `(model, space)`.
pub fn shortest_distance(
    g: &GraphData,
    s: Vertex,
    t: Vertex,
    model: ModelKind,
    space: Space,
) -> Result<Option<usize>> {
    Ok(st_reachability(g, s, t, Algo::Bfs, model, space)?.distance)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let g1 = GraphData::from_edges(4, false, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let r = st_reachability(&g1, 1, 4, Algo::Dfs, ModelKind::Rotate, Space::Log).unwrap();
        assert!(r.reachable && r.complete);
        assert_eq!(shortest_distance(&g1, 1, 4, ModelKind::Rotate, Space::Log).unwrap(), Some(2));
        assert_eq!(shortest_distance(&g1, 2, 2, ModelKind::ImplicitList, Space::Log).unwrap(), Some(0));

        let two = GraphData::from_edges(2, false, &[]).unwrap();
        let r = st_reachability(&two, 1, 2, Algo::Dfs, ModelKind::Rotate, Space::Log).unwrap();
        assert!(!r.reachable && !r.complete);
        assert_eq!(shortest_distance(&two, 1, 2, ModelKind::Rotate, Space::Linear).unwrap(), None);
        assert!(st_reachability(&two, 1, 3, Algo::Bfs, ModelKind::Rotate, Space::Log).is_err());
    }
}
