//! Exhaustive search over vertex subsets with the subset stored in the list
//! fronts.
//!
//! Vertex `v` is in the subset iff its front is its smallest-labelled
//! neighbour, and out of it iff its front is the element after that one.
//! Read as a binary number with vertex 1 as the least significant bit, the
//! fronts form a counter that is incremented in place: clearing a bit is one
//! rotation, setting it turns the list the rest of the way round. This
//! needs every degree to be at least 2.

use std::sync::atomic::{AtomicBool, Ordering};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{RotateAccess, Side, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetResult {
    pub members: Vec<Vertex>,
    pub size: usize,
}

/// Read-only access to the graph and the current subset, handed to
/// predicates.
pub struct SubsetView<'a, G: RotateAccess + ?Sized> {
    g: &'a mut G,
}

impl<G: RotateAccess + ?Sized> SubsetView<'_, G> {
    pub fn vertex_count(&self) -> usize {
        self.g.vertex_count()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.g.degree(v, Side::Out)
    }

    /// The `k`-th neighbour of `v`, counted from its front.
    pub fn neighbor(&mut self, v: Vertex, k: usize) -> Vertex {
        self.g.peek(v, Side::Out, k)
    }

    pub fn contains(&mut self, v: Vertex) -> bool {
        member(self.g, v)
    }

    pub fn size(&mut self) -> usize {
        (1..=self.vertex_count()).filter(|&v| self.contains(v)).count()
    }
}

fn smallest_offset<G: RotateAccess + ?Sized>(g: &mut G, v: Vertex) -> usize {
    let d = g.degree(v, Side::Out);
    let mut best = (Vertex::MAX, 0);
    for k in 0..d {
        let y = g.peek(v, Side::Out, k);
        if y < best.0 {
            best = (y, k);
        }
    }
    g.count_comparisons(d as u64);
    best.1
}

fn member<G: RotateAccess + ?Sized>(g: &mut G, v: Vertex) -> bool {
    smallest_offset(g, v) == 0
}

fn set<G: RotateAccess + ?Sized>(g: &mut G, v: Vertex, bit: bool) -> Result<()> {
    // the front is either the minimum (offset 0) or its successor (offset d - 1)
    let k = smallest_offset(g, v);
    let steps = match (k == 0, bit) {
        (true, false) => 1,
        (false, true) => k,
        _ => 0,
    };
    for _ in 0..steps {
        g.rotate(v, Side::Out)?;
    }
    Ok(())
}

/// Adds one to the counter; false when it wraps back to the empty set.
fn increment<G: RotateAccess + ?Sized>(g: &mut G) -> Result<bool> {
    for v in 1..=g.vertex_count() {
        if member(g, v) {
            set(g, v, false)?;
        } else {
            set(g, v, true)?;
            return Ok(true);
        }
    }
    Ok(false)
}

/// Finds an optimal subset satisfying `predicate` by enumerating all `2^n`
/// subsets twice: once for the optimal size and once to stop at the first
/// subset of that size, which is left encoded in the graph.
///
/// `stop` is polled before each subset; raising it ends the search with
/// [`Error::Cancelled`].
pub fn subset_solve<G, P>(
    g: &mut G,
    mut predicate: P,
    objective: Objective,
    stop: Option<&AtomicBool>,
) -> Result<Option<SubsetResult>>
where
    G: RotateAccess + ?Sized,
    P: FnMut(&mut SubsetView<'_, G>) -> bool,
{
    let n = g.vertex_count();
    for v in 1..=n {
        let d = g.degree(v, Side::Out);
        if d < 2 {
            return Err(Error::DegreeTooSmall {
                vertex: v,
                degree: d,
                needed: 2,
            });
        }
    }
    let meter = g.meter();
    // v, k, best, size, pass; plus the predicate's own loop variables
    let _vars = meter.words(5 + PREDICATE_WORDS)?;
    for v in 1..=n {
        let k = smallest_offset(g, v);
        for _ in 0..k {
            g.rotate(v, Side::Out)?;
        }
        set(g, v, false)?;
    }
    let better = |a: usize, b: Option<usize>| match (objective, b) {
        (_, None) => true,
        (Objective::Minimize, Some(b)) => a < b,
        (Objective::Maximize, Some(b)) => a > b,
    };
    let mut best: Option<usize> = None;
    loop {
        if stop.is_some_and(|f| f.load(Ordering::Relaxed)) {
            return Err(Error::Cancelled);
        }
        let mut view = SubsetView { g: &mut *g };
        if predicate(&mut view) {
            let size = view.size();
            if better(size, best) {
                best = Some(size);
            }
        }
        if !increment(g)? {
            break;
        }
    }
    let Some(best) = best else {
        return Ok(None);
    };
    loop {
        if stop.is_some_and(|f| f.load(Ordering::Relaxed)) {
            return Err(Error::Cancelled);
        }
        let mut view = SubsetView { g: &mut *g };
        if predicate(&mut view) && view.size() == best {
            let members = (1..=n).filter(|&v| view.contains(v)).collect();
            return Ok(Some(SubsetResult { members, size: best }));
        }
        increment(g)?;
    }
}

/// Loop variables a predicate may keep.
pub const PREDICATE_WORDS: u64 = 3;

pub fn is_vertex_cover<G: RotateAccess + ?Sized>(view: &mut SubsetView<'_, G>) -> bool {
    for v in 1..=view.vertex_count() {
        if view.contains(v) {
            continue;
        }
        for k in 0..view.degree(v) {
            let y = view.neighbor(v, k);
            if !view.contains(y) {
                return false;
            }
        }
    }
    true
}

pub fn is_dominating_set<G: RotateAccess + ?Sized>(view: &mut SubsetView<'_, G>) -> bool {
    (1..=view.vertex_count()).all(|v| {
        view.contains(v) || (0..view.degree(v)).any(|k| {
            let y = view.neighbor(v, k);
            view.contains(y)
        })
    })
}

pub fn vertex_cover_min<G: RotateAccess + ?Sized>(g: &mut G) -> Result<Option<SubsetResult>> {
    subset_solve(g, is_vertex_cover, Objective::Minimize, None)
}

pub fn dominating_set_min<G: RotateAccess + ?Sized>(g: &mut G) -> Result<Option<SubsetResult>> {
    subset_solve(g, is_dominating_set, Objective::Minimize, None)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::generate::{family, Family};
    use crate::model::RotateGraph;

    #[test]
    fn cycles_and_cliques() {
        let c4 = family(Family::Cycle, 4).unwrap();
        assert_eq!(vertex_cover_min(&mut RotateGraph::new(&c4)).unwrap().unwrap().size, 2);
        assert_eq!(dominating_set_min(&mut RotateGraph::new(&c4)).unwrap().unwrap().size, 2);
        let c5 = family(Family::Cycle, 5).unwrap();
        assert_eq!(vertex_cover_min(&mut RotateGraph::new(&c5)).unwrap().unwrap().size, 3);
        let k4 = family(Family::Complete, 4).unwrap();
        assert_eq!(vertex_cover_min(&mut RotateGraph::new(&k4)).unwrap().unwrap().size, 3);
        let mut g = RotateGraph::new(&k4);
        let r = dominating_set_min(&mut g).unwrap().unwrap();
        assert_eq!(r.size, 1);
        assert!(g.verify_structure(&k4));
    }

    #[test]
    fn enumerates_every_subset_once() {
        let c6 = family(Family::Cycle, 6).unwrap();
        let mut seen = HashSet::new();
        let mut calls = 0;
        subset_solve(
            &mut RotateGraph::new(&c6),
            |view| {
                calls += 1;
                if calls <= 64 {
                    let mask: u32 = (1..=6).filter(|&v| view.contains(v)).map(|v| 1 << (v - 1)).sum();
                    seen.insert(mask);
                }
                false
            },
            Objective::Minimize,
            None,
        )
        .unwrap();
        assert_eq!(calls, 64);
        assert_eq!(seen.len(), 64);
    }

    #[test]
    fn rejects_low_degree() {
        let path = family(Family::Path, 3).unwrap();
        assert!(vertex_cover_min(&mut RotateGraph::new(&path)).is_err());
    }

    #[test]
    fn cancellation() {
        let c4 = family(Family::Cycle, 4).unwrap();
        let stop = AtomicBool::new(true);
        let r = subset_solve(&mut RotateGraph::new(&c4), is_vertex_cover, Objective::Minimize, Some(&stop));
        assert_eq!(r, Err(Error::Cancelled));
    }
}
