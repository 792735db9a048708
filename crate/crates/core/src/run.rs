//! Dispatch over (algorithm, memory model, space class), with metering,
//! oracle checks and a serializable report.

use std::fmt;
use std::time::Instant;

use clap::ValueEnum;
use serde::Serialize;

use crate::applications::{dominating_set_min, rom_dfs, vertex_cover_min, RomGraph, SubsetResult};
use crate::budget::{linear_budget, log_budget, rom_budget, trits_budget};
use crate::error::{Error, Result};
use crate::implicit_search::{
    bfs_implicit_4color, bfs_implicit_logspace, bfs_implicit_ptrlist, dfs_implicit_logspace,
    lex_dfs_implicit,
};
use crate::model::{GraphData, ImplicitGraph, Layout, OpCounter, RotateAccess, RotateGraph, Vertex, Weight};
use crate::mst::{mst_implicit, mst_rotate, MstEdge};
use crate::oracle;
use crate::rotate_search::{bfs_linear_bits, bfs_logspace, dfs_linear_bits, dfs_logspace, lex_dfs_trits};
use crate::traversal::TraversalOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algo {
    LexDfs,
    Dfs,
    Bfs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    Rotate,
    ImplicitList,
    ImplicitArray,
    Rom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Space {
    #[serde(rename = "trits")]
    Trits,
    #[serde(rename = "linear")]
    Linear,
    #[serde(rename = "log")]
    Log,
    #[value(name = "4color")]
    #[serde(rename = "4color")]
    FourColor,
    #[serde(rename = "ptrlist")]
    Ptrlist,
}

macro_rules! display_via_clap {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
            }
        }
    )*};
}
display_via_clap!(Algo, ModelKind, Space);

/// Model families a combination applies to; both implicit layouts share one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Rotate,
    Implicit,
    Rom,
}

fn family(model: ModelKind) -> Family {
    match model {
        ModelKind::Rotate => Family::Rotate,
        ModelKind::ImplicitList | ModelKind::ImplicitArray => Family::Implicit,
        ModelKind::Rom => Family::Rom,
    }
}

const COMBINATIONS: &[(Algo, Family, Space)] = &[
    (Algo::LexDfs, Family::Rotate, Space::Trits),
    (Algo::LexDfs, Family::Rom, Space::Trits),
    (Algo::LexDfs, Family::Implicit, Space::Log),
    (Algo::Dfs, Family::Rotate, Space::Linear),
    (Algo::Dfs, Family::Rotate, Space::Log),
    (Algo::Dfs, Family::Implicit, Space::Log),
    (Algo::Bfs, Family::Rotate, Space::Linear),
    (Algo::Bfs, Family::Rotate, Space::Log),
    (Algo::Bfs, Family::Implicit, Space::Log),
    (Algo::Bfs, Family::Implicit, Space::FourColor),
    (Algo::Bfs, Family::Implicit, Space::Ptrlist),
];

/// Every supported combination, one per line, for usage messages.
pub fn valid_combinations() -> String {
    COMBINATIONS
        .iter()
        .map(|&(algo, fam, space)| {
            let model = match fam {
                Family::Rotate => "rotate",
                Family::Implicit => "implicit-list|implicit-array",
                Family::Rom => "rom",
            };
            format!("  --algo {algo} --model {model} --space {space}")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub algo: Algo,
    pub model: ModelKind,
    pub space: Space,
    pub source: Vertex,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if COMBINATIONS.contains(&(self.algo, family(self.model), self.space)) {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "--algo {} --model {} --space {} is not a supported combination; valid ones are:\n{}",
                self.algo,
                self.model,
                self.space,
                valid_combinations()
            )))
        }
    }

    /// Workspace budget, in bits, that the run is held to.
    pub fn budget(&self, g: &GraphData) -> u64 {
        let n = g.vertex_count();
        match (self.model, self.space) {
            (ModelKind::Rom, _) => rom_budget(g),
            (_, Space::Trits) => trits_budget(n),
            (_, Space::Linear) => linear_budget(n),
            _ => log_budget(n),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub rotations: u64,
    pub swaps: u64,
    pub element_reads: u64,
    pub comparisons: u64,
    pub peak_workspace_bits: u64,
    pub budget_bits: u64,
    pub elapsed_ms: u64,
}

impl Stats {
    fn new(ops: OpCounter, peak: u64, budget: u64, start: Instant) -> Self {
        Self {
            rotations: ops.rotations,
            swaps: ops.swaps,
            element_reads: ops.element_reads,
            comparisons: ops.comparisons,
            peak_workspace_bits: peak,
            budget_bits: budget,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub algo: Algo,
    pub model: ModelKind,
    pub space: Space,
    pub source: Vertex,
    pub order: Vec<Vertex>,
    pub levels: Option<Vec<usize>>,
    /// False when the source turned out not to reach every vertex and the
    /// variant needs it to.
    pub complete: bool,
    /// The input representation was restored to its original content.
    pub structure_ok: bool,
    pub stats: Stats,
    pub check: Option<bool>,
}

impl RunReport {
    pub fn traversal(&self) -> TraversalOrder {
        TraversalOrder {
            order: self.order.clone(),
            levels: self.levels.clone(),
            complete: self.complete,
        }
    }
}

/// Runs one traversal on a fresh representation of `g` with the meter
/// capped at the configuration's budget.
pub fn traverse(g: &GraphData, cfg: &RunConfig) -> Result<RunReport> {
    cfg.validate()?;
    let budget = cfg.budget(g);
    let s = cfg.source;
    let start = Instant::now();
    let (result, ops, peak, structure_ok) = match cfg.model {
        ModelKind::Rotate => {
            let mut rg = RotateGraph::new(g);
            rg.meter().set_budget(Some(budget));
            let r = match (cfg.algo, cfg.space) {
                (Algo::LexDfs, _) => lex_dfs_trits(&mut rg, s),
                (Algo::Dfs, Space::Linear) => dfs_linear_bits(&mut rg, s),
                (Algo::Dfs, _) => dfs_logspace(&mut rg, s),
                (Algo::Bfs, Space::Linear) => bfs_linear_bits(&mut rg, s),
                (Algo::Bfs, _) => bfs_logspace(&mut rg, s),
            };
            (r, rg.ops(), rg.meter().peak(), rg.verify_structure(g))
        }
        ModelKind::ImplicitList | ModelKind::ImplicitArray => {
            let layout = if cfg.model == ModelKind::ImplicitList { Layout::List } else { Layout::Array };
            let mut ig = ImplicitGraph::new(g, layout);
            ig.meter().set_budget(Some(budget));
            let r = match (cfg.algo, cfg.space) {
                (Algo::LexDfs, _) => lex_dfs_implicit(&mut ig, s),
                (Algo::Dfs, _) => dfs_implicit_logspace(&mut ig, s),
                (Algo::Bfs, Space::FourColor) => bfs_implicit_4color(&mut ig, s),
                (Algo::Bfs, Space::Ptrlist) => bfs_implicit_ptrlist(&mut ig, s),
                (Algo::Bfs, _) => bfs_implicit_logspace(&mut ig, s),
            };
            (r, ig.ops(), ig.meter().peak(), ig.verify_structure(g))
        }
        ModelKind::Rom => {
            let before = g.clone();
            let mut rom = RomGraph::with_budget(g, Some(budget))?;
            let r = rom_dfs(&mut rom, s);
            let (ops, peak) = (rom.ops(), rom.meter().peak());
            drop(rom);
            (r, ops, peak, *g == before)
        }
    };
    let t = result?;
    Ok(RunReport {
        algo: cfg.algo,
        model: cfg.model,
        space: cfg.space,
        source: s,
        order: t.order,
        levels: t.levels,
        complete: t.complete,
        structure_ok,
        stats: Stats::new(ops, peak, budget, start),
        check: None,
    })
}

/// Compares a traversal against the oracle for its algorithm: exact lex-DFS
/// (on sorted lists for the array layout), DFS-order validity, or exact BFS
/// levels.
pub fn check_traversal(g: &GraphData, cfg: &RunConfig, t: &TraversalOrder) -> bool {
    let s = cfg.source;
    match cfg.algo {
        Algo::LexDfs => {
            let expected = if cfg.model == ModelKind::ImplicitArray {
                oracle::lex_dfs(&g.sorted(), s)
            } else {
                oracle::lex_dfs(g, s)
            };
            t.order == expected
        }
        Algo::Dfs => oracle::check_general_dfs(g, s, &t.order),
        Algo::Bfs => {
            let levels = oracle::bfs_levels(g, s);
            oracle::check_bfs_order(g, s, &t.order)
                && t.levels.as_ref().is_some_and(|ls| {
                    ls.len() == t.order.len()
                        && t.order.iter().zip(ls).all(|(&v, &l)| levels.get(v) == Some(l))
                })
        }
    }
}

/// [`traverse`] followed by [`check_traversal`].
pub fn traverse_checked(g: &GraphData, cfg: &RunConfig) -> Result<RunReport> {
    let mut report = traverse(g, cfg)?;
    let ok = check_traversal(g, cfg, &report.traversal());
    report.check = Some(ok && report.structure_ok);
    Ok(report)
}

#[derive(Debug, Clone, Serialize)]
pub struct MstReport {
    pub model: ModelKind,
    pub source: Vertex,
    pub edges: Vec<MstEdge>,
    pub total: Weight,
    pub structure_ok: bool,
    pub stats: Stats,
    pub check: Option<bool>,
}

/// Prim's algorithm in place on the component of `s`.
pub fn run_mst(g: &GraphData, model: ModelKind, s: Vertex) -> Result<MstReport> {
    let budget = log_budget(g.vertex_count());
    let start = Instant::now();
    let (result, ops, peak, structure_ok) = match model {
        ModelKind::Rotate => {
            let mut rg = RotateGraph::new(g);
            rg.meter().set_budget(Some(budget));
            let r = mst_rotate(&mut rg, s);
            (r, rg.ops(), rg.meter().peak(), rg.verify_structure(g))
        }
        ModelKind::ImplicitList | ModelKind::ImplicitArray => {
            let layout = if model == ModelKind::ImplicitList { Layout::List } else { Layout::Array };
            let mut ig = ImplicitGraph::new(g, layout);
            ig.meter().set_budget(Some(budget));
            let r = mst_implicit(&mut ig, s);
            (r, ig.ops(), ig.meter().peak(), ig.verify_structure(g))
        }
        ModelKind::Rom => {
            return Err(Error::Unsupported(
                "minimum spanning trees need a writable model (rotate, implicit-list or implicit-array)".into(),
            ))
        }
    };
    let r = result?;
    Ok(MstReport {
        model,
        source: s,
        total: r.total,
        edges: r.edges,
        structure_ok,
        stats: Stats::new(ops, peak, budget, start),
        check: None,
    })
}

/// Checks an MST report against Kruskal on the component of its source.
pub fn check_mst(g: &GraphData, report: &MstReport) -> bool {
    let (_, weight) = oracle::mst(g, report.source);
    report.structure_ok && report.total == weight && report.edges.iter().map(|e| e.weight).sum::<Weight>() == weight
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    VertexCover,
    DominatingSet,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubsetReport {
    pub problem: Problem,
    pub result: Option<SubsetResult>,
    pub structure_ok: bool,
    pub stats: Stats,
    pub check: Option<bool>,
}

/// Exhaustive minimum vertex cover or dominating set on the rotate model.
pub fn run_subset(g: &GraphData, problem: Problem) -> Result<SubsetReport> {
    let budget = log_budget(g.vertex_count());
    let start = Instant::now();
    let mut rg = RotateGraph::new(g);
    rg.meter().set_budget(Some(budget));
    let result = match problem {
        Problem::VertexCover => vertex_cover_min(&mut rg),
        Problem::DominatingSet => dominating_set_min(&mut rg),
    }?;
    Ok(SubsetReport {
        problem,
        result,
        structure_ok: rg.verify_structure(g),
        stats: Stats::new(rg.ops(), rg.meter().peak(), budget, start),
        check: None,
    })
}

/// Compares the optimum with the bitmask oracle; needs `n ≤ 24`.
pub fn check_subset(g: &GraphData, report: &SubsetReport) -> Result<bool> {
    let expected = match report.problem {
        Problem::VertexCover => oracle::min_vertex_cover(g)?,
        Problem::DominatingSet => oracle::min_dominating_set(g)?,
    };
    Ok(report.structure_ok && report.result.as_ref().map(|r| r.size) == Some(expected))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> GraphData {
        GraphData::from_edges(4, false, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn every_combination_runs_and_checks() {
        let g = crate::generate::generate(&crate::generate::GenParams {
            n: 24,
            min_degree: 15,
            seed: 3,
            ..Default::default()
        })
        .unwrap();
        for &(algo, fam, space) in COMBINATIONS {
            let models: &[ModelKind] = match fam {
                Family::Rotate => &[ModelKind::Rotate],
                Family::Implicit => &[ModelKind::ImplicitList, ModelKind::ImplicitArray],
                Family::Rom => &[ModelKind::Rom],
            };
            for &model in models {
                let cfg = RunConfig { algo, model, space, source: 1 };
                let r = traverse_checked(&g, &cfg).unwrap();
                assert_eq!(r.check, Some(true), "{cfg:?}");
                assert!(r.stats.peak_workspace_bits <= r.stats.budget_bits);
            }
        }
    }

    #[test]
    fn rejects_bad_combination() {
        let cfg = RunConfig { algo: Algo::LexDfs, model: ModelKind::Rotate, space: Space::Log, source: 1 };
        let err = traverse(&g1(), &cfg).unwrap_err();
        assert!(err.to_string().contains("--algo bfs --model rotate --space log"));
    }

    #[test]
    fn g1_examples() {
        let cfg = RunConfig { algo: Algo::LexDfs, model: ModelKind::Rotate, space: Space::Trits, source: 1 };
        assert_eq!(traverse(&g1(), &cfg).unwrap().order, vec![1, 2, 3, 4]);
        let cfg = RunConfig { algo: Algo::Bfs, model: ModelKind::Rotate, space: Space::Log, source: 1 };
        assert_eq!(traverse_checked(&g1(), &cfg).unwrap().check, Some(true));
    }
}
