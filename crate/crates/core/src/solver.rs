//! Exhaustive backtracking search for interval colorings of small graphs.
//!
//! Edges are assigned depth-first. A color is admissible for `(u, v)` when
//! it is new at both endpoints and keeps each endpoint's colors inside a
//! window of length `degree`. If some unused color is admissible at exactly
//! one unassigned edge, that edge gets that color next. Otherwise the next
//! edge is the one with the fewest admissible colors (ties broken by edge
//! order). Branches are cut when some unassigned edge has no admissible
//! color, when an unused color is admissible nowhere, or when too few edges
//! remain to use every still-unused color.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, PartiteSpec};

/// Colors are bits `1..=MAX_COLORS` of a `u128`.
pub const MAX_COLORS: u32 = 127;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 100_000_000,
            max_seconds: 60.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SearchOptions {
    pub budget: SearchBudget,
    /// Fix the first edge to color 1. Only applied to edge-transitive
    /// graphs, where some color-1 edge can always be mapped onto it.
    pub symmetry_break: bool,
    /// Split the first branching edge's colors across threads.
    pub parallel: bool,
}

impl SearchOptions {
    pub fn with_budget(max_nodes: u64, max_seconds: f64) -> Self {
        SearchOptions {
            budget: SearchBudget {
                max_nodes,
                max_seconds,
            },
            ..SearchOptions::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SearchStatus {
    Witness,
    ProvenInfeasible,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SearchStatus,
    /// Colors aligned to the graph's edge order; present iff `Witness`.
    pub witness: Option<Vec<u32>>,
    pub nodes_explored: u64,
}

impl SolveOutcome {
    pub fn partite_witness(&self, spec: PartiteSpec, t: u32) -> Option<EdgeColoring> {
        self.witness
            .as_ref()
            .and_then(|w| EdgeColoring::new(spec, t, w.clone()).ok())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    Found,
    Infeasible,
    OutOfBudget,
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    max_nodes: u64,
    deadline: Instant,
}

impl Shared {
    /// Counts one node; false once the budget is spent or another branch
    /// asked to stop.
    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.max_nodes {
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        if n.is_multiple_of(4096) && Instant::now() >= self.deadline {
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        !self.stop.load(Ordering::Relaxed)
    }
}

#[derive(Clone)]
struct State<'g> {
    edges: &'g [(usize, usize)],
    degree: Vec<u32>,
    t: u32,
    full: u128,
    color: Vec<u32>,
    seen: Vec<u128>,
    use_count: Vec<u32>,
    unused: u32,
    remaining: u32,
    /// Per-edge admissible colors imposed from outside (symmetry, splits).
    forced: Vec<u128>,
}

fn bit(c: u32) -> u128 {
    1u128 << c
}

/// Bits `lo..=hi`, empty when `lo > hi`.
fn range_mask(lo: u32, hi: u32) -> u128 {
    if lo > hi {
        return 0;
    }
    let upper = if hi >= 127 {
        u128::MAX
    } else {
        (1u128 << (hi + 1)) - 1
    };
    upper & !((1u128 << lo) - 1)
}

impl<'g> State<'g> {
    fn new(graph: &'g Graph, t: u32) -> Self {
        let degree = graph.degrees().into_iter().map(|d| d as u32).collect();
        State {
            edges: graph.edges(),
            degree,
            t,
            full: range_mask(1, t),
            color: vec![0; graph.edge_count()],
            seen: vec![0; graph.vertex_count()],
            use_count: vec![0; t as usize + 1],
            unused: t,
            remaining: graph.edge_count() as u32,
            forced: vec![u128::MAX; graph.edge_count()],
        }
    }

    fn window(&self, v: usize) -> u128 {
        let s = self.seen[v];
        if s == 0 {
            return self.full;
        }
        let lo = s.trailing_zeros();
        let hi = 127 - s.leading_zeros();
        let d = self.degree[v];
        range_mask((hi + 1).saturating_sub(d).max(1), (lo + d - 1).min(self.t))
    }

    fn admissible(&self, e: usize) -> u128 {
        let (a, b) = self.edges[e];
        self.full
            & !(self.seen[a] | self.seen[b])
            & self.window(a)
            & self.window(b)
            & self.forced[e]
    }

    fn assign(&mut self, e: usize, c: u32) {
        let (a, b) = self.edges[e];
        self.color[e] = c;
        self.seen[a] |= bit(c);
        self.seen[b] |= bit(c);
        if self.use_count[c as usize] == 0 {
            self.unused -= 1;
        }
        self.use_count[c as usize] += 1;
        self.remaining -= 1;
    }

    fn unassign(&mut self, e: usize) {
        let (a, b) = self.edges[e];
        let c = self.color[e];
        self.color[e] = 0;
        self.seen[a] &= !bit(c);
        self.seen[b] &= !bit(c);
        self.use_count[c as usize] -= 1;
        if self.use_count[c as usize] == 0 {
            self.unused += 1;
        }
        self.remaining += 1;
    }

    /// Next edge and its admissible colors, or `None` when some edge has
    /// no admissible color left.
    /// Also fails when an unused color is admissible at no remaining edge.
    fn select(&self) -> Option<(usize, u128)> {
        let mut best: Option<(u32, usize, u128)> = None;
        let mut reachable = 0u128;
        let mut reachable_twice = 0u128;
        for e in 0..self.edges.len() {
            if self.color[e] != 0 {
                continue;
            }
            let allowed = self.admissible(e);
            if allowed == 0 {
                return None;
            }
            reachable_twice |= reachable & allowed;
            reachable |= allowed;
            let score = 128 - allowed.count_ones();
            if best.is_none_or(|(s, _, _)| score > s) {
                best = Some((score, e, allowed));
            }
        }
        let unused = (1..=self.t)
            .filter(|&c| self.use_count[c as usize] == 0)
            .fold(0u128, |m, c| m | bit(c));
        if unused & !reachable != 0 {
            return None;
        }
        // an unused color with a single candidate edge pins that edge
        let pinned = unused & !reachable_twice;
        if pinned != 0 {
            let c = bit(pinned.trailing_zeros());
            let e = (0..self.edges.len())
                .find(|&e| self.color[e] == 0 && self.admissible(e) & c != 0)?;
            return Some((e, c));
        }
        best.map(|(_, e, allowed)| (e, allowed))
    }

    fn dfs(&mut self, shared: &Shared) -> Step {
        if self.remaining == 0 {
            return if self.unused == 0 {
                Step::Found
            } else {
                Step::Infeasible
            };
        }
        let Some((e, mut allowed)) = self.select() else {
            return Step::Infeasible;
        };
        while allowed != 0 {
            let c = allowed.trailing_zeros();
            allowed &= allowed - 1;
            if !shared.tick() {
                return Step::OutOfBudget;
            }
            self.assign(e, c);
            if self.unused <= self.remaining {
                match self.dfs(shared) {
                    Step::Infeasible => {}
                    other => return other,
                }
            }
            self.unassign(e);
        }
        Step::Infeasible
    }
}

/// Searches for an interval `t`-coloring of `graph`.
///
/// `ProvenInfeasible` means the whole search space was exhausted. In
/// parallel mode the witness may differ from the sequential one, but the
/// status agrees.
pub fn find_interval_coloring(
    graph: &Graph,
    t: u32,
    options: &SearchOptions,
) -> Result<SolveOutcome> {
    let delta = graph.max_degree() as u32;
    if t < delta {
        return Err(Error::BadT { t, delta });
    }
    if t > MAX_COLORS {
        return Err(Error::TooManyColors { t, max: MAX_COLORS });
    }
    let shared = Shared {
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        max_nodes: options.budget.max_nodes,
        deadline: Instant::now() + Duration::from_secs_f64(options.budget.max_seconds.max(0.0)),
    };
    let mut root = State::new(graph, t);
    if options.symmetry_break && graph.is_edge_transitive() && graph.edge_count() > 0 {
        root.forced[0] = bit(1);
    }
    // more colors than edges can never all be used
    if t as usize > graph.edge_count() {
        return Ok(SolveOutcome {
            status: SearchStatus::ProvenInfeasible,
            witness: None,
            nodes_explored: 0,
        });
    }

    let (step, witness) = if options.parallel {
        search_parallel(root, &shared)
    } else {
        let step = root.dfs(&shared);
        (step, (step == Step::Found).then_some(root.color))
    };
    let status = match step {
        Step::Found => SearchStatus::Witness,
        Step::Infeasible => SearchStatus::ProvenInfeasible,
        Step::OutOfBudget => SearchStatus::BudgetExhausted,
    };
    Ok(SolveOutcome {
        status,
        witness,
        nodes_explored: shared
            .nodes
            .load(Ordering::Relaxed)
            .min(options.budget.max_nodes),
    })
}

fn search_parallel(root: State<'_>, shared: &Shared) -> (Step, Option<Vec<u32>>) {
    if root.remaining == 0 {
        let step = if root.unused == 0 {
            Step::Found
        } else {
            Step::Infeasible
        };
        return (step, (step == Step::Found).then_some(root.color));
    }
    let Some((e, allowed)) = root.select() else {
        return (Step::Infeasible, None);
    };
    let colors: Vec<u32> = (1..=root.t).filter(|&c| allowed & bit(c) != 0).collect();
    let results: Vec<(Step, Option<Vec<u32>>)> = std::thread::scope(|scope| {
        let handles: Vec<_> = colors
            .iter()
            .map(|&c| {
                let mut branch = root.clone();
                scope.spawn(move || {
                    if !shared.tick() {
                        return (Step::OutOfBudget, None);
                    }
                    branch.assign(e, c);
                    if branch.unused > branch.remaining {
                        return (Step::Infeasible, None);
                    }
                    let step = branch.dfs(shared);
                    if step == Step::Found {
                        shared.stop.store(true, Ordering::Relaxed);
                        (step, Some(branch.color))
                    } else {
                        (step, None)
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search thread panicked"))
            .collect()
    });
    if let Some(found) = results.iter().find(|(s, _)| *s == Step::Found) {
        return found.clone();
    }
    if results.iter().any(|(s, _)| *s == Step::OutOfBudget) {
        return (Step::OutOfBudget, None);
    }
    (Step::Infeasible, None)
}

/// A value the search either determined or could not settle in budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exact {
    Known(u32),
    Unknown,
}

impl Exact {
    pub fn known(self) -> Option<u32> {
        match self {
            Exact::Known(v) => Some(v),
            Exact::Unknown => None,
        }
    }
}

/// Smallest `t` with an interval `t`-coloring, scanning up from the
/// maximum degree.
pub fn exact_min_colors(graph: &Graph, options: &SearchOptions) -> Result<Exact> {
    let delta = graph.max_degree() as u32;
    let upper = (graph.edge_count() as u32).min(MAX_COLORS);
    for t in delta..=upper.max(delta) {
        match find_interval_coloring(graph, t, options)?.status {
            SearchStatus::Witness => return Ok(Exact::Known(t)),
            SearchStatus::BudgetExhausted => return Ok(Exact::Unknown),
            SearchStatus::ProvenInfeasible => {}
        }
    }
    Err(Error::NotColorable)
}

/// Largest `t` with an interval `t`-coloring. Every color must appear, so
/// `t <= |E|`. On regular graphs the feasible `t` form an interval starting
/// at the degree, so the scan stops at the first infeasible `t` after a
/// feasible one.
pub fn exact_max_colors(graph: &Graph, options: &SearchOptions) -> Result<Exact> {
    let delta = graph.max_degree() as u32;
    let upper = graph.edge_count() as u32;
    let regular = graph.is_regular();
    let mut best = None;
    let mut unsettled_above_best = false;
    for t in delta..=upper.max(delta) {
        if t > MAX_COLORS {
            unsettled_above_best = true;
            break;
        }
        match find_interval_coloring(graph, t, options)?.status {
            SearchStatus::Witness => {
                best = Some(t);
                unsettled_above_best = false;
            }
            SearchStatus::BudgetExhausted => unsettled_above_best = true,
            SearchStatus::ProvenInfeasible => {
                if regular && best.is_some() && !unsettled_above_best {
                    break;
                }
            }
        }
    }
    match best {
        None if !unsettled_above_best => Err(Error::NotColorable),
        Some(w) if !unsettled_above_best => Ok(Exact::Known(w)),
        _ => Ok(Exact::Unknown),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Feasibility {
    Feasible,
    Infeasible,
    Unknown,
}

impl Feasibility {
    pub fn symbol(self) -> &'static str {
        match self {
            Feasibility::Feasible => "F",
            Feasibility::Infeasible => "I",
            Feasibility::Unknown => "U",
        }
    }
}

impl From<SearchStatus> for Feasibility {
    fn from(s: SearchStatus) -> Self {
        match s {
            SearchStatus::Witness => Feasibility::Feasible,
            SearchStatus::ProvenInfeasible => Feasibility::Infeasible,
            SearchStatus::BudgetExhausted => Feasibility::Unknown,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Spectrum {
    pub entries: BTreeMap<u32, Feasibility>,
}

impl Spectrum {
    /// No `Infeasible` entry lies between two `Feasible` ones.
    pub fn feasible_is_contiguous(&self) -> bool {
        let feasible: Vec<u32> = self
            .entries
            .iter()
            .filter(|(_, f)| **f == Feasibility::Feasible)
            .map(|(t, _)| *t)
            .collect();
        match (feasible.first(), feasible.last()) {
            (Some(&lo), Some(&hi)) => self
                .entries
                .range(lo..=hi)
                .all(|(_, f)| *f != Feasibility::Infeasible),
            _ => true,
        }
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(t, f)| format!("{}:{}", t, f.symbol()))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Outcome for every `t` from the maximum degree to `t_max`.
pub fn feasible_spectrum(graph: &Graph, t_max: u32, options: &SearchOptions) -> Result<Spectrum> {
    let delta = graph.max_degree() as u32;
    let mut spectrum = Spectrum::default();
    for t in delta..=t_max {
        let status = find_interval_coloring(graph, t, options)?.status;
        spectrum.entries.insert(t, status.into());
    }
    Ok(spectrum)
}

/// Like [`feasible_spectrum`] up to `|E|`, but stops at the first
/// infeasible `t` that follows a feasible one.
pub fn spectrum_to_first_gap(graph: &Graph, options: &SearchOptions) -> Result<Spectrum> {
    let delta = graph.max_degree() as u32;
    let upper = (graph.edge_count() as u32).clamp(delta, MAX_COLORS);
    let mut spectrum = Spectrum::default();
    let mut seen_feasible = false;
    for t in delta..=upper {
        let f: Feasibility = find_interval_coloring(graph, t, options)?.status.into();
        spectrum.entries.insert(t, f);
        match f {
            Feasibility::Feasible => seen_feasible = true,
            Feasibility::Infeasible if seen_feasible => break,
            _ => {}
        }
    }
    Ok(spectrum)
}
