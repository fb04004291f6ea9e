//! Complete k-partite graphs `K_n^k`, a general simple-graph container, and
//! the closed-form quantities (degree, chromatic index, interval bounds).
//!
//! Vertex `x_j^(i)` is written `VertexId { part: i, index: j }` and both
//! coordinates are 1-based. Internally vertices are numbered
//! `(i - 1) * n + (j - 1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pair `(k, n)`: `k` parts of `n` vertices each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartiteSpec {
    k: usize,
    n: usize,
}

impl PartiteSpec {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidSpec { k, n });
        }
        Ok(PartiteSpec { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.k * self.n
    }

    pub fn edge_count(&self) -> usize {
        self.n * self.n * self.k * (self.k - 1) / 2
    }

    /// Internal 0-based vertex number.
    pub fn vertex_index(&self, v: VertexId) -> usize {
        (v.part - 1) * self.n + (v.index - 1)
    }

    pub fn vertex_at(&self, idx: usize) -> VertexId {
        VertexId {
            part: idx / self.n + 1,
            index: idx % self.n + 1,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(|i| self.vertex_at(i))
    }

    /// Position of `e` in the canonical edge order.
    pub fn edge_position(&self, e: EdgeId) -> usize {
        let (i, j) = (e.u.part, e.v.part);
        // part pairs (a, b) with a < i come first, then (i, b) with b < j
        let before_i = (i - 1) * self.k - (i - 1) * i / 2;
        let pair = before_i + (j - i - 1);
        pair * self.n * self.n + (e.u.index - 1) * self.n + (e.v.index - 1)
    }

    pub(crate) fn require_edges(&self) -> Result<()> {
        if self.k < 2 {
            return Err(Error::TooFewParts { k: self.k });
        }
        Ok(())
    }
}

impl fmt::Display for PartiteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_{}^{}", self.n, self.k)
    }
}

/// Vertex `x_index^(part)`, both coordinates 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexId {
    pub part: usize,
    pub index: usize,
}

impl VertexId {
    pub fn new(part: usize, index: usize) -> Self {
        VertexId { part, index }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x_{}^({})", self.index, self.part)
    }
}

/// A cross-part edge, stored with `u.part < v.part`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId {
    pub u: VertexId,
    pub v: VertexId,
}

impl EdgeId {
    /// Orients the pair canonically. `None` for two vertices of one part.
    pub fn new(a: VertexId, b: VertexId) -> Option<Self> {
        match a.part.cmp(&b.part) {
            std::cmp::Ordering::Less => Some(EdgeId { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(EdgeId { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Edges of `K_n^k` ordered by `(u.part, v.part, u.index, v.index)`.
///
/// This order is the layout of every color array in the crate.
pub fn enumerate_edges(spec: PartiteSpec) -> Vec<EdgeId> {
    let (k, n) = (spec.k, spec.n);
    let mut edges = Vec::with_capacity(spec.edge_count());
    for i in 1..=k {
        for j in i + 1..=k {
            for p in 1..=n {
                for q in 1..=n {
                    edges.push(EdgeId {
                        u: VertexId::new(i, p),
                        v: VertexId::new(j, q),
                    });
                }
            }
        }
    }
    edges
}

/// What a [`Graph`] was built from; drives vertex labels and the solver's
/// symmetry reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    General,
    /// `K_m` with vertices `u_1..u_m`.
    Complete(usize),
    Multipartite(PartiteSpec),
}

/// A simple undirected graph with an ordered edge list.
///
/// Vertices are `0..vertex_count`. Edge order is significant: color arrays
/// are aligned to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    kind: GraphKind,
}

impl Graph {
    /// Builds a general graph, rejecting loops, out-of-range endpoints and
    /// repeated edges.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", a + 1)));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) outside {} vertices",
                    a + 1,
                    b + 1,
                    vertex_count
                )));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "repeated edge ({}, {})",
                    e.0 + 1,
                    e.1 + 1
                )));
            }
            normalized.push(e);
        }
        Ok(Graph {
            vertex_count,
            edges: normalized,
            kind: GraphKind::General,
        })
    }

    /// `K_m` with edges in lexicographic pair order.
    pub fn complete(m: usize) -> Self {
        let edges = (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .collect();
        Graph {
            vertex_count: m,
            edges,
            kind: GraphKind::Complete(m),
        }
    }

    /// `K_n^k` with edges in canonical order.
    pub fn multipartite(spec: PartiteSpec) -> Self {
        let edges = enumerate_edges(spec)
            .into_iter()
            .map(|e| (spec.vertex_index(e.u), spec.vertex_index(e.v)))
            .collect();
        Graph {
            vertex_count: spec.vertex_count(),
            edges,
            kind: GraphKind::Multipartite(spec),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let deg = self.degrees();
        deg.windows(2).all(|w| w[0] == w[1])
    }

    /// Edge indices incident to each vertex, in edge order.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            inc[a].push(e);
            inc[b].push(e);
        }
        inc
    }

    /// Edge-transitive graphs admit "some edge has color 1" as a symmetry
    /// reduction. Only the named families are known to qualify.
    pub fn is_edge_transitive(&self) -> bool {
        !matches!(self.kind, GraphKind::General)
    }

    /// Human-readable vertex name.
    pub fn label(&self, v: usize) -> String {
        match self.kind {
            GraphKind::General => format!("v{}", v + 1),
            GraphKind::Complete(_) => format!("u_{}", v + 1),
            GraphKind::Multipartite(spec) => spec.vertex_at(v).to_string(),
        }
    }
}

/// Maximum (and common) vertex degree `(k - 1) * n`.
pub fn max_degree(spec: PartiteSpec) -> u32 {
    ((spec.k - 1) * spec.n) as u32
}

/// Chromatic index: `(k-1)n` when `nk` is even, one more when odd.
pub fn chromatic_index(spec: PartiteSpec) -> Result<u32> {
    spec.require_edges()?;
    let delta = max_degree(spec);
    Ok(if (spec.n * spec.k).is_multiple_of(2) {
        delta
    } else {
        delta + 1
    })
}

/// Membership in the class of interval colorable graphs. For a regular
/// graph this is `chromatic_index == max_degree`.
pub fn is_interval_colorable(spec: PartiteSpec) -> Result<bool> {
    Ok(chromatic_index(spec)? == max_degree(spec))
}

/// Least `t` admitting an interval `t`-coloring.
pub fn w_value(spec: PartiteSpec) -> Result<u32> {
    if !is_interval_colorable(spec)? {
        return Err(Error::NotIntervalColorable {
            k: spec.k,
            n: spec.n,
        });
    }
    Ok(max_degree(spec))
}

/// Splits `x > 0` as `p * 2^q` with `p` odd.
pub fn odd_part_decomposition(x: usize) -> (usize, u32) {
    assert!(x > 0, "decomposition of zero");
    let mut p = x;
    let mut q = 0;
    while p.is_multiple_of(2) {
        p /= 2;
        q += 1;
    }
    (p, q)
}

/// Interval coloring length of `K_m`, `m = p * 2^q` with `q >= 1`, that the
/// lift expects as its base: `2m - 1 - p - q`. `None` for odd `m`.
pub fn complete_graph_target(m: usize) -> Option<u32> {
    if m == 0 {
        return None;
    }
    let (p, q) = odd_part_decomposition(m);
    (q >= 1).then(|| (2 * m - 1 - p) as u32 - q)
}

/// Color count of the eight-case banded coloring, `(3k/2 - 1) n - 1`, for
/// even `k`.
pub fn banded_bound(spec: PartiteSpec) -> Option<u32> {
    (spec.k >= 2 && spec.k.is_multiple_of(2)).then(|| ((3 * spec.k / 2 - 1) * spec.n - 1) as u32)
}

/// Color count of the lift of a `K_k` coloring meeting
/// [`complete_graph_target`]: `(2k - p - q) n - 1`.
pub fn lift_bound(spec: PartiteSpec) -> Option<u32> {
    complete_graph_target(spec.k).map(|t| (t + 1) * spec.n as u32 - 1)
}

/// Color count of the lift of a circle-method 1-factorization: `k n - 1`.
pub fn lifted_factorization_bound(spec: PartiteSpec) -> Option<u32> {
    (spec.k >= 2 && spec.k.is_multiple_of(2)).then(|| (spec.k * spec.n - 1) as u32)
}

/// Which construction certifies a lower bound on the largest interval
/// coloring length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundSource {
    /// The eight-case banded coloring (even `k`).
    Banded,
    /// Lift of a `K_k` coloring with `2k - 1 - p - q` colors.
    Lifted,
    /// Lift of the circle-method factorization of `K_k`.
    LiftedFactorization,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub delta: u32,
    pub chi_prime: u32,
    pub colorable: bool,
    pub w_value: Option<u32>,
    pub banded: Option<u32>,
    pub lifted: Option<u32>,
    pub lifted_factorization: Option<u32>,
    /// Best known lower bound on the largest interval coloring length.
    pub w_max_lower: Option<u32>,
    pub source: Option<BoundSource>,
}

/// All closed-form quantities for `spec`. Bounds are absent when the graph
/// is not interval colorable.
pub fn bound_report(spec: PartiteSpec) -> Result<BoundReport> {
    let chi_prime = chromatic_index(spec)?;
    let delta = max_degree(spec);
    let colorable = chi_prime == delta;
    let mut report = BoundReport {
        delta,
        chi_prime,
        colorable,
        w_value: None,
        banded: None,
        lifted: None,
        lifted_factorization: None,
        w_max_lower: None,
        source: None,
    };
    if !colorable {
        return Ok(report);
    }
    report.w_value = Some(delta);
    report.banded = banded_bound(spec);
    report.lifted = lift_bound(spec);
    report.lifted_factorization = lifted_factorization_bound(spec);
    // ties keep the earlier source
    let candidates = [
        (report.banded, BoundSource::Banded),
        (report.lifted, BoundSource::Lifted),
        (
            report.lifted_factorization,
            BoundSource::LiftedFactorization,
        ),
    ];
    for (value, source) in candidates {
        if let Some(v) = value {
            if report.w_max_lower.is_none_or(|best| v > best) {
                report.w_max_lower = Some(v);
                report.source = Some(source);
            }
        }
    }
    Ok(report)
}

/// Like [`bound_report`] but rejects instances that are not interval
/// colorable.
pub fn best_w_lower(spec: PartiteSpec) -> Result<BoundReport> {
    let report = bound_report(spec)?;
    if !report.colorable {
        return Err(Error::NotIntervalColorable {
            k: spec.k,
            n: spec.n,
        });
    }
    Ok(report)
}
