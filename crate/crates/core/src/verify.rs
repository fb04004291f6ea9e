//! Checker for the interval t-coloring axioms.
//!
//! A coloring with colors in `1..=t` passes when it is proper, every vertex
//! sees a set of consecutive colors whose size equals its degree, and every
//! color in `1..=t` is used. Reports are maximal: every violation is
//! listed, sorted by vertex and then by color.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::interval::{is_interval_set, IntervalSet};

/// The color set `S(x)` seen at a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    pub vertex: VertexId,
    pub colors: BTreeSet<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ViolationKind {
    DuplicateAtVertex,
    GapAtVertex,
    UnusedColor,
    ColorOutOfRange,
}

/// Where a violation was found. Vertices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Site {
    Vertex(usize),
    Color(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    #[serde(rename = "where")]
    pub site: Site,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub proper: bool,
    pub interval_at_every_vertex: bool,
    pub all_colors_used: bool,
    pub t: u32,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.proper && self.interval_at_every_vertex && self.all_colors_used
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} t={} proper={} interval={} all_colors_used={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.t,
            self.proper,
            self.interval_at_every_vertex,
            self.all_colors_used
        )?;
        for v in &self.violations {
            let site = match v.site {
                Site::Vertex(x) => format!("vertex {x}"),
                Site::Color(c) => format!("color {c}"),
            };
            writeln!(f, "  {:?} at {}: {}", v.kind, site, v.detail)?;
        }
        Ok(())
    }
}

fn format_set(set: &BTreeSet<u32>) -> String {
    let items: Vec<String> = set.iter().map(u32::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// Per-vertex color sets of an arbitrary graph; duplicates collapse here,
/// so callers that care about properness must check it separately.
pub fn graph_palettes(graph: &Graph, colors: &[u32]) -> Result<Vec<BTreeSet<u32>>> {
    if colors.len() != graph.edge_count() {
        return Err(Error::LengthMismatch {
            expected: graph.edge_count(),
            found: colors.len(),
        });
    }
    let mut sets = vec![BTreeSet::new(); graph.vertex_count()];
    for (&(a, b), &c) in graph.edges().iter().zip(colors) {
        sets[a].insert(c);
        sets[b].insert(c);
    }
    Ok(sets)
}

/// Palettes of every vertex of `K_n^k`, in vertex order.
pub fn palettes(c: &EdgeColoring) -> Vec<Palette> {
    let spec = c.spec();
    graph_palettes(&c.graph(), c.colors())
        .expect("EdgeColoring length is checked on construction")
        .into_iter()
        .enumerate()
        .map(|(i, colors)| Palette {
            vertex: spec.vertex_at(i),
            colors,
        })
        .collect()
}

/// Verifies `colors` (aligned to `graph.edges()`) as an interval
/// `t`-coloring of any simple graph.
pub fn verify_graph(graph: &Graph, colors: &[u32], t: u32) -> Result<VerificationReport> {
    if colors.len() != graph.edge_count() {
        return Err(Error::LengthMismatch {
            expected: graph.edge_count(),
            found: colors.len(),
        });
    }
    let mut violations = Vec::new();
    let mut proper = true;
    let mut interval = true;

    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); graph.vertex_count()];
    for (&(a, b), &c) in graph.edges().iter().zip(colors) {
        incident[a].push(c);
        incident[b].push(c);
    }

    for (v, seen) in incident.iter_mut().enumerate() {
        if seen.is_empty() {
            continue;
        }
        seen.sort_unstable();
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &c in seen.iter() {
            *counts.entry(c).or_default() += 1;
        }
        for (&c, &m) in counts.iter().filter(|(_, &m)| m > 1) {
            proper = false;
            violations.push(Violation {
                kind: ViolationKind::DuplicateAtVertex,
                site: Site::Vertex(v + 1),
                detail: format!("{}: color {} on {} incident edges", graph.label(v), c, m),
            });
        }
        let set: BTreeSet<u32> = counts.keys().copied().collect();
        let contiguous = is_interval_set(&set).expect("non-empty");
        if set.len() != seen.len() || !contiguous {
            interval = false;
        }
        if !contiguous {
            let lo = *set.first().unwrap();
            let hi = *set.last().unwrap();
            let missing: BTreeSet<u32> = (lo..=hi).filter(|c| !set.contains(c)).collect();
            violations.push(Violation {
                kind: ViolationKind::GapAtVertex,
                site: Site::Vertex(v + 1),
                detail: format!(
                    "{}: palette {} is missing {}",
                    graph.label(v),
                    format_set(&set),
                    format_set(&missing)
                ),
            });
        }
    }

    let mut used = vec![false; t as usize + 1];
    let mut out_of_range: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in colors {
        if c == 0 || c > t {
            *out_of_range.entry(c).or_default() += 1;
        } else {
            used[c as usize] = true;
        }
    }
    let mut all_used = true;
    for (c, &u) in used.iter().enumerate().skip(1) {
        if !u {
            all_used = false;
            violations.push(Violation {
                kind: ViolationKind::UnusedColor,
                site: Site::Color(c as u32),
                detail: format!("no edge has color {c}"),
            });
        }
    }
    for (&c, &m) in &out_of_range {
        // an out-of-range color means the palette cannot sit inside 1..=t
        interval = false;
        violations.push(Violation {
            kind: ViolationKind::ColorOutOfRange,
            site: Site::Color(c),
            detail: format!("{m} edge(s) colored {c}, outside 1..={t}"),
        });
    }

    violations.sort_by_key(|a| (a.site, a.kind));
    Ok(VerificationReport {
        proper,
        interval_at_every_vertex: interval,
        all_colors_used: all_used,
        t,
        violations,
    })
}

/// Verifies a coloring of `K_n^k`.
pub fn verify(c: &EdgeColoring) -> VerificationReport {
    verify_graph(&c.graph(), c.colors(), c.t()).expect("length checked on construction")
}

/// A vertex whose palette differs from its closed-form interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaletteMismatch {
    pub vertex: VertexId,
    pub expected: IntervalSet,
    pub actual: BTreeSet<u32>,
}

/// The palette `x_j^(i)` must have under the banded coloring:
/// `Int(start, (k-1) n)` with `start` depending on which band `i` falls in.
pub fn banded_palette(k: usize, n: usize, v: VertexId) -> IntervalSet {
    let (i, j) = (v.part, v.index);
    let half = k / 2;
    let start = if i <= 2 {
        j
    } else if i >= k - 1 {
        j + n * (half - 1)
    } else if i <= half {
        j + n * (i - 2)
    } else {
        j + n * (i - half)
    };
    IntervalSet::starting_at(start as u32, ((k - 1) * n) as u32).expect("k >= 2")
}

/// Compares every vertex palette of a banded coloring against
/// [`banded_palette`]; returns all mismatches (empty on success).
pub fn palette_formula_check(c: &EdgeColoring) -> Result<Vec<PaletteMismatch>> {
    let spec = c.spec();
    if spec.k() % 2 == 1 {
        return Err(Error::OddK { k: spec.k() });
    }
    Ok(palettes(c)
        .into_iter()
        .filter_map(|p| {
            let expected = banded_palette(spec.k(), spec.n(), p.vertex);
            let matches = p.colors.len() == expected.len() as usize
                && p.colors.iter().copied().eq(expected.iter());
            (!matches).then_some(PaletteMismatch {
                vertex: p.vertex,
                expected,
                actual: p.colors,
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PartiteSpec;

    fn k4_wide() -> EdgeColoring {
        EdgeColoring::new(PartiteSpec::new(4, 1).unwrap(), 4, vec![1, 2, 3, 3, 2, 4]).unwrap()
    }

    #[test]
    fn k2_palettes() {
        let c = EdgeColoring::new(PartiteSpec::new(2, 1).unwrap(), 1, vec![1]).unwrap();
        let ps = palettes(&c);
        assert_eq!(ps.len(), 2);
        assert!(ps.iter().all(|p| p.colors == BTreeSet::from([1])));
    }

    #[test]
    fn k4_palette_of_third_vertex() {
        let ps = palettes(&k4_wide());
        assert_eq!(ps[2].vertex, VertexId::new(3, 1));
        assert_eq!(ps[2].colors, BTreeSet::from([2, 3, 4]));
    }

    #[test]
    fn k4_four_coloring_passes() {
        let r = verify(&k4_wide());
        assert!(r.passed(), "{r}");
        assert!(r.violations.is_empty());
    }

    #[test]
    fn gap_on_path() {
        let path = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let r = verify_graph(&path, &[1, 3], 3).unwrap();
        assert!(r.proper && !r.interval_at_every_vertex && !r.all_colors_used);
        let gap: Vec<_> = r
            .violations
            .iter()
            .filter(|v| v.kind == ViolationKind::GapAtVertex)
            .collect();
        assert_eq!(gap.len(), 1);
        assert_eq!(gap[0].site, Site::Vertex(2));
    }

    #[test]
    fn unused_color() {
        let c = EdgeColoring::new(PartiteSpec::new(2, 2).unwrap(), 4, vec![1, 2, 2, 3]).unwrap();
        let r = verify(&c);
        assert!(r.proper && r.interval_at_every_vertex && !r.all_colors_used);
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.violations[0].kind, ViolationKind::UnusedColor);
        assert_eq!(r.violations[0].site, Site::Color(4));
    }

    #[test]
    fn duplicates_still_get_interval_analysis() {
        // both edges at vertex 2 colored 1, and vertex 2 also sees 3
        let g = Graph::new(4, vec![(0, 1), (1, 2), (1, 3)]).unwrap();
        let r = verify_graph(&g, &[1, 1, 3], 3).unwrap();
        let kinds: Vec<_> = r.violations.iter().map(|v| (v.site, v.kind)).collect();
        assert_eq!(
            kinds,
            vec![
                (Site::Vertex(2), ViolationKind::DuplicateAtVertex),
                (Site::Vertex(2), ViolationKind::GapAtVertex),
                (Site::Color(2), ViolationKind::UnusedColor),
            ]
        );
        assert!(!r.proper && !r.interval_at_every_vertex);
    }

    #[test]
    fn out_of_range_reported() {
        let g = Graph::complete(2);
        let r = verify_graph(&g, &[2], 1).unwrap();
        assert!(!r.passed());
        assert!(r
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::ColorOutOfRange && v.site == Site::Color(2)));
        assert!(verify_graph(&g, &[1, 1], 1).is_err());
    }

    #[test]
    fn banded_palette_closed_forms() {
        assert_eq!(
            banded_palette(4, 1, VertexId::new(1, 1)),
            IntervalSet::starting_at(1, 3).unwrap()
        );
        assert_eq!(
            banded_palette(4, 1, VertexId::new(4, 1)),
            IntervalSet::new(2, 4).unwrap()
        );
        assert!(palette_formula_check(&k4_wide()).unwrap().is_empty());
    }
}
