//! Color assignments aligned to canonical edge orders.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, PartiteSpec};

fn check_colors(expected: usize, t: u32, colors: &[u32]) -> Result<()> {
    if colors.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: colors.len(),
        });
    }
    if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > t) {
        return Err(Error::ColorOutOfRange { color, t });
    }
    Ok(())
}

/// A coloring of `K_n^k` with declared color count `t`.
///
/// Construction checks length and range only. Whether it is an interval
/// coloring is decided by [`crate::verify::verify`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    spec: PartiteSpec,
    t: u32,
    colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn new(spec: PartiteSpec, t: u32, colors: Vec<u32>) -> Result<Self> {
        check_colors(spec.edge_count(), t, &colors)?;
        Ok(EdgeColoring { spec, t, colors })
    }

    pub fn spec(&self) -> PartiteSpec {
        self.spec
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<u32> {
        self.colors
    }

    pub fn color_of(&self, e: EdgeId) -> u32 {
        self.colors[self.spec.edge_position(e)]
    }

    pub fn graph(&self) -> Graph {
        Graph::multipartite(self.spec)
    }
}

/// A coloring of the complete graph `K_m`, edges in lexicographic pair
/// order `(1,2), (1,3), ..., (m-1,m)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteColoring {
    m: usize,
    t: u32,
    colors: Vec<u32>,
}

impl CompleteColoring {
    pub fn new(m: usize, t: u32, colors: Vec<u32>) -> Result<Self> {
        check_colors(m * m.saturating_sub(1) / 2, t, &colors)?;
        Ok(CompleteColoring { m, t, colors })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Color of `(u_a, u_b)`, 1-based, `a != b`.
    pub fn color(&self, a: usize, b: usize) -> u32 {
        let (a, b) = (a.min(b) - 1, a.max(b) - 1);
        let before = a * self.m - a * (a + 1) / 2;
        self.colors[before + (b - a - 1)]
    }

    pub fn graph(&self) -> Graph {
        Graph::complete(self.m)
    }

    /// The same coloring viewed as `K_1^m`; both canonical orders agree.
    pub fn to_partite(&self) -> EdgeColoring {
        let spec = PartiteSpec::new(self.m.max(1), 1).expect("m >= 1");
        EdgeColoring {
            spec,
            t: self.t,
            colors: self.colors.clone(),
        }
    }

    /// Inverse of [`CompleteColoring::to_partite`]; `None` unless `n == 1`.
    pub fn from_partite(c: &EdgeColoring) -> Option<Self> {
        (c.spec.n() == 1).then(|| CompleteColoring {
            m: c.spec.k(),
            t: c.t,
            colors: c.colors.clone(),
        })
    }
}
