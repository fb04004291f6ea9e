//! On-disk coloring format.
//!
//! A document is a JSON object:
//!
//! ```json
//! {
//!   "format_version": "1",
//!   "kind": "kpartite",
//!   "k": 4,
//!   "n": 1,
//!   "t": 4,
//!   "colors": [1, 2, 3, 3, 2, 4],
//!   "provenance": { "source": "theorem3", "parent": null, "notes": "" }
//! }
//! ```
//!
//! `kind: "complete"` documents carry `m` instead of `k` and `n`. Colors
//! are listed in canonical edge order. Parsing checks the shape and the
//! array length but not the color values: out-of-range colors are the
//! verifier's business.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{CompleteColoring, EdgeColoring};
use crate::graph::{Graph, PartiteSpec};
use crate::verify::{verify_graph, VerificationReport};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format_version {0:?}")]
    Version(String),
    #[error("{kind} document is missing field {field}")]
    MissingField {
        kind: &'static str,
        field: &'static str,
    },
    #[error("{kind} document must not carry field {field}")]
    UnexpectedField {
        kind: &'static str,
        field: &'static str,
    },
    #[error("invalid instance: {0}")]
    Instance(#[from] crate::error::Error),
    #[error("colors has {found} entries, instance has {expected} edges")]
    Length { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocumentKind {
    Kpartite,
    Complete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Theorem3,
    Lift,
    Blowup,
    Solver,
    Compress,
    External,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub source: Source,
    #[serde(default)]
    pub parent: Option<String>,
    #[serde(default)]
    pub notes: String,
}

impl Provenance {
    pub fn new(source: Source) -> Self {
        Provenance {
            source,
            parent: None,
            notes: String::new(),
        }
    }

    pub fn with_parent(mut self, parent: impl Into<String>) -> Self {
        self.parent = Some(parent.into());
        self
    }

    pub fn with_notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }
}

/// Instance a document colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instance {
    Partite(PartiteSpec),
    Complete(usize),
}

impl Instance {
    pub fn graph(&self) -> Graph {
        match *self {
            Instance::Partite(spec) => Graph::multipartite(spec),
            Instance::Complete(m) => Graph::complete(m),
        }
    }

    /// The instance as `K_n^k`; `K_m` is `K_1^m`.
    pub fn as_partite(&self) -> PartiteSpec {
        match *self {
            Instance::Partite(spec) => spec,
            Instance::Complete(m) => PartiteSpec::new(m, 1).expect("m >= 1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDocument {
    pub format_version: String,
    pub kind: DocumentKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub t: u32,
    pub colors: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl ColoringDocument {
    pub fn from_partite(c: &EdgeColoring, provenance: Option<Provenance>) -> Self {
        ColoringDocument {
            format_version: FORMAT_VERSION.to_string(),
            kind: DocumentKind::Kpartite,
            k: Some(c.spec().k()),
            n: Some(c.spec().n()),
            m: None,
            t: c.t(),
            colors: c.colors().to_vec(),
            provenance,
        }
    }

    pub fn from_complete(c: &CompleteColoring, provenance: Option<Provenance>) -> Self {
        ColoringDocument {
            format_version: FORMAT_VERSION.to_string(),
            kind: DocumentKind::Complete,
            k: None,
            n: None,
            m: Some(c.m()),
            t: c.t(),
            colors: c.colors().to_vec(),
            provenance,
        }
    }

    /// Parses and checks shape and length.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: ColoringDocument = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn instance(&self) -> Result<Instance, DocumentError> {
        match self.kind {
            DocumentKind::Kpartite => {
                const KIND: &str = "kpartite";
                if self.m.is_some() {
                    return Err(DocumentError::UnexpectedField {
                        kind: KIND,
                        field: "m",
                    });
                }
                let k = self.k.ok_or(DocumentError::MissingField {
                    kind: KIND,
                    field: "k",
                })?;
                let n = self.n.ok_or(DocumentError::MissingField {
                    kind: KIND,
                    field: "n",
                })?;
                Ok(Instance::Partite(PartiteSpec::new(k, n)?))
            }
            DocumentKind::Complete => {
                const KIND: &str = "complete";
                for (field, present) in [("k", self.k.is_some()), ("n", self.n.is_some())] {
                    if present {
                        return Err(DocumentError::UnexpectedField { kind: KIND, field });
                    }
                }
                let m = self.m.ok_or(DocumentError::MissingField {
                    kind: KIND,
                    field: "m",
                })?;
                if m == 0 {
                    return Err(crate::error::Error::InvalidSpec { k: 0, n: 1 }.into());
                }
                Ok(Instance::Complete(m))
            }
        }
    }

    pub fn validate(&self) -> Result<(), DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::Version(self.format_version.clone()));
        }
        let expected = self.instance()?.graph().edge_count();
        if self.colors.len() != expected {
            return Err(DocumentError::Length {
                expected,
                found: self.colors.len(),
            });
        }
        Ok(())
    }

    pub fn verify(&self) -> Result<VerificationReport, DocumentError> {
        let graph = self.instance()?.graph();
        Ok(verify_graph(&graph, &self.colors, self.t)?)
    }

    /// Strict conversion; complete documents come back as `K_1^m`.
    pub fn to_partite(&self) -> Result<EdgeColoring, DocumentError> {
        let spec = self.instance()?.as_partite();
        Ok(EdgeColoring::new(spec, self.t, self.colors.clone())?)
    }

    /// Strict conversion to a `K_m` coloring; accepts `complete` documents
    /// and `kpartite` documents with `n = 1`.
    pub fn to_complete(&self) -> Result<CompleteColoring, DocumentError> {
        let m = match self.instance()? {
            Instance::Complete(m) => m,
            Instance::Partite(spec) if spec.n() == 1 => spec.k(),
            Instance::Partite(_) => {
                return Err(DocumentError::UnexpectedField {
                    kind: "complete base",
                    field: "n > 1",
                })
            }
        };
        Ok(CompleteColoring::new(m, self.t, self.colors.clone())?)
    }

    /// One line `i p j q c` per edge, 1-based, canonical order.
    pub fn to_edgelist(&self) -> Result<String, DocumentError> {
        self.validate()?;
        let spec = self.instance()?.as_partite();
        let mut out = String::new();
        for (e, c) in crate::graph::enumerate_edges(spec).iter().zip(&self.colors) {
            writeln!(
                out,
                "{} {} {} {} {}",
                e.u.part, e.u.index, e.v.part, e.v.index, c
            )
            .unwrap();
        }
        Ok(out)
    }

    /// For each part pair `(i, j)`, a header line `# i j` followed by an
    /// `n x n` grid whose row `p`, column `q` is the color of
    /// `(x_p^(i), x_q^(j))`.
    pub fn to_matrix(&self) -> Result<String, DocumentError> {
        self.validate()?;
        let spec = self.instance()?.as_partite();
        let (k, n) = (spec.k(), spec.n());
        let mut out = String::new();
        let mut blocks = self.colors.chunks(n * n);
        for i in 1..=k {
            for j in i + 1..=k {
                writeln!(out, "# {i} {j}").unwrap();
                let block = blocks.next().expect("length validated");
                for row in block.chunks(n) {
                    let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                    writeln!(out, "{}", cells.join(" ")).unwrap();
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> ColoringDocument {
        let c =
            EdgeColoring::new(PartiteSpec::new(4, 1).unwrap(), 4, vec![1, 2, 3, 3, 2, 4]).unwrap();
        ColoringDocument::from_partite(&c, Some(Provenance::new(Source::Theorem3)))
    }

    #[test]
    fn json_round_trip() {
        let doc = k4();
        let text = doc.to_json();
        assert!(text.contains("\"source\": \"theorem3\""));
        assert_eq!(ColoringDocument::parse(&text).unwrap(), doc);
    }

    #[test]
    fn rejects_malformed() {
        let mut doc = k4();
        doc.colors.pop();
        assert!(matches!(
            ColoringDocument::parse(&doc.to_json()),
            Err(DocumentError::Length {
                expected: 6,
                found: 5
            })
        ));
        let mut doc = k4();
        doc.format_version = "2".into();
        assert!(matches!(
            ColoringDocument::parse(&doc.to_json()),
            Err(DocumentError::Version(_))
        ));
        let mut doc = k4();
        doc.m = Some(4);
        assert!(ColoringDocument::parse(&doc.to_json()).is_err());
        assert!(ColoringDocument::parse("{\"format_version\": \"1\"").is_err());
        assert!(ColoringDocument::parse(
            r#"{"format_version":"1","kind":"complete","m":2,"t":1,"colors":[1],"extra":0}"#
        )
        .is_err());
    }

    #[test]
    fn out_of_range_colors_parse_but_fail_verification() {
        let mut doc = k4();
        doc.colors[0] = 9;
        let doc = ColoringDocument::parse(&doc.to_json()).unwrap();
        assert!(!doc.verify().unwrap().passed());
        assert!(doc.to_partite().is_err());
    }

    #[test]
    fn edgelist_and_matrix() {
        let c = CompleteColoring::new(2, 1, vec![1]).unwrap();
        let doc = ColoringDocument::from_complete(&c, None);
        assert_eq!(doc.to_edgelist().unwrap(), "1 1 2 1 1\n");
        let text = k4().to_edgelist().unwrap();
        let last: Vec<&str> = text
            .lines()
            .map(|l| l.rsplit(' ').next().unwrap())
            .collect();
        assert_eq!(last, vec!["1", "2", "3", "3", "2", "4"]);

        let lifted =
            EdgeColoring::new(PartiteSpec::new(2, 2).unwrap(), 3, vec![1, 2, 2, 3]).unwrap();
        let doc = ColoringDocument::from_partite(&lifted, None);
        assert_eq!(doc.to_matrix().unwrap(), "# 1 2\n1 2\n2 3\n");
    }

    #[test]
    fn complete_base_from_partite_n1() {
        let base = k4().to_complete().unwrap();
        assert_eq!(base.m(), 4);
        assert_eq!(base.color(3, 4), 4);
    }
}
