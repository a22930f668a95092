//! The gem document format.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "dimension": 2,
//!   "labels": ["v^1", "v^2"],
//!   "edges": [[0, 1, 0], [0, 1, 1], [0, 1, 2]]
//! }
//! ```
//!
//! A map document is a source gem with a `map` section holding the target
//! gem inline and one target vertex id per source vertex. Serialization is
//! structural: edges are written in canonical order, so equal gems give equal
//! bytes while relabeled copies do not.

use gemkit_core::degree::ColoredVertexMap;
use gemkit_core::{Edge, Error, Gem, VertexLabel};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The only version written and accepted.
pub const FORMAT_VERSION: u32 = 1;

/// Serialized gem, optionally carrying a map to a target gem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GemDocument {
    pub format_version: u32,
    pub dimension: usize,
    pub labels: Vec<String>,
    pub edges: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<MapSection>,
}

/// The `map` section of a map document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSection {
    pub target: Box<GemDocument>,
    pub assignment: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocumentError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{location}: format_version {found} is not supported (expected {FORMAT_VERSION})")]
    Version { location: String, found: u32 },
    #[error("{location}: {source}")]
    Invalid { location: String, source: Error },
    #[error("expected a {expected} document")]
    WrongKind { expected: &'static str },
}

impl DocumentError {
    /// Machine-readable code: `SyntaxError` or the library error code.
    pub fn code(&self) -> &'static str {
        match self {
            DocumentError::Syntax { .. } => "SyntaxError",
            DocumentError::Version { .. } => "UnsupportedVersion",
            DocumentError::Invalid { source, .. } => source.code(),
            DocumentError::WrongKind { .. } => "WrongKind",
        }
    }

    /// Where in the document the problem is.
    pub fn location(&self) -> String {
        match self {
            DocumentError::Syntax { line, column, .. } => format!("line {line}, column {column}"),
            DocumentError::Version { location, .. } | DocumentError::Invalid { location, .. } => location.clone(),
            DocumentError::WrongKind { .. } => String::new(),
        }
    }
}

/// A parsed document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Gem(Gem),
    Map(ColoredVertexMap),
}

impl GemDocument {
    pub fn from_gem(gem: &Gem) -> Self {
        GemDocument {
            format_version: FORMAT_VERSION,
            dimension: gem.dimension(),
            labels: gem.labels().iter().map(ToString::to_string).collect(),
            edges: gem.edges().iter().map(|e| [e.u, e.v, e.color.index()]).collect(),
            map: None,
        }
    }

    pub fn from_map(map: &ColoredVertexMap) -> Self {
        GemDocument {
            map: Some(MapSection {
                target: Box::new(GemDocument::from_gem(map.target())),
                assignment: map.assignment().to_vec(),
            }),
            ..GemDocument::from_gem(map.source())
        }
    }

    fn to_gem(&self, prefix: &str) -> Result<Gem, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(DocumentError::Version {
                location: format!("{prefix}format_version"),
                found: self.format_version,
            });
        }
        let invalid = |location: String, source: Error| DocumentError::Invalid { location, source };
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, &[u, v, c]) in self.edges.iter().enumerate() {
            let color = u8::try_from(c).map_err(|_| {
                invalid(
                    format!("{prefix}edges[{i}]"),
                    Error::BadColor { color: gemkit_core::Color(u8::MAX), dimension: self.dimension },
                )
            })?;
            edges.push(Edge::from((u, v, color)));
        }
        let labels = self.labels.iter().map(|l| l.parse::<VertexLabel>().expect("infallible")).collect();
        Gem::new(self.dimension, labels, edges).map_err(|e| {
            let location = match e {
                Error::BadDimension(_) => format!("{prefix}dimension"),
                Error::DuplicateLabel { vertex } => format!("{prefix}labels[{vertex}]"),
                Error::MissingColor { vertex, .. } => format!("{prefix}labels[{vertex}]"),
                ref other => match other.edge_index() {
                    Some(i) => format!("{prefix}edges[{i}]"),
                    None => format!("{prefix}edges"),
                },
            };
            invalid(location, e)
        })
    }

    /// Validate into a gem or a map.
    pub fn to_parsed(&self) -> Result<Parsed, DocumentError> {
        let source = self.to_gem("")?;
        let Some(section) = &self.map else {
            return Ok(Parsed::Gem(source));
        };
        if section.target.map.is_some() {
            return Err(DocumentError::Invalid {
                location: "map.target.map".into(),
                source: Error::Mismatch("a map target cannot carry its own map".into()),
            });
        }
        let target = section.target.to_gem("map.target.")?;
        let map = ColoredVertexMap::new(source, target, section.assignment.clone())
            .map_err(|source| DocumentError::Invalid { location: "map.assignment".into(), source })?;
        let violations = map.validate();
        if let Some(first) = violations.first() {
            let i = map.source().edges().iter().position(|e| *e == first.edge).unwrap_or(0);
            return Err(DocumentError::Invalid {
                location: format!("edges[{i}]"),
                source: Error::InvalidMap { violations: violations.len() },
            });
        }
        Ok(Parsed::Map(map))
    }
}

/// Canonical text of a gem.
pub fn serialize(gem: &Gem) -> String {
    to_text(&GemDocument::from_gem(gem))
}

/// Canonical text of a map.
pub fn serialize_map(map: &ColoredVertexMap) -> String {
    to_text(&GemDocument::from_map(map))
}

fn to_text(doc: &GemDocument) -> String {
    let mut out = String::new();
    write_document(&mut out, doc, "");
    out.push('\n');
    out
}

fn list(items: impl Iterator<Item = String>) -> String {
    format!("[{}]", items.collect::<Vec<_>>().join(", "))
}

/// Pretty JSON with one edge triple per line.
fn write_document(out: &mut String, doc: &GemDocument, indent: &str) {
    let inner = format!("{indent}  ");
    out.push_str("{\n");
    out.push_str(&format!("{inner}\"format_version\": {},\n", doc.format_version));
    out.push_str(&format!("{inner}\"dimension\": {},\n", doc.dimension));
    out.push_str(&format!(
        "{inner}\"labels\": {},\n",
        list(doc.labels.iter().map(|l| serde_json::to_string(l).expect("strings serialize")))
    ));
    out.push_str(&format!("{inner}\"edges\": ["));
    for (i, [u, v, c]) in doc.edges.iter().enumerate() {
        let sep = if i + 1 < doc.edges.len() { "," } else { "" };
        out.push_str(&format!("\n{inner}  [{u}, {v}, {c}]{sep}"));
    }
    if !doc.edges.is_empty() {
        out.push_str(&format!("\n{inner}"));
    }
    out.push(']');
    if let Some(map) = &doc.map {
        out.push_str(&format!(",\n{inner}\"map\": {{\n{inner}  \"target\": "));
        write_document(out, &map.target, &format!("{inner}  "));
        out.push_str(&format!(
            ",\n{inner}  \"assignment\": {}\n{inner}}}",
            list(map.assignment.iter().map(ToString::to_string))
        ));
    }
    out.push_str(&format!("\n{indent}}}"));
}

/// Parse and validate a gem or map document.
pub fn parse(text: &str) -> Result<Parsed, DocumentError> {
    let doc: GemDocument = serde_json::from_str(text).map_err(|e| DocumentError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    doc.to_parsed()
}

/// Parse a document that must hold a plain gem.
pub fn parse_gem(text: &str) -> Result<Gem, DocumentError> {
    match parse(text)? {
        Parsed::Gem(g) => Ok(g),
        Parsed::Map(_) => Err(DocumentError::WrongKind { expected: "gem" }),
    }
}

/// Parse a document that must hold a map.
pub fn parse_map(text: &str) -> Result<ColoredVertexMap, DocumentError> {
    match parse(text)? {
        Parsed::Map(m) => Ok(m),
        Parsed::Gem(_) => Err(DocumentError::WrongKind { expected: "map" }),
    }
}
