//! The `rado-complex/v1` JSON file format.
//!
//! ```json
//! {"format":"rado-complex/v1","vertices":["1","2","3"],"facets":[["1","2"],["2","3"]]}
//! ```
//!
//! Labels are decimal strings so that arbitrarily large vertices survive any
//! JSON consumer. The writer emits vertices in increasing numeric order and
//! facets in lexicographic order of their numeric label sequences, on a single
//! line followed by a newline; reading and rewriting such a file reproduces it
//! byte for byte.
//!
//! The reader also accepts inline documents that omit `format` and/or
//! `vertices` (for example `{"facets":[["1"]]}`); missing vertices are taken
//! from the facets. Vertices listed without any facet are isolated vertices.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::simplex::Simplex;
use crate::vertex::Vertex;

pub const FORMAT_TAG: &str = "rado-complex/v1";

#[derive(Debug, Serialize, Deserialize)]
struct ComplexDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    format: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<String>>,
    facets: Vec<Vec<String>>,
}

fn parse_labels(raw: &[String]) -> Result<Vec<Vertex>> {
    raw.iter().map(|s| s.parse()).collect()
}

/// Parses a document. Each facet must be strictly increasing.
pub fn from_json_str(text: &str) -> Result<Complex> {
    let doc: ComplexDoc = serde_json::from_str(text)?;
    if let Some(tag) = &doc.format {
        if tag != FORMAT_TAG {
            return Err(Error::InvalidInput(format!("unsupported format tag {tag:?}, expected {FORMAT_TAG:?}")));
        }
    }
    let facets =
        doc.facets.iter().map(|f| parse_labels(f).and_then(Simplex::new)).collect::<Result<Vec<_>>>()?;
    let mut complex = Complex::from_facets(facets)?;
    if let Some(vs) = &doc.vertices {
        let listed = parse_labels(vs)?;
        if let Some(missing) = complex.vertices().iter().find(|v| !listed.contains(v)) {
            return Err(Error::InvalidInput(format!("facet vertex {missing} is missing from the vertex list")));
        }
        complex = complex.union(&Complex::discrete(listed));
    }
    Ok(complex)
}

/// Canonical single-line serialization with a trailing newline.
pub fn to_json_string(complex: &Complex) -> String {
    let doc = ComplexDoc {
        format: Some(FORMAT_TAG.to_string()),
        vertices: Some(complex.vertices().iter().map(ToString::to_string).collect()),
        facets: complex
            .facets()
            .iter()
            .map(|f| f.vertices().iter().map(ToString::to_string).collect())
            .collect(),
    };
    let mut s = serde_json::to_string(&doc).expect("complex documents always serialize");
    s.push('\n');
    s
}

pub fn read_complex(path: &Path) -> Result<Complex> {
    from_json_str(&std::fs::read_to_string(path)?)
}

pub fn write_complex(path: &Path, complex: &Complex) -> Result<()> {
    std::fs::write(path, to_json_string(complex))?;
    Ok(())
}

/// Reads an inline document if `arg` looks like JSON, otherwise a file path.
pub fn complex_from_arg(arg: &str) -> Result<Complex> {
    if arg.trim_start().starts_with('{') {
        from_json_str(arg)
    } else {
        read_complex(Path::new(arg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_layout() {
        let c = Complex::of(&[&[2, 10], &[1, 2], &[9]]);
        let text = to_json_string(&c);
        assert_eq!(
            text,
            "{\"format\":\"rado-complex/v1\",\"vertices\":[\"1\",\"2\",\"9\",\"10\"],\"facets\":[[\"1\",\"2\"],[\"2\",\"10\"],[\"9\"]]}\n"
        );
        assert_eq!(from_json_str(&text).unwrap(), c);
    }

    #[test]
    fn inline_without_vertices() {
        let c = from_json_str(r#"{"facets":[["1"]]}"#).unwrap();
        assert_eq!(c, Complex::of(&[&[1]]));
        let e = from_json_str(r#"{"facets":[]}"#).unwrap();
        assert!(e.is_empty());
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(from_json_str(r#"{"facets":[["2","1"]]}"#).is_err());
        assert!(from_json_str(r#"{"facets":[["1","1"]]}"#).is_err());
        assert!(from_json_str(r#"{"format":"other/v9","facets":[]}"#).is_err());
        assert!(from_json_str(r#"{"vertices":["1"],"facets":[["1","2"]]}"#).is_err());
        assert!(from_json_str(r#"{"facets":[["x"]]}"#).is_err());
    }

    #[test]
    fn big_labels_survive() {
        let big = "1".to_string() + &"0".repeat(60);
        let text = format!(r#"{{"facets":[["3","{big}"]]}}"#);
        let c = from_json_str(&text).unwrap();
        assert!(to_json_string(&c).contains(&big));
    }
}
