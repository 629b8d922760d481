//! Quiver files: a small TOML document describing a bound quiver algebra.
//!
//! ```toml
//! # relations read left to right: ["a", "b"] means a then b
//! name = "a2"
//! vertices = ["1", "2"]
//! relations = []
//!
//! [[arrows]]
//! name = "a"
//! source = "1"
//! target = "2"
//!
//! [options]
//! field = "q"
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, BoundQuiverAlgebra, Quiver};
use crate::indec::CatalogOptions;
use crate::linalg::{Field, LinalgError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown field kind {0:?}; expected \"q\" or \"gf\"")]
    UnknownField(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileOptions {
    /// `"q"` for the rationals, `"gf"` for the prime field of `prime`.
    pub field: Option<String>,
    pub prime: Option<u32>,
    pub dim_bound: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverFile {
    pub name: String,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
    #[serde(default)]
    pub options: FileOptions,
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, column)
}

impl QuiverFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        toml::from_str(text).map_err(|e| {
            let (line, column) = e.span().map_or((0, 0), |s| line_column(text, s.start));
            FormatError::Parse {
                line,
                column,
                message: e.message().to_string(),
            }
        })
    }

    pub fn load(path: &Path) -> Result<Self, FormatError> {
        let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    pub fn to_algebra(&self) -> Result<BoundQuiverAlgebra, FormatError> {
        let arrows: Vec<(&str, &str, &str)> = self
            .arrows
            .iter()
            .map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str()))
            .collect();
        let vertices: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let q = Quiver::new(&vertices, &arrows)?;
        Ok(BoundQuiverAlgebra::new(q, &self.relations)?)
    }

    /// Catalog options from the file, with command-line values taking precedence.
    pub fn catalog_options(
        &self,
        field: Option<&str>,
        prime: Option<u32>,
        dim_bound: Option<usize>,
    ) -> Result<CatalogOptions, FormatError> {
        let defaults = CatalogOptions::default();
        let prime = prime.or(self.options.prime).unwrap_or(defaults.prime);
        Field::prime(prime)?;
        let field = match field.or(self.options.field.as_deref()).unwrap_or("q") {
            "q" | "Q" => Field::Rational,
            "gf" | "GF" => Field::prime(prime)?,
            other => return Err(FormatError::UnknownField(other.to_string())),
        };
        Ok(CatalogOptions {
            field,
            prime,
            dim_bound: dim_bound.or(self.options.dim_bound).unwrap_or(defaults.dim_bound),
            force_brute: false,
        })
    }
}
