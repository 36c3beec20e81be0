use std::collections::BTreeMap;
use std::path::Path as FsPath;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::PrimeField;
use crate::quivrep::{BasicAlgebra, EnumerationOptions, Path, Quiver, Relation, RelationSet};

use super::canonical::{sha256_hex, to_canonical_json};

pub const INSTANCE_SCHEMA: &str = "hiaus-instance/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
}

/// `coeff · path`, the path listing arrow names in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coeff: i64,
    pub path: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSpec {
    pub representation_finite: bool,
    /// Largest total dimension of an indecomposable module, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_indecomposable_dim: Option<usize>,
    /// Dimension bound for the enumeration of indecomposables.
    pub dim_bound: usize,
}

fn default_n() -> usize {
    1
}

fn default_gamma_bound() -> usize {
    3
}

/// The on-disk instance format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema: String,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub field: FieldSpec,
    pub quiver: QuiverSpec,
    #[serde(default)]
    pub relations: Vec<Vec<TermSpec>>,
    pub corpus: CorpusSpec,
    /// Named subcategories, as lists of indecomposable labels.
    #[serde(default)]
    pub subcategories: BTreeMap<String, Vec<String>>,
    #[serde(default = "default_n")]
    pub n: usize,
    #[serde(default = "default_gamma_bound")]
    pub gamma_dim_bound: usize,
}

/// A validated instance with its algebra.
#[derive(Debug, Clone)]
pub struct Instance {
    pub file: InstanceFile,
    pub algebra: Arc<BasicAlgebra>,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

impl Instance {
    pub fn from_file(file: InstanceFile) -> Result<Self> {
        if file.schema != INSTANCE_SCHEMA {
            return Err(parse_err("schema", format!("expected `{INSTANCE_SCHEMA}`, found `{}`", file.schema)));
        }
        if file.n == 0 {
            return Err(parse_err("n", "n must be at least 1"));
        }
        let field = PrimeField::new(file.field.p).map_err(|e| parse_err("field.p", e.to_string()))?;
        let arrows: Vec<(&str, &str, &str)> = file
            .quiver
            .arrows
            .iter()
            .map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str()))
            .collect();
        let vertices: Vec<&str> = file.quiver.vertices.iter().map(String::as_str).collect();
        let quiver = Quiver::new(&vertices, &arrows).map_err(|e| parse_err("quiver", e.to_string()))?;
        let mut relations = Vec::new();
        for (i, r) in file.relations.iter().enumerate() {
            let mut terms = Vec::new();
            for (j, t) in r.iter().enumerate() {
                let loc = format!("relations[{i}][{j}]");
                let mut idx = Vec::new();
                for name in &t.path {
                    idx.push(quiver.arrow_index(name).ok_or_else(|| parse_err(&loc, format!("unknown arrow `{name}`")))?);
                }
                if idx.is_empty() {
                    return Err(parse_err(&loc, "relation terms need a non-trivial path"));
                }
                let path = Path::from_arrows(&quiver, idx).map_err(|e| parse_err(&loc, e.to_string()))?;
                terms.push((field.from_i64(t.coeff), path));
            }
            let rel = Relation::new(&quiver, terms).map_err(|e| parse_err(format!("relations[{i}]"), e.to_string()))?;
            relations.push(rel);
        }
        let algebra = BasicAlgebra::new(quiver, RelationSet::new(relations), field)
            .map_err(|e| parse_err("relations", e.to_string()))?;
        Ok(Instance { file, algebra: Arc::new(algebra) })
    }

    pub fn parse_str(text: &str, origin: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text)
            .map_err(|e| parse_err(format!("{origin}:{}:{}", e.line(), e.column()), e.to_string()))?;
        Self::from_file(file)
    }

    /// Canonical serialization; parsing it back yields the same instance.
    pub fn emit(&self) -> Result<String> {
        to_canonical_json(&self.file)
    }

    /// Hash of the canonical form.
    pub fn digest(&self) -> Result<String> {
        Ok(sha256_hex(self.emit()?.as_bytes()))
    }

    /// Hash of the algebra data alone (field, quiver, relations).
    pub fn algebra_digest(&self) -> Result<String> {
        let key = (&self.file.field, &self.file.quiver, &self.file.relations);
        Ok(sha256_hex(to_canonical_json(&key)?.as_bytes()))
    }

    pub fn enumeration_options(&self) -> EnumerationOptions {
        let c = &self.file.corpus;
        let opts = EnumerationOptions::new(c.dim_bound);
        match (c.representation_finite, c.max_indecomposable_dim) {
            (true, Some(d)) => opts.declared(d),
            _ => opts,
        }
    }

    pub fn name(&self) -> &str {
        &self.file.name
    }
}

pub fn parse_instance(path: impl AsRef<FsPath>) -> Result<Instance> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| parse_err(path.display().to_string(), e.to_string()))?;
    Instance::parse_str(&text, &path.display().to_string())
}
