//! JSON documents for presentations (`"format": 1`).
//!
//! Relation paths are listed first-applied-first, so `["a", "b"]` is the path
//! `b·a`. Coefficients are rational strings such as `"1"`, `"-3/2"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::Presentation;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupSpec, WeightFunction};
use crate::linalg::Scalar;
use crate::quiver::{PathCombination, Quiver};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coef: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingDoc {
    pub group: GroupSpec,
    pub weights: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDocument {
    pub format: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    pub relations: Vec<Vec<TermDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<GradingDoc>,
}

/// A group grading attached to a presentation.
#[derive(Clone, Debug)]
pub struct Grading {
    pub spec: GroupSpec,
    pub group: FiniteGroup,
    pub weights: WeightFunction,
}

impl Grading {
    pub fn new(spec: GroupSpec, q: &Quiver, weights: &BTreeMap<String, String>) -> Result<Self> {
        let group = spec.build()?;
        let weights = WeightFunction::from_labels(q, &group, weights)?;
        Ok(Self { spec, group, weights })
    }
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Option<Scalar> {
    let text = text.trim();
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim().parse().ok()?, q.trim().parse().ok()?),
        None => (text.parse().ok()?, num_bigint::BigInt::from(1)),
    };
    if q == num_bigint::BigInt::from(0) {
        return None;
    }
    Some(Scalar::new(p, q))
}

impl PresentationDocument {
    pub fn from_presentation(p: &Presentation, grading: Option<&Grading>) -> Self {
        let q = p.quiver();
        let vertices = q.vertices().to_vec();
        let arrows = q
            .arrows()
            .iter()
            .map(|a| ArrowDoc {
                name: a.label.clone(),
                from: q.vertex_label(a.source).to_string(),
                to: q.vertex_label(a.target).to_string(),
            })
            .collect();
        let relations = p
            .relations()
            .iter()
            .map(|r| {
                r.terms()
                    .map(|(path, c)| TermDoc {
                        coef: c.to_string(),
                        path: path.arrows_applied_order().map(|a| q.arrow(a).label.clone()).collect(),
                    })
                    .collect()
            })
            .collect();
        let grading = grading.map(|g| GradingDoc {
            group: g.spec.clone(),
            weights: g.weights.to_labels(q, &g.group),
        });
        Self {
            format: FORMAT_VERSION,
            vertices,
            arrows,
            relations,
            grading,
        }
    }

    /// Builds and validates the presentation (and grading, if any).
    pub fn to_presentation(&self) -> Result<(Presentation, Option<Grading>)> {
        if self.format != FORMAT_VERSION {
            return Err(parse_error(
                "format",
                format!("unsupported format {} (expected {FORMAT_VERSION})", self.format),
            ));
        }
        let q = Quiver::new(
            self.vertices.iter().cloned(),
            self.arrows.iter().map(|a| (a.name.clone(), a.from.clone(), a.to.clone())),
        )
        .map_err(|e| parse_error("arrows", e.to_string()))?;
        let mut relations = Vec::with_capacity(self.relations.len());
        for (i, terms) in self.relations.iter().enumerate() {
            let mut r = PathCombination::new();
            for (j, t) in terms.iter().enumerate() {
                let location = format!("relations[{i}][{j}]");
                let c = parse_rational(&t.coef)
                    .ok_or_else(|| parse_error(format!("{location}.coef"), format!("invalid rational `{}`", t.coef)))?;
                if t.path.is_empty() {
                    return Err(parse_error(format!("{location}.path"), "empty path"));
                }
                let word: Vec<&str> = t.path.iter().rev().map(String::as_str).collect();
                let path = q
                    .path_from_word(&word)
                    .map_err(|e| parse_error(format!("{location}.path"), e.to_string()))?;
                r.add_term(path, c);
            }
            relations.push(r);
        }
        let p = Presentation::new(q, relations)?;
        let grading = match &self.grading {
            None => None,
            Some(g) => Some(
                Grading::new(g.group.clone(), p.quiver(), &g.weights)
                    .map_err(|e| parse_error("grading", e.to_string()))?,
            ),
        };
        Ok((p, grading))
    }
}

/// Parses a presentation document from JSON text.
pub fn parse_presentation(text: &str) -> Result<(Presentation, Option<Grading>)> {
    parse_document(text)?.to_presentation()
}

pub fn parse_document(text: &str) -> Result<PresentationDocument> {
    serde_json::from_str(text).map_err(|e| {
        parse_error(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })
}

/// Canonical JSON text: fixed field order, two-space indentation, trailing newline.
pub fn serialize_presentation(p: &Presentation, grading: Option<&Grading>) -> String {
    to_canonical_json(&PresentationDocument::from_presentation(p, grading))
}

pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}
