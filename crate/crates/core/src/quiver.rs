//! Quivers, paths and linear combinations of parallel paths.
//!
//! Composition is written right to left: `p∘q` runs `q` first. A path
//! stores its arrows last-applied-first, so the stored sequence reads like
//! the written word `a_k⋯a_1`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, RelationDiagnostic, Result};
use crate::linalg::Scalar;

const OPPOSITE_SUFFIX: &str = "^op";
const STAR_SUFFIX: &str = "*";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    /// Validates labels and endpoints. Arrows are `(label, source, target)`.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let mut out = Vec::new();
        let mut arrow_index = HashMap::new();
        for (label, s, t) in arrows {
            let lookup = |v: &String| {
                vertex_index.get(v).copied().ok_or_else(|| Error::DanglingEndpoint {
                    arrow: label.clone(),
                    vertex: v.clone(),
                })
            };
            let source = lookup(&s)?;
            let target = lookup(&t)?;
            if arrow_index.insert(label.clone(), out.len()).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
            out.push(Arrow { label, source, target });
        }
        Ok(Self {
            vertices,
            arrows: out,
            vertex_index,
            arrow_index,
        })
    }

    /// Convenience constructor from string slices.
    pub fn from_strs(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        Self::new(
            vertices.iter().copied(),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, index: usize) -> &Arrow {
        &self.arrows[index]
    }

    pub fn vertex_label(&self, index: usize) -> &str {
        &self.vertices[index]
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertex_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, label: &str) -> Result<usize> {
        self.arrow_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(label.to_string()))
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn trivial_path(&self, v: usize) -> Path {
        Path::trivial(v)
    }

    pub fn arrow_path(&self, a: usize) -> Path {
        let arrow = &self.arrows[a];
        Path {
            arrows: vec![a],
            source: arrow.source,
            target: arrow.target,
        }
    }

    /// Path from arrow labels written last-applied-first (`["b", "a"]` is `b∘a`).
    pub fn path_from_word(&self, word: &[&str]) -> Result<Path> {
        let mut indices = Vec::with_capacity(word.len());
        for label in word {
            indices.push(self.arrow_index(label)?);
        }
        self.path_from_indices(indices)
            .ok_or_else(|| Error::EndpointMismatch {
                initial: word.join("·"),
                terminal: String::from("(broken path)"),
            })
    }

    /// Path from arrow indices stored last-applied-first; `None` if they do not compose.
    pub fn path_from_indices(&self, arrows: Vec<usize>) -> Option<Path> {
        let (&last, &first) = (arrows.first()?, arrows.last()?);
        for w in arrows.windows(2) {
            if self.arrows[w[0]].source != self.arrows[w[1]].target {
                return None;
            }
        }
        Some(Path {
            source: self.arrows[first].source,
            target: self.arrows[last].target,
            arrows,
        })
    }

    /// `p∘q`: `q` first, then `p`.
    pub fn compose(&self, p: &Path, q: &Path) -> Result<Path> {
        p.compose(q).ok_or_else(|| Error::EndpointMismatch {
            initial: self.vertices[p.source].clone(),
            terminal: self.vertices[q.target].clone(),
        })
    }

    /// All paths of exactly `length`, optionally filtered by endpoints,
    /// ordered lexicographically by their stored arrow sequence.
    pub fn enumerate_paths(&self, length: usize, source: Option<usize>, target: Option<usize>) -> Vec<Path> {
        let mut layer: Vec<Path> = match source {
            Some(v) => vec![Path::trivial(v)],
            None => (0..self.vertices.len()).map(Path::trivial).collect(),
        };
        for _ in 0..length {
            let mut next = Vec::new();
            for p in &layer {
                for a in self.arrows_from(p.target) {
                    let mut arrows = Vec::with_capacity(p.arrows.len() + 1);
                    arrows.push(a);
                    arrows.extend_from_slice(&p.arrows);
                    next.push(Path {
                        arrows,
                        source: p.source,
                        target: self.arrows[a].target,
                    });
                }
            }
            layer = next;
        }
        if let Some(t) = target {
            layer.retain(|p| p.target == t);
        }
        layer.sort();
        layer
    }

    /// Arrows reversed. Labels get `^op` appended (or stripped, making this an
    /// involution). A one-vertex quiver is its own opposite.
    pub fn opposite(&self) -> Quiver {
        if self.vertices.len() == 1 {
            return self.clone();
        }
        let arrows = self.arrows.iter().map(|a| {
            let label = match a.label.strip_suffix(OPPOSITE_SUFFIX) {
                Some(base) => base.to_string(),
                None => format!("{}{}", a.label, OPPOSITE_SUFFIX),
            };
            (
                label,
                self.vertices[a.target].clone(),
                self.vertices[a.source].clone(),
            )
        });
        Quiver::new(self.vertices.clone(), arrows.collect::<Vec<_>>()).expect("opposite of a valid quiver")
    }

    /// Adds `a*: t(a) → i(a)` for every arrow `a`, after the original arrows.
    pub fn double(&self) -> Quiver {
        let originals = self.arrows.iter().map(|a| {
            (
                a.label.clone(),
                self.vertices[a.source].clone(),
                self.vertices[a.target].clone(),
            )
        });
        let stars = self.arrows.iter().map(|a| {
            (
                format!("{}{}", a.label, STAR_SUFFIX),
                self.vertices[a.target].clone(),
                self.vertices[a.source].clone(),
            )
        });
        Quiver::new(self.vertices.clone(), originals.chain(stars).collect::<Vec<_>>())
            .expect("double of a valid quiver")
    }

    /// Reverses a path into the opposite quiver (arrow indices are shared).
    pub fn reverse_path(&self, p: &Path) -> Path {
        let mut arrows = p.arrows.clone();
        arrows.reverse();
        Path {
            arrows,
            source: p.target,
            target: p.source,
        }
    }

    pub fn path_string(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e_{}", self.vertices[p.source]);
        }
        p.arrows
            .iter()
            .map(|&a| self.arrows[a].label.as_str())
            .collect::<Vec<_>>()
            .join("·")
    }

    /// Checks that `r` can serve as a relation: nonempty, nonzero
    /// coefficients, parallel terms of one common length ≥ 2.
    pub fn validate_relation(&self, r: &PathCombination) -> Result<(), RelationDiagnostic> {
        let mut terms = r.terms.iter();
        let (first, _) = terms.next().ok_or(RelationDiagnostic::Empty)?;
        for (p, c) in r.terms.iter() {
            if c.is_zero() {
                return Err(RelationDiagnostic::ZeroCoefficient);
            }
            if p.arrows.iter().any(|&a| a >= self.arrows.len()) {
                return Err(RelationDiagnostic::BrokenPath);
            }
            if !p.arrows.is_empty() && self.path_from_indices(p.arrows.clone()).as_ref() != Some(p) {
                return Err(RelationDiagnostic::BrokenPath);
            }
        }
        for (p, _) in terms {
            if (p.source, p.target) != (first.source, first.target) {
                return Err(RelationDiagnostic::NonParallel {
                    first: (
                        self.vertices[first.source].clone(),
                        self.vertices[first.target].clone(),
                    ),
                    second: (self.vertices[p.source].clone(), self.vertices[p.target].clone()),
                });
            }
            if p.len() != first.len() {
                return Err(RelationDiagnostic::MixedLengths {
                    first: first.len(),
                    second: p.len(),
                });
            }
        }
        if first.len() < 2 {
            return Err(RelationDiagnostic::TooShort { length: first.len() });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    /// Last-applied arrow first.
    arrows: Vec<usize>,
    source: usize,
    target: usize,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Self {
            arrows: Vec::new(),
            source: v,
            target: v,
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Initial point `i(p)`.
    pub fn source(&self) -> usize {
        self.source
    }

    /// Terminal point `t(p)`.
    pub fn target(&self) -> usize {
        self.target
    }

    /// Arrow indices, last-applied first.
    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    /// Arrow indices in the order they are applied.
    pub fn arrows_applied_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().rev().copied()
    }

    /// `self∘inner`; `None` if `i(self) ≠ t(inner)`.
    pub fn compose(&self, inner: &Path) -> Option<Path> {
        if self.source != inner.target {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.arrows.len() + inner.arrows.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&inner.arrows);
        Some(Path {
            arrows,
            source: inner.source,
            target: self.target,
        })
    }

    /// Rebuilds a path with arrows relabelled through `map` (e.g. into another quiver).
    pub(crate) fn from_parts(arrows: Vec<usize>, source: usize, target: usize) -> Self {
        Self { arrows, source, target }
    }
}

/// Formal linear combination of paths with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathCombination {
    terms: BTreeMap<Path, Scalar>,
}

impl PathCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_path(p: Path) -> Self {
        Self::from_terms([(p, Scalar::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Path, Scalar)>>(terms: I) -> Self {
        let mut out = Self::new();
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn add_term(&mut self, p: Path, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common length of the terms (that of the first term if lengths differ).
    pub fn length(&self) -> Option<usize> {
        self.terms.keys().next().map(Path::len)
    }

    pub fn endpoints(&self) -> Option<(usize, usize)> {
        self.terms.keys().next().map(|p| (p.source, p.target))
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(p, d)| (p.clone(), d * c)))
    }

    /// Applies `f` to each path (which may drop a term by returning `None`).
    pub fn map_paths<F: FnMut(&Path) -> Option<Path>>(&self, mut f: F) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter_map(|(p, c)| f(p).map(|q| (q, c.clone()))),
        )
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(p, c)| format!("({c})·{}", q.path_string(p)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Checks every endpoint set of `paths` is distinct; helper for tests of
/// enumeration partitioning.
pub fn distinct_paths(paths: &[Path]) -> bool {
    paths.iter().collect::<HashSet<_>>().len() == paths.len()
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            return write!(f, "e{}", self.source);
        }
        let words: Vec<String> = self.arrows.iter().map(|a| format!("α{a}")).collect();
        f.write_str(&words.join("·"))
    }
}
