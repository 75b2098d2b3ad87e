//! Degree-wise model of `KQ/⟨ρ⟩` in the path-length grading, truncated at an
//! explicit degree bound.
//!
//! For each degree `d` and vertex pair `(u, v)` the ideal slice `I_d(u→v)` is
//! kept as a reduced echelon basis over the lexicographically ordered paths of
//! length `d` from `u` to `v`. The non-pivot paths form the normal-form basis
//! of `A_d(u→v)`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::poly::PolyMatrix;
use crate::quiver::{Path, PathCombination, Quiver};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    quiver: Quiver,
    relations: Vec<PathCombination>,
}

impl Presentation {
    pub fn new(quiver: Quiver, relations: Vec<PathCombination>) -> Result<Self> {
        for (index, r) in relations.iter().enumerate() {
            quiver
                .validate_relation(r)
                .map_err(|diagnostic| Error::InvalidRelation { index, diagnostic })?;
        }
        Ok(Self { quiver, relations })
    }

    pub fn path_algebra(quiver: Quiver) -> Self {
        Self {
            quiver,
            relations: Vec::new(),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[PathCombination] {
        &self.relations
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }
}

/// Column order used when laying out paths inside a slice. Only the default
/// lexicographic order is part of the public contract; the reversed order
/// exists to check that dimensions do not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PathOrder {
    Lexicographic,
    Reversed,
}

#[derive(Clone, Debug)]
struct Slice {
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    ideal: EchelonBasis,
    /// Path indices of the normal-form basis, increasing.
    basis: Vec<usize>,
    /// Path index → position in `basis`.
    basis_pos: Vec<Option<usize>>,
}

impl Slice {
    fn new(paths: Vec<Path>, ideal: EchelonBasis) -> Self {
        let index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut basis = Vec::new();
        let mut basis_pos = vec![None; paths.len()];
        let mut pivots = ideal.pivots().iter().peekable();
        for (i, pos) in basis_pos.iter_mut().enumerate() {
            if pivots.peek() == Some(&&i) {
                pivots.next();
            } else {
                *pos = Some(basis.len());
                basis.push(i);
            }
        }
        Self {
            paths,
            index,
            ideal,
            basis,
            basis_pos,
        }
    }

    /// Normal-form coordinates of the path at `column`.
    fn express(&self, column: usize) -> SparseVec {
        if let Some(k) = self.basis_pos[column] {
            return SparseVec::unit(k);
        }
        let row = self.ideal.pivot_row(column).expect("non-basis path is a pivot");
        SparseVec::from_pairs(
            row.iter()
                .filter(|(j, _)| *j != column)
                .map(|(j, c)| (self.basis_pos[j].expect("reduced row"), -c.clone())),
        )
    }

    fn vector_of(&self, r: &PathCombination) -> SparseVec {
        SparseVec::from_pairs(r.terms().map(|(p, c)| (self.index[p], c.clone())))
    }
}

/// Homogeneous element of a model: components keyed by `(degree, source, target)`.
pub type ModelElement = BTreeMap<(usize, usize, usize), SparseVec>;

#[derive(Clone, Debug)]
pub struct AlgebraModel {
    presentation: Presentation,
    max_degree: usize,
    /// `slices[d][u * n + v]`
    slices: Vec<Vec<Slice>>,
}

impl AlgebraModel {
    /// Builds the model of `p` in degrees `0..=max_degree`.
    pub fn new(p: &Presentation, max_degree: usize) -> Self {
        Self::with_order(p, max_degree, PathOrder::Lexicographic)
    }

    pub(crate) fn with_order(p: &Presentation, max_degree: usize, order: PathOrder) -> Self {
        let q = p.quiver();
        let n = q.num_vertices();
        let mut slices: Vec<Vec<Slice>> = Vec::with_capacity(max_degree + 1);
        for d in 0..=max_degree {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).collect();
            let prev = slices.last();
            let layer: Vec<Slice> = pairs
                .par_iter()
                .map(|&(u, v)| {
                    let mut paths = q.enumerate_paths(d, Some(u), Some(v));
                    if order == PathOrder::Reversed {
                        paths.reverse();
                    }
                    let index: HashMap<Path, usize> =
                        paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
                    let mut ideal = EchelonBasis::new();
                    let to_vec = |comb: &PathCombination| {
                        SparseVec::from_pairs(comb.terms().map(|(p, c)| (index[p], c.clone())))
                    };
                    for r in p.relations() {
                        if r.length() == Some(d) && r.endpoints() == Some((u, v)) {
                            ideal.insert(to_vec(r));
                        }
                    }
                    if let Some(prev) = prev {
                        // a·I_{d-1}(u→w) for arrows a: w → v
                        for w in 0..n {
                            let lower = &prev[u * n + w];
                            for a in q.arrows_to(v).filter(|&a| q.arrow(a).source == w) {
                                let arrow = q.arrow_path(a);
                                for row in lower.ideal.rows() {
                                    ideal.insert(SparseVec::from_pairs(row.iter().map(|(j, c)| {
                                        let path = arrow.compose(&lower.paths[j]).expect("composable");
                                        (index[&path], c.clone())
                                    })));
                                }
                            }
                        }
                        // I_{d-1}(w→v)·a for arrows a: u → w
                        for w in 0..n {
                            let lower = &prev[w * n + v];
                            for a in q.arrows_from(u).filter(|&a| q.arrow(a).target == w) {
                                let arrow = q.arrow_path(a);
                                for row in lower.ideal.rows() {
                                    ideal.insert(SparseVec::from_pairs(row.iter().map(|(j, c)| {
                                        let path = lower.paths[j].compose(&arrow).expect("composable");
                                        (index[&path], c.clone())
                                    })));
                                }
                            }
                        }
                    }
                    Slice::new(paths, ideal)
                })
                .collect();
            slices.push(layer);
        }
        Self {
            presentation: p.clone(),
            max_degree,
            slices,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quiver(&self) -> &Quiver {
        self.presentation.quiver()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn num_vertices(&self) -> usize {
        self.presentation.num_vertices()
    }

    fn slice(&self, d: usize, u: usize, v: usize) -> &Slice {
        &self.slices[d][u * self.num_vertices() + v]
    }

    /// `dim A_d(u→v)`.
    pub fn dim(&self, d: usize, u: usize, v: usize) -> usize {
        self.slice(d, u, v).basis.len()
    }

    /// Number of paths of length `d` from `u` to `v`.
    pub fn num_paths(&self, d: usize, u: usize, v: usize) -> usize {
        self.slice(d, u, v).paths.len()
    }

    /// Rank of the ideal slice `I_d(u→v)`.
    pub fn ideal_rank(&self, d: usize, u: usize, v: usize) -> usize {
        self.slice(d, u, v).ideal.dim()
    }

    pub fn total_dim_in_degree(&self, d: usize) -> usize {
        self.slices[d].iter().map(|s| s.basis.len()).sum()
    }

    pub fn dims_per_degree(&self) -> Vec<usize> {
        (0..=self.max_degree).map(|d| self.total_dim_in_degree(d)).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims_per_degree().iter().sum()
    }

    /// True when some degree within the bound vanishes, so every higher
    /// degree vanishes too (the algebra is generated in degree 1).
    pub fn is_finite_dimensional(&self) -> bool {
        (1..=self.max_degree).any(|d| self.total_dim_in_degree(d) == 0)
    }

    /// Normal-form basis paths of `A_d(u→v)`.
    pub fn basis_paths(&self, d: usize, u: usize, v: usize) -> impl Iterator<Item = &Path> + '_ {
        let s = self.slice(d, u, v);
        s.basis.iter().map(move |&i| &s.paths[i])
    }

    pub fn basis_path(&self, d: usize, u: usize, v: usize, k: usize) -> &Path {
        let s = self.slice(d, u, v);
        &s.paths[s.basis[k]]
    }

    /// Reduced echelon basis of the ideal slice, over [`Self::slice_paths`] coordinates.
    pub fn ideal_slice(&self, d: usize, u: usize, v: usize) -> &EchelonBasis {
        &self.slice(d, u, v).ideal
    }

    pub fn slice_paths(&self, d: usize, u: usize, v: usize) -> &[Path] {
        &self.slice(d, u, v).paths
    }

    /// Coordinates of a single path in the basis of its slice.
    pub fn express_path(&self, p: &Path) -> Result<SparseVec> {
        if p.len() > self.max_degree {
            return Err(Error::DegreeOverflow {
                degree: p.len(),
                bound: self.max_degree,
            });
        }
        let s = self.slice(p.len(), p.source(), p.target());
        Ok(s.express(s.index[p]))
    }

    /// Residue class of `x` split by `(degree, source, target)`; zero components are omitted.
    pub fn normal_form(&self, x: &PathCombination) -> Result<ModelElement> {
        let mut out = ModelElement::new();
        for (p, c) in x.terms() {
            let coords = self.express_path(p)?;
            out.entry((p.len(), p.source(), p.target()))
                .or_default()
                .add_scaled(c, &coords);
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Class of a single path.
    pub fn class_of(&self, p: &Path) -> Result<ModelElement> {
        self.normal_form(&PathCombination::from_path(p.clone()))
    }

    pub fn basis_element(&self, d: usize, u: usize, v: usize, k: usize) -> ModelElement {
        let mut out = ModelElement::new();
        out.insert((d, u, v), SparseVec::unit(k));
        out
    }

    /// `x·y` with `y` applied first.
    pub fn multiply(&self, x: &ModelElement, y: &ModelElement) -> Result<ModelElement> {
        let mut out = ModelElement::new();
        for (&(d1, u1, v1), xs) in x {
            for (&(d2, u2, v2), ys) in y {
                if v2 != u1 {
                    continue;
                }
                let d = d1 + d2;
                if d > self.max_degree {
                    return Err(Error::DegreeOverflow {
                        degree: d,
                        bound: self.max_degree,
                    });
                }
                let acc = out.entry((d, u2, v1)).or_default();
                for (i, a) in xs.iter() {
                    let px = self.basis_path(d1, u1, v1, i);
                    for (j, b) in ys.iter() {
                        let py = self.basis_path(d2, u2, v2, j);
                        let prod = px.compose(py).expect("endpoints checked");
                        acc.add_scaled(&(a * b), &self.express_path(&prod)?);
                    }
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }

    /// Coordinates of a relation inside its degree slice (not reduced).
    pub fn relation_vector(&self, r: &PathCombination) -> Option<SparseVec> {
        let (u, v) = r.endpoints()?;
        let d = r.length()?;
        (d <= self.max_degree).then(|| self.slice(d, u, v).vector_of(r))
    }

    pub fn hilbert_matrix(&self) -> HilbertMatrix {
        let n = self.num_vertices();
        let mut m = PolyMatrix::zeros(n, self.max_degree);
        for d in 0..=self.max_degree {
            for u in 0..n {
                for v in 0..n {
                    m.set(u, v, d, self.dim(d, u, v) as i64);
                }
            }
        }
        HilbertMatrix(m)
    }

    /// Sum of the unit over all vertices, `Σ_v e_v`.
    pub fn unit(&self) -> ModelElement {
        (0..self.num_vertices())
            .map(|v| ((0, v, v), SparseVec::unit(0)))
            .collect()
    }

    /// Dense index over the whole truncated basis: `(degree, source, target, k)` in order.
    pub fn flat_basis(&self) -> Vec<(usize, usize, usize, usize)> {
        let n = self.num_vertices();
        let mut out = Vec::new();
        for d in 0..=self.max_degree {
            for u in 0..n {
                for v in 0..n {
                    for k in 0..self.dim(d, u, v) {
                        out.push((d, u, v, k));
                    }
                }
            }
        }
        out
    }
}

/// Hilbert matrix `H(t)`: entry `(u, v)` is `Σ_d dim A_d(u→v) t^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertMatrix(pub PolyMatrix);

impl HilbertMatrix {
    pub fn matrix(&self) -> &PolyMatrix {
        &self.0
    }

    /// Coefficient of `t^d` summed over all entries.
    pub fn total_in_degree(&self, d: usize) -> i64 {
        let m = &self.0;
        (0..m.size())
            .flat_map(|u| (0..m.size()).map(move |v| (u, v)))
            .map(|(u, v)| m.get(u, v, d))
            .sum()
    }
}
