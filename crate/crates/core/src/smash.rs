//! Smash products `A # G*` and skew group algebras `A * G` over a
//! finite-dimensional model, and their comparison with Galois coverings.

use std::collections::HashMap;

use num_traits::One;

use crate::algebra::AlgebraModel;
use crate::covering::Covering;
use crate::error::{Error, Result};
use crate::group::{is_homogeneous_grading, FiniteGroup, GroupAction, WeightFunction};
use crate::linalg::{EchelonBasis, Scalar, SparseVec};
use crate::structure::{model_product, StructureConstantAlgebra};

type BasisKey = (usize, usize, usize, usize);

/// `A # G*` on the basis `b # p_g`, stored at index `b * |G| + g`.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    algebra: StructureConstantAlgebra,
    base_basis: Vec<BasisKey>,
    position: HashMap<BasisKey, usize>,
    order: usize,
}

impl SmashProduct {
    pub fn algebra(&self) -> &StructureConstantAlgebra {
        &self.algebra
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    /// Index of `b # p_g` where `b` is a model basis element.
    pub fn index(&self, b: BasisKey, g: usize) -> usize {
        self.position[&b] * self.order + g
    }

    /// Model basis keys, in the order used by [`Self::index`].
    pub fn base_basis(&self) -> &[BasisKey] {
        &self.base_basis
    }

    /// `J # G*`: all `b # p_g` with `deg b ≥ 1`, as unit vectors.
    pub fn radical_tensor_dual(&self) -> Vec<SparseVec> {
        self.base_basis
            .iter()
            .filter(|key| key.0 >= 1)
            .flat_map(|&key| (0..self.order).map(move |g| (key, g)))
            .map(|(key, g)| SparseVec::unit(self.index(key, g)))
            .collect()
    }
}

fn flat_positions(m: &AlgebraModel) -> (Vec<BasisKey>, HashMap<BasisKey, usize>) {
    let basis = m.flat_basis();
    let position = basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    (basis, position)
}

/// Smash product with multiplication `(a # p_g)(b # p_h) = a·b_{gh⁻¹} # p_h`.
pub fn smash_product(m: &AlgebraModel, g: &FiniteGroup, w: &WeightFunction) -> Result<SmashProduct> {
    if !m.is_finite_dimensional() {
        return Err(Error::NotFiniteDimensional(m.max_degree()));
    }
    let report = is_homogeneous_grading(m.presentation(), g, w);
    if !report.is_homogeneous() {
        return Err(Error::Inhomogeneous(report));
    }
    let (basis, position) = flat_positions(m);
    let order = g.order();
    let weights: Vec<usize> = basis
        .iter()
        .map(|&(d, u, v, k)| w.path_weight(g, m.basis_path(d, u, v, k)))
        .collect();
    let n = basis.len() * order;
    let mut labels = Vec::with_capacity(n);
    for &(d, u, v, k) in &basis {
        let word = m.quiver().path_string(m.basis_path(d, u, v, k));
        for h in 0..order {
            labels.push(format!("{word}#p_{}", g.label(h)));
        }
    }
    let mut products = vec![SparseVec::new(); n * n];
    for (i, &bi) in basis.iter().enumerate() {
        for (j, &bj) in basis.iter().enumerate() {
            let prod = model_product(m, bi, bj, |key| position[&key])?;
            if prod.is_zero() {
                continue;
            }
            for x in 0..order {
                for h in 0..order {
                    // weight(b_j) must equal x·h⁻¹
                    if weights[j] != g.mul(x, g.inv(h)) {
                        continue;
                    }
                    products[(i * order + x) * n + (j * order + h)] = prod.remap(|k| Some(k * order + h));
                }
            }
        }
    }
    let unit = SparseVec::from_pairs(
        (0..m.num_vertices())
            .flat_map(|v| (0..order).map(move |h| (v, h)))
            .map(|(v, h)| (position[&(0, v, v, 0)] * order + h, Scalar::one())),
    );
    Ok(SmashProduct {
        algebra: StructureConstantAlgebra::new(labels, unit, products)?,
        base_basis: basis,
        position,
        order,
    })
}

/// `A * G` on the basis `b·g` (index `b * |G| + g`) with `g·a = g(a)·g`.
pub fn skew_group_algebra(m: &AlgebraModel, action: &GroupAction) -> Result<StructureConstantAlgebra> {
    if !m.is_finite_dimensional() {
        return Err(Error::NotFiniteDimensional(m.max_degree()));
    }
    let group = action.group();
    let order = group.order();
    for h in 0..order {
        for (index, r) in m.presentation().relations().iter().enumerate() {
            let moved = r.map_paths(|p| Some(action.apply_path(h, p)));
            if !m.normal_form(&moved)?.is_empty() {
                return Err(Error::InvalidAction(format!(
                    "`{}` does not preserve the ideal: image of relation #{index} is nonzero",
                    group.label(h)
                )));
            }
        }
    }
    let (basis, position) = flat_positions(m);
    let n = basis.len() * order;
    let mut labels = Vec::with_capacity(n);
    for &(d, u, v, k) in &basis {
        let word = m.quiver().path_string(m.basis_path(d, u, v, k));
        for h in 0..order {
            labels.push(format!("{word}·{}", group.label(h)));
        }
    }
    // image of every basis element under every group element, as a flat vector
    let mut images: Vec<Vec<SparseVec>> = Vec::with_capacity(order);
    for h in 0..order {
        let mut row = Vec::with_capacity(basis.len());
        for &(d, u, v, k) in &basis {
            let p = action.apply_path(h, m.basis_path(d, u, v, k));
            let coords = m.express_path(&p)?;
            row.push(coords.remap(|c| Some(position[&(d, p.source(), p.target(), c)])));
        }
        images.push(row);
    }
    let mut products = vec![SparseVec::new(); n * n];
    for (i, &bi) in basis.iter().enumerate() {
        for x in 0..order {
            for (j, _) in basis.iter().enumerate() {
                // b_i·x · b_j·y = b_i · x(b_j) · xy
                let mut ab = SparseVec::new();
                for (k, c) in images[x][j].iter() {
                    ab.add_scaled(c, &model_product(m, bi, basis[k], |key| position[&key])?);
                }
                if ab.is_zero() {
                    continue;
                }
                for y in 0..order {
                    let xy = group.mul(x, y);
                    products[(i * order + x) * n + (j * order + y)] = ab.remap(|k| Some(k * order + xy));
                }
            }
        }
    }
    let e = group.identity();
    let unit = SparseVec::from_pairs(
        (0..m.num_vertices()).map(|v| (position[&(0, v, v, 0)] * order + e, Scalar::one())),
    );
    StructureConstantAlgebra::new(labels, unit, products)
}

/// Outcome of comparing the covering algebra with the smash product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoCheck {
    Isomorphic,
    /// The canonical map is not injective.
    NotBijective { rank: usize, dim: usize },
    /// Structure constants disagree on this pair of covering basis elements.
    Mismatch { left: String, right: String },
}

impl IsoCheck {
    pub fn holds(&self) -> bool {
        matches!(self, Self::Isomorphic)
    }
}

/// Compares the covering algebra with `A # G*` under the map sending the
/// class of a lifted path starting on sheet `g` to `(underlying path) # p_g`.
/// Every pair of covering basis elements is checked.
pub fn verify_smash_covering_iso(
    cover: &Covering,
    cover_model: &AlgebraModel,
    base_model: &AlgebraModel,
    smash: &SmashProduct,
) -> Result<IsoCheck> {
    if !cover_model.is_finite_dimensional() {
        return Err(Error::NotFiniteDimensional(cover_model.max_degree()));
    }
    let (basis, position) = flat_positions(cover_model);
    let dim = smash.algebra().dim();
    if basis.len() != dim {
        return Err(Error::BasisSizeMismatch {
            left: basis.len(),
            right: dim,
        });
    }
    let image = |key: BasisKey| -> Result<SparseVec> {
        let (d, u, v, k) = key;
        let (path, sheet) = cover.project_path(cover_model.basis_path(d, u, v, k));
        let coords = base_model.express_path(&path)?;
        Ok(coords.remap(|c| Some(smash.index((d, path.source(), path.target(), c), sheet))))
    };
    let images: Vec<SparseVec> = basis.iter().map(|&key| image(key)).collect::<Result<_>>()?;
    let rank = EchelonBasis::from_vectors(&images).dim();
    if rank != dim {
        return Ok(IsoCheck::NotBijective { rank, dim });
    }
    let apply = |v: &SparseVec| {
        let mut out = SparseVec::new();
        for (i, c) in v.iter() {
            out.add_scaled(c, &images[i]);
        }
        out
    };
    let labels = |key: BasisKey| {
        let (d, u, v, k) = key;
        cover_model.quiver().path_string(cover_model.basis_path(d, u, v, k))
    };
    for (i, &x) in basis.iter().enumerate() {
        for (j, &y) in basis.iter().enumerate() {
            let product = model_product(cover_model, x, y, |key| position[&key])?;
            if apply(&product) != smash.algebra().mul(&images[i], &images[j]) {
                return Ok(IsoCheck::Mismatch {
                    left: labels(x),
                    right: labels(y),
                });
            }
        }
    }
    Ok(IsoCheck::Isomorphic)
}

/// Radical of `A # G*` against `J # G*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalComparison {
    pub radical_dim: usize,
    pub expected_dim: usize,
    pub radical_in_expected: bool,
    pub expected_in_radical: bool,
}

impl RadicalComparison {
    pub fn holds(&self) -> bool {
        self.radical_dim == self.expected_dim && self.radical_in_expected && self.expected_in_radical
    }
}

/// Computes `J(A # G*)` by the trace form and compares it with `J # G*`,
/// checking membership in both directions.
pub fn compare_smash_radical(smash: &SmashProduct) -> RadicalComparison {
    let radical = smash.algebra().radical();
    let expected = smash.radical_tensor_dual();
    let rad_span = EchelonBasis::from_vectors(&radical);
    let exp_span = EchelonBasis::from_vectors(&expected);
    RadicalComparison {
        radical_dim: rad_span.dim(),
        expected_dim: exp_span.dim(),
        radical_in_expected: radical.iter().all(|v| exp_span.contains(v)),
        expected_in_radical: expected.iter().all(|v| rad_span.contains(v)),
    }
}
