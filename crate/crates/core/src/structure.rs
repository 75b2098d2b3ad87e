//! Finite-dimensional algebras given by structure constants on a labelled basis.

use num_traits::{One, Zero};

use crate::algebra::AlgebraModel;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, EchelonBasis, Matrix, Scalar, SparseVec};

#[derive(Clone, Debug)]
pub struct StructureConstantAlgebra {
    labels: Vec<String>,
    unit: SparseVec,
    /// `products[i * n + j] = b_i · b_j`
    products: Vec<SparseVec>,
}

/// First basis triple where `(xy)z ≠ x(yz)`, or basis element violating the unit law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawViolation {
    Associativity(usize, usize, usize),
    LeftUnit(usize),
    RightUnit(usize),
}

impl StructureConstantAlgebra {
    pub fn new(labels: Vec<String>, unit: SparseVec, products: Vec<SparseVec>) -> Result<Self> {
        let n = labels.len();
        if products.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: products.len(),
            });
        }
        for v in products.iter().chain(std::iter::once(&unit)) {
            if let Some(m) = v.max_index() {
                if m >= n {
                    return Err(Error::DimensionMismatch { expected: n, found: m + 1 });
                }
            }
        }
        Ok(Self { labels, unit, products })
    }

    /// Structure constants of a model that is finite-dimensional within its bound.
    pub fn from_model(m: &AlgebraModel) -> Result<Self> {
        if !m.is_finite_dimensional() {
            return Err(Error::NotFiniteDimensional(m.max_degree()));
        }
        let basis = m.flat_basis();
        let position: std::collections::HashMap<_, _> =
            basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let labels = basis
            .iter()
            .map(|&(d, u, v, k)| m.quiver().path_string(m.basis_path(d, u, v, k)))
            .collect();
        let n = basis.len();
        let mut products = Vec::with_capacity(n * n);
        for &(d1, u1, v1, k1) in &basis {
            for &(d2, u2, v2, k2) in &basis {
                products.push(model_product(m, (d1, u1, v1, k1), (d2, u2, v2, k2), |key| position[&key])?);
            }
        }
        let unit = SparseVec::from_pairs(
            (0..m.num_vertices()).map(|v| (position[&(0, v, v, 0)], Scalar::one())),
        );
        Self::new(labels, unit, products)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.products[i * self.dim() + j]
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                out.add_scaled(&(a * b), self.basis_product(i, j));
            }
        }
        out
    }

    /// Exhaustive check over all basis triples and the unit.
    pub fn check_laws(&self) -> Result<(), LawViolation> {
        let n = self.dim();
        for i in 0..n {
            let bi = SparseVec::unit(i);
            if self.mul(&self.unit, &bi) != bi {
                return Err(LawViolation::LeftUnit(i));
            }
            if self.mul(&bi, &self.unit) != bi {
                return Err(LawViolation::RightUnit(i));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let left = self.mul(ij, &SparseVec::unit(k));
                    let right = self.mul(&SparseVec::unit(i), self.basis_product(j, k));
                    if left != right {
                        return Err(LawViolation::Associativity(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of left multiplication by `x` (column `j` is `x·b_j`).
    pub fn left_multiplication(&self, x: &SparseVec) -> Matrix {
        let columns: Vec<SparseVec> = (0..self.dim()).map(|j| self.mul(x, &SparseVec::unit(j))).collect();
        Matrix::from_columns(self.dim(), &columns).expect("products in range")
    }

    /// Jacobson radical via the trace form: in characteristic 0 it is the
    /// set of `x` with `tr(L_{xy}) = 0` for every `y`. Returned as a reduced
    /// echelon basis.
    pub fn radical(&self) -> Vec<SparseVec> {
        let n = self.dim();
        // tr(L_{b_k}) = Σ_l coefficient of b_l in b_k b_l
        let traces: Vec<Scalar> = (0..n)
            .map(|k| {
                (0..n).fold(Scalar::zero(), |acc, l| acc + self.basis_product(k, l).get(l))
            })
            .collect();
        let trace_vec = SparseVec::from_dense(&traces);
        let rows: Vec<SparseVec> = (0..n)
            .map(|i| SparseVec::from_pairs((0..n).map(|j| (j, self.basis_product(i, j).dot(&trace_vec)))))
            .collect();
        let gram = Matrix::from_rows(n, rows).expect("square");
        let kernel = kernel_basis(&gram);
        EchelonBasis::from_vectors(&kernel).rows().to_vec()
    }

    /// Quotient by a two-sided ideal, on the basis elements that are not
    /// pivots of the ideal's echelon form.
    pub fn quotient(&self, ideal: &[SparseVec]) -> Self {
        let span = EchelonBasis::from_vectors(ideal);
        let kept: Vec<usize> = (0..self.dim()).filter(|i| span.pivot_row(*i).is_none()).collect();
        let mut position = vec![None; self.dim()];
        for (k, &i) in kept.iter().enumerate() {
            position[i] = Some(k);
        }
        let project = |v: &SparseVec| span.reduce(v).remap(|i| position[i]);
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let products = kept
            .iter()
            .flat_map(|&i| kept.iter().map(move |&j| (i, j)))
            .map(|(i, j)| project(self.basis_product(i, j)))
            .collect();
        Self {
            labels,
            unit: project(&self.unit),
            products,
        }
    }
}

/// Product of two model basis elements as a vector over a flat basis. Degrees
/// past the bound are zero (the model is finite-dimensional).
pub(crate) fn model_product<F>(
    m: &AlgebraModel,
    x: (usize, usize, usize, usize),
    y: (usize, usize, usize, usize),
    position: F,
) -> Result<SparseVec>
where
    F: Fn((usize, usize, usize, usize)) -> usize,
{
    let (d1, u1, v1, k1) = x;
    let (d2, u2, v2, k2) = y;
    if v2 != u1 || d1 + d2 > m.max_degree() {
        return Ok(SparseVec::new());
    }
    let p = m.basis_path(d1, u1, v1, k1).compose(m.basis_path(d2, u2, v2, k2)).expect("composable");
    let coords = m.express_path(&p)?;
    Ok(SparseVec::from_pairs(
        coords.iter().map(|(k, c)| (position((d1 + d2, u2, v1, k)), c.clone())),
    ))
}
