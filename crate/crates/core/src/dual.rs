//! Quadratic duality.
//!
//! The dual of a quadratic presentation lives on the opposite quiver. A
//! length-2 path `b·a` of `Q` is paired with its reversal `aᵒᵖ·bᵒᵖ` (delta
//! pairing, no signs) and the dual relations span the orthogonal complement of
//! the relation space, one vertex pair at a time.

use crate::algebra::Presentation;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, EchelonBasis, Matrix, SparseVec};
use crate::quiver::{Path, PathCombination, Quiver};

/// Relation space of a quadratic presentation, per vertex pair.
#[derive(Clone, Debug)]
pub struct QuadraticData {
    presentation: Presentation,
    /// Length-2 paths `u→v` at `[u * n + v]`, lexicographic.
    paths: Vec<Vec<Path>>,
    spaces: Vec<EchelonBasis>,
}

impl QuadraticData {
    pub fn new(p: &Presentation) -> Result<Self> {
        if let Some(i) = p.relations().iter().position(|r| r.length() != Some(2)) {
            return Err(Error::NotQuadratic(i));
        }
        let q = p.quiver();
        let n = q.num_vertices();
        let mut paths = Vec::with_capacity(n * n);
        let mut spaces = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                let ps = q.enumerate_paths(2, Some(u), Some(v));
                let vectors: Vec<SparseVec> = p
                    .relations()
                    .iter()
                    .filter(|r| r.endpoints() == Some((u, v)))
                    .map(|r| combination_vector(&ps, r))
                    .collect();
                spaces.push(EchelonBasis::from_vectors(&vectors));
                paths.push(ps);
            }
        }
        Ok(Self {
            presentation: p.clone(),
            paths,
            spaces,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    fn n(&self) -> usize {
        self.presentation.num_vertices()
    }

    /// `R(u,v)` as a reduced echelon basis over the length-2 paths `u→v`.
    pub fn space(&self, u: usize, v: usize) -> &EchelonBasis {
        &self.spaces[u * self.n() + v]
    }

    pub fn paths(&self, u: usize, v: usize) -> &[Path] {
        &self.paths[u * self.n() + v]
    }

    /// Basis of `R(u,v)^⊥`, in the coordinates of [`Self::paths`].
    pub fn complement(&self, u: usize, v: usize) -> Vec<SparseVec> {
        let len = self.paths(u, v).len();
        let m = Matrix::from_rows(len, self.space(u, v).rows().to_vec()).expect("relation coordinates in range");
        kernel_basis(&m)
    }
}

fn combination_vector(paths: &[Path], r: &PathCombination) -> SparseVec {
    SparseVec::from_pairs(r.terms().map(|(p, c)| {
        let i = paths.binary_search(p).expect("relation term among the enumerated paths");
        (i, c.clone())
    }))
}

pub fn quadratic_check(p: &Presentation) -> bool {
    p.relations().iter().all(|r| r.length() == Some(2))
}

/// Quadratic dual on the opposite quiver; relations come out in reduced
/// echelon form, grouped by vertex pair of the opposite quiver.
pub fn dual_presentation(p: &Presentation) -> Result<Presentation> {
    let data = QuadraticData::new(p)?;
    let q = p.quiver();
    let op = q.opposite();
    let n = q.num_vertices();
    let mut relations = Vec::new();
    // vertex pair (x, y) of the opposite quiver corresponds to (y, x) in q
    for x in 0..n {
        for y in 0..n {
            let complement = data.complement(y, x);
            if complement.is_empty() {
                continue;
            }
            let op_paths = op.enumerate_paths(2, Some(x), Some(y));
            let src_paths = data.paths(y, x);
            let vectors: Vec<SparseVec> = complement
                .iter()
                .map(|v| {
                    SparseVec::from_pairs(v.iter().map(|(i, c)| {
                        let rev = q.reverse_path(&src_paths[i]);
                        let j = op_paths.binary_search(&rev).expect("reversed path exists in the opposite quiver");
                        (j, c.clone())
                    }))
                })
                .collect();
            let canonical = EchelonBasis::from_vectors(&vectors);
            for row in canonical.rows() {
                relations.push(PathCombination::from_terms(
                    row.iter().map(|(j, c)| (op_paths[j].clone(), c.clone())),
                ));
            }
        }
    }
    Presentation::new(op, relations)
}

/// True iff the dual of the dual has the same quiver and the same relation
/// spaces as `p`.
pub fn double_dual_check(p: &Presentation) -> Result<bool> {
    let again = dual_presentation(&dual_presentation(p)?)?;
    if again.quiver() != p.quiver() {
        return Ok(false);
    }
    let (a, b) = (QuadraticData::new(p)?, QuadraticData::new(&again)?);
    let n = p.num_vertices();
    Ok((0..n).all(|u| (0..n).all(|v| a.space(u, v).rows() == b.space(u, v).rows())))
}

/// Opposite quiver used by the dual (re-exported for callers that want to
/// map paths themselves).
pub fn dual_quiver(q: &Quiver) -> Quiver {
    q.opposite()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{a2, exterior, loop_cubed};
    use crate::algebra::AlgebraModel;
    use crate::linalg::int;

    #[test]
    fn quadratic_check_examples() {
        assert!(quadratic_check(&exterior(3)));
        assert!(!quadratic_check(&loop_cubed()));
        assert!(quadratic_check(&a2()));
        assert!(matches!(dual_presentation(&loop_cubed()), Err(Error::NotQuadratic(0))));
    }

    #[test]
    fn exterior_dual_is_polynomial() {
        let d = dual_presentation(&exterior(2)).unwrap();
        assert_eq!(d.relations().len(), 1);
        let q = d.quiver();
        let expected = PathCombination::from_terms([
            (q.path_from_word(&["a1", "a2"]).unwrap(), int(1)),
            (q.path_from_word(&["a2", "a1"]).unwrap(), int(-1)),
        ]);
        assert_eq!(d.relations()[0], expected);
        assert_eq!(AlgebraModel::new(&d, 4).dims_per_degree(), vec![1, 2, 3, 4, 5]);

        let d3 = dual_presentation(&exterior(3)).unwrap();
        // C(3 + i - 1, i)
        assert_eq!(AlgebraModel::new(&d3, 4).dims_per_degree(), vec![1, 3, 6, 10, 15]);
    }

    #[test]
    fn a2_and_dual_numbers() {
        let d = dual_presentation(&a2()).unwrap();
        assert!(d.relations().is_empty());
        assert_eq!(d.quiver().arrow(0).label, "a^op");
        assert_eq!(AlgebraModel::new(&d, 2).dims_per_degree(), vec![2, 1, 0]);

        let d = dual_presentation(&exterior(1)).unwrap();
        assert!(d.relations().is_empty());
        assert_eq!(AlgebraModel::new(&d, 5).dims_per_degree(), vec![1; 6]);
    }

    #[test]
    fn complement_dimensions_add_up() {
        for p in [exterior(1), exterior(2), exterior(3), a2()] {
            let data = QuadraticData::new(&p).unwrap();
            let n = p.num_vertices();
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(
                        data.space(u, v).dim() + data.complement(u, v).len(),
                        data.paths(u, v).len()
                    );
                }
            }
        }
    }

    #[test]
    fn double_dual_examples() {
        for p in [exterior(1), exterior(2), exterior(3), a2()] {
            assert!(double_dual_check(&p).unwrap());
        }
    }
}
