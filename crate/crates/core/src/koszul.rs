//! Bounded Koszulity verdicts and the consistency checks built on minimal
//! resolutions.

use std::fmt;

use serde::Serialize;

use crate::algebra::{AlgebraModel, Presentation};
use crate::covering::build_covering;
use crate::dual::quadratic_check;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, WeightFunction};
use crate::linalg::EchelonBasis;
use crate::poly::PolyMatrix;
use crate::resolution::{minimal_resolution, ResolutionReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum KoszulVerdict {
    KoszulToBound { i_max: usize, d_max: usize },
    FailsAt { i: usize, d: usize },
    UnknownBeyondBound { i_max: usize, d_max: usize },
}

impl KoszulVerdict {
    pub fn is_koszul_to_bound(&self) -> bool {
        matches!(self, Self::KoszulToBound { .. })
    }

    pub fn failure(&self) -> Option<(usize, usize)> {
        match *self {
            Self::FailsAt { i, d } => Some((i, d)),
            _ => None,
        }
    }
}

impl fmt::Display for KoszulVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::KoszulToBound { i_max, d_max } => write!(f, "koszul-to-bound (i ≤ {i_max}, d ≤ {d_max})"),
            Self::FailsAt { i, d } => write!(f, "fails-at({i},{d})"),
            Self::UnknownBeyondBound { i_max, d_max } => {
                write!(f, "unknown-beyond-bound (d_max = {d_max} < i_max = {i_max})")
            }
        }
    }
}

/// Linear-resolution criterion: `β_{i,d} = 0` for `d ≠ i`. The first
/// failure is reported by `i`, then `d`.
pub fn is_koszul_to(r: &ResolutionReport) -> KoszulVerdict {
    for i in 0..=r.i_max() {
        let off_diagonal = (0..r.num_vertices())
            .flat_map(|u| r.resolution(u).generators(i).iter())
            .map(|g| g.degree)
            .filter(|&d| d != i)
            .min();
        if let Some(d) = off_diagonal {
            return KoszulVerdict::FailsAt { i, d };
        }
    }
    if r.d_max() < r.i_max() {
        KoszulVerdict::UnknownBeyondBound {
            i_max: r.i_max(),
            d_max: r.d_max(),
        }
    } else {
        KoszulVerdict::KoszulToBound {
            i_max: r.i_max(),
            d_max: r.d_max(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum GenerationVerdict {
    Pass { i_max: usize },
    /// `span(Ext^i · Ext^1)` has dimension `achieved` instead of `dim Ext^{i+1} = required`.
    FailsAt { i: usize, achieved: usize, required: usize },
}

impl GenerationVerdict {
    pub fn passes(&self) -> bool {
        matches!(self, Self::Pass { .. })
    }
}

impl fmt::Display for GenerationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Pass { i_max } => write!(f, "generated in degrees 0 and 1 up to Ext^{i_max}"),
            Self::FailsAt { i, achieved, required } => {
                write!(f, "Ext^{i}·Ext^1 spans {achieved} of dim Ext^{} = {required}", i + 1)
            }
        }
    }
}

/// Checks `span(Ext^i · Ext^1) = Ext^{i+1}` for `1 ≤ i < i_max`, within the
/// internal degree bound.
pub fn generation_check(r: &ResolutionReport) -> GenerationVerdict {
    let i_max = r.i_max();
    if i_max < 2 {
        return GenerationVerdict::Pass { i_max };
    }
    let ext1: Vec<_> = (1..=r.d_max()).flat_map(|d| r.ext_basis(1, d)).collect();
    let lifts: Vec<_> = ext1.iter().map(|z| (z.d, r.lift(z, i_max - 1, r.d_max()))).collect();
    for i in 1..i_max {
        let mut span = EchelonBasis::new();
        for d in 0..=r.d_max() {
            for xi in r.ext_basis(i, d) {
                for (dz, lift) in &lifts {
                    if d + dz <= r.d_max() {
                        span.insert(lift.compose(r, &xi).flatten(r));
                    }
                }
            }
        }
        let required: usize = (0..r.num_vertices()).map(|u| r.resolution(u).generators(i + 1).len()).sum();
        if span.dim() != required {
            return GenerationVerdict::FailsAt {
                i,
                achieved: span.dim(),
                required,
            };
        }
    }
    GenerationVerdict::Pass { i_max }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerMismatch {
    pub row: String,
    pub column: String,
    pub degree: usize,
    pub found: i64,
    pub expected: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerCheck {
    pub cutoff: usize,
    pub mismatch: Option<EulerMismatch>,
}

impl EulerCheck {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// `Σ_i (-1)^i B_i(t)` truncated at `t^cutoff`.
pub fn euler_characteristic(r: &ResolutionReport, cutoff: usize) -> PolyMatrix {
    let n = r.num_vertices();
    let mut chi = PolyMatrix::zeros(n, cutoff);
    for i in 0..=cutoff.min(r.i_max()) {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        chi.add_scaled(sign, &r.betti_matrix(i).truncated(cutoff));
    }
    chi
}

/// `(Σ_i (-1)^i B_i(t)) · H(t) ≡ I mod t^{cutoff+1}`.
pub fn hilbert_euler_check(m: &AlgebraModel, r: &ResolutionReport, cutoff: usize) -> Result<EulerCheck> {
    let limit = r.d_max().min(r.i_max()).min(m.max_degree());
    if cutoff > limit {
        return Err(Error::InsufficientBounds(format!(
            "cutoff {cutoff} exceeds min(d_max, i_max, N) = {limit}"
        )));
    }
    let h = m.hilbert_matrix().matrix().truncated(cutoff);
    let product = euler_characteristic(r, cutoff).mul(&h);
    let identity = PolyMatrix::identity(m.num_vertices(), cutoff);
    let q = m.quiver();
    let mismatch = product.first_difference(&identity).map(|(u, v, d)| EulerMismatch {
        row: q.vertex_label(u).to_string(),
        column: q.vertex_label(v).to_string(),
        degree: d,
        found: product.get(u, v, d),
        expected: identity.get(u, v, d),
    });
    Ok(EulerCheck { cutoff, mismatch })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityCheck {
    pub bound: usize,
    pub ext_totals: Vec<usize>,
    pub dual_dims: Vec<usize>,
    pub first_mismatch: Option<usize>,
}

impl DualityCheck {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// For a quadratic algebra certified Koszul to the bound: total
/// `dim Ext^i = dim (A^!)_i` for every `i` within the bounds.
pub fn koszul_duality_dim_check(m: &AlgebraModel, dual: &AlgebraModel, r: &ResolutionReport) -> Result<DualityCheck> {
    if let Some(i) = m.presentation().relations().iter().position(|x| x.length() != Some(2)) {
        return Err(Error::NotQuadratic(i));
    }
    debug_assert!(quadratic_check(m.presentation()));
    let verdict = is_koszul_to(r);
    if !verdict.is_koszul_to_bound() {
        return Err(Error::NotKoszul(verdict.to_string()));
    }
    let bound = r.i_max().min(dual.max_degree());
    let ext_totals: Vec<usize> = r.ext_totals().into_iter().take(bound + 1).collect();
    let dual_dims: Vec<usize> = (0..=bound).map(|i| dual.total_dim_in_degree(i)).collect();
    let first_mismatch = (0..=bound).find(|&i| ext_totals[i] != dual_dims[i]);
    Ok(DualityCheck {
        bound,
        ext_totals,
        dual_dims,
        first_mismatch,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringTheoremReport {
    pub group_order: usize,
    pub base_verdict: KoszulVerdict,
    pub cover_verdict: KoszulVerdict,
    pub verdicts_agree: bool,
    pub base_ext_totals: Vec<usize>,
    pub cover_ext_totals: Vec<usize>,
    pub ext_totals_scale: bool,
}

impl CoveringTheoremReport {
    pub fn holds(&self) -> bool {
        self.verdicts_agree && self.ext_totals_scale
    }
}

/// Resolves `p` and its Galois covering for `(G, W)` and compares the
/// Koszul verdicts and the Ext totals (covering = `|G|` × base).
pub fn theorem_covering_check(
    p: &Presentation,
    g: &FiniteGroup,
    w: &WeightFunction,
    i_max: usize,
    d_max: usize,
) -> Result<CoveringTheoremReport> {
    let cover = build_covering(p, g, w)?;
    let base_model = AlgebraModel::new(p, d_max);
    let cover_model = AlgebraModel::new(cover.presentation(), d_max);
    let (base, covering) = rayon::join(
        || minimal_resolution(&base_model, i_max, d_max),
        || minimal_resolution(&cover_model, i_max, d_max),
    );
    let (base, covering) = (base?, covering?);
    let base_verdict = is_koszul_to(&base);
    let cover_verdict = is_koszul_to(&covering);
    let base_ext_totals = base.ext_totals();
    let cover_ext_totals = covering.ext_totals();
    let ext_totals_scale = base_ext_totals
        .iter()
        .zip(&cover_ext_totals)
        .all(|(b, c)| b * g.order() == *c);
    Ok(CoveringTheoremReport {
        group_order: g.order(),
        verdicts_agree: base_verdict == cover_verdict,
        base_verdict,
        cover_verdict,
        base_ext_totals,
        cover_ext_totals,
        ext_totals_scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{a2, exterior, loop_cubed};
    use crate::dual::dual_presentation;
    use crate::quiver::{PathCombination, Quiver};

    fn resolve(p: &Presentation, i_max: usize, d_max: usize) -> (AlgebraModel, ResolutionReport) {
        let m = AlgebraModel::new(p, d_max);
        let r = minimal_resolution(&m, i_max, d_max).unwrap();
        (m, r)
    }

    fn radical_square_zero_two_loops() -> Presentation {
        let q = Quiver::from_strs(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let rels = q.enumerate_paths(2, None, None).into_iter().map(PathCombination::from_path).collect();
        Presentation::new(q, rels).unwrap()
    }

    #[test]
    fn verdicts() {
        let (_, r) = resolve(&exterior(3), 4, 4);
        assert_eq!(is_koszul_to(&r), KoszulVerdict::KoszulToBound { i_max: 4, d_max: 4 });
        let (_, r) = resolve(&loop_cubed(), 4, 6);
        assert_eq!(is_koszul_to(&r), KoszulVerdict::FailsAt { i: 2, d: 3 });
        assert_eq!(is_koszul_to(&r).to_string(), "fails-at(2,3)");
        let (_, r) = resolve(&radical_square_zero_two_loops(), 4, 4);
        assert!(is_koszul_to(&r).is_koszul_to_bound());
        assert_eq!(r.ext_totals(), vec![1, 2, 4, 8, 16]);
        let (_, r) = resolve(&exterior(2), 4, 3);
        assert!(matches!(is_koszul_to(&r), KoszulVerdict::UnknownBeyondBound { .. }));
    }

    #[test]
    fn generation() {
        let (_, r) = resolve(&exterior(2), 4, 4);
        assert_eq!(generation_check(&r), GenerationVerdict::Pass { i_max: 4 });
        let (_, r) = resolve(&loop_cubed(), 3, 5);
        assert_eq!(
            generation_check(&r),
            GenerationVerdict::FailsAt {
                i: 1,
                achieved: 0,
                required: 1
            }
        );
        let (_, r) = resolve(&a2(), 3, 3);
        assert!(generation_check(&r).passes());
        let (_, r) = resolve(&radical_square_zero_two_loops(), 4, 4);
        assert!(generation_check(&r).passes());
    }

    #[test]
    fn euler_identity() {
        let (m, r) = resolve(&a2(), 3, 3);
        assert!(hilbert_euler_check(&m, &r, 3).unwrap().holds());
        // (I - t E12) · [[1, t], [0, 1]] = I
        let chi = euler_characteristic(&r, 1);
        assert_eq!(chi, PolyMatrix::from_entries(2, 1, &[(0, 0, 0, 1), (1, 1, 0, 1), (0, 1, 1, -1)]));
        let h = m.hilbert_matrix().matrix().truncated(1);
        assert_eq!(h, PolyMatrix::from_entries(2, 1, &[(0, 0, 0, 1), (1, 1, 0, 1), (0, 1, 1, 1)]));

        let (m, r) = resolve(&exterior(2), 4, 4);
        assert_eq!(euler_characteristic(&r, 4).entry(0, 0), vec![1, -2, 3, -4, 5]);
        assert!(hilbert_euler_check(&m, &r, 4).unwrap().holds());

        let (m, r) = resolve(&loop_cubed(), 5, 5);
        assert_eq!(euler_characteristic(&r, 5).entry(0, 0), vec![1, -1, 0, 1, -1, 0]);
        assert!(hilbert_euler_check(&m, &r, 5).unwrap().holds());

        assert!(matches!(hilbert_euler_check(&m, &r, 6), Err(Error::InsufficientBounds(_))));
    }

    #[test]
    fn euler_detects_wrong_hilbert_series() {
        let (_, r) = resolve(&exterior(2), 4, 4);
        let other = AlgebraModel::new(&exterior(3), 4);
        let check = hilbert_euler_check(&other, &r, 4).unwrap();
        assert_eq!(check.mismatch.unwrap().degree, 1);
    }

    #[test]
    fn duality_dims() {
        for p in [exterior(2), a2()] {
            let (m, r) = resolve(&p, 4, 4);
            let dual = AlgebraModel::new(&dual_presentation(&p).unwrap(), 4);
            let check = koszul_duality_dim_check(&m, &dual, &r).unwrap();
            assert!(check.holds(), "{check:?}");
        }
        let (m, r) = resolve(&loop_cubed(), 3, 5);
        assert!(matches!(
            koszul_duality_dim_check(&m, &m, &r),
            Err(Error::NotQuadratic(0))
        ));
    }

    #[test]
    fn covering_theorem() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let p = exterior(2);
        let w = WeightFunction::constant(p.quiver(), 1);
        let report = theorem_covering_check(&p, &z2, &w, 4, 4).unwrap();
        assert!(report.holds());
        assert_eq!(report.cover_ext_totals, vec![2, 4, 6, 8, 10]);
        assert!(report.cover_verdict.is_koszul_to_bound());

        let p = loop_cubed();
        let w = WeightFunction::constant(p.quiver(), 1);
        let report = theorem_covering_check(&p, &z2, &w, 4, 6).unwrap();
        assert!(report.holds());
        assert_eq!(report.cover_verdict.failure().map(|f| f.0), Some(2));
    }
}
