//! Minimal graded projective resolutions of the simple modules, graded Betti
//! numbers, Ext groups and Yoneda products.
//!
//! Modules are left modules. The projective `P(v) = A·e_v` has, in degree `d`
//! at vertex `w`, the basis of `A_d(v→w)`. A graded projective with
//! generators `g` (vertex `v_g`, degree `d_g`) has, at `(d, w)`, coordinates
//! concatenating the bases of `A_{d-d_g}(v_g→w)` over its generators.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::AlgebraModel;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, EchelonBasis, Matrix, Scalar, SparseVec, SpanSolver};
use crate::poly::PolyMatrix;
use crate::quiver::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Generator {
    pub vertex: usize,
    pub degree: usize,
}

#[derive(Clone, Debug, Default)]
struct Layout {
    /// `(generator, offset, len)`, sorted by generator
    blocks: Vec<(usize, usize, usize)>,
    size: usize,
}

impl Layout {
    fn offset_of(&self, g: usize) -> Option<usize> {
        self.blocks
            .binary_search_by_key(&g, |b| b.0)
            .ok()
            .map(|k| self.blocks[k].1)
    }
}

/// One term `P_i` of a resolution with its differential into `P_{i-1}`.
#[derive(Clone, Debug)]
struct Step {
    generators: Vec<Generator>,
    /// `∂g` in `(P_{i-1})_{d_g}(v_g)`; for `i = 0` the generator maps to the simple.
    images: Vec<SparseVec>,
    /// `[d][w]`
    layout: Vec<Vec<Layout>>,
    /// `[d][w]`: image of every basis element of `(P_i)_d(w)`
    differential: Vec<Vec<Vec<SparseVec>>>,
}

fn build_layout(m: &AlgebraModel, gens: &[Generator], d_max: usize) -> Vec<Vec<Layout>> {
    let n = m.num_vertices();
    (0..=d_max)
        .map(|d| {
            (0..n)
                .map(|w| {
                    let mut layout = Layout::default();
                    for (g, gen) in gens.iter().enumerate() {
                        if gen.degree > d {
                            continue;
                        }
                        let len = m.dim(d - gen.degree, gen.vertex, w);
                        if len > 0 {
                            layout.blocks.push((g, layout.size, len));
                            layout.size += len;
                        }
                    }
                    layout
                })
                .collect()
        })
        .collect()
}

/// `b·x` for `x` in `P_{d}(w)` and a path `b` starting at `w`.
fn act(m: &AlgebraModel, step: &Step, x: &SparseVec, d: usize, w: usize, b: &Path) -> SparseVec {
    let target = &step.layout[d + b.len()][b.target()];
    let mut out = SparseVec::new();
    let blocks = &step.layout[d][w].blocks;
    let mut k = 0;
    for (i, c) in x.iter() {
        while blocks[k].1 + blocks[k].2 <= i {
            k += 1;
        }
        let (g, offset, _) = blocks[k];
        let gen = step.generators[g];
        let q = m.basis_path(d - gen.degree, gen.vertex, w, i - offset);
        let coords = m
            .express_path(&b.compose(q).expect("composable"))
            .expect("within truncation");
        if coords.is_zero() {
            continue;
        }
        let base = target.offset_of(g).expect("block present in the target degree");
        out.add_scaled(c, &coords.shifted(base));
    }
    out
}

/// Minimal resolution of one simple module.
#[derive(Clone, Debug)]
pub struct SimpleResolution {
    simple: usize,
    steps: Vec<Step>,
    exactness_failures: Vec<(usize, usize, usize)>,
}

impl SimpleResolution {
    pub fn simple(&self) -> usize {
        self.simple
    }

    pub fn generators(&self, i: usize) -> &[Generator] {
        &self.steps[i].generators
    }

    pub fn length(&self) -> usize {
        self.steps.len() - 1
    }

    fn dims(&self, i: usize, d: usize, w: usize) -> usize {
        self.steps[i].layout[d][w].size
    }
}

fn resolve_simple(m: &AlgebraModel, u: usize, i_max: usize, d_max: usize) -> SimpleResolution {
    let n = m.num_vertices();
    let gens = vec![Generator { vertex: u, degree: 0 }];
    let layout = build_layout(m, &gens, d_max);
    // Ω¹: everything of positive degree in P_0
    let mut omega: Vec<Vec<Vec<SparseVec>>> = layout
        .iter()
        .enumerate()
        .map(|(d, row)| {
            row.iter()
                .map(|l| {
                    if d == 0 {
                        Vec::new()
                    } else {
                        (0..l.size).map(SparseVec::unit).collect()
                    }
                })
                .collect()
        })
        .collect();
    let mut steps = vec![Step {
        generators: gens,
        images: vec![SparseVec::unit(0)],
        layout,
        differential: Vec::new(),
    }];
    let mut exactness_failures = Vec::new();

    for i in 1..=i_max {
        let prev = &steps[i - 1];
        let mut generators = Vec::new();
        let mut images = Vec::new();
        for d in 0..=d_max {
            for w in 0..n {
                if omega[d][w].is_empty() {
                    continue;
                }
                let mut span = EchelonBasis::new();
                if d > 0 {
                    for a in m.quiver().arrows_to(w) {
                        let x = m.quiver().arrow(a).source;
                        let path = m.quiver().arrow_path(a);
                        for v in &omega[d - 1][x] {
                            span.insert(act(m, prev, v, d - 1, x, &path));
                        }
                    }
                }
                for v in &omega[d][w] {
                    if span.insert(v.clone()) {
                        generators.push(Generator { vertex: w, degree: d });
                        images.push(v.clone());
                    }
                }
            }
        }
        let layout = build_layout(m, &generators, d_max);
        let mut step = Step {
            generators,
            images,
            layout,
            differential: Vec::new(),
        };
        let differential: Vec<Vec<Vec<SparseVec>>> = (0..=d_max)
            .map(|d| {
                (0..n)
                    .map(|w| {
                        let mut columns = Vec::with_capacity(step.layout[d][w].size);
                        for &(g, _, len) in &step.layout[d][w].blocks {
                            let gen = step.generators[g];
                            for k in 0..len {
                                let b = m.basis_path(d - gen.degree, gen.vertex, w, k);
                                columns.push(act(m, prev, &step.images[g], gen.degree, gen.vertex, b));
                            }
                        }
                        columns
                    })
                    .collect()
            })
            .collect();
        let mut next = vec![vec![Vec::new(); n]; d_max + 1];
        for d in 0..=d_max {
            for w in 0..n {
                let columns = &differential[d][w];
                // the image must be exactly Ω^i; reduced echelon forms are unique
                let image = EchelonBasis::from_vectors(columns);
                if image.rows() != omega[d][w].as_slice() {
                    exactness_failures.push((i, d, w));
                }
                if i < i_max && !columns.is_empty() {
                    let matrix = Matrix::from_columns(prev.layout[d][w].size, columns).expect("columns in range");
                    let kernel = kernel_basis(&matrix);
                    next[d][w] = EchelonBasis::from_vectors(&kernel).rows().to_vec();
                }
            }
        }
        step.differential = differential;
        steps.push(step);
        omega = next;
    }
    SimpleResolution {
        simple: u,
        steps,
        exactness_failures,
    }
}

/// Minimal resolutions of every simple module, to homological index `i_max`
/// and internal degree `d_max`.
#[derive(Clone, Debug)]
pub struct ResolutionReport {
    model: AlgebraModel,
    i_max: usize,
    d_max: usize,
    resolutions: Vec<SimpleResolution>,
}

/// Computes the report. Simples are resolved in parallel.
pub fn minimal_resolution(m: &AlgebraModel, i_max: usize, d_max: usize) -> Result<ResolutionReport> {
    if d_max > m.max_degree() {
        return Err(Error::DegreeOverflow {
            degree: d_max,
            bound: m.max_degree(),
        });
    }
    let resolutions = (0..m.num_vertices())
        .into_par_iter()
        .map(|u| resolve_simple(m, u, i_max, d_max))
        .collect();
    Ok(ResolutionReport {
        model: m.clone(),
        i_max,
        d_max,
        resolutions,
    })
}

/// Betti numbers of one simple in one homological degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub degree: usize,
    pub vertex: String,
    pub count: usize,
}

impl ResolutionReport {
    pub fn model(&self) -> &AlgebraModel {
        &self.model
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn num_vertices(&self) -> usize {
        self.resolutions.len()
    }

    pub fn resolution(&self, u: usize) -> &SimpleResolution {
        &self.resolutions[u]
    }

    /// `β_{i,d}(u→v)`: degree-`d` generators of type `P(v)` in `P_i` of `S_u`.
    pub fn betti(&self, i: usize, d: usize, u: usize, v: usize) -> usize {
        self.resolutions[u]
            .generators(i)
            .iter()
            .filter(|g| g.degree == d && g.vertex == v)
            .count()
    }

    /// Nonzero Betti numbers of `S_u` in homological degree `i`, by degree then vertex.
    pub fn betti_entries(&self, u: usize, i: usize) -> Vec<BettiEntry> {
        let mut counts: std::collections::BTreeMap<(usize, usize), usize> = Default::default();
        for g in self.resolutions[u].generators(i) {
            *counts.entry((g.degree, g.vertex)).or_default() += 1;
        }
        counts
            .into_iter()
            .map(|((degree, v), count)| BettiEntry {
                degree,
                vertex: self.model.quiver().vertex_label(v).to_string(),
                count,
            })
            .collect()
    }

    /// `B_i(t)` with entry `(u, v)` equal to `Σ_d β_{i,d}(u→v) t^d`.
    pub fn betti_matrix(&self, i: usize) -> PolyMatrix {
        let n = self.num_vertices();
        let mut b = PolyMatrix::zeros(n, self.d_max);
        for (u, r) in self.resolutions.iter().enumerate() {
            for g in r.generators(i) {
                b.set(u, g.vertex, g.degree, b.get(u, g.vertex, g.degree) + 1);
            }
        }
        b
    }

    /// `dim Ext^i(S_u, S_v)` (within the degree bound).
    pub fn ext_dim(&self, i: usize, u: usize, v: usize) -> usize {
        self.resolutions[u].generators(i).iter().filter(|g| g.vertex == v).count()
    }

    /// Per-pair Ext table for homological degree `i`, `[u][v]`.
    pub fn ext_table(&self, i: usize) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        (0..n).map(|u| (0..n).map(|v| self.ext_dim(i, u, v)).collect()).collect()
    }

    /// `Σ_{u,v} dim Ext^i(S_u, S_v)` for `i = 0..=i_max`.
    pub fn ext_totals(&self) -> Vec<usize> {
        (0..=self.i_max)
            .map(|i| self.resolutions.iter().map(|r| r.generators(i).len()).sum())
            .collect()
    }

    /// `(simple, i, d, w)` where the image of `P_i` differs from `Ω^i`.
    pub fn exactness_failures(&self) -> Vec<(usize, usize, usize, usize)> {
        self.resolutions
            .iter()
            .flat_map(|r| r.exactness_failures.iter().map(move |&(i, d, w)| (r.simple, i, d, w)))
            .collect()
    }

    /// Every generator image has zero component on the degree-0 part of each
    /// block, i.e. `∂(P_{i+1}) ⊆ J·P_i`.
    pub fn is_minimal(&self) -> bool {
        self.resolutions.iter().all(|r| {
            (1..r.steps.len()).all(|i| {
                let (prev, step) = (&r.steps[i - 1], &r.steps[i]);
                step.generators.iter().zip(&step.images).all(|(g, image)| {
                    let layout = &prev.layout[g.degree][g.vertex];
                    layout
                        .blocks
                        .iter()
                        .filter(|&&(h, _, _)| prev.generators[h].degree == g.degree)
                        .all(|&(_, offset, len)| image.iter().all(|(k, _)| k < offset || k >= offset + len))
                })
            })
        })
    }

    /// `β_{i,d} = 0` for `d < i`.
    pub fn degrees_increase(&self) -> bool {
        self.resolutions
            .iter()
            .all(|r| (0..=self.i_max).all(|i| r.generators(i).iter().all(|g| g.degree >= i)))
    }

    /// Basis of `Ext^{i}` in internal degree `d`: one dual vector per generator.
    pub fn ext_basis(&self, i: usize, d: usize) -> Vec<ExtElement> {
        let mut out = Vec::new();
        for (u, r) in self.resolutions.iter().enumerate() {
            for (k, g) in r.generators(i).iter().enumerate() {
                if g.degree == d {
                    let mut e = ExtElement::zero(self, i, d);
                    e.values[u] = SparseVec::unit(k);
                    out.push(e);
                }
            }
        }
        out
    }

    /// Unit of the Yoneda algebra.
    pub fn ext_identity(&self) -> ExtElement {
        let mut e = ExtElement::zero(self, 0, 0);
        for v in &mut e.values {
            *v = SparseVec::unit(0);
        }
        e
    }

    fn check_product_bounds(&self, xi: &ExtElement, zeta: &ExtElement) -> Result<()> {
        if xi.i + zeta.i > self.i_max {
            return Err(Error::InsufficientBounds(format!(
                "homological degree {} exceeds {}",
                xi.i + zeta.i,
                self.i_max
            )));
        }
        if xi.d + zeta.d > self.d_max {
            return Err(Error::InsufficientBounds(format!(
                "internal degree {} exceeds {}",
                xi.d + zeta.d,
                self.d_max
            )));
        }
        Ok(())
    }

    /// Yoneda product `ξ·ζ`: `ζ` is lifted to a chain map and `ξ` is applied
    /// to its `i`-th component.
    pub fn yoneda_product(&self, xi: &ExtElement, zeta: &ExtElement) -> Result<ExtElement> {
        self.check_product_bounds(xi, zeta)?;
        let lift = self.lift(zeta, xi.i, xi.d + zeta.d);
        Ok(lift.compose(self, xi))
    }

    /// Chain map `f_k : P_{j+k}(S_s) → ⊕_t P_k(S_t)` lifting `ζ`, computed for
    /// `k ≤ upto` on generators of degree at most `max_degree`.
    pub fn lift(&self, zeta: &ExtElement, upto: usize, max_degree: usize) -> ChainLift {
        let n = self.num_vertices();
        let (j, d) = (zeta.i, zeta.d);
        let mut solvers: HashMap<(usize, usize, usize, usize), SpanSolver> = HashMap::new();
        let mut maps = Vec::with_capacity(n);
        for s in 0..n {
            if zeta.values[s].is_zero() {
                maps.push(Vec::new());
                continue;
            }
            let source = &self.resolutions[s];
            let mut f: Vec<Vec<Vec<SparseVec>>> = Vec::with_capacity(upto + 1);
            for k in 0..=upto {
                let step = &source.steps[j + k];
                let mut fk = Vec::with_capacity(step.generators.len());
                for (gi, g) in step.generators.iter().enumerate() {
                    let mut value = vec![SparseVec::new(); n];
                    if g.degree < d || g.degree > max_degree {
                        fk.push(value);
                        continue;
                    }
                    let e = g.degree - d;
                    if k == 0 {
                        if e == 0 {
                            let c = zeta.values[s].get(gi);
                            if !c.is_zero() {
                                value[g.vertex] = SparseVec::from_pairs([(0, c)]);
                            }
                        }
                        fk.push(value);
                        continue;
                    }
                    // y = f_{k-1}(∂g)
                    let prev_step = &source.steps[j + k - 1];
                    let image = &step.images[gi];
                    let mut y = vec![SparseVec::new(); n];
                    let blocks = &prev_step.layout[g.degree][g.vertex].blocks;
                    for &(h, offset, len) in blocks {
                        let gh = prev_step.generators[h];
                        if gh.degree < d {
                            continue;
                        }
                        for idx in 0..len {
                            let c = image.get(offset + idx);
                            if c.is_zero() {
                                continue;
                            }
                            let b = self.model.basis_path(g.degree - gh.degree, gh.vertex, g.vertex, idx);
                            for (t, fh) in f[k - 1][h].iter().enumerate() {
                                if fh.is_zero() {
                                    continue;
                                }
                                let target = &self.resolutions[t].steps[k - 1];
                                y[t].add_scaled(&c, &act(&self.model, target, fh, gh.degree - d, gh.vertex, b));
                            }
                        }
                    }
                    for (t, yt) in y.iter().enumerate() {
                        if yt.is_zero() {
                            continue;
                        }
                        let target = &self.resolutions[t];
                        let solver = solvers.entry((t, k, e, g.vertex)).or_insert_with(|| {
                            SpanSolver::new(
                                &target.steps[k].differential[e][g.vertex],
                                target.dims(k - 1, e, g.vertex),
                            )
                        });
                        value[t] = solver.solve(yt).expect("minimal resolution admits a lift");
                    }
                    fk.push(value);
                }
                f.push(fk);
            }
            maps.push(f);
        }
        ChainLift {
            j,
            d,
            upto,
            maps,
        }
    }
}

/// Chain map produced by [`ResolutionReport::lift`].
#[derive(Clone, Debug)]
pub struct ChainLift {
    j: usize,
    d: usize,
    upto: usize,
    /// `maps[s][k][g][t]`
    maps: Vec<Vec<Vec<Vec<SparseVec>>>>,
}

impl ChainLift {
    /// `ξ ∘ f_i` as an element of `Ext^{i+j}`.
    pub fn compose(&self, r: &ResolutionReport, xi: &ExtElement) -> ExtElement {
        let i = xi.i;
        assert!(i <= self.upto, "lift not computed to homological degree {i}");
        let mut out = ExtElement::zero(r, i + self.j, xi.d + self.d);
        for (s, f) in self.maps.iter().enumerate() {
            if f.is_empty() {
                continue;
            }
            let gens = r.resolutions[s].generators(i + self.j);
            let mut pairs = Vec::new();
            for (gi, g) in gens.iter().enumerate() {
                if g.degree != xi.d + self.d {
                    continue;
                }
                let mut total = Scalar::zero();
                for (t, value) in f[i][gi].iter().enumerate() {
                    if value.is_zero() || xi.values[t].is_zero() {
                        continue;
                    }
                    let target = &r.resolutions[t].steps[i];
                    for &(h, offset, _) in &target.layout[xi.d][g.vertex].blocks {
                        if target.generators[h].degree == xi.d {
                            total += xi.values[t].get(h) * value.get(offset);
                        }
                    }
                }
                if !total.is_zero() {
                    pairs.push((gi, total));
                }
            }
            out.values[s] = SparseVec::from_pairs(pairs);
        }
        out
    }
}

/// Element of `Ext^i(A/J, A/J)` in internal degree `d`: for each simple
/// `S_u`, a functional on the degree-`d` generators of `P_i(S_u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtElement {
    pub i: usize,
    pub d: usize,
    /// `values[u]` indexed by generator of `P_i(S_u)`
    pub values: Vec<SparseVec>,
}

impl ExtElement {
    pub fn zero(r: &ResolutionReport, i: usize, d: usize) -> Self {
        Self {
            i,
            d,
            values: vec![SparseVec::new(); r.num_vertices()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(SparseVec::is_zero)
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &ExtElement) {
        assert_eq!((self.i, self.d), (other.i, other.d));
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            a.add_scaled(c, b);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        Self {
            i: self.i,
            d: self.d,
            values: self.values.iter().map(|v| v.scaled(c)).collect(),
        }
    }

    /// Single vector over all generators of `P_i`, simple by simple.
    pub fn flatten(&self, r: &ResolutionReport) -> SparseVec {
        let mut out = SparseVec::new();
        let mut offset = 0;
        for (u, v) in self.values.iter().enumerate() {
            out.add_scaled(&Scalar::one(), &v.shifted(offset));
            offset += r.resolutions[u].generators(self.i).len();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{a2, exterior, loop_cubed};
    use crate::algebra::Presentation;
    use crate::linalg::int;
    use crate::quiver::{PathCombination, Quiver};

    fn dual_numbers() -> Presentation {
        exterior(1)
    }

    fn degrees(r: &ResolutionReport, u: usize, i: usize) -> Vec<usize> {
        r.resolution(u).generators(i).iter().map(|g| g.degree).collect()
    }

    #[test]
    fn exterior_two_is_linear() {
        let m = AlgebraModel::new(&exterior(2), 6);
        let r = minimal_resolution(&m, 4, 6).unwrap();
        for i in 0..=4 {
            assert_eq!(degrees(&r, 0, i), vec![i; i + 1]);
        }
        assert_eq!(r.ext_totals(), vec![1, 2, 3, 4, 5]);
        assert!(r.exactness_failures().is_empty());
        assert!(r.is_minimal());
        assert!(r.degrees_increase());
    }

    #[test]
    fn loop_cubed_is_periodic() {
        let m = AlgebraModel::new(&loop_cubed(), 6);
        let r = minimal_resolution(&m, 4, 6).unwrap();
        let gens: Vec<Vec<usize>> = (0..=4).map(|i| degrees(&r, 0, i)).collect();
        assert_eq!(gens, vec![vec![0], vec![1], vec![3], vec![4], vec![6]]);
        assert!(r.exactness_failures().is_empty());
        assert!(r.is_minimal());
    }

    #[test]
    fn a2_resolution() {
        let m = AlgebraModel::new(&a2(), 3);
        let r = minimal_resolution(&m, 3, 3).unwrap();
        assert_eq!(r.resolution(0).generators(1), &[Generator { vertex: 1, degree: 1 }]);
        assert!(r.resolution(0).generators(2).is_empty());
        assert!(r.resolution(1).generators(1).is_empty());
        assert_eq!(r.ext_totals(), vec![2, 1, 0, 0]);
        assert_eq!(r.ext_table(1), vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(r.betti(1, 1, 0, 1), 1);
    }

    #[test]
    fn bound_past_truncation_is_rejected() {
        let m = AlgebraModel::new(&exterior(2), 3);
        assert!(matches!(
            minimal_resolution(&m, 2, 4),
            Err(Error::DegreeOverflow { degree: 4, bound: 3 })
        ));
    }

    #[test]
    fn dual_numbers_ext_generator_squares_nonzero() {
        let m = AlgebraModel::new(&dual_numbers(), 5);
        let r = minimal_resolution(&m, 4, 5).unwrap();
        let u = &r.ext_basis(1, 1)[0];
        let mut power = u.clone();
        for k in 2..=4 {
            power = r.yoneda_product(&power, u).unwrap();
            assert_eq!((power.i, power.d), (k, k));
            assert!(!power.is_zero());
        }
    }

    #[test]
    fn loop_cubed_ext_generator_squares_to_zero() {
        let m = AlgebraModel::new(&loop_cubed(), 5);
        let r = minimal_resolution(&m, 3, 5).unwrap();
        let u = &r.ext_basis(1, 1)[0];
        let sq = r.yoneda_product(u, u).unwrap();
        assert!(sq.is_zero());
        assert_eq!(sq.d, 2);
        assert_eq!(r.ext_basis(2, 3).len(), 1);
    }

    #[test]
    fn identity_is_a_unit() {
        for p in [exterior(2), a2(), loop_cubed()] {
            let m = AlgebraModel::new(&p, 5);
            let r = minimal_resolution(&m, 3, 5).unwrap();
            let e = r.ext_identity();
            for i in 0..=3 {
                for d in 0..=4 {
                    for xi in r.ext_basis(i, d) {
                        assert_eq!(r.yoneda_product(&e, &xi).unwrap(), xi);
                        assert_eq!(r.yoneda_product(&xi, &e).unwrap(), xi);
                    }
                }
            }
        }
    }

    #[test]
    fn product_is_associative_and_bilinear() {
        let m = AlgebraModel::new(&exterior(2), 4);
        let r = minimal_resolution(&m, 3, 4).unwrap();
        let ext1 = r.ext_basis(1, 1);
        for a in &ext1 {
            for b in &ext1 {
                for c in &ext1 {
                    let left = r.yoneda_product(&r.yoneda_product(a, b).unwrap(), c).unwrap();
                    let right = r.yoneda_product(a, &r.yoneda_product(b, c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
        let (x, y) = (&ext1[0], &ext1[1]);
        let mut sum = x.scaled(&int(3));
        sum.add_scaled(&int(-2), y);
        let mut expected = r.yoneda_product(x, x).unwrap().scaled(&int(3));
        expected.add_scaled(&int(-2), &r.yoneda_product(y, x).unwrap());
        assert_eq!(r.yoneda_product(&sum, x).unwrap(), expected);
        // Ext of the exterior algebra is commutative polynomial
        assert_eq!(r.yoneda_product(x, y).unwrap(), r.yoneda_product(y, x).unwrap());
    }

    #[test]
    fn product_bounds_are_enforced() {
        let m = AlgebraModel::new(&exterior(1), 3);
        let r = minimal_resolution(&m, 2, 3).unwrap();
        let u = &r.ext_basis(1, 1)[0];
        let u2 = r.yoneda_product(u, u).unwrap();
        assert!(matches!(r.yoneda_product(&u2, u), Err(Error::InsufficientBounds(_))));
    }

    #[test]
    fn two_vertex_cycle_with_zero_relations() {
        // 1 ⇄ 2 with both length-2 compositions zero
        let q = Quiver::from_strs(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let rels = vec![
            PathCombination::from_path(q.path_from_word(&["b", "a"]).unwrap()),
            PathCombination::from_path(q.path_from_word(&["a", "b"]).unwrap()),
        ];
        let p = Presentation::new(q, rels).unwrap();
        let m = AlgebraModel::new(&p, 5);
        let r = minimal_resolution(&m, 4, 5).unwrap();
        for u in 0..2 {
            for i in 0..=4 {
                assert_eq!(degrees(&r, u, i), vec![i]);
                // generator type alternates along the cycle
                assert_eq!(r.resolution(u).generators(i)[0].vertex, (u + i) % 2);
            }
        }
        let a = &r.ext_basis(1, 1);
        assert_eq!(a.len(), 2);
        let ab = r.yoneda_product(&a[0], &a[1]).unwrap();
        let ba = r.yoneda_product(&a[1], &a[0]).unwrap();
        assert!(!ab.is_zero() && !ba.is_zero());
        assert!(r.yoneda_product(&a[0], &a[0]).unwrap().is_zero());
    }
}
