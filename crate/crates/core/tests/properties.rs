use proptest::prelude::*;

use qk_core::covering::cyclic_covering;
use qk_core::dual::{double_dual_check, dual_presentation, QuadraticData};
use qk_core::format::{parse_presentation, serialize_presentation};
use qk_core::koszul::{generation_check, hilbert_euler_check, is_koszul_to, koszul_duality_dim_check};
use qk_core::linalg::{int, kernel_basis, ratio, rref, Matrix, SparseVec};
use qk_core::resolution::minimal_resolution;
use qk_core::smash::{skew_group_algebra, smash_product};
use qk_core::structure::StructureConstantAlgebra;
use qk_core::{AlgebraModel, FiniteGroup, Path, PathCombination, Presentation, Quiver, WeightFunction};

fn matrix() -> impl Strategy<Value = Matrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-3i64..4, c), r).prop_map(|rows| Matrix::from_dense(&rows))
    })
}

/// Shape of a random presentation: vertex count, arrows as endpoint pairs,
/// and per relation a slice selector plus coefficients (numerator, denominator).
type Shape = (usize, Vec<(usize, usize)>, Vec<(usize, Vec<(i64, i64)>)>);

fn shape(max_arrows: usize) -> impl Strategy<Value = Shape> {
    (
        1usize..4,
        proptest::collection::vec((0usize..3, 0usize..3), 1..=max_arrows),
        proptest::collection::vec((0usize..16, proptest::collection::vec((-2i64..3, 1i64..3), 6)), 0..4),
    )
}

fn quiver_of(n: usize, arrows: &[(usize, usize)]) -> Quiver {
    let vertices: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
    let arrows: Vec<_> = arrows
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| (format!("x{k}"), vertices[s % n].clone(), vertices[t % n].clone()))
        .collect();
    Quiver::new(vertices, arrows).unwrap()
}

/// Quadratic relations: each picks a nonempty `(u,v)` slice of length-2 paths
/// and combines its paths with the given coefficients.
fn quadratic(s: &Shape) -> Presentation {
    let q = quiver_of(s.0, &s.1);
    let n = q.num_vertices();
    let slices: Vec<Vec<Path>> = (0..n * n)
        .map(|k| q.enumerate_paths(2, Some(k / n), Some(k % n)))
        .filter(|paths| !paths.is_empty())
        .collect();
    let mut relations = Vec::new();
    if !slices.is_empty() {
        for (pick, coefs) in &s.2 {
            let paths = &slices[pick % slices.len()];
            let r = PathCombination::from_terms(
                paths.iter().zip(coefs.iter().cycle()).map(|(p, &(a, b))| (p.clone(), ratio(a, b))),
            );
            if !r.is_zero() {
                relations.push(r);
            }
        }
    }
    Presentation::new(q, relations).unwrap()
}

/// The quadratic presentation plus every path of length 3, so `A_3 = 0`.
fn truncated(s: &Shape) -> Presentation {
    let p = quadratic(s);
    let q = p.quiver().clone();
    let mut relations = p.relations().to_vec();
    relations.extend(q.enumerate_paths(3, None, None).into_iter().map(PathCombination::from_path));
    Presentation::new(q, relations).unwrap()
}

fn reversed_arrows(p: &Presentation) -> Presentation {
    let q = p.quiver();
    let k = q.num_arrows();
    let arrows: Vec<_> = (0..k)
        .rev()
        .map(|a| {
            let arrow = q.arrow(a);
            (arrow.label.clone(), q.vertex_label(arrow.source).to_string(), q.vertex_label(arrow.target).to_string())
        })
        .collect();
    let r = Quiver::new(q.vertices().to_vec(), arrows).unwrap();
    let relations = p
        .relations()
        .iter()
        .map(|x| x.map_paths(|path| r.path_from_indices(path.arrows().iter().map(|&a| k - 1 - a).collect())))
        .collect();
    Presentation::new(r, relations).unwrap()
}

fn span_dim(vectors: &[SparseVec], len: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rref(&Matrix::from_rows(len, vectors.to_vec()).unwrap()).rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent_and_kernel_is_exact(m in matrix()) {
        let once = rref(&m);
        let again = rref(&once.reduced);
        prop_assert_eq!(&again.reduced, &once.reduced);
        let kernel = kernel_basis(&m);
        prop_assert_eq!(once.rank + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn double_then_forget_recovers_the_quiver(s in shape(4)) {
        let q = quiver_of(s.0, &s.1);
        let d = q.double();
        prop_assert_eq!(d.num_arrows(), 2 * q.num_arrows());
        let forgotten = Quiver::new(
            d.vertices().to_vec(),
            d.arrows().iter().filter(|a| !a.label.ends_with('*')).map(|a| {
                (a.label.clone(), d.vertex_label(a.source).to_string(), d.vertex_label(a.target).to_string())
            }),
        ).unwrap();
        prop_assert_eq!(forgotten, q);
    }

    #[test]
    fn relations_vanish_in_every_context(s in shape(4)) {
        let p = quadratic(&s);
        let q = p.quiver();
        let m = AlgebraModel::new(&p, 4);
        let mut context = Vec::new();
        for d in 0..2 {
            context.extend(q.enumerate_paths(d, None, None));
        }
        for r in p.relations() {
            for left in &context {
                for right in &context {
                    let moved = r.map_paths(|t| left.compose(t).and_then(|lt| lt.compose(right)));
                    if moved.is_zero() {
                        continue;
                    }
                    let nf = m.normal_form(&moved).unwrap();
                    prop_assert!(nf.values().all(SparseVec::is_zero));
                }
            }
        }
    }

    #[test]
    fn dims_do_not_depend_on_path_order(s in shape(4)) {
        let p = quadratic(&s);
        let a = AlgebraModel::new(&p, 4);
        let b = AlgebraModel::new(&reversed_arrows(&p), 4);
        prop_assert_eq!(a.hilbert_matrix(), b.hilbert_matrix());
    }

    #[test]
    fn quadratic_degree_two_count(s in shape(4)) {
        let p = quadratic(&s);
        let m = AlgebraModel::new(&p, 2);
        let data = QuadraticData::new(&p).unwrap();
        let n = p.num_vertices();
        for u in 0..n {
            for v in 0..n {
                let paths = m.num_paths(2, u, v);
                let rank = data.space(u, v).dim();
                prop_assert_eq!(m.dim(2, u, v), paths - rank);
                prop_assert_eq!(rank + data.complement(u, v).len(), paths);
            }
        }
        prop_assert!(double_dual_check(&p).unwrap());
    }

    #[test]
    fn multiplication_is_associative(s in shape(3)) {
        let m = AlgebraModel::new(&truncated(&s), 3);
        let a = StructureConstantAlgebra::from_model(&m).unwrap();
        prop_assert_eq!(a.check_laws(), Ok(()));
    }

    #[test]
    fn documents_round_trip(s in shape(4)) {
        let p = quadratic(&s);
        let text = serialize_presentation(&p, None);
        let (back, grading) = parse_presentation(&text).unwrap();
        prop_assert!(grading.is_none());
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(serialize_presentation(&back, None), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coverings_are_free_and_scale_dimensions(s in shape(3), n in 2usize..4) {
        let p = quadratic(&s);
        let cover = cyclic_covering(&p, n).unwrap();
        prop_assert!(cover.orbit_quotient_is_base());
        let (base, lifted) = (AlgebraModel::new(&p, 3), AlgebraModel::new(cover.presentation(), 3));
        let (hb, hc) = (base.hilbert_matrix(), lifted.hilbert_matrix());
        let (hb, hc) = (hb.matrix(), hc.matrix());
        for d in 0..=3 {
            for x in 0..cover.presentation().num_vertices() {
                let (v, _) = cover.vertex_projection(x);
                let column: i64 = (0..hc.size()).map(|y| hc.get(y, x, d)).sum();
                let expected: i64 = (0..hb.size()).map(|u| hb.get(u, v, d)).sum();
                prop_assert_eq!(column, expected);
            }
            prop_assert_eq!(lifted.total_dim_in_degree(d), n * base.total_dim_in_degree(d));
        }
    }

    #[test]
    fn smash_and_skew_algebras(s in shape(3), n in 2usize..4) {
        let p = truncated(&s);
        let base = AlgebraModel::new(&p, 3);
        let g = FiniteGroup::cyclic(n).unwrap();
        let w = WeightFunction::constant(p.quiver(), 1);
        let smash = smash_product(&base, &g, &w).unwrap();
        prop_assert_eq!(smash.algebra().dim(), base.total_dim() * n);
        prop_assert_eq!(smash.algebra().check_laws(), Ok(()));
        let cover = cyclic_covering(&p, n).unwrap();
        let cover_model = AlgebraModel::new(cover.presentation(), 3);
        let skew = skew_group_algebra(&cover_model, &cover.deck_action()).unwrap();
        prop_assert_eq!(skew.dim(), cover_model.total_dim() * n);
        prop_assert_eq!(skew.check_laws(), Ok(()));
    }

    #[test]
    fn radical_is_nilpotent_with_semisimple_quotient(s in shape(3)) {
        let a = StructureConstantAlgebra::from_model(&AlgebraModel::new(&truncated(&s), 3)).unwrap();
        let radical = a.radical();
        let mut power = radical.clone();
        for _ in 0..=a.dim() {
            if power.is_empty() {
                break;
            }
            let products: Vec<SparseVec> = power
                .iter()
                .flat_map(|x| radical.iter().map(move |y| (x, y)))
                .map(|(x, y)| a.mul(x, y))
                .filter(|v| !v.is_zero())
                .collect();
            power = if span_dim(&products, a.dim()) == 0 { Vec::new() } else { products };
        }
        prop_assert!(power.is_empty());
        prop_assert!(a.quotient(&radical).radical().is_empty());
    }

    #[test]
    fn resolutions_are_minimal_exact_and_consistent(s in shape(3)) {
        let p = quadratic(&s);
        let (n, i_max) = (3, 3);
        let m = AlgebraModel::new(&p, n);
        let r = minimal_resolution(&m, i_max, n).unwrap();
        prop_assert!(r.exactness_failures().is_empty());
        prop_assert!(r.is_minimal());
        prop_assert!(r.degrees_increase());
        prop_assert!(hilbert_euler_check(&m, &r, n).unwrap().holds());
        let verdict = is_koszul_to(&r);
        if verdict.is_koszul_to_bound() {
            prop_assert!(generation_check(&r).passes());
            let dual = AlgebraModel::new(&dual_presentation(&p).unwrap(), i_max);
            prop_assert!(koszul_duality_dim_check(&m, &dual, &r).unwrap().holds());
        }
    }

    #[test]
    fn yoneda_degrees_add(s in shape(3)) {
        let p = quadratic(&s);
        let m = AlgebraModel::new(&p, 3);
        let r = minimal_resolution(&m, 3, 3).unwrap();
        for zeta in (1..=3).flat_map(|d| r.ext_basis(1, d)) {
            for i in 0..=2 {
                for d in 0..=3 - zeta.d {
                    for xi in r.ext_basis(i, d) {
                        let product = r.yoneda_product(&xi, &zeta).unwrap();
                        prop_assert_eq!((product.i, product.d), (i + 1, d + zeta.d));
                    }
                }
            }
        }
        let one = r.ext_identity();
        for zeta in r.ext_basis(1, 1) {
            prop_assert_eq!(r.yoneda_product(&one, &zeta).unwrap().flatten(&r), zeta.flatten(&r));
        }
    }
}

#[test]
fn exact_arithmetic_has_no_tolerance() {
    let m = Matrix::from_dense(&[vec![1, 1], vec![1, 1]]);
    let k = kernel_basis(&m);
    assert_eq!(k.len(), 1);
    assert_eq!(m.mul_vec(&k[0]), SparseVec::new());
    assert_eq!(ratio(1, 3) + ratio(2, 3), int(1));
}
