//! Acceptance suite: one PASS/FAIL line per criterion. All comparisons are exact.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use qk_cli::{comparable_section, run_with};
use qk_core::corpus::{self, exterior, loop_cubed, preprojective, quiver_spec, trivial_extension_dual};
use qk_core::dual::{double_dual_check, dual_presentation, quadratic_check};
use qk_core::format::{parse_presentation, serialize_presentation};
use qk_core::koszul::{
    euler_characteristic, generation_check, hilbert_euler_check, is_koszul_to, koszul_duality_dim_check,
    theorem_covering_check, GenerationVerdict, KoszulVerdict,
};
use qk_core::resolution::minimal_resolution;
use qk_core::smash::{compare_smash_radical, skew_group_algebra, smash_product, verify_smash_covering_iso};
use qk_core::structure::StructureConstantAlgebra;
use qk_core::{cyclic_covering, AlgebraModel, Error, FiniteGroup, PolyMatrix, Presentation, WeightFunction};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn err(e: Error) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let (n, i_max) = (5, 5);
    for m in 1..=3 {
        let p = exterior(m).map_err(err)?;
        let model = AlgebraModel::new(&p, n);
        let dims: Vec<usize> = (0..=n).map(|d| binomial(m, d)).collect();
        ensure(model.dims_per_degree() == dims, || format!("exterior({m}) dims {:?}", model.dims_per_degree()))?;
        let r = minimal_resolution(&model, i_max, n).map_err(err)?;
        let verdict = is_koszul_to(&r);
        ensure(verdict == KoszulVerdict::KoszulToBound { i_max, d_max: n }, || format!("exterior({m}): {verdict}"))?;
        let totals: Vec<usize> = (0..=i_max).map(|i| binomial(m + i - 1, i)).collect();
        ensure(r.ext_totals() == totals, || format!("exterior({m}) Ext totals {:?}", r.ext_totals()))?;
        let generation = generation_check(&r);
        ensure(generation == GenerationVerdict::Pass { i_max }, || format!("exterior({m}): {generation}"))?;
    }
    Ok("m = 1, 2, 3; i_max = 5".into())
}

fn criterion_2() -> Outcome {
    let n = 5;
    for m in 1..=3 {
        let dual = dual_presentation(&exterior(m).map_err(err)?).map_err(err)?;
        let dims = AlgebraModel::new(&dual, n).dims_per_degree();
        let expected: Vec<usize> = (0..=n).map(|i| binomial(m + i - 1, i)).collect();
        ensure(dims == expected, || format!("dual of exterior({m}) dims {dims:?}"))?;
    }
    let mut count = 0;
    for (name, args) in corpus::sample_entries() {
        let entry = corpus::build(name, &args).map_err(err)?;
        if quadratic_check(&entry.presentation) {
            let ok = double_dual_check(&entry.presentation).map_err(err)?;
            ensure(ok, || format!("double dual differs for {}", entry.name))?;
            count += 1;
        }
    }
    Ok(format!("duals up to degree {n}; double dual on {count} quadratic entries"))
}

fn criterion_3() -> Outcome {
    let (n, i_max) = (4, 4);
    for (m, order) in [(2, 2), (2, 3), (2, 4), (3, 2)] {
        let p = exterior(m).map_err(err)?;
        let g = FiniteGroup::cyclic(order).map_err(err)?;
        let w = WeightFunction::constant(p.quiver(), 1);
        let report = theorem_covering_check(&p, &g, &w, i_max, n).map_err(err)?;
        ensure(report.cover_verdict.is_koszul_to_bound(), || {
            format!("exterior({m}) over Z{order}: {}", report.cover_verdict)
        })?;
        ensure(report.holds(), || format!("exterior({m}) over Z{order}: {report:?}"))?;
        let cover = cyclic_covering(&p, order).map_err(err)?;
        let dims = AlgebraModel::new(cover.presentation(), n).dims_per_degree();
        let expected: Vec<usize> = (0..=n).map(|d| order * binomial(m, d)).collect();
        ensure(dims == expected, || format!("exterior({m}) over Z{order}: cover dims {dims:?}"))?;
    }
    Ok("exterior(2) over Z2, Z3, Z4 and exterior(3) over Z2 at i_max = 4".into())
}

fn laws(a: &StructureConstantAlgebra, what: &str) -> Result<(), String> {
    a.check_laws().map_err(|v| format!("{what}: {v:?}"))
}

fn criterion_4() -> Outcome {
    let n = 4;
    for (m, order) in [(1, 2), (2, 2), (2, 3)] {
        let p = exterior(m).map_err(err)?;
        let g = FiniteGroup::cyclic(order).map_err(err)?;
        let w = WeightFunction::constant(p.quiver(), 1);
        let cover = cyclic_covering(&p, order).map_err(err)?;
        let base = AlgebraModel::new(&p, n);
        let cover_model = AlgebraModel::new(cover.presentation(), n);
        let smash = smash_product(&base, &g, &w).map_err(err)?;
        let iso = verify_smash_covering_iso(&cover, &cover_model, &base, &smash).map_err(err)?;
        ensure(iso.holds(), || format!("({m},{order}): {iso:?}"))?;
        laws(smash.algebra(), &format!("smash ({m},{order})"))?;
        let skew = skew_group_algebra(&cover_model, &cover.deck_action()).map_err(err)?;
        laws(&skew, &format!("skew group algebra ({m},{order})"))?;
        ensure(skew.dim() == cover_model.total_dim() * order, || format!("skew dim {}", skew.dim()))?;
    }
    Ok("(1,2), (2,2), (2,3)".into())
}

fn criterion_5() -> Outcome {
    for (m, order) in [(1, 2), (2, 3)] {
        let p = exterior(m).map_err(err)?;
        let g = FiniteGroup::cyclic(order).map_err(err)?;
        let w = WeightFunction::constant(p.quiver(), 1);
        let base = AlgebraModel::new(&p, 3);
        let smash = smash_product(&base, &g, &w).map_err(err)?;
        let c = compare_smash_radical(&smash);
        let j = base.total_dim() - base.total_dim_in_degree(0);
        ensure(c.radical_dim == j * order, || format!("({m},{order}): radical dim {}", c.radical_dim))?;
        ensure(c.holds(), || format!("({m},{order}): {c:?}"))?;
    }
    Ok("exterior(1)/Z2 and exterior(2)/Z3".into())
}

fn criterion_6() -> Outcome {
    let p = loop_cubed();
    let model = AlgebraModel::new(&p, 6);
    let r = minimal_resolution(&model, 4, 6).map_err(err)?;
    let verdict = is_koszul_to(&r);
    ensure(verdict == KoszulVerdict::FailsAt { i: 2, d: 3 }, || verdict.to_string())?;
    let generation = generation_check(&r);
    let expected = GenerationVerdict::FailsAt {
        i: 1,
        achieved: 0,
        required: 1,
    };
    ensure(generation == expected, || generation.to_string())?;
    let g = FiniteGroup::cyclic(2).map_err(err)?;
    let report = theorem_covering_check(&p, &g, &WeightFunction::constant(p.quiver(), 1), 4, 6).map_err(err)?;
    ensure(report.cover_verdict.failure().map(|f| f.0) == Some(2), || report.cover_verdict.to_string())?;
    ensure(report.holds(), || format!("{report:?}"))?;
    Ok(format!("{verdict}; covering {}", report.cover_verdict))
}

fn criterion_7() -> Outcome {
    let (n, i_max) = (4, 4);
    let star = quiver_spec("star:4").map_err(err)?;
    let p = trivial_extension_dual(&star).map_err(err)?;
    let model = AlgebraModel::new(&p, n);
    ensure(model.dims_per_degree() == vec![5, 8, 5, 0, 0], || format!("dims {:?}", model.dims_per_degree()))?;
    let r = minimal_resolution(&model, i_max, n).map_err(err)?;
    let verdict = is_koszul_to(&r);
    ensure(verdict.is_koszul_to_bound(), || verdict.to_string())?;
    let pre = AlgebraModel::new(&preprojective(&star).map_err(err)?, i_max);
    let duality = koszul_duality_dim_check(&model, &pre, &r).map_err(err)?;
    ensure(duality.holds(), || format!("{duality:?}"))?;
    let g = FiniteGroup::cyclic(2).map_err(err)?;
    let report = theorem_covering_check(&p, &g, &WeightFunction::constant(p.quiver(), 1), i_max, n).map_err(err)?;
    ensure(report.cover_verdict.is_koszul_to_bound() && report.holds(), || format!("{report:?}"))?;
    Ok(format!("Ext totals {:?}, covering {:?}", duality.ext_totals, report.cover_ext_totals))
}

fn criterion_8() -> Outcome {
    let cutoff = 5;
    let mut count = 0;
    for (name, args) in corpus::sample_entries() {
        let entry = corpus::build(name, &args).map_err(err)?;
        let model = AlgebraModel::new(&entry.presentation, cutoff);
        let r = minimal_resolution(&model, cutoff, cutoff).map_err(err)?;
        let check = hilbert_euler_check(&model, &r, cutoff).map_err(err)?;
        ensure(check.holds(), || format!("{}: {:?}", entry.name, check.mismatch))?;
        count += 1;
    }
    // A2: (I − tE₁₂)·[[1,t],[0,1]] = I
    let a2 = Presentation::path_algebra(quiver_spec("path:2").map_err(err)?);
    let model = AlgebraModel::new(&a2, cutoff);
    let r = minimal_resolution(&model, cutoff, cutoff).map_err(err)?;
    let chi = euler_characteristic(&r, cutoff);
    ensure(chi == PolyMatrix::from_entries(2, cutoff, &[(0, 0, 0, 1), (1, 1, 0, 1), (0, 1, 1, -1)]), || {
        format!("A2 Euler characteristic {chi:?}")
    })?;
    let hilbert = model.hilbert_matrix().matrix().clone();
    ensure(hilbert == PolyMatrix::from_entries(2, cutoff, &[(0, 0, 0, 1), (1, 1, 0, 1), (0, 1, 1, 1)]), || {
        format!("A2 Hilbert matrix {hilbert:?}")
    })?;
    ensure(chi.mul(&hilbert) == PolyMatrix::identity(2, cutoff), || "A2 product is not I".into())?;
    Ok(format!("{count} corpus algebras and A2, cutoff {cutoff}"))
}

fn criterion_9() -> Outcome {
    for (m, n) in [(1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let e = corpus::example1_equivalence(m, n).map_err(err)?;
        ensure(e.holds(), || format!("example1({m},{n}): {:?}", e.mismatch))?;
    }
    for (m, l, n) in [(2, 1, 2), (2, 1, 3), (3, 1, 2), (3, 2, 3), (3, 1, 4), (3, 3, 2)] {
        let e = corpus::example2_equivalence(m, l, n).map_err(err)?;
        ensure(e.holds(), || format!("example2({m},{l},{n}): {:?}", e.mismatch))?;
    }
    for n in 2..=5 {
        let e = corpus::example3_equivalence(n).map_err(err)?;
        ensure(e.holds(), || format!("example3({n}): {:?}", e.mismatch))?;
    }
    let e = corpus::example4_equivalence().map_err(err)?;
    ensure(e.holds(), || format!("example4(2): {:?}", e.mismatch))?;
    for n in 3..=5 {
        match corpus::example4(n) {
            Err(Error::Inhomogeneous(report)) => {
                let factors: Vec<String> = report.inhomogeneous[0].terms.iter().map(|t| t.factors.join("·")).collect();
                ensure(factors.contains(&"s·c".to_string()) && factors.contains(&"c·s".to_string()), || {
                    format!("example4({n}) witness {report}")
                })?;
            }
            other => return Err(format!("example4({n}) was not rejected: {other:?}")),
        }
    }
    Ok("example1-4 match their coverings; dihedral n = 3..5 rejected".into())
}

fn cli(args: &[&str]) -> (i32, String) {
    let argv = std::iter::once("qk").chain(args.iter().copied());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).expect("utf-8 output"))
}

fn criterion_10() -> Outcome {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let mut runs = 0;
    for (k, (name, args)) in corpus::sample_entries().into_iter().enumerate() {
        let entry = corpus::build(name, &args).map_err(err)?;
        let text = serialize_presentation(&entry.presentation, entry.grading.as_ref());
        let (back, grading) = parse_presentation(&text).map_err(err)?;
        ensure(back == entry.presentation, || format!("{}: parse(serialize) differs", entry.name))?;
        ensure(serialize_presentation(&back, grading.as_ref()) == text, || format!("{}: text differs", entry.name))?;

        let file = dir.path().join(format!("{k}.json"));
        std::fs::write(&file, &text).map_err(|e| e.to_string())?;
        let path = file.to_str().expect("utf-8 path");
        let mut build = vec!["corpus", "build", name];
        build.extend(args.iter().copied());
        let mut commands = vec![
            build,
            vec!["analyze", path, "--max-degree", "3", "--max-homological", "3"],
            vec!["verify", path, "--check", "koszul", "--max-degree", "3", "--max-homological", "3"],
            vec!["verify", path, "--check", "hilbert-euler", "--max-degree", "3", "--max-homological", "3"],
            vec!["cover", path, "--group", "cyclic:2"],
        ];
        if quadratic_check(&entry.presentation) {
            commands.push(vec!["dual", path]);
        }
        for argv in commands {
            let (a, b) = (cli(&argv), cli(&argv));
            ensure(a.0 == b.0, || format!("{argv:?}: exit codes {} vs {}", a.0, b.0))?;
            let (a, b) = if a.1.contains("\"timing\"") {
                let section = |s: &str| comparable_section(s).map_err(|e| e.to_string());
                (section(&a.1)?, section(&b.1)?)
            } else {
                (a.1, b.1)
            };
            ensure(a == b, || format!("{argv:?}: output differs"))?;
            runs += 1;
        }
    }
    let (code, list) = cli(&["corpus", "list"]);
    ensure(code == 0 && cli(&["corpus", "list"]).1 == list, || "corpus list".into())?;
    Ok(format!("{runs} command pairs byte-identical; round trips on the full corpus"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("exterior algebras", criterion_1),
        ("quadratic duals", criterion_2),
        ("covering theorem", criterion_3),
        ("smash product is the covering", criterion_4),
        ("radical of the smash product", criterion_5),
        ("negative control", criterion_6),
        ("trivial extension dual of the 4-star", criterion_7),
        ("Hilbert-Euler identity", criterion_8),
        ("builder equivalence", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failures = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let seconds = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {title} ({detail}) [{seconds:.2}s]", k + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2}: FAIL  {title}: {detail} [{seconds:.2}s]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
