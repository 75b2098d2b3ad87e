//! Built-in algebras: exterior algebras, their Galois coverings written out
//! directly, preprojective algebras of trees and their quadratic duals, and a
//! few small controls.

use std::collections::BTreeSet;
use std::fs;

use log::warn;

use crate::algebra::Presentation;
use crate::covering::{build_covering, cyclic_covering, Covering};
use crate::error::{Error, Result};
use crate::format::{parse_document, Grading};
use crate::group::{FiniteGroup, GroupSpec, WeightFunction};
use crate::linalg::{int, Scalar};
use crate::quiver::{PathCombination, Quiver};

/// One catalogue line: name, arguments, description.
pub const CATALOGUE: &[(&str, &str, &str)] = &[
    ("exterior", "M", "exterior algebra on M loops"),
    ("example1", "M N", "Z_N covering of exterior(M), all arrows r → r+1"),
    ("example2", "M L N", "Z_N covering of exterior(M), arrows a_1..a_L forward, the rest backward"),
    ("example3", "N", "Z_2 × Z_N covering of exterior(2)"),
    ("example4", "N", "dihedral covering of exterior(2); only N = 2 is a covering"),
    ("preprojective", "TREE", "preprojective algebra of a tree"),
    ("trivial_extension_dual", "TREE", "quadratic dual of the preprojective algebra (source/sink tree)"),
    ("path_algebra", "QUIVER", "path algebra without relations"),
    ("radical_square_zero", "QUIVER", "all length-2 paths as relations"),
    ("loop_cubed", "", "K[x]/(x³), a non-Koszul control"),
];

/// A corpus presentation with an optional declared grading.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub presentation: Presentation,
    pub grading: Option<Grading>,
}

fn corpus_error(message: impl Into<String>) -> Error {
    Error::Corpus(message.into())
}

fn number(name: &str, args: &[&str], k: usize) -> Result<usize> {
    let text = args
        .get(k)
        .ok_or_else(|| corpus_error(format!("{name}: missing argument #{}", k + 1)))?;
    text.parse()
        .map_err(|_| corpus_error(format!("{name}: expected a number, found `{text}`")))
}

fn expect_args(name: &str, args: &[&str], count: usize) -> Result<()> {
    if args.len() != count {
        return Err(corpus_error(format!("{name}: expected {count} argument(s), found {}", args.len())));
    }
    Ok(())
}

/// Builds a corpus entry by name.
pub fn build(name: &str, args: &[&str]) -> Result<CorpusEntry> {
    let arity = CATALOGUE
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|(_, a, _)| a.split_whitespace().count())
        .ok_or_else(|| corpus_error(format!("unknown corpus entry `{name}`")))?;
    expect_args(name, args, arity)?;
    let mut grading = None;
    let presentation = match name {
        "exterior" => {
            let p = exterior(number(name, args, 0)?)?;
            let weights = p.quiver().arrows().iter().map(|a| (a.label.clone(), "1".to_string())).collect();
            grading = Some(Grading::new(GroupSpec::Cyclic(2), p.quiver(), &weights)?);
            p
        }
        "example1" => example1(number(name, args, 0)?, number(name, args, 1)?)?,
        "example2" => example2(number(name, args, 0)?, number(name, args, 1)?, number(name, args, 2)?)?,
        "example3" => example3(number(name, args, 0)?)?,
        "example4" => example4(number(name, args, 0)?)?,
        "preprojective" => preprojective(&quiver_spec(args[0])?)?,
        "trivial_extension_dual" => trivial_extension_dual(&quiver_spec(args[0])?)?,
        "path_algebra" => Presentation::path_algebra(quiver_spec(args[0])?),
        "radical_square_zero" => radical_square_zero(&quiver_spec(args[0])?),
        "loop_cubed" => loop_cubed(),
        _ => unreachable!("catalogue checked"),
    };
    let label = std::iter::once(name).chain(args.iter().copied()).collect::<Vec<_>>().join(" ");
    Ok(CorpusEntry {
        name: label,
        presentation,
        grading,
    })
}

/// `star:K` (leaves `1..K` pointing at centre `0`), `path:K` (alternating
/// orientation), `loops:K`, `cycle:K`, or the path of a presentation file
/// whose quiver is used.
pub fn quiver_spec(text: &str) -> Result<Quiver> {
    let parsed = text.split_once(':').and_then(|(kind, k)| Some((kind, k.parse::<usize>().ok()?)));
    match parsed {
        Some(("star", k)) => {
            let vertices: Vec<String> = (0..=k).map(|v| v.to_string()).collect();
            let arrows: Vec<_> = (1..=k).map(|i| (format!("a{i}"), i.to_string(), "0".to_string())).collect();
            Quiver::new(vertices, arrows)
        }
        Some(("path", k)) if k >= 1 => {
            let vertices: Vec<String> = (1..=k).map(|v| v.to_string()).collect();
            let arrows: Vec<_> = (1..k)
                .map(|i| {
                    let (from, to) = if i % 2 == 1 { (i, i + 1) } else { (i + 1, i) };
                    (format!("a{i}"), from.to_string(), to.to_string())
                })
                .collect();
            Quiver::new(vertices, arrows)
        }
        Some(("loops", k)) => {
            let arrows: Vec<_> = (1..=k).map(|i| (format!("x{i}"), "1".to_string(), "1".to_string())).collect();
            Quiver::new(["1"], arrows)
        }
        Some(("cycle", k)) if k >= 1 => {
            let vertices: Vec<String> = (1..=k).map(|v| v.to_string()).collect();
            let arrows: Vec<_> = (1..=k)
                .map(|i| (format!("a{i}"), i.to_string(), (i % k + 1).to_string()))
                .collect();
            Quiver::new(vertices, arrows)
        }
        _ => {
            let text_in = fs::read_to_string(text)
                .map_err(|e| corpus_error(format!("`{text}` is neither a quiver spec nor a readable file: {e}")))?;
            let (p, _) = parse_document(&text_in)?.to_presentation()?;
            Ok(p.quiver().clone())
        }
    }
}

fn relation(q: &Quiver, terms: &[(i64, &[usize])]) -> PathCombination {
    PathCombination::from_terms(
        terms
            .iter()
            .map(|(c, arrows)| (q.path_from_indices(arrows.to_vec()).expect("composable"), int(*c))),
    )
}

/// Relation from labelled terms; words are last-applied-first.
fn labelled(q: &Quiver, terms: &[(i64, [&str; 2])]) -> Result<PathCombination> {
    let mut r = PathCombination::new();
    for (c, word) in terms {
        r.add_term(q.path_from_word(word)?, int(*c));
    }
    Ok(r)
}

/// `a_i²` and `a_i a_j + a_j a_i` (`i < j`) on one vertex with `m` loops.
pub fn exterior(m: usize) -> Result<Presentation> {
    if m == 0 {
        return Err(corpus_error("exterior: needs m ≥ 1"));
    }
    let arrows: Vec<_> = (1..=m).map(|i| (format!("a{i}"), "1".to_string(), "1".to_string())).collect();
    let q = Quiver::new(["1"], arrows)?;
    let mut relations: Vec<PathCombination> = (0..m).map(|i| relation(&q, &[(1, &[i, i])])).collect();
    for i in 0..m {
        for j in i + 1..m {
            relations.push(relation(&q, &[(1, &[i, j]), (1, &[j, i])]));
        }
    }
    Presentation::new(q, relations)
}

pub fn loop_cubed() -> Presentation {
    let q = Quiver::from_strs(&["1"], &[("x", "1", "1")]).expect("one loop");
    let r = relation(&q, &[(1, &[0, 0, 0])]);
    Presentation::new(q, vec![r]).expect("valid relation")
}

fn check_cyclic_args(name: &str, m: usize, n: usize) -> Result<()> {
    if m == 0 || n < 2 {
        return Err(corpus_error(format!("{name}: needs m ≥ 1 and n ≥ 2")));
    }
    Ok(())
}

/// Vertices `r ∈ Z_n`, arrows `(a_i,r): r → r+1`.
pub fn example1(m: usize, n: usize) -> Result<Presentation> {
    example2(m, m, n).map_err(|e| match e {
        Error::Corpus(msg) => Error::Corpus(msg.replace("example2", "example1")),
        other => other,
    })
}

/// Arrows `(a_i,r): r → r+1` for `i ≤ l` and `(a_i,r): r+1 → r` for `i > l`.
pub fn example2(m: usize, l: usize, n: usize) -> Result<Presentation> {
    check_cyclic_args("example2", m, n)?;
    if l == 0 || l > m {
        return Err(corpus_error("example2: needs 1 ≤ l ≤ m"));
    }
    let vertices: Vec<String> = (0..n).map(|r| r.to_string()).collect();
    let name = |i: usize, r: usize| format!("(a{i},{})", r % n);
    let mut arrows = Vec::new();
    for i in 1..=m {
        for r in 0..n {
            let (from, to) = if i <= l { (r, r + 1) } else { (r + 1, r) };
            arrows.push((name(i, r), vertices[from % n].clone(), vertices[to % n].clone()));
        }
    }
    let q = Quiver::new(vertices.clone(), arrows)?;
    let mut rels = Vec::new();
    // r - 1 taken modulo n
    let prev = |r: usize| r + n - 1;
    for r in 0..n {
        for i in 1..=l {
            rels.push(labelled(&q, &[(1, [&name(i, r + 1), &name(i, r)])])?);
        }
        for i in l + 1..=m {
            rels.push(labelled(&q, &[(1, [&name(i, r), &name(i, r + 1)])])?);
        }
        for i in 1..=l {
            for j in i + 1..=l {
                rels.push(labelled(
                    &q,
                    &[(1, [&name(j, r + 1), &name(i, r)]), (1, [&name(i, r + 1), &name(j, r)])],
                )?);
            }
        }
        for i in l + 1..=m {
            for j in i + 1..=m {
                rels.push(labelled(
                    &q,
                    &[(1, [&name(j, r), &name(i, r + 1)]), (1, [&name(i, r), &name(j, r + 1)])],
                )?);
            }
        }
        for i in 1..=l {
            for j in l + 1..=m {
                rels.push(labelled(
                    &q,
                    &[(1, [&name(j, r), &name(i, r)]), (1, [&name(i, prev(r)), &name(j, prev(r))])],
                )?);
            }
        }
    }
    Presentation::new(q, rels)
}

fn two_sheet_vertices(n: usize) -> Vec<String> {
    (0..n)
        .map(|r| format!("(1,{r})"))
        .chain((0..n).map(|r| format!("(1',{r})")))
        .collect()
}

/// `Z_2 × Z_n` covering of `exterior(2)` with sheets `(1,r)` and `(1',r)`.
pub fn example3(n: usize) -> Result<Presentation> {
    check_cyclic_args("example3", 2, n)?;
    let vertices = two_sheet_vertices(n);
    let arrow = |a: &str, r: usize| format!("({a},{})", r % n);
    let v = |primed: bool, r: usize| format!("(1{},{})", if primed { "'" } else { "" }, r % n);
    let mut arrows = Vec::new();
    for r in 0..n {
        arrows.push((arrow("a1", r), v(false, r), v(true, r)));
        arrows.push((arrow("a1'", r), v(true, r), v(false, r)));
        arrows.push((arrow("a2", r), v(false, r), v(false, r + 1)));
        arrows.push((arrow("a2'", r), v(true, r), v(true, r + 1)));
    }
    let q = Quiver::new(vertices, arrows)?;
    let mut rels = Vec::new();
    for r in 0..n {
        rels.push(labelled(&q, &[(1, [&arrow("a1'", r), &arrow("a1", r)])])?);
        rels.push(labelled(&q, &[(1, [&arrow("a1", r), &arrow("a1'", r)])])?);
        rels.push(labelled(&q, &[(1, [&arrow("a2", r + 1), &arrow("a2", r)])])?);
        rels.push(labelled(&q, &[(1, [&arrow("a2'", r + 1), &arrow("a2'", r)])])?);
        rels.push(labelled(
            &q,
            &[(1, [&arrow("a1", r + 1), &arrow("a2", r)]), (1, [&arrow("a2'", r), &arrow("a1", r)])],
        )?);
        rels.push(labelled(
            &q,
            &[(1, [&arrow("a1'", r + 1), &arrow("a2'", r)]), (1, [&arrow("a2", r), &arrow("a1'", r)])],
        )?);
    }
    Presentation::new(q, rels)
}

/// Weights `a1 = s`, `a2 = c` into the dihedral group of order `2n`.
pub fn example4_weights(n: usize) -> Result<(FiniteGroup, WeightFunction)> {
    let group = FiniteGroup::dihedral(n)?;
    let base = exterior(2)?;
    let weights = WeightFunction::parse("a1=s,a2=c", base.quiver(), &group)?;
    Ok((group, weights))
}

/// The dihedral covering of `exterior(2)`, written out for `n = 2`. For other
/// `n` the weights are not homogeneous and the homogeneity report is returned.
pub fn example4(n: usize) -> Result<Presentation> {
    if n != 2 {
        let (group, weights) = example4_weights(n)?;
        build_covering(&exterior(2)?, &group, &weights)?;
        return Err(corpus_error(format!("example4: n = {n} is not supported")));
    }
    let vertices = two_sheet_vertices(n);
    let arrow = |a: &str, r: usize| format!("({a},{})", r % n);
    let v = |primed: bool, r: usize| format!("(1{},{})", if primed { "'" } else { "" }, r % n);
    let mut arrows = Vec::new();
    for r in 0..n {
        arrows.push((arrow("a1", r), v(false, r), v(true, r)));
        arrows.push((arrow("a1'", r), v(true, r), v(false, r)));
        arrows.push((arrow("a2", r), v(false, r), v(false, r + 1)));
        arrows.push((arrow("a2'", r), v(true, r + 1), v(true, r)));
    }
    let q = Quiver::new(vertices, arrows)?;
    let prev = |r: usize| r + n - 1;
    let mut rels = Vec::new();
    for r in 0..n {
        rels.push(labelled(&q, &[(1, [&arrow("a1'", r), &arrow("a1", r)])])?);
        rels.push(labelled(&q, &[(1, [&arrow("a1", r), &arrow("a1'", r)])])?);
        rels.push(labelled(&q, &[(1, [&arrow("a2", r + 1), &arrow("a2", r)])])?);
        rels.push(labelled(&q, &[(1, [&arrow("a2'", prev(prev(r))), &arrow("a2'", prev(r))])])?);
        rels.push(labelled(
            &q,
            &[(1, [&arrow("a1", r + 1), &arrow("a2", r)]), (1, [&arrow("a2'", prev(r)), &arrow("a1", r)])],
        )?);
        rels.push(labelled(
            &q,
            &[(1, [&arrow("a1'", prev(r)), &arrow("a2'", prev(r))]), (1, [&arrow("a2", r), &arrow("a1'", r)])],
        )?);
    }
    Presentation::new(q, rels)
}

fn underlying_is_tree(q: &Quiver) -> bool {
    let n = q.num_vertices();
    if n == 0 || q.num_arrows() + 1 != n {
        return false;
    }
    is_connected(q)
}

fn is_connected(q: &Quiver) -> bool {
    let n = q.num_vertices();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for a in q.arrows() {
            let other = if a.source == v {
                a.target
            } else if a.target == v {
                a.source
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                stack.push(other);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn has_oriented_cycle(q: &Quiver) -> bool {
    // Kahn's algorithm
    let n = q.num_vertices();
    let mut indegree = vec![0usize; n];
    for a in q.arrows() {
        indegree[a.target] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut removed = 0;
    while let Some(v) = ready.pop() {
        removed += 1;
        for a in q.arrows_from(v) {
            let t = q.arrow(a).target;
            indegree[t] -= 1;
            if indegree[t] == 0 {
                ready.push(t);
            }
        }
    }
    removed < n
}

/// Dynkin type of a tree's underlying graph, if any (`A_n`, `D_n`, `E_6..8`).
pub fn dynkin_type(q: &Quiver) -> Option<String> {
    if !underlying_is_tree(q) {
        return None;
    }
    let n = q.num_vertices();
    let mut neighbours = vec![Vec::new(); n];
    for a in q.arrows() {
        neighbours[a.source].push(a.target);
        neighbours[a.target].push(a.source);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| neighbours[v].len() >= 3).collect();
    match branch.as_slice() {
        [] => Some(format!("A{n}")),
        [b] if neighbours[*b].len() == 3 => {
            // arm lengths counted in vertices, excluding the branch point
            let mut arms: Vec<usize> = neighbours[*b]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    while let Some(&next) = neighbours[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(format!("D{n}")),
                [1, 2, 2..=4] => Some(format!("E{n}")),
                _ => None,
            }
        }
        _ => None,
    }
}

fn warn_if_dynkin(q: &Quiver, builder: &str) {
    if let Some(kind) = dynkin_type(q) {
        if kind != "A1" && kind != "A2" {
            warn!(
                "{builder}: the tree is of Dynkin type {kind}; only A1, A2 and non-Dynkin trees give \
                 Koszul preprojective algebras"
            );
        }
    }
}

/// Double quiver with `Σ_{t(a)=v} a a* − Σ_{i(a)=v} a* a` at every vertex `v`.
pub fn preprojective(q: &Quiver) -> Result<Presentation> {
    if q.num_vertices() == 0 || !is_connected(q) {
        return Err(corpus_error("preprojective: the quiver must be connected"));
    }
    if has_oriented_cycle(q) {
        return Err(corpus_error("preprojective: the quiver must not have oriented cycles"));
    }
    warn_if_dynkin(q, "preprojective");
    let double = q.double();
    let star = |a: usize| q.num_arrows() + a;
    let mut rels = Vec::new();
    for v in 0..q.num_vertices() {
        let mut r = PathCombination::new();
        for a in q.arrows_to(v) {
            r.add_term(double.path_from_indices(vec![a, star(a)]).expect("loop at t(a)"), int(1));
        }
        for a in q.arrows_from(v) {
            r.add_term(double.path_from_indices(vec![star(a), a]).expect("loop at i(a)"), int(-1));
        }
        if !r.is_zero() {
            rels.push(r);
        }
    }
    Presentation::new(double, rels)
}

/// Double quiver of a tree in which every vertex is a source or a sink, with
/// relations (1) `a*a − b*b` at a common source, (2) `aa* − bb*` at a common
/// sink, (3) `b*a` for `t(a) = t(b)`, (4) `ab*` for `i(a) = i(b)`, `a ≠ b`.
pub fn trivial_extension_dual(q: &Quiver) -> Result<Presentation> {
    if !underlying_is_tree(q) {
        return Err(corpus_error("trivial_extension_dual: the underlying graph must be a tree"));
    }
    for v in 0..q.num_vertices() {
        if q.arrows_from(v).next().is_some() && q.arrows_to(v).next().is_some() {
            return Err(corpus_error(format!(
                "trivial_extension_dual: vertex `{}` is neither a source nor a sink",
                q.vertex_label(v)
            )));
        }
    }
    warn_if_dynkin(q, "trivial_extension_dual");
    let double = q.double();
    let star = |a: usize| q.num_arrows() + a;
    let path = |arrows: Vec<usize>| double.path_from_indices(arrows).expect("composable");
    let one = int(1);
    let minus = -Scalar::from(one.clone());
    let mut rels = Vec::new();
    let same_source = |a: usize, b: usize| q.arrow(a).source == q.arrow(b).source;
    let same_target = |a: usize, b: usize| q.arrow(a).target == q.arrow(b).target;
    let k = q.num_arrows();
    for a in 0..k {
        for b in a + 1..k {
            if same_source(a, b) {
                rels.push(PathCombination::from_terms([
                    (path(vec![star(a), a]), one.clone()),
                    (path(vec![star(b), b]), minus.clone()),
                ]));
            }
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            if same_target(a, b) {
                rels.push(PathCombination::from_terms([
                    (path(vec![a, star(a)]), one.clone()),
                    (path(vec![b, star(b)]), minus.clone()),
                ]));
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            if a != b && same_target(a, b) {
                rels.push(PathCombination::from_path(path(vec![star(b), a])));
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            if a != b && same_source(a, b) {
                rels.push(PathCombination::from_path(path(vec![a, star(b)])));
            }
        }
    }
    Presentation::new(double, rels)
}

/// Every path of length 2 is a relation.
pub fn radical_square_zero(q: &Quiver) -> Presentation {
    let rels = q
        .enumerate_paths(2, None, None)
        .into_iter()
        .map(PathCombination::from_path)
        .collect();
    Presentation::new(q.clone(), rels).expect("monomial relations")
}

/// Outcome of comparing a direct builder with a generated covering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equivalence {
    pub mismatch: Option<String>,
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares `direct` with `cover` after renaming the covering's vertex `(v,g)`
/// and arrow `(a,g)` through the given maps. Relations are compared as sets.
pub fn compare_with_covering<V, A>(direct: &Presentation, cover: &Covering, vertex_name: V, arrow_name: A) -> Equivalence
where
    V: Fn(usize, usize) -> String,
    A: Fn(usize, usize) -> String,
{
    let mismatch = |m: String| Equivalence { mismatch: Some(m) };
    let (dq, cq) = (direct.quiver(), cover.presentation().quiver());
    if dq.num_vertices() != cq.num_vertices() || dq.num_arrows() != cq.num_arrows() {
        return mismatch(format!(
            "quiver sizes differ: {} vertices, {} arrows vs {} vertices, {} arrows",
            dq.num_vertices(),
            dq.num_arrows(),
            cq.num_vertices(),
            cq.num_arrows()
        ));
    }
    let mut vertex_map = Vec::with_capacity(cq.num_vertices());
    for x in 0..cq.num_vertices() {
        let (v, g) = cover.vertex_projection(x);
        match dq.vertex_index(&vertex_name(v, g)) {
            Ok(i) => vertex_map.push(i),
            Err(_) => return mismatch(format!("no vertex `{}` for `{}`", vertex_name(v, g), cq.vertex_label(x))),
        }
    }
    let mut arrow_map = Vec::with_capacity(cq.num_arrows());
    for x in 0..cq.num_arrows() {
        let (a, g) = cover.arrow_projection(x);
        let label = arrow_name(a, g);
        let Ok(i) = dq.arrow_index(&label) else {
            return mismatch(format!("no arrow `{label}` for `{}`", cq.arrow(x).label));
        };
        let (ca, da) = (cq.arrow(x), dq.arrow(i));
        if (vertex_map[ca.source], vertex_map[ca.target]) != (da.source, da.target) {
            return mismatch(format!("arrow `{label}` has different endpoints than `{}`", ca.label));
        }
        arrow_map.push(i);
    }
    if arrow_map.iter().collect::<BTreeSet<_>>().len() != arrow_map.len() {
        return mismatch("arrow renaming is not injective".into());
    }
    let renamed: BTreeSet<PathCombination> = cover
        .presentation()
        .relations()
        .iter()
        .map(|r| {
            r.map_paths(|p| {
                let arrows = p.arrows().iter().map(|&a| arrow_map[a]).collect();
                dq.path_from_indices(arrows)
            })
        })
        .collect();
    let direct_set: BTreeSet<PathCombination> = direct.relations().iter().cloned().collect();
    if let Some(r) = renamed.difference(&direct_set).next() {
        return mismatch(format!("covering relation {} missing from the direct builder", r.display(dq)));
    }
    if let Some(r) = direct_set.difference(&renamed).next() {
        return mismatch(format!("direct relation {} missing from the covering", r.display(dq)));
    }
    Equivalence { mismatch: None }
}

pub fn example1_equivalence(m: usize, n: usize) -> Result<Equivalence> {
    let cover = cyclic_covering(&exterior(m)?, n)?;
    Ok(compare_with_covering(
        &example1(m, n)?,
        &cover,
        |_, g| g.to_string(),
        |a, g| format!("(a{},{g})", a + 1),
    ))
}

/// Weights `+1` on `a_1..a_l` and `-1` on the rest.
pub fn example2_covering(m: usize, l: usize, n: usize) -> Result<Covering> {
    let group = FiniteGroup::cyclic(n)?;
    let weights = WeightFunction::new((0..m).map(|i| if i < l { 1 % n } else { n - 1 }).collect());
    build_covering(&exterior(m)?, &group, &weights)
}

pub fn example2_equivalence(m: usize, l: usize, n: usize) -> Result<Equivalence> {
    let cover = example2_covering(m, l, n)?;
    // a backward arrow (a_i, g) runs g → g-1, which the direct builder calls (a_i, g-1)
    Ok(compare_with_covering(
        &example2(m, l, n)?,
        &cover,
        |_, g| g.to_string(),
        |a, g| {
            let r = if a < l { g } else { (g + n - 1) % n };
            format!("(a{},{r})", a + 1)
        },
    ))
}

/// `Z_2 × Z_n` with `a1 = (1,0)`, `a2 = (0,1)`.
pub fn example3_covering(n: usize) -> Result<Covering> {
    let group = FiniteGroup::direct_product(&FiniteGroup::cyclic(2)?, &FiniteGroup::cyclic(n)?);
    let weights = WeightFunction::new(vec![n, 1]);
    build_covering(&exterior(2)?, &group, &weights)
}

pub fn example3_equivalence(n: usize) -> Result<Equivalence> {
    let cover = example3_covering(n)?;
    let prime = |s: usize| if s == 1 { "'" } else { "" };
    Ok(compare_with_covering(
        &example3(n)?,
        &cover,
        |_, g| format!("(1{},{})", prime(g / n), g % n),
        |a, g| format!("(a{}{},{})", a + 1, prime(g / n), g % n),
    ))
}

pub fn example4_equivalence() -> Result<Equivalence> {
    let n = 2;
    let (group, weights) = example4_weights(n)?;
    let cover = build_covering(&exterior(2)?, &group, &weights)?;
    // c^r is (1,r); s·c^r is (1',r); the primed a2 from s·c^{r+1} is (a2', r)
    Ok(compare_with_covering(
        &example4(n)?,
        &cover,
        |_, g| if g < n { format!("(1,{g})") } else { format!("(1',{})", g - n) },
        |a, g| match (a, g < n) {
            (0, true) => format!("(a1,{g})"),
            (0, false) => format!("(a1',{})", g - n),
            (_, true) => format!("(a2,{g})"),
            (_, false) => format!("(a2',{})", (g - n + n - 1) % n),
        },
    ))
}

/// Names of every corpus entry with concrete small arguments, for sweeps.
pub fn sample_entries() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("exterior", vec!["1"]),
        ("exterior", vec!["2"]),
        ("exterior", vec!["3"]),
        ("example1", vec!["2", "2"]),
        ("example1", vec!["2", "3"]),
        ("example2", vec!["2", "1", "3"]),
        ("example2", vec!["3", "2", "2"]),
        ("example3", vec!["2"]),
        ("example4", vec!["2"]),
        ("preprojective", vec!["path:2"]),
        ("preprojective", vec!["star:4"]),
        ("trivial_extension_dual", vec!["star:4"]),
        ("path_algebra", vec!["path:3"]),
        ("radical_square_zero", vec!["loops:2"]),
        ("loop_cubed", vec![]),
    ]
}
