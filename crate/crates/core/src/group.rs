//! Finite groups as multiplication tables, weight functions on arrows and
//! group actions on quivers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Presentation;
use crate::error::{Error, Result};
use crate::quiver::{Path, Quiver};

/// Recipe for one of the built-in groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "parameters", rename_all = "lowercase")]
pub enum GroupSpec {
    Cyclic(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
    Dihedral(usize),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            Self::Cyclic(n) => FiniteGroup::cyclic(*n),
            Self::Dihedral(n) => FiniteGroup::dihedral(*n),
            Self::Product(a, b) => Ok(FiniteGroup::direct_product(&a.build()?, &b.build()?)),
        }
    }

    /// Parses `cyclic:n | product:SPEC,SPEC | dihedral:n`.
    pub fn parse(text: &str) -> Result<Self> {
        let (spec, rest) = Self::parse_prefix(text.trim())?;
        if !rest.is_empty() {
            return Err(Error::InvalidGroup(format!("trailing input `{rest}` in `{text}`")));
        }
        Ok(spec)
    }

    fn parse_prefix(text: &str) -> Result<(Self, &str)> {
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::InvalidGroup(format!("expected KIND:ARGS, found `{text}`")))?;
        match kind.trim() {
            "cyclic" => parse_number(rest).map(|(n, r)| (Self::Cyclic(n), r)),
            "dihedral" => parse_number(rest).map(|(n, r)| (Self::Dihedral(n), r)),
            "product" => {
                let (a, rest) = Self::parse_prefix(rest)?;
                let rest = rest
                    .strip_prefix(',')
                    .ok_or_else(|| Error::InvalidGroup("product needs two factors".into()))?;
                let (b, rest) = Self::parse_prefix(rest)?;
                Ok((Self::Product(Box::new(a), Box::new(b)), rest))
            }
            other => Err(Error::InvalidGroup(format!("unknown group kind `{other}`"))),
        }
    }
}

fn parse_number(rest: &str) -> Result<(usize, &str)> {
    let end = rest.find(',').unwrap_or(rest.len());
    let n = rest[..end]
        .trim()
        .parse()
        .map_err(|_| Error::InvalidGroup(format!("expected a number, found `{}`", &rest[..end])))?;
    Ok((n, &rest[end..]))
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic(n) => write!(f, "cyclic:{n}"),
            Self::Dihedral(n) => write!(f, "dihedral:{n}"),
            Self::Product(a, b) => write!(f, "product:{a},{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    /// `table[g * n + h] = g·h`
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    spec: Option<GroupSpec>,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(labels: Vec<String>, table: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty group".into()));
        }
        if table.len() != n * n || table.iter().any(|&x| x >= n) {
            return Err(Error::InvalidGroup("table is not closed".into()));
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul(e, g) == g && mul(g, e) == g))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for (g, label) in labels.iter().enumerate() {
            let h = (0..n)
                .find(|&h| mul(g, h) == identity && mul(h, g) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("`{label}` has no inverse")))?;
            inverse.push(h);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidGroup("table is not associative".into()));
                    }
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Self {
            labels,
            table,
            identity,
            inverse,
            spec: None,
        })
    }

    /// `Z_n` with elements `0, …, n-1`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidGroup("cyclic group needs n ≥ 1".into()));
        }
        let labels = (0..n).map(|k| k.to_string()).collect();
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        let mut g = Self::from_table(labels, table)?;
        g.spec = Some(GroupSpec::Cyclic(n));
        Ok(g)
    }

    /// `G × H` with elements `(g,h)`, `g` varying slowest.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, n) = (g.order(), h.order());
        let labels = (0..m)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| format!("({},{})", g.labels[a], h.labels[b]))
            .collect();
        let mut table = Vec::with_capacity(m * n * m * n);
        for x in 0..m * n {
            for y in 0..m * n {
                let (a, b) = (x / n, x % n);
                let (c, d) = (y / n, y % n);
                table.push(g.mul(a, c) * n + h.mul(b, d));
            }
        }
        let mut out = Self::from_table(labels, table).expect("product of groups");
        out.spec = match (&g.spec, &h.spec) {
            (Some(a), Some(b)) => Some(GroupSpec::Product(Box::new(a.clone()), Box::new(b.clone()))),
            _ => None,
        };
        out
    }

    /// Dihedral group of order `2n`: rotation `c` of order `n`, reflection
    /// `s` with `s·c·s = c⁻¹`. Elements are `c^k` (labelled `e`, `c`, `c^k`)
    /// followed by `s·c^k` (labelled `s`, `sc`, `sc^k`).
    pub fn dihedral(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGroup("dihedral group needs n ≥ 2".into()));
        }
        let rot = |k: usize| match k {
            0 => String::new(),
            1 => "c".to_string(),
            k => format!("c^{k}"),
        };
        let mut labels = Vec::with_capacity(2 * n);
        for k in 0..n {
            labels.push(if k == 0 { "e".to_string() } else { rot(k) });
        }
        for k in 0..n {
            labels.push(format!("s{}", rot(k)));
        }
        // index r*n + k represents s^r c^k; c^k s = s c^{-k}
        let mut table = Vec::with_capacity(4 * n * n);
        for x in 0..2 * n {
            for y in 0..2 * n {
                let (r1, k1) = (x / n, x % n);
                let (r2, k2) = (y / n, y % n);
                let k = (if r2 == 1 { n - k1 + k2 } else { k1 + k2 }) % n;
                table.push(((r1 + r2) % 2) * n + k);
            }
        }
        let mut g = Self::from_table(labels, table)?;
        g.spec = Some(GroupSpec::Dihedral(n));
        Ok(g)
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        spec.build()
    }

    pub fn spec(&self) -> Option<&GroupSpec> {
        self.spec.as_ref()
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A bijection `φ` with `φ(ab) = φ(a)φ(b)`, found by exhaustive search.
    /// Intended for the small groups used here.
    pub fn find_isomorphism(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        let n = self.order();
        if n != other.order() {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn search(g: &FiniteGroup, h: &FiniteGroup, k: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let n = g.order();
            if k == n {
                return (0..n).all(|a| (0..n).all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b])));
            }
            for cand in 0..n {
                if used[cand] {
                    continue;
                }
                map[k] = cand;
                // consistency with already-assigned products
                let ok = (0..=k).all(|a| {
                    (0..=k).all(|b| {
                        let ab = g.mul(a, b);
                        ab > k || map[ab] == h.mul(map[a], map[b])
                    })
                });
                if ok {
                    used[cand] = true;
                    if search(g, h, k + 1, map, used) {
                        return true;
                    }
                    used[cand] = false;
                }
            }
            map[k] = usize::MAX;
            false
        }
        search(self, other, 0, &mut map, &mut used).then_some(map)
    }

    /// Product of a sequence, left to right.
    pub fn product<I: IntoIterator<Item = usize>>(&self, elements: I) -> usize {
        elements.into_iter().fold(self.identity, |acc, g| self.mul(acc, g))
    }
}

/// Weight `W: Q_1 → G`, stored per arrow index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    weights: Vec<usize>,
}

fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

impl WeightFunction {
    pub fn new(weights: Vec<usize>) -> Self {
        Self { weights }
    }

    pub fn constant(q: &Quiver, g: usize) -> Self {
        Self::new(vec![g; q.num_arrows()])
    }

    /// From arrow label → element label; every arrow must be assigned.
    pub fn from_labels(q: &Quiver, g: &FiniteGroup, map: &BTreeMap<String, String>) -> Result<Self> {
        for a in map.keys() {
            q.arrow_index(a)?;
        }
        let weights = q
            .arrows()
            .iter()
            .map(|a| {
                let label = map.get(&a.label).ok_or_else(|| Error::MissingWeight(a.label.clone()))?;
                g.element(label)
            })
            .collect::<Result<_>>()?;
        Ok(Self { weights })
    }

    pub fn to_labels(&self, q: &Quiver, g: &FiniteGroup) -> BTreeMap<String, String> {
        q.arrows()
            .iter()
            .zip(&self.weights)
            .map(|(a, &w)| (a.label.clone(), g.label(w).to_string()))
            .collect()
    }

    /// Parses `a1=s,a2=c`. Commas inside parentheses belong to product labels.
    pub fn parse(text: &str, q: &Quiver, g: &FiniteGroup) -> Result<Self> {
        let mut map = BTreeMap::new();
        for item in split_top_level(text).into_iter().map(str::trim).filter(|s| !s.is_empty()) {
            let (a, w) = item.split_once('=').ok_or_else(|| Error::Parse {
                location: "--weights".into(),
                message: format!("expected ARROW=ELEMENT, found `{item}`"),
            })?;
            map.insert(a.trim().to_string(), w.trim().to_string());
        }
        Self::from_labels(q, g, &map)
    }

    pub fn get(&self, arrow: usize) -> usize {
        self.weights[arrow]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Weight of a path: `W(a_k)⋯W(a_1)` for `p = a_k⋯a_1`; trivial paths weigh `1`.
    pub fn path_weight(&self, g: &FiniteGroup, p: &Path) -> usize {
        g.product(p.arrows().iter().map(|&a| self.weights[a]))
    }
}

/// One term of an inhomogeneous relation, with its weight factorisation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermWeight {
    pub path: String,
    pub factors: Vec<String>,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InhomogeneousRelation {
    pub index: usize,
    pub terms: Vec<TermWeight>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomogeneityReport {
    pub inhomogeneous: Vec<InhomogeneousRelation>,
}

impl HomogeneityReport {
    pub fn is_homogeneous(&self) -> bool {
        self.inhomogeneous.is_empty()
    }
}

impl fmt::Display for HomogeneityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inhomogeneous.is_empty() {
            return write!(f, "all relations homogeneous");
        }
        let parts: Vec<String> = self
            .inhomogeneous
            .iter()
            .map(|r| {
                let terms: Vec<String> = r
                    .terms
                    .iter()
                    .map(|t| format!("{} has weight {} = {}", t.path, t.factors.join("·"), t.weight))
                    .collect();
                format!("relation #{}: {}", r.index, terms.join(" vs "))
            })
            .collect();
        f.write_str(&parts.join("; "))
    }
}

/// Checks that every relation has all its terms in one weight component.
pub fn is_homogeneous_grading(p: &Presentation, g: &FiniteGroup, w: &WeightFunction) -> HomogeneityReport {
    let q = p.quiver();
    let mut report = HomogeneityReport::default();
    for (index, r) in p.relations().iter().enumerate() {
        let weights: Vec<(&Path, usize)> = r.terms().map(|(path, _)| (path, w.path_weight(g, path))).collect();
        if weights.windows(2).any(|pair| pair[0].1 != pair[1].1) {
            report.inhomogeneous.push(InhomogeneousRelation {
                index,
                terms: weights
                    .iter()
                    .map(|(path, wt)| TermWeight {
                        path: q.path_string(path),
                        factors: path.arrows().iter().map(|&a| g.label(w.get(a)).to_string()).collect(),
                        weight: g.label(*wt).to_string(),
                    })
                    .collect(),
            });
        }
    }
    report
}

/// Action of a group on a quiver by automorphisms.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: FiniteGroup,
    /// `vertex_maps[g][v] = g·v`
    vertex_maps: Vec<Vec<usize>>,
    arrow_maps: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Validates that each map is an automorphism, that the identity acts
    /// trivially and that `g·(h·x) = (gh)·x`.
    pub fn new(q: &Quiver, group: FiniteGroup, vertex_maps: Vec<Vec<usize>>, arrow_maps: Vec<Vec<usize>>) -> Result<Self> {
        let n = group.order();
        if vertex_maps.len() != n || arrow_maps.len() != n {
            return Err(Error::InvalidAction("one map per group element required".into()));
        }
        for g in 0..n {
            let vm = &vertex_maps[g];
            let am = &arrow_maps[g];
            if !is_permutation(vm, q.num_vertices()) || !is_permutation(am, q.num_arrows()) {
                return Err(Error::InvalidAction(format!("map of `{}` is not a bijection", group.label(g))));
            }
            for (a, arrow) in q.arrows().iter().enumerate() {
                let image = q.arrow(am[a]);
                if image.source != vm[arrow.source] || image.target != vm[arrow.target] {
                    return Err(Error::InvalidAction(format!(
                        "`{}` does not respect the endpoints of `{}`",
                        group.label(g),
                        arrow.label
                    )));
                }
            }
        }
        let e = group.identity();
        if vertex_maps[e].iter().enumerate().any(|(i, &j)| i != j) || arrow_maps[e].iter().enumerate().any(|(i, &j)| i != j) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for g in 0..n {
            for h in 0..n {
                let gh = group.mul(g, h);
                let law = |maps: &Vec<Vec<usize>>| (0..maps[0].len()).all(|x| maps[g][maps[h][x]] == maps[gh][x]);
                if !law(&vertex_maps) || !law(&arrow_maps) {
                    return Err(Error::InvalidAction(format!(
                        "action law fails for `{}`, `{}`",
                        group.label(g),
                        group.label(h)
                    )));
                }
            }
        }
        Ok(Self {
            group,
            vertex_maps,
            arrow_maps,
        })
    }

    /// The trivial action of `group` on `q`.
    pub fn trivial(q: &Quiver, group: FiniteGroup) -> Self {
        let n = group.order();
        Self {
            vertex_maps: vec![(0..q.num_vertices()).collect(); n],
            arrow_maps: vec![(0..q.num_arrows()).collect(); n],
            group,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn vertex(&self, g: usize, v: usize) -> usize {
        self.vertex_maps[g][v]
    }

    pub fn arrow(&self, g: usize, a: usize) -> usize {
        self.arrow_maps[g][a]
    }

    pub fn apply_path(&self, g: usize, p: &Path) -> Path {
        Path::from_parts(
            p.arrows().iter().map(|&a| self.arrow_maps[g][a]).collect(),
            self.vertex_maps[g][p.source()],
            self.vertex_maps[g][p.target()],
        )
    }
}

fn is_permutation(map: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    map.len() == n
        && map.iter().all(|&x| {
            if x >= n || seen[x] {
                return false;
            }
            seen[x] = true;
            true
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::exterior;

    #[test]
    fn constructors() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(z3.order(), 3);
        assert!(z3.is_abelian());
        assert!(FiniteGroup::cyclic(0).is_err());
        assert!(FiniteGroup::dihedral(1).is_err());

        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        let (s, c) = (d3.element("s").unwrap(), d3.element("c").unwrap());
        assert_ne!(d3.mul(s, c), d3.mul(c, s));
        assert_eq!(d3.product([s, c, s]), d3.inv(c));
        assert!(!d3.is_abelian());
    }

    #[test]
    fn dihedral_two_is_klein_four() {
        let d2 = FiniteGroup::dihedral(2).unwrap();
        let k4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(2).unwrap());
        let phi = d2.find_isomorphism(&k4).expect("isomorphic");
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(phi[d2.mul(a, b)], k4.mul(phi[a], phi[b]));
            }
        }
        assert!(FiniteGroup::cyclic(4).unwrap().find_isomorphism(&k4).is_none());
    }

    #[test]
    fn spec_grammar() {
        let spec = GroupSpec::parse("product:cyclic:2,dihedral:3").unwrap();
        assert_eq!(spec.build().unwrap().order(), 12);
        assert_eq!(spec.to_string(), "product:cyclic:2,dihedral:3");
        let nested = GroupSpec::parse("product:product:cyclic:2,cyclic:2,cyclic:3").unwrap();
        assert_eq!(nested.build().unwrap().order(), 12);
        assert!(GroupSpec::parse("cyclic:x").is_err());
        assert!(GroupSpec::parse("free:2").is_err());
        assert!(GroupSpec::parse("cyclic:2,").is_err());
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<GroupSpec>(&json).unwrap(), spec);
    }

    #[test]
    fn homogeneity_examples() {
        let p = exterior(2);
        let z5 = FiniteGroup::cyclic(5).unwrap();
        let w = WeightFunction::constant(p.quiver(), z5.element("1").unwrap());
        assert!(is_homogeneous_grading(&p, &z5, &w).is_homogeneous());

        let d3 = FiniteGroup::dihedral(3).unwrap();
        let w = WeightFunction::parse("a1=s,a2=c", p.quiver(), &d3).unwrap();
        let report = is_homogeneous_grading(&p, &d3, &w);
        assert_eq!(report.inhomogeneous.len(), 1);
        let bad = &report.inhomogeneous[0];
        assert_eq!(bad.index, 2);
        let factors: Vec<_> = bad.terms.iter().map(|t| t.factors.join("·")).collect();
        assert!(factors.contains(&"s·c".to_string()) && factors.contains(&"c·s".to_string()));
        assert!(report.to_string().contains("s·c"));

        // +1 / -1 weights in Z_n: abelian, so a_i a_j and a_j a_i agree.
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let p = exterior(3);
        let w = WeightFunction::parse("a1=1,a2=3,a3=3", p.quiver(), &z4).unwrap();
        assert!(is_homogeneous_grading(&p, &z4, &w).is_homogeneous());
    }

    #[test]
    fn missing_weight_is_reported() {
        let p = exterior(2);
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert!(matches!(
            WeightFunction::parse("a1=1", p.quiver(), &z2),
            Err(Error::MissingWeight(a)) if a == "a2"
        ));
        assert!(matches!(
            WeightFunction::parse("a1=1,a2=7", p.quiver(), &z2),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn action_validation() {
        let q = Quiver::from_strs(&["x", "y"], &[("a", "x", "y"), ("b", "y", "x")]).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let swap = GroupAction::new(&q, z2.clone(), vec![vec![0, 1], vec![1, 0]], vec![vec![0, 1], vec![1, 0]]);
        assert!(swap.is_ok());
        let bad = GroupAction::new(&q, z2, vec![vec![0, 1], vec![1, 0]], vec![vec![0, 1], vec![0, 1]]);
        assert!(matches!(bad, Err(Error::InvalidAction(_))));
    }
}
