//! Galois coverings of quivers with relations built from a weight function.
//!
//! For `W: Q_1 → G` the covering has vertices `(v, g)` and arrows
//! `(a, g): (i(a), g) → (t(a), W(a)·g)`; every relation is lifted once per
//! start sheet. `G` acts freely by right translation of sheets.

use log::warn;

use crate::algebra::Presentation;
use crate::error::{Error, Result};
use crate::group::{is_homogeneous_grading, FiniteGroup, GroupAction, WeightFunction};
use crate::quiver::{Path, PathCombination, Quiver};

#[derive(Clone, Debug)]
pub struct Covering {
    presentation: Presentation,
    base: Presentation,
    group: FiniteGroup,
    weights: WeightFunction,
}

impl Covering {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.weights
    }

    pub fn into_presentation(self) -> Presentation {
        self.presentation
    }

    fn order(&self) -> usize {
        self.group.order()
    }

    /// Index of vertex `(v, g)`.
    pub fn vertex(&self, v: usize, g: usize) -> usize {
        v * self.order() + g
    }

    /// Index of arrow `(a, g)`.
    pub fn arrow(&self, a: usize, g: usize) -> usize {
        a * self.order() + g
    }

    pub fn vertex_projection(&self, x: usize) -> (usize, usize) {
        (x / self.order(), x % self.order())
    }

    pub fn arrow_projection(&self, x: usize) -> (usize, usize) {
        (x / self.order(), x % self.order())
    }

    /// The unique lift of a base path starting on sheet `g`.
    pub fn lift_path(&self, p: &Path, g: usize) -> Path {
        if p.is_trivial() {
            return Path::trivial(self.vertex(p.source(), g));
        }
        let mut sheet = g;
        let mut lifted = Vec::with_capacity(p.len());
        for a in p.arrows_applied_order() {
            lifted.push(self.arrow(a, sheet));
            sheet = self.group.mul(self.weights.get(a), sheet);
        }
        lifted.reverse();
        self.presentation
            .quiver()
            .path_from_indices(lifted)
            .expect("lifts of paths are paths")
    }

    /// Base path and start sheet of a covering path.
    pub fn project_path(&self, p: &Path) -> (Path, usize) {
        let (v, g) = self.vertex_projection(p.source());
        if p.is_trivial() {
            return (Path::trivial(v), g);
        }
        let arrows: Vec<usize> = p.arrows().iter().map(|&x| self.arrow_projection(x).0).collect();
        let base = self.base.quiver().path_from_indices(arrows).expect("projection of a path");
        (base, g)
    }

    /// Right translation of sheets: `h·(v, g) = (v, g·h⁻¹)`.
    pub fn deck_action(&self) -> GroupAction {
        let n = self.order();
        let q = self.presentation.quiver();
        let vertex_maps = (0..n)
            .map(|h| {
                (0..q.num_vertices())
                    .map(|x| {
                        let (v, g) = self.vertex_projection(x);
                        self.vertex(v, self.group.mul(g, self.group.inv(h)))
                    })
                    .collect()
            })
            .collect();
        let arrow_maps = (0..n)
            .map(|h| {
                (0..q.num_arrows())
                    .map(|x| {
                        let (a, g) = self.arrow_projection(x);
                        self.arrow(a, self.group.mul(g, self.group.inv(h)))
                    })
                    .collect()
            })
            .collect();
        GroupAction::new(q, self.group.clone(), vertex_maps, arrow_maps).expect("deck action is an action")
    }

    /// Checks that the deck action is free and that its orbit quiver is the
    /// base quiver under the projection.
    pub fn orbit_quotient_is_base(&self) -> bool {
        let action = self.deck_action();
        let q = self.presentation.quiver();
        let base = self.base.quiver();
        let (quotient, vertex_orbit, arrow_orbit) = orbit_quiver(q, &action);
        if quotient.num_vertices() != base.num_vertices() || quotient.num_arrows() != base.num_arrows() {
            return false;
        }
        let n = self.order();
        let free = |orbits: &[usize], count: usize| (0..count).all(|o| orbits.iter().filter(|&&x| x == o).count() == n);
        if !free(&vertex_orbit, quotient.num_vertices()) || !free(&arrow_orbit, quotient.num_arrows()) {
            return false;
        }
        // orbit index → base index must be well defined and bijective
        let mut vmap = vec![None; quotient.num_vertices()];
        for (x, &o) in vertex_orbit.iter().enumerate() {
            let v = self.vertex_projection(x).0;
            match vmap[o] {
                None => vmap[o] = Some(v),
                Some(w) if w != v => return false,
                _ => {}
            }
        }
        let mut amap = vec![None; quotient.num_arrows()];
        for (x, &o) in arrow_orbit.iter().enumerate() {
            let a = self.arrow_projection(x).0;
            match amap[o] {
                None => amap[o] = Some(a),
                Some(b) if b != a => return false,
                _ => {}
            }
        }
        let mut seen_v = vec![false; base.num_vertices()];
        for v in vmap.iter().flatten() {
            seen_v[*v] = true;
        }
        let mut seen_a = vec![false; base.num_arrows()];
        for a in amap.iter().flatten() {
            seen_a[*a] = true;
        }
        if !seen_v.iter().all(|&b| b) || !seen_a.iter().all(|&b| b) {
            return false;
        }
        quotient.arrows().iter().enumerate().all(|(o, arrow)| {
            let b = base.arrow(amap[o].unwrap());
            vmap[arrow.source] == Some(b.source) && vmap[arrow.target] == Some(b.target)
        })
    }
}

/// Quotient of `q` by a group action: one vertex/arrow per orbit, labelled
/// by the orbit's first member. Returns the quiver and the orbit index of
/// every vertex and arrow.
pub fn orbit_quiver(q: &Quiver, action: &GroupAction) -> (Quiver, Vec<usize>, Vec<usize>) {
    let n = action.group().order();
    let orbits = |count: usize, apply: &dyn Fn(usize, usize) -> usize| {
        let mut orbit = vec![usize::MAX; count];
        let mut reps = Vec::new();
        for x in 0..count {
            if orbit[x] != usize::MAX {
                continue;
            }
            for g in 0..n {
                orbit[apply(g, x)] = reps.len();
            }
            reps.push(x);
        }
        (orbit, reps)
    };
    let (vertex_orbit, vreps) = orbits(q.num_vertices(), &|g, x| action.vertex(g, x));
    let (arrow_orbit, areps) = orbits(q.num_arrows(), &|g, x| action.arrow(g, x));
    let vertices: Vec<String> = vreps.iter().map(|&v| q.vertex_label(v).to_string()).collect();
    let arrows: Vec<(String, String, String)> = areps
        .iter()
        .map(|&a| {
            let arrow = q.arrow(a);
            (
                arrow.label.clone(),
                vertices[vertex_orbit[arrow.source]].clone(),
                vertices[vertex_orbit[arrow.target]].clone(),
            )
        })
        .collect();
    let quotient = Quiver::new(vertices, arrows).expect("orbit quiver");
    (quotient, vertex_orbit, arrow_orbit)
}

/// Covering of `p` for the grading `w` by `g`. Fails with the homogeneity
/// report when some relation has terms of different weights.
pub fn build_covering(p: &Presentation, g: &FiniteGroup, w: &WeightFunction) -> Result<Covering> {
    let q = p.quiver();
    if w.len() != q.num_arrows() {
        return Err(Error::MissingWeight(
            q.arrows().get(w.len()).map_or_else(String::new, |a| a.label.clone()),
        ));
    }
    let report = is_homogeneous_grading(p, g, w);
    if !report.is_homogeneous() {
        return Err(Error::Inhomogeneous(report));
    }
    let n = g.order();
    let vertices: Vec<String> = (0..q.num_vertices())
        .flat_map(|v| (0..n).map(move |h| (v, h)))
        .map(|(v, h)| format!("({},{})", q.vertex_label(v), g.label(h)))
        .collect();
    let arrows: Vec<(String, String, String)> = q
        .arrows()
        .iter()
        .enumerate()
        .flat_map(|(a, arrow)| (0..n).map(move |h| (a, arrow, h)))
        .map(|(a, arrow, h)| {
            let target_sheet = g.mul(w.get(a), h);
            (
                format!("({},{})", arrow.label, g.label(h)),
                vertices[arrow.source * n + h].clone(),
                vertices[arrow.target * n + target_sheet].clone(),
            )
        })
        .collect();
    let cover_quiver = Quiver::new(vertices, arrows)?;
    let mut covering = Covering {
        presentation: Presentation::path_algebra(cover_quiver.clone()),
        base: p.clone(),
        group: g.clone(),
        weights: w.clone(),
    };
    let mut relations = Vec::with_capacity(p.relations().len() * n);
    for r in p.relations() {
        for h in 0..n {
            relations.push(r.map_paths(|path| Some(covering.lift_path(path, h))));
        }
    }
    covering.presentation = Presentation::new(cover_quiver, relations)?;
    Ok(covering)
}

/// `Z_n` covering with every arrow of weight `1`. `n = 1` yields the
/// identity covering (with a warning); `n = 0` is rejected.
pub fn cyclic_covering(p: &Presentation, n: usize) -> Result<Covering> {
    if n == 0 {
        return Err(Error::InvalidGroup("cyclic covering needs n ≥ 1".into()));
    }
    if n == 1 {
        warn!("cyclic covering with n = 1 is the identity covering");
    }
    let g = FiniteGroup::cyclic(n)?;
    let generator = g.element(if n == 1 { "0" } else { "1" })?;
    build_covering(p, &g, &WeightFunction::constant(p.quiver(), generator))
}

/// Lifted relation `r` from sheet `g`, for callers comparing relation sets.
pub fn lift_relation(c: &Covering, r: &PathCombination, g: usize) -> PathCombination {
    r.map_paths(|p| Some(c.lift_path(p, g)))
}
