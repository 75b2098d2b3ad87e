//! Report documents. Everything except `timing` is deterministic.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use qk_core::format::{to_canonical_json, Grading, FORMAT_VERSION};
use qk_core::group::is_homogeneous_grading;
use qk_core::koszul::{generation_check, hilbert_euler_check, is_koszul_to};
use qk_core::resolution::minimal_resolution;
use qk_core::{quadratic_check, AlgebraModel, PolyMatrix, Presentation, Result};

#[derive(Serialize)]
pub struct Timing {
    pub seconds: f64,
}

#[derive(Serialize)]
pub struct Envelope {
    pub format: u32,
    pub command: String,
    pub passed: bool,
    pub report: Value,
    pub timing: Timing,
}

impl Envelope {
    pub fn new(command: &str, passed: bool, report: Value, started: Instant) -> Self {
        Self {
            format: FORMAT_VERSION,
            command: command.to_string(),
            passed,
            report,
            timing: Timing {
                seconds: started.elapsed().as_secs_f64(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        to_canonical_json(self)
    }
}

/// The report with `timing` removed, for byte-level comparison.
pub fn comparable_section(text: &str) -> serde_json::Result<String> {
    let mut value: Value = serde_json::from_str(text)?;
    if let Some(map) = value.as_object_mut() {
        map.remove("timing");
    }
    Ok(to_canonical_json(&value))
}

fn poly_entries(m: &PolyMatrix, labels: &[String]) -> Vec<Value> {
    let mut entries = Vec::new();
    for (u, from) in labels.iter().enumerate() {
        for (v, to) in labels.iter().enumerate() {
            let series = m.entry(u, v);
            if series.iter().any(|&c| c != 0) {
                entries.push(json!({ "from": from, "to": to, "series": series }));
            }
        }
    }
    entries
}

pub fn analysis(p: &Presentation, grading: Option<&Grading>, n: usize, i_max: usize) -> Result<Value> {
    let m = AlgebraModel::new(p, n);
    let q = p.quiver();
    let labels = q.vertices().to_vec();
    let mut slices = Vec::new();
    for d in 0..=n {
        for u in 0..q.num_vertices() {
            for v in 0..q.num_vertices() {
                let dim = m.dim(d, u, v);
                if dim > 0 {
                    slices.push(json!({ "degree": d, "from": labels[u], "to": labels[v], "dim": dim }));
                }
            }
        }
    }
    let r = minimal_resolution(&m, i_max, n)?;
    let betti: Vec<Value> = (0..q.num_vertices())
        .map(|u| {
            let rows: Vec<Value> = (0..=r.resolution(u).length().min(i_max))
                .map(|i| json!({ "i": i, "entries": r.betti_entries(u, i) }))
                .collect();
            json!({ "simple": labels[u], "rows": rows })
        })
        .collect();
    let ext_tables: Vec<Vec<Vec<usize>>> = (0..=i_max).map(|i| r.ext_table(i)).collect();
    let cutoff = n.min(i_max);
    let euler = hilbert_euler_check(&m, &r, cutoff)?;
    let homogeneity = grading.map(|g| {
        let report = is_homogeneous_grading(p, &g.group, &g.weights);
        json!({ "group": g.spec.to_string(), "homogeneous": report.is_homogeneous(), "diagnostic": report })
    });
    Ok(json!({
        "bounds": { "max_degree": n, "max_homological": i_max },
        "vertices": labels,
        "quadratic": quadratic_check(p),
        "finite_dimensional": m.is_finite_dimensional(),
        "dims_per_degree": m.dims_per_degree(),
        "slices": slices,
        "hilbert_matrix": poly_entries(m.hilbert_matrix().matrix(), &labels),
        "koszul": is_koszul_to(&r),
        "generation": generation_check(&r),
        "betti": betti,
        "ext_totals": r.ext_totals(),
        "ext_tables": ext_tables,
        "checks": {
            "exact": r.exactness_failures().is_empty(),
            "minimal": r.is_minimal(),
            "hilbert_euler": euler,
        },
        "grading": homogeneity,
    }))
}
