//! Inductive construction: `X_0` is a point and `X_{n+1}` attaches a fresh
//! cone `v(A) * A` to `X_n` for every subcomplex `A ⊆ X_n`, the empty one
//! included.
//!
//! Apex labels are consecutive naturals, handed out in lexicographic order of
//! the sorted facet lists of the bases (the empty base first). The number of
//! subcomplexes explodes after two levels (`X_2` already has 33 simplexes), so
//! a bounded variant only attaches cones over bases with at most `c` vertices.
//! That still certifies the extension property for every query whose base
//! has at most `c` vertices.

use std::collections::BTreeMap;

use serde_json::json;

use crate::complex::{Complex, DEFAULT_ENUMERATION_BOUND};
use crate::error::{Error, Result};
use crate::vertex::Vertex;

/// Cap on the number of cones attached in a single level.
pub const DEFAULT_SUBCOMPLEX_BUDGET: usize = 200_000;

#[derive(Debug, Clone)]
pub struct GrowthRecord {
    levels: Vec<Complex>,
    /// `apexes[n]` lists the cones attached to level `n`, in label order.
    apexes: Vec<Vec<(Complex, Vertex)>>,
    lookup: Vec<BTreeMap<Complex, Vertex>>,
    base_vertex_bound: Option<usize>,
}

/// Grows `levels` levels above the initial point.
pub fn grow(levels: usize, base_vertex_bound: Option<usize>) -> Result<GrowthRecord> {
    grow_with_budget(levels, base_vertex_bound, DEFAULT_SUBCOMPLEX_BUDGET)
}

pub fn grow_with_budget(levels: usize, base_vertex_bound: Option<usize>, budget: usize) -> Result<GrowthRecord> {
    let mut rec = GrowthRecord {
        levels: vec![Complex::of(&[&[1]])],
        apexes: Vec::new(),
        lookup: Vec::new(),
        base_vertex_bound,
    };
    let mut next_label: u64 = 2;
    for n in 0..levels {
        let current = &rec.levels[n];
        let mut bases = bases_of(current, base_vertex_bound, budget).map_err(|e| match e {
            Error::SizeLimit { what, actual, limit } => {
                Error::SizeLimit { what: format!("{what} at level {n}"), actual, limit }
            }
            other => other,
        })?;
        bases.sort_by_cached_key(|a| a.facets());
        let mut next = current.clone();
        let mut attached = Vec::with_capacity(bases.len());
        for base in bases {
            let apex = Vertex::from(next_label);
            next_label += 1;
            next = next.union(&Complex::cone(&apex, &base)?);
            attached.push((base, apex));
        }
        rec.lookup.push(attached.iter().cloned().collect());
        rec.apexes.push(attached);
        rec.levels.push(next);
    }
    Ok(rec)
}

fn bases_of(level: &Complex, bound: Option<usize>, budget: usize) -> Result<Vec<Complex>> {
    let mut out = Vec::new();
    let push = |a: Complex, out: &mut Vec<Complex>| -> Result<()> {
        out.push(a);
        if out.len() > budget {
            return Err(Error::size("subcomplex count", out.len(), budget));
        }
        Ok(())
    };
    match bound {
        None => {
            for a in level.subcomplexes()? {
                push(a, &mut out)?;
            }
        }
        Some(c) => {
            // each base is counted once, under its own vertex set W
            let vertices: Vec<Vertex> = level.vertices().iter().cloned().collect();
            for w in subsets_up_to(&vertices, c) {
                let window = level.induced(&w);
                for a in window.subcomplexes_bounded(DEFAULT_ENUMERATION_BOUND)? {
                    if a.vertices().len() == w.len() {
                        push(a, &mut out)?;
                    }
                }
            }
        }
    }
    Ok(out)
}

/// All subsets of `items` with at most `k` elements, smaller sets first.
pub(crate) fn subsets_up_to(items: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<(usize, Vec<Vertex>)> = vec![(0, Vec::new())];
    for _ in 0..k.min(items.len()) {
        let mut next = Vec::new();
        for (start, set) in &layer {
            for (i, item) in items.iter().enumerate().skip(*start) {
                let mut s = set.clone();
                s.push(item.clone());
                next.push((i + 1, s));
            }
        }
        out.extend(next.iter().map(|(_, s)| s.clone()));
        layer = next;
    }
    out
}

impl GrowthRecord {
    pub fn levels(&self) -> &[Complex] {
        &self.levels
    }

    pub fn level(&self, n: usize) -> Option<&Complex> {
        self.levels.get(n)
    }

    pub fn top(&self) -> &Complex {
        self.levels.last().expect("at least X_0")
    }

    pub fn base_vertex_bound(&self) -> Option<usize> {
        self.base_vertex_bound
    }

    /// Cones attached on top of level `n`, in apex-label order.
    pub fn apexes_over(&self, n: usize) -> &[(Complex, Vertex)] {
        self.apexes.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The apex `v(A)` attached over the subcomplex `a` of level `n`.
    pub fn witness_lookup(&self, n: usize, a: &Complex) -> Result<Vertex> {
        let table = self
            .lookup
            .get(n)
            .ok_or_else(|| Error::WitnessUnavailable(format!("no level above level {n} was grown")))?;
        if let Some(c) = self.base_vertex_bound {
            if a.vertices().len() > c {
                return Err(Error::WitnessUnavailable(format!(
                    "base has {} vertices, growth was bounded by {c}",
                    a.vertices().len()
                )));
            }
        }
        table
            .get(a)
            .cloned()
            .ok_or_else(|| Error::WitnessUnavailable(format!("{a:?} is not a subcomplex of level {n}")))
    }

    /// Sidecar mapping each base (as a facet list) to its apex label.
    pub fn witness_table_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .apexes
            .iter()
            .enumerate()
            .flat_map(|(n, cones)| {
                cones.iter().map(move |(base, apex)| {
                    let facets: Vec<Vec<String>> = base
                        .facets()
                        .iter()
                        .map(|f| f.vertices().iter().map(ToString::to_string).collect())
                        .collect();
                    json!({ "level": n, "base": facets, "apex": apex.to_string() })
                })
            })
            .collect();
        json!({ "format": "rado-witness-table/v1", "entries": rows })
    }
}
