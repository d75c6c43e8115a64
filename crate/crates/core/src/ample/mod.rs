//! Witness search and finite-window ampleness checks.
//!
//! A complex is ample when for every finite vertex set `U` and every
//! subcomplex `A ⊆ X_U` some vertex `v ∉ U` satisfies `Lk(v) ∩ X_U = A`.
//! Everything here inspects a finite complex, so a missing witness only means
//! that none was found among the available vertices.
//!
//! A candidate `v` has trace exactly `A` on `U` iff `σ ∪ {v} ∈ X` for every
//! `σ ∈ A` and `τ ∪ {v} ∉ X` for every external simplex `τ ∈ E(A|X_U)`. The
//! scans use that test, which rejects most candidates after a single lookup.

mod extension;

use std::collections::HashSet;

use serde_json::json;

pub use extension::{
    back_and_forth, back_and_forth_with, embed_complex, extend_by_cone, BackAndForth, Direction, PartialIsomorphism, StepFailure,
};

use crate::complex::{external_d, external_simplexes, Complex};
use crate::error::{Error, Result};
use crate::grow::subsets_up_to;
use crate::simplex::Simplex;
use crate::vertex::Vertex;
use crate::view::{sorted_unique, ComplexView};

/// Default vertex bound for [`has_induced_boundary`].
pub const DEFAULT_BOUNDARY_SCAN_BOUND: usize = 40;

/// A pair `(U, A)` asking for a vertex whose link meets `X_U` in `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessQuery {
    u: Vec<Vertex>,
    a: Complex,
}

impl WitnessQuery {
    pub fn new(u: impl IntoIterator<Item = Vertex>, a: Complex) -> Self {
        let u: Vec<Vertex> = u.into_iter().collect();
        WitnessQuery { u: sorted_unique(&u), a }
    }

    pub fn u(&self) -> &[Vertex] {
        &self.u
    }

    pub fn a(&self) -> &Complex {
        &self.a
    }

    /// Checks `A ⊆ X_U` and returns `X_U`.
    pub fn window<V: ComplexView + ?Sized>(&self, x: &V) -> Result<Complex> {
        let xu = x.induced_on(&self.u);
        if !self.a.is_subcomplex_of(&xu) {
            let stray = self.a.simplexes().iter().find(|s| !xu.contains(s)).expect("some simplex is missing");
            return Err(Error::NotSubcomplex(format!("{stray} is not a simplex of X_U")));
        }
        Ok(xu)
    }
}

/// The exact trace test for one `(U, A)`, prepared once and applied to many candidates.
struct TraceTest {
    required: Vec<Simplex>,
    forbidden: Vec<Simplex>,
}

impl TraceTest {
    fn new(a: &Complex, xu: &Complex) -> Result<Self> {
        let mut required: Vec<Simplex> = a.simplexes().iter().cloned().collect();
        let mut forbidden: Vec<Simplex> = external_simplexes(a, xu)?.into_iter().collect();
        required.sort_by_key(Simplex::len);
        forbidden.sort_by_key(Simplex::len);
        Ok(TraceTest { required, forbidden })
    }

    fn accepts<V: ComplexView + ?Sized>(&self, x: &V, v: &Vertex) -> bool {
        x.has_vertex(v)
            && self.forbidden.iter().all(|t| !x.contains(&t.with(v)))
            && self.required.iter().all(|s| x.contains(&s.with(v)))
    }
}

fn candidate_pool<V: ComplexView + ?Sized>(x: &V, u: &[Vertex], candidates: Option<&[Vertex]>) -> Vec<Vertex> {
    let pool = match candidates {
        Some(c) => sorted_unique(c).into_iter().filter(|v| x.has_vertex(v)).collect(),
        None => x.vertex_list(),
    };
    pool.into_iter().filter(|v| u.binary_search(v).is_err()).collect()
}

/// The smallest candidate `v ∉ U` with `Lk(v) ∩ X_U = A`. Candidates default to all of `V(X) \ U`.
pub fn find_witness<V: ComplexView + ?Sized>(
    x: &V,
    q: &WitnessQuery,
    candidates: Option<&[Vertex]>,
) -> Result<Option<Vertex>> {
    let test = TraceTest::new(&q.a, &q.window(x)?)?;
    Ok(candidate_pool(x, &q.u, candidates).into_iter().find(|v| test.accepts(x, v)))
}

/// Every vertex of `V(X) \ U` with `Lk(v) ∩ X_U = A`, ascending.
pub fn all_witnesses<V: ComplexView + ?Sized>(x: &V, q: &WitnessQuery) -> Result<Vec<Vertex>> {
    let test = TraceTest::new(&q.a, &q.window(x)?)?;
    Ok(candidate_pool(x, &q.u, None).into_iter().filter(|v| test.accepts(x, v)).collect())
}

/// Outcome of [`is_ample_window`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmpleReport {
    /// Number of `(U, A)` pairs examined.
    pub queries: usize,
    /// Pairs for which no vertex of the complex is a witness.
    pub failures: Vec<(Vec<Vertex>, Complex)>,
    /// Number of vertices of the complex, the candidate pool before removing `U`.
    pub pool_size: usize,
}

impl AmpleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let failures: Vec<serde_json::Value> = self
            .failures
            .iter()
            .map(|(u, a)| {
                json!({
                    "U": u.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "A": a.facets().iter().map(|f| f.vertices().iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "passed": self.passed(),
            "queries": self.queries,
            "failures": failures,
            "pool_size": self.pool_size,
        })
    }
}

/// Checks every `U ⊆ u_max` with `|U| <= cap` and every subcomplex `A` of `X_U`.
///
/// For each `U` the candidate vertices are scanned once; each link trace is
/// recorded and the subcomplexes never produced are the failures.
pub fn is_ample_window<V: ComplexView + ?Sized>(x: &V, u_max: &[Vertex], cap: usize) -> Result<AmpleReport> {
    let vertices = x.vertex_list();
    let u_max = sorted_unique(u_max);
    let mut report = AmpleReport { queries: 0, failures: Vec::new(), pool_size: vertices.len() };
    for u in subsets_up_to(&u_max, cap) {
        let xu = x.induced_on(&u);
        let wanted: Vec<Complex> = xu.subcomplexes()?.collect();
        report.queries += wanted.len();
        let mut seen: HashSet<Complex> = HashSet::new();
        for v in vertices.iter().filter(|v| u.binary_search(v).is_err()) {
            seen.insert(x.link_trace(v, &u));
            if seen.len() == wanted.len() {
                break;
            }
        }
        report.failures.extend(wanted.into_iter().filter(|a| !seen.contains(a)).map(|a| (u.clone(), a)));
    }
    Ok(report)
}

/// A vertex outside `adj ∪ nonadj` joined by an edge to every member of `adj`
/// and to no member of `nonadj`.
pub fn graph_extension_check<V: ComplexView + ?Sized>(
    x: &V,
    adj: &[Vertex],
    nonadj: &[Vertex],
) -> Result<Option<Vertex>> {
    let adj = sorted_unique(adj);
    let nonadj = sorted_unique(nonadj);
    if let Some(both) = adj.iter().find(|v| nonadj.binary_search(v).is_ok()) {
        return Err(Error::InvalidInput(format!("vertex {both} is listed as adjacent and as nonadjacent")));
    }
    if let Some(stray) = adj.iter().chain(&nonadj).find(|v| !x.has_vertex(v)) {
        return Err(Error::InvalidInput(format!("{stray} is not a vertex of the complex")));
    }
    let edge = |a: &Vertex, b: &Vertex| x.contains(&Simplex::from_unsorted(vec![a.clone(), b.clone()]).expect("two labels"));
    Ok(x.vertex_list().into_iter().find(|z| {
        adj.binary_search(z).is_err()
            && nonadj.binary_search(z).is_err()
            && adj.iter().all(|a| edge(a, z))
            && nonadj.iter().all(|b| !edge(b, z))
    }))
}

/// Some `d`-vertex set `W` whose induced complex is the boundary of the
/// simplex on `W`, or `None`. At most [`DEFAULT_BOUNDARY_SCAN_BOUND`] vertices.
pub fn has_induced_boundary<V: ComplexView + ?Sized>(x: &V, d: usize) -> Result<Option<Vec<Vertex>>> {
    has_induced_boundary_bounded(x, d, DEFAULT_BOUNDARY_SCAN_BOUND)
}

pub fn has_induced_boundary_bounded<V: ComplexView + ?Sized>(
    x: &V,
    d: usize,
    bound: usize,
) -> Result<Option<Vec<Vertex>>> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("d must be at least 2, got {d}")));
    }
    let vertices = x.vertex_list();
    if vertices.len() > bound {
        return Err(Error::size("vertex count for the boundary scan", vertices.len(), bound));
    }
    let mut chosen = Vec::with_capacity(d);
    Ok(boundary_search(x, d, &vertices, 0, &mut chosen).then_some(chosen))
}

// Depth-first over increasing vertex sets whose (d-1)-subsets are all present.
fn boundary_search<V: ComplexView + ?Sized>(
    x: &V,
    d: usize,
    vertices: &[Vertex],
    start: usize,
    chosen: &mut Vec<Vertex>,
) -> bool {
    for i in start..vertices.len() {
        chosen.push(vertices[i].clone());
        let s = Simplex::new(chosen.clone()).expect("increasing");
        let ok = if chosen.len() < d {
            x.contains(&s)
        } else {
            // the faces avoiding the new vertex were checked on the way down
            s.boundary().filter(|b| b.contains(&vertices[i])).all(|b| x.contains(&b)) && !x.contains(&s)
        };
        if ok && (chosen.len() == d || boundary_search(x, d, vertices, i + 1, chosen)) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Witness search for the `d`-ample variant.
///
/// The query must have no external simplex with `d - 1` vertices; otherwise
/// the error lists them. A witness must additionally leave `X_{U ∪ {v}}`
/// free of induced boundaries of `d`-vertex simplexes.
pub fn find_witness_d<V: ComplexView + ?Sized>(x: &V, q: &WitnessQuery, d: usize) -> Result<Option<Vertex>> {
    let xu = q.window(x)?;
    let offending = external_d(&q.a, &xu, d)?;
    if !offending.is_empty() {
        return Err(Error::DObstruction { offending: offending.into_iter().collect() });
    }
    let test = TraceTest::new(&q.a, &xu)?;
    for v in candidate_pool(x, &q.u, None) {
        if !test.accepts(x, &v) {
            continue;
        }
        let mut w = q.u.clone();
        w.push(v.clone());
        let extended = x.induced_on(&w);
        if has_induced_boundary_bounded(&extended, d, usize::MAX)?.is_none() {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Like [`is_ample_window`] for the `d`-ample variant: only pairs `(U, A)`
/// with no external simplex of `d - 1` vertices are queried.
pub fn is_d_ample_window<V: ComplexView + ?Sized>(
    x: &V,
    u_max: &[Vertex],
    cap: usize,
    d: usize,
) -> Result<AmpleReport> {
    let vertices = x.vertex_list();
    let mut report = AmpleReport { queries: 0, failures: Vec::new(), pool_size: vertices.len() };
    for u in subsets_up_to(&sorted_unique(u_max), cap) {
        let xu = x.induced_on(&u);
        for a in xu.subcomplexes()? {
            if !external_d(&a, &xu, d)?.is_empty() {
                continue;
            }
            report.queries += 1;
            let q = WitnessQuery::new(u.iter().cloned(), a);
            if find_witness_d(x, &q, d)?.is_none() {
                report.failures.push((u.clone(), q.a));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ArithmeticRado;

    fn v(l: u64) -> Vertex {
        Vertex::from(l)
    }

    fn vs(ls: &[u64]) -> Vec<Vertex> {
        ls.iter().map(|&l| v(l)).collect()
    }

    #[test]
    fn find_witness_examples() {
        let tri = Complex::of(&[&[1, 2, 3]]);
        let q = WitnessQuery::new(vs(&[1]), Complex::of(&[&[1]]));
        assert_eq!(find_witness(&tri, &q, None).unwrap(), Some(v(2)));
        let two = Complex::of(&[&[1], &[2]]);
        assert_eq!(find_witness(&two, &q, None).unwrap(), None);
        let bad = WitnessQuery::new(vs(&[1]), Complex::of(&[&[1, 2]]));
        assert!(matches!(find_witness(&tri, &bad, None), Err(Error::NotSubcomplex(_))));
    }

    #[test]
    fn enriched_arithmetic_window() {
        let ar = ArithmeticRado::new();
        let mut labels = vs(&[1, 2, 3, 4, 5]);
        let w_empty = ar.witness(&vs(&[1]), &Complex::empty()).unwrap();
        let w_point = ar.witness(&vs(&[1]), &Complex::of(&[&[1]])).unwrap();
        labels.extend([w_empty.clone(), w_point.clone()]);
        let x = ar.window(&labels).unwrap();
        let added = [w_empty.clone(), w_point];
        let q = WitnessQuery::new(vs(&[1]), Complex::empty());
        assert_eq!(find_witness(&x, &q, Some(&added)).unwrap(), Some(v(8)));
        assert_eq!(w_empty, v(8));
    }

    #[test]
    fn all_witnesses_examples() {
        let q = WitnessQuery::new(vs(&[1, 2]), Complex::of(&[&[1, 2]]));
        assert_eq!(all_witnesses(&Complex::of(&[&[1, 2, 3]]), &q).unwrap(), vs(&[3]));
        let hollow = Complex::of(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(all_witnesses(&hollow, &q).unwrap().is_empty());
    }

    #[test]
    fn window_reports() {
        let edge = Complex::of(&[&[1, 2]]);
        let rep = is_ample_window(&edge, &vs(&[1, 2]), 2).unwrap();
        assert!(rep.failures.contains(&(vs(&[1, 2]), edge.clone())));
        let empty = Complex::empty();
        let rep = is_ample_window(&empty, &[], 3).unwrap();
        assert_eq!(rep.failures, vec![(vec![], Complex::empty())]);
        let grown = crate::grow::grow(2, None).unwrap();
        let x1: Vec<Vertex> = grown.level(1).unwrap().vertex_list();
        let rep = is_ample_window(grown.top(), &x1, 3).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
    }

    #[test]
    fn graph_extension_examples() {
        let path = Complex::of(&[&[1, 2], &[2, 3]]);
        assert_eq!(graph_extension_check(&path, &vs(&[1, 3]), &[]).unwrap(), Some(v(2)));
        assert_eq!(graph_extension_check(&path, &vs(&[1]), &vs(&[2])).unwrap(), None);
        assert_eq!(graph_extension_check(&path, &[], &[]).unwrap(), Some(v(1)));
        assert_eq!(graph_extension_check(&Complex::empty(), &[], &[]).unwrap(), None);
        assert!(graph_extension_check(&path, &vs(&[1]), &vs(&[1])).is_err());
    }

    #[test]
    fn boundary_scan_examples() {
        let hollow = Complex::of(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(has_induced_boundary(&hollow, 3).unwrap(), Some(vs(&[1, 2, 3])));
        assert_eq!(has_induced_boundary(&Complex::of(&[&[1, 2, 3]]), 3).unwrap(), None);
        let path = Complex::of(&[&[1, 2], &[2, 3]]);
        assert_eq!(has_induced_boundary(&path, 2).unwrap(), Some(vs(&[1, 3])));
    }

    #[test]
    fn d_ample_guard_and_scan() {
        let x = Complex::of(&[&[1, 2, 3], &[1, 2, 4], &[3, 4]]);
        let q = WitnessQuery::new(vs(&[1, 2]), Complex::of(&[&[1, 2]]));
        assert_eq!(find_witness_d(&x, &q, 3).unwrap(), Some(v(3)));
        // two vertices without their edge leave an external edge
        let q = WitnessQuery::new(vs(&[1, 2]), Complex::of(&[&[1], &[2]]));
        match find_witness_d(&x, &q, 3) {
            Err(Error::DObstruction { offending }) => assert_eq!(offending, vec![Simplex::of(&[1, 2])]),
            other => panic!("unexpected {other:?}"),
        }
        // with d = 2 every vertex of X_U must be kept
        let q = WitnessQuery::new(vs(&[1, 2]), Complex::of(&[&[1]]));
        assert!(matches!(find_witness_d(&x, &q, 2), Err(Error::DObstruction { .. })));
    }
}
