//! Read-only access to a finite simplicial complex through a membership oracle.
//!
//! Ampleness checks only ever look at small windows `X_U` and at the traces of
//! vertex links on them, so they are written against [`ComplexView`]. That lets
//! the same code run on an explicit [`Complex`] and on lazily evaluated
//! complexes (random samples with thousands of vertices, deletions, links,
//! vertex-induced restrictions) without materializing them.

use std::collections::BTreeSet;

use crate::complex::Complex;
use crate::simplex::Simplex;
use crate::vertex::Vertex;

pub trait ComplexView {
    /// The vertex labels, sorted ascending.
    fn vertex_list(&self) -> Vec<Vertex>;

    /// Whether `simplex` belongs to the complex.
    fn contains(&self, simplex: &Simplex) -> bool;

    fn has_vertex(&self, v: &Vertex) -> bool {
        self.contains(&Simplex::vertex(v.clone()))
    }

    /// The induced subcomplex `X_U`. Labels of `u` outside the complex are ignored.
    fn induced_on(&self, u: &[Vertex]) -> Complex {
        let present: Vec<Vertex> = sorted_unique(u).into_iter().filter(|v| self.has_vertex(v)).collect();
        grow_closed(&present, |s| self.contains(s))
    }

    /// `induced(link(X, {v}), U)`: the simplexes `σ ⊆ U \ {v}` with `σ ∪ {v}` in `X`.
    fn link_trace(&self, v: &Vertex, u: &[Vertex]) -> Complex {
        if !self.has_vertex(v) {
            return Complex::empty();
        }
        let pool: Vec<Vertex> = sorted_unique(u).into_iter().filter(|w| w != v).collect();
        grow_closed(&pool, |s| self.contains(&s.with(v)))
    }
}

impl ComplexView for Complex {
    fn vertex_list(&self) -> Vec<Vertex> {
        self.vertices().iter().cloned().collect()
    }

    fn contains(&self, simplex: &Simplex) -> bool {
        Complex::contains(self, simplex)
    }

    fn has_vertex(&self, v: &Vertex) -> bool {
        Complex::has_vertex(self, v)
    }
}

impl<V: ComplexView + ?Sized> ComplexView for &V {
    fn vertex_list(&self) -> Vec<Vertex> {
        (**self).vertex_list()
    }

    fn contains(&self, simplex: &Simplex) -> bool {
        (**self).contains(simplex)
    }

    fn has_vertex(&self, v: &Vertex) -> bool {
        (**self).has_vertex(v)
    }
}

pub(crate) fn sorted_unique(u: &[Vertex]) -> Vec<Vertex> {
    let set: BTreeSet<&Vertex> = u.iter().collect();
    set.into_iter().cloned().collect()
}

/// Builds the downward-closed family of subsets of `pool` accepted by
/// `accept`, assuming `accept` is itself downward closed. Works level by level
/// and only tests sets whose codimension-one faces were accepted.
pub(crate) fn grow_closed(pool: &[Vertex], accept: impl Fn(&Simplex) -> bool) -> Complex {
    grow_closed_bounded(pool, accept, usize::MAX).expect("unbounded")
}

/// [`grow_closed`] that gives up once more than `limit` simplexes are accepted.
pub(crate) fn grow_closed_bounded(
    pool: &[Vertex],
    accept: impl Fn(&Simplex) -> bool,
    limit: usize,
) -> crate::Result<Complex> {
    let mut all: BTreeSet<Simplex> = BTreeSet::new();
    let mut layer: Vec<Simplex> =
        pool.iter().map(|v| Simplex::vertex(v.clone())).filter(|s| accept(s)).collect();
    while !layer.is_empty() {
        all.extend(layer.iter().cloned());
        if all.len() > limit {
            return Err(crate::Error::size("simplex count", all.len(), limit));
        }
        let mut next = Vec::new();
        for s in &layer {
            for w in pool.iter().filter(|w| *w > s.last()) {
                let cand = s.with(w);
                if cand.boundary().all(|b| all.contains(&b)) && accept(&cand) {
                    next.push(cand);
                }
            }
        }
        layer = next;
    }
    Ok(Complex::from_closed_set(all))
}

/// The complex induced on a vertex subset.
pub struct Induced<'a, V: ?Sized> {
    inner: &'a V,
    keep: BTreeSet<Vertex>,
}

impl<'a, V: ComplexView + ?Sized> Induced<'a, V> {
    pub fn new<I: IntoIterator<Item = Vertex>>(inner: &'a V, keep: I) -> Self {
        Induced { inner, keep: keep.into_iter().collect() }
    }
}

impl<V: ComplexView + ?Sized> ComplexView for Induced<'_, V> {
    fn vertex_list(&self) -> Vec<Vertex> {
        self.inner.vertex_list().into_iter().filter(|v| self.keep.contains(v)).collect()
    }

    fn contains(&self, simplex: &Simplex) -> bool {
        simplex.vertices().iter().all(|v| self.keep.contains(v)) && self.inner.contains(simplex)
    }
}

/// The complex with the closed star of a finite family of simplexes removed.
pub struct DeletedStar<'a, V: ?Sized> {
    inner: &'a V,
    removed: Vec<Simplex>,
}

impl<'a, V: ComplexView + ?Sized> DeletedStar<'a, V> {
    /// Members of `removed` that are not simplexes of `inner` are rejected.
    pub fn new(inner: &'a V, removed: Vec<Simplex>) -> crate::Result<Self> {
        if let Some(bad) = removed.iter().find(|s| !inner.contains(s)) {
            return Err(crate::Error::NotASimplex(bad.clone()));
        }
        Ok(DeletedStar { inner, removed })
    }

    pub fn removed(&self) -> &[Simplex] {
        &self.removed
    }
}

impl<V: ComplexView + ?Sized> ComplexView for DeletedStar<'_, V> {
    fn vertex_list(&self) -> Vec<Vertex> {
        self.inner
            .vertex_list()
            .into_iter()
            .filter(|v| !self.removed.iter().any(|r| r.len() == 1 && r.first() == v))
            .collect()
    }

    fn contains(&self, simplex: &Simplex) -> bool {
        !self.removed.iter().any(|r| r.is_subset_of(simplex)) && self.inner.contains(simplex)
    }
}

/// The link of a simplex. Vertices are found by scanning the ambient vertex list once.
pub struct LinkView<'a, V: ?Sized> {
    inner: &'a V,
    base: Simplex,
    vertices: Vec<Vertex>,
}

impl<'a, V: ComplexView + ?Sized> LinkView<'a, V> {
    pub fn new(inner: &'a V, base: Simplex) -> crate::Result<Self> {
        if !inner.contains(&base) {
            return Err(crate::Error::NotASimplex(base));
        }
        let vertices = inner
            .vertex_list()
            .into_iter()
            .filter(|w| !base.contains(w) && inner.contains(&base.with(w)))
            .collect();
        Ok(LinkView { inner, base, vertices })
    }

    pub fn base(&self) -> &Simplex {
        &self.base
    }
}

impl<V: ComplexView + ?Sized> ComplexView for LinkView<'_, V> {
    fn vertex_list(&self) -> Vec<Vertex> {
        self.vertices.clone()
    }

    fn contains(&self, simplex: &Simplex) -> bool {
        simplex.is_disjoint_from(&self.base) && self.inner.contains(&simplex.union(&self.base))
    }
}
