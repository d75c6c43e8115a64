//! Finite simplicial complexes stored as the explicit set of all simplexes.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::simplex::Simplex;
use crate::vertex::Vertex;

/// Default cap on `|F(L)|` for subcomplex enumeration.
pub const DEFAULT_ENUMERATION_BOUND: usize = 24;
/// Default cap on vertex count for the isomorphism search.
pub const DEFAULT_ISOMORPHISM_BOUND: usize = 10;
/// Largest facet accepted by [`Complex::from_facets`] (it has `2^n - 1` faces).
pub const MAX_FACET_VERTICES: usize = 24;

/// A finite, downward-closed family of simplexes with an explicit vertex set.
///
/// Every vertex has its singleton among the simplexes and every simplex uses
/// only listed vertices. The empty complex is a legal value.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Complex {
    vertices: BTreeSet<Vertex>,
    simplexes: BTreeSet<Simplex>,
}

/// How one complex sits inside another.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubcomplexRelation {
    /// Every simplex of the part is a simplex of the ambient complex.
    pub is_subcomplex: bool,
    /// The part contains every ambient simplex spanned by its vertices.
    pub induced: bool,
}

impl Complex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Downward closure of `facets`.
    pub fn from_facets<I: IntoIterator<Item = Simplex>>(facets: I) -> Result<Self> {
        let mut out = Complex::empty();
        for f in facets {
            if f.len() > MAX_FACET_VERTICES {
                return Err(Error::size("facet vertex count", f.len(), MAX_FACET_VERTICES));
            }
            if out.simplexes.contains(&f) {
                continue;
            }
            for face in f.faces() {
                out.insert_unchecked(face);
            }
        }
        Ok(out)
    }

    /// Validates and closes raw label lists.
    pub fn from_raw_facets(facets: Vec<Vec<Vertex>>) -> Result<Self> {
        let facets = facets.into_iter().map(Simplex::new).collect::<Result<Vec<_>>>()?;
        Self::from_facets(facets)
    }

    /// Literal constructor for tests and examples: `Complex::of(&[&[1, 2], &[2, 3]])`.
    ///
    /// # Panics
    /// Panics on malformed simplexes.
    pub fn of(facets: &[&[u64]]) -> Self {
        Self::from_facets(facets.iter().map(|f| Simplex::of(f))).expect("valid facet literal")
    }

    /// Vertex-only complex on the given labels.
    pub fn discrete<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        let mut out = Complex::empty();
        for v in vertices {
            out.insert_unchecked(Simplex::vertex(v));
        }
        out
    }

    /// The full simplex on `vertices` (all nonempty subsets).
    pub fn full_simplex(vertices: &[Vertex]) -> Result<Self> {
        if vertices.is_empty() {
            return Ok(Complex::empty());
        }
        Self::from_facets([Simplex::from_unsorted(vertices.to_vec())?])
    }

    /// `Δ_n` on labels `1..=n`.
    pub fn standard_simplex(n: u64) -> Result<Self> {
        let vs: Vec<Vertex> = (1..=n).map(Vertex::from).collect();
        Self::full_simplex(&vs)
    }

    /// Builds a complex from an explicit simplex set, checking downward closure.
    pub fn from_simplexes<I: IntoIterator<Item = Simplex>>(simplexes: I) -> Result<Self> {
        let set: BTreeSet<Simplex> = simplexes.into_iter().collect();
        for s in &set {
            for b in s.boundary() {
                if !set.contains(&b) {
                    return Err(Error::InvalidInput(format!("{s} is present but its face {b} is not")));
                }
            }
        }
        Ok(Self::from_closed_set(set))
    }

    /// Caller guarantees downward closure.
    pub(crate) fn from_closed_set(simplexes: BTreeSet<Simplex>) -> Self {
        let vertices = simplexes.iter().filter(|s| s.len() == 1).map(|s| s.first().clone()).collect();
        Complex { vertices, simplexes }
    }

    /// Caller guarantees all faces of `s` are (or will be) present.
    pub(crate) fn insert_unchecked(&mut self, s: Simplex) {
        if s.len() == 1 {
            self.vertices.insert(s.first().clone());
        }
        self.simplexes.insert(s);
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn simplexes(&self) -> &BTreeSet<Simplex> {
        &self.simplexes
    }

    /// Number of simplexes, `|F(X)|`.
    pub fn len(&self) -> usize {
        self.simplexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplexes.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplexes.contains(s)
    }

    pub fn has_vertex(&self, v: &Vertex) -> bool {
        self.vertices.contains(v)
    }

    /// Largest simplex size minus one; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplexes.iter().map(Simplex::dim).max()
    }

    /// Simplex counts indexed by dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for s in &self.simplexes {
            if out.len() <= s.dim() {
                out.resize(s.dim() + 1, 0);
            }
            out[s.dim()] += 1;
        }
        out
    }

    /// Inclusion-maximal simplexes, in lexicographic order.
    pub fn facets(&self) -> Vec<Simplex> {
        let covered: HashSet<Simplex> = self.simplexes.iter().flat_map(|s| s.boundary().collect::<Vec<_>>()).collect();
        self.simplexes.iter().filter(|s| !covered.contains(*s)).cloned().collect()
    }

    /// `X_U`: every simplex whose vertices lie in `u`. Labels outside `V(X)` are ignored.
    pub fn induced<'a, I: IntoIterator<Item = &'a Vertex>>(&self, u: I) -> Complex {
        let keep: BTreeSet<&Vertex> = u.into_iter().collect();
        let set = self
            .simplexes
            .iter()
            .filter(|s| s.vertices().iter().all(|v| keep.contains(v)))
            .cloned()
            .collect();
        Complex::from_closed_set(set)
    }

    /// `Lk_X(σ)`: simplexes disjoint from `σ` whose union with `σ` is in `X`.
    pub fn link(&self, sigma: &Simplex) -> Result<Complex> {
        if !self.contains(sigma) {
            return Err(Error::NotASimplex(sigma.clone()));
        }
        let set = self
            .simplexes
            .iter()
            .filter(|t| t.is_disjoint_from(sigma) && self.simplexes.contains(&t.union(sigma)))
            .cloned()
            .collect();
        Ok(Complex::from_closed_set(set))
    }

    /// The cone `v * A`.
    pub fn cone(apex: &Vertex, base: &Complex) -> Result<Complex> {
        if base.has_vertex(apex) {
            return Err(Error::ApexCollision(apex.clone()));
        }
        let mut out = base.clone();
        out.insert_unchecked(Simplex::vertex(apex.clone()));
        for s in &base.simplexes {
            out.insert_unchecked(s.with(apex));
        }
        Ok(out)
    }

    pub fn union(&self, other: &Complex) -> Complex {
        let mut out = self.clone();
        for s in &other.simplexes {
            out.insert_unchecked(s.clone());
        }
        out
    }

    pub fn is_subcomplex_of(&self, other: &Complex) -> bool {
        self.len() <= other.len() && self.simplexes.iter().all(|s| other.contains(s))
    }

    /// Removes every simplex that has a member of `f` as a face.
    pub fn delete_star(&self, f: &[Simplex]) -> Result<Complex> {
        if let Some(bad) = f.iter().find(|s| !self.contains(s)) {
            return Err(Error::NotASimplex(bad.clone()));
        }
        let set = self
            .simplexes
            .iter()
            .filter(|s| !f.iter().any(|d| d.is_subset_of(s)))
            .cloned()
            .collect();
        Ok(Complex::from_closed_set(set))
    }

    /// Applies a vertex map. Unmapped vertices are kept as they are.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> Result<Complex> {
        let set = self
            .simplexes
            .iter()
            .map(|s| Simplex::from_unsorted(s.vertices().iter().map(|v| map.get(v).unwrap_or(v).clone()).collect()))
            .collect::<Result<BTreeSet<_>>>()?;
        if set.len() != self.len() {
            return Err(Error::InvalidInput("relabeling is not injective on simplexes".into()));
        }
        Complex::from_simplexes(set)
    }

    /// Every subcomplex (downward-closed subset of `F(L)`), starting with the
    /// empty complex, each exactly once. At most [`DEFAULT_ENUMERATION_BOUND`] simplexes.
    pub fn subcomplexes(&self) -> Result<Subcomplexes> {
        self.subcomplexes_bounded(DEFAULT_ENUMERATION_BOUND)
    }

    pub fn subcomplexes_bounded(&self, bound: usize) -> Result<Subcomplexes> {
        let bound = bound.min(63);
        if self.len() > bound {
            return Err(Error::size("simplex count for subcomplex enumeration", self.len(), bound));
        }
        let mut order: Vec<Simplex> = self.simplexes.iter().cloned().collect();
        order.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index: HashMap<&Simplex, usize> = order.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let boundary_masks = order
            .iter()
            .map(|s| s.boundary().fold(0u64, |m, b| m | 1 << index[&b]))
            .collect();
        Ok(Subcomplexes { order, boundary_masks, stack: vec![(0, 0)] })
    }

    /// Relationship of `part` to `self`.
    pub fn relation_to_part(&self, part: &Complex) -> SubcomplexRelation {
        let is_subcomplex = part.is_subcomplex_of(self);
        let induced = is_subcomplex && self.induced(part.vertices()).len() == part.len();
        SubcomplexRelation { is_subcomplex, induced }
    }
}

/// Facets separated by spaces, e.g. `{1,2,3} {3,4}`; the empty complex prints as `{}`.
impl std::fmt::Display for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let facets = self.facets();
        if facets.is_empty() {
            return f.write_str("{}");
        }
        for (i, facet) in facets.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{facet}")?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Complex[")?;
        let lone: Vec<&Vertex> =
            self.vertices.iter().filter(|v| !self.simplexes.iter().any(|s| s.len() > 1 && s.contains(v))).collect();
        let mut first = true;
        for facet in self.facets().iter().filter(|s| s.len() > 1) {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{facet}")?;
        }
        for v in lone {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{{{v}}}")?;
        }
        write!(f, "]")
    }
}

/// Iterator over all subcomplexes; see [`Complex::subcomplexes`].
pub struct Subcomplexes {
    order: Vec<Simplex>,
    boundary_masks: Vec<u64>,
    stack: Vec<(usize, u64)>,
}

impl Iterator for Subcomplexes {
    type Item = Complex;

    fn next(&mut self) -> Option<Complex> {
        while let Some((i, mask)) = self.stack.pop() {
            if i == self.order.len() {
                let set = (0..self.order.len()).filter(|j| mask >> j & 1 == 1).map(|j| self.order[j].clone()).collect();
                return Some(Complex::from_closed_set(set));
            }
            if self.boundary_masks[i] & !mask == 0 {
                self.stack.push((i + 1, mask | 1 << i));
            }
            self.stack.push((i + 1, mask));
        }
        None
    }
}

/// `E(A|L)`: simplexes of `L` outside `A` whose proper faces all lie in `A`.
pub fn external_simplexes(a: &Complex, l: &Complex) -> Result<BTreeSet<Simplex>> {
    if !a.is_subcomplex_of(l) {
        return Err(Error::NotSubcomplex("A is not a subcomplex of L".into()));
    }
    Ok(l.simplexes()
        .iter()
        .filter(|s| !a.contains(s) && s.boundary().all(|b| a.contains(&b)))
        .cloned()
        .collect())
}

/// `E_{d-1}(A|L)`: the external simplexes with exactly `d - 1` vertices.
pub fn external_d(a: &Complex, l: &Complex, d: usize) -> Result<BTreeSet<Simplex>> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("d must be at least 2, got {d}")));
    }
    Ok(external_simplexes(a, l)?.into_iter().filter(|s| s.len() == d - 1).collect())
}

/// Searches for a vertex bijection `V(X) -> V(Y)` that induces a bijection of
/// simplexes. Backtracking over vertices, pruned by per-dimension degree.
pub fn is_isomorphic_small(x: &Complex, y: &Complex) -> Result<Option<BTreeMap<Vertex, Vertex>>> {
    is_isomorphic_bounded(x, y, DEFAULT_ISOMORPHISM_BOUND)
}

pub fn is_isomorphic_bounded(x: &Complex, y: &Complex, bound: usize) -> Result<Option<BTreeMap<Vertex, Vertex>>> {
    let n = x.vertices().len().max(y.vertices().len());
    if n > bound {
        return Err(Error::size("vertex count for isomorphism search", n, bound));
    }
    if x.vertices().len() != y.vertices().len() || x.f_vector() != y.f_vector() {
        return Ok(None);
    }
    let xs: Vec<Vertex> = x.vertices().iter().cloned().collect();
    let ys: Vec<Vertex> = y.vertices().iter().cloned().collect();
    let star = |c: &Complex, v: &Vertex| -> Vec<Simplex> { c.simplexes().iter().filter(|s| s.contains(v)).cloned().collect() };
    let signature = |stars: &[Simplex]| -> Vec<usize> {
        let mut sig = Vec::new();
        for s in stars {
            if sig.len() < s.len() {
                sig.resize(s.len(), 0);
            }
            sig[s.len() - 1] += 1;
        }
        sig
    };
    let x_stars: Vec<Vec<Simplex>> = xs.iter().map(|v| star(x, v)).collect();
    let y_stars: Vec<Vec<Simplex>> = ys.iter().map(|v| star(y, v)).collect();
    let x_sig: Vec<Vec<usize>> = x_stars.iter().map(|s| signature(s)).collect();
    let y_sig: Vec<Vec<usize>> = y_stars.iter().map(|s| signature(s)).collect();

    struct Search<'a> {
        x: &'a Complex,
        y: &'a Complex,
        xs: &'a [Vertex],
        ys: &'a [Vertex],
        x_stars: &'a [Vec<Simplex>],
        y_stars: &'a [Vec<Simplex>],
        x_sig: &'a [Vec<usize>],
        y_sig: &'a [Vec<usize>],
        forward: BTreeMap<Vertex, Vertex>,
        backward: BTreeMap<Vertex, Vertex>,
    }

    impl Search<'_> {
        fn consistent(&self, xi: usize, yj: usize) -> bool {
            let map_all = |s: &Simplex, m: &BTreeMap<Vertex, Vertex>| -> Option<Simplex> {
                let vs: Option<Vec<Vertex>> = s.vertices().iter().map(|v| m.get(v).cloned()).collect();
                vs.map(|vs| Simplex::from_unsorted(vs).expect("nonempty"))
            };
            self.x_stars[xi].iter().all(|s| map_all(s, &self.forward).is_none_or(|t| self.y.contains(&t)))
                && self.y_stars[yj].iter().all(|s| map_all(s, &self.backward).is_none_or(|t| self.x.contains(&t)))
        }

        fn run(&mut self, i: usize) -> bool {
            if i == self.xs.len() {
                return true;
            }
            for j in 0..self.ys.len() {
                if self.backward.contains_key(&self.ys[j]) || self.x_sig[i] != self.y_sig[j] {
                    continue;
                }
                self.forward.insert(self.xs[i].clone(), self.ys[j].clone());
                self.backward.insert(self.ys[j].clone(), self.xs[i].clone());
                if self.consistent(i, j) && self.run(i + 1) {
                    return true;
                }
                self.forward.remove(&self.xs[i]);
                self.backward.remove(&self.ys[j]);
            }
            false
        }
    }

    let mut search = Search {
        x,
        y,
        xs: &xs,
        ys: &ys,
        x_stars: &x_stars,
        y_stars: &y_stars,
        x_sig: &x_sig,
        y_sig: &y_sig,
        forward: BTreeMap::new(),
        backward: BTreeMap::new(),
    };
    Ok(search.run(0).then_some(search.forward))
}
