use std::fmt;

use crate::error::{Error, Result};
use crate::vertex::Vertex;

/// A nonempty, strictly increasing list of vertex labels.
///
/// The derived ordering is lexicographic on the label sequence, which is the
/// order used for facets in files and for deterministic enumeration.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Validates that `vertices` is nonempty and strictly increasing.
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::MalformedSimplex("empty vertex list".into()));
        }
        if let Some(w) = vertices.windows(2).find(|w| w[0] >= w[1]) {
            let why = if w[0] == w[1] { "duplicate label" } else { "labels not increasing" };
            return Err(Error::MalformedSimplex(format!("{why} at {} , {}", w[0], w[1])));
        }
        Ok(Simplex(vertices))
    }

    /// Sorts and deduplicates; fails only on an empty input.
    pub fn from_unsorted(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort();
        vertices.dedup();
        Simplex::new(vertices)
    }

    pub fn vertex(v: Vertex) -> Self {
        Simplex(vec![v])
    }

    /// Convenience constructor for small labels, e.g. `Simplex::of(&[1, 2, 3])`.
    ///
    /// # Panics
    /// Panics if the labels are not strictly increasing positive integers.
    pub fn of(labels: &[u64]) -> Self {
        Simplex::new(labels.iter().map(|&l| Vertex::from(l)).collect()).expect("valid simplex literal")
    }


    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; present for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of vertices minus one.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn first(&self) -> &Vertex {
        &self.0[0]
    }

    pub fn last(&self) -> &Vertex {
        &self.0[self.0.len() - 1]
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        // both sorted: merge scan
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint_from(&self, other: &Simplex) -> bool {
        !self.0.iter().any(|v| other.contains(v))
    }

    /// The simplex with `v` added.
    pub fn with(&self, v: &Vertex) -> Simplex {
        let mut vs = self.0.clone();
        if let Err(pos) = vs.binary_search(v) {
            vs.insert(pos, v.clone());
        }
        Simplex(vs)
    }

    /// Union of two simplexes.
    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut vs: Vec<Vertex> = self.0.iter().chain(other.0.iter()).cloned().collect();
        vs.sort();
        vs.dedup();
        Simplex(vs)
    }

    /// The simplex with `v` removed, or `None` if nothing would remain.
    pub fn without(&self, v: &Vertex) -> Option<Simplex> {
        let vs: Vec<Vertex> = self.0.iter().filter(|w| *w != v).cloned().collect();
        (!vs.is_empty()).then_some(Simplex(vs))
    }

    /// Faces obtained by deleting exactly one vertex (empty for a vertex).
    pub fn boundary(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (0..n).filter(move |_| n > 1).map(move |skip| {
            Simplex(self.0.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| v.clone()).collect())
        })
    }

    /// Every nonempty subset, including the simplex itself.
    ///
    /// # Panics
    /// Panics for simplexes with more than 63 vertices.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        assert!(n < 64, "face enumeration limited to 63 vertices");
        (1u64..(1u64 << n)).map(move |mask| {
            Simplex((0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i].clone()).collect())
        })
    }

    /// Every nonempty proper subset.
    pub fn proper_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.len();
        self.faces().filter(move |f| f.len() < n)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn display_list(list: &[Simplex]) -> String {
    list.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
