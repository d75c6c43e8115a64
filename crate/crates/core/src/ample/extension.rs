//! Partial isomorphisms and their one-vertex extensions: embedding a finite
//! complex as an induced subcomplex and the back-and-forth procedure.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;

use super::{find_witness, WitnessQuery};
use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::vertex::Vertex;
use crate::view::ComplexView;

/// A finite injective vertex map from `X` to `X'`, kept in insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialIsomorphism {
    pairs: Vec<(Vertex, Vertex)>,
    forward: BTreeMap<Vertex, Vertex>,
    backward: BTreeMap<Vertex, Vertex>,
}

impl PartialIsomorphism {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Fails if a label repeats on either side.
    pub fn new<I: IntoIterator<Item = (Vertex, Vertex)>>(pairs: I) -> Result<Self> {
        let mut out = Self::empty();
        for (a, b) in pairs {
            out.push(a, b)?;
        }
        Ok(out)
    }

    pub fn identity<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        Self::new(vertices.into_iter().map(|v| (v.clone(), v))).expect("distinct labels")
    }

    pub fn push(&mut self, a: Vertex, b: Vertex) -> Result<()> {
        if let Some(old) = self.forward.get(&a) {
            return Err(Error::InvalidInput(format!("{a} is already mapped to {old}")));
        }
        if let Some(old) = self.backward.get(&b) {
            return Err(Error::InvalidInput(format!("{b} is already the image of {old}")));
        }
        self.forward.insert(a.clone(), b.clone());
        self.backward.insert(b.clone(), a.clone());
        self.pairs.push((a, b));
        Ok(())
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Domain, ascending.
    pub fn left(&self) -> Vec<Vertex> {
        self.forward.keys().cloned().collect()
    }

    /// Range, ascending.
    pub fn right(&self) -> Vec<Vertex> {
        self.backward.keys().cloned().collect()
    }

    pub fn image(&self, v: &Vertex) -> Option<&Vertex> {
        self.forward.get(v)
    }

    pub fn preimage(&self, v: &Vertex) -> Option<&Vertex> {
        self.backward.get(v)
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.pairs.iter().map(|(a, b)| (b.clone(), a.clone()))).expect("inverse of an injection")
    }

    /// Checks that the map carries `X` induced on the domain onto `X'` induced on the range.
    pub fn validate<V: ComplexView + ?Sized, W: ComplexView + ?Sized>(&self, x: &V, x2: &W) -> Result<()> {
        if let Some(a) = self.forward.keys().find(|a| !x.has_vertex(a)) {
            return Err(Error::InvalidInput(format!("{a} is not a vertex of the first complex")));
        }
        if let Some(b) = self.backward.keys().find(|b| !x2.has_vertex(b)) {
            return Err(Error::InvalidInput(format!("{b} is not a vertex of the second complex")));
        }
        let mapped = x.induced_on(&self.left()).relabel(&self.forward)?;
        if mapped != x2.induced_on(&self.right()) {
            return Err(Error::InvalidInput("the vertex map does not preserve the induced complexes".into()));
        }
        Ok(())
    }

    pub fn is_valid<V: ComplexView + ?Sized, W: ComplexView + ?Sized>(&self, x: &V, x2: &W) -> bool {
        self.validate(x, x2).is_ok()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self.pairs.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>())
    }
}

/// One-vertex extension.
///
/// `iso` maps part of `x` onto part of `target`, and `base` is the trace of
/// the link of `new_vertex` on the mapped part of `target`. The preimage of
/// `base` is a subcomplex of `x`, and its smallest witness in `x` becomes the
/// preimage of `new_vertex`.
pub fn extend_by_cone<V: ComplexView + ?Sized, W: ComplexView + ?Sized>(
    x: &V,
    target: &W,
    iso: &PartialIsomorphism,
    new_vertex: &Vertex,
    base: &Complex,
) -> Result<PartialIsomorphism> {
    if iso.preimage(new_vertex).is_some() {
        return Err(Error::ApexCollision(new_vertex.clone()));
    }
    if !target.has_vertex(new_vertex) {
        return Err(Error::InvalidInput(format!("{new_vertex} is not a vertex of the target")));
    }
    let right = iso.right();
    if target.link_trace(new_vertex, &right) != *base {
        return Err(Error::InvalidInput(format!(
            "{base:?} is not the link of {new_vertex} on the mapped vertices of the target"
        )));
    }
    let a = base.relabel(&iso.backward)?;
    let left = iso.left();
    let q = WitnessQuery::new(left.iter().cloned(), a);
    match find_witness(x, &q, None)? {
        Some(v) => {
            let mut out = iso.clone();
            out.push(v, new_vertex.clone())?;
            Ok(out)
        }
        None => Err(Error::WitnessNotFound { pool: x.vertex_list().len().saturating_sub(left.len()) }),
    }
}

/// Embeds `l` into `x` as an induced subcomplex, adding the vertices of `l` in
/// increasing order. The pairs run from `x` to `l`. `None` if some step has no witness.
pub fn embed_complex<V: ComplexView + ?Sized>(x: &V, l: &Complex) -> Result<Option<PartialIsomorphism>> {
    let mut iso = PartialIsomorphism::empty();
    for w in l.vertices() {
        let base = l.link_trace(w, &iso.right());
        match extend_by_cone(x, l, &iso, w, &base) {
            Ok(next) => iso = next,
            Err(Error::WitnessNotFound { .. }) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(Some(iso))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forth,
    Back,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forth => "forth",
            Direction::Back => "back",
        })
    }
}

/// The step at which no witness was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepFailure {
    pub step: usize,
    pub direction: Direction,
    /// The vertex that could not be matched.
    pub vertex: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackAndForth {
    pub iso: PartialIsomorphism,
    pub steps_taken: usize,
    pub failure: Option<StepFailure>,
}

impl BackAndForth {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "pairs": self.iso.to_json(),
            "steps_taken": self.steps_taken,
            "failure": self.failure.as_ref().map(|f| json!({
                "step": f.step,
                "direction": f.direction.to_string(),
                "vertex": f.vertex.to_string(),
            })),
        })
    }
}

/// Alternating extension of `seed`: odd steps map the smallest unmapped vertex
/// of `x`, even steps find a preimage for the smallest unmapped vertex of `x2`.
/// Stops after `steps` steps, when the side due to move is exhausted, or at
/// the first step without a witness.
pub fn back_and_forth<V: ComplexView + ?Sized, W: ComplexView + ?Sized>(
    x: &V,
    x2: &W,
    seed: PartialIsomorphism,
    steps: usize,
) -> Result<BackAndForth> {
    back_and_forth_with(x, x2, seed, steps, |_| {})
}

/// [`back_and_forth`] with a callback run on the map after each successful step.
pub fn back_and_forth_with<V: ComplexView + ?Sized, W: ComplexView + ?Sized>(
    x: &V,
    x2: &W,
    seed: PartialIsomorphism,
    steps: usize,
    mut on_step: impl FnMut(&PartialIsomorphism),
) -> Result<BackAndForth> {
    seed.validate(x, x2)?;
    let xs = x.vertex_list();
    let x2s = x2.vertex_list();
    let mut iso = seed;
    let mut taken = 0;
    for step in 1..=steps {
        let direction = if step % 2 == 1 { Direction::Forth } else { Direction::Back };
        let attempt = match direction {
            Direction::Forth => {
                let Some(v) = xs.iter().find(|v| iso.image(v).is_none()) else { break };
                let base = x.link_trace(v, &iso.left());
                (v.clone(), extend_by_cone(x2, x, &iso.inverse(), v, &base).map(|inv| inv.inverse()))
            }
            Direction::Back => {
                let Some(v) = x2s.iter().find(|v| iso.preimage(v).is_none()) else { break };
                let base = x2.link_trace(v, &iso.right());
                (v.clone(), extend_by_cone(x, x2, &iso, v, &base))
            }
        };
        match attempt {
            (_, Ok(next)) => {
                iso = next;
                taken += 1;
                on_step(&iso);
            }
            (vertex, Err(Error::WitnessNotFound { .. })) => {
                return Ok(BackAndForth { iso, steps_taken: taken, failure: Some(StepFailure { step, direction, vertex }) });
            }
            (_, Err(e)) => return Err(e),
        }
    }
    Ok(BackAndForth { iso, steps_taken: taken, failure: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::is_isomorphic_small;

    fn v(l: u64) -> Vertex {
        Vertex::from(l)
    }

    #[test]
    fn partial_isomorphism_bookkeeping() {
        let mut iso = PartialIsomorphism::new([(v(1), v(5)), (v(2), v(7))]).unwrap();
        assert!(iso.push(v(1), v(9)).is_err());
        assert!(iso.push(v(3), v(5)).is_err());
        assert_eq!(iso.image(&v(2)), Some(&v(7)));
        assert_eq!(iso.inverse().image(&v(5)), Some(&v(1)));
        let x = Complex::of(&[&[1, 2]]);
        let y = Complex::of(&[&[5, 7]]);
        assert!(iso.is_valid(&x, &y));
        assert!(!iso.is_valid(&x, &Complex::of(&[&[5], &[7]])));
    }

    #[test]
    fn extend_examples() {
        let x = Complex::of(&[&[1, 2], &[3]]);
        let target = Complex::of(&[&[10, 11]]);
        let empty = PartialIsomorphism::empty();
        let one = extend_by_cone(&x, &target, &empty, &v(10), &Complex::empty()).unwrap();
        assert_eq!(one.pairs(), &[(v(1), v(10))]);
        let two = extend_by_cone(&x, &target, &one, &v(11), &Complex::of(&[&[10]])).unwrap();
        assert_eq!(two.image(&v(2)), Some(&v(11)));
        assert!(two.is_valid(&x, &target));

        let point = Complex::of(&[&[1]]);
        let seed = PartialIsomorphism::identity([v(1)]);
        let err = extend_by_cone(&point, &Complex::of(&[&[1, 2]]), &seed, &v(2), &Complex::of(&[&[1]]));
        assert!(matches!(err, Err(Error::WitnessNotFound { .. })));
    }

    #[test]
    fn embedding_examples() {
        let x = Complex::of(&[&[1, 2], &[2, 3], &[1, 3], &[3, 4], &[4, 5]]);
        let l = Complex::of(&[&[7]]);
        assert!(embed_complex(&x, &l).unwrap().is_some());
        let hollow = Complex::of(&[&[1, 2], &[2, 3], &[1, 3]]);
        let got = embed_complex(&x, &hollow).unwrap().unwrap();
        let image = x.induced(&got.left());
        assert!(is_isomorphic_small(&image, &hollow).unwrap().is_some());
        assert!(embed_complex(&Complex::of(&[&[1, 2, 3]]), &hollow).unwrap().is_none());
    }

    #[test]
    fn back_and_forth_examples() {
        let x = Complex::of(&[&[1, 2, 3], &[3, 4], &[5]]);
        let run = back_and_forth(&x, &x, PartialIsomorphism::empty(), 10).unwrap();
        assert!(run.failure.is_none());
        assert_eq!(run.iso.len(), 5);
        assert!(run.iso.is_valid(&x, &x));

        let full = Complex::of(&[&[1, 2, 3]]);
        let hollow = Complex::of(&[&[1, 2], &[2, 3], &[1, 3]]);
        let run = back_and_forth(&full, &hollow, PartialIsomorphism::empty(), 3).unwrap();
        let failure = run.failure.expect("the triangle cannot be matched");
        assert_eq!(failure.step, 3);
        assert_eq!(run.steps_taken, 2);
    }
}
