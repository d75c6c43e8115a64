use super::{stream_of, uniform, ProbabilitySystem, DOMAIN_COIN, DOMAIN_SELECT};
use crate::complex::Complex;
use crate::simplex::Simplex;
use crate::vertex::Vertex;
use crate::error::Result;
use crate::view::{grow_closed, grow_closed_bounded, ComplexView, Induced};

/// The random complex on labels `1..=n`, evaluated lazily.
///
/// Simplex `σ` carries the uniform `u_σ`, the first draw of ChaCha8 seeded
/// with `seed` on a stream derived from the labels of `σ`. It belongs to the
/// complex iff `u_τ < p_τ` for every nonempty face `τ ⊆ σ`. Because `u_σ`
/// does not depend on `p`, raising the parameters never removes a simplex.
#[derive(Debug, Clone)]
pub struct RandomComplex {
    n: u64,
    seed: u64,
    system: ProbabilitySystem,
    vertices: Vec<Vertex>,
}

impl RandomComplex {
    pub fn new(n: u64, system: ProbabilitySystem, seed: u64) -> Self {
        let mut out = RandomComplex { n, seed, system, vertices: Vec::new() };
        out.vertices = (1..=n).map(Vertex::from).filter(|v| out.coin(&Simplex::vertex(v.clone()))).collect();
        out
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn system(&self) -> &ProbabilitySystem {
        &self.system
    }

    /// `u_σ`.
    pub fn draw(&self, sigma: &Simplex) -> f64 {
        uniform(self.seed, stream_of(DOMAIN_COIN, sigma.vertices()))
    }

    fn coin(&self, sigma: &Simplex) -> bool {
        self.draw(sigma) < self.system.p(sigma)
    }

    fn in_range(&self, sigma: &Simplex) -> bool {
        sigma.last().as_u64().is_some_and(|l| l <= self.n)
    }

    /// Builds the explicit complex. Its size grows quickly with `n`.
    pub fn materialize(&self) -> Complex {
        grow_closed(&self.vertices, |s| self.coin(s))
    }

    /// [`materialize`](Self::materialize) with a cap on the number of simplexes.
    pub fn materialize_bounded(&self, limit: usize) -> Result<Complex> {
        grow_closed_bounded(&self.vertices, |s| self.coin(s), limit)
    }
}

impl ComplexView for RandomComplex {
    fn vertex_list(&self) -> Vec<Vertex> {
        self.vertices.clone()
    }

    fn contains(&self, simplex: &Simplex) -> bool {
        if !self.in_range(simplex) {
            return false;
        }
        if simplex.len() == 1 {
            return self.vertices.binary_search(simplex.first()).is_ok();
        }
        simplex.vertices().iter().all(|v| self.vertices.binary_search(v).is_ok())
            && simplex.faces().filter(|f| f.len() > 1).all(|f| self.coin(&f))
    }

    fn has_vertex(&self, v: &Vertex) -> bool {
        self.vertices.binary_search(v).is_ok()
    }
}

/// Draws `X ∩ Δ_n` from the measure defined by `system`.
pub fn sample_complex(n: u64, system: &ProbabilitySystem, seed: u64) -> Complex {
    RandomComplex::new(n, system.clone(), seed).materialize()
}

/// Keeps each vertex independently with probability `prob(v)`.
pub fn select_vertices(vertices: &[Vertex], prob: impl Fn(&Vertex) -> f64, seed: u64) -> Vec<Vertex> {
    vertices
        .iter()
        .filter(|v| uniform(seed, stream_of(DOMAIN_SELECT, [*v])) < prob(v))
        .cloned()
        .collect()
}

/// `X_ω`: the complex induced on a random vertex selection.
pub fn sample_induced(x: &Complex, prob: impl Fn(&Vertex) -> f64, seed: u64) -> Complex {
    x.induced(&select_vertices(&x.vertex_list(), prob, seed))
}

/// [`sample_induced`] as a lazy view, for complexes too large to materialize.
pub fn sample_induced_view<V: ComplexView + ?Sized>(
    x: &V,
    prob: impl Fn(&Vertex) -> f64,
    seed: u64,
) -> Induced<'_, V> {
    Induced::new(x, select_vertices(&x.vertex_list(), prob, seed))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_samples() {
        let half = ProbabilitySystem::half();
        assert!(sample_complex(0, &half, 1).is_empty());
        let one = ProbabilitySystem::constant(1.0).unwrap();
        assert_eq!(sample_complex(2, &one, 1), Complex::of(&[&[1, 2]]));
    }

    #[test]
    fn lazy_and_explicit_agree() {
        let sys = ProbabilitySystem::constant(0.6).unwrap();
        let lazy = RandomComplex::new(9, sys, 42);
        let explicit = lazy.materialize();
        assert_eq!(lazy.vertex_list(), explicit.vertex_list());
        let all: Vec<Vertex> = (1..=9u64).map(Vertex::from).collect();
        assert_eq!(lazy.induced_on(&all), explicit);
        for s in Complex::standard_simplex(9).unwrap().simplexes() {
            assert_eq!(ComplexView::contains(&lazy, s), explicit.contains(s), "{s}");
        }
    }

    #[test]
    fn monotone_in_p() {
        let low = sample_complex(8, &ProbabilitySystem::constant(0.3).unwrap(), 7);
        let high = sample_complex(8, &ProbabilitySystem::constant(0.7).unwrap(), 7);
        assert!(low.is_subcomplex_of(&high));
    }

    #[test]
    fn induced_extremes() {
        let x = Complex::of(&[&[1, 2, 3], &[3, 4]]);
        let all = x.vertex_list();
        assert_eq!(sample_induced(&x, |_| 1.0, 3), x);
        assert_eq!(sample_induced_view(&x, |_| 1.0, 3).induced_on(&all), x);
        assert!(sample_induced(&x, |_| 0.0, 3).is_empty());
    }
}
