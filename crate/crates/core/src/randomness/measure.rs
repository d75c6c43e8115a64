use std::collections::HashMap;
use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::One;

use super::ProbabilitySystem;
use crate::complex::{external_simplexes, Complex};
use crate::error::{Error, Result};
use crate::simplex::Simplex;
use crate::vertex::Vertex;

/// Largest `n` accepted by [`cylinder_measure`] and largest `|U|` for [`induced_measure`].
pub const CYLINDER_BOUND: usize = 12;
/// Largest `|F(L)|` accepted by [`lemma21_bruteforce`].
pub const BRUTEFORCE_BOUND: usize = 20;

trait Weight: Clone + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> {}
impl<T: Clone + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T>> Weight for T {}

fn product<'a, T: Weight>(
    present: impl IntoIterator<Item = &'a Simplex>,
    absent: impl IntoIterator<Item = &'a Simplex>,
    p: &impl Fn(&Simplex) -> T,
) -> T {
    let mut acc = T::one();
    for s in present {
        acc = acc * p(s);
    }
    for s in absent {
        acc = acc * (T::one() - p(s));
    }
    acc
}

fn p_of_with<T: Weight>(a: &Complex, l: &Complex, p: &impl Fn(&Simplex) -> T) -> Result<T> {
    let ext = external_simplexes(a, l)?;
    Ok(product(a.simplexes(), &ext, p))
}

/// `p(A) = Π_{σ∈A} p_σ · Π_{σ∈E(A|L)} q_σ`.
pub fn p_of_subcomplex(a: &Complex, l: &Complex, sys: &ProbabilitySystem) -> Result<f64> {
    p_of_with(a, l, &|s: &Simplex| sys.p(s))
}

pub fn p_of_subcomplex_exact(a: &Complex, l: &Complex, sys: &ProbabilitySystem) -> Result<BigRational> {
    p_of_with(a, l, &|s: &Simplex| sys.p_exact(s))
}

fn sum_with<T: Weight>(l: &Complex, p: &impl Fn(&Simplex) -> T) -> Result<T> {
    let mut acc: Option<T> = None;
    for a in l.subcomplexes()? {
        let term = p_of_with(&a, l, p)?;
        acc = Some(match acc {
            Some(s) => s + term,
            None => term,
        });
    }
    Ok(acc.expect("the empty subcomplex is always enumerated"))
}

/// `Σ_{A ⊆ L} p(A)`, which is 1.
pub fn lemma21_sum(l: &Complex, sys: &ProbabilitySystem) -> Result<f64> {
    sum_with(l, &|s: &Simplex| sys.p(s))
}

pub fn lemma21_sum_exact(l: &Complex, sys: &ProbabilitySystem) -> Result<BigRational> {
    sum_with(l, &|s: &Simplex| sys.p_exact(s))
}

/// Result of the brute-force normalization check.
#[derive(Debug, Clone)]
pub struct BruteForce<T> {
    pub total: T,
    /// Mass of the event "the largest subcomplex inside the chosen set is `A`", per `A`.
    pub marginals: Vec<(Complex, T)>,
}

/// Independent check of the normalization: every subset `J ⊆ F(L)` gets weight
/// `Π_{σ∈J} p_σ · Π_{σ∉J} q_σ` and is credited to `A(J)`, the largest
/// subcomplex contained in `J`.
pub fn lemma21_bruteforce(l: &Complex, sys: &ProbabilitySystem) -> Result<BruteForce<f64>> {
    bruteforce_with(l, &|s: &Simplex| sys.p(s))
}

pub fn lemma21_bruteforce_exact(l: &Complex, sys: &ProbabilitySystem) -> Result<BruteForce<BigRational>> {
    bruteforce_with(l, &|s: &Simplex| sys.p_exact(s))
}

fn bruteforce_with<T: Weight>(l: &Complex, p: &impl Fn(&Simplex) -> T) -> Result<BruteForce<T>> {
    let n = l.len();
    if n > BRUTEFORCE_BOUND {
        return Err(Error::size("simplex count for brute force", n, BRUTEFORCE_BOUND));
    }
    let simplexes: Vec<&Simplex> = l.simplexes().iter().collect();
    let index: HashMap<&Simplex, usize> = simplexes.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    // all faces of σ, σ included
    let face_masks: Vec<u32> =
        simplexes.iter().map(|s| s.faces().fold(0u32, |m, f| m | 1 << index[&f])).collect();
    let ps: Vec<T> = simplexes.iter().map(|s| p(s)).collect();
    let mut by_core: HashMap<u32, T> = HashMap::new();
    for j in 0u32..(1u32 << n) {
        let mut w = T::one();
        let mut core = 0u32;
        for i in 0..n {
            if j >> i & 1 == 1 {
                w = w * ps[i].clone();
                if face_masks[i] & !j == 0 {
                    core |= 1 << i;
                }
            } else {
                w = w * (T::one() - ps[i].clone());
            }
        }
        by_core.entry(core).and_modify(|acc| *acc = acc.clone() + w.clone()).or_insert(w);
    }
    let mut marginals: Vec<(Complex, T)> = by_core
        .into_iter()
        .map(|(mask, w)| {
            let set = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| simplexes[i].clone()).collect();
            (Complex::from_closed_set(set), w)
        })
        .collect();
    marginals.sort_by(|a, b| a.0.cmp(&b.0));
    let total = marginals.iter().skip(1).fold(marginals[0].1.clone(), |acc, (_, w)| acc + w.clone());
    Ok(BruteForce { total, marginals })
}

/// The cylinder `Z(Y, n)` of complexes whose restriction to `{1..n}` is `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylinderSet {
    y: Complex,
    n: usize,
}

impl CylinderSet {
    pub fn new(y: Complex, n: usize) -> Result<Self> {
        if let Some(v) = y.vertices().iter().find(|v| v.as_u64().is_none_or(|l| l > n as u64)) {
            return Err(Error::InvalidInput(format!("vertex {v} lies outside 1..={n}")));
        }
        Ok(CylinderSet { y, n })
    }

    pub fn y(&self) -> &Complex {
        &self.y
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// `μ(Z(Y, n)) = Π_{σ∈Y} p_σ · Π_{σ∈E(Y|Δ_n)} q_σ`, for `n <= CYLINDER_BOUND`.
pub fn cylinder_measure(c: &CylinderSet, sys: &ProbabilitySystem) -> Result<f64> {
    let u: Vec<Vertex> = (1..=c.n as u64).map(Vertex::from).collect();
    induced_measure(&u, &c.y, sys)
}

/// Probability that the random complex restricted to `U` is exactly `L`.
pub fn induced_measure(u: &[Vertex], l: &Complex, sys: &ProbabilitySystem) -> Result<f64> {
    let u = crate::view::sorted_unique(u);
    if u.len() > CYLINDER_BOUND {
        return Err(Error::size("vertex count of the ambient simplex", u.len(), CYLINDER_BOUND));
    }
    if let Some(v) = l.vertices().iter().find(|v| u.binary_search(v).is_err()) {
        return Err(Error::NotSubcomplex(format!("vertex {v} lies outside U")));
    }
    let full = Complex::full_simplex(&u)?;
    p_of_subcomplex(l, &full, sys)
}

/// Conditional probability that a new vertex `v` shows up with link trace
/// exactly `A` on `L`: `p_v · Π_{σ∈A} p_{σ∪v} · Π_{σ∈E(A|L)} q_{σ∪v}`.
pub fn extension_probability(l: &Complex, a: &Complex, v: &Vertex, sys: &ProbabilitySystem) -> Result<f64> {
    if l.has_vertex(v) {
        return Err(Error::ApexCollision(v.clone()));
    }
    let ext = external_simplexes(a, l)?;
    let coned_a: Vec<Simplex> = a.simplexes().iter().map(|s| s.with(v)).collect();
    let coned_e: Vec<Simplex> = ext.iter().map(|s| s.with(v)).collect();
    Ok(sys.p(&Simplex::vertex(v.clone())) * product(&coned_a, &coned_e, &|s: &Simplex| sys.p(s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-12;

    fn v(l: u64) -> Vertex {
        Vertex::from(l)
    }

    #[test]
    fn p_of_subcomplex_examples() {
        let sys = ProbabilitySystem::constant(0.3).unwrap();
        let edge = Complex::of(&[&[1, 2]]);
        let p = |a: &Complex| p_of_subcomplex(a, &edge, &sys).unwrap();
        assert!((p(&Complex::empty()) - 0.7 * 0.7).abs() < EPS);
        assert!((p(&Complex::of(&[&[1], &[2]])) - 0.3 * 0.3 * 0.7).abs() < EPS);
        assert!((p(&edge) - 0.3 * 0.3 * 0.3).abs() < EPS);
        assert!(p_of_subcomplex(&Complex::of(&[&[3]]), &edge, &sys).is_err());
    }

    #[test]
    fn normalization_small_cases() {
        let sys = ProbabilitySystem::seeded_range(11, 0.1, 0.9).unwrap();
        for l in [Complex::of(&[&[1]]), Complex::of(&[&[1, 2]]), Complex::of(&[&[1, 2, 3]])] {
            assert!((lemma21_sum(&l, &sys).unwrap() - 1.0).abs() < 1e-9);
            assert!(num_traits::One::is_one(&lemma21_sum_exact(&l, &sys).unwrap()));
        }
    }

    #[test]
    fn bruteforce_marginals() {
        let sys = ProbabilitySystem::seeded_range(5, 0.2, 0.8).unwrap();
        let point = Complex::of(&[&[4]]);
        let bf = lemma21_bruteforce(&point, &sys).unwrap();
        let p4 = sys.p(&Simplex::of(&[4]));
        assert_eq!(bf.marginals.len(), 2);
        assert!((bf.marginals[0].1 - (1.0 - p4)).abs() < EPS && (bf.marginals[1].1 - p4).abs() < EPS);
        for l in [Complex::of(&[&[1, 2]]), Complex::of(&[&[1, 2], &[1, 3], &[2, 3]])] {
            let bf = lemma21_bruteforce(&l, &sys).unwrap();
            assert!((bf.total - 1.0).abs() < 1e-12);
            assert_eq!(bf.marginals.len(), l.subcomplexes().unwrap().count());
            for (a, w) in &bf.marginals {
                assert!((w - p_of_subcomplex(a, &l, &sys).unwrap()).abs() < EPS);
            }
        }
    }

    #[test]
    fn cylinder_and_induced_examples() {
        let sys = ProbabilitySystem::seeded_range(2, 0.3, 0.7).unwrap();
        let p = |ls: &[u64]| sys.p(&Simplex::of(ls));
        let cyl = |y: Complex| cylinder_measure(&CylinderSet::new(y, 2).unwrap(), &sys).unwrap();
        assert!((cyl(Complex::empty()) - (1.0 - p(&[1])) * (1.0 - p(&[2]))).abs() < EPS);
        assert!((cyl(Complex::of(&[&[1, 2]])) - p(&[1]) * p(&[2]) * p(&[1, 2])).abs() < EPS);
        assert!((cyl(Complex::of(&[&[1], &[2]])) - p(&[1]) * p(&[2]) * (1.0 - p(&[1, 2]))).abs() < EPS);
        assert!(CylinderSet::new(Complex::of(&[&[3]]), 2).is_err());

        assert!((induced_measure(&[v(5)], &Complex::of(&[&[5]]), &sys).unwrap() - p(&[5])).abs() < EPS);
        let hollow = Complex::of(&[&[1, 2], &[1, 3], &[2, 3]]);
        let expect = p(&[1]) * p(&[2]) * p(&[3]) * p(&[1, 2]) * p(&[1, 3]) * p(&[2, 3]) * (1.0 - p(&[1, 2, 3]));
        assert!((induced_measure(&[v(1), v(2), v(3)], &hollow, &sys).unwrap() - expect).abs() < EPS);
        assert!(induced_measure(&[v(1)], &Complex::of(&[&[2]]), &sys).is_err());
    }

    #[test]
    fn extension_examples() {
        let sys = ProbabilitySystem::seeded_range(9, 0.3, 0.7).unwrap();
        let p = |ls: &[u64]| sys.p(&Simplex::of(ls));
        let l = Complex::of(&[&[1]]);
        let got = extension_probability(&l, &l, &v(4), &sys).unwrap();
        assert!((got - p(&[4]) * p(&[1, 4])).abs() < EPS);
        let got = extension_probability(&l, &Complex::empty(), &v(4), &sys).unwrap();
        assert!((got - p(&[4]) * (1.0 - p(&[1, 4]))).abs() < EPS);
        let got = extension_probability(&Complex::empty(), &Complex::empty(), &v(4), &sys).unwrap();
        assert!((got - p(&[4])).abs() < EPS);
        assert!(matches!(extension_probability(&l, &l, &v(1), &sys), Err(Error::ApexCollision(_))));
    }
}
