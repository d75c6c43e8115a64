//! Evaluates cylinder, induced and extension probabilities.

use rado::randomness::{
    cylinder_measure, extension_probability, induced_measure, lemma21_sum_exact, CylinderSet, ProbabilitySystem,
};
use rado::{Complex, Vertex};

fn main() -> rado::Result<()> {
    let sys = ProbabilitySystem::constant(0.37)?;
    let edge = Complex::of(&[&[1, 2]]);
    println!("exact sum over subcomplexes of an edge: {}", lemma21_sum_exact(&edge, &sys)?);

    let cyl = CylinderSet::new(Complex::of(&[&[1, 2], &[3]]), 3)?;
    println!("P(X on 1..=3 is an edge plus a point) = {}", cylinder_measure(&cyl, &sys)?);

    let u: Vec<Vertex> = vec![2u64.into(), 5u64.into()];
    println!("P(X on {{2, 5}} is two points) = {}", induced_measure(&u, &Complex::of(&[&[2], &[5]]), &sys)?);

    let l = Complex::of(&[&[1, 2]]);
    let a = Complex::of(&[&[1]]);
    println!("P(link trace of 9 on the edge is {{1}}) = {}", extension_probability(&l, &a, &Vertex::from(9u64), &sys)?);
    Ok(())
}
