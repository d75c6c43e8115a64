//! Extends a partial isomorphism between two sampled complexes.

use rado::ample::{back_and_forth_with, PartialIsomorphism};
use rado::randomness::{ProbabilitySystem, RandomComplex};

fn main() -> rado::Result<()> {
    let sys = ProbabilitySystem::half();
    let x = RandomComplex::new(600, sys.clone(), 1);
    let y = RandomComplex::new(600, sys, 2);
    let run = back_and_forth_with(&x, &y, PartialIsomorphism::empty(), 6, |iso| {
        let (x, y) = iso.pairs().last().expect("one pair per step");
        println!("matched {x} with {y}");
    })?;
    println!("{}", run.to_json());
    Ok(())
}
