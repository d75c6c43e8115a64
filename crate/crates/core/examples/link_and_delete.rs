//! Links and star deletions, explicit and lazy.

use rado::randomness::{ProbabilitySystem, RandomComplex};
use rado::view::{ComplexView, DeletedStar, LinkView};
use rado::{Complex, Simplex, Vertex};

fn main() -> rado::Result<()> {
    let x = Complex::of(&[&[1, 2, 3], &[2, 3, 4], &[4, 5]]);
    println!("link of 23: {}", x.link(&Simplex::of(&[2, 3]))?);
    println!("without the star of 4: {}", x.delete_star(&[Simplex::of(&[4])])?);

    let big = RandomComplex::new(300, ProbabilitySystem::half(), 4);
    let first: Vec<Vertex> = big.vertex_list().into_iter().take(10).collect();
    let v = Simplex::vertex(first[0].clone());
    let lk = LinkView::new(&big, v.clone())?;
    println!("vertex {v} has {} neighbours", lk.vertex_list().len());
    let rest = DeletedStar::new(&big, vec![v])?;
    println!("first ten labels after deleting its star: {}", rest.induced_on(&first));
    Ok(())
}
