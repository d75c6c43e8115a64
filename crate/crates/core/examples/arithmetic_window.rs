//! Builds a window of the arithmetic complex and checks a closed-form witness.

use rado::arith::ArithmeticRado;
use rado::{Complex, Vertex};

fn main() -> rado::Result<()> {
    let ar = ArithmeticRado::new();
    let labels: Vec<Vertex> = (1..=12u64).map(Vertex::from).collect();
    let window = ar.window(&labels)?;
    println!("window on 1..=12: f-vector {:?}", window.f_vector());
    for facet in window.facets() {
        println!("  facet {facet}");
    }

    let u: Vec<Vertex> = vec![1u64.into(), 2u64.into()];
    let a = Complex::of(&[&[1]]);
    let w = ar.witness(&u, &a)?;
    let mut around = u.clone();
    around.push(w.clone());
    let lk = ar.window(&around)?.link(&rado::Simplex::vertex(w.clone()))?;
    println!("witness for U = {{1, 2}}, A = {{1}}: {w}; link trace {}", lk.induced(&u));
    Ok(())
}
