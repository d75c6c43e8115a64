//! Checks the extension property on a window of the arithmetic complex.

use rado::ample::{find_witness, is_ample_window, WitnessQuery};
use rado::arith::ArithmeticRado;
use rado::grow::grow;
use rado::{Complex, Vertex};

fn main() -> rado::Result<()> {
    let x = grow(3, Some(2))?.top().clone();
    let umax: Vec<Vertex> = x.vertices().iter().take(4).cloned().collect();
    let report = is_ample_window(&x, &umax, 2)?;
    println!("{}", report.to_json());

    let window = ArithmeticRado::new().with_window_cap(40).window(&(1..=30u64).map(Vertex::from).collect::<Vec<_>>())?;
    let q = WitnessQuery::new([Vertex::from(1u64)], Complex::empty());
    match find_witness(&window, &q, None)? {
        Some(v) => println!("in 1..=30, vertex {v} has no edge to 1"),
        None => println!("no witness inside 1..=30"),
    }
    Ok(())
}
