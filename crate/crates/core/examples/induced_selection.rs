//! Keeps vertex n with probability 0.97^n and looks at what survives.

use rado::randomness::{sample_induced_view, ProbabilitySystem, RandomComplex};
use rado::view::ComplexView;

fn main() {
    let x = RandomComplex::new(400, ProbabilitySystem::half(), 9);
    for seed in 0..5 {
        let part = sample_induced_view(&x, |v| 0.97f64.powf(v.as_u64().unwrap_or(u64::MAX) as f64), seed);
        let kept = part.vertex_list();
        println!("seed {seed}: kept {kept:?}");
    }
}
