//! Draws a random complex and reports its shape.

use rado::randomness::{sample_complex, ProbabilitySystem};

fn main() -> rado::Result<()> {
    let seed = 2024;
    for text in [
        r#"{"kind":"constant","p":0.5}"#,
        r#"{"kind":"per-size","sizes":[0.9,0.6,0.3],"default":0.1}"#,
        r#"{"kind":"seeded-range","seed":5,"low":0.2,"high":0.8}"#,
    ] {
        let sys = ProbabilitySystem::from_json_str(text)?;
        let x = sample_complex(14, &sys, seed);
        println!("{text}\n  seed {seed}: f-vector {:?}, dimension {:?}", x.f_vector(), x.dim());
    }
    Ok(())
}
