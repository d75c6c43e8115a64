//! Round-trips a complex through the JSON interchange format.

use rado::format::{from_json_str, to_json_string};
use rado::Complex;

fn main() -> rado::Result<()> {
    let x = Complex::of(&[&[1, 2, 3], &[3, 4]]);
    let text = to_json_string(&x);
    println!("{text}");
    assert_eq!(from_json_str(&text)?, x);
    Ok(())
}
