//! Finds a small complex as an induced subcomplex of a larger one.

use rado::ample::embed_complex;
use rado::grow::grow;
use rado::Complex;

fn main() -> rado::Result<()> {
    let host = grow(3, Some(3))?.top().clone();
    let hollow = Complex::of(&[&[1, 2], &[2, 3], &[1, 3]]);
    match embed_complex(&host, &hollow)? {
        Some(iso) => {
            let image: Vec<_> = iso.left();
            println!("hollow triangle lands on {image:?}: {}", host.induced(&image));
        }
        None => println!("no embedding found"),
    }
    Ok(())
}
