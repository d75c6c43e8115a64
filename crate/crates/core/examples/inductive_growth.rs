//! Grows the cone construction level by level.

use rado::grow::grow;

fn main() -> rado::Result<()> {
    let rec = grow(2, None)?;
    for (n, level) in rec.levels().iter().enumerate() {
        println!("level {n}: {} vertices, {} simplexes", level.vertices().len(), level.len());
    }
    for (base, apex) in rec.apexes_over(1) {
        println!("  cone over {base} has apex {apex}");
    }

    // Restricting the bases keeps later levels manageable.
    let bounded = grow(4, Some(2))?;
    println!("bounded by 2, four levels: {} vertices", bounded.top().vertices().len());
    Ok(())
}
