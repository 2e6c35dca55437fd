//! Weighted Catalan diagrams and the generator counts they encode.
//!
//! Run with `cargo run --example catalan`.

use wstable::{catalan_diagram, generator_stats, parse_monomial, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (m, _) = parse_monomial("x1*x2^3*x3^2", None)?;
    let w = WeightVector::new(vec![3, 2, 1])?;
    let d = catalan_diagram(&m, &w)?;
    println!("Catalan diagram of {m} under (3,2,1), weighted degree {}:", d.degree());
    print!("{}", d.render());

    let (m, _) = parse_monomial("x1*x2*x3^2", None)?;
    for weights in [vec![1, 1, 1], vec![3, 2, 1]] {
        let w = WeightVector::new(weights)?;
        let d = catalan_diagram(&m, &w)?;
        println!("\ngenerators of the ({w})-closure of {m} by degree and largest variable:");
        for s in generator_stats(&d) {
            println!("  degree {:>2}, x{}: {}", s.degree, s.max_index + 1, s.count);
        }
    }
    Ok(())
}
