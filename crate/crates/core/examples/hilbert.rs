//! Hilbert series and Stanley decompositions of quotients by w-stable ideals.
//!
//! Run with `cargo run --example hilbert`.

use wstable::parse::show;
use wstable::{hilbert_series, parse_ideal, principal_closure, stanley_decomposition, Monomial, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = WeightVector::new(vec![3, 2, 1])?;
    let i = principal_closure(&Monomial::new(vec![1, 1, 2]), &w)?;
    let hs = hilbert_series(&i, &w)?;
    println!("S/({i}) with deg = (3,2,1)");
    println!("  HS = {}", hs.render());
    for t in hs.terms().unwrap_or_default() {
        let free: Vec<String> = (t.k + 1..3).map(|j| format!("x{}", j + 1)).collect();
        println!("  {} coset(s) in degree {}, free variables [{}]", t.coefficient, t.degree, free.join(", "));
    }
    let values: Vec<String> = hs.expand(15).iter().map(ToString::to_string).collect();
    println!("  Hilbert function 0..=15: {}", values.join(" "));

    // A non-principal w-stable ideal goes through the general decomposition.
    let expr = parse_ideal("x^2, x*y, x*z, y^3, y^2*z, y*z^2, z^4", None)?;
    let w = WeightVector::new(vec![5, 3, 2])?;
    let sd = stanley_decomposition(&expr.ideal, &w)?;
    println!("\nStanley decomposition of S/({}) under (5,3,2):", show(&expr.ideal, expr.naming));
    for p in &sd.pieces {
        let free: Vec<String> = p.free_vars.iter().map(|j| ["x", "y", "z"][*j].to_string()).collect();
        println!("  {} * K[{}]", show(&p.coset, expr.naming), free.join(", "));
    }
    println!("  numerator: {}", hilbert_series(&expr.ideal, &w)?.numerator());
    Ok(())
}
