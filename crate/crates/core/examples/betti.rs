//! Poincaré series and Betti numbers from the Eliahou–Kervaire formula.
//!
//! Run with `cargo run --example betti`.

use wstable::{betti_numbers, poincare_series, principal_closure, Monomial, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = Monomial::new(vec![1, 1, 2]);
    for weights in [vec![1, 1, 1], vec![3, 2, 1]] {
        let w = WeightVector::new(weights)?;
        let i = principal_closure(&m, &w)?;
        println!("closure of {m} under ({w}): {i}");
        println!("  P(u,t) = {}", poincare_series(&i, &w)?);
        print!("{}", indent(&betti_numbers(&i, &w)?.render_table()));
    }

    // Totals do not depend on the grading: regrade the (3,2,1)-closure.
    let w = WeightVector::new(vec![3, 2, 1])?;
    let i = principal_closure(&m, &w)?;
    println!("the same ideal with standard degrees:");
    print!("{}", indent(&betti_numbers(&i, &WeightVector::ones(3))?.render_table()));
    Ok(())
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}
