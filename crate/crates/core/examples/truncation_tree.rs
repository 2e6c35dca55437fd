//! Truncation trees of monomials and generator trees of ideals.
//!
//! Run with `cargo run --example truncation_tree`.

use wstable::parse::show;
use wstable::{parse_ideal, parse_monomial, tree_from_ideal, tree_from_monomial, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (m, _) = parse_monomial("x2^2*x3", None)?;
    let w = WeightVector::new(vec![4, 2, 1])?;
    let tree = tree_from_monomial(&m, &w, None)?;
    println!("T for {m} under (4,2,1), {} vertices:", tree.vertex_count());
    print!("{}", tree.render(|v| v.to_string()));
    let mut sinks: Vec<_> = tree.sinks().collect();
    sinks.sort_by(|a, b| a.graded_cmp(b));
    let sinks: Vec<String> = sinks.iter().map(ToString::to_string).collect();
    println!("sinks (the closure's generators): {}", sinks.join(", "));

    // Under standard weights x1*x3 is not reached.
    let flat = tree_from_monomial(&m, &WeightVector::ones(3), None)?;
    println!("x1*x3 is a vertex under (1,1,1): {}", flat.vertices().any(|v| v.to_string() == "x1*x3"));

    let expr = parse_ideal("x^3, x^2*y, x*y^3, x*y^2*z", None)?;
    let t = tree_from_ideal(&expr.ideal);
    let label = |v: &wstable::Monomial| show(v, expr.naming).to_string();
    println!("\ngenerator tree of {}:", show(&expr.ideal, expr.naming));
    print!("{}", t.render(label));
    let subsinks: Vec<String> = t.subsinks().map(label).collect();
    println!("subsinks: {}", subsinks.join(", "));
    Ok(())
}
