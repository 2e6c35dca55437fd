//! Weighted Borel closures, w-stability and weighted Borel generators.
//!
//! Run with `cargo run --example closure`.

use wstable::{
    borel_closure, is_w_stable, parse_ideal, parse_monomial, w_borel_gens, w_closure, MonomialIdeal, WeightVector,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // (x1, x2^2) is closed under the weights (2,1).
    let w21 = WeightVector::new(vec![2, 1])?;
    let i = parse_ideal("x1, x2^2", None)?.ideal;
    println!("closure of {i} under (2,1): {}", w_closure(i.gens(), &w21)?);
    println!("w-stable under (2,1): {}", is_w_stable(&i, &w21)?);
    // (x1^2, x2^2) is not even strongly stable: x1*x2 is missing.
    let k = parse_ideal("x1^2, x2^2", None)?.ideal;
    println!("{k} is strongly stable: {}", is_w_stable(&k, &WeightVector::ones(2))?);

    // One weighted Borel generator can replace several ordinary ones.
    let j = parse_ideal("x1^2, x1*x2^2, x2^4", None)?.ideal;
    println!("weighted Borel generators of {j} under (2,1): {:?}", names(&w_borel_gens(&j, &w21)?));

    // The same monomial under two gradings.
    let (m, _) = parse_monomial("x1*x2*x3^2", None)?;
    let standard = borel_closure([&m], 3)?;
    let w321 = WeightVector::new(vec![3, 2, 1])?;
    let weighted = w_closure([&m], &w321)?;
    println!("Borel closure of {m}: {} generators", standard.len());
    println!("  {standard}");
    println!("(3,2,1)-closure of {m}: {} generators", weighted.len());
    println!("  {weighted}");
    println!("ordinary closure lies inside the weighted one: {}", contains_all(&weighted, &standard));
    Ok(())
}

fn names(ms: &[wstable::Monomial]) -> Vec<String> {
    ms.iter().map(ToString::to_string).collect()
}

fn contains_all(big: &MonomialIdeal, small: &MonomialIdeal) -> bool {
    small.gens().iter().all(|g| big.contains(g))
}
