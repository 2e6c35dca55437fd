//! Which weight vectors make a strongly stable ideal the closure of a single
//! monomial.
//!
//! Run with `cargo run --example principal_cone`.

use wstable::parse::show;
use wstable::{cone_rays, constraint_system, parse_ideal, principal_weight_vector, PrincipalOutcome};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["x^3, x^2*y, x*y^3, x*y^2*z", "x^2, x*y, x*z, y^3, y^2*z, y*z^2, z^4"] {
        let expr = parse_ideal(text, None)?;
        let sys = constraint_system(&expr.ideal)?;
        println!("I = ({text}), candidate generator {}", show(&sys.candidate, expr.naming));
        for h in &sys.halfspaces {
            println!("  {h}");
        }
        let rays: Vec<String> = cone_rays(&sys)
            .rays
            .iter()
            .map(|r| format!("({})", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        println!("  rays of the closed cone: {}", rays.join(" "));
        match principal_weight_vector(&expr.ideal)? {
            PrincipalOutcome::Principal { weights, generator } => {
                println!("  I is the ({weights})-closure of {}", show(&generator, expr.naming))
            }
            PrincipalOutcome::NotPrincipal => println!("  no weight vector makes I principal"),
        }
        println!();
    }
    Ok(())
}
