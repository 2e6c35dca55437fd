//! Driving the command-line front end in-process, including JSON output.
//!
//! Run with `cargo run --example command_line`. The `wstable` binary accepts
//! the same arguments.

use wstable::cli::run;

fn main() {
    let calls: [&[&str]; 4] = [
        &["closure", "x1*x2*x3^2", "--weights", "3,2,1"],
        &["catalan", "x1*x2*x3^2"],
        &["weight-vector", "x^3, x^2*y, x*y^3, x*y^2*z", "--json"],
        &["is-wstable", "x1^2, x2^2"],
    ];
    for args in calls {
        let out = run(std::iter::once("wstable").chain(args.iter().copied()), &mut std::io::empty());
        println!("$ wstable {}", args.join(" "));
        print!("{}{}", out.stdout, out.stderr);
        println!("(exit {})\n", out.code);
    }
}
