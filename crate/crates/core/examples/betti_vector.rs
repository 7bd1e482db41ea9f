//! Herzog-Kühl vector, its integer multiple and the Betti diagram of a pure
//! degree sequence.
//!
//! cargo run --example betti_vector -- "{0,2,3,8}"

use pure_betti::exact::DegreeSequence;
use pure_betti::herzog_kuhl::{b_vector, conjecture_report, pi_vector, render_betti_diagram};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "{0,2,3,8}".to_string());
    let d: DegreeSequence = arg.parse()?;
    let pi = pi_vector(&d);
    let b = b_vector(&d);
    println!("D  = {d}");
    println!("pi = {{{}}}", pi.strings().join(","));
    println!("B  = {b}");
    println!();
    print!("{}", render_betti_diagram(&d, &b, true)?);

    let report = conjecture_report(&b);
    if report.any_violation() {
        println!("violates: binomial at {:?}, total {} vs {}", report.conj1_violations, report.total, report.conj2_threshold);
    }
    Ok(())
}
