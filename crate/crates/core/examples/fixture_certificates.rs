//! Classifies the stored curve components and reports whether any carries
//! an admissible point.

use pure_betti::gorenstein::verify_fixture_components;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for c in [5, 6] {
        let cert = verify_fixture_components(c, None)?;
        println!("c = {c} ({})", cert.source);
        for comp in &cert.components {
            println!("  {:?} {}: {:?}", comp.pair, comp.component, comp.verdict);
        }
        println!(
            "  {} curves, {} degenerate, {} admissible points",
            cert.curve_components, cert.degenerate_components, cert.admissible_points
        );
    }
    Ok(())
}
