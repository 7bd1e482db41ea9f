//! Which multiples L * B(D) survive the structural rules.

use pure_betti::exact::DegreeSequence;
use pure_betti::rules::min_multiplier;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [("{0,1,3,4}", false), ("{0,1,5,6}", false), ("{0,3,5,8}", true), ("{0,1,2,3}", false)];
    for (text, gorenstein) in cases {
        let d: DegreeSequence = text.parse()?;
        let cert = min_multiplier(&d, gorenstein, 10);
        let excluders: Vec<&str> = cert.excluders(1).iter().map(|r| r.name()).collect();
        println!("{d:<12} gorenstein={gorenstein:<5} min L = {:?}  L = 1 excluded by {excluders:?}", cert.min_l());
    }
    Ok(())
}
