//! B of the dual sequence is B reversed.

use pure_betti::exact::DegreeSequence;
use pure_betti::herzog_kuhl::b_vector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["{0,2,3,8}", "{0,3,4,8}", "{0,3,4,10,11,14}"] {
        let d: DegreeSequence = text.parse()?;
        let dual = d.dual();
        let (b, bd) = (b_vector(&d), b_vector(&dual));
        println!("{d} -> {dual}: {b} / {bd} (reversed: {}, self-dual: {})", bd == b.reversed(), d.is_self_dual());
    }
    Ok(())
}
