//! Palindromic Betti vectors in codimension 5 and 6 that pass the structural
//! rules but would break the total bound, searched up to a bound on z.

use pure_betti::gorenstein::{candidate_pairs, gor_constraints, gor_search, GorShape};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bound = 120;
    for c in [5, 6] {
        let shape = GorShape::new(c)?;
        println!("c = {c}, D = {}", shape.template());
        let cands = candidate_pairs(c)?;
        let mut nonempty = 0;
        for cand in &cands {
            let hits = gor_search(c, cand.a, cand.b, bound)?;
            if !hits.is_empty() {
                nonempty += 1;
                println!("  ({}, {}): {hits:?}", cand.a, cand.b);
            }
        }
        println!("  {} pairs, {nonempty} with points up to z = {bound}", cands.len());
    }
    let eqs = gor_constraints(5, 10, 11)?.display_equations();
    println!("X_(10,11): {}\n           {}", eqs[0], eqs[1]);
    println!("points: {:?}", gor_search(5, 10, 11, bound)?);
    Ok(())
}
