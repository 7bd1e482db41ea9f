//! The codimension 3 sequences with B_1 = 2, generated by the recursion and
//! checked against v^2 = 2u^2 + 1.

use pure_betti::codim3::pell_family;

fn main() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    for m in pell_family(n) {
        let (u, v) = m.pell_pair();
        println!("{:>2}  D = {:<40} B = {:<30} (u, v) = ({u}, {v}) ok={}", m.n, m.d.to_string(), m.b.to_string(), m.satisfies_pell());
    }
}
