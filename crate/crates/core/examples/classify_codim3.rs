//! Bounded codimension 3 classifications: B_1 = 2, B_2 = 2, and sum B < 12.

use pure_betti::codim3::{search_b1_equals_2, search_b2_equals_2, search_sum_lt_12};
use pure_betti::herzog_kuhl::b_vector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let bound = 2000;
    println!("B_1 = 2, d_3 <= {bound}:");
    for d in search_b1_equals_2(bound)? {
        println!("  {d}  {}", b_vector(&d));
    }
    println!("B_2 = 2, d_3 <= {bound}:");
    for d in search_b2_equals_2(bound)? {
        println!("  {d}  {}", b_vector(&d));
    }
    let scan = search_sum_lt_12(bound)?;
    println!("sum B < 12, d_3 <= {bound} ({} exact checks):", scan.exact_checks);
    for row in scan.rows {
        println!("  {}  {}  sum {}", row.d, row.b, row.total);
    }
    Ok(())
}
