//! Rational points by second intersection with lines through the origin,
//! and a bounded integer point search.

use pure_betti::dioph::{integer_point_search, primitive_integer_point, rational_point, realizing_points, ProductEquation, SecondIntersection};
use pure_betti::exact::Rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let eq = ProductEquation::codim3_b1_equals_2();
    println!("{eq}");
    for (p, q) in [(3, 1), (10, 3), (7, 2), (1, 1)] {
        let slopes = [Rational::from_integer(1.into()), Rational::new(p.into(), q.into())];
        match rational_point(&eq, &slopes)? {
            Ok(SecondIntersection::Point(pt)) => {
                println!("  slope {p}/{q}: {:?}", primitive_integer_point(&pt).iter().map(|v| v.to_string()).collect::<Vec<_>>())
            }
            Ok(SecondIntersection::Origin) => println!("  slope {p}/{q}: tangent at the origin"),
            Err(why) => println!("  slope {p}/{q}: {why}"),
        }
    }
    println!("integer points up to 25: {:?}", integer_point_search(&eq, 25)?);
    println!("realizing B_0 = 1, B_1 = 2: {:?}", realizing_points(&eq, 25)?);

    let eq4 = ProductEquation::new(4, 1, 1, 2)?;
    println!("{eq4}: {:?}", integer_point_search(&eq4, 40)?);
    Ok(())
}
