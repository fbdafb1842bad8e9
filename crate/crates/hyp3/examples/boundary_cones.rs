// The eight boundary cones and the minimal exponents of the theta-null on each.

use hyp3::cones::{aggregated_minimum, cone_catalog, minimal_valuations};
use hyp3::theta::Characteristic;

fn main() -> hyp3::Result<()> {
    for cone in cone_catalog() {
        print!("{:<6} rank {}  dim {}", cone.name.to_string(), cone.rank, cone.dimension);
        if cone.rank == 3 {
            let (total, attained) = aggregated_minimum(&cone, 3)?;
            let shown: Vec<String> = total.iter().map(|r| r.to_string()).collect();
            print!("  lowest theta-null exponents [{}] attained={attained}", shown.join(", "));
        }
        println!();
    }

    let k3 = cone_catalog().into_iter().find(|c| c.rank == 3).expect("a rank-3 cone");
    let ch = Characteristic::parse("110;110")?;
    let mv = minimal_valuations(&k3, &ch, 3)?;
    let shown: Vec<String> = mv.min.iter().map(|r| r.to_string()).collect();
    println!("\ntheta{ch} on {}: minimal exponents [{}]", k3.name, shown.join(", "));
    Ok(())
}
