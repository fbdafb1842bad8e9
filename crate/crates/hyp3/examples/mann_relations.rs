// Vanishing sums of roots of unity: solver versus brute force.

use hyp3::roots::{analyze_c4_factors, brute_force_vanishing, solve_vanishing_sum, Relation};

fn main() -> hyp3::Result<()> {
    for coeffs in [vec![1, 1, 1], vec![1, 1, 1, 1], vec![1, -1, 1, -1, 1]] {
        let rel = Relation::from_ints(&coeffs)?;
        let sol = solve_vanishing_sum(&rel)?;
        println!("coefficients {coeffs:?}: {} solution families", sol.families.len());
        for f in sol.families.iter().take(4) {
            println!("  blocks {:?}  free rotations {}", f.partition, f.free_rotations());
        }
        if sol.families.len() > 4 {
            println!("  …");
        }
        let agree = sol.tuples_of_order(12) == brute_force_vanishing(&rel, 12)?;
        println!("  agrees with brute force over the 12th roots of unity: {agree}");
    }

    println!("\nzeros of the four sign-twisted three-term factors:");
    for s in analyze_c4_factors()? {
        println!("  {s:?}");
    }
    Ok(())
}
