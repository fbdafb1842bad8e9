// Leading coefficients of the theta-null near the boundary, checked along rays.

use hyp3::cones::ConeName;
use hyp3::exact::RootOfUnity;
use hyp3::fourier_jacobi::{lot_coefficient, lot_monomial, lot_numeric_verify, lot_secondary_verify, RayAnchor, RAY_HEIGHTS};
use hyp3::Complex64;

fn main() -> hyp3::Result<()> {
    let bounded: Vec<Complex64> = [(1, 3), (1, 4), (2, 5)].iter().map(|&(k, n)| RootOfUnity::from_fraction(k, n).to_complex()).collect();
    for name in ConeName::RANK3 {
        let needed = match lot_coefficient(name, &[]) {
            Ok(_) => 0,
            Err(_) => (1..=3).find(|&k| lot_coefficient(name, &bounded[..k]).is_ok()).unwrap_or(0),
        };
        let vals = &bounded[..needed];
        let coeff = lot_coefficient(name, vals)?;
        println!("{name:<6} monomial {:?}  coefficient {:.6}", lot_monomial(name)?, coeff);
        match lot_numeric_verify(name, &RayAnchor::standard(name, vals.to_vec()), &RAY_HEIGHTS) {
            Ok(rep) => println!("       ratio deviations along the ray: {:?}", rep.deviations.iter().map(|d| format!("{d:.1e}")).collect::<Vec<_>>()),
            Err(e) => println!("       {e}"),
        }
    }

    // Where the leading coefficient vanishes the next term takes over.
    let rep = lot_secondary_verify(bounded[0], bounded[1], &RAY_HEIGHTS)?;
    println!("\nsecondary term: predicted {:.6}, deviations {:?}", rep.predicted, rep.deviations.iter().map(|d| format!("{d:.1e}")).collect::<Vec<_>>());
    Ok(())
}
