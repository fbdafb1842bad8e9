// The symplectic action on the Siegel upper half-space, and how theta-null transforms.

use hyp3::siegel::{automorphy_determinant, siegel_action, SiegelPoint, SymplecticMatrix};
use hyp3::theta::theta_null;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hyp3::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let tau = SiegelPoint::random(&mut rng, 3, 1.2);
    let gamma = SymplecticMatrix::random_word(&mut rng, 3, 4);
    let image = siegel_action(&gamma, &tau)?;
    println!("min eigenvalue of Im tau       = {:.4}", tau.min_imag_eigenvalue());
    println!("min eigenvalue of Im gamma.tau = {:.4}", image.min_imag_eigenvalue());

    // theta-null is a modular form of weight 18: |θ(γτ)| = |det(Cτ+D)|^18 |θ(τ)|.
    let before = theta_null(&tau, 1e-14)?.value;
    let after = theta_null(&image, 1e-14)?.value;
    let factor = automorphy_determinant(&gamma, &tau).norm().powi(18);
    println!("|theta_null(gamma.tau)|                 = {:.12e}", after.norm());
    println!("|det(C tau + D)|^18 |theta_null(tau)|   = {:.12e}", factor * before.norm());
    println!("relative difference                     = {:.1e}", (after.norm() / (factor * before.norm()) - 1.0).abs());
    Ok(())
}
