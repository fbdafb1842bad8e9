// The one-parameter families Π_u(t): theta vanishing and the fixed-part lattice.

use hyp3::shimura::{compare_families, fixed_part_lattice, verify_vanishing, GaussianParameter};
use hyp3::Complex64;

fn main() -> hyp3::Result<()> {
    let t = [Complex64::new(0.0, 2.0), Complex64::new(0.2, 3.0), Complex64::new(-0.4, 1.5)];
    for n in [2, 3, 4, 5] {
        let u = GaussianParameter::diagonal(n);
        let rep = verify_vanishing(&u, &t, 1e-13)?;
        let fp = fixed_part_lattice(&u)?;
        println!(
            "u = {u:<10} max |theta[110;110]| = {:.1e}   min |other even| = {:.3e}   fixed-part degree {}",
            rep.max_target(),
            rep.min_other(),
            fp.degree
        );
    }

    let u = GaussianParameter::parse("1/3+2/5i")?;
    let cmp = compare_families(&u.a, &u.b)?;
    println!("\nexample family at u = {u} is Π_u shifted by {} (integral difference: {})", cmp.shift, cmp.difference_is_integral());
    Ok(())
}
