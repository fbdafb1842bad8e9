// Theta constants in genus 1 and 3: values, parity and the product of even constants.

use hyp3::siegel::SiegelPoint;
use hyp3::theta::{even_theta_constants, odd_characteristics, theta, theta_null, Characteristic};
use hyp3::Complex64;

fn main() -> hyp3::Result<()> {
    let i = Complex64::new(0.0, 1.0);
    let tau = SiegelPoint::diagonal(&[i])?;
    for ch in ["0,0", "1,0", "0,1", "1,1"] {
        let c = Characteristic::parse(ch)?;
        let v = theta(&c, &tau, &[Complex64::new(0.0, 0.0)], 1e-14)?;
        println!("theta{c}(i) = {:.12}   (tail bound {:.1e})", v.value, v.tail_bound);
    }

    let c = |re: f64, im: f64| Complex64::new(re, im);
    let tau3 = SiegelPoint::from_rows(&[
        &[c(0.1, 1.3), c(0.2, 0.3), c(-0.1, 0.1)],
        &[c(0.2, 0.3), c(-0.3, 1.1), c(0.05, 0.2)],
        &[c(-0.1, 0.1), c(0.05, 0.2), c(0.4, 1.5)],
    ])?;
    let evens = even_theta_constants(&tau3, 1e-13)?;
    println!("\n{} even characteristics in genus 3:", evens.len());
    for (ch, v) in &evens {
        println!("  {ch}  {:.10}", v.value);
    }
    let zero = vec![Complex64::new(0.0, 0.0); 3];
    let worst_odd = odd_characteristics(3)?
        .iter()
        .map(|ch| theta(ch, &tau3, &zero, 1e-13).map(|v| v.value.norm()))
        .collect::<hyp3::Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    println!("largest |odd theta constant| = {worst_odd:.1e}");
    println!("theta-null (product of the 36 even constants) = {:.6e}", theta_null(&tau3, 1e-13)?.value);
    Ok(())
}
