// Exact identities for the family with reduced automorphism group Z/2 x Z/4.

use hyp3::z2z4::full_suite;

fn main() -> hyp3::Result<()> {
    let outcome = full_suite(1e-10)?;
    for c in &outcome.checks {
        println!("[{}] {}", if c.pass { "ok  " } else { "FAIL" }, c.name);
    }
    println!("\nnotes (not gating):");
    for n in &outcome.notes {
        println!("[{}] {}", if n.pass { "ok  " } else { "no  " }, n.name);
    }
    Ok(())
}
