//! Inductive irreducibility certificates by exact pseudo-division.

use dimdatum::lattice::Weight;
use dimdatum::polyfam::{family_poly, verify_irreducible_inductive, Family};

fn main() -> dimdatum::Result<()> {
    for (f, lam) in [
        (Family::B, Weight::from([2, 1])),
        (Family::BPrime, Weight::from([1, 1, 0])),
        (Family::C, Weight::from([2, 1, 0])),
        (Family::D, Weight::from([1, 1, -1])),
    ] {
        let p = family_poly(f, &lam)?;
        let cert = verify_irreducible_inductive(f, &lam)?;
        println!("{f}({lam}): {} terms, {:?} after {} steps", p.len(), cert.verdict, cert.steps.len());
        for s in &cert.steps {
            println!("  weight {:?}, top variable x{}, sign {}", s.weight, s.top_variable, s.sign);
        }
    }
    Ok(())
}
