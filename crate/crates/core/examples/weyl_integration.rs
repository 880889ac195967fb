//! Weyl integration on `SU(2)` with the density `D`: irreducible characters are orthonormal.

use dimdatum::affine::{weyl_inner, weyl_integration_check};

fn main() -> dimdatum::Result<()> {
    for n in [64, 512] {
        for d in 1..=5 {
            let v = weyl_integration_check(d, n)?;
            println!("N = {n:>3}, d = {d}: ∫|χ_d|² D = {v:.15}");
        }
    }
    println!("⟨χ_2, χ_3⟩ = {:.2e}", weyl_inner(2, 3, 512)?.norm());
    Ok(())
}
