//! The five determinant families against their Weyl-sum definitions.

use dimdatum::lattice::Weight;
use dimdatum::polyfam::{family_poly, verify_det_equals_weylsum, Family};

fn main() -> dimdatum::Result<()> {
    let cases = [
        (Family::A, Weight::from([1, 0, -1])),
        (Family::B, Weight::from([1, 0])),
        (Family::BPrime, Weight::from([1, 0])),
        (Family::C, Weight::from([1])),
        (Family::D, Weight::from([1, 0])),
    ];
    for (f, lam) in cases {
        let p = family_poly(f, &lam)?;
        println!("{f}({lam}) = {p}");
        println!("  determinant = Weyl sum: {}", verify_det_equals_weylsum(f, &lam)?);
    }
    // b and b′ differ by σ up to the sign (−1)^(a_1 + ... + a_n)
    for lam in [Weight::from([1, 0]), Weight::from([1, 1])] {
        let b = family_poly(Family::B, &lam)?;
        let bp = family_poly(Family::BPrime, &lam)?;
        println!("σ(b({lam})) = b′: {}, σ(b({lam})) = −b′: {}", b.sigma() == bp, b.sigma() == bp.neg());
    }
    Ok(())
}
