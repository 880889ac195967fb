//! Weyl-averaged characters: `F_{A2,λ}` and `F_{C1+D2,λ′}` agree once averaged
//! over the signed permutations of three coordinates, although the Weyl groups differ.

use dimdatum::charalg::{averaged_character, char_equal, weyl_product};
use dimdatum::lattice::{Weight, WeylSubgroup};
use dimdatum::rootsys::RootSystem;

fn main() -> dimdatum::Result<()> {
    let w = WeylSubgroup::hyperoctahedral(3);
    let a2 = RootSystem::parse_label("A2", Some(3))?;
    let cd = RootSystem::parse_label("C1+D2", Some(3))?;
    println!("|W(A2)| = {}, |W(C1+D2)| = {}", a2.weyl_group()?.order(), cd.weyl_group()?.order());
    println!("Weyl product of A2 has {} terms", weyl_product(&a2)?.len());

    for (lam, lam_prime) in [([1, 0, -1], [1, 1, 0]), ([2, 0, -2], [2, 2, 0]), ([0, 0, 0], [0, 0, 0])] {
        let f = averaged_character(&a2, &Weight::from(lam), &w)?;
        let g = averaged_character(&cd, &Weight::from(lam_prime), &w)?;
        println!("λ = {lam:?}, λ′ = {lam_prime:?}: {} terms, equal = {}", f.len(), char_equal(&f, &g));
    }
    Ok(())
}
