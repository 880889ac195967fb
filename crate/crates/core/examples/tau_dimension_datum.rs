//! Branching `SU(6)` irreducibles to `H1 = U(3)` and `H2 = Sp(1)×SO(4)`: the
//! τ-dimension data agree although the subgroups are not conjugate.

use dimdatum::branch::{theorem_setup, Brancher, WeightCache};
use dimdatum::lattice::Weight;
use dimdatum::rational::q;

fn main() -> dimdatum::Result<()> {
    let cache = WeightCache::in_memory();
    let brancher = Brancher::new(&cache);
    let (h1, tau, h2, tau_prime) = theorem_setup(1, &Weight::from([1, 0, -1]))?;
    println!("{} ⊃ {} with τ = {tau}", h1.g, h1.h);
    println!("{} ⊃ {} with τ′ = {tau_prime}", h2.g, h2.h);

    let d1 = brancher.tau_dimension_datum(&h1, &tau, &q(24))?;
    let d2 = brancher.tau_dimension_datum(&h2, &tau_prime, &q(24))?;
    for ((rho, m1), (_, m2)) in d1.iter().zip(&d2).filter(|(a, _)| a.1 != 0) {
        println!("ρ = {:<14} dim {:>4}  D_H1 = {m1:>2}  D_H2 = {m2:>2}", rho.highest_weight.to_string(), rho.dimension());
    }
    let first = brancher.branch(&h1, &d1[1].0)?;
    println!("{} restricted to {}: {:?}", first.rho, h1.h, first.parts);
    Ok(())
}
