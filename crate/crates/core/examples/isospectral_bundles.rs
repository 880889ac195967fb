//! Laplace spectra of homogeneous bundles: the sphere, then an isospectral pair over `SU(6)`.

use dimdatum::branch::{bundle_spectrum, theorem_setup, Brancher, Embedding, GroupDesc, IrrepLabel, WeightCache};
use dimdatum::lattice::Weight;
use dimdatum::rational::{self, q};

fn main() -> dimdatum::Result<()> {
    let cache = WeightCache::in_memory();
    let brancher = Brancher::new(&cache);

    let su2: GroupDesc = "SU(2)".parse()?;
    let torus = Embedding::maximal_torus(&su2)?;
    let s2 = bundle_spectrum(&brancher, &torus, &IrrepLabel::trivial(torus.h.clone()), &q(30))?;
    for (e, m) in &s2.entries {
        println!("S²: eigenvalue {} with multiplicity {m}", rational::format(e));
    }

    let (h1, tau, h2, tau_prime) = theorem_setup(1, &Weight::from([1, 0, -1]))?;
    let a = bundle_spectrum(&brancher, &h1, &tau, &q(40))?;
    let b = bundle_spectrum(&brancher, &h2, &tau_prime, &q(40))?;
    println!("SU(6)/U(3) and SU(6)/(Sp(1)×SO(4)): {} eigenvalues, identical = {}", a.entries.len(), a == b);
    Ok(())
}
