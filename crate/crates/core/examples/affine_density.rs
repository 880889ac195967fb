//! Affine root systems on a disconnected torus: axioms, multiplicities and
//! the two forms of the Weyl-integration density.

use dimdatum::affine::{self, CatalogEntry, Lifting};

fn main() -> dimdatum::Result<()> {
    let entry: CatalogEntry = "m*A2n:BCn@m=2,n=1".parse()?;
    let r = entry.build()?;
    println!("{entry}: {} roots on a torus of rank {} with {} components", r.roots().len(), r.torus().rank, r.torus().order);
    println!("axioms hold: {}", r.validate().ok());
    for m in r.multiplicities() {
        println!("  reduced root ({}): m_1 = {}, m = {}", m.root, m.m1, m.m);
    }
    let a = affine::a_r(&r, Lifting::default())?;
    println!("A_R has {} terms", a.len());

    let (rows, worst) = affine::density_samples(&r, 5, 0, 1)?;
    for row in &rows {
        println!("  θ = {:?}: product {:.6}, character {:.6}", row.theta, row.product, row.character);
    }
    println!("largest disagreement over the samples: {worst:.2e}");
    println!("exact agreement in the cyclotomic group ring: {}", affine::exact_density_check(&r, 1)?);

    for e in CatalogEntry::standard_entries().iter().take(6) {
        let r = e.build()?;
        println!("{e}: valid = {}, m1 | m = {}", r.validate().ok(), r.fiber_divisibility());
    }
    Ok(())
}
