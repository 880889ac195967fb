//! `a_{2m+1} = c_m d_{m+1}` and `a_{2m} = b_m b′_m`, swept over a small box.

use dimdatum::lattice::Weight;
use dimdatum::polyfam::{factorization_sides, Parity};
use dimdatum::suites::{run_identities, RunOptions};

fn main() -> dimdatum::Result<()> {
    let lam = Weight::from([1, 0, -1]);
    let (lhs, rhs) = factorization_sides(Parity::Odd, &lam)?;
    println!("a_3({lam}) = {lhs}");
    println!("c_1 d_2     = {rhs}");

    let report = run_identities(2, 2, RunOptions::default());
    print!("{}", report.to_text());
    Ok(())
}
