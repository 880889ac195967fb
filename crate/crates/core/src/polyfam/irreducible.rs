//! Inductive irreducibility certificate for the families `b, b′, c, d`.
//!
//! Let `u` be the highest-index variable of `p = f_n(λ)`. If `p = ±u·q + r`
//! with `q = f_{n−1}(λ′)`, `λ′ = (a_2, ..., a_n)`, `u` absent from `q` and `r`,
//! `q` irreducible (or a unit) and `q ∤ r`, then `p` is irreducible: any
//! factorization has a factor free of `u`, which divides both `q` and `r`.

use serde::Serialize;

use super::families::{family_poly, Family};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::lattice::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Certified irreducible by the inductive scheme.
    Irreducible,
    /// The polynomial is a nonzero constant (only `d_1((0)) = 1` among dominant inputs).
    Unit,
}

/// One level of the induction, top level first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub weight: Vec<i64>,
    pub top_variable: u32,
    /// `+1` or `−1`: the coefficient of `u` is `sign · q`.
    pub sign: i64,
    pub quotient_is_unit: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub family: String,
    pub verdict: Verdict,
    pub steps: Vec<Step>,
}

fn top_index(family: Family, lambda: &Weight) -> Result<u32> {
    let a = lambda.coords();
    let n = a.len() as i64;
    let a1 = a[0];
    let idx = match family {
        Family::B | Family::BPrime => a1 + 2 * n - 1,
        Family::C => a1 + 2 * n,
        Family::D if n == 1 => a1.abs(),
        Family::D => a1 + 2 * n - 2,
        Family::A => {
            return Err(Error::SchemeInapplicable(
                "the inductive scheme covers only b, b', c, d".into(),
            ))
        }
    };
    Ok(idx as u32)
}

/// Run the induction; inapplicability at any level is an error, never a silent pass.
pub fn verify_irreducible_inductive(family: Family, lambda: &Weight) -> Result<Certificate> {
    let mut steps = Vec::new();
    let verdict = certify(family, lambda, &mut steps)?;
    Ok(Certificate {
        family: family.to_string(),
        verdict,
        steps,
    })
}

fn certify(family: Family, lambda: &Weight, steps: &mut Vec<Step>) -> Result<Verdict> {
    let p = family_poly(family, lambda)?;
    if lambda.rank() == 0 || p.is_unit() {
        return Ok(Verdict::Unit);
    }
    let fail = |why: String| Error::SchemeInapplicable(format!("{family}({lambda}): {why}"));
    let u = top_index(family, lambda)?;
    if p.variables().last() != Some(&u) {
        return Err(fail(format!("x{u} is not the highest variable")));
    }
    if p.degree_in(u) != 1 {
        return Err(fail(format!("degree in x{u} is {}", p.degree_in(u))));
    }
    let lambda_rest = Weight::from(&lambda.coords()[1..]);
    let q = family_poly(family, &lambda_rest)?;
    let lead = p.coeff_in(u, 1);
    let sign = if lead == q {
        1
    } else if lead == q.neg() {
        -1
    } else {
        return Err(fail(format!("coefficient of x{u} is {lead}, expected ±({q})")));
    };
    let quotient_is_unit = q.is_unit();
    steps.push(Step {
        weight: lambda.coords().to_vec(),
        top_variable: u,
        sign,
        quotient_is_unit,
    });
    if quotient_is_unit {
        return Ok(Verdict::Irreducible);
    }
    if certify(family, &lambda_rest, steps)? != Verdict::Irreducible {
        return Err(fail("quotient is not certified irreducible".into()));
    }
    let r: Polynomial = p.coeff_in(u, 0);
    if q.divides(&r)? {
        return Err(fail(format!("({q}) divides the remainder")));
    }
    Ok(Verdict::Irreducible)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w<const N: usize>(v: [i64; N]) -> Weight {
        Weight::from(v)
    }

    #[test]
    fn examples() {
        let c = verify_irreducible_inductive(Family::B, &w([0])).unwrap();
        assert_eq!(c.verdict, Verdict::Irreducible);
        assert_eq!(c.steps[0].top_variable, 1);
        let c = verify_irreducible_inductive(Family::C, &w([0, 0])).unwrap();
        assert_eq!(c.verdict, Verdict::Irreducible);
        assert_eq!(c.steps.len(), 2);
        let c = verify_irreducible_inductive(Family::BPrime, &w([1])).unwrap();
        assert_eq!(c.verdict, Verdict::Irreducible);
        assert_eq!(c.steps[0].top_variable, 2);
        assert_eq!(
            verify_irreducible_inductive(Family::D, &w([0])).unwrap().verdict,
            Verdict::Unit
        );
        assert_eq!(
            verify_irreducible_inductive(Family::D, &w([0, 0])).unwrap().verdict,
            Verdict::Irreducible
        );
        assert!(matches!(
            verify_irreducible_inductive(Family::A, &w([1, 0])),
            Err(Error::SchemeInapplicable(_))
        ));
    }

    #[test]
    fn b_leading_sign_is_negative() {
        // b_n(λ) = −x_{a_1+2n−1} b_{n−1}(λ′) + ...
        for lam in [w([0]), w([1, 0]), w([2, 1, 1])] {
            let c = verify_irreducible_inductive(Family::B, &lam).unwrap();
            assert!(c.steps.iter().all(|s| s.sign == -1));
        }
    }
}
