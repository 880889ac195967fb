//! The density function on a generating component `S′ = g^k S⁰`, in product form
//! and character form, plus the numeric checks built on it.
//!
//! A point of `S′` is `exp(θ)·g^k` with `θ ∈ [0,1)^r`; a character `(x, t)` takes the
//! value `e^{2πi(x·θ + t k/M)}` there.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::catalog::CatalogEntry;
use super::character::{density_character, restricted_weyl_order};
use super::system::{AffineCharacter, AffineRootSystem, AffineWeight};
use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::rational::{self, Q};

/// Pointwise tolerance for identities between functions on `S′`.
pub const POINTWISE_TOL: f64 = 1e-10;
/// Tolerance for quadrature of smooth periodic integrands.
pub const QUADRATURE_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Point {
    pub theta: Vec<f64>,
    pub component: i64,
}

pub fn eval_weight(w: &AffineWeight, p: &Point) -> Complex64 {
    let mut phase: f64 = w.finite().coords().iter().zip(&p.theta).map(|(&x, t)| x as f64 * t).sum();
    phase += ((w.torsion() * p.component).rem_euclid(w.order())) as f64 / w.order() as f64;
    Complex64::from_polar(1.0, TAU * phase.rem_euclid(1.0))
}

pub fn eval_character(c: &AffineCharacter, p: &Point) -> Complex64 {
    c.terms().map(|(w, q)| eval_weight(w, p) * rational::to_f64(q)).sum()
}

/// `count` points with uniform `θ`, reproducible from `seed`, all on component `component`.
pub fn random_points(rank: usize, count: usize, seed: u64, component: i64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Point {
            theta: (0..rank).map(|_| rng.random::<f64>()).collect(),
            component,
        })
        .collect()
}

/// Both forms of the density of one affine root system.
#[derive(Clone, Debug)]
pub struct DensityForms {
    roots: Vec<AffineWeight>,
    weyl_order: usize,
    character: AffineCharacter,
}

/// One density evaluation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityRow {
    pub theta: Vec<f64>,
    pub component: i64,
    pub product: f64,
    pub character: f64,
}

impl DensityForms {
    pub fn new(r: &AffineRootSystem) -> Result<Self> {
        Ok(DensityForms {
            roots: r.roots().iter().cloned().collect(),
            weyl_order: restricted_weyl_order(r)?,
            character: density_character(r)?,
        })
    }

    /// `Σ_τ τ·A_R` as an exact character.
    pub fn character_form(&self) -> &AffineCharacter {
        &self.character
    }

    /// `(1/|W_{R′}|) Π_{β ∈ R} (1 − β(s))`.
    pub fn product(&self, p: &Point) -> Complex64 {
        let prod: Complex64 = self.roots.iter().map(|b| Complex64::new(1.0, 0.0) - eval_weight(b, p)).product();
        prod / self.weyl_order as f64
    }

    pub fn character(&self, p: &Point) -> Complex64 {
        eval_character(&self.character, p)
    }

    /// Evaluate both forms and insist they agree to [`POINTWISE_TOL`] (relative to `max(1, |D|)`).
    pub fn at(&self, p: &Point) -> Result<DensityRow> {
        let a = self.product(p);
        let b = self.character(p);
        let scale = a.norm().max(1.0);
        if (a - b).norm() > POINTWISE_TOL * scale || a.im.abs() > POINTWISE_TOL * scale {
            return Err(Error::DensityMismatch {
                theta: p.theta.clone(),
                product: a.re,
                character: b.re,
            });
        }
        Ok(DensityRow {
            theta: p.theta.clone(),
            component: p.component,
            product: a.re,
            character: b.re,
        })
    }
}

/// Single-point evaluation of both forms.
pub fn density_at(r: &AffineRootSystem, p: &Point) -> Result<DensityRow> {
    DensityForms::new(r)?.at(p)
}

/// Rows at seeded random points of component `component`, plus the largest form disagreement.
pub fn density_samples(r: &AffineRootSystem, count: usize, seed: u64, component: i64) -> Result<(Vec<DensityRow>, f64)> {
    let forms = DensityForms::new(r)?;
    let pts = random_points(r.torus().rank, count, seed, component);
    let mut worst = 0.0f64;
    let mut rows = Vec::with_capacity(count);
    for p in &pts {
        let a = forms.product(p);
        let b = forms.character(p);
        worst = worst.max((a - b).norm() / a.norm().max(1.0));
        rows.push(DensityRow {
            theta: p.theta.clone(),
            component: p.component,
            product: a.re,
            character: b.re,
        });
    }
    Ok((rows, worst))
}

/// Largest deviation from `Π_{β ∈ R_{α′}} (1 − β(s)) = 1 − α(s)^{m_{α′}}` over all
/// reduced `α′` and the given points.
pub fn fiber_law_error(r: &AffineRootSystem, points: &[Point]) -> f64 {
    let mut worst = 0.0f64;
    for m in r.multiplicities() {
        let alpha = r.fiber(&m.root)[0].clone();
        let mut fiber = r.fiber(&m.root);
        fiber.extend(r.fiber(&m.root.scale(2)));
        for p in points {
            let lhs: Complex64 = fiber.iter().map(|b| Complex64::new(1.0, 0.0) - eval_weight(b, p)).product();
            let rhs = Complex64::new(1.0, 0.0) - eval_weight(&alpha, p).powu(m.m as u32);
            worst = worst.max((lhs - rhs).norm());
        }
    }
    worst
}

/// Coefficients (lowest degree first) of the `M`-th cyclotomic polynomial.
pub fn cyclotomic(order: u64) -> Vec<i64> {
    let mut num = vec![0i64; order as usize + 1];
    num[0] = -1;
    num[order as usize] = 1;
    for d in 1..order {
        if order.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic(d));
        }
    }
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let mut out = vec![0i64; rem.len() - dn];
    for i in (0..out.len()).rev() {
        let c = rem[i + dn] / den[dn];
        out[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    out
}

/// The image of `Q[X*(S)]` in functions on `S′`: each finite part carries an element of
/// `Q(ω) = Q[x]/Φ_M`, stored by its `φ(M)` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicImage {
    order: i64,
    phi: Vec<i64>,
    terms: BTreeMap<Weight, Vec<Q>>,
}

impl CyclotomicImage {
    fn reduce(&self, mut poly: Vec<Q>) -> Vec<Q> {
        let deg = self.phi.len() - 1;
        for i in (deg..poly.len()).rev() {
            let c = poly[i].clone();
            if !c.is_zero() {
                for (j, &p) in self.phi.iter().enumerate() {
                    poly[i - deg + j] -= &c * rational::q(p);
                }
            }
        }
        poly.truncate(deg);
        poly.resize(deg, rational::zero());
        poly
    }

    fn insert(&mut self, w: Weight, v: Vec<Q>) {
        let entry = self.terms.entry(w.clone()).or_insert_with(|| vec![rational::zero(); v.len()]);
        for (a, b) in entry.iter_mut().zip(v) {
            *a += b;
        }
        if entry.iter().all(|c| c.is_zero()) {
            self.terms.remove(&w);
        }
    }

    /// Restriction of `c` to the component `g^k S⁰`.
    pub fn restrict(c: &AffineCharacter, order: i64, component: i64) -> Self {
        let phi = cyclotomic(order as u64);
        let mut img = CyclotomicImage {
            order,
            phi,
            terms: BTreeMap::new(),
        };
        for (w, q) in c.terms() {
            let mut poly = vec![rational::zero(); order as usize];
            poly[(w.torsion() * component).rem_euclid(order) as usize] = q.clone();
            let v = img.reduce(poly);
            img.insert(w.finite().clone(), v);
        }
        img
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = CyclotomicImage {
            order: self.order,
            phi: self.phi.clone(),
            terms: BTreeMap::new(),
        };
        for (x, p) in &self.terms {
            for (y, q) in &other.terms {
                let mut poly = vec![rational::zero(); p.len() + q.len()];
                for (i, a) in p.iter().enumerate() {
                    for (j, b) in q.iter().enumerate() {
                        poly[i + j] += a * b;
                    }
                }
                let v = out.reduce(poly);
                out.insert(x + y, v);
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Exact comparison of the two density forms on the component `g^k S⁰`
/// (`k` prime to `M`): both are mapped into `Q(ω)[Z^r]` and compared there.
pub fn exact_density_check(r: &AffineRootSystem, component: i64) -> Result<bool> {
    let t = r.torus();
    if component.gcd(&t.order) != 1 {
        return Err(Error::InvalidAffine(format!("component {component} does not generate Z/{}", t.order)));
    }
    let zero = AffineWeight::new(Weight::zero(t.rank), 0, t.order);
    let mut acc = CyclotomicImage::restrict(&AffineCharacter::basis(zero.clone()), t.order, component);
    for b in r.roots() {
        let mut f = AffineCharacter::basis(zero.clone());
        f.add_term(b.clone(), -rational::one());
        acc = acc.mul(&CyclotomicImage::restrict(&f, t.order, component));
    }
    let scale = CyclotomicImage::restrict(
        &AffineCharacter::term(zero, rational::frac(1, restricted_weyl_order(r)? as i64)),
        t.order,
        component,
    );
    let product = acc.mul(&scale);
    let character = CyclotomicImage::restrict(&density_character(r)?, t.order, component);
    Ok(product == character)
}

/// Exact fiber law `Π_{β ∈ R_{α′}} (1 − [β]) = 1 − [m_{α′} α]` on `g^k S⁰`.
pub fn exact_fiber_law(r: &AffineRootSystem, component: i64) -> bool {
    let t = r.torus();
    let zero = AffineWeight::new(Weight::zero(t.rank), 0, t.order);
    let one_minus = |b: &AffineWeight| {
        let mut f = AffineCharacter::basis(zero.clone());
        f.add_term(b.clone(), -rational::one());
        CyclotomicImage::restrict(&f, t.order, component)
    };
    r.multiplicities().iter().all(|m| {
        let alpha = r.fiber(&m.root)[0].clone();
        let mut fiber = r.fiber(&m.root);
        fiber.extend(r.fiber(&m.root.scale(2)));
        let mut lhs = CyclotomicImage::restrict(&AffineCharacter::basis(zero.clone()), t.order, component);
        for b in &fiber {
            lhs = lhs.mul(&one_minus(b));
        }
        lhs == one_minus(&alpha.scale(m.m as i64))
    })
}

/// The `d`-dimensional character of `SU(2)` on its maximal torus, `θ ↦ Σ_j e^{2πi(d−1−2j)θ}`.
pub fn su2_character(d: usize, theta: f64) -> Complex64 {
    (0..d)
        .map(|j| Complex64::from_polar(1.0, TAU * (d as f64 - 1.0 - 2.0 * j as f64) * theta))
        .sum()
}

fn pairwise_sum(v: &[Complex64]) -> Complex64 {
    if v.len() <= 8 {
        return v.iter().sum();
    }
    let (a, b) = v.split_at(v.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

/// `∫ χ_{d1} conj(χ_{d2}) D dθ` over the maximal torus of `SU(2)` by the `n`-point
/// trapezoid rule, where `D` is the density of the connected rank-one system `{±2e₁}`.
pub fn weyl_inner(d1: usize, d2: usize, n: usize) -> Result<Complex64> {
    if n < 64 {
        return Err(Error::InvalidAffine(format!("quadrature needs at least 64 points, got {n}")));
    }
    let r = CatalogEntry::diagonal("C1", 1).build()?;
    let forms = DensityForms::new(&r)?;
    let values: Vec<Complex64> = (0..n)
        .into_par_iter()
        .map(|j| {
            let theta = j as f64 / n as f64;
            let p = Point {
                theta: vec![theta],
                component: 0,
            };
            su2_character(d1, theta) * su2_character(d2, theta).conj() * forms.product(&p)
        })
        .collect();
    Ok(pairwise_sum(&values) / n as f64)
}

/// `∫ |χ_d|² D`, which should be 1.
pub fn weyl_integration_check(d: usize, n: usize) -> Result<f64> {
    Ok(weyl_inner(d, d, n)?.re)
}

/// Points spread over every generating component of `S`, reproducible from `seed`.
pub fn generic_points(rank: usize, order: i64, count: usize, seed: u64) -> Vec<Point> {
    let units: Vec<i64> = (0..order.max(1)).filter(|k| k.gcd(&order) == 1).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| Point {
            theta: (0..rank).map(|_| rng.random::<f64>()).collect(),
            component: units[i % units.len()],
        })
        .collect()
}

/// Supports on which restriction to the generating components is injective:
/// distinct characters whose torsions stay below `φ(M)`.
pub fn is_reduced_support(support: &[AffineWeight]) -> bool {
    let Some(first) = support.first() else { return true };
    let deg = cyclotomic(first.order() as u64).len() as i64 - 1;
    support.iter().all(|w| w.torsion() < deg)
}

/// Result of reconstructing a character from its values.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub rank: usize,
    pub unknowns: usize,
    pub recovered: Vec<f64>,
    pub max_error: f64,
}

/// Evaluate `Σ c_j [λ_j]` at `points`, then recover the `c_j` by least squares.
pub fn restriction_roundtrip(support: &[AffineWeight], coeffs: &[f64], points: &[Point]) -> Result<RoundTrip> {
    if support.len() != coeffs.len() {
        return Err(Error::SizeMismatch(format!("{} weights, {} coefficients", support.len(), coeffs.len())));
    }
    let rows = 2 * points.len();
    let cols = support.len();
    let mut a = DMatrix::<f64>::zeros(rows, cols);
    let mut b = DVector::<f64>::zeros(rows);
    for (i, p) in points.iter().enumerate() {
        let mut value = Complex64::zero();
        for (j, (w, c)) in support.iter().zip(coeffs).enumerate() {
            let z = eval_weight(w, p);
            a[(2 * i, j)] = z.re;
            a[(2 * i + 1, j)] = z.im;
            value += z * *c;
        }
        b[2 * i] = value.re;
        b[2 * i + 1] = value.im;
    }
    let svd = a.svd(true, true);
    let rank = svd.rank(1e-8);
    let x = svd.solve(&b, 1e-8).map_err(|e| Error::InvalidAffine(e.to_string()))?;
    let recovered: Vec<f64> = x.iter().copied().collect();
    let max_error = recovered.iter().zip(coeffs).map(|(u, v)| (u - v).abs()).fold(0.0, f64::max);
    Ok(RoundTrip {
        rank,
        unknowns: cols,
        recovered,
        max_error,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aw(f: &[i64], t: i64, m: i64) -> AffineWeight {
        AffineWeight::new(Weight::from(f), t, m)
    }

    #[test]
    fn su2_density_by_hand() {
        let r = CatalogEntry::diagonal("C1", 1).build().unwrap();
        let row = density_at(
            &r,
            &Point {
                theta: vec![0.25],
                component: 0,
            },
        )
        .unwrap();
        // ½|1 − e^{iπ}|² = 2
        assert!((row.product - 2.0).abs() < 1e-12);
        assert!((row.character - 2.0).abs() < 1e-12);
        for k in 0..20 {
            let theta = k as f64 / 20.0;
            let d = density_at(&r, &Point { theta: vec![theta], component: 0 }).unwrap();
            assert!((d.product - 2.0 * (TAU * theta).sin().powi(2)).abs() < 1e-12);
        }
    }

    #[test]
    fn vanishes_where_a_root_is_trivial() {
        let r = CatalogEntry::diagonal("A2", 2).build().unwrap();
        let p = Point {
            theta: vec![0.3, 0.3, 0.1],
            component: 1,
        };
        let row = density_at(&r, &p).unwrap();
        assert!(row.product.abs() < 1e-12 && row.character.abs() < 1e-12);
    }

    #[test]
    fn forms_agree_on_the_catalog() {
        for e in CatalogEntry::standard_entries() {
            let r = e.build().unwrap();
            let (_, worst) = density_samples(&r, 100, 7, 1).unwrap();
            assert!(worst < POINTWISE_TOL, "{e}: {worst}");
            assert!(fiber_law_error(&r, &random_points(r.torus().rank, 50, 3, 1)) < POINTWISE_TOL, "{e}");
            assert!(exact_density_check(&r, 1).unwrap(), "{e}");
            assert!(exact_fiber_law(&r, 1), "{e}");
        }
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn weyl_orthonormality() {
        for d in 1..=5 {
            assert!((weyl_integration_check(d, 256).unwrap() - 1.0).abs() < QUADRATURE_TOL);
        }
        assert!(weyl_inner(2, 3, 256).unwrap().norm() < QUADRATURE_TOL);
        assert!(weyl_integration_check(1, 32).is_err());
    }

    #[test]
    fn restriction_is_injective_on_reduced_supports() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for order in [1i64, 2, 3, 4, 6] {
            let deg = cyclotomic(order as u64).len() as i64 - 1;
            for trial in 0..20 {
                let terms = rng.random_range(1..=8usize);
                let mut support: Vec<AffineWeight> = Vec::new();
                while support.len() < terms {
                    let w = aw(
                        &[rng.random_range(-3..=3), rng.random_range(-3..=3)],
                        rng.random_range(0..deg),
                        order,
                    );
                    if !support.contains(&w) {
                        support.push(w);
                    }
                }
                assert!(is_reduced_support(&support));
                let coeffs: Vec<f64> = (0..terms).map(|_| rng.random_range(-5..=5) as f64).collect();
                let pts = generic_points(2, order, (2 + order as usize + 1).max(terms), trial);
                let rt = restriction_roundtrip(&support, &coeffs, &pts).unwrap();
                assert_eq!(rt.rank, terms);
                assert!(rt.max_error < 1e-8, "{order} {support:?}");
            }
        }
    }

    /// With `M = 2`, `[λ] + [λ + β₀]` is a nonzero character vanishing on `S′`.
    #[test]
    fn restriction_kernel_for_unreduced_support() {
        let support = [aw(&[1], 0, 2), aw(&[1], 1, 2)];
        let f: AffineCharacter = support.iter().map(|w| (w.clone(), rational::one())).collect();
        assert!(!f.is_empty());
        assert!(CyclotomicImage::restrict(&f, 2, 1).is_zero());
        for p in random_points(1, 10, 5, 1) {
            assert!(eval_character(&f, &p).norm() < 1e-12);
        }
        assert!(!is_reduced_support(&support));
        let rt = restriction_roundtrip(&support, &[1.0, 1.0], &random_points(1, 4, 5, 1)).unwrap();
        assert_eq!(rt.rank, 1);
    }
}
