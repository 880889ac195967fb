//! Verification suites and their machine-readable reports.
//!
//! A report is a deterministic function of its parameters (and, for branching,
//! of nothing else: the cache only saves time). Each check carries SHA-256
//! digests of the canonical text of both sides and, when it fails, the input
//! that reproduces the failure.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::affine::{self, CatalogEntry, Lifting};
use crate::branch::{bundle_spectrum, spectra_equal, theorem_setup, Brancher, Embedding, GroupDesc, IrrepLabel, Spectrum, WeightCache};
use crate::charalg::{averaged_character, char_equal};
use crate::error::{Error, Result};
use crate::lattice::{Weight, WeylSubgroup};
use crate::polyfam::{
    admissible_weights, factorization_sides, family_poly, verify_det_equals_weylsum, verify_irreducible_inductive,
    weight_parity, Family, Parity, Verdict,
};
use crate::rational::{self, Q};
use crate::rootsys::RootSystem;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One check of a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub lhs_digest: String,
    pub rhs_digest: String,
    /// Numeric error for floating-point checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Input that reproduces a failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reproducer: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seconds: Option<f64>,
}

impl Check {
    /// Compare two canonical texts.
    pub fn compare(id: impl Into<String>, lhs: &str, rhs: &str, reproducer: impl Into<String>) -> Self {
        let pass = lhs == rhs;
        Check {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            lhs_digest: digest(lhs),
            rhs_digest: digest(rhs),
            error: None,
            detail: None,
            reproducer: (!pass).then(|| reproducer.into()),
            seconds: None,
        }
    }

    /// A check that failed with an error before both sides existed.
    pub fn errored(id: impl Into<String>, err: &Error, reproducer: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Fail,
            lhs_digest: String::new(),
            rhs_digest: String::new(),
            error: None,
            detail: Some(err.to_string()),
            reproducer: Some(reproducer.into()),
            seconds: None,
        }
    }

    /// A numeric check `err ≤ tol`.
    pub fn within(id: impl Into<String>, err: f64, tol: f64, reproducer: impl Into<String>) -> Self {
        let pass = err.is_finite() && err <= tol;
        Check {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            lhs_digest: digest(&format!("{err:e}")),
            rhs_digest: digest(&format!("{tol:e}")),
            error: Some(err),
            detail: None,
            reproducer: (!pass).then(|| reproducer.into()),
            seconds: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// First 16 hex digits of SHA-256.
pub fn digest(text: &str) -> String {
    let h = Sha256::digest(text.as_bytes());
    h.iter().take(8).fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub suite: String,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str, parameters: &[(&str, String)]) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            suite: suite.to_string(),
            parameters: parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, c: Check) {
        match c.status {
            Status::Pass => self.summary.passed += 1,
            Status::Fail => self.summary.failed += 1,
            Status::Skip => self.summary.skipped += 1,
        }
        self.summary.total += 1;
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        for c in cs {
            self.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} (dimdatum {})\n", self.suite, self.tool_version);
        for (k, v) in &self.parameters {
            let _ = writeln!(s, "  {k} = {v}");
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            let _ = write!(s, "{tag} {}", c.id);
            if let Some(e) = c.error {
                let _ = write!(s, "  err={e:.3e}");
            }
            if let Some(d) = &c.detail {
                let _ = write!(s, "  {d}");
            }
            if let Some(r) = &c.reproducer {
                let _ = write!(s, "  [reproduce: {r}]");
            }
            if let Some(t) = c.seconds {
                let _ = write!(s, "  {t:.3}s");
            }
            s.push('\n');
        }
        let m = &self.summary;
        let _ = writeln!(s, "{} checks: {} passed, {} failed, {} skipped", m.total, m.passed, m.failed, m.skipped);
        s
    }
}

/// Run `f`, attaching the elapsed time when `timings` is set.
fn timed(timings: bool, f: impl FnOnce() -> Check) -> Check {
    let t = Instant::now();
    let mut c = f();
    if timings {
        c.seconds = Some(t.elapsed().as_secs_f64());
    }
    c
}

/// Options shared by all suites.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub timings: bool,
}

/// Exhaustive sweep of `a_{2m+1} = c_m d_{m+1}` and `a_{2m} = b_m b′_m` over admissible
/// `λ` with `1 ≤ m ≤ max_m` and `|a_i| ≤ max_coeff`.
pub fn run_identities(max_m: usize, max_coeff: i64, opts: RunOptions) -> Report {
    let mut report = Report::new(
        "identities",
        &[("max_m", max_m.to_string()), ("max_coeff", max_coeff.to_string())],
    );
    let mut inputs = Vec::new();
    for parity in [Parity::Odd, Parity::Even] {
        for m in 1..=max_m {
            for lam in admissible_weights(parity, m, max_coeff) {
                inputs.push((parity, lam));
            }
        }
    }
    let checks: Vec<Check> = inputs
        .par_iter()
        .map(|(parity, lam)| {
            let id = format!("{parity}/({lam})");
            timed(opts.timings, || match factorization_sides(*parity, lam) {
                Ok((l, r)) => Check::compare(id.clone(), &l.to_string(), &r.to_string(), format!("{parity} {lam}")),
                Err(e) => Check::errored(id.clone(), &e, format!("{parity} {lam}")),
            })
        })
        .collect();
    report.extend(checks);
    report
}

/// Dominant weights for `family` in rank `n` with entries in `[−max, max]`.
pub fn dominant_box(family: Family, n: usize, max: i64) -> Vec<Weight> {
    let side = (2 * max + 1) as usize;
    let mut out = Vec::new();
    for code in 0..side.pow(n as u32) {
        let mut c = code;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let x = (c % side) as i64 - max;
                c /= side;
                x
            })
            .collect();
        let w = Weight::new(v);
        if family.check_dominant(&w).is_ok() {
            out.push(w);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn family_inputs(families: &[Family], max_n: usize, max_coeff: i64) -> Vec<(Family, Weight)> {
    let mut out = Vec::new();
    for &f in families {
        for n in 1..=max_n {
            for w in dominant_box(f, n, max_coeff) {
                out.push((f, w));
            }
        }
    }
    out
}

/// Determinant expansion versus Weyl-sum definition for all five families.
pub fn run_determinants(max_n: usize, max_coeff: i64, opts: RunOptions) -> Report {
    let mut report = Report::new(
        "determinants",
        &[("max_n", max_n.to_string()), ("max_coeff", max_coeff.to_string())],
    );
    let inputs = family_inputs(&Family::ALL, max_n, max_coeff);
    report.extend(
        inputs
            .par_iter()
            .map(|(f, lam)| {
                let id = format!("{f}/({lam})");
                timed(opts.timings, || match verify_det_equals_weylsum(*f, lam) {
                    Ok(ok) => Check::compare(id.clone(), "det", if ok { "det" } else { "weyl-sum" }, format!("{f} {lam}")),
                    Err(e) => Check::errored(id.clone(), &e, format!("{f} {lam}")),
                })
            })
            .collect::<Vec<_>>(),
    );
    report
}

/// `σ(b_n(λ))` against `b′_n(λ)`: the literal identity (`sigma/…`) and the
/// sign-corrected one `σ(b_n(λ)) = (−1)^{Σa_i} b′_n(λ)` (`sigma-signed/…`).
pub fn run_sigma(max_n: usize, max_coeff: i64, opts: RunOptions) -> Report {
    let mut report = Report::new(
        "sigma",
        &[("max_n", max_n.to_string()), ("max_coeff", max_coeff.to_string())],
    );
    let inputs = family_inputs(&[Family::B], max_n, max_coeff);
    let checks: Vec<Vec<Check>> = inputs
        .par_iter()
        .map(|(_, lam)| {
            let rep = format!("b {lam}");
            let sides = family_poly(Family::B, lam).and_then(|b| Ok((b.sigma(), family_poly(Family::BPrime, lam)?)));
            match sides {
                Ok((sb, bp)) => {
                    let signed = if weight_parity(lam) == 1 { bp.neg() } else { bp.clone() };
                    vec![
                        timed(opts.timings, || {
                            Check::compare(format!("sigma/({lam})"), &sb.to_string(), &bp.to_string(), rep.clone())
                        }),
                        timed(opts.timings, || {
                            Check::compare(format!("sigma-signed/({lam})"), &sb.to_string(), &signed.to_string(), rep.clone())
                        }),
                    ]
                }
                Err(e) => vec![Check::errored(format!("sigma/({lam})"), &e, rep)],
            }
        })
        .collect();
    report.extend(checks.into_iter().flatten());
    report
}

/// The inductive irreducibility certificate for `b, b′, c, d`.
pub fn run_irreducibility(max_n: usize, max_coeff: i64, opts: RunOptions) -> Report {
    let mut report = Report::new(
        "irreducibility",
        &[("max_n", max_n.to_string()), ("max_coeff", max_coeff.to_string())],
    );
    let inputs = family_inputs(&[Family::B, Family::BPrime, Family::C, Family::D], max_n, max_coeff);
    report.extend(
        inputs
            .par_iter()
            .map(|(f, lam)| {
                let id = format!("{f}/({lam})");
                timed(opts.timings, || match verify_irreducible_inductive(*f, lam) {
                    Ok(cert) => {
                        // d_1((0)) = 1 is the only constant among these inputs
                        let expected = if *f == Family::D && lam.coords() == [0] { Verdict::Unit } else { Verdict::Irreducible };
                        Check::compare(id.clone(), &format!("{:?}", cert.verdict), &format!("{expected:?}"), format!("{f} {lam}"))
                            .with_detail(format!("{:?} in {} steps", cert.verdict, cert.steps.len()))
                    }
                    Err(e) => Check::errored(id.clone(), &e, format!("{f} {lam}")),
                })
            })
            .collect::<Vec<_>>(),
    );
    report
}

fn datum_text(datum: &[(IrrepLabel, i64)]) -> String {
    datum
        .iter()
        .map(|(rho, m)| format!("{}:{m}", rho.highest_weight))
        .collect::<Vec<_>>()
        .join(";")
}

/// Both pipelines for the τ-dimension datum theorem at `n`, `λ`:
/// branching to `H₁`, `H₂` up to `cutoff`, and equality of the averaged characters.
/// Inadmissible `λ` is an error, not a failed check.
pub fn run_theorem(n: usize, lambda: &Weight, cutoff: &Q, cache: &WeightCache, opts: RunOptions) -> Result<Report> {
    let (h1, tau, h2, tau_prime) = theorem_setup(n, lambda)?;
    if cutoff <= &rational::zero() {
        return Err(Error::NonPositiveCutoff);
    }
    let mut report = Report::new(
        "theorem",
        &[
            ("n", n.to_string()),
            ("lambda", lambda.to_string()),
            ("cutoff", rational::format(cutoff)),
            ("tau", format!("{tau}")),
            ("tau_prime", format!("{tau_prime}")),
        ],
    );
    let brancher = Brancher::new(cache);
    let t0 = Instant::now();
    let d1 = brancher.tau_dimension_datum(&h1, &tau, cutoff);
    let d2 = brancher.tau_dimension_datum(&h2, &tau_prime, cutoff);
    let elapsed = t0.elapsed().as_secs_f64();
    let mut branching_equal = false;
    match (&d1, &d2) {
        (Ok(a), Ok(b)) => {
            let mut enough = Check::compare(
                "datum/irreps",
                &a.len().to_string(),
                &b.len().to_string(),
                format!("theorem n={n} lambda={lambda}"),
            )
            .with_detail(format!("{} irreducibles of {} below the cutoff", a.len(), h1.g));
            if opts.timings {
                enough.seconds = Some(elapsed);
            }
            report.push(enough);
            for ((r1, m1), (r2, m2)) in a.iter().zip(b) {
                report.push(Check::compare(
                    format!("datum/({})", r1.highest_weight),
                    &format!("{}:{m1}", r1.highest_weight),
                    &format!("{}:{m2}", r2.highest_weight),
                    format!("rho={}", r1.highest_weight),
                ));
            }
            branching_equal = datum_text(a) == datum_text(b);
        }
        (Err(e), _) | (_, Err(e)) => report.push(Check::errored("datum/irreps", e, format!("lambda={lambda}"))),
    }

    let c = timed(opts.timings, || {
        let big = 2 * n + 1;
        let w = WeylSubgroup::hyperoctahedral(big);
        let sides = RootSystem::parse_label(&format!("A{}", 2 * n), None).and_then(|a| {
            let cd = RootSystem::parse_label(&format!("C{n}+D{}", n + 1), None)?;
            let lhs = averaged_character(&a, lambda, &w)?;
            let rhs = averaged_character(&cd, &tau_prime.highest_weight, &w)?;
            Ok((lhs, rhs))
        });
        match sides {
            Ok((lhs, rhs)) => {
                let text = |c: &crate::charalg::CharacterElement| serde_json::to_string(c).expect("plain data");
                let mut ch = Check::compare("characters", &text(&lhs), &text(&rhs), format!("lambda={lambda}"));
                if char_equal(&lhs, &rhs) != ch.passed() {
                    ch.status = Status::Fail;
                }
                ch
            }
            Err(e) => Check::errored("characters", &e, format!("lambda={lambda}")),
        }
    });
    let characters_equal = c.passed();
    report.push(c);
    report.push(Check::compare(
        "pipelines-agree",
        &branching_equal.to_string(),
        &characters_equal.to_string(),
        format!("lambda={lambda}"),
    ));
    Ok(report)
}

/// Spectrum of `G ×_H V_τ` up to `cutoff`, together with its report.
pub fn run_spectrum(
    g: &GroupDesc,
    subgroup: &str,
    tau: &Weight,
    cutoff: &Q,
    cache: &WeightCache,
    opts: RunOptions,
) -> Result<(Report, Spectrum)> {
    let emb = Embedding::named(g, subgroup)?;
    let tau = IrrepLabel::new(emb.h.clone(), tau)?;
    let brancher = Brancher::new(cache);
    let t0 = Instant::now();
    let spectrum = bundle_spectrum(&brancher, &emb, &tau, cutoff)?;
    let mut report = Report::new(
        "spectrum",
        &[
            ("group", g.to_string()),
            ("subgroup", format!("{} = {}", emb.name, emb.h)),
            ("tau", tau.to_string()),
            ("cutoff", rational::format(cutoff)),
        ],
    );
    let text = spectrum.to_json();
    let total: u64 = spectrum.entries.iter().map(|e| e.1).sum();
    let mut c = Check::compare("spectrum", &text, &text, String::new())
        .with_detail(format!("{} eigenvalues, total multiplicity {total}", spectrum.entries.len()));
    if opts.timings {
        c.seconds = Some(t0.elapsed().as_secs_f64());
    }
    report.push(c);
    Ok((report, spectrum))
}

/// Compare two spectrum documents.
pub fn run_compare(a: &str, b: &str) -> Result<Report> {
    let sa = Spectrum::from_json(a)?;
    let sb = Spectrum::from_json(b)?;
    let mut report = Report::new("compare", &[("cutoff", rational::format(&sa.cutoff))]);
    match spectra_equal(&sa, &sb) {
        Ok(_) => {
            let ta = sa.to_json();
            let tb = sb.to_json();
            let mut c = Check::compare("spectra-equal", &ta, &tb, "compare the two files");
            if !c.passed() {
                let first = sa.entries.iter().zip(&sb.entries).position(|(x, y)| x != y).unwrap_or(sa.entries.len().min(sb.entries.len()));
                c = c.with_detail(format!("first difference at entry {first}"));
            }
            report.push(c);
        }
        Err(e) => report.push(Check::errored("spectra-equal", &e, "use equal cutoffs")),
    }
    Ok(report)
}

/// Which affine checks to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineCheck {
    Validate,
    Density,
    Integration,
}

impl std::str::FromStr for AffineCheck {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "validate" => Ok(AffineCheck::Validate),
            "density" => Ok(AffineCheck::Density),
            "integration" => Ok(AffineCheck::Integration),
            _ => Err(Error::SelectorSyntax(s.to_string())),
        }
    }
}

/// Parameters of [`run_affine`].
#[derive(Clone, Debug)]
pub struct AffineParams {
    pub checks: Vec<AffineCheck>,
    pub points: usize,
    pub seed: u64,
    /// Largest `SU(2)` irreducible dimension in the integration check.
    pub max_dim: usize,
    pub quadrature: usize,
}

impl Default for AffineParams {
    fn default() -> Self {
        AffineParams {
            checks: vec![AffineCheck::Validate, AffineCheck::Density, AffineCheck::Integration],
            points: 100,
            seed: 0,
            max_dim: 5,
            quadrature: 512,
        }
    }
}

/// Axioms, multiplicities, fiber law, density forms and Weyl integration for a catalog entry.
pub fn run_affine(entry: &CatalogEntry, p: &AffineParams, opts: RunOptions) -> Result<Report> {
    let r = entry.build()?;
    let mut report = Report::new(
        "affine",
        &[
            ("selector", entry.to_string()),
            ("points", p.points.to_string()),
            ("seed", p.seed.to_string()),
            ("max_dim", p.max_dim.to_string()),
            ("quadrature", p.quadrature.to_string()),
        ],
    );
    let sel = entry.to_string();
    let pts = affine::random_points(r.torus().rank, p.points, p.seed, 1);
    for check in &p.checks {
        match check {
            AffineCheck::Validate => {
                report.push(timed(opts.timings, || {
                    let v = r.validate();
                    let text = v.violations.iter().map(|(a, s)| format!("({a}) {s}")).collect::<Vec<_>>().join("; ");
                    Check::compare("validate", &text, "", sel.clone())
                }));
                let mults: Vec<String> = r
                    .multiplicities()
                    .iter()
                    .map(|m| format!("({}):{}/{}", m.root, m.m1, m.m))
                    .collect();
                let divides = r.fiber_divisibility();
                report.push(
                    Check::compare("divisibility", &divides.to_string(), "true", sel.clone())
                        .with_detail(format!("m1/m per reduced root: {}", mults.join(" "))),
                );
                report.push(timed(opts.timings, || {
                    Check::within("fiber-law", affine::fiber_law_error(&r, &pts), affine::density::POINTWISE_TOL, sel.clone())
                }));
                report.push(Check::compare(
                    "fiber-law-exact",
                    &affine::exact_fiber_law(&r, 1).to_string(),
                    "true",
                    sel.clone(),
                ));
                report.push(timed(opts.timings, || {
                    let a0 = affine::a_r(&r, Lifting { index: 0 });
                    let a1 = affine::a_r(&r, Lifting { index: 1 });
                    match (a0, a1) {
                        (Ok(a0), Ok(a1)) => Check::compare(
                            "lifting-independence",
                            &serde_json::to_string(&a0).expect("plain data"),
                            &serde_json::to_string(&a1).expect("plain data"),
                            sel.clone(),
                        ),
                        (Err(e), _) | (_, Err(e)) => Check::errored("lifting-independence", &e, sel.clone()),
                    }
                }));
            }
            AffineCheck::Density => {
                report.push(timed(opts.timings, || match affine::density_samples(&r, p.points, p.seed, 1) {
                    Ok((_, worst)) => Check::within("density-forms", worst, affine::density::POINTWISE_TOL, format!("{sel} seed={}", p.seed)),
                    Err(e) => Check::errored("density-forms", &e, sel.clone()),
                }));
                report.push(timed(opts.timings, || match affine::exact_density_check(&r, 1) {
                    Ok(ok) => Check::compare("density-exact", &ok.to_string(), "true", sel.clone()),
                    Err(e) => Check::errored("density-exact", &e, sel.clone()),
                }));
            }
            AffineCheck::Integration => {
                for d in 1..=p.max_dim {
                    report.push(timed(opts.timings, || match affine::weyl_integration_check(d, p.quadrature) {
                        Ok(v) => Check::within(
                            format!("integration/d={d}"),
                            (v - 1.0).abs(),
                            affine::density::QUADRATURE_TOL,
                            format!("d={d} N={}", p.quadrature),
                        ),
                        Err(e) => Check::errored(format!("integration/d={d}"), &e, format!("d={d}")),
                    }));
                }
                for d in 2..=p.max_dim {
                    report.push(timed(opts.timings, || match affine::weyl_inner(d - 1, d, p.quadrature) {
                        Ok(v) => Check::within(
                            format!("orthogonality/d={},{d}", d - 1),
                            v.norm(),
                            affine::density::QUADRATURE_TOL,
                            format!("d={d} N={}", p.quadrature),
                        ),
                        Err(e) => Check::errored(format!("orthogonality/d={d}"), &e, format!("d={d}")),
                    }));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_small_sweeps() {
        let r = run_identities(1, 1, RunOptions::default());
        assert!(r.all_pass());
        assert!(r.summary.total > 0);
        let r0 = run_identities(0, 0, RunOptions::default());
        assert_eq!(r0.summary.total, 0);
        assert!(r0.all_pass());
    }

    #[test]
    fn failures_carry_reproducers() {
        let c = Check::compare("x", "1", "2", "lambda=(1)");
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.reproducer.as_deref(), Some("lambda=(1)"));
        assert_ne!(c.lhs_digest, c.rhs_digest);
        let c = Check::within("y", 1e-3, 1e-9, "seed=0");
        assert!(!c.passed());
    }

    #[test]
    fn affine_report_for_doubled_a1() {
        let e: CatalogEntry = "m*Phi0:Phi0@m=2,Phi0=A1".parse().unwrap();
        let p = AffineParams {
            max_dim: 3,
            ..AffineParams::default()
        };
        let r = run_affine(&e, &p, RunOptions::default()).unwrap();
        assert!(r.all_pass(), "{}", r.to_text());
        assert_eq!(r.to_json(), run_affine(&e, &p, RunOptions::default()).unwrap().to_json());
    }

    #[test]
    fn theorem_rejects_inadmissible() {
        let cache = WeightCache::in_memory();
        let bad = run_theorem(1, &Weight::from([2, 0, -1]), &rational::q(20), &cache, RunOptions::default());
        assert!(matches!(bad, Err(Error::Inadmissible { .. })));
    }
}
