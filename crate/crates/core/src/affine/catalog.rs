//! The classical irreducible affine root systems `(Φ, R′)` and their selector strings.
//!
//! Fibers follow the two local models: either `{α + kβ₀ : 0 ≤ k < m}` with `β₀` of
//! order `m`, or `{α + kβ₀ : 0 ≤ k < 2m} ∪ {2α + (2k+1)β₀ : 0 ≤ k < m}` with `β₀` of
//! order `2m`. Multiplicities therefore scale with `m`; at `m = 1` they reduce to
//! the familiar values (for `(A_{2n}, BC_n)`: 2 and 4 on short roots, 2 on middle ones).

use std::fmt;
use std::str::FromStr;

use super::system::{AffineRootSystem, AffineWeight, GeneralizedTorus};
use crate::error::{Error, Result};
use crate::lattice::Weight;
use crate::rootsys::{Kind, RootSystem};

/// One catalog family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CatalogKind {
    /// `(mΦ₀, Φ₀)` for a reduced classical `Φ₀`, given as a label such as `A1` or `B2`.
    Diagonal(String),
    /// `(mA_{2n}, BC_n)`
    OddUnitary,
    /// `(mA_{2n−1}, C_n)`
    EvenUnitary,
    /// `(mD_n, B_{n−1})`
    Orthogonal,
}

/// A catalog entry with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CatalogEntry {
    pub kind: CatalogKind,
    pub m: usize,
    pub n: usize,
}

impl CatalogEntry {
    pub fn diagonal(phi0: &str, m: usize) -> Self {
        CatalogEntry {
            kind: CatalogKind::Diagonal(phi0.to_string()),
            m,
            n: 0,
        }
    }

    pub fn odd_unitary(m: usize, n: usize) -> Self {
        CatalogEntry {
            kind: CatalogKind::OddUnitary,
            m,
            n,
        }
    }

    pub fn even_unitary(m: usize, n: usize) -> Self {
        CatalogEntry {
            kind: CatalogKind::EvenUnitary,
            m,
            n,
        }
    }

    pub fn orthogonal(m: usize, n: usize) -> Self {
        CatalogEntry {
            kind: CatalogKind::Orthogonal,
            m,
            n,
        }
    }

    /// Numeric kind, 1 to 4.
    pub fn number(&self) -> u8 {
        match self.kind {
            CatalogKind::Diagonal(_) => 1,
            CatalogKind::OddUnitary => 2,
            CatalogKind::EvenUnitary => 3,
            CatalogKind::Orthogonal => 4,
        }
    }

    /// `|S/S⁰|` of the smallest torus carrying the entry.
    pub fn natural_order(&self) -> i64 {
        match self.kind {
            CatalogKind::Diagonal(_) => self.m as i64,
            _ => 2 * self.m as i64,
        }
    }

    pub fn build(&self) -> Result<AffineRootSystem> {
        self.build_on(self.natural_order())
    }

    /// Realize the entry on a torus whose component group has order `order`,
    /// a multiple of [`natural_order`](Self::natural_order).
    pub fn build_on(&self, order: i64) -> Result<AffineRootSystem> {
        if self.m == 0 {
            return Err(Error::InvalidAffine("m must be at least 1".into()));
        }
        let nat = self.natural_order();
        if order < 1 || order % nat != 0 {
            return Err(Error::InvalidAffine(format!(
                "fiber order {nat} does not divide the component group order {order}"
            )));
        }
        let step = order / nat;
        let m = self.m as i64;
        let label = self.to_string();
        // (restricted root, torsions in units of the natural order)
        let mut fibers: Vec<(Weight, Vec<i64>)> = Vec::new();
        let all = |k: i64| (0..k).collect::<Vec<_>>();
        let rank = match &self.kind {
            CatalogKind::Diagonal(phi0) => {
                let sys = RootSystem::parse_label(phi0, None)?;
                if sys.is_empty() || phi0.contains("BC") {
                    return Err(Error::InvalidAffine(format!("{phi0} is not a reduced classical system")));
                }
                for r in sys.roots() {
                    fibers.push((r.clone(), all(m)));
                }
                sys.rank()
            }
            CatalogKind::OddUnitary => {
                self.need_n(1)?;
                for r in RootSystem::parse_label(&format!("BC{}", self.n), None)?.roots() {
                    let ts = if r.norm2() == 4 {
                        (0..m).map(|k| 2 * k + 1).collect()
                    } else {
                        all(2 * m)
                    };
                    fibers.push((r.clone(), ts));
                }
                self.n
            }
            CatalogKind::EvenUnitary => {
                self.need_n(2)?;
                for r in RootSystem::parse_label(&format!("C{}", self.n), None)?.roots() {
                    let ts = if r.norm2() == 4 {
                        (0..m).map(|k| 2 * k).collect()
                    } else {
                        all(2 * m)
                    };
                    fibers.push((r.clone(), ts));
                }
                self.n
            }
            CatalogKind::Orthogonal => {
                self.need_n(2)?;
                for r in RootSystem::parse_label(&format!("B{}", self.n - 1), None)?.roots() {
                    let ts = if r.norm2() == 2 {
                        (0..m).map(|k| 2 * k).collect()
                    } else {
                        all(2 * m)
                    };
                    fibers.push((r.clone(), ts));
                }
                self.n - 1
            }
        };
        let torus = GeneralizedTorus::new(rank, order)?;
        let roots = fibers
            .into_iter()
            .flat_map(|(r, ts)| ts.into_iter().map(move |t| AffineWeight::new(r.clone(), t * step, order)));
        AffineRootSystem::new(torus, roots, &label)
    }

    fn need_n(&self, min: usize) -> Result<()> {
        if self.n < min {
            return Err(Error::InvalidAffine(format!("{self} needs n >= {min}")));
        }
        Ok(())
    }

    /// The entries used by the standard test sweeps: `m ≤ 3` and small rank.
    pub fn standard_entries() -> Vec<CatalogEntry> {
        let mut out = Vec::new();
        for m in 1..=3 {
            for phi0 in ["A1", "A2", "B2", "C2", "D3"] {
                out.push(Self::diagonal(phi0, m));
            }
            for n in 1..=2 {
                out.push(Self::odd_unitary(m, n));
            }
            out.push(Self::even_unitary(m, 2));
            for n in 2..=3 {
                out.push(Self::orthogonal(m, n));
            }
        }
        out
    }
}

impl fmt::Display for CatalogEntry {
    /// Canonical selector, e.g. `m*Phi0:Phi0@m=2,Phi0=A1` or `m*A2n:BCn@m=2,n=1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            CatalogKind::Diagonal(p) => write!(f, "m*Phi0:Phi0@m={},Phi0={p}", self.m),
            CatalogKind::OddUnitary => write!(f, "m*A2n:BCn@m={},n={}", self.m, self.n),
            CatalogKind::EvenUnitary => write!(f, "m*A2n-1:Cn@m={},n={}", self.m, self.n),
            CatalogKind::Orthogonal => write!(f, "m*Dn:Bn-1@m={},n={}", self.m, self.n),
        }
    }
}

impl FromStr for CatalogEntry {
    type Err = Error;

    /// Accepts the canonical selectors; the family may also be given by its number `1`–`4`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::SelectorSyntax(s.to_string());
        let (family, params) = s.trim().split_once('@').ok_or_else(err)?;
        let mut m = None;
        let mut n = None;
        let mut phi0 = None;
        for kv in params.split(',') {
            let (k, v) = kv.split_once('=').ok_or_else(err)?;
            match k.trim() {
                "m" => m = Some(v.trim().parse::<usize>().map_err(|_| err())?),
                "n" => n = Some(v.trim().parse::<usize>().map_err(|_| err())?),
                "Phi0" => phi0 = Some(v.trim().to_string()),
                _ => return Err(err()),
            }
        }
        let m = m.ok_or_else(err)?;
        let kind = match family.trim() {
            "m*Phi0:Phi0" | "1" => {
                let p = phi0.ok_or_else(err)?;
                let body = p.trim_end_matches(|c: char| c.is_ascii_digit());
                body.parse::<Kind>().map_err(|_| err())?;
                CatalogKind::Diagonal(p)
            }
            "m*A2n:BCn" | "2" => CatalogKind::OddUnitary,
            "m*A2n-1:Cn" | "3" => CatalogKind::EvenUnitary,
            "m*Dn:Bn-1" | "4" => CatalogKind::Orthogonal,
            "m*D4:G2" | "m*E6:F4" | "5" | "6" => {
                return Err(Error::Unsupported(format!("exceptional catalog entry {family}")))
            }
            _ => return Err(err()),
        };
        let n = match kind {
            CatalogKind::Diagonal(_) => 0,
            _ => n.ok_or_else(err)?,
        };
        Ok(CatalogEntry { kind, m, n })
    }
}
