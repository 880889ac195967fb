//! Sparse polynomials over `Q` in `x_0, x_1, x_2, ...`.
//!
//! A monomial is the multiset of its variable indices, stored sorted in
//! descending order. Monomials compare by total degree, then lexicographically
//! on that list; this is graded lex with higher indices as larger variables,
//! hence a monomial order, which the division routine relies on.
//!
//! `x_0` is an ordinary variable here so that homogeneity of determinant
//! expansions can be checked; [`Polynomial::eliminate_x0`] sets it to 1.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Q};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_indices(mut idx: Vec<u32>) -> Self {
        idx.sort_unstable_by(|a, b| b.cmp(a));
        Monomial(idx)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn exponent(&self, var: u32) -> usize {
        self.0.iter().filter(|&&v| v == var).count()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len());
        let mut j = 0;
        for &x in a {
            if j < b.len() && b[j] == x {
                j += 1;
            } else if j < b.len() && b[j] > x {
                return None;
            } else {
                out.push(x);
            }
        }
        (j == b.len()).then_some(Monomial(out))
    }

    /// Exponent map `index -> power`, ascending by index.
    pub fn exponents(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &v in &self.0 {
            *m.entry(v).or_insert(0) += 1;
        }
        m
    }

    fn without(&self, var: u32) -> Monomial {
        Monomial(self.0.iter().copied().filter(|&v| v != var).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.exponents().into_iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(k: u32) -> Self {
        Self::term(Monomial(vec![k]), Q::one())
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Leading term under the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    /// `Some(c)` if the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.as_constant().is_some_and(|c| !c.is_zero())
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Every monomial has total degree `d` (counting `x_0`).
    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Indices of variables that occur, ascending.
    pub fn variables(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.terms.keys().flat_map(|m| m.0.iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn degree_in(&self, var: u32) -> usize {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// Coefficient of `x_var^e`, as a polynomial free of `x_var`.
    pub fn coeff_in(&self, var: u32, e: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.exponent(var) == e {
                out.add_term(m.without(var), c.clone());
            }
        }
        out
    }

    /// Set `x_0 = 1`.
    pub fn eliminate_x0(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.without(0), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Q) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        // multiplying by a monomial preserves the order, so no merging is needed
        Polynomial {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Multivariate division by a single divisor: `self = q·g + r` where no
    /// term of `r` is divisible by the leading monomial of `g`.
    ///
    /// With one divisor, `r = 0` exactly when `g` divides `self`.
    pub fn div_rem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        let (lm, lc) = match g.leading() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::InexactDivision),
        };
        let mut p = self.clone();
        let mut q = Polynomial::zero();
        let mut r = Polynomial::zero();
        while let Some((m, c)) = p.terms.pop_last() {
            match m.div(&lm) {
                Some(t) => {
                    let tc = &c / &lc;
                    // the leading term cancels by construction; subtract the rest
                    for (gm, gc) in g.terms.iter().rev().skip(1) {
                        p.add_term(gm.mul(&t), -(gc * &tc));
                    }
                    q.add_term(t, tc);
                }
                None => r.add_term(m, c),
            }
        }
        Ok((q, r))
    }

    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.div_rem(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn divides(&self, p: &Polynomial) -> Result<bool> {
        Ok(p.div_rem(self)?.1.is_zero())
    }

    /// `x_{2k+1} ↦ −x_{2k+1}`, `x_{2k} ↦ x_{2k}`.
    pub fn sigma(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let odd = m.0.iter().filter(|&&v| v % 2 == 1).count();
                    (m.clone(), if odd % 2 == 1 { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Evaluate with `x_k = values(k)`.
    pub fn eval(&self, values: impl Fn(u32) -> Q) -> Q {
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &v in &m.0 {
                t *= values(v);
            }
            acc += t;
        }
        acc
    }
}

/// Terms from highest to lowest, e.g. `3*x1^2*x2 - x2^2 + 1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Accepts the output of `Display`: signed sums of `c*x1^2*x3` style terms,
    /// where `c` may be a fraction `p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::PolynomialSyntax(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut out = Polynomial::zero();
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                chunks.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && i == 0 {
                neg = ch == '-';
            } else if ch == '+' || ch == '-' {
                return Err(err());
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err());
        }
        chunks.push((neg, cur));
        for (neg, chunk) in chunks {
            let mut coeff = Q::one();
            let mut idx = Vec::new();
            for factor in chunk.split('*') {
                if let Some(rest) = factor.strip_prefix('x') {
                    let (v, e) = match rest.split_once('^') {
                        Some((v, e)) => (v, e.parse::<usize>().map_err(|_| err())?),
                        None => (rest, 1),
                    };
                    let v: u32 = v.parse().map_err(|_| err())?;
                    idx.extend(std::iter::repeat_n(v, e));
                } else {
                    coeff *= rational::parse(factor).map_err(|_| err())?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(Monomial::from_indices(idx), coeff);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    coeff: String,
    exponents: BTreeMap<String, u32>,
}

/// JSON mirror: terms from highest to lowest as `{coeff, exponents: {"index": power}}`.
impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let recs: Vec<TermRecord> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| TermRecord {
                coeff: rational::format(c),
                exponents: m.exponents().into_iter().map(|(k, e)| (k.to_string(), e)).collect(),
            })
            .collect();
        recs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let recs: Vec<TermRecord> = Vec::deserialize(d)?;
        let mut out = Polynomial::zero();
        for r in recs {
            let c = rational::parse(&r.coeff).map_err(D::Error::custom)?;
            let mut idx = Vec::new();
            for (k, e) in r.exponents {
                let k: u32 = k.parse().map_err(D::Error::custom)?;
                idx.extend(std::iter::repeat_n(k, e as usize));
            }
            out.add_term(Monomial::from_indices(idx), c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn display_and_parse() {
        let f = p("1 - x2^2 + 3*x1^2*x2");
        assert_eq!(f.to_string(), "3*x1^2*x2 - x2^2 + 1");
        assert_eq!(p(&f.to_string()), f);
        assert_eq!(p("-1/2*x3 + x1").to_string(), "-1/2*x3 + x1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert!("x1 +".parse::<Polynomial>().is_err());
        assert!("y1".parse::<Polynomial>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = p("x1 - x2");
        let b = p("x1 + x2");
        assert_eq!(a.mul(&b), p("x1^2 - x2^2"));
        assert_eq!(a.add(&b), p("2*x1"));
        assert_eq!(a.sub(&a), Polynomial::zero());
        assert_eq!(p("x0*x1 + x0^2").eliminate_x0(), p("x1 + 1"));
        assert!(p("x0*x1 + x0^2").is_homogeneous(2));
    }

    #[test]
    fn division() {
        let g = p("1 - x2");
        let h = p("1 + x2 - 2*x1^2");
        let f = g.mul(&h);
        assert_eq!(f.exact_div(&g).unwrap(), h);
        assert!(g.divides(&f).unwrap());
        let (qq, r) = p("x1^2 + x3").div_rem(&p("x1 + 1")).unwrap();
        assert!(!r.is_zero());
        assert_eq!(qq.mul(&p("x1 + 1")).add(&r), p("x1^2 + x3"));
        assert!(p("x1^2 + x3").exact_div(&p("x1 + 1")).is_err());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(p("x1").sigma(), p("-x1"));
        assert_eq!(p("1 - x1").sigma(), p("1 + x1"));
        let f = p("x1*x3 + x2^2*x1 - 5*x4");
        assert_eq!(f.sigma().sigma(), f);
    }

    #[test]
    fn json_roundtrip() {
        let f = p("3*x1^2*x2 - x2^2 + 1/2");
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.starts_with(r#"[{"coeff":"3","exponents":{"1":2,"2":1}}"#));
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn coefficient_extraction() {
        let f = p("x5*x1 - x5 + x2^2");
        assert_eq!(f.degree_in(5), 1);
        assert_eq!(f.coeff_in(5, 1), p("x1 - 1"));
        assert_eq!(f.coeff_in(5, 0), p("x2^2"));
        assert_eq!(f.eval(|k| q(k as i64)), q(4));
    }
}
