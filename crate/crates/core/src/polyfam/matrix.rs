//! Square matrices of polynomials and exact determinants.

use std::collections::HashMap;

use rayon::prelude::*;

use super::polynomial::Polynomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix {
    n: usize,
    entries: Vec<Polynomial>,
}

/// Sizes up to this use cofactor expansion; larger ones use Bareiss elimination.
pub const COFACTOR_LIMIT: usize = 4;

impl SymbolicMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        SymbolicMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::SizeMismatch("matrix rows must all have length n".into()));
        }
        Ok(SymbolicMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        self.entries.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn determinant(&self) -> Polynomial {
        if self.n <= COFACTOR_LIMIT {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along rows, memoized on the set of remaining columns.
    pub fn det_cofactor(&self) -> Polynomial {
        let n = self.n;
        if n == 0 {
            return Polynomial::one();
        }
        // minors[mask] = det of rows (n − |mask|)..n restricted to columns in mask
        let mut minors: HashMap<u32, Polynomial> = HashMap::new();
        minors.insert(0, Polynomial::one());
        for size in 1..=n {
            let row = n - size;
            let masks: Vec<u32> = (0u32..(1 << n)).filter(|m| m.count_ones() as usize == size).collect();
            let computed: Vec<(u32, Polynomial)> = masks
                .par_iter()
                .map(|&mask| {
                    let mut acc = Polynomial::zero();
                    for (pos, col) in (0..n).filter(|c| mask & (1 << c) != 0).enumerate() {
                        let a = self.get(row, col);
                        if a.is_zero() {
                            continue;
                        }
                        let term = a.mul(&minors[&(mask & !(1 << col))]);
                        acc = if pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                    }
                    (mask, acc)
                })
                .collect();
            minors.extend(computed);
        }
        minors.remove(&((1u32 << n) - 1)).expect("full minor computed")
    }

    /// Fraction-free elimination; every division is exact.
    pub fn det_bareiss(&self) -> Polynomial {
        let n = self.n;
        if n == 0 {
            return Polynomial::one();
        }
        let mut m = self.rows();
        let mut prev = Polynomial::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return Polynomial::zero(),
                }
            }
            let pivot = m[k][k].clone();
            let pivot_row = m[k].clone();
            let updated: Vec<Vec<Polynomial>> = (k + 1..n)
                .into_par_iter()
                .map(|i| {
                    let mut row = m[i].clone();
                    for j in k + 1..n {
                        let num = row[j].mul(&pivot).sub(&m[i][k].mul(&pivot_row[j]));
                        row[j] = num.exact_div(&prev).expect("Bareiss quotients are exact");
                    }
                    row[k] = Polynomial::zero();
                    row
                })
                .collect();
            for (off, row) in updated.into_iter().enumerate() {
                m[k + 1 + off] = row;
            }
            prev = pivot;
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            d.neg()
        } else {
            d
        }
    }
}
