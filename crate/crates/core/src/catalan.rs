//! Weighted Catalan diagrams.
//!
//! Row `a` of `C_{w,m}` counts, by largest variable index, the degree-`a`
//! vertices of `T_{w,m}`. Rows `a >= deg_w(m)` count the minimal generators
//! of the closure of `m` by weighted degree and largest index.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{check_dim, Result};
use crate::monomial::{Monomial, PsiProfile, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalanDiagram {
    monomial: Monomial,
    weights: WeightVector,
    degree: u64,
    entries: Vec<Vec<BigUint>>,
}

/// Generator count for one (weighted degree, largest index) cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GeneratorStat {
    pub degree: u64,
    /// 0-based index of the largest variable.
    pub max_index: usize,
    pub count: BigUint,
}

impl CatalanDiagram {
    pub fn monomial(&self) -> &Monomial {
        &self.monomial
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// Weighted degree `d` of the monomial; rows `0..d` describe the
    /// quotient, rows `d..` the generators.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.entries
    }

    pub fn entry(&self, a: usize, b: usize) -> &BigUint {
        &self.entries[a][b]
    }

    pub fn row_sum(&self, a: usize) -> BigUint {
        self.entries[a].iter().sum()
    }

    /// Entries as `u64`, when they fit.
    pub fn to_u64_rows(&self) -> Option<Vec<Vec<u64>>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|x| u64::try_from(x).ok()).collect())
            .collect()
    }

    /// Row layout `| 1 0 0 |` with each column right-aligned to its widest
    /// entry.
    pub fn render(&self) -> String {
        let ncols = self.weights.len();
        let widths: Vec<usize> = (0..ncols)
            .map(|b| self.entries.iter().map(|r| r[b].to_string().len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for row in &self.entries {
            out.push('|');
            for (x, wd) in row.iter().zip(&widths) {
                out.push_str(&format!(" {:>wd$}", x.to_string(), wd = *wd));
            }
            out.push_str(" |\n");
        }
        out
    }
}

/// Fills `C_{w,m}` by the recursion
/// `C(a,b) = sum_{k<=b} C(a - w_b, k)` when `0 <= a - w_b < d` and
/// `max(trunc_{a-w_b+1}(psi(m))) >= b`, else 0, seeded with `C(0,0) = 1`.
/// The matrix has `d + max(w)` rows and one column per variable.
pub fn catalan_diagram(m: &Monomial, w: &WeightVector) -> Result<CatalanDiagram> {
    check_dim(w.len(), m.nvars())?;
    let profile = PsiProfile::new(m, w)?;
    let d = profile.degree();
    let n = w.len();
    let nrows = usize::try_from(d + u64::from(w.max_weight())).expect("row count fits in memory");
    let mut entries: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); n]; nrows];
    entries[0][0] = BigUint::one();
    for a in 1..nrows {
        for b in 0..n {
            let wb = w.get(b) as usize;
            if a < wb {
                continue;
            }
            let src = a - wb;
            if src as u64 >= d || profile.trunc_max(src as u64 + 1) < b {
                continue;
            }
            let total: BigUint = entries[src][..=b].iter().sum();
            entries[a][b] = total;
        }
    }
    Ok(CatalanDiagram { monomial: m.clone(), weights: w.clone(), degree: d, entries })
}

/// Nonzero entries of the generator rows `a >= d`.
pub fn generator_stats(diagram: &CatalanDiagram) -> Vec<GeneratorStat> {
    let d = diagram.degree as usize;
    diagram.entries[d..]
        .iter()
        .enumerate()
        .flat_map(|(off, row)| {
            row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(b, c)| GeneratorStat {
                degree: (d + off) as u64,
                max_index: b,
                count: c.clone(),
            })
        })
        .collect()
}
