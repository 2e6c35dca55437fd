//! Monomials, weight vectors and the weighted Borel order.
//!
//! Variables are indexed from 0 internally; `x1` in text is index 0. The
//! substitution `psi` sends `x_i` to `y_i^{w_i}` and is never expanded into
//! factor lists: every comparison below works on weighted prefix sums, which
//! are the counting functions of the factored forms.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{check_dim, Error, Result};

/// Exponent vector of a monomial over a fixed number of variables.
///
/// The derived `Ord` is lexicographic with `x1 > x2 > ... > xn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    /// The unit monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The variable `x_i` (0-based) in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Standard (unweighted) degree.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Product of two monomials. Panics if an exponent overflows `u32`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// `self * x_i`.
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = exps[i].checked_add(1).expect("exponent overflow");
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { exps }
    }

    /// Largest index of a variable dividing the monomial. The unit monomial
    /// reports index 0 (that is, `x1`), following the tree convention
    /// `max(1) = 1`.
    pub fn max_index(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).unwrap_or(0)
    }

    /// Product of the first `d` factors of the factored form, or the
    /// monomial itself when `d` exceeds its degree.
    pub fn truncate(&self, d: u64) -> Monomial {
        let mut left = d;
        let exps = self
            .exps
            .iter()
            .map(|&e| {
                let take = u64::from(e).min(left);
                left -= take;
                take as u32
            })
            .collect();
        Monomial { exps }
    }

    pub fn factored(&self) -> FactoredForm {
        FactoredForm::from_monomial(self)
    }

    /// Graded order used for printing: lower degree first, then
    /// lexicographically larger first.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monotone non-increasing tuple of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct WeightVector {
    weights: Vec<u32>,
}

impl WeightVector {
    pub fn new(weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeights(format!("weight {} is not positive", i + 1)));
        }
        if let Some(i) = weights.windows(2).position(|p| p[0] < p[1]) {
            return Err(Error::InvalidWeights(format!(
                "weights must be non-increasing, but w{} = {} < w{} = {}",
                i + 1,
                weights[i],
                i + 2,
                weights[i + 1]
            )));
        }
        Ok(Self { weights })
    }

    /// The standard grading.
    pub fn ones(n: usize) -> Self {
        Self { weights: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.weights
    }

    pub fn get(&self, i: usize) -> u32 {
        self.weights[i]
    }

    pub fn max_weight(&self) -> u32 {
        self.weights[0]
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Non-decreasing list of variable indices whose product is a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredForm {
    nvars: usize,
    indices: Vec<usize>,
}

impl FactoredForm {
    pub fn from_monomial(m: &Monomial) -> Self {
        let indices = m
            .exps
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
            .collect();
        Self { nvars: m.nvars(), indices }
    }

    /// Builds a factored form from any list of indices; the list is sorted.
    pub fn from_indices(nvars: usize, mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        Self { nvars, indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn to_monomial(&self) -> Monomial {
        let mut exps = vec![0u32; self.nvars];
        for &i in &self.indices {
            exps[i] += 1;
        }
        Monomial { exps }
    }

    /// All prefixes, from the empty product up to the full form.
    pub fn prefixes(&self) -> impl Iterator<Item = Monomial> + '_ {
        (0..=self.indices.len()).map(move |k| {
            FactoredForm { nvars: self.nvars, indices: self.indices[..k].to_vec() }.to_monomial()
        })
    }
}

/// Weighted degree `sum_i w_i * m_i`.
pub fn weighted_degree(m: &Monomial, w: &WeightVector) -> Result<u64> {
    check_dim(w.len(), m.nvars())?;
    m.exps.iter().zip(&w.weights).try_fold(0u64, |acc, (&e, &wi)| {
        acc.checked_add(u64::from(e) * u64::from(wi)).ok_or(Error::Overflow("weighted degree"))
    })
}

/// Image of `m` under `x_i -> y_i^{w_i}`.
pub fn psi(m: &Monomial, w: &WeightVector) -> Result<Monomial> {
    check_dim(w.len(), m.nvars())?;
    let exps = m
        .exps
        .iter()
        .zip(&w.weights)
        .map(|(&e, &wi)| e.checked_mul(wi).ok_or(Error::Overflow("psi image")))
        .collect::<Result<_>>()?;
    Ok(Monomial { exps })
}

/// Preimage of `u` under `psi`, or `None` when `u` is not in the image.
pub fn psi_inverse(u: &Monomial, w: &WeightVector) -> Result<Option<Monomial>> {
    check_dim(w.len(), u.nvars())?;
    let mut exps = Vec::with_capacity(u.nvars());
    for (&e, &wi) in u.exps.iter().zip(&w.weights) {
        if e % wi != 0 {
            return Ok(None);
        }
        exps.push(e / wi);
    }
    Ok(Some(Monomial { exps }))
}

fn prefix_sums(m: &Monomial, w: &WeightVector) -> Result<Vec<u64>> {
    let mut acc = 0u64;
    m.exps
        .iter()
        .zip(&w.weights)
        .map(|(&e, &wi)| {
            acc = acc
                .checked_add(u64::from(e) * u64::from(wi))
                .ok_or(Error::Overflow("weighted degree"))?;
            Ok(acc)
        })
        .collect()
}

/// `m ⪯_w u`: `u` lies in the weighted Borel closure of `m`.
///
/// The k-th factor of `psi(u)` has index at most the k-th factor of
/// `psi(m)` for every k exactly when every weighted prefix sum of `u`
/// dominates the matching prefix sum of `m`.
pub fn w_borel_below(m: &Monomial, u: &Monomial, w: &WeightVector) -> Result<bool> {
    check_dim(w.len(), m.nvars())?;
    check_dim(w.len(), u.nvars())?;
    let pm = prefix_sums(m, w)?;
    let pu = prefix_sums(u, w)?;
    Ok(pu.iter().zip(&pm).all(|(a, b)| a >= b))
}

/// Meet of `u` and `v` in the weighted Borel order, pulled back along `psi`.
///
/// The factor-wise minimum of two factored forms (with the tail of the
/// longer one) has counting function equal to the pointwise maximum of the
/// two counting functions, so the meet is read off from prefix maxima.
pub fn meet_w(u: &Monomial, v: &Monomial, w: &WeightVector) -> Result<Option<Monomial>> {
    check_dim(w.len(), u.nvars())?;
    check_dim(w.len(), v.nvars())?;
    let pu = prefix_sums(u, w)?;
    let pv = prefix_sums(v, w)?;
    let mut prev = 0u64;
    let mut exps = Vec::with_capacity(w.len());
    for ((a, b), &wi) in pu.iter().zip(&pv).zip(&w.weights) {
        let cur = *a.max(b);
        let e = cur - prev;
        prev = cur;
        if !e.is_multiple_of(u64::from(wi)) {
            return Ok(None);
        }
        let x = u32::try_from(e / u64::from(wi)).map_err(|_| Error::Overflow("meet"))?;
        exps.push(x);
    }
    Ok(Some(Monomial { exps }))
}

/// Weighted prefix sums of `psi(m)`, answering truncation queries on
/// `psi(m)` without expanding it.
#[derive(Clone, Debug)]
pub struct PsiProfile {
    prefix: Vec<u64>,
    max_index: usize,
}

impl PsiProfile {
    pub fn new(m: &Monomial, w: &WeightVector) -> Result<Self> {
        check_dim(w.len(), m.nvars())?;
        Ok(Self { prefix: prefix_sums(m, w)?, max_index: m.max_index() })
    }

    /// Degree of `psi(m)`, i.e. the weighted degree of `m`.
    pub fn degree(&self) -> u64 {
        self.prefix.last().copied().unwrap_or(0)
    }

    /// `max(trunc_e(psi(m)))`, 0-based, with the unit convention for `e = 0`.
    pub fn trunc_max(&self, e: u64) -> usize {
        if e == 0 {
            return 0;
        }
        if e >= self.degree() {
            return self.max_index;
        }
        self.prefix.partition_point(|&p| p < e)
    }
}
