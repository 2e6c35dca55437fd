//! Integer polynomials in `t` and in `(t, u)` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial in `t`; `coeffs[k]` is the coefficient of `t^k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, k: u64) -> Self {
        let mut coeffs = vec![BigInt::zero(); k as usize + 1];
        coeffs[k as usize] = c;
        Self::from_coeffs(coeffs)
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: u64) -> Self {
        Self::one() - Self::monomial(BigInt::one(), k)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Power-series coefficients `0..=bound` of `self / prod_j (1 - t^{w_j})`.
    pub fn expand_over(&self, denominator_exps: &[u64], bound: usize) -> Vec<BigInt> {
        let mut series: Vec<BigInt> = (0..=bound).map(|k| self.coeff(k)).collect();
        // Multiplying by 1/(1 - t^e) is a running sum with stride e.
        for &e in denominator_exps {
            let e = e as usize;
            for k in e..=bound {
                let prev = series[k - e].clone();
                series[k] += prev;
            }
        }
        series
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt, powers: &[(&str, u64)]) -> fmt::Result {
    let neg = c.is_negative();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    let mag = c.abs();
    let vars: Vec<String> = powers
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if vars.is_empty() {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    f.write_str(&vars.join("*"))
}

impl fmt::Display for Poly {
    /// Descending powers, e.g. `t^3 - 2*t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_term(f, first, c, &[("t", k as u64)])?;
            first = false;
        }
        Ok(())
    }
}

/// Sparse polynomial in `t` and `u`, keyed by `(u exponent, t exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u64), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(c: BigInt, u: u32, t: u64) -> Self {
        let mut p = Self::zero();
        p.add_term(c, u, t);
        p
    }

    pub fn add_term(&mut self, c: BigInt, u: u32, t: u64) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((u, t)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(u, t));
        }
    }

    pub fn coeff(&self, u: u32, t: u64) -> BigInt {
        self.terms.get(&(u, t)).cloned().unwrap_or_default()
    }

    /// Nonzero terms as `((u, t), coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u64), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitutes `u = -1`.
    pub fn at_u_minus_one(&self) -> Poly {
        let mut out = Poly::zero();
        for (&(u, t), c) in &self.terms {
            let c = if u % 2 == 0 { c.clone() } else { -c.clone() };
            out = out + Poly::monomial(c, t);
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(mut self, rhs: BiPoly) -> BiPoly {
        for ((u, t), c) in rhs.terms {
            self.add_term(c, u, t);
        }
        self
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(u1, t1), a) in &self.terms {
            for (&(u2, t2), b) in &rhs.terms {
                out.add_term(a * b, u1 + u2, t1 + t2);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    /// Terms by descending `t` degree, then descending `u` degree, e.g.
    /// `2*t^12*u^3 + t^11*u^2 + 3*t^7*u`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<&(u32, u64)> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        for (i, key) in keys.into_iter().enumerate() {
            write_term(f, i == 0, &self.terms[key], &[("t", key.1), ("u", u64::from(key.0))])?;
        }
        Ok(())
    }
}
