//! Monomial ideals kept as minimal generating sets.

use std::fmt;

use serde::Serialize;

use crate::error::{check_dim, Result};
use crate::monomial::Monomial;

/// A monomial ideal in `n` variables, stored as its minimal generators in
/// graded order (lower degree first, lex-larger first within a degree).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` under divisibility.
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        for g in &all {
            check_dim(nvars, g.nvars())?;
        }
        // After sorting by degree a generator can only be divided by an
        // earlier one.
        all.sort_by(|a, b| a.graded_cmp(b));
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        for m in all {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        Ok(Self { nvars, gens })
    }

    pub fn zero(nvars: usize) -> Self {
        Self { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        Self { nvars, gens: vec![Monomial::one(nvars)] }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    /// True for the zero ideal, which has no generators.
    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        MonomialIdeal::new(self.nvars, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        let prods = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.mul(b)));
        MonomialIdeal::new(self.nvars, prods)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.nvars, other.nvars)?;
        let lcms = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)));
        MonomialIdeal::new(self.nvars, lcms)
    }

    /// Largest standard degree of a minimal generator.
    pub fn max_degree(&self) -> Option<u64> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// Minimal generators of standard degree `d`.
    pub fn gens_of_degree(&self, d: u64) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.degree() == d)
    }

    /// Smallest generator in lex order with `x1 > ... > xn`.
    pub fn lex_smallest(&self) -> Option<&Monomial> {
        self.gens.iter().min()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
