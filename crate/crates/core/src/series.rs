//! Stanley decompositions, Hilbert series and Poincaré series of w-stable
//! ideals, with `deg(x_i) = w_i`.
//!
//! Principal ideals go through the truncation tree and the Catalan diagram;
//! everything else goes through truncations of `Borel(psi(I))`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::catalan::catalan_diagram;
use crate::closure::{borel_closure, borel_gens, ensure_w_stable, w_borel_gens};
use crate::error::{check_dim, Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{psi, psi_inverse, weighted_degree, Monomial, PsiProfile, WeightVector};
use crate::poly::{BiPoly, Poly};
use crate::tree::tree_from_monomial;

/// `coset * K[x_j : j in free_vars]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StanleyPiece {
    pub coset: Monomial,
    /// 0-based variable indices, increasing.
    pub free_vars: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StanleyDecomposition {
    pub pieces: Vec<StanleyPiece>,
}

impl StanleyDecomposition {
    fn sorted(mut pieces: Vec<StanleyPiece>) -> Self {
        pieces.sort_by(|a, b| a.coset.graded_cmp(&b.coset).then_with(|| a.free_vars.cmp(&b.free_vars)));
        Self { pieces }
    }

    /// Hilbert numerator over `prod_{j} (1 - t^{w_j})`.
    pub fn hilbert_numerator(&self, w: &WeightVector) -> Result<Poly> {
        let mut num = Poly::zero();
        for p in &self.pieces {
            let mut term = Poly::monomial(BigInt::one(), weighted_degree(&p.coset, w)?);
            for j in (0..w.len()).filter(|j| !p.free_vars.contains(j)) {
                term = &term * &Poly::one_minus_t_pow(u64::from(w.get(j)));
            }
            num = num + term;
        }
        Ok(num)
    }

    /// Number of monomials of each weighted degree `0..=bound` covered by the
    /// pieces.
    pub fn counts(&self, w: &WeightVector, bound: usize) -> Result<Vec<BigInt>> {
        let mut total = vec![BigInt::zero(); bound + 1];
        for p in &self.pieces {
            let exps: Vec<u64> = p.free_vars.iter().map(|&j| u64::from(w.get(j))).collect();
            let shift = Poly::monomial(BigInt::one(), weighted_degree(&p.coset, w)?);
            for (t, c) in shift.expand_over(&exps, bound).into_iter().enumerate() {
                total[t] += c;
            }
        }
        Ok(total)
    }
}

/// The single weighted Borel generator of a principal w-stable ideal.
pub fn principal_generator(ideal: &MonomialIdeal, w: &WeightVector) -> Result<Option<Monomial>> {
    if ideal.is_zero() {
        return Ok(None);
    }
    let gens = w_borel_gens(ideal, w)?;
    Ok(if gens.len() == 1 { gens.into_iter().next() } else { None })
}

/// Stanley decomposition of `S/I` for a w-stable `I`.
pub fn stanley_decomposition(ideal: &MonomialIdeal, w: &WeightVector) -> Result<StanleyDecomposition> {
    ensure_w_stable(ideal, w)?;
    match principal_generator(ideal, w)? {
        Some(m) => stanley_from_tree(&m, w),
        None => stanley_from_truncations(ideal, w),
    }
}

/// Tree form for `S/closure(m)`: every non-sink `u` of `T_{w,m}` contributes
/// `u * K[x_j : j >= max(u), (u, u*x_j) not an edge]`.
pub fn stanley_from_tree(m: &Monomial, w: &WeightVector) -> Result<StanleyDecomposition> {
    let tree = tree_from_monomial(m, w, None)?;
    let n = w.len();
    let pieces = tree
        .branch_vertices()
        .map(|u| {
            let kids = tree.children(u);
            let free_vars = (u.max_index()..n).filter(|&j| !kids.contains(&u.mul_var(j))).collect();
            StanleyPiece { coset: u.clone(), free_vars }
        })
        .collect();
    Ok(StanleyDecomposition::sorted(pieces))
}

/// General form: with `J = Borel(psi(I))` generated in degrees at most `d`,
/// and `G_s` the degree-`s` generators of `trunc_s(J)` outside `J`, the
/// pieces are `psi^{-1}(v) * K[x_j : v*y_j not in trunc_{s+1}(J)]` for
/// `v` in `G_s` with a preimage.
pub fn stanley_from_truncations(ideal: &MonomialIdeal, w: &WeightVector) -> Result<StanleyDecomposition> {
    check_dim(w.len(), ideal.nvars())?;
    let n = w.len();
    if ideal.is_zero() {
        return Ok(StanleyDecomposition::sorted(vec![StanleyPiece {
            coset: Monomial::one(n),
            free_vars: (0..n).collect(),
        }]));
    }
    let images = ideal.gens().iter().map(|g| psi(g, w)).collect::<Result<Vec<_>>>()?;
    let j = borel_closure(&images, n)?;
    let d = j.max_degree().unwrap_or(0);
    let bgens = borel_gens(&j)?;
    let truncate = |s: u64| -> Result<MonomialIdeal> {
        if s == 0 {
            return Ok(MonomialIdeal::unit(n));
        }
        let cut: Vec<Monomial> = bgens.iter().map(|b| b.truncate(s)).collect();
        borel_closure(&cut, n)
    };
    let mut pieces = Vec::new();
    let mut current = truncate(0)?;
    for s in 0..d {
        let next = truncate(s + 1)?;
        for v in current.gens_of_degree(s).filter(|v| !j.contains(v)) {
            let Some(u) = psi_inverse(v, w)? else { continue };
            let free_vars = (0..n).filter(|&k| !next.contains(&v.mul_var(k))).collect();
            pieces.push(StanleyPiece { coset: u, free_vars });
        }
        current = next;
    }
    Ok(StanleyDecomposition::sorted(pieces))
}

/// `c * t^degree / prod_{j > k} (1 - t^{w_j})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTerm {
    pub coefficient: BigUint,
    pub degree: u64,
    /// 0-based; variables after this one are free.
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    weights: WeightVector,
    terms: Option<Vec<HilbertTerm>>,
    numerator: Poly,
}

impl HilbertSeries {
    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// Per-degree terms; present for principal ideals.
    pub fn terms(&self) -> Option<&[HilbertTerm]> {
        self.terms.as_deref()
    }

    /// Numerator over `prod_{j=1}^n (1 - t^{w_j})`.
    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    fn denominator_exps(&self) -> Vec<u64> {
        self.weights.as_slice().iter().map(|&x| u64::from(x)).collect()
    }

    /// Hilbert function values for weighted degrees `0..=bound`.
    pub fn expand(&self, bound: usize) -> Vec<BigInt> {
        self.numerator.expand_over(&self.denominator_exps(), bound)
    }

    /// The same expansion computed from the per-degree terms.
    pub fn expand_terms(&self, bound: usize) -> Option<Vec<BigInt>> {
        let terms = self.terms.as_ref()?;
        let mut total = vec![BigInt::zero(); bound + 1];
        for term in terms {
            let exps: Vec<u64> = self.weights.as_slice()[term.k + 1..].iter().map(|&x| u64::from(x)).collect();
            let shifted = Poly::monomial(BigInt::from(term.coefficient.clone()), term.degree);
            for (t, c) in shifted.expand_over(&exps, bound).into_iter().enumerate() {
                total[t] += c;
            }
        }
        Some(total)
    }

    /// `N(t) / ((1-t^a)(1-t^b)...)`.
    pub fn render(&self) -> String {
        let den: Vec<String> = self
            .weights
            .as_slice()
            .iter()
            .map(|&x| if x == 1 { "(1-t)".to_string() } else { format!("(1-t^{x})") })
            .collect();
        format!("({}) / ({})", self.numerator, den.join(""))
    }
}

/// Hilbert series of `S/I` in the weighted grading.
pub fn hilbert_series(ideal: &MonomialIdeal, w: &WeightVector) -> Result<HilbertSeries> {
    ensure_w_stable(ideal, w)?;
    if let Some(m) = principal_generator(ideal, w)? {
        return principal_hilbert_series(&m, w);
    }
    let numerator = stanley_from_truncations(ideal, w)?.hilbert_numerator(w)?;
    Ok(HilbertSeries { weights: w.clone(), terms: None, numerator })
}

/// Hilbert series of `S/closure(m)` from the Catalan row sums:
/// `sum_s c_s t^s / prod_{j > k_s} (1 - t^{w_j})` with
/// `k_s = max(trunc_{s+1}(psi(m)))`.
pub fn principal_hilbert_series(m: &Monomial, w: &WeightVector) -> Result<HilbertSeries> {
    let diagram = catalan_diagram(m, w)?;
    let profile = PsiProfile::new(m, w)?;
    let mut terms = Vec::new();
    let mut numerator = Poly::zero();
    for s in 0..diagram.degree() {
        let c = diagram.row_sum(s as usize);
        if c.is_zero() {
            continue;
        }
        let k = profile.trunc_max(s + 1);
        let mut part = Poly::monomial(BigInt::from(c.clone()), s);
        for j in 0..=k {
            part = &part * &Poly::one_minus_t_pow(u64::from(w.get(j)));
        }
        numerator = numerator + part;
        terms.push(HilbertTerm { coefficient: c, degree: s, k });
    }
    Ok(HilbertSeries { weights: w.clone(), terms: Some(terms), numerator })
}

/// Graded Betti numbers of `I` as a polynomial in `t` (internal degree)
/// and `u` (homological index; `u^1` marks the minimal generators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareSeries {
    weights: WeightVector,
    poly: BiPoly,
}

impl PoincareSeries {
    pub fn poly(&self) -> &BiPoly {
        &self.poly
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// `beta_{i,j}(I)`.
    pub fn betti(&self, i: u32, j: u64) -> BigInt {
        self.poly.coeff(i, j)
    }

    /// Nonzero `((i, j), beta_{i,j})` entries.
    pub fn entries(&self) -> impl Iterator<Item = ((u32, u64), &BigInt)> {
        self.poly.terms().map(|(&k, c)| (k, c))
    }
}

impl std::fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.poly.fmt(f)
    }
}

/// `u t^a prod_{k < b} (1 + u t^{w_k})`.
fn koszul_block(a: u64, b: usize, w: &WeightVector) -> BiPoly {
    let mut out = BiPoly::term(BigInt::one(), 1, a);
    for k in 0..b {
        let mut factor = BiPoly::term(BigInt::one(), 0, 0);
        factor.add_term(BigInt::one(), 1, u64::from(w.get(k)));
        out = &out * &factor;
    }
    out
}

/// Eliahou–Kervaire form `sum_{g in G(I)} u t^{deg g} prod_{k < max g} (1 + u t^{w_k})`.
/// Principal ideals are recomputed from the Catalan diagram and must agree.
pub fn poincare_series(ideal: &MonomialIdeal, w: &WeightVector) -> Result<PoincareSeries> {
    ensure_w_stable(ideal, w)?;
    let mut poly = BiPoly::zero();
    for g in ideal.gens() {
        poly = poly + koszul_block(weighted_degree(g, w)?, g.max_index(), w);
    }
    if let Some(m) = principal_generator(ideal, w)? {
        let from_diagram = principal_poincare_series(&m, w)?;
        if from_diagram.poly != poly {
            return Err(Error::Internal(format!(
                "Poincaré series mismatch: generators give {poly}, Catalan diagram gives {}",
                from_diagram.poly
            )));
        }
    }
    Ok(PoincareSeries { weights: w.clone(), poly })
}

/// Poincaré series of `closure(m)` read from the generator rows of `C_{w,m}`.
pub fn principal_poincare_series(m: &Monomial, w: &WeightVector) -> Result<PoincareSeries> {
    let diagram = catalan_diagram(m, w)?;
    let mut poly = BiPoly::zero();
    for (off, row) in diagram.rows()[diagram.degree() as usize..].iter().enumerate() {
        let a = diagram.degree() + off as u64;
        for (b, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut block = koszul_block(a, b, w);
            block = &block * &BiPoly::term(BigInt::from(c.clone()), 0, 0);
            poly = poly + block;
        }
    }
    Ok(PoincareSeries { weights: w.clone(), poly })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiNumbers {
    /// `b_1 ... b_n`, with `b_1` the number of minimal generators.
    pub totals: Vec<BigUint>,
    pub graded: PoincareSeries,
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

/// Total Betti numbers by `b_i = sum_g binom(max(g) - 1, i - 1)` together
/// with the graded numbers.
pub fn betti_numbers(ideal: &MonomialIdeal, w: &WeightVector) -> Result<BettiNumbers> {
    let graded = poincare_series(ideal, w)?;
    let n = w.len() as u64;
    let totals = (0..n)
        .map(|i| ideal.gens().iter().map(|g| binomial(g.max_index() as u64, i)).sum())
        .collect();
    Ok(BettiNumbers { totals, graded })
}

impl BettiNumbers {
    /// Betti table of `S/I` in the usual layout: column `i` is homological
    /// degree (column 0 is `S`, column 1 the generators of `I`), row `r`
    /// holds `beta_{i, i+r}`.
    pub fn render_table(&self) -> String {
        let mut cells: BTreeMap<(i64, usize), String> = BTreeMap::new();
        cells.insert((0, 0), "1".into());
        for ((i, j), c) in self.graded.entries() {
            cells.insert((j as i64 - i64::from(i), i as usize), c.to_string());
        }
        let last_col = self
            .totals
            .iter()
            .rposition(|b| !b.is_zero())
            .map_or(0, |p| p + 1)
            .max(cells.keys().map(|k| k.1).max().unwrap_or(0));
        let min_row = cells.keys().map(|k| k.0).min().unwrap_or(0);
        let max_row = cells.keys().map(|k| k.0).max().unwrap_or(0);
        let mut header: Vec<String> = (0..=last_col).map(|c| c.to_string()).collect();
        let mut totals: Vec<String> = vec!["1".into()];
        totals.extend(self.totals.iter().take(last_col).map(|b| b.to_string()));
        let rows: Vec<(String, Vec<String>)> = (min_row..=max_row)
            .map(|r| {
                let vals = (0..=last_col).map(|c| cells.get(&(r, c)).cloned().unwrap_or_else(|| ".".into()));
                (format!("{r}:"), vals.collect())
            })
            .collect();
        let widths: Vec<usize> = (0..=last_col)
            .map(|c| {
                let col = rows.iter().map(|(_, v)| v[c].len()).chain([header[c].len(), totals[c].len()]);
                col.max().unwrap_or(1)
            })
            .collect();
        let label_w = rows.iter().map(|(l, _)| l.len()).chain(["total:".len()]).max().unwrap_or(6);
        let mut out = String::new();
        let line = |out: &mut String, label: &str, vals: &[String]| {
            let _ = write!(out, "{label:>label_w$}");
            for (v, wd) in vals.iter().zip(&widths) {
                let _ = write!(out, " {v:>wd$}");
            }
            out.push('\n');
        };
        line(&mut out, "", &std::mem::take(&mut header));
        line(&mut out, "total:", &totals);
        for (label, vals) in &rows {
            line(&mut out, label, vals);
        }
        out
    }
}
