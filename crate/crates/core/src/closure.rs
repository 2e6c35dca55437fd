//! Weighted Borel closures, w-stability and weighted Borel generators.

use crate::error::{check_dim, Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{w_borel_below, Monomial, WeightVector};
use crate::tree;

/// Smallest w-stable ideal containing `gens`.
///
/// Each generator contributes the sinks of its truncation tree; the union is
/// then minimalized.
pub fn w_closure<'a>(gens: impl IntoIterator<Item = &'a Monomial>, w: &WeightVector) -> Result<MonomialIdeal> {
    let mut all = Vec::new();
    for g in gens {
        check_dim(w.len(), g.nvars())?;
        all.extend(tree::sinks(g, w)?);
    }
    MonomialIdeal::new(w.len(), all)
}

/// Weighted closure of a single monomial.
pub fn principal_closure(m: &Monomial, w: &WeightVector) -> Result<MonomialIdeal> {
    w_closure(std::iter::once(m), w)
}

/// Ordinary Borel closure (all weights one).
pub fn borel_closure<'a>(gens: impl IntoIterator<Item = &'a Monomial>, nvars: usize) -> Result<MonomialIdeal> {
    w_closure(gens, &WeightVector::ones(nvars))
}

pub fn is_w_stable(ideal: &MonomialIdeal, w: &WeightVector) -> Result<bool> {
    check_dim(w.len(), ideal.nvars())?;
    Ok(w_closure(ideal.gens(), w)? == *ideal)
}

pub fn is_strongly_stable(ideal: &MonomialIdeal) -> Result<bool> {
    is_w_stable(ideal, &WeightVector::ones(ideal.nvars()))
}

/// Errors with a closure generator that falls outside `ideal` unless the
/// ideal is w-stable.
pub fn ensure_w_stable(ideal: &MonomialIdeal, w: &WeightVector) -> Result<()> {
    check_dim(w.len(), ideal.nvars())?;
    let closed = w_closure(ideal.gens(), w)?;
    match closed.gens().iter().find(|g| !ideal.contains(g)) {
        None => Ok(()),
        Some(g) if w.is_standard() => Err(Error::NotStronglyStable { witness: g.to_string() }),
        Some(g) => Err(Error::NotWStable { weights: w.to_string(), witness: g.to_string() }),
    }
}

/// Weighted Borel generators: the minimal generators with no other minimal
/// generator strictly below them in the weighted Borel order.
pub fn w_borel_gens(ideal: &MonomialIdeal, w: &WeightVector) -> Result<Vec<Monomial>> {
    ensure_w_stable(ideal, w)?;
    let gens = ideal.gens();
    let mut out = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let mut covered = false;
        for (j, h) in gens.iter().enumerate() {
            if i != j && w_borel_below(h, g, w)? {
                covered = true;
                break;
            }
        }
        if !covered {
            out.push(g.clone());
        }
    }
    if w_closure(&out, w)? != *ideal {
        return Err(Error::Internal(format!("weighted Borel generators {out:?} do not regenerate the ideal")));
    }
    Ok(out)
}

/// Ordinary Borel generators.
pub fn borel_gens(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    w_borel_gens(ideal, &WeightVector::ones(ideal.nvars()))
}

/// `trunc_d(J)` for a strongly stable ideal `J`, computed as the Borel
/// closure of the truncated Borel generators. `d = 0` gives the unit ideal.
pub fn trunc_ideal(j: &MonomialIdeal, d: u64) -> Result<MonomialIdeal> {
    let n = j.nvars();
    if d == 0 {
        return Ok(MonomialIdeal::unit(n));
    }
    let truncated: Vec<Monomial> = borel_gens(j)?.iter().map(|b| b.truncate(d)).collect();
    borel_closure(&truncated, n)
}
