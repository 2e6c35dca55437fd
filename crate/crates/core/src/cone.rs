//! The cone of weight vectors making a strongly stable ideal principally
//! w-stable.
//!
//! For a strongly stable `I` with lex-smallest generator `m`, `I` equals the
//! weighted closure of `m` exactly when `w` satisfies a system of homogeneous
//! linear inequalities read off the generator tree `T_I`. This module builds
//! that system, computes the extreme rays of its closure, decides whether the
//! strict system has solutions, and finds a verified integer weight vector.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::closure::{ensure_w_stable, principal_closure};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, WeightVector};
use crate::tree::tree_from_ideal;

/// Which part of the tree a constraint comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// `deg_w(v) >= deg_w(m)` for a sink `v`.
    Sink(Monomial),
    /// `deg_w(u) < deg_w(m)` for a vertex `u` with a sink child.
    Subsink(Monomial),
    /// `deg_w(u) >= deg_w` of `m` restricted to variables before the largest
    /// branch of `u`.
    BranchLower(Monomial),
    /// `deg_w(u) <` `deg_w` of `m` restricted to variables up to the largest
    /// branch of `u`.
    BranchUpper(Monomial),
    /// `w_i >= w_{i+1}` (0-based `i`).
    Monotone(usize),
    /// `w_n > 0`.
    Positive,
}

/// `normal . w >= 0`, or `> 0` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: Vec<BigInt>,
    pub strict: bool,
    pub origin: Origin,
}

impl HalfSpace {
    pub fn contains(&self, w: &[BigInt]) -> bool {
        let v = dot(&self.normal, w);
        if self.strict {
            v.is_positive()
        } else {
            !v.is_negative()
        }
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.normal.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, false) => {}
                (true, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if mag != BigInt::from(1) {
                write!(f, "{mag}*")?;
            }
            write!(f, "w{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str(if self.strict { " > 0" } else { " >= 0" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub nvars: usize,
    pub halfspaces: Vec<HalfSpace>,
    /// Lex-smallest minimal generator; the only possible single weighted
    /// Borel generator.
    pub candidate: Monomial,
    pub ideal: MonomialIdeal,
}

impl ConstraintSystem {
    /// Whether `w` satisfies every constraint, strict ones strictly.
    pub fn contains_strict(&self, w: &[BigInt]) -> bool {
        self.halfspaces.iter().all(|h| h.contains(w))
    }

    /// Whether `w` satisfies every constraint with strictness dropped.
    pub fn contains_closed(&self, w: &[BigInt]) -> bool {
        self.halfspaces.iter().all(|h| !dot(&h.normal, w).is_negative())
    }
}

fn exps(m: &Monomial) -> Vec<BigInt> {
    m.exponents().iter().map(|&e| BigInt::from(e)).collect()
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `a` with entries at indices `>= end` zeroed.
fn restrict(a: &[BigInt], end: usize) -> Vec<BigInt> {
    a.iter().enumerate().map(|(i, x)| if i < end { x.clone() } else { BigInt::zero() }).collect()
}

/// Builds the inequality system for a strongly stable ideal. Non-strict
/// constraints with zero normal are vacuous and dropped; a strict one is kept
/// since it makes the open region empty.
pub fn constraint_system(ideal: &MonomialIdeal) -> Result<ConstraintSystem> {
    let n = ideal.nvars();
    ensure_w_stable(ideal, &WeightVector::ones(n))?;
    let m = ideal.lex_smallest().ok_or(Error::ZeroIdeal)?.clone();
    let a = exps(&m);
    let tree = tree_from_ideal(ideal);
    let mut order: Vec<&Monomial> = tree.vertices().collect();
    order.sort_by(|x, y| x.graded_cmp(y));

    let mut halfspaces = Vec::new();
    let mut push = |normal: Vec<BigInt>, strict: bool, origin: Origin| {
        if strict || normal.iter().any(|c| !c.is_zero()) {
            halfspaces.push(HalfSpace { normal, strict, origin });
        }
    };
    for v in order.iter().filter(|v| tree.children(v).is_empty()) {
        push(sub(&exps(v), &a), false, Origin::Sink((*v).clone()));
    }
    for u in order.iter().filter(|u| tree.children(u).iter().any(|c| tree.children(c).is_empty())) {
        push(sub(&a, &exps(u)), true, Origin::Subsink((*u).clone()));
    }
    for u in &order {
        let Some(k) = tree.largest_branch(u) else { continue };
        let b = exps(u);
        push(sub(&b, &restrict(&a, k)), false, Origin::BranchLower((*u).clone()));
        push(sub(&restrict(&a, k + 1), &b), true, Origin::BranchUpper((*u).clone()));
    }
    for i in 0..n.saturating_sub(1) {
        let mut normal = vec![BigInt::zero(); n];
        normal[i] = 1.into();
        normal[i + 1] = (-1).into();
        push(normal, false, Origin::Monotone(i));
    }
    if n > 0 {
        let mut normal = vec![BigInt::zero(); n];
        normal[n - 1] = 1.into();
        push(normal, true, Origin::Positive);
    }
    Ok(ConstraintSystem { nvars: n, halfspaces, candidate: m, ideal: ideal.clone() })
}

/// A polyhedral cone `cone(rays) + span(lineality)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    pub rays: Vec<Vec<BigInt>>,
    pub lineality: Vec<Vec<BigInt>>,
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

fn scaled_diff(s: &BigInt, x: &[BigInt], t: &BigInt, y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(a, b)| s * a - t * b).collect()
}

/// Rank by fraction-free Gaussian elimination.
fn rank(rows: &[&Vec<BigInt>]) -> usize {
    let mut mat: Vec<Vec<BigInt>> = rows.iter().map(|r| (*r).clone()).collect();
    let ncols = mat.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..mat.len()).find(|&i| !mat[i][c].is_zero()) else { continue };
        mat.swap(r, p);
        for i in r + 1..mat.len() {
            if mat[i][c].is_zero() {
                continue;
            }
            let (s, t) = (mat[r][c].clone(), mat[i][c].clone());
            mat[i] = primitive(scaled_diff(&s, &mat[i], &t, &mat[r]));
        }
        r += 1;
    }
    r
}

/// Extreme rays of the closed cone `{w : normal . w >= 0}` by the double
/// description method. Rays are primitive, deduplicated and sorted
/// lexicographically descending.
pub fn cone_rays(system: &ConstraintSystem) -> Cone {
    let normals: Vec<&Vec<BigInt>> = system.halfspaces.iter().map(|h| &h.normal).collect();
    double_description(system.nvars, &normals)
}

pub(crate) fn double_description(n: usize, constraints: &[&Vec<BigInt>]) -> Cone {
    let mut lines: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    let mut rays: Vec<Vec<BigInt>> = Vec::new();
    let mut seen: Vec<&Vec<BigInt>> = Vec::new();
    for &a in constraints.iter().filter(|a| a.iter().any(|x| !x.is_zero())) {
        if let Some(idx) = lines.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lines.swap_remove(idx);
            if dot(a, &l).is_negative() {
                l = l.into_iter().map(|x| -x).collect();
            }
            let al = dot(a, &l);
            for v in lines.iter_mut().chain(rays.iter_mut()) {
                let av = dot(a, v);
                *v = primitive(scaled_diff(&al, v, &av, &l));
            }
            rays.push(primitive(l));
        } else {
            let dim = n - lines.len();
            let signs: Vec<BigInt> = rays.iter().map(|r| dot(a, r)).collect();
            let mut next: Vec<Vec<BigInt>> =
                rays.iter().zip(&signs).filter(|(_, s)| !s.is_negative()).map(|(r, _)| r.clone()).collect();
            for (p, sp) in rays.iter().zip(&signs).filter(|(_, s)| s.is_positive()) {
                for (q, sq) in rays.iter().zip(&signs).filter(|(_, s)| s.is_negative()) {
                    let tight: Vec<&Vec<BigInt>> =
                        seen.iter().copied().filter(|c| dot(c, p).is_zero() && dot(c, q).is_zero()).collect();
                    if dim >= 2 && tight.len() + 2 >= dim && rank(&tight) == dim - 2 {
                        next.push(primitive(scaled_diff(sp, q, sq, p)));
                    }
                }
            }
            rays = next;
        }
        seen.push(a);
    }
    let mut rays: Vec<Vec<BigInt>> = rays.into_iter().collect::<BTreeSet<_>>().into_iter().rev().collect();
    rays.retain(|r| r.iter().any(|x| !x.is_zero()));
    let lineality = lines.into_iter().map(primitive).collect();
    Cone { rays, lineality }
}

impl Cone {
    /// Facet normals, computed as the extreme rays of the dual cone
    /// `{a : a.r >= 0 for rays r, a.l = 0 for lineality l}`. Lineality of the
    /// dual appears as a pair of opposite normals.
    pub fn facets(&self, n: usize) -> Vec<Vec<BigInt>> {
        let neg: Vec<Vec<BigInt>> = self.lineality.iter().map(|l| l.iter().map(|x| -x).collect()).collect();
        let rows: Vec<&Vec<BigInt>> = self.rays.iter().chain(&self.lineality).chain(&neg).collect();
        let dual = double_description(n, &rows);
        let mut out = dual.rays;
        for l in dual.lineality {
            out.push(l.iter().map(|x| -x).collect());
            out.push(l);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Ineq {
    coeffs: Vec<BigInt>,
    strict: bool,
}

/// Decides whether no `w` satisfies every constraint with strict ones held
/// strictly, by Fourier–Motzkin elimination that tracks strictness.
pub fn open_region_is_empty(system: &ConstraintSystem) -> bool {
    let mut rows: BTreeMap<Vec<BigInt>, bool> = BTreeMap::new();
    for h in &system.halfspaces {
        if !insert_ineq(&mut rows, h.normal.clone(), h.strict) {
            return true;
        }
    }
    let mut remaining: Vec<usize> = (0..system.nvars).collect();
    while !remaining.is_empty() {
        // Eliminate the variable producing the fewest combinations.
        let cost = |j: usize| {
            let pos = rows.keys().filter(|c| c[j].is_positive()).count();
            let neg = rows.keys().filter(|c| c[j].is_negative()).count();
            pos * neg
        };
        let (slot, &j) = remaining.iter().enumerate().min_by_key(|(_, &j)| cost(j)).expect("nonempty");
        remaining.swap_remove(slot);
        let all: Vec<Ineq> = std::mem::take(&mut rows).into_iter().map(|(coeffs, strict)| Ineq { coeffs, strict }).collect();
        let (pos, rest): (Vec<&Ineq>, Vec<&Ineq>) = all.iter().partition(|r| r.coeffs[j].is_positive());
        let (neg, zero): (Vec<&Ineq>, Vec<&Ineq>) = rest.into_iter().partition(|r| r.coeffs[j].is_negative());
        for z in zero {
            insert_ineq(&mut rows, z.coeffs.clone(), z.strict);
        }
        for p in &pos {
            for q in &neg {
                let s = -&q.coeffs[j];
                let t = p.coeffs[j].clone();
                let combined: Vec<BigInt> = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| &s * x + &t * y).collect();
                if !insert_ineq(&mut rows, combined, p.strict || q.strict) {
                    return true;
                }
            }
        }
    }
    false
}

/// Adds a normalized inequality, keeping the stronger of duplicates. Returns
/// false for the contradiction `0 > 0`.
fn insert_ineq(rows: &mut BTreeMap<Vec<BigInt>, bool>, coeffs: Vec<BigInt>, strict: bool) -> bool {
    if coeffs.iter().all(Zero::is_zero) {
        return !strict;
    }
    let slot = rows.entry(primitive(coeffs)).or_insert(false);
    *slot |= strict;
    true
}

/// Either a verified weight vector or the statement that none exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrincipalOutcome {
    /// `I` is the weighted closure of the candidate under these weights.
    Principal { weights: WeightVector, generator: Monomial },
    NotPrincipal,
}

/// Number of lattice points tried beyond the sum of the rays.
const SEARCH_BUDGET: usize = 20_000;

/// Finds weights `w` with `I = closure_w(m)`, or reports that none exist.
pub fn principal_weight_vector(ideal: &MonomialIdeal) -> Result<PrincipalOutcome> {
    let system = constraint_system(ideal)?;
    let empty = open_region_is_empty(&system);
    let cone = cone_rays(&system);
    let empty_by_rays = system
        .halfspaces
        .iter()
        .filter(|h| h.strict)
        .any(|h| cone.rays.iter().chain(&cone.lineality).all(|r| dot(&h.normal, r).is_zero()));
    if empty != empty_by_rays {
        return Err(Error::Internal(format!(
            "elimination says the open region is {}, the extreme rays say {}",
            if empty { "empty" } else { "nonempty" },
            if empty_by_rays { "empty" } else { "nonempty" }
        )));
    }
    if empty {
        return Ok(PrincipalOutcome::NotPrincipal);
    }
    let m = system.candidate.clone();
    let gens: Vec<Vec<BigInt>> = cone.rays.clone();
    let start: Vec<BigInt> = (0..system.nvars).map(|i| gens.iter().map(|r| r[i].clone()).sum()).collect();
    let mut queue = VecDeque::from([start.clone()]);
    let mut visited = BTreeSet::from([start]);
    let mut tried = 0;
    while let Some(w) = queue.pop_front() {
        if system.contains_strict(&w) {
            if let Some(weights) = verified(&w, &m, ideal)? {
                return Ok(PrincipalOutcome::Principal { weights, generator: m });
            }
        }
        tried += 1;
        if tried > SEARCH_BUDGET {
            break;
        }
        for r in &gens {
            let next: Vec<BigInt> = w.iter().zip(r).map(|(x, y)| x + y).collect();
            if visited.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Err(Error::Internal(format!(
        "open region for {ideal} is nonempty but no verified weight vector was found in {SEARCH_BUDGET} lattice points"
    )))
}

fn verified(w: &[BigInt], m: &Monomial, ideal: &MonomialIdeal) -> Result<Option<WeightVector>> {
    let Some(ws) = w.iter().map(|x| x.to_u32()).collect::<Option<Vec<u32>>>() else { return Ok(None) };
    let Ok(weights) = WeightVector::new(ws) else { return Ok(None) };
    Ok((principal_closure(m, &weights)? == *ideal).then_some(weights))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn v(e: &[i64]) -> Vec<BigInt> {
        e.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(gens[0].len(), gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn single_variable_system() {
        let sys = constraint_system(&ideal(&[&[1, 0]])).unwrap();
        assert_eq!(sys.candidate, m(&[1, 0]));
        let strict: Vec<_> = sys.halfspaces.iter().filter(|h| h.strict).map(|h| h.normal.clone()).collect();
        assert!(strict.contains(&v(&[1, 0])));
        assert!(sys.contains_strict(&v(&[2, 1])));
        assert!(!sys.contains_strict(&v(&[1, 2])));
    }

    #[test]
    fn orthant_rays() {
        let sys = constraint_system(&ideal(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(sys.candidate, m(&[0, 1]));
        let cone = cone_rays(&sys);
        assert_eq!(cone.rays, vec![v(&[1, 1]), v(&[1, 0])]);
        assert!(cone.lineality.is_empty());
    }

    #[test]
    fn dd_with_lineality() {
        // A half-plane in R^2: x >= 0.
        let a = v(&[1, 0]);
        let cone = double_description(2, &[&a]);
        assert_eq!(cone.rays, vec![v(&[1, 0])]);
        assert_eq!(cone.lineality.len(), 1);
        assert!(cone.lineality[0][0].is_zero());
    }

    #[test]
    fn dd_square_pyramid() {
        // x+z >= 0, -x+z >= 0, y+z >= 0, -y+z >= 0 has four extreme rays.
        let cs = [v(&[1, 0, 1]), v(&[-1, 0, 1]), v(&[0, 1, 1]), v(&[0, -1, 1])];
        let refs: Vec<&Vec<BigInt>> = cs.iter().collect();
        let cone = double_description(3, &refs);
        assert_eq!(cone.rays, vec![v(&[1, 1, 1]), v(&[1, -1, 1]), v(&[-1, 1, 1]), v(&[-1, -1, 1])]);
    }

    #[test]
    fn infeasible_closed_cone_is_apex() {
        let cs = [v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])];
        let refs: Vec<&Vec<BigInt>> = cs.iter().collect();
        let cone = double_description(2, &refs);
        assert!(cone.rays.is_empty() && cone.lineality.is_empty());
    }

    #[test]
    fn fm_strictness() {
        let mut sys = constraint_system(&ideal(&[&[1, 0]])).unwrap();
        assert!(!open_region_is_empty(&sys));
        sys.halfspaces.push(HalfSpace { normal: v(&[-1, 0]), strict: false, origin: Origin::Positive });
        assert!(open_region_is_empty(&sys));
    }

    #[test]
    fn halfspace_display() {
        let h = HalfSpace { normal: v(&[2, -1, 0]), strict: true, origin: Origin::Positive };
        assert_eq!(h.to_string(), "2*w1 - w2 > 0");
    }

    #[test]
    fn weight_for_single_variable() {
        let out = principal_weight_vector(&ideal(&[&[1, 0]])).unwrap();
        let PrincipalOutcome::Principal { weights, .. } = out else { panic!("expected weights") };
        assert_eq!(principal_closure(&m(&[1, 0]), &weights).unwrap(), ideal(&[&[1, 0]]));
    }

    #[test]
    fn zero_ideal_rejected() {
        assert_eq!(constraint_system(&MonomialIdeal::zero(2)).unwrap_err(), Error::ZeroIdeal);
    }
}
