//! Golden data and brute-force oracles shared by the integration tests.
//!
//! The oracles work on raw exponent vectors and never call the library's
//! closure, tree or series code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use wstable::{parse_ideal, principal_closure, w_closure, Monomial, MonomialIdeal, WeightVector};

pub type Exps = Vec<u32>;

pub fn m(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

pub fn w(e: &[u32]) -> WeightVector {
    WeightVector::new(e.to_vec()).unwrap()
}

pub fn ideal(text: &str) -> MonomialIdeal {
    parse_ideal(text, None).unwrap().ideal
}

pub fn ideal_n(text: &str, n: usize) -> MonomialIdeal {
    parse_ideal(text, Some(n)).unwrap().ideal
}

pub fn gen_set(i: &MonomialIdeal) -> BTreeSet<Exps> {
    i.gens().iter().map(|g| g.exponents().to_vec()).collect()
}

pub fn mono_set(ms: &[Monomial]) -> BTreeSet<Exps> {
    ms.iter().map(|g| g.exponents().to_vec()).collect()
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn minimalize(set: &BTreeSet<Exps>) -> BTreeSet<Exps> {
    set.iter().filter(|a| !set.iter().any(|b| b != *a && divides(b, a))).cloned().collect()
}

pub fn member(gens: &BTreeSet<Exps>, e: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, e))
}

pub fn wdeg(e: &[u32], w: &[u32]) -> u64 {
    e.iter().zip(w).map(|(&a, &b)| u64::from(a) * u64::from(b)).sum()
}

/// Closes a set of monomials of one ring under single moves
/// `x_j -> x_i` (`i < j`), then minimalizes.
pub fn borel_move_closure(gens: &[Exps]) -> BTreeSet<Exps> {
    let mut seen: BTreeSet<Exps> = gens.iter().cloned().collect();
    let mut stack: Vec<Exps> = gens.to_vec();
    while let Some(e) = stack.pop() {
        for j in 0..e.len() {
            if e[j] == 0 {
                continue;
            }
            for i in 0..j {
                let mut f = e.clone();
                f[j] -= 1;
                f[i] += 1;
                if seen.insert(f.clone()) {
                    stack.push(f);
                }
            }
        }
    }
    minimalize(&seen)
}

/// Weighted closure from the definition: pull back the Borel closure of the
/// image under `x_i -> y_i^{w_i}`, enumerating candidates up to the given
/// weighted degree.
pub fn pullback_closure(gens: &[Exps], w: &[u32], bound: u64) -> BTreeSet<Exps> {
    let images: Vec<Exps> = gens.iter().map(|g| g.iter().zip(w).map(|(a, b)| a * b).collect()).collect();
    let borel = borel_move_closure(&images);
    let members: BTreeSet<Exps> = monomials_up_to(w, bound)
        .into_iter()
        .filter(|e| {
            let img: Exps = e.iter().zip(w).map(|(a, b)| a * b).collect();
            member(&borel, &img)
        })
        .collect();
    minimalize(&members)
}

/// All exponent vectors of weighted degree at most `bound`.
pub fn monomials_up_to(w: &[u32], bound: u64) -> Vec<Exps> {
    fn rec(w: &[u32], i: usize, left: u64, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i == w.len() {
            out.push(cur.clone());
            return;
        }
        let mut e = 0;
        while u64::from(e) * u64::from(w[i]) <= left {
            cur[i] = e;
            rec(w, i + 1, left - u64::from(e) * u64::from(w[i]), cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(w, 0, bound, &mut vec![0; w.len()], &mut out);
    out
}

/// Number of monomials outside `I` in each weighted degree `0..=bound`.
pub fn complement_counts(i: &MonomialIdeal, w: &[u32], bound: u64) -> Vec<u64> {
    let gens = gen_set(i);
    let mut counts = vec![0u64; bound as usize + 1];
    for e in monomials_up_to(w, bound) {
        if !member(&gens, &e) {
            counts[wdeg(&e, w) as usize] += 1;
        }
    }
    counts
}

/// Graded Betti numbers by counting, per generator `g`, the subsets of
/// `{w_1, ..., w_{max(g)-1}}` (by position) of each size and sum.
pub fn subset_sum_betti(i: &MonomialIdeal, w: &[u32]) -> BTreeMap<(u32, u64), u64> {
    let mut out = BTreeMap::new();
    for g in i.gens() {
        let e = g.exponents();
        let d = wdeg(e, w);
        let q = e.iter().rposition(|&x| x > 0).unwrap_or(0);
        for mask in 0u32..(1 << q) {
            let size = mask.count_ones();
            let sum: u64 = (0..q).filter(|k| mask >> k & 1 == 1).map(|k| u64::from(w[k])).sum();
            *out.entry((size + 1, d + sum)).or_insert(0) += 1;
        }
    }
    out
}

pub struct Golden {
    pub name: &'static str,
    pub ideal: MonomialIdeal,
    pub weights: WeightVector,
}

/// Every ideal of the worked examples, each with a weight vector it is
/// stable for.
pub fn golden_ideals() -> Vec<Golden> {
    let mut out = vec![
        Golden { name: "(x1, x2^2) (2,1)", ideal: ideal("x1, x2^2"), weights: w(&[2, 1]) },
        Golden { name: "(x1^2, x1*x2^2, x2^4) (2,1)", ideal: ideal("x1^2, x1*x2^2, x2^4"), weights: w(&[2, 1]) },
        Golden {
            name: "closure(x1*x2*x3^2) (1,1,1)",
            ideal: principal_closure(&m(&[1, 1, 2]), &w(&[1, 1, 1])).unwrap(),
            weights: w(&[1, 1, 1]),
        },
        Golden {
            name: "closure(x1*x2*x3^2) (3,2,1)",
            ideal: principal_closure(&m(&[1, 1, 2]), &w(&[3, 2, 1])).unwrap(),
            weights: w(&[3, 2, 1]),
        },
        Golden {
            name: "closure(x2^2*x3) (4,2,1)",
            ideal: principal_closure(&m(&[0, 2, 1]), &w(&[4, 2, 1])).unwrap(),
            weights: w(&[4, 2, 1]),
        },
        Golden {
            name: "closure(x1*x2^3*x3^2) (3,2,1)",
            ideal: principal_closure(&m(&[1, 3, 2]), &w(&[3, 2, 1])).unwrap(),
            weights: w(&[3, 2, 1]),
        },
        Golden { name: "(x^3, x^2y, xy^3, xy^2z) (1,1,1)", ideal: ideal(TREE4), weights: w(&[1, 1, 1]) },
        Golden { name: "(x^3, x^2y, xy^3, xy^2z) (5,3,1)", ideal: ideal(TREE4), weights: w(&[5, 3, 1]) },
    ];
    for row in TABLE {
        out.push(Golden { name: row.label, ideal: ideal_n(row.ideal, 3), weights: w(&row.weights) });
    }
    out
}

pub const TREE4: &str = "x^3, x^2*y, x*y^3, x*y^2*z";
pub const COUNTER: &str = "x^2, x*y, x*z, y^3, y^2*z, y*z^2, z^4";

pub struct TableRow {
    pub label: &'static str,
    pub weights: [u32; 3],
    pub ideal: &'static str,
    pub bgens: &'static str,
    pub bgens_w: &'static str,
}

/// Initial ideals of a generic (2,2,2) complete intersection, one per
/// maximal cone, with an interior weight vector.
pub const TABLE: [TableRow; 9] = [
    TableRow { label: "a", weights: [8, 8, 1], ideal: "x, y, z^8", bgens: "y, z^8", bgens_w: "z^8" },
    TableRow { label: "b", weights: [7, 6, 1], ideal: "x, y^2, y*z, z^7", bgens: "x, y*z, z^7", bgens_w: "z^7" },
    TableRow { label: "c", weights: [5, 5, 1], ideal: "x^2, x*y, y^2, x*z, y*z, z^6", bgens: "y*z, z^6", bgens_w: "z^6" },
    TableRow { label: "d", weights: [6, 4, 1], ideal: "x, y^2, y*z^2, z^6", bgens: "x, y^2, y*z^2, z^6", bgens_w: "z^6" },
    TableRow {
        label: "e",
        weights: [4, 3, 1],
        ideal: "x^2, x*y, y^2, x*z, y*z^2, z^5",
        bgens: "x*z, y^2, y*z^2, z^5",
        bgens_w: "z^5",
    },
    TableRow { label: "f", weights: [10, 5, 2], ideal: "x, y^2, y*z^3, z^5", bgens: "x, y^2, y*z^3, z^5", bgens_w: "z^5" },
    TableRow { label: "g", weights: [8, 3, 2], ideal: "x, y^3, y^2*z, y*z^3, z^4", bgens: "x, y^2*z, z^4", bgens_w: "z^4" },
    TableRow {
        label: "h",
        weights: [5, 3, 2],
        ideal: "x^2, x*y, x*z, y^3, y^2*z, y*z^2, z^4",
        bgens: "x*z, y*z^2, z^4",
        bgens_w: "y*z^2, z^4",
    },
    TableRow {
        label: "i",
        weights: [2, 2, 1],
        ideal: "x^2, x*y, y^2, x*z^2, y*z^2, z^4",
        bgens: "y^2, y*z^2, z^4",
        bgens_w: "z^4",
    },
];

/// A random non-increasing positive weight vector of length `n`.
pub fn random_weights(rng: &mut impl Rng, n: usize, max: u32) -> WeightVector {
    let mut ws: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max)).collect();
    ws.sort_unstable_by(|a, b| b.cmp(a));
    WeightVector::new(ws).unwrap()
}

/// A random monomial of weighted degree between 1 and `max_deg`.
pub fn random_monomial(rng: &mut impl Rng, w: &WeightVector, max_deg: u64) -> Monomial {
    let n = w.len();
    loop {
        let e: Exps = (0..n).map(|_| rng.gen_range(0..=4)).collect();
        let d = wdeg(&e, w.as_slice());
        if d >= 1 && d <= max_deg {
            return Monomial::new(e);
        }
    }
}

/// A random strongly stable ideal from the move-closure oracle.
pub fn random_strongly_stable(rng: &mut impl Rng, n: usize, max_deg: u32, gens: usize) -> MonomialIdeal {
    let seeds: Vec<Exps> = (0..gens)
        .map(|_| loop {
            let e: Exps = (0..n).map(|_| rng.gen_range(0..=max_deg)).collect();
            let d: u32 = e.iter().sum();
            if d >= 1 && d <= max_deg {
                break e;
            }
        })
        .collect();
    let closed = borel_move_closure(&seeds);
    MonomialIdeal::new(n, closed.into_iter().map(Monomial::new)).unwrap()
}

/// A random w-stable ideal: the closure of one to three random monomials.
pub fn random_w_stable(rng: &mut impl Rng, w: &WeightVector, max_deg: u64) -> MonomialIdeal {
    let k = rng.gen_range(1..=3);
    let gens: Vec<Monomial> = (0..k).map(|_| random_monomial(rng, w, max_deg)).collect();
    w_closure(&gens, w).unwrap()
}
