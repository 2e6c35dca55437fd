//! Truncation trees.
//!
//! `T_{w,m}` grows from the unit monomial: a vertex `v` of weighted degree
//! `e` below the bound gets children `v*x_j` for `max(v) <= j <= K(e)`, where
//! `K(e)` is the largest index of `trunc_{e+1}(psi(m))`. Its sinks are the
//! minimal generators of the weighted closure of `m`. `T_I` is the prefix tree
//! of the factored forms of the minimal generators of an ideal.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{check_dim, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, PsiProfile, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationTree {
    nvars: usize,
    weights: WeightVector,
    degree_bound: Option<u64>,
    children: BTreeMap<Monomial, Vec<Monomial>>,
}

impl TruncationTree {
    fn lone_root(nvars: usize, weights: WeightVector, degree_bound: Option<u64>) -> Self {
        let mut children = BTreeMap::new();
        children.insert(Monomial::one(nvars), Vec::new());
        Self { nvars, weights, degree_bound, children }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// The weighted-degree bound used to stop branching; `None` for `T_I`.
    pub fn degree_bound(&self) -> Option<u64> {
        self.degree_bound
    }

    pub fn root(&self) -> Monomial {
        Monomial::one(self.nvars)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Monomial> {
        self.children.keys()
    }

    pub fn vertex_count(&self) -> usize {
        self.children.len()
    }

    pub fn contains_vertex(&self, v: &Monomial) -> bool {
        self.children.contains_key(v)
    }

    /// Children of `v` in increasing variable order; empty for sinks and
    /// for monomials that are not vertices.
    pub fn children(&self, v: &Monomial) -> &[Monomial] {
        self.children.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Monomial, &Monomial)> {
        self.children.iter().flat_map(|(v, cs)| cs.iter().map(move |c| (v, c)))
    }

    pub fn edge_count(&self) -> usize {
        self.children.values().map(Vec::len).sum()
    }

    pub fn sinks(&self) -> impl Iterator<Item = &Monomial> {
        self.children.iter().filter(|(_, cs)| cs.is_empty()).map(|(v, _)| v)
    }

    /// Vertices with at least one child that is a sink.
    pub fn subsinks(&self) -> impl Iterator<Item = &Monomial> {
        self.children
            .iter()
            .filter(|(_, cs)| cs.iter().any(|c| self.children(c).is_empty()))
            .map(|(v, _)| v)
    }

    /// Non-sink vertices.
    pub fn branch_vertices(&self) -> impl Iterator<Item = &Monomial> {
        self.children.iter().filter(|(_, cs)| !cs.is_empty()).map(|(v, _)| v)
    }

    /// Largest variable index branching from `v`, if `v` branches.
    pub fn largest_branch(&self, v: &Monomial) -> Option<usize> {
        self.children(v).iter().map(Monomial::max_index).max()
    }

    /// Adjacency list, one line per vertex: `vertex: child child ...`.
    pub fn render(&self, show: impl Fn(&Monomial) -> String) -> String {
        let mut out = String::new();
        let mut order: Vec<&Monomial> = self.children.keys().collect();
        order.sort_by(|a, b| a.graded_cmp(b));
        for v in order {
            let _ = write!(out, "{}:", show(v));
            for c in &self.children[v] {
                let _ = write!(out, " {}", show(c));
            }
            out.push('\n');
        }
        out
    }
}

fn branch_range(v: &Monomial, deg: u64, profile: &PsiProfile) -> std::ops::RangeInclusive<usize> {
    v.max_index()..=profile.trunc_max(deg + 1)
}

/// Builds `T_{w,m}^bound`; the default bound is the weighted degree of `m`.
pub fn tree_from_monomial(m: &Monomial, w: &WeightVector, bound: Option<u64>) -> Result<TruncationTree> {
    check_dim(w.len(), m.nvars())?;
    let profile = PsiProfile::new(m, w)?;
    let bound = bound.unwrap_or(profile.degree());
    let n = m.nvars();
    let mut tree = TruncationTree::lone_root(n, w.clone(), Some(bound));
    let mut frontier = vec![(Monomial::one(n), 0u64)];
    while let Some((v, deg)) = frontier.pop() {
        if deg >= bound {
            continue;
        }
        let kids: Vec<Monomial> = branch_range(&v, deg, &profile).map(|j| v.mul_var(j)).collect();
        for (j, c) in branch_range(&v, deg, &profile).zip(&kids) {
            tree.children.insert(c.clone(), Vec::new());
            frontier.push((c.clone(), deg + u64::from(w.get(j))));
        }
        tree.children.insert(v, kids);
    }
    Ok(tree)
}

/// Depth-first stream of the sinks of `T_{w,m}` that never stores interior
/// vertices.
pub struct Sinks {
    profile: PsiProfile,
    weights: WeightVector,
    bound: u64,
    stack: Vec<(Monomial, u64)>,
}

impl Iterator for Sinks {
    type Item = Monomial;

    fn next(&mut self) -> Option<Monomial> {
        while let Some((v, deg)) = self.stack.pop() {
            if deg >= self.bound {
                return Some(v);
            }
            let range = branch_range(&v, deg, &self.profile);
            if range.is_empty() {
                return Some(v);
            }
            for j in range.rev() {
                self.stack.push((v.mul_var(j), deg + u64::from(self.weights.get(j))));
            }
        }
        None
    }
}

/// Sinks of `T_{w,m}`, i.e. the minimal generators of the closure of `m`.
pub fn sinks(m: &Monomial, w: &WeightVector) -> Result<Sinks> {
    check_dim(w.len(), m.nvars())?;
    let profile = PsiProfile::new(m, w)?;
    let bound = profile.degree();
    Ok(Sinks { profile, weights: w.clone(), bound, stack: vec![(Monomial::one(m.nvars()), 0)] })
}

/// Builds `T_I`: edges join consecutive prefixes of the factored forms of
/// the minimal generators. Meant for strongly stable ideals, where the sinks
/// are exactly the generators; other inputs are accepted as is.
pub fn tree_from_ideal(ideal: &MonomialIdeal) -> TruncationTree {
    let n = ideal.nvars();
    let mut tree = TruncationTree::lone_root(n, WeightVector::ones(n), None);
    for g in ideal.gens() {
        let prefixes: Vec<Monomial> = g.factored().prefixes().collect();
        for pair in prefixes.windows(2) {
            let (v, c) = (&pair[0], &pair[1]);
            let kids = tree.children.entry(v.clone()).or_default();
            if !kids.contains(c) {
                kids.push(c.clone());
            }
            if let Entry::Vacant(e) = tree.children.entry(c.clone()) {
                e.insert(Vec::new());
            }
        }
    }
    for kids in tree.children.values_mut() {
        kids.sort_by_key(Monomial::max_index);
    }
    tree
}
