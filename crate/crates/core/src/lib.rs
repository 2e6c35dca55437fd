//! Weighted Borel closures and w-stable monomial ideals.
//!
//! A weight vector `w = (w_1 >= ... >= w_n >= 1)` grades `K[x_1..x_n]` by
//! `deg(x_i) = w_i`. The map `psi: x_i -> y_i^{w_i}` carries monomials into a
//! standard-graded ring, and an ideal is w-stable when it equals
//! `psi^{-1}(Borel(psi(I)))`. This crate computes those closures and their
//! generators, truncation trees and Catalan diagrams, Stanley decompositions,
//! Hilbert and Poincaré series, and the cone of weight vectors for which a
//! strongly stable ideal is the closure of a single monomial.
//!
//! Variable indices are 0-based throughout the API; text output uses
//! `x1..xn` (or `x, y, z`).

pub mod catalan;
pub mod cli;
pub mod closure;
pub mod cone;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod series;
pub mod tree;

pub use catalan::{catalan_diagram, generator_stats, CatalanDiagram, GeneratorStat};
pub use closure::{
    borel_closure, borel_gens, ensure_w_stable, is_strongly_stable, is_w_stable, principal_closure, trunc_ideal,
    w_borel_gens, w_closure,
};
pub use cone::{
    cone_rays, constraint_system, open_region_is_empty, principal_weight_vector, Cone, ConstraintSystem, HalfSpace,
    PrincipalOutcome,
};
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::{meet_w, psi, psi_inverse, w_borel_below, weighted_degree, FactoredForm, Monomial, WeightVector};
pub use parse::{parse_ideal, parse_monomial, parse_weights, Naming, ParseError};
pub use poly::{BiPoly, Poly};
pub use series::{
    betti_numbers, hilbert_series, poincare_series, stanley_decomposition, BettiNumbers, HilbertSeries,
    PoincareSeries, StanleyDecomposition, StanleyPiece,
};
pub use tree::{tree_from_ideal, tree_from_monomial, TruncationTree};
