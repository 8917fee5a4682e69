//! Exact rational and polynomial arithmetic, Sturm sequences, real-root
//! isolation and a floating-point root finder for plot output.

pub mod numeric;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod sturm;

pub use numeric::{numeric_roots, numeric_roots_with, AberthConfig};
pub use poly::{poly_arith, poly_eval, PolyOp, Polynomial};
pub use ratfunc::RationalFunction;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use sturm::{
    cauchy_bound, cauchy_index, fujiwara_bound, isolate_real_roots, squarefree_decomposition, squarefree_part,
    sturm_count, Interval, RootRange, SturmSequence,
};
