//! Exact arithmetic: polynomials in one and two variables, the expression
//! parser, and rational functions with linear denominators.

pub mod bipoly;
pub mod parse;
pub mod ratfunc;
pub mod rational;
pub mod unipoly;
mod zpoly;
