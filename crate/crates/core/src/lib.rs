//! Exact principalization of ideals in ℚ[x, y] over the origin, the local
//! topological zeta function of the ideal, and the structural results about
//! its poles.
//!
//! The pipeline is
//!
//! 1. [`principalize::principalize`] blows up bad points until the pulled-back
//!    ideal is locally monomial in normal-crossings coordinates;
//! 2. [`diagram::IntersectionDiagram`] records the resulting dual graph with the
//!    numerical data `(N, ν)` of every component;
//! 3. [`zeta::local_zeta`] turns the diagram into a reduced rational function
//!    and [`criterion::classify`] decides which candidate poles are poles
//!    without computing it.
//!
//! Polynomial and rational-function types are generic over the scalar
//! ([`scalar::Scalar`]); everything that needs exact division uses
//! [`Rational`].

pub mod arith;
pub mod blowup;
pub mod criterion;
pub mod diagram;
pub mod error;
pub mod family;
pub mod generic;
pub mod principalize;
pub mod scalar;
pub mod zeta;

pub use arith::bipoly::{BiPoly, Multiplicity};
pub use arith::parse::parse_poly;
pub use arith::ratfunc::{Pole, RationalFunctionS};
pub use arith::unipoly::UniPoly;
pub use diagram::IntersectionDiagram;
pub use principalize::{principalize, PrincipalizationResult};

/// Arbitrary-precision rationals, always in lowest terms.
pub type Rational = num_rational::BigRational;
/// Univariate polynomials over ℚ.
pub type QPoly = UniPoly<Rational>;
/// Bivariate polynomials over ℚ.
pub type QBiPoly = BiPoly<Rational>;
