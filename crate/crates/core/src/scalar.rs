//! Scalar traits shared by the polynomial types.
//!
//! Ring operations (sums, products, evaluation, substitution) only need
//! [`Scalar`], so they work over `f64` as well as over exact rationals.
//! Anything that divides and then tests for zero (Euclidean remainders,
//! gcds, squarefree parts) is restricted to [`ExactField`].

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// A commutative ring with unit and negation.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> {}

/// A field with exact arithmetic: `a / b * b == a` holds bit for bit.
pub trait ExactField: Scalar {}

impl<T> ExactField for Ratio<T> where T: Clone + Integer + Signed + Debug {}
