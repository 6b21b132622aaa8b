//! The two-parameter family `(x^b y, x^a + y^{b+1})`, `a > b ≥ 0`.
//!
//! Its minimal principalization is a chain of `a − b` exceptional curves
//! `E_i(b + i, i + 1)`, and the last one produces a pole at
//! `−(a − b + 1)/a`. Every rational in `[−1, 0)` and every `−1 − 1/i` arises
//! this way, and these are the only values poles of plane ideals can take.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::arith::rational::fmt_q;
use crate::error::{EngineError, FamilyError};
use crate::principalize::{principalize, PrincipalizationResult, DEFAULT_MAX_STEPS};
use crate::zeta::local_zeta;
use crate::{QBiPoly, Rational, RationalFunctionS};

/// The generators `x^b y` and `x^a + y^{b+1}`.
///
/// Built directly, so the parser's degree cap does not apply.
pub fn build(a: u32, b: u32) -> Result<Vec<QBiPoly>, FamilyError> {
    if a <= b {
        return Err(FamilyError::ParameterOrder { a, b });
    }
    let one = Rational::one;
    Ok(vec![
        QBiPoly::monomial(one(), b, 1),
        &QBiPoly::monomial(one(), a, 0) + &QBiPoly::monomial(one(), 0, b + 1),
    ])
}

/// The predicted chain `(N, ν) = (b + i, i + 1)`, `i = 1, …, a − b`.
pub fn expected_chain(a: u32, b: u32) -> Vec<(u64, u64)> {
    (1..=a.saturating_sub(b) as u64)
        .map(|i| (b as u64 + i, i + 1))
        .collect()
}

/// The pole contributed by the end of the chain.
pub fn chain_pole(a: u32, b: u32) -> Rational {
    -Rational::new(((a - b + 1) as i64).into(), (a as i64).into())
}

/// Whether `s0` is a rational in `[−1, 0)` or of the form `−1 − 1/i`.
pub fn admissible(s0: &Rational) -> bool {
    let minus_one = -Rational::one();
    if *s0 >= minus_one && s0.is_negative() {
        return true;
    }
    let t = -s0 - Rational::one();
    t.is_positive() && t.numer().is_one()
}

/// Parameters `(a, b)` with `−(a − b + 1)/a = s0`: write `−s0 = p/q` in
/// lowest terms and take the least `k` with `p k > 1` and
/// `b = q k − p k + 1 ≥ 0`; then `a = q k`.
pub fn realize_parameters(s0: &Rational) -> Result<(u32, u32), FamilyError> {
    let out_of_range = || FamilyError::OutOfRange(fmt_q(s0));
    if !admissible(s0) {
        return Err(out_of_range());
    }
    let target = -s0;
    let p = target.numer().to_i64().ok_or_else(out_of_range)?;
    let q = target.denom().to_i64().ok_or_else(out_of_range)?;
    debug_assert!(p.gcd(&q) == 1);
    let k = (1..=2)
        .find(|&k| p * k > 1 && q * k - p * k + 1 >= 0)
        .ok_or_else(out_of_range)?;
    let a = u32::try_from(q * k).map_err(|_| out_of_range())?;
    let b = u32::try_from(q * k - p * k + 1).map_err(|_| out_of_range())?;
    Ok((a, b))
}

/// A family member together with the engine run confirming the pole.
#[derive(Clone, Debug)]
pub struct Realization {
    pub a: u32,
    pub b: u32,
    pub s0: Rational,
    pub zeta: RationalFunctionS,
    pub result: PrincipalizationResult,
}

/// Find `(a, b)` realizing `s0` and confirm it by computing the zeta
/// function of the family member.
pub fn realize_pole(s0: &Rational) -> Result<Realization, FamilyError> {
    let (a, b) = realize_parameters(s0)?;
    let budget = DEFAULT_MAX_STEPS.max(a as usize + 1);
    let result = principalize(&build(a, b)?, budget)?;
    let zeta = local_zeta(&result.diagram)
        .map_err(|e| FamilyError::Engine(EngineError::InvariantViolation(e.to_string())))?;
    if !zeta.poles().iter().any(|p| &p.location == s0) {
        return Err(FamilyError::NotRealized {
            a,
            b,
            target: fmt_q(s0),
        });
    }
    Ok(Realization {
        a,
        b,
        s0: s0.clone(),
        zeta,
        result,
    })
}

/// True when the divisors of `result` are exactly the predicted chain.
pub fn matches_chain(result: &PrincipalizationResult, a: u32, b: u32) -> bool {
    let got: Vec<(u64, u64)> = result.state.exceptional().iter().map(|d| (d.n, d.nu)).collect();
    let path = result.diagram.edges().len() + 1 == got.len()
        && result.diagram.strict().next().is_none();
    got == expected_chain(a, b) && path && !got.is_empty()
}
