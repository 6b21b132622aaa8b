//! Helpers for exact rationals: `p/q` text form and serde adapters.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::Rational;

/// Parse `p`, `-p`, `p/q` or `-p/q` (no spaces inside the literal).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// `p/q` in lowest terms, or `p` when the denominator is one.
pub fn fmt_q(q: &Rational) -> String {
    q.to_string()
}

pub fn q_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn q_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Serialize a rational as its `p/q` string.
pub mod as_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::Rational;

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::fmt_q(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_rational(&text)
            .ok_or_else(|| serde::de::Error::custom(format!("not a rational: {text}")))
    }
}

/// Serialize a list of rationals as `p/q` strings.
pub mod vec_as_string {
    use serde::Serializer;

    use crate::Rational;

    pub fn serialize<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(qs.iter().map(super::fmt_q))
    }
}
