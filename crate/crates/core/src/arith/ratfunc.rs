//! Rational functions in `s` whose denominators split into factors `ν + N s`.
//!
//! Every such function is kept with its denominator factored into primitive
//! linear forms. That makes reduction a matter of testing the numerator at
//! `-ν/N`, and makes poles, orders and Laurent leading coefficients direct
//! read-offs.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::rational::{q_int, vec_as_string};
use crate::{QPoly, Rational};

/// The primitive linear form `ν + N s` with `gcd(ν, N) = 1` and `N ≥ 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LinearFactor {
    pub nu: u64,
    pub n: u64,
}

impl LinearFactor {
    /// The root `-ν/N`.
    pub fn root(&self) -> Rational {
        Rational::new((-(self.nu as i64)).into(), (self.n as i64).into())
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        q_int(self.nu as i64) + q_int(self.n as i64) * s
    }

    pub fn as_poly(&self) -> QPoly {
        QPoly::from_coeffs(vec![q_int(self.nu as i64), q_int(self.n as i64)])
    }
}

/// Canonical order: `N` descending, then `ν` descending.
impl Ord for LinearFactor {
    fn cmp(&self, other: &Self) -> Ordering {
        other.n.cmp(&self.n).then(other.nu.cmp(&self.nu))
    }
}

impl PartialOrd for LinearFactor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == 1 {
            write!(f, "{}+s", self.nu)
        } else {
            write!(f, "{}+{}s", self.nu, self.n)
        }
    }
}

/// One summand `c / prod (ν_i + N_i s)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Term {
    pub coeff: i64,
    /// `(ν, N)` pairs, not necessarily primitive.
    pub factors: Vec<(u64, u64)>,
}

impl Term {
    pub fn new(coeff: i64, factors: Vec<(u64, u64)>) -> Self {
        Self { coeff, factors }
    }

    pub fn eval(&self, s: &Rational) -> Option<Rational> {
        let mut acc = q_int(self.coeff);
        for &(nu, n) in &self.factors {
            let d = q_int(nu as i64) + q_int(n as i64) * s;
            if d.is_zero() {
                return None;
            }
            acc /= d;
        }
        Some(acc)
    }
}

/// A pole of a reduced rational function.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Pole {
    #[serde(rename = "s", with = "super::rational::as_string")]
    pub location: Rational,
    pub order: u32,
    /// The residue for a simple pole, else the coefficient of
    /// `(s - s0)^(-order)` in the Laurent expansion.
    #[serde(with = "super::rational::as_string")]
    pub leading: Rational,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunctionS {
    num: QPoly,
    den: BTreeMap<LinearFactor, u32>,
    terms: Vec<Term>,
}

impl RationalFunctionS {
    pub fn zero() -> Self {
        Self {
            num: QPoly::zero(),
            den: BTreeMap::new(),
            terms: Vec::new(),
        }
    }

    /// Exact sum of the given terms, reduced.
    ///
    /// Factors with `N = 0` are constants and are folded into the numerator;
    /// factors sharing a root are merged after dividing out `gcd(ν, N)`.
    pub fn sum_of_terms(terms: &[Term]) -> Self {
        // Each term as (numerator constant, primitive factor multiset).
        let mut parts: Vec<(Rational, BTreeMap<LinearFactor, u32>)> = Vec::new();
        for t in terms {
            let mut c = q_int(t.coeff);
            let mut fs: BTreeMap<LinearFactor, u32> = BTreeMap::new();
            for &(nu, n) in &t.factors {
                if n == 0 {
                    c /= q_int(nu as i64);
                    continue;
                }
                let g = nu.gcd(&n);
                c /= q_int(g as i64);
                *fs.entry(LinearFactor { nu: nu / g, n: n / g }).or_insert(0) += 1;
            }
            parts.push((c, fs));
        }
        let mut den: BTreeMap<LinearFactor, u32> = BTreeMap::new();
        for (_, fs) in &parts {
            for (f, m) in fs {
                let slot = den.entry(*f).or_insert(0);
                *slot = (*slot).max(*m);
            }
        }
        let mut num = QPoly::zero();
        for (c, fs) in &parts {
            let mut p = QPoly::constant(c.clone());
            for (f, m) in &den {
                let missing = m - fs.get(f).copied().unwrap_or(0);
                if missing > 0 {
                    p = &p * &f.as_poly().pow(missing);
                }
            }
            num = &num + &p;
        }
        let mut out = Self {
            num,
            den,
            terms: terms.to_vec(),
        };
        out.reduce();
        out
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let factors: Vec<LinearFactor> = self.den.keys().copied().collect();
        for f in factors {
            while self.den.get(&f).copied().unwrap_or(0) > 0 && self.num.eval(&f.root()).is_zero()
            {
                self.num = self.num.exact_div(&f.as_poly()).expect("root divides");
                let m = self.den.get_mut(&f).expect("present");
                *m -= 1;
                if *m == 0 {
                    self.den.remove(&f);
                }
            }
        }
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    /// Denominator factors in canonical order with multiplicities.
    pub fn denominator(&self) -> impl Iterator<Item = (LinearFactor, u32)> + '_ {
        self.den.iter().map(|(f, m)| (*f, *m))
    }

    pub fn denominator_expanded(&self) -> QPoly {
        self.den
            .iter()
            .fold(QPoly::one(), |acc, (f, m)| &acc * &f.as_poly().pow(*m))
    }

    /// The summands this function was built from.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at `s`, or `None` at a pole.
    pub fn eval(&self, s: &Rational) -> Option<Rational> {
        let d = self.denominator_expanded().eval(s);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(s) / d)
    }

    /// One entry per distinct root of the reduced denominator, ascending.
    pub fn poles(&self) -> Vec<Pole> {
        let mut out: Vec<Pole> = self
            .den
            .iter()
            .map(|(f, m)| {
                let s0 = f.root();
                let mut lead = self.num.eval(&s0) / q_int(f.n as i64).pow(*m as i32);
                for (g, k) in &self.den {
                    if g != f {
                        lead /= g.eval(&s0).pow(*k as i32);
                    }
                }
                Pole {
                    location: s0,
                    order: *m,
                    leading: lead,
                }
            })
            .collect();
        out.sort_by(|a, b| a.location.cmp(&b.location));
        out
    }

    /// Structured form `{"num": [...], "den": [[nu, N, mult], ...]}`, numerator
    /// coefficients in ascending degree as `p/q` strings.
    pub fn to_json(&self) -> RationalFunctionJson {
        RationalFunctionJson {
            num: self.num.coeffs().to_vec(),
            den: self.den.iter().map(|(f, m)| [f.nu, f.n, *m as u64]).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RationalFunctionJson {
    #[serde(serialize_with = "vec_as_string::serialize")]
    pub num: Vec<Rational>,
    pub den: Vec<[u64; 3]>,
}

/// Convenience wrapper matching the term-list form `(c, [(ν, N), ...])`.
pub fn rf_sum_of_terms(terms: &[(i64, Vec<(u64, u64)>)]) -> RationalFunctionS {
    let ts: Vec<Term> = terms
        .iter()
        .map(|(c, fs)| Term::new(*c, fs.clone()))
        .collect();
    RationalFunctionS::sum_of_terms(&ts)
}

pub fn poles_of(rf: &RationalFunctionS) -> Vec<Pole> {
    rf.poles()
}

impl fmt::Display for RationalFunctionS {
    /// `(5s^2+16s+8)/((4+7s)(2+5s)(1+s))`, `2/(2+s)`, `1/(1+s)^2`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.to_string();
        let multi_term = self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if self.den.is_empty() {
            return f.write_str(&num);
        }
        if multi_term {
            write!(f, "({num})")?;
        } else {
            f.write_str(&num)?;
        }
        f.write_str("/")?;
        let pieces: Vec<String> = self
            .den
            .iter()
            .map(|(lf, m)| {
                if *m == 1 {
                    format!("({lf})")
                } else {
                    format!("({lf})^{m}")
                }
            })
            .collect();
        if pieces.len() == 1 {
            f.write_str(&pieces[0])
        } else {
            write!(f, "({})", pieces.concat())
        }
    }
}

/// The sign of a rational as -1, 0 or 1.
pub fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::q_frac;
    use proptest::prelude::*;

    fn golden_terms() -> Vec<(i64, Vec<(u64, u64)>)> {
        vec![
            (1, vec![(4, 7)]),
            (1, vec![(3, 6), (4, 7)]),
            (1, vec![(2, 5), (3, 6)]),
            (1, vec![(1, 1), (2, 5)]),
        ]
    }

    #[test]
    fn golden_sum_reduces_the_half_factor() {
        let rf = rf_sum_of_terms(&golden_terms());
        assert_eq!(rf.to_string(), "(5s^2+16s+8)/((4+7s)(2+5s)(1+s))");
        let poles = rf.poles();
        let locs: Vec<Rational> = poles.iter().map(|p| p.location.clone()).collect();
        assert_eq!(locs, vec![q_int(-1), q_frac(-4, 7), q_frac(-2, 5)]);
        assert!(poles.iter().all(|p| p.order == 1));
    }

    #[test]
    fn single_and_empty() {
        let rf = rf_sum_of_terms(&[(2, vec![(2, 1)])]);
        assert_eq!(rf.to_string(), "2/(2+s)");
        let p = rf.poles();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].location, q_int(-2));
        assert_eq!(p[0].leading, q_int(2));
        let z = rf_sum_of_terms(&[]);
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        assert!(z.poles().is_empty());
    }

    #[test]
    fn double_pole() {
        let rf = rf_sum_of_terms(&[(1, vec![(1, 1), (1, 1)])]);
        assert_eq!(rf.to_string(), "1/(1+s)^2");
        let p = rf.poles();
        assert_eq!((p[0].order, p[0].leading.clone()), (2, q_int(1)));
        // Non-primitive factors collapse onto the primitive one.
        let rf = rf_sum_of_terms(&[(1, vec![(2, 2)])]);
        assert_eq!(rf.to_string(), "(1/2)/(1+s)");
        // Full cancellation.
        let rf = rf_sum_of_terms(&[(1, vec![(1, 1)]), (-2, vec![(2, 2)])]);
        assert!(rf.is_zero());
    }

    #[test]
    fn laurent_leading_of_double_pole() {
        // 1/((1+2s)(2+4s)) = 1/(2 (1+2s)^2) = 1/(8 (s+1/2)^2)
        let rf = rf_sum_of_terms(&[(1, vec![(1, 2), (2, 4)])]);
        let p = rf.poles();
        assert_eq!(p[0].order, 2);
        assert_eq!(p[0].leading, q_frac(1, 8));
    }

    fn term_list() -> impl Strategy<Value = Vec<(i64, Vec<(u64, u64)>)>> {
        let factor = (1u64..6, 1u64..8);
        prop::collection::vec((-3i64..4, prop::collection::vec(factor, 1..3)), 0..6)
    }

    proptest! {
        #[test]
        fn agrees_with_term_by_term_sum(terms in term_list(), pts in prop::collection::vec((-40i64..40, 1i64..13), 10)) {
            let rf = rf_sum_of_terms(&terms);
            let ts: Vec<Term> = terms.iter().map(|(c, fs)| Term::new(*c, fs.clone())).collect();
            for (n, d) in pts {
                let s = q_frac(n, d);
                let direct: Option<Rational> = ts.iter().map(|t| t.eval(&s)).sum();
                if let Some(direct) = direct {
                    prop_assert_eq!(rf.eval(&s), Some(direct));
                }
            }
        }

        #[test]
        fn pole_numerators_are_nonzero(terms in term_list()) {
            let rf = rf_sum_of_terms(&terms);
            for p in rf.poles() {
                prop_assert!(!rf.numerator().eval(&p.location).is_zero());
                prop_assert!(!p.leading.is_zero());
            }
        }
    }
}
