//! Dense univariate polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ArithError;
use crate::scalar::{ExactField, Scalar};
use crate::Rational;

/// Polynomial in one indeterminate, coefficients indexed by degree.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and `degree()` is well defined for everything else.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> UniPoly<F> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * t^deg`.
    pub fn monomial(c: F, deg: usize) -> Self {
        let mut coeffs = vec![F::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, deg: usize) -> F {
        self.coeffs.get(deg).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Order of vanishing at 0; `None` for the zero polynomial.
    pub fn ord0(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, by: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() * by.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len().saturating_sub(1));
        let mut k = F::zero();
        for c in self.coeffs.iter() {
            if !k.is_zero() {
                out.push(c.clone() * k.clone());
            }
            k = k + F::one();
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divide by `t^k`, dropping the low coefficients (which must be zero for
    /// the result to be a true quotient).
    pub fn shift_down(&self, k: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Substitute `t -> t + a`.
    pub fn translate(&self, a: &F) -> Self {
        // Horner in the ring of polynomials.
        let shift = Self::from_coeffs(vec![a.clone(), F::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &shift) + &Self::constant(c.clone()))
    }
}

impl<F: ExactField> UniPoly<F> {
    /// Euclidean division; `None` when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n < dd + 1 {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let c = rem[i + dd].clone() / lead.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * dc.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = F::one() / l.clone();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Number of distinct complex roots, `deg(p / gcd(p, p'))`.
    pub fn distinct_root_count(&self) -> Result<usize, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        Ok(self.squarefree_part().degree().unwrap_or(0))
    }

    pub fn is_squarefree(&self) -> bool {
        self.is_zero() || self.gcd(&self.derivative()).is_constant()
    }
}

/// Coefficient-wise addition shared by the `Add`/`Sub` impls.
fn zip_coeffs<F: Scalar>(a: &[F], b: &[F], op: impl Fn(F, F) -> F) -> Vec<F> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(F::zero);
            let y = b.get(i).cloned().unwrap_or_else(F::zero);
            op(x, y)
        })
        .collect()
}

impl<F: Scalar> Add for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: Self) -> UniPoly<F> {
        UniPoly::from_coeffs(zip_coeffs(&self.coeffs, &rhs.coeffs, |x, y| x + y))
    }
}

impl<F: Scalar> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: Self) -> UniPoly<F> {
        UniPoly::from_coeffs(zip_coeffs(&self.coeffs, &rhs.coeffs, |x, y| x - y))
    }
}

impl<F: Scalar> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: Self) -> UniPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl<F: Scalar> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Scalar> $tr for UniPoly<F> {
            type Output = UniPoly<F>;
            fn $m(self, rhs: Self) -> UniPoly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Above this bound on the candidate count the rational root search gives up
/// rather than spin.
const MAX_ROOT_CANDIDATES: u64 = 2_000_000;

impl UniPoly<Rational> {
    /// Scale to coprime integer coefficients with positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(|l| l.is_negative()) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        for c in ints.iter_mut() {
            *c = &*c / &g * &sign;
        }
        ints
    }

    /// Distinct rational roots in ascending order, together with the monic
    /// cofactor that carries every remaining (non-rational) root.
    pub fn rational_roots(&self) -> Result<(Vec<Rational>, Self), ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroPolynomial);
        }
        let mut rest = self.squarefree_part();
        let mut roots = Vec::new();
        if let Some(k) = rest.ord0() {
            if k > 0 {
                roots.push(Rational::zero());
                rest = rest.shift_down(k);
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            let ints = rest.primitive_integer();
            let a0 = ints[0].abs();
            let an = ints[ints.len() - 1].abs();
            let numerators = root_candidates(&a0, &rest, &an)?;
            let denominators = divisors(&an).ok_or(ArithError::RootSearchTooLarge)?;
            let mut found = Vec::new();
            for q in denominators.iter() {
                for p in numerators.iter() {
                    if !p.gcd(q).is_one() {
                        continue;
                    }
                    for sign in [1i32, -1] {
                        let cand = Rational::new(p * BigInt::from(sign), q.clone());
                        if rest.eval(&cand).is_zero() {
                            found.push(cand);
                        }
                    }
                }
            }
            for r in found.iter() {
                let lin = UniPoly::from_coeffs(vec![-r.clone(), Rational::one()]);
                rest = rest.exact_div(&lin).expect("root divides");
            }
            roots.extend(found);
        }
        roots.sort();
        roots.dedup();
        Ok((roots, rest.monic()))
    }
}

/// Candidate numerators `p` of rational roots: the positive divisors of `a0`.
/// When `a0` is too large to factor by trial division the candidates are
/// instead the integers below a root bound that divide it.
fn root_candidates(
    a0: &BigInt,
    poly: &UniPoly<Rational>,
    an: &BigInt,
) -> Result<Vec<BigInt>, ArithError> {
    if let Some(ds) = divisors(a0) {
        return Ok(ds);
    }
    // Cauchy bound on |root|, times the largest possible denominator.
    let lead = poly.leading().expect("nonzero").abs();
    let bound = poly
        .coeffs()
        .iter()
        .map(|c| c.abs() / lead.clone())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
        + Rational::one();
    let limit = (bound * Rational::from_integer(an.clone())).ceil().to_integer();
    let limit = limit.to_u64().filter(|l| *l <= MAX_ROOT_CANDIDATES);
    let limit = limit.ok_or(ArithError::RootSearchTooLarge)?;
    Ok((1..=limit)
        .map(BigInt::from)
        .filter(|p| (a0 % p).is_zero())
        .collect())
}

/// Positive divisors of `n > 0` by trial division, or `None` when `n` is too
/// large for that to finish promptly.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    if n == 0 {
        return Some(Vec::new());
    }
    if n > MAX_ROOT_CANDIDATES * MAX_ROOT_CANDIDATES {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small.into_iter().map(BigInt::from).collect())
}

impl fmt::Display for UniPoly<Rational> {
    /// Descending powers without spaces, e.g. `5s^2+16s+8`, in the variable `s`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("s"))
    }
}

impl UniPoly<Rational> {
    /// Compact rendering in the given variable name.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let coef = if mag.is_integer() {
                mag.to_integer().to_string()
            } else {
                format!("({mag})")
            };
            match deg {
                0 => out.push_str(&coef),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&coef);
                    }
                    out.push_str(var);
                    if deg > 1 {
                        out.push_str(&format!("^{deg}"));
                    }
                }
            }
        }
        out
    }
}
