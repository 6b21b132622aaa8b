//! Sparse bivariate polynomials and the exact algorithms on them.
//!
//! Terms are keyed by the exponent pair `(i, j)` of `x^i y^j`. Every ring
//! operation and every chart substitution works over any [`Scalar`]; gcd,
//! exact division and squarefree decomposition need an [`ExactField`] and go
//! through the recursive view ℚ[x][y].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::unipoly::UniPoly;
use super::zpoly::{self, ZRows};
use crate::scalar::{ExactField, Scalar};
use crate::Rational;

/// Order of vanishing of a polynomial at a point.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Multiplicity {
    Finite(u32),
    /// The zero polynomial vanishes to every order.
    Infinite,
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(m) => write!(f, "{m}"),
            Multiplicity::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly<F> {
    terms: BTreeMap<(u32, u32), F>,
}

/// Graded-lex comparison of exponent pairs: total degree first, then the
/// power of `x`.
pub fn grlex(a: &(u32, u32), b: &(u32, u32)) -> Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

impl<F: Scalar> BiPoly<F> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * x^i * y^j`.
    pub fn monomial(c: F, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(F::one(), 0, 1)
    }

    /// Collects terms, merging repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), F)>>(iter: I) -> Self {
        let mut terms: BTreeMap<(u32, u32), F> = BTreeMap::new();
        for (e, c) in iter {
            let slot = terms.entry(e).or_insert_with(F::zero);
            *slot = slot.clone() + c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(u32, u32), &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> F {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(0, 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Largest power of `x` dividing the polynomial.
    pub fn x_order(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).min()
    }

    /// Largest power of `y` dividing the polynomial.
    pub fn y_order(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).min()
    }

    /// Lowest total degree of a term, i.e. the multiplicity at the origin.
    pub fn mult_at_origin(&self) -> Multiplicity {
        match self.terms.keys().map(|&(i, j)| i + j).min() {
            Some(m) => Multiplicity::Finite(m),
            None => Multiplicity::Infinite,
        }
    }

    /// Multiplicity at an arbitrary point: the lowest degree in the Taylor
    /// expansion there.
    pub fn mult_at_point(&self, pt: (&F, &F)) -> Multiplicity {
        self.translate(pt.0, pt.1).mult_at_origin()
    }

    /// The homogeneous part of lowest degree (the tangent cone's equation).
    pub fn leading_form(&self) -> Self {
        match self.mult_at_origin() {
            Multiplicity::Finite(m) => Self {
                terms: self
                    .terms
                    .iter()
                    .filter(|(&(i, j), _)| i + j == m)
                    .map(|(e, c)| (*e, c.clone()))
                    .collect(),
            },
            Multiplicity::Infinite => Self::zero(),
        }
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<((u32, u32), &F)> {
        self.terms
            .iter()
            .max_by(|a, b| grlex(a.0, b.0))
            .map(|(e, c)| (*e, c))
    }

    /// Restriction to the line `x = 0`, as a polynomial in `y`.
    pub fn at_x_zero(&self) -> UniPoly<F> {
        let deg = self.degree_y().unwrap_or(0) as usize;
        let mut coeffs = vec![F::zero(); deg + 1];
        for (&(i, j), c) in self.terms.iter() {
            if i == 0 {
                coeffs[j as usize] = c.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Restriction to the line `y = 0`, as a polynomial in `x`.
    pub fn at_y_zero(&self) -> UniPoly<F> {
        self.swap().at_x_zero()
    }

    /// Exchange the roles of `x` and `y`.
    pub fn swap(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Pullback along the first blow-up chart `(x, y) = (u, u v)`.
    pub fn chart1(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i + j, j), c.clone()))
                .collect(),
        }
    }

    /// Pullback along the second blow-up chart `(x, y) = (u v, v)`.
    pub fn chart2(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i, i + j), c.clone()))
                .collect(),
        }
    }

    /// Divide by `x^m`; `None` unless every term carries at least that power.
    pub fn div_x_pow(&self, m: u32) -> Option<Self> {
        if self.terms.keys().any(|&(i, _)| i < m) {
            return None;
        }
        Some(Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i - m, j), c.clone()))
                .collect(),
        })
    }

    /// Divide by `y^m`; `None` unless every term carries at least that power.
    pub fn div_y_pow(&self, m: u32) -> Option<Self> {
        self.swap().div_x_pow(m).map(|p| p.swap())
    }

    pub fn mul_monomial(&self, c: &F, a: u32, b: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&(i, j), k)| ((i + a, j + b), k.clone() * c.clone())),
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        self.mul_monomial(c, 0, 0)
    }

    /// Substitute `x -> x + a`, `y -> y + b`.
    pub fn translate(&self, a: &F, b: &F) -> Self {
        if a.is_zero() && b.is_zero() {
            return self.clone();
        }
        let xs = &Self::x() + &Self::constant(a.clone());
        let ys = &Self::y() + &Self::constant(b.clone());
        self.compose(&xs, &ys)
    }

    /// Substitute `x -> xs`, `y -> ys`.
    pub fn compose(&self, xs: &Self, ys: &Self) -> Self {
        let mut xpow: Vec<Self> = vec![Self::one()];
        let mut ypow: Vec<Self> = vec![Self::one()];
        let mut out = Self::zero();
        for (&(i, j), c) in self.terms.iter() {
            while xpow.len() <= i as usize {
                let next = xpow.last().expect("nonempty") * xs;
                xpow.push(next);
            }
            while ypow.len() <= j as usize {
                let next = ypow.last().expect("nonempty") * ys;
                ypow.push(next);
            }
            let term = &xpow[i as usize] * &ypow[j as usize];
            out = &out + &term.scale(c);
        }
        out
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        self.terms.iter().fold(F::zero(), |acc, (&(i, j), c)| {
            acc + c.clone() * pow_scalar(x, i) * pow_scalar(y, j)
        })
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c.clone() * from_u32::<F>(i))),
        )
    }

    pub fn derivative_y(&self) -> Self {
        self.swap().derivative_x().swap()
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
}

fn pow_scalar<F: Scalar>(x: &F, e: u32) -> F {
    (0..e).fold(F::one(), |acc, _| acc * x.clone())
}

fn from_u32<F: Scalar>(n: u32) -> F {
    (0..n).fold(F::zero(), |acc, _| acc + F::one())
}

impl<F: ExactField> BiPoly<F> {
    /// The view as a polynomial in `y` whose coefficients are polynomials in `x`.
    fn to_recursive(&self) -> Vec<UniPoly<F>> {
        let deg = match self.degree_y() {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut rows: Vec<Vec<F>> = vec![Vec::new(); deg + 1];
        for (&(i, j), c) in self.terms.iter() {
            let row = &mut rows[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, F::zero());
            }
            row[i as usize] = c.clone();
        }
        rows.into_iter().map(UniPoly::from_coeffs).collect()
    }

    fn from_recursive(rows: &[UniPoly<F>]) -> Self {
        Self::from_terms(rows.iter().enumerate().flat_map(|(j, row)| {
            row.coeffs()
                .iter()
                .enumerate()
                .map(move |(i, c)| ((i as u32, j as u32), c.clone()))
        }))
    }

    /// Rescale so that the graded-lex leading coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => {
                let inv = F::one() / c.clone();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem = self.to_recursive();
        let div = d.to_recursive();
        let dd = div.len() - 1;
        let lead = &div[dd];
        if rem.len() < div.len() {
            return None;
        }
        let mut quot = vec![UniPoly::zero(); rem.len() - dd];
        while let Some(top) = rem.len().checked_sub(1) {
            if top < dd {
                return None;
            }
            let c = rem[top].exact_div(lead)?;
            let shift = top - dd;
            for (k, dk) in div.iter().enumerate() {
                rem[shift + k] = &rem[shift + k] - &(&c * dk);
            }
            quot[shift] = c;
            while rem.last().is_some_and(|r| r.is_zero()) {
                rem.pop();
            }
        }
        Some(Self::from_recursive(&quot))
    }

    /// Gcd of the coefficients in ℚ[x] of the recursive view (monic).
    fn content_y(rows: &[UniPoly<F>]) -> UniPoly<F> {
        rows.iter()
            .fold(UniPoly::zero(), |acc, r| acc.gcd(r))
    }

    fn primitive_y(rows: &[UniPoly<F>]) -> (UniPoly<F>, Vec<UniPoly<F>>) {
        let c = Self::content_y(rows);
        if c.is_zero() {
            return (c, Vec::new());
        }
        let pp = rows
            .iter()
            .map(|r| r.exact_div(&c).expect("content divides"))
            .collect();
        (c, pp)
    }

}

impl BiPoly<Rational> {
    /// Scale to integer coefficients and split into rows by the power of `y`.
    fn to_zrows(&self) -> ZRows {
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let deg = match self.degree_y() {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut rows: ZRows = vec![Vec::new(); deg + 1];
        for (&(i, j), c) in self.terms.iter() {
            let row = &mut rows[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, BigInt::zero());
            }
            row[i as usize] = c.numer() * (&lcm / c.denom());
        }
        rows
    }

    fn from_zrows(rows: &[zpoly::ZPoly]) -> Self {
        Self::from_terms(rows.iter().enumerate().flat_map(|(j, row)| {
            row.iter()
                .enumerate()
                .map(move |(i, c)| ((i as u32, j as u32), Rational::from_integer(c.clone())))
        }))
    }

    /// Greatest common divisor, normalized to graded-lex leading coefficient 1.
    /// `gcd(0, 0)` is zero.
    ///
    /// Runs over ℤ[x][y]: contents in ℤ[x] are split off and the primitive
    /// parts go through the subresultant remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let g = zpoly::gcd_rows(&self.to_zrows(), &other.to_zrows());
        Self::from_zrows(&g).normalized()
    }

    /// Yun's algorithm with respect to `y`; the input must have no factor
    /// free of `y` other than constants.
    fn yun_y(p: &Self) -> Vec<(u32, Self)> {
        let mut out = Vec::new();
        if p.degree_y().unwrap_or(0) == 0 {
            return out;
        }
        let dp = p.derivative_y();
        let a0 = p.gcd(&dp);
        let mut b = p.exact_div(&a0).expect("gcd divides");
        let c = dp.exact_div(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative_y();
        let mut k = 1;
        while !b.is_constant() {
            let s = b.gcd(&d);
            let nb = b.exact_div(&s).expect("gcd divides");
            let nc = d.exact_div(&s).expect("gcd divides");
            d = &nc - &nb.derivative_y();
            b = nb;
            if !s.is_constant() {
                out.push((k, s.normalized()));
            }
            k += 1;
        }
        out
    }

    /// Squarefree decomposition `p = c * prod_k s_k^k` with pairwise coprime
    /// squarefree `s_k`. Returns the nonconstant `(k, s_k)` in increasing `k`,
    /// each normalized; the constant `c` is not returned.
    pub fn squarefree_decomposition(&self) -> Vec<(u32, Self)> {
        if self.is_zero() || self.is_constant() {
            return Vec::new();
        }
        let (content, pp) = Self::primitive_y(&self.to_recursive());
        let pp = Self::from_recursive(&pp);
        // Factors free of y: run the same algorithm with the variables swapped.
        let content = Self::from_recursive(&[content]).swap();
        let mut by_k: BTreeMap<u32, Self> = BTreeMap::new();
        for (k, s) in Self::yun_y(&pp) {
            by_k.insert(k, s);
        }
        for (k, s) in Self::yun_y(&content) {
            let s = s.swap();
            let merged = match by_k.remove(&k) {
                Some(t) => &t * &s,
                None => s,
            };
            by_k.insert(k, merged.normalized());
        }
        by_k.into_iter().collect()
    }

    /// Product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        self.squarefree_decomposition()
            .into_iter()
            .fold(Self::one(), |acc, (_, s)| &acc * &s)
    }
}

impl<F: Scalar> Add for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn add(self, rhs: Self) -> BiPoly<F> {
        let mut terms = self.terms.clone();
        for (e, c) in rhs.terms.iter() {
            let slot = terms.entry(*e).or_insert_with(F::zero);
            *slot = slot.clone() + c.clone();
        }
        terms.retain(|_, c| !c.is_zero());
        BiPoly { terms }
    }
}

impl<F: Scalar> Neg for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn neg(self) -> BiPoly<F> {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<F: Scalar> Sub for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn sub(self, rhs: Self) -> BiPoly<F> {
        self + &(-rhs)
    }
}

impl<F: Scalar> Mul for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn mul(self, rhs: Self) -> BiPoly<F> {
        let mut terms: BTreeMap<(u32, u32), F> = BTreeMap::new();
        for (&(i, j), a) in self.terms.iter() {
            for (&(k, l), b) in rhs.terms.iter() {
                let slot = terms.entry((i + k, j + l)).or_insert_with(F::zero);
                *slot = slot.clone() + a.clone() * b.clone();
            }
        }
        terms.retain(|_, c| !c.is_zero());
        BiPoly { terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Scalar> $tr for BiPoly<F> {
            type Output = BiPoly<F>;
            fn $m(self, rhs: Self) -> BiPoly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl BiPoly<Rational> {
    /// Render with the given variable names, terms in descending graded-lex
    /// order, e.g. `x^7 + x*y^4` or `-3/2*x^2*y + 1`.
    pub fn render(&self, vars: (&str, &str)) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex(b, a));
        let mut out = String::new();
        for (idx, key) in keys.into_iter().enumerate() {
            let c = &self.terms[key];
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || *key == (0, 0) {
                parts.push(mag.to_string());
            }
            for (e, name) in [(key.0, vars.0), (key.1, vars.1)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}

impl fmt::Display for BiPoly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(("x", "y")))
    }
}

/// Discriminant `b^2 - 4ac` of a binary quadratic form `a x^2 + b x y + c y^2`.
pub fn quadratic_discriminant<F: Scalar>(form: &BiPoly<F>) -> F {
    let a = form.coeff(2, 0);
    let b = form.coeff(1, 1);
    let c = form.coeff(0, 2);
    let four = from_u32::<F>(4);
    b.clone() * b - four * a * c
}
