//! Dense polynomials over ℤ, used internally to run gcd computations without
//! normalizing a rational after every operation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients by degree, no trailing zeros.
pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(mut p: ZPoly) -> ZPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn one() -> ZPoly {
    vec![BigInt::one()]
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn pow(a: &[BigInt], e: u32) -> ZPoly {
    (0..e).fold(one(), |acc, _| mul(&acc, a))
}

/// Gcd of the coefficients, nonnegative.
pub(crate) fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Exact quotient `a / b`, or `None` if `b` does not divide `a` in ℤ[x].
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len().checked_sub(1)?;
    let lb = &b[db];
    let mut r: ZPoly = a.to_vec();
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for shift in (0..r.len() - db).rev() {
        let top = &r[shift + db];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (k, bk) in b.iter().enumerate() {
            r[shift + k] -= &c * bk;
        }
        q[shift] = c;
    }
    trim(r).is_empty().then(|| trim(q))
}

fn scalar_div(a: &[BigInt], c: &BigInt) -> ZPoly {
    a.iter().map(|x| x / c).collect()
}

/// Primitive part with positive leading coefficient, and the signed content.
pub(crate) fn primitive(a: &[BigInt]) -> (BigInt, ZPoly) {
    if a.is_empty() {
        return (BigInt::zero(), Vec::new());
    }
    let mut c = content(a);
    if a.last().expect("nonempty").is_negative() {
        c = -c;
    }
    (c.clone(), scalar_div(a, &c))
}

/// Pseudo-remainder `lc(b)^(δ+1) a mod b` for a generic coefficient ring.
fn prem_generic<C: Clone>(
    a: &[C],
    b: &[C],
    mul_c: impl Fn(&C, &C) -> C,
    sub_c: impl Fn(&C, &C) -> C,
    is_zero: impl Fn(&C) -> bool,
) -> Vec<C> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<C> = a.to_vec();
    for shift in (0..a.len() - db).rev() {
        let lr = r[shift + db].clone();
        for c in r.iter_mut() {
            *c = mul_c(c, lb);
        }
        if !is_zero(&lr) {
            for (k, bk) in b.iter().enumerate() {
                r[shift + k] = sub_c(&r[shift + k], &mul_c(&lr, bk));
            }
        }
    }
    while r.last().is_some_and(&is_zero) {
        r.pop();
    }
    r
}

/// Gcd in ℤ[x] with positive leading coefficient; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() {
        return primitive_signed(b);
    }
    if b.is_empty() {
        return primitive_signed(a);
    }
    let (ca, pa) = primitive(a);
    let (cb, pb) = primitive(b);
    let c = ca.gcd(&cb);
    let (mut a, mut b) = (pa, pb);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    let last = loop {
        if b.len() == 1 {
            break one();
        }
        let delta = (a.len() - b.len()) as u32;
        let r = prem_generic(&a, &b, |x, y| x * y, |x, y| x - y, |x| x.is_zero());
        if r.is_empty() {
            break b;
        }
        let divisor = &g * h.pow(delta);
        a = b;
        b = scalar_div(&r, &divisor);
        g = a.last().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta) / h.pow(delta - 1)
        };
    };
    let (_, pp) = primitive(&last);
    pp.iter().map(|x| x * &c).collect()
}

/// `a` times the sign of its leading coefficient.
fn primitive_signed(a: &[BigInt]) -> ZPoly {
    match a.last() {
        Some(l) if l.is_negative() => a.iter().map(|x| -x).collect(),
        _ => a.to_vec(),
    }
}

/// Rows of a polynomial in ℤ[x][y], indexed by the power of `y`.
pub(crate) type ZRows = Vec<ZPoly>;

fn rows_content(rows: &[ZPoly]) -> ZPoly {
    rows.iter().fold(Vec::new(), |acc, r| gcd(&acc, r))
}

fn rows_primitive(rows: &[ZPoly]) -> (ZPoly, ZRows) {
    let c = rows_content(rows);
    let pp = rows
        .iter()
        .map(|r| exact_div(r, &c).expect("content divides"))
        .collect();
    (c, pp)
}

/// Gcd in ℤ[x][y] up to sign, via contents in ℤ[x] and the subresultant
/// remainder sequence on the primitive parts.
pub(crate) fn gcd_rows(a: &[ZPoly], b: &[ZPoly]) -> ZRows {
    if a.is_empty() {
        return b.to_vec();
    }
    if b.is_empty() {
        return a.to_vec();
    }
    let (ca, mut a) = rows_primitive(a);
    let (cb, mut b) = rows_primitive(b);
    let content = gcd(&ca, &cb);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = one();
    let mut h = one();
    let last = loop {
        if b.len() == 1 {
            break vec![one()];
        }
        let delta = (a.len() - b.len()) as u32;
        let r = prem_generic(&a, &b, |x, y| mul(x, y), |x, y| sub(x, y), |x| x.is_empty());
        if r.is_empty() {
            break b;
        }
        let divisor = mul(&g, &pow(&h, delta));
        a = b;
        b = r
            .iter()
            .map(|c| exact_div(c, &divisor).expect("subresultant division is exact"))
            .collect();
        g = a.last().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            exact_div(&pow(&g, delta), &pow(&h, delta - 1))
                .expect("subresultant division is exact")
        };
    };
    let (_, pp) = rows_primitive(&last);
    pp.iter().map(|r| mul(r, &content)).collect()
}
