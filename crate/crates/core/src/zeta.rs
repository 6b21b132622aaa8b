//! The local topological zeta function read off an intersection diagram.
//!
//! Exceptional curves are projective lines, so the Euler characteristic of
//! the part of `E` meeting no other component is `2 − deg E`. Summing
//!
//! * `(2 − deg E) / (ν + N s)` over exceptional vertices, and
//! * `1 / ((ν_a + N_a s)(ν_b + N_b s))` over edges
//!
//! gives the zeta function. Strict branches contribute only through their
//! edge. In the origin case the function is `1/(1 + N s)` for one smooth
//! branch and the product for two transversal ones.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::ratfunc::{RationalFunctionJson, Term};
use crate::arith::rational::{fmt_q, q_int, vec_as_string};
use crate::diagram::{IntersectionDiagram, VertexId};
use crate::error::DiagramError;
use crate::{Pole, Rational, RationalFunctionS};

/// The term list of the zeta function, before reduction.
pub fn zeta_terms(d: &IntersectionDiagram) -> Result<Vec<Term>, DiagramError> {
    if let Some(branches) = d.origin_case() {
        let factors = branches
            .iter()
            .map(|&b| d.vertex(b).map(|v| (1, v.n)))
            .collect::<Result<Vec<_>, _>>()?;
        return match factors.len() {
            1 | 2 => Ok(vec![Term::new(1, factors)]),
            k => Err(DiagramError::Malformed(format!(
                "{k} branches through an unblown origin"
            ))),
        };
    }
    if d.exceptional().next().is_none() {
        return Err(DiagramError::Malformed(
            "no exceptional curve and no origin case".into(),
        ));
    }
    let mut terms: Vec<Term> = d
        .exceptional()
        .map(|v| Term::new(2 - d.degree(v.id) as i64, vec![(v.nu, v.n)]))
        .collect();
    for &(a, b) in d.edges() {
        let (va, vb) = (d.vertex(a)?, d.vertex(b)?);
        terms.push(Term::new(1, vec![(va.nu, va.n), (vb.nu, vb.n)]));
    }
    Ok(terms)
}

/// The reduced local zeta function.
pub fn local_zeta(d: &IntersectionDiagram) -> Result<RationalFunctionS, DiagramError> {
    Ok(RationalFunctionS::sum_of_terms(&zeta_terms(d)?))
}

/// All `−ν/N`, ascending.
pub fn candidate_poles(d: &IntersectionDiagram) -> Vec<Rational> {
    d.candidates()
}

/// Contribution of vertex `v` to the residue of the zeta function at
/// `s0 = −ν/N` of `v`.
///
/// For an exceptional curve with neighbours `α_1, …, α_m` it is
/// `(2 − m + Σ 1/α_i) / N`; for a strict branch with its single neighbour it
/// is `1 / (N α)`. A vanishing `α` means the candidate has order two.
pub fn residue_contribution(
    d: &IntersectionDiagram,
    v: VertexId,
    s0: &Rational,
) -> Result<Rational, DiagramError> {
    let vertex = d.vertex(v)?;
    if &vertex.candidate() != s0 {
        return Err(DiagramError::NotACandidate(format!(
            "{} for {v}",
            fmt_q(s0)
        )));
    }
    let n = q_int(vertex.n as i64);
    let row = d.alphas_any(v)?;
    if row.iter().any(|(_, a)| a.is_zero()) {
        return Err(DiagramError::OrderTwoCandidate(fmt_q(s0)));
    }
    if v.is_exceptional() {
        let m = q_int(row.len() as i64);
        let sum: Rational = row.iter().map(|(_, a)| a.recip()).sum();
        return Ok((q_int(2) - m + sum) / n);
    }
    match row.as_slice() {
        [] if d.origin_case().is_some() => Ok(n.recip()),
        [(_, a)] => Ok((n * a).recip()),
        _ => Err(DiagramError::Malformed(format!(
            "strict branch {v} has {} neighbours",
            row.len()
        ))),
    }
}

/// Residue contributions of all vertices attaining one candidate value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CandidateContributions {
    pub s0: Rational,
    /// Set when some `α` vanishes; no contributions are computed then.
    pub order_two: bool,
    pub by_vertex: Vec<(VertexId, Rational)>,
}

impl CandidateContributions {
    pub fn total(&self) -> Option<Rational> {
        (!self.order_two).then(|| self.by_vertex.iter().map(|(_, r)| r.clone()).sum())
    }
}

/// Contributions at `s0` from every vertex with `−ν/N = s0`.
pub fn contributions_at(
    d: &IntersectionDiagram,
    s0: &Rational,
) -> Result<CandidateContributions, DiagramError> {
    let mut by_vertex = Vec::new();
    for v in d.vertices().iter().filter(|v| &v.candidate() == s0) {
        match residue_contribution(d, v.id, s0) {
            Ok(r) => by_vertex.push((v.id, r)),
            Err(DiagramError::OrderTwoCandidate(_)) => {
                return Ok(CandidateContributions {
                    s0: s0.clone(),
                    order_two: true,
                    by_vertex: Vec::new(),
                })
            }
            Err(e) => return Err(e),
        }
    }
    if by_vertex.is_empty() {
        return Err(DiagramError::NotACandidate(fmt_q(s0)));
    }
    Ok(CandidateContributions {
        s0: s0.clone(),
        order_two: false,
        by_vertex,
    })
}

/// Zeta function, candidates, poles and residue contributions.
#[derive(Clone, Debug, Serialize)]
pub struct ZetaReport {
    pub zeta: RationalFunctionJson,
    #[serde(serialize_with = "vec_as_string::serialize")]
    pub candidates: Vec<Rational>,
    pub poles: Vec<Pole>,
    #[serde(skip)]
    pub function: RationalFunctionS,
    #[serde(skip)]
    pub contributions: Vec<CandidateContributions>,
}

impl ZetaReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn pole_locations(&self) -> BTreeSet<Rational> {
        self.poles.iter().map(|p| p.location.clone()).collect()
    }
}

pub fn pole_report(d: &IntersectionDiagram) -> Result<ZetaReport, DiagramError> {
    let function = local_zeta(d)?;
    let candidates = candidate_poles(d);
    let contributions = candidates
        .iter()
        .map(|s0| contributions_at(d, s0))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ZetaReport {
        zeta: function.to_json(),
        candidates,
        poles: function.poles(),
        function,
        contributions,
    })
}

/// `1` if `q > 0`, `-1` if `q < 0`, `0` otherwise; convenience for sign checks.
pub fn signum(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q > &Rational::zero() {
        1
    } else {
        -1
    }
}
