//! Deciding which candidate poles are poles from the diagram alone.
//!
//! A candidate `s0` of a minimal principalization is a pole exactly when
//! some component `E(N, ν)` with `−ν/N = s0` satisfies one of:
//!
//! 1. `E` is a strict branch (so `s0 = −1/N`);
//! 2. `E` is exceptional and meets no other component;
//! 3. `E` meets exactly one component, with `α ≠ −1`;
//! 4. `E` meets exactly two components, with `α_1 + α_2 ≠ 0`;
//! 5. `E` meets at least three components.
//!
//! [`cross_check`] compares this with the poles of the reduced zeta function.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::rational::{as_string, fmt_q};
use crate::diagram::{IntersectionDiagram, VertexId};
use crate::error::DiagramError;
use crate::zeta::pole_report;
use crate::Rational;

/// One satisfied condition and the vertex witnessing it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Reason {
    pub condition: u8,
    pub witness: VertexId,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub s0: Rational,
    /// Empty when `s0` is not a pole.
    pub reasons: Vec<Reason>,
}

impl Verdict {
    pub fn is_pole(&self) -> bool {
        !self.reasons.is_empty()
    }
}

impl fmt::Display for Verdict {
    /// `-2/5: cond4 (E1)` or `-1/2: none`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", fmt_q(&self.s0))?;
        if self.reasons.is_empty() {
            return f.write_str("none");
        }
        let parts: Vec<String> = self
            .reasons
            .iter()
            .map(|r| format!("cond{} ({})", r.condition, r.witness))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

#[derive(Serialize)]
struct ReasonJson {
    condition: u8,
    witness: String,
}

#[derive(Serialize)]
pub struct VerdictJson {
    #[serde(with = "as_string")]
    s0: Rational,
    pole: bool,
    reasons: Vec<ReasonJson>,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        Self {
            s0: v.s0.clone(),
            pole: v.is_pole(),
            reasons: v
                .reasons
                .iter()
                .map(|r| ReasonJson {
                    condition: r.condition,
                    witness: r.witness.to_string(),
                })
                .collect(),
        }
    }
}

/// Apply the five conditions at `s0`. Refuses diagrams of non-minimal
/// principalizations, for which the conditions are not valid.
pub fn classify(d: &IntersectionDiagram, s0: &Rational) -> Result<Verdict, DiagramError> {
    if !d.is_minimal() {
        return Err(DiagramError::NotMinimal);
    }
    classify_unchecked(d, s0)
}

/// [`classify`] without the minimality guard.
pub fn classify_unchecked(d: &IntersectionDiagram, s0: &Rational) -> Result<Verdict, DiagramError> {
    let at: Vec<_> = d.vertices().iter().filter(|v| &v.candidate() == s0).collect();
    if at.is_empty() {
        return Err(DiagramError::NotACandidate(fmt_q(s0)));
    }
    let mut reasons = Vec::new();
    for v in at {
        if !v.id.is_exceptional() {
            reasons.push(Reason {
                condition: 1,
                witness: v.id,
            });
            continue;
        }
        let row = d.alphas(v.id)?;
        let condition = match row.as_slice() {
            [] => Some(2),
            [(_, a)] if *a != -Rational::one() => Some(3),
            [(_, a), (_, b)] if !(a + b).is_zero() => Some(4),
            [_, _, _, ..] => Some(5),
            _ => None,
        };
        if let Some(condition) = condition {
            reasons.push(Reason {
                condition,
                witness: v.id,
            });
        }
    }
    Ok(Verdict {
        s0: s0.clone(),
        reasons,
    })
}

/// Verdicts for all candidates, ascending.
pub fn classify_all(d: &IntersectionDiagram) -> Result<Vec<Verdict>, DiagramError> {
    d.candidates().iter().map(|s0| classify(d, s0)).collect()
}

pub fn poles_by_criterion(d: &IntersectionDiagram) -> Result<BTreeSet<Rational>, DiagramError> {
    Ok(classify_all(d)?
        .into_iter()
        .filter(Verdict::is_pole)
        .map(|v| v.s0)
        .collect())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossCheck {
    pub criterion: BTreeSet<Rational>,
    pub analytic: BTreeSet<Rational>,
}

impl CrossCheck {
    pub fn agree(&self) -> bool {
        self.criterion == self.analytic
    }
}

impl fmt::Display for CrossCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |s: &BTreeSet<Rational>| {
            s.iter().map(fmt_q).collect::<Vec<_>>().join(", ")
        };
        write!(
            f,
            "criterion {{{}}} vs zeta {{{}}}: {}",
            show(&self.criterion),
            show(&self.analytic),
            if self.agree() { "match" } else { "MISMATCH" }
        )
    }
}

/// Compare the criterion with the poles of the reduced zeta function.
pub fn cross_check(d: &IntersectionDiagram) -> Result<CrossCheck, DiagramError> {
    Ok(CrossCheck {
        criterion: poles_by_criterion(d)?,
        analytic: pole_report(d)?.pole_locations(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;
    use crate::arith::rational::{q_frac, q_int};
    use crate::principalize::{principalize, DEFAULT_MAX_STEPS};

    fn diagram(ss: &[&str]) -> IntersectionDiagram {
        let gens: Vec<_> = ss.iter().map(|s| parse_poly(s, ("x", "y")).unwrap()).collect();
        principalize(&gens, DEFAULT_MAX_STEPS).unwrap().diagram
    }

    #[test]
    fn golden_verdicts() {
        let d = diagram(&["x^4*y", "x^7 + x*y^4"]);
        let lines: Vec<String> = classify_all(&d).unwrap().iter().map(|v| v.to_string()).collect();
        assert_eq!(
            lines,
            ["-1: cond1 (S1)", "-4/7: cond3 (E3)", "-1/2: none", "-2/5: cond4 (E1)"]
        );
        assert!(cross_check(&d).unwrap().agree());
        assert!(matches!(
            classify(&d, &q_int(-3)),
            Err(DiagramError::NotACandidate(_))
        ));
    }

    #[test]
    fn family_pole() {
        let d = diagram(&["x^4*y", "x^7 + y^5"]);
        let poles = poles_by_criterion(&d).unwrap();
        assert!(poles.contains(&q_frac(-4, 7)));
        assert!(cross_check(&d).unwrap().agree());
    }

    #[test]
    fn monomial_curve() {
        let d = diagram(&["x^2*y^5"]);
        let poles: Vec<Rational> = poles_by_criterion(&d).unwrap().into_iter().collect();
        assert_eq!(poles, vec![q_frac(-1, 2), q_frac(-1, 5)]);
    }

    #[test]
    fn refuses_non_minimal() {
        let d = IntersectionDiagram::new(Vec::new(), Vec::new(), None, false).unwrap();
        assert_eq!(classify(&d, &q_int(-1)), Err(DiagramError::NotMinimal));
    }
}
