//! Generic members `Σ λ_i f_i` of the linear system spanned by the
//! generators.
//!
//! A general member has the same numerical data as the ideal along every
//! divisor, and its strict transform meets each exceptional curve `E`
//! transversally in `n(E)` points away from all other components. Those
//! counts feed the relation `Σ α_i = m − 2 + ν n / N`.
//!
//! "General" is certified per sample rather than assumed: a coefficient
//! vector is rejected (and another drawn deterministically) when some
//! vanishing order jumps, a restriction to a curve is not squarefree, or the
//! member passes through a double point, a strict branch, or a blown-up point.

use num_traits::{One, Zero};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::rational::{as_string, q_int, vec_as_string};
use crate::blowup::{AxisParam, ChartState, DivisorId};
use crate::diagram::{IntersectionDiagram, VertexId};
use crate::error::{EngineError, GenericError};
use crate::principalize::PrincipalizationResult;
use crate::{QBiPoly, QPoly, Rational};

/// How many coefficient vectors are tried before giving up.
pub const RETRY_BUDGET: usize = 16;

/// Deterministic coefficients for attempt `attempt`: all ones first, then
/// nonzero integers in `[-9, 9]` drawn from a ChaCha stream keyed by
/// `(seed, attempt)`.
pub fn sample_lambda(l: usize, seed: u64, attempt: usize) -> Vec<Rational> {
    if attempt == 0 || l <= 1 {
        return vec![Rational::one(); l];
    }
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(attempt as u64).to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(key);
    loop {
        let draw: Vec<i64> = (0..l)
            .map(|_| loop {
                let v: i64 = rng.random_range(-9..=9);
                if v != 0 {
                    break v;
                }
            })
            .collect();
        if draw.iter().any(|&v| v != 1) {
            return draw.into_iter().map(q_int).collect();
        }
    }
}

fn degenerate(msg: impl Into<String>) -> GenericError {
    GenericError::DegenerateLambda(msg.into())
}

fn combine(polys: &[QBiPoly], lambda: &[Rational]) -> QBiPoly {
    polys
        .iter()
        .zip(lambda)
        .fold(QBiPoly::zero(), |acc, (p, l)| &acc + &p.scale(l))
}

fn check_lambda(state: &ChartState, lambda: &[Rational]) -> Result<(), GenericError> {
    if lambda.len() != state.gens().len() {
        return Err(degenerate(format!(
            "{} coefficients for {} generators",
            lambda.len(),
            state.gens().len()
        )));
    }
    if lambda.iter().any(Zero::is_zero) {
        return Err(degenerate("zero coefficient"));
    }
    Ok(())
}

/// The member `Σ λ_i f_i`.
pub fn combination(state: &ChartState, lambda: &[Rational]) -> QBiPoly {
    combine(state.gens(), lambda)
}

/// Vanishing orders of the generic member and of the generators along one
/// divisor.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MinCheck {
    #[serde(serialize_with = "display")]
    pub divisor: DivisorId,
    /// `N` recorded when the divisor was created.
    pub n: u64,
    pub generic_order: u64,
    pub min_order: u64,
}

fn display<T: std::fmt::Display, S: serde::Serializer>(t: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(t)
}

impl MinCheck {
    pub fn passed(&self) -> bool {
        self.generic_order == self.min_order && self.min_order == self.n
    }
}

/// Order of `Σ λ_i f_i` along every divisor versus the minimum over the
/// generators. A jump means `λ` is special and is reported as degenerate.
pub fn verify_min_property(
    state: &ChartState,
    lambda: &[Rational],
) -> Result<Vec<MinCheck>, GenericError> {
    check_lambda(state, lambda)?;
    let g = combination(state, lambda);
    if g.is_zero() {
        return Err(degenerate("the combination vanishes identically"));
    }
    let mut out = Vec::new();
    for record in state.divisors() {
        let d = record.id;
        let generic_order = state.divisor_order_of(&g, d)?;
        let min_order = state
            .gens()
            .iter()
            .map(|f| state.divisor_order_of(f, d))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .min()
            .unwrap_or(0);
        if min_order != record.n {
            return Err(EngineError::InvariantViolation(format!(
                "{d}: N = {} but the generators vanish to order {min_order}",
                record.n
            ))
            .into());
        }
        if generic_order != min_order {
            return Err(degenerate(format!(
                "order {generic_order} along {d} exceeds the minimum {min_order}"
            )));
        }
        out.push(MinCheck {
            divisor: d,
            n: record.n,
            generic_order,
            min_order,
        });
    }
    Ok(out)
}

/// Restriction of the residual combination to one divisor in one chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Restriction {
    pub chart: usize,
    pub chart_label: String,
    /// 0 if the divisor is `{u = 0}` (polynomial in `v`), 1 if `{v = 0}`.
    pub axis: usize,
    /// Transition from the chart coordinate to the divisor's parameter.
    pub param: AxisParam,
    pub poly: QPoly,
}

/// `Σ coeffs_i · residual_i` restricted to the exceptional curve `e` in every
/// chart where `e` is a coordinate axis. Only valid once principalization is
/// complete.
pub fn restrict_residual_to(
    state: &ChartState,
    e: usize,
    coeffs: &[Rational],
) -> Result<Vec<Restriction>, GenericError> {
    if !state.is_complete()? {
        return Err(EngineError::ResidualNotUnit.into());
    }
    if e >= state.exceptional().len() {
        return Err(EngineError::UnknownDivisor(DivisorId::Exceptional(e).to_string()).into());
    }
    if coeffs.iter().all(Zero::is_zero) {
        return Err(degenerate("all coefficients are zero"));
    }
    let mut out = Vec::new();
    for chart in state.charts().iter().filter(|c| c.is_patch()) {
        for (axis, slot) in chart.axes.iter().enumerate() {
            let Some(a) = slot.as_ref().filter(|a| a.divisor == e) else {
                continue;
            };
            let g = combine(&chart.residuals, coeffs);
            let poly = if axis == 0 { g.at_x_zero() } else { g.at_y_zero() };
            out.push(Restriction {
                chart: chart.id,
                chart_label: chart.label(),
                axis,
                param: a.param.clone(),
                poly,
            });
        }
    }
    Ok(out)
}

/// Number of points where the strict transform of the member
/// `Σ λ_i f'_i` meets the exceptional curve `e`, counted over ℂ.
///
/// The count is taken on `e`'s birth charts: zeros of the restriction on the
/// line chart away from blown-up points, plus the point at infinity.
/// Every non-generic situation is reported as [`GenericError::DegenerateLambda`].
pub fn count_n(state: &ChartState, lambda: &[Rational], e: usize) -> Result<u64, GenericError> {
    check_lambda(state, lambda)?;
    if !state.is_complete()? {
        return Err(EngineError::ResidualNotUnit.into());
    }
    let event = state
        .events()
        .iter()
        .find(|ev| ev.divisor == e)
        .ok_or_else(|| EngineError::UnknownDivisor(DivisorId::Exceptional(e).to_string()))?;
    let [line_id, inf_id] = event.charts;
    let id = DivisorId::Exceptional(e);

    let line = state.chart(line_id);
    let mut g = combine(&line.residuals, lambda).at_x_zero();
    if g.is_zero() {
        return Err(degenerate(format!("the member contains {id}")));
    }
    for tb in &line.blown {
        let base = line
            .residuals
            .iter()
            .all(|r| r.at_x_zero().eval(tb).is_zero());
        let factor = QPoly::from_coeffs(vec![-tb.clone(), Rational::one()]);
        if base {
            while let Some(q) = g.exact_div(&factor) {
                g = q;
            }
        } else if g.eval(tb).is_zero() {
            return Err(degenerate(format!("the member passes through a blown-up point of {id}")));
        }
    }
    if line.axes[1].is_some() && !line.is_blown(&Rational::zero()) && g.eval(&Rational::zero()).is_zero() {
        return Err(degenerate(format!("the member passes through a double point of {id}")));
    }
    if !g.is_squarefree() {
        return Err(degenerate(format!("the member is tangent to {id}")));
    }
    for b in &line.branches {
        if !g.gcd(&b.at_x_zero()).is_constant() {
            return Err(degenerate(format!("the member meets a strict branch on {id}")));
        }
    }
    let mut n = g.degree().unwrap_or(0) as u64;

    let inf = state.chart(inf_id);
    let gi = combine(&inf.residuals, lambda);
    if gi.constant_term().is_zero() {
        if inf.is_blown(&Rational::zero()) {
            let base = inf.residuals.iter().all(|r| r.constant_term().is_zero());
            if !base {
                return Err(degenerate(format!(
                    "the member passes through a blown-up point of {id}"
                )));
            }
        } else {
            if inf.axes[0].is_some() {
                return Err(degenerate(format!("the member passes through a double point of {id}")));
            }
            if inf.branches.iter().any(|b| b.constant_term().is_zero()) {
                return Err(degenerate(format!("the member meets a strict branch on {id}")));
            }
            if gi.coeff(1, 0).is_zero() {
                return Err(degenerate(format!("the member is tangent to {id} at infinity")));
            }
            n += 1;
        }
    }
    Ok(n)
}

/// Both forms of the relation for one exceptional curve.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RelationRow {
    #[serde(serialize_with = "display")]
    pub divisor: VertexId,
    #[serde(rename = "N")]
    pub n_value: u64,
    pub nu: u64,
    /// Number of diagram neighbours.
    pub m: usize,
    /// Intersections with the generic member's strict transform.
    pub n: u64,
    #[serde(with = "as_string")]
    pub alpha_sum: Rational,
    /// `m − 2 + ν n / N`.
    #[serde(with = "as_string")]
    pub alpha_sum_expected: Rational,
    /// `Σ α + n (1 − ν/N)`.
    #[serde(with = "as_string")]
    pub weighted_lhs: Rational,
    /// `m + n − 2`.
    #[serde(with = "as_string")]
    pub weighted_rhs: Rational,
}

impl RelationRow {
    pub fn holds(&self) -> bool {
        self.alpha_sum == self.alpha_sum_expected && self.weighted_lhs == self.weighted_rhs
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GenericCheckReport {
    #[serde(serialize_with = "vec_as_string::serialize")]
    pub lambda: Vec<Rational>,
    /// Rejected samples before `lambda`.
    pub retries: usize,
    pub min_property: Vec<MinCheck>,
    pub relations: Vec<RelationRow>,
}

impl GenericCheckReport {
    pub fn passed(&self) -> bool {
        self.min_property.iter().all(MinCheck::passed) && self.relations.iter().all(RelationRow::holds)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Minimum property, counts `n` and both relations for a given `λ`.
pub fn verify_relations(
    state: &ChartState,
    diagram: &IntersectionDiagram,
    lambda: &[Rational],
) -> Result<GenericCheckReport, GenericError> {
    let min_property = verify_min_property(state, lambda)?;
    let mut relations = Vec::new();
    for v in diagram.exceptional() {
        let n = count_n(state, lambda, v.id.index)?;
        let alphas = diagram
            .alphas(v.id)
            .map_err(|e| EngineError::InvariantViolation(e.to_string()))?;
        let m = alphas.len();
        let alpha_sum: Rational = alphas.into_iter().map(|(_, a)| a).sum();
        let ratio = v.ratio();
        let nq = q_int(n as i64);
        let mq = q_int(m as i64);
        relations.push(RelationRow {
            divisor: v.id,
            n_value: v.n,
            nu: v.nu,
            m,
            n,
            alpha_sum_expected: &mq - q_int(2) + &ratio * &nq,
            weighted_lhs: &alpha_sum + &nq * (Rational::one() - &ratio),
            weighted_rhs: &mq + &nq - q_int(2),
            alpha_sum,
        });
    }
    Ok(GenericCheckReport {
        lambda: lambda.to_vec(),
        retries: 0,
        min_property,
        relations,
    })
}

/// [`verify_relations`] with the first accepted sample of
/// [`sample_lambda`], resampling on degenerate coefficients.
pub fn generic_check(
    result: &PrincipalizationResult,
    seed: u64,
) -> Result<GenericCheckReport, GenericError> {
    let l = result.state.gens().len();
    for attempt in 0..RETRY_BUDGET {
        let lambda = sample_lambda(l, seed, attempt);
        match verify_relations(&result.state, &result.diagram, &lambda) {
            Ok(mut report) => {
                report.retries = attempt;
                return Ok(report);
            }
            Err(GenericError::DegenerateLambda(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(GenericError::RetriesExhausted(RETRY_BUDGET))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;
    use crate::arith::rational::q_frac;
    use crate::principalize::{principalize, DEFAULT_MAX_STEPS};

    fn run(ss: &[&str]) -> PrincipalizationResult {
        let gens: Vec<_> = ss.iter().map(|s| parse_poly(s, ("x", "y")).unwrap()).collect();
        principalize(&gens, DEFAULT_MAX_STEPS).unwrap()
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_lambda(2, 0, 0), vec![q_int(1), q_int(1)]);
        let a = sample_lambda(2, 0, 1);
        assert_ne!(a, vec![q_int(1), q_int(1)]);
        assert_eq!(a, sample_lambda(2, 0, 1));
        assert_ne!(a, sample_lambda(2, 0, 2));
        let t = sample_lambda(3, 7, 4);
        assert_eq!(t.len(), 3);
        assert!(t.iter().all(|x| !x.is_zero()));
    }

    #[test]
    fn golden_counts() {
        let r = run(&["x^4*y", "x^7 + x*y^4"]);
        let ones = [q_int(1), q_int(1)];
        let ns: Vec<u64> = (0..3).map(|e| count_n(&r.state, &ones, e).unwrap()).collect();
        assert_eq!(ns, vec![3, 0, 1]);
        let report = generic_check(&r, 0).unwrap();
        assert_eq!(report.retries, 0);
        assert!(report.passed());
        assert_eq!(report.relations[2].alpha_sum, q_frac(-3, 7));
        assert_eq!(report.relations[0].alpha_sum, q_frac(6, 5));
    }

    #[test]
    fn min_property_values() {
        let r = run(&["x^4*y", "x^7 + x*y^4"]);
        let rows = verify_min_property(&r.state, &[q_int(1), q_int(1)]).unwrap();
        let orders: Vec<(String, u64)> = rows
            .iter()
            .map(|m| (m.divisor.to_string(), m.generic_order))
            .collect();
        assert_eq!(
            orders,
            [("H1".into(), 1), ("E1".into(), 5), ("E2".into(), 6), ("E3".into(), 7)]
        );
        assert!(matches!(
            verify_min_property(&r.state, &[q_int(1), q_int(0)]),
            Err(GenericError::DegenerateLambda(_))
        ));
    }

    #[test]
    fn special_lambda_is_rejected() {
        // λ = (1, 1) gives 2x^2, whose strict transform meets E1 with
        // multiplicity two at t = ∞.
        let r = run(&["x^2 + y^2", "x^2 - y^2"]);
        let report = generic_check(&r, 0).unwrap();
        assert!(report.retries > 0);
        assert!(report.passed());
    }

    #[test]
    fn restrictions() {
        let r = run(&["x^4*y", "x^7 + x*y^4"]);
        let ones = [q_int(1), q_int(1)];
        let rs = restrict_residual_to(&r.state, 2, &ones).unwrap();
        let line = rs.iter().find(|x| x.chart_label == "1.1.1").unwrap();
        assert_eq!(line.poly.render("t"), "t+1");
        let rs = restrict_residual_to(&r.state, 0, &ones).unwrap();
        let inf = rs.iter().find(|x| x.chart_label == "2").unwrap();
        assert_eq!(inf.param, AxisParam::Inverse);
        assert!(matches!(
            restrict_residual_to(&r.state, 0, &[q_int(0), q_int(0)]),
            Err(GenericError::DegenerateLambda(_))
        ));
        let unfinished = ChartState::new(r.state.gens()).unwrap();
        assert!(matches!(
            restrict_residual_to(&unfinished, 0, &ones),
            Err(GenericError::Engine(EngineError::ResidualNotUnit))
        ));
    }

    #[test]
    fn single_generator() {
        let r = run(&["y^2 - x^3"]);
        let report = generic_check(&r, 0).unwrap();
        assert!(report.passed());
        assert!(report.relations.iter().all(|row| row.n == 0));
    }
}
