//! Driving blow-ups until the ideal is principal with normal crossings.
//!
//! A point of the fibre is *bad* when the residual ideal vanishes there or
//! when the exceptional curves and the branches of the common factor fail to
//! form a simple normal crossings configuration at it. Blowing up only bad
//! points, in a fixed order, gives the minimal principalization; the order
//! does not affect the resulting diagram, which the tests check by running
//! the reverse order too.

use crate::arith::rational::fmt_q;
use crate::blowup::{BlowupEvent, ChartState, Point};
use crate::diagram::IntersectionDiagram;
use crate::error::EngineError;
use crate::QBiPoly;

/// Default blow-up budget.
pub const DEFAULT_MAX_STEPS: usize = 512;

/// Which bad point to blow up next.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum CenterOrder {
    /// The first point in (chart path, parameter) order.
    #[default]
    First,
    /// The last one; used to check that the result does not depend on order.
    Last,
}

#[derive(Clone, Debug)]
pub struct PrincipalizationResult {
    pub state: ChartState,
    pub diagram: IntersectionDiagram,
    pub log: Vec<BlowupEvent>,
    pub step_count: usize,
}

/// Bad points not yet blown up, in deterministic order.
pub fn find_bad_points(state: &ChartState) -> Result<Vec<Point>, EngineError> {
    state.find_bad_points()
}

/// Minimal principalization of the ideal generated by `gens`.
pub fn principalize(gens: &[QBiPoly], max_steps: usize) -> Result<PrincipalizationResult, EngineError> {
    principalize_ordered(gens, max_steps, CenterOrder::First)
}

pub fn principalize_ordered(
    gens: &[QBiPoly],
    max_steps: usize,
    order: CenterOrder,
) -> Result<PrincipalizationResult, EngineError> {
    let mut state = ChartState::new(gens)?;
    run_to_completion(&mut state, max_steps, order)?;
    finish(state)
}

/// Blow up bad points of `state` until there are none left.
pub fn run_to_completion(
    state: &mut ChartState,
    max_steps: usize,
    order: CenterOrder,
) -> Result<(), EngineError> {
    loop {
        let bad = state.find_bad_points()?;
        let next = match order {
            CenterOrder::First => bad.first(),
            CenterOrder::Last => bad.last(),
        };
        let Some(center) = next.cloned() else {
            return Ok(());
        };
        if state.events().len() >= max_steps {
            return Err(EngineError::StepBudgetExceeded(max_steps));
        }
        state.blow_up(&center)?;
    }
}

/// Package a completed state together with its diagram.
pub fn finish(state: ChartState) -> Result<PrincipalizationResult, EngineError> {
    if !state.is_complete()? {
        return Err(EngineError::InvariantViolation(
            "principalization is not complete".into(),
        ));
    }
    let diagram = IntersectionDiagram::from_state(&state)?;
    let log = state.events().to_vec();
    Ok(PrincipalizationResult {
        step_count: log.len(),
        state,
        diagram,
        log,
    })
}

/// Outcome of replaying a blow-up log from the original generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalityReport {
    pub steps: usize,
    /// Steps (0-based) whose center was not bad when it was blown up.
    pub violations: Vec<usize>,
    /// Set when the log could not be replayed at all.
    pub replay_error: Option<String>,
}

impl MinimalityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.replay_error.is_none()
    }

    pub fn describe(&self) -> String {
        if let Some(e) = &self.replay_error {
            return format!("replay failed: {e}");
        }
        if self.violations.is_empty() {
            format!("minimal: all {} centers were bad", self.steps)
        } else {
            let steps: Vec<String> = self.violations.iter().map(|s| (s + 1).to_string()).collect();
            format!("not minimal: good center blown up at step {}", steps.join(", "))
        }
    }
}

/// Replay the log of `state` from scratch and confirm that every center was
/// a bad point at the moment it was blown up.
pub fn verify_minimality(state: &ChartState) -> MinimalityReport {
    let steps = state.events().len();
    let mut replay = match ChartState::new(state.gens()) {
        Ok(s) => s,
        Err(e) => {
            return MinimalityReport {
                steps,
                violations: Vec::new(),
                replay_error: Some(e.to_string()),
            }
        }
    };
    let mut violations = Vec::new();
    for ev in state.events() {
        let bad = match replay.find_bad_points() {
            Ok(b) => b,
            Err(e) => {
                return MinimalityReport {
                    steps,
                    violations,
                    replay_error: Some(e.to_string()),
                }
            }
        };
        if !bad.contains(&ev.center) {
            violations.push(ev.step);
        }
        if let Err(e) = replay.blow_up(&ev.center) {
            return MinimalityReport {
                steps,
                violations,
                replay_error: Some(format!(
                    "step {} at t = {}: {e}",
                    ev.step + 1,
                    fmt_q(&ev.center.t)
                )),
            };
        }
    }
    MinimalityReport {
        steps,
        violations,
        replay_error: None,
    }
}
