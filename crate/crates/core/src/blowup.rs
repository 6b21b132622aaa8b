//! Point blow-ups over the origin and the bookkeeping around them.
//!
//! A [`ChartState`] holds every affine chart ever created. The root chart has
//! the original coordinates. Blowing up the origin of a chart with coordinates
//! `(u, v)` creates two children:
//!
//! * chart 1, `(u, v) = (u, u v)`, where the new divisor is `{u = 0}`. This
//!   chart is called the divisor's *line*: it sees every point of the new
//!   divisor except one, and the point `(0, t)` is identified with the
//!   parameter value `t`.
//! * chart 2, `(u, v) = (u v, v)`, where the new divisor is `{v = 0}`. Only
//!   its origin (parameter `t = ∞`) is not already visible on the line.
//!
//! Every point of the fibre over the origin is therefore represented exactly
//! once, either as `(0, t)` on a line chart or as the origin of a root or
//! chart-2 chart. Centers `(0, t)` with `t ≠ 0` are first moved to the origin
//! by a translated chart.
//!
//! In every chart each generator factors as
//! `u^{N_a} v^{N_b} · ∏ branch_k^k · residual_i`, where `N_a`, `N_b` are the
//! numerical data of the exceptional divisors on the coordinate axes, the
//! branches are the strict transforms of the squarefree parts `s_k` of the
//! common factor `h`, and the residuals generate the weak transform of the
//! remaining ideal.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::bipoly::{quadratic_discriminant, Multiplicity};
use crate::arith::rational::fmt_q;
use crate::error::{ArithError, EngineError};
use crate::{QBiPoly, QPoly, Rational};

/// One step of a chart's path from the root.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PathStep {
    Chart1,
    Chart2,
    /// Substitution `v -> v + t`.
    Translate(Rational),
}

/// How an axis coordinate `w` maps to the divisor's line parameter `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AxisParam {
    /// `t = w`.
    Identity,
    /// `t = 1 / w`.
    Inverse,
    /// `t = t0 + w`.
    Shift(Rational),
}

impl AxisParam {
    fn shifted(&self, t: &Rational) -> Self {
        match self {
            AxisParam::Identity => AxisParam::Shift(t.clone()),
            AxisParam::Shift(t0) => AxisParam::Shift(t0 + t),
            // Translations only ever move along a line chart's divisor.
            AxisParam::Inverse => unreachable!("translation along a chart-2 axis"),
        }
    }
}

/// An exceptional divisor lying on a coordinate axis of a chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Axis {
    /// Index into [`ChartState::exceptional`].
    pub divisor: usize,
    pub param: AxisParam,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChartRole {
    Root,
    /// Chart 1 of the blow-up creating `divisor`.
    Line { divisor: usize },
    /// Chart 2 of the blow-up creating `divisor`.
    Infinity { divisor: usize },
    /// Intermediate chart moving the point `(0, t)` of its parent to the origin.
    Translated { t: Rational },
}

#[derive(Clone, Debug)]
pub struct Chart {
    pub id: usize,
    pub parent: Option<usize>,
    pub path: Vec<PathStep>,
    pub role: ChartRole,
    /// Exceptional divisors on `{u = 0}` and `{v = 0}`.
    pub axes: [Option<Axis>; 2],
    /// Pullbacks of the original generators.
    pub gens: Vec<QBiPoly>,
    /// Strict transforms of the squarefree parts of the common factor.
    pub branches: Vec<QBiPoly>,
    /// Generators of the weak transform of the residual ideal.
    pub residuals: Vec<QBiPoly>,
    /// Parameters of the points of this chart's patch that were blown up.
    pub blown: Vec<Rational>,
    pub children: Vec<usize>,
    bad: Result<Vec<Rational>, QPoly>,
}

impl Chart {
    /// Whether this chart owns points of the fibre (see the module docs).
    pub fn is_patch(&self) -> bool {
        !matches!(self.role, ChartRole::Translated { .. })
    }

    /// Whether the patch is the whole line `{u = 0}` or just the origin.
    pub fn is_line(&self) -> bool {
        matches!(self.role, ChartRole::Line { .. })
    }

    pub fn label(&self) -> String {
        path_label(&self.path)
    }

    pub fn is_blown(&self, t: &Rational) -> bool {
        self.blown.contains(t)
    }

    /// Bad points of this chart's patch, blown up or not.
    pub fn bad_locus(&self) -> Result<&[Rational], &QPoly> {
        self.bad.as_deref()
    }
}

/// Human-readable chart path such as `1.2` or `1.t=1/2.2`; the root is `root`.
pub fn path_label(path: &[PathStep]) -> String {
    if path.is_empty() {
        return "root".to_string();
    }
    path.iter()
        .map(|s| match s {
            PathStep::Chart1 => "1".to_string(),
            PathStep::Chart2 => "2".to_string(),
            PathStep::Translate(t) => format!("t={}", fmt_q(t)),
        })
        .collect::<Vec<_>>()
        .join(".")
}

/// A point of the fibre: `(0, t)` on a line chart, or the origin (`t = 0`)
/// of a root or chart-2 chart.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    pub chart: usize,
    pub t: Rational,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DivisorKind {
    Exceptional,
    Strict,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum DivisorId {
    Exceptional(usize),
    Strict(usize),
}

impl fmt::Display for DivisorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DivisorId::Exceptional(i) => write!(f, "E{}", i + 1),
            DivisorId::Strict(i) => write!(f, "H{}", i + 1),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisorRecord {
    pub id: DivisorId,
    pub kind: DivisorKind,
    pub n: u64,
    pub nu: u64,
    /// Number of blow-ups performed before this divisor appeared.
    pub birth_step: usize,
    /// How the divisor is parametrized by its birth charts.
    pub eparam: String,
}

/// A squarefree part `s_k` of the common factor `h = c ∏ s_k^k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StrictFactor {
    pub k: u32,
    pub poly: QBiPoly,
    /// Index of the strict-branch record, present iff `s_k` passes through
    /// the origin.
    pub record: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlowupEvent {
    pub step: usize,
    pub center: Point,
    pub center_label: String,
    /// Exceptional divisors through the center.
    pub incident: Vec<usize>,
    pub divisor: usize,
    pub n: u64,
    pub nu: u64,
    /// Whether the center was a bad point when it was blown up.
    pub was_bad: bool,
    /// Chart 1 and chart 2 of this blow-up.
    pub charts: [usize; 2],
}

#[derive(Clone, Debug)]
pub struct ChartState {
    gens: Vec<QBiPoly>,
    h: QBiPoly,
    factors: Vec<StrictFactor>,
    strict: Vec<DivisorRecord>,
    exceptional: Vec<DivisorRecord>,
    charts: Vec<Chart>,
    events: Vec<BlowupEvent>,
    adjacency: BTreeSet<(usize, usize)>,
}

impl ChartState {
    /// The root chart of the ideal generated by `gens`.
    ///
    /// Zero generators do not change the ideal and are dropped.
    pub fn new(gens: &[QBiPoly]) -> Result<Self, EngineError> {
        if gens.is_empty() {
            return Err(EngineError::NoGenerators);
        }
        if let Some(index) = gens.iter().position(|g| !g.constant_term().is_zero()) {
            return Err(EngineError::SupportMissesOrigin { index });
        }
        let gens: Vec<QBiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        if gens.is_empty() {
            return Err(EngineError::AllZero);
        }
        let h = gens.iter().fold(QBiPoly::zero(), |acc, g| acc.gcd(g));
        let mut factors = Vec::new();
        let mut strict = Vec::new();
        let mut core = QBiPoly::one();
        for (k, s) in h.squarefree_decomposition() {
            core = &core * &s.pow(k);
            let record = if s.constant_term().is_zero() {
                strict.push(DivisorRecord {
                    id: DivisorId::Strict(strict.len()),
                    kind: DivisorKind::Strict,
                    n: k as u64,
                    nu: 1,
                    birth_step: 0,
                    eparam: String::new(),
                });
                Some(strict.len() - 1)
            } else {
                None
            };
            factors.push(StrictFactor {
                k,
                poly: s,
                record,
            });
        }
        let residuals = gens
            .iter()
            .map(|g| g.exact_div(&core))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                EngineError::InvariantViolation("common factor does not divide a generator".into())
            })?;
        let mut root = Chart {
            id: 0,
            parent: None,
            path: Vec::new(),
            role: ChartRole::Root,
            axes: [None, None],
            gens: gens.clone(),
            branches: factors.iter().map(|f| f.poly.clone()).collect(),
            residuals,
            blown: Vec::new(),
            children: Vec::new(),
            bad: Ok(Vec::new()),
        };
        root.bad = compute_bad(&root, &factors);
        Ok(Self {
            gens,
            h,
            factors,
            strict,
            exceptional: Vec::new(),
            charts: vec![root],
            events: Vec::new(),
            adjacency: BTreeSet::new(),
        })
    }

    pub fn gens(&self) -> &[QBiPoly] {
        &self.gens
    }

    /// The gcd of the generators.
    pub fn common_factor(&self) -> &QBiPoly {
        &self.h
    }

    pub fn factors(&self) -> &[StrictFactor] {
        &self.factors
    }

    pub fn strict(&self) -> &[DivisorRecord] {
        &self.strict
    }

    pub fn exceptional(&self) -> &[DivisorRecord] {
        &self.exceptional
    }

    pub fn divisors(&self) -> impl Iterator<Item = &DivisorRecord> {
        self.strict.iter().chain(self.exceptional.iter())
    }

    pub fn charts(&self) -> &[Chart] {
        &self.charts
    }

    pub fn chart(&self, id: usize) -> &Chart {
        &self.charts[id]
    }

    pub fn events(&self) -> &[BlowupEvent] {
        &self.events
    }

    /// Pairs `(a, b)`, `a < b`, of exceptional divisors that meet.
    pub fn adjacency(&self) -> &BTreeSet<(usize, usize)> {
        &self.adjacency
    }

    /// True when every blow-up so far had a bad center.
    pub fn is_minimal(&self) -> bool {
        self.events.iter().all(|e| e.was_bad)
    }

    /// All bad points not yet blown up, ordered by chart path and then
    /// parameter.
    pub fn find_bad_points(&self) -> Result<Vec<Point>, EngineError> {
        let mut out: Vec<(&[PathStep], Point)> = Vec::new();
        for chart in self.charts.iter().filter(|c| c.is_patch()) {
            match &chart.bad {
                Err(p) => {
                    return Err(EngineError::CenterNotRational {
                        chart: chart.label(),
                        minimal_poly: p.render("t"),
                    })
                }
                Ok(ts) => {
                    for t in ts.iter().filter(|t| !chart.is_blown(t)) {
                        out.push((
                            &chart.path,
                            Point {
                                chart: chart.id,
                                t: t.clone(),
                            },
                        ));
                    }
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(b.0).then_with(|| a.1.t.cmp(&b.1.t)));
        Ok(out.into_iter().map(|(_, p)| p).collect())
    }

    pub fn is_complete(&self) -> Result<bool, EngineError> {
        Ok(self.find_bad_points()?.is_empty())
    }

    pub fn point_label(&self, p: &Point) -> String {
        let chart = &self.charts[p.chart];
        if chart.is_line() {
            format!("chart {} at (0,{})", chart.label(), fmt_q(&p.t))
        } else {
            format!("chart {} at (0,0)", chart.label())
        }
    }

    /// Blow up the point `center`, which must be an unblown point of the
    /// fibre. Returns the index of the new exceptional divisor.
    pub fn blow_up(&mut self, center: &Point) -> Result<usize, EngineError> {
        let label = || self.point_label(center);
        let chart = self
            .charts
            .get(center.chart)
            .ok_or_else(|| EngineError::CenterNotOverOrigin(format!("chart #{}", center.chart)))?;
        let valid = chart.is_patch()
            && !chart.is_blown(&center.t)
            && (chart.is_line() || center.t.is_zero());
        if !valid {
            return Err(EngineError::CenterNotOverOrigin(label()));
        }
        let center_label = label();
        let was_bad = matches!(&chart.bad, Ok(ts) if ts.contains(&center.t));
        self.charts[center.chart].blown.push(center.t.clone());
        let c = if center.t.is_zero() {
            center.chart
        } else {
            self.translated_child(center.chart, &center.t)
        };

        let here = &self.charts[c];
        let incident: Vec<usize> = here.axes.iter().flatten().map(|a| a.divisor).collect();
        let branch_mults: Vec<u32> = here
            .branches
            .iter()
            .map(|b| finite(b.mult_at_origin()))
            .collect::<Result<_, _>>()?;
        let residual_min = here
            .residuals
            .iter()
            .map(|r| r.mult_at_origin())
            .min()
            .map(finite)
            .transpose()?
            .unwrap_or(0);
        let n_axes: u64 = incident.iter().map(|&d| self.exceptional[d].n).sum();
        let n_branches: u64 = self
            .factors
            .iter()
            .zip(&branch_mults)
            .map(|(f, &m)| f.k as u64 * m as u64)
            .sum();
        let n = n_axes + n_branches + residual_min as u64;
        let direct = here
            .gens
            .iter()
            .map(|g| g.mult_at_origin())
            .min()
            .map(finite)
            .transpose()?
            .unwrap_or(0) as u64;
        if direct != n {
            return Err(EngineError::InvariantViolation(format!(
                "N of the new divisor: {n} from the factorization, {direct} from the generators"
            )));
        }
        let nu = 2 + incident
            .iter()
            .map(|&d| self.exceptional[d].nu - 1)
            .sum::<u64>();
        let recursion = match incident.as_slice() {
            [] => 2,
            [a] => self.exceptional[*a].nu + 1,
            [a, b] => self.exceptional[*a].nu + self.exceptional[*b].nu,
            _ => 0,
        };
        if recursion != nu {
            return Err(EngineError::InvariantViolation(format!(
                "discrepancy recursion gives {recursion}, adjunction gives {nu}"
            )));
        }

        let e = self.exceptional.len();
        let step = self.events.len();
        let line = self.child(c, PathStep::Chart1, e, &branch_mults, residual_min)?;
        let inf = self.child(c, PathStep::Chart2, e, &branch_mults, residual_min)?;
        self.exceptional.push(DivisorRecord {
            id: DivisorId::Exceptional(e),
            kind: DivisorKind::Exceptional,
            n,
            nu,
            birth_step: step,
            eparam: format!(
                "t on chart {}; t = inf at the origin of chart {}",
                self.charts[line].label(),
                self.charts[inf].label()
            ),
        });
        if let [a, b] = incident.as_slice() {
            self.adjacency.remove(&((*a).min(*b), (*a).max(*b)));
        }
        for &d in &incident {
            self.adjacency.insert((d, e));
        }
        self.events.push(BlowupEvent {
            step,
            center: center.clone(),
            center_label,
            incident,
            divisor: e,
            n,
            nu,
            was_bad,
            charts: [line, inf],
        });
        Ok(e)
    }

    fn translated_child(&mut self, parent: usize, t: &Rational) -> usize {
        let zero = Rational::zero();
        let p = &self.charts[parent];
        let mut path = p.path.clone();
        path.push(PathStep::Translate(t.clone()));
        let tr = |g: &QBiPoly| g.translate(&zero, t);
        let axis0 = p.axes[0].as_ref().map(|a| Axis {
            divisor: a.divisor,
            param: a.param.shifted(t),
        });
        let chart = Chart {
            id: self.charts.len(),
            parent: Some(parent),
            path,
            role: ChartRole::Translated { t: t.clone() },
            axes: [axis0, None],
            gens: p.gens.iter().map(tr).collect(),
            branches: p.branches.iter().map(tr).collect(),
            residuals: p.residuals.iter().map(tr).collect(),
            blown: Vec::new(),
            children: Vec::new(),
            bad: Ok(Vec::new()),
        };
        let id = chart.id;
        self.charts.push(chart);
        self.charts[parent].children.push(id);
        id
    }

    fn child(
        &mut self,
        parent: usize,
        step: PathStep,
        e: usize,
        branch_mults: &[u32],
        residual_min: u32,
    ) -> Result<usize, EngineError> {
        let p = &self.charts[parent];
        let first = step == PathStep::Chart1;
        let pull = |g: &QBiPoly, m: u32| -> Result<QBiPoly, EngineError> {
            let (g, q) = if first {
                let g = g.chart1();
                let q = g.div_x_pow(m);
                (g, q)
            } else {
                let g = g.chart2();
                let q = g.div_y_pow(m);
                (g, q)
            };
            q.ok_or_else(|| {
                EngineError::InvariantViolation(format!(
                    "strict transform: {g} is not divisible by the exceptional equation to the power {m}"
                ))
            })
        };
        let gens = p
            .gens
            .iter()
            .map(|g| if first { g.chart1() } else { g.chart2() })
            .collect();
        let branches = p
            .branches
            .iter()
            .zip(branch_mults)
            .map(|(b, &m)| pull(b, m))
            .collect::<Result<Vec<_>, _>>()?;
        let residuals = p
            .residuals
            .iter()
            .map(|r| pull(r, residual_min))
            .collect::<Result<Vec<_>, _>>()?;
        let new_axis = Axis {
            divisor: e,
            param: if first {
                AxisParam::Identity
            } else {
                AxisParam::Inverse
            },
        };
        let (axes, role) = if first {
            ([Some(new_axis), p.axes[1].clone()], ChartRole::Line { divisor: e })
        } else {
            ([p.axes[0].clone(), Some(new_axis)], ChartRole::Infinity { divisor: e })
        };
        let mut path = p.path.clone();
        path.push(step);
        let mut chart = Chart {
            id: self.charts.len(),
            parent: Some(parent),
            path,
            role,
            axes,
            gens,
            branches,
            residuals,
            blown: Vec::new(),
            children: Vec::new(),
            bad: Ok(Vec::new()),
        };
        chart.bad = compute_bad(&chart, &self.factors);
        let id = chart.id;
        self.charts.push(chart);
        self.charts[parent].children.push(id);
        Ok(id)
    }

    /// Order of vanishing of the pullback of `g` along the divisor `d`.
    ///
    /// For an exceptional divisor the pullback is computed in both of its
    /// birth charts and the two exponents must agree; for a strict branch it
    /// is the number of times the branch's factor divides `g`.
    pub fn divisor_order_of(&self, g: &QBiPoly, d: DivisorId) -> Result<u64, EngineError> {
        if g.is_zero() {
            return Err(EngineError::Arith(ArithError::ZeroPolynomial));
        }
        match d {
            DivisorId::Strict(j) => {
                let s = self
                    .factors
                    .iter()
                    .find(|f| f.record == Some(j))
                    .ok_or_else(|| EngineError::UnknownDivisor(d.to_string()))?;
                let mut order = 0;
                let mut rest = g.clone();
                while let Some(q) = rest.exact_div(&s.poly) {
                    rest = q;
                    order += 1;
                }
                Ok(order)
            }
            DivisorId::Exceptional(e) => {
                let ev = self
                    .events
                    .iter()
                    .find(|ev| ev.divisor == e)
                    .ok_or_else(|| EngineError::UnknownDivisor(d.to_string()))?;
                let [line, inf] = ev.charts;
                let a = self.pullback(g, line).x_order().unwrap_or(0) as u64;
                let b = self.pullback(g, inf).y_order().unwrap_or(0) as u64;
                if a != b {
                    return Err(EngineError::InvariantViolation(format!(
                        "order of {g} along {d}: {a} in chart {}, {b} in chart {}",
                        self.charts[line].label(),
                        self.charts[inf].label()
                    )));
                }
                Ok(a)
            }
        }
    }

    /// Pullback of a polynomial in the root coordinates to a chart.
    pub fn pullback(&self, g: &QBiPoly, chart: usize) -> QBiPoly {
        let zero = Rational::zero();
        self.charts[chart]
            .path
            .iter()
            .fold(g.clone(), |acc, step| match step {
                PathStep::Chart1 => acc.chart1(),
                PathStep::Chart2 => acc.chart2(),
                PathStep::Translate(t) => acc.translate(&zero, t),
            })
    }

    /// Check the factorization `gen = u^{N_a} v^{N_b} ∏ branch_k^k residual`
    /// in every chart, and that each chart's generators are the pullbacks of
    /// the original ones.
    pub fn check_factorization(&self) -> Result<(), EngineError> {
        for chart in &self.charts {
            let (na, nb) = (
                chart.axes[0].as_ref().map_or(0, |a| self.exceptional[a.divisor].n),
                chart.axes[1].as_ref().map_or(0, |a| self.exceptional[a.divisor].n),
            );
            let mut monomial = QBiPoly::monomial(Rational::one(), na as u32, nb as u32);
            for (f, b) in self.factors.iter().zip(&chart.branches) {
                monomial = &monomial * &b.pow(f.k);
            }
            for (i, (g, r)) in chart.gens.iter().zip(&chart.residuals).enumerate() {
                if &(&monomial * r) != g {
                    return Err(EngineError::InvariantViolation(format!(
                        "generator {i} does not factor in chart {}",
                        chart.label()
                    )));
                }
                if self.pullback(&self.gens[i], chart.id) != *g {
                    return Err(EngineError::InvariantViolation(format!(
                        "generator {i} in chart {} is not the pullback",
                        chart.label()
                    )));
                }
            }
        }
        Ok(())
    }
}

fn finite(m: Multiplicity) -> Result<u32, EngineError> {
    match m {
        Multiplicity::Finite(m) => Ok(m),
        Multiplicity::Infinite => Err(EngineError::InvariantViolation(
            "zero polynomial in a chart".into(),
        )),
    }
}

/// Whether the origin of a chart is a bad point: the residual ideal is not
/// the unit ideal there, or the exceptional axes together with the branches
/// fail to be a normal crossing (more than two smooth transversal branches).
pub fn is_bad_at_origin(axes: &[Option<Axis>; 2], branches: &[QBiPoly], residuals: &[QBiPoly]) -> bool {
    if residuals.iter().all(|r| r.constant_term().is_zero()) {
        return true;
    }
    let mut mult = 0u32;
    let mut cone = QBiPoly::one();
    if axes[0].is_some() {
        mult += 1;
        cone = &cone * &QBiPoly::x();
    }
    if axes[1].is_some() {
        mult += 1;
        cone = &cone * &QBiPoly::y();
    }
    for b in branches {
        if let Multiplicity::Finite(m) = b.mult_at_origin() {
            if m > 0 {
                mult += m;
                cone = &cone * &b.leading_form();
            }
        }
    }
    match mult {
        0 | 1 => false,
        2 => quadratic_discriminant(&cone).is_zero(),
        _ => true,
    }
}

/// Bad parameters on a line chart's divisor `{u = 0}`: common zeros of the
/// residuals, and multiple roots of the restriction of
/// `v^{[axis]} · ∏ branches` (a singular or tangent branch, two branches
/// meeting, or a branch through the double point `t = 0`).
fn line_bad_locus(chart: &Chart) -> Result<Vec<Rational>, QPoly> {
    let common = chart
        .residuals
        .iter()
        .fold(QPoly::zero(), |acc, r| acc.gcd(&r.at_x_zero()));
    let mut curve = if chart.axes[1].is_some() {
        QPoly::var()
    } else {
        QPoly::one()
    };
    for b in &chart.branches {
        curve = &curve * &b.at_x_zero();
    }
    let repeated = curve.gcd(&curve.derivative());
    let locus = &common * &repeated;
    if locus.is_constant() {
        return Ok(Vec::new());
    }
    match locus.rational_roots() {
        Ok((roots, rest)) if rest.is_constant() => Ok(roots),
        Ok((_, rest)) => Err(rest),
        Err(_) => Err(locus.squarefree_part()),
    }
}

fn compute_bad(chart: &Chart, _factors: &[StrictFactor]) -> Result<Vec<Rational>, QPoly> {
    match chart.role {
        ChartRole::Translated { .. } => Ok(Vec::new()),
        ChartRole::Line { .. } => line_bad_locus(chart),
        ChartRole::Root | ChartRole::Infinity { .. } => {
            if is_bad_at_origin(&chart.axes, &chart.branches, &chart.residuals) {
                Ok(vec![Rational::zero()])
            } else {
                Ok(Vec::new())
            }
        }
    }
}
