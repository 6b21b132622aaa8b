//! The decorated intersection diagram of a principalization and the
//! structural checks that every minimal one satisfies.
//!
//! Vertices are the exceptional curves `E_i` and the branches `S_j` of the
//! common factor's strict transform that pass over the origin, each decorated
//! with `(N, ν)`. Edges are intersection points. When no blow-up is needed the
//! diagram is the *origin case*: just the branches through the origin.
//!
//! For an exceptional vertex `E(N, ν)` and a neighbour `E_i(N_i, ν_i)` the
//! quantity `α_i = ν_i − (ν/N) N_i` drives everything downstream; the
//! validators here check the bounds and orderings it obeys.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::blowup::{ChartRole, ChartState, DivisorKind};
use crate::error::{DiagramError, EngineError};
use crate::{QPoly, Rational};

/// `E1, E2, …` for exceptional curves, `S1, S2, …` for strict branches.
/// Exceptional vertices sort first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId {
    pub kind: DivisorKind,
    /// Zero-based; displayed one-based.
    pub index: usize,
}

impl VertexId {
    pub fn exceptional(index: usize) -> Self {
        Self {
            kind: DivisorKind::Exceptional,
            index,
        }
    }

    pub fn strict(index: usize) -> Self {
        Self {
            kind: DivisorKind::Strict,
            index,
        }
    }

    pub fn is_exceptional(&self) -> bool {
        self.kind == DivisorKind::Exceptional
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.kind {
            DivisorKind::Exceptional => 'E',
            DivisorKind::Strict => 'S',
        };
        write!(f, "{letter}{}", self.index + 1)
    }
}

impl FromStr for VertexId {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || DiagramError::Malformed(format!("bad vertex id {s:?}"));
        let (kind, rest) = match s.split_at_checked(1).ok_or_else(bad)? {
            ("E", rest) => (DivisorKind::Exceptional, rest),
            ("S", rest) => (DivisorKind::Strict, rest),
            _ => return Err(bad()),
        };
        let n: usize = rest.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        Ok(Self { kind, index: n - 1 })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Vertex {
    pub id: VertexId,
    pub n: u64,
    pub nu: u64,
}

impl Vertex {
    pub fn kind(&self) -> DivisorKind {
        self.id.kind
    }

    /// `ν / N`; the candidate pole is its negative.
    pub fn ratio(&self) -> Rational {
        Rational::new((self.nu as i64).into(), (self.n as i64).into())
    }

    pub fn candidate(&self) -> Rational {
        -self.ratio()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntersectionDiagram {
    vertices: Vec<Vertex>,
    edges: Vec<(VertexId, VertexId)>,
    origin_case: Option<Vec<VertexId>>,
    minimal: bool,
}

impl IntersectionDiagram {
    /// Build a diagram from parts, sorting vertices and edges canonically.
    pub fn new(
        mut vertices: Vec<Vertex>,
        edges: Vec<(VertexId, VertexId)>,
        origin_case: Option<Vec<VertexId>>,
        minimal: bool,
    ) -> Result<Self, DiagramError> {
        vertices.sort_by_key(|v| v.id);
        for w in vertices.windows(2) {
            if w[0].id == w[1].id {
                return Err(DiagramError::Malformed(format!("duplicate vertex {}", w[0].id)));
            }
        }
        for v in &vertices {
            if v.n == 0 || v.nu == 0 {
                return Err(DiagramError::Malformed(format!(
                    "{} has N = {}, nu = {}",
                    v.id, v.n, v.nu
                )));
            }
        }
        let ids: BTreeSet<VertexId> = vertices.iter().map(|v| v.id).collect();
        let mut canon = BTreeSet::new();
        for (a, b) in edges {
            for x in [a, b] {
                if !ids.contains(&x) {
                    return Err(DiagramError::UnknownVertex(x.to_string()));
                }
            }
            if a == b {
                return Err(DiagramError::Malformed(format!("loop at {a}")));
            }
            if !canon.insert((a.min(b), a.max(b))) {
                return Err(DiagramError::Malformed(format!("repeated edge {a} -- {b}")));
            }
        }
        let origin_case = match origin_case {
            Some(mut bs) => {
                bs.sort();
                for b in &bs {
                    if !ids.contains(b) {
                        return Err(DiagramError::UnknownVertex(b.to_string()));
                    }
                }
                Some(bs)
            }
            None => None,
        };
        Ok(Self {
            vertices,
            edges: canon.into_iter().collect(),
            origin_case,
            minimal,
        })
    }

    /// Read the diagram off a completed chart state.
    pub fn from_state(state: &ChartState) -> Result<Self, EngineError> {
        let malformed = |e: DiagramError| EngineError::InvariantViolation(e.to_string());
        let mut strict: Vec<Vertex> = Vec::new();
        let mut edges = Vec::new();
        let push_strict = |n: u64, strict: &mut Vec<Vertex>| {
            let id = VertexId::strict(strict.len());
            strict.push(Vertex { id, n, nu: 1 });
            id
        };

        if state.events().is_empty() {
            let root = state.chart(0);
            for (f, b) in state.factors().iter().zip(&root.branches) {
                if f.record.is_none() {
                    continue;
                }
                match b.mult_at_origin() {
                    crate::Multiplicity::Finite(1) => {
                        push_strict(f.k as u64, &mut strict);
                    }
                    crate::Multiplicity::Finite(2) => {
                        push_strict(f.k as u64, &mut strict);
                        push_strict(f.k as u64, &mut strict);
                    }
                    m => {
                        return Err(EngineError::InvariantViolation(format!(
                            "branch of multiplicity {m} at an unblown origin"
                        )))
                    }
                }
            }
            if strict.len() == 2 {
                edges.push((strict[0].id, strict[1].id));
            } else if strict.len() > 2 {
                return Err(EngineError::InvariantViolation(
                    "more than two branches through an unblown origin".into(),
                ));
            }
            let ids = strict.iter().map(|v| v.id).collect();
            return Self::new(strict, edges, Some(ids), state.is_minimal()).map_err(malformed);
        }

        let mut charts: Vec<_> = state.charts().iter().filter(|c| c.is_patch()).collect();
        charts.sort_by(|a, b| a.path.cmp(&b.path));
        for chart in charts {
            match chart.role {
                ChartRole::Root | ChartRole::Translated { .. } => {}
                ChartRole::Line { divisor } => {
                    for (f, b) in state.factors().iter().zip(&chart.branches) {
                        let on_line: QPoly = b.at_x_zero();
                        if on_line.is_constant() {
                            continue;
                        }
                        let blown_on = chart
                            .blown
                            .iter()
                            .filter(|t| on_line.eval(t).is_zero())
                            .count();
                        let count = on_line.distinct_root_count()? - blown_on;
                        for _ in 0..count {
                            let id = push_strict(f.k as u64, &mut strict);
                            edges.push((VertexId::exceptional(divisor), id));
                        }
                    }
                }
                ChartRole::Infinity { divisor } => {
                    if chart.is_blown(&Rational::zero()) {
                        continue;
                    }
                    for (f, b) in state.factors().iter().zip(&chart.branches) {
                        if b.constant_term().is_zero() {
                            let id = push_strict(f.k as u64, &mut strict);
                            edges.push((VertexId::exceptional(divisor), id));
                        }
                    }
                }
            }
        }
        let mut vertices: Vec<Vertex> = state
            .exceptional()
            .iter()
            .enumerate()
            .map(|(i, d)| Vertex {
                id: VertexId::exceptional(i),
                n: d.n,
                nu: d.nu,
            })
            .collect();
        vertices.extend(strict);
        edges.extend(
            state
                .adjacency()
                .iter()
                .map(|&(a, b)| (VertexId::exceptional(a), VertexId::exceptional(b))),
        );
        Self::new(vertices, edges, None, state.is_minimal()).map_err(malformed)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// The branches through the origin when no blow-up was needed.
    pub fn origin_case(&self) -> Option<&[VertexId]> {
        self.origin_case.as_deref()
    }

    /// Whether the diagram comes from a minimal principalization. Diagrams
    /// loaded from JSON are taken to be minimal.
    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn exceptional(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.iter().filter(|v| v.id.is_exceptional())
    }

    pub fn strict(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.iter().filter(|v| !v.id.is_exceptional())
    }

    pub fn vertex(&self, id: VertexId) -> Result<&Vertex, DiagramError> {
        self.vertices
            .binary_search_by_key(&id, |v| v.id)
            .map(|i| &self.vertices[i])
            .map_err(|_| DiagramError::UnknownVertex(id.to_string()))
    }

    /// Neighbours sorted by id.
    pub fn neighbors(&self, id: VertexId) -> Vec<&Vertex> {
        let mut out: Vec<&Vertex> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == id {
                    Some(b)
                } else if b == id {
                    Some(a)
                } else {
                    None
                }
            })
            .filter_map(|w| self.vertex(w).ok())
            .collect();
        out.sort_by_key(|v| v.id);
        out
    }

    pub fn degree(&self, id: VertexId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == id || b == id).count()
    }

    /// `α_i = ν_i − (ν/N) N_i` for every neighbour of the exceptional vertex
    /// `e`, sorted by neighbour id.
    pub fn alphas(&self, e: VertexId) -> Result<Vec<(VertexId, Rational)>, DiagramError> {
        let v = self.vertex(e)?;
        if !e.is_exceptional() {
            return Err(DiagramError::NotExceptional(e.to_string()));
        }
        Ok(self
            .neighbors(e)
            .into_iter()
            .map(|w| (w.id, alpha(v, w)))
            .collect())
    }

    /// Same as [`alphas`](Self::alphas), but for any vertex.
    pub(crate) fn alphas_any(&self, id: VertexId) -> Result<Vec<(VertexId, Rational)>, DiagramError> {
        let v = self.vertex(id)?;
        Ok(self
            .neighbors(id)
            .into_iter()
            .map(|w| (w.id, alpha(v, w)))
            .collect())
    }

    /// Distinct candidate poles `−ν/N`, ascending.
    pub fn candidates(&self) -> Vec<Rational> {
        let set: BTreeSet<Rational> = self.vertices.iter().map(|v| v.candidate()).collect();
        set.into_iter().collect()
    }

    /// Deterministic JSON, sorted by id.
    pub fn to_json(&self) -> String {
        let doc = DiagramJson {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexJson {
                    id: v.id.to_string(),
                    kind: v.kind(),
                    n: v.n,
                    nu: v.nu,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
            origin_case: self.origin_case.as_ref().map(|bs| OriginJson {
                branches: bs.iter().map(|b| b.to_string()).collect(),
            }),
        };
        serde_json::to_string_pretty(&doc).expect("diagram serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        let doc: DiagramJson =
            serde_json::from_str(text).map_err(|e| DiagramError::Json(e.to_string()))?;
        let mut vertices = Vec::new();
        for v in doc.vertices {
            let id: VertexId = v.id.parse()?;
            if id.kind != v.kind {
                return Err(DiagramError::Malformed(format!(
                    "{} declared with kind {:?}",
                    v.id, v.kind
                )));
            }
            vertices.push(Vertex {
                id,
                n: v.n,
                nu: v.nu,
            });
        }
        let edges = doc
            .edges
            .iter()
            .map(|[a, b]| Ok((a.parse()?, b.parse()?)))
            .collect::<Result<Vec<_>, DiagramError>>()?;
        let origin_case = doc
            .origin_case
            .map(|o| o.branches.iter().map(|b| b.parse()).collect::<Result<Vec<_>, _>>())
            .transpose()?;
        Self::new(vertices, edges, origin_case, true)
    }

    /// Graphviz rendering; strict branches are boxes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph principalization {\n");
        for v in &self.vertices {
            let shape = if v.id.is_exceptional() { "ellipse" } else { "box" };
            out.push_str(&format!(
                "  {} [label=\"{} ({},{})\", shape={}];\n",
                v.id, v.id, v.n, v.nu, shape
            ));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn alpha(v: &Vertex, w: &Vertex) -> Rational {
    Rational::from_integer((w.nu as i64).into()) - v.ratio() * Rational::from_integer((w.n as i64).into())
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: String,
    kind: DivisorKind,
    #[serde(rename = "N")]
    n: u64,
    nu: u64,
}

#[derive(Serialize, Deserialize)]
struct OriginJson {
    branches: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    vertices: Vec<VertexJson>,
    edges: Vec<[String; 2]>,
    origin_case: Option<OriginJson>,
}

/// Outcome of one structural check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub check: &'static str,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: pass", self.check)
        } else {
            write!(f, "{}: FAIL ({})", self.check, self.failures.join("; "))
        }
    }
}

fn exceptional_alphas(d: &IntersectionDiagram) -> Vec<(&Vertex, Vec<(VertexId, Rational)>)> {
    d.exceptional()
        .map(|v| (v, d.alphas(v.id).expect("exceptional vertex")))
        .collect()
}

/// Every `α` lies in `[−1, 1)`, and `α = −1` only on a vertex of degree one.
pub fn validate_alpha_bounds(d: &IntersectionDiagram) -> ValidationReport {
    let minus_one = -Rational::one();
    let mut failures = Vec::new();
    for (v, row) in exceptional_alphas(d) {
        let m = row.len();
        for (w, a) in &row {
            if *a < minus_one || *a >= Rational::one() {
                failures.push(format!("alpha({} -> {w}) = {a} outside [-1,1)", v.id));
            } else if *a == minus_one && m != 1 {
                failures.push(format!("alpha({} -> {w}) = -1 with m = {m}", v.id));
            }
        }
    }
    ValidationReport {
        check: "alpha bounds",
        failures,
    }
}

/// For every exceptional vertex: at most one negative `α`; with three or
/// more neighbours at most one non-positive `α`; with exactly two
/// neighbours, a neighbour of smaller ratio forces the other to have a
/// larger one.
pub fn validate_neighbour_signs(d: &IntersectionDiagram) -> ValidationReport {
    let mut failures = Vec::new();
    for (v, row) in exceptional_alphas(d) {
        let negative = row.iter().filter(|(_, a)| *a < Rational::zero()).count();
        if negative > 1 {
            failures.push(format!("{} has {negative} negative alphas", v.id));
        }
        if row.len() >= 3 {
            let nonpos = row.iter().filter(|(_, a)| *a <= Rational::zero()).count();
            if nonpos > 1 {
                failures.push(format!(
                    "{} has {} neighbours and {nonpos} non-positive alphas",
                    v.id,
                    row.len()
                ));
            }
        }
        if row.len() == 2 {
            let r = v.ratio();
            let ratios: Vec<Rational> = row
                .iter()
                .map(|(w, _)| d.vertex(*w).expect("neighbour").ratio())
                .collect();
            for (i, j) in [(0, 1), (1, 0)] {
                if ratios[i] < r && r >= ratios[j] {
                    failures.push(format!(
                        "{}: ratio {r} between neighbours {} and {} is not monotone",
                        v.id, ratios[i], ratios[j]
                    ));
                }
            }
        }
    }
    ValidationReport {
        check: "neighbour alpha signs",
        failures,
    }
}

/// The vertices of minimal `ν/N` form a connected set, and `ν/N` strictly
/// increases along every path leaving it.
pub fn validate_ordered_tree(d: &IntersectionDiagram) -> ValidationReport {
    let mut failures = Vec::new();
    let Some(min) = d.vertices.iter().map(|v| v.ratio()).min() else {
        return ValidationReport {
            check: "ordered tree",
            failures,
        };
    };
    let adjacency = adjacency_lists(d);
    let core: BTreeSet<VertexId> = d
        .vertices
        .iter()
        .filter(|v| v.ratio() == min)
        .map(|v| v.id)
        .collect();
    let start = *core.iter().next().expect("nonempty");
    let reached = bfs(&adjacency, &[start], |w| core.contains(&w));
    if reached.len() != core.len() {
        failures.push(format!(
            "vertices of minimal ratio {min} are not connected"
        ));
    }
    // Walk outward from the core: each step must strictly increase the ratio.
    let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut seen: BTreeSet<VertexId> = core.clone();
    let mut queue: VecDeque<VertexId> = core.iter().copied().collect();
    while let Some(a) = queue.pop_front() {
        for &b in adjacency.get(&a).into_iter().flatten() {
            if seen.insert(b) {
                parent.insert(b, a);
                queue.push_back(b);
            }
        }
    }
    for (b, a) in &parent {
        let (ra, rb) = (
            d.vertex(*a).expect("vertex").ratio(),
            d.vertex(*b).expect("vertex").ratio(),
        );
        if rb <= ra {
            failures.push(format!("ratio does not increase from {a} ({ra}) to {b} ({rb})"));
        }
    }
    ValidationReport {
        check: "ordered tree",
        failures,
    }
}

/// `ν ≤ N + 1` for every exceptional vertex.
pub fn validate_nu_bound(d: &IntersectionDiagram) -> ValidationReport {
    let failures = d
        .exceptional()
        .filter(|v| v.nu > v.n + 1)
        .map(|v| format!("{} has nu = {} > N + 1 = {}", v.id, v.nu, v.n + 1))
        .collect();
    ValidationReport {
        check: "nu bound",
        failures,
    }
}

/// The exceptional vertices form a tree, and every strict branch meets
/// exactly one exceptional curve (outside the origin case).
pub fn validate_tree_shape(d: &IntersectionDiagram) -> ValidationReport {
    let mut failures = Vec::new();
    let exceptional: Vec<VertexId> = d.exceptional().map(|v| v.id).collect();
    if d.origin_case.is_some() {
        if !exceptional.is_empty() {
            failures.push("origin case with exceptional vertices".to_string());
        }
    } else {
        let inner = d
            .edges
            .iter()
            .filter(|(a, b)| a.is_exceptional() && b.is_exceptional())
            .count();
        if exceptional.is_empty() {
            failures.push("no exceptional vertex".to_string());
        } else {
            if inner + 1 != exceptional.len() {
                failures.push(format!(
                    "{} exceptional vertices but {inner} edges among them",
                    exceptional.len()
                ));
            }
            let adjacency = adjacency_lists(d);
            let reached = bfs(&adjacency, &exceptional[..1], |w| w.is_exceptional());
            if reached.len() != exceptional.len() {
                failures.push("exceptional curves are not connected".to_string());
            }
        }
        for s in d.strict() {
            let nbrs = d.neighbors(s.id);
            if nbrs.len() != 1 || !nbrs[0].id.is_exceptional() {
                failures.push(format!(
                    "{} should meet exactly one exceptional curve, meets {}",
                    s.id,
                    nbrs.len()
                ));
            }
        }
    }
    ValidationReport {
        check: "tree shape",
        failures,
    }
}

/// All structural checks, in a fixed order.
pub fn validate_all(d: &IntersectionDiagram) -> Vec<ValidationReport> {
    vec![
        validate_alpha_bounds(d),
        validate_neighbour_signs(d),
        validate_ordered_tree(d),
        validate_nu_bound(d),
        validate_tree_shape(d),
    ]
}

fn adjacency_lists(d: &IntersectionDiagram) -> BTreeMap<VertexId, Vec<VertexId>> {
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &(a, b) in &d.edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    adj
}

fn bfs(
    adj: &BTreeMap<VertexId, Vec<VertexId>>,
    start: &[VertexId],
    allowed: impl Fn(VertexId) -> bool,
) -> BTreeSet<VertexId> {
    let mut seen: BTreeSet<VertexId> = start.iter().copied().collect();
    let mut queue: VecDeque<VertexId> = start.iter().copied().collect();
    while let Some(a) = queue.pop_front() {
        for &b in adj.get(&a).into_iter().flatten() {
            if allowed(b) && seen.insert(b) {
                queue.push_back(b);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse::parse_poly;
    use crate::arith::rational::q_frac;
    use crate::principalize::{principalize, DEFAULT_MAX_STEPS};

    pub(crate) fn golden() -> IntersectionDiagram {
        let gens: Vec<_> = ["x^4*y", "x^7 + x*y^4"]
            .iter()
            .map(|s| parse_poly(s, ("x", "y")).unwrap())
            .collect();
        principalize(&gens, DEFAULT_MAX_STEPS).unwrap().diagram
    }

    fn e(i: usize) -> VertexId {
        VertexId::exceptional(i - 1)
    }

    fn chain(data: &[(u64, u64)]) -> IntersectionDiagram {
        let vertices = data
            .iter()
            .enumerate()
            .map(|(i, &(n, nu))| Vertex {
                id: VertexId::exceptional(i),
                n,
                nu,
            })
            .collect();
        let edges = (1..data.len())
            .map(|i| (VertexId::exceptional(i - 1), VertexId::exceptional(i)))
            .collect();
        IntersectionDiagram::new(vertices, edges, None, true).unwrap()
    }

    #[test]
    fn golden_shape() {
        let d = golden();
        let summary: Vec<String> = d
            .vertices()
            .iter()
            .map(|v| format!("{} ({},{})", v.id, v.n, v.nu))
            .collect();
        assert_eq!(summary, ["E1 (5,2)", "E2 (6,3)", "E3 (7,4)", "S1 (1,1)"]);
        let edges: Vec<String> = d.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        assert_eq!(edges, ["E1-E2", "E1-S1", "E2-E3"]);
        for r in validate_all(&d) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn golden_alphas() {
        let d = golden();
        let row: Vec<Rational> = d.alphas(e(2)).unwrap().into_iter().map(|x| x.1).collect();
        assert_eq!(row, vec![q_frac(-1, 2), q_frac(1, 2)]);
        let row: Vec<Rational> = d.alphas(e(3)).unwrap().into_iter().map(|x| x.1).collect();
        assert_eq!(row, vec![q_frac(-3, 7)]);
        let row: Vec<Rational> = d.alphas(e(1)).unwrap().into_iter().map(|x| x.1).collect();
        assert_eq!(row, vec![q_frac(3, 5), q_frac(3, 5)]);
        assert!(matches!(
            d.alphas(VertexId::strict(0)),
            Err(DiagramError::NotExceptional(_))
        ));
    }

    #[test]
    fn negative_controls() {
        // E(2,5) next to E'(1,1): alpha = 1 - 5/2.
        assert!(!validate_alpha_bounds(&chain(&[(2, 5), (1, 1)])).passed());
        assert!(!validate_nu_bound(&chain(&[(2, 4)])).passed());
        // Ratios 1/2, 1/3, 1/2, 1/3 along a path.
        assert!(!validate_ordered_tree(&chain(&[(2, 1), (3, 1), (2, 1), (3, 1)])).passed());
        // Middle vertex of ratio 1 between two of ratio 1/2.
        assert!(!validate_neighbour_signs(&chain(&[(2, 1), (2, 2), (2, 1)])).passed());
        assert!(validate_ordered_tree(&chain(&[(1, 2)])).passed());
        assert!(validate_alpha_bounds(&chain(&[(1, 2)])).passed());
    }

    #[test]
    fn json_round_trip_and_dot() {
        let d = golden();
        let text = d.to_json();
        assert!(text.contains("\"N\": 5"));
        assert_eq!(IntersectionDiagram::from_json(&text).unwrap(), d);
        let dot = d.to_dot();
        assert!(dot.contains("E1 [label=\"E1 (5,2)\", shape=ellipse];"));
        assert!(dot.contains("S1 [label=\"S1 (1,1)\", shape=box];"));
        assert_eq!(dot.lines().count(), 2 + 4 + 3);
    }

    #[test]
    fn origin_case_json() {
        let gens = vec![parse_poly("x*y", ("x", "y")).unwrap()];
        let d = principalize(&gens, DEFAULT_MAX_STEPS).unwrap().diagram;
        assert_eq!(d.origin_case().unwrap().len(), 2);
        assert!(d.to_json().contains("\"branches\""));
        assert_eq!(IntersectionDiagram::from_json(&d.to_json()).unwrap(), d);
        for r in validate_all(&d) {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn malformed_json_is_rejected() {
        assert!(matches!(
            IntersectionDiagram::from_json("{"),
            Err(DiagramError::Json(_))
        ));
        let text = r#"{"vertices":[{"id":"E1","kind":"exceptional","N":1,"nu":2}],"edges":[["E1","E2"]],"origin_case":null}"#;
        assert!(matches!(
            IntersectionDiagram::from_json(text),
            Err(DiagramError::UnknownVertex(_))
        ));
    }
}
