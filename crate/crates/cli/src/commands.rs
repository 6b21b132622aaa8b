//! The individual subcommands. Each one turns a single input into a report;
//! batching and exit codes are handled by the caller.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use topzeta::arith::rational::{fmt_q, parse_rational};
use topzeta::criterion::{classify_all, cross_check, VerdictJson};
use topzeta::diagram::{validate_all, ValidationReport};
use topzeta::family;
use topzeta::generic::generic_check;
use topzeta::principalize::{principalize, verify_minimality};
use topzeta::zeta::pole_report;
use topzeta::{parse_poly, IntersectionDiagram, PrincipalizationResult, QBiPoly};

use crate::error::CliError;

/// What a command works on: generators to principalize, or a diagram
/// stored by an earlier run.
pub enum Source {
    Generators(Vec<String>),
    Diagram(String),
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub json: bool,
    pub dot: bool,
    pub check: bool,
    pub seed: u64,
    pub max_blowups: usize,
}

/// Text to print, plus the reason for a nonzero exit when some check failed.
pub struct Report {
    pub text: String,
    pub failure: Option<CliError>,
}

impl Report {
    fn ok(text: String) -> Self {
        Self {
            text,
            failure: None,
        }
    }
}

/// Non-empty lines of a generator file; `#` starts a comment.
pub fn read_generator_file(path: &Path) -> Result<Vec<String>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

pub fn read_diagram_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn parse_generators(texts: &[String]) -> Result<Vec<QBiPoly>, CliError> {
    if texts.is_empty() {
        return Err(CliError::Input("no generators given".into()));
    }
    texts
        .iter()
        .map(|t| parse_poly(t, ("x", "y")).map_err(CliError::from))
        .collect()
}

fn run(texts: &[String], opts: &Options) -> Result<PrincipalizationResult, CliError> {
    Ok(principalize(&parse_generators(texts)?, opts.max_blowups)?)
}

/// The principalization (if any) and the diagram a command should look at.
fn resolve(
    source: &Source,
    opts: &Options,
) -> Result<(Option<PrincipalizationResult>, IntersectionDiagram), CliError> {
    match source {
        Source::Generators(texts) => {
            let r = run(texts, opts)?;
            let d = r.diagram.clone();
            Ok((Some(r), d))
        }
        Source::Diagram(text) => Ok((None, IntersectionDiagram::from_json(text)?)),
    }
}

fn diagram_value(d: &IntersectionDiagram) -> Value {
    serde_json::from_str(&d.to_json()).expect("diagram JSON is valid")
}

fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// Structural validators, criterion-versus-zeta agreement and, when a run is
/// available, minimality of its log.
fn check_lines(
    result: Option<&PrincipalizationResult>,
    d: &IntersectionDiagram,
) -> Result<(Vec<String>, bool), CliError> {
    let mut lines = Vec::new();
    let mut ok = true;
    for rep in validate_all(d) {
        ok &= rep.passed();
        lines.push(rep.to_string());
    }
    let cc = cross_check(d)?;
    ok &= cc.agree();
    lines.push(format!("poles: {cc}"));
    if let Some(r) = result {
        let m = verify_minimality(&r.state);
        ok &= m.passed();
        lines.push(m.describe());
    }
    Ok((lines, ok))
}

fn with_check(
    mut text: String,
    result: Option<&PrincipalizationResult>,
    d: &IntersectionDiagram,
    opts: &Options,
) -> Result<Report, CliError> {
    if !opts.check {
        return Ok(Report::ok(text));
    }
    let (lines, ok) = check_lines(result, d)?;
    if !opts.json {
        text.push_str("checks:\n");
        for l in &lines {
            let _ = writeln!(text, "  {l}");
        }
    }
    Ok(Report {
        text,
        failure: (!ok).then(|| CliError::Invariant(format!("check failed: {}", lines.join("; ")))),
    })
}

fn vertex_list(d: &IntersectionDiagram) -> String {
    d.vertices()
        .iter()
        .map(|v| format!("{}({},{})", v.id, v.n, v.nu))
        .collect::<Vec<_>>()
        .join(" ")
}

fn edge_list(d: &IntersectionDiagram) -> String {
    let mut edges: Vec<String> = d.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
    edges.sort();
    edges.join(" ")
}

pub fn principalize_cmd(texts: &[String], opts: &Options) -> Result<Report, CliError> {
    let r = run(texts, opts)?;
    let d = &r.diagram;
    let text = if opts.dot {
        d.to_dot()
    } else if opts.json {
        let log: Vec<Value> = r
            .log
            .iter()
            .map(|ev| {
                json!({
                    "step": ev.step + 1,
                    "center": ev.center_label,
                    "incident": ev.incident.iter().map(|i| format!("E{}", i + 1)).collect::<Vec<_>>(),
                    "divisor": format!("E{}", ev.divisor + 1),
                    "N": ev.n,
                    "nu": ev.nu,
                })
            })
            .collect();
        let mut s = to_pretty(&json!({ "log": log, "diagram": diagram_value(d) }));
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for ev in &r.log {
            let on: Vec<String> = ev.incident.iter().map(|i| format!("E{}", i + 1)).collect();
            let on = if on.is_empty() {
                String::new()
            } else {
                format!(" on {}", on.join(", "))
            };
            let _ = writeln!(
                s,
                "step {}: blow up {}{on} -> E{}({},{})",
                ev.step + 1,
                ev.center_label,
                ev.divisor + 1,
                ev.n,
                ev.nu
            );
        }
        let _ = writeln!(s, "blow-ups: {}", r.step_count);
        let _ = writeln!(s, "vertices: {}", vertex_list(d));
        let _ = writeln!(s, "edges: {}", edge_list(d));
        s
    };
    with_check(text, Some(&r), d, opts)
}

fn render_term(t: &topzeta::arith::ratfunc::Term) -> String {
    let factors: String = t
        .factors
        .iter()
        .map(|&(nu, n)| match n {
            1 => format!("({nu}+s)"),
            _ => format!("({nu}+{n}s)"),
        })
        .collect();
    if t.factors.len() == 1 {
        format!("{}/{factors}", t.coeff)
    } else {
        format!("{}/({factors})", t.coeff)
    }
}

pub fn zeta_cmd(source: &Source, opts: &Options) -> Result<Report, CliError> {
    let (r, d) = resolve(source, opts)?;
    let report = pole_report(&d)?;
    let text = if opts.json {
        format!("{}\n", report.to_json())
    } else {
        let mut s = format!("{}\n", report.function);
        s.push_str("terms:\n");
        for t in report.function.terms().iter().filter(|t| t.coeff != 0) {
            let _ = writeln!(s, "  {}", render_term(t));
        }
        s
    };
    with_check(text, r.as_ref(), &d, opts)
}

pub fn poles_cmd(source: &Source, opts: &Options) -> Result<Report, CliError> {
    let (r, d) = resolve(source, opts)?;
    let report = pole_report(&d)?;
    let text = if opts.json {
        format!("{}\n", to_pretty(&serde_json::to_value(&report.poles).expect("poles")))
    } else {
        report
            .poles
            .iter()
            .map(|p| format!("{} (order {})\n", fmt_q(&p.location), p.order))
            .collect()
    };
    with_check(text, r.as_ref(), &d, opts)
}

pub fn classify_cmd(source: &Source, opts: &Options) -> Result<Report, CliError> {
    let (r, d) = resolve(source, opts)?;
    let verdicts = classify_all(&d)?;
    let text = if opts.json {
        let rows: Vec<VerdictJson> = verdicts.iter().map(VerdictJson::from).collect();
        format!("{}\n", serde_json::to_string_pretty(&rows).expect("verdicts"))
    } else {
        verdicts.iter().map(|v| format!("{v}\n")).collect()
    };
    with_check(text, r.as_ref(), &d, opts)
}

fn report_value(rep: &ValidationReport) -> Value {
    json!({ "check": rep.check, "passed": rep.passed(), "failures": rep.failures })
}

pub fn verify_cmd(source: &Source, opts: &Options) -> Result<Report, CliError> {
    let (r, d) = resolve(source, opts)?;
    let mut ok = true;
    let mut lines = Vec::new();
    let mut json_out = serde_json::Map::new();

    if let Some(r) = &r {
        let generic = generic_check(r, opts.seed)?;
        ok &= generic.passed();
        let lambda: Vec<String> = generic.lambda.iter().map(fmt_q).collect();
        lines.push(format!(
            "lambda: ({}) after {} rejected samples",
            lambda.join(", "),
            generic.retries
        ));
        for row in &generic.relations {
            lines.push(format!(
                "{}: N={} nu={} m={} n={} sum(alpha)={} expected {}; {} = {}: {}",
                row.divisor,
                row.n_value,
                row.nu,
                row.m,
                row.n,
                fmt_q(&row.alpha_sum),
                fmt_q(&row.alpha_sum_expected),
                fmt_q(&row.weighted_lhs),
                fmt_q(&row.weighted_rhs),
                if row.holds() { "pass" } else { "FAIL" }
            ));
        }
        let bad: Vec<String> = generic
            .min_property
            .iter()
            .filter(|m| !m.passed())
            .map(|m| m.divisor.to_string())
            .collect();
        lines.push(if bad.is_empty() {
            format!("min-property: pass ({} divisors)", generic.min_property.len())
        } else {
            format!("min-property: FAIL ({})", bad.join(", "))
        });
        json_out.insert(
            "generic".into(),
            serde_json::from_str(&generic.to_json()).expect("generic report"),
        );
    } else {
        lines.push("generic-curve checks skipped: no generators for a stored diagram".into());
    }

    let reports = validate_all(&d);
    json_out.insert(
        "validators".into(),
        Value::Array(reports.iter().map(report_value).collect()),
    );
    let (check, checks_ok) = check_lines(r.as_ref(), &d)?;
    ok &= checks_ok;
    lines.extend(check);
    json_out.insert("passed".into(), Value::Bool(ok));

    let text = if opts.json {
        format!("{}\n", to_pretty(&Value::Object(json_out)))
    } else {
        lines.iter().map(|l| format!("{l}\n")).collect()
    };
    Ok(Report {
        text,
        failure: (!ok).then(|| CliError::Invariant("verification failed".into())),
    })
}

fn chain_text(chain: &[(u64, u64)]) -> String {
    chain.iter().map(|(n, nu)| format!("({n},{nu})")).collect()
}

pub fn family_cmd(a: u32, b: u32, opts: &Options) -> Result<Report, CliError> {
    let gens = family::build(a, b)?;
    let budget = opts.max_blowups.max(a as usize + 1);
    let r = principalize(&gens, budget)?;
    let report = pole_report(&r.diagram)?;
    let got: Vec<(u64, u64)> = r.state.exceptional().iter().map(|d| (d.n, d.nu)).collect();
    let pole = family::chain_pole(a, b);
    if !family::matches_chain(&r, a, b) {
        return Err(CliError::Invariant(format!(
            "chain {} differs from the expected {}",
            chain_text(&got),
            chain_text(&family::expected_chain(a, b))
        )));
    }
    if !report.pole_locations().contains(&pole) {
        return Err(CliError::Invariant(format!("{} is not a pole", fmt_q(&pole))));
    }
    let gens_text: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    let text = if opts.json {
        let v = json!({
            "a": a,
            "b": b,
            "generators": gens_text,
            "chain": got,
            "pole": fmt_q(&pole),
            "zeta": report.function.to_string(),
        });
        format!("{}\n", to_pretty(&v))
    } else {
        format!(
            "ideal ({})\nchain {}\npole {}\nzeta {}\n",
            gens_text.join(", "),
            chain_text(&got),
            fmt_q(&pole),
            report.function
        )
    };
    Ok(Report::ok(text))
}

pub fn realize_cmd(s0: &str, opts: &Options) -> Result<Report, CliError> {
    let target = parse_rational(s0)
        .ok_or_else(|| CliError::Input(format!("not a rational number: {s0}")))?;
    let r = family::realize_pole(&target)?;
    let text = if opts.json {
        let v = json!({
            "s0": fmt_q(&r.s0),
            "a": r.a,
            "b": r.b,
            "zeta": r.zeta.to_string(),
            "verified": true,
        });
        format!("{}\n", to_pretty(&v))
    } else {
        format!("(a,b)=({},{}); verified pole {}\n", r.a, r.b, fmt_q(&r.s0))
    };
    Ok(Report::ok(text))
}
