//! End-to-end acceptance run over a fixed corpus of ideals.
//!
//! Prints one `criterion N: PASS|FAIL` line per criterion, followed by the
//! offending instances on failure. Runs without the libtest harness so the
//! report reads top to bottom.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_traits::{One, Zero};

use common::{corpus, run, Entry, Source, GOLDEN};
use topzeta::arith::rational::{fmt_q, q_frac, q_int};
use topzeta::blowup::Point;
use topzeta::criterion::{classify, classify_all, cross_check};
use topzeta::diagram::validate_all;
use topzeta::family::{admissible, matches_chain, realize_pole};
use topzeta::generic::generic_check;
use topzeta::principalize::{finish, verify_minimality};
use topzeta::zeta::{contributions_at, local_zeta, pole_report};
use topzeta::{PrincipalizationResult, Rational};

/// A criterion whose failure is a known, recorded inconsistency in its own
/// requirements rather than a defect of the engine.
const KNOWN_CONFLICT: u8 = 8;

struct Outcome {
    number: u8,
    title: &'static str,
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new(number: u8, title: &'static str) -> Self {
        Self {
            number,
            title,
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn print(&self) {
        let status = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} — {} {}", self.number, self.title, self.summary);
        for f in &self.failures {
            println!("    {f}");
        }
    }
}

fn zeta_string(r: &PrincipalizationResult) -> String {
    local_zeta(&r.diagram).map(|z| z.to_string()).unwrap_or_else(|e| format!("<{e}>"))
}

fn golden(out: &mut Outcome) {
    let r = run(&GOLDEN);
    let data: Vec<(u64, u64)> = r.state.exceptional().iter().map(|d| (d.n, d.nu)).collect();
    out.check(data == [(5, 2), (6, 3), (7, 4)], || format!("exceptional data {data:?}"));
    let strict: Vec<(u64, u64)> = r.diagram.strict().map(|v| (v.n, v.nu)).collect();
    out.check(strict == [(1, 1)], || format!("strict data {strict:?}"));

    let mut edges: Vec<String> = r
        .diagram
        .edges()
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect();
    edges.sort();
    out.check(edges == ["E1-E2", "E1-S1", "E2-E3"], || format!("edges {edges:?}"));

    let z = zeta_string(&r);
    out.check(z == "(5s^2+16s+8)/((4+7s)(2+5s)(1+s))", || format!("zeta {z}"));

    let zeta = local_zeta(&r.diagram).expect("zeta");
    let poles: Vec<(String, u32)> = zeta
        .poles()
        .iter()
        .map(|p| (fmt_q(&p.location), p.order))
        .collect();
    let want = [("-1", 1), ("-4/7", 1), ("-2/5", 1)].map(|(s, o)| (s.to_string(), o));
    out.check(poles == want, || format!("poles {poles:?}"));

    match classify(&r.diagram, &q_frac(-1, 2)) {
        Ok(v) => out.check(!v.is_pole(), || format!("-1/2 classified as {v}")),
        Err(e) => out.failures.push(format!("classify(-1/2): {e}")),
    }
    let minimality = verify_minimality(&r.state);
    out.check(minimality.passed() && minimality.steps == 3, || minimality.describe());
    out.summary = format!("zeta {z}");
}

fn criterion_matches_zeta(out: &mut Outcome, corpus: &[Entry]) {
    for e in corpus {
        match cross_check(&e.result.diagram) {
            Ok(c) => out.check(c.agree(), || format!("{}: {c}", e.name)),
            Err(err) => out.failures.push(format!("{}: {err}", e.name)),
        }
        // For a single curve only strict branches and rupture components can
        // produce poles.
        if e.gens.len() == 1 {
            for v in classify_all(&e.result.diagram).expect("classify") {
                for r in &v.reasons {
                    out.check(r.condition == 1 || r.condition == 5, || {
                        format!("{}: curve pole {v} via condition {}", e.name, r.condition)
                    });
                }
            }
        }
    }
    out.summary = format!("{} ideals", corpus.len());
}

fn relations(out: &mut Outcome, corpus: &[Entry]) {
    let mut rows = 0;
    for e in corpus {
        match generic_check(&e.result, 0) {
            Ok(rep) => {
                rows += rep.relations.len();
                for row in rep.relations.iter().filter(|r| !r.holds()) {
                    out.failures.push(format!("{}: {row:?}", e.name));
                }
                if e.source == Source::Golden {
                    let ns: Vec<u64> = rep.relations.iter().map(|r| r.n).collect();
                    out.check(ns == [3, 0, 1], || format!("golden n = {ns:?}"));
                }
            }
            Err(err) => out.failures.push(format!("{}: {err}", e.name)),
        }
    }
    out.summary = format!("{rows} exceptional divisors");
}

fn structure(out: &mut Outcome, corpus: &[Entry]) {
    for e in corpus {
        for rep in validate_all(&e.result.diagram) {
            out.check(rep.passed(), || format!("{}: {rep}", e.name));
        }
    }
    out.summary = format!("{} diagrams × 5 validators", corpus.len());
}

fn residues(out: &mut Outcome, corpus: &[Entry]) {
    let mut checked = 0;
    for e in corpus {
        let d = &e.result.diagram;
        let report = match pole_report(d) {
            Ok(r) => r,
            Err(err) => {
                out.failures.push(format!("{}: {err}", e.name));
                continue;
            }
        };
        let poles = report.function.poles();
        let candidates = d.candidates();
        let Some(maximal) = candidates.last() else {
            continue;
        };
        out.check(poles.iter().any(|p| &p.location == maximal), || {
            format!("{}: maximal candidate {} is not a pole", e.name, fmt_q(maximal))
        });
        for s0 in &candidates {
            let c = contributions_at(d, s0).expect("candidate");
            let Some(total) = c.total() else { continue };
            let pole = poles.iter().find(|p| &p.location == s0);
            if pole.is_some_and(|p| p.order != 1) {
                continue;
            }
            checked += 1;
            let residue = pole.map(|p| p.leading.clone()).unwrap_or_else(Rational::zero);
            out.check(total == residue, || {
                format!(
                    "{}: at {} contributions sum to {} but the residue is {}",
                    e.name,
                    fmt_q(s0),
                    fmt_q(&total),
                    fmt_q(&residue)
                )
            });
            if s0 != maximal {
                for (v, r) in &c.by_vertex {
                    out.check(r.is_zero() || r < &Rational::zero(), || {
                        format!("{}: {v} contributes {} at {}", e.name, fmt_q(r), fmt_q(s0))
                    });
                }
            }
        }
    }
    out.summary = format!("{checked} order-1 candidates");
}

/// Blow up one more point on the line chart of the last exceptional curve:
/// its intersection with the previous curve when there is one, otherwise a
/// general point.
fn one_more_blow_up(r: &PrincipalizationResult) -> Result<(String, PrincipalizationResult), String> {
    let mut state = r.state.clone();
    let last = state.events().last().ok_or("no exceptional curve")?;
    let line_id = last.charts[0];
    let line = state.chart(line_id);
    let t = if line.axes[1].is_some() && !line.is_blown(&Rational::zero()) {
        Rational::zero()
    } else {
        q_frac(1, 3)
    };
    let point = Point { chart: line_id, t };
    let label = state.point_label(&point);
    state.blow_up(&point).map_err(|e| e.to_string())?;
    let extended = finish(state).map_err(|e| e.to_string())?;
    Ok((label, extended))
}

fn independence(out: &mut Outcome, corpus: &[Entry]) {
    let picked: Vec<&Entry> = corpus
        .iter()
        .filter(|e| !e.result.log.is_empty())
        .step_by(7)
        .take(10)
        .collect();
    out.check(picked.len() == 10, || format!("only {} ideals with blow-ups", picked.len()));
    for e in picked {
        match one_more_blow_up(&e.result) {
            Ok((label, extended)) => {
                let before = zeta_string(&e.result);
                let after = zeta_string(&extended);
                out.check(before == after, || {
                    format!("{}: extra blow-up at {label} changed {before} into {after}", e.name)
                });
                out.check(!extended.diagram.is_minimal(), || {
                    format!("{}: extended diagram still marked minimal", e.name)
                });
            }
            Err(err) => out.failures.push(format!("{}: {err}", e.name)),
        }
    }
    out.summary = "10 ideals".into();
}

fn min_property(out: &mut Outcome, corpus: &[Entry]) {
    let mut ideals = 0;
    for e in corpus.iter().filter(|e| e.gens.len() >= 2) {
        ideals += 1;
        match generic_check(&e.result, 0) {
            Ok(rep) => {
                for m in rep.min_property.iter().filter(|m| !m.passed()) {
                    out.failures.push(format!("{}: {m:?}", e.name));
                }
            }
            Err(err) => out.failures.push(format!("{}: {err}", e.name)),
        }
    }
    out.summary = format!("{ideals} ideals with at least two generators");
}

fn pole_samples() -> Vec<Rational> {
    let mut s: Vec<Rational> = (1..=10).map(|i| -Rational::one() - q_frac(1, i)).collect();
    let inside = [
        (-1, 1),
        (-1, 2),
        (-2, 3),
        (-3, 5),
        (-1, 50),
        (-49, 50),
        (-48, 49),
        (-1, 49),
        (-24, 25),
        (-17, 50),
        (-29, 31),
        (-4, 7),
        (-2, 5),
        (-5, 6),
        (-7, 9),
        (-11, 13),
        (-3, 10),
        (-13, 40),
        (-21, 47),
        (-9, 43),
    ];
    s.extend(inside.iter().map(|&(p, q)| q_frac(p, q)));
    s
}

fn realization(out: &mut Outcome) {
    let samples = pole_samples();
    let distinct: BTreeSet<&Rational> = samples.iter().collect();
    out.check(distinct.len() == 30, || format!("{} distinct samples", distinct.len()));
    for s0 in &samples {
        match realize_pole(s0) {
            Ok(r) => {
                let hit = r.zeta.poles().iter().any(|p| &p.location == s0);
                out.check(hit && matches_chain(&r.result, r.a, r.b), || {
                    format!("{}: (a,b)=({},{}) zeta {}", fmt_q(s0), r.a, r.b, r.zeta)
                });
            }
            Err(e) => out.failures.push(format!("{}: {e}", fmt_q(s0))),
        }
    }
    for s0 in [q_frac(-3, 2), q_int(0), q_frac(-5, 2)] {
        out.check(!admissible(&s0), || {
            format!("admissible({}) is true", fmt_q(&s0))
        });
    }
    out.summary = format!("{} targets realized", samples.len());
}

fn base_cases(out: &mut Outcome) {
    let mut expect = |gens: &[&str], want: String, poles: Vec<Rational>| {
        let r = run(gens);
        let z = local_zeta(&r.diagram).expect("zeta");
        let got: Vec<Rational> = z.poles().into_iter().map(|p| p.location).collect();
        out.check(z.to_string() == want && got == poles, || {
            format!("{}: {z} with poles {got:?}, expected {want}", gens.join(", "))
        });
    };
    expect(&["x"], "1/(1+s)".into(), vec![q_int(-1)]);
    expect(&["x", "y"], "2/(2+s)".into(), vec![q_int(-2)]);
    let mut count = 2;
    for a in 1..=6i64 {
        for b in (1..=6i64).filter(|&b| b != a) {
            let g = format!("x^{a}*y^{b}");
            let (hi, lo) = (a.max(b), a.min(b));
            let want = format!("1/((1+{hi}s)(1+{lo}s))").replace("(1+1s)", "(1+s)");
            let mut poles = vec![q_frac(-1, lo), q_frac(-1, hi)];
            poles.sort();
            expect(&[g.as_str()], want, poles);
            count += 1;
        }
    }
    out.summary = format!("{count} ideals");
}

fn main() -> ExitCode {
    let start = Instant::now();
    let (corpus, excluded) = corpus();
    println!(
        "corpus: {} ideals ({} excluded)",
        corpus.len(),
        excluded.len()
    );
    for x in &excluded {
        println!("  excluded {}: {}", x.name, x.reason);
    }

    let mut outcomes = Vec::new();
    let mut run_one = |n, title, f: &dyn Fn(&mut Outcome)| {
        let mut o = Outcome::new(n, title);
        f(&mut o);
        o.print();
        outcomes.push(o);
    };
    run_one(1, "golden example", &golden);
    run_one(2, "criterion agrees with the zeta function", &|o| {
        criterion_matches_zeta(o, &corpus)
    });
    run_one(3, "relations with the generic curve", &|o| relations(o, &corpus));
    run_one(4, "diagram structure", &|o| structure(o, &corpus));
    run_one(5, "residue contributions", &|o| residues(o, &corpus));
    run_one(6, "independence of the principalization", &|o| independence(o, &corpus));
    run_one(7, "minimum property of the generic member", &|o| min_property(o, &corpus));
    run_one(8, "pole-set realization", &realization);
    run_one(9, "degenerate bases", &base_cases);

    let failed: Vec<u8> = outcomes
        .iter()
        .filter(|o| !o.failures.is_empty())
        .map(|o| o.number)
        .collect();
    println!("elapsed: {:.1}s", start.elapsed().as_secs_f64());
    let unexpected: Vec<u8> = failed.iter().copied().filter(|&n| n != KNOWN_CONFLICT).collect();
    if failed.contains(&KNOWN_CONFLICT) {
        let o = &outcomes[usize::from(KNOWN_CONFLICT) - 1];
        let only_conflict = o.failures.len() == 1 && o.failures[0] == "admissible(-3/2) is true";
        if !only_conflict {
            println!("note: criterion {KNOWN_CONFLICT} failed beyond the recorded -3/2 conflict");
            return ExitCode::FAILURE;
        }
        println!("note: criterion {KNOWN_CONFLICT} fails only on the -3/2 rejection, which contradicts its own -1-1/i samples");
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
