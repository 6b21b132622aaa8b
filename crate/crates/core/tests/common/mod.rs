//! Deterministic corpus of ideals shared by the integration tests.

#![allow(dead_code)]

use topzeta::error::EngineError;
use topzeta::family;
use topzeta::principalize::{principalize, DEFAULT_MAX_STEPS};
use topzeta::{parse_poly, PrincipalizationResult, QBiPoly};

pub const GOLDEN: [&str; 2] = ["x^4*y", "x^7 + x*y^4"];

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Source {
    Golden,
    Family { a: u32, b: u32 },
    Monomial,
    Mixed,
    Curve,
}

pub struct Entry {
    pub name: String,
    pub source: Source,
    pub gens: Vec<QBiPoly>,
    pub result: PrincipalizationResult,
}

pub fn parse_all(ss: &[&str]) -> Vec<QBiPoly> {
    ss.iter()
        .map(|s| parse_poly(s, ("x", "y")).expect("corpus polynomial parses"))
        .collect()
}

pub fn run(ss: &[&str]) -> PrincipalizationResult {
    principalize(&parse_all(ss), DEFAULT_MAX_STEPS).expect("principalizes")
}

const MONOMIAL: &[[&str; 2]] = &[
    ["x", "y"],
    ["x^2", "y^3"],
    ["x^3*y", "x*y^4"],
    ["x^6", "y^5"],
    ["x^2*y^3", "x^5*y"],
    ["x^4*y^2", "x*y^6"],
    ["x*y", "x^3"],
    ["x^2*y^2", "y^3"],
    ["x^3", "x^2*y^2"],
    ["x^6*y^6", "y"],
    ["x^5*y^2", "x^2*y^5"],
    ["x^4", "x^3*y^3"],
];

const MIXED: &[[&str; 2]] = &[
    ["y^2 - x^3", "x^4"],
    ["y^2 - x^3", "x*y"],
    ["x^2 + y^3", "x*y^2"],
    ["y^3 - x^5", "x^2*y"],
    ["x*y", "x^3 + y^4"],
    ["x^2 - y^2", "x^3"],
    ["y^2 - x^2 - x^3", "x^4"],
    ["x*(y^2 - x^3)", "x^5"],
    ["y*(y - x^2)", "x^4"],
    ["x^2*y + y^4", "x^5"],
    ["x^2*y^2", "x^5 + y^5"],
    ["y^2 - x^4", "x^3*y"],
    ["(y - x)*(y + 2*x)", "y^4 + x^5"],
    ["y^2 + x^2", "x^3"],
    ["y^2 - 2*x^2", "x^3"],
];

const CURVES: &[&str] = &[
    "y^2 - x^3",
    "y^2 - x^5",
    "y^3 - x^4",
    "x*y*(x - y)",
    "y^2 - x^4",
    "(y^2 - x^3)^2",
    "x^2*y^3",
    "x",
];

/// Mixed ideals skipped because a required center is not ℚ-rational.
pub struct Excluded {
    pub name: String,
    pub reason: String,
}

/// The full corpus: golden example, the family for `1 ≤ b < a ≤ 10` and
/// `b = 0 < a ≤ 10`, monomial ideals with exponents at most 6, mixed
/// two-generator ideals of degree at most 10, and single curves.
pub fn corpus() -> (Vec<Entry>, Vec<Excluded>) {
    let mut out = Vec::new();
    let mut excluded = Vec::new();
    let named = |ss: &[&str]| ss.join(", ");

    out.push(Entry {
        name: named(&GOLDEN),
        source: Source::Golden,
        gens: parse_all(&GOLDEN),
        result: run(&GOLDEN),
    });
    for a in 1..=10u32 {
        for b in 0..a {
            let gens = family::build(a, b).expect("a > b");
            let result = principalize(&gens, DEFAULT_MAX_STEPS).expect("family principalizes");
            out.push(Entry {
                name: format!("family a={a} b={b}"),
                source: Source::Family { a, b },
                gens,
                result,
            });
        }
    }
    for pair in MONOMIAL {
        out.push(Entry {
            name: named(pair),
            source: Source::Monomial,
            gens: parse_all(pair),
            result: run(pair),
        });
    }
    for pair in MIXED {
        let gens = parse_all(pair);
        match principalize(&gens, DEFAULT_MAX_STEPS) {
            Ok(result) => out.push(Entry {
                name: named(pair),
                source: Source::Mixed,
                gens,
                result,
            }),
            Err(e @ EngineError::CenterNotRational { .. }) => excluded.push(Excluded {
                name: named(pair),
                reason: e.to_string(),
            }),
            Err(e) => panic!("{}: {e}", named(pair)),
        }
    }
    for curve in CURVES {
        out.push(Entry {
            name: curve.to_string(),
            source: Source::Curve,
            gens: parse_all(&[curve]),
            result: run(&[curve]),
        });
    }
    (out, excluded)
}
