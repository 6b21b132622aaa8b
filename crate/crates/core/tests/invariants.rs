mod common;

use proptest::prelude::*;

use common::corpus;
use topzeta::arith::rational::q_int;
use topzeta::diagram::{validate_all, IntersectionDiagram};
use topzeta::error::EngineError;
use topzeta::principalize::{principalize_ordered, verify_minimality, CenterOrder, DEFAULT_MAX_STEPS};
use topzeta::zeta::local_zeta;
use topzeta::{QBiPoly, Rational};

/// Multiset of vertex data plus the multiset of edge data, which pins down
/// the diagram up to relabelling for the small trees in the corpus.
type VertexData = (bool, u64, u64);

fn shape(d: &IntersectionDiagram) -> (Vec<VertexData>, Vec<[VertexData; 2]>) {
    let data = |id| {
        let v = d.vertex(id).unwrap();
        (v.id.is_exceptional(), v.n, v.nu)
    };
    let mut vs: Vec<_> = d.vertices().iter().map(|v| data(v.id)).collect();
    vs.sort();
    let mut es: Vec<_> = d
        .edges()
        .iter()
        .map(|&(a, b)| {
            let mut e = [data(a), data(b)];
            e.sort();
            e
        })
        .collect();
    es.sort();
    (vs, es)
}

#[test]
fn reverse_center_order_gives_the_same_diagram() {
    let (entries, _) = corpus();
    for e in &entries {
        let reversed = principalize_ordered(&e.gens, DEFAULT_MAX_STEPS, CenterOrder::Last).unwrap();
        assert_eq!(shape(&e.result.diagram), shape(&reversed.diagram), "{}", e.name);
        assert_eq!(e.result.step_count, reversed.step_count, "{}", e.name);
        assert_eq!(
            local_zeta(&e.result.diagram).unwrap().to_string(),
            local_zeta(&reversed.diagram).unwrap().to_string(),
            "{}",
            e.name
        );
    }
}

#[test]
fn corpus_logs_replay_as_minimal() {
    let (entries, _) = corpus();
    for e in &entries {
        let report = verify_minimality(&e.result.state);
        assert!(report.passed(), "{}: {}", e.name, report.describe());
    }
}

#[test]
fn zeta_at_zero_is_one() {
    // Z(0) is the Euler characteristic of the fibre over the origin.
    let (entries, _) = corpus();
    for e in &entries {
        let z = local_zeta(&e.result.diagram).unwrap();
        assert_eq!(z.eval(&q_int(0)), Some(q_int(1)), "{}", e.name);
    }
}

fn term() -> impl Strategy<Value = (i64, u32, u32)> {
    (prop_oneof![-3i64..=-1, 1i64..=3], 0u32..=4, 0u32..=4)
        .prop_filter("vanishes at the origin", |&(_, i, j)| i + j > 0)
}

fn poly() -> impl Strategy<Value = QBiPoly> {
    prop::collection::vec(term(), 1..=3).prop_map(|ts| {
        ts.into_iter().fold(QBiPoly::zero(), |acc, (c, i, j)| {
            &acc + &QBiPoly::monomial(Rational::from_integer(c.into()), i, j)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_ideals_satisfy_the_structure_results(gens in prop::collection::vec(poly(), 1..=2)) {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let result = match principalize_ordered(&gens, DEFAULT_MAX_STEPS, CenterOrder::First) {
            Ok(r) => r,
            Err(EngineError::CenterNotRational { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        for rep in validate_all(&result.diagram) {
            prop_assert!(rep.passed(), "{}", rep);
        }
        let z = local_zeta(&result.diagram).unwrap();
        prop_assert_eq!(z.eval(&q_int(0)), Some(q_int(1)));
        let c = topzeta::criterion::cross_check(&result.diagram).unwrap();
        prop_assert!(c.agree(), "{}", c);
    }
}
