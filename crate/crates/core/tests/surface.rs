mod common;

use aldp_core::classify::{families, family, sample_parameters};
use aldp_core::rational::int;
use aldp_core::surface::{
    dual_graph, test_curves, validate_configuration, BlowUpPoint, CurveKind, DiagnosticKind, PairDescription,
    Severity, SurfacePair,
};
use proptest::prelude::*;

fn pair_schema() -> jsonschema::Validator {
    let schema: serde_json::Value = serde_json::from_str(include_str!("../schema/pair.schema.json")).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

#[test]
fn descriptions_round_trip_and_match_the_schema() {
    let schema = pair_schema();
    for f in families() {
        for (n, m) in sample_parameters(f, 2, 5) {
            let pair = f.instantiate(n, m).unwrap();
            let desc = PairDescription::from_pair(&pair);
            let json = serde_json::to_value(&desc).unwrap();
            assert!(schema.is_valid(&json), "{}: {json}", f.id);
            let back = PairDescription::parse(&json.to_string()).unwrap();
            assert_eq!(back, desc);
            let rebuilt = back.build().unwrap();
            assert_eq!(rebuilt.boundary(), pair.boundary());
            assert_eq!(rebuilt.provenance(), pair.provenance());
        }
    }
}

#[test]
fn malformed_descriptions_are_rejected() {
    let schema = pair_schema();
    let bad = [
        r#"{"model": "P2", "boundary": [["3/1"]], "extra": 1}"#,
        r#"{"model": "P2", "boundary": [["1/2"]]}"#,
        r#"{"model": {"Fn": 1}, "boundary": [["1/1"]]}"#,
        r#"{"model": "P3", "boundary": [["1/1"]]}"#,
    ];
    for text in bad {
        let parsed = PairDescription::parse(text).and_then(|d| d.build());
        assert!(parsed.is_err(), "{text}");
    }
    assert!(!schema.is_valid(&serde_json::from_str(bad[0]).unwrap()));
    let good = r#"{"model": {"Fn": 0}, "boundary": [["2", "1"]], "blowups": [{"on": [0]}]}"#;
    let pair = PairDescription::parse(good).unwrap().build().unwrap();
    assert_eq!(pair.boundary()[0].to_text(), "2Z + F - E1");
}

#[test]
fn reducible_or_impossible_classes_are_rejected() {
    assert!(SurfacePair::make_fn(2, &[(1, 1)]).is_err());
    assert!(SurfacePair::make_fn(0, &[(0, 2)]).is_err());
    assert!(SurfacePair::make_p2(&[0]).is_err());
    assert!(SurfacePair::make_p2(&[]).is_err());
    // Two lines meet once, so only one point can sit at their crossing.
    let lines = SurfacePair::make_p2(&[1, 1]).unwrap();
    assert!(lines.blow_up(&[BlowUpPoint::crossing(0, 1), BlowUpPoint::crossing(0, 1)]).is_err());
}

#[test]
fn diagnostics_flag_genericity_clauses() {
    let base = family("I.4B").unwrap().instantiate(None, None).unwrap();
    let shared = base.blow_up(&[BlowUpPoint::on(0).in_group(1), BlowUpPoint::on(0).in_group(1)]).unwrap();
    let d = validate_configuration(&shared);
    let hit = d.iter().find(|d| d.kind == DiagnosticKind::SharedFiber).expect("shared fiber reported");
    assert_eq!(hit.severity, Severity::Warning);
    assert!(hit.message.contains("genericity violated"));
    let lines = SurfacePair::make_p2(&[1, 1]).unwrap().blow_up(&[BlowUpPoint::crossing(0, 1)]).unwrap();
    assert!(validate_configuration(&lines).iter().any(|d| d.kind == DiagnosticKind::PointAtCrossing));
}

#[test]
fn dual_graph_shapes() {
    let iv = family("IV").unwrap().instantiate(None, None).unwrap();
    let g = dual_graph(&iv);
    assert!(g.is_cycle() && g.vertices == 4);
    let two = family("II.4A").unwrap().instantiate(None, None).unwrap();
    assert!(dual_graph(&two).is_cycle());
    let chain = family("III.3.n").unwrap().instantiate(Some(2), None).unwrap();
    let g = dual_graph(&chain);
    assert!(g.is_chains() && !g.has_cycle());
    assert_eq!(g.connected_components(), 1);
    let apart = family("II.2A.n").unwrap().instantiate(Some(1), None).unwrap();
    assert_eq!(dual_graph(&apart).connected_components(), 2);
}

#[test]
fn inventory_contents() {
    let pair = family("I.9B.m").unwrap().instantiate(None, Some(3)).unwrap();
    let set = test_curves(&pair).unwrap();
    let count = |k: CurveKind| set.explicit.iter().filter(|c| c.kind == k).count();
    assert_eq!(count(CurveKind::Exceptional), 3);
    assert_eq!(count(CurveKind::Boundary), 1);
    assert_eq!(count(CurveKind::FiberThrough), 3);
    assert!(set.explicit.iter().all(|c| c.class.basis() == pair.basis()));
    let labels: Vec<&str> = set.explicit.iter().map(|c| c.label.as_str()).collect();
    assert_eq!(&labels[..4], &["E1", "E2", "E3", "C1"]);
}

#[test]
fn proper_transforms() {
    let pair = family("II.6A.n.m").unwrap().instantiate_with_placement(Some(1), Some(3), &[2, 1]).unwrap();
    let c = pair.boundary();
    assert_eq!(c[0].self_intersection(), int(-3));
    assert_eq!(c[1].self_intersection(), int(0));
    assert_eq!(c[0].intersect(&c[1]).unwrap(), int(0));
}

proptest! {
    #[test]
    fn canonical_class_and_log_divisor_shapes(n in 0u32..4, m in 1u32..8) {
        let pair = family("I.7.n.m").unwrap().instantiate(Some(n), Some(m)).unwrap();
        let k = pair.canonical();
        prop_assert_eq!(k.self_intersection(), int(8 - m as i128));
        // Adjunction on the boundary: it is a smooth rational curve.
        prop_assert_eq!(pair.boundary()[0].arithmetic_genus(), int(0));
        prop_assert_eq!(pair.boundary()[0].self_intersection(), int(-(n as i128) - m as i128));
        let d = pair.log_anticanonical();
        prop_assert_eq!(d.constant_part(), pair.log_anticanonical_class());
    }

    #[test]
    fn removing_a_point_undoes_the_blow_up(m in 1u32..6) {
        let pair = family("I.6C.m").unwrap().instantiate(None, Some(m)).unwrap();
        let fewer = pair.without_point(0).unwrap();
        prop_assert_eq!(fewer.points().len(), m as usize - 1);
        prop_assert_eq!(fewer.basis().rank(), pair.basis().rank() - 1);
    }
}
