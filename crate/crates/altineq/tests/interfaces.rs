//! Wire-format contracts: sequences serialize as JSON arrays, generation
//! specs as flat objects, verdict records and traces with their documented
//! field sets.

use altineq::ratios::{holder_ratio, BoundsBox, ConjugateExponents};
use altineq::report::LabeledReport;
use altineq::seqcore::{BoundedMonotoneSeq, Direction, Distribution, GenSpec};
use altineq::Seq;
use serde_json::json;

#[test]
fn sequences_serialize_as_json_arrays() {
    let s = Seq::new(vec![3.0, 2.0, 1.0]).unwrap();
    assert_eq!(serde_json::to_value(&s).unwrap(), json!([3.0, 2.0, 1.0]));

    let m = BoundedMonotoneSeq::new(vec![3.0, 2.0, 1.0], Direction::NonIncreasing).unwrap();
    assert_eq!(serde_json::to_value(&m).unwrap(), json!([3.0, 2.0, 1.0]));

    let back: Seq = serde_json::from_str("[1.5, 0.5]").unwrap();
    assert_eq!(back.values(), &[1.5, 0.5]);
}

#[test]
fn gen_spec_serializes_as_flat_object() {
    let spec = GenSpec {
        n: 5,
        lo: 1.0,
        hi: 2.0,
        direction: Direction::NonIncreasing,
        seed: 42,
        distribution: Distribution::UniformGaps,
    };
    let v = serde_json::to_value(&spec).unwrap();
    assert_eq!(
        v,
        json!({
            "n": 5,
            "lo": 1.0,
            "hi": 2.0,
            "direction": "non-increasing",
            "seed": 42,
            "distribution": "uniform-gaps"
        })
    );
    let back: GenSpec = serde_json::from_value(v).unwrap();
    assert_eq!(back, spec);
}

#[test]
fn labeled_report_carries_the_documented_fields() {
    let a = BoundedMonotoneSeq::new(vec![2.0, 1.0], Direction::NonIncreasing).unwrap();
    let pq = ConjugateExponents::new(2.0).unwrap();
    let report = holder_ratio(&a, &a, &pq).unwrap();
    let labeled = LabeledReport::new("holder", 2, report)
        .with_exponents(2.0, Some(2.0))
        .with_box(BoundsBox::new(1.0, 2.0, 1.0, 2.0).unwrap());
    let v = serde_json::to_value(&labeled).unwrap();
    for key in [
        "functional",
        "n",
        "p",
        "q",
        "numerator",
        "denominator",
        "ratio",
        "bound",
        "slack",
        "holds",
        "equality",
        "box",
    ] {
        assert!(v.get(key).is_some(), "missing field {key}");
    }
    assert_eq!(v["box"]["a_lo"], json!(1.0));

    // p, q, and box are optional.
    let bare = LabeledReport::new("cauchy", 3, report);
    let v = serde_json::to_value(&bare).unwrap();
    assert!(v.get("p").is_none());
    assert!(v.get("q").is_none());
    assert!(v.get("box").is_none());
}

#[test]
fn witness_trace_shape() {
    let trace = altineq::ratios::minkowski_sharpness_trace(2.0, &[10.0, 100.0]).unwrap();
    let v = serde_json::to_value(&trace).unwrap();
    assert_eq!(v["family"], "minkowski_eps_b");
    assert_eq!(v["parameter"], "b");
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 2);
    for pt in points {
        for key in ["param", "ratio", "bound", "gap"] {
            assert!(pt.get(key).is_some(), "missing point field {key}");
        }
    }
}
