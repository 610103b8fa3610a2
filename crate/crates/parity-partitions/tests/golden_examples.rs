//! Worked examples: every map applied to concrete partitions with frozen
//! outputs, the recorded case traces, and inverse round-trips.

mod common;

use common::{p, resolve_map};
use parity_partitions::{MapId, Partition};

#[test]
fn forward_goldens() {
    common::assert_forward_goldens();
}

#[test]
fn inverse_goldens() {
    common::assert_inverse_goldens();
}

#[test]
fn phi1_dispatch_picks_the_expected_half() {
    assert_eq!(resolve_map("phi1", &p("17 12 6")), MapId::Phi1Dd);
    assert_eq!(resolve_map("phi1", &p("11 9 9 6 4 2 2")), MapId::Phi1Uu);
    assert_eq!(resolve_map("phi1", &p("11 9 9 7 4 2 2")), MapId::Phi1Uu);
}

#[test]
fn phi4_case3_trace_golden() {
    let (image, trace) = MapId::Phi4.apply(&p("20 16 12 7 5 1")).unwrap();
    assert_eq!(image, p("17 12 6^5 2"));
    assert_eq!(trace.case_label, "Case 3");
    assert_eq!(trace.k, Some(2));
    assert_eq!(trace.q, Some(3));
    assert_eq!(trace.r, Some(2));
    assert_eq!(trace.eta, Some(p("16 12 7")));
}

#[test]
fn phi2_case5_trace_golden() {
    let (image, trace) = MapId::Phi2.apply(&p("8 5")).unwrap();
    assert_eq!(image, p("5 5 3"));
    assert_eq!(trace.case_label, "Case 5");
    assert_eq!(trace.k, Some(3));
    assert_eq!(trace.q, None);
    assert_eq!(trace.r, None);
    assert_eq!(trace.eta, None);
}

#[test]
fn trace_json_shape() {
    let (_, trace) = MapId::Phi4.apply(&p("20 16 12 7 5 1")).unwrap();
    let json = serde_json::to_value(&trace).unwrap();
    assert_eq!(json["map"], "phi4");
    assert_eq!(json["case"], "Case 3");
    assert_eq!(json["k"], 2);
    assert_eq!(json["q"], 3);
    assert_eq!(json["r"], 2);
    assert_eq!(json["eta"], serde_json::json!([16, 12, 7]));

    let (_, trace) = MapId::Phi2.apply(&p("15 1")).unwrap();
    let json = serde_json::to_value(&trace).unwrap();
    assert_eq!(json["case"], "Case 1");
    // Absent analysis fields are omitted, not serialized as null.
    assert!(json.get("k").is_none());
    assert!(json.get("eta").is_none());
}

#[test]
fn display_and_render_goldens() {
    assert_eq!(p("7 5 1^4").to_string(), "7 5 1^4");
    assert_eq!(p("7 5 1 1 1 1").to_string(), "7 5 1^4");
    assert_eq!(p("5 5 3").to_string(), "5 5 3");
    assert_eq!(p("3 1").render_ferrers(), "###\n#");
    assert_eq!(
        Partition::empty().to_string(),
        "",
        "the empty partition prints as the empty string"
    );
}

#[test]
fn stats_golden() {
    let lambda = p("11 9 9 6 4 2 2");
    assert_eq!(lambda.weight(), 43);
    let stats = lambda.stats();
    assert_eq!(stats.ell, 7);
    assert_eq!(stats.ell_o, 3);
    assert_eq!(stats.ell_e, 4);
    assert_eq!(stats.smallest_repeated, Some(2));
    assert_eq!(stats.second_smallest_repeated, Some(9));
}
