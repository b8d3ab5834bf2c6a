use super::*;

fn a3_theta() -> Quiver {
    Quiver::linear(3)
        .with_involution(
            &[("1", "3"), ("3", "1")],
            &[("a1", "a2"), ("a2", "a1")],
            &[],
            &[("a1", -1), ("a2", -1)],
        )
        .unwrap()
}

fn dv(v: &[u32]) -> DimVector {
    DimVector(v.to_vec())
}

#[test]
fn a3_involution_is_a_duality_structure() {
    let q = a3_theta();
    let inv = q.inv().unwrap();
    assert!(q.validate_duality(inv).is_empty());
    assert_eq!(inv.vertex_side, vec![Side::Plus, Side::Fixed, Side::Minus]);
    assert_eq!(inv.arrow_side, vec![Side::Plus, Side::Minus]);
}

#[test]
fn identity_involution_on_an_edge_fails_condition_a() {
    let q = Quiver::linear(2);
    let inv = q.build_involution(&[], &[], &[], &[], &[], &[]).unwrap();
    let report = q.validate_duality(&inv);
    assert!(report.iter().any(|v| matches!(v, Violation::ConditionA(_))));
    assert!(report.iter().all(|v| !matches!(v, Violation::SigmaCompatibility(_))));
}

#[test]
fn symplectic_loop_is_valid() {
    let q = Quiver::jordan();
    let inv = q.build_involution(&[], &[], &[("1", -1)], &[("a1", 1)], &[], &[]).unwrap();
    assert!(q.validate_duality(&inv).is_empty());
}

#[test]
fn sign_violations_are_reported_separately() {
    let q = Quiver::linear(3);
    let inv = q
        .build_involution(&[("1", "3"), ("3", "1")], &[("a1", "a2"), ("a2", "a1")], &[("1", -1)], &[("a1", -1)], &[], &[])
        .unwrap();
    let report = q.validate_duality(&inv);
    assert!(report.iter().any(|v| matches!(v, Violation::SigmaCompatibility(_))));
    assert!(report.iter().any(|v| matches!(v, Violation::VarsigmaCompatibility(_))));
    assert!(!report.iter().any(|v| matches!(v, Violation::ConditionA(_))));
}

#[test]
fn loop_at_swapped_vertex_violates_condition_b() {
    // two vertices swapped, an arrow 1 → 2 = θ(1) that is not θ-fixed
    let q = Quiver::new(
        vec!["1".into(), "2".into()],
        vec![("a".into(), "1".into(), "2".into()), ("b".into(), "1".into(), "2".into())],
    )
    .unwrap();
    let inv = q.build_involution(&[("1", "2"), ("2", "1")], &[("a", "b"), ("b", "a")], &[], &[], &[], &[]).unwrap();
    let report = q.validate_duality(&inv);
    assert!(report.iter().any(|v| matches!(v, Violation::ConditionB(_))));
}

#[test]
fn unknown_names_are_structural_errors() {
    let q = Quiver::linear(2);
    let err = q.build_involution(&[("7", "1")], &[], &[], &[], &[], &[]).unwrap_err();
    assert!(matches!(err, crate::Error::Structure(_)));
    assert!(Quiver::new(vec!["1".into()], vec![("a".into(), "1".into(), "2".into())]).is_err());
}

#[test]
fn arrow_counts() {
    let q = Quiver::linear(3);
    assert_eq!(q.arrow_count(0, 1), 1);
    assert_eq!(q.arrow_count(1, 0), 0);
    assert_eq!(Quiver::jordan().arrow_count(0, 0), 1);
}

fn first_example() -> Comp {
    Comp::new(vec![dv(&[1, 0, 1]), dv(&[2, 1, 0]), dv(&[0, 0, 2]), dv(&[1, 1, 0]), dv(&[0, 1, 0])]).unwrap()
}

#[test]
fn wedge_examples() {
    let d = first_example();
    let e = d.wedge(&[2, 3]).unwrap();
    assert_eq!(e, Comp::new(vec![dv(&[3, 1, 1]), dv(&[1, 2, 2])]).unwrap());
    let e2 = d.wedge(&[2, 1, 2]).unwrap();
    assert_eq!(e2, Comp::new(vec![dv(&[3, 1, 1]), dv(&[0, 0, 2]), dv(&[1, 2, 0])]).unwrap());
    assert_eq!(d.wedge(&[1, 1, 1, 1, 1]).unwrap(), d);
    assert!(d.wedge(&[2, 2]).is_err());
}

#[test]
fn refines_examples() {
    let d = first_example();
    let e = d.wedge(&[2, 3]).unwrap();
    assert_eq!(d.refines(&e), Some(vec![2, 3]));
    let a = Comp::ints(&[1, 1]).unwrap();
    assert_eq!(a.refines(&Comp::ints(&[2]).unwrap()), Some(vec![2]));
    assert_eq!(Comp::ints(&[2, 1]).unwrap().refines(&Comp::ints(&[1, 2]).unwrap()), None);
}

#[test]
fn theta_wedge_examples() {
    let q = a3_theta();
    let vm = &q.inv().unwrap().vertex_map;
    let d = q.iso(vec![dv(&[1, 1, 0]), dv(&[0, 0, 1])], dv(&[2, 1, 2])).unwrap();
    let e1 = d.theta_wedge_at(1, vm).unwrap();
    assert_eq!(e1, q.iso(vec![dv(&[1, 1, 1])], dv(&[2, 1, 2])).unwrap());
    let e2 = d.theta_wedge_at(2, vm).unwrap();
    assert_eq!(e2, q.iso(vec![dv(&[1, 1, 0])], dv(&[3, 1, 3])).unwrap());
    assert_eq!(d.theta_wedge(&[1, 1, 1], vm).unwrap(), d);
    assert_eq!(d.refines(&e2, vm), Some(vec![1, 2]));
    assert_eq!(d.total(vm), e2.total(vm));
}

#[test]
fn text_round_trip() {
    let q = a3_theta();
    let d = q.parse_iso("([1,1,0],[0,0,1]|[2,1,2])").unwrap();
    assert_eq!(q.parse_iso(&d.to_text()).unwrap(), d);
    let j = Quiver::jordan().with_involution(&[], &[], &[], &[("a1", -1)]).unwrap();
    let e = j.parse_iso("(|2)").unwrap();
    assert_eq!(e.len(), 0);
    assert_eq!(e.to_text(), "(|2)");
    let c = Comp::parse("(1,2)", 1).unwrap();
    assert_eq!(c.to_text(), "(1,2)");
}

#[test]
fn parity_is_enforced_for_symplectic_vertices() {
    let q = Quiver::a1().with_involution(&[], &[], &[("1", -1)], &[]).unwrap();
    assert!(q.parse_iso("(|3)").is_err());
    assert!(q.parse_iso("(1|1)").is_err());
    assert!(q.parse_iso("(1|2)").is_ok());
    let c = DimVector(vec![4]);
    assert!(q.all_iso(&c).unwrap().iter().all(|d| d.inf().get(0) % 2 == 0));
}

#[test]
fn json_round_trip() {
    let q = a3_theta();
    let text = q.to_json().to_string();
    let back = Quiver::from_json(&text).unwrap();
    assert_eq!(back, q);
    let d = q.parse_dim(r#"{"1": 2, "3": 1}"#).unwrap();
    assert_eq!(d, dv(&[2, 0, 1]));
}

#[test]
fn json_rejects_invalid_duality() {
    let text = r#"{"vertices":["i","j"],"arrows":[{"name":"a","src":"i","tgt":"j"}],"involution":{"vertices":{},"arrows":{}}}"#;
    assert!(matches!(Quiver::from_json(text), Err(crate::Error::Argument(_))));
    assert!(matches!(Quiver::from_json("{"), Err(crate::Error::Parse(_))));
}

#[test]
fn all_compositions_of_small_vectors() {
    assert_eq!(Comp::all_of(&dv(&[3])).len(), 4);
    assert_eq!(Comp::all_of(&dv(&[1, 1])).len(), 3);
    let vm = vec![0];
    // (|2), (1|0)
    assert_eq!(IsoComp::all_of(&dv(&[2]), &vm).len(), 2);
}
