use cp3_algebra::{rf, RatFn, Var};
use cp3_core::charts::*;
use cp3_core::{CoreError, Status, SystemId};

const CHARTED: [SystemId; 3] = [SystemId::D6, SystemId::B5, SystemId::D52];

#[test]
fn every_printed_chart_is_polynomial() {
    let mut n = 0;
    for id in CHARTED {
        for c in verify_charts(id) {
            assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.witness);
            n += 1;
        }
    }
    assert_eq!(n, 18);
}

#[test]
fn shifted_targets_are_needed() {
    for id in CHARTED {
        let controls = negative_controls(id);
        assert_eq!(controls.len(), 1);
        assert_eq!(controls[0].status, Status::Fail, "{}", controls[0].name);
    }
}

#[test]
fn composite_chart_names_show_the_order() {
    let c = check_polynomiality(SystemId::B5, "r3").unwrap();
    assert_eq!(c.name, "b5 r3(r4(H))");
}

#[test]
fn charts_round_trip() {
    for id in CHARTED {
        for cid in chart_ids(id) {
            let c = chart(id, cid).unwrap();
            assert!(round_trip_defects(&c).unwrap().is_empty(), "{id} {cid}");
        }
    }
}

#[test]
fn d6_r3_inverse() {
    let c = chart(SystemId::D6, "r3").unwrap();
    let phase = Var::PHASE.to_vec();
    let inv = invert(&c.images, &phase).unwrap();
    assert_eq!(inv[2], rf("1/Z"));
    assert_eq!(inv[3], rf("-(W*Z + a3)*Z"));
}

#[test]
fn non_triangular_substitution_is_rejected() {
    let images: Vec<RatFn> = ["x*y", "x + y", "z", "w", "q", "p"].iter().map(|e| rf(e)).collect();
    let err = invert(&images, &Var::PHASE).unwrap_err();
    assert!(matches!(err, CoreError::NotInvertible(_)));
}

#[test]
fn unknown_chart() {
    assert!(matches!(chart(SystemId::D52, "r5"), Err(CoreError::Usage(_))));
    assert!(chart_ids(SystemId::D51).is_empty());
}
