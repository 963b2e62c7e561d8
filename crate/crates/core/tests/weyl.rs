use cp3_algebra::RatFn;
use cp3_core::weyl::*;
use cp3_core::{build_system, Status, SystemId};

#[test]
fn cartan_matrices_have_the_expected_bonds() {
    let bonds = |id| {
        cartan_data(id)
            .bonds()
            .into_iter()
            .map(|(i, j, m)| (i, j, m.map_or(0, |m| m)))
            .collect::<Vec<_>>()
    };
    assert_eq!(bonds(SystemId::D6), vec![(0, 2, 3), (1, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (4, 6, 3)]);
    assert_eq!(bonds(SystemId::B5), vec![(0, 1, 4), (1, 2, 3), (2, 3, 3), (3, 4, 3), (3, 5, 3)]);
    assert_eq!(bonds(SystemId::D52), vec![(0, 1, 4), (1, 2, 3), (2, 3, 3), (3, 4, 4)]);
    assert_eq!(bonds(SystemId::D51), vec![(0, 2, 3), (1, 2, 3), (2, 3, 3), (3, 4, 3), (3, 5, 3)]);
    // c01·c10 = 4: no braid relation
    assert_eq!(bonds(SystemId::A1D7), vec![(0, 1, 0)]);
}

#[test]
fn relation_counts() {
    let count = |id| relation_suite(id).iter().filter(|r| matches!(r, Relation::Involution(_) | Relation::Braid(..))).count();
    let counts: Vec<usize> = SystemId::ALL.iter().map(|&id| count(id)).collect();
    assert_eq!(counts, vec![28, 21, 15, 21, 2]);
}

#[test]
fn relations_hold_for_every_system() {
    for id in SystemId::ALL {
        for c in verify_relations(id) {
            assert!(!c.is_fail(), "{}: {}", c.name, c.witness);
        }
    }
}

#[test]
fn diagram_automorphisms_are_involutions_permuting_nodes() {
    let checks = verify_relations(SystemId::D6);
    let get = |n: &str| checks.iter().find(|c| c.name == n).unwrap().witness.clone();
    assert_eq!(get("d6 order of pi2"), "2");
    assert_eq!(get("d6 pi2 s_i pi2^-1"), "s0->s6 s1->s5 s2->s4 s3->s3 s4->s2 s5->s1 s6->s0");
    let d52 = verify_relations(SystemId::D52);
    let pi = d52.iter().find(|c| c.name == "d52 pi s_i pi^-1").unwrap();
    assert_eq!(pi.witness, "s0->s4 s1->s3 s2->s2 s3->s1 s4->s0");
}

#[test]
fn main_rosters_are_symmetries() {
    for id in SystemId::MAIN {
        for name in symmetry_roster(id) {
            let c = verify_symmetry(id, name).unwrap();
            assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.witness);
        }
    }
}

#[test]
fn a1_sigma_is_a_symmetry_of_order_two() {
    assert_eq!(verify_symmetry(SystemId::A1D7, "sigma").unwrap().status, Status::Pass);
    let sys = build_system(SystemId::A1D7);
    assert_eq!(order(&generator(SystemId::A1D7, "sigma").unwrap(), &sys.constraint).unwrap(), Some(2));
}

#[test]
fn a1_printed_reflections_do_not_preserve_the_flow() {
    for name in ["s0", "s1"] {
        assert_eq!(verify_symmetry(SystemId::A1D7, name).unwrap().status, Status::Fail);
    }
}

#[test]
fn unknown_names_are_usage_errors() {
    assert!(generator(SystemId::D6, "s7").is_err());
    assert!(word(SystemId::B5, "s0 pi2").is_err());
    assert!(translation(SystemId::D52, "T9").is_err());
}

#[test]
fn b5_and_d52_translations_match_their_shifts() {
    for id in [SystemId::B5, SystemId::D52] {
        for c in verify_translations(id) {
            assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.witness);
        }
    }
}

#[test]
fn printed_d6_t1_word_is_not_a_translation() {
    let c = verify_translations(SystemId::D6);
    assert_eq!(c[0].status, Status::Fail);
}

#[test]
fn d6_t1_with_s2_in_the_middle_gives_the_whole_table() {
    let t1 = "pi1 s5 s4 s3 s2 s1 s0 s2 s3 s4 s5";
    let words = [
        t1.to_string(),
        format!("s4 s6 {t1} s6 s4"),
        format!("s6 {t1} s6"),
        format!("pi2 {t1} pi2"),
        format!("pi2 s4 s6 {t1} s6 s4 pi2"),
        format!("pi2 s6 {t1} s6 pi2"),
    ];
    for (w, t) in words.iter().zip(translations(SystemId::D6)) {
        let shift = param_shift_of(SystemId::D6, w).unwrap();
        let want: Vec<RatFn> = t.printed_shift.iter().map(|&k| RatFn::from_i64(k)).collect();
        assert_eq!(shift, want, "{}", t.name);
    }
}

#[test]
fn translations_commute_as_parameter_maps() {
    let sys = build_system(SystemId::B5);
    let ts = translations(SystemId::B5);
    for a in &ts {
        for b in &ts {
            let ab = word_param_action(SystemId::B5, &format!("{} {}", a.word, b.word)).unwrap();
            let ba = word_param_action(SystemId::B5, &format!("{} {}", b.word, a.word)).unwrap();
            for (x, y) in ab.iter().zip(&ba) {
                assert!(sys.constraint.equals_mod(x, y), "{} {}", a.name, b.name);
            }
        }
    }
}

#[test]
fn short_words_act_on_phase_space_as_symmetries() {
    let sys = build_system(SystemId::B5);
    let t = word(SystemId::B5, "s3 s4").unwrap();
    let r = symmetry_residuals(&sys, &t).unwrap();
    assert!(r.iter().all(|r| r.is_zero()));
}
