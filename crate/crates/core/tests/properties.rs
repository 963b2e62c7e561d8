use cp3_algebra::{RatFn, Var};
use cp3_core::charts::invert;
use cp3_core::weyl::*;
use cp3_core::{build_system, SystemId};
use proptest::prelude::*;

fn system() -> impl Strategy<Value = SystemId> {
    prop::sample::select(SystemId::MAIN.to_vec())
}

fn system_and_letters(n: usize) -> impl Strategy<Value = (SystemId, Vec<&'static str>)> {
    system().prop_flat_map(move |id| {
        let names = roster_names(id);
        (Just(id), prop::collection::vec(prop::sample::select(names), n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_is_associative((id, l) in system_and_letters(3)) {
        let sys = build_system(id);
        let c = Some(&sys.constraint);
        let g = |n: &str| generator(id, n).unwrap();
        let (f, g1, h) = (g(l[0]), g(l[1]), g(l[2]));
        let left = f.compose(&g1, c).unwrap().compose(&h, c).unwrap();
        let right = f.compose(&g1.compose(&h, c).unwrap(), c).unwrap();
        prop_assert!(left.same_as(&right, c));
    }

    #[test]
    fn reversed_word_is_the_inverse((id, l) in system_and_letters(3)) {
        // every roster generator has order two
        let sys = build_system(id);
        let w = word(id, &l.join(" ")).unwrap();
        let rev: Vec<&str> = l.iter().rev().copied().collect();
        let back = word(id, &rev.join(" ")).unwrap();
        prop_assert!(w.compose(&back, Some(&sys.constraint)).unwrap().is_identity(Some(&sys.constraint)));
    }

    #[test]
    fn short_words_are_symmetries((id, l) in system_and_letters(2)) {
        let sys = build_system(id);
        let w = word(id, &l.join(" ")).unwrap();
        let r = symmetry_residuals(&sys, &w).unwrap();
        prop_assert!(r.iter().all(RatFn::is_zero), "{id} {l:?}");
    }

    #[test]
    fn parameter_action_is_affine_with_integer_translation_part((id, l) in system_and_letters(5)) {
        let sys = build_system(id);
        let act = word_param_action(id, &l.join(" ")).unwrap();
        for e in &act {
            prop_assert!(e.den().is_constant());
            for &v in &sys.params {
                prop_assert!(e.derivative(v).is_constant());
            }
        }
    }

    #[test]
    fn moebius_charts_round_trip(a in -5i64..5, b in -5i64..5, c in -5i64..5, d in -5i64..5, k in 1i64..4) {
        prop_assume!(a * d - b * c != 0);
        let x = RatFn::var(Var::X);
        let y = RatFn::var(Var::Y);
        let num = &(&RatFn::from_i64(a) * &x) + &RatFn::from_i64(b);
        let den = &(&RatFn::from_i64(c) * &x) + &RatFn::from_i64(d);
        // x' Möbius in x, y' sheared by a function of x
        let xi = num.div_ref(&den).unwrap();
        let yi = &y + &(&RatFn::from_i64(k) * &x.pow(2).unwrap());
        let inv = invert(&[xi.clone(), yi.clone()], &[Var::X, Var::Y]).unwrap();
        let back: cp3_algebra::Subst = [(Var::X, inv[0].clone()), (Var::Y, inv[1].clone())].into_iter().collect();
        prop_assert_eq!(xi.substitute(&back).unwrap(), RatFn::var(Var::BIG_X));
        prop_assert_eq!(yi.substitute(&back).unwrap(), RatFn::var(Var::BIG_Y));
    }
}
