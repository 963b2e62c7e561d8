use cp3_algebra::{
    equals_mod_constraint, Constraint, GaussianRational, Monomial, Poly, RatFn, Rational, Subst, Var,
    NVARS,
};
use proptest::prelude::*;

const VARS: [Var; 3] = [Var::X, Var::Y, Var::T];

fn coeff() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, prop_oneof![4 => Just(0i64), 1 => -2i64..=2], 1i64..=3).prop_map(|(re, im, d)| {
        GaussianRational::new(Rational::new(re, d), Rational::from_integer(im))
    })
}

fn poly(max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::array::uniform3(0u16..3), coeff()), 0..max_terms).prop_map(|ts| {
        Poly::from_terms(ts.into_iter().map(|(e, c)| {
            let mut exps = [0u16; NVARS];
            for (v, k) in VARS.iter().zip(e) {
                exps[v.index()] = k;
            }
            (Monomial::from_exps(exps), c)
        }))
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly(4).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfn() -> impl Strategy<Value = RatFn> {
    (poly(4), nonzero_poly()).prop_map(|(n, d)| RatFn::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn no_zero_terms_stored(a in poly(6), b in poly(6)) {
        let p = &(&a * &b) - &(&b * &a);
        prop_assert!(p.is_zero());
        for (_, c) in (&a * &b).terms() {
            prop_assert!(!num_traits::Zero::is_zero(c));
        }
    }

    #[test]
    fn exact_division_inverts_product(a in nonzero_poly(), b in nonzero_poly()) {
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b), Some(a));
    }

    #[test]
    fn gcd_divides_and_recovers_common_factor(a in nonzero_poly(), b in nonzero_poly(), g in nonzero_poly()) {
        let (ga, gb) = (&a * &g, &b * &g);
        let h = cp3_algebra::gcd(&ga, &gb);
        prop_assert!(ga.div_exact(&h).is_some());
        prop_assert!(gb.div_exact(&h).is_some());
        prop_assert!(h.div_exact(&g.monic()).is_some());
    }

    #[test]
    fn normalize_is_idempotent_and_canonical(f in ratfn()) {
        prop_assert_eq!(f.normalize(), f.clone());
        prop_assert!(num_traits::One::is_one(&f.den().leading_coeff()));
        prop_assert!(cp3_algebra::gcd(f.num(), f.den()).is_constant());
    }

    #[test]
    fn field_axioms(f in ratfn(), g in ratfn(), h in ratfn()) {
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        if !g.is_zero() {
            prop_assert_eq!(&(&f * &g) / &g, f.clone());
        }
    }

    #[test]
    fn leibniz_rule(f in ratfn(), g in ratfn()) {
        for v in VARS {
            let lhs = (&f * &g).derivative(v);
            let rhs = &(&f.derivative(v) * &g) + &(&f * &g.derivative(v));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn substitution_is_a_homomorphism(f in ratfn(), g in ratfn(), a in ratfn(), b in ratfn()) {
        let mut s = Subst::new();
        s.insert(Var::X, a);
        s.insert(Var::Y, b);
        let (fs, gs) = (f.substitute(&s), g.substitute(&s));
        let (Ok(fs), Ok(gs)) = (fs, gs) else { return Ok(()) };
        prop_assert_eq!((&f * &g).substitute(&s).unwrap(), &fs * &gs);
        prop_assert_eq!((&f + &g).substitute(&s).unwrap(), &fs + &gs);
    }

    #[test]
    fn constraint_equality_is_an_equivalence(
        c in prop::collection::vec(-3i64..=3, 3),
        d in prop::collection::vec(-3i64..=3, 3),
    ) {
        let ideal = d6_constraint();
        let affine = |k: &[i64]| {
            let mut f = RatFn::from_i64(k[0]);
            f = &f + &RatFn::var(Var::alpha(0)).scale(&GaussianRational::from(k[1]));
            &f + &RatFn::var(Var::alpha(6)).scale(&GaussianRational::from(k[2]))
        };
        let (a, b) = (affine(&c), affine(&d));
        prop_assert!(equals_mod_constraint(&a, &a, &ideal));
        prop_assert_eq!(equals_mod_constraint(&a, &b, &ideal), equals_mod_constraint(&b, &a, &ideal));
        if a == b {
            prop_assert!(equals_mod_constraint(&a, &b, &ideal));
        }
        // transitivity through the reduced representative
        let ra = ideal.reduce(&a);
        prop_assert!(equals_mod_constraint(&a, &ra, &ideal));
        prop_assert_eq!(equals_mod_constraint(&ra, &b, &ideal), equals_mod_constraint(&a, &b, &ideal));
    }
}

fn d6_constraint() -> Constraint {
    let a = Var::alpha;
    Constraint::linear(
        &[(1, a(0)), (1, a(1)), (2, a(2)), (2, a(3)), (2, a(4)), (1, a(5)), (1, a(6))],
        1,
        a(6),
    )
    .unwrap()
}
