use cp3_algebra::{rf, Var};
use cp3_core::system::*;
use cp3_core::{Status, SystemId};

#[test]
fn constraints() {
    let rel = |id| build_system(id).constraint.relation().to_string();
    assert_eq!(build_system(SystemId::D6).constraint, cp3_algebra::Constraint::linear(
        &[(1, Var::alpha(0)), (1, Var::alpha(1)), (2, Var::alpha(2)), (2, Var::alpha(3)), (2, Var::alpha(4)), (1, Var::alpha(5)), (1, Var::alpha(6))],
        1,
        Var::alpha(6),
    )
    .unwrap());
    assert!(rel(SystemId::B5).contains("2*a0"));
    assert_eq!(build_system(SystemId::D52).params.len(), 5);
}

#[test]
fn printed_fields_match_except_d6_dx() {
    let mut failing = Vec::new();
    let mut total = 0;
    for id in [SystemId::D6, SystemId::B5, SystemId::D52] {
        for c in vector_field_checks(id) {
            total += 1;
            if c.status != Status::Pass {
                failing.push(c.name);
            }
        }
    }
    assert_eq!(total, 18);
    assert_eq!(failing, vec!["d6 dx/dt"]);
}

#[test]
fn derived_components() {
    let f = build_system(SystemId::D6).vector_field().components;
    let c = build_system(SystemId::D6).constraint;
    assert!(c.equals_mod(&f[1], &rf("(-2*x*y^2 + 2*x*y - (a0+a1)*y + a1)/t")));
    let b5 = build_system(SystemId::B5);
    let f = b5.vector_field().components;
    assert!(b5.constraint.equals_mod(&f[5], &rf("(-2*q*p^2 + 2*t*q*p + 2*(a0+a1+a2+a3)*p + t*a4)/t")));
}

#[test]
fn hamiltonians_have_degree_four() {
    for id in SystemId::ALL {
        assert_eq!(build_system(id).phase_degree(), 4, "{id}");
    }
}

#[test]
fn decompositions_hold() {
    for id in [SystemId::D6, SystemId::B5, SystemId::D52] {
        let c = decomposition_check(id).unwrap();
        assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.witness);
    }
    assert!(decomposition_check(SystemId::D51).is_none());
}

#[test]
fn scalar_reduction_coefficients() {
    let r = scalar_piii_reduction();
    assert_eq!(r.a, rf("-8"));
    assert_eq!(r.b, rf("4*(1-b1)"));
    assert!(r.c.is_zero());
    assert_eq!(r.d, rf("-4"));
    assert!(scalar_piii_checks().iter().all(|c| c.status == Status::Pass));
}

#[test]
fn hamilton_equations_are_canonical() {
    let h = rf("x^2*y + t*y^3");
    let f = hamilton_equations(&h, &[(Var::X, Var::Y)]).components;
    assert_eq!(f[0], rf("x^2 + 3*t*y^2"));
    assert_eq!(f[1], rf("-2*x*y"));
}

#[test]
fn subsystems() {
    assert_eq!(subsystem(Subsystem::H5).params, vec![Var::AL]);
    assert_eq!(subsystem(Subsystem::HIII).gamma1().unwrap(), rf("(1-g0-g2)/2"));
    assert_eq!("k2".parse::<Subsystem>().unwrap(), Subsystem::K2);
    let h = subsystem(Subsystem::H4).instantiate((Var::Z, Var::W), &[rf("a3")]);
    assert_eq!(h, rf("(z^2*w^2 + a3*z*w)/(2*t)"));
}

#[test]
fn system_ids_parse() {
    assert_eq!("D52".parse::<SystemId>().unwrap(), SystemId::D52);
    assert!("e8".parse::<SystemId>().is_err());
}
