use cp3_core::solutions::*;
use cp3_core::Status;

#[test]
fn d6_seeds_are_exact_solutions() {
    for id in [SeedId::D6Fixed, SeedId::D6Alg1, SeedId::D6Alg2] {
        for c in verify_seed(id).unwrap() {
            assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.witness);
        }
    }
}

#[test]
fn fixed_solution_is_fixed_by_pi1() {
    assert_eq!(pi1_fixed_point_check().unwrap().status, Status::Pass);
}

#[test]
fn perturbed_fixed_solution_is_rejected() {
    let c = perturbed_control().unwrap();
    assert_eq!(c.status, Status::Fail);
    assert!(c.witness.contains("dy/dt"), "{}", c.witness);
}

#[test]
fn quartic_root_solution_leaves_residuals_on_both_branches() {
    for plus in [true, false] {
        let sol = d52_branch(plus);
        assert!(sol.constraint_residual().unwrap().is_zero());
        assert!(sol.residuals().unwrap().iter().any(|r| !r.is_zero()));
    }
}

#[test]
fn seed_parameters_satisfy_the_constraint() {
    for id in SeedId::ALL {
        assert!(seed_solution(id).constraint_residual().unwrap().is_zero(), "{id}");
    }
}

#[test]
fn first_integrals_are_conserved() {
    for id in IntegralId::ALL {
        for c in verify_first_integral(id) {
            assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.witness);
        }
    }
    assert_eq!(verify_first_integral(IntegralId::I1).len(), 2);
    assert_eq!(verify_first_integral(IntegralId::I4).len(), 1);
}

#[test]
fn a_non_integral_is_caught() {
    let mut fi = first_integral(IntegralId::I4);
    fi.expression = cp3_algebra::rf("q + p");
    assert!(!time_derivative(&fi).is_zero());
}

#[test]
fn ids_parse() {
    assert_eq!("d6_ALG2".parse::<SeedId>().unwrap(), SeedId::D6Alg2);
    assert!("D6_alg3".parse::<SeedId>().is_err());
    assert_eq!("i5".parse::<IntegralId>().unwrap(), IntegralId::I5);
}
