use cp3_algebra::rf;
use cp3_core::confluence::*;
use cp3_core::Status;

fn status_of(checks: &[cp3_core::Check], name: &str) -> Status {
    checks.iter().find(|c| c.name == name).unwrap_or_else(|| panic!("no check {name}")).status
}

#[test]
fn d6_to_b5_limit_is_exact() {
    let checks = degenerate(DegenerationId::D6ToB5).unwrap();
    assert_eq!(checks.len(), 7);
    for c in &checks {
        assert_eq!(c.status, Status::Pass, "{}: {}", c.name, c.witness);
    }
    let lim = limit_field(DegenerationId::D6ToB5).unwrap();
    assert_eq!(lim[1], rf("(-2*X*Y^2 - 2*A0*Y - 1)/T"));
}

#[test]
fn d6_to_d52_has_no_poles_and_one_mismatched_component() {
    let d = degeneration(DegenerationId::D6ToD52);
    for (i, terms) in d.transformed_field().unwrap().iter().enumerate() {
        for (k, c) in terms.range(..0) {
            assert!(d.target_constraint.reduce(c).is_zero(), "component {i} eps^{k}");
        }
    }
    let checks = degenerate(DegenerationId::D6ToD52).unwrap();
    let failing: Vec<&str> = checks.iter().filter(|c| c.is_fail()).map(|c| c.name.as_str()).collect();
    assert_eq!(failing, vec!["D6_to_D52 dY/dT"]);
    let lim = limit_field(DegenerationId::D6ToD52).unwrap();
    assert_eq!(lim[1], rf("(-2*X*Y^2 - 2*A0*Y + 1)/(2*T)"));
}

#[test]
fn degeneration_ids_parse() {
    assert_eq!("d6_to_b5".parse::<DegenerationId>().unwrap(), DegenerationId::D6ToB5);
    assert!("d6_to_d51".parse::<DegenerationId>().is_err());
}

#[test]
fn b5_to_d51_leaves_a_residual_in_one_component() {
    let r = b5_to_d51_residuals().unwrap();
    assert_eq!(r[0], rf("(A0 - A1)/t"));
    assert!(r[1..].iter().all(|r| r.is_zero()));
    let checks = equivalence_b5_to_d51().unwrap();
    assert_eq!(status_of(&checks, "B5_to_D51 symplectic"), Status::Pass);
    assert_eq!(status_of(&checks, "B5_to_D51 constraint"), Status::Pass);
}

#[test]
fn tr1_and_tr2_carry_flows_and_tr5_shifts_the_parameter() {
    for tr in [TrId::Tr1, TrId::Tr2] {
        let checks = symplectic_tr(tr).unwrap();
        assert!(checks.iter().all(|c| !c.is_fail()), "{checks:?}");
    }
    let tr5 = symplectic_tr(TrId::Tr5).unwrap();
    assert_eq!(status_of(&tr5, "tr5 H5->K5 flow"), Status::Fail);
    assert_eq!(status_of(&tr5, "tr5 symplectic"), Status::Pass);
}

#[test]
fn bare_substitutions() {
    assert_eq!(bare_substitution_residual(TrId::Tr1).unwrap(), rf("q*p/t"));
    assert_eq!(bare_substitution_residual(TrId::Tr2).unwrap(), rf("q*p/t"));
    assert!(bare_substitution_residual(TrId::Tr5).unwrap().is_zero());
}

#[test]
fn uv_map_is_a_symplectic_involution_between_the_two_flows() {
    let checks = verify_uv_correspondence().unwrap();
    assert_eq!(status_of(&checks, "uv HIII->HtildeIII flow"), Status::Pass);
    assert_eq!(status_of(&checks, "uv symplectic"), Status::Pass);
    let order = checks.iter().find(|c| c.name == "uv order").unwrap();
    assert_eq!(order.witness, "2");
}

#[test]
fn a1_suite() {
    let checks = verify_a1_symmetry().unwrap();
    assert_eq!(status_of(&checks, "a1d7 sigma symmetry"), Status::Pass);
    assert_eq!(status_of(&checks, "a1d7 s0^2 = id"), Status::Pass);
    assert_eq!(status_of(&checks, "a1d7 s1^2 = id"), Status::Pass);
    assert_eq!(status_of(&checks, "a1d7 sigma symplectic"), Status::Pass);
    assert_eq!(status_of(&checks, "a1d7 s0 symmetry"), Status::Fail);
    assert_eq!(status_of(&checks, "a1d7 s1 symmetry"), Status::Fail);
}
