use cp3_core::solutions::IntegralId;
use cp3_core::weyl::roster_names;
use cp3_core::{Status, Subsystem, SystemId};
use cp3_numeric::*;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn cs(v: &[f64]) -> Vec<C64> {
    v.iter().map(|&x| c(x)).collect()
}

fn alg1() -> (Flow64, Vec<C64>) {
    let a3 = 0.25;
    let h = (1.0 - 2.0 * a3) / 2.0;
    let flow = Flow::system(SystemId::D6, &cs(&[h, 0.0, 0.0, a3, 0.0, 0.0, h])).unwrap();
    (flow, cs(&[1.0, 0.0, 1.0, -a3 / 2.0, 1.0, 0.0]))
}

fn d6_generic() -> (Vec<C64>, Vec<C64>) {
    let p = cs(&[0.3, 0.2, 0.15, -0.1, 0.05, 0.1, 0.2]);
    let y = vec![
        C64::new(0.3, 0.1),
        C64::new(0.4, -0.2),
        C64::new(-0.2, 0.3),
        C64::new(0.5, 0.1),
        C64::new(0.7, -0.1),
        C64::new(0.6, 0.2),
    ];
    (p, y)
}

#[test]
fn algebraic_solution_reaches_two() {
    let (flow, y0) = alg1();
    let tr = integrate(&flow, &y0, 1.0, 4.0, &Config64::default(), None).unwrap();
    let x = tr.last()[0];
    assert!((x - c(2.0)).norm() < 1e-8, "x(4) = {x}");
    let sq = 2.0f64;
    let expect = [sq, 0.0, sq, -0.125 / sq, 1.0 / sq, 0.0];
    for (z, e) in tr.last().iter().zip(expect) {
        assert!((z - c(e)).norm() < 1e-8);
    }
    assert!(tr.times.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn fixed_solution_stays_put() {
    let (a2, a3, a4, a6) = (0.1, 0.2, -0.15, 0.05);
    let a0 = 0.5 - a2 - a3 - a4 - a6;
    let flow = Flow::system(SystemId::D6, &cs(&[a0, a0, a2, a3, a4, a6, a6])).unwrap();
    let tr = integrate(&flow, &cs(&[0.0, 0.5, 0.0, 0.0, 0.0, 0.5]), 1.0, 10.0, &Config64::default(), None).unwrap();
    for (t, y) in tr.times.iter().zip(&tr.states) {
        let expect = [0.0, 0.5, 0.0, 0.0, 0.0, t / 2.0];
        for (z, e) in y.iter().zip(expect) {
            assert!((z - c(e)).norm() < 1e-10, "t = {t}");
        }
    }
}

#[test]
fn zero_length_integration_is_the_initial_point() {
    let (p, y0) = d6_generic();
    let flow = Flow::system(SystemId::D6, &p).unwrap();
    let tr = integrate(&flow, &y0, 1.0, 1.0, &Config64::default(), None).unwrap();
    assert_eq!(tr.times, vec![1.0]);
    assert_eq!(tr.states, vec![y0]);
    assert_eq!(tr.accepted, 0);
}

#[test]
fn integration_runs_backwards() {
    let (flow, _) = alg1();
    let y4 = cs(&[2.0, 0.0, 2.0, -0.0625, 0.5, 0.0]);
    let tr = integrate(&flow, &y4, 4.0, 1.0, &Config64::default(), None).unwrap();
    assert!((tr.last()[0] - c(1.0)).norm() < 1e-8);
    assert!(tr.times.windows(2).all(|w| w[1] < w[0]));
}

#[test]
fn round_trip_returns_home() {
    let (p, y0) = d6_generic();
    let flow = Flow::system(SystemId::D6, &p).unwrap();
    let cfg = Config64::default();
    let there = integrate(&flow, &y0, 1.0, 1.5, &cfg, None).unwrap();
    let back = integrate(&flow, there.last(), 1.5, 1.0, &cfg, None).unwrap();
    let scale = y0.iter().map(|z| z.norm()).fold(1.0, f64::max);
    for (u, v) in back.last().iter().zip(&y0) {
        assert!((u - v).norm() < 10.0 * cfg.rel_tol * scale + 10.0 * cfg.abs_tol, "{u} vs {v}");
    }
}

#[test]
fn halving_the_step_gains_the_fifth_order_factor() {
    let (flow, y0) = alg1();
    let err = |n| (integrate_fixed(&flow, &y0, 1.0, 4.0, n, 1e-9).unwrap()[0] - c(2.0)).norm();
    let (e1, e2, e3) = (err(20), err(40), err(80));
    // nominal factor 2^5 = 32; allow for pre-asymptotic slack
    assert!(e1 / e2 > 16.0 && e2 / e3 > 16.0, "{e1:e} {e2:e} {e3:e}");
}

#[test]
fn tighter_tolerance_gives_smaller_error() {
    let (flow, y0) = alg1();
    let err = |tol| {
        let tr = integrate(&flow, &y0, 1.0, 4.0, &Config64::with_tol(tol), None).unwrap();
        ((tr.last()[0] - c(2.0)).norm(), tr.accepted)
    };
    let (e_loose, n_loose) = err(1e-6);
    let (e_tight, n_tight) = err(1e-6 / 32.0);
    assert!(e_tight < e_loose, "{e_tight:e} !< {e_loose:e}");
    assert!(n_tight > n_loose);
}

#[test]
fn crossing_the_origin_is_refused() {
    let (flow, y0) = alg1();
    let e = integrate(&flow, &y0, 1.0, -1.0, &Config64::default(), None).unwrap_err();
    assert!(matches!(e, NumericError::CrossesOrigin { .. }));
    assert!(integrate(&flow, &y0, 0.0, 1.0, &Config64::default(), None).is_err());
}

#[test]
fn constraint_and_arity_are_validated() {
    let e = Flow::<f64>::system(SystemId::D6, &cs(&[0.2; 7])).unwrap_err();
    assert!(matches!(e, NumericError::Constraint(_)));
    let e = Flow::<f64>::system(SystemId::D6, &cs(&[0.1; 3])).unwrap_err();
    assert!(matches!(e, NumericError::Arity { expected: 7, got: 3 }));
    let bad = Config64 { min_step: 1.0, max_step: 0.1, ..Default::default() };
    let (flow, y0) = alg1();
    assert!(matches!(integrate(&flow, &y0, 1.0, 2.0, &bad, None), Err(NumericError::Config(_))));
}

#[test]
fn pole_guard_stops_at_a_denominator() {
    // s0 of A1 divides by q; start on q = 0
    let e = symmetry_commute_check(SystemId::A1D7, "s0", &cs(&[0.3, 0.7]), &cs(&[0.0, 0.5]), 1.0, 1.2, &Config64::default())
        .unwrap_err();
    assert!(matches!(e, NumericError::Pole { .. }), "{e}");
}

#[test]
fn d6_generators_commute_with_the_flow() {
    let (p, y0) = d6_generic();
    for name in roster_names(SystemId::D6) {
        let r = symmetry_commute_check(SystemId::D6, name, &p, &y0, 1.0, 1.3, &Config64::default()).unwrap();
        assert_eq!(r.check.status, Status::Pass, "{}: {}", r.check.name, r.check.witness);
    }
}

#[test]
fn d52_s4_commutes_through_reflected_time() {
    let p = cs(&[0.2, 0.15, 0.3, 0.1, 0.25]);
    let y0 = vec![
        C64::new(0.3, 0.1),
        C64::new(0.4, -0.2),
        C64::new(-0.2, 0.3),
        C64::new(0.5, 0.1),
        C64::new(0.7, -0.1),
        C64::new(0.6, 0.2),
    ];
    let r = symmetry_commute_check(SystemId::D52, "s4", &p, &y0, 1.0, 1.3, &Config64::default()).unwrap();
    assert_eq!(r.check.status, Status::Pass, "{}", r.check.witness);
}

#[test]
fn identity_commutes_to_reproducibility() {
    let (p, y0) = d6_generic();
    let r = symmetry_commute_check(SystemId::D6, "id", &p, &y0, 1.0, 1.3, &Config64::default()).unwrap();
    assert!(r.discrepancy < 1e-13, "{:e}", r.discrepancy);
}

#[test]
fn first_integrals_do_not_drift() {
    let cfg = Config64::default();
    let cases = [
        (IntegralId::I3, vec![C64::new(0.3, 0.1)], 5.0),
        (IntegralId::I4, vec![C64::new(0.25, 0.0)], 10.0),
        (IntegralId::I5, vec![C64::new(0.3, -0.2)], 5.0),
        (IntegralId::I3, vec![C64::new(-0.4, 0.2)], 10.0),
        (IntegralId::I5, vec![C64::new(0.1, 0.1)], 10.0),
    ];
    for (id, params, t1) in cases {
        let r = integral_drift_check(id, &params, &[C64::new(0.4, 0.1), C64::new(0.3, -0.2)], 1.0, t1, &cfg).unwrap();
        assert_eq!(r.check.status, Status::Pass, "{}: {}", r.check.name, r.check.witness);
    }
}

#[test]
fn subsystem_flow_matches_its_equations() {
    // H4 = (q^2 p^2 + al q p)/(2t), so d(qp)/dt = 0 and q'/q = (2qp + al)/(2t)
    let flow = Flow::subsystem(Subsystem::H4, &[c(0.5)]).unwrap();
    let mut out = vec![C64::new(0.0, 0.0); 2];
    flow.eval_into(2.0, &cs(&[1.0, 0.5]), 1e-9, &mut out).unwrap();
    assert!((out[0] - c(1.5 / 4.0)).norm() < 1e-15);
    assert!((out[1] + c(0.5 * 1.5 / 4.0)).norm() < 1e-15);
}

#[test]
fn csv_export_has_one_row_per_state() {
    let (flow, y0) = alg1();
    let tr = integrate(&flow, &y0, 1.0, 2.0, &Config64::with_tol(1e-6), None).unwrap();
    let mut buf = Vec::new();
    write_csv(&tr, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,x_re,x_im,y_re,y_im,z_re,z_im,w_re,w_im,q_re,q_im,p_re,p_im");
    assert_eq!(lines.count(), tr.times.len());
}
