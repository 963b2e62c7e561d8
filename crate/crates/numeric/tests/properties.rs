use cp3_core::SystemId;
use cp3_numeric::*;
use num_complex::Complex;
use proptest::prelude::*;

/// D6 parameters with a6 solved from the constraint.
fn d6_params() -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec(-0.5f64..0.5, 6).prop_map(|mut a| {
        let w = [1.0, 1.0, 2.0, 2.0, 2.0, 1.0];
        let s: f64 = a.iter().zip(w).map(|(x, w)| x * w).sum();
        a.push(1.0 - s);
        a.into_iter().map(|x| C64::new(x, 0.0)).collect()
    })
}

fn state() -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-0.5f64..0.5, -0.5f64..0.5).prop_map(|(r, i)| C64::new(r, i)), 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn round_trip_within_ten_tolerances(p in d6_params(), y0 in state()) {
        let flow = Flow::system(SystemId::D6, &p).unwrap();
        let cfg = Config64::default();
        let there = integrate(&flow, &y0, 1.0, 1.2, &cfg, None).unwrap();
        let back = integrate(&flow, there.last(), 1.2, 1.0, &cfg, None).unwrap();
        let scale = there.states.iter().flatten().map(|z| z.norm()).fold(1.0, f64::max);
        for (u, v) in back.last().iter().zip(&y0) {
            prop_assert!((u - v).norm() < 10.0 * (cfg.rel_tol * scale + cfg.abs_tol), "{u} vs {v}");
        }
    }

    #[test]
    fn trajectories_are_monotone_and_finite(p in d6_params(), y0 in state(), back in any::<bool>()) {
        let flow = Flow::system(SystemId::D6, &p).unwrap();
        let (t0, t1) = if back { (-1.0, -1.3) } else { (1.0, 1.3) };
        let tr = integrate(&flow, &y0, t0, t1, &Config64::default(), None).unwrap();
        prop_assert_eq!(tr.end_time(), t1);
        prop_assert!(tr.times.windows(2).all(|w| (w[1] - w[0]) * (t1 - t0) > 0.0));
        prop_assert!(tr.states.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite()));
    }

    #[test]
    fn single_precision_tracks_double(y0 in state()) {
        let p: Vec<C64> = [0.3, 0.2, 0.15, -0.1, 0.05, 0.1, 0.2].iter().map(|&x| C64::new(x, 0.0)).collect();
        let p32: Vec<Complex<f32>> = p.iter().map(|z| Complex::new(z.re as f32, z.im as f32)).collect();
        let y32: Vec<Complex<f32>> = y0.iter().map(|z| Complex::new(z.re as f32, z.im as f32)).collect();
        let cfg32 = NumericConfig::<f32> { rel_tol: 1e-5, abs_tol: 1e-6, min_step: 1e-6, ..Default::default() };
        let a = integrate(&Flow::system(SystemId::D6, &p).unwrap(), &y0, 1.0, 1.1, &Config64::default(), None).unwrap();
        let b = integrate(&Flow::<f32>::system(SystemId::D6, &p32).unwrap(), &y32, 1.0, 1.1, &cfg32, None).unwrap();
        for (u, v) in a.last().iter().zip(b.last()) {
            prop_assert!((u - C64::new(v.re as f64, v.im as f64)).norm() < 1e-3);
        }
    }
}
