//! Regression depths as location depths of the origin, equivariance,
//! deepest fits and surfaces.

mod common;

use common::{halfspace_oracle, normal, rng, simplicial_oracle};
use proptest::prelude::*;
use regdepth::estimate::{deepest_fit, ols, SearchSpec};
use regdepth::io::{gen_synthetic, SyntheticConfig};
use regdepth::regression::{
    hrd, hrd_direct, hyperplane_fraction, prd, rdepth, rrd, srd, zrd, RegressionEvaluator,
};
use regdepth::surface::{eval_surface, GridSpec};
use regdepth::{
    Coefficient, DepthError, MethodSpec, Notion, PointCloud, RegressionDataset, Witness,
};

fn half(v: i32) -> f64 {
    v as f64 / 2.0
}

/// Small simple-regression datasets on a half-integer lattice, with a
/// lattice coefficient, so residuals are exact and often zero.
fn lattice_problem() -> impl Strategy<Value = (RegressionDataset, Coefficient)> {
    (
        prop::collection::vec((-6i32..=6, -6i32..=6), 3..20),
        -4i32..=4,
        -2i32..=2,
    )
        .prop_map(|(pts, b0, b1)| {
            let x: Vec<f64> = pts.iter().map(|p| half(p.0)).collect();
            let y: Vec<f64> = pts.iter().map(|p| half(p.1)).collect();
            (
                RegressionDataset::from_xy(&x, &y).unwrap(),
                Coefficient::new(half(b0), &[b1 as f64]).unwrap(),
            )
        })
}

/// `r_i (1, x_i)` computed independently of the library.
fn lifted_residuals(ds: &RegressionDataset, theta: &Coefficient) -> PointCloud {
    let rows: Vec<[f64; 2]> = (0..ds.n())
        .map(|i| {
            let x = ds.x()[i];
            let r = ds.y()[i] - theta.beta0() - theta.beta1()[0] * x;
            [r, r * x]
        })
        .collect();
    PointCloud::from_rows(&rows).unwrap()
}

fn synthetic() -> RegressionDataset {
    gen_synthetic(&SyntheticConfig::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn halfspace_regression_depth_is_location_depth_of_origin((ds, theta) in lattice_problem()) {
        let z = lifted_residuals(&ds, &theta);
        let expected = halfspace_oracle(&z, &[0.0, 0.0]);
        prop_assert_eq!(hrd(&ds, &theta, &MethodSpec::exact2d()).unwrap().value, expected);
        let direct = hrd_direct(&ds, &theta).unwrap();
        prop_assert_eq!(direct.value, expected);
        match direct.witness {
            Some(Witness::Hyperplane(w)) => {
                prop_assert_eq!(hyperplane_fraction(&ds, &theta, &w).unwrap(), expected);
            }
            other => prop_assert!(false, "unexpected witness {:?}", other),
        }
    }

    #[test]
    fn simplicial_regression_depth_is_location_depth_of_origin((ds, theta) in lattice_problem()) {
        let z = lifted_residuals(&ds, &theta);
        prop_assert_eq!(
            srd(&ds, &theta, &MethodSpec::exact2d()).unwrap().value,
            simplicial_oracle(&z, &[0.0, 0.0])
        );
    }

    #[test]
    fn evaluator_matches_direct_calls((ds, theta) in lattice_problem()) {
        for notion in Notion::ALL {
            let m = MethodSpec::auto();
            let a = rdepth(notion, &ds, &theta, &m);
            let b = RegressionEvaluator::new(&ds, notion, &m).and_then(|ev| ev.depth(&theta));
            match (a, b) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(_), Err(_)) => {}
                (a, b) => prop_assert!(false, "{:?}: {:?} vs {:?}", notion, a, b),
            }
        }
    }

    #[test]
    fn non_dyadic_covariate_scaling(a in 0.3f64..5.0, seed in any::<u64>()) {
        // rounding breaks exact equality; the values agree to 1e-12
        let ds = synthetic();
        let mut r = rng(seed);
        let theta = Coefficient::new(0.5 + normal(&mut r), &[0.5 + normal(&mut r)]).unwrap();
        let ds2 = ds.transform_covariates(&[a]).unwrap();
        let t2 = Coefficient::new(theta.beta0(), &[theta.beta1()[0] / a]).unwrap();
        prop_assert!((rrd(&ds, &theta).unwrap().value - rrd(&ds2, &t2).unwrap().value).abs() <= 1e-12);
        prop_assert!((zrd(&ds, &theta).unwrap().value - zrd(&ds2, &t2).unwrap().value).abs() <= 1e-12);
    }
}

#[test]
fn multiple_regression_depths() {
    let mut r = rng(21);
    let n = 40;
    let x: Vec<f64> = (0..2 * n).map(|_| normal(&mut r)).collect();
    let y: Vec<f64> = (0..n)
        .map(|i| 1.0 + x[2 * i] - x[2 * i + 1] + 0.3 * normal(&mut r))
        .collect();
    let ds = RegressionDataset::new(x, y, 2).unwrap();
    let theta = ols(&ds).unwrap();
    let m = MethodSpec::sampled(4000, 1);
    assert!((zrd(&ds, &theta).unwrap().value - 1.0).abs() < 1e-9);
    assert!((rrd(&ds, &theta).unwrap().value - 1.0).abs() < 1e-12);
    assert!(hrd(&ds, &theta, &m).unwrap().value > 0.3);
    assert!(prd(&ds, &theta, &m).unwrap().value > 0.5);
    assert!(matches!(
        hrd_direct(&ds, &theta),
        Err(DepthError::MethodMismatch { .. })
    ));
    let far = Coefficient::new(50.0, &[50.0, -50.0]).unwrap();
    assert_eq!(zrd(&ds, &far).unwrap().value, 0.0);
}

#[test]
fn coefficient_length_is_checked() {
    let ds = synthetic();
    let bad = Coefficient::new(0.0, &[1.0, 2.0]).unwrap();
    for notion in Notion::ALL {
        assert!(rdepth(notion, &ds, &bad, &MethodSpec::auto()).is_err());
    }
}

#[test]
fn deepest_fit_reports_the_depth_of_its_estimate() {
    let ds = synthetic();
    for notion in [Notion::Halfspace, Notion::Rayleigh, Notion::Zonoid] {
        let fit = deepest_fit(&ds, &SearchSpec::new(notion).with_resolution(21, 2)).unwrap();
        let again = rdepth(notion, &ds, &fit.theta_star, &MethodSpec::auto()).unwrap();
        assert_eq!(fit.depth.value, again.value, "{notion:?}");
        assert!(!fit.on_boundary);
        assert_eq!(fit.levels.len(), 3);
        assert!(fit.levels.windows(2).all(|w| w[1].best >= w[0].best));
    }
}

#[test]
fn deepest_fit_flags_a_box_that_misses_the_optimum() {
    let ds = synthetic();
    let spec = SearchSpec::new(Notion::Rayleigh)
        .with_box([2.0, 3.0], [2.0, 3.0])
        .with_resolution(11, 1);
    assert!(deepest_fit(&ds, &spec).unwrap().on_boundary);
}

#[test]
fn surface_nodes_are_rdepth_values() {
    let ds = synthetic();
    let g = GridSpec::new((0.2, 0.8, 7), (0.1, 0.9, 5)).unwrap();
    for notion in Notion::ALL {
        let m = MethodSpec::auto();
        let s = eval_surface(&ds, notion, &m, &g).unwrap();
        for i in 0..7 {
            for j in 0..5 {
                let theta = Coefficient::new(g.beta0_at(i), &[g.beta1_at(j)]).unwrap();
                assert_eq!(
                    s.value(i, j),
                    rdepth(notion, &ds, &theta, &m).unwrap().value
                );
            }
        }
    }
    assert_eq!(g.beta0_at(6), 0.8);
    assert_eq!(g.beta1_at(4), 0.9);
}

#[test]
fn bruteforce_surface_hits_the_cost_guard() {
    let ds = synthetic();
    let g = GridSpec::square(0.0, 1.0, 101).unwrap();
    let err = eval_surface(&ds, Notion::Simplicial, &MethodSpec::bruteforce(), &g).unwrap_err();
    assert!(matches!(err, DepthError::CostGuard { .. }));
}
