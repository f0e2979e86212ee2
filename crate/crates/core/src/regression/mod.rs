//! Regression depths of a coefficient vector, each evaluated as a location
//! depth of the origin with respect to the transformed cloud.

mod halfspace;
mod projection;
mod rayleigh;

pub use halfspace::{hrd, hrd_direct, hyperplane_fraction};
pub use projection::{prd, prd_objective, PrdDenominatorCache, PrdEvaluator};
pub use rayleigh::{
    regression_rayleigh_summary, rrd, rrd_with_fallback, RegressionRayleighSummary,
};

use crate::data::{Coefficient, RegressionDataset};
use crate::directions::MethodSpec;
use crate::error::Result;
use crate::location::{simplicial_depth, zonoid_depth};
use crate::result::{DepthResult, Notion};
use crate::transform::transform_cloud;

/// Simplicial depth of the origin in the transformed cloud.
pub fn srd(ds: &RegressionDataset, theta: &Coefficient, m: &MethodSpec) -> Result<DepthResult> {
    let tc = transform_cloud(ds, theta)?;
    simplicial_depth(&tc.z, &vec![0.0; tc.z.d()], m)
}

/// Zonoid depth of the origin in the transformed cloud.
pub fn zrd(ds: &RegressionDataset, theta: &Coefficient) -> Result<DepthResult> {
    let tc = transform_cloud(ds, theta)?;
    zonoid_depth(&tc.z, &vec![0.0; tc.z.d()])
}

#[derive(Debug, Clone)]
enum Prepared<'a> {
    Halfspace,
    Simplicial,
    Projection(PrdEvaluator<'a>),
    Rayleigh(RegressionRayleighSummary),
    Zonoid,
}

/// Regression depth of one notion against a fixed dataset, with the
/// coefficient-free parts (projection scales, Rayleigh moments) computed once.
/// Results equal the corresponding free functions bitwise.
#[derive(Debug, Clone)]
pub struct RegressionEvaluator<'a> {
    ds: &'a RegressionDataset,
    spec: MethodSpec,
    prepared: Prepared<'a>,
}

impl<'a> RegressionEvaluator<'a> {
    pub fn new(ds: &'a RegressionDataset, notion: Notion, spec: &MethodSpec) -> Result<Self> {
        spec.validate()?;
        let prepared = match notion {
            Notion::Halfspace => Prepared::Halfspace,
            Notion::Simplicial => Prepared::Simplicial,
            Notion::Projection => Prepared::Projection(PrdEvaluator::new(ds, spec)?),
            Notion::Rayleigh => Prepared::Rayleigh(regression_rayleigh_summary(ds)?),
            Notion::Zonoid => Prepared::Zonoid,
        };
        Ok(Self {
            ds,
            spec: *spec,
            prepared,
        })
    }

    pub fn notion(&self) -> Notion {
        match self.prepared {
            Prepared::Halfspace => Notion::Halfspace,
            Prepared::Simplicial => Notion::Simplicial,
            Prepared::Projection(_) => Notion::Projection,
            Prepared::Rayleigh(_) => Notion::Rayleigh,
            Prepared::Zonoid => Notion::Zonoid,
        }
    }

    pub fn dataset(&self) -> &RegressionDataset {
        self.ds
    }

    pub fn spec(&self) -> &MethodSpec {
        &self.spec
    }

    pub fn depth(&self, theta: &Coefficient) -> Result<DepthResult> {
        match &self.prepared {
            Prepared::Halfspace => hrd(self.ds, theta, &self.spec),
            Prepared::Simplicial => srd(self.ds, theta, &self.spec),
            Prepared::Projection(e) => e.depth(theta),
            Prepared::Rayleigh(s) => rayleigh::rrd_from_summary(s, theta, Some(&self.spec)),
            Prepared::Zonoid => zrd(self.ds, theta),
        }
    }
}

/// Regression depth of `theta` under any notion. Rayleigh depth uses the
/// closed form, falling back to the direction set of `m` when the response
/// covariance is singular; zonoid depth ignores `m`.
pub fn rdepth(
    notion: Notion,
    ds: &RegressionDataset,
    theta: &Coefficient,
    m: &MethodSpec,
) -> Result<DepthResult> {
    RegressionEvaluator::new(ds, notion, m)?.depth(theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RegressionDataset {
        RegressionDataset::from_xy(
            &[0.3, -1.2, 0.8, 2.1, -0.4, 1.5, 0.9, -0.1],
            &[1.0, -0.5, 0.2, 2.4, 0.7, 0.1, 1.9, 0.3],
        )
        .unwrap()
    }

    #[test]
    fn exact_fit_is_deepest_for_every_notion() {
        let ds = RegressionDataset::from_xy(&[0.0, 1.0, 2.0, 4.0], &[1.0, 2.0, 3.0, 5.0]).unwrap();
        let t = Coefficient::new(1.0, &[1.0]).unwrap();
        for notion in Notion::ALL {
            let r = rdepth(notion, &ds, &t, &MethodSpec::auto()).unwrap();
            assert_eq!(r.value, 1.0, "{notion}");
        }
    }

    #[test]
    fn one_signed_residuals_give_zero() {
        // all x > 0 and the fit lies above every observation
        let ds = RegressionDataset::from_xy(&[0.5, 1.0, 2.0, 3.0], &[0.1, 0.4, 0.2, 0.3]).unwrap();
        let t = Coefficient::new(5.0, &[0.0]).unwrap();
        for notion in [Notion::Halfspace, Notion::Simplicial, Notion::Zonoid] {
            assert_eq!(
                rdepth(notion, &ds, &t, &MethodSpec::auto()).unwrap().value,
                0.0
            );
        }
    }

    #[test]
    fn evaluator_matches_free_functions() {
        let ds = sample();
        let m = MethodSpec::auto();
        let t = Coefficient::new(0.2, &[0.6]).unwrap();
        assert_eq!(
            RegressionEvaluator::new(&ds, Notion::Halfspace, &m)
                .unwrap()
                .depth(&t)
                .unwrap(),
            hrd(&ds, &t, &m).unwrap()
        );
        assert_eq!(
            RegressionEvaluator::new(&ds, Notion::Projection, &m)
                .unwrap()
                .depth(&t)
                .unwrap(),
            prd(&ds, &t, &m).unwrap()
        );
        assert_eq!(
            RegressionEvaluator::new(&ds, Notion::Rayleigh, &m)
                .unwrap()
                .depth(&t)
                .unwrap(),
            rrd(&ds, &t).unwrap()
        );
        assert_eq!(
            RegressionEvaluator::new(&ds, Notion::Zonoid, &m)
                .unwrap()
                .depth(&t)
                .unwrap(),
            zrd(&ds, &t).unwrap()
        );
    }

    #[test]
    fn simplicial_exact_matches_enumeration() {
        let ds = sample();
        for (b0, b1) in [(0.2, 0.6), (0.0, 0.0), (1.0, -1.0)] {
            let t = Coefficient::new(b0, &[b1]).unwrap();
            let a = srd(&ds, &t, &MethodSpec::exact2d()).unwrap();
            let b = srd(&ds, &t, &MethodSpec::bruteforce()).unwrap();
            assert_eq!(a.value, b.value);
        }
    }
}
