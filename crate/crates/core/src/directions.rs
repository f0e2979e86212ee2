//! Method selection and the direction sets used by directional suprema.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::data::Direction;
use crate::error::{DepthError, Result};
use crate::result::{Method, SamplingInfo};

pub const DEFAULT_DIRECTIONS: usize = 2048;

/// Golden-section iterations used when refining a planar direction.
const REFINE_ITERATIONS: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodKind {
    Auto,
    Exact1d,
    Exact2d,
    Bruteforce,
    Sampled,
}

impl std::str::FromStr for MethodKind {
    type Err = DepthError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => MethodKind::Auto,
            "exact1d" => MethodKind::Exact1d,
            "exact2d" => MethodKind::Exact2d,
            "bruteforce" => MethodKind::Bruteforce,
            "sampled" => MethodKind::Sampled,
            other => {
                return Err(DepthError::InvalidArgument(format!(
                    "unknown method '{other}'"
                )))
            }
        })
    }
}

/// Requested algorithm. `num_directions` is the sample size for `Sampled`
/// and the angular grid size for planar directional suprema under `Auto`.
/// Sampled directions are reproducible from `(seed, num_directions)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodSpec {
    pub kind: MethodKind,
    pub num_directions: usize,
    pub seed: u64,
    /// Golden-section refinement around the best planar direction.
    pub refine: bool,
}

impl Default for MethodSpec {
    fn default() -> Self {
        Self {
            kind: MethodKind::Auto,
            num_directions: DEFAULT_DIRECTIONS,
            seed: 0,
            refine: true,
        }
    }
}

impl MethodSpec {
    pub fn auto() -> Self {
        Self::default()
    }

    pub fn of_kind(kind: MethodKind) -> Self {
        Self {
            kind,
            ..Self::default()
        }
    }

    pub fn exact1d() -> Self {
        Self::of_kind(MethodKind::Exact1d)
    }

    pub fn exact2d() -> Self {
        Self::of_kind(MethodKind::Exact2d)
    }

    pub fn bruteforce() -> Self {
        Self::of_kind(MethodKind::Bruteforce)
    }

    pub fn sampled(num_directions: usize, seed: u64) -> Self {
        Self {
            kind: MethodKind::Sampled,
            num_directions,
            seed,
            refine: true,
        }
    }

    /// Planar angular grid of the given size.
    pub fn grid(num_directions: usize) -> Self {
        Self {
            num_directions,
            ..Self::default()
        }
    }

    pub fn without_refinement(mut self) -> Self {
        self.refine = false;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.num_directions == 0 {
            return Err(DepthError::InvalidArgument(
                "num_directions must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// `count` uniformly distributed unit vectors in `dim` dimensions, drawn as
/// normalised standard normal vectors from a ChaCha8 stream seeded with `seed`.
pub fn sample_directions(dim: usize, count: usize, seed: u64) -> Vec<Direction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        if let Ok(u) = Direction::normalize(&v) {
            out.push(u);
        }
    }
    out
}

fn half_circle_grid(count: usize) -> Vec<Direction> {
    (0..count)
        .map(|k| Direction::from_angle(std::f64::consts::PI * k as f64 / count as f64))
        .collect()
}

/// Direction set for a supremum of an objective that is even in `u`.
#[derive(Debug, Clone)]
pub(crate) struct DirectionPlan {
    pub dirs: Vec<Direction>,
    pub method: Method,
    pub sampling: Option<SamplingInfo>,
    /// Half-width of the angular bracket searched around the best planar
    /// direction, when refinement applies.
    pub refine_half_width: Option<f64>,
}

impl DirectionPlan {
    /// Chooses the direction set for an even objective in `dim` dimensions:
    /// `{e_1}` in one dimension, a half-circle grid in the plane, seeded
    /// uniform directions otherwise or on request.
    pub fn for_even_objective(dim: usize, spec: &MethodSpec) -> Result<Self> {
        spec.validate()?;
        let mismatch = |reason: &str| DepthError::MethodMismatch {
            method: format!("{:?}", spec.kind).to_lowercase(),
            reason: reason.to_string(),
        };
        match (spec.kind, dim) {
            (MethodKind::Auto | MethodKind::Exact1d, 1) => Ok(Self {
                dirs: vec![Direction::new(vec![1.0])?],
                method: Method::Exact1d,
                sampling: None,
                refine_half_width: None,
            }),
            (MethodKind::Exact1d, _) => Err(mismatch("exact1d requires dimension 1")),
            (MethodKind::Auto, 2) => Ok(Self {
                dirs: half_circle_grid(spec.num_directions),
                method: Method::Grid,
                sampling: Some(SamplingInfo {
                    directions: spec.num_directions,
                    seed: None,
                }),
                refine_half_width: spec
                    .refine
                    .then(|| std::f64::consts::PI / spec.num_directions as f64),
            }),
            (MethodKind::Auto | MethodKind::Sampled, _) => Ok(Self {
                dirs: sample_directions(dim, spec.num_directions, spec.seed),
                method: Method::Sampled,
                sampling: Some(SamplingInfo {
                    directions: spec.num_directions,
                    seed: Some(spec.seed),
                }),
                refine_half_width: (spec.refine && dim == 2)
                    .then(|| std::f64::consts::PI / spec.num_directions as f64),
            }),
            (MethodKind::Exact2d, _) => Err(mismatch(
                "no exact planar algorithm for this notion; use auto or sampled",
            )),
            (MethodKind::Bruteforce, _) => Err(mismatch(
                "no brute-force algorithm for this notion; use auto or sampled",
            )),
        }
    }

    /// Maximises `f` over the plan. Returns the best value and direction;
    /// stops early once the value is infinite.
    pub fn maximize<F>(&self, mut f: F) -> (f64, Direction)
    where
        F: FnMut(&Direction) -> f64,
    {
        let dirs = &self.dirs;
        let (best, k) = self.best_index(&mut |k: usize| f(&dirs[k]));
        self.refine(best, k, f)
    }

    /// Like [`maximize`](Self::maximize), with the plan's own directions
    /// evaluated through `at_index` (for callers that cache per-direction
    /// quantities) and refinement candidates through `f`.
    pub fn maximize_cached<G, F>(&self, mut at_index: G, f: F) -> (f64, Direction)
    where
        G: FnMut(usize) -> f64,
        F: FnMut(&Direction) -> f64,
    {
        let (best, k) = self.best_index(&mut at_index);
        self.refine(best, k, f)
    }

    fn best_index<G: FnMut(usize) -> f64>(&self, at_index: &mut G) -> (f64, usize) {
        let mut best = f64::NEG_INFINITY;
        let mut best_k = 0;
        for k in 0..self.dirs.len() {
            let v = at_index(k);
            if v > best {
                best = v;
                best_k = k;
                if v.is_infinite() {
                    break;
                }
            }
        }
        (best, best_k)
    }

    fn refine<F: FnMut(&Direction) -> f64>(
        &self,
        best: f64,
        k: usize,
        mut f: F,
    ) -> (f64, Direction) {
        let best_u = self.dirs[k].clone();
        match self.refine_half_width {
            Some(h) if best.is_finite() => {
                let center = best_u.as_slice()[1].atan2(best_u.as_slice()[0]);
                let (v, angle) =
                    golden_section_max(center - h, center + h, |a| f(&Direction::from_angle(a)));
                if v > best {
                    (v, Direction::from_angle(angle))
                } else {
                    (best, best_u)
                }
            }
            _ => (best, best_u),
        }
    }
}

/// Golden-section search for a maximum of `f` on `[lo, hi]`; returns the best
/// value seen among all evaluations and its argument.
pub(crate) fn golden_section_max<F>(lo: f64, hi: f64, mut f: F) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut best = if fc >= fd { (fc, c) } else { (fd, d) };
    for _ in 0..REFINE_ITERATIONS {
        if best.0.is_infinite() {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
            if fc > best.0 {
                best = (fc, c);
            }
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
            if fd > best.0 {
                best = (fd, d);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampled_directions_are_reproducible_unit_vectors() {
        let a = sample_directions(3, 50, 7);
        let b = sample_directions(3, 50, 7);
        assert_eq!(a, b);
        assert_ne!(a, sample_directions(3, 50, 8));
        for u in &a {
            let n: f64 = u.as_slice().iter().map(|v| v * v).sum();
            assert!((n - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn golden_section_finds_smooth_peak() {
        let (v, x) = golden_section_max(0.0, 2.0, |x| -(x - 1.3) * (x - 1.3));
        assert!((x - 1.3).abs() < 1e-6);
        assert!(v <= 0.0 && v > -1e-12);
    }

    #[test]
    fn plan_selection() {
        let p = DirectionPlan::for_even_objective(2, &MethodSpec::auto()).unwrap();
        assert_eq!(p.method, Method::Grid);
        assert_eq!(p.dirs.len(), DEFAULT_DIRECTIONS);
        let p = DirectionPlan::for_even_objective(3, &MethodSpec::auto()).unwrap();
        assert_eq!(p.method, Method::Sampled);
        assert!(DirectionPlan::for_even_objective(2, &MethodSpec::exact1d()).is_err());
        assert!(MethodSpec::sampled(0, 1).validate().is_err());
    }
}
