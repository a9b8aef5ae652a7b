//! Reference zeros by Aberth–Ehrlich simultaneous iteration.
//!
//! This is the ground truth the inclusion regions are checked against. It
//! works on the polynomial directly and shares no code with the bound
//! formulas.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{Annulus, RectRegion};
use crate::error::{Error, Result};
use crate::polynomial::MonicPolynomial;

pub const MAX_ITERATIONS: usize = 500;
/// A root stops moving once its correction is below `STEP_TOL * (1 + |z|)`.
pub const STEP_TOL: f64 = 1e-13;
const START_ANGLE: f64 = 0.7;
const START_SCALE: f64 = 0.9;
const POLISH_STEPS: usize = 2;

/// Relative slack applied to every containment test.
pub const REL_TOL: f64 = 1e-9;
/// Absolute slack applied to every containment test.
pub const ABS_TOL: f64 = 1e-12;

/// Output of [`find_roots`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    pub roots: Vec<Complex64>,
    /// `|p(z_i)|` for each root.
    pub residuals: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModulusExtremes {
    pub rmax: f64,
    pub rmin: f64,
}

/// Rounding-error floor of Horner evaluation at `z`.
fn residual_floor(p: &MonicPolynomial, z: Complex64) -> f64 {
    4.0 * (p.degree() as f64 + 1.0) * f64::EPSILON * p.evaluate_abs(z.norm())
}

/// All `n` zeros of `p`, repeated according to multiplicity.
///
/// Starts from `n` points on a circle of radius `0.9 * min(Cauchy, Carmichael–Mason)`
/// and updates in place (Gauss–Seidel order). A root is frozen once its step
/// is below [`STEP_TOL`] relative to its modulus or its residual reaches the
/// rounding floor of Horner evaluation. Frozen roots get two Newton polishing
/// steps, each kept only if it lowers the residual.
///
/// Deterministic: there is no randomness anywhere in the iteration.
pub fn find_roots(p: &MonicPolynomial) -> RootSet {
    let n = p.degree();
    let cauchy = 1.0 + p.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    let cm = (1.0 + p.coeffs().iter().map(|c| c.norm_sqr()).sum::<f64>()).sqrt();
    let radius = START_SCALE * cauchy.min(cm);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + START_ANGLE))
        .collect();
    let mut frozen = vec![false; n];
    let mut iterations = 0;

    while iterations < MAX_ITERATIONS && frozen.iter().any(|f| !f) {
        iterations += 1;
        for k in 0..n {
            if frozen[k] {
                continue;
            }
            let (v, dv) = p.evaluate_with_derivative(z[k]);
            if v.norm() <= residual_floor(p, z[k]) {
                frozen[k] = true;
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let mut step = ratio / (1.0 - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                // derivative or denominator vanished; nudge off the
                // stationary point instead of poisoning the iterate
                step = Complex64::from_polar(1e-3 * (1.0 + z[k].norm()), k as f64);
            }
            z[k] -= step;
            if step.norm() <= STEP_TOL * (1.0 + z[k].norm()) {
                frozen[k] = true;
            }
        }
    }

    let converged = frozen.iter().all(|&f| f);
    for root in z.iter_mut() {
        for _ in 0..POLISH_STEPS {
            let (v, dv) = p.evaluate_with_derivative(*root);
            let next = *root - v / dv;
            if next.re.is_finite() && next.im.is_finite() && p.evaluate(next).norm() < v.norm() {
                *root = next;
            }
        }
    }
    let residuals = z.iter().map(|&r| p.evaluate(r).norm()).collect();
    RootSet {
        roots: z,
        residuals,
        converged,
        iterations,
    }
}

/// Largest and smallest root modulus.
pub fn modulus_extremes(rs: &RootSet) -> Result<ModulusExtremes> {
    if !rs.converged || rs.roots.is_empty() {
        return Err(Error::OracleNotConverged);
    }
    let moduli = rs.roots.iter().map(|z| z.norm());
    let (rmin, rmax) = moduli.fold((f64::INFINITY, 0.0f64), |(lo, hi), m| {
        (lo.min(m), hi.max(m))
    });
    Ok(ModulusExtremes { rmax, rmin })
}

/// `x <= bound` up to the containment slack.
pub fn within_upper(x: f64, bound: f64) -> bool {
    x <= bound * (1.0 + REL_TOL) + ABS_TOL
}

/// `x >= bound` up to the containment slack.
pub fn within_lower(x: f64, bound: f64) -> bool {
    x * (1.0 + REL_TOL) + ABS_TOL >= bound
}

/// A region the zeros are claimed to lie in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Region {
    Annulus(Annulus),
    Rect(RectRegion),
    /// `|z| <= r`.
    Disk(f64),
    /// `|z| >= r`.
    Exterior(f64),
}

impl Region {
    pub fn contains(&self, z: Complex64) -> bool {
        let m = z.norm();
        match *self {
            Region::Annulus(a) => within_lower(m, a.r_lower) && within_upper(m, a.r_upper),
            Region::Rect(r) => within_upper(z.re.abs(), r.mu1) && within_upper(z.im.abs(), r.mu2),
            Region::Disk(r) => within_upper(m, r),
            Region::Exterior(r) => within_lower(m, r),
        }
    }
}

impl From<Annulus> for Region {
    fn from(a: Annulus) -> Self {
        Region::Annulus(a)
    }
}

impl From<RectRegion> for Region {
    fn from(r: RectRegion) -> Self {
        Region::Rect(r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Verdict {
    Pass,
    /// The first root found outside the region.
    Fail {
        witness: Complex64,
    },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Checks every root against `region` with slack `value * (1 + 1e-9) + 1e-12`.
pub fn verify_containment(rs: &RootSet, region: impl Into<Region>) -> Result<Verdict> {
    if !rs.converged {
        return Err(Error::OracleNotConverged);
    }
    let region = region.into();
    Ok(match rs.roots.iter().find(|z| !region.contains(**z)) {
        Some(&witness) => Verdict::Fail { witness },
        None => Verdict::Pass,
    })
}
