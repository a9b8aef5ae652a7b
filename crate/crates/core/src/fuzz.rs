//! Random polynomial families and the soundness sweep over them.
//!
//! Generation is driven by a `Xoshiro256PlusPlus` generator seeded through
//! `seed_from_u64` (SplitMix64 expansion), so a `(seed, config)` pair always
//! replays the same polynomials.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    self, dalal_govil_annulus, kim_annulus, rect_region, sharper_than_aok, ub_aok, ub_bp5, BoundId,
    BoundKind,
};
use crate::error::Error;
use crate::oracle::{find_roots, within_lower, within_upper, Region};
use crate::polynomial::{GeneralPolynomial, MonicPolynomial};
use crate::report::best_annulus;

/// Smallest admissible `|a_0|` in generated polynomials.
pub const MIN_CONSTANT_TERM: f64 = 1e-6;
/// Fraction of coefficients zeroed in the sparse family.
pub const SPARSE_ZERO_FRACTION: f64 = 0.6;
/// Half-width of the real family's interval and radius of the complex disk.
pub const COEFF_RADIUS: f64 = 2.0;
/// BP5 and AOK closer than this are not used to test the sharpness criterion.
pub const IFF_BAND: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Coefficients uniform in `[-2, 2]`.
    Real,
    /// Coefficients uniform in the disk of radius 2.
    Complex,
    /// Complex coefficients, each zeroed with probability 0.6; `a_0` kept.
    Sparse,
    /// Coefficient sequence equal to its reversal.
    Palindromic,
    /// The four families above in rotation.
    Mixed,
}

impl Family {
    pub const BASIC: [Family; 4] = [
        Family::Real,
        Family::Complex,
        Family::Sparse,
        Family::Palindromic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Real => "real",
            Family::Complex => "complex",
            Family::Sparse => "sparse",
            Family::Palindromic => "palindromic",
            Family::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "real" => Ok(Family::Real),
            "complex" => Ok(Family::Complex),
            "sparse" => Ok(Family::Sparse),
            "palindromic" => Ok(Family::Palindromic),
            "mixed" | "all" => Ok(Family::Mixed),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub count: usize,
    pub degree_lo: usize,
    pub degree_hi: usize,
    pub seed: u64,
    pub family: Family,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            count: 1000,
            degree_lo: 3,
            degree_hi: 15,
            seed: 42,
            family: Family::Mixed,
        }
    }
}

/// Deterministic stream of random monic polynomials.
pub struct Generator {
    rng: Xoshiro256PlusPlus,
    config: FuzzConfig,
    index: usize,
}

impl Generator {
    pub fn new(config: FuzzConfig) -> Self {
        Self {
            rng: Xoshiro256PlusPlus::seed_from_u64(config.seed),
            config,
            index: 0,
        }
    }

    fn real(&mut self) -> Complex64 {
        Complex64::new(self.rng.random_range(-COEFF_RADIUS..=COEFF_RADIUS), 0.0)
    }

    fn disk(&mut self) -> Complex64 {
        let r = COEFF_RADIUS * self.rng.random::<f64>().sqrt();
        let theta = 2.0 * PI * self.rng.random::<f64>();
        Complex64::from_polar(r, theta)
    }

    fn nonzero(&mut self, draw: fn(&mut Self) -> Complex64) -> Complex64 {
        loop {
            let c = draw(self);
            if c.norm() >= MIN_CONSTANT_TERM {
                return c;
            }
        }
    }

    /// One polynomial of the given family and degree.
    pub fn sample(&mut self, family: Family, n: usize) -> MonicPolynomial {
        let coeffs: Vec<Complex64> = match family {
            Family::Real => {
                let mut c: Vec<_> = (0..n).map(|_| self.real()).collect();
                c[0] = self.nonzero(Self::real);
                c
            }
            Family::Complex | Family::Mixed => {
                let mut c: Vec<_> = (0..n).map(|_| self.disk()).collect();
                c[0] = self.nonzero(Self::disk);
                c
            }
            Family::Sparse => {
                let mut c: Vec<_> = (0..n)
                    .map(|_| {
                        let v = self.disk();
                        if self.rng.random_bool(SPARSE_ZERO_FRACTION) {
                            Complex64::new(0.0, 0.0)
                        } else {
                            v
                        }
                    })
                    .collect();
                c[0] = self.nonzero(Self::disk);
                c
            }
            Family::Palindromic => {
                // c_k = c_{n-k}; the end coefficients are the nonzero leading one
                let mut full = vec![Complex64::new(0.0, 0.0); n + 1];
                full[0] = self.nonzero(Self::disk);
                for c in &mut full[1..=n / 2] {
                    *c = self.disk();
                }
                for k in 0..=n / 2 {
                    full[n - k] = full[k];
                }
                let lead = full[n];
                full.truncate(n);
                full.iter().map(|c| c / lead).collect()
            }
        };
        MonicPolynomial::new(coeffs).expect("finite coefficients")
    }
}

impl Iterator for Generator {
    type Item = (Family, MonicPolynomial);

    fn next(&mut self) -> Option<Self::Item> {
        if self.index >= self.config.count {
            return None;
        }
        let family = match self.config.family {
            Family::Mixed => Family::BASIC[self.index % Family::BASIC.len()],
            f => f,
        };
        self.index += 1;
        let n = self
            .rng
            .random_range(self.config.degree_lo..=self.config.degree_hi);
        Some((family, self.sample(family, n)))
    }
}

/// One containment failure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub instance: usize,
    pub family: Family,
    pub degree: usize,
    /// Bound id, `RECT`, `BEST_ANNULUS`, `KIM_ANNULUS`, `DALAL_GOVIL_ANNULUS`
    /// or `BP5_AOK_IFF`.
    pub check: String,
    pub kind: Option<BoundKind>,
    pub claimed: f64,
    pub observed: f64,
    pub coeffs: Vec<[f64; 2]>,
}

/// Mean of `value / rmax` over the instances where an upper bound applied.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Tightness {
    pub applicable: usize,
    pub mean_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    pub instances: usize,
    pub skipped_nonconverged: usize,
    pub checks: usize,
    pub violations: Vec<Violation>,
    pub iff_checked: usize,
    pub iff_mismatches: usize,
    pub kim_inapplicable: usize,
    pub dalal_govil_inapplicable: usize,
    /// Upper-bound tightness, keyed by bound id (plus `BEST_ANNULUS`).
    pub tightness: BTreeMap<String, Tightness>,
}

impl FuzzSummary {
    /// Containment failures plus sharpness-criterion mismatches.
    pub fn failure_count(&self) -> usize {
        self.violations.len()
    }
}

fn echo(p: &MonicPolynomial) -> Vec<[f64; 2]> {
    p.coeffs().iter().map(|c| [c.re, c.im]).collect()
}

/// Evaluates every bound on every generated polynomial and checks it
/// against the oracle. Polynomials the oracle fails on are skipped and
/// counted.
pub fn run_fuzz(config: FuzzConfig) -> FuzzSummary {
    let mut summary = FuzzSummary {
        config,
        instances: 0,
        skipped_nonconverged: 0,
        checks: 0,
        violations: Vec::new(),
        iff_checked: 0,
        iff_mismatches: 0,
        kim_inapplicable: 0,
        dalal_govil_inapplicable: 0,
        tightness: BTreeMap::new(),
    };
    let mut ratio_sums: BTreeMap<String, (usize, f64)> = BTreeMap::new();

    for (i, (family, p)) in Generator::new(config).enumerate() {
        summary.instances += 1;
        let n = p.degree();
        let mut violate = |check: String, kind, claimed, observed| {
            summary.violations.push(Violation {
                instance: i,
                family,
                degree: n,
                check,
                kind,
                claimed,
                observed,
                coeffs: echo(&p),
            })
        };

        // the sharpness criterion needs no oracle
        if let (Some(v5), Some(vaok)) = (ub_bp5(&p).radius(), ub_aok(&p).radius()) {
            if (v5 - vaok).abs() > IFF_BAND {
                summary.iff_checked += 1;
                if sharper_than_aok(&p) != (v5 < vaok) {
                    summary.iff_mismatches += 1;
                    violate("BP5_AOK_IFF".into(), None, v5, vaok);
                }
            }
        }

        let rs = find_roots(&p);
        if !rs.converged {
            summary.skipped_nonconverged += 1;
            continue;
        }
        let rmax = rs.roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let rmin = rs
            .roots
            .iter()
            .map(|z| z.norm())
            .fold(f64::INFINITY, f64::min);

        let results = bounds::evaluate_all(&p, &BoundId::ALL);
        for r in &results {
            let Some(v) = r.radius() else { continue };
            summary.checks += 1;
            match r.kind {
                BoundKind::Upper => {
                    let e = ratio_sums.entry(r.id.to_string()).or_default();
                    e.0 += 1;
                    e.1 += v / rmax;
                    if !within_upper(rmax, v) {
                        violate(r.id.to_string(), Some(r.kind), v, rmax);
                    }
                }
                BoundKind::Lower => {
                    if !within_lower(rmin, v) {
                        violate(r.id.to_string(), Some(r.kind), v, rmin);
                    }
                }
            }
        }

        if let Ok(best) = best_annulus(&results) {
            summary.checks += 1;
            let e = ratio_sums.entry("BEST_ANNULUS".into()).or_default();
            e.0 += 1;
            e.1 += best.r_upper / rmax;
            if let Some(z) = rs
                .roots
                .iter()
                .find(|z| !Region::Annulus(best).contains(**z))
            {
                violate("BEST_ANNULUS".into(), None, best.r_upper, z.norm());
            }
        }

        if let Ok(rect) = rect_region(&p) {
            summary.checks += 1;
            if let Some(z) = rs.roots.iter().find(|z| !Region::Rect(rect).contains(**z)) {
                violate(
                    "RECT".into(),
                    None,
                    rect.mu1.max(rect.mu2),
                    z.re.abs().max(z.im.abs()),
                );
            }
        }

        let g: GeneralPolynomial = p.to_general();
        for (name, annulus) in [
            ("KIM_ANNULUS", kim_annulus(&g)),
            ("DALAL_GOVIL_ANNULUS", dalal_govil_annulus(&g)),
        ] {
            match annulus {
                Ok(a) => {
                    summary.checks += 1;
                    if let Some(z) = rs.roots.iter().find(|z| !Region::Annulus(a).contains(**z)) {
                        violate(name.into(), None, a.r_upper, z.norm());
                    }
                }
                Err(_) if name == "KIM_ANNULUS" => summary.kim_inapplicable += 1,
                Err(_) => summary.dalal_govil_inapplicable += 1,
            }
        }
    }

    summary.tightness = ratio_sums
        .into_iter()
        .map(|(k, (count, sum))| {
            (
                k,
                Tightness {
                    applicable: count,
                    mean_ratio: sum / count as f64,
                },
            )
        })
        .collect();
    summary
}
