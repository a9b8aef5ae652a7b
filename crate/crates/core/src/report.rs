//! Comparison reports: every bound for one polynomial, the best annulus
//! they compose into, the rectangle, and how all of it fares against the
//! oracle's roots.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    self, bhunia, carmichael_mason, cauchy, dalal_govil_annulus, fujii_kubo, kim_annulus, kittaneh,
    linden, lower_bound, rect_region, sharper_than_aok, ub_bp3, Annulus, BoundId, BoundKind,
    BoundResult, RectRegion,
};
use crate::error::{Error, Result};
use crate::oracle::{find_roots, Region};
use crate::polynomial::MonicPolynomial;

mod svg;

pub use svg::render_svg;

/// Polynomial echo in the report: degree and ascending coefficients,
/// leading one included.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolynomialEcho {
    pub degree: usize,
    pub coeffs: Vec<[f64; 2]>,
}

impl PolynomialEcho {
    pub fn new(p: &MonicPolynomial) -> Self {
        Self {
            degree: p.degree(),
            coeffs: p.full_coeffs().iter().map(|c| [c.re, c.im]).collect(),
        }
    }

    pub fn to_polynomial(&self) -> Result<MonicPolynomial> {
        let mut c: Vec<Complex64> = self
            .coeffs
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        c.pop();
        MonicPolynomial::new(c)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub converged: bool,
    pub rmax: f64,
    pub rmin: f64,
    pub roots: Vec<[f64; 2]>,
}

impl OracleSummary {
    pub fn roots(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.roots.iter().map(|&[re, im]| Complex64::new(re, im))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Verdicts {
    pub annulus: Outcome,
    pub rectangle: Option<Outcome>,
}

impl Verdicts {
    pub fn all_pass(&self) -> bool {
        self.annulus == Outcome::Pass && self.rectangle != Some(Outcome::Fail)
    }
}

/// Everything known about one polynomial's zeros.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub polynomial: PolynomialEcho,
    pub bounds: Vec<BoundResult>,
    pub best_annulus: Annulus,
    pub rectangle: Option<RectRegion>,
    pub oracle: Option<OracleSummary>,
    pub verdicts: Option<Verdicts>,
    pub sharper_than_aok: bool,
}

/// Tightest annulus available from `results`: the smallest applicable
/// upper radius and the largest applicable lower radius. Equal radii are
/// attributed by [`BoundId::tie_rank`].
pub fn best_annulus(results: &[BoundResult]) -> Result<Annulus> {
    fn pick(
        results: &[BoundResult],
        kind: BoundKind,
        better: impl Fn(f64, f64) -> bool,
    ) -> Option<(f64, BoundId)> {
        results
            .iter()
            .filter(|r| r.kind == kind)
            .filter_map(|r| r.radius().map(|v| (v, r.id)))
            .fold(None, |best, (v, id)| match best {
                None => Some((v, id)),
                Some((bv, bid)) => {
                    if better(v, bv) || (v == bv && id.tie_rank() < bid.tie_rank()) {
                        Some((v, id))
                    } else {
                        Some((bv, bid))
                    }
                }
            })
    }
    let (r_upper, source_upper) =
        pick(results, BoundKind::Upper, |a, b| a < b).ok_or(Error::NoApplicableUpperBound)?;
    let lower = pick(results, BoundKind::Lower, |a, b| a > b);
    Ok(Annulus {
        r_lower: lower.map_or(0.0, |(v, _)| v),
        r_upper,
        source_lower: lower.map(|(_, id)| id),
        source_upper,
    })
}

/// Does the bound hold for the oracle's roots? `None` when the bound is
/// inapplicable or the oracle did not converge.
pub fn bound_holds(result: &BoundResult, oracle: &OracleSummary) -> Option<bool> {
    if !oracle.converged {
        return None;
    }
    let v = result.radius()?;
    let region = match result.kind {
        BoundKind::Upper => Region::Disk(v),
        BoundKind::Lower => Region::Exterior(v),
    };
    Some(oracle.roots().all(|z| region.contains(z)))
}

impl ComparisonReport {
    /// Evaluates the bounds in `ids` (upper and reciprocal lower for each),
    /// the rectangle, and optionally runs the oracle.
    pub fn build(p: &MonicPolynomial, ids: &[BoundId], with_oracle: bool) -> Result<Self> {
        let bounds = bounds::evaluate_all(p, ids);
        let best = best_annulus(&bounds)?;
        let rectangle = rect_region(p).ok();
        let oracle = with_oracle.then(|| {
            let rs = find_roots(p);
            let moduli = rs.roots.iter().map(|z| z.norm());
            let rmax = moduli.clone().fold(0.0, f64::max);
            let rmin = moduli.fold(f64::INFINITY, f64::min);
            OracleSummary {
                converged: rs.converged,
                rmax,
                rmin,
                roots: rs.roots.iter().map(|z| [z.re, z.im]).collect(),
            }
        });
        let mut report = Self {
            polynomial: PolynomialEcho::new(p),
            bounds,
            best_annulus: best,
            rectangle,
            oracle,
            verdicts: None,
            sharper_than_aok: sharper_than_aok(p),
        };
        report.refresh_verdicts();
        Ok(report)
    }

    /// Recomputes the region verdicts from the stored oracle roots.
    pub fn refresh_verdicts(&mut self) {
        self.verdicts = match &self.oracle {
            Some(o) if o.converged => {
                let inside = |region: Region| o.roots().all(|z| region.contains(z));
                Some(Verdicts {
                    annulus: Outcome::from_bool(inside(self.best_annulus.into())),
                    rectangle: self.rectangle.map(|r| Outcome::from_bool(inside(r.into()))),
                })
            }
            _ => None,
        };
    }

    /// Per-bound containment checks; `None` without a converged oracle.
    pub fn bound_checks(&self) -> Option<Vec<(BoundResult, Option<bool>)>> {
        let o = self.oracle.as_ref().filter(|o| o.converged)?;
        Some(
            self.bounds
                .iter()
                .map(|b| (b.clone(), bound_holds(b, o)))
                .collect(),
        )
    }

    pub fn upper_results(&self) -> impl Iterator<Item = &BoundResult> {
        self.bounds.iter().filter(|b| b.kind == BoundKind::Upper)
    }

    pub fn lower_results(&self) -> impl Iterator<Item = &BoundResult> {
        self.bounds.iter().filter(|b| b.kind == BoundKind::Lower)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Formats with nine significant digits.
pub fn sig9(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..9).contains(&mag) {
        format!("{x:.8e}")
    } else {
        let decimals = (8 - mag).max(0) as usize;
        format!("{x:.decimals$}")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Aligned text table: one row per bound (uppers, then lowers), followed by
/// the regions and the oracle summary.
pub fn render_table(report: &ComparisonReport) -> String {
    use std::fmt::Write;

    let mut out = String::new();
    let coeffs: Vec<String> = report
        .polynomial
        .coeffs
        .iter()
        .map(|&[re, im]| {
            if im == 0.0 {
                sig9(re)
            } else {
                format!("{}{:+}i", sig9(re), im)
            }
        })
        .collect();
    writeln!(
        out,
        "polynomial: degree {}, coefficients (ascending) [{}]",
        report.polynomial.degree,
        coeffs.join(", ")
    )
    .unwrap();
    writeln!(
        out,
        "{:<18} {:<6} {:>16}  {:<10} contains-roots",
        "id", "kind", "value", "applicable"
    )
    .unwrap();
    let oracle = report.oracle.as_ref();
    for section in [BoundKind::Upper, BoundKind::Lower] {
        for b in report.bounds.iter().filter(|b| b.kind == section) {
            let kind = match b.kind {
                BoundKind::Upper => "upper",
                BoundKind::Lower => "lower",
            };
            let value = b.radius().map_or_else(|| "-".to_string(), sig9);
            let holds = oracle.and_then(|o| bound_holds(b, o)).map_or("-", yes_no);
            let note = if b.applicable {
                String::new()
            } else {
                format!("  ({})", b.reason)
            };
            writeln!(
                out,
                "{:<18} {:<6} {:>16}  {:<10} {}{}",
                b.id.as_str(),
                kind,
                value,
                yes_no(b.applicable),
                holds,
                note
            )
            .unwrap();
        }
    }
    let a = &report.best_annulus;
    writeln!(
        out,
        "best annulus: {} <= |z| <= {}  (lower: {}, upper: {})",
        sig9(a.r_lower),
        sig9(a.r_upper),
        a.source_lower.map_or("none", |id| id.as_str()),
        a.source_upper
    )
    .unwrap();
    match &report.rectangle {
        Some(r) => writeln!(
            out,
            "rectangle: |Re z| <= {}, |Im z| <= {}",
            sig9(r.mu1),
            sig9(r.mu2)
        )
        .unwrap(),
        None => writeln!(out, "rectangle: inapplicable").unwrap(),
    }
    match oracle {
        Some(o) => writeln!(
            out,
            "oracle: {}, {} roots, min |z| = {}, max |z| = {}",
            if o.converged {
                "converged"
            } else {
                "NOT converged"
            },
            o.roots.len(),
            sig9(o.rmin),
            sig9(o.rmax)
        )
        .unwrap(),
        None => writeln!(out, "oracle: not run").unwrap(),
    }
    if let Some(v) = &report.verdicts {
        let fmt = |o: Outcome| match o {
            Outcome::Pass => "pass",
            Outcome::Fail => "FAIL",
        };
        writeln!(
            out,
            "verdicts: annulus {}, rectangle {}",
            fmt(v.annulus),
            v.rectangle.map_or("-", fmt)
        )
        .unwrap();
    }
    writeln!(
        out,
        "BP5 sharper than AOK: {}",
        yes_no(report.sharper_than_aok)
    )
    .unwrap();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
    Svg,
}

pub fn render(report: &ComparisonReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s.into_bytes()
        }
        Format::Table => render_table(report).into_bytes(),
        Format::Svg => render_svg(report).into_bytes(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RemarkStatus {
    Pass,
    Fail,
    /// Computed for a polynomial other than the canonical one; nothing asserted.
    Informational,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineComparison {
    pub id: BoundId,
    pub value: f64,
    /// `value - BP3`; positive when BP3 is smaller.
    pub margin: f64,
    pub bp3_smaller: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Remark1 {
    pub status: RemarkStatus,
    pub bp3: Option<f64>,
    pub comparisons: Vec<BaselineComparison>,
}

/// `z^3 + z^2 + 2`.
pub fn remark1_polynomial() -> MonicPolynomial {
    MonicPolynomial::from_real(&[2.0, 0.0, 1.0]).expect("valid")
}

/// `z^3 + z^2 + z + 1`.
pub fn remark2_polynomial() -> MonicPolynomial {
    MonicPolynomial::from_real(&[1.0, 1.0, 1.0]).expect("valid")
}

/// BP3 against the six classical upper bounds. Asserts BP3 is strictly
/// smaller than each only for `z^3 + z^2 + 2`; other inputs are reported
/// informationally.
pub fn compare_remark_1(p: &MonicPolynomial) -> Remark1 {
    let canonical = *p == remark1_polynomial();
    let bp3 = match ub_bp3(p).radius() {
        Some(v) => v,
        None => {
            return Remark1 {
                status: RemarkStatus::Inapplicable,
                bp3: None,
                comparisons: Vec::new(),
            }
        }
    };
    let comparisons: Vec<BaselineComparison> = [
        linden(p),
        kittaneh(p),
        fujii_kubo(p),
        bhunia(p),
        cauchy(p),
        carmichael_mason(p),
    ]
    .into_iter()
    .filter_map(|r| {
        r.radius().map(|value| BaselineComparison {
            id: r.id,
            value,
            margin: value - bp3,
            bp3_smaller: bp3 < value,
        })
    })
    .collect();
    let status = if !canonical {
        RemarkStatus::Informational
    } else if comparisons.len() == 6 && comparisons.iter().all(|c| c.bp3_smaller) {
        RemarkStatus::Pass
    } else {
        RemarkStatus::Fail
    };
    Remark1 {
        status,
        bp3: Some(bp3),
        comparisons,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Remark2 {
    pub status: RemarkStatus,
    /// `[lower_bound(p, BP3), ub_bp3(p)]`.
    pub bp3: Option<Annulus>,
    pub kim: Option<Annulus>,
    pub dalal_govil: Option<Annulus>,
    pub inside_kim: bool,
    pub inside_dalal_govil: bool,
    pub reason: String,
}

/// The BP3 annulus against the Kim and Dalal–Govil annuli. Asserts strict
/// containment in both only for `z^3 + z^2 + z + 1`.
pub fn compare_remark_2(p: &MonicPolynomial) -> Remark2 {
    let canonical = *p == remark2_polynomial();
    let g = p.to_general();
    let bp3 = match (lower_bound(p, BoundId::Bp3).radius(), ub_bp3(p).radius()) {
        (Some(lo), Some(hi)) => Some(Annulus {
            r_lower: lo,
            r_upper: hi,
            source_lower: Some(BoundId::Bp3),
            source_upper: BoundId::Bp3,
        }),
        _ => None,
    };
    let kim = kim_annulus(&g);
    let dg = dalal_govil_annulus(&g);
    let reason = [
        bp3.is_none()
            .then(|| "BP3 annulus inapplicable".to_string()),
        kim.as_ref().err().map(|e| format!("Kim: {e}")),
        dg.as_ref().err().map(|e| format!("Dalal-Govil: {e}")),
    ]
    .into_iter()
    .flatten()
    .collect::<Vec<_>>()
    .join("; ");
    let (kim, dg) = (kim.ok(), dg.ok());
    let inside = |outer: Option<Annulus>| match (outer, bp3) {
        (Some(o), Some(a)) => o.strictly_contains(&a),
        _ => false,
    };
    let (inside_kim, inside_dalal_govil) = (inside(kim), inside(dg));
    let status = if bp3.is_none() || kim.is_none() || dg.is_none() {
        RemarkStatus::Inapplicable
    } else if !canonical {
        RemarkStatus::Informational
    } else if inside_kim && inside_dalal_govil {
        RemarkStatus::Pass
    } else {
        RemarkStatus::Fail
    };
    Remark2 {
        status,
        bp3,
        kim,
        dalal_govil: dg,
        inside_kim,
        inside_dalal_govil,
        reason,
    }
}
