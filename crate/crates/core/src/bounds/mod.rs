//! Bounds on the moduli of polynomial zeros.
//!
//! Every bound evaluates to a [`BoundResult`]. A bound whose hypotheses fail
//! (degree too small, zero coefficients where the formula divides) is still
//! returned, marked inapplicable with a reason, so reports can list every
//! bound's status side by side.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::polynomial::MonicPolynomial;

pub mod classical;
pub mod companion;

pub use classical::{
    bhunia, carmichael_mason, cauchy, dalal_govil_annulus, fujii_kubo, kim_annulus, kittaneh,
    linden,
};
pub use companion::{
    rect_region, sharper_than_aok, ub_aok, ub_bp1, ub_bp2, ub_bp3, ub_bp4, ub_bp5, ub_bp6, ub_bp7,
};

/// Identifier of a bound formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundId {
    Bp1,
    Bp2,
    Bp3,
    Bp4,
    Bp5,
    Bp6,
    Bp7,
    Aok,
    Linden,
    Kittaneh,
    FujiiKubo,
    Bhunia,
    Cauchy,
    CarmichaelMason,
    Kim,
    DalalGovil,
}

impl BoundId {
    /// All identifiers in report order.
    pub const ALL: [BoundId; 16] = [
        BoundId::Bp1,
        BoundId::Bp2,
        BoundId::Bp3,
        BoundId::Bp4,
        BoundId::Bp5,
        BoundId::Bp6,
        BoundId::Bp7,
        BoundId::Aok,
        BoundId::Linden,
        BoundId::Kittaneh,
        BoundId::FujiiKubo,
        BoundId::Bhunia,
        BoundId::Cauchy,
        BoundId::CarmichaelMason,
        BoundId::Kim,
        BoundId::DalalGovil,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Bp1 => "BP1",
            BoundId::Bp2 => "BP2",
            BoundId::Bp3 => "BP3",
            BoundId::Bp4 => "BP4",
            BoundId::Bp5 => "BP5",
            BoundId::Bp6 => "BP6",
            BoundId::Bp7 => "BP7",
            BoundId::Aok => "AOK",
            BoundId::Linden => "LINDEN",
            BoundId::Kittaneh => "KITTANEH",
            BoundId::FujiiKubo => "FUJII_KUBO",
            BoundId::Bhunia => "BHUNIA",
            BoundId::Cauchy => "CAUCHY",
            BoundId::CarmichaelMason => "CARMICHAEL_MASON",
            BoundId::Kim => "KIM",
            BoundId::DalalGovil => "DALAL_GOVIL",
        }
    }

    /// Bounds that need `n >= 3`, i.e. the companion-matrix family.
    pub fn needs_degree_three(self) -> bool {
        matches!(
            self,
            BoundId::Bp1
                | BoundId::Bp2
                | BoundId::Bp3
                | BoundId::Bp4
                | BoundId::Bp5
                | BoundId::Bp6
                | BoundId::Bp7
                | BoundId::Aok
        )
    }

    /// Precedence when two bounds give the same radius; lower wins.
    pub fn tie_rank(self) -> usize {
        match self {
            BoundId::Bp4 => 0,
            BoundId::Bp3 => 1,
            BoundId::Bp1 => 2,
            BoundId::Bp2 => 3,
            BoundId::Bp5 => 4,
            BoundId::Bp6 => 5,
            BoundId::Bp7 => 6,
            BoundId::Aok => 7,
            BoundId::Linden => 8,
            BoundId::Kittaneh => 9,
            BoundId::FujiiKubo => 10,
            BoundId::Bhunia => 11,
            BoundId::Cauchy => 12,
            BoundId::CarmichaelMason => 13,
            BoundId::Kim => 14,
            BoundId::DalalGovil => 15,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().to_ascii_uppercase().replace('-', "_");
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown bound id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
}

/// One evaluated bound on `|z|` over the zeros `z`.
///
/// `value` is present exactly when `applicable` is true; otherwise `reason`
/// says why the formula does not apply.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub id: BoundId,
    pub kind: BoundKind,
    pub value: Option<f64>,
    pub applicable: bool,
    pub reason: String,
}

impl BoundResult {
    pub fn new(id: BoundId, kind: BoundKind, value: f64) -> Self {
        Self {
            id,
            kind,
            value: Some(value),
            applicable: true,
            reason: String::new(),
        }
    }

    pub fn upper(id: BoundId, value: f64) -> Self {
        Self::new(id, BoundKind::Upper, value)
    }

    pub fn inapplicable(id: BoundId, kind: BoundKind, reason: impl Into<String>) -> Self {
        Self {
            id,
            kind,
            value: None,
            applicable: false,
            reason: reason.into(),
        }
    }

    pub(crate) fn upper_or(id: BoundId, value: Result<f64, Inapplicable>) -> Self {
        match value {
            Ok(v) => Self::upper(id, v),
            Err(Inapplicable(reason)) => Self::inapplicable(id, BoundKind::Upper, reason),
        }
    }

    /// The radius, when applicable.
    pub fn radius(&self) -> Option<f64> {
        self.value.filter(|_| self.applicable)
    }
}

/// Why a formula does not apply to a given polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inapplicable(pub String);

impl fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Inapplicable {}

pub(crate) fn require_degree(p: &MonicPolynomial, min: usize) -> Result<usize, Inapplicable> {
    let n = p.degree();
    if n < min {
        Err(Inapplicable(format!("requires degree >= {min}, got {n}")))
    } else {
        Ok(n)
    }
}

/// `{ z : r_lower <= |z| <= r_upper }`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Annulus {
    pub r_lower: f64,
    pub r_upper: f64,
    #[serde(with = "source_label")]
    pub source_lower: Option<BoundId>,
    pub source_upper: BoundId,
}

impl Annulus {
    /// `true` when `other` lies strictly inside `self` at both radii.
    pub fn strictly_contains(&self, other: &Annulus) -> bool {
        self.r_lower < other.r_lower && other.r_upper < self.r_upper
    }
}

mod source_label {
    use super::*;

    pub fn serialize<S: Serializer>(id: &Option<BoundId>, s: S) -> Result<S::Ok, S::Error> {
        match id {
            Some(id) => s.serialize_str(id.as_str()),
            None => s.serialize_str("none"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BoundId>, D::Error> {
        let s = String::deserialize(d)?;
        if s == "none" {
            Ok(None)
        } else {
            s.parse().map(Some).map_err(serde::de::Error::custom)
        }
    }
}

/// Axis-aligned rectangle `[-mu1, mu1] x [-mu2, mu2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RectRegion {
    pub mu1: f64,
    pub mu2: f64,
}

/// Evaluates the upper bound `id` on `p`.
///
/// The ratio annuli contribute their outer radius.
pub fn upper_bound(p: &MonicPolynomial, id: BoundId) -> BoundResult {
    match id {
        BoundId::Bp1 => ub_bp1(p),
        BoundId::Bp2 => ub_bp2(p),
        BoundId::Bp3 => ub_bp3(p),
        BoundId::Bp4 => ub_bp4(p),
        BoundId::Bp5 => ub_bp5(p),
        BoundId::Bp6 => ub_bp6(p),
        BoundId::Bp7 => ub_bp7(p),
        BoundId::Aok => ub_aok(p),
        BoundId::Linden => linden(p),
        BoundId::Kittaneh => kittaneh(p),
        BoundId::FujiiKubo => fujii_kubo(p),
        BoundId::Bhunia => bhunia(p),
        BoundId::Cauchy => cauchy(p),
        BoundId::CarmichaelMason => carmichael_mason(p),
        BoundId::Kim => BoundResult::upper_or(id, kim_annulus(&p.to_general()).map(|a| a.r_upper)),
        BoundId::DalalGovil => {
            BoundResult::upper_or(id, dalal_govil_annulus(&p.to_general()).map(|a| a.r_upper))
        }
    }
}

/// Lower bound on `|z|` obtained from the upper bound `via` applied to the
/// reciprocal polynomial, whose zeros are the reciprocals of those of `p`.
pub fn lower_bound(p: &MonicPolynomial, via: BoundId) -> BoundResult {
    let recip = match p.reciprocal() {
        Ok(r) => r,
        Err(_) => return BoundResult::inapplicable(via, BoundKind::Lower, "constant term is zero"),
    };
    let upper = upper_bound(&recip, via);
    match upper.radius() {
        Some(v) if v > 0.0 && v.is_finite() => BoundResult::new(via, BoundKind::Lower, 1.0 / v),
        Some(v) => BoundResult::inapplicable(
            via,
            BoundKind::Lower,
            format!("reciprocal bound {v} is not a positive finite radius"),
        ),
        None => BoundResult::inapplicable(
            via,
            BoundKind::Lower,
            format!("on reciprocal: {}", upper.reason),
        ),
    }
}

/// Upper then lower results for each id, in the order given.
pub fn evaluate_all(p: &MonicPolynomial, ids: &[BoundId]) -> Vec<BoundResult> {
    let mut out: Vec<BoundResult> = ids.iter().map(|&id| upper_bound(p, id)).collect();
    out.extend(ids.iter().map(|&id| lower_bound(p, id)));
    out
}
