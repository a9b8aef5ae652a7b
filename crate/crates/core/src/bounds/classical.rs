//! Baseline bounds: the classical companion-matrix estimates and two
//! coefficient-ratio annuli.

use std::f64::consts::PI;

use super::{require_degree, Annulus, BoundId, BoundResult, Inapplicable};
use crate::polynomial::{GeneralPolynomial, MonicPolynomial};

fn linden_value(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 1)? as f64;
    let top = p.abs_coeff(p.degree() as isize - 1);
    let total = p.sum_sq(0, p.degree() as isize - 1);
    Ok(top / n + ((n - 1.0) / n * (n - 1.0 + total - top * top / n)).sqrt())
}

pub fn linden(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::Linden, linden_value(p))
}

fn kittaneh_value(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 2)? as isize;
    let top = p.abs_coeff(n - 1);
    let rest = p.sum_sq(0, n - 2).sqrt();
    Ok(0.5 * (top + 1.0 + ((top - 1.0).powi(2) + 4.0 * rest).sqrt()))
}

pub fn kittaneh(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::Kittaneh, kittaneh_value(p))
}

fn fujii_kubo_value(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 1)?;
    let alpha = p.sum_sq(0, n as isize - 1).sqrt();
    Ok((PI / (n + 1) as f64).cos() + 0.5 * (alpha + p.abs_coeff(n as isize - 1)))
}

pub fn fujii_kubo(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::FujiiKubo, fujii_kubo_value(p))
}

fn bhunia_value(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 2)?;
    let lead = p.abs_coeff(n as isize - 1).max((PI / n as f64).cos());
    Ok(lead + (0.5 * (1.0 + p.sum_sq(0, n as isize - 2))).sqrt())
}

pub fn bhunia(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::Bhunia, bhunia_value(p))
}

/// `1 + max |a_j|`.
pub fn cauchy(p: &MonicPolynomial) -> BoundResult {
    let m = p.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    BoundResult::upper(BoundId::Cauchy, 1.0 + m)
}

/// `sqrt(1 + sum |a_j|^2)`.
pub fn carmichael_mason(p: &MonicPolynomial) -> BoundResult {
    let total = p.sum_sq(0, p.degree() as isize - 1);
    BoundResult::upper(BoundId::CarmichaelMason, (1.0 + total).sqrt())
}

/// Binomial coefficient `C(n, k)`.
///
/// Exact (through `u128`) while the multiplicative recurrence does not
/// overflow, then continued in floating point.
pub fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut exact: u128 = 1;
    for i in 1..=k {
        // exact division: exact * (n - k + i) is i times C(n - k + i, i)
        match exact.checked_mul((n - k + i) as u128) {
            Some(m) => exact = m / i as u128,
            None => {
                let mut approx = exact as f64;
                for j in i..=k {
                    approx = approx * (n - k + j) as f64 / j as f64;
                }
                return approx;
            }
        }
    }
    exact as f64
}

/// Catalan number `C_k = C(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> f64 {
    let mut exact: u128 = 1;
    // C_{i} = C_{i-1} * 2(2i - 1) / (i + 1)
    for i in 1..=k {
        match exact.checked_mul(2 * (2 * i as u128 - 1)) {
            Some(m) => exact = m / (i as u128 + 1),
            None => {
                let mut approx = exact as f64;
                for j in i..=k {
                    approx = approx * (2.0 * (2 * j - 1) as f64) / (j + 1) as f64;
                }
                return approx;
            }
        }
    }
    exact as f64
}

fn require_nonzero_coeffs(g: &GeneralPolynomial) -> Result<(), Inapplicable> {
    match g.coeffs().iter().position(|c| c.norm() == 0.0) {
        Some(k) => Err(Inapplicable(format!("coefficient a_{k} is zero"))),
        None => Ok(()),
    }
}

/// Shared shape of the two ratio annuli:
/// `r1 = min_k (w_k |a_0/a_k|)^{1/k}`, `r2 = max_k (|a_{n-k}/a_n| / w_k)^{1/k}`.
fn ratio_annulus(
    g: &GeneralPolynomial,
    id: BoundId,
    weight: impl Fn(u64, u64) -> f64,
) -> Result<Annulus, Inapplicable> {
    require_nonzero_coeffs(g)?;
    let c = g.coeffs();
    let n = g.degree();
    let mut r1 = f64::INFINITY;
    let mut r2 = 0.0f64;
    for k in 1..=n {
        let w = weight(n as u64, k as u64);
        let e = 1.0 / k as f64;
        r1 = r1.min((w * (c[0] / c[k]).norm()).powf(e));
        r2 = r2.max(((c[n - k] / c[n]).norm() / w).powf(e));
    }
    Ok(Annulus {
        r_lower: r1,
        r_upper: r2,
        source_lower: Some(id),
        source_upper: id,
    })
}

/// Annulus with binomial weights `C(n, k) / (2^n - 1)`. Needs every
/// coefficient nonzero.
pub fn kim_annulus(g: &GeneralPolynomial) -> Result<Annulus, Inapplicable> {
    ratio_annulus(g, BoundId::Kim, |n, k| {
        binomial(n, k) / (2f64.powi(n as i32) - 1.0)
    })
}

/// Annulus with Catalan weights `C_{k-1} C_{n-k} / C_n`. Needs every
/// coefficient nonzero.
pub fn dalal_govil_annulus(g: &GeneralPolynomial) -> Result<Annulus, Inapplicable> {
    ratio_annulus(g, BoundId::DalalGovil, |n, k| {
        catalan(k - 1) * catalan(n - k) / catalan(n)
    })
}
