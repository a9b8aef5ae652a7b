//! Upper bounds from numerical-radius estimates on the Frobenius companion
//! matrix, plus the rectangle containing all zeros.
//!
//! No matrix is formed. Each bound is the closed-form scalar expression that
//! the corresponding matrix estimate reduces to. The squared-form bounds
//! (everything except BP1) are returned as radii, so every result compares
//! directly with `|z|`.
//!
//! Throughout, `n` is the degree and `a_j` the coefficients of the monic
//! input, indexed with `a_{-1} = 0`.

use std::f64::consts::PI;

use super::{require_degree, BoundId, BoundResult, Inapplicable, RectRegion};
use crate::polynomial::MonicPolynomial;

fn cos_pi_over(k: usize) -> f64 {
    (PI / k as f64).cos()
}

/// `1/2 (|a_{n-1}| + sqrt((1 + |a_{n-2}|)^2 + sum_{j != n-2} |a_j|^2))`,
/// the estimate of the first-row-and-column part of the companion matrix
/// shared by BP1 through BP4.
fn top_block(p: &MonicPolynomial) -> f64 {
    let n = p.degree() as isize;
    let shifted = (1.0 + p.abs_coeff(n - 2)).powi(2);
    let rest = p.sum_sq(0, n - 1) - p.coeff(n - 2).norm_sqr();
    0.5 * (p.abs_coeff(n - 1) + (shifted + rest).sqrt())
}

fn alpha(p: &MonicPolynomial) -> f64 {
    p.sum_sq(0, p.degree() as isize - 1).sqrt()
}

fn bp1(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 3)?;
    Ok(cos_pi_over(n) + top_block(p))
}

fn bp2(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 3)?;
    let a2 = alpha(p).powi(2);
    let top = p.abs_coeff(n as isize - 1);
    let norm = ((1.0 + a2 + ((1.0 - a2).powi(2) + 4.0 * top * top).sqrt()) / 2.0).sqrt();
    Ok((cos_pi_over(n).powi(2) + top_block(p).powi(2) + norm).sqrt())
}

fn bp3(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 3)? as isize;
    // (1 + |a_{n-4}|)^2 + sum_{j=0, j != n-4}^{n-3} |a_j|^2
    let inner = (1.0 + p.abs_coeff(n - 4)).powi(2) + p.sum_sq(0, n - 3) - p.coeff(n - 4).norm_sqr();
    Ok((cos_pi_over(n as usize).powi(2) + top_block(p).powi(2) + 0.5 * inner.sqrt()).sqrt())
}

fn bp4(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 3)? as isize;
    let a = |j| p.abs_coeff(j);
    let tail: f64 = (0..=n - 4).map(|j| (a(j + 1) + a(j - 1)).powi(2)).sum();
    let inner = a(n - 3).powi(2) + (1.0 + a(n - 2) + a(n - 4)).powi(2) + tail;
    Ok((cos_pi_over(n as usize).powi(2) + top_block(p).powi(2) + 0.25 * inner.sqrt()).sqrt())
}

fn bp5(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 3)? as isize;
    let alpha = alpha(p);
    let lower = p.sum_sq(0, n - 2).sqrt();
    let sq = cos_pi_over(n as usize + 1).powi(2)
        + p.abs_coeff(n - 2)
        + 0.25 * (p.abs_coeff(n - 1) + alpha).powi(2)
        + 0.5 * lower
        + 0.5 * alpha;
    Ok(sq.sqrt())
}

fn aok(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 3)?;
    let alpha = alpha(p);
    let sq =
        cos_pi_over(n + 1).powi(2) + 0.25 * (p.abs_coeff(n as isize - 1) + alpha).powi(2) + alpha;
    Ok(sq.sqrt())
}

fn bp6(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 3)? as isize;
    let ext = p.extended().map_err(|e| Inapplicable(e.to_string()))?;
    let b = |j| ext.abs_b(j);
    let head = (1.0 + b(n - 1)).powi(2) + (0..=n - 2).map(|j| b(j).powi(2)).sum::<f64>();
    let tail: f64 = (0..=n - 3).map(|j| (b(j + 1) + b(j - 1)).powi(2)).sum();
    let inner = b(n - 2).powi(2) + (1.0 + b(n - 1) + b(n - 3)).powi(2) + tail;
    let sq = cos_pi_over(n as usize + 1).powi(2) + 0.25 * head + 0.25 * inner.sqrt();
    Ok(sq.sqrt())
}

fn bp7(p: &MonicPolynomial) -> Result<f64, Inapplicable> {
    let n = require_degree(p, 3)? as isize;
    let ext = p.extended().map_err(|e| Inapplicable(e.to_string()))?;
    let total: f64 = (0..n).map(|j| ext.b(j).norm_sqr()).sum();
    let sq = cos_pi_over(n as usize + 2).powi(2) + ext.abs_b(n - 1) + 0.25 * total + total.sqrt();
    Ok(sq.sqrt())
}

/// `cos(pi/n) + 1/2 (|a_{n-1}| + sqrt((1+|a_{n-2}|)^2 + sum_{j != n-2} |a_j|^2))`.
pub fn ub_bp1(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::Bp1, bp1(p))
}

/// Square root of `cos^2(pi/n) + w^2 + ||R||`, where `w` is the BP1 row term
/// and `||R||` the norm of the first row and column of the companion matrix.
pub fn ub_bp2(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::Bp2, bp2(p))
}

/// Square root of `cos^2(pi/n) + w^2 + 1/2 sqrt((1+|a_{n-4}|)^2 + sum_{j != n-4}^{n-3} |a_j|^2)`.
pub fn ub_bp3(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::Bp3, bp3(p))
}

/// Square root of `cos^2(pi/n) + w^2 + 1/4 sqrt(|a_{n-3}|^2 + (1+|a_{n-2}|+|a_{n-4}|)^2
/// + sum_{j=0}^{n-4} (|a_{j+1}| + |a_{j-1}|)^2)`.
pub fn ub_bp4(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::Bp4, bp4(p))
}

/// Square root of `cos^2(pi/(n+1)) + |a_{n-2}| + 1/4 (|a_{n-1}| + alpha)^2
/// + 1/2 sqrt(sum_{j<=n-2} |a_j|^2) + 1/2 alpha`, with `alpha^2 = sum |a_j|^2`.
pub fn ub_bp5(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::Bp5, bp5(p))
}

/// The Abu-Omar–Kittaneh bound `cos^2(pi/(n+1)) + 1/4 (|a_{n-1}| + alpha)^2 + alpha`,
/// as a radius.
pub fn ub_aok(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::Aok, aok(p))
}

/// BP4's estimate carried over to `q(z) = (z - a_{n-1}) p(z)`, written in
/// terms of the `b` sequence.
pub fn ub_bp6(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::Bp6, bp6(p))
}

/// BP5's estimate carried over to `q(z) = (z - a_{n-1}) p(z)`:
/// `cos^2(pi/(n+2)) + |b_{n-1}| + 1/4 sum |b_j|^2 + sqrt(sum |b_j|^2)`.
pub fn ub_bp7(p: &MonicPolynomial) -> BoundResult {
    BoundResult::upper_or(BoundId::Bp7, bp7(p))
}

/// Whether BP5 beats the Abu-Omar–Kittaneh bound, decided from the
/// coefficients alone:
/// `2|a_{n-2}| < sqrt(sum_{j<=n-1} |a_j|^2) - sqrt(sum_{j<=n-2} |a_j|^2)`.
///
/// Returns `false` below degree three.
pub fn sharper_than_aok(p: &MonicPolynomial) -> bool {
    let n = p.degree() as isize;
    if n < 3 {
        return false;
    }
    2.0 * p.abs_coeff(n - 2) < p.sum_sq(0, n - 1).sqrt() - p.sum_sq(0, n - 2).sqrt()
}

/// Half-widths `mu1`, `mu2` of a rectangle `[-mu1, mu1] x [-mu2, mu2]`
/// holding every zero, from the Hermitian and skew-Hermitian parts of the
/// companion matrix.
pub fn rect_region(p: &MonicPolynomial) -> Result<RectRegion, Inapplicable> {
    let n = require_degree(p, 3)?;
    let top = p.coeff(n as isize - 1);
    let next = p.coeff(n as isize - 2);
    let tail = p.sum_sq(0, n as isize - 3);
    let c = cos_pi_over(n);
    let half = |d: f64, off: f64| c + 0.5 * (d + (d * d + off + tail).sqrt());
    Ok(RectRegion {
        mu1: half(top.re.abs(), (1.0 - next).norm_sqr()),
        mu2: half(top.im.abs(), (1.0 + next).norm_sqr()),
    })
}
