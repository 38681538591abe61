//! Two-point oracle inequalities for α, β ≥ 0, used standalone and as
//! internal test oracles for the ratio functionals:
//!
//! ```text
//! (α+β)^p ≤ 2^{p-1}(α^p + β^p)            p ≥ 1   (Jensen)
//! (α+β)^p ≥ 2^{p-1}(α^p + β^p)            0<p<1   (reverse Jensen)
//! αβ ≤ α^p/p + β^q/q                      1/p+1/q = 1, p > 1   (Young)
//! pβ^{p-1}(α-β) ≤ α^p - β^p ≤ pα^{p-1}(α-β)    p ≥ 1, α ≥ β
//! α^p + β^p ≤ (α+β)^p                     p ≥ 1   (superadditivity)
//! ```

use crate::error::{Error, Result};
use crate::ratios::ConjugateExponents;
use crate::report::RatioReport;

/// A two-point instance (α, β, p).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPointCase {
    pub alpha: f64,
    pub beta: f64,
    pub p: f64,
}

impl TwoPointCase {
    pub fn new(alpha: f64, beta: f64, p: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite()) || alpha < 0.0 || beta < 0.0 {
            return Err(Error::InvalidSequence(
                "α, β must be finite and ≥ 0".into(),
            ));
        }
        if !p.is_finite() || p <= 0.0 {
            return Err(Error::InvalidExponent(format!("p must be > 0, got {p}")));
        }
        Ok(TwoPointCase { alpha, beta, p })
    }
}

/// x^e with the convention 0^0 = 1, by continuity of the inequality
/// statements that hit it.
pub(crate) fn powz(x: f64, e: f64) -> f64 {
    if e == 0.0 {
        1.0
    } else {
        x.powf(e)
    }
}

/// Jensen for p ≥ 1, reverse Jensen for 0 < p < 1. Equality at α = β.
pub fn jensen_check(c: &TwoPointCase) -> Result<RatioReport> {
    let TwoPointCase { alpha, beta, p } = *c;
    let sum_pow = (alpha + beta).powf(p);
    let split = 2.0f64.powf(p - 1.0) * (alpha.powf(p) + beta.powf(p));
    Ok(if p >= 1.0 {
        RatioReport::sides(sum_pow, split)
    } else {
        RatioReport::sides(split, sum_pow)
    })
}

/// Young: αβ ≤ α^p/p + β^q/q. Equality iff α^p = β^q.
pub fn young_check(alpha: f64, beta: f64, pq: &ConjugateExponents) -> Result<RatioReport> {
    if !(alpha.is_finite() && beta.is_finite()) || alpha < 0.0 || beta < 0.0 {
        return Err(Error::InvalidSequence(
            "α, β must be finite and ≥ 0".into(),
        ));
    }
    let lhs = alpha * beta;
    let rhs = alpha.powf(pq.p()) / pq.p() + beta.powf(pq.q()) / pq.q();
    Ok(RatioReport::sides(lhs, rhs))
}

/// The power bracket pβ^{p-1}(α-β) ≤ α^p - β^p ≤ pα^{p-1}(α-β) for α ≥ β ≥ 0,
/// p ≥ 1.
pub fn power_bracket_check(alpha: f64, beta: f64, p: f64) -> Result<RatioReport> {
    let c = TwoPointCase::new(alpha, beta, p)?;
    if p < 1.0 {
        return Err(Error::InvalidExponent(format!("p must be ≥ 1, got {p}")));
    }
    if alpha < beta {
        return Err(Error::InvalidSequence(format!(
            "need α ≥ β, got α={alpha}, β={beta}"
        )));
    }
    let gap = c.alpha - c.beta;
    let lo = p * powz(c.beta, p - 1.0) * gap;
    let mid = c.alpha.powf(p) - c.beta.powf(p);
    let hi = p * powz(c.alpha, p - 1.0) * gap;
    Ok(RatioReport::bracket_sides(lo, mid, hi))
}

/// Superadditivity of x ↦ x^p: α^p + β^p ≤ (α+β)^p for p ≥ 1.
pub fn superadditivity_check(alpha: f64, beta: f64, p: f64) -> Result<RatioReport> {
    let c = TwoPointCase::new(alpha, beta, p)?;
    if p < 1.0 {
        return Err(Error::InvalidExponent(format!("p must be ≥ 1, got {p}")));
    }
    let lhs = c.alpha.powf(p) + c.beta.powf(p);
    let rhs = (c.alpha + c.beta).powf(p);
    Ok(RatioReport::sides(lhs, rhs))
}
