//! Alternating Cauchy–Schwarz fraction (the p = q = 2 case with a monotone
//! quotient) and its positive-term counterpart with the Zhuang constant.

use super::{check_denominator, inner_power_sum, BoundsBox};
use crate::error::{Error, Result};
use crate::report::RatioReport;
use crate::seqcore::{alt_sum_of, compensated_sum, BoundedMonotoneSeq, Direction, Seq};

/// c = max{A/a + a/A; B/b + b/B} / 2, the alternating Cauchy constant; ≥ 1.
pub fn cauchy_constant(bx: &BoundsBox) -> Result<f64> {
    let fa = bx.a_hi / bx.a_lo + bx.a_lo / bx.a_hi;
    let fb = bx.b_hi / bx.b_lo + bx.b_lo / bx.b_hi;
    Ok(0.5 * fa.max(fb))
}

/// Evaluates
///
/// ```text
/// Σ (-1)^{k+1} a_k² · Σ (-1)^{k+1} b_k²
/// -------------------------------------  ≤  c²
///        (Σ (-1)^{k+1} a_k b_k)²
/// ```
///
/// for positive non-increasing pairs whose quotient a_k/b_k is monotone.
/// Equality holds at the bound when both sequences are constant (tight box).
pub fn cauchy_ratio(a: &BoundedMonotoneSeq, b: &BoundedMonotoneSeq) -> Result<RatioReport> {
    if a.direction() != Direction::NonIncreasing || b.direction() != Direction::NonIncreasing {
        return Err(Error::NotMonotone("non-increasing"));
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    if a.seq().min() <= 0.0 || b.seq().min() <= 0.0 {
        return Err(Error::InvalidSequence(
            "sequences must be strictly positive".into(),
        ));
    }
    let (av, bv) = (a.values(), b.values());
    let quotient: Vec<f64> = av.iter().zip(bv).map(|(x, y)| x / y).collect();
    if !quotient_monotone(&quotient) {
        return Err(Error::QuotientNotMonotone);
    }
    let sum_a2 = inner_power_sum(av, 2.0)?;
    let sum_b2 = inner_power_sum(bv, 2.0)?;
    let num = sum_a2 * sum_b2;
    let den_root = alt_sum_of(av.len(), |i| av[i] * bv[i]);
    check_denominator(den_root, num.sqrt())?;
    let den = den_root * den_root;
    let c = cauchy_constant(&BoundsBox::tight(a, b)?)?;
    Ok(RatioReport::fraction(num, den, c * c))
}

fn quotient_monotone(q: &[f64]) -> bool {
    let scale = q.iter().cloned().fold(0.0f64, |m, v| m.max(v.abs()));
    let tol = 1e-12 * scale.max(1.0);
    q.windows(2).all(|w| w[1] <= w[0] + tol) || q.windows(2).all(|w| w[1] >= w[0] - tol)
}

/// The Zhuang constant ς = max(A/b_lo + b_lo/A; a_lo/B + B/a_lo) / 2.
pub fn zhuang_constant(bx: &BoundsBox) -> f64 {
    0.5 * (bx.a_hi / bx.b_lo + bx.b_lo / bx.a_hi).max(bx.a_lo / bx.b_hi + bx.b_hi / bx.a_lo)
}

/// Positive-term two-sided bound with the Zhuang constant:
///
/// ```text
/// 1 ≤ Σ a_k² Σ b_k² / (Σ a_k b_k)² ≤ ς² .
/// ```
///
/// Plain positive sequences, no monotonicity required; the box must contain
/// them.
pub fn zhuang_check(a: &Seq, b: &Seq, bx: &BoundsBox) -> Result<RatioReport> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    if a.min() <= 0.0 || b.min() <= 0.0 {
        return Err(Error::InvalidSequence(
            "sequences must be strictly positive".into(),
        ));
    }
    if a.min() < bx.a_lo || a.max() > bx.a_hi || b.min() < bx.b_lo || b.max() > bx.b_hi {
        return Err(Error::DegenerateBox(
            "box does not contain the sequences".into(),
        ));
    }
    let (av, bv) = (a.values(), b.values());
    let sum_a2 = compensated_sum(av.iter().map(|x| x * x));
    let sum_b2 = compensated_sum(bv.iter().map(|x| x * x));
    let sum_ab = compensated_sum(av.iter().zip(bv).map(|(x, y)| x * y));
    let num = sum_a2 * sum_b2;
    check_denominator(sum_ab, num.sqrt())?;
    let varsigma = zhuang_constant(bx);
    Ok(RatioReport::bracket(
        num,
        sum_ab * sum_ab,
        1.0,
        varsigma * varsigma,
    ))
}
