//! Alternating-sign reverse Hölder fraction
//!
//! ```text
//! F_H = (Σ (-1)^{k+1} a_k^q)^{1/q} (Σ (-1)^{k+1} b_k^p)^{1/p}
//!       ------------------------------------------------------
//!                   Σ (-1)^{k+1} a_k b_k
//! ```
//!
//! for positive non-increasing a, b. F_H is bounded above by
//! C = A^{q-1}/b_lo + B^{p-1}/a_lo (the box constant), while no positive
//! constant bounds it from below: the paired-plateau family drives the
//! numerator to exactly zero, and with a zero tail element F_H grows without
//! bound as the denominator gap shrinks.

use super::{check_denominator, inner_power_sum, BoundsBox, ConjugateExponents};
use crate::error::{Error, Result};
use crate::report::{RatioReport, TracePoint, WitnessTrace};
use crate::seqcore::{alt_sum_of, BoundedMonotoneSeq, Direction, Seq};

/// Upper constant C = A^{q-1}/b_lo + B^{p-1}/a_lo; always in (1, ∞) and
/// diverging as either lower bound goes to zero.
pub fn holder_constant(bx: &BoundsBox, pq: &ConjugateExponents) -> Result<f64> {
    let c = bx.a_hi.powf(pq.q() - 1.0) / bx.b_lo + bx.b_hi.powf(pq.p() - 1.0) / bx.a_lo;
    if c.is_nan() || c <= 1.0 {
        return Err(Error::DegenerateBox(format!(
            "box constant must exceed 1, got {c}"
        )));
    }
    Ok(c)
}

/// Evaluates F_H against the tight-box constant of the pair.
pub fn holder_ratio(
    a: &BoundedMonotoneSeq,
    b: &BoundedMonotoneSeq,
    pq: &ConjugateExponents,
) -> Result<RatioReport> {
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
    let sum_aq = inner_power_sum(av, pq.q())?;
    let sum_bp = inner_power_sum(bv, pq.p())?;
    let num = sum_aq.powf(1.0 / pq.q()) * sum_bp.powf(1.0 / pq.p());
    let den = check_denominator(alt_sum_of(av.len(), |i| av[i] * bv[i]), num)?;
    let bound = holder_constant(&BoundsBox::tight(a, b)?, pq)?;
    Ok(RatioReport::fraction(num, den, bound))
}

/// The no-lower-bound family: `a` repeats each plateau value twice so that
/// its alternating q-power sum telescopes to exactly zero, while `b` keeps a
/// nonzero denominator. Requires at least one strict adjacent pair gap in
/// `b` (the all-pairs-equal case is excluded: its denominator vanishes too).
pub fn holder_zero_witness(
    n_even: usize,
    plateau: &Seq,
    b: &Seq,
) -> Result<(BoundedMonotoneSeq, BoundedMonotoneSeq)> {
    if n_even == 0 || n_even % 2 != 0 {
        return Err(Error::InvalidSequence(format!(
            "witness length must be even and ≥ 2, got {n_even}"
        )));
    }
    if plateau.len() != n_even / 2 {
        return Err(Error::LengthMismatch(plateau.len(), n_even / 2));
    }
    if b.len() != n_even {
        return Err(Error::LengthMismatch(b.len(), n_even));
    }
    let has_gap = b
        .values()
        .chunks(2)
        .any(|pair| pair.len() == 2 && pair[0] != pair[1]);
    if !has_gap {
        return Err(Error::ExcludedFamily(
            "b must have an unequal adjacent pair (b_{2k-1} ≠ b_{2k} for some k)".into(),
        ));
    }
    let doubled: Vec<f64> = plateau
        .values()
        .iter()
        .flat_map(|&v| [v, v])
        .collect();
    let a = BoundedMonotoneSeq::new(doubled, Direction::NonIncreasing)?;
    let b = BoundedMonotoneSeq::new(b.values().to_vec(), Direction::NonIncreasing)?;
    if a.seq().min() <= 0.0 || b.seq().min() <= 0.0 {
        return Err(Error::InvalidSequence(
            "witness sequences must be strictly positive".into(),
        ));
    }
    Ok((a, b))
}

/// Unboundedness trace for F_H: odd-length instances with a ≡ 1, last
/// b-element 0, fixed b-tail value, and total pair-gap sum taken from the
/// grid. Each point reports F_H together with the lower estimate
/// p^{1/p} (b_tail / gap_sum)^{1-1/p}, which F_H dominates; F_H grows as the
/// gap shrinks.
pub fn holder_blowup_trace(
    pq: &ConjugateExponents,
    b_tail: f64,
    gap_grid: &[f64],
) -> Result<WitnessTrace> {
    if !(b_tail.is_finite() && b_tail > 0.0) {
        return Err(Error::InvalidSpec(format!(
            "b_tail must be positive, got {b_tail}"
        )));
    }
    if gap_grid.is_empty()
        || gap_grid.iter().any(|g| !g.is_finite() || *g <= 0.0)
        || gap_grid.windows(2).any(|w| w[1] >= w[0])
    {
        return Err(Error::InvalidGrid(
            "gap grid must be positive and strictly decreasing".into(),
        ));
    }
    let p = pq.p();
    let points = gap_grid
        .iter()
        .map(|&gap| {
            // a ≡ 1 of length 3 makes the a-factor exactly 1, so F_H reduces
            // to (Σ (-1)^{k+1} b_k^p)^{1/p} / Σ (-1)^{k+1} b_k.
            let b = [b_tail + gap, b_tail, 0.0];
            let num = alt_sum_of(3, |i| b[i].powf(p)).powf(1.0 / p);
            let den = alt_sum_of(3, |i| b[i]);
            let ratio = num / den;
            let estimate = p.powf(1.0 / p) * (b_tail / den).powf(1.0 - 1.0 / p);
            TracePoint {
                param: gap,
                ratio,
                bound: estimate,
                gap: ratio - estimate,
            }
        })
        .collect();
    Ok(WitnessTrace {
        family: "holder_blowup".into(),
        parameter: "gap_sum".into(),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(v: &[f64]) -> BoundedMonotoneSeq {
        BoundedMonotoneSeq::new(v.to_vec(), Direction::NonIncreasing).unwrap()
    }

    fn pq2() -> ConjugateExponents {
        ConjugateExponents::new(2.0).unwrap()
    }

    #[test]
    fn constant_examples() {
        let c = holder_constant(&BoundsBox::new(1.0, 1.0, 1.0, 1.0).unwrap(), &pq2()).unwrap();
        assert_eq!(c, 2.0);
        let c = holder_constant(&BoundsBox::new(1.0, 2.0, 1.0, 2.0).unwrap(), &pq2()).unwrap();
        assert_eq!(c, 4.0);
    }

    #[test]
    fn constant_diverges_as_lower_bound_vanishes() {
        let mut prev = f64::NEG_INFINITY;
        for b_lo in [1.0, 0.1, 0.01, 1e-6] {
            let c =
                holder_constant(&BoundsBox::new(1.0, 2.0, b_lo, 2.0).unwrap(), &pq2()).unwrap();
            assert!(c > prev);
            prev = c;
        }
        assert!(prev > 1e6);
    }

    #[test]
    fn ratio_direct_example() {
        // a = b = {2,1}: (4-1)^{1/2}(4-1)^{1/2}/(4-1) = 1; C = 2/1 + 2/1 = 4.
        let a = dec(&[2.0, 1.0]);
        let r = holder_ratio(&a, &a, &pq2()).unwrap();
        assert!((r.ratio - 1.0).abs() < 1e-15);
        assert_eq!(r.bound, 4.0);
        assert!(r.holds);
    }

    #[test]
    fn ratio_constant_sequences_odd_length() {
        for p in [1.5, 2.0, 3.0] {
            let pq = ConjugateExponents::new(p).unwrap();
            let c = dec(&[2.5, 2.5, 2.5]);
            let r = holder_ratio(&c, &c, &pq).unwrap();
            assert!((r.ratio - 1.0).abs() < 1e-12, "p={p}: ratio {}", r.ratio);
        }
    }

    #[test]
    fn ratio_paired_equal_family_is_zero() {
        // a = {2,2}: alternating q-power sum telescopes to 0 exactly.
        let a = dec(&[2.0, 2.0]);
        let b = dec(&[3.0, 1.0]);
        let r = holder_ratio(&a, &b, &pq2()).unwrap();
        assert_eq!(r.ratio, 0.0);
        assert!(r.holds);
    }

    #[test]
    fn ratio_rejects_degenerate_denominator() {
        // a and b both pair-constant: denominator telescopes to 0.
        let a = dec(&[2.0, 2.0]);
        let b = dec(&[3.0, 3.0]);
        assert_eq!(
            holder_ratio(&a, &b, &pq2()).unwrap_err(),
            Error::DegenerateDenominator
        );
    }

    #[test]
    fn ratio_rejects_nonpositive() {
        let a = dec(&[1.0, 0.0]);
        let b = dec(&[2.0, 1.0]);
        assert!(holder_ratio(&a, &b, &pq2()).is_err());
    }

    #[test]
    fn zero_witness_examples() {
        let plateau = Seq::new(vec![1.0]).unwrap();
        let b = Seq::new(vec![3.0, 1.0]).unwrap();
        let (a, bb) = holder_zero_witness(2, &plateau, &b).unwrap();
        assert_eq!(a.values(), &[1.0, 1.0]);
        let r = holder_ratio(&a, &bb, &pq2()).unwrap();
        assert_eq!(r.ratio, 0.0);

        let plateau = Seq::new(vec![2.0, 1.0]).unwrap();
        let b = Seq::new(vec![4.0, 3.0, 2.0, 1.0]).unwrap();
        let (a, bb) = holder_zero_witness(4, &plateau, &b).unwrap();
        assert_eq!(a.values(), &[2.0, 2.0, 1.0, 1.0]);
        for p in [1.5, 2.0, 3.0] {
            let pq = ConjugateExponents::new(p).unwrap();
            let r = holder_ratio(&a, &bb, &pq).unwrap();
            assert_eq!(r.ratio, 0.0, "p={p}");
        }
    }

    #[test]
    fn zero_witness_rejects_excluded_family() {
        let plateau = Seq::new(vec![1.0]).unwrap();
        let b = Seq::new(vec![1.0, 1.0]).unwrap();
        assert!(matches!(
            holder_zero_witness(2, &plateau, &b).unwrap_err(),
            Error::ExcludedFamily(_)
        ));
    }

    #[test]
    fn blowup_trace_examples() {
        let t = holder_blowup_trace(&pq2(), 1.0, &[1.0, 0.01]).unwrap();
        // gap = 1: estimate √2, F_H = √3.
        assert!((t.points[0].bound - 2.0f64.sqrt()).abs() < 1e-9);
        assert!((t.points[0].ratio - 3.0f64.sqrt()).abs() < 1e-9);
        assert!(t.points[0].ratio >= t.points[0].bound);
        // gap = 0.01: estimate √2 · 10 ≈ 14.14.
        assert!((t.points[1].bound - 2.0f64.sqrt() * 10.0).abs() < 1e-6);
        assert!(t.points[1].ratio >= t.points[1].bound);
    }

    #[test]
    fn blowup_trace_grows_as_gap_shrinks() {
        let t = holder_blowup_trace(&pq2(), 1.0, &[1.0, 0.1, 0.01]).unwrap();
        assert!(t.points.windows(2).all(|w| w[1].ratio > w[0].ratio));
    }

    #[test]
    fn blowup_trace_rejects_bad_grid() {
        assert!(holder_blowup_trace(&pq2(), 1.0, &[0.1, 1.0]).is_err());
        assert!(holder_blowup_trace(&pq2(), 1.0, &[]).is_err());
        assert!(holder_blowup_trace(&pq2(), 0.0, &[1.0, 0.1]).is_err());
    }
}
