//! Verdict records shared by every inequality check in the crate.
//!
//! All comparisons use the same relative-absolute hybrid tolerance
//! `tol_cmp(scale) = 1e-9 * max(1, |scale|)`, suited to double-precision
//! verification at desk scale. Reports carry the raw slack so downstream
//! analysis can re-threshold with a different tolerance.

use serde::Serialize;

/// Default relative comparison tolerance.
pub const TOL_REL: f64 = 1e-9;

/// Hybrid tolerance anchored at the bounding side of a comparison.
pub fn tol_cmp(scale: f64) -> f64 {
    TOL_REL * scale.abs().max(1.0)
}

/// Same as [`tol_cmp`] with a caller-chosen relative tolerance.
pub fn tol_cmp_with(scale: f64, tol_rel: f64) -> f64 {
    tol_rel * scale.abs().max(1.0)
}

/// Universal verdict record for one inequality instance.
///
/// `slack = bound - ratio`; the verdict flags satisfy
/// `holds ⇔ slack ≥ -tol_cmp(bound)` and `equality ⇔ |slack| ≤ tol_cmp(bound)`.
///
/// Two field conventions are used, matching how each check is stated:
/// fraction-style checks put the checked fraction in `numerator/denominator`
/// with `ratio = numerator/denominator`; sides-style checks (`lhs ≤ rhs`)
/// put `ratio = lhs` and `bound = rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RatioReport {
    pub numerator: f64,
    pub denominator: f64,
    pub ratio: f64,
    pub bound: f64,
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
}

impl RatioReport {
    /// Verdict for `numerator/denominator ≤ bound`.
    ///
    /// A zero numerator yields ratio 0 regardless of the denominator; callers
    /// are expected to reject genuinely degenerate denominators beforehand.
    pub fn fraction(numerator: f64, denominator: f64, bound: f64) -> Self {
        let ratio = if numerator == 0.0 {
            0.0
        } else {
            numerator / denominator
        };
        Self::from_ratio(numerator, denominator, ratio, bound)
    }

    /// Verdict for `lhs ≤ rhs` stated in difference form.
    pub fn sides(lhs: f64, rhs: f64) -> Self {
        Self::from_ratio(lhs, rhs, lhs, rhs)
    }

    /// Verdict for a two-sided bracket `lower ≤ numerator/denominator ≤ upper`.
    ///
    /// `slack` is the minimum of the two one-sided slacks, so a violation of
    /// either side makes `holds` false.
    pub fn bracket(numerator: f64, denominator: f64, lower: f64, upper: f64) -> Self {
        let ratio = if numerator == 0.0 {
            0.0
        } else {
            numerator / denominator
        };
        let tol = tol_cmp(upper);
        let slack = (upper - ratio).min(ratio - lower);
        RatioReport {
            numerator,
            denominator,
            ratio,
            bound: upper,
            slack,
            holds: slack >= -tol,
            equality: slack.abs() <= tol,
        }
    }

    /// Verdict for a three-term bracket `lo ≤ mid ≤ hi` of plain values.
    pub fn bracket_sides(lo: f64, mid: f64, hi: f64) -> Self {
        let tol = tol_cmp(hi);
        let slack = (hi - mid).min(mid - lo);
        RatioReport {
            numerator: lo,
            denominator: hi,
            ratio: mid,
            bound: hi,
            slack,
            holds: slack >= -tol,
            equality: slack.abs() <= tol,
        }
    }

    /// Verdict for `lhs = rhs` (both directions within tolerance).
    pub fn equality_check(lhs: f64, rhs: f64) -> Self {
        let tol = tol_cmp(rhs);
        let slack = rhs - lhs;
        RatioReport {
            numerator: lhs,
            denominator: rhs,
            ratio: lhs,
            bound: rhs,
            slack,
            holds: slack.abs() <= tol,
            equality: slack.abs() <= tol,
        }
    }

    fn from_ratio(numerator: f64, denominator: f64, ratio: f64, bound: f64) -> Self {
        let tol = tol_cmp(bound);
        let slack = bound - ratio;
        RatioReport {
            numerator,
            denominator,
            ratio,
            bound,
            slack,
            holds: slack >= -tol,
            equality: slack.abs() <= tol,
        }
    }

    /// Re-derive the verdict flags from the raw slack with another tolerance.
    pub fn rethreshold(&self, tol_rel: f64) -> Self {
        let tol = tol_cmp_with(self.bound, tol_rel);
        RatioReport {
            holds: self.slack >= -tol,
            equality: self.slack.abs() <= tol,
            ..*self
        }
    }
}

/// A [`RatioReport`] labeled for serialization: which functional produced
/// it, at which size and exponents, over which box.
#[derive(Debug, Clone, Serialize)]
pub struct LabeledReport {
    pub functional: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(flatten)]
    pub report: RatioReport,
    #[serde(rename = "box", skip_serializing_if = "Option::is_none")]
    pub bounds: Option<crate::ratios::BoundsBox>,
}

impl LabeledReport {
    pub fn new(functional: &str, n: usize, report: RatioReport) -> Self {
        LabeledReport {
            functional: functional.to_string(),
            n,
            p: None,
            q: None,
            report,
            bounds: None,
        }
    }

    pub fn with_exponents(mut self, p: f64, q: Option<f64>) -> Self {
        self.p = Some(p);
        self.q = q;
        self
    }

    pub fn with_box(mut self, bounds: crate::ratios::BoundsBox) -> Self {
        self.bounds = Some(bounds);
        self
    }
}

/// One evaluated point of a witness-family trace.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TracePoint {
    pub param: f64,
    pub ratio: f64,
    pub bound: f64,
    pub gap: f64,
}

/// Parameter sweep along a constructive witness family, with per-point
/// ratio, bound, and gap between them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessTrace {
    pub family: String,
    pub parameter: String,
    pub points: Vec<TracePoint>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_holds_and_slack() {
        let r = RatioReport::fraction(3.0, 2.0, 2.0);
        assert!(r.holds);
        assert!(!r.equality);
        assert!((r.ratio - 1.5).abs() < 1e-15);
        assert!((r.slack - 0.5).abs() < 1e-15);
    }

    #[test]
    fn fraction_zero_numerator_gives_zero_ratio() {
        let r = RatioReport::fraction(0.0, 5.0, 1.0);
        assert_eq!(r.ratio, 0.0);
        assert!(r.holds);
    }

    #[test]
    fn sides_equality_flag() {
        let r = RatioReport::sides(6.0, 6.0);
        assert!(r.holds);
        assert!(r.equality);
        let r = RatioReport::sides(6.0 + 1e-3, 6.0);
        assert!(!r.holds);
    }

    #[test]
    fn bracket_fails_on_either_side() {
        let low = RatioReport::bracket(0.5, 1.0, 1.0, 2.0);
        assert!(!low.holds);
        let high = RatioReport::bracket(3.0, 1.0, 1.0, 2.0);
        assert!(!high.holds);
        let mid = RatioReport::bracket(1.5, 1.0, 1.0, 2.0);
        assert!(mid.holds && !mid.equality);
    }

    #[test]
    fn rethreshold_reuses_raw_slack() {
        let r = RatioReport::sides(1.0 + 1e-6, 1.0);
        assert!(!r.holds);
        assert!(r.rethreshold(1e-3).holds);
    }
}
