//! Jensen-type oracles for alternating sums: the convex-function bound of
//! Szegő and its weighted Brunk–Olkin refinement.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::report::{tol_cmp, RatioReport};
use crate::seqcore::{alt_sum, alt_sum_of, BoundedMonotoneSeq, Direction};

#[derive(Clone)]
enum Kind {
    /// x ↦ x^p with p ≥ 1.
    Power(f64),
    /// x ↦ e^x - 1.
    Exponential,
    /// Caller-supplied evaluator; convexity is the caller's assertion.
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

/// A convex function on `[0, domain_hi]`.
///
/// Builtins are midpoint-convexity-verified on a 33-point grid at
/// construction (this targets hypothesis bugs, not adversarial evaluators);
/// custom functions carry the caller's `declared_convex` assertion.
#[derive(Clone)]
pub struct ConvexFn {
    kind: Kind,
    domain_hi: f64,
    declared_convex: bool,
}

impl fmt::Debug for ConvexFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Power(p) => write!(f, "ConvexFn::power({p})"),
            Kind::Exponential => write!(f, "ConvexFn::exponential"),
            Kind::Custom(_) => write!(f, "ConvexFn::custom"),
        }
    }
}

impl ConvexFn {
    pub fn power(p: f64, domain_hi: f64) -> Result<Self> {
        if !p.is_finite() || p < 1.0 {
            return Err(Error::InvalidExponent(format!(
                "power builtin needs p ≥ 1, got {p}"
            )));
        }
        Self::builtin(Kind::Power(p), domain_hi)
    }

    pub fn exponential(domain_hi: f64) -> Result<Self> {
        Self::builtin(Kind::Exponential, domain_hi)
    }

    pub fn custom(
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        domain_hi: f64,
        declared_convex: bool,
    ) -> Result<Self> {
        if !(domain_hi.is_finite() && domain_hi >= 0.0) {
            return Err(Error::InvalidSpec(format!(
                "domain bound must be ≥ 0, got {domain_hi}"
            )));
        }
        Ok(ConvexFn {
            kind: Kind::Custom(Arc::new(f)),
            domain_hi,
            declared_convex,
        })
    }

    fn builtin(kind: Kind, domain_hi: f64) -> Result<Self> {
        if !(domain_hi.is_finite() && domain_hi >= 0.0) {
            return Err(Error::InvalidSpec(format!(
                "domain bound must be ≥ 0, got {domain_hi}"
            )));
        }
        let f = ConvexFn {
            kind,
            domain_hi,
            declared_convex: true,
        };
        f.verify_midpoint_convexity()?;
        Ok(f)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match &self.kind {
            Kind::Power(p) => x.powf(*p),
            Kind::Exponential => x.exp_m1(),
            Kind::Custom(f) => f(x),
        }
    }

    pub fn domain_hi(&self) -> f64 {
        self.domain_hi
    }

    pub fn declared_convex(&self) -> bool {
        self.declared_convex
    }

    fn verify_midpoint_convexity(&self) -> Result<()> {
        let grid: Vec<f64> = (0..33)
            .map(|i| self.domain_hi * i as f64 / 32.0)
            .collect();
        let vals: Vec<f64> = grid.iter().map(|&x| self.eval(x)).collect();
        let scale = vals.iter().cloned().fold(0.0f64, |m, v| m.max(v.abs()));
        for i in 0..grid.len() {
            for j in i..grid.len() {
                let mid = self.eval(0.5 * (grid[i] + grid[j]));
                if mid > 0.5 * (vals[i] + vals[j]) + tol_cmp(scale) {
                    return Err(Error::InvalidSpec(format!(
                        "midpoint convexity fails between {} and {}",
                        grid[i], grid[j]
                    )));
                }
            }
        }
        Ok(())
    }

    fn require_domain(&self, needed: f64) -> Result<()> {
        if needed > self.domain_hi {
            return Err(Error::DomainTooSmall {
                domain: self.domain_hi,
                needed,
            });
        }
        Ok(())
    }
}

/// Jensen-type bound for alternating sums of odd length 2n+1:
///
/// ```text
/// f(Σ (-1)^{k+1} b_k) ≤ Σ (-1)^{k+1} f(b_k)
/// ```
///
/// for non-increasing b and f convex on [0, b_1].
pub fn szego_check(b: &BoundedMonotoneSeq, f: &ConvexFn) -> Result<RatioReport> {
    if b.direction() != Direction::NonIncreasing {
        return Err(Error::NotMonotone("non-increasing"));
    }
    if b.len() % 2 == 0 {
        return Err(Error::InvalidSequence(
            "alternating Jensen bound needs odd length".into(),
        ));
    }
    f.require_domain(b.values()[0])?;
    let lhs = f.eval(alt_sum(b.seq()));
    let v = b.values();
    let rhs = alt_sum_of(v.len(), |i| f.eval(v[i]));
    Ok(RatioReport::sides(lhs, rhs))
}

/// Weighted extension: for non-increasing weights 0 ≤ w_k ≤ w_1 ≤ 1,
/// non-increasing b, and f convex on [0, b_1],
///
/// ```text
/// f(Σ (-1)^{k+1} w_k b_k) ≤ (1 - Σ (-1)^{k+1} w_k) f(0) + Σ (-1)^{k+1} w_k f(b_k) .
/// ```
pub fn brunk_olkin_check(
    w: &BoundedMonotoneSeq,
    b: &BoundedMonotoneSeq,
    f: &ConvexFn,
) -> Result<RatioReport> {
    if w.direction() != Direction::NonIncreasing || b.direction() != Direction::NonIncreasing {
        return Err(Error::NotMonotone("non-increasing"));
    }
    if w.len() != b.len() {
        return Err(Error::LengthMismatch(w.len(), b.len()));
    }
    if w.values()[0] > 1.0 {
        return Err(Error::InvalidSequence(format!(
            "weights must satisfy w_1 ≤ 1, got {}",
            w.values()[0]
        )));
    }
    f.require_domain(b.values()[0])?;
    let (wv, bv) = (w.values(), b.values());
    let n = wv.len();
    let lhs = f.eval(alt_sum_of(n, |i| wv[i] * bv[i]));
    let rhs = (1.0 - alt_sum(w.seq())) * f.eval(0.0)
        + alt_sum_of(n, |i| wv[i] * f.eval(bv[i]));
    Ok(RatioReport::sides(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(v: &[f64]) -> BoundedMonotoneSeq {
        BoundedMonotoneSeq::new(v.to_vec(), Direction::NonIncreasing).unwrap()
    }

    #[test]
    fn builtins_pass_construction_checks() {
        assert!(ConvexFn::power(1.0, 10.0).is_ok());
        assert!(ConvexFn::power(2.5, 10.0).is_ok());
        assert!(ConvexFn::exponential(10.0).is_ok());
        assert!(ConvexFn::power(0.5, 10.0).is_err());
    }

    #[test]
    fn custom_concave_fails_grid_check_when_wrapped_as_builtin() {
        // The custom constructor trusts the caller; the grid check is only
        // for builtins and is exercised via the concave sqrt below.
        let f = ConvexFn::custom(|x| x.sqrt(), 4.0, true).unwrap();
        assert!(f.verify_midpoint_convexity().is_err());
    }

    #[test]
    fn szego_linear_is_equality() {
        let b = dec(&[3.0, 2.0, 1.0]);
        let f = ConvexFn::power(1.0, 3.0).unwrap();
        let r = szego_check(&b, &f).unwrap();
        assert!(r.equality);
    }

    #[test]
    fn szego_square_example() {
        // f(3-2+1) = 4 ≤ 9 - 4 + 1 = 6.
        let b = dec(&[3.0, 2.0, 1.0]);
        let f = ConvexFn::power(2.0, 3.0).unwrap();
        let r = szego_check(&b, &f).unwrap();
        assert_eq!(r.ratio, 4.0);
        assert_eq!(r.bound, 6.0);
        assert!(r.holds && !r.equality);
    }

    #[test]
    fn szego_constant_sequence_equality() {
        let b = dec(&[2.0, 2.0, 2.0]);
        let f = ConvexFn::exponential(2.0).unwrap();
        let r = szego_check(&b, &f).unwrap();
        assert!(r.equality);
    }

    #[test]
    fn szego_rejects_even_length_and_small_domain() {
        let f = ConvexFn::power(2.0, 3.0).unwrap();
        assert!(szego_check(&dec(&[3.0, 2.0]), &f).is_err());
        let small = ConvexFn::power(2.0, 1.0).unwrap();
        assert!(matches!(
            szego_check(&dec(&[3.0, 2.0, 1.0]), &small).unwrap_err(),
            Error::DomainTooSmall { .. }
        ));
    }

    #[test]
    fn brunk_olkin_unit_weights_match_szego() {
        // With w ≡ 1, odd length, f(0) = 0 the bound reduces to the
        // unweighted one.
        let b = dec(&[3.0, 2.0, 1.0]);
        let w = dec(&[1.0, 1.0, 1.0]);
        let f = ConvexFn::power(2.0, 3.0).unwrap();
        let weighted = brunk_olkin_check(&w, &b, &f).unwrap();
        let plain = szego_check(&b, &f).unwrap();
        assert!((weighted.ratio - plain.ratio).abs() < 1e-15);
        assert!((weighted.bound - plain.bound).abs() < 1e-15);
    }

    #[test]
    fn brunk_olkin_zero_weights_equality() {
        // f(0) ≤ f(0) even when f(0) ≠ 0.
        let b = dec(&[3.0, 2.0]);
        let w = dec(&[0.0, 0.0]);
        let f = ConvexFn::custom(|x| x * x + 1.0, 3.0, true).unwrap();
        let r = brunk_olkin_check(&w, &b, &f).unwrap();
        assert!(r.equality);
        assert_eq!(r.ratio, 1.0);
    }

    #[test]
    fn brunk_olkin_direct_example() {
        // w = {1, 0.5}, b = {2, 1}, f = x²: f(1.5) = 2.25 ≤ 4 - 0.5 = 3.5.
        let w = dec(&[1.0, 0.5]);
        let b = dec(&[2.0, 1.0]);
        let f = ConvexFn::power(2.0, 2.0).unwrap();
        let r = brunk_olkin_check(&w, &b, &f).unwrap();
        assert!((r.ratio - 2.25).abs() < 1e-15);
        assert!((r.bound - 3.5).abs() < 1e-15);
        assert!(r.holds);
    }

    #[test]
    fn brunk_olkin_rejects_bad_weights() {
        let w = dec(&[1.5, 0.5]);
        let b = dec(&[2.0, 1.0]);
        let f = ConvexFn::power(2.0, 2.0).unwrap();
        assert!(brunk_olkin_check(&w, &b, &f).is_err());
    }
}
