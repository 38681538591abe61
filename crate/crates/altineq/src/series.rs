//! Alternating-series identities: the eta function
//! η(s) = Σ (-1)^{k+1} k^{-s} = (1 - 2^{1-s}) ζ(s) for s > 0, zeta recovery,
//! the two-exponent function
//!
//! ```text
//! F(α, β) = η(qα)^{1/q} η(pβ)^{1/p} / η(α+β) ,
//! ```
//!
//! which attains its maximum value 1 exactly on the curve qα = pβ, and the
//! harmonic / geometric alternating-series inequalities.
//!
//! η is evaluated with the Chebyshev-polynomial acceleration of Cohen,
//! Rodriguez Villegas, and Zagier: n accelerated terms give an error of
//! order (3+√8)^{-n}, so double precision needs ~20 terms where plain
//! summation of k^{-s} at small s is infeasible. The plain paired partial
//! sum with the alternating remainder bound serves as the verification
//! fallback in tests.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratios::ConjugateExponents;
use crate::report::RatioReport;

/// Default tolerance for series evaluation.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Tightest supported tolerance.
pub const MIN_TOL: f64 = 1e-14;

/// η evaluation together with its certified error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EtaResult {
    pub s: f64,
    pub value: f64,
    pub est_error: f64,
    pub terms_used: usize,
}

/// η(s) for s > 0 to within `tol` (tol ≥ 1e-14).
pub fn eta(s: f64, tol: f64) -> Result<EtaResult> {
    if !s.is_finite() || s <= 0.0 {
        return Err(Error::InvalidExponent(format!("eta needs s > 0, got {s}")));
    }
    if !tol.is_finite() || tol < MIN_TOL {
        return Err(Error::InvalidSpec(format!(
            "tolerance must be ≥ {MIN_TOL}, got {tol}"
        )));
    }
    let rho = 3.0 + 8.0f64.sqrt();
    // 2 ρ^{-n} ≤ tol/2 leaves headroom for the O(n ε) rounding term.
    let n = ((4.0 / tol).ln() / rho.ln()).ceil() as usize + 2;
    let value = eta_accelerated(s, n);
    let est_error = 2.0 * rho.powi(-(n as i32)) + 2.0 * f64::EPSILON * n as f64;
    debug_assert!(est_error <= tol);
    Ok(EtaResult {
        s,
        value,
        est_error,
        terms_used: n,
    })
}

/// Chebyshev-accelerated alternating sum of a_k = (k+1)^{-s}, k = 0..n-1.
fn eta_accelerated(s: f64, n: usize) -> f64 {
    let mut d = (3.0 + 8.0f64.sqrt()).powi(n as i32);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut c = -d;
    let mut sum = 0.0;
    let nf = n as f64;
    for k in 0..n {
        let kf = k as f64;
        c = b - c;
        sum += c * (kf + 1.0).powf(-s);
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    sum / d
}

/// Paired partial sum of η(s) over `terms` terms; the raw alternating
/// remainder is below the first omitted term, (terms+1)^{-s}.
pub fn eta_partial_paired(s: f64, terms: usize) -> f64 {
    crate::seqcore::alt_sum_of(terms, |i| ((i + 1) as f64).powf(-s))
}

/// ζ(s) = η(s) / (1 - 2^{1-s}) for s > 0 away from the pole at s = 1.
///
/// The propagated error is tol / |1 - 2^{1-s}|.
pub fn zeta_from_eta(s: f64, tol: f64) -> Result<f64> {
    if (s - 1.0).abs() < 1e-6 {
        return Err(Error::InvalidExponent(format!(
            "s = {s} is too close to the pole at 1"
        )));
    }
    let e = eta(s, tol)?;
    Ok(e.value / (1.0 - 2.0f64.powf(1.0 - s)))
}

/// F(α, β) = η(qα)^{1/q} η(pβ)^{1/p} / η(α+β), computed entirely via η so
/// the (1 - 2^{1-s}) factors never divide by zero. η is evaluated at the
/// tightest supported tolerance so that F carries ~1e-14 error.
pub fn f_func(alpha: f64, beta: f64, pq: &ConjugateExponents) -> Result<f64> {
    if !(alpha.is_finite() && beta.is_finite()) || alpha <= 0.0 || beta <= 0.0 {
        return Err(Error::InvalidExponent(format!(
            "need α, β > 0, got α={alpha}, β={beta}"
        )));
    }
    let (p, q) = (pq.p(), pq.q());
    let num = eta(q * alpha, MIN_TOL)?.value.powf(1.0 / q)
        * eta(p * beta, MIN_TOL)?.value.powf(1.0 / p);
    let den = eta(alpha + beta, MIN_TOL)?.value;
    Ok(num / den)
}

/// Alternating harmonic-series inequality
///
/// ```text
/// η(qα)^{1/q} η(pβ)^{1/p} ≤ η(α+β) ,    α, β > 0 ,
/// ```
///
/// i.e. F(α, β) ≤ 1, with equality exactly on qα = pβ.
pub fn harmonic_ineq_check(
    alpha: f64,
    beta: f64,
    pq: &ConjugateExponents,
    tol: f64,
) -> Result<RatioReport> {
    let eff = tol.clamp(MIN_TOL, DEFAULT_TOL);
    if !(alpha.is_finite() && beta.is_finite()) || alpha <= 0.0 || beta <= 0.0 {
        return Err(Error::InvalidExponent(format!(
            "need α, β > 0, got α={alpha}, β={beta}"
        )));
    }
    let (p, q) = (pq.p(), pq.q());
    let lhs = eta(q * alpha, eff)?.value.powf(1.0 / q) * eta(p * beta, eff)?.value.powf(1.0 / p);
    let rhs = eta(alpha + beta, eff)?.value;
    Ok(RatioReport::sides(lhs, rhs))
}

/// Truncated alternating geometric series Σ_{k=1..terms} (-1)^{k+1} r^k plus
/// the exact tail (-1)^{terms} r^{terms+1} / (1+r); equals r/(1+r) up to
/// rounding for 0 < r < 1.
pub fn alt_geometric_truncated(r: f64, terms: usize) -> f64 {
    let partial = crate::seqcore::alt_sum_of(terms, |i| r.powi(i as i32 + 1));
    let sign = if terms % 2 == 0 { 1.0 } else { -1.0 };
    partial + sign * r.powi(terms as i32 + 1) / (1.0 + r)
}

/// Alternating geometric-series inequality for a, b > 1:
///
/// ```text
/// (1 + a^q)^{-1/q} (1 + b^p)^{-1/p} ≤ (1 + ab)^{-1} ,
/// ```
///
/// the closed forms of the two alternating geometric series. Both sides are
/// cross-checked against truncated series plus exact geometric tail.
/// Equality holds iff a^q = b^p.
pub fn geometric_ineq_check(a: f64, b: f64, pq: &ConjugateExponents) -> Result<RatioReport> {
    if !(a.is_finite() && b.is_finite()) || a <= 1.0 || b <= 1.0 {
        return Err(Error::InvalidExponent(format!(
            "need a, b > 1, got a={a}, b={b}"
        )));
    }
    let (p, q) = (pq.p(), pq.q());
    let lhs = (1.0 + a.powf(q)).powf(-1.0 / q) * (1.0 + b.powf(p)).powf(-1.0 / p);
    let rhs = 1.0 / (1.0 + a * b);
    debug_assert!({
        let sa = alt_geometric_truncated(a.powf(-q), 200).powf(1.0 / q);
        let sb = alt_geometric_truncated(b.powf(-p), 200).powf(1.0 / p);
        let sab = alt_geometric_truncated(1.0 / (a * b), 200);
        (sa * sb - lhs).abs() <= 1e-12 * lhs.max(1.0) && (sab - rhs).abs() <= 1e-12
    });
    Ok(RatioReport::sides(lhs, rhs))
}

/// One grid point of an F(α, β) scan.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FScanPoint {
    pub alpha: f64,
    pub beta: f64,
    pub p: f64,
    pub f: f64,
    pub slack: f64,
}

/// Summary of an F(α, β) grid scan.
#[derive(Debug, Clone, Serialize)]
pub struct FScan {
    pub points: Vec<FScanPoint>,
    pub max_f: f64,
    pub argmax: Option<FScanPoint>,
    pub violations: usize,
    pub equality_points: Vec<FScanPoint>,
}

/// Scans F over the α × β grid for each p; a violation is F > 1 + 2·tol
/// with tol = 1e-12, equality is |F - 1| ≤ 2·tol.
pub fn f_scan(alphas: &[f64], betas: &[f64], ps: &[f64]) -> Result<FScan> {
    if alphas.is_empty() || betas.is_empty() || ps.is_empty() {
        return Err(Error::InvalidGrid("scan grid must be non-empty".into()));
    }
    let mut points = Vec::with_capacity(alphas.len() * betas.len() * ps.len());
    for &p in ps {
        let pq = ConjugateExponents::new(p)?;
        for &alpha in alphas {
            for &beta in betas {
                let f = f_func(alpha, beta, &pq)?;
                points.push(FScanPoint {
                    alpha,
                    beta,
                    p,
                    f,
                    slack: 1.0 - f,
                });
            }
        }
    }
    let max_f = points.iter().map(|pt| pt.f).fold(f64::NEG_INFINITY, f64::max);
    let argmax = points
        .iter()
        .find(|pt| pt.f == max_f)
        .copied();
    let violations = points.iter().filter(|pt| pt.f > 1.0 + 2.0 * DEFAULT_TOL).count();
    let equality_points = points
        .iter()
        .filter(|pt| (pt.f - 1.0).abs() <= 2.0 * DEFAULT_TOL)
        .copied()
        .collect();
    Ok(FScan {
        points,
        max_f,
        argmax,
        violations,
        equality_points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn eta_classical_values() {
        let r = eta(1.0, DEFAULT_TOL).unwrap();
        assert!((r.value - LN_2).abs() < 1e-13, "η(1) = {}", r.value);
        assert!(r.est_error <= DEFAULT_TOL);

        let r = eta(2.0, DEFAULT_TOL).unwrap();
        assert!((r.value - PI * PI / 12.0).abs() < 1e-13, "η(2) = {}", r.value);
    }

    #[test]
    fn eta_small_s_matches_paired_brute_force() {
        // Oracle: 10^7 paired terms; raw alternating remainder below the
        // first omitted term.
        let r = eta(0.5, DEFAULT_TOL).unwrap();
        let brute = eta_partial_paired(0.5, 10_000_000);
        let remainder = (10_000_001f64).powf(-0.5);
        assert!(
            (r.value - brute).abs() <= remainder + r.est_error,
            "accelerated {} vs brute {} (remainder bound {remainder})",
            r.value,
            brute
        );
    }

    #[test]
    fn eta_rejects_bad_input() {
        assert!(eta(0.0, DEFAULT_TOL).is_err());
        assert!(eta(-1.0, DEFAULT_TOL).is_err());
        assert!(eta(2.0, 1e-15).is_err());
    }

    #[test]
    fn eta_is_increasing_in_s() {
        let grid: Vec<f64> = (1..=50).map(|i| 0.1 * i as f64).collect();
        let vals: Vec<f64> = grid
            .iter()
            .map(|&s| eta(s, DEFAULT_TOL).unwrap().value)
            .collect();
        assert!(vals.windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn zeta_classical_values() {
        let z2 = zeta_from_eta(2.0, DEFAULT_TOL).unwrap();
        assert!((z2 - PI * PI / 6.0).abs() < 1e-10);
        let z4 = zeta_from_eta(4.0, DEFAULT_TOL).unwrap();
        assert!((z4 - PI.powi(4) / 90.0).abs() < 1e-10);
    }

    #[test]
    fn zeta_matches_brute_force_with_tail() {
        // Σ k^{-3} over 10^6 terms plus the integral tail bracket.
        let n = 1_000_000usize;
        let brute =
            crate::seqcore::compensated_sum((1..=n).map(|k| (k as f64).powi(-3)));
        let nf = n as f64;
        let tail_mid = 0.5 * (nf.powi(-2) + (nf + 1.0).powi(-2)) / 2.0;
        let z3 = zeta_from_eta(3.0, DEFAULT_TOL).unwrap();
        assert!((z3 - (brute + tail_mid)).abs() < 1e-11);
    }

    #[test]
    fn zeta_guards_the_pole() {
        assert!(zeta_from_eta(1.0 + 1e-9, DEFAULT_TOL).is_err());
    }

    #[test]
    fn f_func_on_curve_is_one() {
        // p = q = 2, α = β.
        let pq = ConjugateExponents::new(2.0).unwrap();
        let f = f_func(0.7, 0.7, &pq).unwrap();
        assert!((f - 1.0).abs() < 2e-12);

        // p = 3, q = 3/2: qα = pβ picks α = 2β.
        let pq = ConjugateExponents::new(3.0).unwrap();
        let f = f_func(1.0, 0.5, &pq).unwrap();
        assert!((f - 1.0).abs() < 2e-12);
    }

    #[test]
    fn f_func_off_curve_below_one() {
        let pq = ConjugateExponents::new(2.0).unwrap();
        let f = f_func(1.0, 2.0, &pq).unwrap();
        assert!(f < 1.0 - 1e-6);
    }

    #[test]
    fn harmonic_check_examples() {
        let pq = ConjugateExponents::new(2.0).unwrap();
        let r = harmonic_ineq_check(0.9, 0.9, &pq, DEFAULT_TOL).unwrap();
        assert!(r.holds && r.equality);
        let r = harmonic_ineq_check(0.3, 1.7, &pq, DEFAULT_TOL).unwrap();
        assert!(r.holds && !r.equality);
    }

    #[test]
    fn geometric_check_examples() {
        let pq = ConjugateExponents::new(2.0).unwrap();
        // a = b = 2: both sides are exactly 1/5.
        let r = geometric_ineq_check(2.0, 2.0, &pq).unwrap();
        assert!((r.ratio - 0.2).abs() < 1e-15);
        assert!((r.bound - 0.2).abs() < 1e-15);
        assert!(r.holds && r.equality);

        // a = 2, b = 3: 1/(√5·√10) ≤ 1/7.
        let r = geometric_ineq_check(2.0, 3.0, &pq).unwrap();
        assert!((r.ratio - 1.0 / 50.0f64.sqrt()).abs() < 1e-15);
        assert!((r.bound - 1.0 / 7.0).abs() < 1e-15);
        assert!(r.holds && !r.equality);

        assert!(geometric_ineq_check(1.0, 2.0, &pq).is_err());
    }

    #[test]
    fn geometric_closed_forms_match_series() {
        let cases = [(1.1f64, 2.0f64), (2.0, 2.0), (5.0, 1.5), (10.0, 3.0)];
        for (base, exponent) in cases {
            let closed = 1.0 / (1.0 + base.powf(exponent));
            let series = alt_geometric_truncated(base.powf(-exponent), 200);
            assert!(
                (closed - series).abs() <= 1e-12,
                "base {base}, exponent {exponent}: {closed} vs {series}"
            );
        }
    }

    #[test]
    fn f_scan_summary() {
        let grid: Vec<f64> = (1..=12).map(|i| 0.25 * i as f64).collect();
        let scan = f_scan(&grid, &grid, &[2.0]).unwrap();
        assert_eq!(scan.violations, 0);
        assert!((scan.max_f - 1.0).abs() <= 2e-12);
        // Equality exactly on the diagonal for p = q = 2.
        assert_eq!(scan.equality_points.len(), grid.len());
        assert!(scan
            .equality_points
            .iter()
            .all(|pt| pt.alpha == pt.beta));
    }
}
