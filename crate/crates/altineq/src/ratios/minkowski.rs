//! Minkowski-type fractions: the alternating-sign version with its sharp
//! constant 2^{1-1/p}, the reverse inequality for plain non-negative sums,
//! the constructive families that approach both sharp constants, and the
//! alternating quasi-norm for 0 < p < 1.

use serde::Serialize;

use super::{check_denominator, inner_power_sum};
use crate::error::{Error, Result};
use crate::report::{RatioReport, TracePoint, WitnessTrace};
use crate::seqcore::{alt_sum_of, compensated_sum, BoundedMonotoneSeq, Direction, Seq};

fn require_non_increasing_pair(
    a: &BoundedMonotoneSeq,
    b: &BoundedMonotoneSeq,
) -> Result<()> {
    if a.direction() != Direction::NonIncreasing || b.direction() != Direction::NonIncreasing {
        return Err(Error::NotMonotone("non-increasing"));
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    Ok(())
}

/// Alternating Minkowski fraction for non-negative non-increasing pairs.
///
/// For p ≥ 1 reports
///
/// ```text
/// F_M = [(Σ (-1)^{k+1} a_k^p)^{1/p} + (Σ (-1)^{k+1} b_k^p)^{1/p}]
///       / (Σ (-1)^{k+1} (a_k+b_k)^p)^{1/p}   ≤   2^{1-1/p} ,
/// ```
///
/// and for 0 < p < 1 the reciprocal fraction against the bound 2^{1/p-1}.
/// The sharp constant is approached, not attained: see
/// [`minkowski_sharpness_trace`].
pub fn minkowski_alt_ratio(
    a: &BoundedMonotoneSeq,
    b: &BoundedMonotoneSeq,
    p: f64,
) -> Result<RatioReport> {
    require_non_increasing_pair(a, b)?;
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::InvalidExponent(format!("p must be > 0, got {p}")));
    }
    let (av, bv) = (a.values(), b.values());
    let root_a = inner_power_sum(av, p)?.powf(1.0 / p);
    let root_b = inner_power_sum(bv, p)?.powf(1.0 / p);
    let sum_roots = root_a + root_b;
    let joint: Vec<f64> = av.iter().zip(bv).map(|(x, y)| x + y).collect();
    let root_joint = inner_power_sum(&joint, p)?.powf(1.0 / p);
    if p >= 1.0 {
        let den = check_denominator(root_joint, sum_roots)?;
        Ok(RatioReport::fraction(
            sum_roots,
            den,
            2.0f64.powf(1.0 - 1.0 / p),
        ))
    } else {
        let den = check_denominator(sum_roots, root_joint)?;
        Ok(RatioReport::fraction(
            root_joint,
            den,
            2.0f64.powf(1.0 / p - 1.0),
        ))
    }
}

/// The inner comparison behind the alternating Minkowski bound:
///
/// ```text
/// Σ (-1)^{k+1} (a_k^p + b_k^p)  ≤  Σ (-1)^{k+1} (a_k+b_k)^p ,   p ≥ 1,
/// ```
///
/// reversed for 0 < p < 1. Holds because (x+y)^p - x^p - y^p is
/// non-decreasing in each argument, so its termwise values inherit the
/// sequences' monotonicity.
pub fn alt_superadditivity_check(
    a: &BoundedMonotoneSeq,
    b: &BoundedMonotoneSeq,
    p: f64,
) -> Result<RatioReport> {
    require_non_increasing_pair(a, b)?;
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::InvalidExponent(format!("p must be > 0, got {p}")));
    }
    let (av, bv) = (a.values(), b.values());
    let n = av.len();
    let split = alt_sum_of(n, |i| av[i].powf(p) + bv[i].powf(p));
    let joint = alt_sum_of(n, |i| (av[i] + bv[i]).powf(p));
    Ok(if p >= 1.0 {
        RatioReport::sides(split, joint)
    } else {
        RatioReport::sides(joint, split)
    })
}

/// Sharpness family for the alternating Minkowski constant: for each grid
/// value b > 1 the instance a = {1,1,1}, b = {b, (b^p-1)^{1/p}, 0} yields
///
/// ```text
/// F_M = 2 / ((1+b)^p - (1 + (b^p-1)^{1/p})^p + 1)^{1/p} = 2^{1-1/p} - ε_b
/// ```
///
/// with ε_b > 0 decreasing to 0 as b grows.
pub fn minkowski_sharpness_trace(p: f64, b_grid: &[f64]) -> Result<WitnessTrace> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::InvalidExponent(format!("p must be > 1, got {p}")));
    }
    if b_grid.is_empty() || b_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid("grid must be strictly increasing".into()));
    }
    if let Some(bad) = b_grid.iter().find(|b| !b.is_finite() || **b <= 1.0) {
        return Err(Error::InvalidGrid(format!(
            "grid entries must exceed 1, got {bad}"
        )));
    }
    let bound = 2.0f64.powf(1.0 - 1.0 / p);
    let points = b_grid
        .iter()
        .map(|&b| {
            let second = (b.powf(p) - 1.0).powf(1.0 / p);
            // Closed form evaluated on the realized instance: the stored
            // element `second` carries rounding, so the b-side root is
            // b^p - second^p rather than exactly 1. At large b that
            // difference (~ulp(b^p)) dominates everything else; folding it
            // in keeps this formula and the ratio evaluation within 1e-12
            // of each other.
            let root_b = (b.powf(p) - second.powf(p)).powf(1.0 / p);
            let den = (1.0 + b).powf(p) - (1.0 + second).powf(p) + 1.0;
            let ratio = (1.0 + root_b) / den.powf(1.0 / p);
            TracePoint {
                param: b,
                ratio,
                bound,
                gap: bound - ratio,
            }
        })
        .collect();
    Ok(WitnessTrace {
        family: "minkowski_eps_b".into(),
        parameter: "b".into(),
        points,
    })
}

/// The family instance behind [`minkowski_sharpness_trace`], for
/// cross-checking the closed form against the ratio evaluation.
pub fn minkowski_sharpness_instance(
    p: f64,
    b: f64,
) -> Result<(BoundedMonotoneSeq, BoundedMonotoneSeq)> {
    if !p.is_finite() || p <= 1.0 || !b.is_finite() || b <= 1.0 {
        return Err(Error::InvalidSpec(format!(
            "family needs p > 1 and b > 1, got p={p}, b={b}"
        )));
    }
    let a = BoundedMonotoneSeq::new(vec![1.0, 1.0, 1.0], Direction::NonIncreasing)?;
    let second = (b.powf(p) - 1.0).powf(1.0 / p);
    let bb = BoundedMonotoneSeq::new(vec![b, second, 0.0], Direction::NonIncreasing)?;
    Ok((a, bb))
}

/// Reverse Minkowski bound for plain non-negative sums:
///
/// ```text
/// 1 ≤ [(Σ a_k^p)^{1/p} + (Σ b_k^p)^{1/p}] / (Σ (a_k+b_k)^p)^{1/p} ≤ 2^{1-1/p}
/// ```
///
/// for p ≥ 1; no monotonicity required.
pub fn reverse_minkowski_ratio(a: &Seq, b: &Seq, p: f64) -> Result<RatioReport> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    if !p.is_finite() || p < 1.0 {
        return Err(Error::InvalidExponent(format!("p must be ≥ 1, got {p}")));
    }
    let (av, bv) = (a.values(), b.values());
    let root_a = compensated_sum(av.iter().map(|x| x.powf(p))).powf(1.0 / p);
    let root_b = compensated_sum(bv.iter().map(|x| x.powf(p))).powf(1.0 / p);
    let num = root_a + root_b;
    let den = compensated_sum(av.iter().zip(bv).map(|(x, y)| (x + y).powf(p))).powf(1.0 / p);
    check_denominator(den, num)?;
    Ok(RatioReport::bracket(
        num,
        den,
        1.0,
        2.0f64.powf(1.0 - 1.0 / p),
    ))
}

/// Sharpness family for the reverse Minkowski constant: a = n ones,
/// b = {n^{1/p}, 0, ...} gives
///
/// ```text
/// ratio = 2 (1 - 1/n + (1 + n^{-1/p})^p)^{-1/p} = 2^{1-1/p} - ε_n
/// ```
///
/// with ε_n > 0 decreasing to 0 as n grows (identically 0 at p = 1).
pub fn reverse_minkowski_sharpness_trace(p: f64, n_grid: &[u64]) -> Result<WitnessTrace> {
    if !p.is_finite() || p < 1.0 {
        return Err(Error::InvalidExponent(format!("p must be ≥ 1, got {p}")));
    }
    if n_grid.is_empty()
        || n_grid.contains(&0)
        || n_grid.windows(2).any(|w| w[1] <= w[0])
    {
        return Err(Error::InvalidGrid(
            "grid must be strictly increasing positive integers".into(),
        ));
    }
    let bound = 2.0f64.powf(1.0 - 1.0 / p);
    let points = n_grid
        .iter()
        .map(|&n| {
            let nf = n as f64;
            let ratio =
                2.0 * (1.0 - 1.0 / nf + (1.0 + nf.powf(-1.0 / p)).powf(p)).powf(-1.0 / p);
            TracePoint {
                param: nf,
                ratio,
                bound,
                gap: bound - ratio,
            }
        })
        .collect();
    Ok(WitnessTrace {
        family: "reverse_minkowski_eps_n".into(),
        parameter: "n".into(),
        points,
    })
}

/// Alternating quasi-norm (Σ (-1)^{k+1} |x_k|^p)^{1/p} for 0 < p < 1 on the
/// cone of non-increasing non-negative sequences.
pub fn quasi_norm(x: &BoundedMonotoneSeq, p: f64) -> Result<f64> {
    if x.direction() != Direction::NonIncreasing {
        return Err(Error::NotMonotone("non-increasing"));
    }
    if !p.is_finite() || p <= 0.0 || p >= 1.0 {
        return Err(Error::InvalidExponent(format!(
            "quasi-norm needs 0 < p < 1, got {p}"
        )));
    }
    Ok(inner_power_sum(x.values(), p)?.powf(1.0 / p))
}

/// One quasi-norm axiom verdict.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub scalar: Option<f64>,
    pub report: RatioReport,
}

/// Checks the three quasi-norm axioms on a pair: definiteness of x,
/// absolute homogeneity ‖λx‖ = |λ| ‖x‖ for each scalar, and the
/// quasi-triangle inequality ‖x+y‖ ≤ K (‖x‖ + ‖y‖) with K = 2^{1/p-1}.
///
/// Definiteness is tolerance-free: it asserts ‖x‖ = 0 exactly when x ≡ 0.
/// On the cone this characterizes strictly decreasing witnesses; a sequence
/// with all adjacent pairs equal also has zero norm.
pub fn quasi_norm_axiom_suite(
    x: &BoundedMonotoneSeq,
    y: &BoundedMonotoneSeq,
    p: f64,
    scalars: &[f64],
) -> Result<Vec<AxiomCheck>> {
    require_non_increasing_pair(x, y)?;
    let norm_x = quasi_norm(x, p)?;
    let norm_y = quasi_norm(y, p)?;
    let mut checks = Vec::with_capacity(scalars.len() + 2);

    let is_zero = x.values().iter().all(|v| *v == 0.0);
    let def_holds = if is_zero { norm_x == 0.0 } else { norm_x > 0.0 };
    checks.push(AxiomCheck {
        axiom: "definiteness".into(),
        scalar: None,
        report: RatioReport {
            numerator: norm_x,
            denominator: 1.0,
            ratio: norm_x,
            bound: 0.0,
            slack: if is_zero { -norm_x } else { norm_x },
            holds: def_holds,
            equality: is_zero && norm_x == 0.0,
        },
    });

    for &lambda in scalars {
        let scaled: Vec<f64> = x.values().iter().map(|v| lambda.abs() * v).collect();
        let scaled = BoundedMonotoneSeq::new_exact(scaled, Direction::NonIncreasing)?;
        let lhs = quasi_norm(&scaled, p)?;
        checks.push(AxiomCheck {
            axiom: "homogeneity".into(),
            scalar: Some(lambda),
            report: RatioReport::equality_check(lhs, lambda.abs() * norm_x),
        });
    }

    let sum: Vec<f64> = x
        .values()
        .iter()
        .zip(y.values())
        .map(|(a, b)| a + b)
        .collect();
    let sum = BoundedMonotoneSeq::new_exact(sum, Direction::NonIncreasing)?;
    let norm_sum = quasi_norm(&sum, p)?;
    let k = 2.0f64.powf(1.0 / p - 1.0);
    checks.push(AxiomCheck {
        axiom: "quasi-triangle".into(),
        scalar: None,
        report: RatioReport::fraction(norm_sum, norm_x + norm_y, k),
    });
    Ok(checks)
}
