//! The core ratio functionals: alternating-sign Hölder, Cauchy, and
//! Minkowski fractions with their sharp constants, the witness families
//! that approach (or nullify) the bounds, the alternating quasi-norm,
//! and the classical positive-term oracles (Szegő, Brunk–Olkin,
//! Cauchy–Zhuang, Bougoffa).

mod cauchy;
mod convex;
mod holder;
mod minkowski;

pub use cauchy::{cauchy_constant, cauchy_ratio, zhuang_check, zhuang_constant};
pub use convex::{brunk_olkin_check, szego_check, ConvexFn};
pub use holder::{
    holder_blowup_trace, holder_constant, holder_ratio, holder_zero_witness,
};
pub use minkowski::{
    alt_superadditivity_check, minkowski_alt_ratio, minkowski_sharpness_instance,
    minkowski_sharpness_trace, quasi_norm, quasi_norm_axiom_suite, reverse_minkowski_ratio,
    reverse_minkowski_sharpness_trace, AxiomCheck,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{tol_cmp, RatioReport};
use crate::seqcore::{alt_sum_of, BoundedMonotoneSeq, Seq};

/// Conjugate Hölder exponents p, q > 1 with 1/p + 1/q = 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConjugateExponents {
    p: f64,
    q: f64,
}

impl ConjugateExponents {
    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() || p <= 1.0 {
            return Err(Error::InvalidExponent(format!(
                "conjugate exponents need p > 1, got {p}"
            )));
        }
        let q = p / (p - 1.0);
        debug_assert!((1.0 / p + 1.0 / q - 1.0).abs() <= 1e-12);
        Ok(ConjugateExponents { p, q })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }
}

/// Box bounds 0 < a_lo ≤ a_k ≤ a_hi, 0 < b_lo ≤ b_k ≤ b_hi for a pair of
/// positive sequences.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundsBox {
    pub a_lo: f64,
    pub a_hi: f64,
    pub b_lo: f64,
    pub b_hi: f64,
}

impl BoundsBox {
    pub fn new(a_lo: f64, a_hi: f64, b_lo: f64, b_hi: f64) -> Result<Self> {
        for (lo, hi, name) in [(a_lo, a_hi, "a"), (b_lo, b_hi, "b")] {
            if !(lo.is_finite() && hi.is_finite()) || lo <= 0.0 || hi < lo {
                return Err(Error::DegenerateBox(format!(
                    "need 0 < {name}_lo ≤ {name}_hi, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(BoundsBox {
            a_lo,
            a_hi,
            b_lo,
            b_hi,
        })
    }

    /// The tight empirical box of a pair: element-wise min/max. This is the
    /// default bound box - it yields the strongest verifiable constant.
    pub fn tight(a: &BoundedMonotoneSeq, b: &BoundedMonotoneSeq) -> Result<Self> {
        Self::new(a.seq().min(), a.seq().max(), b.seq().min(), b.seq().max())
    }

    /// Tight box of two plain sequences.
    pub fn tight_seqs(a: &Seq, b: &Seq) -> Result<Self> {
        Self::new(a.min(), a.max(), b.min(), b.max())
    }
}

/// Quotient bounds 0 < m ≤ a_k/b_k ≤ M.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuotientBox {
    pub m: f64,
    pub big_m: f64,
}

impl QuotientBox {
    pub fn new(m: f64, big_m: f64) -> Result<Self> {
        if !(m.is_finite() && big_m.is_finite()) || m <= 0.0 || big_m < m {
            return Err(Error::DegenerateBox(format!(
                "need 0 < m ≤ M, got [{m}, {big_m}]"
            )));
        }
        Ok(QuotientBox { m, big_m })
    }
}

/// Reverse-Minkowski constant for positive terms with a bounded quotient:
/// C = 1 + 1/(m+1) - 1/(M+1) ∈ [1, 2).
pub fn bougoffa_constant(qb: &QuotientBox) -> Result<f64> {
    let c = 1.0 + 1.0 / (qb.m + 1.0) - 1.0 / (qb.big_m + 1.0);
    debug_assert!((1.0..2.0).contains(&c));
    Ok(c)
}

/// Exponent p* = ln 2 / (ln 2 - ln C_{m,M}) below which the sequence-free
/// constant 2^{1-1/p} beats the quotient-box constant C_{m,M}.
///
/// For p in [1, p*) we have 2^{1-1/p} < C_{m,M}; the comparison flips at p*.
pub fn crossover_exponent(qb: &QuotientBox) -> Result<f64> {
    let c = bougoffa_constant(qb)?;
    if c >= 2.0 {
        return Err(Error::InvalidExponent(format!(
            "quotient-box constant must be < 2, got {c}"
        )));
    }
    if c == 1.0 {
        // m = M: the advantage interval is empty.
        return Ok(1.0);
    }
    Ok(std::f64::consts::LN_2 / (std::f64::consts::LN_2 - c.ln()))
}

/// Power-mean style bracket for a single positive non-increasing sequence of
/// odd length and integer exponents r ≤ R:
///
/// ```text
/// 1 ≤ (Σ (-1)^{k+1} x_k^R)^{1/R} / (Σ (-1)^{k+1} x_k^r)^{1/r}
///   ≤ (1/x_lo) (1 + x_hi^R)^{1/r} .
/// ```
pub fn power_ratio_bracket(
    x: &BoundedMonotoneSeq,
    r: u32,
    big_r: u32,
) -> Result<RatioReport> {
    use crate::seqcore::Direction;
    if x.direction() != Direction::NonIncreasing {
        return Err(Error::NotMonotone("non-increasing"));
    }
    if x.len() % 2 == 0 {
        return Err(Error::InvalidSequence(
            "power ratio bracket needs odd length".into(),
        ));
    }
    if r == 0 || big_r < r {
        return Err(Error::InvalidExponent(format!(
            "need integers 1 ≤ r ≤ R, got r={r}, R={big_r}"
        )));
    }
    if x.lo() <= 0.0 {
        return Err(Error::DegenerateBox(
            "sequence must be strictly positive".into(),
        ));
    }
    let v = x.values();
    let (rf, bf) = (f64::from(r), f64::from(big_r));
    let hi_sum = inner_power_sum(v, bf)?;
    let lo_sum = inner_power_sum(v, rf)?;
    if lo_sum <= 0.0 {
        return Err(Error::DegenerateDenominator);
    }
    let num = hi_sum.powf(1.0 / bf);
    let den = lo_sum.powf(1.0 / rf);
    let upper = (1.0 / x.lo()) * (1.0 + x.hi().powf(bf)).powf(1.0 / rf);
    Ok(RatioReport::bracket(num, den, 1.0, upper))
}

/// Alternating power sum Σ (-1)^{k+1} v_k^p of a non-increasing sequence.
///
/// Mathematically non-negative; tiny negative values from rounding are
/// clamped to zero, anything materially negative signals broken
/// monotonicity upstream and is surfaced as an error.
pub(crate) fn inner_power_sum(v: &[f64], p: f64) -> Result<f64> {
    let s = alt_sum_of(v.len(), |i| v[i].powf(p));
    if s < 0.0 {
        let scale = v.first().copied().unwrap_or(0.0).powf(p);
        if -s <= tol_cmp(scale) {
            return Ok(0.0);
        }
        return Err(Error::NonPositiveInnerSum(s));
    }
    Ok(s)
}

/// Degeneracy guard for ratio denominators: excluded whenever the magnitude
/// is below 1e-300 or below 1e-12 of the numerator scale.
pub(crate) fn check_denominator(den: f64, num_scale: f64) -> Result<f64> {
    if den.abs() < 1e-300 || den.abs() < 1e-12 * num_scale.abs() {
        return Err(Error::DegenerateDenominator);
    }
    Ok(den)
}
