//! Validated sequence types, alternating-sum evaluation, and seeded
//! generation of constrained monotone ensembles.
//!
//! Every alternating sum Σ (-1)^{k+1} x_k is evaluated in the paired form
//!
//! ```text
//! Σ_{k=1..N} (x_{2k-1} - x_{2k}),     x_{n+1} = 0 for odd n,
//! ```
//!
//! which avoids catastrophic cancellation on long slowly-decaying sequences:
//! for monotone input every pair difference is non-negative, so the partial
//! sums never oscillate. Pair differences are accumulated with Neumaier
//! compensation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::RatioReport;

/// Monotonicity direction of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    NonIncreasing,
    NonDecreasing,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::NonIncreasing => "non-increasing",
            Direction::NonDecreasing => "non-decreasing",
        }
    }
}

/// A finite sequence of non-negative reals, length ≥ 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seq(Vec<f64>);

impl Seq {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSequence("length must be ≥ 1".into()));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite() || **v < 0.0) {
            return Err(Error::InvalidSequence(format!(
                "elements must be finite and ≥ 0, got {bad}"
            )));
        }
        Ok(Seq(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max(&self) -> f64 {
        self.0.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.0.iter().cloned().fold(f64::INFINITY, f64::min)
    }
}

/// True iff consecutive differences respect `direction` within `tol_mono`.
pub fn validate_monotone(s: &Seq, direction: Direction, tol_mono: f64) -> bool {
    s.values().windows(2).all(|w| match direction {
        Direction::NonIncreasing => w[1] <= w[0] + tol_mono,
        Direction::NonDecreasing => w[1] >= w[0] - tol_mono,
    })
}

/// Monotonicity tolerance for user-supplied floating input.
///
/// Constructed sequences (from [`generate`] or the search parameterization)
/// are exactly monotone and validated with tolerance 0.
pub fn user_tol_mono(hi: f64) -> f64 {
    1e-12 * hi.abs().max(1.0)
}

/// A non-negative monotone sequence together with box bounds `[lo, hi]`.
///
/// Serializes as a plain JSON array of its values.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct BoundedMonotoneSeq {
    values: Seq,
    #[serde(skip)]
    direction: Direction,
    #[serde(skip)]
    lo: f64,
    #[serde(skip)]
    hi: f64,
}

impl BoundedMonotoneSeq {
    /// Validates user input with the floating-point slack of [`user_tol_mono`]
    /// and takes the tight empirical box `[min, max]`.
    pub fn new(values: Vec<f64>, direction: Direction) -> Result<Self> {
        let seq = Seq::new(values)?;
        let hi = seq.max();
        if !validate_monotone(&seq, direction, user_tol_mono(hi)) {
            return Err(Error::NotMonotone(direction.as_str()));
        }
        let lo = seq.min();
        Ok(BoundedMonotoneSeq {
            values: seq,
            direction,
            lo,
            hi,
        })
    }

    /// User input with an explicit widened box.
    pub fn with_box(values: Vec<f64>, direction: Direction, lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || hi < lo {
            return Err(Error::DegenerateBox(format!(
                "need 0 ≤ lo ≤ hi, got [{lo}, {hi}]"
            )));
        }
        let s = Self::new(values, direction)?;
        if s.lo < lo || s.hi > hi {
            let idx = s
                .values
                .values()
                .iter()
                .position(|v| *v < lo || *v > hi)
                .unwrap_or(0);
            return Err(Error::OutOfBox {
                index: idx,
                value: s.values.values()[idx],
                lo,
                hi,
            });
        }
        Ok(BoundedMonotoneSeq { lo, hi, ..s })
    }

    /// Constructor for sequences that are monotone by construction;
    /// validated with tolerance 0.
    pub(crate) fn new_exact(values: Vec<f64>, direction: Direction) -> Result<Self> {
        let seq = Seq::new(values)?;
        if !validate_monotone(&seq, direction, 0.0) {
            return Err(Error::NotMonotone(direction.as_str()));
        }
        let (lo, hi) = (seq.min(), seq.max());
        Ok(BoundedMonotoneSeq {
            values: seq,
            direction,
            lo,
            hi,
        })
    }

    pub fn seq(&self) -> &Seq {
        &self.values
    }

    pub fn values(&self) -> &[f64] {
        self.values.values()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }
}

/// Derives an independent stream seed (splitmix64) so that parallel trials
/// and restarts are deterministic regardless of scheduling.
pub(crate) fn mix_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed.wrapping_add(stream.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Neumaier-compensated sum of the iterator's terms.
pub(crate) fn compensated_sum(terms: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in terms {
        let t = sum + x;
        comp += if sum.abs() >= x.abs() {
            (sum - t) + x
        } else {
            (x - t) + sum
        };
        sum = t;
    }
    sum + comp
}

/// Alternating sum of `f(0), f(1), ..., f(n-1)` via the paired form.
pub(crate) fn alt_sum_of(n: usize, f: impl Fn(usize) -> f64) -> f64 {
    let pairs = (0..n).step_by(2).map(|i| {
        let odd = f(i);
        let even = if i + 1 < n { f(i + 1) } else { 0.0 };
        odd - even
    });
    compensated_sum(pairs)
}

/// Σ_{k=1..n} (-1)^{k+1} s_k, evaluated in the paired form.
///
/// For non-increasing `s` the result lies in `[0, s_1]`.
pub fn alt_sum(s: &Seq) -> f64 {
    let v = s.values();
    alt_sum_of(v.len(), |i| v[i])
}

/// Alternating-sum comparison bound: for non-increasing `a` and
/// non-decreasing `b` with `b_k ≤ cap`,
///
/// ```text
/// Σ (-1)^{k+1} a_k b_k  ≤  cap · Σ (-1)^{k+1} a_k .
/// ```
///
/// Equality holds e.g. if `b ≡ cap`.
pub fn lemma_compare(
    a: &BoundedMonotoneSeq,
    b: &BoundedMonotoneSeq,
    cap: f64,
) -> Result<RatioReport> {
    if a.direction() != Direction::NonIncreasing {
        return Err(Error::NotMonotone("non-increasing"));
    }
    if b.direction() != Direction::NonDecreasing {
        return Err(Error::NotMonotone("non-decreasing"));
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let max_b = b.seq().max();
    if cap < max_b {
        return Err(Error::CapBelowMax { cap, max: max_b });
    }
    let (av, bv) = (a.values(), b.values());
    let lhs = alt_sum_of(av.len(), |i| av[i] * bv[i]);
    let rhs = cap * alt_sum(a.seq());
    Ok(RatioReport::sides(lhs, rhs))
}

/// Shape of the generated ensembles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distribution {
    /// Order statistics of uniform draws on `[lo, hi]`.
    UniformGaps,
    /// Multiplicative random decay from `hi` toward `lo`.
    GeometricDecay,
}

/// Deterministic recipe for one constrained monotone sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub lo: f64,
    pub hi: f64,
    pub direction: Direction,
    pub seed: u64,
    pub distribution: Distribution,
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("n must be ≥ 1".into()));
        }
        if !(self.lo.is_finite() && self.hi.is_finite()) || self.lo < 0.0 || self.hi < self.lo {
            return Err(Error::InvalidSpec(format!(
                "need 0 ≤ lo ≤ hi, got lo={}, hi={}",
                self.lo, self.hi
            )));
        }
        Ok(())
    }
}

/// Generates a sequence satisfying the box and monotonicity invariants
/// exactly: values are drawn, sorted into the declared direction, and
/// clamped into `[lo, hi]`. Pure function of the spec.
pub fn generate(spec: &GenSpec) -> Result<BoundedMonotoneSeq> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let width = spec.hi - spec.lo;
    let mut vals: Vec<f64> = match spec.distribution {
        Distribution::UniformGaps => (0..spec.n)
            .map(|_| spec.lo + rng.gen::<f64>() * width)
            .collect(),
        Distribution::GeometricDecay => {
            let mut level = 1.0f64;
            (0..spec.n)
                .map(|_| {
                    level *= rng.gen_range(0.3..1.0);
                    spec.lo + level * width
                })
                .collect()
        }
    };
    vals.sort_by(|x, y| x.partial_cmp(y).expect("finite values"));
    if spec.direction == Direction::NonIncreasing {
        vals.reverse();
    }
    for v in &mut vals {
        *v = v.clamp(spec.lo, spec.hi);
    }
    BoundedMonotoneSeq::new_exact(vals, spec.direction)
}
