//! Derivative-free search over constrained monotone sequence spaces,
//! used to empirically approach each sharp constant and stress-test the
//! proved bounds.
//!
//! The optimizer is multi-start compass (coordinate pattern) search: the
//! objectives contain p-th roots and near-degenerate denominators where
//! finite differences are unreliable, so probes walk the 2n coordinate
//! directions with step halving, accepting the first improving probe in a
//! fixed order. Feasibility is guaranteed by construction, never by
//! rejection: raw parameter vectors map onto exactly monotone box-clamped
//! sequences, and probes that hit an excluded denominator score -∞ so the
//! search routes around them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ratios::{
    cauchy_constant, cauchy_ratio, holder_constant, holder_ratio, minkowski_alt_ratio,
    power_ratio_bracket, reverse_minkowski_ratio, BoundsBox, ConjugateExponents,
};
use crate::report::WitnessTrace;
use crate::seqcore::{mix_seed, BoundedMonotoneSeq, Direction};

/// Which ratio functional the search drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchFunctional {
    Holder,
    Cauchy,
    MinkowskiAlt,
    ReverseMinkowski,
    PowerRatio,
}

impl SearchFunctional {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchFunctional::Holder => "holder",
            SearchFunctional::Cauchy => "cauchy",
            SearchFunctional::MinkowskiAlt => "minkowski_alt",
            SearchFunctional::ReverseMinkowski => "reverse_minkowski",
            SearchFunctional::PowerRatio => "power_ratio",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchDirection {
    Maximize,
    Minimize,
}

/// Search configuration.
///
/// `box_a` and `box_b` constrain the two sequences. For the cauchy
/// functional the second sequence is derived as b_k = a_k / c_k from a
/// non-decreasing quotient chain c bounded by `box_b`, which enforces
/// quotient monotonicity structurally; `box_b` then bounds the quotient,
/// not b itself.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchConfig {
    pub functional: SearchFunctional,
    pub direction: SearchDirection,
    pub n: usize,
    pub box_a: (f64, f64),
    pub box_b: (f64, f64),
    pub p: f64,
    /// (r, R) exponents, used by the power_ratio functional only.
    pub power_exponents: (u32, u32),
    pub restarts: usize,
    pub seed: u64,
    pub step_init: f64,
    pub step_min: f64,
}

impl SearchConfig {
    pub fn new(functional: SearchFunctional, n: usize, p: f64, seed: u64) -> Self {
        let positive = matches!(
            functional,
            SearchFunctional::Holder | SearchFunctional::Cauchy | SearchFunctional::PowerRatio
        );
        let default_box = if positive { (0.1, 10.0) } else { (0.0, 100.0) };
        let box_b = if functional == SearchFunctional::Cauchy {
            (1.0, 100.0)
        } else {
            default_box
        };
        SearchConfig {
            functional,
            direction: SearchDirection::Maximize,
            n,
            box_a: default_box,
            box_b,
            p,
            power_exponents: (1, 2),
            restarts: 64,
            seed,
            step_init: 0.25,
            step_min: 1e-8,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Infeasible("n must be ≥ 1".into()));
        }
        if self.restarts == 0 {
            return Err(Error::Infeasible("restarts must be ≥ 1".into()));
        }
        if !(self.step_min > 0.0 && self.step_min < self.step_init) {
            return Err(Error::Infeasible(format!(
                "need 0 < step_min < step_init, got {} and {}",
                self.step_min, self.step_init
            )));
        }
        for (lo, hi, name) in [
            (self.box_a.0, self.box_a.1, "a"),
            (self.box_b.0, self.box_b.1, "b"),
        ] {
            if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || hi < lo {
                return Err(Error::Infeasible(format!(
                    "box for {name} must satisfy 0 ≤ lo ≤ hi, got [{lo}, {hi}]"
                )));
            }
        }
        match self.functional {
            SearchFunctional::Holder => {
                if self.p <= 1.0 {
                    return Err(Error::Infeasible("holder needs p > 1".into()));
                }
                if self.box_a.0 <= 0.0 || self.box_b.0 <= 0.0 {
                    return Err(Error::Infeasible(
                        "holder needs strictly positive boxes".into(),
                    ));
                }
            }
            SearchFunctional::Cauchy => {
                if self.box_a.0 <= 0.0 || self.box_b.0 <= 0.0 {
                    return Err(Error::Infeasible(
                        "cauchy needs a positive box and positive quotient bounds".into(),
                    ));
                }
            }
            SearchFunctional::MinkowskiAlt => {
                if self.p <= 0.0 {
                    return Err(Error::Infeasible("minkowski_alt needs p > 0".into()));
                }
            }
            SearchFunctional::ReverseMinkowski => {
                if self.p < 1.0 {
                    return Err(Error::Infeasible("reverse_minkowski needs p ≥ 1".into()));
                }
            }
            SearchFunctional::PowerRatio => {
                let (r, big_r) = self.power_exponents;
                if r == 0 || big_r < r {
                    return Err(Error::Infeasible("power_ratio needs 1 ≤ r ≤ R".into()));
                }
                if self.n % 2 == 0 {
                    return Err(Error::Infeasible("power_ratio needs odd n".into()));
                }
                if self.box_a.0 <= 0.0 {
                    return Err(Error::Infeasible(
                        "power_ratio needs a strictly positive box".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn dim(&self) -> usize {
        match self.functional {
            SearchFunctional::PowerRatio => self.n,
            _ => 2 * self.n,
        }
    }
}

/// Best witness found by [`search`].
#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub best_value: f64,
    pub witness_a: BoundedMonotoneSeq,
    pub witness_b: Option<BoundedMonotoneSeq>,
    pub bound: f64,
    pub gap: f64,
    pub restart_index: usize,
    pub evaluations: u64,
}

/// Maps an unconstrained raw vector onto a feasible non-increasing sequence
/// in `[lo, hi]`: the first entry lands via a clamped affine map, each
/// subsequent entry subtracts a non-negative gap scaled by the box width and
/// clamps at `lo`. Total: non-finite raw entries are treated as zero.
pub fn param_to_seq(raw: &[f64], lo: f64, hi: f64) -> BoundedMonotoneSeq {
    let width = hi - lo;
    let mut vals = Vec::with_capacity(raw.len());
    let head = sanitize(raw[0]).clamp(0.0, 1.0);
    let mut current = lo + head * width;
    vals.push(current);
    for &r in &raw[1..] {
        current = (current - sanitize(r).abs() * width).max(lo);
        vals.push(current);
    }
    BoundedMonotoneSeq::new_exact(vals, Direction::NonIncreasing)
        .expect("construction yields an exactly monotone boxed sequence")
}

/// Non-decreasing chain in `[lo, hi]` (used for the cauchy quotient).
fn param_to_chain(raw: &[f64], lo: f64, hi: f64) -> Vec<f64> {
    let width = hi - lo;
    let mut vals = Vec::with_capacity(raw.len());
    let head = sanitize(raw[0]).clamp(0.0, 1.0);
    let mut current = lo + head * width;
    vals.push(current);
    for &r in &raw[1..] {
        current = (current + sanitize(r).abs() * width).min(hi);
        vals.push(current);
    }
    vals
}

fn sanitize(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else {
        0.0
    }
}

struct Witness {
    a: BoundedMonotoneSeq,
    b: Option<BoundedMonotoneSeq>,
}

fn build_witness(config: &SearchConfig, raw: &[f64]) -> Option<Witness> {
    let n = config.n;
    match config.functional {
        SearchFunctional::PowerRatio => {
            let x = param_to_seq(raw, config.box_a.0, config.box_a.1);
            Some(Witness { a: x, b: None })
        }
        SearchFunctional::Cauchy => {
            let a = param_to_seq(&raw[..n], config.box_a.0, config.box_a.1);
            let chain = param_to_chain(&raw[n..], config.box_b.0, config.box_b.1);
            let b: Vec<f64> = a
                .values()
                .iter()
                .zip(&chain)
                .map(|(x, c)| x / c)
                .collect();
            let b = BoundedMonotoneSeq::new_exact(b, Direction::NonIncreasing).ok()?;
            Some(Witness { a, b: Some(b) })
        }
        _ => {
            let a = param_to_seq(&raw[..n], config.box_a.0, config.box_a.1);
            let b = param_to_seq(&raw[n..], config.box_b.0, config.box_b.1);
            Some(Witness { a, b: Some(b) })
        }
    }
}

fn evaluate(config: &SearchConfig, raw: &[f64]) -> Option<f64> {
    let w = build_witness(config, raw)?;
    let report = match config.functional {
        SearchFunctional::Holder => {
            let pq = ConjugateExponents::new(config.p).ok()?;
            holder_ratio(&w.a, w.b.as_ref()?, &pq).ok()?
        }
        SearchFunctional::Cauchy => cauchy_ratio(&w.a, w.b.as_ref()?).ok()?,
        SearchFunctional::MinkowskiAlt => {
            minkowski_alt_ratio(&w.a, w.b.as_ref()?, config.p).ok()?
        }
        SearchFunctional::ReverseMinkowski => {
            reverse_minkowski_ratio(w.a.seq(), w.b.as_ref()?.seq(), config.p).ok()?
        }
        SearchFunctional::PowerRatio => {
            let (r, big_r) = config.power_exponents;
            power_ratio_bracket(&w.a, r, big_r).ok()?
        }
    };
    Some(report.ratio)
}

/// Theoretical bound for the witness actually found (tight empirical boxes
/// where the constant depends on them).
fn bound_for(config: &SearchConfig, w: &Witness) -> Result<f64> {
    match config.functional {
        SearchFunctional::Holder => {
            let pq = ConjugateExponents::new(config.p)?;
            let bx = BoundsBox::tight(&w.a, w.b.as_ref().expect("pair functional"))?;
            holder_constant(&bx, &pq)
        }
        SearchFunctional::Cauchy => {
            let bx = BoundsBox::tight(&w.a, w.b.as_ref().expect("pair functional"))?;
            let c = cauchy_constant(&bx)?;
            Ok(c * c)
        }
        SearchFunctional::MinkowskiAlt => Ok(if config.p >= 1.0 {
            2.0f64.powf(1.0 - 1.0 / config.p)
        } else {
            2.0f64.powf(1.0 / config.p - 1.0)
        }),
        SearchFunctional::ReverseMinkowski => Ok(2.0f64.powf(1.0 - 1.0 / config.p)),
        SearchFunctional::PowerRatio => {
            let (r, big_r) = config.power_exponents;
            Ok((1.0 / w.a.lo()) * (1.0 + w.a.hi().powf(f64::from(big_r))).powf(1.0 / f64::from(r)))
        }
    }
}

const MAX_SWEEPS: usize = 10_000;

struct RestartOutcome {
    value: f64,
    raw: Vec<f64>,
    evaluations: u64,
}

/// Compass descent: probes the 2·dim coordinate directions in a fixed
/// order, accepts the first improving move, halves the step after a full
/// failed sweep. Returns the (signed) best value reached.
fn descend(
    config: &SearchConfig,
    sign: f64,
    raw: &mut [f64],
    mut best: f64,
    evals: &mut u64,
) -> f64 {
    let dim = raw.len();
    let eval_signed = |v: &[f64], evals: &mut u64| -> f64 {
        *evals += 1;
        evaluate(config, v).map_or(f64::NEG_INFINITY, |x| sign * x)
    };
    let mut step = config.step_init;
    let mut sweeps = 0;
    while step >= config.step_min && sweeps < MAX_SWEEPS {
        sweeps += 1;
        let mut improved = false;
        'probe: for i in 0..dim {
            for dir in [1.0, -1.0] {
                let saved = raw[i];
                raw[i] = saved + dir * step;
                let v = eval_signed(raw, evals);
                if v > best {
                    best = v;
                    improved = true;
                    break 'probe;
                }
                raw[i] = saved;
            }
        }
        if !improved {
            step *= 0.5;
        }
    }
    best
}

fn run_restart(config: &SearchConfig, restart: usize) -> RestartOutcome {
    let sign = match config.direction {
        SearchDirection::Maximize => 1.0,
        SearchDirection::Minimize => -1.0,
    };
    let dim = config.dim();
    let n = config.n;
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(config.seed, restart as u64));
    let gap_scale = 2.0 / n as f64;
    let mut raw: Vec<f64> = (0..dim)
        .map(|i| {
            if i == 0 || i == n {
                rng.gen::<f64>()
            } else {
                rng.gen::<f64>() * gap_scale
            }
        })
        .collect();
    let mut evals: u64 = 0;
    evals += 1;
    let start = evaluate(config, &raw).map_or(f64::NEG_INFINITY, |x| sign * x);
    let best = descend(config, sign, &mut raw, start, &mut evals);
    RestartOutcome {
        value: best * sign,
        raw,
        evaluations: evals,
    }
}

/// Multi-start compass search. Deterministic given the config: restarts are
/// seeded independently, run in parallel, and merged by restart index (the
/// lowest index wins ties).
pub fn search(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let outcomes: Vec<RestartOutcome> = (0..config.restarts)
        .into_par_iter()
        .map(|r| run_restart(config, r))
        .collect();
    let evaluations: u64 = outcomes.iter().map(|o| o.evaluations).sum();
    let better = |x: f64, y: f64| match config.direction {
        SearchDirection::Maximize => x > y,
        SearchDirection::Minimize => x < y,
    };
    let mut best_idx = None;
    for (i, o) in outcomes.iter().enumerate() {
        if !o.value.is_finite() {
            continue;
        }
        match best_idx {
            None => best_idx = Some(i),
            Some(j) => {
                if better(o.value, outcomes[j].value) {
                    best_idx = Some(i);
                }
            }
        }
    }
    let Some(idx) = best_idx else {
        return Err(Error::Infeasible(
            "every probe hit an excluded or infeasible instance".into(),
        ));
    };
    // Polish the winning restart: re-descend from its point with a fresh
    // step until a full pass yields no gain. Compass stalls where the last
    // halved step was too small to cross a ridge; resetting the step gives
    // the same deterministic walk another chance from a better point.
    let sign = match config.direction {
        SearchDirection::Maximize => 1.0,
        SearchDirection::Minimize => -1.0,
    };
    let mut raw = outcomes[idx].raw.clone();
    let mut polish_evals: u64 = 0;
    let mut best_signed = outcomes[idx].value * sign;
    for _ in 0..8 {
        let improved = descend(config, sign, &mut raw, best_signed, &mut polish_evals);
        if improved <= best_signed {
            break;
        }
        best_signed = improved;
    }
    let evaluations = evaluations + polish_evals;
    let witness = build_witness(config, &raw)
        .ok_or_else(|| Error::Infeasible("witness reconstruction failed".into()))?;
    let best_value =
        evaluate(config, &raw).ok_or_else(|| Error::Infeasible("re-evaluation failed".into()))?;
    let bound = bound_for(config, &witness)?;
    Ok(SearchResult {
        best_value,
        witness_a: witness.a,
        witness_b: witness.b,
        bound,
        gap: (bound - best_value).abs(),
        restart_index: idx,
        evaluations,
    })
}

/// Search quality versus the constructive witness family at comparable size.
#[derive(Debug, Clone, Serialize)]
pub struct SharpnessReport {
    pub functional: SearchFunctional,
    pub p: f64,
    pub search_best: f64,
    pub constructive_best: f64,
    /// constructive - search; positive means the search underperformed.
    pub shortfall: f64,
    pub regression: bool,
}

/// Tabulates a search result against a constructive-family trace; flags a
/// regression if the search falls more than 1e-3 short of the family.
pub fn sharpness_report(
    config: &SearchConfig,
    trace: &WitnessTrace,
) -> Result<SharpnessReport> {
    let expected_family = match config.functional {
        SearchFunctional::MinkowskiAlt => "minkowski_eps_b",
        SearchFunctional::ReverseMinkowski => "reverse_minkowski_eps_n",
        SearchFunctional::Holder => "holder_blowup",
        _ => {
            return Err(Error::MismatchedConfig(format!(
                "no constructive family for {}",
                config.functional.as_str()
            )))
        }
    };
    if trace.family != expected_family {
        return Err(Error::MismatchedConfig(format!(
            "trace family {} does not match functional {}",
            trace.family,
            config.functional.as_str()
        )));
    }
    let constructive_best = trace
        .points
        .iter()
        .map(|p| p.ratio)
        .fold(f64::NEG_INFINITY, f64::max);
    let result = search(config)?;
    let shortfall = constructive_best - result.best_value;
    Ok(SharpnessReport {
        functional: config.functional,
        p: config.p,
        search_best: result.best_value,
        constructive_best,
        shortfall,
        regression: shortfall > 1e-3,
    })
}
