//! Seeded verification campaigns: hypothesis-satisfying instances are
//! generated per trial, each inequality is evaluated, and outcomes are
//! aggregated deterministically (trials fan out across workers and merge by
//! trial index, so thread count never changes a report).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classical::{
    jensen_check, power_bracket_check, superadditivity_check, young_check, TwoPointCase,
};
use crate::error::{Error, Result};
use crate::ratios::{
    alt_superadditivity_check, brunk_olkin_check, cauchy_ratio, holder_ratio,
    minkowski_alt_ratio, power_ratio_bracket, quasi_norm_axiom_suite, reverse_minkowski_ratio,
    szego_check, zhuang_check, BoundsBox, ConjugateExponents, ConvexFn,
};
use crate::report::{tol_cmp_with, RatioReport, TOL_REL};
use crate::seqcore::{
    generate, mix_seed, BoundedMonotoneSeq, Direction, Distribution, GenSpec, Seq,
};

/// Inequalities a campaign can drive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CampaignFunctional {
    Holder,
    Cauchy,
    MinkowskiAlt,
    ReverseMinkowski,
    Lemma,
    PowerRatio,
    AltSuperadditivity,
    Szego,
    BrunkOlkin,
    Zhuang,
    Jensen,
    Young,
    PowerBracket,
    Superadditivity,
    QuasiNorm,
}

impl CampaignFunctional {
    pub fn as_str(self) -> &'static str {
        match self {
            CampaignFunctional::Holder => "holder",
            CampaignFunctional::Cauchy => "cauchy",
            CampaignFunctional::MinkowskiAlt => "minkowski_alt",
            CampaignFunctional::ReverseMinkowski => "reverse_minkowski",
            CampaignFunctional::Lemma => "lemma",
            CampaignFunctional::PowerRatio => "power_ratio",
            CampaignFunctional::AltSuperadditivity => "alt_superadditivity",
            CampaignFunctional::Szego => "szego",
            CampaignFunctional::BrunkOlkin => "brunk_olkin",
            CampaignFunctional::Zhuang => "zhuang",
            CampaignFunctional::Jensen => "jensen",
            CampaignFunctional::Young => "young",
            CampaignFunctional::PowerBracket => "power_bracket",
            CampaignFunctional::Superadditivity => "superadditivity",
            CampaignFunctional::QuasiNorm => "quasi_norm",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "holder" => CampaignFunctional::Holder,
            "cauchy" => CampaignFunctional::Cauchy,
            "minkowski_alt" => CampaignFunctional::MinkowskiAlt,
            "reverse_minkowski" => CampaignFunctional::ReverseMinkowski,
            "lemma" => CampaignFunctional::Lemma,
            "power_ratio" => CampaignFunctional::PowerRatio,
            "alt_superadditivity" => CampaignFunctional::AltSuperadditivity,
            "szego" => CampaignFunctional::Szego,
            "brunk_olkin" => CampaignFunctional::BrunkOlkin,
            "zhuang" => CampaignFunctional::Zhuang,
            "jensen" => CampaignFunctional::Jensen,
            "young" => CampaignFunctional::Young,
            "power_bracket" => CampaignFunctional::PowerBracket,
            "superadditivity" => CampaignFunctional::Superadditivity,
            "quasi_norm" => CampaignFunctional::QuasiNorm,
            _ => return None,
        })
    }

    /// Exponent list appropriate to the functional's hypotheses.
    pub fn default_p_list(self) -> Vec<f64> {
        match self {
            CampaignFunctional::Holder => vec![1.5, 2.0, 3.0],
            CampaignFunctional::MinkowskiAlt
            | CampaignFunctional::ReverseMinkowski
            | CampaignFunctional::AltSuperadditivity
            | CampaignFunctional::Szego
            | CampaignFunctional::BrunkOlkin => vec![1.0, 1.5, 2.0, 3.0],
            CampaignFunctional::QuasiNorm => vec![0.25, 0.5, 0.75],
            _ => vec![],
        }
    }
}

/// Campaign parameters.
#[derive(Debug, Clone, Serialize)]
pub struct CampaignSpec {
    pub functional: CampaignFunctional,
    pub trials: u64,
    pub n_range: (usize, usize),
    pub box_range: (f64, f64),
    pub p_list: Vec<f64>,
    pub seed: u64,
    /// Relative comparison tolerance for the holds/violation verdicts.
    pub tol_rel: f64,
    /// Cauchy only: generate independent pairs instead of the structural
    /// quotient-chain construction, so quotient-hypothesis failures show up
    /// in the error count.
    pub raw_pairs: bool,
}

impl CampaignSpec {
    pub fn new(functional: CampaignFunctional, trials: u64, seed: u64) -> Self {
        CampaignSpec {
            functional,
            trials,
            n_range: (2, 64),
            box_range: (0.1, 10.0),
            p_list: functional.default_p_list(),
            seed,
            tol_rel: TOL_REL,
            raw_pairs: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_range.0 == 0 || self.n_range.1 < self.n_range.0 {
            return Err(Error::InvalidSpec(format!(
                "bad n range {:?}",
                self.n_range
            )));
        }
        let (lo, hi) = self.box_range;
        if !(lo.is_finite() && hi.is_finite()) || lo <= 0.0 || hi < lo {
            return Err(Error::InvalidSpec(format!(
                "box range must satisfy 0 < lo ≤ hi, got [{lo}, {hi}]"
            )));
        }
        let need_p = |pred: fn(&f64) -> bool, what: &str| -> Result<()> {
            if self.p_list.is_empty() || !self.p_list.iter().all(pred) {
                return Err(Error::InvalidSpec(format!(
                    "{} requires a p list with {what}",
                    self.functional.as_str()
                )));
            }
            Ok(())
        };
        match self.functional {
            CampaignFunctional::Holder => need_p(|p| *p > 1.0, "p > 1")?,
            CampaignFunctional::MinkowskiAlt => need_p(|p| *p > 0.0, "p > 0")?,
            CampaignFunctional::ReverseMinkowski => need_p(|p| *p >= 1.0, "p ≥ 1")?,
            CampaignFunctional::AltSuperadditivity => need_p(|p| *p > 0.0, "p > 0")?,
            CampaignFunctional::Szego | CampaignFunctional::BrunkOlkin => {
                need_p(|p| *p >= 1.0, "p ≥ 1")?
            }
            CampaignFunctional::QuasiNorm => need_p(|p| *p > 0.0 && *p < 1.0, "0 < p < 1")?,
            _ => {}
        }
        Ok(())
    }
}

/// The instance behind the worst violation, for reproduction.
#[derive(Debug, Clone, Serialize)]
pub struct ViolationRecord {
    pub trial: u64,
    pub n: usize,
    pub p: Option<f64>,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub ratio: f64,
    pub bound: f64,
    pub slack: f64,
}

/// Aggregated campaign outcome.
#[derive(Debug, Clone, Serialize)]
pub struct CampaignReport {
    pub functional: CampaignFunctional,
    pub trials: u64,
    pub holds: u64,
    pub equalities: u64,
    /// Instances excluded by hypothesis or denominator degeneracy.
    pub errors: u64,
    pub violations: u64,
    pub worst_slack: Option<f64>,
    pub worst_instance: Option<ViolationRecord>,
}

struct Trial {
    report: Result<RatioReport>,
    n: usize,
    p: Option<f64>,
    a: Vec<f64>,
    b: Vec<f64>,
}

#[derive(Clone)]
struct Accum {
    holds: u64,
    equalities: u64,
    errors: u64,
    violations: u64,
    worst: Option<(f64, u64)>,
    worst_violation: Option<ViolationRecord>,
}

impl Accum {
    fn identity() -> Self {
        Accum {
            holds: 0,
            equalities: 0,
            errors: 0,
            violations: 0,
            worst: None,
            worst_violation: None,
        }
    }

    fn merge(mut self, other: Accum) -> Self {
        self.holds += other.holds;
        self.equalities += other.equalities;
        self.errors += other.errors;
        self.violations += other.violations;
        self.worst = match (self.worst, other.worst) {
            (None, w) | (w, None) => w,
            (Some(x), Some(y)) => Some(if (y.0, y.1) < (x.0, x.1) { y } else { x }),
        };
        self.worst_violation = match (self.worst_violation.take(), other.worst_violation) {
            (None, w) | (w, None) => w,
            (Some(x), Some(y)) => Some(if (y.slack, y.trial) < (x.slack, x.trial) {
                y
            } else {
                x
            }),
        };
        self
    }
}

/// Runs the campaign. Exit criteria live with the caller; the report
/// carries everything needed (a nonzero violation count means a proved
/// bound failed, errors count hypothesis-excluded instances only).
pub fn run_campaign(spec: &CampaignSpec) -> Result<CampaignReport> {
    spec.validate()?;
    let accum = (0..spec.trials)
        .into_par_iter()
        .map(|trial| {
            let t = run_trial(spec, trial);
            let mut acc = Accum::identity();
            match t.report {
                Err(_) => acc.errors = 1,
                Ok(report) => {
                    let tol = tol_cmp_with(report.bound, spec.tol_rel);
                    let holds = report.slack >= -tol;
                    let equality = report.slack.abs() <= tol;
                    acc.worst = Some((report.slack, trial));
                    if holds {
                        acc.holds = 1;
                        if equality {
                            acc.equalities = 1;
                        }
                    } else {
                        acc.violations = 1;
                        acc.worst_violation = Some(ViolationRecord {
                            trial,
                            n: t.n,
                            p: t.p,
                            a: t.a,
                            b: t.b,
                            ratio: report.ratio,
                            bound: report.bound,
                            slack: report.slack,
                        });
                    }
                }
            }
            acc
        })
        .reduce(Accum::identity, Accum::merge);
    Ok(CampaignReport {
        functional: spec.functional,
        trials: spec.trials,
        holds: accum.holds,
        equalities: accum.equalities,
        errors: accum.errors,
        violations: accum.violations,
        worst_slack: accum.worst.map(|w| w.0),
        worst_instance: accum.worst_violation,
    })
}

fn pick_p(spec: &CampaignSpec, trial: u64) -> Option<f64> {
    if spec.p_list.is_empty() {
        None
    } else {
        Some(spec.p_list[(trial % spec.p_list.len() as u64) as usize])
    }
}

fn sample_box(rng: &mut ChaCha8Rng, range: (f64, f64)) -> (f64, f64) {
    let x = rng.gen_range(range.0..=range.1);
    let y = rng.gen_range(range.0..=range.1);
    (x.min(y), x.max(y))
}

fn gen_mono(
    rng: &mut ChaCha8Rng,
    n: usize,
    bx: (f64, f64),
    direction: Direction,
    trial: u64,
) -> BoundedMonotoneSeq {
    let spec = GenSpec {
        n,
        lo: bx.0,
        hi: bx.1,
        direction,
        seed: rng.gen(),
        distribution: if trial % 2 == 0 {
            Distribution::UniformGaps
        } else {
            Distribution::GeometricDecay
        },
    };
    generate(&spec).expect("validated generation spec")
}

fn gen_plain(rng: &mut ChaCha8Rng, n: usize, bx: (f64, f64)) -> Seq {
    Seq::new((0..n).map(|_| rng.gen_range(bx.0..=bx.1)).collect()).expect("finite draws")
}

fn convex_for(p_list: &[f64], trial: u64, domain_hi: f64) -> ConvexFn {
    let idx = (trial % (p_list.len() as u64 + 1)) as usize;
    if idx < p_list.len() {
        ConvexFn::power(p_list[idx], domain_hi).expect("p ≥ 1 validated")
    } else {
        ConvexFn::exponential(domain_hi).expect("valid domain")
    }
}

fn run_trial(spec: &CampaignSpec, trial: u64) -> Trial {
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(spec.seed, trial));
    let n = rng.gen_range(spec.n_range.0..=spec.n_range.1);
    // Odd-length functionals stay inside the configured range.
    let odd_n = if n % 2 == 1 {
        n
    } else if n + 1 <= spec.n_range.1 {
        n + 1
    } else {
        n - 1
    };
    let p = pick_p(spec, trial);
    let box_a = sample_box(&mut rng, spec.box_range);
    let box_b = sample_box(&mut rng, spec.box_range);
    let dec = Direction::NonIncreasing;

    match spec.functional {
        CampaignFunctional::Holder => {
            let a = gen_mono(&mut rng, n, box_a, dec, trial);
            let b = gen_mono(&mut rng, n, box_b, dec, trial);
            let pq = ConjugateExponents::new(p.expect("validated")).expect("p > 1");
            let report = holder_ratio(&a, &b, &pq);
            trial_record(report, n, p, a.values(), b.values(), trial)
        }
        CampaignFunctional::Cauchy => {
            let a = gen_mono(&mut rng, n, box_a, dec, trial);
            let b = if spec.raw_pairs {
                gen_mono(&mut rng, n, box_b, dec, trial)
            } else {
                // Quotient-chain construction: b_k = a_k / c_k with c
                // non-decreasing, so a_k/b_k is monotone structurally.
                let c_hi = rng.gen_range(1.0..=4.0);
                let chain =
                    gen_mono(&mut rng, n, (1.0, c_hi), Direction::NonDecreasing, trial);
                let vals: Vec<f64> = a
                    .values()
                    .iter()
                    .zip(chain.values())
                    .map(|(x, c)| x / c)
                    .collect();
                match BoundedMonotoneSeq::new(vals, dec) {
                    Ok(b) => b,
                    Err(_) => {
                        return Trial {
                            report: Err(Error::QuotientNotMonotone),
                            n,
                            p,
                            a: a.values().to_vec(),
                            b: vec![],
                        }
                    }
                }
            };
            let report = cauchy_ratio(&a, &b);
            trial_record(report, n, p, a.values(), b.values(), trial)
        }
        CampaignFunctional::MinkowskiAlt => {
            let a = gen_mono(&mut rng, n, box_a, dec, trial);
            let b = gen_mono(&mut rng, n, box_b, dec, trial);
            let report = minkowski_alt_ratio(&a, &b, p.expect("validated"));
            trial_record(report, n, p, a.values(), b.values(), trial)
        }
        CampaignFunctional::ReverseMinkowski => {
            let a = gen_plain(&mut rng, n, box_a);
            let b = gen_plain(&mut rng, n, box_b);
            let report = reverse_minkowski_ratio(&a, &b, p.expect("validated"));
            trial_record(report, n, p, a.values(), b.values(), trial)
        }
        CampaignFunctional::Lemma => {
            let a = gen_mono(&mut rng, n, box_a, dec, trial);
            let b = gen_mono(&mut rng, n, box_b, Direction::NonDecreasing, trial);
            let report = crate::seqcore::lemma_compare(&a, &b, box_b.1);
            trial_record(report, n, p, a.values(), b.values(), trial)
        }
        CampaignFunctional::PowerRatio => {
            let x = gen_mono(&mut rng, odd_n, box_a, dec, trial);
            let r = rng.gen_range(1u32..=3);
            let big_r = rng.gen_range(r..=4);
            let report = power_ratio_bracket(&x, r, big_r);
            trial_record(report, odd_n, Some(f64::from(big_r)), x.values(), &[], trial)
        }
        CampaignFunctional::AltSuperadditivity => {
            let a = gen_mono(&mut rng, n, box_a, dec, trial);
            let b = gen_mono(&mut rng, n, box_b, dec, trial);
            let report = alt_superadditivity_check(&a, &b, p.expect("validated"));
            trial_record(report, n, p, a.values(), b.values(), trial)
        }
        CampaignFunctional::Szego => {
            let b = gen_mono(&mut rng, odd_n, box_a, dec, trial);
            let f = convex_for(&spec.p_list, trial, b.values()[0]);
            let report = szego_check(&b, &f);
            trial_record(report, odd_n, p, b.values(), &[], trial)
        }
        CampaignFunctional::BrunkOlkin => {
            let w = gen_mono(&mut rng, n, (0.0, 1.0), dec, trial);
            let b = gen_mono(&mut rng, n, box_b, dec, trial);
            let f = convex_for(&spec.p_list, trial, b.values()[0]);
            let report = brunk_olkin_check(&w, &b, &f);
            trial_record(report, n, p, w.values(), b.values(), trial)
        }
        CampaignFunctional::Zhuang => {
            let a = gen_plain(&mut rng, n, box_a);
            let b = gen_plain(&mut rng, n, box_b);
            let bx = BoundsBox::new(box_a.0, box_a.1, box_b.0, box_b.1)
                .expect("positive sampled box");
            let report = zhuang_check(&a, &b, &bx);
            trial_record(report, n, p, a.values(), b.values(), trial)
        }
        CampaignFunctional::Jensen => {
            let alpha = rng.gen_range(0.0..=10.0);
            let beta = rng.gen_range(0.0..=10.0);
            let p = if trial % 2 == 0 {
                rng.gen_range(1.0..=4.0)
            } else {
                rng.gen_range(0.05..=0.95)
            };
            let report =
                TwoPointCase::new(alpha, beta, p).and_then(|c| jensen_check(&c));
            trial_record(report, 2, Some(p), &[alpha], &[beta], trial)
        }
        CampaignFunctional::Young => {
            let alpha = rng.gen_range(0.0..=10.0);
            let beta = rng.gen_range(0.0..=10.0);
            let p = rng.gen_range(1.1..=4.0);
            let report = ConjugateExponents::new(p).and_then(|pq| young_check(alpha, beta, &pq));
            trial_record(report, 2, Some(p), &[alpha], &[beta], trial)
        }
        CampaignFunctional::PowerBracket => {
            let x: f64 = rng.gen_range(0.0..=10.0);
            let y: f64 = rng.gen_range(0.0..=10.0);
            let p = rng.gen_range(1.0..=4.0);
            let report = power_bracket_check(x.max(y), x.min(y), p);
            trial_record(report, 2, Some(p), &[x.max(y)], &[x.min(y)], trial)
        }
        CampaignFunctional::Superadditivity => {
            let alpha = rng.gen_range(0.0..=10.0);
            let beta = rng.gen_range(0.0..=10.0);
            let p = rng.gen_range(1.0..=4.0);
            let report = superadditivity_check(alpha, beta, p);
            trial_record(report, 2, Some(p), &[alpha], &[beta], trial)
        }
        CampaignFunctional::QuasiNorm => {
            let x = gen_mono(&mut rng, n, box_a, dec, trial);
            let y = gen_mono(&mut rng, n, box_b, dec, trial);
            let pe = p.expect("validated");
            let report = quasi_norm_axiom_suite(&x, &y, pe, &[-2.0, 0.5, 3.0]).map(|checks| {
                // Fold the suite into one verdict: the K-bound triangle
                // report, demoted if any axiom fails.
                let triangle = checks.last().expect("suite is non-empty").report;
                let all_hold = checks.iter().all(|c| c.report.holds);
                RatioReport {
                    holds: all_hold && triangle.holds,
                    ..triangle
                }
            });
            trial_record(report, n, p, x.values(), y.values(), trial)
        }
    }
}

fn trial_record(
    report: Result<RatioReport>,
    n: usize,
    p: Option<f64>,
    a: &[f64],
    b: &[f64],
    _trial: u64,
) -> Trial {
    Trial {
        report,
        n,
        p,
        a: a.to_vec(),
        b: b.to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(functional: CampaignFunctional, trials: u64) -> CampaignReport {
        let spec = CampaignSpec::new(functional, trials, 900 + trials);
        run_campaign(&spec).unwrap()
    }

    #[test]
    fn small_campaigns_have_zero_violations() {
        for f in [
            CampaignFunctional::Holder,
            CampaignFunctional::Cauchy,
            CampaignFunctional::MinkowskiAlt,
            CampaignFunctional::ReverseMinkowski,
            CampaignFunctional::Lemma,
            CampaignFunctional::PowerRatio,
            CampaignFunctional::AltSuperadditivity,
            CampaignFunctional::Szego,
            CampaignFunctional::BrunkOlkin,
            CampaignFunctional::Zhuang,
            CampaignFunctional::Jensen,
            CampaignFunctional::Young,
            CampaignFunctional::PowerBracket,
            CampaignFunctional::Superadditivity,
            CampaignFunctional::QuasiNorm,
        ] {
            let r = quick(f, 500);
            assert_eq!(r.violations, 0, "{} violated", f.as_str());
            assert!(r.holds > 0, "{} produced no holding trials", f.as_str());
        }
    }

    #[test]
    fn zero_trials_is_a_vacuous_pass() {
        let r = quick(CampaignFunctional::Holder, 0);
        assert_eq!(r.trials, 0);
        assert_eq!(r.holds, 0);
        assert_eq!(r.violations, 0);
        assert!(r.worst_slack.is_none());
    }

    #[test]
    fn campaigns_are_deterministic() {
        let spec = CampaignSpec::new(CampaignFunctional::MinkowskiAlt, 2000, 4242);
        let a = run_campaign(&spec).unwrap();
        let b = run_campaign(&spec).unwrap();
        assert_eq!(a.holds, b.holds);
        assert_eq!(a.equalities, b.equalities);
        assert_eq!(a.errors, b.errors);
        assert_eq!(a.worst_slack.map(f64::to_bits), b.worst_slack.map(f64::to_bits));
    }

    #[test]
    fn raw_pairs_surface_quotient_errors() {
        let mut spec = CampaignSpec::new(CampaignFunctional::Cauchy, 2000, 77);
        spec.raw_pairs = true;
        let r = run_campaign(&spec).unwrap();
        assert!(r.errors > 0, "independent pairs should often fail the quotient hypothesis");
        assert_eq!(r.violations, 0);

        let spec = CampaignSpec::new(CampaignFunctional::Cauchy, 2000, 77);
        let r = run_campaign(&spec).unwrap();
        assert_eq!(r.errors, 0, "chain construction satisfies hypotheses");
    }

    #[test]
    fn reverse_regime_minkowski_campaign() {
        let mut spec = CampaignSpec::new(CampaignFunctional::MinkowskiAlt, 1000, 31);
        spec.p_list = vec![0.25, 0.5, 0.75];
        let r = run_campaign(&spec).unwrap();
        assert_eq!(r.violations, 0);
    }

    #[test]
    fn invalid_p_lists_are_rejected() {
        let mut spec = CampaignSpec::new(CampaignFunctional::Holder, 10, 1);
        spec.p_list = vec![1.0];
        assert!(run_campaign(&spec).is_err());
        let mut spec = CampaignSpec::new(CampaignFunctional::QuasiNorm, 10, 1);
        spec.p_list = vec![2.0];
        assert!(run_campaign(&spec).is_err());
    }
}
