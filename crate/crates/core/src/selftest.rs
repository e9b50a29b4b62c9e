//! Randomized property suite behind `hlk selftest`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactla::{
    apply_slide, elementary_divisors, minor_gcd_profile, random_unimodular, smith_normal_form,
    Axis, IntMatrix, SplitMix64,
};
use crate::invariant::{abs_divisor, handlebody_linking, quotient_group, reconstruct_lk, Side};
use crate::trials::{random_matrix, run_trials};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Property {
    SnfExact,
    UnimodularInvariance,
    OracleEquivalence,
    TransposeInvariance,
    SlideInvariance,
    QuotientGroups,
    Reconstruction,
    ZeroMarker,
    GenusOne,
}

impl Property {
    pub const ALL: [Property; 9] = [
        Property::SnfExact,
        Property::UnimodularInvariance,
        Property::OracleEquivalence,
        Property::TransposeInvariance,
        Property::SlideInvariance,
        Property::QuotientGroups,
        Property::Reconstruction,
        Property::ZeroMarker,
        Property::GenusOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::SnfExact => "snf-exact",
            Property::UnimodularInvariance => "unimodular-invariance",
            Property::OracleEquivalence => "oracle-equivalence",
            Property::TransposeInvariance => "transpose-invariance",
            Property::SlideInvariance => "slide-invariance",
            Property::QuotientGroups => "quotient-groups",
            Property::Reconstruction => "reconstruction",
            Property::ZeroMarker => "zero-marker",
            Property::GenusOne => "genus-one",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Shape of the random inputs.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_dim: usize,
    pub entry_bound: i64,
    pub max_unimodular_ops: usize,
    pub slides: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_dim: 6,
            entry_bound: 9,
            max_unimodular_ops: 20,
            slides: 10,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub trial: usize,
    pub property: Property,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct TrialOutcome {
    pub failures: Vec<Failure>,
}

impl TrialOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Checker {
    trial: usize,
    failures: Vec<Failure>,
}

impl Checker {
    fn check(&mut self, property: Property, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(Failure {
                trial: self.trial,
                property,
                detail: detail(),
            });
        }
    }
}

/// Runs every property against one random matrix.
pub fn run_trial(trial: usize, mut rng: SplitMix64, cfg: &SuiteConfig) -> TrialOutcome {
    let m = random_matrix(&mut rng, cfg.max_dim, cfg.max_dim, cfg.entry_bound);
    let (rows, cols) = m.shape();
    let mut c = Checker {
        trial,
        failures: Vec::new(),
    };

    let snf = smith_normal_form(&m);
    let verdict = snf.verify(&m);
    c.check(Property::SnfExact, verdict.is_ok(), || {
        format!("{}: {m}", verdict.clone().unwrap_err())
    });
    let divisors = &snf.divisors;

    let u_ops = rng.below(cfg.max_unimodular_ops as u64 + 1) as usize;
    let v_ops = rng.below(cfg.max_unimodular_ops as u64 + 1) as usize;
    let u = random_unimodular(rows, rng.next_u64(), u_ops);
    let v = random_unimodular(cols, rng.next_u64(), v_ops);
    let moved = u.mul(&m).and_then(|um| um.mul(&v)).expect("square factors");
    let moved_snf = smith_normal_form(&moved);
    c.check(
        Property::SnfExact,
        moved_snf.verify(&moved).is_ok(),
        || format!("transformed input: {moved}"),
    );
    c.check(
        Property::UnimodularInvariance,
        &moved_snf.divisors == divisors,
        || format!("{m} vs {moved}"),
    );

    match minor_gcd_profile(&m) {
        Ok(profile) => {
            let mut prefix = BigInt::one();
            let ok = profile.iter().enumerate().all(|(k, dk)| match divisors.get(k) {
                Some(d) => {
                    prefix *= d;
                    *dk == prefix
                }
                None => dk.is_zero(),
            });
            c.check(Property::OracleEquivalence, ok, || format!("profile {profile:?} for {m}"));
        }
        Err(e) => c.check(Property::OracleEquivalence, false, || e.to_string()),
    }

    let t = m.transpose();
    c.check(
        Property::TransposeInvariance,
        &elementary_divisors(&t) == divisors,
        || format!("{m}"),
    );

    let mut slid = m.clone();
    for _ in 0..cfg.slides {
        let (axis, len) = if rng.below(2) == 0 {
            (Axis::Row, rows)
        } else {
            (Axis::Col, cols)
        };
        if len < 2 {
            continue;
        }
        let src = rng.below(len as u64) as usize;
        let dst = (src + 1 + rng.below(len as u64 - 1) as usize) % len;
        let coeff = if rng.below(2) == 0 { 1 } else { -1 };
        slid = apply_slide(&slid, axis, src, dst, coeff).expect("indices in range");
    }
    c.check(
        Property::SlideInvariance,
        &elementary_divisors(&slid) == divisors,
        || format!("{m} slid to {slid}"),
    );

    let lk = handlebody_linking(&m);
    let a1 = quotient_group(&m, Side::First);
    let a2 = quotient_group(&m, Side::Second);
    let l = divisors.len();
    c.check(
        Property::QuotientGroups,
        a1.torsion() == a2.torsion()
            && a1.free_rank() as i64 - a2.free_rank() as i64 == rows as i64 - cols as i64
            && a1.free_rank() == rows - l
            && a2.free_rank() == cols - l,
        || format!("A1 = {a1}, A2 = {a2} for {m}"),
    );
    c.check(
        Property::Reconstruction,
        reconstruct_lk(&a1, l).as_ref() == Ok(&lk) && reconstruct_lk(&a2, l).as_ref() == Ok(&lk),
        || format!("{lk} from {a1}"),
    );
    c.check(Property::ZeroMarker, lk.is_zero() == (l == 0), || format!("{lk} at rank {l}"));

    let corner = m[(0, 0)].clone();
    let scalar = IntMatrix::from_vec(1, 1, vec![corner.clone()]).expect("1x1");
    c.check(
        Property::GenusOne,
        handlebody_linking(&scalar) == abs_divisor(&corner),
        || format!("[[{corner}]]"),
    );

    TrialOutcome {
        failures: c.failures,
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub trials: usize,
    pub passed: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }

    /// Number of trials in which `property` failed.
    pub fn failed_trials(&self, property: Property) -> usize {
        let mut trials: Vec<usize> = self
            .failures
            .iter()
            .filter(|f| f.property == property)
            .map(|f| f.trial)
            .collect();
        trials.dedup();
        trials.len()
    }

    /// The `N/N passed` summary line.
    pub fn summary(&self) -> String {
        format!("{}/{} passed", self.passed, self.trials)
    }
}

pub fn run_suite(trials: usize, seed: u64, cfg: &SuiteConfig) -> Report {
    let outcomes = run_trials(trials, seed, |i, rng| run_trial(i, rng, cfg));
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    Report {
        trials,
        passed,
        failures: outcomes.into_iter().flat_map(|o| o.failures).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let report = run_suite(50, 1, &SuiteConfig::default());
        assert!(report.all_passed(), "{:?}", report.failures);
        assert_eq!(report.summary(), "50/50 passed");
    }

    #[test]
    fn suite_is_reproducible() {
        let cfg = SuiteConfig::default();
        let a = run_suite(20, 5, &cfg);
        let b = run_suite(20, 5, &cfg);
        assert_eq!(a.passed, b.passed);
        assert_eq!(a.failures.len(), b.failures.len());
    }
}
