//! Randomized selection for proportionality.
//!
//! Drawing `ceil((1/eps^2) * ln(2m))` metrics uniformly without replacement
//! satisfies proportionality with probability at least 1/2, so a handful of
//! verified attempts almost surely produces a certified subset. Attempts use
//! per-attempt RNG streams: the same seed always replays the same sequence,
//! and attempt `t`'s draw does not depend on attempts before it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::profile::PreferenceProfile;
use crate::properties::{check_gen_prop, check_pp, GroupCollection};
use crate::rational::Rational;
use crate::selection::Selection;

/// Default retry budget. Each attempt independently succeeds with
/// probability at least 1/2 at the prescribed sample size, so exhausting 20
/// attempts has probability at most 2^-20 and usually signals a bug.
pub const DEFAULT_MAX_ATTEMPTS: u32 = 20;

/// Errors from the sampling selectors.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SampleError {
    #[error("sampling needs a strictly positive tolerance, got {0}")]
    InvalidEpsilon(Rational),
    #[error("no sampled subset verified after {attempts} attempts")]
    Exhausted { attempts: u32 },
}

fn scaled_log_ceil(eps: Rational, scale: f64, log_arg: f64) -> usize {
    // (1 / (scale * eps^2)) * ln(log_arg), rounded up
    let inv_eps = eps.denom() as f64 / eps.numer() as f64;
    libm::ceil(inv_eps * inv_eps / scale * libm::log(log_arg)) as usize
}

/// Sample size for positional proportionality:
/// `min(n, ceil((1/eps^2) * ln(2m)))`.
pub fn pp_sample_size(n: usize, m: usize, eps: Rational) -> usize {
    scaled_log_ceil(eps, 1.0, 2.0 * m as f64).clamp(1, n)
}

/// Sample size for generalized proportionality over `group_count` groups:
/// `min(n, ceil((1/(2 eps^2)) * ln(4 * max(group_count, 1))))`.
pub fn gen_prop_sample_size(n: usize, group_count: usize, eps: Rational) -> usize {
    scaled_log_ceil(eps, 2.0, 4.0 * group_count.max(1) as f64).clamp(1, n)
}

fn draw(rng: &mut ChaCha8Rng, n: usize, k: usize) -> alloc::vec::Vec<usize> {
    let mut members = rand::seq::index::sample(rng, n, k).into_vec();
    members.sort_unstable();
    members
}

/// Samples subsets of the prescribed size until one verifies
/// `eps`-positional proportionality. Identical seeds reproduce the identical
/// attempt sequence.
pub fn sample_pp(
    profile: &PreferenceProfile,
    eps: Rational,
    seed: u64,
    max_attempts: u32,
) -> Result<Selection, SampleError> {
    if eps.is_negative() || eps.is_zero() {
        return Err(SampleError::InvalidEpsilon(eps));
    }
    let n = profile.metric_count();
    let k = pp_sample_size(n, profile.alternative_count(), eps);
    for attempt in 1..=max_attempts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt as u64);
        let members = draw(&mut rng, n, k);
        let certificate = check_pp(profile, &members, eps).expect("sampled subset is valid");
        if certificate.ok {
            return Ok(Selection {
                members,
                certificate,
                seed: Some(seed),
                attempts: Some(attempt),
            });
        }
    }
    Err(SampleError::Exhausted {
        attempts: max_attempts,
    })
}

/// Samples subsets until one verifies `eps`-generalized proportionality
/// over `groups`.
pub fn sample_gen_prop(
    groups: &GroupCollection,
    eps: Rational,
    seed: u64,
    max_attempts: u32,
) -> Result<Selection, SampleError> {
    if eps.is_negative() || eps.is_zero() {
        return Err(SampleError::InvalidEpsilon(eps));
    }
    let n = groups.universe();
    let k = gen_prop_sample_size(n, groups.len(), eps);
    for attempt in 1..=max_attempts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt as u64);
        let members = draw(&mut rng, n, k);
        let certificate = check_gen_prop(groups, &members, eps).expect("sampled subset is valid");
        if certificate.ok {
            return Ok(Selection {
                members,
                certificate,
                seed: Some(seed),
                attempts: Some(attempt),
            });
        }
    }
    Err(SampleError::Exhausted {
        attempts: max_attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    #[test]
    fn sample_size_formula() {
        // eps = 1/5, m = 16: ceil(25 * ln 32) = 87
        assert_eq!(pp_sample_size(200, 16, Rational::new(1, 5)), 87);
        // capped at n
        assert_eq!(pp_sample_size(50, 16, Rational::new(1, 5)), 50);
        // gen: eps = 1/5, 36 groups: ceil(12.5 * ln 144) = 63
        assert_eq!(gen_prop_sample_size(200, 36, Rational::new(1, 5)), 63);
        assert_eq!(pp_sample_size(10, 4, Rational::ONE), 3); // ceil(ln 8)
    }

    #[test]
    fn sample_of_everything_succeeds_immediately() {
        let p = generators::random_profile(6, 5, 2);
        // tiny eps forces k = n, and K = N always verifies
        let sel = sample_pp(&p, Rational::new(1, 1000), 1, 5).unwrap();
        assert_eq!(sel.members, (0..6).collect::<Vec<_>>());
        assert_eq!(sel.attempts, Some(1));
    }

    #[test]
    fn identical_rankings_always_verify() {
        let ranking: Vec<usize> = (0..5).collect();
        let rankings: Vec<Vec<usize>> = (0..10).map(|_| ranking.clone()).collect();
        let p = crate::profile::PreferenceProfile::from_rankings(
            (1..=10).map(|i| alloc::format!("m{i}")).collect(),
            (1..=5).map(|a| alloc::format!("a{a}")).collect(),
            &rankings,
        )
        .unwrap();
        let sel = sample_pp(&p, Rational::new(1, 4), 7, 5).unwrap();
        assert_eq!(sel.attempts, Some(1));
        assert!(sel.certificate.ok);
    }

    #[test]
    fn seeded_runs_reproduce() {
        let p = generators::pp_lower_bound(60, 8, 5).unwrap();
        let a = sample_pp(&p, Rational::new(1, 4), 42, 20).unwrap();
        let b = sample_pp(&p, Rational::new(1, 4), 42, 20).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.seed, Some(42));
    }

    #[test]
    fn rejects_nonpositive_eps() {
        let p = generators::random_profile(4, 3, 1);
        assert!(matches!(
            sample_pp(&p, Rational::ZERO, 0, 1),
            Err(SampleError::InvalidEpsilon(_))
        ));
    }

    #[test]
    fn gen_prop_with_no_groups_succeeds_trivially() {
        let groups = GroupCollection::new(8, []).unwrap();
        let sel = sample_gen_prop(&groups, Rational::new(1, 4), 3, 5).unwrap();
        assert_eq!(sel.attempts, Some(1));
        assert!(sel.certificate.ok);
        assert_eq!(sel.members.len(), gen_prop_sample_size(8, 0, Rational::new(1, 4)));
    }

    #[test]
    fn single_group_of_everything_always_passes() {
        let groups =
            GroupCollection::new(10, [("all".to_string(), (0..10).collect())]).unwrap();
        let sel = sample_gen_prop(&groups, Rational::new(1, 100), 9, 3).unwrap();
        assert_eq!(sel.attempts, Some(1));
    }

    #[test]
    fn inclusion_frequency_is_roughly_uniform() {
        // over many seeds, each metric appears with frequency ~ k/n
        let p = generators::random_profile(12, 3, 77);
        let eps = Rational::new(1, 2);
        let k = pp_sample_size(12, 3, eps);
        let trials = 400u32;
        let mut counts = [0u32; 12];
        for seed in 0..trials {
            let sel = sample_pp(&p, eps, seed as u64, 20).unwrap();
            for &i in &sel.members {
                counts[i] += 1;
            }
        }
        // this profile verifies nearly always on attempt 1, so inclusion is
        // close to unconditional uniform sampling: 3 sigma binomial bounds
        let expect = trials as f64 * k as f64 / 12.0;
        let sigma = (trials as f64 * (k as f64 / 12.0) * (1.0 - k as f64 / 12.0)).sqrt();
        for (i, &c) in counts.iter().enumerate() {
            assert!(
                (c as f64 - expect).abs() < 3.5 * sigma,
                "metric {i}: {c} inclusions, expected {expect:.1} +/- {sigma:.1}"
            );
        }
    }
}
