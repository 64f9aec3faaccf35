//! Exact verification of representation properties.
//!
//! The four checks (positional representation, positional proportionality,
//! and their generalized-group forms) all reduce to counting: how many
//! metrics of a subset rank an alternative in the top `r`, or fall in a
//! group. Proportionality verdicts compare count fractions against the
//! tolerance in exact rational arithmetic, so a verdict never flips from
//! rounding.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::profile::PreferenceProfile;
use crate::rational::Rational;

/// Errors from property checks and scoring.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PropertyError {
    #[error("subset of metrics is empty")]
    EmptySubset,
    #[error("metric index {index} out of range (n = {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("group size {g} outside 1..={n}")]
    InvalidGroupSize { g: usize, n: usize },
    #[error("tolerance must be nonnegative, got {0}")]
    InvalidEpsilon(Rational),
}

/// Cumulative count table for a metric set `S`: `count(r, a)` is the number
/// of metrics in `S` ranking alternative `a` in the top `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CumulativeCounts {
    counts: Vec<u32>, // [ (r-1) * m + a ]
    m: usize,
    set_size: usize,
}

impl CumulativeCounts {
    pub fn count(&self, rank: usize, alt: usize) -> usize {
        assert!(rank >= 1 && rank <= self.m && alt < self.m);
        self.counts[(rank - 1) * self.m + alt] as usize
    }

    pub fn set_size(&self) -> usize {
        self.set_size
    }

    pub fn alternative_count(&self) -> usize {
        self.m
    }
}

/// Validates a metric subset: indices in range, at least one element.
/// Returns the subset sorted and deduplicated.
fn normalized_subset(subset: &[usize], n: usize) -> Result<Vec<usize>, PropertyError> {
    if let Some(&bad) = subset.iter().find(|&&i| i >= n) {
        return Err(PropertyError::IndexOutOfRange {
            index: bad,
            limit: n,
        });
    }
    let mut s: Vec<usize> = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() {
        return Err(PropertyError::EmptySubset);
    }
    Ok(s)
}

/// Computes `count(r, a) = |{i in subset : rank_of(i, a) <= r}|` for all
/// ranks and alternatives.
pub fn cumulative_counts(
    profile: &PreferenceProfile,
    subset: &[usize],
) -> Result<CumulativeCounts, PropertyError> {
    let subset = normalized_subset(subset, profile.metric_count())?;
    let m = profile.alternative_count();
    let mut counts = alloc::vec![0u32; m * m];
    for &i in &subset {
        for r in 1..=m {
            let a = profile.alt_at(i, r);
            counts[(r - 1) * m + a] += 1;
        }
    }
    for r in 1..m {
        for a in 0..m {
            counts[r * m + a] += counts[(r - 1) * m + a];
        }
    }
    Ok(CumulativeCounts {
        counts,
        m,
        set_size: subset.len(),
    })
}

/// Which property a certificate or solve refers to, with its parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "kebab-case"))]
pub enum PropertySpec {
    /// Positional representation for group size `g`.
    Pr { g: usize },
    /// `eps`-positional proportionality.
    Pp { eps: Rational },
    /// Generalized representation over explicit groups.
    GenRep { g: usize },
    /// Generalized proportionality over explicit groups.
    GenProp { eps: Rational },
}

impl PropertySpec {
    /// Parameter rendered for reports: the group size or the tolerance.
    pub fn parameter(&self) -> String {
        match self {
            PropertySpec::Pr { g } | PropertySpec::GenRep { g } => g.to_string(),
            PropertySpec::Pp { eps } | PropertySpec::GenProp { eps } => eps.to_string(),
        }
    }
}

/// Identifies the constraint a violation refers to: a (alternative, rank)
/// cell for positional properties, or a group label for generalized ones.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(untagged))]
pub enum ConstraintId {
    Position { alt: String, rank: usize },
    Group { label: String },
}

/// One failed constraint, with what was required and what the subset
/// achieved.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "type", rename_all = "kebab-case"))]
pub enum Violation {
    /// A representation constraint: the subset had to cover the constraint
    /// at least `required` times but achieved fewer.
    Count {
        constraint: ConstraintId,
        required: usize,
        achieved: usize,
    },
    /// A proportionality constraint: the subset's fraction had to lie within
    /// `tolerance` of `reference` but did not.
    Fraction {
        constraint: ConstraintId,
        reference: Rational,
        achieved: Rational,
        tolerance: Rational,
    },
}

/// Machine-checkable verdict of a property check: the property, whether it
/// holds, and every violated constraint when it does not.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Certificate {
    pub spec: PropertySpec,
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl Certificate {
    fn from_violations(spec: PropertySpec, violations: Vec<Violation>) -> Self {
        Certificate {
            ok: violations.is_empty(),
            spec,
            violations,
        }
    }

    /// A certificate for a property with no constraints at all (e.g. an
    /// empty group collection), which holds vacuously.
    pub fn vacuous(spec: PropertySpec) -> Self {
        Certificate {
            spec,
            ok: true,
            violations: Vec::new(),
        }
    }
}

/// Checks positional representation: for every alternative `a` and rank
/// `r`, the subset must rank `a` in the top `r` at least
/// `floor(C(N,r,a) / g)` times.
pub fn check_pr(
    profile: &PreferenceProfile,
    subset: &[usize],
    g: usize,
) -> Result<Certificate, PropertyError> {
    let n = profile.metric_count();
    if g < 1 || g > n {
        return Err(PropertyError::InvalidGroupSize { g, n });
    }
    let full: Vec<usize> = (0..n).collect();
    let c_full = cumulative_counts(profile, &full)?;
    let c_sub = cumulative_counts(profile, subset)?;
    let m = profile.alternative_count();
    let mut violations = Vec::new();
    for a in 0..m {
        for r in 1..=m {
            let required = c_full.count(r, a) / g;
            let achieved = c_sub.count(r, a);
            if achieved < required {
                violations.push(Violation::Count {
                    constraint: ConstraintId::Position {
                        alt: profile.alt_names()[a].clone(),
                        rank: r,
                    },
                    required,
                    achieved,
                });
            }
        }
    }
    Ok(Certificate::from_violations(
        PropertySpec::Pr { g },
        violations,
    ))
}

/// Checks `eps`-positional proportionality: for every alternative and rank,
/// `|C(N,r,a)/n - C(K,r,a)/|K||` is at most `eps`, compared exactly.
pub fn check_pp(
    profile: &PreferenceProfile,
    subset: &[usize],
    eps: Rational,
) -> Result<Certificate, PropertyError> {
    if eps.is_negative() {
        return Err(PropertyError::InvalidEpsilon(eps));
    }
    let n = profile.metric_count();
    let full: Vec<usize> = (0..n).collect();
    let c_full = cumulative_counts(profile, &full)?;
    let c_sub = cumulative_counts(profile, subset)?;
    let k = c_sub.set_size();
    let m = profile.alternative_count();
    let mut violations = Vec::new();
    for a in 0..m {
        for r in 1..=m {
            let reference = Rational::ratio(c_full.count(r, a) as u64, n as u64);
            let achieved = Rational::ratio(c_sub.count(r, a) as u64, k as u64);
            if (reference - achieved).abs() > eps {
                violations.push(Violation::Fraction {
                    constraint: ConstraintId::Position {
                        alt: profile.alt_names()[a].clone(),
                        rank: r,
                    },
                    reference,
                    achieved,
                    tolerance: eps,
                });
            }
        }
    }
    Ok(Certificate::from_violations(
        PropertySpec::Pp { eps },
        violations,
    ))
}

/// A labeled subset of metric indices.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Group {
    pub label: String,
    /// Sorted, deduplicated metric indices.
    pub members: Vec<usize>,
}

/// A collection of metric groups over a universe of `n` metrics. Distinct
/// labels may name identical member sets.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GroupCollection {
    universe: usize,
    groups: Vec<Group>,
}

/// Errors building a [`GroupCollection`].
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group universe must be nonempty")]
    EmptyUniverse,
    #[error("duplicate group label `{0}`")]
    DuplicateLabel(String),
    #[error("group `{label}` has metric index {index} out of range (n = {limit})")]
    IndexOutOfRange {
        label: String,
        index: usize,
        limit: usize,
    },
}

impl GroupCollection {
    pub fn new(
        universe: usize,
        groups: impl IntoIterator<Item = (String, Vec<usize>)>,
    ) -> Result<Self, GroupError> {
        if universe == 0 {
            return Err(GroupError::EmptyUniverse);
        }
        let mut out: Vec<Group> = Vec::new();
        for (label, mut members) in groups {
            if out.iter().any(|g| g.label == label) {
                return Err(GroupError::DuplicateLabel(label));
            }
            if let Some(&bad) = members.iter().find(|&&i| i >= universe) {
                return Err(GroupError::IndexOutOfRange {
                    label,
                    index: bad,
                    limit: universe,
                });
            }
            members.sort_unstable();
            members.dedup();
            out.push(Group { label, members });
        }
        Ok(GroupCollection {
            universe,
            groups: out,
        })
    }

    /// Size of the metric universe `n`.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

/// The rank-derived groups that make the positional properties a special
/// case of the generalized ones: one group per (alternative, rank) pair,
/// labeled `alt@r`, holding the metrics that rank `alt` in the top `r`.
pub fn groups_from_profile(profile: &PreferenceProfile) -> GroupCollection {
    let n = profile.metric_count();
    let m = profile.alternative_count();
    let mut groups = Vec::with_capacity(m * m);
    for a in 0..m {
        for r in 1..=m {
            let members: Vec<usize> = (0..n).filter(|&i| profile.rank_of(i, a) <= r).collect();
            groups.push((format!("{}@{}", profile.alt_names()[a], r), members));
        }
    }
    GroupCollection::new(n, groups).expect("profile-derived groups are always valid")
}

fn membership(subset: &[usize], n: usize) -> Result<(Vec<bool>, usize), PropertyError> {
    let subset = normalized_subset(subset, n)?;
    let mut in_subset = alloc::vec![false; n];
    for &i in &subset {
        in_subset[i] = true;
    }
    Ok((in_subset, subset.len()))
}

/// Checks generalized representation: `|K ∩ G| >= floor(|G| / g)` for every
/// group `G`.
pub fn check_gen_rep(
    groups: &GroupCollection,
    subset: &[usize],
    g: usize,
) -> Result<Certificate, PropertyError> {
    let n = groups.universe();
    if g < 1 || g > n {
        return Err(PropertyError::InvalidGroupSize { g, n });
    }
    let (in_subset, _) = membership(subset, n)?;
    let mut violations = Vec::new();
    for group in groups.groups() {
        let required = group.members.len() / g;
        let achieved = group.members.iter().filter(|&&i| in_subset[i]).count();
        if achieved < required {
            violations.push(Violation::Count {
                constraint: ConstraintId::Group {
                    label: group.label.clone(),
                },
                required,
                achieved,
            });
        }
    }
    Ok(Certificate::from_violations(
        PropertySpec::GenRep { g },
        violations,
    ))
}

/// Checks generalized proportionality: `| |G|/n - |K ∩ G|/|K| | <= eps` for
/// every group `G`, compared exactly.
pub fn check_gen_prop(
    groups: &GroupCollection,
    subset: &[usize],
    eps: Rational,
) -> Result<Certificate, PropertyError> {
    if eps.is_negative() {
        return Err(PropertyError::InvalidEpsilon(eps));
    }
    let n = groups.universe();
    let (in_subset, k) = membership(subset, n)?;
    let mut violations = Vec::new();
    for group in groups.groups() {
        let reference = Rational::ratio(group.members.len() as u64, n as u64);
        let inter = group.members.iter().filter(|&&i| in_subset[i]).count();
        let achieved = Rational::ratio(inter as u64, k as u64);
        if (reference - achieved).abs() > eps {
            violations.push(Violation::Fraction {
                constraint: ConstraintId::Group {
                    label: group.label.clone(),
                },
                reference,
                achieved,
                tolerance: eps,
            });
        }
    }
    Ok(Certificate::from_violations(
        PropertySpec::GenProp { eps },
        violations,
    ))
}

/// Errors building a [`ScoreVector`].
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ScoreVectorError {
    #[error("score vector must be nonincreasing")]
    NotMonotone,
    #[error("score vector is constant; cannot normalize")]
    DegenerateConstantVector,
}

/// A normalized positional scoring rule: `m` nonincreasing rational scores
/// with `s_1 = 1` and `s_m = 0`. Rank `r` awards `s_r` points.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScoreVector {
    values: Vec<Rational>,
}

impl ScoreVector {
    /// Normalizes a raw nonincreasing vector to `s_r = (raw_r - raw_m) /
    /// (raw_1 - raw_m)`.
    pub fn normalize(raw: &[Rational]) -> Result<Self, ScoreVectorError> {
        if raw.windows(2).any(|w| w[0] < w[1]) {
            return Err(ScoreVectorError::NotMonotone);
        }
        let (first, last) = match (raw.first(), raw.last()) {
            (Some(f), Some(l)) if f > l => (*f, *l),
            _ => return Err(ScoreVectorError::DegenerateConstantVector),
        };
        let span = first - last;
        let values = raw.iter().map(|&r| (r - last) / span).collect();
        Ok(ScoreVector { values })
    }

    /// Borda: `s_r = (m - r) / (m - 1)`.
    pub fn borda(m: usize) -> Result<Self, ScoreVectorError> {
        let raw: Vec<Rational> = (0..m)
            .map(|r| Rational::from_integer((m - 1 - r) as i64))
            .collect();
        Self::normalize(&raw)
    }

    /// Plurality: 1 for the top rank, 0 elsewhere.
    pub fn plurality(m: usize) -> Result<Self, ScoreVectorError> {
        let mut raw = alloc::vec![Rational::ZERO; m];
        if let Some(first) = raw.first_mut() {
            *first = Rational::ONE;
        }
        Self::normalize(&raw)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Average score of every alternative under scoring rule `s`, over the
/// metrics in `subset`: `f_s(a) = (1/|S|) * sum_i s_{rank_of(i, a)}`.
///
/// Exactly equals [`score_alternatives_via_counts`]; the two routes share no
/// code path past the cumulative counts.
pub fn score_alternatives(
    profile: &PreferenceProfile,
    subset: &[usize],
    s: &ScoreVector,
) -> Result<Vec<Rational>, PropertyError> {
    assert_eq!(
        s.len(),
        profile.alternative_count(),
        "score vector length must match alternative count"
    );
    let subset = normalized_subset(subset, profile.metric_count())?;
    let size = Rational::from_integer(subset.len() as i64);
    let m = profile.alternative_count();
    let mut out = Vec::with_capacity(m);
    for a in 0..m {
        let mut total = Rational::ZERO;
        for &i in &subset {
            total = total + s.values()[profile.rank_of(i, a) - 1];
        }
        out.push(total / size);
    }
    Ok(out)
}

/// Same scores computed through cumulative counts:
/// `f_s(a) = sum_r (C(S,r,a)/|S|) * (s_r - s_{r+1})` with `s_{m+1} = 0`.
pub fn score_alternatives_via_counts(
    profile: &PreferenceProfile,
    subset: &[usize],
    s: &ScoreVector,
) -> Result<Vec<Rational>, PropertyError> {
    assert_eq!(
        s.len(),
        profile.alternative_count(),
        "score vector length must match alternative count"
    );
    let counts = cumulative_counts(profile, subset)?;
    let size = counts.set_size() as u64;
    let m = profile.alternative_count();
    let mut out = Vec::with_capacity(m);
    for a in 0..m {
        let mut total = Rational::ZERO;
        for r in 1..=m {
            let next = if r < m { s.values()[r] } else { Rational::ZERO };
            let delta = s.values()[r - 1] - next;
            total = total + Rational::ratio(counts.count(r, a) as u64, size) * delta;
        }
        out.push(total);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use alloc::vec;

    #[test]
    fn cumulative_counts_match_table2() {
        let p = generators::table2();
        let all: Vec<usize> = (0..4).collect();
        let c = cumulative_counts(&p, &all).unwrap();
        let x = p.alt_index("x").unwrap();
        let w = p.alt_index("w").unwrap();
        let z = p.alt_index("z").unwrap();
        assert_eq!(c.count(1, x), 2);
        assert_eq!(c.count(1, w), 2);
        assert_eq!(c.count(2, z), 2);
        // at r = m every alternative is counted by the whole subset
        for a in 0..6 {
            assert_eq!(c.count(6, a), 4);
        }
    }

    #[test]
    fn cumulative_counts_row_sums() {
        let p = generators::random_profile(6, 5, 11);
        let sub = vec![0, 2, 4];
        let c = cumulative_counts(&p, &sub).unwrap();
        for r in 1..=5 {
            let total: usize = (0..5).map(|a| c.count(r, a)).sum();
            assert_eq!(total, sub.len() * r);
        }
    }

    #[test]
    fn check_pr_flags_uncovered_color_pair() {
        let p = generators::table2();
        // {b1, b2} never rank w in the top 1, but C(N,1,w) = 2 requires one.
        let cert = check_pr(&p, &[0, 1], 2).unwrap();
        assert!(!cert.ok);
        assert!(cert.violations.contains(&Violation::Count {
            constraint: ConstraintId::Position {
                alt: "w".into(),
                rank: 1
            },
            required: 1,
            achieved: 0,
        }));
        // the full set always passes, any g
        for g in 1..=4 {
            assert!(check_pr(&p, &[0, 1, 2, 3], g).unwrap().ok);
        }
    }

    #[test]
    fn check_pp_boundary_is_exact() {
        // table2 with K = {b1}: every cumulative fraction is 0, 1/2 or 1 and
        // the single metric contributes 0 or 1, so the worst gap is exactly
        // 1/2. The verdict must hold at eps = 1/2 and flip at 49/100.
        let p = generators::table2();
        let k = vec![0usize];
        assert!(check_pp(&p, &k, Rational::ONE).unwrap().ok);
        assert!(check_pp(&p, &k, Rational::new(1, 2)).unwrap().ok);
        assert!(!check_pp(&p, &k, Rational::new(49, 100)).unwrap().ok);
        assert!(check_pp(&p, &[0, 1, 2, 3], Rational::ZERO).unwrap().ok);
    }

    #[test]
    fn check_pp_reports_reference_and_achieved() {
        let p = generators::table2();
        let cert = check_pp(&p, &[0], Rational::new(1, 4)).unwrap();
        assert!(!cert.ok);
        for v in &cert.violations {
            match v {
                Violation::Fraction {
                    reference,
                    achieved,
                    tolerance,
                    ..
                } => {
                    assert!((*reference - *achieved).abs() > *tolerance);
                }
                other => panic!("unexpected violation {other:?}"),
            }
        }
    }

    #[test]
    fn empty_subset_and_bad_indices_error() {
        let p = generators::table2();
        assert_eq!(
            check_pr(&p, &[], 2).unwrap_err(),
            PropertyError::EmptySubset
        );
        assert_eq!(
            check_pp(&p, &[9], Rational::ZERO).unwrap_err(),
            PropertyError::IndexOutOfRange { index: 9, limit: 4 }
        );
        assert_eq!(
            check_pr(&p, &[0], 5).unwrap_err(),
            PropertyError::InvalidGroupSize { g: 5, n: 4 }
        );
    }

    #[test]
    fn groups_from_profile_matches_table2() {
        let p = generators::table2();
        let groups = groups_from_profile(&p);
        assert_eq!(groups.len(), 36);
        let find = |label: &str| {
            groups
                .groups()
                .iter()
                .find(|g| g.label == label)
                .unwrap_or_else(|| panic!("missing group {label}"))
        };
        assert_eq!(find("w@1").members, vec![2, 3]);
        assert_eq!(find("z@2").members, vec![1, 3]);
        // top-m group contains every metric, for every alternative
        for name in ["u", "v", "w", "x", "y", "z"] {
            assert_eq!(find(&alloc::format!("{name}@6")).members.len(), 4);
        }
    }

    #[test]
    fn gen_checks_concrete_arithmetic() {
        // G1 = {0,1,2}, n = 6, K = {3}, eps = 1/6: |3/6 - 0/1| = 1/2 > 1/6.
        let groups =
            GroupCollection::new(6, [("G1".to_string(), vec![0, 1, 2])]).unwrap();
        let cert = check_gen_prop(&groups, &[3], Rational::new(1, 6)).unwrap();
        assert!(!cert.ok);
        assert_eq!(cert.violations.len(), 1);

        // single group = everything, g = n: any single metric suffices
        let all = GroupCollection::new(6, [("all".to_string(), (0..6).collect())]).unwrap();
        assert!(check_gen_rep(&all, &[4], 6).unwrap().ok);
    }

    #[test]
    fn scoring_definition_examples() {
        // one metric ranking (a, b, c) under Borda: 1, 1/2, 0
        let p = PreferenceProfile::from_rankings(
            vec!["m1".into()],
            vec!["a".into(), "b".into(), "c".into()],
            &[vec![0, 1, 2]],
        )
        .unwrap();
        let borda = ScoreVector::borda(3).unwrap();
        let scores = score_alternatives(&p, &[0], &borda).unwrap();
        assert_eq!(
            scores,
            vec![Rational::ONE, Rational::new(1, 2), Rational::ZERO]
        );

        // plurality counts first places
        let t2 = generators::table2();
        let plur = ScoreVector::plurality(6).unwrap();
        let scores = score_alternatives(&t2, &[0, 1, 2, 3], &plur).unwrap();
        let x = t2.alt_index("x").unwrap();
        let w = t2.alt_index("w").unwrap();
        assert_eq!(scores[x], Rational::new(1, 2));
        assert_eq!(scores[w], Rational::new(1, 2));
        let others: Vec<usize> = (0..6).filter(|&a| a != x && a != w).collect();
        for a in others {
            assert_eq!(scores[a], Rational::ZERO);
        }
    }

    #[test]
    fn scoring_forms_agree_exactly() {
        let p = generators::table2();
        let borda = ScoreVector::borda(6).unwrap();
        let all: Vec<usize> = (0..4).collect();
        let direct = score_alternatives(&p, &all, &borda).unwrap();
        let via_counts = score_alternatives_via_counts(&p, &all, &borda).unwrap();
        assert_eq!(direct, via_counts);
        let x = p.alt_index("x").unwrap();
        assert_eq!(direct[x], Rational::new(1, 2)); // (1 + 1 + 0 + 0) / 4
    }

    #[test]
    fn normalize_score_vector() {
        let raw: Vec<Rational> = [3, 2, 1].map(Rational::from_integer).to_vec();
        let s = ScoreVector::normalize(&raw).unwrap();
        assert_eq!(
            s.values(),
            &[Rational::ONE, Rational::new(1, 2), Rational::ZERO]
        );

        let raw: Vec<Rational> = [1, 0].map(Rational::from_integer).to_vec();
        assert_eq!(
            ScoreVector::normalize(&raw).unwrap().values(),
            &[Rational::ONE, Rational::ZERO]
        );

        let constant: Vec<Rational> = [1, 1, 1].map(Rational::from_integer).to_vec();
        assert_eq!(
            ScoreVector::normalize(&constant).unwrap_err(),
            ScoreVectorError::DegenerateConstantVector
        );

        let rising: Vec<Rational> = [1, 2].map(Rational::from_integer).to_vec();
        assert_eq!(
            ScoreVector::normalize(&rising).unwrap_err(),
            ScoreVectorError::NotMonotone
        );
    }
}
