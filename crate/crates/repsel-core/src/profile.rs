//! Preference profiles: `n` metrics each holding a strict ranking of the
//! same `m` alternatives, plus ingestion of raw score tables into rankings.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// Errors building or validating a [`PreferenceProfile`].
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ProfileError {
    #[error("profile needs at least one metric and one alternative")]
    Empty,
    #[error("duplicate metric name `{0}`")]
    DuplicateMetricName(String),
    #[error("duplicate alternative name `{0}`")]
    DuplicateAlternativeName(String),
    #[error("metric `{metric}` has {got} entries, expected {expected}")]
    WrongRowLength {
        metric: String,
        expected: usize,
        got: usize,
    },
    #[error("metric `{metric}` is not a permutation of 1..={m}")]
    NotAPermutation { metric: String, m: usize },
}

/// A preference profile: every metric ranks every alternative exactly once.
///
/// Positions are 1-based at every interface, matching ranks as people read
/// them; alternative and metric indices are 0-based positions into the name
/// lists. The structure is immutable after construction and safe to share
/// across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferenceProfile {
    metric_names: Vec<String>,
    alt_names: Vec<String>,
    /// `rank_of[i * m + a]` = position of alternative `a` in metric `i`, 1..=m.
    rank_of: Vec<u32>,
    /// `alt_at[i * m + r - 1]` = alternative ranked at position `r` by metric `i`.
    alt_at: Vec<u32>,
}

impl PreferenceProfile {
    /// Builds a profile from rank rows: `ranks[i][a]` is the 1-based position
    /// of alternative `a` in metric `i`'s ranking. This is the layout of the
    /// rank-matrix CSV format.
    pub fn from_rank_matrix(
        metric_names: Vec<String>,
        alt_names: Vec<String>,
        ranks: &[Vec<usize>],
    ) -> Result<Self, ProfileError> {
        let (n, m) = validated_shape(&metric_names, &alt_names, ranks.len())?;
        let mut rank_of = Vec::with_capacity(n * m);
        let mut alt_at = alloc::vec![0u32; n * m];
        for (i, row) in ranks.iter().enumerate() {
            if row.len() != m {
                return Err(ProfileError::WrongRowLength {
                    metric: metric_names[i].clone(),
                    expected: m,
                    got: row.len(),
                });
            }
            let mut seen = alloc::vec![false; m];
            for (a, &r) in row.iter().enumerate() {
                if r < 1 || r > m || seen[r - 1] {
                    return Err(ProfileError::NotAPermutation {
                        metric: metric_names[i].clone(),
                        m,
                    });
                }
                seen[r - 1] = true;
                rank_of.push(r as u32);
                alt_at[i * m + (r - 1)] = a as u32;
            }
        }
        Ok(PreferenceProfile {
            metric_names,
            alt_names,
            rank_of,
            alt_at,
        })
    }

    /// Builds a profile from ranking rows: `rankings[i]` lists alternative
    /// indices from best to worst for metric `i`.
    pub fn from_rankings(
        metric_names: Vec<String>,
        alt_names: Vec<String>,
        rankings: &[Vec<usize>],
    ) -> Result<Self, ProfileError> {
        let (n, m) = validated_shape(&metric_names, &alt_names, rankings.len())?;
        let mut rank_of = alloc::vec![0u32; n * m];
        let mut alt_at = Vec::with_capacity(n * m);
        for (i, row) in rankings.iter().enumerate() {
            if row.len() != m {
                return Err(ProfileError::WrongRowLength {
                    metric: metric_names[i].clone(),
                    expected: m,
                    got: row.len(),
                });
            }
            let mut seen = alloc::vec![false; m];
            for (r0, &a) in row.iter().enumerate() {
                if a >= m || seen[a] {
                    return Err(ProfileError::NotAPermutation {
                        metric: metric_names[i].clone(),
                        m,
                    });
                }
                seen[a] = true;
                rank_of[i * m + a] = (r0 + 1) as u32;
                alt_at.push(a as u32);
            }
        }
        Ok(PreferenceProfile {
            metric_names,
            alt_names,
            rank_of,
            alt_at,
        })
    }

    /// Number of metrics `n`.
    pub fn metric_count(&self) -> usize {
        self.metric_names.len()
    }

    /// Number of alternatives `m`.
    pub fn alternative_count(&self) -> usize {
        self.alt_names.len()
    }

    /// Position (1-based) of alternative `alt` in metric `metric`'s ranking.
    pub fn rank_of(&self, metric: usize, alt: usize) -> usize {
        let m = self.alternative_count();
        self.rank_of[metric * m + alt] as usize
    }

    /// Alternative ranked at 1-based position `rank` by metric `metric`.
    pub fn alt_at(&self, metric: usize, rank: usize) -> usize {
        debug_assert!(rank >= 1 && rank <= self.alternative_count());
        let m = self.alternative_count();
        self.alt_at[metric * m + rank - 1] as usize
    }

    /// Metric `metric`'s full ranking, best alternative first.
    pub fn ranking(&self, metric: usize) -> impl Iterator<Item = usize> + '_ {
        let m = self.alternative_count();
        self.alt_at[metric * m..(metric + 1) * m]
            .iter()
            .map(|&a| a as usize)
    }

    pub fn metric_names(&self) -> &[String] {
        &self.metric_names
    }

    pub fn alt_names(&self) -> &[String] {
        &self.alt_names
    }

    pub fn metric_index(&self, name: &str) -> Option<usize> {
        self.metric_names.iter().position(|s| s == name)
    }

    pub fn alt_index(&self, name: &str) -> Option<usize> {
        self.alt_names.iter().position(|s| s == name)
    }
}

fn validated_shape(
    metric_names: &[String],
    alt_names: &[String],
    rows: usize,
) -> Result<(usize, usize), ProfileError> {
    let n = metric_names.len();
    let m = alt_names.len();
    if n == 0 || m == 0 || rows != n {
        return Err(ProfileError::Empty);
    }
    if let Some(dup) = first_duplicate(metric_names) {
        return Err(ProfileError::DuplicateMetricName(dup.to_string()));
    }
    if let Some(dup) = first_duplicate(alt_names) {
        return Err(ProfileError::DuplicateAlternativeName(dup.to_string()));
    }
    Ok((n, m))
}

fn first_duplicate(names: &[String]) -> Option<&str> {
    for (i, name) in names.iter().enumerate() {
        if names[..i].iter().any(|s| s == name) {
            return Some(name);
        }
    }
    None
}

/// Whether larger raw scores mean better or worse alternatives. Never
/// inferred; callers state it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Orientation {
    HigherIsBetter,
    LowerIsBetter,
}

/// How equal scores within one metric are resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum TiePolicy {
    /// The alternative with the smaller index takes the better position.
    /// Deterministic and order-independent.
    ByAlternativeId,
    /// Any tie is an error.
    Reject,
}

/// How absent scores are handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum MissingPolicy {
    /// Any absent score is an error.
    Reject,
    /// Unscored alternatives take the worst positions, ordered by index.
    TieForLast,
}

/// A raw score table as exported by evaluation platforms: one row per
/// metric, one column per alternative, cells possibly empty.
#[derive(Clone, Debug)]
pub struct ScoreTable {
    pub metric_names: Vec<String>,
    pub alt_names: Vec<String>,
    /// `scores[i][a]`, `None` for a missing value.
    pub scores: Vec<Vec<Option<f64>>>,
    pub orientation: Orientation,
}

/// Errors turning a [`ScoreTable`] into a profile.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum BuildError {
    #[error("score table is empty")]
    EmptyTable,
    #[error("metric `{metric}`: alternatives `{a}` and `{b}` are tied")]
    RejectedTie { metric: String, a: String, b: String },
    #[error("metric `{metric}`: no score for alternative `{alt}`")]
    MissingScore { metric: String, alt: String },
    #[error("metric `{metric}`: score for `{alt}` is not a number")]
    InvalidScore { metric: String, alt: String },
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

/// Sorts each metric's alternatives into a strict ranking.
///
/// Present scores are ordered per the table's orientation; equal scores are
/// resolved by `ties`; absent scores are handled by `missing` (under
/// `TieForLast` they fill the worst positions in ascending alternative
/// order). The result is deterministic: the same table and policies always
/// produce the same profile.
pub fn build_profile(
    table: &ScoreTable,
    ties: TiePolicy,
    missing: MissingPolicy,
) -> Result<PreferenceProfile, BuildError> {
    let n = table.metric_names.len();
    let m = table.alt_names.len();
    if n == 0 || m == 0 {
        return Err(BuildError::EmptyTable);
    }
    let mut rankings = Vec::with_capacity(n);
    for (i, row) in table.scores.iter().enumerate() {
        if row.len() != m {
            return Err(ProfileError::WrongRowLength {
                metric: table.metric_names[i].clone(),
                expected: m,
                got: row.len(),
            }
            .into());
        }
        let mut present: Vec<(usize, f64)> = Vec::with_capacity(m);
        let mut absent: Vec<usize> = Vec::new();
        for (a, cell) in row.iter().enumerate() {
            match cell {
                Some(s) if s.is_nan() => {
                    return Err(BuildError::InvalidScore {
                        metric: table.metric_names[i].clone(),
                        alt: table.alt_names[a].clone(),
                    })
                }
                Some(s) => present.push((a, *s)),
                None => absent.push(a),
            }
        }
        if !absent.is_empty() && missing == MissingPolicy::Reject {
            return Err(BuildError::MissingScore {
                metric: table.metric_names[i].clone(),
                alt: table.alt_names[absent[0]].clone(),
            });
        }
        // Stable order: better score first, then ascending alternative index.
        present.sort_by(|(ia, sa), (ib, sb)| {
            let by_score = match table.orientation {
                Orientation::HigherIsBetter => sb.partial_cmp(sa).unwrap(),
                Orientation::LowerIsBetter => sa.partial_cmp(sb).unwrap(),
            };
            by_score.then(ia.cmp(ib))
        });
        if ties == TiePolicy::Reject {
            for w in present.windows(2) {
                if w[0].1 == w[1].1 {
                    return Err(BuildError::RejectedTie {
                        metric: table.metric_names[i].clone(),
                        a: table.alt_names[w[0].0].clone(),
                        b: table.alt_names[w[1].0].clone(),
                    });
                }
            }
        }
        let mut ranking: Vec<usize> = present.into_iter().map(|(a, _)| a).collect();
        ranking.extend(absent); // already ascending
        rankings.push(ranking);
    }
    PreferenceProfile::from_rankings(
        table.metric_names.clone(),
        table.alt_names.clone(),
        &rankings,
    )
    .map_err(Into::into)
}
