//! Polynomial-time greedy selector for representation.
//!
//! Works in two phases. The coloring phase scans the profile position by
//! position and groups every alternative's appearances into consecutive
//! blocks of `g` ("colors"); because blocks align with rank order, any
//! subset covering every color satisfies positional representation for
//! group size `g`. The cover phase then greedily picks the metric covering
//! the most still-uncovered colors, guaranteeing at most
//! `ceil((n/g) * (1 + ln m)) + 1` picks.

use alloc::vec::Vec;

use crate::profile::PreferenceProfile;
use crate::properties::{check_gen_rep, check_pr, Certificate, GroupCollection, PropertySpec};
use crate::selection::Selection;

/// Where a color came from: which alternative, which of its blocks, and the
/// position range its `g` appearances span.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ColorMeta {
    pub alternative: usize,
    /// 0-based block index among this alternative's colors.
    pub block: usize,
    /// 1-based position of the block's best-ranked appearance.
    pub first_rank: usize,
    /// 1-based position of the block's worst-ranked appearance.
    pub last_rank: usize,
}

/// The block structure produced by the coloring scan. Every color is
/// covered by exactly `g` metrics; each alternative contributes
/// `floor(n/g)` colors, `m * floor(n/g)` in total. When `g` does not divide
/// `n`, each alternative's leftover appearances stay uncolored.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Coloring {
    /// Per metric: the colors it covers, in creation order.
    covers: Vec<Vec<usize>>,
    /// Per color: the `g` metrics covering it, ascending.
    members: Vec<Vec<usize>>,
    meta: Vec<ColorMeta>,
}

impl Coloring {
    pub fn color_count(&self) -> usize {
        self.members.len()
    }

    /// Colors covered by `metric`, in creation order.
    pub fn covers(&self, metric: usize) -> &[usize] {
        &self.covers[metric]
    }

    /// Metrics covering `color`, ascending.
    pub fn members(&self, color: usize) -> &[usize] {
        &self.members[color]
    }

    pub fn meta(&self, color: usize) -> &ColorMeta {
        &self.meta[color]
    }
}

/// Runs the coloring scan: positions outer, metrics inner. Each alternative
/// keeps a pending set; whenever it reaches size `g` the set becomes a new
/// color and resets.
pub fn color_profile(profile: &PreferenceProfile, g: usize) -> Coloring {
    let n = profile.metric_count();
    let m = profile.alternative_count();
    assert!(g >= 1 && g <= n, "group size {g} outside 1..={n}");
    let mut covers: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    let mut pending: Vec<Vec<usize>> = alloc::vec![Vec::new(); m];
    let mut pending_first_rank: Vec<usize> = alloc::vec![0; m];
    let mut blocks_so_far: Vec<usize> = alloc::vec![0; m];
    let mut members = Vec::new();
    let mut meta = Vec::new();
    for r in 1..=m {
        for i in 0..n {
            let a = profile.alt_at(i, r);
            if pending[a].is_empty() {
                pending_first_rank[a] = r;
            }
            pending[a].push(i);
            if pending[a].len() == g {
                let color = members.len();
                let mut block_members = core::mem::take(&mut pending[a]);
                for &i2 in &block_members {
                    covers[i2].push(color);
                }
                block_members.sort_unstable();
                members.push(block_members);
                meta.push(ColorMeta {
                    alternative: a,
                    block: blocks_so_far[a],
                    first_rank: pending_first_rank[a],
                    last_rank: r,
                });
                blocks_so_far[a] += 1;
            }
        }
    }
    Coloring {
        covers,
        members,
        meta,
    }
}

/// Repeatedly picks the metric covering the most uncovered colors (lowest
/// index on ties) until every color is covered. Returns ascending indices.
fn greedy_cover(n: usize, covers: &[Vec<usize>], color_count: usize) -> Vec<usize> {
    let mut uncovered = alloc::vec![true; color_count];
    let mut remaining = color_count;
    let mut selected = alloc::vec![false; n];
    let mut picks = Vec::new();
    while remaining > 0 {
        let mut best: Option<(usize, usize)> = None; // (gain, metric)
        for (i, cs) in covers.iter().enumerate() {
            if selected[i] {
                continue;
            }
            let gain = cs.iter().filter(|&&c| uncovered[c]).count();
            if best.map_or(true, |(bg, _)| gain > bg) {
                best = Some((gain, i));
            }
        }
        let (gain, pick) = best.expect("uncovered colors imply an unselected coverer");
        debug_assert!(gain > 0);
        selected[pick] = true;
        picks.push(pick);
        for &c in &covers[pick] {
            if uncovered[c] {
                uncovered[c] = false;
                remaining -= 1;
            }
        }
    }
    picks.sort_unstable();
    picks
}

/// Size guarantee for the greedy cover; the `+ 1` absorbs the cleanup
/// rounds once few colors remain.
pub(crate) fn greedy_size_bound(n: usize, g: usize, log_arg: usize) -> usize {
    let alpha = n as f64 / g as f64;
    libm::ceil(alpha * (1.0 + libm::log(log_arg as f64))) as usize + 1
}

/// Selects a subset satisfying positional representation for group size
/// `g`, with `|K| <= ceil((n/g)(1 + ln m)) + 1`. Deterministic.
pub fn greedy_select(profile: &PreferenceProfile, g: usize) -> Selection {
    let n = profile.metric_count();
    let coloring = color_profile(profile, g);
    let members = greedy_cover(n, &coloring.covers, coloring.color_count());
    let certificate =
        check_pr(profile, &members, g).expect("greedy cover is nonempty and in range");
    debug_assert!(certificate.ok, "covering all colors implies representation");
    debug_assert!(members.len() <= greedy_size_bound(n, g, profile.alternative_count()));
    Selection::deterministic(members, certificate)
}

/// Greedy selector for generalized representation: each group's members are
/// chunked into blocks of `g` in ascending index order (leftovers
/// uncolored), then the same cover runs. Guarantees
/// `|K| <= ceil((n/g)(1 + ln(max(γ, 2)))) + 1`.
pub fn generalized_greedy(groups: &GroupCollection, g: usize) -> Selection {
    let n = groups.universe();
    assert!(g >= 1 && g <= n, "group size {g} outside 1..={n}");
    let mut covers: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    let mut color_count = 0;
    for group in groups.groups() {
        for block in group.members.chunks_exact(g) {
            for &i in block {
                covers[i].push(color_count);
            }
            color_count += 1;
        }
    }
    let members = greedy_cover(n, &covers, color_count);
    let certificate = if members.is_empty() {
        // no group reached size g, so nothing is required of the subset
        Certificate::vacuous(PropertySpec::GenRep { g })
    } else {
        check_gen_rep(groups, &members, g).expect("cover members are in range")
    };
    debug_assert!(certificate.ok);
    debug_assert!(members.len() <= greedy_size_bound(n, g, groups.len().max(2)));
    Selection::deterministic(members, certificate)
}
