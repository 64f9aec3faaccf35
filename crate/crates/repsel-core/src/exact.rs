//! Exact minimum-size subset solver.
//!
//! Realizes the 0-1 programs for both properties without an external MIP
//! solver: iterative deepening on the target size `k`, starting from an
//! analytic lower bound, with depth-first search over metric inclusion.
//!
//! For representation the constraints are pure covering constraints. For
//! proportionality the program looks bilinear (both sides mention the
//! subset size), but once `k` is fixed each constraint collapses to an
//! integer window `lo <= C(K,r,a) <= hi` with thresholds computed in exact
//! rational arithmetic; that collapse is why deepening on `k` is used
//! instead of general branch-and-bound.
//!
//! The search never reports `Optimal` unless every smaller size was
//! exhausted, and every returned subset is re-verified through the property
//! checkers before it leaves this module.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::greedy::{generalized_greedy, greedy_select};
use crate::profile::PreferenceProfile;
use crate::properties::{
    check_gen_prop, check_gen_rep, check_pp, check_pr, cumulative_counts, Certificate,
    GroupCollection, PropertySpec,
};
use crate::rational::Rational;
use crate::selection::Selection;

/// Abort signal consulted periodically during search. The companion crate
/// provides a wall-clock implementation; `no_std` callers can supply their
/// own tick source.
pub trait Deadline {
    fn expired(&self) -> bool;
}

/// A deadline that never expires.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoDeadline;

impl Deadline for NoDeadline {
    fn expired(&self) -> bool {
        false
    }
}

/// What to solve for, beyond the property itself.
#[derive(Clone, Debug, Default)]
pub struct SolveRequest {
    /// Metrics that must appear in the result (augmentation).
    pub must_include: Vec<usize>,
    /// Reject any subset larger than this.
    pub size_cap: Option<usize>,
}

/// Outcome quality of a solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum SolveStatus {
    /// No smaller feasible subset exists.
    Optimal,
    /// Feasible but not proven minimal.
    Feasible,
    /// The deadline expired; members carry the best incumbent, if any.
    TimedOut,
    /// No subset within the size cap satisfies the property.
    Infeasible,
}

/// Result of an exact solve: status, chosen subset, and the checker's
/// certificate re-verifying it.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Ascending metric indices; empty for `Infeasible` and for a timeout
    /// with no incumbent.
    pub members: Vec<usize>,
    /// `|members|`.
    pub objective: usize,
    pub certificate: Option<Certificate>,
    /// Search nodes explored; deterministic for fixed inputs.
    pub nodes: u64,
}

impl SolveResult {
    pub fn into_selection(self) -> Option<Selection> {
        self.certificate
            .map(|certificate| Selection::deterministic(self.members, certificate))
    }
}

/// Errors from the solver entry points.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("metric index {index} out of range (n = {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("group size {g} outside 1..={n}")]
    InvalidGroupSize { g: usize, n: usize },
    #[error("tolerance must be nonnegative, got {0}")]
    InvalidEpsilon(Rational),
    #[error("property kind not supported by this solver entry point")]
    UnsupportedSpec,
}

fn validated_must_include(raw: &[usize], n: usize) -> Result<Vec<usize>, SolveError> {
    if let Some(&bad) = raw.iter().find(|&&i| i >= n) {
        return Err(SolveError::IndexOutOfRange {
            index: bad,
            limit: n,
        });
    }
    let mut v = raw.to_vec();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

/// Deduplicated constraint member sets in a fixed order, plus the reverse
/// map from metrics to the constraints containing them. Requirements and
/// reference fractions are functions of the member-set size alone, so
/// deduplication never loses a constraint.
struct ConstraintSets {
    members: Vec<Vec<usize>>,
    memberships: Vec<Vec<u32>>,
}

impl ConstraintSets {
    fn new(n: usize, sets: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let dedup: BTreeMap<Vec<usize>, ()> = sets.into_iter().map(|s| (s, ())).collect();
        let members: Vec<Vec<usize>> = dedup.into_keys().collect();
        let mut memberships: Vec<Vec<u32>> = alloc::vec![Vec::new(); n];
        for (c, set) in members.iter().enumerate() {
            for &i in set {
                memberships[i].push(c as u32);
            }
        }
        ConstraintSets {
            members,
            memberships,
        }
    }

    fn len(&self) -> usize {
        self.members.len()
    }
}

enum SearchOutcome {
    Found(Vec<usize>),
    Exhausted,
    TimedOut,
}

// ---------------------------------------------------------------------------
// Covering search (representation)
// ---------------------------------------------------------------------------

struct CoverSearch<'a> {
    sets: &'a ConstraintSets,
    required: &'a [u32],
    deadline: &'a dyn Deadline,
    k: usize,
    achieved: Vec<u32>,
    avail: Vec<u32>,
    decided: Vec<bool>,
    included: Vec<usize>,
    unsat: usize,
    nodes: u64,
    timed_out: bool,
}

impl<'a> CoverSearch<'a> {
    fn run(
        sets: &'a ConstraintSets,
        required: &'a [u32],
        must_include: &[usize],
        k: usize,
        deadline: &'a dyn Deadline,
    ) -> (SearchOutcome, u64) {
        let n = sets.memberships.len();
        let mut achieved = alloc::vec![0u32; sets.len()];
        let mut avail: Vec<u32> = sets.members.iter().map(|s| s.len() as u32).collect();
        let mut decided = alloc::vec![false; n];
        for &i in must_include {
            decided[i] = true;
            for &c in &sets.memberships[i] {
                achieved[c as usize] += 1;
                avail[c as usize] -= 1;
            }
        }
        let unsat = (0..sets.len())
            .filter(|&c| achieved[c] < required[c])
            .count();
        let mut search = CoverSearch {
            sets,
            required,
            deadline,
            k,
            achieved,
            avail,
            decided,
            included: must_include.to_vec(),
            unsat,
            nodes: 0,
            timed_out: false,
        };
        let outcome = match search.dfs() {
            Some(found) => SearchOutcome::Found(found),
            None if search.timed_out => SearchOutcome::TimedOut,
            None => SearchOutcome::Exhausted,
        };
        (outcome, search.nodes)
    }

    fn dfs(&mut self) -> Option<Vec<usize>> {
        self.nodes += 1;
        if self.nodes & 0x3ff == 1 && self.deadline.expired() {
            self.timed_out = true;
            return None;
        }
        if self.unsat == 0 {
            let mut found = self.included.clone();
            found.sort_unstable();
            return Some(found);
        }
        let slots = (self.k - self.included.len()) as u32;
        if slots == 0 {
            return None;
        }
        // Most-constrained first: the unsatisfied constraint with the least
        // slack between what is still available and what it still needs.
        let mut critical: Option<(u32, usize)> = None;
        for c in 0..self.required.len() {
            let deficit = self.required[c].saturating_sub(self.achieved[c]);
            if deficit == 0 {
                continue;
            }
            if deficit > slots || deficit > self.avail[c] {
                return None;
            }
            let slack = self.avail[c] - deficit;
            if critical.map_or(true, |(s, _)| slack < s) {
                critical = Some((slack, c));
            }
        }
        let (_, cid) = critical.expect("unsat constraints exist");
        // Branch on the member that helps the most other open constraints.
        let mut best: Option<(usize, usize)> = None;
        for &i in &self.sets.members[cid] {
            if self.decided[i] {
                continue;
            }
            let gain = self.sets.memberships[i]
                .iter()
                .filter(|&&c2| self.achieved[c2 as usize] < self.required[c2 as usize])
                .count();
            if best.map_or(true, |(bg, _)| gain > bg) {
                best = Some((gain, i));
            }
        }
        let (_, pick) = best.expect("capacity prune keeps an undecided member");

        self.decided[pick] = true;
        self.included.push(pick);
        for &c in &self.sets.memberships[pick] {
            let c = c as usize;
            self.achieved[c] += 1;
            if self.achieved[c] == self.required[c] {
                self.unsat -= 1;
            }
            self.avail[c] -= 1;
        }
        let found = self.dfs();
        for &c in &self.sets.memberships[pick] {
            let c = c as usize;
            if self.achieved[c] == self.required[c] {
                self.unsat += 1;
            }
            self.achieved[c] -= 1;
            self.avail[c] += 1;
        }
        self.included.pop();
        if found.is_some() || self.timed_out {
            self.decided[pick] = false;
            return found;
        }

        for &c in &self.sets.memberships[pick] {
            self.avail[c as usize] -= 1;
        }
        let found = self.dfs();
        for &c in &self.sets.memberships[pick] {
            self.avail[c as usize] += 1;
        }
        self.decided[pick] = false;
        found
    }
}

/// Iterative deepening over the covering constraints. `incumbent` must be a
/// feasible superset of `must_include`; it bounds the deepening from above
/// and is returned on timeout.
fn solve_cover(
    sets: &ConstraintSets,
    required: &[u32],
    must_include: &[usize],
    size_cap: Option<usize>,
    incumbent: Vec<usize>,
    deadline: &dyn Deadline,
) -> (SolveStatus, Vec<usize>, u64) {
    let lower = required
        .iter()
        .copied()
        .max()
        .unwrap_or(0)
        .max(must_include.len() as u32) as usize;
    debug_assert!(incumbent.len() >= lower);
    let cap = size_cap.unwrap_or(usize::MAX);
    let mut nodes = 0;
    if lower > cap {
        return (SolveStatus::Infeasible, Vec::new(), nodes);
    }
    let incumbent_fits = incumbent.len() <= cap;
    for k in lower..incumbent.len().min(cap.saturating_add(1)) {
        let (outcome, level_nodes) = CoverSearch::run(sets, required, must_include, k, deadline);
        nodes += level_nodes;
        match outcome {
            SearchOutcome::Found(members) => return (SolveStatus::Optimal, members, nodes),
            SearchOutcome::TimedOut => {
                let members = if incumbent_fits { incumbent } else { Vec::new() };
                return (SolveStatus::TimedOut, members, nodes);
            }
            SearchOutcome::Exhausted => {}
        }
    }
    if incumbent_fits {
        (SolveStatus::Optimal, incumbent, nodes)
    } else {
        (SolveStatus::Infeasible, Vec::new(), nodes)
    }
}

// ---------------------------------------------------------------------------
// Window search (proportionality at fixed subset size)
// ---------------------------------------------------------------------------

struct WindowSearch<'a> {
    sets: &'a ConstraintSets,
    lo: &'a [u32],
    hi: &'a [u32],
    order: &'a [usize],
    deadline: &'a dyn Deadline,
    k: usize,
    achieved: Vec<u32>,
    avail: Vec<u32>,
    included: Vec<usize>,
    undecided: usize,
    nodes: u64,
    timed_out: bool,
}

impl<'a> WindowSearch<'a> {
    #[allow(clippy::too_many_arguments)]
    fn run(
        sets: &'a ConstraintSets,
        lo: &'a [u32],
        hi: &'a [u32],
        must_include: &[usize],
        order: &'a [usize],
        k: usize,
        deadline: &'a dyn Deadline,
    ) -> (SearchOutcome, u64) {
        let mut achieved = alloc::vec![0u32; sets.len()];
        let mut avail: Vec<u32> = sets.members.iter().map(|s| s.len() as u32).collect();
        for &i in must_include {
            for &c in &sets.memberships[i] {
                achieved[c as usize] += 1;
                avail[c as usize] -= 1;
            }
        }
        if achieved.iter().zip(hi).any(|(t, h)| t > h) {
            // the forced metrics already over-represent some constraint
            return (SearchOutcome::Exhausted, 0);
        }
        let mut search = WindowSearch {
            sets,
            lo,
            hi,
            order,
            deadline,
            k,
            achieved,
            avail,
            included: must_include.to_vec(),
            undecided: order.len(),
            nodes: 0,
            timed_out: false,
        };
        let outcome = match search.dfs(0) {
            Some(found) => SearchOutcome::Found(found),
            None if search.timed_out => SearchOutcome::TimedOut,
            None => SearchOutcome::Exhausted,
        };
        (outcome, search.nodes)
    }

    fn dfs(&mut self, pos: usize) -> Option<Vec<usize>> {
        self.nodes += 1;
        if self.nodes & 0x3ff == 1 && self.deadline.expired() {
            self.timed_out = true;
            return None;
        }
        let slots = (self.k - self.included.len()) as u32;
        if slots == 0 {
            // remaining metrics are excluded; upper bounds are maintained
            // incrementally, so only the lower bounds need a final look
            if self.achieved.iter().zip(self.lo).all(|(t, l)| t >= l) {
                let mut found = self.included.clone();
                found.sort_unstable();
                return Some(found);
            }
            return None;
        }
        if slots as usize > self.undecided {
            return None;
        }
        for c in 0..self.lo.len() {
            let need = self.lo[c].saturating_sub(self.achieved[c]);
            if need > slots || need > self.avail[c] {
                return None;
            }
            // every slot not fillable outside this constraint lands inside it
            let outside = self.undecided as u32 - self.avail[c];
            let forced_inside = slots.saturating_sub(outside);
            if self.achieved[c] + forced_inside > self.hi[c] {
                return None;
            }
        }
        let pick = self.order[pos];
        self.undecided -= 1;

        let fits = self.sets.memberships[pick]
            .iter()
            .all(|&c| self.achieved[c as usize] < self.hi[c as usize]);
        if fits {
            self.included.push(pick);
            for &c in &self.sets.memberships[pick] {
                self.achieved[c as usize] += 1;
                self.avail[c as usize] -= 1;
            }
            let found = self.dfs(pos + 1);
            for &c in &self.sets.memberships[pick] {
                self.achieved[c as usize] -= 1;
                self.avail[c as usize] += 1;
            }
            self.included.pop();
            if found.is_some() || self.timed_out {
                self.undecided += 1;
                return found;
            }
        }

        for &c in &self.sets.memberships[pick] {
            self.avail[c as usize] -= 1;
        }
        let found = self.dfs(pos + 1);
        for &c in &self.sets.memberships[pick] {
            self.avail[c as usize] += 1;
        }
        self.undecided += 1;
        found
    }
}

/// Iterative deepening for proportionality. The reference fraction of every
/// constraint is `|members| / n`; thresholds are recomputed per level in
/// exact arithmetic. `incumbent` (the full set, when it fits the cap) is
/// returned on timeout.
fn solve_window(
    n: usize,
    sets: &ConstraintSets,
    eps: Rational,
    must_include: &[usize],
    size_cap: Option<usize>,
    deadline: &dyn Deadline,
) -> (SolveStatus, Vec<usize>, u64) {
    let lower = must_include.len().max(1);
    let cap = size_cap.unwrap_or(usize::MAX).min(n);
    let mut nodes = 0;
    if lower > cap {
        return (SolveStatus::Infeasible, Vec::new(), nodes);
    }
    let order: Vec<usize> = {
        let mut forced = alloc::vec![false; n];
        for &i in must_include {
            forced[i] = true;
        }
        (0..n).filter(|&i| !forced[i]).collect()
    };
    let incumbent_fits = n <= cap;
    let fractions: Vec<Rational> = sets
        .members
        .iter()
        .map(|s| Rational::ratio(s.len() as u64, n as u64))
        .collect();
    let mut lo = alloc::vec![0u32; sets.len()];
    let mut hi = alloc::vec![0u32; sets.len()];
    'levels: for k in lower..=cap {
        let k_rat = Rational::from_integer(k as i64);
        for c in 0..sets.len() {
            let span = sets.members[c].len().min(k) as i64;
            let raw_lo = ((fractions[c] - eps) * k_rat).ceil().max(0);
            let raw_hi = ((fractions[c] + eps) * k_rat).floor().min(span);
            if raw_lo > raw_hi {
                continue 'levels;
            }
            lo[c] = raw_lo as u32;
            hi[c] = raw_hi as u32;
        }
        let (outcome, level_nodes) =
            WindowSearch::run(sets, &lo, &hi, must_include, &order, k, deadline);
        nodes += level_nodes;
        match outcome {
            SearchOutcome::Found(members) => return (SolveStatus::Optimal, members, nodes),
            SearchOutcome::TimedOut => {
                let members = if incumbent_fits {
                    (0..n).collect()
                } else {
                    Vec::new()
                };
                return (SolveStatus::TimedOut, members, nodes);
            }
            SearchOutcome::Exhausted => {}
        }
    }
    // the full set always satisfies proportionality, so only a size cap can
    // land here
    (SolveStatus::Infeasible, Vec::new(), nodes)
}

// ---------------------------------------------------------------------------
// Entry points
// ---------------------------------------------------------------------------

fn finish(
    status: SolveStatus,
    members: Vec<usize>,
    nodes: u64,
    certify: impl FnOnce(&[usize]) -> Certificate,
) -> SolveResult {
    let certificate = if members.is_empty() {
        None
    } else {
        let cert = certify(&members);
        debug_assert!(cert.ok, "solver returned an unverified subset");
        Some(cert)
    };
    SolveResult {
        status,
        objective: members.len(),
        members,
        certificate,
        nodes,
    }
}

/// Minimum-cardinality subset containing `request.must_include` that
/// satisfies positional representation for group size `g`.
///
/// Constraints are reduced by dominance first: for each alternative, only
/// the rank cutoffs where the floor requirement strictly increases are kept
/// (earlier cutoffs with equal requirements are implied, their member sets
/// being subsets). Never infeasible without a size cap, since the full set
/// always qualifies.
pub fn exact_min_pr(
    profile: &PreferenceProfile,
    g: usize,
    request: &SolveRequest,
    deadline: &dyn Deadline,
) -> Result<SolveResult, SolveError> {
    let n = profile.metric_count();
    if g < 1 || g > n {
        return Err(SolveError::InvalidGroupSize { g, n });
    }
    let must_include = validated_must_include(&request.must_include, n)?;
    let m = profile.alternative_count();
    let all: Vec<usize> = (0..n).collect();
    let counts = cumulative_counts(profile, &all).expect("full set is nonempty");

    let mut raw_sets = Vec::new();
    for a in 0..m {
        let mut prev_req = 0;
        for r in 1..=m {
            let req = counts.count(r, a) / g;
            if req > prev_req {
                prev_req = req;
                raw_sets.push((0..n).filter(|&i| profile.rank_of(i, a) <= r).collect());
            }
        }
    }
    let sets = ConstraintSets::new(n, raw_sets);
    let required: Vec<u32> = sets
        .members
        .iter()
        .map(|s| (s.len() / g) as u32)
        .collect();

    let mut incumbent = greedy_select(profile, g).members;
    incumbent.extend_from_slice(&must_include);
    incumbent.sort_unstable();
    incumbent.dedup();

    let (status, members, nodes) = solve_cover(
        &sets,
        &required,
        &must_include,
        request.size_cap,
        incumbent,
        deadline,
    );
    Ok(finish(status, members, nodes, |k| {
        check_pr(profile, k, g).expect("solver subsets are valid")
    }))
}

/// Minimum-cardinality nonempty subset containing `request.must_include`
/// that satisfies `eps`-positional proportionality. Never infeasible
/// without a size cap.
pub fn exact_min_pp(
    profile: &PreferenceProfile,
    eps: Rational,
    request: &SolveRequest,
    deadline: &dyn Deadline,
) -> Result<SolveResult, SolveError> {
    if eps.is_negative() {
        return Err(SolveError::InvalidEpsilon(eps));
    }
    let n = profile.metric_count();
    let must_include = validated_must_include(&request.must_include, n)?;
    let m = profile.alternative_count();

    let mut raw_sets = Vec::new();
    for a in 0..m {
        for r in 1..=m {
            let members: Vec<usize> =
                (0..n).filter(|&i| profile.rank_of(i, a) <= r).collect();
            // a constraint over everything (or nothing) holds identically
            if !members.is_empty() && members.len() < n {
                raw_sets.push(members);
            }
        }
    }
    let sets = ConstraintSets::new(n, raw_sets);

    let (status, members, nodes) = solve_window(
        n,
        &sets,
        eps,
        &must_include,
        request.size_cap,
        deadline,
    );
    Ok(finish(status, members, nodes, |k| {
        check_pp(profile, k, eps).expect("solver subsets are valid")
    }))
}

/// Minimum-cardinality subset for the generalized properties over explicit
/// groups. `spec` must be [`PropertySpec::GenRep`] or
/// [`PropertySpec::GenProp`].
///
/// With no binding constraints (e.g. an empty collection) generalized
/// representation admits the empty subset, while generalized
/// proportionality keeps the nonempty convention and returns one metric.
pub fn exact_min_groups(
    groups: &GroupCollection,
    spec: &PropertySpec,
    request: &SolveRequest,
    deadline: &dyn Deadline,
) -> Result<SolveResult, SolveError> {
    let n = groups.universe();
    let must_include = validated_must_include(&request.must_include, n)?;
    match spec {
        PropertySpec::GenRep { g } => {
            let g = *g;
            if g < 1 || g > n {
                return Err(SolveError::InvalidGroupSize { g, n });
            }
            let sets = ConstraintSets::new(
                n,
                groups
                    .groups()
                    .iter()
                    .filter(|gr| gr.members.len() >= g)
                    .map(|gr| gr.members.clone()),
            );
            let required: Vec<u32> = sets
                .members
                .iter()
                .map(|s| (s.len() / g) as u32)
                .collect();
            let mut incumbent = generalized_greedy(groups, g).members;
            incumbent.extend_from_slice(&must_include);
            incumbent.sort_unstable();
            incumbent.dedup();
            let (status, members, nodes) = solve_cover(
                &sets,
                &required,
                &must_include,
                request.size_cap,
                incumbent,
                deadline,
            );
            Ok(SolveResult {
                status,
                objective: members.len(),
                certificate: match (members.is_empty(), status) {
                    (true, SolveStatus::Optimal) => {
                        Some(Certificate::vacuous(PropertySpec::GenRep { g }))
                    }
                    (true, _) => None,
                    (false, _) => {
                        let cert =
                            check_gen_rep(groups, &members, g).expect("solver subsets are valid");
                        debug_assert!(cert.ok);
                        Some(cert)
                    }
                },
                members,
                nodes,
            })
        }
        PropertySpec::GenProp { eps } => {
            let eps = *eps;
            if eps.is_negative() {
                return Err(SolveError::InvalidEpsilon(eps));
            }
            let sets = ConstraintSets::new(
                n,
                groups
                    .groups()
                    .iter()
                    .filter(|gr| !gr.members.is_empty() && gr.members.len() < n)
                    .map(|gr| gr.members.clone()),
            );
            let (status, members, nodes) = solve_window(
                n,
                &sets,
                eps,
                &must_include,
                request.size_cap,
                deadline,
            );
            Ok(finish(status, members, nodes, |k| {
                check_gen_prop(groups, k, eps).expect("solver subsets are valid")
            }))
        }
        _ => Err(SolveError::UnsupportedSpec),
    }
}

/// Optimally extends an existing subset until `spec` holds: identical to the
/// plain solve with `must_include` set to `existing`. The objective is never
/// below `|existing|`.
pub fn augment(
    profile: &PreferenceProfile,
    existing: &[usize],
    spec: &PropertySpec,
    request: &SolveRequest,
    deadline: &dyn Deadline,
) -> Result<SolveResult, SolveError> {
    let mut request = request.clone();
    request.must_include = existing.to_vec();
    match spec {
        PropertySpec::Pr { g } => exact_min_pr(profile, *g, &request, deadline),
        PropertySpec::Pp { eps } => exact_min_pp(profile, *eps, &request, deadline),
        _ => Err(SolveError::UnsupportedSpec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use alloc::string::ToString;
    use alloc::vec;

    fn plain() -> SolveRequest {
        SolveRequest::default()
    }

    #[test]
    fn table2_needs_three_metrics() {
        let p = generators::table2();
        let res = exact_min_pr(&p, 2, &plain(), &NoDeadline).unwrap();
        assert_eq!(res.status, SolveStatus::Optimal);
        assert_eq!(res.objective, 3);
        assert!(res.certificate.unwrap().ok);
    }

    #[test]
    fn g_equals_n_needs_one() {
        let p = generators::table2();
        let res = exact_min_pr(&p, 4, &plain(), &NoDeadline).unwrap();
        assert_eq!(res.objective, 1);
    }

    #[test]
    fn identical_rankings_pp_needs_one() {
        let ranking: Vec<usize> = (0..5).collect();
        let rankings: Vec<Vec<usize>> = (0..8).map(|_| ranking.clone()).collect();
        let p = crate::profile::PreferenceProfile::from_rankings(
            (1..=8).map(|i| alloc::format!("m{i}")).collect(),
            (1..=5).map(|a| alloc::format!("a{a}")).collect(),
            &rankings,
        )
        .unwrap();
        let res = exact_min_pp(&p, Rational::ZERO, &plain(), &NoDeadline).unwrap();
        assert_eq!(res.objective, 1);
        assert_eq!(res.status, SolveStatus::Optimal);
    }

    #[test]
    fn huge_eps_needs_one() {
        let p = generators::random_profile(7, 5, 3);
        let res = exact_min_pp(&p, Rational::ONE, &plain(), &NoDeadline).unwrap();
        assert_eq!(res.objective, 1);
    }

    #[test]
    fn brute_force_agreement_small() {
        // full oracle equivalence runs in the integration suite; keep two
        // representative instances here
        for seed in [5, 6] {
            let p = generators::random_profile(7, 4, seed);
            let res = exact_min_pr(&p, 2, &plain(), &NoDeadline).unwrap();
            let best = brute_force_min(&p, |k| {
                crate::properties::check_pr(&p, k, 2).unwrap().ok
            });
            assert_eq!(res.objective, best.unwrap(), "seed {seed}");

            let eps = Rational::new(1, 4);
            let res = exact_min_pp(&p, eps, &plain(), &NoDeadline).unwrap();
            let best = brute_force_min(&p, |k| {
                crate::properties::check_pp(&p, k, eps).unwrap().ok
            });
            assert_eq!(res.objective, best.unwrap(), "seed {seed}");
        }
    }

    fn brute_force_min(
        p: &crate::profile::PreferenceProfile,
        ok: impl Fn(&[usize]) -> bool,
    ) -> Option<usize> {
        let n = p.metric_count();
        let mut best: Option<usize> = None;
        for mask in 1u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if best.map_or(true, |b| members.len() < b) && ok(&members) {
                best = Some(members.len());
            }
        }
        best
    }

    #[test]
    fn must_include_is_honored() {
        let p = generators::table2();
        let req = SolveRequest {
            must_include: vec![3],
            size_cap: None,
        };
        let res = exact_min_pr(&p, 2, &req, &NoDeadline).unwrap();
        assert!(res.members.contains(&3));
        assert!(res.objective >= 3);
        assert!(res.certificate.unwrap().ok);
    }

    #[test]
    fn augment_with_feasible_existing_returns_it() {
        let p = generators::table2();
        let existing = vec![0, 1, 2];
        let res = augment(
            &p,
            &existing,
            &PropertySpec::Pr { g: 2 },
            &plain(),
            &NoDeadline,
        )
        .unwrap();
        assert_eq!(res.members, existing);
        assert_eq!(res.objective, 3);
    }

    #[test]
    fn augment_empty_matches_plain_solve() {
        let p = generators::random_profile(8, 5, 12);
        let plain_res = exact_min_pp(&p, Rational::new(1, 3), &plain(), &NoDeadline).unwrap();
        let aug = augment(
            &p,
            &[],
            &PropertySpec::Pp {
                eps: Rational::new(1, 3),
            },
            &plain(),
            &NoDeadline,
        )
        .unwrap();
        assert_eq!(plain_res, aug);
    }

    #[test]
    fn size_cap_reports_infeasible() {
        let p = generators::table2();
        let req = SolveRequest {
            must_include: vec![],
            size_cap: Some(2),
        };
        let res = exact_min_pr(&p, 2, &req, &NoDeadline).unwrap();
        assert_eq!(res.status, SolveStatus::Infeasible);
        assert!(res.members.is_empty());
        assert!(res.certificate.is_none());
    }

    #[test]
    fn group_solver_matches_positional() {
        for seed in [40, 41] {
            let p = generators::random_profile(6, 5, seed);
            let groups = crate::properties::groups_from_profile(&p);
            let via_groups = exact_min_groups(
                &groups,
                &PropertySpec::GenRep { g: 2 },
                &plain(),
                &NoDeadline,
            )
            .unwrap();
            let direct = exact_min_pr(&p, 2, &plain(), &NoDeadline).unwrap();
            assert_eq!(via_groups.objective, direct.objective, "seed {seed}");

            let eps = Rational::new(1, 3);
            let via_groups = exact_min_groups(
                &groups,
                &PropertySpec::GenProp { eps },
                &plain(),
                &NoDeadline,
            )
            .unwrap();
            let direct = exact_min_pp(&p, eps, &plain(), &NoDeadline).unwrap();
            assert_eq!(via_groups.objective, direct.objective, "seed {seed}");
        }
    }

    #[test]
    fn disjoint_groups_need_one_each() {
        let groups = GroupCollection::new(
            9,
            (0..3).map(|j| (alloc::format!("g{j}"), vec![3 * j, 3 * j + 1, 3 * j + 2])),
        )
        .unwrap();
        let res = exact_min_groups(
            &groups,
            &PropertySpec::GenRep { g: 3 },
            &plain(),
            &NoDeadline,
        )
        .unwrap();
        assert_eq!(res.objective, 3);
    }

    #[test]
    fn empty_group_list_conventions() {
        let groups = GroupCollection::new(5, []).unwrap();
        let rep = exact_min_groups(
            &groups,
            &PropertySpec::GenRep { g: 2 },
            &plain(),
            &NoDeadline,
        )
        .unwrap();
        assert_eq!(rep.objective, 0);
        assert_eq!(rep.status, SolveStatus::Optimal);
        assert!(rep.certificate.unwrap().ok);

        let prop = exact_min_groups(
            &groups,
            &PropertySpec::GenProp {
                eps: Rational::new(1, 2),
            },
            &plain(),
            &NoDeadline,
        )
        .unwrap();
        assert_eq!(prop.objective, 1);
    }

    #[test]
    fn deadline_produces_timed_out_with_incumbent() {
        struct Always;
        impl Deadline for Always {
            fn expired(&self) -> bool {
                true
            }
        }
        // large enough that a level cannot finish before the first check
        let p = generators::random_profile(24, 12, 9);
        let res = exact_min_pr(&p, 2, &plain(), &Always).unwrap();
        assert_eq!(res.status, SolveStatus::TimedOut);
        assert!(!res.members.is_empty(), "greedy incumbent expected");
        assert!(res.certificate.unwrap().ok);
        assert_eq!(res.objective, res.members.len());
    }

    #[test]
    fn invalid_inputs_error() {
        let p = generators::table2();
        assert!(matches!(
            exact_min_pr(&p, 0, &plain(), &NoDeadline),
            Err(SolveError::InvalidGroupSize { .. })
        ));
        let req = SolveRequest {
            must_include: vec![17],
            size_cap: None,
        };
        assert!(matches!(
            exact_min_pr(&p, 2, &req, &NoDeadline),
            Err(SolveError::IndexOutOfRange { index: 17, .. })
        ));
        assert!(matches!(
            exact_min_pp(&p, Rational::new(-1, 2), &plain(), &NoDeadline),
            Err(SolveError::InvalidEpsilon(_))
        ));
        let groups = GroupCollection::new(4, [("g".to_string(), vec![0])]).unwrap();
        assert!(matches!(
            exact_min_groups(&groups, &PropertySpec::Pr { g: 2 }, &plain(), &NoDeadline),
            Err(SolveError::UnsupportedSpec)
        ));
    }
}
