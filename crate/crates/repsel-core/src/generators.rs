//! Instance generators: the 4×6 pair-cover example, the two worst-case
//! constructions behind the lower bounds, and uniform random profiles.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::profile::PreferenceProfile;

/// Default ceiling on `n * m` cells for the subset-enumeration construction,
/// whose alternative count grows as `2 * C(n, g)`.
pub const DEFAULT_CELL_BUDGET: u64 = 1 << 22;

/// Errors from instance generators.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidParameters(&'static str),
    #[error("instance needs {required_cells} cells, over the budget of {budget}")]
    BudgetExceeded { required_cells: u128, budget: u64 },
}

/// The 4-metric, 6-alternative profile where pair cover forces any
/// representation-for-`g=2` subset to have at least 3 members even though
/// `n/g = 2`.
pub fn table2() -> PreferenceProfile {
    let metric_names: Vec<String> = ["b1", "b2", "b3", "b4"].map(String::from).to_vec();
    let alt_names: Vec<String> = ["u", "v", "w", "x", "y", "z"].map(String::from).to_vec();
    // rankings as indices into [u, v, w, x, y, z]
    let rankings = [
        alloc::vec![3, 4, 0, 5, 1, 2], // b1: x y u z v w
        alloc::vec![3, 5, 1, 4, 0, 2], // b2: x z v y u w
        alloc::vec![2, 4, 1, 5, 0, 3], // b3: w y v z u x
        alloc::vec![2, 5, 0, 4, 1, 3], // b4: w z u y v x
    ];
    PreferenceProfile::from_rankings(metric_names, alt_names, &rankings)
        .expect("fixture profile is valid")
}

fn binomial(n: u64, g: u64) -> Option<u128> {
    let g = g.min(n - g.min(n));
    let mut c: u128 = 1;
    for i in 1..=g {
        c = c.checked_mul((n - g + i) as u128)?;
        c /= i as u128; // exact: product of i consecutive integers
    }
    Some(c)
}

/// Worst-case instance for representation: every size-`g` subset of metrics
/// gets its own "private" alternative, so a covering subset must intersect
/// all of them. With `m = 2 * C(n, g)` alternatives, any subset satisfying
/// representation for group size `g` needs at least `n - g + 1` metrics.
///
/// Position `r <= C(n, g)` holds alternative `a_r` for metrics in the `r`-th
/// size-`g` subset (lexicographic order) and `b_r` for the rest; remaining
/// positions are filled by ascending unused alternative index.
pub fn pr_lower_bound(n: usize, g: usize, cell_budget: u64) -> Result<PreferenceProfile, GenError> {
    if g < 2 {
        return Err(GenError::InvalidParameters("group size must be at least 2"));
    }
    if n % g != 0 || n / g < 3 {
        return Err(GenError::InvalidParameters(
            "metric count must be a multiple of the group size, at least 3x",
        ));
    }
    let subsets = binomial(n as u64, g as u64).ok_or(GenError::BudgetExceeded {
        required_cells: u128::MAX,
        budget: cell_budget,
    })?;
    let cells = subsets
        .checked_mul(2)
        .and_then(|m| m.checked_mul(n as u128))
        .ok_or(GenError::BudgetExceeded {
            required_cells: u128::MAX,
            budget: cell_budget,
        })?;
    if cells > cell_budget as u128 {
        return Err(GenError::BudgetExceeded {
            required_cells: cells,
            budget: cell_budget,
        });
    }
    let subsets = subsets as usize;
    let m = 2 * subsets;

    let metric_names = (1..=n).map(|i| format!("m{i}")).collect();
    let mut alt_names = Vec::with_capacity(m);
    for r in 1..=subsets {
        alt_names.push(format!("a{r}")); // index 2(r-1)
        alt_names.push(format!("b{r}")); // index 2(r-1)+1
    }

    let mut rankings: Vec<Vec<usize>> = alloc::vec![Vec::with_capacity(m); n];
    let mut subset: Vec<usize> = (0..g).collect();
    for r in 0..subsets {
        let mut member = alloc::vec![false; n];
        for &i in &subset {
            member[i] = true;
        }
        for (i, ranking) in rankings.iter_mut().enumerate() {
            ranking.push(if member[i] { 2 * r } else { 2 * r + 1 });
        }
        next_combination(&mut subset, n);
    }
    for ranking in &mut rankings {
        let mut used = alloc::vec![false; m];
        for &a in ranking.iter() {
            used[a] = true;
        }
        ranking.extend((0..m).filter(|&a| !used[a]));
    }
    Ok(PreferenceProfile::from_rankings(metric_names, alt_names, &rankings)
        .expect("construction yields permutations"))
}

/// Advances `subset` to the next size-`g` combination of `0..n` in
/// lexicographic order. The final combination wraps silently; callers stop
/// after `C(n, g)` steps.
fn next_combination(subset: &mut [usize], n: usize) {
    let g = subset.len();
    for pos in (0..g).rev() {
        if subset[pos] < n - (g - pos) {
            subset[pos] += 1;
            for later in pos + 1..g {
                subset[later] = subset[later - 1] + 1;
            }
            return;
        }
    }
}

/// Worst-case instance for proportionality: alternatives come in pairs, and
/// for each metric a fair coin decides whether pair `j` sits in positions
/// `(2j-1, 2j)` in order or swapped. Every pair member is always inside the
/// top `2j`, so only the swap pattern carries information.
pub fn pp_lower_bound(n: usize, m: usize, seed: u64) -> Result<PreferenceProfile, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    pp_lower_bound_with_flips(n, m, |_, _| rng.gen::<bool>())
}

/// Deterministic core of [`pp_lower_bound`]: `swap(i, j)` is consulted once
/// per metric `i` and pair `j` (both 0-based), metrics outer, pairs inner.
pub fn pp_lower_bound_with_flips(
    n: usize,
    m: usize,
    mut swap: impl FnMut(usize, usize) -> bool,
) -> Result<PreferenceProfile, GenError> {
    if n == 0 {
        return Err(GenError::InvalidParameters("need at least one metric"));
    }
    if m == 0 || m % 2 != 0 {
        return Err(GenError::InvalidParameters(
            "alternative count must be even and positive",
        ));
    }
    let metric_names = (1..=n).map(|i| format!("m{i}")).collect();
    let alt_names = (1..=m).map(|a| format!("a{a}")).collect();
    let mut rankings: Vec<Vec<usize>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut ranking = Vec::with_capacity(m);
        for j in 0..m / 2 {
            let (first, second) = (2 * j, 2 * j + 1);
            if swap(i, j) {
                ranking.push(second);
                ranking.push(first);
            } else {
                ranking.push(first);
                ranking.push(second);
            }
        }
        rankings.push(ranking);
        let _ = i;
    }
    Ok(PreferenceProfile::from_rankings(metric_names, alt_names, &rankings)
        .expect("pairwise construction yields permutations"))
}

/// A profile of `n` independent uniform random rankings over `m`
/// alternatives. Same seed, same profile.
pub fn random_profile(n: usize, m: usize, seed: u64) -> PreferenceProfile {
    assert!(n >= 1 && m >= 1, "profile needs at least one metric and alternative");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let metric_names = (1..=n).map(|i| format!("m{i}")).collect();
    let alt_names: Vec<String> = (1..=m).map(|a| format!("a{a}")).collect();
    let mut rankings = Vec::with_capacity(n);
    for _ in 0..n {
        let mut ranking: Vec<usize> = (0..m).collect();
        ranking.shuffle(&mut rng);
        rankings.push(ranking);
    }
    PreferenceProfile::from_rankings(metric_names, alt_names, &rankings)
        .expect("shuffled rankings are permutations")
}
