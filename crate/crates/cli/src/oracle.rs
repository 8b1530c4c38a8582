//! Exhaustive search for the exact vital-edge set.

use itertools::Itertools;
use vital_edges::{robustness_after_removal, EdgeId, Graph};

use crate::error::CliError;

pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

/// Evaluates every `cost`-subset of edges and returns the one minimizing
/// robustness, with its R. Ties go to the lexicographically smallest edge-id
/// tuple. Refuses to enumerate more than `cap` subsets.
pub fn brute_force_vital_edges(
    g: &Graph,
    cost: usize,
    cap: u128,
) -> Result<(Vec<EdgeId>, f64), CliError> {
    let m = g.edge_count();
    if cost > m {
        return Err(CliError::Invalid(format!(
            "cost {cost} exceeds edge count {m}"
        )));
    }
    let required = binomial(m as u128, cost as u128);
    if required.is_none_or(|r| r > cap) {
        return Err(CliError::CapExceeded {
            required: required.unwrap_or(u128::MAX),
            cap,
        });
    }

    let mut best: Option<(Vec<EdgeId>, f64)> = None;
    // lexicographic order, so the first strict minimum is the tie-winner
    for subset in (0..m).combinations(cost) {
        let r = robustness_after_removal(g, &subset)?;
        if best.as_ref().is_none_or(|(_, b)| r < *b) {
            best = Some((subset, r));
        }
    }
    Ok(best.expect("at least the empty subset is enumerated"))
}

/// `n choose k` without overflow; `None` means it exceeds u128.
fn binomial(n: u128, k: u128) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut res: u128 = 1;
    for i in 1..=k {
        // exact at every step: res holds C(n, i-1) * ... adjusted incrementally
        res = res.checked_mul(n - k + i)? / i;
    }
    Some(res)
}
