//! N ladders shared by the zero demo and the convergence probe.

use crate::config::MIN_LADDER;
use crate::error::{Error, Result};

/// Requires at least [`MIN_LADDER`] entries, strictly increasing, from N ≥ 1.
pub fn validate_ladder(ladder: &[usize]) -> Result<()> {
    if ladder.len() < MIN_LADDER {
        return Err(Error::LadderTooShort {
            len: ladder.len(),
            min: MIN_LADDER,
        });
    }
    if ladder[0] == 0 {
        return Err(Error::LadderNotIncreasing { index: 0 });
    }
    match ladder.windows(2).position(|w| w[1] <= w[0]) {
        Some(i) => Err(Error::LadderNotIncreasing { index: i + 1 }),
        None => Ok(()),
    }
}

/// first, 2·first, 4·first, … up to and including `last` when reachable.
pub fn doubling_ladder(first: usize, last: usize) -> Vec<usize> {
    assert!(first >= 1);
    std::iter::successors(Some(first), |&n| n.checked_mul(2))
        .take_while(|&n| n <= last)
        .collect()
}
