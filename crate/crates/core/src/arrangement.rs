//! Arranging a multiset of colours so that no two equal colours are adjacent.
//!
//! A multiset with counts `a_1, …, a_r` and total `t` admits such an
//! arrangement exactly when `max a_i <= ceil(t / 2)`. The constructive
//! routine here fills the even positions first and the odd positions
//! second, taking colours in descending count order, which always succeeds
//! under that bound.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// How many vertices each colour class contributes. Zero entries are
/// allowed and never appear in arrangements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorCounts {
    counts: Vec<usize>,
}

impl ColorCounts {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.iter().sum::<usize>() == 0 {
            return Err(Error::EmptyColorCounts);
        }
        Ok(ColorCounts { counts })
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// An arrangement exists iff the largest class fits into every other
    /// position of the sequence.
    pub fn is_feasible(&self) -> bool {
        2 * self.max() <= self.total() + 1
    }
}

/// Build an arrangement, as a sequence of colour indices, or `None` when
/// none exists.
///
/// Colours are laid out largest class first (ties broken by original
/// index) along positions 0, 2, 4, … and then 1, 3, 5, …, so the output is
/// deterministic.
pub fn arrange(counts: &ColorCounts) -> Option<Vec<usize>> {
    if !counts.is_feasible() {
        return None;
    }
    let t = counts.total();
    let mut order: Vec<usize> = (0..counts.counts.len())
        .filter(|&c| counts.counts[c] > 0)
        .collect();
    order.sort_by_key(|&c| std::cmp::Reverse(counts.counts[c]));
    let mut slots = vec![usize::MAX; t];
    let mut position = (0..t).step_by(2).chain((1..t).step_by(2));
    for c in order {
        for _ in 0..counts.counts[c] {
            slots[position.next().expect("positions cover the total")] = c;
        }
    }
    Some(slots)
}

/// Check that `sequence` uses each colour exactly as often as `counts`
/// prescribes and never repeats a colour in adjacent positions.
pub fn is_valid_arrangement(counts: &ColorCounts, sequence: &[usize]) -> bool {
    let mut seen = vec![0usize; counts.counts.len()];
    for &c in sequence {
        if c >= counts.counts.len() {
            return false;
        }
        seen[c] += 1;
    }
    if seen != counts.counts {
        return false;
    }
    sequence.windows(2).all(|w| w[0] != w[1])
}
