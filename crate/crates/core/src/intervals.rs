//! Sets of nonnegative integers stored as sorted runs of consecutive
//! values. Iterated sumsets coalesce into a handful of runs almost
//! immediately, so this representation keeps them exact and tiny.

use crate::error::{Error, Result};
use std::fmt;

/// A finite set of `u64`s as disjoint, non-adjacent, sorted inclusive runs.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    runs: Vec<(u64, u64)>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { runs: Vec::new() }
    }

    pub fn from_values(values: &[u64]) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut set = IntervalSet::empty();
        for v in sorted {
            match set.runs.last_mut() {
                Some(run) if run.1 + 1 == v => run.1 = v,
                _ => set.runs.push((v, v)),
            }
        }
        set
    }

    /// Builds from arbitrary inclusive intervals; overlapping or adjacent
    /// ones are merged. Panics if some `lo > hi`.
    pub fn from_intervals(intervals: &[(u64, u64)]) -> Self {
        let mut runs = intervals.to_vec();
        for &(lo, hi) in &runs {
            assert!(lo <= hi, "interval ({lo},{hi}) is reversed");
        }
        runs.sort_unstable();
        let mut merged: Vec<(u64, u64)> = Vec::with_capacity(runs.len());
        for (lo, hi) in runs {
            match merged.last_mut() {
                Some(prev) if lo <= prev.1.saturating_add(1) => prev.1 = prev.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        IntervalSet { runs: merged }
    }

    /// The underlying runs, sorted and disjoint.
    pub fn runs(&self) -> &[(u64, u64)] {
        &self.runs
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn cardinality(&self) -> u64 {
        self.runs.iter().map(|&(lo, hi)| hi - lo + 1).sum()
    }

    /// Smallest member. Panics on the empty set.
    pub fn first(&self) -> u64 {
        self.runs.first().expect("empty interval set").0
    }

    /// Largest member. Panics on the empty set.
    pub fn last(&self) -> u64 {
        self.runs.last().expect("empty interval set").1
    }

    pub fn contains(&self, v: u64) -> bool {
        self.runs
            .binary_search_by(|&(lo, hi)| {
                if v < lo {
                    std::cmp::Ordering::Greater
                } else if v > hi {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Equal
                }
            })
            .is_ok()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.runs.iter().flat_map(|&(lo, hi)| lo..=hi)
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let mut runs = self.runs.clone();
        runs.extend_from_slice(&other.runs);
        IntervalSet::from_intervals(&runs)
    }

    pub fn is_subset_of(&self, other: &IntervalSet) -> bool {
        // Each of our runs must sit inside a single run of `other`
        // (other's runs are non-adjacent, so a contained run cannot span two).
        self.runs.iter().all(|&(lo, hi)| {
            other
                .runs
                .iter()
                .any(|&(olo, ohi)| olo <= lo && hi <= ohi)
        })
    }

    /// Minkowski sum `{ x + y : x in self, y in other }`, exact because the
    /// sum of two integer runs is again a run. Fails on u64 overflow.
    pub fn minkowski_sum(&self, other: &IntervalSet) -> Result<IntervalSet> {
        let mut runs = Vec::with_capacity(self.runs.len() * other.runs.len());
        for &(a, b) in &self.runs {
            for &(c, d) in &other.runs {
                let lo = a.checked_add(c).ok_or(Error::ArithmeticOverflow("interval sum"))?;
                let hi = b.checked_add(d).ok_or(Error::ArithmeticOverflow("interval sum"))?;
                runs.push((lo, hi));
            }
        }
        Ok(IntervalSet::from_intervals(&runs))
    }
}

impl fmt::Debug for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, &(lo, hi)) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            if lo == hi {
                write!(f, "{lo}")?;
            } else {
                write!(f, "[{lo},{hi}]")?;
            }
        }
        write!(f, "}}")
    }
}
