//! Invariants built from sets of lengths: sets of distances, the gcd
//! formula for the minimal distance, iterated sumsets, and the
//! almost-arithmetic-progression (AAP) shape of length sets.
//!
//! The set of distances of a monoid is the union of the distances of all
//! its length sets. It is finite, but no closed form for an a-priori scan
//! cutoff is used here; scans carry an explicit bound and report it, and
//! the default bound `4 * largest_atom^2` is a heuristic that the
//! verification layer treats as such (an empty or short scan is reported
//! as insufficient, never as a refutation).

use crate::error::{Error, Result};
use crate::intervals::IntervalSet;
use crate::lengths::{for_each_length_set, LengthSet};
use crate::monoid::NumericalMonoid;
use std::collections::BTreeSet;
use std::ops::ControlFlow;

/// Distances observed in length sets of members up to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSet {
    /// Sorted, deduplicated distances.
    pub distances: Vec<u64>,
    /// The scan bound that produced them. Distances first occurring above
    /// the bound are not in `distances`.
    pub bound: u64,
}

/// A length set split around its longest central arithmetic progression:
/// `head ++ {y, y+d, ..., y + ell*d} ++ tail`, with both ends within `m`
/// of the progression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AapDecomposition {
    /// First value of the central progression.
    pub y: u64,
    /// Stride of the progression.
    pub d: u64,
    /// Number of steps: the progression has `ell + 1` values.
    pub ell: u64,
    /// Values below `y`, sorted; all within `[y - m, y - 1]`.
    pub head: Vec<u64>,
    /// Values above `y + ell*d`, sorted; all within `(y + ell*d, y + ell*d + m]`.
    pub tail: Vec<u64>,
    /// Largest deviation of `head`/`tail` from the progression ends;
    /// 0 when both are empty.
    pub m: u64,
}

/// Default scan bound for distance aggregation: `4 * largest_atom^2`.
pub fn default_delta_bound(h: &NumericalMonoid) -> Result<u64> {
    h.largest_atom()
        .checked_mul(h.largest_atom())
        .and_then(|sq| sq.checked_mul(4))
        .ok_or(Error::ArithmeticOverflow("default distance scan bound"))
}

/// The gcd of consecutive atom differences. This equals the minimal
/// distance of the monoid (the smallest gap ever seen between consecutive
/// factorization lengths); the verification layer checks that equality
/// empirically.
pub fn min_delta_formula(h: &NumericalMonoid) -> Result<u64> {
    if h.embedding_dim() < 2 {
        return Err(Error::HalfFactorialTrivial);
    }
    Ok(h.atoms().windows(2).map(|w| w[1] - w[0]).fold(0, gcd))
}

/// Union of the distances of `L(a)` over every member `a <= n`.
///
/// An empty result at a small bound just means no member below the bound
/// has two factorization lengths yet.
pub fn delta_up_to(h: &NumericalMonoid, n: u64) -> Result<DeltaSet> {
    if h.embedding_dim() < 2 {
        return Err(Error::HalfFactorialTrivial);
    }
    let mut distances = BTreeSet::new();
    for_each_length_set(h, n, |_, set| {
        distances.extend(set.distances());
        ControlFlow::Continue(())
    });
    Ok(DeltaSet { distances: distances.into_iter().collect(), bound: n })
}

/// The k-fold sumset `kA = { a_1 + ... + a_k : a_i in A }`.
///
/// Computed by iterated Minkowski sums of interval runs, so the result is
/// exact no matter how large the values get (short of u64 overflow).
/// `set` must be nonempty and `k` at least 1.
pub fn sumset(set: &[u64], k: u64) -> Result<IntervalSet> {
    assert!(!set.is_empty(), "sumset of an empty set");
    assert!(k >= 1, "sumset requires k >= 1");
    let base = IntervalSet::from_values(set);
    let mut acc = base.clone();
    for _ in 1..k {
        acc = acc.minkowski_sum(&base)?;
    }
    Ok(acc)
}

/// Splits `set` around its longest run of consecutive `d`-steps (ties go
/// to the leftmost run). Fails with `GapNotMultiple` if some gap between
/// consecutive values is not a multiple of `d`, since then the set does
/// not sit inside a single residue class `y + d*Z`.
pub fn aap_decompose(set: &LengthSet, d: u64) -> Result<AapDecomposition> {
    assert!(d >= 1, "stride must be positive");
    let values = set.to_vec();
    assert!(!values.is_empty(), "length sets are nonempty");
    for w in values.windows(2) {
        let gap = w[1] - w[0];
        if gap % d != 0 {
            return Err(Error::GapNotMultiple { gap, stride: d });
        }
    }

    // Maximal runs of consecutive values exactly d apart, as index ranges.
    let mut best_start = 0usize;
    let mut best_len = 1usize;
    let mut start = 0usize;
    for i in 1..values.len() {
        if values[i] - values[i - 1] != d {
            start = i;
        }
        let len = i - start + 1;
        if len > best_len {
            best_start = start;
            best_len = len;
        }
    }

    let y = values[best_start];
    let ell = (best_len - 1) as u64;
    let top = y + ell * d;
    let head = values[..best_start].to_vec();
    let tail = values[best_start + best_len..].to_vec();
    let m_head = head.first().map_or(0, |&lo| y - lo);
    let m_tail = tail.last().map_or(0, |&hi| hi - top);
    Ok(AapDecomposition { y, d, ell, head, tail, m: m_head.max(m_tail) })
}

/// The largest AAP deviation `m` over all members up to `n`, using the
/// formula stride. Surfaces `GapNotMultiple` if any length set fails to
/// sit in a single residue class of the stride — that would refute the
/// structure the rest of the crate relies on.
pub fn minimal_m(h: &NumericalMonoid, n: u64) -> Result<u64> {
    let d = min_delta_formula(h)?;
    let mut worst = 0u64;
    let mut failure: Option<Error> = None;
    for_each_length_set(h, n, |_, set| match aap_decompose(set, d) {
        Ok(aap) => {
            worst = worst.max(aap.m);
            ControlFlow::Continue(())
        }
        Err(e) => {
            failure = Some(e);
            ControlFlow::Break(())
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(worst),
    }
}

/// Every distinct length set of members up to `n`.
pub fn restricted_system(h: &NumericalMonoid, n: u64) -> BTreeSet<LengthSet> {
    let mut out = BTreeSet::new();
    for_each_length_set(h, n, |_, set| {
        if !out.contains(set) {
            out.insert(set.clone());
        }
        ControlFlow::Continue(())
    });
    out
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
