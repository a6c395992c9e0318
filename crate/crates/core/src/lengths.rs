//! Factorizations and sets of lengths.
//!
//! A factorization of a member `a` is an exponent vector `z` over the atoms
//! with `sum z_i * atom_i = a`; its length is `sum z_i`. The set of lengths
//! `L(a)` collects the lengths of all factorizations. `L(a)` is computed by
//! dynamic programming over values (never by enumerating factorizations):
//! `L(0) = {0}` and `L(v) = union over atoms of (1 + L(v - atom))`.
//!
//! Length sets are kept as bitsets keyed by length — the largest length is
//! `v / multiplicity`, so the sets stay small and the DP step is a
//! shift-and-or per atom. The streaming driver [`for_each_length_set`]
//! visits every member of `[0, n]` in order while retaining only a window
//! of `largest_atom + 1` rows, which keeps the big verification sweeps in
//! constant-ish memory.

use crate::error::{Error, Result};
use crate::monoid::NumericalMonoid;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::ControlFlow;

/// `factorizations` refuses to materialize more vectors than this unless
/// the caller raises the guard explicitly.
pub const DEFAULT_FACTORIZATION_GUARD: u64 = 10_000_000;

/// A finite set of factorization lengths, stored as a bitset.
///
/// Publicly visible length sets are always nonempty (`L(a)` for a member
/// `a` always contains at least one length, and `L(0) = {0}`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LengthSet {
    /// Bit `l` of block `l / 64` is set iff `l` is in the set.
    /// Invariant: the last block is nonzero (no trailing zero blocks).
    bits: Vec<u64>,
}

impl LengthSet {
    pub(crate) fn empty() -> Self {
        LengthSet { bits: Vec::new() }
    }

    pub fn singleton(l: u64) -> Self {
        let mut s = LengthSet::empty();
        s.insert(l);
        s
    }

    /// Builds a set from arbitrary values (order and duplicates are
    /// irrelevant). Panics on an empty list: empty length sets do not
    /// occur for members.
    pub fn from_values(values: &[u64]) -> Self {
        assert!(!values.is_empty(), "length sets are nonempty");
        let mut s = LengthSet::empty();
        for &v in values {
            s.insert(v);
        }
        s
    }

    pub(crate) fn insert(&mut self, l: u64) {
        let block = (l / 64) as usize;
        if self.bits.len() <= block {
            self.bits.resize(block + 1, 0);
        }
        self.bits[block] |= 1 << (l % 64);
    }

    /// `self |= { l + 1 : l in other }` — one DP step.
    pub(crate) fn merge_shifted(&mut self, other: &LengthSet) {
        if other.bits.is_empty() {
            return;
        }
        let needed = other.bits.len() + 1;
        if self.bits.len() < needed {
            self.bits.resize(needed, 0);
        }
        let mut carry = 0u64;
        for (i, &b) in other.bits.iter().enumerate() {
            self.bits[i] |= (b << 1) | carry;
            carry = b >> 63;
        }
        self.bits[other.bits.len()] |= carry;
        self.trim();
    }

    fn trim(&mut self) {
        while self.bits.last() == Some(&0) {
            self.bits.pop();
        }
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn cardinality(&self) -> u64 {
        self.bits.iter().map(|b| b.count_ones() as u64).sum()
    }

    pub fn contains(&self, l: u64) -> bool {
        let block = (l / 64) as usize;
        block < self.bits.len() && self.bits[block] & (1 << (l % 64)) != 0
    }

    /// Smallest length. Panics on an (internal-only) empty set.
    /// (Named like `BTreeSet::first` because `Ord` already claims `min`.)
    pub fn first(&self) -> u64 {
        self.iter().next().expect("length sets are nonempty")
    }

    /// Largest length. Panics on an (internal-only) empty set.
    pub fn last(&self) -> u64 {
        let last = self.bits.len() - 1;
        last as u64 * 64 + 63 - self.bits[last].leading_zeros() as u64
    }

    /// Lengths in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter().enumerate().flat_map(|(i, &block)| {
            let base = i as u64 * 64;
            BitIter { block }.map(move |b| base + b)
        })
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }

    /// The set of distances: differences of consecutive lengths, sorted
    /// and deduplicated. Empty for singletons.
    pub fn distances(&self) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::new();
        let mut prev = None;
        for l in self.iter() {
            if let Some(p) = prev {
                out.push(l - p);
            }
            prev = Some(l);
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

struct BitIter {
    block: u64,
}

impl Iterator for BitIter {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        if self.block == 0 {
            return None;
        }
        let b = self.block.trailing_zeros() as u64;
        self.block &= self.block - 1;
        Some(b)
    }
}

impl Ord for LengthSet {
    /// Lexicographic on the increasing sequence of lengths, so `{0} < {0,1}
    /// < {1}`. Gives set collections a stable, readable order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for LengthSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// One factorization of `element`: exponents over the atoms in increasing
/// atom order, plus the derived element and length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    exponents: Vec<u64>,
    element: u64,
    length: u64,
}

impl Factorization {
    fn new(exponents: Vec<u64>, element: u64) -> Self {
        let length = exponents.iter().sum();
        Factorization { exponents, element, length }
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn element(&self) -> u64 {
        self.element
    }

    pub fn length(&self) -> u64 {
        self.length
    }
}

/// Number of factorizations of `a`, saturating at `u64::MAX`.
///
/// Standard coin-counting DP: processing one atom at a time counts each
/// exponent vector exactly once.
pub fn count_factorizations(h: &NumericalMonoid, a: u64) -> u64 {
    let mut dp = vec![0u64; a as usize + 1];
    dp[0] = 1;
    for &atom in h.atoms() {
        for v in atom as usize..=a as usize {
            dp[v] = dp[v].saturating_add(dp[v - atom as usize]);
        }
    }
    dp[a as usize]
}

/// Every factorization of `a`, sorted lexicographically by exponent vector.
///
/// Refuses with `ExplosionGuard` when the factorization count exceeds
/// [`DEFAULT_FACTORIZATION_GUARD`]; use [`factorizations_with_guard`] to
/// raise the limit deliberately.
pub fn factorizations(h: &NumericalMonoid, a: u64) -> Result<Vec<Factorization>> {
    factorizations_with_guard(h, a, DEFAULT_FACTORIZATION_GUARD)
}

/// [`factorizations`] with an explicit guard.
pub fn factorizations_with_guard(h: &NumericalMonoid, a: u64, guard: u64) -> Result<Vec<Factorization>> {
    if !h.contains(a) {
        return Err(Error::NotAnElement(a));
    }
    let count = count_factorizations(h, a);
    if count > guard {
        return Err(Error::ExplosionGuard { element: a, count, limit: guard });
    }

    // Depth-first search assigning exponents for the largest atoms first;
    // the smallest atom must divide whatever remains.
    let atoms = h.atoms();
    let mut expo = vec![0u64; atoms.len()];
    let mut out: Vec<Vec<u64>> = Vec::with_capacity(count as usize);
    fn dfs(atoms: &[u64], idx: usize, remaining: u64, expo: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if idx == 0 {
            if remaining.is_multiple_of(atoms[0]) {
                expo[0] = remaining / atoms[0];
                out.push(expo.clone());
                expo[0] = 0;
            }
            return;
        }
        for count in 0..=remaining / atoms[idx] {
            expo[idx] = count;
            dfs(atoms, idx - 1, remaining - count * atoms[idx], expo, out);
        }
        expo[idx] = 0;
    }
    dfs(atoms, atoms.len() - 1, a, &mut expo, &mut out);
    out.sort_unstable();
    Ok(out.into_iter().map(|z| Factorization::new(z, a)).collect())
}

/// Visits `(a, L(a))` for every member `a` of `[0, n]` in increasing order.
///
/// Single forward DP pass; only the last `largest_atom + 1` rows are kept.
/// The callback can stop the scan early by returning `ControlFlow::Break`.
pub(crate) fn for_each_length_set<F>(h: &NumericalMonoid, n: u64, mut f: F)
where
    F: FnMut(u64, &LengthSet) -> ControlFlow<()>,
{
    let atoms = h.atoms();
    let window = h.largest_atom() + 1;
    let mut ring: Vec<LengthSet> = vec![LengthSet::empty(); window as usize];
    for v in 0..=n {
        let mut set = LengthSet::empty();
        if v == 0 {
            set.insert(0);
        } else {
            for &atom in atoms.iter().take_while(|&&g| g <= v) {
                let prev = &ring[((v - atom) % window) as usize];
                set.merge_shifted(prev);
            }
        }
        if !set.is_empty() && f(v, &set).is_break() {
            return;
        }
        ring[(v % window) as usize] = set;
    }
}

/// The set of lengths `L(a)`.
pub fn length_set(h: &NumericalMonoid, a: u64) -> Result<LengthSet> {
    if !h.contains(a) {
        return Err(Error::NotAnElement(a));
    }
    let mut found = LengthSet::empty();
    for_each_length_set(h, a, |v, set| {
        if v == a {
            found = set.clone();
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    debug_assert!(!found.is_empty());
    Ok(found)
}

/// `L(a)` for every member `a` of `[0, n]`, in one DP pass.
pub fn length_set_table(h: &NumericalMonoid, n: u64) -> BTreeMap<u64, LengthSet> {
    let mut table = BTreeMap::new();
    for_each_length_set(h, n, |v, set| {
        table.insert(v, set.clone());
        ControlFlow::Continue(())
    });
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn monoid(gens: &[u64]) -> NumericalMonoid {
        NumericalMonoid::from_generators(gens).unwrap()
    }

    fn exponents(h: &NumericalMonoid, a: u64) -> Vec<Vec<u64>> {
        factorizations(h, a).unwrap().iter().map(|f| f.exponents().to_vec()).collect()
    }

    #[test]
    fn length_set_ops() {
        let l = LengthSet::from_values(&[5, 2, 8, 4, 5]);
        assert_eq!(l.to_vec(), vec![2, 4, 5, 8]);
        assert_eq!(l.cardinality(), 4);
        assert_eq!((l.first(), l.last()), (2, 8));
        assert!(l.contains(4) && !l.contains(3));
        assert_eq!(l.distances(), vec![1, 2, 3]);
        assert_eq!(LengthSet::singleton(3).distances(), Vec::<u64>::new());
        assert_eq!(format!("{l:?}"), "{2,4,5,8}");
        // Bitset blocks spanning word boundaries.
        let wide = LengthSet::from_values(&[0, 63, 64, 127, 128, 200]);
        assert_eq!(wide.to_vec(), vec![0, 63, 64, 127, 128, 200]);
        assert_eq!(wide.last(), 200);
    }

    #[test]
    fn length_set_order_is_lexicographic() {
        let a = LengthSet::from_values(&[0]);
        let b = LengthSet::from_values(&[0, 1]);
        let c = LengthSet::from_values(&[1]);
        assert!(a < b && b < c);
        let mut sorted = vec![c.clone(), a.clone(), b.clone()];
        sorted.sort();
        assert_eq!(sorted, vec![a, b, c]);
    }

    #[test]
    fn factorizations_match_oracle() {
        let h = monoid(&[3, 4, 5]);
        assert_eq!(exponents(&h, 11), vec![vec![1, 2, 0], vec![2, 0, 1]]);
        assert_eq!(exponents(&h, 11), lenset_oracle::factorizations(&[3, 4, 5], 11));
        assert_eq!(exponents(&h, 0), vec![vec![0, 0, 0]]);

        let h23 = monoid(&[2, 3]);
        assert_eq!(exponents(&h23, 6), vec![vec![0, 2], vec![3, 0]]);
        assert_eq!(exponents(&h23, 6), lenset_oracle::factorizations(&[2, 3], 6));
    }

    #[test]
    fn factorization_fields_are_consistent() {
        let h = monoid(&[5, 7, 8, 9, 11]);
        for f in factorizations(&h, 21).unwrap() {
            let value: u64 = f.exponents().iter().zip(h.atoms()).map(|(z, a)| z * a).sum();
            assert_eq!(value, f.element());
            assert_eq!(f.element(), 21);
            assert_eq!(f.length(), f.exponents().iter().sum::<u64>());
        }
    }

    #[test]
    fn factorize_rejects_non_elements() {
        let h = monoid(&[3, 4, 5]);
        assert_eq!(factorizations(&h, 2).unwrap_err(), Error::NotAnElement(2));
        assert_eq!(length_set(&h, 1).unwrap_err(), Error::NotAnElement(1));
    }

    #[test]
    fn explosion_guard_trips() {
        let h = monoid(&[2, 3]);
        assert_eq!(count_factorizations(&h, 6), 2);
        let err = factorizations_with_guard(&h, 6, 1).unwrap_err();
        assert_eq!(err, Error::ExplosionGuard { element: 6, count: 2, limit: 1 });
        // The default guard admits everything at desk scale.
        assert!(factorizations(&h, 6).is_ok());
    }

    #[test]
    fn length_sets_match_known_values() {
        assert_eq!(length_set(&monoid(&[3, 4, 5]), 11).unwrap().to_vec(), vec![3]);
        assert_eq!(length_set(&monoid(&[4, 6, 7]), 15).unwrap().to_vec(), vec![3]);
        assert_eq!(length_set(&monoid(&[8, 12, 14, 15, 19]), 35).unwrap().to_vec(), vec![3]);
        assert_eq!(length_set(&monoid(&[2, 3]), 0).unwrap().to_vec(), vec![0]);
        // L(2 * multiplicity) is always {2}: the only way to write it as a
        // sum of atoms is multiplicity + multiplicity.
        for gens in [&[3u64, 4, 5][..], &[5, 7, 9], &[6, 9, 10, 11, 13]] {
            let h = monoid(gens);
            let double = 2 * h.multiplicity();
            assert_eq!(length_set(&h, double).unwrap().to_vec(), vec![2], "{h}");
        }
    }

    #[test]
    fn full_monoid_lengths() {
        let full = monoid(&[1]);
        assert_eq!(length_set(&full, 0).unwrap().to_vec(), vec![0]);
        assert_eq!(length_set(&full, 7).unwrap().to_vec(), vec![7]);
        assert_eq!(exponents(&full, 7), vec![vec![7]]);
    }

    #[test]
    fn table_matches_per_element_results() {
        let h = monoid(&[2, 3]);
        let table = length_set_table(&h, 6);
        let expected: Vec<(u64, Vec<u64>)> = vec![
            (0, vec![0]),
            (2, vec![1]),
            (3, vec![1]),
            (4, vec![2]),
            (5, vec![2]),
            (6, vec![2, 3]),
        ];
        assert_eq!(table.len(), expected.len());
        for (a, lengths) in expected {
            assert_eq!(table[&a].to_vec(), lengths, "at {a}");
            assert_eq!(table[&a], length_set(&h, a).unwrap());
        }
        // Non-members are absent.
        assert!(!table.contains_key(&1));
    }

    proptest! {
        // The DP, the enumerator, and the naive oracle must agree on the
        // set of lengths, for random monoids and every value in range.
        #[test]
        fn dp_equals_enumeration_equals_oracle(
            gens in proptest::collection::vec(2u64..25, 2..5),
            upper in 0u64..90,
        ) {
            prop_assume!(gens.iter().copied().fold(0, gcd) == 1);
            let h = monoid(&gens);
            for a in 0..=upper {
                let dp = length_set(&h, a);
                // Lengths are taken over the atoms: a redundant generator
                // would add shorter factorizations that the monoid's own
                // arithmetic does not have.
                let oracle = lenset_oracle::length_set(h.atoms(), a);
                match dp {
                    Ok(set) => {
                        prop_assert_eq!(&set.to_vec(), &oracle);
                        let from_enum: std::collections::BTreeSet<u64> =
                            factorizations(&h, a).unwrap().iter().map(|f| f.length()).collect();
                        prop_assert_eq!(set.to_vec(), from_enum.into_iter().collect::<Vec<_>>());
                        prop_assert!(set.last() <= a / h.multiplicity());
                    }
                    Err(Error::NotAnElement(_)) => prop_assert!(oracle.is_empty()),
                    Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
                }
            }
        }

        // Exponent vectors come back lexicographically sorted and each one
        // evaluates to the element.
        #[test]
        fn factorizations_sorted_and_valid(
            gens in proptest::collection::vec(2u64..20, 2..5),
            a in 0u64..70,
        ) {
            prop_assume!(gens.iter().copied().fold(0, gcd) == 1);
            let h = monoid(&gens);
            prop_assume!(h.contains(a));
            let fs = factorizations(&h, a).unwrap();
            prop_assert_eq!(fs.len() as u64, count_factorizations(&h, a));
            let mut prev: Option<&[u64]> = None;
            for f in &fs {
                let value: u64 = f.exponents().iter().zip(h.atoms()).map(|(z, g)| z * g).sum();
                prop_assert_eq!(value, a);
                if let Some(p) = prev {
                    prop_assert!(p < f.exponents());
                }
                prev = Some(f.exponents());
            }
        }
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
}
