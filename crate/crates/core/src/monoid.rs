//! Numerical monoids: cofinite additive submonoids of the nonnegative
//! integers, represented by their minimal generating set.

use crate::error::{Error, Result};
use std::fmt;

/// Generators above this are rejected so that a product of two of them
/// always fits in a `u64`.
pub const GENERATOR_CAP: u64 = 1 << 32;

/// A numerical monoid, canonicalized at construction.
///
/// `atoms` is the minimal generating set in strictly increasing order; the
/// Apéry set (least member of each residue class modulo the multiplicity)
/// is precomputed so membership tests are O(1). Both caches are immutable
/// for the lifetime of the value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalMonoid {
    atoms: Vec<u64>,
    apery: Vec<u64>,
    frobenius: i64,
}

impl NumericalMonoid {
    /// Builds the monoid generated by `gens`, reducing to the minimal
    /// generating set.
    ///
    /// The generators must be positive, at most 2^32, and have gcd 1
    /// (otherwise the complement would be infinite). `1` is allowed and
    /// yields the full monoid of nonnegative integers.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        if let Some(&g) = gens.iter().find(|&&g| g > GENERATOR_CAP) {
            return Err(Error::GeneratorTooLarge(g));
        }
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();

        let g = sorted.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NonCoprime(g));
        }
        if sorted[0] == 1 {
            // The full monoid: no gaps, Apéry set {0}.
            return Ok(NumericalMonoid { atoms: vec![1], apery: vec![0], frobenius: -1 });
        }

        let multiplicity = sorted[0];
        let largest = *sorted.last().unwrap();
        // Membership table over [0, multiplicity * largest]. That range
        // always covers the Apéry set: the Frobenius number of a coprime
        // set is below (multiplicity - 1) * (largest - 1).
        let bound = multiplicity
            .checked_mul(largest)
            .ok_or(Error::ArithmeticOverflow("membership scan bound"))?;
        let mut member = vec![false; bound as usize + 1];
        member[0] = true;
        for v in 1..=bound as usize {
            member[v] = sorted
                .iter()
                .take_while(|&&g| g as usize <= v)
                .any(|&g| member[v - g as usize]);
        }

        // A generator is redundant exactly when subtracting some smaller
        // generator leaves a nonzero member, i.e. it is a sum of two or
        // more generators.
        let atoms: Vec<u64> = sorted
            .iter()
            .copied()
            .filter(|&a| !sorted.iter().any(|&g| g < a && member[(a - g) as usize]))
            .collect();

        let mut apery = vec![u64::MAX; multiplicity as usize];
        let mut found = 0usize;
        for v in 0..=bound {
            let slot = &mut apery[(v % multiplicity) as usize];
            if *slot == u64::MAX && member[v as usize] {
                *slot = v;
                found += 1;
                if found == multiplicity as usize {
                    break;
                }
            }
        }
        assert_eq!(found, multiplicity as usize, "Apéry scan bound too small");

        let top = *apery.iter().max().unwrap();
        let frobenius = i64::try_from(top)
            .ok()
            .and_then(|t| t.checked_sub(multiplicity as i64))
            .ok_or(Error::ArithmeticOverflow("frobenius number"))?;

        Ok(NumericalMonoid { atoms, apery, frobenius })
    }

    /// The minimal generating set, strictly increasing.
    pub fn atoms(&self) -> &[u64] {
        &self.atoms
    }

    /// Number of atoms.
    pub fn embedding_dim(&self) -> usize {
        self.atoms.len()
    }

    /// The smallest atom.
    pub fn multiplicity(&self) -> u64 {
        self.atoms[0]
    }

    /// The largest atom.
    pub fn largest_atom(&self) -> u64 {
        *self.atoms.last().unwrap()
    }

    /// The largest integer not in the monoid; -1 for the full monoid.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Least member of each residue class modulo the multiplicity,
    /// indexed by residue. Entry 0 is always 0.
    pub fn apery_set(&self) -> &[u64] {
        &self.apery
    }

    /// Membership test: `a` is a member iff the least member in its
    /// residue class does not exceed it.
    pub fn contains(&self, a: u64) -> bool {
        self.apery[(a % self.multiplicity()) as usize] <= a
    }

    /// All positive integers outside the monoid, sorted ascending. The
    /// largest one is the Frobenius number.
    pub fn gaps(&self) -> Vec<u64> {
        if self.frobenius < 0 {
            return Vec::new();
        }
        (1..=self.frobenius as u64).filter(|&a| !self.contains(a)).collect()
    }

    /// True for the monoid of all nonnegative integers.
    pub fn is_full(&self) -> bool {
        self.atoms[0] == 1
    }
}

impl fmt::Display for NumericalMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ">")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn monoid(gens: &[u64]) -> NumericalMonoid {
        NumericalMonoid::from_generators(gens).unwrap()
    }

    #[test]
    fn reduces_to_minimal_generating_set() {
        let h = monoid(&[3, 4, 5, 6, 7, 8]);
        assert_eq!(h.atoms(), &[3, 4, 5]);
        assert_eq!(h.atoms(), lenset_oracle::min_generating_set(&[3, 4, 5, 6, 7, 8]));
        assert_eq!(h.embedding_dim(), 3);
        assert_eq!(h.multiplicity(), 3);
        // Order and duplicates in the input are irrelevant.
        assert_eq!(monoid(&[8, 3, 6, 4, 3, 7, 5]).atoms(), &[3, 4, 5]);
    }

    #[test]
    fn full_monoid() {
        let h = monoid(&[1]);
        assert_eq!(h.atoms(), &[1]);
        assert_eq!(h.frobenius(), -1);
        assert_eq!(h.apery_set(), &[0]);
        assert!(h.gaps().is_empty());
        assert!(h.is_full());
        assert!(h.contains(0) && h.contains(1) && h.contains(12345));
        // Any generating set containing 1 collapses to the full monoid.
        assert_eq!(monoid(&[1, 5, 9]).atoms(), &[1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(NumericalMonoid::from_generators(&[]), Err(Error::EmptyGenerators));
        assert_eq!(NumericalMonoid::from_generators(&[0, 3]), Err(Error::ZeroGenerator));
        assert_eq!(NumericalMonoid::from_generators(&[4, 6]), Err(Error::NonCoprime(2)));
        assert_eq!(NumericalMonoid::from_generators(&[6]), Err(Error::NonCoprime(6)));
        assert_eq!(
            NumericalMonoid::from_generators(&[3, (1 << 32) + 1]),
            Err(Error::GeneratorTooLarge((1 << 32) + 1))
        );
    }

    #[test]
    fn membership_matches_oracle() {
        for gens in [&[3u64, 4, 5][..], &[2, 3], &[5, 7, 9], &[4, 6, 7], &[6, 9, 10, 11, 13]] {
            let h = monoid(gens);
            let top = (h.frobenius() + 1) as u64 + 2 * h.multiplicity();
            for a in 0..=top {
                assert_eq!(h.contains(a), lenset_oracle::is_member(gens, a), "{h} at {a}");
            }
        }
        assert!(!monoid(&[3, 4, 5]).contains(2));
        assert!(!monoid(&[2, 3]).contains(1));
    }

    #[test]
    fn apery_matches_oracle() {
        assert_eq!(monoid(&[3, 4, 5]).apery_set(), &[0, 4, 5]);
        assert_eq!(monoid(&[2, 3]).apery_set(), &[0, 3]);
        for gens in [&[5u64, 7, 9][..], &[4, 7], &[6, 9, 10, 11, 13], &[8, 12, 14, 15, 19]] {
            assert_eq!(monoid(gens).apery_set(), lenset_oracle::apery_set(gens), "{gens:?}");
        }
    }

    #[test]
    fn gaps_and_frobenius() {
        let h = monoid(&[3, 4, 5]);
        assert_eq!(h.gaps(), vec![1, 2]);
        assert_eq!(h.frobenius(), 2);
        assert_eq!(monoid(&[2, 3]).gaps(), vec![1]);
        for gens in [&[5u64, 7, 9][..], &[4, 7], &[8, 12, 14, 15, 19]] {
            let h = monoid(gens);
            let gaps = h.gaps();
            assert_eq!(gaps, lenset_oracle::gaps(gens), "{gens:?}");
            assert_eq!(*gaps.last().unwrap() as i64, h.frobenius());
        }
    }

    #[test]
    fn construction_is_idempotent() {
        for gens in [&[3u64, 4, 5, 6, 7, 8][..], &[2, 3, 5, 7], &[10, 11, 12, 13, 14, 15]] {
            let h = monoid(gens);
            let again = monoid(h.atoms());
            assert_eq!(h, again);
        }
    }

    proptest! {
        // Random generating sets: canonical atoms must agree with the naive
        // reduction, and membership with the naive search, over the whole
        // interesting range.
        #[test]
        fn canonicalization_matches_oracle(gens in proptest::collection::vec(2u64..40, 1..6)) {
            prop_assume!(gens.iter().copied().fold(0, gcd) == 1);
            let h = monoid(&gens);
            prop_assert_eq!(h.atoms(), lenset_oracle::min_generating_set(&gens));
            let top = (h.frobenius() + 1) as u64 + 2 * h.multiplicity();
            for a in 0..=top {
                prop_assert_eq!(h.contains(a), lenset_oracle::is_member(&gens, a));
            }
            prop_assert_eq!(h.apery_set(), &lenset_oracle::apery_set(&gens)[..]);
        }

        // Each atom must be unreachable from the others.
        #[test]
        fn atoms_are_minimal(gens in proptest::collection::vec(2u64..40, 1..6)) {
            prop_assume!(gens.iter().copied().fold(0, gcd) == 1);
            let h = monoid(&gens);
            for (i, &a) in h.atoms().iter().enumerate() {
                let others: Vec<u64> = h.atoms()
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &g)| g)
                    .collect();
                prop_assert!(others.is_empty() || !lenset_oracle::is_member(&others, a));
            }
        }
    }
}
