//! Naive reference computations for cross-checking `lenset-core`.
//!
//! Everything here is deliberately written the slow, obvious way: plain
//! recursion over generator exponents, no bitsets, no value-indexed tables,
//! no interval coalescing. Test suites compare the fast implementations
//! against these routines on small inputs, so this crate must stay
//! independent of `lenset-core` — it depends on nothing but std.
//!
//! All functions assume desk-scale inputs (elements a few hundred at most)
//! and positive generators.

use std::collections::BTreeSet;

/// Sorts and deduplicates a generator list.
fn normalize(gens: &[u64]) -> Vec<u64> {
    let set: BTreeSet<u64> = gens.iter().copied().collect();
    set.into_iter().collect()
}

/// Does any exponent vector over `gens` sum to `a`?
///
/// Pure recursive search, nondecreasing generator index, no memoization.
pub fn is_member(gens: &[u64], a: u64) -> bool {
    fn search(gens: &[u64], from: usize, remaining: u64) -> bool {
        if remaining == 0 {
            return true;
        }
        for (i, &g) in gens.iter().enumerate().skip(from) {
            if g <= remaining && search(gens, i, remaining - g) {
                return true;
            }
        }
        false
    }
    let gens = normalize(gens);
    search(&gens, 0, a)
}

/// Every exponent vector `z` over the sorted, deduplicated generators with
/// `sum z_i * g_i = a`, sorted lexicographically.
pub fn factorizations(gens: &[u64], a: u64) -> Vec<Vec<u64>> {
    fn recurse(gens: &[u64], idx: usize, remaining: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if idx == gens.len() {
            if remaining == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let g = gens[idx];
        for count in 0..=remaining / g {
            acc.push(count);
            recurse(gens, idx + 1, remaining - count * g, acc, out);
            acc.pop();
        }
        // A trailing zero-exponent suffix is only valid when remaining == 0;
        // the loop above already covered count = 0.
    }
    let gens = normalize(gens);
    let mut out = Vec::new();
    recurse(&gens, 0, a, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The set of factorization lengths of `a`, sorted ascending.
/// Empty exactly when `a` is not a member.
pub fn length_set(gens: &[u64], a: u64) -> Vec<u64> {
    let lengths: BTreeSet<u64> = factorizations(gens, a)
        .iter()
        .map(|z| z.iter().sum())
        .collect();
    lengths.into_iter().collect()
}

/// Successive differences of a strictly increasing list, sorted, deduplicated.
pub fn distances(sorted: &[u64]) -> Vec<u64> {
    let diffs: BTreeSet<u64> = sorted.windows(2).map(|w| w[1] - w[0]).collect();
    diffs.into_iter().collect()
}

/// Union of `distances(length_set(a))` over all members `a <= n`.
pub fn delta_up_to(gens: &[u64], n: u64) -> Vec<u64> {
    let mut out = BTreeSet::new();
    for a in 0..=n {
        out.extend(distances(&length_set(gens, a)));
    }
    out.into_iter().collect()
}

/// Members of `gens`'s monoid that cannot be written as a sum of two or more
/// generators: the minimal generating set, sorted ascending.
pub fn min_generating_set(gens: &[u64]) -> Vec<u64> {
    let gens = normalize(gens);
    gens.iter()
        .copied()
        .filter(|&g| {
            factorizations(&gens, g)
                .iter()
                .all(|z| z.iter().sum::<u64>() < 2)
        })
        .collect()
}

/// Least member in each residue class modulo the smallest generator,
/// indexed by residue. Requires gcd(gens) = 1 so the scan terminates.
pub fn apery_set(gens: &[u64]) -> Vec<u64> {
    let gens = normalize(gens);
    let m = gens[0];
    let mut out = vec![None; m as usize];
    let mut found = 0;
    let mut a = 0u64;
    while found < m as usize {
        let r = (a % m) as usize;
        if out[r].is_none() && is_member(&gens, a) {
            out[r] = Some(a);
            found += 1;
        }
        a += 1;
    }
    out.into_iter().map(Option::unwrap).collect()
}

/// Positive integers outside the monoid, sorted ascending.
pub fn gaps(gens: &[u64]) -> Vec<u64> {
    let gens = normalize(gens);
    let apery = apery_set(&gens);
    let top = *apery.iter().max().unwrap();
    (1..=top).filter(|&a| !is_member(&gens, a)).collect()
}

/// All sums of exactly `k` elements of `set` (with repetition), sorted.
pub fn sumset(set: &[u64], k: u64) -> Vec<u64> {
    fn recurse(set: &[u64], from: usize, left: u64, sum: u64, out: &mut BTreeSet<u64>) {
        if left == 0 {
            out.insert(sum);
            return;
        }
        for (i, &v) in set.iter().enumerate().skip(from) {
            recurse(set, i, left - 1, sum + v, out);
        }
    }
    let set = normalize(set);
    let mut out = BTreeSet::new();
    recurse(&set, 0, k, 0, &mut out);
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_by_hand() {
        // <3,4,5>: 1 and 2 are the only gaps.
        assert!(is_member(&[3, 4, 5], 0));
        assert!(!is_member(&[3, 4, 5], 1));
        assert!(!is_member(&[3, 4, 5], 2));
        for a in 3..=20 {
            assert!(is_member(&[3, 4, 5], a));
        }
        assert!(!is_member(&[2, 3], 1));
    }

    #[test]
    fn factorizations_by_hand() {
        // 11 = 3 + 4 + 4 = 3 + 3 + 5 over <3,4,5>.
        assert_eq!(factorizations(&[3, 4, 5], 11), vec![vec![1, 2, 0], vec![2, 0, 1]]);
        // Input order must not matter.
        assert_eq!(factorizations(&[5, 4, 3], 11), vec![vec![1, 2, 0], vec![2, 0, 1]]);
        assert_eq!(factorizations(&[2, 3], 6), vec![vec![0, 2], vec![3, 0]]);
        assert_eq!(factorizations(&[3, 4, 5], 0), vec![vec![0, 0, 0]]);
        assert!(factorizations(&[3, 4, 5], 2).is_empty());
    }

    #[test]
    fn length_sets_by_hand() {
        assert_eq!(length_set(&[3, 4, 5], 11), vec![3]);
        assert_eq!(length_set(&[2, 3], 6), vec![2, 3]);
        assert_eq!(length_set(&[2, 3], 0), vec![0]);
        assert!(length_set(&[2, 3], 1).is_empty());
    }

    #[test]
    fn apery_and_gaps_by_hand() {
        assert_eq!(apery_set(&[3, 4, 5]), vec![0, 4, 5]);
        assert_eq!(apery_set(&[2, 3]), vec![0, 3]);
        assert_eq!(gaps(&[3, 4, 5]), vec![1, 2]);
        assert_eq!(gaps(&[2, 3]), vec![1]);
    }

    #[test]
    fn min_generating_set_by_hand() {
        assert_eq!(min_generating_set(&[3, 4, 5, 6, 7, 8]), vec![3, 4, 5]);
        assert_eq!(min_generating_set(&[2, 3]), vec![2, 3]);
        assert_eq!(min_generating_set(&[2, 3, 4]), vec![2, 3]);
    }

    #[test]
    fn sumset_by_hand() {
        assert_eq!(sumset(&[2, 3], 4), vec![8, 9, 10, 11, 12]);
        assert_eq!(sumset(&[2, 3], 1), vec![2, 3]);
        assert_eq!(sumset(&[7], 3), vec![21]);
        assert_eq!(sumset(&[2, 3], 0), vec![0]);
    }

    #[test]
    fn distances_by_hand() {
        assert_eq!(distances(&[2, 4, 5, 8]), vec![1, 2, 3]);
        assert!(distances(&[3]).is_empty());
        assert_eq!(delta_up_to(&[2, 3], 5), Vec::<u64>::new());
        assert_eq!(delta_up_to(&[2, 3], 6), vec![1]);
    }
}
