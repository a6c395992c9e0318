//! Parametric families of monoids used as witnesses by the verification
//! layer, plus exhaustive enumeration of monoids with a given number of
//! atoms.

use crate::error::{Error, Result};
use crate::monoid::NumericalMonoid;
use itertools::Itertools;

fn checked_gen(value: Option<u64>) -> Result<u64> {
    value.ok_or(Error::ArithmeticOverflow("family generator"))
}

/// The monoid generated by the `m` values `1 + (m-1)*d, 1 + m*d, ...,
/// 1 + (2m-2)*d` — an arithmetic progression of stride `d` starting just
/// past `(m-1)*d`.
///
/// All `m` generators are atoms: the largest is `1 + (2m-2)d`, one less
/// than twice the smallest, so no generator is a sum of two others. The
/// gcd is 1 because consecutive generators differ by `d` and the first is
/// `1 + (m-1)d`. Requires `m >= 2`, `d >= 1`.
pub fn h_md(m: u64, d: u64) -> Result<NumericalMonoid> {
    assert!(m >= 2 && d >= 1, "h_md requires m >= 2 and d >= 1");
    let gens: Vec<u64> = (m - 1..=2 * m - 2)
        .map(|i| checked_gen(i.checked_mul(d).and_then(|v| v.checked_add(1))))
        .collect::<Result<_>>()?;
    let h = NumericalMonoid::from_generators(&gens)?;
    assert_eq!(h.embedding_dim() as u64, m, "every generator must be an atom");
    Ok(h)
}

/// The monoid generated by the full interval `[m, 2m-1]`. Every integer
/// at least `m` multiplies out, so the gaps are exactly `[1, m-1]`.
/// Requires `m >= 2`.
pub fn interval_monoid(m: u64) -> Result<NumericalMonoid> {
    assert!(m >= 2, "interval_monoid requires m >= 2");
    let top = checked_gen(m.checked_mul(2).map(|v| v - 1))?;
    let gens: Vec<u64> = (m..=top).collect();
    let h = NumericalMonoid::from_generators(&gens)?;
    assert_eq!(h.embedding_dim() as u64, m, "every generator must be an atom");
    Ok(h)
}

/// The monoid generated by `{m} u [m+3, 2m-1] u {2m+1, 2m+2}` — the
/// interval family with a three-value notch cut around `m` and two extra
/// atoms past `2m`. Its 3-fold sumset is covered by the 2- and 4-fold
/// sumsets, which is what makes it useful to the verification layer.
/// Requires `m >= 6` (below that the notch collapses).
pub fn a2_family(m: u64) -> Result<NumericalMonoid> {
    if m < 6 {
        return Err(Error::MTooSmall(m));
    }
    let mut gens = vec![m];
    gens.extend(m + 3..=2 * m - 1);
    gens.push(checked_gen(m.checked_mul(2).and_then(|v| v.checked_add(1)))?);
    gens.push(2 * m + 2);
    let h = NumericalMonoid::from_generators(&gens)?;
    assert_eq!(h.embedding_dim() as u64, m, "every generator must be an atom");
    Ok(h)
}

/// All monoids with exactly `t` atoms, every atom in `[2, max_atom]`, in
/// lexicographic atom-set order. Candidate subsets whose gcd is not 1 or
/// that contain a redundant element are skipped. The stream is lazy, so a
/// consumer can stop at the first interesting monoid.
pub fn enumerate_monoids(t: usize, max_atom: u64) -> impl Iterator<Item = NumericalMonoid> {
    assert!(t >= 2, "a monoid other than the full one has at least 2 atoms");
    (2..=max_atom).combinations(t).filter_map(|candidate| {
        NumericalMonoid::from_generators(&candidate)
            .ok()
            .filter(|h| h.atoms() == candidate)
    })
}
