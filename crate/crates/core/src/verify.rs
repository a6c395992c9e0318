//! Witness-driven verification of the structural claims the rest of the
//! crate is organized around.
//!
//! The central primitive is [`singleton_in_system`]: whether some element
//! of a monoid has the singleton `{k}` as its whole set of lengths. This
//! is decidable exactly — any element with a length-`k` factorization is a
//! sum of `k` atoms, so it lies in the k-fold sumset of the atom set, a
//! finite range that one DP pass covers.
//!
//! On top of that sit the claim checks:
//!
//! * `A1` — interval monoids admit no singleton `{k}` for any `k >= 4`;
//! * `A2` — the notched family's 3-fold sums are covered by its 2- and
//!   4-fold sums, so it admits no singleton `{3}`;
//! * `A3`/`A4`/`A5` — every monoid with 3, 4, or 5 atoms (up to an atom
//!   cap) has an element whose set of lengths is exactly `{3}`;
//! * `DELTA_FAMILY` — the arithmetic-progression family `h_md(m, d)` has
//!   distance set exactly `{d}` within a scan bound;
//! * `INTERSECTION` — the exact intersection of systems of sets of
//!   lengths across a list of monoids, capped at a maximal length.
//!
//! Every check returns a [`VerificationReport`] carrying the swept
//! parameters, per-item witnesses, and — on failure — a counterexample
//! that can be re-checked independently via `lengths::factorizations`.
//! Scans that were too short to decide anything report
//! `insufficient_bound`, which is never conflated with a refutation.

use crate::error::{Error, Result};
use crate::families::{a2_family, enumerate_monoids, h_md, interval_monoid};
use crate::intervals::IntervalSet;
use crate::invariants::{delta_up_to, restricted_system, sumset};
use crate::lengths::{factorizations, for_each_length_set, LengthSet};
use crate::monoid::NumericalMonoid;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{ControlFlow, RangeInclusive};

/// Which claim a report is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ClaimId {
    A1,
    A2,
    A3,
    A4,
    A5,
    #[serde(rename = "DELTA_FAMILY")]
    DeltaFamily,
    #[serde(rename = "INTERSECTION")]
    Intersection,
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClaimId::A1 => "A1",
            ClaimId::A2 => "A2",
            ClaimId::A3 => "A3",
            ClaimId::A4 => "A4",
            ClaimId::A5 => "A5",
            ClaimId::DeltaFamily => "DELTA_FAMILY",
            ClaimId::Intersection => "INTERSECTION",
        };
        f.write_str(s)
    }
}

/// Outcome of a check. A scan that ended without seeing enough data is
/// `InsufficientBound` — explicitly not a refutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyStatus {
    Pass,
    Fail,
    InsufficientBound,
}

impl fmt::Display for VerifyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VerifyStatus::Pass => "pass",
            VerifyStatus::Fail => "fail",
            VerifyStatus::InsufficientBound => "insufficient_bound",
        };
        f.write_str(s)
    }
}

/// One positive data point backing a passing check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct Witness {
    /// Atom set of the monoid involved (empty when the witness is a bare
    /// length set, e.g. a member of an intersection).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub atoms: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lengths: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distances: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_used: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Evidence that a claim is false, re-checkable through
/// `lengths::factorizations` on the recorded element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub atoms: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lengths: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorizations: Option<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distances: Option<Vec<u64>>,
    pub reason: String,
}

/// Outcome of one claim check, possibly composed of sub-checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim_id: ClaimId,
    /// Echo of the swept parameters, stringly typed, sorted by key.
    pub parameters: BTreeMap<String, String>,
    pub status: VerifyStatus,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub ingredients: Vec<VerificationReport>,
}

impl VerificationReport {
    fn new(claim_id: ClaimId) -> Self {
        VerificationReport {
            claim_id,
            parameters: BTreeMap::new(),
            status: VerifyStatus::Pass,
            witnesses: Vec::new(),
            counterexample: None,
            ingredients: Vec::new(),
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    /// Witnesses ordered by (atoms, element, lengths) so identical inputs
    /// serialize identically.
    fn sort_witnesses(&mut self) {
        self.witnesses.sort_by(|a, b| {
            (&a.atoms, a.element, &a.lengths).cmp(&(&b.atoms, b.element, &b.lengths))
        });
    }
}

/// Smallest element whose set of lengths is exactly `{k}`, if any.
///
/// Exhaustive and exact: every element with `k` among its lengths is a sum
/// of `k` atoms, hence in the k-fold sumset, which is scanned completely.
/// `k = 0` always holds with witness 0 (`L(0) = {0}`).
pub fn singleton_in_system(h: &NumericalMonoid, k: u64) -> Option<u64> {
    if k == 0 {
        return Some(0);
    }
    let ka = sumset(h.atoms(), k).expect("k-fold atom sums overflow u64");
    let mut witness = None;
    for_each_length_set(h, ka.last(), |v, set| {
        if ka.contains(v) && set.cardinality() == 1 && set.first() == k {
            witness = Some(v);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    witness
}

fn singleton_counterexample(h: &NumericalMonoid, a: u64, k: u64, claim: &str) -> Counterexample {
    let fs = factorizations(h, a)
        .map(|fs| fs.iter().map(|f| f.exponents().to_vec()).collect())
        .unwrap_or_default();
    Counterexample {
        atoms: h.atoms().to_vec(),
        element: Some(a),
        lengths: Some(vec![k]),
        factorizations: Some(fs),
        distances: None,
        reason: format!("element {a} has set of lengths {{{k}}}, refuting: {claim}"),
    }
}

/// A1: the interval monoid on `[m, 2m-1]` has no element whose set of
/// lengths is a singleton `{k}`, for any `k` in `[4, k_max]`.
pub fn verify_a1(m: u64, k_max: u64) -> Result<VerificationReport> {
    assert!(m >= 2, "interval family needs m >= 2");
    assert!(k_max >= 4, "the claim concerns k >= 4");
    let h = interval_monoid(m)?;
    let mut report = VerificationReport::new(ClaimId::A1)
        .param("m", m)
        .param("k_max", k_max);
    for k in 4..=k_max {
        if let Some(a) = singleton_in_system(&h, k) {
            report.status = VerifyStatus::Fail;
            report.counterexample = Some(singleton_counterexample(
                &h,
                a,
                k,
                "no singleton {k>=4} in an interval monoid",
            ));
            return Ok(report);
        }
    }
    report.witnesses.push(Witness {
        atoms: h.atoms().to_vec(),
        bound_used: Some(sumset(h.atoms(), k_max)?.last()),
        note: Some(format!("no element has a singleton set of lengths {{k}} for k in [4, {k_max}]")),
        ..Witness::default()
    });
    Ok(report)
}

/// A2: for the notched family, the computed 2-, 3-, and 4-fold sumsets
/// match their closed forms, the 3-fold sums sit inside the union of the
/// 2- and 4-fold sums, and no element has set of lengths `{3}`.
pub fn verify_a2(m: u64) -> Result<VerificationReport> {
    let h = a2_family(m)?;
    let atoms = h.atoms().to_vec();
    let mut report = VerificationReport::new(ClaimId::A2).param("m", m);

    let closed_forms: [(u64, IntervalSet); 3] = [
        (2, IntervalSet::from_intervals(&[(2 * m, 2 * m), (2 * m + 3, 4 * m + 4)])),
        (3, IntervalSet::from_intervals(&[(3 * m, 3 * m), (3 * m + 3, 6 * m + 6)])),
        (4, IntervalSet::from_intervals(&[(4 * m, 4 * m), (4 * m + 3, 8 * m + 8)])),
    ];
    let mut computed = BTreeMap::new();
    for (k, expected) in &closed_forms {
        let got = sumset(&atoms, *k)?;
        if got != *expected {
            report.status = VerifyStatus::Fail;
            report.counterexample = Some(Counterexample {
                atoms,
                element: None,
                lengths: None,
                factorizations: None,
                distances: None,
                reason: format!("{k}-fold sums are {got:?}, expected {expected:?}"),
            });
            return Ok(report);
        }
        report.witnesses.push(Witness {
            atoms: atoms.clone(),
            note: Some(format!("{k}-fold sums are exactly {got:?}")),
            ..Witness::default()
        });
        computed.insert(*k, got);
    }

    let cover = computed[&2].union(&computed[&4]);
    if !computed[&3].is_subset_of(&cover) {
        report.status = VerifyStatus::Fail;
        report.counterexample = Some(Counterexample {
            atoms,
            element: None,
            lengths: None,
            factorizations: None,
            distances: None,
            reason: format!(
                "3-fold sums {:?} not contained in 2-fold u 4-fold sums {:?}",
                computed[&3], cover
            ),
        });
        return Ok(report);
    }
    report.witnesses.push(Witness {
        atoms: atoms.clone(),
        note: Some("3-fold sums are contained in the union of 2-fold and 4-fold sums".to_string()),
        ..Witness::default()
    });

    if let Some(a) = singleton_in_system(&h, 3) {
        report.status = VerifyStatus::Fail;
        report.counterexample =
            Some(singleton_counterexample(&h, a, 3, "no singleton {3} in the notched family"));
        return Ok(report);
    }
    report.witnesses.push(Witness {
        atoms,
        note: Some("no element has set of lengths {3}".to_string()),
        ..Witness::default()
    });
    report.sort_witnesses();
    Ok(report)
}

/// Default atom cap for the exhaustive `t`-atom sweeps.
pub fn a345_default_max_atom(t: usize) -> u64 {
    match t {
        3 => 25,
        4 => 20,
        _ => 18,
    }
}

/// A3/A4/A5: every monoid with exactly `t` atoms, all at most `max_atom`,
/// has an element whose set of lengths is exactly `{3}`. Exhaustive over
/// the (finite) enumeration; each monoid contributes its witness element.
pub fn verify_a345(t: usize, max_atom: u64) -> VerificationReport {
    assert!((3..=5).contains(&t), "exhaustive singleton sweeps cover t in [3,5]");
    let claim = match t {
        3 => ClaimId::A3,
        4 => ClaimId::A4,
        _ => ClaimId::A5,
    };
    let monoids: Vec<NumericalMonoid> = enumerate_monoids(t, max_atom).collect();
    let results: Vec<Option<u64>> = monoids
        .par_iter()
        .map(|h| singleton_in_system(h, 3))
        .collect();

    let mut report = VerificationReport::new(claim)
        .param("t", t)
        .param("max_atom", max_atom)
        .param("monoids", monoids.len());
    for (h, found) in monoids.iter().zip(&results) {
        match found {
            Some(a) => report.witnesses.push(Witness {
                atoms: h.atoms().to_vec(),
                element: Some(*a),
                lengths: Some(vec![3]),
                ..Witness::default()
            }),
            None => {
                report.status = VerifyStatus::Fail;
                report.counterexample = Some(Counterexample {
                    atoms: h.atoms().to_vec(),
                    element: None,
                    lengths: None,
                    factorizations: None,
                    distances: None,
                    reason: "no element has set of lengths {3}".to_string(),
                });
                return report;
            }
        }
    }
    report
}

/// DELTA_FAMILY: `h_md(m, d)` has distance set exactly `{d}` for every
/// `(m, d)` in the grid, scanning members up to `bound` (default: twenty
/// times the largest atom, which is comfortably past where the first
/// distances appear).
///
/// A grid point whose scan saw no distances at all is reported as
/// `insufficient_bound`; a scan that saw a distance other than `d` is a
/// genuine refutation and fails.
pub fn verify_delta_family(
    m_range: RangeInclusive<u64>,
    d_range: RangeInclusive<u64>,
    bound: Option<u64>,
) -> Result<VerificationReport> {
    assert!(!m_range.is_empty() && !d_range.is_empty(), "empty parameter grid");
    let grid: Vec<(u64, u64)> = m_range
        .clone()
        .flat_map(|m| d_range.clone().map(move |d| (m, d)))
        .collect();
    let scans: Vec<(u64, u64, Vec<u64>, u64)> = grid
        .par_iter()
        .map(|&(m, d)| -> Result<_> {
            let h = h_md(m, d)?;
            let n = match bound {
                Some(n) => n,
                None => h
                    .largest_atom()
                    .checked_mul(20)
                    .ok_or(Error::ArithmeticOverflow("distance scan bound"))?,
            };
            let delta = delta_up_to(&h, n)?;
            Ok((m, d, delta.distances, n))
        })
        .collect::<Result<_>>()?;

    let mut report = VerificationReport::new(ClaimId::DeltaFamily)
        .param("m_min", m_range.start())
        .param("m_max", m_range.end())
        .param("d_min", d_range.start())
        .param("d_max", d_range.end())
        .param("bound", bound.map_or("auto".to_string(), |n| n.to_string()));
    let mut insufficient = false;
    for (m, d, distances, n) in scans {
        let h = h_md(m, d)?;
        report.witnesses.push(Witness {
            atoms: h.atoms().to_vec(),
            distances: Some(distances.clone()),
            bound_used: Some(n),
            note: Some(format!("m={m} d={d}")),
            ..Witness::default()
        });
        if distances.is_empty() {
            insufficient = true;
        } else if distances != vec![d] {
            report.status = VerifyStatus::Fail;
            report.counterexample = Some(Counterexample {
                atoms: h.atoms().to_vec(),
                element: None,
                lengths: None,
                factorizations: None,
                distances: Some(distances),
                reason: format!("distance set within bound {n} is not {{{d}}}"),
            });
            report.sort_witnesses();
            return Ok(report);
        }
    }
    if insufficient {
        report.status = VerifyStatus::InsufficientBound;
    }
    report.sort_witnesses();
    Ok(report)
}

/// Exact intersection of the systems of sets of lengths of `monoids`,
/// restricted to sets whose largest length is at most `k_max`.
///
/// Sets with two or more lengths are intersected across per-monoid
/// restricted systems; the scan bound must be at least `k_max *
/// largest_atom` so that every element carrying such a set is reached
/// (any element with a length-`k` factorization lies below `k *
/// largest_atom`). Singletons `{k}` are decided independently and exactly
/// by [`singleton_in_system`] on every monoid.
pub fn intersect_systems(
    monoids: &[NumericalMonoid],
    bound: u64,
    k_max: u64,
) -> Result<BTreeSet<LengthSet>> {
    if monoids.is_empty() {
        return Err(Error::EmptyMonoidList);
    }
    if monoids.iter().any(|h| h.embedding_dim() < 2) {
        return Err(Error::HalfFactorialTrivial);
    }
    let widest = monoids.iter().map(|h| h.largest_atom()).max().unwrap();
    let required = k_max
        .checked_mul(widest)
        .ok_or(Error::ArithmeticOverflow("intersection scan bound"))?;
    if bound < required {
        return Err(Error::BoundTooSmall { bound, required });
    }

    let restrict = |h: &NumericalMonoid| -> BTreeSet<LengthSet> {
        restricted_system(h, bound)
            .into_iter()
            .filter(|l| l.cardinality() >= 2 && l.last() <= k_max)
            .collect()
    };
    let mut survivors = restrict(&monoids[0]);
    for h in &monoids[1..] {
        let sys = restrict(h);
        survivors.retain(|l| sys.contains(l));
        if survivors.is_empty() {
            break;
        }
    }

    for k in 0..=k_max {
        if monoids.iter().all(|h| singleton_in_system(h, k).is_some()) {
            survivors.insert(LengthSet::singleton(k));
        }
    }
    Ok(survivors)
}

/// Default cap on the length of sets considered by intersections.
pub const DEFAULT_K_MAX: u64 = 10;
/// Default atom cap for the two-atom exhaustion inside [`verify_all`].
pub const DEFAULT_T2_MAX_ATOM: u64 = 25;

fn intersection_ingredient(
    t: u64,
    monoids: &[NumericalMonoid],
    k_max: u64,
    bound: Option<u64>,
    expected: &BTreeSet<LengthSet>,
) -> Result<VerificationReport> {
    let widest = monoids.iter().map(|h| h.largest_atom()).max().unwrap();
    let n = match bound {
        Some(n) => n,
        None => k_max
            .checked_mul(widest)
            .ok_or(Error::ArithmeticOverflow("intersection scan bound"))?,
    };
    let got = intersect_systems(monoids, n, k_max)?;
    let specs: Vec<String> = monoids
        .iter()
        .map(|h| h.atoms().iter().map(u64::to_string).collect::<Vec<_>>().join(","))
        .collect();
    let mut report = VerificationReport::new(ClaimId::Intersection)
        .param("t", t)
        .param("k_max", k_max)
        .param("bound", n)
        .param("monoids", specs.join(";"));
    for l in &got {
        report.witnesses.push(Witness {
            lengths: Some(l.to_vec()),
            ..Witness::default()
        });
    }
    if &got != expected {
        let expect_str: Vec<String> = expected.iter().map(|l| format!("{l:?}")).collect();
        let got_str: Vec<String> = got.iter().map(|l| format!("{l:?}")).collect();
        report.status = VerifyStatus::Fail;
        report.counterexample = Some(Counterexample {
            atoms: Vec::new(),
            element: None,
            lengths: None,
            factorizations: None,
            distances: None,
            reason: format!(
                "intersection is {} but should be exactly {}",
                got_str.join(" "),
                expect_str.join(" ")
            ),
        });
    }
    Ok(report)
}

/// The headline check, assembled from its ingredients:
///
/// * for each `t` in `[2, 5]`, the witness collection `{h_md(t,1),
///   h_md(t,2), interval_monoid(t)}` intersects to exactly
///   `{{0},{1},{2},{3}}` — the two strides kill every multi-length set,
///   the interval monoid kills `{k}` for `k >= 4`;
/// * for `t = 6`, adding `a2_family(6)` also kills `{3}`, leaving exactly
///   `{{0},{1},{2}}`;
/// * `{3}` really is everywhere: exhaustive A3/A4/A5 sweeps for `t` in
///   `[3, 5]`, and a bounded two-atom exhaustion for `t = 2` that is
///   flagged `extrapolated` — finitely many monoids stand in for
///   infinitely many there.
///
/// The top-level status is the conjunction of the ingredient statuses.
pub fn verify_all(
    k_max: u64,
    t2_max_atom: u64,
    bound: Option<u64>,
) -> Result<VerificationReport> {
    assert!(k_max >= 4, "k_max below 4 cannot distinguish the two displays");
    let mut report = VerificationReport::new(ClaimId::Intersection)
        .param("k_max", k_max)
        .param("t2_max_atom", t2_max_atom)
        .param("bound", bound.map_or("auto".to_string(), |n| n.to_string()));

    let upto3: BTreeSet<LengthSet> = (0..=3).map(LengthSet::singleton).collect();
    let upto2: BTreeSet<LengthSet> = (0..=2).map(LengthSet::singleton).collect();

    for t in 2u64..=5 {
        let monoids = vec![h_md(t, 1)?, h_md(t, 2)?, interval_monoid(t)?];
        report
            .ingredients
            .push(intersection_ingredient(t, &monoids, k_max, bound, &upto3)?);
    }
    let six = vec![h_md(6, 1)?, h_md(6, 2)?, interval_monoid(6)?, a2_family(6)?];
    report
        .ingredients
        .push(intersection_ingredient(6, &six, k_max, bound, &upto2)?);

    // {3} occurs in every monoid with t atoms: exhaustive for t in [3,5],
    // bounded (and so only extrapolated) for t = 2.
    let pairs: Vec<NumericalMonoid> = enumerate_monoids(2, t2_max_atom).collect();
    let found: Vec<Option<u64>> = pairs.par_iter().map(|h| singleton_in_system(h, 3)).collect();
    let mut t2 = VerificationReport::new(ClaimId::Intersection)
        .param("t", 2)
        .param("max_atom", t2_max_atom)
        .param("check", "singleton-3-exhaustion")
        .param("extrapolated", "true")
        .param("monoids", pairs.len());
    for (h, w) in pairs.iter().zip(&found) {
        match w {
            Some(a) => t2.witnesses.push(Witness {
                atoms: h.atoms().to_vec(),
                element: Some(*a),
                lengths: Some(vec![3]),
                ..Witness::default()
            }),
            None => {
                t2.status = VerifyStatus::Fail;
                t2.counterexample = Some(Counterexample {
                    atoms: h.atoms().to_vec(),
                    element: None,
                    lengths: None,
                    factorizations: None,
                    distances: None,
                    reason: "no element has set of lengths {3}".to_string(),
                });
            }
        }
    }
    report.ingredients.push(t2);
    for t in 3..=5 {
        report.ingredients.push(verify_a345(t, a345_default_max_atom(t)));
    }

    report.status = report
        .ingredients
        .iter()
        .map(|r| r.status)
        .max_by_key(|s| match s {
            VerifyStatus::Pass => 0,
            VerifyStatus::InsufficientBound => 1,
            VerifyStatus::Fail => 2,
        })
        .unwrap();
    Ok(report)
}
