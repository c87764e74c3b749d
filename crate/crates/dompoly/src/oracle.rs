//! Exhaustive brute-force enumeration of dominating sets.
//!
//! This module is the independent referee: it represents subsets of the
//! vertices of `C_n` as `n`-bit masks (bit `v-1` ⇔ label `v`) and tests
//! domination with three rotations — a mask dominates exactly when
//! `mask | rotl(mask) | rotr(mask)` covers all `n` bits. It shares nothing
//! with the recurrence, the family construction, or the generating function
//! beyond the plain data containers it returns, so agreement between the two
//! sides certifies both.
//!
//! Work is bounded up front: each call computes how many subsets it would
//! examine (`C(n,i)` for a single cardinality, `2^n` for a full sweep) and
//! refuses cleanly when that exceeds the configured budget.

use thiserror::Error;

use crate::core::VertexSet;
use crate::families::Family;
use crate::recurrence::{Count, DominationPolynomial};

/// Hard bounds on how much enumeration a single oracle call may perform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest cycle order accepted (also capped at 63 so masks fit in
    /// `u64`).
    pub max_n: u32,
    /// Largest number of subsets a single call may examine.
    pub max_subsets: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_n: 24,
            max_subsets: 1 << 32,
        }
    }
}

impl OracleLimits {
    fn effective_max_n(&self) -> u32 {
        self.max_n.min(63)
    }
}

/// Errors from oracle enumeration.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    /// The order is below 3 or beyond the configured maximum.
    #[error("cycle order {n} outside supported range 3..={max_n}")]
    OrderOutOfRange { n: u32, max_n: u32 },
    /// The call would examine more subsets than the budget allows.
    #[error("enumeration would examine {required} subsets, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
}

fn check_order(n: u32, limits: &OracleLimits) -> Result<(), OracleError> {
    let max_n = limits.effective_max_n();
    if n < 3 || n > max_n {
        return Err(OracleError::OrderOutOfRange { n, max_n });
    }
    Ok(())
}

fn check_budget(required: u128, limits: &OracleLimits) -> Result<(), OracleError> {
    if required > u128::from(limits.max_subsets) {
        return Err(OracleError::BudgetExceeded {
            required,
            budget: limits.max_subsets,
        });
    }
    Ok(())
}

/// Binomial coefficient `C(n, k)` — the number of subsets a single-
/// cardinality enumeration examines. Exact in `u128` for `n ≤ 63`.
pub fn subsets_to_examine(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for step in 1..=u128::from(k) {
        result = result * (u128::from(n - k) + step) / step;
    }
    result
}

/// Whether the mask dominates `C_n`: together with its two cyclic rotations
/// it must cover every vertex.
fn mask_dominates(n: u32, mask: u64) -> bool {
    let full = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let left = ((mask << 1) | (mask >> (n - 1))) & full;
    let right = ((mask >> 1) | (mask << (n - 1))) & full;
    mask | left | right == full
}

/// Visits the `i`-subsets of `{1, ..., n}` in lexicographic order of their
/// sorted label sequences, e.g. {1,2}, {1,3}, ..., {2,3}, ...
fn for_each_combination(n: u32, i: u32, mut visit: impl FnMut(&[u32])) {
    if i > n {
        return;
    }
    let mut labels: Vec<u32> = (1..=i).collect();
    loop {
        visit(&labels);
        // Advance the rightmost label that still has room, then reset the
        // suffix to the smallest values above it.
        let i = i as usize;
        let mut pos = i;
        while pos > 0 && labels[pos - 1] == n - (i - pos) as u32 {
            pos -= 1;
        }
        if pos == 0 {
            return;
        }
        labels[pos - 1] += 1;
        for rest in pos..i {
            labels[rest] = labels[rest - 1] + 1;
        }
    }
}

fn labels_to_mask(labels: &[u32]) -> u64 {
    labels.iter().fold(0, |mask, &v| mask | 1 << (v - 1))
}

/// All dominating `i`-sets of `C_n`, found by exhaustive enumeration, in
/// lexicographic order. `i > n` yields the empty family.
pub fn enumerate_dominating(
    n: u32,
    i: u32,
    limits: &OracleLimits,
) -> Result<Family, OracleError> {
    check_order(n, limits)?;
    check_budget(subsets_to_examine(n, i), limits)?;
    let mut members = Vec::new();
    for_each_combination(n, i, |labels| {
        if mask_dominates(n, labels_to_mask(labels)) {
            members.push(VertexSet::from_sorted(n, labels.to_vec()));
        }
    });
    Ok(Family::from_sorted_members(n, i, members))
}

/// The number of dominating `i`-sets of `C_n`, counted without materializing
/// them.
pub fn oracle_count(n: u32, i: u32, limits: &OracleLimits) -> Result<Count, OracleError> {
    check_order(n, limits)?;
    check_budget(subsets_to_examine(n, i), limits)?;
    let mut found: u64 = 0;
    for_each_combination(n, i, |labels| {
        if mask_dominates(n, labels_to_mask(labels)) {
            found += 1;
        }
    });
    Ok(Count::from(found))
}

/// The whole domination polynomial of `C_n` from one sweep over all `2^n`
/// masks, tallying dominating masks by popcount.
pub fn oracle_polynomial(
    n: u32,
    limits: &OracleLimits,
) -> Result<DominationPolynomial, OracleError> {
    check_order(n, limits)?;
    check_budget(1u128 << n, limits)?;
    let mut tallies = vec![0u64; (n + 1) as usize];
    for mask in 0..(1u64 << n) {
        if mask_dominates(n, mask) {
            tallies[mask.count_ones() as usize] += 1;
        }
    }
    Ok(DominationPolynomial::from_coefficients(
        n,
        tallies.into_iter().map(Count::from).collect(),
    ))
}
