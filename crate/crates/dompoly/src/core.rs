//! Vertex sets of a cycle and the domination predicate.
//!
//! Everything downstream — the recurrence, the family construction, the
//! brute-force oracle — agrees on the conventions fixed here: vertices of
//! `C_n` are labeled `1..=n`, label `v` is adjacent to `v-1` and `v+1` with
//! wraparound, and a [`VertexSet`] keeps its labels strictly increasing so
//! that equal sets compare equal and families sort deterministically.

use std::fmt;

use thiserror::Error;

/// Errors from constructing or querying vertex sets.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoreError {
    /// The cycle order is below the minimum the operation supports.
    #[error("cycle order {n} is too small (need at least {min})")]
    OrderTooSmall { n: u32, min: u32 },
    /// A label lies outside `1..=n`.
    #[error("label {label} is outside 1..={n}")]
    LabelOutOfRange { label: u32, n: u32 },
    /// The same label was given twice.
    #[error("duplicate label {label}")]
    DuplicateLabel { label: u32 },
}

/// A subset of the vertices of `C_n`, in canonical form.
///
/// Labels are 1-based and stored strictly increasing. The set remembers the
/// order `n` of its ambient cycle, so rotation and the domination predicate
/// need no extra arguments.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    n: u32,
    labels: Vec<u32>,
}

impl VertexSet {
    /// Builds a set over `C_n` from labels in any order.
    ///
    /// Rejects `n = 0`, labels outside `1..=n`, and duplicates.
    pub fn new(n: u32, labels: impl IntoIterator<Item = u32>) -> Result<Self, CoreError> {
        if n < 1 {
            return Err(CoreError::OrderTooSmall { n, min: 1 });
        }
        let mut labels: Vec<u32> = labels.into_iter().collect();
        labels.sort_unstable();
        for pair in labels.windows(2) {
            if pair[0] == pair[1] {
                return Err(CoreError::DuplicateLabel { label: pair[0] });
            }
        }
        if let Some(&label) = labels.iter().find(|&&l| l < 1 || l > n) {
            return Err(CoreError::LabelOutOfRange { label, n });
        }
        Ok(Self { n, labels })
    }

    /// Builds a set from labels that are already strictly increasing and in
    /// range. Used on hot paths where the invariant is guaranteed.
    pub(crate) fn from_sorted(n: u32, labels: Vec<u32>) -> Self {
        debug_assert!(n >= 1);
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(labels.iter().all(|&l| 1 <= l && l <= n));
        Self { n, labels }
    }

    /// The full vertex set `{1, ..., n}`.
    pub fn full(n: u32) -> Self {
        Self::from_sorted(n, (1..=n).collect())
    }

    /// Order of the ambient cycle.
    pub fn order(&self) -> u32 {
        self.n
    }

    /// The labels, strictly increasing.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Number of vertices in the set.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// True when the set has no vertices.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Membership test.
    pub fn contains(&self, label: u32) -> bool {
        self.labels.binary_search(&label).is_ok()
    }

    /// The set rotated by `k` positions: each label `v` maps to
    /// `((v - 1 + k) mod n) + 1`. Negative `k` rotates backwards.
    pub fn rotate(&self, k: i64) -> VertexSet {
        let n = i64::from(self.n);
        let shift = k.rem_euclid(n);
        let mut labels: Vec<u32> = self
            .labels
            .iter()
            .map(|&v| ((i64::from(v) - 1 + shift).rem_euclid(n) + 1) as u32)
            .collect();
        labels.sort_unstable();
        Self::from_sorted(self.n, labels)
    }

    /// Reinterprets the set inside the larger cycle `C_new_n` and appends one
    /// new label. The added label must exceed every existing one, which holds
    /// for all the family-extension rules (they add `n-2`, `n-1`, or `n` to a
    /// set drawn from a cycle of order at most `n-3`... or `n-1`).
    pub(crate) fn extended(&self, new_n: u32, added: u32) -> VertexSet {
        debug_assert!(new_n >= self.n && added <= new_n);
        debug_assert!(self.labels.last().is_none_or(|&last| added > last));
        let mut labels = Vec::with_capacity(self.labels.len() + 1);
        labels.extend_from_slice(&self.labels);
        labels.push(added);
        Self::from_sorted(new_n, labels)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet(n={}, {self})", self.n)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, label) in self.labels.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{label}")?;
        }
        write!(f, "}}")
    }
}

/// Domination number of the cycle: `γ(C_n) = ⌈n/3⌉`.
///
/// Defined for `n ≥ 1`; every dominating set of `C_n` has at least this many
/// vertices, and no `i`-set with `i < γ(C_n)` dominates.
pub fn gamma_cycle(n: u32) -> u32 {
    n.div_ceil(3)
}

/// Whether the set dominates its ambient cycle.
///
/// Requires order at least 3 (smaller "cycles" are not simple graphs; the
/// count table handles them as formal base rows only).
pub fn is_dominating(set: &VertexSet) -> Result<bool, CoreError> {
    if set.order() < 3 {
        return Err(CoreError::OrderTooSmall {
            n: set.order(),
            min: 3,
        });
    }
    Ok(labels_dominate(set.order(), set.labels()))
}

/// Slice-level domination check shared by the family builder, which probes
/// whether a label set also dominates a smaller cycle than its ambient one.
/// Requires `n ≥ 3` and all labels in `1..=n`.
pub(crate) fn labels_dominate(n: u32, labels: &[u32]) -> bool {
    debug_assert!(n >= 3);
    debug_assert!(labels.iter().all(|&l| 1 <= l && l <= n));
    let n = n as usize;
    let mut in_set = vec![false; n + 1];
    for &label in labels {
        in_set[label as usize] = true;
    }
    (1..=n).all(|v| {
        let prev = if v == 1 { n } else { v - 1 };
        let next = if v == n { 1 } else { v + 1 };
        in_set[v] || in_set[prev] || in_set[next]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn vs(n: u32, labels: &[u32]) -> VertexSet {
        VertexSet::new(n, labels.iter().copied()).unwrap()
    }

    #[test]
    fn canonical_form_sorts_labels() {
        let set = vs(9, &[7, 2, 5]);
        assert_eq!(set.labels(), &[2, 5, 7]);
        assert_eq!(set.to_string(), "{2,5,7}");
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(
            VertexSet::new(0, [1]).unwrap_err(),
            CoreError::OrderTooSmall { n: 0, min: 1 }
        );
        assert_eq!(
            VertexSet::new(4, [5]).unwrap_err(),
            CoreError::LabelOutOfRange { label: 5, n: 4 }
        );
        assert_eq!(
            VertexSet::new(4, [0]).unwrap_err(),
            CoreError::LabelOutOfRange { label: 0, n: 4 }
        );
        assert_eq!(
            VertexSet::new(4, [2, 2]).unwrap_err(),
            CoreError::DuplicateLabel { label: 2 }
        );
    }

    #[test]
    fn domination_examples() {
        assert!(is_dominating(&vs(3, &[2])).unwrap());
        assert!(is_dominating(&vs(5, &[1, 3])).unwrap());
        assert!(!is_dominating(&vs(6, &[1, 2])).unwrap());
        assert!(is_dominating(&vs(6, &[1, 4])).unwrap());
        assert!(!is_dominating(&vs(7, &[3, 4])).unwrap());
        assert!(is_dominating(&VertexSet::full(3)).unwrap());
        assert!(!is_dominating(&vs(4, &[1])).unwrap());
    }

    #[test]
    fn domination_rejects_small_orders() {
        assert_eq!(
            is_dominating(&vs(2, &[1])).unwrap_err(),
            CoreError::OrderTooSmall { n: 2, min: 3 }
        );
        assert_eq!(
            is_dominating(&vs(1, &[1])).unwrap_err(),
            CoreError::OrderTooSmall { n: 1, min: 3 }
        );
    }

    #[test]
    fn empty_set_never_dominates() {
        for n in 3..=10 {
            assert!(!is_dominating(&vs(n, &[])).unwrap());
        }
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma_cycle(3), 1);
        assert_eq!(gamma_cycle(10), 4);
        assert_eq!(gamma_cycle(16), 6);
        assert_eq!(gamma_cycle(1), 1);
        assert_eq!(gamma_cycle(2), 1);
        for n in 1..200 {
            assert_eq!(gamma_cycle(n), n.div_ceil(3));
        }
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(vs(6, &[1, 4]).rotate(1), vs(6, &[2, 5]));
        assert_eq!(vs(5, &[4, 5]).rotate(2), vs(5, &[1, 2]));
        assert_eq!(vs(7, &[1, 4, 7]).rotate(0), vs(7, &[1, 4, 7]));
        assert_eq!(vs(6, &[2, 5]).rotate(-1), vs(6, &[1, 4]));
        assert_eq!(vs(6, &[1, 4]).rotate(13), vs(6, &[2, 5]));
    }

    /// A set dominates a cycle of order at least 3 exactly when every cyclic
    /// gap between consecutive members is at most 3. Independent restatement
    /// of the predicate, used to cross-check it.
    fn max_cyclic_gap(n: u32, labels: &[u32]) -> u32 {
        if labels.is_empty() {
            return u32::MAX;
        }
        let mut max = 0;
        for (idx, &label) in labels.iter().enumerate() {
            let next = labels[(idx + 1) % labels.len()];
            let gap = if next > label { next - label } else { next + n - label };
            max = max.max(gap);
        }
        // A singleton's "gap to itself" is n, matching the rule: one vertex
        // dominates C_n exactly when n ≤ 3.
        max
    }

    #[test]
    fn predicate_matches_gap_rule_exhaustively() {
        for n in 3u32..=13 {
            for mask in 0u32..(1 << n) {
                let labels: Vec<u32> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
                let expected = !labels.is_empty() && max_cyclic_gap(n, &labels) <= 3;
                let set = VertexSet::from_sorted(n, labels);
                assert_eq!(is_dominating(&set).unwrap(), expected, "n={n} set={set}");
            }
        }
    }

    fn arb_set() -> impl Strategy<Value = VertexSet> {
        (3u32..=16).prop_flat_map(|n| {
            proptest::collection::btree_set(1..=n, 0..=(n as usize))
                .prop_map(move |labels| VertexSet::new(n, labels).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rotation_preserves_domination(set in arb_set(), k in -40i64..40) {
            let rotated = set.rotate(k);
            prop_assert_eq!(rotated.len(), set.len());
            prop_assert_eq!(
                is_dominating(&rotated).unwrap(),
                is_dominating(&set).unwrap()
            );
        }

        #[test]
        fn rotation_by_order_is_identity(set in arb_set()) {
            prop_assert_eq!(set.rotate(i64::from(set.order())), set.clone());
            prop_assert_eq!(set.rotate(0), set);
        }

        #[test]
        fn supersets_of_dominating_sets_dominate(
            (n, seed) in (3u32..=16).prop_flat_map(|n| {
                (Just(n), proptest::collection::btree_set(1..=n, 0..=(n as usize)))
            }),
            pick in 0usize..64,
        ) {
            // Start from a set that is dominating by construction: every
            // third label keeps all cyclic gaps at 3 or less, and extra
            // labels only shrink gaps.
            let mut labels: Vec<u32> = (1..=n).filter(|l| l % 3 == 1).chain(seed).collect();
            labels.sort_unstable();
            labels.dedup();
            let set = VertexSet::new(n, labels.clone()).unwrap();
            prop_assert!(is_dominating(&set).unwrap());

            let missing: Vec<u32> = (1..=n).filter(|l| !labels.contains(l)).collect();
            prop_assume!(!missing.is_empty());
            labels.push(missing[pick % missing.len()]);
            let bigger = VertexSet::new(n, labels).unwrap();
            prop_assert!(is_dominating(&bigger).unwrap());
        }

        #[test]
        fn sets_below_gamma_never_dominate(set in arb_set()) {
            prop_assume!((set.len() as u32) < gamma_cycle(set.order()));
            prop_assert!(!is_dominating(&set).unwrap());
        }
    }
}
