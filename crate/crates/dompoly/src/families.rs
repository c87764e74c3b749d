//! Explicit construction of the dominating-set families of a cycle.
//!
//! `family(n, i)` is the set of all dominating sets of `C_n` with exactly
//! `i` vertices. This module materializes those families by extension: every
//! dominating `i`-set of `C_n` arises from a dominating `(i-1)`-set of one of
//! the three next-smaller cycles by appending a single vertex near the seam
//! (`n-2`, `n-1`, or `n`). Which vertex to append is decided per parent:
//!
//! - a parent over `C_{n-1}` always gains `n`;
//! - a parent over `C_{n-2}` gains `n-1`, except that a parent that does not
//!   dominate `C_{n-1}` yet contains `n-2` or `n-3` gains `n`;
//! - a parent over `C_{n-3}` gains `n-2` when it contains vertex `1`,
//!   otherwise `n-1` when it contains vertex `2`, otherwise `n`.
//!
//! The three streams are pairwise disjoint, so their sizes add up exactly as
//! the three-term count recurrence demands. Four boundary shapes short-cut
//! the recursion: at the domination number with `3 | n` the family is the
//! three arithmetic progressions of step 3; one above the window floor with
//! `n ≡ 2 (mod 3)` the progression sets reappear shifted; at `i = n` the
//! family is the full vertex set; at `i = n-1` it is all `(n-1)`-subsets.
//! Which shape applies is read off from which parent families are empty.
//!
//! None of this is taken on faith: after every level of the recursion the
//! members are sorted and checked — distinct, each one passes the domination
//! predicate, and the count equals the recurrence table's entry. A mismatch
//! aborts construction with a [`FamilyReport`] describing the failing level.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::rc::Rc;

use num_traits::Zero;
use thiserror::Error;

use crate::core::{gamma_cycle, is_dominating, labels_dominate, VertexSet};
use crate::recurrence::{build_table, count, Count, DominationTable};

/// Refuse to materialize any family level larger than this many members
/// unless the caller overrides the guard.
pub const DEFAULT_MEMBER_GUARD: u64 = 1_000_000;

/// Options for family construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Largest family the builder will materialize; `None` disables the
    /// guard entirely.
    pub max_members: Option<u64>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            max_members: Some(DEFAULT_MEMBER_GUARD),
        }
    }
}

/// Errors from family construction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    /// The cycle order is below the minimum the operation supports.
    #[error("cycle order {n} is too small (need at least {min})")]
    OrderTooSmall { n: u32, min: u32 },
    /// Base families exist only for the three base rows.
    #[error("base families are defined only for cycle orders 1..=3, got {n}")]
    NotABaseOrder { n: u32 },
    /// The family (or one of its recursive parents) is larger than the
    /// configured guard allows.
    #[error(
        "family for n={n} i={i} has {expected} members, above the guard of {limit}; \
         raise or disable the guard to build it"
    )]
    SizeGuard {
        n: u32,
        i: u32,
        expected: Count,
        limit: u64,
    },
    /// A constructed level failed validation against the count table or the
    /// domination predicate. The report describes the failing level, which
    /// may be an intermediate one rather than the requested family.
    #[error("family construction assertion failed: {report}")]
    ConstructionMismatch { report: FamilyReport },
}

/// The family of all dominating `i`-sets of `C_n`, lexicographically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    n: u32,
    i: u32,
    members: Vec<VertexSet>,
}

impl Family {
    /// Wraps members that are already sorted, distinct, and of the right
    /// order and cardinality.
    pub(crate) fn from_sorted_members(n: u32, i: u32, members: Vec<VertexSet>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members
            .iter()
            .all(|m| m.order() == n && m.len() == i as usize));
        Self { n, i, members }
    }

    /// Order of the ambient cycle.
    pub fn order(&self) -> u32 {
        self.n
    }

    /// Cardinality of every member.
    pub fn cardinality(&self) -> u32 {
        self.i
    }

    /// The members, lexicographically sorted and distinct.
    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// True when the family has no members.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether rotating every member by one position lands back in the
    /// family. Rotation is an automorphism of the cycle, so any family that
    /// truly contains *all* dominating `i`-sets is closed under it.
    pub fn is_rotation_closed(&self) -> bool {
        let index: HashSet<&VertexSet> = self.members.iter().collect();
        self.members.iter().all(|m| index.contains(&m.rotate(1)))
    }
}

/// Outcome of validating a constructed family against the count table and
/// the domination predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    /// Order of the cycle whose family was validated.
    pub n: u32,
    /// Cardinality of the family's members.
    pub i: u32,
    /// Distinct members actually constructed.
    pub constructed_count: Count,
    /// The count table's entry for `(n, i)`.
    pub expected_count: Count,
    /// Every constructed member passes the domination predicate.
    pub all_dominating: bool,
    /// No member was produced twice.
    pub all_distinct: bool,
    /// The family is closed under rotation by one position.
    pub rotation_closed: bool,
}

impl FamilyReport {
    /// True exactly when the construction is certified: the distinct member
    /// count matches the table and every check passed.
    pub fn passed(&self) -> bool {
        self.constructed_count == self.expected_count
            && self.all_dominating
            && self.all_distinct
            && self.rotation_closed
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} i={}: constructed={} expected={} all_dominating={} all_distinct={} \
             rotation_closed={} => {}",
            self.n,
            self.i,
            self.constructed_count,
            self.expected_count,
            self.all_dominating,
            self.all_distinct,
            self.rotation_closed,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// The hardcoded families for the three base rows: all `i`-subsets, matching
/// the base rows of the count table.
fn base_label_sets(n: u32, i: u32) -> &'static [&'static [u32]] {
    match (n, i) {
        (1, 1) => &[&[1]],
        (2, 1) => &[&[1], &[2]],
        (2, 2) => &[&[1, 2]],
        (3, 1) => &[&[1], &[2], &[3]],
        (3, 2) => &[&[1, 2], &[1, 3], &[2, 3]],
        (3, 3) => &[&[1, 2, 3]],
        _ => unreachable!("base family ({n}, {i}) requested outside the window"),
    }
}

/// The family of dominating `i`-sets of one of the three base cycles.
/// Rejects `n = 0` and `n > 3`; out-of-window `i` yields the empty family.
pub fn base_family(n: u32, i: u32) -> Result<Family, FamilyError> {
    if n < 1 {
        return Err(FamilyError::OrderTooSmall { n, min: 1 });
    }
    if n > 3 {
        return Err(FamilyError::NotABaseOrder { n });
    }
    if i < gamma_cycle(n) || i > n {
        return Ok(Family {
            n,
            i,
            members: Vec::new(),
        });
    }
    let members = base_label_sets(n, i)
        .iter()
        .map(|labels| VertexSet::from_sorted(n, labels.to_vec()))
        .collect();
    Ok(Family { n, i, members })
}

/// The three arithmetic progressions `{1,4,…,n-2}`, `{2,5,…,n-1}`,
/// `{3,6,…,n}` — the only dominating sets of `C_n` at the domination number
/// when `3 | n`.
fn progression_sets(n: u32) -> Vec<VertexSet> {
    debug_assert!(n.is_multiple_of(3));
    (0..3)
        .map(|offset| {
            let labels = (0..n / 3).map(|step| 3 * step + 1 + offset).collect();
            VertexSet::from_sorted(n, labels)
        })
        .collect()
}

/// The seam vertex gained by a parent from two cycles back: `n-1`, unless
/// the parent fails to dominate the in-between cycle while holding `n-2` or
/// `n-3`, in which case the far corner `n` is the one that patches the seam.
fn extend_from_two_back(parent: &VertexSet, n: u32) -> VertexSet {
    let covers_next = labels_dominate(n - 1, parent.labels());
    let added = if !covers_next && (parent.contains(n - 2) || parent.contains(n - 3)) {
        n
    } else {
        n - 1
    };
    parent.extended(n, added)
}

/// The seam vertex gained by a parent from three cycles back: `n-2` when the
/// parent already covers the low seam through vertex 1, else `n-1` when it
/// does so through vertex 2, else `n`.
fn extend_by_trichotomy(parent: &VertexSet, n: u32) -> VertexSet {
    let added = if parent.contains(1) {
        n - 2
    } else if parent.contains(2) {
        n - 1
    } else {
        n
    };
    parent.extended(n, added)
}

/// Memoizing builder: one entry per `(order, cardinality)` level, shared by
/// the up-to-three recursive parents of every level above it.
struct Builder<'t> {
    table: &'t DominationTable,
    memo: HashMap<(u32, u32), Rc<Vec<VertexSet>>>,
    limit: Option<u64>,
}

impl Builder<'_> {
    fn level(&mut self, n: u32, i: u32) -> Result<Rc<Vec<VertexSet>>, FamilyError> {
        if let Some(hit) = self.memo.get(&(n, i)) {
            return Ok(Rc::clone(hit));
        }
        let members = Rc::new(self.construct(n, i)?);
        self.memo.insert((n, i), Rc::clone(&members));
        Ok(members)
    }

    fn construct(&mut self, n: u32, i: u32) -> Result<Vec<VertexSet>, FamilyError> {
        if i < gamma_cycle(n) || i > n {
            return Ok(Vec::new());
        }
        let expected = self.table.count(n, i);
        if let Some(limit) = self.limit {
            if expected > Count::from(limit) {
                return Err(FamilyError::SizeGuard {
                    n,
                    i,
                    expected,
                    limit,
                });
            }
        }
        if n <= 3 {
            // The base families are the axioms of the recursion; everything
            // built on top of them is validated below.
            return Ok(base_label_sets(n, i)
                .iter()
                .map(|labels| VertexSet::from_sorted(n, labels.to_vec()))
                .collect());
        }
        let parents_empty = (
            self.table.count(n - 1, i - 1).is_zero(),
            self.table.count(n - 2, i - 1).is_zero(),
            self.table.count(n - 3, i - 1).is_zero(),
        );
        let mut members = match parents_empty {
            // Only the smallest parent level is inhabited: `3 | n` at the
            // domination number, where the three progressions stand alone.
            (true, true, false) => {
                debug_assert!(n.is_multiple_of(3) && i == n / 3);
                progression_sets(n)
            }
            // Only the largest parent level is inhabited: `i = n`.
            (false, true, true) => {
                debug_assert!(i == n);
                vec![VertexSet::full(n)]
            }
            // The largest parent level alone is empty: `n ≡ 2 (mod 3)` at
            // the domination number. The progressions of the cycle two back
            // reappear with their seam patched, plus one extension of every
            // member three cycles back.
            (true, false, false) => {
                debug_assert!(n % 3 == 2 && i == gamma_cycle(n));
                let mut members: Vec<VertexSet> = progression_sets(n - 2)
                    .iter()
                    .map(|p| extend_from_two_back(p, n))
                    .collect();
                let third = self.level(n - 3, i - 1)?;
                members.extend(third.iter().map(|p| extend_by_trichotomy(p, n)));
                members
            }
            // The smallest parent level alone is empty: `i = n - 1`, all
            // subsets missing a single vertex.
            (false, false, true) => {
                debug_assert!(i == n - 1);
                (1..=n)
                    .map(|skip| {
                        VertexSet::from_sorted(n, (1..=n).filter(|&v| v != skip).collect())
                    })
                    .collect()
            }
            // Interior of the window: all three extension streams.
            (false, false, false) => {
                let first = self.level(n - 1, i - 1)?;
                let second = self.level(n - 2, i - 1)?;
                let third = self.level(n - 3, i - 1)?;
                let mut members =
                    Vec::with_capacity(first.len() + second.len() + third.len());
                members.extend(first.iter().map(|p| p.extended(n, n)));
                members.extend(second.iter().map(|p| extend_from_two_back(p, n)));
                members.extend(third.iter().map(|p| extend_by_trichotomy(p, n)));
                members
            }
            pattern => unreachable!(
                "parent emptiness pattern {pattern:?} cannot occur inside the window \
                 (n={n}, i={i})"
            ),
        };
        self.validate(n, i, &mut members, expected)?;
        Ok(members)
    }

    /// Sorts a constructed level and certifies it: members distinct, each
    /// one dominating, and exactly as many as the count table promises.
    fn validate(
        &self,
        n: u32,
        i: u32,
        members: &mut [VertexSet],
        expected: Count,
    ) -> Result<(), FamilyError> {
        members.sort_unstable();
        let all_distinct = members.windows(2).all(|w| w[0] < w[1]);
        let all_dominating = members.iter().all(|m| labels_dominate(n, m.labels()));
        if all_distinct && all_dominating && Count::from(members.len() as u64) == expected {
            return Ok(());
        }
        let mut distinct = members.to_vec();
        distinct.dedup();
        let family = Family {
            n,
            i,
            members: distinct,
        };
        let report = FamilyReport {
            n,
            i,
            constructed_count: Count::from(family.len() as u64),
            expected_count: expected,
            all_dominating,
            all_distinct,
            rotation_closed: family.is_rotation_closed(),
        };
        Err(FamilyError::ConstructionMismatch { report })
    }
}

/// Builds the family of dominating `i`-sets of `C_n` under the given
/// options. Out-of-window `(n, i)` yields the empty family; `n = 0` is
/// rejected.
pub fn build_family_with(n: u32, i: u32, options: &BuildOptions) -> Result<Family, FamilyError> {
    if n < 1 {
        return Err(FamilyError::OrderTooSmall { n, min: 1 });
    }
    if i < gamma_cycle(n) || i > n {
        return Ok(Family {
            n,
            i,
            members: Vec::new(),
        });
    }
    let table = build_table(n).expect("n >= 1");
    let mut builder = Builder {
        table: &table,
        memo: HashMap::new(),
        limit: options.max_members,
    };
    let members = builder.level(n, i)?;
    drop(builder);
    let members = Rc::try_unwrap(members).unwrap_or_else(|shared| shared.as_ref().clone());
    Ok(Family { n, i, members })
}

/// Builds the family of dominating `i`-sets of `C_n` under the default
/// size guard of [`DEFAULT_MEMBER_GUARD`] members.
pub fn build_family(n: u32, i: u32) -> Result<Family, FamilyError> {
    build_family_with(n, i, &BuildOptions::default())
}

/// Builds the family for `(n, i)` and reports every validation check:
/// member count against the table, the domination predicate on every
/// member, distinctness, and closure under rotation.
///
/// Validation failures come back as a failing report (possibly describing
/// an intermediate recursion level), not as an error; only the size guard
/// and out-of-range orders are errors.
pub fn verify_family_with(
    n: u32,
    i: u32,
    options: &BuildOptions,
) -> Result<FamilyReport, FamilyError> {
    if n < 3 {
        return Err(FamilyError::OrderTooSmall { n, min: 3 });
    }
    match build_family_with(n, i, options) {
        Ok(family) => Ok(FamilyReport {
            n,
            i,
            constructed_count: Count::from(family.len() as u64),
            expected_count: count(n, i),
            all_dominating: family
                .members()
                .iter()
                .all(|m| is_dominating(m).expect("orders here are at least 3")),
            all_distinct: family.members().windows(2).all(|w| w[0] < w[1]),
            rotation_closed: family.is_rotation_closed(),
        }),
        Err(FamilyError::ConstructionMismatch { report }) => Ok(report),
        Err(other) => Err(other),
    }
}

/// [`verify_family_with`] under the default size guard.
pub fn verify_family(n: u32, i: u32) -> Result<FamilyReport, FamilyError> {
    verify_family_with(n, i, &BuildOptions::default())
}
