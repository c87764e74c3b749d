//! Exact domination counts for cycle graphs.
//!
//! The cycle `C_n` has vertices `1..=n` with `v` adjacent to `v±1` (mod `n`).
//! A vertex set `S` *dominates* `C_n` when every vertex is in `S` or adjacent
//! to a member of `S`. Writing `d(C_n, i)` for the number of dominating sets
//! of cardinality `i`, this crate computes:
//!
//! * the full table of counts `d(C_n, i)` via the three-term recurrence
//!   `d(C_n, i) = d(C_{n-1}, i-1) + d(C_{n-2}, i-1) + d(C_{n-3}, i-1)`
//!   ([`recurrence`]),
//! * the domination polynomial `D(C_n, x) = Σ_i d(C_n, i) x^i`
//!   ([`recurrence::polynomial`]),
//! * the dominating-set families themselves, built constructively by
//!   extending the families of the three next-smaller cycles ([`families`]),
//! * the bivariate generating function `Σ_{n≥4} Σ_i d(C_n, i) u^n v^i` as a
//!   closed-form rational series ([`genfunc`]),
//! * closed-form identities satisfied by the counts, each checked against
//!   the table with counterexamples reported ([`identities`]),
//! * an independent brute-force oracle that enumerates subsets as bitmasks
//!   and never consults the recurrence ([`oracle`]).
//!
//! Counts are arbitrary-precision ([`Count`] is `num_bigint::BigUint`): the
//! total number of dominating sets grows like `1.84^n`, which leaves `u64`
//! by `n = 94`.
//!
//! ```
//! use dompoly::recurrence;
//!
//! let table = recurrence::build_table(7).unwrap();
//! assert_eq!(table.count(7, 3), 14u32.into());
//! assert_eq!(recurrence::polynomial(3).unwrap().to_string(), "x^3 + 3x^2 + 3x");
//! ```
//!
//! The `dompoly` binary exposes all of the above on the command line; see
//! `dompoly --help`.

pub mod cli;
pub mod core;
pub mod families;
pub mod genfunc;
pub mod identities;
pub mod oracle;
pub mod recurrence;

pub use crate::core::{gamma_cycle, is_dominating, CoreError, VertexSet};
pub use crate::families::{Family, FamilyError, FamilyReport};
pub use crate::genfunc::BivariateSeries;
pub use crate::identities::{Identity, IdentityCheck};
pub use crate::oracle::OracleLimits;
pub use crate::recurrence::{Count, DominationPolynomial, DominationTable};
