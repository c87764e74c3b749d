//! The three-term recurrence for dominating-set counts of cycles.
//!
//! Row `n` of a [`DominationTable`] holds `d(C_n, i)` for `i = 0..=n`, the
//! number of `i`-subsets of the vertices of `C_n` that dominate it. The three
//! base rows are
//!
//! ```text
//! n=1:  d(C_1, 1) = 1
//! n=2:  d(C_2, 1) = 2,  d(C_2, 2) = 1
//! n=3:  d(C_3, 1) = 3,  d(C_3, 2) = 3,  d(C_3, 3) = 1
//! ```
//!
//! (orders 1 and 2 are formal rows: the counts of nonempty subsets, which is
//! what the recurrence needs), and every later row follows from
//!
//! ```text
//! d(C_n, i) = d(C_{n-1}, i-1) + d(C_{n-2}, i-1) + d(C_{n-3}, i-1)    (n ≥ 4)
//! ```
//!
//! with entries outside a row treated as zero. An entry is nonzero exactly
//! inside the window `⌈n/3⌉ ≤ i ≤ n`.
//!
//! Counts are [`BigUint`]s from the start: the row sums `S_n` satisfy
//! `S_n = S_{n-1} + S_{n-2} + S_{n-3}` and grow like `1.84^n`, which
//! overflows `u64` near `n = 95`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

pub mod cache;

/// An exact dominating-set count. Arbitrary precision, never negative.
pub type Count = BigUint;

/// Errors from building tables or polynomials.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RecurrenceError {
    /// Table and polynomial orders start at 1.
    #[error("cycle order must be at least 1, got {n}")]
    OrderTooSmall { n: u32 },
}

/// The first three rows, `d(C_n, i)` for `i = 0..=n`.
const BASE_ROWS: [&[u32]; 3] = [&[0, 1], &[0, 2, 1], &[0, 3, 3, 1]];

/// Triangular table of counts `d(C_n, i)` for `1 ≤ n ≤ n_max`, `0 ≤ i ≤ n`.
#[derive(Clone, PartialEq, Eq)]
pub struct DominationTable {
    /// `rows[k]` is row `n = k + 1` and has length `n + 1`.
    rows: Vec<Vec<Count>>,
}

impl DominationTable {
    /// Builds the table up to row `n_max` (at least 1).
    pub fn build(n_max: u32) -> Result<Self, RecurrenceError> {
        if n_max < 1 {
            return Err(RecurrenceError::OrderTooSmall { n: n_max });
        }
        let mut table = Self { rows: Vec::new() };
        table.extend_to(n_max);
        Ok(table)
    }

    /// Largest row currently present.
    pub fn n_max(&self) -> u32 {
        self.rows.len() as u32
    }

    /// Grows the table in place so that row `n_max` exists. Existing rows are
    /// never recomputed, so extending and building fresh agree exactly.
    pub fn extend_to(&mut self, n_max: u32) {
        while self.n_max() < n_max {
            self.push_next_row();
        }
    }

    fn push_next_row(&mut self) {
        let n = self.rows.len() + 1;
        if n <= 3 {
            let row = BASE_ROWS[n - 1].iter().map(|&c| Count::from(c)).collect();
            self.rows.push(row);
            return;
        }
        let mut row = Vec::with_capacity(n + 1);
        row.push(Count::zero());
        for i in 1..=n {
            let mut sum = Count::zero();
            for back in 1..=3 {
                sum += entry(&self.rows[n - 1 - back], i - 1);
            }
            row.push(sum);
        }
        self.rows.push(row);
    }

    /// Row `n` as a slice indexed by cardinality `i = 0..=n`.
    ///
    /// # Panics
    ///
    /// Panics when row `n` is not in the table.
    pub fn row(&self, n: u32) -> &[Count] {
        assert!(
            1 <= n && n <= self.n_max(),
            "row {n} not in table (rows 1..={})",
            self.n_max()
        );
        &self.rows[(n - 1) as usize]
    }

    /// The count `d(C_n, i)`; zero for any `i > n`.
    ///
    /// # Panics
    ///
    /// Panics when row `n` is not in the table.
    pub fn count(&self, n: u32, i: u32) -> Count {
        entry(self.row(n), i as usize).clone()
    }

    /// The domination polynomial of row `n`.
    pub fn polynomial(&self, n: u32) -> DominationPolynomial {
        DominationPolynomial {
            n,
            coeffs: self.row(n).to_vec(),
        }
    }

    /// Row sum `S_n = Σ_i d(C_n, i)`, the total number of dominating sets.
    pub fn total(&self, n: u32) -> Count {
        self.row(n).iter().sum()
    }
}

fn entry(row: &[Count], i: usize) -> &Count {
    static ZERO: Count = Count::ZERO;
    row.get(i).unwrap_or(&ZERO)
}

impl fmt::Debug for DominationTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DominationTable(n_max={})", self.n_max())
    }
}

/// Builds the count table up to row `n_max`.
pub fn build_table(n_max: u32) -> Result<DominationTable, RecurrenceError> {
    DominationTable::build(n_max)
}

/// The count `d(C_n, i)` for `n ≥ 1`. Any `i` is accepted; values outside
/// the window `⌈n/3⌉ ≤ i ≤ n` are genuine zeros, not errors.
///
/// Builds a fresh table of `n` rows per call — loop over a
/// [`DominationTable`] instead when querying many entries.
///
/// # Panics
///
/// Panics when `n = 0`.
pub fn count(n: u32, i: u32) -> Count {
    assert!(n >= 1, "count is defined for cycle orders n >= 1");
    DominationTable::build(n).expect("n >= 1").count(n, i)
}

/// The domination polynomial `D(C_n, x) = Σ_i d(C_n, i) x^i` for `n ≥ 1`.
pub fn polynomial(n: u32) -> Result<DominationPolynomial, RecurrenceError> {
    Ok(DominationTable::build(n)?.polynomial(n))
}

/// Total number of dominating sets `S_n` of `C_n`, computed directly from
/// `S_1 = 1`, `S_2 = 3`, `S_3 = 7`, `S_n = S_{n-1} + S_{n-2} + S_{n-3}` —
/// an independent route that the tests compare against row sums.
///
/// # Panics
///
/// Panics when `n = 0`.
pub fn total_count(n: u32) -> Count {
    assert!(n >= 1, "total_count is defined for cycle orders n >= 1");
    let mut window = [Count::from(1u32), Count::from(3u32), Count::from(7u32)];
    if n <= 3 {
        return window[(n - 1) as usize].clone();
    }
    for _ in 4..=n {
        let next = window.iter().sum();
        window = [window[1].clone(), window[2].clone(), next];
    }
    window[2].clone()
}

/// A domination polynomial: coefficients of `x^0..=x^n`, ascending.
#[derive(Clone, PartialEq, Eq)]
pub struct DominationPolynomial {
    n: u32,
    coeffs: Vec<Count>,
}

impl DominationPolynomial {
    /// Wraps a coefficient row; `coeffs[i]` is the coefficient of `x^i` and
    /// the length must be `n + 1`.
    pub(crate) fn from_coefficients(n: u32, coeffs: Vec<Count>) -> Self {
        debug_assert_eq!(coeffs.len(), (n + 1) as usize);
        Self { n, coeffs }
    }

    /// Order of the underlying cycle; also the degree of the polynomial.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Coefficients ascending by power, `x^0` through `x^n`, zeros explicit.
    pub fn coefficients(&self) -> &[Count] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coefficient(&self, i: u32) -> Count {
        entry(&self.coeffs, i as usize).clone()
    }

    /// Evaluates the polynomial by Horner's rule. `evaluate(1)` is the total
    /// number of dominating sets.
    pub fn evaluate(&self, x: &Count) -> Count {
        let mut acc = Count::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = acc * x + coeff;
        }
        acc
    }
}

impl fmt::Display for DominationPolynomial {
    /// Conventional form, highest power first, zero terms skipped:
    /// `x^3 + 3x^2 + 3x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, coeff) in self.coeffs.iter().enumerate().rev() {
            if coeff.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let one = coeff == &Count::from(1u32);
            match (power, one) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coeff}x")?,
                (_, true) => write!(f, "x^{power}")?,
                (_, false) => write!(f, "{coeff}x^{power}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DominationPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DominationPolynomial(n={}, {self})", self.n)
    }
}
