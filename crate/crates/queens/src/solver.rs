//! Recursive backtracking solver for counting and enumerating N-queens solutions.
//!
//! Two queens at `(i1, j1)` and `(i2, j2)` attack each other when they share a
//! row, a column, or a diagonal. The two diagonals through a cell `(i, j)` are
//! identified by `i + j` and `i - j`, so attacked columns and diagonals can be
//! tracked with three boolean availability arrays. The search places one queen
//! per row, marks the column and both diagonals, recurses into the next row,
//! and unmarks on the way back out.
//!
//! Two storage variants are provided: the default solver allocates the
//! availability arrays on the heap and handles any board size, while
//! [`fixed`] keeps them in fixed-size stack arrays and is limited to
//! `n <= 32` (larger boards are computationally out of reach anyway).

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors produced by solver entry points and domain-type constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    /// The fixed-capacity variant cannot hold a board this large.
    #[error("board size {n} exceeds the fixed solver capacity of {capacity}")]
    CapacityExceeded { n: usize, capacity: usize },
    /// A first-row column index outside `0..n`.
    #[error("column {column} is out of range for a {n}x{n} board")]
    ColumnOutOfRange { column: usize, n: usize },
    /// An occupancy array whose length does not match the board size.
    #[error("{array} array has length {actual}, expected {expected} for a {n}x{n} board")]
    OccupancyLength {
        array: &'static str,
        expected: usize,
        actual: usize,
        n: usize,
    },
    /// A placement entry outside the board.
    #[error("row {row} places its queen in column {column}, outside a {n}x{n} board")]
    PlacementOutOfRange { row: usize, column: usize, n: usize },
    /// Two rows of a placement attack each other.
    #[error("queens in rows {row_a} and {row_b} attack each other")]
    PlacementConflict { row_a: usize, row_b: usize },
}

/// Board dimension `n` (the board is `n x n` and holds `n` queens).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoardSize(usize);

impl BoardSize {
    pub const fn new(n: usize) -> Self {
        BoardSize(n)
    }

    pub const fn get(self) -> usize {
        self.0
    }
}

impl From<usize> for BoardSize {
    fn from(n: usize) -> Self {
        BoardSize(n)
    }
}

impl fmt::Display for BoardSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for BoardSize {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<usize>().map(BoardSize)
    }
}

/// Number of valid queen placements. Board sizes in practical reach stay far
/// below the `u64` range.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct SolutionCount(u64);

impl SolutionCount {
    pub const ZERO: SolutionCount = SolutionCount(0);
    pub const ONE: SolutionCount = SolutionCount(1);

    pub const fn value(self) -> u64 {
        self.0
    }
}

impl From<u64> for SolutionCount {
    fn from(value: u64) -> Self {
        SolutionCount(value)
    }
}

impl Add for SolutionCount {
    type Output = SolutionCount;

    fn add(self, rhs: SolutionCount) -> SolutionCount {
        SolutionCount(self.0 + rhs.0)
    }
}

impl AddAssign for SolutionCount {
    fn add_assign(&mut self, rhs: SolutionCount) {
        self.0 += rhs.0;
    }
}

impl Sum for SolutionCount {
    fn sum<I: Iterator<Item = SolutionCount>>(iter: I) -> SolutionCount {
        iter.fold(SolutionCount::ZERO, Add::add)
    }
}

impl fmt::Display for SolutionCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Availability flags for columns and diagonals during the search.
///
/// `col` has length `n`, `dg1` and `dg2` length `2n`. A queen at `(i, j)`
/// occupies column `j`, sum-diagonal `i + j` (index into `dg1`, valid window
/// `0..=2n-2`), and difference-diagonal `i - j` (stored at `i - j + n` in
/// `dg2`, valid window `1..=2n-1`; index 0 is allocated but never touched).
/// Undersized diagonal arrays are a classic source of silently wrong counts,
/// so lengths are validated at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccupancyState {
    n: usize,
    col: Vec<bool>,
    dg1: Vec<bool>,
    dg2: Vec<bool>,
}

impl OccupancyState {
    /// Fresh state with every column and diagonal available.
    pub fn new(n: BoardSize) -> Self {
        let n = n.get();
        OccupancyState {
            n,
            col: vec![true; n],
            dg1: vec![true; 2 * n],
            dg2: vec![true; 2 * n],
        }
    }

    /// Builds a state from existing flag arrays, validating their lengths.
    pub fn from_parts(
        n: BoardSize,
        col: Vec<bool>,
        dg1: Vec<bool>,
        dg2: Vec<bool>,
    ) -> Result<Self, SolverError> {
        let n = n.get();
        let check = |array: &'static str, expected: usize, actual: usize| {
            if actual == expected {
                Ok(())
            } else {
                Err(SolverError::OccupancyLength {
                    array,
                    expected,
                    actual,
                    n,
                })
            }
        };
        check("col", n, col.len())?;
        check("dg1", 2 * n, dg1.len())?;
        check("dg2", 2 * n, dg2.len())?;
        Ok(OccupancyState { n, col, dg1, dg2 })
    }

    pub fn board_size(&self) -> BoardSize {
        BoardSize(self.n)
    }

    /// True when `(row, column)` is not attacked by any marked queen.
    #[inline]
    pub fn is_free(&self, row: usize, column: usize) -> bool {
        self.col[column] && self.dg1[row + column] && self.dg2[row + self.n - column]
    }

    /// Marks the column and both diagonals through `(row, column)` occupied.
    #[inline]
    pub fn mark(&mut self, row: usize, column: usize) {
        self.col[column] = false;
        self.dg1[row + column] = false;
        self.dg2[row + self.n - column] = false;
    }

    /// Reverses a previous [`mark`](Self::mark) of the same cell.
    #[inline]
    pub fn unmark(&mut self, row: usize, column: usize) {
        self.col[column] = true;
        self.dg1[row + column] = true;
        self.dg2[row + self.n - column] = true;
    }

    /// True when every flag is available again (holds after any complete
    /// top-level search, by the mark/recurse/unmark discipline).
    pub fn is_fully_free(&self) -> bool {
        self.col.iter().all(|&f| f) && self.dg1.iter().all(|&f| f) && self.dg2.iter().all(|&f| f)
    }
}

/// One queen per row, encoded as `columns[row]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Placement {
    columns: Vec<usize>,
}

impl Placement {
    /// Validates that all columns are on the board, pairwise distinct, and on
    /// pairwise distinct diagonals.
    pub fn new(columns: Vec<usize>) -> Result<Self, SolverError> {
        let n = columns.len();
        for (row, &column) in columns.iter().enumerate() {
            if column >= n {
                return Err(SolverError::PlacementOutOfRange { row, column, n });
            }
        }
        for row_a in 0..n {
            for row_b in row_a + 1..n {
                let (ca, cb) = (columns[row_a] as isize, columns[row_b] as isize);
                let (ra, rb) = (row_a as isize, row_b as isize);
                if ca == cb || ra + ca == rb + cb || ra - ca == rb - cb {
                    return Err(SolverError::PlacementConflict { row_a, row_b });
                }
            }
        }
        Ok(Placement { columns })
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    pub fn board_size(&self) -> BoardSize {
        BoardSize(self.columns.len())
    }
}

/// Counts every solution on an `n x n` board.
///
/// The empty board counts as one solution: with zero rows to fill, the
/// recursion base fires immediately.
pub fn count_all_solutions(n: BoardSize) -> SolutionCount {
    let mut state = OccupancyState::new(n);
    let count = count_from_row(n, 0, &mut state);
    debug_assert!(state.is_fully_free());
    count
}

/// Counts completions of rows `row..n` given the occupancy of earlier rows.
///
/// The state is bitwise identical on exit: every branch marks a cell, recurses,
/// and unmarks it again.
pub fn count_from_row(n: BoardSize, row: usize, state: &mut OccupancyState) -> SolutionCount {
    let n = n.get();
    debug_assert!(row <= n);
    if row == n {
        return SolutionCount::ONE;
    }
    let mut nsol = SolutionCount::ZERO;
    for column in 0..n {
        if state.is_free(row, column) {
            state.mark(row, column);
            nsol += count_from_row(BoardSize(n), row + 1, state);
            state.unmark(row, column);
        }
    }
    nsol
}

/// Counts the solutions whose row-0 queen sits in `column`.
///
/// Summing over all columns reproduces [`count_all_solutions`]; the per-column
/// searches are independent, which is what the parallel strategies exploit.
pub fn count_with_first_queen_at(
    n: BoardSize,
    column: usize,
) -> Result<SolutionCount, SolverError> {
    if column >= n.get() {
        return Err(SolverError::ColumnOutOfRange { column, n: n.get() });
    }
    let mut state = OccupancyState::new(n);
    state.mark(0, column);
    let count = count_from_row(n, 1, &mut state);
    state.unmark(0, column);
    debug_assert!(state.is_fully_free());
    Ok(count)
}

/// Collects solutions in lexicographic order of their column sequence (the
/// order the search loop naturally visits), stopping after `limit` when given.
pub fn enumerate_solutions(n: BoardSize, limit: Option<usize>) -> Vec<Placement> {
    let cap = limit.unwrap_or(usize::MAX);
    let mut found = Vec::new();
    if cap == 0 {
        return found;
    }
    let mut state = OccupancyState::new(n);
    let mut prefix = Vec::with_capacity(n.get());
    enumerate_from_row(n.get(), 0, &mut state, &mut prefix, cap, &mut found);
    debug_assert!(state.is_fully_free());
    found
}

fn enumerate_from_row(
    n: usize,
    row: usize,
    state: &mut OccupancyState,
    prefix: &mut Vec<usize>,
    cap: usize,
    found: &mut Vec<Placement>,
) {
    if row == n {
        let placement =
            Placement::new(prefix.clone()).expect("search only visits non-attacking placements");
        found.push(placement);
        return;
    }
    for column in 0..n {
        if state.is_free(row, column) {
            state.mark(row, column);
            prefix.push(column);
            enumerate_from_row(n, row + 1, state, prefix, cap, found);
            prefix.pop();
            state.unmark(row, column);
            if found.len() >= cap {
                return;
            }
        }
    }
}

/// Solver variant with the availability arrays in fixed-size stack arrays.
///
/// Capacity is 32: the search cost is exponential in `n`, so boards beyond
/// that are out of computational reach regardless of storage strategy.
pub mod fixed {
    use super::{BoardSize, SolutionCount, SolverError};

    /// Largest board the stack arrays can hold.
    pub const CAPACITY: usize = 32;

    /// Validates that `n` fits the fixed-size arrays.
    pub fn check_capacity(n: BoardSize) -> Result<(), SolverError> {
        if n.get() > CAPACITY {
            Err(SolverError::CapacityExceeded {
                n: n.get(),
                capacity: CAPACITY,
            })
        } else {
            Ok(())
        }
    }

    /// Stack-array counterpart of [`count_all_solutions`](super::count_all_solutions).
    pub fn count_all_solutions(n: BoardSize) -> Result<SolutionCount, SolverError> {
        check_capacity(n)?;
        let mut col = [true; CAPACITY];
        let mut dg1 = [true; 2 * CAPACITY];
        let mut dg2 = [true; 2 * CAPACITY];
        Ok(count_from_row(n.get(), 0, &mut col, &mut dg1, &mut dg2))
    }

    fn count_from_row(
        n: usize,
        row: usize,
        col: &mut [bool; CAPACITY],
        dg1: &mut [bool; 2 * CAPACITY],
        dg2: &mut [bool; 2 * CAPACITY],
    ) -> SolutionCount {
        if row == n {
            return SolutionCount::ONE;
        }
        let mut nsol = SolutionCount::ZERO;
        for column in 0..n {
            if col[column] && dg1[row + column] && dg2[row + n - column] {
                col[column] = false;
                dg1[row + column] = false;
                dg2[row + n - column] = false;

                nsol += count_from_row(n, row + 1, col, dg1, dg2);

                col[column] = true;
                dg1[row + column] = true;
                dg2[row + n - column] = true;
            }
        }
        nsol
    }
}
