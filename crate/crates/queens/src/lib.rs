//! Counting N-queens solutions: a recursive backtracking solver, parallel
//! decompositions of the search, and a benchmark harness around them.
//!
//! The pieces, bottom to top:
//!
//! * [`solver`] — the backtracking search over column/diagonal availability
//!   arrays, plus the domain types ([`BoardSize`], [`SolutionCount`],
//!   [`Placement`]).
//! * [`oracle`] — an independent permutation brute force used only to
//!   validate the solver.
//! * [`parallel`] — the first-row decomposition run sequentially, as a
//!   data-parallel loop, or on a fixed worker pool.
//! * [`mod@bench`] — timed trials over (board size, mode) cells with mean and
//!   variance aggregation, CSV/JSON persistence.
//! * [`report`] — deterministic SVG charts, aligned text tables, and ASCII
//!   board rendering.

pub mod bench;
pub mod oracle;
pub mod parallel;
pub mod report;
pub mod solver;

pub use parallel::{ExecutionMode, ModeKind};
pub use solver::{BoardSize, Placement, SolutionCount};
