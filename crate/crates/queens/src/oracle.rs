//! Brute-force reference oracle for cross-checking the backtracking solver.
//!
//! Every N-queens solution assigns distinct columns to distinct rows, i.e. it
//! is a permutation. The oracle therefore walks *all* permutations of
//! `0..n` in lexicographic order and keeps those whose diagonals are pairwise
//! distinct. No search-tree pruning, no shared code with the solver: the only
//! thing the two implementations have in common is the definition of an
//! attack. At `n!` permutations per board the approach dies quickly, hence the
//! hard cap at [`MAX_BOARD`].

use thiserror::Error;

use crate::solver::{BoardSize, Placement, SolutionCount};

/// Largest board the oracle will accept (`11! ≈ 4·10^7` permutations).
pub const MAX_BOARD: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle supports boards up to {max}x{max}, got {n}")]
    BoardTooLarge { n: usize, max: usize },
}

/// Everything the oracle learned about one board size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub n: BoardSize,
    pub count: SolutionCount,
    /// All solutions, in lexicographic order of their column sequence.
    pub placements: Vec<Placement>,
}

/// Exhaustively checks every row-to-column permutation of an `n x n` board.
pub fn brute_force_count(n: BoardSize) -> Result<OracleResult, OracleError> {
    let size = n.get();
    if size > MAX_BOARD {
        return Err(OracleError::BoardTooLarge {
            n: size,
            max: MAX_BOARD,
        });
    }

    let mut perm: Vec<usize> = (0..size).collect();
    let mut sums = vec![0isize; size];
    let mut diffs = vec![0isize; size];
    let mut placements = Vec::new();

    loop {
        if diagonals_distinct(&perm, &mut sums, &mut diffs) {
            let placement = Placement::new(perm.clone())
                .expect("a permutation with distinct diagonals has no attacking pair");
            placements.push(placement);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }

    Ok(OracleResult {
        n,
        count: SolutionCount::from(placements.len() as u64),
        placements,
    })
}

/// True when no two queens of the permutation share a diagonal. Sorting the
/// per-row diagonal identifiers reduces the check to adjacent comparisons.
fn diagonals_distinct(perm: &[usize], sums: &mut [isize], diffs: &mut [isize]) -> bool {
    for (row, &column) in perm.iter().enumerate() {
        sums[row] = row as isize + column as isize;
        diffs[row] = row as isize - column as isize;
    }
    sums.sort_unstable();
    diffs.sort_unstable();
    let no_duplicates = |ids: &[isize]| ids.windows(2).all(|w| w[0] != w[1]);
    no_duplicates(sums) && no_duplicates(diffs)
}

/// Advances `a` to its lexicographic successor in place. Returns `false` (and
/// leaves `a` sorted ascending) when `a` was already the final permutation.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    // Longest weakly decreasing suffix; the element before it is the pivot.
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let pivot = i - 1;
    // Rightmost element greater than the pivot (exists: a[pivot] < a[pivot+1]).
    let mut j = a.len() - 1;
    while a[j] <= a[pivot] {
        j -= 1;
    }
    a.swap(pivot, j);
    a[i..].reverse();
    true
}
