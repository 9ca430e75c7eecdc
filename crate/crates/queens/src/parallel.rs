//! Parallel execution of the first-row decomposition.
//!
//! [`count_with_first_queen_at`] splits the full search into `n` independent
//! subsearches, one per column of the row-0 queen. This module runs those
//! tasks under two strategies:
//!
//! * **Para** — a data-parallel loop: workers pull loop indices from a shared
//!   atomic counter and accumulate private partial sums, reduced at the end.
//! * **Pool** — a fixed set of workers consuming tasks from a FIFO queue.
//!
//! Both strategies execute every task exactly once against a private
//! [`OccupancyState`](crate::solver::OccupancyState), so the total is
//! identical to the sequential count regardless of worker count or
//! scheduling order (addition is associative and commutative).
//!
//! The Pool strategy exists for scheduling comparison, not because it is
//! expected to win: queue dispatch costs more than the atomic loop counter,
//! and in a single process there are no serialization costs for it to
//! amortize the way a multi-process pool would.

use std::fmt;
use std::num::NonZeroUsize;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::solver::{
    count_all_solutions, count_with_first_queen_at, BoardSize, SolutionCount, SolverError,
};

/// Errors from parallel runs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParallelError {
    /// A worker count of zero cannot make progress.
    #[error("worker count must be at least 1")]
    ZeroWorkers,
    /// The subsearch for one first-row column returned an error.
    #[error("task for first-row column {first_column} failed: {source}")]
    TaskFailed {
        first_column: usize,
        source: SolverError,
    },
    /// The subsearch for one first-row column panicked.
    #[error("task for first-row column {first_column} panicked")]
    TaskPanicked { first_column: usize },
}

/// Execution strategy, without its worker count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModeKind {
    #[serde(rename = "seq")]
    Sequential,
    #[serde(rename = "para")]
    Para,
    #[serde(rename = "pool")]
    Pool,
}

impl ModeKind {
    pub const ALL: [ModeKind; 3] = [ModeKind::Sequential, ModeKind::Para, ModeKind::Pool];

    /// Short name used on the CLI and in CSV/JSON output.
    pub fn label(self) -> &'static str {
        match self {
            ModeKind::Sequential => "seq",
            ModeKind::Para => "para",
            ModeKind::Pool => "pool",
        }
    }
}

impl fmt::Display for ModeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ModeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "seq" => Ok(ModeKind::Sequential),
            "para" => Ok(ModeKind::Para),
            "pool" => Ok(ModeKind::Pool),
            other => Err(format!(
                "unknown mode '{other}' (expected seq, para, or pool)"
            )),
        }
    }
}

/// Execution strategy plus worker count. Sequential carries a worker count of
/// one; the other strategies require at least one worker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExecutionMode {
    kind: ModeKind,
    workers: NonZeroUsize,
}

impl ExecutionMode {
    pub fn new(kind: ModeKind, workers: usize) -> Result<Self, ParallelError> {
        let workers = match kind {
            ModeKind::Sequential => NonZeroUsize::MIN,
            _ => NonZeroUsize::new(workers).ok_or(ParallelError::ZeroWorkers)?,
        };
        Ok(ExecutionMode { kind, workers })
    }

    pub fn sequential() -> Self {
        ExecutionMode {
            kind: ModeKind::Sequential,
            workers: NonZeroUsize::MIN,
        }
    }

    pub fn para(workers: usize) -> Result<Self, ParallelError> {
        Self::new(ModeKind::Para, workers)
    }

    pub fn pool(workers: usize) -> Result<Self, ParallelError> {
        Self::new(ModeKind::Pool, workers)
    }

    pub fn kind(self) -> ModeKind {
        self.kind
    }

    pub fn workers(self) -> usize {
        self.workers.get()
    }
}

impl fmt::Display for ExecutionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ModeKind::Sequential => f.write_str("seq"),
            kind => write!(f, "{kind}(workers={})", self.workers),
        }
    }
}

/// Outcome of one first-row subsearch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TaskResult {
    /// Column of the row-0 queen this task fixed.
    pub first_column: usize,
    pub count: SolutionCount,
}

/// Number of workers the current machine can usefully run.
pub fn hardware_workers() -> usize {
    thread::available_parallelism().map_or(1, NonZeroUsize::get)
}

/// Counts all solutions under the given execution mode.
///
/// The result is identical to [`count_all_solutions`] for every mode and
/// worker count. A zero-size board has no tasks to split, so the parallel
/// strategies fall back to the sequential answer.
pub fn count_parallel(n: BoardSize, mode: ExecutionMode) -> Result<SolutionCount, ParallelError> {
    if mode.kind() == ModeKind::Sequential || n.get() == 0 {
        return Ok(count_all_solutions(n));
    }
    let results = run_tasks(n, mode, None)?;
    Ok(results.into_iter().map(|r| r.count).sum())
}

/// Runs all `n` first-row subsearches under the given mode and returns their
/// individual results, sorted by first-row column regardless of the order in
/// which workers completed them.
pub fn collect_task_results(
    n: BoardSize,
    mode: ExecutionMode,
) -> Result<Vec<TaskResult>, ParallelError> {
    let mut results = run_tasks(n, mode, None)?;
    results.sort_unstable_by_key(|r| r.first_column);
    debug_assert!(results.iter().enumerate().all(|(i, r)| r.first_column == i));
    Ok(results)
}

/// Runs the Pool strategy and reports the order in which tasks were *started*
/// (picked off the queue), in addition to the usual results. With one worker
/// the start order is exactly the queue order `0, 1, …, n-1`.
pub fn pool_task_start_order(n: BoardSize, workers: usize) -> Result<Vec<usize>, ParallelError> {
    let mode = ExecutionMode::pool(workers)?;
    let start_log = Mutex::new(Vec::with_capacity(n.get()));
    run_tasks(n, mode, Some(&start_log))?;
    Ok(start_log
        .into_inner()
        .expect("no worker panicked while logging"))
}

fn run_tasks(
    n: BoardSize,
    mode: ExecutionMode,
    start_log: Option<&Mutex<Vec<usize>>>,
) -> Result<Vec<TaskResult>, ParallelError> {
    match mode.kind() {
        ModeKind::Sequential => run_in_order(n, start_log),
        ModeKind::Para => run_para(n, mode.workers(), start_log),
        ModeKind::Pool => run_pool(n, mode.workers(), start_log),
    }
}

/// One subsearch, with panics converted into an error naming the task.
fn run_one(n: BoardSize, first_column: usize) -> Result<TaskResult, ParallelError> {
    let outcome = catch_unwind(AssertUnwindSafe(|| {
        count_with_first_queen_at(n, first_column)
    }));
    match outcome {
        Ok(Ok(count)) => Ok(TaskResult {
            first_column,
            count,
        }),
        Ok(Err(source)) => Err(ParallelError::TaskFailed {
            first_column,
            source,
        }),
        Err(_) => Err(ParallelError::TaskPanicked { first_column }),
    }
}

fn log_start(start_log: Option<&Mutex<Vec<usize>>>, first_column: usize) {
    if let Some(log) = start_log {
        log.lock()
            .expect("no worker panicked while logging")
            .push(first_column);
    }
}

/// Sequential-mode task collection: every task on the calling thread, in
/// column order.
fn run_in_order(
    n: BoardSize,
    start_log: Option<&Mutex<Vec<usize>>>,
) -> Result<Vec<TaskResult>, ParallelError> {
    (0..n.get())
        .map(|j| {
            log_start(start_log, j);
            run_one(n, j)
        })
        .collect()
}

/// Data-parallel loop: workers claim iterations from a shared counter and
/// keep private result buffers, merged after the scope joins.
fn run_para(
    n: BoardSize,
    workers: usize,
    start_log: Option<&Mutex<Vec<usize>>>,
) -> Result<Vec<TaskResult>, ParallelError> {
    let tasks = n.get();
    let workers = workers.min(tasks.max(1));
    let next = AtomicUsize::new(0);
    let abort = AtomicBool::new(false);
    let failure: Mutex<Option<ParallelError>> = Mutex::new(None);

    let mut results = Vec::with_capacity(tasks);
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|worker| {
                let next = &next;
                let abort = &abort;
                let failure = &failure;
                scope.spawn(move || {
                    let mut local = Vec::new();
                    loop {
                        if abort.load(Ordering::Relaxed) {
                            break;
                        }
                        let j = next.fetch_add(1, Ordering::Relaxed);
                        if j >= tasks {
                            break;
                        }
                        log_start(start_log, j);
                        match run_one(n, j) {
                            Ok(result) => local.push(result),
                            Err(err) => {
                                abort.store(true, Ordering::Relaxed);
                                let mut slot = failure.lock().expect("failure slot never poisoned");
                                slot.get_or_insert(err);
                                break;
                            }
                        }
                    }
                    log::debug!("para worker {worker} completed {} tasks", local.len());
                    local
                })
            })
            .collect();
        for handle in handles {
            let local = handle.join().expect("worker panics are caught per task");
            results.extend(local);
        }
    });

    match failure.into_inner().expect("failure slot never poisoned") {
        Some(err) => Err(err),
        None => Ok(results),
    }
}

/// Fixed worker pool: the task queue is filled in column order up front and
/// workers take from it first-in-first-out.
fn run_pool(
    n: BoardSize,
    workers: usize,
    start_log: Option<&Mutex<Vec<usize>>>,
) -> Result<Vec<TaskResult>, ParallelError> {
    let tasks = n.get();
    let workers = workers.min(tasks.max(1));
    let (sender, receiver) = crossbeam_channel::unbounded::<usize>();
    for j in 0..tasks {
        sender.send(j).expect("receiver outlives this loop");
    }
    // Closing the sending side lets workers drain the queue and then stop.
    drop(sender);

    let abort = AtomicBool::new(false);
    let failure: Mutex<Option<ParallelError>> = Mutex::new(None);

    let mut results = Vec::with_capacity(tasks);
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|worker| {
                let receiver = receiver.clone();
                let abort = &abort;
                let failure = &failure;
                scope.spawn(move || {
                    let mut local = Vec::new();
                    while let Ok(j) = receiver.recv() {
                        if abort.load(Ordering::Relaxed) {
                            break;
                        }
                        log_start(start_log, j);
                        match run_one(n, j) {
                            Ok(result) => local.push(result),
                            Err(err) => {
                                abort.store(true, Ordering::Relaxed);
                                let mut slot = failure.lock().expect("failure slot never poisoned");
                                slot.get_or_insert(err);
                                break;
                            }
                        }
                    }
                    log::debug!("pool worker {worker} completed {} tasks", local.len());
                    local
                })
            })
            .collect();
        for handle in handles {
            let local = handle.join().expect("worker panics are caught per task");
            results.extend(local);
        }
    });

    match failure.into_inner().expect("failure slot never poisoned") {
        Some(err) => Err(err),
        None => Ok(results),
    }
}
