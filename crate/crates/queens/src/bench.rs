//! Timed benchmark trials over (board size, execution mode) cells.
//!
//! The harness runs each cell's trials back-to-back on the calling thread
//! (never two cells at once — that would contaminate the timings), brackets
//! the wall clock around nothing but the counting call, and cross-checks that
//! every trial of a given board size reports the same count: a fast run with
//! a wrong answer must never make it into the results.
//!
//! The default trial schedule spends effort where it is affordable: 20 trials
//! per board size up to 15, 10 for 16 and 17, and 3 for 18.

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::parallel::{count_parallel, ExecutionMode, ModeKind, ParallelError};
use crate::solver::{BoardSize, SolutionCount};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("board size range is inverted: min {min} > max {max}")]
    InvertedRange { min: usize, max: usize },
    #[error("no trial count configured for n={n}")]
    MissingTrials { n: usize },
    #[error("trial count for n={n} must be at least 1")]
    ZeroTrials { n: usize },
    #[error("no execution modes configured")]
    NoModes,
    #[error(
        "count mismatch at n={n}: {mode} trial {trial} returned {actual}, earlier trials returned {expected}"
    )]
    CountMismatch {
        n: usize,
        mode: ModeKind,
        trial: usize,
        expected: SolutionCount,
        actual: SolutionCount,
    },
    #[error("trials file line {line} is not '<n> <trials>': {text:?}")]
    TrialsFileSyntax { line: usize, text: String },
    #[error(transparent)]
    Parallel(#[from] ParallelError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// What to benchmark and how hard to sample it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub modes: Vec<ModeKind>,
    /// Trials per board size. May cover more sizes than `min_n..=max_n`;
    /// must not cover fewer.
    pub trial_schedule: BTreeMap<usize, usize>,
    /// Unrecorded runs before each cell's timed trials.
    pub warmup_runs: usize,
    pub workers: usize,
}

impl BenchConfig {
    /// The reference protocol: all three modes over 8 ≤ n ≤ 15 with the
    /// default schedule, one warmup run per cell.
    pub fn default_protocol(workers: usize) -> Self {
        BenchConfig {
            min_n: 8,
            max_n: 15,
            modes: vec![ModeKind::Sequential, ModeKind::Para, ModeKind::Pool],
            trial_schedule: default_trial_schedule(),
            warmup_runs: 1,
            workers,
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.min_n > self.max_n {
            return Err(BenchError::InvertedRange {
                min: self.min_n,
                max: self.max_n,
            });
        }
        if self.modes.is_empty() {
            return Err(BenchError::NoModes);
        }
        if self.workers == 0 {
            return Err(ParallelError::ZeroWorkers.into());
        }
        for n in self.min_n..=self.max_n {
            match self.trial_schedule.get(&n) {
                None => return Err(BenchError::MissingTrials { n }),
                Some(0) => return Err(BenchError::ZeroTrials { n }),
                Some(_) => {}
            }
        }
        Ok(())
    }

    fn mode_for(&self, kind: ModeKind) -> Result<ExecutionMode, ParallelError> {
        ExecutionMode::new(kind, self.workers)
    }
}

/// Trials per board size: 20 up to n=15, 10 for 16–17, 3 for 18.
pub fn default_trial_schedule() -> BTreeMap<usize, usize> {
    let mut schedule = BTreeMap::new();
    for n in 8..=15 {
        schedule.insert(n, 20);
    }
    schedule.insert(16, 10);
    schedule.insert(17, 10);
    schedule.insert(18, 3);
    schedule
}

/// Parses a trial schedule from lines of `<n> <trials>`. Blank lines and
/// lines starting with `#` are skipped. The parsed schedule replaces the
/// default wholesale.
pub fn parse_trials_file(text: &str) -> Result<BTreeMap<usize, usize>, BenchError> {
    let mut schedule = BTreeMap::new();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let syntax_error = || BenchError::TrialsFileSyntax {
            line: index + 1,
            text: raw.to_string(),
        };
        let mut fields = line.split_whitespace();
        let n = fields.next().ok_or_else(syntax_error)?;
        let trials = fields.next().ok_or_else(syntax_error)?;
        if fields.next().is_some() {
            return Err(syntax_error());
        }
        let n: usize = n.parse().map_err(|_| syntax_error())?;
        let trials: usize = trials.parse().map_err(|_| syntax_error())?;
        schedule.insert(n, trials);
    }
    Ok(schedule)
}

/// One timed run of one (n, mode) cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub n: BoardSize,
    pub mode: ModeKind,
    /// Zero-based index within the cell's timed trials.
    pub trial: usize,
    pub seconds: f64,
    pub count: SolutionCount,
}

/// Per-cell aggregate over the timed trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchSummary {
    pub n: BoardSize,
    pub mode: ModeKind,
    pub trials: usize,
    pub mean_seconds: f64,
    /// Unbiased sample variance (n−1 denominator); 0.0 for a single trial.
    pub variance_seconds: f64,
}

/// Runs every configured cell and returns one record per timed trial.
///
/// Warmup runs execute before each cell's trials but are not recorded. The
/// clock brackets only the counting call. All trials of a given board size —
/// across modes — must agree on the count, or the run fails.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<TrialRecord>, BenchError> {
    config.validate()?;
    let mut records = Vec::new();
    for n in config.min_n..=config.max_n {
        let board = BoardSize::new(n);
        let trials = config.trial_schedule[&n];
        let mut expected: Option<SolutionCount> = None;
        for &kind in &config.modes {
            let mode = config.mode_for(kind)?;
            for _ in 0..config.warmup_runs {
                count_parallel(board, mode)?;
            }
            for trial in 0..trials {
                let started = Instant::now();
                let count = count_parallel(board, mode)?;
                let seconds = started.elapsed().as_secs_f64();
                match expected {
                    None => expected = Some(count),
                    Some(want) if want == count => {}
                    Some(want) => {
                        return Err(BenchError::CountMismatch {
                            n,
                            mode: kind,
                            trial,
                            expected: want,
                            actual: count,
                        })
                    }
                }
                records.push(TrialRecord {
                    n: board,
                    mode: kind,
                    trial,
                    seconds,
                    count,
                });
            }
        }
    }
    Ok(records)
}

/// Aggregates records into one summary per (n, mode) cell, in order of first
/// appearance.
pub fn summarize(records: &[TrialRecord]) -> Vec<BenchSummary> {
    let mut groups: Vec<((BoardSize, ModeKind), Vec<f64>)> = Vec::new();
    for record in records {
        let key = (record.n, record.mode);
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, seconds)) => seconds.push(record.seconds),
            None => groups.push((key, vec![record.seconds])),
        }
    }
    groups
        .into_iter()
        .map(|((n, mode), seconds)| {
            let trials = seconds.len();
            let mean = seconds.iter().sum::<f64>() / trials as f64;
            let variance = if trials < 2 {
                0.0
            } else {
                seconds.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (trials - 1) as f64
            };
            BenchSummary {
                n,
                mode,
                trials,
                mean_seconds: mean,
                variance_seconds: variance,
            }
        })
        .collect()
}

/// Ratios of mean runtimes at consecutive board sizes for one mode: the entry
/// `(n, r)` says the mean at `n+1` is `r` times the mean at `n`. Pairs with a
/// gap in `n` are omitted.
pub fn growth_factors(summaries: &[BenchSummary], mode: ModeKind) -> Vec<(usize, f64)> {
    let mut means: Vec<(usize, f64)> = summaries
        .iter()
        .filter(|s| s.mode == mode)
        .map(|s| (s.n.get(), s.mean_seconds))
        .collect();
    means.sort_unstable_by_key(|&(n, _)| n);
    means
        .windows(2)
        .filter(|pair| pair[1].0 == pair[0].0 + 1)
        .map(|pair| (pair[0].0, pair[1].1 / pair[0].1))
        .collect()
}

/// Writes trial records as CSV with header `n,mode,trial,seconds,count`.
pub fn write_trials_csv<W: Write>(records: &[TrialRecord], out: W) -> Result<(), BenchError> {
    let mut writer = csv::Writer::from_writer(out);
    for record in records {
        writer.serialize(record)?;
    }
    writer.flush()?;
    Ok(())
}

/// Writes summaries as CSV with header `n,mode,trials,mean_seconds,variance_seconds`.
pub fn write_summaries_csv<W: Write>(summaries: &[BenchSummary], out: W) -> Result<(), BenchError> {
    let mut writer = csv::Writer::from_writer(out);
    for summary in summaries {
        writer.serialize(summary)?;
    }
    writer.flush()?;
    Ok(())
}

/// Reads back a trials CSV produced by [`write_trials_csv`].
pub fn read_trials_csv<R: Read>(input: R) -> Result<Vec<TrialRecord>, BenchError> {
    let mut reader = csv::Reader::from_reader(input);
    let mut records = Vec::new();
    for row in reader.deserialize() {
        records.push(row?);
    }
    Ok(records)
}

/// Reads back a summary CSV produced by [`write_summaries_csv`].
pub fn read_summaries_csv<R: Read>(input: R) -> Result<Vec<BenchSummary>, BenchError> {
    let mut reader = csv::Reader::from_reader(input);
    let mut summaries = Vec::new();
    for row in reader.deserialize() {
        summaries.push(row?);
    }
    Ok(summaries)
}

/// Writes summaries as JSON, echoing the configuration under a `config` key.
pub fn write_summaries_json<W: Write>(
    config: &BenchConfig,
    summaries: &[BenchSummary],
    out: W,
) -> Result<(), BenchError> {
    #[derive(Serialize)]
    struct Document<'a> {
        config: &'a BenchConfig,
        summaries: &'a [BenchSummary],
    }
    serde_json::to_writer_pretty(out, &Document { config, summaries })
        .map_err(|err| BenchError::Io(err.into()))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(n: usize, mode: ModeKind, mean: f64) -> BenchSummary {
        BenchSummary {
            n: BoardSize::new(n),
            mode,
            trials: 3,
            mean_seconds: mean,
            variance_seconds: 0.0,
        }
    }

    #[test]
    fn default_schedule_matches_reference_protocol() {
        let schedule = default_trial_schedule();
        for n in 8..=15 {
            assert_eq!(schedule[&n], 20, "n={n}");
        }
        assert_eq!(schedule[&16], 10);
        assert_eq!(schedule[&17], 10);
        assert_eq!(schedule[&18], 3);
        assert_eq!(schedule.len(), 11);
    }

    #[test]
    fn config_validation_catches_bad_inputs() {
        let good = BenchConfig::default_protocol(2);
        good.validate().unwrap();

        let mut inverted = good.clone();
        inverted.min_n = 16;
        assert!(matches!(
            inverted.validate(),
            Err(BenchError::InvertedRange { min: 16, max: 15 })
        ));

        let mut uncovered = good.clone();
        uncovered.max_n = 19;
        assert!(matches!(
            uncovered.validate(),
            Err(BenchError::MissingTrials { n: 19 })
        ));

        let mut zero = good.clone();
        zero.trial_schedule.insert(9, 0);
        assert!(matches!(
            zero.validate(),
            Err(BenchError::ZeroTrials { n: 9 })
        ));

        let mut no_modes = good.clone();
        no_modes.modes.clear();
        assert!(matches!(no_modes.validate(), Err(BenchError::NoModes)));
    }

    #[test]
    fn run_bench_produces_scheduled_records_with_verified_counts() {
        let config = BenchConfig {
            min_n: 8,
            max_n: 8,
            modes: vec![ModeKind::Sequential],
            trial_schedule: BTreeMap::from([(8, 3)]),
            warmup_runs: 1,
            workers: 1,
        };
        let records = run_bench(&config).unwrap();
        assert_eq!(records.len(), 3);
        for (index, record) in records.iter().enumerate() {
            assert_eq!(record.n.get(), 8);
            assert_eq!(record.mode, ModeKind::Sequential);
            assert_eq!(record.trial, index);
            assert!(record.seconds > 0.0);
            assert_eq!(record.count.value(), 92);
        }
    }

    #[test]
    fn run_bench_counts_agree_across_modes_per_size() {
        let config = BenchConfig {
            min_n: 6,
            max_n: 7,
            modes: vec![ModeKind::Sequential, ModeKind::Para, ModeKind::Pool],
            trial_schedule: BTreeMap::from([(6, 2), (7, 2)]),
            warmup_runs: 0,
            workers: 2,
        };
        let records = run_bench(&config).unwrap();
        assert_eq!(records.len(), 2 * 3 * 2);
        for n in [6, 7] {
            let counts: Vec<u64> = records
                .iter()
                .filter(|r| r.n.get() == n)
                .map(|r| r.count.value())
                .collect();
            assert!(counts.windows(2).all(|w| w[0] == w[1]), "n={n}");
        }
    }

    #[test]
    fn summarize_computes_mean_and_unbiased_variance() {
        let records: Vec<TrialRecord> = [1.0, 2.0, 3.0]
            .iter()
            .enumerate()
            .map(|(trial, &seconds)| TrialRecord {
                n: BoardSize::new(8),
                mode: ModeKind::Sequential,
                trial,
                seconds,
                count: SolutionCount::from(92),
            })
            .collect();
        let summaries = summarize(&records);
        assert_eq!(summaries.len(), 1);
        assert_eq!(summaries[0].trials, 3);
        assert!((summaries[0].mean_seconds - 2.0).abs() < 1e-12);
        assert!((summaries[0].variance_seconds - 1.0).abs() < 1e-12);
    }

    #[test]
    fn summarize_constant_series_has_zero_variance() {
        let records: Vec<TrialRecord> = (0..3)
            .map(|trial| TrialRecord {
                n: BoardSize::new(9),
                mode: ModeKind::Para,
                trial,
                seconds: 1.0,
                count: SolutionCount::from(352),
            })
            .collect();
        let summaries = summarize(&records);
        assert_eq!(summaries[0].mean_seconds, 1.0);
        assert_eq!(summaries[0].variance_seconds, 0.0);
    }

    #[test]
    fn summarize_single_trial_reports_zero_variance() {
        let records = vec![TrialRecord {
            n: BoardSize::new(8),
            mode: ModeKind::Pool,
            trial: 0,
            seconds: 0.5,
            count: SolutionCount::from(92),
        }];
        let summaries = summarize(&records);
        assert_eq!(summaries[0].trials, 1);
        assert_eq!(summaries[0].variance_seconds, 0.0);
    }

    #[test]
    fn summarize_groups_by_cell() {
        let mut records = Vec::new();
        for mode in [ModeKind::Sequential, ModeKind::Para] {
            for trial in 0..2 {
                records.push(TrialRecord {
                    n: BoardSize::new(8),
                    mode,
                    trial,
                    seconds: 1.0,
                    count: SolutionCount::from(92),
                });
            }
        }
        let summaries = summarize(&records);
        assert_eq!(summaries.len(), 2);
        assert_eq!(summaries[0].mode, ModeKind::Sequential);
        assert_eq!(summaries[1].mode, ModeKind::Para);
    }

    #[test]
    fn growth_factors_for_constant_means_are_one() {
        let summaries: Vec<BenchSummary> = (8..=11)
            .map(|n| summary(n, ModeKind::Sequential, 2.5))
            .collect();
        let factors = growth_factors(&summaries, ModeKind::Sequential);
        assert_eq!(factors.len(), 3);
        for (n, ratio) in factors {
            assert!((ratio - 1.0).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn growth_factors_skip_gaps_and_other_modes() {
        let summaries = vec![
            summary(8, ModeKind::Sequential, 1.0),
            summary(9, ModeKind::Sequential, 2.0),
            summary(11, ModeKind::Sequential, 8.0),
            summary(12, ModeKind::Sequential, 40.0),
            summary(9, ModeKind::Para, 1.5),
        ];
        let factors = growth_factors(&summaries, ModeKind::Sequential);
        assert_eq!(factors, vec![(8, 2.0), (11, 5.0)]);
    }

    #[test]
    fn trials_csv_has_exact_header_and_rows() {
        let records = vec![TrialRecord {
            n: BoardSize::new(8),
            mode: ModeKind::Para,
            trial: 0,
            seconds: 0.25,
            count: SolutionCount::from(92),
        }];
        let mut out = Vec::new();
        write_trials_csv(&records, &mut out).unwrap();
        let text = String::from_utf8(out.clone()).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("n,mode,trial,seconds,count"));
        assert_eq!(lines.next(), Some("8,para,0,0.25,92"));
        assert_eq!(lines.next(), None);
        assert_eq!(read_trials_csv(out.as_slice()).unwrap(), records);
    }

    #[test]
    fn summary_csv_round_trips() {
        let summaries = vec![
            summary(8, ModeKind::Sequential, 0.125),
            summary(9, ModeKind::Pool, 0.5),
        ];
        let mut out = Vec::new();
        write_summaries_csv(&summaries, &mut out).unwrap();
        let text = String::from_utf8(out.clone()).unwrap();
        assert!(text.starts_with("n,mode,trials,mean_seconds,variance_seconds\n"));
        let parsed = read_summaries_csv(out.as_slice()).unwrap();
        assert_eq!(parsed, summaries);
    }

    #[test]
    fn json_document_echoes_config() {
        let config = BenchConfig {
            min_n: 8,
            max_n: 8,
            modes: vec![ModeKind::Sequential, ModeKind::Para],
            trial_schedule: BTreeMap::from([(8, 2)]),
            warmup_runs: 1,
            workers: 4,
        };
        let summaries = vec![summary(8, ModeKind::Sequential, 1.0)];
        let mut out = Vec::new();
        write_summaries_json(&config, &summaries, &mut out).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(value["config"]["min_n"], 8);
        assert_eq!(value["config"]["workers"], 4);
        assert_eq!(value["config"]["modes"][1], "para");
        assert_eq!(value["config"]["trial_schedule"]["8"], 2);
        assert_eq!(value["summaries"][0]["mode"], "seq");
        assert_eq!(value["summaries"][0]["n"], 8);
    }

    #[test]
    fn trials_file_parses_lines_comments_and_blanks() {
        let schedule = parse_trials_file("# schedule\n8 3\n\n12 1\n").unwrap();
        assert_eq!(schedule, BTreeMap::from([(8, 3), (12, 1)]));
    }

    #[test]
    fn trials_file_rejects_malformed_lines() {
        for text in ["8", "8 three", "8 3 9", "eight 3"] {
            let err = parse_trials_file(text).unwrap_err();
            assert!(
                matches!(err, BenchError::TrialsFileSyntax { line: 1, .. }),
                "text={text:?}"
            );
        }
    }
}
