//! Rendering benchmark results: runtime-vs-n charts as SVG, aligned text
//! tables, and ASCII boards for individual placements.
//!
//! The SVG emitter is deliberately hand-rolled and dependency-free so that
//! identical input yields byte-identical output — charts can be diffed and
//! regression-tested like any other text. ASCII boards rather than raster
//! images keep solutions printable in a terminal and round-trippable through
//! a parser.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::bench::BenchSummary;
use crate::parallel::ModeKind;
use crate::solver::{Placement, SolverError};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("chart has no series")]
    NoSeries,
    #[error("series {label:?} has no points")]
    EmptySeries { label: String },
    #[error("log scale requires positive values, but series {label:?} has {value} at n={n}")]
    NonPositiveOnLogScale { label: String, n: usize, value: f64 },
    #[error("board line {row} is {actual} cells wide, expected {expected}")]
    BoardLineWidth {
        row: usize,
        expected: usize,
        actual: usize,
    },
    #[error("board line {row} contains {count} queens, expected exactly 1")]
    BoardQueensPerRow { row: usize, count: usize },
    #[error("board line {row} contains `{found}`; cells must be `Q` or `.`")]
    BoardBadCell { row: usize, found: char },
    #[error("board does not describe a valid placement: {0}")]
    BoardInvalidPlacement(#[from] SolverError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Vertical axis transform for charts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log10,
}

impl FromStr for Scale {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "linear" => Ok(Scale::Linear),
            "log" => Ok(Scale::Log10),
            other => Err(format!("unknown scale '{other}' (expected linear or log)")),
        }
    }
}

/// One chart line: a label and its (board size, seconds) points.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub points: Vec<(usize, f64)>,
}

/// Everything needed to draw one chart.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartSpec {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub scale: Scale,
    pub series: Vec<Series>,
}

impl ChartSpec {
    /// Standard runtime-vs-n chart over a set of summaries, one series per
    /// mode present, in seq/para/pool order.
    pub fn from_summaries(summaries: &[BenchSummary], scale: Scale) -> Self {
        let series = ModeKind::ALL
            .iter()
            .filter_map(|&mode| {
                let mut points: Vec<(usize, f64)> = summaries
                    .iter()
                    .filter(|s| s.mode == mode)
                    .map(|s| (s.n.get(), s.mean_seconds))
                    .collect();
                if points.is_empty() {
                    return None;
                }
                points.sort_unstable_by_key(|&(n, _)| n);
                Some(Series {
                    label: mode.label().to_string(),
                    points,
                })
            })
            .collect();
        ChartSpec {
            title: "Runtime vs board size".to_string(),
            x_label: "board size n".to_string(),
            y_label: match scale {
                Scale::Linear => "mean seconds".to_string(),
                Scale::Log10 => "mean seconds (log scale)".to_string(),
            },
            scale,
            series,
        }
    }

    fn validate(&self) -> Result<(), ReportError> {
        if self.series.is_empty() {
            return Err(ReportError::NoSeries);
        }
        for series in &self.series {
            if series.points.is_empty() {
                return Err(ReportError::EmptySeries {
                    label: series.label.clone(),
                });
            }
            if self.scale == Scale::Log10 {
                if let Some(&(n, value)) = series.points.iter().find(|&&(_, v)| v <= 0.0) {
                    return Err(ReportError::NonPositiveOnLogScale {
                        label: series.label.clone(),
                        n,
                        value,
                    });
                }
            }
        }
        Ok(())
    }
}

const CHART_WIDTH: f64 = 800.0;
const CHART_HEIGHT: f64 = 560.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 170.0;
const MARGIN_TOP: f64 = 50.0;
const MARGIN_BOTTOM: f64 = 60.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

/// Value-to-pixel mapping for the vertical axis plus its tick labels.
type YAxis = (Box<dyn Fn(f64) -> f64>, Vec<(f64, String)>);

/// Renders the chart as an SVG document. Pure function of the spec: identical
/// specs produce byte-identical output.
pub fn render_chart(spec: &ChartSpec) -> Result<String, ReportError> {
    spec.validate()?;

    let plot_w = CHART_WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = CHART_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let bottom = MARGIN_TOP + plot_h;
    let right = MARGIN_LEFT + plot_w;

    let xs = spec
        .series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.0));
    let x_min = xs.clone().min().expect("validated: at least one point");
    let x_max = xs.max().expect("validated: at least one point");
    let x_span = (x_max - x_min).max(1) as f64;
    let fx = |n: usize| MARGIN_LEFT + (n - x_min) as f64 / x_span * plot_w;

    // Vertical mapping: linear runs 0..max; log runs over whole decades so
    // every gridline is a power of ten.
    let values = spec
        .series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.1));
    let v_max = values.clone().fold(f64::MIN, f64::max);
    let v_min = values.fold(f64::MAX, f64::min);
    let (fy, y_ticks): YAxis = match spec.scale {
        Scale::Linear => {
            let top_value = if v_max > 0.0 { v_max } else { 1.0 };
            let ticks = (0..=5)
                .map(|i| {
                    let value = top_value * i as f64 / 5.0;
                    (value, format_sig(value, 3))
                })
                .collect();
            (
                Box::new(move |v: f64| bottom - v / top_value * plot_h),
                ticks,
            )
        }
        Scale::Log10 => {
            let mut k_min = v_min.log10().floor() as i32;
            let mut k_max = v_max.log10().ceil() as i32;
            if k_max == k_min {
                // All values inside one decade boundary; widen to a band.
                k_max += 1;
                k_min -= 1;
            }
            let span = (k_max - k_min) as f64;
            let ticks = (k_min..=k_max)
                .map(|k| (10f64.powi(k), format!("1e{k}")))
                .collect();
            (
                Box::new(move |v: f64| bottom - (v.log10() - k_min as f64) / span * plot_h),
                ticks,
            )
        }
    };

    let mut svg = String::new();
    let w = &mut svg;
    writeln!(
        w,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{CHART_WIDTH}\" height=\"{CHART_HEIGHT}\" viewBox=\"0 0 {CHART_WIDTH} {CHART_HEIGHT}\">"
    )
    .expect("writing to a String cannot fail");
    writeln!(
        w,
        "  <rect width=\"{CHART_WIDTH}\" height=\"{CHART_HEIGHT}\" fill=\"#ffffff\"/>"
    )
    .unwrap();
    writeln!(
        w,
        "  <text x=\"{:.2}\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\" fill=\"#202020\">{}</text>",
        MARGIN_LEFT + plot_w / 2.0,
        xml_escape(&spec.title)
    )
    .unwrap();

    // Horizontal gridlines and y tick labels.
    for (value, label) in &y_ticks {
        let y = fy(*value);
        writeln!(
            w,
            "  <line x1=\"{MARGIN_LEFT:.2}\" y1=\"{y:.2}\" x2=\"{right:.2}\" y2=\"{y:.2}\" stroke=\"#dddddd\" stroke-width=\"1\"/>"
        )
        .unwrap();
        writeln!(
            w,
            "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#404040\">{}</text>",
            MARGIN_LEFT - 8.0,
            y + 4.0,
            xml_escape(label)
        )
        .unwrap();
    }

    // X ticks at integer board sizes (thinned when the range is wide).
    let x_step = 1 + (x_max - x_min) / 12;
    let mut n = x_min;
    while n <= x_max {
        let x = fx(n);
        writeln!(
            w,
            "  <line x1=\"{x:.2}\" y1=\"{bottom:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"#404040\" stroke-width=\"1\"/>",
            bottom + 5.0
        )
        .unwrap();
        writeln!(
            w,
            "  <text x=\"{x:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#404040\">{n}</text>",
            bottom + 20.0
        )
        .unwrap();
        n += x_step;
    }

    // Axes.
    writeln!(
        w,
        "  <line x1=\"{MARGIN_LEFT:.2}\" y1=\"{MARGIN_TOP:.2}\" x2=\"{MARGIN_LEFT:.2}\" y2=\"{bottom:.2}\" stroke=\"#202020\" stroke-width=\"1.5\"/>"
    )
    .unwrap();
    writeln!(
        w,
        "  <line x1=\"{MARGIN_LEFT:.2}\" y1=\"{bottom:.2}\" x2=\"{right:.2}\" y2=\"{bottom:.2}\" stroke=\"#202020\" stroke-width=\"1.5\"/>"
    )
    .unwrap();

    // Axis labels.
    writeln!(
        w,
        "  <text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#202020\">{}</text>",
        MARGIN_LEFT + plot_w / 2.0,
        CHART_HEIGHT - 16.0,
        xml_escape(&spec.x_label)
    )
    .unwrap();
    writeln!(
        w,
        "  <text x=\"22\" y=\"{:.2}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#202020\" transform=\"rotate(-90 22 {:.2})\">{}</text>",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        xml_escape(&spec.y_label)
    )
    .unwrap();

    // Series polylines, point markers, legend.
    for (index, series) in spec.series.iter().enumerate() {
        let color = PALETTE[index % PALETTE.len()];
        let coords: Vec<String> = series
            .points
            .iter()
            .map(|&(n, v)| format!("{:.2},{:.2}", fx(n), fy(v)))
            .collect();
        writeln!(
            w,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>",
            coords.join(" ")
        )
        .unwrap();
        for &(n, v) in &series.points {
            writeln!(
                w,
                "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{color}\"/>",
                fx(n),
                fy(v)
            )
            .unwrap();
        }
        let legend_y = MARGIN_TOP + 10.0 + index as f64 * 22.0;
        writeln!(
            w,
            "  <line x1=\"{:.2}\" y1=\"{legend_y:.2}\" x2=\"{:.2}\" y2=\"{legend_y:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>",
            right + 12.0,
            right + 40.0
        )
        .unwrap();
        writeln!(
            w,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#202020\">{}</text>",
            right + 46.0,
            legend_y + 4.0,
            xml_escape(&series.label)
        )
        .unwrap();
    }

    writeln!(w, "</svg>").unwrap();
    Ok(svg)
}

/// Renders the chart and writes it to `out_path`.
pub fn emit_chart(spec: &ChartSpec, out_path: &Path) -> Result<(), ReportError> {
    let svg = render_chart(spec)?;
    fs::write(out_path, svg)?;
    Ok(())
}

fn xml_escape(text: &str) -> String {
    let mut escaped = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => escaped.push_str("&amp;"),
            '<' => escaped.push_str("&lt;"),
            '>' => escaped.push_str("&gt;"),
            '"' => escaped.push_str("&quot;"),
            '\'' => escaped.push_str("&apos;"),
            other => escaped.push(other),
        }
    }
    escaped
}

/// Formats `value` with the given number of significant digits, trimming
/// trailing fractional zeros (`2.00000` → `2`). Values at or above 10^sig
/// keep all their integer digits rather than switching to scientific
/// notation; benchmark times never get that large.
pub fn format_sig(value: f64, significant: u32) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    let exponent = value.abs().log10().floor() as i32;
    let decimals = (significant as i32 - 1 - exponent).max(0) as usize;
    let formatted = format!("{value:.decimals$}");
    if formatted.contains('.') {
        formatted
            .trim_end_matches('0')
            .trim_end_matches('.')
            .to_string()
    } else {
        formatted
    }
}

/// Formats summaries as an aligned text table: one row per mode, one column
/// per board size, cells showing mean seconds to six significant digits. The
/// fastest mode in each column is starred; absent cells show `-`.
pub fn emit_table(summaries: &[BenchSummary]) -> String {
    let mut sizes: Vec<usize> = summaries.iter().map(|s| s.n.get()).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let modes: Vec<ModeKind> = ModeKind::ALL
        .into_iter()
        .filter(|&mode| summaries.iter().any(|s| s.mode == mode))
        .collect();
    if sizes.is_empty() || modes.is_empty() {
        return String::new();
    }

    let mean_at = |mode: ModeKind, n: usize| {
        summaries
            .iter()
            .find(|s| s.mode == mode && s.n.get() == n)
            .map(|s| s.mean_seconds)
    };
    let fastest_at: Vec<Option<f64>> = sizes
        .iter()
        .map(|&n| {
            modes
                .iter()
                .filter_map(|&mode| mean_at(mode, n))
                .fold(None, |best: Option<f64>, v| {
                    Some(best.map_or(v, |b| b.min(v)))
                })
        })
        .collect();

    // Build all cell texts first, then align.
    let header: Vec<String> = std::iter::once("mode".to_string())
        .chain(sizes.iter().map(|n| format!("n={n}")))
        .collect();
    let mut rows: Vec<Vec<String>> = vec![header];
    for &mode in &modes {
        let mut row = vec![mode.label().to_string()];
        for (column, &n) in sizes.iter().enumerate() {
            let cell = match mean_at(mode, n) {
                None => "-".to_string(),
                Some(mean) => {
                    let text = format_sig(mean, 6);
                    if Some(mean) == fastest_at[column] {
                        format!("{text}*")
                    } else {
                        text
                    }
                }
            };
            row.push(cell);
        }
        rows.push(row);
    }

    let widths: Vec<usize> = (0..rows[0].len())
        .map(|column| rows.iter().map(|row| row[column].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &rows {
        let mut line = String::new();
        for (column, cell) in row.iter().enumerate() {
            if column > 0 {
                line.push_str("  ");
            }
            if column == 0 {
                line.push_str(&format!("{cell:<width$}", width = widths[column]));
            } else {
                line.push_str(&format!("{cell:>width$}", width = widths[column]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Renders a placement as `n` lines of `n` cells, `Q` for queens and `.` for
/// empty squares.
pub fn render_board(placement: &Placement) -> String {
    let n = placement.board_size().get();
    let mut out = String::with_capacity(n * (n + 1));
    for &column in placement.columns() {
        for cell in 0..n {
            out.push(if cell == column { 'Q' } else { '.' });
        }
        out.push('\n');
    }
    out
}

/// Parses the output of [`render_board`] back into a placement, validating
/// cell characters, line widths, queen counts, and the placement itself.
pub fn parse_board(text: &str) -> Result<Placement, ReportError> {
    let lines: Vec<&str> = text.lines().collect();
    let n = lines.len();
    let mut columns = Vec::with_capacity(n);
    for (row, line) in lines.iter().enumerate() {
        let mut width = 0;
        let mut queens = Vec::new();
        for (cell, c) in line.chars().enumerate() {
            width += 1;
            match c {
                'Q' => queens.push(cell),
                '.' => {}
                found => return Err(ReportError::BoardBadCell { row, found }),
            }
        }
        if width != n {
            return Err(ReportError::BoardLineWidth {
                row,
                expected: n,
                actual: width,
            });
        }
        match queens.as_slice() {
            &[column] => columns.push(column),
            _ => {
                return Err(ReportError::BoardQueensPerRow {
                    row,
                    count: queens.len(),
                })
            }
        }
    }
    Ok(Placement::new(columns)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{enumerate_solutions, BoardSize};
    use proptest::prelude::*;

    fn summary(n: usize, mode: ModeKind, mean: f64) -> BenchSummary {
        BenchSummary {
            n: BoardSize::new(n),
            mode,
            trials: 3,
            mean_seconds: mean,
            variance_seconds: 0.0,
        }
    }

    fn two_point_spec(scale: Scale) -> ChartSpec {
        ChartSpec {
            title: "t".to_string(),
            x_label: "x".to_string(),
            y_label: "y".to_string(),
            scale,
            series: vec![Series {
                label: "seq".to_string(),
                points: vec![(8, 0.5), (9, 2.0)],
            }],
        }
    }

    #[test]
    fn single_series_renders_one_polyline() {
        let svg = render_chart(&two_point_spec(Scale::Linear)).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(svg.starts_with("<svg xmlns="));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn scales_share_x_coordinates_but_not_y() {
        let linear = render_chart(&two_point_spec(Scale::Linear)).unwrap();
        let log = render_chart(&two_point_spec(Scale::Log10)).unwrap();
        let extract = |svg: &str, attr: &str| -> Vec<String> {
            svg.lines()
                .filter(|l| l.contains("<circle"))
                .map(|l| {
                    let start = l.find(attr).unwrap() + attr.len();
                    l[start..].split('"').nth(1).unwrap().to_string()
                })
                .collect()
        };
        assert_eq!(extract(&linear, "cx="), extract(&log, "cx="));
        assert_ne!(extract(&linear, "cy="), extract(&log, "cy="));
    }

    #[test]
    fn identical_specs_render_identical_bytes() {
        let spec = ChartSpec::from_summaries(
            &[
                summary(8, ModeKind::Sequential, 0.011),
                summary(9, ModeKind::Sequential, 0.052),
                summary(8, ModeKind::Para, 0.009),
                summary(9, ModeKind::Para, 0.031),
            ],
            Scale::Log10,
        );
        assert_eq!(render_chart(&spec).unwrap(), render_chart(&spec).unwrap());
    }

    #[test]
    fn empty_series_list_is_rejected() {
        let spec = ChartSpec {
            title: String::new(),
            x_label: String::new(),
            y_label: String::new(),
            scale: Scale::Linear,
            series: vec![],
        };
        assert!(matches!(render_chart(&spec), Err(ReportError::NoSeries)));
    }

    #[test]
    fn log_scale_rejects_nonpositive_values() {
        let mut spec = two_point_spec(Scale::Log10);
        spec.series[0].points[0].1 = 0.0;
        assert!(matches!(
            render_chart(&spec),
            Err(ReportError::NonPositiveOnLogScale { n: 8, .. })
        ));
        // The same data is fine on a linear scale.
        spec.scale = Scale::Linear;
        render_chart(&spec).unwrap();
    }

    #[test]
    fn chart_escapes_xml_in_labels() {
        let mut spec = two_point_spec(Scale::Linear);
        spec.title = "a<b & \"c\"".to_string();
        let svg = render_chart(&spec).unwrap();
        assert!(svg.contains("a&lt;b &amp; &quot;c&quot;"));
        assert!(!svg.contains("a<b"));
    }

    #[test]
    fn from_summaries_orders_series_and_points() {
        let spec = ChartSpec::from_summaries(
            &[
                summary(9, ModeKind::Pool, 3.0),
                summary(8, ModeKind::Pool, 1.0),
                summary(8, ModeKind::Sequential, 2.0),
            ],
            Scale::Linear,
        );
        let labels: Vec<&str> = spec.series.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, vec!["seq", "pool"]);
        assert_eq!(spec.series[1].points, vec![(8, 1.0), (9, 3.0)]);
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_sig(1.67399, 6), "1.67399");
        assert_eq!(format_sig(546.312, 6), "546.312");
        assert_eq!(format_sig(75.5948, 6), "75.5948");
        assert_eq!(format_sig(0.00009, 6), "0.00009");
        assert_eq!(format_sig(2.0, 6), "2");
        assert_eq!(format_sig(0.0, 6), "0");
        assert_eq!(format_sig(0.123456789, 6), "0.123457");
        assert_eq!(format_sig(1234567.0, 6), "1234567");
    }

    #[test]
    fn table_single_summary() {
        let text = emit_table(&[summary(8, ModeKind::Sequential, 1.67399)]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].contains("n=8"));
        assert!(lines[1].starts_with("seq"));
        assert!(lines[1].contains("1.67399*"));
    }

    #[test]
    fn table_marks_fastest_per_column_and_fills_gaps() {
        let text = emit_table(&[
            summary(8, ModeKind::Sequential, 0.5),
            summary(8, ModeKind::Para, 0.25),
            summary(9, ModeKind::Sequential, 2.0),
        ]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        let seq = lines[1];
        let para = lines[2];
        assert!(seq.contains("0.5") && !seq.contains("0.5*"));
        assert!(seq.contains("2*"));
        assert!(para.contains("0.25*"));
        assert!(para.trim_end().ends_with('-'));
    }

    #[test]
    fn table_rows_follow_mode_order_not_input_order() {
        let text = emit_table(&[
            summary(8, ModeKind::Pool, 1.0),
            summary(8, ModeKind::Sequential, 2.0),
        ]);
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[1].starts_with("seq"));
        assert!(lines[2].starts_with("pool"));
    }

    #[test]
    fn empty_table_is_empty() {
        assert_eq!(emit_table(&[]), "");
    }

    #[test]
    fn board_single_cell() {
        let placement = Placement::new(vec![0]).unwrap();
        assert_eq!(render_board(&placement), "Q\n");
    }

    #[test]
    fn board_n4_layout() {
        let placement = Placement::new(vec![1, 3, 0, 2]).unwrap();
        assert_eq!(render_board(&placement), ".Q..\n...Q\nQ...\n..Q.\n");
    }

    #[test]
    fn every_n8_solution_renders_eight_queens() {
        for placement in enumerate_solutions(BoardSize::new(8), None) {
            let board = render_board(&placement);
            assert_eq!(board.matches('Q').count(), 8);
            assert_eq!(board.lines().count(), 8);
        }
    }

    #[test]
    fn parse_rejects_malformed_boards() {
        assert!(matches!(
            parse_board(".Q\nQ.x"),
            Err(ReportError::BoardBadCell { row: 1, found: 'x' })
        ));
        assert!(matches!(
            parse_board(".Q.\nQ.."),
            Err(ReportError::BoardLineWidth {
                row: 0,
                expected: 2,
                actual: 3
            })
        ));
        assert!(matches!(
            parse_board("QQ\n.."),
            Err(ReportError::BoardQueensPerRow { row: 0, count: 2 })
        ));
        // Structurally fine, but the queens attack each other.
        assert!(matches!(
            parse_board("Q.\n.Q"),
            Err(ReportError::BoardInvalidPlacement(_))
        ));
    }

    proptest! {
        // Rendering then parsing returns the original placement.
        #[test]
        fn board_round_trip(n in 1usize..=8) {
            for placement in enumerate_solutions(BoardSize::new(n), Some(5)) {
                let parsed = parse_board(&render_board(&placement)).unwrap();
                prop_assert_eq!(parsed, placement);
            }
        }
    }
}
