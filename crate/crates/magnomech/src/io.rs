//! CSV serialization of single-point reports and sweep results.
//!
//! All numbers are written with 12 significant digits and `\n` newlines, in
//! deterministic grid-major order with the pair order ab, am, bm. Axis values
//! are written in user units (Hz for frequency-like axes, K, dimensionless).

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::constants::TWO_PI;
use crate::error::Result;
use crate::measures::CorrelationReport;
use crate::sweep::{AxisSpec, PointRecord, SweepResult};

/// 12-significant-digit scientific formatting.
pub fn format_value(v: f64) -> String {
    format!("{v:.11e}")
}

fn axis_user_value(axis: &AxisSpec, internal: f64) -> f64 {
    if axis.param.is_frequency_like() {
        internal / TWO_PI
    } else {
        internal
    }
}

pub const HEADER_1D: &str = "axis,pair,E_N,S_AtoB,S_BtoA,S_asym,classification,stable";
pub const HEADER_2D: &str = "x,y,pair,quantity,value";
pub const HEADER_POINT: &str = "pair,E_N,S_AtoB,S_BtoA,S_asym,classification,stable";

fn report_fields(report: &CorrelationReport) -> String {
    format!(
        "{},{},{},{},{},{}",
        report.pair_name(),
        format_value(report.e_n),
        format_value(report.s_ab),
        format_value(report.s_ba),
        format_value(report.s_asym),
        report.classification
    )
}

/// Single-point output: one row per bipartition.
pub fn write_point<W: Write>(w: &mut W, record: &PointRecord) -> Result<()> {
    writeln!(w, "{HEADER_POINT}")?;
    match &record.reports {
        Some(reports) => {
            for report in reports {
                writeln!(w, "{},true", report_fields(report))?;
            }
        }
        None => {
            for pair in ["ab", "am", "bm"] {
                writeln!(w, "{pair},,,,,,false")?;
            }
        }
    }
    Ok(())
}

/// 1D sweep: `axis,pair,E_N,S_AtoB,S_BtoA,S_asym,classification,stable`, one
/// row per (grid point, pair). Unstable points keep their rows with empty
/// measure fields.
pub fn write_sweep_1d<W: Write>(w: &mut W, result: &SweepResult) -> Result<()> {
    writeln!(w, "{HEADER_1D}")?;
    for (i, record) in result.records.iter().enumerate() {
        let axis = format_value(axis_user_value(&result.axes[0], result.grids[0][i]));
        match &record.reports {
            Some(reports) => {
                for report in reports {
                    writeln!(w, "{axis},{},true", report_fields(report))?;
                }
            }
            None => {
                for pair in ["ab", "am", "bm"] {
                    writeln!(w, "{axis},{pair},,,,,,false")?;
                }
            }
        }
    }
    Ok(())
}

const QUANTITIES: [&str; 4] = ["E_N", "S_AtoB", "S_BtoA", "S_asym"];

/// 2D sweep in long format: `x,y,pair,quantity,value` rows, grid-major, pairs
/// ab/am/bm, then one `stable` row per (point, pair).
pub fn write_sweep_2d<W: Write>(w: &mut W, result: &SweepResult) -> Result<()> {
    writeln!(w, "{HEADER_2D}")?;
    let ny = result.grids[1].len();
    for (idx, record) in result.records.iter().enumerate() {
        let x = format_value(axis_user_value(&result.axes[0], result.grids[0][idx / ny]));
        let y = format_value(axis_user_value(&result.axes[1], result.grids[1][idx % ny]));
        match &record.reports {
            Some(reports) => {
                for report in reports {
                    let pair = report.pair_name();
                    let values = [report.e_n, report.s_ab, report.s_ba, report.s_asym];
                    for (q, v) in QUANTITIES.iter().zip(values) {
                        writeln!(w, "{x},{y},{pair},{q},{}", format_value(v))?;
                    }
                    writeln!(w, "{x},{y},{pair},stable,1")?;
                }
            }
            None => {
                for pair in ["ab", "am", "bm"] {
                    for q in QUANTITIES {
                        writeln!(w, "{x},{y},{pair},{q},")?;
                    }
                    writeln!(w, "{x},{y},{pair},stable,0")?;
                }
            }
        }
    }
    Ok(())
}

/// Write a sweep result (1D or 2D schema as appropriate) to a file.
pub fn emit_csv(result: &SweepResult, path: &Path) -> Result<()> {
    let file = File::create(path)?;
    let mut w = BufWriter::new(file);
    match result.axes.len() {
        1 => write_sweep_1d(&mut w, result)?,
        _ => write_sweep_2d(&mut w, result)?,
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::SystemParams;
    use crate::sweep::{evaluate_point, sweep, AxisSpec, SweepParam};

    #[test]
    fn single_point_has_three_data_rows() {
        let record = evaluate_point(&SystemParams::defaults()).unwrap();
        let mut buf = Vec::new();
        write_point(&mut buf, &record).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.trim_end().lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], HEADER_POINT);
        assert!(lines[1].starts_with("ab,"));
        assert!(lines[2].starts_with("am,"));
        assert!(lines[3].starts_with("bm,"));
    }

    #[test]
    fn one_dimensional_schema_and_row_count() {
        let base = SystemParams::defaults();
        let axis = AxisSpec {
            param: SweepParam::Temperature,
            start: 0.0,
            stop: 1.0,
            points: 4,
        };
        let result = sweep(&base, &[axis]).unwrap();
        let mut buf = Vec::new();
        write_sweep_1d(&mut buf, &result).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.trim_end().lines().collect();
        assert_eq!(lines.len(), 1 + 4 * 3);
        assert_eq!(lines[0], HEADER_1D);
    }

    #[test]
    fn two_dimensional_row_count() {
        let base = SystemParams::defaults();
        let ax = AxisSpec {
            param: SweepParam::DeltaA,
            start: -2.0 * base.omega_m,
            stop: 0.0,
            points: 3,
        };
        let ay = AxisSpec {
            param: SweepParam::DeltaBTilde,
            start: 0.0,
            stop: 2.0 * base.omega_m,
            points: 3,
        };
        let result = sweep(&base, &[ax, ay]).unwrap();
        let mut buf = Vec::new();
        write_sweep_2d(&mut buf, &result).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.trim_end().lines().collect();
        // 3x3 points, 3 pairs, 4 quantities + 1 stable row each.
        assert_eq!(lines.len(), 1 + 9 * 3 * 5);
        // 9*3 rows per quantity.
        let en_rows = lines.iter().filter(|l| l.contains(",E_N,")).count();
        assert_eq!(en_rows, 27);
    }

    #[test]
    fn values_round_trip_at_twelve_digits() {
        let record = evaluate_point(&SystemParams::defaults()).unwrap();
        let mut buf = Vec::new();
        write_point(&mut buf, &record).unwrap();
        let text = String::from_utf8(buf).unwrap();
        for line in text.trim_end().lines().skip(1) {
            for field in line.split(',').skip(1).take(4) {
                let parsed: f64 = field.parse().unwrap();
                assert_eq!(format_value(parsed), field);
            }
        }
    }

    #[test]
    fn newline_is_lf_only() {
        let record = evaluate_point(&SystemParams::defaults()).unwrap();
        let mut buf = Vec::new();
        write_point(&mut buf, &record).unwrap();
        assert!(!buf.contains(&b'\r'));
    }
}
