use std::io::{self, Write};

use crate::theodorus::Verdict;

use super::{CoverageStats, LessonReport, StopReason, LIMITING_CONCLUSIVE_DENSITY};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
}

fn reason_slug(verdict: &Verdict) -> String {
    match verdict {
        Verdict::ProvedRational { root } => format!("square_of_{root}"),
        Verdict::ProvedIrrational(reason) => reason.slug(),
        Verdict::Inconclusive => "remainder_1_not_square".to_owned(),
    }
}

/// Writes the remainder table. CSV is `n,remainder_mod8,verdict,reason`
/// with LF line endings.
pub fn render_table(report: &LessonReport, format: Format, out: &mut impl Write) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "n,remainder_mod8,verdict,reason")?;
            for e in &report.examined {
                writeln!(out, "{},{},{},{}", e.n, e.remainder, e.verdict.slug(), reason_slug(&e.verdict))?;
            }
        }
        Format::Text => {
            let width = report
                .examined
                .iter()
                .map(|e| e.n.to_string().len())
                .max()
                .unwrap_or(0)
                .max(1);
            writeln!(out, "{:>width$} | mod 8 | verdict", "n")?;
            writeln!(out, "{}-+-------+---------", "-".repeat(width))?;
            for e in &report.examined {
                writeln!(out, "{:>width$} | {:>5} | {}", e.n, e.remainder, e.verdict)?;
            }
            match (&report.stop, report.stop_reason) {
                (Some(n), StopReason::FirstInconclusive) => {
                    writeln!(out, "stopped at {n}: first case the remainder cannot settle")?
                }
                (Some(n), StopReason::RangeExhausted) => writeln!(out, "range exhausted at {n}")?,
                (None, _) => writeln!(out, "no integers in range")?,
            }
            writeln!(out, "steps charged: {}", report.total_steps)?;
        }
    }
    Ok(())
}

pub fn render_coverage(stats: &CoverageStats, format: Format, out: &mut impl Write) -> io::Result<()> {
    let (num, den) = &stats.fraction;
    match format {
        Format::Csv => {
            writeln!(out, "range_max,conclusive,inconclusive,fraction_conclusive")?;
            writeln!(out, "{},{},{},{num}/{den}", stats.range_max, stats.conclusive, stats.inconclusive)?;
        }
        Format::Text => {
            let bp = stats.basis_points();
            let (whole, frac) = (&bp / 100, &bp % 100);
            let (ln, ld) = LIMITING_CONCLUSIVE_DENSITY;
            writeln!(out, "range: 1..={}", stats.range_max)?;
            writeln!(out, "conclusive: {}", stats.conclusive)?;
            writeln!(out, "inconclusive: {}", stats.inconclusive)?;
            writeln!(out, "fraction conclusive: {num}/{den} ({whole}.{frac:0>2}%, rounded down)")?;
            writeln!(out, "limiting fraction over all n: {ln}/{ld}; over odd n only: 7/8")?;
            writeln!(out, "a round figure such as 80% is only an approximation of these exact values")?;
            let shown: Vec<String> = stats.inconclusive_cases.iter().take(12).map(|n| n.to_string()).collect();
            if !shown.is_empty() {
                let more = if stats.inconclusive_cases.len() > shown.len() { ", ..." } else { "" };
                writeln!(out, "inconclusive cases: {}{more}", shown.join(", "))?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Natural;
    use crate::lesson::{coverage_stats, run_lesson, LessonConfig};

    fn render(report: &LessonReport, format: Format) -> String {
        let mut buf = Vec::new();
        render_table(report, format, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_first_row() {
        let report = run_lesson(&LessonConfig::default()).unwrap().report;
        let csv = render(&report, Format::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[1], "3,3,proved_irrational,odd_remainder_not_1");
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn empty_range_is_header_only() {
        let cfg = LessonConfig {
            limit: Natural::from(1u64),
            ..LessonConfig::default()
        };
        let report = run_lesson(&cfg).unwrap().report;
        assert_eq!(render(&report, Format::Csv), "n,remainder_mod8,verdict,reason\n");
    }

    #[test]
    fn text_lists_lesson_rows() {
        let report = run_lesson(&LessonConfig::default()).unwrap().report;
        let text = render(&report, Format::Text);
        let firsts: Vec<&str> = text
            .lines()
            .skip(2)
            .take(8)
            .map(|l| l.split('|').next().unwrap().trim())
            .collect();
        assert_eq!(firsts, ["3", "5", "7", "9", "11", "13", "15", "17"]);
        assert!(text.contains("stopped at 17"));
    }

    #[test]
    fn coverage_csv() {
        let stats = coverage_stats(&Natural::from(17u64)).unwrap();
        let mut buf = Vec::new();
        render_coverage(&stats, Format::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "range_max,conclusive,inconclusive,fraction_conclusive\n17,16,1,16/17\n"
        );
    }
}
