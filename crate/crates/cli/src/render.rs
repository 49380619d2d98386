//! Text, JSON and CSV renderings of each subcommand's result.

use std::fmt::Write as _;

use anyhow::Result;
use hexwalk::bounds::{significant, InequalityCheck, MuEstimates, SequenceTable};
use hexwalk::enumerate::WindingCensus;
use hexwalk::identity::VerificationReport;
use hexwalk::lattice::Vertex;
use serde::Serialize;
use serde_json::json;

use crate::{Class, Format};

fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn class_name(class: Class) -> &'static str {
    match class {
        Class::S => "s",
        Class::B => "b",
        Class::C => "c",
        Class::D => "d",
    }
}

pub fn count(format: Format, class: Class, n: usize, value: u64) -> Result<String> {
    let name = class_name(class);
    Ok(match format {
        Format::Text => format!("{value}\n"),
        Format::Json => to_json(&json!({ "class": name, "n": n, "count": value }))?,
        Format::Csv => format!("class,n,count\n{name},{n},{value}\n"),
    })
}

/// Renders the census; the flag says whether every closed SAW had
/// `r* = ±6` with both signs equally often.
pub fn census(
    format: Format,
    root: Vertex,
    max_len: u32,
    census: &WindingCensus,
) -> Result<(String, bool)> {
    let all_pm6 = census
        .values()
        .all(|by_r| by_r.keys().all(|r| r.abs() == 6));
    let balanced = census
        .values()
        .all(|by_r| by_r.get(&6).copied().unwrap_or(0) == by_r.get(&-6).copied().unwrap_or(0));
    let total: u64 = census.values().flat_map(|by_r| by_r.values()).sum();
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for (len, by_r) in census {
                for (r, c) in by_r {
                    writeln!(s, "length {len}  r* {r:+}  count {c}")?;
                }
            }
            writeln!(
                s,
                "total {total}; all r* = ±6: {all_pm6}; signs balanced: {balanced}"
            )?;
            s
        }
        Format::Json => {
            let rows: Vec<_> = census
                .iter()
                .flat_map(|(len, by_r)| {
                    by_r.iter()
                        .map(move |(r, c)| json!({ "length": len, "r_star": r, "count": c }))
                })
                .collect();
            to_json(&json!({
                "root": [root.p, root.q],
                "max_len": max_len,
                "total": total,
                "all_pm6": all_pm6,
                "balanced": balanced,
                "counts": rows,
            }))?
        }
        Format::Csv => {
            let mut s = String::from("length,r_star,count\n");
            for (len, by_r) in census {
                for (r, c) in by_r {
                    writeln!(s, "{len},{r},{c}")?;
                }
            }
            s
        }
    };
    Ok((text, all_pm6 && balanced))
}

pub fn reports(format: Format, reports: &[VerificationReport], single: bool) -> Result<String> {
    Ok(match format {
        Format::Json if single && reports.len() == 1 => to_json(&reports[0])?,
        Format::Json => to_json(reports)?,
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let j = r.j.map(|j| format!(" j={j}")).unwrap_or_default();
                let verdict = if r.verified { "verified" } else { "MISMATCH" };
                write!(
                    s,
                    "{} {}{} N={}: {verdict} ({} walks, {} cycles)",
                    r.statement, r.domain, j, r.order, r.walks, r.cycles
                )?;
                if let Some(m) = &r.mismatch {
                    let at = m.power.map(|p| format!(" at x^{p}")).unwrap_or_default();
                    write!(s, "; first difference{at}: {} vs {}", m.lhs, m.rhs)?;
                }
                s.push('\n');
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("statement,domain,j,N,verified,walks,cycles\n");
            for r in reports {
                let j = r.j.map(|j| j.to_string()).unwrap_or_default();
                writeln!(
                    s,
                    "{},{},{j},{},{},{},{}",
                    r.statement, r.domain, r.order, r.verified, r.walks, r.cycles
                )?;
            }
            s
        }
    })
}

pub fn bounds(
    format: Format,
    table: &SequenceTable,
    checks: &[InequalityCheck],
    mu: &MuEstimates,
) -> Result<String> {
    Ok(match format {
        Format::Csv => {
            let mut buf = Vec::new();
            table.write_csv(&mut buf)?;
            String::from_utf8(buf)?
        }
        Format::Json => to_json(&json!({
            "table": table.rows(),
            "inequalities": checks,
            "mu": mu,
        }))?,
        Format::Text => {
            let mut s = String::new();
            writeln!(
                s,
                "{:>3} {:>12} {:>12} {:>12} {:>12} {:>14} {:>14}",
                "n", "s", "b", "c", "d", "s^(1/n)", "ratio"
            )?;
            for r in table.rows() {
                writeln!(
                    s,
                    "{:>3} {:>12} {:>12} {:>12} {:>12} {:>14} {:>14}",
                    r.n,
                    r.s,
                    r.b,
                    r.c,
                    r.d,
                    significant(r.s_root, 12),
                    significant(r.ratio, 12)
                )?;
            }
            let failed: Vec<_> = checks.iter().filter(|c| !c.holds).collect();
            writeln!(
                s,
                "{} inequality checks, {} failed",
                checks.len(),
                failed.len()
            )?;
            for c in failed {
                writeln!(s, "  FAILED {} at n = {} (slack {})", c.name, c.n, c.slack)?;
            }
            s
        }
    })
}
