//! The counting sequences `s_n, b_n, c_n, d_n` and the finite inequalities
//! that relate them.
//!
//! Every inequality here is a theorem, so a failure means a counting bug.
//! Integer inequalities are checked exactly in `u128`; the one involving
//! `x_c` multiplies `d_n` by `x_c^n` computed exactly in `Q(ζ₄₈)` and only
//! then rounds to `f64`, whose relative error (about `1e-16`) is many orders
//! of magnitude below the slack at desk scale.

use std::io::Write;

use serde::Serialize;
use thiserror::Error;

use crate::cyclotomic::x_c;
use crate::enumerate::{class_counts, Budget, EnumError, WalkClass};

/// `2cos(π/8)`, the connective constant.
pub const MU: f64 = 1.847_759_065_022_573_5;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("table has rows up to n = {have}, but n = {need} is required")]
    MissingRows { have: usize, need: usize },
    #[error("a table needs at least 4 rows (got n_max = {0})")]
    TooSmall(usize),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SequenceRow {
    pub n: usize,
    pub s: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    /// `s_n^(1/n)`.
    pub s_root: f64,
    /// `s_n / s_{n-1}`, with `s_0 = 1`.
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SequenceTable {
    rows: Vec<SequenceRow>,
}

impl SequenceTable {
    /// Assembles a table from count vectors indexed by `n` (index 0 unused).
    pub fn from_counts(s: &[u64], b: &[u64], c: &[u64], d: &[u64]) -> Self {
        let n_max = [s.len(), b.len(), c.len(), d.len()]
            .into_iter()
            .min()
            .unwrap_or(1)
            - 1;
        let rows = (1..=n_max)
            .map(|n| {
                let prev = if n == 1 { 1 } else { s[n - 1] };
                SequenceRow {
                    n,
                    s: s[n],
                    b: b[n],
                    c: c[n],
                    d: d[n],
                    s_root: (s[n] as f64).powf(1.0 / n as f64),
                    ratio: s[n] as f64 / prev as f64,
                }
            })
            .collect();
        Self { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SequenceRow] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> Option<&SequenceRow> {
        n.checked_sub(1).and_then(|i| self.rows.get(i))
    }

    fn need(&self, n: usize) -> Result<&SequenceRow, BoundsError> {
        self.row(n).ok_or(BoundsError::MissingRows {
            have: self.n_max(),
            need: n,
        })
    }

    /// Writes the header `n,s,b,c,d,s_root,ratio` and one line per row.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), BoundsError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["n", "s", "b", "c", "d", "s_root", "ratio"])?;
        for r in &self.rows {
            w.write_record([
                r.n.to_string(),
                r.s.to_string(),
                r.b.to_string(),
                r.c.to_string(),
                r.d.to_string(),
                significant(r.s_root, 12),
                significant(r.ratio, 12),
            ])?;
        }
        w.flush().map_err(csv::Error::from)?;
        Ok(())
    }
}

/// Formats `x` with `digits` significant digits in positional notation.
pub fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Counts all four classes for `n ≤ n_max`.
pub fn build_table(n_max: usize, budget: &Budget) -> Result<SequenceTable, BoundsError> {
    if n_max < 4 {
        return Err(BoundsError::TooSmall(n_max));
    }
    let s = class_counts(WalkClass::Free, n_max, budget)?;
    let b = class_counts(WalkClass::StartEdge, n_max, budget)?;
    let c = class_counts(WalkClass::HalfPlane, n_max, budget)?;
    let d = class_counts(WalkClass::Trapezoidal, n_max, budget)?;
    Ok(SequenceTable::from_counts(&s, &b, &c, &d))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityCheck {
    pub name: &'static str,
    pub n: usize,
    pub holds: bool,
    /// Right side minus left side.
    pub slack: f64,
}

impl InequalityCheck {
    fn integer(name: &'static str, n: usize, lhs: u128, rhs: u128, strict: bool) -> Self {
        Self {
            name,
            n,
            holds: if strict { lhs < rhs } else { lhs <= rhs },
            slack: rhs as f64 - lhs as f64,
        }
    }
}

/// Smallest integer `i` with `i ≥ √(n/6)`.
pub fn sqrt_n_over_6_ceil(n: usize) -> usize {
    (0..).find(|&i| 6 * i * i >= n).expect("terminates")
}

/// `b_n ≤ c_{n+1} + Σ_{i=1}^{n+3} c_i c_{n+4-i}`.
pub fn b_bound(t: &SequenceTable, n: usize) -> Result<InequalityCheck, BoundsError> {
    t.need(n + 3)?;
    let c = |i: usize| t.row(i).map_or(0, |r| r.c) as u128;
    let rhs = c(n + 1) + (1..=n + 3).map(|i| c(i) * c(n + 4 - i)).sum::<u128>();
    Ok(InequalityCheck::integer(
        "b_bound",
        n,
        t.need(n)?.b as u128,
        rhs,
        false,
    ))
}

/// `c_n ≤ Σ_{i=⌈√(n/6)⌉}^{n+1} d_i c_{n+2-i} + Σ_{i=⌈√(n/6)⌉}^{n+3} d_i c_{n+4-i}`.
pub fn c_recurrence(t: &SequenceTable, n: usize) -> Result<InequalityCheck, BoundsError> {
    t.need(n + 3)?;
    let c = |i: usize| t.row(i).map_or(0, |r| r.c) as u128;
    let d = |i: usize| t.row(i).map_or(0, |r| r.d) as u128;
    let lo = sqrt_n_over_6_ceil(n).max(1);
    let first: u128 = (lo..=n + 1).map(|i| d(i) * c(n + 2 - i)).sum();
    let second: u128 = (lo..=n + 3).map(|i| d(i) * c(n + 4 - i)).sum();
    Ok(InequalityCheck::integer(
        "c_recurrence",
        n,
        c(n),
        first + second,
        false,
    ))
}

/// `d_n < 4n x_c^{-n}`, checked as `d_n x_c^n < 4n`.
pub fn d_bound(t: &SequenceTable, n: usize) -> Result<InequalityCheck, BoundsError> {
    let d = t.need(n)?.d;
    let scaled = x_c().pow(n as u32).to_complex().re * d as f64;
    let limit = 4.0 * n as f64;
    Ok(InequalityCheck {
        name: "d_bound",
        n,
        holds: scaled < limit,
        slack: limit - scaled,
    })
}

/// Every finitely checkable inequality at every index the table supports.
pub fn check_inequalities(t: &SequenceTable) -> Result<Vec<InequalityCheck>, BoundsError> {
    let n_max = t.n_max();
    if n_max < 4 {
        return Err(BoundsError::MissingRows {
            have: n_max,
            need: 4,
        });
    }
    let mut out = Vec::new();
    for row in t.rows() {
        let n = row.n;
        out.push(InequalityCheck::integer(
            "s_equals_3b",
            n,
            row.s as u128,
            3 * row.b as u128,
            false,
        ));
        out.push(InequalityCheck::integer(
            "s_equals_3b_reverse",
            n,
            3 * row.b as u128,
            row.s as u128,
            false,
        ));
        out.push(InequalityCheck::integer(
            "c_le_b",
            n,
            row.c as u128,
            row.b as u128,
            false,
        ));
        out.push(InequalityCheck::integer(
            "d_le_c",
            n,
            row.d as u128,
            row.c as u128,
            false,
        ));
        out.push(d_bound(t, n)?);
        if n + 3 <= n_max {
            out.push(b_bound(t, n)?);
            if n >= 3 {
                out.push(c_recurrence(t, n)?);
            }
        }
        // worst split m + (n - m)
        if n >= 2 {
            let worst = (1..n)
                .map(|m| t.row(m).unwrap().s as u128 * t.row(n - m).unwrap().s as u128)
                .min()
                .expect("n >= 2");
            out.push(InequalityCheck::integer(
                "submultiplicative",
                n,
                row.s as u128,
                worst,
                false,
            ));
        }
        out.push(InequalityCheck {
            name: "root_above_mu",
            n,
            holds: row.s_root >= MU - 1e-9,
            slack: row.s_root - (MU - 1e-9),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MuEstimates {
    pub mu: f64,
    /// `(n, s_n^(1/n), s_n / s_{n-1})` per row.
    pub rows: Vec<(usize, f64, f64)>,
    /// Rows where `s_n^(1/n) < μ - 1e-9`; always empty unless counts are wrong.
    pub flagged: Vec<usize>,
}

pub fn mu_estimates(t: &SequenceTable) -> MuEstimates {
    MuEstimates {
        mu: MU,
        rows: t.rows().iter().map(|r| (r.n, r.s_root, r.ratio)).collect(),
        flagged: t
            .rows()
            .iter()
            .filter(|r| r.s_root < MU - 1e-9)
            .map(|r| r.n)
            .collect(),
    }
}
