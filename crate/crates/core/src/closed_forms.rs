//! Hook-length formulas for the index, row by row, and the sweep that
//! checks them against the orbit engine.
//!
//! For an index set `j` of size `p` in `{1..p+q}`, write `j_1 < ... < j_p`
//! followed by the complement `j_{p+1} < ... < j_{p+q}`. Pairs `(a, b)` with
//! `a <= p < b` split into colored pairs (`j_a < j_b`) and uncolored pairs
//! (`j_a > j_b`). The quantity `b - a` is the hook length of the matching
//! box in a `p x q` Young diagram, which [`young_diagram`] builds directly.
//!
//! [`closed_form_index`] evaluates one row per real form. A hook term only
//! takes part in a minimum when its pair set is nonempty. Read literally,
//! with an empty minimum counted as 0, several rows undershoot the orbit
//! engine at the extreme index sets; [`literal_table_value`] keeps that
//! reading so the difference stays testable.

use std::fmt;

use crate::engine::{case_reports, cases_within, with_threads, SweepBounds};
use crate::error::{FlagError, Result};
use crate::real_forms::{
    enumerate_cycles, full_sequence, validate_cycle, CycleParam, RealFormCase,
};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookData {
    pub p: usize,
    pub q: usize,
    pub subset: Vec<usize>,
    /// Smallest `b - a` over colored pairs, 0 when there are none.
    pub min_colored_hook: usize,
    /// Largest `b - a` over uncolored pairs, 0 when there are none.
    pub max_uncolored_hook: usize,
    pub has_colored: bool,
    pub has_uncolored: bool,
    /// `min_colored_hook - 1 + p`.
    pub plus_value: i64,
    /// `(p + q) - max_uncolored_hook - 1 + q`.
    pub minus_value: i64,
}

fn check_subset(subset: &[usize], p: usize, q: usize) -> Result<()> {
    if p == 0 || q == 0 {
        return Err(FlagError::InvalidSubset(format!(
            "hook data needs p >= 1 and q >= 1, got p={p}, q={q}"
        )));
    }
    if subset.len() != p {
        return Err(FlagError::InvalidSubset(format!(
            "expected {p} indices, got {}",
            subset.len()
        )));
    }
    if subset.windows(2).any(|w| w[0] >= w[1]) {
        return Err(FlagError::InvalidSubset(
            "indices must be distinct and sorted".into(),
        ));
    }
    if let Some(x) = subset.iter().find(|&&x| x < 1 || x > p + q) {
        return Err(FlagError::InvalidSubset(format!(
            "index {x} outside 1..={}",
            p + q
        )));
    }
    Ok(())
}

pub fn hook_data(subset: &[usize], p: usize, q: usize) -> Result<HookData> {
    check_subset(subset, p, q)?;
    let seq = full_sequence(subset, p + q);
    let mut colored: Option<usize> = None;
    let mut uncolored: Option<usize> = None;
    for a in 1..=p {
        for b in p + 1..=p + q {
            let h = b - a;
            if seq[a - 1] < seq[b - 1] {
                colored = Some(colored.map_or(h, |c| c.min(h)));
            } else {
                uncolored = Some(uncolored.map_or(h, |c| c.max(h)));
            }
        }
    }
    let h_plus = colored.unwrap_or(0);
    let h_minus = uncolored.unwrap_or(0);
    let (pi, qi) = (p as i64, q as i64);
    Ok(HookData {
        p,
        q,
        subset: subset.to_vec(),
        min_colored_hook: h_plus,
        max_uncolored_hook: h_minus,
        has_colored: colored.is_some(),
        has_uncolored: uncolored.is_some(),
        plus_value: h_plus as i64 - 1 + pi,
        minus_value: (pi + qi) - h_minus as i64 - 1 + qi,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct YoungCell {
    pub hook: usize,
    pub colored: bool,
}

/// A `p x q` rectangle. Columns carry `j_1..j_p` left to right and rows
/// carry `j_{p+1}..j_{p+q}` bottom to top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YoungDiagram {
    pub column_labels: Vec<usize>,
    pub row_labels: Vec<usize>,
    /// `cells[t][c]`: row `t` counted from the top, column `c` from the left.
    pub cells: Vec<Vec<YoungCell>>,
}

pub fn young_diagram(subset: &[usize], p: usize, q: usize) -> Result<YoungDiagram> {
    check_subset(subset, p, q)?;
    let seq = full_sequence(subset, p + q);
    let column_labels = seq[..p].to_vec();
    let row_labels = seq[p..].to_vec();
    let mut cells = Vec::with_capacity(q);
    for t in 0..q {
        let row_label = row_labels[q - 1 - t];
        let legs_below = q - 1 - t;
        let row = (0..p)
            .map(|c| YoungCell {
                hook: (p - 1 - c) + legs_below + 1,
                colored: column_labels[c] < row_label,
            })
            .collect();
        cells.push(row);
    }
    Ok(YoungDiagram {
        column_labels,
        row_labels,
        cells,
    })
}

impl YoungDiagram {
    pub fn min_colored_hook(&self) -> usize {
        self.cells
            .iter()
            .flatten()
            .filter(|c| c.colored)
            .map(|c| c.hook)
            .min()
            .unwrap_or(0)
    }

    pub fn max_uncolored_hook(&self) -> usize {
        self.cells
            .iter()
            .flatten()
            .filter(|c| !c.colored)
            .map(|c| c.hook)
            .max()
            .unwrap_or(0)
    }
}

/// Plain-text rendering; colored boxes carry a `*`.
impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.row_labels.len();
        let labels: Vec<String> = (0..q)
            .map(|t| format!("{}", self.row_labels[q - 1 - t]))
            .collect();
        let lw = labels.iter().map(String::len).max().unwrap_or(1);
        let cw = self
            .cells
            .iter()
            .flatten()
            .map(|c| c.hook.to_string().len() + 1)
            .chain(self.column_labels.iter().map(|j| j.to_string().len()))
            .max()
            .unwrap_or(2);
        for (t, row) in self.cells.iter().enumerate() {
            write!(f, "{:>lw$} |", labels[t])?;
            for cell in row {
                let s = format!("{}{}", cell.hook, if cell.colored { "*" } else { "" });
                write!(f, " {s:>cw$}")?;
            }
            writeln!(f)?;
        }
        write!(f, "{:>lw$} +", "")?;
        for _ in &self.column_labels {
            write!(f, "-{}", "-".repeat(cw))?;
        }
        writeln!(f)?;
        write!(f, "{:>lw$}  ", "")?;
        for j in &self.column_labels {
            write!(f, " {j:>cw$}")?;
        }
        writeln!(f)
    }
}

/// `(min colored hook, max uncolored hook)` read off the diagram.
pub fn hook_data_young(subset: &[usize], p: usize, q: usize) -> Result<(usize, usize)> {
    let d = young_diagram(subset, p, q)?;
    Ok((d.min_colored_hook(), d.max_uncolored_hook()))
}

fn min_present(terms: &[Option<i64>]) -> Result<usize> {
    let v = terms
        .iter()
        .flatten()
        .min()
        .copied()
        .ok_or_else(|| FlagError::Consistency("no hook term is present".into()))?;
    usize::try_from(v)
        .map_err(|_| FlagError::Consistency(format!("negative closed-form value {v}")))
}

/// The hook row for so(2p, l), shared with period domains.
///
/// `l` odd uses `min{I+ - 1, I-}`, `l` even uses `min{I+ - 1, I- - 1}`, and
/// `q = floor(l / 2) = 0` gives `p - 1`. Terms whose pair set is empty are
/// left out. Any `p >= 1` is accepted, including `p > q`.
pub fn so_even_hook_index(p: usize, q: usize, ell_odd: bool, subset: &[usize]) -> Result<usize> {
    if q == 0 {
        if subset.len() != p || p == 0 {
            return Err(FlagError::InvalidSubset(format!("expected {p} indices")));
        }
        return Ok(p - 1);
    }
    let h = hook_data(subset, p, q)?;
    let shift = if ell_odd { 0 } else { 1 };
    min_present(&[
        h.has_colored.then_some(h.plus_value - 1),
        h.has_uncolored.then_some(h.minus_value - shift),
    ])
}

/// Closed-form value of `dim C - a` for one base cycle.
pub fn closed_form_index(case: &RealFormCase, cycle: &CycleParam) -> Result<usize> {
    case.validate()?;
    validate_cycle(case, cycle)?;
    let s = &cycle.subset;
    Ok(match *case {
        RealFormCase::SlReal { m } => (m - 1) / 2,
        RealFormCase::SlQuat { m } => m,
        RealFormCase::SpReal { r } => s.len().min(r - s.len()),
        RealFormCase::Su { p, q } => {
            let h = hook_data(s, p, q)?;
            min_present(&[
                h.has_colored.then_some(h.min_colored_hook as i64 - 1),
                h.has_uncolored
                    .then_some((p + q) as i64 - h.max_uncolored_hook as i64 - 1),
            ])?
        }
        RealFormCase::SoOddOdd { p: 0, q } => q,
        RealFormCase::SoOddOdd { p, q } | RealFormCase::SpQuat { p, q } => {
            let h = hook_data(s, p, q)?;
            min_present(&[
                h.has_colored.then_some(h.plus_value),
                h.has_uncolored.then_some(h.minus_value),
            ])?
        }
        RealFormCase::SoEvenOdd { p, q: 0 } => p - 1,
        RealFormCase::SoEvenOdd { p: 1, .. } => s[0] - 1,
        // The last position is where the D_q chain forks, so it sits one
        // level below where the chain count would put it.
        RealFormCase::SoEvenEven { p: 1, q } if s[0] == q + 1 => q - 1,
        RealFormCase::SoEvenEven { p: 1, .. } => s[0] - 1,
        RealFormCase::SoEvenOdd { p: 2, q } | RealFormCase::SoEvenEven { p: 2, q }
            if s[1] <= q + 1 =>
        {
            let (j, k) = (s[0], s[1]);
            if j + 1 != k {
                j + 1
            } else {
                j
            }
        }
        RealFormCase::SoEvenOdd { p, q } => so_even_hook_index(p, q, true, s)?,
        RealFormCase::SoEvenEven { p, q } => so_even_hook_index(p, q, false, s)?,
    })
}

/// The table rows read literally: an empty hook minimum or maximum counts
/// as 0, the su(1, q) row is `min{j, q - j - 1}` with `j` one less than the
/// chosen index, and the so(4, q) row is only defined for `k <= q + 1`
/// (`None` outside it). Kept to document where this reading and the orbit
/// engine part ways.
pub fn literal_table_value(case: &RealFormCase, cycle: &CycleParam) -> Result<Option<i64>> {
    case.validate()?;
    validate_cycle(case, cycle)?;
    let s = &cycle.subset;
    let hook = |p, q| hook_data(s, p, q);
    Ok(Some(match *case {
        RealFormCase::SlReal { m } => ((m - 1) / 2) as i64,
        RealFormCase::SlQuat { m } => m as i64,
        RealFormCase::SpReal { r } => s.len().min(r - s.len()) as i64,
        RealFormCase::Su { p: 1, q } => {
            let j = s[0] as i64 - 1;
            j.min(q as i64 - j - 1)
        }
        RealFormCase::Su { p, q } => {
            let h = hook(p, q)?;
            (h.plus_value - p as i64).min(h.minus_value - q as i64)
        }
        RealFormCase::SoOddOdd { p: 0, q } => q as i64,
        RealFormCase::SoOddOdd { p, q } | RealFormCase::SpQuat { p, q } => {
            let h = hook(p, q)?;
            h.plus_value.min(h.minus_value)
        }
        RealFormCase::SoEvenOdd { p, q: 0 } => p as i64 - 1,
        RealFormCase::SoEvenOdd { p: 1, .. } | RealFormCase::SoEvenEven { p: 1, .. } => {
            s[0] as i64 - 1
        }
        RealFormCase::SoEvenOdd { p: 2, q } | RealFormCase::SoEvenEven { p: 2, q } => {
            let (j, k) = (s[0] as i64, s[1] as i64);
            if k > q as i64 + 1 {
                return Ok(None);
            }
            if j + 1 != k {
                j + 1
            } else {
                j
            }
        }
        RealFormCase::SoEvenOdd { p, q } => {
            let h = hook(p, q)?;
            (h.plus_value - 1).min(h.minus_value)
        }
        RealFormCase::SoEvenEven { p, q } => {
            let h = hook(p, q)?;
            (h.plus_value - 1).min(h.minus_value - 1)
        }
    }))
}

/// A cycle where the closed form and the engine disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub case: RealFormCase,
    pub cycle: CycleParam,
    pub engine: usize,
    pub closed: std::result::Result<usize, String>,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.closed {
            Ok(v) => write!(
                f,
                "{} {}: engine {} closed {}",
                self.case, self.cycle, self.engine, v
            ),
            Err(e) => write!(
                f,
                "{} {}: engine {} closed failed: {}",
                self.case, self.cycle, self.engine, e
            ),
        }
    }
}

/// Outcome of a comparison sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepOutcome {
    pub checked: usize,
    pub discrepancies: Vec<Discrepancy>,
}

/// Compare `closed` against the engine on every cycle inside `bounds`.
pub fn verify_sweep_with<F>(bounds: &SweepBounds, threads: usize, closed: F) -> Result<SweepOutcome>
where
    F: Fn(&RealFormCase, &CycleParam) -> Result<usize> + Sync,
{
    let cases = cases_within(bounds);
    let per_case: Vec<Result<(usize, Vec<Discrepancy>)>> = with_threads(threads, || {
        cases
            .par_iter()
            .map(|case| {
                let reports = case_reports(case)?;
                let mut bad = Vec::new();
                for r in &reports {
                    let c = closed(case, &r.cycle).map_err(|e| e.to_string());
                    if c.as_ref() != Ok(&r.ind) {
                        bad.push(Discrepancy {
                            case: *case,
                            cycle: r.cycle.clone(),
                            engine: r.ind,
                            closed: c,
                        });
                    }
                }
                Ok((reports.len(), bad))
            })
            .collect()
    });
    let mut out = SweepOutcome {
        checked: 0,
        discrepancies: Vec::new(),
    };
    for r in per_case {
        let (n, bad) = r?;
        out.checked += n;
        out.discrepancies.extend(bad);
    }
    Ok(out)
}

/// [`closed_form_index`] against the engine on every cycle inside `bounds`.
pub fn verify_sweep(bounds: &SweepBounds, threads: usize) -> Result<SweepOutcome> {
    verify_sweep_with(bounds, threads, closed_form_index)
}

/// Number of cycles a sweep over `bounds` visits.
pub fn sweep_size(bounds: &SweepBounds) -> usize {
    cases_within(bounds)
        .iter()
        .map(|c| enumerate_cycles(c).len())
        .sum()
}
