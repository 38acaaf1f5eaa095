//! Every cross-check in one pass, sized by a single rank bound.

use itertools::Itertools;
use rayon::prelude::*;

use crate::closed_forms::{
    closed_form_index, hook_data, hook_data_young, verify_sweep_with, SweepOutcome,
};
use crate::engine::{cases_within, with_threads, SweepBounds};
use crate::error::Result;
use crate::period::{hodge_grid, period_report};
use crate::real_forms::{build_model, CycleParam, RealFormCase};
use crate::weight::{weight_index, weight_index_bfs};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifySummary {
    pub rank: usize,
    pub bounds: SweepBounds,
    pub closed_form: SweepOutcome,
    pub index_checked: usize,
    pub index_mismatches: Vec<String>,
    pub hook_checked: usize,
    pub hook_mismatches: Vec<String>,
    pub period_checked: usize,
    pub period_failures: Vec<String>,
}

impl VerifySummary {
    pub fn discrepancy_count(&self) -> usize {
        self.closed_form.discrepancies.len()
            + self.index_mismatches.len()
            + self.hook_mismatches.len()
            + self.period_failures.len()
    }

    pub fn is_clean(&self) -> bool {
        self.discrepancy_count() == 0
    }
}

/// Hook sets are checked up to `p + q <= rank + 3`, period data up to
/// weight `rank + 1` and total dimension `2 rank + 2`.
pub fn verify_all_with<F>(rank: usize, threads: usize, closed: F) -> Result<VerifySummary>
where
    F: Fn(&RealFormCase, &CycleParam) -> Result<usize> + Sync,
{
    let bounds = SweepBounds::from_rank(rank);
    let closed_form = verify_sweep_with(&bounds, threads, closed)?;

    let cases = cases_within(&bounds);
    let per_case: Vec<Result<(usize, Vec<String>)>> = with_threads(threads, || {
        cases
            .par_iter()
            .map(|case| {
                let model = build_model(case)?;
                let mut n = 0;
                let mut bad = Vec::new();
                for (orbit, _) in model.orbits() {
                    for mu in orbit {
                        let (a, b) = (
                            weight_index(mu, &model.k_roots),
                            weight_index_bfs(mu, &model.k_roots),
                        );
                        if a != b {
                            bad.push(format!("{case} {mu}: counted {a}, walked {b}"));
                        }
                        n += 1;
                    }
                }
                Ok((n, bad))
            })
            .collect()
    });
    let mut index_checked = 0;
    let mut index_mismatches = Vec::new();
    for r in per_case {
        let (n, bad) = r?;
        index_checked += n;
        index_mismatches.extend(bad);
    }

    let mut hook_checked = 0;
    let mut hook_mismatches = Vec::new();
    for total in 2..=rank + 3 {
        for p in 1..total {
            for s in (1..=total).combinations(p) {
                let a = hook_data(&s, p, total - p)?;
                let b = hook_data_young(&s, p, total - p)?;
                if (a.min_colored_hook, a.max_uncolored_hook) != b {
                    hook_mismatches.push(format!("p={p} q={} {s:?}", total - p));
                }
                hook_checked += 1;
            }
        }
    }

    let grid = hodge_grid(rank + 1, 2 * rank + 2);
    let period_failures: Vec<String> = with_threads(threads, || {
        grid.par_iter()
            .filter_map(|h| period_report(h, false).err().map(|e| format!("{h}: {e}")))
            .collect()
    });

    Ok(VerifySummary {
        rank,
        bounds,
        closed_form,
        index_checked,
        index_mismatches,
        hook_checked,
        hook_mismatches,
        period_checked: grid.len(),
        period_failures,
    })
}

pub fn verify_all(rank: usize, threads: usize) -> Result<VerifySummary> {
    verify_all_with(rank, threads, closed_form_index)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rank_is_clean() {
        let s = verify_all(4, 1).unwrap();
        assert!(s.is_clean(), "{s:?}");
        assert!(
            s.closed_form.checked > 0
                && s.index_checked > 0
                && s.hook_checked > 0
                && s.period_checked > 0
        );
    }

    #[test]
    fn broken_closed_form_is_counted() {
        let s = verify_all_with(3, 1, |c, cy| closed_form_index(c, cy).map(|v| v + 1)).unwrap();
        assert_eq!(s.discrepancy_count(), s.closed_form.checked);
    }
}
