//! Fixed workloads shared by the benchmarks.

use flagcav_core::engine::{cases_within, SweepBounds};
use flagcav_core::{HodgeNumbers, RealFormCase};

/// Every case within the sweep bounds of rank `rank`.
pub fn sweep_cases(rank: usize) -> Vec<RealFormCase> {
    cases_within(&SweepBounds::from_rank(rank))
}

/// The largest single-case reports in the default sweep.
pub fn heavy_cases() -> Vec<RealFormCase> {
    vec![
        RealFormCase::SoOddOdd { p: 3, q: 4 },
        RealFormCase::SoEvenEven { p: 3, q: 4 },
        RealFormCase::SpReal { r: 8 },
        RealFormCase::SlReal { m: 12 },
    ]
}

/// Weight-3 data `(1, g)`, which reduce to sp(g + 1, R).
pub fn one_g(gs: &[usize]) -> Vec<HodgeNumbers> {
    gs.iter()
        .map(|&g| HodgeNumbers::from_upper(3, &[1, g]).expect("valid Hodge numbers"))
        .collect()
}
