//! The orbit pipeline: extremal weights of the normal bundle fiber at a base
//! cycle, their index, and the resulting ampleness and concavity numbers.
//!
//! This path uses no case-specific formulas. It is the reference against
//! which the closed forms are checked.

use std::fmt;

use rayon::prelude::*;

use crate::error::{FlagError, Result};
use crate::real_forms::{
    build_model, cycle_weyl, enumerate_cycles, Branch, CaseModel, CycleParam, RealFormCase,
};
use crate::weight::{is_positive_restricted, weight_index, SignedPermutation, Weight};

/// Which highest-weight pieces attain the minimum index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchUse {
    S,
    Plus,
    Minus,
    Both,
}

impl fmt::Display for BranchUse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BranchUse::S => "s",
            BranchUse::Plus => "plus",
            BranchUse::Minus => "minus",
            BranchUse::Both => "both",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmplenessReport {
    pub case: RealFormCase,
    pub cycle: CycleParam,
    /// `dim C - a`, the index of the negated extremal set.
    pub ind: usize,
    pub dim_cycle: usize,
    pub codim: usize,
    pub ampleness: usize,
    pub concavity_degree: usize,
    pub extremal_count: usize,
    pub branch_used: BranchUse,
    pub witness: Weight,
}

/// Orbit points `mu` whose pullback `w^{-1}(mu)` is a positive restricted
/// root, tagged with the branch they came from. Sorted.
pub fn extremal_weights(model: &CaseModel, w: &SignedPermutation) -> Result<Vec<(Weight, Branch)>> {
    if w.rank() != model.coord_rank {
        return Err(FlagError::LengthMismatch {
            left: model.coord_rank,
            right: w.rank(),
        });
    }
    let mut out = Vec::new();
    for (orbit, branch) in model.orbits() {
        for mu in orbit {
            if is_positive_restricted(&w.apply_inverse(mu)?)? {
                out.push((mu.clone(), *branch));
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalIndex {
    pub ind: usize,
    pub witness: Weight,
    pub branch_used: BranchUse,
    pub extremal_count: usize,
}

/// Minimum of `ind(-mu)` over the extremal set, with the smallest weight
/// attaining it as witness.
pub fn index_of_extremal(model: &CaseModel, w: &SignedPermutation) -> Result<ExtremalIndex> {
    let ext = extremal_weights(model, w)?;
    let mut best: Option<(usize, &Weight)> = None;
    let mut hit = [false; 3];
    for (mu, _) in &ext {
        let v = weight_index(&-mu, &model.k_roots);
        if best.is_none_or(|(b, _)| v < b) {
            best = Some((v, mu));
        }
    }
    let (ind, witness) = best.ok_or_else(|| {
        FlagError::Consistency(format!(
            "empty extremal set for signed permutation {:?} / {:?}",
            w.images(),
            w.signs()
        ))
    })?;
    for (mu, branch) in &ext {
        if weight_index(&-mu, &model.k_roots) == ind {
            hit[*branch as usize] = true;
        }
    }
    let branch_used = match hit {
        [true, _, _] => BranchUse::S,
        [false, true, true] => BranchUse::Both,
        [false, true, false] => BranchUse::Plus,
        _ => BranchUse::Minus,
    };
    Ok(ExtremalIndex {
        ind,
        witness: witness.clone(),
        branch_used,
        extremal_count: ext.len(),
    })
}

pub(crate) fn report_with_model(
    case: &RealFormCase,
    model: &CaseModel,
    cycle: &CycleParam,
    w: &SignedPermutation,
) -> Result<AmplenessReport> {
    let x = index_of_extremal(model, w)?;
    if x.ind > model.dim_cycle {
        return Err(FlagError::Consistency(format!(
            "{case} {cycle}: index {} exceeds cycle dimension {}",
            x.ind, model.dim_cycle
        )));
    }
    let codim = model.ambient_positive_count - model.dim_cycle;
    let ampleness = model.dim_cycle - x.ind;
    Ok(AmplenessReport {
        case: *case,
        cycle: cycle.clone(),
        ind: x.ind,
        dim_cycle: model.dim_cycle,
        codim,
        ampleness,
        concavity_degree: codim + ampleness + 1,
        extremal_count: x.extremal_count,
        branch_used: x.branch_used,
        witness: x.witness,
    })
}

pub fn ampleness_report(case: &RealFormCase, cycle: &CycleParam) -> Result<AmplenessReport> {
    let model = build_model(case)?;
    let w = cycle_weyl(case, cycle)?;
    report_with_model(case, &model, cycle, &w)
}

/// Reports for every base cycle of one case, in enumeration order.
pub fn case_reports(case: &RealFormCase) -> Result<Vec<AmplenessReport>> {
    let model = build_model(case)?;
    enumerate_cycles(case)
        .iter()
        .map(|c| report_with_model(case, &model, c, &cycle_weyl(case, c)?))
        .collect()
}

/// Limits for the case sweep. `pq` bounds `p + q` for su, so and sp(p, q);
/// `sp_real` bounds r; `sl_real` and `sl_quat` bound m.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    pub pq: usize,
    pub sp_real: usize,
    pub sl_real: usize,
    pub sl_quat: usize,
}

impl Default for SweepBounds {
    fn default() -> Self {
        SweepBounds::from_rank(7)
    }
}

impl SweepBounds {
    /// Bounds derived from one number: `p + q <= R`, `r <= R + 1`,
    /// `m <= 2R - 2` for sl(m, R) and `m <= R - 1` for sl(m, H). At `R = 7`
    /// this gives 7, 8, 12 and 6.
    pub fn from_rank(rank: usize) -> Self {
        SweepBounds {
            pq: rank,
            sp_real: rank + 1,
            sl_real: (2 * rank).saturating_sub(2),
            sl_quat: rank.saturating_sub(1),
        }
    }
}

/// Every valid case inside the bounds, in a fixed order.
pub fn cases_within(b: &SweepBounds) -> Vec<RealFormCase> {
    let mut out = Vec::new();
    out.extend((2..=b.sl_real).map(|m| RealFormCase::SlReal { m }));
    let mut pq_cases = Vec::new();
    for n in 1..=b.pq {
        for p in 0..=n {
            let q = n - p;
            pq_cases.extend([
                RealFormCase::Su { p, q },
                RealFormCase::SoOddOdd { p, q },
                RealFormCase::SoEvenOdd { p, q },
                RealFormCase::SoEvenEven { p, q },
                RealFormCase::SpQuat { p, q },
            ]);
        }
    }
    pq_cases.sort();
    out.extend(pq_cases);
    out.extend((1..=b.sp_real).map(|r| RealFormCase::SpReal { r }));
    out.extend((2..=b.sl_quat).map(|m| RealFormCase::SlQuat { m }));
    out.retain(|c| c.validate().is_ok());
    out
}

/// Run `f` on a dedicated pool with `threads` workers, or on the global
/// pool when `threads` is 0.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

/// Reports for every cycle of every case, concatenated in case order. The
/// result does not depend on `threads`.
pub fn sweep(cases: &[RealFormCase], threads: usize) -> Result<Vec<AmplenessReport>> {
    let per_case: Vec<Result<Vec<AmplenessReport>>> =
        with_threads(threads, || cases.par_iter().map(case_reports).collect());
    let mut out = Vec::new();
    for r in per_case {
        out.extend(r?);
    }
    Ok(out)
}
