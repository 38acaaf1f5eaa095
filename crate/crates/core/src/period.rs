//! Period domains of polarized Hodge structures as flag domains.
//!
//! Odd weight `n = 2k + 1` gives `Sp(m, R)` with `m = f^{k+1}`. Even weight
//! `n = 2k` gives `SO(m_e, m_o)`, realized as so(2p, l) with the rank-`2p`
//! factor carried by the blocks of one parity. The base cycle is the one
//! whose index set lists the flag positions of those blocks.

use std::fmt;

use crate::closed_forms::so_even_hook_index;
use crate::engine::{report_with_model, AmplenessReport};
use crate::error::{FlagError, Result};
use crate::real_forms::{build_model_unchecked, cycle_weyl, CycleParam, RealFormCase};
use crate::weight::{simple_coordinates, AmbientFamily};

/// Hodge numbers `h^{r, n-r}` for `r = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HodgeNumbers {
    weight: usize,
    h: Vec<usize>,
}

impl HodgeNumbers {
    /// From the full list `h^{0,n}, ..., h^{n,0}`.
    pub fn new(weight: usize, h: Vec<usize>) -> Result<Self> {
        if weight < 1 {
            return Err(FlagError::InvalidHodge("weight must be at least 1".into()));
        }
        if h.len() != weight + 1 {
            return Err(FlagError::InvalidHodge(format!(
                "weight {weight} needs {} numbers, got {}",
                weight + 1,
                h.len()
            )));
        }
        if (0..=weight).any(|r| h[r] != h[weight - r]) {
            return Err(FlagError::InvalidHodge("h^{r,s} must equal h^{s,r}".into()));
        }
        if h.iter().sum::<usize>() < 2 {
            return Err(FlagError::InvalidHodge(
                "total dimension must be at least 2".into(),
            ));
        }
        Ok(HodgeNumbers { weight, h })
    }

    /// From `h^{n,0}, h^{n-1,1}, ..., h^{ceil(n/2), floor(n/2)}`; the rest
    /// follows by symmetry.
    pub fn from_upper(weight: usize, upper: &[usize]) -> Result<Self> {
        let want = weight / 2 + 1;
        if upper.len() != want {
            return Err(FlagError::InvalidHodge(format!(
                "weight {weight} takes {want} numbers h^{{n,0}}..h^{{{},{}}}, got {}",
                weight.div_ceil(2),
                weight / 2,
                upper.len()
            )));
        }
        let mut h = vec![0; weight + 1];
        for (i, &x) in upper.iter().enumerate() {
            h[weight - i] = x;
            h[i] = x;
        }
        HodgeNumbers::new(weight, h)
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// `h^{r, n-r}`.
    pub fn get(&self, r: usize) -> usize {
        self.h[r]
    }

    pub fn total(&self) -> usize {
        self.h.iter().sum()
    }

    /// The upper half, in the input order of [`HodgeNumbers::from_upper`].
    pub fn upper(&self) -> Vec<usize> {
        (0..=self.weight / 2)
            .map(|i| self.h[self.weight - i])
            .collect()
    }
}

impl fmt::Display for HodgeNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u: Vec<String> = self.upper().iter().map(|x| x.to_string()).collect();
        write!(f, "n={} h=({})", self.weight, u.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeriodGroup {
    Sp { m: usize },
    So { m_e: usize, m_o: usize },
}

impl fmt::Display for PeriodGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeriodGroup::Sp { m } => write!(f, "Sp({m},R)"),
            PeriodGroup::So { m_e, m_o } => write!(f, "SO({m_e},{m_o})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodModel {
    pub hodge: HodgeNumbers,
    /// `n = 2k + 1` or `n = 2k`.
    pub k: usize,
    /// `f[r] = h^{n,0} + ... + h^{r,n-r}` for `r = 0..=n+1`, with `f[n+1] = 0`.
    pub f: Vec<usize>,
    pub group: PeriodGroup,
    pub case: RealFormCase,
    pub p: usize,
    pub q: usize,
    /// Size of the second orthogonal factor (even weight only).
    pub ell: Option<usize>,
    /// Odd and even parts of `m` (odd weight only).
    pub h_odd: Option<usize>,
    pub h_even: Option<usize>,
    /// Index set of the base cycle, size `p` (or `h_even`/`h_odd` for Sp).
    pub subset: Vec<usize>,
    /// Marked simple-root positions, ascending.
    pub marked: Vec<usize>,
    pub ambient: AmbientFamily,
    pub ambient_rank: usize,
}

/// Flag positions `f^{r+1}+1 ..= f^r` of the block `V^{r, n-r}`.
fn block_positions(f: &[usize], r: usize) -> std::ops::RangeInclusive<usize> {
    f[r + 1] + 1..=f[r]
}

pub fn derive(hodge: &HodgeNumbers) -> Result<PeriodModel> {
    let n = hodge.weight();
    let k = n / 2;
    let mut f = vec![0; n + 2];
    for r in (0..=n).rev() {
        f[r] = f[r + 1] + hodge.get(r);
    }
    let mut marked: Vec<usize> = (k + 1..=n).map(|r| f[r]).filter(|&x| x > 0).collect();
    marked.sort_unstable();
    marked.dedup();

    // Parity of the blocks that carry the index set.
    let carrier = if k % 2 == 1 { 0 } else { 1 };
    let subset: Vec<usize> = (k + 1..=n)
        .filter(|r| r % 2 == carrier)
        .flat_map(|r| block_positions(&f, r))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();

    let point = || FlagError::InvalidHodge(format!("{hodge}: the period domain is a point"));
    if n % 2 == 1 {
        let m = f[k + 1];
        if m == 0 {
            return Err(point());
        }
        let sum_parity = |par: usize| {
            (k + 1..=n)
                .filter(|r| r % 2 == par)
                .map(|r| hodge.get(r))
                .sum()
        };
        let h_odd: usize = sum_parity(1);
        let h_even: usize = sum_parity(0);
        Ok(PeriodModel {
            hodge: hodge.clone(),
            k,
            f,
            group: PeriodGroup::Sp { m },
            case: RealFormCase::SpReal { r: m },
            p: subset.len(),
            q: m - subset.len(),
            ell: None,
            h_odd: Some(h_odd),
            h_even: Some(h_even),
            subset,
            marked,
            ambient: AmbientFamily::C,
            ambient_rank: m,
        })
    } else {
        let m_e: usize = (0..=n).filter(|r| r % 2 == 0).map(|r| hodge.get(r)).sum();
        let m_o: usize = (0..=n).filter(|r| r % 2 == 1).map(|r| hodge.get(r)).sum();
        let (two_p, ell) = if k % 2 == 1 { (m_e, m_o) } else { (m_o, m_e) };
        let p = two_p / 2;
        let q = ell / 2;
        if p == 0 || ell == 0 {
            return Err(point());
        }
        debug_assert_eq!(subset.len(), p);
        let (case, ambient) = if ell % 2 == 1 {
            (RealFormCase::SoEvenOdd { p, q }, AmbientFamily::B)
        } else {
            (RealFormCase::SoEvenEven { p, q }, AmbientFamily::D)
        };
        Ok(PeriodModel {
            hodge: hodge.clone(),
            k,
            f,
            group: PeriodGroup::So { m_e, m_o },
            case,
            p,
            q,
            ell: Some(ell),
            h_odd: None,
            h_even: None,
            subset,
            marked,
            ambient,
            ambient_rank: p + q,
        })
    }
}

/// Closed-form index of the base cycle: `min{h_odd, h_even}` for odd
/// weight, the so(2p, l) hook row for even weight.
pub fn period_closed_form(model: &PeriodModel) -> Result<usize> {
    match (model.h_odd, model.h_even, model.ell) {
        (Some(o), Some(e), _) => Ok(o.min(e)),
        (_, _, Some(ell)) => so_even_hook_index(model.p, model.q, ell % 2 == 1, &model.subset),
        _ => Err(FlagError::Consistency(
            "period model without group data".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodReport {
    pub model: PeriodModel,
    /// Engine report for the plain cycle on the full flag manifold.
    pub engine: AmplenessReport,
    /// Engine index of the primed cycle, for orthogonal groups.
    pub primed_ind: Option<usize>,
    pub closed: usize,
    /// Dimension of the base cycle in the period domain itself.
    pub cycle_dim: Option<usize>,
}

impl PeriodReport {
    pub fn ind(&self) -> usize {
        self.engine.ind
    }
}

/// Engine and closed form for the base cycle of a period domain. Both
/// variants of the orthogonal cycle are run and must agree with each other
/// and with the closed form.
pub fn period_report(hodge: &HodgeNumbers, with_dim: bool) -> Result<PeriodReport> {
    let model = derive(hodge)?;
    let case_model = build_model_unchecked(&model.case)?;
    let plain = CycleParam::plain(model.subset.clone());
    let engine = report_with_model(
        &model.case,
        &case_model,
        &plain,
        &cycle_weyl(&model.case, &plain)?,
    )?;
    let primed_ind = match model.case {
        RealFormCase::SpReal { .. } => None,
        _ => {
            let primed = CycleParam::new(model.subset.clone(), true);
            let w = cycle_weyl(&model.case, &primed)?;
            Some(report_with_model(&model.case, &case_model, &primed, &w)?.ind)
        }
    };
    if let Some(v) = primed_ind.filter(|&v| v != engine.ind) {
        return Err(FlagError::Consistency(format!(
            "{hodge}: plain cycle index {} but primed cycle index {v}",
            engine.ind
        )));
    }
    let closed = period_closed_form(&model)?;
    if closed != engine.ind {
        return Err(FlagError::Consistency(format!(
            "{hodge}: engine index {} but closed form {closed}",
            engine.ind
        )));
    }
    let cycle_dim = if with_dim {
        Some(cycle_dim_gq(&model)?)
    } else {
        None
    };
    Ok(PeriodReport {
        model,
        engine,
        primed_ind,
        closed,
        cycle_dim,
    })
}

/// Number of compact roots (both signs) whose pullback has a negative
/// coefficient sum over the marked simple roots. This is the dimension of
/// the base cycle in the period domain.
pub fn cycle_dim_gq(model: &PeriodModel) -> Result<usize> {
    let case_model = build_model_unchecked(&model.case)?;
    let w = cycle_weyl(&model.case, &CycleParam::plain(model.subset.clone()))?;
    let rank = model.ambient_rank;
    if model.marked.iter().any(|&d| d < 1 || d > rank) {
        return Err(FlagError::Consistency(format!(
            "marked positions {:?} exceed rank {rank}",
            model.marked
        )));
    }
    let mut count = 0;
    for beta in case_model.k_roots.positive_roots() {
        for alpha in [beta.clone(), -beta] {
            let n = simple_coordinates(&w.apply_inverse(&alpha)?, model.ambient, rank)?;
            let s: i64 = model.marked.iter().map(|&d| n[d - 1]).sum();
            if s < 0 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Every Hodge vector with weight `1..=max_weight` and total dimension at
/// most `max_total` that gives a nontrivial period domain.
pub fn hodge_grid(max_weight: usize, max_total: usize) -> Vec<HodgeNumbers> {
    fn fill(n: usize, upper: &mut Vec<usize>, budget: usize, out: &mut Vec<HodgeNumbers>) {
        let len = n / 2 + 1;
        if upper.len() == len {
            if let Ok(h) = HodgeNumbers::from_upper(n, upper) {
                if derive(&h).is_ok() {
                    out.push(h);
                }
            }
            return;
        }
        // Every entry but the middle one of even weight appears twice.
        let cost = if n.is_multiple_of(2) && upper.len() == len - 1 {
            1
        } else {
            2
        };
        for x in 0..=budget / cost {
            upper.push(x);
            fill(n, upper, budget - cost * x, out);
            upper.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=max_weight {
        fill(n, &mut Vec::new(), max_total, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, upper: &[usize]) -> HodgeNumbers {
        HodgeNumbers::from_upper(n, upper).unwrap()
    }

    #[test]
    fn weight_three_one_g() {
        for g in [1, 2, 5] {
            let m = derive(&h(3, &[1, g])).unwrap();
            assert_eq!(m.case, RealFormCase::SpReal { r: 1 + g });
            assert_eq!(m.subset, (2..=g + 1).collect::<Vec<_>>());
            assert_eq!(period_closed_form(&m).unwrap(), 1);
        }
    }

    #[test]
    fn k3() {
        let m = derive(&h(2, &[1, 20])).unwrap();
        assert_eq!(m.case, RealFormCase::SoEvenEven { p: 1, q: 10 });
        assert_eq!(m.subset, vec![1]);
        assert_eq!(m.marked, vec![1]);
        assert_eq!(period_closed_form(&m).unwrap(), 0);
        let r = period_report(&h(2, &[1, 20]), true).unwrap();
        assert_eq!(r.ind(), 0);
        assert_eq!(r.cycle_dim, Some(0));
    }

    #[test]
    fn weight_four_one_two_three() {
        let m = derive(&h(4, &[1, 2, 3])).unwrap();
        // f^4 = 1, f^3 = 3, f^2 = 6; m_e = 1+3+1 = 5, m_o = 2+2 = 4
        assert_eq!(m.f[4], 1);
        assert_eq!(m.f[3], 3);
        assert_eq!(m.f[2], 6);
        assert_eq!(m.group, PeriodGroup::So { m_e: 5, m_o: 4 });
        assert_eq!((m.p, m.ell, m.q), (2, Some(5), 2));
        assert_eq!(m.case, RealFormCase::SoEvenOdd { p: 2, q: 2 });
        assert_eq!(m.subset, vec![2, 3]);
        let hk = crate::closed_forms::hook_data(&[2, 3], 2, 2).unwrap();
        assert_eq!(
            (
                hk.min_colored_hook,
                hk.max_uncolored_hook,
                hk.plus_value,
                hk.minus_value
            ),
            (2, 2, 3, 3)
        );
        assert_eq!(period_closed_form(&m).unwrap(), 2);
        assert_eq!(period_report(&h(4, &[1, 2, 3]), false).unwrap().ind(), 2);
    }

    #[test]
    fn small_reports() {
        assert_eq!(period_report(&h(3, &[1, 1]), false).unwrap().ind(), 1);
        let m = derive(&h(3, &[1, 1])).unwrap();
        assert_eq!(m.case, RealFormCase::SpReal { r: 2 });
        assert_eq!(m.subset, vec![2]);
    }

    #[test]
    fn cycle_dimensions() {
        let m = derive(&h(3, &[0, 4])).unwrap();
        assert_eq!(m.marked, vec![4]);
        assert_eq!(cycle_dim_gq(&m).unwrap(), 0);

        let m = derive(&h(5, &[1, 1, 0])).unwrap();
        assert_eq!(m.case, RealFormCase::SpReal { r: 2 });
        assert_eq!(m.marked, vec![1, 2]);
        assert_eq!(m.subset, vec![1]);
        // Pullbacks of +-(e1 - e2) are +-(e1 + e2); only the negative one
        // has a negative marked sum.
        assert_eq!(cycle_dim_gq(&m).unwrap(), 1);
    }

    #[test]
    fn rejects_points_and_bad_input() {
        assert!(HodgeNumbers::from_upper(2, &[0, 5])
            .and_then(|x| derive(&x))
            .is_err());
        assert!(HodgeNumbers::from_upper(2, &[1, 0])
            .and_then(|x| derive(&x))
            .is_err());
        assert!(HodgeNumbers::from_upper(3, &[1]).is_err());
        assert!(HodgeNumbers::new(2, vec![1, 2, 3]).is_err());
        assert!(HodgeNumbers::from_upper(0, &[2]).is_err());
    }

    #[test]
    fn grid_is_nonempty_and_bounded() {
        let g = hodge_grid(4, 8);
        assert!(g.iter().all(|x| x.total() <= 8 && x.weight() <= 4));
        assert!(g.contains(&h(2, &[1, 2])));
        assert!(g.contains(&h(3, &[1, 1])));
    }
}
