//! Per-case data for the classical real forms: compact root systems, the
//! highest weights of the noncompact part, and the signed permutations that
//! label base cycles.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{FlagError, Result};
use crate::weight::{weyl_orbit, Block, Family, KRootData, SignedPermutation, Weight};

/// A classical real form, identified by its family and parameters.
///
/// * `SlReal { m }` is sl(m, R).
/// * `Su { p, q }` is su(p, q).
/// * `SpReal { r }` is sp(r, R).
/// * `SoOddOdd { p, q }` is so(2p+1, 2q+1).
/// * `SoEvenOdd { p, q }` is so(2p, 2q+1).
/// * `SoEvenEven { p, q }` is so(2p, 2q).
/// * `SpQuat { p, q }` is sp(p, q).
/// * `SlQuat { m }` is sl(m, H).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealFormCase {
    SlReal { m: usize },
    Su { p: usize, q: usize },
    SpReal { r: usize },
    SoOddOdd { p: usize, q: usize },
    SoEvenOdd { p: usize, q: usize },
    SoEvenEven { p: usize, q: usize },
    SpQuat { p: usize, q: usize },
    SlQuat { m: usize },
}

impl RealFormCase {
    pub fn token(&self) -> &'static str {
        match self {
            RealFormCase::SlReal { .. } => "sl-real",
            RealFormCase::Su { .. } => "su",
            RealFormCase::SpReal { .. } => "sp-real",
            RealFormCase::SoOddOdd { .. } => "so-odd-odd",
            RealFormCase::SoEvenOdd { .. } => "so-even-odd",
            RealFormCase::SoEvenEven { .. } => "so-even-even",
            RealFormCase::SpQuat { .. } => "sp-quat",
            RealFormCase::SlQuat { .. } => "sl-quat",
        }
    }

    /// Named parameters in a fixed order, for reports.
    pub fn params(&self) -> Vec<(&'static str, usize)> {
        match *self {
            RealFormCase::SlReal { m } | RealFormCase::SlQuat { m } => vec![("m", m)],
            RealFormCase::SpReal { r } => vec![("r", r)],
            RealFormCase::Su { p, q }
            | RealFormCase::SoOddOdd { p, q }
            | RealFormCase::SoEvenOdd { p, q }
            | RealFormCase::SoEvenEven { p, q }
            | RealFormCase::SpQuat { p, q } => vec![("p", p), ("q", q)],
        }
    }

    /// Number of epsilon coordinates.
    pub fn coord_rank(&self) -> usize {
        match *self {
            RealFormCase::SlReal { m } => m / 2,
            RealFormCase::SpReal { r } => r,
            RealFormCase::SlQuat { m } => m,
            RealFormCase::Su { p, q }
            | RealFormCase::SoOddOdd { p, q }
            | RealFormCase::SoEvenOdd { p, q }
            | RealFormCase::SoEvenEven { p, q }
            | RealFormCase::SpQuat { p, q } => p + q,
        }
    }

    /// The parameter rows covered by the closed-form table. Anything
    /// outside is rejected by [`build_model`].
    pub fn validate(&self) -> Result<()> {
        let bad = |reason: &str| {
            Err(FlagError::InvalidCase {
                case: self.to_string(),
                reason: reason.to_string(),
            })
        };
        match *self {
            RealFormCase::SlReal { m } if m < 2 => bad("sl-real needs m >= 2"),
            RealFormCase::Su { p, q } if p < 1 || q < 1 => bad("su needs p >= 1 and q >= 1"),
            RealFormCase::SpReal { r } if r < 1 => bad("sp-real needs r >= 1"),
            RealFormCase::SoOddOdd { p, q } if p > q || q < 1 => {
                bad("so-odd-odd needs 0 <= p <= q and q >= 1")
            }
            RealFormCase::SoEvenOdd { p, .. } if p < 1 => bad("so-even-odd needs p >= 1"),
            RealFormCase::SoEvenEven { p, q } if p < 1 || p > q || q < 2 => {
                bad("so-even-even needs 1 <= p <= q and q >= 2")
            }
            RealFormCase::SpQuat { p, q } if p < 1 || p > q => bad("sp-quat needs 1 <= p <= q"),
            RealFormCase::SlQuat { m } if m < 2 => bad("sl-quat needs m >= 2"),
            _ => Ok(()),
        }
    }

    /// Parse a case token together with its parameters.
    pub fn from_parts(
        token: &str,
        p: Option<usize>,
        q: Option<usize>,
        r: Option<usize>,
        m: Option<usize>,
    ) -> Result<RealFormCase> {
        let need = |name: &str, v: Option<usize>| {
            v.ok_or_else(|| FlagError::InvalidCase {
                case: token.to_string(),
                reason: format!("missing parameter --{name}"),
            })
        };
        let case = match token {
            "sl-real" => RealFormCase::SlReal { m: need("m", m)? },
            "sl-quat" => RealFormCase::SlQuat { m: need("m", m)? },
            "sp-real" => RealFormCase::SpReal { r: need("r", r)? },
            "su" => RealFormCase::Su {
                p: need("p", p)?,
                q: need("q", q)?,
            },
            "so-odd-odd" => RealFormCase::SoOddOdd {
                p: need("p", p)?,
                q: need("q", q)?,
            },
            "so-even-odd" => RealFormCase::SoEvenOdd {
                p: need("p", p)?,
                q: need("q", q)?,
            },
            "so-even-even" => RealFormCase::SoEvenEven {
                p: need("p", p)?,
                q: need("q", q)?,
            },
            "sp-quat" => RealFormCase::SpQuat {
                p: need("p", p)?,
                q: need("q", q)?,
            },
            other => {
                return Err(FlagError::InvalidCase {
                    case: other.to_string(),
                    reason: format!(
                        "unknown case token; expected one of {}",
                        CASE_TOKENS.join(", ")
                    ),
                })
            }
        };
        case.validate()?;
        Ok(case)
    }
}

pub const CASE_TOKENS: [&str; 8] = [
    "sl-real",
    "su",
    "sp-real",
    "so-odd-odd",
    "so-even-odd",
    "so-even-even",
    "sp-quat",
    "sl-quat",
];

impl fmt::Display for RealFormCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self
            .params()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .join(",");
        write!(f, "{}({params})", self.token())
    }
}

impl FromStr for RealFormCase {
    type Err = FlagError;

    /// Accepts the `Display` form, e.g. `su(p=3,q=4)`.
    fn from_str(s: &str) -> Result<Self> {
        let malformed = || FlagError::InvalidCase {
            case: s.to_string(),
            reason: "expected token(name=value,...)".into(),
        };
        let (token, rest) = s.split_once('(').ok_or_else(malformed)?;
        let body = rest.strip_suffix(')').ok_or_else(malformed)?;
        let (mut p, mut q, mut r, mut m) = (None, None, None, None);
        for kv in body.split(',').filter(|x| !x.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(malformed)?;
            let v: usize = v.trim().parse().map_err(|_| malformed())?;
            match k.trim() {
                "p" => p = Some(v),
                "q" => q = Some(v),
                "r" => r = Some(v),
                "m" => m = Some(v),
                _ => return Err(malformed()),
            }
        }
        RealFormCase::from_parts(token.trim(), p, q, r, m)
    }
}

/// Which irreducible piece of the noncompact part a highest weight belongs
/// to. Non-Hermitian cases have one piece, labelled `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    S,
    Plus,
    Minus,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::S => "s",
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

/// Everything the engine needs about one real form.
#[derive(Clone, Debug)]
pub struct CaseModel {
    pub k_roots: KRootData,
    pub lambdas: Vec<(Weight, Branch)>,
    pub hermitian: bool,
    pub coord_rank: usize,
    pub ambient_positive_count: usize,
    pub dim_cycle: usize,
    orbits: Vec<(Vec<Weight>, Branch)>,
}

impl CaseModel {
    fn assemble(
        rank: usize,
        blocks: Vec<Block>,
        lambdas: Vec<(Weight, Branch)>,
        ambient_positive_count: usize,
    ) -> Result<CaseModel> {
        let k_roots = KRootData::new(rank, blocks)?;
        let hermitian = lambdas.iter().any(|(_, b)| *b != Branch::S);
        let mut orbits = Vec::with_capacity(lambdas.len());
        for (lam, branch) in &lambdas {
            let orbit = weyl_orbit(lam, k_roots.simple_roots())?;
            orbits.push((orbit.into_iter().collect(), *branch));
        }
        Ok(CaseModel {
            dim_cycle: k_roots.positive_roots().len(),
            k_roots,
            lambdas,
            hermitian,
            coord_rank: rank,
            ambient_positive_count,
            orbits,
        })
    }

    /// Weyl orbits of the highest weights, each sorted, with their branch.
    pub fn orbits(&self) -> &[(Vec<Weight>, Branch)] {
        &self.orbits
    }
}

/// Which base cycle of a case: an index set plus the primed flag.
///
/// For sl(2r, R) the primed flag selects the cycle through the sign change
/// in the last coordinate; the index set is empty there.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleParam {
    pub subset: Vec<usize>,
    pub primed: bool,
}

impl CycleParam {
    pub fn new(mut subset: Vec<usize>, primed: bool) -> Self {
        subset.sort_unstable();
        CycleParam { subset, primed }
    }

    pub fn plain(subset: Vec<usize>) -> Self {
        CycleParam::new(subset, false)
    }
}

impl fmt::Display for CycleParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.subset.iter().join(","))?;
        if self.primed {
            write!(f, "'")?;
        }
        Ok(())
    }
}

/// Build the case data after checking the parameters.
pub fn build_model(case: &RealFormCase) -> Result<CaseModel> {
    case.validate()?;
    build_model_unchecked(case)
}

/// Build the case data without the table's parameter checks. Period
/// domains reach orthogonal groups such as so(2p, 2q) with p > q, or with a
/// one-dimensional torus factor, that the table does not list separately.
pub(crate) fn build_model_unchecked(case: &RealFormCase) -> Result<CaseModel> {
    let n = case.coord_rank();
    let e = |terms: &[(i64, usize)]| Weight::from_terms(n, terms);
    match *case {
        RealFormCase::SlReal { m } => {
            let r = m / 2;
            if m % 2 == 1 {
                CaseModel::assemble(
                    r,
                    vec![Block::new(Family::B, 0, r)],
                    vec![(e(&[(2, 1)]), Branch::S)],
                    r * (2 * r + 1),
                )
            } else if r == 1 {
                // sl(2, R): the disc, Hermitian with two one-dimensional pieces.
                CaseModel::assemble(
                    1,
                    vec![Block::new(Family::D, 0, 1)],
                    vec![(e(&[(2, 1)]), Branch::Plus), (e(&[(-2, 1)]), Branch::Minus)],
                    1,
                )
            } else {
                CaseModel::assemble(
                    r,
                    vec![Block::new(Family::D, 0, r)],
                    vec![(e(&[(2, 1)]), Branch::S)],
                    r * (2 * r - 1),
                )
            }
        }
        RealFormCase::Su { p, q } => CaseModel::assemble(
            n,
            vec![Block::new(Family::A, 0, p), Block::new(Family::A, p, q)],
            vec![
                (e(&[(1, 1), (-1, n)]), Branch::Plus),
                (e(&[(1, p + 1), (-1, p)]), Branch::Minus),
            ],
            n * (n - 1) / 2,
        ),
        RealFormCase::SpReal { r } => CaseModel::assemble(
            r,
            vec![Block::new(Family::A, 0, r)],
            vec![(e(&[(2, 1)]), Branch::Plus), (e(&[(-2, r)]), Branch::Minus)],
            r * r,
        ),
        RealFormCase::SoOddOdd { p, q } => {
            let lam = if p == 0 {
                e(&[(1, 1)])
            } else {
                e(&[(1, 1), (1, p + 1)])
            };
            CaseModel::assemble(
                n,
                blocks_of(&[(Family::B, p), (Family::B, q)]),
                vec![(lam, Branch::S)],
                (n + 1) * n,
            )
        }
        RealFormCase::SoEvenOdd { p, q } => {
            let lambdas = match (p, q) {
                (1, 0) => vec![(e(&[(1, 1)]), Branch::Plus), (e(&[(-1, 1)]), Branch::Minus)],
                (1, _) => vec![
                    (e(&[(1, 1), (1, 2)]), Branch::Plus),
                    (e(&[(-1, 1), (1, 2)]), Branch::Minus),
                ],
                (_, 0) => vec![(e(&[(1, 1)]), Branch::S)],
                _ => vec![(e(&[(1, 1), (1, p + 1)]), Branch::S)],
            };
            CaseModel::assemble(
                n,
                blocks_of(&[(Family::D, p), (Family::B, q)]),
                lambdas,
                n * n,
            )
        }
        RealFormCase::SoEvenEven { p, q } => {
            if p == 0 || q == 0 {
                return Err(FlagError::InvalidCase {
                    case: case.to_string(),
                    reason: "so(2p, 2q) with p = 0 or q = 0 is compact".into(),
                });
            }
            let lambdas = match (p, q) {
                // so(2,2): the second factor is a torus too, so each piece splits again.
                (1, 1) => vec![
                    (e(&[(1, 1), (1, 2)]), Branch::Plus),
                    (e(&[(1, 1), (-1, 2)]), Branch::Plus),
                    (e(&[(-1, 1), (1, 2)]), Branch::Minus),
                    (e(&[(-1, 1), (-1, 2)]), Branch::Minus),
                ],
                (1, _) => vec![
                    (e(&[(1, 1), (1, 2)]), Branch::Plus),
                    (e(&[(-1, 1), (1, 2)]), Branch::Minus),
                ],
                (_, 1) => vec![
                    (e(&[(1, 1), (1, p + 1)]), Branch::Plus),
                    (e(&[(1, 1), (-1, p + 1)]), Branch::Minus),
                ],
                _ => vec![(e(&[(1, 1), (1, p + 1)]), Branch::S)],
            };
            CaseModel::assemble(
                n,
                blocks_of(&[(Family::D, p), (Family::D, q)]),
                lambdas,
                n * (n - 1),
            )
        }
        RealFormCase::SpQuat { p, q } => CaseModel::assemble(
            n,
            blocks_of(&[(Family::C, p), (Family::C, q)]),
            vec![(e(&[(1, 1), (1, p + 1)]), Branch::S)],
            n * n,
        ),
        RealFormCase::SlQuat { m } => CaseModel::assemble(
            m,
            vec![Block::new(Family::C, 0, m)],
            vec![(e(&[(2, 1)]), Branch::S)],
            m * (2 * m - 1),
        ),
    }
}

/// Consecutive blocks, skipping empty ones.
fn blocks_of(parts: &[(Family, usize)]) -> Vec<Block> {
    let mut offset = 0;
    let mut out = Vec::new();
    for &(family, len) in parts {
        if len > 0 {
            out.push(Block::new(family, offset, len));
        }
        offset += len;
    }
    out
}

/// Size the index set must have, or `None` when any size is allowed.
fn required_subset_size(case: &RealFormCase) -> Option<usize> {
    match *case {
        RealFormCase::SlReal { .. } | RealFormCase::SlQuat { .. } => Some(0),
        RealFormCase::SpReal { .. } => None,
        RealFormCase::Su { p, .. }
        | RealFormCase::SoOddOdd { p, .. }
        | RealFormCase::SoEvenOdd { p, .. }
        | RealFormCase::SoEvenEven { p, .. }
        | RealFormCase::SpQuat { p, .. } => Some(p),
    }
}

fn primed_allowed(case: &RealFormCase) -> bool {
    match *case {
        RealFormCase::SlReal { m } => m % 2 == 0,
        RealFormCase::SoEvenOdd { .. } | RealFormCase::SoEvenEven { .. } => true,
        _ => false,
    }
}

/// Check that `c` names a base cycle of `case`.
pub fn validate_cycle(case: &RealFormCase, c: &CycleParam) -> Result<()> {
    let n = case.coord_rank();
    let bad = |reason: String| {
        Err(FlagError::InvalidCycle {
            case: case.to_string(),
            cycle: c.to_string(),
            reason,
        })
    };
    if c.subset.windows(2).any(|w| w[0] >= w[1]) {
        return bad("indices must be distinct and sorted".into());
    }
    if let Some(&x) = c.subset.iter().find(|&&x| x < 1 || x > n) {
        return bad(format!("index {x} outside 1..={n}"));
    }
    if let Some(k) = required_subset_size(case) {
        if c.subset.len() != k {
            return bad(format!("needs exactly {k} indices, got {}", c.subset.len()));
        }
    }
    if c.primed && !primed_allowed(case) {
        return bad("this case has no primed cycles".into());
    }
    Ok(())
}

/// All base cycles, in a fixed order: by index set size, then
/// lexicographically, with the plain cycle before the primed one.
pub fn enumerate_cycles(case: &RealFormCase) -> Vec<CycleParam> {
    let n = case.coord_rank();
    let subsets: Vec<Vec<usize>> = match required_subset_size(case) {
        Some(k) => (1..=n).combinations(k).collect(),
        None => (0..=n).flat_map(|k| (1..=n).combinations(k)).collect(),
    };
    let primed = primed_allowed(case);
    let mut out = Vec::new();
    for s in subsets {
        out.push(CycleParam::plain(s.clone()));
        if primed {
            out.push(CycleParam::new(s, true));
        }
    }
    out
}

/// The index set followed by its complement, both ascending.
pub fn full_sequence(subset: &[usize], n: usize) -> Vec<usize> {
    let mut seq = subset.to_vec();
    seq.extend((1..=n).filter(|x| !subset.contains(x)));
    seq
}

/// The Weyl element of a base cycle.
pub fn cycle_weyl(case: &RealFormCase, c: &CycleParam) -> Result<SignedPermutation> {
    validate_cycle(case, c)?;
    let n = case.coord_rank();
    let seq = full_sequence(&c.subset, n);
    let mut signs = vec![1i8; n];
    let images: Vec<usize> = match *case {
        RealFormCase::SpReal { r } => {
            let p = c.subset.len();
            (1..=r)
                .map(|i| {
                    if i <= p {
                        seq[i - 1]
                    } else {
                        signs[i - 1] = -1;
                        seq[r + p - i]
                    }
                })
                .collect()
        }
        _ => seq,
    };
    if c.primed {
        match *case {
            RealFormCase::SlReal { .. } => signs[n - 1] = -signs[n - 1],
            RealFormCase::SoEvenOdd { p, .. } => signs[p - 1] = -signs[p - 1],
            RealFormCase::SoEvenEven { p, .. } => {
                signs[p - 1] = -signs[p - 1];
                signs[n - 1] = -signs[n - 1];
            }
            _ => unreachable!("validate_cycle rejects other primed cycles"),
        }
    }
    SignedPermutation::from_one_based(&images, &signs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::is_dominant;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn su_dimensions_by_hand() {
        let m = build_model(&RealFormCase::Su { p: 3, q: 4 }).unwrap();
        // |A_2+| = 3 and |A_3+| = 6; |A_6+| = 21
        assert_eq!(m.dim_cycle, 9);
        assert_eq!(m.ambient_positive_count - m.dim_cycle, 12);
        assert!(m.hermitian);
    }

    #[test]
    fn so_odd_odd_highest_weight_and_dimension() {
        let m = build_model(&RealFormCase::SoOddOdd { p: 3, q: 4 }).unwrap();
        assert_eq!(
            m.lambdas,
            vec![(Weight::from_terms(7, &[(1, 1), (1, 4)]), Branch::S)]
        );
        // |B_p+| = p^2
        assert_eq!(m.dim_cycle, 9 + 16);
        assert!(!m.hermitian);
    }

    #[test]
    fn sl_quat_data() {
        let m = build_model(&RealFormCase::SlQuat { m: 3 }).unwrap();
        assert_eq!(m.lambdas[0].0, Weight::from_terms(3, &[(2, 1)]));
        assert_eq!(m.dim_cycle, 9);
        assert_eq!(m.k_roots.blocks(), &[Block::new(Family::C, 0, 3)]);
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(enumerate_cycles(&RealFormCase::SpReal { r: 3 }).len(), 8);
        assert_eq!(enumerate_cycles(&RealFormCase::Su { p: 3, q: 4 }).len(), 35);
        assert_eq!(
            enumerate_cycles(&RealFormCase::SoEvenEven { p: 2, q: 2 }).len(),
            12
        );
        assert_eq!(enumerate_cycles(&RealFormCase::SlReal { m: 7 }).len(), 1);
        assert_eq!(enumerate_cycles(&RealFormCase::SlReal { m: 8 }).len(), 2);
        assert_eq!(
            enumerate_cycles(&RealFormCase::SoOddOdd { p: 0, q: 3 }).len(),
            1
        );
    }

    #[test]
    fn cycle_counts_match_family_formula() {
        let cases = [
            RealFormCase::Su { p: 2, q: 3 },
            RealFormCase::SoOddOdd { p: 2, q: 4 },
            RealFormCase::SoEvenOdd { p: 3, q: 2 },
            RealFormCase::SoEvenEven { p: 2, q: 3 },
            RealFormCase::SpQuat { p: 1, q: 5 },
        ];
        for case in cases {
            let (p, q) = match case.params()[..] {
                [(_, p), (_, q)] => (p, q),
                _ => unreachable!(),
            };
            let twice = matches!(
                case,
                RealFormCase::SoEvenOdd { .. } | RealFormCase::SoEvenEven { .. }
            );
            let expect = binom(p + q, p) * if twice { 2 } else { 1 };
            assert_eq!(enumerate_cycles(&case).len(), expect, "{case}");
        }
        for r in 1..=6 {
            assert_eq!(enumerate_cycles(&RealFormCase::SpReal { r }).len(), 1 << r);
        }
    }

    #[test]
    fn su_weyl_element() {
        let case = RealFormCase::Su { p: 3, q: 4 };
        let w = cycle_weyl(&case, &CycleParam::plain(vec![2, 5, 6])).unwrap();
        assert_eq!(w.images(), vec![2, 5, 6, 1, 3, 4, 7]);
        assert!(w.signs().iter().all(|&s| s == 1));
    }

    #[test]
    fn sl_even_flip() {
        let case = RealFormCase::SlReal { m: 8 };
        let w = cycle_weyl(&case, &CycleParam::new(vec![], true)).unwrap();
        assert_eq!(w.images(), vec![1, 2, 3, 4]);
        assert_eq!(w.signs(), &[1, 1, 1, -1]);
    }

    #[test]
    fn sp_real_weyl_element() {
        let case = RealFormCase::SpReal { r: 4 };
        let w = cycle_weyl(&case, &CycleParam::plain(vec![1, 3])).unwrap();
        assert_eq!(w.images(), vec![1, 3, 4, 2]);
        assert_eq!(w.signs(), &[1, 1, -1, -1]);
    }

    #[test]
    fn primed_sign_positions() {
        let w = cycle_weyl(
            &RealFormCase::SoEvenOdd { p: 3, q: 2 },
            &CycleParam::new(vec![1, 2, 4], true),
        )
        .unwrap();
        assert_eq!(w.signs(), &[1, 1, -1, 1, 1]);
        let w = cycle_weyl(
            &RealFormCase::SoEvenEven { p: 2, q: 3 },
            &CycleParam::new(vec![2, 5], true),
        )
        .unwrap();
        assert_eq!(w.signs(), &[1, -1, 1, 1, -1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        for case in [
            RealFormCase::SlReal { m: 1 },
            RealFormCase::Su { p: 0, q: 3 },
            RealFormCase::SpReal { r: 0 },
            RealFormCase::SoOddOdd { p: 0, q: 0 },
            RealFormCase::SoOddOdd { p: 3, q: 2 },
            RealFormCase::SoEvenOdd { p: 0, q: 2 },
            RealFormCase::SoEvenEven { p: 1, q: 1 },
            RealFormCase::SoEvenEven { p: 3, q: 2 },
            RealFormCase::SpQuat { p: 2, q: 1 },
            RealFormCase::SlQuat { m: 1 },
        ] {
            assert!(
                matches!(build_model(&case), Err(FlagError::InvalidCase { .. })),
                "{case}"
            );
        }
    }

    #[test]
    fn rejects_bad_cycles() {
        let su = RealFormCase::Su { p: 2, q: 2 };
        assert!(cycle_weyl(&su, &CycleParam::plain(vec![1])).is_err());
        assert!(cycle_weyl(&su, &CycleParam::plain(vec![1, 5])).is_err());
        assert!(cycle_weyl(&su, &CycleParam::new(vec![1, 2], true)).is_err());
        let bad = CycleParam {
            subset: vec![2, 2],
            primed: false,
        };
        assert!(cycle_weyl(&su, &bad).is_err());
        assert!(cycle_weyl(
            &RealFormCase::SlReal { m: 7 },
            &CycleParam::new(vec![], true)
        )
        .is_err());
    }

    #[test]
    fn every_highest_weight_is_dominant() {
        for case in crate::engine::cases_within(&crate::engine::SweepBounds::default()) {
            let m = build_model(&case).unwrap();
            for (lam, _) in &m.lambdas {
                assert!(is_dominant(lam, &m.k_roots), "{case}: {lam}");
            }
            assert!(m.ambient_positive_count >= m.dim_cycle);
            let branches: Vec<_> = m.lambdas.iter().map(|(_, b)| *b).collect();
            if m.hermitian {
                assert!(branches.contains(&Branch::Plus) && branches.contains(&Branch::Minus));
            } else {
                assert_eq!(branches, vec![Branch::S]);
            }
        }
    }

    #[test]
    fn display_round_trips() {
        for case in [
            RealFormCase::Su { p: 3, q: 4 },
            RealFormCase::SlQuat { m: 3 },
            RealFormCase::SpReal { r: 5 },
        ] {
            assert_eq!(case.to_string().parse::<RealFormCase>().unwrap(), case);
        }
        assert!("su(p=0,q=1)".parse::<RealFormCase>().is_err());
        assert!("xx(p=1)".parse::<RealFormCase>().is_err());
    }
}
