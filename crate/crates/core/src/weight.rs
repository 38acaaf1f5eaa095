//! Integer weights in epsilon coordinates and the compact root systems that
//! act on them.
//!
//! A [`Weight`] is the coefficient vector of `c_1 e_1 + ... + c_N e_N`. Every
//! root used anywhere in the crate has one of the shapes `e_i`, `2e_i` or
//! `+-e_i +- e_j`, so reflections stay integral and no fractions are needed.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Neg;

use crate::error::{FlagError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `e_i` with a 1-based index.
    pub fn basis(rank: usize, i: usize) -> Self {
        Weight::from_terms(rank, &[(1, i)])
    }

    /// Sum of `coef * e_idx` with 1-based indices.
    pub fn from_terms(rank: usize, terms: &[(i64, usize)]) -> Self {
        let mut c = vec![0; rank];
        for &(coef, idx) in terms {
            assert!(
                idx >= 1 && idx <= rank,
                "basis index {idx} outside 1..={rank}"
            );
            c[idx - 1] += coef;
        }
        Weight(c)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    fn dot(&self, other: &Weight) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}e{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn check_len(u: &Weight, v: &Weight) -> Result<()> {
    if u.rank() != v.rank() {
        return Err(FlagError::LengthMismatch {
            left: u.rank(),
            right: v.rank(),
        });
    }
    Ok(())
}

/// Euclidean pairing `sum u_i v_i`.
pub fn pair(u: &Weight, v: &Weight) -> Result<i64> {
    check_len(u, v)?;
    Ok(u.dot(v))
}

/// Reflection of `v` in the hyperplane orthogonal to `beta`.
pub fn reflect(v: &Weight, beta: &Weight) -> Result<Weight> {
    check_len(v, beta)?;
    let bb = beta.dot(beta);
    if bb == 0 {
        return Err(FlagError::ZeroRoot);
    }
    let num = 2 * v.dot(beta);
    if num % bb != 0 {
        return Err(FlagError::NonIntegralReflection {
            weight: v.to_string(),
            root: beta.to_string(),
        });
    }
    let k = num / bb;
    Ok(Weight(
        v.0.iter().zip(&beta.0).map(|(a, b)| a - k * b).collect(),
    ))
}

/// Closure of `{lambda}` under the reflections in `simple_roots`.
pub fn weyl_orbit(lambda: &Weight, simple_roots: &[Weight]) -> Result<BTreeSet<Weight>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(v) = queue.pop_front() {
        for beta in simple_roots {
            let w = reflect(&v, beta)?;
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    Ok(seen)
}

/// True when the lowest-index nonzero coordinate is positive.
pub fn is_positive_restricted(mu: &Weight) -> Result<bool> {
    match mu.0.iter().find(|&&c| c != 0) {
        Some(&c) => Ok(c > 0),
        None => Err(FlagError::ZeroWeight),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

/// A classical root system acting on a contiguous run of coordinates.
///
/// `offset` is 0-based, so a block with `offset = 3, len = 4` acts on
/// `e_4..e_7`. An `A` block of length `l` is of rank `l - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub family: Family,
    pub offset: usize,
    pub len: usize,
}

impl Block {
    pub fn new(family: Family, offset: usize, len: usize) -> Self {
        Block {
            family,
            offset,
            len,
        }
    }
}

/// A root with at most two nonzero coordinates, kept for fast pairing.
#[derive(Clone, Copy, Debug)]
struct SparseRoot {
    idx: [usize; 2],
    coef: [i64; 2],
}

impl SparseRoot {
    fn from_weight(w: &Weight) -> Self {
        let mut idx = [0; 2];
        let mut coef = [0; 2];
        let mut n = 0;
        for (i, &c) in w.0.iter().enumerate() {
            if c != 0 {
                assert!(n < 2, "roots have at most two nonzero coordinates");
                idx[n] = i;
                coef[n] = c;
                n += 1;
            }
        }
        SparseRoot { idx, coef }
    }

    fn pair(&self, v: &[i64]) -> i64 {
        self.coef[0] * v[self.idx[0]] + self.coef[1] * v[self.idx[1]]
    }
}

/// Positive and simple roots of a product of classical blocks.
#[derive(Clone, Debug)]
pub struct KRootData {
    rank: usize,
    blocks: Vec<Block>,
    positive: Vec<Weight>,
    simple: Vec<Weight>,
    sparse: Vec<SparseRoot>,
}

impl KRootData {
    pub fn new(rank: usize, blocks: Vec<Block>) -> Result<Self> {
        let mut used = vec![false; rank];
        for b in &blocks {
            if b.len == 0 || b.offset + b.len > rank {
                return Err(FlagError::InvalidBlocks(format!(
                    "{}{} at offset {} does not fit in rank {rank}",
                    b.family.letter(),
                    b.len,
                    b.offset
                )));
            }
            for slot in &mut used[b.offset..b.offset + b.len] {
                if *slot {
                    return Err(FlagError::InvalidBlocks("blocks overlap".into()));
                }
                *slot = true;
            }
        }

        let mut positive = Vec::new();
        let mut simple = Vec::new();
        for b in &blocks {
            let lo = b.offset + 1;
            let hi = b.offset + b.len;
            for i in lo..=hi {
                for j in i + 1..=hi {
                    positive.push(Weight::from_terms(rank, &[(1, i), (-1, j)]));
                    if b.family != Family::A {
                        positive.push(Weight::from_terms(rank, &[(1, i), (1, j)]));
                    }
                }
                match b.family {
                    Family::B => positive.push(Weight::from_terms(rank, &[(1, i)])),
                    Family::C => positive.push(Weight::from_terms(rank, &[(2, i)])),
                    _ => {}
                }
            }
            for i in lo..hi {
                simple.push(Weight::from_terms(rank, &[(1, i), (-1, i + 1)]));
            }
            match b.family {
                Family::A => {}
                Family::B => simple.push(Weight::from_terms(rank, &[(1, hi)])),
                Family::C => simple.push(Weight::from_terms(rank, &[(2, hi)])),
                Family::D if b.len >= 2 => {
                    simple.push(Weight::from_terms(rank, &[(1, hi - 1), (1, hi)]))
                }
                Family::D => {}
            }
        }
        let sparse = positive.iter().map(SparseRoot::from_weight).collect();
        Ok(KRootData {
            rank,
            blocks,
            positive,
            simple,
            sparse,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    fn assert_rank(&self, lambda: &Weight) {
        assert_eq!(
            lambda.rank(),
            self.rank,
            "weight rank does not match the root system"
        );
    }
}

/// True iff `lambda` pairs nonnegatively with every positive root.
pub fn is_dominant(lambda: &Weight, k: &KRootData) -> bool {
    k.assert_rank(lambda);
    k.sparse.iter().all(|r| r.pair(&lambda.0) >= 0)
}

/// Number of positive roots pairing negatively with `lambda`. This equals
/// the length of the shortest Weyl element moving `lambda` to the dominant
/// chamber.
pub fn weight_index(lambda: &Weight, k: &KRootData) -> usize {
    k.assert_rank(lambda);
    k.sparse.iter().filter(|r| r.pair(&lambda.0) < 0).count()
}

/// The same index computed by walking: reflect in a simple root that pairs
/// negatively until the weight is dominant, and count the steps.
pub fn weight_index_bfs(lambda: &Weight, k: &KRootData) -> usize {
    k.assert_rank(lambda);
    let mut v = lambda.clone();
    let mut steps = 0;
    while let Some(beta) = k.simple.iter().find(|b| b.dot(&v) < 0) {
        v = reflect(&v, beta).expect("simple roots have integral reflections");
        steps += 1;
    }
    steps
}

/// Signed permutation `w` described through its inverse:
/// `w^{-1}(e_i) = s(i) e_{pi(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    /// `perm` holds 0-based images, `signs` entries of +1 or -1.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(FlagError::InvalidPermutation(format!(
                "{} images but {} signs",
                n,
                signs.len()
            )));
        }
        let mut hit = vec![false; n];
        for &p in &perm {
            if p >= n || hit[p] {
                return Err(FlagError::InvalidPermutation(format!(
                    "{perm:?} is not a bijection"
                )));
            }
            hit[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(FlagError::InvalidPermutation(
                "signs must be +1 or -1".into(),
            ));
        }
        Ok(SignedPermutation { perm, signs })
    }

    /// Same as [`SignedPermutation::new`] with 1-based images.
    pub fn from_one_based(perm: &[usize], signs: &[i8]) -> Result<Self> {
        if perm.contains(&0) {
            return Err(FlagError::InvalidPermutation("images are 1-based".into()));
        }
        SignedPermutation::new(perm.iter().map(|p| p - 1).collect(), signs.to_vec())
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// 1-based images `pi(1..N)`.
    pub fn images(&self) -> Vec<usize> {
        self.perm.iter().map(|p| p + 1).collect()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    fn check(&self, mu: &Weight) -> Result<()> {
        if mu.rank() != self.rank() {
            return Err(FlagError::LengthMismatch {
                left: self.rank(),
                right: mu.rank(),
            });
        }
        Ok(())
    }

    /// `w^{-1}(mu)`, the linear extension of `e_i -> s(i) e_{pi(i)}`.
    pub fn apply_inverse(&self, mu: &Weight) -> Result<Weight> {
        self.check(mu)?;
        let mut out = vec![0; mu.rank()];
        for (i, &c) in mu.0.iter().enumerate() {
            out[self.perm[i]] += i64::from(self.signs[i]) * c;
        }
        Ok(Weight(out))
    }

    /// `w(mu)`, inverse of [`SignedPermutation::apply_inverse`].
    pub fn apply(&self, mu: &Weight) -> Result<Weight> {
        self.check(mu)?;
        Ok(Weight(
            (0..mu.rank())
                .map(|i| i64::from(self.signs[i]) * mu.0[self.perm[i]])
                .collect(),
        ))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AmbientFamily {
    B,
    C,
    D,
}

impl AmbientFamily {
    pub fn letter(self) -> char {
        match self {
            AmbientFamily::B => 'B',
            AmbientFamily::C => 'C',
            AmbientFamily::D => 'D',
        }
    }
}

/// Coefficients of `mu` in the simple roots of the ambient `B_m`, `C_m` or
/// `D_m`, read off from partial sums of the coordinates.
///
/// Lattice membership forces every coefficient to be an integer, so the
/// result is returned as integers and a non-lattice input is rejected.
pub fn simple_coordinates(mu: &Weight, family: AmbientFamily, m: usize) -> Result<Vec<i64>> {
    if mu.rank() != m {
        return Err(FlagError::LengthMismatch {
            left: mu.rank(),
            right: m,
        });
    }
    let not_lattice = || FlagError::NotInRootLattice {
        weight: mu.to_string(),
        family: family.letter(),
        rank: m,
    };
    if m == 0 || (family == AmbientFamily::D && m < 2) {
        return Err(not_lattice());
    }
    let c = mu.coords();
    let mut partial = Vec::with_capacity(m);
    let mut s = 0;
    for &x in c {
        s += x;
        partial.push(s);
    }
    let half = |x: i64| {
        if x % 2 == 0 {
            Ok(x / 2)
        } else {
            Err(not_lattice())
        }
    };
    let mut n = Vec::with_capacity(m);
    match family {
        AmbientFamily::B => n.extend_from_slice(&partial),
        AmbientFamily::C => {
            n.extend_from_slice(&partial[..m - 1]);
            n.push(half(partial[m - 1])?);
        }
        AmbientFamily::D => {
            n.extend_from_slice(&partial[..m - 2]);
            let head = partial[m - 2];
            n.push(half(head - c[m - 1])?);
            n.push(half(head + c[m - 1])?);
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    fn w(rank: usize, terms: &[(i64, usize)]) -> Weight {
        Weight::from_terms(rank, terms)
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(
            pair(&w(5, &[(1, 1), (-1, 5)]), &w(5, &[(1, 1), (-1, 2)])),
            Ok(1)
        );
        assert_eq!(pair(&w(3, &[(2, 3)]), &w(3, &[(1, 3)])), Ok(2));
        assert_eq!(
            pair(&w(4, &[(1, 2), (1, 4)]), &w(4, &[(1, 2), (-1, 4)])),
            Ok(0)
        );
        assert!(matches!(
            pair(&Weight::zero(2), &Weight::zero(3)),
            Err(FlagError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn reflection_examples() {
        assert_eq!(
            reflect(&w(2, &[(2, 1)]), &w(2, &[(1, 1), (-1, 2)])).unwrap(),
            w(2, &[(2, 2)])
        );
        assert_eq!(
            reflect(&w(3, &[(1, 1), (1, 3)]), &w(3, &[(1, 3)])).unwrap(),
            w(3, &[(1, 1), (-1, 3)])
        );
        let lam = w(3, &[(1, 1), (1, 2)]);
        assert_eq!(reflect(&lam, &w(3, &[(1, 1), (-1, 2)])).unwrap(), lam);
        assert_eq!(reflect(&lam, &Weight::zero(3)), Err(FlagError::ZeroRoot));
    }

    #[test]
    fn orbit_of_long_root_under_a3_is_a_chain() {
        let k = KRootData::new(4, vec![Block::new(Family::A, 0, 4)]).unwrap();
        let orbit = weyl_orbit(&w(4, &[(2, 1)]), k.simple_roots()).unwrap();
        let expect: BTreeSet<_> = (1..=4).map(|i| w(4, &[(2, i)])).collect();
        assert_eq!(orbit, expect);
    }

    #[test]
    fn orbit_under_d2_times_b() {
        let q = 3;
        let n = 2 + q;
        let k = KRootData::new(
            n,
            vec![Block::new(Family::D, 0, 2), Block::new(Family::B, 2, q)],
        )
        .unwrap();
        let orbit = weyl_orbit(&w(n, &[(1, 1), (1, 3)]), k.simple_roots()).unwrap();
        let mut expect = BTreeSet::new();
        for a in 1..=2 {
            for b in 3..=n {
                for sa in [1, -1] {
                    for sb in [1, -1] {
                        expect.insert(w(n, &[(sa, a), (sb, b)]));
                    }
                }
            }
        }
        assert_eq!(orbit, expect);
    }

    #[test]
    fn orbit_under_a2_times_a3() {
        let k = KRootData::new(
            7,
            vec![Block::new(Family::A, 0, 3), Block::new(Family::A, 3, 4)],
        )
        .unwrap();
        let orbit = weyl_orbit(&w(7, &[(1, 1), (-1, 7)]), k.simple_roots()).unwrap();
        assert_eq!(orbit.len(), 12);
        for mu in &orbit {
            let c = mu.coords();
            assert!(c[..3].iter().filter(|&&x| x == 1).count() == 1);
            assert!(c[3..].iter().filter(|&&x| x == -1).count() == 1);
        }
    }

    #[test]
    fn dominance_examples() {
        let (p, q) = (3, 4);
        let k = KRootData::new(
            p + q,
            vec![Block::new(Family::B, 0, p), Block::new(Family::B, p, q)],
        )
        .unwrap();
        let lam = w(p + q, &[(1, 1), (1, p + 1)]);
        assert!(is_dominant(&lam, &k));
        assert!(!is_dominant(&-&lam, &k));
        assert!(is_dominant(&Weight::zero(p + q), &k));
    }

    #[test]
    fn index_examples_from_case_formulas() {
        // su(3,4): ind(-e_a + e_b) = b - a - 1
        let su = KRootData::new(
            7,
            vec![Block::new(Family::A, 0, 3), Block::new(Family::A, 3, 4)],
        )
        .unwrap();
        assert_eq!(weight_index(&w(7, &[(-1, 2), (1, 5)]), &su), 2);

        // so(7,9): ind(e_a - e_b) = (a-1) + (p+q-b) + q
        let so = KRootData::new(
            7,
            vec![Block::new(Family::B, 0, 3), Block::new(Family::B, 3, 4)],
        )
        .unwrap();
        for a in 1..=3 {
            for b in 4..=7 {
                let formula = (a - 1) + (7 - b) + 4;
                assert_eq!(weight_index(&w(7, &[(1, a), (-1, b)]), &so), formula);
            }
        }
        assert_eq!(weight_index(&w(7, &[(1, 3), (-1, 4)]), &so), 9);

        // so(6,9): ind(-e_a + e_b) = (b-(p+1)) + (p-a) + p - 1
        let soe = KRootData::new(
            7,
            vec![Block::new(Family::D, 0, 3), Block::new(Family::B, 3, 4)],
        )
        .unwrap();
        assert_eq!(weight_index(&w(7, &[(-1, 3), (1, 4)]), &soe), 2);
    }

    #[test]
    fn walking_index_of_minus_long_root_in_b() {
        for r in 1..=6 {
            let k = KRootData::new(r, vec![Block::new(Family::B, 0, r)]).unwrap();
            let lam = w(r, &[(-2, r)]);
            assert_eq!(weight_index_bfs(&lam, &k), r);
            assert_eq!(weight_index(&lam, &k), r);
        }
    }

    /// Word length by breadth-first search over the Weyl group, acting on
    /// the orbit only. This is the definition of the index, with no
    /// counting shortcut.
    fn index_by_definition(lambda: &Weight, k: &KRootData) -> usize {
        let mut dist: HashMap<Weight, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(lambda.clone(), 0);
        queue.push_back(lambda.clone());
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            if k.positive_roots().iter().all(|b| b.dot(&v) >= 0) {
                return d;
            }
            for beta in k.simple_roots() {
                let u = reflect(&v, beta).unwrap();
                if !dist.contains_key(&u) {
                    dist.insert(u.clone(), d + 1);
                    queue.push_back(u);
                }
            }
        }
        unreachable!("every orbit meets the dominant chamber")
    }

    #[test]
    fn counting_index_equals_shortest_word() {
        let layouts: Vec<(usize, Vec<Block>)> = vec![
            (4, vec![Block::new(Family::B, 0, 4)]),
            (4, vec![Block::new(Family::C, 0, 4)]),
            (4, vec![Block::new(Family::D, 0, 4)]),
            (
                5,
                vec![Block::new(Family::A, 0, 2), Block::new(Family::A, 2, 3)],
            ),
            (
                5,
                vec![Block::new(Family::D, 0, 2), Block::new(Family::B, 2, 3)],
            ),
        ];
        let seeds: Vec<Vec<i64>> = vec![
            vec![2, 0, 0, 0, 0],
            vec![1, 0, 1, 0, 0],
            vec![1, -1, 0, 0, 0],
            vec![3, 1, -2, 0, 1],
        ];
        for (n, blocks) in layouts {
            let k = KRootData::new(n, blocks).unwrap();
            for s in &seeds {
                let lam = Weight::new(s[..n].to_vec());
                for mu in weyl_orbit(&lam, k.simple_roots()).unwrap() {
                    assert_eq!(weight_index(&mu, &k), index_by_definition(&mu, &k));
                }
            }
        }
    }

    #[test]
    fn positivity_examples() {
        assert_eq!(is_positive_restricted(&w(7, &[(1, 2), (1, 7)])), Ok(true));
        assert_eq!(is_positive_restricted(&w(7, &[(1, 7), (-1, 2)])), Ok(false));
        assert_eq!(is_positive_restricted(&w(5, &[(2, 5)])), Ok(true));
        assert_eq!(
            is_positive_restricted(&w(3, &[(-1, 1), (-1, 3)])),
            Ok(false)
        );
        assert_eq!(
            is_positive_restricted(&Weight::zero(3)),
            Err(FlagError::ZeroWeight)
        );
    }

    #[test]
    fn inverse_action_examples() {
        // j = {2,5,6} in {1..7}: j_1..j_7 = 2,5,6,1,3,4,7
        let wj = SignedPermutation::from_one_based(&[2, 5, 6, 1, 3, 4, 7], &[1; 7]).unwrap();
        assert_eq!(
            wj.apply_inverse(&w(7, &[(1, 1), (1, 4)])).unwrap(),
            w(7, &[(1, 2), (1, 1)])
        );
        let id = SignedPermutation::identity(4);
        let mu = w(4, &[(3, 1), (-1, 4)]);
        assert_eq!(id.apply_inverse(&mu).unwrap(), mu);
        let r = 4;
        let flip = SignedPermutation::from_one_based(&[1, 2, 3, 4], &[1, 1, 1, -1]).unwrap();
        assert_eq!(
            flip.apply_inverse(&w(r, &[(2, r)])).unwrap(),
            w(r, &[(-2, r)])
        );
    }

    #[test]
    fn permutation_validation() {
        assert!(SignedPermutation::from_one_based(&[1, 1], &[1, 1]).is_err());
        assert!(SignedPermutation::from_one_based(&[1, 2], &[1]).is_err());
        assert!(SignedPermutation::from_one_based(&[1, 2], &[1, 0]).is_err());
        let w = SignedPermutation::from_one_based(&[2, 1], &[1, 1]).unwrap();
        assert!(w.apply_inverse(&Weight::zero(3)).is_err());
    }

    /// Expand `sum n_d psi_d` back into epsilon coordinates.
    fn recombine(n: &[i64], family: AmbientFamily) -> Vec<i64> {
        let m = n.len();
        let mut c = vec![0; m];
        for (d, &nd) in n.iter().enumerate() {
            let psi = match (family, d) {
                (AmbientFamily::B, d) if d == m - 1 => w(m, &[(1, m)]),
                (AmbientFamily::C, d) if d == m - 1 => w(m, &[(2, m)]),
                (AmbientFamily::D, d) if d == m - 1 => w(m, &[(1, m - 1), (1, m)]),
                (_, d) => w(m, &[(1, d + 1), (-1, d + 2)]),
            };
            for (ci, pi) in c.iter_mut().zip(psi.coords()) {
                *ci += nd * pi;
            }
        }
        c
    }

    #[test]
    fn simple_coordinate_examples() {
        let m = 4;
        assert_eq!(
            simple_coordinates(&w(m, &[(1, 1), (-1, 2)]), AmbientFamily::C, m).unwrap(),
            vec![1, 0, 0, 0]
        );
        assert_eq!(
            simple_coordinates(&w(m, &[(2, m)]), AmbientFamily::C, m).unwrap(),
            vec![0, 0, 0, 1]
        );
        // psi_1 = e1-e2, psi_2 = e2-e3, psi_3 = e2+e3; e1+e2 = psi_1 + psi_2 + psi_3
        assert_eq!(
            simple_coordinates(&w(3, &[(1, 1), (1, 2)]), AmbientFamily::D, 3).unwrap(),
            vec![1, 1, 1]
        );
        assert!(matches!(
            simple_coordinates(&w(3, &[(1, 1)]), AmbientFamily::C, 3),
            Err(FlagError::NotInRootLattice { .. })
        ));
        assert!(simple_coordinates(&w(3, &[(1, 1)]), AmbientFamily::D, 3).is_err());
        assert_eq!(
            simple_coordinates(&w(3, &[(1, 1)]), AmbientFamily::B, 3).unwrap(),
            vec![1, 1, 1]
        );
    }

    #[test]
    fn simple_coordinates_recombine() {
        let m = 4;
        for family in [AmbientFamily::B, AmbientFamily::C, AmbientFamily::D] {
            let mut count = 0;
            for a in 1..=m {
                for b in a + 1..=m {
                    for (sa, sb) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        let mu = w(m, &[(sa, a), (sb, b)]);
                        let n = simple_coordinates(&mu, family, m).unwrap();
                        assert_eq!(recombine(&n, family), mu.coords().to_vec());
                        count += 1;
                    }
                }
            }
            assert_eq!(count, 24);
        }
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(w(7, &[(2, 1), (1, 4), (-1, 7)]).to_string(), "2e1+e4-e7");
        assert_eq!(Weight::zero(2).to_string(), "0");
        assert_eq!(w(2, &[(-1, 2)]).to_string(), "-e2");
    }
}
