//! Binomial coefficients and colexicographic ranking of k-subsets.
//!
//! Hyperedges of `K_n^(r)` are identified with their colex rank
//! `rank(S) = sum_i C(s_i, i + 1)` (0-based positions, `s_0 < s_1 < ...`).
//! The rank does not depend on `n`, so a coloring of `K_n^(r)` is a prefix
//! of the coloring of `K_{n+1}^(r)` that agrees with it on `[0, n)`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest `n` accepted by [`binom`].
pub const MAX_BINOM_N: usize = 64;

static BINOM: [[u64; MAX_BINOM_N + 1]; MAX_BINOM_N + 1] = {
    let mut table = [[0u64; MAX_BINOM_N + 1]; MAX_BINOM_N + 1];
    let mut n = 0;
    while n <= MAX_BINOM_N {
        table[n][0] = 1;
        let mut k = 1;
        while k <= n {
            table[n][k] = table[n - 1][k - 1] + table[n - 1][k];
            k += 1;
        }
        n += 1;
    }
    table
};

/// Exact `C(n, k)`; zero when `k > n`. Inputs above 64 are rejected.
pub fn binom(n: usize, k: usize) -> Result<u64> {
    if n > MAX_BINOM_N || k > MAX_BINOM_N {
        return Err(Error::Range(format!(
            "binom({n}, {k}) exceeds the supported width (n, k <= {MAX_BINOM_N})"
        )));
    }
    Ok(BINOM[n][k])
}

/// Table lookup for callers that already enforce `n, k <= 64`.
#[inline]
pub(crate) fn choose(n: usize, k: usize) -> usize {
    debug_assert!(n <= MAX_BINOM_N && k <= MAX_BINOM_N);
    BINOM[n][k] as usize
}

/// A set of vertices stored as a strictly increasing sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Builds a set from strictly increasing members.
    pub fn new(members: Vec<usize>) -> Result<Self> {
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameters(format!(
                "vertex set members must be strictly increasing: {members:?}"
            )));
        }
        Ok(VertexSet(members))
    }

    /// Sorts and deduplicates-checks arbitrary input.
    pub fn from_unsorted(mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        Self::new(members)
    }

    /// `{0, 1, ..., n - 1}`.
    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet(members)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn into_members(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// Largest member plus one, or zero for the empty set.
    pub fn bound(&self) -> usize {
        self.0.last().map_or(0, |&v| v + 1)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Colex rank of a nonempty set.
pub fn colex_rank(set: &VertexSet) -> Result<u64> {
    if set.is_empty() {
        return Err(Error::InvalidParameters(
            "colex_rank of the empty set".into(),
        ));
    }
    if set.bound() > MAX_BINOM_N + 1 {
        return Err(Error::Range(format!(
            "vertex {} exceeds the supported range",
            set.bound() - 1
        )));
    }
    Ok(rank_sorted(set.members()) as u64)
}

/// Colex rank of a strictly increasing slice with members `<= 64`.
#[inline]
pub(crate) fn rank_sorted(members: &[usize]) -> usize {
    members
        .iter()
        .enumerate()
        .map(|(i, &v)| choose(v, i + 1))
        .sum()
}

/// Inverse of [`colex_rank`]: the `idx`-th `k`-subset in colex order.
pub fn colex_unrank(idx: u64, k: usize) -> Result<VertexSet> {
    if k == 0 || k > MAX_BINOM_N {
        return Err(Error::Range(format!("subset size {k} out of range")));
    }
    if idx >= BINOM[MAX_BINOM_N][k] {
        return Err(Error::Range(format!(
            "rank {idx} exceeds the number of {k}-subsets of a {MAX_BINOM_N}-set"
        )));
    }
    let mut rest = idx;
    let mut members = vec![0; k];
    // Largest element first: pick the largest c with C(c, i) <= rest.
    let mut hi = MAX_BINOM_N;
    for i in (1..=k).rev() {
        // C(c, i) is nondecreasing in c; binary search over [i - 1, hi).
        let (mut lo, mut up) = (i - 1, hi);
        while up - lo > 1 {
            let mid = (lo + up) / 2;
            if BINOM[mid][i] <= rest {
                lo = mid;
            } else {
                up = mid;
            }
        }
        members[i - 1] = lo;
        rest -= BINOM[lo][i];
        hi = lo;
    }
    Ok(VertexSet(members))
}

/// Increasing position tuple `0 <= p_0 < ... < p_{k-1} < n`, stepped in colex order.
#[derive(Debug, Clone)]
pub(crate) struct Combination {
    pos: Vec<usize>,
    n: usize,
    done: bool,
}

impl Combination {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combination {
            pos: (0..k).collect(),
            n,
            done: k > n,
        }
    }

    #[inline]
    pub(crate) fn current(&self) -> Option<&[usize]> {
        (!self.done).then_some(&self.pos[..])
    }

    /// Moves to the colex successor; returns false once exhausted.
    pub(crate) fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let k = self.pos.len();
        for i in 0..k {
            let limit = if i + 1 < k { self.pos[i + 1] } else { self.n };
            if self.pos[i] + 1 < limit {
                self.pos[i] += 1;
                for (j, p) in self.pos[..i].iter_mut().enumerate() {
                    *p = j;
                }
                return true;
            }
        }
        self.done = true;
        false
    }
}

/// Calls `visit` on every `k`-subset of `[0, n)` in colex order, so the
/// running count equals the colex rank.
pub(crate) fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut comb = Combination::new(n, k);
    while let Some(s) = comb.current() {
        visit(s);
        comb.advance();
    }
}

/// Iterator over the `k`-subsets of a given set.
#[derive(Debug, Clone)]
pub struct SubsetsIter<'a> {
    superset: &'a [usize],
    comb: Combination,
}

impl Iterator for SubsetsIter<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let members = self
            .comb
            .current()?
            .iter()
            .map(|&p| self.superset[p])
            .collect();
        self.comb.advance();
        Some(VertexSet(members))
    }
}

/// All `k`-subsets of `superset`, in colex order of position indices.
/// Empty when `k > |superset|`.
pub fn subsets_iter(superset: &VertexSet, k: usize) -> SubsetsIter<'_> {
    SubsetsIter {
        superset: superset.members(),
        comb: Combination::new(superset.len(), k),
    }
}

/// `(C(u, 2) + C(r - u, 2)) mod 2`: the parity of the number of edges induced
/// on `r` vertices split `u / r - u` across two disjoint cliques.
pub fn pair_parity(u: usize, r: usize) -> Result<u8> {
    if u >= r {
        return Err(Error::Range(format!(
            "pair_parity requires u < r (u={u}, r={r})"
        )));
    }
    let pairs = |x: usize| x * x.saturating_sub(1) / 2;
    Ok(((pairs(u) + pairs(r - u)) % 2) as u8)
}
