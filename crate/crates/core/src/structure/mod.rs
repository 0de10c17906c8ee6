//! Structural queries on colorings: induced color counts, the
//! complete/void/neutral classifier for graphs, monochromatic clique and
//! clique-minus-one-hyperedge search, and monochromatic components.

mod family;

pub use family::{generate_family, Family};

use std::fmt;

use crate::coloring::HyperedgeColoring;
use crate::error::{Error, Result};
use crate::subsets::{choose, rank_sorted, Combination, VertexSet};

/// Per-color counts of the `r`-subsets of `set` under `f`. Index = color.
pub fn induced_color_counts(f: &HyperedgeColoring, set: &VertexSet) -> Result<Vec<usize>> {
    check_subset(f, set)?;
    let mut counts = vec![0usize; f.q() as usize];
    for_each_inner_edge(f, set, |c, _| counts[c as usize] += 1);
    Ok(counts)
}

fn check_subset(f: &HyperedgeColoring, set: &VertexSet) -> Result<()> {
    if set.bound() > f.n() {
        return Err(Error::InvalidParameters(format!(
            "{set} is not inside [0, {})",
            f.n()
        )));
    }
    if set.len() < f.r() {
        return Err(Error::InvalidParameters(format!(
            "{set} has fewer than r = {} vertices",
            f.r()
        )));
    }
    Ok(())
}

/// Visits `(color, hyperedge)` for every `r`-subset of `set`.
fn for_each_inner_edge(
    f: &HyperedgeColoring,
    set: &VertexSet,
    mut visit: impl FnMut(u8, &[usize]),
) {
    let members = set.members();
    let mut comb = Combination::new(members.len(), f.r());
    let mut buf = vec![0usize; f.r()];
    while let Some(pos) = comb.current() {
        for (b, &p) in buf.iter_mut().zip(pos) {
            *b = members[p];
        }
        visit(f.color_of(&buf), &buf);
        comb.advance();
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Behavior {
    /// Every induced `r`-vertex subgraph has an odd number of edges.
    Complete,
    /// Every induced `r`-vertex subgraph has an even number of edges.
    Void,
    Neutral,
}

impl fmt::Display for Behavior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Behavior::Complete => "complete",
            Behavior::Void => "void",
            Behavior::Neutral => "neutral",
        })
    }
}

/// Classification of a graph at one `r`, with the first (colex) `r`-set
/// inducing an odd and an even number of edges, when they exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RBehavior {
    pub tag: Behavior,
    pub witness_odd: Option<VertexSet>,
    pub witness_even: Option<VertexSet>,
}

/// Scans all `r`-vertex induced subgraphs of the graph `g`.
pub fn classify_r_behavior(g: &HyperedgeColoring, r: usize) -> Result<RBehavior> {
    if g.r() != 2 || g.q() != 2 {
        return Err(Error::InvalidParameters(
            "classification needs a graph (2-uniform F_2 coloring)".into(),
        ));
    }
    if r <= 2 || r > g.n() {
        return Err(Error::Range(format!(
            "r = {r} must satisfy 2 < r <= n = {}",
            g.n()
        )));
    }
    let mut witness_odd = None;
    let mut witness_even = None;
    let mut comb = Combination::new(g.n(), r);
    while let Some(set) = comb.current() {
        let mut edges = 0usize;
        for j in 1..set.len() {
            for i in 0..j {
                edges += g.color_of(&[set[i], set[j]]) as usize;
            }
        }
        let slot = if edges % 2 == 1 {
            &mut witness_odd
        } else {
            &mut witness_even
        };
        if slot.is_none() {
            *slot = Some(VertexSet::from_sorted_unchecked(set.to_vec()));
            if witness_odd.is_some() && witness_even.is_some() {
                break;
            }
        }
        comb.advance();
    }
    let tag = match (&witness_odd, &witness_even) {
        (Some(_), None) => Behavior::Complete,
        (None, Some(_)) => Behavior::Void,
        _ => Behavior::Neutral,
    };
    Ok(RBehavior {
        tag,
        witness_odd,
        witness_even,
    })
}

/// A located pattern: `vertices` carry color `color` on all their
/// `r`-subsets except possibly `missing`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternHit {
    pub vertices: VertexSet,
    pub color: u8,
    pub missing: Option<VertexSet>,
}

impl fmt::Display for PatternHit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "color {} on {}", self.color, self.vertices)?;
        if let Some(m) = &self.missing {
            write!(f, " missing {m}")?;
        }
        Ok(())
    }
}

/// How a `K_m - e` occurrence is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatchMode {
    /// Exactly one `r`-subset is not in the color.
    Induced,
    /// At most one `r`-subset is not in the color (a full clique also matches).
    Contains,
}

impl fmt::Display for MatchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatchMode::Induced => "induced",
            MatchMode::Contains => "contains",
        })
    }
}

/// Finds the lexicographically least `m`-set all of whose `r`-subsets have color `c`.
pub fn find_mono_clique(f: &HyperedgeColoring, c: u8, m: usize) -> Result<Option<PatternHit>> {
    if m < f.r() || m > f.n() {
        return Err(Error::Range(format!(
            "clique size {m} must satisfy r = {} <= m <= n = {}",
            f.r(),
            f.n()
        )));
    }
    Ok(PatternSearch::new(f, c, m, 0).run(false))
}

/// Finds the lexicographically least `m`-set missing at most (contains) or
/// exactly (induced) one `r`-subset in color `c`.
pub fn find_clique_minus_edge(
    f: &HyperedgeColoring,
    c: u8,
    m: usize,
    mode: MatchMode,
) -> Result<Option<PatternHit>> {
    if m <= f.r() || m > f.n() {
        return Err(Error::Range(format!(
            "K_m - e needs r = {} < m <= n = {}, got m = {m}",
            f.r(),
            f.n()
        )));
    }
    Ok(PatternSearch::new(f, c, m, 1).run(mode == MatchMode::Induced))
}

/// Depth-first search over increasing vertex sequences. A prefix survives
/// only while at most `allowance` of its `r`-subsets miss color `c`.
struct PatternSearch<'a> {
    f: &'a HyperedgeColoring,
    c: u8,
    m: usize,
    allowance: usize,
    current: Vec<usize>,
    missing: Vec<Vec<usize>>,
    buf: Vec<usize>,
}

impl<'a> PatternSearch<'a> {
    fn new(f: &'a HyperedgeColoring, c: u8, m: usize, allowance: usize) -> Self {
        PatternSearch {
            f,
            c,
            m,
            allowance,
            current: Vec::with_capacity(m),
            missing: Vec::with_capacity(allowance),
            buf: vec![0; f.r()],
        }
    }

    fn run(mut self, exact: bool) -> Option<PatternHit> {
        self.extend(0, exact).then(|| PatternHit {
            vertices: VertexSet::from_sorted_unchecked(self.current.clone()),
            color: self.c,
            missing: self
                .missing
                .first()
                .map(|e| VertexSet::from_sorted_unchecked(e.clone())),
        })
    }

    /// Returns true with `current` holding a full witness.
    fn extend(&mut self, start: usize, exact: bool) -> bool {
        if self.current.len() == self.m {
            return !exact || self.missing.len() == self.allowance;
        }
        let n = self.f.n();
        let r = self.f.r();
        let need = self.m - self.current.len();
        for v in start..=n - need {
            let before = self.missing.len();
            if self.current.len() + 1 >= r && !self.admit(v) {
                self.missing.truncate(before);
                continue;
            }
            self.current.push(v);
            if self.extend(v + 1, exact) {
                return true;
            }
            self.current.pop();
            self.missing.truncate(before);
        }
        false
    }

    /// Checks the new hyperedges `T + {v}` for `(r-1)`-subsets `T` of the
    /// current prefix, recording misses. False once the allowance is exceeded.
    fn admit(&mut self, v: usize) -> bool {
        let r = self.f.r();
        let top = choose(v, r);
        let values = self.f.values();
        let mut comb = Combination::new(self.current.len(), r - 1);
        while let Some(pos) = comb.current() {
            for (b, &p) in self.buf.iter_mut().zip(pos) {
                *b = self.current[p];
            }
            let rank = rank_sorted(&self.buf[..r - 1]) + top;
            if values[rank] != self.c {
                if self.missing.len() == self.allowance {
                    return false;
                }
                let mut e = self.buf[..r - 1].to_vec();
                e.push(v);
                self.missing.push(e);
            }
            comb.advance();
        }
        true
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// Connected components of the hypergraph on `set` whose edges are the
/// `c`-colored `r`-subsets of `set`. Vertices in no such edge are singletons.
pub fn mono_components(f: &HyperedgeColoring, set: &VertexSet, c: u8) -> Result<usize> {
    Ok(mono_component_sizes(f, set, c)?.len())
}

/// Component sizes for [`mono_components`], in order of each component's least vertex.
pub fn mono_component_sizes(f: &HyperedgeColoring, set: &VertexSet, c: u8) -> Result<Vec<usize>> {
    check_subset(f, set)?;
    let members = set.members();
    let mut dsu = UnionFind::new(members.len());
    let r = f.r();
    let mut comb = Combination::new(members.len(), r);
    let mut buf = vec![0usize; r];
    while let Some(pos) = comb.current() {
        for (b, &p) in buf.iter_mut().zip(pos) {
            *b = members[p];
        }
        if f.color_of(&buf) == c {
            for &p in &pos[1..] {
                dsu.union(pos[0], p);
            }
        }
        comb.advance();
    }
    let mut sizes = Vec::new();
    let mut slot = vec![usize::MAX; members.len()];
    for i in 0..members.len() {
        let root = dsu.find(i);
        if slot[root] == usize::MAX {
            slot[root] = sizes.len();
            sizes.push(0);
        }
        sizes[slot[root]] += 1;
    }
    Ok(sizes)
}

/// True when the `c`-colored graph induced on `set` is a disjoint union of
/// at most `max_parts` cliques (isolated vertices count as one-vertex cliques).
pub fn is_union_of_cliques(
    g: &HyperedgeColoring,
    set: &VertexSet,
    c: u8,
    max_parts: usize,
) -> Result<bool> {
    if g.r() != 2 {
        return Err(Error::InvalidParameters(
            "clique-union test needs a 2-uniform coloring".into(),
        ));
    }
    check_subset(g, set)?;
    let members = set.members();
    let mut dsu = UnionFind::new(members.len());
    let mut edges = 0usize;
    for j in 1..members.len() {
        for i in 0..j {
            if g.color_of(&[members[i], members[j]]) == c {
                dsu.union(i, j);
                edges += 1;
            }
        }
    }
    let mut sizes = vec![0usize; members.len()];
    for i in 0..members.len() {
        let root = dsu.find(i);
        sizes[root] += 1;
    }
    let parts = sizes.iter().filter(|&&s| s > 0).count();
    // Every component is a clique iff the edge total matches.
    let clique_edges: usize = sizes.iter().map(|&s| s * s.saturating_sub(1) / 2).sum();
    Ok(parts <= max_parts && clique_edges == edges)
}
