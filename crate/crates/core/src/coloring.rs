//! Hyperedge colorings of `K_n^(r)` with values in a prime field.
//!
//! A coloring is a dense vector indexed by the colex rank of each
//! `r`-subset. Graphs are 2-uniform colorings over `F_2` (1 = edge).

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::subsets::{choose, rank_sorted, VertexSet, MAX_BINOM_N};

/// Largest number of hyperedges a coloring may hold.
pub const MAX_COLORING_LEN: usize = 1 << 26;

const VALUES_PER_LINE: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperedgeColoring {
    n: usize,
    r: usize,
    field: PrimeField,
    values: Vec<u8>,
}

fn check_shape(n: usize, r: usize) -> Result<usize> {
    if r < 2 || n < r {
        return Err(Error::InvalidParameters(format!(
            "coloring of K_{n}^({r}) requires n >= r >= 2"
        )));
    }
    if n > MAX_BINOM_N {
        return Err(Error::Range(format!(
            "n = {n} exceeds {MAX_BINOM_N} vertices"
        )));
    }
    let len = choose(n, r);
    if len > MAX_COLORING_LEN {
        return Err(Error::Resource(format!(
            "C({n}, {r}) = {len} hyperedges exceeds the dense storage limit {MAX_COLORING_LEN}"
        )));
    }
    Ok(len)
}

impl HyperedgeColoring {
    /// Wraps a value vector, checking length and range.
    pub fn new(n: usize, r: usize, field: PrimeField, values: Vec<u8>) -> Result<Self> {
        let len = check_shape(n, r)?;
        if values.len() != len {
            return Err(Error::ShapeMismatch(format!(
                "K_{n}^({r}) has {len} hyperedges, got {} values",
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v >= field.order()) {
            return Err(Error::Domain(format!("value {v} is not in {field}")));
        }
        Ok(HyperedgeColoring {
            n,
            r,
            field,
            values,
        })
    }

    pub fn constant(n: usize, r: usize, field: PrimeField, c: u8) -> Result<Self> {
        let len = check_shape(n, r)?;
        let c = field.element(c as u32)?;
        Ok(HyperedgeColoring {
            n,
            r,
            field,
            values: vec![c; len],
        })
    }

    pub fn zeros(n: usize, r: usize, field: PrimeField) -> Result<Self> {
        Self::constant(n, r, field, 0)
    }

    /// The basis coloring that is 1 on `e` and 0 elsewhere.
    pub fn basis(n: usize, r: usize, field: PrimeField, e: &VertexSet) -> Result<Self> {
        if e.len() != r {
            return Err(Error::InvalidParameters(format!(
                "basis hyperedge {e} does not have {r} vertices"
            )));
        }
        if e.bound() > n {
            return Err(Error::InvalidParameters(format!(
                "hyperedge {e} is not inside [0, {n})"
            )));
        }
        let mut out = Self::zeros(n, r, field)?;
        out.values[rank_sorted(e.members())] = 1;
        Ok(out)
    }

    /// Colors each hyperedge (given in colex order as a sorted slice) by `color`.
    pub fn from_fn(
        n: usize,
        r: usize,
        field: PrimeField,
        mut color: impl FnMut(&[usize]) -> u8,
    ) -> Result<Self> {
        let len = check_shape(n, r)?;
        let mut values = Vec::with_capacity(len);
        crate::subsets::for_each_subset(n, r, |e| values.push(color(e)));
        Self::new(n, r, field, values)
    }

    /// A graph on `n` vertices as a 2-uniform `F_2` coloring.
    pub fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::zeros(n, 2, PrimeField::F2)?;
        for &(a, b) in edges {
            if a == b || a >= n || b >= n {
                return Err(Error::InvalidParameters(format!(
                    "invalid edge ({a}, {b}) for n = {n}"
                )));
            }
            let (lo, hi) = (a.min(b), a.max(b));
            g.values[rank_sorted(&[lo, hi])] = 1;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Uniformity.
    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn q(&self) -> u8 {
        self.field.order()
    }

    #[inline]
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u8> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Color of a hyperedge given as a strictly increasing slice of `r` vertices.
    #[inline]
    pub fn color_of(&self, e: &[usize]) -> u8 {
        debug_assert_eq!(e.len(), self.r);
        self.values[rank_sorted(e)]
    }

    pub fn get(&self, e: &VertexSet) -> Result<u8> {
        self.check_edge(e)?;
        Ok(self.values[rank_sorted(e.members())])
    }

    pub fn set(&mut self, e: &VertexSet, c: u8) -> Result<()> {
        self.check_edge(e)?;
        let c = self.field.element(c as u32)?;
        self.values[rank_sorted(e.members())] = c;
        Ok(())
    }

    fn check_edge(&self, e: &VertexSet) -> Result<()> {
        if e.len() != self.r || e.bound() > self.n {
            return Err(Error::InvalidParameters(format!(
                "{e} is not a hyperedge of K_{}^({})",
                self.n, self.r
            )));
        }
        Ok(())
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.n == other.n && self.r == other.r && self.field == other.field
    }

    fn require_same_shape(&self, other: &Self) -> Result<()> {
        if !self.same_shape(other) {
            return Err(Error::ShapeMismatch(format!(
                "K_{}^({}) over {} vs K_{}^({}) over {}",
                self.n, self.r, self.field, other.n, other.r, other.field
            )));
        }
        Ok(())
    }

    /// `alpha * a + b`, componentwise.
    pub fn combine(a: &Self, b: &Self, alpha: u8) -> Result<Self> {
        a.require_same_shape(b)?;
        let f = a.field;
        let alpha = f.element(alpha as u32)?;
        let values = a
            .values
            .iter()
            .zip(&b.values)
            .map(|(&x, &y)| f.add(f.mul(alpha, x), y))
            .collect();
        Ok(HyperedgeColoring {
            values,
            ..a.clone()
        })
    }

    /// Swaps 0 and 1 on every hyperedge. Only defined over `F_2`.
    pub fn complement(&self) -> Result<Self> {
        if self.q() != 2 {
            return Err(Error::Domain(format!(
                "complement is defined over F_2 only, not {}",
                self.field
            )));
        }
        Ok(HyperedgeColoring {
            values: self.values.iter().map(|v| v ^ 1).collect(),
            ..self.clone()
        })
    }

    /// Sum of all values in the field.
    pub fn total_sum(&self) -> u8 {
        let raw: u64 = self.values.iter().map(|&v| v as u64).sum();
        self.field.reduce(raw)
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<usize> {
        self.require_same_shape(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .filter(|(a, b)| a != b)
            .count())
    }

    /// Number of nonzero values.
    pub fn weight(&self) -> usize {
        self.values.iter().filter(|&&v| v != 0).count()
    }

    /// Canonical text form (`HEC 1` format).
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 + self.values.len() * 2);
        out.push_str("HEC 1\n");
        let _ = writeln!(out, "n={} r={} q={}", self.n, self.r, self.q());
        for chunk in self.values.chunks(VALUES_PER_LINE) {
            for (i, v) in chunk.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
        out
    }

    /// Parses the `HEC 1` format. Whitespace-tolerant; `#` lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, column: usize, message: String| Error::Parse {
            line,
            column,
            message,
        };
        // (line number, column of token start, token)
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| {
                let t = l.trim_start();
                !t.is_empty() && !t.starts_with('#')
            });

        let (ln, magic) = lines
            .next()
            .ok_or_else(|| err(1, 1, "missing `HEC 1` header".into()))?;
        if magic.split_whitespace().collect::<Vec<_>>() != ["HEC", "1"] {
            return Err(err(
                ln,
                1,
                format!("expected `HEC 1`, found `{}`", magic.trim()),
            ));
        }

        let (ln, dims) = lines
            .next()
            .ok_or_else(|| err(ln + 1, 1, "missing `n=.. r=.. q=..` line".into()))?;
        let mut params = [0usize; 3];
        let mut seen = 0;
        for (col, tok) in tokens(dims) {
            let key = ["n", "r", "q"]
                .get(seen)
                .ok_or_else(|| err(ln, col, format!("unexpected token `{tok}`")))?;
            let value = tok
                .strip_prefix(key)
                .and_then(|t| t.strip_prefix('='))
                .ok_or_else(|| err(ln, col, format!("expected `{key}=<int>`, found `{tok}`")))?;
            params[seen] = value
                .parse()
                .map_err(|_| err(ln, col, format!("`{value}` is not a nonnegative integer")))?;
            seen += 1;
        }
        if seen != 3 {
            return Err(err(ln, 1, "expected `n=<n> r=<r> q=<q>`".into()));
        }
        let [n, r, q] = params;
        let field = PrimeField::new(q as u32).map_err(|e| err(ln, 1, e.to_string()))?;
        let expected = check_shape(n, r).map_err(|e| err(ln, 1, e.to_string()))?;

        let mut values = Vec::with_capacity(expected);
        let mut last = (ln, 1);
        for (ln, line) in lines {
            for (col, tok) in tokens(line) {
                last = (ln, col);
                let v: u32 = tok
                    .parse()
                    .map_err(|_| err(ln, col, format!("`{tok}` is not a color value")))?;
                if v >= q as u32 {
                    return Err(err(ln, col, format!("value {v} is not below q = {q}")));
                }
                if values.len() == expected {
                    return Err(err(
                        ln,
                        col,
                        format!("more than C({n}, {r}) = {expected} values"),
                    ));
                }
                values.push(v as u8);
            }
        }
        if values.len() != expected {
            return Err(err(
                last.0,
                last.1,
                format!(
                    "expected C({n}, {r}) = {expected} values, found {}",
                    values.len()
                ),
            ));
        }
        Self::new(n, r, field, values)
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - line.as_ptr() as usize + 1, tok))
}

impl FromStr for HyperedgeColoring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
