//! Named graph colorings used throughout the checks and constructions.

use std::collections::BTreeMap;
use std::fmt;

use crate::coloring::HyperedgeColoring;
use crate::error::{Error, Result};
use crate::field::{gf16, PrimeField};
use crate::subsets::MAX_BINOM_N;

use super::find_mono_clique;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `K_n` as an all-ones graph.
    Complete { n: usize },
    /// `K_{s,t}` with parts `[0, s)` and `[s, s + t)`.
    Bipartite { s: usize, t: usize },
    /// `K_s + K_t` (disjoint union) on the same parts as `Bipartite`.
    CliqueUnion { s: usize, t: usize },
    /// 3-coloring of `K_5`: color 1 on the cycle 0-1-2-3-4-0, color 2 elsewhere.
    Pentagon,
    /// 2-coloring of `K_p`, color 1 iff the difference is a nonzero square mod `p`.
    Paley { p: usize },
    /// 3-coloring of `K_16` on GF(16): `{x, y}` gets `log(x + y) mod 3`.
    Gf16ThreeColoring,
}

impl Family {
    pub const NAMES: [&'static str; 6] = [
        "complete",
        "bipartite",
        "clique_union",
        "pentagon",
        "paley",
        "gf16_3coloring",
    ];

    /// Builds a family from its name and a `k=v,...` parameter string.
    pub fn from_parts(name: &str, params: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for item in params.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item.split_once('=').ok_or_else(|| {
                Error::InvalidParameters(format!("parameter `{item}` is not k=v"))
            })?;
            let v: usize = v.trim().parse().map_err(|_| {
                Error::InvalidParameters(format!("parameter `{item}` is not an integer"))
            })?;
            map.insert(k.trim().to_string(), v);
        }
        let mut take = |key: &str| {
            map.remove(key).ok_or_else(|| {
                Error::InvalidParameters(format!("family `{name}` needs parameter `{key}`"))
            })
        };
        let family = match name {
            "complete" => Family::Complete { n: take("n")? },
            "bipartite" => Family::Bipartite {
                s: take("s")?,
                t: take("t")?,
            },
            "clique_union" => Family::CliqueUnion {
                s: take("s")?,
                t: take("t")?,
            },
            "pentagon" => Family::Pentagon,
            "paley" => Family::Paley { p: take("p")? },
            "gf16_3coloring" => Family::Gf16ThreeColoring,
            other => {
                return Err(Error::InvalidParameters(format!(
                    "unknown family `{other}` (expected one of {})",
                    Self::NAMES.join(", ")
                )))
            }
        };
        if let Some(extra) = map.keys().next() {
            return Err(Error::InvalidParameters(format!(
                "family `{name}` has no parameter `{extra}`"
            )));
        }
        Ok(family)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete { .. } => "complete",
            Family::Bipartite { .. } => "bipartite",
            Family::CliqueUnion { .. } => "clique_union",
            Family::Pentagon => "pentagon",
            Family::Paley { .. } => "paley",
            Family::Gf16ThreeColoring => "gf16_3coloring",
        }
    }

    /// Number of vertices of the generated coloring.
    pub fn order(&self) -> usize {
        match *self {
            Family::Complete { n } => n,
            Family::Bipartite { s, t } | Family::CliqueUnion { s, t } => s + t,
            Family::Pentagon => 5,
            Family::Paley { p } => p,
            Family::Gf16ThreeColoring => 16,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Complete { n } => write!(f, "complete(n={n})"),
            Family::Bipartite { s, t } => write!(f, "bipartite(s={s},t={t})"),
            Family::CliqueUnion { s, t } => write!(f, "clique_union(s={s},t={t})"),
            Family::Paley { p } => write!(f, "paley(p={p})"),
            _ => f.write_str(self.name()),
        }
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

pub fn generate_family(family: &Family) -> Result<HyperedgeColoring> {
    let f2 = PrimeField::F2;
    match *family {
        Family::Complete { n } => HyperedgeColoring::constant(n, 2, f2, 1),
        Family::Bipartite { s, t } | Family::CliqueUnion { s, t } => {
            if s == 0 || t == 0 {
                return Err(Error::InvalidParameters(format!(
                    "{family}: both parts must be nonempty"
                )));
            }
            let cross = matches!(family, Family::Bipartite { .. });
            HyperedgeColoring::from_fn(s + t, 2, f2, |e| {
                u8::from(((e[0] < s) != (e[1] < s)) == cross)
            })
        }
        Family::Pentagon => HyperedgeColoring::from_fn(5, 2, PrimeField::F3, |e| {
            if matches!(e[1] - e[0], 1 | 4) {
                1
            } else {
                2
            }
        }),
        Family::Paley { p } => {
            if !is_prime(p) || p % 4 != 1 || p > MAX_BINOM_N {
                return Err(Error::InvalidParameters(format!(
                    "paley needs a prime p = 1 (mod 4), p <= {MAX_BINOM_N}; got {p}"
                )));
            }
            let mut square = vec![false; p];
            for x in 1..p {
                square[x * x % p] = true;
            }
            HyperedgeColoring::from_fn(p, 2, f2, |e| u8::from(square[e[1] - e[0]]))
        }
        Family::Gf16ThreeColoring => {
            let log = gf16::log_table();
            let g = HyperedgeColoring::from_fn(16, 2, PrimeField::F3, |e| {
                log[gf16::add(e[0] as u8, e[1] as u8) as usize] % 3
            })?;
            for c in 0..3 {
                if let Some(hit) = find_mono_clique(&g, c, 3)? {
                    return Err(Error::Domain(format!(
                        "gf16_3coloring has a monochromatic triangle: {hit}"
                    )));
                }
            }
            Ok(g)
        }
    }
}
