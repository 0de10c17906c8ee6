//! 3-uniform Ramsey lower-bound constructions.
//!
//! A 3-colored `K_{p-1}` with no monochromatic `K_{s_i}` in color `i` is
//! lifted to a 3-uniform 3-coloring (rainbow triangles go to a
//! distinguished color), then `copies` disjoint blocks of it are joined:
//! hyperedges meeting exactly two blocks get color 3, hyperedges meeting
//! three blocks get color 4. Every avoidance claim is re-checked by search
//! before a certificate is marked verified.

use std::fmt;
use std::str::FromStr;
use std::thread;

use crate::coloring::HyperedgeColoring;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::structure::{
    find_clique_minus_edge, find_mono_clique, generate_family, Family, MatchMode, PatternHit,
};

/// Lifts a 2-uniform 3-coloring to a 3-uniform one. A triangle with at most
/// two distinct colors gets the color appearing an odd number of times; a
/// rainbow triangle gets `distinguished`.
pub fn lift_3coloring(f: &HyperedgeColoring, distinguished: u8) -> Result<HyperedgeColoring> {
    if f.r() != 2 || f.q() != 3 {
        return Err(Error::InvalidParameters(format!(
            "rainbow lift needs a 2-uniform coloring over F_3, got {}-uniform over F_{}",
            f.r(),
            f.q()
        )));
    }
    if distinguished > 2 {
        return Err(Error::Domain(format!(
            "distinguished color {distinguished} is not in {{0,1,2}}"
        )));
    }
    HyperedgeColoring::from_fn(f.n(), 3, PrimeField::F3, |e| {
        let x = f.color_of(&[e[0], e[1]]);
        let y = f.color_of(&[e[0], e[2]]);
        let z = f.color_of(&[e[1], e[2]]);
        if x == y {
            z
        } else if x == z {
            y
        } else if y == z {
            x
        } else {
            distinguished
        }
    })
}

/// Number of colors used by [`blowup_5color`]; stored over `F_5` as plain labels.
pub const BLOWUP_COLORS: u8 = 5;

/// Joins `copies` disjoint blocks of a 3-uniform 3-coloring of `K_b`.
/// Block `i` is `[i*b, (i+1)*b)`.
pub fn blowup_5color(base: &HyperedgeColoring, copies: usize) -> Result<HyperedgeColoring> {
    if copies < 3 {
        return Err(Error::Domain(format!(
            "blow-up needs at least 3 copies (got {copies}); the fifth-color target K_{}^(3)-e would be degenerate",
            copies + 1
        )));
    }
    if base.r() != 3 || base.values().iter().any(|&v| v > 2) {
        return Err(Error::InvalidParameters(
            "blow-up base must be a 3-uniform coloring with colors 0..=2".into(),
        ));
    }
    let b = base.n();
    let field = PrimeField::new(BLOWUP_COLORS as u32)?;
    HyperedgeColoring::from_fn(b * copies, 3, field, |e| {
        let (i, j, k) = (e[0] / b, e[1] / b, e[2] / b);
        if i == k {
            base.color_of(&[e[0] % b, e[1] % b, e[2] % b])
        } else if i == j || j == k {
            3
        } else {
            4
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    Clique,
    CliqueMinusEdge,
}

/// One forbidden monochromatic pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Target {
    pub color: u8,
    pub pattern: Pattern,
    pub m: usize,
    /// Only meaningful for [`Pattern::CliqueMinusEdge`].
    pub mode: MatchMode,
}

impl Target {
    pub fn clique(color: u8, m: usize) -> Self {
        Target {
            color,
            pattern: Pattern::Clique,
            m,
            mode: MatchMode::Contains,
        }
    }

    pub fn clique_minus_edge(color: u8, m: usize, mode: MatchMode) -> Self {
        Target {
            color,
            pattern: Pattern::CliqueMinusEdge,
            m,
            mode,
        }
    }

    /// Searches `f` for this pattern. Patterns larger than `f` never occur.
    pub fn find(&self, f: &HyperedgeColoring) -> Result<Option<PatternHit>> {
        if self.m > f.n() {
            return Ok(None);
        }
        match self.pattern {
            Pattern::Clique => find_mono_clique(f, self.color, self.m),
            Pattern::CliqueMinusEdge => find_clique_minus_edge(f, self.color, self.m, self.mode),
        }
    }

    /// `K_m^(r)` or `K_m^(r)-e`.
    pub fn hypergraph_name(&self, r: usize) -> String {
        match self.pattern {
            Pattern::Clique => format!("K_{}^({r})", self.m),
            Pattern::CliqueMinusEdge => format!("K_{}^({r})-e", self.m),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pattern {
            Pattern::Clique => write!(f, "{}:clique:{}", self.color, self.m),
            Pattern::CliqueMinusEdge => {
                write!(f, "{}:cliqueminus:{}:{}", self.color, self.m, self.mode)
            }
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::InvalidParameters(format!(
                "target `{s}` is not <color>:<clique|cliqueminus>:<m>[:induced|:contains]"
            ))
        };
        let parts: Vec<&str> = s.trim().split(':').collect();
        if !(3..=4).contains(&parts.len()) {
            return Err(bad());
        }
        let color: u8 = parts[0].parse().map_err(|_| bad())?;
        let m: usize = parts[2].parse().map_err(|_| bad())?;
        let mode = match parts.get(3) {
            None | Some(&"contains") => MatchMode::Contains,
            Some(&"induced") => MatchMode::Induced,
            Some(_) => return Err(bad()),
        };
        match parts[1] {
            "clique" => Ok(Target::clique(color, m)),
            "cliqueminus" => Ok(Target::clique_minus_edge(color, m, mode)),
            _ => Err(bad()),
        }
    }
}

/// Forbidden patterns, at most one per color.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AvoidanceSpec {
    targets: Vec<Target>,
}

impl AvoidanceSpec {
    pub fn new(targets: Vec<Target>) -> Result<Self> {
        for (i, t) in targets.iter().enumerate() {
            if targets[..i].iter().any(|u| u.color == t.color) {
                return Err(Error::InvalidParameters(format!(
                    "color {} has more than one target",
                    t.color
                )));
            }
        }
        Ok(AvoidanceSpec { targets })
    }

    pub fn targets(&self) -> &[Target] {
        &self.targets
    }

    fn validate_for(&self, f: &HyperedgeColoring) -> Result<()> {
        let r = f.r();
        for t in &self.targets {
            if t.color >= f.q() {
                return Err(Error::InvalidParameters(format!(
                    "target color {} is not a color of this coloring (q = {})",
                    t.color,
                    f.q()
                )));
            }
            let ok = match t.pattern {
                Pattern::Clique => t.m >= r,
                Pattern::CliqueMinusEdge => t.m > r,
            };
            if !ok {
                return Err(Error::InvalidParameters(format!(
                    "target {t} is too small for {r}-uniform hyperedges"
                )));
            }
        }
        Ok(())
    }

    /// `R(H_0, ..., H_k; r) > n`, listing targets in color order.
    pub fn statement(&self, r: usize, n: usize) -> String {
        let mut ordered = self.targets.clone();
        ordered.sort_by_key(|t| t.color);
        let names: Vec<String> = ordered.iter().map(|t| t.hypergraph_name(r)).collect();
        format!("R({}; {r}) > {n}", names.join(", "))
    }
}

impl fmt::Display for AvoidanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.targets.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for AvoidanceSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let targets = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        AvoidanceSpec::new(targets)
    }
}

/// A coloring together with the avoidance claim it witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub coloring: HyperedgeColoring,
    pub spec: AvoidanceSpec,
    pub statement: String,
    pub verified: bool,
    pub violations: Vec<PatternHit>,
}

/// Searches for every target; the result is verified iff none is found.
/// Targets are searched on separate threads; violations keep target order.
pub fn verify_avoidance(f: &HyperedgeColoring, spec: &AvoidanceSpec) -> Result<Certificate> {
    spec.validate_for(f)?;
    let results: Vec<Result<Option<PatternHit>>> = thread::scope(|scope| {
        let handles: Vec<_> = spec
            .targets
            .iter()
            .map(|t| scope.spawn(move || t.find(f)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("target search panicked"))
            .collect()
    });
    let mut violations = Vec::new();
    for hit in results {
        violations.extend(hit?);
    }
    Ok(Certificate {
        coloring: f.clone(),
        spec: spec.clone(),
        statement: spec.statement(f.r(), f.n()),
        verified: violations.is_empty(),
        violations,
    })
}

/// The forbidden patterns of the blown-up coloring built from a base that
/// avoids `K_{sizes[i]}` in color `i`.
pub fn blowup_spec(sizes: [usize; 3], copies: usize) -> AvoidanceSpec {
    AvoidanceSpec {
        targets: vec![
            Target::clique_minus_edge(0, 2 * sizes[0] - 1, MatchMode::Contains),
            Target::clique(1, 2 * sizes[1] - 1),
            Target::clique(2, 2 * sizes[2] - 1),
            Target::clique(3, 5),
            Target::clique_minus_edge(4, copies + 1, MatchMode::Contains),
        ],
    }
}

/// Full pipeline from a 3-colored complete graph: self-check the base,
/// lift, blow up, and verify.
pub fn certify_bound(
    base: &HyperedgeColoring,
    sizes: [usize; 3],
    copies: usize,
) -> Result<Certificate> {
    if base.r() != 2 || base.q() != 3 {
        return Err(Error::InvalidParameters(
            "certificate base must be a 2-uniform coloring over F_3".into(),
        ));
    }
    if let Some(s) = sizes.iter().find(|&&s| s < 3) {
        return Err(Error::InvalidParameters(format!(
            "clique sizes must be at least 3, got {s}"
        )));
    }
    if copies < 3 {
        return Err(Error::Domain(format!(
            "blow-up needs at least 3 copies, got {copies}"
        )));
    }
    for (color, &s) in sizes.iter().enumerate() {
        if s > base.n() {
            continue;
        }
        if let Some(hit) = find_mono_clique(base, color as u8, s)? {
            return Err(Error::Domain(format!(
                "base coloring contains a monochromatic K_{s}: {hit}"
            )));
        }
    }
    let lifted = lift_3coloring(base, 0)?;
    let blown = blowup_5color(&lifted, copies)?;
    verify_avoidance(&blown, &blowup_spec(sizes, copies))
}

/// [`certify_bound`] on a generated family, assuming it avoids monochromatic triangles.
pub fn certify_family(family: &Family, copies: usize) -> Result<Certificate> {
    let base = generate_family(family)?;
    if base.q() != 3 {
        return Err(Error::InvalidParameters(format!(
            "{family} is not a 3-coloring"
        )));
    }
    certify_bound(&base, [3, 3, 3], copies)
}

const CERT_PREFIX: &str = "# CERT ";

impl Certificate {
    /// The coloring in `HEC 1` format followed by one `# CERT` line.
    pub fn to_text(&self) -> String {
        format!(
            "{}{CERT_PREFIX}statement={} verified={} targets={}\n",
            self.coloring.to_text(),
            self.statement,
            self.verified,
            self.spec
        )
    }
}

/// Metadata recorded on a `# CERT` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateHeader {
    pub statement: String,
    pub verified: bool,
    pub spec: AvoidanceSpec,
}

/// Reads a coloring file and its `# CERT` line, if any. Claims are not trusted;
/// re-run [`verify_avoidance`] with the header's spec.
pub fn parse_certificate(text: &str) -> Result<(HyperedgeColoring, Option<CertificateHeader>)> {
    let coloring = HyperedgeColoring::parse(text)?;
    let Some((line_no, line)) = text
        .lines()
        .enumerate()
        .find(|(_, l)| l.trim_start().starts_with(CERT_PREFIX.trim_end()))
    else {
        return Ok((coloring, None));
    };
    let err = |message: &str| Error::Parse {
        line: line_no + 1,
        column: 1,
        message: message.to_string(),
    };
    let body = line.trim_start()[CERT_PREFIX.len() - 1..].trim_start();
    let body = body
        .strip_prefix("statement=")
        .ok_or_else(|| err("expected statement="))?;
    let (statement, rest) = body
        .rsplit_once(" verified=")
        .ok_or_else(|| err("expected verified="))?;
    let (verified, targets) = rest
        .split_once(" targets=")
        .ok_or_else(|| err("expected targets="))?;
    let verified = match verified {
        "true" => true,
        "false" => false,
        _ => return Err(err("verified must be true or false")),
    };
    let spec = targets
        .trim()
        .parse()
        .map_err(|e: Error| err(&e.to_string()))?;
    Ok((
        coloring,
        Some(CertificateHeader {
            statement: statement.to_string(),
            verified,
            spec,
        }),
    ))
}
