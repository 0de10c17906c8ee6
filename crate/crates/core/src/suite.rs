//! Seeded property suites for the structural results about lifting maps.
//!
//! Each suite returns one [`CheckRow`] per result. Exhaustive ranges have a
//! built-in cap that `n_max` can only lower. Random samples come from a
//! ChaCha stream keyed by the seed and the suite name, so a suite's output
//! does not depend on which other suites run.

use std::collections::HashSet;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::HyperedgeColoring;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::lifting::{apply_lift, min_kernel_weight, rank_kernel, LiftSpec, DEFAULT_SPAN_BUDGET};
use crate::ramsey::{blowup_5color, certify_family, lift_3coloring};
use crate::structure::{
    classify_r_behavior, find_clique_minus_edge, find_mono_clique, generate_family,
    induced_color_counts, is_union_of_cliques, mono_components, Behavior, Family, MatchMode,
};
use crate::subsets::{binom, pair_parity, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRow {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    pub n_max: Option<usize>,
}

impl CheckConfig {
    fn cap(&self, natural: usize) -> usize {
        self.n_max.map_or(natural, |n| n.min(natural))
    }

    fn rng(&self, suite: &str) -> ChaCha8Rng {
        // FNV-1a of the suite name keeps streams independent per suite.
        let salt = suite.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
            (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
        });
        ChaCha8Rng::seed_from_u64(self.seed ^ salt)
    }
}

type SuiteFn = fn(&CheckConfig) -> Result<Vec<CheckRow>>;

/// Suite names accepted by [`run_suite`], in report order.
pub const SUITES: [(&str, SuiteFn); 9] = [
    ("preimage", preimage_suite),
    ("min-distance", min_distance_suite),
    ("sums", sums_suite),
    ("complement", complement_suite),
    ("clique-minus-edge", clique_minus_edge_suite),
    ("components", components_suite),
    ("classification", classification_suite),
    ("rainbow", rainbow_suite),
    ("certificates", certificates_suite),
];

/// Runs one suite by name, or every suite for `"all"`.
pub fn run_suite(name: &str, config: &CheckConfig) -> Result<Vec<CheckRow>> {
    if name == "all" {
        let mut rows = Vec::new();
        for (_, suite) in SUITES {
            rows.extend(suite(config)?);
        }
        return Ok(rows);
    }
    let (_, suite) = SUITES.iter().find(|(n, _)| *n == name).ok_or_else(|| {
        let names: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
        Error::InvalidParameters(format!(
            "unknown suite `{name}` (expected all, {})",
            names.join(", ")
        ))
    })?;
    suite(config)
}

/// One line per row: `PASS|FAIL  <name>  <detail>`.
pub fn format_report(rows: &[CheckRow]) -> String {
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for row in rows {
        let status = if row.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status}  {:width$}  {}", row.name, row.detail);
    }
    let failed = rows.iter().filter(|r| !r.passed).count();
    let _ = writeln!(out, "{} checks, {failed} failed", rows.len());
    out
}

/// A uniformly random coloring.
pub fn random_coloring(
    rng: &mut impl Rng,
    n: usize,
    r: usize,
    field: PrimeField,
) -> Result<HyperedgeColoring> {
    let q = field.order();
    HyperedgeColoring::from_fn(n, r, field, |_| rng.gen_range(0..q))
}

/// Every coloring of `K_n^(r)` over `F_2`, by counting in binary.
fn all_f2_colorings(n: usize, r: usize) -> Result<impl Iterator<Item = HyperedgeColoring>> {
    let len = binom(n, r)? as u32;
    if len > 24 {
        return Err(Error::Resource(format!(
            "2^{len} colorings is too many to enumerate"
        )));
    }
    Ok((0u64..1 << len).map(move |bits| {
        let values = (0..len).map(|i| ((bits >> i) & 1) as u8).collect();
        HyperedgeColoring::new(n, r, PrimeField::F2, values).expect("shape checked above")
    }))
}

/// Subsets of `[0, n)` with at least `min` members.
fn subsets_at_least(n: usize, min: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n)
        .filter(move |mask| mask.count_ones() as usize >= min)
        .map(move |mask| {
            VertexSet::from_sorted_unchecked((0..n).filter(|&v| mask >> v & 1 == 1).collect())
        })
}

fn pow2(k: usize) -> u64 {
    1u64 << k
}

fn row(name: &'static str, passed: bool, detail: String) -> CheckRow {
    CheckRow {
        name,
        passed,
        detail,
    }
}

fn preimage_suite(cfg: &CheckConfig) -> Result<Vec<CheckRow>> {
    let mut ok = true;
    let mut detail = String::new();
    for n in 4..=cfg.cap(8).max(4) {
        let summary = rank_kernel(&LiftSpec::new(2, n, 2, 3)?)?;
        let expected = pow2(n - 1);
        ok &= summary.preimage_count == expected.into();
        let _ = write!(detail, "n={n}:{} ", summary.preimage_count);
    }
    for n in 4..=cfg.cap(5).max(4) {
        let spec = LiftSpec::new(2, n, 2, 3)?;
        let mut images = HashSet::new();
        for f in all_f2_colorings(n, 2)? {
            images.insert(apply_lift(&spec, &f)?.into_values());
        }
        let pairs = n * (n - 1) / 2;
        ok &= images.len() as u64 == pow2(pairs - (n - 1));
        let _ = write!(detail, "images(n={n})={} ", images.len());
    }
    Ok(vec![row(
        "preimage-count",
        ok,
        detail.trim_end().to_string(),
    )])
}

fn min_distance_suite(cfg: &CheckConfig) -> Result<Vec<CheckRow>> {
    let mut ok = true;
    let mut detail = String::new();
    let mut cases: Vec<(usize, usize, usize)> =
        (5..=cfg.cap(7).max(5)).map(|n| (n, 2, 3)).collect();
    cases.push((6, 3, 4));
    for (n, s, r) in cases {
        let w = min_kernel_weight(&LiftSpec::new(2, n, s, r)?, DEFAULT_SPAN_BUDGET)?;
        let bound = n - r + 2;
        let good = w.is_some_and(|w| w >= bound && !(n == 5 && r == 3 && w != 4));
        ok &= good;
        let _ = write!(
            detail,
            "q=2 n={n} ({s},{r}):{} ",
            w.map_or("-".into(), |w| w.to_string())
        );
    }
    // Reported only: the bound is not asserted over F_3.
    for n in [4, 5] {
        let w = min_kernel_weight(&LiftSpec::new(3, n, 2, 3)?, DEFAULT_SPAN_BUDGET)?;
        let _ = write!(
            detail,
            "q=3 n={n} (2,3):{} ",
            w.map_or("-".into(), |w| w.to_string())
        );
    }
    Ok(vec![row("min-distance", ok, detail.trim_end().to_string())])
}

const SUM_CONFIGS: [(usize, usize, usize); 4] = [(4, 2, 3), (5, 2, 3), (6, 2, 4), (7, 3, 4)];

fn sums_suite(cfg: &CheckConfig) -> Result<Vec<CheckRow>> {
    let mut rng = cfg.rng("sums");
    let (mut zero_checked, mut zero_failed) = (0, 0);
    let (mut f2_checked, mut f2_failed) = (0, 0);
    for q in [2u32, 3] {
        for (n, s, r) in SUM_CONFIGS {
            if n > cfg.cap(7) {
                continue;
            }
            let spec = LiftSpec::new(q, n, s, r)?;
            let mult = binom(n - s, r - s)?;
            for _ in 0..200 {
                let f = random_coloring(&mut rng, n, s, spec.field())?;
                let total = apply_lift(&spec, &f)?.total_sum();
                if mult % q as u64 == 0 {
                    zero_checked += 1;
                    zero_failed += usize::from(total != 0);
                }
                if q == 2 {
                    f2_checked += 1;
                    let expected = if mult % 2 == 0 { 0 } else { f.total_sum() };
                    f2_failed += usize::from(total != expected);
                }
            }
        }
    }
    Ok(vec![
        row(
            "sum-law",
            zero_failed == 0,
            format!("{zero_checked} lifts with q | C(n-s,r-s), {zero_failed} nonzero sums"),
        ),
        row(
            "sum-law-f2",
            f2_failed == 0,
            format!("{f2_checked} lifts over F_2, {f2_failed} mismatches"),
        ),
    ])
}

fn complement_suite(cfg: &CheckConfig) -> Result<Vec<CheckRow>> {
    let mut rng = cfg.rng("complement");
    let top = cfg.cap(8);
    let mut checked = 0;
    let mut failed = 0;
    for (s, r) in [(2, 3), (2, 4), (3, 4)] {
        if top <= r {
            continue;
        }
        let odd = binom(r, s)? % 2 == 1;
        for i in 0..200 {
            let n = r + 1 + i % (top - r);
            let spec = LiftSpec::new(2, n, s, r)?;
            let f = random_coloring(&mut rng, n, s, PrimeField::F2)?;
            let lifted = apply_lift(&spec, &f)?;
            let of_complement = apply_lift(&spec, &f.complement()?)?;
            let expected = if odd { lifted.complement()? } else { lifted };
            checked += 1;
            failed += usize::from(of_complement != expected);
        }
    }
    Ok(vec![row(
        "complement-law",
        checked > 0 && failed == 0,
        format!("{checked} lifts, {failed} mismatches"),
    )])
}

/// Searches every image color and every `m` in `r+1..=n` for an induced `K_m - e`.
fn induced_minus_edge_hits(g: &HyperedgeColoring) -> Result<usize> {
    let mut hits = 0;
    for c in 0..g.q() {
        for m in g.r() + 1..=g.n() {
            hits += usize::from(find_clique_minus_edge(g, c, m, MatchMode::Induced)?.is_some());
        }
    }
    Ok(hits)
}

fn clique_minus_edge_suite(cfg: &CheckConfig) -> Result<Vec<CheckRow>> {
    let mut rng = cfg.rng("clique-minus-edge");
    let mut checked = 0;
    let mut hits = 0;
    let spec = LiftSpec::new(2, 4, 2, 3)?;
    for f in all_f2_colorings(4, 2)? {
        hits += induced_minus_edge_hits(&apply_lift(&spec, &f)?)?;
        checked += 1;
    }
    for (r, n) in [(3, 7), (5, 7)] {
        let n = cfg.cap(n);
        if n <= r {
            continue;
        }
        let spec = LiftSpec::new(2, n, r - 1, r)?;
        for _ in 0..500 {
            let f = random_coloring(&mut rng, n, r - 1, PrimeField::F2)?;
            hits += induced_minus_edge_hits(&apply_lift(&spec, &f)?)?;
            checked += 1;
        }
    }
    Ok(vec![row(
        "no-induced-clique-minus-edge",
        hits == 0,
        format!("{checked} images searched, {hits} hits"),
    )])
}

/// Tallies for one monochromatic image set `S` under the three readings of
/// "components in that color": the image color itself, color 1, color 0.
#[derive(Debug, Default, Clone, Copy)]
pub struct ComponentTally {
    pub sets: usize,
    pub same_color_violations: usize,
    pub color1_violations: usize,
    pub color0_violations: usize,
    pub clique_union_violations: usize,
}

/// Checks every `S` (|S| >= r) on which `g = lift(f)` is monochromatic.
pub fn tally_components(
    f: &HyperedgeColoring,
    g: &HyperedgeColoring,
    tally: &mut ComponentTally,
) -> Result<()> {
    let r = g.r();
    for set in subsets_at_least(g.n(), r) {
        let counts = induced_color_counts(g, &set)?;
        let total = binom(set.len(), r)? as usize;
        let Some(c) = counts.iter().position(|&k| k == total) else {
            continue;
        };
        let c = c as u8;
        tally.sets += 1;
        let bound = r - 1;
        tally.same_color_violations += usize::from(mono_components(f, &set, c)? > bound);
        tally.color1_violations += usize::from(mono_components(f, &set, 1)? > bound);
        tally.color0_violations += usize::from(mono_components(f, &set, 0)? > bound);
        if f.r() == 2 {
            tally.clique_union_violations += usize::from(!is_union_of_cliques(f, &set, c, 2)?);
        }
    }
    Ok(())
}

fn components_suite(cfg: &CheckConfig) -> Result<Vec<CheckRow>> {
    let mut rng = cfg.rng("components");
    let mut t3 = ComponentTally::default();
    for n in 3..=cfg.cap(6) {
        let spec = LiftSpec::new(2, n, 2, 3)?;
        for f in all_f2_colorings(n, 2)? {
            tally_components(&f, &apply_lift(&spec, &f)?, &mut t3)?;
        }
    }
    let mut t5 = ComponentTally::default();
    for n in [7, 8] {
        if n > cfg.cap(8) {
            continue;
        }
        let spec = LiftSpec::new(2, n, 4, 5)?;
        for _ in 0..200 {
            let f = random_coloring(&mut rng, n, 4, PrimeField::F2)?;
            tally_components(&f, &apply_lift(&spec, &f)?, &mut t5)?;
        }
    }
    let describe = |t: &ComponentTally| {
        format!(
            "{} mono sets; violations same-color={} color-1={} color-0={}",
            t.sets, t.same_color_violations, t.color1_violations, t.color0_violations
        )
    };
    Ok(vec![
        row(
            "component-bound-r3",
            t3.same_color_violations == 0 && t3.clique_union_violations == 0,
            format!(
                "{}; clique-union violations={}",
                describe(&t3),
                t3.clique_union_violations
            ),
        ),
        row(
            "component-bound-r5",
            t5.same_color_violations == 0,
            describe(&t5),
        ),
    ])
}

/// The classification predicted for two disjoint cliques at `r`.
pub fn predicted_two_clique(r: usize) -> Behavior {
    match r % 4 {
        1 => Behavior::Void,
        3 => Behavior::Complete,
        _ => Behavior::Neutral,
    }
}

fn classification_suite(cfg: &CheckConfig) -> Result<Vec<CheckRow>> {
    let top = cfg.cap(9);
    let mut rows = Vec::new();

    let (mut checked, mut failed) = (0, 0);
    for s in 1..top {
        for t in s..=top - s {
            let g = generate_family(&Family::Bipartite { s, t })?;
            for r in (3..=s + t).step_by(2) {
                checked += 1;
                failed += usize::from(classify_r_behavior(&g, r)?.tag != Behavior::Void);
            }
        }
    }
    rows.push(row(
        "bipartite-void",
        failed == 0,
        format!("{checked} (graph, odd r) cases, {failed} not void"),
    ));

    let (mut checked, mut failed) = (0, 0);
    for r in 1..=20 {
        for u in 0..r {
            let p = pair_parity(u, r)?;
            let expected = match r % 4 {
                0 => Some((u % 2) as u8),
                2 => Some(((u + 1) % 2) as u8),
                _ => None,
            };
            if let Some(e) = expected {
                checked += 1;
                failed += usize::from(p != e);
            }
        }
    }
    rows.push(row(
        "pair-parity",
        failed == 0,
        format!("{checked} (u, r) cases, {failed} mismatches"),
    ));

    let (mut checked, mut failed) = (0, 0);
    for s in 1..top {
        for t in s..=top - s {
            let g = generate_family(&Family::CliqueUnion { s, t })?;
            for r in 3..s + t {
                checked += 1;
                failed += usize::from(classify_r_behavior(&g, r)?.tag != predicted_two_clique(r));
            }
        }
    }
    rows.push(row(
        "two-clique-trichotomy",
        failed == 0,
        format!("{checked} (graph, r) cases, {failed} mismatches"),
    ));

    let (mut checked, mut failed, mut dual_failed) = (0, 0, 0);
    for n in 3..=cfg.cap(6) {
        for g in all_f2_colorings(n, 2)? {
            for r in 3..=n {
                let tag = classify_r_behavior(&g, r)?.tag;
                let image = apply_lift(&LiftSpec::new(2, n, 2, r)?, &g)?;
                let all_ones = image.weight() == image.len();
                let all_zeros = image.weight() == 0;
                checked += 1;
                failed += usize::from(
                    (tag == Behavior::Complete) != all_ones || (tag == Behavior::Void) != all_zeros,
                );
            }
            let at3 = classify_r_behavior(&g, 3)?.tag;
            let complement_at3 = classify_r_behavior(&g.complement()?, 3)?.tag;
            dual_failed +=
                usize::from((at3 == Behavior::Complete) != (complement_at3 == Behavior::Void));
        }
    }
    rows.push(row(
        "classifier-lift-agreement",
        failed == 0 && dual_failed == 0,
        format!("{checked} (graph, r) cases, {failed} disagreements, {dual_failed} complement-duality failures"),
    ));
    Ok(rows)
}

/// Smallest `s >= 3` such that `f` has no monochromatic `K_s` in `color`.
fn smallest_avoided_clique(f: &HyperedgeColoring, color: u8) -> Result<usize> {
    let mut s = 3;
    while s <= f.n() && find_mono_clique(f, color, s)?.is_some() {
        s += 1;
    }
    Ok(s)
}

/// Checks that the rainbow lift of `base` avoids `K_{2s_i-1}` in color `i`
/// and `K_{2s_0-1} - e` (contains) in color 0. Returns the number of failures.
pub fn rainbow_transfer_failures(base: &HyperedgeColoring) -> Result<usize> {
    let lifted = lift_3coloring(base, 0)?;
    let mut failures = 0;
    for color in 0..3u8 {
        let m = 2 * smallest_avoided_clique(base, color)? - 1;
        if m > lifted.n() {
            continue;
        }
        failures += usize::from(find_mono_clique(&lifted, color, m)?.is_some());
        if color == 0 {
            failures +=
                usize::from(find_clique_minus_edge(&lifted, 0, m, MatchMode::Contains)?.is_some());
        }
    }
    Ok(failures)
}

fn rainbow_suite(cfg: &CheckConfig) -> Result<Vec<CheckRow>> {
    let mut rng = cfg.rng("rainbow");
    let top = cfg.cap(8).max(3);
    let (mut checked, mut zero_failed, mut subset_failed) = (0, 0, 0);
    for _ in 0..500 {
        let n = rng.gen_range(3..=top);
        let f = random_coloring(&mut rng, n, 2, PrimeField::F3)?;
        let lifted = lift_3coloring(&f, 0)?;
        let spec = LiftSpec::new(2, n, 2, 3)?;
        let indicator = |pred: &dyn Fn(u8) -> bool| {
            HyperedgeColoring::new(
                n,
                2,
                PrimeField::F2,
                f.values().iter().map(|&v| u8::from(pred(v))).collect(),
            )
        };
        let merged = apply_lift(&spec, &indicator(&|v| v != 0)?)?;
        zero_failed += lifted
            .values()
            .iter()
            .zip(merged.values())
            .filter(|&(&l, &m)| (l == 0) != (m == 0))
            .count();
        for c in 1..3u8 {
            let lift_c = apply_lift(&spec, &indicator(&|v| v == c)?)?;
            subset_failed += lifted
                .values()
                .iter()
                .zip(lift_c.values())
                .filter(|&(&l, &m)| l == c && m != 1)
                .count();
        }
        checked += 1;
    }

    let mut transfer_checked = 0;
    let mut transfer_failed = 0;
    for family in [Family::Pentagon, Family::Gf16ThreeColoring] {
        transfer_failed += rainbow_transfer_failures(&generate_family(&family)?)?;
        transfer_checked += 1;
    }
    for _ in 0..100 {
        let n = rng.gen_range(5..=top.max(5));
        let f = random_coloring(&mut rng, n, 2, PrimeField::F3)?;
        transfer_failed += rainbow_transfer_failures(&f)?;
        transfer_checked += 1;
    }
    Ok(vec![
        row(
            "rainbow-lift",
            zero_failed == 0 && subset_failed == 0,
            format!("{checked} random 3-colorings, {zero_failed} color-0 mismatches, {subset_failed} color-1/2 escapes"),
        ),
        row(
            "rainbow-avoidance-transfer",
            transfer_failed == 0,
            format!("{transfer_checked} bases, {transfer_failed} forbidden patterns found"),
        ),
    ])
}

fn certificates_suite(_cfg: &CheckConfig) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for (name, family) in [
        ("certificate-pentagon", Family::Pentagon),
        ("certificate-gf16", Family::Gf16ThreeColoring),
    ] {
        let cert = certify_family(&family, 3)?;
        let detail = if cert.verified {
            format!("verified {}", cert.statement)
        } else {
            format!(
                "{} violations, first: {}",
                cert.violations.len(),
                cert.violations[0]
            )
        };
        rows.push(row(name, cert.verified, detail));
    }

    let base = lift_3coloring(&generate_family(&Family::Pentagon)?, 0)?;
    let blown = blowup_5color(&base, 4)?;
    let b = base.n();
    let mut failures = 0;
    crate::subsets::for_each_subset(blown.n(), 3, |e| {
        let blocks = [e[0] / b, e[1] / b, e[2] / b];
        let distinct =
            1 + usize::from(blocks[0] != blocks[1]) + usize::from(blocks[1] != blocks[2]);
        let color = blown.color_of(e);
        let expected = match distinct {
            1 => base.color_of(&[e[0] % b, e[1] % b, e[2] % b]),
            2 => 3,
            _ => 4,
        };
        failures += usize::from(color != expected);
    });
    rows.push(row(
        "blowup-locality",
        failures == 0,
        format!("{} hyperedges, {failures} misplaced", blown.len()),
    ));
    Ok(rows)
}
