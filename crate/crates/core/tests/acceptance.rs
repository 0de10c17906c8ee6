//! Acceptance criteria, one line per criterion.
//!
//! Library results are checked against brute-force oracles written here from
//! scratch: subsets are `u64` bitmasks, lifts are sums over submasks, and
//! certificates are re-verified by scanning every vertex subset.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperlift::structure::{
    classify_r_behavior, find_clique_minus_edge, generate_family, mono_components, Behavior,
    Family, MatchMode,
};
use hyperlift::{
    apply_lift, certify_family, lift_3coloring, min_kernel_weight, pair_parity, rank_kernel,
    HyperedgeColoring, LiftSpec, PrimeField, VertexSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = hyperlift::Result<Check>;

struct Check {
    passed: bool,
    detail: String,
}

impl Check {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Check {
            passed,
            detail: detail.into(),
        }
    }
}

// ---------------------------------------------------------------------------
// Oracles

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

fn masks_of_size(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .collect()
}

fn submasks_of_size(mask: u64, k: usize) -> impl Iterator<Item = u64> {
    let mut sub = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        while !done {
            let current = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & mask;
            }
            if current.count_ones() as usize == k {
                return Some(current);
            }
        }
        None
    })
}

/// Calls `visit` on every `m`-subset of `[0, n)` as a sorted slice.
fn for_each_combination(n: usize, m: usize, visit: &mut impl FnMut(&[usize])) {
    fn go(
        start: usize,
        n: usize,
        m: usize,
        buf: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if buf.len() == m {
            visit(buf);
            return;
        }
        for v in start..=n - (m - buf.len()) {
            buf.push(v);
            go(v + 1, n, m, buf, visit);
            buf.pop();
        }
    }
    if m <= n {
        go(0, n, m, &mut Vec::with_capacity(m), visit);
    }
}

fn from_dense(
    n: usize,
    r: usize,
    field: PrimeField,
    dense: &[u8],
) -> hyperlift::Result<HyperedgeColoring> {
    HyperedgeColoring::from_fn(n, r, field, |e| dense[mask_of(e) as usize])
}

fn random_dense(rng: &mut ChaCha8Rng, n: usize, k: usize, q: u8) -> Vec<u8> {
    let mut dense = vec![0; 1 << n];
    for mask in masks_of_size(n, k) {
        dense[mask as usize] = rng.gen_range(0..q);
    }
    dense
}

fn naive_lift(q: u8, n: usize, s: usize, r: usize, f: &[u8]) -> Vec<u8> {
    let mut g = vec![0; 1 << n];
    for e in masks_of_size(n, r) {
        let sum: u32 = submasks_of_size(e, s)
            .map(|sub| f[sub as usize] as u32)
            .sum();
        g[e as usize] = (sum % q as u32) as u8;
    }
    g
}

fn agrees(n: usize, r: usize, dense: &[u8], g: &HyperedgeColoring) -> bool {
    masks_of_size(n, r)
        .into_iter()
        .all(|m| dense[m as usize] == g.color_of(&members(m)))
}

/// The color shared by every `r`-subset of `set`, if there is one.
fn mono_color(g: &[u8], set: u64, r: usize) -> Option<u8> {
    let mut subs = submasks_of_size(set, r);
    let first = g[subs.next()? as usize];
    subs.all(|e| g[e as usize] == first).then_some(first)
}

/// Components of the hypergraph on `set` whose edges are the `k`-subsets colored `c`.
fn naive_components(f: &[u8], set: u64, k: usize, c: u8) -> usize {
    let mut label: Vec<usize> = (0..64).collect();
    for e in submasks_of_size(set, k) {
        if f[e as usize] != c {
            continue;
        }
        let vs = members(e);
        let target = label[vs[0]];
        let merged: Vec<usize> = vs.iter().map(|&v| label[v]).collect();
        for l in label.iter_mut() {
            if merged.contains(l) {
                *l = target;
            }
        }
    }
    members(set)
        .iter()
        .map(|&v| label[v])
        .collect::<HashSet<_>>()
        .len()
}

/// Whether the `c`-colored graph on `set` is a disjoint union of at most `parts` cliques.
fn naive_union_of_cliques(f: &[u8], set: u64, c: u8, parts: usize) -> bool {
    let vs = members(set);
    let adj = |a: usize, b: usize| f[(1u64 << a | 1 << b) as usize] == c;
    for &a in &vs {
        for &b in &vs {
            for &x in &vs {
                if a != b && b != x && a != x && adj(a, b) && adj(b, x) && !adj(a, x) {
                    return false;
                }
            }
        }
    }
    naive_components(f, set, 2, c) <= parts
}

/// Number of forbidden-pattern hits found by scanning all 4- and 5-subsets of a
/// 3-uniform 5-coloring. `needs[m][c]` is the count of color-`c` triples that
/// makes an `m`-set a violation.
fn scan_violations(
    n: usize,
    color: &dyn Fn(usize, usize, usize) -> u8,
    needs: &[(usize, [usize; 5])],
) -> usize {
    let mut table = vec![0u8; n * n * n];
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                table[(a * n + b) * n + c] = color(a, b, c);
            }
        }
    }
    let mut hits = 0;
    for &(m, need) in needs {
        for_each_combination(n, m, &mut |set| {
            let mut hist = [0usize; 5];
            for i in 0..m {
                for j in i + 1..m {
                    for k in j + 1..m {
                        hist[table[(set[i] * n + set[j]) * n + set[k]] as usize] += 1;
                    }
                }
            }
            hits += usize::from(hist.iter().zip(need).any(|(&h, n)| n > 0 && h >= n));
        });
    }
    hits
}

/// Rainbow rule: the color of odd multiplicity, `d` when all three differ.
fn rainbow(x: u8, y: u8, z: u8, d: u8) -> u8 {
    if x != y && y != z && x != z {
        d
    } else if x == y {
        z
    } else if x == z {
        y
    } else {
        x
    }
}

/// Color of `{a, x, y}` in the blow-up of the lifted base, blocks of size `b`.
fn naive_blowup(base: &dyn Fn(usize, usize) -> u8, b: usize, a: usize, x: usize, y: usize) -> u8 {
    let blocks: HashSet<usize> = [a / b, x / b, y / b].into_iter().collect();
    match blocks.len() {
        1 => {
            let (a, x, y) = (a % b, x % b, y % b);
            rainbow(base(a, x), base(a, y), base(x, y), 0)
        }
        2 => 3,
        _ => 4,
    }
}

/// 0: K_5 - e (contains), 1..3: K_5, on 5-sets; 4: K_4 - e (contains) on 4-sets.
const BLOWUP_NEEDS: [(usize, [usize; 5]); 2] = [(5, [9, 10, 10, 10, 0]), (4, [0, 0, 0, 0, 3])];

fn check_certificate(family: Family, base: &dyn Fn(usize, usize) -> u8, b: usize) -> Outcome {
    let n = 3 * b;
    let cert = certify_family(&family, 3)?;
    let f = &cert.coloring;
    let mut built_ok = f.n() == n && f.r() == 3;
    for_each_combination(n, 3, &mut |t| {
        built_ok &= f.color_of(t) == naive_blowup(base, b, t[0], t[1], t[2]);
    });
    let hits = scan_violations(n, &|a, x, y| f.color_of(&[a, x, y]), &BLOWUP_NEEDS);
    // {0, 2b, 2b+1} meets two blocks; giving it color 4 completes a K_4 - e with vertex b.
    let planted = scan_violations(
        n,
        &|a, x, y| {
            if (a, x, y) == (0, 2 * b, 2 * b + 1) {
                4
            } else {
                f.color_of(&[a, x, y])
            }
        },
        &BLOWUP_NEEDS,
    );
    let claim = format!("> {n}");
    let passed = cert.verified
        && cert.violations.is_empty()
        && built_ok
        && hits == 0
        && planted > 0
        && cert.statement.ends_with(&claim);
    Ok(Check::new(
        passed,
        format!(
            "{}; verified={} construction-match={built_ok} brute-force hits={hits} (planted: {planted})",
            cert.statement, cert.verified
        ),
    ))
}

// ---------------------------------------------------------------------------
// Criteria

fn preimage() -> Outcome {
    let mut passed = true;
    let mut detail = String::new();
    for n in 4..=8 {
        let count = rank_kernel(&LiftSpec::new(2, n, 2, 3)?)?.preimage_count;
        passed &= count.to_string() == (1u64 << (n - 1)).to_string();
        detail += &format!("n={n}:{count} ");
    }
    for n in 4..=7 {
        let pairs = masks_of_size(n, 2);
        let rows: Vec<u64> = masks_of_size(n, 3)
            .into_iter()
            .map(|t| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| p & t == p)
                    .fold(0, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let image = |x: u64| {
            rows.iter().enumerate().fold(0u64, |m, (i, &row)| {
                m | ((x & row).count_ones() as u64 & 1) << i
            })
        };
        let kernel = (0u64..1 << pairs.len()).filter(|&x| image(x) == 0).count();
        passed &= kernel == 1 << (n - 1);
        if n <= 5 {
            let spec = LiftSpec::new(2, n, 2, 3)?;
            let mut images = HashSet::new();
            for x in 0u64..1 << pairs.len() {
                let bits = image(x);
                images.insert(bits);
                let mut dense = vec![0u8; 1 << n];
                for (i, &p) in pairs.iter().enumerate() {
                    dense[p as usize] = (x >> i & 1) as u8;
                }
                let lifted = apply_lift(&spec, &from_dense(n, 2, PrimeField::F2, &dense)?)?;
                let mut lib_bits = 0u64;
                for (i, t) in masks_of_size(n, 3).into_iter().enumerate() {
                    lib_bits |= (lifted.color_of(&members(t)) as u64) << i;
                }
                passed &= lib_bits == bits;
            }
            passed &= images.len() == 1 << (pairs.len() - (n - 1));
            detail += &format!("images(n={n})={} ", images.len());
        }
        detail += &format!("kernel(n={n})={kernel} ");
    }
    Ok(Check::new(passed, detail.trim_end()))
}

fn brute_min_weight(n: usize, s: usize, r: usize) -> Option<usize> {
    let sources = masks_of_size(n, s);
    let rows: Vec<u64> = masks_of_size(n, r)
        .into_iter()
        .map(|e| {
            sources
                .iter()
                .enumerate()
                .filter(|(_, &p)| p & e == p)
                .fold(0, |m, (i, _)| m | 1 << i)
        })
        .collect();
    let mut best: Option<usize> = None;
    for x in 1u64..1 << sources.len() {
        let w = x.count_ones() as usize;
        if best.is_some_and(|b| w >= b) {
            continue;
        }
        if rows.iter().all(|&row| (x & row).count_ones() % 2 == 0) {
            best = Some(w);
        }
    }
    best
}

fn min_distance() -> Outcome {
    let mut passed = true;
    let mut detail = String::new();
    for (n, s, r, bound) in [(5, 2, 3, 4), (6, 2, 3, 5), (7, 2, 3, 6), (6, 3, 4, 4)] {
        let lib = min_kernel_weight(&LiftSpec::new(2, n, s, r)?, 1 << 20)?;
        let brute = brute_min_weight(n, s, r);
        passed &= lib == brute && lib.is_some_and(|w| w >= bound);
        if n == 5 {
            passed &= lib == Some(4);
        }
        detail += &format!("n={n} ({s},{r}):{lib:?}/brute {brute:?} ");
    }
    Ok(Check::new(passed, detail.trim_end()))
}

fn sums() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut checked, mut failed) = (0, 0);
    for q in [2u8, 3] {
        let field = PrimeField::new(q as u32)?;
        for (n, s, r) in [(4, 2, 3), (5, 2, 3), (6, 2, 4), (7, 3, 4)] {
            let spec = LiftSpec::new(q as u32, n, s, r)?;
            let mult = binomial(n - s, r - s);
            for _ in 0..200 {
                let f = random_dense(&mut rng, n, s, q);
                let g = naive_lift(q, n, s, r, &f);
                let lifted = apply_lift(&spec, &from_dense(n, s, field, &f)?)?;
                let total = masks_of_size(n, r)
                    .iter()
                    .map(|&m| g[m as usize] as u32)
                    .sum::<u32>()
                    % q as u32;
                let source = masks_of_size(n, s)
                    .iter()
                    .map(|&m| f[m as usize] as u32)
                    .sum::<u32>()
                    % q as u32;
                let mut ok = agrees(n, r, &g, &lifted) && lifted.total_sum() as u32 == total;
                if mult % q as u64 == 0 {
                    ok &= total == 0;
                } else if q == 2 {
                    ok &= total == source;
                }
                checked += 1;
                failed += usize::from(!ok);
            }
        }
    }
    Ok(Check::new(
        failed == 0,
        format!("{checked} random lifts, {failed} failures"),
    ))
}

fn complement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut checked, mut failed) = (0, 0);
    for (s, r) in [(2, 3), (2, 4), (3, 4)] {
        let odd = binomial(r, s) % 2 == 1;
        for i in 0..200 {
            let n = r + 1 + i % (8 - r);
            let f = random_dense(&mut rng, n, s, 2);
            let flipped: Vec<u8> = f.iter().map(|&v| 1 - v).collect();
            let g = naive_lift(2, n, s, r, &f);
            let expected: Vec<u8> = if odd {
                g.iter().map(|&v| 1 - v).collect()
            } else {
                g
            };
            let naive_ok = masks_of_size(n, r)
                .into_iter()
                .all(|m| naive_lift(2, n, s, r, &flipped)[m as usize] == expected[m as usize]);
            let spec = LiftSpec::new(2, n, s, r)?;
            let lib = apply_lift(&spec, &from_dense(n, s, PrimeField::F2, &f)?.complement()?)?;
            checked += 1;
            failed += usize::from(!(naive_ok && agrees(n, r, &expected, &lib)));
        }
    }
    Ok(Check::new(
        failed == 0,
        format!("{checked} random lifts, {failed} failures"),
    ))
}

/// Induced `K_m - e` hits in `g` (dense, `r`-uniform) over all colors and `m > r`.
fn naive_minus_edge_hits(n: usize, r: usize, g: &[u8]) -> usize {
    let mut hits = 0;
    for m in r + 1..=n {
        let total = binomial(m, r) as usize;
        for set in masks_of_size(n, m) {
            for c in 0..2 {
                let k = submasks_of_size(set, r)
                    .filter(|&e| g[e as usize] == c)
                    .count();
                hits += usize::from(k == total - 1);
            }
        }
    }
    hits
}

fn lib_minus_edge_hits(g: &HyperedgeColoring) -> hyperlift::Result<usize> {
    let mut hits = 0;
    for c in 0..2 {
        for m in g.r() + 1..=g.n() {
            hits += usize::from(find_clique_minus_edge(g, c, m, MatchMode::Induced)?.is_some());
        }
    }
    Ok(hits)
}

fn minus_edge() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut checked, mut naive_hits, mut lib_hits) = (0, 0, 0);
    let spec = LiftSpec::new(2, 4, 2, 3)?;
    for x in 0u64..64 {
        let mut f = vec![0u8; 16];
        for (i, p) in masks_of_size(4, 2).into_iter().enumerate() {
            f[p as usize] = (x >> i & 1) as u8;
        }
        naive_hits += naive_minus_edge_hits(4, 3, &naive_lift(2, 4, 2, 3, &f));
        lib_hits +=
            lib_minus_edge_hits(&apply_lift(&spec, &from_dense(4, 2, PrimeField::F2, &f)?)?)?;
        checked += 1;
    }
    for (r, n) in [(3, 7), (5, 7)] {
        let spec = LiftSpec::new(2, n, r - 1, r)?;
        for _ in 0..500 {
            let f = random_dense(&mut rng, n, r - 1, 2);
            naive_hits += naive_minus_edge_hits(n, r, &naive_lift(2, n, r - 1, r, &f));
            lib_hits += lib_minus_edge_hits(&apply_lift(
                &spec,
                &from_dense(n, r - 1, PrimeField::F2, &f)?,
            )?)?;
            checked += 1;
        }
    }
    Ok(Check::new(
        naive_hits == 0 && lib_hits == 0,
        format!("{checked} images, hits: search={lib_hits} brute-force={naive_hits}"),
    ))
}

fn components() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut sets, mut failed) = (0, 0);
    let mut tally = |n: usize, r: usize, f: &[u8]| -> hyperlift::Result<()> {
        let s = r - 1;
        let g = naive_lift(2, n, s, r, f);
        let lib_f = from_dense(n, s, PrimeField::F2, f)?;
        for set in (0u64..1 << n).filter(|m| m.count_ones() as usize >= r) {
            let Some(c) = mono_color(&g, set, r) else {
                continue;
            };
            sets += 1;
            let k = naive_components(f, set, s, c);
            let lib = mono_components(&lib_f, &VertexSet::new(members(set))?, c)?;
            let mut ok = k < r && lib == k;
            if r == 3 && c == 1 {
                ok &= naive_union_of_cliques(f, set, 1, 2);
            }
            failed += usize::from(!ok);
        }
        Ok(())
    };
    for n in 3..=6 {
        let pairs = masks_of_size(n, 2);
        for x in 0u64..1 << pairs.len() {
            let mut f = vec![0u8; 1 << n];
            for (i, &p) in pairs.iter().enumerate() {
                f[p as usize] = (x >> i & 1) as u8;
            }
            tally(n, 3, &f)?;
        }
    }
    for n in [7, 8] {
        for _ in 0..200 {
            let f = random_dense(&mut rng, n, 4, 2);
            tally(n, 5, &f)?;
        }
    }
    Ok(Check::new(
        failed == 0,
        format!("{sets} monochromatic image sets, {failed} failures"),
    ))
}

fn naive_behavior(n: usize, r: usize, adj: &dyn Fn(usize, usize) -> bool) -> Behavior {
    let parities: HashSet<usize> = masks_of_size(n, r)
        .into_iter()
        .map(|set| {
            let vs = members(set);
            let mut edges = 0;
            for (i, &a) in vs.iter().enumerate() {
                edges += vs[i + 1..].iter().filter(|&&b| adj(a, b)).count();
            }
            edges % 2
        })
        .collect();
    match (parities.contains(&0), parities.contains(&1)) {
        (false, true) => Behavior::Complete,
        (true, false) => Behavior::Void,
        _ => Behavior::Neutral,
    }
}

fn classification() -> Outcome {
    let (mut checked, mut failed) = (0, 0);
    for s in 1..9 {
        for t in 1..=9 - s {
            let n = s + t;
            let side = |v: usize| v < s;
            let bip = |a: usize, b: usize| side(a) != side(b);
            let union = |a: usize, b: usize| side(a) == side(b);
            for (family, adj) in [
                (
                    Family::Bipartite { s, t },
                    &bip as &dyn Fn(usize, usize) -> bool,
                ),
                (Family::CliqueUnion { s, t }, &union),
            ] {
                let g = generate_family(&family)?;
                let mut ok = masks_of_size(n, 2).into_iter().all(|p| {
                    let v = members(p);
                    g.color_of(&v) == u8::from(adj(v[0], v[1]))
                });
                for r in 3..=n {
                    let naive = naive_behavior(n, r, adj);
                    ok &= classify_r_behavior(&g, r)?.tag == naive;
                    if matches!(family, Family::Bipartite { .. }) && r % 2 == 1 {
                        ok &= naive == Behavior::Void;
                    }
                    if matches!(family, Family::CliqueUnion { .. }) && r < n {
                        let stated = match r % 4 {
                            1 => Behavior::Void,
                            3 => Behavior::Complete,
                            _ => Behavior::Neutral,
                        };
                        ok &= naive == stated;
                    }
                    checked += 1;
                }
                failed += usize::from(!ok);
            }
        }
    }
    let mut parity_failed = 0;
    for r in 1..=20 {
        for u in 0..r {
            let edges = (0..r)
                .flat_map(|a| (a + 1..r).map(move |b| (a, b)))
                .filter(|&(a, b)| (a < u) == (b < u))
                .count();
            let mut ok = pair_parity(u, r)? as usize == edges % 2;
            match r % 4 {
                0 => ok &= edges % 2 == u % 2,
                2 => ok &= edges % 2 == (u + 1) % 2,
                _ => {}
            }
            parity_failed += usize::from(!ok);
        }
    }
    Ok(Check::new(
        failed == 0 && parity_failed == 0,
        format!("{checked} (graph, r) cases, {failed} graphs failing, {parity_failed} parity mismatches"),
    ))
}

fn pentagon_certificate() -> Outcome {
    let base = |a: usize, b: usize| if matches!(a.abs_diff(b), 1 | 4) { 1 } else { 2 };
    check_certificate(Family::Pentagon, &base, 5)
}

fn gf16_mul(mut a: u8, mut b: u8) -> u8 {
    let mut p = 0;
    while b != 0 {
        if b & 1 == 1 {
            p ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 0x10 != 0 {
            a ^= 0b1_0011;
        }
    }
    p
}

fn gf16_certificate() -> Outcome {
    let mut log = [0u8; 16];
    let mut x = 1u8;
    for k in 0..15 {
        log[x as usize] = k;
        x = gf16_mul(x, 2);
    }
    let base = move |a: usize, b: usize| log[a ^ b] % 3;
    let g = generate_family(&Family::Gf16ThreeColoring)?;
    let mut table_ok = x == 1;
    for_each_combination(16, 2, &mut |e| {
        table_ok &= g.color_of(e) == base(e[0], e[1])
    });
    let (mut triangles, mut mono) = (0, 0);
    for_each_combination(16, 3, &mut |t| {
        triangles += 1;
        let (x, y, z) = (base(t[0], t[1]), base(t[0], t[2]), base(t[1], t[2]));
        mono += usize::from(x == y && y == z);
    });
    let cert = check_certificate(Family::Gf16ThreeColoring, &base, 16)?;
    Ok(Check::new(
        cert.passed && table_ok && triangles == 560 && mono == 0,
        format!(
            "{triangles} triangles, {mono} monochromatic; {}",
            cert.detail
        ),
    ))
}

fn rainbow_rule() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let (mut checked, mut failed) = (0, 0);
    for _ in 0..500 {
        let n = rng.gen_range(3..=8);
        let f = random_dense(&mut rng, n, 2, 3);
        let lifted = lift_3coloring(&from_dense(n, 2, PrimeField::F3, &f)?, 0)?;
        let mut ok = true;
        for t in masks_of_size(n, 3) {
            let edges: Vec<u8> = submasks_of_size(t, 2).map(|p| f[p as usize]).collect();
            let got = lifted.color_of(&members(t));
            ok &= got == rainbow(edges[0], edges[1], edges[2], 0);
            let parity = |pred: &dyn Fn(u8) -> bool| edges.iter().filter(|&&e| pred(e)).count() % 2;
            ok &= (got == 0) == (parity(&|e| e != 0) == 0);
            if got != 0 {
                ok &= parity(&|e| e == got) == 1;
            }
        }
        checked += 1;
        failed += usize::from(!ok);
    }
    Ok(Check::new(
        failed == 0,
        format!("{checked} random 3-colorings, {failed} failures"),
    ))
}

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

const fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        name: "preimage-count",
        limit: secs(5),
        run: preimage,
    },
    Criterion {
        name: "min-kernel-weight",
        limit: secs(5),
        run: min_distance,
    },
    Criterion {
        name: "sum-laws",
        limit: secs(5),
        run: sums,
    },
    Criterion {
        name: "complement-law",
        limit: None,
        run: complement,
    },
    Criterion {
        name: "no-induced-clique-minus-edge",
        limit: secs(30),
        run: minus_edge,
    },
    Criterion {
        name: "component-bound",
        limit: secs(60),
        run: components,
    },
    Criterion {
        name: "classification",
        limit: secs(10),
        run: classification,
    },
    Criterion {
        name: "certificate-15",
        limit: secs(5),
        run: pentagon_certificate,
    },
    Criterion {
        name: "certificate-48",
        limit: secs(120),
        run: gf16_certificate,
    },
    Criterion {
        name: "rainbow-rule",
        limit: None,
        run: rainbow_rule,
    },
];

fn main() -> ExitCode {
    let mut failures = 0;
    for (i, c) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let in_time = c.limit.is_none_or(|l| elapsed < l);
        let (passed, detail) = match outcome {
            Ok(check) => (check.passed && in_time, check.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failures += usize::from(!passed);
        let limit = c
            .limit
            .map_or("none".to_string(), |l| format!("{} s", l.as_secs()));
        println!(
            "{}  {:>2} {:<29} {:>7.1} ms (limit {limit})  {detail}",
            if passed { "PASS" } else { "FAIL" },
            i + 1,
            c.name,
            elapsed.as_secs_f64() * 1e3,
        );
    }
    println!("acceptance: {} criteria, {failures} failed", CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
