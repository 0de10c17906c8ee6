//! The lifting map from `s`-uniform to `r`-uniform colorings of `K_n`.
//!
//! `(lift f)(e) = sum of f(e')` over the `s`-subsets `e'` of each
//! `r`-subset `e`, in `F_q`. The map is linear; its matrix has a 1 in row
//! `rank(e)` and column `rank(e')` exactly when `e'` is inside `e`.

use num_bigint::BigUint;

use crate::coloring::HyperedgeColoring;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{reduce_sparse, FieldMatrix, Reduced};
use crate::subsets::{choose, for_each_subset, rank_sorted, MAX_BINOM_N};

/// Default cap on `C(n, r)` for anything that materializes the lift matrix.
pub const DEFAULT_MATRIX_LIMIT: usize = 200_000;

/// Default cap on `q^kernel_dim` for [`min_kernel_weight`].
pub const DEFAULT_SPAN_BUDGET: u64 = 1 << 20;

/// Identifies one lifting map: field order, vertex count, source and target uniformity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LiftSpec {
    field: PrimeField,
    n: usize,
    s: usize,
    r: usize,
    matrix_limit: usize,
}

impl LiftSpec {
    pub fn new(q: u32, n: usize, s: usize, r: usize) -> Result<Self> {
        let field = PrimeField::new(q)?;
        if !(2 <= s && s < r && r <= n) {
            return Err(Error::InvalidParameters(format!(
                "lift requires 2 <= s < r <= n (got s={s}, r={r}, n={n})"
            )));
        }
        if n > MAX_BINOM_N {
            return Err(Error::Range(format!(
                "n = {n} exceeds {MAX_BINOM_N} vertices"
            )));
        }
        Ok(LiftSpec {
            field,
            n,
            s,
            r,
            matrix_limit: DEFAULT_MATRIX_LIMIT,
        })
    }

    /// Overrides the bound on `C(n, r)` used by the matrix-based operations.
    pub fn with_matrix_limit(mut self, limit: usize) -> Self {
        self.matrix_limit = limit;
        self
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn q(&self) -> u8 {
        self.field.order()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `C(n, s)`: dimension of the source space.
    pub fn source_dim(&self) -> usize {
        choose(self.n, self.s)
    }

    /// `C(n, r)`: dimension of the target space.
    pub fn target_dim(&self) -> usize {
        choose(self.n, self.r)
    }

    fn check_source(&self, f: &HyperedgeColoring) -> Result<()> {
        if f.n() != self.n || f.r() != self.s || f.field() != self.field {
            return Err(Error::ShapeMismatch(format!(
                "lift source must be K_{}^({}) over {}, got K_{}^({}) over {}",
                self.n,
                self.s,
                self.field,
                f.n(),
                f.r(),
                f.field()
            )));
        }
        Ok(())
    }

    fn check_target(&self, g: &HyperedgeColoring) -> Result<()> {
        if g.n() != self.n || g.r() != self.r || g.field() != self.field {
            return Err(Error::ShapeMismatch(format!(
                "lift target must be K_{}^({}) over {}, got K_{}^({}) over {}",
                self.n,
                self.r,
                self.field,
                g.n(),
                g.r(),
                g.field()
            )));
        }
        Ok(())
    }

    fn check_matrix_limit(&self) -> Result<()> {
        let rows = self.target_dim();
        if rows > self.matrix_limit {
            return Err(Error::Resource(format!(
                "lift matrix has C({}, {}) = {rows} rows, above the limit {}",
                self.n, self.r, self.matrix_limit
            )));
        }
        Ok(())
    }

    /// Column indices of the ones in each row, rows in colex order of `r`-subsets.
    fn incidence(&self) -> Vec<Vec<usize>> {
        let inner = inner_positions(self.r, self.s);
        let mut rows = Vec::with_capacity(self.target_dim());
        let mut buf = vec![0usize; self.s];
        for_each_subset(self.n, self.r, |e| {
            rows.push(
                inner
                    .iter()
                    .map(|pos| {
                        for (b, &p) in buf.iter_mut().zip(pos) {
                            *b = e[p];
                        }
                        rank_sorted(&buf)
                    })
                    .collect(),
            );
        });
        rows
    }

    fn reduce(&self, rhs: Option<&[u8]>) -> Result<Reduced> {
        self.check_matrix_limit()?;
        let entries: Vec<Vec<(usize, u8)>> = self
            .incidence()
            .into_iter()
            .map(|cols| cols.into_iter().map(|j| (j, 1)).collect())
            .collect();
        Ok(reduce_sparse(self.field, self.source_dim(), &entries, rhs))
    }
}

/// Position tuples of the `s`-subsets of an `r`-set.
fn inner_positions(r: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(choose(r, s));
    for_each_subset(r, s, |p| out.push(p.to_vec()));
    out
}

/// Applies the lift by streaming over every `r`-subset and its `s`-subsets.
pub fn apply_lift(spec: &LiftSpec, f: &HyperedgeColoring) -> Result<HyperedgeColoring> {
    spec.check_source(f)?;
    let inner = inner_positions(spec.r, spec.s);
    let src = f.values();
    let mut buf = vec![0usize; spec.s];
    HyperedgeColoring::from_fn(spec.n, spec.r, spec.field, |e| {
        let mut acc = 0u64;
        for pos in &inner {
            for (b, &p) in buf.iter_mut().zip(pos) {
                *b = e[p];
            }
            acc += src[rank_sorted(&buf)] as u64;
        }
        spec.field.reduce(acc)
    })
}

/// The `C(n, r) x C(n, s)` 0/1 matrix of the lift.
pub fn lift_matrix(spec: &LiftSpec) -> Result<FieldMatrix> {
    spec.check_matrix_limit()?;
    let mut m = FieldMatrix::zeros(spec.field, spec.target_dim(), spec.source_dim());
    for (i, cols) in spec.incidence().into_iter().enumerate() {
        for j in cols {
            m.set(i, j, 1);
        }
    }
    Ok(m)
}

/// Rank, kernel, and preimage count of a lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSummary {
    pub rank: usize,
    pub kernel_dim: usize,
    /// `s`-uniform colorings spanning the kernel, one per free column.
    pub kernel_basis: Vec<HyperedgeColoring>,
    /// `q^kernel_dim`: the number of preimages of every image element.
    pub preimage_count: BigUint,
}

pub fn rank_kernel(spec: &LiftSpec) -> Result<KernelSummary> {
    let reduced = spec.reduce(None)?;
    let kernel_basis = reduced
        .kernel_basis(spec.field)
        .into_iter()
        .map(|v| HyperedgeColoring::new(spec.n, spec.s, spec.field, v))
        .collect::<Result<Vec<_>>>()?;
    for k in &kernel_basis {
        debug_assert_eq!(
            apply_lift(spec, k)?.weight(),
            0,
            "kernel vector does not lift to zero"
        );
    }
    let kernel_dim = kernel_basis.len();
    Ok(KernelSummary {
        rank: reduced.rank(),
        kernel_dim,
        kernel_basis,
        preimage_count: BigUint::from(spec.q()).pow(kernel_dim as u32),
    })
}

/// One preimage of `g` (free variables set to zero), or `None` when `g` is
/// not in the image.
pub fn solve_preimage(spec: &LiftSpec, g: &HyperedgeColoring) -> Result<Option<HyperedgeColoring>> {
    spec.check_target(g)?;
    let reduced = spec.reduce(Some(g.values()))?;
    reduced
        .particular_solution()
        .map(|x| HyperedgeColoring::new(spec.n, spec.s, spec.field, x))
        .transpose()
}

/// Number of `s`-uniform colorings lifting to `g`: zero or `q^kernel_dim`.
pub fn preimage_count(spec: &LiftSpec, g: &HyperedgeColoring) -> Result<BigUint> {
    spec.check_target(g)?;
    let reduced = spec.reduce(Some(g.values()))?;
    if !reduced.is_consistent() {
        return Ok(BigUint::ZERO);
    }
    let kernel_dim = spec.source_dim() - reduced.rank();
    Ok(BigUint::from(spec.q()).pow(kernel_dim as u32))
}

/// Minimum Hamming weight of a nonzero kernel vector, by enumerating the
/// whole kernel. `None` when the lift is injective.
///
/// Fails with a resource error when `q^kernel_dim` exceeds `budget`.
pub fn min_kernel_weight(spec: &LiftSpec, budget: u64) -> Result<Option<usize>> {
    let summary = rank_kernel(spec)?;
    let q = spec.q() as u64;
    let size = (0..summary.kernel_dim).try_fold(1u64, |acc, _| acc.checked_mul(q));
    match size {
        Some(size) if size <= budget => {}
        _ => {
            return Err(Error::Resource(format!(
                "kernel has {q}^{} elements, above the enumeration budget {budget}; \
                 raise the budget or use a smaller n",
                summary.kernel_dim
            )))
        }
    }
    let basis: Vec<&[u8]> = summary.kernel_basis.iter().map(|k| k.values()).collect();
    Ok(min_span_weight(spec.field, &basis))
}

/// Walks every coefficient vector with an odometer. Each digit that changes
/// (including wrap-around to zero) adds its basis vector once, so the
/// accumulator always equals the current combination.
fn min_span_weight(field: PrimeField, basis: &[&[u8]]) -> Option<usize> {
    let len = basis.first()?.len();
    let q = field.order();
    let mut digits = vec![0u8; basis.len()];
    let mut acc = vec![0u8; len];
    let mut best: Option<usize> = None;
    loop {
        let mut i = 0;
        loop {
            if i == digits.len() {
                return best;
            }
            for (a, &b) in acc.iter_mut().zip(basis[i]) {
                *a = field.add(*a, b);
            }
            digits[i] = (digits[i] + 1) % q;
            if digits[i] != 0 {
                break;
            }
            i += 1;
        }
        let w = acc.iter().filter(|&&v| v != 0).count();
        best = Some(best.map_or(w, |b| b.min(w)));
    }
}
