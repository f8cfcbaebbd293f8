//! Brute-force ground truth over small prime fields.
//!
//! Classical matrix groups are enumerated by extending matrices column by
//! column, rejecting partial assignments that already violate the defining
//! equations. The resulting orders are compared against the closed-form
//! order formula and against half-Poincaré point-count predictions, which
//! they are completely independent of.

use crate::homogeneous::{HomogeneousPair, SubgroupSpec};
use crate::weylcore::{Family, ReductiveType};
use crate::ExecMode;
use num::bigint::BigInt;
use num::One;
use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("search visited more than {budget} nodes")]
    SearchSpaceTooLarge { budget: u64 },
    #[error("group order {h_order} does not divide {g_order}")]
    NonIntegerQuotient { g_order: BigInt, h_order: BigInt },
    #[error("pair is not realizable as matrix equations: {reason}")]
    NotRealizable { reason: String },
    #[error("modulus {p} is not a prime <= 13")]
    UnsupportedModulus { p: u64 },
    #[error("matrix size {n} is out of range for enumeration")]
    UnsupportedSize { n: usize },
    #[error("invalid group equations: {reason}")]
    InvalidEquations { reason: String },
}

impl OracleError {
    pub fn code(&self) -> &'static str {
        match self {
            OracleError::SearchSpaceTooLarge { .. } => "SearchSpaceTooLarge",
            OracleError::NonIntegerQuotient { .. } => "NonIntegerQuotient",
            OracleError::NotRealizable { .. } => "NotRealizable",
            OracleError::UnsupportedModulus { .. } => "UnsupportedModulus",
            OracleError::UnsupportedSize { .. } => "UnsupportedSize",
            OracleError::InvalidEquations { .. } => "InvalidEquations",
        }
    }
}

const SUPPORTED_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
const MAX_MATRIX_SIZE: usize = 5;

/// Arithmetic context for the prime field `F_p`, `p <= 13`. Elements are
/// residues `0..p` stored as `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self, OracleError> {
        if SUPPORTED_PRIMES.contains(&p) {
            Ok(Fp { p })
        } else {
            Err(OracleError::UnsupportedModulus { p })
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// A generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let order = self.p - 1;
        'outer: for g in 2..self.p {
            for d in 1..order {
                if order.is_multiple_of(d) && self.pow(g, d) == 1 {
                    continue 'outer;
                }
            }
            return g;
        }
        1 // p = 2
    }
}

/// Row-major `n x n` matrix over `F_p`.
pub type FpMatrix = Vec<u64>;

fn det_mod_p(fp: Fp, n: usize, m: &[u64]) -> u64 {
    let mut a = m.to_vec();
    let mut det = 1u64;
    for col in 0..n {
        let pivot = match (col..n).find(|&r| a[r * n + col] != 0) {
            Some(p) => p,
            None => return 0,
        };
        if pivot != col {
            for j in 0..n {
                a.swap(pivot * n + j, col * n + j);
            }
            det = fp.neg(det);
        }
        let pv = a[col * n + col];
        det = fp.mul(det, pv);
        let pv_inv = fp.inv(pv);
        for r in col + 1..n {
            let factor = fp.mul(a[r * n + col], pv_inv);
            if factor == 0 {
                continue;
            }
            for j in col..n {
                let delta = fp.mul(factor, a[col * n + j]);
                a[r * n + j] = fp.sub(a[r * n + j], delta);
            }
        }
    }
    det
}

/// The classical kinds with closed defining equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalKind {
    GeneralLinear,
    SpecialLinear,
    /// Stabilizer of the split quadratic form with unit anti-diagonal
    /// pairing (determinant 1). Using the quadratic form itself rather than
    /// its polar bilinear form keeps the count correct in characteristic 2.
    SplitOrthogonal,
    Symplectic,
}

/// Defining equations for a matrix group over a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGroupEquations {
    size: usize,
    kind: GroupKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Classical(ClassicalKind),
    /// Diagonal matrices satisfying the ambient classical equations.
    DiagonalTorus(ClassicalKind),
    /// Subgroup generated by explicit integer matrices (reduced mod p).
    Generated(Vec<Vec<i64>>),
}

impl MatrixGroupEquations {
    fn classical(kind: ClassicalKind, n: usize) -> Result<Self, OracleError> {
        if n == 0 || n > MAX_MATRIX_SIZE {
            return Err(OracleError::UnsupportedSize { n });
        }
        if kind == ClassicalKind::Symplectic && !n.is_multiple_of(2) {
            return Err(OracleError::InvalidEquations {
                reason: format!("symplectic groups need even size, got {n}"),
            });
        }
        Ok(MatrixGroupEquations {
            size: n,
            kind: GroupKind::Classical(kind),
        })
    }

    pub fn general_linear(n: usize) -> Result<Self, OracleError> {
        Self::classical(ClassicalKind::GeneralLinear, n)
    }

    pub fn special_linear(n: usize) -> Result<Self, OracleError> {
        Self::classical(ClassicalKind::SpecialLinear, n)
    }

    pub fn split_orthogonal(n: usize) -> Result<Self, OracleError> {
        Self::classical(ClassicalKind::SplitOrthogonal, n)
    }

    pub fn symplectic(n: usize) -> Result<Self, OracleError> {
        Self::classical(ClassicalKind::Symplectic, n)
    }

    pub fn diagonal_torus(ambient: ClassicalKind, n: usize) -> Result<Self, OracleError> {
        let base = Self::classical(ambient, n)?;
        Ok(MatrixGroupEquations {
            size: base.size,
            kind: GroupKind::DiagonalTorus(ambient),
        })
    }

    pub fn generated(n: usize, generators: Vec<Vec<i64>>) -> Result<Self, OracleError> {
        if n == 0 || n > MAX_MATRIX_SIZE {
            return Err(OracleError::UnsupportedSize { n });
        }
        for g in &generators {
            if g.len() != n * n {
                return Err(OracleError::InvalidEquations {
                    reason: format!("generator has {} entries, expected {}", g.len(), n * n),
                });
            }
        }
        Ok(MatrixGroupEquations {
            size: n,
            kind: GroupKind::Generated(generators),
        })
    }

    /// The block-diagonal subgroup of the special linear group with the
    /// given block sizes (overall determinant 1), presented by generators.
    pub fn levi_in_special_linear(n: usize, blocks: &[usize]) -> Result<Self, OracleError> {
        if blocks.iter().sum::<usize>() != n || blocks.contains(&0) {
            return Err(OracleError::InvalidEquations {
                reason: format!("blocks {blocks:?} do not partition size {n}"),
            });
        }
        let mut generators: Vec<Vec<i64>> = Vec::new();
        let ident = |n: usize| -> Vec<i64> {
            let mut m = vec![0i64; n * n];
            for i in 0..n {
                m[i * n + i] = 1;
            }
            m
        };
        let mut offset = 0usize;
        let mut block_starts = Vec::new();
        for &b in blocks {
            block_starts.push(offset);
            // adjacent transvections generate the special linear block
            for k in 0..b.saturating_sub(1) {
                for (i, j) in [(offset + k, offset + k + 1), (offset + k + 1, offset + k)] {
                    let mut m = ident(n);
                    m[i * n + j] = 1;
                    generators.push(m);
                }
            }
            offset += b;
        }
        // determinant transfer between the first block and each later block;
        // the marker entries become a primitive root (and its inverse) of
        // the actual prime in `reduce_generators`
        for &start in block_starts.iter().skip(1) {
            let mut m = ident(n);
            m[0] = PRIMITIVE_ROOT_MARKER;
            m[start * n + start] = PRIMITIVE_ROOT_INV_MARKER;
            generators.push(m);
        }
        Self::generated(n, generators)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    fn touches_orthogonal(&self) -> bool {
        matches!(
            self.kind,
            GroupKind::Classical(ClassicalKind::SplitOrthogonal)
                | GroupKind::DiagonalTorus(ClassicalKind::SplitOrthogonal)
        )
    }
}

// Placeholders in generator templates, replaced by a primitive root (and its
// inverse) of the actual prime when the closure is computed.
const PRIMITIVE_ROOT_MARKER: i64 = i64::MIN + 1;
const PRIMITIVE_ROOT_INV_MARKER: i64 = i64::MIN + 2;

fn reduce_generators(fp: Fp, n: usize, gens: &[Vec<i64>]) -> Vec<FpMatrix> {
    let g = fp.primitive_root();
    gens.iter()
        .map(|raw| {
            raw.iter()
                .map(|&v| match v {
                    PRIMITIVE_ROOT_MARKER => g,
                    PRIMITIVE_ROOT_INV_MARKER => fp.inv(g),
                    v => v.rem_euclid(fp.modulus() as i64) as u64,
                })
                .collect::<Vec<u64>>()
        })
        .filter(|m| m != &identity_matrix(n))
        .collect()
}

fn identity_matrix(n: usize) -> FpMatrix {
    let mut m = vec![0u64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// Budget knobs for the enumeration.
#[derive(Debug, Clone, Copy)]
pub struct OracleBudget {
    /// Upper bound on visited search nodes (candidate columns tested, or
    /// closure elements created).
    pub max_nodes: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_nodes: 400_000_000,
        }
    }
}

/// Exact number of matrices over `F_p` satisfying the defining equations.
pub fn enumerate_order(spec: &MatrixGroupEquations, p: u64) -> Result<u64, OracleError> {
    enumerate_order_with(spec, p, ExecMode::default(), OracleBudget::default())
}

pub fn enumerate_order_with(
    spec: &MatrixGroupEquations,
    p: u64,
    mode: ExecMode,
    budget: OracleBudget,
) -> Result<u64, OracleError> {
    let fp = Fp::new(p)?;
    let n = spec.size;
    // In characteristic 2 every invertible matrix has determinant 1, so the
    // determinant cut does not separate the connected even orthogonal group
    // from the full form stabilizer (that takes the Dickson invariant).
    if p == 2 && n.is_multiple_of(2) && spec.touches_orthogonal() {
        return Err(OracleError::InvalidEquations {
            reason: "even orthogonal groups over F_2 need the Dickson invariant, not det = 1"
                .into(),
        });
    }
    match &spec.kind {
        GroupKind::Classical(kind) => column_search(fp, n, *kind, mode, budget),
        GroupKind::DiagonalTorus(ambient) => {
            let mut count = 0u64;
            let total = p.pow(n as u32);
            for idx in 0..total {
                let mut m = vec![0u64; n * n];
                let mut rest = idx;
                for i in 0..n {
                    m[i * n + i] = rest % p;
                    rest /= p;
                }
                if full_matrix_satisfies(fp, n, *ambient, &m) {
                    count += 1;
                }
            }
            Ok(count)
        }
        GroupKind::Generated(gens) => {
            let gens = reduce_generators(fp, n, gens);
            let mut seen: HashSet<FpMatrix> = HashSet::new();
            let identity = identity_matrix(n);
            seen.insert(identity.clone());
            let mut frontier = vec![identity];
            while let Some(m) = frontier.pop() {
                for g in &gens {
                    let prod = mat_mul(fp, n, &m, g);
                    if seen.len() as u64 >= budget.max_nodes {
                        return Err(OracleError::SearchSpaceTooLarge {
                            budget: budget.max_nodes,
                        });
                    }
                    if seen.insert(prod.clone()) {
                        frontier.push(prod);
                    }
                }
            }
            Ok(seen.len() as u64)
        }
    }
}

fn mat_mul(fp: Fp, n: usize, a: &[u64], b: &[u64]) -> FpMatrix {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        for k in 0..n {
            let av = a[i * n + k];
            if av == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = fp.add(out[i * n + j], fp.mul(av, b[k * n + j]));
            }
        }
    }
    out
}

/// Column-extension constraints for one classical kind. Matrices are built
/// one column at a time; a partial assignment is rejected as soon as any
/// fully-determined defining equation fails.
#[derive(Debug, Clone)]
enum ColumnState {
    /// Row-echelon basis of the chosen columns (independence pruning).
    Echelon(Vec<Vec<u64>>),
    /// Chosen columns and their images under the form matrix.
    Form {
        cols: Vec<Vec<u64>>,
        images: Vec<Vec<u64>>,
    },
}

fn initial_state(kind: ClassicalKind) -> ColumnState {
    match kind {
        ClassicalKind::GeneralLinear | ClassicalKind::SpecialLinear => {
            ColumnState::Echelon(Vec::new())
        }
        ClassicalKind::SplitOrthogonal | ClassicalKind::Symplectic => ColumnState::Form {
            cols: Vec::new(),
            images: Vec::new(),
        },
    }
}

/// Upper-triangular coefficients of the split quadratic form: unit
/// anti-diagonal with, for odd size, a single square term in the middle.
fn quadratic_coeff(n: usize, i: usize, j: usize) -> u64 {
    u64::from(i <= j && i + j == n - 1)
}

#[allow(clippy::needless_range_loop)]
fn apply_quadratic(fp: Fp, n: usize, c: &[u64]) -> Vec<u64> {
    // (U·c)_i with U the upper-triangular form coefficients
    (0..n)
        .map(|i| {
            let mut acc = 0u64;
            for j in 0..n {
                if quadratic_coeff(n, i, j) != 0 {
                    acc = fp.add(acc, c[j]);
                }
            }
            acc
        })
        .collect()
}

fn symplectic_coeff(fp: Fp, n: usize, i: usize, j: usize) -> u64 {
    let m = n / 2;
    if j == i + m {
        1
    } else if i == j + m {
        fp.neg(1)
    } else {
        0
    }
}

#[allow(clippy::needless_range_loop)]
fn apply_symplectic(fp: Fp, n: usize, c: &[u64]) -> Vec<u64> {
    (0..n)
        .map(|i| {
            let mut acc = 0u64;
            for j in 0..n {
                let coeff = symplectic_coeff(fp, n, i, j);
                if coeff != 0 {
                    acc = fp.add(acc, fp.mul(coeff, c[j]));
                }
            }
            acc
        })
        .collect()
}

fn dot(fp: Fp, a: &[u64], b: &[u64]) -> u64 {
    a.iter()
        .zip(b)
        .fold(0u64, |acc, (&x, &y)| fp.add(acc, fp.mul(x, y)))
}

fn accept_column(
    fp: Fp,
    n: usize,
    kind: ClassicalKind,
    state: &ColumnState,
    k: usize,
    cand: &[u64],
) -> Option<ColumnState> {
    match (kind, state) {
        (ClassicalKind::GeneralLinear | ClassicalKind::SpecialLinear, ColumnState::Echelon(basis)) => {
            let mut v = cand.to_vec();
            for row in basis {
                let pivot = row.iter().position(|&x| x != 0).expect("nonzero basis row");
                if v[pivot] != 0 {
                    let factor = fp.mul(v[pivot], fp.inv(row[pivot]));
                    for i in 0..n {
                        v[i] = fp.sub(v[i], fp.mul(factor, row[i]));
                    }
                }
            }
            if v.iter().all(|&x| x == 0) {
                return None;
            }
            let mut basis = basis.clone();
            basis.push(v);
            Some(ColumnState::Echelon(basis))
        }
        (ClassicalKind::SplitOrthogonal, ColumnState::Form { cols, images }) => {
            let image = apply_quadratic(fp, n, cand);
            // diagonal coefficient: candᵀ·U·cand must match U_kk
            if dot(fp, cand, &image) != quadratic_coeff(n, k, k) {
                return None;
            }
            for (i, (col, img)) in cols.iter().zip(images).enumerate() {
                // cross coefficient of x_i·x_k: cᵢᵀ·U·c_k + c_kᵀ·U·cᵢ
                let cross = fp.add(dot(fp, col, &image), dot(fp, cand, img));
                if cross != quadratic_coeff(n, i, k) {
                    return None;
                }
            }
            let mut cols = cols.clone();
            let mut images = images.clone();
            cols.push(cand.to_vec());
            images.push(image);
            Some(ColumnState::Form { cols, images })
        }
        (ClassicalKind::Symplectic, ColumnState::Form { cols, images }) => {
            let image = apply_symplectic(fp, n, cand);
            for (i, col) in cols.iter().enumerate() {
                // form value cᵢᵀ·J·c_k must equal J_ik
                if dot(fp, col, &image) != symplectic_coeff(fp, n, i, k) {
                    return None;
                }
            }
            let mut cols = cols.clone();
            let mut images = images.clone();
            cols.push(cand.to_vec());
            images.push(image);
            Some(ColumnState::Form { cols, images })
        }
        _ => unreachable!("state kind mismatch"),
    }
}

fn matrix_from_cols(n: usize, cols: &[Vec<u64>]) -> FpMatrix {
    let mut m = vec![0u64; n * n];
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            m[i * n + j] = col[i];
        }
    }
    m
}

fn final_check(fp: Fp, n: usize, kind: ClassicalKind, cols: &[Vec<u64>]) -> bool {
    match kind {
        ClassicalKind::GeneralLinear => true,
        // form preservation already forces determinant 1
        ClassicalKind::Symplectic => true,
        ClassicalKind::SpecialLinear | ClassicalKind::SplitOrthogonal => {
            det_mod_p(fp, n, &matrix_from_cols(n, cols)) == 1
        }
    }
}

fn full_matrix_satisfies(fp: Fp, n: usize, kind: ClassicalKind, m: &[u64]) -> bool {
    let col = |j: usize| -> Vec<u64> { (0..n).map(|i| m[i * n + j]).collect() };
    let cols: Vec<Vec<u64>> = (0..n).map(col).collect();
    let mut state = initial_state(kind);
    for (k, c) in cols.iter().enumerate() {
        match accept_column(fp, n, kind, &state, k, c) {
            Some(next) => state = next,
            None => return false,
        }
    }
    final_check(fp, n, kind, &cols)
}

struct SearchCtx {
    fp: Fp,
    n: usize,
    kind: ClassicalKind,
    nodes: AtomicU64,
    max_nodes: u64,
}

fn column_search(
    fp: Fp,
    n: usize,
    kind: ClassicalKind,
    mode: ExecMode,
    budget: OracleBudget,
) -> Result<u64, OracleError> {
    let ctx = SearchCtx {
        fp,
        n,
        kind,
        nodes: AtomicU64::new(0),
        max_nodes: budget.max_nodes,
    };
    let state0 = initial_state(kind);
    let firsts: Vec<(ColumnState, Vec<Vec<u64>>)> = candidate_columns(fp, n)
        .filter_map(|c| {
            accept_column(fp, n, kind, &state0, 0, &c).map(|st| (st, vec![c]))
        })
        .collect();
    let counts = run_firsts(&ctx, firsts, mode);
    let mut total = 0u64;
    for c in counts {
        total += c?;
    }
    Ok(total)
}

#[cfg(feature = "parallel")]
fn run_firsts(
    ctx: &SearchCtx,
    firsts: Vec<(ColumnState, Vec<Vec<u64>>)>,
    mode: ExecMode,
) -> Vec<Result<u64, OracleError>> {
    match mode {
        ExecMode::Parallel => firsts
            .into_par_iter()
            .map(|(st, cols)| extend_columns(ctx, st, cols))
            .collect(),
        ExecMode::Sequential => firsts
            .into_iter()
            .map(|(st, cols)| extend_columns(ctx, st, cols))
            .collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_firsts(
    ctx: &SearchCtx,
    firsts: Vec<(ColumnState, Vec<Vec<u64>>)>,
    _mode: ExecMode,
) -> Vec<Result<u64, OracleError>> {
    firsts
        .into_iter()
        .map(|(st, cols)| extend_columns(ctx, st, cols))
        .collect()
}

fn extend_columns(
    ctx: &SearchCtx,
    state: ColumnState,
    cols: Vec<Vec<u64>>,
) -> Result<u64, OracleError> {
    let k = cols.len();
    if k == ctx.n {
        return Ok(u64::from(final_check(ctx.fp, ctx.n, ctx.kind, &cols)));
    }
    let mut total = 0u64;
    let p_pow = ctx.fp.modulus().pow(ctx.n as u32);
    let visited = ctx.nodes.fetch_add(p_pow, Ordering::Relaxed);
    if visited > ctx.max_nodes {
        return Err(OracleError::SearchSpaceTooLarge {
            budget: ctx.max_nodes,
        });
    }
    for cand in candidate_columns(ctx.fp, ctx.n) {
        if let Some(next) = accept_column(ctx.fp, ctx.n, ctx.kind, &state, k, &cand) {
            let mut cols = cols.clone();
            cols.push(cand);
            total += extend_columns(ctx, next, cols)?;
        }
    }
    Ok(total)
}

fn candidate_columns(fp: Fp, n: usize) -> impl Iterator<Item = Vec<u64>> {
    let p = fp.modulus();
    let total = p.pow(n as u32);
    (0..total).map(move |idx| {
        let mut c = Vec::with_capacity(n);
        let mut rest = idx;
        for _ in 0..n {
            c.push(rest % p);
            rest /= p;
        }
        c
    })
}

/// Closed-form order of the split group of the given reductive type over
/// `F_q`: `q^u · Π (q^{d_i} - 1)`.
pub fn order_formula(t: &ReductiveType, unipotent_extra: usize, q: u64) -> BigInt {
    let qq = BigInt::from(q);
    let mut acc = num::pow::pow(qq.clone(), t.positive_roots() + unipotent_extra);
    for d in t.degrees() {
        acc *= num::pow::pow(qq.clone(), d) - BigInt::one();
    }
    acc
}

/// Realizes an asserted pair as concrete matrix equations, when the types
/// admit one of the supported classical models.
pub fn realize(
    pair: &HomogeneousPair,
) -> Result<(MatrixGroupEquations, MatrixGroupEquations), OracleError> {
    let g_spec = pair.group();
    if g_spec.unipotent_extra != 0 {
        return Err(OracleError::NotRealizable {
            reason: "ambient group must be reductive".into(),
        });
    }
    let (g_eq, ambient) = realize_ambient(&g_spec.reductive)?;
    let h_spec = match pair.subgroup() {
        SubgroupSpec::Connected(h) => h,
        SubgroupSpec::Disconnected(_) => {
            return Err(OracleError::NotRealizable {
                reason: "naive order quotients are wrong for disconnected subgroups".into(),
            })
        }
    };
    if h_spec.reductive == g_spec.reductive && h_spec.unipotent_extra == 0 {
        return Ok((g_eq.clone(), g_eq));
    }
    if h_spec.unipotent_extra != 0 {
        return Err(OracleError::NotRealizable {
            reason: "subgroup must be reductive".into(),
        });
    }
    let h_rt = &h_spec.reductive;
    // full diagonal torus of the ambient group
    if h_rt.factors().is_empty() && h_rt.torus_rank() == g_spec.rank() {
        let h_eq = MatrixGroupEquations::diagonal_torus(ambient, g_eq.size())?;
        return Ok((g_eq, h_eq));
    }
    // full block Levi subgroups of the special linear group: type-A blocks
    // plus 1 x 1 blocks, torus rank = (number of blocks) - 1
    if ambient == ClassicalKind::SpecialLinear
        && h_rt.factors().iter().all(|f| f.family() == Family::A)
    {
        let mut sizes: Vec<usize> = h_rt.factors().iter().map(|f| f.rank() + 1).collect();
        let used: usize = sizes.iter().sum();
        if used <= g_eq.size() {
            let singles = g_eq.size() - used;
            if sizes.len() + singles - 1 == h_rt.torus_rank() {
                sizes.extend(std::iter::repeat_n(1, singles));
                let h_eq = MatrixGroupEquations::levi_in_special_linear(g_eq.size(), &sizes)?;
                return Ok((g_eq, h_eq));
            }
        }
    }
    Err(OracleError::NotRealizable {
        reason: format!("no matrix model for subgroup {h_spec}"),
    })
}

fn realize_ambient(
    t: &ReductiveType,
) -> Result<(MatrixGroupEquations, ClassicalKind), OracleError> {
    if t.torus_rank() != 0 || t.factors().len() != 1 {
        return Err(OracleError::NotRealizable {
            reason: format!("no matrix model for ambient type {t}"),
        });
    }
    let f = t.factors()[0];
    match (f.family(), f.rank()) {
        (Family::A, n) if n < MAX_MATRIX_SIZE => Ok((
            MatrixGroupEquations::special_linear(n + 1)?,
            ClassicalKind::SpecialLinear,
        )),
        (Family::B, 2) => Ok((
            MatrixGroupEquations::split_orthogonal(5)?,
            ClassicalKind::SplitOrthogonal,
        )),
        (Family::C, 2) => Ok((
            MatrixGroupEquations::symplectic(4)?,
            ClassicalKind::Symplectic,
        )),
        (Family::D, 2) => Ok((
            MatrixGroupEquations::split_orthogonal(4)?,
            ClassicalKind::SplitOrthogonal,
        )),
        _ => Err(OracleError::NotRealizable {
            reason: format!("no matrix model for ambient type {t}"),
        }),
    }
}

/// Number of points of `G/H` over `F_p` by order quotient,
/// `|G(F_p)| / |H(F_p)|` (valid for connected `H`).
pub fn homogeneous_count(pair: &HomogeneousPair, p: u64) -> Result<BigInt, OracleError> {
    homogeneous_count_with(pair, p, ExecMode::default(), OracleBudget::default())
}

pub fn homogeneous_count_with(
    pair: &HomogeneousPair,
    p: u64,
    mode: ExecMode,
    budget: OracleBudget,
) -> Result<BigInt, OracleError> {
    let (g_eq, h_eq) = realize(pair)?;
    let g_order = BigInt::from(enumerate_order_with(&g_eq, p, mode, budget)?);
    let h_order = BigInt::from(enumerate_order_with(&h_eq, p, mode, budget)?);
    if (&g_order % &h_order) != BigInt::from(0) {
        return Err(OracleError::NonIntegerQuotient { g_order, h_order });
    }
    Ok(g_order / h_order)
}
