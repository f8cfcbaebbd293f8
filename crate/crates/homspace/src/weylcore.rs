//! Root-system data and Weyl groups as exact rational matrix groups.
//!
//! A connected reductive type is a multiset of simple factors plus a central
//! torus rank. Its fundamental degrees come from a static table; the table is
//! cross-validated by the test suite against Molien series of the enumerated
//! reflection groups, which is an independent computation.

use crate::exactalg::{IntPoly, RatFunc};
use crate::ExecMode;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::collections::{HashMap, HashSet};
use std::fmt;
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default cap on enumerated Weyl-group orders (the order of W(E6)).
pub const DEFAULT_ENUMERATION_CAP: usize = 51_840;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("predicted Weyl order {predicted} exceeds the enumeration cap {cap}")]
    CapExceeded { predicted: BigInt, cap: usize },
    #[error("group closure exceeded the cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("generator file, line {line}: {message}")]
    GeneratorParse { line: usize, message: String },
    #[error("generator {index} is a singular matrix")]
    SingularGenerator { index: usize },
}

impl WeylError {
    pub fn code(&self) -> &'static str {
        match self {
            WeylError::InvalidRank { .. } => "InvalidRank",
            WeylError::CapExceeded { .. } => "CapExceeded",
            WeylError::ClosureCapExceeded { .. } => "CapExceeded",
            WeylError::GeneratorParse { .. } => "ParseError",
            WeylError::SingularGenerator { .. } => "ParseError",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// One simple factor, e.g. `A3` or `F4`.
///
/// `D2` and `D3` are legal and handled through their degree lists (they
/// coincide with `A1 x A1` and `A3`), so aliases like `SO(4)` and `SO(6)`
/// need no special cases downstream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, WeylError> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(WeylError::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Fundamental degrees of the invariant ring, sorted ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let n = self.rank;
        let mut d = match self.family {
            Family::A => (2..=n + 1).collect::<Vec<_>>(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut v: Vec<usize> = (1..n).map(|i| 2 * i).collect();
                v.push(n);
                v
            }
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
        };
        d.sort_unstable();
        d
    }

    /// Cartan matrix `a[i][j] = 2(α_i, α_j)/(α_j, α_j)` in the Bourbaki
    /// numbering.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        fn bond(a: &mut [Vec<i64>], i: usize, j: usize) {
            a[i][j] = -1;
            a[j][i] = -1;
        }
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    bond(&mut a, i, i + 1);
                }
            }
            Family::B => {
                for i in 0..n.saturating_sub(1) {
                    bond(&mut a, i, i + 1);
                }
                if n >= 2 {
                    a[n - 2][n - 1] = -2;
                }
            }
            Family::C => {
                for i in 0..n.saturating_sub(1) {
                    bond(&mut a, i, i + 1);
                }
                if n >= 2 {
                    a[n - 1][n - 2] = -2;
                }
            }
            Family::D => {
                // chain 0..n-3, with both n-2 and n-1 attached to n-3;
                // n = 2 is two disconnected nodes
                if n >= 3 {
                    for i in 0..n - 3 {
                        bond(&mut a, i, i + 1);
                    }
                    bond(&mut a, n - 3, n - 2);
                    bond(&mut a, n - 3, n - 1);
                }
            }
            Family::E => {
                // chain 0-2-3-4-5(-6)(-7), node 1 attached to 3
                bond(&mut a, 0, 2);
                bond(&mut a, 2, 3);
                bond(&mut a, 3, 4);
                bond(&mut a, 4, 5);
                if n >= 7 {
                    bond(&mut a, 5, 6);
                }
                if n >= 8 {
                    bond(&mut a, 6, 7);
                }
                bond(&mut a, 1, 3);
            }
            Family::F => {
                bond(&mut a, 0, 1);
                bond(&mut a, 2, 3);
                a[1][2] = -2;
                a[2][1] = -1;
            }
            Family::G => {
                a[0][1] = -1;
                a[1][0] = -3;
            }
        }
        a
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A connected reductive type: simple factors plus a central torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReductiveType {
    factors: Vec<SimpleType>,
    torus_rank: usize,
}

impl ReductiveType {
    pub fn new(mut factors: Vec<SimpleType>, torus_rank: usize) -> Self {
        factors.sort_unstable();
        ReductiveType {
            factors,
            torus_rank,
        }
    }

    pub fn simple(t: SimpleType) -> Self {
        ReductiveType::new(vec![t], 0)
    }

    pub fn torus(rank: usize) -> Self {
        ReductiveType::new(Vec::new(), rank)
    }

    pub fn product(&self, other: &ReductiveType) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().copied());
        ReductiveType::new(factors, self.torus_rank + other.torus_rank)
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.torus_rank == 0
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).sum::<usize>() + self.torus_rank
    }

    /// Fundamental degrees, the central torus contributing `1`s; sorted
    /// ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![1usize; self.torus_rank];
        for f in &self.factors {
            d.extend(f.degrees());
        }
        d.sort_unstable();
        d
    }

    /// `|W|`, the product of the fundamental degrees.
    pub fn weyl_order(&self) -> BigInt {
        self.degrees()
            .iter()
            .fold(BigInt::one(), |acc, &d| acc * BigInt::from(d))
    }

    /// Number of positive roots, `Σ (d_i - 1)`.
    pub fn positive_roots(&self) -> usize {
        self.degrees().iter().map(|&d| d - 1).sum()
    }

    /// Dimension of the reductive group, `rank + 2·(positive roots)`.
    pub fn dim(&self) -> usize {
        self.rank() + 2 * self.positive_roots()
    }

    /// Hilbert series of the invariant ring: `1 / Π (1 - z^{d_i})`.
    pub fn f_series(&self) -> RatFunc {
        let mut den = IntPoly::one();
        for d in self.degrees() {
            let mut c = vec![BigInt::zero(); d + 1];
            c[0] = BigInt::one();
            c[d] = -BigInt::one();
            den = &den * &IntPoly::new(c);
        }
        RatFunc::new(IntPoly::one(), den).expect("nonzero denominator")
    }

    /// Half-Poincaré polynomial of the full flag variety:
    /// `Π (1 + z + … + z^{d_i - 1})`.
    pub fn flag_poly(&self) -> IntPoly {
        let mut b = IntPoly::one();
        for d in self.degrees() {
            b = &b * &IntPoly::new(vec![BigInt::one(); d]);
        }
        b
    }

    /// Simple-reflection generators acting on the full rank space in the
    /// simple-root basis; torus coordinates are fixed.
    #[allow(clippy::needless_range_loop)]
    pub fn reflection_generators(&self) -> Vec<QMatrix> {
        let dim = self.rank();
        let mut gens = Vec::new();
        let mut offset = 0usize;
        for f in &self.factors {
            let a = f.cartan();
            let k = f.rank();
            for j in 0..k {
                let mut m = QMatrix::identity(dim);
                for i in 0..k {
                    let delta = if i == j { 1 } else { 0 };
                    m.set(
                        offset + j,
                        offset + i,
                        BigRational::from_integer(BigInt::from(delta - a[i][j])),
                    );
                }
                gens.push(m);
            }
            offset += k;
        }
        gens
    }
}

impl fmt::Display for ReductiveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        if self.torus_rank > 0 || parts.is_empty() {
            parts.push(format!("T{}", self.torus_rank));
        }
        write!(f, "{}", parts.join("x"))
    }
}

/// Square matrix with exact rational entries, row major.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl QMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut m = QMatrix {
            dim,
            entries: vec![BigRational::zero(); dim * dim],
        };
        for i in 0..dim {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_entries(dim: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        QMatrix { dim, entries }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), dim);
                r.iter()
                    .map(|&v| BigRational::from_integer(BigInt::from(v)))
            })
            .collect();
        QMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn mul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = QMatrix {
            dim: n,
            entries: vec![BigRational::zero(); n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let entry = &mut out.entries[i * n + j];
                    *entry += a * b;
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == QMatrix::identity(self.dim)
    }

    pub fn trace(&self) -> BigRational {
        (0..self.dim).map(|i| self.entry(i, i).clone()).sum()
    }

    /// Exact determinant by Gaussian elimination over the rationals.
    #[allow(clippy::needless_range_loop)]
    pub fn det(&self) -> BigRational {
        let n = self.dim;
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        let mut det = BigRational::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
                Some(p) => p,
                None => return BigRational::zero(),
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            let p = m[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &p;
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
        det
    }

    /// Coefficients of `det(I - z·M)`, low degree first.
    pub fn det_one_minus_z(&self) -> Vec<BigRational> {
        let n = self.dim;
        if n == 0 {
            return vec![BigRational::one()];
        }
        // Laplace expansion down the rows, memoized on the set of available
        // columns; every entry of I - z·M is linear in z.
        let full: u32 = (1u32 << n) - 1;
        let mut memo: HashMap<u32, Vec<BigRational>> = HashMap::new();
        memo.insert(0, vec![BigRational::one()]);
        self.minor_det(full, n, &mut memo)
    }

    fn minor_det(
        &self,
        mask: u32,
        n: usize,
        memo: &mut HashMap<u32, Vec<BigRational>>,
    ) -> Vec<BigRational> {
        if let Some(hit) = memo.get(&mask) {
            return hit.clone();
        }
        let row = n - mask.count_ones() as usize;
        let mut acc: Vec<BigRational> = Vec::new();
        let mut sign_pos = true;
        for j in 0..n {
            let bit = 1u32 << j;
            if mask & bit == 0 {
                continue;
            }
            // entry (row, j) of I - z·M is c0 + c1·z
            let c0 = if row == j {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            let c1 = -self.entry(row, j).clone();
            if !(c0.is_zero() && c1.is_zero()) {
                let sub = self.minor_det(mask & !bit, n, memo);
                if acc.len() < sub.len() + 1 {
                    acc.resize(sub.len() + 1, BigRational::zero());
                }
                for (k, s) in sub.iter().enumerate() {
                    let mut t0 = BigRational::zero();
                    if !c0.is_zero() {
                        t0 = &c0 * s;
                    }
                    let mut t1 = BigRational::zero();
                    if !c1.is_zero() {
                        t1 = &c1 * s;
                    }
                    if sign_pos {
                        acc[k] += t0;
                        acc[k + 1] += t1;
                    } else {
                        acc[k] -= t0;
                        acc[k + 1] -= t1;
                    }
                }
            }
            sign_pos = !sign_pos;
        }
        if acc.is_empty() {
            acc.push(BigRational::zero());
        }
        memo.insert(mask, acc.clone());
        acc
    }
}

/// A finite group of exact rational matrices, closed under multiplication.
///
/// Elements are stored sorted, so two enumerations of the same group compare
/// equal regardless of traversal order or parallel schedule. Finiteness
/// guarantees that every element has finite multiplicative order and that
/// the set is closed under inversion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylMatrixGroup {
    dim: usize,
    elements: Vec<QMatrix>,
}

impl WeylMatrixGroup {
    /// Closes a generating set under multiplication, failing once more than
    /// `cap` elements appear.
    pub fn from_generators(
        dim: usize,
        generators: Vec<QMatrix>,
        cap: usize,
        mode: ExecMode,
    ) -> Result<Self, WeylError> {
        for (index, g) in generators.iter().enumerate() {
            assert_eq!(g.dim(), dim, "generator dimension mismatch");
            if g.det().is_zero() {
                return Err(WeylError::SingularGenerator { index });
            }
        }
        let elements = closure(dim, &generators, cap, mode)?;
        Ok(WeylMatrixGroup { dim, elements })
    }

    pub fn trivial(dim: usize) -> Self {
        WeylMatrixGroup {
            dim,
            elements: vec![QMatrix::identity(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[QMatrix] {
        &self.elements
    }

    pub fn contains(&self, m: &QMatrix) -> bool {
        self.elements.binary_search(m).is_ok()
    }
}

fn closure(
    dim: usize,
    generators: &[QMatrix],
    cap: usize,
    mode: ExecMode,
) -> Result<Vec<QMatrix>, WeylError> {
    let mut seen: HashSet<QMatrix> = HashSet::new();
    let identity = QMatrix::identity(dim);
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let products = expand_frontier(&frontier, generators, mode);
        frontier.clear();
        for m in products {
            if seen.insert(m.clone()) {
                frontier.push(m);
            }
            if seen.len() > cap {
                return Err(WeylError::ClosureCapExceeded { cap });
            }
        }
    }
    let mut elements: Vec<QMatrix> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(elements)
}

#[cfg(feature = "parallel")]
fn expand_frontier(frontier: &[QMatrix], generators: &[QMatrix], mode: ExecMode) -> Vec<QMatrix> {
    match mode {
        ExecMode::Parallel => frontier
            .par_iter()
            .flat_map_iter(|m| generators.iter().map(move |g| m.mul(g)))
            .collect(),
        ExecMode::Sequential => expand_frontier_seq(frontier, generators),
    }
}

#[cfg(not(feature = "parallel"))]
fn expand_frontier(frontier: &[QMatrix], generators: &[QMatrix], _mode: ExecMode) -> Vec<QMatrix> {
    expand_frontier_seq(frontier, generators)
}

fn expand_frontier_seq(frontier: &[QMatrix], generators: &[QMatrix]) -> Vec<QMatrix> {
    frontier
        .iter()
        .flat_map(|m| generators.iter().map(move |g| m.mul(g)))
        .collect()
}

/// Enumerates the Weyl group of `t` in the simple-root basis, by closing the
/// simple reflections under multiplication. Fails up front when the
/// predicted order exceeds `cap`.
pub fn weyl_enumerate(t: &ReductiveType, cap: usize) -> Result<WeylMatrixGroup, WeylError> {
    weyl_enumerate_with(t, cap, ExecMode::default())
}

pub fn weyl_enumerate_with(
    t: &ReductiveType,
    cap: usize,
    mode: ExecMode,
) -> Result<WeylMatrixGroup, WeylError> {
    let semisimple = ReductiveType::new(t.factors().to_vec(), 0);
    let predicted = semisimple.weyl_order();
    if predicted > BigInt::from(cap) {
        return Err(WeylError::CapExceeded { predicted, cap });
    }
    WeylMatrixGroup::from_generators(t.rank(), t.reflection_generators(), cap, mode)
}

/// Molien series of a finite matrix group: the average over the group of
/// `1 / det(1 - z·w⁻¹)`.
pub fn molien_series(group: &WeylMatrixGroup) -> RatFunc {
    molien_series_with(group, ExecMode::default())
}

pub fn molien_series_with(group: &WeylMatrixGroup, mode: ExecMode) -> RatFunc {
    // Inversion permutes the group, so averaging 1/det(1 - z·w) over all
    // elements yields the same sum.
    let dets = char_dets(group.elements(), mode);
    let mut by_den: HashMap<Vec<BigRational>, usize> = HashMap::new();
    for d in dets {
        *by_den.entry(d).or_insert(0) += 1;
    }
    let mut terms: Vec<(Vec<BigRational>, usize)> = by_den.into_iter().collect();
    terms.sort_unstable();
    let mut sum = RatFunc::zero();
    for (den, count) in terms {
        let num = [BigRational::from_integer(BigInt::from(count))];
        let term = RatFunc::from_rational_coeffs(&num, &den).expect("det(I - z·w) is 1 at z = 0");
        sum = &sum + &term;
    }
    let inv_order = RatFunc::from_rational_coeffs(
        &[BigRational::one()],
        &[BigRational::from_integer(BigInt::from(group.order()))],
    )
    .expect("nonzero order");
    &sum * &inv_order
}

#[cfg(feature = "parallel")]
fn char_dets(elements: &[QMatrix], mode: ExecMode) -> Vec<Vec<BigRational>> {
    match mode {
        ExecMode::Parallel => elements.par_iter().map(|m| m.det_one_minus_z()).collect(),
        ExecMode::Sequential => elements.iter().map(|m| m.det_one_minus_z()).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn char_dets(elements: &[QMatrix], _mode: ExecMode) -> Vec<Vec<BigRational>> {
    elements.iter().map(|m| m.det_one_minus_z()).collect()
}

/// Parses the generator text format: first line `dim n`, then one generator
/// per line as `n·n` rational entries (`p/q` or plain integers) separated by
/// spaces. The closure of the generators is computed and checked against the
/// cap.
pub fn load_matrix_group(text: &str, cap: usize) -> Result<WeylMatrixGroup, WeylError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first_no, first) = lines.next().ok_or(WeylError::GeneratorParse {
        line: 1,
        message: "empty input".into(),
    })?;
    let dim: usize = match first.strip_prefix("dim") {
        Some(rest) => rest.trim().parse().map_err(|_| WeylError::GeneratorParse {
            line: first_no,
            message: format!("expected `dim n`, found `{first}`"),
        })?,
        None => {
            return Err(WeylError::GeneratorParse {
                line: first_no,
                message: format!("expected `dim n`, found `{first}`"),
            })
        }
    };
    if dim == 0 || dim > 30 {
        return Err(WeylError::GeneratorParse {
            line: first_no,
            message: format!("dimension {dim} out of range"),
        });
    }
    let mut generators = Vec::new();
    for (line_no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != dim * dim {
            return Err(WeylError::GeneratorParse {
                line: line_no,
                message: format!("expected {} entries, found {}", dim * dim, tokens.len()),
            });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for tok in tokens {
            entries.push(parse_rational(tok).ok_or_else(|| WeylError::GeneratorParse {
                line: line_no,
                message: format!("invalid rational entry `{tok}`"),
            })?);
        }
        generators.push(QMatrix::from_entries(dim, entries));
    }
    WeylMatrixGroup::from_generators(dim, generators, cap, ExecMode::default())
}

fn parse_rational(tok: &str) -> Option<BigRational> {
    match tok.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => {
            let n: BigInt = tok.parse().ok()?;
            Some(BigRational::from_integer(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple(family: Family, rank: usize) -> ReductiveType {
        ReductiveType::simple(SimpleType::new(family, rank).unwrap())
    }

    #[test]
    fn degree_table_examples() {
        assert_eq!(simple(Family::A, 2).degrees(), vec![2, 3]);
        assert_eq!(ReductiveType::torus(2).degrees(), vec![1, 1]);
        assert_eq!(simple(Family::D, 3).degrees(), vec![2, 3, 4]);
        assert_eq!(simple(Family::D, 2).degrees(), vec![2, 2]);
        assert_eq!(simple(Family::E, 6).weyl_order(), BigInt::from(51840));
        assert_eq!(simple(Family::G, 2).positive_roots(), 6);
        assert!(SimpleType::new(Family::F, 3).is_err());
        assert!(SimpleType::new(Family::E, 5).is_err());
        assert!(SimpleType::new(Family::D, 1).is_err());
    }

    #[test]
    fn f_series_examples() {
        let a1 = simple(Family::A, 1);
        assert_eq!(
            a1.f_series(),
            RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[1, 0, -1])).unwrap()
        );
        let a1a1 = a1.product(&a1);
        assert_eq!(
            a1a1.f_series(),
            RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[1, 0, -2, 0, 1])).unwrap()
        );
        assert_eq!(
            ReductiveType::torus(1).f_series(),
            RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[1, -1])).unwrap()
        );
    }

    #[test]
    fn flag_poly_examples() {
        assert_eq!(simple(Family::A, 1).flag_poly(), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(
            simple(Family::A, 2).flag_poly(),
            IntPoly::from_i64s(&[1, 2, 2, 1])
        );
        assert_eq!(
            simple(Family::B, 2).flag_poly(),
            IntPoly::from_i64s(&[1, 2, 2, 2, 1])
        );
        // B(1) = |W|, constant term 1, degree = number of positive roots
        for t in [simple(Family::B, 3), simple(Family::G, 2)] {
            let b = t.flag_poly();
            assert_eq!(b.sum_of_coeffs(), t.weyl_order());
            assert_eq!(b.coeff(0), BigInt::one());
            assert_eq!(b.degree(), Some(t.positive_roots()));
            assert!(b.is_palindromic(t.positive_roots()));
            assert!(b.has_nonnegative_coeffs());
        }
    }

    #[test]
    fn flag_poly_solves_the_torus_series_identity() {
        // 1/(1-z)^r = F_G(z) · B(z) as rational functions
        for t in [
            simple(Family::A, 2),
            simple(Family::B, 2),
            simple(Family::A, 1).product(&ReductiveType::torus(1)),
        ] {
            let torus_side =
                RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[1, -1]).pow(t.rank())).unwrap();
            let b = torus_side.div(&t.f_series()).unwrap().as_poly().unwrap();
            assert_eq!(b, t.flag_poly());
        }
    }

    #[test]
    fn enumeration_orders() {
        let cases = [
            (simple(Family::A, 1), 2usize),
            (simple(Family::A, 2), 6),
            (simple(Family::B, 3), 48),
            (simple(Family::D, 2), 4),
            (simple(Family::G, 2), 12),
            (simple(Family::A, 1).product(&ReductiveType::torus(2)), 2),
            (ReductiveType::torus(3), 1),
        ];
        for (t, order) in cases {
            let w = weyl_enumerate(&t, DEFAULT_ENUMERATION_CAP).unwrap();
            assert_eq!(w.order(), order, "type {t}");
            assert_eq!(w.dim(), t.rank());
        }
        let a1 = weyl_enumerate(&simple(Family::A, 1), 10).unwrap();
        assert!(a1.contains(&QMatrix::from_i64_rows(&[&[-1]])));
        assert!(a1.contains(&QMatrix::identity(1)));
    }

    #[test]
    fn enumeration_cap_reports_prediction() {
        let e6 = simple(Family::E, 6);
        match weyl_enumerate(&e6, 1000) {
            Err(WeylError::CapExceeded { predicted, cap }) => {
                assert_eq!(predicted, BigInt::from(51840));
                assert_eq!(cap, 1000);
            }
            other => panic!("expected CapExceeded, got {other:?}"),
        }
    }

    #[test]
    fn generators_are_reflections() {
        for t in [
            simple(Family::A, 3),
            simple(Family::B, 4),
            simple(Family::C, 3),
            simple(Family::D, 4),
            simple(Family::F, 4),
            simple(Family::G, 2),
        ] {
            let dim = t.rank();
            for g in t.reflection_generators() {
                assert_eq!(
                    g.trace(),
                    BigRational::from_integer(BigInt::from(dim as i64 - 2))
                );
                assert!(g.mul(&g).is_identity());
            }
        }
    }

    #[test]
    fn molien_examples() {
        // trivial group in dimension r
        let triv = WeylMatrixGroup::trivial(3);
        assert_eq!(
            molien_series(&triv),
            RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[1, -1]).pow(3)).unwrap()
        );
        // {±I2}
        let pm = WeylMatrixGroup::from_generators(
            2,
            vec![QMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]])],
            16,
            ExecMode::default(),
        )
        .unwrap();
        assert_eq!(pm.order(), 2);
        assert_eq!(
            molien_series(&pm),
            RatFunc::new(
                IntPoly::from_i64s(&[1, 0, 1]),
                IntPoly::from_i64s(&[1, 0, -2, 0, 1])
            )
            .unwrap()
        );
        // W(A1) = {±1} in dimension 1
        let a1 = weyl_enumerate(&simple(Family::A, 1), 10).unwrap();
        assert_eq!(
            molien_series(&a1),
            RatFunc::new(IntPoly::one(), IntPoly::from_i64s(&[1, 0, -1])).unwrap()
        );
    }

    #[test]
    fn molien_cross_validates_the_degree_table() {
        for t in [
            simple(Family::A, 2),
            simple(Family::B, 2),
            simple(Family::D, 3),
            simple(Family::A, 1).product(&ReductiveType::torus(1)),
        ] {
            let w = weyl_enumerate(&t, DEFAULT_ENUMERATION_CAP).unwrap();
            assert_eq!(molien_series(&w), t.f_series(), "type {t}");
        }
    }

    #[test]
    fn molien_limit_and_degree() {
        let t = simple(Family::A, 2);
        let w = weyl_enumerate(&t, 100).unwrap();
        let f = molien_series(&w);
        assert_eq!(
            f.cancel_eval_at_one(2).unwrap(),
            BigRational::new(BigInt::one(), BigInt::from(6))
        );
        assert_eq!(f.degree(), Some(-5));
    }

    #[test]
    fn closure_is_schedule_independent() {
        let t = simple(Family::B, 3);
        let seq = weyl_enumerate_with(&t, 100, ExecMode::Sequential).unwrap();
        let par = weyl_enumerate_with(&t, 100, ExecMode::Parallel).unwrap();
        assert_eq!(seq, par);
        assert_eq!(
            molien_series_with(&seq, ExecMode::Sequential),
            molien_series_with(&seq, ExecMode::Parallel)
        );
    }

    #[test]
    fn generator_file_round_trip() {
        let text = "dim 2\n-1 0 0 -1\n";
        let g = load_matrix_group(text, 16).unwrap();
        assert_eq!(g.order(), 2);
        let text_rat = "dim 1\n-1/1\n";
        let g = load_matrix_group(text_rat, 16).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn generator_file_errors() {
        assert!(matches!(
            load_matrix_group("dim 2\n1 0 0", 16),
            Err(WeylError::GeneratorParse { line: 2, .. })
        ));
        assert!(matches!(
            load_matrix_group("2x2\n1 0 0 1", 16),
            Err(WeylError::GeneratorParse { line: 1, .. })
        ));
        assert!(matches!(
            load_matrix_group("dim 1\n0", 16),
            Err(WeylError::SingularGenerator { index: 0 })
        ));
        // an infinite group trips the closure cap
        assert!(matches!(
            load_matrix_group("dim 1\n2", 64),
            Err(WeylError::ClosureCapExceeded { cap: 64 })
        ));
    }

    #[test]
    fn det_one_minus_z_agrees_on_a_permutation() {
        let m = QMatrix::from_i64_rows(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        // 3-cycle: det(I - zM) = 1 - z^3
        let coeffs = m.det_one_minus_z();
        let expect: Vec<BigRational> = [1i64, 0, 0, -1]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        assert_eq!(coeffs, expect);
        assert_eq!(m.det(), BigRational::one());
    }
}
