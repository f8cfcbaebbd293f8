//! Invariants of a homogeneous space `G/H` from the group data alone.
//!
//! An asserted pair `(G, H)` carries no root-level embedding; only ranks,
//! unipotent dimensions and Weyl data enter the formulas, and an impossible
//! assertion surfaces as a `NotDivisible` signal. The factor `Q_{G/H}` is
//! the flag-polynomial quotient for connected `H`; for disconnected `H` the
//! half-Poincaré polynomial comes from the Hilbert-series route
//! `p(z) = z^{dim G/H} · F_H(1/z)/F_G(1/z)` with `F_H` a Molien series.

use crate::exactalg::{ExactAlgError, IntPoly, RatFunc};
use crate::weylcore::{molien_series, ReductiveType, WeylMatrixGroup};
use num::bigint::BigInt;
use num::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomogeneousError {
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
    #[error("coefficients are not non-negative: {context}")]
    NonNegativityViolated { context: String },
    #[error("independent computation routes disagree: {context}")]
    InternalInconsistency { context: String },
    #[error("expected a polynomial but a denominator remains: {context}")]
    NotPolynomial { context: String },
    #[error("invalid pair: {reason}")]
    InvalidPair { reason: String },
    #[error("{q} is not a prime power >= 2")]
    NotPrimePower { q: u64 },
}

impl HomogeneousError {
    pub fn code(&self) -> &'static str {
        match self {
            HomogeneousError::Exact(e) => e.code(),
            HomogeneousError::NonNegativityViolated { .. } => "NonNegativityViolated",
            HomogeneousError::InternalInconsistency { .. } => "InternalInconsistency",
            HomogeneousError::NotPolynomial { .. } => "NotPolynomial",
            HomogeneousError::InvalidPair { .. } => "InvalidPair",
            HomogeneousError::NotPrimePower { .. } => "NotPrimePower",
        }
    }
}

/// A connected linear algebraic group: a reductive type together with the
/// dimension of an extra unipotent radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub reductive: ReductiveType,
    pub unipotent_extra: usize,
}

impl GroupSpec {
    pub fn reductive(t: ReductiveType) -> Self {
        GroupSpec {
            reductive: t,
            unipotent_extra: 0,
        }
    }

    pub fn with_unipotent(t: ReductiveType, unipotent_extra: usize) -> Self {
        GroupSpec {
            reductive: t,
            unipotent_extra,
        }
    }

    pub fn is_reductive(&self) -> bool {
        self.unipotent_extra == 0
    }

    pub fn rank(&self) -> usize {
        self.reductive.rank()
    }

    /// Unipotent dimension of the reductive part (= positive-root count).
    pub fn u_red(&self) -> usize {
        self.reductive.positive_roots()
    }

    /// Dimension of a maximal unipotent subgroup.
    pub fn u_total(&self) -> usize {
        self.u_red() + self.unipotent_extra
    }

    pub fn dim(&self) -> usize {
        self.reductive.dim() + self.unipotent_extra
    }

    pub fn weyl_order(&self) -> BigInt {
        self.reductive.weyl_order()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.reductive)?;
        if self.unipotent_extra > 0 {
            write!(f, "+U{}", self.unipotent_extra)?;
        }
        Ok(())
    }
}

/// Reductive-but-disconnected subgroup data: the full Weyl-like group acting
/// on the Cartan algebra of the identity component (including the component
/// group), plus the positive-root count of the identity component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisconnectedSubgroup {
    weyl: WeylMatrixGroup,
    u_connected: usize,
    unipotent_extra: usize,
    hilbert: RatFunc,
}

impl DisconnectedSubgroup {
    pub fn new(
        weyl: WeylMatrixGroup,
        u_connected: usize,
        unipotent_extra: usize,
    ) -> Result<Self, HomogeneousError> {
        let hilbert = molien_series(&weyl);
        let rank = weyl.dim();
        // The Hilbert series of the invariant ring has degree at most
        // -(u + r) for the asserted identity component; a violation means
        // the supplied u is too large for this matrix group.
        let bound = -((u_connected + rank) as i64);
        let deg = hilbert
            .degree()
            .expect("Molien series of a nonempty group is nonzero");
        if deg > bound {
            return Err(HomogeneousError::InvalidPair {
                reason: format!(
                    "Molien series has degree {deg}, inconsistent with u = {u_connected} and rank {rank}"
                ),
            });
        }
        Ok(DisconnectedSubgroup {
            weyl,
            u_connected,
            unipotent_extra,
            hilbert,
        })
    }

    pub fn weyl(&self) -> &WeylMatrixGroup {
        &self.weyl
    }

    pub fn hilbert_series(&self) -> &RatFunc {
        &self.hilbert
    }
}

/// A closed subgroup: either a connected group spec, or disconnected
/// reductive matrix-group data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupSpec {
    Connected(GroupSpec),
    Disconnected(DisconnectedSubgroup),
}

impl SubgroupSpec {
    pub fn connected(g: GroupSpec) -> Self {
        SubgroupSpec::Connected(g)
    }

    pub fn disconnected(
        weyl: WeylMatrixGroup,
        u_connected: usize,
        unipotent_extra: usize,
    ) -> Result<Self, HomogeneousError> {
        Ok(SubgroupSpec::Disconnected(DisconnectedSubgroup::new(
            weyl,
            u_connected,
            unipotent_extra,
        )?))
    }

    pub fn is_connected(&self) -> bool {
        matches!(self, SubgroupSpec::Connected(_))
    }

    pub fn is_reductive(&self) -> bool {
        match self {
            SubgroupSpec::Connected(g) => g.is_reductive(),
            SubgroupSpec::Disconnected(d) => d.unipotent_extra == 0,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            SubgroupSpec::Connected(g) => g.rank(),
            SubgroupSpec::Disconnected(d) => d.weyl.dim(),
        }
    }

    /// Positive-root count of the identity component.
    pub fn u_red(&self) -> usize {
        match self {
            SubgroupSpec::Connected(g) => g.u_red(),
            SubgroupSpec::Disconnected(d) => d.u_connected,
        }
    }

    pub fn u_total(&self) -> usize {
        match self {
            SubgroupSpec::Connected(g) => g.u_total(),
            SubgroupSpec::Disconnected(d) => d.u_connected + d.unipotent_extra,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SubgroupSpec::Connected(g) => g.dim(),
            SubgroupSpec::Disconnected(d) => {
                d.weyl.dim() + 2 * d.u_connected + d.unipotent_extra
            }
        }
    }

    pub fn weyl_order(&self) -> BigInt {
        match self {
            SubgroupSpec::Connected(g) => g.weyl_order(),
            SubgroupSpec::Disconnected(d) => BigInt::from(d.weyl.order()),
        }
    }

    /// Hilbert series of the Weyl-invariant ring of the reductive part.
    pub fn hilbert_series(&self) -> RatFunc {
        match self {
            SubgroupSpec::Connected(g) => g.reductive.f_series(),
            SubgroupSpec::Disconnected(d) => d.hilbert.clone(),
        }
    }
}

impl fmt::Display for SubgroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgroupSpec::Connected(g) => write!(f, "{g}"),
            SubgroupSpec::Disconnected(d) => {
                write!(
                    f,
                    "disconnected(rank {}, |W| = {}, u = {}",
                    d.weyl.dim(),
                    d.weyl.order(),
                    d.u_connected
                )?;
                if d.unipotent_extra > 0 {
                    write!(f, ", +U{}", d.unipotent_extra)?;
                }
                write!(f, ")")
            }
        }
    }
}

/// An asserted embedding `H ⊆ G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPair {
    g: GroupSpec,
    h: SubgroupSpec,
}

impl HomogeneousPair {
    pub fn new(g: GroupSpec, h: SubgroupSpec) -> Result<Self, HomogeneousError> {
        if h.rank() > g.rank() {
            return Err(HomogeneousError::InvalidPair {
                reason: format!("rank {} of H exceeds rank {} of G", h.rank(), g.rank()),
            });
        }
        if h.u_total() > g.u_total() {
            return Err(HomogeneousError::InvalidPair {
                reason: format!(
                    "unipotent dimension {} of H exceeds {} of G",
                    h.u_total(),
                    g.u_total()
                ),
            });
        }
        if h.dim() > g.dim() {
            return Err(HomogeneousError::InvalidPair {
                reason: format!("dim {} of H exceeds dim {} of G", h.dim(), g.dim()),
            });
        }
        Ok(HomogeneousPair { g, h })
    }

    /// Convenience for pairs of connected groups.
    pub fn connected(g: GroupSpec, h: GroupSpec) -> Result<Self, HomogeneousError> {
        HomogeneousPair::new(g, SubgroupSpec::Connected(h))
    }

    pub fn group(&self) -> &GroupSpec {
        &self.g
    }

    pub fn subgroup(&self) -> &SubgroupSpec {
        &self.h
    }

    pub fn dim_quotient(&self) -> usize {
        self.g.dim() - self.h.dim()
    }

    fn rank_drop(&self) -> usize {
        self.g.rank() - self.h.rank()
    }

    fn u_drop(&self) -> usize {
        self.g.u_total() - self.h.u_total()
    }

    /// `z^{u_G - u_H} (z - 1)^{r_G - r_H}`, the forced factor of the
    /// half-Poincaré polynomial.
    fn forced_factor(&self) -> IntPoly {
        let zu = IntPoly::var_pow(self.u_drop());
        let zm1 = IntPoly::from_i64s(&[-1, 1]).pow(self.rank_drop());
        &zu * &zm1
    }

    /// Half-Poincaré polynomial via Hilbert series:
    /// `z^{dim G/H} · F_H(1/z) / F_G(1/z)`.
    fn half_poincare_from_series(&self) -> Result<IntPoly, HomogeneousError> {
        let fg = self.g.reductive.f_series().subst_inverse();
        let fh = self.h.hilbert_series().subst_inverse();
        let ratio = fh.div(&fg)?;
        let p = &RatFunc::from_poly(IntPoly::var_pow(self.dim_quotient())) * &ratio;
        p.as_poly().ok_or_else(|| HomogeneousError::NotPolynomial {
            context: format!("Hilbert-series route for {self} left denominator {}", p.den()),
        })
    }

    /// The factor `Q_{G/H}`: monic, with non-negative integer coefficients
    /// for a genuine embedding. Depends only on the reductive parts.
    pub fn q_poly(&self) -> Result<IntPoly, HomogeneousError> {
        let q = match &self.h {
            SubgroupSpec::Connected(h) => self
                .g
                .reductive
                .flag_poly()
                .div_exact(&h.reductive.flag_poly())?,
            SubgroupSpec::Disconnected(_) => {
                let p = self.half_poincare_from_series()?;
                p.div_exact(&self.forced_factor())?
            }
        };
        if !q.has_nonnegative_coeffs() {
            return Err(HomogeneousError::NonNegativityViolated {
                context: format!("Q factor {q} for {self}"),
            });
        }
        Ok(q)
    }

    /// The half-Poincaré polynomial `p(z) = P_{G/H}(√z)`.
    ///
    /// For connected `H` this is `z^{u_G-u_H} (z-1)^{r_G-r_H} Q(z)` from the
    /// flag-polynomial quotient, cross-checked against the independent
    /// Hilbert-series route; the two must agree exactly.
    pub fn half_poincare(&self) -> Result<IntPoly, HomogeneousError> {
        match &self.h {
            SubgroupSpec::Connected(_) => {
                let q = self.q_poly()?;
                let p = &self.forced_factor() * &q;
                let p2 = self.half_poincare_from_series()?;
                if p != p2 {
                    return Err(HomogeneousError::InternalInconsistency {
                        context: format!("{self}: flag route {p} vs series route {p2}"),
                    });
                }
                Ok(p)
            }
            SubgroupSpec::Disconnected(_) => self.half_poincare_from_series(),
        }
    }

    /// Number of rational points over a field with `q` elements,
    /// `p(q)` for the half-Poincaré polynomial `p`.
    pub fn point_count(&self, q: u64) -> Result<BigInt, HomogeneousError> {
        if !is_prime_power(q) {
            return Err(HomogeneousError::NotPrimePower { q });
        }
        Ok(self.half_poincare()?.eval_int(&BigInt::from(q)))
    }

    /// Usual Poincaré polynomial (in `z = t²`) of the quotient of `G/H` by a
    /// maximal torus acting with finite isotropy:
    /// `F_H(z) / ((1-z)^{r_G-r_H} F_G(z))`. Requires both groups reductive.
    pub fn z_poincare(&self) -> Result<IntPoly, HomogeneousError> {
        if !self.g.is_reductive() || !self.h.is_reductive() {
            return Err(HomogeneousError::InvalidPair {
                reason: "torus-quotient Poincaré polynomial requires reductive G and H".into(),
            });
        }
        let denom_extra = IntPoly::from_i64s(&[1, -1]).pow(self.rank_drop());
        let f = self
            .h
            .hilbert_series()
            .div(&self.g.reductive.f_series())?
            .div(&RatFunc::from_poly(denom_extra))?;
        let p = f.as_poly().ok_or_else(|| HomogeneousError::NotPolynomial {
            context: format!("torus-quotient series for {self} is not polynomial"),
        })?;
        if !p.has_nonnegative_coeffs() {
            return Err(HomogeneousError::NonNegativityViolated {
                context: format!("torus-quotient Poincaré polynomial {p} for {self}"),
            });
        }
        Ok(p)
    }

    /// Monomials `c · s^k t^k` of `E_{G/H}(s, t) = p(st)`, low powers first.
    pub fn e_monomials(&self) -> Result<Vec<(usize, BigInt)>, HomogeneousError> {
        let p = self.half_poincare()?;
        Ok(p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.clone()))
            .collect())
    }

    /// Runs the full battery of structural checks on this pair.
    pub fn verify(&self) -> VerificationReport {
        let mut items = Vec::new();
        let q = match self.q_poly() {
            Ok(q) => q,
            Err(e) => {
                items.push(CheckItem::fail(
                    "Q factor exists",
                    format!("computation failed: {e}"),
                ));
                return VerificationReport {
                    pair: self.to_string(),
                    items,
                };
            }
        };

        items.push(if q.has_nonnegative_coeffs() {
            CheckItem::pass("Q has non-negative integer coefficients", format!("Q = {q}"))
        } else {
            CheckItem::fail("Q has non-negative integer coefficients", format!("Q = {q}"))
        });

        let q_at_one = q.sum_of_coeffs();
        let wg = self.g.weyl_order();
        let wh = self.h.weyl_order();
        let ratio_ok = (&q_at_one * &wh) == wg;
        items.push(CheckItem::status(
            ratio_ok,
            "Q(1) equals the Weyl order ratio",
            format!("Q(1) = {q_at_one}, |W_G|/|W_H| = {wg}/{wh}"),
        ));

        let expected_deg = self.g.u_red() as i64 - self.h.u_red() as i64;
        let deg_ok = q.degree().map(|d| d as i64) == Some(expected_deg)
            && q.leading_coeff().map(|c| c.is_one()).unwrap_or(false);
        items.push(CheckItem::status(
            deg_ok,
            "deg Q is the flag-dimension difference, with leading coefficient 1",
            format!(
                "deg Q = {}, expected {expected_deg}",
                q.degree().map_or("none".into(), |d| d.to_string())
            ),
        ));

        if self.h.is_connected() {
            let const_ok = q.coeff(0).is_one();
            let palin_ok = q
                .degree()
                .map(|d| q.is_palindromic(d))
                .unwrap_or(false);
            items.push(CheckItem::status(
                const_ok && palin_ok,
                "Q(0) = 1 and Q is palindromic (connected H)",
                format!("Q = {q}"),
            ));
        } else {
            items.push(CheckItem::skip(
                "Q(0) = 1 and Q is palindromic (connected H)",
                "H is disconnected".into(),
            ));
        }

        match (self.half_poincare(), self.half_poincare_from_series()) {
            (Ok(p1), Ok(p2)) => {
                let factored = &self.forced_factor() * &q;
                items.push(CheckItem::status(
                    p1 == p2 && p1 == factored,
                    "factored and Hilbert-series routes agree",
                    format!("p = {p1}"),
                ));
            }
            (r1, r2) => {
                items.push(CheckItem::fail(
                    "factored and Hilbert-series routes agree",
                    format!("routes errored: {r1:?} / {r2:?}"),
                ));
            }
        }

        if self.g.is_reductive() && self.h.is_reductive() {
            match self.z_poincare() {
                Ok(zp) => {
                    let dim_base = self.dim_quotient() - self.rank_drop();
                    let dual = zp.reversed(dim_base);
                    let expected = IntPoly::var_pow(self.u_drop());
                    let expected = &expected * &q;
                    items.push(CheckItem::status(
                        dual.as_ref() == Some(&expected),
                        "torus-quotient duality",
                        format!("base Poincaré polynomial = {zp}"),
                    ));
                }
                Err(e) => items.push(CheckItem::fail(
                    "torus-quotient duality",
                    format!("computation failed: {e}"),
                )),
            }
        } else {
            items.push(CheckItem::skip(
                "torus-quotient duality",
                "pair is not reductive".into(),
            ));
        }

        VerificationReport {
            pair: self.to_string(),
            items,
        }
    }
}

impl fmt::Display for HomogeneousPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G = {}, H = {}", self.g, self.h)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone)]
pub struct CheckItem {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckItem {
    fn pass(name: &'static str, detail: String) -> Self {
        CheckItem {
            name,
            status: CheckStatus::Pass,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckItem {
            name,
            status: CheckStatus::Fail,
            detail,
        }
    }

    fn skip(name: &'static str, detail: String) -> Self {
        CheckItem {
            name,
            status: CheckStatus::Skipped,
            detail,
        }
    }

    fn status(ok: bool, name: &'static str, detail: String) -> Self {
        if ok {
            CheckItem::pass(name, detail)
        } else {
            CheckItem::fail(name, detail)
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub pair: String,
    pub items: Vec<CheckItem>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.items
            .iter()
            .all(|i| i.status != CheckStatus::Fail)
    }
}

/// Multiplicativity along a chain `K ⊆ H ⊆ G` of connected groups:
/// `Q_{G/K} = Q_{G/H} · Q_{H/K}`.
pub fn chain_check(
    g: &GroupSpec,
    h: &GroupSpec,
    k: &GroupSpec,
) -> Result<bool, HomogeneousError> {
    let gk = HomogeneousPair::connected(g.clone(), k.clone())?.q_poly()?;
    let gh = HomogeneousPair::connected(g.clone(), h.clone())?.q_poly()?;
    let hk = HomogeneousPair::connected(h.clone(), k.clone())?.q_poly()?;
    Ok(gk == &gh * &hk)
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut q = q;
    let p = (2..).find(|p| q.is_multiple_of(*p)).expect("q >= 2 has a prime factor");
    while q.is_multiple_of(p) {
        q /= p;
    }
    q == 1
}

/// Ready-made pairs and subgroup data used across the test suites.
pub mod fixtures {
    use super::*;
    use crate::weylcore::{Family, QMatrix, SimpleType};
    use crate::ExecMode;

    pub fn simple(family: Family, rank: usize) -> ReductiveType {
        ReductiveType::simple(SimpleType::new(family, rank).expect("valid simple type"))
    }

    pub fn reductive(t: ReductiveType) -> GroupSpec {
        GroupSpec::reductive(t)
    }

    /// The subgroup of a product of two rank-1 groups generated by the
    /// common maximal torus and the simultaneous Weyl flip: its Weyl-like
    /// group is `{±I₂}` acting on the rank-2 Cartan algebra.
    pub fn torus_normalizer_flip() -> SubgroupSpec {
        let minus = QMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]]);
        let w = WeylMatrixGroup::from_generators(2, vec![minus], 16, ExecMode::default())
            .expect("finite group");
        SubgroupSpec::disconnected(w, 0, 0).expect("consistent data")
    }

    /// The disconnected pair from the rank-2 product group: the quotient is
    /// spherical with half-Poincaré polynomial `z⁴ + z²`.
    pub fn flip_pair() -> HomogeneousPair {
        let g = reductive(simple(Family::A, 1).product(&simple(Family::A, 1)));
        HomogeneousPair::new(g, torus_normalizer_flip()).expect("valid pair")
    }

    /// Classical embeddings that are guaranteed to exist, with names; used
    /// as the quantification domain of the property suites.
    pub fn standard_pairs() -> Vec<(&'static str, HomogeneousPair)> {
        let a = |n| simple(Family::A, n);
        let b = |n| simple(Family::B, n);
        let d = |n| simple(Family::D, n);
        let t = ReductiveType::torus;
        let pair = |name, g: ReductiveType, h: ReductiveType| {
            (
                name,
                HomogeneousPair::connected(reductive(g), reductive(h)).expect("valid pair"),
            )
        };
        let mut out = vec![
            pair("so5 ⊃ so4", b(2), d(2)),
            pair("so7 ⊃ so6", b(3), d(3)),
            pair("so4 ⊃ so3", d(2), b(1)),
            pair("so6 ⊃ so5", d(3), b(2)),
            pair("so8 ⊃ so7", d(4), b(3)),
            pair("sl2 ⊃ torus", a(1), t(1)),
            pair("sl3 ⊃ gl2", a(2), a(1).product(&t(1))),
            pair("sl4 ⊃ gl3", a(3), a(2).product(&t(1))),
            pair("sl3 ⊃ torus", a(2), t(2)),
            pair("sp4 ⊃ torus", simple(Family::C, 2), t(2)),
            pair("g2 ⊃ torus", simple(Family::G, 2), t(2)),
            pair("sl2 x sl2 ⊃ diagonal", a(1).product(&a(1)), a(1)),
            pair("sl3 x sl3 ⊃ diagonal", a(2).product(&a(2)), a(2)),
            pair("sl3 ⊃ so3", a(2), b(1)),
            pair("sl3 ⊃ sl3", a(2), a(2)),
        ];
        // Borel-type subgroups enter through the extra unipotent dimension.
        out.push((
            "sl2 ⊃ borel",
            HomogeneousPair::connected(
                reductive(a(1)),
                GroupSpec::with_unipotent(t(1), 1),
            )
            .expect("valid pair"),
        ));
        out.push((
            "sl3 ⊃ borel",
            HomogeneousPair::connected(
                reductive(a(2)),
                GroupSpec::with_unipotent(t(2), 3),
            )
            .expect("valid pair"),
        ));
        out.push((
            "so5 ⊃ parabolic",
            HomogeneousPair::connected(
                reductive(b(2)),
                GroupSpec::with_unipotent(b(1).product(&t(1)), 3),
            )
            .expect("valid pair"),
        ));
        out.push(("product flip (disconnected)", flip_pair()));
        out
    }
}
