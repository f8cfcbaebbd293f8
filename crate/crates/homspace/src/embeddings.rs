//! Regular embeddings presented as finite orbit lists.
//!
//! An orbit poset is data, not derived geometry: each orbit carries either an
//! asserted homogeneous pair or directly-recorded polynomial data, and the
//! completeness flag is a user assertion that gates the non-negativity check
//! of the quotient polynomial. Totals are plain sums by additivity.

use crate::exactalg::{ExactAlgError, IntPoly};
use crate::groupspec::{parse_group_spec, SpecParseError};
use crate::homogeneous::{
    fixtures as hfix, GroupSpec, HomogeneousError, HomogeneousPair, SubgroupSpec,
};
use crate::weylcore::{Family, ReductiveType};
use num::bigint::BigInt;
use num::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error(transparent)]
    Homogeneous(#[from] HomogeneousError),
    #[error(transparent)]
    Exact(#[from] ExactAlgError),
    #[error("quotient polynomial has a negative coefficient on a complete embedding: {quotient}")]
    NegativeCoefficient { quotient: String },
    #[error("invalid orbit poset: {reason}")]
    InvalidPoset { reason: String },
    #[error("orbit `{label}` has no computable or recorded Q polynomial")]
    QUnavailable { label: String },
    #[error("orbit file, line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Spec(#[from] SpecParseError),
}

impl EmbedError {
    pub fn code(&self) -> &'static str {
        match self {
            EmbedError::Homogeneous(e) => e.code(),
            EmbedError::Exact(e) => e.code(),
            EmbedError::NegativeCoefficient { .. } => "NegativeCoefficient",
            EmbedError::InvalidPoset { .. } => "InvalidPoset",
            EmbedError::QUnavailable { .. } => "QUnavailable",
            EmbedError::Parse { .. } => "ParseError",
            EmbedError::Spec(e) => e.code(),
        }
    }
}

/// Per-orbit data: an asserted pair, or the orbit's half-Poincaré polynomial
/// entered directly (with an optional Q polynomial when known).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitPayload {
    Pair(HomogeneousPair),
    Direct { poly: IntPoly, q: Option<IntPoly> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDatum {
    pub label: String,
    pub payload: OrbitPayload,
}

impl OrbitDatum {
    pub fn pair(label: impl Into<String>, pair: HomogeneousPair) -> Self {
        OrbitDatum {
            label: label.into(),
            payload: OrbitPayload::Pair(pair),
        }
    }

    pub fn direct(label: impl Into<String>, poly: IntPoly, q: Option<IntPoly>) -> Self {
        OrbitDatum {
            label: label.into(),
            payload: OrbitPayload::Direct { poly, q },
        }
    }
}

/// A regular embedding as its orbit list.
#[derive(Debug, Clone)]
pub struct OrbitPoset {
    orbits: Vec<OrbitDatum>,
    half_polys: Vec<IntPoly>,
    open_index: usize,
    complete: bool,
}

impl OrbitPoset {
    pub fn new(
        orbits: Vec<OrbitDatum>,
        open_label: &str,
        complete: bool,
    ) -> Result<Self, EmbedError> {
        if orbits.is_empty() {
            return Err(EmbedError::InvalidPoset {
                reason: "orbit list is empty".into(),
            });
        }
        for (i, a) in orbits.iter().enumerate() {
            if orbits[i + 1..].iter().any(|b| b.label == a.label) {
                return Err(EmbedError::InvalidPoset {
                    reason: format!("duplicate orbit label `{}`", a.label),
                });
            }
        }
        let open_index = orbits
            .iter()
            .position(|o| o.label == open_label)
            .ok_or_else(|| EmbedError::InvalidPoset {
                reason: format!("open orbit `{open_label}` is not in the list"),
            })?;
        let mut half_polys = Vec::with_capacity(orbits.len());
        for o in &orbits {
            let p = match &o.payload {
                OrbitPayload::Pair(pair) => pair.half_poincare()?,
                OrbitPayload::Direct { poly, .. } => {
                    if poly
                        .leading_coeff()
                        .map(|c| c < &BigInt::zero())
                        .unwrap_or(false)
                    {
                        return Err(EmbedError::InvalidPoset {
                            reason: format!(
                                "orbit `{}` has a negative leading coefficient",
                                o.label
                            ),
                        });
                    }
                    poly.clone()
                }
            };
            half_polys.push(p);
        }
        let open_deg = half_polys[open_index].degree();
        for (i, p) in half_polys.iter().enumerate() {
            if i != open_index && p.degree() >= open_deg {
                return Err(EmbedError::InvalidPoset {
                    reason: format!(
                        "orbit `{}` has dimension >= the open orbit",
                        orbits[i].label
                    ),
                });
            }
        }
        Ok(OrbitPoset {
            orbits,
            half_polys,
            open_index,
            complete,
        })
    }

    pub fn orbits(&self) -> &[OrbitDatum] {
        &self.orbits
    }

    pub fn open_orbit(&self) -> &OrbitDatum {
        &self.orbits[self.open_index]
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn orbit_half_poincare(&self, label: &str) -> Option<&IntPoly> {
        self.orbits
            .iter()
            .position(|o| o.label == label)
            .map(|i| &self.half_polys[i])
    }

    /// Sum of the orbit half-Poincaré polynomials (additivity).
    pub fn total_half_poincare(&self) -> IntPoly {
        self.half_polys
            .iter()
            .fold(IntPoly::zero(), |acc, p| &acc + p)
    }

    fn q_of(&self, index: usize) -> Result<IntPoly, EmbedError> {
        match &self.orbits[index].payload {
            OrbitPayload::Pair(pair) => Ok(pair.q_poly()?),
            OrbitPayload::Direct { q: Some(q), .. } => Ok(q.clone()),
            OrbitPayload::Direct { q: None, .. } => Err(EmbedError::QUnavailable {
                label: self.orbits[index].label.clone(),
            }),
        }
    }

    /// Q polynomial of the open orbit.
    pub fn open_q(&self) -> Result<IntPoly, EmbedError> {
        self.q_of(self.open_index)
    }

    /// The quotient `R(z) = total(z) / Q_open(z)`. A `NotDivisible` signal is
    /// meaningful (the factorization can genuinely fail when the open
    /// isotropy group is disconnected); on a complete embedding a negative
    /// coefficient in `R` is an error.
    pub fn r_poly(&self) -> Result<IntPoly, EmbedError> {
        let total = self.total_half_poincare();
        let q = self.open_q()?;
        let r = total.div_exact(&q)?;
        if self.complete && !r.has_nonnegative_coeffs() {
            return Err(EmbedError::NegativeCoefficient {
                quotient: r.to_string(),
            });
        }
        Ok(r)
    }

    /// Per-orbit check that the open orbit's Q divides the orbit's Q with a
    /// non-negative quotient.
    pub fn orbit_divisibility(&self) -> DivisibilityReport {
        let q_open = match self.open_q() {
            Ok(q) => q,
            Err(e) => {
                return DivisibilityReport {
                    open_label: self.open_orbit().label.clone(),
                    entries: vec![DivisibilityEntry {
                        label: self.open_orbit().label.clone(),
                        outcome: DivisibilityOutcome::Unavailable(e.to_string()),
                    }],
                }
            }
        };
        let mut entries = Vec::new();
        for (i, o) in self.orbits.iter().enumerate() {
            let outcome = match self.q_of(i) {
                Err(e) => DivisibilityOutcome::Unavailable(e.to_string()),
                Ok(q) => match q.div_exact(&q_open) {
                    Err(_) => DivisibilityOutcome::NotDivisible { orbit_q: q },
                    Ok(quot) if !quot.has_nonnegative_coeffs() => {
                        DivisibilityOutcome::NegativeQuotient { quotient: quot }
                    }
                    Ok(quot) => DivisibilityOutcome::Divides { quotient: quot },
                },
            };
            entries.push(DivisibilityEntry {
                label: o.label.clone(),
                outcome,
            });
        }
        DivisibilityReport {
            open_label: self.open_orbit().label.clone(),
            entries,
        }
    }

    /// For an embedding of the group `G` itself (open orbit
    /// `(G x G)/diag G`): does the flag polynomial of `G` divide the total?
    pub fn group_completion_check(&self, group: &ReductiveType) -> CompletionCheck {
        let flag = group.flag_poly();
        let total = self.total_half_poincare();
        match total.div_exact(&flag) {
            Ok(quotient) => CompletionCheck {
                divides: true,
                quotient: Some(quotient),
            },
            Err(_) => CompletionCheck {
                divides: false,
                quotient: None,
            },
        }
    }

    /// Serializes to the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("complete {}\n", self.complete));
        out.push_str(&format!("open {}\n", self.open_orbit().label));
        for (i, o) in self.orbits.iter().enumerate() {
            match &o.payload {
                OrbitPayload::Pair(pair) => {
                    if let SubgroupSpec::Connected(h) = pair.subgroup() {
                        out.push_str(&format!(
                            "orbit {} pair {} {}\n",
                            o.label,
                            pair.group(),
                            h
                        ));
                        continue;
                    }
                    // disconnected isotropy data has no grammar form; fall
                    // back to the recorded polynomial
                    let q = pair.q_poly().ok();
                    out.push_str(&orbit_poly_line(&o.label, &self.half_polys[i], q.as_ref()));
                }
                OrbitPayload::Direct { poly, q } => {
                    out.push_str(&orbit_poly_line(&o.label, poly, q.as_ref()));
                }
            }
        }
        out
    }

    /// Parses the line-oriented text format:
    ///
    /// ```text
    /// complete true|false
    /// open <label>
    /// orbit <label> pair <G-spec> <H-spec>
    /// orbit <label> poly <coeffs low-first> [q <coeffs>]
    /// ```
    pub fn parse(text: &str) -> Result<Self, EmbedError> {
        let mut complete: Option<bool> = None;
        let mut open: Option<String> = None;
        let mut orbits: Vec<OrbitDatum> = Vec::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line_no = line_no + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let head = tokens.next().expect("nonempty line");
            let perr = |message: String| EmbedError::Parse {
                line: line_no,
                message,
            };
            match head {
                "complete" => match tokens.next() {
                    Some("true") => complete = Some(true),
                    Some("false") => complete = Some(false),
                    other => return Err(perr(format!("expected true|false, found {other:?}"))),
                },
                "open" => {
                    open = Some(
                        tokens
                            .next()
                            .ok_or_else(|| perr("missing open orbit label".into()))?
                            .to_string(),
                    );
                }
                "orbit" => {
                    let label = tokens
                        .next()
                        .ok_or_else(|| perr("missing orbit label".into()))?
                        .to_string();
                    match tokens.next() {
                        Some("pair") => {
                            let g = tokens
                                .next()
                                .ok_or_else(|| perr("missing group spec".into()))?;
                            let h = tokens
                                .next()
                                .ok_or_else(|| perr("missing subgroup spec".into()))?;
                            let pair = HomogeneousPair::connected(
                                parse_group_spec(g)?,
                                parse_group_spec(h)?,
                            )?;
                            orbits.push(OrbitDatum::pair(label, pair));
                        }
                        Some("poly") => {
                            let rest: Vec<&str> = tokens.collect();
                            let split = rest.iter().position(|&t| t == "q");
                            let (pc, qc) = match split {
                                Some(i) => (&rest[..i], Some(&rest[i + 1..])),
                                None => (&rest[..], None),
                            };
                            let parse_coeffs = |cs: &[&str]| -> Result<IntPoly, EmbedError> {
                                let mut out = Vec::with_capacity(cs.len());
                                for c in cs {
                                    out.push(c.parse::<BigInt>().map_err(|_| {
                                        perr(format!("invalid coefficient `{c}`"))
                                    })?);
                                }
                                Ok(IntPoly::new(out))
                            };
                            let poly = parse_coeffs(pc)?;
                            let q = match qc {
                                Some(qc) => Some(parse_coeffs(qc)?),
                                None => None,
                            };
                            orbits.push(OrbitDatum::direct(label, poly, q));
                        }
                        other => {
                            return Err(perr(format!(
                                "expected `pair` or `poly`, found {other:?}"
                            )))
                        }
                    }
                }
                other => return Err(perr(format!("unknown directive `{other}`"))),
            }
        }
        let complete = complete.ok_or(EmbedError::Parse {
            line: 1,
            message: "missing `complete` header".into(),
        })?;
        let open = open.ok_or(EmbedError::Parse {
            line: 1,
            message: "missing `open` header".into(),
        })?;
        OrbitPoset::new(orbits, &open, complete)
    }
}

fn orbit_poly_line(label: &str, poly: &IntPoly, q: Option<&IntPoly>) -> String {
    let coeffs = |p: &IntPoly| {
        p.coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    match q {
        Some(q) => format!("orbit {} poly {} q {}\n", label, coeffs(poly), coeffs(q)),
        None => format!("orbit {} poly {}\n", label, coeffs(poly)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivisibilityOutcome {
    Divides { quotient: IntPoly },
    NegativeQuotient { quotient: IntPoly },
    NotDivisible { orbit_q: IntPoly },
    Unavailable(String),
}

#[derive(Debug, Clone)]
pub struct DivisibilityEntry {
    pub label: String,
    pub outcome: DivisibilityOutcome,
}

impl DivisibilityEntry {
    pub fn passed(&self) -> bool {
        matches!(self.outcome, DivisibilityOutcome::Divides { .. })
    }
}

#[derive(Debug, Clone)]
pub struct DivisibilityReport {
    pub open_label: String,
    pub entries: Vec<DivisibilityEntry>,
}

impl DivisibilityReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed())
    }
}

#[derive(Debug, Clone)]
pub struct CompletionCheck {
    pub divides: bool,
    pub quotient: Option<IntPoly>,
}

impl fmt::Display for CompletionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.divides, &self.quotient) {
            (true, Some(q)) => write!(f, "divides, quotient {q}"),
            _ => write!(f, "does not divide"),
        }
    }
}

/// Built-in catalog of worked examples.
pub mod fixtures {
    use super::*;

    fn simple(family: Family, rank: usize) -> ReductiveType {
        hfix::simple(family, rank)
    }

    fn connected_pair(g: GroupSpec, h: GroupSpec) -> HomogeneousPair {
        HomogeneousPair::connected(g, h).expect("fixture pair is valid")
    }

    /// Odd projective space of dimension `2m + 1` under the even orthogonal
    /// group: an open orbit with odd orthogonal isotropy, plus the even
    /// quadric of dimension `2m`.
    pub fn projective_odd(m: usize) -> OrbitPoset {
        assert!(m >= 1);
        let g = GroupSpec::reductive(simple(Family::D, m + 1));
        let open = connected_pair(g.clone(), GroupSpec::reductive(simple(Family::B, m)));
        // quadric = G/P with Levi of type D_m x T1 (a torus when m = 1) and
        // a 2m-dimensional unipotent radical
        let levi = if m == 1 {
            ReductiveType::torus(2)
        } else {
            simple(Family::D, m).product(&ReductiveType::torus(1))
        };
        let quadric = connected_pair(g, GroupSpec::with_unipotent(levi, 2 * m));
        OrbitPoset::new(
            vec![
                OrbitDatum::pair("open", open),
                OrbitDatum::pair("quadric", quadric),
            ],
            "open",
            true,
        )
        .expect("fixture is valid")
    }

    /// Even projective space of dimension `2m` as a completion of the
    /// quotient of the odd orthogonal group by the full even orthogonal
    /// subgroup. The open isotropy group is disconnected, so its Q
    /// polynomial is recorded rather than derived: the recorded value `1` is
    /// the fully depolarized form (the rank-difference factorization itself
    /// would put the forced power `z^m` inside Q).
    pub fn projective_even(m: usize) -> OrbitPoset {
        assert!(m >= 1);
        let g = GroupSpec::reductive(simple(Family::B, m));
        let open = OrbitDatum::direct(
            "open",
            IntPoly::var_pow(2 * m),
            Some(IntPoly::one()),
        );
        // quadric of dimension 2m - 1 = G/P with Levi B_{m-1} x T1
        let levi = if m == 1 {
            ReductiveType::torus(1)
        } else {
            simple(Family::B, m - 1).product(&ReductiveType::torus(1))
        };
        let quadric = connected_pair(g, GroupSpec::with_unipotent(levi, 2 * m - 1));
        OrbitPoset::new(
            vec![open, OrbitDatum::pair("quadric", quadric)],
            "open",
            true,
        )
        .expect("fixture is valid")
    }

    /// The canonical completion of the adjoint rank-1 group: projective
    /// 3-space with the open `(G x G)/diag G` orbit and a closed product of
    /// two projective lines.
    pub fn pgl2_wonderful() -> OrbitPoset {
        let a1 = simple(Family::A, 1);
        let g = GroupSpec::reductive(a1.product(&a1));
        let open = connected_pair(g.clone(), GroupSpec::reductive(a1));
        let closed = connected_pair(g, GroupSpec::with_unipotent(ReductiveType::torus(2), 2));
        OrbitPoset::new(
            vec![
                OrbitDatum::pair("open", open),
                OrbitDatum::pair("closed", closed),
            ],
            "open",
            true,
        )
        .expect("fixture is valid")
    }

    /// Complete regular embedding whose total is NOT divisible by the open
    /// orbit's Q: the open isotropy group is disconnected (torus extended by
    /// a simultaneous Weyl flip), and the boundary Q values `1 + z` and
    /// `(1 + z)²` are all prime to `Q_open = 1 + z²`.
    pub fn sl2xsl2_counterexample() -> OrbitPoset {
        let open = OrbitDatum::pair("open", hfix::flip_pair());
        let pl = IntPoly::from_i64s(&[1, 1]);
        let pl2 = &pl * &pl;
        // two boundary divisors: product of a line with the plane minus a
        // conic; sections and the open part of the exceptional divisor over
        // the product of diagonals
        let divisor = IntPoly::from_i64s(&[0, 0, 1, 1]);
        let exceptional = IntPoly::from_i64s(&[-1, -1, 1, 1]);
        OrbitPoset::new(
            vec![
                open,
                OrbitDatum::direct("divisor_a", divisor.clone(), Some(pl.clone())),
                OrbitDatum::direct("divisor_b", divisor, Some(pl)),
                OrbitDatum::direct("section_a", pl2.clone(), Some(pl2.clone())),
                OrbitDatum::direct("section_b", pl2.clone(), Some(pl2.clone())),
                OrbitDatum::direct("exceptional", exceptional, Some(pl2)),
            ],
            "open",
            true,
        )
        .expect("fixture is valid")
    }

    pub fn names() -> Vec<&'static str> {
        vec![
            "projective_odd_1",
            "projective_odd_2",
            "projective_odd_3",
            "projective_even_1",
            "projective_even_2",
            "projective_even_3",
            "pgl2_wonderful",
            "sl2xsl2_counterexample",
        ]
    }

    pub fn by_name(name: &str) -> Option<OrbitPoset> {
        match name {
            "projective_odd_1" => Some(projective_odd(1)),
            "projective_odd_2" => Some(projective_odd(2)),
            "projective_odd_3" => Some(projective_odd(3)),
            "projective_even_1" => Some(projective_even(1)),
            "projective_even_2" => Some(projective_even(2)),
            "projective_even_3" => Some(projective_even(3)),
            "pgl2_wonderful" => Some(pgl2_wonderful()),
            "sl2xsl2_counterexample" => Some(sl2xsl2_counterexample()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use num::One;

    fn ladder(top: usize) -> IntPoly {
        IntPoly::new(vec![BigInt::one(); top + 1])
    }

    #[test]
    fn projective_odd_totals() {
        for m in 1..=3 {
            let x = projective_odd(m);
            assert_eq!(x.total_half_poincare(), ladder(2 * m + 1), "m = {m}");
            assert_eq!(x.open_q().unwrap(), ladder(m));
            // open orbit is z^m (z^{m+1} - 1)
            let open = x.orbit_half_poincare("open").unwrap();
            let expect = &IntPoly::var_pow(m)
                * &(&IntPoly::var_pow(m + 1) - &IntPoly::one());
            assert_eq!(open, &expect);
            // even quadric carries the extra middle class
            let quadric = x.orbit_half_poincare("quadric").unwrap();
            assert_eq!(quadric, &(&ladder(2 * m) + &IntPoly::var_pow(m)));
        }
    }

    #[test]
    fn projective_odd_r_poly() {
        for m in 1..=3 {
            let x = projective_odd(m);
            let r = x.r_poly().unwrap();
            let expect = &IntPoly::var_pow(m + 1) + &IntPoly::one();
            assert_eq!(r, expect, "m = {m}");
        }
    }

    #[test]
    fn projective_even_r_is_total() {
        for m in 1..=3 {
            let x = projective_even(m);
            assert_eq!(x.open_q().unwrap(), IntPoly::one());
            assert_eq!(x.total_half_poincare(), ladder(2 * m));
            assert_eq!(x.r_poly().unwrap(), ladder(2 * m));
        }
    }

    #[test]
    fn single_orbit_poset_is_its_own_total() {
        let x = OrbitPoset::new(
            vec![OrbitDatum::direct(
                "only",
                IntPoly::from_i64s(&[1, 2, 1]),
                Some(IntPoly::one()),
            )],
            "only",
            true,
        )
        .unwrap();
        assert_eq!(x.total_half_poincare(), IntPoly::from_i64s(&[1, 2, 1]));
        assert!(x.orbit_divisibility().all_passed());
    }

    #[test]
    fn counterexample_is_not_divisible() {
        let x = sl2xsl2_counterexample();
        assert_eq!(x.total_half_poincare(), IntPoly::from_i64s(&[1, 3, 6, 3, 1]));
        assert_eq!(x.open_q().unwrap(), IntPoly::from_i64s(&[1, 0, 1]));
        assert!(matches!(
            x.r_poly(),
            Err(EmbedError::Exact(ExactAlgError::NotDivisible))
        ));
        // gcd(Q, total) = 1
        let gcd = x.open_q().unwrap().gcd(&x.total_half_poincare());
        assert_eq!(gcd, IntPoly::one());
        // no boundary orbit passes divisibility
        let report = x.orbit_divisibility();
        assert!(!report.all_passed());
        let fails = report.entries.iter().filter(|e| !e.passed()).count();
        assert_eq!(fails, 5);
    }

    #[test]
    fn orbit_divisibility_on_projective_odd() {
        let x = projective_odd(1);
        let report = x.orbit_divisibility();
        assert!(report.all_passed(), "{report:?}");
        let quad = report
            .entries
            .iter()
            .find(|e| e.label == "quadric")
            .unwrap();
        match &quad.outcome {
            DivisibilityOutcome::Divides { quotient } => {
                assert_eq!(quotient, &IntPoly::from_i64s(&[1, 1]));
            }
            other => panic!("expected divisibility, got {other:?}"),
        }
    }

    #[test]
    fn group_completion_examples() {
        let x = pgl2_wonderful();
        assert_eq!(x.total_half_poincare(), ladder(3));
        let check = x.group_completion_check(&hfix::simple(Family::A, 1));
        assert!(check.divides);
        assert_eq!(check.quotient.unwrap(), IntPoly::from_i64s(&[1, 0, 1]));

        // rank-1 torus completed by a projective line: two fixed points plus
        // the open torus orbit; the trivial flag polynomial divides
        let x = OrbitPoset::new(
            vec![
                OrbitDatum::direct("open", IntPoly::from_i64s(&[-1, 1]), Some(IntPoly::one())),
                OrbitDatum::direct("zero", IntPoly::one(), Some(IntPoly::one())),
                OrbitDatum::direct("infinity", IntPoly::one(), Some(IntPoly::one())),
            ],
            "open",
            true,
        )
        .unwrap();
        assert_eq!(x.total_half_poincare(), ladder(1));
        assert!(x
            .group_completion_check(&ReductiveType::torus(1))
            .divides);

        // point as the completion of the trivial group
        let point = OrbitPoset::new(
            vec![OrbitDatum::direct("point", IntPoly::one(), Some(IntPoly::one()))],
            "point",
            true,
        )
        .unwrap();
        assert!(point
            .group_completion_check(&ReductiveType::torus(0))
            .divides);

        // non-divisible case
        let bad = OrbitPoset::new(
            vec![OrbitDatum::direct("open", IntPoly::from_i64s(&[1, 0, 1]), None)],
            "open",
            false,
        )
        .unwrap();
        assert!(!bad.group_completion_check(&hfix::simple(Family::A, 1)).divides);
    }

    #[test]
    fn negative_quotient_is_gated_by_completeness() {
        // total = (1 + z)(1 - z + z^2) = 1 + z^3
        let orbits = vec![
            OrbitDatum::direct(
                "open",
                IntPoly::from_i64s(&[0, -1, 0, 1]),
                Some(IntPoly::from_i64s(&[1, 1])),
            ),
            OrbitDatum::direct("closed", IntPoly::from_i64s(&[1, 1]), None),
        ];
        let complete = OrbitPoset::new(orbits.clone(), "open", true).unwrap();
        assert!(matches!(
            complete.r_poly(),
            Err(EmbedError::NegativeCoefficient { .. })
        ));
        let affine = OrbitPoset::new(orbits, "open", false).unwrap();
        assert_eq!(affine.r_poly().unwrap(), IntPoly::from_i64s(&[1, -1, 1]));
    }

    #[test]
    fn totals_are_permutation_invariant() {
        let x = sl2xsl2_counterexample();
        let mut orbits = x.orbits().to_vec();
        orbits.reverse();
        let y = OrbitPoset::new(orbits, "open", true).unwrap();
        assert_eq!(x.total_half_poincare(), y.total_half_poincare());
    }

    #[test]
    fn mixed_payload_consistency() {
        // the closed orbit of the 3-space fixture entered directly or as a
        // pair with Borel-type isotropy gives the same total
        let m = 1;
        let x = projective_odd(m);
        let direct = OrbitPoset::new(
            vec![
                OrbitDatum::pair(
                    "open",
                    HomogeneousPair::connected(
                        GroupSpec::reductive(hfix::simple(Family::D, 2)),
                        GroupSpec::reductive(hfix::simple(Family::B, 1)),
                    )
                    .unwrap(),
                ),
                OrbitDatum::direct(
                    "quadric",
                    IntPoly::from_i64s(&[1, 2, 1]),
                    Some(IntPoly::from_i64s(&[1, 2, 1])),
                ),
            ],
            "open",
            true,
        )
        .unwrap();
        assert_eq!(x.total_half_poincare(), direct.total_half_poincare());
        assert_eq!(x.r_poly().unwrap(), direct.r_poly().unwrap());
    }

    #[test]
    fn consistency_of_r_and_q_at_one() {
        for name in ["projective_odd_2", "pgl2_wonderful", "projective_even_2"] {
            let x = by_name(name).unwrap();
            let r = x.r_poly().unwrap();
            let q = x.open_q().unwrap();
            assert_eq!(
                r.sum_of_coeffs() * q.sum_of_coeffs(),
                x.total_half_poincare().sum_of_coeffs(),
                "{name}"
            );
        }
    }

    #[test]
    fn poset_validation() {
        let dup = OrbitPoset::new(
            vec![
                OrbitDatum::direct("a", IntPoly::one(), None),
                OrbitDatum::direct("a", IntPoly::from_i64s(&[1, 1]), None),
            ],
            "a",
            false,
        );
        assert!(matches!(dup, Err(EmbedError::InvalidPoset { .. })));

        let missing_open = OrbitPoset::new(
            vec![OrbitDatum::direct("a", IntPoly::one(), None)],
            "b",
            false,
        );
        assert!(matches!(missing_open, Err(EmbedError::InvalidPoset { .. })));

        let open_not_maximal = OrbitPoset::new(
            vec![
                OrbitDatum::direct("a", IntPoly::one(), None),
                OrbitDatum::direct("b", IntPoly::from_i64s(&[1, 1]), None),
            ],
            "a",
            false,
        );
        assert!(matches!(
            open_not_maximal,
            Err(EmbedError::InvalidPoset { .. })
        ));
    }

    #[test]
    fn text_format_round_trip() {
        let text = "\
complete true
open dense
orbit dense pair D2 B1
orbit quadric poly 1 2 1 q 1 2 1
";
        let x = OrbitPoset::parse(text).unwrap();
        assert_eq!(x.total_half_poincare(), ladder(3));
        assert_eq!(x.r_poly().unwrap(), IntPoly::from_i64s(&[1, 0, 1]));
        let again = OrbitPoset::parse(&x.to_text()).unwrap();
        assert_eq!(again.total_half_poincare(), x.total_half_poincare());
        assert_eq!(again.is_complete(), x.is_complete());
        assert_eq!(again.open_orbit().label, x.open_orbit().label);
    }

    #[test]
    fn fixtures_serialize_and_reparse() {
        for name in fixtures::names() {
            let x = by_name(name).unwrap();
            let again = OrbitPoset::parse(&x.to_text()).unwrap();
            assert_eq!(
                again.total_half_poincare(),
                x.total_half_poincare(),
                "{name}"
            );
            assert_eq!(again.open_q().unwrap(), x.open_q().unwrap(), "{name}");
        }
    }

    #[test]
    fn text_format_errors() {
        assert!(matches!(
            OrbitPoset::parse("open a\norbit a poly 1"),
            Err(EmbedError::Parse { .. })
        ));
        assert!(matches!(
            OrbitPoset::parse("complete maybe\nopen a\norbit a poly 1"),
            Err(EmbedError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            OrbitPoset::parse("complete true\nopen a\norbit a blob 1"),
            Err(EmbedError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            OrbitPoset::parse("complete true\nopen a\norbit a poly 1 x 2"),
            Err(EmbedError::Parse { line: 3, .. })
        ));
        // grammar errors surface with their own code
        let err = OrbitPoset::parse("complete true\nopen a\norbit a pair F3 T1").unwrap_err();
        assert_eq!(err.code(), "InvalidRank");
    }
}
