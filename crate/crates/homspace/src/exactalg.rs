//! Dense univariate polynomials over arbitrary-precision integers, and their
//! canonical quotients.
//!
//! `IntPoly` strips trailing zeros, so the zero polynomial is the empty
//! coefficient vector. `RatFunc` keeps a unique canonical form: numerator and
//! denominator are coprime over `Q[z]`, their contents share no factor, and
//! the lowest nonzero denominator coefficient is positive. Structural
//! equality therefore coincides with mathematical equality.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactAlgError {
    #[error("division left a remainder or a non-integer quotient coefficient")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at z = 0")]
    PoleAtZero,
    #[error("a pole at z = 1 survives cancellation by (1-z)^{order}")]
    PoleRemains { order: usize },
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
}

impl ExactAlgError {
    pub fn code(&self) -> &'static str {
        match self {
            ExactAlgError::NotDivisible => "NotDivisible",
            ExactAlgError::DivisionByZero => "DivisionByZero",
            ExactAlgError::PoleAtZero => "PoleAtZero",
            ExactAlgError::PoleRemains { .. } => "PoleRemains",
            ExactAlgError::PoleAtPoint => "PoleAtPoint",
        }
    }
}

/// Dense polynomial in `z` with `BigInt` coefficients, low degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial, stripping trailing zero coefficients.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `c · z^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `z^k`.
    pub fn var_pow(k: usize) -> Self {
        IntPoly::monomial(BigInt::one(), k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `z^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient (order of vanishing at 0).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shifted(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, exp: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sum_of_coeffs(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact division: returns `q` with `q·d = self` and `q` over the
    /// integers, or `NotDivisible`.
    pub fn div_exact(&self, d: &IntPoly) -> Result<IntPoly, ExactAlgError> {
        if d.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = d.degree().expect("nonzero");
        let dl = d.leading_coeff().expect("nonzero").clone();
        let mut rem = self.clone();
        let dn = rem.degree().expect("nonzero");
        if dn < dd {
            return Err(ExactAlgError::NotDivisible);
        }
        let mut quo = vec![BigInt::zero(); dn - dd + 1];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let (q, r) = rem.leading_coeff().expect("nonzero").div_rem(&dl);
            if !r.is_zero() {
                return Err(ExactAlgError::NotDivisible);
            }
            let k = dr - dd;
            rem = &rem - &d.shifted(k).scale(&q);
            quo[k] = q;
        }
        if !rem.is_zero() {
            return Err(ExactAlgError::NotDivisible);
        }
        Ok(IntPoly::new(quo))
    }

    /// Content: non-negative gcd of all coefficients (0 for the zero poly).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content; the zero polynomial stays zero.
    pub fn primitive_part(&self) -> IntPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Primitive gcd over `Z[z]`, normalized to a positive leading
    /// coefficient. Computed by the primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b).primitive_part();
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            Some(l) if l.is_negative() => -&a,
            _ => a,
        }
    }

    /// True iff `z^d · p(1/z) = p(z)`, i.e. `deg p ≤ d` and the coefficients
    /// satisfy `c_i = c_{d-i}`.
    pub fn is_palindromic(&self, d: usize) -> bool {
        match self.degree() {
            None => true,
            Some(deg) if deg > d => false,
            Some(_) => (0..=d).all(|i| self.coeff(i) == self.coeff(d - i)),
        }
    }

    /// `z^d · p(1/z)` as a polynomial, when `deg p ≤ d`.
    pub fn reversed(&self, d: usize) -> Option<IntPoly> {
        match self.degree() {
            None => Some(IntPoly::zero()),
            Some(deg) if deg > d => None,
            Some(_) => {
                let mut coeffs = vec![BigInt::zero(); d + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    coeffs[d - i] = c.clone();
                }
                Some(IntPoly::new(coeffs))
            }
        }
    }
}

fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo_rem by zero");
    let bl = b.leading_coeff().expect("nonzero").clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let rl = r.leading_coeff().expect("nonzero").clone();
        r = &r.scale(&bl) - &b.shifted(dr - db).scale(&rl);
    }
    r
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

fn fmt_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        match i {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{i}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending for polynomials, e.g. "z^2 + z + 1"
        fmt_terms(f, self.coeffs.iter().enumerate().rev())
    }
}

/// Ascending generating-function style, e.g. "1 - 2*z^2 + z^4".
struct Ascending<'a>(&'a IntPoly);

impl fmt::Display for Ascending<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return write!(f, "0");
        }
        fmt_terms(f, self.0.coeffs.iter().enumerate())
    }
}

/// Quotient of two integer polynomials in canonical reduced form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, ExactAlgError> {
        if den.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = IntPoly::new(num.coeffs.iter().map(|a| a / &c).collect());
            den = IntPoly::new(den.coeffs.iter().map(|a| a / &c).collect());
        }
        let low = den.valuation().expect("nonzero");
        if den.coeffs[low].is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc::from_poly(IntPoly::from_i64s(&[n]))
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        RatFunc::new(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
        .expect("nonzero denominator")
    }

    /// Clears denominators of rational coefficient vectors (by one common
    /// multiplier, so the function is unchanged) and normalizes.
    pub fn from_rational_coeffs(
        num: &[BigRational],
        den: &[BigRational],
    ) -> Result<Self, ExactAlgError> {
        let lcm = num
            .iter()
            .chain(den.iter())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let clear = |cs: &[BigRational]| -> IntPoly {
            IntPoly::new(cs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect())
        };
        RatFunc::new(clear(num), clear(den))
    }

    pub fn zero() -> Self {
        RatFunc::from_poly(IntPoly::zero())
    }

    pub fn one() -> Self {
        RatFunc::from_poly(IntPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc, ExactAlgError> {
        if rhs.is_zero() {
            return Err(ExactAlgError::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn inv(&self) -> Result<RatFunc, ExactAlgError> {
        RatFunc::one().div(self)
    }

    pub fn pow(&self, exp: usize) -> RatFunc {
        let mut acc = RatFunc::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `deg num − deg den`, or `None` for the zero function.
    pub fn degree(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().expect("nonzero den") as i64)
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational, ExactAlgError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(ExactAlgError::PoleAtPoint);
        }
        Ok(self.num.eval(x) / d)
    }

    /// First `order + 1` Taylor coefficients at `z = 0`.
    pub fn series(&self, order: usize) -> Result<Vec<BigRational>, ExactAlgError> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(ExactAlgError::PoleAtZero);
        }
        let d0 = BigRational::from_integer(d0);
        let mut out: Vec<BigRational> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = BigRational::from_integer(self.num.coeff(k));
            for j in 1..=k {
                acc -= BigRational::from_integer(self.den.coeff(j)) * &out[k - j];
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    /// Exact value of `(1-z)^r · f(z)` at `z = 1` after cancellation.
    pub fn cancel_eval_at_one(&self, r: usize) -> Result<BigRational, ExactAlgError> {
        let factor = IntPoly::from_i64s(&[1, -1]).pow(r);
        let g = self * &RatFunc::from_poly(factor);
        g.eval(&BigRational::one())
            .map_err(|_| ExactAlgError::PoleRemains { order: r })
    }

    /// The substitution `z ↦ 1/z`, as a rational function of `z`.
    pub fn subst_inverse(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let dn = self.num.degree().expect("nonzero");
        let dd = self.den.degree().expect("nonzero den");
        let rn = self.num.reversed(dn).expect("within degree");
        let rd = self.den.reversed(dd).expect("within degree");
        if dd >= dn {
            RatFunc::new(rn.shifted(dd - dn), rd).expect("nonzero")
        } else {
            RatFunc::new(rn, rd.shifted(dn - dd)).expect("nonzero")
        }
    }

    /// Returns the numerator when the canonical denominator is 1.
    pub fn as_poly(&self) -> Option<IntPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }
}

fn ratfunc_combine(a: &RatFunc, b: &RatFunc, sub: bool) -> RatFunc {
    let rhs = &b.num * &a.den;
    let lhs = &a.num * &b.den;
    let num = if sub { &lhs - &rhs } else { &lhs + &rhs };
    RatFunc::new(num, &a.den * &b.den).expect("nonzero denominators")
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        ratfunc_combine(self, rhs, false)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        ratfunc_combine(self, rhs, true)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", Ascending(&self.num))
        } else {
            write!(f, "({}) / ({})", Ascending(&self.num), Ascending(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(p(num), p(den)).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exact_division_examples() {
        // (z^4 + z^2) / z^2 = z^2 + 1
        let q = p(&[0, 0, 1, 0, 1]).div_exact(&p(&[0, 0, 1])).unwrap();
        assert_eq!(q, p(&[1, 0, 1]));
        // division by 1 is the identity
        let a = p(&[3, -1, 7]);
        assert_eq!(a.div_exact(&IntPoly::one()).unwrap(), a);
        // z^4 + 3z^3 + 6z^2 + 3z + 1 is not divisible by z^2 + 1
        let err = p(&[1, 3, 6, 3, 1]).div_exact(&p(&[1, 0, 1]));
        assert_eq!(err, Err(ExactAlgError::NotDivisible));
        // non-integer quotient coefficients are rejected
        let err = p(&[0, 3]).div_exact(&p(&[0, 2]));
        assert_eq!(err, Err(ExactAlgError::NotDivisible));
        assert_eq!(
            p(&[1]).div_exact(&IntPoly::zero()),
            Err(ExactAlgError::DivisionByZero)
        );
    }

    #[test]
    fn ratfunc_arithmetic_examples() {
        // 1/(1-z) * (1-z) = 1
        let f = rf(&[1], &[1, -1]);
        assert_eq!(&f * &RatFunc::from_poly(p(&[1, -1])), RatFunc::one());
        // averaging 1/(1-z)^2 and 1/(1+z)^2 gives (1+z^2)/(1-z^2)^2
        let a = rf(&[1], &[1, -2, 1]);
        let b = rf(&[1], &[1, 2, 1]);
        let avg = &(&a + &b) * &RatFunc::from_ratio(&rat(1, 2));
        assert_eq!(avg, rf(&[1, 0, 1], &[1, 0, -2, 0, 1]));
        // (1/(1-z)) / (1/(1-z^2)) = 1 + z
        let ft = rf(&[1], &[1, -1]);
        let fg = rf(&[1], &[1, 0, -1]);
        assert_eq!(ft.div(&fg).unwrap(), RatFunc::from_poly(p(&[1, 1])));
        assert!(f.div(&RatFunc::zero()).is_err());
    }

    #[test]
    fn canonical_form_is_reduced_and_sign_normalized() {
        // (2 + 2z) / 2 reduces to 1 + z
        assert_eq!(rf(&[2, 2], &[2]), RatFunc::from_poly(p(&[1, 1])));
        // (z^2 - 1)/(z - 1) = z + 1 with positive constant denominator
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]), RatFunc::from_poly(p(&[1, 1])));
        // denominator sign: 1/(z-1) is stored as (-1)/(1-z)
        let f = rf(&[1], &[-1, 1]);
        assert_eq!(f.num(), &p(&[-1]));
        assert_eq!(f.den(), &p(&[1, -1]));
        // zero is 0/1
        let z = rf(&[0], &[5, 7]);
        assert!(z.is_zero());
        assert_eq!(z.den(), &IntPoly::one());
    }

    #[test]
    fn series_examples() {
        let geo = rf(&[1], &[1, -1]);
        assert_eq!(
            geo.series(3).unwrap(),
            vec![rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1)]
        );
        let f = rf(&[1, 0, 1], &[1, 0, -2, 0, 1]);
        assert_eq!(
            f.series(4).unwrap(),
            vec![rat(1, 1), rat(0, 1), rat(3, 1), rat(0, 1), rat(5, 1)]
        );
        let g = rf(&[1], &[1, 0, -1]);
        assert_eq!(
            g.series(4).unwrap(),
            vec![rat(1, 1), rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 1)]
        );
        assert_eq!(
            rf(&[1], &[0, 1]).series(1),
            Err(ExactAlgError::PoleAtZero)
        );
    }

    #[test]
    fn cancellation_at_one_examples() {
        assert_eq!(
            rf(&[1], &[1, -2, 1]).cancel_eval_at_one(2).unwrap(),
            rat(1, 1)
        );
        assert_eq!(
            rf(&[1, 0, 1], &[1, 0, -2, 0, 1])
                .cancel_eval_at_one(2)
                .unwrap(),
            rat(1, 2)
        );
        // 1/((1-z^2)(1-z^3)) with r = 2 gives 1/6
        let den = &p(&[1, 0, -1]) * &p(&[1, 0, 0, -1]);
        let f = RatFunc::new(IntPoly::one(), den).unwrap();
        assert_eq!(f.cancel_eval_at_one(2).unwrap(), rat(1, 6));
        // pole of order 3 survives r = 2
        let g = RatFunc::new(IntPoly::one(), p(&[1, -1]).pow(3)).unwrap();
        assert_eq!(
            g.cancel_eval_at_one(2),
            Err(ExactAlgError::PoleRemains { order: 2 })
        );
    }

    #[test]
    fn palindrome_examples() {
        assert!(p(&[1, 1, 1]).is_palindromic(2));
        assert!(p(&[1]).is_palindromic(0));
        assert!(!p(&[1, 2]).is_palindromic(1));
        assert!(!p(&[1, 1, 1]).is_palindromic(1));
        assert!(IntPoly::zero().is_palindromic(4));
        // offset larger than the degree breaks symmetry against c_0 = 0
        assert!(!p(&[1, 1]).is_palindromic(2));
    }

    #[test]
    fn evaluation_and_degree_examples() {
        assert_eq!(p(&[0, 1, 1]).eval(&rat(3, 1)), rat(12, 1));
        assert_eq!(p(&[0, 1, 1]).eval_int(&BigInt::from(3)), BigInt::from(12));
        let den = &p(&[1, -1]) * &p(&[1, 0, -1]);
        let f = RatFunc::new(IntPoly::one(), den).unwrap();
        assert_eq!(f.degree(), Some(-3));
        assert!(f.eval(&rat(1, 1)).is_err());
        let q = p(&[4, -2, 9]);
        assert_eq!(q.eval(&rat(1, 1)), BigRational::from_integer(q.sum_of_coeffs()));
        assert_eq!(RatFunc::zero().degree(), None);
    }

    #[test]
    fn subst_inverse_examples() {
        // F(z) = 1/(1-z) becomes -z/(1-z) under z -> 1/z
        let f = rf(&[1], &[1, -1]);
        assert_eq!(f.subst_inverse(), rf(&[0, -1], &[1, -1]));
        // a polynomial picks up a denominator
        let g = RatFunc::from_poly(p(&[1, 1]));
        assert_eq!(g.subst_inverse(), rf(&[1, 1], &[0, 1]));
        assert_eq!(RatFunc::zero().subst_inverse(), RatFunc::zero());
        // involution on a mixed example
        let h = rf(&[1, 0, 1], &[1, 0, -2, 0, 1]);
        assert_eq!(h.subst_inverse().subst_inverse(), h);
    }

    #[test]
    fn gcd_basics() {
        let a = &p(&[1, 1]) * &p(&[1, 0, 1]);
        let b = &p(&[1, 1]) * &p(&[2, 3]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[0]).gcd(&p(&[0])), IntPoly::zero());
        assert_eq!(p(&[-2, -2]).gcd(&IntPoly::zero()), p(&[1, 1]));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-12i64..=12, 0..7).prop_map(|cs| IntPoly::from_i64s(&cs))
    }

    fn nonzero_poly() -> impl Strategy<Value = IntPoly> {
        small_poly().prop_filter("nonzero", |q| !q.is_zero())
    }

    proptest! {
        #[test]
        fn division_round_trips(a in small_poly(), b in nonzero_poly()) {
            let ab = &a * &b;
            prop_assert_eq!(ab.div_exact(&b).unwrap(), a);
        }

        #[test]
        fn canonical_form_is_idempotent(n in small_poly(), d in nonzero_poly()) {
            let f = RatFunc::new(n, d).unwrap();
            let again = RatFunc::new(f.num().clone(), f.den().clone()).unwrap();
            prop_assert_eq!(&again, &f);
        }

        #[test]
        fn mul_div_inverts(a in nonzero_poly(), da in nonzero_poly(),
                           b in small_poly(), db in nonzero_poly()) {
            let fa = RatFunc::new(a, da).unwrap();
            let fb = RatFunc::new(b, db).unwrap();
            let back = &fb.div(&fa).unwrap() * &fa;
            prop_assert_eq!(back, fb);
        }

        #[test]
        fn series_of_product_is_cauchy_product(
            n1 in small_poly(), n2 in small_poly(),
            d1 in nonzero_poly().prop_filter("den(0) != 0", |q| !q.coeff(0).is_zero()),
            d2 in nonzero_poly().prop_filter("den(0) != 0", |q| !q.coeff(0).is_zero()),
        ) {
            let f = RatFunc::new(n1, d1).unwrap();
            let g = RatFunc::new(n2, d2).unwrap();
            let order = 6usize;
            let sf = f.series(order).unwrap();
            let sg = g.series(order).unwrap();
            let sfg = (&f * &g).series(order).unwrap();
            for k in 0..=order {
                let mut acc = BigRational::zero();
                for j in 0..=k {
                    acc += &sf[j] * &sg[k - j];
                }
                prop_assert_eq!(&acc, &sfg[k]);
            }
        }

        #[test]
        fn palindrome_matches_reversal(a in small_poly(), d in 0usize..8) {
            let ok = match a.reversed(d) {
                Some(r) => r == a,
                None => false,
            };
            prop_assert_eq!(a.is_palindromic(d), ok);
        }
    }
}
