//! Exact arithmetic for integer Laurent polynomials in one variable `q`,
//! and for ratios of such polynomials.
//!
//! [`LaurentPoly`] is the universal value type of this crate: continued
//! fraction deformations, braid matrices, automaton vectors and closure
//! counts are all elements of `Z[q^±]`. Coefficients and exponents are
//! arbitrary precision, since matrix products and closure counts grow
//! quickly with continued-fraction digit size.
//!
//! [`RatFunc`] is a fraction of Laurent polynomials with a first-class
//! point at infinity (`1/0`), so that deformation of `∞` needs no special
//! channel.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An integer Laurent polynomial `Σ c_e q^e`, stored as a sparse map from
/// exponent to coefficient. Zero coefficients are never stored, so equality
/// of term maps is equality of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<BigInt, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// The monomial `c · q^e`.
    pub fn monomial(e: i64, c: i64) -> Self {
        Self::monomial_big(BigInt::from(e), BigInt::from(c))
    }

    /// The monomial `c · q^e` with arbitrary-precision parts.
    pub fn monomial_big(e: BigInt, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `q^e` for any integer `e` (negative exponents allowed).
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms(pairs: &[(i64, i64)]) -> Self {
        let mut p = LaurentPoly::zero();
        for &(e, c) in pairs {
            p.add_term(BigInt::from(e), BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, e: BigInt, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Iterator over `(exponent, coefficient)` in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&BigInt, &BigInt)> {
        self.terms.iter()
    }

    /// Lowest exponent with nonzero coefficient, if any.
    pub fn min_degree(&self) -> Option<&BigInt> {
        self.terms.keys().next()
    }

    /// Highest exponent with nonzero coefficient, if any.
    pub fn max_degree(&self) -> Option<&BigInt> {
        self.terms.keys().next_back()
    }

    /// Coefficient at exponent `e` (zero when absent).
    pub fn coeff(&self, e: &BigInt) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient at a small exponent.
    pub fn coeff_i64(&self, e: i64) -> BigInt {
        self.coeff(&BigInt::from(e))
    }

    /// Multiplies by the unit `c · q^e` in place semantics (returns new value).
    pub fn mul_unit(&self, e: &BigInt, c: &BigInt) -> Self {
        let mut terms = BTreeMap::new();
        for (te, tc) in &self.terms {
            let nc = tc * c;
            if !nc.is_zero() {
                terms.insert(te + e, nc);
            }
        }
        LaurentPoly { terms }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        self.mul_unit(&BigInt::from(e), &BigInt::one())
    }

    /// Greatest common divisor of all coefficients (zero for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
        }
        g
    }

    /// True iff every coefficient is `≥ 0`.
    pub fn coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Substitutes `q ↦ q⁻¹`, i.e. negates every exponent.
    pub fn invert_variable(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (-e, c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    /// Evaluates at a positive real value of `q`.
    pub fn eval_f64(&self, q: f64) -> Result<f64, QpolyError> {
        if !(q > 0.0) {
            return Err(QpolyError::NonPositiveEvalPoint(q));
        }
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            let e = e
                .to_f64()
                .ok_or_else(|| QpolyError::ExponentOverflow(e.to_string()))?;
            let c = c.to_f64().unwrap_or(f64::INFINITY);
            acc += c * q.powf(e);
        }
        Ok(acc)
    }

    /// Evaluates exactly at a positive rational value of `q`.
    pub fn eval_rational(&self, q: &BigRational) -> Result<BigRational, QpolyError> {
        if !q.is_positive() {
            return Err(QpolyError::NonPositiveEvalPoint(
                q.to_f64().unwrap_or(f64::NAN),
            ));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let e = e
                .to_i32()
                .ok_or_else(|| QpolyError::ExponentOverflow(e.to_string()))?;
            acc += BigRational::from(c.clone()) * q.pow(e);
        }
        Ok(acc)
    }

    /// Specializes at `q = 1`, i.e. sums the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Equality modulo multiplication by `± q^k`.
    ///
    /// Returns `true` iff there is a sign `s` and an integer `k` with
    /// `self = s · q^k · other`.
    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        self.unit_quotient(other).is_some()
    }

    /// If `self = s · q^k · other`, returns `(k, s)`; otherwise `None`.
    /// Two zero polynomials are related by the unit `(0, +1)`.
    pub fn unit_quotient(&self, other: &Self) -> Option<(BigInt, i8)> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Some((BigInt::zero(), 1)),
            (true, false) | (false, true) => return None,
            _ => {}
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let (e1, c1) = self.terms.iter().next().unwrap();
        let (e2, c2) = other.terms.iter().next().unwrap();
        let k = e1 - e2;
        // Leading (lowest-degree) coefficients must agree up to sign.
        let sign = if c1 == c2 {
            1i8
        } else if *c1 == -c2 {
            -1i8
        } else {
            return None;
        };
        let c = BigInt::from(sign);
        if self == &other.mul_unit(&k, &c) {
            Some((k, sign))
        } else {
            None
        }
    }

    /// JSON encoding: object mapping decimal-string exponents to
    /// decimal-string coefficients, e.g. `{"-1":"1","0":"2"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), serde_json::Value::String(c.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }

    /// Inverse of [`to_json`](Self::to_json).
    pub fn from_json(v: &serde_json::Value) -> Result<Self, QpolyError> {
        let obj = v
            .as_object()
            .ok_or_else(|| QpolyError::Json("expected object".into()))?;
        let mut p = LaurentPoly::zero();
        for (k, val) in obj {
            let e: BigInt = k
                .parse()
                .map_err(|_| QpolyError::Json(format!("bad exponent {k:?}")))?;
            let s = val
                .as_str()
                .ok_or_else(|| QpolyError::Json("coefficient must be a string".into()))?;
            let c: BigInt = s
                .parse()
                .map_err(|_| QpolyError::Json(format!("bad coefficient {s:?}")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Errors from Laurent-polynomial arithmetic and evaluation.
#[derive(Debug, thiserror::Error)]
pub enum QpolyError {
    #[error("evaluation point must be positive, got {0}")]
    NonPositiveEvalPoint(f64),
    #[error("exponent {0} too large for numeric evaluation")]
    ExponentOverflow(String),
    #[error("invalid JSON encoding: {0}")]
    Json(String),
}

impl fmt::Display for LaurentPoly {
    /// Renders like `1+2*q+q^2+q^3` (or `q^-1` for negative exponents).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let one = BigInt::one();
        let minus_one = -&one;
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let abs = c.abs();
            if e.is_zero() {
                write!(f, "{abs}")?;
            } else {
                if abs != one && abs != minus_one {
                    write!(f, "{abs}*")?;
                }
                if e.is_one() {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPoly { terms }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// A fraction `num/den` of Laurent polynomials.
///
/// The distinguished value `INF` is `1/0`. Outside `INF`, `den` is nonzero.
/// Values produced by [`RatFunc::new`] are in the module's canonical form:
/// numerator and denominator share no integer content > 1, and the
/// denominator's lowest-degree term is a positive multiple of `q^0`.
/// The ♯/♭ normalizations of the deformation modules are applied
/// explicitly on top of this, never by default.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    /// Builds `num/den` in canonical form. `0/0` is rejected; `x/0` for
    /// nonzero `x` canonicalizes to `INF`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QpolyError> {
        if den.is_zero() {
            if num.is_zero() {
                return Err(QpolyError::Json("0/0 is not a rational function".into()));
            }
            return Ok(Self::inf());
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            });
        }
        // Divide by common integer content.
        let g = num.content().gcd(&den.content());
        let div = |p: &LaurentPoly, g: &BigInt| -> LaurentPoly {
            let terms = p.iter().map(|(e, c)| (e.clone(), c / g)).collect();
            LaurentPoly { terms }
        };
        let (mut num, mut den) = (div(&num, &g), div(&den, &g));
        // Shift so the denominator's lowest degree is 0 with positive
        // leading (lowest-degree) coefficient.
        let low = den.min_degree().unwrap().clone();
        let sign = if den.coeff(&low).is_negative() {
            BigInt::from(-1)
        } else {
            BigInt::one()
        };
        num = num.mul_unit(&-&low, &sign);
        den = den.mul_unit(&-&low, &sign);
        Ok(RatFunc { num, den })
    }

    /// Builds `num/den` without canonicalizing, for values that carry a
    /// ♯/♭ normalization of their own. `den` may be zero only for `INF`.
    pub fn raw(num: LaurentPoly, den: LaurentPoly) -> Self {
        RatFunc { num, den }
    }

    /// The point at infinity, `1/0`.
    pub fn inf() -> Self {
        RatFunc {
            num: LaurentPoly::one(),
            den: LaurentPoly::zero(),
        }
    }

    pub fn is_inf(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Embeds a Laurent polynomial as `p/1`.
    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// Semantic equality of fractions, by cross multiplication. This is
    /// coarser than structural equality when a nontrivial polynomial
    /// common factor is present (this module does no polynomial GCD).
    pub fn fraction_eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Equality of the `(num, den)` pair up to one common unit `± q^k`.
    pub fn equal_up_to_unit(&self, other: &Self) -> bool {
        match (
            self.num.unit_quotient(&other.num),
            self.den.unit_quotient(&other.den),
        ) {
            (Some(un), Some(ud)) => un == ud,
            // A zero component forces the comparison onto the other one.
            (Some(_), None) | (None, Some(_)) => false,
            (None, None) => false,
        }
    }

    /// Evaluates at a positive real `q`, with `INF` and poles mapping to
    /// `f64::INFINITY`.
    pub fn eval_f64(&self, q: f64) -> Result<f64, QpolyError> {
        if self.is_inf() {
            return Ok(f64::INFINITY);
        }
        let d = self.den.eval_f64(q)?;
        let n = self.num.eval_f64(q)?;
        if d == 0.0 {
            Ok(f64::INFINITY)
        } else {
            Ok(n / d)
        }
    }

    /// Exact evaluation at a positive rational `q`; `None` for `INF`/poles.
    pub fn eval_rational(&self, q: &BigRational) -> Result<Option<BigRational>, QpolyError> {
        if self.is_inf() {
            return Ok(None);
        }
        let d = self.den.eval_rational(q)?;
        if d.is_zero() {
            return Ok(None);
        }
        let n = self.num.eval_rational(q)?;
        Ok(Some(n / d))
    }

    /// Sum of fractions, with `INF + finite = INF`.
    pub fn add(&self, other: &Self) -> Result<Self, QpolyError> {
        if self.is_inf() || other.is_inf() {
            return Ok(Self::inf());
        }
        RatFunc::new(
            &(self.num() * other.den()) + &(other.num() * self.den()),
            self.den() * other.den(),
        )
    }

    /// Product of fractions; `INF · 0` is rejected as indeterminate.
    pub fn mul(&self, other: &Self) -> Result<Self, QpolyError> {
        if (self.is_inf() && other.is_zero()) || (other.is_inf() && self.is_zero()) {
            return Err(QpolyError::Json("INF · 0 is indeterminate".into()));
        }
        RatFunc::new(self.num() * other.num(), self.den() * other.den())
    }

    /// Reciprocal on the extended line: `1/0 = INF`, `1/INF = 0`.
    pub fn reciprocal(&self) -> Result<Self, QpolyError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    /// Negation (`−INF = INF` on the projective line).
    pub fn negate(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// JSON encoding `{"num": …, "den": …}` with `INF` as
    /// `{"num":{"0":"1"},"den":{}}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inf() {
            return write!(f, "inf");
        }
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
