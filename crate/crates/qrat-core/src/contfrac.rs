//! Elements of `Q ∪ {∞}` and their unique even continued-fraction
//! expansions.
//!
//! Every rational has a unique expansion `[a₁, …, a₂ₙ]` of even length
//! with either `a₁ ≥ 0` and all later digits `≥ 1`, or `a₁ ≤ 0` and all
//! later digits `≤ −1`. Two values get reserved expansions: `∞` is the
//! empty sequence and `0` is `[−1, 1]`. Odd expansions exist too but are
//! not used anywhere in this crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// An element of `Q ∪ {∞}`: a fraction `r/s` with `gcd(|r|, s) = 1`,
/// `s ≥ 0`, `∞ = 1/0` and `0 = 0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational {
    r: BigInt,
    s: BigInt,
}

impl Rational {
    /// Builds `r/s` in lowest terms with non-negative denominator.
    /// `(0, 0)` is rejected.
    pub fn new(r: impl Into<BigInt>, s: impl Into<BigInt>) -> Result<Self, CfError> {
        let (mut r, mut s) = (r.into(), s.into());
        if r.is_zero() && s.is_zero() {
            return Err(CfError::ZeroOverZero);
        }
        if s.is_negative() {
            r = -r;
            s = -s;
        }
        let g = r.gcd(&s);
        if !g.is_zero() {
            r /= &g;
            s /= &g;
        }
        if s.is_zero() {
            // All infinite values are the single point 1/0.
            r = BigInt::one();
        }
        Ok(Rational { r, s })
    }

    pub fn from_i64(r: i64, s: i64) -> Self {
        Rational::new(r, s).expect("nonzero fraction")
    }

    pub fn infinity() -> Self {
        Rational::from_i64(1, 0)
    }

    pub fn zero() -> Self {
        Rational::from_i64(0, 1)
    }

    pub fn numer(&self) -> &BigInt {
        &self.r
    }

    pub fn denom(&self) -> &BigInt {
        &self.s
    }

    pub fn is_infinite(&self) -> bool {
        self.s.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    /// Sign of the finite value (`0` for `0`; `∞` has no sign and returns `1`).
    pub fn signum(&self) -> i8 {
        if self.r.is_negative() {
            -1
        } else if self.r.is_zero() {
            0
        } else {
            1
        }
    }

    /// Numeric value as `f64` (`∞` maps to positive infinity).
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        if self.is_infinite() {
            f64::INFINITY
        } else {
            self.r.to_f64().unwrap_or(f64::NAN) / self.s.to_f64().unwrap_or(f64::NAN)
        }
    }

    /// Total order on `Q ∪ {∞}` with `∞` greater than every finite value.
    pub fn cmp_extended(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.r * &other.s).cmp(&(&other.r * &self.s)),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.r, self.s)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = CfError;

    /// Parses `"r/s"` (with `"1/0"` for `∞`) or a bare integer `"r"`.
    fn from_str(text: &str) -> Result<Self, CfError> {
        let (r, s) = match text.split_once('/') {
            Some((r, s)) => (r.trim(), s.trim()),
            None => (text.trim(), "1"),
        };
        let r: BigInt = r.parse().map_err(|_| CfError::Parse(text.to_string()))?;
        let s: BigInt = s.parse().map_err(|_| CfError::Parse(text.to_string()))?;
        Rational::new(r, s)
    }
}

/// An even-length continued-fraction expansion under the sign dichotomy.
/// The empty sequence is `∞`; `[−1, 1]` is `0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvenCF {
    digits: Vec<BigInt>,
}

impl EvenCF {
    /// Wraps a digit sequence, checking the invariants: even length, and
    /// either `a₁ ≥ 0` with the rest `≥ 1` or `a₁ ≤ 0` with the rest `≤ −1`.
    pub fn new(digits: Vec<BigInt>) -> Result<Self, CfError> {
        if digits.len() % 2 != 0 {
            return Err(CfError::OddLength(digits.len()));
        }
        // The reserved expansion of 0 sits outside the sign dichotomy.
        if digits == [BigInt::from(-1), BigInt::one()] {
            return Ok(EvenCF { digits });
        }
        if let Some(first) = digits.first() {
            let one = BigInt::one();
            let pos_branch =
                !first.is_negative() && digits[1..].iter().all(|d| *d >= one);
            let neg_branch =
                !first.is_positive() && digits[1..].iter().all(|d| *d <= -&one);
            if !pos_branch && !neg_branch {
                return Err(CfError::SignDichotomy(format!("{digits:?}")));
            }
        }
        Ok(EvenCF { digits })
    }

    pub fn from_i64(digits: &[i64]) -> Self {
        EvenCF::new(digits.iter().map(|&d| BigInt::from(d)).collect()).expect("valid digits")
    }

    pub fn digits(&self) -> &[BigInt] {
        &self.digits
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Text form `[a1,a2,...]`; `[]` for the empty expansion.
    pub fn to_text(&self) -> String {
        let inner: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
        format!("[{}]", inner.join(","))
    }
}

impl fmt::Display for EvenCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Errors from rational/continued-fraction construction and parsing.
#[derive(Debug, thiserror::Error)]
pub enum CfError {
    #[error("0/0 is not an element of Q ∪ {{∞}}")]
    ZeroOverZero,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("continued fraction has odd length {0}")]
    OddLength(usize),
    #[error("digits violate the sign dichotomy: {0}")]
    SignDichotomy(String),
}

/// Computes the unique even continued-fraction expansion of `x`.
///
/// Runs the Euclidean recursion (floor division, so remainding partial
/// quotients after the first are `≥ 1` for positive `x` and the mirrored
/// convention holds for negative `x`), then repairs parity with the
/// identity `[…, a] = […, a−1, 1]` (or `[…, a+1, −1]` on the negative
/// branch).
pub fn to_even_cf(x: &Rational) -> EvenCF {
    if x.is_infinite() {
        return EvenCF::new(vec![]).unwrap();
    }
    if x.is_zero() {
        return EvenCF::from_i64(&[-1, 1]);
    }
    let negative = x.signum() < 0;
    let mut digits: Vec<BigInt> = Vec::new();
    let (mut num, mut den) = (x.numer().clone(), x.denom().clone());
    if !negative {
        // Euclidean recursion with floor division: every digit after the
        // first is ≥ 1.
        loop {
            let (quot, rem) = num.div_mod_floor(&den);
            digits.push(quot);
            if rem.is_zero() {
                break;
            }
            num = den;
            den = rem;
        }
        // Collapse a trailing 1 so the pre-repair expansion is canonical:
        // [.., a, 1] = [.., a+1].
        if digits.len() > 1 && digits.last().unwrap().is_one() {
            digits.pop();
            *digits.last_mut().unwrap() += 1;
        }
    } else {
        // Mirrored recursion with ceiling division keeps the remainders
        // non-positive, so every digit after the first is ≤ −1.
        loop {
            let quot = num.div_ceil(&den);
            let rem = &num - &quot * &den;
            digits.push(quot);
            if rem.is_zero() {
                break;
            }
            num = den;
            den = rem;
        }
        if digits.len() > 1 && *digits.last().unwrap() == BigInt::from(-1) {
            digits.pop();
            *digits.last_mut().unwrap() -= 1;
        }
    }
    // Parity repair: […, a] = […, a−1, 1] (positive) or […, a+1, −1].
    if digits.len() % 2 != 0 {
        let last = digits.last_mut().unwrap();
        if negative {
            *last += 1;
            digits.push(BigInt::from(-1));
        } else {
            *last -= 1;
            digits.push(BigInt::one());
        }
    }
    EvenCF::new(digits).expect("construction preserves the dichotomy")
}

/// Evaluates `[a₁, …, a₂ₙ] = a₁ + 1/(a₂ + 1/(…))` exactly.
pub fn cf_value(cf: &EvenCF) -> Rational {
    // Evaluate back to front over the extended line; the empty tail is ∞
    // and each step maps t ↦ a + 1/t.
    let mut value = Rational::infinity();
    for a in cf.digits().iter().rev() {
        value = if value.is_infinite() {
            Rational::new(a.clone(), BigInt::one()).unwrap()
        } else {
            // a + s/r for value r/s.
            Rational::new(a * value.numer() + value.denom(), value.numer().clone()).unwrap()
        };
    }
    value
}
