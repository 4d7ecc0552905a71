//! Left (`♭`) and right (`♯`) q-deformed rational numbers.
//!
//! The right deformation of `r/s` with even continued fraction `a` is the
//! image `β_{a,q}(∞)` of the basepoint `∞` under the q-deformed
//! continued-fraction braid; the left deformation is the image
//! `β_{a,q}(1/(1−q))`. Both admit equivalent descriptions as q-deformed
//! continued fractions built from q-integers and as explicit 2×2 matrix
//! identities; this module implements all three routes so they can be
//! cross-checked exactly.
//!
//! Throughout, a deformed rational is represented by a normalized pair
//! `(R, S)` of Laurent polynomials with value `R/S`: for positive (resp.
//! negative) `r/s` the denominator's lowest-degree (resp. highest-degree)
//! term is made equal to 1; the exceptional values use the fixed rows
//! `[0] = (0, 1) / (1−q⁻¹, 1)` and `[∞] = (1, 0) / (1, 1−q)`.

use crate::braidcore::{word_matrix_q, BraidWord, Mat2q};
use crate::contfrac::{to_even_cf, EvenCF, Rational};
use crate::qpoly::{LaurentPoly, QpolyError, RatFunc};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};


/// Which deformation: right (`♯`) or left (`♭`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Sharp,
    Flat,
}

/// Errors from deformation computations.
#[derive(Debug, thiserror::Error)]
pub enum QratError {
    #[error(transparent)]
    Poly(#[from] QpolyError),
    #[error("denominator term used for normalization has coefficient {0}, expected ±1")]
    NonUnitNormalizer(String),
    #[error("matrix formula requires a continued fraction of length ≥ 2")]
    TooShort,
    #[error("digit {0} does not fit in a machine integer")]
    DigitOverflow(String),
}

/// The right q-integer `[n]♯ = (1 − qⁿ)/(1 − q) = 1 + q + ⋯ + q^{n−1}`,
/// which is a Laurent polynomial for every integer `n`
/// (for `n < 0` it equals `−(qⁿ + ⋯ + q⁻¹)`).
pub fn q_integer_sharp(n: i64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    if n >= 0 {
        for i in 0..n {
            p = p + LaurentPoly::q_pow(i);
        }
    } else {
        for i in n..0 {
            p = p - LaurentPoly::q_pow(i);
        }
    }
    p
}

/// The left q-integer `[n]♭ = (1 − q^{n−1} + qⁿ − q^{n+1})/(1 − q)`,
/// equal to `1 + q + ⋯ + q^{n−2} + qⁿ` for `n ≥ 2` and, in closed form,
/// to `[n−1]♯ + qⁿ` for every integer `n`.
pub fn q_integer_flat(n: i64) -> LaurentPoly {
    q_integer_sharp(n - 1) + LaurentPoly::q_pow(n)
}

/// Dispatches on [`Side`].
pub fn q_integer(n: i64, side: Side) -> LaurentPoly {
    match side {
        Side::Sharp => q_integer_sharp(n),
        Side::Flat => q_integer_flat(n),
    }
}

/// The basepoint of the left deformation, `1/(1 − q)`.
pub fn flat_basepoint() -> RatFunc {
    RatFunc::new(
        LaurentPoly::one(),
        LaurentPoly::from_terms(&[(0, 1), (1, -1)]),
    )
    .expect("nonzero denominator")
}

/// Deformation via the braid action: `β_{a,q}(∞)` for `♯`,
/// `β_{a,q}(1/(1−q))` for `♭`. Returns the raw fraction, before the
/// `(R, S)` normalization.
pub fn deform_braid_route(x: &Rational, side: Side) -> Result<RatFunc, QratError> {
    let cf = to_even_cf(x);
    let m = word_matrix_q(&BraidWord::cf_braid(&cf));
    let basepoint = match side {
        Side::Sharp => RatFunc::inf(),
        Side::Flat => flat_basepoint(),
    };
    Ok(m.mobius(&basepoint)?)
}

fn digit_i64(d: &BigInt) -> Result<i64, QratError> {
    use num_traits::ToPrimitive;
    d.to_i64().ok_or_else(|| QratError::DigitOverflow(d.to_string()))
}

/// Deformation via the q-deformed continued fraction
///
/// ```text
/// [a₁]♯_q + q^{a₁} / ([a₂]♯_{q⁻¹} + q^{−a₂} / (… + q^{a_{2n−1}} / [a_{2n}]_{q⁻¹}))
/// ```
///
/// where the innermost q-integer is `[a_{2n}]♯_{q⁻¹}` for the right
/// deformation and `[a_{2n}]♭_{q⁻¹}` for the left one. The empty
/// expansion (`∞`) maps to the basepoint of the chosen side.
pub fn deform_cf_route(x: &Rational, side: Side) -> Result<RatFunc, QratError> {
    let cf = to_even_cf(x);
    let digits = cf.digits();
    if digits.is_empty() {
        return Ok(match side {
            Side::Sharp => RatFunc::inf(),
            Side::Flat => flat_basepoint(),
        });
    }
    // Positions are 1-based: odd positions use variable q, even use q⁻¹.
    let mut value: Option<RatFunc> = None;
    for (idx, d) in digits.iter().enumerate().rev() {
        let position = idx + 1;
        let a = digit_i64(d)?;
        let inverted = position % 2 == 0;
        let qint_side = if position == digits.len() { side } else { Side::Sharp };
        let mut qint = q_integer(a, qint_side);
        if inverted {
            qint = qint.invert_variable();
        }
        let term = RatFunc::from_poly(qint);
        value = Some(match value {
            None => term,
            Some(inner) => {
                let exp = if inverted { -a } else { a };
                let unit = RatFunc::from_poly(LaurentPoly::q_pow(exp));
                term.add(&unit.mul(&inner.reciprocal()?)?)?
            }
        });
    }
    Ok(value.expect("nonempty digits"))
}

/// Applies the `(R, S)` normalization to a raw deformed fraction.
///
/// The sign of the underlying rational is recovered from the `q = 1`
/// specialization, which also detects the exceptional values `0` and `∞`.
pub fn qrat_normalize(v: &RatFunc) -> Result<(LaurentPoly, LaurentPoly), QratError> {
    if v.is_inf() {
        // The ♯ row of ∞.
        return Ok((LaurentPoly::one(), LaurentPoly::zero()));
    }
    let r1 = v.num().eval_one();
    let s1 = v.den().eval_one();
    let negative = (&r1 * &s1).is_negative();
    let den = v.den();
    let pivot = if negative {
        den.max_degree().expect("nonzero denominator").clone()
    } else {
        den.min_degree().expect("nonzero denominator").clone()
    };
    let c = den.coeff(&pivot);
    let sign = if c == BigInt::from(-1) {
        BigInt::from(-1)
    } else if c == BigInt::from(1) {
        BigInt::from(1)
    } else {
        return Err(QratError::NonUnitNormalizer(c.to_string()));
    };
    Ok((
        v.num().mul_unit(&-&pivot, &sign),
        v.den().mul_unit(&-&pivot, &sign),
    ))
}

/// A rational together with both normalized deformations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QRatPair {
    pub base: Rational,
    pub rsharp: LaurentPoly,
    pub ssharp: LaurentPoly,
    pub rflat: LaurentPoly,
    pub sflat: LaurentPoly,
}

/// Computes the normalized pair `(R, S)` of the chosen deformation via
/// the braid-action route.
pub fn deform(x: &Rational, side: Side) -> Result<(LaurentPoly, LaurentPoly), QratError> {
    let v = deform_braid_route(x, side)?;
    qrat_normalize(&v)
}

/// Computes both deformations of `x`.
pub fn qrat_pair(x: &Rational) -> Result<QRatPair, QratError> {
    let (rsharp, ssharp) = deform(x, Side::Sharp)?;
    let (rflat, sflat) = deform(x, Side::Flat)?;
    Ok(QRatPair {
        base: x.clone(),
        rsharp,
        ssharp,
        rflat,
        sflat,
    })
}

/// Sum of the digits at even positions `a₂ + a₄ + ⋯ + a_{2n}`, optionally
/// dropping the last even digit.
fn even_digit_sum(cf: &EvenCF, drop_last: bool) -> Result<i64, QratError> {
    let digits = cf.digits();
    let mut sum = 0i64;
    for (idx, d) in digits.iter().enumerate() {
        if idx % 2 == 1 {
            if drop_last && idx == digits.len() - 1 {
                continue;
            }
            sum += digit_i64(d)?;
        }
    }
    Ok(sum)
}

/// Evaluates a digit sequence of any length (the truncations used by the
/// matrix formulas are odd).
fn value_of_digits(digits: &[BigInt]) -> Rational {
    let mut value = Rational::infinity();
    for a in digits.iter().rev() {
        value = if value.is_infinite() {
            Rational::new(a.clone(), BigInt::from(1)).unwrap()
        } else {
            Rational::new(a * value.numer() + value.denom(), value.numer().clone()).unwrap()
        };
    }
    value
}

/// Outcome of [`matrix_formula_check`]: both 2×2 identities, verified
/// entry-by-entry with their exact q-power prefactors.
#[derive(Clone, Debug)]
pub struct MatrixFormulaReport {
    pub sharp_ok: bool,
    pub flat_ok: bool,
    /// The prefactored braid matrix of the ♯ identity (`q^{a₂+⋯+a_{2n}}·β`).
    pub sharp_lhs: Mat2q,
    pub diagnostic: Option<String>,
}

impl MatrixFormulaReport {
    pub fn ok(&self) -> bool {
        self.sharp_ok && self.flat_ok
    }
}

/// Compares two matrices column by column, allowing an independent sign
/// `±1` per column but no other unit. The braid matrix is projective and
/// the `(R, S)` pairs of the two columns are normalized independently, so
/// for negative rationals the displayed identities pin each column's
/// entries and q-powers exactly while leaving one sign per column free.
fn columns_match_up_to_sign(lhs: &Mat2q, rhs: &Mat2q) -> bool {
    let col_ok = |l0: &LaurentPoly, l1: &LaurentPoly, r0: &LaurentPoly, r1: &LaurentPoly| {
        (l0 == r0 && l1 == r1) || (*l0 == -r0 && *l1 == -r1)
    };
    col_ok(&lhs.a, &lhs.c, &rhs.a, &rhs.c) && col_ok(&lhs.b, &lhs.d, &rhs.b, &rhs.d)
}

/// Verifies the two matrix identities satisfied by the deformations of a
/// rational with continued fraction `[a₁, …, a_{2n}]`, `n ≥ 1`, writing
/// `r′/s′` for the value of the truncation `[a₁, …, a_{2n−1}]`:
///
/// - right: `q^{a₂+a₄+⋯+a_{2n}} · β_{a,q}` equals
///   `[[qR♯, R♯′], [qS♯, S♯′]]` when `0 ≤ r/s < ∞` and
///   `[[R♯, R♯′], [S♯, S♯′]]` when `r/s < 0`;
/// - left: `q^{a₂+⋯+a_{2n−2}} · β_{a,q} · [[1, 1−q⁻¹], [1−q, 1]]` equals
///   `[[q^{−a_{2n}}R♭, R♭′], [q^{−a_{2n}}S♭, S♭′]]` when `0 ≤ r/s < ∞`,
///   with the first-column prefactor `q^{−a_{2n}+1}` when `r/s < 0`.
pub fn matrix_formula_check(x: &Rational) -> Result<MatrixFormulaReport, QratError> {
    let cf = to_even_cf(x);
    if cf.len() < 2 {
        return Err(QratError::TooShort);
    }
    let digits = cf.digits();
    let beta = word_matrix_q(&BraidWord::cf_braid(&cf));
    let truncated = value_of_digits(&digits[..digits.len() - 1]);
    let nonneg = !x.is_infinite() && x.signum() >= 0;
    let a_last = digit_i64(&digits[digits.len() - 1])?;

    // Right identity.
    let (rs, ss) = deform(x, Side::Sharp)?;
    let (rsp, ssp) = deform(&truncated, Side::Sharp)?;
    let sharp_lhs = beta.scale(&LaurentPoly::q_pow(even_digit_sum(&cf, false)?));
    let first_col_unit = if nonneg {
        LaurentPoly::q_pow(1)
    } else {
        LaurentPoly::one()
    };
    let sharp_rhs = Mat2q::new(
        &rs * &first_col_unit,
        rsp.clone(),
        &ss * &first_col_unit,
        ssp.clone(),
    );
    let sharp_ok = columns_match_up_to_sign(&sharp_lhs, &sharp_rhs);

    // Left identity.
    let (rf, sf) = deform(x, Side::Flat)?;
    let (rfp, sfp) = deform(&truncated, Side::Flat)?;
    let corner = Mat2q::from_terms(
        &[(0, 1)],
        &[(0, 1), (-1, -1)],
        &[(0, 1), (1, -1)],
        &[(0, 1)],
    );
    let flat_lhs = beta
        .mul(&corner)
        .scale(&LaurentPoly::q_pow(even_digit_sum(&cf, true)?));
    let flat_unit = if nonneg {
        LaurentPoly::q_pow(-a_last)
    } else {
        LaurentPoly::q_pow(-a_last + 1)
    };
    let flat_rhs = Mat2q::new(&rf * &flat_unit, rfp, &sf * &flat_unit, sfp);
    let flat_ok = columns_match_up_to_sign(&flat_lhs, &flat_rhs);

    let diagnostic = if sharp_ok && flat_ok {
        None
    } else {
        Some(format!(
            "matrix identity failed for {x}: sharp_ok={sharp_ok}, flat_ok={flat_ok}"
        ))
    };
    Ok(MatrixFormulaReport {
        sharp_ok,
        flat_ok,
        sharp_lhs,
        diagnostic,
    })
}

/// Derives the left deformation from the right one and its truncation:
/// `(R♭, S♭)` is the normalization of
/// `(qR♯ + R♯′ − qR♯′, qS♯ + S♯′ − qS♯′)`.
pub fn left_from_right(
    rsharp: &LaurentPoly,
    ssharp: &LaurentPoly,
    rsharp_trunc: &LaurentPoly,
    ssharp_trunc: &LaurentPoly,
) -> Result<(LaurentPoly, LaurentPoly), QratError> {
    let q = LaurentPoly::q();
    let num = &(&(&q * rsharp) + rsharp_trunc) - &(&q * rsharp_trunc);
    let den = &(&(&q * ssharp) + ssharp_trunc) - &(&q * ssharp_trunc);
    // At the label ∞ the combination is only projectively correct (it
    // yields q/(1−q) rather than the basepoint 1/(1−q)), so the fixed ∞
    // row takes over.
    if !den.is_zero() && den.eval_one().is_zero() && !num.eval_one().is_zero() {
        return Ok((
            LaurentPoly::one(),
            LaurentPoly::from_terms(&[(0, 1), (1, -1)]),
        ));
    }
    qrat_normalize(&RatFunc::new(num, den)?)
}

/// Checks the exact negation identity `[−s/r] = −q⁻¹ / [r/s]` for both
/// deformations of a positive rational `x = r/s`.
///
/// With the generator matrices used here, the involution exchanging
/// positive and negative deformed rationals (and `0 ↔ ∞`) is
/// `x ↦ −1/(qx)`; it is sometimes quoted as `x ↦ −q/x`, which is the
/// same map under the reciprocal-variable normalization of the
/// deformation and differs from ours by the global factor `q⁻²`.
pub fn negate_symmetry(x: &Rational) -> Result<bool, QratError> {
    let negated = Rational::new(-x.denom().clone(), x.numer().clone())
        .expect("negated reciprocal of a valid rational");
    let minus_q_inv = RatFunc::from_poly(LaurentPoly::monomial(-1, -1));
    for side in [Side::Sharp, Side::Flat] {
        let lhs = deform_braid_route(&negated, side)?;
        let rhs_base = deform_braid_route(x, side)?;
        let rhs = if rhs_base.is_zero() {
            RatFunc::inf()
        } else {
            minus_q_inv.mul(&rhs_base.reciprocal()?)?
        };
        if !lhs.fraction_eq(&rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}
