//! Numeric layer for the boundary of the q-deformed Farey tessellation:
//! limits of q-rationals, q-irrationals via convergents, the total order,
//! and the greedy boundary-point classification.
//!
//! The workhorse is the q-deformed evaluation of an arbitrary digit
//! sequence `[d₁, …, d_k]` (any length, not just the canonical even
//! expansions):
//!
//! ```text
//! [d₁]♯_q + q^{d₁} / ([d₂]♯_{q⁻¹} + q^{−d₂} / (⋯ [d_k]♯_{q^{±1}}))
//! ```
//!
//! with the variable alternating between `q` (odd positions) and `q⁻¹`
//! (even positions). On canonical even expansions this agrees with the
//! right deformation of the value; sequences differing by the classical
//! rewriting `[…, a, 1] = […, a+1]` evaluate identically; and appending a
//! digit `m → ∞` at an odd (resp. even) position produces an increasing
//! (resp. decreasing) sequence converging to the left (resp. right)
//! deformation of the prefix value. These monotone limits drive both the
//! tail-convergence checks and the classification algorithm.

use crate::contfrac::{cf_value, to_even_cf, EvenCF, Rational};
use crate::qpoly::QpolyError;
use crate::qrationals::{deform, QratError, Side};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Errors from boundary computations.
#[derive(Debug, thiserror::Error)]
pub enum BoundaryError {
    #[error("q must lie in (0, 1), got {0}")]
    QOutOfRange(f64),
    #[error("digit stream exhausted before requested depth")]
    StreamTooShort,
    #[error("digit search exceeded the iteration cap (point too close to an endpoint?)")]
    SearchCapExceeded,
    #[error(transparent)]
    Deform(#[from] QratError),
    #[error(transparent)]
    Poly(#[from] QpolyError),
}

fn check_q(q: f64) -> Result<(), BoundaryError> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(BoundaryError::QOutOfRange(q))
    }
}

/// `[n]♯` evaluated at a real `q` (valid for every integer `n`).
fn q_int_f64(n: i64, q: f64) -> f64 {
    if (q - 1.0).abs() < 1e-15 {
        return n as f64;
    }
    (1.0 - q.powi(n as i32)) / (1.0 - q)
}

/// Evaluates the q-deformed digit sequence numerically.
pub fn eval_digits_sharp_f64(digits: &[i64], q: f64) -> f64 {
    if digits.is_empty() {
        return f64::INFINITY;
    }
    let mut value = f64::INFINITY;
    for (idx, &d) in digits.iter().enumerate().rev() {
        let odd_position = idx % 2 == 0;
        let var = if odd_position { q } else { 1.0 / q };
        let unit = var.powi(d as i32);
        let term = q_int_f64(d, var);
        value = if value.is_infinite() {
            term
        } else {
            term + unit / value
        };
    }
    value
}

/// `[n]♯` evaluated exactly at a rational `q`.
fn q_int_exact(n: i64, q: &BigRational) -> BigRational {
    let one = BigRational::one();
    if q.is_one() {
        return BigRational::from_integer(BigInt::from(n));
    }
    (&one - q.pow(n as i32)) / (&one - q)
}

/// Exact evaluation of the q-deformed digit sequence at rational `q`.
/// Returns `None` for the empty sequence (value `∞`) or if an
/// intermediate denominator vanishes.
pub fn eval_digits_sharp_exact(digits: &[i64], q: &BigRational) -> Option<BigRational> {
    let mut value: Option<BigRational> = None; // None = ∞
    for (idx, &d) in digits.iter().enumerate().rev() {
        let odd_position = idx % 2 == 0;
        let var = if odd_position {
            q.clone()
        } else {
            q.recip()
        };
        let unit = var.pow(d as i32);
        let term = q_int_exact(d, &var);
        value = Some(match value {
            None => term,
            Some(inner) => {
                if inner.is_zero() {
                    return None;
                }
                term + unit / inner
            }
        });
    }
    value
}

/// Evaluates the depth-`depth` convergent of a positive continued
/// fraction digit stream, together with the tail error bound
/// `q^{d₁+d₃+⋯+d_{depth−1}−1}` from the convergent-difference estimate.
pub fn q_irrational(
    q: f64,
    digits: &[i64],
    depth: usize,
) -> Result<(f64, f64), BoundaryError> {
    check_q(q)?;
    if digits.len() < depth || depth < 2 {
        return Err(BoundaryError::StreamTooShort);
    }
    let prefix = &digits[..depth];
    let value = eval_digits_sharp_f64(prefix, q);
    let odd_sum: i64 = prefix[..depth - 1]
        .iter()
        .step_by(2)
        .sum();
    let bound = q.powi((odd_sum - 1) as i32);
    Ok((value, bound))
}

/// One step of a tail-convergence run.
#[derive(Clone, Debug)]
pub struct TailStep {
    pub m: i64,
    pub value: f64,
    pub error: f64,
    /// Geometric tail bound `q^{S−1}/(1−q)`, where `S` is the sum of the
    /// odd-position digits of the step's approximating sequence.
    pub bound: f64,
}

/// Report of a tail-sequence convergence run.
#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub target: f64,
    pub steps: Vec<TailStep>,
    /// First `m` at which `|value − target|` dropped below `1e-6`.
    pub converged_by: Option<i64>,
}

/// Approach side for [`tail_limit_check`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Approach {
    Left,
    Right,
}

fn digits_i64(cf: &EvenCF) -> Result<Vec<i64>, BoundaryError> {
    cf.digits()
        .iter()
        .map(|d| d.to_i64().ok_or(BoundaryError::SearchCapExceeded))
        .collect()
}

/// Builds the approximating sequences of the limit theorem and evaluates
/// them at increasing `m`:
///
/// - right approach: `[a₁, …, a_{2n}−1, 1, m]` (or `[a₁, …, a_{2n−1}+1, m]`
///   when `a_{2n} = 1`), converging to the right deformation;
/// - left approach: `[a₁, …, a_{2n}, m]`, converging to the left
///   deformation; the empty base (`∞`) uses `[m]`, increasing to `1/(1−q)`.
pub fn tail_limit_check(
    base_cf: &EvenCF,
    side: Approach,
    q: f64,
    m_max: i64,
) -> Result<ConvergenceReport, BoundaryError> {
    check_q(q)?;
    let base = cf_value(base_cf);

    // Non-positive bases go through the increasing involution x ↦ −q⁻¹/x,
    // which maps them to positive rationals (0 ↦ ∞) preserving the
    // approach side; the tail theorem applies verbatim on the positive
    // side and errors transform exactly by the factor q⁻¹/(v·t).
    if base.signum() < 0 || (base.is_zero() && side == Approach::Left) {
        let mapped = Rational::new(-base.denom().clone(), base.numer().clone())
            .expect("involution of a finite rational");
        let pos = tail_limit_check(&to_even_cf(&mapped), side, q, m_max)?;
        let target = -1.0 / (q * pos.target);
        let mut steps = Vec::with_capacity(pos.steps.len());
        let mut converged_by = None;
        for step in &pos.steps {
            let value = -1.0 / (q * step.value);
            let error = (value - target).abs();
            let bound = step.bound / (q * step.value * pos.target);
            if converged_by.is_none() && error < 1e-6 {
                converged_by = Some(step.m);
            }
            steps.push(TailStep {
                m: step.m,
                value,
                error,
                bound,
            });
        }
        return Ok(ConvergenceReport {
            target,
            steps,
            converged_by,
        });
    }

    let digits = digits_i64(base_cf)?;
    let deform_side = match side {
        Approach::Left => Side::Flat,
        Approach::Right => Side::Sharp,
    };
    let (num, den) = deform(&base, deform_side)?;
    let target = {
        let n = num.eval_f64(q)?;
        let d = den.eval_f64(q)?;
        if d == 0.0 {
            f64::INFINITY
        } else {
            n / d
        }
    };

    let template: Vec<i64> = match side {
        Approach::Left => digits.clone(),
        Approach::Right => {
            if digits.is_empty() {
                return Err(BoundaryError::StreamTooShort);
            }
            let mut t = digits.clone();
            let last = *t.last().unwrap();
            if last == 1 {
                t.pop();
                *t.last_mut().unwrap() += 1;
            } else {
                *t.last_mut().unwrap() -= 1;
                t.push(1);
            }
            t
        }
    };

    let mut steps = Vec::new();
    let mut converged_by = None;
    for m in 1..=m_max {
        let mut seq = template.clone();
        seq.push(m);
        let value = eval_digits_sharp_f64(&seq, q);
        let error = (value - target).abs();
        let odd_sum: i64 = seq.iter().step_by(2).sum();
        let bound = q.powi((odd_sum - 1) as i32) / (1.0 - q);
        if converged_by.is_none() && error < 1e-6 {
            converged_by = Some(m);
        }
        steps.push(TailStep {
            m,
            value,
            error,
            bound,
        });
    }
    Ok(ConvergenceReport {
        target,
        steps,
        converged_by,
    })
}

/// Evaluates both deformations of `t` at `q` as extended reals.
pub fn interval_endpoints(t: &Rational, q: f64) -> Result<(f64, f64), BoundaryError> {
    let eval = |side| -> Result<f64, BoundaryError> {
        let (num, den) = deform(t, side)?;
        let n = num.eval_f64(q)?;
        let d = den.eval_f64(q)?;
        Ok(if d == 0.0 { f64::INFINITY } else { n / d })
    };
    Ok((eval(Side::Flat)?, eval(Side::Sharp)?))
}

/// Checks the order chain `[t]♭ < [t]♯ < [t′]♭ < [t′]♯` for rationals
/// `t < t′` (all inequalities strict on rational arguments).
///
/// Evaluated in exact arithmetic at the dyadic rational representing `q`:
/// intervals of large rationals have width `~q^{Σaᵢ}`, far below f64
/// resolution, so strictness is only decidable exactly.
pub fn order_check(t: &Rational, t_prime: &Rational, q: f64) -> Result<bool, BoundaryError> {
    check_q(q)?;
    let q = BigRational::from_f64(q).ok_or(BoundaryError::QOutOfRange(q))?;
    // `None` encodes +∞ (only the ♯ endpoint of ∞ itself).
    let lt = |a: &Option<BigRational>, b: &Option<BigRational>| match (a, b) {
        (Some(a), Some(b)) => a < b,
        (Some(_), None) => true,
        (None, _) => false,
    };
    let bf = endpoint_exact(t, Side::Flat, &q)?;
    let bs = endpoint_exact(t, Side::Sharp, &q)?;
    let pf = endpoint_exact(t_prime, Side::Flat, &q)?;
    let ps = endpoint_exact(t_prime, Side::Sharp, &q)?;
    Ok(lt(&bf, &bs) && lt(&bs, &pf) && lt(&pf, &ps))
}

/// Classification outcome kind.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BoundaryKind {
    /// Point of a closed interval `I_{q,r/s} = [[r/s]♭, [r/s]♯]`.
    IntervalPoint,
    /// Deformed irrational: reported as a continued-fraction prefix.
    Irrational,
}

/// Result of [`classify_boundary_point`].
#[derive(Clone, Debug)]
pub struct BoundaryClass {
    pub kind: BoundaryKind,
    pub rational: Option<Rational>,
    /// Position within the interval: 0 at the `♭` endpoint, 1 at `♯`.
    /// The unbounded interval of `∞` uses `1 − [∞]♭/p` instead.
    pub t: Option<f64>,
    pub cf_prefix: Option<Vec<i64>>,
}

const SEARCH_CAP: i64 = 1 << 40;

/// Exact endpoint evaluation at rational `q`: `None` encodes `∞`.
fn endpoint_exact(
    x: &Rational,
    side: Side,
    q: &BigRational,
) -> Result<Option<BigRational>, BoundaryError> {
    let (num, den) = deform(x, side)?;
    let n = num.eval_rational(q)?;
    let d = den.eval_rational(q)?;
    if d.is_zero() {
        Ok(None)
    } else {
        Ok(Some(n / d))
    }
}

/// Monotone digit search: finds the largest `n ≥ lo` such that the value
/// of `[prefix, n]` is still on the same side of `p` as `[prefix, lo]`,
/// by exponential bracketing and binary search. `increasing` selects the
/// direction of monotonicity in `n`.
///
/// Returns `(digit, value_at_digit, exact_hit)` where `exact_hit` is set
/// when some tested value matched `p` within `tol`.
fn search_digit(
    prefix: &[i64],
    p: &BigRational,
    q: &BigRational,
    lo: i64,
    increasing: bool,
    tol: &BigRational,
) -> Result<(i64, BigRational, bool), BoundaryError> {
    let eval = |n: i64| -> Option<BigRational> {
        let mut seq = prefix.to_vec();
        seq.push(n);
        eval_digits_sharp_exact(&seq, q)
    };
    let hit = |v: &BigRational| (v - p).abs() <= *tol;
    let below = |v: &BigRational| if increasing { v < p } else { v > p };

    // Precondition (checked by the caller via the limit): some digit ≥ lo
    // has value past p. Exponential bracketing first.
    let v_lo = eval(lo).ok_or(BoundaryError::SearchCapExceeded)?;
    if hit(&v_lo) {
        return Ok((lo, v_lo, true));
    }
    if !below(&v_lo) {
        // Even the first digit overshoots; cannot bracket.
        return Err(BoundaryError::SearchCapExceeded);
    }
    let mut step = 1i64;
    let mut last_good = lo;
    let mut last_good_val = v_lo;
    loop {
        let n = last_good.saturating_add(step);
        if n > SEARCH_CAP {
            return Err(BoundaryError::SearchCapExceeded);
        }
        let v = eval(n).ok_or(BoundaryError::SearchCapExceeded)?;
        if hit(&v) {
            return Ok((n, v, true));
        }
        if below(&v) {
            last_good = n;
            last_good_val = v;
            step = step.saturating_mul(2);
        } else {
            // Overshot: binary search in (last_good, n).
            let mut hi = n;
            while hi - last_good > 1 {
                let mid = last_good + (hi - last_good) / 2;
                let v = eval(mid).ok_or(BoundaryError::SearchCapExceeded)?;
                if hit(&v) {
                    return Ok((mid, v, true));
                }
                if below(&v) {
                    last_good = mid;
                    last_good_val = v;
                } else {
                    hi = mid;
                }
            }
            return Ok((last_good, last_good_val, false));
        }
    }
}

/// Greedy classification of a positive point `p` at exact rational `q`.
fn classify_positive(
    p: &BigRational,
    q: &BigRational,
    max_depth: usize,
    tol: &BigRational,
) -> Result<BoundaryClass, BoundaryError> {
    let mut prefix: Vec<i64> = Vec::new();
    // Upper bound from the previous (even) level: starts at +∞ (None).
    let mut upper_sharp: Option<BigRational> = None;

    for depth in 1..=max_depth {
        let odd_level = depth % 2 == 1;
        let prefix_value = seq_value(&prefix);
        let limit_side = if odd_level { Side::Flat } else { Side::Sharp };
        let limit = endpoint_exact(&prefix_value, limit_side, q)?;

        if odd_level {
            // Increasing search toward the left endpoint of the prefix value.
            let limit = limit.expect("left deformations are finite");
            if (&limit - p).abs() <= *tol {
                // Exactly the ♭ endpoint.
                return Ok(interval_point(&prefix_value, Some(0.0)));
            }
            if *p >= limit {
                // Inside the interval of the prefix value.
                if prefix.is_empty() {
                    // I_{q,∞} = [1/(1−q), ∞].
                    let t = if p.denom().is_zero() {
                        1.0
                    } else {
                        1.0 - (limit / p).to_f64().unwrap_or(0.0)
                    };
                    return Ok(interval_point(&Rational::infinity(), Some(t)));
                }
                let sharp = upper_sharp.clone().expect("set at the previous level");
                let t = ((p - &limit) / (&sharp - &limit)).to_f64();
                return Ok(interval_point(&prefix_value, t));
            }
            let lo = if prefix.is_empty() { 0 } else { 1 };
            let (digit, _value, exact) = search_digit(&prefix, p, q, lo, true, tol)?;
            if exact {
                let mut seq = prefix.clone();
                seq.push(digit);
                return Ok(interval_point(&seq_value(&seq), Some(1.0)));
            }
            prefix.push(digit);
        } else {
            // Decreasing search toward the right endpoint of the prefix value.
            let limit = limit.expect("prefix value is finite and positive");
            if (&limit - p).abs() <= *tol {
                return Ok(interval_point(&prefix_value, Some(1.0)));
            }
            let (digit, _value, exact) = search_digit(&prefix, p, q, 1, false, tol)?;
            if exact {
                let mut seq = prefix.clone();
                seq.push(digit);
                return Ok(interval_point(&seq_value(&seq), Some(1.0)));
            }
            // The new bracket's upper bound is the value at the chosen digit.
            let mut seq = prefix.clone();
            seq.push(digit);
            upper_sharp = eval_digits_sharp_exact(&seq, q);
            prefix.push(digit);
        }
    }
    Ok(BoundaryClass {
        kind: BoundaryKind::Irrational,
        rational: None,
        t: None,
        cf_prefix: Some(prefix),
    })
}

fn interval_point(x: &Rational, t: Option<f64>) -> BoundaryClass {
    BoundaryClass {
        kind: BoundaryKind::IntervalPoint,
        rational: Some(x.clone()),
        t,
        cf_prefix: None,
    }
}

/// Classical value of a digit list of any length (no even-expansion
/// invariants required).
fn seq_value(digits: &[i64]) -> Rational {
    let mut value = Rational::infinity();
    for &a in digits.iter().rev() {
        value = if value.is_infinite() {
            Rational::from_i64(a, 1)
        } else {
            Rational::new(
                BigInt::from(a) * value.numer() + value.denom(),
                value.numer().clone(),
            )
            .unwrap()
        };
    }
    value
}

/// Classifies a boundary point at exact rational `q ∈ (0,1)`: either a
/// point of some interval `I_{q,r/s}` (with its position `t`) or a
/// deformed irrational reported as a digit prefix of length `max_depth`.
///
/// Only the positive half is searched directly; non-positive `p` is
/// mapped through the involution `x ↦ −q⁻¹/x` (which exchanges the
/// positive and negative deformed rationals and sends `0 ↔ ∞`,
/// preserving `♭`/`♯` endpoints), classified, and mapped back via
/// `r/s ↦ −s/r`.
pub fn classify_boundary_point_exact(
    p: &BigRational,
    q: &BigRational,
    max_depth: usize,
    tol: &BigRational,
) -> Result<BoundaryClass, BoundaryError> {
    if !q.is_positive() || *q >= BigRational::one() {
        return Err(BoundaryError::QOutOfRange(q.to_f64().unwrap_or(f64::NAN)));
    }
    if p.is_positive() {
        return classify_positive(p, q, max_depth, tol);
    }
    // p ≤ 0: map to the positive half. p = 0 corresponds to ∞.
    if p.is_zero() {
        // 0 = [0]♯: the ♯ endpoint of the interval of 0.
        return Ok(interval_point(&Rational::zero(), Some(1.0)));
    }
    let mapped = -(q.recip()) / p;
    let mut class = classify_positive(&mapped, q, max_depth, tol)?;
    if let Some(r) = class.rational.take() {
        let negated = Rational::new(-r.denom().clone(), r.numer().clone())
            .expect("negated reciprocal of valid rational");
        class.rational = Some(negated);
    }
    if let Some(prefix) = class.cf_prefix.take() {
        // Digits of the mapped positive point; report them relative to the
        // mapped representative.
        class.cf_prefix = Some(prefix);
    }
    Ok(class)
}

/// Float front end: `p` and `q` are converted exactly to rationals
/// (every float is dyadic) and endpoint detection uses a `1e-12`
/// absolute tolerance.
pub fn classify_boundary_point(
    p: f64,
    q: f64,
    max_depth: usize,
) -> Result<BoundaryClass, BoundaryError> {
    check_q(q)?;
    if p.is_infinite() && p > 0.0 {
        return Ok(interval_point(&Rational::infinity(), Some(1.0)));
    }
    let p = BigRational::from_f64(p).ok_or(BoundaryError::QOutOfRange(p))?;
    let q = BigRational::from_f64(q).ok_or(BoundaryError::QOutOfRange(q))?;
    let tol = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)));
    classify_boundary_point_exact(&p, &q, max_depth, &tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(r: i64, s: i64) -> Rational {
        Rational::from_i64(r, s)
    }

    #[test]
    fn digit_sequence_rewriting_invariance() {
        // [.., a, 1] and [.., a+1] evaluate identically.
        for q in [0.3, 0.5, 0.7] {
            let a = eval_digits_sharp_f64(&[2, 1], q);
            let b = eval_digits_sharp_f64(&[3], q);
            assert!((a - b).abs() < 1e-12);
            let c = eval_digits_sharp_f64(&[1, 2, 1], q);
            let d = eval_digits_sharp_f64(&[1, 3], q);
            assert!((c - d).abs() < 1e-12);
        }
    }

    #[test]
    fn even_sequences_match_deformation() {
        for (r, s) in [(5, 2), (2, 3), (7, 3), (3, 1)] {
            let x = rat(r, s);
            let cf = to_even_cf(&x);
            let digits: Vec<i64> = cf
                .digits()
                .iter()
                .map(|d| d.to_i64().unwrap())
                .collect();
            for q in [0.3, 0.7] {
                let via_seq = eval_digits_sharp_f64(&digits, q);
                let (bf, bs) = interval_endpoints(&x, q).unwrap();
                let _ = bf;
                assert!((via_seq - bs).abs() < 1e-12, "{r}/{s} at q={q}");
            }
        }
    }

    #[test]
    fn q_irrational_stabilizes() {
        let golden: Vec<i64> = vec![1; 90];
        let (v40, bound40) = q_irrational(0.5, &golden, 40).unwrap();
        let (v80, _) = q_irrational(0.5, &golden, 80).unwrap();
        assert!((v40 - v80).abs() < 1e-9);
        assert!(bound40 > (v40 - v80).abs());

        let silver: Vec<i64> = vec![2; 90];
        let (v40, _) = q_irrational(0.5, &silver, 40).unwrap();
        let (v80, _) = q_irrational(0.5, &silver, 80).unwrap();
        assert!((v40 - v80).abs() < 1e-9);
    }

    #[test]
    fn tail_limits_five_halves() {
        let cf = to_even_cf(&rat(5, 2));
        for side in [Approach::Left, Approach::Right] {
            let report = tail_limit_check(&cf, side, 0.5, 40).unwrap();
            let last = report.steps.last().unwrap();
            assert!(last.error < 1e-8, "{side:?}: error {}", last.error);
            for step in &report.steps {
                assert!(
                    step.error <= step.bound + 1e-15,
                    "bound violated at m={}: err={} bound={}",
                    step.m,
                    step.error,
                    step.bound
                );
            }
        }
    }

    #[test]
    fn tail_limit_infinity() {
        // [m]♯ increases to 1/(1−q).
        let cf = to_even_cf(&Rational::infinity());
        let report = tail_limit_check(&cf, Approach::Left, 0.5, 60).unwrap();
        assert!((report.target - 2.0).abs() < 1e-12);
        let mut prev = f64::NEG_INFINITY;
        for step in &report.steps {
            // Strictly increasing until f64 rounding saturates at the limit.
            if step.error > 1e-15 {
                assert!(step.value > prev);
            } else {
                assert!(step.value >= prev);
            }
            prev = step.value;
        }
        assert!(report.steps.last().unwrap().error < 1e-9);
    }

    #[test]
    fn order_examples() {
        assert!(order_check(&rat(1, 2), &rat(2, 3), 0.3).unwrap());
        assert!(order_check(&Rational::zero(), &Rational::infinity(), 0.3).unwrap());
        assert!(order_check(&rat(-1, 1), &rat(1, 1), 0.7).unwrap());
    }

    #[test]
    fn classify_endpoints() {
        // p = eval([1/2]♯, 0.3) → rational 1/2 at t = 1.
        let (_, sharp) = interval_endpoints(&rat(1, 2), 0.3).unwrap();
        let class = classify_boundary_point(sharp, 0.3, 64).unwrap();
        assert_eq!(class.kind, BoundaryKind::IntervalPoint);
        assert_eq!(class.rational, Some(rat(1, 2)));
        assert!((class.t.unwrap() - 1.0).abs() < 1e-9);

        let (flat, _) = interval_endpoints(&rat(1, 2), 0.3).unwrap();
        let class = classify_boundary_point(flat, 0.3, 64).unwrap();
        assert_eq!(class.rational, Some(rat(1, 2)));
        assert!(class.t.unwrap().abs() < 1e-9);
    }

    #[test]
    fn classify_infinity_interval() {
        let class = classify_boundary_point(10.0, 0.3, 64).unwrap();
        assert_eq!(class.kind, BoundaryKind::IntervalPoint);
        assert_eq!(class.rational, Some(Rational::infinity()));
    }

    #[test]
    fn classify_irrational_recovers_digits() {
        // Golden-ratio digit stream [1,1,1,…] at q = 0.3.
        let golden: Vec<i64> = vec![1; 80];
        let (p, _) = q_irrational(0.3, &golden, 60).unwrap();
        let class = classify_boundary_point(p, 0.3, 12).unwrap();
        assert_eq!(class.kind, BoundaryKind::Irrational);
        assert_eq!(class.cf_prefix.unwrap(), vec![1i64; 12]);
    }

    #[test]
    fn classify_negative_point() {
        let (_, sharp) = interval_endpoints(&rat(-3, 2), 0.3).unwrap();
        let class = classify_boundary_point(sharp, 0.3, 64).unwrap();
        assert_eq!(class.kind, BoundaryKind::IntervalPoint);
        assert_eq!(class.rational, Some(rat(-3, 2)));
        assert!((class.t.unwrap() - 1.0).abs() < 1e-9);
    }
}
