//! The three-strand braid group B3: words, their images in `PSL₂(Z)` and
//! in the q-deformed group `PSL_{2,q}(Z)`, fractional-linear actions, and
//! the four-case continued normal form.
//!
//! The q-deformed generator matrices are
//!
//! ```text
//! σ₁,q = [ q⁻¹  −q⁻¹ ]      σ₂,q = [ 1    0  ]
//!        [  0     1  ]             [ 1   q⁻¹ ]
//! ```
//!
//! and a word acts by Möbius transformations with the **leftmost letter
//! applied last**, so that the continued-fraction braid
//! `β_a = σ₁^{−a₁} σ₂^{a₂} ⋯ σ₁^{−a_{2n−1}} σ₂^{a_{2n}}` sends `∞` to the
//! rational with even continued fraction `[a₁, …, a₂ₙ]`.

use crate::contfrac::{cf_value, to_even_cf, EvenCF, Rational};
use crate::qpoly::{LaurentPoly, QpolyError, RatFunc};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// A single braid generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gen {
    S1,
    S1Inv,
    S2,
    S2Inv,
}

impl Gen {
    pub fn inverse(self) -> Gen {
        match self {
            Gen::S1 => Gen::S1Inv,
            Gen::S1Inv => Gen::S1,
            Gen::S2 => Gen::S2Inv,
            Gen::S2Inv => Gen::S2,
        }
    }

    /// Generator index (1 or 2) and exponent sign (±1).
    pub fn index_sign(self) -> (u8, i64) {
        match self {
            Gen::S1 => (1, 1),
            Gen::S1Inv => (1, -1),
            Gen::S2 => (2, 1),
            Gen::S2Inv => (2, -1),
        }
    }
}

/// A word in the free group on `σ₁, σ₂`, stored free-reduced (no adjacent
/// inverse pairs). The braid relation is *not* applied eagerly; the
/// continued normal form handles it.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BraidWord {
    letters: Vec<Gen>,
}

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord::default()
    }

    /// Builds a word from letters, free-reducing.
    pub fn new(letters: impl IntoIterator<Item = Gen>) -> Self {
        let mut stack: Vec<Gen> = Vec::new();
        for g in letters {
            if stack.last() == Some(&g.inverse()) {
                stack.pop();
            } else {
                stack.push(g);
            }
        }
        BraidWord { letters: stack }
    }

    /// `σ_i^e` as a word (index 1 or 2, any integer exponent).
    pub fn generator_power(index: u8, exp: i64) -> Self {
        let g = match (index, exp >= 0) {
            (1, true) => Gen::S1,
            (1, false) => Gen::S1Inv,
            (2, true) => Gen::S2,
            (2, false) => Gen::S2Inv,
            _ => panic!("generator index must be 1 or 2"),
        };
        BraidWord {
            letters: vec![g; exp.unsigned_abs() as usize],
        }
    }

    /// The central element `ω = σ₂σ₁σ₂σ₁σ₂σ₁` raised to the power `n`.
    pub fn omega_power(n: i64) -> Self {
        let mut letters = Vec::new();
        if n >= 0 {
            for _ in 0..n {
                letters.extend([Gen::S2, Gen::S1, Gen::S2, Gen::S1, Gen::S2, Gen::S1]);
            }
        } else {
            for _ in 0..(-n) {
                letters.extend([
                    Gen::S1Inv,
                    Gen::S2Inv,
                    Gen::S1Inv,
                    Gen::S2Inv,
                    Gen::S1Inv,
                    Gen::S2Inv,
                ]);
            }
        }
        BraidWord { letters }
    }

    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other` (self's letters act later), free-reduced.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        BraidWord::new(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// Sum of generator exponents (the abelianization `B3 → Z`).
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|g| g.index_sign().1).sum()
    }

    /// The continued-fraction braid
    /// `β_a = σ₁^{−a₁} σ₂^{a₂} σ₁^{−a₃} ⋯ σ₂^{a_{2n}}`.
    pub fn cf_braid(cf: &EvenCF) -> BraidWord {
        use num_traits::ToPrimitive;
        let mut w = BraidWord::identity();
        for (i, a) in cf.digits().iter().enumerate() {
            let a = a.to_i64().expect("continued-fraction digit fits in i64");
            let piece = if i % 2 == 0 {
                BraidWord::generator_power(1, -a)
            } else {
                BraidWord::generator_power(2, a)
            };
            w = w.concat(&piece);
        }
        w
    }
}

impl fmt::Display for BraidWord {
    /// Renders in the CLI grammar, e.g. `s1^-2 s2^2`; the empty word is `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let mut runs: Vec<(u8, i64)> = Vec::new();
        for g in &self.letters {
            let (idx, sign) = g.index_sign();
            match runs.last_mut() {
                Some((i, e)) if *i == idx && e.signum() == sign => *e += sign,
                _ => runs.push((idx, sign)),
            }
        }
        let parts: Vec<String> = runs
            .iter()
            .map(|&(i, e)| {
                if e == 1 {
                    format!("s{i}")
                } else {
                    format!("s{i}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    /// Parses the whitespace-separated grammar `s1`, `s2`, optionally with
    /// `^<integer>` (e.g. `"s1^-2 s2^2"`); the leftmost token acts last.
    /// `e` alone denotes the empty word.
    fn from_str(text: &str) -> Result<Self, BraidError> {
        let mut word = BraidWord::identity();
        let trimmed = text.trim();
        if trimmed == "e" || trimmed.is_empty() {
            return Ok(word);
        }
        for token in trimmed.split_whitespace() {
            let (gen, exp) = match token.split_once('^') {
                Some((g, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| BraidError::Parse(token.to_string()))?;
                    (g, exp)
                }
                None => (token, 1),
            };
            let index = match gen {
                "s1" => 1,
                "s2" => 2,
                _ => return Err(BraidError::Parse(token.to_string())),
            };
            word = word.concat(&BraidWord::generator_power(index, exp));
        }
        Ok(word)
    }
}

/// Errors from braid-word parsing and normal-form computation.
#[derive(Debug, thiserror::Error)]
pub enum BraidError {
    #[error("cannot parse braid token {0:?}")]
    Parse(String),
    #[error("matrix is not ±σ₁^M at q=1; continued normal form failed")]
    NormalFormResidue,
    #[error("exponent-sum residue {0} is not divisible by 6")]
    ExponentResidue(i64),
    #[error(transparent)]
    Poly(#[from] QpolyError),
}

/// A 2×2 matrix over the Laurent ring, row-major `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2q {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    pub c: LaurentPoly,
    pub d: LaurentPoly,
}

impl Mat2q {
    pub fn identity() -> Self {
        Mat2q {
            a: LaurentPoly::one(),
            b: LaurentPoly::zero(),
            c: LaurentPoly::zero(),
            d: LaurentPoly::one(),
        }
    }

    pub fn new(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> Self {
        Mat2q { a, b, c, d }
    }

    /// Builds from rows of `(exponent, coefficient)` term lists.
    pub fn from_terms(
        a: &[(i64, i64)],
        b: &[(i64, i64)],
        c: &[(i64, i64)],
        d: &[(i64, i64)],
    ) -> Self {
        Mat2q {
            a: LaurentPoly::from_terms(a),
            b: LaurentPoly::from_terms(b),
            c: LaurentPoly::from_terms(c),
            d: LaurentPoly::from_terms(d),
        }
    }

    /// Matrix of a single generator.
    pub fn generator(g: Gen) -> Self {
        match g {
            Gen::S1 => Mat2q::from_terms(&[(-1, 1)], &[(-1, -1)], &[], &[(0, 1)]),
            Gen::S1Inv => Mat2q::from_terms(&[(1, 1)], &[(0, 1)], &[], &[(0, 1)]),
            Gen::S2 => Mat2q::from_terms(&[(0, 1)], &[], &[(0, 1)], &[(-1, 1)]),
            Gen::S2Inv => Mat2q::from_terms(&[(0, 1)], &[], &[(1, -1)], &[(1, 1)]),
        }
    }

    pub fn mul(&self, rhs: &Mat2q) -> Mat2q {
        Mat2q {
            a: &(&self.a * &rhs.a) + &(&self.b * &rhs.c),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.d),
            c: &(&self.c * &rhs.a) + &(&self.d * &rhs.c),
            d: &(&self.c * &rhs.b) + &(&self.d * &rhs.d),
        }
    }

    pub fn det(&self) -> LaurentPoly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// Scales every entry by the polynomial `u`.
    pub fn scale(&self, u: &LaurentPoly) -> Mat2q {
        Mat2q {
            a: &self.a * u,
            b: &self.b * u,
            c: &self.c * u,
            d: &self.d * u,
        }
    }

    /// Inverse for matrices whose determinant is a unit `± q^k`; returns
    /// `None` otherwise.
    pub fn inverse_unit_det(&self) -> Option<Mat2q> {
        let det = self.det();
        let (k, s) = det.unit_quotient(&LaurentPoly::one())?;
        // det = s·q^k, so 1/det = s·q^{−k}.
        let inv_det = LaurentPoly::monomial_big(-k, BigInt::from(s));
        Some(Mat2q {
            a: &self.d * &inv_det,
            b: &(-&self.b) * &inv_det,
            c: &(-&self.c) * &inv_det,
            d: &self.a * &inv_det,
        })
    }

    /// Componentwise equality modulo one common factor `± q^k`.
    pub fn equal_up_to_unit(&self, other: &Mat2q) -> bool {
        let mine = [&self.a, &self.b, &self.c, &self.d];
        let theirs = [&other.a, &other.b, &other.c, &other.d];
        // Find the common unit from the first pair of nonzero entries.
        let mut unit: Option<(BigInt, i8)> = None;
        for (x, y) in mine.iter().zip(theirs.iter()) {
            match (x.is_zero(), y.is_zero()) {
                (true, true) => continue,
                (true, false) | (false, true) => return false,
                (false, false) => {
                    unit = x.unit_quotient(y);
                    break;
                }
            }
        }
        let Some((k, s)) = unit else {
            return true; // both matrices are zero
        };
        let c = BigInt::from(s);
        mine.iter()
            .zip(theirs.iter())
            .all(|(x, y)| **x == y.mul_unit(&k, &c))
    }

    /// Integer specialization at `q = 1`.
    pub fn at_one(&self) -> Mat2z {
        Mat2z {
            a: self.a.eval_one(),
            b: self.b.eval_one(),
            c: self.c.eval_one(),
            d: self.d.eval_one(),
        }
    }

    /// Fractional linear action `z ↦ (az + b)/(cz + d)` on symbolic values,
    /// with `∞ ↦ a/c`.
    pub fn mobius(&self, z: &RatFunc) -> Result<RatFunc, QpolyError> {
        let num = &(&self.a * z.num()) + &(&self.b * z.den());
        let den = &(&self.c * z.num()) + &(&self.d * z.den());
        RatFunc::new(num, den)
    }

    /// Numeric fractional linear action at a fixed positive `q`.
    pub fn mobius_f64(&self, z: f64, q: f64) -> Result<f64, QpolyError> {
        let (a, b, c, d) = (
            self.a.eval_f64(q)?,
            self.b.eval_f64(q)?,
            self.c.eval_f64(q)?,
            self.d.eval_f64(q)?,
        );
        if z.is_infinite() {
            return Ok(if c == 0.0 { f64::INFINITY } else { a / c });
        }
        let den = c * z + d;
        if den == 0.0 {
            Ok(f64::INFINITY)
        } else {
            Ok((a * z + b) / den)
        }
    }
}

/// A 2×2 integer matrix (the `q = 1` specialization, i.e. `SL₂(Z)`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2z {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2z {
    pub fn identity() -> Self {
        Mat2z {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn mul(&self, rhs: &Mat2z) -> Mat2z {
        Mat2z {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Inverse of a determinant-±1 matrix.
    pub fn inverse(&self) -> Mat2z {
        let det = self.det();
        assert!(det.clone().abs().is_one(), "matrix not in GL₂(Z)");
        Mat2z {
            a: &self.d * &det,
            b: -&self.b * &det,
            c: -&self.c * &det,
            d: &self.a * &det,
        }
    }

    /// Image of `∞` under the Möbius action: the first column `a/c`.
    pub fn image_of_infinity(&self) -> Rational {
        Rational::new(self.a.clone(), self.c.clone()).expect("invertible matrix column")
    }
}

/// Computes the product of q-deformed generator matrices for `w`, with the
/// leftmost letter as the outermost (leftmost) factor.
pub fn word_matrix_q(w: &BraidWord) -> Mat2q {
    let mut m = Mat2q::identity();
    for g in w.letters() {
        m = m.mul(&Mat2q::generator(*g));
    }
    m
}

/// Integer (`q = 1`) specialization of [`word_matrix_q`].
pub fn word_matrix_z(w: &BraidWord) -> Mat2z {
    word_matrix_q(w).at_one()
}

/// The four-case continued normal form `β = (CF braid) · σ₁^M · ω^N`:
///
/// - form 1: CF braid of a positive-dichotomy expansion;
/// - form 2: negative dichotomy;
/// - form 3: no CF braid (`β = σ₁^M ω^N`);
/// - form 4: `β = σ₁σ₂ · σ₁^M ω^N`.
///
/// Strictness restricts `M`: form 1 needs `M ≤ 0`, form 2 `M ≥ 0`, form 3
/// is always strict, form 4 needs `M ≤ 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm {
    pub form: u8,
    pub digits: EvenCF,
    pub m: i64,
    pub n: i64,
    /// Shift bookkeeping from [`strictify`]: the original braid's image of
    /// `P₁` equals the strict braid's image shifted by `[−absorbed]`.
    pub absorbed: i64,
}

impl NormalForm {
    pub fn is_strict(&self) -> bool {
        match self.form {
            1 | 4 => self.m <= 0,
            2 => self.m >= 0,
            3 => true,
            _ => unreachable!("form is 1..=4"),
        }
    }

    /// The CF-braid prefix of this form (forms 3 and 4 have fixed prefixes).
    pub fn prefix(&self) -> BraidWord {
        match self.form {
            3 => BraidWord::identity(),
            4 => BraidWord::new([Gen::S1, Gen::S2]),
            _ => BraidWord::cf_braid(&self.digits),
        }
    }

    /// Reassembles the word `prefix · σ₁^M · ω^N`.
    pub fn to_word(&self) -> BraidWord {
        self.prefix()
            .concat(&BraidWord::generator_power(1, self.m))
            .concat(&BraidWord::omega_power(self.n))
    }

    /// The rational label of the form's prefix: `∞` for form 3, `0` for
    /// form 4, else the value of the digit sequence.
    pub fn label(&self) -> Rational {
        match self.form {
            3 => Rational::infinity(),
            4 => Rational::zero(),
            _ => cf_value(&self.digits),
        }
    }
}

/// Decomposes a braid word into its continued normal form.
///
/// The algorithm reads the image `r/s` of `∞` off the `q = 1` matrix,
/// takes the even continued fraction of `r/s`, and solves
/// `β_a⁻¹ · β = ± σ₁^M` in `PSL₂(Z)`; `N` is then recovered from the
/// exponent sums (the exponent sum of `ω` is 6).
pub fn continued_normal_form(w: &BraidWord) -> Result<NormalForm, BraidError> {
    use num_traits::ToPrimitive;
    let mat = word_matrix_z(w);
    let label = mat.image_of_infinity();
    let (form, cf) = if label.is_infinite() {
        (3, EvenCF::new(vec![]).unwrap())
    } else if label.is_zero() {
        (4, to_even_cf(&label)) // [−1, 1]; the prefix σ₁σ₂ is its CF braid
    } else if label.signum() > 0 {
        (1, to_even_cf(&label))
    } else {
        (2, to_even_cf(&label))
    };
    let prefix = BraidWord::cf_braid(&cf);
    let residue = word_matrix_z(&prefix).inverse().mul(&mat);
    // residue must be ± [[1, −M], [0, 1]].
    if !residue.c.is_zero() || residue.a != residue.d || !residue.a.clone().abs().is_one() {
        return Err(BraidError::NormalFormResidue);
    }
    let m = (-&residue.b * &residue.a)
        .to_i64()
        .ok_or(BraidError::NormalFormResidue)?;
    let residue_exp = w.exponent_sum() - prefix.exponent_sum() - m;
    if residue_exp % 6 != 0 {
        return Err(BraidError::ExponentResidue(residue_exp));
    }
    Ok(NormalForm {
        form,
        digits: cf,
        m,
        n: residue_exp / 6,
        absorbed: 0,
    })
}

/// Absorbs surplus `σ₁` powers into shift bookkeeping, producing a strict
/// normal form representing a braid with the same image of `P₁` up to
/// shift (`σ₁^M ω^N P₁ = P₁[−2N−M]`, so dropping `σ₁^k` costs a shift of
/// `[−k]` on the image).
pub fn strictify(nf: &NormalForm) -> NormalForm {
    let mut out = nf.clone();
    if !out.is_strict() {
        // form 1/4 with M > 0, or form 2 with M < 0: absorb all of M.
        out.absorbed += out.m;
        out.m = 0;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn braid_relation_in_matrices() {
        let lhs = word_matrix_q(&word("s1 s2 s1"));
        let rhs = word_matrix_q(&word("s2 s1 s2"));
        assert!(lhs.equal_up_to_unit(&rhs));
    }

    #[test]
    fn pinned_word_matrix() {
        // σ₁⁻²σ₂² = [[q²+q+2+q⁻¹, (q+1)q⁻²], [1+q⁻¹, q⁻²]]
        let m = word_matrix_q(&word("s1^-2 s2^2"));
        let expect = Mat2q::from_terms(
            &[(2, 1), (1, 1), (0, 2), (-1, 1)],
            &[(-1, 1), (-2, 1)],
            &[(0, 1), (-1, 1)],
            &[(-2, 1)],
        );
        assert_eq!(m, expect);
        assert_eq!(word_matrix_q(&BraidWord::identity()), Mat2q::identity());
    }

    #[test]
    fn generator_inverses_cancel() {
        for g in [Gen::S1, Gen::S2] {
            let prod = Mat2q::generator(g).mul(&Mat2q::generator(g.inverse()));
            assert_eq!(prod, Mat2q::identity());
        }
    }

    #[test]
    fn mobius_examples() {
        let id = Mat2q::identity();
        let x = RatFunc::new(
            LaurentPoly::constant(7),
            LaurentPoly::constant(3),
        )
        .unwrap();
        assert!(id.mobius(&x).unwrap().fraction_eq(&x));

        // σ₁⁻¹σ₂ = [[q+1, q⁻¹], [1, q⁻¹]] sends ∞ ↦ 1+q and 1/(1−q) ↦ 1+q².
        let m = word_matrix_q(&word("s1^-1 s2"));
        let expect =
            Mat2q::from_terms(&[(1, 1), (0, 1)], &[(-1, 1)], &[(0, 1)], &[(-1, 1)]);
        assert_eq!(m, expect);
        let inf_img = m.mobius(&RatFunc::inf()).unwrap();
        assert!(inf_img.fraction_eq(
            &RatFunc::from_poly(LaurentPoly::from_terms(&[(0, 1), (1, 1)]))
        ));
        let flat_inf = RatFunc::new(
            LaurentPoly::one(),
            LaurentPoly::from_terms(&[(0, 1), (1, -1)]),
        )
        .unwrap();
        let img = m.mobius(&flat_inf).unwrap();
        assert!(img.fraction_eq(
            &RatFunc::from_poly(LaurentPoly::from_terms(&[(0, 1), (2, 1)]))
        ));
    }

    #[test]
    fn cf_braid_sends_infinity_to_value() {
        // mobius(word_matrix(β_a), ∞) = cf_value(a) at q = 1.
        for digits in [
            vec![2i64, 2],
            vec![1, 1],
            vec![0, 1, 1, 1],
            vec![-1, -2],
            vec![3, 1, 2, 4],
            vec![-2, -3, -1, -1],
        ] {
            let cf = EvenCF::from_i64(&digits);
            let w = BraidWord::cf_braid(&cf);
            let img = word_matrix_z(&w).image_of_infinity();
            assert_eq!(img, cf_value(&cf), "digits {digits:?}");
        }
    }

    #[test]
    fn normal_form_examples() {
        let nf = continued_normal_form(&word("s1^-2 s2^2")).unwrap();
        assert_eq!(
            (nf.form, nf.m, nf.n),
            (1, 0, 0)
        );
        assert_eq!(nf.digits, EvenCF::from_i64(&[2, 2]));

        let omega = continued_normal_form(&word("s2 s1 s2 s1 s2 s1")).unwrap();
        assert_eq!((omega.form, omega.m, omega.n), (3, 0, 1));

        let s1_5 = continued_normal_form(&word("s1^5")).unwrap();
        assert_eq!((s1_5.form, s1_5.m, s1_5.n), (3, 5, 0));

        let f4 = continued_normal_form(&word("s1 s2")).unwrap();
        assert_eq!((f4.form, f4.m, f4.n), (4, 0, 0));
    }

    #[test]
    fn normal_form_round_trip_small_words() {
        // Reassembled form matches the input's matrix up to unit and its
        // exponent sum exactly.
        let gens = [Gen::S1, Gen::S1Inv, Gen::S2, Gen::S2Inv];
        let mut words = vec![BraidWord::identity()];
        for _ in 0..4 {
            let mut next = Vec::new();
            for w in &words {
                for g in gens {
                    next.push(w.concat(&BraidWord::new([g])));
                }
            }
            words.extend(next.clone());
        }
        for w in words {
            let nf = continued_normal_form(&w).unwrap();
            let re = nf.to_word();
            assert_eq!(re.exponent_sum(), w.exponent_sum(), "word {w}");
            assert!(
                word_matrix_q(&re).equal_up_to_unit(&word_matrix_q(&w)),
                "word {w} vs {re}"
            );
        }
    }

    #[test]
    fn strictify_examples() {
        let nf = NormalForm {
            form: 1,
            digits: EvenCF::from_i64(&[2, 2]),
            m: 3,
            n: 0,
            absorbed: 0,
        };
        let s = strictify(&nf);
        assert_eq!((s.m, s.absorbed), (0, 3));
        assert!(s.is_strict());

        let f3 = NormalForm {
            form: 3,
            digits: EvenCF::new(vec![]).unwrap(),
            m: -2,
            n: 1,
            absorbed: 0,
        };
        assert_eq!(strictify(&f3), f3);
    }

    #[test]
    fn parse_and_display() {
        let w = word("s1^-2 s2^2");
        assert_eq!(w.to_string(), "s1^-2 s2^2");
        assert_eq!(word("e"), BraidWord::identity());
        assert_eq!(word("s1 s1^-1"), BraidWord::identity());
        assert!("s3".parse::<BraidWord>().is_err());
    }
}
