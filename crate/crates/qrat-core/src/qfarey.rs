//! The q-deformed Farey tessellation: symbolic generation, numeric
//! evaluation, and SVG rendering of the semicircle picture.
//!
//! Every edge of the tessellation carries a label `q^e`. An edge with
//! label `q^{k−1}` joining `R/S` (left) to `R′/S′` (right) is completed to
//! a triangle with middle vertex
//!
//! ```text
//! (R + q^k R′) / (S + q^k S′),
//! ```
//!
//! bottom-left edge labelled `1` and bottom-right edge labelled `q^k`.
//! The positive half starts from the edge `0/1 — 1/0` labelled `q⁻¹`; its
//! vertex set is exactly the set of right q-rationals. The negative half
//! is the image of the positive half under the order-preserving involution
//! `(R, S) ↦ (−S, qR)` (value `x ↦ −q⁻¹/x`), which carries the initial
//! edge to `−1/0 — 0/q`.
//!
//! The module also produces the numeric triangle sequences
//! `T_n = (β_a σ₁⁻¹ β_a⁻¹)ⁿ β_a T_A` and
//! `T′_n = (β′_a σ₂ β′_a⁻¹)ⁿ β′_a T_A` (with `β′_a = β_a σ₂⁻¹ σ₁⁻¹` and
//! `T_A = (0, 1, ∞)`): the primed triangles shrink to a point while the
//! unprimed ones converge to the segment between the left and right
//! deformations of the underlying rational.

use crate::braidcore::{word_matrix_q, BraidWord, Mat2q};
use crate::contfrac::{to_even_cf, Rational};
use crate::qpoly::{LaurentPoly, QpolyError, RatFunc};
use std::io::Write;
use std::path::Path;

/// Errors from tessellation generation and rendering.
#[derive(Debug, thiserror::Error)]
pub enum FareyError {
    #[error("depth must be at least 1")]
    Depth,
    #[error("q must lie in (0, 1) for rendering")]
    Domain,
    #[error("triangle sequences need 0 < x < infinity and q > 0")]
    Range,
    #[error("polynomial arithmetic: {0}")]
    Poly(#[from] QpolyError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

/// Which half of the boundary the tessellation covers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Half {
    Positive,
    Negative,
}

/// One q-deformed Farey triangle, with exact rational-function vertices
/// and the exponents of its three edge labels.
#[derive(Clone, Debug)]
pub struct QFareyTriangle {
    pub left: RatFunc,
    pub middle: RatFunc,
    pub right: RatFunc,
    /// Exponent `k−1` of the parent (top) edge label.
    pub top_label_exp: i64,
    /// Exponent of the bottom-left edge label; always `0`.
    pub left_label_exp: i64,
    /// Exponent `k` of the bottom-right edge label.
    pub right_label_exp: i64,
    /// Generation at which the triangle was created (`1` for the first).
    pub depth: u32,
}

/// A breadth-first q-deformed Farey tessellation of one half.
#[derive(Clone, Debug)]
pub struct Tessellation {
    pub half: Half,
    pub depth: u32,
    pub triangles: Vec<QFareyTriangle>,
}

/// A tessellation edge as a pair of projective vertex coordinates.
struct Edge {
    r: LaurentPoly,
    s: LaurentPoly,
    rp: LaurentPoly,
    sp: LaurentPoly,
    exp: i64,
}

/// Converts positive-half projective coordinates `(R, S)` into a vertex of
/// the requested half; the negative half applies `(R, S) ↦ (−S, qR)`.
fn vertex(half: Half, r: &LaurentPoly, s: &LaurentPoly) -> Result<RatFunc, QpolyError> {
    match half {
        Half::Positive => RatFunc::new(r.clone(), s.clone()),
        Half::Negative => RatFunc::new(-s.clone(), &LaurentPoly::q() * r),
    }
}

/// Expands the initial edge of the requested half breadth-first for
/// `depth` generations.
pub fn generate(half: Half, depth: u32) -> Result<Tessellation, FareyError> {
    if depth < 1 {
        return Err(FareyError::Depth);
    }
    let mut frontier = vec![Edge {
        r: LaurentPoly::zero(),
        s: LaurentPoly::one(),
        rp: LaurentPoly::one(),
        sp: LaurentPoly::zero(),
        exp: -1,
    }];
    let mut triangles = Vec::new();
    for d in 1..=depth {
        let mut next = Vec::with_capacity(2 * frontier.len());
        for e in frontier {
            let k = e.exp + 1;
            let qk = LaurentPoly::q_pow(k);
            let mr = &e.r + &(&qk * &e.rp);
            let ms = &e.s + &(&qk * &e.sp);
            triangles.push(QFareyTriangle {
                left: vertex(half, &e.r, &e.s)?,
                middle: vertex(half, &mr, &ms)?,
                right: vertex(half, &e.rp, &e.sp)?,
                top_label_exp: k - 1,
                left_label_exp: 0,
                right_label_exp: k,
                depth: d,
            });
            next.push(Edge {
                r: e.r.clone(),
                s: e.s.clone(),
                rp: mr.clone(),
                sp: ms.clone(),
                exp: 0,
            });
            next.push(Edge {
                r: mr,
                s: ms,
                rp: e.rp,
                sp: e.sp,
                exp: k,
            });
        }
        frontier = next;
    }
    Ok(Tessellation {
        half,
        depth,
        triangles,
    })
}

impl Tessellation {
    /// All distinct edges as `(left, right, generation)`, the initial edge
    /// at generation `0` and each triangle contributing its two bottom
    /// edges. Order follows the breadth-first construction.
    pub fn edges(&self) -> Vec<(&RatFunc, &RatFunc, u32)> {
        let mut out = Vec::with_capacity(1 + 2 * self.triangles.len());
        if let Some(first) = self.triangles.first() {
            out.push((&first.left, &first.right, 0));
        }
        for t in &self.triangles {
            out.push((&t.left, &t.middle, t.depth));
            out.push((&t.middle, &t.right, t.depth));
        }
        out
    }
}

/// Renders the tessellation as semicircles on a horizontal axis. Finite
/// vertices land at `scale · value(q)`; edges with an infinite endpoint
/// become vertical rays. Line width decreases with generation; output is
/// deterministic for fixed inputs.
pub fn render_svg(
    t: &Tessellation,
    q: f64,
    path: impl AsRef<Path>,
    scale: f64,
) -> Result<(), FareyError> {
    if !(q > 0.0 && q < 1.0) {
        return Err(FareyError::Domain);
    }
    let edges = t.edges();
    let mut xs = Vec::new();
    for (a, b, depth) in &edges {
        xs.push((scale * a.eval_f64(q)?, scale * b.eval_f64(q)?, *depth));
    }
    let finite: Vec<f64> = xs
        .iter()
        .flat_map(|&(a, b, _)| [a, b])
        .filter(|v| v.is_finite())
        .collect();
    let lo = finite.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = finite.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let height = ((hi - lo) / 2.0).max(scale / 2.0);
    let margin = 0.05 * (hi - lo).max(1.0);

    let mut svg = String::new();
    svg.push_str(&format!("<!-- qrat {} -->\n", env!("CARGO_PKG_VERSION")));
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        lo - margin,
        -height - margin,
        (hi - lo) + 2.0 * margin,
        height + 2.0 * margin
    ));
    svg.push_str(&format!(
        "<line x1=\"{}\" y1=\"0\" x2=\"{}\" y2=\"0\" stroke=\"black\" stroke-width=\"0.05\"/>\n",
        lo - margin,
        hi + margin
    ));
    for (a, b, depth) in xs {
        let width = 0.4 * 0.75f64.powi(depth as i32);
        let d = if a.is_finite() && b.is_finite() {
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            let r = (b - a) / 2.0;
            format!("M {} 0 A {} {} 0 0 1 {} 0", a, r, r, b)
        } else {
            // One endpoint on the boundary at infinity: a vertical ray.
            let x = if a.is_finite() { a } else { b };
            format!("M {} 0 L {} {}", x, x, -height)
        };
        svg.push_str(&format!(
            "<path d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>\n",
            d, width
        ));
    }
    svg.push_str("</svg>\n");
    let mut f = std::fs::File::create(path)?;
    f.write_all(svg.as_bytes())?;
    Ok(())
}

/// Numeric vertex triples of the triangle sequences `T_n` and `T′_n`.
#[derive(Clone, Debug)]
pub struct TriangleSequences {
    /// `T_n` for `n = 0..=n_max`, as images of `(0, 1, ∞)`.
    pub t: Vec<[f64; 3]>,
    /// `T′_n` for `n = 0..=n_max`.
    pub t_prime: Vec<[f64; 3]>,
}

/// Diameter of a numeric triangle: the largest pairwise distance, infinite
/// when a vertex sits at the boundary point at infinity.
pub fn triangle_diameter(tri: &[f64; 3]) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..3 {
        for j in (i + 1)..3 {
            d = d.max((tri[i] - tri[j]).abs());
        }
    }
    d
}

impl TriangleSequences {
    pub fn t_diameters(&self) -> Vec<f64> {
        self.t.iter().map(triangle_diameter).collect()
    }

    pub fn t_prime_diameters(&self) -> Vec<f64> {
        self.t_prime.iter().map(triangle_diameter).collect()
    }

    /// Smallest and largest vertex of the final `T` triangle.
    pub fn t_endpoints(&self) -> (f64, f64) {
        let last = self.t.last().expect("non-empty sequence");
        let lo = last.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = last.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        (lo, hi)
    }
}

fn orbit(start: [f64; 3], step: &Mat2q, q: f64, n_max: usize) -> Result<Vec<[f64; 3]>, FareyError> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut tri = start;
    out.push(tri);
    for _ in 0..n_max {
        for v in &mut tri {
            *v = step.mobius_f64(*v, q)?;
        }
        out.push(tri);
    }
    Ok(out)
}

/// Evaluates the triangle sequences of `x = r/s` at a numeric `q`.
pub fn triangle_sequences(
    x: &Rational,
    q: f64,
    n_max: usize,
) -> Result<TriangleSequences, FareyError> {
    if x.is_infinite() || x.signum() <= 0 || !(q > 0.0) || !q.is_finite() {
        return Err(FareyError::Range);
    }
    let beta = BraidWord::cf_braid(&to_even_cf(x));
    let beta_prime = beta
        .concat(&BraidWord::generator_power(2, -1))
        .concat(&BraidWord::generator_power(1, -1));
    let base = word_matrix_q(&beta);
    let base_prime = word_matrix_q(&beta_prime);
    let step = word_matrix_q(
        &beta
            .concat(&BraidWord::generator_power(1, -1))
            .concat(&beta.inverse()),
    );
    let step_prime = word_matrix_q(
        &beta_prime
            .concat(&BraidWord::generator_power(2, 1))
            .concat(&beta_prime.inverse()),
    );
    let mut t0 = [0.0, 1.0, f64::INFINITY];
    let mut t0p = t0;
    for v in &mut t0 {
        *v = base.mobius_f64(*v, q)?;
    }
    for v in &mut t0p {
        *v = base_prime.mobius_f64(*v, q)?;
    }
    Ok(TriangleSequences {
        t: orbit(t0, &step, q, n_max)?,
        t_prime: orbit(t0p, &step_prime, q, n_max)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::LaurentPoly;
    use crate::qrationals::{deform, Side};

    fn sharp(r: i64, s: i64) -> RatFunc {
        let (n, d) = deform(&Rational::from_i64(r, s), Side::Sharp).unwrap();
        RatFunc::new(n, d).unwrap()
    }

    #[test]
    fn first_triangle() {
        let t = generate(Half::Positive, 1).unwrap();
        assert_eq!(t.triangles.len(), 1);
        let tri = &t.triangles[0];
        assert!(tri.left.is_zero());
        assert!(tri.middle.fraction_eq(&RatFunc::from_poly(LaurentPoly::one())));
        assert!(tri.right.is_inf());
        assert_eq!(tri.top_label_exp, -1);
        assert_eq!(tri.left_label_exp, 0);
        assert_eq!(tri.right_label_exp, 0);
        assert!(matches!(generate(Half::Positive, 0), Err(FareyError::Depth)));
    }

    #[test]
    fn second_generation_middles() {
        let t = generate(Half::Positive, 2).unwrap();
        assert_eq!(t.triangles.len(), 3);
        // Edge (0, 1) has label q⁰, so k = 1 and the mediant is q/(1+q).
        let lower = &t.triangles[1];
        assert!(lower.middle.fraction_eq(&sharp(1, 2)));
        assert_eq!(lower.right_label_exp, 1);
        // Edge (1, ∞) likewise produces 1 + q.
        let upper = &t.triangles[2];
        assert!(upper.middle.fraction_eq(&sharp(2, 1)));
    }

    #[test]
    fn vertices_are_right_deformations() {
        use num_traits::Zero;
        for half in [Half::Positive, Half::Negative] {
            let t = generate(half, 6).unwrap();
            for tri in &t.triangles {
                for v in [&tri.left, &tri.middle, &tri.right] {
                    assert_eq!(tri.left_label_exp, 0);
                    if v.is_inf() {
                        continue;
                    }
                    if v.is_zero() {
                        continue;
                    }
                    let (rn, rd) = (v.num().eval_one(), v.den().eval_one());
                    assert!(!rd.is_zero() || !rn.is_zero());
                    let classical = Rational::new(rn, rd).unwrap();
                    let (n, d) = deform(&classical, Side::Sharp).unwrap();
                    assert!(
                        v.fraction_eq(&RatFunc::new(n, d).unwrap()),
                        "vertex {v} is not the right deformation of {classical}"
                    );
                }
            }
        }
    }

    #[test]
    fn negative_half_mirrors_positive() {
        let t = generate(Half::Negative, 2).unwrap();
        let first = &t.triangles[0];
        assert!(first.left.is_inf()); // −1/0
        assert!(first.right.is_zero()); // 0/q
        assert!(first.middle.fraction_eq(&sharp(-1, 1)));
        // All finite nonzero vertices evaluate negative.
        for tri in &t.triangles {
            for v in [&tri.left, &tri.middle, &tri.right] {
                if !v.is_inf() && !v.is_zero() {
                    assert!(v.eval_f64(0.5).unwrap() < 0.0);
                }
            }
        }
    }

    #[test]
    fn svg_pins_figure_coordinates() {
        let dir = std::env::temp_dir();
        let p3 = dir.join("qfarey_q03.svg");
        let p7 = dir.join("qfarey_q07.svg");
        let t4 = generate(Half::Positive, 4).unwrap();
        render_svg(&t4, 0.3, &p3, 5.0).unwrap();
        let svg3 = std::fs::read_to_string(&p3).unwrap();
        for (r, s, pinned) in [
            (1, 2, 1.1538461538461537),
            (1, 3, 0.32374100719424453),
            (2, 3, 1.4028776978417266),
        ] {
            let val = 5.0 * sharp(r, s).eval_f64(0.3).unwrap();
            assert!((val - pinned).abs() < 1e-12);
            assert!(svg3.contains(&format!("{val}")), "missing endpoint {val}");
        }
        let t2 = generate(Half::Positive, 2).unwrap();
        render_svg(&t2, 0.7, &p7, 5.0).unwrap();
        let svg7 = std::fs::read_to_string(&p7).unwrap();
        let val = 5.0 * sharp(1, 2).eval_f64(0.7).unwrap();
        assert!((val - 2.058823529411765).abs() < 1e-12);
        assert!(svg7.contains(&format!("{val}")));
        // Determinism: a second render is byte-identical.
        let p3b = dir.join("qfarey_q03_again.svg");
        render_svg(&t4, 0.3, &p3b, 5.0).unwrap();
        assert_eq!(svg3, std::fs::read_to_string(&p3b).unwrap());
        assert!(matches!(
            render_svg(&t2, 1.5, &p7, 5.0),
            Err(FareyError::Domain)
        ));
        assert!(matches!(
            render_svg(&t2, 0.5, dir.join("no-such-dir").join("x.svg"), 5.0),
            Err(FareyError::Io(_))
        ));
    }

    #[test]
    fn depth_one_has_three_arcs() {
        let dir = std::env::temp_dir();
        let p = dir.join("qfarey_depth1.svg");
        let t = generate(Half::Positive, 1).unwrap();
        render_svg(&t, 0.5, &p, 5.0).unwrap();
        let svg = std::fs::read_to_string(&p).unwrap();
        assert_eq!(svg.matches("<path").count(), 3);
    }

    #[test]
    fn sequences_converge_at_one() {
        let seqs = triangle_sequences(&Rational::from_i64(1, 1), 0.5, 60).unwrap();
        let dps = seqs.t_prime_diameters();
        for w in dps.windows(2) {
            assert!(w[1] <= w[0] + 1e-15);
        }
        assert!(dps[40] < 1e-6);
        let (lo, hi) = seqs.t_endpoints();
        assert!((lo - 0.5).abs() < 1e-6); // eval of [1]♭ = q
        assert!((hi - 1.0).abs() < 1e-6); // eval of [1]♯ = 1
    }

    #[test]
    fn sequences_bracket_deformed_curve() {
        let x = Rational::from_i64(5, 2);
        let q = 0.3;
        // The sharp endpoint is a repelling fixed point of the step map, so
        // roundoff drifts the triangle off it for large n; n = 12 leaves
        // both endpoints within 1e-6.
        let seqs = triangle_sequences(&x, q, 12).unwrap();
        let flat = {
            let (n, d) = deform(&x, Side::Flat).unwrap();
            RatFunc::new(n, d).unwrap().eval_f64(q).unwrap()
        };
        let sharp_v = sharp(5, 2).eval_f64(q).unwrap();
        let (lo, hi) = seqs.t_endpoints();
        assert!((lo - flat).abs() < 1e-6);
        assert!((hi - sharp_v).abs() < 1e-6);
        assert!(*seqs.t_prime_diameters().last().unwrap() < 1e-5);
        assert!(matches!(
            triangle_sequences(&Rational::from_i64(-1, 2), q, 5),
            Err(FareyError::Range)
        ));
    }

    #[test]
    fn classical_limit_collapses() {
        // The classical step map is parabolic, so convergence is only O(1/n).
        let seqs = triangle_sequences(&Rational::from_i64(1, 1), 1.0, 400).unwrap();
        let last = seqs.t.last().unwrap();
        for v in last {
            assert!((v - 1.0).abs() < 5e-3);
        }
        assert!(*seqs.t_prime_diameters().last().unwrap() < 5e-3);
    }
}
