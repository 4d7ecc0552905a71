//! Exact-arithmetic library for the two q-deformations of the rational
//! numbers (left `♭` and right `♯`), the B3 braid action that defines
//! them, the Harder–Narasimhan automaton of the A2 2-Calabi–Yau category,
//! the q-deformed Farey tessellation, closure-counting combinatorics for
//! Jones polynomials of two-bridge knots, and numeric experiments on the
//! q-mass compactification of stability space.
//!
//! Module layout mirrors the mathematical layering:
//!
//! - [`qpoly`]: Laurent polynomials over `Z` and their ratios — the
//!   universal value type.
//! - [`contfrac`]: `Q ∪ {∞}` and unique even continued fractions.
//! - [`braidcore`]: B3 words, 2×2 matrices over the Laurent ring, Möbius
//!   actions, and the four-case continued normal form.
//! - [`qrationals`]: the `♯`/`♭` deformations by braid action, by
//!   continued-fraction formula, and by matrix formula.
//! - [`qboundary`]: limits, q-irrationals, the total order and the
//!   boundary-point classification.
//! - [`hnauto`]: the HN automaton, `occ_q`/`hom_q` functionals, and both
//!   q-deformed Rouquier–Zimmermann theorems.
//! - [`qknots`]: quiver families, closure counting, Jones polynomials.
//! - [`qfarey`]: the q-deformed Farey tessellation and its SVG rendering.
//! - [`stabmass`]: q-masses, Gromov coordinates, degeneracy checks, and
//!   projective boundary-limit experiments.

pub use num_bigint;
pub use num_complex;
pub use num_rational;
pub use num_traits;

pub mod braidcore;
pub mod contfrac;
pub mod hnauto;
pub mod qboundary;
pub mod qfarey;
pub mod qknots;
pub mod qpoly;
pub mod qrationals;
pub mod stabmass;
