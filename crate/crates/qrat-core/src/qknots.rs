//! Quivers whose closure counts read off the coefficients of deformed
//! rationals, and the absolute-coefficient Jones polynomial of rational
//! knots.
//!
//! For `r/s ∈ (1, ∞)` with even continued fraction `[a₁, …, a₂ₙ]`, the
//! base quiver is a path with alternating-orientation edge blocks of
//! sizes `a₁−1, a₂, a₃, …, a₂ₙ₋₁, a₂ₙ−1` (odd blocks point toward the
//! left end, even blocks toward the right end). A *closure* is a vertex
//! subset with no edge leaving it; `C_i` counts closures with `i`
//! vertices. The five families:
//!
//! * `GSharp`: the base path; `C_i` gives the coefficients of `R♯`.
//! * `GSharpHat`: drops the first block and shortens the `a₂` block by
//!   one (for a length-2 expansion the two truncations both apply);
//!   `C_i` gives the coefficients of `S♯`.
//! * `GFlat` / `GFlatHat`: the same with one extra vertex attached to
//!   the right end by a 2-cycle; `C_i` gives `R♭` / `S♭`.
//! * `H`: `GFlat` with every edge reversed and the 2-cycle moved to the
//!   left end; `C_i` gives the coefficients of `|V_{r/s}(q)|`, the Jones
//!   polynomial with all coefficients made positive.

use crate::contfrac::{to_even_cf, CfError, Rational};
use crate::qpoly::LaurentPoly;
use crate::qrationals::{deform, QratError, Side};
use num_traits::ToPrimitive;

/// Largest vertex count accepted by the brute-force counter.
pub const BRUTEFORCE_LIMIT: usize = 22;

/// Errors from quiver construction and counting.
#[derive(Debug, thiserror::Error)]
pub enum KnotError {
    #[error("rational must lie in (1, ∞)")]
    Domain,
    #[error("brute force supports at most {BRUTEFORCE_LIMIT} vertices, got {0}")]
    TooLarge(usize),
    #[error("closure-count route and deformation route disagree for {0}")]
    RouteMismatch(String),
    #[error(transparent)]
    Cf(#[from] CfError),
    #[error(transparent)]
    Qrat(#[from] QratError),
}

/// The five quiver families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    GSharp,
    GSharpHat,
    GFlat,
    GFlatHat,
    H,
}

/// A quiver on vertices `0..n` with directed edges; no self-loops,
/// opposite parallel pairs (2-cycles) allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quiver {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Quiver {
    /// The same quiver with every edge reversed.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }
}

/// Closure counts `c₀ … c_n` by subset size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosureCounts {
    pub counts: Vec<u64>,
}

impl ClosureCounts {
    /// The generating polynomial `Σ c_i qⁱ`.
    pub fn polynomial(&self) -> LaurentPoly {
        let terms: Vec<(i64, i64)> = self
            .counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as i64, c as i64))
            .collect();
        LaurentPoly::from_terms(&terms)
    }
}

fn cf_digits(x: &Rational) -> Result<Vec<i64>, KnotError> {
    if x.is_infinite() || x.signum() <= 0 {
        return Err(KnotError::Domain);
    }
    // x > 1 ⟺ numerator > denominator (both positive here).
    if x.numer() <= x.denom() {
        return Err(KnotError::Domain);
    }
    let cf = to_even_cf(x);
    Ok(cf
        .digits()
        .iter()
        .map(|d| d.to_i64().expect("digit fits i64"))
        .collect())
}

/// Block sizes and orientations (`true` = edges point right) for a
/// family; `None` encodes the empty quiver.
fn blocks(digits: &[i64], family: Family) -> Option<Vec<(i64, bool)>> {
    let last = digits.len() - 1;
    let hat = matches!(family, Family::GSharpHat | Family::GFlatHat);
    let mut out = Vec::new();
    for (i, &a) in digits.iter().enumerate() {
        if hat && i == 0 {
            continue;
        }
        let mut size = a;
        if i == 0 || i == last {
            size -= 1;
        }
        if hat && i == 1 {
            size -= 1;
        }
        // Odd blocks (even index) point left, even blocks point right;
        // H reverses everything.
        let right = (i % 2 == 1) != matches!(family, Family::H);
        if size < 0 {
            // Only possible for the merged block of a length-2 hat
            // expansion with a₂ = 1: the quiver is empty.
            return None;
        }
        out.push((size, right));
    }
    Some(out)
}

/// Builds the family quiver of `x ∈ (1, ∞)`. Path vertices are indexed
/// left to right per the block structure; the ♭-family 2-cycle vertex is
/// the last index (paired with the right end), the H-family one is also
/// the last index but paired with vertex 0.
pub fn build_quiver(x: &Rational, family: Family) -> Result<Quiver, KnotError> {
    let digits = cf_digits(x)?;
    let Some(blocks) = blocks(&digits, family) else {
        // Empty hat quiver; a ♭-family 2-cycle has no vertex to anchor
        // to, so it stays empty too.
        return Ok(Quiver { n: 0, edges: Vec::new() });
    };
    let path_len: i64 = blocks.iter().map(|&(s, _)| s).sum::<i64>() + 1;
    let path_len = path_len as usize;
    let mut edges = Vec::new();
    let mut v = 0usize;
    for (size, right) in blocks {
        for _ in 0..size {
            if right {
                edges.push((v, v + 1));
            } else {
                edges.push((v + 1, v));
            }
            v += 1;
        }
    }
    let n = match family {
        Family::GSharp | Family::GSharpHat => path_len,
        Family::GFlat | Family::GFlatHat => {
            edges.push((path_len - 1, path_len));
            edges.push((path_len, path_len - 1));
            path_len + 1
        }
        Family::H => {
            edges.push((0, path_len));
            edges.push((path_len, 0));
            path_len + 1
        }
    };
    Ok(Quiver { n, edges })
}

/// Counts closures of every size by enumerating all vertex subsets.
pub fn count_closures_bruteforce(g: &Quiver) -> Result<ClosureCounts, KnotError> {
    if g.n > BRUTEFORCE_LIMIT {
        return Err(KnotError::TooLarge(g.n));
    }
    let mut counts = vec![0u64; g.n + 1];
    for mask in 0u32..(1u32 << g.n) {
        let closed = g
            .edges
            .iter()
            .all(|&(a, b)| mask & (1 << a) == 0 || mask & (1 << b) != 0);
        if closed {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(ClosureCounts { counts })
}

/// Direction of the edge between consecutive units of a path quiver.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Dir {
    Right,
    Left,
}

/// Decomposes a quiver into a chain of units (2-cycle pairs fused into
/// one unit, since a closure contains both endpoints of a doubled edge
/// or neither) connected by single directed edges. Returns `None` if the
/// quiver is not of this shape.
fn unit_chain(g: &Quiver) -> Option<(Vec<usize>, Vec<Dir>)> {
    use std::collections::BTreeMap;
    let mut pair: BTreeMap<usize, usize> = BTreeMap::new();
    let mut seen = std::collections::BTreeSet::new();
    for &(a, b) in &g.edges {
        if a == b || a >= g.n || b >= g.n {
            return None;
        }
        if g.edges.contains(&(b, a)) {
            if *pair.entry(a).or_insert(b) != b || *pair.entry(b).or_insert(a) != a {
                return None;
            }
        }
        if !seen.insert((a, b)) {
            return None; // parallel same-direction edges
        }
    }
    // Map each vertex to a unit: the 2-cycle pair collapses to the unit
    // of its smaller member.
    let mut unit_of = vec![usize::MAX; g.n];
    let mut sizes = Vec::new();
    let mut order = Vec::new();
    for v in 0..g.n {
        if unit_of[v] != usize::MAX {
            continue;
        }
        let id = sizes.len();
        unit_of[v] = id;
        let mut size = 1;
        if let Some(&w) = pair.get(&v) {
            if unit_of[w] != usize::MAX {
                return None;
            }
            unit_of[w] = id;
            size += 1;
        }
        sizes.push(size);
        order.push(id);
    }
    // The remaining edges must link consecutive units.
    let mut dirs = vec![None; sizes.len().saturating_sub(1)];
    for &(a, b) in &g.edges {
        let (ua, ub) = (unit_of[a], unit_of[b]);
        if ua == ub {
            continue; // fused 2-cycle edge
        }
        let (lo, hi, dir) = if ua < ub {
            (ua, ub, Dir::Right)
        } else {
            (ub, ua, Dir::Left)
        };
        if hi != lo + 1 {
            return None;
        }
        match dirs[lo] {
            None => dirs[lo] = Some(dir),
            Some(d) if d == dir => {}
            _ => return None,
        }
    }
    if dirs.iter().any(|d| d.is_none()) {
        return None; // disconnected path
    }
    Some((sizes, dirs.into_iter().map(|d| d.unwrap()).collect()))
}

/// Counts closures with a linear scan over the unit chain, tracking
/// whether the previous unit is inside the subset. Falls back to brute
/// force when the quiver is not a fused-pair path.
pub fn count_closures_dp(g: &Quiver) -> Result<ClosureCounts, KnotError> {
    let Some((sizes, dirs)) = unit_chain(g) else {
        return count_closures_bruteforce(g);
    };
    if sizes.is_empty() {
        return Ok(ClosureCounts { counts: vec![1] });
    }
    // per-state vectors of counts indexed by subset size
    let width = g.n + 1;
    let mut out_state = vec![0u64; width];
    let mut in_state = vec![0u64; width];
    out_state[0] = 1;
    in_state[sizes[0]] = 1;
    for (i, &dir) in dirs.iter().enumerate() {
        let size = sizes[i + 1];
        let mut next_out = vec![0u64; width];
        let mut next_in = vec![0u64; width];
        for k in 0..width {
            let (o, inn) = (out_state[k], in_state[k]);
            // edge Right: prev → cur forbids (in, out);
            // edge Left: cur → prev forbids (out, in).
            next_out[k] += o;
            if dir == Dir::Left {
                next_out[k] += inn;
            }
            if k + size < width {
                next_in[k + size] += inn;
                if dir == Dir::Right {
                    next_in[k + size] += o;
                }
            }
        }
        out_state = next_out;
        in_state = next_in;
    }
    let counts = (0..width)
        .map(|k| out_state[k] + in_state[k])
        .collect();
    Ok(ClosureCounts { counts })
}

/// `|V_{r/s}(q)|` by two routes — closure counts of the `H` quiver and
/// the numerator of the left deformation — asserted equal.
pub fn jones_abs(x: &Rational) -> Result<LaurentPoly, KnotError> {
    let h = build_quiver(x, Family::H)?;
    let counts = count_closures_dp(&h)?;
    let from_closures = counts.polynomial();
    let (numer, _) = deform(x, Side::Flat)?;
    if from_closures != numer {
        return Err(KnotError::RouteMismatch(format!(
            "{}/{}",
            x.numer(),
            x.denom()
        )));
    }
    Ok(from_closures)
}
