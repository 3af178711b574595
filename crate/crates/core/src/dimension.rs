//! Zeta function over cylinders, abscissa of convergence, Hausdorff
//! dimension, and an independent covering-minimization oracle.
//!
//! The zeta function is `Σ_n Σ_{γ in Π_n} diam([γ])^s`. Because the level
//! sums are sandwiched between multiples of `(Λ α^s)^n`, the abscissa of
//! convergence is `s0 = log Λ / (-log α)`, and it equals the Hausdorff
//! dimension. The closed form is cross-checked two independent ways:
//! bisection on the level-sum growth ratio, and an exact minimizer over
//! clopen-partition covers (the covering argument of the dimension proof).

use alloc::vec::Vec;

use crate::diagram::{StationaryDiagram, VertexId};
use crate::error::{Error, Result};
use crate::math;
use crate::metric::SelfSimilarMetric;
use crate::perron::PerronData;

/// Partial zeta sum at a real exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaReport {
    pub s: f64,
    pub depth: usize,
    pub partial_sum: f64,
    /// Ratio of the last two level sums; `None` at depth 0.
    pub growth_ratio: Option<f64>,
}

/// A bracketing interval produced by the numeric abscissa search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Level sums `L_n = Σ_{γ in Π_n} diam([γ])^s` for `n = 0..=depth`,
/// computed from per-vertex path counts (no paths are materialized).
fn level_sums(
    m: &SelfSimilarMetric,
    d: &StationaryDiagram,
    s: f64,
    depth: usize,
) -> Result<Vec<f64>> {
    let scale_pow: Vec<f64> = m.scales().iter().map(|&a| math::powf(a, s)).collect();
    let alpha_s = math::powf(m.alpha(), s);
    let mut sums = Vec::with_capacity(depth + 1);
    sums.push(1.0); // the empty path contributes diam(C)^s = 1
    let mut weight = 1.0;
    for n in 1..=depth {
        weight *= alpha_s;
        let counts = d.path_counts_by_range(n)?;
        let level: f64 = counts
            .iter()
            .zip(&scale_pow)
            .map(|(&c, &a)| c as f64 * a)
            .sum();
        sums.push(weight * level);
    }
    Ok(sums)
}

/// Partial sum of the zeta function down to depth `n`. The configured cap
/// bounds the total number of cylinders the sum ranges over.
pub fn zeta_partial(
    m: &SelfSimilarMetric,
    d: &StationaryDiagram,
    s: f64,
    depth: usize,
    cap: usize,
) -> Result<ZetaReport> {
    if !(s > 0.0) {
        return Err(Error::BadParameter { what: "zeta exponent must be positive" });
    }
    let mut total: u128 = 0;
    for n in 0..=depth {
        total = total
            .checked_add(d.path_count(n)?)
            .ok_or(Error::AdjacencyOverflow)?;
    }
    if total > cap as u128 {
        return Err(Error::EnumerationCap { needed: total, cap });
    }
    let sums = level_sums(m, d, s, depth)?;
    let growth_ratio = if depth >= 1 { Some(sums[depth] / sums[depth - 1]) } else { None };
    Ok(ZetaReport { s, depth, partial_sum: sums.iter().sum(), growth_ratio })
}

/// Closed-form abscissa of convergence `s0 = log Λ / (-log α)`.
pub fn abscissa(m: &SelfSimilarMetric, perron: &PerronData) -> Result<f64> {
    if perron.lambda <= 1.0 {
        return Err(Error::DegenerateLambda { lambda: perron.lambda });
    }
    Ok(math::ln(perron.lambda) / -math::ln(m.alpha()))
}

/// Bracket the abscissa by bisection on the level-sum growth ratio at
/// depth `depth`: ratio > 1 classifies the divergent side, <= 1 the
/// convergent side. The finite-depth ratio sits within its depth-to-depth
/// drift of the limit; that drift, divided by the slope `log(1/alpha)`,
/// bounds how far the sign change can sit from the true abscissa. The
/// bracket is widened by that bound and must still fit in `eps`, else the
/// depth is reported as too small to separate.
pub fn abscissa_numeric(
    m: &SelfSimilarMetric,
    d: &StationaryDiagram,
    depth: usize,
    eps: f64,
) -> Result<Bracket> {
    if !(eps > 0.0) {
        return Err(Error::BadParameter { what: "bracket tolerance must be positive" });
    }
    if depth < 3 {
        return Err(Error::BadParameter { what: "growth-ratio bracketing needs depth >= 3" });
    }
    // the counts do not depend on s; fetch the three deepest levels once
    let c2 = d.path_counts_by_range(depth - 2)?;
    let c1 = d.path_counts_by_range(depth - 1)?;
    let c0 = d.path_counts_by_range(depth)?;
    let weighted = |counts: &[u128], s: f64| -> f64 {
        counts
            .iter()
            .zip(m.scales())
            .map(|(&c, &a)| c as f64 * math::powf(a, s))
            .sum()
    };
    // (ratio, drift against the previous depth)
    let ratio = |s: f64| -> (f64, f64) {
        let alpha_s = math::powf(m.alpha(), s);
        let r = alpha_s * weighted(&c0, s) / weighted(&c1, s);
        let r_prev = alpha_s * weighted(&c1, s) / weighted(&c2, s);
        (r, math::abs(r - r_prev))
    };

    let (r0, drift0) = ratio(0.0);
    if r0 <= 1.0 + drift0.max(1e-12) {
        return Err(Error::DegenerateLambda { lambda: r0 });
    }
    let mut lo = 0.0;
    let mut hi = 1.0;
    while ratio(hi).0 > 1.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1024.0 {
            return Err(Error::NotSeparated { width: hi - lo });
        }
    }
    let target = 0.5 * eps;
    while hi - lo > target {
        let mid = 0.5 * (lo + hi);
        if ratio(mid).0 > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let drift = ratio(lo).1.max(ratio(hi).1).max(1e-15);
    let shift = drift / -math::ln(m.alpha());
    if shift > 0.25 * eps {
        return Err(Error::NotSeparated { width: hi - lo + 2.0 * shift });
    }
    Ok(Bracket { lo: lo - shift, hi: hi + shift })
}

/// Exact minimum of `Σ diam(u_i)^d` over clopen-partition covers that
/// refine at most `depth` stationary levels below the first one.
///
/// Covers are minimized on the cylinder tree by
/// `h(γ) = min(w(γ)^d, Σ_{e in ext(γ)} h(γ·e))` with leaves at level
/// `depth`, where the covering weight `w(γ) = a_{r(γ)} α^l` counts the
/// `l` stationary edges of `γ` and the whole space has weight 1. The
/// recursion walks the tree path by path; the cap bounds its node count.
pub fn hausdorff_content_depth(
    m: &SelfSimilarMetric,
    d: &StationaryDiagram,
    dim: f64,
    depth: usize,
    cap: usize,
) -> Result<f64> {
    if dim < 0.0 {
        return Err(Error::BadParameter { what: "content exponent must be >= 0" });
    }
    let mut nodes: u128 = 1;
    for l in 0..=depth {
        nodes = nodes
            .checked_add(d.path_count(l + 1)?)
            .ok_or(Error::AdjacencyOverflow)?;
    }
    if nodes > cap as u128 {
        return Err(Error::EnumerationCap { needed: nodes, cap });
    }
    let alpha = m.alpha();
    let children: f64 = (0..d.vertex_count() as u32)
        .map(|v| content_rec(m, d, dim, alpha, v, 0, depth))
        .sum();
    Ok(children.min(1.0))
}

fn content_rec(
    m: &SelfSimilarMetric,
    d: &StationaryDiagram,
    dim: f64,
    alpha: f64,
    v: VertexId,
    level: usize,
    depth: usize,
) -> f64 {
    let own = math::powf(m.scale_of(Some(v)) * math::powi(alpha, level as i32), dim);
    if level == depth {
        return own;
    }
    let split: f64 = d
        .edges_from(v)
        .iter()
        .map(|&e| {
            let w = d.edges()[e as usize].range;
            content_rec(m, d, dim, alpha, w, level + 1, depth)
        })
        .sum();
    own.min(split)
}

/// Hausdorff dimension of the self-similar ultrametric Cantor set: equal
/// to the abscissa of convergence. The covering oracle and the numeric
/// bracket provide the independent cross-checks.
pub fn hausdorff_dimension(m: &SelfSimilarMetric, perron: &PerronData) -> Result<f64> {
    abscissa(m, perron)
}
