//! Bi-Lipschitz embeddings into `R^n` and bi-Hölder embeddings into `R`.
//!
//! Both maps assign an injective positive label `β` to edges and sum
//! labels along a path against geometric weights: coordinate `i` of the
//! Lipschitz map is `Σ_j β(x_{i+nj}) α^{nj}`, and the Hölder map is
//! `φ_s(x) = Σ_j β(x_j) α^{sj}`. Eventually periodic paths are evaluated
//! in closed form, so distortion checks carry no truncation slack.
//!
//! The two-sided distance bounds are certified empirically: a report
//! samples path pairs and counts violations of the derived constants,
//! refusing upfront when the strict inequality behind the lower constant
//! fails.

use alloc::format;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::StationaryDiagram;
use crate::error::{Error, Result};
use crate::math;
use crate::metric::SelfSimilarMetric;
use crate::path::{FinitePath, PathSpec, PositionEdge};
use crate::perron::PerronData;

/// Injective positive edge labels, kept separately for root edges and
/// stationary edges (a position in a path is always exactly one of the
/// two, so injectivity is required within each family).
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeLabeling {
    root: Vec<f64>,
    body: Vec<f64>,
}

impl EdgeLabeling {
    pub fn new(d: &StationaryDiagram, root: Vec<f64>, body: Vec<f64>) -> Result<Self> {
        if root.len() != d.vertex_count() {
            return Err(Error::MissingLabel { edge: root.len() as u32 });
        }
        if body.len() != d.edge_count() {
            return Err(Error::MissingLabel { edge: body.len() as u32 });
        }
        if root.iter().chain(&body).any(|&b| !(b > 0.0)) {
            return Err(Error::BadParameter { what: "labels must be positive" });
        }
        if !injective(&root) || !injective(&body) {
            return Err(Error::NotInjective);
        }
        Ok(EdgeLabeling { root, body })
    }

    /// Uniformly spaced labels 1..=p on stationary edges (and 1..=q on
    /// root edges), which realize the optimal delta ratio 1/p.
    pub fn uniform(d: &StationaryDiagram) -> Self {
        EdgeLabeling {
            root: (1..=d.vertex_count()).map(|i| i as f64).collect(),
            body: (1..=d.edge_count()).map(|i| i as f64).collect(),
        }
    }

    pub fn root_values(&self) -> &[f64] {
        &self.root
    }

    pub fn body_values(&self) -> &[f64] {
        &self.body
    }

    pub fn beta(&self, pe: PositionEdge) -> f64 {
        match pe {
            PositionEdge::Root(v) => self.root[v as usize],
            PositionEdge::Body(e) => self.body[e as usize],
        }
    }

    pub fn beta_sup(&self) -> f64 {
        self.root.iter().chain(&self.body).copied().fold(0.0, f64::max)
    }

    /// Smallest pairwise gap, over root pairs and body pairs.
    pub fn delta_min(&self) -> Result<f64> {
        match (family_deltas(&self.root), family_deltas(&self.body)) {
            (None, None) => Err(Error::SingleEdge),
            (a, b) => Ok([a, b].iter().flatten().map(|d| d.0).fold(f64::INFINITY, f64::min)),
        }
    }

    /// Largest pairwise gap, over root pairs and body pairs.
    pub fn delta_max(&self) -> Result<f64> {
        match (family_deltas(&self.root), family_deltas(&self.body)) {
            (None, None) => Err(Error::SingleEdge),
            (a, b) => Ok([a, b].iter().flatten().map(|d| d.1).fold(0.0, f64::max)),
        }
    }

    /// Delta of the stationary family alone (tails past the root level
    /// only ever differ on stationary edges). Zero when there is a single
    /// stationary edge.
    pub fn body_delta_max(&self) -> f64 {
        family_deltas(&self.body).map_or(0.0, |d| d.1)
    }

    pub fn body_min(&self) -> f64 {
        self.body.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn body_max(&self) -> f64 {
        self.body.iter().copied().fold(0.0, f64::max)
    }
}

fn injective(vals: &[f64]) -> bool {
    let mut sorted = vals.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.windows(2).all(|w| w[0] != w[1])
}

fn family_deltas(vals: &[f64]) -> Option<(f64, f64)> {
    if vals.len() < 2 {
        return None;
    }
    let mut sorted = vals.to_vec();
    sorted.sort_by(f64::total_cmp);
    let dmin = sorted.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    let dmax = sorted[sorted.len() - 1] - sorted[0];
    Some((dmin, dmax))
}

/// `Σ_{t>=0} β(x_{start + stride t}) ratio^t`: exact closed form when the
/// spec is periodic, otherwise truncated after the last position that is
/// both known and `<= truncation`. Returns (sum, exact, included terms).
pub(crate) fn position_series<F: Fn(PositionEdge) -> f64>(
    spec: &PathSpec,
    beta: F,
    start: usize,
    stride: usize,
    ratio: f64,
    truncation: usize,
) -> (f64, bool, u32) {
    debug_assert!(stride >= 1 && ratio > 0.0 && ratio < 1.0);
    let prefix_depth = spec.prefix().depth();
    if spec.is_periodic() {
        // explicit terms inside the prefix
        let mut sum = 0.0;
        let mut weight = 1.0;
        let mut t: u32 = 0;
        let mut pos = start;
        while pos < prefix_depth {
            sum += beta(spec.edge_at(pos).expect("inside prefix")) * weight;
            weight *= ratio;
            t += 1;
            pos += stride;
        }
        // the remaining positions cycle with period L/gcd(L, stride)
        let cycle_len = match spec.tail() {
            crate::path::Tail::Periodic(c) => c.len(),
            crate::path::Tail::Truncated => unreachable!(),
        };
        let period = cycle_len / gcd(cycle_len, stride % cycle_len);
        let mut block = 0.0;
        let mut w = 1.0;
        for u in 0..period {
            let p = pos + stride * u;
            block += beta(spec.edge_at(p).expect("periodic")) * w;
            w *= ratio;
        }
        let ratio_period = math::powi(ratio, period as i32);
        sum += weight * block / (1.0 - ratio_period);
        (sum, true, t)
    } else {
        let mut sum = 0.0;
        let mut weight = 1.0;
        let mut t: u32 = 0;
        let mut pos = start;
        while pos <= truncation {
            match spec.edge_at(pos) {
                Some(pe) => {
                    sum += beta(pe) * weight;
                    weight *= ratio;
                    t += 1;
                    pos += stride;
                }
                None => break,
            }
        }
        (sum, false, t)
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    if a == 0 {
        1
    } else {
        a
    }
}

/// Coordinate map into `R^n`: coordinate `i` sums `β(x_{i+nj}) α^{nj}`.
/// Returns the point and a bound on what truncation omitted from any
/// coordinate difference (0 for periodic specs, which are exact).
pub fn lipschitz_embed(
    d: &StationaryDiagram,
    x: &PathSpec,
    n: u32,
    lab: &EdgeLabeling,
    alpha: f64,
    truncation: usize,
) -> Result<(Vec<f64>, f64)> {
    if n < 1 {
        return Err(Error::BadParameter { what: "embedding dimension must be >= 1" });
    }
    check_alpha(alpha)?;
    d.validate_spec(x)?;
    let ratio = math::powi(alpha, n as i32);
    let mut point = Vec::with_capacity(n as usize);
    let mut bound: f64 = 0.0;
    for i in 1..=n as usize {
        let (sum, exact, terms) =
            position_series(x, |pe| lab.beta(pe), i, n as usize, ratio, truncation);
        point.push(sum);
        if !exact {
            bound = bound
                .max(lab.body_delta_max() * math::powi(ratio, terms as i32) / (1.0 - ratio));
        }
    }
    Ok((point, bound))
}

/// Least dimension the labeling lemma certifies for `p` edges:
/// `n = floor(-log p / log alpha) + 1`.
pub fn min_embedding_dim(p: usize, alpha: f64) -> Result<u32> {
    if p < 2 {
        return Err(Error::BadParameter { what: "embedding needs at least 2 edges" });
    }
    check_alpha(alpha)?;
    Ok(min_dim_from(p as f64, alpha))
}

fn min_dim_from(p: f64, alpha: f64) -> u32 {
    let ratio = math::ln(p) / -math::ln(alpha);
    math::floor_snapped(ratio, 1e-9) as u32 + 1
}

/// A telescoping exponent and target dimension realizing the embedding
/// into `R^{[dim_H]+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingPlan {
    pub k: u32,
    pub n: u32,
    /// Dimension certified without telescoping.
    pub basic_n: u32,
}

pub const DEFAULT_PLAN_K_CAP: u32 = 32;

/// Smallest telescoping `k` whose edge count `p^(k)` and contraction
/// `alpha^k` certify dimension `[dim_H]+1`.
pub fn embedding_plan(
    m: &SelfSimilarMetric,
    d: &StationaryDiagram,
    perron: &PerronData,
    k_cap: u32,
) -> Result<EmbeddingPlan> {
    if !d.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let dim_h = crate::dimension::abscissa(m, perron)?;
    let target = math::floor_snapped(dim_h, 1e-9) as u32 + 1;
    let basic_n = min_embedding_dim(d.edge_count(), m.alpha())?;
    let mut best = u32::MAX;
    for k in 1..=k_cap {
        let p_k = d.adjacency_power_sum(k)? as f64;
        let alpha_k = math::powi(m.alpha(), k as i32);
        let n_k = min_dim_from(p_k, alpha_k);
        best = best.min(n_k);
        if n_k <= target {
            return Ok(EmbeddingPlan { k, n: target, basic_n });
        }
    }
    Err(Error::PlanCapExceeded { k_cap, best_n: best })
}

/// The line map `φ_s(x) = Σ_j β(x_j) α^{sj}`.
pub fn hoelder_embed(
    d: &StationaryDiagram,
    x: &PathSpec,
    s: f64,
    lab: &EdgeLabeling,
    alpha: f64,
    truncation: usize,
) -> Result<(f64, f64)> {
    if !(s > 0.0) {
        return Err(Error::BadParameter { what: "Hölder exponent must be positive" });
    }
    check_alpha(alpha)?;
    d.validate_spec(x)?;
    let ratio = math::powf(alpha, s);
    let (sum, exact, terms) = position_series(x, |pe| lab.beta(pe), 0, 1, ratio, truncation);
    let bound = if exact {
        0.0
    } else {
        lab.body_delta_max() * math::powi(ratio, terms as i32) / (1.0 - ratio)
    };
    Ok((sum, bound))
}

/// Exponent threshold above which the two-sided Hölder bound holds:
/// `s* = log(δmin/(δmax+δmin)) / log α`.
pub fn min_hoelder_exponent(lab: &EdgeLabeling, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let dmin = lab.delta_min()?;
    let dmax = lab.delta_max()?;
    Ok(math::ln(dmin / (dmax + dmin)) / math::ln(alpha))
}

/// Two-sided per-coordinate Lipschitz constants in the max norm:
/// `c- = δmin - δmax α^n/(1-α^n)`, `c+ = δmax α^{-n}/(1-α^n)`.
pub fn lipschitz_constants(lab: &EdgeLabeling, alpha: f64, n: u32) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    let dmin = lab.delta_min()?;
    let dmax = lab.delta_max()?;
    let an = math::powi(alpha, n as i32);
    Ok((dmin - dmax * an / (1.0 - an), dmax / an / (1.0 - an)))
}

/// Two-sided Hölder constants:
/// `c- = (δmin - α^s(δmin+δmax))/(1-α^s)`, `c+ = δmax/(1-α^s)`.
pub fn hoelder_constants(lab: &EdgeLabeling, alpha: f64, s: f64) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    let dmin = lab.delta_min()?;
    let dmax = lab.delta_max()?;
    let as_ = math::powf(alpha, s);
    Ok(((dmin - as_ * (dmin + dmax)) / (1.0 - as_), dmax / (1.0 - as_)))
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::BadParameter { what: "alpha must lie in (0,1)" });
    }
    Ok(())
}

/// Which embedding a distortion report certifies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EmbedMap {
    Lipschitz { n: u32 },
    Hoelder { s: f64 },
}

/// Empirical two-sided distortion certificate over sampled path pairs.
///
/// `violations` counts sampled ratios outside
/// `[theoretical_lo (1-tail_slack), theoretical_hi (1+tail_slack)]`;
/// sampling closes each prefix into a periodic spec, so evaluation is
/// exact and `tail_slack` is 0.
#[derive(Debug, Clone, PartialEq)]
pub struct DistortionReport {
    pub map: EmbedMap,
    pub samples: usize,
    pub depth: usize,
    pub seed: u64,
    pub empirical_min: f64,
    pub empirical_max: f64,
    pub theoretical_lo: f64,
    pub theoretical_hi: f64,
    /// Euclidean-norm constants (`sqrt(n)` times the max-norm ones for
    /// the Lipschitz map; identical for the line map).
    pub euclidean_lo: f64,
    pub euclidean_hi: f64,
    pub violations: usize,
    pub tail_slack: f64,
}

/// Sample `samples` pairs of depth-`depth` paths and certify the ratio
/// `|f(x)-f(y)| / ρ(x,y)` (Lipschitz, max norm) or `/ ρ(x,y)^s` (Hölder)
/// against the derived constants. Refuses when the lower constant is not
/// strictly positive.
pub fn distortion_report(
    map: EmbedMap,
    m: &SelfSimilarMetric,
    d: &StationaryDiagram,
    lab: &EdgeLabeling,
    samples: usize,
    depth: usize,
    seed: u64,
) -> Result<DistortionReport> {
    if samples < 1 || depth < 2 {
        return Err(Error::BadParameter { what: "need samples >= 1 and depth >= 2" });
    }
    let alpha = m.alpha();
    let (c_lo, c_hi, expo) = match map {
        EmbedMap::Lipschitz { n } => {
            let (lo, hi) = lipschitz_constants(lab, alpha, n)?;
            if lo <= 0.0 {
                let need = min_dim_from(
                    (lab.delta_max()? + lab.delta_min()?) / lab.delta_min()?,
                    alpha,
                );
                return Err(Error::Precondition {
                    constraint: format!(
                        "lower Lipschitz constant {lo} <= 0 at n = {n}; needs n >= {need}"
                    ),
                });
            }
            (lo, hi, 1.0)
        }
        EmbedMap::Hoelder { s } => {
            let (lo, hi) = hoelder_constants(lab, alpha, s)?;
            if lo <= 0.0 {
                let threshold = min_hoelder_exponent(lab, alpha)?;
                return Err(Error::Precondition {
                    constraint: format!(
                        "lower Hölder constant {lo} <= 0 at s = {s}; needs s > {threshold}"
                    ),
                });
            }
            (lo, hi, s)
        }
    };
    // per-vertex scales enter the distance but not the map; fold them
    // into the certified range
    let lo_adj = c_lo / math::powf(m.max_scale(), expo);
    let hi_adj = c_hi / math::powf(m.min_scale(), expo);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut empirical_min = f64::INFINITY;
    let mut empirical_max: f64 = 0.0;
    let mut violations = 0usize;
    for _ in 0..samples {
        let (x, y) = sample_distinct_pair(d, &mut rng, depth)?;
        let rho = m.distance(d, &x, &y, 2 * depth + 16)?;
        let ratio = match map {
            EmbedMap::Lipschitz { n } => {
                let (fx, _) = lipschitz_embed(d, &x, n, lab, alpha, depth)?;
                let (fy, _) = lipschitz_embed(d, &y, n, lab, alpha, depth)?;
                let diff = fx
                    .iter()
                    .zip(&fy)
                    .map(|(a, b)| math::abs(a - b))
                    .fold(0.0, f64::max);
                diff / rho
            }
            EmbedMap::Hoelder { s } => {
                let (fx, _) = hoelder_embed(d, &x, s, lab, alpha, depth)?;
                let (fy, _) = hoelder_embed(d, &y, s, lab, alpha, depth)?;
                math::abs(fx - fy) / math::powf(rho, s)
            }
        };
        empirical_min = empirical_min.min(ratio);
        empirical_max = empirical_max.max(ratio);
        if ratio < lo_adj || ratio > hi_adj {
            violations += 1;
        }
    }
    let sqrt_n = match map {
        EmbedMap::Lipschitz { n } => math::sqrt(n as f64),
        EmbedMap::Hoelder { .. } => 1.0,
    };
    Ok(DistortionReport {
        map,
        samples,
        depth,
        seed,
        empirical_min,
        empirical_max,
        theoretical_lo: lo_adj,
        theoretical_hi: hi_adj,
        euclidean_lo: lo_adj * sqrt_n,
        euclidean_hi: hi_adj * sqrt_n,
        violations,
        tail_slack: 0.0,
    })
}

pub(crate) fn sample_distinct_pair(
    d: &StationaryDiagram,
    rng: &mut ChaCha8Rng,
    depth: usize,
) -> Result<(PathSpec, PathSpec)> {
    for _ in 0..100 {
        let x = d.close_into_spec(d.sample_path_rng(rng, depth, None)?)?;
        let y = d.close_into_spec(d.sample_path_rng(rng, depth, None)?)?;
        if x.same_path(&y) != Some(true) {
            return Ok((x, y));
        }
    }
    Err(Error::ZeroDistancePair)
}

/// Image interval of each depth-`depth` cylinder under the Hölder map:
/// the explicit prefix sum plus the geometric extremes of all tails.
pub fn hoelder_cylinder_intervals(
    d: &StationaryDiagram,
    lab: &EdgeLabeling,
    s: f64,
    alpha: f64,
    depth: usize,
    cap: usize,
) -> Result<Vec<(FinitePath, f64, f64)>> {
    if depth < 1 {
        return Err(Error::BadParameter { what: "cylinder intervals need depth >= 1" });
    }
    check_alpha(alpha)?;
    let ratio = math::powf(alpha, s);
    let tail = math::powi(ratio, depth as i32) / (1.0 - ratio);
    let (beta_lo, beta_hi) = (lab.body_min(), lab.body_max());
    let mut out = Vec::new();
    for path in d.enumerate_paths(depth, cap)? {
        let mut prefix_sum = 0.0;
        let mut w = 1.0;
        for pos in 0..depth {
            prefix_sum += lab.beta(path.edge_at(pos).expect("within depth")) * w;
            w *= ratio;
        }
        out.push((path, prefix_sum + beta_lo * tail, prefix_sum + beta_hi * tail));
    }
    Ok(out)
}

/// Whether the intervals are pairwise disjoint (strictly, after sorting).
pub fn intervals_pairwise_disjoint(intervals: &[(FinitePath, f64, f64)]) -> bool {
    let mut spans: Vec<(f64, f64)> = intervals.iter().map(|(_, lo, hi)| (*lo, *hi)).collect();
    spans.sort_by(|a, b| a.0.total_cmp(&b.0));
    spans.windows(2).all(|w| w[0].1 < w[1].0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures;
    use crate::perron::perron;

    const PHI: f64 = 1.618033988749894848;

    fn loops_setup() -> (StationaryDiagram, EdgeLabeling) {
        let d = fixtures::one_vertex_two_loops();
        let lab = EdgeLabeling::new(&d, vec![1.0], vec![1.0, 3.0]).unwrap();
        (d, lab)
    }

    #[test]
    fn lipschitz_series_closed_forms() {
        let (d, lab) = loops_setup();
        let alpha = 1.0 / 3.0;
        let all_l1 = d.periodic_spec(FinitePath::from_root(0), vec![0]).unwrap();
        let all_l2 = d.periodic_spec(FinitePath::from_root(0), vec![1]).unwrap();
        let alternating = d.periodic_spec(FinitePath::from_root(0), vec![0, 1]).unwrap();

        let (p, b) = lipschitz_embed(&d, &all_l1, 1, &lab, alpha, 50).unwrap();
        assert!((p[0] - 1.5).abs() < 1e-14 && b == 0.0);
        let (p, _) = lipschitz_embed(&d, &all_l2, 1, &lab, alpha, 50).unwrap();
        assert!((p[0] - 4.5).abs() < 1e-14);
        let (p, _) = lipschitz_embed(&d, &alternating, 1, &lab, alpha, 50).unwrap();
        assert!((p[0] - 2.25).abs() < 1e-14);
    }

    #[test]
    fn truncated_specs_carry_tail_bounds() {
        let (d, lab) = loops_setup();
        let spec = d.truncated_spec(FinitePath::new(0, vec![0; 10])).unwrap();
        let (p, bound) = lipschitz_embed(&d, &spec, 1, &lab, 1.0 / 3.0, 50).unwrap();
        let exact = d.periodic_spec(FinitePath::new(0, vec![0; 10]), vec![0]).unwrap();
        let (pe, _) = lipschitz_embed(&d, &exact, 1, &lab, 1.0 / 3.0, 50).unwrap();
        assert!(bound > 0.0);
        // the omitted tail difference is covered by the bound
        assert!((p[0] - pe[0]).abs() <= bound + 1e-15);
    }

    #[test]
    fn hoelder_series_closed_forms() {
        let (d, lab) = loops_setup();
        let alpha = 1.0 / 3.0;
        let all_l1 = d.periodic_spec(FinitePath::from_root(0), vec![0]).unwrap();
        let all_l2 = d.periodic_spec(FinitePath::from_root(0), vec![1]).unwrap();
        let (v, b) = hoelder_embed(&d, &all_l1, 1.0, &lab, alpha, 50).unwrap();
        assert!((v - 1.5).abs() < 1e-14 && b == 0.0);
        let (v, _) = hoelder_embed(&d, &all_l2, 1.0, &lab, alpha, 50).unwrap();
        assert!((v - 2.5).abs() < 1e-14);
        // large s: only the root label survives
        let (v, _) = hoelder_embed(&d, &all_l2, 60.0, &lab, alpha, 50).unwrap();
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn minimal_dimensions() {
        assert_eq!(min_embedding_dim(2, 1.0 / 3.0).unwrap(), 1);
        assert_eq!(min_embedding_dim(3, 1.0 / PHI).unwrap(), 3);
        assert_eq!(min_embedding_dim(2, 0.5).unwrap(), 2);
        assert!(min_embedding_dim(1, 0.5).is_err());
    }

    #[test]
    fn hoelder_thresholds_from_labels() {
        let (_, lab) = loops_setup();
        let t = min_hoelder_exponent(&lab, 1.0 / 3.0).unwrap();
        assert!((t - 0.6309297535714574).abs() < 1e-12);

        let fib = fixtures::fibonacci();
        let lab3 =
            EdgeLabeling::new(&fib, vec![1.0, 2.0], vec![1.0, 2.0, 4.0]).unwrap();
        let t3 = min_hoelder_exponent(&lab3, 1.0 / PHI).unwrap();
        assert!((t3 - 2.8808401808251130).abs() < 1e-12);

        let single = StationaryDiagram::new(vec!["a".into()], vec![(0, 0)]).unwrap();
        let lab1 = EdgeLabeling::uniform(&single);
        assert!(matches!(min_hoelder_exponent(&lab1, 0.5), Err(Error::SingleEdge)));
    }

    #[test]
    fn uniform_labels_reach_optimal_ratio() {
        for p in 2..=6usize {
            let d = StationaryDiagram::new(
                vec!["a".into()],
                (0..p).map(|_| (0u32, 0u32)).collect(),
            )
            .unwrap();
            let lab = EdgeLabeling::uniform(&d);
            let dmin = lab.delta_min().unwrap();
            let dmax = lab.delta_max().unwrap();
            assert!((dmin / (dmin + dmax) - 1.0 / p as f64).abs() < 1e-15);
        }
    }

    #[test]
    fn plans() {
        let fib = fixtures::fibonacci();
        let pf = perron(&fib, 1e-12, 100_000).unwrap();
        let tiling = SelfSimilarMetric::tiling(&pf, 1).unwrap();
        let plan = embedding_plan(&tiling, &fib, &pf, DEFAULT_PLAN_K_CAP).unwrap();
        assert_eq!(plan, EmbeddingPlan { k: 2, n: 2, basic_n: 3 });

        let loops = fixtures::one_vertex_two_loops();
        let pl = perron(&loops, 1e-12, 100).unwrap();
        let ml = SelfSimilarMetric::regular(1.0 / 3.0, 1).unwrap();
        let plan = embedding_plan(&ml, &loops, &pl, DEFAULT_PLAN_K_CAP).unwrap();
        assert_eq!(plan, EmbeddingPlan { k: 1, n: 1, basic_n: 1 });
    }

    #[test]
    fn distortion_constants_and_containment() {
        let (d, lab) = loops_setup();
        let m = SelfSimilarMetric::regular(1.0 / 3.0, 1).unwrap();
        let (lo, hi) = lipschitz_constants(&lab, m.alpha(), 1).unwrap();
        assert!((lo - 1.0).abs() < 1e-12 && (hi - 9.0).abs() < 1e-12);
        let r =
            distortion_report(EmbedMap::Lipschitz { n: 1 }, &m, &d, &lab, 500, 30, 11).unwrap();
        assert_eq!(r.violations, 0);
        assert!(r.empirical_min >= 1.0 - 1e-12 && r.empirical_max <= 9.0 + 1e-12);

        let (lo, hi) = hoelder_constants(&lab, m.alpha(), 1.0).unwrap();
        assert!((lo - 1.0).abs() < 1e-12 && (hi - 3.0).abs() < 1e-12);
        let r =
            distortion_report(EmbedMap::Hoelder { s: 1.0 }, &m, &d, &lab, 500, 30, 11).unwrap();
        assert_eq!(r.violations, 0);
    }

    #[test]
    fn refusal_below_threshold() {
        let (d, lab) = loops_setup();
        let m = SelfSimilarMetric::regular(1.0 / 3.0, 1).unwrap();
        let err = distortion_report(EmbedMap::Hoelder { s: 0.5 }, &m, &d, &lab, 10, 10, 1)
            .unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));
    }

    #[test]
    fn lower_constants_improve_with_refinement() {
        let (_, lab) = loops_setup();
        let alpha = 1.0 / 3.0;
        let mut prev = f64::NEG_INFINITY;
        for n in 1..=6 {
            let (lo, _) = lipschitz_constants(&lab, alpha, n).unwrap();
            assert!(lo >= prev);
            prev = lo;
        }
        let mut prev = f64::NEG_INFINITY;
        for s in [0.7, 1.0, 1.5, 2.0, 3.0] {
            let (lo, _) = hoelder_constants(&lab, alpha, s).unwrap();
            assert!(lo >= prev);
            prev = lo;
        }
    }

    #[test]
    fn one_point_path_space_yields_zero_distance_pairs() {
        let single = StationaryDiagram::new(vec!["a".into()], vec![(0, 0)]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(
            sample_distinct_pair(&single, &mut rng, 10),
            Err(Error::ZeroDistancePair)
        ));
    }

    #[test]
    fn depth_ten_cylinder_images_are_disjoint() {
        let (d, lab) = loops_setup();
        let intervals =
            hoelder_cylinder_intervals(&d, &lab, 1.0, 1.0 / 3.0, 10, 10_000).unwrap();
        assert_eq!(intervals.len(), 512);
        assert!(intervals_pairwise_disjoint(&intervals));
    }

    #[test]
    fn labeling_validation() {
        let d = fixtures::fibonacci();
        assert!(matches!(
            EdgeLabeling::new(&d, vec![1.0, 2.0], vec![1.0, 1.0, 2.0]),
            Err(Error::NotInjective)
        ));
        assert!(matches!(
            EdgeLabeling::new(&d, vec![1.0], vec![1.0, 2.0, 3.0]),
            Err(Error::MissingLabel { .. })
        ));
        assert!(EdgeLabeling::new(&d, vec![1.0, 2.0], vec![1.0, 2.0, 3.0]).is_ok());
    }
}
