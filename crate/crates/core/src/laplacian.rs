//! Pearson-Bellissard Laplacian spectra on the path space.
//!
//! For `s > s0 + 2` the operator is bounded and its eigenvalues are
//! parametrized by finite paths: with `Λ_s = α^{s-s0-2}` the eigenvalue of
//! a path with body edges `e_1..e_n` is
//! `Λ_s^n λ_{s(e_n)} + Σ_j Λ_s^{j-1} β(e_j, s)`, with multiplicity one
//! less than the number of one-level extensions. As the depth grows the
//! seed term vanishes and the values accumulate on the omega-spectrum
//! `λ_x(s) = Σ_{j>=1} β(x_j, s) Λ_s^{j-1}`, indexed by infinite paths.
//!
//! The exact coefficients `β(e, s)` and the seed eigenvalues are inputs:
//! the default β is the cylinder-measure ratio `ν_{r(e)}/(Λ ν_{s(e)})`
//! (it depends only on the measures of the cylinders at the two ends and
//! is injective on diagrams that pass the tech check), seeds default to
//! zero, and finite-depth tables are seed-relative.

use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{EdgeId, StationaryDiagram};
use crate::embed::{position_series, sample_distinct_pair};
use crate::error::{Error, Result};
use crate::math;
use crate::metric::SelfSimilarMetric;
use crate::path::{FinitePath, PathSpec, PositionEdge};
use crate::perron::{Measure, PerronData};

/// Boundedness regime of the Laplacian at exponent `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Bounded,
    Unbounded,
}

/// `Λ_s = α^{s - s0 - 2}` and its regime: `Λ_s < 1` (bounded operator)
/// exactly when `s > s0 + 2`.
pub fn lambda_s(s: f64, s0: f64, alpha: f64) -> Result<(f64, Regime)> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::BadParameter { what: "alpha must lie in (0,1)" });
    }
    let value = math::powf(alpha, s - s0 - 2.0);
    let regime = if s > s0 + 2.0 { Regime::Bounded } else { Regime::Unbounded };
    Ok((value, regime))
}

/// Edge coefficients, possibly depending on the exponent.
pub trait BetaFn {
    fn beta(&self, e: EdgeId, s: f64) -> f64;
}

/// An s-independent coefficient table indexed by edge id.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantBeta(pub Vec<f64>);

impl BetaFn for ConstantBeta {
    fn beta(&self, e: EdgeId, _s: f64) -> f64 {
        self.0[e as usize]
    }
}

/// Default coefficients: `β(e) = ν_{r(e)} / (Λ ν_{s(e)})`, the ratio of
/// the invariant measures one level apart across the edge.
pub fn default_beta(d: &StationaryDiagram, measure: &Measure) -> Vec<f64> {
    let p = measure.perron();
    d.edges()
        .iter()
        .map(|e| p.nu[e.range as usize] / (p.lambda * p.nu[e.source as usize]))
        .collect()
}

/// Whether a coefficient table is injective up to `tol` (degenerate
/// tables collapse the spectrum and are flagged by callers).
pub fn values_injective(values: &[f64], tol: f64) -> bool {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.windows(2).all(|w| w[1] - w[0] > tol)
}

/// Everything needed to evaluate eigenvalues at a fixed exponent `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumParams {
    pub s: f64,
    pub s0: f64,
    pub alpha: f64,
    pub lambda_s: f64,
    seeds: Vec<f64>,
    beta: Vec<f64>,
}

impl SpectrumParams {
    /// `beta` holds one coefficient per edge (already resolved at `s`);
    /// `seeds` are the per-vertex depth-1 eigenvalues, defaulting to 0.
    pub fn new(
        d: &StationaryDiagram,
        s: f64,
        s0: f64,
        alpha: f64,
        beta: Vec<f64>,
        seeds: Option<Vec<f64>>,
    ) -> Result<Self> {
        if beta.len() != d.edge_count() {
            return Err(Error::MissingLabel { edge: beta.len() as u32 });
        }
        if beta.iter().any(|&b| !(b > 0.0)) {
            return Err(Error::BadParameter { what: "beta coefficients must be positive" });
        }
        let seeds = seeds.unwrap_or_else(|| vec![0.0; d.vertex_count()]);
        if seeds.len() != d.vertex_count() {
            return Err(Error::BadParameter { what: "one seed eigenvalue per vertex required" });
        }
        let (lambda_s, _) = lambda_s(s, s0, alpha)?;
        Ok(SpectrumParams { s, s0, alpha, lambda_s, seeds, beta })
    }

    pub fn beta_values(&self) -> &[f64] {
        &self.beta
    }

    pub fn seeds(&self) -> &[f64] {
        &self.seeds
    }

    pub fn beta_sup(&self) -> f64 {
        self.beta.iter().copied().fold(0.0, f64::max)
    }

    pub fn regime(&self) -> Regime {
        if self.s > self.s0 + 2.0 {
            Regime::Bounded
        } else {
            Regime::Unbounded
        }
    }
}

/// An eigenvalue attached to a finite path.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenRecord {
    pub path: FinitePath,
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalue of a nonempty finite path. With body edges `e_1..e_n` the
/// value is `Λ_s^n seed[s(e_n)] + Σ_j Λ_s^{j-1} β(e_j)`; a bare root edge
/// is the depth-1 path whose value is its seed.
pub fn eigenvalue(
    d: &StationaryDiagram,
    path: &FinitePath,
    params: &SpectrumParams,
) -> Result<EigenRecord> {
    if path.is_empty() {
        return Err(Error::EmptyPath);
    }
    d.validate_path(path)?;
    let body = path.body();
    let n = body.len();
    let seed_vertex = match body.last() {
        Some(&e) => d.edges()[e as usize].source,
        None => path.root_edge().expect("nonempty path"),
    };
    let mut value = math::powi(params.lambda_s, n as i32) * params.seeds[seed_vertex as usize];
    let mut weight = 1.0;
    for &e in body {
        value += weight * params.beta[e as usize];
        weight *= params.lambda_s;
    }
    let multiplicity = d.num_extensions(path)? - 1;
    Ok(EigenRecord { path: path.clone(), value, multiplicity })
}

/// Eigenvalue records for all paths of depth `0..=max_depth`. The empty
/// path carries the root eigenspace (multiplicity `#V - 1`, value 0: the
/// bottom of the seed-relative spectrum).
pub fn eigen_table(
    d: &StationaryDiagram,
    params: &SpectrumParams,
    max_depth: usize,
    cap: usize,
) -> Result<Vec<EigenRecord>> {
    let mut total: u128 = 0;
    for k in 0..=max_depth {
        total = total.checked_add(d.path_count(k)?).ok_or(Error::AdjacencyOverflow)?;
    }
    if total > cap as u128 {
        return Err(Error::EnumerationCap { needed: total, cap });
    }
    let mut out = Vec::with_capacity(total as usize);
    out.push(EigenRecord {
        path: FinitePath::empty(),
        value: 0.0,
        multiplicity: d.vertex_count() - 1,
    });
    for k in 1..=max_depth {
        for path in d.enumerate_paths(k, cap)? {
            out.push(eigenvalue(d, &path, params)?);
        }
    }
    Ok(out)
}

/// A point of the omega-spectrum approximation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaPoint {
    pub value: f64,
    pub tail_bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaMode {
    /// All series truncated after `depth` body terms.
    Enumerate,
    /// `budget` sampled paths, closed into periodic specs and evaluated
    /// exactly.
    Sample { budget: usize },
}

/// Exact omega-spectrum point of a single (periodic) path spec:
/// `λ_x = Σ_{j>=1} β(x_j) Λ_s^{j-1}`. Truncated specs carry the
/// geometric tail bound.
pub fn omega_value(
    d: &StationaryDiagram,
    params: &SpectrumParams,
    x: &PathSpec,
) -> Result<OmegaPoint> {
    require_bounded(params)?;
    d.validate_spec(x)?;
    let beta = |pe: PositionEdge| match pe {
        PositionEdge::Body(e) => params.beta_values()[e as usize],
        PositionEdge::Root(_) => unreachable!("series starts past the root level"),
    };
    let (value, exact, terms) =
        position_series(x, beta, 1, 1, params.lambda_s, x.prefix().depth());
    let tail_bound = if exact {
        0.0
    } else {
        params.beta_sup() * math::powi(params.lambda_s, terms as i32) / (1.0 - params.lambda_s)
    };
    Ok(OmegaPoint { value, tail_bound })
}

/// Approximate the omega-spectrum as a sorted, deduplicated set of
/// points. `depth` is the number of body terms kept in each series.
pub fn omega_spectrum(
    d: &StationaryDiagram,
    params: &SpectrumParams,
    depth: usize,
    mode: OmegaMode,
    cap: usize,
    seed: u64,
) -> Result<Vec<OmegaPoint>> {
    require_bounded(params)?;
    if depth < 1 {
        return Err(Error::BadParameter { what: "omega depth must be >= 1" });
    }
    let mut points = Vec::new();
    match mode {
        OmegaMode::Enumerate => {
            let tail_bound = params.beta_sup() * math::powi(params.lambda_s, depth as i32)
                / (1.0 - params.lambda_s);
            for path in d.enumerate_paths(depth + 1, cap)? {
                let mut value = 0.0;
                let mut weight = 1.0;
                for &e in path.body() {
                    value += weight * params.beta_values()[e as usize];
                    weight *= params.lambda_s;
                }
                points.push(OmegaPoint { value, tail_bound });
            }
        }
        OmegaMode::Sample { budget } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..budget {
                let prefix = d.sample_path_rng(&mut rng, depth + 1, None)?;
                let spec = d.close_into_spec(prefix)?;
                points.push(omega_value(d, params, &spec)?);
            }
        }
    }
    points.sort_by(|a, b| a.value.total_cmp(&b.value));
    points.dedup_by(|a, b| a.value == b.value && a.tail_bound == b.tail_bound);
    Ok(points)
}

fn require_bounded(params: &SpectrumParams) -> Result<()> {
    if params.regime() == Regime::Unbounded {
        return Err(Error::UnboundedRegime { s: params.s, threshold: params.s0 + 2.0 });
    }
    Ok(())
}

/// Outcome of the separation conditions enabling the Hölder
/// homeomorphism with the omega-spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct TechReport {
    /// All adjacency entries <= 1.
    pub edges_simple: bool,
    /// Perron eigenvector coordinates pairwise distinct.
    pub nu_distinct: bool,
    /// Per grid point: every pair of distinct edges is separated, either
    /// directly or through all pairs of their extensions.
    pub beta_separated: Vec<(f64, bool)>,
    /// Least grid point from which separation persists; an estimate only.
    pub s1_estimate: Option<f64>,
}

impl TechReport {
    pub fn passed(&self) -> bool {
        self.edges_simple && self.nu_distinct && self.beta_separated.iter().all(|&(_, ok)| ok)
    }
}

const SEPARATION_TOL: f64 = 1e-9;

/// Default scan grid: 32 points on `(s0+2, s0+12]`.
pub fn default_tech_grid(s0: f64) -> Vec<f64> {
    (1..=32).map(|i| s0 + 2.0 + i as f64 * (10.0 / 32.0)).collect()
}

/// Check the separation conditions for `beta` over a grid of exponents.
pub fn check_tech<B: BetaFn>(
    d: &StationaryDiagram,
    perron: &PerronData,
    beta: &B,
    s_grid: &[f64],
) -> TechReport {
    let edges_simple = d.adjacency().iter().all(|&a| a <= 1);
    let nu_distinct = {
        let mut nu = perron.nu.clone();
        nu.sort_by(f64::total_cmp);
        nu.windows(2).all(|w| w[1] - w[0] > SEPARATION_TOL)
    };
    let beta_separated: Vec<(f64, bool)> =
        s_grid.iter().map(|&s| (s, separated_at(d, beta, s))).collect();
    let s1_estimate = beta_separated
        .iter()
        .rev()
        .take_while(|&&(_, ok)| ok)
        .last()
        .map(|&(s, _)| s);
    TechReport { edges_simple, nu_distinct, beta_separated, s1_estimate }
}

fn separated_at<B: BetaFn>(d: &StationaryDiagram, beta: &B, s: f64) -> bool {
    let p = d.edge_count() as u32;
    for e in 0..p {
        for f in (e + 1)..p {
            if math::abs(beta.beta(e, s) - beta.beta(f, s)) > SEPARATION_TOL {
                continue;
            }
            // fall back to separation of all extension pairs
            let ext_e = d.edges_from(d.edges()[e as usize].range);
            let ext_f = d.edges_from(d.edges()[f as usize].range);
            let all_separated = ext_e.iter().all(|&e2| {
                ext_f.iter().all(|&f2| {
                    math::abs(beta.beta(e2, s) - beta.beta(f2, s)) > SEPARATION_TOL
                })
            });
            if !all_separated {
                return false;
            }
        }
    }
    true
}

/// Exponent thresholds for the Hölder homeomorphism with the
/// omega-spectrum of a tiling transversal in dimension `d_tile`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HoelderThresholds {
    /// `d + 2 + d log p / log Λ` (uniform labels, no telescoping).
    pub basic: f64,
    /// `2(d+1)`, reached by telescoping.
    pub telescoped: f64,
    /// `max(basic, s1)` when an `s1` estimate is supplied.
    pub effective: f64,
}

pub fn hoelder_thresholds(
    d_tile: u32,
    p: usize,
    lambda: f64,
    s1: Option<f64>,
) -> Result<HoelderThresholds> {
    if lambda <= 1.0 {
        return Err(Error::DegenerateLambda { lambda });
    }
    let dt = d_tile as f64;
    let basic = dt + 2.0 + dt * math::ln(p as f64) / math::ln(lambda);
    let telescoped = 2.0 * (dt + 1.0);
    let effective = match s1 {
        Some(s1) => basic.max(s1),
        None => basic,
    };
    Ok(HoelderThresholds { basic, telescoped, effective })
}

/// Empirical two-sided Hölder certificate for the spectrum map
/// `x ↦ λ_x(s)` against `ρ(x,y)^E` with `E = s - s0 - 2` (the exponent
/// produced by substituting `Λ_s` for `α^s`).
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaHoelderReport {
    pub exponent: f64,
    pub theoretical_lo: f64,
    pub theoretical_hi: f64,
    pub empirical_min: f64,
    pub empirical_max: f64,
    pub samples: usize,
    pub depth: usize,
    pub seed: u64,
    pub violations: usize,
    /// True when the derived lower constant is not positive, making the
    /// lower bound vacuous at this `s` (the exponent is below the
    /// effective threshold of this beta table).
    pub lower_vacuous: bool,
}

/// Sample path pairs and certify
/// `c- ρ^E <= |λ_x - λ_y| <= c+ ρ^E` with constants derived from the
/// beta deltas and `Λ_s`: `c- = (δmin - Λ_s(δmin+δmax))/(1-Λ_s)` and
/// `c+ = δmax/((1-Λ_s) Λ_s)`; per-vertex scales of the metric are folded
/// into the certified range.
pub fn omega_hoelder_check(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    params: &SpectrumParams,
    samples: usize,
    depth: usize,
    seed: u64,
) -> Result<OmegaHoelderReport> {
    require_bounded(params)?;
    if samples < 1 || depth < 2 {
        return Err(Error::BadParameter { what: "need samples >= 1 and depth >= 2" });
    }
    let mut sorted = params.beta_values().to_vec();
    sorted.sort_by(f64::total_cmp);
    if sorted.len() < 2 {
        return Err(Error::SingleEdge);
    }
    let dmin = sorted.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    let dmax = sorted[sorted.len() - 1] - sorted[0];
    let ls = params.lambda_s;
    let c_lo = (dmin - ls * (dmin + dmax)) / (1.0 - ls);
    let c_hi = dmax / ((1.0 - ls) * ls);
    let exponent = params.s - params.s0 - 2.0;
    let lo_adj = c_lo / math::powf(m.max_scale(), exponent);
    let hi_adj = c_hi / math::powf(m.min_scale(), exponent);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut empirical_min = f64::INFINITY;
    let mut empirical_max: f64 = 0.0;
    let mut violations = 0usize;
    for _ in 0..samples {
        let (x, y) = sample_distinct_pair(d, &mut rng, depth)?;
        let rho = m.distance(d, &x, &y, 2 * depth + 16)?;
        let lx = omega_value(d, params, &x)?.value;
        let ly = omega_value(d, params, &y)?.value;
        let ratio = math::abs(lx - ly) / math::powf(rho, exponent);
        empirical_min = empirical_min.min(ratio);
        empirical_max = empirical_max.max(ratio);
        if ratio < lo_adj || ratio > hi_adj {
            violations += 1;
        }
    }
    Ok(OmegaHoelderReport {
        exponent,
        theoretical_lo: lo_adj,
        theoretical_hi: hi_adj,
        empirical_min,
        empirical_max,
        samples,
        depth,
        seed,
        violations,
        lower_vacuous: c_lo <= 0.0,
    })
}
