//! Self-similar ultrametrics on the path space.
//!
//! A metric is a contraction parameter `alpha` in (0,1) plus per-vertex
//! scale factors: the cylinder of a depth-n path ending at v has diameter
//! `a_v * alpha^n`, and the distance of two distinct paths is the diameter
//! of their longest common prefix. Substitution mode takes `a_v = nu_v`,
//! `alpha = 1/Λ`; tiling mode over `R^d` takes the d-th roots, which
//! recovers the metric generally used on the canonical transversal.

use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{StationaryDiagram, VertexId};
use crate::error::{Error, Result};
use crate::math;
use crate::path::{common_prefix, Agreement, FinitePath, PathSpec};
use crate::perron::PerronData;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricMode {
    Regular,
    Substitution,
    Tiling { d: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfSimilarMetric {
    alpha: f64,
    scale: Vec<f64>,
    mode: MetricMode,
}

/// Depth budget for deciding distances of path specs.
pub const DEFAULT_MAX_DEPTH: usize = 1000;

impl SelfSimilarMetric {
    /// Regular metric: all scale factors 1.
    pub fn regular(alpha: f64, vertex_count: usize) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::BadParameter { what: "alpha must lie in (0,1)" });
        }
        Ok(SelfSimilarMetric { alpha, scale: vec![1.0; vertex_count], mode: MetricMode::Regular })
    }

    /// Substitution metric: `a_v = nu_v`, `alpha = 1/Λ`.
    pub fn substitution(perron: &PerronData) -> Result<Self> {
        if perron.lambda <= 1.0 {
            return Err(Error::DegenerateLambda { lambda: perron.lambda });
        }
        Ok(SelfSimilarMetric {
            alpha: 1.0 / perron.lambda,
            scale: perron.nu.clone(),
            mode: MetricMode::Substitution,
        })
    }

    /// Tiling-transversal metric for a substitution tiling of `R^d`:
    /// `a_v = nu_v^{1/d}`, `alpha = Λ^{-1/d}`.
    pub fn tiling(perron: &PerronData, d: u32) -> Result<Self> {
        if d < 1 {
            return Err(Error::BadParameter { what: "tiling dimension must be >= 1" });
        }
        if perron.lambda <= 1.0 {
            return Err(Error::DegenerateLambda { lambda: perron.lambda });
        }
        let (alpha, scale) = if d == 1 {
            (1.0 / perron.lambda, perron.nu.clone())
        } else {
            let inv = 1.0 / d as f64;
            (
                math::powf(perron.lambda, -inv),
                perron.nu.iter().map(|&v| math::powf(v, inv)).collect(),
            )
        };
        Ok(SelfSimilarMetric { alpha, scale, mode: MetricMode::Tiling { d } })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn mode(&self) -> MetricMode {
        self.mode
    }

    pub fn scales(&self) -> &[f64] {
        &self.scale
    }

    /// Scale factor of a range vertex; the root (empty path) has scale 1.
    pub fn scale_of(&self, v: Option<VertexId>) -> f64 {
        match v {
            None => 1.0,
            Some(v) => self.scale[v as usize],
        }
    }

    pub fn min_scale(&self) -> f64 {
        self.scale.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_scale(&self) -> f64 {
        self.scale.iter().copied().fold(0.0, f64::max)
    }

    /// `diam([γ]) = a_{r(γ)} alpha^{|γ|}`; the empty path (whole space)
    /// has diameter 1.
    pub fn cylinder_diameter(&self, d: &StationaryDiagram, path: &FinitePath) -> Result<f64> {
        d.validate_path(path)?;
        Ok(self.scale_of(d.range_of(path)) * math::powi(self.alpha, path.depth() as i32))
    }

    /// Bi-Lipschitz comparison constants to the regular metric:
    /// `(a/a', a'/a)` with `a = min scale`, `a' = max scale`.
    pub fn regularize_bounds(&self) -> (f64, f64) {
        let (a, a_max) = (self.min_scale(), self.max_scale());
        (a / a_max, a_max / a)
    }

    /// Ultrametric distance of two path specs. Equality is decided from
    /// canonical forms first; otherwise the distance is the diameter of
    /// the longest common prefix, and agreement past `max_depth` without a
    /// proof of equality is an explicit error.
    pub fn distance(
        &self,
        d: &StationaryDiagram,
        x: &PathSpec,
        y: &PathSpec,
        max_depth: usize,
    ) -> Result<f64> {
        d.validate_spec(x)?;
        d.validate_spec(y)?;
        if x.same_path(y) == Some(true) {
            return Ok(0.0);
        }
        match common_prefix(x, y, max_depth) {
            (Agreement::Exact(_), prefix) => self.cylinder_diameter(d, &prefix),
            (Agreement::AtLeast(depth), _) => Err(Error::UndecidableAtDepth { depth }),
        }
    }

    /// Distance in the k-th telescoped metric, under the canonical
    /// identification of path spaces: a prefix agreement of m edges
    /// becomes floor(m/k) telescoped levels, so the distance is the
    /// diameter of the prefix cut at depth `k*floor(m/k)` with parameter
    /// `alpha^k`.
    pub fn telescoped_distance(
        &self,
        d: &StationaryDiagram,
        k: u32,
        x: &PathSpec,
        y: &PathSpec,
        max_depth: usize,
    ) -> Result<f64> {
        if k < 1 {
            return Err(Error::BadTelescope { k });
        }
        d.validate_spec(x)?;
        d.validate_spec(y)?;
        if x.same_path(y) == Some(true) {
            return Ok(0.0);
        }
        match common_prefix(x, y, max_depth) {
            (Agreement::Exact(m), prefix) => {
                let cut = (m / k as usize) * k as usize;
                self.cylinder_diameter(d, &prefix.truncated(cut))
            }
            (Agreement::AtLeast(depth), _) => Err(Error::UndecidableAtDepth { depth }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures;
    use crate::perron::perron;

    const PHI: f64 = 1.618033988749894848;

    fn fib_perron() -> PerronData {
        perron(&fixtures::fibonacci(), 1e-12, 100_000).unwrap()
    }

    #[test]
    fn regular_diameters() {
        let loops = fixtures::one_vertex_two_loops();
        let m = SelfSimilarMetric::regular(1.0 / 3.0, 1).unwrap();
        let p = FinitePath::new(0, vec![0, 1]);
        assert!((m.cylinder_diameter(&loops, &p).unwrap() - 1.0 / 27.0).abs() < 1e-16);
        assert_eq!(m.cylinder_diameter(&loops, &FinitePath::empty()).unwrap(), 1.0);
    }

    #[test]
    fn substitution_diameters() {
        let fib = fixtures::fibonacci();
        let m = SelfSimilarMetric::substitution(&fib_perron()).unwrap();
        // depth 2 ending at a: nu_a * phi^-2 = 0.2360679...
        let p = FinitePath::new(0, vec![0]);
        assert!((m.cylinder_diameter(&fib, &p).unwrap() - 0.23606797749978970).abs() < 1e-9);
    }

    #[test]
    fn tiling_dimension_one_matches_substitution() {
        let fib = fixtures::fibonacci();
        let pd = fib_perron();
        let sub = SelfSimilarMetric::substitution(&pd).unwrap();
        let til = SelfSimilarMetric::tiling(&pd, 1).unwrap();
        for path in fib.enumerate_paths(3, 100).unwrap() {
            let a = sub.cylinder_diameter(&fib, &path).unwrap();
            let b = til.cylinder_diameter(&fib, &path).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn alpha_range_enforced() {
        assert!(SelfSimilarMetric::regular(0.0, 1).is_err());
        assert!(SelfSimilarMetric::regular(1.0, 1).is_err());
    }

    #[test]
    fn regularize_bounds_by_mode() {
        let pd = fib_perron();
        let reg = SelfSimilarMetric::regular(0.5, 2).unwrap();
        assert_eq!(reg.regularize_bounds(), (1.0, 1.0));

        let sub = SelfSimilarMetric::substitution(&pd).unwrap();
        let (c1, c2) = sub.regularize_bounds();
        assert!((c1 - 1.0 / PHI).abs() < 1e-9);
        assert!((c2 - PHI).abs() < 1e-9);

        let til = SelfSimilarMetric::tiling(&pd, 2).unwrap();
        let (t1, t2) = til.regularize_bounds();
        assert!((t1 - (1.0f64 / PHI).sqrt()).abs() < 1e-9);
        assert!((t2 - PHI.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn regularization_band_on_sampled_pairs() {
        // on pairs with a nonempty common prefix, rho_m / rho_regular is
        // the scale factor of the prefix range, in [min a, max a];
        // relative to each other, sampled ratios stay within the (c1, c2)
        // band. (Pairs split at the root take the whole-space diameter 1
        // in both metrics and sit outside the stationary scale family.)
        let fib = fixtures::fibonacci();
        let pd = fib_perron();
        let sub = SelfSimilarMetric::substitution(&pd).unwrap();
        let reg = SelfSimilarMetric::regular(sub.alpha(), 2).unwrap();
        let (c1, c2) = sub.regularize_bounds();
        let mut ratios = Vec::new();
        for seed in 0..300u64 {
            let x = fib.close_into_spec(fib.sample_path(12, 2 * seed).unwrap()).unwrap();
            let y = fib.close_into_spec(fib.sample_path(12, 2 * seed + 1).unwrap()).unwrap();
            if x.same_path(&y) == Some(true)
                || x.prefix().root_edge() != y.prefix().root_edge()
            {
                continue;
            }
            let rho_m = sub.distance(&fib, &x, &y, 100).unwrap();
            let rho_r = reg.distance(&fib, &x, &y, 100).unwrap();
            let r = rho_m / rho_r;
            assert!(sub.min_scale() * (1.0 - 1e-12) <= r && r <= sub.max_scale() * (1.0 + 1e-12));
            ratios.push(r);
        }
        assert!(ratios.len() > 50);
        let lo = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = ratios.iter().copied().fold(0.0, f64::max);
        for &a in &ratios {
            for &b in &ratios {
                let rel = a / b;
                assert!(c1 * (1.0 - 1e-12) <= rel && rel <= c2 * (1.0 + 1e-12));
            }
        }
        assert!(hi / lo <= c2 * (1.0 + 1e-12));
    }

    #[test]
    fn distances() {
        let loops = fixtures::one_vertex_two_loops();
        let m = SelfSimilarMetric::regular(1.0 / 3.0, 1).unwrap();
        let x = loops.periodic_spec(FinitePath::from_root(0), vec![0]).unwrap();
        assert_eq!(m.distance(&loops, &x, &x.clone(), 100).unwrap(), 0.0);

        // agree on root edge and one body edge: distance alpha^2
        let y = loops.periodic_spec(FinitePath::new(0, vec![0, 1]), vec![0]).unwrap();
        assert!((m.distance(&loops, &x, &y, 100).unwrap() - 1.0 / 9.0).abs() < 1e-16);

        // differ at the root edge: whole-space diameter
        let fib = fixtures::fibonacci();
        let mf = SelfSimilarMetric::regular(1.0 / PHI, 2).unwrap();
        let xa = fib.periodic_spec(FinitePath::from_root(0), vec![0]).unwrap();
        let xb = fib.periodic_spec(FinitePath::from_root(1), vec![2, 1]).unwrap();
        assert_eq!(mf.distance(&fib, &xa, &xb, 100).unwrap(), 1.0);
    }

    #[test]
    fn undecidable_reported() {
        let loops = fixtures::one_vertex_two_loops();
        let m = SelfSimilarMetric::regular(1.0 / 3.0, 1).unwrap();
        let x = loops.truncated_spec(FinitePath::new(0, vec![0, 0])).unwrap();
        let y = loops.periodic_spec(FinitePath::new(0, vec![0, 0]), vec![0]).unwrap();
        assert!(matches!(
            m.distance(&loops, &x, &y, 100),
            Err(Error::UndecidableAtDepth { depth: 3 })
        ));
    }

    #[test]
    fn telescoped_distance_uses_block_depth() {
        let loops = fixtures::one_vertex_two_loops();
        let m = SelfSimilarMetric::regular(1.0 / 3.0, 1).unwrap();
        // agreement m = 5
        let x = loops.periodic_spec(FinitePath::new(0, vec![0, 0, 0, 0, 0]), vec![0]).unwrap();
        let y = loops.periodic_spec(FinitePath::new(0, vec![0, 0, 0, 0, 1]), vec![0]).unwrap();
        let rho = m.distance(&loops, &x, &y, 100).unwrap();
        assert!((rho - 3.0f64.powi(-5)).abs() < 1e-18);
        let rho2 = m.telescoped_distance(&loops, 2, &x, &y, 100).unwrap();
        assert!((rho2 - 3.0f64.powi(-4)).abs() < 1e-18);
        // lemma: alpha^k rho^(k) < rho <= rho^(k)
        assert!(3.0f64.powi(-2) * rho2 < rho && rho <= rho2);
    }
}
