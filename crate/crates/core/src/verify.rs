//! Cross-module invariant suite, shared by the test harness and the
//! `verify` CLI subcommand.
//!
//! Each check samples or enumerates according to [`VerifyOptions`] and
//! returns a named pass/fail outcome with a one-line detail. Floating
//! comparisons that are equalities in exact arithmetic (weights built
//! from different expressions of the same value) carry a 1e-9 relative
//! slack; counts and agreement depths are compared exactly.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::StationaryDiagram;
use crate::dimension;
use crate::embed::{self, EdgeLabeling, EmbedMap};
use crate::error::{Error, Result};
use crate::laplacian::{self, ConstantBeta, SpectrumParams};
use crate::math;
use crate::metric::SelfSimilarMetric;
use crate::path::PathSpec;
use crate::perron::{perron, Measure};

#[derive(Debug, Clone, PartialEq)]
pub struct InvariantOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub outcomes: Vec<InvariantOutcome>,
    /// Set when the spectrum was requested but the tech conditions fail.
    pub tech_failure: bool,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub samples: usize,
    pub depth: usize,
    pub seed: u64,
    pub cap: usize,
    pub include_spectrum: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 10_000,
            depth: 30,
            seed: 0,
            cap: crate::DEFAULT_ENUM_CAP,
            include_spectrum: false,
        }
    }
}

const REL_SLACK: f64 = 1e-9;

fn outcome(name: &str, passed: bool, detail: String) -> InvariantOutcome {
    InvariantOutcome { name: String::from(name), passed, detail }
}

/// Run the invariant suite on a diagram with its metric.
pub fn run(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    if !d.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let pd = perron(d, 1e-14, 200_000)?;
    let mut outcomes = alloc::vec![
        counting_identity(d, opts),
        telescope_composition(d),
        primitivity_invariance(d),
        prefix_ultrametricity(d, opts),
        metric_ultrametricity(d, m, opts),
        weight_monotonicity(d, m, opts),
        telescoping_comparison(d, m, opts),
        measure_additivity(d, &pd, opts),
        measure_total_mass(d, &pd, opts),
        perron_residual(&pd),
        abscissa_containment(d, m, &pd),
        content_dichotomy(d, m, &pd, opts),
        dimension_telescoping(d, m, &pd),
        eigencount_identity(d, opts),
        lipschitz_certificate(d, m, &pd, opts),
        hoelder_certificate(d, m, opts),
        seed_independence(d, m, &pd, opts),
        truncation_consistency(d, m, &pd, opts),
    ];

    let mut tech_failure = false;
    if opts.include_spectrum {
        let beta = ConstantBeta(laplacian::default_beta(d, &Measure::new(pd.clone())));
        let s0 = dimension::abscissa(m, &pd)?;
        let grid = laplacian::default_tech_grid(s0);
        let tech = laplacian::check_tech(d, &pd, &beta, &grid);
        let passed = tech.passed();
        tech_failure = !passed;
        outcomes.push(outcome(
            "tech-conditions",
            passed,
            format!(
                "edges_simple={} nu_distinct={} separated_grid={}",
                tech.edges_simple,
                tech.nu_distinct,
                tech.beta_separated.iter().filter(|&&(_, ok)| ok).count()
            ),
        ));
        if passed {
            outcomes.push(omega_certificate(d, m, s0, &beta.0, opts));
        }
    }

    Ok(VerifyReport { outcomes, tech_failure })
}

fn sample_spec(d: &StationaryDiagram, rng: &mut ChaCha8Rng, depth: usize) -> Result<PathSpec> {
    let prefix = d.sample_path_rng(rng, depth, None)?;
    d.close_into_spec(prefix)
}

fn counting_identity(d: &StationaryDiagram, opts: &VerifyOptions) -> InvariantOutcome {
    let mut depth_limit = 0;
    while depth_limit < 10 {
        match d.path_count(depth_limit + 2) {
            Ok(c) if c <= opts.cap as u128 => depth_limit += 1,
            _ => break,
        }
    }
    let check = || -> Result<bool> {
        for n in 0..=depth_limit {
            let mut extension_sum: u128 = 0;
            for path in d.enumerate_paths(n, opts.cap)? {
                extension_sum += d.num_extensions(&path)? as u128;
            }
            if extension_sum != d.path_count(n + 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    match check() {
        Ok(ok) => outcome("counting-identity", ok, format!("levels 0..={depth_limit}")),
        Err(e) => outcome("counting-identity", false, format!("{e}")),
    }
}

fn telescope_composition(d: &StationaryDiagram) -> InvariantOutcome {
    let check = || -> Result<bool> {
        for (k, j) in [(2u32, 2u32), (2, 3), (3, 2)] {
            let nested = d.telescope(k)?.telescope(j)?;
            let direct = d.telescope(k * j)?;
            if nested.adjacency() != direct.adjacency() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    match check() {
        Ok(ok) => outcome("telescope-composition", ok, String::from("A^(kj) for kj in {4,6}")),
        Err(e) => outcome("telescope-composition", false, format!("{e}")),
    }
}

fn primitivity_invariance(d: &StationaryDiagram) -> InvariantOutcome {
    let base = d.is_primitive();
    let check = || -> Result<bool> {
        for k in 1..=3 {
            if d.telescope(k)?.is_primitive() != base {
                return Ok(false);
            }
        }
        Ok(true)
    };
    match check() {
        Ok(ok) => outcome("primitivity-telescoping", ok, format!("primitive={base}, k in 1..=3")),
        Err(e) => outcome("primitivity-telescoping", false, format!("{e}")),
    }
}

fn prefix_ultrametricity(d: &StationaryDiagram, opts: &VerifyOptions) -> InvariantOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xA1);
    let triples = (opts.samples / 10).max(100);
    let max_depth = 2 * opts.depth + 16;
    let mut check = || -> Result<usize> {
        let mut violations = 0;
        for _ in 0..triples {
            let x = sample_spec(d, &mut rng, opts.depth)?;
            let y = sample_spec(d, &mut rng, opts.depth)?;
            let z = sample_spec(d, &mut rng, opts.depth)?;
            let m = |a: &PathSpec, b: &PathSpec| -> usize {
                match crate::path::common_prefix(a, b, max_depth).0 {
                    crate::path::Agreement::Exact(m) => m,
                    crate::path::Agreement::AtLeast(m) => m,
                }
            };
            let (mxy, mxz, mzy) = (m(&x, &y), m(&x, &z), m(&z, &y));
            if mxy < mxz.min(mzy) {
                violations += 1;
            }
            // symmetry
            if m(&y, &x) != mxy {
                violations += 1;
            }
        }
        Ok(violations)
    };
    match check() {
        Ok(v) => outcome("prefix-ultrametricity", v == 0, format!("{triples} triples, {v} violations")),
        Err(e) => outcome("prefix-ultrametricity", false, format!("{e}")),
    }
}

fn metric_ultrametricity(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    opts: &VerifyOptions,
) -> InvariantOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xA2);
    let max_depth = 2 * opts.depth + 16;
    let mut check = || -> Result<usize> {
        let mut violations = 0;
        for _ in 0..opts.samples {
            let x = sample_spec(d, &mut rng, opts.depth)?;
            let y = sample_spec(d, &mut rng, opts.depth)?;
            let z = sample_spec(d, &mut rng, opts.depth)?;
            let rxy = m.distance(d, &x, &y, max_depth)?;
            let rxz = m.distance(d, &x, &z, max_depth)?;
            let rzy = m.distance(d, &z, &y, max_depth)?;
            if rxy > rxz.max(rzy) * (1.0 + REL_SLACK) {
                violations += 1;
            }
        }
        Ok(violations)
    };
    match check() {
        Ok(v) => outcome(
            "ultrametric-inequality",
            v == 0,
            format!("{} triples, {v} violations", opts.samples),
        ),
        Err(e) => outcome("ultrametric-inequality", false, format!("{e}")),
    }
}

fn weight_monotonicity(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    opts: &VerifyOptions,
) -> InvariantOutcome {
    let check = || -> Result<(bool, f64)> {
        let mut ok = true;
        let depth = 6usize;
        for path in d.enumerate_paths(depth, opts.cap)? {
            let diam = m.cylinder_diameter(d, &path)?;
            for cut in 0..depth {
                let anc = m.cylinder_diameter(d, &path.truncated(cut))?;
                if diam > anc * (1.0 + REL_SLACK) {
                    ok = false;
                }
            }
        }
        // sup over levels shrinks by exactly alpha per level
        let mut previous_sup = f64::INFINITY;
        let mut last = 0.0;
        for n in 1..=8usize {
            let sup = d
                .enumerate_paths(n, opts.cap)?
                .iter()
                .map(|p| m.cylinder_diameter(d, p).unwrap_or(f64::INFINITY))
                .fold(0.0, f64::max);
            if sup > previous_sup * m.alpha() * (1.0 + REL_SLACK) {
                ok = false;
            }
            previous_sup = sup;
            last = sup;
        }
        Ok((ok, last))
    };
    match check() {
        Ok((ok, sup)) => outcome("weight-monotonicity", ok, format!("sup at depth 8 = {sup:e}")),
        Err(e) => outcome("weight-monotonicity", false, format!("{e}")),
    }
}

fn telescoping_comparison(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    opts: &VerifyOptions,
) -> InvariantOutcome {
    // the lemma is stated for the regular metric
    let reg = match SelfSimilarMetric::regular(m.alpha(), d.vertex_count()) {
        Ok(r) => r,
        Err(e) => return outcome("telescoping-comparison", false, format!("{e}")),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xA3);
    let max_depth = 2 * opts.depth + 16;
    let mut check = || -> Result<usize> {
        let mut violations = 0;
        for _ in 0..opts.samples {
            let x = sample_spec(d, &mut rng, opts.depth)?;
            let y = sample_spec(d, &mut rng, opts.depth)?;
            if x.same_path(&y) == Some(true) {
                continue;
            }
            let rho = reg.distance(d, &x, &y, max_depth)?;
            for k in 1..=3u32 {
                let rho_k = reg.telescoped_distance(d, k, &x, &y, max_depth)?;
                let alpha_k = math::powi(reg.alpha(), k as i32);
                if !(alpha_k * rho_k < rho && rho <= rho_k * (1.0 + REL_SLACK)) {
                    violations += 1;
                }
            }
        }
        Ok(violations)
    };
    match check() {
        Ok(v) => outcome(
            "telescoping-comparison",
            v == 0,
            format!("{} pairs, k in 1..=3, {v} violations", opts.samples),
        ),
        Err(e) => outcome("telescoping-comparison", false, format!("{e}")),
    }
}

fn measure_additivity(
    d: &StationaryDiagram,
    pd: &crate::perron::PerronData,
    opts: &VerifyOptions,
) -> InvariantOutcome {
    let measure = Measure::new(pd.clone());
    let check = || -> Result<bool> {
        for n in 0..=enumerable_depth(d, 8, opts.cap) {
            for path in d.enumerate_paths(n, opts.cap)? {
                let mass = measure.cylinder(d, &path)?;
                let split: f64 = if path.is_empty() {
                    (0..d.vertex_count() as u32)
                        .map(|v| {
                            measure
                                .cylinder(d, &crate::path::FinitePath::from_root(v))
                                .unwrap_or(f64::NAN)
                        })
                        .sum()
                } else {
                    d.extensions(&path)?
                        .iter()
                        .map(|&e| measure.cylinder(d, &path.child(e)).unwrap_or(f64::NAN))
                        .sum()
                };
                if math::abs(mass - split) > 1e-12 * mass {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    match check() {
        Ok(ok) => outcome("measure-additivity", ok, String::from("levels 0..=8, tol 1e-12")),
        Err(e) => outcome("measure-additivity", false, format!("{e}")),
    }
}

fn measure_total_mass(
    d: &StationaryDiagram,
    pd: &crate::perron::PerronData,
    opts: &VerifyOptions,
) -> InvariantOutcome {
    let measure = Measure::new(pd.clone());
    let check = || -> Result<f64> {
        let mut worst: f64 = 0.0;
        for n in 1..=enumerable_depth(d, 8, opts.cap) {
            let total: f64 = d
                .enumerate_paths(n, opts.cap)?
                .iter()
                .map(|p| measure.cylinder(d, p).unwrap_or(f64::NAN))
                .sum();
            worst = worst.max(math::abs(total - 1.0));
        }
        Ok(worst)
    };
    match check() {
        Ok(worst) => outcome("measure-total-mass", worst <= 1e-10, format!("max |1 - mass| = {worst:e}")),
        Err(e) => outcome("measure-total-mass", false, format!("{e}")),
    }
}

fn enumerable_depth(d: &StationaryDiagram, want: usize, cap: usize) -> usize {
    let mut n = 0;
    while n < want {
        match d.path_count(n + 1) {
            Ok(c) if c <= cap as u128 => n += 1,
            _ => break,
        }
    }
    n
}

fn perron_residual(pd: &crate::perron::PerronData) -> InvariantOutcome {
    let ok = pd.residual <= 1e-12 * pd.lambda && pd.nu.iter().all(|&v| v > 0.0);
    outcome(
        "perron-residual",
        ok,
        format!("lambda={} residual={:e} iterations={}", pd.lambda, pd.residual, pd.iterations),
    )
}

fn abscissa_containment(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    pd: &crate::perron::PerronData,
) -> InvariantOutcome {
    let check = || -> Result<(f64, dimension::Bracket)> {
        let s0 = dimension::abscissa(m, pd)?;
        let bracket = dimension::abscissa_numeric(m, d, 40, 5e-3)?;
        Ok((s0, bracket))
    };
    match check() {
        Ok((s0, b)) => outcome(
            "abscissa-containment",
            b.contains(s0) && b.width() <= 5e-3,
            format!("s0={s0} bracket=[{}, {}]", b.lo, b.hi),
        ),
        Err(e) => outcome("abscissa-containment", false, format!("{e}")),
    }
}

fn content_dichotomy(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    pd: &crate::perron::PerronData,
    opts: &VerifyOptions,
) -> InvariantOutcome {
    let check = || -> Result<(bool, String)> {
        let s0 = dimension::abscissa(m, pd)?;
        let above = s0 + 0.1;
        let mut decreasing = true;
        let mut prev = f64::INFINITY;
        let mut last = 1.0;
        for depth in [4usize, 8, 12] {
            let c = dimension::hausdorff_content_depth(m, d, above, depth, opts.cap)?;
            if c > prev * (1.0 + REL_SLACK) {
                decreasing = false;
            }
            prev = c;
            last = c;
        }
        let below = dimension::hausdorff_content_depth(m, d, s0 - 0.1, 12, opts.cap)?;
        let at = dimension::hausdorff_content_depth(m, d, s0, 12, opts.cap)?;
        let ok = decreasing && last < 1.0 && below == 1.0 && math::abs(at - 1.0) <= 1e-10;
        Ok((ok, format!("above: {last}, below: {below}, at s0: {at}")))
    };
    match check() {
        Ok((ok, detail)) => outcome("content-dichotomy", ok, detail),
        Err(e) => outcome("content-dichotomy", false, format!("{e}")),
    }
}

fn dimension_telescoping(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    pd: &crate::perron::PerronData,
) -> InvariantOutcome {
    let check = || -> Result<f64> {
        let dim = dimension::hausdorff_dimension(m, pd)?;
        let mut worst: f64 = 0.0;
        for k in 1..=3u32 {
            let tk = d.telescope(k)?;
            let pk = perron(&tk, 1e-14, 200_000)?;
            let mk = SelfSimilarMetric::regular(math::powi(m.alpha(), k as i32), d.vertex_count())?;
            let dk = dimension::hausdorff_dimension(&mk, &pk)?;
            worst = worst.max(math::abs(dim - dk));
        }
        Ok(worst)
    };
    match check() {
        Ok(worst) => outcome("dimension-telescoping", worst <= 1e-12, format!("max deviation {worst:e}")),
        Err(e) => outcome("dimension-telescoping", false, format!("{e}")),
    }
}

fn eigencount_identity(d: &StationaryDiagram, opts: &VerifyOptions) -> InvariantOutcome {
    let check = || -> Result<bool> {
        for n in 0..=enumerable_depth(d, 8, opts.cap) {
            let mut count: u128 = 1;
            for k in 0..=n {
                for path in d.enumerate_paths(k, opts.cap)? {
                    count += (d.num_extensions(&path)? - 1) as u128;
                }
            }
            if count != d.path_count(n + 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    match check() {
        Ok(ok) => outcome("eigencount-identity", ok, String::from("1 + sum(n_g - 1) = #paths, n <= 8")),
        Err(e) => outcome("eigencount-identity", false, format!("{e}")),
    }
}

fn lipschitz_certificate(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    pd: &crate::perron::PerronData,
    opts: &VerifyOptions,
) -> InvariantOutcome {
    let check = || -> Result<(u32, u32, usize)> {
        let plan = embed::embedding_plan(m, d, pd, embed::DEFAULT_PLAN_K_CAP)?;
        let tk = d.telescope(plan.k)?;
        let alpha_k = math::powi(m.alpha(), plan.k as i32);
        let mk = SelfSimilarMetric::regular(alpha_k, tk.vertex_count())?;
        let lab = EdgeLabeling::uniform(&tk);
        let report = embed::distortion_report(
            EmbedMap::Lipschitz { n: plan.n },
            &mk,
            &tk,
            &lab,
            opts.samples,
            opts.depth,
            opts.seed ^ 0xA4,
        )?;
        Ok((plan.k, plan.n, report.violations))
    };
    match check() {
        Ok((k, n, v)) => outcome(
            "lipschitz-distortion",
            v == 0,
            format!("plan k={k} n={n}, {} pairs, {v} violations", opts.samples),
        ),
        Err(e) => outcome("lipschitz-distortion", false, format!("{e}")),
    }
}

fn hoelder_certificate(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    opts: &VerifyOptions,
) -> InvariantOutcome {
    let check = || -> Result<(f64, usize)> {
        let lab = EdgeLabeling::uniform(d);
        let reg = SelfSimilarMetric::regular(m.alpha(), d.vertex_count())?;
        let s = embed::min_hoelder_exponent(&lab, m.alpha())? + 0.5;
        let report = embed::distortion_report(
            EmbedMap::Hoelder { s },
            &reg,
            d,
            &lab,
            opts.samples,
            opts.depth,
            opts.seed ^ 0xA5,
        )?;
        Ok((s, report.violations))
    };
    match check() {
        Ok((s, v)) => outcome(
            "hoelder-distortion",
            v == 0,
            format!("s={s}, {} pairs, {v} violations", opts.samples),
        ),
        Err(e) => outcome("hoelder-distortion", false, format!("{e}")),
    }
}

fn seed_independence(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    pd: &crate::perron::PerronData,
    opts: &VerifyOptions,
) -> InvariantOutcome {
    let check = || -> Result<bool> {
        let s0 = dimension::abscissa(m, pd)?;
        let beta = laplacian::default_beta(d, &Measure::new(pd.clone()));
        let s = s0 + 3.0;
        let zero = SpectrumParams::new(d, s, s0, m.alpha(), beta.clone(), None)?;
        let seeded = SpectrumParams::new(
            d,
            s,
            s0,
            m.alpha(),
            beta,
            Some((0..d.vertex_count()).map(|i| 0.3 + i as f64).collect()),
        )?;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xA6);
        for _ in 0..(opts.samples / 10).max(50) {
            let spec = sample_spec(d, &mut rng, opts.depth)?;
            if laplacian::omega_value(d, &zero, &spec)?
                != laplacian::omega_value(d, &seeded, &spec)?
            {
                return Ok(false);
            }
            // finite-depth eigenvalues shift by exactly Lambda_s^n * seed
            let path = spec.prefix().clone();
            let n = path.body().len();
            let seed_vertex = match path.body().last() {
                Some(&e) => d.edges()[e as usize].source,
                None => path.root_edge().expect("sampled paths are nonempty"),
            };
            let a = laplacian::eigenvalue(d, &path, &zero)?.value;
            let b = laplacian::eigenvalue(d, &path, &seeded)?.value;
            let expected =
                math::powi(zero.lambda_s, n as i32) * seeded.seeds()[seed_vertex as usize];
            if math::abs(b - a - expected) > 1e-12 {
                return Ok(false);
            }
        }
        Ok(true)
    };
    match check() {
        Ok(ok) => outcome("seed-independence", ok, String::from("omega exact, eigenvalues shift by Lambda_s^n")),
        Err(e) => outcome("seed-independence", false, format!("{e}")),
    }
}

fn truncation_consistency(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    pd: &crate::perron::PerronData,
    opts: &VerifyOptions,
) -> InvariantOutcome {
    let check = || -> Result<bool> {
        let s0 = dimension::abscissa(m, pd)?;
        let beta = laplacian::default_beta(d, &Measure::new(pd.clone()));
        let params = SpectrumParams::new(d, s0 + 3.0, s0, m.alpha(), beta, None)?;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xA7);
        let n = 8usize;
        for _ in 0..(opts.samples / 10).max(50) {
            let long = d.sample_path_rng(&mut rng, 2 * n + 1, None)?;
            let short = long.truncated(n + 1);
            let a = laplacian::omega_value(d, &params, &d.truncated_spec(short)?)?;
            let b = laplacian::omega_value(d, &params, &d.truncated_spec(long)?)?;
            if math::abs(a.value - b.value) > a.tail_bound + 1e-15 {
                return Ok(false);
            }
        }
        Ok(true)
    };
    match check() {
        Ok(ok) => outcome("truncation-consistency", ok, String::from("|lambda_N - lambda_2N| <= tail bound")),
        Err(e) => outcome("truncation-consistency", false, format!("{e}")),
    }
}

fn omega_certificate(
    d: &StationaryDiagram,
    m: &SelfSimilarMetric,
    s0: f64,
    beta: &[f64],
    opts: &VerifyOptions,
) -> InvariantOutcome {
    let check = || -> Result<(f64, bool, usize)> {
        // pick s above the effective threshold of this beta table
        let mut sorted = beta.to_vec();
        sorted.sort_by(f64::total_cmp);
        let dmin = sorted.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
        let dmax = sorted[sorted.len() - 1] - sorted[0];
        let s = s0 + 2.0 + math::ln((dmin + dmax) / dmin) / -math::ln(m.alpha()) + 0.3;
        let params = SpectrumParams::new(d, s, s0, m.alpha(), beta.to_vec(), None)?;
        let report = laplacian::omega_hoelder_check(
            d,
            m,
            &params,
            opts.samples,
            opts.depth,
            opts.seed ^ 0xA8,
        )?;
        Ok((s, report.lower_vacuous, report.violations))
    };
    match check() {
        Ok((s, vacuous, v)) => outcome(
            "omega-hoelder",
            v == 0 && !vacuous,
            format!("s={s}, {} pairs, {v} violations", opts.samples),
        ),
        Err(e) => outcome("omega-hoelder", false, format!("{e}")),
    }
}
