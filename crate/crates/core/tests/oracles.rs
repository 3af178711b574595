//! Oracle tests: every value here is either a frozen closed form or is
//! recomputed by an independent brute-force route (explicit enumeration,
//! explicit partial sums, exhaustive cover generation) and compared
//! against the library's implementation.

use cantorlab_core::diagram::fixtures;
use cantorlab_core::dimension::{abscissa, hausdorff_content_depth, zeta_partial};
use cantorlab_core::embed::{hoelder_embed, lipschitz_embed, EdgeLabeling};
use cantorlab_core::laplacian::{default_beta, omega_value, SpectrumParams};
use cantorlab_core::perron::{perron, Measure};
use cantorlab_core::{FinitePath, SelfSimilarMetric, StationaryDiagram};

const PHI: f64 = 1.618033988749894848;

fn fib_perron() -> cantorlab_core::PerronData {
    perron(&fixtures::fibonacci(), 1e-14, 200_000).unwrap()
}

/// Zeta partial sums recomputed by materializing every path and summing
/// `diam^s` directly (the library computes them from count vectors).
#[test]
fn zeta_matches_explicit_enumeration() {
    let cases: Vec<(StationaryDiagram, SelfSimilarMetric)> = vec![
        (fixtures::one_vertex_two_loops(), SelfSimilarMetric::regular(1.0 / 3.0, 1).unwrap()),
        (fixtures::fibonacci(), SelfSimilarMetric::regular(1.0 / PHI, 2).unwrap()),
        (fixtures::fibonacci(), SelfSimilarMetric::tiling(&fib_perron(), 1).unwrap()),
    ];
    for (d, m) in &cases {
        for s in [0.4, 1.0, 2.3] {
            let depth = 9;
            let mut explicit = 0.0;
            for n in 0..=depth {
                for path in d.enumerate_paths(n, 100_000).unwrap() {
                    explicit += m.cylinder_diameter(d, &path).unwrap().powf(s);
                }
            }
            let report = zeta_partial(m, d, s, depth, 100_000).unwrap();
            assert!(
                (report.partial_sum - explicit).abs() <= 1e-11 * explicit,
                "s={s}: {} vs explicit {explicit}",
                report.partial_sum
            );
        }
    }
}

/// All clopen-partition covers of the path space down to a small depth,
/// generated explicitly; the minimum cover cost must equal the tree DP.
#[test]
fn content_matches_exhaustive_cover_enumeration() {
    fn cover_costs(
        d: &StationaryDiagram,
        m: &SelfSimilarMetric,
        dim: f64,
        v: u32,
        level: usize,
        depth: usize,
    ) -> Vec<f64> {
        let own = (m.scale_of(Some(v)) * m.alpha().powi(level as i32)).powf(dim);
        let mut costs = vec![own];
        if level < depth {
            // cartesian product over the children's cover choices
            let mut combos = vec![0.0f64];
            for &e in d.edges_from(v) {
                let w = d.edges()[e as usize].range;
                let child = cover_costs(d, m, dim, w, level + 1, depth);
                let mut next = Vec::with_capacity(combos.len() * child.len());
                for &base in &combos {
                    for &c in &child {
                        next.push(base + c);
                    }
                }
                combos = next;
            }
            costs.extend(combos);
        }
        costs
    }

    let cases: Vec<(StationaryDiagram, SelfSimilarMetric)> = vec![
        (fixtures::one_vertex_two_loops(), SelfSimilarMetric::regular(1.0 / 3.0, 1).unwrap()),
        (fixtures::fibonacci(), SelfSimilarMetric::tiling(&fib_perron(), 1).unwrap()),
    ];
    for (d, m) in &cases {
        for dim in [0.3, 0.6309297535714574, 0.9, 1.0, 1.4] {
            for depth in 0..=4usize {
                // whole-space cover, or any combination of per-root covers
                let mut combos = vec![0.0f64];
                for v in 0..d.vertex_count() as u32 {
                    let child = cover_costs(d, m, dim, v, 0, depth);
                    let mut next = Vec::with_capacity(combos.len() * child.len());
                    for &base in &combos {
                        for &c in &child {
                            next.push(base + c);
                        }
                    }
                    combos = next;
                }
                let brute = combos.iter().copied().fold(1.0f64, f64::min);
                let dp = hausdorff_content_depth(m, d, dim, depth, 1_000_000).unwrap();
                assert!(
                    (dp - brute).abs() <= 1e-12 * brute.max(1.0),
                    "dim={dim} depth={depth}: dp={dp} brute={brute}"
                );
            }
        }
    }
}

/// Closed-form embedding values recomputed as explicit 400-term partial
/// sums read off the path spec.
#[test]
fn embeddings_match_explicit_partial_sums() {
    let d = fixtures::one_vertex_two_loops();
    let lab = EdgeLabeling::new(&d, vec![1.0], vec![1.0, 3.0]).unwrap();
    let alpha = 1.0 / 3.0;
    let specs = [
        d.periodic_spec(FinitePath::from_root(0), vec![0]).unwrap(),
        d.periodic_spec(FinitePath::from_root(0), vec![1]).unwrap(),
        d.periodic_spec(FinitePath::new(0, vec![1, 0, 0]), vec![0, 1, 1]).unwrap(),
    ];
    let beta_at = |spec: &cantorlab_core::PathSpec, pos: usize| -> f64 {
        match spec.edge_at(pos).unwrap() {
            cantorlab_core::path::PositionEdge::Root(v) => lab.root_values()[v as usize],
            cantorlab_core::path::PositionEdge::Body(e) => lab.body_values()[e as usize],
        }
    };
    for spec in &specs {
        for n in [1u32, 2, 3] {
            let (point, _) = lipschitz_embed(&d, spec, n, &lab, alpha, 50).unwrap();
            for i in 1..=n as usize {
                let mut explicit = 0.0;
                for j in 0..400usize {
                    explicit += beta_at(spec, i + n as usize * j) * alpha.powi((n as usize * j) as i32);
                }
                assert!(
                    (point[i - 1] - explicit).abs() < 1e-13,
                    "n={n} i={i}: {} vs {}",
                    point[i - 1],
                    explicit
                );
            }
        }
        for s in [0.8, 1.0, 2.5] {
            let (value, _) = hoelder_embed(&d, spec, s, &lab, alpha, 50).unwrap();
            let mut explicit = 0.0;
            for j in 0..400usize {
                explicit += beta_at(spec, j) * alpha.powf(s * j as f64);
            }
            assert!((value - explicit).abs() < 1e-13, "s={s}: {value} vs {explicit}");
        }
    }
}

/// Frozen closed forms for the Fibonacci diagram (golden ratio algebra).
#[test]
fn fibonacci_frozen_constants() {
    let d = fixtures::fibonacci();
    let pd = fib_perron();
    assert!((pd.lambda - PHI).abs() < 1e-12);
    assert!((pd.nu[0] - 0.6180339887498949).abs() < 1e-12);
    assert!((pd.nu[1] - 0.3819660112501051).abs() < 1e-12);

    // cylinder of depth 2 ending at a, substitution metric
    let m = SelfSimilarMetric::substitution(&pd).unwrap();
    let p = FinitePath::new(0, vec![0]);
    assert!((m.cylinder_diameter(&d, &p).unwrap() - 0.2360679774997897).abs() < 1e-12);

    // beta table: (1/phi, 1 - 1/phi, 1)
    let beta = default_beta(&d, &Measure::new(pd.clone()));
    assert!((beta[0] - 0.6180339887498949).abs() < 1e-12);
    assert!((beta[1] - 0.3819660112501051).abs() < 1e-12);
    assert!((beta[2] - 1.0).abs() < 1e-12);

    // omega-spectrum golden points at s = 5
    let params = SpectrumParams::new(&d, 5.0, 1.0, 1.0 / pd.lambda, beta, None).unwrap();
    let aa = d.periodic_spec(FinitePath::from_root(0), vec![0]).unwrap();
    assert!((omega_value(&d, &params, &aa).unwrap().value - 1.0).abs() < 1e-10);
    let abba = d.periodic_spec(FinitePath::from_root(0), vec![1, 2]).unwrap();
    assert!(
        (omega_value(&d, &params, &abba).unwrap().value - 0.8944271909999159).abs() < 1e-9
    );

    let tiling = SelfSimilarMetric::tiling(&pd, 1).unwrap();
    assert!((abscissa(&tiling, &pd).unwrap() - 1.0).abs() < 1e-12);
}

/// Frozen values for the one-vertex diagram with alpha = 1/3.
#[test]
fn one_vertex_frozen_constants() {
    let d = fixtures::one_vertex_two_loops();
    let pd = perron(&d, 1e-14, 1000).unwrap();
    let m = SelfSimilarMetric::regular(1.0 / 3.0, 1).unwrap();

    assert_eq!(pd.lambda, 2.0);
    assert!((abscissa(&m, &pd).unwrap() - 0.6309297535714574).abs() < 1e-12);

    // content: (2/3)^5 at dim 1 depth 5, (2 * 3^-d)^12 above s0 at depth 12
    let c = hausdorff_content_depth(&m, &d, 1.0, 5, 100_000).unwrap();
    assert!((c - 0.1316872427983539).abs() < 1e-12);
    let d_above = 0.7309297535714574;
    let c = hausdorff_content_depth(&m, &d, d_above, 12, 100_000).unwrap();
    assert!((c - 0.2675805205867436).abs() < 1e-10);

    // measure halves per level
    let measure = Measure::new(pd);
    let path = FinitePath::new(0, vec![0, 1, 0, 1]);
    assert!((measure.cylinder(&d, &path).unwrap() - 2.0f64.powi(-4)).abs() < 1e-15);
}
