//! Property tests for the structural invariants: path-spec canonical
//! forms, counting identities on randomized diagrams, ultrametricity and
//! the telescoping comparison on randomized path pairs.

use proptest::prelude::*;

use cantorlab_core::diagram::fixtures;
use cantorlab_core::perron::{perron, Measure};
use cantorlab_core::{FinitePath, SelfSimilarMetric, StationaryDiagram};

const PHI: f64 = 1.618033988749894848;

/// A composable walk in `d` from a root edge, driven by free choice
/// indices (one per step, reduced modulo the available extensions).
fn walk(d: &StationaryDiagram, root: u32, choices: &[u8]) -> FinitePath {
    let root = root % d.vertex_count() as u32;
    let mut path = FinitePath::from_root(root);
    let mut at = root;
    for &c in choices {
        let exts = d.edges_from(at);
        let e = exts[c as usize % exts.len()];
        path = path.child(e);
        at = d.edges()[e as usize].range;
    }
    path
}

fn fib() -> &'static StationaryDiagram {
    use std::sync::OnceLock;
    static D: OnceLock<StationaryDiagram> = OnceLock::new();
    D.get_or_init(fixtures::fibonacci)
}

fn loops() -> &'static StationaryDiagram {
    use std::sync::OnceLock;
    static D: OnceLock<StationaryDiagram> = OnceLock::new();
    D.get_or_init(fixtures::one_vertex_two_loops)
}

proptest! {
    /// Extending the prefix by whole turns of the cycle, rotating the
    /// cycle accordingly, or repeating the cycle word never changes the
    /// denoted path; flipping one prefix edge does.
    #[test]
    fn canonical_forms_decide_equality(
        root in 0u32..2,
        choices in proptest::collection::vec(any::<u8>(), 0..8),
        absorb in 0usize..5,
        repeat in 1usize..4,
    ) {
        let d = fib();
        let prefix = walk(d, root, &choices);
        let base = d.close_into_spec(prefix.clone()).unwrap();
        let cycle = match base.tail() {
            cantorlab_core::Tail::Periodic(c) => c.clone(),
            _ => unreachable!(),
        };

        // push `absorb` cycle edges into the prefix
        let mut long_prefix = prefix.clone();
        for i in 0..absorb {
            long_prefix = long_prefix.child(cycle[i % cycle.len()]);
        }
        let mut rotated = cycle.clone();
        rotated.rotate_left(absorb % cycle.len());
        // and repeat the rotated cycle `repeat` times
        let mut word = Vec::new();
        for _ in 0..repeat {
            word.extend_from_slice(&rotated);
        }
        let same = d.periodic_spec(long_prefix, word).unwrap();
        prop_assert_eq!(base.same_path(&same), Some(true));

        // flipping the final prefix edge changes the path
        if let Some(&last) = prefix.body().last() {
            let truncated = prefix.truncated(prefix.depth() - 1);
            let at = d.range_of(&truncated).unwrap();
            for &e in d.edges_from(at) {
                if e != last {
                    let other = d.close_into_spec(truncated.child(e)).unwrap();
                    prop_assert_eq!(base.same_path(&other), Some(false));
                }
            }
        }
    }

    /// Counting identity and telescope composition on randomized
    /// diagrams (any shape, including dead ends and reducible graphs).
    #[test]
    fn counting_and_telescoping_on_random_diagrams(
        q in 1usize..4,
        raw_edges in proptest::collection::vec((0u32..4, 0u32..4), 1..8),
    ) {
        let labels: Vec<String> = (0..q).map(|i| format!("v{i}")).collect();
        let edges: Vec<(u32, u32)> =
            raw_edges.iter().map(|&(s, r)| (s % q as u32, r % q as u32)).collect();
        let d = StationaryDiagram::new(labels, edges).unwrap();

        for n in 0..=4usize {
            let mut extension_sum: u128 = 0;
            for path in d.enumerate_paths(n, 100_000).unwrap() {
                extension_sum += d.num_extensions(&path).unwrap() as u128;
            }
            prop_assert_eq!(extension_sum, d.path_count(n + 1).unwrap());
        }

        if d.path_count(7).unwrap() < 50_000 {
            let nested = d.telescope(2).unwrap().telescope(3).unwrap();
            let direct = d.telescope(6).unwrap();
            prop_assert_eq!(nested.adjacency(), direct.adjacency());
            prop_assert_eq!(
                d.telescope(2).unwrap().edge_count() as u128,
                d.adjacency_power_sum(2).unwrap()
            );
        }
    }

    /// Ultrametric inequality and the telescoping comparison on random
    /// periodic pairs over the Fibonacci diagram (regular metric).
    #[test]
    fn ultrametric_and_telescoping_on_fib_pairs(
        xr in 0u32..2, xc in proptest::collection::vec(any::<u8>(), 0..10),
        yr in 0u32..2, yc in proptest::collection::vec(any::<u8>(), 0..10),
        zr in 0u32..2, zc in proptest::collection::vec(any::<u8>(), 0..10),
    ) {
        let d = fib();
        let m = SelfSimilarMetric::regular(1.0 / PHI, 2).unwrap();
        let x = d.close_into_spec(walk(d, xr, &xc)).unwrap();
        let y = d.close_into_spec(walk(d, yr, &yc)).unwrap();
        let z = d.close_into_spec(walk(d, zr, &zc)).unwrap();

        let rxy = m.distance(d, &x, &y, 200).unwrap();
        let rxz = m.distance(d, &x, &z, 200).unwrap();
        let rzy = m.distance(d, &z, &y, 200).unwrap();
        prop_assert!(rxy <= rxz.max(rzy) * (1.0 + 1e-12));
        // symmetry
        prop_assert_eq!(m.distance(d, &y, &x, 200).unwrap(), rxy);

        if x.same_path(&y) != Some(true) {
            for k in 1..=3u32 {
                let rk = m.telescoped_distance(d, k, &x, &y, 200).unwrap();
                let ak = m.alpha().powi(k as i32);
                prop_assert!(ak * rk < rxy && rxy <= rk * (1.0 + 1e-12));
            }
        }
    }

    /// Invariant-measure additivity along random Fibonacci paths, and
    /// total mass 1 across full levels of the one-vertex diagram.
    #[test]
    fn measure_additivity_on_random_paths(
        root in 0u32..2,
        choices in proptest::collection::vec(any::<u8>(), 0..8),
    ) {
        let d = fib();
        let measure = Measure::new(perron(d, 1e-14, 200_000).unwrap());
        let path = walk(d, root, &choices);
        let mass = measure.cylinder(d, &path).unwrap();
        let split: f64 = d
            .extensions(&path)
            .unwrap()
            .iter()
            .map(|&e| measure.cylinder(d, &path.child(e)).unwrap())
            .sum();
        prop_assert!((mass - split).abs() <= 1e-12 * mass);
    }

    /// Zeta partial sums are nondecreasing in depth for positive s.
    #[test]
    fn zeta_partial_sums_monotone(s in 0.05f64..6.0) {
        let d = loops();
        let m = SelfSimilarMetric::regular(1.0 / 3.0, 1).unwrap();
        let mut prev = 0.0;
        for depth in 0..=10usize {
            let z = cantorlab_core::dimension::zeta_partial(&m, d, s, depth, 100_000).unwrap();
            prop_assert!(z.partial_sum >= prev);
            prev = z.partial_sum;
        }
    }
}
