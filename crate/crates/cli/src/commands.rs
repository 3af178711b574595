//! Subcommand implementations. Each one prints a short human summary to
//! stdout and writes machine-readable reports (JSON, CSV) under the
//! output directory.

use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use cantorlab_core::dimension;
use cantorlab_core::embed::{self, EdgeLabeling, EmbedMap};
use cantorlab_core::laplacian::{self, ConstantBeta, OmegaMode, Regime, SpectrumParams};
use cantorlab_core::metric::MetricMode;
use cantorlab_core::perron::Measure;
use cantorlab_core::verify::{self, VerifyOptions};
use cantorlab_core::{SelfSimilarMetric, StationaryDiagram};

use crate::config::{BetaCfg, DimCfg, EmbedCfg, MapKind, OmegaModeCfg, SpectrumCfg, VerifyCfg};
use crate::fmt::{fmt12, json_f};
use crate::{config::Workspace, CliError};

pub struct Io<'a> {
    pub out_dir: &'a Path,
    pub seed: u64,
    pub cap: usize,
}

impl Io<'_> {
    fn write(&self, name: &str, contents: &str) -> Result<PathBuf, CliError> {
        std::fs::create_dir_all(self.out_dir)
            .map_err(|e| CliError::Config(format!("cannot create output dir: {e}")))?;
        let path = self.out_dir.join(name);
        std::fs::write(&path, contents)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display())))?;
        Ok(path)
    }

    fn write_json(&self, name: &str, value: &Value) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(value)
            .map_err(|e| CliError::Config(format!("report serialization: {e}")))?;
        text.push('\n');
        let path = self.write(name, &text)?;
        println!("wrote {}", path.display());
        Ok(())
    }
}

fn diagram_json(d: &StationaryDiagram) -> Value {
    let q = d.vertex_count();
    json!({
        "vertices": d.vertices().iter().map(|v| json!({"id": v.id, "label": v.label})).collect::<Vec<_>>(),
        "edges": d.edges().iter().map(|e| json!({
            "id": e.id, "source": e.source, "range": e.range, "label": e.label,
        })).collect::<Vec<_>>(),
        "root_edges": d.root_edges().iter().map(|r| json!({"id": r.id, "range": r.range})).collect::<Vec<_>>(),
        "adjacency": (0..q).map(|v| (0..q).map(|w| d.adj(v as u32, w as u32)).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn metric_json(m: &SelfSimilarMetric) -> Value {
    let mode = match m.mode() {
        MetricMode::Regular => json!({"mode": "regular"}),
        MetricMode::Substitution => json!({"mode": "substitution"}),
        MetricMode::Tiling { d } => json!({"mode": "tiling", "d": d}),
    };
    json!({
        "mode": mode,
        "alpha": json_f(m.alpha()),
        "scales": m.scales().iter().map(|&a| json_f(a)).collect::<Vec<_>>(),
    })
}

pub fn info(ws: &Workspace, io: &Io) -> Result<(), CliError> {
    let d = &ws.diagram;
    let witness = d.primitivity_witness();
    let cantor = d.check_cantor(4 * d.vertex_count() * d.vertex_count() + 4);
    let report = json!({
        "diagram": diagram_json(d),
        "metric": metric_json(&ws.metric),
        "primitive": witness.is_some(),
        "primitivity_witness": witness,
        "cantor": {"hypothesis_ok": cantor.hypothesis_ok, "perfect": cantor.perfect},
        "perron": ws.perron.as_ref().map(|p| json!({
            "lambda": json_f(p.lambda),
            "nu": p.nu.iter().map(|&v| json_f(v)).collect::<Vec<_>>(),
            "residual": json_f(p.residual),
            "iterations": p.iterations,
        })),
    });

    println!(
        "diagram: {} vertices, {} edges",
        d.vertex_count(),
        d.edge_count()
    );
    match witness {
        Some(n) => println!("primitive: yes (A^{n} > 0)"),
        None => println!("primitive: no"),
    }
    println!(
        "cantor: hypothesis_ok={} perfect={}",
        cantor.hypothesis_ok, cantor.perfect
    );
    if let Some(p) = &ws.perron {
        println!(
            "perron: lambda={} nu=[{}]",
            fmt12(p.lambda),
            p.nu.iter().map(|&v| fmt12(v)).collect::<Vec<_>>().join(", ")
        );
    }
    io.write_json("info.json", &report)?;

    if !(cantor.hypothesis_ok && cantor.perfect) {
        return Err(CliError::Precondition(
            "path space is not a Cantor set (hypothesis or branching fails)".into(),
        ));
    }
    Ok(())
}

pub fn dim(ws: &Workspace, cfg: &DimCfg, io: &Io) -> Result<(), CliError> {
    let d = &ws.diagram;
    let m = &ws.metric;
    let perron = ws
        .perron
        .as_ref()
        .ok_or_else(|| CliError::Precondition("dimension needs a primitive diagram".into()))?;

    let s0 = dimension::abscissa(m, perron)?;
    let bracket = dimension::abscissa_numeric(m, d, cfg.bracket_depth, cfg.bracket_eps)?;
    let dims_equal = bracket.contains(s0);

    let mut zeta_rows = Vec::new();
    for &s in &cfg.zeta_s {
        let z = dimension::zeta_partial(m, d, s, cfg.zeta_depth, io.cap)?;
        zeta_rows.push(json!({
            "s": json_f(z.s),
            "depth": z.depth,
            "partial_sum": json_f(z.partial_sum),
            "growth_ratio": z.growth_ratio.map_or(Value::Null, json_f),
        }));
    }

    let mut content_curve = Vec::new();
    for &offset in &cfg.content_offsets {
        let dim_d = s0 + offset;
        if dim_d < 0.0 {
            continue;
        }
        for &depth in &cfg.content_depths {
            let value = dimension::hausdorff_content_depth(m, d, dim_d, depth, io.cap)?;
            content_curve.push(json!([json_f(dim_d), depth, json_f(value)]));
        }
    }

    let report = json!({
        "s0_closed": json_f(s0),
        "s0_numeric": [json_f(bracket.lo), json_f(bracket.hi)],
        "dims_equal": dims_equal,
        "hausdorff_dimension": json_f(dimension::hausdorff_dimension(m, perron)?),
        "zeta": zeta_rows,
        "content_curve": content_curve,
    });

    println!("s0_closed = {}", fmt12(s0));
    println!("s0_numeric = [{}, {}]", fmt12(bracket.lo), fmt12(bracket.hi));
    println!("dims_equal = {dims_equal}");
    io.write_json("dim.json", &report)?;
    if !dims_equal {
        return Err(CliError::Invariant(
            "numeric abscissa bracket does not contain the closed form".into(),
        ));
    }
    Ok(())
}

fn labeling(d: &StationaryDiagram, cfg: &EmbedCfg) -> Result<EdgeLabeling, CliError> {
    match &cfg.labels {
        Some(l) => EdgeLabeling::new(d, l.root.clone(), l.body.clone())
            .map_err(|e| CliError::Config(e.to_string())),
        None => Ok(EdgeLabeling::uniform(d)),
    }
}

pub fn embed_cmd(ws: &Workspace, cfg: &EmbedCfg, io: &Io) -> Result<(), CliError> {
    // resolve the diagram/metric/map the run certifies
    let (d, m, map, plan_json) = if cfg.use_plan {
        let perron = ws.perron.as_ref().ok_or_else(|| {
            CliError::Precondition("embedding plan needs a primitive diagram".into())
        })?;
        let plan = embed::embedding_plan(&ws.metric, &ws.diagram, perron, embed::DEFAULT_PLAN_K_CAP)?;
        let telescoped = ws.diagram.telescope(plan.k)?;
        let alpha_k = powi(ws.metric.alpha(), plan.k);
        let mk = SelfSimilarMetric::regular(alpha_k, telescoped.vertex_count())
            .map_err(|e| CliError::Precondition(e.to_string()))?;
        println!("plan: k={} n={} basic_n={}", plan.k, plan.n, plan.basic_n);
        let plan_json = json!({"k": plan.k, "n": plan.n, "basic_n": plan.basic_n});
        (telescoped, mk, EmbedMap::Lipschitz { n: plan.n }, Some(plan_json))
    } else {
        let map = match cfg.map {
            MapKind::Lipschitz => EmbedMap::Lipschitz { n: cfg.n },
            MapKind::Hoelder => EmbedMap::Hoelder { s: cfg.s },
        };
        (ws.diagram.clone(), ws.metric.clone(), map, None)
    };
    let lab = if cfg.use_plan { EdgeLabeling::uniform(&d) } else { labeling(&d, cfg)? };

    let report = embed::distortion_report(map, &m, &d, &lab, cfg.samples, cfg.depth, io.seed)?;

    // point cloud: one row per sampled path
    let mut csv = match map {
        EmbedMap::Lipschitz { n } => {
            let mut header = String::from("word");
            for i in 1..=n {
                header.push_str(&format!(",x{i}"));
            }
            header.push('\n');
            header
        }
        EmbedMap::Hoelder { .. } => String::from("word,value\n"),
    };
    for i in 0..cfg.samples {
        let prefix = d.sample_path(cfg.depth, io.seed.wrapping_add(i as u64))?;
        let spec = d.close_into_spec(prefix)?;
        let word = d.spec_word(&spec);
        match map {
            EmbedMap::Lipschitz { n } => {
                let (point, _) = embed::lipschitz_embed(&d, &spec, n, &lab, m.alpha(), cfg.depth)?;
                csv.push_str(&word);
                for x in point {
                    csv.push(',');
                    csv.push_str(&fmt12(x));
                }
                csv.push('\n');
            }
            EmbedMap::Hoelder { s } => {
                let (value, _) = embed::hoelder_embed(&d, &spec, s, &lab, m.alpha(), cfg.depth)?;
                csv.push_str(&format!("{word},{}\n", fmt12(value)));
            }
        }
    }
    let csv_path = io.write("embed_points.csv", &csv)?;
    println!("wrote {}", csv_path.display());

    let map_json = match map {
        EmbedMap::Lipschitz { n } => json!({"kind": "lipschitz", "n": n}),
        EmbedMap::Hoelder { s } => json!({"kind": "hoelder", "s": json_f(s)}),
    };
    let report_json = json!({
        "map": map_json,
        "plan": plan_json,
        "samples": report.samples,
        "depth": report.depth,
        "seed": report.seed,
        "empirical_min": json_f(report.empirical_min),
        "empirical_max": json_f(report.empirical_max),
        "theoretical_lo": json_f(report.theoretical_lo),
        "theoretical_hi": json_f(report.theoretical_hi),
        "euclidean_lo": json_f(report.euclidean_lo),
        "euclidean_hi": json_f(report.euclidean_hi),
        "violations": report.violations,
        "tail_slack": json_f(report.tail_slack),
    });
    println!(
        "distortion: [{}, {}] within [{}, {}], violations = {}",
        fmt12(report.empirical_min),
        fmt12(report.empirical_max),
        fmt12(report.theoretical_lo),
        fmt12(report.theoretical_hi),
        report.violations
    );
    io.write_json("embed_report.json", &report_json)?;
    if report.violations > 0 {
        return Err(CliError::Invariant(format!(
            "{} distortion violations observed",
            report.violations
        )));
    }
    Ok(())
}

fn powi(x: f64, k: u32) -> f64 {
    let mut acc = 1.0;
    for _ in 0..k {
        acc *= x;
    }
    acc
}

pub struct SpectrumArgs {
    pub beta_file: Option<PathBuf>,
    pub seeds_file: Option<PathBuf>,
}

pub fn spectrum(
    ws: &Workspace,
    cfg: &SpectrumCfg,
    args: &SpectrumArgs,
    io: &Io,
) -> Result<(), CliError> {
    let d = &ws.diagram;
    let m = &ws.metric;
    let perron = ws
        .perron
        .as_ref()
        .ok_or_else(|| CliError::Precondition("spectrum needs a primitive diagram".into()))?;
    let s0 = dimension::abscissa(m, perron)?;
    let s = cfg.s.unwrap_or(s0 + 3.0);

    let beta_cfg: Option<BetaCfg> = match &args.beta_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            Some(
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?,
            )
        }
        None => cfg.beta.clone(),
    };
    let beta = match beta_cfg {
        Some(b) => b.resolve(s)?,
        None => laplacian::default_beta(d, &Measure::new(perron.clone())),
    };
    let seeds: Option<Vec<f64>> = match &args.seeds_file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
            Some(
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?,
            )
        }
        None => cfg.seeds.clone(),
    };

    let tech_beta = ConstantBeta(beta.clone());
    let grid = laplacian::default_tech_grid(s0);
    let tech = laplacian::check_tech(d, perron, &tech_beta, &grid);

    let params = SpectrumParams::new(d, s, s0, m.alpha(), beta, seeds)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let (lambda_s, regime) = laplacian::lambda_s(s, s0, m.alpha())?;

    // eigenvalue table over all paths down to the configured depth
    let records = laplacian::eigen_table(d, &params, cfg.depth, io.cap)?;
    let mut csv = String::from("word,eigenvalue,multiplicity\n");
    for r in &records {
        csv.push_str(&format!(
            "{},{},{}\n",
            d.path_word(&r.path),
            fmt12(r.value),
            r.multiplicity
        ));
    }
    let path = io.write("spectrum_eigen.csv", &csv)?;
    println!("wrote {} ({} records, seed-relative)", path.display(), records.len());

    // omega-spectrum approximation (bounded regime only)
    let omega = if regime == Regime::Bounded {
        let mode = match cfg.mode {
            OmegaModeCfg::Enumerate => OmegaMode::Enumerate,
            OmegaModeCfg::Sample => OmegaMode::Sample { budget: cfg.budget },
        };
        let points = laplacian::omega_spectrum(d, &params, cfg.depth, mode, io.cap, io.seed)?;
        let mut csv = String::from("value,tail_bound\n");
        for p in &points {
            csv.push_str(&format!("{},{}\n", fmt12(p.value), fmt12(p.tail_bound)));
        }
        let path = io.write("spectrum_omega.csv", &csv)?;
        println!("wrote {} ({} points)", path.display(), points.len());
        Some(points.len())
    } else {
        println!("omega-spectrum skipped: s = {} is in the unbounded regime (s0+2 = {})",
            fmt12(s), fmt12(s0 + 2.0));
        None
    };

    let thresholds = match m.mode() {
        MetricMode::Tiling { d: d_tile } => {
            let t = laplacian::hoelder_thresholds(
                d_tile,
                d.edge_count(),
                perron.lambda,
                tech.s1_estimate,
            )?;
            Some(json!({
                "basic": json_f(t.basic),
                "telescoped": json_f(t.telescoped),
                "effective": json_f(t.effective),
            }))
        }
        _ => None,
    };

    let report = json!({
        "s": json_f(s),
        "s0": json_f(s0),
        "lambda_s": json_f(lambda_s),
        "regime": if regime == Regime::Bounded { "bounded" } else { "unbounded" },
        "beta": params.beta_values().iter().map(|&b| json_f(b)).collect::<Vec<_>>(),
        "tech": {
            "edges_simple": tech.edges_simple,
            "nu_distinct": tech.nu_distinct,
            "separated_grid_points": tech.beta_separated.iter().filter(|&&(_, ok)| ok).count(),
            "grid_points": tech.beta_separated.len(),
            "s1_estimate": tech.s1_estimate.map_or(Value::Null, json_f),
            "passed": tech.passed(),
        },
        "thresholds": thresholds,
        "eigen_records": records.len(),
        "omega_points": omega,
    });
    io.write_json("spectrum.json", &report)?;

    if !tech.passed() {
        return Err(CliError::Precondition(
            "tech conditions fail: the spectrum map is degenerate on this diagram".into(),
        ));
    }
    if regime == Regime::Unbounded {
        return Err(CliError::Precondition(format!(
            "s = {s} is in the unbounded regime (needs s > {})",
            s0 + 2.0
        )));
    }
    Ok(())
}

pub fn verify_cmd(ws: &Workspace, cfg: &VerifyCfg, io: &Io) -> Result<(), CliError> {
    let opts = VerifyOptions {
        samples: cfg.samples,
        depth: cfg.depth,
        seed: io.seed,
        cap: io.cap,
        include_spectrum: cfg.spectrum,
    };
    let report = verify::run(&ws.diagram, &ws.metric, &opts)?;
    let mut rows = Vec::new();
    for o in &report.outcomes {
        println!("[{}] {} — {}", if o.passed { "PASS" } else { "FAIL" }, o.name, o.detail);
        rows.push(json!({"name": o.name, "passed": o.passed, "detail": o.detail}));
    }
    let json_report = json!({
        "outcomes": rows,
        "all_passed": report.all_passed(),
        "tech_failure": report.tech_failure,
        "samples": cfg.samples,
        "seed": io.seed,
    });
    io.write_json("verify.json", &json_report)?;
    if report.tech_failure {
        return Err(CliError::Precondition(
            "tech conditions fail for the requested spectrum checks".into(),
        ));
    }
    if !report.all_passed() {
        let failed: Vec<&str> = report
            .outcomes
            .iter()
            .filter(|o| !o.passed)
            .map(|o| o.name.as_str())
            .collect();
        return Err(CliError::Invariant(format!("failed invariants: {}", failed.join(", "))));
    }
    Ok(())
}
