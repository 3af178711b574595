//! Run configuration: JSON file schema, validation, and construction of
//! the core objects (diagram, metric, Perron data) shared by all
//! subcommands.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use cantorlab_core::perron::{perron, PerronData};
use cantorlab_core::{SelfSimilarMetric, StationaryDiagram, Substitution};

use crate::CliError;

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub substitution: Option<SubstitutionCfg>,
    pub diagram: Option<DiagramCfg>,
    #[serde(default)]
    pub metric: MetricCfg,
    #[serde(default)]
    pub dim: DimCfg,
    #[serde(default)]
    pub embed: EmbedCfg,
    #[serde(default)]
    pub spectrum: SpectrumCfg,
    #[serde(default)]
    pub verify: VerifyCfg,
    pub seed: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubstitutionCfg {
    pub alphabet: Vec<String>,
    /// One word per letter; letters are single characters.
    pub rules: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramCfg {
    pub vertices: Vec<String>,
    pub edges: Vec<(u32, u32)>,
}

#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum MetricCfg {
    Regular { alpha: f64 },
    #[default]
    Substitution,
    Tiling { d: u32 },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DimCfg {
    pub zeta_s: Vec<f64>,
    pub zeta_depth: usize,
    pub bracket_depth: usize,
    pub bracket_eps: f64,
    /// Content exponents, as offsets from the closed-form abscissa.
    pub content_offsets: Vec<f64>,
    pub content_depths: Vec<usize>,
}

impl Default for DimCfg {
    fn default() -> Self {
        DimCfg {
            zeta_s: vec![1.0],
            zeta_depth: 8,
            bracket_depth: 40,
            bracket_eps: 5e-3,
            content_offsets: vec![-0.1, 0.0, 0.1],
            content_depths: vec![4, 8, 12],
        }
    }
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Lipschitz,
    Hoelder,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct EmbedCfg {
    pub map: MapKind,
    pub n: u32,
    pub s: f64,
    pub depth: usize,
    pub samples: usize,
    pub use_plan: bool,
    pub labels: Option<LabelsCfg>,
}

impl Default for EmbedCfg {
    fn default() -> Self {
        EmbedCfg {
            map: MapKind::Lipschitz,
            n: 1,
            s: 1.0,
            depth: 30,
            samples: 10_000,
            use_plan: false,
            labels: None,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelsCfg {
    pub root: Vec<f64>,
    pub body: Vec<f64>,
}

#[derive(Debug, Clone, Copy, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum OmegaModeCfg {
    Enumerate,
    Sample,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SpectrumCfg {
    /// Defaults to `s0 + 3` when absent.
    pub s: Option<f64>,
    pub depth: usize,
    pub mode: OmegaModeCfg,
    pub budget: usize,
    pub beta: Option<BetaCfg>,
    pub seeds: Option<Vec<f64>>,
}

impl Default for SpectrumCfg {
    fn default() -> Self {
        SpectrumCfg {
            s: None,
            depth: 8,
            mode: OmegaModeCfg::Enumerate,
            budget: 10_000,
            beta: None,
            seeds: None,
        }
    }
}

/// Coefficient table: one value per edge id, either fixed or given per
/// exponent (the run's `s` must then match one of the keys exactly).
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BetaCfg {
    pub edges: Option<Vec<f64>>,
    pub per_s: Option<Vec<BetaAtS>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BetaAtS {
    pub s: f64,
    pub edges: Vec<f64>,
}

impl BetaCfg {
    pub fn resolve(&self, s: f64) -> Result<Vec<f64>, CliError> {
        if let Some(edges) = &self.edges {
            return Ok(edges.clone());
        }
        if let Some(table) = &self.per_s {
            return table
                .iter()
                .find(|row| row.s == s)
                .map(|row| row.edges.clone())
                .ok_or_else(|| {
                    CliError::Config(format!("beta table has no entry for s = {s}"))
                });
        }
        Err(CliError::Config("beta table needs either 'edges' or 'per_s'".into()))
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct VerifyCfg {
    pub samples: usize,
    pub depth: usize,
    pub spectrum: bool,
}

impl Default for VerifyCfg {
    fn default() -> Self {
        VerifyCfg { samples: 10_000, depth: 30, spectrum: false }
    }
}

pub fn load(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

/// The core objects every subcommand starts from.
pub struct Workspace {
    pub diagram: StationaryDiagram,
    pub metric: SelfSimilarMetric,
    pub perron: Option<PerronData>,
}

pub fn build(config: &RunConfig) -> Result<Workspace, CliError> {
    let diagram = match (&config.substitution, &config.diagram) {
        (Some(_), Some(_)) => {
            return Err(CliError::Config(
                "config must give exactly one of 'substitution' or 'diagram', not both".into(),
            ))
        }
        (None, None) => {
            return Err(CliError::Config(
                "config must give a 'substitution' or an explicit 'diagram'".into(),
            ))
        }
        (Some(sub), None) => {
            let mut rules = Vec::with_capacity(sub.alphabet.len());
            for letter in &sub.alphabet {
                let word = sub.rules.get(letter).ok_or_else(|| {
                    CliError::Config(format!("no rule for alphabet letter '{letter}'"))
                })?;
                rules.push(word.chars().map(|c| c.to_string()).collect::<Vec<_>>());
            }
            for letter in sub.rules.keys() {
                if !sub.alphabet.contains(letter) {
                    return Err(CliError::Config(format!(
                        "rule for '{letter}' does not match any alphabet letter"
                    )));
                }
            }
            let substitution = Substitution::new(sub.alphabet.clone(), rules)
                .map_err(|e| CliError::Config(e.to_string()))?;
            StationaryDiagram::from_substitution(&substitution)
                .map_err(|e| CliError::Config(e.to_string()))?
        }
        (None, Some(cfg)) => StationaryDiagram::new(cfg.vertices.clone(), cfg.edges.clone())
            .map_err(|e| CliError::Config(e.to_string()))?,
    };

    let needs_perron = !matches!(config.metric, MetricCfg::Regular { .. });
    let perron_data = if needs_perron || diagram.is_primitive() {
        match perron(&diagram, 1e-14, 200_000) {
            Ok(p) => Some(p),
            Err(e) if needs_perron => return Err(CliError::Precondition(e.to_string())),
            Err(_) => None,
        }
    } else {
        None
    };

    let metric = match config.metric {
        MetricCfg::Regular { alpha } => SelfSimilarMetric::regular(alpha, diagram.vertex_count())
            .map_err(|e| CliError::Config(e.to_string()))?,
        MetricCfg::Substitution => {
            SelfSimilarMetric::substitution(perron_data.as_ref().expect("perron computed"))
                .map_err(|e| CliError::Precondition(e.to_string()))?
        }
        MetricCfg::Tiling { d } => {
            SelfSimilarMetric::tiling(perron_data.as_ref().expect("perron computed"), d)
                .map_err(|e| CliError::Precondition(e.to_string()))?
        }
    };

    Ok(Workspace { diagram, metric, perron: perron_data })
}
