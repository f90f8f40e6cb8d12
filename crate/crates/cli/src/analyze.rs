//! The `analyze` pipeline: covers, cover ideal, Rees presentation,
//! x-condition, then per-power checks.

use std::time::Instant;

use serde::Serialize;

use reeslin::graphs::minimal_vertex_covers;
use reeslin::monomials::power;
use reeslin::rees::{minimal_generation_check, ReesReportJson};
use reeslin::resolutions::{find_linear_quotients_order, has_linear_resolution, is_componentwise_linear, OrderSource};
use reeslin::{cover_ideal, rees_presentation, standard_monomials, x_condition, BettiConfig, GbConfig, Graph};

use crate::error::CliError;

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub max_power: u32,
    pub betti: bool,
    pub max_gens: usize,
    pub gb: GbConfig,
    pub betti_config: BettiConfig,
}

#[derive(Debug, Serialize)]
pub struct GraphSummary {
    pub vertices: Vec<String>,
    pub edge_count: usize,
}

#[derive(Debug, Serialize)]
pub struct CertificateSummary {
    pub source: OrderSource,
    pub ordering: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct PowerReport {
    pub k: u32,
    pub minimal_generators: usize,
    pub standard_monomials: usize,
    pub minimal_generation: bool,
    pub linear_quotients: bool,
    pub certificate: Option<CertificateSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub linear_resolution: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub componentwise_linear: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub componentwise_degrees: Option<Vec<(u32, bool)>>,
}

/// A property the hypotheses in force say must hold, and whether it did.
#[derive(Debug, Serialize)]
pub struct Prediction {
    pub k: u32,
    pub hypothesis: &'static str,
    pub property: &'static str,
    pub holds: bool,
}

#[derive(Debug, Serialize)]
pub struct Timings {
    pub presentation_ms: f64,
    pub powers_ms: Vec<f64>,
}

#[derive(Debug, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub cover_count: usize,
    pub cover_ideal: Vec<String>,
    pub rees: ReesReportJson,
    /// Componentwise verdicts only examine degrees between the smallest and
    /// largest generator degree.
    pub componentwise_range_limited: bool,
    pub powers: Vec<PowerReport>,
    pub predictions: Vec<Prediction>,
    pub timings: Timings,
}

impl AnalysisReport {
    pub fn failed_predictions(&self) -> Vec<&Prediction> {
        self.predictions.iter().filter(|p| !p.holds).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "vertices: {}\nedges: {}\ncovers: {}\ncover ideal: {}\nx-condition: {}\nquadratic: {}\nin(J): {}\n",
            self.graph.vertices.join(" > "),
            self.graph.edge_count,
            self.cover_count,
            self.cover_ideal.join(", "),
            self.rees.x_condition,
            self.rees.quadratic,
            self.rees.in_j_generators.join(", "),
        );
        if !self.rees.offenders.is_empty() {
            out.push_str(&format!("offenders: {}\n", self.rees.offenders.join(", ")));
        }
        for p in &self.powers {
            out.push_str(&format!(
                "k={}: {} minimal generators, {} standard monomials, minimal generation {}, linear quotients {}",
                p.k, p.minimal_generators, p.standard_monomials, p.minimal_generation, p.linear_quotients
            ));
            if let Some(l) = p.linear_resolution {
                out.push_str(&format!(", linear resolution {l}"));
            }
            if let Some(c) = p.componentwise_linear {
                out.push_str(&format!(", componentwise linear {c} (range-limited)"));
            }
            out.push('\n');
        }
        for p in self.failed_predictions() {
            out.push_str(&format!(
                "FAILED k={}: {} predicted by {}\n",
                p.k, p.property, p.hypothesis
            ));
        }
        out
    }
}

const QUADRATIC: &str = "quadratic initial ideal";
const X_EQUI: &str = "x-condition with equigenerated ideal";
const LQ: &str = "linear quotients on minimal generators";

pub fn analyze(g: &Graph, opts: AnalyzeOptions) -> Result<AnalysisReport, CliError> {
    if opts.max_power == 0 {
        return Err(CliError::Input("--max-power must be at least 1".into()));
    }
    let start = Instant::now();
    let covers = minimal_vertex_covers(g);
    let ideal = cover_ideal(g);
    let p = rees_presentation(&ideal, opts.gb)?;
    let xc = x_condition(&p);
    let presentation_ms = start.elapsed().as_secs_f64() * 1e3;

    let mut powers = Vec::new();
    let mut predictions = Vec::new();
    let mut powers_ms = Vec::new();
    for k in 1..=opts.max_power {
        let started = Instant::now();
        let ik = power(&ideal, k)?;
        let std = standard_monomials(&p, k);
        let minimal_generation = minimal_generation_check(&p, k)?;
        let cert = find_linear_quotients_order(ik.generators(), Some(&std.mapped_generators), opts.max_gens)?;
        let u = ik.universe();
        let certificate = cert.as_ref().map(|c| CertificateSummary {
            source: c.source,
            ordering: c.ordering.iter().map(|m| u.format(m)).collect(),
        });
        let (mut linear_resolution, mut componentwise_linear, mut componentwise_degrees) = (None, None, None);
        if opts.betti {
            let cw = is_componentwise_linear(&ik, opts.betti_config)?;
            componentwise_linear = Some(cw.componentwise_linear);
            componentwise_degrees = Some(cw.per_degree);
            if ik.is_equigenerated() {
                linear_resolution = Some(has_linear_resolution(&ik, opts.betti_config)?);
            }
        }
        let lq = cert.is_some();
        let mut predict = |hypothesis, property, holds| {
            predictions.push(Prediction {
                k,
                hypothesis,
                property,
                holds,
            })
        };
        if xc.quadratic && !p.is_degenerate() {
            predict(
                QUADRATIC,
                "minimal generation by standard monomials",
                minimal_generation,
            );
            predict(QUADRATIC, LQ, lq);
            if let Some(c) = componentwise_linear {
                predict(QUADRATIC, "componentwise linear", c);
            }
        }
        if let (true, Some(l)) = (xc.holds && ideal.is_equigenerated(), linear_resolution) {
            predict(X_EQUI, "linear resolution", l);
        }
        if let (true, Some(c)) = (lq, componentwise_linear) {
            predict(LQ, "componentwise linear", c);
        }
        powers.push(PowerReport {
            k,
            minimal_generators: ik.len(),
            standard_monomials: std.members.len(),
            minimal_generation,
            linear_quotients: lq,
            certificate,
            linear_resolution,
            componentwise_linear,
            componentwise_degrees,
        });
        powers_ms.push(started.elapsed().as_secs_f64() * 1e3);
    }

    Ok(AnalysisReport {
        graph: GraphSummary {
            vertices: g.labels(),
            edge_count: g.edge_count(),
        },
        cover_count: covers.len(),
        cover_ideal: ideal.format(),
        rees: xc.to_json(&p),
        componentwise_range_limited: true,
        powers,
        predictions,
        timings: Timings {
            presentation_ms,
            powers_ms,
        },
    })
}
