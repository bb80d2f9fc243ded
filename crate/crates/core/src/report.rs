//! Executes a [`RunConfig`] and serializes the result.

use std::io::{self, Write};

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::config::{OutputFormat, Psi0Mode, RunConfig};
use crate::measure::{classify, measure_profile, MeasureKind, DEFAULT_CLASSIFY_TOL};
use crate::oracle::{eigen_residual_report, stationarity_deviation, Relation};
use crate::transfer::{origin_constraint, propagate, solve_initial_states};
use crate::{AmplitudeSegment, MeasureClassification, MeasureProfile, Triple};

pub const CSV_HEADER: [&str; 8] = ["x", "re_L", "im_L", "re_O", "im_O", "re_R", "im_R", "mu"];

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Walk(#[from] crate::Error),
    #[error("output: {0}")]
    Io(#[from] io::Error),
    #[error("output: {0}")]
    Csv(#[from] csv::Error),
    #[error("output: {0}")]
    Json(#[from] serde_json::Error),
}

impl RunError {
    /// 2 for numerical failures of the method, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Walk(e) if e.is_numerical() => 2,
            _ => 1,
        }
    }
}

/// Everything computed for one configuration.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub model: String,
    pub lambda: Complex64,
    pub psi0: Triple,
    pub initial_state_vacuous: bool,
    pub segment: AmplitudeSegment,
    pub profile: MeasureProfile,
    pub classification: MeasureClassification,
    pub eigen_residual: f64,
    pub residual_site: i64,
    pub residual_relation: Relation,
    pub oracle_steps: usize,
    pub stationarity_deviation: f64,
}

/// Resolves the initial state, propagates, and runs every check.
pub fn run(config: &RunConfig) -> Result<RunReport, RunError> {
    let field = config.model.field();
    let lambda = config.lambda;
    let (psi0, vacuous) = match config.psi0_mode {
        Psi0Mode::Auto => {
            let basis = solve_initial_states(&origin_constraint(&field, lambda)?);
            (basis.first().scale(config.alpha), basis.is_vacuous())
        }
        Psi0Mode::Explicit(v) => (v, origin_constraint(&field, lambda)?.vacuous),
    };
    let (x_min, x_max) = config.window;
    let segment = propagate(&field, lambda, psi0, x_min, x_max)?;
    let profile = measure_profile(&segment);
    let classification = classify(&profile, DEFAULT_CLASSIFY_TOL)?;
    let residual = eigen_residual_report(&field, &segment)?;
    let deviation = stationarity_deviation(&field, &segment, config.oracle_steps)?;
    Ok(RunReport {
        model: config.model.to_string(),
        lambda,
        psi0,
        initial_state_vacuous: vacuous,
        segment,
        profile,
        classification,
        eigen_residual: residual.max,
        residual_site: residual.site,
        residual_relation: residual.relation,
        oracle_steps: config.oracle_steps,
        stationarity_deviation: deviation,
    })
}

#[derive(Serialize)]
struct Row {
    x: i64,
    #[serde(rename = "re_L")]
    re_l: f64,
    #[serde(rename = "im_L")]
    im_l: f64,
    #[serde(rename = "re_O")]
    re_o: f64,
    #[serde(rename = "im_O")]
    im_o: f64,
    #[serde(rename = "re_R")]
    re_r: f64,
    #[serde(rename = "im_R")]
    im_r: f64,
    mu: f64,
}

impl RunReport {
    fn rows(&self) -> impl Iterator<Item = Row> + '_ {
        self.segment
            .iter()
            .zip(self.profile.values())
            .map(|((x, v), mu)| Row {
                x,
                re_l: v.left.re,
                im_l: v.left.im,
                re_o: v.stay.re,
                im_o: v.stay.im,
                re_r: v.right.re,
                im_r: v.right.im,
                mu: *mu,
            })
    }

    /// One row per site, columns [`CSV_HEADER`], floats in shortest
    /// round-trip form.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), RunError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        for row in self.rows() {
            let fields = [
                row.x.to_string(),
                row.re_l.to_string(),
                row.im_l.to_string(),
                row.re_o.to_string(),
                row.im_o.to_string(),
                row.re_r.to_string(),
                row.im_r.to_string(),
                row.mu.to_string(),
            ];
            w.write_record(&fields)?;
        }
        w.flush()?;
        Ok(())
    }

    /// The CSV rows plus a metadata object.
    pub fn write_json<W: Write>(&self, mut out: W) -> Result<(), RunError> {
        let c = &self.classification;
        let (kind, period) = match c.kind {
            MeasureKind::Uniform => ("uniform", None),
            MeasureKind::Periodic(p) => ("periodic", Some(p)),
            MeasureKind::Other => ("other", None),
        };
        let pair = |z: Complex64| [z.re, z.im];
        let doc = serde_json::json!({
            "metadata": {
                "model": self.model,
                "lambda": pair(self.lambda),
                "psi0": self.psi0.to_array().map(pair),
                "initial_state_vacuous": self.initial_state_vacuous,
                "window": [self.segment.x_min(), self.segment.x_max()],
                "eigen_residual": self.eigen_residual,
                "residual_site": self.residual_site,
                "residual_relation": self.residual_relation,
                "oracle_steps": self.oracle_steps,
                "stationarity_deviation": self.stationarity_deviation,
                "classification": {
                    "kind": kind,
                    "period": period,
                    "bounded_on_window": c.bounded_on_window,
                    // JSON has no infinity
                    "max_over_min_ratio": c.max_over_min_ratio.is_finite().then_some(c.max_over_min_ratio),
                },
            },
            "rows": self.rows().collect::<Vec<_>>(),
        });
        serde_json::to_writer_pretty(&mut out, &doc)?;
        out.write_all(b"\n")?;
        Ok(())
    }

    pub fn write<W: Write>(&self, format: OutputFormat, out: W) -> Result<(), RunError> {
        match format {
            OutputFormat::Csv => self.write_csv(out),
            OutputFormat::Json => self.write_json(out),
        }
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let kind = match self.classification.kind {
            MeasureKind::Uniform => "uniform".to_string(),
            MeasureKind::Periodic(p) => format!("periodic({p})"),
            MeasureKind::Other => "other".to_string(),
        };
        format!(
            "{}: lambda = {}{:+}i, kind = {kind}, eigen residual = {:.3e}, stationarity deviation ({} steps) = {:.3e}",
            self.model,
            self.lambda.re,
            self.lambda.im,
            self.eigen_residual,
            self.oracle_steps,
            self.stationarity_deviation,
        )
    }
}
