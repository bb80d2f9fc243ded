//! Run configuration documents (TOML).
//!
//! ```toml
//! model = "grover"                    # or { name = "grover-defect", phase = 1.0 }
//!                                     # or { default_coin = [[re, im], ...9], overrides = [...] }
//! lambda = { angle = 3.141592653589793 }   # or [re, im]
//! alpha = [1.0, 0.0]
//! psi0_mode = "auto"                  # or { explicit = [[re, im], [re, im], [re, im]] }
//! window = [-20, 20]
//! oracle_steps = 10
//! output_format = "csv"               # or "json"
//! output_path = "grover.csv"          # stdout when absent
//! ```

use std::fmt;
use std::path::PathBuf;

use num_complex::Complex64;
use serde::Deserialize;
use thiserror::Error;

use crate::coin::make_coin;
use crate::models::BuiltinModel;
use crate::scalar::check_unit_circle;
use crate::{CoinField, CoinMatrix, Triple};

const DEFAULT_WINDOW: (i64, i64) = (-20, 20);
const DEFAULT_ORACLE_STEPS: usize = 10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid `{field}`: {reason}")]
    Validation { field: &'static str, reason: String },
}

fn invalid(field: &'static str, reason: impl Into<String>) -> ConfigError {
    ConfigError::Validation {
        field,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
enum ComplexSpec {
    Pair([f64; 2]),
    Angle { angle: f64 },
}

impl ComplexSpec {
    fn value(self) -> Complex64 {
        match self {
            ComplexSpec::Pair([re, im]) => Complex64::new(re, im),
            ComplexSpec::Angle { angle } => Complex64::from_polar(1.0, angle),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct OverrideSpec {
    position: i64,
    coin: Vec<ComplexSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum ModelSpec {
    Name(String),
    Named {
        name: String,
        phase: Option<f64>,
    },
    Explicit {
        default_coin: Vec<ComplexSpec>,
        #[serde(default)]
        overrides: Vec<OverrideSpec>,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum Psi0Spec {
    Mode(String),
    Explicit { explicit: [ComplexSpec; 3] },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    model: ModelSpec,
    lambda: ComplexSpec,
    #[serde(default)]
    alpha: Option<ComplexSpec>,
    #[serde(default)]
    psi0_mode: Option<Psi0Spec>,
    #[serde(default)]
    window: Option<[i64; 2]>,
    #[serde(default)]
    oracle_steps: Option<usize>,
    #[serde(default)]
    output_format: Option<String>,
    #[serde(default)]
    output_path: Option<PathBuf>,
}

/// Which coin field a run uses.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelChoice {
    Builtin {
        model: BuiltinModel,
        phase: Option<f64>,
    },
    Explicit(CoinField),
}

impl ModelChoice {
    pub fn field(&self) -> CoinField {
        match self {
            ModelChoice::Builtin { model, phase } => model.field(*phase),
            ModelChoice::Explicit(field) => field.clone(),
        }
    }
}

impl fmt::Display for ModelChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelChoice::Builtin {
                model,
                phase: Some(p),
            } => write!(f, "{model}(phase={p})"),
            ModelChoice::Builtin { model, phase: None } => write!(f, "{model}"),
            ModelChoice::Explicit(field) => {
                write!(f, "explicit({} overrides)", field.overrides().count())
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Psi0Mode {
    /// First basis vector of the origin constraint, scaled by `alpha`.
    Auto,
    Explicit(Triple),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(invalid("output_format", format!("expected csv or json, got `{other}`"))),
        }
    }
}

/// A validated run configuration with every default resolved.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: ModelChoice,
    pub lambda: Complex64,
    pub alpha: Complex64,
    pub psi0_mode: Psi0Mode,
    pub window: (i64, i64),
    pub oracle_steps: usize,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

fn coin_from(field: &'static str, entries: &[ComplexSpec]) -> Result<CoinMatrix, ConfigError> {
    let entries: [Complex64; 9] = entries
        .iter()
        .map(|c| c.value())
        .collect::<Vec<_>>()
        .try_into()
        .map_err(|v: Vec<_>| invalid(field, format!("expected 9 entries, got {}", v.len())))?;
    make_coin(entries).map_err(|e| invalid(field, e.to_string()))
}

fn model_from(spec: ModelSpec) -> Result<ModelChoice, ConfigError> {
    let builtin = |name: &str, phase: Option<f64>| {
        let model: BuiltinModel = name.parse().map_err(|e: String| invalid("model", e))?;
        if phase.is_some() && model != BuiltinModel::GroverDefect {
            return Err(invalid("model", format!("`phase` applies only to grover-defect, not {model}")));
        }
        if phase.is_some_and(|p| !p.is_finite()) {
            return Err(invalid("model", "phase must be finite"));
        }
        Ok(ModelChoice::Builtin { model, phase })
    };
    match spec {
        ModelSpec::Name(name) => builtin(&name, None),
        ModelSpec::Named { name, phase } => builtin(&name, phase),
        ModelSpec::Explicit {
            default_coin,
            overrides,
        } => {
            let mut field = CoinField::homogeneous(coin_from("model.default_coin", &default_coin)?);
            for o in overrides {
                field = field.with_override(o.position, coin_from("model.overrides", &o.coin)?);
            }
            Ok(ModelChoice::Explicit(field))
        }
    }
}

/// Parses and validates a configuration document.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;

    let psi0_mode = match raw.psi0_mode {
        None => Psi0Mode::Auto,
        Some(Psi0Spec::Mode(m)) if m == "auto" => Psi0Mode::Auto,
        Some(Psi0Spec::Mode(m)) => {
            return Err(invalid("psi0_mode", format!("expected `auto` or {{ explicit = [...] }}, got `{m}`")))
        }
        Some(Psi0Spec::Explicit { explicit }) => {
            let [l, o, r] = explicit.map(ComplexSpec::value);
            Psi0Mode::Explicit(Triple::new(l, o, r))
        }
    };

    let config = RunConfig {
        model: model_from(raw.model)?,
        lambda: raw.lambda.value(),
        alpha: raw.alpha.map_or(Complex64::new(1.0, 0.0), ComplexSpec::value),
        psi0_mode,
        window: raw.window.map_or(DEFAULT_WINDOW, |[a, b]| (a, b)),
        oracle_steps: raw.oracle_steps.unwrap_or(DEFAULT_ORACLE_STEPS),
        output_format: raw.output_format.as_deref().unwrap_or("csv").parse()?,
        output_path: raw.output_path,
    };
    config.validate()?;
    Ok(config)
}

impl RunConfig {
    /// Checks cross-field constraints; call again after applying overrides.
    pub fn validate(&self) -> Result<(), ConfigError> {
        check_unit_circle(self.lambda).map_err(|_| {
            invalid(
                "lambda",
                format!("not on the unit circle (|lambda| = {})", self.lambda.norm()),
            )
        })?;
        let finite = |z: Complex64| z.re.is_finite() && z.im.is_finite();
        if !finite(self.alpha) {
            return Err(invalid("alpha", "must be finite"));
        }
        if let Psi0Mode::Explicit(v) = self.psi0_mode {
            if !v.is_finite() {
                return Err(invalid("psi0_mode", "explicit triple must be finite"));
            }
        }
        let (lo, hi) = self.window;
        if !(lo <= 0 && 0 <= hi) {
            return Err(invalid("window", format!("[{lo}, {hi}] does not contain 0")));
        }
        let sites = (hi - lo + 1) as usize;
        if sites < 4 {
            return Err(invalid("window", "needs at least 4 sites"));
        }
        if sites < 2 * self.oracle_steps + 1 {
            return Err(invalid(
                "oracle_steps",
                format!("{} steps need a window of at least {} sites, got {sites}", self.oracle_steps, 2 * self.oracle_steps + 1),
            ));
        }
        Ok(())
    }
}
