//! JSON run-configuration: parsing, validation, and the exact sweep grid.
//!
//! Rationals arrive as strings (`"1/2"`, `"3"`, `"0.25"`) so exact inputs
//! never pass through floats. The schema is versioned with a top-level
//! `"version": 1`.

use std::fmt;
use std::path::{Path, PathBuf};

use conekit_core::{parse_rational, FibrationSetup, KEFactor, Rational};
use serde::Deserialize;

/// Configuration file problems, with field diagnostics. JSON syntax errors
/// keep serde's line/column positions.
#[derive(Debug)]
pub enum ParseError {
    Io(std::io::Error),
    Json(serde_json::Error),
    Field { field: String, message: String },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Io(e) => write!(f, "cannot read config: {e}"),
            ParseError::Json(e) => write!(f, "config is not valid JSON: {e}"),
            ParseError::Field { field, message } => {
                write!(f, "config field `{field}`: {message}")
            }
        }
    }
}

impl std::error::Error for ParseError {}

fn field_err<T>(field: &str, message: impl fmt::Display) -> Result<T, ParseError> {
    Err(ParseError::Field {
        field: field.to_string(),
        message: message.to_string(),
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    version: u32,
    #[serde(default)]
    name: Option<String>,
    factors: Vec<RawFactor>,
    #[serde(default)]
    sweep: Option<RawSweep>,
    #[serde(default)]
    b: Option<String>,
    #[serde(default)]
    vol_m: Option<f64>,
    #[serde(default)]
    a: Option<String>,
    #[serde(default)]
    outputs: Option<RawOutputs>,
    #[serde(default)]
    flags: Option<RawFlags>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactor {
    dim: u32,
    einstein: String,
    exponent: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    b_min: String,
    b_max: String,
    grid_points: usize,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutputs {
    #[serde(default)]
    csv_path: Option<PathBuf>,
    #[serde(default)]
    svg_path: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFlags {
    #[serde(default)]
    exact_only: Option<bool>,
    #[serde(default)]
    seed: Option<u64>,
}

/// The half-width values a run covers: a single point or an even grid.
#[derive(Debug, Clone)]
pub enum SweepRange {
    Single(Rational),
    Grid {
        b_min: Rational,
        b_max: Rational,
        grid_points: usize,
    },
}

impl SweepRange {
    /// The exact grid values, evenly spaced in exact arithmetic:
    /// `b_min + k*(b_max - b_min)/(grid_points - 1)`. A one-point grid or a
    /// single value yields just its lower end.
    pub fn grid(&self) -> Vec<Rational> {
        match self {
            SweepRange::Single(b) => vec![b.clone()],
            SweepRange::Grid {
                b_min,
                b_max,
                grid_points,
            } => {
                if *grid_points == 1 {
                    return vec![b_min.clone()];
                }
                let step =
                    (b_max - b_min) / Rational::from_integer(((*grid_points - 1) as i64).into());
                (0..*grid_points)
                    .map(|k| b_min + &step * Rational::from_integer((k as i64).into()))
                    .collect()
            }
        }
    }
}

/// A validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub name: String,
    pub factors: Vec<KEFactor>,
    pub range: SweepRange,
    pub vol_m: f64,
    pub a: Rational,
    pub csv_path: PathBuf,
    pub svg_path: PathBuf,
    pub exact_only: bool,
    pub seed: u64,
}

impl RunConfig {
    /// Builds the fibration setup for one half-width value. Surfaces the
    /// core validation errors (in particular the admissibility check on
    /// `b`) unchanged.
    pub fn setup_at(&self, b: &Rational) -> conekit_core::Result<FibrationSetup> {
        FibrationSetup::with_scales(self.factors.clone(), b.clone(), self.vol_m, self.a.clone())
    }
}

fn parse_rat_field(field: &str, text: &str) -> Result<Rational, ParseError> {
    parse_rational(text).or_else(|e| field_err(field, e))
}

/// Reads and validates a configuration file.
pub fn load_config(path: &Path) -> Result<RunConfig, ParseError> {
    let text = std::fs::read_to_string(path).map_err(ParseError::Io)?;
    let raw: RawConfig = serde_json::from_str(&text).map_err(ParseError::Json)?;

    if raw.version != 1 {
        return field_err(
            "version",
            format!("unsupported version {} (expected 1)", raw.version),
        );
    }
    if raw.factors.is_empty() {
        return field_err("factors", "at least one base factor is required");
    }

    let mut factors = Vec::with_capacity(raw.factors.len());
    for (i, rf) in raw.factors.iter().enumerate() {
        let field = format!("factors[{i}]");
        let einstein = parse_rat_field(&format!("{field}.einstein"), &rf.einstein)?;
        let exponent = parse_rat_field(&format!("{field}.exponent"), &rf.exponent)?;
        let factor = KEFactor::new(rf.dim, einstein, exponent).or_else(|e| field_err(&field, e))?;
        factors.push(factor);
    }

    let range = match (&raw.sweep, &raw.b) {
        (Some(_), Some(_)) => {
            return field_err("sweep", "give either `sweep` or a single `b`, not both")
        }
        (None, None) => return field_err("sweep", "either `sweep` or a single `b` is required"),
        (None, Some(b)) => {
            let b = parse_rat_field("b", b)?;
            if b <= Rational::from_integer(0.into()) {
                return field_err("b", "half-width must be positive");
            }
            SweepRange::Single(b)
        }
        (Some(s), None) => {
            let b_min = parse_rat_field("sweep.b_min", &s.b_min)?;
            let b_max = parse_rat_field("sweep.b_max", &s.b_max)?;
            if b_min <= Rational::from_integer(0.into()) {
                return field_err("sweep.b_min", "half-width must be positive");
            }
            if b_max < b_min {
                return field_err("sweep.b_max", "must be at least b_min");
            }
            if s.grid_points == 0 {
                return field_err("sweep.grid_points", "at least one grid point is required");
            }
            SweepRange::Grid {
                b_min,
                b_max,
                grid_points: s.grid_points,
            }
        }
    };

    let vol_m = raw.vol_m.unwrap_or(1.0);
    if !(vol_m.is_finite() && vol_m > 0.0) {
        return field_err("vol_m", "base volume must be positive and finite");
    }
    let a = match &raw.a {
        Some(text) => {
            let a = parse_rat_field("a", text)?;
            if a == Rational::from_integer(0.into()) {
                return field_err("a", "potential scale must be nonzero");
            }
            a
        }
        None => Rational::from_integer(1.into()),
    };

    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "run".to_string());
    let name = raw.name.unwrap_or_else(|| stem.clone());

    let outputs = raw.outputs.unwrap_or_default();
    let csv_path = outputs
        .csv_path
        .unwrap_or_else(|| PathBuf::from(format!("{stem}.csv")));
    let svg_path = outputs
        .svg_path
        .unwrap_or_else(|| PathBuf::from(format!("{stem}.svg")));

    let flags = raw.flags.unwrap_or_default();

    Ok(RunConfig {
        name,
        factors,
        range,
        vol_m,
        a,
        csv_path,
        svg_path,
        exact_only: flags.exact_only.unwrap_or(false),
        seed: flags.seed.unwrap_or(0),
    })
}
