//! JSON run configuration.
//!
//! Every document carries `"schema": 1` and one system source:
//!
//! ```json
//! { "schema": 1, "example": "N1" }
//! { "schema": 1,
//!   "center": { "a": "1/2", "b": "-3/10", "c": "-2/5", "omega": "7/10", "sign": 1 },
//!   "saddle": { "family": "N32",
//!               "params": { "a": "-4/5", "b": "-3/5" },
//!               "affine": { "a1": "-3/5", "b1": "-9/10", "c1": "1",
//!                           "alpha1": "-1/10", "beta1": "1/10", "gamma1": "-4/5" } } }
//! { "schema": 1,
//!   "explicit": { "constants": { "k": "1/3" },
//!                 "center": { "integral": "x^2 + y^2", "field": ["-y", "x"] },
//!                 "saddle": { "integral": "...", "field": ["...", "..."] } } }
//! ```
//!
//! Numbers may be JSON numbers, decimal strings or `"p/q"` strings. Optional
//! top-level keys: `tol`, `y_max`, `closure_tol`, `region_tol`, `atol`,
//! `rtol` and `output { path, format, svg, zoom }`.

use std::path::{Path, PathBuf};

use serde_json::{Map, Value};
use thiserror::Error;

use super::registry::{find_source, ExampleEntry};
use crate::crossing::SolveOptions;
use crate::families::{AffineMap, FamilyError, LinearCenterParams, PiecewiseSystem, PolyField, SaddleFamily, SaddleParams, Subsystem};
use crate::orbits::{ArcOptions, VerifyOptions};
use crate::poly::{parse_poly, parse_rational, Env, Q};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

fn field_err(field: &str, message: impl Into<String>) -> ConfigError {
    ConfigError::Field { field: field.to_string(), message: message.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?}, expected csv or json")),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutputSpec {
    pub path: Option<PathBuf>,
    pub format: Format,
    pub svg: Option<PathBuf>,
    pub zoom: bool,
}

/// Fully validated configuration with defaults applied.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Registry id, or `"inline"`.
    pub label: String,
    /// Saddle family, when known.
    pub family: Option<SaddleFamily>,
    pub system: PiecewiseSystem,
    /// Published pairs when the system comes from the registry.
    pub expected: Option<[(f64, f64); 4]>,
    pub solve: SolveOptions,
    pub verify: VerifyOptions,
    pub output: OutputSpec,
}

impl RunConfig {
    /// Configuration for a registry example with default settings.
    pub fn for_example(id: &str) -> Result<Self, ConfigError> {
        let entry = super::registry::example(id).ok_or_else(|| unknown_example(id))?;
        Ok(Self::from_entry(entry))
    }

    fn from_entry(e: &ExampleEntry) -> Self {
        RunConfig {
            label: e.id.to_string(),
            family: Some(e.family),
            system: e.system.clone(),
            expected: Some(e.expected),
            solve: SolveOptions::default(),
            verify: VerifyOptions::default(),
            output: OutputSpec::default(),
        }
    }

    /// Integrator settings for a cycle of the given diameter.
    pub fn arc_options(&self, diameter: f64) -> ArcOptions {
        let mut a = self.verify.arc.unwrap_or_else(|| ArcOptions::for_diameter(diameter));
        a.max_length = 1e4 * diameter.max(1e-6);
        a
    }
}

fn unknown_example(id: &str) -> ConfigError {
    let known: Vec<_> = super::registry::sources().iter().map(|s| s.id).collect();
    field_err("example", format!("unknown example {id:?}; known: {}", known.join(", ")))
}

pub fn load_config(path: &Path) -> Result<RunConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: path.to_path_buf(), source })?;
    parse_config(&text)
}

/// Parses and validates a configuration document.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let doc: Value = serde_json::from_str(text)?;
    let root = doc.as_object().ok_or_else(|| field_err("$", "expected a JSON object"))?;
    check_keys(
        root,
        "$",
        &["schema", "example", "center", "saddle", "explicit", "tol", "y_max", "closure_tol", "region_tol", "atol", "rtol", "output"],
    )?;

    match root.get("schema") {
        None => return Err(field_err("schema", "missing; expected 1")),
        Some(v) if v.as_u64() == Some(1) => {}
        Some(v) => return Err(field_err("schema", format!("unsupported schema {v}; expected 1"))),
    }

    let sources = ["example", "center", "explicit"].iter().filter(|k| root.contains_key(**k)).count();
    let mut cfg = if let Some(v) = root.get("example") {
        if sources > 1 || root.contains_key("saddle") {
            return Err(field_err("example", "give exactly one of `example`, `center`+`saddle`, `explicit`"));
        }
        let id = v.as_str().ok_or_else(|| field_err("example", "expected a string id"))?;
        let src = find_source(id).ok_or_else(|| unknown_example(id))?;
        RunConfig::from_entry(&src.build()?)
    } else if let Some(v) = root.get("explicit") {
        if sources > 1 || root.contains_key("saddle") {
            return Err(field_err("explicit", "give exactly one of `example`, `center`+`saddle`, `explicit`"));
        }
        inline(parse_explicit(v)?)
    } else if root.contains_key("center") || root.contains_key("saddle") {
        let center = parse_center(root.get("center").ok_or_else(|| field_err("center", "missing"))?)?;
        let (family, params, affine) = parse_saddle(root.get("saddle").ok_or_else(|| field_err("saddle", "missing"))?)?;
        inline(PiecewiseSystem::from_params(center, family, params, affine)?)
    } else {
        return Err(field_err("$", "no system given; expected `example`, `center`+`saddle` or `explicit`"));
    };

    if let Some(v) = root.get("tol") {
        cfg.solve.tol = positive(v, "tol")?;
    }
    if let Some(v) = root.get("y_max") {
        cfg.solve.y_max = Some(positive(v, "y_max")?);
    }
    if let Some(v) = root.get("closure_tol") {
        cfg.verify.closure_tol = positive(v, "closure_tol")?;
    }
    if let Some(v) = root.get("region_tol") {
        cfg.verify.region_tol = positive(v, "region_tol")?;
    }
    if root.contains_key("atol") || root.contains_key("rtol") {
        let mut arc = ArcOptions::for_diameter(1.0);
        if let Some(v) = root.get("atol") {
            arc.stepper.atol = positive(v, "atol")?;
        }
        if let Some(v) = root.get("rtol") {
            arc.stepper.rtol = positive(v, "rtol")?;
        }
        cfg.verify.arc = Some(arc);
    }
    if let Some(v) = root.get("output") {
        cfg.output = parse_output(v)?;
    }
    Ok(cfg)
}

fn inline(system: PiecewiseSystem) -> RunConfig {
    RunConfig {
        label: "inline".into(),
        family: system.family(),
        system,
        expected: None,
        solve: SolveOptions::default(),
        verify: VerifyOptions::default(),
        output: OutputSpec::default(),
    }
}

fn check_keys(obj: &Map<String, Value>, at: &str, allowed: &[&str]) -> Result<(), ConfigError> {
    for k in obj.keys() {
        if !allowed.contains(&k.as_str()) {
            let path = if at == "$" { k.clone() } else { format!("{at}.{k}") };
            return Err(field_err(&path, format!("unknown key; expected one of {}", allowed.join(", "))));
        }
    }
    Ok(())
}

fn object<'a>(v: &'a Value, field: &str) -> Result<&'a Map<String, Value>, ConfigError> {
    v.as_object().ok_or_else(|| field_err(field, "expected an object"))
}

/// Exact rational from a JSON number or a decimal / `p/q` string.
fn rational(v: &Value, field: &str) -> Result<Q, ConfigError> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(field_err(field, "expected a number or a numeric string")),
    };
    parse_rational(&text).map_err(|e| field_err(field, e.to_string()))
}

fn positive(v: &Value, field: &str) -> Result<f64, ConfigError> {
    let x = crate::poly::rational::to_f64(&rational(v, field)?);
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(field_err(field, "must be a finite positive number"))
    }
}

fn rational_or_zero(obj: &Map<String, Value>, key: &str, at: &str) -> Result<Q, ConfigError> {
    match obj.get(key) {
        Some(v) => rational(v, &format!("{at}.{key}")),
        None => Ok(crate::poly::qi(0)),
    }
}

fn required_rational(obj: &Map<String, Value>, key: &str, at: &str) -> Result<Q, ConfigError> {
    let field = format!("{at}.{key}");
    rational(obj.get(key).ok_or_else(|| field_err(&field, "missing"))?, &field)
}

fn parse_center(v: &Value) -> Result<LinearCenterParams, ConfigError> {
    let o = object(v, "center")?;
    check_keys(o, "center", &["a", "b", "c", "omega", "sign"])?;
    let sign = match o.get("sign") {
        None => 1,
        Some(s) => match s.as_i64() {
            Some(1) => 1,
            Some(-1) => -1,
            _ => return Err(field_err("center.sign", "expected 1 or -1")),
        },
    };
    let center = LinearCenterParams {
        a: rational_or_zero(o, "a", "center")?,
        b: rational_or_zero(o, "b", "center")?,
        c: rational_or_zero(o, "c", "center")?,
        omega: required_rational(o, "omega", "center")?,
        sign,
    };
    center.validate().map_err(|v| ConfigError::Family(FamilyError::Invalid(v)))?;
    Ok(center)
}

fn parse_saddle(v: &Value) -> Result<(SaddleFamily, SaddleParams, AffineMap), ConfigError> {
    let o = object(v, "saddle")?;
    check_keys(o, "saddle", &["family", "params", "affine"])?;
    let family: SaddleFamily = o
        .get("family")
        .ok_or_else(|| field_err("saddle.family", "missing"))?
        .as_str()
        .ok_or_else(|| field_err("saddle.family", "expected a string"))?
        .parse()
        .map_err(|e: String| field_err("saddle.family", e))?;
    let params = match o.get("params") {
        None => SaddleParams::default(),
        Some(p) => {
            let p = object(p, "saddle.params")?;
            check_keys(p, "saddle.params", &["a", "b", "c", "mu"])?;
            SaddleParams {
                a: rational_or_zero(p, "a", "saddle.params")?,
                b: rational_or_zero(p, "b", "saddle.params")?,
                c: rational_or_zero(p, "c", "saddle.params")?,
                mu: rational_or_zero(p, "mu", "saddle.params")?,
            }
        }
    };
    let affine = match o.get("affine") {
        None => AffineMap::identity(),
        Some(a) => {
            let a = object(a, "saddle.affine")?;
            check_keys(a, "saddle.affine", &["a1", "b1", "c1", "alpha1", "beta1", "gamma1"])?;
            let at = "saddle.affine";
            AffineMap {
                a1: required_rational(a, "a1", at)?,
                b1: required_rational(a, "b1", at)?,
                c1: rational_or_zero(a, "c1", at)?,
                alpha1: required_rational(a, "alpha1", at)?,
                beta1: required_rational(a, "beta1", at)?,
                gamma1: rational_or_zero(a, "gamma1", at)?,
            }
        }
    };
    Ok((family, params, affine))
}

fn parse_explicit(v: &Value) -> Result<PiecewiseSystem, ConfigError> {
    let o = object(v, "explicit")?;
    check_keys(o, "explicit", &["constants", "center", "saddle"])?;
    let mut env = Env::new();
    if let Some(c) = o.get("constants") {
        for (name, value) in object(c, "explicit.constants")? {
            let field = format!("explicit.constants.{name}");
            if name == "x" || name == "y" {
                return Err(field_err(&field, "`x` and `y` are reserved"));
            }
            env = env.with_const(name, rational(value, &field)?);
        }
    }
    let side = |key: &str| -> Result<Subsystem, ConfigError> {
        let at = format!("explicit.{key}");
        let s = object(o.get(key).ok_or_else(|| field_err(&at, "missing"))?, &at)?;
        check_keys(s, &at, &["integral", "field"])?;
        let poly = |v: Option<&Value>, field: String| {
            let src = v.and_then(Value::as_str).ok_or_else(|| field_err(&field, "expected a polynomial string"))?;
            parse_poly(src, &env).map_err(|e| field_err(&field, e.to_string()))
        };
        let h = poly(s.get("integral"), format!("{at}.integral"))?;
        let f = s
            .get("field")
            .and_then(Value::as_array)
            .filter(|a| a.len() == 2)
            .ok_or_else(|| field_err(&format!("{at}.field"), "expected two polynomial strings"))?;
        let fx = poly(f.first(), format!("{at}.field[0]"))?;
        let fy = poly(f.get(1), format!("{at}.field[1]"))?;
        Ok(Subsystem::new(PolyField::new(fx, fy), h))
    };
    Ok(PiecewiseSystem::explicit(side("center")?, side("saddle")?)?)
}

fn parse_output(v: &Value) -> Result<OutputSpec, ConfigError> {
    let o = object(v, "output")?;
    check_keys(o, "output", &["path", "format", "svg", "zoom"])?;
    let path = |key: &str| -> Result<Option<PathBuf>, ConfigError> {
        o.get(key)
            .map(|p| p.as_str().map(PathBuf::from).ok_or_else(|| field_err(&format!("output.{key}"), "expected a path string")))
            .transpose()
    };
    let format = match o.get("format") {
        None => Format::default(),
        Some(f) => f
            .as_str()
            .ok_or_else(|| field_err("output.format", "expected \"csv\" or \"json\""))?
            .parse()
            .map_err(|e: String| field_err("output.format", e))?,
    };
    let zoom = match o.get("zoom") {
        None => false,
        Some(z) => z.as_bool().ok_or_else(|| field_err("output.zoom", "expected a boolean"))?,
    };
    Ok(OutputSpec { path: path("path")?, format, svg: path("svg")?, zoom })
}
