//! TOML run configuration.

use crate::error::{Error, Result};
use crate::kernels::{Parts, RepComponentSpec};
use crate::lie::{BasisKind, CoordinateSystem, Factor, GroupSpec, RootDatum, WeightVector};
use crate::linalg::{QVec, Q};
use crate::module::DEFAULT_DIM_CAP;
use num_bigint::BigInt;
use serde::Deserialize;
use std::collections::BTreeSet;
use std::str::FromStr;

pub const DIM_CAP_ENV: &str = "EQUISTRATA_DIM_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Table,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!("unknown output format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    pub max_kernel_size: usize,
    pub module_dim_cap: usize,
    pub float_check: bool,
    pub output_format: OutputFormat,
}

impl Default for Options {
    fn default() -> Self {
        Options { max_kernel_size: 4, module_dim_cap: DEFAULT_DIM_CAP, float_check: true, output_format: OutputFormat::Table }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub group: GroupSpec,
    pub datum: RootDatum,
    pub coords: CoordinateSystem,
    pub components: Vec<RepComponentSpec>,
    pub options: Options,
    /// Explicit kernel candidates for `strata`, as parts `(component, S_i)`.
    pub candidates: Option<Vec<Parts>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Number {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    factors: Vec<String>,
    weight_basis: Option<String>,
    cartan_basis: Option<Vec<Vec<Number>>>,
    components: Vec<RawComponent>,
    options: Option<RawOptions>,
    candidates: Option<Vec<RawCandidate>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComponent {
    highest_weight: Vec<Number>,
    eigenvalue: Number,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    max_kernel_size: Option<usize>,
    module_dim_cap: Option<usize>,
    float_check: Option<bool>,
    output_format: Option<OutputFormat>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCandidate {
    parts: Vec<RawPart>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPart {
    component: usize,
    weights: Vec<Vec<Number>>,
}

/// Parse `"p/q"`, `"n"` or an integer.
pub fn parse_rational(text: &str) -> Result<Q> {
    let t = text.trim();
    let bad = || Error::Config(format!("`{text}` is not a rational number"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(BigInt::from_str(t).map_err(|_| bad())?)),
    }
}

fn number(n: &Number, field: &str) -> Result<Q> {
    match n {
        Number::Int(i) => Ok(Q::from_integer(BigInt::from(*i))),
        Number::Text(s) => parse_rational(s).map_err(|e| Error::Config(format!("{field}: {e}"))),
    }
}

fn vector(ns: &[Number], field: &str) -> Result<QVec> {
    ns.iter().enumerate().map(|(k, n)| number(n, &format!("{field}[{k}]"))).collect()
}

pub fn parse_config(text: &str) -> Result<RunConfig> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string().trim_end().to_string()))?;
    let factors = raw
        .factors
        .iter()
        .enumerate()
        .map(|(k, f)| Factor::parse(f).map_err(|e| Error::Config(format!("factors[{k}]: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    let group = GroupSpec::new(factors).map_err(|e| Error::Config(format!("factors: {e}")))?;
    let datum = RootDatum::new(&group);
    let coords = match raw.weight_basis.as_deref().unwrap_or("dual") {
        "dual" => CoordinateSystem::dual(&datum),
        "ambient" => CoordinateSystem::ambient(&datum),
        "custom" => {
            let basis = raw
                .cartan_basis
                .as_ref()
                .ok_or_else(|| Error::Config("weight_basis = \"custom\" needs cartan_basis".into()))?
                .iter()
                .enumerate()
                .map(|(k, v)| vector(v, &format!("cartan_basis[{k}]")))
                .collect::<Result<Vec<_>>>()?;
            CoordinateSystem::custom(&datum, basis).map_err(|e| Error::Config(format!("cartan_basis: {e}")))?
        }
        other => return Err(Error::Config(format!("weight_basis: unknown basis `{other}`"))),
    };
    if raw.cartan_basis.is_some() && coords.kind != BasisKind::Custom {
        return Err(Error::Config("cartan_basis is only used with weight_basis = \"custom\"".into()));
    }
    let to_weight = |ns: &[Number], field: &str| -> Result<WeightVector> {
        let v = vector(ns, field)?;
        let amb = coords.weight_to_ambient(&datum, &v).map_err(|e| Error::Config(format!("{field}: {e}")))?;
        Ok(WeightVector(amb))
    };
    let mut components = Vec::new();
    let mut seen = BTreeSet::new();
    for (k, c) in raw.components.iter().enumerate() {
        let field = format!("components[{k}].highest_weight");
        let hw = to_weight(&c.highest_weight, &field)?;
        if !datum.is_integral(&hw.0) {
            return Err(Error::Config(format!("{field}: weight is not integral")));
        }
        if !datum.is_dominant(&hw.0) {
            return Err(Error::Config(format!("{field}: weight is not dominant")));
        }
        let eigenvalue = number(&c.eigenvalue, &format!("components[{k}].eigenvalue"))?;
        if !seen.insert(eigenvalue.clone()) {
            return Err(Error::Config(format!(
                "components[{k}].eigenvalue: {eigenvalue} repeats an earlier component; (GC) requires distinct eigenvalues"
            )));
        }
        components.push(RepComponentSpec { highest_weight: hw, eigenvalue });
    }
    let mut options = Options::default();
    if let Some(o) = raw.options {
        options.max_kernel_size = o.max_kernel_size.unwrap_or(options.max_kernel_size);
        options.module_dim_cap = o.module_dim_cap.unwrap_or(options.module_dim_cap);
        options.float_check = o.float_check.unwrap_or(options.float_check);
        options.output_format = o.output_format.unwrap_or(options.output_format);
    }
    if options.max_kernel_size == 0 {
        return Err(Error::Config("options.max_kernel_size must be at least 1".into()));
    }
    let candidates = match raw.candidates {
        None => None,
        Some(cs) => Some(
            cs.iter()
                .enumerate()
                .map(|(k, c)| {
                    c.parts
                        .iter()
                        .enumerate()
                        .map(|(p, part)| {
                            if part.component >= components.len() {
                                return Err(Error::Config(format!(
                                    "candidates[{k}].parts[{p}].component: no component {}",
                                    part.component
                                )));
                            }
                            let mut ws = part
                                .weights
                                .iter()
                                .enumerate()
                                .map(|(j, w)| to_weight(w, &format!("candidates[{k}].parts[{p}].weights[{j}]")))
                                .collect::<Result<Vec<_>>>()?;
                            ws.sort_by(|a, b| b.cmp(a));
                            Ok((part.component, ws))
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    Ok(RunConfig { group, datum, coords, components, options, candidates })
}

/// Apply `EQUISTRATA_DIM_CAP` if set.
pub fn apply_env_overrides(cfg: &mut RunConfig) -> Result<()> {
    if let Ok(v) = std::env::var(DIM_CAP_ENV) {
        cfg.options.module_dim_cap =
            v.trim().parse().map_err(|_| Error::Config(format!("{DIM_CAP_ENV}: `{v}` is not a dimension")))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qr;

    const CUBE: &str = r#"
factors = ["SU(2)", "SU(2)", "SU(2)"]
[[components]]
highest_weight = [1, 1, 1]
eigenvalue = "1"
"#;

    #[test]
    fn parses_cube() {
        let cfg = parse_config(CUBE).unwrap();
        assert_eq!(cfg.components.len(), 1);
        assert_eq!(cfg.components[0].highest_weight.0[0], qr(1, 2));
        assert_eq!(cfg.options, Options::default());
    }

    #[test]
    fn rejects_su0() {
        let err = parse_config("factors = [\"SU(0)\"]\ncomponents = []\n").unwrap_err();
        assert!(err.to_string().contains("factor rank below 2"), "{err}");
    }

    #[test]
    fn rejects_duplicate_eigenvalues() {
        let text = format!("{CUBE}\n[[components]]\nhighest_weight = [1, 0, 0]\neigenvalue = \"1\"\n");
        let err = parse_config(&text).unwrap_err();
        assert!(err.to_string().contains("(GC)"), "{err}");
    }

    #[test]
    fn rejects_non_dominant_and_malformed() {
        let text = CUBE.replace("[1, 1, 1]", "[1, -1, 1]");
        assert!(parse_config(&text).unwrap_err().to_string().contains("components[0].highest_weight"));
        let err = parse_config("factors = [").unwrap_err();
        assert!(err.to_string().contains("line"), "{err}");
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational(" 3/6 ").unwrap(), qr(1, 2));
        assert_eq!(parse_rational("-2").unwrap(), qr(-2, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
