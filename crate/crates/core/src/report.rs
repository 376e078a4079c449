//! Report data and its JSON and table renderings.

use crate::config::OutputFormat;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub group: String,
    pub components: Vec<ComponentReport>,
    pub kernels: Vec<KernelReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub highest_weight: Vec<String>,
    pub eigenvalue: String,
    pub dim: u64,
    pub weights: Vec<WeightEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEntry {
    pub coords: Vec<String>,
    pub mult: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartReport {
    pub component: usize,
    pub weights: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    #[serde(rename = "S")]
    pub s: Vec<String>,
    pub parts: Vec<PartReport>,
    pub full: bool,
    pub linear_independent: bool,
    pub x_dim: i64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub loci: Vec<LocusReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pure_states: Vec<PureStateReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusReport {
    pub generic: bool,
    pub partition: Vec<Vec<String>>,
    pub wall: Vec<String>,
    pub mu: Vec<String>,
    pub magnitudes: BTreeMap<String, String>,
    pub isotropy: IsotropyReport,
    pub stratum_dim: i64,
    pub generator_space_dim: usize,
    pub generator_containment: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub float_kernel_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotropyReport {
    pub dim: usize,
    pub rank: usize,
    pub roots: Vec<String>,
    pub name: String,
    pub fingerprint: String,
    pub torus_part: Vec<Vec<String>>,
    pub root_support: BTreeMap<String, usize>,
    pub state: BTreeMap<String, String>,
    pub basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PureStateReport {
    pub component: usize,
    pub weight: String,
    pub dim: usize,
    pub name: String,
}

pub fn tuple(xs: &[String]) -> String {
    format!("({})", xs.join(","))
}

pub fn emit_report(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Table => table(report),
    }
}

fn align(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s}{}", " ".repeat(widths[c] - s.chars().count())))
            .collect();
        out.push_str("  ");
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn table(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group {}", report.group);
    for (k, c) in report.components.iter().enumerate() {
        let _ = writeln!(
            out,
            "component {k}: highest weight {}, eigenvalue {}, dim {}",
            tuple(&c.highest_weight),
            c.eigenvalue,
            c.dim
        );
        let rows: Vec<Vec<String>> =
            c.weights.iter().map(|w| vec![tuple(&w.coords), format!("mult {}", w.mult)]).collect();
        out.push_str(&align(&rows));
    }
    for (k, kr) in report.kernels.iter().enumerate() {
        let _ = writeln!(
            out,
            "kernel {k}: S = {{{}}}, full {}, linear_independent {}, x_dim {}",
            kr.s.join(", "),
            kr.full,
            kr.linear_independent,
            kr.x_dim
        );
        if let Some(e) = &kr.error {
            let _ = writeln!(out, "  error: {e}");
        }
        if !kr.loci.is_empty() {
            let mut rows = vec![vec![
                "locus".to_string(),
                "magnitudes".into(),
                "mu".into(),
                "dim".into(),
                "rank".into(),
                "name".into(),
                "stratum_dim".into(),
                "gen_dim".into(),
                "float_dim".into(),
            ]];
            for l in &kr.loci {
                let mags: Vec<String> = l.magnitudes.iter().map(|(w, r)| format!("{w}:{r}")).collect();
                rows.push(vec![
                    if l.generic { "generic".into() } else { format!("special {}", l.partition.iter().map(|b| format!("{{{}}}", b.join(","))).collect::<Vec<_>>().join("")) },
                    mags.join(" "),
                    tuple(&l.mu),
                    l.isotropy.dim.to_string(),
                    l.isotropy.rank.to_string(),
                    l.isotropy.name.clone(),
                    l.stratum_dim.to_string(),
                    l.generator_space_dim.to_string(),
                    l.float_kernel_dim.map_or("-".into(), |d| d.to_string()),
                ]);
            }
            out.push_str(&align(&rows));
        }
        for p in &kr.pure_states {
            let _ = writeln!(out, "  pure state {} (component {}): dim {}, {}", p.weight, p.component, p.dim, p.name);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_skeleton() {
        let r = Report::default();
        let v: serde_json::Value = serde_json::from_str(&emit_report(&r, OutputFormat::Json)).unwrap();
        assert_eq!(v["components"], serde_json::json!([]));
        assert_eq!(v["kernels"], serde_json::json!([]));
        let back: Report = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }
}
