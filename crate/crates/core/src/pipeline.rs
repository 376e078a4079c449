//! Weights → kernels → strata → classification.

use crate::classify::{classify, restricted_roots};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::float_oracle::float_kernel_dim;
use crate::kernels::{admissible_candidate, enumerate_kernel_candidates, KernelCandidate, Parts, RepSpec};
use crate::lie::WeightVector;
use crate::linalg::QVec;
use crate::module::{realize_cached, ModuleRealization};
use crate::report::{
    ComponentReport, IsotropyReport, KernelReport, LocusReport, PartReport, PureStateReport, Report, WeightEntry,
};
use crate::strata::{
    enumerate_momentum_loci, generator_containment, isotropy_algebra_at, pure_state_isotropy, state_point,
    stratum_dimension, MomentumLocus,
};
use crate::weights::weyl_dimension;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Weights,
    Kernels,
    Strata,
}

/// A report plus failures isolated to individual candidates.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub errors: Vec<Error>,
}

fn strings(v: &QVec) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn run_pipeline(cfg: &RunConfig, command: Command) -> Result<Outcome> {
    let datum = &cfg.datum;
    let rep = RepSpec::new(datum, cfg.components.clone())?;
    let mut report = Report { group: cfg.group.to_string(), ..Report::default() };
    for (c, ws) in cfg.components.iter().zip(&rep.systems) {
        let mut weights: Vec<WeightEntry> = ws
            .entries
            .iter()
            .map(|(w, &m)| (cfg.coords.weight_from_ambient(&w.0), m))
            .map(|(coords, mult)| WeightEntry { coords: strings(&coords), mult })
            .collect();
        weights.sort_by(|a, b| {
            let key = |e: &WeightEntry| -> Vec<crate::linalg::Q> {
                e.coords.iter().map(|s| crate::config::parse_rational(s).unwrap()).collect()
            };
            key(b).cmp(&key(a))
        });
        report.components.push(ComponentReport {
            highest_weight: strings(&cfg.coords.weight_from_ambient(&c.highest_weight.0)),
            eigenvalue: c.eigenvalue.to_string(),
            dim: weyl_dimension(datum, &c.highest_weight)?.to_u64().unwrap_or(u64::MAX),
            weights,
        });
    }
    let mut errors = Vec::new();
    if command == Command::Weights {
        return Ok(Outcome { report, errors });
    }
    let candidates: Vec<std::result::Result<KernelCandidate, (Parts, Error)>> =
        match (&cfg.candidates, command) {
            (Some(list), Command::Strata) => list
                .iter()
                .enumerate()
                .map(|(k, parts)| {
                    admissible_candidate(&rep, datum, parts).ok_or_else(|| {
                        (parts.clone(), Error::Input(format!("candidates[{k}] is not an admissible kernel")))
                    })
                })
                .collect(),
            _ => enumerate_kernel_candidates(&rep, datum, cfg.options.max_kernel_size).into_iter().map(Ok).collect(),
        };
    for (k, cand) in candidates.into_iter().enumerate() {
        let cand = match cand {
            Ok(c) => c,
            Err((parts, e)) => {
                report.kernels.push(KernelReport {
                    s: parts.iter().flat_map(|(_, s)| s.iter().map(|w| cfg.coords.format_weight(&w.0))).collect(),
                    parts: part_reports(cfg, &parts),
                    full: false,
                    linear_independent: false,
                    x_dim: 0,
                    loci: Vec::new(),
                    pure_states: Vec::new(),
                    error: Some(e.to_string()),
                });
                errors.push(e);
                continue;
            }
        };
        let mut kr = KernelReport {
            s: cand.weights().iter().map(|w| cfg.coords.format_weight(&w.0)).collect(),
            parts: part_reports(cfg, &cand.parts),
            full: cand.full,
            linear_independent: cand.linear_independent,
            x_dim: cand.x_dim,
            loci: Vec::new(),
            pure_states: Vec::new(),
            error: None,
        };
        if command == Command::Strata {
            match analyze(cfg, &rep, &cand, k as u64) {
                Ok((loci, pure, errs)) => {
                    kr.loci = loci;
                    kr.pure_states = pure;
                    if let Some(e) = errs.first() {
                        kr.error = Some(e.to_string());
                    }
                    errors.extend(errs);
                }
                Err(e) => {
                    kr.error = Some(e.to_string());
                    errors.push(e);
                }
            }
        }
        report.kernels.push(kr);
    }
    Ok(Outcome { report, errors })
}

fn part_reports(cfg: &RunConfig, parts: &[(usize, Vec<WeightVector>)]) -> Vec<PartReport> {
    parts
        .iter()
        .map(|(i, s)| PartReport { component: *i, weights: s.iter().map(|w| cfg.coords.format_weight(&w.0)).collect() })
        .collect()
}

/// Realizations of the components a candidate touches.
pub fn realizations(
    cfg: &RunConfig,
    rep: &RepSpec,
    cand: &KernelCandidate,
) -> Result<BTreeMap<usize, Arc<ModuleRealization>>> {
    cand.parts
        .iter()
        .map(|(i, _)| {
            realize_cached(&cfg.datum, &rep.components[*i].highest_weight, cfg.options.module_dim_cap).map(|r| (*i, r))
        })
        .collect()
}

type Analysis = (Vec<LocusReport>, Vec<PureStateReport>, Vec<Error>);

fn analyze(cfg: &RunConfig, rep: &RepSpec, cand: &KernelCandidate, seed: u64) -> Result<Analysis> {
    let datum = &cfg.datum;
    let reals = realizations(cfg, rep, cand)?;
    let loci = enumerate_momentum_loci(datum, cand);
    let results: Vec<Result<(LocusReport, Option<Error>)>> = loci
        .par_iter()
        .enumerate()
        .map(|(j, locus)| locus_report(cfg, rep, cand, &reals, locus, seed.wrapping_mul(1_000_003).wrapping_add(j as u64)))
        .collect();
    let mut out = Vec::new();
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok((lr, err)) => {
                out.push(lr);
                errors.extend(err);
            }
            Err(e) => errors.push(e),
        }
    }
    let mut pure = Vec::new();
    for (i, s) in &cand.parts {
        for w in s {
            let alg = pure_state_isotropy(datum, &rep.systems[*i], w)?;
            let cls = classify(&restricted_roots(&alg, datum));
            pure.push(PureStateReport {
                component: *i,
                weight: cfg.coords.format_weight(&w.0),
                dim: alg.total_dim,
                name: cls.name,
            });
        }
    }
    Ok((out, pure, errors))
}

fn locus_report(
    cfg: &RunConfig,
    rep: &RepSpec,
    cand: &KernelCandidate,
    reals: &BTreeMap<usize, Arc<ModuleRealization>>,
    locus: &MomentumLocus,
    seed: u64,
) -> Result<(LocusReport, Option<Error>)> {
    let datum = &cfg.datum;
    let coords = &cfg.coords;
    let alg = isotropy_algebra_at(reals, rep, datum, cand, locus)?;
    let rrs = restricted_roots(&alg, datum);
    let cls = classify(&rrs);
    let (stratum_dim, generator_space_dim) = stratum_dimension(datum, &alg);
    let containment = generator_containment(rep, datum, cand, &alg);
    let mut problem = None;
    let float_kernel_dim = if cfg.options.float_check {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = float_kernel_dim(reals, datum, cand, locus, &mut rng)?;
        if d != alg.total_dim {
            problem = Some(Error::Verification(format!(
                "float oracle kernel dimension {d} differs from exact {}",
                alg.total_dim
            )));
        }
        Some(d)
    } else {
        None
    };
    let x = state_point(reals, rep, cand, &locus.magnitudes)?;
    let mut state = BTreeMap::new();
    for (i, idx, t) in &x.entries {
        let w = reals[i].weight_of(*idx);
        let key = if rep.components.len() > 1 {
            format!("{i}:{}", coords.format_weight(&w.0))
        } else {
            coords.format_weight(&w.0)
        };
        state.insert(key, t.to_string());
    }
    let isotropy = IsotropyReport {
        dim: alg.total_dim,
        rank: alg.torus_part.len(),
        roots: cls.roots.clone(),
        name: cls.name.clone(),
        fingerprint: cls.fingerprint.clone(),
        torus_part: alg.torus_part.iter().map(|h| strings(&coords.algebra_from_ambient(h))).collect(),
        root_support: alg
            .root_support
            .iter()
            .map(|(&r, &d)| (coords.format_weight(&datum.positive_roots[r].vector), d))
            .collect(),
        state,
        basis: alg.basis.iter().map(|v| v.iter().map(ToString::to_string).collect()).collect(),
    };
    let report = LocusReport {
        generic: locus.generic,
        partition: locus.partition.iter().map(|b| b.iter().map(|w| coords.format_weight(&w.0)).collect()).collect(),
        wall: locus
            .wall
            .vanishing_roots
            .iter()
            .map(|&r| coords.format_weight(&datum.positive_roots[r].vector))
            .collect(),
        mu: strings(&coords.weight_from_ambient(&locus.mu)),
        magnitudes: locus.magnitudes.iter().map(|(w, r)| (coords.format_weight(&w.0), r.to_string())).collect(),
        isotropy,
        stratum_dim,
        generator_space_dim,
        generator_containment: containment,
        float_kernel_dim,
    };
    Ok((report, problem))
}
