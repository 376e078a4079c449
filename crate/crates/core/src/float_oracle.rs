//! Floating-point cross-check of isotropy dimensions.
//!
//! Independent of the exact solver: it uses every root of 𝔤 (not only those
//! of 𝔤_μ), random magnitudes on the locus, random phases, and counts the
//! kernel of the real linear map `ξ ↦ ξ·x` by SVD.

use crate::error::Result;
use crate::kernels::KernelCandidate;
use crate::lie::RootDatum;
use crate::module::ModuleRealization;
use crate::strata::MomentumLocus;
use nalgebra::DMatrix;
use num_traits::ToPrimitive;
use rand::Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

pub const SVD_TOLERANCE: f64 = 1e-9;

type C = (f64, f64);

/// Random magnitudes on the locus: free per weight at the generic locus,
/// `s_j · b_j(α)` with random block scales otherwise.
fn sample_magnitudes(locus: &MomentumLocus, rng: &mut impl Rng) -> BTreeMap<crate::lie::WeightVector, f64> {
    let mut out = BTreeMap::new();
    for (block, bary) in locus.partition.iter().zip(&locus.barycentric) {
        let scale: f64 = rng.gen_range(0.5..2.0);
        for (w, b) in block.iter().zip(bary) {
            let r = if locus.generic { rng.gen_range(0.5..2.0) } else { scale * b.to_f64().unwrap() };
            out.insert(w.clone(), r);
        }
    }
    out
}

fn apply(m: &crate::sparse::SparseMatrix, v: &[C]) -> Vec<C> {
    (0..m.rows)
        .map(|r| {
            m.row(r).fold((0.0, 0.0), |acc, (c, a)| {
                let a = a.to_f64().unwrap();
                (acc.0 + a * v[c].0, acc.1 + a * v[c].1)
            })
        })
        .collect()
}

/// Kernel dimension of `ξ ↦ ξ·x` over all of 𝔤 at a random point of the
/// locus.
pub fn float_kernel_dim(
    reals: &BTreeMap<usize, Arc<ModuleRealization>>,
    datum: &RootDatum,
    candidate: &KernelCandidate,
    locus: &MomentumLocus,
    rng: &mut impl Rng,
) -> Result<usize> {
    let mags = sample_magnitudes(locus, rng);
    // Per component: the state vector in that module.
    let mut states: Vec<(&Arc<ModuleRealization>, Vec<C>)> = Vec::new();
    for (i, s) in &candidate.parts {
        let real = &reals[i];
        let mut v = vec![(0.0, 0.0); real.dim()];
        for w in s {
            let idx = real.indices_of(w)[0];
            let g = real.gram_entry(idx, idx).to_f64().unwrap();
            let t = (mags[w] / g).sqrt();
            let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            v[idx] = (t * theta.cos(), t * theta.sin());
        }
        states.push((real, v));
    }
    let mut columns: Vec<Vec<f64>> = Vec::new();
    let push = |cols: &mut Vec<Vec<f64>>, parts: Vec<Vec<C>>| {
        cols.push(parts.into_iter().flatten().flat_map(|(a, b)| [a, b]).collect());
    };
    for r in 0..datum.positive_roots.len() {
        let mut re = Vec::new();
        let mut im = Vec::new();
        for (real, v) in &states {
            let (xm, ym) = real.root_pair(r);
            let xv = apply(xm, v);
            let yv = apply(ym, v);
            re.push(xv.iter().zip(&yv).map(|(a, b)| (a.0 - b.0, a.1 - b.1)).collect());
            // i·(a + b)
            im.push(xv.iter().zip(&yv).map(|(a, b)| (-(a.1 + b.1), a.0 + b.0)).collect());
        }
        push(&mut columns, re);
        push(&mut columns, im);
    }
    for h in datum.t_basis() {
        let col = states
            .iter()
            .map(|(real, v)| {
                real.cartan(&h)
                    .iter()
                    .zip(v)
                    .map(|(d, z)| {
                        let d = d.to_f64().unwrap();
                        (-d * z.1, d * z.0)
                    })
                    .collect()
            })
            .collect();
        push(&mut columns, col);
    }
    let ncols = columns.len();
    let nrows = columns.first().map_or(0, Vec::len);
    let m = DMatrix::from_fn(nrows, ncols, |r, c| columns[c][r]);
    let sv = m.svd(false, false).singular_values;
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let rank = sv.iter().filter(|&&s| s > SVD_TOLERANCE * max.max(1.0)).count();
    Ok(ncols - rank)
}
