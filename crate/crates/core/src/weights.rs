//! Weight systems of irreducible representations.

use crate::error::{Error, Result};
use crate::lie::{RootDatum, WeightVector};
use crate::linalg::{dot, q, vadd, vscale, vsub, QVec, Q};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Weights of a representation with their multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightSystem {
    pub entries: BTreeMap<WeightVector, usize>,
}

impl WeightSystem {
    pub fn dim(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn mult(&self, w: &WeightVector) -> usize {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn contains(&self, w: &[Q]) -> bool {
        self.entries.contains_key(&WeightVector(w.to_vec()))
    }
}

pub(crate) fn validate_highest_weight(datum: &RootDatum, lambda: &WeightVector) -> Result<()> {
    if !datum.is_integral(&lambda.0) {
        return Err(Error::Input(format!("highest weight {:?} is not integral", lambda.0)));
    }
    if !datum.is_dominant(&lambda.0) {
        return Err(Error::Input("highest weight is not dominant".into()));
    }
    Ok(())
}

/// Half-sum of the positive roots.
pub fn delta(datum: &RootDatum) -> QVec {
    let mut d = vec![Q::zero(); datum.ambient_dim];
    for r in &datum.positive_roots {
        d = vadd(&d, &r.vector);
    }
    vscale(&Q::new(1.into(), 2.into()), &d)
}

/// Weights of one `SU(n)` block: vectors `μ` with `λ − μ` integral and
/// `sorted(μ)` majorized by `λ`.
fn block_support(lambda: &[Q]) -> Vec<QVec> {
    let n = lambda.len();
    let top = lambda[0].clone();
    let range = (&lambda[0] - &lambda[n - 1]).to_integer().to_i64().unwrap_or(0);
    // μ_i = top − k_i with Σ k_i = n·top.
    let total = (&top * q(n as i64)).to_integer().to_i64().unwrap_or(0);
    let mut out = Vec::new();
    let mut ks = Vec::with_capacity(n);
    fn rec(n: usize, range: i64, left: i64, ks: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if ks.len() == n {
            if left == 0 {
                out.push(ks.clone());
            }
            return;
        }
        let slots = (n - ks.len()) as i64;
        for k in 0..=range {
            let rest = left - k;
            if rest < 0 || rest > (slots - 1) * range {
                continue;
            }
            ks.push(k);
            rec(n, range, rest, ks, out);
            ks.pop();
        }
    }
    let mut raw = Vec::new();
    rec(n, range, total, &mut ks, &mut raw);
    let lambda_partial: Vec<Q> = partial_sums(lambda);
    for k in raw {
        let mu: QVec = k.iter().map(|&ki| &top - q(ki)).collect();
        let mut sorted = mu.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        if partial_sums(&sorted).iter().zip(&lambda_partial).all(|(s, l)| s <= l) {
            out.push(mu);
        }
    }
    out
}

fn partial_sums(xs: &[Q]) -> Vec<Q> {
    let mut acc = Q::zero();
    xs.iter()
        .map(|x| {
            acc += x;
            acc.clone()
        })
        .collect()
}

/// Freudenthal multiplicities for one `SU(n)` block.
fn block_multiplicities(lambda: &[Q]) -> BTreeMap<QVec, usize> {
    let n = lambda.len();
    let roots: Vec<QVec> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut r = vec![Q::zero(); n];
            r[i] = q(1);
            r[j] = q(-1);
            r
        })
        .collect();
    let delta: QVec = (0..n)
        .map(|i| Q::new(BigInt::from(n as i64 - 1 - 2 * i as i64), 2.into()))
        .collect();
    let mut support = block_support(lambda);
    let height = |mu: &QVec| dot(&vsub(lambda, mu), &delta);
    support.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    let ld = vadd(lambda, &delta);
    let norm_ld = dot(&ld, &ld);
    let mut mult: BTreeMap<QVec, usize> = BTreeMap::new();
    for mu in support {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut num = Q::zero();
        for r in &roots {
            let mut k = 1;
            loop {
                let shifted = vadd(&mu, &vscale(&q(k), r));
                let Some(&m) = mult.get(&shifted) else { break };
                num += q(m as i64) * dot(&shifted, r);
                k += 1;
            }
        }
        let md = vadd(&mu, &delta);
        let den = &norm_ld - dot(&md, &md);
        let m = (q(2) * num / den).to_integer().to_usize().unwrap_or(0);
        mult.insert(mu, m);
    }
    mult.retain(|_, m| *m > 0);
    mult
}

pub fn weight_support(datum: &RootDatum, lambda: &WeightVector) -> Result<BTreeSet<WeightVector>> {
    Ok(weight_multiplicities(datum, lambda)?.entries.into_keys().collect())
}

pub fn weight_multiplicities(datum: &RootDatum, lambda: &WeightVector) -> Result<WeightSystem> {
    validate_highest_weight(datum, lambda)?;
    let mut acc: Vec<(QVec, usize)> = vec![(Vec::new(), 1)];
    for b in &datum.blocks {
        let local = &lambda.0[b.offset..b.offset + b.len];
        let factor: Vec<(QVec, usize)> = if b.is_su() {
            block_multiplicities(local).into_iter().collect()
        } else {
            vec![(local.to_vec(), 1)]
        };
        acc = acc
            .into_iter()
            .flat_map(|(prefix, m)| {
                factor.iter().map(move |(w, fm)| {
                    let mut v = prefix.clone();
                    v.extend(w.iter().cloned());
                    (v, m * fm)
                })
            })
            .collect();
    }
    Ok(WeightSystem {
        entries: acc.into_iter().map(|(w, m)| (WeightVector(w), m)).collect(),
    })
}

/// Weyl's dimension formula.
pub fn weyl_dimension(datum: &RootDatum, lambda: &WeightVector) -> Result<BigInt> {
    validate_highest_weight(datum, lambda)?;
    let d = delta(datum);
    let ld = vadd(&lambda.0, &d);
    let mut value = q(1);
    for r in &datum.positive_roots {
        value *= dot(&ld, &r.vector) / dot(&d, &r.vector);
    }
    debug_assert!(value.is_integer() && value.is_positive());
    Ok(value.to_integer())
}
