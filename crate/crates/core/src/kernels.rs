//! Admissible kernels of the linearized relative-equilibrium equation.
//!
//! A candidate is a choice of weight subsets `S_i` of the isotypic
//! components `U_i`. Eigenvalues are stored as `c_i / 2π`, so the generator
//! condition `2π α(ξ) = c_i` becomes the rational equation `⟨α, ξ⟩ = c_i`.

use crate::error::{Error, Result};
use crate::lie::{RootDatum, WeightVector};
use crate::linalg::{affinely_independent, dot, in_span, nullspace, q, rank, row_basis, solve, vadd, vscale, vsub, QVec, Q};
use crate::weights::{weight_multiplicities, WeightSystem};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepComponentSpec {
    pub highest_weight: WeightVector,
    /// `c_i / 2π`.
    pub eigenvalue: Q,
}

/// The isotypic data `(λ_i, c_i)` together with the weight systems.
#[derive(Clone, Debug)]
pub struct RepSpec {
    pub components: Vec<RepComponentSpec>,
    pub systems: Vec<WeightSystem>,
}

impl RepSpec {
    pub fn new(datum: &RootDatum, components: Vec<RepComponentSpec>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for c in &components {
            if !seen.insert(c.eigenvalue.clone()) {
                return Err(Error::Input(format!(
                    "eigenvalue {} repeated; (GC) requires distinct eigenvalues per component",
                    c.eigenvalue
                )));
            }
        }
        let systems = components
            .iter()
            .map(|c| weight_multiplicities(datum, &c.highest_weight))
            .collect::<Result<_>>()?;
        Ok(RepSpec { components, systems })
    }
}

/// Per-component weight sets `(component, S_i)`.
pub type Parts = Vec<(usize, Vec<WeightVector>)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelCandidate {
    /// Nonempty parts `(component, S_i)`, weights sorted descending.
    pub parts: Vec<(usize, Vec<WeightVector>)>,
    /// Basis of `W`, the sum of the direction spaces of the `aff(S_i)`.
    pub span_w: Vec<QVec>,
    pub x_dim: i64,
    pub full: bool,
    pub linear_independent: bool,
}

impl KernelCandidate {
    pub fn weights(&self) -> Vec<WeightVector> {
        self.parts.iter().flat_map(|(_, s)| s.iter().cloned()).collect()
    }

    pub fn len(&self) -> usize {
        self.parts.iter().map(|(_, s)| s.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn direction_space(parts: &[(usize, Vec<WeightVector>)], dim: usize) -> Vec<QVec> {
    let diffs: Vec<QVec> = parts
        .iter()
        .flat_map(|(_, s)| s.iter().skip(1).map(move |w| vsub(&w.0, &s[0].0)))
        .collect();
    row_basis(&diffs, dim)
}

/// Weights `α` of each component with `⟨α, ξ⟩ = c_i`.
pub fn kernel_weights_for_generator(
    rep: &RepSpec,
    datum: &RootDatum,
    xi: &[Q],
) -> Vec<(usize, Vec<WeightVector>)> {
    debug_assert!(datum.in_t(xi));
    rep.components
        .iter()
        .zip(&rep.systems)
        .enumerate()
        .map(|(i, (c, ws))| {
            let mut hits: Vec<WeightVector> =
                ws.entries.keys().filter(|w| dot(&w.0, xi) == c.eigenvalue).cloned().collect();
            hits.sort_by(|a, b| b.cmp(a));
            (i, hits)
        })
        .collect()
}

/// Fullness of the parts and `dim ann(W) − n`.
pub fn is_full(datum: &RootDatum, parts: &[(usize, Vec<WeightVector>)]) -> (bool, i64) {
    let parts: Vec<_> = parts.iter().filter(|(_, s)| !s.is_empty()).cloned().collect();
    let w = direction_space(&parts, datum.ambient_dim);
    let ann = datum.t_kernel(&w);
    // s : ann(W) → ℝⁿ, one row per part.
    let rows: Vec<QVec> = parts
        .iter()
        .map(|(_, s)| ann.iter().map(|b| dot(&s[0].0, b)).collect())
        .collect();
    let n = parts.len();
    let full = rank(&rows, ann.len()) == n;
    (full, ann.len() as i64 - n as i64)
}

/// Whether a wall reflection maps one member of `s` to a different member.
pub fn has_weyl_reflection_pair(datum: &RootDatum, s: &[WeightVector]) -> bool {
    let members: BTreeSet<&QVec> = s.iter().map(|w| &w.0).collect();
    (0..datum.positive_roots.len()).any(|r| {
        s.iter().any(|w| {
            let image = datum.reflect(&w.0, r);
            image != w.0 && members.contains(&image)
        })
    })
}

/// Some `ξ ∈ 𝔱` solving `⟨α, ξ⟩ = c_i` on every part, chosen so that no
/// weight outside the candidate satisfies its component's equation.
pub fn generator_for(rep: &RepSpec, datum: &RootDatum, parts: &[(usize, Vec<WeightVector>)]) -> Option<QVec> {
    let n = datum.ambient_dim;
    let mut rows = datum.t_constraints();
    let mut rhs = vec![q(0); rows.len()];
    for (i, s) in parts {
        for w in s {
            rows.push(w.0.clone());
            rhs.push(rep.components[*i].eigenvalue.clone());
        }
    }
    let base = solve(&rows, &rhs, n)?;
    let free = nullspace(&rows, n);
    let target: BTreeMap<usize, BTreeSet<&WeightVector>> =
        parts.iter().map(|(i, s)| (*i, s.iter().collect())).collect();
    let exact = |xi: &QVec| {
        kernel_weights_for_generator(rep, datum, xi).iter().all(|(i, hits)| {
            let want = target.get(i).cloned().unwrap_or_default();
            hits.iter().collect::<BTreeSet<_>>() == want
        })
    };
    // Points ξ₀ + Σ t^k f_k on a moment curve avoid any finite set of
    // proper affine hyperplanes for all but finitely many t.
    let bad_bound = rep.systems.iter().map(|ws| ws.entries.len()).sum::<usize>() * free.len().max(1) + 1;
    for t in 0..=bad_bound as i64 {
        let mut xi = base.clone();
        let mut power = q(1);
        for f in &free {
            power *= q(t + 1);
            xi = vadd(&xi, &vscale(&power, f));
        }
        if exact(&xi) {
            return Some(xi);
        }
        if free.is_empty() {
            break;
        }
    }
    None
}

/// Canonical representative of the Weyl orbit of a labelled weight set:
/// the lexicographically largest sorted image.
fn canonical(datum: &RootDatum, items: &[(usize, WeightVector)], group: &[crate::lie::WeylElement]) -> Vec<(usize, WeightVector)> {
    group
        .iter()
        .map(|w| {
            let mut img: Vec<(usize, WeightVector)> =
                items.iter().map(|(i, v)| (*i, WeightVector(datum.apply(w, &v.0)))).collect();
            img.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
            img
        })
        .max_by(|a, b| {
            let ka: Vec<_> = a.iter().map(|(i, w)| (&w.0, std::cmp::Reverse(*i))).collect();
            let kb: Vec<_> = b.iter().map(|(i, w)| (&w.0, std::cmp::Reverse(*i))).collect();
            ka.cmp(&kb)
        })
        .expect("Weyl group is nonempty")
}

fn group_parts(items: &[(usize, WeightVector)]) -> Vec<(usize, Vec<WeightVector>)> {
    let mut map: BTreeMap<usize, Vec<WeightVector>> = BTreeMap::new();
    for (i, w) in items {
        map.entry(*i).or_default().push(w.clone());
    }
    map.into_iter()
        .map(|(i, mut s)| {
            s.sort_by(|a, b| b.cmp(a));
            (i, s)
        })
        .collect()
}

/// Check every admissibility condition except the orbit bookkeeping and
/// build the candidate record.
pub fn admissible_candidate(
    rep: &RepSpec,
    datum: &RootDatum,
    parts: &[(usize, Vec<WeightVector>)],
) -> Option<KernelCandidate> {
    let all: Vec<QVec> = parts.iter().flat_map(|(_, s)| s.iter().map(|w| w.0.clone())).collect();
    if all.is_empty() || !affinely_independent(&all, datum.ambient_dim) {
        return None;
    }
    let dim = datum.ambient_dim;
    let w = direction_space(parts, dim);
    for (i, s) in parts {
        let ws = &rep.systems[*i];
        if s.iter().any(|a| ws.mult(a) != 1) || has_weyl_reflection_pair(datum, s) {
            return None;
        }
        // Maximality in aff(S_i) + W.
        let members: BTreeSet<&WeightVector> = s.iter().collect();
        for beta in ws.entries.keys() {
            if !members.contains(beta) && in_span(&w, &vsub(&beta.0, &s[0].0), dim) {
                return None;
            }
        }
    }
    let (full, x_dim) = is_full(datum, parts);
    if full && generator_for(rep, datum, parts).is_none() {
        return None;
    }
    let linear_independent = rank(&all, dim) == all.len();
    Some(KernelCandidate { parts: parts.to_vec(), span_w: w, x_dim, full, linear_independent })
}

/// All admissible candidates with `|⋃S_i| ≤ max_size`, one per Weyl orbit.
pub fn enumerate_kernel_candidates(rep: &RepSpec, datum: &RootDatum, max_size: usize) -> Vec<KernelCandidate> {
    let group = datum.weyl_group();
    let items: Vec<(usize, WeightVector)> = rep
        .systems
        .iter()
        .enumerate()
        .flat_map(|(i, ws)| {
            ws.entries.iter().filter(|(_, &m)| m == 1).map(move |(w, _)| (i, w.clone()))
        })
        .collect();
    let max_size = max_size.min(datum.ambient_dim + 1);
    // Every orbit class has a member containing a dominant weight; seed the
    // search there.
    let seeds: Vec<usize> = (0..items.len()).filter(|&k| datum.is_dominant(&items[k].1 .0)).collect();
    let found: BTreeSet<Vec<(usize, WeightVector)>> = seeds
        .par_iter()
        .map(|&seed| {
            let mut keys = BTreeSet::new();
            let mut chosen = vec![seed];
            extend(datum, &items, &group, max_size, &mut chosen, 0, &mut keys);
            keys
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    let mut out: Vec<(Vec<(usize, WeightVector)>, KernelCandidate)> = found
        .into_iter()
        .filter_map(|key| {
            let parts = group_parts(&key);
            admissible_candidate(rep, datum, &parts).map(|c| (key, c))
        })
        .collect();
    out.sort_by(|(a, _), (b, _)| {
        a.len().cmp(&b.len()).then_with(|| {
            let ka: Vec<_> = a.iter().map(|(i, w)| (std::cmp::Reverse(&w.0), *i)).collect();
            let kb: Vec<_> = b.iter().map(|(i, w)| (std::cmp::Reverse(&w.0), *i)).collect();
            ka.cmp(&kb)
        })
    });
    out.into_iter().map(|(_, c)| c).collect()
}

fn extend(
    datum: &RootDatum,
    items: &[(usize, WeightVector)],
    group: &[crate::lie::WeylElement],
    max_size: usize,
    chosen: &mut Vec<usize>,
    start: usize,
    keys: &mut BTreeSet<Vec<(usize, WeightVector)>>,
) {
    let set: Vec<(usize, WeightVector)> = chosen.iter().map(|&k| items[k].clone()).collect();
    keys.insert(canonical(datum, &set, group));
    if chosen.len() == max_size {
        return;
    }
    for k in start..items.len() {
        if chosen.contains(&k) {
            continue;
        }
        // Keep sets with the seed as first element unique: other dominant
        // members must come later in item order than the seed.
        if k < chosen[0] && datum.is_dominant(&items[k].1 .0) {
            continue;
        }
        let mut pts: Vec<QVec> = set.iter().map(|(_, w)| w.0.clone()).collect();
        pts.push(items[k].1 .0.clone());
        if !affinely_independent(&pts, datum.ambient_dim) {
            continue;
        }
        chosen.push(k);
        extend(datum, items, group, max_size, chosen, k + 1, keys);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{CoordinateSystem, GroupSpec};
    use crate::linalg::{qr, qvec};

    fn rep(ns: &[usize], dual: &[i64], c: Q) -> (RootDatum, CoordinateSystem, RepSpec) {
        let d = RootDatum::new(&GroupSpec::su(ns));
        let cs = CoordinateSystem::dual(&d);
        let l = WeightVector(cs.weight_to_ambient(&d, &qvec(dual)).unwrap());
        let r = RepSpec::new(&d, vec![RepComponentSpec { highest_weight: l, eigenvalue: c }]).unwrap();
        (d, cs, r)
    }

    fn w(d: &RootDatum, cs: &CoordinateSystem, xs: &[i64]) -> WeightVector {
        WeightVector(cs.weight_to_ambient(d, &qvec(xs)).unwrap())
    }

    #[test]
    fn generator_zero_hits_nothing() {
        let (d, _, r) = rep(&[2, 2, 2], &[1, 1, 1], q(1));
        let hits = kernel_weights_for_generator(&r, &d, &vec![q(0); 6]);
        assert!(hits.iter().all(|(_, s)| s.is_empty()));
    }

    #[test]
    fn cube_generator_weights() {
        let (d, cs, r) = rep(&[2, 2, 2], &[1, 1, 1], q(1));
        let xi = cs.algebra_to_ambient(&d, &qvec(&[1, 1, -1])).unwrap();
        let hits = &kernel_weights_for_generator(&r, &d, &xi)[0].1;
        let got: BTreeSet<QVec> = hits.iter().map(|h| cs.weight_from_ambient(&h.0)).collect();
        // ξ = H₁ + H₂ − H₃ pairs with a sign vector as a₁ + a₂ − a₃.
        let brute: BTreeSet<QVec> = r.systems[0]
            .entries
            .keys()
            .map(|k| cs.weight_from_ambient(&k.0))
            .filter(|a| &a[0] + &a[1] - &a[2] == q(1))
            .collect();
        assert_eq!(got, brute);
        assert_eq!(got, [qvec(&[1, 1, 1]), qvec(&[1, -1, -1]), qvec(&[-1, 1, -1])].into());
    }

    #[test]
    fn fullness_examples() {
        let (d, cs, _) = rep(&[2, 2, 2], &[1, 1, 1], q(1));
        let a = w(&d, &cs, &[1, 1, -1]);
        assert_eq!(is_full(&d, &[(0, vec![a.clone()])]), (true, 2));
        let neg = WeightVector(vscale(&q(-1), &a.0));
        assert!(!is_full(&d, &[(0, vec![a.clone()]), (1, vec![neg.clone()])]).0);
        assert!(!is_full(&d, &[(0, vec![a, neg])]).0);
        // 𝔱* = ℝ²: SU(2)×SU(2) with weights (1,0), (0,1).
        let d2 = RootDatum::new(&GroupSpec::su(&[2, 2]));
        let cs2 = CoordinateSystem::dual(&d2);
        let e1 = w(&d2, &cs2, &[1, 0]);
        let e2 = w(&d2, &cs2, &[0, 1]);
        assert_eq!(is_full(&d2, &[(0, vec![e1, e2])]), (true, 0));
    }

    #[test]
    fn reflection_pairs() {
        let (d, cs, _) = rep(&[2], &[1], q(1));
        assert!(has_weyl_reflection_pair(&d, &[w(&d, &cs, &[1]), w(&d, &cs, &[-1])]));
        let (d, cs, _) = rep(&[2, 2, 2], &[1, 1, 1], q(1));
        assert!(!has_weyl_reflection_pair(&d, &[w(&d, &cs, &[1, 1, -1]), w(&d, &cs, &[1, -1, 1])]));
        let d6 = RootDatum::new(&GroupSpec::su(&[6]));
        let s: Vec<WeightVector> = [[1, -1, 0, 0, 0, 0], [0, 0, 1, -1, 0, 0], [0, 0, 0, 0, 1, -1]]
            .iter()
            .map(|v| WeightVector(qvec(v)))
            .collect();
        assert!(!has_weyl_reflection_pair(&d6, &s));
    }

    #[test]
    fn cube_candidate_is_emitted() {
        let (d, cs, r) = rep(&[2, 2, 2], &[1, 1, 1], q(1));
        let cands = enumerate_kernel_candidates(&r, &d, 4);
        let target: BTreeSet<WeightVector> = [w(&d, &cs, &[1, 1, -1]), w(&d, &cs, &[1, -1, 1])].into();
        let hit = cands.iter().any(|c| {
            let ws: BTreeSet<WeightVector> = c.weights().into_iter().collect();
            d.weyl_group().iter().any(|g| {
                ws.iter().map(|x| WeightVector(d.apply(g, &x.0))).collect::<BTreeSet<_>>() == target
            })
        });
        assert!(hit);
        for c in &cands {
            if c.linear_independent {
                assert!(c.full);
            }
        }
    }

    #[test]
    fn singletons_one_per_orbit() {
        let (d, _, r) = rep(&[3], &[2, 0], q(1));
        let cands = enumerate_kernel_candidates(&r, &d, 1);
        // Orbits of (2,0): the 3 vertices and the 3 edge midpoints.
        assert_eq!(cands.len(), 2);
    }

    #[test]
    fn antipodal_pair_is_emitted_but_not_full() {
        let d = RootDatum::new(&GroupSpec::su(&[4]));
        let a = WeightVector(vec![qr(1, 2), qr(1, 2), qr(-1, 2), qr(-1, 2)]);
        let r = RepSpec::new(&d, vec![RepComponentSpec { highest_weight: a.clone(), eigenvalue: q(1) }]).unwrap();
        let cands = enumerate_kernel_candidates(&r, &d, 2);
        let neg = WeightVector(vscale(&q(-1), &a.0));
        let c = cands.iter().find(|c| c.weights() == vec![a.clone(), neg.clone()]).expect("antipodal candidate");
        assert!(!c.full && !c.linear_independent);
    }

    #[test]
    fn duplicate_eigenvalues_rejected() {
        let d = RootDatum::new(&GroupSpec::su(&[2]));
        let l = WeightVector(vec![qr(1, 2), qr(-1, 2)]);
        let c = RepComponentSpec { highest_weight: l, eigenvalue: q(1) };
        assert!(RepSpec::new(&d, vec![c.clone(), c]).is_err());
    }
}
