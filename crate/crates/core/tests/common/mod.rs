//! Strategies, property checks and oracles shared by the integration tests.
#![allow(dead_code)]

use equistrata::config::{parse_config, RunConfig};
use equistrata::float_oracle::float_kernel_dim;
use equistrata::kernels::{
    admissible_candidate, enumerate_kernel_candidates, generator_for, kernel_weights_for_generator, KernelCandidate,
    RepComponentSpec, RepSpec,
};
use equistrata::lie::{CoordinateSystem, GroupSpec, RootDatum, WeightVector, WeylElement};
use equistrata::linalg::{qvec, Q};
use equistrata::module::{realize_module, ModuleRealization};
use equistrata::strata::{apply_generator, enumerate_momentum_loci, isotropy_algebra_at, state_point};
use equistrata::surd::Complex;
use equistrata::weights::{weight_multiplicities, weyl_dimension};
use num_traits::ToPrimitive;
use proptest::prelude::*;
use proptest::sample::Index;
use proptest::test_runner::TestCaseError;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::sync::Arc;

pub const CASES: u32 = 200;
const MAX_DIM: u64 = 40;

pub fn fixture(name: &str) -> RunConfig {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.toml"));
    parse_config(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[derive(Clone, Debug)]
pub struct Case {
    pub ns: Vec<usize>,
    pub dual: Vec<i64>,
}

impl Case {
    pub fn datum(&self) -> RootDatum {
        RootDatum::new(&GroupSpec::su(&self.ns))
    }

    pub fn lambda(&self, d: &RootDatum) -> WeightVector {
        WeightVector(CoordinateSystem::dual(d).weight_to_ambient(d, &qvec(&self.dual)).unwrap())
    }
}

/// SU(n) products with n ≤ 4 and small dominant highest weights.
pub fn small_case() -> impl Strategy<Value = Case> {
    prop::collection::vec(2usize..=4, 1..=2)
        .prop_flat_map(|ns| {
            let rank: usize = ns.iter().map(|n| n - 1).sum();
            (Just(ns), prop::collection::vec(0i64..=2, rank))
        })
        .prop_map(|(ns, dual)| Case { ns, dual })
        .prop_filter("module too large", |c| {
            let d = c.datum();
            weyl_dimension(&d, &c.lambda(&d)).unwrap().to_u64().unwrap() <= MAX_DIM
        })
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, max_global_rejects: 100_000, ..ProptestConfig::default() }
}

pub struct Setup {
    pub d: RootDatum,
    pub rep: RepSpec,
    pub reals: BTreeMap<usize, Arc<ModuleRealization>>,
    pub candidates: Vec<KernelCandidate>,
}

pub fn setup(c: &Case) -> Setup {
    let d = c.datum();
    let l = c.lambda(&d);
    let rep =
        RepSpec::new(&d, vec![RepComponentSpec { highest_weight: l.clone(), eigenvalue: Q::from_integer(1.into()) }])
            .unwrap();
    let reals = [(0, Arc::new(realize_module(&d, &l).unwrap()))].into();
    let candidates = enumerate_kernel_candidates(&rep, &d, 3);
    Setup { d, rep, reals, candidates }
}

type Check = Result<(), TestCaseError>;

/// Σ multiplicities = Weyl dimension.
pub fn check_dimension(c: &Case) -> Check {
    let d = c.datum();
    let l = c.lambda(&d);
    let ws = weight_multiplicities(&d, &l).unwrap();
    prop_assert_eq!(ws.dim() as u64, weyl_dimension(&d, &l).unwrap().to_u64().unwrap());
    Ok(())
}

/// Commutation relations, Gram adjointness and positivity, weight shifts.
pub fn check_module(c: &Case) -> Check {
    let d = c.datum();
    let real = realize_module(&d, &c.lambda(&d)).unwrap();
    prop_assert!(real.check_commutation(&d));
    prop_assert!(real.check_adjointness());
    prop_assert!(real.check_gram_positive());
    prop_assert!(real.check_weight_shifts(&d));
    Ok(())
}

/// Every kernel basis vector annihilates the state point exactly.
pub fn check_annihilation(c: &Case, pick: Index) -> Check {
    let s = setup(c);
    if s.candidates.is_empty() {
        return Ok(());
    }
    let cand = pick.get(&s.candidates);
    for locus in enumerate_momentum_loci(&s.d, cand) {
        let alg = isotropy_algebra_at(&s.reals, &s.rep, &s.d, cand, &locus).unwrap();
        let x = state_point(&s.reals, &s.rep, cand, &locus.magnitudes).unwrap();
        let images: Vec<Vec<Complex>> = alg.generators.iter().map(|g| apply_generator(&s.reals, g, &x)).collect();
        let n = images.first().map_or(0, Vec::len);
        for v in &alg.basis {
            for k in 0..n {
                let mut acc = Complex::default();
                for (coef, img) in v.iter().zip(&images) {
                    acc = acc.add(&img[k].scale(coef));
                }
                prop_assert!(acc.is_zero(), "ξ·x ≠ 0 at entry {}", k);
            }
        }
    }
    Ok(())
}

/// The SVD kernel dimension over all of 𝔤 matches the exact solver.
pub fn check_float_oracle(c: &Case, pick: Index, seed: u64) -> Check {
    let s = setup(c);
    if s.candidates.is_empty() {
        return Ok(());
    }
    let cand = pick.get(&s.candidates);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for locus in enumerate_momentum_loci(&s.d, cand) {
        let exact = isotropy_algebra_at(&s.reals, &s.rep, &s.d, cand, &locus).unwrap().total_dim;
        let float = float_kernel_dim(&s.reals, &s.d, cand, &locus, &mut rng).unwrap();
        prop_assert_eq!(float, exact);
    }
    Ok(())
}

/// Special loci never have smaller isotropy than the generic one.
pub fn check_special_dominates(c: &Case, pick: Index) -> Check {
    let s = setup(c);
    if s.candidates.is_empty() {
        return Ok(());
    }
    let cand = pick.get(&s.candidates);
    let dims: Vec<(bool, usize)> = enumerate_momentum_loci(&s.d, cand)
        .iter()
        .map(|l| (l.generic, isotropy_algebra_at(&s.reals, &s.rep, &s.d, cand, l).unwrap().total_dim))
        .collect();
    if let Some(&(_, gd)) = dims.iter().find(|(g, _)| *g) {
        for (g, dim) in &dims {
            if !g {
                prop_assert!(*dim >= gd, "special {} < generic {}", dim, gd);
            }
        }
    }
    Ok(())
}

/// A generator of a full candidate reproduces exactly its weight set.
pub fn check_round_trip(c: &Case) -> Check {
    let s = setup(c);
    for cand in s.candidates.iter().filter(|k| k.full) {
        let xi = generator_for(&s.rep, &s.d, &cand.parts).expect("full candidate has a generator");
        let back: Vec<(usize, Vec<WeightVector>)> = kernel_weights_for_generator(&s.rep, &s.d, &xi)
            .into_iter()
            .filter(|(_, ws)| !ws.is_empty())
            .collect();
        prop_assert_eq!(&back, &cand.parts);
    }
    Ok(())
}

/// Largest image of `s` over the whole group.
pub fn canonical(d: &RootDatum, group: &[WeylElement], s: &[WeightVector]) -> BTreeSet<WeightVector> {
    group.iter().map(|g| s.iter().map(|w| WeightVector(d.apply(g, &w.0))).collect()).max().unwrap()
}

pub struct DedupOutcome {
    pub group_order: usize,
    pub orbits: BTreeSet<BTreeSet<WeightVector>>,
    pub emitted: Vec<BTreeSet<WeightVector>>,
}

/// Size-2 candidates of the cube rep against a brute-force orbit count.
pub fn cube_dedup() -> DedupOutcome {
    let d = RootDatum::new(&GroupSpec::su(&[2, 2, 2]));
    let l = CoordinateSystem::dual(&d).weight_to_ambient(&d, &qvec(&[1, 1, 1])).unwrap();
    let rep = RepSpec::new(
        &d,
        vec![RepComponentSpec { highest_weight: WeightVector(l), eigenvalue: Q::from_integer(1.into()) }],
    )
    .unwrap();
    let group = d.weyl_group();
    let weights: Vec<WeightVector> = rep.systems[0].entries.keys().cloned().collect();
    let mut orbits = BTreeSet::new();
    for (a, wa) in weights.iter().enumerate() {
        for wb in &weights[a + 1..] {
            let mut pair = vec![wa.clone(), wb.clone()];
            pair.sort_by(|x, y| y.cmp(x));
            if admissible_candidate(&rep, &d, &[(0, pair.clone())]).is_some() {
                orbits.insert(canonical(&d, &group, &pair));
            }
        }
    }
    let emitted = enumerate_kernel_candidates(&rep, &d, 2)
        .into_iter()
        .filter(|c| c.len() == 2)
        .map(|c| canonical(&d, &group, &c.weights()))
        .collect();
    DedupOutcome { group_order: group.len(), orbits, emitted }
}
