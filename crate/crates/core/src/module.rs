//! Exact realization of irreducible highest-weight modules.
//!
//! Each `SU(n)` factor is built weight space by weight space, in order of
//! increasing depth below the highest weight. A weight space is spanned by
//! vectors `F_k b` with `b` a basis vector one simple root higher; their
//! Shapovalov inner products are
//! `⟨F_k b, F_l b'⟩ = ⟨b, E_k F_l b'⟩` and `E_j F_k b = F_k E_j b + δ_jk ⟨ν, α_k⟩ b`,
//! so everything reduces to data already computed one level up. The basis
//! is never orthonormalized; the Gram matrix is carried along.

use crate::error::{Error, Result};
use crate::lie::{RootDatum, WeightVector};
use crate::linalg::{dot, inverse, mat_vec, q, rank, vadd, QVec, Q};
use crate::sparse::SparseMatrix;
use crate::weights::{validate_highest_weight, weight_multiplicities, weyl_dimension};
use num_traits::{ToPrimitive, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

pub const DEFAULT_DIM_CAP: usize = 512;

#[derive(Clone, Debug)]
pub struct ModuleRealization {
    pub highest_weight: WeightVector,
    /// `(weight, index within the weight space)` per basis vector.
    pub basis_labels: Vec<(WeightVector, usize)>,
    /// Shapovalov form, block diagonal by weight.
    pub gram: SparseMatrix,
    /// Raising generators, one per entry of `datum.simple_roots`.
    pub raising: Vec<SparseMatrix>,
    pub lowering: Vec<SparseMatrix>,
    weight_index: BTreeMap<WeightVector, Vec<usize>>,
    /// Root vectors `(X_ρ, Y_ρ)` per positive root of the datum.
    root_vectors: Vec<(SparseMatrix, SparseMatrix)>,
}

impl ModuleRealization {
    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn weight_of(&self, idx: usize) -> &WeightVector {
        &self.basis_labels[idx].0
    }

    /// Basis indices spanning the weight space of `w`.
    pub fn indices_of(&self, w: &WeightVector) -> &[usize] {
        self.weight_index.get(w).map_or(&[], Vec::as_slice)
    }

    /// Diagonal of the action of `h ∈ 𝔱` (ambient coordinates), i.e. the
    /// weights paired with `h`.
    pub fn cartan(&self, h: &[Q]) -> Vec<Q> {
        self.basis_labels.iter().map(|(w, _)| dot(&w.0, h)).collect()
    }

    pub fn gram_entry(&self, i: usize, j: usize) -> Q {
        self.gram.get(i, j)
    }

    /// Raising and lowering matrices for positive root `idx` of the datum.
    pub fn root_pair(&self, idx: usize) -> (&SparseMatrix, &SparseMatrix) {
        let (x, y) = &self.root_vectors[idx];
        (x, y)
    }

    /// Check `[E_i, F_j] = δ_ij H_i`.
    pub fn check_commutation(&self, datum: &RootDatum) -> bool {
        for (a, &ra) in datum.simple_roots.iter().enumerate() {
            let coroot = &datum.positive_roots[ra].vector;
            let h = self.cartan(coroot);
            for b in 0..datum.simple_roots.len() {
                let c = self.raising[a].commutator(&self.lowering[b]);
                let mut expected = SparseMatrix::zeros(self.dim(), self.dim());
                if a == b {
                    for (i, v) in h.iter().enumerate() {
                        expected.set(i, i, v.clone());
                    }
                }
                if c != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Check that each lowering matrix is the Gram adjoint of its raising
    /// matrix: `G F = Eᵀ G`.
    pub fn check_adjointness(&self) -> bool {
        self.raising
            .iter()
            .zip(&self.lowering)
            .all(|(e, f)| self.gram.mul(f) == e.transpose().mul(&self.gram))
    }

    /// Positive definiteness of each weight block of the Gram matrix,
    /// via leading principal minors.
    pub fn check_gram_positive(&self) -> bool {
        self.weight_index.values().all(|idx| {
            let block: Vec<QVec> = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.gram.get(i, j)).collect())
                .collect();
            (1..=block.len()).all(|k| {
                let minor: Vec<QVec> = block[..k].iter().map(|r| r[..k].to_vec()).collect();
                determinant(&minor) > Q::zero()
            })
        })
    }

    /// Each raising (lowering) matrix maps weight `α` into `α ± ρ`.
    pub fn check_weight_shifts(&self, datum: &RootDatum) -> bool {
        datum.simple_roots.iter().enumerate().all(|(a, &r)| {
            let rho = &datum.positive_roots[r].vector;
            let ok = |m: &SparseMatrix, sign: i64| {
                m.entries().all(|(row, col, _)| {
                    self.weight_of(row).0 == vadd(&self.weight_of(col).0, &crate::linalg::vscale(&q(sign), rho))
                })
            };
            ok(&self.raising[a], 1) && ok(&self.lowering[a], -1)
        })
    }
}

fn determinant(m: &[QVec]) -> Q {
    let mut a = m.to_vec();
    let n = a.len();
    let mut det = q(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let pivot = a[c].clone();
        for row in a.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Realization of one `SU(n)` factor in local coordinates.
struct FactorModule {
    weights: Vec<(QVec, usize)>,
    gram: SparseMatrix,
    raising: Vec<SparseMatrix>,
    lowering: Vec<SparseMatrix>,
}

type Block = Vec<QVec>;

fn simple_root(n: usize, k: usize) -> QVec {
    let mut r = vec![Q::zero(); n];
    r[k] = q(1);
    r[k + 1] = q(-1);
    r
}

fn realize_factor(lambda: &[Q]) -> Result<FactorModule> {
    let n = lambda.len();
    let alphas: Vec<QVec> = (0..n - 1).map(|k| simple_root(n, k)).collect();
    // Multiplicities of the factor alone.
    let local = RootDatum::new(&crate::lie::GroupSpec::su(&[n]));
    let ws = weight_multiplicities(&local, &WeightVector(lambda.to_vec()))?;
    let delta = crate::weights::delta(&local);
    let height = |mu: &QVec| dot(&crate::linalg::vsub(lambda, mu), &delta);
    let mut order: Vec<QVec> = ws.entries.keys().map(|w| w.0.clone()).collect();
    order.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| b.cmp(a)));
    let mult = |w: &QVec| ws.mult(&WeightVector(w.clone()));

    let mut gram: HashMap<QVec, Block> = HashMap::new();
    // e[(μ, j)]: E_j restricted to V_μ, shape m_{μ+α_j} × m_μ.
    let mut e: HashMap<(QVec, usize), Block> = HashMap::new();
    // f[(μ, k)]: F_k from V_{μ+α_k} to V_μ, shape m_μ × m_{μ+α_k}.
    let mut f: HashMap<(QVec, usize), Block> = HashMap::new();

    for mu in &order {
        let m = mult(mu);
        if mu.as_slice() == lambda {
            gram.insert(mu.clone(), vec![vec![q(1)]]);
            continue;
        }
        // Candidates F_k b in lexicographic order of (k, b).
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for k in 0..n - 1 {
            let nu = vadd(mu, &alphas[k]);
            for b in 0..mult(&nu) {
                cands.push((k, b));
            }
        }
        // E_j applied to each candidate, as a vector in V_{μ+α_j}.
        let raise = |(k, b): (usize, usize), j: usize| -> Option<QVec> {
            let up = vadd(mu, &alphas[j]);
            let mj = mult(&up);
            if mj == 0 {
                return None;
            }
            let nu = vadd(mu, &alphas[k]);
            let mut out = vec![Q::zero(); mj];
            // F_k (E_j b): E_j b ∈ V_{ν+α_j}, then F_k back to V_{μ+α_j}.
            if let (Some(ej), Some(fk)) = (e.get(&(nu.clone(), j)), f.get(&(up.clone(), k))) {
                let ejb: QVec = ej.iter().map(|row| row[b].clone()).collect();
                out = vadd(&out, &mat_vec(fk, &ejb));
            }
            if j == k {
                out[b] += dot(&nu, &alphas[k]);
            }
            Some(out)
        };
        let raised: Vec<Vec<Option<QVec>>> =
            cands.iter().map(|&c| (0..n - 1).map(|j| raise(c, j)).collect()).collect();
        // Gram between candidates: ⟨F_k b, F_l b'⟩ = (G_ν · E_k c')[b].
        let nc = cands.len();
        let mut full = vec![vec![Q::zero(); nc]; nc];
        for (a, &(k, b)) in cands.iter().enumerate() {
            let nu = vadd(mu, &alphas[k]);
            let g = &gram[&nu];
            for c in 0..nc {
                let ekc = raised[c][k].as_ref().expect("ν is a weight");
                full[a][c] = dot(&g[b], ekc);
            }
        }
        let mut selected: Vec<usize> = Vec::new();
        for c in 0..nc {
            if selected.len() == m {
                break;
            }
            let mut trial = selected.clone();
            trial.push(c);
            let sub: Vec<QVec> =
                trial.iter().map(|&i| trial.iter().map(|&j| full[i][j].clone()).collect()).collect();
            if rank(&sub, trial.len()) == trial.len() {
                selected = trial;
            }
        }
        if selected.len() != m || rank(&full, nc) != m {
            return Err(Error::Verification(format!(
                "weight space {mu:?} spanned with dimension {} but multiplicity {m}",
                selected.len()
            )));
        }
        let g_mu: Block = selected
            .iter()
            .map(|&i| selected.iter().map(|&j| full[i][j].clone()).collect())
            .collect();
        let g_inv = inverse(&g_mu).expect("selected candidates are independent");
        for j in 0..n - 1 {
            let up = vadd(mu, &alphas[j]);
            let mj = mult(&up);
            if mj == 0 {
                continue;
            }
            let cols: Vec<QVec> = selected.iter().map(|&c| raised[c][j].clone().unwrap()).collect();
            let block: Block = (0..mj).map(|r| cols.iter().map(|col| col[r].clone()).collect()).collect();
            e.insert((mu.clone(), j), block);
        }
        for k in 0..n - 1 {
            let nu = vadd(mu, &alphas[k]);
            let mk = mult(&nu);
            if mk == 0 {
                continue;
            }
            // Column b: coordinates of F_k b, i.e. G_μ⁻¹ (⟨s, F_k b⟩)_s.
            let mut block: Block = vec![vec![Q::zero(); mk]; m];
            for b in 0..mk {
                let c = cands.iter().position(|&x| x == (k, b)).unwrap();
                let rhs: QVec = selected.iter().map(|&s| full[s][c].clone()).collect();
                let coords = mat_vec(&g_inv, &rhs);
                for (r, v) in coords.into_iter().enumerate() {
                    block[r][b] = v;
                }
            }
            f.insert((mu.clone(), k), block);
        }
        gram.insert(mu.clone(), g_mu);
    }

    // Assemble global matrices.
    let mut offset: HashMap<QVec, usize> = HashMap::new();
    let mut weights = Vec::new();
    let mut dim = 0;
    for mu in &order {
        offset.insert(mu.clone(), dim);
        for i in 0..mult(mu) {
            weights.push((mu.clone(), i));
        }
        dim += mult(mu);
    }
    let mut g = SparseMatrix::zeros(dim, dim);
    for (mu, block) in &gram {
        let o = offset[mu];
        for (r, row) in block.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                g.set(o + r, o + c, v.clone());
            }
        }
    }
    let place = |map: &HashMap<(QVec, usize), Block>, k: usize, up: bool| {
        let mut out = SparseMatrix::zeros(dim, dim);
        for ((mu, kk), block) in map {
            if *kk != k {
                continue;
            }
            let shifted = vadd(mu, &alphas[k]);
            let (ro, co) = if up { (offset[&shifted], offset[mu]) } else { (offset[mu], offset[&shifted]) };
            for (r, row) in block.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    out.set(ro + r, co + c, v.clone());
                }
            }
        }
        out
    };
    let raising = (0..n - 1).map(|k| place(&e, k, true)).collect();
    let lowering = (0..n - 1).map(|k| place(&f, k, false)).collect();
    Ok(FactorModule { weights, gram: g, raising, lowering })
}

/// Realize the irreducible module with highest weight `lambda` under the
/// default dimension cap.
pub fn realize_module(datum: &RootDatum, lambda: &WeightVector) -> Result<ModuleRealization> {
    realize_module_capped(datum, lambda, DEFAULT_DIM_CAP)
}

pub fn realize_module_capped(
    datum: &RootDatum,
    lambda: &WeightVector,
    cap: usize,
) -> Result<ModuleRealization> {
    validate_highest_weight(datum, lambda)?;
    let dim = weyl_dimension(datum, lambda)?;
    if dim.to_usize().is_none_or(|d| d > cap) {
        return Err(Error::Resource(format!("module dimension {dim} exceeds cap {cap}")));
    }
    // Tensor product of factor realizations; torus blocks are 1-dimensional.
    let mut labels: Vec<QVec> = vec![Vec::new()];
    let mut gram = SparseMatrix::identity(1);
    let mut raising: Vec<SparseMatrix> = Vec::new();
    let mut lowering: Vec<SparseMatrix> = Vec::new();
    for b in &datum.blocks {
        let local = &lambda.0[b.offset..b.offset + b.len];
        let fm = if b.is_su() {
            realize_factor(local)?
        } else {
            FactorModule {
                weights: vec![(local.to_vec(), 0)],
                gram: SparseMatrix::identity(1),
                raising: Vec::new(),
                lowering: Vec::new(),
            }
        };
        let old_dim = gram.rows;
        let new_dim = fm.weights.len();
        let id_new = SparseMatrix::identity(new_dim);
        let id_old = SparseMatrix::identity(old_dim);
        raising = raising.iter().map(|m| m.kron(&id_new)).collect();
        lowering = lowering.iter().map(|m| m.kron(&id_new)).collect();
        raising.extend(fm.raising.iter().map(|m| id_old.kron(m)));
        lowering.extend(fm.lowering.iter().map(|m| id_old.kron(m)));
        gram = gram.kron(&fm.gram);
        labels = labels
            .iter()
            .flat_map(|p| {
                fm.weights.iter().map(move |(w, _)| {
                    let mut v = p.clone();
                    v.extend(w.iter().cloned());
                    v
                })
            })
            .collect();
    }
    let mut counter: BTreeMap<WeightVector, Vec<usize>> = BTreeMap::new();
    let basis_labels: Vec<(WeightVector, usize)> = labels
        .into_iter()
        .enumerate()
        .map(|(i, w)| {
            let w = WeightVector(w);
            let slot = counter.entry(w.clone()).or_default();
            slot.push(i);
            (w, slot.len() - 1)
        })
        .collect();
    let mut real = ModuleRealization {
        highest_weight: lambda.clone(),
        basis_labels,
        gram,
        raising,
        lowering,
        weight_index: counter,
        root_vectors: Vec::new(),
    };
    real.root_vectors = build_root_vectors(&real, datum);
    Ok(real)
}

fn build_root_vectors(real: &ModuleRealization, datum: &RootDatum) -> Vec<(SparseMatrix, SparseMatrix)> {
    // X_{ij} = [X_{i,i+1}, X_{i+1,j}], Y_{ij} = [Y_{i+1,j}, Y_{i,i+1}].
    let simple_pos = |block: usize, i: usize| {
        datum
            .simple_roots
            .iter()
            .position(|&r| datum.positive_roots[r].block == block && datum.positive_roots[r].i == i)
            .expect("simple root exists")
    };
    let mut cache: HashMap<(usize, usize, usize), (SparseMatrix, SparseMatrix)> = HashMap::new();
    let mut ordered: Vec<(usize, usize, usize)> = datum.positive_roots.iter().map(|r| (r.block, r.i, r.j)).collect();
    ordered.sort_by_key(|&(_, i, j)| j - i);
    for (block, i, j) in ordered {
        let s = simple_pos(block, i);
        let pair = if j == i + 1 {
            (real.raising[s].clone(), real.lowering[s].clone())
        } else {
            let (x_rest, y_rest) = &cache[&(block, i + 1, j)];
            (real.raising[s].commutator(x_rest), y_rest.commutator(&real.lowering[s]))
        };
        cache.insert((block, i, j), pair);
    }
    datum
        .positive_roots
        .iter()
        .map(|r| cache.remove(&(r.block, r.i, r.j)).unwrap())
        .collect()
}

/// Matrix of the root vector for `rho` (a root, positive or negative).
pub fn root_vector_matrix(real: &ModuleRealization, datum: &RootDatum, rho: &[Q]) -> Result<SparseMatrix> {
    let (idx, sign) = datum
        .root_index(rho)
        .ok_or_else(|| Error::Input(format!("{rho:?} is not a root")))?;
    let (x, y) = real.root_pair(idx);
    Ok(if sign > 0 { x.clone() } else { y.clone() })
}

type CacheKey = (String, WeightVector, usize);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<ModuleRealization>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<ModuleRealization>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Memoized [`realize_module_capped`].
pub fn realize_cached(datum: &RootDatum, lambda: &WeightVector, cap: usize) -> Result<Arc<ModuleRealization>> {
    let key = (datum.spec.to_string(), lambda.clone(), cap);
    if let Some(hit) = cache().lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let real = Arc::new(realize_module_capped(datum, lambda, cap)?);
    cache().lock().unwrap().insert(key, real.clone());
    Ok(real)
}
