//! Isomorphism type of an isotropy algebra from its restricted roots.

use crate::lie::{format_tuple, RootDatum};
use crate::linalg::{dot, inverse, mat_vec, nullspace, q, rank, QVec, Q, Field};
use crate::strata::{restriction_key, Generator, IsotropyAlgebra};
use crate::surd::{Complex, Surd};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Element of 𝔤 as a block-diagonal complex matrix in ambient coordinates.
pub type AmbientMatrix = Vec<Vec<Complex>>;

fn zero_matrix(n: usize) -> AmbientMatrix {
    vec![vec![Complex::default(); n]; n]
}

fn real(x: Q) -> Complex {
    Complex::new(Surd::rational(x), Surd::default())
}

fn imag(x: Q) -> Complex {
    Complex::new(Surd::default(), Surd::rational(x))
}

/// Ambient matrix of a real generator: `E_ij − E_ji`, `i(E_ij + E_ji)` or
/// `i·diag(h)`.
pub fn generator_matrix(datum: &RootDatum, g: &Generator) -> AmbientMatrix {
    let n = datum.ambient_dim;
    let mut m = zero_matrix(n);
    match g {
        Generator::Real(r) | Generator::Imag(r) => {
            let root = &datum.positive_roots[*r];
            let o = datum.blocks[root.block].offset;
            let (i, j) = (o + root.i, o + root.j);
            if matches!(g, Generator::Real(_)) {
                m[i][j] = real(q(1));
                m[j][i] = real(q(-1));
            } else {
                m[i][j] = imag(q(1));
                m[j][i] = imag(q(1));
            }
        }
        Generator::Torus(h) => {
            for (k, x) in h.iter().enumerate() {
                m[k][k] = imag(x.clone());
            }
        }
    }
    m
}

/// `Σ c_k Z_k` for a kernel vector.
pub fn element(datum: &RootDatum, gens: &[Generator], coeffs: &[Surd]) -> AmbientMatrix {
    let n = datum.ambient_dim;
    let mut m = zero_matrix(n);
    for (g, c) in gens.iter().zip(coeffs) {
        if c.is_nil() {
            continue;
        }
        let gm = generator_matrix(datum, g);
        for (row, grow) in m.iter_mut().zip(&gm) {
            for (x, y) in row.iter_mut().zip(grow) {
                if !y.is_zero() {
                    *x = x.add(&y.scale(c));
                }
            }
        }
    }
    m
}

pub fn bracket(a: &AmbientMatrix, b: &AmbientMatrix) -> AmbientMatrix {
    let n = a.len();
    let mut out = zero_matrix(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex::default();
            for k in 0..n {
                if !a[i][k].is_zero() && !b[k][j].is_zero() {
                    acc = acc.add(&a[i][k].mul(&b[k][j]));
                }
                if !b[i][k].is_zero() && !a[k][j].is_zero() {
                    acc = acc.sub(&b[i][k].mul(&a[k][j]));
                }
            }
            out[i][j] = acc;
        }
    }
    out
}

fn flatten(m: &AmbientMatrix) -> Vec<Surd> {
    m.iter().flat_map(|row| row.iter().flat_map(|z| [z.re.clone(), z.im.clone()])).collect()
}

/// Dimension of the centralizer of 𝔱ₓ in 𝔤ₓ.
pub fn centralizer_of_torus_dim(algebra: &IsotropyAlgebra, datum: &RootDatum) -> usize {
    let elems: Vec<AmbientMatrix> =
        algebra.basis.iter().map(|v| element(datum, &algebra.generators, v)).collect();
    let hs: Vec<AmbientMatrix> =
        algebra.torus_part.iter().map(|h| generator_matrix(datum, &Generator::Torus(h.clone()))).collect();
    // Column k: ([h, e_k])_h flattened.
    let cols: Vec<Vec<Surd>> =
        elems.iter().map(|e| hs.iter().flat_map(|h| flatten(&bracket(h, e))).collect()).collect();
    let nrows = cols.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Surd>> = (0..nrows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect::<Vec<_>>())
        .filter(|row| row.iter().any(|x| !x.is_nil()))
        .collect();
    nullspace(&rows, elems.len()).len()
}

/// Whether the span of the kernel basis is closed under the bracket.
pub fn is_subalgebra(algebra: &IsotropyAlgebra, datum: &RootDatum) -> bool {
    let elems: Vec<AmbientMatrix> =
        algebra.basis.iter().map(|v| element(datum, &algebra.generators, v)).collect();
    let flat: Vec<Vec<Surd>> = elems.iter().map(flatten).collect();
    let width = flat.first().map_or(0, Vec::len);
    let r = rank(&flat, width);
    for a in 0..elems.len() {
        for b in a + 1..elems.len() {
            let mut rows = flat.clone();
            rows.push(flatten(&bracket(&elems[a], &elems[b])));
            if rank(&rows, width) != r {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedRootSystem {
    pub cartan_dim: usize,
    /// Nonzero restricted roots (both signs) with multiplicities, in
    /// coordinates `f_k = f(b_k)` for the basis `b_k` of 𝔱ₓ.
    pub roots: Vec<(QVec, usize)>,
    pub abelian_dim: usize,
    /// Inverse Gram matrix of the 𝔱ₓ basis; pairs functionals.
    pub form: Vec<QVec>,
    /// Kernel dimension carried by roots restricting to zero.
    pub zero_part: usize,
    pub cartan_verified: bool,
}

impl RestrictedRootSystem {
    pub fn pair(&self, f: &[Q], g: &[Q]) -> Q {
        dot(f, &mat_vec(&self.form, g))
    }

    pub fn total_dim(&self) -> usize {
        self.cartan_dim + self.roots.iter().map(|(_, m)| m).sum::<usize>()
    }
}

pub fn restricted_roots(algebra: &IsotropyAlgebra, datum: &RootDatum) -> RestrictedRootSystem {
    let cartan = &algebra.torus_part;
    let mut groups: BTreeMap<QVec, usize> = BTreeMap::new();
    let mut zero_part = 0;
    for (&r, &dim) in &algebra.root_support {
        if dim == 0 {
            continue;
        }
        let key = restriction_key(&datum.positive_roots[r].vector, cartan);
        if key.iter().all(Zero::is_zero) {
            zero_part += dim;
        } else {
            *groups.entry(key).or_default() += dim;
        }
    }
    let odd = groups.values().any(|d| d % 2 == 1);
    let mut roots = Vec::new();
    for (key, dim) in &groups {
        roots.push((key.clone(), dim / 2));
        roots.push((key.iter().map(|x| -x).collect(), dim / 2));
    }
    roots.sort();
    let keys: Vec<QVec> = groups.keys().cloned().collect();
    let abelian_dim = cartan.len() - rank(&keys, cartan.len());
    let gram: Vec<QVec> = cartan.iter().map(|u| cartan.iter().map(|v| dot(u, v)).collect()).collect();
    let form = if cartan.is_empty() { Vec::new() } else { inverse(&gram).expect("basis of 𝔱ₓ") };
    let cartan_verified =
        zero_part == 0 && !odd && centralizer_of_torus_dim(algebra, datum) == cartan.len();
    RestrictedRootSystem { cartan_dim: cartan.len(), roots, abelian_dim, form, zero_part, cartan_verified }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    /// Restricted roots in 𝔱ₓ-basis coordinates.
    pub roots: Vec<String>,
    pub fingerprint: String,
    pub cartan_verified: bool,
}

fn abelian_name(k: usize) -> Option<String> {
    match k {
        0 => None,
        1 => Some("ℝ".into()),
        k => Some(format!("ℝ^{k}")),
    }
}

/// Simple-component type from its Cartan matrix.
fn cartan_type(cm: &[Vec<i64>]) -> Option<(String, String)> {
    let r = cm.len();
    let edges: Vec<(usize, usize, i64)> = (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
        .filter(|&(i, j)| cm[i][j] != 0)
        .map(|(i, j)| (i, j, cm[i][j] * cm[j][i]))
        .collect();
    let degrees: Vec<usize> = (0..r).map(|i| edges.iter().filter(|e| e.0 == i || e.1 == i).count()).collect();
    let path = edges.len() + 1 == r && degrees.iter().all(|&d| d <= 2);
    if !path {
        return None;
    }
    let laced: Vec<i64> = edges.iter().map(|e| e.2).collect();
    if laced.iter().all(|&p| p == 1) {
        return Some((format!("A{r}"), format!("su({})", r + 1)));
    }
    match (r, laced.as_slice()) {
        (2, [2]) => Some(("B2".into(), "so(5)".into())),
        (3, _) if laced.iter().filter(|&&p| p == 2).count() == 1 && laced.iter().all(|&p| p <= 2) => {
            // Short simple roots: those i with A_ji = −2 for a neighbour j.
            let short = (0..r).filter(|&i| (0..r).any(|j| cm[j][i] == -2)).count();
            if short == 1 {
                Some(("B3".into(), "so(7)".into()))
            } else {
                Some(("C3".into(), "sp(3)".into()))
            }
        }
        _ => None,
    }
}

pub fn classify(rrs: &RestrictedRootSystem) -> Classification {
    let dim = rrs.total_dim();
    let rank_ = rrs.cartan_dim;
    let roots: Vec<String> = rrs.roots.iter().map(|(f, _)| format_tuple(f)).collect();
    let base = format!("dim {dim}, rank {rank_}, roots {}", rrs.roots.len());
    let unclassified = |extra: &str| Classification {
        name: format!("unclassified({base}{extra})"),
        dim,
        rank: rank_,
        roots: roots.clone(),
        fingerprint: format!("{base}{extra}"),
        cartan_verified: rrs.cartan_verified,
    };
    if !rrs.cartan_verified {
        return unclassified(", cartan unverified");
    }
    let set: BTreeSet<&QVec> = rrs.roots.iter().map(|(f, _)| f).collect();
    if rrs.roots.iter().any(|(f, _)| set.contains(&f.iter().map(|x| x * q(2)).collect::<QVec>())) {
        return unclassified(", non-reduced");
    }
    if rrs.roots.iter().any(|(_, m)| *m != 1) {
        return unclassified(", multiplicities");
    }
    // Positive system from a generic functional.
    let n = rrs.cartan_dim;
    let phi = (2..40)
        .map(|base: i64| (0..n).map(|k| q(base.pow(k as u32))).collect::<QVec>())
        .find(|phi| rrs.roots.iter().all(|(f, _)| !dot(f, phi).is_zero()))
        .unwrap_or_else(|| vec![q(1); n]);
    let positive: Vec<QVec> =
        rrs.roots.iter().map(|(f, _)| f.clone()).filter(|f| dot(f, &phi).is_positive()).collect();
    let pos_set: BTreeSet<&QVec> = positive.iter().collect();
    let simple: Vec<QVec> = positive
        .iter()
        .filter(|f| {
            !positive.iter().any(|a| {
                let rest: QVec = f.iter().zip(a).map(|(x, y)| x - y).collect();
                pos_set.contains(&rest)
            })
        })
        .cloned()
        .collect();
    // Connected components of the Dynkin graph.
    let mut comp: Vec<usize> = (0..simple.len()).collect();
    fn find(c: &mut Vec<usize>, i: usize) -> usize {
        if c[i] != i {
            let r = find(c, c[i]);
            c[i] = r;
        }
        c[i]
    }
    for i in 0..simple.len() {
        for j in i + 1..simple.len() {
            if !rrs.pair(&simple[i], &simple[j]).is_zero() {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..simple.len() {
        let r = find(&mut comp, i);
        members.entry(r).or_default().push(i);
    }
    let mut parts: Vec<(usize, String)> = Vec::new();
    let mut types = Vec::new();
    for idx in members.values() {
        let cm: Vec<Vec<i64>> = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .map(|&j| {
                        let v = q(2) * rrs.pair(&simple[i], &simple[j]) / rrs.pair(&simple[j], &simple[j]);
                        v.to_integer().try_into().unwrap_or(0)
                    })
                    .collect()
            })
            .collect();
        match cartan_type(&cm) {
            Some((t, name)) => {
                let d = catalogue_dim_rank(&name).map_or(0, |x| x.0);
                parts.push((d, name));
                types.push(t);
            }
            None => return unclassified(", unrecognized component"),
        }
    }
    parts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut names: Vec<String> = parts.into_iter().map(|(_, s)| s).collect();
    names.extend(abelian_name(rrs.abelian_dim));
    types.sort();
    let name = if names.is_empty() { "0".to_string() } else { names.join("⊕") };
    let kind = if types.is_empty() { String::new() } else { format!(", type {}", types.join("×")) };
    Classification {
        name,
        dim,
        rank: rank_,
        roots,
        fingerprint: format!("{base}{kind}"),
        cartan_verified: true,
    }
}

/// `(dim, rank)` of a catalogue name such as `su(2)⊕ℝ`.
pub fn catalogue_dim_rank(name: &str) -> Option<(usize, usize)> {
    if name == "0" {
        return Some((0, 0));
    }
    let mut total = (0, 0);
    for part in name.split('⊕') {
        let (d, r) = if part == "ℝ" {
            (1, 1)
        } else if let Some(k) = part.strip_prefix("ℝ^") {
            let k: usize = k.parse().ok()?;
            (k, k)
        } else if let Some(n) = part.strip_prefix("su(").and_then(|s| s.strip_suffix(')')) {
            let n: usize = n.parse().ok()?;
            (n * n - 1, n - 1)
        } else {
            match part {
                "so(5)" => (10, 2),
                "so(7)" => (21, 3),
                "sp(3)" => (21, 3),
                _ => return None,
            }
        };
        total = (total.0 + d, total.1 + r);
    }
    Some(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qvec;

    fn rrs(n: usize, pos: &[QVec], abelian: usize) -> RestrictedRootSystem {
        let mut roots: Vec<(QVec, usize)> = Vec::new();
        for p in pos {
            roots.push((p.clone(), 1));
            roots.push((p.iter().map(|x| -x).collect(), 1));
        }
        let form = (0..n).map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()).collect();
        RestrictedRootSystem { cartan_dim: n, roots, abelian_dim: abelian, form, zero_part: 0, cartan_verified: true }
    }

    #[test]
    fn catalogue_names() {
        assert_eq!(classify(&rrs(1, &[qvec(&[2])], 0)).name, "su(2)");
        assert_eq!(classify(&rrs(2, &[qvec(&[1, 0])], 1)).name, "su(2)⊕ℝ");
        assert_eq!(classify(&rrs(2, &[qvec(&[1, 0]), qvec(&[0, 1])], 0)).name, "su(2)⊕su(2)");
        let b2 = classify(&rrs(2, &[qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[1, 1]), qvec(&[1, -1])], 0));
        assert_eq!((b2.name.as_str(), b2.dim, b2.rank), ("so(5)", 10, 2));
        assert_eq!(classify(&rrs(3, &[], 3)).name, "ℝ^3");
        assert_eq!(classify(&rrs(0, &[], 0)).name, "0");
    }

    #[test]
    fn a2_from_hexagon() {
        // Roots e_i − e_j of su(3) in the basis (1,−1,0), (0,1,−1) of 𝔱.
        let basis = [qvec(&[1, -1, 0]), qvec(&[0, 1, -1])];
        let gram: Vec<QVec> = basis.iter().map(|u| basis.iter().map(|v| dot(u, v)).collect()).collect();
        let form = inverse(&gram).unwrap();
        let ambient = [qvec(&[1, -1, 0]), qvec(&[0, 1, -1]), qvec(&[1, 0, -1])];
        let mut roots = Vec::new();
        for r in &ambient {
            let f: QVec = basis.iter().map(|b| dot(r, b)).collect();
            roots.push((f.iter().map(|x| -x).collect(), 1));
            roots.push((f, 1));
        }
        let s = RestrictedRootSystem { cartan_dim: 2, roots, abelian_dim: 0, form, zero_part: 0, cartan_verified: true };
        let c = classify(&s);
        assert_eq!((c.name.as_str(), c.dim, c.rank), ("su(3)", 8, 2));
    }

    #[test]
    fn rejects_g2_and_non_reduced() {
        // G2 with short simple root (1,0) and long simple root (0,1).
        let mut s = rrs(2, &[qvec(&[1, 0]), qvec(&[0, 1]), qvec(&[1, 1]), qvec(&[2, 1]), qvec(&[3, 1]), qvec(&[3, 2])], 0);
        s.form = vec![qvec(&[2, -3]), qvec(&[-3, 6])];
        assert!(classify(&s).name.starts_with("unclassified"));
        let nr = rrs(1, &[qvec(&[1]), qvec(&[2])], 0);
        assert!(classify(&nr).name.contains("non-reduced"));
    }

    #[test]
    fn catalogue_soundness() {
        for name in ["su(2)", "su(3)", "so(5)", "su(2)⊕ℝ", "su(2)⊕su(2)", "ℝ^2", "0"] {
            assert!(catalogue_dim_rank(name).is_some());
        }
        assert_eq!(catalogue_dim_rank("su(2)⊕ℝ"), Some((4, 2)));
    }
}
