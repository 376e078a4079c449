//! Root data of products of `SU(n)` and tori.
//!
//! Internally 𝔱 and 𝔱* are both modelled in ambient coordinates: an
//! `SU(n)` factor contributes `n` coordinates with entry sum zero, a torus
//! `T^m` contributes `m` free coordinates. The inner product is the
//! block-wise dot product, which identifies 𝔱 with 𝔱*. Positive roots are
//! `e_i − e_j` with `i < j` inside one `SU` block, so Weyl reflections are
//! transpositions of coordinates.

use crate::error::{Error, Result};
use crate::linalg::{
    dot, in_span, intersect, is_zero_vec, mat_mul, nullspace, projection, q, rank, row_basis,
    solve, vadd, vscale, vsub, QVec, Q,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    SU(usize),
    Torus(usize),
}

impl Factor {
    /// Parse `SU(n)`, `T^m`, `T(m)` or `U(1)`.
    pub fn parse(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = |prefix: &str, suffix: &str| -> Option<String> {
            t.strip_prefix(prefix)
                .and_then(|r| r.strip_suffix(suffix))
                .map(str::to_string)
        };
        let number = |s: String| -> Result<usize> {
            s.parse::<usize>()
                .map_err(|_| Error::Config(format!("bad factor spec {text:?}")))
        };
        let factor = if let Some(n) = inner("SU(", ")") {
            Factor::SU(number(n)?)
        } else if t == "U(1)" {
            Factor::Torus(1)
        } else if let Some(m) = inner("T(", ")").or_else(|| t.strip_prefix("T^").map(str::to_string)) {
            Factor::Torus(number(m)?)
        } else {
            return Err(Error::Config(format!(
                "bad factor spec {text:?}: expected SU(n), T^m or U(1)"
            )));
        };
        factor.validate()?;
        Ok(factor)
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Factor::SU(n) if n < 2 => Err(Error::Config(format!("SU({n}): factor rank below 2"))),
            Factor::Torus(0) => Err(Error::Config("T^0: torus rank below 1".into())),
            _ => Ok(()),
        }
    }

    pub fn ambient_len(&self) -> usize {
        match *self {
            Factor::SU(n) | Factor::Torus(n) => n,
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            Factor::SU(n) => n - 1,
            Factor::Torus(m) => m,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::SU(n) => write!(f, "SU({n})"),
            Factor::Torus(m) => write!(f, "T^{m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    pub factors: Vec<Factor>,
}

impl GroupSpec {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Config("group needs at least one factor".into()));
        }
        for f in &factors {
            f.validate()?;
        }
        Ok(GroupSpec { factors })
    }

    pub fn su(ns: &[usize]) -> Self {
        GroupSpec::new(ns.iter().map(|&n| Factor::SU(n)).collect()).expect("valid SU factors")
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("×"))
    }
}

/// Coordinates occupied by one factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub factor: Factor,
    pub offset: usize,
    pub len: usize,
}

impl Block {
    pub fn is_su(&self) -> bool {
        matches!(self.factor, Factor::SU(_))
    }
}

/// Positive root `e_i − e_j` (`i < j`, local to `block`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub block: usize,
    pub i: usize,
    pub j: usize,
    pub vector: QVec,
}

/// Weight in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(pub QVec);

impl WeightVector {
    pub fn coords(&self) -> &[Q] {
        &self.0
    }
}

impl From<QVec> for WeightVector {
    fn from(v: QVec) -> Self {
        WeightVector(v)
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub spec: GroupSpec,
    pub blocks: Vec<Block>,
    pub ambient_dim: usize,
    pub cartan_dim: usize,
    pub positive_roots: Vec<Root>,
    /// Indices into `positive_roots`.
    pub simple_roots: Vec<usize>,
}

pub fn build_root_datum(spec: &GroupSpec) -> RootDatum {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for &factor in &spec.factors {
        let len = factor.ambient_len();
        blocks.push(Block { factor, offset, len });
        offset += len;
    }
    let ambient_dim = offset;
    let cartan_dim = spec.factors.iter().map(Factor::rank).sum();
    let mut positive_roots = Vec::new();
    let mut simple_roots = Vec::new();
    for (b, block) in blocks.iter().enumerate() {
        if !block.is_su() {
            continue;
        }
        for i in 0..block.len {
            for j in i + 1..block.len {
                let mut vector = vec![Q::zero(); ambient_dim];
                vector[block.offset + i] = q(1);
                vector[block.offset + j] = q(-1);
                if j == i + 1 {
                    simple_roots.push(positive_roots.len());
                }
                positive_roots.push(Root { block: b, i, j, vector });
            }
        }
    }
    RootDatum {
        spec: spec.clone(),
        blocks,
        ambient_dim,
        cartan_dim,
        positive_roots,
        simple_roots,
    }
}

impl RootDatum {
    pub fn new(spec: &GroupSpec) -> Self {
        build_root_datum(spec)
    }

    pub fn dim_g(&self) -> usize {
        self.cartan_dim + 2 * self.positive_roots.len()
    }

    /// Gram matrix of the invariant inner product (identity).
    pub fn gram(&self) -> Vec<QVec> {
        (0..self.ambient_dim)
            .map(|i| {
                (0..self.ambient_dim)
                    .map(|j| if i == j { q(1) } else { q(0) })
                    .collect()
            })
            .collect()
    }

    pub fn inner(&self, a: &[Q], b: &[Q]) -> Q {
        dot(a, b)
    }

    /// Whether `v` lies in the sum-zero model of 𝔱 (equivalently 𝔱*).
    pub fn in_t(&self, v: &[Q]) -> bool {
        v.len() == self.ambient_dim
            && self.blocks.iter().filter(|b| b.is_su()).all(|b| {
                v[b.offset..b.offset + b.len].iter().sum::<Q>().is_zero()
            })
    }

    /// Linear equations cutting 𝔱 out of the ambient space.
    pub fn t_constraints(&self) -> Vec<QVec> {
        self.blocks
            .iter()
            .filter(|b| b.is_su())
            .map(|b| {
                let mut row = vec![Q::zero(); self.ambient_dim];
                for x in &mut row[b.offset..b.offset + b.len] {
                    *x = q(1);
                }
                row
            })
            .collect()
    }

    /// Standard rational basis of 𝔱: `e_k − e_{k+1}` per `SU` block and unit
    /// vectors per torus block.
    pub fn t_basis(&self) -> Vec<QVec> {
        let mut out = Vec::new();
        for b in &self.blocks {
            let n = if b.is_su() { b.len - 1 } else { b.len };
            for k in 0..n {
                let mut v = vec![Q::zero(); self.ambient_dim];
                v[b.offset + k] = q(1);
                if b.is_su() {
                    v[b.offset + k + 1] = q(-1);
                }
                out.push(v);
            }
        }
        out
    }

    /// Basis of the subspace of 𝔱 annihilated by the given functionals.
    pub fn t_kernel(&self, functionals: &[QVec]) -> Vec<QVec> {
        let mut rows = self.t_constraints();
        rows.extend(functionals.iter().cloned());
        row_basis(&nullspace(&rows, self.ambient_dim), self.ambient_dim)
    }

    /// Orthogonal complement of `sub` inside 𝔱.
    pub fn t_complement(&self, sub: &[QVec]) -> Vec<QVec> {
        self.t_kernel(sub)
    }

    pub fn is_integral(&self, w: &[Q]) -> bool {
        if !self.in_t(w) {
            return false;
        }
        self.blocks.iter().all(|b| {
            let xs = &w[b.offset..b.offset + b.len];
            if b.is_su() {
                let n = Q::from_integer(BigInt::from(b.len));
                let scaled: Vec<Q> = xs.iter().map(|x| x * &n).collect();
                scaled.iter().all(Q::is_integer)
                    && scaled
                        .iter()
                        .all(|x| ((x - &scaled[0]) / &n).is_integer())
            } else {
                xs.iter().all(Q::is_integer)
            }
        })
    }

    pub fn is_dominant(&self, w: &[Q]) -> bool {
        self.simple_roots
            .iter()
            .all(|&r| !dot(&self.positive_roots[r].vector, w).is_negative())
    }

    /// Reflection of `p` in the wall of the positive root with index `r`.
    pub fn reflect(&self, p: &[Q], r: usize) -> QVec {
        let root = &self.positive_roots[r];
        let mut out = p.to_vec();
        out.swap(self.blocks[root.block].offset + root.i, self.blocks[root.block].offset + root.j);
        out
    }

    pub fn weyl_orbit(&self, w: &WeightVector) -> BTreeSet<WeightVector> {
        let mut seen = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(v) = queue.pop_front() {
            for &s in &self.simple_roots {
                let u = WeightVector(self.reflect(&v.0, s));
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    /// The dominant element of the Weyl orbit of `w`.
    pub fn dominant(&self, w: &[Q]) -> QVec {
        let mut out = w.to_vec();
        for b in self.blocks.iter().filter(|b| b.is_su()) {
            out[b.offset..b.offset + b.len].sort_by(|a, c| c.cmp(a));
        }
        out
    }

    /// Index of the positive root equal to `±v`, with the sign.
    pub fn root_index(&self, v: &[Q]) -> Option<(usize, i32)> {
        self.positive_roots.iter().enumerate().find_map(|(k, r)| {
            if r.vector == v {
                Some((k, 1))
            } else if r.vector.iter().zip(v).all(|(a, b)| *a == -b.clone()) {
                Some((k, -1))
            } else {
                None
            }
        })
    }

    pub fn walls_containing(&self, p: &[Q]) -> WallIntersection {
        let partitions = self
            .blocks
            .iter()
            .map(|b| {
                if !b.is_su() {
                    return Vec::new();
                }
                let mut level: BTreeMap<&Q, Vec<usize>> = BTreeMap::new();
                for i in 0..b.len {
                    level.entry(&p[b.offset + i]).or_default().push(i);
                }
                level.into_values().collect()
            })
            .collect();
        WallIntersection::from_partitions(self, partitions)
    }

    /// Dimension of the centralizer of `p` in 𝔤.
    pub fn centralizer_dim(&self, p: &[Q]) -> usize {
        self.cartan_dim + 2 * self.walls_containing(p).vanishing_roots.len()
    }

    /// Every wall intersection (flat of the root arrangement).
    pub fn flats(&self) -> Vec<WallIntersection> {
        let per_block: Vec<Vec<Vec<Vec<usize>>>> = self
            .blocks
            .iter()
            .map(|b| if b.is_su() { set_partitions(b.len) } else { vec![Vec::new()] })
            .collect();
        let mut combos: Vec<Vec<Vec<Vec<usize>>>> = vec![Vec::new()];
        for options in &per_block {
            combos = combos
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |o| {
                        let mut p = prefix.clone();
                        p.push(o.clone());
                        p
                    })
                })
                .collect();
        }
        combos
            .into_iter()
            .map(|parts| WallIntersection::from_partitions(self, parts))
            .collect()
    }

    /// All Weyl group elements, one coordinate permutation per block.
    pub fn weyl_group(&self) -> Vec<WeylElement> {
        let mut out: Vec<WeylElement> = vec![WeylElement { perms: Vec::new() }];
        for b in &self.blocks {
            let options = if b.is_su() {
                permutations(b.len)
            } else {
                vec![(0..b.len).collect()]
            };
            out = out
                .into_iter()
                .flat_map(|w| {
                    options.iter().map(move |p| {
                        let mut perms = w.perms.clone();
                        perms.push(p.clone());
                        WeylElement { perms }
                    })
                })
                .collect();
        }
        out
    }

    pub fn weyl_group_order(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| b.is_su())
            .map(|b| (1..=b.len).product::<usize>())
            .product()
    }

    pub fn apply(&self, w: &WeylElement, v: &[Q]) -> QVec {
        let mut out = v.to_vec();
        for (b, perm) in self.blocks.iter().zip(&w.perms) {
            for (i, &pi) in perm.iter().enumerate() {
                out[b.offset + pi] = v[b.offset + i].clone();
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    perms: Vec<Vec<usize>>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

/// All set partitions of `{0, …, n−1}`, parts sorted by least element.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    fn rec(k: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..cur.len() {
            cur[i].push(k);
            rec(k + 1, n, cur, out);
            cur[i].pop();
        }
        cur.push(vec![k]);
        rec(k + 1, n, cur, out);
        cur.pop();
    }
    rec(0, n, &mut current, &mut out);
    out
}

/// Intersection of Weyl walls. For the root systems at hand such a
/// subspace is described by one set partition per `SU` block: the vectors
/// constant on every part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WallIntersection {
    /// Per block; empty for torus blocks.
    pub partitions: Vec<Vec<Vec<usize>>>,
    /// Indices into the datum's positive roots.
    pub vanishing_roots: Vec<usize>,
    pub subspace_basis: Vec<QVec>,
}

impl WallIntersection {
    pub fn from_partitions(datum: &RootDatum, partitions: Vec<Vec<Vec<usize>>>) -> Self {
        let mut partitions: Vec<Vec<Vec<usize>>> = partitions
            .into_iter()
            .map(|mut parts| {
                for p in &mut parts {
                    p.sort_unstable();
                }
                parts.sort();
                parts
            })
            .collect();
        for (b, parts) in datum.blocks.iter().zip(&mut partitions) {
            if !b.is_su() {
                parts.clear();
            }
        }
        let part_of = |block: usize, i: usize| {
            partitions[block].iter().position(|p| p.contains(&i))
        };
        let vanishing_roots = datum
            .positive_roots
            .iter()
            .enumerate()
            .filter(|(_, r)| part_of(r.block, r.i) == part_of(r.block, r.j))
            .map(|(k, _)| k)
            .collect();
        let mut basis = Vec::new();
        for (b, parts) in datum.blocks.iter().zip(&partitions) {
            if !b.is_su() {
                for k in 0..b.len {
                    let mut v = vec![Q::zero(); datum.ambient_dim];
                    v[b.offset + k] = q(1);
                    basis.push(v);
                }
                continue;
            }
            // 1_P / |P| − 1_last / |last| for every part but the last.
            let last = parts.last().expect("nonempty partition");
            for p in &parts[..parts.len() - 1] {
                let mut v = vec![Q::zero(); datum.ambient_dim];
                for &i in p {
                    v[b.offset + i] = Q::new(BigInt::one(), BigInt::from(p.len()));
                }
                for &i in last {
                    v[b.offset + i] = -Q::new(BigInt::one(), BigInt::from(last.len()));
                }
                basis.push(v);
            }
        }
        WallIntersection {
            partitions,
            vanishing_roots,
            subspace_basis: row_basis(&basis, datum.ambient_dim),
        }
    }

    /// The whole of 𝔱* (no walls).
    pub fn everything(datum: &RootDatum) -> Self {
        let parts = datum
            .blocks
            .iter()
            .map(|b| if b.is_su() { (0..b.len).map(|i| vec![i]).collect() } else { Vec::new() })
            .collect();
        WallIntersection::from_partitions(datum, parts)
    }

    pub fn dim(&self) -> usize {
        self.subspace_basis.len()
    }

    pub fn contains(&self, datum: &RootDatum, p: &[Q]) -> bool {
        in_span(&self.subspace_basis, p, datum.ambient_dim)
    }

    /// Intersection of subspaces: the finest common coarsening of the
    /// partitions.
    pub fn intersect(&self, datum: &RootDatum, other: &Self) -> Self {
        let parts = self
            .partitions
            .iter()
            .zip(&other.partitions)
            .zip(&datum.blocks)
            .map(|((a, b), blk)| {
                if !blk.is_su() {
                    return Vec::new();
                }
                let mut label: Vec<usize> = (0..blk.len).collect();
                let find = |label: &mut Vec<usize>, mut x: usize| {
                    while label[x] != x {
                        x = label[x];
                    }
                    x
                };
                for part in a.iter().chain(b) {
                    for w in part.windows(2) {
                        let (x, y) = (find(&mut label, w[0]), find(&mut label, w[1]));
                        label[x.max(y)] = x.min(y);
                    }
                }
                let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for i in 0..blk.len {
                    let r = find(&mut label, i);
                    groups.entry(r).or_default().push(i);
                }
                groups.into_values().collect()
            })
            .collect();
        WallIntersection::from_partitions(datum, parts)
    }
}

/// Affine subspace `base + span(directions)` of 𝔱*.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpan {
    pub base: QVec,
    pub directions: Vec<QVec>,
}

impl AffineSpan {
    pub fn from_points(points: &[QVec]) -> Self {
        let base = points[0].clone();
        let directions = points[1..].iter().map(|p| vsub(p, &base)).collect();
        AffineSpan { base, directions }
    }

    /// The point of the span closest to the origin.
    pub fn foot(&self, dim: usize) -> QVec {
        let p = projection(&self.directions, dim);
        let pb: QVec = p.iter().map(|row| dot(row, &self.base)).collect();
        vsub(&self.base, &pb)
    }
}

/// Whether the wall subspace meets `span` orthogonally: the underlying
/// subspaces have commuting orthogonal projections and the affine sets
/// meet. The meeting point is returned when it is unique.
pub fn is_orthogonal_intersection(
    datum: &RootDatum,
    wall: &WallIntersection,
    span: &AffineSpan,
) -> (bool, Option<QVec>) {
    let n = datum.ambient_dim;
    let pu = projection(&span.directions, n);
    let pi = projection(&wall.subspace_basis, n);
    if mat_mul(&pu, &pi) != mat_mul(&pi, &pu) {
        return (false, None);
    }
    // base + U c = I d
    let mut cols: Vec<QVec> = span.directions.clone();
    cols.extend(wall.subspace_basis.iter().map(|v| vscale(&q(-1), v)));
    let ncols = cols.len();
    let rows: Vec<QVec> = (0..n).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let rhs: QVec = span.base.iter().map(|x| -x.clone()).collect();
    let Some(sol) = solve(&rows, &rhs, ncols) else {
        return (false, None);
    };
    let meet_dim = intersect(&row_basis(&span.directions, n), &wall.subspace_basis, n).len();
    if meet_dim > 0 {
        return (true, None);
    }
    let mut point = span.base.clone();
    for (c, d) in sol.iter().zip(&span.directions) {
        point = vadd(&point, &vscale(c, d));
    }
    (true, Some(point))
}

fn qualifies(datum: &RootDatum, wall: &WallIntersection, spans: &[AffineSpan]) -> bool {
    spans.iter().all(|s| is_orthogonal_intersection(datum, wall, s).0)
}

/// The smallest wall intersection meeting every span orthogonally.
pub fn minimal_orthogonal_wall_intersection(
    datum: &RootDatum,
    spans: &[AffineSpan],
) -> WallIntersection {
    let mut result = WallIntersection::everything(datum);
    for flat in datum.flats() {
        if qualifies(datum, &flat, spans) {
            result = result.intersect(datum, &flat);
        }
    }
    debug_assert!(qualifies(datum, &result, spans));
    result
}

/// Which basis user-facing coordinates refer to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// Coefficients against the dual basis of `e_k − e_{k+1}` (and of the
    /// unit vectors of torus blocks).
    Dual,
    /// Raw ambient coordinates.
    Ambient,
    /// Dual basis of a user-chosen basis of 𝔱.
    Custom,
}

/// Conversion between ambient vectors and user-facing coordinates.
///
/// With basis `H_1, …, H_r` of 𝔱, a weight `α` has coordinates `α(H_k)`
/// and an element `ξ = Σ b_k H_k` of 𝔱 has coordinates `b_k`.
#[derive(Clone, Debug)]
pub struct CoordinateSystem {
    pub kind: BasisKind,
    basis: Vec<QVec>,
    gram_inv: Vec<QVec>,
}

impl CoordinateSystem {
    pub fn dual(datum: &RootDatum) -> Self {
        Self::with_basis(datum, BasisKind::Dual, datum.t_basis()).expect("standard basis")
    }

    pub fn ambient(_datum: &RootDatum) -> Self {
        CoordinateSystem { kind: BasisKind::Ambient, basis: Vec::new(), gram_inv: Vec::new() }
    }

    pub fn custom(datum: &RootDatum, basis: Vec<QVec>) -> Result<Self> {
        Self::with_basis(datum, BasisKind::Custom, basis)
    }

    fn with_basis(datum: &RootDatum, kind: BasisKind, basis: Vec<QVec>) -> Result<Self> {
        if basis.len() != datum.cartan_dim
            || basis.iter().any(|h| !datum.in_t(h))
            || rank(&basis, datum.ambient_dim) != datum.cartan_dim
        {
            return Err(Error::Config(format!(
                "cartan basis must consist of {} independent vectors of 𝔱",
                datum.cartan_dim
            )));
        }
        let gram: Vec<QVec> = basis
            .iter()
            .map(|u| basis.iter().map(|v| dot(u, v)).collect())
            .collect();
        let gram_inv = crate::linalg::inverse(&gram).expect("independent basis");
        Ok(CoordinateSystem { kind, basis, gram_inv })
    }

    pub fn len(&self, datum: &RootDatum) -> usize {
        match self.kind {
            BasisKind::Ambient => datum.ambient_dim,
            _ => self.basis.len(),
        }
    }

    pub fn is_empty(&self, datum: &RootDatum) -> bool {
        self.len(datum) == 0
    }

    fn combine(&self, coeffs: &[Q], n: usize) -> QVec {
        let mut out = vec![Q::zero(); n];
        for (c, h) in coeffs.iter().zip(&self.basis) {
            out = vadd(&out, &vscale(c, h));
        }
        out
    }

    pub fn weight_to_ambient(&self, datum: &RootDatum, coords: &[Q]) -> Result<QVec> {
        if coords.len() != self.len(datum) {
            return Err(Error::Input(format!(
                "expected {} coordinates, got {}",
                self.len(datum),
                coords.len()
            )));
        }
        if self.kind == BasisKind::Ambient {
            if !datum.in_t(coords) {
                return Err(Error::Input("ambient SU coordinates must sum to zero".into()));
            }
            return Ok(coords.to_vec());
        }
        // α = Σ c_j H_j with G c = (α(H_k))_k.
        let c: QVec = self.gram_inv.iter().map(|row| dot(row, coords)).collect();
        Ok(self.combine(&c, datum.ambient_dim))
    }

    pub fn weight_from_ambient(&self, v: &[Q]) -> QVec {
        match self.kind {
            BasisKind::Ambient => v.to_vec(),
            _ => self.basis.iter().map(|h| dot(h, v)).collect(),
        }
    }

    pub fn algebra_to_ambient(&self, datum: &RootDatum, coeffs: &[Q]) -> Result<QVec> {
        if coeffs.len() != self.len(datum) {
            return Err(Error::Input("wrong number of coordinates".into()));
        }
        match self.kind {
            BasisKind::Ambient => Ok(coeffs.to_vec()),
            _ => Ok(self.combine(coeffs, datum.ambient_dim)),
        }
    }

    pub fn algebra_from_ambient(&self, v: &[Q]) -> QVec {
        match self.kind {
            BasisKind::Ambient => v.to_vec(),
            _ => {
                let pairing: QVec = self.basis.iter().map(|h| dot(h, v)).collect();
                self.gram_inv.iter().map(|row| dot(row, &pairing)).collect()
            }
        }
    }

    /// `(a,b,c)` rendering of a weight.
    pub fn format_weight(&self, v: &[Q]) -> String {
        format_tuple(&self.weight_from_ambient(v))
    }

    pub fn format_algebra(&self, v: &[Q]) -> String {
        format_tuple(&self.algebra_from_ambient(v))
    }
}

pub fn format_tuple(xs: &[Q]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Whether `v` is the zero vector.
pub fn is_origin(v: &[Q]) -> bool {
    is_zero_vec(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{qr, qvec};

    fn su(ns: &[usize]) -> RootDatum {
        RootDatum::new(&GroupSpec::su(ns))
    }

    #[test]
    fn datum_sizes() {
        let d = su(&[2, 2, 2]);
        assert_eq!((d.ambient_dim, d.cartan_dim, d.positive_roots.len(), d.dim_g()), (6, 3, 3, 9));
        let d = su(&[2]);
        assert_eq!((d.ambient_dim, d.cartan_dim, d.positive_roots.len(), d.dim_g()), (2, 1, 1, 3));
        let d = su(&[6]);
        assert_eq!((d.cartan_dim, d.positive_roots.len(), d.dim_g()), (5, 15, 35));
        let d = RootDatum::new(&GroupSpec::new(vec![Factor::SU(3), Factor::Torus(2)]).unwrap());
        assert_eq!((d.ambient_dim, d.cartan_dim, d.dim_g()), (5, 4, 10));
    }

    #[test]
    fn factor_parsing() {
        assert_eq!(Factor::parse("SU(4)").unwrap(), Factor::SU(4));
        assert_eq!(Factor::parse("T^2").unwrap(), Factor::Torus(2));
        assert_eq!(Factor::parse("U(1)").unwrap(), Factor::Torus(1));
        let err = Factor::parse("SU(0)").unwrap_err().to_string();
        assert!(err.contains("factor rank below 2"), "{err}");
        assert!(Factor::parse("Sp(2)").is_err());
    }

    #[test]
    fn su2_orbit_in_dual_coordinates() {
        let d = su(&[2]);
        let cs = CoordinateSystem::dual(&d);
        let w = cs.weight_to_ambient(&d, &[q(1)]).unwrap();
        let orbit: Vec<QVec> = d
            .weyl_orbit(&WeightVector(w))
            .into_iter()
            .map(|v| cs.weight_from_ambient(&v.0))
            .collect();
        assert_eq!(orbit, vec![qvec(&[-1]), qvec(&[1])]);
        let zero = WeightVector(vec![q(0), q(0)]);
        assert_eq!(d.weyl_orbit(&zero).len(), 1);
    }

    #[test]
    fn su4_orbit_of_half_vector() {
        let d = su(&[4]);
        let w = WeightVector(vec![qr(1, 2), qr(1, 2), qr(-1, 2), qr(-1, 2)]);
        let orbit = d.weyl_orbit(&w);
        assert_eq!(orbit.len(), 6);
        assert_eq!(orbit.iter().filter(|v| d.is_dominant(&v.0)).count(), 1);
    }

    #[test]
    fn cube_walls() {
        let d = su(&[2, 2, 2]);
        let cs = CoordinateSystem::dual(&d);
        let mu = cs.weight_to_ambient(&d, &qvec(&[5, 0, 0])).unwrap();
        let wall = d.walls_containing(&mu);
        let roots: Vec<QVec> = wall
            .vanishing_roots
            .iter()
            .map(|&r| cs.weight_from_ambient(&d.positive_roots[r].vector))
            .collect();
        assert_eq!(roots, vec![qvec(&[0, 2, 0]), qvec(&[0, 0, 2])]);
        assert_eq!(d.centralizer_dim(&mu), 7);
        let generic = cs.weight_to_ambient(&d, &qvec(&[1, 2, 3])).unwrap();
        assert!(d.walls_containing(&generic).vanishing_roots.is_empty());
        assert_eq!(d.centralizer_dim(&generic), 3);
    }

    #[test]
    fn su6_walls_at_nu() {
        let d = su(&[6]);
        let nu: QVec = [1, -1, 1, -1, 1, -1].iter().map(|&x| qr(x, 3)).collect();
        let wall = d.walls_containing(&nu);
        assert_eq!(wall.vanishing_roots.len(), 6);
        for &r in &wall.vanishing_roots {
            let root = &d.positive_roots[r];
            assert_eq!(root.i % 2, root.j % 2);
        }
        assert_eq!(d.centralizer_dim(&nu), 17);
        assert_eq!(wall.dim(), 1);
    }

    #[test]
    fn zero_lies_on_every_wall() {
        let d = su(&[3, 2]);
        let wall = d.walls_containing(&vec![q(0); 5]);
        assert_eq!(wall.vanishing_roots.len(), d.positive_roots.len());
        assert_eq!(wall.dim(), 0);
    }

    #[test]
    fn flats_counted_by_bell_numbers() {
        assert_eq!(su(&[4]).flats().len(), 15);
        assert_eq!(su(&[6]).flats().len(), 203);
        assert_eq!(su(&[2, 3]).flats().len(), 10);
    }

    #[test]
    fn weyl_group_orders() {
        assert_eq!(su(&[2, 2, 2]).weyl_group().len(), 8);
        assert_eq!(su(&[4]).weyl_group().len(), 24);
        assert_eq!(su(&[3, 2]).weyl_group_order(), 12);
    }

    fn pyramid_coords(d: &RootDatum) -> CoordinateSystem {
        CoordinateSystem::custom(
            d,
            vec![qvec(&[1, -1, 0, 0]), qvec(&[0, 1, -1, 0]), qvec(&[1, 1, 1, -3])],
        )
        .unwrap()
    }

    #[test]
    fn pyramid_orthogonal_intersection() {
        let d = su(&[4]);
        let cs = pyramid_coords(&d);
        let a = cs.weight_to_ambient(&d, &qvec(&[2, 0, 2])).unwrap();
        let b = cs.weight_to_ambient(&d, &qvec(&[-1, 0, 2])).unwrap();
        assert_eq!(a, vec![qr(3, 2), qr(-1, 2), qr(-1, 2), qr(-1, 2)]);
        let span = AffineSpan::from_points(&[a, b]);
        let nu = cs.weight_to_ambient(&d, &qvec(&[0, 0, 1])).unwrap();
        let wall = d.walls_containing(&nu);
        let (ok, point) = is_orthogonal_intersection(&d, &wall, &span);
        assert!(ok);
        assert_eq!(cs.weight_from_ambient(&point.unwrap()), qvec(&[0, 0, 2]));
        let min = minimal_orthogonal_wall_intersection(&d, &[span]);
        assert_eq!(min, wall);
    }

    #[test]
    fn cube_orthogonal_intersection() {
        let d = su(&[2, 2, 2]);
        let cs = CoordinateSystem::dual(&d);
        let a = cs.weight_to_ambient(&d, &qvec(&[1, 1, -1])).unwrap();
        let b = cs.weight_to_ambient(&d, &qvec(&[1, -1, 1])).unwrap();
        let span = AffineSpan::from_points(&[a, b]);
        let line = d.walls_containing(&cs.weight_to_ambient(&d, &qvec(&[1, 0, 0])).unwrap());
        let (ok, point) = is_orthogonal_intersection(&d, &line, &span);
        assert!(ok);
        assert_eq!(cs.weight_from_ambient(&point.unwrap()), qvec(&[1, 0, 0]));
        let everything = WallIntersection::everything(&d);
        assert_eq!(is_orthogonal_intersection(&d, &everything, &span), (true, None));
    }

    #[test]
    fn combined_minimal_intersection_is_nu_line() {
        let d = su(&[6]);
        let roots: Vec<QVec> = [[1, -1, 0, 0, 0, 0], [0, 0, 1, -1, 0, 0], [0, 0, 0, 0, 1, -1]]
            .iter()
            .map(|r| qvec(r))
            .collect();
        let min = minimal_orthogonal_wall_intersection(&d, &[AffineSpan::from_points(&roots)]);
        let nu: QVec = [1, -1, 1, -1, 1, -1].iter().map(|&x| qr(x, 3)).collect();
        assert_eq!(min, d.walls_containing(&nu));
    }

    #[test]
    fn whole_space_span_admits_every_flat() {
        let d = su(&[3]);
        let span = AffineSpan { base: vec![q(0); 3], directions: d.t_basis() };
        // Every flat lies inside the span, so every flat qualifies and the
        // smallest one is the origin.
        assert!(d.flats().iter().all(|f| is_orthogonal_intersection(&d, f, &span).0));
        let min = minimal_orthogonal_wall_intersection(&d, &[span]);
        assert_eq!(min.dim(), 0);
        assert_eq!(min.vanishing_roots.len(), 3);
    }

    #[test]
    fn coordinate_roundtrips() {
        let d = RootDatum::new(&GroupSpec::new(vec![Factor::SU(3), Factor::Torus(1)]).unwrap());
        let cs = CoordinateSystem::dual(&d);
        let w = qvec(&[2, -1, 3]);
        let amb = cs.weight_to_ambient(&d, &w).unwrap();
        assert!(d.is_integral(&amb));
        assert_eq!(cs.weight_from_ambient(&amb), w);
        let x = cs.algebra_to_ambient(&d, &w).unwrap();
        assert_eq!(cs.algebra_from_ambient(&x), w);
        // pairing of dual coordinates is Σ a_k b_k
        assert_eq!(dot(&amb, &x), q(4 + 1 + 9));
    }

    #[test]
    fn integrality() {
        let d = su(&[2]);
        assert!(d.is_integral(&[qr(1, 2), qr(-1, 2)]));
        assert!(!d.is_integral(&[qr(1, 4), qr(-1, 4)]));
        let d = su(&[3]);
        assert!(d.is_integral(&[qr(2, 3), qr(-1, 3), qr(-1, 3)]));
        assert!(d.is_integral(&[qr(1, 3), qr(1, 3), qr(-2, 3)]));
        assert!(!d.is_integral(&[qr(1, 3), qr(-1, 3), q(0)]));
    }
}
