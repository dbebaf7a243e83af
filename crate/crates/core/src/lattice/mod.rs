//! Exact lattice-polytope geometry: hulls, Minkowski sums, lattice points, volumes,
//! mixed volumes and lattice-translation containment searches.
//!
//! Everything is integer arithmetic. A [`Polytope`] carries both its minimal vertex
//! list and its facet inequalities `<u, normal> + offset >= 0` (inward normals);
//! lower-dimensional polytopes additionally carry the equations of their affine
//! hull and facets that are only meaningful within it.

mod hull;
pub mod intmat;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Deref, Sub};

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use intmat::{det, make_primitive, nullspace, rank, rank_and_pivots, smith_diagonal};

/// Hard cap on the ambient dimension.
pub const MAX_DIM: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("empty point set")]
    Empty,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ambient dimension {0} exceeds the supported maximum {MAX_DIM}")]
    TooManyDimensions(usize),
    #[error("scale factor must be positive, got {0}")]
    BadScale(i64),
    #[error("expected {expected} polytopes, got {got}")]
    WrongCount { expected: usize, got: usize },
}

/// A point of Z^n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn zero(n: usize) -> Self {
        LatticeVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn scaled(&self, k: i64) -> Self {
        LatticeVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn dot(&self, w: &[i64]) -> i64 {
        self.0.iter().zip(w).map(|(a, b)| a * b).sum()
    }
}

impl Deref for LatticeVector {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        LatticeVector(v)
    }
}

impl<const N: usize> From<[i64; N]> for LatticeVector {
    fn from(v: [i64; N]) -> Self {
        LatticeVector(v.to_vec())
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, o: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, o: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Affine inequality `<u, normal> + offset >= 0` (or `= 0` for equations).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    #[inline]
    pub fn eval(&self, u: &[i64]) -> i64 {
        u.iter().zip(&self.normal).map(|(a, b)| a * b).sum::<i64>() + self.offset
    }
}

/// Exact volume of a polytope; `degenerate` flags input of dimension below the
/// ambient dimension (volume reported as 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Volume {
    pub value: Ratio<i64>,
    pub degenerate: bool,
}

/// A lattice polytope in Z^n given by its vertices and facets.
#[derive(Clone, PartialEq, Eq)]
pub struct Polytope {
    ambient: usize,
    dim: usize,
    vertices: Vec<LatticeVector>,
    facets: Vec<Facet>,
    equations: Vec<Facet>,
    /// Per facet, indices into `vertices` of the vertices on it.
    incidence: Vec<Vec<usize>>,
}

fn to_i128(v: &[i64]) -> Vec<i128> {
    v.iter().map(|&x| x as i128).collect()
}

fn affine_rank(points: &[&LatticeVector]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = points[0];
    let rows: Vec<Vec<i128>> = points[1..].iter().map(|p| to_i128(&(*p - base))).collect();
    rank(&rows, base.dim())
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

impl Polytope {
    /// Convex hull of a nonempty set of lattice points.
    pub fn hull<I, P>(points: I) -> Result<Polytope, LatticeError>
    where
        I: IntoIterator<Item = P>,
        P: Into<LatticeVector>,
    {
        let pts: BTreeSet<LatticeVector> = points.into_iter().map(Into::into).collect();
        let pts: Vec<LatticeVector> = pts.into_iter().collect();
        let first = pts.first().ok_or(LatticeError::Empty)?;
        let n = first.dim();
        if n > MAX_DIM {
            return Err(LatticeError::TooManyDimensions(n));
        }
        if let Some(bad) = pts.iter().find(|p| p.dim() != n) {
            return Err(LatticeError::DimensionMismatch { expected: n, got: bad.dim() });
        }

        let v0 = first.clone();
        let diffs: Vec<Vec<i128>> = pts.iter().map(|p| to_i128(&(p - &v0))).collect();
        let (d, pivots) = rank_and_pivots(&diffs, n);

        let equations: Vec<Facet> = nullspace(&diffs, n)
            .into_iter()
            .map(|w| {
                let normal: Vec<i64> = w.into_iter().map(|x| x as i64).collect();
                let offset = -v0.dot(&normal);
                Facet { normal, offset }
            })
            .collect();

        if d == 0 {
            return Ok(Polytope {
                ambient: n,
                dim: 0,
                vertices: vec![v0],
                facets: Vec::new(),
                equations,
                incidence: Vec::new(),
            });
        }

        // Coordinates in the pivot columns give an injective affine map on the hull.
        let projected: Vec<Vec<i64>> = pts.iter().map(|p| pivots.iter().map(|&c| p[c]).collect()).collect();
        let facets: Vec<Facet> = hull::facets(&projected)
            .into_iter()
            .map(|(w, a)| {
                let mut normal = vec![0i64; n];
                for (k, &c) in pivots.iter().enumerate() {
                    normal[c] = w[k];
                }
                Facet { normal, offset: a }
            })
            .collect();

        // A point is a vertex iff the normals of its tight facets have rank d.
        let vertices: Vec<LatticeVector> = pts
            .iter()
            .zip(&projected)
            .filter(|(p, _)| {
                let tight: Vec<Vec<i128>> =
                    facets.iter().filter(|f| f.eval(p) == 0).map(|f| to_i128(&f.normal)).collect();
                rank(&tight, n) == d
            })
            .map(|(p, _)| p.clone())
            .collect();

        let incidence = facets
            .iter()
            .map(|f| (0..vertices.len()).filter(|&i| f.eval(&vertices[i]) == 0).collect())
            .collect();
        let poly = Polytope { ambient: n, dim: d, vertices, facets, equations, incidence };
        debug_assert!(poly.check_consistency());
        Ok(poly)
    }

    /// Every vertex satisfies every inequality and each facet is spanned by
    /// `dim` affinely independent vertices.
    fn check_consistency(&self) -> bool {
        self.vertices.iter().all(|v| self.contains(v))
            && self.incidence.iter().all(|inc| {
                let pts: Vec<&LatticeVector> = inc.iter().map(|&i| &self.vertices[i]).collect();
                affine_rank(&pts) + 1 == self.dim
            })
    }

    pub fn point(p: impl Into<LatticeVector>) -> Polytope {
        Polytope::hull([p.into()]).expect("single point")
    }

    /// The lattice box `[0, sides_1] x ... x [0, sides_n]`.
    pub fn lattice_box(sides: &[i64]) -> Polytope {
        let n = sides.len();
        let pts = (0..1usize << n).map(|mask| {
            LatticeVector((0..n).map(|j| if mask >> j & 1 == 1 { sides[j] } else { 0 }).collect())
        });
        Polytope::hull(pts).expect("box")
    }

    /// The unit cube `[0,1]^n`.
    pub fn unit_cube(n: usize) -> Polytope {
        Polytope::lattice_box(&vec![1; n])
    }

    /// `k` times the standard simplex `conv{0, e_1, ..., e_n}`.
    pub fn simplex(n: usize, k: i64) -> Polytope {
        let mut pts = vec![LatticeVector::zero(n)];
        pts.extend((0..n).map(|i| LatticeVector::unit(n, i).scaled(k)));
        Polytope::hull(pts).expect("simplex")
    }

    /// The segment `[a, b]`.
    pub fn segment(a: impl Into<LatticeVector>, b: impl Into<LatticeVector>) -> Result<Polytope, LatticeError> {
        Polytope::hull([a.into(), b.into()])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[LatticeVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Equations of the affine hull (empty when full-dimensional).
    pub fn equations(&self) -> &[Facet] {
        &self.equations
    }

    pub fn contains(&self, u: &[i64]) -> bool {
        self.equations.iter().all(|e| e.eval(u) == 0) && self.facets.iter().all(|f| f.eval(u) >= 0)
    }

    /// Membership in the interior in R^n (always false for lower-dimensional polytopes).
    pub fn contains_interior(&self, u: &[i64]) -> bool {
        self.is_full_dimensional() && self.facets.iter().all(|f| f.eval(u) > 0)
    }

    /// Containment of another polytope (vertex test).
    pub fn contains_polytope(&self, other: &Polytope) -> bool {
        other.vertices.iter().all(|v| self.contains(v))
    }

    /// Componentwise (min, max) of the vertices.
    pub fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let n = self.ambient;
        let mut lo = vec![i64::MAX; n];
        let mut hi = vec![i64::MIN; n];
        for v in &self.vertices {
            for j in 0..n {
                lo[j] = lo[j].min(v[j]);
                hi[j] = hi[j].max(v[j]);
            }
        }
        (lo, hi)
    }

    fn scan_box(&self, mut keep: impl FnMut(&[i64]) -> bool) -> Vec<LatticeVector> {
        let (lo, hi) = self.bounding_box();
        let n = self.ambient;
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            if keep(&cur) {
                out.push(LatticeVector(cur.clone()));
            }
            // odometer, last coordinate fastest => lexicographic output
            let mut j = n;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                if cur[j] < hi[j] {
                    cur[j] += 1;
                    cur[j + 1..n].copy_from_slice(&lo[j + 1..n]);
                    break;
                }
            }
        }
    }

    /// All lattice points, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<LatticeVector> {
        self.scan_box(|u| self.contains(u))
    }

    /// Lattice points of the interior, in lexicographic order.
    pub fn interior_lattice_points(&self) -> Vec<LatticeVector> {
        if !self.is_full_dimensional() {
            return Vec::new();
        }
        self.scan_box(|u| self.contains_interior(u))
    }

    pub fn translate(&self, t: &LatticeVector) -> Polytope {
        Polytope::hull(self.vertices.iter().map(|v| v + t)).expect("translate")
    }

    /// Translation moving the lexicographically smallest vertex to the origin.
    pub fn normalized_position(&self) -> Polytope {
        self.translate(&LatticeVector::zero(self.ambient).sub(&self.vertices[0]))
    }

    pub fn minkowski_sum(&self, other: &Polytope) -> Result<Polytope, LatticeError> {
        if self.ambient != other.ambient {
            return Err(LatticeError::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        let pts: Vec<LatticeVector> =
            self.vertices.iter().flat_map(|a| other.vertices.iter().map(move |b| a + b)).collect();
        Polytope::hull(pts)
    }

    /// Dilation `k P` (equal to the k-fold Minkowski sum of P with itself).
    pub fn scale(&self, k: i64) -> Result<Polytope, LatticeError> {
        if k < 1 {
            return Err(LatticeError::BadScale(k));
        }
        Polytope::hull(self.vertices.iter().map(|v| v.scaled(k)))
    }

    /// Pulling triangulation of a face (given by vertex indices) of dimension `k`.
    fn triangulate_face(&self, face: &[usize], k: usize, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(vec![face[0]]);
            return;
        }
        let apex = face[0];
        let mut subfaces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for inc in &self.incidence {
            let sub: Vec<usize> = face.iter().copied().filter(|i| inc.contains(i)).collect();
            if sub.len() < k || sub.len() == face.len() || sub.contains(&apex) {
                continue;
            }
            let pts: Vec<&LatticeVector> = sub.iter().map(|&i| &self.vertices[i]).collect();
            if affine_rank(&pts) == k - 1 {
                subfaces.insert(sub);
            }
        }
        for sub in subfaces {
            let mut simplices = Vec::new();
            self.triangulate_face(&sub, k - 1, &mut simplices);
            for mut s in simplices {
                s.insert(0, apex);
                out.push(s);
            }
        }
    }

    /// A triangulation into full-dimensional simplices (vertex index lists);
    /// empty for lower-dimensional polytopes.
    pub fn triangulation(&self) -> Vec<Vec<usize>> {
        if !self.is_full_dimensional() {
            return Vec::new();
        }
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let mut out = Vec::new();
        self.triangulate_face(&all, self.dim, &mut out);
        out
    }

    /// `n! vol(P)`, an integer; 0 when `dim < n`.
    pub fn normalized_volume(&self) -> u64 {
        if self.ambient == 0 {
            return 1;
        }
        self.triangulation()
            .iter()
            .map(|s| {
                let base = &self.vertices[s[0]];
                let m: Vec<Vec<i128>> = s[1..].iter().map(|&i| to_i128(&(&self.vertices[i] - base))).collect();
                det(&m).unsigned_abs() as u64
            })
            .sum()
    }

    pub fn volume(&self) -> Volume {
        Volume {
            value: Ratio::new(self.normalized_volume() as i64, factorial(self.ambient)),
            degenerate: !self.is_full_dimensional(),
        }
    }

    /// Set of primitive inward facet normals.
    pub fn facet_normals(&self) -> BTreeSet<Vec<i64>> {
        self.facets.iter().map(|f| f.normal.clone()).collect()
    }
}

impl fmt::Debug for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polytope(dim {}, vertices {:?})", self.dim, self.vertices)
    }
}

impl Serialize for Polytope {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.vertices.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polytope {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pts: Vec<LatticeVector> = Vec::deserialize(d)?;
        Polytope::hull(pts).map_err(serde::de::Error::custom)
    }
}

/// Minkowski sum of a nonempty list of polytopes.
pub fn minkowski_sum_all<'a>(polys: impl IntoIterator<Item = &'a Polytope>) -> Result<Polytope, LatticeError> {
    let mut it = polys.into_iter();
    let first = it.next().ok_or(LatticeError::Empty)?.clone();
    it.try_fold(first, |acc, p| acc.minkowski_sum(p))
}

/// Normalized mixed volume `V(P_1, ..., P_n)` of n polytopes in R^n, with
/// `V(P, ..., P) = n! vol(P)`, by inclusion-exclusion over partial Minkowski sums.
pub fn mixed_volume(polys: &[Polytope]) -> Result<u64, LatticeError> {
    let n = polys.first().ok_or(LatticeError::Empty)?.ambient_dim();
    if polys.len() != n {
        return Err(LatticeError::WrongCount { expected: n, got: polys.len() });
    }
    if let Some(p) = polys.iter().find(|p| p.ambient_dim() != n) {
        return Err(LatticeError::DimensionMismatch { expected: n, got: p.ambient_dim() });
    }
    // Partial sums by subset mask, each built from the mask without its top bit.
    let mut sums: BTreeMap<usize, Polytope> = BTreeMap::new();
    let mut total: i128 = 0;
    for mask in 1usize..(1 << n) {
        let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
        let rest = mask & !(1 << top);
        let sum = if rest == 0 { polys[top].clone() } else { sums[&rest].minkowski_sum(&polys[top])? };
        let sign = if (n - mask.count_ones() as usize).is_multiple_of(2) { 1 } else { -1 };
        total += sign * sum.normalized_volume() as i128;
        sums.insert(mask, sum);
    }
    let nf = factorial(n) as i128;
    debug_assert_eq!(total % nf, 0, "mixed volume not integral");
    debug_assert!(total >= 0);
    Ok((total / nf) as u64)
}

fn search_translation(
    b: &[LatticeVector],
    p: &Polytope,
    strict: bool,
) -> Option<LatticeVector> {
    let first = b.first()?;
    let n = p.ambient_dim();
    if first.dim() != n || (strict && !p.is_full_dimensional()) {
        return None;
    }
    let bh = Polytope::hull(b.to_vec()).ok()?;
    let (plo, phi) = p.bounding_box();
    let (blo, bhi) = bh.bounding_box();
    let lo: Vec<i64> = (0..n).map(|j| plo[j] - bhi[j]).collect();
    let hi: Vec<i64> = (0..n).map(|j| phi[j] - blo[j]).collect();
    let fits = |t: &[i64]| {
        bh.vertices().iter().all(|v| {
            let u: Vec<i64> = v.iter().zip(t).map(|(a, b)| a + b).collect();
            if strict {
                p.contains_interior(&u)
            } else {
                p.contains(&u)
            }
        })
    };
    let mut t = lo.clone();
    loop {
        if fits(&t) {
            return Some(LatticeVector(t));
        }
        let mut j = n;
        loop {
            if j == 0 {
                return None;
            }
            j -= 1;
            if t[j] < hi[j] {
                t[j] += 1;
                t[j + 1..n].copy_from_slice(&lo[j + 1..n]);
                break;
            }
        }
    }
}

/// Lexicographically smallest lattice vector `t` with `B + t` inside the interior
/// of `P`, if any.
pub fn translate_into_interior(b: &[LatticeVector], p: &Polytope) -> Option<LatticeVector> {
    search_translation(b, p, true)
}

/// Lexicographically smallest lattice vector `t` with `B + t ⊆ P`, if any.
pub fn translate_into(b: &[LatticeVector], p: &Polytope) -> Option<LatticeVector> {
    search_translation(b, p, false)
}

/// Whether `simplex` is a unimodular lattice simplex of full dimension.
pub fn is_primitive_simplex(simplex: &Polytope) -> bool {
    let n = simplex.ambient_dim();
    let v = simplex.vertices();
    if v.len() != n + 1 || !simplex.is_full_dimensional() {
        return false;
    }
    let m: Vec<Vec<i128>> = v[1..].iter().map(|x| to_i128(&(x - &v[0]))).collect();
    det(&m).abs() == 1
}

/// Whether the differences `a - a_0` generate Z^n as a lattice.
pub fn affinely_generates(points: &[LatticeVector]) -> bool {
    let Some(a0) = points.first() else { return false };
    let n = a0.dim();
    if n == 0 {
        return true;
    }
    let rows: Vec<Vec<i128>> = points[1..].iter().map(|p| to_i128(&(p - a0))).collect();
    let diag = smith_diagonal(&rows, n);
    diag.len() == n && diag.iter().all(|&x| x == 1)
}

/// Primitive vector in the direction of `v` (unchanged if zero).
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let mut w = to_i128(v);
    make_primitive(&mut w);
    w.into_iter().map(|x| x as i64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[i64]) -> LatticeVector {
        LatticeVector(v.to_vec())
    }

    fn hexagon() -> Polytope {
        Polytope::hull([[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1], [1, 1]]).unwrap()
    }

    #[test]
    fn hull_drops_midpoints() {
        let p = Polytope::hull([[0, 0], [2, 0], [0, 2], [1, 1]]).unwrap();
        assert_eq!(p.vertices(), &[lv(&[0, 0]), lv(&[0, 2]), lv(&[2, 0])]);
        assert_eq!(p.facets().len(), 3);
    }

    #[test]
    fn hexagon_vertices() {
        let p = hexagon();
        let expect: BTreeSet<_> =
            [[0, 0], [1, 0], [2, 1], [2, 2], [1, 2], [0, 1]].iter().map(|v| lv(v)).collect();
        assert_eq!(p.vertices().iter().cloned().collect::<BTreeSet<_>>(), expect);
        assert_eq!(p.normalized_volume(), 6);
        assert_eq!(p.volume().value, Ratio::from_integer(3));
    }

    #[test]
    fn degenerate_shapes() {
        let pt = Polytope::point([3, -1]);
        assert_eq!(pt.dim(), 0);
        assert_eq!(pt.vertices(), &[lv(&[3, -1])]);
        assert_eq!(pt.lattice_points(), vec![lv(&[3, -1])]);
        assert!(pt.interior_lattice_points().is_empty());

        let seg = Polytope::hull([[0, 0], [1, 1], [3, 3]]).unwrap();
        assert_eq!(seg.dim(), 1);
        assert_eq!(seg.vertices(), &[lv(&[0, 0]), lv(&[3, 3])]);
        assert_eq!(seg.lattice_points().len(), 4);
        assert!(!seg.contains(&[1, 0]));
        let v = seg.volume();
        assert!(v.degenerate);
        assert_eq!(v.value, Ratio::from_integer(0));

        assert_eq!(Polytope::hull(Vec::<LatticeVector>::new()), Err(LatticeError::Empty));
        assert!(matches!(
            Polytope::hull([lv(&[0, 0]), lv(&[1])]),
            Err(LatticeError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn minkowski_examples() {
        let sq = Polytope::unit_cube(2);
        assert_eq!(sq.minkowski_sum(&sq).unwrap(), Polytope::lattice_box(&[2, 2]));
        let s1 = Polytope::segment([0, 0], [1, 0]).unwrap();
        let s2 = Polytope::segment([0, 0], [0, 1]).unwrap();
        assert_eq!(s1.minkowski_sum(&s2).unwrap(), sq);
        assert_eq!(sq.scale(3).unwrap(), Polytope::lattice_box(&[3, 3]));
        assert_eq!(sq.scale(0), Err(LatticeError::BadScale(0)));
        assert!(sq.minkowski_sum(&Polytope::unit_cube(3)).is_err());
    }

    #[test]
    fn lattice_point_counts() {
        let sq = Polytope::unit_cube(2);
        assert_eq!(sq.lattice_points().len(), 4);
        assert!(sq.interior_lattice_points().is_empty());
        assert_eq!(Polytope::lattice_box(&[2, 2]).interior_lattice_points(), vec![lv(&[1, 1])]);
        assert_eq!(Polytope::simplex(2, 3).interior_lattice_points(), vec![lv(&[1, 1])]);
    }

    #[test]
    fn volumes() {
        for n in 1..=4 {
            let c = Polytope::unit_cube(n);
            assert_eq!(c.volume().value, Ratio::from_integer(1));
            assert_eq!(c.normalized_volume() as i64, factorial(n));
            assert_eq!(Polytope::simplex(n, 1).normalized_volume(), 1);
        }
        assert_eq!(Polytope::simplex(3, 2).normalized_volume(), 8);
    }

    #[test]
    fn mixed_volume_examples() {
        let d = |a: i64, b: i64| Polytope::lattice_box(&[a, b]);
        // permanent of [[1,2],[3,4]] = 10
        assert_eq!(mixed_volume(&[d(1, 2), d(3, 4)]).unwrap(), 10);
        let sq = Polytope::unit_cube(2);
        assert_eq!(mixed_volume(&[sq.clone(), sq.clone()]).unwrap(), 2);
        assert_eq!(mixed_volume(&[hexagon(), sq.clone()]).unwrap(), 4);
        assert!(matches!(mixed_volume(std::slice::from_ref(&sq)), Err(LatticeError::WrongCount { .. })));
        // segments in different directions: V = 1
        let s1 = Polytope::segment([0, 0], [1, 0]).unwrap();
        let s2 = Polytope::segment([0, 0], [0, 1]).unwrap();
        assert_eq!(mixed_volume(&[s1.clone(), s2]).unwrap(), 1);
        assert_eq!(mixed_volume(&[s1.clone(), s1]).unwrap(), 0);
        let cubes: Vec<Polytope> = (0..4).map(|_| Polytope::unit_cube(4)).collect();
        assert_eq!(mixed_volume(&cubes).unwrap(), 24);
    }

    #[test]
    fn translations() {
        let sq = Polytope::unit_cube(2).lattice_points();
        let big = Polytope::lattice_box(&[3, 3]);
        assert_eq!(translate_into_interior(&sq, &big), Some(lv(&[1, 1])));
        let b2 = Polytope::lattice_box(&[2, 2]).lattice_points();
        assert_eq!(translate_into_interior(&b2, &big), None);
        assert_eq!(translate_into(&b2, &big), Some(lv(&[0, 0])));
        assert_eq!(translate_into(&b2, &Polytope::unit_cube(2)), None);
    }

    #[test]
    fn primitive_simplices() {
        let s = |pts: &[[i64; 2]]| Polytope::hull(pts.to_vec()).unwrap();
        assert!(is_primitive_simplex(&s(&[[0, 0], [1, 0], [0, 1]])));
        assert!(is_primitive_simplex(&s(&[[0, 0], [1, 0], [1, 1]])));
        assert!(is_primitive_simplex(&s(&[[5, 5], [6, 5], [6, 6]])));
        assert!(!is_primitive_simplex(&s(&[[0, 0], [2, 0], [0, 1]])));
        assert!(!is_primitive_simplex(&Polytope::unit_cube(2)));
    }

    #[test]
    fn affine_generation() {
        assert!(affinely_generates(&[lv(&[0, 0]), lv(&[1, 0]), lv(&[0, 1])]));
        assert!(!affinely_generates(&[lv(&[0, 0]), lv(&[2, 0]), lv(&[0, 2])]));
        assert!(affinely_generates(&Polytope::unit_cube(2).lattice_points()));
        assert!(!affinely_generates(&[lv(&[0, 0]), lv(&[1, 1])]));
        assert!(affinely_generates(&[lv(&[1, 0]), lv(&[3, 1]), lv(&[6, 2])]));
    }

    #[test]
    fn json_form_is_vertex_list() {
        let sq = Polytope::unit_cube(2);
        let s = serde_json::to_string(&sq).unwrap();
        assert_eq!(s, "[[0,0],[0,1],[1,0],[1,1]]");
        let back: Polytope = serde_json::from_str("[[0,0],[1,1],[0,1],[1,0],[0,0]]").unwrap();
        assert_eq!(back, sq);
    }
}
