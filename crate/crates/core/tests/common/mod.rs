//! Shared helpers and independent oracles for the integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use toric_codes::cli::PAPER_FIXTURES;
use toric_codes::field::{Field, FieldElement};
use toric_codes::laurent::LaurentPolynomial;
use toric_codes::lattice::{LatticeVector, Polytope};
use toric_codes::problem::Problem;
use toric_codes::system::PolySystem;

pub fn fixture(name: &str) -> Problem {
    let (_, json) = PAPER_FIXTURES.iter().find(|(n, _)| *n == name).expect("known fixture");
    Problem::from_json(json).expect("fixture parses")
}

pub fn fixture_json(name: &str) -> &'static str {
    PAPER_FIXTURES.iter().find(|(n, _)| *n == name).expect("known fixture").1
}

/// Product of coefficient vectors modulo a monic modulus over F_p.
pub fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let m = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * m];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for deg in (m..2 * m).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (k, &mk) in modulus.iter().enumerate() {
            let idx = deg - m + k;
            prod[idx] = (prod[idx] + (p as u64 - c) * mk as u64) % p as u64;
        }
    }
    prod[..m].iter().map(|&x| x as u32).collect()
}

/// Brute-force permanent.
pub fn permanent(d: &[Vec<i64>]) -> i64 {
    let n = d.len();
    (0..n).permutations(n).map(|s| s.iter().enumerate().map(|(i, &j)| d[i][j]).product::<i64>()).sum()
}

/// Convex hull (counter-clockwise) by monotone chain.
pub fn hull2d(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Twice the area by the shoelace formula.
pub fn twice_area(pts: &[(i64, i64)]) -> i64 {
    let h = hull2d(pts);
    if h.len() < 3 {
        return 0;
    }
    let s: i64 = (0..h.len()).map(|i| h[i].0 * h[(i + 1) % h.len()].1 - h[(i + 1) % h.len()].0 * h[i].1).sum();
    s.abs()
}

pub fn minkowski2d(a: &[(i64, i64)], b: &[(i64, i64)]) -> Vec<(i64, i64)> {
    a.iter().flat_map(|x| b.iter().map(move |y| (x.0 + y.0, x.1 + y.1))).collect()
}

pub fn to_pairs(p: &Polytope) -> Vec<(i64, i64)> {
    p.vertices().iter().map(|v| (v[0], v[1])).collect()
}

pub fn polytope(pts: &[Vec<i64>]) -> Polytope {
    Polytope::hull(pts.iter().cloned().map(LatticeVector)).unwrap()
}

/// Minimum weight over all nonzero combinations of the rows.
pub fn enumerate_distance(f: &Field, rows: &[Vec<FieldElement>]) -> Option<usize> {
    let k = rows.len();
    let n = rows.first()?.len();
    let q = f.order();
    let mut best: Option<usize> = None;
    for idx in 1..(q as u64).pow(k as u32) {
        let mut c = vec![f.zero(); n];
        let mut r = idx;
        for row in rows {
            let a = f.element((r % q as u64) as u32);
            r /= q as u64;
            for (cj, &x) in c.iter_mut().zip(row) {
                *cj = f.add(*cj, f.mul(a, x));
            }
        }
        let wt = c.iter().filter(|x| !x.is_zero()).count();
        if wt > 0 {
            best = Some(best.map_or(wt, |b| b.min(wt)));
        }
    }
    best
}

/// All torus points where every polynomial vanishes, by direct evaluation.
pub fn brute_force_zeros(sys: &PolySystem) -> Vec<Vec<FieldElement>> {
    let f = sys.field();
    let n = sys.nvars();
    let q1 = f.order() as i64 - 1;
    (0..n)
        .map(|_| 0..q1)
        .multi_cartesian_product()
        .map(|logs| logs.iter().map(|&l| f.exp(l)).collect::<Vec<_>>())
        .filter(|p| sys.polys().iter().all(|g| g.evaluate(p).unwrap().is_zero()))
        .collect()
}

/// `f_i = g(t1) + c_i h(t2)` with `g`, `h` products of `(t - g^r)`.
/// Returns `None` when a constant term cancels.
pub fn split_system(f: &Field, groots: &[i64], hroots: &[i64], c: [i64; 2]) -> Option<PolySystem> {
    let lin = |var: usize, root: i64| {
        let mut e = vec![0, 0];
        e[var] = 1;
        LaurentPolynomial::from_terms(f, 2, [(e, f.one()), (vec![0, 0], f.neg(f.exp(root)))]).unwrap()
    };
    let prod = |var: usize, roots: &[i64]| {
        roots.iter().fold(LaurentPolynomial::constant(f, 2, f.one()), |acc, &r| &acc * &lin(var, r))
    };
    let g = prod(0, groots);
    let h = prod(1, hroots);
    let polys = vec![&g + &h.scale(f.exp(c[0])), &g + &h.scale(f.exp(c[1]))];
    let sys = PolySystem::new(polys).ok()?;
    sys.newton_polytopes().iter().all(Polytope::is_full_dimensional).then_some(sys)
}

/// A split system with `d1 x d2` known rational solutions.
pub fn random_split_system<R: Rng>(f: &Field, d1: usize, d2: usize, rng: &mut R) -> (PolySystem, Vec<Vec<FieldElement>>) {
    let q1 = f.order() as i64 - 1;
    loop {
        let groots = rand::seq::index::sample(rng, q1 as usize, d1).into_iter().map(|i| i as i64).collect_vec();
        let hroots = rand::seq::index::sample(rng, q1 as usize, d2).into_iter().map(|i| i as i64).collect_vec();
        let c0 = rng.random_range(0..q1);
        let c1 = (c0 + rng.random_range(1..q1)) % q1;
        if let Some(sys) = split_system(f, &groots, &hroots, [c0, c1]) {
            let roots = groots
                .iter()
                .cartesian_product(&hroots)
                .map(|(&a, &b)| vec![f.exp(a), f.exp(b)])
                .collect();
            return (sys, roots);
        }
    }
}

pub fn sorted(mut v: Vec<Vec<FieldElement>>) -> Vec<Vec<FieldElement>> {
    v.sort();
    v
}
