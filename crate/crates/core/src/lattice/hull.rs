//! Facet enumeration for full-dimensional point sets by the double description
//! method on the homogenized cone `{(w, a) : <w, x> + a >= 0 for all points x}`.
//! Its extreme rays are exactly the facet inequalities of the convex hull.

use super::intmat::{det, make_primitive, rank};

#[derive(Clone, Debug)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn new(n: usize) -> Self {
        Bitset(vec![0; n.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn is_subset_of(&self, o: &Bitset) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: Vec<i128>,
    zeros: Bitset,
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Facet inequalities `<w, x> + a >= 0` (w primitive) of the hull of `points`,
/// which must affinely span `R^d`, `d >= 1`. Output is sorted.
pub(crate) fn facets(points: &[Vec<i64>]) -> Vec<(Vec<i64>, i64)> {
    let d = points[0].len();
    let rows: Vec<Vec<i128>> = points
        .iter()
        .map(|p| p.iter().map(|&x| x as i128).chain(std::iter::once(1)).collect())
        .collect();
    let width = d + 1;

    // Greedy basis of d+1 independent constraint rows.
    let mut basis: Vec<usize> = Vec::with_capacity(width);
    for i in 0..rows.len() {
        let mut trial: Vec<Vec<i128>> = basis.iter().map(|&j| rows[j].clone()).collect();
        trial.push(rows[i].clone());
        if rank(&trial, width) == trial.len() {
            basis.push(i);
            if basis.len() == width {
                break;
            }
        }
    }
    assert_eq!(basis.len(), width, "points do not affinely span the ambient space");

    // Initial rays: columns of the adjugate, so that B r_j = |det B| e_j.
    let bmat: Vec<Vec<i128>> = basis.iter().map(|&j| rows[j].clone()).collect();
    let sign = det(&bmat).signum();
    let minor = |skip_r: usize, skip_c: usize| -> i128 {
        let m: Vec<Vec<i128>> = bmat
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != skip_r)
            .map(|(_, row)| row.iter().enumerate().filter(|(c, _)| *c != skip_c).map(|(_, &x)| x).collect())
            .collect();
        det(&m)
    };
    let mut rays: Vec<Ray> = (0..width)
        .map(|j| {
            let mut v: Vec<i128> = (0..width)
                .map(|i| {
                    let s = if (i + j) % 2 == 0 { 1 } else { -1 };
                    sign * s * minor(j, i)
                })
                .collect();
            make_primitive(&mut v);
            let mut zeros = Bitset::new(rows.len());
            for (k, &b) in basis.iter().enumerate() {
                if k != j {
                    zeros.insert(b);
                }
            }
            Ray { v, zeros }
        })
        .collect();

    for (i, row) in rows.iter().enumerate() {
        if basis.contains(&i) {
            continue;
        }
        let vals: Vec<i128> = rays.iter().map(|r| dot(row, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k] < 0).collect();
        if neg.is_empty() {
            for (k, r) in rays.iter_mut().enumerate() {
                if vals[k] == 0 {
                    r.zeros.insert(i);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for &a in &pos {
            for &b in &neg {
                let common = rays[a].zeros.and(&rays[b].zeros);
                if (common.count() as usize) + 1 < d {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == a || k == b || !common.is_subset_of(&r.zeros));
                if !adjacent {
                    continue;
                }
                let (sa, sb) = (vals[a], -vals[b]);
                let mut v: Vec<i128> = rays[a].v.iter().zip(&rays[b].v).map(|(x, y)| sb * x + sa * y).collect();
                make_primitive(&mut v);
                let mut zeros = common;
                zeros.insert(i);
                next.push(Ray { v, zeros });
            }
        }
        for (k, mut r) in rays.into_iter().enumerate() {
            if vals[k] >= 0 {
                if vals[k] == 0 {
                    r.zeros.insert(i);
                }
                next.push(r);
            }
        }
        rays = next;
    }

    let mut out: Vec<(Vec<i64>, i64)> = rays
        .into_iter()
        .map(|r| {
            let mut w: Vec<i128> = r.v[..d].to_vec();
            let mut a = r.v[d];
            let g = super::intmat::gcd_all(&w);
            debug_assert!(g > 0, "degenerate facet normal");
            if g > 1 {
                debug_assert_eq!(a % g, 0);
                w.iter_mut().for_each(|x| *x /= g);
                a /= g;
            }
            (w.into_iter().map(|x| x as i64).collect(), a as i64)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
