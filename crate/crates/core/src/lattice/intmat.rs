//! Small exact integer linear algebra: determinants, rank, rational nullspaces and
//! Smith normal form. Sizes here are tiny (n <= 7), entries fit comfortably in i128.

use num_rational::Ratio;

pub(crate) fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn gcd_all(v: &[i128]) -> i128 {
    v.iter().fold(0, |g, &x| gcd(g, x))
}

/// Divide by the gcd of the entries (no-op on the zero vector).
pub(crate) fn make_primitive(v: &mut [i128]) {
    let g = gcd_all(v);
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

/// Determinant of a square matrix via Bareiss fraction-free elimination.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn to_ratio(rows: &[Vec<i128>]) -> Vec<Vec<Ratio<i128>>> {
    rows.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect()).collect()
}

/// Reduced row echelon form over Q; returns the pivot columns.
fn rref(a: &mut [Vec<Ratio<i128>>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != Ratio::from_integer(0)) else {
            continue;
        };
        a.swap(r, p);
        let inv = Ratio::from_integer(1) / a[r][c];
        a[r].iter_mut().for_each(|x| *x *= inv);
        for i in 0..a.len() {
            if i != r && a[i][c] != Ratio::from_integer(0) {
                let f = a[i][c];
                for j in 0..ncols {
                    let t = a[r][j] * f;
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    pivots
}

/// Rank and pivot columns of the row space.
pub fn rank_and_pivots(rows: &[Vec<i128>], ncols: usize) -> (usize, Vec<usize>) {
    let mut a = to_ratio(rows);
    let piv = rref(&mut a, ncols);
    (piv.len(), piv)
}

pub fn rank(rows: &[Vec<i128>], ncols: usize) -> usize {
    rank_and_pivots(rows, ncols).0
}

/// Primitive integer basis of `{x : rows * x = 0}`.
pub fn nullspace(rows: &[Vec<i128>], ncols: usize) -> Vec<Vec<i128>> {
    let mut a = to_ratio(rows);
    let piv = rref(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Ratio::from_integer(0); ncols];
            v[f] = Ratio::from_integer(1);
            for (i, &pc) in piv.iter().enumerate() {
                v[pc] = -a[i][f];
            }
            let l = v.iter().fold(1i128, |l, x| {
                let d = *x.denom();
                l / gcd(l, d) * d
            });
            let mut out: Vec<i128> = v.iter().map(|x| (x * Ratio::from_integer(l)).to_integer()).collect();
            make_primitive(&mut out);
            out
        })
        .collect()
}

/// Nonzero diagonal entries of the Smith normal form (the elementary divisors), each
/// dividing the next.
pub fn smith_diagonal(rows: &[Vec<i128>], ncols: usize) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = rows.to_vec();
    let nrows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry of the trailing block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nrows {
                let f = a[i][t] / a[t][t];
                if f != 0 {
                    for j in t..ncols {
                        a[i][j] -= f * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..ncols {
                let f = a[t][j] / a[t][t];
                if f != 0 {
                    for row in a.iter_mut() {
                        row[j] -= f * row[t];
                    }
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // enforce divisibility of the remaining block
                let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| a[i][j] % a[t][t] != 0));
                match bad {
                    Some(i) => {
                        let (lo, hi) = a.split_at_mut(i);
                        for (x, y) in lo[t].iter_mut().zip(hi[0].iter()) {
                            *x += *y;
                        }
                    }
                    None => break,
                }
            }
            // move the smallest nonzero of row t / column t to the pivot
            let mut bi = t;
            let mut bj = t;
            for i in t..nrows {
                if a[i][t] != 0 && (a[bi][bj] == 0 || a[i][t].abs() < a[bi][bj].abs()) {
                    bi = i;
                    bj = t;
                }
            }
            for j in t..ncols {
                if a[t][j] != 0 && (a[bi][bj] == 0 || a[t][j].abs() < a[bi][bj].abs()) {
                    bi = t;
                    bj = j;
                }
            }
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}
