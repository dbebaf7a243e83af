//! Finite fields GF(p^m) with a fixed primitive generator.
//!
//! Elements are stored as an index `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` of their
//! coefficient vector modulo the defining polynomial. Multiplication, inversion and
//! powers go through discrete-log / antilog tables built once per field, with the
//! class of `x` as the generator `g`. Coefficient literals use the grammar
//! `0`, `g^K` or `[c0,...,c_{m-1}]`.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest field order accepted (tables are `O(q)`).
pub const MAX_ORDER: u32 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge { p: u32, m: u32 },
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("modulus is reducible (divisible by {factor:?})")]
    Reducible { factor: Vec<u32> },
    #[error("x is not primitive modulo the given polynomial (order {order}, expected {expected})")]
    NotPrimitive { order: u32, expected: u32 },
    #[error("no built-in modulus for GF({p}^{m}); supply one")]
    NoDefault { p: u32, m: u32 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("zero has no discrete logarithm")]
    ZeroLog,
    #[error("invalid coefficient literal {0:?}")]
    BadLiteral(String),
}

/// An element of a [`Field`]. Only meaningful together with the field it came from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Raw table index (coefficients read as base-p digits).
    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }
}

#[derive(Debug)]
struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[k] = g^k` for `k` in `0..2(q-1)`, doubled to skip a modulo in `mul`.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
}

/// GF(p^m) defined by a monic irreducible polynomial in which `x` is primitive.
///
/// Cloning is cheap; the tables are shared.
#[derive(Clone, Debug)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let order = p - 1;
    let mut factors = Vec::new();
    let mut n = order;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            factors.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= p as u64;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        r
    };
    (2..p)
        .find(|&g| factors.iter().all(|&f| powmod(g as u64, (order / f) as u64) != 1))
        .expect("every prime has a primitive root")
}

/// Built-in moduli (constant term first). These are the Conway polynomials, so
/// `g^K` literals agree with the usual computer-algebra conventions.
pub fn default_modulus(p: u32, m: u32) -> Option<Vec<u32>> {
    let table: &[(u32, u32, &[u32])] = &[
        (2, 1, &[1, 1]),
        (2, 2, &[1, 1, 1]),
        (2, 3, &[1, 1, 0, 1]),
        (2, 4, &[1, 1, 0, 0, 1]),
        (2, 5, &[1, 0, 1, 0, 0, 1]),
        (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
        (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
        (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
        (3, 2, &[2, 2, 1]),
        (3, 3, &[1, 2, 0, 1]),
        (5, 2, &[2, 4, 1]),
        (7, 2, &[3, 6, 1]),
    ];
    if let Some((_, _, c)) = table.iter().find(|(tp, tm, _)| *tp == p && *tm == m) {
        return Some(c.to_vec());
    }
    if m == 1 && is_prime(p) {
        let r = smallest_primitive_root(p);
        return Some(vec![(p - r) % p, 1]);
    }
    None
}

// Dense polynomial helpers over F_p, constant term first.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (r[r.len() - 1] as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &bc) in b.iter().enumerate() {
            let t = (c as u64 * bc as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        poly_trim(&mut r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and small
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Returns a monic factor of degree `1..=deg/2` if `f` is reducible.
fn find_factor(f: &[u32], p: u32) -> Option<Vec<u32>> {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push((c % p as u64) as u32);
                c /= p as u64;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return Some(g);
            }
        }
    }
    None
}

impl Field {
    /// GF(p^m) with the built-in modulus for `(p, m)`.
    pub fn new(p: u32, m: u32) -> Result<Field, FieldError> {
        Self::with_modulus(p, m, None)
    }

    /// GF(p^m) defined by `modulus` (constant term first, monic, degree m), or the
    /// built-in default when `None`.
    pub fn with_modulus(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER as u64)
            .ok_or(FieldError::TooLarge { p, m })? as u32;
        let modulus = match modulus {
            Some(c) => c.to_vec(),
            None => default_modulus(p, m).ok_or(FieldError::NoDefault { p, m })?,
        };
        if modulus.len() != m as usize + 1 {
            return Err(FieldError::BadModulus(format!(
                "expected {} coefficients, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if let Some(&c) = modulus.iter().find(|&&c| c >= p) {
            return Err(FieldError::BadModulus(format!("coefficient {c} is not reduced mod {p}")));
        }
        if modulus[m as usize] != 1 {
            return Err(FieldError::BadModulus("modulus must be monic".into()));
        }
        if let Some(factor) = find_factor(&modulus, p) {
            return Err(FieldError::Reducible { factor });
        }

        // Powers of x by repeated multiplication on digit vectors.
        let order = q - 1;
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut cur = vec![0u32; m as usize];
        cur[0] = 1;
        let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        for k in 0..order {
            let idx = encode(&cur);
            if k > 0 && idx == 1 {
                return Err(FieldError::NotPrimitive { order: k, expected: order });
            }
            exp[k as usize] = idx;
            log[idx as usize] = k;
            // cur *= x  (mod modulus)
            let top = cur[m as usize - 1];
            for i in (1..m as usize).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (i, c) in cur.iter_mut().enumerate() {
                    let t = (top as u64 * modulus[i] as u64 % p as u64) as u32;
                    *c = (*c + p - t) % p;
                }
            }
        }
        if encode(&cur) != 1 {
            return Err(FieldError::NotPrimitive { order: 0, expected: order });
        }
        for k in 0..order as usize {
            exp[k + order as usize] = exp[k];
        }
        Ok(Field(Arc::new(Tables { p, m, q, modulus, exp, log })))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    /// Number of elements q.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The distinguished generator g (class of x).
    pub fn generator(&self) -> FieldElement {
        FieldElement(self.0.exp[1 % (self.0.q - 1) as usize])
    }

    /// `g^k`, any integer k.
    pub fn exp(&self, k: i64) -> FieldElement {
        let n = (self.0.q - 1) as i64;
        FieldElement(self.0.exp[k.rem_euclid(n) as usize])
    }

    /// Element with raw index `i` (see [`FieldElement::index`]); `i < q`.
    pub fn element(&self, i: u32) -> FieldElement {
        assert!(i < self.0.q, "index {i} out of range for {self}");
        FieldElement(i)
    }

    /// Image of an integer under Z -> F_p -> GF(q).
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Element with the given coefficient vector (constant first, at most m entries).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() > self.0.m as usize {
            return Err(FieldError::BadLiteral(format!("{coeffs:?}: more than {} coefficients", self.0.m)));
        }
        let p = self.0.p;
        if coeffs.iter().any(|&c| c >= p) {
            return Err(FieldError::BadLiteral(format!("{coeffs:?}: coefficient not reduced mod {p}")));
        }
        Ok(FieldElement(coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c)))
    }

    /// Coefficient vector of length m (constant first).
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let p = self.0.p;
        let mut v = a.0;
        (0..self.0.m)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    /// All q elements, zero first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(FieldElement)
    }

    /// The q-1 nonzero elements in the order g^0, g^1, ...
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.0.exp[..(self.0.q - 1) as usize].iter().map(|&e| FieldElement(e))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.0.p;
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y, mut r, mut place) = (a.0, b.0, 0u32, 1u32);
        while x > 0 || y > 0 {
            r += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FieldElement(r)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        let (mut x, mut r, mut place) = (a.0, 0u32, 1u32);
        while x > 0 {
            r += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FieldElement(r)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let t = &self.0;
        FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let t = &self.0;
        let n = t.q - 1;
        Ok(FieldElement(t.exp[((n - t.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for any integer e; `0^e` is 1 for e = 0, 0 for e > 0 and an error for e < 0.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            return match e {
                0 => Ok(FieldElement::ONE),
                e if e > 0 => Ok(FieldElement::ZERO),
                _ => Err(FieldError::ZeroInverse),
            };
        }
        let l = self.0.log[a.0 as usize] as i64;
        Ok(self.exp(l * e.rem_euclid((self.0.q - 1) as i64)))
    }

    /// Discrete log to base g, in `0..q-1`.
    pub fn dlog(&self, a: FieldElement) -> Result<u32, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::ZeroLog);
        }
        Ok(self.0.log[a.0 as usize])
    }

    /// Parse a coefficient literal: `0`, `g^K` or `[c0,...]`.
    pub fn parse(&self, s: &str) -> Result<FieldElement, FieldError> {
        let t = s.trim();
        let bad = || FieldError::BadLiteral(s.to_string());
        if t == "0" {
            return Ok(FieldElement::ZERO);
        }
        if let Some(k) = t.strip_prefix("g^") {
            let k: u64 = k.trim().parse().map_err(|_| bad())?;
            return Ok(self.exp((k % (self.0.q as u64 - 1)) as i64));
        }
        if let Some(body) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let body = body.trim();
            let coeffs: Vec<u32> = if body.is_empty() {
                Vec::new()
            } else {
                body.split(',')
                    .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
                    .collect::<Result<_, _>>()?
            };
            return self.from_coeffs(&coeffs);
        }
        Err(bad())
    }

    /// Canonical literal: `0` or `g^K` with K in `0..q-1`.
    pub fn format(&self, a: FieldElement) -> String {
        match self.dlog(a) {
            Ok(k) => format!("g^{k}"),
            Err(_) => "0".to_string(),
        }
    }

    /// Display adapter for an element.
    pub fn display(&self, a: FieldElement) -> impl fmt::Display + '_ {
        struct D<'a>(&'a Field, FieldElement);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format(self.1))
            }
        }
        D(self, a)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Multiplicative order of x modulo f by naive powering, independent of the tables.
    fn naive_order_of_x(f: &[u32], p: u32) -> u32 {
        let mut cur = vec![0u32, 1];
        let mut k = 1;
        loop {
            let r = poly_rem(&cur, f, p);
            if r == vec![1] {
                return k;
            }
            cur = vec![0];
            cur.extend(r);
            k += 1;
            assert!(k < 1 << 17);
        }
    }

    #[test]
    fn default_gf16_and_gf128() {
        let f16 = Field::new(2, 4).unwrap();
        assert_eq!(f16.modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(f16.order(), 16);
        assert!(find_factor(&[1, 1, 0, 0, 1], 2).is_none());
        assert_eq!(naive_order_of_x(&[1, 1, 0, 0, 1], 2), 15);

        let f128 = Field::new(2, 7).unwrap();
        assert_eq!(f128.modulus(), &[1, 1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(naive_order_of_x(&[1, 1, 0, 0, 0, 0, 0, 1], 2), 127);
    }

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(
            Field::with_modulus(2, 2, Some(&[1, 0, 1])),
            Err(FieldError::Reducible { factor: vec![1, 1] })
        );
        // x^4+x^3+x^2+x+1 is irreducible but x has order 5.
        assert!(matches!(
            Field::with_modulus(2, 4, Some(&[1, 1, 1, 1, 1])),
            Err(FieldError::NotPrimitive { order: 5, .. })
        ));
        assert_eq!(Field::new(2, 11), Err(FieldError::NoDefault { p: 2, m: 11 }));
        assert_eq!(Field::new(4, 1), Err(FieldError::NotPrime(4)));
        assert_eq!(Field::new(2, 17), Err(FieldError::TooLarge { p: 2, m: 17 }));
        assert!(matches!(Field::with_modulus(2, 2, Some(&[1, 1])), Err(FieldError::BadModulus(_))));
    }

    #[test]
    fn all_defaults_validate() {
        for (p, m) in [(2, 1), (2, 2), (2, 3), (2, 5), (2, 6), (2, 8), (3, 1), (3, 2), (3, 3), (5, 2), (7, 1), (7, 2), (13, 1)] {
            let f = Field::new(p, m).unwrap_or_else(|e| panic!("GF({p}^{m}): {e}"));
            assert_eq!(f.order(), p.pow(m));
        }
    }

    #[test]
    fn gf16_examples() {
        let f = Field::new(2, 4).unwrap();
        let g = |k| f.exp(k);
        assert_eq!(f.add(g(1), g(2)), g(5));
        assert_eq!(f.mul(g(14), g(5)), g(4));
        assert_eq!(f.dlog(f.one()), Ok(0));
        assert_eq!(f.dlog(f.generator()), Ok(1));
        assert_eq!(f.dlog(f.mul(g(5), g(12))), Ok(2));
        assert_eq!(f.inv(f.zero()), Err(FieldError::ZeroInverse));
        assert_eq!(f.dlog(f.zero()), Err(FieldError::ZeroLog));
        for a in f.elements() {
            assert!(f.add(a, a).is_zero());
        }
    }

    #[test]
    fn literals_round_trip() {
        let f = Field::new(2, 4).unwrap();
        assert_eq!(f.parse("0").unwrap(), f.zero());
        assert_eq!(f.parse("g^0").unwrap(), f.one());
        assert_eq!(f.parse("g^16").unwrap(), f.generator());
        // x^4 = x + 1
        assert_eq!(f.parse("[1,1,0,0]").unwrap(), f.exp(4));
        assert_eq!(f.parse(" [0, 1] ").unwrap(), f.generator());
        for a in f.elements() {
            assert_eq!(f.parse(&f.format(a)).unwrap(), a);
        }
        for bad in ["", "1", "g^", "g^x", "[2]", "[0,0,0,0,1]", "x"] {
            assert!(f.parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn odd_characteristic_axioms() {
        for (p, m) in [(3, 2), (5, 2), (7, 1), (3, 3)] {
            let f = Field::new(p, m).unwrap();
            for a in f.elements() {
                assert!(f.add(a, f.neg(a)).is_zero());
                assert_eq!(f.sub(a, a), f.zero());
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    // digitwise add agrees with coefficient addition
                    let s: Vec<u32> =
                        f.coeffs(a).iter().zip(f.coeffs(b)).map(|(x, y)| (x + y) % p).collect();
                    assert_eq!(f.from_coeffs(&s).unwrap(), f.add(a, b));
                }
            }
        }
    }

    #[test]
    fn pow_and_inverse() {
        let f = Field::new(3, 2).unwrap();
        let q = f.order() as i64;
        for a in f.nonzero_elements() {
            assert_eq!(f.pow(a, q - 1).unwrap(), f.one());
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            assert_eq!(f.pow(a, -1).unwrap(), f.inv(a).unwrap());
        }
        assert_eq!(f.pow(f.zero(), 0).unwrap(), f.one());
        assert!(f.pow(f.zero(), -2).is_err());
        for k in 0..(q - 1) {
            assert_eq!(f.dlog(f.exp(k)).unwrap() as i64, k);
        }
    }

    #[test]
    fn from_int_reduces_mod_p() {
        let f = Field::new(2, 4).unwrap();
        assert_eq!(f.from_int(3), f.one());
        assert_eq!(f.from_int(-2), f.zero());
        let f = Field::new(5, 2).unwrap();
        assert_eq!(f.add(f.from_int(3), f.from_int(4)), f.from_int(2));
        assert_eq!(f.from_int(-1), f.neg(f.one()));
    }
}
