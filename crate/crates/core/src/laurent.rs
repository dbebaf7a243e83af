//! Laurent polynomials over GF(q): torus evaluation, Newton polytopes, face
//! restrictions, ring operations and the toric Jacobian.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};
use crate::lattice::{LatticeError, LatticeVector, Polytope};
use crate::linalg::Matrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("point has a zero coordinate (index {0}); evaluation is only defined on the torus")]
    ZeroCoordinate(usize),
    #[error("expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("the zero polynomial has no Newton polytope")]
    ZeroPolynomial,
    #[error("polynomials are defined over different fields")]
    FieldMismatch,
    #[error("expected {expected} polynomials, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// One term in the JSON form `{"exp": [..], "coef": "<literal>"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exp: Vec<i64>,
    pub coef: String,
}

/// A finite sum `sum c_a t^a` with `a` in Z^n and nonzero `c_a`.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    field: Field,
    nvars: usize,
    terms: BTreeMap<LatticeVector, FieldElement>,
}

impl LaurentPolynomial {
    pub fn zero(field: &Field, nvars: usize) -> Self {
        LaurentPolynomial { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: &Field, nvars: usize, c: FieldElement) -> Self {
        Self::monomial(field, LatticeVector::zero(nvars), c)
    }

    pub fn monomial(field: &Field, exp: impl Into<LatticeVector>, c: FieldElement) -> Self {
        let exp = exp.into();
        let mut p = Self::zero(field, exp.dim());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// Sum of the given terms; repeated exponents are added.
    pub fn from_terms<I, E>(field: &Field, nvars: usize, terms: I) -> Result<Self, LaurentError>
    where
        I: IntoIterator<Item = (E, FieldElement)>,
        E: Into<LatticeVector>,
    {
        let mut p = Self::zero(field, nvars);
        for (e, c) in terms {
            let e = e.into();
            if e.dim() != nvars {
                return Err(LaurentError::Arity { expected: nvars, got: e.dim() });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Parse the JSON term list.
    pub fn from_json_terms(field: &Field, nvars: usize, terms: &[Term]) -> Result<Self, LaurentError> {
        let parsed: Vec<(LatticeVector, FieldElement)> = terms
            .iter()
            .map(|t| Ok((LatticeVector(t.exp.clone()), field.parse(&t.coef)?)))
            .collect::<Result<_, LaurentError>>()?;
        Self::from_terms(field, nvars, parsed)
    }

    pub fn to_json_terms(&self) -> Vec<Term> {
        self.terms.iter().map(|(e, &c)| Term { exp: e.0.clone(), coef: self.field.format(c) }).collect()
    }

    fn add_term(&mut self, e: LatticeVector, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let f = self.field.clone();
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&LatticeVector, FieldElement)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coeff(&self, exp: &LatticeVector) -> FieldElement {
        self.terms.get(exp).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn support(&self) -> Vec<LatticeVector> {
        self.terms.keys().cloned().collect()
    }

    fn check_point(&self, p: &[FieldElement]) -> Result<(), LaurentError> {
        if p.len() != self.nvars {
            return Err(LaurentError::Arity { expected: self.nvars, got: p.len() });
        }
        match p.iter().position(|x| x.is_zero()) {
            Some(i) => Err(LaurentError::ZeroCoordinate(i)),
            None => Ok(()),
        }
    }

    /// Value at a torus point.
    pub fn evaluate(&self, p: &[FieldElement]) -> Result<FieldElement, LaurentError> {
        self.check_point(p)?;
        let logs: Vec<i64> = p.iter().map(|&x| self.field.dlog(x).map(i64::from)).collect::<Result<_, _>>()?;
        Ok(self.evaluate_logs(&logs))
    }

    /// Value at the point `(g^l_1, ..., g^l_n)`.
    pub fn evaluate_logs(&self, logs: &[i64]) -> FieldElement {
        let f = &self.field;
        self.terms.iter().fold(FieldElement::ZERO, |acc, (e, &c)| {
            let l = f.dlog(c).expect("stored coefficients are nonzero") as i64 + e.dot(logs);
            f.add(acc, f.exp(l))
        })
    }

    pub fn newton_polytope(&self) -> Result<Polytope, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroPolynomial);
        }
        Ok(Polytope::hull(self.terms.keys().cloned())?)
    }

    /// The terms whose exponents minimize `<a, w>`.
    pub fn face_restriction(&self, w: &[i64]) -> Self {
        let min = self.terms.keys().map(|e| e.dot(w)).min();
        let terms = self.terms.iter().filter(|(e, _)| Some(e.dot(w)) == min).map(|(e, &c)| (e.clone(), c)).collect();
        LaurentPolynomial { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let f = &self.field;
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(e, &x)| (e.clone(), f.mul(x, c))).collect()
        };
        LaurentPolynomial { field: self.field.clone(), nvars: self.nvars, terms }
    }

    /// `t^a * self`.
    pub fn mul_monomial(&self, a: &LatticeVector) -> Self {
        let terms = self.terms.iter().map(|(e, &c)| (e + a, c)).collect();
        LaurentPolynomial { field: self.field.clone(), nvars: self.nvars, terms }
    }

    fn map_coeffs(&self, g: impl Fn(&LatticeVector, FieldElement) -> (LatticeVector, FieldElement)) -> Self {
        let mut out = Self::zero(&self.field, self.nvars);
        for (e, &c) in &self.terms {
            let (e2, c2) = g(e, c);
            out.add_term(e2, c2);
        }
        out
    }

    /// Formal partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let f = &self.field;
        self.map_coeffs(|e, c| {
            let mut e2 = e.clone();
            e2.0[i] -= 1;
            (e2, f.mul(f.from_int(e[i]), c))
        })
    }

    /// `t_i d/dt_i`, which multiplies `c_a t^a` by `a_i`.
    pub fn toric_derivative(&self, i: usize) -> Self {
        let f = &self.field;
        self.map_coeffs(|e, c| (e.clone(), f.mul(f.from_int(e[i]), c)))
    }

    fn check_compatible(&self, o: &Self) {
        assert!(self.field == o.field, "polynomials over different fields");
        assert_eq!(self.nvars, o.nvars, "polynomials in different numbers of variables");
    }

    /// True iff `f(p) = 0`.
    pub fn vanishes_at(&self, p: &[FieldElement]) -> Result<bool, LaurentError> {
        Ok(self.evaluate(p)?.is_zero())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        self.check_compatible(o);
        let mut out = self.clone();
        for (e, &c) in &o.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        let f = &self.field;
        self.map_coeffs(|e, c| (e.clone(), f.neg(c)))
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-o)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)] // exponents add
impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        self.check_compatible(o);
        let f = &self.field;
        let mut out = LaurentPolynomial::zero(f, self.nvars);
        for (a, &x) in &self.terms {
            for (b, &y) in &o.terms {
                out.add_term(a + b, f.mul(x, y));
            }
        }
        out
    }
}

fn determinant(m: &[Vec<LaurentPolynomial>], field: &Field, nvars: usize) -> LaurentPolynomial {
    match m.len() {
        0 => LaurentPolynomial::constant(field, nvars, FieldElement::ONE),
        1 => m[0][0].clone(),
        n => {
            let mut acc = LaurentPolynomial::zero(field, nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<LaurentPolynomial>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][j] * &determinant(&minor, field, nvars);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// `det(t_j df_i/dt_j)` for n polynomials in n variables.
pub fn toric_jacobian(polys: &[LaurentPolynomial]) -> Result<LaurentPolynomial, LaurentError> {
    let first = polys.first().ok_or(LaurentError::WrongCount { expected: 1, got: 0 })?;
    let n = first.nvars;
    if polys.len() != n {
        return Err(LaurentError::WrongCount { expected: n, got: polys.len() });
    }
    for p in polys {
        if p.field != first.field {
            return Err(LaurentError::FieldMismatch);
        }
        if p.nvars != n {
            return Err(LaurentError::Arity { expected: n, got: p.nvars });
        }
    }
    let m: Vec<Vec<LaurentPolynomial>> =
        polys.iter().map(|f| (0..n).map(|j| f.toric_derivative(j)).collect()).collect();
    Ok(determinant(&m, &first.field, n))
}

const VAR_NAMES: [&str; 4] = ["x", "y", "z", "w"];

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let name = |i: usize| {
            if self.nvars <= VAR_NAMES.len() {
                VAR_NAMES[i].to_string()
            } else {
                format!("t{}", i + 1)
            }
        };
        for (k, (e, &c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(i, &a)| if a == 1 { name(i) } else { format!("{}^{}", name(i), a) })
                .collect();
            let coef = self.field.format(c);
            match (mono.is_empty(), c == FieldElement::ONE) {
                (true, _) => f.write_str(&coef)?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "{}*{}", coef, mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

/// The monomial space `L(A)`, as the sorted list of exponents `A_Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSpace {
    field: Field,
    points: Vec<LatticeVector>,
}

impl MonomialSpace {
    /// Sorted and deduplicated.
    pub fn new(field: &Field, points: impl IntoIterator<Item = LatticeVector>) -> Self {
        let mut points: Vec<LatticeVector> = points.into_iter().collect();
        points.sort();
        points.dedup();
        MonomialSpace { field: field.clone(), points }
    }

    pub fn from_polytope(field: &Field, p: &Polytope) -> Self {
        MonomialSpace { field: field.clone(), points: p.lattice_points() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn points(&self) -> &[LatticeVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `M[i][j] = t^{a_i}(p_j)`.
    pub fn evaluation_matrix(&self, pts: &[Vec<FieldElement>]) -> Result<Matrix, LaurentError> {
        let f = &self.field;
        let logs: Vec<Vec<i64>> = pts
            .iter()
            .map(|p| {
                if let Some(i) = p.iter().position(|x| x.is_zero()) {
                    return Err(LaurentError::ZeroCoordinate(i));
                }
                p.iter().map(|&x| Ok(f.dlog(x)? as i64)).collect()
            })
            .collect::<Result<_, LaurentError>>()?;
        let mut m = Matrix::zeros(f, self.points.len(), pts.len());
        for (i, a) in self.points.iter().enumerate() {
            for (j, l) in logs.iter().enumerate() {
                m.set(i, j, f.exp(a.dot(l)));
            }
        }
        Ok(m)
    }

    /// `sum_i c_i t^{a_i}`.
    pub fn polynomial(&self, coeffs: &[FieldElement]) -> LaurentPolynomial {
        assert_eq!(coeffs.len(), self.points.len());
        let n = self.points.first().map_or(0, LatticeVector::dim);
        LaurentPolynomial::from_terms(&self.field, n, self.points.iter().cloned().zip(coeffs.iter().copied()))
            .expect("consistent dimensions")
    }

    /// Coordinates of `f` in this basis, if `f` lies in the span.
    pub fn coordinates(&self, f: &LaurentPolynomial) -> Option<Vec<FieldElement>> {
        if f.terms().any(|(e, _)| self.points.binary_search(e).is_err()) {
            return None;
        }
        Some(self.points.iter().map(|a| f.coeff(a)).collect())
    }
}
