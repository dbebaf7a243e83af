//! Evaluation codes: generator and parity-check matrices, exact minimum distance.

use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldElement};
use crate::laurent::{LaurentError, LaurentPolynomial, MonomialSpace};
use crate::linalg::{binomial, first_dependent_columns, Matrix};
use crate::system::SolutionSet;

/// Default cap on the number of column subsets tested by [`LinearCode::minimum_distance`].
pub const DEFAULT_DISTANCE_BUDGET: u64 = 1 << 22;
/// Largest `q^k` for which codewords are enumerated.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("the code has dimension 0")]
    ZeroDimension,
    #[error("an evaluation code needs a nonempty monomial set and point set")]
    EmptyInput,
    #[error("minimum distance search: {needed} column subsets exceed the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("q^k = {0} is too large to enumerate codewords")]
    TooLargeToEnumerate(u128),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Provenance of an evaluation code.
#[derive(Clone, Debug)]
pub struct EvaluationData {
    pub monomials: MonomialSpace,
    pub points: Vec<Vec<FieldElement>>,
    /// `raw[i][j] = t^{a_i}(p_j)`.
    pub raw: Matrix,
    /// Basis of `{f in L(A) : f|_S = 0}`.
    pub kernel: Vec<LaurentPolynomial>,
}

/// A linear code given by a full-rank generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    gen: Matrix,
    eval: Option<EvaluationData>,
}

/// Exact minimum distance with a minimum-weight codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinDistance {
    pub d: usize,
    pub witness: Vec<FieldElement>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeSummary {
    pub field: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub generator: Vec<Vec<String>>,
}

impl LinearCode {
    /// Row space of `m` (rows need not be independent).
    pub fn from_generator(m: &Matrix) -> LinearCode {
        LinearCode { gen: m.row_basis(), eval: None }
    }

    /// `C_{S,L(A)}`: the image of evaluation at `points` on `L(A)`.
    pub fn evaluation(points: &[Vec<FieldElement>], monomials: &MonomialSpace) -> Result<LinearCode, CodeError> {
        if points.is_empty() || monomials.is_empty() {
            return Err(CodeError::EmptyInput);
        }
        let raw = monomials.evaluation_matrix(points)?;
        let kernel = raw.left_nullspace().into_iter().map(|c| monomials.polynomial(&c)).collect();
        Ok(LinearCode {
            gen: raw.row_basis(),
            eval: Some(EvaluationData { monomials: monomials.clone(), points: points.to_vec(), raw, kernel }),
        })
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    /// Block length N.
    pub fn length(&self) -> usize {
        self.gen.ncols()
    }

    pub fn dimension(&self) -> usize {
        self.gen.nrows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn evaluation_data(&self) -> Option<&EvaluationData> {
        self.eval.as_ref()
    }

    /// Kernel of the evaluation map (empty for codes not built by evaluation).
    pub fn kernel(&self) -> &[LaurentPolynomial] {
        self.eval.as_ref().map_or(&[], |e| &e.kernel)
    }

    /// `(N - k) x N` matrix whose kernel is the code; `0 x N` when `k = N`.
    pub fn parity_check(&self) -> Matrix {
        let rows = self.gen.nullspace();
        Matrix::from_rows(self.field(), self.length(), rows)
    }

    /// Whether `c` lies in the code.
    pub fn contains(&self, c: &[FieldElement]) -> bool {
        self.parity_check().apply(c).iter().all(|x| x.is_zero())
    }

    /// Smallest number of linearly dependent columns of the parity-check matrix,
    /// searched by increasing size.
    pub fn minimum_distance(&self, budget: u64) -> Result<MinDistance, CodeError> {
        let k = self.dimension();
        if k == 0 {
            return Err(CodeError::ZeroDimension);
        }
        let n = self.length();
        let h = self.parity_check();
        let r = n - k;
        let mut spent: u128 = 0;
        for w in 1..=r + 1 {
            if w <= r {
                spent += binomial(n, w);
                if spent > budget as u128 {
                    return Err(CodeError::BudgetExceeded { needed: spent, budget });
                }
            }
            if let Some(cols) = first_dependent_columns(&h, w) {
                let sub = h.select_columns(&cols);
                let x = sub.nullspace().into_iter().next().expect("columns are dependent");
                let mut witness = vec![FieldElement::ZERO; n];
                for (&j, &v) in cols.iter().zip(&x) {
                    witness[j] = v;
                }
                debug_assert_eq!(witness.iter().filter(|v| !v.is_zero()).count(), w);
                return Ok(MinDistance { d: w, witness });
            }
        }
        unreachable!("any r + 1 columns in an r-dimensional space are dependent")
    }

    /// Minimum weight over all nonzero codewords, enumerating one message per
    /// projective point.
    pub fn minimum_distance_by_enumeration(&self) -> Result<MinDistance, CodeError> {
        let k = self.dimension();
        if k == 0 {
            return Err(CodeError::ZeroDimension);
        }
        let f = self.field();
        let q = f.order();
        let total = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if total > ENUMERATION_LIMIT {
            return Err(CodeError::TooLargeToEnumerate(total));
        }
        let n = self.length();
        let mut best: Option<MinDistance> = None;
        let mut msg = vec![0u32; k];
        for lead in 0..k {
            msg.iter_mut().for_each(|x| *x = 0);
            msg[lead] = 1;
            loop {
                let mut c = vec![FieldElement::ZERO; n];
                for (i, &m) in msg.iter().enumerate() {
                    let a = f.element(m);
                    if a.is_zero() {
                        continue;
                    }
                    for (j, cj) in c.iter_mut().enumerate() {
                        *cj = f.add(*cj, f.mul(a, self.gen.get(i, j)));
                    }
                }
                let wt = c.iter().filter(|x| !x.is_zero()).count();
                if best.as_ref().is_none_or(|b| wt < b.d) {
                    best = Some(MinDistance { d: wt, witness: c });
                }
                // odometer over the coordinates after the leading one
                let mut j = k;
                loop {
                    j -= 1;
                    if j == lead {
                        break;
                    }
                    if msg[j] + 1 < q {
                        msg[j] += 1;
                        break;
                    }
                    msg[j] = 0;
                }
                if j == lead {
                    break;
                }
            }
        }
        Ok(best.expect("k >= 1"))
    }

    /// Singleton bound `d = N - k + 1`.
    pub fn is_mds(&self, d: usize) -> bool {
        d == self.length() - self.dimension() + 1
    }

    pub fn summary(&self, d: Option<usize>) -> CodeSummary {
        CodeSummary {
            field: self.field().to_string(),
            n: self.length(),
            k: self.dimension(),
            d,
            generator: self.gen.to_literals(),
        }
    }
}

/// The evaluation code of `L(A)` on a solution set.
pub fn build_code(sol: &SolutionSet, a: &MonomialSpace) -> Result<LinearCode, CodeError> {
    LinearCode::evaluation(sol.points(), a)
}
