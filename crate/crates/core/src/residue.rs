//! Global residue sums over a certified solution set and the interpolation
//! statements that follow from their vanishing.

use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldElement};
use crate::laurent::{LaurentError, LaurentPolynomial, MonomialSpace};
use crate::lattice::LatticeVector;
use crate::linalg::Matrix;
use crate::system::{PolySystem, SolutionSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResidueError {
    #[error("solution set is not certified")]
    NotCertified,
    #[error("expected one value per solution ({expected}), got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("values must sum to zero over the solution set")]
    NonzeroSum,
    #[error("the characteristic {p} divides |S| = {count}")]
    CharacteristicDividesCount { p: u32, count: usize },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Everything needed to form `sum_{p in S} h(p) / J(p)`.
#[derive(Clone, Debug)]
pub struct ResidueContext {
    field: Field,
    sol: SolutionSet,
    jacobian: LaurentPolynomial,
    interior: MonomialSpace,
}

/// Per-instance result of the zero-sum interpolation experiment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Solvability {
    Solvable,
    Unsolvable,
}

impl ResidueContext {
    /// Context of a certified system.
    pub fn new(sys: &PolySystem, sol: &SolutionSet) -> Result<Self, ResidueError> {
        if !sol.is_certified() {
            return Err(ResidueError::NotCertified);
        }
        Ok(Self::from_parts(sys.field(), sol.clone(), sys.jacobian().clone(), sys.interior_monomials()))
    }

    /// Assemble without checks; the stored Jacobian values are used as given.
    pub fn from_parts(field: &Field, sol: SolutionSet, jacobian: LaurentPolynomial, interior: MonomialSpace) -> Self {
        ResidueContext { field: field.clone(), sol, jacobian, interior }
    }

    pub fn solutions(&self) -> &SolutionSet {
        &self.sol
    }

    pub fn interior_monomials(&self) -> &MonomialSpace {
        &self.interior
    }

    pub fn jacobian(&self) -> &LaurentPolynomial {
        &self.jacobian
    }

    /// `sum_{p in S} h(p) / J(p)`.
    pub fn residue_sum(&self, h: &LaurentPolynomial) -> Result<FieldElement, ResidueError> {
        let f = &self.field;
        let mut acc = FieldElement::ZERO;
        for (p, &j) in self.sol.points().iter().zip(self.sol.jacobian_values()) {
            let v = h.evaluate(p)?;
            acc = f.add(acc, f.div(v, j).expect("Jacobian values are nonzero"));
        }
        Ok(acc)
    }

    /// Interior monomials `t^u` whose residue sum is nonzero.
    pub fn euler_jacobi_failures(&self) -> Vec<LatticeVector> {
        self.interior
            .points()
            .iter()
            .filter(|u| {
                let m = LaurentPolynomial::monomial(&self.field, (*u).clone(), FieldElement::ONE);
                !self.residue_sum(&m).expect("monomials have the right arity").is_zero()
            })
            .cloned()
            .collect()
    }

    /// Residue sums vanish on all of `L(P°)` (checked on the monomial basis).
    pub fn verify_euler_jacobi(&self) -> bool {
        self.euler_jacobi_failures().is_empty()
    }

    fn check_len(&self, v: &[FieldElement]) -> Result<(), ResidueError> {
        if v.len() != self.sol.len() {
            return Err(ResidueError::LengthMismatch { expected: self.sol.len(), got: v.len() });
        }
        Ok(())
    }

    /// Some `h in L(P°)` with `h(p) = J(p) phi(p)` on `S`, if one exists.
    pub fn interpolate_zero_sum(&self, phi: &[FieldElement]) -> Result<Option<LaurentPolynomial>, ResidueError> {
        self.check_len(phi)?;
        let f = &self.field;
        if !phi.iter().fold(FieldElement::ZERO, |a, &b| f.add(a, b)).is_zero() {
            return Err(ResidueError::NonzeroSum);
        }
        let rhs: Vec<FieldElement> =
            phi.iter().zip(self.sol.jacobian_values()).map(|(&x, &j)| f.mul(x, j)).collect();
        let nvars = self.jacobian.nvars();
        if self.interior.is_empty() {
            return Ok(rhs.iter().all(|x| x.is_zero()).then(|| LaurentPolynomial::zero(f, nvars)));
        }
        // rows: points, columns: interior monomials
        let m: Matrix = self.interior.evaluation_matrix(self.sol.points())?.transpose();
        Ok(m.solve(&rhs).map(|c| self.interior.polynomial(&c)))
    }

    pub fn zero_sum_solvability(&self, phi: &[FieldElement]) -> Result<Solvability, ResidueError> {
        Ok(match self.interpolate_zero_sum(phi)? {
            Some(_) => Solvability::Solvable,
            None => Solvability::Unsolvable,
        })
    }

    /// Some `g in span{L(P°), J}` with `g(p) = psi(p)` on `S`, built as `h + cJ`
    /// with `c = |S|^{-1} sum psi/J`. Requires `char K` not dividing `|S|`.
    pub fn interpolate_full(&self, psi: &[FieldElement]) -> Result<Option<LaurentPolynomial>, ResidueError> {
        self.check_len(psi)?;
        let f = &self.field;
        let p = f.characteristic();
        let count = self.sol.len();
        let n_mod = f.from_int(count as i64);
        if n_mod.is_zero() {
            return Err(ResidueError::CharacteristicDividesCount { p, count });
        }
        let ratios: Vec<FieldElement> = psi
            .iter()
            .zip(self.sol.jacobian_values())
            .map(|(&x, &j)| f.div(x, j).expect("Jacobian values are nonzero"))
            .collect();
        let total = ratios.iter().fold(FieldElement::ZERO, |a, &b| f.add(a, b));
        let c = f.div(total, n_mod).expect("checked nonzero");
        let phi: Vec<FieldElement> = ratios.iter().map(|&r| f.sub(r, c)).collect();
        Ok(self.interpolate_zero_sum(&phi)?.map(|h| &h + &self.jacobian.scale(c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::{check_bkk, solve_torus, DEFAULT_POINT_BUDGET};

    /// f_i = g(t1) + c_i h(t2) with g, h split: all d1*d2 roots are rational.
    fn split_system(f: &Field, groots: &[i64], hroots: &[i64], c: [i64; 2]) -> PolySystem {
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
        let f1 = &g + &h.scale(f.exp(c[0]));
        let f2 = &g + &h.scale(f.exp(c[1]));
        PolySystem::new(vec![f1, f2]).unwrap()
    }

    fn context(sys: &PolySystem) -> ResidueContext {
        let mut sol = solve_torus(sys, DEFAULT_POINT_BUDGET).unwrap();
        assert!(check_bkk(sys, &mut sol).certified);
        ResidueContext::new(sys, &sol).unwrap()
    }

    #[test]
    fn split_system_residues_vanish() {
        let f = Field::new(2, 4).unwrap();
        let sys = split_system(&f, &[1, 2, 3], &[4, 5], [0, 6]);
        let ctx = context(&sys);
        assert_eq!(ctx.solutions().len(), 6);
        assert!(ctx.verify_euler_jacobi());
        let j = sys.jacobian().clone();
        assert!(ctx.residue_sum(&j).unwrap().is_zero());
        assert!(ctx.residue_sum(&LaurentPolynomial::zero(&f, 2)).unwrap().is_zero());
    }

    #[test]
    fn corrupted_context_fails() {
        let f = Field::new(2, 4).unwrap();
        let sys = split_system(&f, &[1, 2, 3], &[4, 5, 6], [0, 6]);
        let ctx = context(&sys);
        let sol = ctx.solutions();
        let mut jv = sol.jacobian_values().to_vec();
        jv[0] = f.mul(jv[0], f.exp(1));
        let bad = ResidueContext::from_parts(
            &f,
            SolutionSet::from_parts(sol.points().to_vec(), jv),
            ctx.jacobian().clone(),
            ctx.interior_monomials().clone(),
        );
        assert!(!bad.verify_euler_jacobi());
    }

    #[test]
    fn zero_sum_interpolation() {
        let f = Field::new(2, 4).unwrap();
        let sys = split_system(&f, &[1, 2, 3], &[4, 5, 6], [0, 6]);
        let ctx = context(&sys);
        let n = ctx.solutions().len();
        let zero = vec![f.zero(); n];
        assert!(ctx.interpolate_zero_sum(&zero).unwrap().unwrap().is_zero());
        let mut phi = zero.clone();
        phi[0] = f.one();
        assert_eq!(ctx.interpolate_zero_sum(&phi), Err(ResidueError::NonzeroSum));
        phi[1] = f.one();
        if let Some(h) = ctx.interpolate_zero_sum(&phi).unwrap() {
            for (k, p) in ctx.solutions().points().iter().enumerate() {
                let want = f.mul(phi[k], ctx.solutions().jacobian_values()[k]);
                assert_eq!(h.evaluate(p).unwrap(), want);
            }
        }
    }

    #[test]
    fn full_interpolation_needs_odd_count() {
        let f = Field::new(2, 4).unwrap();
        let even = context(&split_system(&f, &[1, 2], &[4, 5], [0, 6]));
        assert!(matches!(
            even.interpolate_full(&[f.one(); 4]),
            Err(ResidueError::CharacteristicDividesCount { p: 2, count: 4 })
        ));
        let odd = context(&split_system(&f, &[1, 2, 3], &[4, 5, 6], [0, 6]));
        let psi: Vec<FieldElement> = (0..odd.solutions().len()).map(|i| f.exp(i as i64 * 4)).collect();
        let g = odd.interpolate_full(&psi).unwrap().expect("interpolation succeeds");
        for (k, p) in odd.solutions().points().iter().enumerate() {
            assert_eq!(g.evaluate(p).unwrap(), psi[k]);
        }
    }
}
