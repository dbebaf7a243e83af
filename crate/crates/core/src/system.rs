//! Square Laurent systems: torus solving, rational-count certification,
//! independent-condition tests and random system generation.

use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldElement};
use crate::laurent::{toric_jacobian, LaurentError, LaurentPolynomial, MonomialSpace};
use crate::lattice::{
    affinely_generates, minkowski_sum_all, mixed_volume, translate_into, LatticeError, LatticeVector, Polytope,
};
use crate::linalg::{binomial, first_dependent_columns};

/// Default cap on the number of torus points examined by [`solve_torus`].
pub const DEFAULT_POINT_BUDGET: u64 = 1 << 28;
/// Default cap on the number of subsets examined by exhaustive subset checks.
pub const DEFAULT_SUBSET_BUDGET: u64 = 1_000_000;

const ISOLATION_CAVEAT: &str = "certification counts rational simple torus solutions against the mixed volume; \
positive-dimensional components over the algebraic closure that contain no rational point are not excluded";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SystemError {
    #[error("a system needs at least one polynomial")]
    Empty,
    #[error("expected {expected} polynomials, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("polynomial {0} is zero")]
    ZeroPolynomial(usize),
    #[error("polynomials are defined over different fields")]
    FieldMismatch,
    #[error("{what}: {needed} cases exceed the budget of {budget}")]
    BudgetExceeded { what: &'static str, needed: u128, budget: u64 },
    #[error("point {index} is not a solution (polynomial {poly} does not vanish)")]
    NotASolution { index: usize, poly: usize },
    #[error("toric Jacobian vanishes at point {0}")]
    ZeroJacobian(usize),
    #[error("point {0} is listed twice")]
    DuplicatePoint(usize),
    #[error("need {needed} points but only {available} are available")]
    TooFewPoints { needed: usize, available: usize },
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// n Laurent polynomials in n variables over one field, with cached Newton
/// polytopes, their Minkowski sum and the toric Jacobian.
#[derive(Clone, Debug)]
pub struct PolySystem {
    field: Field,
    polys: Vec<LaurentPolynomial>,
    newton: Vec<Polytope>,
    sum: Polytope,
    jacobian: LaurentPolynomial,
}

impl PolySystem {
    pub fn new(polys: Vec<LaurentPolynomial>) -> Result<PolySystem, SystemError> {
        let first = polys.first().ok_or(SystemError::Empty)?;
        let n = first.nvars();
        if polys.len() != n {
            return Err(SystemError::WrongCount { expected: n, got: polys.len() });
        }
        let field = first.field().clone();
        if polys.iter().any(|p| *p.field() != field) {
            return Err(SystemError::FieldMismatch);
        }
        if let Some(i) = polys.iter().position(LaurentPolynomial::is_zero) {
            return Err(SystemError::ZeroPolynomial(i));
        }
        let newton: Vec<Polytope> = polys.iter().map(|p| p.newton_polytope()).collect::<Result<_, _>>()?;
        let sum = minkowski_sum_all(&newton)?;
        let jacobian = toric_jacobian(&polys)?;
        if let Ok(jp) = jacobian.newton_polytope() {
            assert!(sum.contains_polytope(&jp), "Newton polytope of the Jacobian escapes the Minkowski sum");
        }
        Ok(PolySystem { field, polys, newton, sum, jacobian })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.polys.len()
    }

    pub fn polys(&self) -> &[LaurentPolynomial] {
        &self.polys
    }

    pub fn newton_polytopes(&self) -> &[Polytope] {
        &self.newton
    }

    /// `P = P_1 + ... + P_n`.
    pub fn minkowski_sum(&self) -> &Polytope {
        &self.sum
    }

    pub fn jacobian(&self) -> &LaurentPolynomial {
        &self.jacobian
    }

    pub fn mixed_volume(&self) -> u64 {
        mixed_volume(&self.newton).expect("n polytopes in R^n")
    }

    /// Interior lattice points of `P`, i.e. the monomial basis of `L(P°)`.
    pub fn interior_monomials(&self) -> MonomialSpace {
        MonomialSpace::new(&self.field, self.sum.interior_lattice_points())
    }
}

/// Rational torus solutions together with the Jacobian at each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    points: Vec<Vec<FieldElement>>,
    jacobian_values: Vec<FieldElement>,
    certified: bool,
}

impl SolutionSet {
    /// Pairs points with Jacobian values as given (no checks, not certified).
    pub fn from_parts(points: Vec<Vec<FieldElement>>, jacobian_values: Vec<FieldElement>) -> SolutionSet {
        assert_eq!(points.len(), jacobian_values.len());
        SolutionSet { points, jacobian_values, certified: false }
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    pub fn jacobian_values(&self) -> &[FieldElement] {
        &self.jacobian_values
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The subset with the given indices (certification is dropped).
    pub fn subset(&self, idx: &[usize]) -> SolutionSet {
        SolutionSet::from_parts(
            idx.iter().map(|&i| self.points[i].clone()).collect(),
            idx.iter().map(|&i| self.jacobian_values[i]).collect(),
        )
    }

    pub fn to_literals(&self, field: &Field) -> Vec<Vec<String>> {
        self.points.iter().map(|p| p.iter().map(|&x| field.format(x)).collect()).collect()
    }
}

/// Common torus zeros of `polys` (in `nvars` variables), as log vectors in
/// lexicographic order.
fn torus_zeros(field: &Field, nvars: usize, polys: &[LaurentPolynomial], budget: u64) -> Result<Vec<Vec<i64>>, SystemError> {
    let q1 = (field.order() - 1) as i64;
    let needed = (q1 as u128).pow(nvars as u32);
    if needed > budget as u128 {
        return Err(SystemError::BudgetExceeded { what: "torus enumeration", needed, budget });
    }
    let compiled: Vec<Vec<(i64, Vec<i64>)>> = polys
        .iter()
        .map(|p| p.terms().map(|(e, c)| (field.dlog(c).unwrap() as i64, e.0.clone())).collect())
        .collect();
    let vanishes = |l: &[i64]| {
        compiled.iter().all(|terms| {
            terms
                .iter()
                .fold(FieldElement::ZERO, |acc, (lc, e)| {
                    let s: i64 = e.iter().zip(l).map(|(a, b)| a * b).sum();
                    field.add(acc, field.exp(lc + s))
                })
                .is_zero()
        })
    };
    if nvars == 0 {
        return Ok(if vanishes(&[]) { vec![vec![]] } else { vec![] });
    }
    let chunks: Vec<Vec<Vec<i64>>> = (0..q1)
        .into_par_iter()
        .map(|l0| {
            let mut out = Vec::new();
            let mut cur = vec![0i64; nvars];
            cur[0] = l0;
            loop {
                if vanishes(&cur) {
                    out.push(cur.clone());
                }
                let mut j = nvars;
                loop {
                    j -= 1;
                    if j == 0 {
                        return out;
                    }
                    if cur[j] + 1 < q1 {
                        cur[j] += 1;
                        break;
                    }
                    cur[j] = 0;
                }
            }
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// All points of `(F_q^*)^n` where every polynomial vanishes, in lexicographic
/// order of discrete logs, with the Jacobian evaluated at each.
pub fn solve_torus(sys: &PolySystem, point_budget: u64) -> Result<SolutionSet, SystemError> {
    let f = &sys.field;
    let logs = torus_zeros(f, sys.nvars(), &sys.polys, point_budget)?;
    let jacobian_values = logs.iter().map(|l| sys.jacobian.evaluate_logs(l)).collect();
    let points = logs.iter().map(|l| l.iter().map(|&x| f.exp(x)).collect()).collect();
    Ok(SolutionSet { points, jacobian_values, certified: false })
}

/// Check an explicit point list: torus points, pairwise distinct, common zeros,
/// nonzero Jacobian.
pub fn verify_solutions(sys: &PolySystem, points: Vec<Vec<FieldElement>>) -> Result<SolutionSet, SystemError> {
    let mut seen = std::collections::BTreeSet::new();
    let mut jacobian_values = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        for (k, f) in sys.polys.iter().enumerate() {
            if !f.vanishes_at(p)? {
                return Err(SystemError::NotASolution { index: i, poly: k });
            }
        }
        if !seen.insert(p.clone()) {
            return Err(SystemError::DuplicatePoint(i));
        }
        let j = sys.jacobian.evaluate(p)?;
        if j.is_zero() {
            return Err(SystemError::ZeroJacobian(i));
        }
        jacobian_values.push(j);
    }
    Ok(SolutionSet { points, jacobian_values, certified: false })
}

/// Outcome of the rational-count certification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertReport {
    pub mixed_volume: u64,
    pub num_solutions: usize,
    pub count_matches: bool,
    pub jacobians_nonzero: bool,
    /// Indices of points with vanishing Jacobian.
    pub singular_points: Vec<usize>,
    pub full_dimensional: Vec<bool>,
    pub certified: bool,
    pub caveat: String,
}

/// Certify assumptions (1)-(3) by counting: `|S| = V`, all Jacobian values
/// nonzero, all Newton polytopes full-dimensional. Sets `sol.certified`.
pub fn check_bkk(sys: &PolySystem, sol: &mut SolutionSet) -> CertReport {
    let v = sys.mixed_volume();
    let singular_points: Vec<usize> = (0..sol.len()).filter(|&i| sol.jacobian_values[i].is_zero()).collect();
    let full_dimensional: Vec<bool> = sys.newton.iter().map(Polytope::is_full_dimensional).collect();
    let count_matches = sol.len() as u64 == v;
    let jacobians_nonzero = singular_points.is_empty();
    let certified = count_matches && jacobians_nonzero && full_dimensional.iter().all(|&b| b);
    sol.certified = certified;
    CertReport {
        mixed_volume: v,
        num_solutions: sol.len(),
        count_matches,
        jacobians_nonzero,
        singular_points,
        full_dimensional,
        certified,
        caveat: ISOLATION_CAVEAT.to_string(),
    }
}

/// Whether `ev_T : L(A) -> K^|T|` is surjective.
pub fn imposes_independent_conditions(points: &[Vec<FieldElement>], space: &MonomialSpace) -> Result<bool, SystemError> {
    if points.is_empty() {
        return Ok(true);
    }
    let m = space.evaluation_matrix(points)?;
    Ok(m.rank() == points.len())
}

/// First subset `T` of the given size that fails to impose independent
/// conditions on `L(B)`, or `None` if all do.
pub fn find_dependent_subset(
    points: &[Vec<FieldElement>],
    space: &MonomialSpace,
    size: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>, SystemError> {
    if size > points.len() {
        return Err(SystemError::TooFewPoints { needed: size, available: points.len() });
    }
    let needed = binomial(points.len(), size);
    if needed > budget as u128 {
        return Err(SystemError::BudgetExceeded { what: "subset enumeration", needed, budget });
    }
    let m = space.evaluation_matrix(points)?;
    Ok(first_dependent_columns(&m, size))
}

/// First `|Q_Z|`-subset of `S` (lexicographic) not imposing independent
/// conditions on `L(Q)`.
pub fn find_assumption4_violation(
    field: &Field,
    points: &[Vec<FieldElement>],
    q: &Polytope,
    budget: u64,
) -> Result<Option<Vec<usize>>, SystemError> {
    let space = MonomialSpace::from_polytope(field, q);
    find_dependent_subset(points, &space, space.len(), budget)
}

/// Independence check: every `|Q_Z|`-subset of `S` imposes independent conditions on `L(Q)`.
pub fn check_assumption4(field: &Field, points: &[Vec<FieldElement>], q: &Polytope, budget: u64) -> Result<bool, SystemError> {
    Ok(find_assumption4_violation(field, points, q, budget)?.is_none())
}

/// Random polynomial with support in `P`: uniform nonzero coefficients at the
/// vertices, uniform coefficients elsewhere.
pub fn random_polynomial<R: Rng + ?Sized>(p: &Polytope, field: &Field, rng: &mut R) -> LaurentPolynomial {
    let q = field.order();
    let terms = p.lattice_points().into_iter().map(|a| {
        let c = if p.vertices().binary_search(&a).is_ok() {
            field.element(rng.random_range(1..q))
        } else {
            field.element(rng.random_range(0..q))
        };
        (a, c)
    });
    LaurentPolynomial::from_terms(field, p.ambient_dim(), terms).expect("consistent dimensions")
}

/// A system with Newton polytopes exactly `polytopes`, deterministic in `seed`.
pub fn random_system(polytopes: &[Polytope], field: &Field, seed: u64) -> Result<PolySystem, SystemError> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    random_system_with(polytopes, field, &mut rng)
}

pub fn random_system_with<R: Rng + ?Sized>(polytopes: &[Polytope], field: &Field, rng: &mut R) -> Result<PolySystem, SystemError> {
    PolySystem::new(polytopes.iter().map(|p| random_polynomial(p, field, rng)).collect())
}

/// Default number of prescribed points for [`random_system_through_points`]:
/// `V - |(P_1)°_Z|` in the plane (the curve `f_1 = 0` has that many interior
/// points as its genus), `V - 1` otherwise.
pub fn default_prescribed_points(polytopes: &[Polytope]) -> Result<usize, SystemError> {
    let v = mixed_volume(polytopes)? as usize;
    Ok(if polytopes.len() == 2 {
        v.saturating_sub(polytopes[0].interior_lattice_points().len())
    } else {
        v.saturating_sub(1)
    })
}

/// Random system biased toward many rational solutions: `f_1, ..., f_{n-1}` are
/// random, then `f_n` is a random element of `L(P_n)` vanishing at `prescribed`
/// random rational points of the curve `f_1 = ... = f_{n-1} = 0`. Returns `None`
/// when the curve has too few rational points or no such `f_n` has all vertex
/// coefficients nonzero.
pub fn random_system_through_points<R: Rng + ?Sized>(
    polytopes: &[Polytope],
    field: &Field,
    prescribed: Option<usize>,
    point_budget: u64,
    rng: &mut R,
) -> Result<Option<PolySystem>, SystemError> {
    let n = polytopes.len();
    let pn = polytopes.last().ok_or(SystemError::Empty)?;
    if pn.ambient_dim() != n {
        return Err(SystemError::WrongCount { expected: pn.ambient_dim(), got: n });
    }
    let r = match prescribed {
        Some(r) => r,
        None => default_prescribed_points(polytopes)?,
    };
    let mut polys: Vec<LaurentPolynomial> = polytopes[..n - 1].iter().map(|p| random_polynomial(p, field, rng)).collect();
    let curve = torus_zeros(field, n, &polys, point_budget)?;
    if curve.len() < r {
        return Ok(None);
    }
    let chosen: Vec<Vec<FieldElement>> = sample(rng, curve.len(), r)
        .into_iter()
        .map(|i| curve[i].iter().map(|&l| field.exp(l)).collect())
        .collect();
    let space = MonomialSpace::from_polytope(field, pn);
    let kernel = space.evaluation_matrix(&chosen)?.left_nullspace();
    if kernel.is_empty() {
        return Ok(None);
    }
    let q = field.order();
    for _ in 0..64 {
        let mut c = vec![FieldElement::ZERO; space.len()];
        for v in &kernel {
            let a = field.element(rng.random_range(0..q));
            for (ci, &vi) in c.iter_mut().zip(v) {
                *ci = field.add(*ci, field.mul(a, vi));
            }
        }
        let fnew = space.polynomial(&c);
        let full = pn.vertices().iter().all(|v| !fnew.coeff(v).is_zero());
        if full {
            polys.push(fnew);
            return Ok(Some(PolySystem::new(polys)?));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GenericityVariant {
    /// `(|Q_Z| - 1) Q ⊆ P_n`.
    Thm41,
    /// `P_1 + ... + P_{n-1} + Q ⊆ P_n`, all polytopes with the same normal fan.
    Thm43,
}

/// Each hypothesis of the genericity theorems, reported separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub variant: GenericityVariant,
    pub q_full_dimensional: bool,
    pub q_generates_lattice: bool,
    pub q_lattice_points: usize,
    /// `V(P_1, ..., P_{n-1}, Q)`.
    pub mixed_volume: u64,
    pub mixed_volume_ok: bool,
    /// The polytope that must fit into `P_n`, by its vertices.
    pub contained: Polytope,
    pub containment_ok: bool,
    pub containment_translation: Option<LatticeVector>,
    /// Equality of facet-normal sets; only a sufficient test for equal normal fans.
    pub same_normal_fan: Option<bool>,
    pub normal_fan_check: Option<String>,
    pub all_hold: bool,
}

pub fn check_genericity_hypotheses(
    polytopes: &[Polytope],
    q: &Polytope,
    variant: GenericityVariant,
) -> Result<HypothesisReport, SystemError> {
    let n = polytopes.len();
    let pn = polytopes.last().ok_or(SystemError::Empty)?;
    let qz = q.lattice_points();
    let q_full_dimensional = q.is_full_dimensional();
    let q_generates_lattice = affinely_generates(&qz);

    let mut mv_args: Vec<Polytope> = polytopes[..n - 1].to_vec();
    mv_args.push(q.clone());
    let mv = mixed_volume(&mv_args)?;

    let contained = match variant {
        GenericityVariant::Thm41 => q.scale((qz.len() as i64 - 1).max(1))?,
        GenericityVariant::Thm43 => minkowski_sum_all(&mv_args)?,
    };
    let containment_translation = translate_into(contained.vertices(), pn);

    let (same_normal_fan, normal_fan_check) = match variant {
        GenericityVariant::Thm41 => (None, None),
        GenericityVariant::Thm43 => {
            let normals = q.facet_normals();
            let same = q_full_dimensional
                && polytopes.iter().all(|p| p.is_full_dimensional() && p.facet_normals() == normals);
            (Some(same), Some("sufficient-only".to_string()))
        }
    };
    let mixed_volume_ok = mv >= qz.len() as u64;
    let containment_ok = containment_translation.is_some();
    let all_hold = q_full_dimensional
        && q_generates_lattice
        && mixed_volume_ok
        && containment_ok
        && same_normal_fan.unwrap_or(true);
    Ok(HypothesisReport {
        variant,
        q_full_dimensional,
        q_generates_lattice,
        q_lattice_points: qz.len(),
        mixed_volume: mv,
        mixed_volume_ok,
        contained,
        containment_ok,
        containment_translation,
        same_normal_fan,
        normal_fan_check,
        all_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf16() -> Field {
        Field::new(2, 4).unwrap()
    }

    fn poly(f: &Field, n: usize, terms: &[(&[i64], &str)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(f, n, terms.iter().map(|(e, c)| (e.to_vec(), f.parse(c).unwrap()))).unwrap()
    }

    #[test]
    fn split_system_roots() {
        let f = gf16();
        // (t1 - g)(t1 - g^2) = t1^2 + (g + g^2) t1 + g^3
        let s = f.add(f.exp(1), f.exp(2));
        let f1 = LaurentPolynomial::from_terms(
            &f,
            2,
            [(vec![2, 0], f.one()), (vec![1, 0], s), (vec![0, 0], f.exp(3))],
        )
        .unwrap();
        let f2 = poly(&f, 2, &[(&[0, 1], "g^0"), (&[0, 0], "g^0")]);
        let sys = PolySystem::new(vec![f1, f2]).unwrap();
        let sol = solve_torus(&sys, DEFAULT_POINT_BUDGET).unwrap();
        assert_eq!(sol.points(), &[vec![f.exp(1), f.one()], vec![f.exp(2), f.one()]]);
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        let f = gf16();
        // pick c with t^2 + t + c irreducible, found by exhausting the field
        let c = f
            .nonzero_elements()
            .find(|&c| f.elements().all(|t| !f.add(f.add(f.mul(t, t), t), c).is_zero()))
            .unwrap();
        let f1 = LaurentPolynomial::from_terms(&f, 2, [(vec![2, 0], f.one()), (vec![1, 0], f.one()), (vec![0, 0], c)]).unwrap();
        let f2 = poly(&f, 2, &[(&[0, 1], "g^0"), (&[0, 0], "g^0")]);
        let sys = PolySystem::new(vec![f1, f2]).unwrap();
        assert!(solve_torus(&sys, DEFAULT_POINT_BUDGET).unwrap().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let f = gf16();
        let f1 = poly(&f, 2, &[(&[1, 0], "g^0"), (&[0, 0], "g^0")]);
        let f2 = poly(&f, 2, &[(&[0, 1], "g^0"), (&[0, 0], "g^0")]);
        let sys = PolySystem::new(vec![f1, f2]).unwrap();
        assert!(matches!(solve_torus(&sys, 100), Err(SystemError::BudgetExceeded { needed: 225, .. })));
    }

    #[test]
    fn proportional_system_is_not_certified() {
        let f = gf16();
        let f1 = poly(&f, 2, &[(&[1, 0], "g^0"), (&[0, 1], "g^3"), (&[0, 0], "g^5")]);
        let f2 = f1.scale(f.exp(7));
        let sys = PolySystem::new(vec![f1, f2]).unwrap();
        let mut sol = solve_torus(&sys, DEFAULT_POINT_BUDGET).unwrap();
        let rep = check_bkk(&sys, &mut sol);
        assert!(!rep.certified);
        assert!(!sol.is_certified());
        assert!(sys.jacobian().is_zero());
    }

    #[test]
    fn explicit_points_are_checked() {
        let f = gf16();
        let f1 = poly(&f, 2, &[(&[1, 0], "g^0"), (&[0, 0], "g^1")]);
        let f2 = poly(&f, 2, &[(&[0, 1], "g^0"), (&[0, 0], "g^2")]);
        let sys = PolySystem::new(vec![f1, f2]).unwrap();
        let good = vec![vec![f.exp(1), f.exp(2)]];
        let mut sol = verify_solutions(&sys, good.clone()).unwrap();
        let rep = check_bkk(&sys, &mut sol);
        // segments: the count matches V = 1 but the polytopes are not full-dimensional
        assert!(rep.count_matches && rep.jacobians_nonzero);
        assert_eq!(rep.full_dimensional, vec![false, false]);
        assert!(!rep.certified);
        assert_eq!(
            verify_solutions(&sys, vec![vec![f.exp(1), f.exp(3)]]),
            Err(SystemError::NotASolution { index: 0, poly: 1 })
        );
        assert_eq!(verify_solutions(&sys, vec![good[0].clone(), good[0].clone()]), Err(SystemError::DuplicatePoint(1)));
    }

    #[test]
    fn independent_conditions() {
        let f = gf16();
        let sq = MonomialSpace::from_polytope(&f, &Polytope::unit_cube(2));
        assert!(imposes_independent_conditions(&[vec![f.exp(4), f.exp(9)]], &sq).unwrap());
        let line: Vec<Vec<FieldElement>> = (0..4).map(|i| vec![f.exp(2), f.exp(i)]).collect();
        assert!(!imposes_independent_conditions(&line, &sq).unwrap());
        assert!(!check_assumption4(&f, &line, &Polytope::unit_cube(2), DEFAULT_SUBSET_BUDGET).unwrap());
        assert_eq!(
            find_assumption4_violation(&f, &line[..3], &Polytope::unit_cube(2), DEFAULT_SUBSET_BUDGET),
            Err(SystemError::TooFewPoints { needed: 4, available: 3 })
        );
    }

    #[test]
    fn random_systems_are_deterministic() {
        let f = gf16();
        let ps = vec![Polytope::lattice_box(&[2, 1]), Polytope::simplex(2, 2)];
        let a = random_system(&ps, &f, 7).unwrap();
        let b = random_system(&ps, &f, 7).unwrap();
        assert_eq!(a.polys(), b.polys());
        assert_eq!(a.newton_polytopes(), &ps[..]);
    }

    #[test]
    fn genericity_hypotheses() {
        let sq = Polytope::unit_cube(2);
        let rep = check_genericity_hypotheses(&[sq.clone(), sq.clone()], &sq, GenericityVariant::Thm41).unwrap();
        assert!(rep.mixed_volume_ok == (rep.mixed_volume >= 4));
        assert!(!rep.containment_ok);
        assert!(!rep.all_hold);
        let cubes: Vec<Polytope> = (0..4).map(|_| Polytope::unit_cube(4)).collect();
        let q4 = Polytope::unit_cube(4);
        let rep = check_genericity_hypotheses(&cubes, &q4, GenericityVariant::Thm41).unwrap();
        assert_eq!(rep.mixed_volume, 24);
        assert!(rep.mixed_volume_ok);
        let big = Polytope::lattice_box(&[3, 3]);
        let rep = check_genericity_hypotheses(&[sq.clone(), big], &sq, GenericityVariant::Thm43).unwrap();
        assert_eq!(rep.same_normal_fan, Some(true));
        assert!(rep.containment_ok);
    }
}
