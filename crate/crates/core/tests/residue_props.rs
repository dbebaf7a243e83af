mod common;

use common::{fixture, random_split_system};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_codes::field::{Field, FieldElement};
use toric_codes::laurent::{LaurentPolynomial, MonomialSpace};
use toric_codes::linalg::rank_of_rows;
use toric_codes::residue::{ResidueContext, ResidueError};
use toric_codes::system::{check_bkk, solve_torus, verify_solutions, PolySystem, DEFAULT_POINT_BUDGET};

fn context(sys: &PolySystem) -> ResidueContext {
    let mut sol = solve_torus(sys, DEFAULT_POINT_BUDGET).unwrap();
    assert!(check_bkk(sys, &mut sol).certified);
    ResidueContext::new(sys, &sol).unwrap()
}

fn random_in(space: &MonomialSpace, rng: &mut impl Rng) -> LaurentPolynomial {
    let f = space.field();
    let c: Vec<FieldElement> = (0..space.len()).map(|_| f.element(rng.random_range(0..f.order()))).collect();
    space.polynomial(&c)
}

fn split_context(seed: u64, d1: usize, d2: usize) -> (Field, PolySystem, ResidueContext, ChaCha8Rng) {
    let f = Field::new(2, 4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (sys, _) = random_split_system(&f, d1, d2, &mut rng);
    let ctx = context(&sys);
    (f, sys, ctx, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn residue_sum_is_linear(seed: u64, d1 in 1usize..=4, d2 in 1usize..=4, a in 0u32..16) {
        let (f, sys, ctx, mut rng) = split_context(seed, d1, d2);
        let space = MonomialSpace::from_polytope(&f, sys.minkowski_sum());
        let (h1, h2) = (random_in(&space, &mut rng), random_in(&space, &mut rng));
        let a = f.element(a);
        let lhs = ctx.residue_sum(&(&h1.scale(a) + &h2)).unwrap();
        let rhs = f.add(f.mul(a, ctx.residue_sum(&h1).unwrap()), ctx.residue_sum(&h2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_jacobi_on_split_systems(seed: u64, d1 in 1usize..=4, d2 in 1usize..=4) {
        let (_, _, ctx, _) = split_context(seed, d1, d2);
        prop_assert!(ctx.verify_euler_jacobi());
    }

    #[test]
    fn zero_sum_interpolants_are_correct(seed: u64, d1 in 2usize..=4, d2 in 2usize..=4) {
        let (f, sys, ctx, mut rng) = split_context(seed, d1, d2);
        let n = ctx.solutions().len();
        let mut phi: Vec<FieldElement> = (0..n).map(|_| f.element(rng.random_range(0..f.order()))).collect();
        let rest = phi[1..].iter().fold(f.zero(), |acc, &x| f.add(acc, x));
        phi[0] = f.neg(rest);
        if let Some(h) = ctx.interpolate_zero_sum(&phi).unwrap() {
            let interior = sys.minkowski_sum().interior_lattice_points();
            for (e, _) in h.terms() {
                prop_assert!(interior.contains(e));
            }
            for (k, p) in ctx.solutions().points().iter().enumerate() {
                prop_assert_eq!(h.evaluate(p).unwrap(), f.mul(ctx.solutions().jacobian_values()[k], phi[k]));
            }
        }
    }

    #[test]
    fn full_interpolants_are_correct(seed: u64, d1 in prop::sample::select(vec![1usize, 3]), d2 in prop::sample::select(vec![1usize, 3])) {
        // |S| = d1 d2 is odd, so the characteristic 2 does not divide it
        let (f, sys, ctx, mut rng) = split_context(seed, d1, d2);
        let n = ctx.solutions().len();
        let psi: Vec<FieldElement> = (0..n).map(|_| f.element(rng.random_range(0..f.order()))).collect();
        let Some(g) = ctx.interpolate_full(&psi).unwrap() else { return Ok(()) };
        for (k, p) in ctx.solutions().points().iter().enumerate() {
            prop_assert_eq!(g.evaluate(p).unwrap(), psi[k]);
        }
        // g lies in span{t^u : u in P°_Z} + span{J}
        let mut basis: Vec<LaurentPolynomial> = sys
            .interior_monomials()
            .points()
            .iter()
            .map(|u| LaurentPolynomial::monomial(&f, u.clone(), f.one()))
            .collect();
        basis.push(sys.jacobian().clone());
        let support: Vec<_> = basis.iter().chain([&g]).flat_map(|p| p.support()).collect();
        let space = MonomialSpace::new(&f, support);
        let mut rows: Vec<Vec<FieldElement>> = basis.iter().map(|b| space.coordinates(b).unwrap()).collect();
        let r = rank_of_rows(&f, &mut rows.clone());
        rows.push(space.coordinates(&g).unwrap());
        prop_assert_eq!(rank_of_rows(&f, &mut rows), r);
    }
}

#[test]
fn euler_jacobi_on_examples() {
    for (name, interior) in [("ex53", 9), ("ex54_a", 23)] {
        let pr = fixture(name);
        let mut sol = match &pr.s {
            Some(s) => verify_solutions(&pr.system, s.clone()).unwrap(),
            None => solve_torus(&pr.system, DEFAULT_POINT_BUDGET).unwrap(),
        };
        assert!(check_bkk(&pr.system, &mut sol).certified);
        let ctx = ResidueContext::new(&pr.system, &sol).unwrap();
        assert_eq!(ctx.interior_monomials().len(), interior);
        assert!(ctx.euler_jacobi_failures().is_empty(), "{name}");
    }
}

#[test]
fn even_count_in_characteristic_two_is_refused() {
    let pr = fixture("ex53");
    let mut sol = solve_torus(&pr.system, DEFAULT_POINT_BUDGET).unwrap();
    check_bkk(&pr.system, &mut sol);
    let ctx = ResidueContext::new(&pr.system, &sol).unwrap();
    let psi = vec![pr.field.one(); 8];
    assert_eq!(ctx.interpolate_full(&psi), Err(ResidueError::CharacteristicDividesCount { p: 2, count: 8 }));
}

#[test]
fn uncertified_contexts_are_refused() {
    let pr = fixture("ex53");
    let sol = solve_torus(&pr.system, DEFAULT_POINT_BUDGET).unwrap();
    assert!(matches!(ResidueContext::new(&pr.system, &sol), Err(ResidueError::NotCertified)));
}
