//! JSON problem files: a field, a square system, optional monomial sets and an
//! optional explicit solution set.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::DEFAULT_DISTANCE_BUDGET;
use crate::field::{Field, FieldElement, FieldError};
use crate::laurent::{LaurentError, LaurentPolynomial, MonomialSpace, Term};
use crate::lattice::{LatticeError, LatticeVector, Polytope};
use crate::system::{PolySystem, SystemError, DEFAULT_POINT_BUDGET, DEFAULT_SUBSET_BUDGET};

#[derive(Debug, Error)]
pub enum ProblemError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field: {0}")]
    Field(#[from] FieldError),
    #[error("polynomial: {0}")]
    Laurent(#[from] LaurentError),
    #[error("system: {0}")]
    System(#[from] SystemError),
    #[error("polytope: {0}")]
    Lattice(#[from] LatticeError),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

/// A polytope by its vertices, or an explicit finite set of lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointSet {
    Vertices(Vec<Vec<i64>>),
    Points(Vec<Vec<i64>>),
}

/// Budgets and search parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub point_budget: u64,
    pub subset_budget: u64,
    pub distance_budget: u64,
    pub seed: u64,
    /// Cap on the number of simplices in the noass search (default `|P°_Z|`).
    pub max_m: Option<usize>,
    /// Simplex catalog for the noass bound, as vertex lists.
    pub catalog: Option<Vec<Vec<Vec<i64>>>>,
    /// Monomial set `B` for the recip bound (default `Q`).
    #[serde(rename = "B")]
    pub b: Option<PointSet>,
    /// Number of prescribed curve points for the random-search sampler.
    pub prescribed_points: Option<usize>,
    /// `through_points` (default) or `uniform`.
    pub sampler: Option<String>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            point_budget: DEFAULT_POINT_BUDGET,
            subset_budget: DEFAULT_SUBSET_BUDGET,
            distance_budget: DEFAULT_DISTANCE_BUDGET,
            seed: 0,
            max_m: None,
            catalog: None,
            b: None,
            prescribed_points: None,
            sampler: None,
        }
    }
}

/// Reference values a run is compared against.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Expected {
    pub solutions: Option<Vec<Vec<String>>>,
    pub mixed_volume: Option<u64>,
    pub certified: Option<bool>,
    pub euler_jacobi: Option<bool>,
    pub assumption4: Option<bool>,
    #[serde(rename = "N")]
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub d: Option<usize>,
    pub d_at_least: Option<usize>,
    pub mds: Option<bool>,
    pub kernel_dim: Option<usize>,
    pub kernel_contains: Option<Vec<Vec<Term>>>,
    pub ass_bound: Option<usize>,
    pub noass_bound: Option<usize>,
}

/// The file as written.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default)]
    pub name: Option<String>,
    pub field: FieldSpec,
    pub nvars: usize,
    pub system: Vec<Vec<Term>>,
    /// Polytopes for random search (default: the Newton polytopes of `system`).
    #[serde(default)]
    pub polytopes: Option<Vec<PointSet>>,
    #[serde(rename = "A", default)]
    pub a: Option<PointSet>,
    #[serde(rename = "Q", default)]
    pub q: Option<PointSet>,
    #[serde(rename = "S", default)]
    pub s: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub config: Config,
    #[serde(default)]
    pub expected: Option<Expected>,
}

/// A monomial set together with its convex hull.
#[derive(Clone, Debug)]
pub struct MonomialSet {
    pub space: MonomialSpace,
    pub hull: Polytope,
}

/// A validated problem.
#[derive(Clone, Debug)]
pub struct Problem {
    pub name: String,
    pub field: Field,
    pub system: PolySystem,
    pub polytopes: Vec<Polytope>,
    pub a: Option<MonomialSet>,
    pub q: Option<Polytope>,
    pub b: Option<MonomialSet>,
    pub s: Option<Vec<Vec<FieldElement>>>,
    pub catalog: Option<Vec<Polytope>>,
    pub config: Config,
    pub expected: Option<Expected>,
}

fn check_dims(pts: &[Vec<i64>], n: usize, what: &str) -> Result<(), ProblemError> {
    if pts.is_empty() {
        return Err(ProblemError::Invalid(format!("{what}: empty point list")));
    }
    match pts.iter().find(|p| p.len() != n) {
        Some(p) => Err(ProblemError::Invalid(format!("{what}: point {p:?} is not in dimension {n}"))),
        None => Ok(()),
    }
}

impl PointSet {
    fn to_polytope(&self, n: usize, what: &str) -> Result<Polytope, ProblemError> {
        let (PointSet::Vertices(v) | PointSet::Points(v)) = self;
        check_dims(v, n, what)?;
        Ok(Polytope::hull(v.iter().cloned().map(LatticeVector))?)
    }

    fn to_monomials(&self, field: &Field, n: usize, what: &str) -> Result<MonomialSet, ProblemError> {
        let hull = self.to_polytope(n, what)?;
        let space = match self {
            PointSet::Vertices(_) => MonomialSpace::from_polytope(field, &hull),
            PointSet::Points(p) => MonomialSpace::new(field, p.iter().cloned().map(LatticeVector)),
        };
        Ok(MonomialSet { space, hull })
    }

    pub fn from_polytope(p: &Polytope) -> PointSet {
        PointSet::Vertices(p.vertices().iter().map(|v| v.0.clone()).collect())
    }
}

impl ProblemFile {
    pub fn from_json(s: &str) -> Result<ProblemFile, ProblemError> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn validate(&self) -> Result<Problem, ProblemError> {
        let field = Field::with_modulus(self.field.p, self.field.m, self.field.modulus.as_deref())?;
        let n = self.nvars;
        if n == 0 || n > crate::lattice::MAX_DIM {
            return Err(ProblemError::Invalid(format!("nvars must be in 1..={}", crate::lattice::MAX_DIM)));
        }
        if let Some((i, _)) = self.system.iter().flatten().enumerate().find(|(_, t)| t.exp.len() != n) {
            return Err(ProblemError::Invalid(format!("term {i} has the wrong number of exponents")));
        }
        let polys: Vec<LaurentPolynomial> = self
            .system
            .iter()
            .map(|terms| LaurentPolynomial::from_json_terms(&field, n, terms))
            .collect::<Result<_, _>>()?;
        let system = PolySystem::new(polys)?;
        let polytopes = match &self.polytopes {
            Some(ps) => ps
                .iter()
                .enumerate()
                .map(|(i, p)| p.to_polytope(n, &format!("polytope {i}")))
                .collect::<Result<Vec<_>, _>>()?,
            None => system.newton_polytopes().to_vec(),
        };
        if polytopes.len() != n {
            return Err(ProblemError::Invalid(format!("expected {n} polytopes, got {}", polytopes.len())));
        }
        let a = self.a.as_ref().map(|a| a.to_monomials(&field, n, "A")).transpose()?;
        let q = self.q.as_ref().map(|q| q.to_polytope(n, "Q")).transpose()?;
        let b = self.config.b.as_ref().map(|b| b.to_monomials(&field, n, "B")).transpose()?;
        let s = self
            .s
            .as_ref()
            .map(|pts| {
                pts.iter()
                    .map(|p| {
                        if p.len() != n {
                            return Err(ProblemError::Invalid(format!("S: point {p:?} is not in dimension {n}")));
                        }
                        p.iter().map(|c| field.parse(c).map_err(ProblemError::from)).collect()
                    })
                    .collect::<Result<Vec<Vec<FieldElement>>, _>>()
            })
            .transpose()?;
        let catalog = self
            .config
            .catalog
            .as_ref()
            .map(|cat| {
                cat.iter()
                    .enumerate()
                    .map(|(i, v)| {
                        check_dims(v, n, &format!("catalog entry {i}"))?;
                        Ok(Polytope::hull(v.iter().cloned().map(LatticeVector))?)
                    })
                    .collect::<Result<Vec<_>, ProblemError>>()
            })
            .transpose()?;
        Ok(Problem {
            name: self.name.clone().unwrap_or_else(|| "problem".to_string()),
            field,
            system,
            polytopes,
            a,
            q,
            b,
            s,
            catalog,
            config: self.config.clone(),
            expected: self.expected.clone(),
        })
    }
}

impl Problem {
    pub fn from_json(s: &str) -> Result<Problem, ProblemError> {
        ProblemFile::from_json(s)?.validate()
    }
}
