//! Command implementations behind the `toric-codes` binary. Each command
//! returns a JSON report and an exit status; the binary only does I/O.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::bounds::{
    bound_ass, bound_noass, bound_recip, bound_trivial, default_simplex_catalog, verify_witness, BoundError,
    BoundKind, BoundReport,
};
use crate::codes::{build_code, CodeError, LinearCode};
use crate::field::{Field, FieldElement};
use crate::laurent::{LaurentPolynomial, MonomialSpace, Term};
use crate::lattice::{LatticeVector, Polytope};
use crate::linalg::rank_of_rows;
use crate::problem::{Expected, Problem, ProblemError};
use crate::residue::{ResidueContext, ResidueError, Solvability};
use crate::system::{
    check_assumption4, check_bkk, check_genericity_hypotheses, find_assumption4_violation, random_system_through_points,
    random_system_with, solve_torus, verify_solutions, CertReport, GenericityVariant, HypothesisReport, PolySystem,
    SolutionSet, SystemError,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VIOLATED: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const BUDGET: i32 = 3;
}

/// Embedded reference fixtures: `(name, json)`.
pub const PAPER_FIXTURES: [(&str, &str); 5] = [
    ("ex53", include_str!("../fixtures/ex53.json")),
    ("ex54_square", include_str!("../fixtures/ex54_square.json")),
    ("ex54_a", include_str!("../fixtures/ex54_a.json")),
    ("ex54_b", include_str!("../fixtures/ex54_b.json")),
    ("ex54_c", include_str!("../fixtures/ex54_c.json")),
];

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error("explicit solution set rejected: {0}")]
    Rejected(SystemError),
    #[error("{0}")]
    Missing(&'static str),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("{0}")]
    Failed(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Problem(_) | RunError::Rejected(_) | RunError::Missing(_) => exit::PARSE,
            RunError::Budget(_) => exit::BUDGET,
            RunError::Failed(_) => exit::VIOLATED,
        }
    }
}

impl From<SystemError> for RunError {
    fn from(e: SystemError) -> Self {
        match e {
            SystemError::BudgetExceeded { .. } => RunError::Budget(e.to_string()),
            e => RunError::Failed(e.to_string()),
        }
    }
}

impl From<CodeError> for RunError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::BudgetExceeded { .. } => RunError::Budget(e.to_string()),
            e => RunError::Failed(e.to_string()),
        }
    }
}

impl From<ResidueError> for RunError {
    fn from(e: ResidueError) -> Self {
        RunError::Failed(e.to_string())
    }
}

/// Work limits; command-line flags override the problem file.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub point_budget: Option<u64>,
    pub subset_budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
struct Budgets {
    points: u64,
    subsets: u64,
    distance: u64,
}

impl Budgets {
    fn of(pr: &Problem, o: Overrides) -> Budgets {
        Budgets {
            points: o.point_budget.unwrap_or(pr.config.point_budget),
            subsets: o.subset_budget.unwrap_or(pr.config.subset_budget),
            distance: pr.config.distance_budget,
        }
    }
}

/// A finished command.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: i32,
}

impl Outcome {
    fn new(report: impl Serialize, exit_code: i32) -> Outcome {
        Outcome { report: serde_json::to_value(report).expect("reports serialize"), exit_code }
    }

    /// Report for a command that could not run.
    pub fn from_error(command: &str, e: &RunError) -> Outcome {
        Outcome::new(
            serde_json::json!({
                "schema": format!("toric-codes.{command}"),
                "version": SCHEMA_VERSION,
                "error": e.to_string(),
            }),
            e.exit_code(),
        )
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("reports serialize")
    }
}

fn literals(f: &Field, v: &[FieldElement]) -> Vec<String> {
    v.iter().map(|&x| f.format(x)).collect()
}

/// Either the verified explicit `S` or all torus solutions, then certified.
fn solution_set(pr: &Problem, b: Budgets) -> Result<(SolutionSet, CertReport, &'static str), RunError> {
    let (mut sol, source) = match &pr.s {
        Some(s) => (verify_solutions(&pr.system, s.clone()).map_err(RunError::Rejected)?, "explicit"),
        None => (solve_torus(&pr.system, b.points)?, "enumerated"),
    };
    let cert = check_bkk(&pr.system, &mut sol);
    Ok((sol, cert, source))
}

#[derive(Clone, Debug, Serialize)]
struct EulerJacobi {
    verified: bool,
    interior_monomials: usize,
    failures: Vec<LatticeVector>,
}

/// Solvability of `h|_S = J phi` for `phi = e_0 - e_k`, and of `g|_S = e_0`.
#[derive(Clone, Debug, Serialize)]
struct Interpolation {
    zero_sum: Vec<Solvability>,
    full: Option<Solvability>,
    full_skipped: Option<String>,
}

fn euler_jacobi(ctx: &ResidueContext) -> EulerJacobi {
    let failures = ctx.euler_jacobi_failures();
    EulerJacobi { verified: failures.is_empty(), interior_monomials: ctx.interior_monomials().len(), failures }
}

fn interpolation(f: &Field, ctx: &ResidueContext) -> Result<Interpolation, RunError> {
    let n = ctx.solutions().len();
    let mut zero_sum = Vec::new();
    for k in 1..n {
        let mut phi = vec![f.zero(); n];
        phi[0] = f.one();
        phi[k] = f.neg(f.one());
        zero_sum.push(ctx.zero_sum_solvability(&phi)?);
    }
    let mut psi = vec![f.zero(); n];
    if n > 0 {
        psi[0] = f.one();
    }
    let (full, full_skipped) = match ctx.interpolate_full(&psi) {
        Ok(g) => (Some(if g.is_some() { Solvability::Solvable } else { Solvability::Unsolvable }), None),
        Err(e @ ResidueError::CharacteristicDividesCount { .. }) => (None, Some(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    Ok(Interpolation { zero_sum, full, full_skipped })
}

#[derive(Clone, Debug, Serialize)]
struct SolveReport {
    schema: &'static str,
    version: u32,
    name: String,
    field: String,
    modulus: Vec<u32>,
    system: Vec<Vec<Term>>,
    newton_polytopes: Vec<Polytope>,
    minkowski_sum: Polytope,
    jacobian: Vec<Term>,
    source: &'static str,
    solutions: Vec<Vec<String>>,
    jacobian_values: Vec<String>,
    certification: CertReport,
    euler_jacobi: Option<EulerJacobi>,
    interpolation: Option<Interpolation>,
}

fn solve_report(pr: &Problem, b: Budgets) -> Result<SolveReport, RunError> {
    let f = &pr.field;
    let (sol, cert, source) = solution_set(pr, b)?;
    let (ej, interp) = if cert.certified {
        let ctx = ResidueContext::new(&pr.system, &sol)?;
        (Some(euler_jacobi(&ctx)), Some(interpolation(f, &ctx)?))
    } else {
        (None, None)
    };
    Ok(SolveReport {
        schema: "toric-codes.solve",
        version: SCHEMA_VERSION,
        name: pr.name.clone(),
        field: f.to_string(),
        modulus: f.modulus().to_vec(),
        system: pr.system.polys().iter().map(LaurentPolynomial::to_json_terms).collect(),
        newton_polytopes: pr.system.newton_polytopes().to_vec(),
        minkowski_sum: pr.system.minkowski_sum().clone(),
        jacobian: pr.system.jacobian().to_json_terms(),
        source,
        solutions: sol.to_literals(f),
        jacobian_values: literals(f, sol.jacobian_values()),
        certification: cert,
        euler_jacobi: ej,
        interpolation: interp,
    })
}

/// `solve`: solution set, certification, Euler–Jacobi check. Exit 0 iff certified.
pub fn cmd_solve(pr: &Problem, o: Overrides) -> Outcome {
    match solve_report(pr, Budgets::of(pr, o)) {
        Ok(r) => {
            let ok = r.certification.certified && r.euler_jacobi.as_ref().is_some_and(|e| e.verified);
            Outcome::new(r, if ok { exit::OK } else { exit::VIOLATED })
        }
        Err(e) => Outcome::from_error("solve", &e),
    }
}

#[derive(Clone, Debug, Serialize)]
struct Assumption4 {
    q: Polytope,
    q_lattice_points: usize,
    holds: Option<bool>,
    violating_subset: Option<Vec<usize>>,
    error: Option<String>,
}

fn assumption4(pr: &Problem, sol: &SolutionSet, b: Budgets) -> Option<Assumption4> {
    let q = pr.q.as_ref()?;
    let qn = q.lattice_points().len();
    let (holds, violating_subset, error) = match find_assumption4_violation(&pr.field, sol.points(), q, b.subsets) {
        Ok(v) => (Some(v.is_none()), v, None),
        Err(e) => (None, None, Some(e.to_string())),
    };
    Some(Assumption4 { q: q.clone(), q_lattice_points: qn, holds, violating_subset, error })
}

#[derive(Clone, Debug, Serialize)]
struct BoundEntry {
    #[serde(flatten)]
    report: BoundReport,
    witness_verified: bool,
    /// `value <= d`; absent when `d` was not computed.
    sound: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
struct SkippedBound {
    kind: BoundKind,
    reason: String,
    budget_exceeded: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
struct Bounds {
    bounds: Vec<BoundEntry>,
    skipped: Vec<SkippedBound>,
}

impl Bounds {
    fn push(&mut self, kind: BoundKind, r: Result<BoundReport, BoundError>, a: &Polytope, p: &Polytope, d: Option<usize>) {
        match r {
            Ok(report) => {
                let witness_verified = verify_witness(&report, a, p);
                let sound = d.map(|d| report.value <= d);
                self.bounds.push(BoundEntry { report, witness_verified, sound });
            }
            Err(e) => {
                let budget_exceeded = matches!(e, BoundError::System(SystemError::BudgetExceeded { .. }));
                self.skipped.push(SkippedBound { kind, reason: e.to_string(), budget_exceeded });
            }
        }
    }

    fn get(&self, kind: BoundKind) -> Option<usize> {
        self.bounds.iter().find(|e| e.report.kind == kind).map(|e| e.report.value)
    }

    fn exit_code(&self) -> i32 {
        if self.bounds.iter().any(|e| !e.witness_verified || e.sound == Some(false)) {
            exit::VIOLATED
        } else if self.skipped.iter().any(|s| s.budget_exceeded) {
            exit::BUDGET
        } else {
            exit::OK
        }
    }
}

fn all_bounds(
    pr: &Problem,
    a: &Polytope,
    sol: &SolutionSet,
    a4: Option<bool>,
    b: Budgets,
    d: Option<usize>,
) -> Bounds {
    let p = pr.system.minkowski_sum();
    let mut out = Bounds::default();
    out.push(BoundKind::Trivial, Ok(bound_trivial(a, p, sol.len())), a, p, d);
    if let Some(q) = &pr.q {
        out.push(BoundKind::Ass, bound_ass(a, p, q, a4), a, p, d);
    }
    let catalog = match &pr.catalog {
        Some(c) => Ok(c.clone()),
        None => default_simplex_catalog(pr.system.nvars()),
    };
    let max_m = pr.config.max_m.unwrap_or_else(|| p.interior_lattice_points().len());
    out.push(BoundKind::Noass, catalog.and_then(|c| bound_noass(a, p, &c, max_m)), a, p, d);
    let bspace = match (&pr.b, &pr.q) {
        (Some(b), _) => Some(b.space.clone()),
        (None, Some(q)) => Some(MonomialSpace::from_polytope(&pr.field, q)),
        (None, None) => None,
    };
    if let Some(bs) = bspace {
        out.push(BoundKind::Recip, bound_recip(a, &bs, p, sol.points(), b.subsets), a, p, d);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
struct CodeReport {
    schema: &'static str,
    version: u32,
    name: String,
    field: String,
    #[serde(rename = "A")]
    a: Polytope,
    monomials: Vec<LatticeVector>,
    num_solutions: usize,
    certified: bool,
    #[serde(rename = "N")]
    n: usize,
    k: usize,
    d: usize,
    singleton: usize,
    mds: bool,
    min_weight_codeword: Vec<String>,
    min_weight_polynomial: Vec<Term>,
    kernel_dim: usize,
    kernel: Vec<Vec<Term>>,
    generator: Vec<Vec<String>>,
    assumption4: Option<Assumption4>,
    #[serde(flatten)]
    bounds: Bounds,
}

/// Polynomial in `L(A)` whose evaluation vector is `c`.
fn preimage(code: &LinearCode, c: &[FieldElement]) -> Vec<Term> {
    let e = code.evaluation_data().expect("evaluation code");
    let x = e.raw.transpose().solve(c).expect("codewords are evaluations");
    e.monomials.polynomial(&x).to_json_terms()
}

fn code_report(pr: &Problem, b: Budgets) -> Result<CodeReport, RunError> {
    let a = pr.a.as_ref().ok_or(RunError::Missing("the problem has no monomial set A"))?;
    let f = &pr.field;
    let (sol, cert, _) = solution_set(pr, b)?;
    let code = build_code(&sol, &a.space)?;
    let md = code.minimum_distance(b.distance)?;
    let a4 = assumption4(pr, &sol, b);
    let bounds = if cert.certified {
        all_bounds(pr, &a.hull, &sol, a4.as_ref().and_then(|x| x.holds), b, Some(md.d))
    } else {
        Bounds::default()
    };
    Ok(CodeReport {
        schema: "toric-codes.code",
        version: SCHEMA_VERSION,
        name: pr.name.clone(),
        field: f.to_string(),
        a: a.hull.clone(),
        monomials: a.space.points().to_vec(),
        num_solutions: sol.len(),
        certified: cert.certified,
        n: code.length(),
        k: code.dimension(),
        d: md.d,
        singleton: code.length() - code.dimension() + 1,
        mds: code.is_mds(md.d),
        min_weight_polynomial: preimage(&code, &md.witness),
        min_weight_codeword: literals(f, &md.witness),
        kernel_dim: code.kernel().len(),
        kernel: code.kernel().iter().map(LaurentPolynomial::to_json_terms).collect(),
        generator: code.generator().to_literals(),
        assumption4: a4,
        bounds,
    })
}

/// `code`: parameters, kernel, exact distance and every applicable bound.
/// Exit 1 if the system is not certified or a bound fails its checks.
pub fn cmd_code(pr: &Problem, o: Overrides) -> Outcome {
    match code_report(pr, Budgets::of(pr, o)) {
        Ok(r) => {
            let code = if r.certified { r.bounds.exit_code() } else { exit::VIOLATED };
            Outcome::new(r, code)
        }
        Err(e) => Outcome::from_error("code", &e),
    }
}

#[derive(Clone, Debug, Serialize)]
struct BoundsReport {
    schema: &'static str,
    version: u32,
    name: String,
    #[serde(rename = "A")]
    a: Polytope,
    num_solutions: usize,
    certified: bool,
    assumption4: Option<Assumption4>,
    genericity: Vec<HypothesisReport>,
    #[serde(flatten)]
    bounds: Bounds,
}

fn bounds_report(pr: &Problem, b: Budgets) -> Result<BoundsReport, RunError> {
    let a = pr.a.as_ref().ok_or(RunError::Missing("the problem has no monomial set A"))?;
    let (sol, cert, _) = solution_set(pr, b)?;
    let a4 = assumption4(pr, &sol, b);
    let genericity = match &pr.q {
        Some(q) => [GenericityVariant::Thm41, GenericityVariant::Thm43]
            .into_iter()
            .map(|v| check_genericity_hypotheses(pr.system.newton_polytopes(), q, v))
            .collect::<Result<_, _>>()?,
        None => Vec::new(),
    };
    let bounds = if cert.certified {
        all_bounds(pr, &a.hull, &sol, a4.as_ref().and_then(|x| x.holds), b, None)
    } else {
        Bounds::default()
    };
    Ok(BoundsReport {
        schema: "toric-codes.bounds",
        version: SCHEMA_VERSION,
        name: pr.name.clone(),
        a: a.hull.clone(),
        num_solutions: sol.len(),
        certified: cert.certified,
        assumption4: a4,
        genericity,
        bounds,
    })
}

/// `bounds`: lower bounds with witnesses, without computing `d`.
pub fn cmd_bounds(pr: &Problem, o: Overrides) -> Outcome {
    match bounds_report(pr, Budgets::of(pr, o)) {
        Ok(r) => {
            let code = if r.certified { r.bounds.exit_code() } else { exit::VIOLATED };
            Outcome::new(r, code)
        }
        Err(e) => Outcome::from_error("bounds", &e),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Divergence {
    pub quantity: String,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Clone, Debug, Serialize)]
struct ExampleResult {
    name: String,
    pass: bool,
    first_divergence: Option<Divergence>,
    error: Option<String>,
}

/// Whether each expected polynomial lies in the span of the kernel basis.
fn kernel_contains(pr: &Problem, code: &LinearCode, polys: &[Vec<Term>]) -> Result<Vec<bool>, RunError> {
    let f = &pr.field;
    let a = &pr.a.as_ref().expect("code built").space;
    let basis: Vec<Vec<FieldElement>> =
        code.kernel().iter().map(|k| a.coordinates(k).expect("kernel lies in L(A)")).collect();
    let base_rank = rank_of_rows(f, &mut basis.clone());
    polys
        .iter()
        .map(|terms| {
            let g = LaurentPolynomial::from_json_terms(f, pr.system.nvars(), terms).map_err(ProblemError::from)?;
            Ok(match a.coordinates(&g) {
                Some(c) => {
                    let mut rows = basis.clone();
                    rows.push(c);
                    rank_of_rows(f, &mut rows) == base_rank
                }
                None => false,
            })
        })
        .collect()
}

/// First quantity (in a fixed order) where the run disagrees with `exp`.
fn compare(pr: &Problem, exp: &Expected, b: Budgets) -> Result<Option<Divergence>, RunError> {
    fn check<T: Serialize + PartialEq>(q: &str, want: &Option<T>, got: impl FnOnce() -> T) -> Option<Divergence> {
        let want = want.as_ref()?;
        let got = got();
        (*want != got).then(|| Divergence {
            quantity: q.to_string(),
            expected: serde_json::to_value(want).expect("serializable"),
            actual: serde_json::to_value(&got).expect("serializable"),
        })
    }
    let f = &pr.field;
    let (sol, cert, _) = match solution_set(pr, b) {
        Err(RunError::Rejected(e)) => {
            return Ok(Some(Divergence {
                quantity: "solutions".into(),
                expected: Value::from("every listed point is a simple torus zero"),
                actual: Value::from(e.to_string()),
            }))
        }
        r => r?,
    };
    let solutions = sol.to_literals(f);
    let first = check("solutions", &exp.solutions, || solutions.clone())
        .or_else(|| check("mixed_volume", &exp.mixed_volume, || cert.mixed_volume))
        .or_else(|| check("num_solutions", &exp.mixed_volume, || cert.num_solutions as u64))
        .or_else(|| check("certified", &exp.certified, || cert.certified));
    if first.is_some() {
        return Ok(first);
    }
    let ctx = cert.certified.then(|| ResidueContext::new(&pr.system, &sol)).transpose()?;
    if let Some(d) = check("euler_jacobi", &exp.euler_jacobi, || ctx.as_ref().is_some_and(|c| c.verify_euler_jacobi())) {
        return Ok(Some(d));
    }
    if let Some(want) = exp.assumption4 {
        let q = pr.q.as_ref().ok_or(RunError::Missing("an independence check was expected but the problem has no Q"))?;
        let got = check_assumption4(f, sol.points(), q, b.subsets)?;
        if let Some(d) = check("assumption4", &Some(want), || got) {
            return Ok(Some(d));
        }
    }
    let Some(a) = &pr.a else { return Ok(None) };
    let code = build_code(&sol, &a.space)?;
    let (n, k) = (code.length(), code.dimension());
    let needs_d = exp.d.is_some() || exp.d_at_least.is_some() || exp.mds.is_some();
    let d = if needs_d { Some(code.minimum_distance(b.distance)?.d) } else { None };
    let first = check("N", &exp.n, || n)
        .or_else(|| check("k", &exp.k, || k))
        .or_else(|| check("d", &exp.d, || d.expect("computed")))
        .or_else(|| {
            let lo = exp.d_at_least?;
            let got = d.expect("computed");
            (got < lo).then(|| Divergence {
                quantity: "d_at_least".into(),
                expected: Value::from(lo),
                actual: Value::from(got),
            })
        })
        .or_else(|| check("mds", &exp.mds, || code.is_mds(d.expect("computed"))))
        .or_else(|| check("kernel_dim", &exp.kernel_dim, || code.kernel().len()));
    if first.is_some() {
        return Ok(first);
    }
    if let Some(polys) = &exp.kernel_contains {
        let got = kernel_contains(pr, &code, polys)?;
        if let Some(d) = check("kernel_contains", &Some(vec![true; polys.len()]), || got) {
            return Ok(Some(d));
        }
    }
    if exp.ass_bound.is_some() || exp.noass_bound.is_some() {
        let a4 = pr.q.as_ref().map(|q| check_assumption4(f, sol.points(), q, b.subsets)).transpose()?;
        let bounds = all_bounds(pr, &a.hull, &sol, a4, b, d);
        if let Some(dv) = check("ass_bound", &exp.ass_bound.map(Some), || bounds.get(BoundKind::Ass))
            .or_else(|| check("noass_bound", &exp.noass_bound.map(Some), || bounds.get(BoundKind::Noass)))
        {
            return Ok(Some(dv));
        }
        if let Some(bad) = bounds.bounds.iter().find(|e| !e.witness_verified || e.sound == Some(false)) {
            return Ok(Some(Divergence {
                quantity: format!("{:?} bound", bad.report.kind).to_lowercase(),
                expected: Value::from(format!("a verified bound <= d = {d:?}")),
                actual: serde_json::to_value(&bad.report).expect("serializable"),
            }));
        }
    }
    Ok(None)
}

fn run_example(name: &str, json: &str, o: Overrides) -> ExampleResult {
    let res = Problem::from_json(json).map_err(RunError::from).and_then(|pr| {
        let exp = pr.expected.clone().unwrap_or_default();
        compare(&pr, &exp, Budgets::of(&pr, o))
    });
    match res {
        Ok(div) => ExampleResult { name: name.to_string(), pass: div.is_none(), first_divergence: div, error: None },
        Err(e) => ExampleResult { name: name.to_string(), pass: false, first_divergence: None, error: Some(e.to_string()) },
    }
}

#[derive(Clone, Debug, Serialize)]
struct ExamplesReport {
    schema: &'static str,
    version: u32,
    all_pass: bool,
    examples: Vec<ExampleResult>,
}

/// Check each `(name, json)` fixture against its `expected` block.
pub fn cmd_check_fixtures(fixtures: &[(&str, &str)], o: Overrides) -> Outcome {
    let examples: Vec<ExampleResult> = fixtures.iter().map(|(n, j)| run_example(n, j, o)).collect();
    let all_pass = examples.iter().all(|e| e.pass);
    Outcome::new(
        ExamplesReport { schema: "toric-codes.paper-examples", version: SCHEMA_VERSION, all_pass, examples },
        if all_pass { exit::OK } else { exit::VIOLATED },
    )
}

/// `paper-examples`: the embedded fixtures.
pub fn cmd_paper_examples(o: Overrides) -> Outcome {
    cmd_check_fixtures(&PAPER_FIXTURES, o)
}

#[derive(Clone, Debug, Serialize)]
struct CodeParams {
    #[serde(rename = "N")]
    n: usize,
    k: usize,
    d: Option<usize>,
    error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Trial {
    pub trial: u64,
    pub generated: bool,
    pub num_solutions: Option<usize>,
    pub certified: bool,
    pub assumption4: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    code: Option<CodeParams>,
    pub system: Option<Vec<Vec<Term>>>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchSummary {
    pub trials: u64,
    pub generated: u64,
    pub certified: u64,
    pub certification_rate: f64,
    pub assumption4_checked: u64,
    pub assumption4_pass: u64,
    pub assumption4_rate: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub schema: &'static str,
    pub version: u32,
    pub field: String,
    pub polytopes: Vec<Polytope>,
    pub sampler: String,
    pub seed: u64,
    pub summary: SearchSummary,
    pub rows: Vec<Trial>,
}

fn rate(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

fn one_trial(pr: &Problem, sampler: &str, seed: u64, t: u64, b: Budgets) -> Trial {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(t);
    let mut row = Trial {
        trial: t,
        generated: false,
        num_solutions: None,
        certified: false,
        assumption4: None,
        code: None,
        system: None,
        error: None,
    };
    let sys: Result<Option<PolySystem>, SystemError> = match sampler {
        "uniform" => random_system_with(&pr.polytopes, &pr.field, &mut rng).map(Some),
        _ => random_system_through_points(&pr.polytopes, &pr.field, pr.config.prescribed_points, b.points, &mut rng),
    };
    let sys = match sys {
        Ok(Some(s)) => s,
        Ok(None) => return row,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.generated = true;
    row.system = Some(sys.polys().iter().map(LaurentPolynomial::to_json_terms).collect());
    let mut sol = match solve_torus(&sys, b.points) {
        Ok(s) => s,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.num_solutions = Some(sol.len());
    row.certified = check_bkk(&sys, &mut sol).certified;
    if !row.certified {
        return row;
    }
    if let Some(q) = &pr.q {
        match check_assumption4(&pr.field, sol.points(), q, b.subsets) {
            Ok(h) => row.assumption4 = Some(h),
            Err(e) => row.error = Some(e.to_string()),
        }
    }
    if let Some(a) = &pr.a {
        row.code = Some(match build_code(&sol, &a.space) {
            Ok(code) => {
                let (d, error) = match code.minimum_distance(b.distance) {
                    Ok(md) => (Some(md.d), None),
                    Err(e) => (None, Some(e.to_string())),
                };
                CodeParams { n: code.length(), k: code.dimension(), d, error }
            }
            Err(e) => CodeParams { n: sol.len(), k: 0, d: None, error: Some(e.to_string()) },
        });
    }
    row
}

/// Sample random systems on the problem's polytopes and tabulate how many are
/// certified and pass the independence check. Trial `t` uses ChaCha stream `t` of
/// `seed`, so rows do not depend on scheduling.
pub fn random_search(pr: &Problem, trials: u64, seed: u64, o: Overrides) -> SearchReport {
    let b = Budgets::of(pr, o);
    let sampler = pr.config.sampler.clone().unwrap_or_else(|| "through_points".to_string());
    let rows: Vec<Trial> = (0..trials).into_par_iter().map(|t| one_trial(pr, &sampler, seed, t, b)).collect();
    let count = |p: fn(&Trial) -> bool| rows.iter().filter(|r| p(r)).count() as u64;
    let generated = count(|r| r.generated);
    let certified = count(|r| r.certified);
    let assumption4_checked = count(|r| r.assumption4.is_some());
    let assumption4_pass = count(|r| r.assumption4 == Some(true));
    SearchReport {
        schema: "toric-codes.random-search",
        version: SCHEMA_VERSION,
        field: pr.field.to_string(),
        polytopes: pr.polytopes.clone(),
        sampler,
        seed,
        summary: SearchSummary {
            trials,
            generated,
            certified,
            certification_rate: rate(certified, trials),
            assumption4_checked,
            assumption4_pass,
            assumption4_rate: rate(assumption4_pass, assumption4_checked),
        },
        rows,
    }
}

/// `random-search`: always exits 0 once the file parses.
pub fn cmd_random_search(pr: &Problem, trials: u64, seed: u64, o: Overrides) -> Outcome {
    if !matches!(pr.config.sampler.as_deref(), None | Some("through_points") | Some("uniform")) {
        let e = RunError::Problem(ProblemError::Invalid("sampler must be \"through_points\" or \"uniform\"".into()));
        return Outcome::from_error("random-search", &e);
    }
    Outcome::new(random_search(pr, trials, seed, o), exit::OK)
}

/// Parse a problem file, mapping failures to a report with exit status 2.
pub fn load(command: &str, json: &str) -> Result<Problem, Outcome> {
    Problem::from_json(json).map_err(|e| Outcome::from_error(command, &RunError::from(e)))
}
