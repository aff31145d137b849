//! The task registry: every operation an instance file can invoke, its
//! arguments, and the handler that runs it against resolved objects.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::constructions::{
    dual_group_algebra, group_algebra, ore_center_slice, verify_theorem_te_example, ConstructionError, FiniteGroup,
    GradedAlgebra, OreData, OreTruncated,
};
use crate::galois::{
    adjoint_coaction_space, beta_map, centrally_galois_check, classical_g_galois_check, GaloisError, GaloisStructure,
};
use crate::homology::{
    coaction_on_hh_a, cyclic_complex, edge_map_phi, hochschild_over_coinvariants, induced_coaction_on_hh_b,
    induced_um_action_on_hh_b, lambda_action_on_hh_b, tor, tor_coaction_check, verify_corollary_co_iso,
    verify_theorem_izo1, verify_theorem_izo2, verify_theorem_izo3, verify_theorem_te_iso, verify_trivial_action,
    Hochschild, HomologyError,
};
use crate::hopf::{Algebra, AxiomCheck, HopfAlgebra, HopfError, TraceCoalgebra, ValidationReport};
use crate::instance::{parse_vector_value, BimoduleObject, Expectation, Extension, Instance, Object, TaskSpec};
use crate::linalg::{format_rational, quotient_by, LinalgError, Matrix, Rational, Subspace};
use crate::rep::{
    cotensor, relative_tensor, tensor_cotensor_commute_check, HopfBimodule, LeftComodule, LeftModule, ModuleComodule,
    RepError, RightComodule, RightModule,
};
use crate::report::{Report, Status, TaskReport};

pub const DEFAULT_TRUNCATION: usize = 3;

/// What a handler reports on success.
#[derive(Debug, Clone, PartialEq)]
pub struct TaskOutcome {
    pub passed: bool,
    pub summary: String,
    pub result: Value,
    pub counterexample: Option<Value>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TaskFailure {
    /// Arguments do not resolve or have the wrong kind.
    BadArgs(String),
    Unsupported(String),
    Failed {
        message: String,
        counterexample: Option<Value>,
    },
}

fn failed(message: impl ToString) -> TaskFailure {
    TaskFailure::Failed { message: message.to_string(), counterexample: None }
}

fn axiom_failure(axiom: &str, tuple: &[usize], message: String) -> TaskFailure {
    TaskFailure::Failed { message, counterexample: Some(json!({ "axiom": axiom, "tuple": tuple })) }
}

impl From<LinalgError> for TaskFailure {
    fn from(e: LinalgError) -> Self {
        failed(e)
    }
}

impl From<HopfError> for TaskFailure {
    fn from(e: HopfError) -> Self {
        match &e {
            HopfError::Axiom { axiom, tuple } => axiom_failure(axiom, tuple, e.to_string()),
            _ => failed(e),
        }
    }
}

impl From<RepError> for TaskFailure {
    fn from(e: RepError) -> Self {
        match &e {
            RepError::Axiom { axiom, tuple } => axiom_failure(axiom, tuple, e.to_string()),
            _ => failed(e),
        }
    }
}

impl From<GaloisError> for TaskFailure {
    fn from(e: GaloisError) -> Self {
        match &e {
            GaloisError::Axiom { axiom, tuple } => axiom_failure(axiom, tuple, e.to_string()),
            GaloisError::NotGalois { rows, cols, rank } => TaskFailure::Failed {
                message: e.to_string(),
                counterexample: Some(json!({ "beta_rows": rows, "beta_cols": cols, "beta_rank": rank })),
            },
            _ => failed(e),
        }
    }
}

impl From<ConstructionError> for TaskFailure {
    fn from(e: ConstructionError) -> Self {
        match &e {
            ConstructionError::NotStronglyGraded { g, h } => {
                TaskFailure::Failed { message: e.to_string(), counterexample: Some(json!({ "g": g, "h": h })) }
            }
            _ => failed(e),
        }
    }
}

impl From<HomologyError> for TaskFailure {
    fn from(e: HomologyError) -> Self {
        match e {
            HomologyError::Unsupported(m) => TaskFailure::Unsupported(m),
            HomologyError::NotSymmetric { z, m } => TaskFailure::Failed {
                message: e.to_string(),
                counterexample: Some(json!({ "center_basis": z, "module_basis": m })),
            },
            HomologyError::NotChainMap { ref what, degree } => TaskFailure::Failed {
                message: e.to_string(),
                counterexample: Some(json!({ "map": what, "degree": degree })),
            },
            HomologyError::Galois(g) => g.into(),
            HomologyError::Rep(r) => r.into(),
            HomologyError::Hopf(h) => h.into(),
            other => failed(other),
        }
    }
}

type Outcome = Result<TaskOutcome, TaskFailure>;

fn outcome(passed: bool, summary: impl Into<String>, result: Value) -> Outcome {
    Ok(TaskOutcome { passed, summary: summary.into(), result, counterexample: None })
}

fn with_counterexample(passed: bool, summary: impl Into<String>, result: Value, c: Option<Value>) -> Outcome {
    Ok(TaskOutcome { passed, summary: summary.into(), result, counterexample: if passed { None } else { c } })
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

pub fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_rational(x))).collect())
}

pub fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_json(m.row(i))).collect())
}

fn subspace_json(s: &Subspace) -> Value {
    json!({ "dim": s.dim(), "basis": s.basis_vectors().iter().map(|v| vector_json(v)).collect::<Vec<_>>() })
}

fn dims_str(d: &[usize]) -> String {
    format!("({})", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn first_failure_json(r: &ValidationReport) -> Option<Value> {
    r.first_failure().map(|c| json!({ "axiom": c.axiom, "tuple": c.counterexample }))
}

fn check_json(c: &AxiomCheck) -> Option<Value> {
    (!c.passed).then(|| json!({ "axiom": c.axiom, "tuple": c.counterexample }))
}

/// Arguments of one task, resolved against the instance.
pub struct Ctx<'a> {
    pub instance: &'a Instance,
    pub args: &'a BTreeMap<String, Value>,
    pub truncation: usize,
}

impl<'a> Ctx<'a> {
    fn name(&self, key: &str) -> Result<&'a str, TaskFailure> {
        self.args
            .get(key)
            .and_then(Value::as_str)
            .ok_or_else(|| TaskFailure::BadArgs(format!("missing argument {key:?}")))
    }

    fn object(&self, key: &str) -> Result<&'a Object, TaskFailure> {
        let n = self.name(key)?;
        self.instance.get(n).ok_or_else(|| TaskFailure::BadArgs(format!("unresolved reference {n:?}")))
    }

    fn wrong(&self, key: &str, want: &str, got: &Object) -> TaskFailure {
        TaskFailure::BadArgs(format!("argument {key:?} must be a {want}, got a {}", got.kind()))
    }

    fn hopf(&self) -> Result<&'a HopfAlgebra, TaskFailure> {
        match self.object("hopf")? {
            Object::Hopf(h) => Ok(h),
            Object::Extension(e) => Ok(e.comodule.hopf()),
            o => Err(self.wrong("hopf", "Hopf algebra", o)),
        }
    }

    fn algebra(&self) -> Result<&'a Algebra, TaskFailure> {
        let o = self.object("algebra")?;
        o.as_algebra().ok_or_else(|| self.wrong("algebra", "algebra", o))
    }

    fn matrix(&self, key: &str) -> Result<&'a Matrix, TaskFailure> {
        match self.object(key)? {
            Object::Matrix(m) => Ok(m),
            o => Err(self.wrong(key, "matrix", o)),
        }
    }

    fn group(&self) -> Result<&'a FiniteGroup, TaskFailure> {
        match self.object("group")? {
            Object::Group(g) => Ok(g),
            o => Err(self.wrong("group", "group", o)),
        }
    }

    fn graded(&self) -> Result<&'a GradedAlgebra, TaskFailure> {
        match self.object("graded")? {
            Object::Graded(g) => Ok(g),
            o => Err(self.wrong("graded", "graded algebra", o)),
        }
    }

    fn ore(&self) -> Result<&'a OreData, TaskFailure> {
        match self.object("ore")? {
            Object::Ore(o) => Ok(o),
            o => Err(self.wrong("ore", "Ore datum", o)),
        }
    }

    fn extension(&self) -> Result<&'a Extension, TaskFailure> {
        if self.args.contains_key("extension") {
            return match self.object("extension")? {
                Object::Extension(e) => Ok(e),
                o => Err(self.wrong("extension", "comodule algebra", o)),
            };
        }
        let b = self.bimodule_object()?;
        match self.instance.get(&b.extension) {
            Some(Object::Extension(e)) => Ok(e),
            _ => Err(TaskFailure::BadArgs(format!("extension {:?} of the bimodule is missing", b.extension))),
        }
    }

    fn bimodule_object(&self) -> Result<&'a BimoduleObject, TaskFailure> {
        match self.object("bimodule")? {
            Object::Bimodule(b) => Ok(b),
            o => Err(self.wrong("bimodule", "Hopf bimodule", o)),
        }
    }

    /// The named Hopf bimodule, or `A` itself when only an extension is given.
    fn bimodule(&self) -> Result<(&'a Extension, HopfBimodule), TaskFailure> {
        let e = self.extension()?;
        if self.args.contains_key("bimodule") {
            Ok((e, self.bimodule_object()?.module.clone()))
        } else {
            Ok((e, HopfBimodule::regular(&e.comodule)))
        }
    }

    fn galois(&self) -> Result<(&'a Extension, GaloisStructure), TaskFailure> {
        let e = self.extension()?;
        Ok((e, GaloisStructure::new(&e.comodule)?))
    }

    /// `"v": "trivial"` (default) or `"regular"`, as a left `C_H`-comodule.
    fn comodule_v(&self, h: &HopfAlgebra, c: &TraceCoalgebra) -> Result<LeftComodule, TaskFailure> {
        match self.args.get("v").and_then(Value::as_str).unwrap_or("trivial") {
            "trivial" => Ok(LeftComodule::trivial(&c.pi.apply(h.unit()))),
            "regular" => Ok(LeftComodule::regular(&c.coalgebra)),
            other => Err(TaskFailure::BadArgs(format!("v must be \"trivial\" or \"regular\", got {other:?}"))),
        }
    }

    fn over_b(&self) -> Result<bool, TaskFailure> {
        match self.args.get("over").and_then(Value::as_str).unwrap_or("A") {
            "A" => Ok(false),
            "B" => Ok(true),
            other => Err(TaskFailure::BadArgs(format!("over must be \"A\" or \"B\", got {other:?}"))),
        }
    }

    /// Hochschild homology of `algebra` with coefficients in itself, or of
    /// `A` or `B` with coefficients in a Hopf bimodule.
    fn hochschild(&self) -> Result<Hochschild, TaskFailure> {
        if self.args.contains_key("algebra") {
            let a = self.algebra()?;
            return Ok(Hochschild::new(a, &crate::rep::Bimodule::regular(a), self.truncation)?);
        }
        let (e, m) = self.bimodule()?;
        if self.over_b()? {
            Ok(hochschild_over_coinvariants(&e.comodule, &m.bimodule, self.truncation)?)
        } else {
            Ok(Hochschild::new(e.comodule.algebra(), &m.bimodule, self.truncation)?)
        }
    }
}

pub type Handler = fn(&Ctx) -> Outcome;

pub struct OpSpec {
    pub name: &'static str,
    pub module: &'static str,
    pub args: &'static str,
    pub about: &'static str,
    pub run: Handler,
}

macro_rules! op {
    ($name:literal, $module:literal, $args:literal, $about:literal, $run:expr) => {
        OpSpec { name: $name, module: $module, args: $args, about: $about, run: $run }
    };
}

pub static OPS: &[OpSpec] = &[
    op!("rref", "exact-linear", "m", "reduced row echelon form and pivots", op_rref),
    op!("kernel", "exact-linear", "m", "kernel basis", op_kernel),
    op!("image", "exact-linear", "m", "column space basis", op_image),
    op!("solve", "exact-linear", "m, rhs", "one solution of m x = rhs", op_solve),
    op!("tensor_product", "exact-linear", "m, other", "Kronecker product", op_tensor_product),
    op!("quotient_by", "exact-linear", "m", "quotient of the ambient space by the column span", op_quotient_by),
    op!("intersect", "exact-linear", "m, other", "intersection of column spans", op_intersect),
    op!("sum", "exact-linear", "m, other", "sum of column spans", op_sum),
    op!("validate_hopf", "hopf-core", "hopf", "exhaustive Hopf axioms", op_validate_hopf),
    op!("compute_R_H", "hopf-core", "hopf", "cocommutative subalgebra R_H", op_compute_r_h),
    op!("compute_C_H", "hopf-core", "hopf", "trace coalgebra C_H = H/[H,H]", op_compute_c_h),
    op!("has_enough_cocommutative_elements", "hopf-core", "hopf", "R_H⁺H = H⁺", op_enough_cocommutative),
    op!("is_semisimple", "hopf-core", "algebra | hopf", "zero Jacobson radical", op_is_semisimple),
    op!("is_cosemisimple", "hopf-core", "hopf", "semisimple dual algebra", op_is_cosemisimple),
    op!("dual_hopf", "hopf-core", "hopf", "dual Hopf algebra and double dual", op_dual_hopf),
    op!("is_involutive_antipode", "hopf-core", "hopf", "S² = id", op_involutive),
    op!("trace_maps", "hopf-core", "hopf", "trace maps inside H*", op_trace_maps),
    op!("coinvariants", "rep", "extension | bimodule", "A^coH or M^coH", op_coinvariants),
    op!("invariants", "rep", "extension | bimodule, over", "X^R for R = A or B", op_invariants),
    op!("commutator_quotient", "rep", "extension | bimodule, over", "X_R = X/[X,R]", op_commutator_quotient),
    op!("relative_tensor", "rep", "extension", "A⊗_B A", op_relative_tensor),
    op!("cotensor", "rep", "extension | bimodule, v", "M□_{C_H}V", op_cotensor),
    op!("tensor_cotensor_commute_check", "rep", "extension, v", "(𝕂⊗_R X)□V ≅ 𝕂⊗_R(X□V) on A⊗H", op_commute),
    op!("beta_map", "galois", "extension", "canonical map β on A⊗_B A", op_beta),
    op!("kappa", "galois", "extension", "translation map and its identities", op_kappa),
    op!("um_action", "galois", "extension | bimodule", "Ulbrich-Miyashita action on M_B", op_um_action),
    op!("rho0", "galois", "extension | bimodule", "C_H-coaction on M_B", op_rho0),
    op!("sayd_check_degree0", "galois", "extension | bimodule", "crossed module identity on M_B", op_sayd),
    op!("adjoint_coaction_space", "galois", "extension", "A⊗H in R_H-modules and C_H-comodules", op_adjoint),
    op!("lambda_iso", "galois", "extension", "(A⊗A)_B ≅ A⊗H", op_lambda_iso),
    op!("classical_g_galois_check", "galois", "extension", "G-Galois certificate", op_classical),
    op!("centrally_galois_check", "galois", "extension", "center a Galois extension of Z^coH", op_central),
    op!(
        "hochschild_complex",
        "homology",
        "algebra | extension | bimodule, over",
        "chain spaces and b∘b = 0",
        op_hochschild_complex
    ),
    op!("homology", "homology", "algebra | extension | bimodule, over", "HH_n dimensions", op_homology),
    op!(
        "induced_coaction_on_HH_B",
        "homology",
        "extension | bimodule",
        "H- and C_H-coactions on HH_*(B,M)",
        op_coaction_hh_b
    ),
    op!("induced_um_action_on_HH_B", "homology", "extension | bimodule", "H-action on HH_*(B,M)", op_um_hh_b),
    op!(
        "lambda_operator",
        "homology",
        "extension | bimodule",
        "λ_n^h chain maps and induced action",
        op_lambda_operator
    ),
    op!("verify_trivial_action", "homology", "extension | bimodule", "λ-action is ε(h)·id", op_trivial_action),
    op!("coaction_on_HH_A", "homology", "extension | bimodule", "C_H-coaction on HH_*(A,M)", op_coaction_hh_a),
    op!("tor", "homology", "hopf | algebra, character", "Tor over R_H or over an algebra", op_tor),
    op!("tor_coaction_check", "homology", "hopf | extension", "C-coaction on Tor", op_tor_coaction),
    op!("edge_map_phi", "homology", "extension | bimodule, v", "φ: 𝕂⊗_{R_H}(M_B□V) -> M_A□V", op_phi),
    op!("verify_theorem_te_iso", "homology", "extension | bimodule, v", "collapsed edge isomorphism", op_te_iso),
    op!("verify_corollary_co_iso", "homology", "extension | bimodule", "HH_n(A,M)^G ≅ p₁HH_n(B,M^G)", op_co_iso),
    op!("cyclic_complex", "homology", "algebra", "HC_n from the cyclic bicomplex", op_cyclic),
    op!("verify_theorem_izo1", "homology", "extension | bimodule, v", "HH_n(A,M)□V ≅ HH_n(B,M□V)", op_izo1),
    op!("verify_theorem_izo2", "homology", "extension | bimodule", "HH_n(A,M) ≅ Z⊗_{Z'}HH_n(B,M^coH)", op_izo2),
    op!("verify_theorem_izo3", "homology", "extension", "HC_n(A)^coH ≅ HC_n(B)", op_izo3),
    op!("conjugacy_classes", "constructions", "group", "classes, class sums and idempotents", op_conjugacy),
    op!("strongly_graded", "constructions", "graded", "strong grading and β", op_strongly_graded),
    op!("ore_truncated", "constructions", "ore", "truncated Ore extension checks", op_ore_truncated),
    op!("ore_center_slice", "constructions", "ore", "A^σ∩A^δ∩Z", op_ore_slice),
    op!("verify_theorem_te_example", "constructions", "ore", "centrally Galois Ore extension", op_te_example),
];

impl OpSpec {
    /// Argument names listed in `args`, e.g. `"extension | bimodule, v"`.
    pub fn arg_names(&self) -> impl Iterator<Item = &'static str> {
        self.args.split([',', '|']).map(str::trim).filter(|s| !s.is_empty())
    }

    pub fn accepts(&self, key: &str) -> bool {
        self.arg_names().any(|a| a == key)
    }
}

pub fn lookup_op(name: &str) -> Option<&'static OpSpec> {
    OPS.iter().find(|o| o.name == name)
}

fn op_rref(c: &Ctx) -> Outcome {
    let (r, p) = c.matrix("m")?.rref();
    outcome(true, format!("rank {}", p.len()), json!({ "rref": matrix_json(&r), "pivots": p }))
}

fn op_kernel(c: &Ctx) -> Outcome {
    let k = c.matrix("m")?.kernel();
    outcome(true, format!("dim {}", k.dim()), subspace_json(&k))
}

fn op_image(c: &Ctx) -> Outcome {
    let k = c.matrix("m")?.image();
    outcome(true, format!("dim {}", k.dim()), subspace_json(&k))
}

fn op_solve(c: &Ctx) -> Outcome {
    let m = c.matrix("m")?;
    let rhs = parse_vector_value(c.args.get("rhs").ok_or_else(|| TaskFailure::BadArgs("missing \"rhs\"".into()))?)
        .map_err(TaskFailure::BadArgs)?;
    let x = m.solve(&rhs)?;
    outcome(true, "solved", json!({ "solution": vector_json(&x) }))
}

fn op_tensor_product(c: &Ctx) -> Outcome {
    let k = crate::linalg::tensor_product(c.matrix("m")?, c.matrix("other")?);
    outcome(true, format!("{}x{}", k.rows(), k.cols()), json!({ "matrix": matrix_json(&k) }))
}

fn op_quotient_by(c: &Ctx) -> Outcome {
    let m = c.matrix("m")?;
    let q = quotient_by(&m.image());
    outcome(true, format!("dim {}", q.dim()), json!({ "dim": q.dim(), "projection": matrix_json(&q.projection) }))
}

fn op_intersect(c: &Ctx) -> Outcome {
    let s = c.matrix("m")?.image().intersect(&c.matrix("other")?.image())?;
    outcome(true, format!("dim {}", s.dim()), subspace_json(&s))
}

fn op_sum(c: &Ctx) -> Outcome {
    let s = c.matrix("m")?.image().sum(&c.matrix("other")?.image())?;
    outcome(true, format!("dim {}", s.dim()), subspace_json(&s))
}

fn op_validate_hopf(c: &Ctx) -> Outcome {
    let r = c.hopf()?.validate();
    let n = r.checks.iter().filter(|x| x.passed).count();
    with_counterexample(r.passed(), format!("{n}/{} axioms hold", r.checks.len()), to_value(&r), first_failure_json(&r))
}

fn op_compute_r_h(c: &Ctx) -> Outcome {
    let h = c.hopf()?;
    let r = h.cocommutative_subalgebra()?;
    let semisimple = r.algebra().is_semisimple();
    // orthogonal idempotents summing to 1 on the RREF basis, when that basis is one
    let basis = r.space().basis_vectors();
    let orthogonal = basis.iter().enumerate().all(|(i, x)| {
        basis.iter().enumerate().all(|(j, y)| {
            let p = h.multiply(x, y);
            if i == j {
                &p == x
            } else {
                crate::linalg::is_zero_vector(&p)
            }
        })
    });
    let mut total = crate::linalg::zero_vector(h.dim());
    for b in &basis {
        crate::linalg::add_scaled(&mut total, &Rational::from_integer(1.into()), b);
    }
    let enough = h.has_enough_cocommutative_elements()?;
    let result = json!({
        "dim": r.dim(),
        "basis": basis.iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
        "plus_part_dim": r.plus_part.dim(),
        "semisimple": semisimple,
        "basis_orthogonal_idempotents": orthogonal,
        "basis_sums_to_one": &total == h.unit(),
        "r_plus_h_is_augmentation_ideal": enough,
    });
    outcome(true, format!("dim R_H = {}, semisimple {semisimple}", r.dim()), result)
}

fn op_compute_c_h(c: &Ctx) -> Outcome {
    let t = c.hopf()?.trace_coalgebra()?;
    let v = t.coalgebra.validate();
    let cosemisimple = t.coalgebra.is_cosemisimple();
    let result = json!({ "dim": t.dim(), "coalgebra_axioms": to_value(&v), "cosemisimple": cosemisimple, "pi": matrix_json(&t.pi) });
    with_counterexample(v.passed(), format!("dim C_H = {}", t.dim()), result, first_failure_json(&v))
}

fn op_enough_cocommutative(c: &Ctx) -> Outcome {
    let b = c.hopf()?.has_enough_cocommutative_elements()?;
    outcome(b, b.to_string(), json!({ "value": b }))
}

fn op_is_semisimple(c: &Ctx) -> Outcome {
    let a = if c.args.contains_key("algebra") { c.algebra()? } else { c.hopf()?.algebra() };
    let rad = a.radical();
    outcome(
        rad.is_zero(),
        format!("radical dim {}", rad.dim()),
        json!({ "value": rad.is_zero(), "radical_dim": rad.dim() }),
    )
}

fn op_is_cosemisimple(c: &Ctx) -> Outcome {
    let b = c.hopf()?.is_cosemisimple();
    outcome(b, b.to_string(), json!({ "value": b }))
}

fn op_dual_hopf(c: &Ctx) -> Outcome {
    let h = c.hopf()?;
    let d = h.dual();
    let v = d.validate();
    let double = d.dual().relabel(h.labels().to_vec())? == *h;
    let result = json!({ "dim": d.dim(), "axioms": to_value(&v), "double_dual_is_original": double });
    with_counterexample(v.passed() && double, format!("dual of dim {}", d.dim()), result, first_failure_json(&v))
}

fn op_involutive(c: &Ctx) -> Outcome {
    let i = c.hopf()?.involutivity();
    with_counterexample(
        i.squared_identity,
        format!("S² = id: {}", i.squared_identity),
        to_value(&i),
        check_json(&i.twisted_identity),
    )
}

fn op_trace_maps(c: &Ctx) -> Outcome {
    let h = c.hopf()?;
    let t = h.trace_maps();
    let matches = h.trace_maps_match_dual()?;
    outcome(matches, format!("dim {}", t.dim()), json!({ "dim": t.dim(), "matches_dual_of_C_H": matches }))
}

fn op_coinvariants(c: &Ctx) -> Outcome {
    let (e, m) = c.bimodule()?;
    let s = m.coaction.coinvariants(e.comodule.hopf().unit());
    outcome(true, format!("dim {}", s.dim()), subspace_json(&s))
}

fn acting_subalgebra(c: &Ctx, e: &Extension) -> Result<Subspace, TaskFailure> {
    Ok(if c.over_b()? { e.comodule.coinvariants().space.clone() } else { Subspace::full(e.comodule.algebra().dim()) })
}

fn op_invariants(c: &Ctx) -> Outcome {
    let (e, m) = c.bimodule()?;
    let s = m.bimodule.invariants(&acting_subalgebra(c, e)?);
    outcome(true, format!("dim {}", s.dim()), subspace_json(&s))
}

fn op_commutator_quotient(c: &Ctx) -> Outcome {
    let (e, m) = c.bimodule()?;
    let q = m.bimodule.commutator_quotient(&acting_subalgebra(c, e)?);
    outcome(true, format!("dim {}", q.dim()), json!({ "dim": q.dim() }))
}

fn op_relative_tensor(c: &Ctx) -> Outcome {
    let e = &c.extension()?.comodule;
    let a = e.algebra();
    let b = e.coinvariants().inclusion();
    let right = RightModule { dim: a.dim(), action: b.columns().iter().map(|x| a.right_mult(x)).collect() };
    let left = LeftModule { dim: a.dim(), action: b.columns().iter().map(|x| a.left_mult(x)).collect() };
    let q = relative_tensor(&right, &left)?;
    outcome(true, format!("dim A⊗_B A = {}", q.dim()), json!({ "dim": q.dim() }))
}

fn op_cotensor(c: &Ctx) -> Outcome {
    let (e, m) = c.bimodule()?;
    let h = e.comodule.hopf();
    let t = h.trace_coalgebra()?;
    let v = c.comodule_v(h, &t)?;
    let s = cotensor(&m.coaction.push_forward(&t.pi), &v)?;
    outcome(true, format!("dim {}", s.dim()), json!({ "dim": s.dim() }))
}

fn adjoint_object(e: &Extension, t: &TraceCoalgebra) -> Result<(Algebra, ModuleComodule, RightModule), TaskFailure> {
    let h = e.comodule.hopf();
    let adj = adjoint_coaction_space(&e.comodule, t)?;
    let r = h.cocommutative_subalgebra()?;
    let eps: Vec<Rational> = r.space().basis_vectors().iter().map(|y| h.epsilon(y)).collect();
    Ok((
        r.algebra().clone(),
        ModuleComodule { module: adj.module, comodule: adj.comodule },
        RightModule::one_dimensional(&eps),
    ))
}

fn op_commute(c: &Ctx) -> Outcome {
    let e = c.extension()?;
    let h = e.comodule.hopf();
    let t = h.trace_coalgebra()?;
    let (_, m, k) = adjoint_object(e, &t)?;
    let v = c.comodule_v(h, &t)?;
    let r = tensor_cotensor_commute_check(&k, &m, &v, &t.coalgebra)?;
    outcome(r.bijective, format!("{} vs {}", r.left_dim, r.right_dim), to_value(&r))
}

fn op_beta(c: &Ctx) -> Outcome {
    let b = beta_map(&c.extension()?.comodule)?;
    let s = &b.summary;
    let ce = s.kernel_witness.as_ref().map(|w| json!({ "kernel_witness": w }));
    with_counterexample(s.bijective, format!("{}x{} rank {}", s.rows, s.cols, s.rank), to_value(s), ce)
}

fn op_kappa(c: &Ctx) -> Outcome {
    let (_, g) = c.galois()?;
    let k = g.kappa_checks();
    let ce = [&k.translation_identity, &k.lands_in_invariants, &k.anti_multiplicative, &k.counit_identity]
        .into_iter()
        .find_map(check_json);
    let kappa: Vec<Value> = g.kappa.iter().map(|v| vector_json(v)).collect();
    with_counterexample(k.passed(), "κ identities", json!({ "checks": to_value(&k), "kappa": kappa }), ce)
}

fn op_um_action(c: &Ctx) -> Outcome {
    let (_, g) = c.galois()?;
    let (_, m) = c.bimodule()?;
    let um = g.um_action(&m)?;
    let mats: Vec<Value> = um.module.action.iter().map(matrix_json).collect();
    let result = json!({ "dim_M_B": um.quotient.dim(), "action": mats, "axioms": to_value(&um.axioms) });
    with_counterexample(
        um.axioms.passed(),
        format!("dim M_B = {}", um.quotient.dim()),
        result,
        first_failure_json(&um.axioms),
    )
}

fn op_rho0(c: &Ctx) -> Outcome {
    let (e, g) = c.galois()?;
    let (_, m) = c.bimodule()?;
    let t = e.comodule.hopf().trace_coalgebra()?;
    let um = g.um_action(&m)?;
    let r = g.rho0(&m, &um, &t)?;
    let axioms = r.in_c.validate(&t.coalgebra);
    let linear = r.r_linear.as_ref().map_or(true, |x| x.passed);
    let ce = first_failure_json(&axioms).or_else(|| r.r_linear.as_ref().and_then(check_json));
    let result = json!({
        "coaction_in_H": matrix_json(&r.in_h.coaction),
        "coaction_in_C_H": matrix_json(&r.in_c.coaction),
        "comodule_axioms": to_value(&axioms),
        "r_linear": r.r_linear,
    });
    with_counterexample(axioms.passed() && linear, format!("dim M_B = {}", r.in_c.dim), result, ce)
}

fn op_sayd(c: &Ctx) -> Outcome {
    let (e, g) = c.galois()?;
    let (_, m) = c.bimodule()?;
    let t = e.comodule.hopf().trace_coalgebra()?;
    let s = g.sayd_check_degree0(&m, &t)?;
    let ce = check_json(&s.in_h).or_else(|| check_json(&s.in_c));
    with_counterexample(s.passed(), "crossed module identity", to_value(&s), ce)
}

fn op_adjoint(c: &Ctx) -> Outcome {
    let e = c.extension()?;
    let t = e.comodule.hopf().trace_coalgebra()?;
    let adj = adjoint_coaction_space(&e.comodule, &t)?;
    let v = adj.comodule.validate(&t.coalgebra);
    let ok = v.passed() && adj.compatible.passed;
    let ce = first_failure_json(&v).or_else(|| check_json(&adj.compatible));
    let result =
        json!({ "dim": adj.comodule.dim, "comodule_axioms": to_value(&v), "compatible": to_value(&adj.compatible) });
    with_counterexample(ok, format!("dim A⊗H = {}", adj.comodule.dim), result, ce)
}

fn op_lambda_iso(c: &Ctx) -> Outcome {
    let (e, g) = c.galois()?;
    let t = e.comodule.hopf().trace_coalgebra()?;
    let l = g.lambda_iso(&t)?;
    let ok = l.bijective && l.r_linear.passed && l.c_colinear.passed && l.unit_ok;
    let ce = check_json(&l.r_linear).or_else(|| check_json(&l.c_colinear));
    let result = json!({
        "rows": l.matrix.rows(), "cols": l.matrix.cols(), "rank": l.rank, "bijective": l.bijective,
        "r_linear": to_value(&l.r_linear), "c_colinear": to_value(&l.c_colinear), "unit_ok": l.unit_ok,
    });
    with_counterexample(ok, format!("{}x{} rank {}", l.matrix.rows(), l.matrix.cols(), l.rank), result, ce)
}

fn op_classical(c: &Ctx) -> Outcome {
    let e = c.extension()?;
    let (g, act) = e.action.as_ref().ok_or_else(|| TaskFailure::BadArgs("extension has no group action".into()))?;
    let r = classical_g_galois_check(e.comodule.algebra(), g, act)?;
    let ok = r.beta.bijective && r.certificate_verified;
    let result = json!({ "beta": to_value(&r.beta), "certificate": r.certificate, "certificate_verified": r.certificate_verified });
    outcome(ok, format!("G-Galois: {ok}"), result)
}

fn op_central(c: &Ctx) -> Outcome {
    let r = centrally_galois_check(&c.extension()?.comodule)?;
    let s = &r.summary;
    outcome(s.centrally_galois, format!("center dim {}, Z' dim {}", s.center_dim, s.z_prime_dim), to_value(s))
}

fn op_hochschild_complex(c: &Ctx) -> Outcome {
    let hh = c.hochschild()?;
    let cx = &hh.complex;
    let ok = cx.square_zero_failure().is_none();
    outcome(ok, format!("chain dims {}", dims_str(&cx.dims)), json!({ "chain_dims": cx.dims, "b_squared_zero": ok }))
}

fn op_homology(c: &Ctx) -> Outcome {
    let hh = c.hochschild()?;
    let d = hh.dims();
    outcome(true, format!("HH = {}", dims_str(&d)), json!({ "dims": d }))
}

fn op_coaction_hh_b(c: &Ctx) -> Outcome {
    let (e, m) = c.bimodule()?;
    let t = e.comodule.hopf().trace_coalgebra()?;
    let hh = hochschild_over_coinvariants(&e.comodule, &m.bimodule, c.truncation)?;
    let s = induced_coaction_on_hh_b(&e.comodule, &m, &hh, &t)?;
    let coactions: Vec<Value> = s.h_coaction.iter().flatten().map(matrix_json).collect();
    let d = s.homology.dims();
    outcome(true, format!("HH(B,M) = {}", dims_str(&d)), json!({ "dims": d, "h_coaction": coactions }))
}

fn op_um_hh_b(c: &Ctx) -> Outcome {
    let (_, g) = c.galois()?;
    let (e, m) = c.bimodule()?;
    let hh = hochschild_over_coinvariants(&e.comodule, &m.bimodule, c.truncation)?;
    let act = induced_um_action_on_hh_b(&g, &m, &hh)?;
    let um = g.um_action(&m)?;
    // degree 0 against the action on M_B, through M_B -> HH_0(B,M)
    let iso = &hh.homology.degrees[0].projection * &um.quotient.section;
    let agrees = (0..g.hopf().dim()).all(|i| &act[0][i] * &iso == &iso * &um.module.action[i]);
    let per_degree: Vec<Vec<Value>> = act.iter().map(|v| v.iter().map(matrix_json).collect()).collect();
    outcome(
        agrees,
        format!("HH(B,M) = {}", dims_str(&hh.dims())),
        json!({ "dims": hh.dims(), "action": per_degree, "degree0_matches_um_action": agrees }),
    )
}

fn central_or_fail(e: &Extension) -> Result<crate::galois::CentralGalois, TaskFailure> {
    let central = centrally_galois_check(&e.comodule)?;
    if !central.summary.centrally_galois {
        return Err(failed("extension is not centrally Galois"));
    }
    Ok(central)
}

fn op_lambda_operator(c: &Ctx) -> Outcome {
    let (e, m) = c.bimodule()?;
    let central = central_or_fail(e)?;
    let hh = hochschild_over_coinvariants(&e.comodule, &m.bimodule, c.truncation)?;
    let act = lambda_action_on_hh_b(&central, &m.bimodule, &hh)?;
    let per_degree: Vec<Vec<Value>> = act.iter().map(|v| v.iter().map(matrix_json).collect()).collect();
    outcome(true, format!("HH(B,M) = {}", dims_str(&hh.dims())), json!({ "dims": hh.dims(), "induced": per_degree }))
}

fn op_trivial_action(c: &Ctx) -> Outcome {
    let (e, m) = c.bimodule()?;
    let r = verify_trivial_action(&e.comodule, &m, c.truncation)?;
    let dims: Vec<usize> = r.degrees.iter().map(|d| d.dim).collect();
    outcome(r.passed(), format!("HH(B,M) = {}", dims_str(&dims)), to_value(&r))
}

fn op_coaction_hh_a(c: &Ctx) -> Outcome {
    let (e, m) = c.bimodule()?;
    let t = e.comodule.hopf().trace_coalgebra()?;
    let hh = Hochschild::new(e.comodule.algebra(), &m.bimodule, c.truncation)?;
    let s = coaction_on_hh_a(&e.comodule, &m, &hh, &t)?;
    let coactions: Vec<Value> = s.c_coaction.iter().map(matrix_json).collect();
    let d = s.homology.dims();
    outcome(true, format!("HH(A,M) = {}", dims_str(&d)), json!({ "dims": d, "c_coaction": coactions }))
}

fn op_tor(c: &Ctx) -> Outcome {
    let (r, chi) = if c.args.contains_key("algebra") {
        let a = c.algebra()?.clone();
        let chi = parse_vector_value(
            c.args.get("character").ok_or_else(|| TaskFailure::BadArgs("missing \"character\"".into()))?,
        )
        .map_err(TaskFailure::BadArgs)?;
        (a, chi)
    } else {
        let h = c.hopf()?;
        let r = h.cocommutative_subalgebra()?;
        let eps = r.space().basis_vectors().iter().map(|y| h.epsilon(y)).collect();
        (r.algebra().clone(), eps)
    };
    if chi.len() != r.dim() {
        return Err(TaskFailure::BadArgs("character has the wrong length".into()));
    }
    let t = tor(&r, &RightModule::one_dimensional(&chi), &LeftModule::one_dimensional(&chi), c.truncation)?;
    let d = t.dims();
    outcome(
        t.tor0_matches_relative_tensor,
        format!("Tor = {}", dims_str(&d)),
        json!({ "dims": d, "tor0_matches_relative_tensor": t.tor0_matches_relative_tensor }),
    )
}

fn op_tor_coaction(c: &Ctx) -> Outcome {
    let (r, m, k, coalgebra) = if c.args.contains_key("extension") {
        let e = c.extension()?;
        let t = e.comodule.hopf().trace_coalgebra()?;
        let (r, m, k) = adjoint_object(e, &t)?;
        (r, m, k, t.coalgebra)
    } else {
        // free object R_H⊗C_H
        let h = c.hopf()?;
        let t = h.trace_coalgebra()?;
        let rs = h.cocommutative_subalgebra()?;
        let (dr, dc) = (rs.dim(), t.dim());
        let action =
            (0..dr).map(|i| rs.algebra().left_mult(&rs.algebra().basis(i)).kron(&Matrix::identity(dc))).collect();
        let m = ModuleComodule {
            module: LeftModule { dim: dr * dc, action },
            comodule: RightComodule { dim: dr * dc, coaction: Matrix::identity(dr).kron(t.coalgebra.comult()) },
        };
        let eps: Vec<Rational> = rs.space().basis_vectors().iter().map(|y| h.epsilon(y)).collect();
        (rs.algebra().clone(), m, RightModule::one_dimensional(&eps), t.coalgebra)
    };
    let v = m.validate(&r, &coalgebra);
    if !v.passed() {
        return with_counterexample(
            false,
            "not an object of R-modules in C-comodules",
            to_value(&v),
            first_failure_json(&v),
        );
    }
    let t = tor_coaction_check(&r, &k, &m, &coalgebra, c.truncation)?;
    outcome(t.passed(), format!("Tor = {}", dims_str(&t.dims)), to_value(&t))
}

fn op_phi(c: &Ctx) -> Outcome {
    let (e, g) = c.galois()?;
    let (_, m) = c.bimodule()?;
    let h = e.comodule.hopf();
    let t = h.trace_coalgebra()?;
    let v = c.comodule_v(h, &t)?;
    let p = edge_map_phi(&g, &m, &v, &t)?;
    let mut result = to_value(&p);
    result["matrix"] = matrix_json(&p.matrix);
    outcome(p.bijective, format!("{}x{} rank {}", p.target_dim, p.source_dim, p.rank), result)
}

fn op_te_iso(c: &Ctx) -> Outcome {
    let (e, g) = c.galois()?;
    let (_, m) = c.bimodule()?;
    let h = e.comodule.hopf();
    let t = h.trace_coalgebra()?;
    let v = c.comodule_v(h, &t)?;
    let r = verify_theorem_te_iso(&g, &m, &v, c.truncation)?;
    outcome(r.passed(), format!("{} vs {}", dims_str(&r.lhs_dims()), dims_str(&r.rhs_dims())), to_value(&r))
}

fn op_co_iso(c: &Ctx) -> Outcome {
    let (e, g) = c.galois()?;
    let (_, m) = c.bimodule()?;
    let (group, _) = e.action.as_ref().ok_or_else(|| TaskFailure::BadArgs("extension has no group action".into()))?;
    let r = verify_corollary_co_iso(&g, group, &m, c.truncation)?;
    outcome(r.passed(), format!("{} vs {}", dims_str(&r.invariants_dims()), dims_str(&r.p1_dims())), to_value(&r))
}

fn op_cyclic(c: &Ctx) -> Outcome {
    let a = c.algebra()?;
    let cc = cyclic_complex(a, c.truncation)?;
    let d = cc.dims();
    outcome(true, format!("HC = {}", dims_str(&d)), json!({ "dims": d, "total_dims": cc.total.dims }))
}

fn op_izo1(c: &Ctx) -> Outcome {
    let (e, m) = c.bimodule()?;
    let h = e.comodule.hopf();
    let t = h.trace_coalgebra()?;
    let v = c.comodule_v(h, &t)?;
    let r = verify_theorem_izo1(&e.comodule, &m, &v, c.truncation)?;
    outcome(r.passed(), format!("{} vs {}", dims_str(&r.lhs_dims()), dims_str(&r.rhs_dims())), to_value(&r))
}

fn op_izo2(c: &Ctx) -> Outcome {
    let (e, m) = c.bimodule()?;
    let r = verify_theorem_izo2(&e.comodule, &m, c.truncation)?;
    outcome(r.passed(), format!("{} vs {}", dims_str(&r.lhs_dims()), dims_str(&r.rhs_dims())), to_value(&r))
}

fn op_izo3(c: &Ctx) -> Outcome {
    let r = verify_theorem_izo3(&c.extension()?.comodule, c.truncation)?;
    outcome(r.passed(), format!("{} vs {}", dims_str(&r.hc_a_coinvariants), dims_str(&r.hc_b)), to_value(&r))
}

fn op_conjugacy(c: &Ctx) -> Outcome {
    let g = c.group()?;
    let classes = g.conjugacy_classes();
    let c_kg = group_algebra(g).trace_coalgebra()?.dim();
    let r_dual = dual_group_algebra(g).cocommutative_subalgebra()?.dim();
    let ok = classes.len() == c_kg && c_kg == r_dual;
    let idempotents: Vec<Value> = crate::constructions::class_idempotents(g).iter().map(|v| vector_json(v)).collect();
    let result = json!({ "classes": classes, "count": classes.len(), "dim_C_KG": c_kg, "dim_R_dual": r_dual, "p_sigma": idempotents });
    outcome(ok, format!("{} classes", classes.len()), result)
}

fn op_strongly_graded(c: &Ctx) -> Outcome {
    let g = c.graded()?;
    let failure = g.strong_failure();
    let beta = beta_map(&g.comodule_algebra()?)?;
    let ok = failure.is_none() && beta.summary.bijective;
    let ce = failure.map(|(x, y)| json!({ "g": x, "h": y }));
    let result = json!({ "strong": failure.is_none(), "beta": to_value(&beta.summary) });
    with_counterexample(
        ok,
        format!("strong: {}, β bijective: {}", failure.is_none(), beta.summary.bijective),
        result,
        ce,
    )
}

fn op_ore_truncated(c: &Ctx) -> Outcome {
    let o = c.ore()?;
    let t = OreTruncated::new(o.clone());
    let mult = t.coaction_multiplicative();
    let co = t.coinvariants() == t.coinvariant_prediction();
    let result = json!({ "dim": t.dim(), "coaction_multiplicative": to_value(&mult), "coinvariants_match": co });
    with_counterexample(mult.passed && co, format!("dim {}", t.dim()), result, check_json(&mult))
}

fn op_ore_slice(c: &Ctx) -> Outcome {
    let o = c.ore()?;
    let s = ore_center_slice(o);
    let t = OreTruncated::new(o.clone());
    let deg0 = t.center_solutions(0)?;
    let embedded = Subspace::span(t.dim(), s.basis_vectors().into_iter().map(|v| t.monomial(&v, 0)));
    let ok = deg0 == embedded;
    let mut result = subspace_json(&s);
    result["matches_degree0_solutions"] = json!(ok);
    outcome(ok, format!("dim {}", s.dim()), result)
}

fn op_te_example(c: &Ctx) -> Outcome {
    let r = verify_theorem_te_example(c.ore()?)?;
    outcome(r.passed() && r.centrally_galois, format!("centrally Galois: {}", r.centrally_galois), to_value(&r))
}

/// Runs one task; never panics on bad input.
pub fn run_task(instance: &Instance, index: usize, task: &TaskSpec, truncation_override: Option<usize>) -> TaskReport {
    let truncation = truncation_override.or(task.truncation).unwrap_or(DEFAULT_TRUNCATION);
    let expect_fail = task.expect == Some(Expectation::Fail);
    let mut report = TaskReport {
        index,
        op: task.op.clone(),
        label: task.label.clone(),
        truncation: Some(truncation),
        expect: if expect_fail { "fail" } else { "pass" },
        status: Status::Error,
        ok: false,
        summary: String::new(),
        result: Value::Null,
        counterexample: None,
        message: None,
    };
    let Some(spec) = lookup_op(&task.op) else {
        report.message = Some(format!("unknown op {:?}", task.op));
        return report;
    };
    if let Some(key) = task.args.keys().find(|k| !spec.accepts(k)) {
        report.message = Some(format!("{} does not take an argument {key:?}; expected {}", spec.name, spec.args));
        return report;
    }
    let ctx = Ctx { instance, args: &task.args, truncation };
    match (spec.run)(&ctx) {
        Ok(o) => {
            report.status = if o.passed { Status::Pass } else { Status::Fail };
            report.summary = o.summary;
            report.result = o.result;
            report.counterexample = o.counterexample;
        }
        Err(TaskFailure::BadArgs(m)) => report.message = Some(m),
        Err(TaskFailure::Unsupported(m)) => {
            report.status = Status::Unsupported;
            report.message = Some(m);
        }
        Err(TaskFailure::Failed { message, counterexample }) => {
            report.status = Status::Fail;
            report.message = Some(message);
            report.counterexample = counterexample;
        }
    }
    report.ok = match report.status {
        Status::Pass => !expect_fail,
        Status::Fail | Status::Unsupported => expect_fail,
        Status::Error => false,
    };
    report
}

/// Runs every task, in parallel, reporting in task order.
pub fn run(instance: &Instance, source: &str, truncation_override: Option<usize>) -> Report {
    let tasks =
        instance.tasks.par_iter().enumerate().map(|(i, t)| run_task(instance, i, t, truncation_override)).collect();
    Report::new(source.to_string(), tasks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_names_are_unique() {
        let mut names: Vec<&str> = OPS.iter().map(|o| o.name).collect();
        names.sort();
        let n = names.len();
        names.dedup();
        assert_eq!(names.len(), n);
    }

    #[test]
    fn unknown_op_is_an_error() {
        let inst =
            crate::instance::parse_instance(r#"{"version":"hopfhomology/1","scalar":"Q","tasks":[{"op":"nope"}]}"#)
                .unwrap();
        let r = run(&inst, "t", None);
        assert_eq!(r.tasks[0].status, Status::Error);
        assert!(!r.ok);
    }
}
