//! Instance files: a JSON document naming objects (groups, algebras, Hopf
//! algebras, comodule algebras, Hopf bimodules, graded algebras, Ore data,
//! matrices) and a list of tasks to run on them.
//!
//! ```json
//! {
//!   "version": "hopfhomology/1",
//!   "scalar": "Q",
//!   "objects": [
//!     { "name": "H", "kind": "construction", "call": "dual_group_algebra(S3)" }
//!   ],
//!   "tasks": [ { "op": "compute_R_H", "args": { "hopf": "H" } } ]
//! }
//! ```
//!
//! Objects resolve in file order, so a stanza may only refer to earlier ones.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::constructions::{
    biquadratic_algebra, biquadratic_automorphism, biquadratic_ore, dual_group_algebra, galois_field_extension_sqrt,
    group_algebra, inner_action, matrix_algebra, matrix_inner_ore, matrix_over_quadratic, product_field_swap,
    quadratic_algebra, truncated_polynomial, FiniteGroup, GradedAlgebra, OreData,
};
use crate::galois::{action_comodule_algebra, ComoduleAlgebra};
use crate::hopf::{Algebra, Coalgebra, HopfAlgebra};
use crate::linalg::{parse_rational, Matrix, Rational, Vector};
use crate::rep::{Bimodule, HopfBimodule, LeftModule, RightComodule, RightModule};

pub const FORMAT_VERSION: &str = "hopfhomology/1";
pub const SCALAR_TAG: &str = "Q";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("{0}")]
    Json(String),
    #[error("unsupported format version {0:?}, expected {FORMAT_VERSION:?}")]
    Version(String),
    #[error("unsupported scalar field {0:?}, only \"Q\" is available")]
    Scalar(String),
    #[error("object {stanza:?}: {message}")]
    Stanza { stanza: String, message: String },
    #[error("task {index}: {message}")]
    Task { index: usize, message: String },
}

fn stanza_err(stanza: &str, message: impl ToString) -> InstanceError {
    InstanceError::Stanza { stanza: stanza.to_string(), message: message.to_string() }
}

/// A comodule algebra, with the group action it came from when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub comodule: ComoduleAlgebra,
    pub action: Option<(FiniteGroup, Vec<Matrix>)>,
}

/// A Hopf bimodule together with the name of its comodule algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleObject {
    pub extension: String,
    pub module: HopfBimodule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Group(FiniteGroup),
    Algebra(Algebra),
    Hopf(HopfAlgebra),
    Extension(Extension),
    Bimodule(BimoduleObject),
    Graded(GradedAlgebra),
    Ore(OreData),
    Matrix(Matrix),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Group(_) => "group",
            Object::Algebra(_) => "algebra",
            Object::Hopf(_) => "hopf_algebra",
            Object::Extension(_) => "comodule_algebra",
            Object::Bimodule(_) => "hopf_bimodule",
            Object::Graded(_) => "graded_algebra",
            Object::Ore(_) => "ore",
            Object::Matrix(_) => "matrix",
        }
    }

    /// Underlying algebra, when the object has one.
    pub fn as_algebra(&self) -> Option<&Algebra> {
        match self {
            Object::Algebra(a) => Some(a),
            Object::Hopf(h) => Some(h.algebra()),
            Object::Extension(e) => Some(e.comodule.algebra()),
            Object::Graded(g) => Some(&g.algebra),
            Object::Ore(o) => Some(o.base.algebra()),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSpec {
    pub op: String,
    #[serde(default)]
    pub args: BTreeMap<String, Value>,
    #[serde(default)]
    pub truncation: Option<usize>,
    #[serde(default)]
    pub expect: Option<Expectation>,
    #[serde(default)]
    pub label: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    version: String,
    scalar: String,
    #[serde(default)]
    objects: Vec<Value>,
    #[serde(default)]
    tasks: Vec<TaskSpec>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub objects: BTreeMap<String, Object>,
    /// Object names in file order.
    pub order: Vec<String>,
    pub tasks: Vec<TaskSpec>,
}

impl Instance {
    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.get(name)
    }
}

pub fn parse_instance_file(path: &std::path::Path) -> Result<Instance, InstanceError> {
    let text = std::fs::read_to_string(path).map_err(|e| InstanceError::Json(format!("{}: {e}", path.display())))?;
    parse_instance(&text)
}

pub fn parse_instance(text: &str) -> Result<Instance, InstanceError> {
    let raw: RawInstance = serde_json::from_str(text).map_err(|e| InstanceError::Json(e.to_string()))?;
    if raw.version != FORMAT_VERSION {
        return Err(InstanceError::Version(raw.version));
    }
    if raw.scalar != SCALAR_TAG {
        return Err(InstanceError::Scalar(raw.scalar));
    }
    let mut objects = BTreeMap::new();
    let mut order = Vec::new();
    for (i, stanza) in raw.objects.iter().enumerate() {
        let name = stanza
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| stanza_err(&format!("#{i}"), "missing \"name\""))?
            .to_string();
        if objects.contains_key(&name) {
            return Err(stanza_err(&name, "duplicate name"));
        }
        let obj = build_stanza(&name, stanza, &objects)?;
        objects.insert(name.clone(), obj);
        order.push(name);
    }
    Ok(Instance { objects, order, tasks: raw.tasks })
}

struct Fields<'a> {
    name: &'a str,
    v: &'a Value,
}

impl<'a> Fields<'a> {
    fn get(&self, key: &str) -> Result<&'a Value, InstanceError> {
        self.v.get(key).ok_or_else(|| stanza_err(self.name, format!("missing {key:?}")))
    }

    fn str(&self, key: &str) -> Result<&'a str, InstanceError> {
        self.get(key)?.as_str().ok_or_else(|| stanza_err(self.name, format!("{key:?} must be a string")))
    }

    fn usize(&self, key: &str) -> Result<usize, InstanceError> {
        self.get(key)?
            .as_u64()
            .map(|x| x as usize)
            .ok_or_else(|| stanza_err(self.name, format!("{key:?} must be a non-negative integer")))
    }

    fn err(&self, m: impl ToString) -> InstanceError {
        stanza_err(self.name, m)
    }
}

pub fn parse_rational_value(v: &Value) -> Result<Rational, String> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| e.to_string()),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap_or(0).into())),
        _ => Err(format!("{v} is not a rational string")),
    }
}

pub fn parse_vector_value(v: &Value) -> Result<Vector, String> {
    v.as_array().ok_or("expected an array of rationals")?.iter().map(parse_rational_value).collect()
}

/// Row-major array of rows.
pub fn parse_matrix_value(v: &Value) -> Result<Matrix, String> {
    let rows = v.as_array().ok_or("matrix must be an array of rows")?;
    let rows: Vec<Vector> = rows.iter().map(parse_vector_value).collect::<Result<_, _>>()?;
    let cols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != cols) {
        return Err("ragged matrix".into());
    }
    Ok(Matrix::from_rows(cols, rows))
}

fn parse_matrices(v: &Value) -> Result<Vec<Matrix>, String> {
    v.as_array().ok_or("expected an array of matrices")?.iter().map(parse_matrix_value).collect()
}

/// `[i, j, k, "c"]` quadruples, read as `c` at position `(i, j, k)`.
fn parse_quadruples(v: &Value) -> Result<Vec<(usize, usize, usize, Rational)>, String> {
    let entries = v.as_array().ok_or("structure constants must be an array")?;
    entries
        .iter()
        .map(|e| {
            let q = e.as_array().filter(|q| q.len() == 4).ok_or("each entry is [i, j, k, \"p/q\"]")?;
            let idx = |x: &Value| x.as_u64().map(|u| u as usize).ok_or("indices must be integers");
            Ok((idx(&q[0])?, idx(&q[1])?, idx(&q[2])?, parse_rational_value(&q[3])?))
        })
        .collect()
}

fn labels_for(f: &Fields, dim: usize, prefix: &str) -> Result<Vec<String>, InstanceError> {
    match f.v.get("labels") {
        Some(l) => {
            let labels: Vec<String> = l
                .as_array()
                .ok_or_else(|| f.err("labels must be an array"))?
                .iter()
                .map(|x| x.as_str().map(str::to_string).ok_or_else(|| f.err("labels are strings")))
                .collect::<Result<_, _>>()?;
            if labels.len() != dim {
                return Err(f.err("label count differs from dim"));
            }
            Ok(labels)
        }
        None => Ok((0..dim).map(|i| format!("{prefix}{i}")).collect()),
    }
}

/// `e_i e_j = Σ c e_k` from quadruples `[i, j, k, c]`.
fn algebra_from_fields(f: &Fields) -> Result<(Algebra, Matrix, Vector, Vec<String>), InstanceError> {
    let dim = f.usize("dim")?;
    let labels = labels_for(f, dim, "e")?;
    let mut mult = Matrix::zeros(dim, dim * dim);
    for (i, j, k, c) in parse_quadruples(f.get("structure")?).map_err(|e| f.err(e))? {
        if i >= dim || j >= dim || k >= dim {
            return Err(f.err(format!("index out of range in [{i}, {j}, {k}]")));
        }
        mult.add_at(k, i * dim + j, &c);
    }
    let unit = parse_vector_value(f.get("unit")?).map_err(|e| f.err(e))?;
    let a = Algebra::new(labels.clone(), mult.clone(), unit.clone()).map_err(|e| f.err(e))?;
    Ok((a, mult, unit, labels))
}

fn lookup<'a>(objects: &'a BTreeMap<String, Object>, stanza: &str, name: &str) -> Result<&'a Object, InstanceError> {
    objects.get(name).ok_or_else(|| stanza_err(stanza, format!("unresolved reference {name:?}")))
}

/// A named group object or one of the shorthands `1`, `Z2`, `S3`, ...
fn group_ref(objects: &BTreeMap<String, Object>, stanza: &str, name: &str) -> Result<FiniteGroup, InstanceError> {
    match (objects.get(name), group_shorthand(name)) {
        (Some(Object::Group(g)), _) => Ok(g.clone()),
        (Some(_), _) => Err(stanza_err(stanza, format!("{name:?} is not a group"))),
        (None, Some(g)) => Ok(g),
        (None, None) => Err(stanza_err(stanza, format!("unresolved reference {name:?}"))),
    }
}

fn build_stanza(name: &str, v: &Value, objects: &BTreeMap<String, Object>) -> Result<Object, InstanceError> {
    let f = Fields { name, v };
    let obj_ref = |key: &str| -> Result<&Object, InstanceError> { lookup(objects, name, f.str(key)?) };
    match f.str("kind")? {
        "construction" => {
            let call = parse_call(f.str("call")?).map_err(|e| f.err(e))?;
            evaluate_call(&call, objects).map_err(|e| f.err(e))
        }
        "group" => {
            let table: Vec<Vec<usize>> = serde_json::from_value(f.get("table")?.clone()).map_err(|e| f.err(e))?;
            let labels = labels_for(&f, table.len(), "g")?;
            FiniteGroup::new(labels, table).map(Object::Group).map_err(|e| f.err(e))
        }
        "algebra" => Ok(Object::Algebra(algebra_from_fields(&f)?.0)),
        "matrix" => parse_matrix_value(f.get("rows")?).map(Object::Matrix).map_err(|e| f.err(e)),
        "hopf_algebra" => {
            let (a, _, _, labels) = algebra_from_fields(&f)?;
            let dim = a.dim();
            // Δ(e_i) ∋ c e_j⊗e_k
            let mut comult = Matrix::zeros(dim * dim, dim);
            for (i, j, k, c) in parse_quadruples(f.get("comult")?).map_err(|e| f.err(e))? {
                if i >= dim || j >= dim || k >= dim {
                    return Err(f.err(format!("comult index out of range in [{i}, {j}, {k}]")));
                }
                comult.add_at(j * dim + k, i, &c);
            }
            let counit = parse_vector_value(f.get("counit")?).map_err(|e| f.err(e))?;
            let antipode = parse_matrix_value(f.get("antipode")?).map_err(|e| f.err(e))?;
            let checked = f.v.get("check").and_then(Value::as_bool).unwrap_or(true);
            let coalgebra = if checked {
                Coalgebra::new(labels, comult, counit)
            } else {
                Coalgebra::from_parts_unchecked(labels, comult, counit)
            }
            .map_err(|e| f.err(e))?;
            let h = if checked {
                HopfAlgebra::new(a, coalgebra, antipode)
            } else {
                HopfAlgebra::from_parts_unchecked(a, coalgebra, antipode)
            };
            h.map(Object::Hopf).map_err(|e| f.err(e))
        }
        "comodule_algebra" => {
            let a = obj_ref("algebra")?.as_algebra().ok_or_else(|| f.err("\"algebra\" is not an algebra"))?.clone();
            if let Some(g) = f.v.get("group") {
                let g = group_ref(objects, name, g.as_str().unwrap_or_default())?;
                let action = parse_matrices(f.get("action")?).map_err(|e| f.err(e))?;
                let comodule = action_comodule_algebra(&a, &g, &action).map_err(|e| f.err(e))?;
                return Ok(Object::Extension(Extension { comodule, action: Some((g, action)) }));
            }
            let h = match obj_ref("hopf")? {
                Object::Hopf(h) => h.clone(),
                _ => return Err(f.err("\"hopf\" is not a Hopf algebra")),
            };
            let rho = parse_matrix_value(f.get("coaction")?).map_err(|e| f.err(e))?;
            let comodule = ComoduleAlgebra::new(a, h, rho).map_err(|e| f.err(e))?;
            Ok(Object::Extension(Extension { comodule, action: None }))
        }
        "graded_algebra" => {
            let a = obj_ref("algebra")?.as_algebra().ok_or_else(|| f.err("\"algebra\" is not an algebra"))?.clone();
            let g = group_ref(objects, name, f.str("group")?)?;
            let degrees: Vec<usize> = serde_json::from_value(f.get("degrees")?.clone()).map_err(|e| f.err(e))?;
            GradedAlgebra::new(a, g, degrees).map(Object::Graded).map_err(|e| f.err(e))
        }
        "hopf_bimodule" => {
            let ext_name = f.str("extension")?;
            let e = match lookup(objects, name, ext_name)? {
                Object::Extension(e) => &e.comodule,
                _ => return Err(f.err("\"extension\" is not a comodule algebra")),
            };
            let left = parse_matrices(f.get("left")?).map_err(|e| f.err(e))?;
            let right = parse_matrices(f.get("right")?).map_err(|e| f.err(e))?;
            let coaction = parse_matrix_value(f.get("coaction")?).map_err(|e| f.err(e))?;
            let dim = coaction.cols();
            let bimodule =
                Bimodule { left: LeftModule { dim, action: left }, right: RightModule { dim, action: right } };
            let coaction = RightComodule { dim, coaction };
            // "check": false admits structures that fail the axioms, for negative controls
            let module = if f.v.get("check").and_then(Value::as_bool).unwrap_or(true) {
                HopfBimodule::new(e, bimodule, coaction).map_err(|e| f.err(e))?
            } else {
                HopfBimodule { bimodule, coaction }
            };
            Ok(Object::Bimodule(BimoduleObject { extension: ext_name.to_string(), module }))
        }
        "ore" => {
            let base = match obj_ref("base")? {
                Object::Extension(e) => e.comodule.clone(),
                _ => return Err(f.err("\"base\" is not a comodule algebra")),
            };
            let sigma = parse_matrix_value(f.get("sigma")?).map_err(|e| f.err(e))?;
            let delta = parse_matrix_value(f.get("delta")?).map_err(|e| f.err(e))?;
            OreData::new(base, sigma, delta, f.usize("max_degree")?).map(Object::Ore).map_err(|e| f.err(e))
        }
        other => Err(f.err(format!("unknown stanza kind {other:?}"))),
    }
}

/// Argument of a construction call: an integer, a name, or a nested call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CallArg {
    Int(i64),
    Name(String),
    Call(Call),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Call {
    pub name: String,
    pub args: Vec<CallArg>,
}

/// Parses `name(arg, ...)`; a bare identifier is a call without arguments.
pub fn parse_call(s: &str) -> Result<Call, String> {
    let mut p = CallParser { s: s.as_bytes(), i: 0 };
    let c = p.call()?;
    p.ws();
    if p.i != p.s.len() {
        return Err(format!("trailing input in {s:?}"));
    }
    Ok(c)
}

struct CallParser<'a> {
    s: &'a [u8],
    i: usize,
}

impl CallParser<'_> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn ident(&mut self) -> Result<String, String> {
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_') {
            self.i += 1;
        }
        if start == self.i {
            return Err(format!("expected an identifier at offset {start}"));
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.i]).into_owned())
    }

    fn call(&mut self) -> Result<Call, String> {
        let name = self.ident()?;
        self.ws();
        let mut args = Vec::new();
        if self.i < self.s.len() && self.s[self.i] == b'(' {
            self.i += 1;
            self.ws();
            if self.s.get(self.i) == Some(&b')') {
                self.i += 1;
                return Ok(Call { name, args });
            }
            loop {
                args.push(self.arg()?);
                self.ws();
                match self.s.get(self.i) {
                    Some(b',') => self.i += 1,
                    Some(b')') => {
                        self.i += 1;
                        break;
                    }
                    _ => return Err(format!("expected ',' or ')' at offset {}", self.i)),
                }
            }
        }
        Ok(Call { name, args })
    }

    fn arg(&mut self) -> Result<CallArg, String> {
        self.ws();
        let start = self.i;
        if self.s.get(self.i) == Some(&b'-') {
            self.i += 1;
        }
        if self.s.get(self.i).is_some_and(|c| c.is_ascii_digit()) {
            while self.s.get(self.i).is_some_and(|c| c.is_ascii_digit()) {
                self.i += 1;
            }
            let text = String::from_utf8_lossy(&self.s[start..self.i]).into_owned();
            return text.parse().map(CallArg::Int).map_err(|_| format!("bad integer {text:?}"));
        }
        self.i = start;
        let c = self.call()?;
        if c.args.is_empty() && self.s.get(self.i.saturating_sub(1)) != Some(&b')') {
            Ok(CallArg::Name(c.name))
        } else {
            Ok(CallArg::Call(c))
        }
    }
}

/// Construction builders reachable from `"kind": "construction"` stanzas.
pub const CONSTRUCTIONS: &[(&str, &str)] = &[
    ("trivial_group()", "the trivial group"),
    ("cyclic(n)", "ℤ/n"),
    ("klein()", "ℤ/2×ℤ/2"),
    ("symmetric3()", "S₃"),
    ("product(G, H)", "direct product of groups"),
    ("group_algebra(G)", "ℚG"),
    ("dual_group_algebra(G)", "(ℚG)*"),
    ("dual_hopf(H)", "the dual Hopf algebra"),
    ("zero_antipode(H)", "H with S = 0, unchecked; a negative control"),
    ("ground_field()", "ℚ as a Hopf algebra"),
    ("truncated_polynomial(n)", "ℚ[x]/(xⁿ)"),
    ("matrix_algebra(n)", "M_n(ℚ)"),
    ("quadratic_algebra(d)", "ℚ[t]/(t² - d)"),
    ("biquadratic_algebra(p, q)", "ℚ(√p, √q)"),
    ("galois_field_extension_sqrt(d)", "ℚ(√d)/ℚ with its ℤ/2 action"),
    ("biquadratic_klein(p, q)", "ℚ(√p, √q)/ℚ with the Klein group"),
    ("product_field_swap()", "ℚ×ℚ with the swap"),
    ("matrix_over_quadratic(d)", "M₂(ℚ)⊗ℚ(√d) with ℤ/2 on the second factor"),
    ("matrix_inner_action(n)", "M_n(ℚ) with conjugation by diag(1, …, 1, -1)"),
    ("strongly_graded(GR)", "a graded algebra as a ℚG-comodule algebra; rejects non-strong gradings"),
    ("graded(GR)", "a graded algebra as a ℚG-comodule algebra, strong or not"),
    ("trivial_extension(A)", "A with the trivial coaction of ℚ"),
    ("hopf_regular(H)", "H as an H-comodule algebra via Δ"),
    ("regular(E)", "A as a Hopf bimodule"),
    ("zero_bimodule(E)", "the zero Hopf bimodule"),
    ("free_outer(E)", "A⊗A with the outer structure"),
    ("twisted(E)", "A_σ for the nontrivial group element σ"),
    ("biquadratic_ore(D)", "ℚ(√2,√3)[X, σ] truncated at degree D"),
    ("matrix_inner_ore(D)", "M₂(ℚ)[X] over the inner ℤ/2 action, truncated at D"),
];

fn group_shorthand(name: &str) -> Option<FiniteGroup> {
    match name {
        "1" | "trivial" => Some(FiniteGroup::trivial()),
        "Z2" => Some(FiniteGroup::cyclic(2)),
        "Z3" => Some(FiniteGroup::cyclic(3)),
        "Z4" => Some(FiniteGroup::cyclic(4)),
        "V4" | "Z2xZ2" | "Klein" => Some(FiniteGroup::klein()),
        "S3" => Some(FiniteGroup::symmetric3()),
        _ => None,
    }
}

fn err_str<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn evaluate_call(call: &Call, objects: &BTreeMap<String, Object>) -> Result<Object, String> {
    let arity = |n: usize| -> Result<(), String> {
        if call.args.len() == n {
            Ok(())
        } else {
            Err(format!("{} takes {n} argument(s), got {}", call.name, call.args.len()))
        }
    };
    let eval = |i: usize| -> Result<Object, String> {
        match &call.args[i] {
            CallArg::Int(1) => Ok(Object::Group(FiniteGroup::trivial())),
            CallArg::Int(n) => Err(format!("argument {n} is not an object")),
            CallArg::Name(n) => match (objects.get(n), group_shorthand(n)) {
                (Some(o), _) => Ok(o.clone()),
                (None, Some(g)) => Ok(Object::Group(g)),
                (None, None) => Err(format!("unresolved reference {n:?}")),
            },
            CallArg::Call(c) => evaluate_call(c, objects),
        }
    };
    let int = |i: usize| -> Result<i64, String> {
        match &call.args[i] {
            CallArg::Int(n) => Ok(*n),
            _ => Err(format!("argument {} of {} must be an integer", i + 1, call.name)),
        }
    };
    let size = |i: usize| -> Result<usize, String> {
        let n = int(i)?;
        usize::try_from(n).map_err(|_| format!("{n} must be non-negative"))
    };
    let group = |i: usize| -> Result<FiniteGroup, String> {
        match eval(i)? {
            Object::Group(g) => Ok(g),
            o => Err(format!("expected a group, got a {}", o.kind())),
        }
    };
    let hopf = |i: usize| -> Result<HopfAlgebra, String> {
        match eval(i)? {
            Object::Hopf(h) => Ok(h),
            o => Err(format!("expected a Hopf algebra, got a {}", o.kind())),
        }
    };
    let extension = |i: usize| -> Result<(String, Extension), String> {
        let label = match &call.args[i] {
            CallArg::Name(n) => n.clone(),
            _ => return Err("a Hopf bimodule needs a named comodule algebra".into()),
        };
        match eval(i)? {
            Object::Extension(e) => Ok((label, e)),
            o => Err(format!("expected a comodule algebra, got a {}", o.kind())),
        }
    };
    let graded = |i: usize| -> Result<GradedAlgebra, String> {
        match eval(i)? {
            Object::Graded(g) => Ok(g),
            o => Err(format!("expected a graded algebra, got a {}", o.kind())),
        }
    };
    let with_action = |a: Algebra, g: FiniteGroup, act: Vec<Matrix>| -> Result<Object, String> {
        let comodule = action_comodule_algebra(&a, &g, &act).map_err(err_str)?;
        Ok(Object::Extension(Extension { comodule, action: Some((g, act)) }))
    };
    let bimodule = |ext: String, module: HopfBimodule| Object::Bimodule(BimoduleObject { extension: ext, module });
    match call.name.as_str() {
        "trivial_group" => arity(0).map(|_| Object::Group(FiniteGroup::trivial())),
        "cyclic" => {
            arity(1)?;
            let n = size(0)?;
            if n == 0 {
                return Err("cyclic(0) is not a finite group".into());
            }
            Ok(Object::Group(FiniteGroup::cyclic(n)))
        }
        "klein" => arity(0).map(|_| Object::Group(FiniteGroup::klein())),
        "symmetric3" => arity(0).map(|_| Object::Group(FiniteGroup::symmetric3())),
        "product" => {
            arity(2)?;
            Ok(Object::Group(FiniteGroup::product(&group(0)?, &group(1)?)))
        }
        "group_algebra" => arity(1).and_then(|_| Ok(Object::Hopf(group_algebra(&group(0)?)))),
        "dual_group_algebra" => arity(1).and_then(|_| Ok(Object::Hopf(dual_group_algebra(&group(0)?)))),
        "dual_hopf" => arity(1).and_then(|_| Ok(Object::Hopf(hopf(0)?.dual()))),
        "zero_antipode" => {
            arity(1)?;
            let h = hopf(0)?;
            let n = h.dim();
            HopfAlgebra::from_parts_unchecked(h.algebra().clone(), h.coalgebra().clone(), Matrix::zeros(n, n))
                .map(Object::Hopf)
                .map_err(err_str)
        }
        "ground_field" => arity(0).map(|_| Object::Hopf(HopfAlgebra::ground())),
        "truncated_polynomial" => {
            arity(1)?;
            let n = size(0)?;
            if n == 0 {
                return Err("ℚ[x]/(1) is the zero algebra".into());
            }
            Ok(Object::Algebra(truncated_polynomial(n)))
        }
        "matrix_algebra" => {
            arity(1)?;
            let n = size(0)?;
            if n == 0 {
                return Err("M_0 is the zero algebra".into());
            }
            Ok(Object::Algebra(matrix_algebra(n)))
        }
        "quadratic_algebra" => arity(1).and_then(|_| Ok(Object::Algebra(quadratic_algebra(int(0)?)))),
        "biquadratic_algebra" => arity(2).and_then(|_| Ok(Object::Algebra(biquadratic_algebra(int(0)?, int(1)?)))),
        "galois_field_extension_sqrt" => {
            arity(1)?;
            let f = galois_field_extension_sqrt(int(0)?).map_err(err_str)?;
            Ok(Object::Extension(Extension { comodule: f.extension, action: Some((f.group, f.action)) }))
        }
        "biquadratic_klein" => {
            arity(2)?;
            let a = biquadratic_algebra(int(0)?, int(1)?);
            // Klein elements in table order: e, a, b, ab
            let act = vec![
                biquadratic_automorphism(false, false),
                biquadratic_automorphism(true, false),
                biquadratic_automorphism(false, true),
                biquadratic_automorphism(true, true),
            ];
            with_action(a, FiniteGroup::klein(), act)
        }
        "product_field_swap" => {
            arity(0)?;
            let (a, g, act) = product_field_swap();
            with_action(a, g, act)
        }
        "matrix_over_quadratic" => {
            arity(1)?;
            let (a, g, act) = matrix_over_quadratic(int(0)?);
            with_action(a, g, act)
        }
        "matrix_inner_action" => {
            arity(1)?;
            let n = size(0)?;
            if n == 0 {
                return Err("M_0 is the zero algebra".into());
            }
            let u = Matrix::from_fn(n, n, |i, j| {
                if i != j {
                    Rational::from_integer(0.into())
                } else if i + 1 == n {
                    Rational::from_integer((-1).into())
                } else {
                    Rational::from_integer(1.into())
                }
            });
            let act = inner_action(n, &u, 2).map_err(err_str)?;
            with_action(matrix_algebra(n), FiniteGroup::cyclic(2), act)
        }
        "strongly_graded" => {
            arity(1)?;
            let g = graded(0)?;
            let comodule =
                crate::constructions::strongly_graded(&g.algebra, g.degrees.clone(), &g.group).map_err(err_str)?;
            Ok(Object::Extension(Extension { comodule, action: None }))
        }
        "graded" => {
            arity(1)?;
            let comodule = graded(0)?.comodule_algebra().map_err(err_str)?;
            Ok(Object::Extension(Extension { comodule, action: None }))
        }
        "trivial_extension" => {
            arity(1)?;
            let a = eval(0)?.as_algebra().cloned().ok_or("expected an algebra")?;
            let comodule = ComoduleAlgebra::trivial(a, HopfAlgebra::ground()).map_err(err_str)?;
            Ok(Object::Extension(Extension { comodule, action: None }))
        }
        "hopf_regular" => {
            arity(1)?;
            let h = match eval(0)? {
                Object::Hopf(h) => h,
                o => return Err(format!("expected a Hopf algebra, got a {}", o.kind())),
            };
            let comodule = ComoduleAlgebra::new(h.algebra().clone(), h.clone(), h.comult().clone()).map_err(err_str)?;
            Ok(Object::Extension(Extension { comodule, action: None }))
        }
        "regular" => {
            arity(1)?;
            let (n, e) = extension(0)?;
            Ok(bimodule(n, HopfBimodule::regular(&e.comodule)))
        }
        "zero_bimodule" => {
            arity(1)?;
            let (n, e) = extension(0)?;
            Ok(bimodule(n, HopfBimodule::zero(&e.comodule)))
        }
        "free_outer" => {
            arity(1)?;
            let (n, e) = extension(0)?;
            Ok(bimodule(n, HopfBimodule::free_outer(&e.comodule)))
        }
        "twisted" => {
            arity(1)?;
            let (n, e) = extension(0)?;
            let (g, act) = e.action.as_ref().ok_or("twisted(E) needs E to come from a group action")?;
            if g.order() < 2 {
                return Err("twisted(E) needs a nontrivial group".into());
            }
            let sigma = &act[(g.identity() + 1) % g.order()];
            HopfBimodule::twisted(&e.comodule, sigma).map(|m| bimodule(n, m)).map_err(err_str)
        }
        "biquadratic_ore" => arity(1).and_then(|_| biquadratic_ore(size(0)?).map(Object::Ore).map_err(err_str)),
        "matrix_inner_ore" => arity(1).and_then(|_| matrix_inner_ore(size(0)?).map(Object::Ore).map_err(err_str)),
        other => Err(format!("unknown construction {other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wrap(objects: &str, tasks: &str) -> String {
        format!(r#"{{"version":"hopfhomology/1","scalar":"Q","objects":[{objects}],"tasks":[{tasks}]}}"#)
    }

    #[test]
    fn call_syntax() {
        let c = parse_call("group_algebra(product(Z2, cyclic(3)))").unwrap();
        assert_eq!(c.name, "group_algebra");
        assert!(matches!(&c.args[0], CallArg::Call(p) if p.args.len() == 2));
        assert_eq!(parse_call("cyclic(-2)").unwrap().args, vec![CallArg::Int(-2)]);
        assert!(parse_call("f(1").is_err());
        assert!(parse_call("f(1) g").is_err());
    }

    #[test]
    fn minimal_ground_field() {
        let text = wrap(
            r#"{"name":"Q","kind":"hopf_algebra","dim":1,"structure":[[0,0,0,"1"]],"unit":["1"],
                "comult":[[0,0,0,"1"]],"counit":["1"],"antipode":[["1"]]}"#,
            r#"{"op":"validate_hopf","args":{"hopf":"Q"}}"#,
        );
        let inst = parse_instance(&text).unwrap();
        let ground = HopfAlgebra::ground();
        match inst.get("Q").unwrap() {
            Object::Hopf(h) => assert_eq!(h.relabel(ground.labels().to_vec()).unwrap(), ground),
            o => panic!("{o:?}"),
        }
        assert_eq!(inst.tasks.len(), 1);
    }

    #[test]
    fn dual_s3_construction() {
        let text = wrap(r#"{"name":"H","kind":"construction","call":"dual_group_algebra(S3)"}"#, "");
        let inst = parse_instance(&text).unwrap();
        match inst.get("H").unwrap() {
            Object::Hopf(h) => assert_eq!(h.cocommutative_subalgebra().unwrap().dim(), 3),
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn rejections() {
        let bad_rational = wrap(r#"{"name":"m","kind":"matrix","rows":[["1/0"]]}"#, "");
        assert!(matches!(parse_instance(&bad_rational), Err(InstanceError::Stanza { .. })));
        let bad_scalar = r#"{"version":"hopfhomology/1","scalar":"F2"}"#;
        assert_eq!(parse_instance(bad_scalar), Err(InstanceError::Scalar("F2".into())));
        let bad_version = r#"{"version":"x","scalar":"Q"}"#;
        assert!(matches!(parse_instance(bad_version), Err(InstanceError::Version(_))));
        let unresolved = wrap(r#"{"name":"M","kind":"construction","call":"regular(E)"}"#, "");
        assert!(parse_instance(&unresolved).is_err());
        let unknown = wrap(r#"{"name":"x","kind":"quantum_group"}"#, "");
        assert!(parse_instance(&unknown).unwrap_err().to_string().contains("unknown stanza kind"));
    }

    #[test]
    fn empty_instance() {
        let inst = parse_instance(&wrap("", "")).unwrap();
        assert!(inst.objects.is_empty() && inst.tasks.is_empty());
    }
}
