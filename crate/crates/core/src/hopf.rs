//! Finite-dimensional algebras, coalgebras and Hopf algebras given by
//! structure constants, together with the cocommutative subalgebra R_H,
//! the trace coalgebra C_H and the dual Hopf algebra.
//!
//! Multiplication is stored as a `d x d²` matrix, comultiplication as a
//! `d² x d` matrix, both in the lexicographic tensor basis.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{
    is_zero_vector, quotient_by, swap_matrix, tensor_vectors, unit_vector, zero_vector, LinalgError, Matrix,
    QuotientSpace, Rational, SparseColumns, Subspace, Vector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("axiom {axiom} fails at basis tuple {tuple:?}")]
    Axiom { axiom: String, tuple: Vec<usize> },
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Outcome of one axiom, with the first failing basis tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub counterexample: Option<Vec<usize>>,
}

impl AxiomCheck {
    pub(crate) fn run(
        axiom: &str,
        tuples: impl IntoIterator<Item = Vec<usize>>,
        mut ok: impl FnMut(&[usize]) -> bool,
    ) -> Self {
        let counterexample = tuples.into_iter().find(|t| !ok(t));
        AxiomCheck { axiom: axiom.to_string(), passed: counterexample.is_none(), counterexample }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub(crate) fn into_result(self) -> Result<(), HopfError> {
        match self.first_failure() {
            None => Ok(()),
            Some(c) => {
                Err(HopfError::Axiom { axiom: c.axiom.clone(), tuple: c.counterexample.clone().unwrap_or_default() })
            }
        }
    }
}

pub(crate) fn pairs(d: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..d).flat_map(move |i| (0..d).map(move |j| vec![i, j]))
}

pub(crate) fn triples(d: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..d).flat_map(move |i| (0..d).flat_map(move |j| (0..d).map(move |k| vec![i, j, k])))
}

/// Dual basis label; dualizing twice restores the original.
fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{l}*"),
    }
}

fn default_labels(prefix: &str, d: usize) -> Vec<String> {
    (0..d).map(|i| format!("{prefix}{i}")).collect()
}

/// Associative unital algebra with a labeled basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    labels: Vec<String>,
    mult: Matrix,
    unit: Vector,
    products: SparseColumns,
}

impl Algebra {
    pub fn new(labels: Vec<String>, mult: Matrix, unit: Vector) -> Result<Self, HopfError> {
        let a = Self::from_parts_unchecked(labels, mult, unit)?;
        a.validate().into_result()?;
        Ok(a)
    }

    /// Checks shapes only, so that broken structures can still be reported on.
    pub fn from_parts_unchecked(labels: Vec<String>, mult: Matrix, unit: Vector) -> Result<Self, HopfError> {
        let d = labels.len();
        if mult.rows() != d || mult.cols() != d * d || unit.len() != d {
            return Err(HopfError::Shape(format!(
                "algebra of dim {d} needs a {d}x{} multiplication and unit of length {d}",
                d * d
            )));
        }
        let products = mult.sparse_columns();
        Ok(Algebra { labels, mult, unit, products })
    }

    pub fn from_table(
        labels: Vec<String>,
        table: impl Fn(usize, usize) -> Vector,
        unit: Vector,
    ) -> Result<Self, HopfError> {
        let d = labels.len();
        let cols: Vec<Vector> = (0..d * d).map(|ij| table(ij / d, ij % d)).collect();
        Self::new(labels, Matrix::from_columns(d, &cols), unit)
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground() -> Self {
        Self::new(vec!["1".into()], Matrix::identity(1), vec![Rational::one()]).expect("ground field")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// Nonzero structure constants of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim() + j]
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim();
        let mut out = zero_vector(d);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &[Rational]) -> Matrix {
        let d = self.dim();
        Matrix::from_columns(d, &(0..d).map(|j| self.multiply(x, &self.basis(j))).collect::<Vec<_>>())
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult(&self, x: &[Rational]) -> Matrix {
        let d = self.dim();
        Matrix::from_columns(d, &(0..d).map(|j| self.multiply(&self.basis(j), x)).collect::<Vec<_>>())
    }

    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let e = |i| self.basis(i);
        let assoc = AxiomCheck::run("associativity", triples(d), |t| {
            let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
            self.multiply(&self.multiply(&x, &y), &z) == self.multiply(&x, &self.multiply(&y, &z))
        });
        let unit = AxiomCheck::run("unit", (0..d).map(|i| vec![i]), |t| {
            let x = e(t[0]);
            self.multiply(&self.unit, &x) == x && self.multiply(&x, &self.unit) == x
        });
        ValidationReport { checks: vec![assoc, unit] }
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        pairs(d).all(|t| self.basis_product(t[0], t[1]) == self.basis_product(t[1], t[0]))
    }

    /// `m - m∘τ`, whose image is the commutator subspace `[A, A]`.
    pub fn commutator_map(&self) -> Matrix {
        let d = self.dim();
        &self.mult - &(&self.mult * &swap_matrix(d, d))
    }

    pub fn commutator_subspace(&self) -> Subspace {
        self.commutator_map().image()
    }

    /// Elements commuting with every basis vector.
    pub fn center(&self) -> Subspace {
        let d = self.dim();
        let mut stacked = Matrix::zeros(0, d);
        for i in 0..d {
            let c = &self.right_mult(&self.basis(i)) - &self.left_mult(&self.basis(i));
            stacked = stacked.vstack(&c);
        }
        stacked.kernel()
    }

    /// Checks that `s` contains the unit and is closed under multiplication.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        if !s.contains(&self.unit) {
            return false;
        }
        let b = s.basis_vectors();
        b.iter().all(|x| b.iter().all(|y| s.contains(&self.multiply(x, y))))
    }

    /// Induced algebra on a subalgebra, in the coordinates of its echelon basis.
    pub fn subalgebra(&self, s: &Subspace, prefix: &str) -> Result<Subalgebra, HopfError> {
        if !self.is_subalgebra(s) {
            return Err(HopfError::Axiom { axiom: "subalgebra closure".into(), tuple: vec![] });
        }
        let b = s.basis_vectors();
        let k = b.len();
        let mut cols = Vec::with_capacity(k * k);
        for x in &b {
            for y in &b {
                cols.push(s.coordinates(&self.multiply(x, y)).expect("closed"));
            }
        }
        let unit = s.coordinates(&self.unit).expect("unit");
        let labels = default_labels(prefix, k);
        let algebra = Algebra::new(labels, Matrix::from_columns(k, &cols), unit)?;
        Ok(Subalgebra { algebra, space: s.clone() })
    }

    /// Gram matrix of the trace form `(x, y) ↦ tr(L_{xy})`.
    pub fn trace_form(&self) -> Matrix {
        let d = self.dim();
        let traces: Vec<Rational> = (0..d).map(|k| self.left_mult(&self.basis(k)).trace()).collect();
        Matrix::from_fn(d, d, |i, j| {
            self.basis_product(i, j).iter().fold(Rational::zero(), |acc, (k, c)| acc + c * &traces[*k])
        })
    }

    /// Radical of the trace form, which is the Jacobson radical in characteristic zero.
    pub fn radical(&self) -> Subspace {
        self.trace_form().kernel()
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_zero()
    }

    pub fn opposite(&self) -> Algebra {
        let d = self.dim();
        let mult = &self.mult * &swap_matrix(d, d);
        Algebra::from_parts_unchecked(self.labels.clone(), mult, self.unit.clone()).expect("shape")
    }

    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (p, q) = (self.dim(), other.dim());
        let mut labels = Vec::with_capacity(p * q);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        // (a⊗b)(a'⊗b') = aa'⊗bb' needs the middle flip.
        let mid = Matrix::identity(p).kron(&swap_matrix(q, p)).kron(&Matrix::identity(q));
        let mult = &self.mult.kron(&other.mult) * &mid;
        let unit = tensor_vectors(&self.unit, &other.unit);
        Algebra::from_parts_unchecked(labels, mult, unit).expect("shape")
    }
}

/// A subalgebra with its own algebra structure on echelon coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra {
    pub algebra: Algebra,
    pub space: Subspace,
}

impl Subalgebra {
    /// `ambient x dim` inclusion matrix.
    pub fn inclusion(&self) -> Matrix {
        self.space.inclusion()
    }

    pub fn whole(a: &Algebra) -> Subalgebra {
        Subalgebra { algebra: a.clone(), space: Subspace::full(a.dim()) }
    }
}

/// Coassociative counital coalgebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    labels: Vec<String>,
    comult: Matrix,
    counit: Vector,
}

impl Coalgebra {
    pub fn new(labels: Vec<String>, comult: Matrix, counit: Vector) -> Result<Self, HopfError> {
        let c = Self::from_parts_unchecked(labels, comult, counit)?;
        c.validate().into_result()?;
        Ok(c)
    }

    pub fn from_parts_unchecked(labels: Vec<String>, comult: Matrix, counit: Vector) -> Result<Self, HopfError> {
        let d = labels.len();
        if comult.rows() != d * d || comult.cols() != d || counit.len() != d {
            return Err(HopfError::Shape(format!("coalgebra of dim {d} needs a {}x{d} comultiplication", d * d)));
        }
        Ok(Coalgebra { labels, comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn counit_matrix(&self) -> Matrix {
        Matrix::from_rows(self.dim(), vec![self.counit.clone()])
    }

    /// `(Δ⊗id)∘Δ`, landing in `C⊗C⊗C`.
    pub fn double_comult(&self) -> Matrix {
        &self.comult.kron(&Matrix::identity(self.dim())) * &self.comult
    }

    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let id = Matrix::identity(d);
        let left = self.double_comult();
        let right = &id.kron(&self.comult) * &self.comult;
        let coassoc =
            AxiomCheck::run("coassociativity", (0..d).map(|i| vec![i]), |t| left.column(t[0]) == right.column(t[0]));
        let eps = self.counit_matrix();
        let l = &eps.kron(&id) * &self.comult;
        let r = &id.kron(&eps) * &self.comult;
        let counit = AxiomCheck::run("counit", (0..d).map(|i| vec![i]), |t| {
            let e = unit_vector(d, t[0]);
            l.column(t[0]) == e && r.column(t[0]) == e
        });
        ValidationReport { checks: vec![coassoc, counit] }
    }

    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        (&swap_matrix(d, d) * &self.comult) == self.comult
    }

    /// The dual algebra `C*`: multiplication `Δ^T`, unit `ε`.
    pub fn dual_algebra(&self) -> Algebra {
        let labels = self.labels.iter().map(|l| dual_label(l)).collect();
        Algebra::from_parts_unchecked(labels, self.comult.transpose(), self.counit.clone()).expect("shape")
    }

    pub fn is_cosemisimple(&self) -> bool {
        self.dual_algebra().is_semisimple()
    }
}

/// Finite-dimensional Hopf algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    algebra: Algebra,
    coalgebra: Coalgebra,
    antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, antipode: Matrix) -> Result<Self, HopfError> {
        let h = Self::from_parts_unchecked(algebra, coalgebra, antipode)?;
        h.validate().into_result()?;
        Ok(h)
    }

    pub fn from_parts_unchecked(algebra: Algebra, coalgebra: Coalgebra, antipode: Matrix) -> Result<Self, HopfError> {
        let d = algebra.dim();
        if coalgebra.dim() != d || antipode.rows() != d || antipode.cols() != d {
            return Err(HopfError::Shape("algebra, coalgebra and antipode dimensions differ".into()));
        }
        if algebra.labels() != coalgebra.labels() {
            return Err(HopfError::Shape("algebra and coalgebra basis labels differ".into()));
        }
        Ok(HopfAlgebra { algebra, coalgebra, antipode })
    }

    /// The ground field as a Hopf algebra.
    pub fn ground() -> Self {
        let a = Algebra::ground();
        let c = Coalgebra::new(a.labels().to_vec(), Matrix::identity(1), vec![Rational::one()]).expect("ground");
        HopfAlgebra::new(a, c, Matrix::identity(1)).expect("ground")
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn comult(&self) -> &Matrix {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &Vector {
        self.coalgebra.counit()
    }

    pub fn unit(&self) -> &Vector {
        self.algebra.unit()
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.algebra.multiply(x, y)
    }

    pub fn basis(&self, i: usize) -> Vector {
        self.algebra.basis(i)
    }

    pub fn epsilon(&self, x: &[Rational]) -> Rational {
        crate::linalg::dot(self.counit(), x)
    }

    /// Multiplication of `H⊗H`, as needed for the bialgebra compatibility.
    fn tensor_square_mult(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let d = self.dim();
        let mut out = zero_vector(d * d);
        for (p, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (q, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let (i, j) = (p / d, p % d);
                let (k, l) = (q / d, q % d);
                for (u, c1) in self.algebra.basis_product(i, k) {
                    for (v, c2) in self.algebra.basis_product(j, l) {
                        out[u * d + v] += &ab * c1 * c2;
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut report = self.algebra.validate();
        report.checks.extend(self.coalgebra.validate().checks);
        let delta = self.comult();
        let e = |i| self.basis(i);
        let comult_mult = AxiomCheck::run("comultiplication is multiplicative", pairs(d), |t| {
            let lhs = delta.apply(&self.multiply(&e(t[0]), &e(t[1])));
            lhs == self.tensor_square_mult(&delta.column(t[0]), &delta.column(t[1]))
        });
        let comult_unit = AxiomCheck::run("comultiplication is unital", std::iter::once(vec![]), |_| {
            delta.apply(self.unit()) == tensor_vectors(self.unit(), self.unit())
        });
        let counit_mult = AxiomCheck::run("counit is multiplicative", pairs(d), |t| {
            self.epsilon(&self.multiply(&e(t[0]), &e(t[1]))) == self.epsilon(&e(t[0])) * self.epsilon(&e(t[1]))
        });
        let counit_unit =
            AxiomCheck::run("counit is unital", std::iter::once(vec![]), |_| self.epsilon(self.unit()).is_one());
        let id = Matrix::identity(d);
        let left = &(self.algebra.mult() * &self.antipode.kron(&id)) * delta;
        let right = &(self.algebra.mult() * &id.kron(&self.antipode)) * delta;
        let antipode = AxiomCheck::run("antipode", (0..d).map(|i| vec![i]), |t| {
            let expect: Vector = self.unit().iter().map(|u| u * &self.counit()[t[0]]).collect();
            left.column(t[0]) == expect && right.column(t[0]) == expect
        });
        report.checks.extend([comult_mult, comult_unit, counit_mult, counit_unit, antipode]);
        report
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    pub fn augmentation_ideal(&self) -> Subspace {
        Matrix::from_rows(self.dim(), vec![self.counit().clone()]).kernel()
    }

    pub fn dual(&self) -> HopfAlgebra {
        let labels: Vec<String> = self.labels().iter().map(|l| dual_label(l)).collect();
        let algebra = Algebra::from_parts_unchecked(labels.clone(), self.comult().transpose(), self.counit().clone())
            .expect("shape");
        let coalgebra = Coalgebra::from_parts_unchecked(labels, self.algebra.mult().transpose(), self.unit().clone())
            .expect("shape");
        HopfAlgebra { algebra, coalgebra, antipode: self.antipode.transpose() }
    }

    /// Replaces the basis labels, keeping all structure constants.
    pub fn relabel(&self, labels: Vec<String>) -> Result<HopfAlgebra, HopfError> {
        let algebra = Algebra::from_parts_unchecked(labels.clone(), self.algebra.mult.clone(), self.unit().clone())?;
        let coalgebra = Coalgebra::from_parts_unchecked(labels, self.comult().clone(), self.counit().clone())?;
        HopfAlgebra::from_parts_unchecked(algebra, coalgebra, self.antipode.clone())
    }

    pub fn cocommutative_subalgebra(&self) -> Result<CocommutativeSubalgebra, HopfError> {
        let d = self.dim();
        let space = (self.comult() - &(&swap_matrix(d, d) * self.comult())).kernel();
        let sub = self.algebra.subalgebra(&space, "r")?;
        let plus_part = space.intersect(&self.augmentation_ideal())?;
        Ok(CocommutativeSubalgebra { sub, plus_part })
    }

    pub fn trace_coalgebra(&self) -> Result<TraceCoalgebra, HopfError> {
        let commutators = self.algebra.commutator_subspace();
        let quotient = quotient_by(&commutators);
        let pi = quotient.projection.clone();
        let pi2 = pi.kron(&pi);
        for v in commutators.basis_vectors() {
            if !is_zero_vector(&pi2.apply(&self.comult().apply(&v))) {
                return Err(HopfError::Axiom { axiom: "C_H comultiplication well defined".into(), tuple: vec![] });
            }
            if !self.epsilon(&v).is_zero() {
                return Err(HopfError::Axiom { axiom: "C_H counit well defined".into(), tuple: vec![] });
            }
        }
        let comult = &(&pi2 * self.comult()) * &quotient.section;
        let counit = quotient.section.transpose().apply(self.counit());
        let labels = quotient.representatives.iter().map(|&i| format!("[{}]", self.labels()[i])).collect();
        let coalgebra = Coalgebra::new(labels, comult, counit)?;
        Ok(TraceCoalgebra { quotient, pi, coalgebra })
    }

    /// `R_H⁺·H = H⁺`.
    pub fn has_enough_cocommutative_elements(&self) -> Result<bool, HopfError> {
        let r = self.cocommutative_subalgebra()?;
        let d = self.dim();
        let mut prods = Vec::new();
        for x in r.plus_part.basis_vectors() {
            for j in 0..d {
                prods.push(self.multiply(&x, &self.basis(j)));
            }
        }
        Ok(Subspace::span(d, prods) == self.augmentation_ideal())
    }

    pub fn is_semisimple(&self) -> bool {
        self.algebra.is_semisimple()
    }

    pub fn is_cosemisimple(&self) -> bool {
        self.coalgebra.is_cosemisimple()
    }

    pub fn antipode_squared_is_identity(&self) -> bool {
        (&self.antipode * &self.antipode).is_identity()
    }

    pub fn involutivity(&self) -> Involutivity {
        let d = self.dim();
        let id = Matrix::identity(d);
        let m = &(&(self.algebra.mult() * &id.kron(&self.antipode)) * &swap_matrix(d, d)) * self.comult();
        let twisted = AxiomCheck::run("sum r2 S(r1) = eps(r) 1", (0..d).map(|i| vec![i]), |t| {
            let expect: Vector = self.unit().iter().map(|u| u * &self.counit()[t[0]]).collect();
            m.column(t[0]) == expect
        });
        Involutivity { squared_identity: self.antipode_squared_is_identity(), twisted_identity: twisted }
    }

    /// Functionals vanishing on commutators, as a subspace of `H*`.
    pub fn trace_maps(&self) -> Subspace {
        self.algebra.commutator_map().transpose().kernel()
    }

    /// Checks that the trace maps are exactly `R_{H*}`.
    pub fn trace_maps_match_dual(&self) -> Result<bool, HopfError> {
        let r = self.dual().cocommutative_subalgebra()?;
        Ok(r.sub.space == self.trace_maps())
    }

    /// `(Δ⊗id)∘Δ` on `H`, landing in `H⊗H⊗H`.
    pub fn double_comult(&self) -> Matrix {
        self.coalgebra.double_comult()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Involutivity {
    pub squared_identity: bool,
    pub twisted_identity: AxiomCheck,
}

/// `R_H = ker(Δ - τΔ)` with its augmentation part `R_H⁺ = R_H ∩ ker ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocommutativeSubalgebra {
    pub sub: Subalgebra,
    pub plus_part: Subspace,
}

impl CocommutativeSubalgebra {
    pub fn space(&self) -> &Subspace {
        &self.sub.space
    }

    pub fn dim(&self) -> usize {
        self.sub.space.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.sub.algebra
    }
}

/// `C_H = H/[H,H]` with its trace map `π_H` and induced coalgebra structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceCoalgebra {
    pub quotient: QuotientSpace,
    pub pi: Matrix,
    pub coalgebra: Coalgebra,
}

impl TraceCoalgebra {
    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn z2_group_algebra() -> HopfAlgebra {
        // basis 1, g with g² = 1, Δ(g) = g⊗g.
        let labels = vec!["1".to_string(), "g".to_string()];
        let a = Algebra::from_table(labels.clone(), |i, j| unit_vector(2, (i + j) % 2), unit_vector(2, 0)).unwrap();
        let mut comult = Matrix::zeros(4, 2);
        comult.set(0, 0, int(1));
        comult.set(3, 1, int(1));
        let c = Coalgebra::new(labels, comult, vec![int(1), int(1)]).unwrap();
        HopfAlgebra::new(a, c, Matrix::identity(2)).unwrap()
    }

    #[test]
    fn ground_field_is_hopf() {
        let q = HopfAlgebra::ground();
        assert!(q.validate().passed());
        assert_eq!(q.cocommutative_subalgebra().unwrap().dim(), 1);
        assert!(q.has_enough_cocommutative_elements().unwrap());
        assert!(q.is_cosemisimple());
        assert_eq!(q.dual().dual(), q);
    }

    #[test]
    fn z2_axioms_pass_and_broken_antipode_fails() {
        let h = z2_group_algebra();
        let report = h.validate();
        assert!(report.passed());
        assert_eq!(report.checks.len(), 9);
        let broken =
            HopfAlgebra::from_parts_unchecked(h.algebra().clone(), h.coalgebra().clone(), Matrix::zeros(2, 2)).unwrap();
        let r = broken.validate();
        let failure = r.first_failure().unwrap();
        assert_eq!(failure.axiom, "antipode");
        assert_eq!(failure.counterexample, Some(vec![0]));
        assert!(HopfAlgebra::new(h.algebra().clone(), h.coalgebra().clone(), Matrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn z2_dual_is_orthogonal_idempotents() {
        let h = z2_group_algebra();
        let d = h.dual();
        assert!(d.validate().passed());
        assert_eq!(d.multiply(&d.basis(0), &d.basis(0)), d.basis(0));
        assert!(is_zero_vector(&d.multiply(&d.basis(0), &d.basis(1))));
        assert_eq!(d.multiply(&d.basis(1), &d.basis(1)), d.basis(1));
        assert_eq!(d.dual().comult(), h.comult());
    }

    #[test]
    fn semisimplicity_of_small_algebras() {
        assert!(z2_group_algebra().is_semisimple());
        // ℚ[x]/(x²)
        let dual_numbers = Algebra::from_table(
            vec!["1".into(), "x".into()],
            |i, j| if i + j >= 2 { zero_vector(2) } else { unit_vector(2, i + j) },
            unit_vector(2, 0),
        )
        .unwrap();
        assert!(!dual_numbers.is_semisimple());
        assert_eq!(dual_numbers.radical(), Subspace::span(2, vec![unit_vector(2, 1)]));
    }

    #[test]
    fn cocommutative_group_algebra_has_full_r_h() {
        let h = z2_group_algebra();
        let r = h.cocommutative_subalgebra().unwrap();
        assert!(r.space().is_full());
        assert_eq!(r.plus_part.dim(), 1);
        assert_eq!(h.trace_coalgebra().unwrap().dim(), 2);
        assert!(h.involutivity().squared_identity);
        assert!(h.involutivity().twisted_identity.passed);
        assert!(h.trace_maps_match_dual().unwrap());
    }

    #[test]
    fn tensor_and_opposite() {
        let a = z2_group_algebra().algebra().clone();
        let t = a.tensor(&a);
        assert!(t.validate().passed());
        assert!(t.is_commutative());
        assert_eq!(a.opposite(), a);
    }
}
