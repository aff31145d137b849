//! Modules, comodules, bimodules and Hopf bimodules, with the constructions
//! built from them: invariants, coinvariants, commutator quotients
//! `X_R = X/[R,X]`, relative tensor products and cotensor products.
//!
//! A right comodule `M` over a coalgebra `C` is a matrix `M -> M⊗C`; a left
//! comodule `V` is a matrix `V -> C⊗V`.

use serde::Serialize;
use thiserror::Error;

use crate::galois::ComoduleAlgebra;
use crate::hopf::{pairs, Algebra, AxiomCheck, Coalgebra, HopfError, ValidationReport};
use crate::linalg::{quotient_by, unit_vector, LinalgError, Matrix, QuotientSpace, Rational, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("axiom {axiom} fails at basis tuple {tuple:?}")]
    Axiom { axiom: String, tuple: Vec<usize> },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("canonical map is not bijective: {0}")]
    NotBijective(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

fn check(report: ValidationReport) -> Result<(), RepError> {
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(RepError::Axiom { axiom: c.axiom.clone(), tuple: c.counterexample.clone().unwrap_or_default() }),
    }
}

/// Linear combination `Σ coeffs[i] · mats[i]`.
pub fn combine(mats: &[Matrix], coeffs: &[Rational], rows: usize, cols: usize) -> Matrix {
    let mut acc = Matrix::zeros(rows, cols);
    for (m, c) in mats.iter().zip(coeffs) {
        if !num_traits::Zero::is_zero(c) {
            acc = &acc + &m.scale(c);
        }
    }
    acc
}

/// Left module: `action[i]` is the matrix of the basis vector `e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftModule {
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl LeftModule {
    pub fn new(algebra: &Algebra, dim: usize, action: Vec<Matrix>) -> Result<Self, RepError> {
        let m = LeftModule { dim, action };
        check(m.validate(algebra))?;
        Ok(m)
    }

    pub fn regular(a: &Algebra) -> Self {
        LeftModule { dim: a.dim(), action: (0..a.dim()).map(|i| a.left_mult(&a.basis(i))).collect() }
    }

    /// The ground field with `e_i` acting by `χ(e_i)`.
    pub fn one_dimensional(character: &[Rational]) -> Self {
        LeftModule { dim: 1, action: character.iter().map(|c| Matrix::scalar(1, c)).collect() }
    }

    pub fn act(&self, x: &[Rational]) -> Matrix {
        combine(&self.action, x, self.dim, self.dim)
    }

    pub fn validate(&self, a: &Algebra) -> ValidationReport {
        let shape = AxiomCheck::run("left module shape", std::iter::once(vec![]), |_| {
            self.action.len() == a.dim() && self.action.iter().all(|m| m.rows() == self.dim && m.cols() == self.dim)
        });
        if !shape.passed {
            return ValidationReport { checks: vec![shape] };
        }
        let assoc = AxiomCheck::run("left module associativity", pairs(a.dim()), |t| {
            self.act(&a.multiply(&a.basis(t[0]), &a.basis(t[1]))) == &self.action[t[0]] * &self.action[t[1]]
        });
        let unit = AxiomCheck::run("left module unit", std::iter::once(vec![]), |_| self.act(a.unit()).is_identity());
        ValidationReport { checks: vec![shape, assoc, unit] }
    }
}

/// Right module: `action[i]` is the matrix of `m ↦ m e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightModule {
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl RightModule {
    pub fn new(algebra: &Algebra, dim: usize, action: Vec<Matrix>) -> Result<Self, RepError> {
        let m = RightModule { dim, action };
        check(m.validate(algebra))?;
        Ok(m)
    }

    pub fn regular(a: &Algebra) -> Self {
        RightModule { dim: a.dim(), action: (0..a.dim()).map(|i| a.right_mult(&a.basis(i))).collect() }
    }

    pub fn one_dimensional(character: &[Rational]) -> Self {
        RightModule { dim: 1, action: character.iter().map(|c| Matrix::scalar(1, c)).collect() }
    }

    pub fn act(&self, x: &[Rational]) -> Matrix {
        combine(&self.action, x, self.dim, self.dim)
    }

    pub fn validate(&self, a: &Algebra) -> ValidationReport {
        let shape = AxiomCheck::run("right module shape", std::iter::once(vec![]), |_| {
            self.action.len() == a.dim() && self.action.iter().all(|m| m.rows() == self.dim && m.cols() == self.dim)
        });
        if !shape.passed {
            return ValidationReport { checks: vec![shape] };
        }
        let assoc = AxiomCheck::run("right module associativity", pairs(a.dim()), |t| {
            self.act(&a.multiply(&a.basis(t[0]), &a.basis(t[1]))) == &self.action[t[1]] * &self.action[t[0]]
        });
        let unit = AxiomCheck::run("right module unit", std::iter::once(vec![]), |_| self.act(a.unit()).is_identity());
        ValidationReport { checks: vec![shape, assoc, unit] }
    }
}

/// Bimodule over a single algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    pub left: LeftModule,
    pub right: RightModule,
}

impl Bimodule {
    pub fn new(algebra: &Algebra, left: LeftModule, right: RightModule) -> Result<Self, RepError> {
        let b = Bimodule { left, right };
        check(b.validate(algebra))?;
        Ok(b)
    }

    pub fn regular(a: &Algebra) -> Self {
        Bimodule { left: LeftModule::regular(a), right: RightModule::regular(a) }
    }

    pub fn zero(a: &Algebra) -> Self {
        let z = vec![Matrix::zeros(0, 0); a.dim()];
        Bimodule { left: LeftModule { dim: 0, action: z.clone() }, right: RightModule { dim: 0, action: z } }
    }

    pub fn dim(&self) -> usize {
        self.left.dim
    }

    pub fn validate(&self, a: &Algebra) -> ValidationReport {
        let mut r = self.left.validate(a);
        r.checks.extend(self.right.validate(a).checks);
        if !r.passed() || self.left.dim != self.right.dim {
            r.checks.push(AxiomCheck {
                axiom: "bimodule shape".into(),
                passed: self.left.dim == self.right.dim,
                counterexample: None,
            });
            return r;
        }
        r.checks.push(AxiomCheck::run("bimodule compatibility", pairs(a.dim()), |t| {
            &self.left.action[t[0]] * &self.right.action[t[1]] == &self.right.action[t[1]] * &self.left.action[t[0]]
        }));
        r
    }

    /// Restriction of both actions along a subalgebra inclusion.
    pub fn restrict(&self, inclusion: &Matrix) -> Bimodule {
        let d = self.dim();
        let cols = inclusion.columns();
        Bimodule {
            left: LeftModule { dim: d, action: cols.iter().map(|c| self.left.act(c)).collect() },
            right: RightModule { dim: d, action: cols.iter().map(|c| self.right.act(c)).collect() },
        }
    }

    /// The sub-bimodule on an invariant subspace, in its echelon coordinates.
    pub fn sub_bimodule(&self, s: &Subspace) -> Result<Bimodule, RepError> {
        let restrict = |m: &Matrix| s.restrict(m);
        let left = self.left.action.iter().map(restrict).collect::<Result<Vec<_>, _>>()?;
        let right = self.right.action.iter().map(restrict).collect::<Result<Vec<_>, _>>()?;
        Ok(Bimodule {
            left: LeftModule { dim: s.dim(), action: left },
            right: RightModule { dim: s.dim(), action: right },
        })
    }

    /// The bimodule `M⊗V` with the algebra acting on `M` only.
    pub fn tensor_space(&self, v_dim: usize) -> Bimodule {
        let id = Matrix::identity(v_dim);
        Bimodule {
            left: LeftModule {
                dim: self.dim() * v_dim,
                action: self.left.action.iter().map(|m| m.kron(&id)).collect(),
            },
            right: RightModule {
                dim: self.dim() * v_dim,
                action: self.right.action.iter().map(|m| m.kron(&id)).collect(),
            },
        }
    }

    /// Whether `z m = m z` for all `z` in the given subspace of the algebra.
    pub fn symmetric_over(&self, s: &Subspace) -> Option<(usize, usize)> {
        for (k, z) in s.basis_vectors().iter().enumerate() {
            let diff = &self.left.act(z) - &self.right.act(z);
            if let Some(j) = (0..self.dim()).find(|&j| !crate::linalg::is_zero_vector(&diff.column(j))) {
                return Some((k, j));
            }
        }
        None
    }

    /// `X^R = {x : r x = x r}` for `r` ranging over a subspace of the algebra.
    pub fn invariants(&self, r: &Subspace) -> Subspace {
        let d = self.dim();
        let mut stacked = Matrix::zeros(0, d);
        for v in r.basis_vectors() {
            stacked = stacked.vstack(&(&self.left.act(&v) - &self.right.act(&v)));
        }
        stacked.kernel()
    }

    /// `X_R = X/[R,X]`.
    pub fn commutator_quotient(&self, r: &Subspace) -> BimoduleQuotient {
        let d = self.dim();
        let mut gens = Vec::new();
        for v in r.basis_vectors() {
            let c = &self.left.act(&v) - &self.right.act(&v);
            gens.extend(c.columns());
        }
        let relations = Subspace::span(d, gens);
        BimoduleQuotient { quotient: quotient_by(&relations) }
    }
}

/// `X_R` together with its class map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleQuotient {
    pub quotient: QuotientSpace,
}

impl BimoduleQuotient {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn class_of(&self, x: &[Rational]) -> Vector {
        self.quotient.project(x)
    }
}

/// Right comodule `ρ: M -> M⊗C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightComodule {
    pub dim: usize,
    pub coaction: Matrix,
}

impl RightComodule {
    pub fn new(c: &Coalgebra, dim: usize, coaction: Matrix) -> Result<Self, RepError> {
        let m = RightComodule { dim, coaction };
        check(m.validate(c))?;
        Ok(m)
    }

    pub fn regular(c: &Coalgebra) -> Self {
        RightComodule { dim: c.dim(), coaction: c.comult().clone() }
    }

    /// `m ↦ m⊗g` for a group-like `g`.
    pub fn trivial(dim: usize, group_like: &[Rational]) -> Self {
        let g = Matrix::from_columns(group_like.len(), &[group_like.to_vec()]);
        RightComodule { dim, coaction: Matrix::identity(dim).kron(&g) }
    }

    pub fn validate(&self, c: &Coalgebra) -> ValidationReport {
        let (d, k) = (self.dim, c.dim());
        let shape = AxiomCheck::run("right comodule shape", std::iter::once(vec![]), |_| {
            self.coaction.rows() == d * k && self.coaction.cols() == d
        });
        if !shape.passed {
            return ValidationReport { checks: vec![shape] };
        }
        let lhs = &self.coaction.kron(&Matrix::identity(k)) * &self.coaction;
        let rhs = &Matrix::identity(d).kron(c.comult()) * &self.coaction;
        let coassoc = AxiomCheck::run("right comodule coassociativity", (0..d).map(|i| vec![i]), |t| {
            lhs.column(t[0]) == rhs.column(t[0])
        });
        let counit_map = &Matrix::identity(d).kron(&c.counit_matrix()) * &self.coaction;
        let counit = AxiomCheck::run("right comodule counit", (0..d).map(|i| vec![i]), |t| {
            counit_map.column(t[0]) == unit_vector(d, t[0])
        });
        ValidationReport { checks: vec![shape, coassoc, counit] }
    }

    /// `M^coC = {m : ρ(m) = m⊗g}`.
    pub fn coinvariants(&self, group_like: &[Rational]) -> Subspace {
        let triv = RightComodule::trivial(self.dim, group_like);
        (&self.coaction - &triv.coaction).kernel()
    }

    /// Image under a linear map `C -> D`, such as `π_H`.
    pub fn push_forward(&self, f: &Matrix) -> RightComodule {
        RightComodule { dim: self.dim, coaction: &Matrix::identity(self.dim).kron(f) * &self.coaction }
    }

    /// Induced coaction on an invariant subspace, in its coordinates.
    pub fn restrict(&self, s: &Subspace, c_dim: usize) -> Result<RightComodule, RepError> {
        let target = tensor_subspace(s, c_dim);
        let image = s.image_under(&self.coaction);
        if !target.contains_subspace(&image) {
            return Err(RepError::Axiom { axiom: "subcomodule".into(), tuple: vec![] });
        }
        let coords = s.coordinate_matrix().kron(&Matrix::identity(c_dim));
        Ok(RightComodule { dim: s.dim(), coaction: &(&coords * &self.coaction) * &s.inclusion() })
    }

    /// Induced coaction on a quotient whose relations form a subcomodule.
    pub fn descend(&self, q: &QuotientSpace, c_dim: usize) -> Result<RightComodule, RepError> {
        let pc = q.projection.kron(&Matrix::identity(c_dim));
        for v in q.relations.basis_vectors() {
            if !crate::linalg::is_zero_vector(&pc.apply(&self.coaction.apply(&v))) {
                return Err(RepError::Axiom { axiom: "relations form a subcomodule".into(), tuple: vec![] });
            }
        }
        Ok(RightComodule { dim: q.dim(), coaction: &(&pc * &self.coaction) * &q.section })
    }
}

/// `S⊗K^c` inside `K^n⊗K^c`.
pub fn tensor_subspace(s: &Subspace, c_dim: usize) -> Subspace {
    let mut vecs = Vec::new();
    for v in s.basis_vectors() {
        for j in 0..c_dim {
            vecs.push(crate::linalg::tensor_vectors(&v, &unit_vector(c_dim, j)));
        }
    }
    Subspace::span(s.ambient_dim() * c_dim, vecs)
}

/// Left comodule `ρ: V -> C⊗V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftComodule {
    pub dim: usize,
    pub coaction: Matrix,
}

impl LeftComodule {
    pub fn new(c: &Coalgebra, dim: usize, coaction: Matrix) -> Result<Self, RepError> {
        let v = LeftComodule { dim, coaction };
        check(v.validate(c))?;
        Ok(v)
    }

    pub fn regular(c: &Coalgebra) -> Self {
        LeftComodule { dim: c.dim(), coaction: c.comult().clone() }
    }

    /// The ground field with `1 ↦ g⊗1`.
    pub fn trivial(group_like: &[Rational]) -> Self {
        LeftComodule { dim: 1, coaction: Matrix::from_columns(group_like.len(), &[group_like.to_vec()]) }
    }

    pub fn validate(&self, c: &Coalgebra) -> ValidationReport {
        let (d, k) = (self.dim, c.dim());
        let shape = AxiomCheck::run("left comodule shape", std::iter::once(vec![]), |_| {
            self.coaction.rows() == k * d && self.coaction.cols() == d
        });
        if !shape.passed {
            return ValidationReport { checks: vec![shape] };
        }
        let lhs = &Matrix::identity(k).kron(&self.coaction) * &self.coaction;
        let rhs = &c.comult().kron(&Matrix::identity(d)) * &self.coaction;
        let coassoc = AxiomCheck::run("left comodule coassociativity", (0..d).map(|i| vec![i]), |t| {
            lhs.column(t[0]) == rhs.column(t[0])
        });
        let counit_map = &c.counit_matrix().kron(&Matrix::identity(d)) * &self.coaction;
        let counit = AxiomCheck::run("left comodule counit", (0..d).map(|i| vec![i]), |t| {
            counit_map.column(t[0]) == unit_vector(d, t[0])
        });
        ValidationReport { checks: vec![shape, coassoc, counit] }
    }
}

/// Object of `_R𝔐^C`: a left `R`-module whose coaction is `R`-linear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleComodule {
    pub module: LeftModule,
    pub comodule: RightComodule,
}

impl ModuleComodule {
    pub fn new(r: &Algebra, c: &Coalgebra, module: LeftModule, comodule: RightComodule) -> Result<Self, RepError> {
        let m = ModuleComodule { module, comodule };
        check(m.validate(r, c))?;
        Ok(m)
    }

    pub fn validate(&self, r: &Algebra, c: &Coalgebra) -> ValidationReport {
        let mut report = self.module.validate(r);
        report.checks.extend(self.comodule.validate(c).checks);
        if !report.passed() || self.module.dim != self.comodule.dim {
            return report;
        }
        let id = Matrix::identity(c.dim());
        report.checks.push(AxiomCheck::run("coaction is module map", (0..r.dim()).map(|i| vec![i]), |t| {
            let a = &self.module.action[t[0]];
            &self.comodule.coaction * a == &a.kron(&id) * &self.comodule.coaction
        }));
        report
    }
}

/// Bimodule over a comodule algebra with a compatible right coaction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfBimodule {
    pub bimodule: Bimodule,
    pub coaction: RightComodule,
}

impl HopfBimodule {
    pub fn new(e: &ComoduleAlgebra, bimodule: Bimodule, coaction: RightComodule) -> Result<Self, RepError> {
        let m = HopfBimodule { bimodule, coaction };
        check(m.validate(e))?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim()
    }

    /// `A` itself.
    pub fn regular(e: &ComoduleAlgebra) -> Self {
        HopfBimodule {
            bimodule: Bimodule::regular(e.algebra()),
            coaction: RightComodule { dim: e.algebra().dim(), coaction: e.coaction().clone() },
        }
    }

    pub fn zero(e: &ComoduleAlgebra) -> Self {
        HopfBimodule {
            bimodule: Bimodule::zero(e.algebra()),
            coaction: RightComodule { dim: 0, coaction: Matrix::zeros(0, 0) },
        }
    }

    /// `A_σ`: left regular, right action `m·a = mσ(a)`, coaction of `A`.
    pub fn twisted(e: &ComoduleAlgebra, sigma: &Matrix) -> Result<Self, RepError> {
        let a = e.algebra();
        let right = (0..a.dim()).map(|i| a.right_mult(&sigma.column(i))).collect();
        let bimodule = Bimodule { left: LeftModule::regular(a), right: RightModule { dim: a.dim(), action: right } };
        HopfBimodule::new(e, bimodule, RightComodule { dim: a.dim(), coaction: e.coaction().clone() })
    }

    /// `U = A⊗A` with the outer bimodule structure and coaction
    /// `a⊗x ↦ a₀⊗x₀⊗a₁x₁`.
    pub fn free_outer(e: &ComoduleAlgebra) -> Self {
        let a = e.algebra();
        let h = e.hopf();
        let (n, k) = (a.dim(), h.dim());
        let id = Matrix::identity(n);
        let left = (0..n).map(|i| a.left_mult(&a.basis(i)).kron(&id)).collect();
        let right = (0..n).map(|i| id.kron(&a.right_mult(&a.basis(i)))).collect();
        // a₀⊗a₁⊗x₀⊗x₁ -> a₀⊗x₀⊗a₁⊗x₁ -> a₀⊗x₀⊗a₁x₁
        let rr = e.coaction().kron(e.coaction());
        let mid = id.kron(&crate::linalg::swap_matrix(k, n)).kron(&Matrix::identity(k));
        let mult = Matrix::identity(n * n).kron(h.algebra().mult());
        let coaction = &(&mult * &mid) * &rr;
        HopfBimodule {
            bimodule: Bimodule {
                left: LeftModule { dim: n * n, action: left },
                right: RightModule { dim: n * n, action: right },
            },
            coaction: RightComodule { dim: n * n, coaction },
        }
    }

    pub fn validate(&self, e: &ComoduleAlgebra) -> ValidationReport {
        let a = e.algebra();
        let h = e.hopf();
        let mut report = self.bimodule.validate(a);
        report.checks.extend(self.coaction.validate(h.coalgebra()).checks);
        if !report.passed() || self.coaction.dim != self.dim() {
            return report;
        }
        let d = self.dim();
        let k = h.dim();
        let rho = &self.coaction.coaction;
        let tuples = || (0..d).flat_map(move |m| (0..a.dim()).map(move |i| vec![m, i]));
        report.checks.push(AxiomCheck::run("right Hopf module compatibility", tuples(), |t| {
            let lhs = rho.apply(&self.bimodule.right.action[t[1]].column(t[0]));
            let rm = rho.column(t[0]);
            let ra = e.coaction().column(t[1]);
            let mut rhs = vec![Rational::from_integer(0.into()); d * k];
            for (p, c1) in rm.iter().enumerate().filter(|x| !num_traits::Zero::is_zero(x.1)) {
                let (m0, m1) = (p / k, p % k);
                for (q, c2) in ra.iter().enumerate().filter(|x| !num_traits::Zero::is_zero(x.1)) {
                    let (a0, a1) = (q / k, q % k);
                    let ma = self.bimodule.right.action[a0].column(m0);
                    let hh = h.multiply(&h.basis(m1), &h.basis(a1));
                    crate::linalg::add_scaled(&mut rhs, &(c1 * c2), &crate::linalg::tensor_vectors(&ma, &hh));
                }
            }
            lhs == rhs
        }));
        report.checks.push(AxiomCheck::run("left Hopf module compatibility", tuples(), |t| {
            let lhs = rho.apply(&self.bimodule.left.action[t[1]].column(t[0]));
            let rm = rho.column(t[0]);
            let ra = e.coaction().column(t[1]);
            let mut rhs = vec![Rational::from_integer(0.into()); d * k];
            for (q, c2) in ra.iter().enumerate().filter(|x| !num_traits::Zero::is_zero(x.1)) {
                let (a0, a1) = (q / k, q % k);
                for (p, c1) in rm.iter().enumerate().filter(|x| !num_traits::Zero::is_zero(x.1)) {
                    let (m0, m1) = (p / k, p % k);
                    let am = self.bimodule.left.action[a0].column(m0);
                    let hh = h.multiply(&h.basis(a1), &h.basis(m1));
                    crate::linalg::add_scaled(&mut rhs, &(c1 * c2), &crate::linalg::tensor_vectors(&am, &hh));
                }
            }
            lhs == rhs
        }));
        report
    }
}

/// `X⊗_R Y` as a quotient of `X⊗Y` by `x r⊗y - x⊗r y`.
pub fn relative_tensor(x: &RightModule, y: &LeftModule) -> Result<QuotientSpace, RepError> {
    if x.action.len() != y.action.len() {
        return Err(RepError::Shape("modules over different algebras".into()));
    }
    let n = x.dim * y.dim;
    let mut gens = Vec::new();
    for (rx, ly) in x.action.iter().zip(&y.action) {
        let rel = &rx.kron(&Matrix::identity(y.dim)) - &Matrix::identity(x.dim).kron(ly);
        gens.extend(rel.columns());
    }
    Ok(quotient_by(&Subspace::span(n, gens)))
}

/// `M□_C V = ker(ρ_M⊗V - M⊗ρ_V)`.
pub fn cotensor(m: &RightComodule, v: &LeftComodule) -> Result<Subspace, RepError> {
    let k = m.coaction.rows() / m.dim.max(1);
    if m.dim > 0 && v.dim > 0 && v.coaction.rows() != k * v.dim {
        return Err(RepError::Shape("comodules over different coalgebras".into()));
    }
    let lhs = m.coaction.kron(&Matrix::identity(v.dim));
    let rhs = Matrix::identity(m.dim).kron(&v.coaction);
    if lhs.rows() != rhs.rows() {
        return Err(RepError::Shape("comodules over different coalgebras".into()));
    }
    Ok((&lhs - &rhs).kernel())
}

/// Dimensions of `(X⊗_R M)□_C V` and `X⊗_R(M□_C V)`, with bijectivity of the
/// canonical map between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommuteCheck {
    pub left_dim: usize,
    pub right_dim: usize,
    pub bijective: bool,
}

pub fn tensor_cotensor_commute_check(
    x: &RightModule,
    m: &ModuleComodule,
    v: &LeftComodule,
    c: &Coalgebra,
) -> Result<CommuteCheck, RepError> {
    if !c.is_cosemisimple() {
        return Err(RepError::Shape("coalgebra is not cosemisimple, so V need not be injective".into()));
    }
    let xm = relative_tensor(x, &m.module)?;
    let xm_coaction =
        RightComodule { dim: x.dim * m.module.dim, coaction: Matrix::identity(x.dim).kron(&m.comodule.coaction) }
            .descend(&xm, c.dim())?;
    let lhs = cotensor(&xm_coaction, v)?;
    let mv = cotensor(&m.comodule, v)?;
    let mv_module = LeftModule {
        dim: mv.dim(),
        action: m
            .module
            .action
            .iter()
            .map(|a| mv.restrict(&a.kron(&Matrix::identity(v.dim))))
            .collect::<Result<_, _>>()?,
    };
    let rhs = relative_tensor(x, &mv_module)?;
    // x⊗ζ ↦ Σ [x⊗m_i]⊗v_i
    let lift = Matrix::identity(x.dim).kron(&mv.inclusion());
    let to_lhs = &xm.projection.kron(&Matrix::identity(v.dim)) * &lift;
    let on_quotient = rhs.factor(&to_lhs).map_err(RepError::from)?;
    let map = &lhs.coordinate_matrix() * &on_quotient;
    for col in on_quotient.columns() {
        if !lhs.contains(&col) {
            return Err(RepError::NotBijective("canonical map leaves the cotensor product".into()));
        }
    }
    let bijective = map.is_square() && map.rank() == map.rows();
    Ok(CommuteCheck { left_dim: lhs.dim(), right_dim: rhs.dim(), bijective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn m2() -> Algebra {
        // E_pq at index 2p+q.
        Algebra::from_table(
            (0..4).map(|i| format!("E{}{}", i / 2, i % 2)).collect(),
            |i, j| {
                let (p, q, r, s) = (i / 2, i % 2, j / 2, j % 2);
                if q == r {
                    unit_vector(4, 2 * p + s)
                } else {
                    vec![int(0); 4]
                }
            },
            vec![int(1), int(0), int(0), int(1)],
        )
        .unwrap()
    }

    #[test]
    fn matrix_algebra_invariants_and_quotient() {
        let a = m2();
        let x = Bimodule::regular(&a);
        assert!(x.validate(&a).passed());
        let inv = x.invariants(&Subspace::full(4));
        assert_eq!(inv, Subspace::span(4, vec![vec![int(1), int(0), int(0), int(1)]]));
        assert_eq!(x.commutator_quotient(&Subspace::full(4)).dim(), 1);
        let scalars = Subspace::span(4, vec![a.unit().clone()]);
        assert_eq!(x.invariants(&scalars), Subspace::full(4));
    }

    #[test]
    fn relative_tensor_over_ground_field() {
        let q = Algebra::ground();
        let x = RightModule { dim: 2, action: vec![Matrix::identity(2)] };
        let y = LeftModule { dim: 3, action: vec![Matrix::identity(3)] };
        assert!(x.validate(&q).passed() && y.validate(&q).passed());
        assert_eq!(relative_tensor(&x, &y).unwrap().dim(), 6);
    }

    #[test]
    fn cotensor_with_regular_comodule_recovers_m() {
        let c = Coalgebra::new(
            vec!["a".into(), "b".into()],
            {
                let mut m = Matrix::zeros(4, 2);
                m.set(0, 0, int(1));
                m.set(3, 1, int(1));
                m
            },
            vec![int(1), int(1)],
        )
        .unwrap();
        let m = RightComodule::regular(&c);
        let v = LeftComodule::regular(&c);
        let k = cotensor(&m, &v).unwrap();
        assert_eq!(k.dim(), 2);
        assert_eq!(k, m.coaction.image());
        let triv = RightComodule::trivial(3, &[int(1), int(0)]);
        assert!(triv.validate(&c).passed());
        assert!(triv.coinvariants(&[int(1), int(0)]).is_full());
    }
}
