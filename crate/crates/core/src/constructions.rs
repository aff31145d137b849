//! Builders for the standard examples: finite groups, group algebras and
//! their duals, graded algebras, quadratic and biquadratic number fields as
//! ℚ-algebras, matrix algebras with inner actions, and truncated Ore
//! extensions `A[X, σ, δ]`.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::galois::{action_comodule_algebra, beta_map, BetaSummary, ComoduleAlgebra, GaloisError, GaloisStructure};
use crate::hopf::{pairs, Algebra, AxiomCheck, Coalgebra, HopfAlgebra, HopfError};
use crate::linalg::{
    add_scaled, format_rational, int, is_zero_vector, unit_vector, zero_vector, Matrix, Rational, Subspace, Vector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid group: {0}")]
    Group(String),
    #[error("not strongly graded: A_g A_h != A_gh at g = {g}, h = {h}")]
    NotStronglyGraded { g: usize, h: usize },
    #[error("grading is not multiplicative at basis pair ({0}, {1})")]
    NotGraded(usize, usize),
    #[error("{0} is not square-free or is 0 or 1")]
    NotSquareFree(i64),
    #[error("element is not invertible or has no scalar power of the given order")]
    BadInnerElement,
    #[error("Ore data: {axiom} fails at {tuple:?}")]
    Ore { axiom: String, tuple: Vec<usize> },
    #[error("product leaves the retained degrees (degree {degree} > {max})")]
    DegreeOverflow { degree: usize, max: usize },
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Galois(#[from] GaloisError),
}

/// Finite group by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, ConstructionError> {
        let n = labels.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(ConstructionError::Group("table shape".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| ConstructionError::Group("no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or_else(|| ConstructionError::Group(format!("{} has no inverse", labels[x])))?;
            inverse.push(y);
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        return Err(ConstructionError::Group(format!("not associative at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { labels, table, inverse, identity })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("g^{i}") }).collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::new(labels, table).expect("cyclic group")
    }

    pub fn klein() -> Self {
        Self::product(&Self::cyclic(2), &Self::cyclic(2))
    }

    /// Permutations of `{1, 2, 3}` in lexicographic order of their images.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let labels = perms.iter().map(|p| format!("[{}{}{}]", p[0] + 1, p[1] + 1, p[2] + 1)).collect();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let table = perms.iter().map(|s| perms.iter().map(|t| index([s[t[0]], s[t[1]], s[t[2]]])).collect()).collect();
        Self::new(labels, table).expect("S3")
    }

    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (m, n) = (g.order(), h.order());
        let mut labels = Vec::with_capacity(m * n);
        for a in &g.labels {
            for b in &h.labels {
                labels.push(format!("({a},{b})"));
            }
        }
        let table =
            (0..m * n).map(|x| (0..m * n).map(|y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n)).collect()).collect();
        Self::new(labels, table).expect("direct product")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|x| (0..self.order()).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| self.mul(self.mul(g, x), self.inv(g))).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }
}

/// `𝕂G` with `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup) -> HopfAlgebra {
    let n = g.order();
    let labels = g.labels().to_vec();
    let algebra = Algebra::from_table(labels.clone(), |x, y| unit_vector(n, g.mul(x, y)), unit_vector(n, g.identity()))
        .expect("group algebra");
    let mut comult = Matrix::zeros(n * n, n);
    for x in 0..n {
        comult.set(x * n + x, x, Rational::one());
    }
    let coalgebra = Coalgebra::new(labels, comult, vec![Rational::one(); n]).expect("group coalgebra");
    let antipode = Matrix::from_fn(n, n, |i, j| if i == g.inv(j) { Rational::one() } else { Rational::zero() });
    HopfAlgebra::new(algebra, coalgebra, antipode).expect("group Hopf algebra")
}

/// `(𝕂G)*` on the dual basis `p_x`: `p_x p_y = δ_{x,y} p_x`,
/// `Δ(p_x) = Σ_g p_{xg⁻¹}⊗p_g`, `ε(p_x) = δ_{x,1}`, `S(p_x) = p_{x⁻¹}`.
pub fn dual_group_algebra(g: &FiniteGroup) -> HopfAlgebra {
    let n = g.order();
    let labels: Vec<String> = g.labels().iter().map(|l| format!("p_{l}")).collect();
    let algebra = Algebra::from_table(
        labels.clone(),
        |x, y| if x == y { unit_vector(n, x) } else { zero_vector(n) },
        vec![Rational::one(); n],
    )
    .expect("dual group algebra");
    let mut comult = Matrix::zeros(n * n, n);
    for x in 0..n {
        for y in 0..n {
            comult.set(g.mul(x, g.inv(y)) * n + y, x, Rational::one());
        }
    }
    let coalgebra = Coalgebra::new(labels, comult, unit_vector(n, g.identity())).expect("dual group coalgebra");
    let antipode = Matrix::from_fn(n, n, |i, j| if i == g.inv(j) { Rational::one() } else { Rational::zero() });
    HopfAlgebra::new(algebra, coalgebra, antipode).expect("dual group Hopf algebra")
}

/// Class sums `p_σ = Σ_{x∈σ} p_x` in `(𝕂G)*`.
pub fn class_idempotents(g: &FiniteGroup) -> Vec<Vector> {
    let n = g.order();
    g.conjugacy_classes()
        .iter()
        .map(|class| {
            let mut v = zero_vector(n);
            for &x in class {
                v[x] = Rational::one();
            }
            v
        })
        .collect()
}

/// Class sums `e_σ = Σ_{x∈σ} x` in `𝕂G`; their classes span `C_{𝕂G}`.
pub fn class_sums(g: &FiniteGroup) -> Vec<Vector> {
    class_idempotents(g)
}

/// Algebra with a basis of homogeneous elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub algebra: Algebra,
    pub group: FiniteGroup,
    /// Degree of each basis vector.
    pub degrees: Vec<usize>,
}

impl GradedAlgebra {
    pub fn new(algebra: Algebra, group: FiniteGroup, degrees: Vec<usize>) -> Result<Self, ConstructionError> {
        if degrees.len() != algebra.dim() || degrees.iter().any(|&d| d >= group.order()) {
            return Err(ConstructionError::Group("degree list".into()));
        }
        let g = GradedAlgebra { algebra, group, degrees };
        for t in pairs(g.algebra.dim()) {
            let target = g.group.mul(g.degrees[t[0]], g.degrees[t[1]]);
            if g.algebra.basis_product(t[0], t[1]).iter().any(|(k, _)| g.degrees[*k] != target) {
                return Err(ConstructionError::NotGraded(t[0], t[1]));
            }
        }
        Ok(g)
    }

    pub fn component(&self, x: usize) -> Subspace {
        let n = self.algebra.dim();
        Subspace::span(n, (0..n).filter(|&i| self.degrees[i] == x).map(|i| unit_vector(n, i)))
    }

    /// First pair `(g, h)` with `A_g A_h ≠ A_{gh}`.
    pub fn strong_failure(&self) -> Option<(usize, usize)> {
        let k = self.group.order();
        for x in 0..k {
            for y in 0..k {
                let ax = self.component(x).basis_vectors();
                let ay = self.component(y).basis_vectors();
                let mut prods = Vec::new();
                for u in &ax {
                    for v in &ay {
                        prods.push(self.algebra.multiply(u, v));
                    }
                }
                if Subspace::span(self.algebra.dim(), prods) != self.component(self.group.mul(x, y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// `ρ(a_g) = a_g⊗g` over `𝕂G`.
    pub fn comodule_algebra(&self) -> Result<ComoduleAlgebra, ConstructionError> {
        let n = self.algebra.dim();
        let k = self.group.order();
        let mut rho = Matrix::zeros(n * k, n);
        for i in 0..n {
            rho.set(i * k + self.degrees[i], i, Rational::one());
        }
        Ok(ComoduleAlgebra::new(self.algebra.clone(), group_algebra(&self.group), rho)?)
    }
}

/// Graded comodule algebra, rejected unless strongly graded.
pub fn strongly_graded(
    a: &Algebra,
    degrees: Vec<usize>,
    g: &FiniteGroup,
) -> Result<ComoduleAlgebra, ConstructionError> {
    let graded = GradedAlgebra::new(a.clone(), g.clone(), degrees)?;
    if let Some((x, y)) = graded.strong_failure() {
        return Err(ConstructionError::NotStronglyGraded { g: x, h: y });
    }
    graded.comodule_algebra()
}

/// `ℚ[x]/(x^n)`.
pub fn truncated_polynomial(n: usize) -> Algebra {
    let labels = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("x^{i}") }).collect();
    Algebra::from_table(
        labels,
        |i, j| if i + j < n { unit_vector(n, i + j) } else { zero_vector(n) },
        unit_vector(n, 0),
    )
    .expect("truncated polynomial algebra")
}

/// `M_n(ℚ)` with `E_pq` at index `p n + q`.
pub fn matrix_algebra(n: usize) -> Algebra {
    let d = n * n;
    let labels = (0..d).map(|i| format!("E{}{}", i / n + 1, i % n + 1)).collect();
    let mut unit = zero_vector(d);
    for p in 0..n {
        unit[p * n + p] = Rational::one();
    }
    Algebra::from_table(
        labels,
        |i, j| {
            let (p, q, r, s) = (i / n, i % n, j / n, j % n);
            if q == r {
                unit_vector(d, p * n + s)
            } else {
                zero_vector(d)
            }
        },
        unit,
    )
    .expect("matrix algebra")
}

/// Conjugation by powers of `u` on `M_n(ℚ)`, for the cyclic group of order `k`.
pub fn inner_action(n: usize, u: &Matrix, k: usize) -> Result<Vec<Matrix>, ConstructionError> {
    let inv = u.inverse().ok_or(ConstructionError::BadInnerElement)?;
    let mut power = Matrix::identity(n);
    for _ in 0..k {
        power = &power * u;
    }
    let scalar = power.get(0, 0).clone();
    if power != Matrix::scalar(n, &scalar) || scalar.is_zero() {
        return Err(ConstructionError::BadInnerElement);
    }
    let d = n * n;
    let to_matrix = |v: &[Rational]| Matrix::from_fn(n, n, |p, q| v[p * n + q].clone());
    let mut out = Vec::with_capacity(k);
    let (mut up, mut uinv) = (Matrix::identity(n), Matrix::identity(n));
    for _ in 0..k {
        let cols: Vec<Vector> = (0..d)
            .map(|i| {
                let c = &(&up * &to_matrix(&unit_vector(d, i))) * &uinv;
                (0..d).map(|j| c.get(j / n, j % n).clone()).collect()
            })
            .collect();
        out.push(Matrix::from_columns(d, &cols));
        up = &up * u;
        uinv = &inv * &uinv;
    }
    Ok(out)
}

/// Trial division up to `10⁴`.
pub fn is_square_free(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let m = d.unsigned_abs();
    let mut p = 2u64;
    while p <= 10_000 && p * p <= m {
        if m % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// `ℚ(√d) = ℚ[t]/(t² - d)` with the `ℤ/2` action `t ↦ -t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticField {
    pub d: i64,
    pub algebra: Algebra,
    pub group: FiniteGroup,
    pub action: Vec<Matrix>,
    pub extension: ComoduleAlgebra,
}

pub fn quadratic_algebra(d: i64) -> Algebra {
    let labels = vec!["1".to_string(), format!("sqrt({d})")];
    Algebra::from_table(
        labels,
        |i, j| match (i, j) {
            (1, 1) => vec![int(d), int(0)],
            _ => unit_vector(2, i + j),
        },
        unit_vector(2, 0),
    )
    .expect("quadratic algebra")
}

pub fn galois_field_extension_sqrt(d: i64) -> Result<QuadraticField, ConstructionError> {
    if d == 1 || !is_square_free(d) {
        return Err(ConstructionError::NotSquareFree(d));
    }
    let algebra = quadratic_algebra(d);
    let group = FiniteGroup::cyclic(2);
    let conj = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
    let action = vec![Matrix::identity(2), conj];
    let extension = action_comodule_algebra(&algebra, &group, &action)?;
    Ok(QuadraticField { d, algebra, group, action, extension })
}

/// `ℚ(√p, √q)` on the basis `1, √p, √q, √(pq)`.
pub fn biquadratic_algebra(p: i64, q: i64) -> Algebra {
    let labels = vec!["1".into(), format!("sqrt({p})"), format!("sqrt({q})"), format!("sqrt({p})sqrt({q})")];
    // basis index as a bit mask: bit 0 for √p, bit 1 for √q
    Algebra::from_table(
        labels,
        |i, j| {
            let k = i ^ j;
            let mut c = 1;
            if i & j & 1 == 1 {
                c *= p;
            }
            if i & j & 2 == 2 {
                c *= q;
            }
            let mut v = zero_vector(4);
            v[k] = int(c);
            v
        },
        unit_vector(4, 0),
    )
    .expect("biquadratic algebra")
}

/// Automorphism of `ℚ(√p, √q)` flipping the chosen square roots.
pub fn biquadratic_automorphism(flip_p: bool, flip_q: bool) -> Matrix {
    let sign = |i: usize| {
        let mut s = 1;
        if flip_p && i & 1 == 1 {
            s = -s;
        }
        if flip_q && i & 2 == 2 {
            s = -s;
        }
        int(s)
    };
    Matrix::from_fn(4, 4, |i, j| if i == j { sign(i) } else { Rational::zero() })
}

/// `ℚ×ℚ` on its idempotents with the swap action of `ℤ/2`.
pub fn product_field_swap() -> (Algebra, FiniteGroup, Vec<Matrix>) {
    let a = Algebra::from_table(
        vec!["e1".into(), "e2".into()],
        |i, j| if i == j { unit_vector(2, i) } else { zero_vector(2) },
        vec![int(1), int(1)],
    )
    .expect("Q x Q");
    let swap = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    (a, FiniteGroup::cyclic(2), vec![Matrix::identity(2), swap])
}

/// `M_2(ℚ)⊗ℚ(√d)` with `ℤ/2` acting on the second factor.
pub fn matrix_over_quadratic(d: i64) -> (Algebra, FiniteGroup, Vec<Matrix>) {
    let a = matrix_algebra(2).tensor(&quadratic_algebra(d));
    let conj = Matrix::identity(4).kron(&Matrix::from_i64(&[&[1, 0], &[0, -1]]));
    (a, FiniteGroup::cyclic(2), vec![Matrix::identity(8), conj])
}

/// Linear maps `σ`, `δ` on a comodule algebra `A`, truncated at `X`-degree `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OreData {
    pub base: ComoduleAlgebra,
    pub sigma: Matrix,
    pub delta: Matrix,
    pub max_degree: usize,
}

impl OreData {
    pub fn new(
        base: ComoduleAlgebra,
        sigma: Matrix,
        delta: Matrix,
        max_degree: usize,
    ) -> Result<Self, ConstructionError> {
        let o = OreData { base, sigma, delta, max_degree };
        if let Some(c) = o.validate().into_iter().find(|c| !c.passed) {
            return Err(ConstructionError::Ore { axiom: c.axiom, tuple: c.counterexample.unwrap_or_default() });
        }
        Ok(o)
    }

    pub fn validate(&self) -> Vec<AxiomCheck> {
        let a = self.base.algebra();
        let n = a.dim();
        let k = self.base.hopf().dim();
        let (s, d) = (&self.sigma, &self.delta);
        let shape = s.rows() == n && s.cols() == n && d.rows() == n && d.cols() == n;
        let mut out = vec![AxiomCheck::run("shape", std::iter::once(vec![]), |_| shape)];
        if !shape {
            return out;
        }
        out.push(AxiomCheck::run("sigma is an automorphism", pairs(n), |t| {
            s.is_invertible()
                && s.apply(a.unit()) == *a.unit()
                && s.apply(&a.multiply(&a.basis(t[0]), &a.basis(t[1]))) == a.multiply(&s.column(t[0]), &s.column(t[1]))
        }));
        out.push(AxiomCheck::run("delta is a sigma-derivation", pairs(n), |t| {
            let (x, y) = (a.basis(t[0]), a.basis(t[1]));
            let mut rhs = a.multiply(&s.apply(&x), &d.apply(&y));
            add_scaled(&mut rhs, &Rational::one(), &a.multiply(&d.apply(&x), &y));
            d.apply(&a.multiply(&x, &y)) == rhs
        }));
        let rho = self.base.coaction();
        let idk = Matrix::identity(k);
        out.push(AxiomCheck::run("sigma is colinear", std::iter::once(vec![]), |_| rho * s == &s.kron(&idk) * rho));
        out.push(AxiomCheck::run("delta is colinear", std::iter::once(vec![]), |_| rho * d == &d.kron(&idk) * rho));
        out
    }

    /// `f_k^{(m)}` for `0 ≤ k ≤ m ≤ D`, from `f^{(m+1)}_k = σ f^{(m)}_{k-1} + δ f^{(m)}_k`.
    pub fn reorder_coefficients(&self) -> Vec<Vec<Matrix>> {
        let n = self.base.algebra().dim();
        let mut all: Vec<Vec<Matrix>> = vec![vec![Matrix::identity(n)]];
        for m in 0..self.max_degree {
            let prev = &all[m];
            let next = (0..=m + 1)
                .map(|k| {
                    let mut f = Matrix::zeros(n, n);
                    if k >= 1 {
                        f = &f + &(&self.sigma * &prev[k - 1]);
                    }
                    if k <= m {
                        f = &f + &(&self.delta * &prev[k]);
                    }
                    f
                })
                .collect();
            all.push(next);
        }
        all
    }
}

/// `⊕_{m ≤ D} A·X^m` with basis `e_i X^m` at index `m·dim A + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OreTruncated {
    pub data: OreData,
    f: Vec<Vec<Matrix>>,
}

impl OreTruncated {
    pub fn new(data: OreData) -> Self {
        let f = data.reorder_coefficients();
        OreTruncated { data, f }
    }

    pub fn base_dim(&self) -> usize {
        self.data.base.algebra().dim()
    }

    pub fn dim(&self) -> usize {
        (self.data.max_degree + 1) * self.base_dim()
    }

    pub fn f(&self, m: usize, k: usize) -> &Matrix {
        &self.f[m][k]
    }

    /// Element `a X^m`.
    pub fn monomial(&self, a: &[Rational], m: usize) -> Vector {
        let n = self.base_dim();
        let mut v = zero_vector(self.dim());
        v[m * n..(m + 1) * n].clone_from_slice(a);
        v
    }

    /// Exact product, refusing when a term would exceed degree `D`.
    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vector, ConstructionError> {
        let a = self.data.base.algebra();
        let n = self.base_dim();
        let max = self.data.max_degree;
        let mut out = zero_vector(self.dim());
        for p in 0..=max {
            let xp = &x[p * n..(p + 1) * n];
            if is_zero_vector(xp) {
                continue;
            }
            for q in 0..=max {
                let yq = &y[q * n..(q + 1) * n];
                if is_zero_vector(yq) {
                    continue;
                }
                // (x_p X^p)(y_q X^q) = Σ_k x_p f_k^{(p)}(y_q) X^{k+q}
                for k in 0..=p {
                    let term = a.multiply(xp, &self.f[p][k].apply(yq));
                    if is_zero_vector(&term) {
                        continue;
                    }
                    if k + q > max {
                        return Err(ConstructionError::DegreeOverflow { degree: k + q, max });
                    }
                    add_scaled(&mut out[(k + q) * n..(k + q + 1) * n], &Rational::one(), &term);
                }
            }
        }
        Ok(out)
    }

    /// `ρ_T(a X^m) = Σ a₀ X^m⊗a₁`.
    pub fn coaction(&self) -> Matrix {
        let n = self.base_dim();
        let k = self.data.base.hopf().dim();
        let rho = self.data.base.coaction();
        let mut out = Matrix::zeros(self.dim() * k, self.dim());
        for m in 0..=self.data.max_degree {
            for i in 0..n {
                for (r, v) in rho.column(i).iter().enumerate() {
                    if !v.is_zero() {
                        let (a0, a1) = (r / k, r % k);
                        out.set((m * n + a0) * k + a1, m * n + i, v.clone());
                    }
                }
            }
        }
        out
    }

    /// Checks `ρ_T(xy) = ρ_T(x)ρ_T(y)` on basis pairs whose product is retained.
    pub fn coaction_multiplicative(&self) -> AxiomCheck {
        let d = self.dim();
        let k = self.data.base.hopf().dim();
        let h = self.data.base.hopf().algebra();
        let rho = self.coaction();
        AxiomCheck::run("rho_T is multiplicative", pairs(d), |t| {
            let Ok(xy) = self.multiply(&unit_vector(d, t[0]), &unit_vector(d, t[1])) else {
                return true;
            };
            let lhs = rho.apply(&xy);
            let mut rhs = zero_vector(d * k);
            for (i, j, c1) in crate::galois::tensor_terms(&rho.column(t[0]), k) {
                for (p, q, c2) in crate::galois::tensor_terms(&rho.column(t[1]), k) {
                    let Ok(tp) = self.multiply(&unit_vector(d, i), &unit_vector(d, p)) else {
                        return false;
                    };
                    let hq = h.multiply(&h.basis(j), &h.basis(q));
                    add_scaled(&mut rhs, &(&c1 * &c2), &crate::linalg::tensor_vectors(&tp, &hq));
                }
            }
            lhs == rhs
        })
    }

    pub fn coinvariants(&self) -> Subspace {
        crate::rep::RightComodule { dim: self.dim(), coaction: self.coaction() }
            .coinvariants(self.data.base.hopf().unit())
    }

    /// `B`-span of `X^m` for `m ≤ D`.
    pub fn coinvariant_prediction(&self) -> Subspace {
        let b = self.data.base.coinvariants().space.basis_vectors();
        let mut v = Vec::new();
        for m in 0..=self.data.max_degree {
            for x in &b {
                v.push(self.monomial(x, m));
            }
        }
        Subspace::span(self.dim(), v)
    }

    /// Central elements of degree at most `m` from the linear conditions
    /// `Σ_{k≥i} a^k f_i^{(k)}(a) = a a^i` and `σ(a^i) + δ(a^{i+1}) = a^i`.
    pub fn center_solutions(&self, m: usize) -> Result<Subspace, ConstructionError> {
        if m > self.data.max_degree {
            return Err(ConstructionError::DegreeOverflow { degree: m, max: self.data.max_degree });
        }
        let a = self.data.base.algebra();
        let n = a.dim();
        let unknowns = (m + 1) * n;
        let mut eqs = Matrix::zeros(0, unknowns);
        for j in 0..n {
            let e = a.basis(j);
            for i in 0..=m {
                let mut block = Matrix::zeros(n, unknowns);
                for k in i..=m {
                    let r = a.right_mult(&self.f[k][i].apply(&e));
                    for row in 0..n {
                        for col in 0..n {
                            block.add_at(row, k * n + col, r.get(row, col));
                        }
                    }
                }
                let l = a.left_mult(&e);
                for row in 0..n {
                    for col in 0..n {
                        block.add_at(row, i * n + col, &-l.get(row, col).clone());
                    }
                }
                eqs = eqs.vstack(&block);
            }
        }
        // i = -1 .. m+1 with a^{-1} = a^{m+1} = 0
        for i in -1i64..=(m as i64 + 1) {
            let mut block = Matrix::zeros(n, unknowns);
            let place = |blk: &mut Matrix, idx: i64, mat: &Matrix, sign: i64| {
                if idx >= 0 && (idx as usize) <= m {
                    let off = idx as usize * n;
                    for row in 0..n {
                        for col in 0..n {
                            blk.add_at(row, off + col, &(mat.get(row, col) * int(sign)));
                        }
                    }
                }
            };
            place(&mut block, i, &self.data.sigma, 1);
            place(&mut block, i + 1, &self.data.delta, 1);
            place(&mut block, i, &Matrix::identity(n), -1);
            eqs = eqs.vstack(&block);
        }
        let sol = eqs.kernel();
        let embed = |v: Vector| {
            let mut w = zero_vector(self.dim());
            w[..unknowns].clone_from_slice(&v);
            w
        };
        Ok(Subspace::span(self.dim(), sol.basis_vectors().into_iter().map(embed)))
    }
}

/// `A^σ ∩ A^δ ∩ Z(A)`.
pub fn ore_center_slice(o: &OreData) -> Subspace {
    let a = o.base.algebra();
    let n = a.dim();
    let fixed = (&o.sigma - &Matrix::identity(n)).kernel();
    let constants = o.delta.kernel();
    let z = a.center();
    fixed.intersect(&constants).and_then(|s| s.intersect(&z)).expect("same ambient")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OreExampleReport {
    pub slice_dim: usize,
    pub slice_matches_degree0_solutions: bool,
    pub center_is_subcomodule: bool,
    pub slice_is_subcomodule: bool,
    pub slice_coinvariants_dim: usize,
    pub slice_coinvariants_match: bool,
    pub beta: Option<BetaSummary>,
    pub centrally_galois: bool,
    /// `(a'_i, a''_i)` pairs in `A` coordinates, one list per basis vector of `H`.
    pub certificates: Vec<Vec<(Vec<String>, Vec<String>)>>,
}

impl OreExampleReport {
    pub fn passed(&self) -> bool {
        self.slice_matches_degree0_solutions
            && self.center_is_subcomodule
            && self.slice_is_subcomodule
            && self.slice_coinvariants_match
    }
}

pub fn verify_theorem_te_example(o: &OreData) -> Result<OreExampleReport, ConstructionError> {
    let e = &o.base;
    let h = e.hopf();
    if !h.is_commutative() {
        return Err(GaloisError::Hypothesis("H is not commutative".into()).into());
    }
    let k = h.dim();
    let a = e.algebra();
    let slice = ore_center_slice(o);
    let t = OreTruncated::new(o.clone());
    let deg0 = t.center_solutions(0)?;
    let embed = Subspace::span(t.dim(), slice.basis_vectors().into_iter().map(|v| t.monomial(&v, 0)));
    let slice_matches_degree0_solutions = deg0 == embed;
    let is_sub = |s: &Subspace| (0..k).all(|j| s.is_invariant_under(&e.dual_action(&unit_vector(k, j))));
    let center = a.center();
    let center_is_subcomodule = is_sub(&center) && a.is_subalgebra(&center);
    let slice_is_subcomodule = is_sub(&slice) && a.is_subalgebra(&slice);
    let mut report = OreExampleReport {
        slice_dim: slice.dim(),
        slice_matches_degree0_solutions,
        center_is_subcomodule,
        slice_is_subcomodule,
        slice_coinvariants_dim: 0,
        slice_coinvariants_match: false,
        beta: None,
        centrally_galois: false,
        certificates: Vec::new(),
    };
    if !slice_is_subcomodule {
        return Ok(report);
    }
    let se = e.restrict(&slice, "z")?;
    let incl = slice.inclusion();
    let co = se.coinvariants().space.image_under(&incl);
    let expected = slice.intersect(&e.coinvariants().space).expect("same ambient");
    report.slice_coinvariants_dim = co.dim();
    report.slice_coinvariants_match = co == expected;
    let beta = beta_map(&se)?;
    report.beta = Some(beta.summary.clone());
    if beta.summary.bijective {
        let g = GaloisStructure::new(&se)?;
        let zd = se.algebra().dim();
        for hi in 0..k {
            let list = g
                .kappa_terms(&unit_vector(k, hi))
                .into_iter()
                .map(|(i, j, c)| {
                    let ap: Vec<String> =
                        incl.apply(&unit_vector(zd, i)).iter().map(|x| format_rational(&(x * &c))).collect();
                    let app: Vec<String> = incl.apply(&unit_vector(zd, j)).iter().map(format_rational).collect();
                    (ap, app)
                })
                .collect();
            report.certificates.push(list);
        }
        report.centrally_galois = true;
    }
    Ok(report)
}

/// `ℚ(√2,√3)[X, σ]` with `σ: √2 ↦ -√2` and `ℤ/2` coacting through `√3 ↦ -√3`.
pub fn biquadratic_ore(max_degree: usize) -> Result<OreData, ConstructionError> {
    let a = biquadratic_algebra(2, 3);
    let tau = biquadratic_automorphism(false, true);
    let base = action_comodule_algebra(&a, &FiniteGroup::cyclic(2), &[Matrix::identity(4), tau])?;
    OreData::new(base, biquadratic_automorphism(true, false), Matrix::zeros(4, 4), max_degree)
}

/// `M_2(ℚ)[X]` over the inner `ℤ/2` action of `diag(1, -1)`.
pub fn matrix_inner_ore(max_degree: usize) -> Result<OreData, ConstructionError> {
    let u = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
    let act = inner_action(2, &u, 2)?;
    let base = action_comodule_algebra(&matrix_algebra(2), &FiniteGroup::cyclic(2), &act)?;
    OreData::new(base, Matrix::identity(4), Matrix::zeros(4, 4), max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        assert_eq!(FiniteGroup::trivial().order(), 1);
        let s3 = FiniteGroup::symmetric3();
        assert!(!s3.is_abelian());
        let mut sizes: Vec<usize> = s3.conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(FiniteGroup::cyclic(4).conjugacy_classes().len(), 4);
        assert!(FiniteGroup::klein().is_abelian());
        assert!(FiniteGroup::new(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn square_free_and_fields() {
        assert!(is_square_free(2) && is_square_free(-1) && is_square_free(30));
        assert!(!is_square_free(12) && !is_square_free(0));
        assert!(matches!(galois_field_extension_sqrt(1), Err(ConstructionError::NotSquareFree(1))));
        assert!(galois_field_extension_sqrt(4).is_err());
        let f = galois_field_extension_sqrt(-1).unwrap();
        assert_eq!(f.extension.coinvariants().space.dim(), 1);
        assert!(biquadratic_algebra(2, 3).is_commutative());
    }

    #[test]
    fn matrix_algebra_and_inner_action() {
        let m2 = matrix_algebra(2);
        assert_eq!(m2.center().dim(), 1);
        let u = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let act = inner_action(2, &u, 2).unwrap();
        assert!(act[0].is_identity());
        assert_eq!(&act[1] * &act[1], Matrix::identity(4));
        assert!(inner_action(2, &Matrix::zeros(2, 2), 2).is_err());
        assert_eq!(matrix_algebra(1).dim(), 1);
    }

    #[test]
    fn grading_checks() {
        let g = FiniteGroup::cyclic(2);
        let dual_numbers = truncated_polynomial(2);
        let graded = GradedAlgebra::new(dual_numbers.clone(), g.clone(), vec![0, 1]).unwrap();
        assert_eq!(graded.strong_failure(), Some((1, 1)));
        assert!(matches!(
            strongly_graded(&dual_numbers, vec![0, 1], &g),
            Err(ConstructionError::NotStronglyGraded { g: 1, h: 1 })
        ));
        let z2 = group_algebra(&g);
        assert!(strongly_graded(z2.algebra(), vec![0, 1], &g).is_ok());
    }

    #[test]
    fn ore_instances() {
        let good = verify_theorem_te_example(&biquadratic_ore(2).unwrap()).unwrap();
        assert!(good.passed() && good.centrally_galois);
        assert_eq!(good.slice_dim, 2);
        let bad = verify_theorem_te_example(&matrix_inner_ore(2).unwrap()).unwrap();
        assert!(bad.passed() && !bad.centrally_galois);
        assert_eq!(bad.slice_dim, 1);
    }
}
