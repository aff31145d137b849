//! Randomized checks of structural invariants on random elements.

use hopfhomology::constructions::{
    biquadratic_ore, dual_group_algebra, galois_field_extension_sqrt, group_algebra, matrix_algebra,
    product_field_swap, quadratic_algebra, truncated_polynomial, FiniteGroup, OreTruncated,
};
use hopfhomology::galois::{action_comodule_algebra, ComoduleAlgebra};
use hopfhomology::homology::Hochschild;
use hopfhomology::hopf::{Algebra, HopfAlgebra};
use hopfhomology::linalg::{format_rational, parse_rational, quotient_by, Rational, Subspace, Vector};
use hopfhomology::rep::Bimodule;
use num_bigint::BigInt;
use proptest::prelude::*;

fn hopf_suite() -> Vec<HopfAlgebra> {
    let gs = [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::klein(), FiniteGroup::symmetric3()];
    gs.iter().flat_map(|g| [group_algebra(g), dual_group_algebra(g)]).collect()
}

fn extensions() -> Vec<ComoduleAlgebra> {
    let (a, g, act) = product_field_swap();
    vec![
        galois_field_extension_sqrt(2).unwrap().extension,
        galois_field_extension_sqrt(-1).unwrap().extension,
        action_comodule_algebra(&a, &g, &act).unwrap(),
    ]
}

fn algebras() -> Vec<Algebra> {
    vec![matrix_algebra(2), quadratic_algebra(2), truncated_polynomial(2), truncated_polynomial(3)]
}

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(rational(), n)
}

/// An index into a suite together with two random elements of the chosen member.
fn pair_in(dims: Vec<usize>) -> impl Strategy<Value = (usize, Vector, Vector)> {
    (0..dims.len()).prop_flat_map(move |i| (Just(i), vector(dims[i]), vector(dims[i])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn comultiplication_and_counit_are_multiplicative((i, x, y) in pair_in(hopf_suite().iter().map(|h| h.dim()).collect())) {
        let h = &hopf_suite()[i];
        let hh = h.algebra().tensor(h.algebra());
        let xy = h.multiply(&x, &y);
        prop_assert_eq!(h.comult().apply(&xy), hh.multiply(&h.comult().apply(&x), &h.comult().apply(&y)));
        prop_assert_eq!(h.epsilon(&xy), h.epsilon(&x) * h.epsilon(&y));
    }

    #[test]
    fn antipode_is_anti_multiplicative((i, x, y) in pair_in(hopf_suite().iter().map(|h| h.dim()).collect())) {
        let h = &hopf_suite()[i];
        let s = h.antipode();
        prop_assert_eq!(s.apply(&h.multiply(&x, &y)), h.multiply(&s.apply(&y), &s.apply(&x)));
    }

    #[test]
    fn coaction_is_multiplicative((i, a, b) in pair_in(extensions().iter().map(|e| e.algebra().dim()).collect())) {
        let e = &extensions()[i];
        let ah = e.algebra().tensor(e.hopf().algebra());
        let rho = e.coaction();
        prop_assert_eq!(rho.apply(&e.algebra().multiply(&a, &b)), ah.multiply(&rho.apply(&a), &rho.apply(&b)));
    }

    #[test]
    fn coinvariants_form_a_subalgebra((i, a, b) in pair_in(extensions().iter().map(|e| e.algebra().dim()).collect())) {
        let e = &extensions()[i];
        let b_space = &e.coinvariants().space;
        let (x, y) = (b_space.reduce(&a), b_space.reduce(&b));
        // a - reduce(a) lies in B; the product of two such elements stays there
        let bx: Vector = a.iter().zip(&x).map(|(p, q)| p - q).collect();
        let by: Vector = b.iter().zip(&y).map(|(p, q)| p - q).collect();
        prop_assert!(b_space.contains(&e.algebra().multiply(&bx, &by)));
    }

    #[test]
    fn span_is_canonical(vs in prop::collection::vec(vector(4), 1..5), c in rational()) {
        let s = Subspace::span(4, vs.clone());
        let mut shuffled = vs.clone();
        shuffled.reverse();
        if !num_traits::Zero::is_zero(&c) {
            shuffled[0] = shuffled[0].iter().map(|x| x * &c).collect();
        }
        prop_assert_eq!(&Subspace::span(4, shuffled), &s);
        prop_assert_eq!(s.dim() + s.basis().kernel().dim(), s.basis().cols());
    }

    #[test]
    fn quotient_section_splits_projection(vs in prop::collection::vec(vector(5), 0..4), c in vector(5)) {
        let q = quotient_by(&Subspace::span(5, vs));
        let coords: Vector = c[..q.dim()].to_vec();
        prop_assert_eq!(q.project(&q.lift(&coords)), coords);
    }

    #[test]
    fn rationals_round_trip(x in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn ore_product_is_associative(a in vector(4), b in vector(4), c in vector(4), p in 0usize..2, q in 0usize..2) {
        let t = OreTruncated::new(biquadratic_ore(3).unwrap());
        let (x, y, z) = (t.monomial(&a, p), t.monomial(&b, q), t.monomial(&c, 1));
        let left = t.multiply(&t.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = t.multiply(&x, &t.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn hh0_is_the_commutator_quotient(i in 0usize..4) {
        let a = &algebras()[i];
        let hh = Hochschild::new(a, &Bimodule::regular(a), 1).unwrap();
        prop_assert_eq!(hh.dims()[0], a.dim() - a.commutator_subspace().dim());
    }

    #[test]
    fn homology_is_basis_independent(i in 0usize..4, shift in 1i64..4) {
        // conjugating the structure constants by an invertible triangular map
        // gives an isomorphic algebra with the same HH dimensions
        let a = &algebras()[i];
        let n = a.dim();
        let p = hopfhomology::Matrix::from_fn(n, n, |r, c| if r == c { Rational::from_integer(1.into()) } else if c == r + 1 { Rational::from_integer(shift.into()) } else { Rational::from_integer(0.into()) });
        let pinv = p.inverse().unwrap();
        let b = Algebra::from_table(
            a.labels().to_vec(),
            |x, y| pinv.apply(&a.multiply(&p.column(x), &p.column(y))),
            pinv.apply(a.unit()),
        ).unwrap();
        let d1 = Hochschild::new(a, &Bimodule::regular(a), 2).unwrap().dims();
        let d2 = Hochschild::new(&b, &Bimodule::regular(&b), 2).unwrap().dims();
        prop_assert_eq!(d1, d2);
    }
}
