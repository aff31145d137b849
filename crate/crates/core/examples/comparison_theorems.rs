//! Comparisons of HH and HC of A and B for centrally Galois extensions,
//! and the λ-action on HH(B,M).

use hopfhomology::constructions::galois_field_extension_sqrt;
use hopfhomology::homology::{verify_theorem_izo1, verify_theorem_izo2, verify_theorem_izo3, verify_trivial_action};
use hopfhomology::rep::{HopfBimodule, LeftComodule};

fn main() {
    let e = galois_field_extension_sqrt(2).expect("square-free").extension;
    let m = HopfBimodule::regular(&e);
    let c = e.hopf().trace_coalgebra().expect("C_H");

    let lambda = verify_trivial_action(&e, &m, 3).expect("λ");
    println!("λ acts by ε(h)·id: {}", lambda.passed());

    let v = LeftComodule::regular(&c.coalgebra);
    let i1 = verify_theorem_izo1(&e, &m, &v, 2).expect("izo1");
    println!("HH(A,M)□V {:?} vs HH(B,M□V) {:?}", i1.lhs_dims(), i1.rhs_dims());

    let i2 = verify_theorem_izo2(&e, &m, 2).expect("izo2");
    println!("HH(A,M) {:?} vs Z⊗_Z' HH(B,M^coH) {:?}", i2.lhs_dims(), i2.rhs_dims());

    let i3 = verify_theorem_izo3(&e, 2).expect("izo3");
    println!("HC(A) {:?}, HC(A)^coH {:?}, HC(B) {:?}", i3.hc_a, i3.hc_a_coinvariants, i3.hc_b);
}
