//! Hochschild and cyclic homology of small algebras.

use hopfhomology::constructions::{matrix_algebra, quadratic_algebra, truncated_polynomial};
use hopfhomology::homology::{cyclic_complex, Hochschild};
use hopfhomology::rep::Bimodule;

fn main() {
    let n = 3;
    for (name, a) in
        [("M2(Q)", matrix_algebra(2)), ("Q(√2)", quadratic_algebra(2)), ("Q[x]/(x²)", truncated_polynomial(2))]
    {
        let hh = Hochschild::new(&a, &Bimodule::regular(&a), n).expect("HH");
        let hc = cyclic_complex(&a, n).expect("HC");
        println!("{name:<10} HH {:?}  HC {:?}", hh.dims(), hc.dims());
    }
}
