//! Exact rational linear algebra: echelon forms, kernels, quotients.

use hopfhomology::linalg::{frac, quotient_by, tensor_product, Matrix};
use hopfhomology::ops::vector_json;

fn main() {
    let m = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, -1]]);
    let (r, pivots) = m.rref();
    println!("rref {r:?} pivots {pivots:?}");

    let k = m.kernel();
    println!("kernel dim {} basis {}", k.dim(), vector_json(k.basis_vector(0)));

    let x = m.solve(&[frac(2, 1), frac(4, 1), frac(0, 1)]).expect("consistent");
    println!("one solution of m x = (2, 4, 0): {}", vector_json(&x));

    let q = quotient_by(&m.image());
    println!("Q^3 / im m has dim {}", q.dim());

    let half = Matrix::scalar(2, &frac(1, 2));
    println!("(1/2 I) ⊗ m is {}x{}", tensor_product(&half, &m).rows(), tensor_product(&half, &m).cols());
}
