//! Tor over R_H via the two-sided bar complex, and the C_H-coaction on it.

use hopfhomology::constructions::{dual_group_algebra, truncated_polynomial, FiniteGroup};
use hopfhomology::homology::tor;
use hopfhomology::linalg::int;
use hopfhomology::rep::{LeftModule, RightModule};

fn main() {
    let a = truncated_polynomial(2);
    let chi = [int(1), int(0)];
    let t = tor(&a, &RightModule::one_dimensional(&chi), &LeftModule::one_dimensional(&chi), 3).expect("Tor");
    println!("Tor^{{Q[x]/(x²)}}(Q, Q) = {:?}", t.dims());

    let h = dual_group_algebra(&FiniteGroup::symmetric3());
    let r = h.cocommutative_subalgebra().expect("R_H");
    let eps: Vec<_> = r.space().basis_vectors().iter().map(|y| h.epsilon(y)).collect();
    let t = tor(r.algebra(), &RightModule::one_dimensional(&eps), &LeftModule::one_dimensional(&eps), 3).expect("Tor");
    println!("Tor^{{R_H}}(K, K) for H = (QS3)* = {:?} (R_H semisimple)", t.dims());
}
