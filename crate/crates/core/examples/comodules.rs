//! Modules, comodules, relative tensor products and cotensor products.

use hopfhomology::constructions::galois_field_extension_sqrt;
use hopfhomology::galois::adjoint_coaction_space;
use hopfhomology::rep::{cotensor, tensor_cotensor_commute_check, HopfBimodule, LeftComodule, RightModule};

fn main() {
    let e = galois_field_extension_sqrt(2).expect("square-free").extension;
    let h = e.hopf();
    let c = h.trace_coalgebra().expect("C_H");
    let m = HopfBimodule::regular(&e);

    let coinv = m.coaction.coinvariants(h.unit());
    println!("A^coH has dim {}", coinv.dim());

    let v = LeftComodule::regular(&c.coalgebra);
    let box_v = cotensor(&m.coaction.push_forward(&c.pi), &v).expect("cotensor");
    println!("A□_{{C_H}}C_H has dim {}", box_v.dim());

    // A⊗H as an R_H-module and C_H-comodule, against the trivial R_H-module
    let adj = adjoint_coaction_space(&e, &c).expect("adjoint space");
    let r = h.cocommutative_subalgebra().expect("R_H");
    let eps: Vec<_> = r.space().basis_vectors().iter().map(|y| h.epsilon(y)).collect();
    let object = hopfhomology::rep::ModuleComodule { module: adj.module, comodule: adj.comodule };
    let check = tensor_cotensor_commute_check(&RightModule::one_dimensional(&eps), &object, &v, &c.coalgebra)
        .expect("commutation");
    println!("(K⊗_R X)□V vs K⊗_R(X□V): {} vs {}, bijective {}", check.left_dim, check.right_dim, check.bijective);
}
