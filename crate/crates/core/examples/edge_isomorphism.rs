//! The collapsed edge isomorphism and its invariants form on Q(√2)/Q.

use hopfhomology::constructions::galois_field_extension_sqrt;
use hopfhomology::galois::GaloisStructure;
use hopfhomology::homology::{edge_map_phi, verify_corollary_co_iso, verify_theorem_te_iso};
use hopfhomology::rep::{HopfBimodule, LeftComodule};

fn main() {
    let q = galois_field_extension_sqrt(2).expect("square-free");
    let e = &q.extension;
    let g = GaloisStructure::new(e).expect("Galois");
    let c = e.hopf().trace_coalgebra().expect("C_H");
    let m = HopfBimodule::regular(e);

    for (name, v) in
        [("K", LeftComodule::trivial(&c.pi.apply(e.hopf().unit()))), ("C_H", LeftComodule::regular(&c.coalgebra))]
    {
        let phi = edge_map_phi(&g, &m, &v, &c).expect("φ");
        let r = verify_theorem_te_iso(&g, &m, &v, 2).expect("edge isomorphism");
        println!(
            "V = {name}: φ bijective {}, {:?} vs {:?}, holds {}",
            phi.bijective,
            r.lhs_dims(),
            r.rhs_dims(),
            r.passed()
        );
    }

    let co = verify_corollary_co_iso(&g, &q.group, &m, 2).expect("invariants");
    println!("HH(A,A)^G {:?} vs p₁HH(B,A^G) {:?}", co.invariants_dims(), co.p1_dims());
}
