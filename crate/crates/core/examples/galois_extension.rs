//! Q(√2)/Q as a Hopf-Galois extension: β, κ, the Ulbrich-Miyashita action,
//! ρ₀ and the crossed module identity.

use hopfhomology::constructions::galois_field_extension_sqrt;
use hopfhomology::galois::{beta_map, centrally_galois_check, classical_g_galois_check, GaloisStructure};
use hopfhomology::rep::HopfBimodule;

fn main() {
    let q = galois_field_extension_sqrt(2).expect("square-free");
    let e = &q.extension;

    let beta = beta_map(e).expect("β");
    println!(
        "β: {}x{} of rank {}, bijective {}",
        beta.summary.rows, beta.summary.cols, beta.summary.rank, beta.summary.bijective
    );

    let g = GaloisStructure::new(e).expect("Galois");
    println!("κ identities hold: {}", g.kappa_checks().passed());

    let m = HopfBimodule::regular(e);
    let um = g.um_action(&m).expect("UM action");
    println!("M_B has dim {}; UM action axioms {}", um.quotient.dim(), um.axioms.passed());

    let c = e.hopf().trace_coalgebra().expect("C_H");
    let sayd = g.sayd_check_degree0(&m, &c).expect("SAYD");
    println!("crossed module identity: {}", sayd.passed());

    let classical = classical_g_galois_check(&q.algebra, &q.group, &q.action).expect("G-Galois");
    println!("G-Galois certificate verified: {}", classical.certificate_verified);

    let central = centrally_galois_check(e).expect("central");
    println!("centrally Galois: {}", central.summary.centrally_galois);
}
