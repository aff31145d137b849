//! A truncated Ore extension of Q(√2,√3) and its center slice.

use hopfhomology::constructions::{
    biquadratic_ore, matrix_inner_ore, ore_center_slice, verify_theorem_te_example, OreTruncated,
};

fn main() {
    let o = biquadratic_ore(4).expect("Ore datum");
    let t = OreTruncated::new(o.clone());
    println!("truncated dim {}, ρ_T multiplicative {}", t.dim(), t.coaction_multiplicative().passed);
    println!("T^coH agrees with the B-span of X^n: {}", t.coinvariants() == t.coinvariant_prediction());
    println!("center slice dim {}", ore_center_slice(&o).dim());

    let r = verify_theorem_te_example(&o).expect("biquadratic");
    println!("biquadratic: checks {}, centrally Galois {}", r.passed(), r.centrally_galois);

    let inner = verify_theorem_te_example(&matrix_inner_ore(4).expect("inner")).expect("inner");
    println!("M2 inner: centrally Galois {}", inner.centrally_galois);
}
