//! Group algebras and their duals: axioms, R_H, C_H, semisimplicity.

use hopfhomology::constructions::{class_idempotents, dual_group_algebra, group_algebra, FiniteGroup};
use hopfhomology::ops::vector_json;

fn main() {
    let s3 = FiniteGroup::symmetric3();
    for (name, h) in [("QS3", group_algebra(&s3)), ("(QS3)*", dual_group_algebra(&s3))] {
        let report = h.validate();
        let r = h.cocommutative_subalgebra().expect("R_H");
        let c = h.trace_coalgebra().expect("C_H");
        println!(
            "{name}: axioms {} | dim R_H {} | dim C_H {} | semisimple {} | cosemisimple {} | S² = id {} | R_H⁺H = H⁺ {}",
            report.passed(),
            r.dim(),
            c.dim(),
            h.is_semisimple(),
            h.is_cosemisimple(),
            h.antipode_squared_is_identity(),
            h.has_enough_cocommutative_elements().expect("R_H⁺H"),
        );
    }
    for p in class_idempotents(&s3) {
        println!("class idempotent of (QS3)*: {}", vector_json(&p));
    }
}
