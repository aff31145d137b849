//! Parse an instance document, run its tasks and emit both report formats.

use hopfhomology::instance::parse_instance;
use hopfhomology::ops;
use hopfhomology::report::{emit, Format};

const INSTANCE: &str = r#"{
  "version": "hopfhomology/1",
  "scalar": "Q",
  "objects": [
    {"name": "H", "kind": "construction", "call": "dual_group_algebra(S3)"},
    {"name": "E", "kind": "construction", "call": "galois_field_extension_sqrt(2)"}
  ],
  "tasks": [
    {"op": "validate_hopf", "args": {"hopf": "H"}},
    {"op": "compute_R_H", "args": {"hopf": "H"}},
    {"op": "verify_theorem_te_iso", "truncation": 2, "args": {"extension": "E"}}
  ]
}"#;

fn main() {
    let inst = parse_instance(INSTANCE).expect("valid instance");
    let report = ops::run(&inst, "inline", None);
    print!("{}", emit(&report, Format::Human));
    let json = emit(&report, Format::Json);
    println!("JSON report: {} bytes, exit code {}", json.len(), report.exit_code());
}
