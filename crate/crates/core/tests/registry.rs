//! Every operation is reachable from an instance file, and every registered
//! op and construction call is exercised by the shipped instances.

use std::collections::BTreeSet;
use std::path::PathBuf;

use hopfhomology::instance::{parse_call, parse_instance_file, CallArg, CONSTRUCTIONS};
use hopfhomology::ops::{lookup_op, OPS};
use serde_json::Value;

/// Operations of the library modules, by the name a task or construction
/// stanza uses for them. Library entry points of the CLI itself (parsing,
/// running, emitting) are exercised by the CLI tests instead.
const MODULE_OPS: &[&str] = &[
    "rref",
    "kernel",
    "image",
    "solve",
    "tensor_product",
    "quotient_by",
    "intersect",
    "sum",
    "validate_hopf",
    "compute_R_H",
    "compute_C_H",
    "has_enough_cocommutative_elements",
    "is_semisimple",
    "is_cosemisimple",
    "dual_hopf",
    "is_involutive_antipode",
    "trace_maps",
    "coinvariants",
    "invariants",
    "commutator_quotient",
    "relative_tensor",
    "cotensor",
    "tensor_cotensor_commute_check",
    "beta_map",
    "kappa",
    "um_action",
    "rho0",
    "sayd_check_degree0",
    "adjoint_coaction_space",
    "lambda_iso",
    "classical_g_galois_check",
    "centrally_galois_check",
    "hochschild_complex",
    "homology",
    "induced_coaction_on_HH_B",
    "induced_um_action_on_HH_B",
    "lambda_operator",
    "verify_trivial_action",
    "coaction_on_HH_A",
    "tor",
    "tor_coaction_check",
    "edge_map_phi",
    "verify_theorem_te_iso",
    "verify_corollary_co_iso",
    "cyclic_complex",
    "verify_theorem_izo1",
    "verify_theorem_izo2",
    "verify_theorem_izo3",
    "group_algebra",
    "dual_group_algebra",
    "conjugacy_classes",
    "strongly_graded",
    "galois_field_extension_sqrt",
    "matrix_algebra",
    "matrix_inner_action",
    "ore_truncated",
    "ore_center_slice",
    "verify_theorem_te_example",
];

fn construction_names() -> BTreeSet<&'static str> {
    CONSTRUCTIONS.iter().map(|(sig, _)| sig.split('(').next().unwrap()).collect()
}

fn instance_files() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances");
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
}

fn collect_calls(arg: &CallArg, out: &mut BTreeSet<String>) {
    if let CallArg::Call(c) = arg {
        out.insert(c.name.clone());
        for a in &c.args {
            collect_calls(a, out);
        }
    }
}

#[test]
fn every_module_op_is_reachable() {
    let constructions = construction_names();
    for name in MODULE_OPS {
        assert!(lookup_op(name).is_some() || constructions.contains(name), "{name} is not reachable");
    }
}

#[test]
fn shipped_instances_exercise_every_op_and_construction() {
    let mut used_ops = BTreeSet::new();
    let mut used_calls = BTreeSet::new();
    for path in instance_files() {
        let inst = parse_instance_file(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        for t in &inst.tasks {
            used_ops.insert(t.op.clone());
        }
        let raw: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        for o in raw["objects"].as_array().into_iter().flatten() {
            if let Some(call) = o.get("call").and_then(Value::as_str) {
                collect_calls(&CallArg::Call(parse_call(call).unwrap()), &mut used_calls);
            }
        }
    }
    for op in OPS {
        assert!(used_ops.contains(op.name), "op {} has no task in instances/", op.name);
    }
    for name in construction_names() {
        assert!(used_calls.contains(name), "construction {name} is unused in instances/");
    }
}

#[test]
fn registry_arguments_are_documented() {
    for op in OPS {
        assert!(op.arg_names().count() > 0, "{} documents no arguments", op.name);
        assert!(!op.about.is_empty());
    }
}
