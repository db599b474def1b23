mod common;

use std::path::PathBuf;
use std::process::Command;

use common::{c, circuit_oracle, gate_oracle, FRAC_1_SQRT_2};
use maqaoa_walk::cli::{parse_circuit, parse_document, run, Document};
use maqaoa_walk::ctqw::walk_unitary;
use maqaoa_walk::linalg::{phase_aligned_distance, Statevector, C64};
use maqaoa_walk::maqaoa::{run_schedule, schedule_unitary};
use maqaoa_walk::transpiler::{transpile, Gate};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).to_string_lossy().into_owned()
}

fn maqaoa(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("maqaoa").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

/// Parses `|bits⟩  re+imi` lines back into amplitudes.
fn amplitudes(text: &str) -> Vec<C64> {
    text.lines()
        .map(|line| {
            let value = line.split_whitespace().nth(1).unwrap();
            let body = value.strip_suffix('i').unwrap();
            let split = body.rfind(['+', '-']).filter(|&i| i > 0).unwrap();
            c(body[..split].parse().unwrap(), body[split..].parse().unwrap())
        })
        .collect()
}

fn temp_path(name: &str) -> String {
    let dir = std::env::temp_dir().join(format!("maqaoa-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn transpile_output_is_deterministic() {
    for format in ["json", "csv", "table"] {
        let a = maqaoa(&["transpile", &fixture("three_qubit.txt"), "--format", format]);
        let b = maqaoa(&["transpile", &fixture("three_qubit.txt"), "--format", format]);
        assert_eq!(a.0, 0);
        assert_eq!(a, b);
    }
}

#[test]
fn transpile_json_parses_back_to_the_same_schedule() {
    let (code, json, _) = maqaoa(&["transpile", &fixture("example_circuit.txt")]);
    assert_eq!(code, 0);
    let Document::Schedule(s) = parse_document(&json).unwrap() else { panic!("expected a schedule") };
    let circuit = parse_circuit(&std::fs::read_to_string(fixture("example_circuit.txt")).unwrap()).unwrap();
    assert_eq!(s, transpile(&circuit).unwrap());
    assert!(json.contains("\"format\": \"maqaoa-walk/1\""));
}

#[test]
fn transpile_writes_to_out_file() {
    let path = temp_path("example.csv");
    let (code, stdout, _) = maqaoa(&["transpile", &fixture("example_circuit.txt"), "--format", "csv", "--out", &path]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("half_layer,layer,key,angle\n"));
    assert!(csv.contains("beta,3,2-3,4.71238898038469"));
}

#[test]
fn empty_circuit_gives_one_zero_layer() {
    let (code, table, _) = maqaoa(&["transpile", &fixture("empty_circuit.txt"), "--format", "table"]);
    assert_eq!(code, 0);
    assert!(table.contains("U(γ1,C)     (0, 0)\nU(β1,B)     (0)\n"), "{table}");
    assert!(!table.contains("γ2"));
}

#[test]
fn control_equals_target_is_a_parse_error() {
    let (code, stdout, stderr) = maqaoa(&["transpile", &fixture("bad_control.txt")]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("control equals target, line 2"), "{stderr}");
}

#[test]
fn merge_phases_folds_gamma_runs() {
    let (_, plain, _) = maqaoa(&["transpile", &fixture("example_circuit.txt"), "--format", "table"]);
    let (_, merged, _) = maqaoa(&["transpile", &fixture("example_circuit.txt"), "--format", "table", "--merge-phases"]);
    // γ2 and γ3 sit on either side of the zero β2 and fold together.
    assert!(merged.contains("U(γ2,C)     (π, 3π/4, π/2, π/4)\nU(β2,B)     (0, 0, 0, 3π/2)\n"), "{merged}");
    assert!(!merged.contains("γ4") && plain.contains("γ4"));
    let (_, padded, _) =
        maqaoa(&["transpile", &fixture("example_circuit.txt"), "--format", "table", "--packing", "pad-only"]);
    // Balanced packing only saves layers on back-to-back H gates.
    assert_eq!(padded, plain);
}

#[test]
fn simulate_example_schedule_from_plus() {
    let (code, out, _) = maqaoa(&["simulate", "--schedule", &fixture("example_schedule.json")]);
    assert_eq!(code, 0);
    let s = FRAC_1_SQRT_2;
    let expected = [c(s, 0.0), C64::from_polar(s, std::f64::consts::FRAC_PI_4), c(0.0, 0.0), c(0.0, 0.0)];
    for (a, e) in amplitudes(&out).iter().zip(expected) {
        assert!((a - e).norm() < 1e-11, "{out}");
    }
    assert!(out.starts_with("|00⟩  "));
}

#[test]
fn simulate_trace_lists_every_half_layer() {
    let (code, out, _) = maqaoa(&["simulate", "--circuit", &fixture("example_circuit.txt"), "--trace"]);
    assert_eq!(code, 0);
    for label in ["initial:", "after U(γ1,C):", "after U(β4,B):", "final:"] {
        assert!(out.contains(label), "missing {label}");
    }
    assert_eq!(out.matches("after ").count(), 8);
}

#[test]
fn simulate_single_gate_examples() {
    let (_, out, _) = maqaoa(&["simulate", "--circuit", &fixture("t_only.txt"), "--init", "basis:0"]);
    let amps = amplitudes(&out);
    assert!((amps[0].norm() - 1.0).abs() < 1e-12 && amps[1].norm() < 1e-12);

    let (_, out, _) = maqaoa(&["simulate", "--circuit", &fixture("h_only.txt"), "--init", "basis:0"]);
    let got = Statevector::new(amplitudes(&out)).unwrap();
    let expected = Statevector::new(vec![c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)]).unwrap();
    assert!(got.phase_aligned_distance(&expected) < 1e-11);
}

#[test]
fn simulate_rejects_bad_init_and_inputs() {
    let circuit = fixture("example_circuit.txt");
    assert_eq!(maqaoa(&["simulate", "--circuit", &circuit, "--init", "minus"]).0, 2);
    let (code, _, err) = maqaoa(&["simulate", "--circuit", &circuit, "--init", "basis:4"]);
    assert_eq!(code, 2);
    assert!(err.contains("basis index 4"), "{err}");
    assert_eq!(maqaoa(&["simulate"]).0, 2);
    let schedule = fixture("example_schedule.json");
    assert_eq!(maqaoa(&["simulate", "--circuit", &circuit, "--schedule", &schedule]).0, 2);
}

#[test]
fn transpiled_fixtures_agree_with_direct_simulation() {
    for name in ["example_circuit.txt", "three_qubit.txt", "t_only.txt", "h_only.txt", "empty_circuit.txt"] {
        let circuit = parse_circuit(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap();
        let n = circuit.num_qubits();
        let reference = circuit_oracle(&circuit);
        let psi = Statevector::plus(n).unwrap();
        let direct: Vec<C64> =
            (0..1 << n).map(|r| (0..1 << n).map(|col| reference[(r, col)] * psi.amplitudes()[col]).sum()).collect();
        let direct = Statevector::new(direct).unwrap();
        let run = run_schedule(&transpile(&circuit).unwrap(), &psi).unwrap();
        assert!(run.final_state.phase_aligned_distance(&direct) <= 1e-9, "{name}");

        let (code, out, _) = maqaoa(&["simulate", "--circuit", &fixture(name)]);
        assert_eq!(code, 0);
        let printed = Statevector::new_with(
            amplitudes(&out),
            &maqaoa_walk::tolerance::Tolerances { norm: 1e-9, ..Default::default() },
        )
        .unwrap();
        assert!(printed.phase_aligned_distance(&direct) <= 1e-9, "{name}");
    }
}

#[test]
fn gadget_fixtures_reproduce_their_gates() {
    for (name, gate) in [
        ("gadget_h.json", Gate::H(1)),
        ("gadget_t.json", Gate::T(2)),
        ("gadget_cx.json", Gate::Cx { control: 1, target: 2 }),
    ] {
        let Document::DynamicGraph(dg) = parse_document(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
        else {
            panic!("{name} is not a dynamic graph")
        };
        let u = walk_unitary(&dg).unwrap();
        assert!(phase_aligned_distance(u.matrix(), &gate_oracle(gate, 2)).unwrap() <= 1e-10, "{name}");

        for z in 0..4 {
            let init = format!("basis:{z}");
            let (code, out, _) = maqaoa(&["walk", &fixture(name), "--init", &init]);
            assert_eq!(code, 0);
            let column: Vec<C64> = (0..4).map(|r| u.matrix()[(r, z)]).collect();
            for (a, e) in amplitudes(&out).iter().zip(column) {
                assert!((a - e).norm() < 1e-11, "{name} {init}");
            }
        }
    }
}

#[test]
fn walk_edge_cases() {
    let (code, out, _) = maqaoa(&["walk", &fixture("empty_walk.json"), "--init", "basis:1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "|0⟩  0+0i\n|1⟩  1+0i\n");

    let (code, _, err) = maqaoa(&["walk", &fixture("zero_graph_walk.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("zero adjacency"), "{err}");

    // Walks are not limited to the restricted class.
    let (code, out, _) = maqaoa(&["walk", &fixture("non_hypercube_walk.json"), "--trace"]);
    assert_eq!(code, 0);
    assert!(out.contains("after G1"));
}

#[test]
fn verify_reports_and_exits() {
    let (code, out, _) = maqaoa(&["verify", &fixture("three_qubit.txt")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("result: PASS"), "{out}");
    assert!(out.contains("layers:"));

    let (code, out, _) = maqaoa(&["verify", &fixture("example_circuit.txt"), "--json"]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["pass"], true);
    assert_eq!(report["tolerance"], 1e-9);

    // Rounding keeps the distance above zero, so a zero tolerance fails.
    let (code, out, _) = maqaoa(&["verify", &fixture("example_circuit.txt"), "--tol", "0"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("result: FAIL"));
}

#[test]
fn convert_round_trips_and_rejects_unrestricted_graphs() {
    let dg_path = temp_path("example_dg.json");
    assert_eq!(maqaoa(&["convert", &fixture("example_schedule.json"), "--out", &dg_path]).0, 0);
    let (code, back, _) = maqaoa(&["convert", &dg_path]);
    assert_eq!(code, 0);
    let Document::Schedule(s) = parse_document(&back).unwrap() else { panic!("expected a schedule") };
    let Document::Schedule(original) =
        parse_document(&std::fs::read_to_string(fixture("example_schedule.json")).unwrap()).unwrap()
    else {
        panic!("expected a schedule")
    };
    let d = phase_aligned_distance(schedule_unitary(&s).matrix(), schedule_unitary(&original).matrix()).unwrap();
    assert!(d <= 1e-10);

    let (code, _, err) = maqaoa(&["convert", &fixture("non_hypercube_walk.json")]);
    assert_eq!(code, 2);
    assert!(err.contains("(0, 3)"), "{err}");
}

#[test]
fn gadget_subcommand_matches_fixtures() {
    let (code, out, _) = maqaoa(&["gadget", "cx", "1", "2", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, std::fs::read_to_string(fixture("gadget_cx.json")).unwrap());
    assert_eq!(maqaoa(&["gadget", "h", "1", "2", "--n", "2"]).0, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_maqaoa");
    let ok = Command::new(bin).args(["verify", &fixture("example_circuit.txt")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["transpile", &fixture("bad_control.txt")]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("control equals target, line 2"));
    let usage = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
