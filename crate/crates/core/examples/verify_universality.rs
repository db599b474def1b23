//! Transpile every circuit of up to three gates on two qubits and check it
//! against the product of gate matrices, tracking layer counts.
//!
//! ```bash
//! cargo run --release --example verify_universality
//! ```

use maqaoa_walk::maqaoa::schedule_unitary;
use maqaoa_walk::transpiler::{layer_count, transpile, GateCircuit};
use maqaoa_walk::verify::{check_equivalence, reference_gate_unitary};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 2;
    let gates = GateCircuit::all_gates(n);
    let mut circuits = vec![GateCircuit::new(n, vec![])?];
    let mut frontier = circuits.clone();
    for _ in 0..3 {
        let mut next = Vec::new();
        for c in &frontier {
            for &g in &gates {
                let mut longer = c.clone();
                longer.push(g)?;
                next.push(longer);
            }
        }
        circuits.extend(next.iter().cloned());
        frontier = next;
    }

    let mut worst = 0.0f64;
    let mut worst_ratio = 0.0f64;
    for c in &circuits {
        let s = transpile(c)?;
        let report = check_equivalence(schedule_unitary(&s).matrix(), reference_gate_unitary(c).matrix(), 1e-9, true)?;
        assert!(report.pass, "{c:?}: {report:?}");
        worst = worst.max(report.distance);
        let count = layer_count(c)?;
        worst_ratio = worst_ratio.max(count.pairs as f64 / count.bound as f64);
    }
    println!("{} circuits on {n} qubits verified", circuits.len());
    println!("worst distance up to global phase: {worst:.2e}");
    println!("largest layers / bound ratio: {worst_ratio:.3}");
    Ok(())
}
