//! Build the H, T and CX walk gadgets on two qubits and compare each walk
//! unitary with the textbook gate.
//!
//! ```bash
//! cargo run --example gadget_walks
//! ```

use maqaoa_walk::ctqw::{gadget_cx, gadget_h, gadget_t, walk_unitary, DynamicGraph};
use maqaoa_walk::linalg::phase_aligned_distance;
use maqaoa_walk::transpiler::Gate;
use maqaoa_walk::verify::gate_matrix;

fn describe(dg: &DynamicGraph) {
    for (i, step) in dg.steps().iter().enumerate() {
        let loops: Vec<_> = step.graph.loops().keys().collect();
        let edges: Vec<_> = step.graph.edges().keys().collect();
        println!("  G{}: t = {:.6}, loops {:?}, edges {:?}", i + 1, step.time, loops, edges);
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 2;
    let cases = [
        (Gate::H(1), gadget_h(1, n)?),
        (Gate::T(2), gadget_t(2, n)?),
        (Gate::Cx { control: 1, target: 2 }, gadget_cx(1, 2, n)?),
    ];
    for (gate, dg) in &cases {
        println!("{gate}: {} graphs", dg.len());
        describe(dg);
        let d = phase_aligned_distance(walk_unitary(dg)?.matrix(), &gate_matrix(*gate, n))?;
        println!("  distance to gate up to phase: {d:.2e}");
    }
    Ok(())
}
