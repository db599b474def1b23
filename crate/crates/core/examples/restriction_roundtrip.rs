//! Turn a schedule into a dynamic graph and back, and show that a graph with a
//! two-bit edge falls outside the convertible class.
//!
//! ```bash
//! cargo run --example restriction_roundtrip
//! ```

use maqaoa_walk::cli::{dynamic_graph_to_json, render};
use maqaoa_walk::ctqw::{walk_unitary, DynamicGraph, WeightedGraph};
use maqaoa_walk::linalg::phase_aligned_distance;
use maqaoa_walk::maqaoa::schedule_unitary;
use maqaoa_walk::transpiler::{dynamic_graph_to_schedule, schedule_to_dynamic_graph, transpile, Gate, GateCircuit};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let circuit = GateCircuit::new(2, vec![Gate::H(1), Gate::T(2), Gate::Cx { control: 1, target: 2 }])?;
    let schedule = transpile(&circuit)?;

    let dg = schedule_to_dynamic_graph(&schedule)?;
    println!("{} walk steps (zero half-layers are dropped)", dg.len());
    print!("{}", dynamic_graph_to_json(&dg));

    let back = dynamic_graph_to_schedule(&dg)?;
    print!("{}", render::schedule_table(&back));
    let u = schedule_unitary(&schedule);
    println!("schedule vs walk:       {:.2e}", phase_aligned_distance(u.matrix(), walk_unitary(&dg)?.matrix())?);
    println!("schedule vs round trip: {:.2e}", phase_aligned_distance(u.matrix(), schedule_unitary(&back).matrix())?);

    // 00 and 11 differ in both bits: a perfectly good walk, but no mixer produces it.
    let diagonal = WeightedGraph::new(2, [], [(0, 3, 1.0)])?;
    let dg = DynamicGraph::new(2, vec![(diagonal, 1.0)])?;
    match dynamic_graph_to_schedule(&dg) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => println!("unexpectedly accepted"),
    }
    Ok(())
}
