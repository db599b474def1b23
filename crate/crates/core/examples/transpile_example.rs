//! Transpile the three-gate example circuit (H on 1, T on 2, CX 1->2) and print
//! its schedule as an angle table, then as JSON.
//!
//! ```bash
//! cargo run --example transpile_example
//! ```

use maqaoa_walk::cli::{render, schedule_to_json};
use maqaoa_walk::transpiler::{layer_count, transpile, Gate, GateCircuit};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let circuit = GateCircuit::new(2, vec![Gate::H(1), Gate::T(2), Gate::Cx { control: 1, target: 2 }])?;
    let schedule = transpile(&circuit)?;

    print!("{}", render::schedule_table(&schedule));
    let count = layer_count(&circuit)?;
    println!("\n{} layers for {} gates (bound {})\n", count.pairs, count.gates, count.bound);
    print!("{}", schedule_to_json(&schedule));
    Ok(())
}
