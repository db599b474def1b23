//! Run the example schedule from the uniform superposition and print the state
//! after every half-layer, then a circuit file parsed from text.
//!
//! ```bash
//! cargo run --example simulate_trace
//! ```

use maqaoa_walk::cli::{parse_circuit, render};
use maqaoa_walk::linalg::Statevector;
use maqaoa_walk::maqaoa::run_schedule;
use maqaoa_walk::transpiler::transpile;

const CIRCUIT: &str = "\
# H on qubit 1, T on qubit 2, then CX
qubits 2
H 1
T 2
CX 1 2
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let circuit = parse_circuit(CIRCUIT)?;
    let schedule = transpile(&circuit)?;
    let psi0 = Statevector::plus(2)?;

    println!("start:");
    print!("{}", render::state_lines(&psi0));
    let run = run_schedule(&schedule, &psi0)?;
    for entry in &run.trace {
        println!("after {}:", entry.label);
        print!("{}", render::state_lines(&entry.state));
    }

    // Same circuit, swapped CX roles.
    let swapped = parse_circuit(&CIRCUIT.replace("CX 1 2", "CX 2 1"))?;
    let run = run_schedule(&transpile(&swapped)?, &psi0)?;
    println!("with CX 2 1:");
    print!("{}", render::state_lines(&run.final_state));
    Ok(())
}
