//! Projector cost terms as Z-expansions, controlled edge operators as mixer
//! summands, and the cut-counting cost operator.
//!
//! ```bash
//! cargo run --example operator_identities
//! ```

use maqaoa_walk::linalg::ComplexMatrix;
use maqaoa_walk::operators::{
    b_operator_summands, c_term_z_expansion, controlled_edge_operator, hypercube_adjacency, maxcut_c, pauli_matrix,
    projector_c_term, BasisIndex,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z = BasisIndex::new(2, 2)?;
    let terms = c_term_z_expansion(z);
    let terms_text: Vec<String> = terms.iter().map(|p| p.to_string()).collect();
    println!("|{}><{}| = {}", z.label(), z.label(), terms_text.join(" + "));
    let sum = terms.iter().fold(ComplexMatrix::zeros(4)?, |acc, p| acc.add(pauli_matrix(p).matrix()).unwrap());
    println!("  gap to projector: {:.1e}", sum.sub(projector_c_term(z).matrix())?.max_abs());

    println!("mixer summands on 2 qubits:");
    for s in b_operator_summands(2)? {
        println!("  {} ({:?})", s.pauli, s.role);
    }

    let edge = controlled_edge_operator(1, 2, 2)?;
    println!("controlled edge (flip 1, control 2):\n{:?}", edge.matrix());
    println!("hypercube X1 + X2:\n{:?}", hypercube_adjacency(&[1, 2], 2)?.matrix());

    let triangle = maxcut_c(&[(1, 2), (2, 3), (1, 3)], 3)?;
    let cuts: Vec<f64> = triangle.matrix().diagonal().iter().map(|d| d.re).collect();
    println!("triangle cut values by bitstring: {cuts:?}");
    Ok(())
}
