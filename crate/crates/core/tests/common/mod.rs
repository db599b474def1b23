//! Independent oracles shared by the integration tests.
//!
//! Gate matrices are written out by basis-index arithmetic rather than
//! Kronecker products, and random operators come from seeded generators.

#![allow(dead_code)]

use maqaoa_walk::linalg::{ComplexMatrix, HermitianOperator, C64};
use maqaoa_walk::transpiler::{Gate, GateCircuit};
use rand::Rng;

pub const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn bit(z: usize, q: usize, n: usize) -> usize {
    (z >> (n - q)) & 1
}

/// Matrix of a single gate, entry by entry.
pub fn gate_oracle(gate: Gate, n: usize) -> ComplexMatrix {
    let dim = 1 << n;
    ComplexMatrix::from_fn(dim, |r, col| match gate {
        Gate::H(q) => {
            let others_match = (r ^ col) & !(1 << (n - q)) == 0;
            if !others_match {
                c(0.0, 0.0)
            } else if bit(r, q, n) == 1 && bit(col, q, n) == 1 {
                c(-FRAC_1_SQRT_2, 0.0)
            } else {
                c(FRAC_1_SQRT_2, 0.0)
            }
        }
        Gate::T(q) => {
            if r != col {
                c(0.0, 0.0)
            } else if bit(r, q, n) == 1 {
                C64::from_polar(1.0, std::f64::consts::FRAC_PI_4)
            } else {
                c(1.0, 0.0)
            }
        }
        Gate::Cx { control, target } => {
            let image = if bit(col, control, n) == 1 { col ^ (1 << (n - target)) } else { col };
            if r == image {
                c(1.0, 0.0)
            } else {
                c(0.0, 0.0)
            }
        }
    })
    .unwrap()
}

pub fn circuit_oracle(circuit: &GateCircuit) -> ComplexMatrix {
    let n = circuit.num_qubits();
    let mut acc = ComplexMatrix::identity(1 << n).unwrap();
    for &g in circuit.gates() {
        acc = &gate_oracle(g, n) * &acc;
    }
    acc
}

/// Every circuit of length `1..=max_len` over all gate placements on `n` qubits.
pub fn all_circuits(n: usize, max_len: usize) -> Vec<GateCircuit> {
    let gates = GateCircuit::all_gates(n);
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<Gate>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for &g in &gates {
                let mut seq = prefix.clone();
                seq.push(g);
                out.push(GateCircuit::new(n, seq.clone()).unwrap());
                next.push(seq);
            }
        }
        frontier = next;
    }
    out
}

pub fn random_hermitian(rng: &mut impl Rng, dim: usize, scale: f64) -> HermitianOperator {
    let mut entries = vec![c(0.0, 0.0); dim * dim];
    for r in 0..dim {
        entries[r * dim + r] = c(rng.gen_range(-scale..scale), 0.0);
        for col in r + 1..dim {
            let z = c(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale));
            entries[r * dim + col] = z;
            entries[col * dim + r] = z.conj();
        }
    }
    HermitianOperator::new(ComplexMatrix::from_fn(dim, |r, col| entries[r * dim + col]).unwrap()).unwrap()
}

pub fn max_entry_gap(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.data().iter().zip(b.data()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
