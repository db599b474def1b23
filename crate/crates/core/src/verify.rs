//! Reference oracles used to check every construction.
//!
//! Nothing here calls [`crate::linalg::herm_exp`]: gate unitaries are built from
//! their textbook matrices by Kronecker products, and the exponential oracle is
//! a time-sliced Taylor series with no squaring step.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{frobenius_distance, phase_alignment, ComplexMatrix, HermitianOperator, UnitaryMatrix, C64};
use crate::operators::qubit_bit;
use crate::transpiler::{Gate, GateCircuit};

fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (da, db) = (a.dim(), b.dim());
    ComplexMatrix::from_fn(da * db, |r, c| a[(r / db, c / db)] * b[(r % db, c % db)]).expect("power-of-two product")
}

/// `I (x) ... (x) gate (x) ... (x) I` with the single-qubit gate on qubit `q`.
fn lift_single(gate: &ComplexMatrix, q: usize, n: usize) -> ComplexMatrix {
    let id = ComplexMatrix::identity(2).expect("dim 2");
    let mut acc: Option<ComplexMatrix> = None;
    for k in 1..=n {
        let factor = if k == q { gate } else { &id };
        acc = Some(match acc {
            None => factor.clone(),
            Some(m) => kron(&m, factor),
        });
    }
    acc.expect("n >= 1")
}

/// `1/√2 [[1, 1], [1, -1]]`.
pub fn hadamard() -> ComplexMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    ComplexMatrix::from_real_rows(&[&[s, s], &[s, -s]]).expect("dim 2")
}

/// `diag(1, e^{iπ/4})`.
pub fn t_gate() -> ComplexMatrix {
    ComplexMatrix::from_diagonal(&[C64::new(1.0, 0.0), C64::from_polar(1.0, std::f64::consts::FRAC_PI_4)])
        .expect("dim 2")
}

/// Permutation matrix of CX on an `n`-qubit register.
pub fn cx_matrix(control: usize, target: usize, n: usize) -> ComplexMatrix {
    let dim = 1 << n;
    let flip = 1 << (n - target);
    ComplexMatrix::from_fn(dim, |r, c| {
        let image = if qubit_bit(c, control, n) == 1 { c ^ flip } else { c };
        if r == image {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
    .expect("validated register")
}

pub fn gate_matrix(gate: Gate, n: usize) -> ComplexMatrix {
    match gate {
        Gate::H(q) => lift_single(&hadamard(), q, n),
        Gate::T(q) => lift_single(&t_gate(), q, n),
        Gate::Cx { control, target } => cx_matrix(control, target, n),
    }
}

/// Circuit unitary as the ordered product of its gate matrices.
pub fn reference_gate_unitary(circuit: &GateCircuit) -> UnitaryMatrix {
    let n = circuit.num_qubits();
    let mut acc = ComplexMatrix::identity(1 << n).expect("validated register");
    for &g in circuit.gates() {
        acc = &gate_matrix(g, n) * &acc;
    }
    UnitaryMatrix::new(acc).expect("products of gate matrices are unitary")
}

/// `e^{-iHt}` as a product of Taylor-series slices with `||H||_F |Δt| <= 1/4`.
pub fn series_exp_oracle(h: &HermitianOperator, t: f64) -> ComplexMatrix {
    let m = h.matrix();
    let dim = m.dim();
    let id = ComplexMatrix::identity(dim).expect("validated register");
    let norm = m.frobenius_norm();
    if t == 0.0 || norm == 0.0 {
        return id;
    }
    let slices = (norm * t.abs() / 0.25).ceil().max(1.0) as usize;
    let dt = t / slices as f64;
    let a = m.scale(C64::new(0.0, -dt));

    let mut slice = id.clone();
    let mut term = id;
    for k in 1..=40 {
        term = (&term * &a).scale(C64::new(1.0 / k as f64, 0.0));
        slice = slice.add(&term).expect("same dim");
        if term.max_abs() < 1e-20 {
            break;
        }
    }
    let mut out = slice.clone();
    for _ in 1..slices {
        out = &out * &slice;
    }
    out
}

/// Outcome of comparing two unitaries.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalenceReport {
    pub distance: f64,
    /// `φ` such that `U ≈ e^{iφ} V`; zero when global phase is not allowed.
    pub phase: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// `(row, col, |U - e^{iφ} V|)` at the largest entry of the difference.
    pub worst_entry: (usize, usize, f64),
}

impl EquivalenceReport {
    pub fn render_text(&self) -> String {
        let (r, c, m) = self.worst_entry;
        format!(
            "result: {}\ndistance: {:e}\ntolerance: {:e}\nphase: {:.12}\nworst entry: ({r}, {c}) magnitude {m:e}\n",
            if self.pass { "PASS" } else { "FAIL" },
            self.distance,
            self.tolerance,
            self.phase,
        )
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

pub fn check_equivalence(
    u: &ComplexMatrix,
    v: &ComplexMatrix,
    tolerance: f64,
    allow_global_phase: bool,
) -> Result<EquivalenceReport> {
    let (distance, phase) = if allow_global_phase { phase_alignment(u, v)? } else { (frobenius_distance(u, v)?, 0.0) };
    let aligned = v.scale(C64::from_polar(1.0, phase));
    let diff = u.sub(&aligned)?;
    let mut worst_entry = (0, 0, 0.0);
    for r in 0..diff.dim() {
        for c in 0..diff.dim() {
            let mag = diff[(r, c)].norm();
            if mag > worst_entry.2 {
                worst_entry = (r, c, mag);
            }
        }
    }
    Ok(EquivalenceReport { distance, phase, tolerance, pass: distance <= tolerance, worst_entry })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ctqw::{gadget_h, walk_unitary};
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn reference_examples() {
        let h = GateCircuit::new(1, vec![Gate::H(1)]).unwrap();
        let s = FRAC_1_SQRT_2;
        assert_eq!(reference_gate_unitary(&h).matrix(), &ComplexMatrix::from_real_rows(&[&[s, s], &[s, -s]]).unwrap());

        let cx = GateCircuit::new(2, vec![Gate::Cx { control: 1, target: 2 }]).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
            &[0.0, 0.0, 1.0, 0.0],
        ])
        .unwrap();
        assert_eq!(reference_gate_unitary(&cx).matrix(), &expected);

        let empty = GateCircuit::new(2, vec![]).unwrap();
        assert_eq!(reference_gate_unitary(&empty).matrix(), &ComplexMatrix::identity(4).unwrap());
    }

    #[test]
    fn lifted_t_targets_msb_first() {
        // T on qubit 1 of 2 puts the phase on |10> and |11>.
        let d = gate_matrix(Gate::T(1), 2).diagonal();
        let w = C64::from_polar(1.0, PI / 4.0);
        let one = c(1.0, 0.0);
        for (x, y) in d.iter().zip([one, one, w, w]) {
            assert!((x - y).norm() < 1e-15);
        }
    }

    #[test]
    fn series_oracle_examples() {
        let d = HermitianOperator::new(ComplexMatrix::from_real_rows(&[&[0.0, 0.0], &[0.0, 1.0]]).unwrap()).unwrap();
        let u = series_exp_oracle(&d, 3.0 * PI / 2.0);
        let expected = ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert!(frobenius_distance(&u, &expected).unwrap() < 1e-13);

        let x = HermitianOperator::new(ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap()).unwrap();
        let s = FRAC_1_SQRT_2;
        let expected = ComplexMatrix::from_rows(&[vec![c(s, 0.0), c(0.0, -s)], vec![c(0.0, -s), c(s, 0.0)]]).unwrap();
        assert!(frobenius_distance(&series_exp_oracle(&x, PI / 4.0), &expected).unwrap() < 1e-14);

        assert_eq!(series_exp_oracle(&x, 0.0), ComplexMatrix::identity(2).unwrap());
    }

    #[test]
    fn check_equivalence_examples() {
        let walk = walk_unitary(&gadget_h(1, 1).unwrap()).unwrap();
        let r = check_equivalence(walk.matrix(), &hadamard(), 1e-10, true).unwrap();
        assert!(r.pass, "{r:?}");

        let i2 = ComplexMatrix::identity(2).unwrap();
        let x = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let r = check_equivalence(&i2, &x, 1e-10, true).unwrap();
        assert!(!r.pass);
        assert!((r.distance - 2.0).abs() < 1e-15);

        let r = check_equivalence(&hadamard(), &hadamard(), 0.0, false).unwrap();
        assert!(r.pass);
        assert_eq!(r.distance, 0.0);

        assert!(check_equivalence(&i2, &ComplexMatrix::identity(4).unwrap(), 1e-10, true).is_err());
    }

    #[test]
    fn report_renders() {
        let r = check_equivalence(&hadamard(), &hadamard(), 1e-9, true).unwrap();
        assert!(r.render_text().starts_with("result: PASS"));
        let json: serde_json::Value = serde_json::from_str(&r.render_json()).unwrap();
        assert_eq!(json["pass"], true);
    }
}
