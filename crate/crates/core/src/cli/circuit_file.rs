//! Plain-text circuit format.
//!
//! ```text
//! # comments start with '#'
//! qubits 2
//! H 1
//! T 2
//! CX 1 2
//! ```

use crate::error::Error;
use crate::transpiler::{Gate, GateCircuit};
use crate::MAX_QUBITS;

use super::CliError;

fn parse_error(line: usize, token: &str, message: impl Into<String>) -> CliError {
    CliError::Parse { line, token: token.to_string(), message: message.into() }
}

fn parse_index(line: usize, token: &str, what: &str) -> Result<usize, CliError> {
    token.parse::<usize>().map_err(|_| parse_error(line, token, format!("expected {what}")))
}

pub fn parse_circuit(text: &str) -> Result<GateCircuit, CliError> {
    let mut n: Option<usize> = None;
    let mut circuit: Option<GateCircuit> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&head, args)) = tokens.split_first() else {
            continue;
        };

        let Some(n) = n else {
            if !head.eq_ignore_ascii_case("qubits") {
                return Err(parse_error(line_no, head, "expected 'qubits N' header"));
            }
            let [count] = args else {
                return Err(parse_error(line_no, head, "'qubits' takes exactly one count"));
            };
            let count = parse_index(line_no, count, "a qubit count")?;
            if count == 0 || count > MAX_QUBITS {
                return Err(parse_error(line_no, args[0], format!("qubit count must be in 1..={MAX_QUBITS}")));
            }
            n = Some(count);
            circuit = Some(GateCircuit::new(count, vec![]).expect("count checked"));
            continue;
        };

        let qubit = |token: &str| -> Result<usize, CliError> {
            let q = parse_index(line_no, token, "a qubit index")?;
            if q == 0 || q > n {
                return Err(parse_error(line_no, token, format!("qubit out of range 1..={n}")));
            }
            Ok(q)
        };
        let gate = match (head.to_ascii_uppercase().as_str(), args) {
            ("H", [q]) => Gate::H(qubit(q)?),
            ("T", [q]) => Gate::T(qubit(q)?),
            ("CX", [c, t]) => {
                let (control, target) = (qubit(c)?, qubit(t)?);
                if control == target {
                    return Err(parse_error(line_no, t, "control equals target"));
                }
                Gate::Cx { control, target }
            }
            ("H" | "T" | "CX", _) => {
                return Err(parse_error(line_no, head, "wrong number of qubit arguments"));
            }
            _ => return Err(parse_error(line_no, head, "unknown gate")),
        };
        circuit
            .as_mut()
            .expect("set with n")
            .push(gate)
            .map_err(|e: Error| parse_error(line_no, head, e.to_string()))?;
    }
    circuit.ok_or_else(|| parse_error(0, "", "missing 'qubits N' header"))
}

/// Renders a circuit back into the text format.
pub fn render_circuit(circuit: &GateCircuit) -> String {
    let mut out = format!("qubits {}\n", circuit.num_qubits());
    for g in circuit.gates() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
