//! Pauli strings, projector cost clauses, mixer summands and hypercube
//! adjacencies.
//!
//! Qubits are numbered from 1 and qubit 1 is the most significant bit of a
//! basis index: `|q1 q2 ... qn>` has index `sum q_i 2^(n-i)`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{dim_for_qubits, ComplexMatrix, HermitianOperator, UnitaryMatrix, C64};

/// Bit mask of qubit `q` (1-based) in an `n`-qubit register.
pub fn qubit_mask(q: usize, n: usize) -> usize {
    1 << (n - q)
}

/// Value of qubit `q` (1-based) in basis index `z`.
pub fn qubit_bit(z: usize, q: usize, n: usize) -> usize {
    (z >> (n - q)) & 1
}

pub(crate) fn check_qubit(q: usize, n: usize) -> Result<()> {
    if q == 0 || q > n {
        return Err(Error::InvalidQubit { qubit: q, n });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

impl TryFrom<char> for Pauli {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        match c {
            'I' => Ok(Pauli::I),
            'X' => Ok(Pauli::X),
            'Y' => Ok(Pauli::Y),
            'Z' => Ok(Pauli::Z),
            other => Err(Error::InvalidPauliLetter(other)),
        }
    }
}

/// Real multiple of a tensor product of single-qubit Paulis; letter 0 acts on qubit 1.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliString {
    letters: Vec<Pauli>,
    coefficient: f64,
}

impl PauliString {
    pub fn new(letters: Vec<Pauli>, coefficient: f64) -> Result<Self> {
        dim_for_qubits(letters.len())?;
        Ok(Self { letters, coefficient })
    }

    /// Parses letters such as `"XZI"` with the given coefficient.
    pub fn parse(letters: &str, coefficient: f64) -> Result<Self> {
        let letters = letters.chars().map(Pauli::try_from).collect::<Result<Vec<_>>>()?;
        Self::new(letters, coefficient)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(vec![Pauli::I; n], 1.0)
    }

    /// `letter` on each listed qubit (1-based), identity elsewhere.
    pub fn with_letters(n: usize, placed: &[(usize, Pauli)], coefficient: f64) -> Result<Self> {
        let mut letters = vec![Pauli::I; n];
        for &(q, p) in placed {
            check_qubit(q, n)?;
            letters[q - 1] = p;
        }
        Self::new(letters, coefficient)
    }

    pub fn num_qubits(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    pub fn coefficient(&self) -> f64 {
        self.coefficient
    }

    pub fn letters_string(&self) -> String {
        self.letters.iter().map(|p| p.letter()).collect()
    }

    /// Action on a basis state: `P|z> = phase |z ^ flip_mask>` (coefficient excluded).
    fn act(&self, z: usize) -> (usize, C64) {
        let n = self.letters.len();
        let mut target = z;
        let mut phase = C64::new(1.0, 0.0);
        for (i, p) in self.letters.iter().enumerate() {
            let q = i + 1;
            let bit = qubit_bit(z, q, n);
            match p {
                Pauli::I => {}
                Pauli::X => target ^= qubit_mask(q, n),
                Pauli::Y => {
                    target ^= qubit_mask(q, n);
                    // Y|0> = i|1>, Y|1> = -i|0>
                    phase *= if bit == 0 { C64::new(0.0, 1.0) } else { C64::new(0.0, -1.0) };
                }
                Pauli::Z => {
                    if bit == 1 {
                        phase = -phase;
                    }
                }
            }
        }
        (target, phase)
    }

    fn unit_matrix(&self) -> ComplexMatrix {
        let dim = 1 << self.letters.len();
        let mut m = ComplexMatrix::zeros(dim).expect("validated register");
        for z in 0..dim {
            let (row, phase) = self.act(z);
            m[(row, z)] = phase;
        }
        m
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{}", self.coefficient, self.letters_string())
    }
}

/// `coefficient * (P_1 (x) ... (x) P_n)` as a dense matrix.
pub fn pauli_matrix(p: &PauliString) -> HermitianOperator {
    HermitianOperator::from_unchecked(p.unit_matrix().scale(C64::new(p.coefficient, 0.0)))
}

/// `e^{-i theta P}` in closed form `cos(theta') I - i sin(theta') P/|c|`, with the
/// coefficient `c` folded into `theta' = c * theta`.
pub fn pauli_exp(p: &PauliString, theta: f64) -> UnitaryMatrix {
    let angle = theta * p.coefficient;
    let dim = 1 << p.num_qubits();
    let mut m = p.unit_matrix().scale(C64::new(0.0, -angle.sin()));
    for i in 0..dim {
        m[(i, i)] += C64::new(angle.cos(), 0.0);
    }
    UnitaryMatrix::from_unchecked(m)
}

/// A computational basis index in an `n`-qubit register.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisIndex {
    n: usize,
    z: usize,
}

impl BasisIndex {
    pub fn new(n: usize, z: usize) -> Result<Self> {
        let dim = dim_for_qubits(n)?;
        if z >= dim {
            return Err(Error::InvalidBasisIndex { index: z, dim });
        }
        Ok(Self { n, z })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn index(&self) -> usize {
        self.z
    }

    /// Bit of qubit `q` (1-based).
    pub fn bit(&self, q: usize) -> usize {
        qubit_bit(self.z, q, self.n)
    }

    /// Binary label, qubit 1 first.
    pub fn label(&self) -> String {
        (1..=self.n).map(|q| if self.bit(q) == 1 { '1' } else { '0' }).collect()
    }
}

/// The clause `|z><z|`.
pub fn projector_c_term(z: BasisIndex) -> HermitianOperator {
    let mut m = ComplexMatrix::zeros(1 << z.n).expect("validated register");
    m[(z.z, z.z)] = C64::new(1.0, 0.0);
    HermitianOperator::from_unchecked(m)
}

/// Expansion of `|z><z| = prod_i ((-1)^{z_i} Z_i + I_i) / 2` into `2^n` Z/I strings.
///
/// Term `m` carries `Z` on qubit `q` exactly when bit `q - 1` of `m` is set.
pub fn c_term_z_expansion(z: BasisIndex) -> Vec<PauliString> {
    let n = z.n;
    let weight = 0.5f64.powi(n as i32);
    (0..1usize << n)
        .map(|m| {
            let mut sign = 1.0;
            let letters = (1..=n)
                .map(|q| {
                    if (m >> (q - 1)) & 1 == 1 {
                        if z.bit(q) == 1 {
                            sign = -sign;
                        }
                        Pauli::Z
                    } else {
                        Pauli::I
                    }
                })
                .collect();
            PauliString { letters, coefficient: sign * weight }
        })
        .collect()
}

/// MaxCut cost `C = 1/2 sum_{(i,j)} (I - Z_i Z_j)` for 1-based qubit pairs.
pub fn maxcut_c(edges: &[(usize, usize)], n: usize) -> Result<HermitianOperator> {
    let dim = dim_for_qubits(n)?;
    let mut seen = BTreeSet::new();
    for &(i, j) in edges {
        check_qubit(i, n)?;
        check_qubit(j, n)?;
        if i == j {
            return Err(Error::SelfPair(i, j));
        }
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(Error::DuplicateEdge(i, j));
        }
    }
    let diag: Vec<C64> = (0..dim)
        .map(|z| {
            let cut = edges.iter().filter(|&&(i, j)| qubit_bit(z, i, n) != qubit_bit(z, j, n)).count();
            C64::new(cut as f64, 0.0)
        })
        .collect();
    Ok(HermitianOperator::from_unchecked(ComplexMatrix::from_diagonal(&diag)?))
}

/// `1/2 (X_flip - X_flip Z_control)`: the hypercube edges in direction `flip`
/// restricted to basis states whose `control` bit is 1.
pub fn controlled_edge_operator(flip: usize, control: usize, n: usize) -> Result<HermitianOperator> {
    dim_for_qubits(n)?;
    check_qubit(flip, n)?;
    check_qubit(control, n)?;
    if flip == control {
        return Err(Error::ControlEqualsTarget(flip));
    }
    let x = PauliString::with_letters(n, &[(flip, Pauli::X)], 0.5)?;
    let xz = PauliString::with_letters(n, &[(flip, Pauli::X), (control, Pauli::Z)], -0.5)?;
    pauli_matrix(&x).add(&pauli_matrix(&xz))
}

/// Which mixer summand a Pauli string is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SummandRole {
    /// `X_v`
    Flip { qubit: usize },
    /// `X_v Z_j`
    ControlledFlip { flip: usize, control: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BSummand {
    pub role: SummandRole,
    pub pauli: PauliString,
}

/// Summands of `B = 1/2 (sum_v X_v - sum_v sum_{j != v} X_v Z_j)` with the global
/// half folded into each coefficient: `X_v` first, then `X_v Z_j` by `(v, j)`.
pub fn b_operator_summands(n: usize) -> Result<Vec<BSummand>> {
    dim_for_qubits(n)?;
    let mut out = Vec::with_capacity(n * n);
    for v in 1..=n {
        out.push(BSummand {
            role: SummandRole::Flip { qubit: v },
            pauli: PauliString::with_letters(n, &[(v, Pauli::X)], 0.5)?,
        });
    }
    for v in 1..=n {
        for j in (1..=n).filter(|&j| j != v) {
            out.push(BSummand {
                role: SummandRole::ControlledFlip { flip: v, control: j },
                pauli: PauliString::with_letters(n, &[(v, Pauli::X), (j, Pauli::Z)], -0.5)?,
            });
        }
    }
    Ok(out)
}

/// `sum_{k in directions} X_k`: the hypercube over the chosen directions, lifted to `2^n` vertices.
pub fn hypercube_adjacency(directions: &[usize], n: usize) -> Result<HermitianOperator> {
    let dim = dim_for_qubits(n)?;
    let set: BTreeSet<usize> = directions.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::EmptyQubitSet);
    }
    for &k in &set {
        check_qubit(k, n)?;
    }
    let mut m = ComplexMatrix::zeros(dim)?;
    for z in 0..dim {
        for &k in &set {
            m[(z, z ^ qubit_mask(k, n))] = C64::new(1.0, 0.0);
        }
    }
    Ok(HermitianOperator::from_unchecked(m))
}
