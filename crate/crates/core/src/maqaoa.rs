//! ma-QAOA layers and schedules.
//!
//! A γ-layer carries one angle per basis state and acts as
//! `e^{-i sum_z γ_z |z><z|}`. A β-layer carries one angle per hypercube edge;
//! its weighted adjacency `W = sum_e angle_e (|u><w| + |w><u|)` evolves as
//! `e^{-iW}`. A schedule applies `(γ, β)` pairs in order, γ first.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{
    apply_matrix, dim_for_qubits, herm_exp, phase_aligned_distance, qubits_for_dim, ComplexMatrix, HermitianOperator,
    Statevector, UnitaryMatrix, C64,
};
use crate::operators::{b_operator_summands, pauli_matrix, PauliString};

/// Angles this close to `2π` are stored as `0`.
const WRAP_SNAP: f64 = 1e-12;

/// Reduces an angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    if r >= TAU - WRAP_SNAP {
        0.0
    } else {
        r
    }
}

fn check_angle(theta: f64) -> Result<()> {
    if !theta.is_finite() {
        return Err(Error::InvalidAngle(theta));
    }
    Ok(())
}

/// Diagonal cost half-layer.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaLayer {
    n: usize,
    gamma: Vec<f64>,
}

impl GammaLayer {
    pub fn new(gamma: Vec<f64>) -> Result<Self> {
        let n = qubits_for_dim(gamma.len())?;
        for &g in &gamma {
            check_angle(g)?;
        }
        Ok(Self { n, gamma: gamma.into_iter().map(normalize_angle).collect() })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Ok(Self { n, gamma: vec![0.0; dim_for_qubits(n)?] })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn angles(&self) -> &[f64] {
        &self.gamma
    }

    pub fn is_zero(&self) -> bool {
        self.gamma.iter().all(|&g| g == 0.0)
    }

    /// Angle-wise sum; the unitary of the result is the product of both.
    pub fn merged(&self, other: &GammaLayer) -> Result<GammaLayer> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        GammaLayer::new(self.gamma.iter().zip(&other.gamma).map(|(a, b)| a + b).collect())
    }

    /// `diag(e^{-i γ_z})`.
    pub fn unitary(&self) -> UnitaryMatrix {
        let phases: Vec<f64> = self.gamma.iter().map(|g| -g).collect();
        UnitaryMatrix::from_phases(&phases).expect("validated register")
    }

    /// `sum_z γ_z |z><z|`.
    pub fn hamiltonian(&self) -> HermitianOperator {
        let diag: Vec<C64> = self.gamma.iter().map(|&g| C64::new(g, 0.0)).collect();
        HermitianOperator::new(ComplexMatrix::from_diagonal(&diag).expect("validated register")).expect("real diagonal")
    }

    fn apply(&self, psi: &Statevector) -> Statevector {
        let amps = psi.amplitudes().iter().zip(&self.gamma).map(|(a, &g)| a * C64::from_polar(1.0, -g)).collect();
        Statevector::new(amps).expect("phases preserve the norm")
    }
}

/// Edge of the `n`-dimensional hypercube on basis indices, stored with `u < w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HypercubeEdge {
    u: usize,
    w: usize,
}

impl HypercubeEdge {
    pub fn new(u: usize, w: usize, n: usize) -> Result<Self> {
        let dim = dim_for_qubits(n)?;
        for v in [u, w] {
            if v >= dim {
                return Err(Error::InvalidVertex { vertex: v, num_vertices: dim });
            }
        }
        let differing_bits = (u ^ w).count_ones();
        if differing_bits != 1 {
            return Err(Error::NotHypercubeEdge { u, w, differing_bits });
        }
        Ok(Self { u: u.min(w), w: u.max(w) })
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// The 1-based qubit whose bit the edge flips.
    pub fn direction(&self, n: usize) -> usize {
        n - (self.u ^ self.w).trailing_zeros() as usize
    }

    fn touches(&self, other: &HypercubeEdge) -> bool {
        self.u == other.u || self.u == other.w || self.w == other.u || self.w == other.w
    }

    /// Every edge of the `n`-cube in lexicographic `(u, w)` order.
    pub fn all(n: usize) -> impl Iterator<Item = HypercubeEdge> {
        let dim = 1usize << n;
        (0..dim).flat_map(move |u| {
            (0..n).map(move |k| u ^ (1 << k)).filter(move |&w| w > u).map(move |w| HypercubeEdge { u, w })
        })
    }
}

impl fmt::Display for HypercubeEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.w)
    }
}

/// Mixer half-layer in the per-edge parametrization.
///
/// Only nonzero angles are stored. An edge sharing no vertex with another edge
/// evolves as an independent `e^{-iθX}` block, so its angle is reduced into
/// `[0, 2π)`; angles of coupled edges are kept as given because the block
/// exponential is not periodic in each of them separately.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaLayer {
    n: usize,
    edge_angles: BTreeMap<HypercubeEdge, f64>,
}

impl BetaLayer {
    pub fn new(n: usize, angles: impl IntoIterator<Item = (HypercubeEdge, f64)>) -> Result<Self> {
        dim_for_qubits(n)?;
        let mut edge_angles = BTreeMap::new();
        for (edge, angle) in angles {
            check_angle(angle)?;
            HypercubeEdge::new(edge.u, edge.w, n)?;
            if edge_angles.insert(edge, angle).is_some() {
                return Err(Error::DuplicateEdge(edge.u, edge.w));
            }
        }
        edge_angles.retain(|_, a| *a != 0.0);
        loop {
            let isolated: Vec<HypercubeEdge> =
                edge_angles.keys().filter(|e| edge_angles.keys().all(|o| o == *e || !e.touches(o))).copied().collect();
            let mut changed = false;
            for e in isolated {
                let a = edge_angles[&e];
                let wrapped = normalize_angle(a);
                if wrapped != a {
                    changed = true;
                    if wrapped == 0.0 {
                        edge_angles.remove(&e);
                    } else {
                        edge_angles.insert(e, wrapped);
                    }
                }
            }
            if !changed {
                break;
            }
        }
        Ok(Self { n, edge_angles })
    }

    /// From `(u, w, angle)` triples.
    pub fn from_triples(n: usize, triples: &[(usize, usize, f64)]) -> Result<Self> {
        let edges =
            triples.iter().map(|&(u, w, a)| HypercubeEdge::new(u, w, n).map(|e| (e, a))).collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn edge_angles(&self) -> &BTreeMap<HypercubeEdge, f64> {
        &self.edge_angles
    }

    pub fn angle(&self, edge: &HypercubeEdge) -> f64 {
        self.edge_angles.get(edge).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.edge_angles.is_empty()
    }

    /// True when no two edges share a vertex, so all edge terms commute.
    pub fn is_matching(&self) -> bool {
        let edges: Vec<_> = self.edge_angles.keys().collect();
        edges.iter().enumerate().all(|(i, a)| edges[i + 1..].iter().all(|b| !a.touches(b)))
    }

    /// `W = sum_e angle_e (|u><w| + |w><u|)`.
    pub fn hamiltonian(&self) -> HermitianOperator {
        let mut m = ComplexMatrix::zeros(1 << self.n).expect("validated register");
        for (e, &a) in &self.edge_angles {
            m[(e.u, e.w)] = C64::new(a, 0.0);
            m[(e.w, e.u)] = C64::new(a, 0.0);
        }
        HermitianOperator::new(m).expect("real symmetric")
    }

    /// `e^{-iW}`.
    pub fn unitary(&self) -> UnitaryMatrix {
        herm_exp(&self.hamiltonian(), 1.0)
    }

    /// Ordered product of per-edge exponentials `e^{-iθ_e(|u><w| + |w><u|)}`,
    /// first edge applied first. Agrees with [`BetaLayer::unitary`] when the
    /// edge terms commute.
    pub fn product_form_unitary(&self) -> UnitaryMatrix {
        let dim = 1 << self.n;
        let mut acc = ComplexMatrix::identity(dim).expect("validated register");
        for (e, &a) in &self.edge_angles {
            let mut block = ComplexMatrix::identity(dim).expect("validated register");
            let (c, s) = (a.cos(), a.sin());
            block[(e.u, e.u)] = C64::new(c, 0.0);
            block[(e.w, e.w)] = C64::new(c, 0.0);
            block[(e.u, e.w)] = C64::new(0.0, -s);
            block[(e.w, e.u)] = C64::new(0.0, -s);
            acc = &block * &acc;
        }
        let out = UnitaryMatrix::from_unchecked(acc);
        let gap = phase_free_gap(&out, &self.unitary());
        if gap > 1e-9 {
            log::warn!("product-form mixer differs from e^(-iW) by {gap:e}; edge terms do not commute");
        }
        out
    }

    /// `||e^{-iW} - product form||_F`.
    pub fn form_discrepancy(&self) -> f64 {
        phase_free_gap(&self.unitary(), &self.product_form_unitary())
    }

    fn apply(&self, psi: &Statevector) -> Result<Statevector> {
        if self.is_zero() {
            return Ok(psi.clone());
        }
        apply_matrix(&self.unitary(), psi)
    }
}

fn phase_free_gap(a: &UnitaryMatrix, b: &UnitaryMatrix) -> f64 {
    a.matrix().sub(b.matrix()).expect("same register").frobenius_norm()
}

/// Either half of an ma-QAOA layer.
#[derive(Debug, Clone, PartialEq)]
pub enum HalfLayer {
    Gamma(GammaLayer),
    Beta(BetaLayer),
}

impl HalfLayer {
    pub fn num_qubits(&self) -> usize {
        match self {
            HalfLayer::Gamma(g) => g.num_qubits(),
            HalfLayer::Beta(b) => b.num_qubits(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            HalfLayer::Gamma(g) => g.is_zero(),
            HalfLayer::Beta(b) => b.is_zero(),
        }
    }

    pub fn is_gamma(&self) -> bool {
        matches!(self, HalfLayer::Gamma(_))
    }

    pub fn unitary(&self) -> UnitaryMatrix {
        match self {
            HalfLayer::Gamma(g) => g.unitary(),
            HalfLayer::Beta(b) => b.unitary(),
        }
    }

    fn apply(&self, psi: &Statevector) -> Result<Statevector> {
        match self {
            HalfLayer::Gamma(g) => Ok(g.apply(psi)),
            HalfLayer::Beta(b) => b.apply(psi),
        }
    }
}

/// Ordered `(γ, β)` pairs on a common register.
#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    n: usize,
    layers: Vec<(GammaLayer, BetaLayer)>,
}

impl Schedule {
    pub fn new(n: usize, layers: Vec<(GammaLayer, BetaLayer)>) -> Result<Self> {
        dim_for_qubits(n)?;
        if layers.is_empty() {
            return Err(Error::EmptySchedule);
        }
        for (g, b) in &layers {
            for found in [g.num_qubits(), b.num_qubits()] {
                if found != n {
                    return Err(Error::DimensionMismatch { expected: n, found });
                }
            }
        }
        Ok(Self { n, layers })
    }

    /// A single all-zero layer.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, vec![(GammaLayer::zero(n)?, BetaLayer::zero(n)?)])
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn layers(&self) -> &[(GammaLayer, BetaLayer)] {
        &self.layers
    }

    pub fn num_layers(&self) -> usize {
        self.layers.len()
    }

    /// Half-layers in application order with their display labels.
    pub fn half_layers(&self) -> impl Iterator<Item = (String, HalfLayer)> + '_ {
        self.layers.iter().enumerate().flat_map(|(i, (g, b))| {
            [
                (format!("U(γ{},C)", i + 1), HalfLayer::Gamma(g.clone())),
                (format!("U(β{},B)", i + 1), HalfLayer::Beta(b.clone())),
            ]
        })
    }

    pub fn is_identity_schedule(&self) -> bool {
        self.layers.iter().all(|(g, b)| g.is_zero() && b.is_zero())
    }
}

/// State after one half-layer.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceEntry {
    pub label: String,
    pub state: Statevector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleRun {
    pub final_state: Statevector,
    pub trace: Vec<TraceEntry>,
}

pub fn gamma_unitary(layer: &GammaLayer) -> UnitaryMatrix {
    layer.unitary()
}

pub fn beta_hamiltonian(layer: &BetaLayer) -> HermitianOperator {
    layer.hamiltonian()
}

pub fn beta_unitary(layer: &BetaLayer) -> UnitaryMatrix {
    layer.unitary()
}

/// Converts per-summand mixer angles into the per-edge parametrization by
/// reading off `W = sum angle * summand` entry by entry.
pub fn summand_to_edge_angles(n: usize, per_summand: &[(PauliString, f64)]) -> Result<BetaLayer> {
    let summands = b_operator_summands(n)?;
    let dim = 1 << n;
    let mut w = ComplexMatrix::zeros(dim)?;
    for (p, angle) in per_summand {
        check_angle(*angle)?;
        if !summands.iter().any(|s| &s.pauli == p) {
            return Err(Error::UnknownSummand(p.to_string(), n));
        }
        w = w.add(&pauli_matrix(p).matrix().scale(C64::new(*angle, 0.0)))?;
    }
    let mut edges = Vec::new();
    for r in 0..dim {
        if w[(r, r)].norm() > 0.0 {
            return Err(Error::DiagonalMixer(r));
        }
        for c in r + 1..dim {
            let x = w[(r, c)];
            if x.norm() == 0.0 {
                continue;
            }
            let edge = HypercubeEdge::new(r, c, n)?;
            edges.push((edge, x.re));
        }
    }
    BetaLayer::new(n, edges)
}

fn check_state(n: usize, psi: &Statevector) -> Result<()> {
    if psi.num_qubits() != n {
        return Err(Error::DimensionMismatch { expected: 1 << n, found: psi.dim() });
    }
    Ok(())
}

/// Runs the schedule on `psi0`, recording the state after every half-layer.
pub fn run_schedule(s: &Schedule, psi0: &Statevector) -> Result<ScheduleRun> {
    check_state(s.n, psi0)?;
    let mut state = psi0.clone();
    let mut trace = Vec::with_capacity(2 * s.layers.len());
    for (label, half) in s.half_layers() {
        state = half.apply(&state)?;
        trace.push(TraceEntry { label, state: state.clone() });
    }
    Ok(ScheduleRun { final_state: state, trace })
}

/// Product of all half-layer unitaries in application order.
pub fn schedule_unitary(s: &Schedule) -> UnitaryMatrix {
    let mut acc = UnitaryMatrix::identity(1 << s.n).expect("validated register");
    for (_, half) in s.half_layers() {
        if !half.is_zero() {
            acc = acc.then(&half.unitary()).expect("same register");
        }
    }
    acc
}

/// Whether two schedules implement the same unitary up to global phase.
pub fn schedules_equivalent(a: &Schedule, b: &Schedule, tol: f64) -> Result<bool> {
    Ok(phase_aligned_distance(schedule_unitary(a).matrix(), schedule_unitary(b).matrix())? <= tol)
}
