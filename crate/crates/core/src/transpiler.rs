//! Compilation of `{H, T, CX}` circuits into ma-QAOA schedules, and conversion
//! between schedules and dynamic graphs.
//!
//! Each gate becomes a [`LayerFragment`], a short run of γ/β half-layers:
//!
//! | gate | half-layers |
//! |------|-------------|
//! | H on a qubit set `S` | γ(η), β(π/4 on every direction-`S` edge), γ(η) |
//! | T on `q` | γ(7π/4 where bit `q` is 1) |
//! | CX `c → t` | β(3π/2 on target edges with control 1), γ(π/2 where control is 1) |
//!
//! [`pack`] splices fragments into the alternating γ/β ansatz.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt;

use crate::ctqw::{adjacency, DynamicGraph, WeightedGraph};
use crate::error::{Error, Result};
use crate::linalg::{dim_for_qubits, spectral_norm};
use crate::maqaoa::{BetaLayer, GammaLayer, HalfLayer, HypercubeEdge, Schedule};
use crate::operators::{check_qubit, qubit_bit, qubit_mask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    T(usize),
    Cx { control: usize, target: usize },
}

impl Gate {
    fn validate(&self, n: usize) -> Result<()> {
        match *self {
            Gate::H(q) | Gate::T(q) => check_qubit(q, n),
            Gate::Cx { control, target } => {
                check_qubit(control, n)?;
                check_qubit(target, n)?;
                if control == target {
                    return Err(Error::ControlEqualsTarget(control));
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::H(q) => write!(f, "H {q}"),
            Gate::T(q) => write!(f, "T {q}"),
            Gate::Cx { control, target } => write!(f, "CX {control} {target}"),
        }
    }
}

/// Gates on an `n`-qubit register, applied in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateCircuit {
    n: usize,
    gates: Vec<Gate>,
}

impl GateCircuit {
    pub fn new(n: usize, gates: Vec<Gate>) -> Result<Self> {
        dim_for_qubits(n)?;
        for g in &gates {
            g.validate(n)?;
        }
        Ok(Self { n, gates })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Every gate of the universal set on an `n`-qubit register.
    pub fn all_gates(n: usize) -> Vec<Gate> {
        let mut out: Vec<Gate> = (1..=n).map(Gate::H).chain((1..=n).map(Gate::T)).collect();
        for control in 1..=n {
            for target in (1..=n).filter(|&t| t != control) {
                out.push(Gate::Cx { control, target });
            }
        }
        out
    }
}

/// Half-layers produced for one gate.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerFragment {
    halves: Vec<HalfLayer>,
    absorbs_leading_phase: bool,
}

impl LayerFragment {
    pub fn new(halves: Vec<HalfLayer>) -> Self {
        Self { halves, absorbs_leading_phase: false }
    }

    pub fn halves(&self) -> &[HalfLayer] {
        &self.halves
    }

    /// Whether [`Packing::Balanced`] may fold the opening γ into a preceding γ.
    pub fn absorbs_leading_phase(&self) -> bool {
        self.absorbs_leading_phase
    }
}

/// Phase angle for Hamming weight residue 0, 1, 2, 3 (phases -1, -i, 1, i).
const ETA: [f64; 4] = [PI, PI / 2.0, 0.0, 3.0 * PI / 2.0];

/// H on every qubit in `qubits` at once.
pub fn fragment_h(qubits: &[usize], n: usize) -> Result<LayerFragment> {
    dim_for_qubits(n)?;
    let set: BTreeSet<usize> = qubits.iter().copied().collect();
    if set.is_empty() {
        return Err(Error::EmptyQubitSet);
    }
    for &q in &set {
        check_qubit(q, n)?;
    }
    let mask: usize = set.iter().map(|&q| qubit_mask(q, n)).sum();
    let gamma = GammaLayer::new((0..1usize << n).map(|z| ETA[(z & mask).count_ones() as usize % 4]).collect())?;
    let edges = HypercubeEdge::all(n).filter(|e| set.contains(&e.direction(n))).map(|e| (e, PI / 4.0));
    let beta = BetaLayer::new(n, edges)?;
    Ok(LayerFragment {
        halves: vec![HalfLayer::Gamma(gamma.clone()), HalfLayer::Beta(beta), HalfLayer::Gamma(gamma)],
        absorbs_leading_phase: true,
    })
}

pub fn fragment_t(q: usize, n: usize) -> Result<LayerFragment> {
    dim_for_qubits(n)?;
    check_qubit(q, n)?;
    let gamma = GammaLayer::new(
        (0..1usize << n).map(|z| if qubit_bit(z, q, n) == 1 { 7.0 * PI / 4.0 } else { 0.0 }).collect(),
    )?;
    Ok(LayerFragment::new(vec![HalfLayer::Gamma(gamma)]))
}

/// Order of the two CX half-layers. Both are exact: the phase is constant on
/// the swapped block, so it commutes with the swap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CxOrder {
    #[default]
    SwapThenPhase,
    PhaseThenSwap,
}

pub fn fragment_cx(control: usize, target: usize, n: usize) -> Result<LayerFragment> {
    fragment_cx_ordered(control, target, n, CxOrder::default())
}

pub fn fragment_cx_ordered(control: usize, target: usize, n: usize, order: CxOrder) -> Result<LayerFragment> {
    Gate::Cx { control, target }.validate(n)?;
    let controlled = |z: usize| qubit_bit(z, control, n) == 1;
    let edges =
        HypercubeEdge::all(n).filter(|e| e.direction(n) == target && controlled(e.u())).map(|e| (e, 3.0 * PI / 2.0));
    let swap = HalfLayer::Beta(BetaLayer::new(n, edges)?);
    let phase = HalfLayer::Gamma(GammaLayer::new(
        (0..1usize << n).map(|z| if controlled(z) { PI / 2.0 } else { 0.0 }).collect(),
    )?);
    let halves = match order {
        CxOrder::SwapThenPhase => vec![swap, phase],
        CxOrder::PhaseThenSwap => vec![phase, swap],
    };
    Ok(LayerFragment::new(halves))
}

/// How [`pack_with`] joins fragments whose boundary half-layers have the same type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Packing {
    /// Insert a zero half-layer between same-type neighbours, except that an
    /// H fragment's opening γ is added onto a preceding γ.
    #[default]
    Balanced,
    /// Always insert a zero half-layer; never merge.
    PadOnly,
}

fn zero_like_opposite(half: &HalfLayer, n: usize) -> HalfLayer {
    match half {
        HalfLayer::Gamma(_) => HalfLayer::Beta(BetaLayer::zero(n).expect("validated register")),
        HalfLayer::Beta(_) => HalfLayer::Gamma(GammaLayer::zero(n).expect("validated register")),
    }
}

fn push_alternating(seq: &mut Vec<HalfLayer>, half: HalfLayer, n: usize) {
    match seq.last() {
        None if !half.is_gamma() => seq.push(zero_like_opposite(&half, n)),
        Some(last) if last.is_gamma() == half.is_gamma() => seq.push(zero_like_opposite(&half, n)),
        _ => {}
    }
    seq.push(half);
}

fn pair_up(seq: Vec<HalfLayer>, n: usize) -> Result<Schedule> {
    let mut layers = Vec::with_capacity(seq.len() / 2 + 1);
    let mut it = seq.into_iter();
    while let Some(first) = it.next() {
        let HalfLayer::Gamma(g) = first else { unreachable!("alternation starts every pair with γ") };
        let b = match it.next() {
            Some(HalfLayer::Beta(b)) => b,
            Some(HalfLayer::Gamma(_)) => unreachable!("alternation forbids γγ"),
            None => BetaLayer::zero(n)?,
        };
        layers.push((g, b));
    }
    if layers.is_empty() {
        layers.push((GammaLayer::zero(n)?, BetaLayer::zero(n)?));
    }
    Schedule::new(n, layers)
}

pub fn pack(fragments: &[LayerFragment], n: usize) -> Result<Schedule> {
    pack_with(fragments, n, Packing::default())
}

/// Concatenates fragments into strictly alternating γ/β half-layers that
/// start with γ and end with β, then pairs them into layers.
pub fn pack_with(fragments: &[LayerFragment], n: usize, packing: Packing) -> Result<Schedule> {
    dim_for_qubits(n)?;
    let mut seq: Vec<HalfLayer> = Vec::new();
    for fragment in fragments {
        for h in &fragment.halves {
            if h.num_qubits() != n {
                return Err(Error::DimensionMismatch { expected: n, found: h.num_qubits() });
            }
        }
        let mut halves = fragment.halves.iter().cloned().peekable();
        if packing == Packing::Balanced && fragment.absorbs_leading_phase {
            if let (Some(HalfLayer::Gamma(prev)), Some(HalfLayer::Gamma(lead))) = (seq.last_mut(), halves.peek()) {
                *prev = prev.merged(lead)?;
                halves.next();
            }
        }
        for h in halves {
            push_alternating(&mut seq, h, n);
        }
    }
    pair_up(seq, n)
}

/// Removes zero β half-layers that separate two γ half-layers and adds the γ
/// angles together. Never changes the schedule unitary.
pub fn merge_phase_layers(s: &Schedule) -> Result<Schedule> {
    let n = s.num_qubits();
    let mut out: Vec<HalfLayer> = Vec::new();
    for (_, half) in s.half_layers() {
        if let HalfLayer::Gamma(g) = &half {
            let len = out.len();
            if len >= 2 {
                if let (HalfLayer::Gamma(prev), HalfLayer::Beta(pad)) = (&out[len - 2], &out[len - 1]) {
                    if pad.is_zero() {
                        let merged = prev.merged(g)?;
                        out.truncate(len - 2);
                        out.push(HalfLayer::Gamma(merged));
                        continue;
                    }
                }
            }
        }
        push_alternating(&mut out, half, n);
    }
    // A trailing zero β may have been absorbed by the merge above.
    pair_up(out, n)
}

/// Options for [`transpile_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TranspileOptions {
    pub packing: Packing,
    pub cx_order: CxOrder,
}

pub fn gate_fragment(gate: Gate, n: usize, cx_order: CxOrder) -> Result<LayerFragment> {
    match gate {
        Gate::H(q) => fragment_h(&[q], n),
        Gate::T(q) => fragment_t(q, n),
        Gate::Cx { control, target } => fragment_cx_ordered(control, target, n, cx_order),
    }
}

pub fn transpile(circuit: &GateCircuit) -> Result<Schedule> {
    transpile_with(circuit, &TranspileOptions::default())
}

pub fn transpile_with(circuit: &GateCircuit, options: &TranspileOptions) -> Result<Schedule> {
    let n = circuit.n;
    let fragments = circuit.gates.iter().map(|&g| gate_fragment(g, n, options.cx_order)).collect::<Result<Vec<_>>>()?;
    pack_with(&fragments, n, options.packing)
}

/// Layer count of a transpiled circuit against the `1.5 N` bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayerCount {
    pub pairs: usize,
    pub bound: usize,
    pub gates: usize,
}

/// `ceil(1.5 N)`, but at least one layer since every schedule has one.
pub fn layer_bound(gates: usize) -> usize {
    ((3 * gates).div_ceil(2)).max(1)
}

pub fn layer_count(circuit: &GateCircuit) -> Result<LayerCount> {
    let pairs = transpile(circuit)?.num_layers();
    let gates = circuit.gates.len();
    let bound = layer_bound(gates);
    if pairs > bound {
        return Err(Error::LayerBoundExceeded { pairs, bound, gates });
    }
    Ok(LayerCount { pairs, bound, gates })
}

/// Each nonzero half-layer becomes one walk step whose time equals the
/// spectral norm of its adjacency, so the walk applies exactly `e^{-iA}`.
pub fn schedule_to_dynamic_graph(s: &Schedule) -> Result<DynamicGraph> {
    let n = s.num_qubits();
    let mut dg = DynamicGraph::empty(n)?;
    for (_, half) in s.half_layers() {
        if half.is_zero() {
            continue;
        }
        let graph = match &half {
            HalfLayer::Gamma(g) => WeightedGraph::new(
                n,
                g.angles().iter().enumerate().filter(|(_, &a)| a != 0.0).map(|(z, &a)| (z, a)),
                [],
            )?,
            HalfLayer::Beta(b) => {
                for (e, &a) in b.edge_angles() {
                    if a < 0.0 {
                        return Err(Error::NegativeCoupledAngle { u: e.u(), w: e.w(), angle: a });
                    }
                }
                WeightedGraph::new(n, [], b.edge_angles().iter().map(|(e, &a)| (e.u(), e.w(), a)))?
            }
        };
        let time = spectral_norm(&adjacency(&graph));
        dg.push(graph, time)?;
    }
    Ok(dg)
}

/// Inverse of [`schedule_to_dynamic_graph`] for walks inside the ma-QAOA
/// restriction: every step is loops-only or single-bit-flip-edges-only.
pub fn dynamic_graph_to_schedule(dg: &DynamicGraph) -> Result<Schedule> {
    let n = dg.num_qubits();
    let mut halves = Vec::with_capacity(dg.len());
    for (i, step) in dg.steps().iter().enumerate() {
        let g = &step.graph;
        if g.is_empty() {
            return Err(Error::EmptyStep(i));
        }
        if !g.loops().is_empty() && !g.edges().is_empty() {
            return Err(Error::MixedStep { step: i });
        }
        let scale = step.time / spectral_norm(&adjacency(g));
        if g.edges().is_empty() {
            let mut gamma = vec![0.0; 1 << n];
            for (&v, &w) in g.loops() {
                gamma[v] = w * scale;
            }
            halves.push(HalfLayer::Gamma(GammaLayer::new(gamma)?));
        } else {
            let mut edges = Vec::with_capacity(g.edges().len());
            for (&(u, w), &weight) in g.edges() {
                let edge = HypercubeEdge::new(u, w, n).map_err(|e| match e {
                    Error::NotHypercubeEdge { u, w, differing_bits } => {
                        Error::OutsideRestriction { step: i, u, w, differing_bits }
                    }
                    other => other,
                })?;
                edges.push((edge, weight * scale));
            }
            halves.push(HalfLayer::Beta(BetaLayer::new(n, edges)?));
        }
    }
    pack_with(&[LayerFragment::new(halves)], n, Packing::PadOnly)
}
