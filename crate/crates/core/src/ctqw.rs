//! Continuous-time quantum walks on dynamic graphs.
//!
//! A dynamic graph is an ordered list of `(graph, time)` steps on `2^n`
//! vertices; each step evolves the walker by `e^{-i A t / ||A||}` with `A` the
//! weighted adjacency matrix (self-loops on the diagonal) and `||A||` its
//! spectral norm.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::{
    apply_matrix, dim_for_qubits, herm_exp, spectral_norm, ComplexMatrix, HermitianOperator, Statevector,
    UnitaryMatrix, C64,
};
use crate::operators::{check_qubit, qubit_bit, qubit_mask};

/// Undirected weighted graph on `2^n` vertices with optional self-loops.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), f64>,
    loops: BTreeMap<usize, f64>,
}

fn check_weight(w: f64) -> Result<()> {
    if !(w.is_finite() && w > 0.0) {
        return Err(Error::InvalidWeight(w));
    }
    Ok(())
}

impl WeightedGraph {
    /// Graph with no edges and no loops; every vertex is isolated.
    pub fn empty(n: usize) -> Result<Self> {
        dim_for_qubits(n)?;
        Ok(Self { n, edges: BTreeMap::new(), loops: BTreeMap::new() })
    }

    pub fn new(
        n: usize,
        loops: impl IntoIterator<Item = (usize, f64)>,
        edges: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (v, w) in loops {
            g.add_loop(v, w)?;
        }
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn num_vertices(&self) -> usize {
        1 << self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.num_vertices() {
            return Err(Error::InvalidVertex { vertex: v, num_vertices: self.num_vertices() });
        }
        Ok(())
    }

    pub fn add_loop(&mut self, v: usize, w: f64) -> Result<()> {
        self.check_vertex(v)?;
        check_weight(w)?;
        if self.loops.insert(v, w).is_some() {
            return Err(Error::DuplicateEdge(v, v));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize, w: f64) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfPair(u, v));
        }
        check_weight(w)?;
        if self.edges.insert((u.min(v), u.max(v)), w).is_some() {
            return Err(Error::DuplicateEdge(u, v));
        }
        Ok(())
    }

    /// Edges keyed by `(smaller, larger)` endpoint.
    pub fn edges(&self) -> &BTreeMap<(usize, usize), f64> {
        &self.edges
    }

    pub fn loops(&self) -> &BTreeMap<usize, f64> {
        &self.loops
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty() && self.loops.is_empty()
    }
}

/// Weighted adjacency matrix with self-loop weights on the diagonal.
pub fn adjacency(g: &WeightedGraph) -> HermitianOperator {
    let mut m = ComplexMatrix::zeros(g.num_vertices()).expect("validated register");
    for (&v, &w) in &g.loops {
        m[(v, v)] = C64::new(w, 0.0);
    }
    for (&(u, v), &w) in &g.edges {
        m[(u, v)] = C64::new(w, 0.0);
        m[(v, u)] = C64::new(w, 0.0);
    }
    HermitianOperator::new(m).expect("real symmetric")
}

/// One `(graph, time)` pair of a dynamic graph.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkStep {
    pub graph: WeightedGraph,
    pub time: f64,
}

/// Ordered sequence of walk steps on a common vertex set.
#[derive(Debug, Clone, PartialEq)]
pub struct DynamicGraph {
    n: usize,
    steps: Vec<WalkStep>,
}

impl DynamicGraph {
    pub fn new(n: usize, steps: Vec<(WeightedGraph, f64)>) -> Result<Self> {
        dim_for_qubits(n)?;
        let mut out = Self { n, steps: Vec::with_capacity(steps.len()) };
        for (graph, time) in steps {
            out.push(graph, time)?;
        }
        Ok(out)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, vec![])
    }

    pub fn push(&mut self, graph: WeightedGraph, time: f64) -> Result<()> {
        if graph.n != self.n {
            return Err(Error::DimensionMismatch { expected: 1 << self.n, found: graph.num_vertices() });
        }
        if !(time.is_finite() && time > 0.0) {
            return Err(Error::InvalidTime(time));
        }
        self.steps.push(WalkStep { graph, time });
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[WalkStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// `e^{-i A t / ||A||}` for a single graph.
pub fn step_unitary(g: &WeightedGraph, t: f64) -> Result<UnitaryMatrix> {
    let a = adjacency(g);
    let norm = spectral_norm(&a);
    if norm == 0.0 {
        return Err(Error::ZeroAdjacency);
    }
    Ok(herm_exp(&a, t / norm))
}

pub fn walk_step(g: &WeightedGraph, t: f64, psi: &Statevector) -> Result<Statevector> {
    if psi.num_qubits() != g.n {
        return Err(Error::DimensionMismatch { expected: g.num_vertices(), found: psi.dim() });
    }
    apply_matrix(&step_unitary(g, t)?, psi)
}

#[derive(Debug, Clone, PartialEq)]
pub struct WalkRun {
    pub final_state: Statevector,
    /// State after each step, in order.
    pub trace: Vec<Statevector>,
}

pub fn run_walk(dg: &DynamicGraph, psi0: &Statevector) -> Result<WalkRun> {
    if psi0.num_qubits() != dg.n {
        return Err(Error::DimensionMismatch { expected: 1 << dg.n, found: psi0.dim() });
    }
    let mut state = psi0.clone();
    let mut trace = Vec::with_capacity(dg.steps.len());
    for step in &dg.steps {
        state = walk_step(&step.graph, step.time, &state)?;
        trace.push(state.clone());
    }
    Ok(WalkRun { final_state: state, trace })
}

/// Composite unitary of the whole dynamic graph, first step applied first.
pub fn walk_unitary(dg: &DynamicGraph) -> Result<UnitaryMatrix> {
    let mut acc = UnitaryMatrix::identity(1 << dg.n)?;
    for step in &dg.steps {
        acc = acc.then(&step_unitary(&step.graph, step.time)?)?;
    }
    Ok(acc)
}

fn loops_where(n: usize, pred: impl Fn(usize) -> bool) -> Result<WeightedGraph> {
    WeightedGraph::new(n, (0..1usize << n).filter(|&z| pred(z)).map(|z| (z, 1.0)), [])
}

/// Unit edges `(z, z ^ flip)` for every `z` with the flip bit clear that satisfies `pred`.
fn flip_edges_where(n: usize, flip: usize, pred: impl Fn(usize) -> bool) -> Result<WeightedGraph> {
    let mask = qubit_mask(flip, n);
    let edges = (0..1usize << n).filter(|&z| z & mask == 0 && pred(z)).map(|z| (z, z | mask, 1.0));
    WeightedGraph::new(n, [], edges)
}

/// H on qubit `q`: loops on bit-`q`-set vertices for `3π/2`, the direction-`q`
/// hypercube edges for `π/4`, then the loops again for `3π/2`.
pub fn gadget_h(q: usize, n: usize) -> Result<DynamicGraph> {
    dim_for_qubits(n)?;
    check_qubit(q, n)?;
    let loops = loops_where(n, |z| qubit_bit(z, q, n) == 1)?;
    let cube = flip_edges_where(n, q, |_| true)?;
    DynamicGraph::new(n, vec![(loops.clone(), 3.0 * PI / 2.0), (cube, PI / 4.0), (loops, 3.0 * PI / 2.0)])
}

/// T on qubit `q`: loops on bit-`q`-set vertices for `7π/4`.
pub fn gadget_t(q: usize, n: usize) -> Result<DynamicGraph> {
    dim_for_qubits(n)?;
    check_qubit(q, n)?;
    DynamicGraph::new(n, vec![(loops_where(n, |z| qubit_bit(z, q, n) == 1)?, 7.0 * PI / 4.0)])
}

/// CX: target-flip edges among control-set vertices for `π/2`, then loops on
/// control-set vertices for `3π/2`.
pub fn gadget_cx(control: usize, target: usize, n: usize) -> Result<DynamicGraph> {
    dim_for_qubits(n)?;
    check_qubit(control, n)?;
    check_qubit(target, n)?;
    if control == target {
        return Err(Error::ControlEqualsTarget(control));
    }
    let swap = flip_edges_where(n, target, |z| qubit_bit(z, control, n) == 1)?;
    let phase = loops_where(n, |z| qubit_bit(z, control, n) == 1)?;
    DynamicGraph::new(n, vec![(swap, PI / 2.0), (phase, 3.0 * PI / 2.0)])
}
