//! Dense complex linear algebra for registers of up to [`MAX_QUBITS`] qubits.
//!
//! Matrices are stored row-major. Two validated wrappers carry the structural
//! promises the rest of the crate relies on: [`HermitianOperator`] (adjacency
//! matrices, Hamiltonians) and [`UnitaryMatrix`] (evolutions, gates).

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerance::{Tolerances, DEFAULT};
use crate::MAX_QUBITS;

pub type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Number of qubits for a dimension, rejecting anything that is not a power of
/// two or exceeds the dense limit.
pub fn qubits_for_dim(dim: usize) -> Result<usize> {
    if dim == 0 || !dim.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(dim));
    }
    let n = dim.trailing_zeros() as usize;
    if n > MAX_QUBITS {
        return Err(Error::RegisterTooLarge(n));
    }
    Ok(n)
}

/// Dimension `2^n` of an `n`-qubit register.
pub fn dim_for_qubits(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::EmptyRegister);
    }
    if n > MAX_QUBITS {
        return Err(Error::RegisterTooLarge(n));
    }
    Ok(1 << n)
}

/// Square complex matrix of dimension `2^n`.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        qubits_for_dim(dim)?;
        Ok(Self { dim, data: vec![ZERO; dim * dim] })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.data[i * dim + i] = ONE;
        }
        Ok(m)
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for r in 0..dim {
            for c in 0..dim {
                m.data[r * dim + c] = f(r, c);
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let dim = rows.len();
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
        }
        Self::from_fn(dim, |r, c| rows[r][c])
    }

    /// Real matrix from rows, convenient for adjacency matrices.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<C64>> = rows.iter().map(|r| r.iter().map(|&x| C64::new(x, 0.0)).collect()).collect();
        Self::from_rows(&rows)
    }

    pub fn from_diagonal(diag: &[C64]) -> Result<Self> {
        let mut m = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * m.dim + i] = d;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.dim).map(|i| self[(i, i)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut out = self.clone();
        for r in 0..d {
            for c in 0..d {
                out.data[c * d + r] = self.data[r * d + c].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(Self { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(Self { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() })
    }

    /// `self * other`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(self.matmul_unchecked(other))
    }

    fn matmul_unchecked(&self, other: &Self) -> Self {
        let d = self.dim;
        let mut out = vec![ZERO; d * d];
        for r in 0..d {
            let row = &self.data[r * d..(r + 1) * d];
            let out_row = &mut out[r * d..(r + 1) * d];
            for (k, &a) in row.iter().enumerate() {
                if a == ZERO {
                    continue;
                }
                let other_row = &other.data[k * d..(k + 1) * d];
                for (o, &b) in out_row.iter_mut().zip(other_row) {
                    *o += a * b;
                }
            }
        }
        Self { dim: d, data: out }
    }

    pub fn apply_to(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        Ok(self.apply_unchecked(v))
    }

    fn apply_unchecked(&self, v: &[C64]) -> Vec<C64> {
        let d = self.dim;
        (0..d).map(|r| self.data[r * d..(r + 1) * d].iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Induced 1-norm (maximum absolute column sum).
    pub fn one_norm(&self) -> f64 {
        let d = self.dim;
        (0..d).map(|c| (0..d).map(|r| self.data[r * d + c].norm()).sum::<f64>()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    pub fn is_diagonal(&self) -> bool {
        let d = self.dim;
        (0..d).all(|r| (0..d).all(|c| r == c || self.data[r * d + c] == ZERO))
    }

    /// Worst Hermitian-symmetry violation as `(row, col, deviation)`.
    pub fn hermitian_deviation(&self) -> (usize, usize, f64) {
        let d = self.dim;
        let mut worst = (0, 0, 0.0);
        for r in 0..d {
            for c in r..d {
                let dev = (self.data[r * d + c] - self.data[c * d + r].conj()).norm();
                if dev > worst.2 {
                    worst = (r, c, dev);
                }
            }
        }
        worst
    }

    /// `||M^dag M - I||_F`.
    pub fn unitarity_deviation(&self) -> f64 {
        let prod = self.adjoint().matmul_unchecked(self);
        let d = self.dim;
        let mut acc = 0.0;
        for r in 0..d {
            for c in 0..d {
                let target = if r == c { ONE } else { ZERO };
                acc += (prod.data[r * d + c] - target).norm_sqr();
            }
        }
        acc.sqrt()
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.dim + c]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    /// Panics on dimension mismatch; use [`ComplexMatrix::matmul`] for a checked product.
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        self.matmul_unchecked(rhs)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for r in 0..self.dim {
            write!(f, " ")?;
            for c in 0..self.dim {
                let x = self[(r, c)];
                write!(f, " {:+.4}{:+.4}i", x.re, x.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// A matrix verified to be Hermitian.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianOperator(ComplexMatrix);

impl HermitianOperator {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        Self::new_with(m, &DEFAULT)
    }

    pub fn new_with(m: ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        let (row, col, deviation) = m.hermitian_deviation();
        if deviation > tol.hermitian {
            return Err(Error::NotHermitian { row, col, deviation });
        }
        Ok(Self(m))
    }

    /// Real symmetric matrices built entry by entry in this crate.
    pub(crate) fn from_unchecked(m: ComplexMatrix) -> Self {
        Self(m)
    }

    pub fn zeros(dim: usize) -> Result<Self> {
        Ok(Self(ComplexMatrix::zeros(dim)?))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self(self.0.scale(C64::new(s, 0.0)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.add(&other.0)?))
    }

    pub fn is_zero(&self) -> bool {
        self.0.data.iter().all(|&x| x == ZERO)
    }
}

/// A matrix verified (or constructed) to be unitary.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryMatrix(ComplexMatrix);

impl UnitaryMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        Self::new_with(m, &DEFAULT)
    }

    pub fn new_with(m: ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        let deviation = m.unitarity_deviation();
        if deviation > tol.unitary {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Self(m))
    }

    /// Products and closed forms of unitaries built inside this crate.
    pub(crate) fn from_unchecked(m: ComplexMatrix) -> Self {
        Self(m)
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Ok(Self(ComplexMatrix::identity(dim)?))
    }

    /// Diagonal unitary `diag(e^{i phases})`.
    pub fn from_phases(phases: &[f64]) -> Result<Self> {
        let diag: Vec<C64> = phases.iter().map(|&p| C64::from_polar(1.0, p)).collect();
        Ok(Self(ComplexMatrix::from_diagonal(&diag)?))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    /// The unitary that applies `self` first and `next` afterwards, `next * self`.
    pub fn then(&self, next: &UnitaryMatrix) -> Result<Self> {
        Ok(Self(next.0.matmul(&self.0)?))
    }
}

/// Normalized amplitude vector over the `2^n` computational basis states.
#[derive(Clone, Debug, PartialEq)]
pub struct Statevector {
    n: usize,
    amps: Vec<C64>,
}

impl Statevector {
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        Self::new_with(amps, &DEFAULT)
    }

    pub fn new_with(amps: Vec<C64>, tol: &Tolerances) -> Result<Self> {
        let n = qubits_for_dim(amps.len())?;
        let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > tol.norm {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self { n, amps })
    }

    pub fn basis(n: usize, z: usize) -> Result<Self> {
        let dim = dim_for_qubits(n)?;
        if z >= dim {
            return Err(Error::InvalidBasisIndex { index: z, dim });
        }
        let mut amps = vec![ZERO; dim];
        amps[z] = ONE;
        Ok(Self { n, amps })
    }

    /// Equal superposition over all basis states.
    pub fn plus(n: usize) -> Result<Self> {
        let dim = dim_for_qubits(n)?;
        let a = C64::new(1.0 / (dim as f64).sqrt(), 0.0);
        Ok(Self { n, amps: vec![a; dim] })
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Euclidean distance to another state, without phase alignment.
    pub fn distance(&self, other: &Self) -> f64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt()
    }

    /// `min_phi ||self - e^{i phi} other||`.
    pub fn phase_aligned_distance(&self, other: &Self) -> f64 {
        let overlap: C64 = other.amps.iter().zip(&self.amps).map(|(b, a)| b.conj() * a).sum();
        let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { ONE };
        self.amps.iter().zip(&other.amps).map(|(a, b)| (a - phase * b).norm_sqr()).sum::<f64>().sqrt()
    }
}

/// `e^{-iHt}` by scaling and squaring with a truncated Taylor series.
pub fn herm_exp(h: &HermitianOperator, t: f64) -> UnitaryMatrix {
    herm_exp_with(h, t, &DEFAULT)
}

pub fn herm_exp_with(h: &HermitianOperator, t: f64, tol: &Tolerances) -> UnitaryMatrix {
    let m = h.matrix();
    let dim = m.dim();
    if t == 0.0 || h.is_zero() {
        return UnitaryMatrix::from_unchecked(ComplexMatrix::identity(dim).expect("valid dim"));
    }
    if m.is_diagonal() {
        let phases: Vec<f64> = m.diagonal().iter().map(|d| -d.re * t).collect();
        return UnitaryMatrix::from_phases(&phases).expect("valid dim");
    }

    let a = m.scale(C64::new(0.0, -t));
    // Scale until the 1-norm is at most 1/2 so the series converges quickly.
    let norm = a.one_norm();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let b = a.scale(C64::new(0.5f64.powi(squarings as i32), 0.0));

    let mut sum = ComplexMatrix::identity(dim).expect("valid dim");
    let mut term = sum.clone();
    for k in 1..=64 {
        term = term.matmul_unchecked(&b).scale(C64::new(1.0 / k as f64, 0.0));
        sum = sum.add(&term).expect("same dim");
        if term.frobenius_norm() <= tol.series_truncation * sum.frobenius_norm() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum.matmul_unchecked(&sum);
    }
    UnitaryMatrix::from_unchecked(sum)
}

/// Largest absolute eigenvalue of a Hermitian matrix.
///
/// Exact for diagonal matrices. Otherwise power iteration on `H^2` from the
/// normalized all-ones vector, falling back to basis vectors when the seed lies
/// in the kernel.
pub fn spectral_norm(h: &HermitianOperator) -> f64 {
    spectral_norm_with(h, &DEFAULT)
}

pub fn spectral_norm_with(h: &HermitianOperator, tol: &Tolerances) -> f64 {
    const MAX_ITERATIONS: usize = 200_000;

    let m = h.matrix();
    let dim = m.dim();
    if m.is_diagonal() {
        return m.diagonal().iter().map(|d| d.norm()).fold(0.0, f64::max);
    }
    if h.is_zero() {
        return 0.0;
    }

    let ones = vec![C64::new(1.0 / (dim as f64).sqrt(), 0.0); dim];
    let seeds = std::iter::once(ones).chain((0..dim).map(|i| {
        let mut e = vec![ZERO; dim];
        e[i] = ONE;
        e
    }));

    for seed in seeds {
        let mut v = seed;
        let mut estimate = 0.0;
        let mut degenerate = false;
        for _ in 0..MAX_ITERATIONS {
            let hv = m.apply_unchecked(&v);
            let y = m.apply_unchecked(&hv);
            let mu: f64 = hv.iter().map(|x| x.norm_sqr()).sum();
            let y_norm = y.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            if mu == 0.0 || y_norm == 0.0 {
                degenerate = true;
                break;
            }
            estimate = mu;
            let residual = y.iter().zip(&v).map(|(a, b)| (a - b * mu).norm_sqr()).sum::<f64>().sqrt();
            if residual <= tol.spectral * mu {
                break;
            }
            v = y.into_iter().map(|x| x / y_norm).collect();
        }
        if !degenerate {
            return estimate.sqrt();
        }
    }
    0.0
}

/// `min_phi ||U - e^{i phi} V||_F` together with the minimizing `phi`.
pub fn phase_alignment(u: &ComplexMatrix, v: &ComplexMatrix) -> Result<(f64, f64)> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch { expected: u.dim(), found: v.dim() });
    }
    // <V, U> = tr(V^dag U); choosing e^{i phi} along it maximizes Re<U, e^{i phi} V>.
    let overlap: C64 = v.data().iter().zip(u.data()).map(|(b, a)| b.conj() * a).sum();
    let phi = if overlap.norm() > 0.0 { overlap.arg() } else { 0.0 };
    let phase = C64::from_polar(1.0, phi);
    let dist = u.data().iter().zip(v.data()).map(|(a, b)| (a - phase * b).norm_sqr()).sum::<f64>().sqrt();
    Ok((dist, phi))
}

/// `min_phi ||U - e^{i phi} V||_F`.
pub fn phase_aligned_distance(u: &ComplexMatrix, v: &ComplexMatrix) -> Result<f64> {
    phase_alignment(u, v).map(|(d, _)| d)
}

/// Plain Frobenius distance `||U - V||_F`.
pub fn frobenius_distance(u: &ComplexMatrix, v: &ComplexMatrix) -> Result<f64> {
    Ok(u.sub(v)?.frobenius_norm())
}

pub fn apply_matrix(u: &UnitaryMatrix, psi: &Statevector) -> Result<Statevector> {
    let amps = u.matrix().apply_to(psi.amplitudes())?;
    let out = Statevector { n: psi.n, amps };
    debug_assert!((out.norm() - 1.0).abs() <= 1e-9, "norm drift {}", out.norm());
    Ok(out)
}
