/// Numerical tolerances shared by every module.
///
/// `Tolerances::default()` holds the values the library is validated against;
/// tests may tighten individual fields and pass the record to the `*_with`
/// variants of the kernel functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Maximum `|M[i][j] - conj(M[j][i])|` accepted for a Hermitian matrix.
    pub hermitian: f64,
    /// Maximum `||M^dag M - I||_F` accepted for a unitary matrix.
    pub unitary: f64,
    /// Maximum `| ||psi|| - 1 |` accepted for a state.
    pub norm: f64,
    /// Series truncation: stop once a term is below this fraction of the partial sum.
    pub series_truncation: f64,
    /// Relative residual at which power iteration stops.
    pub spectral: f64,
    /// Distance within which an angle prints as a multiple of pi/4.
    pub angle_snap: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        DEFAULT
    }
}

/// The library-wide defaults.
pub const DEFAULT: Tolerances = Tolerances {
    hermitian: 1e-12,
    unitary: 1e-10,
    norm: 1e-10,
    series_truncation: 1e-16,
    spectral: 1e-10,
    angle_snap: 1e-12,
};
