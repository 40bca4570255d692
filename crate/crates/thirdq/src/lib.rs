//! Exact solver for Lindblad master equations of quadratic open Fermi systems.
//!
//! A system of `n` fermions (or spins 1/2 through the Jordan-Wigner mapping)
//! with a Hamiltonian quadratic in Majorana operators and bath operators
//! linear in them is solvable in terms of a single `4n x 4n` complex
//! antisymmetric matrix, the *shape matrix* of the Liouvillean. Its paired
//! eigenvalues (*rapidities*) give the full relaxation spectrum, the spectral
//! gap, and the uniqueness of the non-equilibrium steady state (NESS); its
//! eigenvectors give every steady-state correlation function.
//!
//! The crate is organized around that pipeline:
//!
//! - [`majorana`]: quadratic Hamiltonians, linear baths, shape-matrix assembly
//! - [`spectral`]: normal master modes, rapidities, Liouvillean spectrum
//! - [`ness`]: steady-state covariance matrix and Wick-theorem moments
//! - [`xychain`]: open XY spin chains and their transport observables
//! - [`ising`]: closed-form results for the homogeneous transverse Ising chain
//! - [`oracle`]: brute-force dense superoperator ground truth for small `n`
//! - [`disorder`]: disordered-chain ensembles with reproducible sampling

pub mod disorder;
pub mod exec;
pub mod ising;
pub mod linalg;
pub mod majorana;
pub mod ness;
pub mod oracle;
pub mod pfaffian;
pub mod spectral;
pub mod xychain;

use num_complex::Complex64;

/// Errors produced anywhere in the solver pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid model: {0}")]
    InvalidSpec(String),

    /// The shape matrix could not be brought to canonical form; its
    /// eigenvector system is numerically defective.
    #[error("shape matrix is near defective ({0})")]
    NearDefective(String),

    /// Some eigenvalue of the shape matrix has no -beta partner.
    #[error("eigenvalue pairing failed: best unpaired residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    PairingFailure { residual: f64, tolerance: f64 },

    /// Zero rapidities present: the steady state is a 2^d-dimensional manifold.
    #[error("steady state is not unique: {zero_rapidities} zero rapidities (2^{zero_rapidities}-dimensional NESS manifold)")]
    NonUniqueNess { zero_rapidities: usize },

    #[error("size cap exceeded: n = {n} is larger than the supported {cap}")]
    SizeCap { n: usize, cap: usize },

    /// Dense-oracle steady-state kernel has dimension > 1.
    #[error("degenerate Liouvillean kernel of dimension {dim}")]
    DegenerateKernel { dim: usize },

    /// Quasi-momentum branch cannot be resolved: both roots are unimodular
    /// off the propagating band.
    #[error("quasi-momentum branch ambiguity at beta = {beta}")]
    BranchAmbiguity { beta: Complex64 },

    /// The scattering-matrix denominator vanishes at this rapidity.
    #[error("scattering resonance: tau(beta) = 0 at beta = {beta}")]
    TauZero { beta: Complex64 },

    /// A computed quantity violated a validation tolerance.
    #[error("numerical validation failed: {0}")]
    Numerics(String),

    #[error(transparent)]
    Linalg(#[from] ndarray_linalg::error::LinalgError),
}

pub type Result<T> = std::result::Result<T, Error>;
