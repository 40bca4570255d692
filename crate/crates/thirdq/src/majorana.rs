//! Quadratic Hamiltonians and linear baths in the Majorana basis, and the
//! assembly of the Liouvillean shape matrix.
//!
//! Majorana operators are indexed `1..=2n` with the interleaved site
//! convention: site `m` owns `w_{2m-1}` and `w_{2m}`. The shape matrix `A`
//! doubles every Majorana index once more, so index `j` of the Hamiltonian
//! matrix maps to rows/columns `2j-1` and `2j` of `A` (1-based).

use ndarray::Array2;
use num_complex::Complex64;

use crate::linalg::{c, max_abs, CMatrix, CVector};
use crate::{Error, Result};

/// Ingested Hamiltonian matrices whose antisymmetry defect exceeds this are
/// worth a warning to the caller.
pub const ANTISYMMETRY_WARN_TOL: f64 = 1e-9;

/// A Hamiltonian `H = sum_jk w_j H_jk w_k` with `H` antisymmetric `2n x 2n`.
///
/// The matrix is antisymmetrized on construction; the defect of the supplied
/// matrix is retained for reporting.
#[derive(Debug, Clone)]
pub struct QuadraticHamiltonian {
    n: usize,
    h: CMatrix,
    ingestion_defect: f64,
}

impl QuadraticHamiltonian {
    /// Build from a `2n x 2n` matrix, antisymmetrizing `(H - H^T)/2`.
    pub fn new(h: CMatrix) -> Result<Self> {
        let (rows, cols) = h.dim();
        if rows != cols || rows == 0 || rows % 2 != 0 {
            return Err(Error::DimensionMismatch(format!(
                "Hamiltonian matrix must be square of even dimension, got {rows}x{cols}"
            )));
        }
        let anti = (&h - &h.t()).mapv(|x| x * 0.5);
        let defect = max_abs(&(&h - &anti));
        Ok(Self { n: rows / 2, h: anti, ingestion_defect: defect })
    }

    /// Zero Hamiltonian on `n` sites.
    pub fn zero(n: usize) -> Self {
        Self { n, h: CMatrix::zeros((2 * n, 2 * n)), ingestion_defect: 0.0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.h
    }

    /// Antisymmetry defect of the matrix supplied at construction.
    /// Values above [`ANTISYMMETRY_WARN_TOL`] indicate a suspect input.
    pub fn ingestion_defect(&self) -> f64 {
        self.ingestion_defect
    }
}

/// Bath operators `L_mu = sum_j l_{mu,j} w_j`, one complex coupling vector of
/// length `2n` per operator.
#[derive(Debug, Clone)]
pub struct BathSpec {
    n: usize,
    couplings: Vec<CVector>,
}

impl BathSpec {
    pub fn new(n: usize, couplings: Vec<CVector>) -> Result<Self> {
        for (mu, l) in couplings.iter().enumerate() {
            if l.len() != 2 * n {
                return Err(Error::DimensionMismatch(format!(
                    "bath coupling vector {mu} has length {}, expected {}",
                    l.len(),
                    2 * n
                )));
            }
        }
        Ok(Self { n, couplings })
    }

    /// Bath with no operators (closed system).
    pub fn empty(n: usize) -> Self {
        Self { n, couplings: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn couplings(&self) -> &[CVector] {
        &self.couplings
    }

    /// The Hermitian positive semidefinite matrix `M_jk = sum_mu l_{mu,j} l*_{mu,k}`.
    pub fn induced_matrix(&self) -> CMatrix {
        let d = 2 * self.n;
        let mut m = CMatrix::zeros((d, d));
        for l in &self.couplings {
            for j in 0..d {
                for k in 0..d {
                    m[(j, k)] += l[j] * l[k].conj();
                }
            }
        }
        m
    }
}

/// The `4n x 4n` complex antisymmetric shape matrix of the Liouvillean,
/// together with the scalar `A0 = 2 tr M`.
#[derive(Debug, Clone)]
pub struct ShapeMatrix {
    n: usize,
    a: CMatrix,
    a0: f64,
}

impl ShapeMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.a
    }

    pub fn a0(&self) -> f64 {
        self.a0
    }

    pub fn dim(&self) -> usize {
        4 * self.n
    }
}

/// Assemble the shape matrix from an antisymmetrized Hamiltonian matrix and
/// the induced bath matrix `M`.
///
/// Block entries, for Majorana indices `j, k` (1-based):
///
/// ```text
/// A[2j-1, 2k-1] = -2i H_jk + M_jk - M_kj
/// A[2j-1, 2k  ] =  2i M_jk
/// A[2j,   2k-1] = -2i M_kj
/// A[2j,   2k  ] = -2i H_jk - M_jk + M_kj
/// ```
///
/// This is the convention that reproduces the single-fermion bath block and
/// the block-tridiagonal chain matrix, and whose steady state matches the
/// dense brute-force solver.
pub fn build_shape_matrix(h: &QuadraticHamiltonian, m: &CMatrix) -> Result<ShapeMatrix> {
    let d = 2 * h.n();
    if m.dim() != (d, d) {
        return Err(Error::DimensionMismatch(format!(
            "bath matrix is {:?}, expected {d}x{d}",
            m.dim()
        )));
    }
    let two_i = c(0.0, 2.0);
    let hm = h.matrix();
    let mut a = CMatrix::zeros((2 * d, 2 * d));
    for j in 0..d {
        for k in 0..d {
            let hjk = hm[(j, k)];
            let mjk = m[(j, k)];
            let mkj = m[(k, j)];
            a[(2 * j, 2 * k)] = -two_i * hjk + mjk - mkj;
            a[(2 * j, 2 * k + 1)] = two_i * mjk;
            a[(2 * j + 1, 2 * k)] = -two_i * mkj;
            a[(2 * j + 1, 2 * k + 1)] = -two_i * hjk - mjk + mkj;
        }
    }
    let a0 = 2.0 * (0..d).map(|j| m[(j, j)].re).sum::<f64>();
    Ok(ShapeMatrix { n: h.n(), a, a0 })
}

/// Convenience: shape matrix directly from a Hamiltonian and a bath.
pub fn shape_matrix_of(h: &QuadraticHamiltonian, bath: &BathSpec) -> Result<ShapeMatrix> {
    if bath.n() != h.n() {
        return Err(Error::DimensionMismatch(format!(
            "bath is on {} sites, Hamiltonian on {}",
            bath.n(),
            h.n()
        )));
    }
    build_shape_matrix(h, &bath.induced_matrix())
}

/// The 4x4 matrix `R` appearing in the single-site field block `-h R`.
pub fn field_block() -> Array2<Complex64> {
    let mut r = CMatrix::zeros((4, 4));
    r[(0, 2)] = c(1.0, 0.0);
    r[(1, 3)] = c(1.0, 0.0);
    r[(2, 0)] = c(-1.0, 0.0);
    r[(3, 1)] = c(-1.0, 0.0);
    r
}

/// The 4x4 bath block `B_{Gamma+,Gamma-}` of a canonical single-site bath
/// pair, with `Gamma± = Gamma_2 ± Gamma_1`.
pub fn bath_block(gamma_plus: f64, gamma_minus: f64) -> Array2<Complex64> {
    let gp = gamma_plus;
    let gm = gamma_minus;
    let mut b = CMatrix::zeros((4, 4));
    b[(0, 1)] = c(0.0, 0.5 * gp);
    b[(0, 2)] = c(0.0, -0.5 * gm);
    b[(0, 3)] = c(0.5 * gm, 0.0);
    b[(1, 2)] = c(0.5 * gm, 0.0);
    b[(1, 3)] = c(0.0, 0.5 * gm);
    b[(2, 3)] = c(0.0, 0.5 * gp);
    for j in 0..4 {
        for k in 0..j {
            b[(j, k)] = -b[(k, j)];
        }
    }
    b
}

/// The canonical single-site bath pair `L_1 = (1/2) sqrt(G1) (w_a - i w_b)`,
/// `L_2 = (1/2) sqrt(G2) (w_a + i w_b)` acting on Majorana indices `a = 2m-1`,
/// `b = 2m` of site `m` (0-based `site`).
pub fn canonical_site_bath(n: usize, site: usize, gamma1: f64, gamma2: f64) -> Vec<CVector> {
    let d = 2 * n;
    let a = 2 * site;
    let b = 2 * site + 1;
    let mut l1 = CVector::zeros(d);
    l1[a] = c(0.5 * gamma1.sqrt(), 0.0);
    l1[b] = c(0.0, -0.5 * gamma1.sqrt());
    let mut l2 = CVector::zeros(d);
    l2[a] = c(0.5 * gamma2.sqrt(), 0.0);
    l2[b] = c(0.0, 0.5 * gamma2.sqrt());
    vec![l1, l2]
}
