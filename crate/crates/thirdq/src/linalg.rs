//! Dense complex linear algebra helpers shared across the crate.
//!
//! Everything here operates on `ndarray` arrays of `Complex64`. The
//! eigensolvers are LAPACK-backed; the matrix sign function and the matrix
//! exponential are implemented on top of them.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Determinant, Eig, EigVals, Eigh, Inverse, UPLO};
use num_complex::Complex64;

use crate::{Error, Result};

pub type CMatrix = Array2<Complex64>;
pub type CVector = Array1<Complex64>;

pub const I: Complex64 = Complex64::new(0.0, 1.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn cr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn eye(n: usize) -> CMatrix {
    CMatrix::eye(n)
}

/// Conjugate transpose.
pub fn dagger(a: &CMatrix) -> CMatrix {
    a.t().mapv(|x| x.conj())
}

pub fn max_abs(a: &CMatrix) -> f64 {
    a.iter().fold(0.0, |m, x| m.max(x.norm()))
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    debug_assert_eq!(a.dim(), b.dim());
    a.iter()
        .zip(b.iter())
        .fold(0.0, |m, (x, y)| m.max((x - y).norm()))
}

/// Induced 1-norm (maximum absolute column sum).
pub fn one_norm(a: &CMatrix) -> f64 {
    let mut best = 0.0f64;
    for col in a.columns() {
        best = best.max(col.iter().map(|x| x.norm()).sum());
    }
    best
}

pub fn frobenius(a: &CMatrix) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Right eigendecomposition of a general complex matrix.
///
/// Returns eigenvalues and the matrix whose columns are the right
/// eigenvectors, in LAPACK order.
pub fn eig(a: &CMatrix) -> Result<(CVector, CMatrix)> {
    Ok(a.eig()?)
}

/// Eigenvalues only (no eigenvectors); cheaper than [`eig`].
pub fn eigvals(a: &CMatrix) -> Result<CVector> {
    Ok(a.eigvals()?)
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn eigh_vals(a: &CMatrix) -> Result<Array1<f64>> {
    let (vals, _) = a.eigh(UPLO::Upper)?;
    Ok(vals)
}

pub fn inv(a: &CMatrix) -> Result<CMatrix> {
    Ok(a.inv()?)
}

/// Matrix sign function of a matrix with no purely imaginary eigenvalues,
/// by the determinant-scaled Newton iteration `S <- (mu S + (mu S)^-1) / 2`.
///
/// Returns the sign matrix and the iteration count. The spectral projector
/// onto the right half plane is `(I + S) / 2`.
pub fn matrix_sign(a: &CMatrix, max_iter: usize) -> Result<(CMatrix, usize)> {
    let n = a.nrows();
    if n != a.ncols() {
        return Err(Error::DimensionMismatch("matrix sign of a non-square matrix".into()));
    }
    let mut s = a.clone();
    let mut scaling = true;
    for it in 0..max_iter {
        let sinv = s.inv()?;
        let next = if scaling {
            let (_, ln_det) = s.sln_det()?;
            let mu = (-ln_det / n as f64).exp();
            let mu_inv = 1.0 / mu;
            let mut t = s.mapv(|x| x * 0.5 * mu);
            t.zip_mut_with(&sinv, |x, y| *x += y * 0.5 * mu_inv);
            t
        } else {
            let mut t = s.mapv(|x| x * 0.5);
            t.zip_mut_with(&sinv, |x, y| *x += y * 0.5);
            t
        };
        let diff = max_abs_diff(&next, &s) / max_abs(&next).max(1.0);
        s = next;
        if scaling && diff < 1e-2 {
            scaling = false;
        }
        if diff < 1e-13 {
            let residual = {
                let s2 = s.dot(&s);
                max_abs_diff(&s2, &eye(n))
            };
            if residual > 1e-8 {
                return Err(Error::NearDefective(format!(
                    "sign iteration converged to a non-involution (|S^2 - 1| = {residual:.3e})"
                )));
            }
            return Ok((s, it + 1));
        }
    }
    Err(Error::NearDefective(format!(
        "matrix sign iteration did not converge within {max_iter} steps"
    )))
}

/// Matrix exponential by Pade-13 approximation with scaling and squaring.
pub fn expm(a: &CMatrix) -> Result<CMatrix> {
    const THETA13: f64 = 5.371920351148152;
    #[rustfmt::skip]
    const B: [f64; 14] = [
        64_764_752_532_480_000.0, 32_382_376_266_240_000.0, 7_771_770_303_897_600.0,
        1_187_353_796_428_800.0, 129_060_195_264_000.0, 10_559_470_521_600.0,
        670_442_572_800.0, 33_522_128_640.0, 1_323_241_920.0, 40_840_800.0,
        960_960.0, 16_380.0, 182.0, 1.0,
    ];
    let n = a.nrows();
    if n != a.ncols() {
        return Err(Error::DimensionMismatch("expm of a non-square matrix".into()));
    }
    let norm = one_norm(a);
    let squarings = if norm > THETA13 {
        (norm / THETA13).log2().ceil() as u32
    } else {
        0
    };
    let scale = 2f64.powi(squarings as i32);
    let a1 = a.mapv(|x| x / scale);
    let a2 = a1.dot(&a1);
    let a4 = a2.dot(&a2);
    let a6 = a2.dot(&a4);
    let id = eye(n);

    let lin = |c6: f64, c4: f64, c2: f64, c0: f64| -> CMatrix {
        let mut t = a6.mapv(|x| x * c6);
        t.zip_mut_with(&a4, |x, y| *x += y * c4);
        t.zip_mut_with(&a2, |x, y| *x += y * c2);
        t.zip_mut_with(&id, |x, y| *x += y * c0);
        t
    };

    let w = a6.dot(&lin(B[13], B[11], B[9], 0.0));
    let u = a1.dot(&(w + lin(B[7], B[5], B[3], B[1])));
    let w2 = a6.dot(&lin(B[12], B[10], B[8], 0.0));
    let v = w2 + lin(B[6], B[4], B[2], B[0]);

    let num = &v + &u;
    let den = &v - &u;
    let mut f = den.inv()?.dot(&num);
    for _ in 0..squarings {
        f = f.dot(&f);
    }
    Ok(f)
}

/// Column-stacking vectorization: `vec(rho)[b*N + a] = rho[(a, b)]`.
pub fn vec_col(rho: &CMatrix) -> CVector {
    CVector::from_iter(rho.t().iter().cloned())
}

/// Inverse of [`vec_col`].
pub fn unvec(v: &CVector) -> CMatrix {
    let n = (v.len() as f64).sqrt().round() as usize;
    assert_eq!(n * n, v.len(), "unvec of a non-square-length vector");
    CMatrix::from_shape_fn((n, n), |(a, b)| v[b * n + a])
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use ndarray::linalg::kron;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_cmatrix(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
        CMatrix::from_shape_fn((n, n), |_| c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
    }

    #[test]
    fn vectorization_identity() {
        // vec(A rho B) = (B^T (x) A) vec(rho), column stacking
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..3 {
            let a = random_cmatrix(&mut rng, 4);
            let b = random_cmatrix(&mut rng, 4);
            let rho = random_cmatrix(&mut rng, 4);
            let lhs = vec_col(&a.dot(&rho).dot(&b));
            let rhs = kron(&b.t(), &a).dot(&vec_col(&rho));
            let dev = (&lhs - &rhs).iter().fold(0.0f64, |m, x| m.max(x.norm()));
            assert!(dev < 1e-12, "dev = {dev}");
        }
    }

    #[test]
    fn unvec_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let rho = random_cmatrix(&mut rng, 5);
        assert_eq!(unvec(&vec_col(&rho)), rho);
    }

    #[test]
    fn expm_of_diagonal() {
        let a = array![[c(0.3, 0.2), ZERO], [ZERO, c(-1.0, 0.7)]];
        let e = expm(&a).unwrap();
        assert!((e[(0, 0)] - c(0.3, 0.2).exp()).norm() < 1e-13);
        assert!((e[(1, 1)] - c(-1.0, 0.7).exp()).norm() < 1e-13);
        assert!(e[(0, 1)].norm() < 1e-14);
    }

    #[test]
    fn expm_of_nilpotent() {
        let a = array![[ZERO, ONE], [ZERO, ZERO]];
        let e = expm(&a).unwrap();
        assert!(max_abs_diff(&e, &array![[ONE, ONE], [ZERO, ONE]]) < 1e-14);
    }

    #[test]
    fn expm_matches_eigendecomposition() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_cmatrix(&mut rng, 6).mapv(|x| x * 3.0);
        let e = expm(&a).unwrap();
        let (vals, vecs) = eig(&a).unwrap();
        let d = CMatrix::from_diag(&vals.mapv(|x| x.exp()));
        let e2 = vecs.dot(&d).dot(&inv(&vecs).unwrap());
        assert!(max_abs_diff(&e, &e2) < 1e-9);
    }

    #[test]
    fn sign_of_shifted_diagonal() {
        let a = array![
            [c(0.7, 2.0), ZERO, ZERO],
            [ZERO, c(-0.2, -5.0), ZERO],
            [ZERO, ZERO, c(3.0, 0.1)]
        ];
        let (s, _) = matrix_sign(&a, 100).unwrap();
        let want = array![[ONE, ZERO, ZERO], [ZERO, -ONE, ZERO], [ZERO, ZERO, ONE]];
        assert!(max_abs_diff(&s, &want) < 1e-10);
    }
}
