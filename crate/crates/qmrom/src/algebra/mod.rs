//! Dense linear algebra used by every other module: a symmetric generalized
//! eigensolver, bordered saddle-point solves, third-order tensors and basis
//! deflation.
//!
//! Matrices are `nalgebra` dense matrices (column-major). Every operation is a
//! pure function of its inputs.

mod tensor;

use nalgebra::{DMatrix, DVector};

use crate::{cvt, to_f64, Error, Real, Result};

pub use tensor::Tensor3;

/// Relative asymmetry accepted by [`sym_generalized_eig`].
pub const SYMMETRY_TOL: f64 = 1e-8;

/// Default relative singular-value cutoff for [`deflate_basis`].
pub const DEFLATION_REL_TOL: f64 = 1e-8;

/// Relative residual above which a bordered solve is declared singular.
const BORDERED_RESIDUAL_TOL: f64 = 1e-6;

/// Mass-normalized eigenpairs of a symmetric pencil `(K, M)`.
///
/// Eigenvalues (`omega^2`, ascending) and eigenvectors satisfying
/// `phi^T M phi = 1` with the sign fixed so that the entry of largest
/// magnitude is positive.
#[derive(Debug, Clone)]
pub struct EigenPairs<T> {
    /// Eigenvalues, ascending.
    pub values: DVector<T>,
    /// Eigenvectors, one column per eigenvalue.
    pub vectors: DMatrix<T>,
}

impl<T: Real> EigenPairs<T> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.len() == 0
    }
}

fn relative_asymmetry<T: Real>(a: &DMatrix<T>) -> T {
    let scale = a.amax();
    if scale == T::zero() {
        return T::zero();
    }
    let mut worst = T::zero();
    for j in 0..a.ncols() {
        for i in (j + 1)..a.nrows() {
            worst = worst.max((a[(i, j)] - a[(j, i)]).abs());
        }
    }
    worst / scale
}

fn check_symmetric<T: Real>(a: &DMatrix<T>, name: &'static str) -> Result<()> {
    let asym = relative_asymmetry(a);
    if to_f64(asym) > SYMMETRY_TOL {
        return Err(Error::NotSymmetric {
            name,
            asymmetry: to_f64(asym),
        });
    }
    Ok(())
}

/// Flips eigenvector signs so the entry of largest magnitude is positive.
/// Keeps derivative tensors and emitted files reproducible.
fn fix_sign<T: Real>(v: &mut nalgebra::DVectorViewMut<T>) {
    let mut best = 0;
    let mut best_abs = T::zero();
    for (k, x) in v.iter().enumerate() {
        if x.abs() > best_abs {
            best_abs = x.abs();
            best = k;
        }
    }
    if v[best] < T::zero() {
        v.neg_mut();
    }
}

/// Solves the generalized symmetric eigenproblem `K phi = omega^2 M phi` for
/// the `m` smallest eigenpairs.
///
/// `M` must be symmetric positive definite and `K` symmetric (both within
/// [`SYMMETRY_TOL`]). The pencil is reduced to a standard symmetric problem
/// through the Cholesky factor of `M` and solved by dense tridiagonalization
/// with implicit QL iteration. Returned vectors are mass-normalized.
pub fn sym_generalized_eig<T: Real>(
    k: &DMatrix<T>,
    m_mat: &DMatrix<T>,
    m: usize,
) -> Result<EigenPairs<T>> {
    let n = k.nrows();
    assert_eq!(k.ncols(), n, "stiffness matrix must be square");
    assert_eq!(m_mat.nrows(), n, "matrix dimension mismatch");
    assert_eq!(m_mat.ncols(), n, "matrix dimension mismatch");
    if m == 0 || m > n {
        return Err(Error::TooManyModes {
            requested: m,
            available: n,
        });
    }
    check_symmetric(k, "stiffness matrix")?;
    check_symmetric(m_mat, "mass matrix")?;

    let chol = nalgebra::Cholesky::new(m_mat.clone()).ok_or(Error::NotPositiveDefinite {
        name: "mass matrix",
    })?;
    let l = chol.l();

    // A = L^-1 K L^-T, re-symmetrized to scrub rounding noise.
    let y = l
        .solve_lower_triangular(k)
        .ok_or(Error::NotPositiveDefinite {
            name: "mass matrix",
        })?;
    let a = l
        .solve_lower_triangular(&y.transpose())
        .ok_or(Error::NotPositiveDefinite {
            name: "mass matrix",
        })?;
    let a = (&a + a.transpose()) * cvt::<T>(0.5);

    let max_sweeps = 50 * n.max(8);
    let eig = nalgebra::SymmetricEigen::try_new(a, T::default_epsilon(), max_sweeps)
        .ok_or(Error::EigenNonConvergence)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].partial_cmp(&eig.eigenvalues[j]).unwrap());

    let lt = l.transpose();
    let mut values = DVector::zeros(m);
    let mut vectors = DMatrix::zeros(n, m);
    for (col, &idx) in order.iter().take(m).enumerate() {
        values[col] = eig.eigenvalues[idx];
        let y = eig.eigenvectors.column(idx).clone_owned();
        let phi = lt
            .solve_upper_triangular(&y)
            .ok_or(Error::NotPositiveDefinite {
                name: "mass matrix",
            })?;
        // Renormalize in the M-inner product; y is unit only up to rounding.
        let mnorm = (phi.dot(&(m_mat * &phi))).sqrt();
        vectors.set_column(col, &(phi / mnorm));
        fix_sign(&mut vectors.column_mut(col));
    }

    Ok(EigenPairs { values, vectors })
}

/// Solves the bordered saddle-point system
///
/// ```text
/// [  A   -b ] [ x      ]   [ rhs ]
/// [ -b^T  0 ] [ lambda ] = [ 0   ]
/// ```
///
/// by dense LU with partial pivoting, returning `(x, lambda)`. The second
/// block row enforces the constraint `b^T x = 0`.
pub fn solve_bordered<T: Real>(
    a: &DMatrix<T>,
    b: &DVector<T>,
    rhs: &DVector<T>,
) -> Result<(DVector<T>, T)> {
    let n = a.nrows();
    assert_eq!(a.ncols(), n, "bordered block must be square");
    assert_eq!(b.len(), n, "border length mismatch");
    assert_eq!(rhs.len(), n, "right-hand side length mismatch");

    let mut big = DMatrix::zeros(n + 1, n + 1);
    big.view_mut((0, 0), (n, n)).copy_from(a);
    for i in 0..n {
        big[(i, n)] = -b[i];
        big[(n, i)] = -b[i];
    }
    let mut full_rhs = DVector::zeros(n + 1);
    full_rhs.rows_mut(0, n).copy_from(rhs);

    let scale = big.amax().max(T::default_epsilon());
    let lu = big.clone().lu();
    let sol = lu.solve(&full_rhs).ok_or(Error::SingularBordered {
        residual: f64::INFINITY,
    })?;

    // Rank check: a nearly singular bordered matrix yields a large residual.
    let residual = (&big * &sol - &full_rhs).norm();
    let denom = scale * sol.norm() + full_rhs.norm();
    let rel = if denom > T::zero() {
        residual / denom
    } else {
        T::zero()
    };
    if to_f64(rel) > BORDERED_RESIDUAL_TOL {
        return Err(Error::SingularBordered {
            residual: to_f64(rel),
        });
    }

    let x = sol.rows(0, n).clone_owned();
    let lambda = sol[n];
    Ok((x, lambda))
}

/// Orthonormal basis of the column space of `v`.
///
/// Columns associated with singular values below `rel_tol * sigma_max` are
/// dropped, so the result always has condition number one.
pub fn deflate_basis<T: Real>(v: &DMatrix<T>, rel_tol: T) -> Result<DMatrix<T>> {
    assert!(v.ncols() > 0, "deflation needs at least one column");
    let svd = nalgebra::SVD::new(v.clone(), true, false);
    let sigma = &svd.singular_values;
    let sigma_max = sigma.max();
    if !(sigma_max > T::zero()) || !sigma_max.is_finite() {
        return Err(Error::EmptyBasis);
    }
    let keep = sigma.iter().filter(|&&s| s >= rel_tol * sigma_max).count();
    if keep == 0 {
        return Err(Error::EmptyBasis);
    }
    let u = svd.u.expect("u requested");
    Ok(u.columns(0, keep).clone_owned())
}
