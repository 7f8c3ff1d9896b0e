//! Structural models: mass/damping/stiffness providers, internal forces and
//! load functions.
//!
//! Every model works on its set of free DOFs (constraints are eliminated, not
//! penalized) with the static equilibrium at `u = 0`, so `f(0) = 0` and the
//! tangent stiffness at the origin is the matrix of the linearized system.

mod beam;
mod load;
mod two_dof;

use nalgebra::{DMatrix, DVector};

use crate::{cvt, to_f64, Error, Real, Result};

pub use beam::{BeamModelSpec, DofConstraint, VonKarmanBeam};
pub use load::{LoadCase, LoadKind};
pub use two_dof::{TwoDofModel, TwoDofParams};

/// Provider of the structural operators in `M u'' + C u' + f(u) = g(t)`.
pub trait StructuralModel<T: Real> {
    /// Number of free degrees of freedom.
    fn ndof(&self) -> usize;

    fn mass_matrix(&self) -> &DMatrix<T>;

    fn damping_matrix(&self) -> &DMatrix<T>;

    /// Nonlinear internal force `f(u)` with `f(0) = 0`.
    fn internal_force(&self, u: &DVector<T>) -> DVector<T>;

    /// Tangent stiffness `K(u) = df/du`.
    fn tangent_stiffness(&self, u: &DVector<T>) -> DMatrix<T>;

    /// Tangent stiffness at the equilibrium, `K(0)`.
    fn equilibrium_stiffness(&self) -> DMatrix<T> {
        self.tangent_stiffness(&DVector::zeros(self.ndof()))
    }

    /// Directional derivative `d/d eta K(eta * phi)` at `eta = 0`.
    ///
    /// The default is an exact central difference; polynomial-force models
    /// override it with the analytic contraction of their force Hessian.
    fn stiffness_directional_derivative(&self, phi: &DVector<T>) -> DMatrix<T> {
        fd_stiffness_directional_derivative(self, phi)
    }

    /// Characteristic displacement magnitude, used to scale finite-difference
    /// steps (e.g. the shell thickness for thin-walled models).
    fn displacement_scale(&self) -> T {
        T::one()
    }
}

/// Central finite-difference fallback for the stiffness directional
/// derivative, with the perturbation amplitude tied to the model's
/// displacement scale (`1e-5 * scale`).
pub fn fd_stiffness_directional_derivative<T, M>(model: &M, phi: &DVector<T>) -> DMatrix<T>
where
    T: Real,
    M: StructuralModel<T> + ?Sized,
{
    let amp = phi.amax();
    assert!(amp > T::zero(), "direction vector must be nonzero");
    let eta = cvt::<T>(1e-5) * model.displacement_scale() / amp;
    let kp = model.tangent_stiffness(&(phi * eta));
    let km = model.tangent_stiffness(&(phi * (-eta)));
    (kp - km) / (eta + eta)
}

/// A linear structural model `f(u) = K u` with constant matrices.
///
/// Serves as the linearized counterpart of a nonlinear model, and as the
/// per-mode scalar oscillator in linear modal-superposition runs.
#[derive(Debug, Clone)]
pub struct LinearModel<T> {
    mass: DMatrix<T>,
    damping: DMatrix<T>,
    stiffness: DMatrix<T>,
    scale: T,
}

impl<T: Real> LinearModel<T> {
    pub fn new(mass: DMatrix<T>, damping: DMatrix<T>, stiffness: DMatrix<T>) -> Self {
        let n = mass.nrows();
        assert_eq!(damping.nrows(), n);
        assert_eq!(stiffness.nrows(), n);
        Self {
            mass,
            damping,
            stiffness,
            scale: T::one(),
        }
    }

    /// Linearization of `model` about its equilibrium.
    pub fn linearization(model: &dyn StructuralModel<T>) -> Self {
        Self {
            mass: model.mass_matrix().clone(),
            damping: model.damping_matrix().clone(),
            stiffness: model.equilibrium_stiffness(),
            scale: model.displacement_scale(),
        }
    }

    /// Single-DOF oscillator `m u'' + c u' + k u = g`.
    pub fn single_dof(m: T, c: T, k: T) -> Self {
        Self {
            mass: DMatrix::from_element(1, 1, m),
            damping: DMatrix::from_element(1, 1, c),
            stiffness: DMatrix::from_element(1, 1, k),
            scale: T::one(),
        }
    }
}

impl<T: Real> StructuralModel<T> for LinearModel<T> {
    fn ndof(&self) -> usize {
        self.mass.nrows()
    }

    fn mass_matrix(&self) -> &DMatrix<T> {
        &self.mass
    }

    fn damping_matrix(&self) -> &DMatrix<T> {
        &self.damping
    }

    fn internal_force(&self, u: &DVector<T>) -> DVector<T> {
        &self.stiffness * u
    }

    fn tangent_stiffness(&self, _u: &DVector<T>) -> DMatrix<T> {
        self.stiffness.clone()
    }

    fn equilibrium_stiffness(&self) -> DMatrix<T> {
        self.stiffness.clone()
    }

    fn stiffness_directional_derivative(&self, phi: &DVector<T>) -> DMatrix<T> {
        let n = phi.len();
        DMatrix::zeros(n, n)
    }

    fn displacement_scale(&self) -> T {
        self.scale
    }
}

/// Rayleigh damping `C = alpha M + beta K` with the coefficients fit so that
/// the modal damping ratio equals `zeta` at both `omega1` and `omega2`:
/// `zeta = (alpha / omega + beta * omega) / 2`.
pub fn rayleigh_damping<T: Real>(
    m: &DMatrix<T>,
    k: &DMatrix<T>,
    zeta: T,
    omega1: T,
    omega2: T,
) -> Result<DMatrix<T>> {
    if !(omega1 > T::zero()) || !(omega2 > T::zero()) {
        return Err(Error::InvalidModel(
            "Rayleigh fit frequencies must be positive".into(),
        ));
    }
    if zeta < T::zero() {
        return Err(Error::InvalidModel(
            "damping ratio must be nonnegative".into(),
        ));
    }
    let gap = (omega1 - omega2).abs() / omega1.max(omega2);
    if to_f64(gap) < 1e-12 {
        return Err(Error::InvalidModel(
            "Rayleigh fit needs two distinct frequencies".into(),
        ));
    }
    let two = cvt::<T>(2.0);
    let alpha = two * zeta * omega1 * omega2 / (omega1 + omega2);
    let beta = two * zeta / (omega1 + omega2);
    Ok(m * alpha + k * beta)
}
