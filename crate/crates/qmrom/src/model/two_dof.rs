//! Two-DOF oscillator with bending-stretching-type coupling.
//!
//! The transverse variable `w` and the axial variable `v` obey
//!
//! ```text
//! m1 w'' + c1 w' + k1 w + a v w + b w^3 = g(t)
//! m2 v'' + c2 v' + k2 v + c w^2         = 0
//! ```
//!
//! a minimal analogue of a geometrically nonlinear beam in which the stiff
//! axial coordinate is driven quadratically by the transverse motion. Its
//! reduced models have closed forms, which makes it the oracle for the
//! manifold and integrator code.

use nalgebra::{dmatrix, dvector, DMatrix, DVector};

use crate::{Error, Real, Result};

use super::StructuralModel;

/// Physical parameters of the oscillator.
#[derive(Debug, Clone, Copy)]
pub struct TwoDofParams<T> {
    pub m1: T,
    pub m2: T,
    pub c1: T,
    pub c2: T,
    pub k1: T,
    pub k2: T,
    /// Coupling coefficient of `v w` in the transverse equation.
    pub a: T,
    /// Cubic (hardening) coefficient of `w^3`.
    pub b: T,
    /// Coupling coefficient of `w^2` in the axial equation.
    pub c: T,
}

/// The assembled two-DOF model. State ordering: `u = [w, v]`.
#[derive(Debug, Clone)]
pub struct TwoDofModel<T> {
    params: TwoDofParams<T>,
    mass: DMatrix<T>,
    damping: DMatrix<T>,
}

impl<T: Real> TwoDofModel<T> {
    pub fn new(params: TwoDofParams<T>) -> Result<Self> {
        for (name, v) in [
            ("m1", params.m1),
            ("m2", params.m2),
            ("k1", params.k1),
            ("k2", params.k2),
        ] {
            if !(v > T::zero()) {
                return Err(Error::InvalidModel(format!("{name} must be positive")));
            }
        }
        if params.c1 < T::zero() || params.c2 < T::zero() {
            return Err(Error::InvalidModel("damping must be nonnegative".into()));
        }
        Ok(Self {
            params,
            mass: dmatrix![params.m1, T::zero(); T::zero(), params.m2],
            damping: dmatrix![params.c1, T::zero(); T::zero(), params.c2],
        })
    }

    pub fn params(&self) -> &TwoDofParams<T> {
        &self.params
    }
}

impl<T: Real> StructuralModel<T> for TwoDofModel<T> {
    fn ndof(&self) -> usize {
        2
    }

    fn mass_matrix(&self) -> &DMatrix<T> {
        &self.mass
    }

    fn damping_matrix(&self) -> &DMatrix<T> {
        &self.damping
    }

    fn internal_force(&self, u: &DVector<T>) -> DVector<T> {
        let p = &self.params;
        let (w, v) = (u[0], u[1]);
        dvector![
            p.k1 * w + p.a * v * w + p.b * w * w * w,
            p.k2 * v + p.c * w * w
        ]
    }

    /// Exact Jacobian of the internal force. Note the `a v` contribution in
    /// the (1,1) entry from d(a v w)/dw; at the equilibrium it vanishes.
    fn tangent_stiffness(&self, u: &DVector<T>) -> DMatrix<T> {
        let p = &self.params;
        let (w, v) = (u[0], u[1]);
        let three = crate::cvt::<T>(3.0);
        let two = crate::cvt::<T>(2.0);
        dmatrix![
            p.k1 + three * p.b * w * w + p.a * v, p.a * w;
            two * p.c * w, p.k2
        ]
    }

    fn stiffness_directional_derivative(&self, phi: &DVector<T>) -> DMatrix<T> {
        let p = &self.params;
        let (pw, pv) = (phi[0], phi[1]);
        let two = crate::cvt::<T>(2.0);
        dmatrix![
            p.a * pv, p.a * pw;
            two * p.c * pw, T::zero()
        ]
    }
}
