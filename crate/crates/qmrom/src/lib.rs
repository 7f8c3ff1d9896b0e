//! Reduced-order modeling of geometrically nonlinear structural dynamics on a
//! quadratic manifold.
//!
//! The library builds reduced models without any full training simulation:
//! vibration modes of the linearized system span the tangent space, and modal
//! derivatives (or their static approximation) supply the curvature. Reduction
//! is by Galerkin projection onto the configuration-dependent tangent space of
//! the manifold. Linear manifolds (modes augmented with selected derivatives),
//! POD bases and the full solution are available for comparison.
//!
//! Modules:
//! - [`algebra`]: dense symmetric generalized eigensolver, bordered solves,
//!   third-order tensors, basis deflation.
//! - [`model`]: structural models (2-DOF oscillator, von Kármán beam), load
//!   functions, Rayleigh damping.
//! - [`modal`]: vibration modes, modal derivatives, linear modal runs.
//! - [`manifold`]: linear/quadratic reduction manifolds, derivative-selection
//!   heuristics, POD.
//! - [`integrate`]: implicit Newmark time integration with Newton-Raphson for
//!   the full model and both reduced models.
//! - [`harness`]: experiment configuration, error metrics, comparison reports,
//!   CSV/JSON emission.
//!
//! All numerics are generic over the scalar type through the [`Real`] trait;
//! the crate root exports `f64` aliases for the common case.

pub mod algebra;
pub mod error;
pub mod harness;
pub mod integrate;
pub mod manifold;
pub mod modal;
pub mod model;

pub use error::{Error, Result};

/// Scalar type for all numerics: `f64` for production runs, `f32` where a
/// lower-precision build is acceptable.
pub trait Real:
    nalgebra::RealField + Copy + num_traits::FromPrimitive + num_traits::ToPrimitive
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn cvt<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant not representable in scalar type")
}

/// Converts a working scalar into `f64` for diagnostics and reports.
#[inline]
pub(crate) fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

// Double-precision aliases for the exported types.
pub type Matrix = nalgebra::DMatrix<f64>;
pub type Vector = nalgebra::DVector<f64>;
pub type Tensor3 = algebra::Tensor3<f64>;
pub type EigenPairs = algebra::EigenPairs<f64>;
pub type LoadCase = model::LoadCase<f64>;
pub type ModalBasis = modal::ModalBasis<f64>;
pub type ModalDerivativeSet = modal::ModalDerivativeSet<f64>;
pub type ModalAmplitudeHistory = modal::ModalAmplitudeHistory<f64>;
pub type LinearManifold = manifold::LinearManifold<f64>;
pub type QuadraticManifold = manifold::QuadraticManifold<f64>;
pub type WeightMatrix = manifold::WeightMatrix<f64>;
pub type IntegratorParams = integrate::IntegratorParams<f64>;
pub type InitialConditions = integrate::InitialConditions<f64>;
pub type Trajectory = integrate::Trajectory<f64>;
