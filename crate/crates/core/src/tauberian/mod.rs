//! Laplace transforms of bounded signals and the contour argument that
//! turns analytic continuation of g into convergence of ∫₀^∞ f(t) dt.
//!
//! The prime-counting signal is f(t) = θ(eᵗ)e^{-t} − 1, whose transform is
//! g(z) = Φ(z + 1)/(z + 1) − 1/z. Its contour identity is certified on a
//! catalog of signals with closed-form g, and the convergence itself is
//! tracked through [`pnt_integral_tail`].

mod contour;
mod signal;
mod step;
mod tail;

pub use contour::{cauchy_square_residual, newman_contour_residual, newman_convergence_demo, ContourSpec, ConvergenceSeries};
pub use signal::{bound_rz1_check, bound_rz2_check, circle_factor_check, BoundedSignal, Shape};
pub use step::{laplace_exact_step, phi_laplace_identity_residual, LaplaceResidual, ThetaStep};
pub use tail::{g0_two_oracles, neville_at_zero, pnt_integral_profile, pnt_integral_tail, G0Check, TailProfile};
