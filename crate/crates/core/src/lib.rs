//! Closed-form antiderivatives of the radical trigonometric integrands
//! `√(1 ± sin x)` and `√(1 ± cos x)`.
//!
//! The crate evaluates the sign-based local antiderivatives and the
//! floor/ceiling global antiderivatives, turns local forms into continuous
//! ones by cancelling their jumps, computes definite integrals by several
//! independent routes, and applies all of it to the arc length of cardioids
//! (`8a`). An adaptive Gauss–Kronrod integrator that knows nothing about the
//! closed forms serves as the cross-check.
//!
//! ```
//! use radtrig::{definite_integral, Family, IntegrandSpec, Method, Sign};
//!
//! let spec = IntegrandSpec::new(Family::Sine, Sign::Plus);
//! let v = definite_integral(spec, 0.0, std::f64::consts::FRAC_PI_2, Method::SplitLocal).unwrap();
//! assert!((v - 2.0).abs() < 1e-12);
//! ```

pub mod abs_rules;
pub mod antiderivative;
pub mod cardioid;
pub mod cli;
pub mod error;
pub mod format;
pub mod globalize;
pub mod kernel;
pub mod plot;
pub mod quadrature;
pub mod verify;

pub use abs_rules::{
    abs_antiderivative, abs_over_sqrt_antiderivative, integral_abs_cos, integral_abs_sin,
    AbsAntiderivative, AbsFunctionDescriptor,
};
pub use antiderivative::{eval_global_floor_form, eval_local_form, ClosedForm, Form};
pub use cardioid::Cardioid;
pub use error::{Error, Result};
pub use globalize::{
    definite_integral, globalize, jump_at, split_local_integral, Method, PiecewiseAntiderivative,
    SplitIntegral,
};
pub use kernel::{breakpoints, eval_integrand, sgn, Family, IntegrandSpec, Sign, SignCarrier};
pub use quadrature::{integrate_adaptive, QuadratureResult};
