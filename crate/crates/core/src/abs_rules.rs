//! Generic rules for integrating absolute values.
//!
//! * [`abs_over_sqrt_antiderivative`]: `∫ |f| / √F dx` for `F' = ±f`
//! * [`abs_antiderivative`]: `∫ |f| dx = sgn(f)·F` when `F` vanishes at the roots of `f`
//! * [`integral_abs_sin`], [`integral_abs_cos`]: floor-based continuous
//!   antiderivatives of `|sin αx|` and `|cos αx|`

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::error::{finite, Error, Result};
use crate::kernel::SignCarrier;

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A function `f`, an antiderivative `F` of `±f`, and the carrier whose
/// lattice holds the roots of `f`.
#[derive(Clone)]
pub struct AbsFunctionDescriptor {
    pub f: RealFn,
    pub antiderivative: RealFn,
    pub carrier: SignCarrier,
}

impl fmt::Debug for AbsFunctionDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AbsFunctionDescriptor")
            .field("carrier", &self.carrier)
            .finish_non_exhaustive()
    }
}

const FD_STEP: f64 = 1e-6;

impl AbsFunctionDescriptor {
    pub fn new<F, G>(f: F, antiderivative: G, carrier: SignCarrier) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            f: Arc::new(f),
            antiderivative: Arc::new(antiderivative),
            carrier,
        }
    }

    fn derivative_of_antiderivative(&self, x: f64) -> f64 {
        ((self.antiderivative)(x + FD_STEP) - (self.antiderivative)(x - FD_STEP)) / (2.0 * FD_STEP)
    }

    /// `+1` if `F' = f`, `-1` if `F' = -f`, judged where `|f|` is largest
    /// among a few probes around `x`.
    pub fn orientation(&self, x: f64) -> f64 {
        let probe = [0.0, 0.25, -0.25, 0.5, -0.5, 1.0, -1.0]
            .into_iter()
            .map(|d| x + d)
            .max_by(|a, b| (self.f)(*a).abs().total_cmp(&(self.f)(*b).abs()))
            .unwrap_or(x);
        let prod = self.derivative_of_antiderivative(probe) * (self.f)(probe);
        if prod < 0.0 {
            -1.0
        } else {
            1.0
        }
    }

    /// Relative mismatch between `F'` and `±f` at `x` (finite differences).
    pub fn derivative_mismatch(&self, x: f64) -> f64 {
        let d = self.derivative_of_antiderivative(x);
        let f = (self.f)(x) * self.orientation(x);
        (d - f).abs() / f.abs().max(1.0)
    }

    /// `sgn(f(x))`, taking the left limit when `x` is a root of `f`.
    fn sign_of_f(&self, x: f64) -> f64 {
        let v = if self.carrier.is_breakpoint(x) {
            (self.f)(x - 1e-7)
        } else {
            (self.f)(x)
        };
        if v > 0.0 {
            1.0
        } else if v < 0.0 {
            -1.0
        } else {
            0.0
        }
    }
}

/// `∫ |f| / √F dx` as `±2·sgn(f)·√F`.
///
/// The printed rule reads `-2·sgn(f)·√F` with `F' = f`, which differentiates
/// to `-|f|/√F`. The overall sign is instead chosen from the descriptor's
/// orientation so that the derivative is `+|f|/√F` whichever way `F` and `f`
/// are related.
pub fn abs_over_sqrt_antiderivative(d: &AbsFunctionDescriptor, x: f64) -> Result<f64> {
    let x = finite("abs_over_sqrt_antiderivative", x)?;
    let big_f = (d.antiderivative)(x);
    if big_f.is_nan() || big_f <= 0.0 {
        return Err(Error::NonPositiveRadicand(big_f));
    }
    Ok(2.0 * d.orientation(x) * d.sign_of_f(x) * big_f.sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbsAntiderivative {
    pub value: f64,
    /// `false` when `F` does not vanish at the root of `f` nearest to `x`;
    /// the value is then only a local antiderivative and jumps at that root.
    pub conforming: bool,
}

const ROOT_VALUE_TOL: f64 = 1e-9;

/// `∫ |f| dx = sgn(f)·F`, flagged when the vanishing-at-roots hypothesis fails.
pub fn abs_antiderivative(d: &AbsFunctionDescriptor, x: f64) -> AbsAntiderivative {
    let lat = d.carrier.lattice();
    let j = lat.interval_index(x);
    let (lo, hi) = (lat.zero(j), lat.zero(j + 1));
    let nearest = if x - lo <= hi - x { lo } else { hi };
    let conforming = (d.antiderivative)(nearest).abs() <= ROOT_VALUE_TOL;
    AbsAntiderivative {
        value: d.sign_of_f(x) * (d.antiderivative)(x),
        conforming,
    }
}

/// Continuous antiderivative of `|sin αx|`:
/// `(2/α)⌊αx/π⌋ − (1/α)cos(αx − ⌊αx/π⌋π)`.
pub fn integral_abs_sin(alpha: f64, x: f64) -> Result<f64> {
    let alpha = finite("alpha", alpha)?;
    let x = finite("integral_abs_sin", x)?;
    if alpha == 0.0 {
        return Err(Error::ZeroAlpha);
    }
    let ax = alpha * x;
    let n = (ax / PI).floor();
    Ok((2.0 * n - (ax - n * PI).cos()) / alpha)
}

/// Continuous antiderivative of `|cos αx|`:
/// `(2/α)⌊αx/π + ½⌋ + (1/α)sin(αx − ⌊αx/π + ½⌋π)`.
pub fn integral_abs_cos(alpha: f64, x: f64) -> Result<f64> {
    let alpha = finite("alpha", alpha)?;
    let x = finite("integral_abs_cos", x)?;
    if alpha == 0.0 {
        return Err(Error::ZeroAlpha);
    }
    let ax = alpha * x;
    let n = (ax / PI + 0.5).floor();
    Ok((2.0 * n + (ax - n * PI).sin()) / alpha)
}
