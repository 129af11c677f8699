//! Cardioids `r = a(1 ± sin θ)` and `r = a(1 ± cos θ)` and their arc length.
//!
//! Since `r² + r'² = 2a²(1 ± trig θ)`, the polar arc-length integrand is
//! `a√2·√(1 ± trig θ)` and the full length is `a√2` times a full-period
//! radical integral, which is `4√2`, giving `8a`.

use std::f64::consts::{PI, SQRT_2};

use crate::antiderivative::{ClosedForm, Form};
use crate::error::{finite, Error, Result};
use crate::globalize::{definite_integral, split_local_integral, Method, SplitIntegral};
use crate::kernel::{Family, IntegrandSpec, Sign};
use crate::quadrature::integrate_adaptive;

/// Tolerance for the direct quadrature of `√(r² + r'²)`, per unit of `a`.
pub const ORACLE_TOL_PER_SCALE: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cardioid {
    a: f64,
    family: Family,
    sign: Sign,
}

impl Cardioid {
    pub fn new(a: f64, family: Family, sign: Sign) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::InvalidScale(a));
        }
        Ok(Self { a, family, sign })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// The radical integrand this cardioid's length reduces to.
    pub fn spec(&self) -> IntegrandSpec {
        IntegrandSpec::new(self.family, self.sign)
    }

    pub fn radius(&self, theta: f64) -> f64 {
        let t = match self.family {
            Family::Sine => theta.sin(),
            Family::Cosine => theta.cos(),
        };
        self.a * (1.0 + self.sign.factor() * t)
    }

    pub fn radius_derivative(&self, theta: f64) -> f64 {
        let dt = match self.family {
            Family::Sine => theta.cos(),
            Family::Cosine => -theta.sin(),
        };
        self.a * self.sign.factor() * dt
    }

    /// `√(r² + r'²)`, straight from the polar curve.
    pub fn arc_length_integrand(&self, theta: f64) -> Result<f64> {
        let theta = finite("arc_length_integrand", theta)?;
        Ok(self.radius(theta).hypot(self.radius_derivative(theta)))
    }

    /// Arc length over `θ ∈ [0, 2π]`.
    ///
    /// The closed-form methods go through the radical integral; `Oracle`
    /// integrates [`Self::arc_length_integrand`] directly.
    pub fn length(&self, method: Method) -> Result<f64> {
        match method {
            Method::Oracle => {
                let r = integrate_adaptive(
                    |t| self.radius(t).hypot(self.radius_derivative(t)),
                    0.0,
                    2.0 * PI,
                    ORACLE_TOL_PER_SCALE * self.a.max(1.0),
                )?;
                Ok(r.value)
            }
            m => Ok(self.a * SQRT_2 * definite_integral(self.spec(), 0.0, 2.0 * PI, m)?),
        }
    }

    /// Length by sign splitting with the given local form, reporting the
    /// split points used.
    pub fn length_split(&self, form: Form) -> Result<SplitIntegral> {
        let s = split_local_integral(ClosedForm::new(self.spec(), form), 0.0, 2.0 * PI)?;
        Ok(SplitIntegral {
            value: self.a * SQRT_2 * s.value,
            splits: s.splits,
        })
    }

    /// `n + 1` Cartesian points at `θ = 2πk/n`, `k = 0..=n`.
    pub fn sample_curve(&self, n: usize) -> Result<Vec<(f64, f64)>> {
        if n < 3 {
            return Err(Error::TooFewSamples(n));
        }
        Ok((0..=n)
            .map(|k| {
                let theta = 2.0 * PI * k as f64 / n as f64;
                let r = self.radius(theta);
                (r * theta.cos(), r * theta.sin())
            })
            .collect())
    }
}

pub fn polyline_length(points: &[(f64, f64)]) -> f64 {
    points
        .windows(2)
        .map(|w| (w[1].0 - w[0].0).hypot(w[1].1 - w[0].1))
        .sum()
}
