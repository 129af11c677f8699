//! Radical integrands, the sign function and exact zero lattices of the
//! sign carriers that appear in the local antiderivatives.
//!
//! Every carrier used here is a sinusoid in `x` or `x/2` whose zeros sit on
//! an arithmetic lattice `x = c + k·p` with `c` and `p` integer multiples of
//! `π/4`. Lattices are therefore stored as integer counts of `π/4`, and a
//! zero is materialised as `n as f64 * FRAC_PI_4`, so the same breakpoint is
//! produced bit-for-bit no matter which route asked for it.

use std::f64::consts::FRAC_PI_4;
use std::fmt;

use crate::error::{finite, Error, Result};

/// Radicands within this distance below zero are rounding noise and clamp to 0.
pub const RADICAND_CLAMP: f64 = 1e-12;

/// Two angles closer than this (scaled by `max(1, |x|)`) are the same lattice point.
pub const LATTICE_SNAP: f64 = 1e-12;

/// Largest interval `breakpoints` will enumerate.
pub const MAX_SPAN: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Sine,
    Cosine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sine => "sin",
            Family::Cosine => "cos",
        })
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One of the four integrands `√(1 ± sin x)`, `√(1 ± cos x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntegrandSpec {
    pub family: Family,
    pub sign: Sign,
}

impl IntegrandSpec {
    pub const ALL: [IntegrandSpec; 4] = [
        IntegrandSpec::new(Family::Sine, Sign::Plus),
        IntegrandSpec::new(Family::Sine, Sign::Minus),
        IntegrandSpec::new(Family::Cosine, Sign::Plus),
        IntegrandSpec::new(Family::Cosine, Sign::Minus),
    ];

    pub const fn new(family: Family, sign: Sign) -> Self {
        Self { family, sign }
    }

    /// The radicand `1 ± trig(x)`, unclamped.
    pub fn radicand(&self, x: f64) -> f64 {
        let t = match self.family {
            Family::Sine => x.sin(),
            Family::Cosine => x.cos(),
        };
        1.0 + self.sign.factor() * t
    }
}

impl fmt::Display for IntegrandSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt(1 {} {} x)", self.sign, self.family)
    }
}

/// Sign function: `-1`, `0` or `+1`.
pub fn sgn(x: f64) -> Result<i32> {
    let x = finite("sgn", x)?;
    Ok(if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    })
}

pub fn eval_integrand(spec: IntegrandSpec, x: f64) -> Result<f64> {
    let x = finite("eval_integrand", x)?;
    let r = spec.radicand(x);
    if r < -RADICAND_CLAMP {
        return Err(Error::NegativeRadicand(r));
    }
    Ok(r.max(0.0).sqrt())
}

/// The expression inside a `sgn(·)` factor of a local antiderivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignCarrier {
    CosX,
    SinX,
    CosHalfPlusSinHalf,
    CosHalfMinusSinHalf,
    SinHalf,
    CosHalf,
    /// `sin(x/2 + q·π/4)`
    SinHalfShift {
        quarter_pis: i32,
    },
    /// `cos(x/2 + q·π/4)`
    CosHalfShift {
        quarter_pis: i32,
    },
}

/// Zero set `{ (offset + k·period)·π/4 : k ∈ ℤ }` with `0 ≤ offset < period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lattice {
    pub offset: i64,
    pub period: i64,
}

impl Lattice {
    fn new(offset: i64, period: i64) -> Self {
        Self {
            offset: offset.rem_euclid(period),
            period,
        }
    }

    /// The `k`-th zero.
    pub fn zero(&self, k: i64) -> f64 {
        (self.offset + k * self.period) as f64 * FRAC_PI_4
    }

    pub fn period_radians(&self) -> f64 {
        self.period as f64 * FRAC_PI_4
    }

    /// Index of the lattice point nearest to `x`, if `x` is within snapping distance.
    pub fn snap(&self, x: f64) -> Option<i64> {
        let k = self.nearest_index(x);
        let z = self.zero(k);
        ((x - z).abs() <= LATTICE_SNAP * x.abs().max(1.0)).then_some(k)
    }

    fn nearest_index(&self, x: f64) -> i64 {
        ((x / FRAC_PI_4 - self.offset as f64) / self.period as f64).round() as i64
    }

    /// Index `j` of the interval `(z_j, z_{j+1}]` containing `x`.
    ///
    /// A point that snaps to `z_k` belongs to interval `k - 1`, which gives
    /// local forms their left-limit value at breakpoints.
    pub fn interval_index(&self, x: f64) -> i64 {
        if let Some(k) = self.snap(x) {
            return k - 1;
        }
        let j = ((x / FRAC_PI_4 - self.offset as f64) / self.period as f64).floor() as i64;
        // floor() can land one off when x sits a few ulps from a zero that is
        // farther than the snap distance; settle it against the actual zeros.
        if x <= self.zero(j) {
            j - 1
        } else if x > self.zero(j + 1) {
            j + 1
        } else {
            j
        }
    }
}

impl SignCarrier {
    pub fn eval(&self, x: f64) -> f64 {
        let h = 0.5 * x;
        match *self {
            SignCarrier::CosX => x.cos(),
            SignCarrier::SinX => x.sin(),
            SignCarrier::CosHalfPlusSinHalf => h.cos() + h.sin(),
            SignCarrier::CosHalfMinusSinHalf => h.cos() - h.sin(),
            SignCarrier::SinHalf => h.sin(),
            SignCarrier::CosHalf => h.cos(),
            SignCarrier::SinHalfShift { quarter_pis } => (h + quarter_pis as f64 * FRAC_PI_4).sin(),
            SignCarrier::CosHalfShift { quarter_pis } => (h + quarter_pis as f64 * FRAC_PI_4).cos(),
        }
    }

    pub fn lattice(&self) -> Lattice {
        match *self {
            SignCarrier::CosX => Lattice::new(2, 4),
            SignCarrier::SinX => Lattice::new(0, 4),
            // √2·cos(x/2 − π/4)
            SignCarrier::CosHalfPlusSinHalf => Lattice::new(6, 8),
            // √2·cos(x/2 + π/4)
            SignCarrier::CosHalfMinusSinHalf => Lattice::new(2, 8),
            SignCarrier::SinHalf => Lattice::new(0, 8),
            SignCarrier::CosHalf => Lattice::new(4, 8),
            SignCarrier::SinHalfShift { quarter_pis } => Lattice::new(-2 * quarter_pis as i64, 8),
            SignCarrier::CosHalfShift { quarter_pis } => {
                Lattice::new(4 - 2 * quarter_pis as i64, 8)
            }
        }
    }

    /// Sign of the carrier on the open interval `(z_j, z_{j+1})`.
    pub fn interval_sign(&self, j: i64) -> f64 {
        let lat = self.lattice();
        let mid = 0.5 * (lat.zero(0) + lat.zero(1));
        let s0 = if self.eval(mid) > 0.0 { 1.0 } else { -1.0 };
        if j.rem_euclid(2) == 0 {
            s0
        } else {
            -s0
        }
    }

    /// `sgn(carrier(x))` with the left limit taken at the zeros, so never 0.
    pub fn sign_left(&self, x: f64) -> f64 {
        self.interval_sign(self.lattice().interval_index(x))
    }

    pub fn is_breakpoint(&self, x: f64) -> bool {
        self.lattice().snap(x).is_some()
    }

    /// Zeros of the carrier strictly inside `(a, b)`, in increasing order.
    ///
    /// Zeros within snapping distance of an endpoint are left out: an
    /// endpoint that is a zero is a boundary, not an interior split.
    pub fn breakpoints(&self, a: f64, b: f64) -> Result<Vec<f64>> {
        let a = finite("breakpoints", a)?;
        let b = finite("breakpoints", b)?;
        if a > b {
            return Err(Error::InvalidInterval {
                a,
                b,
                reason: "reversed",
            });
        }
        if b - a > MAX_SPAN {
            return Err(Error::InvalidInterval {
                a,
                b,
                reason: "span exceeds 1e6",
            });
        }
        let lat = self.lattice();
        let first = lat.nearest_index(a) - 1;
        let last = lat.nearest_index(b) + 1;
        let near = |x: f64, z: f64| (x - z).abs() <= LATTICE_SNAP * x.abs().max(1.0);
        Ok((first..=last)
            .map(|k| lat.zero(k))
            .filter(|&z| z > a && z < b && !near(a, z) && !near(b, z))
            .collect())
    }
}

impl fmt::Display for SignCarrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SignCarrier::CosX => f.write_str("cos x"),
            SignCarrier::SinX => f.write_str("sin x"),
            SignCarrier::CosHalfPlusSinHalf => f.write_str("cos(x/2) + sin(x/2)"),
            SignCarrier::CosHalfMinusSinHalf => f.write_str("cos(x/2) - sin(x/2)"),
            SignCarrier::SinHalf => f.write_str("sin(x/2)"),
            SignCarrier::CosHalf => f.write_str("cos(x/2)"),
            SignCarrier::SinHalfShift { quarter_pis } => {
                write!(f, "sin(x/2 + {quarter_pis}pi/4)")
            }
            SignCarrier::CosHalfShift { quarter_pis } => {
                write!(f, "cos(x/2 + {quarter_pis}pi/4)")
            }
        }
    }
}

pub fn breakpoints(carrier: SignCarrier, a: f64, b: f64) -> Result<Vec<f64>> {
    carrier.breakpoints(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

    const ALL_CARRIERS: [SignCarrier; 12] = [
        SignCarrier::CosX,
        SignCarrier::SinX,
        SignCarrier::CosHalfPlusSinHalf,
        SignCarrier::CosHalfMinusSinHalf,
        SignCarrier::SinHalf,
        SignCarrier::CosHalf,
        SignCarrier::SinHalfShift { quarter_pis: 1 },
        SignCarrier::SinHalfShift { quarter_pis: -1 },
        SignCarrier::SinHalfShift { quarter_pis: 2 },
        SignCarrier::CosHalfShift { quarter_pis: 1 },
        SignCarrier::CosHalfShift { quarter_pis: -1 },
        SignCarrier::CosHalfShift { quarter_pis: 3 },
    ];

    #[test]
    fn sgn_values() {
        assert_eq!(sgn(2.5), Ok(1));
        assert_eq!(sgn(0.0), Ok(0));
        assert_eq!(sgn(-0.0), Ok(0));
        assert_eq!(sgn(-PI), Ok(-1));
        assert!(sgn(f64::NAN).is_err());
        assert!(sgn(f64::INFINITY).is_err());
    }

    #[test]
    fn integrand_spot_values() {
        let sp = IntegrandSpec::new(Family::Sine, Sign::Plus);
        assert_eq!(eval_integrand(sp, 0.0).unwrap(), 1.0);
        assert!((eval_integrand(sp, FRAC_PI_2).unwrap() - SQRT_2).abs() < 1e-15);
        assert!(eval_integrand(sp, 3.0 * PI / 2.0).unwrap() < 1e-7);
        let cm = IntegrandSpec::new(Family::Cosine, Sign::Minus);
        assert!((eval_integrand(cm, PI).unwrap() - SQRT_2).abs() < 1e-15);
        assert!(eval_integrand(sp, f64::NAN).is_err());
    }

    #[test]
    fn golden_breakpoints_on_one_period() {
        let two_pi = 2.0 * PI;
        assert_eq!(
            SignCarrier::CosX.breakpoints(0.0, two_pi).unwrap(),
            vec![PI / 2.0, 3.0 * PI / 2.0]
        );
        assert_eq!(
            SignCarrier::CosHalfPlusSinHalf
                .breakpoints(0.0, two_pi)
                .unwrap(),
            vec![3.0 * PI / 2.0]
        );
        assert_eq!(
            SignCarrier::CosHalfMinusSinHalf
                .breakpoints(0.0, two_pi)
                .unwrap(),
            vec![PI / 2.0]
        );
        assert!(SignCarrier::CosX.breakpoints(0.1, 0.2).unwrap().is_empty());
    }

    #[test]
    fn endpoints_on_the_lattice_are_excluded() {
        let bps = SignCarrier::SinX.breakpoints(0.0, 2.0 * PI).unwrap();
        assert_eq!(bps, vec![PI]);
        let bps = SignCarrier::CosX
            .breakpoints(FRAC_PI_2, 3.0 * PI / 2.0)
            .unwrap();
        assert!(bps.is_empty());
        let bps = SignCarrier::SinX.breakpoints(1.0, 1.0).unwrap();
        assert!(bps.is_empty());
    }

    #[test]
    fn bad_intervals_rejected() {
        assert!(SignCarrier::CosX.breakpoints(1.0, 0.0).is_err());
        assert!(SignCarrier::CosX.breakpoints(0.0, 2e6).is_err());
        assert!(SignCarrier::CosX
            .breakpoints(f64::NEG_INFINITY, 0.0)
            .is_err());
    }

    #[test]
    fn lattice_points_are_zeros_with_sign_change() {
        for c in ALL_CARRIERS {
            let bps = c.breakpoints(-4.0 * PI, 4.0 * PI).unwrap();
            assert!(!bps.is_empty(), "{c}");
            assert!(bps.windows(2).all(|w| w[0] < w[1]));
            for &b in &bps {
                assert!(c.eval(b).abs() < 1e-14, "{c} at {b}");
                let l = c.eval(b - 1e-6);
                let r = c.eval(b + 1e-6);
                assert!(
                    l != 0.0 && r != 0.0 && l.signum() != r.signum(),
                    "{c} at {b}"
                );
            }
            // constant sign between consecutive zeros
            let mut edges = vec![-4.0 * PI];
            edges.extend(&bps);
            edges.push(4.0 * PI);
            for w in edges.windows(2) {
                let (lo, hi) = (w[0], w[1]);
                let mid_sign = c.eval(0.5 * (lo + hi)).signum();
                for i in 1..1000 {
                    let x = lo + (hi - lo) * i as f64 / 1000.0;
                    assert_eq!(c.eval(x).signum(), mid_sign, "{c} on ({lo}, {hi})");
                    assert_eq!(c.sign_left(x), mid_sign, "{c} at {x}");
                }
            }
        }
    }

    #[test]
    fn sign_left_takes_left_limit() {
        let c = SignCarrier::CosX;
        assert_eq!(c.sign_left(FRAC_PI_2), 1.0);
        assert_eq!(c.sign_left(3.0 * PI / 2.0), -1.0);
        // the decimal printout of 3π/2 used on command lines snaps too
        assert_eq!(c.sign_left(4.71238898038469), -1.0);
        assert!(c.is_breakpoint(4.71238898038469));
        assert!(!c.is_breakpoint(4.7));
    }
}
