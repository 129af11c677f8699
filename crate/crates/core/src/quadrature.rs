//! Adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! Used only to verify the closed forms. It is deliberately blind to where
//! the integrands have kinks: the interval with the largest error estimate
//! is bisected until the summed estimate drops to the requested tolerance.
//!
//! A segment's value is the sum of K15 over its two halves. Its error
//! estimate is the largest of QUADPACK's scaled `|K15 − G7|` on the halves,
//! the change from K15 over the whole segment, and the gap to a 5-point
//! Gauss–Lobatto rule. The Lobatto rule samples the endpoints, which catches
//! a kink lying between an endpoint and the outermost Kronrod node.

// nodes and weights are kept at their tabulated precision
#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{finite, Error, Result};

pub const MIN_TOL: f64 = 1e-12;
pub const MAX_SUBDIVISIONS: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    /// Number of intervals in the final partition.
    pub subdivisions: usize,
}

// Kronrod abscissae on [-1, 1] (non-negative half, descending) and weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Segment {}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gauss_kronrod_15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut fv = [0.0; 15];
    fv[7] = f(center);
    for i in 0..7 {
        let dx = half * XGK[i];
        fv[i] = f(center - dx);
        fv[14 - i] = f(center + dx);
    }
    let weight = |i: usize| WGK[i.min(14 - i)];

    let mut kronrod = 0.0;
    let mut abs_sum = 0.0;
    let mut gauss = WG[3] * fv[7];
    for (i, v) in fv.iter().enumerate() {
        kronrod += weight(i) * v;
        abs_sum += weight(i) * v.abs();
    }
    for i in (1..7).step_by(2) {
        gauss += WG[i / 2] * (fv[i] + fv[14 - i]);
    }
    let mean = 0.5 * kronrod;
    let asc: f64 = fv
        .iter()
        .enumerate()
        .map(|(i, v)| weight(i) * (v - mean).abs())
        .sum();

    let (value, resabs, resasc) = (kronrod * half, abs_sum * half.abs(), asc * half.abs());
    let mut error = ((kronrod - gauss) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    (value, error)
}

fn gauss_lobatto_5<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    const X: f64 = 0.654_653_670_707_977_143_798_292_456_246_858; // √(3/7)
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let ends = f(a) + f(b);
    let inner = f(center - half * X) + f(center + half * X);
    half * (ends / 10.0 + inner * 49.0 / 90.0 + f(center) * 32.0 / 45.0)
}

fn segment<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let mid = 0.5 * (a + b);
    let (whole, _) = gauss_kronrod_15(f, a, b);
    let (left, left_err) = gauss_kronrod_15(f, a, mid);
    let (right, right_err) = gauss_kronrod_15(f, mid, b);
    let value = left + right;
    let lobatto = gauss_lobatto_5(f, a, b);
    let error = (left_err + right_err)
        .max((whole - value).abs())
        .max((lobatto - value).abs());
    Segment { a, b, value, error }
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol` (`tol ≥ 1e-12`).
pub fn integrate_adaptive<F>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> f64,
{
    let a = finite("integrate_adaptive", a)?;
    let b = finite("integrate_adaptive", b)?;
    if tol.is_nan() || tol < MIN_TOL {
        return Err(Error::ToleranceTooSmall(tol));
    }
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            subdivisions: 1,
        });
    }
    let (lo, hi, orient) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };

    let mut heap = BinaryHeap::new();
    let first = segment(&f, lo, hi);
    let mut total_err = first.error;
    heap.push(first);

    loop {
        if total_err <= tol {
            // re-sum to shed drift from the running updates
            total_err = heap.iter().map(|s| s.error).sum();
            if total_err <= tol {
                break;
            }
        }
        if heap.len() >= MAX_SUBDIVISIONS {
            return Err(Error::NoConvergence {
                subdivisions: heap.len(),
                error_estimate: total_err,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // cannot split further at this precision
            return Err(Error::NoConvergence {
                subdivisions: heap.len() + 1,
                error_estimate: total_err,
            });
        }
        let left = segment(&f, worst.a, mid);
        let right = segment(&f, mid, worst.b);
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // sum left to right so the result does not depend on heap order
    let mut segs = heap.into_vec();
    segs.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value: f64 = segs.iter().map(|s| s.value).sum();
    Ok(QuadratureResult {
        value: orient * value,
        error_estimate: total_err,
        subdivisions: segs.len(),
    })
}
