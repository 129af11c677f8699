//! Self-checks run by `radtrig verify`.
//!
//! Every check compares the closed forms against an independent route
//! (finite differences, the quadrature oracle, or exact lattice values) and
//! reports the worst discrepancy next to its tolerance. Random points come
//! from a fixed-seed ChaCha stream so the report is reproducible.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abs_rules::{integral_abs_cos, integral_abs_sin};
use crate::antiderivative::{ClosedForm, Form};
use crate::cardioid::Cardioid;
use crate::error::Result;
use crate::format::fmt_g15;
use crate::globalize::{definite_integral, globalize, jump_at, Method};
use crate::kernel::{eval_integrand, Family, IntegrandSpec, Sign, SignCarrier};
use crate::quadrature::integrate_adaptive;

const SEED: u64 = 0x5eed_2014;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    All,
    Forms,
    Av,
    Cardioid,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub max_error: f64,
    pub tolerance: f64,
}

impl Check {
    fn new(name: impl Into<String>, max_error: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            max_error,
            tolerance,
        }
    }

    pub fn passed(&self) -> bool {
        self.max_error <= self.tolerance
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}  {:<52} max_err={:<22} tol={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            fmt_g15(self.max_error),
            fmt_g15(self.tolerance)
        )
    }
}

/// Uniform points in `[lo, hi)` at least `clearance` away from the carrier's zeros.
fn clear_points(
    rng: &mut ChaCha8Rng,
    carrier: SignCarrier,
    lo: f64,
    hi: f64,
    clearance: f64,
    n: usize,
) -> Vec<f64> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let x = rng.random_range(lo..hi);
        let near = carrier
            .breakpoints(x - clearance, x + clearance)
            .map(|b| !b.is_empty())
            .unwrap_or(true);
        if !near && !carrier.is_breakpoint(x - clearance) && !carrier.is_breakpoint(x + clearance) {
            out.push(x);
        }
    }
    out
}

fn worst(errors: impl IntoIterator<Item = f64>) -> f64 {
    errors.into_iter().fold(0.0, |m, e| {
        if e.is_nan() || m.is_nan() {
            f64::NAN
        } else {
            m.max(e)
        }
    })
}

/// Relative error of the symmetric difference quotient against the integrand.
pub fn derivative_recovery(cf: ClosedForm, xs: &[f64]) -> Result<f64> {
    const H: f64 = 1e-6;
    let mut errs = Vec::with_capacity(xs.len());
    for &x in xs {
        let d = (cf.eval(x + H)? - cf.eval(x - H)?) / (2.0 * H);
        let want = eval_integrand(cf.spec, x)?;
        errs.push((d - want).abs() / want);
    }
    Ok(worst(errs))
}

/// Largest `|G(b + δ) − G(b − δ)|` over the carrier zeros in `[lo, hi]`.
pub fn continuity_gap(
    eval: impl Fn(f64) -> Result<f64>,
    carrier: SignCarrier,
    lo: f64,
    hi: f64,
) -> Result<f64> {
    const DELTA: f64 = 1e-9;
    let mut gaps = Vec::new();
    for b in carrier.breakpoints(lo, hi)? {
        gaps.push((eval(b + DELTA)? - eval(b - DELTA)?).abs());
    }
    Ok(worst(gaps))
}

fn forms_checks(out: &mut Vec<Check>) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let span = 4.0 * PI;

    let golden = [
        (SignCarrier::CosX, vec![PI / 2.0, 3.0 * PI / 2.0]),
        (SignCarrier::CosHalfPlusSinHalf, vec![3.0 * PI / 2.0]),
        (SignCarrier::CosHalfMinusSinHalf, vec![PI / 2.0]),
    ];
    for (c, want) in golden {
        let got = c.breakpoints(0.0, 2.0 * PI)?;
        let err = if got == want { 0.0 } else { f64::INFINITY };
        out.push(Check::new(
            format!("forms/breakpoints {c} on [0, 2pi]"),
            err,
            0.0,
        ));
    }

    for cf in ClosedForm::all() {
        let xs = clear_points(&mut rng, cf.carrier(), -2.0 * PI, 2.0 * PI, 1e-3, 1000);
        out.push(Check::new(
            format!("forms/derivative {cf}"),
            derivative_recovery(cf, &xs)?,
            1e-5,
        ));
    }

    for spec in IntegrandSpec::ALL {
        for form in [Form::FloorShiftForward, Form::FloorShiftBackward] {
            let cf = ClosedForm::new(spec, form);
            let gap = continuity_gap(|x| cf.eval(x), cf.carrier(), -span, span)?;
            out.push(Check::new(format!("forms/continuity {cf}"), gap, 1e-6));
        }
    }

    for spec in IntegrandSpec::ALL {
        let floor = ClosedForm::new(spec, Form::FloorShiftForward);
        for form in Form::LOCAL {
            let cf = ClosedForm::new(spec, form);
            let lat = cf.carrier().lattice();
            let g = globalize(cf, 0.5 * (lat.zero(0) + lat.zero(1)))?;
            let gap = continuity_gap(|x| g.eval(x), cf.carrier(), -span, span)?;
            out.push(Check::new(
                format!("forms/globalized continuity {cf}"),
                gap,
                1e-6,
            ));
            let mut diffs = Vec::with_capacity(2001);
            for i in 0..=2000 {
                let x = -span + 2.0 * span * i as f64 / 2000.0;
                diffs.push(g.eval(x)? - floor.eval(x)?);
            }
            let spread = diffs.iter().cloned().fold(f64::MIN, f64::max)
                - diffs.iter().cloned().fold(f64::MAX, f64::min);
            out.push(Check::new(
                format!("forms/globalized - floor const {cf}"),
                spread,
                1e-9,
            ));
        }
    }

    let sp = IntegrandSpec::new(Family::Sine, Sign::Plus);
    let a = ClosedForm::new(sp, Form::Rationalized);
    out.push(Check::new(
        "forms/jump A at 3pi/2 = -4sqrt2",
        (jump_at(a, 3.0 * PI / 2.0)? + 4.0 * SQRT_2).abs(),
        1e-10,
    ));
    out.push(Check::new(
        "forms/jump A at pi/2 = 0",
        jump_at(a, FRAC_PI_2)?.abs(),
        1e-10,
    ));

    for spec in IntegrandSpec::ALL {
        let mut errs = Vec::new();
        for m in [Method::GlobalForm, Method::SplitLocal, Method::FloorForm] {
            errs.push((definite_integral(spec, 0.0, 2.0 * PI, m)? - 4.0 * SQRT_2).abs());
        }
        out.push(Check::new(
            format!("forms/full period {spec}"),
            worst(errs),
            1e-12,
        ));
    }
    out.push(Check::new(
        "forms/quarter period sqrt(1 + sin x) = 2",
        (definite_integral(sp, 0.0, FRAC_PI_2, Method::SplitLocal)? - 2.0).abs(),
        1e-12,
    ));

    for spec in IntegrandSpec::ALL {
        let mut errs = Vec::new();
        for _ in 0..25 {
            let p = rng.random_range(-span..span);
            let q = rng.random_range(-span..span);
            let vals = Method::ALL
                .iter()
                .map(|&m| definite_integral(spec, p, q, m))
                .collect::<Result<Vec<_>>>()?;
            let hi = vals.iter().cloned().fold(f64::MIN, f64::max);
            let lo = vals.iter().cloned().fold(f64::MAX, f64::min);
            errs.push(hi - lo);
        }
        out.push(Check::new(
            format!("forms/method agreement {spec}"),
            worst(errs),
            1e-8,
        ));
    }
    Ok(())
}

fn av_checks(out: &mut Vec<Check>) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xa5);
    for alpha in [0.5, 1.0, 2.0, 3.0] {
        let mut sin_errs = Vec::new();
        let mut cos_errs = Vec::new();
        for _ in 0..50 {
            let a = rng.random_range(-10.0..10.0);
            let b = rng.random_range(-10.0..10.0);
            let qs = integrate_adaptive(|x: f64| (alpha * x).sin().abs(), a, b, 1e-11)?;
            let qc = integrate_adaptive(|x: f64| (alpha * x).cos().abs(), a, b, 1e-11)?;
            let s = integral_abs_sin(alpha, b)? - integral_abs_sin(alpha, a)?;
            let c = integral_abs_cos(alpha, b)? - integral_abs_cos(alpha, a)?;
            sin_errs.push((s - qs.value).abs());
            cos_errs.push((c - qc.value).abs());
        }
        out.push(Check::new(
            format!("av/|sin {}x| vs oracle", fmt_g15(alpha)),
            worst(sin_errs),
            1e-8,
        ));
        out.push(Check::new(
            format!("av/|cos {}x| vs oracle", fmt_g15(alpha)),
            worst(cos_errs),
            1e-8,
        ));

        let mut gaps = Vec::new();
        for k in -8..=8 {
            let zs = k as f64 * PI / alpha;
            let zc = (k as f64 + 0.5) * PI / alpha;
            gaps.push(
                (integral_abs_sin(alpha, zs + 1e-9)? - integral_abs_sin(alpha, zs - 1e-9)?).abs(),
            );
            gaps.push(
                (integral_abs_cos(alpha, zc + 1e-9)? - integral_abs_cos(alpha, zc - 1e-9)?).abs(),
            );
        }
        out.push(Check::new(
            format!("av/continuity alpha={}", fmt_g15(alpha)),
            worst(gaps),
            1e-6,
        ));
    }
    out.push(Check::new(
        "av/int_0^2pi |sin x| = 4",
        (integral_abs_sin(1.0, 2.0 * PI)? - integral_abs_sin(1.0, 0.0)? - 4.0).abs(),
        1e-10,
    ));
    out.push(Check::new(
        "av/int_0^pi |cos x| = 2",
        (integral_abs_cos(1.0, PI)? - integral_abs_cos(1.0, 0.0)? - 2.0).abs(),
        1e-10,
    ));
    Ok(())
}

fn cardioid_checks(out: &mut Vec<Check>) -> Result<()> {
    for spec in IntegrandSpec::ALL {
        for m in Method::ALL {
            let tol = if m == Method::Oracle { 1e-6 } else { 1e-12 };
            let mut errs = Vec::new();
            for a in [0.5, 1.0, 2.5] {
                let c = Cardioid::new(a, spec.family, spec.sign)?;
                errs.push((c.length(m)? - 8.0 * a).abs());
            }
            out.push(Check::new(
                format!("cardioid/r = a(1 {} {} t) {m}", spec.sign, spec.family),
                worst(errs),
                tol,
            ));
        }
    }
    let n = 1024;
    let sine = Cardioid::new(1.0, Family::Sine, Sign::Plus)?.sample_curve(n)?;
    let cosine = Cardioid::new(1.0, Family::Cosine, Sign::Plus)?.sample_curve(n)?;
    let errs = (0..=n).map(|k| {
        // rotate by -90 degrees: (x, y) -> (y, -x)
        let (sx, sy) = sine[(k + n / 4) % n];
        let (cx, cy) = cosine[k];
        (cx - sy).abs().max((cy + sx).abs())
    });
    out.push(Check::new(
        "cardioid/cos = sin rotated -90deg",
        worst(errs),
        1e-12,
    ));
    Ok(())
}

pub fn run(scope: Scope) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    if matches!(scope, Scope::All | Scope::Forms) {
        forms_checks(&mut out)?;
    }
    if matches!(scope, Scope::All | Scope::Av) {
        av_checks(&mut out)?;
    }
    if matches!(scope, Scope::All | Scope::Cardioid) {
        cardioid_checks(&mut out)?;
    }
    Ok(out)
}
