//! Continuous global antiderivatives built from local forms, and definite
//! integrals by sign splitting.

use std::fmt;
use std::sync::OnceLock;

use crate::antiderivative::{eval_local_form, ClosedForm, Form};
use crate::error::{finite, Error, Result};
use crate::kernel::{IntegrandSpec, Lattice};
use crate::quadrature::integrate_adaptive;

/// Half-width of the finite-difference bracket used to cross-check jumps.
pub const JUMP_PROBE: f64 = 1e-7;
const JUMP_CHECK_TOL: f64 = 1e-5;
/// A base point this close to a breakpoint is rejected.
pub const BASE_CLEARANCE: f64 = 1e-9;
/// Tolerance handed to the quadrature oracle by [`definite_integral`].
pub const ORACLE_TOL: f64 = 1e-11;

// 2π in units of π/4
const FULL_TURN_QUARTERS: i64 = 8;

fn require_local(cf: ClosedForm) -> Result<()> {
    if cf.form.is_local() {
        Ok(())
    } else {
        Err(Error::WrongFormKind(cf.form.short_name()))
    }
}

/// Jump of the local form across the `k`-th lattice zero, from the sign flip.
fn analytic_jump(cf: ClosedForm, lat: &Lattice, k: i64) -> Result<f64> {
    let z = lat.zero(k);
    let left_sign = cf.carrier().interval_sign(k - 1);
    Ok(-2.0 * left_sign * cf.continuous_factor(z)?)
}

/// `lim_{ε→0⁺} [cf(b + ε) − cf(b − ε)]` at a carrier zero `b`.
pub fn jump_at(cf: ClosedForm, b: f64) -> Result<f64> {
    require_local(cf)?;
    let b = finite("jump_at", b)?;
    let lat = cf.carrier().lattice();
    let k = lat.snap(b).ok_or(Error::NotABreakpoint(b))?;
    let analytic = analytic_jump(cf, &lat, k)?;
    let z = lat.zero(k);
    let numeric = eval_local_form(cf, z + JUMP_PROBE)? - eval_local_form(cf, z - JUMP_PROBE)?;
    if (numeric - analytic).abs() > JUMP_CHECK_TOL {
        return Err(Error::JumpMismatch {
            at: z,
            analytic,
            numeric,
        });
    }
    Ok(analytic)
}

#[derive(Debug)]
struct JumpTable {
    // prefix[r] = sum of jumps at zeros 0..r within one 2π cycle
    prefix: Vec<f64>,
    cycle_sum: f64,
}

impl JumpTable {
    fn build(cf: ClosedForm, lat: &Lattice) -> Result<Self> {
        let cycle = FULL_TURN_QUARTERS / lat.period;
        let mut prefix = Vec::with_capacity(cycle as usize + 1);
        let mut acc = 0.0;
        prefix.push(acc);
        for k in 0..cycle {
            acc += analytic_jump(cf, lat, k)?;
            prefix.push(acc);
        }
        Ok(Self {
            cycle_sum: acc,
            prefix,
        })
    }

    /// Sum of the jumps at zeros with index `< k`, relative to index 0.
    fn cumulative(&self, k: i64) -> f64 {
        let cycle = (self.prefix.len() - 1) as i64;
        let q = k.div_euclid(cycle);
        let r = k.rem_euclid(cycle) as usize;
        q as f64 * self.cycle_sum + self.prefix[r]
    }
}

/// A local form plus per-interval constants that cancel its jumps.
///
/// Equal to the local form on the interval containing `base`.
pub struct PiecewiseAntiderivative {
    local: ClosedForm,
    base: f64,
    lattice: Lattice,
    base_interval: i64,
    jumps: OnceLock<JumpTable>,
}

impl fmt::Debug for PiecewiseAntiderivative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PiecewiseAntiderivative")
            .field("local", &self.local)
            .field("base", &self.base)
            .field("base_interval", &self.base_interval)
            .finish_non_exhaustive()
    }
}

impl PiecewiseAntiderivative {
    pub fn local(&self) -> ClosedForm {
        self.local
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    fn table(&self) -> &JumpTable {
        // every zero of the lattice is a valid breakpoint for a local form,
        // so building the table cannot fail once `globalize` has accepted it
        self.jumps.get_or_init(|| {
            JumpTable::build(self.local, &self.lattice).expect("local form has a jump table")
        })
    }

    /// Constant added on lattice interval `j`.
    pub fn correction(&self, j: i64) -> f64 {
        let t = self.table();
        t.cumulative(self.base_interval + 1) - t.cumulative(j + 1)
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let x = finite("PiecewiseAntiderivative::eval", x)?;
        let j = self.lattice.interval_index(x);
        Ok(eval_local_form(self.local, x)? + self.correction(j))
    }
}

/// Makes a local form continuous by accumulating jump corrections outward
/// from the interval that contains `base`.
pub fn globalize(cf: ClosedForm, base: f64) -> Result<PiecewiseAntiderivative> {
    require_local(cf)?;
    let base = finite("globalize", base)?;
    let lattice = cf.carrier().lattice();
    let j = lattice.interval_index(base);
    let clearance = (base - lattice.zero(j))
        .abs()
        .min((lattice.zero(j + 1) - base).abs());
    if clearance < BASE_CLEARANCE {
        return Err(Error::BaseOnBreakpoint(base));
    }
    let pw = PiecewiseAntiderivative {
        local: cf,
        base,
        lattice,
        base_interval: j,
        jumps: OnceLock::new(),
    };
    // fill eagerly so a bad form errors here rather than inside eval
    let table = JumpTable::build(cf, &lattice)?;
    let _ = pw.jumps.set(table);
    Ok(pw)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Globalized half-angle form.
    GlobalForm,
    /// Split at the zeros of `cos x` (or `sin x`) and sum rationalized-form differences.
    SplitLocal,
    /// Floor-function global form.
    FloorForm,
    /// Adaptive quadrature.
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::GlobalForm,
        Method::SplitLocal,
        Method::FloorForm,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::GlobalForm => "global",
            Method::SplitLocal => "split",
            Method::FloorForm => "floor",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of the sign-splitting route.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitIntegral {
    pub value: f64,
    /// Interior points where the range was cut, in increasing order.
    pub splits: Vec<f64>,
}

/// `∫ₐᵇ` by cutting at the carrier zeros and, on each piece, taking the
/// difference of the local form with that piece's sign held fixed.
pub fn split_local_integral(cf: ClosedForm, a: f64, b: f64) -> Result<SplitIntegral> {
    require_local(cf)?;
    let a = finite("split_local_integral", a)?;
    let b = finite("split_local_integral", b)?;
    if a == b {
        return Ok(SplitIntegral {
            value: 0.0,
            splits: Vec::new(),
        });
    }
    let (lo, hi, orient) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let carrier = cf.carrier();
    let splits = carrier.breakpoints(lo, hi)?;
    let mut edges = Vec::with_capacity(splits.len() + 2);
    edges.push(lo);
    edges.extend_from_slice(&splits);
    edges.push(hi);
    let mut value = 0.0;
    for w in edges.windows(2) {
        let (l, r) = (w[0], w[1]);
        let s = carrier.sign_left(0.5 * (l + r));
        value += s * (cf.continuous_factor(r)? - cf.continuous_factor(l)?);
    }
    Ok(SplitIntegral {
        value: orient * value,
        splits,
    })
}

/// A point strictly inside lattice interval 0 of the form's carrier.
fn default_base(cf: ClosedForm) -> f64 {
    let lat = cf.carrier().lattice();
    0.5 * (lat.zero(0) + lat.zero(1))
}

/// `∫ₐᵇ √(1 ± trig x) dx` by the chosen route; `∫ₐᵇ = −∫ᵇₐ`.
pub fn definite_integral(spec: IntegrandSpec, a: f64, b: f64, method: Method) -> Result<f64> {
    let a = finite("definite_integral", a)?;
    let b = finite("definite_integral", b)?;
    if a == b {
        return Ok(0.0);
    }
    match method {
        Method::GlobalForm => {
            let cf = ClosedForm::new(spec, Form::HalfAngle);
            let g = globalize(cf, default_base(cf))?;
            Ok(g.eval(b)? - g.eval(a)?)
        }
        Method::SplitLocal => {
            Ok(split_local_integral(ClosedForm::new(spec, Form::Rationalized), a, b)?.value)
        }
        Method::FloorForm => {
            let cf = ClosedForm::new(spec, Form::FloorShiftForward);
            Ok(cf.eval(b)? - cf.eval(a)?)
        }
        Method::Oracle => {
            let f = move |x: f64| spec.radicand(x).max(0.0).sqrt();
            Ok(integrate_adaptive(f, a, b, ORACLE_TOL)?.value)
        }
    }
}
