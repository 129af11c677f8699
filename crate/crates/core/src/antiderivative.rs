//! Closed-form antiderivatives of the four radical integrands.
//!
//! Local forms are `sgn(carrier)·g(x)` with `g` continuous. They are valid
//! antiderivatives on each open interval between consecutive zeros of the
//! carrier and may jump across those zeros; at a zero the left limit is
//! returned. Floor forms are continuous on all of ℝ.
//!
//! | form              | sine family                                   | cosine family                      |
//! |-------------------|-----------------------------------------------|------------------------------------|
//! | `Rationalized`    | `∓2 sgn(cos x) √(1 ∓ sin x)`                  | `±2 sgn(sin x) √(1 ∓ cos x)`       |
//! | `HalfAngle`       | `2 sgn(cos x/2 ± sin x/2)(sin x/2 ∓ cos x/2)` | `2√2 sgn(cos x/2) sin x/2` (+), `−2√2 sgn(sin x/2) cos x/2` (−) |
//! | `ShiftForward`    | `−2√2 sgn[sin(x/2 ± π/4)] cos(x/2 ± π/4)`     | sine form at `x + π/2`             |
//! | `ShiftBackward`   | `2√2 sgn[cos(x/2 ∓ π/4)] sin(x/2 ∓ π/4)`      | sine form at `x + π/2`             |
//! | `FloorShiftForward`  | `I₁`, `I₂` with `⌊x/2π + ¼⌋`, `⌊x/2π + ¾⌋` | `√2·∫|cos x/2|`, `√2·∫|sin x/2|` via the floor rules |
//! | `FloorShiftBackward` | `I₁`, `I₂` with `⌈x/2π − ¾⌉`, `⌈x/2π − ¼⌉` | the same rules applied to `−x` (ceiling form) |

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};
use std::fmt;

use crate::abs_rules::{integral_abs_cos, integral_abs_sin};
use crate::error::{finite, Error, Result};
use crate::kernel::{Family, IntegrandSpec, Sign, SignCarrier};

const TWO_SQRT_2: f64 = 2.0 * SQRT_2;
const FOUR_SQRT_2: f64 = 4.0 * SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Form {
    /// Rationalized numerator, `|trig'| / √(1 ∓ trig)`.
    Rationalized,
    /// Half-angle square completion.
    HalfAngle,
    /// Variable shift `x = y − π/2`.
    ShiftForward,
    /// Variable shift `x = π/2 − y`.
    ShiftBackward,
    /// Floor-function global form from the forward shift.
    FloorShiftForward,
    /// Ceiling-function global form from the backward shift.
    FloorShiftBackward,
}

impl Form {
    pub const ALL: [Form; 6] = [
        Form::Rationalized,
        Form::HalfAngle,
        Form::ShiftForward,
        Form::ShiftBackward,
        Form::FloorShiftForward,
        Form::FloorShiftBackward,
    ];

    pub const LOCAL: [Form; 4] = [
        Form::Rationalized,
        Form::HalfAngle,
        Form::ShiftForward,
        Form::ShiftBackward,
    ];

    pub fn is_local(self) -> bool {
        !matches!(self, Form::FloorShiftForward | Form::FloorShiftBackward)
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Form::Rationalized => "A",
            Form::HalfAngle => "B",
            Form::ShiftForward => "C1",
            Form::ShiftBackward => "C2",
            Form::FloorShiftForward => "G1",
            Form::FloorShiftBackward => "G2",
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

/// A closed-form antiderivative bound to one integrand, with `C = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClosedForm {
    pub spec: IntegrandSpec,
    pub form: Form,
}

impl ClosedForm {
    pub const fn new(spec: IntegrandSpec, form: Form) -> Self {
        Self { spec, form }
    }

    /// Every (integrand, form) pair.
    pub fn all() -> impl Iterator<Item = ClosedForm> {
        IntegrandSpec::ALL
            .into_iter()
            .flat_map(|s| Form::ALL.into_iter().map(move |f| ClosedForm::new(s, f)))
    }

    /// For local forms, the `sgn(·)` argument. For floor forms, the carrier
    /// whose zeros are the points where the floor/ceiling steps.
    pub fn carrier(&self) -> SignCarrier {
        use Family::*;
        use Sign::*;
        let IntegrandSpec { family, sign } = self.spec;
        match (self.form, family, sign) {
            (Form::Rationalized, Sine, _) => SignCarrier::CosX,
            (Form::Rationalized, Cosine, _) => SignCarrier::SinX,
            (Form::HalfAngle, Sine, Plus) => SignCarrier::CosHalfPlusSinHalf,
            (Form::HalfAngle, Sine, Minus) => SignCarrier::CosHalfMinusSinHalf,
            (Form::HalfAngle, Cosine, Plus) => SignCarrier::CosHalf,
            (Form::HalfAngle, Cosine, Minus) => SignCarrier::SinHalf,
            (Form::ShiftForward, ..) => SignCarrier::SinHalfShift {
                quarter_pis: self.shift_quarters(),
            },
            (Form::ShiftBackward, ..) => SignCarrier::CosHalfShift {
                quarter_pis: self.shift_quarters(),
            },
            (Form::FloorShiftForward, Sine, Plus) => SignCarrier::SinHalfShift { quarter_pis: 1 },
            (Form::FloorShiftForward, Sine, Minus) => SignCarrier::CosHalfShift { quarter_pis: 1 },
            (Form::FloorShiftBackward, Sine, Plus) => SignCarrier::CosHalfShift { quarter_pis: -1 },
            (Form::FloorShiftBackward, Sine, Minus) => {
                SignCarrier::SinHalfShift { quarter_pis: -1 }
            }
            (Form::FloorShiftForward | Form::FloorShiftBackward, Cosine, Plus) => {
                SignCarrier::CosHalf
            }
            (Form::FloorShiftForward | Form::FloorShiftBackward, Cosine, Minus) => {
                SignCarrier::SinHalf
            }
        }
    }

    // Half-angle phase offset (in π/4) of the shift forms. Cosine forms are
    // the sine forms translated by π/2, i.e. one more quarter in x/2.
    fn shift_quarters(&self) -> i32 {
        let sine = match (self.form, self.spec.sign) {
            (Form::ShiftForward, Sign::Plus) | (Form::ShiftBackward, Sign::Minus) => 1,
            _ => -1,
        };
        match self.spec.family {
            Family::Sine => sine,
            Family::Cosine => sine + 1,
        }
    }

    /// The continuous factor `g` of a local form `sgn(carrier)·g`.
    pub fn continuous_factor(&self, x: f64) -> Result<f64> {
        use Family::*;
        use Sign::*;
        let h = 0.5 * x;
        let IntegrandSpec { family, sign } = self.spec;
        Ok(match (self.form, family, sign) {
            (Form::Rationalized, Sine, Plus) => -2.0 * (1.0 - x.sin()).sqrt(),
            (Form::Rationalized, Sine, Minus) => 2.0 * (1.0 + x.sin()).sqrt(),
            (Form::Rationalized, Cosine, Plus) => 2.0 * (1.0 - x.cos()).sqrt(),
            (Form::Rationalized, Cosine, Minus) => -2.0 * (1.0 + x.cos()).sqrt(),
            (Form::HalfAngle, Sine, Plus) => 2.0 * (h.sin() - h.cos()),
            (Form::HalfAngle, Sine, Minus) => 2.0 * (h.sin() + h.cos()),
            (Form::HalfAngle, Cosine, Plus) => TWO_SQRT_2 * h.sin(),
            (Form::HalfAngle, Cosine, Minus) => -TWO_SQRT_2 * h.cos(),
            (Form::ShiftForward, ..) => {
                -TWO_SQRT_2 * (h + self.shift_quarters() as f64 * FRAC_PI_4).cos()
            }
            (Form::ShiftBackward, ..) => {
                TWO_SQRT_2 * (h + self.shift_quarters() as f64 * FRAC_PI_4).sin()
            }
            (Form::FloorShiftForward | Form::FloorShiftBackward, ..) => {
                return Err(Error::WrongFormKind(self.form.short_name()))
            }
        })
    }

    /// Evaluates whichever kind of form this is.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if self.form.is_local() {
            eval_local_form(*self, x)
        } else {
            eval_global_floor_form(*self, x)
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.form, self.spec)
    }
}

/// Local form value; at a carrier zero the left limit is returned.
pub fn eval_local_form(cf: ClosedForm, x: f64) -> Result<f64> {
    let x = finite("eval_local_form", x)?;
    let g = cf.continuous_factor(x)?;
    Ok(cf.carrier().sign_left(x) * g)
}

/// `⌈t⌉` through `⌊t⌋ + ⌈−t⌉ = 0`.
fn ceil_via_floor(t: f64) -> f64 {
    -(-t).floor()
}

/// Floor/ceiling global antiderivative, continuous in `x`.
pub fn eval_global_floor_form(cf: ClosedForm, x: f64) -> Result<f64> {
    use Family::*;
    use Sign::*;
    let x = finite("eval_global_floor_form", x)?;
    let h = 0.5 * x;
    let turns = x / (2.0 * PI);
    Ok(match (cf.form, cf.spec.family, cf.spec.sign) {
        (Form::FloorShiftForward, Sine, Plus) => {
            let n = (turns + 0.25).floor();
            FOUR_SQRT_2 * n - TWO_SQRT_2 * (h + FRAC_PI_4 - n * PI).cos()
        }
        (Form::FloorShiftForward, Sine, Minus) => {
            let n = (turns + 0.75).floor();
            FOUR_SQRT_2 * n + TWO_SQRT_2 * (h + FRAC_PI_4 - n * PI).sin()
        }
        (Form::FloorShiftBackward, Sine, Plus) => {
            let m = ceil_via_floor(turns - 0.75);
            FOUR_SQRT_2 * m + TWO_SQRT_2 * (h - FRAC_PI_4 - m * PI).sin()
        }
        (Form::FloorShiftBackward, Sine, Minus) => {
            let m = ceil_via_floor(turns - 0.25);
            FOUR_SQRT_2 * m + TWO_SQRT_2 * (h - FRAC_PI_4 - m * PI).cos()
        }
        // √(1 + cos x) = √2|cos(x/2)|, √(1 − cos x) = √2|sin(x/2)|
        (Form::FloorShiftForward, Cosine, Plus) => SQRT_2 * integral_abs_cos(0.5, x)?,
        (Form::FloorShiftForward, Cosine, Minus) => SQRT_2 * integral_abs_sin(0.5, x)?,
        (Form::FloorShiftBackward, Cosine, Plus) => -SQRT_2 * integral_abs_cos(0.5, -x)?,
        (Form::FloorShiftBackward, Cosine, Minus) => -SQRT_2 * integral_abs_sin(0.5, -x)?,
        _ => return Err(Error::WrongFormKind(cf.form.short_name())),
    })
}

/// Backward sine floor forms written with floors of `¾ − x/2π` and
/// `¼ − x/2π`, before the ceiling rewrite.
pub fn eval_backward_floor_variant(spec: IntegrandSpec, x: f64) -> Result<f64> {
    let x = finite("eval_backward_floor_variant", x)?;
    let h = 0.5 * x;
    let turns = x / (2.0 * PI);
    Ok(match (spec.family, spec.sign) {
        (Family::Sine, Sign::Plus) => {
            let n = (0.75 - turns).floor();
            -FOUR_SQRT_2 * n + TWO_SQRT_2 * (h - FRAC_PI_4 + n * PI).sin()
        }
        (Family::Sine, Sign::Minus) => {
            let n = (0.25 - turns).floor();
            -FOUR_SQRT_2 * n + TWO_SQRT_2 * (h - FRAC_PI_4 + n * PI).cos()
        }
        (Family::Cosine, Sign::Plus) => {
            let m = ceil_via_floor(turns - 0.5);
            SQRT_2 * (4.0 * m + 2.0 * (h - m * PI).sin())
        }
        (Family::Cosine, Sign::Minus) => {
            let m = ceil_via_floor(turns);
            SQRT_2 * (4.0 * m + 2.0 * (h - m * PI).cos())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::eval_integrand;
    use std::f64::consts::FRAC_PI_2;

    const SP: IntegrandSpec = IntegrandSpec::new(Family::Sine, Sign::Plus);
    const SM: IntegrandSpec = IntegrandSpec::new(Family::Sine, Sign::Minus);
    const CP: IntegrandSpec = IntegrandSpec::new(Family::Cosine, Sign::Plus);

    #[test]
    fn local_spot_values() {
        let a = ClosedForm::new(SP, Form::Rationalized);
        assert_eq!(a.eval(0.0).unwrap(), -2.0);
        assert!((a.eval(FRAC_PI_2).unwrap() - a.eval(0.0).unwrap() - 2.0).abs() < 1e-12);
        let b = ClosedForm::new(SP, Form::HalfAngle);
        assert!((b.eval(PI).unwrap() - 2.0).abs() < 1e-15);
        let cb = ClosedForm::new(CP, Form::HalfAngle);
        assert_eq!(cb.eval(0.0).unwrap(), 0.0);
    }

    #[test]
    fn floor_spot_values() {
        let g1 = ClosedForm::new(SP, Form::FloorShiftForward);
        assert!((g1.eval(0.0).unwrap() + 2.0).abs() < 1e-15);
        assert!((g1.eval(2.0 * PI).unwrap() - g1.eval(0.0).unwrap() - 4.0 * SQRT_2).abs() < 1e-12);
        let g2 = ClosedForm::new(SM, Form::FloorShiftForward);
        assert!((g2.eval(0.0).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn wrong_kind_rejected() {
        let g = ClosedForm::new(SP, Form::FloorShiftForward);
        assert!(matches!(
            eval_local_form(g, 0.0),
            Err(Error::WrongFormKind(_))
        ));
        let a = ClosedForm::new(SP, Form::Rationalized);
        assert!(matches!(
            eval_global_floor_form(a, 0.0),
            Err(Error::WrongFormKind(_))
        ));
        assert!(a.eval(f64::NAN).is_err());
    }

    #[test]
    fn ceiling_and_floor_variants_agree() {
        for spec in IntegrandSpec::ALL {
            let g = ClosedForm::new(spec, Form::FloorShiftBackward);
            for i in -400..=400 {
                let x = i as f64 * 0.0371;
                let a = g.eval(x).unwrap();
                let b = eval_backward_floor_variant(spec, x).unwrap();
                assert!((a - b).abs() < 1e-12, "{spec} at {x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn ceil_identity() {
        for t in [-2.5, -2.0, -0.1, 0.0, 0.3, 1.0, 7.9] {
            assert_eq!(ceil_via_floor(t), t.ceil());
        }
    }

    #[test]
    fn every_form_differentiates_to_its_integrand() {
        let h = 1e-6;
        for cf in ClosedForm::all() {
            let carrier = cf.carrier();
            for i in 0..200 {
                let x = -6.0 + i as f64 * 0.0613;
                let near = carrier
                    .breakpoints(x - 1e-3, x + 1e-3)
                    .map(|v| !v.is_empty())
                    .unwrap();
                if near {
                    continue;
                }
                let d = (cf.eval(x + h).unwrap() - cf.eval(x - h).unwrap()) / (2.0 * h);
                let want = eval_integrand(cf.spec, x).unwrap();
                assert!(
                    ((d - want) / want).abs() < 1e-5,
                    "{cf} at {x}: {d} vs {want}"
                );
            }
        }
    }
}
