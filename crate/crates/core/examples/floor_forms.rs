//! The floor and ceiling antiderivatives are continuous everywhere, so one
//! subtraction gives any definite integral, however many periods it spans.

use std::f64::consts::PI;

use radtrig::antiderivative::eval_backward_floor_variant;
use radtrig::{ClosedForm, Form, IntegrandSpec};

fn main() -> radtrig::Result<()> {
    for spec in IntegrandSpec::ALL {
        let fwd = ClosedForm::new(spec, Form::FloorShiftForward);
        let bwd = ClosedForm::new(spec, Form::FloorShiftBackward);
        println!("{spec}");
        for periods in [1.0, 2.5, 10.0] {
            let b = periods * 2.0 * PI;
            println!(
                "  int_0^{:<5} forward {:.12}  backward {:.12}",
                format!("{periods}*2pi"),
                fwd.eval(b)? - fwd.eval(0.0)?,
                bwd.eval(b)? - bwd.eval(0.0)?,
            );
        }
        // the ceiling-based form and its floor rewrite agree
        let x = 7.3;
        println!(
            "  backward at {x}: ceiling {:.15}  floor {:.15}",
            bwd.eval(x)?,
            eval_backward_floor_variant(spec, x)?
        );
    }
    Ok(())
}
