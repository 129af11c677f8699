//! Local forms jump at carrier zeros. Measuring the jumps and subtracting
//! their running sum produces a continuous antiderivative.

use std::f64::consts::PI;

use radtrig::{globalize, jump_at, ClosedForm, Family, Form, IntegrandSpec, Sign};

fn main() -> radtrig::Result<()> {
    let cf = ClosedForm::new(
        IntegrandSpec::new(Family::Sine, Sign::Plus),
        Form::Rationalized,
    );
    println!("jumps of {} form {}:", cf.spec, cf.form.short_name());
    for z in cf.carrier().breakpoints(-2.0 * PI, 4.0 * PI)? {
        println!("  at {z:+.6}: {:+.12}", jump_at(cf, z)?);
    }

    let g = globalize(cf, 0.0)?;
    println!("continuous form based at 0:");
    for k in -4..=8 {
        let x = k as f64 * PI / 2.0;
        println!(
            "  x={x:+.6}  local {:+.9}  global {:+.9}",
            cf.eval(x)?,
            g.eval(x)?
        );
    }
    println!("over one period: {:.15}", g.eval(2.0 * PI)? - g.eval(0.0)?);
    Ok(())
}
