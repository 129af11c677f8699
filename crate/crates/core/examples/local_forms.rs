//! Evaluates the four sign-based local antiderivatives of each integrand
//! across one period, showing that they differ only by constants on each
//! interval between carrier zeros.

use std::f64::consts::PI;

use radtrig::{ClosedForm, Form, IntegrandSpec};

fn main() -> radtrig::Result<()> {
    for spec in IntegrandSpec::ALL {
        println!("{spec}");
        let carrier = ClosedForm::new(spec, Form::Rationalized).carrier();
        println!(
            "  zeros of {carrier} in (0, 2pi): {:?}",
            carrier.breakpoints(0.0, 2.0 * PI)?
        );
        for k in 0..8 {
            let x = 0.1 + k as f64 * PI / 4.0;
            let row: Vec<String> = Form::LOCAL
                .iter()
                .map(|&f| {
                    Ok(format!(
                        "{}={:+.6}",
                        f.short_name(),
                        ClosedForm::new(spec, f).eval(x)?
                    ))
                })
                .collect::<radtrig::Result<_>>()?;
            println!("  x={x:.4}  {}", row.join("  "));
        }
    }
    Ok(())
}
