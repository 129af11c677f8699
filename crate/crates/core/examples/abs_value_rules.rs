//! Antiderivatives of |sin ax| and |cos ax|, and the two general rules for
//! |f| and |f|/sqrt(F) built on a sign carrier.

use radtrig::{
    abs_antiderivative, abs_over_sqrt_antiderivative, integral_abs_cos, integral_abs_sin,
    AbsFunctionDescriptor, SignCarrier,
};

fn main() -> radtrig::Result<()> {
    for alpha in [0.5, 1.0, 2.0, 3.0] {
        let period = std::f64::consts::PI / alpha;
        println!(
            "alpha={alpha}: int over one period |sin| = {:.12}, |cos| = {:.12}",
            integral_abs_sin(alpha, period)? - integral_abs_sin(alpha, 0.0)?,
            integral_abs_cos(alpha, period)? - integral_abs_cos(alpha, 0.0)?,
        );
    }

    // f = cos x with F = 1 + sin x: |cos x| / sqrt(1 + sin x) integrates to sqrt(1 - sin x) times a sign
    let d = AbsFunctionDescriptor::new(f64::cos, |x: f64| 1.0 + x.sin(), SignCarrier::CosX);
    for x in [0.3, 1.0, 2.0, 4.0] {
        println!(
            "|f|/sqrt(F) at {x}: {:+.12}",
            abs_over_sqrt_antiderivative(&d, x)?
        );
    }

    // f = sin x with F = 1 - cos x vanishing at the zeros of sin x
    let d = AbsFunctionDescriptor::new(f64::sin, |x: f64| 1.0 - x.cos(), SignCarrier::SinX);
    for x in [1.0, 4.0] {
        let r = abs_antiderivative(&d, x);
        println!(
            "|f| at {x}: {:+.12} (F vanishes at the nearest zero: {})",
            r.value, r.conforming
        );
    }
    Ok(())
}
