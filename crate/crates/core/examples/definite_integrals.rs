//! One definite integral by every route: continuous local form, split at
//! carrier zeros, floor form and adaptive quadrature.

use radtrig::{definite_integral, format::parse_angle, split_local_integral, ClosedForm, Form};
use radtrig::{IntegrandSpec, Method};

fn main() -> radtrig::Result<()> {
    let mut args = std::env::args().skip(1);
    let a = args
        .next()
        .map_or(Ok(-1.0), |s| parse_angle(&s))
        .expect("angle");
    let b = args
        .next()
        .map_or(Ok(17.0), |s| parse_angle(&s))
        .expect("angle");
    println!("integrals over [{a}, {b}]");
    for spec in IntegrandSpec::ALL {
        print!("{spec:18}");
        for m in Method::ALL {
            print!("  {}={:.12}", m.name(), definite_integral(spec, a, b, m)?);
        }
        println!();
        let split = split_local_integral(ClosedForm::new(spec, Form::HalfAngle), a, b)?;
        println!("{:18}  split points {:?}", "", split.splits);
    }
    Ok(())
}
