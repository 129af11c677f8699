//! Every cardioid r = a(1 +- sin t), a(1 +- cos t) has length 8a.

use radtrig::cardioid::polyline_length;
use radtrig::{Cardioid, Family, Form, Method, Sign};

fn main() -> radtrig::Result<()> {
    let a: f64 = std::env::args()
        .nth(1)
        .map_or(1.0, |s| s.parse().expect("a number"));
    for family in [Family::Sine, Family::Cosine] {
        for sign in [Sign::Plus, Sign::Minus] {
            let c = Cardioid::new(a, family, sign)?;
            println!("r = {a}(1 {sign} {family} t)");
            for m in Method::ALL {
                println!("  {:7} {:.15}", m.name(), c.length(m)?);
            }
            let split = c.length_split(Form::HalfAngle)?;
            println!("  split at {:?}", split.splits);
            for n in [16, 256, 4096] {
                println!(
                    "  polyline n={n:<5} {:.15}",
                    polyline_length(&c.sample_curve(n)?)
                );
            }
        }
    }
    Ok(())
}
