//! Writes CSV and SVG plots of a cardioid, of |cos t| with its zeros, and of
//! a local form next to its continuous version, into a directory.

use std::path::{Path, PathBuf};

use radtrig::plot::{self, Series};
use radtrig::{globalize, Cardioid, ClosedForm, Family, Form, IntegrandSpec, Sign, SignCarrier};

fn save(dir: &Path, name: &str, s: &Series) -> std::io::Result<()> {
    std::fs::write(dir.join(format!("{name}.csv")), plot::to_csv(s))?;
    std::fs::write(dir.join(format!("{name}.svg")), plot::to_svg(s))?;
    println!("wrote {name}.csv and {name}.svg");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "plots".into()));
    std::fs::create_dir_all(&dir)?;
    let n = plot::DEFAULT_SAMPLES;

    let c = Cardioid::new(1.0, Family::Sine, Sign::Plus)?;
    save(&dir, "cardioid", &plot::cardioid_series(&c, n)?)?;
    save(
        &dir,
        "abs_cos",
        &plot::abs_carrier_series(SignCarrier::CosX, n)?,
    )?;

    let tau = 2.0 * std::f64::consts::PI;
    let cf = ClosedForm::new(
        IntegrandSpec::new(Family::Sine, Sign::Plus),
        Form::Rationalized,
    );
    save(
        &dir,
        "local_a",
        &plot::antiderivative_series(cf, -tau, 2.0 * tau, n)?,
    )?;
    let g = globalize(cf, 0.0)?;
    save(
        &dir,
        "global_a",
        &plot::globalized_series(&g, -tau, 2.0 * tau, n)?,
    )?;
    Ok(())
}
