//! Runs the built-in cross-checks and prints one line per check.

use radtrig::verify::{run, Scope};

fn main() -> radtrig::Result<()> {
    let checks = run(Scope::All)?;
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    println!("{} checks, {failed} failed", checks.len());
    std::process::exit(i32::from(failed > 0));
}
