//! Locale-free number printing and angle parsing for the command line.

use std::f64::consts::PI;

/// Formats like C's `%.15g`.
pub fn fmt_g15(x: f64) -> String {
    const PRECISION: i32 = 15;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", (PRECISION - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..PRECISION).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim_fraction(mantissa), sign, exp.abs())
    } else {
        let decimals = (PRECISION - 1 - exp) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Parses decimal radians or a multiple of π such as `pi`, `-pi/4`,
/// `3pi/2`, `3*pi/2`, `0.5pi` or `2π`.
pub fn parse_angle(input: &str) -> Result<f64, String> {
    let s = input.trim();
    if let Ok(v) = s.parse::<f64>() {
        return if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("angle must be finite: {input}"))
        };
    }
    let lower = s.to_ascii_lowercase().replace('π', "pi");
    let Some(pos) = lower.find("pi") else {
        return Err(format!("not a number or pi-expression: {input}"));
    };
    let (head, tail) = (&lower[..pos], &lower[pos + 2..]);
    let head = head.strip_suffix('*').unwrap_or(head);
    let coef = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h
            .parse::<f64>()
            .map_err(|_| format!("bad coefficient in {input}"))?,
    };
    let denom = match tail {
        "" => 1.0,
        t => {
            let d = t
                .strip_prefix('/')
                .ok_or_else(|| format!("expected /<denominator> in {input}"))?;
            d.parse::<f64>()
                .map_err(|_| format!("bad denominator in {input}"))?
        }
    };
    let v = coef * PI / denom;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("angle must be finite: {input}"))
    }
}
