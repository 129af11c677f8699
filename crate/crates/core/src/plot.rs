//! Plot data for cardioids, `|carrier|` curves and antiderivatives, written
//! as CSV or as a single-polyline SVG.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::antiderivative::ClosedForm;
use crate::cardioid::Cardioid;
use crate::error::Result;
use crate::format::fmt_g15;
use crate::globalize::PiecewiseAntiderivative;
use crate::kernel::SignCarrier;

pub const DEFAULT_SAMPLES: usize = 1024;

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub columns: (&'static str, &'static str),
    pub points: Vec<(f64, f64)>,
    /// Highlighted points (carrier zeros), drawn as circles in SVG.
    pub markers: Vec<(f64, f64)>,
}

fn grid(from: f64, to: f64, n: usize) -> impl Iterator<Item = f64> {
    (0..=n).map(move |k| from + (to - from) * k as f64 / n as f64)
}

pub fn cardioid_series(c: &Cardioid, n: usize) -> Result<Series> {
    Ok(Series {
        columns: ("x", "y"),
        points: c.sample_curve(n)?,
        markers: Vec::new(),
    })
}

/// `|carrier(θ)|` on `[0, 2π]`, with the zeros (endpoints included) as markers.
pub fn abs_carrier_series(carrier: SignCarrier, n: usize) -> Result<Series> {
    let (from, to) = (0.0, 2.0 * PI);
    let lat = carrier.lattice();
    let mut zeros = Vec::new();
    if lat.snap(from).is_some() {
        zeros.push(from);
    }
    zeros.extend(carrier.breakpoints(from, to)?);
    if lat.snap(to).is_some() {
        zeros.push(to);
    }
    Ok(Series {
        columns: ("theta", "value"),
        points: grid(from, to, n)
            .map(|t| (t, carrier.eval(t).abs()))
            .collect(),
        markers: zeros.into_iter().map(|z| (z, 0.0)).collect(),
    })
}

pub fn antiderivative_series(cf: ClosedForm, from: f64, to: f64, n: usize) -> Result<Series> {
    let points = grid(from, to, n)
        .map(|t| cf.eval(t).map(|v| (t, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Series {
        columns: ("theta", "value"),
        points,
        markers: Vec::new(),
    })
}

pub fn globalized_series(
    g: &PiecewiseAntiderivative,
    from: f64,
    to: f64,
    n: usize,
) -> Result<Series> {
    let points = grid(from, to, n)
        .map(|t| g.eval(t).map(|v| (t, v)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Series {
        columns: ("theta", "value"),
        points,
        markers: Vec::new(),
    })
}

pub fn to_csv(s: &Series) -> String {
    let mut out = format!("{},{}\n", s.columns.0, s.columns.1);
    for &(x, y) in &s.points {
        let _ = writeln!(out, "{},{}", fmt_g15(x), fmt_g15(y));
    }
    out
}

const SVG_WIDTH: f64 = 640.0;

pub fn to_svg(s: &Series) -> String {
    // SVG y grows downward; plot (x, -y)
    let pts: Vec<(f64, f64)> = s.points.iter().map(|&(x, y)| (x, -y)).collect();
    let marks: Vec<(f64, f64)> = s.markers.iter().map(|&(x, y)| (x, -y)).collect();
    let all = pts.iter().chain(&marks);
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &(x, y) in all {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if x0 > x1 {
        (x0, x1, y0, y1) = (0.0, 1.0, 0.0, 1.0);
    }
    let span = |lo: f64, hi: f64| if hi > lo { hi - lo } else { 1.0 };
    let (w, h) = (span(x0, x1), span(y0, y1));
    let (mx, my) = (0.05 * w, 0.05 * h);
    let (vx, vy, vw, vh) = (x0 - mx, y0 - my, w + 2.0 * mx, h + 2.0 * my);
    let stroke = 0.004 * vw.max(vh);
    let height = (SVG_WIDTH * vh / vw).round();

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        fmt_g15(SVG_WIDTH),
        fmt_g15(height),
        fmt_g15(vx),
        fmt_g15(vy),
        fmt_g15(vw),
        fmt_g15(vh)
    );
    let coords: Vec<String> = pts
        .iter()
        .map(|&(x, y)| format!("{},{}", fmt_g15(x), fmt_g15(y)))
        .collect();
    let _ = writeln!(
        out,
        "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"{}\" points=\"{}\"/>",
        fmt_g15(stroke),
        coords.join(" ")
    );
    for &(x, y) in &marks {
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#c0392b\"/>",
            fmt_g15(x),
            fmt_g15(y),
            fmt_g15(3.0 * stroke)
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{Family, Sign};

    #[test]
    fn csv_has_header_and_closed_curve() {
        let c = Cardioid::new(1.0, Family::Sine, Sign::Plus).unwrap();
        let csv = to_csv(&cardioid_series(&c, DEFAULT_SAMPLES).unwrap());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "x,y");
        assert_eq!(lines.len(), 1 + 1025);
        let first: Vec<f64> = lines[1].split(',').map(|v| v.parse().unwrap()).collect();
        let last: Vec<f64> = lines[1025].split(',').map(|v| v.parse().unwrap()).collect();
        assert!((first[0] - last[0]).abs() < 1e-12 && (first[1] - last[1]).abs() < 1e-12);
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn carrier_markers() {
        let s = abs_carrier_series(SignCarrier::CosX, 64).unwrap();
        assert_eq!(s.markers, vec![(PI / 2.0, 0.0), (3.0 * PI / 2.0, 0.0)]);
        let s = abs_carrier_series(SignCarrier::CosHalfPlusSinHalf, 64).unwrap();
        assert_eq!(s.markers, vec![(3.0 * PI / 2.0, 0.0)]);
        let s = abs_carrier_series(SignCarrier::SinHalf, 64).unwrap();
        assert_eq!(s.markers, vec![(0.0, 0.0), (2.0 * PI, 0.0)]);
    }

    #[test]
    fn svg_structure() {
        let s = abs_carrier_series(SignCarrier::CosX, 32).unwrap();
        let svg = to_svg(&s);
        assert!(svg.starts_with("<?xml"));
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
