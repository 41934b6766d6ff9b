//! SVG drawing of winding diagrams.
//!
//! The points `1, …, n` sit clockwise on a circle starting at the top. Each
//! canonical cycle becomes one arc outside the circle joining its two
//! residues, labelled by its winding number. Coordinates are printed with
//! fixed precision so the output is byte-for-byte reproducible.

use std::fmt::Write;

use crate::involution::AffineInvolution;

const SIZE: f64 = 480.0;
const RADIUS: f64 = 130.0;

fn point(n: usize, k: f64, r: f64) -> (f64, f64) {
    let angle = -std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * (k - 1.0) / n as f64;
    (SIZE / 2.0 + r * angle.cos(), SIZE / 2.0 + r * angle.sin())
}

/// Renders the winding diagram of `z` as an SVG document.
pub fn winding_svg(z: &AffineInvolution) -> String {
    let n = z.n();
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        s,
        r#"<circle cx="{c:.2}" cy="{c:.2}" r="{RADIUS:.2}" fill="none" stroke="gray" stroke-dasharray="4 4"/>"#,
        c = SIZE / 2.0
    );
    for (level, e) in z.winding_edges().iter().enumerate() {
        let (x0, y0) = point(n, e.source as f64, RADIUS);
        let (x1, y1) = point(n, e.target as f64, RADIUS);
        // Bulge outward through the clockwise midpoint between the endpoints.
        let mid = (e.source + e.target) as f64 / 2.0;
        let lift = RADIUS * (1.55 + 0.18 * level as f64);
        let (cx, cy) = point(n, mid, lift);
        let (lx, ly) = (0.25 * x0 + 0.5 * cx + 0.25 * x1, 0.25 * y0 + 0.5 * cy + 0.25 * y1);
        let _ = writeln!(
            s,
            r#"<path class="arc" d="M {x0:.2} {y0:.2} Q {cx:.2} {cy:.2} {x1:.2} {y1:.2}" fill="none" stroke="black"/>"#
        );
        let _ = writeln!(
            s,
            r#"<text class="winding" x="{lx:.2}" y="{ly:.2}" font-size="14" text-anchor="middle">{}</text>"#,
            e.label
        );
    }
    for k in 1..=n {
        let (x, y) = point(n, k as f64, RADIUS);
        let (tx, ty) = point(n, k as f64, RADIUS - 18.0);
        let _ = writeln!(s, r#"<circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="4" fill="black"/>"#);
        let _ = writeln!(
            s,
            r#"<text x="{tx:.2}" y="{ty:.2}" font-size="12" text-anchor="middle" dominant-baseline="middle">{k}</text>"#
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_no_arcs() {
        let svg = winding_svg(&AffineInvolution::identity(5));
        assert_eq!(svg.matches(r#"class="vertex""#).count(), 5);
        assert_eq!(svg.matches(r#"class="arc""#).count(), 0);
    }

    #[test]
    fn single_transposition() {
        let z = AffineInvolution::from_cycles(3, &[(1, 2)]).unwrap();
        let svg = winding_svg(&z);
        assert_eq!(svg.matches(r#"class="arc""#).count(), 1);
        assert!(svg.contains(">0</text>"));
    }
}
