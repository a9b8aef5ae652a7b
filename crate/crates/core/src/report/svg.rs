use std::fmt::Write;

use super::ComparisonReport;

const SIZE: f64 = 480.0;
const HALF: f64 = SIZE / 2.0;
const MARGIN: f64 = 24.0;

/// Static figure of a report: axes, the unit circle for scale, the best
/// annulus, the rectangle and (when the oracle ran) one marker per root.
///
/// The output depends only on the report, so identical reports give
/// byte-identical files.
pub fn render_svg(report: &ComparisonReport) -> String {
    let a = &report.best_annulus;
    let mut extent = a.r_upper.max(1.0);
    if let Some(r) = &report.rectangle {
        extent = extent.max(r.mu1).max(r.mu2);
    }
    if let Some(o) = &report.oracle {
        extent = extent.max(o.rmax);
    }
    let scale = (HALF - MARGIN) / extent;
    let x = |re: f64| HALF + re * scale;
    let y = |im: f64| HALF - im * scale;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#).unwrap();
    writeln!(
        s,
        r##"<g stroke="#bbbbbb" stroke-width="1"><line x1="0" y1="{HALF}" x2="{SIZE}" y2="{HALF}"/><line x1="{HALF}" y1="0" x2="{HALF}" y2="{SIZE}"/></g>"##
    )
    .unwrap();
    writeln!(
        s,
        r##"<circle id="unit-circle" cx="{HALF}" cy="{HALF}" r="{:.3}" fill="none" stroke="#888888" stroke-dasharray="4 3"/>"##,
        scale
    )
    .unwrap();
    if let Some(r) = &report.rectangle {
        writeln!(
            s,
            r##"<rect id="rectangle" x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}" fill="none" stroke="#1f77b4" stroke-width="1.5"/>"##,
            x(-r.mu1),
            y(r.mu2),
            2.0 * r.mu1 * scale,
            2.0 * r.mu2 * scale
        )
        .unwrap();
    }
    writeln!(
        s,
        r##"<circle id="annulus-outer" cx="{HALF}" cy="{HALF}" r="{:.3}" fill="none" stroke="#2ca02c" stroke-width="1.5"/>"##,
        a.r_upper * scale
    )
    .unwrap();
    if a.r_lower > 0.0 {
        writeln!(
            s,
            r##"<circle id="annulus-inner" cx="{HALF}" cy="{HALF}" r="{:.3}" fill="none" stroke="#2ca02c" stroke-width="1.5"/>"##,
            a.r_lower * scale
        )
        .unwrap();
    }
    if let Some(o) = &report.oracle {
        for z in o.roots() {
            writeln!(
                s,
                r##"<circle class="root" cx="{:.3}" cy="{:.3}" r="3" fill="#d62728"/>"##,
                x(z.re),
                y(z.im)
            )
            .unwrap();
        }
    }
    writeln!(
        s,
        r#"<text x="8" y="16" font-family="monospace" font-size="11">annulus [{}, {}] ({} / {})</text>"#,
        super::sig9(a.r_lower),
        super::sig9(a.r_upper),
        a.source_lower.map_or("none", |id| id.as_str()),
        a.source_upper
    )
    .unwrap();
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::BoundId;
    use crate::polynomial::MonicPolynomial;

    #[test]
    fn root_markers_and_regions() {
        let p = MonicPolynomial::from_real(&[1.0, 1.0, 1.0]).unwrap();
        let r = ComparisonReport::build(&p, &BoundId::ALL, true).unwrap();
        let svg = render_svg(&r);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches(r#"class="root""#).count(), 3);
        assert!(svg.contains("annulus-outer"));
        assert!(svg.contains("annulus-inner"));
        assert!(svg.contains(r#"id="rectangle""#));
        assert!(svg.contains("unit-circle"));
        assert_eq!(svg, render_svg(&r));
    }

    #[test]
    fn no_oracle_no_markers() {
        let p = MonicPolynomial::from_real(&[1.0, 1.0, 1.0]).unwrap();
        let r = ComparisonReport::build(&p, &BoundId::ALL, false).unwrap();
        let svg = render_svg(&r);
        assert_eq!(svg.matches(r#"class="root""#).count(), 0);
        assert!(svg.contains("annulus-outer"));
    }

    #[test]
    fn inner_circle_omitted_without_lower_bound() {
        let p = MonicPolynomial::from_real(&[1.0, 0.0, 0.0]).unwrap();
        let mut r = ComparisonReport::build(&p, &[BoundId::Bp1], false).unwrap();
        r.best_annulus.r_lower = 0.0;
        r.best_annulus.source_lower = None;
        assert!(!render_svg(&r).contains("annulus-inner"));
    }
}
