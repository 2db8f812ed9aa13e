//! Minimal static SVG rendering of trace samples: a polyline of image
//! points with an optional marker at the slit endpoint.

use qcharm::geometry::TraceSample;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 40.0;

/// Renders the sampled image curve; `slit_endpoint` draws a vertical
/// marker at `Re w = M(k)`.
pub fn trace_svg(samples: &[TraceSample], slit_endpoint: Option<f64>) -> String {
    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for s in samples {
        min_x = min_x.min(s.re);
        max_x = max_x.max(s.re);
        min_y = min_y.min(s.im);
        max_y = max_y.max(s.im);
    }
    if let Some(m) = slit_endpoint {
        min_x = min_x.min(m);
        max_x = max_x.max(m);
    }
    let span_x = (max_x - min_x).max(1e-12);
    let span_y = (max_y - min_y).max(1e-12);
    let sx = |x: f64| MARGIN + (x - min_x) / span_x * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - (y - min_y) / span_y * (HEIGHT - 2.0 * MARGIN);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    if min_y <= 0.0 && max_y >= 0.0 {
        svg.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#cccccc\"/>\n",
            sx(min_x),
            sy(0.0),
            sx(max_x),
            sy(0.0)
        ));
    }
    if let Some(m) = slit_endpoint {
        svg.push_str(&format!(
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#d62728\" \
             stroke-dasharray=\"4 3\"/>\n",
            sx(m),
            sy(min_y),
            sy(max_y)
        ));
    }
    let points: Vec<String> =
        samples.iter().map(|s| format!("{:.3},{:.3}", sx(s.re), sy(s.im))).collect();
    svg.push_str(&format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.2\"/>\n",
        points.join(" ")
    ));
    svg.push_str("</svg>\n");
    svg
}
