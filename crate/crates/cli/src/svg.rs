//! Minimal SVG rendering of a Newton polygon: axes, the hull polyline with
//! break markers, and the finite coefficient points above it.

use krawtchouk_core::newton::NewtonPolygon;
use krawtchouk_core::rational::Valuation;

pub fn polygon_svg(np: &NewtonPolygon, table: &[(u64, Valuation)]) -> String {
    let finite: Vec<(u64, i64)> = table
        .iter()
        .filter_map(|&(j, v)| v.finite().map(|v| (j, v)))
        .collect();
    let x_max = finite.iter().map(|&(x, _)| x).max().unwrap_or(1).max(1) as f64;
    let y_max = finite.iter().map(|&(_, y)| y).max().unwrap_or(1).max(1) as f64;
    let w = 640.0;
    let h = 420.0;
    let margin = 40.0;
    let sx = (w - 2.0 * margin) / x_max;
    let sy = (h - 2.0 * margin) / y_max;
    let px = |x: f64| margin + x * sx;
    let py = |y: f64| h - margin - y * sy;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    ));
    out.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        px(0.0),
        py(0.0),
        px(x_max),
        py(0.0)
    ));
    out.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n",
        px(0.0),
        py(0.0),
        px(0.0),
        py(y_max)
    ));
    for &(x, y) in &finite {
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"#999\"/>\n",
            px(x as f64),
            py(y as f64)
        ));
    }
    let pts: Vec<String> = np
        .vertices()
        .iter()
        .map(|&(x, y)| format!("{},{}", px(x as f64), py(y as f64)))
        .collect();
    out.push_str(&format!(
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2.5\"/>\n",
        pts.join(" ")
    ));
    for &(x, y) in np.vertices() {
        out.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"black\"/>\n",
            px(x as f64),
            py(y as f64)
        ));
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\">({x}, {y})</text>\n",
            px(x as f64) + 6.0,
            py(y as f64) - 6.0
        ));
    }
    out.push_str("</svg>\n");
    out
}
