//! Wire diagrams of tangles as SVG or plain text.
//!
//! Time runs downwards: permutation `t` sits on row `t`, and the layer between
//! rows `t` and `t + 1` draws one crossing per swap. Output depends only on
//! the tangle and the settings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Result, TangleError};
use crate::tangle::Tangle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Svg,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderSpec {
    /// Horizontal distance between wire positions: pixels in SVG, characters in text.
    pub column_width: u32,
    /// Vertical distance between permutations in SVG; text always uses two lines per layer.
    pub row_height: u32,
    pub labels: bool,
    pub format: Format,
}

impl RenderSpec {
    pub fn svg() -> Self {
        RenderSpec { column_width: 40, row_height: 30, labels: true, format: Format::Svg }
    }

    pub fn ascii() -> Self {
        RenderSpec { column_width: 3, row_height: 1, labels: true, format: Format::Ascii }
    }
}

// Tableau 10
const PALETTE: [&str; 10] =
    ["#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"];

pub fn render(tangle: &Tangle, spec: &RenderSpec) -> Result<String> {
    if spec.column_width == 0 || spec.row_height == 0 {
        return Err(TangleError::InvalidRenderSpec("dimensions must be positive".into()));
    }
    Ok(match spec.format {
        Format::Svg => render_svg(tangle, spec),
        Format::Ascii => render_ascii(tangle, spec),
    })
}

fn render_svg(tangle: &Tangle, spec: &RenderSpec) -> String {
    let n = tangle.n();
    let (cw, rh) = (spec.column_width as usize, spec.row_height as usize);
    let margin = if spec.labels { 24 } else { 8 };
    let width = 2 * margin + cw * n.saturating_sub(1);
    let height = 2 * margin + rh * (tangle.height() - 1);
    let x = |p: usize| margin + cw * p;
    let y = |t: usize| margin + rh * t;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    for w in 0..n {
        let points: Vec<String> =
            tangle.perms().iter().enumerate().map(|(t, pi)| format!("{},{}", x(pi.position_of(w)), y(t))).collect();
        let _ = writeln!(
            out,
            "  <polyline class=\"wire\" data-wire=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"/>",
            w + 1,
            PALETTE[w % PALETTE.len()],
            points.join(" ")
        );
    }
    if spec.labels {
        let last = tangle.height() - 1;
        for (row, pi, dy) in [(0, tangle.first(), -8isize), (last, tangle.last(), 16)] {
            for p in 0..n {
                let _ = writeln!(
                    out,
                    "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">{}</text>",
                    x(p),
                    y(row) as isize + dy,
                    pi.wire_at(p) + 1
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

fn render_ascii(tangle: &Tangle, spec: &RenderSpec) -> String {
    let n = tangle.n();
    let cw = spec.column_width as usize;
    let width = cw * n.saturating_sub(1) + 1;
    let label_row = |pi: &crate::perm::Permutation| {
        let mut line = vec![' '; width + 4];
        for p in 0..n {
            for (k, ch) in (pi.wire_at(p) + 1).to_string().chars().enumerate() {
                if p * cw + k < line.len() {
                    line[p * cw + k] = ch;
                }
            }
        }
        line.into_iter().collect::<String>().trim_end().to_string()
    };

    let mut lines = Vec::new();
    if spec.labels {
        lines.push(label_row(tangle.first()));
    }
    for (t, eps) in tangle.layers().iter().enumerate() {
        let pi = &tangle.perms()[t];
        let mut top = vec![' '; width];
        let mut bottom = vec![' '; width];
        for p in 0..n {
            top[p * cw] = '|';
            bottom[p * cw] = '|';
        }
        for &(a, b) in eps.swaps() {
            let p = pi.position_of(a).min(pi.position_of(b));
            top[p * cw] = '\\';
            top[(p + 1) * cw] = '/';
            bottom[p * cw] = '/';
            bottom[(p + 1) * cw] = '\\';
        }
        lines.push(top.into_iter().collect::<String>().trim_end().to_string());
        lines.push(bottom.into_iter().collect::<String>().trim_end().to_string());
    }
    if tangle.height() == 1 {
        lines.push((0..n).map(|p| if p == 0 { "|".to_string() } else { format!("{:>cw$}", "|") }).collect());
    }
    if spec.labels {
        lines.push(label_row(tangle.last()));
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn t(rows: &[&str]) -> Tangle {
        Tangle::new(rows.iter().map(|r| Permutation::from_notation(r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn smallest_crossing_ascii() {
        let spec = RenderSpec { column_width: 1, labels: false, ..RenderSpec::ascii() };
        assert_eq!(render(&t(&["12", "21"]), &spec).unwrap(), "\\/\n/\\\n");
        let labelled = render(&t(&["12", "21"]), &RenderSpec::ascii()).unwrap();
        assert_eq!(labelled, "1  2\n\\  /\n/  \\\n2  1\n");
    }

    #[test]
    fn height_one_is_straight() {
        let spec = RenderSpec { labels: false, ..RenderSpec::ascii() };
        let text = render(&Tangle::trivial(5), &spec).unwrap();
        assert_eq!(text, "|  |  |  |  |\n");
        let svg = render(&Tangle::trivial(5), &RenderSpec::svg()).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 5);
    }

    #[test]
    fn rejects_zero_dimensions() {
        let spec = RenderSpec { column_width: 0, ..RenderSpec::svg() };
        assert!(render(&t(&["12"]), &spec).is_err());
    }

    #[test]
    fn deterministic() {
        let tangle = t(&["123", "213", "231", "321"]);
        for spec in [RenderSpec::svg(), RenderSpec::ascii()] {
            assert_eq!(render(&tangle, &spec).unwrap(), render(&tangle, &spec).unwrap());
        }
    }
}
