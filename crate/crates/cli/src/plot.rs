//! Plot-data emission: sampled A1 series as CSV rows or a self-contained
//! SVG line chart.

use a1score::{a1_score, A1Config, AlgorithmProfile, ScanRange};

use crate::report::fmt_sig;

/// Sampled (n, A1) points for one algorithm. Points are strictly
/// increasing in n with finite positive scores.
#[derive(Clone, Debug, PartialEq)]
pub struct PlotSeries {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

/// The two series of a pairwise plot plus the count of samples omitted
/// because either side overflowed.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesPair {
    pub x: PlotSeries,
    pub y: PlotSeries,
    pub skipped: usize,
}

/// Samples both algorithms over the scan range. A sample survives only if
/// both scores evaluate; failures count as skipped.
pub fn sample_pair(
    x: &AlgorithmProfile,
    y: &AlgorithmProfile,
    config: &A1Config,
    scan: &ScanRange,
) -> SeriesPair {
    let mut xs = Vec::with_capacity(scan.samples());
    let mut ys = Vec::with_capacity(scan.samples());
    let mut skipped = 0usize;
    for n in scan.points() {
        match (a1_score(x, n, config), a1_score(y, n, config)) {
            (Ok(ax), Ok(ay)) => {
                xs.push((n, ax));
                ys.push((n, ay));
            }
            _ => skipped += 1,
        }
    }
    SeriesPair {
        x: PlotSeries {
            label: x.name.clone(),
            points: xs,
        },
        y: PlotSeries {
            label: y.name.clone(),
            points: ys,
        },
        skipped,
    }
}

/// CSV with header `n,a1_x,a1_y`, one sample per row, 12 significant
/// digits per value.
pub fn to_csv(pair: &SeriesPair) -> String {
    let mut out = String::from("n,a1_x,a1_y\n");
    for ((n, ax), (_, ay)) in pair.x.points.iter().zip(pair.y.points.iter()) {
        out.push_str(&fmt_sig(*n, 12));
        out.push(',');
        out.push_str(&fmt_sig(*ax, 12));
        out.push(',');
        out.push_str(&fmt_sig(*ay, 12));
        out.push('\n');
    }
    out
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 30.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 60.0;
const COLOR_X: &str = "#1f77b4";
const COLOR_Y: &str = "#d62728";

fn xml_escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

struct Axes {
    n_min: f64,
    n_max: f64,
    a1_max: f64,
}

impl Axes {
    fn sx(&self, n: f64) -> f64 {
        MARGIN_LEFT + (n - self.n_min) / (self.n_max - self.n_min) * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT)
    }

    fn sy(&self, a1: f64) -> f64 {
        HEIGHT - MARGIN_BOTTOM - a1 / self.a1_max * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM)
    }
}

fn polyline(points: &[(f64, f64)], axes: &Axes, color: &str) -> String {
    let coords: Vec<String> = points
        .iter()
        .map(|&(n, a1)| format!("{:.2},{:.2}", axes.sx(n), axes.sy(a1)))
        .collect();
    format!(
        "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
        coords.join(" ")
    )
}

/// Renders a self-contained SVG line chart: linear axes with tick labels,
/// one polyline per algorithm, and a legend naming both.
pub fn to_svg(pair: &SeriesPair) -> String {
    let all = pair.x.points.iter().chain(pair.y.points.iter());
    let mut n_min = f64::INFINITY;
    let mut n_max = f64::NEG_INFINITY;
    let mut a1_max = 0.0f64;
    for &(n, a1) in all {
        n_min = n_min.min(n);
        n_max = n_max.max(n);
        a1_max = a1_max.max(a1);
    }
    if !n_min.is_finite() || n_max <= n_min {
        n_min = 0.0;
        n_max = 1.0;
    }
    if a1_max <= 0.0 {
        a1_max = 1.0;
    }
    let axes = Axes {
        n_min,
        n_max,
        a1_max: a1_max * 1.05,
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));

    // Frame.
    let x0 = MARGIN_LEFT;
    let x1 = WIDTH - MARGIN_RIGHT;
    let y0 = HEIGHT - MARGIN_BOTTOM;
    let y1 = MARGIN_TOP;
    svg.push_str(&format!(
        "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>\n"
    ));
    svg.push_str(&format!(
        "  <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>\n"
    ));

    // Ticks and grid labels.
    for i in 0..=4 {
        let f = i as f64 / 4.0;
        let n = axes.n_min + f * (axes.n_max - axes.n_min);
        let px = axes.sx(n);
        svg.push_str(&format!(
            "  <line x1=\"{px:.2}\" y1=\"{y0}\" x2=\"{px:.2}\" y2=\"{}\" stroke=\"black\"/>\n",
            y0 + 5.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{px:.2}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
            y0 + 20.0,
            tick_label(n)
        ));

        let a1 = f * axes.a1_max;
        let py = axes.sy(a1);
        svg.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{py:.2}\" x2=\"{x0}\" y2=\"{py:.2}\" stroke=\"black\"/>\n",
            x0 - 5.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{:.2}\" text-anchor=\"end\">{}</text>\n",
            x0 - 9.0,
            py + 4.0,
            tick_label(a1)
        ));
    }

    // Axis titles.
    svg.push_str(&format!(
        "  <text x=\"{:.2}\" y=\"{}\" text-anchor=\"middle\">n</text>\n",
        (x0 + x1) / 2.0,
        HEIGHT - 15.0
    ));
    svg.push_str(&format!(
        "  <text x=\"18\" y=\"{:.2}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.2})\">A1-Score</text>\n",
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    ));

    // The two series.
    svg.push_str(&polyline(&pair.x.points, &axes, COLOR_X));
    svg.push_str(&polyline(&pair.y.points, &axes, COLOR_Y));

    // Legend.
    let lx = x1 - 220.0;
    for (i, (label, color)) in [
        (pair.x.label.as_str(), COLOR_X),
        (pair.y.label.as_str(), COLOR_Y),
    ]
    .iter()
    .enumerate()
    {
        let ly = y1 + 12.0 + i as f64 * 18.0;
        svg.push_str(&format!(
            "  <rect x=\"{lx}\" y=\"{:.2}\" width=\"16\" height=\"4\" fill=\"{color}\"/>\n",
            ly - 2.0
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{ly:.2}\" dominant-baseline=\"middle\">{}</text>\n",
            lx + 22.0,
            xml_escape(label)
        ));
    }

    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use a1score::parse;

    fn pair() -> SeriesPair {
        let x = AlgorithmProfile::new("X", parse("n").unwrap(), parse("log n").unwrap());
        let y = AlgorithmProfile::new("Y", parse("log n").unwrap(), parse("n^2").unwrap());
        sample_pair(
            &x,
            &y,
            &A1Config::default(),
            &ScanRange::new(2.0, 100.0, 16).unwrap(),
        )
    }

    #[test]
    fn csv_has_header_and_rows() {
        let csv = to_csv(&pair());
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("n,a1_x,a1_y"));
        assert_eq!(lines.count(), 16);
    }

    #[test]
    fn csv_round_trips_values() {
        let p = pair();
        let csv = to_csv(&p);
        for (row, (n, ax)) in csv.lines().skip(1).zip(p.x.points.iter()) {
            let fields: Vec<f64> = row.split(',').map(|f| f.parse().unwrap()).collect();
            assert!((fields[0] - n).abs() <= 1e-9 * n.abs());
            assert!((fields[1] - ax).abs() <= 1e-9 * ax.abs());
        }
    }

    #[test]
    fn svg_has_exactly_two_polylines_and_labels() {
        let svg = to_svg(&pair());
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains(">X</text>"));
        assert!(svg.contains(">Y</text>"));
        assert!(svg.contains("A1-Score"));
    }

    #[test]
    fn svg_escapes_labels() {
        let x = AlgorithmProfile::new("a<b>&c", parse("n").unwrap(), parse("n").unwrap());
        let y = AlgorithmProfile::new("Y", parse("n").unwrap(), parse("n").unwrap());
        let p = sample_pair(
            &x,
            &y,
            &A1Config::default(),
            &ScanRange::new(2.0, 10.0, 4).unwrap(),
        );
        let svg = to_svg(&p);
        assert!(svg.contains("a&lt;b&gt;&amp;c"));
        assert!(!svg.contains("a<b>"));
    }

    #[test]
    fn overflowed_samples_are_skipped_with_count() {
        let x = AlgorithmProfile::new("X", parse("2^n").unwrap(), parse("n").unwrap());
        let y = AlgorithmProfile::new("Y", parse("n").unwrap(), parse("n").unwrap());
        let p = sample_pair(
            &x,
            &y,
            &A1Config::default(),
            &ScanRange::new(2.0, 10000.0, 32).unwrap(),
        );
        assert!(p.skipped > 0);
        assert_eq!(p.x.points.len() + p.skipped, 32);
        assert!(p.x.points.iter().all(|&(n, a1)| n > 1.0 && a1 > 0.0 && a1.is_finite()));
        assert!(p.x.points.windows(2).all(|w| w[0].0 < w[1].0));
    }
}
