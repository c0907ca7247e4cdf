//! Line chart of a sweep: mean ratio per `m` for both bounds, each with a
//! shaded mean ± std band.

use std::fmt::Write as _;

use crate::sweep::{Stat, SweepRecord};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const MARGIN: f64 = 56.0;

struct Series {
    label: &'static str,
    color: &'static str,
    pick: fn(&SweepRecord) -> Option<Stat>,
}

const SERIES: [Series; 2] = [
    Series {
        label: "l-hat / intersection",
        color: "#1f5fbf",
        pick: |r| r.lhat_ratio,
    },
    Series {
        label: "l / intersection",
        color: "#c0392b",
        pick: |r| r.l_ratio,
    },
];

fn fmt_points(points: &[(f64, f64)]) -> String {
    points
        .iter()
        .map(|(x, y)| format!("{x:.2},{y:.2}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_svg(records: &[SweepRecord]) -> String {
    let (lo, hi) = match (records.first(), records.last()) {
        (Some(a), Some(b)) => (a.m as f64, b.m as f64),
        _ => (0.0, 1.0),
    };
    let span = if hi > lo { hi - lo } else { 1.0 };
    let plot_w = WIDTH - 2.0 * MARGIN;
    let plot_h = HEIGHT - 2.0 * MARGIN;
    let x = |m: u64| MARGIN + (m as f64 - lo) / span * plot_w;
    // ratios live in [0, 1]; bands may poke slightly past either end
    let y = |v: f64| MARGIN + (1.0 - v.clamp(-0.1, 1.1)) * plot_h;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let (x0, y0, x1, y1) = (MARGIN, HEIGHT - MARGIN, WIDTH - MARGIN, MARGIN);
    let _ = writeln!(
        out,
        r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>"#
    );
    let _ = writeln!(
        out,
        r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>"#
    );
    for tick in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let ty = y(tick);
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="end">{tick:.2}</text>"#,
            x0 - 6.0,
            ty + 4.0
        );
    }
    for r in records {
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" font-size="10" text-anchor="middle">{}</text>"#,
            x(r.m),
            y0 + 16.0,
            r.m
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle">m (n = {})</text>"#,
        WIDTH / 2.0,
        HEIGHT - 12.0,
        records.first().map_or(0, |r| r.n)
    );

    for (i, s) in SERIES.iter().enumerate() {
        let pts: Vec<(u64, Stat)> = records
            .iter()
            .filter_map(|r| (s.pick)(r).map(|st| (r.m, st)))
            .collect();
        let upper: Vec<(f64, f64)> = pts
            .iter()
            .map(|(m, st)| (x(*m), y(st.mean + st.std)))
            .collect();
        let lower: Vec<(f64, f64)> = pts
            .iter()
            .rev()
            .map(|(m, st)| (x(*m), y(st.mean - st.std)))
            .collect();
        let band: Vec<(f64, f64)> = upper.into_iter().chain(lower).collect();
        let line: Vec<(f64, f64)> = pts.iter().map(|(m, st)| (x(*m), y(st.mean))).collect();
        let _ = writeln!(
            out,
            r#"<polygon class="band" points="{}" fill="{}" fill-opacity="0.2" stroke="none"/>"#,
            fmt_points(&band),
            s.color
        );
        let _ = writeln!(
            out,
            r#"<polyline class="series" points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
            fmt_points(&line),
            s.color
        );
        let ly = MARGIN + 16.0 * i as f64;
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{ly:.2}" font-size="12" fill="{}">{}</text>"#,
            x0 + 10.0,
            s.color,
            s.label
        );
    }
    out.push_str("</svg>\n");
    out
}
