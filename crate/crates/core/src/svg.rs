//! Static SVG figures of a grid, a landmark set, and optionally a zigzag
//! sequence with its corresponding sequence or an unseparated pair.

use std::fmt::Write as _;

use crate::candidate::ZigzagWitness;
use crate::grid::{Grid, Vertex};

/// Grids with more cells than this are drawn without per-cell boxes.
const CELL_LIMIT: usize = 10_000;

#[derive(Clone, Debug, Default)]
pub struct Figure<'a> {
    pub landmarks: &'a [Vertex],
    pub witness: Option<&'a ZigzagWitness>,
    pub pair: Option<(Vertex, Vertex)>,
}

pub fn render(g: &Grid, fig: &Figure<'_>) -> String {
    let (m, n) = (g.m(), g.n());
    let cell = (720.0 / m.max(n) as f64).clamp(1.0, 44.0);
    let pad = 10.0;
    let (w, h) = (n as f64 * cell + 2.0 * pad, m as f64 * cell + 2.0 * pad);
    let x = |v: Vertex| pad + (v.col as f64 - 0.5) * cell;
    let y = |v: Vertex| pad + (v.row as f64 - 0.5) * cell;
    let labels = cell >= 24.0;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.1} {h:.1}" font-family="sans-serif">"#
    );
    let _ = writeln!(
        s,
        r##"<rect x="{pad}" y="{pad}" width="{:.1}" height="{:.1}" fill="#fafafa" stroke="#444"/>"##,
        w - 2.0 * pad,
        h - 2.0 * pad
    );
    if m * n <= CELL_LIMIT {
        for v in g.vertices() {
            let _ = writeln!(
                s,
                r##"<rect x="{:.1}" y="{:.1}" width="{cell:.1}" height="{cell:.1}" fill="none" stroke="#ccc"/>"##,
                x(v) - cell / 2.0,
                y(v) - cell / 2.0
            );
            if labels {
                let _ = writeln!(
                    s,
                    r##"<text x="{:.1}" y="{:.1}" font-size="{:.0}" text-anchor="middle" fill="#666">{}</text>"##,
                    x(v),
                    y(v) + cell * 0.4,
                    cell * 0.26,
                    g.cost(v)
                );
            }
        }
    }
    if let Some((u, v)) = fig.pair {
        for p in [u, v] {
            let _ = writeln!(
                s,
                r##"<rect x="{:.1}" y="{:.1}" width="{cell:.1}" height="{cell:.1}" fill="#f4a" fill-opacity="0.35" stroke="#c06"/>"##,
                x(p) - cell / 2.0,
                y(p) - cell / 2.0
            );
        }
    }
    if let Some(wit) = fig.witness {
        let _ = writeln!(s, "{}", polyline(&wit.zigzag, &x, &y, "#2a6", "6 4", cell));
        let _ = writeln!(
            s,
            "{}",
            polyline(&wit.corresponding, &x, &y, "#36c", "none", cell)
        );
        for (i, q) in wit.zigzag.iter().enumerate() {
            let _ = writeln!(
                s,
                r##"<circle cx="{:.1}" cy="{:.1}" r="{:.1}" fill="none" stroke="#2a6" stroke-width="2"><title>q{} ({},{})</title></circle>"##,
                x(*q),
                y(*q),
                cell * 0.3,
                i + 1,
                q.row,
                q.col
            );
        }
    }
    for v in fig.landmarks {
        let _ = writeln!(
            s,
            r##"<circle cx="{:.1}" cy="{:.1}" r="{:.1}" fill="#d33"><title>({},{}) cost {}</title></circle>"##,
            x(*v),
            y(*v),
            (cell * 0.22).max(1.5),
            v.row,
            v.col,
            g.cost(*v)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn polyline(
    vs: &[Vertex],
    x: &dyn Fn(Vertex) -> f64,
    y: &dyn Fn(Vertex) -> f64,
    color: &str,
    dash: &str,
    cell: f64,
) -> String {
    let points: Vec<String> = vs
        .iter()
        .map(|&v| format!("{:.1},{:.1}", x(v), y(v)))
        .collect();
    format!(
        r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="{:.1}" stroke-dasharray="{dash}"/>"#,
        points.join(" "),
        (cell * 0.08).max(1.0)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::Cost;
    use crate::solver::solve;

    #[test]
    fn zigzag_figure() {
        let g = Grid::from_integers(&[
            vec![100, 1, 100, 100],
            vec![1, 1, 1, 100],
            vec![100, 1, 1, 100],
            vec![100, 100, 1, 100],
        ])
        .unwrap();
        let s = solve(&g).unwrap();
        let svg = render(
            &g,
            &Figure {
                landmarks: &s.vertices,
                witness: s.witness.as_ref(),
                pair: None,
            },
        );
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches(r##"fill="#d33""##).count(), 4);
        assert!(svg.contains(">100</text>"));
    }

    #[test]
    fn large_grids_skip_cells() {
        let g = Grid::uniform(200, 200, Cost::from_integer(1)).unwrap();
        let svg = render(
            &g,
            &Figure {
                landmarks: &[Vertex::new(1, 1)],
                ..Figure::default()
            },
        );
        assert!(svg.len() < 2_000);
    }

    #[test]
    fn pair_highlight() {
        let g = Grid::uniform(3, 3, Cost::from_integer(1)).unwrap();
        let pair = Some((Vertex::new(1, 1), Vertex::new(1, 3)));
        let svg = render(
            &g,
            &Figure {
                landmarks: &[Vertex::new(2, 2)],
                witness: None,
                pair,
            },
        );
        assert_eq!(svg.matches("#f4a").count(), 2);
    }
}
