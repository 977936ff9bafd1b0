//! Plain-text layouts for the structured values.

use crate::dynamics::GrowthDiagram;
use crate::flag::SkewFlagTableau;
use crate::frieze::TropicalFrieze;
use crate::tableau::IncreasingTableau;
use crate::words::HeightGrowthDiagram;

fn trim_lines(lines: Vec<String>) -> String {
    lines
        .into_iter()
        .map(|l| l.trim_end().to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn render_tableau(t: &IncreasingTableau) -> String {
    if t.rows().is_empty() {
        return "∅".to_string();
    }
    let width = t.max_value().to_string().len();
    let lines = t
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| format!("{v:>width$}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    trim_lines(lines)
}

pub fn render_skew(s: &SkewFlagTableau) -> String {
    let width = s.max_value().to_string().len();
    let cols = s.width();
    let mut lines = Vec::new();
    for &v in s.hat() {
        let mut line = " ".repeat((width + 1) * (cols - 1));
        line.push_str(&format!("{v:>width$}"));
        lines.push(line);
    }
    for row in s.body_rows() {
        lines.push(
            row.iter()
                .map(|v| format!("{v:>width$}"))
                .collect::<Vec<_>>()
                .join(" "),
        );
    }
    trim_lines(lines)
}

pub fn render_growth(g: &GrowthDiagram) -> String {
    let side = g.side();
    let total_cols = 2 * side - 1;
    let mut cells: Vec<Vec<Option<String>>> = vec![vec![None; total_cols]; side];
    for (i, row) in g.rows().iter().enumerate() {
        for (j, shape) in row.shapes().iter().enumerate() {
            cells[i][i + j] = Some(shape.to_string());
        }
    }
    let mut widths = vec![0usize; total_cols];
    for row in &cells {
        for (c, cell) in row.iter().enumerate() {
            if let Some(s) = cell {
                widths[c] = widths[c].max(s.chars().count());
            }
        }
    }
    let lines = cells
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(c, cell)| {
                    let text = cell.clone().unwrap_or_default();
                    let pad = widths[c].saturating_sub(text.chars().count());
                    format!("{}{}", text, " ".repeat(pad))
                })
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    trim_lines(lines)
}

pub fn render_height_growth(h: &HeightGrowthDiagram) -> String {
    let lines = h
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    trim_lines(lines)
}

pub fn render_frieze(f: &TropicalFrieze) -> String {
    let width = f
        .rows()
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let lines = f
        .rows()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let indent = " ".repeat(i * (width + 1));
            let body = row
                .iter()
                .map(|v| format!("{v:>width$}"))
                .collect::<Vec<_>>()
                .join(" ");
            format!("{indent}{body}")
        })
        .collect();
    trim_lines(lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flag::skew_of;

    fn t(rows: &[&[u32]]) -> IncreasingTableau {
        IncreasingTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn lays_out_a_tableau() {
        let x = t(&[&[1, 2, 4], &[3, 4, 5]]);
        assert_eq!(render_tableau(&x), "1 2 4\n3 4 5");
        assert_eq!(x.to_string(), "1 2 4\n3 4 5");
        let wide = t(&[&[1, 2, 3, 4, 5], &[6, 7, 8, 9, 10]]);
        assert_eq!(render_tableau(&wide), " 1  2  3  4  5\n 6  7  8  9 10");
        assert_eq!(render_tableau(&IncreasingTableau::empty()), "∅");
    }

    #[test]
    fn lays_out_a_skew_companion() {
        let x = t(&[&[1, 2, 3, 4, 7], &[4, 5, 6, 7, 8]]);
        let s = skew_of(&x).unwrap();
        assert_eq!(render_skew(&s), "    3\n    4\n1 2 7\n5 6 8");
    }

    #[test]
    fn lays_out_a_frieze() {
        let fr = TropicalFrieze::from_seed(vec![0, 1, -1, 0], 3).unwrap();
        let text = render_frieze(&fr);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], " 0  1 -1  0");
        assert!(lines[1].starts_with("    0"));
    }

    #[test]
    fn lays_out_growth_diagrams() {
        let x = t(&[&[1, 2], &[2, 3]]);
        let g = GrowthDiagram::new(&x);
        let text = render_growth(&g);
        assert_eq!(text.lines().count(), 4);
        assert!(text.starts_with('∅'));
        let h = crate::words::height_growth_diagram(&x).unwrap();
        let ht = render_height_growth(&h);
        assert_eq!(ht.lines().next(), Some("0 1 1 0"));
        assert_eq!(ht.lines().last(), Some("0"));
    }
}
