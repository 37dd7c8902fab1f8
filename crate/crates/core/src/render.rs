//! Contour plots and single-peakedness profiles as plain text and DOT.
//!
//! Text grids put `y = n` on the top row, as in the usual contour plots.
//! Each cell shows the value of its level set, so the distinct labels are
//! exactly the classes of the contour partition. Markers:
//!
//! * `(v)` isolated point
//! * `[v]` marked point (for example a rectangle witness)
//! * `{v}` isolated and marked

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::chain::{contour_partition, BinaryOperation, Point};
use crate::checkers::Rectangle;
use crate::order::LinearOrder;
use crate::single_peaked;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Points to overlay on the grid.
    pub marked: Vec<Point>,
}

impl RenderOptions {
    /// Marks the four vertices of a rectangle.
    pub fn with_rectangle(rectangle: &Rectangle) -> Self {
        Self {
            marked: rectangle.vertices().to_vec(),
        }
    }
}

fn digits(n: usize) -> usize {
    n.to_string().len()
}

pub fn render_contour_text(op: &BinaryOperation, options: &RenderOptions) -> String {
    let n = op.n();
    let width = digits(n);
    let partition = contour_partition(op);
    let isolated: BTreeSet<Point> = partition.isolated().into_iter().collect();
    let marked: BTreeSet<Point> = options.marked.iter().copied().collect();

    let mut out = String::new();
    for y in (1..=n).rev() {
        let _ = write!(out, "{y:>width$} |");
        for x in 1..=n {
            let v = op.get(x, y);
            let (open, close) = match (isolated.contains(&(x, y)), marked.contains(&(x, y))) {
                (false, false) => (' ', ' '),
                (true, false) => ('(', ')'),
                (false, true) => ('[', ']'),
                (true, true) => ('{', '}'),
            };
            let _ = write!(out, " {open}{v:>width$}{close}");
        }
        out.push('\n');
    }
    let cell = width + 3;
    let _ = writeln!(out, "{:>width$} +{}", "", "-".repeat(cell * n));
    let _ = write!(out, "{:>width$}  ", "");
    for x in 1..=n {
        let _ = write!(out, " {x:>w$} ", w = width + 1);
    }
    out.truncate(out.trim_end().len());
    out.push('\n');
    out
}

/// One node per point, pinned to its grid position; each class is joined
/// by a path through its points in lexicographic order.
pub fn render_contour_dot(op: &BinaryOperation) -> String {
    let partition = contour_partition(op);
    let mut out = String::from("graph contour {\n  node [shape=circle, fontsize=10];\n");
    for class in &partition.classes {
        let isolated = class.is_isolated();
        for &(x, y) in &class.points {
            let style = if isolated {
                ", shape=doublecircle, style=filled, fillcolor=lightgray"
            } else {
                ""
            };
            let _ = writeln!(
                out,
                "  \"{x},{y}\" [label=\"{}\", pos=\"{x},{y}!\"{style}];",
                class.value
            );
        }
    }
    for class in &partition.classes {
        for pair in class.points.windows(2) {
            let ((a, b), (c, d)) = (pair[0], pair[1]);
            let _ = writeln!(out, "  \"{a},{b}\" -- \"{c},{d}\";");
        }
    }
    out.push_str("}\n");
    out
}

/// Plots `f_≼` with `o` for points and `^` for local maxima, followed by a
/// caption line.
pub fn render_profile(ord: &LinearOrder) -> String {
    let n = ord.n();
    let width = digits(n);
    let heights = single_peaked::profile(ord);
    let maxima = single_peaked::local_maxima(&heights);

    let mut out = String::new();
    for h in (1..=n).rev() {
        let _ = write!(out, "{h:>width$} |");
        for x in 1..=n {
            let glyph = if heights[x - 1] != h {
                '.'
            } else if maxima.contains(&x) {
                '^'
            } else {
                'o'
            };
            let _ = write!(out, " {glyph:>width$}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "{:>width$} +{}", "", "-".repeat((width + 1) * n));
    let _ = write!(out, "{:>width$}  ", "");
    for x in 1..=n {
        let _ = write!(out, "{x:>width$} ");
    }
    out.truncate(out.trim_end().len());
    out.push('\n');

    let verdict = if maxima.len() == 1 {
        "single-peaked"
    } else {
        "not single-peaked"
    };
    let places: Vec<String> = maxima.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        out,
        "{ord}: {verdict}; local maxima at x = {}",
        places.join(", ")
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::FiniteChain;
    use crate::format::table_from_text;

    #[test]
    fn max_on_two() {
        let op = BinaryOperation::max(FiniteChain::new(2).unwrap());
        let text = render_contour_text(&op, &RenderOptions::default());
        assert_eq!(text, "2 |  2   2 \n1 | (1)  2 \n  +--------\n     1   2\n");
    }

    #[test]
    fn single_cell() {
        let op = BinaryOperation::max(FiniteChain::new(1).unwrap());
        assert_eq!(
            render_contour_text(&op, &RenderOptions::default()),
            "1 | (1)\n  +----\n     1\n"
        );
        let dot = render_contour_dot(&op);
        assert_eq!(dot.matches("pos=").count(), 1);
        assert!(!dot.contains("--"));
    }

    #[test]
    fn witness_overlay() {
        let op = table_from_text("3\n1 2 1\n2 2 3\n1 3 3\n").unwrap();
        let r = crate::checkers::rectangle_test(&op).unwrap().unwrap();
        let text = render_contour_text(&op, &RenderOptions::with_rectangle(&r));
        assert_eq!(text.matches('[').count(), 4);
    }

    #[test]
    fn wide_labels_keep_columns() {
        let op = BinaryOperation::max(FiniteChain::new(10).unwrap());
        let text = render_contour_text(&op, &RenderOptions::default());
        let lengths: BTreeSet<usize> = text.lines().take(10).map(str::len).collect();
        assert_eq!(lengths.len(), 1);
    }

    #[test]
    fn dot_edges_span_each_class() {
        let op = table_from_text("3\n1 1 2\n1 2 3\n2 3 3\n").unwrap();
        let dot = render_contour_dot(&op);
        assert_eq!(dot.matches("pos=").count(), 9);
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(!dot.contains("doublecircle"));
    }

    #[test]
    fn profiles() {
        let peaked = LinearOrder::new(vec![2, 3, 4, 1, 5]).unwrap();
        let text = render_profile(&peaked);
        assert_eq!(text.matches('^').count(), 1);
        assert!(text.ends_with(": single-peaked; local maxima at x = 2\n"));
        let two = LinearOrder::new(vec![5, 2, 1, 3, 4]).unwrap();
        let text = render_profile(&two);
        assert_eq!(text.matches('^').count(), 2);
        assert!(text.contains("not single-peaked"));
        let natural = LinearOrder::natural(FiniteChain::new(3).unwrap());
        assert!(render_profile(&natural).ends_with("local maxima at x = 1\n"));
    }
}
