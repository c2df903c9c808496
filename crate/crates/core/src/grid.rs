//! Diagonal grid diagrams.
//!
//! An n x n grid with O-vertices on the diagonal (i,i) and X-vertices at
//! (i, sigma(i)), columns numbered left to right and heights bottom to top.
//! Every column's vertical edge runs from its O to its X (upward exactly
//! when sigma(i) > i), every row's horizontal edge from its X to its O, and
//! vertical edges always pass over horizontal ones. Crossings count only
//! transversal interior intersections; touching endpoints do not cross.

use crate::lorenz::Shuffle;
use crate::planar::{Crossing, PlanarDiagram};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridDiagram {
    n: usize,
    /// Height of the X vertex in each column (1-based, index 0 = column 1).
    x_heights: Vec<usize>,
}

/// A vertical/horizontal intersection point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCrossing {
    /// Column of the vertical edge.
    pub col: usize,
    /// Height of the horizontal edge.
    pub row: usize,
    pub sign: i8,
}

impl GridDiagram {
    pub fn from_shuffle(s: &Shuffle) -> Self {
        GridDiagram {
            n: s.n(),
            x_heights: s.images().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// sigma(i): the X height in column i.
    pub fn x_height(&self, col: usize) -> usize {
        self.x_heights[col - 1]
    }

    fn x_col(&self, row: usize) -> usize {
        // column whose X sits at this height
        self.x_heights
            .iter()
            .position(|&h| h == row)
            .expect("x heights form a permutation")
            + 1
    }

    /// Components follow O -> X within a column, then X -> O within a row:
    /// exactly the cycles of sigma.
    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.n + 1];
        let mut count = 0;
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = self.x_height(c);
            }
        }
        count
    }

    /// All interior intersections, sorted by (col, row). The sign rule:
    /// upward verticals over rightward horizontals and downward verticals
    /// over leftward horizontals are positive; the mixed cases negative.
    pub fn crossings(&self) -> Vec<GridCrossing> {
        let n = self.n;
        let mut out = Vec::new();
        for col in 1..=n {
            let (vy_lo, vy_hi, v_up) = {
                let h = self.x_height(col);
                (col.min(h), col.max(h), h > col)
            };
            for row in vy_lo + 1..vy_hi {
                let xc = self.x_col(row);
                let (hx_lo, hx_hi, h_right) = (xc.min(row), xc.max(row), xc < row);
                if hx_lo < col && col < hx_hi {
                    let sign = if v_up == h_right { 1 } else { -1 };
                    out.push(GridCrossing { col, row, sign });
                }
            }
        }
        out
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings().iter().map(|c| c.sign as i64).sum()
    }

    /// Cuts the link into arcs at the crossings and records which arc
    /// enters and leaves each crossing on the over and under strand.
    pub fn to_planar(&self) -> PlanarDiagram {
        let n = self.n;
        let crossings = self.crossings();
        let cross_idx = |col: usize, row: usize| -> usize {
            crossings
                .iter()
                .position(|c| c.col == col && c.row == row)
                .unwrap()
        };

        // Incidences met while travelling along one column's vertical edge
        // (the over strand) then its row's horizontal edge (the under
        // strand), in travel order.
        let incidences_for_column = |col: usize| -> Vec<(usize, bool)> {
            let mut inc = Vec::new();
            let h = self.x_height(col);
            let mut on_vertical: Vec<usize> = crossings
                .iter()
                .filter(|c| c.col == col)
                .map(|c| c.row)
                .collect();
            on_vertical.sort_unstable();
            if h < col {
                on_vertical.reverse(); // travelling downward
            }
            for row in on_vertical {
                inc.push((cross_idx(col, row), true));
            }
            // horizontal edge at height h, from x = col to x = h
            let mut on_horizontal: Vec<usize> = crossings
                .iter()
                .filter(|c| c.row == h)
                .map(|c| c.col)
                .collect();
            on_horizontal.sort_unstable();
            if h < col {
                on_horizontal.reverse(); // travelling leftward
            }
            for c in on_horizontal {
                inc.push((cross_idx(c, h), false));
            }
            inc
        };

        let mut slots: Vec<[usize; 4]> = vec![[usize::MAX; 4]; crossings.len()];
        let mut num_arcs = 0;
        let mut free_loops = 0;
        let mut seen = vec![false; n + 1];
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            // walk the component through its columns
            let mut cols = Vec::new();
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                cols.push(c);
                c = self.x_height(c);
            }
            let inc: Vec<(usize, bool)> = cols
                .iter()
                .flat_map(|&col| incidences_for_column(col))
                .collect();
            if inc.is_empty() {
                free_loops += 1;
                continue;
            }
            let m = inc.len();
            let base = num_arcs;
            num_arcs += m;
            for (j, &(ci, over)) in inc.iter().enumerate() {
                let arc_in = base + (j + m - 1) % m;
                let arc_out = base + j;
                let (si, so) = if over { (0, 1) } else { (2, 3) };
                slots[ci][si] = arc_in;
                slots[ci][so] = arc_out;
            }
        }

        let d = PlanarDiagram {
            num_arcs,
            crossings: crossings
                .iter()
                .zip(&slots)
                .map(|(c, s)| Crossing {
                    over_in: s[0],
                    over_out: s[1],
                    under_in: s[2],
                    under_out: s[3],
                    sign: c.sign,
                })
                .collect(),
            free_loops,
        };
        debug_assert!(d.is_well_formed());
        d
    }

    /// One row per line, top height first: `X` and `O` vertices, `.`
    /// elsewhere.
    pub fn render_ascii(&self) -> String {
        let n = self.n;
        let mut lines = Vec::with_capacity(n);
        for row in (1..=n).rev() {
            let mut line = String::with_capacity(n);
            for col in 1..=n {
                if self.x_height(col) == row {
                    line.push('X');
                } else if col == row {
                    line.push('O');
                } else {
                    line.push('.');
                }
            }
            lines.push(line);
        }
        lines.join("\n")
    }

    /// SVG rendering: filled circles for X, hollow for O, arrowheads for
    /// edge orientation, and the under strand broken at each crossing.
    pub fn render_svg(&self) -> String {
        use std::fmt::Write;

        let n = self.n;
        let cell = 40.0;
        let size = cell * (n as f64 + 1.0);
        let x_of = |col: usize| col as f64 * cell;
        let y_of = |row: usize| (n + 1 - row) as f64 * cell; // flip: height 1 at the bottom
        let gap = 7.0;
        let r = 6.0;

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
            s = size
        );
        svg.push_str(concat!(
            r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" "#,
            r#"markerWidth="7" markerHeight="7" orient="auto-start-reverse">"#,
            r#"<path d="M 0 1 L 9 5 L 0 9 z"/></marker></defs>"#,
            "\n"
        ));

        let crossings = self.crossings();
        // vertical edges: O (col,col) -> X (col,sigma(col)), drawn on top
        for col in 1..=n {
            let h = self.x_height(col);
            let _ = writeln!(
                svg,
                r#"<path class="edge vertical" d="M {:.1},{:.1} L {:.1},{:.1}" fill="none" stroke="black" stroke-width="2" marker-end="url(#arrow)"/>"#,
                x_of(col),
                y_of(col),
                x_of(col),
                y_of(h)
            );
        }
        // horizontal edges: X (xc,row) -> O (row,row), broken at crossings
        for row in 1..=n {
            let xc = self.x_col(row);
            let mut cols: Vec<usize> = crossings
                .iter()
                .filter(|c| c.row == row)
                .map(|c| c.col)
                .collect();
            cols.sort_unstable();
            if xc > row {
                cols.reverse(); // travel leftward
            }
            let y = y_of(row);
            let mut d = String::new();
            let mut cx = x_of(xc);
            let end = x_of(row);
            let dir = if xc < row { 1.0 } else { -1.0 };
            for c in cols {
                let bx = x_of(c);
                let _ = write!(d, "M {:.1},{:.1} L {:.1},{:.1} ", cx, y, bx - dir * gap, y);
                cx = bx + dir * gap;
            }
            let _ = write!(d, "M {:.1},{:.1} L {:.1},{:.1}", cx, y, end, y);
            let _ = writeln!(
                svg,
                r#"<path class="edge horizontal" d="{}" fill="none" stroke="black" stroke-width="2" marker-end="url(#arrow)"/>"#,
                d
            );
        }
        // vertices above the edges: O hollow, X filled
        for col in 1..=n {
            let _ = writeln!(
                svg,
                r#"<circle class="vertex o" cx="{:.1}" cy="{:.1}" r="{r}" fill="white" stroke="black" stroke-width="2"/>"#,
                x_of(col),
                y_of(col),
            );
            let _ = writeln!(
                svg,
                r#"<circle class="vertex x" cx="{:.1}" cy="{:.1}" r="{r}" fill="black"/>"#,
                x_of(col),
                y_of(self.x_height(col)),
            );
        }
        svg.push_str("</svg>\n");
        svg
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorenz::LorenzVector;

    fn grid(entries: &[u32]) -> GridDiagram {
        GridDiagram::from_shuffle(&LorenzVector::new(entries.to_vec()).unwrap().shuffle())
    }

    #[test]
    fn hopf_grid_crossings() {
        let g = grid(&[2, 2]);
        let cs = g.crossings();
        assert_eq!(
            cs,
            vec![
                GridCrossing {
                    col: 2,
                    row: 3,
                    sign: 1
                },
                GridCrossing {
                    col: 3,
                    row: 2,
                    sign: 1
                },
            ]
        );
        assert_eq!(g.components(), 2);
        assert_eq!(g.writhe(), 2);
    }

    #[test]
    fn trefoil_grid_crossings() {
        let g = grid(&[2, 2, 2]);
        let cs = g.crossings();
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().all(|c| c.sign == 1));
        assert_eq!(g.components(), 1);
    }

    #[test]
    fn single_column_grids_have_no_crossings() {
        for p in 1..=8 {
            let g = grid(&[p]);
            assert_eq!(g.crossings().len(), 0, "p = {}", p);
            assert_eq!(g.components(), 1);
            let d = g.to_planar();
            assert_eq!(d.free_loops, 1);
            assert_eq!(d.components(), 1);
        }
    }

    #[test]
    fn planar_conversion_agrees_on_components() {
        for entries in [
            vec![1],
            vec![2, 2],
            vec![2, 2, 2],
            vec![1, 1, 2],
            vec![3, 3, 3, 3, 5, 5, 5],
        ] {
            let g = grid(&entries);
            let d = g.to_planar();
            assert!(d.is_well_formed(), "{:?}", entries);
            assert_eq!(d.components(), g.components(), "{:?}", entries);
            assert_eq!(d.crossing_count(), g.crossings().len());
            assert_eq!(d.writhe(), g.writhe());
        }
    }

    #[test]
    fn fixture_grid_has_eighteen_crossings() {
        let g = grid(&[3, 3, 3, 3, 5, 5, 5]);
        let cs = g.crossings();
        assert_eq!(cs.len(), 18);
        assert!(cs.iter().all(|c| c.sign == 1));
        assert_eq!(g.components(), 1);
    }

    #[test]
    fn ascii_two_by_two() {
        let g = grid(&[1]);
        assert_eq!(g.render_ascii(), "XO\nOX");
    }

    #[test]
    fn ascii_shapes() {
        let g = grid(&[2, 2]);
        assert_eq!(g.render_ascii(), ".X.O\nX.O.\n.O.X\nO.X.");
        let t = grid(&[2, 2, 2]);
        let ascii = t.render_ascii();
        let lines: Vec<&str> = ascii.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines.iter().all(|l| l.len() == 5));
        // each row and column holds exactly one X and one O
        for l in &lines {
            assert_eq!(l.matches('X').count(), 1);
            assert_eq!(l.matches('O').count(), 1);
        }
    }

    #[test]
    fn svg_element_counts() {
        let svg = grid(&[2, 2]).render_svg();
        assert_eq!(svg.matches("<circle").count(), 8);
        assert_eq!(svg.matches(r#"class="edge"#).count(), 8);
        // two crossings break the horizontals into two extra segments
        let gaps: usize = svg
            .lines()
            .filter(|l| l.contains("edge horizontal"))
            .map(|l| l.matches("M ").count() - 1)
            .sum();
        assert_eq!(gaps, 2);

        let svg1 = grid(&[1]).render_svg();
        assert_eq!(svg1.matches("<circle").count(), 4);
        assert_eq!(svg1.matches(r#"class="edge"#).count(), 4);
    }
}
