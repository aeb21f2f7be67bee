//! Cheapest landmark sets with two or three vertices.
//!
//! Cardinality two: exactly the four adjacent-corner pairs. Cardinality three,
//! up to the grid symmetries, comes in two shapes: a pair `(1,z),(m,z)` on one
//! column with any third vertex off that column, and a side vertex flanked by
//! two vertices of the opposite side, one strictly on each side of it.

use crate::candidate::{keep_best, Candidate, Category};
use crate::grid::{Grid, Vertex};
use crate::minima::{MinEntry, MinimaTables};
use crate::weight::Weight;

/// The four adjacent-corner pairs.
pub fn card2_candidates(g: &Grid) -> Vec<Candidate> {
    let (m, n) = (g.m(), g.n());
    let v = Vertex::new;
    [
        [v(1, 1), v(1, n)],
        [v(1, 1), v(m, 1)],
        [v(1, n), v(m, n)],
        [v(m, 1), v(m, n)],
    ]
    .into_iter()
    .map(|pair| Candidate::new(g, pair.to_vec(), Category::Card2))
    .collect()
}

pub fn card2_best(g: &Grid) -> Candidate {
    let mut best = None;
    for c in card2_candidates(g) {
        keep_best(&mut best, c);
    }
    best.expect("four candidates")
}

/// Cheapest vertex of the grid, and the cheapest ones off its column and off its row.
#[derive(Clone, Copy, Debug)]
pub struct ThirdVertex<W> {
    pub global: MinEntry<W>,
    pub off_column: MinEntry<W>,
    pub off_row: MinEntry<W>,
}

fn lowest<W: Weight>(entries: impl Iterator<Item = MinEntry<W>>) -> Option<MinEntry<W>> {
    entries.min_by(|a, b| a.value.cmp(&b.value).then(a.witness.cmp(&b.witness)))
}

impl<W: Weight> ThirdVertex<W> {
    pub fn new(t: &MinimaTables<W>) -> Self {
        let (m, n) = (t.m(), t.n());
        let global = lowest((1..=m).map(|i| t.rpref(i, n))).expect("m >= 2");
        let off_column = lowest(
            (1..=n)
                .filter(|&j| j != global.witness.col)
                .map(|j| t.cpref(j, m)),
        )
        .expect("n >= 2");
        let off_row = lowest(
            (1..=m)
                .filter(|&i| i != global.witness.row)
                .map(|i| t.rpref(i, n)),
        )
        .expect("m >= 2");
        ThirdVertex {
            global,
            off_column,
            off_row,
        }
    }

    /// Cheapest vertex whose column differs from `col`.
    pub fn off_col(&self, col: usize) -> MinEntry<W> {
        if col == self.global.witness.col {
            self.off_column
        } else {
            self.global
        }
    }

    /// Cheapest vertex whose row differs from `row`.
    pub fn off_row(&self, row: usize) -> MinEntry<W> {
        if row == self.global.witness.row {
            self.off_row
        } else {
            self.global
        }
    }
}

/// Best `(key, sorted vertices)` seen so far.
struct Best<W> {
    entry: Option<(W, Vec<Vertex>)>,
}

impl<W: Weight> Best<W> {
    fn new() -> Self {
        Best { entry: None }
    }

    fn offer(&mut self, key: W, mut vertices: Vec<Vertex>) {
        vertices.sort();
        let better = match &self.entry {
            None => true,
            Some((k, vs)) => (key, &vertices) < (*k, vs),
        };
        if better {
            self.entry = Some((key, vertices));
        }
    }

    fn into_candidate(self, g: &Grid, category: Category) -> Option<Candidate> {
        self.entry.map(|(_, vs)| Candidate::new(g, vs, category))
    }
}

/// Cheapest set `{(1,z),(m,z),x}` (`1<z<n`, `x` off column `z`) or
/// `{(q,1),(q,n),x}` (`1<q<m`, `x` off row `q`).
pub fn card3_aligned_best<W: Weight>(g: &Grid, t: &MinimaTables<W>) -> Option<Candidate> {
    let (m, n) = (t.m(), t.n());
    let third = ThirdVertex::new(t);
    let mut best = Best::new();
    for z in 2..n {
        let (a, b) = (Vertex::new(1, z), Vertex::new(m, z));
        let x = third.off_col(z);
        let key = t.side_weight(a).plus(t.side_weight(b)).plus(x.value);
        best.offer(key, vec![a, b, x.witness]);
    }
    for q in 2..m {
        let (a, b) = (Vertex::new(q, 1), Vertex::new(q, n));
        let x = third.off_row(q);
        let key = t.side_weight(a).plus(t.side_weight(b)).plus(x.value);
        best.offer(key, vec![a, b, x.witness]);
    }
    best.into_candidate(g, Category::Card3Aligned)
}

/// Cheapest non-corner side vertex plus the cheapest opposite-side vertex on
/// each side of it.
pub fn card3_flanked_best<W: Weight>(g: &Grid, t: &MinimaTables<W>) -> Option<Candidate> {
    let (m, n) = (t.m(), t.n());
    let mut best = Best::new();
    let mut offer = |v: Vertex, left: Option<MinEntry<W>>, right: Option<MinEntry<W>>| {
        if let (Some(l), Some(r)) = (left, right) {
            let key = t.side_weight(v).plus(l.value).plus(r.value);
            best.offer(key, vec![v, l.witness, r.witness]);
        }
    };
    let rows = |row: usize, a: usize, b: usize| t.rrange(row, a, b).expect("side row");
    let cols = |col: usize, a: usize, b: usize| t.crange(col, a, b).expect("side column");
    for z in 2..n {
        offer(Vertex::new(1, z), rows(m, 1, z - 1), rows(m, z + 1, n));
        offer(Vertex::new(m, z), rows(1, 1, z - 1), rows(1, z + 1, n));
    }
    for q in 2..m {
        offer(Vertex::new(q, 1), cols(n, 1, q - 1), cols(n, q + 1, m));
        offer(Vertex::new(q, n), cols(1, 1, q - 1), cols(1, q + 1, m));
    }
    best.into_candidate(g, Category::Card3Flanked)
}
