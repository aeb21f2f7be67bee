//! Grid model: vertices, ℓ1 distance, the eight rectangle symmetries and the cost matrix.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cost::Cost;
use crate::error::{Error, Result};

/// A grid vertex with 1-based coordinates. Orders lexicographically (row, then column).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Vertex {
    pub row: usize,
    pub col: usize,
}

impl Vertex {
    pub const fn new(row: usize, col: usize) -> Self {
        Vertex { row, col }
    }
}

impl From<[usize; 2]> for Vertex {
    fn from([row, col]: [usize; 2]) -> Self {
        Vertex { row, col }
    }
}

impl From<Vertex> for [usize; 2] {
    fn from(v: Vertex) -> Self {
        [v.row, v.col]
    }
}

impl From<(usize, usize)> for Vertex {
    fn from((row, col): (usize, usize)) -> Self {
        Vertex { row, col }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Edge distance in the grid graph, i.e. the ℓ1 distance of the coordinates.
#[inline]
pub fn distance(u: Vertex, v: Vertex) -> usize {
    u.row.abs_diff(v.row) + u.col.abs_diff(v.col)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexClass {
    Corner,
    Side,
    Internal,
}

pub fn classify(v: Vertex, m: usize, n: usize) -> VertexClass {
    let on_row_side = v.row == 1 || v.row == m;
    let on_col_side = v.col == 1 || v.col == n;
    match (on_row_side, on_col_side) {
        (true, true) => VertexClass::Corner,
        (false, false) => VertexClass::Internal,
        _ => VertexClass::Side,
    }
}

/// One of the eight symmetries of an `m x n` rectangle.
///
/// Bit 0 mirrors rows, bit 1 mirrors columns, bit 2 transposes. Mirrors are
/// applied in the source grid first, then the transpose.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Orientation(u8);

impl Orientation {
    pub const IDENTITY: Orientation = Orientation(0);
    pub const FLIP_ROWS: Orientation = Orientation(1);
    pub const FLIP_COLS: Orientation = Orientation(2);
    pub const TRANSPOSE: Orientation = Orientation(4);

    pub const ALL: [Orientation; 8] = [
        Orientation(0),
        Orientation(1),
        Orientation(2),
        Orientation(3),
        Orientation(4),
        Orientation(5),
        Orientation(6),
        Orientation(7),
    ];

    pub fn new(index: u8) -> Option<Self> {
        (index < 8).then_some(Orientation(index))
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn flips_rows(self) -> bool {
        self.0 & 1 != 0
    }

    pub fn flips_cols(self) -> bool {
        self.0 & 2 != 0
    }

    pub fn transposes(self) -> bool {
        self.0 & 4 != 0
    }

    /// Dimensions of the image of an `m x n` grid.
    pub fn dims(self, m: usize, n: usize) -> (usize, usize) {
        if self.transposes() {
            (n, m)
        } else {
            (m, n)
        }
    }

    /// The orientation undoing `self`, acting on the transformed grid.
    pub fn inverse(self) -> Orientation {
        if self.transposes() {
            // (mirror, then transpose) is undone by (transpose, then mirror), which is the
            // other mirror followed by a transpose.
            let rows = self.flips_cols() as u8;
            let cols = self.flips_rows() as u8;
            Orientation(4 | rows | (cols << 1))
        } else {
            self
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Image of `v` (in an `m x n` grid) under `o`.
pub fn transform_vertex(v: Vertex, o: Orientation, m: usize, n: usize) -> Vertex {
    let row = if o.flips_rows() { m + 1 - v.row } else { v.row };
    let col = if o.flips_cols() { n + 1 - v.col } else { v.col };
    if o.transposes() {
        Vertex::new(col, row)
    } else {
        Vertex::new(row, col)
    }
}

/// Maps a vertex of the transformed grid back to the original `m x n` grid.
pub fn inverse_transform(v: Vertex, o: Orientation, m: usize, n: usize) -> Vertex {
    let (tm, tn) = o.dims(m, n);
    transform_vertex(v, o.inverse(), tm, tn)
}

/// Row-major `m x n` matrix addressed with 1-based coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    m: usize,
    n: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_vec(m: usize, n: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), m * n, "matrix data length");
        Matrix { m, n, data }
    }

    pub fn from_fn(m: usize, n: usize, mut f: impl FnMut(Vertex) -> T) -> Self {
        let mut data = Vec::with_capacity(m * n);
        for row in 1..=m {
            for col in 1..=n {
                data.push(f(Vertex::new(row, col)));
            }
        }
        Matrix { m, n, data }
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn index_of(&self, v: Vertex) -> usize {
        (v.row - 1) * self.n + (v.col - 1)
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> &T {
        &self.data[self.index_of(v)]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    /// Row `row` (1-based) as a slice.
    pub fn row(&self, row: usize) -> &[T] {
        &self.data[(row - 1) * self.n..row * self.n]
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            m: self.m,
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    /// The matrix seen through orientation `o`: `out[transform_vertex(v)] == self[v]`.
    pub fn transform(&self, o: Orientation) -> Matrix<T> {
        let (tm, tn) = o.dims(self.m, self.n);
        Matrix::from_fn(tm, tn, |w| {
            self.get(inverse_transform(w, o, self.m, self.n)).clone()
        })
    }
}

/// An `m x n` grid graph (`m, n >= 2`) with exact non-negative vertex costs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grid {
    costs: Matrix<Cost>,
}

impl Grid {
    /// Builds a grid from cost rows.
    pub fn new(rows: Vec<Vec<Cost>>) -> Result<Grid> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotRectangular {
                    row: i + 1,
                    expected: n,
                    found: row.len(),
                });
            }
        }
        if m < 2 || n < 2 {
            return Err(Error::UnsupportedGrid { m, n });
        }
        Ok(Grid {
            costs: Matrix::from_vec(m, n, rows.into_iter().flatten().collect()),
        })
    }

    pub fn from_matrix(costs: Matrix<Cost>) -> Result<Grid> {
        if costs.rows() < 2 || costs.cols() < 2 {
            return Err(Error::UnsupportedGrid {
                m: costs.rows(),
                n: costs.cols(),
            });
        }
        Ok(Grid { costs })
    }

    pub fn from_fn(m: usize, n: usize, f: impl FnMut(Vertex) -> Cost) -> Result<Grid> {
        Grid::from_matrix(Matrix::from_fn(m, n, f))
    }

    pub fn uniform(m: usize, n: usize, cost: Cost) -> Result<Grid> {
        Grid::from_fn(m, n, |_| cost.clone())
    }

    /// Convenience constructor from integer costs.
    pub fn from_integers(rows: &[Vec<u64>]) -> Result<Grid> {
        Grid::new(
            rows.iter()
                .map(|r| r.iter().map(|&c| Cost::from_integer(c)).collect())
                .collect(),
        )
    }

    pub fn m(&self) -> usize {
        self.costs.rows()
    }

    pub fn n(&self) -> usize {
        self.costs.cols()
    }

    pub fn len(&self) -> usize {
        self.m() * self.n()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.m()).contains(&v.row) && (1..=self.n()).contains(&v.col)
    }

    pub fn check(&self, v: Vertex) -> Result<Vertex> {
        if self.contains(v) {
            Ok(v)
        } else {
            Err(Error::VertexOutOfRange {
                row: v.row,
                col: v.col,
                m: self.m(),
                n: self.n(),
            })
        }
    }

    pub fn cost(&self, v: Vertex) -> &Cost {
        self.costs.get(v)
    }

    pub fn costs(&self) -> &Matrix<Cost> {
        &self.costs
    }

    /// Exact total cost of a vertex set.
    pub fn set_cost<'a>(&self, vertices: impl IntoIterator<Item = &'a Vertex>) -> Cost {
        vertices.into_iter().map(|v| self.cost(*v)).sum()
    }

    pub fn total_cost(&self) -> Cost {
        self.costs.as_slice().iter().sum()
    }

    /// All vertices in row-major order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        vertices(self.m(), self.n())
    }

    pub fn classify(&self, v: Vertex) -> VertexClass {
        classify(v, self.m(), self.n())
    }

    pub fn transform(&self, o: Orientation) -> Grid {
        Grid {
            costs: self.costs.transform(o),
        }
    }

    pub fn rows(&self) -> Vec<Vec<Cost>> {
        (1..=self.m()).map(|r| self.costs.row(r).to_vec()).collect()
    }
}

/// Orientation image of a grid.
pub fn transform_grid(g: &Grid, o: Orientation) -> Grid {
    g.transform(o)
}

/// All vertices of an `m x n` grid in row-major order.
pub fn vertices(m: usize, n: usize) -> impl Iterator<Item = Vertex> + Clone {
    (1..=m).flat_map(move |row| (1..=n).map(move |col| Vertex::new(row, col)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn distance_examples() {
        assert_eq!(distance(Vertex::new(1, 2), Vertex::new(2, 1)), 2);
        let (m, n) = (5, 7);
        assert_eq!(distance(Vertex::new(1, 1), Vertex::new(m, n)), m + n - 2);
        assert_eq!(distance(Vertex::new(3, 3), Vertex::new(3, 3)), 0);
    }

    #[test]
    fn transform_examples() {
        let v = Vertex::new(2, 3);
        assert_eq!(transform_vertex(v, Orientation::IDENTITY, 4, 5), v);
        assert_eq!(
            transform_vertex(Vertex::new(1, 1), Orientation::FLIP_ROWS, 4, 5),
            Vertex::new(4, 1)
        );
        assert_eq!(
            transform_vertex(v, Orientation::TRANSPOSE, 4, 5),
            Vertex::new(3, 2)
        );
        assert_eq!(Orientation::TRANSPOSE.dims(4, 5), (5, 4));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(Vertex::new(1, 1), 3, 3), VertexClass::Corner);
        assert_eq!(classify(Vertex::new(1, 2), 3, 3), VertexClass::Side);
        assert_eq!(classify(Vertex::new(2, 2), 3, 3), VertexClass::Internal);
    }

    #[test]
    fn orientations_form_the_dihedral_group() {
        let (m, n) = (3, 5);
        let images: std::collections::HashSet<Vec<Vertex>> = Orientation::ALL
            .iter()
            .map(|&o| {
                vertices(m, n)
                    .map(|v| transform_vertex(v, o, m, n))
                    .collect()
            })
            .collect();
        assert_eq!(images.len(), 8);
        for o in Orientation::ALL {
            assert_eq!(o.inverse().inverse(), o);
            for v in vertices(m, n) {
                assert_eq!(inverse_transform(transform_vertex(v, o, m, n), o, m, n), v);
            }
        }
    }

    #[test]
    fn grid_transform_examples() {
        let g = Grid::from_integers(&[vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert_eq!(g.transform(Orientation::IDENTITY), g);
        let mut base: Vec<Cost> = g.costs().as_slice().to_vec();
        base.sort();
        for o in Orientation::ALL {
            let t = g.transform(o);
            for v in g.vertices() {
                assert_eq!(t.cost(transform_vertex(v, o, 2, 3)), g.cost(v));
            }
            let mut entries = t.costs().as_slice().to_vec();
            entries.sort();
            assert_eq!(entries, base);
            let (tm, tn) = o.dims(2, 3);
            assert_eq!(t.transform(o.inverse()), g, "orientation {o} in {tm}x{tn}");
        }
    }

    #[test]
    fn rejects_degenerate_grids() {
        assert_eq!(
            Grid::from_integers(&[vec![1, 2, 3]]),
            Err(Error::UnsupportedGrid { m: 1, n: 3 })
        );
        assert!(matches!(
            Grid::from_integers(&[vec![1, 2], vec![3]]),
            Err(Error::NotRectangular { row: 2, .. })
        ));
    }

    fn vertex_in(m: usize, n: usize) -> impl Strategy<Value = Vertex> {
        (1..=m, 1..=n).prop_map(|(r, c)| Vertex::new(r, c))
    }

    proptest! {
        #[test]
        fn distance_is_a_metric((m, n, a, b, c) in (2usize..40, 2usize..40).prop_flat_map(|(m, n)| {
            (Just(m), Just(n), vertex_in(m, n), vertex_in(m, n), vertex_in(m, n))
        })) {
            prop_assert!(m >= 2 && n >= 2);
            prop_assert_eq!(distance(a, b), distance(b, a));
            prop_assert_eq!(distance(a, b) == 0, a == b);
            prop_assert!(distance(a, c) <= distance(a, b) + distance(b, c));
        }

        #[test]
        fn transform_preserves_total_cost(m in 2usize..7, n in 2usize..7, seed in any::<u64>(), o in 0u8..8) {
            let g = Grid::from_fn(m, n, |v| Cost::from_integer((seed ^ (v.row * 31 + v.col) as u64) % 17)).unwrap();
            let o = Orientation::new(o).unwrap();
            let t = transform_grid(&g, o);
            prop_assert_eq!(t.total_cost(), g.total_cost());
            for v in g.vertices() {
                prop_assert_eq!(inverse_transform(transform_vertex(v, o, m, n), o, m, n), v);
                prop_assert_eq!(t.cost(transform_vertex(v, o, m, n)), g.cost(v));
            }
        }
    }
}
