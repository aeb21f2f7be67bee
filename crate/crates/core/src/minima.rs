//! Prefix, suffix and side-line range minima with arg-min witnesses.
//!
//! Ties are broken towards the smallest index of the scanned range. Range
//! tables exist only for the four side lines; an empty range is reported as
//! `None`, which callers treat as the absorbing unreachable element.

use crate::error::{Error, Result};
use crate::grid::Vertex;
use crate::weight::{Weight, WeightGrid};

/// A minimum value together with a vertex attaining it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinEntry<W> {
    pub value: W,
    pub witness: Vertex,
}

/// Upper-triangular table of range minima over one line of length `len`.
#[derive(Clone, Debug)]
struct RangeTable<W> {
    starts: Vec<usize>,
    values: Vec<W>,
    args: Vec<u32>,
}

impl<W: Weight> RangeTable<W> {
    fn build(line: &[W]) -> Self {
        let len = line.len();
        let mut starts = Vec::with_capacity(len + 1);
        let mut values = Vec::with_capacity(len * (len + 1) / 2);
        let mut args = Vec::with_capacity(len * (len + 1) / 2);
        for j in 0..len {
            starts.push(values.len());
            let (mut best, mut arg) = (line[j], j);
            for (k, &w) in line.iter().enumerate().skip(j) {
                if w < best {
                    best = w;
                    arg = k;
                }
                values.push(best);
                args.push(arg as u32 + 1);
            }
        }
        starts.push(values.len());
        RangeTable {
            starts,
            values,
            args,
        }
    }

    /// Values for the ranges `[from, from], [from, from+1], ..., [from, len]` (1-based).
    fn from(&self, from: usize) -> &[W] {
        &self.values[self.starts[from - 1]..self.starts[from]]
    }

    fn get(&self, from: usize, to: usize) -> (W, usize) {
        let at = self.starts[from - 1] + (to - from);
        (self.values[at], self.args[at] as usize)
    }
}

/// Which side line a range query refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    First,
    Last,
}

#[derive(Clone, Debug)]
pub struct MinimaTables<W> {
    m: usize,
    n: usize,
    rpref: Vec<W>,
    rpref_arg: Vec<u32>,
    rsuff: Vec<W>,
    rsuff_arg: Vec<u32>,
    // Column tables are stored row-major as well: entry (i, j) covers column j.
    cpref: Vec<W>,
    cpref_arg: Vec<u32>,
    csuff: Vec<W>,
    csuff_arg: Vec<u32>,
    row_range: [RangeTable<W>; 2],
    col_range: [RangeTable<W>; 2],
}

impl<W: Weight> MinimaTables<W> {
    pub fn build(grid: &WeightGrid<W>) -> Self {
        let (m, n) = (grid.m(), grid.n());
        let w = grid.weights().as_slice();
        let size = m * n;
        let mut rpref = vec![W::ZERO; size];
        let mut rpref_arg = vec![0u32; size];
        let mut rsuff = vec![W::ZERO; size];
        let mut rsuff_arg = vec![0u32; size];
        let mut cpref = vec![W::ZERO; size];
        let mut cpref_arg = vec![0u32; size];
        let mut csuff = vec![W::ZERO; size];
        let mut csuff_arg = vec![0u32; size];

        for i in 0..m {
            let base = i * n;
            let (mut best, mut arg) = (w[base], 0usize);
            for j in 0..n {
                if w[base + j] < best {
                    best = w[base + j];
                    arg = j;
                }
                rpref[base + j] = best;
                rpref_arg[base + j] = arg as u32 + 1;
            }
            let (mut best, mut arg) = (w[base + n - 1], n - 1);
            for j in (0..n).rev() {
                if w[base + j] <= best {
                    best = w[base + j];
                    arg = j;
                }
                rsuff[base + j] = best;
                rsuff_arg[base + j] = arg as u32 + 1;
            }
        }
        for j in 0..n {
            let (mut best, mut arg) = (w[j], 0usize);
            for i in 0..m {
                let at = i * n + j;
                if w[at] < best {
                    best = w[at];
                    arg = i;
                }
                cpref[at] = best;
                cpref_arg[at] = arg as u32 + 1;
            }
            let (mut best, mut arg) = (w[(m - 1) * n + j], m - 1);
            for i in (0..m).rev() {
                let at = i * n + j;
                if w[at] <= best {
                    best = w[at];
                    arg = i;
                }
                csuff[at] = best;
                csuff_arg[at] = arg as u32 + 1;
            }
        }

        let column = |j: usize| -> Vec<W> { (0..m).map(|i| w[i * n + j]).collect() };
        MinimaTables {
            m,
            n,
            rpref,
            rpref_arg,
            rsuff,
            rsuff_arg,
            cpref,
            cpref_arg,
            csuff,
            csuff_arg,
            row_range: [
                RangeTable::build(&w[..n]),
                RangeTable::build(&w[(m - 1) * n..]),
            ],
            col_range: [
                RangeTable::build(&column(0)),
                RangeTable::build(&column(n - 1)),
            ],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn at(&self, row: usize, col: usize) -> usize {
        assert!(
            (1..=self.m).contains(&row) && (1..=self.n).contains(&col),
            "minima query ({row},{col}) outside {}x{}",
            self.m,
            self.n
        );
        (row - 1) * self.n + (col - 1)
    }

    /// Minimum of row `i` over columns `1..=j`.
    pub fn rpref(&self, i: usize, j: usize) -> MinEntry<W> {
        let at = self.at(i, j);
        MinEntry {
            value: self.rpref[at],
            witness: Vertex::new(i, self.rpref_arg[at] as usize),
        }
    }

    /// Minimum of row `i` over columns `j..=n`.
    pub fn rsuff(&self, i: usize, j: usize) -> MinEntry<W> {
        let at = self.at(i, j);
        MinEntry {
            value: self.rsuff[at],
            witness: Vertex::new(i, self.rsuff_arg[at] as usize),
        }
    }

    /// Minimum of column `j` over rows `1..=i`.
    pub fn cpref(&self, j: usize, i: usize) -> MinEntry<W> {
        let at = self.at(i, j);
        MinEntry {
            value: self.cpref[at],
            witness: Vertex::new(self.cpref_arg[at] as usize, j),
        }
    }

    /// Minimum of column `j` over rows `i..=m`.
    pub fn csuff(&self, j: usize, i: usize) -> MinEntry<W> {
        let at = self.at(i, j);
        MinEntry {
            value: self.csuff[at],
            witness: Vertex::new(self.csuff_arg[at] as usize, j),
        }
    }

    fn row_side(&self, row: usize) -> Result<Side> {
        match row {
            1 => Ok(Side::First),
            r if r == self.m => Ok(Side::Last),
            r => Err(Error::Contract(format!(
                "row {r} is not a side row of a {}-row grid",
                self.m
            ))),
        }
    }

    fn col_side(&self, col: usize) -> Result<Side> {
        match col {
            1 => Ok(Side::First),
            c if c == self.n => Ok(Side::Last),
            c => Err(Error::Contract(format!(
                "column {c} is not a side column of a {}-column grid",
                self.n
            ))),
        }
    }

    /// Minimum of side row `row` (1 or m) over columns `from..=to`; `None` if `from > to`.
    pub fn rrange(&self, row: usize, from: usize, to: usize) -> Result<Option<MinEntry<W>>> {
        let side = self.row_side(row)?;
        if from > to {
            return Ok(None);
        }
        if from < 1 || to > self.n {
            return Err(Error::Contract(format!(
                "column range {from}..={to} outside 1..={}",
                self.n
            )));
        }
        let (value, col) = self.row_range[side as usize].get(from, to);
        Ok(Some(MinEntry {
            value,
            witness: Vertex::new(row, col),
        }))
    }

    /// Minimum of side column `col` (1 or n) over rows `from..=to`; `None` if `from > to`.
    pub fn crange(&self, col: usize, from: usize, to: usize) -> Result<Option<MinEntry<W>>> {
        let side = self.col_side(col)?;
        if from > to {
            return Ok(None);
        }
        if from < 1 || to > self.m {
            return Err(Error::Contract(format!(
                "row range {from}..={to} outside 1..={}",
                self.m
            )));
        }
        let (value, row) = self.col_range[side as usize].get(from, to);
        Ok(Some(MinEntry {
            value,
            witness: Vertex::new(row, col),
        }))
    }

    /// Weight of a side vertex, read from the singleton range.
    pub fn side_weight(&self, v: Vertex) -> W {
        if v.row == 1 || v.row == self.m {
            self.rrange(v.row, v.col, v.col)
                .ok()
                .flatten()
                .expect("side vertex")
                .value
        } else {
            self.crange(v.col, v.row, v.row)
                .ok()
                .flatten()
                .expect("side vertex")
                .value
        }
    }

    pub(crate) fn rpref_row(&self, i: usize) -> &[W] {
        &self.rpref[(i - 1) * self.n..i * self.n]
    }

    pub(crate) fn rpref_arg_row(&self, i: usize) -> &[u32] {
        &self.rpref_arg[(i - 1) * self.n..i * self.n]
    }

    pub(crate) fn cpref_row(&self, i: usize) -> &[W] {
        &self.cpref[(i - 1) * self.n..i * self.n]
    }

    pub(crate) fn cpref_arg_row(&self, i: usize) -> &[u32] {
        &self.cpref_arg[(i - 1) * self.n..i * self.n]
    }

    /// Range minima of the last row for ranges starting at column `from`.
    pub(crate) fn last_row_from(&self, from: usize) -> &[W] {
        self.row_range[Side::Last as usize].from(from)
    }

    pub(crate) fn last_row_arg(&self, from: usize, to: usize) -> usize {
        self.row_range[Side::Last as usize].get(from, to).1
    }
}
