//! Brute-force ground truth for small grids.
//!
//! Everything here enumerates directly over vertex subsets or sequences and
//! shares nothing with the solver beyond the grid type and the landmark check.

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::cost::Cost;
use crate::error::{Error, Result};
use crate::grid::{Grid, Vertex};
use crate::separation::{is_landmark_indices, is_landmark_set, packed_fits};
use crate::zigzag::{CorrespondingSequence, ZigzagSequence};

/// Largest `m*n` accepted by [`brute_force_min`].
pub const BRUTE_LIMIT: usize = 25;
/// Largest `m*n` accepted by [`brute_force_min_with`] under [`Bound::Exhaustive`].
pub const EXHAUSTIVE_LIMIT: usize = 16;
/// Largest `m*n` accepted by [`enumerate_minimal_sets`].
pub const MINIMAL_LIMIT: usize = 20;
/// Largest side accepted by [`enumerate_corresponding_sequences`].
pub const SEQUENCE_LIMIT: usize = 5;
/// Largest side accepted by [`enumerate_zigzags`].
pub const ZIGZAG_LIMIT: usize = 8;

/// Which subsets [`brute_force_min_with`] looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    /// Cardinality at most `max(3, 2*min(m,n) - 2)`.
    Cardinality,
    /// Every subset.
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// Cheapest landmark set; ties go to the smaller, then lexicographically smaller set.
    pub best: Vec<Vertex>,
    pub cost: Cost,
    /// Number of landmark sets within the bound whose cost equals `cost`.
    pub optimal_count: u64,
    /// Largest cardinality enumerated.
    pub cap: usize,
}

/// The cardinality bound used by [`brute_force_min`].
pub fn cardinality_cap(m: usize, n: usize) -> usize {
    (2 * m.min(n) - 2).max(3).min(m * n)
}

pub fn brute_force_min(g: &Grid) -> Result<OracleResult> {
    brute_force_min_with(g, Bound::Cardinality)
}

pub fn brute_force_min_with(g: &Grid, bound: Bound) -> Result<OracleResult> {
    let (m, n) = (g.m(), g.n());
    let (limit, cap) = match bound {
        Bound::Cardinality => (BRUTE_LIMIT, cardinality_cap(m, n)),
        Bound::Exhaustive => (EXHAUSTIVE_LIMIT, m * n),
    };
    if m * n > limit {
        return Err(refused(m, n, format!("brute force needs m*n <= {limit}")));
    }
    if !packed_fits(m, n, cap) {
        return Err(refused(
            m,
            n,
            "distance vectors do not fit the packed check".into(),
        ));
    }
    let weights = scaled_costs(g)?;
    let mut s = Search::new(m, n, cap, weights);
    s.dfs(0, 0);
    let (_, best) = s.best.expect("adjacent corners always resolve the grid");
    let best: Vec<Vertex> = best.iter().map(|&i| at(n, i)).collect();
    Ok(OracleResult {
        cost: g.set_cost(&best),
        best,
        optimal_count: s.count,
        cap,
    })
}

/// Every minimal landmark set of cardinality at most `max_card`, by cardinality
/// and then lexicographically.
pub fn enumerate_minimal_sets(m: usize, n: usize, max_card: usize) -> Result<Vec<Vec<Vertex>>> {
    check_dims(m, n)?;
    if m * n > MINIMAL_LIMIT {
        return Err(refused(
            m,
            n,
            format!("minimal set enumeration needs m*n <= {MINIMAL_LIMIT}"),
        ));
    }
    let mut buf = Vec::new();
    let mut landmark = |idx: &[usize]| -> Result<bool> {
        if packed_fits(m, n, idx.len()) {
            Ok(is_landmark_indices(m, n, idx, &mut buf))
        } else {
            let vs: Vec<Vertex> = idx.iter().map(|&i| at(n, i)).collect();
            is_landmark_set(m, n, &vs)
        }
    };
    let mut out = Vec::new();
    let mut rest = Vec::new();
    for k in 1..=max_card.min(m * n) {
        for set in (0..m * n).combinations(k) {
            if !landmark(&set)? {
                continue;
            }
            let mut minimal = true;
            for skip in 0..k {
                rest.clear();
                rest.extend(
                    set.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != skip)
                        .map(|(_, &i)| i),
                );
                if !rest.is_empty() && landmark(&rest)? {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                out.push(set.iter().map(|&i| at(n, i)).collect());
            }
        }
    }
    Ok(out)
}

/// Every zigzag sequence of an `m x n` grid, by length, then columns, then rows.
pub fn enumerate_zigzags(m: usize, n: usize) -> Result<Vec<ZigzagSequence>> {
    check_dims(m, n)?;
    if m.max(n) > ZIGZAG_LIMIT {
        return Err(refused(
            m,
            n,
            format!("zigzag enumeration needs m, n <= {ZIGZAG_LIMIT}"),
        ));
    }
    let mut out = Vec::new();
    // k columns d_1 < d_3 < ... and k-1 turning rows strictly between 1 and m.
    for k in 2..=n.min(m - 1) {
        for cols in (1..=n).combinations(k) {
            for rows in (2..m).combinations(k - 1) {
                let mut q = vec![Vertex::new(1, cols[0])];
                for j in 0..k - 1 {
                    q.push(Vertex::new(rows[j], cols[j]));
                    q.push(Vertex::new(rows[j], cols[j + 1]));
                }
                q.push(Vertex::new(m, cols[k - 1]));
                out.push(ZigzagSequence(q));
            }
        }
    }
    Ok(out)
}

/// Every zigzag sequence together with every sequence corresponding to it.
pub fn enumerate_corresponding_sequences(m: usize, n: usize) -> Result<Vec<CorrespondingSequence>> {
    check_dims(m, n)?;
    if m.max(n) > SEQUENCE_LIMIT {
        return Err(refused(
            m,
            n,
            format!("sequence enumeration needs m, n <= {SEQUENCE_LIMIT}"),
        ));
    }
    let mut out = Vec::new();
    for zigzag in enumerate_zigzags(m, n)? {
        let choices: Vec<Vec<Vertex>> = (0..zigzag.len()).map(|i| choices(&zigzag, i)).collect();
        for vertices in choices.iter().multi_cartesian_product() {
            let vertices: Vec<Vertex> = vertices.into_iter().copied().collect();
            if vertices.iter().all_unique() {
                out.push(CorrespondingSequence {
                    vertices,
                    zigzag: zigzag.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// The cheapest sequence corresponding to `zigzag`, each position chosen
/// independently (smallest index on ties).
pub fn perfect_sequence(g: &Grid, zigzag: &ZigzagSequence) -> Result<CorrespondingSequence> {
    zigzag.validate(g.m(), g.n())?;
    let vertices = (0..zigzag.len())
        .map(|i| {
            choices(zigzag, i)
                .into_iter()
                .min_by(|a, b| g.cost(*a).cmp(g.cost(*b)))
                .expect("every position has a choice")
        })
        .collect();
    let seq = CorrespondingSequence {
        vertices,
        zigzag: zigzag.clone(),
    };
    seq.validate(g.m(), g.n())?;
    Ok(seq)
}

/// Minimum over all zigzag sequences of the grid (as given, no reorientation)
/// of the cost of their perfect sequence.
pub fn best_perfect_sequence(g: &Grid) -> Result<Option<(Cost, CorrespondingSequence)>> {
    let mut best: Option<(Cost, CorrespondingSequence)> = None;
    for z in enumerate_zigzags(g.m(), g.n())? {
        let seq = perfect_sequence(g, &z)?;
        let cost = g.set_cost(&seq.vertices);
        if best.as_ref().is_none_or(|(b, _)| cost < *b) {
            best = Some((cost, seq));
        }
    }
    Ok(best)
}

// Admissible vertices for position `i` (0-based) of a sequence corresponding to `zigzag`.
fn choices(zigzag: &ZigzagSequence, i: usize) -> Vec<Vertex> {
    let q = &zigzag.0;
    let last = q.len() - 1;
    if i == 0 {
        vec![q[0]]
    } else if i == last {
        (q[0].col + 1..=q[i].col)
            .map(|c| Vertex::new(q[i].row, c))
            .collect()
    } else if i % 2 == 1 {
        (1..=q[i].col).map(|c| Vertex::new(q[i].row, c)).collect()
    } else {
        (1..=q[i].row).map(|r| Vertex::new(r, q[i].col)).collect()
    }
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m < 2 || n < 2 {
        return Err(Error::UnsupportedGrid { m, n });
    }
    Ok(())
}

fn refused(m: usize, n: usize, limit: String) -> Error {
    Error::OracleRefused { m, n, limit }
}

fn at(n: usize, i: usize) -> Vertex {
    Vertex::new(i / n + 1, i % n + 1)
}

// Costs over a common denominator as plain integers.
fn scaled_costs(g: &Grid) -> Result<Vec<u128>> {
    let costs = g.costs().as_slice();
    let lcm = costs
        .iter()
        .fold(BigUint::one(), |acc, c| acc.lcm(&c.denom()));
    let ceiling = u128::MAX / (costs.len() as u128 + 1);
    costs
        .iter()
        .map(|c| {
            let w = (c.numer() * (&lcm / c.denom()))
                .to_u128()
                .ok_or(Error::CostRange)?;
            if w > ceiling {
                return Err(Error::CostRange);
            }
            Ok(w)
        })
        .collect()
}

struct Search {
    m: usize,
    n: usize,
    cap: usize,
    bits: u32,
    weights: Vec<u128>,
    // keys[d][v]: packed distances from vertex v to the first d chosen vertices.
    keys: Vec<Vec<u64>>,
    scratch: Vec<u64>,
    chosen: Vec<usize>,
    best: Option<(u128, Vec<usize>)>,
    count: u64,
}

impl Search {
    fn new(m: usize, n: usize, cap: usize, weights: Vec<u128>) -> Self {
        let max = (m + n - 2) as u64;
        Search {
            m,
            n,
            cap,
            bits: (u64::BITS - max.leading_zeros()).max(1),
            weights,
            keys: vec![vec![0; m * n]; cap + 1],
            scratch: Vec::with_capacity(m * n),
            chosen: Vec::with_capacity(cap),
            best: None,
            count: 0,
        }
    }

    fn dfs(&mut self, start: usize, cost: u128) {
        let depth = self.chosen.len();
        for i in start..self.m * self.n {
            let c = cost + self.weights[i];
            if matches!(&self.best, Some((b, _)) if c > *b) {
                continue;
            }
            self.chosen.push(i);
            self.extend_keys(depth, i);
            if depth >= 1 && self.resolving(depth + 1) {
                self.record(c);
            }
            if depth + 1 < self.cap {
                self.dfs(i + 1, c);
            }
            self.chosen.pop();
        }
    }

    fn extend_keys(&mut self, depth: usize, landmark: usize) {
        let (lr, lc) = (landmark / self.n, landmark % self.n);
        let (head, tail) = self.keys.split_at_mut(depth + 1);
        let (prev, next) = (&head[depth], &mut tail[0]);
        for (v, (p, k)) in prev.iter().zip(next.iter_mut()).enumerate() {
            let d = (v / self.n).abs_diff(lr) + (v % self.n).abs_diff(lc);
            *k = (p << self.bits) | d as u64;
        }
    }

    fn resolving(&mut self, depth: usize) -> bool {
        self.scratch.clear();
        self.scratch.extend_from_slice(&self.keys[depth]);
        self.scratch.sort_unstable();
        self.scratch.windows(2).all(|w| w[0] != w[1])
    }

    fn record(&mut self, cost: u128) {
        match &mut self.best {
            Some((b, set)) if cost == *b => {
                self.count += 1;
                if (self.chosen.len(), &self.chosen) < (set.len(), &*set) {
                    set.clone_from(&self.chosen);
                }
            }
            Some((b, _)) if cost > *b => {}
            _ => {
                self.best = Some((cost, self.chosen.clone()));
                self.count = 1;
            }
        }
    }
}
