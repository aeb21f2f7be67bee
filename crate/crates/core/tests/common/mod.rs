#![allow(dead_code)]

use gridmark::separation::is_landmark_set;
use gridmark::{Cost, Grid, Orientation, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn v(r: usize, c: usize) -> Vertex {
    Vertex::new(r, c)
}

pub fn random_grid(rng: &mut impl Rng, m: usize, n: usize, max: u64) -> Grid {
    Grid::from_fn(m, n, |_| Cost::from_integer(rng.gen_range(0..=max))).unwrap()
}

pub fn acceptance_4x4() -> Grid {
    Grid::from_integers(&[
        vec![100, 1, 100, 100],
        vec![1, 1, 1, 100],
        vec![100, 1, 1, 100],
        vec![100, 100, 1, 100],
    ])
    .unwrap()
}

/// All shapes with both sides in `2..=max_side`.
pub fn shapes(max_side: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 2..=max_side {
        for n in 2..=max_side {
            out.push((m, n));
        }
    }
    out
}

/// Every vertex subset of an `m x n` grid as a vertex list.
pub fn all_subsets(m: usize, n: usize) -> impl Iterator<Item = Vec<Vertex>> {
    let mn = m * n;
    (1u64..1 << mn).map(move |mask| {
        (0..mn)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| v(i / n + 1, i % n + 1))
            .collect()
    })
}

/// A random landmark set and a minimal landmark set inside it.
pub fn random_landmark_and_minimal(
    rng: &mut impl Rng,
    m: usize,
    n: usize,
) -> (Vec<Vertex>, Vec<Vertex>) {
    let all: Vec<Vertex> = gridmark::grid::vertices(m, n).collect();
    let k = rng.gen_range(1..=4.min(all.len()));
    let mut set: Vec<Vertex> = all.choose_multiple(rng, k).copied().collect();
    while !is_landmark_set(m, n, &set).unwrap() {
        let x = *all.choose(rng).unwrap();
        if !set.contains(&x) {
            set.push(x);
        }
    }
    let landmark = set.clone();
    let mut order = set.clone();
    order.shuffle(rng);
    for x in order {
        let rest: Vec<Vertex> = set.iter().copied().filter(|&y| y != x).collect();
        if !rest.is_empty() && is_landmark_set(m, n, &rest).unwrap() {
            set = rest;
        }
    }
    set.sort();
    (landmark, set)
}

/// The four double sides: two adjacent sides without their common corner.
pub fn double_sides(m: usize, n: usize) -> [Box<dyn Fn(Vertex) -> bool>; 4] {
    let corner = move |v: Vertex, r: usize, c: usize| v.row == r && v.col == c;
    [
        Box::new(move |v| (v.row == 1 || v.col == 1) && !corner(v, 1, 1)),
        Box::new(move |v| (v.row == 1 || v.col == n) && !corner(v, 1, n)),
        Box::new(move |v| (v.row == m || v.col == 1) && !corner(v, m, 1)),
        Box::new(move |v| (v.row == m || v.col == n) && !corner(v, m, n)),
    ]
}

pub fn has_every_double_side(m: usize, n: usize, set: &[Vertex]) -> bool {
    double_sides(m, n)
        .iter()
        .all(|side| set.iter().any(|&v| side(v)))
}

pub fn has_opposite_corners(m: usize, n: usize, set: &[Vertex]) -> bool {
    let has = |r, c| set.contains(&v(r, c));
    (has(1, 1) && has(m, n)) || (has(1, n) && has(m, 1))
}

pub fn has_opposite_sides(m: usize, n: usize, set: &[Vertex]) -> bool {
    let any = |p: &dyn Fn(&Vertex) -> bool| set.iter().any(p);
    (any(&|x| x.row == 1) && any(&|x| x.row == m)) || (any(&|x| x.col == 1) && any(&|x| x.col == n))
}

pub fn three_in_a_line(set: &[Vertex]) -> bool {
    set.iter().any(|a| {
        set.iter().filter(|b| b.row == a.row).count() >= 3
            || set.iter().filter(|b| b.col == a.col).count() >= 3
    })
}

/// Whether a three-vertex set has one of the three listed shapes, taken in the
/// given orientation of an `m x n` grid.
pub fn card3_form(m: usize, n: usize, set: &[Vertex]) -> bool {
    assert_eq!(set.len(), 3);
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let (top, bottom, x) = (set[i], set[j], set[3 - i - j]);
            if top.row != 1 || bottom.row != m {
                continue;
            }
            let (z, z2) = (top.col, bottom.col);
            if z == z2 && 1 < z && z < n && x.col != z {
                return true;
            }
            if z < z2 && x.row == 1 && z2 < x.col && (1 < z || x.col < n) {
                return true;
            }
            if z < z2 && x.row == m && x.col < z && (x.col > 1 || z2 < n) {
                return true;
            }
        }
    }
    false
}

/// `card3_form` up to the eight rotations and mirrorings.
pub fn card3_form_any_orientation(m: usize, n: usize, set: &[Vertex]) -> bool {
    Orientation::ALL.iter().any(|&o| {
        let (mm, nn) = o.dims(m, n);
        let t: Vec<Vertex> = set
            .iter()
            .map(|&x| gridmark::grid::transform_vertex(x, o, m, n))
            .collect();
        card3_form(mm, nn, &t)
    })
}
