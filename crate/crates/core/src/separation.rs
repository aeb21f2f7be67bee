//! Separation and landmark-set checks. This is the ground truth every other
//! module is tested against, so it only uses the closed-form ℓ1 distance.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::grid::{distance, vertices, Vertex};

/// Distances from one vertex to each landmark, landmarks in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResolvingVector(pub Vec<usize>);

#[inline]
pub fn separates(x: Vertex, u: Vertex, v: Vertex) -> bool {
    distance(x, u) != distance(x, v)
}

pub fn resolving_vector(v: Vertex, landmarks: &[Vertex]) -> ResolvingVector {
    let mut sorted = landmarks.to_vec();
    sorted.sort();
    sorted.dedup();
    ResolvingVector(sorted.iter().map(|&l| distance(v, l)).collect())
}

fn canonical(m: usize, n: usize, landmarks: &[Vertex]) -> Result<Vec<Vertex>> {
    if landmarks.is_empty() {
        return Err(Error::Contract("landmark set must be nonempty".into()));
    }
    for &v in landmarks {
        if !(1..=m).contains(&v.row) || !(1..=n).contains(&v.col) {
            return Err(Error::VertexOutOfRange {
                row: v.row,
                col: v.col,
                m,
                n,
            });
        }
    }
    let mut sorted = landmarks.to_vec();
    sorted.sort();
    sorted.dedup();
    Ok(sorted)
}

/// Resolving-vector keys for every vertex in row-major order. Vectors are
/// packed into one `u64` when they fit, else kept as slices of a flat buffer.
enum Keys {
    Packed(Vec<u64>),
    Flat { width: usize, data: Vec<u32> },
}

fn keys(m: usize, n: usize, landmarks: &[Vertex]) -> Keys {
    let max = (m + n - 2) as u64;
    let bits = (u64::BITS - max.leading_zeros()).max(1) as usize;
    if bits * landmarks.len() <= 64 {
        Keys::Packed(
            vertices(m, n)
                .map(|v| {
                    landmarks
                        .iter()
                        .fold(0u64, |acc, &l| (acc << bits) | distance(v, l) as u64)
                })
                .collect(),
        )
    } else {
        let width = landmarks.len();
        let mut data = Vec::with_capacity(m * n * width);
        for v in vertices(m, n) {
            data.extend(landmarks.iter().map(|&l| distance(v, l) as u32));
        }
        Keys::Flat { width, data }
    }
}

fn first_collision(keys: &Keys) -> Option<(usize, usize)> {
    match keys {
        Keys::Packed(k) => {
            let mut seen = HashMap::with_capacity(k.len());
            for (i, key) in k.iter().enumerate() {
                if let Some(first) = seen.insert(*key, i) {
                    return Some((first, i));
                }
            }
            None
        }
        Keys::Flat { width, data } => {
            let mut seen: HashMap<&[u32], usize> = HashMap::with_capacity(data.len() / width);
            for (i, key) in data.chunks(*width).enumerate() {
                if let Some(&first) = seen.get(key) {
                    return Some((first, i));
                }
                seen.insert(key, i);
            }
            None
        }
    }
}

/// True iff every pair of distinct vertices is separated by some landmark.
pub fn is_landmark_set(m: usize, n: usize, landmarks: &[Vertex]) -> Result<bool> {
    let l = canonical(m, n, landmarks)?;
    Ok(match keys(m, n, &l) {
        Keys::Packed(mut k) => {
            k.sort_unstable();
            k.windows(2).all(|w| w[0] != w[1])
        }
        flat => first_collision(&flat).is_none(),
    })
}

/// A landmark set none of whose one-smaller subsets is a landmark set.
pub fn is_minimal_landmark_set(m: usize, n: usize, landmarks: &[Vertex]) -> Result<bool> {
    let l = canonical(m, n, landmarks)?;
    if !is_landmark_set(m, n, &l)? {
        return Ok(false);
    }
    if l.len() == 1 {
        return Ok(true);
    }
    for skip in 0..l.len() {
        let rest: Vec<Vertex> = l
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &v)| v)
            .collect();
        if is_landmark_set(m, n, &rest)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The first pair `(u, v)` with equal resolving vectors, scanning `v` in row-major
/// order and pairing it with the earliest `u` that collides. `None` for landmark sets.
pub fn find_unseparated_pair(
    m: usize,
    n: usize,
    landmarks: &[Vertex],
) -> Result<Option<(Vertex, Vertex)>> {
    let l = canonical(m, n, landmarks)?;
    let at = |i: usize| Vertex::new(i / n + 1, i % n + 1);
    Ok(first_collision(&keys(m, n, &l)).map(|(a, b)| (at(a), at(b))))
}

/// Landmark check on vertex indices (row-major, 0-based) reusing `buf`.
/// Only valid when the packed encoding fits; callers guard on grid size.
pub(crate) fn is_landmark_indices(m: usize, n: usize, idx: &[usize], buf: &mut Vec<u64>) -> bool {
    let max = (m + n - 2) as u64;
    let bits = (u64::BITS - max.leading_zeros()).max(1) as usize;
    debug_assert!(bits * idx.len() <= 64);
    buf.clear();
    for row in 0..m {
        for col in 0..n {
            let mut key = 0u64;
            for &i in idx {
                let d = row.abs_diff(i / n) + col.abs_diff(i % n);
                key = (key << bits) | d as u64;
            }
            buf.push(key);
        }
    }
    buf.sort_unstable();
    buf.windows(2).all(|w| w[0] != w[1])
}

pub(crate) fn packed_fits(m: usize, n: usize, k: usize) -> bool {
    let max = (m + n - 2) as u64;
    let bits = (u64::BITS - max.leading_zeros()).max(1) as usize;
    bits * k <= 64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::vertices;
    use proptest::prelude::*;

    fn v(r: usize, c: usize) -> Vertex {
        Vertex::new(r, c)
    }

    #[test]
    fn separates_examples() {
        assert!(!separates(v(1, 1), v(1, 2), v(2, 1)));
        assert!(separates(v(1, 1), v(1, 2), v(1, 3)));
        assert!(separates(v(2, 2), v(2, 2), v(3, 1)));
    }

    #[test]
    fn landmark_examples() {
        assert!(is_landmark_set(5, 7, &[v(1, 1), v(1, 7)]).unwrap());
        assert!(!is_landmark_set(5, 7, &[v(1, 3), v(5, 3)]).unwrap());
        let all: Vec<Vertex> = vertices(4, 6).collect();
        assert!(is_landmark_set(4, 6, &all).unwrap());
        assert!(matches!(
            is_landmark_set(3, 3, &[]),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            is_landmark_set(3, 3, &[v(4, 1)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn minimality_examples() {
        assert!(is_minimal_landmark_set(5, 7, &[v(1, 1), v(1, 7)]).unwrap());
        assert!(!is_minimal_landmark_set(5, 7, &[v(1, 1), v(1, 7), v(3, 3)]).unwrap());
        assert!(!is_minimal_landmark_set(5, 7, &[v(1, 1), v(5, 7)]).unwrap());
    }

    // Independent scan over all ordered pairs, ordered by the later vertex first.
    fn brute_pair(m: usize, n: usize, l: &[Vertex]) -> Option<(Vertex, Vertex)> {
        let all: Vec<Vertex> = vertices(m, n).collect();
        for (j, &b) in all.iter().enumerate() {
            for &a in &all[..j] {
                if l.iter().all(|&x| !separates(x, a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    #[test]
    fn unseparated_pair_examples() {
        assert_eq!(
            find_unseparated_pair(5, 7, &[v(1, 3), v(5, 3)]).unwrap(),
            Some((v(1, 2), v(1, 4)))
        );
        assert_eq!(
            find_unseparated_pair(5, 7, &[v(1, 1), v(1, 7)]).unwrap(),
            None
        );
        // (1,1) and (1,3) are both at distance 2 from the centre and come first in scan order.
        assert_eq!(
            find_unseparated_pair(3, 3, &[v(2, 2)]).unwrap(),
            Some((v(1, 1), v(1, 3)))
        );
        assert_eq!(brute_pair(3, 3, &[v(2, 2)]), Some((v(1, 1), v(1, 3))));
        assert_eq!(
            brute_pair(5, 7, &[v(1, 3), v(5, 3)]),
            Some((v(1, 2), v(1, 4)))
        );
    }

    #[test]
    fn wide_vectors_use_the_flat_path() {
        // 40 landmarks on a 30x30 grid do not fit one packed word.
        let l: Vec<Vertex> = (1..=30)
            .map(|c| v(1, c))
            .chain((2..=11).map(|r| v(r, 1)))
            .collect();
        assert!(!packed_fits(30, 30, l.len()));
        assert!(is_landmark_set(30, 30, &l).unwrap());
        let bad: Vec<Vertex> = (2..=29).map(|c| v(1, c)).collect();
        assert_eq!(
            find_unseparated_pair(30, 30, &bad).unwrap(),
            brute_pair(30, 30, &bad)
        );
    }

    proptest! {
        #[test]
        fn checker_agrees_with_pair_scan(m in 2usize..6, n in 2usize..6, picks in proptest::collection::vec((1usize..6, 1usize..6), 1..5)) {
            let l: Vec<Vertex> = picks.into_iter().map(|(r, c)| v((r - 1) % m + 1, (c - 1) % n + 1)).collect();
            let pair = find_unseparated_pair(m, n, &l).unwrap();
            prop_assert_eq!(pair, brute_pair(m, n, &l));
            prop_assert_eq!(is_landmark_set(m, n, &l).unwrap(), pair.is_none());
            let mut idx: Vec<usize> = l.iter().map(|x| (x.row - 1) * n + x.col - 1).collect();
            idx.sort();
            idx.dedup();
            let mut buf = Vec::new();
            prop_assert_eq!(is_landmark_indices(m, n, &idx, &mut buf), pair.is_none());
        }
    }
}
