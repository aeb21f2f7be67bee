use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cost::Cost;
use crate::grid::{Grid, Orientation, Vertex};

/// Which generator produced a landmark set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Category {
    /// Two adjacent corners.
    Card2,
    /// `{(1,z),(m,z),x}` with `x` off column `z`, or its transpose.
    Card3Aligned,
    /// One side vertex flanked by two vertices of the opposite side.
    Card3Flanked,
    /// A sequence corresponding to a zigzag sequence.
    Zigzag,
}

impl Category {
    pub const ALL: [Category; 4] = [
        Category::Card2,
        Category::Card3Aligned,
        Category::Card3Flanked,
        Category::Zigzag,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Category::Card2 => "card2",
            Category::Card3Aligned => "card3-aligned",
            Category::Card3Flanked => "card3-flanked",
            Category::Zigzag => "zigzag",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a zigzag solution came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub orientation: Orientation,
    /// Start column in the transformed grid.
    pub start_col: usize,
}

/// A zigzag sequence and its corresponding sequence, in original coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZigzagWitness {
    pub zigzag: Vec<Vertex>,
    pub corresponding: Vec<Vertex>,
}

/// A landmark set offered by one generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    /// Sorted lexicographically.
    pub vertices: Vec<Vertex>,
    pub cost: Cost,
    pub category: Category,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ZigzagWitness>,
}

impl Candidate {
    pub fn new(grid: &Grid, mut vertices: Vec<Vertex>, category: Category) -> Self {
        vertices.sort();
        vertices.dedup();
        let cost = grid.set_cost(&vertices);
        Candidate {
            vertices,
            cost,
            category,
            provenance: None,
            witness: None,
        }
    }

    pub fn cardinality(&self) -> usize {
        self.vertices.len()
    }

    /// Tie-break order: cost, then cardinality, then the sorted vertex list.
    pub fn rank(&self, other: &Candidate) -> Ordering {
        self.cost
            .cmp(&other.cost)
            .then(self.vertices.len().cmp(&other.vertices.len()))
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

/// Keeps the better of two optional candidates; the incumbent wins exact ties.
pub(crate) fn keep_best(best: &mut Option<Candidate>, next: Candidate) {
    match best {
        Some(b) if b.rank(&next) != Ordering::Greater => {}
        _ => *best = Some(next),
    }
}
