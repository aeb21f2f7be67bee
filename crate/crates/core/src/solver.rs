//! Minimum-cost landmark set of a grid: the cheapest of the cardinality-2
//! and cardinality-3 generators and of the zigzag program run in all eight
//! orientations.

use serde::{Deserialize, Serialize};

use crate::candidate::{keep_best, Candidate, Category, Provenance, ZigzagWitness};
use crate::cost::Cost;
use crate::error::Result;
use crate::grid::{inverse_transform, Grid, Orientation, Vertex};
use crate::minima::MinimaTables;
use crate::small_card::{card2_best, card3_aligned_best, card3_flanked_best};
use crate::weight::{Encoded, Weight, WeightGrid};
use crate::zigzag::best_in_orientation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LandmarkSolution {
    pub m: usize,
    pub n: usize,
    /// Sorted lexicographically, original coordinates.
    pub vertices: Vec<Vertex>,
    pub cost: Cost,
    pub cardinality: usize,
    pub category: Category,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ZigzagWitness>,
}

impl LandmarkSolution {
    fn from_candidate(m: usize, n: usize, c: Candidate) -> Self {
        LandmarkSolution {
            m,
            n,
            cardinality: c.vertices.len(),
            vertices: c.vertices,
            cost: c.cost,
            category: c.category,
            provenance: c.provenance,
            witness: c.witness,
        }
    }
}

/// Best candidate of every category next to the overall winner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub card2: Candidate,
    pub card3_aligned: Option<Candidate>,
    pub card3_flanked: Option<Candidate>,
    pub zigzag: Option<Candidate>,
    pub winner: LandmarkSolution,
}

impl SolveReport {
    pub fn best(&self, category: Category) -> Option<&Candidate> {
        match category {
            Category::Card2 => Some(&self.card2),
            Category::Card3Aligned => self.card3_aligned.as_ref(),
            Category::Card3Flanked => self.card3_flanked.as_ref(),
            Category::Zigzag => self.zigzag.as_ref(),
        }
    }
}

/// A minimum-cost landmark set of `g`. Ties are broken by cardinality, then by
/// the sorted vertex list.
pub fn solve(g: &Grid) -> Result<LandmarkSolution> {
    solve_with_report(g).map(|r| r.winner)
}

pub fn solve_with_report(g: &Grid) -> Result<SolveReport> {
    Ok(match Encoded::of(g)? {
        Encoded::Narrow(w) => report_with(g, &w),
        Encoded::Wide(w) => report_with(g, &w),
    })
}

/// Best zigzag candidate over all eight orientations, in original coordinates.
pub fn best_zigzag<W: Weight>(g: &Grid, weights: &WeightGrid<W>) -> Option<Candidate> {
    let (m, n) = (g.m(), g.n());
    let mut best = None;
    for o in Orientation::ALL {
        let tables = if o == Orientation::IDENTITY {
            MinimaTables::build(weights)
        } else {
            MinimaTables::build(&weights.transform(o))
        };
        let Some(found) = best_in_orientation(&tables) else {
            continue;
        };
        let back = |vs: &[Vertex]| -> Vec<Vertex> {
            vs.iter().map(|&v| inverse_transform(v, o, m, n)).collect()
        };
        let corresponding = back(&found.sequence.vertices);
        let mut c = Candidate::new(g, corresponding.clone(), Category::Zigzag);
        c.provenance = Some(Provenance {
            orientation: o,
            start_col: found.start_col,
        });
        c.witness = Some(ZigzagWitness {
            zigzag: back(&found.sequence.zigzag.0),
            corresponding,
        });
        keep_best(&mut best, c);
    }
    best
}

fn report_with<W: Weight>(g: &Grid, weights: &WeightGrid<W>) -> SolveReport {
    let tables = MinimaTables::build(weights);
    let card2 = card2_best(g);
    let card3_aligned = card3_aligned_best(g, &tables);
    let card3_flanked = card3_flanked_best(g, &tables);
    drop(tables);
    let zigzag = best_zigzag(g, weights);

    let mut best = None;
    for c in [
        Some(&card2),
        card3_aligned.as_ref(),
        card3_flanked.as_ref(),
        zigzag.as_ref(),
    ]
    .into_iter()
    .flatten()
    {
        keep_best(&mut best, c.clone());
    }
    let winner = LandmarkSolution::from_candidate(g.m(), g.n(), best.expect("card2 always exists"));
    SolveReport {
        card2,
        card3_aligned,
        card3_flanked,
        zigzag,
        winner,
    }
}
