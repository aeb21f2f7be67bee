//! Integer working representation of exact costs.
//!
//! All costs of a grid are scaled by the least common multiple of their
//! denominators, which turns them into non-negative integers without changing
//! their order or their sums. Each scaled cost `w` is then stored packed as
//! `(w << SHIFT) | 1`, so a sum of `k` packed values is `(Σw << SHIFT) | k`.
//! Comparing packed sums compares by cost first and by cardinality second.
//!
//! Unreachable DP states are represented by any value at or above
//! [`Weight::UNREACHABLE`]. Encoding refuses grids whose values could make a
//! reachable sum cross that threshold or make an unreachable one overflow.

use std::fmt::Debug;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::grid::{Grid, Matrix};

pub trait Weight: Copy + Ord + Send + Sync + Debug + 'static {
    /// Bits reserved for the cardinality counter.
    const SHIFT: u32;
    const ZERO: Self;
    /// Threshold at and above which a value means "unreachable".
    const UNREACHABLE: Self;
    /// Exclusive bound for finite sums.
    const FINITE_LIMIT: Self;

    fn plus(self, other: Self) -> Self;
    fn count(self) -> usize;
    fn scaled_cost(self) -> BigUint;
    fn pack(scaled: &BigUint) -> Option<Self>;
    fn checked_mul_small(self, k: u64) -> Option<Self>;

    #[inline]
    fn is_reachable(self) -> bool {
        self < Self::UNREACHABLE
    }

    /// Collapses every unreachable value onto the canonical one.
    #[inline]
    fn normalized(self) -> Self {
        if self.is_reachable() {
            self
        } else {
            Self::UNREACHABLE
        }
    }
}

macro_rules! packed_weight {
    ($t:ty, $shift:expr) => {
        impl Weight for $t {
            const SHIFT: u32 = $shift;
            const ZERO: Self = 0;
            const UNREACHABLE: Self = 1 << (<$t>::BITS - 2);
            const FINITE_LIMIT: Self = 1 << (<$t>::BITS - 3);

            #[inline(always)]
            fn plus(self, other: Self) -> Self {
                self.wrapping_add(other)
            }

            fn count(self) -> usize {
                (self & ((1 << $shift) - 1)) as usize
            }

            fn scaled_cost(self) -> BigUint {
                BigUint::from(self >> $shift)
            }

            fn pack(scaled: &BigUint) -> Option<Self> {
                let w: $t = scaled.try_into().ok()?;
                w.checked_shl($shift)
                    .filter(|p| p >> $shift == w)
                    .map(|p| p | 1)
            }

            fn checked_mul_small(self, k: u64) -> Option<Self> {
                self.checked_mul(k as $t)
            }
        }
    };
}

packed_weight!(u64, 20);
packed_weight!(u128, 32);

/// Either reachable with a value, or the absorbing unreachable element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Reach<T> {
    Finite(T),
    Unreachable,
}

impl<T> Reach<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            Reach::Finite(t) => Some(t),
            Reach::Unreachable => None,
        }
    }

    pub fn is_reachable(&self) -> bool {
        matches!(self, Reach::Finite(_))
    }
}

impl<W: Weight> From<W> for Reach<W> {
    fn from(w: W) -> Self {
        if w.is_reachable() {
            Reach::Finite(w)
        } else {
            Reach::Unreachable
        }
    }
}

/// Costs of a grid scaled by a common denominator and packed as `W`.
#[derive(Clone, Debug)]
pub struct WeightGrid<W> {
    weights: Matrix<W>,
    denominator: BigUint,
}

impl<W: Weight> WeightGrid<W> {
    /// Encodes `grid`, or fails with [`Error::CostRange`] when `W` is too narrow.
    pub fn encode(grid: &Grid) -> Result<Self> {
        let costs = grid.costs();
        let mut denominator = BigUint::one();
        for c in costs.as_slice() {
            let d = c.as_rational().denom().magnitude();
            if !d.is_one() && !denominator.is_multiple_of(d) {
                denominator = denominator.lcm(d);
            }
        }

        // Any DP value is one start value plus at most two additions per row.
        let steps = 2 * grid.m().max(grid.n()) as u64 + 8;
        if steps >= 1 << W::SHIFT {
            return Err(Error::CostRange);
        }
        let mut max = W::ZERO;
        let mut weights = Vec::with_capacity(costs.as_slice().len());
        for c in costs.as_slice() {
            let (numer, d) = (
                c.as_rational().numer().magnitude(),
                c.as_rational().denom().magnitude(),
            );
            let w = if *d == denominator {
                W::pack(numer)
            } else {
                W::pack(&(numer * (&denominator / d)))
            }
            .ok_or(Error::CostRange)?;
            max = max.max(w);
            weights.push(w);
        }
        match max.checked_mul_small(steps) {
            Some(bound) if bound < W::FINITE_LIMIT => {}
            _ => return Err(Error::CostRange),
        }
        let weights = Matrix::from_vec(grid.m(), grid.n(), weights);
        Ok(WeightGrid {
            weights,
            denominator,
        })
    }

    pub fn from_parts(weights: Matrix<W>, denominator: BigUint) -> Self {
        WeightGrid {
            weights,
            denominator,
        }
    }

    pub fn weights(&self) -> &Matrix<W> {
        &self.weights
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    pub fn m(&self) -> usize {
        self.weights.rows()
    }

    pub fn n(&self) -> usize {
        self.weights.cols()
    }

    pub fn transform(&self, o: crate::grid::Orientation) -> Self {
        WeightGrid {
            weights: self.weights.transform(o),
            denominator: self.denominator.clone(),
        }
    }
}

/// A grid encoded in the narrowest integer type that holds it.
#[derive(Clone, Debug)]
pub enum Encoded {
    Narrow(WeightGrid<u64>),
    Wide(WeightGrid<u128>),
}

impl Encoded {
    pub fn of(grid: &Grid) -> Result<Self> {
        match WeightGrid::<u64>::encode(grid) {
            Ok(w) => Ok(Encoded::Narrow(w)),
            Err(Error::CostRange) => WeightGrid::<u128>::encode(grid).map(Encoded::Wide),
            Err(e) => Err(e),
        }
    }
}
