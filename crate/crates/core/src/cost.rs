//! Exact edge and path costs.
//!
//! A cost has three components compared lexicographically:
//! `tier` counts artificial (triangulation / dummy) edges on a path, `primary`
//! is the scaled integer input length, and `tie` is a deterministic
//! perturbation component that makes shortest paths unique in every subgraph.
//! All components add componentwise along a path, so the order is compatible
//! with path concatenation. A distance with `tier > 0` uses at least one
//! artificial edge and is reported as infinite at the API boundary.

use std::fmt;
use std::ops::{Add, AddAssign};

/// Largest admissible input edge weight. Keeps `primary` path sums well below
/// u64 overflow even through a full tier of artificial `n * max` edges.
pub const MAX_INPUT_WEIGHT: u64 = 1 << 30;

/// Largest vertex count for which the tie encoding is certified not to
/// overflow on simple paths (documented bound for `CapacityExceeded`).
pub const MAX_TIE_VERTICES: u64 = 1 << 38;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Cost {
    pub tier: u64,
    pub primary: u64,
    pub tie: u64,
}

impl Cost {
    pub const ZERO: Cost = Cost { tier: 0, primary: 0, tie: 0 };

    pub fn new(tier: u64, primary: u64, tie: u64) -> Self {
        Cost { tier, primary, tie }
    }

    pub fn finite(primary: u64, tie: u64) -> Self {
        Cost { tier: 0, primary, tie }
    }

    /// True when the cost involves no artificial edge.
    pub fn is_finite(&self) -> bool {
        self.tier == 0
    }

    pub fn checked_add(&self, rhs: &Cost) -> Option<Cost> {
        Some(Cost {
            tier: self.tier.checked_add(rhs.tier)?,
            primary: self.primary.checked_add(rhs.primary)?,
            tie: self.tie.checked_add(rhs.tie)?,
        })
    }
}

impl Add for Cost {
    type Output = Cost;
    fn add(self, rhs: Cost) -> Cost {
        debug_assert!(self.tie.checked_add(rhs.tie).is_some(), "tie overflow");
        Cost {
            tier: self.tier + rhs.tier,
            primary: self.primary + rhs.primary,
            tie: self.tie.wrapping_add(rhs.tie),
        }
    }
}

impl AddAssign for Cost {
    fn add_assign(&mut self, rhs: Cost) {
        *self = *self + rhs;
    }
}

impl fmt::Debug for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tier == 0 {
            write!(f, "{}+t{}", self.primary, self.tie)
        } else {
            write!(f, "inf[{}]{}+t{}", self.tier, self.primary, self.tie)
        }
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tier == 0 {
            write!(f, "{}", self.primary)
        } else {
            write!(f, "inf")
        }
    }
}

/// splitmix64; used to derive deterministic tie components from dart ids.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let a = Cost::finite(5, 100);
        let b = Cost::finite(5, 101);
        let c = Cost::new(1, 0, 0);
        assert!(a < b);
        assert!(b < c);
        assert!(Cost::ZERO < a);
    }

    #[test]
    fn additive() {
        let a = Cost::finite(5, 7);
        let b = Cost::new(1, 2, 3);
        assert_eq!(a + b, Cost::new(1, 7, 10));
    }
}
