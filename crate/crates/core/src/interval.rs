//! Integer intervals `{lo, ..., hi}` and the consecutiveness test used for
//! vertex palettes.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-empty integer interval `{lo, ..., hi}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntervalSet {
    lo: u32,
    hi: u32,
}

impl IntervalSet {
    /// Interval with bounds `lo..=hi`; `None` when `lo > hi`.
    pub fn new(lo: u32, hi: u32) -> Option<Self> {
        (lo <= hi).then_some(IntervalSet { lo, hi })
    }

    /// The interval starting at `start` with `len` elements. `len` must be
    /// positive.
    pub fn starting_at(start: u32, len: u32) -> Option<Self> {
        if len == 0 {
            return None;
        }
        IntervalSet::new(start, start.checked_add(len - 1)?)
    }

    pub fn lo(&self) -> u32 {
        self.lo
    }

    pub fn hi(&self) -> u32 {
        self.hi
    }

    pub fn len(&self) -> u32 {
        self.hi - self.lo + 1
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u32) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Same length, start moved up by `offset`.
    pub fn shift(&self, offset: u32) -> Self {
        IntervalSet {
            lo: self.lo + offset,
            hi: self.hi + offset,
        }
    }

    /// Union of two intervals when the result is itself an interval.
    pub fn union(&self, other: &Self) -> Option<Self> {
        let (a, b) = if self.lo <= other.lo {
            (self, other)
        } else {
            (other, self)
        };
        (b.lo <= a.hi.saturating_add(1)).then(|| IntervalSet {
            lo: a.lo,
            hi: a.hi.max(b.hi),
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }

    /// The interval spanned by `set`, if `set` has no gaps.
    pub fn from_set(set: &BTreeSet<u32>) -> Option<Self> {
        match is_interval_set(set) {
            Ok(true) => IntervalSet::new(*set.first()?, *set.last()?),
            _ => None,
        }
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.lo, self.hi)
    }
}

/// True when the sorted set has no gaps (`max - min + 1 == size`).
pub fn is_interval_set(set: &BTreeSet<u32>) -> Result<bool> {
    match (set.first(), set.last()) {
        (Some(&lo), Some(&hi)) => Ok((hi - lo) as usize + 1 == set.len()),
        _ => Err(Error::EmptySet),
    }
}
