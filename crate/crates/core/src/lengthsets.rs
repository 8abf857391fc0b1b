//! Finite sets of factorization lengths and their derived statistics.
//!
//! A [`LengthSet`] is a non-empty finite set of non-negative integers.  The
//! only set allowed to contain 0 is `{0}` itself: an element factors with
//! zero atoms exactly when it is a unit, and a unit factors no other way.
//! Everything downstream (distance sets, elasticity, unions, almost
//! arithmetical progressions) is defined on this type.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LengthSetError {
    #[error("length set must be non-empty")]
    Empty,
    #[error("0 can only appear in the singleton set {{0}}")]
    ZeroMixed,
}

/// Sorted, duplicate-free set of factorization lengths.
// No Ord derive: by-value `Ord::max` would shadow the inherent `max`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LengthSet {
    values: Vec<u64>,
}

impl LengthSet {
    /// Builds a set from arbitrary values, sorting and deduplicating.
    pub fn new(values: impl IntoIterator<Item = u64>) -> Result<Self, LengthSetError> {
        let values: BTreeSet<u64> = values.into_iter().collect();
        if values.is_empty() {
            return Err(LengthSetError::Empty);
        }
        if values.contains(&0) && values.len() > 1 {
            return Err(LengthSetError::ZeroMixed);
        }
        Ok(Self {
            values: values.into_iter().collect(),
        })
    }

    /// `{0}`, the length set of a unit.
    pub fn unit() -> Self {
        Self { values: vec![0] }
    }

    pub fn singleton(value: u64) -> Self {
        Self {
            values: vec![value],
        }
    }

    /// `{start, start + diff, ..., start + diff * steps}`.
    ///
    /// With `diff == 0` the progression collapses to `{start}`.
    pub fn progression(start: u64, diff: u64, steps: u64) -> Self {
        if diff == 0 || steps == 0 {
            return Self::singleton(start);
        }
        debug_assert!(start > 0, "a progression through 0 is not a length set");
        Self {
            values: (0..=steps).map(|i| start + diff * i).collect(),
        }
    }

    // values is sorted and non-empty by construction.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn min(&self) -> u64 {
        self.values[0]
    }

    pub fn max(&self) -> u64 {
        *self.values.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, value: u64) -> bool {
        self.values.binary_search(&value).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.values.iter().copied()
    }

    /// Pointwise sum `{x + y | x in self, y in other}`.
    pub fn sumset(&self, other: &Self) -> Self {
        let mut out = BTreeSet::new();
        for &x in &self.values {
            for &y in &other.values {
                out.insert(x + y);
            }
        }
        Self {
            values: out.into_iter().collect(),
        }
    }

    /// `{d * x | x in self}` for a scale factor `d >= 1`.
    pub fn dilate(&self, d: u64) -> Self {
        assert!(d >= 1, "dilation factor must be positive");
        Self {
            values: self.values.iter().map(|&x| d * x).collect(),
        }
    }

    /// Distances between consecutive members; empty for singletons.
    pub fn delta(&self) -> BTreeSet<u64> {
        self.values
            .windows(2)
            .map(|pair| pair[1] - pair[0])
            .collect()
    }

    /// `max / min` over the positive members, as an exact rational.
    ///
    /// `{0}` has elasticity 1.
    pub fn elasticity(&self) -> Ratio<u64> {
        if self.values == [0] {
            return Ratio::from_integer(1);
        }
        Ratio::new(self.max(), self.min())
    }

    /// Minimal `M` making the set an almost arithmetical progression with
    /// difference `d`: every member is congruent to the minimum mod `d`, and
    /// the members inside `[min + M, max - M]` form a non-empty progression
    /// with difference exactly `d`.  `None` if the congruence fails or no
    /// `M <= max - min` works.
    pub fn aap_check(&self, d: u64) -> Option<AapWitness> {
        assert!(d >= 1, "progression difference must be positive");
        let min = self.min();
        let max = self.max();
        if self.values.iter().any(|&v| (v - min) % d != 0) {
            return None;
        }
        for m in 0..=(max - min) {
            // The window shrinks as M grows; once it empties it stays empty.
            let lo = min + m;
            if lo > max - m {
                break;
            }
            let hi = max - m;
            let window: Vec<u64> = self
                .values
                .iter()
                .copied()
                .filter(|&v| lo <= v && v <= hi)
                .collect();
            if window.is_empty() {
                break;
            }
            if window.windows(2).all(|pair| pair[1] - pair[0] == d) {
                return Some(AapWitness {
                    difference: d,
                    bound: m,
                });
            }
        }
        None
    }
}

impl fmt::Debug for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LengthSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Outcome of a successful [`LengthSet::aap_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AapWitness {
    pub difference: u64,
    /// Minimal trim making the middle window an exact progression.
    pub bound: u64,
}

/// Union of all sets in `family` that contain `k`, or `None` when no set
/// does.
pub fn union_containing(family: &[LengthSet], k: u64) -> Option<LengthSet> {
    let mut out = BTreeSet::new();
    let mut hit = false;
    for set in family {
        if set.contains(k) {
            hit = true;
            out.extend(set.iter());
        }
    }
    if !hit {
        return None;
    }
    // Only {0} contains 0, so the union inherits the zero rule.
    Some(LengthSet {
        values: out.into_iter().collect(),
    })
}
