//! Distance sets and gcd normalization.
//!
//! `G(D)` for a set whose elements share a divisor `g` is `g` disjoint copies
//! of `G(D / g)`, so every set is stored divided by its gcd, with the divisor
//! kept as [`DistanceSet::scale`]. Chromatic and clique numbers are unaffected.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite set of positive distances, normalized to gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct DistanceSet {
    elements: Vec<u32>,
    scale: u32,
}

impl DistanceSet {
    /// Sorts, deduplicates and divides `raw` by its gcd.
    ///
    /// ```
    /// use distgraph::DistanceSet;
    ///
    /// let d = DistanceSet::normalize(&[2, 8, 10, 12, 14]).unwrap();
    /// assert_eq!(d.elements(), &[1, 4, 5, 6, 7]);
    /// assert_eq!(d.scale(), 2);
    /// ```
    pub fn normalize(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidDistanceSet("empty distance set".into()));
        }
        let mut elements = Vec::with_capacity(raw.len());
        for &d in raw {
            if d < 1 {
                return Err(Error::InvalidDistanceSet(format!(
                    "distance {d} is not a positive integer"
                )));
            }
            let d = u32::try_from(d)
                .map_err(|_| Error::InvalidDistanceSet(format!("distance {d} is too large")))?;
            elements.push(d);
        }
        elements.sort_unstable();
        elements.dedup();
        let g = elements.iter().fold(0, |acc, &d| gcd(acc, d));
        for d in &mut elements {
            *d /= g;
        }
        Ok(Self { elements, scale: g })
    }

    /// Normalizes `raw` and drops the recorded scale.
    pub fn from_elements(raw: &[u32]) -> Result<Self> {
        let raw: Vec<i64> = raw.iter().map(|&d| i64::from(d)).collect();
        Self::normalize(&raw).map(|d| Self { scale: 1, ..d })
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    /// The gcd divided out of the raw input; 1 if it was already normalized.
    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_distance(&self) -> u32 {
        *self.elements.last().expect("distance sets are nonempty")
    }

    pub fn min_distance(&self) -> u32 {
        self.elements[0]
    }

    pub fn contains(&self, d: u32) -> bool {
        self.elements.binary_search(&d).is_ok()
    }

    /// Whether `|u - v|` is a distance of the set.
    pub fn adjacent(&self, u: i64, v: i64) -> bool {
        u32::try_from(u.abs_diff(v)).is_ok_and(|d| self.contains(d))
    }

    pub fn all_odd(&self) -> bool {
        self.elements.iter().all(|d| d % 2 == 1)
    }

    /// The elements multiplied back by the recorded scale.
    pub fn raw(&self) -> Vec<u64> {
        self.elements
            .iter()
            .map(|&d| u64::from(d) * u64::from(self.scale))
            .collect()
    }
}

impl fmt::Display for DistanceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

impl TryFrom<Vec<i64>> for DistanceSet {
    type Error = Error;

    fn try_from(raw: Vec<i64>) -> Result<Self> {
        Self::normalize(&raw)
    }
}

impl From<DistanceSet> for Vec<u32> {
    fn from(d: DistanceSet) -> Self {
        d.elements
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Parses a comma-separated distance list such as `1,4,5,6,7`.
pub fn parse_distances(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>().map_err(|_| {
                Error::InvalidDistanceSet(format!("cannot parse {tok:?} as an integer"))
            })
        })
        .collect()
}
