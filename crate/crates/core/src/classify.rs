//! Closed-form results on `χ(D)` and `ω(G(D))` as pattern matchers.
//!
//! Every matcher searches parameter assignments drawn from the elements of
//! `D` exhaustively. They serve as fast paths in the survey and as
//! oracles for the exact engines.

use serde::{Deserialize, Serialize};

use crate::distance_set::DistanceSet;
use crate::error::{Error, Result};

/// Shapes of `D` for which `ω(G(D)) ≥ |D|`, reported in declaration order
/// when several match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum KmPattern {
    /// `|D| = 1`
    Singleton,
    /// `{x, y, x+y}`
    SumTriple,
    /// `{x, y, x+y, |y-x|}`
    SumDiffQuadruple,
    /// `{x, 2x, ..., nx, y}`
    ArithmeticPlusOne,
}

/// Four-element sets known to have `χ = 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Known4Family {
    /// `{1, 2, 3, 4n}`
    Onetwothree4n,
    /// `{x, y, x+y, |y-x|}` with `x, y` odd
    SumdiffOdd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum QuestionAStatus {
    /// `χ = |D| + 1` but `ω < |D|`.
    Counterexample,
    Consistent,
    /// `χ < |D| + 1`, so the question does not apply.
    NotMaximal,
}

impl QuestionAStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Counterexample => "counterexample",
            Self::Consistent => "consistent",
            Self::NotMaximal => "notMaximal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationReport {
    pub parity_chi2: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub zhu3_chi: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub known4_family: Option<Known4Family>,
    pub km_pattern: Option<KmPattern>,
    pub thm1_set: bool,
    #[serde(rename = "thm2K")]
    pub thm2_k: Option<u32>,
}

impl ClassificationReport {
    /// Short tags for the survey's `flags` field.
    pub fn flags(&self) -> Vec<String> {
        let mut flags = Vec::new();
        if self.parity_chi2 {
            flags.push("parity".to_string());
        }
        if let Some(chi) = self.zhu3_chi {
            flags.push(format!("zhu3:{chi}"));
        }
        if let Some(fam) = self.known4_family {
            flags.push(format!("known4:{}", tag(&fam)));
        }
        if let Some(p) = self.km_pattern {
            flags.push(format!("km:{}", tag(&p)));
        }
        if self.thm1_set {
            flags.push("thm1".to_string());
        }
        if let Some(k) = self.thm2_k {
            flags.push(format!("thm2:{k}"));
        }
        flags
    }
}

fn tag<T: Serialize>(value: &T) -> String {
    serde_json::to_value(value)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .expect("unit variants serialize as strings")
}

pub fn classify(d: &DistanceSet) -> ClassificationReport {
    ClassificationReport {
        parity_chi2: d.all_odd(),
        zhu3_chi: zhu3_chi(d).ok(),
        known4_family: known4_family(d).ok().flatten(),
        km_pattern: km_pattern(d),
        thm1_set: d.elements() == [1, 4, 5, 6, 7],
        thm2_k: thm2_k(d),
    }
}

/// All unordered pairs `x < y` of elements.
fn pairs(d: &DistanceSet) -> impl Iterator<Item = (u32, u32)> + '_ {
    let e = d.elements();
    (0..e.len()).flat_map(move |i| e[i + 1..].iter().map(move |&y| (e[i], y)))
}

fn same_set(d: &DistanceSet, mut candidate: Vec<u32>) -> bool {
    candidate.sort_unstable();
    candidate.dedup();
    candidate == d.elements()
}

fn is_sum_triple(d: &DistanceSet) -> bool {
    d.len() == 3 && pairs(d).any(|(x, y)| same_set(d, vec![x, y, x + y]))
}

fn sum_diff_pairs(d: &DistanceSet) -> impl Iterator<Item = (u32, u32)> + '_ {
    pairs(d).filter(move |&(x, y)| d.len() == 4 && same_set(d, vec![x, y, x + y, y - x]))
}

fn is_arithmetic_plus_one(d: &DistanceSet) -> bool {
    d.len() >= 2
        && d.elements().iter().any(|&y| {
            let rest: Vec<u32> = d.elements().iter().copied().filter(|&e| e != y).collect();
            let x = rest[0];
            rest.iter().zip(1..).all(|(&e, i)| e == i * x)
        })
}

/// The first matching shape among those with `ω(G(D)) ≥ |D|`.
pub fn km_pattern(d: &DistanceSet) -> Option<KmPattern> {
    if d.len() == 1 {
        Some(KmPattern::Singleton)
    } else if is_sum_triple(d) {
        Some(KmPattern::SumTriple)
    } else if sum_diff_pairs(d).next().is_some() {
        Some(KmPattern::SumDiffQuadruple)
    } else if is_arithmetic_plus_one(d) {
        Some(KmPattern::ArithmeticPlusOne)
    } else {
        None
    }
}

/// `χ(D)` for three-element sets from the known classification.
pub fn zhu3_chi(d: &DistanceSet) -> Result<u32> {
    if d.len() != 3 {
        return Err(Error::InvalidArity {
            expected: 3,
            found: d.len(),
        });
    }
    let [a, b, c] = [d.elements()[0], d.elements()[1], d.elements()[2]];
    let one_two_three_n = a == 1 && b == 2 && c % 3 == 0;
    let sum_not_mod3 = c == a + b && a % 3 != b % 3;
    Ok(if one_two_three_n || sum_not_mod3 {
        4
    } else if d.all_odd() {
        2
    } else {
        3
    })
}

/// Which known `χ = 5` family a four-element set belongs to, if any.
pub fn known4_family(d: &DistanceSet) -> Result<Option<Known4Family>> {
    if d.len() != 4 {
        return Err(Error::InvalidArity {
            expected: 4,
            found: d.len(),
        });
    }
    if sum_diff_pairs(d).any(|(x, y)| x % 2 == 1 && y % 2 == 1) {
        return Ok(Some(Known4Family::SumdiffOdd));
    }
    let e = d.elements();
    if e[..3] == [1, 2, 3] && e[3].is_multiple_of(4) {
        return Ok(Some(Known4Family::Onetwothree4n));
    }
    Ok(None)
}

/// `{1, 2, ..., 2k-1} ∪ {2k+1, 4k}`, which has `χ = |D| + 1` and `ω = |D| - 1`.
///
/// `k = 1` gives `{1, 3, 4}`, a sum triple with `ω = |D|`, so it is rejected.
pub fn thm2_family(k: u32) -> Result<DistanceSet> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "family index k = {k} must be at least 2"
        )));
    }
    let raw: Vec<i64> = (1..2 * k)
        .chain([2 * k + 1, 4 * k])
        .map(i64::from)
        .collect();
    DistanceSet::normalize(&raw)
}

/// The `k` for which `D` is [`thm2_family`]`(k)`.
pub fn thm2_k(d: &DistanceSet) -> Option<u32> {
    let n = d.len() as u32;
    if n < 5 || n.is_multiple_of(2) {
        return None;
    }
    let k = (n - 1) / 2;
    thm2_family(k).ok().filter(|f| f == d).map(|_| k)
}

/// Status of `D` with respect to "`χ = |D| + 1` implies `ω ≥ |D|`".
pub fn question_a_status(d: &DistanceSet, chi: u32, omega: usize) -> QuestionAStatus {
    let n = d.len();
    if (chi as usize) < n + 1 {
        QuestionAStatus::NotMaximal
    } else if omega < n {
        QuestionAStatus::Counterexample
    } else {
        QuestionAStatus::Consistent
    }
}
