//! Proper colorings of finite runs of consecutive integers.
//!
//! If no proper `c`-coloring of some `L` consecutive integers exists then
//! `G(D)` is not `c`-colorable, and `(c, L)` is a certificate anyone can
//! re-check by exhaustive search.

use super::saturation::{color_graph_portfolio, Budget, SearchOutcome};
use crate::distance_set::DistanceSet;

/// `G(D)` induced on `0..length`.
fn interval_graph(d: &DistanceSet, length: usize) -> Vec<Vec<usize>> {
    (0..length)
        .map(|v| {
            let below = d
                .elements()
                .iter()
                .filter_map(|&x| v.checked_sub(x as usize));
            let above = d
                .elements()
                .iter()
                .map(|&x| v + x as usize)
                .filter(|&u| u < length);
            below.chain(above).collect()
        })
        .collect()
}

pub(crate) fn search(d: &DistanceSet, colors: u32, length: usize, budget: Budget) -> SearchOutcome {
    // |D| + 1 colors always suffice
    let colors = colors.min(d.len() as u32 + 1);
    color_graph_portfolio(&interval_graph(d, length), colors, budget)
}

/// Whether some proper `colors`-coloring of `length` consecutive integers exists.
pub fn interval_feasible(d: &DistanceSet, colors: u32, length: usize) -> bool {
    matches!(
        search(d, colors, length, Budget::UNLIMITED),
        SearchOutcome::Colored(_)
    )
}

/// Least `L` with no proper coloring of `L` consecutive integers, searched
/// by doubling from `max(D)` up to `cap` and then bisecting. `None` if every
/// length up to `cap` is colorable or the budget runs out.
pub(crate) fn min_infeasible_length(
    d: &DistanceSet,
    colors: u32,
    cap: usize,
    budget: Budget,
) -> Option<usize> {
    let mut feasible = 0;
    let mut len = (d.max_distance() as usize).clamp(1, cap.max(1));
    let mut infeasible = loop {
        match search(d, colors, len, budget) {
            SearchOutcome::Colored(_) => {
                feasible = len;
                if len >= cap {
                    return None;
                }
                len = (2 * len).min(cap);
            }
            SearchOutcome::Uncolorable => break len,
            SearchOutcome::Exhausted => return None,
        }
    };
    while infeasible - feasible > 1 {
        let mid = feasible + (infeasible - feasible) / 2;
        match search(d, colors, mid, budget) {
            SearchOutcome::Colored(_) => feasible = mid,
            SearchOutcome::Uncolorable => infeasible = mid,
            SearchOutcome::Exhausted => break,
        }
    }
    Some(infeasible)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(raw: &[i64]) -> DistanceSet {
        DistanceSet::normalize(raw).unwrap()
    }

    /// Tries all `colors^length` words.
    fn exhaustive(d: &DistanceSet, colors: u32, length: usize) -> bool {
        let total = (colors as usize).pow(length as u32);
        (0..total).any(|mut code| {
            let mut word = Vec::with_capacity(length);
            for _ in 0..length {
                word.push(code % colors as usize);
                code /= colors as usize;
            }
            (0..length).all(|i| {
                d.elements()
                    .iter()
                    .all(|&dist| (dist as usize) > i || word[i] != word[i - dist as usize])
            })
        })
    }

    #[test]
    fn examples() {
        assert!(interval_feasible(&ds(&[1, 2]), 3, 10));
        assert!(!interval_feasible(&ds(&[1]), 1, 2));
        assert!(interval_feasible(&ds(&[1]), 1, 1));
        assert!(interval_feasible(&ds(&[1, 2]), 1, 0));
    }

    #[test]
    fn colorings_are_proper() {
        let d = ds(&[1, 4, 5, 6, 7]);
        let SearchOutcome::Colored(seq) = search(&d, 6, 200, Budget::UNLIMITED) else {
            panic!("six colors suffice");
        };
        assert_eq!(seq.len(), 200);
        for i in 0..seq.len() {
            assert!(seq[i] < 6);
            for &dist in d.elements() {
                let j = i + dist as usize;
                assert!(j >= seq.len() || seq[i] != seq[j]);
            }
        }
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        for raw in [&[1, 4][..], &[2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 5]] {
            let d = ds(raw);
            for c in 1..=3 {
                for len in 0..=8 {
                    assert_eq!(
                        interval_feasible(&d, c, len),
                        exhaustive(&d, c, len),
                        "{d} c={c} L={len}"
                    );
                }
            }
        }
    }

    #[test]
    fn minimal_lengths() {
        // frozen from an independent plain backtracking search
        let min = |raw: &[i64], c| min_infeasible_length(&ds(raw), c, 1000, Budget::UNLIMITED);
        assert_eq!(min(&[1, 4, 5, 6, 7], 5), Some(17));
        assert_eq!(min(&[1, 2, 3, 5, 8], 5), Some(13));
        assert_eq!(min(&[1, 2, 3, 4, 5, 7, 12], 7), Some(19));
        assert_eq!(min(&[1, 2], 2), Some(3));
        assert_eq!(min(&[1], 1), Some(2));
        assert_eq!(
            min_infeasible_length(&ds(&[1, 2]), 3, 100, Budget::UNLIMITED),
            None
        );
    }

    #[test]
    fn budget_exhaustion() {
        let tight = Budget {
            nodes: Some(5),
            deadline: None,
        };
        assert_eq!(
            search(&ds(&[1, 4, 5, 6, 7]), 5, 17, tight),
            SearchOutcome::Exhausted
        );
    }
}
