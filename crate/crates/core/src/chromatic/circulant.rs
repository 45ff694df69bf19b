//! Periodic colorings found directly as colorings of circulant graphs.
//!
//! A coloring of ℤ with period `p` is a coloring of `ℤ_p` in which `i` and
//! `i + d mod p` differ for every `d ∈ D`; it exists only if no `d` is a
//! multiple of `p`. Every such coloring is a cycle of the window automaton,
//! and small periods are often much quicker to find this way than by
//! walking the automaton.

use super::saturation::{color_graph_portfolio, Budget, SearchOutcome};
use crate::distance_set::DistanceSet;

fn circulant_graph(d: &DistanceSet, period: usize) -> Option<Vec<Vec<usize>>> {
    let shifts: Vec<usize> = d.elements().iter().map(|&x| x as usize % period).collect();
    if shifts.contains(&0) {
        return None;
    }
    Some(
        (0..period)
            .map(|v| {
                let mut adj: Vec<usize> = shifts
                    .iter()
                    .flat_map(|&s| [(v + s) % period, (v + period - s) % period])
                    .collect();
                adj.sort_unstable();
                adj.dedup();
                adj
            })
            .collect(),
    )
}

/// The first period in `2..=max_period` whose circulant graph is
/// `colors`-colorable within the per-period budget, with its coloring.
pub(crate) fn find_periodic(
    d: &DistanceSet,
    colors: u32,
    max_period: usize,
    budget: Budget,
) -> Option<Vec<u8>> {
    (2..=max_period).find_map(|p| {
        let graph = circulant_graph(d, p)?;
        match color_graph_portfolio(&graph, colors, budget) {
            SearchOutcome::Colored(word) => Some(word),
            _ => None,
        }
    })
}
