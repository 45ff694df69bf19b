//! Exact clique number of `G(D)`.
//!
//! Translating any clique so that its least vertex is 0 puts every other
//! vertex at a distance from 0, hence inside `D`. The search therefore runs
//! on the finite graph over `{0} ∪ D`, which has `|D| + 1` vertices.

use crate::distance_set::DistanceSet;
use crate::witness::CliqueWitness;

/// The finite candidate graph a maximum clique of `G(D)` can be moved into.
#[derive(Debug, Clone)]
pub struct CliqueProblem {
    distances: DistanceSet,
    candidates: Vec<i64>,
    adjacency: Vec<Vec<bool>>,
}

impl CliqueProblem {
    pub fn new(distances: &DistanceSet) -> Self {
        let candidates: Vec<i64> = std::iter::once(0)
            .chain(distances.elements().iter().map(|&d| i64::from(d)))
            .collect();
        let adjacency = candidates
            .iter()
            .map(|&u| {
                candidates
                    .iter()
                    .map(|&v| u != v && distances.adjacent(u, v))
                    .collect()
            })
            .collect();
        Self {
            distances: distances.clone(),
            candidates,
            adjacency,
        }
    }

    pub fn distances(&self) -> &DistanceSet {
        &self.distances
    }

    pub fn candidate_vertices(&self) -> &[i64] {
        &self.candidates
    }

    /// Lexicographically least maximum clique, as indices into the candidates.
    fn maximum(&self) -> Vec<usize> {
        let mut best = Vec::new();
        let all: Vec<usize> = (0..self.candidates.len()).collect();
        self.bron_kerbosch(&mut Vec::new(), all, Vec::new(), &mut best);
        best
    }

    fn bron_kerbosch(
        &self,
        clique: &mut Vec<usize>,
        candidates: Vec<usize>,
        excluded: Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if candidates.is_empty() {
            if excluded.is_empty() {
                let mut found = clique.clone();
                found.sort_unstable();
                if found.len() > best.len() || (found.len() == best.len() && found < *best) {
                    *best = found;
                }
            }
            return;
        }
        // A maximal clique extending `clique` cannot beat `best` if too few candidates remain.
        if clique.len() + candidates.len() < best.len() {
            return;
        }
        let adj = &self.adjacency;
        let pivot = candidates
            .iter()
            .chain(&excluded)
            .copied()
            .max_by_key(|&u| candidates.iter().filter(|&&v| adj[u][v]).count())
            .expect("candidates is nonempty");

        let mut candidates = candidates;
        let mut excluded = excluded;
        let branch: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&v| !adj[pivot][v])
            .collect();
        for v in branch {
            clique.push(v);
            self.bron_kerbosch(
                clique,
                candidates.iter().copied().filter(|&u| adj[v][u]).collect(),
                excluded.iter().copied().filter(|&u| adj[v][u]).collect(),
                best,
            );
            clique.pop();
            candidates.retain(|&u| u != v);
            excluded.push(v);
        }
    }
}

/// `ω(G(D))` with the lexicographically least maximum clique as witness.
///
/// ```
/// use distgraph::{clique::clique_number, DistanceSet};
///
/// let d = DistanceSet::normalize(&[1, 4, 5, 6, 7]).unwrap();
/// let (omega, witness) = clique_number(&d);
/// assert_eq!(omega, 4);
/// assert_eq!(witness.vertices(), &[0, 1, 5, 6]);
/// ```
pub fn clique_number(d: &DistanceSet) -> (usize, CliqueWitness) {
    let problem = CliqueProblem::new(d);
    let best = problem.maximum();
    let vertices = best.iter().map(|&i| problem.candidates[i]).collect();
    let witness = CliqueWitness::new(vertices).expect("candidates are sorted");
    (witness.len(), witness)
}

/// Whether `G(D)` contains a clique on `m` vertices.
pub fn has_clique_of_size(d: &DistanceSet, m: usize) -> bool {
    clique_number(d).0 >= m
}
