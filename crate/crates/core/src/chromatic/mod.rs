//! Exact chromatic number of `G(D)` with two-sided certificates.
//!
//! The upper bound is always a periodic coloring, found either as a
//! coloring of a circulant graph or by reading off a cycle of the window
//! automaton. The lower bound for `χ = c` is one of:
//!
//! * parity: some distance is even, so `G(D)` has an odd cycle (`c = 3`);
//! * an infeasible interval: no proper `(c-1)`-coloring of `L` consecutive
//!   integers exists;
//! * an empty automaton: the `(c-1)`-color window automaton has no cycle;
//! * a clique on `c` vertices, when the caller supplies one.

mod automaton;
mod circulant;
mod interval;
mod saturation;
mod window;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::distance_set::DistanceSet;
use crate::error::{Error, Result};
use crate::witness::{
    verify_clique, verify_coloring, verify_infeasible_interval, CliqueWitness,
    PeriodicColoringWitness,
};

use automaton::{Exploration, Limits};
pub use interval::interval_feasible;
use saturation::Budget;
use window::WindowRules;

/// Exploration caps. Exceeding any of them makes a computation undecided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverCaps {
    /// Distinct automaton states per decision (default 4 000 000).
    pub max_states: usize,
    /// Longest interval tried by the lower-bound fast path (default `64 · max(D)`).
    pub max_interval: Option<usize>,
    /// Search nodes per interval or circulant run before falling back to
    /// the automaton (default 2 000 000 and a tenth of that, respectively).
    pub max_interval_nodes: u64,
    /// Longest period tried by the circulant upper-bound fast path
    /// (default `8 · max(D)`; below 2 disables it).
    pub max_period: Option<usize>,
    /// Wall-clock limit for a whole `chromatic_number` call (default none).
    pub max_time: Option<Duration>,
}

impl Default for SolverCaps {
    fn default() -> Self {
        Self {
            max_states: 4_000_000,
            max_interval: None,
            max_interval_nodes: 2_000_000,
            max_period: None,
            max_time: None,
        }
    }
}

impl SolverCaps {
    fn interval_cap(&self, d: &DistanceSet) -> usize {
        self.max_interval.unwrap_or(64 * d.max_distance() as usize)
    }

    fn period_cap(&self, d: &DistanceSet) -> usize {
        self.max_period.unwrap_or(8 * d.max_distance() as usize)
    }
}

/// Outcome of the automaton decision for a fixed number of colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub colorable: bool,
    pub witness: Option<PeriodicColoringWitness>,
    /// Automaton states discovered before the answer was known.
    pub states: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum LowerKind {
    Parity,
    InfeasibleInterval,
    AutomatonEmpty,
    Clique,
}

impl LowerKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Parity => "parity",
            Self::InfeasibleInterval => "infeasibleInterval",
            Self::AutomatonEmpty => "automatonEmpty",
            Self::Clique => "clique",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LowerCertificate {
    Parity,
    InfeasibleInterval { colors: u32, length: usize },
    AutomatonEmpty { colors: u32, states: usize },
    Clique(CliqueWitness),
}

impl LowerCertificate {
    pub fn kind(&self) -> LowerKind {
        match self {
            Self::Parity => LowerKind::Parity,
            Self::InfeasibleInterval { .. } => LowerKind::InfeasibleInterval,
            Self::AutomatonEmpty { .. } => LowerKind::AutomatonEmpty,
            Self::Clique(_) => LowerKind::Clique,
        }
    }
}

/// `χ(D)` with a coloring for `χ` colors and a proof that `χ - 1` fail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticCertificatePair {
    pub chi: u32,
    pub upper: PeriodicColoringWitness,
    pub lower: LowerCertificate,
}

impl ChromaticCertificatePair {
    pub fn lower_kind(&self) -> LowerKind {
        self.lower.kind()
    }

    /// Re-checks both sides. Interval, parity and clique certificates are
    /// checked by the independent verifiers; an empty automaton is re-run.
    pub fn verify(&self, d: &DistanceSet) -> bool {
        let upper = self.upper.color_count() == self.chi && verify_coloring(d, &self.upper);
        let lower = match &self.lower {
            LowerCertificate::Parity => self.chi == 3 && !d.all_odd(),
            LowerCertificate::InfeasibleInterval { colors, length } => {
                *colors + 1 == self.chi && verify_infeasible_interval(d, *colors, *length)
            }
            LowerCertificate::AutomatonEmpty { colors, .. } => {
                *colors + 1 == self.chi
                    && decide_colorable(d, *colors).is_ok_and(|dec| !dec.colorable)
            }
            LowerCertificate::Clique(w) => w.len() == self.chi as usize && verify_clique(d, w),
        };
        upper && lower
    }
}

/// Decides whether `G(D)` has a proper coloring with `colors` colors by
/// searching the window automaton for a cycle, under default caps.
///
/// ```
/// use distgraph::{chromatic::decide_colorable, DistanceSet};
///
/// let d = DistanceSet::normalize(&[1, 4, 5, 6, 7]).unwrap();
/// assert!(!decide_colorable(&d, 5).unwrap().colorable);
/// assert!(decide_colorable(&d, 6).unwrap().colorable);
/// ```
pub fn decide_colorable(d: &DistanceSet, colors: u32) -> Result<Decision> {
    decide_colorable_with(d, colors, &SolverCaps::default())
}

pub fn decide_colorable_with(d: &DistanceSet, colors: u32, caps: &SolverCaps) -> Result<Decision> {
    let deadline = caps.max_time.map(|t| Instant::now() + t);
    decide(d, colors, caps.max_states, deadline)
}

fn decide(
    d: &DistanceSet,
    colors: u32,
    max_states: usize,
    deadline: Option<Instant>,
) -> Result<Decision> {
    if colors == 0 {
        return Ok(Decision {
            colorable: false,
            witness: None,
            states: 0,
        });
    }
    if d.len() >= usize::from(u8::MAX) {
        return Err(Error::InvalidParameter(format!(
            "distance sets with {} elements are not supported",
            d.len()
        )));
    }
    // |D| + 1 colors always suffice; more never change the answer.
    let effective = colors.min(d.len() as u32 + 1) as u8;
    let rules = WindowRules::new(d, effective);
    match automaton::explore(
        &rules,
        Limits {
            max_states,
            deadline,
        },
    )? {
        Exploration::Cycle { windows, states } => {
            let word = automaton::lift_cycle(&rules, &windows);
            let word = word.into_iter().map(u32::from).collect();
            let witness = PeriodicColoringWitness::new(word, colors)?.canonical();
            debug_assert!(verify_coloring(d, &witness));
            Ok(Decision {
                colorable: true,
                witness: Some(witness),
                states,
            })
        }
        Exploration::Empty { states } => Ok(Decision {
            colorable: false,
            witness: None,
            states,
        }),
    }
}

/// Number of canonical internally-proper windows for `colors` colors.
pub fn window_state_count(d: &DistanceSet, colors: u32) -> usize {
    let colors = colors.min(d.len() as u32 + 1).min(u32::from(u8::MAX)) as u8;
    WindowRules::new(d, colors).count_full_windows()
}

/// Least `L ≤ cap` such that `L` consecutive integers have no proper
/// `colors`-coloring, if the search finds one without exhausting its budget.
pub fn min_infeasible_interval(d: &DistanceSet, colors: u32, cap: usize) -> Option<usize> {
    interval::min_infeasible_length(d, colors, cap, Budget::UNLIMITED)
}

enum Certified {
    Colorable(PeriodicColoringWitness),
    Infeasible(LowerCertificate),
}

/// Interval lower bound first, then circulant colorings, then the automaton.
fn decide_certified(
    d: &DistanceSet,
    colors: u32,
    caps: &SolverCaps,
    deadline: Option<Instant>,
) -> Result<Certified> {
    let budget = Budget {
        nodes: Some(caps.max_interval_nodes),
        deadline,
    };
    if let Some(length) = interval::min_infeasible_length(d, colors, caps.interval_cap(d), budget) {
        return Ok(Certified::Infeasible(
            LowerCertificate::InfeasibleInterval { colors, length },
        ));
    }
    let budget = Budget {
        nodes: Some(caps.max_interval_nodes / 10),
        deadline,
    };
    let effective = colors.min(d.len() as u32 + 1);
    if let Some(word) = circulant::find_periodic(d, effective, caps.period_cap(d), budget) {
        let word = word.into_iter().map(u32::from).collect();
        let witness = PeriodicColoringWitness::new(word, colors)?.canonical();
        if verify_coloring(d, &witness) {
            return Ok(Certified::Colorable(witness));
        }
    }
    if deadline.is_some_and(|t| Instant::now() >= t) {
        return Err(Error::Undecided(format!(
            "time limit reached while deciding {colors} colors for {d}"
        )));
    }
    let decision = decide(d, colors, caps.max_states, deadline)?;
    Ok(match decision.witness {
        Some(w) => Certified::Colorable(w),
        None => Certified::Infeasible(LowerCertificate::AutomatonEmpty {
            colors,
            states: decision.states,
        }),
    })
}

/// `χ(D)` under default caps.
///
/// ```
/// use distgraph::{chromatic::{chromatic_number, LowerKind}, DistanceSet};
///
/// let d = DistanceSet::normalize(&[1, 2, 4]).unwrap();
/// let cert = chromatic_number(&d).unwrap();
/// assert_eq!(cert.chi, 3);
/// assert_eq!(cert.lower_kind(), LowerKind::Parity);
/// ```
pub fn chromatic_number(d: &DistanceSet) -> Result<ChromaticCertificatePair> {
    chromatic_number_with(d, &SolverCaps::default(), None)
}

/// `χ(D)` with explicit caps and an optional known clique, which raises the
/// first number of colors tried and can serve as the lower certificate.
pub fn chromatic_number_with(
    d: &DistanceSet,
    caps: &SolverCaps,
    clique: Option<&CliqueWitness>,
) -> Result<ChromaticCertificatePair> {
    let deadline = caps.max_time.map(|t| Instant::now() + t);
    let max_chi = d.len() as u32 + 1;

    if d.all_odd() {
        let upper = PeriodicColoringWitness::new(vec![0, 1], 2)?;
        // one color fails on the first edge
        let length = d.min_distance() as usize + 1;
        return Ok(ChromaticCertificatePair {
            chi: 2,
            upper,
            lower: LowerCertificate::InfeasibleInterval { colors: 1, length },
        });
    }

    let clique = clique.filter(|w| verify_clique(d, w) && w.len() > 3);
    let start = clique.map_or(3, |w| w.len() as u32);
    let mut last_failure = None;
    for colors in start..=max_chi {
        match decide_certified(d, colors, caps, deadline)? {
            Certified::Colorable(upper) => {
                let lower = match (last_failure, clique) {
                    (Some(cert), _) => cert,
                    (None, Some(w)) => LowerCertificate::Clique(w.clone()),
                    (None, None) => LowerCertificate::Parity,
                };
                return Ok(ChromaticCertificatePair {
                    chi: colors,
                    upper,
                    lower,
                });
            }
            Certified::Infeasible(cert) => last_failure = Some(cert),
        }
    }
    Err(Error::Undecided(format!(
        "no coloring of {d} with up to {max_chi} colors was found"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::clique_number;

    fn ds(raw: &[i64]) -> DistanceSet {
        DistanceSet::normalize(raw).unwrap()
    }

    #[test]
    fn decide_examples() {
        let thm1 = ds(&[1, 4, 5, 6, 7]);
        assert!(!decide_colorable(&thm1, 5).unwrap().colorable);
        let yes = decide_colorable(&thm1, 6).unwrap();
        assert!(yes.colorable);
        assert!(verify_coloring(&thm1, yes.witness.as_ref().unwrap()));

        let edge = decide_colorable(&ds(&[1]), 2).unwrap();
        assert_eq!(edge.witness.unwrap().word(), &[0, 1]);

        assert!(!decide_colorable(&ds(&[1, 2]), 2).unwrap().colorable);
        assert!(!decide_colorable(&ds(&[1]), 0).unwrap().colorable);
    }

    #[test]
    fn chromatic_examples() {
        for (raw, chi) in [
            (&[1, 4, 5, 6, 7][..], 6),
            (&[1, 3, 5], 2),
            (&[1, 2, 3], 4),
            (&[1, 2, 4], 3),
            (&[1, 2, 3, 5, 8], 6),
            (&[1], 2),
        ] {
            let d = ds(raw);
            let cert = chromatic_number(&d).unwrap();
            assert_eq!(cert.chi, chi, "{d}");
            assert!(cert.verify(&d), "{d}");
        }
    }

    #[test]
    fn lower_kinds() {
        assert_eq!(
            chromatic_number(&ds(&[1, 2, 4])).unwrap().lower_kind(),
            LowerKind::Parity
        );
        let thm1 = chromatic_number(&ds(&[1, 4, 5, 6, 7])).unwrap();
        assert_eq!(
            thm1.lower,
            LowerCertificate::InfeasibleInterval {
                colors: 5,
                length: 17
            }
        );
        let odd = chromatic_number(&ds(&[3, 5])).unwrap();
        assert_eq!(
            odd.lower,
            LowerCertificate::InfeasibleInterval {
                colors: 1,
                length: 4
            }
        );
    }

    #[test]
    fn automaton_certificate_when_intervals_are_disabled() {
        let caps = SolverCaps {
            max_interval: Some(1),
            max_period: Some(0),
            ..SolverCaps::default()
        };
        let cert = chromatic_number_with(&ds(&[1, 4, 5, 6, 7]), &caps, None).unwrap();
        assert_eq!(cert.chi, 6);
        assert_eq!(cert.lower_kind(), LowerKind::AutomatonEmpty);
        assert!(cert.verify(&ds(&[1, 4, 5, 6, 7])));
    }

    #[test]
    fn clique_start() {
        let d = ds(&[1, 2, 3]);
        let (_, w) = clique_number(&d);
        let cert = chromatic_number_with(&d, &SolverCaps::default(), Some(&w)).unwrap();
        assert_eq!(cert.chi, 4);
        assert_eq!(cert.lower_kind(), LowerKind::Clique);
        assert!(cert.verify(&d));
    }

    #[test]
    fn complete_prefixes() {
        for n in 1..=6i64 {
            let raw: Vec<i64> = (1..=n).collect();
            assert_eq!(chromatic_number(&ds(&raw)).unwrap().chi, n as u32 + 1);
        }
    }

    #[test]
    fn caps_make_it_undecided() {
        let caps = SolverCaps {
            max_states: 5,
            max_interval: Some(1),
            max_period: Some(0),
            ..SolverCaps::default()
        };
        assert!(matches!(
            chromatic_number_with(&ds(&[1, 4, 5, 6, 7]), &caps, None),
            Err(Error::Undecided(_))
        ));
    }

    #[test]
    fn more_colors_than_needed() {
        let dec = decide_colorable(&ds(&[1, 2]), 7).unwrap();
        let w = dec.witness.unwrap();
        assert_eq!(w.color_count(), 7);
        assert!(verify_coloring(&ds(&[1, 2]), &w));
    }
}
