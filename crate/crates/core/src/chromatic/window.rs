//! Window states: the colors of `max(D)` consecutive integers.
//!
//! A window is stored canonically, with colors renamed in order of first
//! appearance. Shorter "prefix" windows are the states passed through while
//! the first window is being filled, which gives the automaton a single root.

use std::hash::Hash;

use crate::distance_set::DistanceSet;

/// Legality rules for appending a color to a window.
#[derive(Debug, Clone)]
pub(crate) struct WindowRules {
    distances: Vec<usize>,
    len: usize,
    colors: u8,
}

impl WindowRules {
    pub fn new(d: &DistanceSet, colors: u8) -> Self {
        Self {
            distances: d.elements().iter().map(|&x| x as usize).collect(),
            len: d.max_distance() as usize,
            colors,
        }
    }

    /// Window length, `max(D)`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn colors(&self) -> u8 {
        self.colors
    }

    /// Whether color `x` may follow `w`; a full window loses its first cell
    /// afterwards, and only the distance `max(D)` reaches that cell.
    pub fn allows(&self, w: &[u8], x: u8) -> bool {
        let l = w.len();
        self.distances.iter().all(|&d| d > l || w[l - d] != x)
    }

    /// Calls `f(x, next)` for every legal extension of the canonical window
    /// `w`, with `next` canonical. Unused colors are interchangeable, so a
    /// single fresh color stands for all of them.
    pub fn for_each_successor(
        &self,
        w: &[u8],
        scratch: &mut Vec<u8>,
        mut f: impl FnMut(u8, &[u8]),
    ) {
        let used = w.iter().max().map_or(0, |&m| m + 1);
        let full = w.len() == self.len;
        for x in 0..self.colors.min(used + 1) {
            if !self.allows(w, x) {
                continue;
            }
            scratch.clear();
            scratch.extend_from_slice(if full { &w[1..] } else { w });
            scratch.push(x);
            if full {
                canonicalize(scratch);
            }
            f(x, scratch);
        }
    }

    /// Number of canonical internally-proper windows of full length.
    pub fn count_full_windows(&self) -> usize {
        let mut count = 0;
        let mut stack = vec![Vec::new()];
        let mut scratch = Vec::new();
        while let Some(w) = stack.pop() {
            if w.len() == self.len {
                count += 1;
                continue;
            }
            self.for_each_successor(&w, &mut scratch, |_, next| stack.push(next.to_vec()));
        }
        count
    }
}

/// Renames colors in place so they first appear as 0, 1, 2, ...
pub(crate) fn canonicalize(w: &mut [u8]) {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    for x in w.iter_mut() {
        let slot = &mut map[*x as usize];
        if *slot == u8::MAX {
            *slot = next;
            next += 1;
        }
        *x = *slot;
    }
}

/// Hashable encoding of a (possibly partial) window.
pub(crate) trait WindowKey: Hash + Eq + Clone {
    fn pack(w: &[u8], bits: u32) -> Self;
    fn unpack(&self, bits: u32, out: &mut Vec<u8>);
}

/// Cells hold `color + 1` in `bits` bits each; a zero cell ends the window.
impl WindowKey for u128 {
    fn pack(w: &[u8], bits: u32) -> Self {
        w.iter().enumerate().fold(0, |acc, (i, &x)| {
            acc | (u128::from(x) + 1) << (i as u32 * bits)
        })
    }

    fn unpack(&self, bits: u32, out: &mut Vec<u8>) {
        out.clear();
        let mask = (1u128 << bits) - 1;
        let mut rest = *self;
        while rest != 0 {
            out.push(((rest & mask) - 1) as u8);
            rest >>= bits;
        }
    }
}

impl WindowKey for Box<[u8]> {
    fn pack(w: &[u8], _bits: u32) -> Self {
        w.into()
    }

    fn unpack(&self, _bits: u32, out: &mut Vec<u8>) {
        out.clear();
        out.extend_from_slice(self);
    }
}

/// Bits per packed cell: enough for the values `0..=colors`.
pub(crate) fn cell_bits(colors: u8) -> u32 {
    u8::BITS - colors.leading_zeros()
}
