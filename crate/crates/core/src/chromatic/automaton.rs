//! Cycle search in the transition automaton over canonical windows.
//!
//! Vertices are canonical windows; `s -> t` when `t` is `s` shifted by one
//! with a legally colored new cell. A proper coloring of ℤ exists iff a
//! cycle exists: a cycle spells a periodic coloring, and a coloring of ℤ
//! passes through infinitely many windows, so some canonical window repeats.
//!
//! States are discovered lazily from the empty window, which reaches every
//! internally-proper window through its prefixes. Depth-first search with
//! white/grey/black marks finds a back edge; black states are dead and never
//! expanded twice.

use std::collections::{HashMap, VecDeque};
use std::time::Instant;

use super::window::{canonicalize, cell_bits, WindowKey, WindowRules};
use crate::error::{Error, Result};

const WHITE: u8 = 0;
const GREY: u8 = 1;
const BLACK: u8 = 2;

#[derive(Debug)]
pub(crate) enum Exploration {
    /// Canonical windows `q0 -> q1 -> ... -> q0`.
    Cycle {
        windows: Vec<Vec<u8>>,
        states: usize,
    },
    Empty {
        states: usize,
    },
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Limits {
    pub max_states: usize,
    pub deadline: Option<Instant>,
}

pub(crate) fn explore(rules: &WindowRules, limits: Limits) -> Result<Exploration> {
    let bits = cell_bits(rules.colors());
    if rules.len() as u32 * bits <= u128::BITS {
        Explorer::<u128>::new(rules, bits, limits).run()
    } else {
        Explorer::<Box<[u8]>>::new(rules, bits, limits).run()
    }
}

struct Frame {
    id: u32,
    succ: Vec<u32>,
    next: usize,
}

struct Explorer<'a, K> {
    rules: &'a WindowRules,
    bits: u32,
    limits: Limits,
    ids: HashMap<K, u32>,
    keys: Vec<K>,
    mark: Vec<u8>,
    stack_pos: Vec<u32>,
    window: Vec<u8>,
    scratch: Vec<u8>,
}

impl<'a, K: WindowKey> Explorer<'a, K> {
    fn new(rules: &'a WindowRules, bits: u32, limits: Limits) -> Self {
        Self {
            rules,
            bits,
            limits,
            ids: HashMap::new(),
            keys: Vec::new(),
            mark: Vec::new(),
            stack_pos: Vec::new(),
            window: Vec::new(),
            scratch: Vec::new(),
        }
    }

    fn intern(&mut self, w: &[u8]) -> u32 {
        let key = K::pack(w, self.bits);
        if let Some(&id) = self.ids.get(&key) {
            return id;
        }
        let id = self.keys.len() as u32;
        self.ids.insert(key.clone(), id);
        self.keys.push(key);
        self.mark.push(WHITE);
        self.stack_pos.push(u32::MAX);
        id
    }

    fn expand(&mut self, id: u32) -> Vec<u32> {
        self.keys[id as usize].unpack(self.bits, &mut self.window);
        let mut found = Vec::new();
        let mut scratch = std::mem::take(&mut self.scratch);
        let window = std::mem::take(&mut self.window);
        self.rules
            .for_each_successor(&window, &mut scratch, |_, next| found.push(next.to_vec()));
        self.window = window;
        self.scratch = scratch;
        let mut succ: Vec<u32> = found.iter().map(|w| self.intern(w)).collect();
        succ.dedup();
        succ
    }

    fn check_limits(&self) -> Result<()> {
        if self.keys.len() > self.limits.max_states {
            return Err(Error::Undecided(format!(
                "automaton exceeded {} states",
                self.limits.max_states
            )));
        }
        if self.limits.deadline.is_some_and(|t| Instant::now() >= t) {
            return Err(Error::Undecided(
                "time limit reached in automaton search".into(),
            ));
        }
        Ok(())
    }

    fn run(mut self) -> Result<Exploration> {
        let root = self.intern(&[]);
        self.mark[root as usize] = GREY;
        self.stack_pos[root as usize] = 0;
        let succ = self.expand(root);
        let mut stack = vec![Frame {
            id: root,
            succ,
            next: 0,
        }];
        let mut expansions = 0u64;

        while let Some(top) = stack.last_mut() {
            if top.next == top.succ.len() {
                self.mark[top.id as usize] = BLACK;
                stack.pop();
                continue;
            }
            let child = top.succ[top.next];
            top.next += 1;
            match self.mark[child as usize] {
                WHITE => {
                    expansions += 1;
                    if expansions.is_multiple_of(1024) {
                        self.check_limits()?;
                    }
                    self.mark[child as usize] = GREY;
                    self.stack_pos[child as usize] = stack.len() as u32;
                    let succ = self.expand(child);
                    stack.push(Frame {
                        id: child,
                        succ,
                        next: 0,
                    });
                }
                GREY => {
                    let cycle = self.shortest_cycle(&stack, child);
                    let windows = cycle
                        .into_iter()
                        .map(|id| {
                            let mut w = Vec::new();
                            self.keys[id as usize].unpack(self.bits, &mut w);
                            w
                        })
                        .collect();
                    return Ok(Exploration::Cycle {
                        windows,
                        states: self.keys.len(),
                    });
                }
                _ => {}
            }
        }
        self.check_limits()?;
        Ok(Exploration::Empty {
            states: self.keys.len(),
        })
    }

    /// Shortest cycle through `start` using only the grey states above it
    /// on the stack; the stack segment itself is one such cycle.
    fn shortest_cycle(&self, stack: &[Frame], start: u32) -> Vec<u32> {
        let base = self.stack_pos[start as usize] as usize;
        let on_segment = |id: u32| {
            self.mark[id as usize] == GREY && self.stack_pos[id as usize] as usize >= base
        };
        let mut prev: HashMap<u32, u32> = HashMap::new();
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let frame = &stack[self.stack_pos[u as usize] as usize];
            for &v in &frame.succ {
                if v == start {
                    let mut cycle = vec![u];
                    let mut at = u;
                    while at != start {
                        at = prev[&at];
                        cycle.push(at);
                    }
                    cycle.reverse();
                    return cycle;
                }
                if on_segment(v) && !prev.contains_key(&v) {
                    prev.insert(v, u);
                    queue.push_back(v);
                }
            }
        }
        unreachable!("the stack segment closes a cycle through {start}")
    }
}

/// Turns a cycle of canonical windows into actual colors of a periodic word.
///
/// Following the cycle once returns to a renaming of the first window, so the
/// walk continues until an actual window seen at a round boundary repeats.
pub(crate) fn lift_cycle(rules: &WindowRules, cycle: &[Vec<u8>]) -> Vec<u8> {
    let mut window = cycle[0].clone();
    let mut boundaries = vec![window.clone()];
    let mut word = Vec::new();
    let mut candidate = Vec::with_capacity(window.len());
    loop {
        for target in cycle.iter().cycle().skip(1).take(cycle.len()) {
            let y = (0..rules.colors())
                .find(|&y| {
                    if !rules.allows(&window, y) {
                        return false;
                    }
                    candidate.clear();
                    candidate.extend_from_slice(&window[1..]);
                    candidate.push(y);
                    canonicalize(&mut candidate);
                    candidate == *target
                })
                .expect("every canonical transition lifts to an actual color");
            word.push(y);
            window.remove(0);
            window.push(y);
        }
        if let Some(r) = boundaries.iter().position(|b| *b == window) {
            return word.split_off(r * cycle.len());
        }
        boundaries.push(window.clone());
    }
}
